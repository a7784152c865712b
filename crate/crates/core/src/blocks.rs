//! Blocks, cuspidal supports and the predicted vertices of H_q(S_n) and
//! O_c(S_n). Everything here is label combinatorics; the Hecke engine checks
//! these predictions against actual modules.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{check_e, Error, Result};
use crate::partition::{e_core_quotient, enumerate_partitions, wilcox_decompose, Partition};

/// The block `B_{ρ,w}` of partitions of `n = |ρ| + e·w` with e-core `ρ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockId {
    pub core: Partition,
    pub weight: usize,
    pub n: usize,
    pub e: usize,
}

impl BlockId {
    pub fn new(core: Partition, weight: usize, e: usize) -> Result<Self> {
        check_e(e)?;
        if e_core_quotient(&core, e)?.weight != 0 {
            return Err(Error::NotCore(alloc::format!("{core} (e = {e})")));
        }
        let n = core.size() + e * weight;
        Ok(BlockId { core, weight, n, e })
    }
}

impl fmt::Display for BlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B[({}),{}]", self.core, self.weight)
    }
}

/// A Young subgroup up to conjugacy: the nontrivial factor sizes, sorted
/// descending. `S_1` factors are omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParabolicType {
    parts: Vec<usize>,
}

impl ParabolicType {
    /// Drops parts below 2 and sorts.
    pub fn new(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut parts: Vec<usize> = parts.into_iter().filter(|&p| p >= 2).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        ParabolicType { parts }
    }

    pub fn trivial() -> Self {
        ParabolicType { parts: Vec::new() }
    }

    /// `S_e^{×k}`.
    pub fn e_power(e: usize, k: usize) -> Self {
        ParabolicType::new(vec![e; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of points moved, `Σ parts`.
    pub fn support(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Coxeter rank `Σ (m_i - 1)`.
    pub fn rank(&self) -> usize {
        self.parts.iter().map(|p| p - 1).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.parts.is_empty()
    }

    /// A composition of `n` representing this type: the parts, then 1s.
    pub fn composition(&self, n: usize) -> Result<Vec<usize>> {
        if self.support() > n {
            return Err(Error::SizeMismatch { left: self.support(), right: n });
        }
        let mut c = self.parts.clone();
        c.extend(core::iter::repeat_n(1, n - self.support()));
        Ok(c)
    }

    /// Order of the subgroup.
    pub fn order(&self) -> u128 {
        self.parts.iter().map(|&p| (1..=p as u128).product::<u128>()).product()
    }
}

impl fmt::Display for ParabolicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("1");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "S{p}")?;
        }
        Ok(())
    }
}

/// All parabolic types of `S_n`, listed from `S_n` itself down to the trivial
/// group.
pub fn parabolic_types(n: usize) -> Vec<ParabolicType> {
    let mut out: Vec<ParabolicType> =
        enumerate_partitions(n).iter().map(|p| ParabolicType::new(p.parts().iter().copied())).collect();
    out.dedup();
    out
}

/// Cuspidal support `S_e^{×k}` of `L_λ` together with its cuspidal depth.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CuspidalSupport {
    pub k: usize,
    pub depth: usize,
}

impl CuspidalSupport {
    pub fn parabolic(&self, e: usize) -> ParabolicType {
        ParabolicType::e_power(e, self.k)
    }
}

pub fn block_of(lambda: &Partition, e: usize) -> Result<BlockId> {
    let d = e_core_quotient(lambda, e)?;
    Ok(BlockId { core: d.core, weight: d.weight, n: lambda.size(), e })
}

/// Every partition of `n` with core `ρ`, in decreasing lexicographic order.
pub fn enumerate_block(b: &BlockId) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for lambda in enumerate_partitions(b.n) {
        if e_core_quotient(&lambda, b.e)?.core == b.core {
            out.push(lambda);
        }
    }
    Ok(out)
}

/// All blocks of partitions of `n`, ordered by the first label they contain.
pub fn blocks(n: usize, e: usize) -> Result<Vec<BlockId>> {
    check_e(e)?;
    let mut out: Vec<BlockId> = Vec::new();
    for lambda in enumerate_partitions(n) {
        let b = block_of(&lambda, e)?;
        if !out.contains(&b) {
            out.push(b);
        }
    }
    Ok(out)
}

/// `k = |σ|` from `λ = eσ + ν`; depth `(n - 1) - k(e - 1)`.
pub fn cuspidal_support(lambda: &Partition, e: usize) -> Result<CuspidalSupport> {
    let w = wilcox_decompose(lambda, e)?;
    let k = w.sigma.size();
    let n = lambda.size();
    let depth = n.saturating_sub(1) - k * (e - 1);
    Ok(CuspidalSupport { k, depth })
}

/// `{eσ + ρ : σ ⊢ w}`, the labels of minimal cuspidal depth in the block.
pub fn minimal_depth_labels(b: &BlockId) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for sigma in enumerate_partitions(b.weight) {
        let lambda = sigma.scale(b.e).add(&b.core);
        if block_of(&lambda, b.e)? != *b {
            return Err(Error::Convention(alloc::format!(
                "minimal-depth label {lambda} left block {b}"
            )));
        }
        out.push(lambda);
    }
    Ok(out)
}

/// `S_e^{×w}` for a block of weight `w`.
pub fn predicted_vertex_of_block(b: &BlockId) -> ParabolicType {
    ParabolicType::e_power(b.e, b.weight)
}

/// `{S_e^{×k} : 0 ≤ k ≤ ⌊n/e⌋}`, smallest first.
pub fn predicted_vertex_set(n: usize, e: usize) -> Result<Vec<ParabolicType>> {
    check_e(e)?;
    Ok((0..=n / e).map(|k| ParabolicType::e_power(e, k)).collect())
}

/// Label-level image of `L_λ` under KZ: `D_λ` for e-restricted `λ`, else zero.
pub fn kz_shadow(lambda: &Partition, e: usize) -> Result<Option<Partition>> {
    Ok(if lambda.is_e_restricted(e)? { Some(lambda.clone()) } else { None })
}

/// Whether a Young subgroup of type `inner` is conjugate into one of type
/// `outer` inside `S_n`: the parts of `inner` must be packed into the parts of
/// `outer`, each bin holding parts whose sum does not exceed it.
pub fn parabolic_contains(outer: &ParabolicType, inner: &ParabolicType, n: usize) -> Result<bool> {
    for t in [outer, inner] {
        if t.support() > n {
            return Err(Error::InvalidParameter(String::from("parabolic type exceeds n")));
        }
    }
    // parts of size >= 2 never fit in the padding S_1 bins
    let mut bins = outer.parts.clone();
    Ok(pack(&inner.parts, &mut bins))
}

fn pack(items: &[usize], bins: &mut [usize]) -> bool {
    let Some((&first, rest)) = items.split_first() else {
        return true;
    };
    for i in 0..bins.len() {
        if bins[i] >= first && !bins[..i].contains(&bins[i]) {
            bins[i] -= first;
            let ok = pack(rest, bins);
            bins[i] += first;
            if ok {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn t(parts: &[usize]) -> ParabolicType {
        ParabolicType::new(parts.iter().copied())
    }

    #[test]
    fn block_examples() {
        assert_eq!(block_of(&p("3"), 2).unwrap(), BlockId::new(p("1"), 1, 2).unwrap());
        assert_eq!(block_of(&p("2,1"), 3).unwrap(), BlockId::new(p(""), 1, 3).unwrap());
        assert_eq!(block_of(&p("2,1"), 2).unwrap(), BlockId::new(p("2,1"), 0, 2).unwrap());
        assert_eq!(block_of(&p("4"), 4).unwrap(), BlockId::new(p(""), 1, 4).unwrap());
        assert!(BlockId::new(p("2"), 0, 2).is_err());
    }

    #[test]
    fn enumerate_block_examples() {
        let b = BlockId::new(p("1"), 1, 2).unwrap();
        assert_eq!(enumerate_block(&b).unwrap(), vec![p("3"), p("1,1,1")]);
        let b = BlockId::new(p(""), 2, 2).unwrap();
        assert_eq!(enumerate_block(&b).unwrap().len(), 5);
        let b = BlockId::new(p(""), 1, 3).unwrap();
        assert_eq!(enumerate_block(&b).unwrap(), vec![p("3"), p("2,1"), p("1,1,1")]);
    }

    #[test]
    fn cuspidal_examples() {
        assert_eq!(cuspidal_support(&p("4"), 4).unwrap().k, 1);
        assert_eq!(cuspidal_support(&p("2,1,1"), 3).unwrap().k, 0);
        assert_eq!(cuspidal_support(&p("5,3"), 2).unwrap(), CuspidalSupport { k: 3, depth: 4 });
    }

    #[test]
    fn minimal_depth_examples() {
        let b = BlockId::new(p("1"), 1, 2).unwrap();
        assert_eq!(minimal_depth_labels(&b).unwrap(), vec![p("3")]);
        let b = BlockId::new(p(""), 2, 2).unwrap();
        assert_eq!(minimal_depth_labels(&b).unwrap(), vec![p("4"), p("2,2")]);
        let b = BlockId::new(p("2,1"), 0, 2).unwrap();
        assert_eq!(minimal_depth_labels(&b).unwrap(), vec![p("2,1")]);
    }

    #[test]
    fn predicted_vertices() {
        let b = BlockId::new(p("2,1"), 0, 2).unwrap();
        assert!(predicted_vertex_of_block(&b).is_trivial());
        assert_eq!(predicted_vertex_of_block(&BlockId::new(p(""), 1, 2).unwrap()), t(&[2]));
        assert_eq!(predicted_vertex_of_block(&BlockId::new(p(""), 2, 2).unwrap()), t(&[2, 2]));
        assert_eq!(predicted_vertex_set(5, 2).unwrap(), vec![t(&[]), t(&[2]), t(&[2, 2])]);
        assert_eq!(predicted_vertex_set(3, 4).unwrap(), vec![t(&[])]);
        assert_eq!(predicted_vertex_set(6, 3).unwrap(), vec![t(&[]), t(&[3]), t(&[3, 3])]);
    }

    #[test]
    fn kz_examples() {
        assert_eq!(kz_shadow(&p("1,1"), 2).unwrap(), Some(p("1,1")));
        assert_eq!(kz_shadow(&p("2"), 2).unwrap(), None);
        assert_eq!(kz_shadow(&p(""), 3).unwrap(), Some(p("")));
    }

    #[test]
    fn containment_examples() {
        assert!(parabolic_contains(&t(&[2]), &t(&[]), 2).unwrap());
        assert!(parabolic_contains(&t(&[4]), &t(&[2, 2]), 4).unwrap());
        assert!(!parabolic_contains(&t(&[3]), &t(&[2, 2]), 4).unwrap());
        assert!(parabolic_contains(&t(&[3, 3]), &t(&[2, 2]), 6).unwrap());
        assert!(!parabolic_contains(&t(&[2, 2]), &t(&[3]), 4).unwrap());
        assert!(parabolic_contains(&t(&[5]), &t(&[3]), 4).is_err());
    }

    #[test]
    fn type_listing() {
        let ts = parabolic_types(4);
        assert_eq!(ts, vec![t(&[4]), t(&[3]), t(&[2, 2]), t(&[2]), t(&[])]);
        assert_eq!(t(&[3, 2]).rank(), 3);
        assert_eq!(t(&[2]).composition(4).unwrap(), vec![2, 1, 1]);
    }
}
