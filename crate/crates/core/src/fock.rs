//! The level-one Fock space of quantum affine `sl_e` and the LLT algorithm.
//!
//! Conventions: a node `(r, c)` has residue `(c - r) mod e`, and
//! `f_i|λ⟩ = Σ_A v^{N(A)} |λ + A⟩` over addable `i`-nodes `A`, with
//! `N(A)` = addable `i`-nodes strictly below `A` minus removable `i`-nodes
//! strictly below `A`. Canonical basis elements `G(μ)` are indexed by
//! `e`-restricted `μ`, and `d_{λμ}(1) = [S_λ : D_μ]`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{check_e, Error, Result};
use crate::kgroup::KClass;
use crate::partition::{dominance_leq, e_core_quotient, enumerate_partitions, Cell, Partition};

/// A Laurent polynomial in `v` with integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c·v^k`.
    pub fn monomial(k: i64, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(k, &BigInt::from(c));
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, &c);
        }
        p
    }

    fn add_term(&mut self, k: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn terms(&self) -> &BTreeMap<i64, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, k: i64) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `v ↦ v^{-1}`.
    pub fn bar(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, c)| (-k, c.clone())))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (&k, c) in &other.terms {
            p.add_term(k, c);
        }
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (&k, c) in &other.terms {
            p.add_term(k, &-c);
        }
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut p = Self::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &other.terms {
                p.add_term(a + b, &(x * y));
            }
        }
        p
    }

    /// Exact quotient, or `None` when `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        let (lo, hi) = (other.min_degree()?, other.max_degree()?);
        let lead = &other.terms[&hi];
        let mut rem = self.clone();
        let mut q = Self::zero();
        while let Some(top) = rem.max_degree() {
            if top - hi < rem.min_degree()? - lo {
                return None;
            }
            let c = &rem.terms[&top];
            if !(c % lead).is_zero() {
                return None;
            }
            let t = Self::from_terms([(top - hi, c / lead)]);
            rem = rem.sub(&t.mul(other));
            q = q.add(&t);
        }
        Some(q)
    }

    /// Value at `v = 1`.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// The balanced quantum integer `[m] = v^{1-m} + v^{3-m} + … + v^{m-1}`.
    pub fn quantum_integer(m: usize) -> Self {
        let m = m as i64;
        Self::from_terms((0..m).map(|j| (2 * j - (m - 1), BigInt::one())))
    }

    pub fn quantum_factorial(m: usize) -> Self {
        (1..=m).fold(Self::one(), |acc, j| acc.mul(&Self::quantum_integer(j)))
    }

    /// Gaussian binomial `[m choose k]` in balanced form.
    pub fn quantum_binomial(m: usize, k: usize) -> Self {
        let num = Self::quantum_factorial(m);
        let den = Self::quantum_factorial(k).mul(&Self::quantum_factorial(m - k));
        num.div_exact(&den).expect("Gaussian binomials are Laurent polynomials")
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&k, c) in &self.terms {
            let neg = c.is_negative();
            if !first {
                f.write_str(if neg { " + -" } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => f.write_str("v")?,
                (_, true) => write!(f, "v^{k}")?,
                (1, false) => write!(f, "{a}v")?,
                (_, false) => write!(f, "{a}v^{k}")?,
            }
        }
        Ok(())
    }
}

/// A finite combination of partitions of one size with Laurent coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FockVector {
    terms: BTreeMap<Partition, LaurentPoly>,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn empty_partition() -> Self {
        Self::basis(Partition::empty())
    }

    pub fn basis(lambda: Partition) -> Self {
        let mut x = Self::zero();
        x.terms.insert(lambda, LaurentPoly::one());
        x
    }

    pub fn terms(&self) -> &BTreeMap<Partition, LaurentPoly> {
        &self.terms
    }

    pub fn coefficient(&self, lambda: &Partition) -> LaurentPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: &LaurentPoly) {
        let entry = self.terms.entry(lambda.clone()).or_default();
        *entry = entry.add(c);
        if entry.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn sub_scaled(&mut self, c: &LaurentPoly, other: &FockVector) {
        for (lambda, d) in &other.terms {
            let t = c.mul(d);
            let entry = self.terms.entry(lambda.clone()).or_default();
            *entry = entry.sub(&t);
            if entry.is_zero() {
                self.terms.remove(lambda);
            }
        }
    }

    fn scale(&self, c: &LaurentPoly) -> Self {
        let mut x = Self::zero();
        for (lambda, d) in &self.terms {
            x.add_term(lambda.clone(), &c.mul(d));
        }
        x
    }

    /// Size of the supporting partitions, or `None` for the zero vector.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(Partition::size)
    }
}

/// `f_i|λ⟩`.
fn f_on_basis(i: usize, e: usize, lambda: &Partition) -> Vec<(Partition, i64)> {
    let addable: Vec<Cell> = lambda.addable_cells().into_iter().filter(|c| c.residue(e) == i).collect();
    let removable: Vec<Cell> = lambda.removable_cells().into_iter().filter(|c| c.residue(e) == i).collect();
    addable
        .iter()
        .map(|a| {
            let below_add = addable.iter().filter(|b| b.row > a.row).count() as i64;
            let below_rem = removable.iter().filter(|b| b.row > a.row).count() as i64;
            (lambda.add_cell(*a).expect("addable cell"), below_add - below_rem)
        })
        .collect()
}

/// `f_i x`.
pub fn f(i: usize, e: usize, x: &FockVector) -> FockVector {
    let mut out = FockVector::zero();
    for (lambda, c) in &x.terms {
        for (mu, k) in f_on_basis(i, e, lambda) {
            out.add_term(mu, &c.mul(&LaurentPoly::monomial(k, 1)));
        }
    }
    out
}

/// `f_i^{(m)} x = f_i^m x / [m]!`, with the division checked to be exact.
pub fn f_divided(i: usize, m: usize, e: usize, x: &FockVector) -> Result<FockVector> {
    check_e(e)?;
    if i >= e || m == 0 {
        return Err(Error::InvalidParameter(format!("f_{i}^({m}) at e = {e}")));
    }
    let mut y = x.clone();
    for _ in 0..m {
        y = f(i, e, &y);
    }
    let fact = LaurentPoly::quantum_factorial(m);
    let mut out = FockVector::zero();
    for (lambda, c) in &y.terms {
        let q = c
            .div_exact(&fact)
            .ok_or_else(|| Error::Convention(format!("[{m}]! does not divide the coefficient of ({lambda})")))?;
        out.add_term(lambda.clone(), &q);
    }
    Ok(out)
}

/// Ladder index of a 1-based node for restricted labels,
/// `ℓ(r, c) = c + (e - 1)(r - 1)`. This is the conjugate of James's ladder
/// for `e`-regular labels; the two agree when `e = 2`.
pub fn ladder(cell: Cell, e: usize) -> usize {
    cell.col + (e - 1) * (cell.row - 1)
}

/// Nodes of `μ` grouped by ladder, as `(residue, count)` in increasing ladder
/// order. Every ladder must meet `μ` in its lowest nodes.
pub fn ladder_sequence(mu: &Partition, e: usize) -> Result<Vec<(usize, usize)>> {
    check_e(e)?;
    if !mu.is_e_restricted(e)? {
        return Err(Error::NotRestricted(format!("({mu}) is not {e}-restricted")));
    }
    let mut by_ladder: BTreeMap<usize, Vec<Cell>> = BTreeMap::new();
    for c in mu.cells() {
        by_ladder.entry(ladder(c, e)).or_default().push(c);
    }
    let mut out = Vec::new();
    for (l, cells) in by_ladder {
        let residue = cells[0].residue(e);
        let lowest = (l - 1) / (e - 1) + 1;
        let mut rows: Vec<usize> = cells.iter().map(|c| c.row).collect();
        rows.sort_unstable_by(|a, b| b.cmp(a));
        if rows.iter().enumerate().any(|(k, &r)| r + k != lowest) || cells.iter().any(|c| c.residue(e) != residue) {
            return Err(Error::Convention(format!("ladder {l} of ({mu}) is not bottom-justified")));
        }
        out.push((residue, cells.len()));
    }
    Ok(out)
}

/// `A(μ)`: the ladder product applied to the empty partition.
pub fn ladder_vector(mu: &Partition, e: usize) -> Result<FockVector> {
    let mut x = FockVector::empty_partition();
    for (i, m) in ladder_sequence(mu, e)? {
        x = f_divided(i, m, e, &x)?;
    }
    Ok(x)
}

/// The bar-invariant `m(v) = c_0 + Σ_{k>0} c_{-k}(v^k + v^{-k})`.
fn bar_invariant_part(c: &LaurentPoly) -> LaurentPoly {
    let mut m = LaurentPoly::zero();
    for (&k, a) in c.terms() {
        if k == 0 {
            m.add_term(0, a);
        } else if k < 0 {
            m.add_term(k, a);
            m.add_term(-k, a);
        }
    }
    m
}

/// Decomposition matrix `d_{λμ}(v)` in the fixed total order of partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionMatrix {
    pub n: usize,
    pub e: usize,
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    pub entries: Vec<Vec<LaurentPoly>>,
}

impl DecompositionMatrix {
    pub fn entry(&self, lambda: &Partition, mu: &Partition) -> Option<&LaurentPoly> {
        let r = self.rows.iter().position(|x| x == lambda)?;
        let c = self.cols.iter().position(|x| x == mu)?;
        Some(&self.entries[r][c])
    }

    /// Column of `G(μ)` as a Fock vector.
    pub fn column(&self, c: usize) -> FockVector {
        let mut x = FockVector::zero();
        for (r, lambda) in self.rows.iter().enumerate() {
            x.add_term(lambda.clone(), &self.entries[r][c]);
        }
        x
    }

    /// Checks unitriangularity, positivity and block diagonality.
    pub fn check_invariants(&self) -> Result<()> {
        for (c, mu) in self.cols.iter().enumerate() {
            let mu_core = e_core_quotient(mu, self.e)?.core;
            for (r, lambda) in self.rows.iter().enumerate() {
                let d = &self.entries[r][c];
                if lambda == mu {
                    if !d.is_one() {
                        return Err(Error::Convention(format!("d_({mu}),({mu}) = {d}")));
                    }
                    continue;
                }
                if d.is_zero() {
                    continue;
                }
                if !dominance_leq(mu, lambda)? {
                    return Err(Error::Convention(format!("d_({lambda}),({mu}) ≠ 0 but ({mu}) ⋬ ({lambda})")));
                }
                if d.min_degree() < Some(1) || d.terms().values().any(Signed::is_negative) {
                    return Err(Error::Convention(format!("d_({lambda}),({mu}) = {d} is not in vN[v]")));
                }
                if e_core_quotient(lambda, self.e)?.core != mu_core {
                    return Err(Error::Convention(format!("d_({lambda}),({mu}) crosses blocks")));
                }
            }
        }
        Ok(())
    }
}

/// The LLT algorithm: canonical basis columns for every `e`-restricted `μ ⊢ n`.
pub fn llt_canonical_basis(n: usize, e: usize) -> Result<DecompositionMatrix> {
    check_e(e)?;
    let rows = enumerate_partitions(n);
    let mut cols = Vec::new();
    for p in &rows {
        if p.is_e_restricted(e)? {
            cols.push(p.clone());
        }
    }
    // rows are in decreasing lexicographic order, which refines dominance
    let mut done: BTreeMap<Partition, FockVector> = BTreeMap::new();
    for mu in &cols {
        let mut g = ladder_vector(mu, e)?;
        if !g.coefficient(mu).is_one() {
            return Err(Error::Convention(format!("A({mu}) has coefficient {} at ({mu})", g.coefficient(mu))));
        }
        let mut steps = 0;
        loop {
            // the dominance-minimal offending label is the lexicographically smallest
            let bad = g
                .terms()
                .iter()
                .filter(|(lambda, c)| *lambda != mu && c.min_degree().is_some_and(|k| k <= 0))
                .map(|(lambda, c)| (lambda.clone(), c.clone()))
                .next();
            let Some((lambda, c)) = bad else { break };
            let Some(gl) = done.get(&lambda) else {
                return Err(Error::Convention(format!("correction needs G({lambda}), which is not available")));
            };
            g.sub_scaled(&bar_invariant_part(&c), gl);
            steps += 1;
            if steps > 10_000 {
                return Err(Error::Convention(format!("LLT correction for ({mu}) does not terminate")));
            }
        }
        done.insert(mu.clone(), g);
    }
    let entries = rows.iter().map(|lambda| cols.iter().map(|mu| done[mu].coefficient(lambda)).collect()).collect();
    Ok(DecompositionMatrix { n, e, rows, cols, entries })
}

/// `d_{λμ}(1)`.
pub fn evaluate_at_one(d: &DecompositionMatrix) -> Vec<Vec<i64>> {
    d.entries
        .iter()
        .map(|row| row.iter().map(|p| p.at_one().to_i64().expect("small decomposition number")).collect())
        .collect()
}

/// Rewrites a class in the Specht basis of `K(H_q(S_n))` in the simple basis,
/// `[S_λ] = Σ_μ d_{λμ}(1)[D_μ]`.
pub fn specht_to_simple(d: &DecompositionMatrix, x: &KClass) -> Result<BTreeMap<Partition, i64>> {
    let at_one = evaluate_at_one(d);
    let mut out = BTreeMap::new();
    for (labels, c) in x.terms() {
        let [lambda] = labels.as_slice() else {
            return Err(Error::InvalidParameter(String::from("class is not over the full symmetric group")));
        };
        let r = d
            .rows
            .iter()
            .position(|p| p == lambda)
            .ok_or_else(|| Error::SizeMismatch { left: lambda.size(), right: d.n })?;
        for (k, mu) in d.cols.iter().enumerate() {
            if at_one[r][k] != 0 {
                *out.entry(mu.clone()).or_insert(0) += c * at_one[r][k];
            }
        }
    }
    out.retain(|_, v| *v != 0);
    Ok(out)
}

/// `f_i^{(a)} f_i^{(b)} x = [a+b choose b] f_i^{(a+b)} x`.
pub fn check_divided_power_identity(i: usize, a: usize, b: usize, e: usize, x: &FockVector) -> Result<bool> {
    let lhs = f_divided(i, a, e, &f_divided(i, b, e, x)?)?;
    let rhs = f_divided(i, a + b, e, x)?.scale(&LaurentPoly::quantum_binomial(a + b, b));
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn f_operator_examples() {
        let x = f_divided(0, 1, 2, &FockVector::empty_partition()).unwrap();
        assert_eq!(x, FockVector::basis(p("1")));
        let y = f_divided(1, 1, 2, &x).unwrap();
        assert_eq!(y.coefficient(&p("2")), LaurentPoly::monomial(1, 1));
        assert_eq!(y.coefficient(&p("1,1")), LaurentPoly::one());
        assert!(f_divided(0, 2, 2, &FockVector::empty_partition()).unwrap().is_zero());
    }

    #[test]
    fn ladders() {
        assert_eq!(ladder_sequence(&p("1,1"), 2).unwrap(), alloc::vec![(0, 1), (1, 1)]);
        assert_eq!(ladder_sequence(&p("2,1,1"), 2).unwrap(), alloc::vec![(0, 1), (1, 2), (0, 1)]);
        assert_eq!(ladder_sequence(&p("1"), 5).unwrap(), alloc::vec![(0, 1)]);
        assert!(ladder_sequence(&p("2"), 2).is_err());
    }

    #[test]
    fn llt_n2_e2() {
        let d = llt_canonical_basis(2, 2).unwrap();
        assert_eq!(d.cols, alloc::vec![p("1,1")]);
        assert_eq!(d.entries[0][0], LaurentPoly::monomial(1, 1));
        assert_eq!(d.entries[1][0], LaurentPoly::one());
        assert_eq!(evaluate_at_one(&d), alloc::vec![alloc::vec![1], alloc::vec![1]]);
    }

    #[test]
    fn semisimple_identity() {
        let d = llt_canonical_basis(4, 5).unwrap();
        let one = evaluate_at_one(&d);
        for (r, row) in one.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                assert_eq!(x, i64::from(r == c));
            }
        }
    }

    #[test]
    fn invariants_small() {
        for e in 2..=4 {
            for n in 0..=7 {
                llt_canonical_basis(n, e).unwrap().check_invariants().unwrap();
            }
        }
    }

    #[test]
    fn quantum_numbers() {
        let f3 = LaurentPoly::quantum_factorial(3);
        assert_eq!(f3.at_one(), BigInt::from(6));
        assert_eq!(f3, f3.bar());
        assert_eq!(LaurentPoly::quantum_binomial(4, 2).at_one(), BigInt::from(6));
        let x = LaurentPoly::from_terms([(0, BigInt::from(1)), (1, BigInt::from(1))]);
        assert!(x.div_exact(&LaurentPoly::quantum_integer(2)).is_none());
    }

    #[test]
    fn specht_to_simple_examples() {
        let d = llt_canonical_basis(3, 2).unwrap();
        let mut x = KClass::zero(crate::kgroup::YoungSubgroup::full(3));
        x.add_term(alloc::vec![p("3")], 1).unwrap();
        x.add_term(alloc::vec![p("1,1,1")], 1).unwrap();
        let s = specht_to_simple(&d, &x).unwrap();
        assert_eq!(s.into_iter().collect::<Vec<_>>(), alloc::vec![(p("1,1,1"), 2)]);
    }
}
