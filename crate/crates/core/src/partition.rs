//! Partition combinatorics: Young diagrams, residues, the abacus, e-cores
//! and e-quotients, and the decomposition `λ = eσ + ν` with `ν` e-restricted.
//!
//! Cells use 1-based `(row, column)` coordinates in English notation.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{check_e, Error, Result};

/// An integer partition, stored without trailing zeros.
///
/// The derived `Ord` is lexicographic on the parts. Within a fixed size the
/// lexicographic order refines dominance, so sorting descending lists the
/// dominance-maximal partitions first.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box of a Young diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Content `j - i`.
    pub fn content(&self) -> isize {
        self.col as isize - self.row as isize
    }

    /// Residue `(j - i) mod e`.
    pub fn residue(&self, e: usize) -> usize {
        self.content().rem_euclid(e as isize) as usize
    }
}

impl Partition {
    /// Builds a partition from weakly decreasing parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(alloc::format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from any list of parts by sorting them.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && self.part(c.row - 1) >= c.col
    }

    /// Cells in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Cells that can be added keeping a partition, top to bottom.
    pub fn addable_cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            let here = self.part(i);
            if i == 0 || self.part(i - 1) > here {
                out.push(Cell::new(i + 1, here + 1));
            }
        }
        out
    }

    /// Cells that can be removed keeping a partition, top to bottom.
    pub fn removable_cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            if self.part(i) > self.part(i + 1) {
                out.push(Cell::new(i + 1, self.part(i)));
            }
        }
        out
    }

    pub fn add_cell(&self, c: Cell) -> Result<Partition> {
        let mut parts = self.parts.clone();
        if c.row == parts.len() + 1 && c.col == 1 {
            parts.push(1);
        } else if c.row >= 1 && c.row <= parts.len() && parts[c.row - 1] + 1 == c.col {
            parts[c.row - 1] += 1;
        } else {
            return Err(Error::InvalidPartition(alloc::format!("cannot add {c:?}")));
        }
        Partition::new(parts)
    }

    /// Hook length of a cell inside the diagram.
    pub fn hook_length(&self, c: Cell) -> usize {
        let arm = self.part(c.row - 1) - c.col;
        let leg = self.parts.iter().skip(c.row).take_while(|&&p| p >= c.col).count();
        arm + leg + 1
    }

    /// Successive differences `λ_i - λ_{i+1}` all below `e` (including the last part).
    pub fn is_e_restricted(&self, e: usize) -> Result<bool> {
        check_e(e)?;
        Ok((0..self.len()).all(|i| self.part(i) - self.part(i + 1) < e))
    }

    /// No part repeated `e` or more times.
    pub fn is_e_regular(&self, e: usize) -> Result<bool> {
        check_e(e)?;
        Ok(self.parts.windows(e).all(|w| w[0] != w[e - 1]) || self.len() < e)
    }

    /// Dominance `self ⊴ other`; partitions of different sizes are rejected.
    pub fn dominated_by(&self, other: &Partition) -> Result<bool> {
        dominance_leq(self, other)
    }

    /// Multiplies every part by `k`.
    pub fn scale(&self, k: usize) -> Partition {
        if k == 0 {
            return Partition::empty();
        }
        Partition { parts: self.parts.iter().map(|p| p * k).collect() }
    }

    /// Componentwise sum, zero-padded.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        Partition { parts: (0..len).map(|i| self.part(i) + other.part(i)).collect() }
    }

    pub fn syt_count(&self) -> BigUint {
        syt_count(self)
    }

    /// Beta-set with `k` beads (`k >= len`).
    pub fn beta_set(&self, k: usize) -> Result<BetaSet> {
        BetaSet::from_partition(self, k)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"4,1"`; the empty string (or `"∅"`) is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(String::from(s)))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

pub fn is_e_restricted(lambda: &Partition, e: usize) -> Result<bool> {
    lambda.is_e_restricted(e)
}

/// `mu ⊴ lambda` in dominance order.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.size() != lambda.size() {
        return Err(Error::SizeMismatch { left: mu.size(), right: lambda.size() });
    }
    let (mut a, mut b) = (0usize, 0usize);
    for i in 0..mu.len().max(lambda.len()) {
        a += mu.part(i);
        b += lambda.part(i);
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of standard tableaux, `n! / Π hooks`.
pub fn syt_count(lambda: &Partition) -> BigUint {
    let mut num = BigUint::one();
    for k in 2..=lambda.size() {
        num *= BigUint::from(k);
    }
    let mut den = BigUint::one();
    for c in lambda.cells() {
        den *= BigUint::from(lambda.hook_length(c));
    }
    num / den
}

/// All partitions of `n`, in decreasing lexicographic order: `(n)` first and
/// `(1^n)` last. This total order refines dominance.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// Bead positions of an abacus, strictly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BetaSet {
    positions: Vec<usize>,
}

impl BetaSet {
    /// `β_i = λ_i + k - i` for `i = 1..k`.
    pub fn from_partition(lambda: &Partition, k: usize) -> Result<Self> {
        if k < lambda.len() {
            return Err(Error::InvalidParameter(alloc::format!(
                "{k} beads cannot hold a partition with {} parts",
                lambda.len()
            )));
        }
        let positions = (0..k).map(|i| lambda.part(i) + k - 1 - i).collect();
        Ok(BetaSet { positions })
    }

    /// Builds from arbitrary distinct positions.
    pub fn from_positions(mut positions: Vec<usize>) -> Result<Self> {
        positions.sort_unstable_by(|a, b| b.cmp(a));
        if positions.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter(String::from("repeated bead position")));
        }
        Ok(BetaSet { positions })
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn bead_count(&self) -> usize {
        self.positions.len()
    }

    /// Adds a bead at position 0, shifting the others up by one.
    pub fn shifted(&self) -> BetaSet {
        let mut positions: Vec<usize> = self.positions.iter().map(|p| p + 1).collect();
        positions.push(0);
        BetaSet { positions }
    }

    pub fn to_partition(&self) -> Partition {
        let k = self.positions.len();
        let parts = self.positions.iter().enumerate().map(|(i, &b)| b - (k - 1 - i)).collect();
        Partition::new(parts).expect("bead positions decrease strictly")
    }
}

/// e-core, e-weight and e-quotient of a partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ECoreData {
    pub core: Partition,
    pub weight: usize,
    pub quotient: Vec<Partition>,
}

/// Computes core, weight and quotient on an abacus with `e` runners.
///
/// The bead count is `max(len, e)` rounded up to a multiple of `e`, and
/// runner `r` holds the positions congruent to `r` mod `e`. The quotient
/// component for runner `r` is read from that runner's bead levels; with the
/// bead count a multiple of `e` this is the usual first-column convention.
pub fn e_core_quotient(lambda: &Partition, e: usize) -> Result<ECoreData> {
    check_e(e)?;
    let k = lambda.len().max(e).div_ceil(e) * e;
    let beta = BetaSet::from_partition(lambda, k)?;
    let mut levels: Vec<Vec<usize>> = vec![Vec::new(); e];
    for &b in beta.positions() {
        levels[b % e].push(b / e);
    }
    let mut core_positions = Vec::with_capacity(k);
    let mut quotient = Vec::with_capacity(e);
    let mut weight = 0;
    for (r, lv) in levels.iter().enumerate() {
        // levels are decreasing; slide every bead to the top of its runner
        let c = lv.len();
        let parts: Vec<usize> = lv.iter().enumerate().map(|(j, &l)| l - (c - 1 - j)).collect();
        let q = Partition::new(parts)?;
        weight += q.size();
        quotient.push(q);
        core_positions.extend((0..c).map(|l| r + e * l));
    }
    let core = BetaSet::from_positions(core_positions)?.to_partition();
    Ok(ECoreData { core, weight, quotient })
}

pub fn is_e_core(lambda: &Partition, e: usize) -> Result<bool> {
    Ok(e_core_quotient(lambda, e)?.weight == 0)
}

/// `λ = e·σ + ν` with `ν` e-restricted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WilcoxDecomposition {
    pub sigma: Partition,
    pub nu: Partition,
}

impl WilcoxDecomposition {
    pub fn recompose(&self, e: usize) -> Partition {
        self.sigma.scale(e).add(&self.nu)
    }
}

/// Splits each difference `λ_i - λ_{i+1}` into its quotient and remainder mod `e`.
pub fn wilcox_decompose(lambda: &Partition, e: usize) -> Result<WilcoxDecomposition> {
    check_e(e)?;
    let len = lambda.len();
    let mut sigma = vec![0; len];
    let mut nu = vec![0; len];
    let (mut s, mut r) = (0, 0);
    for i in (0..len).rev() {
        let d = lambda.part(i) - lambda.part(i + 1);
        s += d / e;
        r += d % e;
        sigma[i] = s;
        nu[i] = r;
    }
    Ok(WilcoxDecomposition { sigma: Partition::new(sigma)?, nu: Partition::new(nu)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(Partition::row(5).conjugate(), Partition::column(5));
        assert_eq!(p("4,1").conjugate(), p("2,1,1,1"));
    }

    #[test]
    fn restricted_examples() {
        assert!(p("1,1,1").is_e_restricted(3).unwrap());
        assert!(!p("3,3").is_e_restricted(3).unwrap());
        assert!(Partition::empty().is_e_restricted(4).unwrap());
        assert!(p("2").is_e_restricted(1).is_err());
    }

    #[test]
    fn core_examples() {
        let d = e_core_quotient(&p("4,1"), 2).unwrap();
        assert_eq!((d.core, d.weight), (p("2,1"), 1));
        let d = e_core_quotient(&p("2,1"), 3).unwrap();
        assert_eq!((d.core, d.weight), (Partition::empty(), 1));
        let d = e_core_quotient(&Partition::row(5), 5).unwrap();
        assert_eq!((d.core, d.weight), (Partition::empty(), 1));
        assert_eq!(d.quotient.iter().map(Partition::size).sum::<usize>(), 1);
    }

    #[test]
    fn wilcox_examples() {
        let w = wilcox_decompose(&p("5,3"), 2).unwrap();
        assert_eq!((w.sigma.clone(), w.nu.clone()), (p("2,1"), p("1,1")));
        assert_eq!(w.recompose(2), p("5,3"));
        let w = wilcox_decompose(&p("6"), 3).unwrap();
        assert_eq!((w.sigma, w.nu), (p("2"), Partition::empty()));
        let w = wilcox_decompose(&p("2,1,1"), 3).unwrap();
        assert_eq!((w.sigma, w.nu), (Partition::empty(), p("2,1,1")));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p("2,2"), &p("3,1")).unwrap());
        assert!(!dominance_leq(&p("3,1"), &p("2,2")).unwrap());
        assert!(dominance_leq(&p("3,1"), &p("3,1")).unwrap());
        assert!(dominance_leq(&p("3"), &p("3,1")).is_err());
    }

    #[test]
    fn syt_examples() {
        assert_eq!(syt_count(&Partition::row(7)), BigUint::from(1u32));
        assert_eq!(syt_count(&p("2,1")), BigUint::from(2u32));
        assert_eq!(syt_count(&p("2,2")), BigUint::from(2u32));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(4).len(), 5);
        assert_eq!(enumerate_partitions(10).len(), 42);
        assert_eq!(enumerate_partitions(4)[0], p("4"));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("4,1").to_string(), "4,1");
        assert_eq!(p("").to_string(), "");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn beta_set_shift_is_consistent() {
        let b = p("3,1").beta_set(3).unwrap();
        assert_eq!(b.positions(), &[5, 2, 0]);
        assert_eq!(b.shifted().to_partition(), p("3,1"));
    }

    #[test]
    fn addable_and_removable() {
        let l = p("2,1");
        assert_eq!(l.addable_cells(), vec![Cell::new(1, 3), Cell::new(2, 2), Cell::new(3, 1)]);
        assert_eq!(l.removable_cells(), vec![Cell::new(1, 2), Cell::new(2, 1)]);
    }
}
