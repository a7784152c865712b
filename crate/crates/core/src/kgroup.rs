//! Grothendieck-group bookkeeping for Young subgroups of `S_n`: classes are
//! integer combinations of label tuples, induction and restriction go through
//! Littlewood–Richardson coefficients, and double cosets `S_ν \ S_n / S_μ` are
//! contingency tables.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::blocks::ParabolicType;
use crate::error::{check_e, Error, Result};
use crate::partition::{enumerate_partitions, is_e_core, syt_count, Partition};

/// An ordered composition of `n`; the order of the parts matters.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YoungSubgroup {
    parts: Vec<usize>,
}

impl YoungSubgroup {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidParameter(String::from("composition parts must be positive")));
        }
        Ok(YoungSubgroup { parts })
    }

    pub fn full(n: usize) -> Self {
        YoungSubgroup { parts: if n == 0 { Vec::new() } else { vec![n] } }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn parabolic_type(&self) -> ParabolicType {
        ParabolicType::new(self.parts.iter().copied())
    }

    /// `|S_μ| = Π μ_i!`.
    pub fn order(&self) -> u128 {
        self.parts.iter().map(|&p| factorial(p)).product()
    }
}

/// All compositions of `n`, in lexicographic order.
pub fn compositions(n: usize) -> Vec<YoungSubgroup> {
    fn rec(rem: usize, cur: &mut Vec<usize>, out: &mut Vec<YoungSubgroup>) {
        if rem == 0 {
            out.push(YoungSubgroup { parts: cur.clone() });
            return;
        }
        for p in 1..=rem {
            cur.push(p);
            rec(rem - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Integer combination of label tuples over an ordered composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KClass {
    ambient: YoungSubgroup,
    terms: BTreeMap<Vec<Partition>, i64>,
}

impl KClass {
    pub fn zero(ambient: YoungSubgroup) -> Self {
        KClass { ambient, terms: BTreeMap::new() }
    }

    /// The class of a single tuple `(λ_1, …, λ_s)`.
    pub fn basis(ambient: YoungSubgroup, labels: Vec<Partition>) -> Result<Self> {
        let mut x = KClass::zero(ambient);
        x.add_term(labels, 1)?;
        Ok(x)
    }

    /// Every basis class `[S_{λ_1} ⊠ … ⊠ S_{λ_s}]` over `ambient`.
    pub fn all_basis(ambient: &YoungSubgroup) -> Vec<KClass> {
        let mut tuples: Vec<Vec<Partition>> = vec![Vec::new()];
        for &m in &ambient.parts {
            let options = enumerate_partitions(m);
            tuples = tuples
                .into_iter()
                .flat_map(|t| {
                    options.iter().map(move |l| {
                        let mut t = t.clone();
                        t.push(l.clone());
                        t
                    })
                })
                .collect();
        }
        tuples
            .into_iter()
            .map(|labels| {
                let mut x = KClass::zero(ambient.clone());
                x.add_unchecked(labels, 1);
                x
            })
            .collect()
    }

    pub fn ambient(&self) -> &YoungSubgroup {
        &self.ambient
    }

    pub fn add_term(&mut self, labels: Vec<Partition>, coeff: i64) -> Result<()> {
        let ok = labels.len() == self.ambient.parts.len()
            && labels.iter().zip(&self.ambient.parts).all(|(l, &m)| l.size() == m);
        if !ok {
            return Err(Error::InvalidParameter(alloc::format!(
                "labels {labels:?} do not match composition {:?}",
                self.ambient.parts
            )));
        }
        self.add_unchecked(labels, coeff);
        Ok(())
    }

    fn add_unchecked(&mut self, labels: Vec<Partition>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(labels) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Partition>, i64)> {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    pub fn coefficient(&self, labels: &[Partition]) -> i64 {
        self.terms.get(labels).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Dimension, each tuple counting `Π syt_count(λ_i)`.
    pub fn dim(&self) -> BigUint {
        let mut pos = BigUint::default();
        let mut neg = BigUint::default();
        for (labels, c) in self.terms() {
            let d: BigUint = labels.iter().map(syt_count).product();
            if c > 0 {
                pos += d * BigUint::from(c as u64);
            } else {
                neg += d * BigUint::from(c.unsigned_abs());
            }
        }
        pos - neg
    }

    /// Coefficient pairing `Σ x_t y_t`.
    pub fn pairing(&self, other: &KClass) -> i64 {
        self.terms.iter().map(|(k, &c)| c * other.coefficient(k)).sum()
    }

    pub fn add_assign(&mut self, other: &KClass) {
        for (k, &c) in &other.terms {
            self.add_unchecked(k.clone(), c);
        }
    }
}

/// Expansion of a symmetric function or restricted class, shared between memo hits.
pub type Terms<K> = Arc<Vec<(K, u64)>>;

/// Memo tables for LR coefficients, products and restrictions.
#[derive(Default, Debug, Clone)]
pub struct LrMemo {
    coeffs: BTreeMap<(Partition, Partition, Partition), u64>,
    products: BTreeMap<Vec<Partition>, Terms<Partition>>,
    restrictions: BTreeMap<Partition, BTreeMap<Vec<usize>, Terms<Vec<Partition>>>>,
    // the same tables with partitions replaced by interned ids
    ids: BTreeMap<Partition, u32>,
    interned: Vec<Partition>,
    id_products: BTreeMap<Vec<u32>, Terms<u32>>,
    id_restrictions: BTreeMap<u32, BTreeMap<Vec<usize>, Terms<Vec<u32>>>>,
}

impl LrMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn coefficient(&mut self, lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
        let key = (lambda.clone(), mu.clone(), nu.clone());
        if let Some(&c) = self.coeffs.get(&key) {
            return c;
        }
        let c = lr_count(lambda, mu, nu);
        self.coeffs.insert(key, c);
        c
    }

    /// `s_λ s_μ = Σ c^ν_{λμ} s_ν`.
    pub fn product(&mut self, lambda: &Partition, mu: &Partition) -> Terms<Partition> {
        self.product_all(&[lambda.clone(), mu.clone()])
    }

    /// The Schur expansion of `s_{α_1} ⋯ s_{α_k}`.
    pub fn product_all(&mut self, labels: &[Partition]) -> Terms<Partition> {
        if let Some(v) = self.products.get(labels) {
            return v.clone();
        }
        let out: Vec<(Partition, u64)> = match labels {
            [] => vec![(Partition::empty(), 1)],
            [alpha] => vec![(alpha.clone(), 1)],
            [alpha, beta] => {
                let mut out = Vec::new();
                for nu in enumerate_partitions(alpha.size() + beta.size()) {
                    if contains(&nu, alpha) && contains(&nu, beta) {
                        let c = self.coefficient(alpha, beta, &nu);
                        if c != 0 {
                            out.push((nu, c));
                        }
                    }
                }
                out
            }
            [init @ .., last] => {
                let mut acc: BTreeMap<Partition, u64> = BTreeMap::new();
                for (lambda, c) in self.product_all(init).iter() {
                    for (nu, d) in self.product(lambda, last).iter() {
                        *acc.entry(nu.clone()).or_insert(0) += c * d;
                    }
                }
                acc.into_iter().collect()
            }
        };
        let out = Arc::new(out);
        self.products.insert(labels.to_vec(), out.clone());
        out
    }

    fn intern(&mut self, p: &Partition) -> u32 {
        if let Some(&i) = self.ids.get(p) {
            return i;
        }
        let i = self.interned.len() as u32;
        self.ids.insert(p.clone(), i);
        self.interned.push(p.clone());
        i
    }

    fn id_product_all(&mut self, ids: &[u32]) -> Terms<u32> {
        if let Some(v) = self.id_products.get(ids) {
            return v.clone();
        }
        let labels: Vec<Partition> = ids.iter().map(|&i| self.interned[i as usize].clone()).collect();
        let terms = self.product_all(&labels);
        let out = Arc::new(terms.iter().map(|(p, c)| (self.intern(p), *c)).collect::<Vec<_>>());
        self.id_products.insert(ids.to_vec(), out.clone());
        out
    }

    fn id_restriction(&mut self, id: u32, parts: &[usize]) -> Terms<Vec<u32>> {
        if let Some(v) = self.id_restrictions.get(&id).and_then(|m| m.get(parts)) {
            return v.clone();
        }
        let lambda = self.interned[id as usize].clone();
        let terms = self.restriction(&lambda, parts);
        let out = Arc::new(
            terms.iter().map(|(t, c)| (t.iter().map(|p| self.intern(p)).collect::<Vec<_>>(), *c)).collect::<Vec<_>>(),
        );
        self.id_restrictions.entry(id).or_default().insert(parts.to_vec(), out.clone());
        out
    }

    /// Restriction of `s_λ` to an ordered composition, as tuple multiplicities.
    pub fn restriction(&mut self, lambda: &Partition, parts: &[usize]) -> Terms<Vec<Partition>> {
        if let Some(v) = self.restrictions.get(lambda).and_then(|m| m.get(parts)) {
            return v.clone();
        }
        let out = match parts {
            [] => {
                if lambda.is_empty() {
                    vec![(Vec::new(), 1)]
                } else {
                    Vec::new()
                }
            }
            [m] => {
                if lambda.size() == *m {
                    vec![(vec![lambda.clone()], 1)]
                } else {
                    Vec::new()
                }
            }
            [first, rest @ ..] => {
                let mut acc: BTreeMap<Vec<Partition>, u64> = BTreeMap::new();
                let rest_size: usize = rest.iter().sum();
                for alpha in enumerate_partitions(*first) {
                    if !contains(lambda, &alpha) {
                        continue;
                    }
                    for beta in enumerate_partitions(rest_size) {
                        if !contains(lambda, &beta) {
                            continue;
                        }
                        let c = self.coefficient(&alpha, &beta, lambda);
                        if c == 0 {
                            continue;
                        }
                        for (tail, d) in self.restriction(&beta, rest).iter() {
                            let mut labels = Vec::with_capacity(parts.len());
                            labels.push(alpha.clone());
                            labels.extend(tail.iter().cloned());
                            *acc.entry(labels).or_insert(0) += c * d;
                        }
                    }
                }
                acc.into_iter().collect()
            }
        };
        let out = Arc::new(out);
        self.restrictions.entry(lambda.clone()).or_default().insert(parts.to_vec(), out.clone());
        out
    }
}

fn contains(outer: &Partition, inner: &Partition) -> bool {
    inner.len() <= outer.len() && (0..inner.len()).all(|i| inner.part(i) <= outer.part(i))
}

/// `c^ν_{λμ}` as a big integer; zero when `|λ| + |μ| ≠ |ν|`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
    BigUint::from(lr_count(lambda, mu, nu))
}

/// Counts LR tableaux of shape `ν/λ` and content `μ`: semistandard fillings
/// whose reverse reading word (rows top to bottom, each right to left) is a
/// lattice word.
pub fn lr_count(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !contains(nu, lambda) || !contains(nu, mu) {
        return 0;
    }
    let rows = nu.len();
    let mut fill: Vec<Vec<usize>> = (0..rows).map(|i| vec![0; nu.part(i)]).collect();
    let mut counts = vec![0usize; mu.len() + 1];
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| (lambda.part(r)..nu.part(r)).rev().map(move |c| (r, c)))
        .collect();
    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        lambda: &Partition,
        mu: &Partition,
        fill: &mut Vec<Vec<usize>>,
        counts: &mut Vec<usize>,
    ) -> u64 {
        let Some(&(r, c)) = cells.get(idx) else {
            return 1;
        };
        // weakly increasing along the row: bounded by the entry to the right
        let hi = if c + 1 < fill[r].len() { fill[r][c + 1] } else { mu.len() };
        // strictly increasing down the column
        let lo = if r > 0 && c >= lambda.part(r - 1) { fill[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for x in lo..=hi.min(mu.len()) {
            if counts[x] >= mu.part(x - 1) {
                continue;
            }
            if x > 1 && counts[x] + 1 > counts[x - 1] {
                continue;
            }
            counts[x] += 1;
            fill[r][c] = x;
            total += go(idx + 1, cells, lambda, mu, fill, counts);
            counts[x] -= 1;
        }
        fill[r][c] = 0;
        total
    }
    go(0, &cells, lambda, mu, &mut fill, &mut counts)
}

/// Induces a class to the full group `S_n` by iterated LR products.
pub fn induce_class(x: &KClass, memo: &mut LrMemo) -> KClass {
    let n = x.ambient.n();
    let mut out = KClass::zero(YoungSubgroup::full(n));
    for (labels, c) in x.terms() {
        for (nu, m) in memo.product_all(labels).iter() {
            out.add_unchecked(if n == 0 { Vec::new() } else { vec![nu.clone()] }, c * *m as i64);
        }
    }
    out
}

/// Restricts a class on the full group to an ordered Young subgroup.
pub fn restrict_class(x: &KClass, target: &YoungSubgroup, memo: &mut LrMemo) -> Result<KClass> {
    if x.ambient.parts.len() > 1 {
        return Err(Error::InvalidParameter(String::from("restriction expects a class on S_n")));
    }
    if x.ambient.n() != target.n() {
        return Err(Error::SizeMismatch { left: x.ambient.n(), right: target.n() });
    }
    let mut out = KClass::zero(target.clone());
    for (labels, c) in x.terms() {
        let lambda = labels.first().cloned().unwrap_or_default();
        for (tuple, m) in memo.restriction(&lambda, &target.parts).iter() {
            out.add_unchecked(tuple.clone(), c * *m as i64);
        }
    }
    Ok(out)
}

/// A double coset `S_ν w S_μ`, encoded as a table with row sums `ν` and
/// column sums `μ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DoubleCoset {
    pub table: Vec<Vec<usize>>,
}

impl DoubleCoset {
    /// Nonzero entries read row by row: `S_ν ∩ w S_μ w^{-1}`.
    pub fn row_composition(&self) -> Vec<usize> {
        self.table.iter().flatten().copied().filter(|&a| a > 0).collect()
    }

    /// Nonzero entries read column by column: `w^{-1} S_ν w ∩ S_μ`.
    pub fn column_composition(&self) -> Vec<usize> {
        let cols = self.table.first().map_or(0, Vec::len);
        (0..cols)
            .flat_map(|j| self.table.iter().map(move |row| row[j]))
            .filter(|&a| a > 0)
            .collect()
    }

    pub fn intersection_type(&self) -> ParabolicType {
        ParabolicType::new(self.row_composition())
    }

    /// `|S_ν ∩ w S_μ w^{-1}| = Π a_ij!`.
    pub fn intersection_order(&self) -> u128 {
        self.table.iter().flatten().map(|&a| factorial(a)).product()
    }
}

/// All tables with the given margins, largest entries first.
pub fn double_cosets(nu: &YoungSubgroup, mu: &YoungSubgroup) -> Result<Vec<DoubleCoset>> {
    if nu.n() != mu.n() {
        return Err(Error::SizeMismatch { left: nu.n(), right: mu.n() });
    }
    let (r, c) = (nu.parts.len(), mu.parts.len());
    let mut out = Vec::new();
    let mut table = vec![vec![0; c]; r];
    let mut col_rem = mu.parts.clone();
    fn fill(
        i: usize,
        j: usize,
        row_rem: usize,
        nu: &[usize],
        table: &mut Vec<Vec<usize>>,
        col_rem: &mut Vec<usize>,
        out: &mut Vec<DoubleCoset>,
    ) {
        let (r, c) = (table.len(), col_rem.len());
        if i == r {
            if col_rem.iter().all(|&x| x == 0) {
                out.push(DoubleCoset { table: table.clone() });
            }
            return;
        }
        if j == c - 1 {
            // last column takes whatever is left in the row
            if row_rem <= col_rem[j] {
                table[i][j] = row_rem;
                col_rem[j] -= row_rem;
                let next = if i + 1 < r { nu[i + 1] } else { 0 };
                fill(i + 1, 0, next, nu, table, col_rem, out);
                col_rem[j] += row_rem;
                table[i][j] = 0;
            }
            return;
        }
        for a in (0..=row_rem.min(col_rem[j])).rev() {
            table[i][j] = a;
            col_rem[j] -= a;
            fill(i, j + 1, row_rem - a, nu, table, col_rem, out);
            col_rem[j] += a;
        }
        table[i][j] = 0;
    }
    if r == 0 || c == 0 {
        if r == 0 && c == 0 {
            out.push(DoubleCoset { table: Vec::new() });
        }
        return Ok(out);
    }
    fill(0, 0, nu.parts[0], &nu.parts, &mut table, &mut col_rem, &mut out);
    Ok(out)
}

/// Both sides of the class-level Mackey formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MackeyOutcome {
    pub lhs: KClass,
    pub rhs: KClass,
}

impl MackeyOutcome {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `Res_ν Ind^{S_n}_{S_μ} x` against the double-coset sum
/// `Σ_w Ind^{S_ν}_{S_ν ∩ wS_μw^{-1}} w(Res^{S_μ}_{w^{-1}S_νw ∩ S_μ} x)`.
///
/// On classes, conjugation by `w` only regroups the column pieces into rows.
pub fn mackey_check(
    nu: &YoungSubgroup,
    mu: &YoungSubgroup,
    x: &KClass,
    memo: &mut LrMemo,
) -> Result<MackeyOutcome> {
    Ok(mackey_check_classes(nu, mu, core::slice::from_ref(x), memo)?.remove(0))
}

/// [`mackey_check`] for several classes over the same `μ`, sharing the
/// double-coset enumeration.
pub fn mackey_check_classes(
    nu: &YoungSubgroup,
    mu: &YoungSubgroup,
    xs: &[KClass],
    memo: &mut LrMemo,
) -> Result<Vec<MackeyOutcome>> {
    if xs.iter().any(|x| x.ambient != *mu) {
        return Err(Error::InvalidParameter(String::from("class is not over the given composition")));
    }
    let cosets: Vec<CosetShape> = double_cosets(nu, mu)?.iter().map(CosetShape::new).collect();
    let mut out = Vec::with_capacity(xs.len());
    let mut sum = IdSum::default();
    for x in xs {
        let lhs = restrict_class(&induce_class(x, memo), nu, memo)?;
        for (labels, c) in x.terms() {
            let ids: Vec<u32> = labels.iter().map(|p| memo.intern(p)).collect();
            for shape in &cosets {
                shape.add_term(&ids, c, &mut sum, memo);
            }
        }
        let mut rhs = KClass::zero(nu.clone());
        for (key, c) in core::mem::take(&mut sum.terms) {
            rhs.add_unchecked(key.iter().map(|&i| memo.interned[i as usize].clone()).collect(), c);
        }
        out.push(MackeyOutcome { lhs, rhs });
    }
    Ok(out)
}

/// A class with interned labels, plus scratch space for building terms.
#[derive(Default)]
struct IdSum {
    terms: BTreeMap<Vec<u32>, i64>,
    labels: Vec<u32>,
    mults: Vec<i64>,
    next_labels: Vec<u32>,
    next_mults: Vec<i64>,
    row: Vec<u32>,
    pieces: Vec<Terms<Vec<u32>>>,
    choice: Vec<usize>,
    cursor: Vec<usize>,
}

/// A double coset table reduced to what the Mackey sum needs: the nonzero
/// entries of each column, and for each row the columns its pieces come from.
struct CosetShape {
    columns: Vec<Vec<usize>>,
    rows: Vec<Vec<usize>>,
}

impl CosetShape {
    fn new(coset: &DoubleCoset) -> Self {
        let t = &coset.table;
        let cols = t.first().map_or(0, Vec::len);
        let columns = (0..cols).map(|j| t.iter().map(|row| row[j]).filter(|&a| a > 0).collect()).collect();
        let rows = t.iter().map(|row| (0..cols).filter(|&j| row[j] > 0).collect()).collect();
        CosetShape { columns, rows }
    }

    fn add_term(&self, labels: &[u32], c: i64, sum: &mut IdSum, memo: &mut LrMemo) {
        // restrict each column label to its column of the table
        let mut pieces = core::mem::take(&mut sum.pieces);
        pieces.clear();
        pieces.extend(labels.iter().zip(&self.columns).map(|(&alpha, column)| memo.id_restriction(alpha, column)));
        if !pieces.iter().any(|p| p.is_empty()) {
            self.expand(&pieces, c, sum, memo);
        }
        sum.pieces = pieces;
    }

    fn expand(&self, pieces: &[Terms<Vec<u32>>], c: i64, sum: &mut IdSum, memo: &mut LrMemo) {
        let width = self.rows.len();
        let mut choice = core::mem::take(&mut sum.choice);
        let mut cursor = core::mem::take(&mut sum.cursor);
        choice.clear();
        choice.resize(pieces.len(), 0);
        cursor.resize(pieces.len(), 0);
        loop {
            let mut mult = c;
            for (p, &k) in pieces.iter().zip(&choice) {
                mult *= p[k].1 as i64;
            }
            // regroup column pieces into rows, top to bottom; the partial
            // terms live in flat buffers of stride `len`
            cursor.iter_mut().for_each(|k| *k = 0);
            sum.labels.clear();
            sum.mults.clear();
            sum.mults.push(mult);
            for (len, row) in self.rows.iter().enumerate() {
                sum.row.clear();
                for &j in row {
                    sum.row.push(pieces[j][choice[j]].0[cursor[j]]);
                    cursor[j] += 1;
                }
                let options = memo.id_product_all(&sum.row);
                sum.next_labels.clear();
                sum.next_mults.clear();
                for (t, &m) in sum.mults.iter().enumerate() {
                    for &(lab, d) in options.iter() {
                        sum.next_labels.extend_from_slice(&sum.labels[t * len..(t + 1) * len]);
                        sum.next_labels.push(lab);
                        sum.next_mults.push(m * d as i64);
                    }
                }
                core::mem::swap(&mut sum.labels, &mut sum.next_labels);
                core::mem::swap(&mut sum.mults, &mut sum.next_mults);
            }
            for (t, &m) in sum.mults.iter().enumerate() {
                let key = &sum.labels[t * width..(t + 1) * width];
                match sum.terms.get_mut(key) {
                    Some(v) => *v += m,
                    None => {
                        sum.terms.insert(key.to_vec(), m);
                    }
                }
            }
            let mut j = choice.len();
            loop {
                if j == 0 {
                    sum.choice = choice;
                    sum.cursor = cursor;
                    return;
                }
                j -= 1;
                choice[j] += 1;
                if choice[j] < pieces[j].len() {
                    break;
                }
                choice[j] = 0;
            }
        }
    }
}

/// Triples with `c^ν_{λμ} ≠ 0` and `ν_1 > λ_1 + μ_1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LrBoundReport {
    pub checked: usize,
    pub nonzero: usize,
    pub violations: Vec<(Partition, Partition, Partition)>,
}

/// Checks `c^ν_{λμ} ≠ 0 ⟹ ν_1 ≤ λ_1 + μ_1` for all `|ν| ≤ max_size`.
pub fn verify_lr_first_row_bound(max_size: usize, memo: &mut LrMemo) -> LrBoundReport {
    let mut report = LrBoundReport::default();
    for n in 0..=max_size {
        let nus = enumerate_partitions(n);
        for k in 0..=n {
            for lambda in enumerate_partitions(k) {
                for mu in enumerate_partitions(n - k) {
                    for nu in &nus {
                        report.checked += 1;
                        if memo.coefficient(&lambda, &mu, nu) != 0 {
                            report.nonzero += 1;
                            if nu.part(0) > lambda.part(0) + mu.part(0) {
                                report.violations.push((lambda.clone(), mu.clone(), nu.clone()));
                            }
                        }
                    }
                }
            }
        }
    }
    report
}

/// `c^{ρ + (ew)}_{ρ,(ew)} = 1`, where `ρ + (ew)` adds `ew` boxes to the first row.
pub fn verify_corner_coefficient(rho: &Partition, e: usize, w: usize) -> Result<bool> {
    check_e(e)?;
    if !is_e_core(rho, e)? {
        return Err(Error::NotCore(alloc::format!("{rho} (e = {e})")));
    }
    let row = Partition::row(e * w);
    let target = rho.add(&row);
    Ok(lr_count(rho, &row, &target) == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ys(parts: &[usize]) -> YoungSubgroup {
        YoungSubgroup::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_count(&p("3,1"), &p(""), &p("3,1")), 1);
        assert_eq!(lr_count(&p("1"), &p("1,1"), &p("2,1")), 1);
        assert_eq!(lr_count(&p("2,1"), &p("2"), &p("4,1")), 1);
        assert_eq!(lr_count(&p("2,1"), &p("2,1"), &p("3,2,1")), 2);
        assert_eq!(lr_count(&p("2"), &p("2"), &p("3")), 0);
    }

    #[test]
    fn induce_examples() {
        let mut memo = LrMemo::new();
        let x = KClass::basis(ys(&[2, 1]), vec![p("2"), p("1")]).unwrap();
        let y = induce_class(&x, &mut memo);
        assert_eq!(y.coefficient(&[p("3")]), 1);
        assert_eq!(y.coefficient(&[p("2,1")]), 1);
        assert_eq!(y.len(), 2);
        let x = KClass::basis(ys(&[1, 1]), vec![p("1"), p("1")]).unwrap();
        let y = induce_class(&x, &mut memo);
        assert_eq!(y.coefficient(&[p("2")]), 1);
        assert_eq!(y.coefficient(&[p("1,1")]), 1);
        let x = KClass::basis(ys(&[3]), vec![p("2,1")]).unwrap();
        assert_eq!(induce_class(&x, &mut memo), x);
    }

    #[test]
    fn restrict_examples() {
        let mut memo = LrMemo::new();
        let x = KClass::basis(ys(&[3]), vec![p("2,1")]).unwrap();
        let y = restrict_class(&x, &ys(&[2, 1]), &mut memo).unwrap();
        assert_eq!(y.coefficient(&[p("2"), p("1")]), 1);
        assert_eq!(y.coefficient(&[p("1,1"), p("1")]), 1);
        assert_eq!(y.len(), 2);
        assert_eq!(restrict_class(&x, &ys(&[3]), &mut memo).unwrap(), x);
        let x = KClass::basis(ys(&[4]), vec![p("2,2")]).unwrap();
        let y = restrict_class(&x, &ys(&[1, 1, 1, 1]), &mut memo).unwrap();
        assert_eq!(y.coefficient(&[p("1"), p("1"), p("1"), p("1")]), 2);
    }

    #[test]
    fn double_coset_examples() {
        assert_eq!(double_cosets(&ys(&[4]), &ys(&[2, 1, 1])).unwrap().len(), 1);
        let d = double_cosets(&ys(&[2, 1]), &ys(&[2, 1])).unwrap();
        assert_eq!(
            d,
            vec![
                DoubleCoset { table: vec![vec![2, 0], vec![0, 1]] },
                DoubleCoset { table: vec![vec![1, 1], vec![1, 0]] },
            ]
        );
        assert_eq!(double_cosets(&ys(&[1, 1]), &ys(&[1, 1])).unwrap().len(), 2);
    }

    #[test]
    fn mackey_worked_example() {
        let mut memo = LrMemo::new();
        let x = KClass::basis(ys(&[2, 1]), vec![p("2"), p("1")]).unwrap();
        let out = mackey_check(&ys(&[2, 1]), &ys(&[2, 1]), &x, &mut memo).unwrap();
        assert!(out.holds());
        assert_eq!(out.lhs.coefficient(&[p("2"), p("1")]), 2);
        assert_eq!(out.lhs.coefficient(&[p("1,1"), p("1")]), 1);
        assert_eq!(out.lhs.len(), 2);
    }

    #[test]
    fn lr_bound_and_corner() {
        let mut memo = LrMemo::new();
        let r = verify_lr_first_row_bound(6, &mut memo);
        assert!(r.violations.is_empty());
        assert!(r.nonzero > 0);
        assert_eq!(lr_count(&p("1"), &p("2"), &p("3")), 1);
        assert!(verify_corner_coefficient(&p(""), 2, 2).unwrap());
        assert!(verify_corner_coefficient(&p("2,1"), 2, 1).unwrap());
        assert!(verify_corner_coefficient(&p("1"), 3, 2).unwrap());
        assert!(verify_corner_coefficient(&p("2"), 2, 1).is_err());
    }
}
