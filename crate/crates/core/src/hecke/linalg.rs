//! Dense exact linear algebra over ℚ(ζ_e).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};

pub type Vector = Vec<Cyclotomic>;

pub fn zero_vector(e: usize, n: usize) -> Vector {
    vec![Cyclotomic::zero(e); n]
}

pub fn is_zero_vector(v: &[Cyclotomic]) -> bool {
    v.iter().all(Cyclotomic::is_zero)
}

/// `y += c·x`.
pub fn axpy(y: &mut [Cyclotomic], c: &Cyclotomic, x: &[Cyclotomic]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in y.iter_mut().zip(x) {
        if !b.is_zero() {
            *a += &(c * b);
        }
    }
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    e: usize,
    rows: usize,
    cols: usize,
    data: Vec<Cyclotomic>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over Q(z_{})", self.rows, self.cols, self.e)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

impl Mat {
    pub fn zeros(e: usize, rows: usize, cols: usize) -> Self {
        Mat { e, rows, cols, data: vec![Cyclotomic::zero(e); rows * cols] }
    }

    pub fn identity(e: usize, n: usize) -> Self {
        let mut m = Self::zeros(e, n, n);
        for i in 0..n {
            m.data[i * n + i] = Cyclotomic::one(e);
        }
        m
    }

    pub fn scalar(e: usize, n: usize, c: &Cyclotomic) -> Self {
        let mut m = Self::zeros(e, n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn from_rows(e: usize, rows: Vec<Vector>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            debug_assert_eq!(row.len(), cols);
            data.extend(row);
        }
        Mat { e, rows: r, cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(e: usize, cols: &[Vector], rows: usize) -> Self {
        let mut m = Self::zeros(e, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn order(&self) -> usize {
        self.e
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Cyclotomic) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        let mut m = Mat::zeros(self.e, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        m
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Mat::zeros(self.e, self.rows, other.cols);
        for i in 0..self.rows {
            let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if !a.is_zero() {
                    axpy(dst, a, other.row(k));
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Cyclotomic]) -> Vector {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Cyclotomic::zero(self.e);
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Mat { e: self.e, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Mat { e: self.e, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Mat {
        let data = self.data.iter().map(|a| a * c).collect();
        Mat { e: self.e, rows: self.rows, cols: self.cols, data }
    }

    /// `self += c·other`.
    pub fn add_scaled(&mut self, c: &Cyclotomic, other: &Mat) {
        axpy(&mut self.data, c, &other.data);
    }

    pub fn trace(&self) -> Cyclotomic {
        let mut t = Cyclotomic::zero(self.e);
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    /// Entries in row-major order, for treating a matrix as a vector.
    pub fn flatten(&self) -> Vector {
        self.data.clone()
    }

    pub fn from_flat(e: usize, rows: usize, cols: usize, data: Vector) -> Mat {
        assert_eq!(data.len(), rows * cols);
        Mat { e, rows, cols, data }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).inverse().expect("nonzero pivot");
            for j in c..self.cols {
                let idx = r * self.cols + j;
                if !self.data[idx].is_zero() {
                    self.data[idx] = &self.data[idx] * &inv;
                }
            }
            let pivot_row: Vector = self.row(r).to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                let neg = -f;
                axpy(&mut self.data[i * self.cols..(i + 1) * self.cols], &neg, &pivot_row);
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{x : self·x = 0}`.
    pub fn nullspace(&self) -> Vec<Vector> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = zero_vector(self.e, self.cols);
                x[f] = Cyclotomic::one(self.e);
                for (r, &p) in pivots.iter().enumerate() {
                    x[p] = -m.get(r, f);
                }
                x
            })
            .collect()
    }

    /// Some `x` with `self·x = b`, if one exists.
    pub fn solve(&self, b: &[Cyclotomic]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zeros(self.e, self.rows, self.cols + 1);
        for (i, bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, bi.clone());
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = zero_vector(self.e, self.cols);
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::InvalidParameter(alloc::string::String::from("non-square inverse")));
        }
        let n = self.rows;
        let mut aug = Mat::zeros(self.e, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Cyclotomic::one(self.e));
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::DivisionByZero);
        }
        let mut inv = Mat::zeros(self.e, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    /// Nilpotency test for a square matrix: `self^n = 0`.
    pub fn is_nilpotent(&self) -> bool {
        let mut p = self.clone();
        let mut k = 1;
        while k < self.rows.max(1) {
            p = p.mul(&p);
            k *= 2;
        }
        p.is_zero()
    }
}

/// Incrementally built echelon basis of a subspace, remembering how each
/// reduced row is written in terms of the vectors that were inserted.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    e: usize,
    dim: usize,
    originals: Vec<Vector>,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
    combos: Vec<Vector>,
}

impl SpanBasis {
    pub fn new(e: usize, dim: usize) -> Self {
        SpanBasis { e, dim, originals: Vec::new(), rows: Vec::new(), pivots: Vec::new(), combos: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.originals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.originals.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// The inserted (independent) vectors, in insertion order.
    pub fn vectors(&self) -> &[Vector] {
        &self.originals
    }

    fn reduce_with_combo(&self, v: &[Cyclotomic]) -> (Vector, Vector) {
        let mut v = v.to_vec();
        let mut combo = zero_vector(self.e, self.originals.len());
        for (k, &p) in self.pivots.iter().enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            let neg = -&f;
            axpy(&mut v, &neg, &self.rows[k]);
            axpy(&mut combo, &f, &self.combos[k]);
        }
        (v, combo)
    }

    pub fn contains(&self, v: &[Cyclotomic]) -> bool {
        is_zero_vector(&self.reduce_with_combo(v).0)
    }

    /// Inserts `v` if it is independent of the current span.
    pub fn insert(&mut self, v: Vector) -> bool {
        let (mut r, combo) = self.reduce_with_combo(&v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let idx = self.originals.len();
        // new row = v - Σ combo_k originals_k
        let mut c: Vector = combo.iter().map(|x| -x).collect();
        c.push(Cyclotomic::one(self.e));
        for old in self.combos.iter_mut() {
            old.push(Cyclotomic::zero(self.e));
        }
        let inv = r[p].inverse().expect("nonzero pivot");
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for x in c.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for k in 0..self.rows.len() {
            let f = self.rows[k][p].clone();
            if f.is_zero() {
                continue;
            }
            let neg = -f;
            axpy(&mut self.rows[k], &neg, &r);
            axpy(&mut self.combos[k], &neg, &c);
        }
        self.rows.push(r);
        self.pivots.push(p);
        self.combos.push(c);
        self.originals.push(v);
        debug_assert_eq!(self.originals.len(), idx + 1);
        true
    }

    /// Coordinates of `v` in terms of the inserted vectors, if `v` is in the span.
    pub fn coordinates(&self, v: &[Cyclotomic]) -> Option<Vector> {
        let (r, combo) = self.reduce_with_combo(v);
        is_zero_vector(&r).then_some(combo)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(e: usize, k: i64) -> Cyclotomic {
        Cyclotomic::from_int(e, k)
    }

    #[test]
    fn rank_nullspace_solve() {
        let e = 3;
        let z = Cyclotomic::zeta(e);
        let m = Mat::from_rows(
            e,
            vec![vec![c(e, 1), z.clone(), c(e, 0)], vec![z.clone(), &z * &z, c(e, 0)]],
            3,
        );
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(is_zero_vector(&m.apply(v)));
        }
        assert!(m.solve(&[c(e, 1), z.clone()]).is_some());
        assert!(m.solve(&[c(e, 1), c(e, 1)]).is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        let e = 4;
        let z = Cyclotomic::zeta(e);
        let m = Mat::from_rows(e, vec![vec![c(e, 2), z.clone()], vec![z.clone(), c(e, 1)]], 2);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(e, 2));
    }

    #[test]
    fn span_basis_coordinates() {
        let e = 2;
        let mut s = SpanBasis::new(e, 3);
        assert!(s.insert(vec![c(e, 1), c(e, 1), c(e, 0)]));
        assert!(s.insert(vec![c(e, 0), c(e, 1), c(e, 1)]));
        assert!(!s.insert(vec![c(e, 1), c(e, 2), c(e, 1)]));
        let co = s.coordinates(&[c(e, 2), c(e, 5), c(e, 3)]).unwrap();
        assert_eq!(co, vec![c(e, 2), c(e, 3)]);
        assert!(s.coordinates(&[c(e, 1), c(e, 0), c(e, 0)]).is_none());
    }
}
