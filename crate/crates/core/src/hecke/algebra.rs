//! The Iwahori–Hecke algebra `H_q(S_n)` with `(T_i - q)(T_i + 1) = 0` and
//! `q = ζ_e`, on the standard basis `{T_w}`.

use alloc::vec::Vec;

use super::cyclotomic::{Cyclotomic, MAX_ORDER};
use super::linalg::{axpy, zero_vector, Mat, Vector};
use super::perm::{self, Perm};
use crate::error::{Error, Result};

/// Default upper bound on `n` for building a Hecke algebra.
pub const DEFAULT_MAX_N: usize = 6;

/// `H_q(S_n)` at a primitive `e`-th root of unity.
#[derive(Clone, Debug)]
pub struct HeckeAlgebra {
    n: usize,
    e: usize,
    q: Cyclotomic,
    q_inv: Cyclotomic,
    q_minus_one: Cyclotomic,
    perms: Vec<Perm>,
    lengths: Vec<usize>,
    index_of_rank: Vec<usize>,
    /// `right[i][w] = (index of w·s_i, l(w·s_i) > l(w))`
    right: Vec<Vec<(usize, bool)>>,
    left: Vec<Vec<(usize, bool)>>,
}

impl HeckeAlgebra {
    pub fn new(n: usize, e: usize) -> Result<Self> {
        Self::with_guard(n, e, DEFAULT_MAX_N)
    }

    pub fn with_guard(n: usize, e: usize, max_n: usize) -> Result<Self> {
        crate::error::check_e(e)?;
        if e > MAX_ORDER {
            return Err(Error::InvalidParameter(alloc::format!("e = {e} exceeds {MAX_ORDER}")));
        }
        if n == 0 {
            return Err(Error::InvalidParameter(alloc::string::String::from("n must be positive")));
        }
        if n > max_n {
            return Err(Error::GuardExceeded { n, max: max_n });
        }
        let mut perms = perm::all_perms(n);
        perms.sort_by_key(|w| (perm::length(w), w.clone()));
        let lengths: Vec<usize> = perms.iter().map(|w| perm::length(w)).collect();
        let mut index_of_rank = alloc::vec![0; perms.len()];
        for (idx, w) in perms.iter().enumerate() {
            index_of_rank[perm::lehmer_rank(w)] = idx;
        }
        let lookup = |w: &Perm| index_of_rank[perm::lehmer_rank(w)];
        let mut right = alloc::vec![Vec::new(); n];
        let mut left = alloc::vec![Vec::new(); n];
        for i in 1..n {
            right[i] = perms
                .iter()
                .enumerate()
                .map(|(k, w)| {
                    let ws = perm::mul_right_gen(w, i);
                    let j = lookup(&ws);
                    (j, lengths[j] > lengths[k])
                })
                .collect();
            left[i] = perms
                .iter()
                .enumerate()
                .map(|(k, w)| {
                    let sw = perm::mul_left_gen(i, w);
                    let j = lookup(&sw);
                    (j, lengths[j] > lengths[k])
                })
                .collect();
        }
        let q = Cyclotomic::zeta(e);
        let q_inv = Cyclotomic::zeta_pow(e, -1);
        let q_minus_one = &q - &Cyclotomic::one(e);
        Ok(HeckeAlgebra { n, e, q, q_inv, q_minus_one, perms, lengths, index_of_rank, right, left })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn q(&self) -> &Cyclotomic {
        &self.q
    }

    pub fn q_inv(&self) -> &Cyclotomic {
        &self.q_inv
    }

    pub fn dim(&self) -> usize {
        self.perms.len()
    }

    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    pub fn perm(&self, idx: usize) -> &Perm {
        &self.perms[idx]
    }

    pub fn length(&self, idx: usize) -> usize {
        self.lengths[idx]
    }

    pub fn index(&self, w: &[u8]) -> usize {
        self.index_of_rank[perm::lehmer_rank(w)]
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(&self, k: i64) -> Cyclotomic {
        Cyclotomic::zeta_pow(self.e, k)
    }

    pub fn zero(&self) -> Vector {
        zero_vector(self.e, self.dim())
    }

    pub fn basis_element(&self, w: &[u8]) -> Vector {
        let mut v = self.zero();
        v[self.index(w)] = Cyclotomic::one(self.e);
        v
    }

    pub fn one(&self) -> Vector {
        self.basis_element(&perm::identity(self.n))
    }

    /// `x·T_i`.
    pub fn mul_gen_right(&self, x: &[Cyclotomic], i: usize) -> Vector {
        self.mul_gen(x, &self.right[i])
    }

    /// `T_i·x`.
    pub fn mul_gen_left(&self, i: usize, x: &[Cyclotomic]) -> Vector {
        self.mul_gen(x, &self.left[i])
    }

    fn mul_gen(&self, x: &[Cyclotomic], table: &[(usize, bool)]) -> Vector {
        let mut out = self.zero();
        for (k, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (j, up) = table[k];
            if up {
                out[j] += c;
            } else {
                out[j] += &(c * &self.q);
                out[k] += &(c * &self.q_minus_one);
            }
        }
        out
    }

    /// `T_w·x`.
    pub fn mul_basis_left(&self, w: &[u8], x: &[Cyclotomic]) -> Vector {
        let mut v = x.to_vec();
        for &i in perm::reduced_word(w).iter().rev() {
            v = self.mul_gen_left(i, &v);
        }
        v
    }

    /// `x·T_w`.
    pub fn mul_basis_right(&self, x: &[Cyclotomic], w: &[u8]) -> Vector {
        let mut v = x.to_vec();
        for &i in &perm::reduced_word(w) {
            v = self.mul_gen_right(&v, i);
        }
        v
    }

    pub fn mul(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Vector {
        let mut out = self.zero();
        for (k, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = self.mul_basis_left(&self.perms[k], b);
            axpy(&mut out, c, &t);
        }
        out
    }

    /// `τ(x)`, the coefficient of `T_1`.
    pub fn tau(&self, x: &[Cyclotomic]) -> Cyclotomic {
        x[0].clone()
    }

    /// The anti-involution `T_w ↦ T_{w^{-1}}`.
    pub fn star(&self, x: &[Cyclotomic]) -> Vector {
        let mut out = self.zero();
        for (k, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out[self.index(&perm::inverse(&self.perms[k]))] = c.clone();
            }
        }
        out
    }

    /// Σ_{w ∈ S_μ} c(w)·T_w for a Young subgroup given by a composition.
    pub fn parabolic_sum(&self, composition: &[usize], weight: impl Fn(usize) -> Cyclotomic) -> Vector {
        let mut out = self.zero();
        for (k, w) in self.perms.iter().enumerate() {
            if perm::in_young_subgroup(w, composition) {
                out[k] = weight(self.lengths[k]);
            }
        }
        out
    }

    /// `x_μ = Σ_{w ∈ S_μ} T_w`.
    pub fn x_element(&self, composition: &[usize]) -> Vector {
        self.parabolic_sum(composition, |_| Cyclotomic::one(self.e))
    }

    /// `y_μ = Σ_{w ∈ S_μ} (-q)^{-l(w)} T_w`.
    pub fn y_element(&self, composition: &[usize]) -> Vector {
        self.parabolic_sum(composition, |l| {
            let c = self.q_pow(-(l as i64));
            if l % 2 == 1 {
                -c
            } else {
                c
            }
        })
    }

    /// Matrix of left multiplication by `x` on the regular representation.
    pub fn left_regular(&self, x: &[Cyclotomic]) -> Mat {
        let cols: Vec<Vector> = self.perms.iter().map(|w| self.mul(x, &self.basis_element(w))).collect();
        Mat::from_columns(self.e, &cols, self.dim())
    }

    /// Matrix of left multiplication by `T_i` on the regular representation.
    pub fn left_regular_gen(&self, i: usize) -> Mat {
        let cols: Vec<Vector> =
            self.perms.iter().map(|w| self.mul_gen_left(i, &self.basis_element(w))).collect();
        Mat::from_columns(self.e, &cols, self.dim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_relation_n2() {
        let h = HeckeAlgebra::new(2, 3).unwrap();
        let t = h.basis_element(&[1, 0]);
        let tt = h.mul(&t, &t);
        // T² = (q - 1)T + q
        let mut expect = h.zero();
        expect[0] = h.q().clone();
        expect[1] = h.q() - &Cyclotomic::one(3);
        assert_eq!(tt, expect);
    }

    #[test]
    fn q_minus_one_square_zero_at_e2() {
        let h = HeckeAlgebra::new(2, 2).unwrap();
        let mut x = h.basis_element(&[1, 0]);
        x[0] = Cyclotomic::one(2);
        assert!(h.mul(&x, &x).iter().all(Cyclotomic::is_zero));
    }

    #[test]
    fn braid_relation_on_regular_rep() {
        let h = HeckeAlgebra::new(3, 4).unwrap();
        let (a, b) = (h.left_regular_gen(1), h.left_regular_gen(2));
        assert_eq!(a.mul(&b).mul(&a), b.mul(&a).mul(&b));
        let q = h.q().clone();
        let id = Mat::identity(4, 6);
        let lhs = a.sub(&id.scale(&q)).mul(&a.add(&id));
        assert!(lhs.is_zero());
        assert_eq!(h.dim(), 6);
    }

    #[test]
    fn multiplication_is_associative_n3() {
        let h = HeckeAlgebra::new(3, 3).unwrap();
        let x = h.x_element(&[2, 1]);
        let y = h.y_element(&[1, 2]);
        let w = h.basis_element(&[2, 0, 1]);
        assert_eq!(h.mul(&h.mul(&x, &y), &w), h.mul(&x, &h.mul(&y, &w)));
    }

    #[test]
    fn guard() {
        assert_eq!(HeckeAlgebra::new(7, 2).unwrap_err(), Error::GuardExceeded { n: 7, max: 6 });
    }
}
