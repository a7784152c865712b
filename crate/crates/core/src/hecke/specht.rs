//! Specht modules as left ideals `H·z_λ` and their simple heads `D_λ`.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec::Vec;

use super::algebra::HeckeAlgebra;
use super::cyclotomic::Cyclotomic;
use super::linalg::{is_zero_vector, Mat, SpanBasis, Vector};
use super::module::HModule;
use super::perm::{self, Perm};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// A cyclic left ideal `H·g` together with the spanning vectors used as its basis.
#[derive(Clone, Debug)]
pub struct CyclicIdeal {
    pub generator: Vector,
    pub basis: Vec<Vector>,
    pub module: HModule,
}

/// Spins `g` under the generators `T_i` and records the action on the span.
pub fn left_ideal(h: &HeckeAlgebra, g: Vector) -> CyclicIdeal {
    let e = h.e();
    let mut span = SpanBasis::new(e, h.dim());
    let mut queue = VecDeque::new();
    if !is_zero_vector(&g) {
        span.insert(g.clone());
        queue.push_back(g.clone());
    }
    while let Some(v) = queue.pop_front() {
        for i in 1..h.n() {
            let w = h.mul_gen_left(i, &v);
            if span.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    let basis: Vec<Vector> = span.vectors().to_vec();
    let dim = basis.len();
    let gens = (1..h.n())
        .map(|i| {
            let cols: Vec<Vector> = basis
                .iter()
                .map(|b| span.coordinates(&h.mul_gen_left(i, b)).expect("ideal is closed"))
                .collect();
            (i, Mat::from_columns(e, &cols, dim))
        })
        .collect();
    let module = HModule::new(e, alloc::vec![h.n()], dim, gens).expect("left ideal relations");
    CyclicIdeal { generator: g, basis, module }
}

/// The permutation sending the row reading of `[λ]` to its column reading:
/// the cell read `i`-th along rows is read `w(i)`-th down the columns.
pub fn row_to_column_perm(lambda: &Partition) -> Perm {
    let conj = lambda.conjugate();
    let mut col_start = alloc::vec![0usize; lambda.part(0) + 1];
    for c in 1..col_start.len() {
        col_start[c] = col_start[c - 1] + conj.part(c - 1);
    }
    let mut w = Vec::with_capacity(lambda.size());
    for (r, &len) in lambda.parts().iter().enumerate() {
        for start in &col_start[..len] {
            w.push((start + r) as u8);
        }
    }
    w
}

/// `z_λ = x_λ T_w y_{λ'}` for the given `w`.
fn z_element(h: &HeckeAlgebra, lambda: &Partition, w: &[u8]) -> Vector {
    let x = h.x_element(lambda.parts());
    let y = h.y_element(lambda.conjugate().parts());
    h.mul(&h.mul_basis_right(&x, w), &y)
}

/// The Specht module `S_λ = H·z_λ` together with the data needed for `D_λ`.
#[derive(Clone, Debug)]
pub struct Specht {
    pub lambda: Partition,
    pub w: Perm,
    pub ideal: CyclicIdeal,
}

impl Specht {
    pub fn module(&self) -> &HModule {
        &self.ideal.module
    }
}

pub fn specht_module(h: &HeckeAlgebra, lambda: &Partition) -> Result<Specht> {
    if lambda.size() != h.n() {
        return Err(Error::SizeMismatch { left: lambda.size(), right: h.n() });
    }
    let expected = lambda.syt_count();
    let w0 = row_to_column_perm(lambda);
    for w in [w0.clone(), perm::inverse(&w0)] {
        let ideal = left_ideal(h, z_element(h, lambda, &w));
        if num_bigint::BigUint::from(ideal.module.dim()) == expected {
            return Ok(Specht { lambda: lambda.clone(), w, ideal });
        }
    }
    Err(Error::Convention(format!("H z_λ has the wrong dimension for λ = ({lambda})")))
}

/// Outcome of cutting the Specht module down to its simple head.
#[derive(Clone, Debug)]
pub struct RadicalData {
    /// Rank of `(a, b) ↦ τ(a* b)` on `S_λ`.
    pub tau_form_rank: usize,
    /// `dim D_λ`.
    pub rank: usize,
    pub simple: Option<CyclicIdeal>,
}

impl RadicalData {
    /// The τ-form and the head disagree on the rank.
    pub fn anomaly(&self) -> bool {
        self.tau_form_rank != self.rank
    }
}

/// Rank of the pairing `τ(a* b)` on a basis of `S_λ`, using
/// `τ(T_u* T_v) = δ_{uv} q^{l(u)}`.
pub fn tau_form_rank(h: &HeckeAlgebra, s: &Specht) -> usize {
    let b = &s.ideal.basis;
    let k = b.len();
    let weights: Vec<Cyclotomic> = (0..h.dim()).map(|u| h.q_pow(h.length(u) as i64)).collect();
    let mut g = Mat::zeros(h.e(), k, k);
    for i in 0..k {
        for j in 0..k {
            let mut t = Cyclotomic::zero(h.e());
            for u in 0..h.dim() {
                if !b[i][u].is_zero() && !b[j][u].is_zero() {
                    t += &(&(&b[i][u] * &b[j][u]) * &weights[u]);
                }
            }
            g.set(i, j, t);
        }
    }
    g.rank()
}

/// `D_λ` as the image of `S_λ → M^λ`, `s ↦ s·T_{w^{-1}} x_λ`: the composite
/// of the maps between the permutation module and the signed permutation
/// module has simple image, nonzero exactly for `e`-restricted `λ`.
pub fn contravariant_radical(h: &HeckeAlgebra, s: &Specht) -> RadicalData {
    let theta = h.mul_basis_left(&perm::inverse(&s.w), &h.x_element(s.lambda.parts()));
    let g = h.mul(&s.ideal.generator, &theta);
    let simple = (!is_zero_vector(&g)).then(|| left_ideal(h, g));
    RadicalData {
        tau_form_rank: tau_form_rank(h, s),
        rank: simple.as_ref().map_or(0, |d| d.module.dim()),
        simple,
    }
}

/// `D_λ`, or `None` when `λ` is not `e`-restricted.
pub fn simple_module(h: &HeckeAlgebra, lambda: &Partition) -> Result<Option<HModule>> {
    let s = specht_module(h, lambda)?;
    Ok(contravariant_radical(h, &s).simple.map(|d| d.module))
}

/// Scalar by which a central element acts on a module with `End = K`.
pub fn central_scalar(m: &Mat) -> Option<Cyclotomic> {
    let c = m.get(0, 0).clone();
    (*m == Mat::scalar(c.order(), m.rows(), &c)).then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn one_dimensional_pins() {
        let h = HeckeAlgebra::new(3, 3).unwrap();
        let triv = specht_module(&h, &p("3")).unwrap();
        assert_eq!(triv.module().action(1), &Mat::scalar(3, 1, h.q()));
        let sgn = specht_module(&h, &p("1,1,1")).unwrap();
        assert_eq!(sgn.module().action(2), &Mat::scalar(3, 1, &Cyclotomic::from_int(3, -1)));
        assert_eq!(specht_module(&h, &p("2,1")).unwrap().module().dim(), 2);
    }

    #[test]
    fn heads_at_e2_n2() {
        let h = HeckeAlgebra::new(2, 2).unwrap();
        let s2 = specht_module(&h, &p("2")).unwrap();
        assert_eq!(contravariant_radical(&h, &s2).rank, 0);
        let s11 = specht_module(&h, &p("1,1")).unwrap();
        let r = contravariant_radical(&h, &s11);
        assert_eq!(r.rank, 1);
        assert_eq!(r.tau_form_rank, 0);
        assert!(r.anomaly());
    }

    #[test]
    fn semisimple_heads_are_full() {
        let h = HeckeAlgebra::new(4, 5).unwrap();
        for lambda in crate::partition::enumerate_partitions(4) {
            let s = specht_module(&h, &lambda).unwrap();
            let r = contravariant_radical(&h, &s);
            assert_eq!(r.rank, s.module().dim(), "{lambda}");
        }
    }

    #[test]
    fn tau_pairing_matches_products() {
        let h = HeckeAlgebra::new(3, 4).unwrap();
        let a = h.mul(&h.x_element(&[2, 1]), &h.basis_element(&[1, 2, 0]));
        let b = h.y_element(&[1, 2]);
        let direct = h.tau(&h.mul(&h.star(&a), &b));
        let mut fast = Cyclotomic::zero(4);
        for u in 0..h.dim() {
            fast += &(&(&a[u] * &b[u]) * &h.q_pow(h.length(u) as i64));
        }
        assert_eq!(direct, fast);
    }

    #[test]
    fn row_to_column() {
        assert_eq!(row_to_column_perm(&p("2,1")), alloc::vec![0, 2, 1]);
    }
}
