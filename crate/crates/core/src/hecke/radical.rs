//! The Jacobson radical of `H_q(S_n)` as the kernel of the regular trace form.

use alloc::vec::Vec;

use super::algebra::HeckeAlgebra;
use super::cyclotomic::Cyclotomic;
use super::linalg::{Mat, Vector};
use super::perm;

/// Calls `f(a, T_a·T_b)` for every basis index `a`, building the products
/// along increasing length of `a`.
fn for_each_left_product(h: &HeckeAlgebra, b: usize, mut f: impl FnMut(usize, &Vector)) {
    let mut prods: Vec<Option<Vector>> = alloc::vec![None; h.dim()];
    prods[0] = Some(h.basis_element(h.perm(b)));
    // indices are sorted by length, so each a > 0 has a shorter s_i·a earlier
    for a in 0..h.dim() {
        if a > 0 {
            let w = h.perm(a);
            let inv = perm::inverse(w);
            let i = (1..h.n()).find(|&i| inv[i - 1] > inv[i]).expect("left descent");
            let shorter = h.index(&perm::mul_left_gen(i, w));
            let v = h.mul_gen_left(i, prods[shorter].as_ref().expect("shorter product"));
            prods[a] = Some(v);
        }
        f(a, prods[a].as_ref().unwrap());
    }
}

/// `φ(T_w) = tr(x ↦ T_w x)` for every `w`.
pub fn regular_trace(h: &HeckeAlgebra) -> Vector {
    let mut phi = h.zero();
    for b in 0..h.dim() {
        for_each_left_product(h, b, |a, v| phi[a] += &v[b]);
    }
    phi
}

/// Gram matrix `φ(T_a T_b)` of the regular trace form.
pub fn trace_form(h: &HeckeAlgebra) -> Mat {
    let phi = regular_trace(h);
    let mut g = Mat::zeros(h.e(), h.dim(), h.dim());
    for b in 0..h.dim() {
        for_each_left_product(h, b, |a, v| {
            let mut t = Cyclotomic::zero(h.e());
            for (x, c) in v.iter().enumerate() {
                if !c.is_zero() && !phi[x].is_zero() {
                    t += &(c * &phi[x]);
                }
            }
            g.set(a, b, t);
        });
    }
    g
}

/// Basis of `rad(H)`. In characteristic zero this is the kernel of the
/// trace form of the regular representation.
pub fn algebra_radical(h: &HeckeAlgebra) -> Vec<Vector> {
    trace_form(h).nullspace()
}
