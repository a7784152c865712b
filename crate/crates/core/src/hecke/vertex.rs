//! Vertices of indecomposable `H_q(S_n)`-modules.
//!
//! For `M` with local endomorphism ring, `M | Ind_μ Res_μ M` iff `Id_M` lies
//! in the image of the relative trace. That image is an ideal of `End(M)`,
//! so it contains `Id_M` iff it is not inside the radical, i.e. iff
//! `tr(Tr(β)·γ) ≠ 0` for some `β ∈ End_{H_μ}(M)` and `γ ∈ End_H(M)`.
//! Because `γ` commutes with `H`, `tr(Tr(β)·γ) = tr(β·N'_μ·γ)` with
//! `N'_μ = Σ_d q^{-l(d)} T_{d^{-1}} T_d`.

use alloc::format;
use alloc::vec::Vec;

use super::adjunction::{adjunction_data, dual_norm_element, trace_ideal_contains_identity};
use super::algebra::HeckeAlgebra;
use super::linalg::Mat;
use super::module::{semisimple_quotient_dim, HModule};
use crate::blocks::{parabolic_contains, parabolic_types, ParabolicType};
use crate::error::{Error, Result};

/// `End_H(M)`, provided `End(M)/rad` is one-dimensional.
pub fn certify_indecomposable(m: &HModule) -> Result<Vec<Mat>> {
    let end = m.end_algebra();
    match semisimple_quotient_dim(m.e(), &end) {
        1 => Ok(end),
        k => Err(Error::NotIndecomposable(format!("End(M)/rad(End(M)) has dimension {k}"))),
    }
}

/// `M | N` for `M` with certified local endomorphism ring.
pub fn is_summand(m: &HModule, n: &HModule) -> Result<bool> {
    certify_indecomposable(m)?;
    trace_ideal_contains_identity(m, n)
}

/// Whether `M` is relatively `H(S_μ)`-projective, by the trace pairing.
/// `end` must be a basis of `End_H(M)` with `M` indecomposable.
pub fn relatively_projective(h: &HeckeAlgebra, m: &HModule, end: &[Mat], composition: &[usize]) -> Result<bool> {
    let table = m.act_all();
    let r = m.act_element(h, &dual_norm_element(h, composition), &table);
    let local = m.restrict(composition)?.end_algebra();
    let rg: Vec<Mat> = end.iter().map(|g| r.mul(g)).collect();
    Ok(local.iter().any(|b| rg.iter().any(|x| !b.mul(x).trace().is_zero())))
}

/// Same question answered with an explicit `Ind Res M` and `Hom`-space trace ideal.
pub fn relatively_projective_explicit(h: &HeckeAlgebra, m: &HModule, composition: &[usize]) -> Result<bool> {
    let data = adjunction_data(h, m, composition)?;
    trace_ideal_contains_identity(m, &data.ind_res)
}

/// The parabolic types tested and the unique minimal one among those `M` is
/// relatively projective to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexScan {
    pub vertex: ParabolicType,
    pub tested: Vec<(ParabolicType, bool)>,
}

/// Which scan to use for each parabolic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanMethod {
    TracePairing,
    ExplicitInduction,
}

pub fn vertex_of(h: &HeckeAlgebra, m: &HModule) -> Result<VertexScan> {
    vertex_of_with(h, m, ScanMethod::TracePairing)
}

pub fn vertex_of_with(h: &HeckeAlgebra, m: &HModule, method: ScanMethod) -> Result<VertexScan> {
    let n = h.n();
    let end = certify_indecomposable(m)?;
    let mut tested = Vec::new();
    for t in parabolic_types(n) {
        let c = t.composition(n)?;
        let ok = match method {
            ScanMethod::TracePairing => relatively_projective(h, m, &end, &c)?,
            ScanMethod::ExplicitInduction => relatively_projective_explicit(h, m, &c)?,
        };
        tested.push((t, ok));
    }
    let vertex = minimal_type(&tested, n)?;
    Ok(VertexScan { vertex, tested })
}

fn minimal_type(tested: &[(ParabolicType, bool)], n: usize) -> Result<ParabolicType> {
    let good: Vec<&ParabolicType> = tested.iter().filter(|(_, ok)| *ok).map(|(t, _)| t).collect();
    let mut minimal = Vec::new();
    for &t in &good {
        let mut has_smaller = false;
        for &u in &good {
            if u != t && parabolic_contains(t, u, n)? {
                has_smaller = true;
                break;
            }
        }
        if !has_smaller {
            minimal.push(t.clone());
        }
    }
    match minimal.len() {
        1 => Ok(minimal.pop().unwrap()),
        0 => Err(Error::NonUniqueVertex(alloc::string::String::from("no parabolic works"))),
        _ => {
            let names: Vec<alloc::string::String> = minimal.iter().map(|t| format!("{t}")).collect();
            Err(Error::NonUniqueVertex(names.join(", ")))
        }
    }
}
