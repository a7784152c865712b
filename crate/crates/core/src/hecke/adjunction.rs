//! Unit, counit and norm map of the biadjunction between parabolic
//! restriction `E = Res_μ` and induction `F = Ind_μ`.
//!
//! `F E M` has basis `T_d ⊗ m` over minimal left coset representatives `d`
//! of `S_μ`. The counit is `ε(T_d ⊗ m) = T_d·m`, and the unit uses the dual
//! bases of `τ`: `η(m) = Σ_d T_d ⊗ q^{-l(d)} T_{d^{-1}}·m`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::algebra::HeckeAlgebra;
use super::cyclotomic::Cyclotomic;
use super::linalg::{Mat, Vector};
use super::module::{coset_reps, HModule};
use super::perm::{self, Perm};
use crate::error::{Error, Result};

/// Minimal left coset representatives of `S_μ` in `S_n` and the
/// length-additive factorisation `w = d·u`.
#[derive(Clone, Debug)]
pub struct ParabolicData {
    pub composition: Vec<usize>,
    pub reps: Vec<Perm>,
}

impl ParabolicData {
    pub fn new(composition: &[usize]) -> Self {
        let n = composition.iter().sum();
        ParabolicData { composition: composition.to_vec(), reps: coset_reps(composition, &[n]) }
    }

    pub fn index(&self) -> usize {
        self.reps.len()
    }

    pub fn factor(&self, w: &[u8]) -> (Perm, Perm) {
        perm::factor_left_coset(w, &self.composition)
    }
}

/// `N_μ = Σ_d q^{-l(d)} T_d T_{d^{-1}}`.
pub fn norm_element(h: &HeckeAlgebra, composition: &[usize]) -> Vector {
    sum_over_reps(h, composition, false)
}

/// `Σ_d q^{-l(d)} T_{d^{-1}} T_d`, the element whose trace pairing detects
/// relative projectivity.
pub fn dual_norm_element(h: &HeckeAlgebra, composition: &[usize]) -> Vector {
    sum_over_reps(h, composition, true)
}

fn sum_over_reps(h: &HeckeAlgebra, composition: &[usize], swapped: bool) -> Vector {
    let mut out = h.zero();
    for d in ParabolicData::new(composition).reps {
        let dinv = perm::inverse(&d);
        let (a, b) = if swapped { (&dinv, &d) } else { (&d, &dinv) };
        let t = h.mul_basis_left(a, &h.basis_element(b));
        super::linalg::axpy(&mut out, &h.q_pow(-(perm::length(&d) as i64)), &t);
    }
    out
}

/// `τ(T_u T_v) = q^{l(u)}` if `v = u^{-1}` and `0` otherwise, for all `u, v`.
pub fn check_dual_bases(h: &HeckeAlgebra) -> bool {
    (0..h.dim()).all(|a| {
        let u = h.perm(a);
        let uinv = perm::inverse(u);
        (0..h.dim()).all(|b| {
            let t = h.tau(&h.mul_basis_left(u, &h.basis_element(h.perm(b))));
            if *h.perm(b) == uinv {
                t == h.q_pow(h.length(a) as i64)
            } else {
                t.is_zero()
            }
        })
    })
}

/// `η_M`, `ε_M` and `ζ_M` for an `H(S_n)`-module and a composition `μ`.
#[derive(Clone, Debug)]
pub struct AdjunctionData {
    pub composition: Vec<usize>,
    pub reps: Vec<Perm>,
    /// `F E M`.
    pub ind_res: HModule,
    /// `η_M : M → F E M`.
    pub unit: Mat,
    /// `ε_M : F E M → M`.
    pub counit: Mat,
    /// `ζ_M = ε_M η_M`.
    pub zeta: Mat,
    pub norm: Vector,
}

pub fn adjunction_data(h: &HeckeAlgebra, m: &HModule, composition: &[usize]) -> Result<AdjunctionData> {
    if m.composition() != [h.n()] {
        return Err(Error::InvalidParameter(String::from("adjunction data needs an H(S_n)-module")));
    }
    let table = m.act_all();
    let res = m.restrict(composition)?;
    let ind_res = res.induce(&[h.n()])?;
    let reps = coset_reps(composition, &[h.n()]);
    let dm = m.dim();
    let e = h.e();
    let mut unit = Mat::zeros(e, ind_res.dim(), dm);
    let mut counit = Mat::zeros(e, dm, ind_res.dim());
    for (k, d) in reps.iter().enumerate() {
        let td = &table[d];
        let c = h.q_pow(-(perm::length(d) as i64));
        let tdinv = table[&perm::inverse(d)].scale(&c);
        for r in 0..dm {
            for s in 0..dm {
                counit.set(r, k * dm + s, td.get(r, s).clone());
                unit.set(k * dm + r, s, tdinv.get(r, s).clone());
            }
        }
    }
    let zeta = counit.mul(&unit);
    let norm = norm_element(h, composition);
    Ok(AdjunctionData { composition: composition.to_vec(), reps, ind_res, unit, counit, zeta, norm })
}

/// The counit of `(E, F)` on an `H(S_μ)`-module `N`: `E F N → N`, `T_d ⊗ n ↦ δ_{d,1} n`.
fn res_ind_counit(e: usize, dim_n: usize, index: usize) -> Mat {
    let mut m = Mat::zeros(e, dim_n, index * dim_n);
    for j in 0..dim_n {
        m.set(j, j, Cyclotomic::one(e));
    }
    m
}

/// The unit of `(F, E)` on `N`: `N → E F N`, `n ↦ T_1 ⊗ n`.
fn res_ind_unit(e: usize, dim_n: usize, index: usize) -> Mat {
    res_ind_counit(e, dim_n, index).transpose()
}

/// Outcome of the structural checks on an [`AdjunctionData`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AdjunctionReport {
    pub unit_is_linear: bool,
    pub counit_is_linear: bool,
    pub zeta_is_norm: bool,
    /// `ε'_{EM} ∘ E(η_M) = id_{EM}`.
    pub triangle_unit: bool,
    /// `E(ε_M) ∘ η'_{EM} = id_{EM}`.
    pub triangle_counit: bool,
    /// `F(ε'_N) ∘ η_{FN} = id_{FN}` for `N = E M`.
    pub triangle_unit_induced: bool,
    /// `ε_{FN} ∘ F(η'_N) = id_{FN}` for `N = E M`.
    pub triangle_counit_induced: bool,
}

impl AdjunctionReport {
    pub fn all(&self) -> bool {
        self.unit_is_linear
            && self.counit_is_linear
            && self.zeta_is_norm
            && self.triangle_unit
            && self.triangle_counit
            && self.triangle_unit_induced
            && self.triangle_counit_induced
    }
}

/// Checks linearity of `η`, `ε`, `ζ = N_μ` and the triangle identities of
/// both adjunctions `(F, E)` and `(E, F)`.
pub fn check_adjunction(h: &HeckeAlgebra, m: &HModule, data: &AdjunctionData) -> Result<AdjunctionReport> {
    let e = h.e();
    let dm = m.dim();
    let idx = data.reps.len();
    let mut rep = AdjunctionReport {
        unit_is_linear: m.is_homomorphism(&data.ind_res, &data.unit),
        counit_is_linear: data.ind_res.is_homomorphism(m, &data.counit),
        ..Default::default()
    };
    let table = m.act_all();
    rep.zeta_is_norm = data.zeta == m.act_element(h, &data.norm, &table);

    let id_m = Mat::identity(e, dm);
    rep.triangle_unit = res_ind_counit(e, dm, idx).mul(&data.unit) == id_m;
    rep.triangle_counit = data.counit.mul(&res_ind_unit(e, dm, idx)) == id_m;

    // Identities on F N, N = E M, which needs the H-action on F N.
    let fnm = &data.ind_res;
    let fn_table = fnm.act_all();
    let dfn = fnm.dim();
    let eps_n = res_ind_counit(e, dm, idx);
    let mut lhs = Mat::zeros(e, dfn, dfn);
    for (k, d) in data.reps.iter().enumerate() {
        // block k of η_{FN}(x) is q^{-l(d)} T_{d^{-1}} x; apply ε'_N to it
        let c = h.q_pow(-(perm::length(d) as i64));
        let block = eps_n.mul(&fn_table[&perm::inverse(d)]).scale(&c);
        for r in 0..dm {
            for s in 0..dfn {
                lhs.set(k * dm + r, s, block.get(r, s).clone());
            }
        }
    }
    let id_fn = Mat::identity(e, dfn);
    rep.triangle_unit_induced = lhs == id_fn;
    let mut rhs = Mat::zeros(e, dfn, dfn);
    let unit_n = res_ind_unit(e, dm, idx);
    for (k, d) in data.reps.iter().enumerate() {
        // T_d ⊗ n ↦ T_d·(T_1 ⊗ n) inside F N
        let block = fn_table[d].mul(&unit_n);
        for r in 0..dfn {
            for s in 0..dm {
                rhs.set(r, k * dm + s, block.get(r, s).clone());
            }
        }
    }
    rep.triangle_counit_induced = rhs == id_fn;
    Ok(rep)
}

/// `ζ_N ∘ f = f ∘ ζ_M` for every `f` in a basis of `Hom(M, N)`.
pub fn check_zeta_naturality(h: &HeckeAlgebra, m: &HModule, n: &HModule, composition: &[usize]) -> Result<bool> {
    let norm = norm_element(h, composition);
    let zm = m.act_element(h, &norm, &m.act_all());
    let zn = n.act_element(h, &norm, &n.act_all());
    Ok(m.hom_space(n)?.iter().all(|f| zn.mul(f) == f.mul(&zm)))
}

/// `Tr(β) = ε_M F(β) η_M = Σ_d T_d β q^{-l(d)} T_{d^{-1}}` for `β ∈ End_{H_μ}(E M)`.
pub fn relative_trace(h: &HeckeAlgebra, table: &BTreeMap<Perm, Mat>, composition: &[usize], beta: &Mat) -> Mat {
    let mut out = Mat::zeros(h.e(), beta.rows(), beta.cols());
    for d in coset_reps(composition, &[h.n()]) {
        let c = h.q_pow(-(perm::length(&d) as i64));
        let t = table[&d].mul(beta).mul(&table[&perm::inverse(&d)]);
        out.add_scaled(&c, &t);
    }
    out
}

/// The three Higman conditions compared on one `(M, μ)`, `M` indecomposable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HigmanReport {
    /// `M | F E M`, via the trace ideal of `Hom` spaces.
    pub summand: bool,
    /// `Id_M ∈ Tr(End_{H_μ}(E M))`.
    pub trace_contains_identity: bool,
    /// `η_M` has a left inverse.
    pub unit_split: bool,
    /// `ε_M` has a right inverse.
    pub counit_split: bool,
}

impl HigmanReport {
    pub fn consistent(&self) -> bool {
        let v = self.summand;
        self.trace_contains_identity == v && self.unit_split == v && self.counit_split == v
    }
}

/// Whether `Id` lies in the span of `{π ∘ ι}` for `ι ∈ Hom(M, N)`, `π ∈ Hom(N, M)`.
pub fn trace_ideal_contains_identity(m: &HModule, n: &HModule) -> Result<bool> {
    let into = m.hom_space(n)?;
    let back = n.hom_space(m)?;
    let e = m.e();
    let mut span = super::linalg::SpanBasis::new(e, m.dim() * m.dim());
    for p in &back {
        for i in &into {
            span.insert(p.mul(i).flatten());
        }
    }
    Ok(span.contains(&Mat::identity(e, m.dim()).flatten()))
}

/// Whether some linear combination of `maps` composed with `fixed` gives the identity.
fn splits(e: usize, maps: &[Mat], compose: impl Fn(&Mat) -> Mat, dim: usize) -> bool {
    let cols: Vec<Vector> = maps.iter().map(|f| compose(f).flatten()).collect();
    if cols.is_empty() {
        return dim == 0;
    }
    Mat::from_columns(e, &cols, dim * dim).solve(&Mat::identity(e, dim).flatten()).is_some()
}

pub fn higman_report(h: &HeckeAlgebra, m: &HModule, composition: &[usize]) -> Result<HigmanReport> {
    let data = adjunction_data(h, m, composition)?;
    let e = h.e();
    let dm = m.dim();
    let fem = &data.ind_res;
    let summand = trace_ideal_contains_identity(m, fem)?;
    let table = m.act_all();
    let res = m.restrict(composition)?;
    let traces: Vec<Mat> = res.end_algebra().iter().map(|b| relative_trace(h, &table, composition, b)).collect();
    for t in &traces {
        if !m.is_homomorphism(m, t) {
            return Err(Error::Convention(format!("relative trace is not H-linear for μ = {composition:?}")));
        }
    }
    let trace_contains_identity = splits(e, &traces, Mat::clone, dm);
    let unit_split = splits(e, &fem.hom_space(m)?, |p| p.mul(&data.unit), dm);
    let counit_split = splits(e, &m.hom_space(fem)?, |s| data.counit.mul(s), dm);
    Ok(HigmanReport { summand, trace_contains_identity, unit_split, counit_split })
}
