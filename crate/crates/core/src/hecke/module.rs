//! Finite-dimensional left modules over parabolic subalgebras `H(S_μ) ⊆ H(S_n)`,
//! given by the matrices of the generators `T_i` with `s_i ∈ S_μ`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::algebra::HeckeAlgebra;
use super::cyclotomic::Cyclotomic;
use super::linalg::{Mat, Vector};
use super::perm::{self, Perm};
use crate::error::{Error, Result};

/// Whether `fine` is a refinement of `coarse` (every block boundary of
/// `coarse` is one of `fine`).
pub fn refines(fine: &[usize], coarse: &[usize]) -> bool {
    let cuts = |c: &[usize]| -> Vec<usize> {
        c.iter()
            .scan(0, |s, &m| {
                *s += m;
                Some(*s)
            })
            .collect()
    };
    let f = cuts(fine);
    f.last() == cuts(coarse).last() && cuts(coarse).iter().all(|b| f.contains(b))
}

/// Minimal-length left coset representatives of `S_μ` inside `S_ν`, sorted by
/// length and then one-line notation (the identity comes first).
pub fn coset_reps(mu: &[usize], nu: &[usize]) -> Vec<Perm> {
    let n = nu.iter().sum();
    let mut reps: Vec<Perm> = perm::all_perms(n)
        .into_iter()
        .filter(|w| perm::in_young_subgroup(w, nu) && perm::is_min_left_coset_rep(w, mu))
        .collect();
    reps.sort_by_key(|w| (perm::length(w), w.clone()));
    reps
}

/// A left module over `H(S_μ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HModule {
    n: usize,
    e: usize,
    composition: Vec<usize>,
    dim: usize,
    actions: Vec<Option<Mat>>,
}

impl HModule {
    /// Builds a module from generator matrices, checking the defining relations.
    pub fn new(e: usize, composition: Vec<usize>, dim: usize, gens: Vec<(usize, Mat)>) -> Result<Self> {
        let m = Self::new_unchecked(e, composition, dim, gens)?;
        m.check_relations()?;
        Ok(m)
    }

    fn new_unchecked(e: usize, composition: Vec<usize>, dim: usize, gens: Vec<(usize, Mat)>) -> Result<Self> {
        let n: usize = composition.iter().sum();
        let allowed = perm::parabolic_generators(&composition);
        let mut actions = alloc::vec![None; n.max(1)];
        for (i, a) in gens {
            if !allowed.contains(&i) {
                return Err(Error::InvalidParameter(format!("T_{i} is not in H(S_{composition:?})")));
            }
            if a.rows() != dim || a.cols() != dim {
                return Err(Error::SizeMismatch { left: a.rows(), right: dim });
            }
            actions[i] = Some(a);
        }
        if let Some(i) = allowed.iter().find(|&&i| actions[i].is_none()) {
            return Err(Error::InvalidParameter(format!("missing action of T_{i}")));
        }
        Ok(HModule { n, e, composition, dim, actions })
    }

    /// The one-dimensional module of `H(S_μ)` on which `T_i` acts by `-1` in
    /// the blocks flagged in `sign` and by `q` elsewhere.
    pub fn one_dimensional(e: usize, composition: &[usize], sign: &[bool]) -> Result<Self> {
        if sign.len() != composition.len() {
            return Err(Error::SizeMismatch { left: sign.len(), right: composition.len() });
        }
        let blocks = perm::block_of_points(composition);
        let q = Cyclotomic::zeta(e);
        let gens = perm::parabolic_generators(composition)
            .into_iter()
            .map(|i| {
                let c = if sign[blocks[i]] { Cyclotomic::from_int(e, -1) } else { q.clone() };
                (i, Mat::scalar(e, 1, &c))
            })
            .collect();
        Self::new(e, composition.to_vec(), 1, gens)
    }

    /// All one-dimensional modules of `H(S_μ)`. Blocks of size one carry no
    /// choice, so they are fixed to the index representation.
    pub fn all_one_dimensional(e: usize, composition: &[usize]) -> Vec<Self> {
        let free: Vec<usize> = (0..composition.len()).filter(|&b| composition[b] >= 2).collect();
        (0..1usize << free.len())
            .map(|mask| {
                let mut sign = alloc::vec![false; composition.len()];
                for (k, &b) in free.iter().enumerate() {
                    sign[b] = mask >> k & 1 == 1;
                }
                Self::one_dimensional(e, composition, &sign).expect("one-dimensional relations")
            })
            .collect()
    }

    /// The left regular module of `H(S_n)`.
    pub fn regular(h: &HeckeAlgebra) -> Self {
        let gens = (1..h.n()).map(|i| (i, h.left_regular_gen(i))).collect();
        Self::new_unchecked(h.e(), alloc::vec![h.n()], h.dim(), gens).expect("regular module")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn composition(&self) -> &[usize] {
        &self.composition
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> Vec<usize> {
        perm::parabolic_generators(&self.composition)
    }

    pub fn action(&self, i: usize) -> &Mat {
        self.actions[i].as_ref().expect("generator outside the parabolic")
    }

    /// Quadratic, braid and commutation relations as matrix identities.
    pub fn check_relations(&self) -> Result<()> {
        let q = Cyclotomic::zeta(self.e);
        let id = Mat::identity(self.e, self.dim);
        let gens = self.generators();
        for &i in &gens {
            let t = self.action(i);
            if !t.sub(&id.scale(&q)).mul(&t.add(&id)).is_zero() {
                return Err(Error::Convention(format!("quadratic relation fails for T_{i}")));
            }
        }
        for (a, &i) in gens.iter().enumerate() {
            for &j in &gens[a + 1..] {
                let (ti, tj) = (self.action(i), self.action(j));
                let ok = if j == i + 1 {
                    ti.mul(tj).mul(ti) == tj.mul(ti).mul(tj)
                } else {
                    ti.mul(tj) == tj.mul(ti)
                };
                if !ok {
                    return Err(Error::Convention(format!("braid relation fails for T_{i}, T_{j}")));
                }
            }
        }
        Ok(())
    }

    /// Matrix of `T_w` for `w ∈ S_μ`.
    pub fn act(&self, w: &[u8]) -> Mat {
        assert!(perm::in_young_subgroup(w, &self.composition), "element outside the parabolic");
        let mut m = Mat::identity(self.e, self.dim);
        for i in perm::reduced_word(w) {
            m = m.mul(self.action(i));
        }
        m
    }

    /// Matrices of `T_w` for every `w ∈ S_μ`, built along increasing length.
    pub fn act_all(&self) -> BTreeMap<Perm, Mat> {
        let mut table = BTreeMap::new();
        let id = perm::identity(self.n);
        table.insert(id.clone(), Mat::identity(self.e, self.dim));
        let mut frontier = alloc::vec![id];
        let gens = self.generators();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                for &i in &gens {
                    let ws = perm::mul_right_gen(w, i);
                    if table.contains_key(&ws) || perm::length(&ws) < perm::length(w) {
                        continue;
                    }
                    let m = table[w].mul(self.action(i));
                    table.insert(ws.clone(), m);
                    next.push(ws);
                }
            }
            frontier = next;
        }
        table
    }

    /// Matrix of an algebra element `Σ c_w T_w` (coefficients indexed as in `h`).
    pub fn act_element(&self, h: &HeckeAlgebra, x: &[Cyclotomic], table: &BTreeMap<Perm, Mat>) -> Mat {
        let mut m = Mat::zeros(self.e, self.dim, self.dim);
        for (k, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m.add_scaled(c, &table[h.perm(k)]);
            }
        }
        m
    }

    /// Restriction to `H(S_ν)` for a refinement `ν` of the current composition.
    pub fn restrict(&self, nu: &[usize]) -> Result<Self> {
        if !refines(nu, &self.composition) {
            return Err(Error::InvalidParameter(format!("{nu:?} does not refine {:?}", self.composition)));
        }
        let gens = perm::parabolic_generators(nu).into_iter().map(|i| (i, self.action(i).clone())).collect();
        Self::new_unchecked(self.e, nu.to_vec(), self.dim, gens)
    }

    /// Appends `k` fixed points: the same module over `H(S_{μ,1^k})`.
    pub fn pad(&self, k: usize) -> Self {
        let mut composition = self.composition.clone();
        composition.extend(core::iter::repeat_n(1, k));
        let gens = self.generators().into_iter().map(|i| (i, self.action(i).clone())).collect();
        Self::new_unchecked(self.e, composition, self.dim, gens).expect("padding keeps generators")
    }

    /// `Res^{S_n}_{S_m}` for an `H(S_n)`-module, as a module over `H(S_m)`.
    pub fn restrict_to_rank(&self, m: usize) -> Result<Self> {
        if self.composition != [self.n] || m == 0 || m > self.n {
            return Err(Error::InvalidParameter(format!("cannot restrict {:?} to S_{m}", self.composition)));
        }
        let gens = (1..m).map(|i| (i, self.action(i).clone())).collect();
        Self::new_unchecked(self.e, alloc::vec![m], self.dim, gens)
    }

    /// Induction to `H(S_ν)` for a coarsening `ν` of the current composition, on
    /// the basis `T_d ⊗ m_j` (index `d·dim + j`) over minimal coset representatives.
    pub fn induce(&self, nu: &[usize]) -> Result<Self> {
        let mu = &self.composition;
        if !refines(mu, nu) {
            return Err(Error::InvalidParameter(format!("{mu:?} does not refine {nu:?}")));
        }
        let reps = coset_reps(mu, nu);
        let index: BTreeMap<&Perm, usize> = reps.iter().enumerate().map(|(k, d)| (d, k)).collect();
        let dm = self.dim;
        let dim = reps.len() * dm;
        let q = Cyclotomic::zeta(self.e);
        let q1 = &q - &Cyclotomic::one(self.e);
        let mut gens = Vec::new();
        for i in perm::parabolic_generators(nu) {
            let mut a = Mat::zeros(self.e, dim, dim);
            for (k, d) in reps.iter().enumerate() {
                let sd = perm::mul_left_gen(i, d);
                let up = perm::length(&sd) > perm::length(d);
                match index.get(&sd) {
                    Some(&k2) if up => {
                        for j in 0..dm {
                            a.set(k2 * dm + j, k * dm + j, Cyclotomic::one(self.e));
                        }
                    }
                    Some(&k2) => {
                        for j in 0..dm {
                            a.set(k2 * dm + j, k * dm + j, q.clone());
                            a.set(k * dm + j, k * dm + j, q1.clone());
                        }
                    }
                    None => {
                        // s_i·d = d·s_j with s_j ∈ S_μ
                        let dinv = perm::inverse(d);
                        let lo = dinv[i - 1].min(dinv[i]) as usize;
                        debug_assert_eq!(dinv[i - 1].abs_diff(dinv[i]), 1);
                        let tj = self.action(lo + 1);
                        for j in 0..dm {
                            for r in 0..dm {
                                let c = tj.get(r, j);
                                if !c.is_zero() {
                                    a.set(k * dm + r, k * dm + j, c.clone());
                                }
                            }
                        }
                    }
                }
            }
            gens.push((i, a));
        }
        Self::new_unchecked(self.e, nu.to_vec(), dim, gens)
    }

    /// The twist `d ⊗ M`: a module over `H(S_κ)` with `κ` given by `target`,
    /// where `T_k` acts as `T_{k'}` for `d^{-1} s_k d = s_{k'}`.
    pub fn conjugate(&self, d: &[u8], target: &[usize]) -> Result<Self> {
        let dinv = perm::inverse(d);
        let mut gens = Vec::new();
        for k in perm::parabolic_generators(target) {
            let (a, b) = (dinv[k - 1] as usize, dinv[k] as usize);
            if b != a + 1 || self.actions.get(b).and_then(Option::as_ref).is_none() {
                return Err(Error::InvalidParameter(String::from("conjugation does not map generators to generators")));
            }
            gens.push((k, self.action(b).clone()));
        }
        Self::new_unchecked(self.e, target.to_vec(), self.dim, gens)
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.composition != other.composition {
            return Err(Error::InvalidParameter(String::from("direct sum over different parabolics")));
        }
        let dim = self.dim + other.dim;
        let gens = self
            .generators()
            .into_iter()
            .map(|i| {
                let mut a = Mat::zeros(self.e, dim, dim);
                for r in 0..self.dim {
                    for c in 0..self.dim {
                        a.set(r, c, self.action(i).get(r, c).clone());
                    }
                }
                for r in 0..other.dim {
                    for c in 0..other.dim {
                        a.set(self.dim + r, self.dim + c, other.action(i).get(r, c).clone());
                    }
                }
                (i, a)
            })
            .collect();
        Self::new_unchecked(self.e, self.composition.clone(), dim, gens)
    }

    /// Whether a matrix `X: self → other` commutes with every generator.
    pub fn is_homomorphism(&self, other: &Self, x: &Mat) -> bool {
        self.generators().into_iter().all(|i| x.mul(self.action(i)) == other.action(i).mul(x))
    }

    /// Basis of `Hom(self, other)` as `other.dim × self.dim` matrices.
    pub fn hom_space(&self, other: &Self) -> Result<Vec<Mat>> {
        if self.composition != other.composition {
            return Err(Error::InvalidParameter(String::from("Hom between modules over different parabolics")));
        }
        let (dm, dn) = (self.dim, other.dim);
        let vars = dm * dn;
        let mut rows: Vec<Vector> = Vec::new();
        for i in self.generators() {
            let (a, b) = (self.action(i), other.action(i));
            for r in 0..dn {
                for c in 0..dm {
                    let mut row = super::linalg::zero_vector(self.e, vars);
                    for t in 0..dm {
                        let x = a.get(t, c);
                        if !x.is_zero() {
                            row[r * dm + t] += x;
                        }
                    }
                    for t in 0..dn {
                        let x = b.get(r, t);
                        if !x.is_zero() {
                            row[t * dm + c] -= x;
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        let sys = Mat::from_rows(self.e, rows, vars);
        Ok(sys.nullspace().into_iter().map(|v| Mat::from_flat(self.e, dn, dm, v)).collect())
    }

    pub fn end_algebra(&self) -> Vec<Mat> {
        self.hom_space(self).expect("same parabolic")
    }

    /// Character `w ↦ tr(T_w)` on `S_μ`, keyed by one-line notation.
    pub fn character(&self) -> BTreeMap<Perm, Cyclotomic> {
        self.act_all().into_iter().map(|(w, m)| (w, m.trace())).collect()
    }
}

/// Dimension of `A / rad(A)` for a subalgebra `A ⊆ Mat_d` spanned by `basis`.
///
/// In characteristic zero the radical of an algebra acting faithfully is the
/// kernel of the trace form `(x, y) ↦ tr(xy)`.
pub fn semisimple_quotient_dim(e: usize, basis: &[Mat]) -> usize {
    trace_form(e, basis).rank()
}

/// Basis of `rad(A)` for `A ⊆ Mat_d` spanned by `basis`.
pub fn matrix_algebra_radical(e: usize, basis: &[Mat]) -> Vec<Mat> {
    let g = trace_form(e, basis);
    g.nullspace()
        .into_iter()
        .map(|v| {
            let mut m = Mat::zeros(e, basis[0].rows(), basis[0].cols());
            for (c, b) in v.iter().zip(basis) {
                m.add_scaled(c, b);
            }
            m
        })
        .collect()
}

fn trace_form(e: usize, basis: &[Mat]) -> Mat {
    let k = basis.len();
    let mut g = Mat::zeros(e, k, k);
    for a in 0..k {
        for b in a..k {
            let t = basis[a].mul(&basis[b]).trace();
            g.set(b, a, t.clone());
            g.set(a, b, t);
        }
    }
    g
}
