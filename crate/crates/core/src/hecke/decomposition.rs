//! Decomposition and Cartan numbers read off from characters.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use super::algebra::HeckeAlgebra;
use super::cyclotomic::Cyclotomic;
use super::linalg::{Mat, SpanBasis, Vector};
use super::module::HModule;
use super::specht::{contravariant_radical, specht_module};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

/// `tr(T_w)` for every `w`, in the algebra's basis order.
pub fn character_vector(h: &HeckeAlgebra, m: &HModule) -> Vector {
    let chi = m.character();
    h.perms().iter().map(|w| chi[w].clone()).collect()
}

/// Specht and simple modules of `H_q(S_n)` with their characters.
#[derive(Clone, Debug)]
pub struct ModuleSystem {
    pub partitions: Vec<Partition>,
    pub spechts: Vec<HModule>,
    pub specht_characters: Vec<Vector>,
    /// `e`-restricted labels, in the order of `partitions`.
    pub restricted: Vec<Partition>,
    pub simples: Vec<HModule>,
    pub simple_characters: Vec<Vector>,
}

pub fn module_system(h: &HeckeAlgebra) -> Result<ModuleSystem> {
    let partitions = enumerate_partitions(h.n());
    let mut sys = ModuleSystem {
        partitions: partitions.clone(),
        spechts: Vec::new(),
        specht_characters: Vec::new(),
        restricted: Vec::new(),
        simples: Vec::new(),
        simple_characters: Vec::new(),
    };
    for lambda in &partitions {
        let s = specht_module(h, lambda)?;
        let rad = contravariant_radical(h, &s);
        sys.specht_characters.push(character_vector(h, s.module()));
        if let Some(d) = rad.simple {
            sys.simple_characters.push(character_vector(h, &d.module));
            sys.simples.push(d.module);
            sys.restricted.push(lambda.clone());
        }
        sys.spechts.push(s.ideal.module);
    }
    Ok(sys)
}

impl ModuleSystem {
    /// Rank of the matrix of simple characters.
    pub fn simple_character_rank(&self, h: &HeckeAlgebra) -> usize {
        let rows = self.simple_characters.clone();
        Mat::from_rows(h.e(), rows, h.dim()).rank()
    }

    /// Integer coefficients of `chi` in the simple characters.
    pub fn decompose(&self, h: &HeckeAlgebra, chi: &[Cyclotomic]) -> Result<Vec<i64>> {
        let cols = &self.simple_characters;
        let a = Mat::from_columns(h.e(), cols, h.dim());
        let x = a.solve(chi).ok_or_else(|| Error::Convention(String::from("character outside the simple span")))?;
        x.iter().map(integer).collect()
    }

    /// `[S_λ : D_μ]` with rows `partitions` and columns `restricted`.
    pub fn decomposition_matrix(&self, h: &HeckeAlgebra) -> Result<Vec<Vec<i64>>> {
        self.specht_characters.iter().map(|chi| self.decompose(h, chi)).collect()
    }

    pub fn simple_dims(&self) -> Vec<usize> {
        self.simples.iter().map(HModule::dim).collect()
    }

    /// Cartan matrix `c_{μν}` from the bimodule character of `H`:
    /// `tr(x ↦ T_u x T_v) = Σ c_{μν} χ_μ(T_u) χ_ν(T_v)`.
    pub fn cartan_matrix(&self, h: &HeckeAlgebra) -> Result<Vec<Vec<i64>>> {
        let k = self.simples.len();
        let e = h.e();
        let mut span = SpanBasis::new(e, k);
        let mut chosen = Vec::new();
        for u in 0..h.dim() {
            let col: Vector = self.simple_characters.iter().map(|chi| chi[u].clone()).collect();
            if span.insert(col) {
                chosen.push(u);
            }
            if chosen.len() == k {
                break;
            }
        }
        if chosen.len() < k {
            return Err(Error::Convention(String::from("simple characters are linearly dependent")));
        }
        let x = Mat::from_rows(
            e,
            self.simple_characters.iter().map(|chi| chosen.iter().map(|&u| chi[u].clone()).collect()).collect(),
            k,
        );
        let mut b = Mat::zeros(e, k, k);
        for (a, &u) in chosen.iter().enumerate() {
            for (c, &v) in chosen.iter().enumerate() {
                b.set(a, c, bimodule_trace(h, u, v));
            }
        }
        let xinv = x.inverse()?;
        let c = xinv.transpose().mul(&b).mul(&xinv);
        (0..k).map(|i| (0..k).map(|j| integer(c.get(i, j))).collect()).collect()
    }

    /// `dim P(D_μ) = Σ_ν c_{μν} dim D_ν`.
    pub fn projective_dims(&self, cartan: &[Vec<i64>]) -> Vec<i64> {
        let dims = self.simple_dims();
        cartan.iter().map(|row| row.iter().zip(&dims).map(|(c, &d)| c * d as i64).sum()).collect()
    }
}

/// `tr(x ↦ T_u x T_v)` on the regular bimodule.
pub fn bimodule_trace(h: &HeckeAlgebra, u: usize, v: usize) -> Cyclotomic {
    let mut t = Cyclotomic::zero(h.e());
    let (pu, pv) = (h.perm(u), h.perm(v));
    for w in 0..h.dim() {
        let x = h.mul_basis_right(&h.mul_basis_left(pu, &h.basis_element(h.perm(w))), pv);
        t += &x[w];
    }
    t
}

fn integer(c: &Cyclotomic) -> Result<i64> {
    c.as_rational()
        .filter(|r| r.is_integer())
        .and_then(|r| r.to_integer().to_i64())
        .ok_or_else(|| Error::Convention(format!("expected an integer, found {c}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n3_e2() {
        let h = HeckeAlgebra::new(3, 2).unwrap();
        let sys = module_system(&h).unwrap();
        assert_eq!(sys.restricted.len(), 2);
        let d = sys.decomposition_matrix(&h).unwrap();
        // rows (3), (2,1), (1,1,1); columns (2,1), (1,1,1)
        assert_eq!(d, alloc::vec![alloc::vec![0, 1], alloc::vec![1, 0], alloc::vec![0, 1]]);
        let c = sys.cartan_matrix(&h).unwrap();
        assert_eq!(c, alloc::vec![alloc::vec![1, 0], alloc::vec![0, 2]]);
        assert_eq!(sys.projective_dims(&c), alloc::vec![2, 2]);
    }
}
