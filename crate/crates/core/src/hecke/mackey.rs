//! Character-level Mackey formula for `Res_ν Ind^{S_n}_{S_μ}` on modules.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::cyclotomic::Cyclotomic;
use super::module::HModule;
use super::perm::Perm;
use crate::error::{Error, Result};
use crate::kgroup::{double_cosets, YoungSubgroup};

pub type Character = BTreeMap<Perm, Cyclotomic>;

/// The minimal double coset representative `d` of a table: the points of
/// `μ`-block `j` go, in order, to the pieces `(0, j), (1, j), …`, and piece
/// `(i, j)` sits inside `ν`-block `i` after the pieces `(i, j')`, `j' < j`.
pub fn table_permutation(table: &[Vec<usize>], nu: &[usize], mu: &[usize]) -> Perm {
    let n: usize = mu.iter().sum();
    let mut nu_start = alloc::vec![0usize; nu.len()];
    for i in 1..nu.len() {
        nu_start[i] = nu_start[i - 1] + nu[i - 1];
    }
    let mut d = alloc::vec![0u8; n];
    let mut src = 0;
    for j in 0..mu.len() {
        for (i, row) in table.iter().enumerate() {
            let offset: usize = row[..j].iter().sum();
            for t in 0..row[j] {
                d[src] = (nu_start[i] + offset + t) as u8;
                src += 1;
            }
        }
    }
    d
}

fn add_into(acc: &mut Character, chi: Character) {
    for (w, c) in chi {
        *acc.entry(w).or_insert_with(|| Cyclotomic::zero(c.order())) += &c;
    }
}

/// Both sides of the Mackey formula as characters of `H(S_ν)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMackey {
    pub lhs: Character,
    pub rhs: Character,
    pub lhs_dim: usize,
    pub rhs_dim: usize,
}

impl ModuleMackey {
    pub fn holds(&self) -> bool {
        self.lhs_dim == self.rhs_dim && self.lhs == self.rhs
    }
}

/// Compares `Res_ν Ind_μ M` with `⊕_d Ind^{S_ν}_{S_ν ∩ dS_μd^{-1}} d(Res M)`
/// for an `H(S_μ)`-module `M`, one summand per contingency table.
pub fn mackey_module_check(nu: &[usize], m: &HModule) -> Result<ModuleMackey> {
    let mu = m.composition().to_vec();
    let n = m.n();
    if nu.iter().sum::<usize>() != n {
        return Err(Error::SizeMismatch { left: nu.iter().sum(), right: n });
    }
    let lhs_mod = m.induce(&[n])?.restrict(nu)?;
    let lhs = lhs_mod.character();
    let mut rhs = Character::new();
    let mut rhs_dim = 0;
    let (ynu, ymu) = (YoungSubgroup::new(nu.to_vec())?, YoungSubgroup::new(mu.clone())?);
    for coset in double_cosets(&ynu, &ymu)? {
        let d = table_permutation(&coset.table, nu, &mu);
        let piece = m
            .restrict(&coset.column_composition())?
            .conjugate(&d, &coset.row_composition())?
            .induce(nu)?;
        rhs_dim += piece.dim();
        add_into(&mut rhs, piece.character());
    }
    Ok(ModuleMackey { lhs, rhs, lhs_dim: lhs_mod.dim(), rhs_dim })
}
