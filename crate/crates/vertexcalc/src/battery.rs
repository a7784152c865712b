//! Test batteries of `H_q(S_n)`-modules with certified indecomposability.

use rayon::prelude::*;
use vertexcalc_core::blocks::{block_of, BlockId};
use vertexcalc_core::hecke::decomposition::{character_vector, module_system, ModuleSystem};
use vertexcalc_core::hecke::linalg::Mat;
use vertexcalc_core::hecke::specht::{simple_module, specht_module};
use vertexcalc_core::hecke::vertex::certify_indecomposable;
use vertexcalc_core::hecke::{HModule, HeckeAlgebra};
use vertexcalc_core::partition::{enumerate_partitions, is_e_core};
use vertexcalc_core::{Partition, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BatteryOptions {
    /// Include Specht modules whose endomorphism ring is local.
    pub spechts: bool,
    /// Include induced simples, restricted projective simples and the regular module.
    pub extended: bool,
    /// Modules above this dimension are skipped.
    pub max_dim: usize,
}

impl Default for BatteryOptions {
    fn default() -> Self {
        BatteryOptions { spechts: false, extended: false, max_dim: 24 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    Simple(Partition),
    Specht(Partition),
    /// `Ind^{S_n}_{S_m × S_1^{n-m}} D_λ`.
    InducedSimple(Partition),
    /// `Res^{S_{n+1}}_{S_n} S_ρ` for an e-core `ρ ⊢ n + 1`.
    RestrictedCore(Partition),
    Regular,
}

impl Origin {
    pub fn label(&self) -> String {
        match self {
            Origin::Simple(l) => format!("D({l})"),
            Origin::Specht(l) => format!("S({l})"),
            Origin::InducedSimple(l) => format!("Ind D({l})"),
            Origin::RestrictedCore(l) => format!("Res S({l})"),
            Origin::Regular => String::from("H"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Item {
    pub origin: Origin,
    pub module: HModule,
    /// Block read off from the composition factors; `None` if they span blocks.
    pub block: Option<BlockId>,
    /// Basis of `End_H(M)` when `M` is certified indecomposable.
    pub end: Option<Vec<Mat>>,
}

impl Item {
    pub fn label(&self) -> String {
        self.origin.label()
    }
}

#[derive(Clone, Debug)]
pub struct Battery {
    pub h: HeckeAlgebra,
    pub system: ModuleSystem,
    pub items: Vec<Item>,
    /// Candidates not built because of the dimension guard, with their dimension.
    pub oversized: Vec<(Origin, usize)>,
}

/// The block containing all composition factors of `m`.
fn block_from_factors(h: &HeckeAlgebra, sys: &ModuleSystem, m: &HModule) -> Result<Option<BlockId>> {
    let mult = sys.decompose(h, &character_vector(h, m))?;
    let mut found: Option<BlockId> = None;
    for (c, mu) in mult.iter().zip(&sys.restricted) {
        if *c == 0 {
            continue;
        }
        let b = block_of(mu, h.e())?;
        match &found {
            Some(prev) if *prev != b => return Ok(None),
            _ => found = Some(b),
        }
    }
    Ok(found)
}

pub fn build(n: usize, e: usize, opts: BatteryOptions) -> Result<Battery> {
    let h = HeckeAlgebra::new(n, e)?;
    let system = module_system(&h)?;
    let mut candidates: Vec<(Origin, HModule)> = Vec::new();
    let mut oversized = Vec::new();
    for (l, d) in system.restricted.iter().zip(&system.simples) {
        candidates.push((Origin::Simple(l.clone()), d.clone()));
    }
    if opts.spechts {
        for (l, s) in system.partitions.iter().zip(&system.spechts) {
            candidates.push((Origin::Specht(l.clone()), s.clone()));
        }
    }
    if opts.extended {
        for m in 2..n {
            let hm = HeckeAlgebra::new(m, e)?;
            for l in enumerate_partitions(m) {
                let Some(d) = simple_module(&hm, &l)? else { continue };
                let dim = d.dim() * (m + 1..=n).product::<usize>();
                if dim > opts.max_dim {
                    oversized.push((Origin::InducedSimple(l), dim));
                    continue;
                }
                candidates.push((Origin::InducedSimple(l), d.pad(n - m).induce(&[n])?));
            }
        }
        if n < vertexcalc_core::hecke::algebra::DEFAULT_MAX_N {
            let up = HeckeAlgebra::new(n + 1, e)?;
            for rho in enumerate_partitions(n + 1) {
                if !is_e_core(&rho, e)? {
                    continue;
                }
                let s = specht_module(&up, &rho)?;
                let dim = s.module().dim();
                if dim > opts.max_dim {
                    oversized.push((Origin::RestrictedCore(rho), dim));
                    continue;
                }
                candidates.push((Origin::RestrictedCore(rho), s.module().restrict_to_rank(n)?));
            }
        }
        if h.dim() <= opts.max_dim {
            candidates.push((Origin::Regular, HModule::regular(&h)));
        } else {
            oversized.push((Origin::Regular, h.dim()));
        }
    }
    let items = candidates
        .into_par_iter()
        .map(|(origin, module)| {
            let block = match &origin {
                Origin::Simple(l) | Origin::Specht(l) => Some(block_of(l, e)?),
                _ => block_from_factors(&h, &system, &module)?,
            };
            let end = certify_indecomposable(&module).ok();
            Ok(Item { origin, module, block, end })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Battery { h, system, items, oversized })
}
