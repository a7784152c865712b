//! Module-level checks of the Hecke engine at small `n`.

use num_bigint::BigUint;
use vertexcalc_core::blocks::{block_of, parabolic_types, predicted_vertex_of_block, ParabolicType};
use vertexcalc_core::hecke::adjunction::{
    adjunction_data, check_adjunction, check_dual_bases, check_zeta_naturality, higman_report, norm_element,
};
use vertexcalc_core::hecke::decomposition::module_system;
use vertexcalc_core::hecke::radical::algebra_radical;
use vertexcalc_core::hecke::specht::{simple_module, specht_module};
use vertexcalc_core::hecke::vertex::{vertex_of, vertex_of_with, ScanMethod};
use vertexcalc_core::hecke::{Cyclotomic, HModule, HeckeAlgebra};
use vertexcalc_core::partition::enumerate_partitions;
use vertexcalc_core::Partition;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn n2_e2_worked_values() {
    let h = HeckeAlgebra::new(2, 2).unwrap();
    let rad = algebra_radical(&h);
    assert_eq!(rad.len(), 1);
    assert_eq!(rad[0][0], rad[0][1], "radical spanned by T + 1");

    // N = 2 + 2T for the trivial parabolic at q = -1
    let n = norm_element(&h, &[1, 1]);
    assert_eq!(n, vec![Cyclotomic::from_int(2, 2), Cyclotomic::from_int(2, 2)]);

    let sign = simple_module(&h, &p("1,1")).unwrap().unwrap();
    assert_eq!(sign.action(1).get(0, 0), &Cyclotomic::from_int(2, -1));
    assert!(simple_module(&h, &p("2")).unwrap().is_none());
    let data = adjunction_data(&h, &sign, &[1, 1]).unwrap();
    assert!(data.zeta.is_zero());
    assert_eq!(vertex_of(&h, &sign).unwrap().vertex, ParabolicType::new([2]));
    assert_eq!(vertex_of(&h, &HModule::regular(&h)).unwrap().vertex, ParabolicType::trivial());
}

#[test]
fn specht_dimensions_are_tableau_counts() {
    for n in 1..=4 {
        for e in 2..=4 {
            let h = HeckeAlgebra::new(n, e).unwrap();
            for lambda in enumerate_partitions(n) {
                let s = specht_module(&h, &lambda).unwrap();
                assert_eq!(BigUint::from(s.module().dim()), lambda.syt_count(), "{lambda}");
                s.module().check_relations().unwrap();
            }
        }
    }
}

#[test]
fn simples_exist_exactly_for_restricted_labels() {
    for n in 1..=4 {
        for e in 2..=4 {
            let h = HeckeAlgebra::new(n, e).unwrap();
            for lambda in enumerate_partitions(n) {
                let d = simple_module(&h, &lambda).unwrap();
                assert_eq!(d.is_some(), lambda.is_e_restricted(e).unwrap(), "{lambda} e={e}");
                if let Some(d) = d {
                    assert_eq!(d.end_algebra().len(), 1, "D_{lambda} is absolutely simple");
                }
            }
        }
    }
}

#[test]
fn wedderburn_dimension_identity() {
    for n in 1..=4 {
        for e in 2..=4 {
            let h = HeckeAlgebra::new(n, e).unwrap();
            let sys = module_system(&h).unwrap();
            let squares: usize = sys.simple_dims().iter().map(|d| d * d).sum();
            assert_eq!(squares + algebra_radical(&h).len(), h.dim(), "n={n} e={e}");
            assert_eq!(sys.simple_character_rank(&h), sys.simples.len());
        }
    }
}

#[test]
fn semisimple_case_has_identity_decomposition_matrix() {
    let h = HeckeAlgebra::new(3, 5).unwrap();
    let sys = module_system(&h).unwrap();
    let d = sys.decomposition_matrix(&h).unwrap();
    for (i, row) in d.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            assert_eq!(x, i64::from(i == j));
        }
    }
}

#[test]
fn norm_elements_use_dual_bases() {
    for n in 1..=4 {
        for e in 2..=3 {
            assert!(check_dual_bases(&HeckeAlgebra::new(n, e).unwrap()));
        }
    }
}

#[test]
fn adjunction_identities_and_higman_criterion() {
    for n in 2..=3 {
        for e in 2..=3 {
            let h = HeckeAlgebra::new(n, e).unwrap();
            let mut battery: Vec<HModule> = enumerate_partitions(n)
                .iter()
                .map(|l| specht_module(&h, l).unwrap().ideal.module)
                .collect();
            battery.extend(enumerate_partitions(n).iter().filter_map(|l| simple_module(&h, l).unwrap()));
            for t in parabolic_types(n) {
                let comp = t.composition(n).unwrap();
                for m in &battery {
                    let data = adjunction_data(&h, m, &comp).unwrap();
                    assert!(check_adjunction(&h, m, &data).unwrap().all(), "n={n} e={e} {comp:?}");
                    for other in &battery {
                        assert!(check_zeta_naturality(&h, m, other, &comp).unwrap());
                    }
                    if m.end_algebra().len() == 1 {
                        assert!(higman_report(&h, m, &comp).unwrap().consistent());
                    }
                }
            }
        }
    }
}

#[test]
fn simple_vertices_match_block_weight() {
    for n in 1..=4 {
        for e in 2..=4 {
            let h = HeckeAlgebra::new(n, e).unwrap();
            for lambda in enumerate_partitions(n) {
                let Some(d) = simple_module(&h, &lambda).unwrap() else { continue };
                let b = block_of(&lambda, e).unwrap();
                let scan = vertex_of(&h, &d).unwrap();
                assert_eq!(scan.vertex, predicted_vertex_of_block(&b), "D_{lambda} e={e}");
            }
        }
    }
}

#[test]
fn trace_pairing_agrees_with_explicit_induction() {
    for n in 2..=4 {
        for e in 2..=3 {
            let h = HeckeAlgebra::new(n, e).unwrap();
            for lambda in enumerate_partitions(n) {
                let Some(d) = simple_module(&h, &lambda).unwrap() else { continue };
                let a = vertex_of_with(&h, &d, ScanMethod::TracePairing).unwrap();
                let b = vertex_of_with(&h, &d, ScanMethod::ExplicitInduction).unwrap();
                assert_eq!(a, b, "D_{lambda} n={n} e={e}");
            }
        }
    }
}

#[test]
fn projective_from_a_larger_core() {
    // D_(3,2,1) is a projective simple at n = 6, e = 2; its restriction is a
    // projective indecomposable although no 2-core of size 5 exists
    let h6 = HeckeAlgebra::with_guard(6, 2, 6).unwrap();
    let d = simple_module(&h6, &p("3,2,1")).unwrap().unwrap();
    let m = d.restrict_to_rank(5).unwrap();
    let h = HeckeAlgebra::new(5, 2).unwrap();
    assert_eq!(m.dim(), 16);
    assert_eq!(vertex_of(&h, &m).unwrap().vertex, ParabolicType::trivial());
}

#[test]
fn induced_simples_keep_small_vertices() {
    let h3 = HeckeAlgebra::new(3, 2).unwrap();
    let d = simple_module(&h3, &p("1,1,1")).unwrap().unwrap();
    let m = d.pad(1).induce(&[4]).unwrap();
    let h = HeckeAlgebra::new(4, 2).unwrap();
    assert_eq!(vertex_of(&h, &m).unwrap().vertex, ParabolicType::new([2]));
}
