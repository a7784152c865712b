//! LLT canonical bases against the Hecke engine and small closed forms.

use vertexcalc_core::blocks::block_of;
use vertexcalc_core::fock::{
    check_divided_power_identity, evaluate_at_one, f_divided, llt_canonical_basis, specht_to_simple, FockVector,
    LaurentPoly,
};
use vertexcalc_core::hecke::decomposition::module_system;
use vertexcalc_core::hecke::HeckeAlgebra;
use vertexcalc_core::kgroup::{KClass, YoungSubgroup};
use vertexcalc_core::partition::enumerate_partitions;
use vertexcalc_core::Partition;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn invariants_hold_up_to_eight() {
    for n in 0..=8 {
        for e in 2..=4 {
            llt_canonical_basis(n, e).unwrap().check_invariants().unwrap();
        }
    }
}

#[test]
fn llt_matches_character_decomposition() {
    for n in 1..=4 {
        for e in 2..=4 {
            let h = HeckeAlgebra::new(n, e).unwrap();
            let sys = module_system(&h).unwrap();
            let llt = llt_canonical_basis(n, e).unwrap();
            assert_eq!(llt.cols, sys.restricted);
            assert_eq!(evaluate_at_one(&llt), sys.decomposition_matrix(&h).unwrap(), "n={n} e={e}");
        }
    }
}

#[test]
fn n3_e2_column_values() {
    let d = llt_canonical_basis(3, 2).unwrap();
    let v = LaurentPoly::monomial(1, 1);
    assert_eq!(d.entry(&p("2,1"), &p("2,1")), Some(&LaurentPoly::one()));
    assert_eq!(d.entry(&p("3"), &p("1,1,1")), Some(&v));
    assert_eq!(d.entry(&p("1,1,1"), &p("1,1,1")), Some(&LaurentPoly::one()));
    assert!(d.entry(&p("2,1"), &p("1,1,1")).unwrap().is_zero());
}

#[test]
fn weight_one_columns_are_one_and_v() {
    let v = LaurentPoly::monomial(1, 1);
    for n in 2..=8 {
        for e in 2..=n {
            let d = llt_canonical_basis(n, e).unwrap();
            for (c, mu) in d.cols.iter().enumerate() {
                if block_of(mu, e).unwrap().weight != 1 {
                    continue;
                }
                let mut entries: Vec<LaurentPoly> =
                    d.entries.iter().map(|row| row[c].clone()).filter(|x| !x.is_zero()).collect();
                entries.sort_by_key(|x| x.max_degree());
                assert_eq!(entries, vec![LaurentPoly::one(), v.clone()], "G({mu}) e={e}");
            }
        }
    }
}

#[test]
fn specht_classes_rewrite_in_simples() {
    let d = llt_canonical_basis(3, 2).unwrap();
    let x = KClass::basis(YoungSubgroup::full(3), vec![p("3")]).unwrap();
    let out = specht_to_simple(&d, &x).unwrap();
    assert_eq!(out.into_iter().collect::<Vec<_>>(), vec![(p("1,1,1"), 1)]);
}

#[test]
fn divided_powers_compose() {
    for n in 0..=4 {
        for lambda in enumerate_partitions(n) {
            let x = FockVector::basis(lambda);
            for e in 2..=3 {
                for i in 0..e {
                    for (a, b) in [(1, 1), (1, 2), (2, 1)] {
                        assert!(check_divided_power_identity(i, a, b, e, &x).unwrap());
                    }
                }
            }
        }
    }
    // f_0 twice from ∅ at e = 2 vanishes: only one addable 0-node
    assert!(f_divided(0, 2, 2, &FockVector::empty_partition()).unwrap().is_zero());
}

#[test]
fn bar_involution_and_quantum_integers() {
    let two = LaurentPoly::quantum_integer(2);
    assert_eq!(two.bar(), two);
    assert_eq!(two.at_one(), 2.into());
    let b = LaurentPoly::quantum_binomial(4, 2);
    assert_eq!(b.at_one(), 6.into());
    assert_eq!(b.bar(), b);
}
