//! Partition combinatorics checked against brute-force oracles that share no
//! code with the abacus implementation.

use std::collections::BTreeSet;

use proptest::prelude::*;
use vertexcalc_core::blocks::{block_of, blocks, cuspidal_support, enumerate_block};
use vertexcalc_core::partition::{
    dominance_leq, e_core_quotient, enumerate_partitions, wilcox_decompose, BetaSet, Partition,
};

/// Every partition reachable by removing one `e`-rim hook, found by
/// deleting each connected border strip of `e` cells and keeping the shapes.
fn remove_one_rim_hook(parts: &[usize], e: usize) -> Vec<Vec<usize>> {
    let cells: BTreeSet<(usize, usize)> =
        parts.iter().enumerate().flat_map(|(r, &l)| (0..l).map(move |c| (r, c))).collect();
    let in_rim = |&(r, c): &(usize, usize)| !cells.contains(&(r + 1, c + 1));
    let rim: Vec<(usize, usize)> = cells.iter().copied().filter(in_rim).collect();
    let mut out = Vec::new();
    // a rim hook starts at the top-right end of a strip and walks down-left
    for &start in &rim {
        let mut strip = vec![start];
        let mut cur = start;
        while strip.len() < e {
            let (r, c) = cur;
            let below = (r + 1, c);
            let left = if c > 0 { Some((r, c - 1)) } else { None };
            let next = if cells.contains(&below) && in_rim(&below) {
                below
            } else if let Some(l) = left.filter(|l| cells.contains(l) && in_rim(l)) {
                l
            } else {
                break;
            };
            strip.push(next);
            cur = next;
        }
        if strip.len() != e {
            continue;
        }
        let rest: BTreeSet<_> = cells.iter().copied().filter(|x| !strip.contains(x)).collect();
        let rows = parts.len();
        let mut shape = vec![0usize; rows];
        for &(r, _) in &rest {
            shape[r] += 1;
        }
        // the remainder must be a Young diagram occupying left-justified rows
        let is_diagram = rest.iter().all(|&(r, c)| c < shape[r]) && shape.windows(2).all(|w| w[0] >= w[1]);
        if is_diagram {
            while shape.last() == Some(&0) {
                shape.pop();
            }
            out.push(shape);
        }
    }
    out
}

/// All (core, weight) pairs reachable by removing rim hooks in every order.
fn cores_by_all_orders(lambda: &[usize], e: usize) -> BTreeSet<(Vec<usize>, usize)> {
    let mut found = BTreeSet::new();
    let mut frontier = vec![(lambda.to_vec(), 0usize)];
    let mut seen = BTreeSet::new();
    while let Some((p, w)) = frontier.pop() {
        if !seen.insert(p.clone()) {
            continue;
        }
        let next = remove_one_rim_hook(&p, e);
        if next.is_empty() {
            found.insert((p, w));
        }
        for q in next {
            frontier.push((q, w + 1));
        }
    }
    found
}

/// Hook-free check: a partition is an e-core iff no hook length is divisible by e.
fn is_core_by_hooks(lambda: &Partition, e: usize) -> bool {
    lambda.cells().all(|c| !lambda.hook_length(c).is_multiple_of(e))
}

fn pentagonal_partition_counts(max: usize) -> Vec<u64> {
    let mut p = vec![0i64; max + 1];
    p[0] = 1;
    for n in 1..=max {
        let mut total = 0i64;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[n - g1];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= n {
                total += sign * p[n - g2];
            }
        }
        p[n] = total;
    }
    p.into_iter().map(|x| x as u64).collect()
}

fn syt_by_recursion(lambda: &Partition) -> u128 {
    if lambda.size() == 0 {
        return 1;
    }
    lambda
        .removable_cells()
        .into_iter()
        .map(|c| {
            let mut parts = lambda.parts().to_vec();
            parts[c.row - 1] -= 1;
            syt_by_recursion(&Partition::from_unsorted(parts))
        })
        .sum()
}

#[test]
fn partition_counts_follow_the_pentagonal_recurrence() {
    let p = pentagonal_partition_counts(14);
    for (n, &count) in p.iter().enumerate().take(15) {
        assert_eq!(enumerate_partitions(n).len() as u64, count, "p({n})");
    }
}

#[test]
fn core_is_independent_of_removal_order_and_matches_abacus() {
    for n in 0..=12 {
        for lambda in enumerate_partitions(n) {
            for e in 2..=6 {
                let all = cores_by_all_orders(lambda.parts(), e);
                assert_eq!(all.len(), 1, "{lambda} e={e}: {all:?}");
                let (core, weight) = all.into_iter().next().unwrap();
                let d = e_core_quotient(&lambda, e).unwrap();
                assert_eq!(d.core.parts(), &core[..], "{lambda} e={e}");
                assert_eq!(d.weight, weight);
                assert_eq!(d.quotient.iter().map(Partition::size).sum::<usize>(), weight);
                assert!(is_core_by_hooks(&d.core, e));
            }
        }
    }
}

#[test]
fn wilcox_decomposition_exists_uniquely() {
    for n in 0..=10 {
        for lambda in enumerate_partitions(n) {
            for e in 2..=5 {
                let mut found = Vec::new();
                for k in 0..=n / e {
                    for sigma in enumerate_partitions(k) {
                        if sigma.len() > lambda.len() {
                            continue;
                        }
                        let diffs: Option<Vec<usize>> = (0..lambda.len())
                            .map(|i| lambda.part(i).checked_sub(e * sigma.part(i)))
                            .collect();
                        let Some(nu) = diffs else { continue };
                        let Ok(nu) = Partition::new(nu) else { continue };
                        if nu.is_e_restricted(e).unwrap() {
                            found.push((sigma, nu));
                        }
                    }
                }
                assert_eq!(found.len(), 1, "{lambda} e={e}");
                let w = wilcox_decompose(&lambda, e).unwrap();
                assert_eq!((w.sigma.clone(), w.nu.clone()), found[0]);
                assert_eq!(w.recompose(e), lambda);
                assert_eq!(cuspidal_support(&lambda, e).unwrap().k, w.sigma.size());
            }
        }
    }
}

#[test]
fn blocks_are_the_classes_of_equal_cores() {
    for n in 1..=9 {
        for e in 2..=4 {
            let bs = blocks(n, e).unwrap();
            let mut covered = 0;
            for b in &bs {
                let labels = enumerate_block(b).unwrap();
                covered += labels.len();
                for lambda in &labels {
                    let (core, _) = cores_by_all_orders(lambda.parts(), e).into_iter().next().unwrap();
                    assert_eq!(core, b.core.parts());
                    assert_eq!(block_of(lambda, e).unwrap(), *b);
                }
            }
            assert_eq!(covered, enumerate_partitions(n).len());
        }
    }
}

#[test]
fn worked_cores() {
    let d = e_core_quotient(&"2,1".parse().unwrap(), 3).unwrap();
    assert_eq!((d.core, d.weight), (Partition::empty(), 1));
    let d = e_core_quotient(&"4,1".parse().unwrap(), 3).unwrap();
    assert_eq!((d.core, d.weight), ("1,1".parse().unwrap(), 1));
    let w = wilcox_decompose(&"3".parse().unwrap(), 3).unwrap();
    assert_eq!(w.sigma, "1".parse().unwrap());
    assert_eq!(w.nu, Partition::empty());
}

#[test]
fn syt_counts_match_branching() {
    for n in 0..=9 {
        for lambda in enumerate_partitions(n) {
            assert_eq!(lambda.syt_count(), syt_by_recursion(&lambda).into());
        }
    }
}

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0usize..7, 0..7).prop_map(Partition::from_unsorted)
}

fn same_size_pair() -> impl Strategy<Value = (Partition, Partition)> {
    (0usize..10).prop_flat_map(|n| {
        let ps = enumerate_partitions(n);
        let k = ps.len();
        (0..k, 0..k).prop_map(move |(i, j)| (ps[i].clone(), ps[j].clone()))
    })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(lambda in arb_partition()) {
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().size(), lambda.size());
    }

    #[test]
    fn conjugation_reverses_dominance((a, b) in same_size_pair()) {
        prop_assert_eq!(
            dominance_leq(&a, &b).unwrap(),
            dominance_leq(&b.conjugate(), &a.conjugate()).unwrap()
        );
    }

    #[test]
    fn beta_sets_round_trip(lambda in arb_partition(), extra in 0usize..4) {
        let beta = BetaSet::from_partition(&lambda, lambda.len() + extra).unwrap();
        prop_assert_eq!(beta.to_partition(), lambda.clone());
        prop_assert_eq!(beta.shifted().to_partition(), lambda);
    }

    #[test]
    fn core_conjugation_commutes(lambda in arb_partition(), e in 2usize..6) {
        let a = e_core_quotient(&lambda, e).unwrap();
        let b = e_core_quotient(&lambda.conjugate(), e).unwrap();
        prop_assert_eq!(a.core.conjugate(), b.core);
        prop_assert_eq!(a.weight, b.weight);
    }
}
