//! Brute-force reference computations used by the suites. They work on raw
//! cell sets and share nothing with the abacus code in the core crate.

use std::collections::BTreeSet;

use vertexcalc_core::partition::enumerate_partitions;
use vertexcalc_core::Partition;

type Cells = BTreeSet<(usize, usize)>;

fn cells_of(parts: &[usize]) -> Cells {
    parts.iter().enumerate().flat_map(|(r, &l)| (0..l).map(move |c| (r, c))).collect()
}

fn shape_of(cells: &Cells, rows: usize) -> Option<Vec<usize>> {
    let mut shape = vec![0usize; rows];
    for &(r, _) in cells {
        shape[r] += 1;
    }
    let left_justified = cells.iter().all(|&(r, c)| c < shape[r]);
    if !left_justified || shape.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    while shape.last() == Some(&0) {
        shape.pop();
    }
    Some(shape)
}

/// Shapes left after deleting one rim hook of length `e`.
pub fn rim_hook_removals(parts: &[usize], e: usize) -> Vec<Vec<usize>> {
    let cells = cells_of(parts);
    let on_rim = |x: &(usize, usize)| cells.contains(x) && !cells.contains(&(x.0 + 1, x.1 + 1));
    let mut out = Vec::new();
    for &start in cells.iter().filter(|x| on_rim(x)) {
        let mut strip = vec![start];
        while strip.len() < e {
            let (r, c) = *strip.last().unwrap();
            if on_rim(&(r + 1, c)) {
                strip.push((r + 1, c));
            } else if c > 0 && on_rim(&(r, c - 1)) {
                strip.push((r, c - 1));
            } else {
                break;
            }
        }
        if strip.len() < e {
            continue;
        }
        let rest: Cells = cells.iter().copied().filter(|x| !strip.contains(x)).collect();
        if let Some(shape) = shape_of(&rest, parts.len()) {
            out.push(shape);
        }
    }
    out
}

/// Every `(core, weight)` reached by removing rim hooks in all possible orders.
pub fn cores_all_orders(lambda: &Partition, e: usize) -> BTreeSet<(Vec<usize>, usize)> {
    let mut found = BTreeSet::new();
    let mut seen = BTreeSet::new();
    let mut stack = vec![(lambda.parts().to_vec(), 0usize)];
    while let Some((p, w)) = stack.pop() {
        if !seen.insert(p.clone()) {
            continue;
        }
        let next = rim_hook_removals(&p, e);
        if next.is_empty() {
            found.insert((p, w));
        }
        stack.extend(next.into_iter().map(|q| (q, w + 1)));
    }
    found
}

/// All `(σ, ν)` with `λ = eσ + ν` row by row and `ν` e-restricted.
pub fn wilcox_candidates(lambda: &Partition, e: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for k in 0..=lambda.size() / e {
        for sigma in enumerate_partitions(k) {
            if sigma.len() > lambda.len() {
                continue;
            }
            let rows: Option<Vec<usize>> =
                (0..lambda.len()).map(|i| lambda.part(i).checked_sub(e * sigma.part(i))).collect();
            let Some(nu) = rows.and_then(|r| Partition::new(r).ok()) else { continue };
            if nu.is_e_restricted(e).unwrap_or(false) {
                out.push((sigma, nu));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_one_has_a_three_hook() {
        let p: Partition = "2,1".parse().unwrap();
        assert_eq!(cores_all_orders(&p, 3), BTreeSet::from([(Vec::new(), 1)]));
        assert_eq!(cores_all_orders(&p, 2), BTreeSet::from([(vec![2, 1], 0)]));
    }

    #[test]
    fn wilcox_of_a_row() {
        let p: Partition = "3".parse().unwrap();
        let c = wilcox_candidates(&p, 3);
        assert_eq!(c, vec![("1".parse().unwrap(), Partition::empty())]);
    }
}
