//! Permutations of `{0, …, n-1}` in one-line notation.
//!
//! Composition is `(u·w)(i) = u(w(i))`. The simple transposition `s_i`
//! (`1 ≤ i < n`) swaps `i-1` and `i`, so `w·s_i` swaps the entries in
//! positions `i-1, i` and `s_i·w` swaps the values `i-1, i`.

use alloc::vec::Vec;

pub type Perm = Vec<u8>;

pub fn identity(n: usize) -> Perm {
    (0..n as u8).collect()
}

pub fn compose(u: &[u8], w: &[u8]) -> Perm {
    w.iter().map(|&i| u[i as usize]).collect()
}

pub fn inverse(w: &[u8]) -> Perm {
    let mut inv = alloc::vec![0u8; w.len()];
    for (i, &x) in w.iter().enumerate() {
        inv[x as usize] = i as u8;
    }
    inv
}

/// Number of inversions.
pub fn length(w: &[u8]) -> usize {
    let mut l = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                l += 1;
            }
        }
    }
    l
}

/// `w·s_i`.
pub fn mul_right_gen(w: &[u8], i: usize) -> Perm {
    let mut v = w.to_vec();
    v.swap(i - 1, i);
    v
}

/// `s_i·w`.
pub fn mul_left_gen(i: usize, w: &[u8]) -> Perm {
    w.iter()
        .map(|&x| {
            if x as usize == i - 1 {
                i as u8
            } else if x as usize == i {
                (i - 1) as u8
            } else {
                x
            }
        })
        .collect()
}

/// A reduced word `[i_1, …, i_k]` with `w = s_{i_1} ⋯ s_{i_k}`.
pub fn reduced_word(w: &[u8]) -> Vec<usize> {
    let mut v = w.to_vec();
    let mut word = Vec::new();
    'outer: loop {
        for i in 1..v.len() {
            if v[i - 1] > v[i] {
                v.swap(i - 1, i);
                word.push(i);
                continue 'outer;
            }
        }
        break;
    }
    word.reverse();
    word
}

/// Rank of `w` among all permutations of its size (Lehmer code, lexicographic).
pub fn lehmer_rank(w: &[u8]) -> usize {
    let n = w.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = w[i + 1..].iter().filter(|&&x| x < w[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

/// All permutations of `n` points, in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur = identity(n);
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Position blocks of a composition: block index of each point.
pub fn block_of_points(composition: &[usize]) -> Vec<usize> {
    composition.iter().enumerate().flat_map(|(b, &m)| core::iter::repeat_n(b, m)).collect()
}

/// Generators `s_i` lying in the Young subgroup `S_μ`.
pub fn parabolic_generators(composition: &[usize]) -> Vec<usize> {
    let blocks = block_of_points(composition);
    (1..blocks.len()).filter(|&i| blocks[i - 1] == blocks[i]).collect()
}

/// Whether `w` permutes each block of positions among itself.
pub fn in_young_subgroup(w: &[u8], composition: &[usize]) -> bool {
    let blocks = block_of_points(composition);
    w.iter().enumerate().all(|(i, &x)| blocks[i] == blocks[x as usize])
}

/// Whether `w` is the minimal-length element of its coset `w·S_μ`.
pub fn is_min_left_coset_rep(w: &[u8], composition: &[usize]) -> bool {
    let blocks = block_of_points(composition);
    (1..w.len()).all(|i| blocks[i - 1] != blocks[i] || w[i - 1] < w[i])
}

/// `w = d·u` with `d` minimal in `w·S_μ` and `u ∈ S_μ`; `l(w) = l(d) + l(u)`.
pub fn factor_left_coset(w: &[u8], composition: &[usize]) -> (Perm, Perm) {
    let mut d = w.to_vec();
    let mut start = 0;
    for &m in composition {
        d[start..start + m].sort_unstable();
        start += m;
    }
    let u = compose(&inverse(&d), w);
    (d, u)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_and_lengths() {
        for w in all_perms(4) {
            let word = reduced_word(&w);
            assert_eq!(word.len(), length(&w));
            let mut v = identity(4);
            for &i in &word {
                v = mul_right_gen(&v, i);
            }
            assert_eq!(v, w);
        }
        assert_eq!(all_perms(4).len(), 24);
        let ranks: Vec<usize> = all_perms(4).iter().map(|w| lehmer_rank(w)).collect();
        assert_eq!(ranks, (0..24).collect::<Vec<_>>());
    }

    #[test]
    fn left_generator_is_composition() {
        let w = alloc::vec![2u8, 0, 3, 1];
        let s1 = mul_right_gen(&identity(4), 1);
        assert_eq!(mul_left_gen(1, &w), compose(&s1, &w));
        assert_eq!(mul_right_gen(&w, 1), compose(&w, &s1));
    }

    #[test]
    fn coset_factorisation() {
        let mu = [2usize, 1, 1];
        let mut reps = 0;
        for w in all_perms(4) {
            let (d, u) = factor_left_coset(&w, &mu);
            assert!(is_min_left_coset_rep(&d, &mu));
            assert!(in_young_subgroup(&u, &mu));
            assert_eq!(compose(&d, &u), w);
            assert_eq!(length(&w), length(&d) + length(&u));
            reps += usize::from(is_min_left_coset_rep(&w, &mu));
        }
        assert_eq!(reps, 12);
        assert_eq!(parabolic_generators(&mu), alloc::vec![1]);
    }
}
