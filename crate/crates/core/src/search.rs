//! Exhaustive enumeration of fixed-weight vectors.
//!
//! A vector is laid out as `block` blocks of length `n`; site `j` owns the
//! coordinates `j, n + j, ..., (block - 1) n + j`. A site is "occupied" when it
//! carries one of the nonzero patterns in the alphabet. With `block = 1` this
//! is ordinary Hamming weight; with `block = 2` it is symplectic weight.

use itertools::Itertools;
use rayon::prelude::*;

use crate::gf::Field;

/// The nonzero site patterns of length `block`.
pub(crate) fn nonzero_patterns(field: Field, block: usize) -> Vec<Vec<u32>> {
    let p = field.modulus();
    let total = (p as usize).pow(block as u32);
    (1..total)
        .map(|mut code| {
            let mut pat = vec![0u32; block];
            for slot in pat.iter_mut().rev() {
                *slot = (code % p as usize) as u32;
                code /= p as usize;
            }
            pat
        })
        .collect()
}

#[inline]
fn place(v: &mut [u32], n: usize, site: usize, pattern: &[u32]) {
    for (t, &c) in pattern.iter().enumerate() {
        v[t * n + site] = c;
    }
}

/// Calls `visit` on every vector with exactly `w` occupied sites among the first
/// `n`, in lexicographic order of site subsets then of patterns.
pub(crate) fn for_each_of_weight<F>(n: usize, alphabet: &[Vec<u32>], w: usize, mut visit: F)
where
    F: FnMut(&[u32]),
{
    let block = alphabet.first().map_or(1, Vec::len);
    let zero = vec![0u32; block];
    let mut v = vec![0u32; n * block];
    for sites in (0..n).combinations(w) {
        let mut choice = vec![0usize; w];
        'assignments: loop {
            for (&site, &c) in sites.iter().zip(&choice) {
                place(&mut v, n, site, &alphabet[c]);
            }
            visit(&v);
            for i in (0..w).rev() {
                choice[i] += 1;
                if choice[i] < alphabet.len() {
                    continue 'assignments;
                }
                choice[i] = 0;
            }
            break;
        }
        for &site in &sites {
            place(&mut v, n, site, &zero);
        }
    }
}

/// Returns some vector of exactly `w` occupied sites satisfying `pred`, searching
/// site subsets in parallel.
pub(crate) fn find_of_weight<P>(n: usize, alphabet: &[Vec<u32>], w: usize, pred: P) -> Option<Vec<u32>>
where
    P: Fn(&[u32]) -> bool + Sync,
{
    let block = alphabet.first().map_or(1, Vec::len);
    (0..n).combinations(w).par_bridge().find_map_any(|sites| {
        let mut v = vec![0u32; n * block];
        let mut choice = vec![0usize; w];
        loop {
            for (&site, &c) in sites.iter().zip(&choice) {
                place(&mut v, n, site, &alphabet[c]);
            }
            if pred(&v) {
                return Some(v);
            }
            let mut advanced = false;
            for i in (0..w).rev() {
                choice[i] += 1;
                if choice[i] < alphabet.len() {
                    advanced = true;
                    break;
                }
                choice[i] = 0;
            }
            if !advanced {
                return None;
            }
        }
    })
}

/// Smallest `w` in `1..=max_weight` for which some weight-`w` vector satisfies `pred`.
pub(crate) fn min_weight<P>(n: usize, alphabet: &[Vec<u32>], max_weight: usize, pred: P) -> Option<(usize, Vec<u32>)>
where
    P: Fn(&[u32]) -> bool + Sync,
{
    (1..=max_weight.min(n)).find_map(|w| find_of_weight(n, alphabet, w, &pred).map(|v| (w, v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn counts_match_closed_form() {
        let f3 = Field::new(3).unwrap();
        for block in [1, 2] {
            let alpha = nonzero_patterns(f3, block);
            assert_eq!(alpha.len(), 3usize.pow(block as u32) - 1);
            for w in 0..=4 {
                let mut count = 0;
                let mut seen = std::collections::HashSet::new();
                for_each_of_weight(4, &alpha, w, |v| {
                    count += 1;
                    seen.insert(v.to_vec());
                });
                assert_eq!(count, binom(4, w) * alpha.len().pow(w as u32));
                assert_eq!(seen.len(), count);
            }
        }
    }

    #[test]
    fn symplectic_layout_places_both_blocks() {
        let f2 = Field::new(2).unwrap();
        let alpha = nonzero_patterns(f2, 2);
        let mut all = Vec::new();
        for_each_of_weight(2, &alpha, 1, |v| all.push(v.to_vec()));
        assert!(all.contains(&vec![1, 0, 1, 0]));
        assert!(all.contains(&vec![0, 1, 0, 0]));
        assert!(all.contains(&vec![0, 0, 0, 1]));
    }

    #[test]
    fn min_weight_finds_smallest() {
        let f2 = Field::new(2).unwrap();
        let alpha = nonzero_patterns(f2, 1);
        let (w, v) = min_weight(6, &alpha, 6, |v| {
            v.iter().filter(|&&x| x != 0).count() >= 3 && v[5] == 1
        })
        .unwrap();
        assert_eq!(w, 3);
        assert_eq!(v[5], 1);
        assert!(min_weight(6, &alpha, 2, |v| v.iter().all(|&x| x == 1)).is_none());
    }
}
