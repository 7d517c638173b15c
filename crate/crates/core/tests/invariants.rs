//! Exhaustive checks of structural invariants over small diagrams.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use ribbon_core::enumerate::{self, EnumerationBudget};
use ribbon_core::formulas;
use ribbon_core::perm::{self, Permutation};
use ribbon_core::{Letter, SimpleDiagram, Word};

fn budget() -> EnumerationBudget {
    EnumerationBudget::default()
}

fn words_upto(k: usize) -> Vec<Word> {
    (0..=k).flat_map(Word::all).collect()
}

fn diagram(word: &Word, n: usize) -> Arc<SimpleDiagram> {
    Arc::new(SimpleDiagram::new(word.clone(), n).unwrap())
}

fn all_perms(m: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (1..=m).collect();
    loop {
        out.push(Permutation::new(current.clone()).unwrap());
        let Some(i) = (0..m.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            return out;
        };
        let j = (i + 1..m).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
}

#[test]
fn cell_count_and_diagonal_profile() {
    for word in words_upto(4) {
        let k = word.len() as i64;
        for n in 1..=5usize {
            let d = SimpleDiagram::new(word.clone(), n).unwrap();
            assert_eq!(d.len(), n * (n + word.len()), "({word}, {n})");
            let top = n as i64 + k;
            let size = |dg: i64| d.diagonal_indices(dg).len() as i64;
            assert_eq!(size(top), 1);
            for dg in 1..=top {
                let expected = if dg > k { (top - dg + 1).min(n as i64) } else { n as i64 };
                assert_eq!(size(dg), expected, "({word}, {n}) diagonal {dg}");
            }
            let below: i64 = (d.min_diagonal()..1).map(size).sum();
            assert_eq!(below, (n as i64) * (n as i64 - 1) / 2, "({word}, {n}) triangle below 1");
            for dg in d.min_diagonal()..1 {
                assert_eq!(size(dg), n as i64 - 1 + dg, "({word}, {n}) diagonal {dg}");
            }
        }
    }
}

#[test]
fn every_decomposition_has_one_head_per_diagonal() {
    for total in 1..=8usize {
        for k in 0..total {
            let n = total - k;
            for word in Word::all(k) {
                if n >= 4 && k >= 3 {
                    // covered by the smaller cases and the oracle test; keeps debug runs short
                    continue;
                }
                for dec in enumerate::enum_bsd(&word, n, &budget()).unwrap() {
                    assert!(dec.is_valid(), "({word}, {n})");
                    let heads: BTreeSet<i64> = (1..=total)
                        .map(|id| dec.diagram().diagonal_of(dec.head(id).unwrap()))
                        .collect();
                    assert_eq!(heads, (1..=total as i64).collect::<BTreeSet<_>>(), "({word}, {n})");
                }
            }
        }
    }
}

#[test]
fn relations_on_small_diagrams() {
    for word in words_upto(3) {
        for n in 1..=3usize {
            let d = diagram(&word, n);
            for sigma in enumerate::enum_bsd_permutations(&word, n, &budget()).unwrap() {
                let dec = perm::decomposition_of(&sigma, &d).unwrap();
                assert_eq!(dec.inversion_count(), sigma.inv_window(n), "({word}, {n}) {sigma}");
                let order = dec.inner_relation();
                assert!(order.is_antisymmetric(), "({word}, {n}) {sigma}");
                let m = dec.strip_count();
                for i in 1..=m {
                    for j in 1..=m {
                        if i != j && i.abs_diff(j) <= n {
                            assert!(order.comparable(i, j), "({word}, {n}) {sigma}: {i} {j}");
                        }
                        if dec.above(i, j).unwrap() {
                            assert!(order.inner(i, j), "({word}, {n}) {sigma}: {i} above {j}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn psi_is_injective_up_to_six_symbols() {
    for total in 1..=6usize {
        for k in 0..total {
            let n = total - k;
            for word in Word::all(k) {
                let bst = enumerate::enum_bst(&word, n, &budget()).unwrap();
                let images: BTreeSet<Permutation> = bst.iter().map(|t| perm::psi(t).unwrap()).collect();
                assert_eq!(images.len(), bst.len(), "({word}, {n})");
            }
        }
    }
}

#[test]
fn swapping_a_descent_keeps_the_decomposition() {
    for word in words_upto(3) {
        for n in 1..=3usize {
            let d = diagram(&word, n);
            for sigma in enumerate::enum_bsp(&word, n, &budget()).unwrap() {
                let dec = perm::decomposition_of(&sigma, &d).unwrap();
                for i in sigma.descents_k(n) {
                    let mut swapped = sigma.clone();
                    swapped.swap_adjacent(i);
                    assert!(swapped.is_bsp_member(&word, n).unwrap());
                    assert_eq!(perm::decomposition_of(&swapped, &d).unwrap(), dec);
                }
            }
        }
    }
}

#[test]
fn word_of_partitions_the_symmetric_group() {
    for n in 1..=3usize {
        for k in 0..=3usize {
            let perms = all_perms(n + k);
            let mut total = 0;
            for word in Word::all(k) {
                let members = enumerate::enum_bsp(&word, n, &budget()).unwrap();
                assert!(members.iter().all(|s| s.word_of(n, k).unwrap() == word));
                total += members.len();
            }
            assert_eq!(total, perms.len(), "n = {n}, k = {k}");
            for sigma in &perms {
                let word = sigma.word_of(n, k).unwrap();
                let hits = Word::all(k).iter().filter(|w| sigma.is_bsp_member(w, n).unwrap()).count();
                assert_eq!(hits, 1);
                assert!(sigma.is_bsp_member(&word, n).unwrap());
            }
        }
    }
}

#[test]
fn square_window_inversions_are_classical() {
    for n in 1..=5usize {
        for sigma in all_perms(n) {
            assert_eq!(sigma.inv_window(n), sigma.inverse().inversions());
        }
    }
}

#[test]
fn rectangle_tilings_match_the_oracle() {
    for n in 1..=4usize {
        for j in 0..=8usize.saturating_sub(n) {
            if n + j > 8 {
                continue;
            }
            for letter in [Letter::R, Letter::C] {
                let word = Word::repeat(letter, j);
                let d = diagram(&word, n);
                let mut bsd = enumerate::enum_bsd(&word, n, &budget()).unwrap();
                bsd.sort();
                assert_eq!(bsd, enumerate::oracle_tilings(&d, &budget()).unwrap(), "({word}, {n})");
                if n + j <= 6 {
                    let mut bst = enumerate::enum_bst(&word, n, &budget()).unwrap();
                    bst.sort();
                    assert_eq!(bst, enumerate::oracle_tableaux(&d, &budget()).unwrap(), "({word}, {n})");
                }
            }
        }
    }
}

#[test]
fn isometric_words_have_equal_counts() {
    for word in words_upto(3) {
        for n in 1..=4usize {
            let bsd = enumerate::count_bsd(&word, n, &budget()).unwrap();
            let bst = enumerate::count_bsp(&word, n, &budget()).unwrap();
            for other in word.isometry_orbit() {
                assert_eq!(enumerate::count_bsd(&other, n, &budget()).unwrap(), bsd, "{word} {other} {n}");
                assert_eq!(enumerate::count_bsp(&other, n, &budget()).unwrap(), bst, "{word} {other} {n}");
            }
        }
        if !word.is_empty() {
            let f = formulas::f_polynomial(&word).unwrap();
            for other in word.isometry_orbit() {
                assert_eq!(formulas::f_polynomial(&other).unwrap(), f);
            }
        }
    }
}

#[test]
fn totals_over_words() {
    for k in 0..=2usize {
        for n in 1..=4usize {
            let (count, _) = formulas::total_over_words(k, n).unwrap();
            let bsd: u64 = Word::all(k).iter().map(|w| enumerate::count_bsd(w, n, &budget()).unwrap()).sum();
            let bst: u64 = Word::all(k).iter().map(|w| enumerate::count_bsp(w, n, &budget()).unwrap()).sum();
            assert_eq!(BigInt::from(bsd), count, "k = {k}, n = {n}");
            assert_eq!(BigInt::from(bst), formulas::factorial(n + k), "k = {k}, n = {n}");
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    let word: Word = "crc".parse().unwrap();
    let a = enumerate::enum_bsd(&word, 3, &budget()).unwrap();
    let b = enumerate::enum_bsd(&word, 3, &budget()).unwrap();
    assert_eq!(a, b);
    let first: Vec<String> = a.iter().take(3).map(|d| format!("{:?}", d.assignment())).collect();
    let again: Vec<String> = b.iter().take(3).map(|d| format!("{:?}", d.assignment())).collect();
    assert_eq!(first, again);
}
