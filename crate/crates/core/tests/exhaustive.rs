//! Exhaustive checks over small word spaces against brute-force oracles.

use std::collections::BTreeSet;

use foldkit_core::enumeration::{catalan, degree_sequences, proper_coloring_count};
use foldkit_core::foldings::{count_foldings, count_via_a_matchings, enumerate_foldings, Matching};
use foldkit_core::moves::build_fold_graph;
use foldkit_core::rsets::{r_set, word_at, word_space_size, WordSpace};
use foldkit_core::trees::{degree_multiset, is_proper, EdgeColoredTree, PlaneTree};
use foldkit_core::words::{doubled, parse_word, Letter, Word};
use num_bigint::BigUint;

fn all_words(n: usize, m: u32, space: WordSpace) -> impl Iterator<Item = Word> {
    let size = word_space_size(n, m, space).unwrap();
    (0..size).map(move |i| word_at(i, n, m, space))
}

/// Every perfect matching of complementary letters, crossing or not, then
/// filtered to the non-crossing ones.
fn brute_foldings(w: &Word) -> Vec<Vec<(usize, usize)>> {
    fn go(letters: &[Letter], used: &mut Vec<bool>, pairs: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some(i) = used.iter().position(|u| !u) else {
            out.push(pairs.clone());
            return;
        };
        used[i] = true;
        for j in i + 1..letters.len() {
            if !used[j] && letters[i].is_complement_of(letters[j]) {
                used[j] = true;
                pairs.push((i, j));
                go(letters, used, pairs, out);
                pairs.pop();
                used[j] = false;
            }
        }
        used[i] = false;
    }
    if w.len() % 2 == 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(w.letters(), &mut vec![false; w.len()], &mut Vec::new(), &mut out);
    out.retain(|pairs| {
        pairs.iter().all(|&(a, b)| {
            pairs
                .iter()
                .all(|&(c, d)| !(a < c && c < b && b < d) && !(c < a && a < d && d < b))
        })
    });
    out
}

#[test]
fn enumeration_matches_brute_force() {
    for (n, m) in [(1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (1, 2), (2, 2), (3, 2), (4, 2)] {
        for w in all_words(n, m, WordSpace::All) {
            let mut brute: Vec<Matching> = brute_foldings(&w)
                .iter()
                .map(|pairs| Matching::from_pairs(w.len(), pairs).unwrap())
                .collect();
            brute.sort();
            assert_eq!(enumerate_foldings(&w), brute, "{w}");
        }
    }
    let aa = parse_word("AaAa", None).unwrap();
    let expected = vec![
        Matching::from_one_based_pairs(4, &[(1, 2), (3, 4)]).unwrap(),
        Matching::from_one_based_pairs(4, &[(1, 4), (2, 3)]).unwrap(),
    ];
    assert_eq!(enumerate_foldings(&aa), expected);
}

#[test]
fn count_is_enumeration_length() {
    for n in 0..=7 {
        for w in all_words(n, 1, WordSpace::All) {
            assert_eq!(count_foldings(&w), BigUint::from(enumerate_foldings(&w).len()), "{w}");
        }
    }
}

#[test]
fn doubling_preserves_counts_and_is_injective() {
    for (max_n, m) in [(6, 1), (4, 2)] {
        for n in 0..=max_n {
            let mut images = BTreeSet::new();
            for w in all_words(n, m, WordSpace::All) {
                let hat = doubled(&w).unwrap();
                assert_eq!(count_foldings(&hat), count_foldings(&w), "{w}");
                assert_eq!(hat.is_foldable(), w.is_foldable());
                assert!(images.insert(hat.to_string()), "{w}");
            }
        }
    }
}

#[test]
fn a_matching_count_on_alternating_words() {
    for n in 0..=6 {
        for w in all_words(n, 2, WordSpace::Alternating) {
            assert_eq!(count_via_a_matchings(&w).unwrap(), count_foldings(&w), "{w}");
        }
    }
    let w = parse_word("AaAaaAaAaA", None).unwrap();
    assert_eq!(count_via_a_matchings(&doubled(&w).unwrap()).unwrap(), BigUint::from(10u32));
}

#[test]
fn maximal_word_is_catalan() {
    for n in 0..=12 {
        let w = parse_word(&"Aa".repeat(n), None).unwrap();
        assert_eq!(count_foldings(&w), catalan(n));
    }
}

#[test]
fn coloring_count_matches_brute_force() {
    for n in 1..=5usize {
        for tree in PlaneTree::all(n) {
            let dm = degree_multiset(&tree);
            for k in 1..=4u32 {
                let mut proper = 0u64;
                let mut colors = vec![1u32; n];
                loop {
                    let ct = EdgeColoredTree::new(tree.clone(), colors.clone(), k).unwrap();
                    proper += is_proper(&ct) as u64;
                    let Some(p) = colors.iter().rposition(|&c| c < k) else { break };
                    colors[p] += 1;
                    colors[p + 1..].iter_mut().for_each(|c| *c = 1);
                }
                assert_eq!(proper_coloring_count(&dm, k as u64), BigUint::from(proper), "{tree} k={k}");
            }
        }
    }
}

#[test]
fn degree_sequences_are_the_tree_multisets() {
    for n in 1..=8usize {
        for k in 1..=6u64 {
            let from_trees: BTreeSet<Vec<u64>> = PlaneTree::all(n)
                .iter()
                .map(degree_multiset)
                .filter(|d| d.max_degree() as u64 <= k)
                .map(|d| d.alpha().to_vec())
                .collect();
            let generated: BTreeSet<Vec<u64>> = degree_sequences(n as u64, k).map(|d| d.alpha().to_vec()).collect();
            assert_eq!(generated, from_trees, "n={n} k={k}");
        }
    }
}

#[test]
fn fold_graphs_are_connected() {
    for (max_n, m) in [(5, 1), (5, 2)] {
        for n in 0..=max_n {
            for w in all_words(n, m, WordSpace::All).filter(|w| w.is_foldable()) {
                assert!(build_fold_graph(&w).is_weakly_connected(), "{w}");
            }
        }
    }
}

#[test]
fn r_sets_grow_with_alphabet() {
    for n in 0..=4 {
        assert!(r_set(n, 1).unwrap().is_subset(&r_set(n, 2).unwrap()), "n={n}");
    }
}

#[test]
fn top_two_catalan_values() {
    for n in 1..=8usize {
        let r = r_set(n, 1).unwrap();
        let lo = u128::try_from(catalan(n - 1)).unwrap();
        let hi = u128::try_from(catalan(n)).unwrap();
        assert!(r.contains(&lo) && r.contains(&hi), "n={n}");
        assert!(r.iter().all(|&k| k <= lo || k >= hi), "n={n}");
    }
}
