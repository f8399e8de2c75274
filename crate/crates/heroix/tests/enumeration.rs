//! Independent oracles for the isomorph-free enumeration.
//!
//! The generator extends (n-1)-vertex representatives and dedupes by
//! canonical code. Neither oracle here shares that path: the first builds
//! every labeled tournament outright, the second counts labeled objects
//! through the orbit-stabilizer identity with brute-force automorphism
//! counting.

use heroix::canon::canonical_form;
use heroix::enumerate::enumerate_tournaments;
use heroix::tournament::Tournament;
use std::collections::BTreeSet;

fn labeled_tournament(n: usize, bits: u64) -> Tournament {
    let pair_index = |u: usize, v: usize| {
        // pairs (u, v) with u < v in row-major order
        u * n - u * (u + 1) / 2 + (v - u - 1)
    };
    Tournament::from_fn(n, move |u, v| bits >> pair_index(u, v) & 1 == 1)
}

/// Frozen counts computed by the labeled brute-force oracle below:
/// 1, 1, 2, 4, 12, 56 classes for n = 1..=6.
const CLASS_COUNTS: [usize; 6] = [1, 1, 2, 4, 12, 56];

#[test]
fn labeled_brute_force_matches_enumeration() {
    for n in 1..=6usize {
        let pairs = n * (n - 1) / 2;
        let mut codes = BTreeSet::new();
        for bits in 0u64..(1 << pairs) {
            let t = labeled_tournament(n, bits);
            codes.insert(canonical_form(&t).unwrap());
        }
        assert_eq!(codes.len(), CLASS_COUNTS[n - 1], "n={n}");

        let listed = enumerate_tournaments(n).unwrap();
        assert_eq!(listed.len(), codes.len(), "n={n}");
        let listed_codes: BTreeSet<_> = listed.iter().map(|t| canonical_form(t).unwrap()).collect();
        assert_eq!(listed_codes, codes, "n={n}");
    }
}

/// Automorphism count by direct permutation search; independent of the
/// canonical-form machinery.
fn automorphism_count(t: &Tournament) -> usize {
    fn dfs(t: &Tournament, map: &mut Vec<usize>, used: &mut Vec<bool>, v: usize) -> usize {
        let n = t.n();
        if v == n {
            return 1;
        }
        let mut total = 0;
        for w in 0..n {
            if used[w] {
                continue;
            }
            if (0..v).all(|u| t.has_edge(u, v) == t.has_edge(map[u], w)) {
                map[v] = w;
                used[w] = true;
                total += dfs(t, map, used, v + 1);
                used[w] = false;
            }
        }
        total
    }
    let mut map = vec![0; t.n()];
    let mut used = vec![false; t.n()];
    dfs(t, &mut map, &mut used, 0)
}

#[test]
fn class_equation_up_to_seven() {
    // Orbit-stabilizer: the class sizes n!/|Aut| must add up to the number
    // of labeled tournaments, 2^(n(n-1)/2). Combined with distinct codes
    // this certifies the list is complete and duplicate-free.
    let factorial = |n: usize| (1..=n).product::<usize>();
    for n in 5..=7usize {
        let list = enumerate_tournaments(n).unwrap();
        let codes: BTreeSet<_> = list.iter().map(|t| canonical_form(t).unwrap()).collect();
        assert_eq!(codes.len(), list.len(), "codes distinct at n={n}");
        let total: usize = list
            .iter()
            .map(|t| factorial(n) / automorphism_count(t))
            .sum();
        assert_eq!(
            total,
            1usize << (n * (n - 1) / 2),
            "class equation at n={n}"
        );
    }
    assert_eq!(enumerate_tournaments(6).unwrap().len(), 56);
    assert_eq!(enumerate_tournaments(7).unwrap().len(), 456);
}
