//! Canonical forms for small tournaments.
//!
//! The canonical code of a tournament is the minimum, over all relabelings,
//! of the upper-triangle bit string of its adjacency matrix (pairs read
//! column by column, so a branch-and-bound over partial relabelings can
//! compare prefixes). Codes are equal iff the tournaments are isomorphic,
//! which makes the code double as the isomorphism oracle.

use crate::error::{Error, Result};
use crate::tournament::Tournament;

/// Largest `n` accepted by `canonical_form`. C(12,2) = 66 code bits.
pub const MAX_CANON_N: usize = 12;

/// Total-order-comparable fingerprint of an isomorphism class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    n: usize,
    code: u128,
}

impl CanonicalCode {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u128 {
        self.code
    }
}

struct Search<'a> {
    t: &'a Tournament,
    n: usize,
    total_bits: usize,
    best: u128,
    placed: Vec<usize>,
    used: u64,
}

impl Search<'_> {
    fn run(&mut self) {
        self.dfs(0, 0);
    }

    fn dfs(&mut self, cur: u128, cur_bits: usize) {
        let k = self.placed.len();
        if k == self.n {
            if cur < self.best {
                self.best = cur;
            }
            return;
        }
        for v in 0..self.n {
            if self.used >> v & 1 == 1 {
                continue;
            }
            let mut bits = 0u128;
            for i in 0..k {
                bits = bits << 1 | u128::from(self.t.has_edge(self.placed[i], v));
            }
            let cand = cur << k | bits;
            let cand_bits = cur_bits + k;
            // Compare against the same-length prefix of the best code.
            if cand > self.best >> (self.total_bits - cand_bits) {
                continue;
            }
            self.placed.push(v);
            self.used |= 1 << v;
            self.dfs(cand, cand_bits);
            self.placed.pop();
            self.used &= !(1 << v);
        }
    }
}

/// Minimum adjacency bit string over all relabelings.
pub fn canonical_form(t: &Tournament) -> Result<CanonicalCode> {
    let n = t.n();
    if n > MAX_CANON_N {
        return Err(Error::SizeLimit {
            op: "canonical_form",
            n,
            limit: MAX_CANON_N,
        });
    }
    let total_bits = n * (n - 1) / 2;
    if total_bits == 0 {
        return Ok(CanonicalCode { n, code: 0 });
    }
    let mut s = Search {
        t,
        n,
        total_bits,
        best: u128::MAX >> (128 - total_bits),
        placed: Vec::with_capacity(n),
        used: 0,
    };
    s.run();
    Ok(CanonicalCode { n, code: s.best })
}

/// Reconstructs the canonical representative tournament from its code.
pub fn decode(code: CanonicalCode) -> Tournament {
    let n = code.n;
    let total_bits = if n < 2 { 0 } else { n * (n - 1) / 2 };
    let mut edges = Vec::with_capacity(total_bits);
    for k in 1..n {
        for i in 0..k {
            edges.push((i, k));
        }
    }
    Tournament::from_fn(n, |u, v| {
        let idx = edges
            .iter()
            .position(|&(a, b)| a == u && b == v)
            .expect("pair present");
        code.code >> (total_bits - 1 - idx) & 1 == 1
    })
}

/// Isomorphism test via canonical codes.
pub fn are_isomorphic(a: &Tournament, b: &Tournament) -> Result<bool> {
    if a.n() != b.n() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, FamilySpec};
    use crate::tournament::{build, Tournament};

    #[test]
    fn c_equals_s2() {
        let c = build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let s2 = generate(&FamilySpec::S(2)).unwrap();
        assert_eq!(canonical_form(&c).unwrap(), canonical_form(&s2).unwrap());

        let l3 = generate(&FamilySpec::L(3)).unwrap();
        assert_ne!(canonical_form(&l3).unwrap(), canonical_form(&c).unwrap());
    }

    #[test]
    fn four_vertex_labeled_classes() {
        // All 2^6 labeled 4-vertex tournaments fall into exactly 4 classes.
        let mut codes = std::collections::BTreeSet::new();
        for bits in 0u32..(1 << 6) {
            let pair_index = |u: usize, v: usize| u * 4 - u * (u + 1) / 2 + (v - u - 1);
            let t = Tournament::from_fn(4, |u, v| bits >> pair_index(u, v) & 1 == 1);
            codes.insert(canonical_form(&t).unwrap());
        }
        assert_eq!(codes.len(), 4);
    }

    #[test]
    fn decode_round_trip() {
        for spec in [
            FamilySpec::U(3),
            FamilySpec::N,
            FamilySpec::Delta2,
            FamilySpec::S(3),
        ] {
            let t = generate(&spec).unwrap();
            let code = canonical_form(&t).unwrap();
            let rep = decode(code);
            assert_eq!(canonical_form(&rep).unwrap(), code);
        }
    }

    #[test]
    fn size_limit() {
        let t = Tournament::from_fn(13, |_, _| true);
        assert!(matches!(
            canonical_form(&t),
            Err(crate::error::Error::SizeLimit { .. })
        ));
    }
}
