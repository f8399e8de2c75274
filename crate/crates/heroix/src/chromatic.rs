//! Exact tournament chromatic number.
//!
//! The chromatic number of a tournament is the minimum number of classes in
//! a partition of the vertex set into transitive sets. The exact engine is
//! a dynamic program over vertex subsets: the class containing the lowest
//! vertex of the residual set may be assumed maximal within it, so the
//! recursion only branches over maximal transitive subsets through that
//! pivot. A separate branch-and-bound refuter handles 3-colorability
//! questions beyond the subset engine's reach.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::tournament::{Tournament, VertexSet};

/// Default size ceiling for the subset engine.
pub const DEFAULT_CHROMATIC_LIMIT: usize = 24;

/// A vertex-to-color assignment whose classes are transitive. Colors are
/// normalized to `0..k` in order of first appearance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    assign: Vec<usize>,
    k: usize,
}

impl Coloring {
    /// Normalizes arbitrary color labels to `0..k` by first appearance.
    pub fn new(raw: &[usize]) -> Self {
        let mut relabel: HashMap<usize, usize> = HashMap::new();
        let mut assign = Vec::with_capacity(raw.len());
        for &c in raw {
            let next = relabel.len();
            assign.push(*relabel.entry(c).or_insert(next));
        }
        let k = relabel.len();
        Coloring { assign, k }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn assign(&self) -> &[usize] {
        &self.assign
    }

    pub fn color_of(&self, v: usize) -> usize {
        self.assign[v]
    }

    pub fn classes(&self) -> Vec<VertexSet> {
        (0..self.k)
            .map(|c| {
                VertexSet::new(
                    self.assign
                        .iter()
                        .enumerate()
                        .filter(|&(_, &cc)| cc == c)
                        .map(|(v, _)| v),
                )
            })
            .collect()
    }
}

/// True iff every color class induces a transitive subtournament.
pub fn is_valid_coloring(t: &Tournament, c: &Coloring) -> Result<bool> {
    if c.assign.len() != t.n() {
        return Err(Error::PartialColoring {
            got: c.assign.len(),
            need: t.n(),
        });
    }
    for class in c.classes() {
        if !crate::tournament::is_transitive_set(t, &class)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Enumerates the transitive subsets of `s` that are inclusion-maximal
/// within `s` and contain `pivot`, as masks. Chains are grown by appending
/// sinks, so each transitive subset is visited once via its unique linear
/// order.
fn maximal_transitive_with_pivot(t: &Tournament, s: u64, pivot: usize) -> Vec<u64> {
    struct Dfs<'a> {
        t: &'a Tournament,
        s: u64,
        pivot: usize,
        prefixes: Vec<u64>,
        out: Vec<u64>,
    }
    impl Dfs<'_> {
        fn go(&mut self, mask: u64, d: u64) {
            if mask >> self.pivot & 1 == 0 && d >> self.pivot & 1 == 0 {
                return;
            }
            if d == 0 {
                let rest = self.s & !mask;
                let mut m = rest;
                while m != 0 {
                    let u = m.trailing_zeros() as usize;
                    m &= m - 1;
                    let in_part = mask & self.t.in_row64(u);
                    if in_part == self.prefixes[in_part.count_ones() as usize] {
                        return; // u can be inserted; not maximal
                    }
                }
                self.out.push(mask);
                return;
            }
            let mut m = d;
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                self.prefixes.push(mask | 1 << w);
                self.go(mask | 1 << w, d & self.t.row64(w));
                self.prefixes.pop();
            }
        }
    }
    let mut dfs = Dfs {
        t,
        s,
        pivot,
        prefixes: vec![0],
        out: Vec::new(),
    };
    let mut m = s;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        dfs.prefixes.push(1 << v);
        dfs.go(1 << v, s & t.row64(v));
        dfs.prefixes.pop();
    }
    dfs.out
}

fn chi_rec(t: &Tournament, s: u64, memo: &mut HashMap<u64, (usize, u64)>) -> usize {
    if s == 0 {
        return 0;
    }
    if let Some(&(k, _)) = memo.get(&s) {
        return k;
    }
    let pivot = s.trailing_zeros() as usize;
    let mut classes = maximal_transitive_with_pivot(t, s, pivot);
    // Deterministic witness: try the lexicographically least class first.
    classes.sort_by_key(|&m| VertexSet::from_mask64(m));
    let mut best = usize::MAX;
    let mut best_class = 0u64;
    for class in classes {
        let sub = chi_rec(t, s & !class, memo);
        if sub + 1 < best {
            best = sub + 1;
            best_class = class;
        }
    }
    memo.insert(s, (best, best_class));
    best
}

/// Exact chromatic number with a witness coloring.
pub fn chromatic_number(t: &Tournament) -> Result<(usize, Coloring)> {
    chromatic_number_with_limit(t, DEFAULT_CHROMATIC_LIMIT)
}

pub fn chromatic_number_with_limit(t: &Tournament, limit: usize) -> Result<(usize, Coloring)> {
    let n = t.n();
    if n == 0 {
        return Err(Error::EmptyTournament);
    }
    let limit = limit.min(64);
    if n > limit {
        return Err(Error::SizeLimit {
            op: "chromatic_number",
            n,
            limit,
        });
    }
    let full = t.full_mask64();
    let mut memo = HashMap::new();
    let k = chi_rec(t, full, &mut memo);
    // Reconstruct the witness from the stored class choices.
    let mut raw = vec![0usize; n];
    let mut s = full;
    let mut color = 0;
    while s != 0 {
        let (_, class) = memo[&s];
        let mut m = class;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            raw[v] = color;
        }
        color += 1;
        s &= !class;
    }
    let witness = Coloring::new(&raw);
    debug_assert_eq!(witness.k(), k);
    debug_assert!(is_valid_coloring(t, &witness).unwrap());
    Ok((k, witness))
}

/// Exact decision: a coloring with at most `k` colors, or `None` if no such
/// coloring exists.
pub fn find_k_coloring(t: &Tournament, k: usize) -> Result<Option<Coloring>> {
    find_k_coloring_with_limit(t, k, DEFAULT_CHROMATIC_LIMIT)
}

pub fn find_k_coloring_with_limit(
    t: &Tournament,
    k: usize,
    limit: usize,
) -> Result<Option<Coloring>> {
    if t.n() == 0 {
        return Ok(Some(Coloring::new(&[])));
    }
    let (chi, witness) = chromatic_number_with_limit(t, limit)?;
    Ok(if chi <= k { Some(witness) } else { None })
}

/// Cheap bounds for tournaments beyond the exact engine's limit: the lower
/// bound is 2 as soon as any cyclic triangle exists, and the upper bound
/// peels greedy maximal transitive sets.
pub fn chromatic_bounds(t: &Tournament) -> (usize, usize) {
    let n = t.n();
    if n == 0 {
        return (0, 0);
    }
    let lower = if t.is_transitive() { 1 } else { 2 };
    let mut remaining: Vec<usize> = t.vertices().collect();
    let mut upper = 0;
    while !remaining.is_empty() {
        // Greedy chain: keep the class ordered by domination and insert
        // each vertex whose in-set within the class is a prefix.
        let mut chain: Vec<usize> = Vec::new();
        let mut rest = Vec::new();
        for &u in &remaining {
            let cut = chain.iter().position(|&w| t.has_edge(u, w));
            let fits = match cut {
                Some(i) => chain[i..].iter().all(|&w| t.has_edge(u, w)),
                None => true,
            };
            if fits {
                chain.insert(cut.unwrap_or(chain.len()), u);
            } else {
                rest.push(u);
            }
        }
        upper += 1;
        remaining = rest;
    }
    (lower, upper.max(lower))
}

/// Outcome of the 3-colorability branch-and-bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThreeColorOutcome {
    Colorable(Coloring),
    Refuted,
    Undecided,
}

/// Decides 3-colorability by clause-propagation branch and bound. Intended
/// for instances past the subset engine (up to ~31 vertices); `node_budget`
/// caps the number of branch decisions.
pub fn refute_three_coloring(t: &Tournament, node_budget: u64) -> ThreeColorOutcome {
    let n = t.n();
    if n == 0 {
        return ThreeColorOutcome::Colorable(Coloring::new(&[]));
    }
    assert!(n <= 64, "refuter uses single-word masks");

    struct Bb<'a> {
        t: &'a Tournament,
        n: usize,
        domain: Vec<u8>,
        color: Vec<Option<usize>>,
        nodes: u64,
        budget: u64,
        out_of_budget: bool,
    }
    impl Bb<'_> {
        /// Assigns and propagates; returns false on conflict.
        fn assign(&mut self, v: usize, c: usize, trail: &mut Vec<(usize, u8)>) -> bool {
            let mut queue = vec![(v, c)];
            while let Some((v, c)) = queue.pop() {
                if let Some(existing) = self.color[v] {
                    if existing != c {
                        return false;
                    }
                    continue;
                }
                if self.domain[v] >> c & 1 == 0 {
                    return false;
                }
                trail.push((v, self.domain[v]));
                self.color[v] = Some(c);
                self.domain[v] = 1 << c;
                // Every vertex closing a cyclic triangle with a same-colored
                // pair loses that color.
                for u in 0..self.n {
                    if u == v || self.color[u] != Some(c) {
                        continue;
                    }
                    let z = if self.t.has_edge(u, v) {
                        self.t.row64(v) & self.t.in_row64(u)
                    } else {
                        self.t.row64(u) & self.t.in_row64(v)
                    };
                    let mut m = z;
                    while m != 0 {
                        let w = m.trailing_zeros() as usize;
                        m &= m - 1;
                        if self.color[w].is_some() {
                            if self.color[w] == Some(c) {
                                return false;
                            }
                            continue;
                        }
                        if self.domain[w] >> c & 1 == 1 {
                            trail.push((w, self.domain[w]));
                            self.domain[w] &= !(1 << c);
                            match self.domain[w] {
                                0 => return false,
                                d if d.count_ones() == 1 => {
                                    queue.push((w, d.trailing_zeros() as usize));
                                }
                                _ => {}
                            }
                        }
                    }
                }
            }
            true
        }

        fn undo(&mut self, trail: &mut Vec<(usize, u8)>, mark: usize) {
            while trail.len() > mark {
                let (v, dom) = trail.pop().unwrap();
                if dom.count_ones() > 1 || self.color[v].is_some() {
                    self.color[v] = None;
                }
                self.domain[v] = dom;
            }
        }

        fn search(&mut self, trail: &mut Vec<(usize, u8)>) -> bool {
            let branch = (0..self.n)
                .filter(|&v| self.color[v].is_none())
                .min_by_key(|&v| (self.domain[v].count_ones(), v));
            let Some(v) = branch else {
                return true;
            };
            self.nodes += 1;
            if self.nodes > self.budget {
                self.out_of_budget = true;
                return false;
            }
            for c in 0..3 {
                if self.domain[v] >> c & 1 == 0 {
                    continue;
                }
                let mark = trail.len();
                if self.assign(v, c, trail) && self.search(trail) {
                    return true;
                }
                if self.out_of_budget {
                    return false;
                }
                self.undo(trail, mark);
            }
            false
        }
    }

    let mut bb = Bb {
        t,
        n,
        domain: vec![0b111u8; n],
        color: vec![None; n],
        nodes: 0,
        budget: node_budget,
        out_of_budget: false,
    };
    let mut trail = Vec::new();
    // Symmetry breaking: the first vertex may take color 0.
    if !bb.assign(0, 0, &mut trail) {
        return ThreeColorOutcome::Refuted;
    }
    let found = bb.search(&mut trail);
    if found {
        let raw: Vec<usize> = bb.color.iter().map(|c| c.unwrap()).collect();
        let coloring = Coloring::new(&raw);
        debug_assert!(is_valid_coloring(t, &coloring).unwrap());
        ThreeColorOutcome::Colorable(coloring)
    } else if bb.out_of_budget {
        ThreeColorOutcome::Undecided
    } else {
        ThreeColorOutcome::Refuted
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, FamilySpec};
    use crate::tournament::build;

    fn cyclic_triangle() -> Tournament {
        build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    /// Independent oracle: minimum class count over every assignment of at
    /// most `kmax` colors, by direct recursion over vertices.
    fn naive_chi_up_to(t: &Tournament, kmax: usize) -> Option<usize> {
        fn can_color(t: &Tournament, k: usize, assign: &mut Vec<usize>, v: usize) -> bool {
            if v == t.n() {
                return true;
            }
            let used = assign.iter().take(v).copied().max().map_or(0, |m| m + 1);
            for c in 0..k.min(used + 1) {
                let ok = (0..v).all(|a| {
                    (0..a).all(|b| {
                        !(assign[a] == c && assign[b] == c && {
                            let (x, y, z) = (b, a, v);
                            // cyclic triangle on {x, y, z} with color c?
                            let tri = |p: usize, q: usize, r: usize| {
                                t.has_edge(p, q) && t.has_edge(q, r) && t.has_edge(r, p)
                            };
                            tri(x, y, z) || tri(x, z, y)
                        })
                    })
                });
                if ok {
                    assign[v] = c;
                    if can_color(t, k, assign, v + 1) {
                        return true;
                    }
                }
            }
            false
        }
        (1..=kmax).find(|&k| {
            let mut assign = vec![0; t.n()];
            can_color(t, k, &mut assign, 0)
        })
    }

    #[test]
    fn coloring_validity() {
        let c = cyclic_triangle();
        let good = Coloring::new(&[0, 0, 1]);
        assert!(is_valid_coloring(&c, &good).unwrap());
        let bad = Coloring::new(&[0, 0, 0]);
        assert!(!is_valid_coloring(&c, &bad).unwrap());
        let short = Coloring::new(&[0, 0]);
        assert!(matches!(
            is_valid_coloring(&c, &short),
            Err(Error::PartialColoring { got: 2, need: 3 })
        ));
    }

    #[test]
    fn k_coloring_examples() {
        let c = cyclic_triangle();
        assert!(find_k_coloring(&c, 1).unwrap().is_none());
        assert!(find_k_coloring(&c, 2).unwrap().is_some());

        let d3 = generate(&FamilySpec::D(3)).unwrap();
        assert!(find_k_coloring(&d3, 2).unwrap().is_none());
        let w = find_k_coloring(&d3, 3).unwrap().unwrap();
        assert!(is_valid_coloring(&d3, &w).unwrap());

        let l9 = generate(&FamilySpec::L(9)).unwrap();
        let w = find_k_coloring(&l9, 1).unwrap().unwrap();
        assert_eq!(w.k(), 1);
    }

    #[test]
    fn chi_of_named_families() {
        for n in 1..=4u32 {
            let d = generate(&FamilySpec::D(n)).unwrap();
            assert_eq!(chromatic_number(&d).unwrap().0, n as usize, "chi(D_{n})");
        }
        let a3 = generate(&FamilySpec::A(3)).unwrap();
        assert_eq!(chromatic_number(&a3).unwrap().0, 3);
        let u3 = generate(&FamilySpec::U(3)).unwrap();
        assert_eq!(chromatic_number(&u3).unwrap().0, 2);
        let s3 = generate(&FamilySpec::S(3)).unwrap();
        let (chi, _) = chromatic_number(&s3).unwrap();
        assert_eq!(chi, 2);
        // The split into v1..v3 and v4, v5 is itself a valid 2-coloring.
        let split = Coloring::new(&[0, 0, 0, 1, 1]);
        assert!(is_valid_coloring(&s3, &split).unwrap());
    }

    #[test]
    fn agrees_with_naive_oracle() {
        for n in 1..=5 {
            for t in crate::enumerate::enumerate_tournaments(n).unwrap() {
                let fast = chromatic_number(&t).unwrap().0;
                let naive = naive_chi_up_to(&t, 3).unwrap();
                assert_eq!(fast, naive);
            }
        }
    }

    #[test]
    fn monotone_under_induced() {
        for t in crate::enumerate::enumerate_tournaments(4).unwrap() {
            let chi = chromatic_number(&t).unwrap().0;
            for mask in 1u64..(1 << 4) {
                let s = VertexSet::from_mask64(mask);
                let sub = crate::tournament::induced(&t, &s).unwrap();
                assert!(chromatic_number(&sub).unwrap().0 <= chi);
            }
        }
    }

    #[test]
    fn empty_and_limits() {
        assert!(matches!(
            chromatic_number(&Tournament::empty()),
            Err(Error::EmptyTournament)
        ));
        let big = Tournament::from_fn(30, |_, _| true);
        assert!(matches!(
            chromatic_number(&big),
            Err(Error::SizeLimit { .. })
        ));
        assert_eq!(chromatic_bounds(&big), (1, 1));
    }

    #[test]
    fn refuter_sanity() {
        let c = cyclic_triangle();
        assert!(matches!(
            refute_three_coloring(&c, 1_000),
            ThreeColorOutcome::Colorable(_)
        ));
        let d3 = generate(&FamilySpec::D(3)).unwrap();
        assert!(matches!(
            refute_three_coloring(&d3, 100_000),
            ThreeColorOutcome::Colorable(_)
        ));
        let d4 = generate(&FamilySpec::D(4)).unwrap();
        // chi(D_4) = 4, so the refuter must prove it.
        assert_eq!(
            refute_three_coloring(&d4, 10_000_000),
            ThreeColorOutcome::Refuted
        );
    }
}
