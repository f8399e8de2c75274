//! Backedge graphs, forest orderings, the forest 2-coloring, and the
//! incomparable integer maps that characterize forest tournaments.

use std::collections::HashMap;

use crate::chromatic::{chromatic_number, Coloring};
use crate::error::{Error, Result};
use crate::tournament::{Ordering, Tournament};

/// Default ceiling for the forest-ordering search (it walks orderings).
pub const FOREST_SEARCH_LIMIT: usize = 9;

/// The undirected graph of backward edges of a tournament under an
/// ordering, with its connected components.
#[derive(Clone, Debug)]
pub struct BackedgeGraph {
    order: Ordering,
    pos: Vec<usize>,
    /// Unordered vertex pairs; `(u, v)` with `u` earlier in the order.
    edges: Vec<(usize, usize)>,
    /// Component id per vertex (isolated vertices get their own).
    comp: Vec<usize>,
}

impl BackedgeGraph {
    pub fn order(&self) -> &Ordering {
        &self.order
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.comp[v]
    }

    pub fn position_of(&self, v: usize) -> usize {
        self.pos[v]
    }

    /// Vertex adjacency lists of the backedge graph.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.pos.len()];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// True iff the backedge graph is acyclic.
    pub fn is_forest(&self) -> bool {
        let n = self.pos.len();
        let mut dsu: Vec<usize> = (0..n).collect();
        fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
            if dsu[x] != x {
                dsu[x] = find(dsu, dsu[x]);
            }
            dsu[x]
        }
        for &(u, v) in &self.edges {
            let (ru, rv) = (find(&mut dsu, u), find(&mut dsu, v));
            if ru == rv {
                return false;
            }
            dsu[ru] = rv;
        }
        true
    }
}

/// Backedge graph of `t` under `order`: `{u, v}` is an edge iff the
/// later-ordered endpoint beats the earlier one.
pub fn backedge_graph(t: &Tournament, order: &Ordering) -> Result<BackedgeGraph> {
    if order.len() != t.n() {
        return Err(Error::WrongSize {
            op: "backedge_graph",
            expected: t.n(),
            got: order.len(),
        });
    }
    let n = t.n();
    let seq = order.seq();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if t.has_edge(seq[j], seq[i]) {
                edges.push((seq[i], seq[j]));
            }
        }
    }
    let mut dsu: Vec<usize> = (0..n).collect();
    fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
        if dsu[x] != x {
            dsu[x] = find(dsu, dsu[x]);
        }
        dsu[x]
    }
    for &(u, v) in &edges {
        let (ru, rv) = (find(&mut dsu, u), find(&mut dsu, v));
        if ru != rv {
            dsu[ru] = rv;
        }
    }
    let mut comp = vec![0usize; n];
    let mut ids: HashMap<usize, usize> = HashMap::new();
    for (v, slot) in comp.iter_mut().enumerate() {
        let root = find(&mut dsu, v);
        let next = ids.len();
        *slot = *ids.entry(root).or_insert(next);
    }
    Ok(BackedgeGraph {
        order: order.clone(),
        pos: order.positions(),
        edges,
        comp,
    })
}

/// Minimum number of edges crossing a prefix cut, over all proper prefixes.
pub fn thickness(b: &BackedgeGraph) -> Result<usize> {
    let n = b.pos.len();
    if n < 2 {
        return Err(Error::TooFewVertices);
    }
    let mut best = usize::MAX;
    for cut in 1..n {
        let crossing = b
            .edges
            .iter()
            .filter(|&&(u, v)| {
                let (pu, pv) = (b.pos[u], b.pos[v]);
                pu.min(pv) < cut && pu.max(pv) >= cut
            })
            .count();
        best = best.min(crossing);
    }
    Ok(best)
}

/// Segment-level forest-ordering check used both by the public predicate
/// and by the map construction. Positions refer to `seq`.
struct SegmentCheck<'a> {
    t: &'a Tournament,
    seq: &'a [usize],
    memo: HashMap<(usize, usize), bool>,
}

impl SegmentCheck<'_> {
    /// Backedges of the segment, as position pairs, plus per-position
    /// component ids of the segment's own backedge graph.
    fn segment_edges(&self, lo: usize, hi: usize) -> (Vec<(usize, usize)>, Vec<usize>) {
        let mut edges = Vec::new();
        for i in lo..hi {
            for j in (i + 1)..hi {
                if self.t.has_edge(self.seq[j], self.seq[i]) {
                    edges.push((i, j));
                }
            }
        }
        let mut dsu: Vec<usize> = (0..hi - lo).collect();
        fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
            if dsu[x] != x {
                dsu[x] = find(dsu, dsu[x]);
            }
            dsu[x]
        }
        for &(i, j) in &edges {
            let (a, b) = (find(&mut dsu, i - lo), find(&mut dsu, j - lo));
            if a != b {
                dsu[a] = b;
            }
        }
        let comps: Vec<usize> = (0..hi - lo).map(|x| find(&mut dsu, x)).collect();
        (edges, comps)
    }

    /// Cut positions within `(lo, hi)` whose crossing backedges lie in
    /// pairwise-distinct components of the segment's backedge graph.
    fn valid_cuts(&self, lo: usize, hi: usize) -> Vec<usize> {
        let (edges, comps) = self.segment_edges(lo, hi);
        let mut cuts = Vec::new();
        'cut: for c in (lo + 1)..hi {
            let mut seen = vec![false; hi - lo];
            for &(i, j) in &edges {
                if i < c && j >= c {
                    let id = comps[i - lo];
                    if seen[id] {
                        continue 'cut;
                    }
                    seen[id] = true;
                }
            }
            cuts.push(c);
        }
        cuts
    }

    fn is_forest(&mut self, lo: usize, hi: usize) -> bool {
        if hi - lo <= 1 {
            return true;
        }
        if let Some(&v) = self.memo.get(&(lo, hi)) {
            return v;
        }
        let mut ok = false;
        for c in self.valid_cuts(lo, hi) {
            if self.is_forest(lo, c) && self.is_forest(c, hi) {
                ok = true;
                break;
            }
        }
        self.memo.insert((lo, hi), ok);
        ok
    }

    /// Leftmost cut splitting `(lo, hi)` into two forest-ordered sides.
    fn leftmost_forest_cut(&mut self, lo: usize, hi: usize) -> Option<usize> {
        self.valid_cuts(lo, hi)
            .into_iter()
            .find(|&c| self.is_forest(lo, c) && self.is_forest(c, hi))
    }
}

/// Recursive forest-ordering predicate: some cut has its crossing
/// backedges in pairwise-distinct components and both sides are again
/// forest orderings.
pub fn is_forest_ordering(t: &Tournament, order: &Ordering) -> Result<bool> {
    if order.len() != t.n() {
        return Err(Error::WrongSize {
            op: "is_forest_ordering",
            expected: t.n(),
            got: order.len(),
        });
    }
    let mut check = SegmentCheck {
        t,
        seq: order.seq(),
        memo: HashMap::new(),
    };
    Ok(check.is_forest(0, t.n()))
}

/// Searches for a forest ordering; exact within the size limit. Orderings
/// are built left to right, pruning as soon as the partial backedge graph
/// acquires a cycle; a chromatic number of 3 or more rules the tournament
/// out immediately.
pub fn find_forest_ordering(t: &Tournament) -> Result<Option<Ordering>> {
    find_forest_ordering_with_limit(t, FOREST_SEARCH_LIMIT)
}

pub fn find_forest_ordering_with_limit(t: &Tournament, limit: usize) -> Result<Option<Ordering>> {
    let n = t.n();
    if n > limit {
        return Err(Error::Undecided("find_forest_ordering"));
    }
    if n <= 1 {
        return Ok(Some(Ordering::identity(n)));
    }
    if chromatic_number(t)?.0 >= 3 {
        return Ok(None);
    }

    fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
        if dsu[x] != x {
            dsu[x] = find(dsu, dsu[x]);
        }
        dsu[x]
    }

    // Build orderings left to right; the acyclicity prune is necessary but
    // not sufficient, so complete orderings still run the recursive check.
    // The first passing ordering in lexicographic order is returned.
    fn search(
        t: &Tournament,
        seq: &mut Vec<usize>,
        used: &mut u64,
        dsu: &[usize],
    ) -> Result<Option<Vec<usize>>> {
        let n = t.n();
        if seq.len() == n {
            let order = Ordering::new(seq.clone()).expect("permutation");
            if is_forest_ordering(t, &order)? {
                return Ok(Some(seq.clone()));
            }
            return Ok(None);
        }
        for v in 0..n {
            if *used >> v & 1 == 1 {
                continue;
            }
            // Appending v adds a backedge {u, v} for every placed u it beats.
            let mut next = dsu.to_vec();
            let mut cyclic = false;
            for &u in seq.iter() {
                if t.has_edge(v, u) {
                    let (ru, rv) = (find(&mut next, u), find(&mut next, v));
                    if ru == rv {
                        cyclic = true;
                        break;
                    }
                    next[ru] = rv;
                }
            }
            if cyclic {
                continue;
            }
            seq.push(v);
            *used |= 1 << v;
            if let Some(found) = search(t, seq, used, &next)? {
                return Ok(Some(found));
            }
            seq.pop();
            *used &= !(1 << v);
        }
        Ok(None)
    }

    let mut seq = Vec::with_capacity(n);
    let mut used = 0u64;
    let dsu: Vec<usize> = (0..n).collect();
    let found = search(t, &mut seq, &mut used, &dsu)?;
    Ok(found.map(|seq| Ordering::new(seq).expect("permutation")))
}

/// 2-colors a forest-ordered tournament by bipartitioning its backedge
/// forest; classes carry no backedges, hence are transitive.
pub fn forest_two_coloring(t: &Tournament, order: &Ordering) -> Result<Coloring> {
    if !is_forest_ordering(t, order)? {
        return Err(Error::NotForestOrdering);
    }
    let b = backedge_graph(t, order)?;
    let adj = b.adjacency();
    let n = t.n();
    let mut color = vec![usize::MAX; n];
    for start in 0..n {
        if color[start] != usize::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = vec![start];
        while let Some(u) = queue.pop() {
            for &w in &adj[u] {
                if color[w] == usize::MAX {
                    color[w] = 1 - color[u];
                    queue.push(w);
                }
            }
        }
    }
    let coloring = Coloring::new(&color);
    debug_assert!(crate::chromatic::is_valid_coloring(t, &coloring).unwrap());
    Ok(coloring)
}

/// An injective vertex-to-integer map meant to keep same-component
/// backedge gaps at ratio more than `r` apart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncomparableMap {
    pub phi: Vec<u64>,
    pub r: u64,
}

impl IncomparableMap {
    /// The ordering induced by increasing map values.
    pub fn induced_ordering(&self) -> Ordering {
        let mut verts: Vec<usize> = (0..self.phi.len()).collect();
        verts.sort_by_key(|&v| self.phi[v]);
        Ordering::new(verts).expect("permutation")
    }
}

/// Builds an `r`-incomparable map realizing the given forest ordering, by
/// the affine combination across the leftmost forest cut:
/// right values become `left_max + a*b*(r+1)^2 + a*(r+1) * phi2`.
///
/// Degenerate spans are lifted to 1 so the scale factor stays nonzero; the
/// cross-cut gap bounds that drive the ratio argument are unaffected.
pub fn build_incomparable_map(t: &Tournament, order: &Ordering, r: u64) -> Result<IncomparableMap> {
    if r == 0 {
        return Err(Error::ZeroParam);
    }
    if !is_forest_ordering(t, order)? {
        return Err(Error::NotForestOrdering);
    }
    let mut check = SegmentCheck {
        t,
        seq: order.seq(),
        memo: HashMap::new(),
    };

    fn build(check: &mut SegmentCheck<'_>, lo: usize, hi: usize, r: u64) -> Result<Vec<u64>> {
        if hi - lo == 1 {
            return Ok(vec![1]);
        }
        let cut = check
            .leftmost_forest_cut(lo, hi)
            .expect("segment verified forest-ordered");
        let phi1 = build(check, lo, cut, r)?;
        let phi2 = build(check, cut, hi, r)?;
        let a = (*phi1.last().unwrap() - phi1[0]).max(1);
        let b = (*phi2.last().unwrap() - phi2[0]).max(1);
        let r1 = r.checked_add(1).ok_or(Error::Overflow)?;
        let base = a
            .checked_mul(b)
            .and_then(|ab| ab.checked_mul(r1))
            .and_then(|x| x.checked_mul(r1))
            .ok_or(Error::Overflow)?;
        let scale = a.checked_mul(r1).ok_or(Error::Overflow)?;
        let left_max = *phi1.last().unwrap();
        let mut out = phi1;
        for v in phi2 {
            let scaled = scale.checked_mul(v).ok_or(Error::Overflow)?;
            let val = left_max
                .checked_add(base)
                .and_then(|x| x.checked_add(scaled))
                .ok_or(Error::Overflow)?;
            out.push(val);
        }
        Ok(out)
    }

    let n = t.n();
    if n == 0 {
        return Ok(IncomparableMap { phi: Vec::new(), r });
    }
    let values = build(&mut check, 0, n, r)?;
    let mut phi = vec![0u64; n];
    for (pos, &v) in order.seq().iter().enumerate() {
        phi[v] = values[pos];
    }
    let map = IncomparableMap { phi, r };
    debug_assert_eq!(map.induced_ordering(), *order);
    debug_assert!(verify_incomparable(t, &map));
    Ok(map)
}

fn edge_gap(phi: &[u64], e: (usize, usize)) -> u64 {
    phi[e.0].abs_diff(phi[e.1])
}

/// True iff every same-component pair of backedges under the induced
/// ordering has gap ratio strictly outside `[1/r, r]`.
pub fn verify_incomparable(t: &Tournament, m: &IncomparableMap) -> bool {
    let n = t.n();
    if m.phi.len() != n {
        return false;
    }
    let mut sorted = m.phi.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return false; // not injective
    }
    let order = m.induced_ordering();
    let b = backedge_graph(t, &order).expect("matching sizes");
    let edges = b.edges();
    for (i, &e) in edges.iter().enumerate() {
        for &f in edges.iter().skip(i + 1) {
            if b.component_of(e.0) != b.component_of(f.0) {
                continue;
            }
            let (ge, gf) = (edge_gap(&m.phi, e), edge_gap(&m.phi, f));
            if ge <= m.r.saturating_mul(gf) && gf <= m.r.saturating_mul(ge) {
                return false;
            }
        }
    }
    true
}

/// Bounded-path variant: edges are `(r, s)`-comparable when some simple
/// path with at most `s` edges contains both and their gap ratio lies in
/// `[1/r, r]`. Returns true iff no two backedges are `(r, s)`-comparable.
pub fn verify_incomparable_rs(t: &Tournament, m: &IncomparableMap, s: usize) -> bool {
    let n = t.n();
    if m.phi.len() != n {
        return false;
    }
    let order = m.induced_ordering();
    let b = backedge_graph(t, &order).expect("matching sizes");
    let edges = b.edges();
    let adj = b.adjacency();
    for (i, &e) in edges.iter().enumerate() {
        for &f in edges.iter().skip(i + 1) {
            let (ge, gf) = (edge_gap(&m.phi, e), edge_gap(&m.phi, f));
            let in_band = ge <= m.r.saturating_mul(gf) && gf <= m.r.saturating_mul(ge);
            if in_band && joined_by_short_path(&adj, e, f, s) {
                return false;
            }
        }
    }
    true
}

/// A minimal simple path containing two edges can always be traversed
/// starting with one of them, so a DFS out of each orientation of `e`
/// suffices.
fn joined_by_short_path(
    adj: &[Vec<usize>],
    e: (usize, usize),
    f: (usize, usize),
    s: usize,
) -> bool {
    if s < 2 {
        return false;
    }
    fn dfs(
        adj: &[Vec<usize>],
        at: usize,
        visited: &mut Vec<bool>,
        budget: usize,
        f: (usize, usize),
    ) -> bool {
        if budget == 0 {
            return false;
        }
        for &w in &adj[at] {
            if visited[w] {
                continue;
            }
            if (at, w) == f || (w, at) == f {
                return true;
            }
            visited[w] = true;
            if dfs(adj, w, visited, budget - 1, f) {
                return true;
            }
            visited[w] = false;
        }
        false
    }
    for (first, second) in [(e.0, e.1), (e.1, e.0)] {
        let mut visited = vec![false; adj.len()];
        visited[first] = true;
        visited[second] = true;
        if dfs(adj, second, &mut visited, s - 1, f) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, FamilySpec};
    use crate::tournament::build;

    fn cyclic_triangle() -> Tournament {
        build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    /// A forest ordering of U_3 whose backedges are {w1,w4} and {w2,w5}.
    fn u3_forest_ordering() -> (Tournament, Ordering) {
        let u3 = generate(&FamilySpec::U(3)).unwrap();
        let order = Ordering::new(vec![1, 4, 2, 0, 3]).unwrap();
        (u3, order)
    }

    #[test]
    fn backedge_examples() {
        let c = cyclic_triangle();
        let b = backedge_graph(&c, &Ordering::identity(3)).unwrap();
        assert_eq!(b.edges(), &[(0, 2)]);

        let l3 = generate(&FamilySpec::L(3)).unwrap();
        let rev = Ordering::new(vec![2, 1, 0]).unwrap();
        let b = backedge_graph(&l3, &rev).unwrap();
        assert_eq!(b.edges().len(), 3);
        assert!(!b.is_forest());

        // N under its defining order has backedges {u1,u3} and {u1,u5}.
        let n = generate(&FamilySpec::N).unwrap();
        let b = backedge_graph(&n, &Ordering::identity(5)).unwrap();
        assert_eq!(b.edges(), &[(0, 2), (0, 4)]);
    }

    #[test]
    fn thickness_examples() {
        let c = cyclic_triangle();
        let b = backedge_graph(&c, &Ordering::identity(3)).unwrap();
        assert_eq!(thickness(&b).unwrap(), 1);

        let l3 = generate(&FamilySpec::L(3)).unwrap();
        let b = backedge_graph(&l3, &Ordering::identity(3)).unwrap();
        assert_eq!(thickness(&b).unwrap(), 0);

        let single = Tournament::single();
        let b = backedge_graph(&single, &Ordering::identity(1)).unwrap();
        assert!(matches!(thickness(&b), Err(Error::TooFewVertices)));
    }

    #[test]
    fn forest_ordering_examples() {
        let (u3, order) = u3_forest_ordering();
        let b = backedge_graph(&u3, &order).unwrap();
        let mut pairs: Vec<(usize, usize)> = b
            .edges()
            .iter()
            .map(|&(u, v)| {
                (
                    b.position_of(u).min(b.position_of(v)),
                    b.position_of(u).max(b.position_of(v)),
                )
            })
            .collect();
        pairs.sort();
        assert_eq!(pairs, vec![(0, 3), (1, 4)]);
        assert!(is_forest_ordering(&u3, &order).unwrap());

        // N's defining order is a forest ordering.
        let n = generate(&FamilySpec::N).unwrap();
        assert!(is_forest_ordering(&n, &Ordering::identity(5)).unwrap());

        let l3 = generate(&FamilySpec::L(3)).unwrap();
        let rev = Ordering::new(vec![2, 1, 0]).unwrap();
        assert!(!is_forest_ordering(&l3, &rev).unwrap());
    }

    #[test]
    fn find_forest_ordering_examples() {
        for spec in [FamilySpec::D(3), FamilySpec::S(3), FamilySpec::Delta2] {
            let t = generate(&spec).unwrap();
            assert!(
                find_forest_ordering(&t).unwrap().is_none(),
                "{spec} is not a forest tournament"
            );
        }
        for spec in [FamilySpec::N, FamilySpec::U(3), FamilySpec::L(5)] {
            let t = generate(&spec).unwrap();
            let order = find_forest_ordering(&t).unwrap().unwrap();
            assert!(is_forest_ordering(&t, &order).unwrap(), "{spec}");
        }
        let big = Tournament::from_fn(10, |_, _| true);
        assert!(matches!(
            find_forest_ordering(&big),
            Err(Error::Undecided(_))
        ));
    }

    #[test]
    fn two_coloring_examples() {
        let single = Tournament::single();
        let c = forest_two_coloring(&single, &Ordering::identity(1)).unwrap();
        assert_eq!(c.k(), 1);

        let (u3, order) = u3_forest_ordering();
        let col = forest_two_coloring(&u3, &order).unwrap();
        assert!(col.k() <= 2);
        assert!(crate::chromatic::is_valid_coloring(&u3, &col).unwrap());

        let l5 = generate(&FamilySpec::L(5)).unwrap();
        let col = forest_two_coloring(&l5, &Ordering::identity(5)).unwrap();
        assert_eq!(col.k(), 1);

        let l3 = generate(&FamilySpec::L(3)).unwrap();
        let rev = Ordering::new(vec![2, 1, 0]).unwrap();
        assert!(matches!(
            forest_two_coloring(&l3, &rev),
            Err(Error::NotForestOrdering)
        ));
    }

    #[test]
    fn incomparable_map_examples() {
        let c = cyclic_triangle();
        let m = build_incomparable_map(&c, &Ordering::identity(3), 10).unwrap();
        assert!(verify_incomparable(&c, &m));

        let (u3, order) = u3_forest_ordering();
        let m = build_incomparable_map(&u3, &order, 2).unwrap();
        assert!(verify_incomparable(&u3, &m));

        let n = generate(&FamilySpec::N).unwrap();
        let m = build_incomparable_map(&n, &Ordering::identity(5), 9).unwrap();
        assert!(verify_incomparable(&n, &m));
    }

    #[test]
    fn verify_rejects_comparable_gaps() {
        // Position map on reversed L_3: backedge triangle with gaps 1, 1, 2.
        let l3 = generate(&FamilySpec::L(3)).unwrap();
        let phi = vec![3, 2, 1];
        let m = IncomparableMap { phi, r: 2 };
        assert!(!verify_incomparable(&l3, &m));

        // A single backedge imposes no constraint.
        let c = cyclic_triangle();
        let m = IncomparableMap {
            phi: vec![1, 2, 3],
            r: 1_000_000,
        };
        assert!(verify_incomparable(&c, &m));
    }

    #[test]
    fn rs_variant() {
        let l3 = generate(&FamilySpec::L(3)).unwrap();
        let m = IncomparableMap {
            phi: vec![3, 2, 1],
            r: 2,
        };
        // The triangle joins everything within two edges.
        assert!(!verify_incomparable_rs(&l3, &m, 2));
        // With path cap 1 no two distinct edges share a path.
        assert!(verify_incomparable_rs(&l3, &m, 1));
    }

    use crate::error::Error;
}
