//! Tournaments and their basic operations.
//!
//! A tournament is a complete antisymmetric digraph: every unordered pair of
//! vertices carries exactly one directed edge. Vertices are `0..n`. The
//! adjacency relation is stored as a row-major bitset so that set-level
//! operations (transitivity tests, neighborhood intersections) are word ops.

use crate::error::{Error, Result};

/// A tournament on `n` vertices. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Tournament {
    /// The empty tournament (no vertices).
    pub fn empty() -> Self {
        Tournament {
            n: 0,
            stride: 0,
            bits: Vec::new(),
        }
    }

    /// Single vertex tournament, `I` in the usual notation.
    pub fn single() -> Self {
        Tournament::from_fn(1, |_, _| false)
    }

    fn blank(n: usize) -> Self {
        let stride = n.div_ceil(64);
        Tournament {
            n,
            stride,
            bits: vec![0u64; n * stride],
        }
    }

    /// Builds a tournament from an orientation function: `f(u, v)` is
    /// consulted once per unordered pair `u < v` and means `u -> v`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut t = Tournament::blank(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if f(u, v) {
                    t.set_edge_raw(u, v);
                } else {
                    t.set_edge_raw(v, u);
                }
            }
        }
        t
    }

    fn set_edge_raw(&mut self, u: usize, v: usize) {
        self.bits[u * self.stride + v / 64] |= 1u64 << (v % 64);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// True iff the edge `u -> v` is present.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn out_degree(&self, u: usize) -> usize {
        let row = &self.bits[u * self.stride..(u + 1) * self.stride];
        row.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn in_degree(&self, u: usize) -> usize {
        self.n - 1 - self.out_degree(u)
    }

    /// Out-neighborhood of `u` as a single word. Only valid for `n <= 64`.
    pub fn row64(&self, u: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.bits[u]
    }

    /// In-neighborhood of `u` as a single word. Only valid for `n <= 64`.
    pub fn in_row64(&self, u: usize) -> u64 {
        debug_assert!(self.n <= 64);
        let all = self.full_mask64();
        all & !self.bits[u] & !(1u64 << u)
    }

    /// Mask of all vertices. Only valid for `n <= 64`.
    pub fn full_mask64(&self) -> u64 {
        debug_assert!(self.n <= 64);
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Transitivity test for a vertex subset given as a mask (`n <= 64`).
    ///
    /// A subset of a tournament is transitive iff the within-subset scores
    /// are pairwise distinct (the score-sequence characterization of the
    /// transitive tournament).
    pub fn transitive_mask(&self, mask: u64) -> bool {
        debug_assert!(self.n <= 64);
        let mut seen = 0u64;
        let mut m = mask;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            let score = (self.bits[u] & mask).count_ones();
            let bit = 1u64 << score;
            if seen & bit != 0 {
                return false;
            }
            seen |= bit;
        }
        true
    }

    /// True iff the whole tournament is transitive.
    pub fn is_transitive(&self) -> bool {
        if self.n <= 64 {
            return self.transitive_mask(self.full_mask64());
        }
        let mut scores: Vec<usize> = self.vertices().map(|u| self.out_degree(u)).collect();
        scores.sort_unstable();
        scores.iter().enumerate().all(|(i, &s)| i == s)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(())
    }
}

impl std::fmt::Debug for Tournament {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Tournament(n={})", self.n)?;
        for u in 0..self.n {
            for v in 0..self.n {
                write!(
                    f,
                    "{}",
                    if u != v && self.has_edge(u, v) {
                        '1'
                    } else {
                        '0'
                    }
                )?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A subset of the vertices of some tournament, kept sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn from_mask64(mask: u64) -> Self {
        let mut v = Vec::with_capacity(mask.count_ones() as usize);
        let mut m = mask;
        while m != 0 {
            v.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        VertexSet(v)
    }

    pub fn mask64(&self) -> u64 {
        debug_assert!(self.0.last().is_none_or(|&v| v < 64));
        self.0.iter().fold(0u64, |m, &v| m | (1u64 << v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    fn check_range(&self, t: &Tournament) -> Result<()> {
        for &v in &self.0 {
            t.check_vertex(v)?;
        }
        Ok(())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

/// A permutation of the vertices of some tournament: `seq[i]` is the vertex
/// at position `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ordering {
    seq: Vec<usize>,
}

impl Ordering {
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        let n = seq.len();
        let mut seen = vec![false; n];
        for &v in &seq {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if seen[v] {
                return Err(Error::DuplicatePair(v, v));
            }
            seen[v] = true;
        }
        Ok(Ordering { seq })
    }

    pub fn identity(n: usize) -> Self {
        Ordering {
            seq: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    pub fn vertex_at(&self, pos: usize) -> usize {
        self.seq[pos]
    }

    /// Position of each vertex: inverse permutation.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.seq.len()];
        for (i, &v) in self.seq.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Sub-ordering on a vertex subset, relative order preserved.
    pub fn restrict(&self, keep: &VertexSet) -> Vec<usize> {
        self.seq
            .iter()
            .copied()
            .filter(|&v| keep.contains(v))
            .collect()
    }
}

/// Builds a tournament from an explicit edge list covering every unordered
/// pair exactly once.
pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Tournament> {
    let mut t = Tournament::blank(n);
    let mut assigned = vec![false; n * n];
    for &(u, v) in edges {
        if u >= n {
            return Err(Error::VertexOutOfRange { vertex: u, n });
        }
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        let (a, b) = (u.min(v), u.max(v));
        if assigned[a * n + b] {
            return Err(Error::DuplicatePair(a, b));
        }
        assigned[a * n + b] = true;
        t.set_edge_raw(u, v);
    }
    for a in 0..n {
        for b in (a + 1)..n {
            if !assigned[a * n + b] {
                return Err(Error::MissingPair(a, b));
            }
        }
    }
    Ok(t)
}

/// Subtournament induced on `s`; vertex `i` of the result is `s.as_slice()[i]`.
pub fn induced(t: &Tournament, s: &VertexSet) -> Result<Tournament> {
    s.check_range(t)?;
    let verts = s.as_slice();
    Ok(Tournament::from_fn(verts.len(), |i, j| {
        t.has_edge(verts[i], verts[j])
    }))
}

/// Reverses every edge. Involutive.
pub fn complement(t: &Tournament) -> Tournament {
    Tournament::from_fn(t.n(), |u, v| t.has_edge(v, u))
}

/// True iff `t`'s subtournament on `s` has no directed cycle.
pub fn is_transitive_set(t: &Tournament, s: &VertexSet) -> Result<bool> {
    s.check_range(t)?;
    Ok(induced(t, s)?.is_transitive())
}

/// Strong components in condensation order: each earlier component is
/// complete to each later one. Singleton result iff `t` is strongly
/// connected; empty result for the empty tournament.
pub fn strong_components(t: &Tournament) -> Vec<VertexSet> {
    let n = t.n();
    if n == 0 {
        return Vec::new();
    }
    // Iterative Tarjan; components come out sinks-first, so reverse at the end.
    const UNSET: usize = usize::MAX;
    let mut index = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut next_index = 0usize;
    let mut comps: Vec<VertexSet> = Vec::new();

    for root in 0..n {
        if index[root] != UNSET {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(&mut (v, ref mut next_w)) = call.last_mut() {
            if *next_w == 0 {
                index[v] = next_index;
                low[v] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            let mut advanced = false;
            while *next_w < n {
                let w = *next_w;
                *next_w += 1;
                if w == v || !t.has_edge(v, w) {
                    continue;
                }
                if index[w] == UNSET {
                    call.push((w, 0));
                    advanced = true;
                    break;
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            }
            if advanced {
                continue;
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comps.push(VertexSet::new(comp));
            }
            call.pop();
            if let Some(&mut (parent, _)) = call.last_mut() {
                low[parent] = low[parent].min(low[v]);
            }
        }
    }
    comps.reverse();
    debug_assert!(comps
        .windows(2)
        .all(|w| { w[0].iter().all(|u| w[1].iter().all(|v| t.has_edge(u, v))) }));
    comps
}

/// True iff `t` has exactly one strong component.
pub fn is_strongly_connected(t: &Tournament) -> bool {
    strong_components(t).len() == 1
}

/// `t1 => t2`: disjoint union with every `t1` vertex beating every `t2`
/// vertex. Vertices of `t1` keep their labels; `t2`'s are shifted.
pub fn compose_chain(t1: &Tournament, t2: &Tournament) -> Tournament {
    let n1 = t1.n();
    let n = n1 + t2.n();
    Tournament::from_fn(n, |u, v| {
        // u < v by contract
        if v < n1 {
            t1.has_edge(u, v)
        } else if u >= n1 {
            t2.has_edge(u - n1, v - n1)
        } else {
            true
        }
    })
}

/// Delta-composition of an odd-length block list.
///
/// Blocks occupy positions `1..=2k-1` (1-based, matching the usual
/// convention; slice index `i` is position `i + 1`). For positions `p < q`,
/// edges run from block `q` to block `p` when both positions are odd, and
/// from block `p` to block `q` otherwise. Result vertices are the blocks
/// concatenated in order.
pub fn compose_delta(blocks: &[Tournament]) -> Result<Tournament> {
    if blocks.len().is_multiple_of(2) {
        return Err(Error::EvenBlockList(blocks.len()));
    }
    let n: usize = blocks.iter().map(|b| b.n()).sum();
    let mut offset = Vec::with_capacity(blocks.len() + 1);
    let mut acc = 0;
    for b in blocks {
        offset.push(acc);
        acc += b.n();
    }
    offset.push(acc);
    let block_of = |v: usize| offset.partition_point(|&o| o <= v) - 1;
    Ok(Tournament::from_fn(n, |u, v| {
        let (bu, bv) = (block_of(u), block_of(v));
        if bu == bv {
            blocks[bu].has_edge(u - offset[bu], v - offset[bu])
        } else {
            // u < v, hence bu < bv; positions are 1-based.
            let (pu, pv) = (bu + 1, bv + 1);
            !(pu % 2 == 1 && pv % 2 == 1)
        }
    }))
}

/// Replaces vertex `v` of `t1` by the whole of `t2`. The block takes `v`'s
/// place in the vertex order: result vertices are
/// `0..v`, then `t2`'s vertices, then `v+1..`.
pub fn substitute(t1: &Tournament, v: usize, t2: &Tournament) -> Result<Tournament> {
    if t1.n() == 0 || t2.n() == 0 {
        return Err(Error::EmptyTournament);
    }
    t1.check_vertex(v)?;
    let n1 = t1.n();
    let n2 = t2.n();
    let n = n1 + n2 - 1;
    // Maps a result vertex to either an original t1 vertex or a t2 vertex.
    let locate = |x: usize| -> (bool, usize) {
        if x < v {
            (false, x)
        } else if x < v + n2 {
            (true, x - v)
        } else {
            (false, x - n2 + 1)
        }
    };
    Ok(Tournament::from_fn(n, |a, b| {
        match (locate(a), locate(b)) {
            ((false, x), (false, y)) => t1.has_edge(x, y),
            ((true, x), (true, y)) => t2.has_edge(x, y),
            ((false, x), (true, _)) => t1.has_edge(x, v),
            ((true, _), (false, y)) => t1.has_edge(v, y),
        }
    }))
}
