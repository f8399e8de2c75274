//! Homogeneous sets, substitution decomposition, trisections, spine
//! delta-partitions, and membership deciders for the hereditary classes
//! generated by the `D` and `A` families and their forest intersection.

use std::collections::HashMap;

use crate::canon::{canonical_form, CanonicalCode, MAX_CANON_N};
use crate::error::{Error, Result};
use crate::forest::find_forest_ordering;
use crate::generators::{generate, FamilySpec};
use crate::tournament::{
    induced, is_strongly_connected, strong_components, substitute, Tournament, VertexSet,
};

/// True iff no vertex outside `s` has both an out- and an in-neighbor in
/// `s`. The definition constrains `1 < |s| < n`.
pub fn is_homogeneous(t: &Tournament, s: &VertexSet) -> Result<bool> {
    let n = t.n();
    if s.len() <= 1 || s.len() >= n {
        return Err(Error::HomogeneousBounds { size: s.len(), n });
    }
    for &v in s.as_slice() {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    Ok(t.vertices()
        .filter(|v| !s.contains(*v))
        .all(|v| !is_mixed(t, v, s)))
}

fn is_mixed(t: &Tournament, v: usize, s: &VertexSet) -> bool {
    let has_out = s.iter().any(|u| t.has_edge(v, u));
    let has_in = s.iter().any(|u| t.has_edge(u, v));
    has_out && has_in
}

/// Smallest homogeneous set containing the pair, or the full vertex set if
/// the pair's closure is everything.
fn pair_closure(t: &Tournament, a: usize, b: usize) -> u64 {
    let n = t.n();
    let mut in_set = (1u64 << a) | (1u64 << b);
    let mut has_out = vec![false; n];
    let mut has_in = vec![false; n];
    let mut queue = vec![a, b];
    let mut qi = 0;
    while qi < queue.len() {
        let s = queue[qi];
        qi += 1;
        for x in t.vertices() {
            if in_set >> x & 1 == 1 {
                continue;
            }
            if t.has_edge(x, s) {
                has_out[x] = true;
            } else {
                has_in[x] = true;
            }
            if has_out[x] && has_in[x] {
                in_set |= 1 << x;
                queue.push(x);
            }
        }
    }
    in_set
}

/// All inclusion-maximal homogeneous sets. Every maximal homogeneous set is
/// the closure of one of its pairs, so the naive O(n^4) closure sweep is
/// exhaustive.
pub fn maximal_homogeneous_sets(t: &Tournament) -> Result<Vec<VertexSet>> {
    let n = t.n();
    if n > 64 {
        return Err(Error::SizeLimit {
            op: "maximal_homogeneous_sets",
            n,
            limit: 64,
        });
    }
    if n < 3 {
        return Ok(Vec::new());
    }
    let full = t.full_mask64();
    let mut closures: Vec<u64> = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            let c = pair_closure(t, a, b);
            if c != full {
                closures.push(c);
            }
        }
    }
    closures.sort_unstable();
    closures.dedup();
    let maximal: Vec<u64> = closures
        .iter()
        .copied()
        .filter(|&c| !closures.iter().any(|&d| d != c && d & c == c))
        .collect();
    let mut out: Vec<VertexSet> = maximal.into_iter().map(VertexSet::from_mask64).collect();
    out.sort();
    Ok(out)
}

/// A tournament is prime if it has no homogeneous set. Vacuously true for
/// fewer than three vertices.
pub fn is_prime(t: &Tournament) -> Result<bool> {
    if t.n() == 0 {
        return Err(Error::EmptyTournament);
    }
    Ok(maximal_homogeneous_sets(t)?.is_empty())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Leaf,
    Linear,
    Prime,
}

/// Substitution (modular) decomposition tree. Children partition the node's
/// vertex set; a linear node's children are the strong components in
/// condensation order (transitive quotient); a prime node's children are
/// the maximal homogeneous sets padded with singletons, and its quotient
/// has no homogeneous set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionTree {
    pub kind: NodeKind,
    pub vertices: VertexSet,
    pub children: Vec<DecompositionTree>,
    pub quotient: Option<Tournament>,
}

impl DecompositionTree {
    /// Rebuilds the original tournament by repeated substitution into the
    /// quotients, then restores original labels.
    pub fn reconstruct(&self) -> Result<Tournament> {
        let (built, labels) = self.rebuild()?;
        let n = built.n();
        let mut pos = vec![0usize; n];
        for (i, &l) in labels.iter().enumerate() {
            pos[l] = i;
        }
        Ok(Tournament::from_fn(n, |u, v| {
            built.has_edge(pos[u], pos[v])
        }))
    }

    fn rebuild(&self) -> Result<(Tournament, Vec<usize>)> {
        if self.children.is_empty() {
            let v = self.vertices.as_slice()[0];
            return Ok((Tournament::single(), vec![v]));
        }
        let q = self
            .quotient
            .as_ref()
            .expect("internal node has a quotient");
        let mut rebuilt_children = Vec::with_capacity(self.children.len());
        let mut labels_per_child = Vec::with_capacity(self.children.len());
        for child in &self.children {
            let (t, l) = child.rebuild()?;
            rebuilt_children.push(t);
            labels_per_child.push(l);
        }
        // Substitute children back into the quotient from the last position
        // down so earlier positions stay stable.
        let mut acc = q.clone();
        for i in (0..rebuilt_children.len()).rev() {
            acc = substitute(&acc, i, &rebuilt_children[i])?;
        }
        let labels: Vec<usize> = labels_per_child.into_iter().flatten().collect();
        Ok((acc, labels))
    }
}

/// Modular decomposition by strong components (linear nodes) and maximal
/// homogeneous sets (prime nodes).
pub fn substitution_decomposition(t: &Tournament) -> Result<DecompositionTree> {
    if t.n() == 0 {
        return Err(Error::EmptyTournament);
    }
    let labels: Vec<usize> = t.vertices().collect();
    decompose(t, &labels)
}

fn decompose(t: &Tournament, labels: &[usize]) -> Result<DecompositionTree> {
    let n = t.n();
    let vertices = VertexSet::new(labels.iter().copied());
    if n == 1 {
        return Ok(DecompositionTree {
            kind: NodeKind::Leaf,
            vertices,
            children: Vec::new(),
            quotient: None,
        });
    }
    let comps = strong_components(t);
    if comps.len() > 1 {
        let mut children = Vec::with_capacity(comps.len());
        for s in &comps {
            let sub = induced(t, s)?;
            let sub_labels: Vec<usize> = s.iter().map(|v| labels[v]).collect();
            children.push(decompose(&sub, &sub_labels)?);
        }
        let quotient = Tournament::from_fn(comps.len(), |_, _| true);
        return Ok(DecompositionTree {
            kind: NodeKind::Linear,
            vertices,
            children,
            quotient: Some(quotient),
        });
    }
    // Strongly connected: blocks are the maximal homogeneous sets plus
    // singletons for the uncovered vertices, ordered by least vertex.
    let mhs = maximal_homogeneous_sets(t)?;
    let mut covered = 0u64;
    for s in &mhs {
        covered |= s.mask64();
    }
    let mut blocks: Vec<VertexSet> = mhs;
    for v in t.vertices() {
        if covered >> v & 1 == 0 {
            blocks.push(VertexSet::new([v]));
        }
    }
    blocks.sort();
    let reps: Vec<usize> = blocks.iter().map(|b| b.as_slice()[0]).collect();
    let quotient = Tournament::from_fn(blocks.len(), |i, j| t.has_edge(reps[i], reps[j]));
    let mut children = Vec::with_capacity(blocks.len());
    for b in &blocks {
        let sub = induced(t, b)?;
        let sub_labels: Vec<usize> = b.iter().map(|v| labels[v]).collect();
        children.push(decompose(&sub, &sub_labels)?);
    }
    Ok(DecompositionTree {
        kind: NodeKind::Prime,
        vertices,
        children,
        quotient: Some(quotient),
    })
}

/// Finds a trisection `(X, Y, Z)` with nonempty parts and `X => Y => Z => X`,
/// if one exists. Vertex 0 is placed in `X`, which is no loss of generality
/// because trisections rotate.
pub fn find_trisection(t: &Tournament) -> Option<(VertexSet, VertexSet, VertexSet)> {
    let n = t.n();
    if !(3..=64).contains(&n) {
        return None;
    }
    fn ok(t: &Tournament, parts: &[u8], v: usize, c: u8) -> bool {
        for (u, &d) in parts.iter().enumerate().take(v) {
            if d == c {
                continue;
            }
            if (d + 1) % 3 == c {
                if !t.has_edge(u, v) {
                    return false;
                }
            } else if !t.has_edge(v, u) {
                return false;
            }
        }
        true
    }
    fn dfs(t: &Tournament, parts: &mut Vec<u8>, v: usize) -> bool {
        let n = t.n();
        if v == n {
            let mut count = [0usize; 3];
            for &c in parts.iter() {
                count[c as usize] += 1;
            }
            return count.iter().all(|&k| k > 0);
        }
        for c in 0..3u8 {
            if ok(t, parts, v, c) {
                parts.push(c);
                if dfs(t, parts, v + 1) {
                    return true;
                }
                parts.pop();
            }
        }
        false
    }
    let mut parts = vec![0u8];
    if dfs(t, &mut parts, 1) {
        let pick = |c: u8| VertexSet::new((0..n).filter(|&v| parts[v] == c));
        Some((pick(0), pick(1), pick(2)))
    } else {
        None
    }
}

/// A delta-partition whose odd blocks are singletons: spine vertices
/// `v_1, ..., v_k` with interleaved (possibly empty) blocks
/// `X_1, ..., X_{k-1}`. Later spine vertices beat earlier ones, every other
/// ordered pair of distinct blocks goes forward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaPartitionSpine {
    pub spine: Vec<usize>,
    pub blocks: Vec<VertexSet>,
}

/// All spine delta-partitions of a strongly connected tournament, in
/// deterministic order. Blocks must be nonempty (a partition's parts are
/// nonempty); see [`spine_delta_partitions_relaxed`] for the variant the
/// membership recursion needs.
pub fn spine_delta_partitions(t: &Tournament) -> Result<Vec<DeltaPartitionSpine>> {
    spine_partitions_impl(t, false)
}

/// Spine enumeration admitting empty middle blocks. An empty block simply
/// vanishes from the witnessing embedding into the `A` family, so the
/// relaxed form is the right search space for the closure recursion; it is
/// not a delta-partition in the strict sense.
pub fn spine_delta_partitions_relaxed(t: &Tournament) -> Result<Vec<DeltaPartitionSpine>> {
    spine_partitions_impl(t, true)
}

fn spine_partitions_impl(t: &Tournament, allow_empty: bool) -> Result<Vec<DeltaPartitionSpine>> {
    let n = t.n();
    if n > 64 {
        return Err(Error::SizeLimit {
            op: "spine_delta_partitions",
            n,
            limit: 64,
        });
    }
    if n < 3 {
        return Err(Error::NotStronglyConnected);
    }
    if !is_strongly_connected(t) {
        return Err(Error::NotStronglyConnected);
    }
    // Candidate spines are the transitive subsets of size >= 2, taken in
    // reverse domination order (the spine's first vertex loses to all later
    // spine vertices).
    let mut out = Vec::new();
    let mut chain: Vec<usize> = Vec::new();
    fn dfs(
        t: &Tournament,
        chain: &mut Vec<usize>,
        cands: u64,
        allow_empty: bool,
        out: &mut Vec<DeltaPartitionSpine>,
    ) {
        if chain.len() >= 2 {
            if let Some(sp) = try_spine(t, chain, allow_empty) {
                out.push(sp);
            }
        }
        let mut m = cands;
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            chain.push(w);
            dfs(t, chain, cands & t.row64(w), allow_empty, out);
            chain.pop();
        }
    }
    fn try_spine(
        t: &Tournament,
        chain: &[usize],
        allow_empty: bool,
    ) -> Option<DeltaPartitionSpine> {
        let k = chain.len();
        // chain is source-to-sink; the spine reads sink-to-source.
        let spine: Vec<usize> = chain.iter().rev().copied().collect();
        let spine_mask: u64 = spine.iter().fold(0, |m, &v| m | 1 << v);
        let mut prefix = vec![0u64; k + 1];
        for (i, &v) in spine.iter().enumerate() {
            prefix[i + 1] = prefix[i] | 1 << v;
        }
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); k - 1];
        for u in t.vertices() {
            if spine_mask >> u & 1 == 1 {
                continue;
            }
            let m = t.in_row64(u) & spine_mask;
            let b = m.count_ones() as usize;
            if b == 0 || b == k || m != prefix[b] {
                return None;
            }
            blocks[b - 1].push(u);
        }
        if !allow_empty && blocks.iter().any(|b| b.is_empty()) {
            return None;
        }
        // Earlier blocks must be complete to later ones.
        for a in 0..k - 1 {
            for b in (a + 1)..k - 1 {
                for &u in &blocks[a] {
                    for &w in &blocks[b] {
                        if !t.has_edge(u, w) {
                            return None;
                        }
                    }
                }
            }
        }
        Some(DeltaPartitionSpine {
            spine,
            blocks: blocks.into_iter().map(VertexSet::new).collect(),
        })
    }
    dfs(t, &mut chain, t.full_mask64(), allow_empty, &mut out);
    Ok(out)
}

/// A spine delta-partition maximizing spine length (ties: lexicographically
/// least spine), or `None`. Uses the relaxed convention, since some class
/// members only decompose with an empty middle block.
pub fn find_spine_delta_partition(t: &Tournament) -> Result<Option<DeltaPartitionSpine>> {
    let mut all = spine_delta_partitions_relaxed(t)?;
    all.sort_by(|a, b| {
        b.spine
            .len()
            .cmp(&a.spine.len())
            .then_with(|| a.spine.cmp(&b.spine))
    });
    Ok(all.into_iter().next())
}

/// Verdict plus a human-readable derivation of a class-membership decision.
#[derive(Clone, Debug)]
pub struct Derivation {
    pub member: bool,
    pub lines: Vec<String>,
}

impl std::fmt::Display for Derivation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

type Memo = HashMap<CanonicalCode, bool>;

fn memo_key(t: &Tournament) -> Option<CanonicalCode> {
    (t.n() <= MAX_CANON_N).then(|| canonical_form(t).expect("within limit"))
}

fn member_d_rec(t: &Tournament, memo: &mut Memo) -> bool {
    let n = t.n();
    if n == 1 {
        return true;
    }
    let key = memo_key(t);
    if let Some(k) = key {
        if let Some(&v) = memo.get(&k) {
            return v;
        }
    }
    let comps = strong_components(t);
    let verdict = if comps.len() > 1 {
        comps
            .iter()
            .all(|s| member_d_rec(&induced(t, s).expect("in range"), memo))
    } else {
        debug_assert!(n <= 64);
        let full = t.full_mask64();
        t.vertices().any(|x| {
            let out = t.row64(x);
            let inn = full & !out & !(1u64 << x);
            if out == 0 || inn == 0 {
                return false;
            }
            // Need out(x) complete to in(x) for ({x}, out, in) to trisect.
            let mut m = out;
            while m != 0 {
                let y = m.trailing_zeros() as usize;
                m &= m - 1;
                if t.row64(y) & inn != inn {
                    return false;
                }
            }
            member_d_rec(
                &induced(t, &VertexSet::from_mask64(out)).expect("in range"),
                memo,
            ) && member_d_rec(
                &induced(t, &VertexSet::from_mask64(inn)).expect("in range"),
                memo,
            )
        })
    };
    if let Some(k) = key {
        memo.insert(k, verdict);
    }
    verdict
}

fn describe_d(
    t: &Tournament,
    labels: &[usize],
    memo: &mut Memo,
    depth: usize,
    lines: &mut Vec<String>,
) -> bool {
    let pad = "  ".repeat(depth);
    let set = VertexSet::new(labels.iter().copied());
    if t.n() == 1 {
        lines.push(format!("{pad}{set:?}: singleton, in D"));
        return true;
    }
    let comps = strong_components(t);
    if comps.len() > 1 {
        lines.push(format!(
            "{pad}{set:?}: not strong; checking {} components",
            comps.len()
        ));
        let mut all = true;
        for s in &comps {
            let sub = induced(t, s).expect("in range");
            let sub_labels: Vec<usize> = s.iter().map(|v| labels[v]).collect();
            all &= describe_d(&sub, &sub_labels, memo, depth + 1, lines);
        }
        return all;
    }
    let full = t.full_mask64();
    for x in t.vertices() {
        let out = t.row64(x);
        let inn = full & !out & !(1u64 << x);
        if out == 0 || inn == 0 {
            continue;
        }
        let dominates = {
            let mut m = out;
            let mut ok = true;
            while m != 0 {
                let y = m.trailing_zeros() as usize;
                m &= m - 1;
                if t.row64(y) & inn != inn {
                    ok = false;
                    break;
                }
            }
            ok
        };
        if !dominates {
            continue;
        }
        let out_t = induced(t, &VertexSet::from_mask64(out)).expect("in range");
        let in_t = induced(t, &VertexSet::from_mask64(inn)).expect("in range");
        if member_d_rec(&out_t, memo) && member_d_rec(&in_t, memo) {
            lines.push(format!(
                "{pad}{set:?}: strong; apex {} trisects into D-members",
                labels[x]
            ));
            let out_labels: Vec<usize> = VertexSet::from_mask64(out)
                .iter()
                .map(|v| labels[v])
                .collect();
            let in_labels: Vec<usize> = VertexSet::from_mask64(inn)
                .iter()
                .map(|v| labels[v])
                .collect();
            describe_d(&out_t, &out_labels, memo, depth + 1, lines);
            describe_d(&in_t, &in_labels, memo, depth + 1, lines);
            return true;
        }
    }
    lines.push(format!(
        "{pad}{set:?}: strong, no apex trisection into D-members"
    ));
    false
}

/// Membership in the hereditary closure of the `D` family, with a trace.
pub fn member_d(t: &Tournament) -> Result<Derivation> {
    if t.n() == 0 {
        return Err(Error::EmptyTournament);
    }
    if t.n() > 64 {
        return Err(Error::SizeLimit {
            op: "member_d",
            n: t.n(),
            limit: 64,
        });
    }
    let mut memo = Memo::new();
    let labels: Vec<usize> = t.vertices().collect();
    let mut lines = Vec::new();
    let member = describe_d(t, &labels, &mut memo, 0, &mut lines);
    Ok(Derivation { member, lines })
}

fn member_a_rec(t: &Tournament, memo: &mut Memo) -> bool {
    let n = t.n();
    if n == 1 {
        return true;
    }
    let key = memo_key(t);
    if let Some(k) = key {
        if let Some(&v) = memo.get(&k) {
            return v;
        }
    }
    let comps = strong_components(t);
    let verdict = if comps.len() > 1 {
        comps
            .iter()
            .all(|s| member_a_rec(&induced(t, s).expect("in range"), memo))
    } else {
        spine_delta_partitions_relaxed(t)
            .expect("strong, within limit")
            .iter()
            .any(|sp| {
                sp.blocks
                    .iter()
                    .all(|b| b.is_empty() || member_a_rec(&induced(t, b).expect("in range"), memo))
            })
    };
    if let Some(k) = key {
        memo.insert(k, verdict);
    }
    verdict
}

fn describe_a(
    t: &Tournament,
    labels: &[usize],
    memo: &mut Memo,
    depth: usize,
    lines: &mut Vec<String>,
) -> bool {
    let pad = "  ".repeat(depth);
    let set = VertexSet::new(labels.iter().copied());
    if t.n() == 1 {
        lines.push(format!("{pad}{set:?}: singleton, in A"));
        return true;
    }
    let comps = strong_components(t);
    if comps.len() > 1 {
        lines.push(format!(
            "{pad}{set:?}: not strong; checking {} components",
            comps.len()
        ));
        let mut all = true;
        for s in &comps {
            let sub = induced(t, s).expect("in range");
            let sub_labels: Vec<usize> = s.iter().map(|v| labels[v]).collect();
            all &= describe_a(&sub, &sub_labels, memo, depth + 1, lines);
        }
        return all;
    }
    for sp in spine_delta_partitions_relaxed(t).expect("strong, within limit") {
        let all_blocks_in = sp
            .blocks
            .iter()
            .all(|b| b.is_empty() || member_a_rec(&induced(t, b).expect("in range"), memo));
        if all_blocks_in {
            let spine_labels: Vec<usize> = sp.spine.iter().map(|&v| labels[v]).collect();
            lines.push(format!(
                "{pad}{set:?}: strong; spine {spine_labels:?} with all blocks in A"
            ));
            for b in sp.blocks.iter().filter(|b| !b.is_empty()) {
                let sub = induced(t, b).expect("in range");
                let sub_labels: Vec<usize> = b.iter().map(|v| labels[v]).collect();
                describe_a(&sub, &sub_labels, memo, depth + 1, lines);
            }
            return true;
        }
    }
    lines.push(format!(
        "{pad}{set:?}: strong, no spine delta-partition with all blocks in A"
    ));
    false
}

/// Membership in the hereditary closure of the `A` family, with a trace.
pub fn member_a(t: &Tournament) -> Result<Derivation> {
    if t.n() == 0 {
        return Err(Error::EmptyTournament);
    }
    if t.n() > 64 {
        return Err(Error::SizeLimit {
            op: "member_a",
            n: t.n(),
            limit: 64,
        });
    }
    let mut memo = Memo::new();
    let labels: Vec<usize> = t.vertices().collect();
    let mut lines = Vec::new();
    let member = describe_a(t, &labels, &mut memo, 0, &mut lines);
    Ok(Derivation { member, lines })
}

/// Which shape of the six-case characterization a member of the
/// A-and-forest class matched.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AfCase {
    /// A single vertex.
    Case1Singleton,
    /// A chain of class members.
    Case2Chain,
    /// Trisection with a singleton apex, a transitive part, and a class
    /// member.
    Case3Trisection,
    /// Five blocks over the prime quotient on five vertices, all blocks
    /// transitive with the two forced singletons.
    Case4FiveTransitive,
    /// Five blocks with one non-transitive class member in an inner slot.
    Case5FiveWithInner,
    /// Seven transitive blocks with singletons in slots 1, 4, 7.
    Case6Seven,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AfDecision {
    pub member: bool,
    pub case: Option<AfCase>,
}

/// All isomorphisms from `a` onto `b`, as vertex maps. Brute force; both
/// inputs are expected to be small quotients.
fn isomorphisms(a: &Tournament, b: &Tournament) -> Vec<Vec<usize>> {
    let n = a.n();
    if n != b.n() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn dfs(
        a: &Tournament,
        b: &Tournament,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        v: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = a.n();
        if v == n {
            out.push(map.clone());
            return;
        }
        for w in 0..n {
            if used[w] {
                continue;
            }
            let consistent = (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w));
            if consistent {
                map[v] = w;
                used[w] = true;
                dfs(a, b, map, used, v + 1, out);
                used[w] = false;
                map[v] = usize::MAX;
            }
        }
    }
    dfs(a, b, &mut map, &mut used, 0, &mut out);
    out
}

fn member_af_rec(
    t: &Tournament,
    memo: &mut HashMap<CanonicalCode, Option<AfCase>>,
) -> Option<AfCase> {
    let n = t.n();
    if n == 1 {
        return Some(AfCase::Case1Singleton);
    }
    let key = (n <= MAX_CANON_N).then(|| canonical_form(t).expect("within limit"));
    if let Some(k) = key {
        if let Some(&v) = memo.get(&k) {
            return v;
        }
    }
    let tree = substitution_decomposition(t).expect("nonempty");
    let verdict = match tree.kind {
        NodeKind::Leaf => Some(AfCase::Case1Singleton),
        NodeKind::Linear => {
            let all_in = tree.children.iter().all(|c| {
                let sub = induced(t, &c.vertices).expect("in range");
                member_af_rec(&sub, memo).is_some()
            });
            all_in.then_some(AfCase::Case2Chain)
        }
        NodeKind::Prime => {
            let q = tree.quotient.as_ref().expect("prime node has quotient");
            let blocks: Vec<Tournament> = tree
                .children
                .iter()
                .map(|c| induced(t, &c.vertices).expect("in range"))
                .collect();
            decide_prime_af(q, &blocks, memo)
        }
    };
    if let Some(k) = key {
        memo.insert(k, verdict);
    }
    verdict
}

fn decide_prime_af(
    q: &Tournament,
    blocks: &[Tournament],
    memo: &mut HashMap<CanonicalCode, Option<AfCase>>,
) -> Option<AfCase> {
    let m = q.n();
    let is_af = |b: &Tournament, memo: &mut HashMap<CanonicalCode, Option<AfCase>>| {
        member_af_rec(b, memo).is_some()
    };
    if m == 3 {
        // Quotient is the cyclic triangle; try the three rotations as
        // (apex, Y, Z) with apex => Y => Z => apex.
        let succ = |i: usize| (0..3).find(|&j| j != i && q.has_edge(i, j)).expect("cycle");
        for r in 0..3 {
            let x = r;
            let y = succ(x);
            let z = succ(y);
            if blocks[x].n() != 1 {
                continue;
            }
            if blocks[y].is_transitive() && is_af(&blocks[z], memo) {
                return Some(AfCase::Case3Trisection);
            }
            if blocks[z].is_transitive() && is_af(&blocks[y], memo) {
                return Some(AfCase::Case3Trisection);
            }
        }
        return None;
    }
    if m == 5 {
        let u3 = generate(&FamilySpec::U(3)).expect("fixed family");
        for iso in isomorphisms(q, &u3) {
            // g[p] = block sitting at 1-based position p+1 of the
            // delta-composition.
            let mut g: Vec<&Tournament> = vec![&blocks[0]; 5];
            for (qv, &pos) in iso.iter().enumerate() {
                g[pos] = &blocks[qv];
            }
            let trans = |i: usize| g[i].is_transitive();
            let one = |i: usize| g[i].n() == 1;
            if trans(0) && one(1) && trans(2) && trans(3) && one(4) {
                return Some(AfCase::Case4FiveTransitive);
            }
            if one(0) && trans(1) && trans(2) && one(3) && trans(4) {
                return Some(AfCase::Case4FiveTransitive);
            }
            if one(0) && trans(2) && trans(3) && one(4) && is_af(g[1], memo) {
                return Some(AfCase::Case5FiveWithInner);
            }
            if one(0) && trans(1) && trans(2) && one(4) && is_af(g[3], memo) {
                return Some(AfCase::Case5FiveWithInner);
            }
        }
        return None;
    }
    if m == 7 {
        let u4 = generate(&FamilySpec::U(4)).expect("fixed family");
        for iso in isomorphisms(q, &u4) {
            let mut g: Vec<&Tournament> = vec![&blocks[0]; 7];
            for (qv, &pos) in iso.iter().enumerate() {
                g[pos] = &blocks[qv];
            }
            let all_transitive = (0..7).all(|i| g[i].is_transitive());
            if all_transitive && g[0].n() == 1 && g[3].n() == 1 && g[6].n() == 1 {
                return Some(AfCase::Case6Seven);
            }
        }
        return None;
    }
    None
}

/// Structural decision for membership in the intersection of the `A`
/// closure and the forest class, via the six-case characterization over
/// the substitution decomposition.
pub fn member_af(t: &Tournament) -> Result<AfDecision> {
    if t.n() == 0 {
        return Err(Error::EmptyTournament);
    }
    if t.n() > 64 {
        return Err(Error::SizeLimit {
            op: "member_af",
            n: t.n(),
            limit: 64,
        });
    }
    let mut memo = HashMap::new();
    let case = member_af_rec(t, &mut memo);
    Ok(AfDecision {
        member: case.is_some(),
        case,
    })
}

/// Cross-validation form of the class: in `A` and a forest tournament.
pub fn member_a_and_forest(t: &Tournament) -> Result<bool> {
    Ok(member_a(t)?.member && find_forest_ordering(t)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tournament::{build, compose_delta};

    fn cyclic_triangle() -> Tournament {
        build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn homogeneity_examples() {
        let c = cyclic_triangle();
        let l2 = generate(&FamilySpec::L(2)).unwrap();
        let t = substitute(&c, 0, &l2).unwrap();
        assert!(is_homogeneous(&t, &VertexSet::new([0, 1])).unwrap());

        let u3 = generate(&FamilySpec::U(3)).unwrap();
        for mask in 0u64..(1 << 5) {
            let size = mask.count_ones() as usize;
            if !(2..=4).contains(&size) {
                continue;
            }
            assert!(!is_homogeneous(&u3, &VertexSet::from_mask64(mask)).unwrap());
        }

        let d3 = generate(&FamilySpec::D(3)).unwrap();
        assert!(is_homogeneous(&d3, &VertexSet::new([1, 2, 3])).unwrap());
        assert!(is_homogeneous(&d3, &VertexSet::new([4, 5, 6])).unwrap());

        assert!(matches!(
            is_homogeneous(&c, &VertexSet::new([0])),
            Err(Error::HomogeneousBounds { .. })
        ));
    }

    #[test]
    fn maximal_homogeneous_examples() {
        let d3 = generate(&FamilySpec::D(3)).unwrap();
        assert_eq!(
            maximal_homogeneous_sets(&d3).unwrap(),
            vec![VertexSet::new([1, 2, 3]), VertexSet::new([4, 5, 6])]
        );

        let u3 = generate(&FamilySpec::U(3)).unwrap();
        assert!(maximal_homogeneous_sets(&u3).unwrap().is_empty());

        let l3 = generate(&FamilySpec::L(3)).unwrap();
        assert_eq!(
            maximal_homogeneous_sets(&l3).unwrap(),
            vec![VertexSet::new([0, 1]), VertexSet::new([1, 2])]
        );
    }

    #[test]
    fn primality_examples() {
        assert!(is_prime(&generate(&FamilySpec::U(4)).unwrap()).unwrap());
        assert!(!is_prime(&generate(&FamilySpec::Delta2).unwrap()).unwrap());
        assert!(is_prime(&Tournament::single()).unwrap());
        // Prime tournaments on >= 3 vertices are strongly connected.
        for n in 3..=6 {
            for t in crate::enumerate::enumerate_tournaments(n).unwrap() {
                if is_prime(&t).unwrap() {
                    assert!(is_strongly_connected(&t));
                }
            }
        }
    }

    #[test]
    fn decomposition_shapes() {
        let l4 = generate(&FamilySpec::L(4)).unwrap();
        let tree = substitution_decomposition(&l4).unwrap();
        assert_eq!(tree.kind, NodeKind::Linear);
        assert_eq!(tree.children.len(), 4);
        assert!(tree.children.iter().all(|c| c.kind == NodeKind::Leaf));

        let d3 = generate(&FamilySpec::D(3)).unwrap();
        let tree = substitution_decomposition(&d3).unwrap();
        assert_eq!(tree.kind, NodeKind::Prime);
        assert_eq!(tree.children.len(), 3);
        let q = tree.quotient.as_ref().unwrap();
        assert_eq!(
            canonical_form(q).unwrap(),
            canonical_form(&cyclic_triangle()).unwrap()
        );

        let u3 = generate(&FamilySpec::U(3)).unwrap();
        let tree = substitution_decomposition(&u3).unwrap();
        assert_eq!(tree.kind, NodeKind::Prime);
        assert_eq!(tree.children.len(), 5);
        assert_eq!(tree.quotient.as_ref().unwrap(), &u3);
    }

    #[test]
    fn decomposition_reconstructs() {
        let mut subjects = vec![
            generate(&FamilySpec::D(3)).unwrap(),
            generate(&FamilySpec::Delta2).unwrap(),
            generate(&FamilySpec::N).unwrap(),
            generate(&FamilySpec::A(3)).unwrap(),
        ];
        for n in 1..=5 {
            subjects.extend(crate::enumerate::enumerate_tournaments(n).unwrap());
        }
        for t in subjects {
            let tree = substitution_decomposition(&t).unwrap();
            assert_eq!(tree.reconstruct().unwrap(), t);
        }
    }

    #[test]
    fn trisection_examples() {
        let c = cyclic_triangle();
        let (x, y, z) = find_trisection(&c).unwrap();
        assert_eq!((x.len(), y.len(), z.len()), (1, 1, 1));

        let d3 = generate(&FamilySpec::D(3)).unwrap();
        let (x, y, z) = find_trisection(&d3).unwrap();
        assert_eq!(x, VertexSet::new([0]));
        assert_eq!(y, VertexSet::new([1, 2, 3]));
        assert_eq!(z, VertexSet::new([4, 5, 6]));

        assert!(find_trisection(&generate(&FamilySpec::L(3)).unwrap()).is_none());
    }

    #[test]
    fn spine_partition_examples() {
        let u3 = generate(&FamilySpec::U(3)).unwrap();
        let sp = find_spine_delta_partition(&u3).unwrap().unwrap();
        assert_eq!(sp.spine, vec![0, 2, 4]);
        assert_eq!(sp.blocks, vec![VertexSet::new([1]), VertexSet::new([3])]);

        let c = cyclic_triangle();
        let sp = find_spine_delta_partition(&c).unwrap().unwrap();
        assert_eq!(sp.spine.len(), 2);
        assert_eq!(sp.blocks.len(), 1);
        assert_eq!(sp.blocks[0].len(), 1);

        let d3 = generate(&FamilySpec::D(3)).unwrap();
        assert!(find_spine_delta_partition(&d3).unwrap().is_none());

        assert!(matches!(
            spine_delta_partitions(&generate(&FamilySpec::L(3)).unwrap()),
            Err(Error::NotStronglyConnected)
        ));
    }

    #[test]
    fn member_d_examples() {
        assert!(
            member_d(&generate(&FamilySpec::D(2)).unwrap())
                .unwrap()
                .member
        );
        assert!(
            member_d(&generate(&FamilySpec::D(3)).unwrap())
                .unwrap()
                .member
        );
        assert!(
            !member_d(&generate(&FamilySpec::U(3)).unwrap())
                .unwrap()
                .member
        );
        assert!(!member_d(&generate(&FamilySpec::N).unwrap()).unwrap().member);
    }

    #[test]
    fn member_a_examples() {
        assert!(
            member_a(&generate(&FamilySpec::U(3)).unwrap())
                .unwrap()
                .member
        );
        assert!(
            member_a(&generate(&FamilySpec::Delta2).unwrap())
                .unwrap()
                .member
        );
        assert!(
            !member_a(&generate(&FamilySpec::D(3)).unwrap())
                .unwrap()
                .member
        );
        assert!(!member_a(&generate(&FamilySpec::N).unwrap()).unwrap().member);
        assert!(
            !member_a(&generate(&FamilySpec::S(3)).unwrap())
                .unwrap()
                .member
        );
    }

    #[test]
    fn member_af_examples() {
        let u4 = generate(&FamilySpec::U(4)).unwrap();
        let d = member_af(&u4).unwrap();
        assert_eq!(d.case, Some(AfCase::Case6Seven));

        let delta2 = generate(&FamilySpec::Delta2).unwrap();
        assert!(!member_af(&delta2).unwrap().member);

        let i = Tournament::single();
        let l2 = generate(&FamilySpec::L(2)).unwrap();
        let h = compose_delta(&[i, l2, cyclic_triangle()]).unwrap();
        let d = member_af(&h).unwrap();
        assert_eq!(d.case, Some(AfCase::Case3Trisection));
    }

    #[test]
    fn member_oracle_gates_small() {
        // The derived recursions must agree with brute-force embedding into
        // the generating families before they are trusted anywhere else.
        use crate::containment::contains_subtournament;
        for n in 1..=4 {
            let dk = generate(&FamilySpec::D(n as u32)).unwrap();
            let ak = generate(&FamilySpec::A(n as u32)).unwrap();
            for t in crate::enumerate::enumerate_tournaments(n).unwrap() {
                let in_d = contains_subtournament(&dk, &t).unwrap().is_some();
                assert_eq!(member_d(&t).unwrap().member, in_d);
                let in_a = contains_subtournament(&ak, &t).unwrap().is_some();
                assert_eq!(member_a(&t).unwrap().member, in_a);
            }
        }
    }

    use crate::error::Error;
}
