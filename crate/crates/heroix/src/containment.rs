//! Subtournament containment, hero recognition, jewels, and surveys.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::canon::{canonical_form, CanonicalCode, MAX_CANON_N};
use crate::chromatic::chromatic_number;
use crate::enumerate::enumerate_tournaments_with_limit;
use crate::error::{Error, Result};
use crate::generators::{generate, FamilySpec};
use crate::tournament::{induced, strong_components, Tournament, VertexSet};

/// Node budget for the backtracking searches in this module.
pub const DEFAULT_SEARCH_BUDGET: u64 = 20_000_000;

/// An edge-direction-preserving injection of a pattern into a host:
/// `map[p]` is the host vertex carrying pattern vertex `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    pub fn new(map: Vec<usize>) -> Self {
        Embedding { map }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Checks the defining property against concrete host and pattern.
    pub fn is_valid(&self, host: &Tournament, pattern: &Tournament) -> bool {
        if self.map.len() != pattern.n() {
            return false;
        }
        let mut seen = vec![false; host.n()];
        for &v in &self.map {
            if v >= host.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        for u in pattern.vertices() {
            for v in pattern.vertices() {
                if u != v && pattern.has_edge(u, v) && !host.has_edge(self.map[u], self.map[v]) {
                    return false;
                }
            }
        }
        true
    }
}

struct EmbedSearch<'a> {
    host: &'a Tournament,
    pattern: &'a Tournament,
    nodes: u64,
    budget: u64,
}

impl EmbedSearch<'_> {
    fn dfs(&mut self, assigned: &mut [Option<usize>], cand: &[u64]) -> Result<Option<Vec<usize>>> {
        let np = self.pattern.n();
        let next = (0..np)
            .filter(|&p| assigned[p].is_none())
            .min_by_key(|&p| (cand[p].count_ones(), p));
        let Some(p) = next else {
            return Ok(Some(assigned.iter().map(|a| a.unwrap()).collect()));
        };
        let mut m = cand[p];
        while m != 0 {
            let hv = m.trailing_zeros() as usize;
            m &= m - 1;
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::Undecided("contains_subtournament"));
            }
            let mut next_cand = cand.to_vec();
            let mut feasible = true;
            for q in 0..np {
                if q == p || assigned[q].is_some() {
                    continue;
                }
                let allowed = if self.pattern.has_edge(p, q) {
                    self.host.row64(hv)
                } else {
                    self.host.in_row64(hv)
                };
                next_cand[q] &= allowed & !(1u64 << hv);
                if next_cand[q] == 0 {
                    feasible = false;
                    break;
                }
            }
            if !feasible {
                continue;
            }
            assigned[p] = Some(hv);
            if let Some(found) = self.dfs(assigned, &next_cand)? {
                return Ok(Some(found));
            }
            assigned[p] = None;
        }
        Ok(None)
    }
}

/// Finds an embedding of `pattern` into `host`, or decides none exists.
/// A budget overrun yields `Err(Undecided)`, never a wrong answer.
pub fn contains_subtournament(
    host: &Tournament,
    pattern: &Tournament,
) -> Result<Option<Embedding>> {
    contains_subtournament_with_budget(host, pattern, DEFAULT_SEARCH_BUDGET)
}

pub fn contains_subtournament_with_budget(
    host: &Tournament,
    pattern: &Tournament,
    budget: u64,
) -> Result<Option<Embedding>> {
    let np = pattern.n();
    let nh = host.n();
    if np == 0 {
        return Ok(Some(Embedding { map: Vec::new() }));
    }
    if np > nh {
        return Ok(None);
    }
    if nh > 64 {
        return Err(Error::SizeLimit {
            op: "contains_subtournament",
            n: nh,
            limit: 64,
        });
    }
    let host_out: Vec<usize> = host.vertices().map(|v| host.out_degree(v)).collect();
    let mut cand = Vec::with_capacity(np);
    for p in pattern.vertices() {
        let po = pattern.out_degree(p);
        let pi = np - 1 - po;
        let mut mask = 0u64;
        for v in host.vertices() {
            if host_out[v] >= po && nh - 1 - host_out[v] >= pi {
                mask |= 1 << v;
            }
        }
        if mask == 0 {
            return Ok(None);
        }
        cand.push(mask);
    }
    let mut search = EmbedSearch {
        host,
        pattern,
        nodes: 0,
        budget,
    };
    let mut assigned = vec![None; np];
    let found = search.dfs(&mut assigned, &cand)?;
    Ok(found.map(|map| {
        let emb = Embedding { map };
        debug_assert!(emb.is_valid(host, pattern));
        emb
    }))
}

/// True iff `t` contains none of the given patterns.
pub fn is_family_free(t: &Tournament, patterns: &[Tournament]) -> Result<bool> {
    for h in patterns {
        if contains_subtournament(t, h)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Finds a transitive vertex set of size `k`, exactly. Always succeeds when
/// `n >= 2^(k-1)`.
pub fn find_transitive_subset(t: &Tournament, k: usize) -> Option<VertexSet> {
    if k == 0 {
        return Some(VertexSet::new([]));
    }
    if k > t.n() {
        return None;
    }
    fn dfs(t: &Tournament, chain: &mut Vec<usize>, cands: &[usize], k: usize) -> bool {
        if chain.len() == k {
            return true;
        }
        if chain.len() + cands.len() < k {
            return false;
        }
        for &w in cands {
            let next: Vec<usize> = cands
                .iter()
                .copied()
                .filter(|&x| x != w && t.has_edge(w, x))
                .collect();
            chain.push(w);
            if dfs(t, chain, &next, k) {
                return true;
            }
            chain.pop();
        }
        false
    }
    let all: Vec<usize> = t.vertices().collect();
    let mut chain = Vec::with_capacity(k);
    if dfs(t, &mut chain, &all, k) {
        Some(VertexSet::new(chain))
    } else {
        None
    }
}

/// The five minimal non-heroes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinimalNonHero {
    U3,
    N,
    S3,
    Delta2,
    D3,
}

impl MinimalNonHero {
    pub const ALL: [MinimalNonHero; 5] = [
        MinimalNonHero::U3,
        MinimalNonHero::N,
        MinimalNonHero::S3,
        MinimalNonHero::Delta2,
        MinimalNonHero::D3,
    ];

    pub fn tournament(&self) -> Tournament {
        let spec = match self {
            MinimalNonHero::U3 => FamilySpec::U(3),
            MinimalNonHero::N => FamilySpec::N,
            MinimalNonHero::S3 => FamilySpec::S(3),
            MinimalNonHero::Delta2 => FamilySpec::Delta2,
            MinimalNonHero::D3 => FamilySpec::D(3),
        };
        generate(&spec).expect("fixed family")
    }

    pub fn name(&self) -> &'static str {
        match self {
            MinimalNonHero::U3 => "U_3",
            MinimalNonHero::N => "N",
            MinimalNonHero::S3 => "S_3",
            MinimalNonHero::Delta2 => "Delta_2",
            MinimalNonHero::D3 => "D_3",
        }
    }
}

/// Structural witness that a tournament is a hero, in original labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HeroTree {
    Single {
        vertex: usize,
    },
    /// Strong components in condensation order, each a hero.
    Chain {
        components: Vec<HeroTree>,
    },
    /// `delta(I, head, tail)` with both parts heroes, one transitive.
    Apex {
        apex: usize,
        head: Box<HeroTree>,
        tail: Box<HeroTree>,
    },
}

impl HeroTree {
    fn describe(&self, out: &mut String) {
        match self {
            HeroTree::Single { vertex } => out.push_str(&format!("{vertex}")),
            HeroTree::Chain { components } => {
                out.push('(');
                for (i, c) in components.iter().enumerate() {
                    if i > 0 {
                        out.push_str(" => ");
                    }
                    c.describe(out);
                }
                out.push(')');
            }
            HeroTree::Apex { apex, head, tail } => {
                out.push_str(&format!("delta({apex}, "));
                head.describe(out);
                out.push_str(", ");
                tail.describe(out);
                out.push(')');
            }
        }
    }
}

impl std::fmt::Display for HeroTree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut s = String::new();
        self.describe(&mut s);
        f.write_str(&s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HeroCertificate {
    /// Embedded minimal non-hero witnessing non-hero-ness.
    ForbiddenWitness {
        pattern: MinimalNonHero,
        embedding: Embedding,
    },
    /// Recursive decomposition witnessing hero-ness.
    Structure(HeroTree),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeroAnalysis {
    pub hero: bool,
    pub certificate: HeroCertificate,
}

fn hero_memo() -> &'static Mutex<HashMap<CanonicalCode, bool>> {
    static MEMO: OnceLock<Mutex<HashMap<CanonicalCode, bool>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Mask variant of the "every out-vertex beats every in-vertex" test.
fn out_dominates_in(t: &Tournament, out_mask: u64, in_mask: u64) -> bool {
    let mut m = out_mask;
    while m != 0 {
        let y = m.trailing_zeros() as usize;
        m &= m - 1;
        if t.row64(y) & in_mask != in_mask {
            return false;
        }
    }
    true
}

/// Structural hero recursion: every strong component a hero; a strong
/// tournament must split as `delta(I, H1, H2)` with hero parts, one of
/// them transitive. Memoized on canonical codes where available.
fn hero_structural(t: &Tournament) -> bool {
    let n = t.n();
    if n <= 1 {
        return true;
    }
    let code = if n <= MAX_CANON_N {
        let c = canonical_form(t).expect("within limit");
        if let Some(&v) = hero_memo().lock().unwrap().get(&c) {
            return v;
        }
        Some(c)
    } else {
        None
    };
    let comps = strong_components(t);
    let verdict = if comps.len() > 1 {
        comps
            .iter()
            .all(|s| hero_structural(&induced(t, s).expect("in range")))
    } else {
        let full = t.full_mask64();
        t.vertices().any(|x| {
            let out = t.row64(x);
            let inn = full & !out & !(1u64 << x);
            if out == 0 || inn == 0 || !out_dominates_in(t, out, inn) {
                return false;
            }
            let h1 = induced(t, &VertexSet::from_mask64(out)).expect("in range");
            let h2 = induced(t, &VertexSet::from_mask64(inn)).expect("in range");
            (h1.is_transitive() || h2.is_transitive())
                && hero_structural(&h1)
                && hero_structural(&h2)
        })
    };
    if let Some(c) = code {
        hero_memo().lock().unwrap().insert(c, verdict);
    }
    verdict
}

/// Builds the decomposition tree in original labels; call only on heroes.
fn hero_tree(t: &Tournament, labels: &[usize]) -> Option<HeroTree> {
    let n = t.n();
    if n == 1 {
        return Some(HeroTree::Single { vertex: labels[0] });
    }
    let comps = strong_components(t);
    if comps.len() > 1 {
        let mut components = Vec::with_capacity(comps.len());
        for s in &comps {
            let sub = induced(t, s).expect("in range");
            let sub_labels: Vec<usize> = s.iter().map(|v| labels[v]).collect();
            components.push(hero_tree(&sub, &sub_labels)?);
        }
        return Some(HeroTree::Chain { components });
    }
    let full = t.full_mask64();
    for x in t.vertices() {
        let out = t.row64(x);
        let inn = full & !out & !(1u64 << x);
        if out == 0 || inn == 0 || !out_dominates_in(t, out, inn) {
            continue;
        }
        let out_set = VertexSet::from_mask64(out);
        let in_set = VertexSet::from_mask64(inn);
        let h1 = induced(t, &out_set).expect("in range");
        let h2 = induced(t, &in_set).expect("in range");
        if !(h1.is_transitive() || h2.is_transitive()) {
            continue;
        }
        if !(hero_structural(&h1) && hero_structural(&h2)) {
            continue;
        }
        let l1: Vec<usize> = out_set.iter().map(|v| labels[v]).collect();
        let l2: Vec<usize> = in_set.iter().map(|v| labels[v]).collect();
        return Some(HeroTree::Apex {
            apex: labels[x],
            head: Box::new(hero_tree(&h1, &l1)?),
            tail: Box::new(hero_tree(&h2, &l2)?),
        });
    }
    None
}

/// Runs both hero characterizations (freeness from the five minimal
/// non-heroes, and the structural recursion) and returns their common
/// verdict with a certificate.
///
/// Panics if the two characterizations ever disagree; that would be an
/// internal consistency fault, not a recoverable condition.
pub fn is_hero(t: &Tournament) -> Result<HeroAnalysis> {
    if t.n() == 0 {
        return Err(Error::EmptyTournament);
    }
    let mut witness = None;
    for pattern in MinimalNonHero::ALL {
        let p = pattern.tournament();
        if p.n() > t.n() {
            continue;
        }
        if let Some(embedding) = contains_subtournament(t, &p)? {
            witness = Some((pattern, embedding));
            break;
        }
    }
    let by_freeness = witness.is_none();
    let by_structure = hero_structural(t);
    assert_eq!(
        by_freeness, by_structure,
        "hero characterizations disagree on {t:?}"
    );
    let certificate = match witness {
        Some((pattern, embedding)) => HeroCertificate::ForbiddenWitness { pattern, embedding },
        None => {
            let labels: Vec<usize> = t.vertices().collect();
            HeroCertificate::Structure(hero_tree(t, &labels).expect("structural verdict says hero"))
        }
    };
    Ok(HeroAnalysis {
        hero: by_freeness,
        certificate,
    })
}

/// True iff `t` is not a hero but every one-vertex-deleted subtournament is.
pub fn is_minimal_nonhero(t: &Tournament) -> Result<bool> {
    if t.n() == 0 {
        return Err(Error::EmptyTournament);
    }
    if is_hero(t)?.hero {
        return Ok(false);
    }
    for v in t.vertices() {
        let rest = VertexSet::new(t.vertices().filter(|&u| u != v));
        if rest.is_empty() {
            continue;
        }
        let sub = induced(t, &rest)?;
        if !is_hero(&sub)?.hero {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Parameters of an `(a, G, H)`-jewel check.
#[derive(Clone, Debug)]
pub struct JewelSpec {
    pub a: usize,
    pub g: Tournament,
    pub h: Tournament,
}

/// Upper bound on the jewel size `a` (the check walks all 2^a bipartitions).
pub const MAX_JEWEL_SIZE: usize = 16;

/// Exhaustive bipartition check: `t` is a jewel iff for every partition
/// `(A, B)` of its vertices, `t|A` contains `g` or `t|B` contains `h`.
pub fn is_jewel(t: &Tournament, spec: &JewelSpec) -> Result<bool> {
    if spec.a > MAX_JEWEL_SIZE {
        return Err(Error::SizeLimit {
            op: "is_jewel",
            n: spec.a,
            limit: MAX_JEWEL_SIZE,
        });
    }
    if t.n() != spec.a {
        return Err(Error::WrongSize {
            op: "is_jewel",
            expected: spec.a,
            got: t.n(),
        });
    }
    let all: u64 = if spec.a == 0 { 0 } else { (1u64 << spec.a) - 1 };
    for mask in 0..=all {
        let a_side = induced(t, &VertexSet::from_mask64(mask))?;
        if contains_subtournament(&a_side, &spec.g)?.is_some() {
            continue;
        }
        let b_side = induced(t, &VertexSet::from_mask64(all & !mask))?;
        if contains_subtournament(&b_side, &spec.h)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches for `len` disjoint jewel-inducing `a`-sets, pairwise complete
/// in chain order. Exact at desk scale; budget overrun yields `Undecided`.
pub fn find_jewel_chain(
    t: &Tournament,
    spec: &JewelSpec,
    len: usize,
) -> Result<Option<Vec<VertexSet>>> {
    if len == 0 {
        return Err(Error::ZeroParam);
    }
    let n = t.n();
    if n > 64 {
        return Err(Error::SizeLimit {
            op: "find_jewel_chain",
            n,
            limit: 64,
        });
    }
    if spec.a == 0 {
        return Err(Error::ZeroParam);
    }
    if spec.a * len > n {
        return Ok(None);
    }
    fn next_combination(subset: &mut [usize], n: usize) -> bool {
        let k = subset.len();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if subset[i] < i + n - k {
                subset[i] += 1;
                for j in i + 1..k {
                    subset[j] = subset[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }
    // Collect every a-subset inducing a jewel, in lexicographic order.
    let mut jewels: Vec<u64> = Vec::new();
    let mut subset: Vec<usize> = (0..spec.a).collect();
    let mut examined: u64 = 0;
    loop {
        examined += 1;
        if examined > DEFAULT_SEARCH_BUDGET / 1000 {
            return Err(Error::Undecided("find_jewel_chain"));
        }
        let vs = VertexSet::new(subset.iter().copied());
        if is_jewel(&induced(t, &vs)?, spec)? {
            jewels.push(vs.mask64());
        }
        if !next_combination(&mut subset, n) {
            break;
        }
    }
    // Chain search over the jewel list, order-sensitive.
    fn complete_to(t: &Tournament, from: u64, to: u64) -> bool {
        let mut m = from;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            if t.row64(u) & to != to {
                return false;
            }
        }
        true
    }
    fn dfs(t: &Tournament, jewels: &[u64], chain: &mut Vec<u64>, len: usize) -> bool {
        if chain.len() == len {
            return true;
        }
        for &j in jewels {
            if chain.iter().any(|&c| c & j != 0) {
                continue;
            }
            if !chain.iter().all(|&c| complete_to(t, c, j)) {
                continue;
            }
            chain.push(j);
            if dfs(t, jewels, chain, len) {
                return true;
            }
            chain.pop();
        }
        false
    }
    let mut chain = Vec::with_capacity(len);
    if dfs(t, &jewels, &mut chain, len) {
        Ok(Some(
            chain.into_iter().map(VertexSet::from_mask64).collect(),
        ))
    } else {
        Ok(None)
    }
}

/// One row of a heroic-set survey: extremal chromatic data over the
/// enumerated `patterns`-free tournaments on `n` vertices.
#[derive(Clone, Debug)]
pub struct SurveyRow {
    pub n: usize,
    pub free_classes: usize,
    pub max_chi: Option<usize>,
    pub witness: Option<Tournament>,
}

/// For each `n <= max_n`, the maximum chromatic number over all enumerated
/// `patterns`-free tournaments, with one maximizer.
pub fn survey_max_chromatic(
    patterns: &[Tournament],
    max_n: usize,
    enum_limit: usize,
) -> Result<Vec<SurveyRow>> {
    let mut rows = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let mut free_classes = 0usize;
        let mut max_chi: Option<usize> = None;
        let mut witness: Option<Tournament> = None;
        for t in enumerate_tournaments_with_limit(n, enum_limit)? {
            if !is_family_free(&t, patterns)? {
                continue;
            }
            free_classes += 1;
            let (chi, _) = chromatic_number(&t)?;
            if max_chi.is_none_or(|m| chi > m) {
                max_chi = Some(chi);
                witness = Some(t);
            }
        }
        rows.push(SurveyRow {
            n,
            free_classes,
            max_chi,
            witness,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tournament::build;

    fn cyclic_triangle() -> Tournament {
        build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn containment_examples() {
        let l3 = generate(&FamilySpec::L(3)).unwrap();
        assert!(contains_subtournament(&l3, &cyclic_triangle())
            .unwrap()
            .is_none());

        let d3 = generate(&FamilySpec::D(3)).unwrap();
        let d2 = generate(&FamilySpec::D(2)).unwrap();
        let emb = contains_subtournament(&d3, &d2).unwrap().unwrap();
        assert!(emb.is_valid(&d3, &d2));

        // S_4 and D_3 both have 7 vertices, so containment would mean
        // isomorphism; their canonical codes differ.
        let s4 = generate(&FamilySpec::S(4)).unwrap();
        assert_ne!(canonical_form(&s4).unwrap(), canonical_form(&d3).unwrap());
        assert!(contains_subtournament(&s4, &d3).unwrap().is_none());
    }

    #[test]
    fn family_freeness() {
        let l9 = generate(&FamilySpec::L(9)).unwrap();
        assert!(is_family_free(&l9, &[cyclic_triangle()]).unwrap());

        let u3 = generate(&FamilySpec::U(3)).unwrap();
        let d3 = generate(&FamilySpec::D(3)).unwrap();
        assert!(!is_family_free(&u3, &[d3.clone(), u3.clone()]).unwrap());

        let s4 = generate(&FamilySpec::S(4)).unwrap();
        assert!(is_family_free(&s4, &[d3, u3.clone()]).unwrap());

        // Independent confirmation of the U_3-freeness of S_4: no 5-subset
        // of S_4 is isomorphic to U_3.
        let u3_code = canonical_form(&u3).unwrap();
        for mask in 0u64..(1 << 7) {
            if mask.count_ones() != 5 {
                continue;
            }
            let sub = induced(&s4, &VertexSet::from_mask64(mask)).unwrap();
            assert_ne!(canonical_form(&sub).unwrap(), u3_code);
        }
    }

    #[test]
    fn containment_is_reflexive_and_transitive() {
        for n in 1..=5 {
            for t in crate::enumerate::enumerate_tournaments(n).unwrap() {
                assert!(contains_subtournament(&t, &t).unwrap().is_some());
            }
        }
        // Transitivity along a real chain: U_3 embeds in A_3 embeds in A_4,
        // so U_3 embeds in A_4.
        let a4 = generate(&FamilySpec::A(4)).unwrap();
        let a3 = generate(&FamilySpec::A(3)).unwrap();
        let u3 = generate(&FamilySpec::U(3)).unwrap();
        assert!(contains_subtournament(&a3, &u3).unwrap().is_some());
        assert!(contains_subtournament(&a4, &a3).unwrap().is_some());
        assert!(contains_subtournament(&a4, &u3).unwrap().is_some());
    }

    #[test]
    fn transitive_subsets() {
        for t in crate::enumerate::enumerate_tournaments(4).unwrap() {
            assert!(find_transitive_subset(&t, 3).is_some());
        }
        assert!(find_transitive_subset(&cyclic_triangle(), 3).is_none());
        assert!(find_transitive_subset(&cyclic_triangle(), 2).is_some());
    }

    #[test]
    fn hero_examples() {
        for k in 1..=6 {
            let l = generate(&FamilySpec::L(k)).unwrap();
            assert!(is_hero(&l).unwrap().hero, "L_{k} is a hero");
        }
        let u3 = generate(&FamilySpec::U(3)).unwrap();
        let a = is_hero(&u3).unwrap();
        assert!(!a.hero);
        assert!(matches!(
            a.certificate,
            HeroCertificate::ForbiddenWitness { .. }
        ));

        let c = cyclic_triangle();
        let a = is_hero(&c).unwrap();
        assert!(a.hero);
        assert!(matches!(a.certificate, HeroCertificate::Structure(_)));
    }

    #[test]
    fn minimal_nonhero_examples() {
        for p in [
            MinimalNonHero::N,
            MinimalNonHero::S3,
            MinimalNonHero::Delta2,
        ] {
            assert!(is_minimal_nonhero(&p.tournament()).unwrap(), "{}", p.name());
        }
        let l5 = generate(&FamilySpec::L(5)).unwrap();
        assert!(!is_minimal_nonhero(&l5).unwrap());
    }

    #[test]
    fn jewel_examples() {
        let c = cyclic_triangle();
        let d3 = generate(&FamilySpec::D(3)).unwrap();
        let spec = JewelSpec {
            a: 7,
            g: c.clone(),
            h: c.clone(),
        };
        assert!(is_jewel(&d3, &spec).unwrap());

        let l7 = generate(&FamilySpec::L(7)).unwrap();
        assert!(!is_jewel(&l7, &spec).unwrap());

        let i = Tournament::single();
        let spec_i = JewelSpec {
            a: 3,
            g: i.clone(),
            h: i,
        };
        assert!(is_jewel(&c, &spec_i).unwrap());

        assert!(matches!(is_jewel(&c, &spec), Err(Error::WrongSize { .. })));
    }

    #[test]
    fn jewel_chain_examples() {
        let c = cyclic_triangle();
        let d3 = generate(&FamilySpec::D(3)).unwrap();
        let spec = JewelSpec {
            a: 7,
            g: c.clone(),
            h: c,
        };
        let doubled = crate::tournament::compose_chain(&d3, &d3);
        let chain = find_jewel_chain(&doubled, &spec, 2).unwrap().unwrap();
        assert_eq!(chain.len(), 2);
        assert!(chain[0]
            .iter()
            .all(|u| chain[1].iter().all(|v| doubled.has_edge(u, v))));

        assert!(find_jewel_chain(&d3, &spec, 2).unwrap().is_none());
    }

    #[test]
    fn survey_examples() {
        let rows = survey_max_chromatic(&[cyclic_triangle()], 5, 8).unwrap();
        assert!(rows.iter().all(|r| r.max_chi == Some(1)));

        let rows = survey_max_chromatic(&[], 4, 8).unwrap();
        assert_eq!(rows.last().unwrap().max_chi, Some(2));
        assert_eq!(rows[2].max_chi, Some(2));
    }
}
