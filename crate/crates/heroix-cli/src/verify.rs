//! The verification harness: replays the library's structural facts over
//! exhaustively enumerated small tournaments, one named check at a time.
//!
//! Every check returns pass, fail, or undecided; a suite passes only if
//! nothing failed and nothing was undecided. Oracles used here (naive
//! chromatic search, unpruned containment, direct jewel recomputation) are
//! deliberately separate code paths from the library implementations they
//! cross-check.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, Mutex, OnceLock};
use std::time::{Duration, Instant};

use heroix::canon::{canonical_form, CanonicalCode};
use heroix::chromatic::{
    chromatic_number, find_k_coloring, is_valid_coloring, refute_three_coloring, ThreeColorOutcome,
};
use heroix::colorings::{
    explicit_coloring_a, explicit_coloring_d, liu_form, u3_hero_coloring, LiuForm,
};
use heroix::containment::{
    contains_subtournament, find_jewel_chain, find_transitive_subset, is_family_free, is_hero,
    is_jewel, is_minimal_nonhero, JewelSpec, MinimalNonHero,
};
use heroix::enumerate::enumerate_tournaments_with_limit;
use heroix::error::Error;
use heroix::forest::{
    backedge_graph, build_incomparable_map, find_forest_ordering, forest_two_coloring,
    is_forest_ordering, verify_incomparable,
};
use heroix::generators::{generate, FamilySpec};
use heroix::structure::{
    is_prime, maximal_homogeneous_sets, member_a, member_af, member_d, spine_delta_partitions,
    spine_delta_partitions_relaxed,
};
use heroix::tournament::{
    complement, induced, is_strongly_connected, strong_components, Ordering, Tournament, VertexSet,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Undecided,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Undecided => "undecided",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub witness: String,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn overall_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn exit_code(&self) -> u8 {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            1
        } else if self.checks.iter().any(|c| c.status == Status::Undecided) {
            3
        } else {
            0
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite {}\n", self.suite));
        for c in &self.checks {
            out.push_str(&format!("[{}] {}: {}\n", c.status, c.id, c.witness));
        }
        let (p, f, u) = self.counts();
        out.push_str(&format!("summary: {p} pass, {f} fail, {u} undecided\n"));
        out
    }

    fn counts(&self) -> (usize, usize, usize) {
        let mut p = 0;
        let mut f = 0;
        let mut u = 0;
        for c in &self.checks {
            match c.status {
                Status::Pass => p += 1,
                Status::Fail => f += 1,
                Status::Undecided => u += 1,
            }
        }
        (p, f, u)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Enumeration ceiling; checks needing more report undecided.
    pub max_n: usize,
    /// Enables the long-running opt-in checks.
    pub long: bool,
    /// Wall-clock budget per suite.
    pub time_budget: Duration,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 8,
            long: false,
            time_budget: Duration::from_secs(600),
        }
    }
}

type CheckOutcome = Result<(Status, String), Error>;
type CheckFn = fn(&VerifyConfig) -> CheckOutcome;

pub const SUITE_NAMES: [&str; 5] = ["core", "forest", "classes", "heroes", "colorings"];

/// Runs one suite (or `all`). Returns `None` for an unknown suite name.
pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Option<VerifyReport> {
    let suites: Vec<&str> = if name == "all" {
        SUITE_NAMES.to_vec()
    } else if SUITE_NAMES.contains(&name) {
        vec![name]
    } else {
        return None;
    };
    let mut checks = Vec::new();
    for suite in suites {
        let table: Vec<(&'static str, CheckFn)> = match suite {
            "core" => core_suite(),
            "forest" => forest_suite(),
            "classes" => classes_suite(),
            "heroes" => heroes_suite(),
            "colorings" => colorings_suite(cfg),
            _ => unreachable!(),
        };
        let deadline = Instant::now() + cfg.time_budget;
        for (id, f) in table {
            if Instant::now() > deadline {
                checks.push(CheckResult {
                    id: id.to_string(),
                    status: Status::Undecided,
                    witness: "suite time budget exhausted".into(),
                });
                continue;
            }
            let result = match f(cfg) {
                Ok((status, witness)) => CheckResult {
                    id: id.to_string(),
                    status,
                    witness,
                },
                Err(Error::Undecided(what)) => CheckResult {
                    id: id.to_string(),
                    status: Status::Undecided,
                    witness: format!("undecided: {what}"),
                },
                Err(other) => CheckResult {
                    id: id.to_string(),
                    status: Status::Fail,
                    witness: format!("error: {other}"),
                },
            };
            checks.push(result);
        }
    }
    Some(VerifyReport {
        suite: name.to_string(),
        checks,
    })
}

fn core_suite() -> Vec<(&'static str, CheckFn)> {
    vec![
        ("core.enumeration_counts", check_enumeration_counts),
        ("core.canonical_relabeling", check_canonical_relabeling),
        ("core.complement_involution", check_complement_involution),
        ("core.strong_component_order", check_strong_component_order),
        ("core.delta_roundtrip", check_delta_roundtrip),
        ("core.transitive_cross_check", check_transitive_cross_check),
        ("core.stearns_k3", check_stearns_k3),
        ("core.stearns_k4", check_stearns_k4),
    ]
}

fn forest_suite() -> Vec<(&'static str, CheckFn)> {
    vec![
        ("forest.figure_orderings", check_figure_orderings),
        ("forest.backedge_acyclic", check_backedge_acyclic),
        ("forest.thickness_one", check_thickness_one),
        ("forest.chi_le_two", check_forest_chi),
        ("forest.heredity", check_forest_heredity),
        ("forest.complement_closure", check_forest_complement),
        ("forest.incomparable_maps", check_incomparable_maps),
    ]
}

fn classes_suite() -> Vec<(&'static str, CheckFn)> {
    vec![
        ("classes.membership_lemma_a", check_lemma_a),
        ("classes.membership_lemma_f", check_lemma_f),
        ("classes.d_family_basics", check_d_basics),
        ("classes.member_d_oracle", check_member_d_oracle),
        ("classes.member_a_oracle", check_member_a_oracle),
        ("classes.af_cross_check", check_af_cross),
        ("classes.prime_census", check_prime_census),
        ("classes.homogeneous_blocks", check_homogeneous_blocks),
    ]
}

fn heroes_suite() -> Vec<(&'static str, CheckFn)> {
    vec![
        ("heroes.equivalence", check_hero_equivalence),
        ("heroes.minimal_census", check_minimal_census),
        ("heroes.hereditary", check_hero_hereditary),
        ("heroes.d_nonhero_iff_d3", check_d_nonhero),
        ("heroes.jewel_examples", check_jewel_examples),
        ("heroes.jewel_chain", check_jewel_chain),
        ("heroes.jewel_oracle", check_jewel_oracle),
    ]
}

fn colorings_suite(cfg: &VerifyConfig) -> Vec<(&'static str, CheckFn)> {
    let mut table: Vec<(&'static str, CheckFn)> = vec![
        ("colorings.chi_d", check_chi_d),
        ("colorings.chi_a", check_chi_a),
        ("colorings.explicit_d", check_explicit_d),
        ("colorings.explicit_a", check_explicit_a),
        ("colorings.minimality_small", check_minimality_small),
        ("colorings.liu_forms", check_liu_forms),
        ("colorings.u3_hero", check_u3_hero),
        ("colorings.chi_complement", check_chi_complement),
        ("colorings.chi_exactness", check_chi_exactness),
        ("colorings.chi_monotone", check_chi_monotone),
    ];
    if cfg.long {
        table.push(("colorings.a4_refutation", check_a4_refutation));
    }
    table
}

// ---------------------------------------------------------------------
// shared helpers

fn enumerate(n: usize, cfg: &VerifyConfig) -> Result<Vec<Tournament>, Error> {
    enumerate_tournaments_with_limit(n, cfg.max_n)
}

fn needs(cfg: &VerifyConfig, n: usize) -> Option<(Status, String)> {
    (cfg.max_n < n).then(|| {
        (
            Status::Undecided,
            format!(
                "needs enumeration up to n={n}, configured limit is {}",
                cfg.max_n
            ),
        )
    })
}

fn fam(spec: FamilySpec) -> Tournament {
    generate(&spec).expect("fixed family")
}

fn code_of(t: &Tournament) -> CanonicalCode {
    canonical_form(t).expect("small")
}

type ForestCatalog = Arc<Vec<(Tournament, Option<Ordering>)>>;

/// Forest search results for every class at each size, shared and cached.
fn forest_catalog(limit: usize) -> ForestCatalog {
    static CACHE: OnceLock<Mutex<BTreeMap<usize, ForestCatalog>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&limit) {
        return Arc::clone(hit);
    }
    let mut list = Vec::new();
    for n in 1..=limit {
        for t in enumerate_tournaments_with_limit(n, limit).expect("within limit") {
            let ordering = find_forest_ordering(&t).expect("within search limit");
            list.push((t, ordering));
        }
    }
    let arc = Arc::new(list);
    cache.lock().unwrap().insert(limit, Arc::clone(&arc));
    arc
}

fn subsets_of(n: usize) -> impl Iterator<Item = u64> {
    1..(1u64 << n)
}

/// Independent chromatic oracle: tries all assignments into at most `kmax`
/// classes by direct recursion.
fn naive_chi_up_to(t: &Tournament, kmax: usize) -> Option<usize> {
    fn tri(t: &Tournament, p: usize, q: usize, r: usize) -> bool {
        t.has_edge(p, q) && t.has_edge(q, r) && t.has_edge(r, p)
    }
    fn can(t: &Tournament, k: usize, assign: &mut Vec<usize>, v: usize) -> bool {
        if v == t.n() {
            return true;
        }
        let used = assign.iter().take(v).copied().max().map_or(0, |m| m + 1);
        for c in 0..k.min(used + 1) {
            let mut ok = true;
            'outer: for a in 0..v {
                if assign[a] != c {
                    continue;
                }
                for (b, &cb) in assign.iter().enumerate().take(a) {
                    if cb == c && (tri(t, b, a, v) || tri(t, b, v, a)) {
                        ok = false;
                        break 'outer;
                    }
                }
            }
            if ok {
                assign[v] = c;
                if can(t, k, assign, v + 1) {
                    return true;
                }
            }
        }
        false
    }
    (1..=kmax).find(|&k| can(t, k, &mut vec![0; t.n()], 0))
}

/// Independent containment oracle: plain injection search without the
/// candidate-mask machinery.
fn oracle_contains(host: &Tournament, pattern: &Tournament) -> bool {
    fn dfs(
        host: &Tournament,
        pattern: &Tournament,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let p = map.len();
        if p == pattern.n() {
            return true;
        }
        for h in host.vertices() {
            if used[h] {
                continue;
            }
            let ok = (0..p).all(|q| pattern.has_edge(q, p) == host.has_edge(map[q], h));
            if ok {
                map.push(h);
                used[h] = true;
                if dfs(host, pattern, map, used) {
                    return true;
                }
                map.pop();
                used[h] = false;
            }
        }
        false
    }
    if pattern.n() > host.n() {
        return false;
    }
    dfs(host, pattern, &mut Vec::new(), &mut vec![false; host.n()])
}

/// Independent jewel oracle: assigns vertices to the two sides one at a
/// time instead of sweeping masks, and uses the unpruned containment.
fn oracle_is_jewel(t: &Tournament, g: &Tournament, h: &Tournament) -> bool {
    fn dfs(
        t: &Tournament,
        g: &Tournament,
        h: &Tournament,
        side_a: &mut Vec<usize>,
        side_b: &mut Vec<usize>,
        v: usize,
    ) -> bool {
        if v == t.n() {
            let a = induced(t, &VertexSet::new(side_a.iter().copied())).expect("in range");
            let b = induced(t, &VertexSet::new(side_b.iter().copied())).expect("in range");
            return oracle_contains(&a, g) || oracle_contains(&b, h);
        }
        side_a.push(v);
        let ok_a = dfs(t, g, h, side_a, side_b, v + 1);
        side_a.pop();
        if !ok_a {
            return false;
        }
        side_b.push(v);
        let ok_b = dfs(t, g, h, side_a, side_b, v + 1);
        side_b.pop();
        ok_b
    }
    dfs(t, g, h, &mut Vec::new(), &mut Vec::new(), 0)
}

fn deterministic_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut state = seed
        .wrapping_mul(2862933555777941757)
        .wrapping_add(3037000493);
    for i in (1..n).rev() {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let j = (state >> 33) as usize % (i + 1);
        perm.swap(i, j);
    }
    perm
}

// ---------------------------------------------------------------------
// core checks

pub fn check_enumeration_counts(cfg: &VerifyConfig) -> CheckOutcome {
    const EXPECTED: [usize; 7] = [1, 1, 2, 4, 12, 56, 456];
    if let Some(short) = needs(cfg, 7) {
        return Ok(short);
    }
    for n in 1..=7 {
        let got = enumerate(n, cfg)?.len();
        if got != EXPECTED[n - 1] {
            return Ok((
                Status::Fail,
                format!("n={n}: {got} classes, expected {}", EXPECTED[n - 1]),
            ));
        }
    }
    Ok((
        Status::Pass,
        "class counts 1,1,2,4,12,56,456 for n=1..7".into(),
    ))
}

pub fn check_canonical_relabeling(cfg: &VerifyConfig) -> CheckOutcome {
    if let Some(short) = needs(cfg, 7) {
        return Ok(short);
    }
    let mut tried = 0usize;
    for n in 2..=7 {
        for (idx, t) in enumerate(n, cfg)?.iter().enumerate() {
            let base = code_of(t);
            for s in 0..3u64 {
                let perm = deterministic_permutation(n, s * 7919 + idx as u64 + n as u64);
                let relabeled = Tournament::from_fn(n, |u, v| t.has_edge(perm[u], perm[v]));
                if code_of(&relabeled) != base {
                    return Ok((
                        Status::Fail,
                        format!("n={n}, class {idx}: relabeling changed the code"),
                    ));
                }
                tried += 1;
            }
        }
    }
    Ok((Status::Pass, format!("{tried} relabelings preserved codes")))
}

pub fn check_complement_involution(cfg: &VerifyConfig) -> CheckOutcome {
    if let Some(short) = needs(cfg, 5) {
        return Ok(short);
    }
    for n in 1..=5 {
        for t in enumerate(n, cfg)? {
            if complement(&complement(&t)) != t {
                return Ok((Status::Fail, format!("involution broken at n={n}")));
            }
        }
    }
    Ok((
        Status::Pass,
        "complement is involutive on all classes to n=5".into(),
    ))
}

pub fn check_strong_component_order(cfg: &VerifyConfig) -> CheckOutcome {
    if let Some(short) = needs(cfg, 6) {
        return Ok(short);
    }
    for n in 1..=6 {
        for t in enumerate(n, cfg)? {
            let comps = strong_components(&t);
            for i in 0..comps.len() {
                for j in (i + 1)..comps.len() {
                    for u in comps[i].iter() {
                        for v in comps[j].iter() {
                            if !t.has_edge(u, v) {
                                return Ok((
                                    Status::Fail,
                                    format!("n={n}: component order violated at edge ({u},{v})"),
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok((
        Status::Pass,
        "condensation order verified edge-by-edge to n=6".into(),
    ))
}

pub fn check_delta_roundtrip(cfg: &VerifyConfig) -> CheckOutcome {
    let mut pool = Vec::new();
    for n in 1..=3 {
        pool.extend(enumerate(n, cfg)?);
    }
    let mut count = 0usize;
    for a in &pool {
        for b in &pool {
            for c in &pool {
                let t = heroix::tournament::compose_delta(&[a.clone(), b.clone(), c.clone()])?;
                let (na, nb) = (a.n(), b.n());
                let block = |lo: usize, hi: usize| VertexSet::new(lo..hi);
                if induced(&t, &block(0, na))? != *a
                    || induced(&t, &block(na, na + nb))? != *b
                    || induced(&t, &block(na + nb, t.n()))? != *c
                {
                    return Ok((Status::Fail, "block extraction mismatch".into()));
                }
                count += 1;
            }
        }
    }
    Ok((
        Status::Pass,
        format!("{count} delta compositions round-tripped"),
    ))
}

pub fn check_transitive_cross_check(cfg: &VerifyConfig) -> CheckOutcome {
    if let Some(short) = needs(cfg, 5) {
        return Ok(short);
    }
    let c = fam(FamilySpec::C);
    for n in 1..=5 {
        for t in enumerate(n, cfg)? {
            for mask in subsets_of(n) {
                let s = VertexSet::from_mask64(mask);
                let fast = heroix::tournament::is_transitive_set(&t, &s)?;
                let via_c = contains_subtournament(&induced(&t, &s)?, &c)?.is_none();
                if fast != via_c {
                    return Ok((
                        Status::Fail,
                        format!("n={n}, subset {s:?}: transitivity disagrees with C-freeness"),
                    ));
                }
            }
        }
    }
    Ok((
        Status::Pass,
        "transitivity equals C-freeness on all subsets to n=5".into(),
    ))
}

pub fn check_stearns_k3(cfg: &VerifyConfig) -> CheckOutcome {
    if let Some(short) = needs(cfg, 4) {
        return Ok(short);
    }
    for t in enumerate(4, cfg)? {
        if find_transitive_subset(&t, 3).is_none() {
            return Ok((
                Status::Fail,
                "a 4-vertex tournament lacks a transitive triple".into(),
            ));
        }
    }
    Ok((
        Status::Pass,
        "every 4-vertex class contains a transitive triple".into(),
    ))
}

pub fn check_stearns_k4(cfg: &VerifyConfig) -> CheckOutcome {
    if let Some(short) = needs(cfg, 8) {
        return Ok(short);
    }
    let classes = enumerate(8, cfg)?;
    for t in &classes {
        if find_transitive_subset(t, 4).is_none() {
            return Ok((
                Status::Fail,
                "an 8-vertex tournament lacks a transitive 4-set".into(),
            ));
        }
    }
    Ok((
        Status::Pass,
        format!(
            "all {} classes on 8 vertices contain a transitive 4-set",
            classes.len()
        ),
    ))
}

// ---------------------------------------------------------------------
// forest checks

/// The worked 7-vertex forest example: identity ordering with backedges
/// {v1,v3}, {v2,v5}, {v4,v6} and forest cut after position 3.
fn figure_forest7() -> Tournament {
    let reversed = [(0usize, 2usize), (1, 4), (3, 5)];
    Tournament::from_fn(7, move |u, v| !reversed.contains(&(u, v)))
}

pub fn check_figure_orderings(_cfg: &VerifyConfig) -> CheckOutcome {
    // U_3 reordered as w = v2, v5, v3, v1, v4 has backedges {w1,w4}, {w2,w5}.
    let u3 = fam(FamilySpec::U(3));
    let order = Ordering::new(vec![1, 4, 2, 0, 3]).expect("permutation");
    let b = backedge_graph(&u3, &order)?;
    let mut pos_pairs: Vec<(usize, usize)> = b
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (pu, pv) = (b.position_of(u), b.position_of(v));
            (pu.min(pv), pu.max(pv))
        })
        .collect();
    pos_pairs.sort_unstable();
    if pos_pairs != vec![(0, 3), (1, 4)] {
        return Ok((
            Status::Fail,
            format!("U_3 backedges at positions {pos_pairs:?}"),
        ));
    }
    if !is_forest_ordering(&u3, &order)? {
        return Ok((Status::Fail, "U_3's stated ordering is not accepted".into()));
    }

    let n = fam(FamilySpec::N);
    let id5 = Ordering::identity(5);
    let b = backedge_graph(&n, &id5)?;
    if b.edges() != [(0, 2), (0, 4)] {
        return Ok((Status::Fail, format!("N backedges {:?}", b.edges())));
    }
    if !is_forest_ordering(&n, &id5)? {
        return Ok((Status::Fail, "N's defining ordering is not accepted".into()));
    }

    let fig = figure_forest7();
    let id7 = Ordering::identity(7);
    if !is_forest_ordering(&fig, &id7)? {
        return Ok((
            Status::Fail,
            "7-vertex figure ordering is not accepted".into(),
        ));
    }
    // The stated top-level cut (first three, last four) has exactly one
    // crossing backedge, so it is a forest cut.
    let b = backedge_graph(&fig, &id7)?;
    let crossing: Vec<_> = b
        .edges()
        .iter()
        .filter(|&&(u, v)| {
            b.position_of(u).min(b.position_of(v)) < 3
                && b.position_of(u).max(b.position_of(v)) >= 3
        })
        .collect();
    if crossing.len() != 1 {
        return Ok((
            Status::Fail,
            format!("figure cut crosses {} backedges", crossing.len()),
        ));
    }
    Ok((
        Status::Pass,
        "stated orderings of U_3, N, and the 7-vertex example verified".into(),
    ))
}

pub fn check_backedge_acyclic(cfg: &VerifyConfig) -> CheckOutcome {
    if let Some(short) = needs(cfg, 7) {
        return Ok(short);
    }
    let mut forests = 0usize;
    for (t, ordering) in forest_catalog(7).iter() {
        if let Some(order) = ordering {
            let b = backedge_graph(t, order)?;
            if !b.is_forest() {
                return Ok((
                    Status::Fail,
                    format!("cyclic backedge graph at n={}", t.n()),
                ));
            }
            forests += 1;
        }
    }
    Ok((
        Status::Pass,
        format!("{forests} forest orderings have acyclic backedge graphs"),
    ))
}

/// Thickness of one backedge component viewed as an ordered subgraph.
fn component_thickness(b: &heroix::forest::BackedgeGraph, members: &[usize]) -> usize {
    let mut positions: Vec<usize> = members.iter().map(|&v| b.position_of(v)).collect();
    positions.sort_unstable();
    let edges: Vec<(usize, usize)> = b
        .edges()
        .iter()
        .filter(|&&(u, v)| members.contains(&u) && members.contains(&v))
        .map(|&(u, v)| {
            let (pu, pv) = (b.position_of(u), b.position_of(v));
            (pu.min(pv), pu.max(pv))
        })
        .collect();
    let mut best = usize::MAX;
    for w in positions.windows(2) {
        let cut = w[1]; // between consecutive member positions
        let crossing = edges.iter().filter(|&&(a, z)| a < cut && z >= cut).count();
        best = best.min(crossing);
    }
    best
}

pub fn check_thickness_one(cfg: &VerifyConfig) -> CheckOutcome {
    if let Some(short) = needs(cfg, 7) {
        return Ok(short);
    }
    let mut components = 0usize;
    for (t, ordering) in forest_catalog(7).iter() {
        let Some(order) = ordering else { continue };
        let b = backedge_graph(t, order)?;
        let mut by_comp: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in t.vertices() {
            by_comp.entry(b.component_of(v)).or_default().push(v);
        }
        for members in by_comp.values() {
            if members.len() < 2 {
                continue;
            }
            if component_thickness(&b, members) != 1 {
                return Ok((
                    Status::Fail,
                    format!("component {members:?} has thickness != 1 at n={}", t.n()),
                ));
            }
            components += 1;
        }
    }
    Ok((
        Status::Pass,
        format!("{components} connected components all have thickness 1"),
    ))
}

pub fn check_forest_chi(cfg: &VerifyConfig) -> CheckOutcome {
    if let Some(short) = needs(cfg, 7) {
        return Ok(short);
    }
    let mut forests = 0usize;
    for (t, ordering) in forest_catalog(7).iter() {
        let Some(order) = ordering else { continue };
        let (chi, _) = chromatic_number(t)?;
        if chi > 2 {
            return Ok((Status::Fail, format!("forest tournament with chi={chi}")));
        }
        let col = forest_two_coloring(t, order)?;
        if col.k() > 2 || !is_valid_coloring(t, &col)? {
            return Ok((Status::Fail, "invalid forest 2-coloring".into()));
        }
        forests += 1;
    }
    Ok((
        Status::Pass,
        format!("{forests} forest tournaments are 2-colorable"),
    ))
}

pub fn check_forest_heredity(cfg: &VerifyConfig) -> CheckOutcome {
    if let Some(short) = needs(cfg, 7) {
        return Ok(short);
    }
    let mut deletions = 0usize;
    for (t, ordering) in forest_catalog(7).iter() {
        let Some(order) = ordering else { continue };
        let n = t.n();
        if n < 2 {
            continue;
        }
        for v in t.vertices() {
            let rest = VertexSet::new(t.vertices().filter(|&u| u != v));
            let sub = induced(t, &rest)?;
            // Relabel the restricted ordering into the induced tournament's
            // compact vertex names.
            let seq: Vec<usize> = order
                .seq()
                .iter()
                .filter(|&&u| u != v)
                .map(|&u| rest.as_slice().binary_search(&u).expect("member"))
                .collect();
            let sub_order = Ordering::new(seq).expect("permutation");
            if !is_forest_ordering(&sub, &sub_order)? {
                return Ok((
                    Status::Fail,
                    format!("deleting vertex {v} broke a forest ordering at n={n}"),
                ));
            }
            deletions += 1;
        }
    }
    Ok((
        Status::Pass,
        format!("{deletions} single-vertex deletions preserved forest orderings"),
    ))
}

pub fn check_forest_complement(cfg: &VerifyConfig) -> CheckOutcome {
    if let Some(short) = needs(cfg, 6) {
        return Ok(short);
    }
    for n in 1..=6 {
        for t in enumerate(n, cfg)? {
            let f = find_forest_ordering(&t)?.is_some();
            let fc = find_forest_ordering(&complement(&t))?.is_some();
            if f != fc {
                return Ok((Status::Fail, format!("complement closure broken at n={n}")));
            }
        }
    }
    Ok((
        Status::Pass,
        "forest class closed under complement to n=6".into(),
    ))
}

pub fn check_incomparable_maps(cfg: &VerifyConfig) -> CheckOutcome {
    if let Some(short) = needs(cfg, 7) {
        return Ok(short);
    }
    let mut built = 0usize;
    for (t, ordering) in forest_catalog(7).iter() {
        let Some(order) = ordering else { continue };
        for r in [1u64, 2, 5, 10] {
            let m = build_incomparable_map(t, order, r)?;
            if !verify_incomparable(t, &m) {
                return Ok((Status::Fail, format!("map fails r={r} at n={}", t.n())));
            }
            built += 1;
        }
    }
    // At small sizes, sweep every forest ordering rather than just the
    // found witness: the construction must succeed on all of them.
    for n in 2..=5usize {
        for t in enumerate(n, cfg)? {
            for seq in permutations(n) {
                let order = Ordering::new(seq).expect("permutation");
                if !is_forest_ordering(&t, &order)? {
                    continue;
                }
                for r in [1u64, 5] {
                    let m = build_incomparable_map(&t, &order, r)?;
                    if !verify_incomparable(&t, &m) {
                        return Ok((
                            Status::Fail,
                            format!("map fails r={r} for an alternate ordering at n={n}"),
                        ));
                    }
                    built += 1;
                }
            }
        }
    }
    Ok((
        Status::Pass,
        format!("{built} incomparable maps built and verified (r in {{1,2,5,10}})"),
    ))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            acc.push(v);
            go(rest, acc, out);
            acc.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

// ---------------------------------------------------------------------
// classes checks

pub fn check_lemma_a(_cfg: &VerifyConfig) -> CheckOutcome {
    let expectations = [
        (FamilySpec::U(3), true),
        (FamilySpec::Delta2, true),
        (FamilySpec::D(3), false),
        (FamilySpec::N, false),
        (FamilySpec::S(3), false),
    ];
    for (spec, expected) in expectations {
        let got = member_a(&fam(spec))?.member;
        if got != expected {
            return Ok((
                Status::Fail,
                format!("member_a({spec}) = {got}, expected {expected}"),
            ));
        }
    }
    Ok((
        Status::Pass,
        "A-closure contains U_3 and Delta_2 but not D_3, N, S_3".into(),
    ))
}

pub fn check_lemma_f(_cfg: &VerifyConfig) -> CheckOutcome {
    let expectations = [
        (FamilySpec::U(3), true),
        (FamilySpec::N, true),
        (FamilySpec::D(3), false),
        (FamilySpec::S(3), false),
        (FamilySpec::Delta2, false),
    ];
    for (spec, expected) in expectations {
        let got = find_forest_ordering(&fam(spec))?.is_some();
        if got != expected {
            return Ok((
                Status::Fail,
                format!("forest({spec}) = {got}, expected {expected}"),
            ));
        }
    }
    Ok((
        Status::Pass,
        "forest class contains U_3 and N but not D_3, S_3, Delta_2".into(),
    ))
}

pub fn check_d_basics(_cfg: &VerifyConfig) -> CheckOutcome {
    for k in 1..=4u32 {
        if !member_d(&fam(FamilySpec::D(k)))?.member {
            return Ok((Status::Fail, format!("member_d(d{k}) is false")));
        }
    }
    for spec in [
        FamilySpec::U(3),
        FamilySpec::N,
        FamilySpec::S(3),
        FamilySpec::Delta2,
    ] {
        if member_d(&fam(spec))?.member {
            return Ok((Status::Fail, format!("member_d({spec}) is true")));
        }
    }
    Ok((
        Status::Pass,
        "D-closure holds its generators and excludes the other minimal non-heroes".into(),
    ))
}

pub fn check_member_d_oracle(cfg: &VerifyConfig) -> CheckOutcome {
    if let Some(short) = needs(cfg, 5) {
        return Ok(short);
    }
    let mut agree = 0usize;
    for n in 1..=5usize {
        let dk = fam(FamilySpec::D(n as u32));
        let dk1 = fam(FamilySpec::D(n as u32 + 1));
        for t in enumerate(n, cfg)? {
            let derived = member_d(&t)?.member;
            let embedded = contains_subtournament(&dk, &t)?.is_some();
            if derived != embedded {
                return Ok((
                    Status::Fail,
                    format!("n={n}: member_d={derived} but D_{n} embedding={embedded}"),
                ));
            }
            if n <= 4 {
                let widened = contains_subtournament(&dk1, &t)?.is_some();
                if derived != widened {
                    return Ok((
                        Status::Fail,
                        format!("n={n}: embedding verdict unstable against D_{}", n + 1),
                    ));
                }
            }
            agree += 1;
        }
    }
    Ok((
        Status::Pass,
        format!("{agree} classes agree with the D-embedding oracle"),
    ))
}

pub fn check_member_a_oracle(cfg: &VerifyConfig) -> CheckOutcome {
    if let Some(short) = needs(cfg, 4) {
        return Ok(short);
    }
    let mut agree = 0usize;
    for n in 1..=4usize {
        let ak = fam(FamilySpec::A(n as u32));
        for t in enumerate(n, cfg)? {
            let derived = member_a(&t)?.member;
            let embedded = contains_subtournament(&ak, &t)?.is_some();
            if derived != embedded {
                return Ok((
                    Status::Fail,
                    format!("n={n}: member_a={derived} but A_{n} embedding={embedded}"),
                ));
            }
            agree += 1;
        }
    }
    Ok((
        Status::Pass,
        format!("{agree} classes agree with the A-embedding oracle"),
    ))
}

pub fn check_af_cross(cfg: &VerifyConfig) -> CheckOutcome {
    if let Some(short) = needs(cfg, 6) {
        return Ok(short);
    }
    let mut agree = 0usize;
    for n in 1..=6 {
        for t in enumerate(n, cfg)? {
            let structural = member_af(&t)?.member;
            let direct = heroix::structure::member_a_and_forest(&t)?;
            if structural != direct {
                return Ok((
                    Status::Fail,
                    format!("n={n}: member_af={structural} but member_a && forest = {direct}"),
                ));
            }
            agree += 1;
        }
    }
    Ok((
        Status::Pass,
        format!("{agree} classes: six-case decision matches A-and-forest"),
    ))
}

pub fn check_prime_census(cfg: &VerifyConfig) -> CheckOutcome {
    if let Some(short) = needs(cfg, 7) {
        return Ok(short);
    }
    let expected: BTreeSet<CanonicalCode> = [FamilySpec::U(2), FamilySpec::U(3), FamilySpec::U(4)]
        .iter()
        .map(|s| code_of(&fam(*s)))
        .collect();
    let mut found = BTreeSet::new();
    for n in 3..=7 {
        for t in enumerate(n, cfg)? {
            if is_prime(&t)? && member_a(&t)?.member {
                found.insert(code_of(&t));
            }
        }
    }
    if found != expected {
        return Ok((
            Status::Fail,
            format!("prime A-members: {} classes, expected 3", found.len()),
        ));
    }
    Ok((
        Status::Pass,
        "prime A-members on 3..7 vertices are exactly U_2, U_3, U_4".into(),
    ))
}

pub fn check_homogeneous_blocks(cfg: &VerifyConfig) -> CheckOutcome {
    if let Some(short) = needs(cfg, 6) {
        return Ok(short);
    }
    let mut checked = 0usize;
    for n in 3..=6 {
        for t in enumerate(n, cfg)? {
            if !is_strongly_connected(&t) || !member_a(&t)?.member {
                continue;
            }
            // Existence: every strong A-member has a spine delta-partition
            // (empty middle blocks permitted, as some members require).
            if spine_delta_partitions_relaxed(&t)?.is_empty() {
                return Ok((
                    Status::Fail,
                    format!("strong A-member with no spine delta-partition at n={n}"),
                ));
            }
            // Block identity: in any partition with nonempty blocks, each
            // maximal homogeneous set is one of the blocks.
            let strict = spine_delta_partitions(&t)?;
            for s in maximal_homogeneous_sets(&t)? {
                for p in &strict {
                    if !p.blocks.contains(&s) {
                        return Ok((
                            Status::Fail,
                            format!("maximal homogeneous set {s:?} is not a block at n={n}"),
                        ));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok((
        Status::Pass,
        format!("{checked} maximal-homogeneous-set/partition pairs verified"),
    ))
}

// ---------------------------------------------------------------------
// heroes checks

pub fn check_hero_equivalence(cfg: &VerifyConfig) -> CheckOutcome {
    if let Some(short) = needs(cfg, 7) {
        return Ok(short);
    }
    let mut classes = 0usize;
    for n in 1..=7 {
        for t in enumerate(n, cfg)? {
            // is_hero runs both characterizations and faults on disagreement.
            let analysis = is_hero(&t)?;
            let structural_cert = matches!(
                analysis.certificate,
                heroix::containment::HeroCertificate::Structure(_)
            );
            if analysis.hero != structural_cert {
                return Ok((Status::Fail, format!("certificate kind mismatch at n={n}")));
            }
            classes += 1;
        }
    }
    Ok((
        Status::Pass,
        format!("both characterizations agree on all {classes} classes (n <= 7)"),
    ))
}

pub fn check_minimal_census(cfg: &VerifyConfig) -> CheckOutcome {
    if let Some(short) = needs(cfg, 7) {
        return Ok(short);
    }
    let mut per_size: BTreeMap<usize, BTreeSet<CanonicalCode>> = BTreeMap::new();
    for n in 1..=7 {
        for t in enumerate(n, cfg)? {
            if is_minimal_nonhero(&t)? {
                per_size.entry(n).or_default().insert(code_of(&t));
            }
        }
    }
    let mut expected: BTreeMap<usize, BTreeSet<CanonicalCode>> = BTreeMap::new();
    for m in [MinimalNonHero::U3, MinimalNonHero::N, MinimalNonHero::S3] {
        expected
            .entry(5)
            .or_default()
            .insert(code_of(&m.tournament()));
    }
    expected
        .entry(6)
        .or_default()
        .insert(code_of(&MinimalNonHero::Delta2.tournament()));
    expected
        .entry(7)
        .or_default()
        .insert(code_of(&MinimalNonHero::D3.tournament()));
    if per_size != expected {
        return Ok((
            Status::Fail,
            format!(
                "census sizes {:?}, expected {{5:3, 6:1, 7:1}}",
                per_size
                    .iter()
                    .map(|(n, s)| (*n, s.len()))
                    .collect::<Vec<_>>()
            ),
        ));
    }
    Ok((
        Status::Pass,
        "minimal non-heroes: {U_3, N, S_3} at n=5, {Delta_2} at 6, {D_3} at 7".into(),
    ))
}

pub fn check_hero_hereditary(cfg: &VerifyConfig) -> CheckOutcome {
    if let Some(short) = needs(cfg, 6) {
        return Ok(short);
    }
    for n in 2..=6 {
        for t in enumerate(n, cfg)? {
            if !is_hero(&t)?.hero {
                continue;
            }
            for v in t.vertices() {
                let rest = VertexSet::new(t.vertices().filter(|&u| u != v));
                if !is_hero(&induced(&t, &rest)?)?.hero {
                    return Ok((
                        Status::Fail,
                        format!("hero at n={n} with non-hero deletion at {v}"),
                    ));
                }
            }
        }
    }
    Ok((
        Status::Pass,
        "every subtournament of a hero is a hero (n <= 6)".into(),
    ))
}

pub fn check_d_nonhero(cfg: &VerifyConfig) -> CheckOutcome {
    if let Some(short) = needs(cfg, 7) {
        return Ok(short);
    }
    let d3 = fam(FamilySpec::D(3));
    let mut members = 0usize;
    for n in 1..=7 {
        for t in enumerate(n, cfg)? {
            if !member_d(&t)?.member {
                continue;
            }
            members += 1;
            let nonhero = !is_hero(&t)?.hero;
            let has_d3 = contains_subtournament(&t, &d3)?.is_some();
            if nonhero != has_d3 {
                return Ok((
                    Status::Fail,
                    format!("D-member at n={n}: nonhero={nonhero} but contains D_3={has_d3}"),
                ));
            }
        }
    }
    Ok((
        Status::Pass,
        format!("{members} D-members: non-hero iff containing D_3"),
    ))
}

pub fn check_jewel_examples(_cfg: &VerifyConfig) -> CheckOutcome {
    let c = fam(FamilySpec::C);
    let spec = JewelSpec {
        a: 7,
        g: c.clone(),
        h: c.clone(),
    };
    if !is_jewel(&fam(FamilySpec::D(3)), &spec)? {
        return Ok((
            Status::Fail,
            "D_3 is not recognized as a (7,C,C)-jewel".into(),
        ));
    }
    if is_jewel(&fam(FamilySpec::L(7)), &spec)? {
        return Ok((
            Status::Fail,
            "L_7 wrongly recognized as a (7,C,C)-jewel".into(),
        ));
    }
    let single = Tournament::single();
    let spec_i = JewelSpec {
        a: 3,
        g: single.clone(),
        h: single,
    };
    if !is_jewel(&c, &spec_i)? {
        return Ok((
            Status::Fail,
            "C is not recognized as a (3,I,I)-jewel".into(),
        ));
    }
    Ok((
        Status::Pass,
        "D_3 is a (7,C,C)-jewel; L_7 is not; C is a (3,I,I)-jewel".into(),
    ))
}

pub fn check_jewel_chain(_cfg: &VerifyConfig) -> CheckOutcome {
    let c = fam(FamilySpec::C);
    let d3 = fam(FamilySpec::D(3));
    let spec = JewelSpec {
        a: 7,
        g: c.clone(),
        h: c,
    };
    let doubled = heroix::tournament::compose_chain(&d3, &d3);
    match find_jewel_chain(&doubled, &spec, 2)? {
        Some(chain) => {
            let ok = chain.len() == 2
                && chain[0]
                    .iter()
                    .all(|u| chain[1].iter().all(|v| doubled.has_edge(u, v)));
            if !ok {
                return Ok((
                    Status::Fail,
                    "returned chain is not complete in order".into(),
                ));
            }
        }
        None => return Ok((Status::Fail, "no jewel chain found in D_3 => D_3".into())),
    }
    // Length-1 chains must agree with a direct scan over all 7-subsets,
    // recomputing jewel-hood through the independent oracle.
    let s4 = fam(FamilySpec::S(4));
    let l7 = fam(FamilySpec::L(7));
    for host in [&d3, &s4, &l7] {
        let by_chain = find_jewel_chain(host, &spec, 1)?.is_some();
        let mut by_scan = false;
        for mask in 0u64..(1 << host.n()) {
            if mask.count_ones() as usize != spec.a {
                continue;
            }
            let sub = induced(host, &VertexSet::from_mask64(mask))?;
            if oracle_is_jewel(&sub, &spec.g, &spec.h) {
                by_scan = true;
                break;
            }
        }
        if by_chain != by_scan {
            return Ok((
                Status::Fail,
                format!("length-1 chain {by_chain} disagrees with subset scan {by_scan}"),
            ));
        }
    }
    if find_jewel_chain(&d3, &spec, 2)?.is_some() {
        return Ok((
            Status::Fail,
            "7-vertex host cannot hold two disjoint 7-jewels".into(),
        ));
    }
    Ok((
        Status::Pass,
        "length-2 chain found in D_3 => D_3 and refuted in D_3".into(),
    ))
}

pub fn check_jewel_oracle(cfg: &VerifyConfig) -> CheckOutcome {
    if let Some(short) = needs(cfg, 8) {
        return Ok(short);
    }
    let c = fam(FamilySpec::C);
    let l2 = fam(FamilySpec::L(2));
    let l3 = fam(FamilySpec::L(3));
    let pairs = [(&c, &c), (&l2, &l3), (&c, &l3)];
    let mut agree = 0usize;
    let mut compare = |t: &Tournament| -> CheckOutcome {
        for (g, h) in pairs {
            let spec = JewelSpec {
                a: t.n(),
                g: g.clone(),
                h: h.clone(),
            };
            let fast = is_jewel(t, &spec)?;
            let slow = oracle_is_jewel(t, g, h);
            if fast != slow {
                return Ok((
                    Status::Fail,
                    format!(
                        "size-{} jewel decision disagrees with the direct oracle",
                        t.n()
                    ),
                ));
            }
            agree += 1;
        }
        Ok((Status::Pass, String::new()))
    };
    // Every class at size 5; named subjects and an enumeration sample at
    // the larger sizes, where the full sweep would be too slow.
    for t in enumerate(5, cfg)? {
        if let (Status::Fail, msg) = compare(&t)? {
            return Ok((Status::Fail, msg));
        }
    }
    let mut subjects = vec![
        fam(FamilySpec::Delta2),
        fam(FamilySpec::D(3)),
        fam(FamilySpec::S(4)),
        fam(FamilySpec::L(7)),
    ];
    let eight = enumerate(8, cfg)?;
    subjects.extend(eight.iter().take(3).cloned());
    subjects.extend(eight.iter().rev().take(3).cloned());
    for t in subjects {
        if let (Status::Fail, msg) = compare(&t)? {
            return Ok((Status::Fail, msg));
        }
    }
    Ok((
        Status::Pass,
        format!("{agree} jewel decisions (sizes 5-8) match the independent oracle"),
    ))
}

// ---------------------------------------------------------------------
// colorings checks

pub fn check_chi_d(_cfg: &VerifyConfig) -> CheckOutcome {
    for n in 1..=4u32 {
        let (chi, _) = chromatic_number(&fam(FamilySpec::D(n)))?;
        if chi != n as usize {
            return Ok((Status::Fail, format!("chi(D_{n}) = {chi}, expected {n}")));
        }
    }
    Ok((Status::Pass, "chi(D_n) = n for n = 1..4, exact".into()))
}

pub fn check_chi_a(_cfg: &VerifyConfig) -> CheckOutcome {
    for n in 1..=3u32 {
        let (chi, _) = chromatic_number(&fam(FamilySpec::A(n)))?;
        if chi != n as usize {
            return Ok((Status::Fail, format!("chi(A_{n}) = {chi}, expected {n}")));
        }
    }
    let a4 = fam(FamilySpec::A(4));
    let col = explicit_coloring_a(4)?;
    if col.k() != 4 || !is_valid_coloring(&a4, &col)? {
        return Ok((
            Status::Fail,
            "explicit 4-coloring of A_4 failed validation".into(),
        ));
    }
    Ok((
        Status::Pass,
        "chi(A_n) = n for n = 1..3 exact; explicit A_4 coloring uses exactly 4 colors".into(),
    ))
}

pub fn check_explicit_d(_cfg: &VerifyConfig) -> CheckOutcome {
    for n in 1..=12u32 {
        let d = fam(FamilySpec::D(n));
        let col = explicit_coloring_d(n)?;
        if col.k() != n as usize || !is_valid_coloring(&d, &col)? {
            return Ok((Status::Fail, format!("explicit coloring of D_{n} invalid")));
        }
    }
    Ok((
        Status::Pass,
        "explicit D_n colorings valid with exactly n colors for n = 1..12".into(),
    ))
}

pub fn check_explicit_a(_cfg: &VerifyConfig) -> CheckOutcome {
    for n in 1..=5u32 {
        let a = fam(FamilySpec::A(n));
        let col = explicit_coloring_a(n)?;
        if col.k() != n as usize || !is_valid_coloring(&a, &col)? {
            return Ok((Status::Fail, format!("explicit coloring of A_{n} invalid")));
        }
    }
    Ok((
        Status::Pass,
        "explicit A_n colorings valid with exactly n colors for n = 1..5".into(),
    ))
}

pub fn check_minimality_small(_cfg: &VerifyConfig) -> CheckOutcome {
    if find_k_coloring(&fam(FamilySpec::D(4)), 3)?.is_some() {
        return Ok((Status::Fail, "found a 3-coloring of D_4".into()));
    }
    if find_k_coloring(&fam(FamilySpec::A(3)), 2)?.is_some() {
        return Ok((Status::Fail, "found a 2-coloring of A_3".into()));
    }
    Ok((
        Status::Pass,
        "no 3-coloring of D_4, no 2-coloring of A_3".into(),
    ))
}

pub fn check_liu_forms(cfg: &VerifyConfig) -> CheckOutcome {
    if let Some(short) = needs(cfg, 7) {
        return Ok(short);
    }
    let u3 = fam(FamilySpec::U(3));
    let mut resolved = 0usize;
    for n in 1..=7 {
        for t in enumerate(n, cfg)? {
            if !is_prime(&t)? || contains_subtournament(&t, &u3)?.is_some() {
                continue;
            }
            match liu_form(&t)? {
                LiuForm::Cyclic { m, iso } => {
                    let sm = fam(FamilySpec::S(m as u32));
                    if code_of(&t) != code_of(&sm) || !iso.is_valid(&sm, &t) {
                        return Ok((Status::Fail, format!("bad cyclic form at n={n}")));
                    }
                }
                LiuForm::Triple { parts } => {
                    for (x, y) in [(0, 1), (1, 2), (2, 0)] {
                        let union = VertexSet::new(parts[x].iter().chain(parts[y].iter()));
                        if !heroix::tournament::is_transitive_set(&t, &union)? {
                            return Ok((Status::Fail, format!("bad triple at n={n}")));
                        }
                    }
                }
            }
            resolved += 1;
        }
    }
    match liu_form(&fam(FamilySpec::N))? {
        LiuForm::Triple { .. } => {}
        other => {
            return Ok((
                Status::Fail,
                format!("liu_form(N) = {other:?}, expected triple"),
            ))
        }
    }
    match liu_form(&fam(FamilySpec::S(3)))? {
        LiuForm::Cyclic { m: 3, .. } => {}
        other => {
            return Ok((
                Status::Fail,
                format!("liu_form(S_3) = {other:?}, expected cyclic(3)"),
            ))
        }
    }
    Ok((
        Status::Pass,
        format!("{resolved} prime U_3-free classes resolved and re-verified"),
    ))
}

pub fn check_u3_hero(cfg: &VerifyConfig) -> CheckOutcome {
    if let Some(short) = needs(cfg, 8) {
        return Ok(short);
    }
    let d3 = fam(FamilySpec::D(3));
    let u3 = fam(FamilySpec::U(3));
    let mut colored = 0usize;
    let mut max_chi = 0usize;
    for n in 1..=8 {
        for t in enumerate(n, cfg)? {
            if !is_family_free(&t, &[d3.clone(), u3.clone()])? {
                continue;
            }
            let col = u3_hero_coloring(&t, 3)?;
            if col.k() > 3 || !is_valid_coloring(&t, &col)? {
                return Ok((Status::Fail, format!("bad 3^(n-2) coloring at n={n}")));
            }
            max_chi = max_chi.max(chromatic_number(&t)?.0);
            colored += 1;
        }
    }
    if max_chi > 3 {
        return Ok((
            Status::Fail,
            format!("a {{D_3, U_3}}-free tournament has chi={max_chi}"),
        ));
    }
    // Smaller and larger exponents at reduced scale.
    for n in 1..=6 {
        for t in enumerate(n, cfg)? {
            if is_family_free(&t, &[fam(FamilySpec::C), u3.clone()])? {
                let col = u3_hero_coloring(&t, 2)?;
                if col.k() > 1 {
                    return Ok((Status::Fail, "n=2 case must use one color".into()));
                }
            }
            if is_family_free(&t, std::slice::from_ref(&u3))? {
                let col = u3_hero_coloring(&t, 4)?;
                if col.k() > 9 || !is_valid_coloring(&t, &col)? {
                    return Ok((Status::Fail, "n=4 case exceeded nine colors".into()));
                }
            }
        }
    }
    Ok((
        Status::Pass,
        format!("{colored} {{D_3, U_3}}-free classes colored with <= 3 colors; max exact chi = {max_chi}"),
    ))
}

pub fn check_chi_complement(cfg: &VerifyConfig) -> CheckOutcome {
    if let Some(short) = needs(cfg, 6) {
        return Ok(short);
    }
    for n in 1..=6 {
        for t in enumerate(n, cfg)? {
            if chromatic_number(&t)?.0 != chromatic_number(&complement(&t))?.0 {
                return Ok((
                    Status::Fail,
                    format!("chi differs from complement at n={n}"),
                ));
            }
        }
    }
    Ok((
        Status::Pass,
        "chi is complement-invariant on all classes to n=6".into(),
    ))
}

pub fn check_chi_exactness(cfg: &VerifyConfig) -> CheckOutcome {
    if let Some(short) = needs(cfg, 6) {
        return Ok(short);
    }
    let c = fam(FamilySpec::C);
    for n in 1..=6 {
        for t in enumerate(n, cfg)? {
            let fast = chromatic_number(&t)?.0;
            let naive = naive_chi_up_to(&t, 3);
            if naive != Some(fast) {
                return Ok((
                    Status::Fail,
                    format!("n={n}: subset engine says {fast}, naive oracle says {naive:?}"),
                ));
            }
            // chi = 1, transitivity, and C-freeness coincide.
            let one = fast == 1;
            let transitive = t.is_transitive();
            let c_free = contains_subtournament(&t, &c)?.is_none();
            if one != transitive || transitive != c_free {
                return Ok((
                    Status::Fail,
                    format!("n={n}: chi=1 {one}, transitive {transitive}, C-free {c_free}"),
                ));
            }
        }
    }
    Ok((
        Status::Pass,
        "subset engine matches the naive oracle; chi = 1 iff transitive iff C-free (n <= 6)".into(),
    ))
}

pub fn check_chi_monotone(cfg: &VerifyConfig) -> CheckOutcome {
    if let Some(short) = needs(cfg, 5) {
        return Ok(short);
    }
    for n in 1..=5 {
        for t in enumerate(n, cfg)? {
            let chi = chromatic_number(&t)?.0;
            for mask in subsets_of(n) {
                let sub = induced(&t, &VertexSet::from_mask64(mask))?;
                if chromatic_number(&sub)?.0 > chi {
                    return Ok((Status::Fail, format!("monotonicity broken at n={n}")));
                }
            }
        }
    }
    Ok((
        Status::Pass,
        "chi is monotone under induced subtournaments to n=5".into(),
    ))
}

pub fn check_a4_refutation(_cfg: &VerifyConfig) -> CheckOutcome {
    let a4 = fam(FamilySpec::A(4));
    match refute_three_coloring(&a4, 20_000_000_000) {
        ThreeColorOutcome::Refuted => Ok((
            Status::Pass,
            "A_4 is not 3-colorable (branch and bound)".into(),
        )),
        ThreeColorOutcome::Undecided => {
            Ok((Status::Undecided, "refutation budget exhausted".into()))
        }
        ThreeColorOutcome::Colorable(_) => {
            Ok((Status::Fail, "branch and bound 3-colored A_4".into()))
        }
    }
}
