//! Constructive colorings: the explicit n-colorings of the `D` and `A`
//! families, the cyclic-or-triple analysis of prime tournaments avoiding
//! `U_3`, and the 3^(n-2)-coloring of tournaments avoiding both `D_n`
//! and `U_3`.

use crate::canon::are_isomorphic;
use crate::chromatic::{is_valid_coloring, Coloring};
use crate::containment::{contains_subtournament, Embedding};
use crate::error::{Error, Result};
use crate::generators::{generate, FamilySpec};
use crate::structure::{is_prime, substitution_decomposition, NodeKind};
use crate::tournament::{induced, Tournament, VertexSet};

/// Apex takes the fresh color, both copies recurse; exactly `n` colors.
pub fn explicit_coloring_d(n: u32) -> Result<Coloring> {
    if n == 0 {
        return Err(Error::ZeroParam);
    }
    if n > 12 {
        return Err(Error::SizeLimit {
            op: "explicit_coloring_d",
            n: n as usize,
            limit: 12,
        });
    }
    fn raw(n: u32) -> Vec<usize> {
        if n == 1 {
            return vec![0];
        }
        let sub = raw(n - 1);
        let mut v = Vec::with_capacity(2 * sub.len() + 1);
        v.push(n as usize - 1);
        v.extend_from_slice(&sub);
        v.extend_from_slice(&sub);
        v
    }
    Ok(Coloring::new(&raw(n)))
}

/// All spine vertices share the fresh color, blocks recurse; exactly `n`
/// colors.
pub fn explicit_coloring_a(n: u32) -> Result<Coloring> {
    if n == 0 {
        return Err(Error::ZeroParam);
    }
    if n > 5 {
        return Err(Error::SizeLimit {
            op: "explicit_coloring_a",
            n: n as usize,
            limit: 5,
        });
    }
    fn raw(n: u32) -> Vec<usize> {
        if n == 1 {
            return vec![0];
        }
        let sub = raw(n - 1);
        let mut v = Vec::new();
        for _ in 0..n - 1 {
            v.push(n as usize - 1);
            v.extend_from_slice(&sub);
        }
        v.push(n as usize - 1);
        v
    }
    Ok(Coloring::new(&raw(n)))
}

/// Shape of a prime tournament avoiding `U_3`: either isomorphic to some
/// `S_m`, or 3-partitionable with all pairwise part unions transitive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LiuForm {
    Cyclic { m: usize, iso: Embedding },
    Triple { parts: [VertexSet; 3] },
}

/// Resolves a prime `U_3`-free tournament into its cyclic or triple form.
pub fn liu_form(t: &Tournament) -> Result<LiuForm> {
    if t.n() == 0 {
        return Err(Error::EmptyTournament);
    }
    if !is_prime(t)? {
        return Err(Error::NotPrime);
    }
    let u3 = generate(&FamilySpec::U(3))?;
    if let Some(emb) = contains_subtournament(t, &u3)? {
        return Err(Error::ForbiddenSubtournament {
            pattern: "U_3".into(),
            witness: emb.map().to_vec(),
        });
    }
    let n = t.n();
    if n % 2 == 1 {
        let m = n.div_ceil(2);
        let sm = generate(&FamilySpec::S(m as u32))?;
        if are_isomorphic(t, &sm).unwrap_or(false) {
            let iso = contains_subtournament(&sm, t)?.expect("isomorphic");
            return Ok(LiuForm::Cyclic { m, iso });
        }
    }
    match triple_partition(t) {
        Some(parts) => Ok(LiuForm::Triple { parts }),
        // Unreachable for genuinely prime U_3-free inputs.
        None => Err(Error::Undecided("liu_form triple search")),
    }
}

/// Lexicographically least assignment into parts `X_1, X_2, X_3` keeping
/// `X_1 + X_2`, `X_2 + X_3`, `X_3 + X_1` transitive.
fn triple_partition(t: &Tournament) -> Option<[VertexSet; 3]> {
    let n = t.n();
    if n > 64 {
        return None;
    }
    // unions[i] pairs part i with part (i + 1) % 3.
    fn dfs(t: &Tournament, v: usize, parts: &mut [u8], unions: &mut [u64; 3]) -> bool {
        if v == t.n() {
            return true;
        }
        for p in 0..3u8 {
            let affected = [p as usize, (p as usize + 2) % 3];
            let ok = affected
                .iter()
                .all(|&u| t.transitive_mask(unions[u] | 1 << v));
            if !ok {
                continue;
            }
            for &u in &affected {
                unions[u] |= 1 << v;
            }
            parts[v] = p;
            if dfs(t, v + 1, parts, unions) {
                return true;
            }
            for &u in &affected {
                unions[u] &= !(1 << v);
            }
        }
        false
    }
    let mut parts = vec![0u8; n];
    let mut unions = [0u64; 3];
    if dfs(t, 0, &mut parts, &mut unions) {
        let pick = |c: u8| VertexSet::new((0..n).filter(|&v| parts[v] == c));
        Some([pick(0), pick(1), pick(2)])
    } else {
        None
    }
}

/// Color tuples over {1,2,3} of length `n - 2`, per vertex.
type Tuples = Vec<Vec<u8>>;

fn prefix_tuples(tuples: Tuples, head: u8) -> Tuples {
    tuples
        .into_iter()
        .map(|mut t| {
            t.insert(0, head);
            t
        })
        .collect()
}

/// Embedding of `D(k)` if present; skips the search when the host is too
/// small to matter.
fn contains_d(t: &Tournament, k: u32) -> Result<Option<Embedding>> {
    let size = (1usize << k) - 1;
    if t.n() < size {
        return Ok(None);
    }
    let dk = generate(&FamilySpec::D(k))?;
    contains_subtournament(t, &dk)
}

/// Assembles a `D(n)` embedding out of two `D(n-1)` embeddings in blocks
/// `i -> j` of a cyclic quotient plus an apex vertex from block `k` with
/// `j -> k -> i`. Block data is (vertex list, embedding) in block-local
/// labels.
fn assemble_dn_witness(
    apex: usize,
    head_block: (&VertexSet, &Embedding),
    tail_block: (&VertexSet, &Embedding),
    n: u32,
) -> Vec<usize> {
    let copy = (1usize << (n - 1)) - 1;
    let mut map = Vec::with_capacity(2 * copy + 1);
    map.push(apex);
    for local in head_block.1.map() {
        map.push(head_block.0.as_slice()[*local]);
    }
    for local in tail_block.1.map() {
        map.push(tail_block.0.as_slice()[*local]);
    }
    map
}

fn color_tuples(t: &Tournament, n: u32) -> Result<Tuples> {
    let nv = t.n();
    let width = n as usize - 2;
    if nv == 1 {
        return Ok(vec![vec![1; width]]);
    }
    if n == 2 {
        debug_assert!(t.is_transitive());
        return Ok(vec![Vec::new(); nv]);
    }
    if is_prime(t)? {
        let two_classes: [Vec<u8>; 2] = {
            let mut second = vec![1u8; width];
            second[0] = 2;
            [vec![1u8; width], second]
        };
        return Ok(match liu_form(t)? {
            LiuForm::Cyclic { m, iso } => (0..nv)
                .map(|v| two_classes[usize::from(iso.map()[v] >= m)].clone())
                .collect(),
            LiuForm::Triple { parts } => (0..nv)
                .map(|v| two_classes[usize::from(parts[2].contains(v))].clone())
                .collect(),
        });
    }
    let tree = substitution_decomposition(t)?;
    match tree.kind {
        NodeKind::Leaf => unreachable!("single vertex handled above"),
        NodeKind::Linear => {
            // Quotient-of-two view (first component against the rest),
            // tagged like the triple case with an empty third part.
            let first = tree.children[0].vertices.clone();
            let rest = VertexSet::new(t.vertices().filter(|&v| !first.contains(v)));
            let mut out = vec![Vec::new(); nv];
            for (tag, set) in [(1u8, &first), (2u8, &rest)] {
                let sub = induced(t, set)?;
                let tuples = if contains_d(&sub, n - 1)?.is_some() {
                    color_tuples(&sub, n)?
                } else {
                    prefix_tuples(color_tuples(&sub, n - 1)?, tag)
                };
                for (local, tuple) in tuples.into_iter().enumerate() {
                    out[set.as_slice()[local]] = tuple;
                }
            }
            Ok(out)
        }
        NodeKind::Prime => {
            let q = tree.quotient.as_ref().expect("prime node has quotient");
            let blocks: Vec<&VertexSet> = tree.children.iter().map(|c| &c.vertices).collect();
            let subs: Vec<Tournament> = blocks
                .iter()
                .map(|b| induced(t, b))
                .collect::<Result<_>>()?;
            let d_embeddings: Vec<Option<Embedding>> = subs
                .iter()
                .map(|s| contains_d(s, n - 1))
                .collect::<Result<_>>()?;
            match liu_form(q)? {
                LiuForm::Cyclic { m, iso } => {
                    let containing: Vec<usize> = (0..q.n())
                        .filter(|&qv| d_embeddings[qv].is_some())
                        .collect();
                    if containing.len() >= 2 {
                        // Two heavy blocks close a cyclic triangle in the
                        // quotient, which assembles a forbidden D(n).
                        let (qi, qj, qk) = heavy_pair_triangle(q, &containing);
                        let apex = blocks[qk].as_slice()[0];
                        let witness = assemble_dn_witness(
                            apex,
                            (blocks[qi], d_embeddings[qi].as_ref().unwrap()),
                            (blocks[qj], d_embeddings[qj].as_ref().unwrap()),
                            n,
                        );
                        return Err(Error::ForbiddenSubtournament {
                            pattern: format!("D_{n}"),
                            witness,
                        });
                    }
                    // Rotate positions so the heavy block (if any) sits last.
                    let period = 2 * m - 1;
                    let shift = containing
                        .first()
                        .map(|&qv| (period - 1 + period - iso.map()[qv]) % period)
                        .unwrap_or(0);
                    let mut out = vec![Vec::new(); nv];
                    for qv in 0..q.n() {
                        let pos = (iso.map()[qv] + shift) % period;
                        let set = blocks[qv];
                        let tuples = if pos == period - 1 {
                            color_tuples(&subs[qv], n)?
                        } else {
                            let tag = if pos < m - 1 { 1 } else { 2 };
                            prefix_tuples(color_tuples(&subs[qv], n - 1)?, tag)
                        };
                        for (local, tuple) in tuples.into_iter().enumerate() {
                            out[set.as_slice()[local]] = tuple;
                        }
                    }
                    Ok(out)
                }
                LiuForm::Triple { parts } => {
                    let mut out = vec![Vec::new(); nv];
                    for qv in 0..q.n() {
                        let set = blocks[qv];
                        let tuples = if d_embeddings[qv].is_some() {
                            color_tuples(&subs[qv], n)?
                        } else {
                            let tag = (0..3)
                                .find(|&i| parts[i].contains(qv))
                                .expect("partition covers quotient")
                                as u8
                                + 1;
                            prefix_tuples(color_tuples(&subs[qv], n - 1)?, tag)
                        };
                        for (local, tuple) in tuples.into_iter().enumerate() {
                            out[set.as_slice()[local]] = tuple;
                        }
                    }
                    Ok(out)
                }
            }
        }
    }
}

/// Finds quotient vertices `(i, j, k)` with blocks `i`, `j` heavy and
/// `i -> j -> k -> i` forming a cyclic triangle.
fn heavy_pair_triangle(q: &Tournament, containing: &[usize]) -> (usize, usize, usize) {
    for (ai, &a) in containing.iter().enumerate() {
        for &b in containing.iter().skip(ai + 1) {
            let (i, j) = if q.has_edge(a, b) { (a, b) } else { (b, a) };
            for k in q.vertices() {
                if k != i && k != j && q.has_edge(j, k) && q.has_edge(k, i) {
                    return (i, j, k);
                }
            }
        }
    }
    unreachable!("cyclic quotients join every vertex pair by a triangle")
}

/// Colors a tournament avoiding `D_n` and `U_3` with at most `3^(n-2)`
/// colors, recursively over its substitution structure. Violated
/// preconditions surface the offending embedding.
pub fn u3_hero_coloring(t: &Tournament, n: u32) -> Result<Coloring> {
    if t.n() == 0 {
        return Err(Error::EmptyTournament);
    }
    if n < 2 {
        return Err(Error::ParamBelowMin {
            op: "u3_hero_coloring",
            min: 2,
            got: n as usize,
        });
    }
    let u3 = generate(&FamilySpec::U(3))?;
    if let Some(emb) = contains_subtournament(t, &u3)? {
        return Err(Error::ForbiddenSubtournament {
            pattern: "U_3".into(),
            witness: emb.map().to_vec(),
        });
    }
    if let Some(emb) = contains_d(t, n)? {
        return Err(Error::ForbiddenSubtournament {
            pattern: format!("D_{n}"),
            witness: emb.map().to_vec(),
        });
    }
    let tuples = color_tuples(t, n)?;
    // Flatten {1,2,3} tuples by mixed radix.
    let raw: Vec<usize> = tuples
        .iter()
        .map(|tu| tu.iter().fold(0usize, |acc, &d| acc * 3 + (d as usize - 1)))
        .collect();
    let coloring = Coloring::new(&raw);
    debug_assert!(is_valid_coloring(t, &coloring).unwrap());
    debug_assert!(coloring.k() <= 3usize.pow(n - 2));
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::{chromatic_number, find_k_coloring};
    use crate::containment::is_family_free;
    use crate::tournament::build;

    fn cyclic_triangle() -> Tournament {
        build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn explicit_d_colorings() {
        for n in 1..=8u32 {
            let d = generate(&FamilySpec::D(n)).unwrap();
            let col = explicit_coloring_d(n).unwrap();
            assert_eq!(col.k(), n as usize);
            assert!(is_valid_coloring(&d, &col).unwrap(), "D_{n}");
        }
        // Minimality at small n: no (n-1)-coloring exists.
        let d4 = generate(&FamilySpec::D(4)).unwrap();
        assert!(find_k_coloring(&d4, 3).unwrap().is_none());
        assert!(matches!(explicit_coloring_d(0), Err(Error::ZeroParam)));
    }

    #[test]
    fn explicit_a_colorings() {
        for n in 1..=5u32 {
            let a = generate(&FamilySpec::A(n)).unwrap();
            let col = explicit_coloring_a(n).unwrap();
            assert_eq!(col.k(), n as usize);
            assert!(is_valid_coloring(&a, &col).unwrap(), "A_{n}");
        }
        let a3 = generate(&FamilySpec::A(3)).unwrap();
        assert!(find_k_coloring(&a3, 2).unwrap().is_none());
    }

    #[test]
    fn liu_form_examples() {
        let c = cyclic_triangle();
        match liu_form(&c).unwrap() {
            LiuForm::Cyclic { m, .. } => assert_eq!(m, 2),
            other => panic!("expected cyclic, got {other:?}"),
        }

        let s3 = generate(&FamilySpec::S(3)).unwrap();
        match liu_form(&s3).unwrap() {
            LiuForm::Cyclic { m, iso } => {
                assert_eq!(m, 3);
                assert!(iso.is_valid(&s3, &s3));
            }
            other => panic!("expected cyclic, got {other:?}"),
        }

        let n = generate(&FamilySpec::N).unwrap();
        match liu_form(&n).unwrap() {
            LiuForm::Triple { parts } => {
                assert_eq!(parts[0], VertexSet::new([0]));
                assert_eq!(parts[1], VertexSet::new([1, 3]));
                assert_eq!(parts[2], VertexSet::new([2, 4]));
                for (x, y) in [(0, 1), (1, 2), (2, 0)] {
                    let union = VertexSet::new(parts[x].iter().chain(parts[y].iter()));
                    assert!(crate::tournament::is_transitive_set(&n, &union).unwrap());
                }
            }
            other => panic!("expected triple, got {other:?}"),
        }

        let delta2 = generate(&FamilySpec::Delta2).unwrap();
        assert!(matches!(liu_form(&delta2), Err(Error::NotPrime)));
        let u4 = generate(&FamilySpec::U(4)).unwrap();
        assert!(matches!(
            liu_form(&u4),
            Err(Error::ForbiddenSubtournament { .. })
        ));
    }

    #[test]
    fn u3_hero_coloring_examples() {
        let s4 = generate(&FamilySpec::S(4)).unwrap();
        let col = u3_hero_coloring(&s4, 3).unwrap();
        assert!(col.k() <= 3);
        assert!(is_valid_coloring(&s4, &col).unwrap());

        let l7 = generate(&FamilySpec::L(7)).unwrap();
        let col = u3_hero_coloring(&l7, 3).unwrap();
        assert!(col.k() <= 3);

        let u3 = generate(&FamilySpec::U(3)).unwrap();
        assert!(matches!(
            u3_hero_coloring(&u3, 3),
            Err(Error::ForbiddenSubtournament { .. })
        ));
        let d3 = generate(&FamilySpec::D(3)).unwrap();
        assert!(matches!(
            u3_hero_coloring(&d3, 3),
            Err(Error::ForbiddenSubtournament { .. })
        ));
    }

    #[test]
    fn u3_hero_coloring_exhaustive_small() {
        let d3 = generate(&FamilySpec::D(3)).unwrap();
        let u3 = generate(&FamilySpec::U(3)).unwrap();
        for n in 1..=6 {
            for t in crate::enumerate::enumerate_tournaments(n).unwrap() {
                if !is_family_free(&t, &[d3.clone(), u3.clone()]).unwrap() {
                    continue;
                }
                let col = u3_hero_coloring(&t, 3).unwrap();
                assert!(col.k() <= 3);
                assert!(is_valid_coloring(&t, &col).unwrap());
                assert!(chromatic_number(&t).unwrap().0 <= col.k());
            }
        }
    }

    use crate::error::Error;
}
