//! Constructors for the named tournament families.
//!
//! Vertex labelings are deterministic: recursive families lay their blocks
//! out in composition order (so `D(n)` is literally
//! `compose_delta([I, D(n-1), D(n-1)])`, apex first), and the arithmetic
//! families (`U`, `S`) follow their index rules directly.

use crate::error::{Error, Result};
use crate::tournament::{compose_delta, Tournament};

/// `D(n)` is materialized densely; 2^14 - 1 vertices is the practical
/// memory ceiling for the adjacency bitset.
pub const MAX_D_PARAM: u32 = 14;
pub const MAX_A_PARAM: u32 = 6;
/// Cap on the vertex count of the flat families (`L`, `U`, `S`).
pub const MAX_FLAT_VERTICES: usize = 1 << 14;

/// A named family together with its parameter, where applicable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// Transitive tournament on `k` vertices.
    L(u32),
    /// `D(1) = I`, `D(n) = delta(I, D(n-1), D(n-1))`; 2^n - 1 vertices.
    D(u32),
    /// `A(1) = I`, `A(n) = delta(I, A(n-1), I, ..., A(n-1), I)`.
    A(u32),
    /// `U(n)`: 2n - 1 vertices, later beats earlier iff both 1-based
    /// indices are odd.
    U(u32),
    /// `S(n)`: 2n - 1 vertices, `i` beats `j` iff `j - i` is in
    /// `{1, ..., n-1}` modulo `2n - 1`.
    S(u32),
    /// The five-vertex minimal non-hero with a transitive 4-set.
    N,
    /// `delta(L_2, L_2, L_2)`.
    Delta2,
    /// The cyclic triangle.
    C,
}

impl FamilySpec {
    /// Number of vertices the generated tournament will have.
    pub fn size(&self) -> Result<usize> {
        Ok(match *self {
            FamilySpec::L(k) => check_param(k, "L", MAX_FLAT_VERTICES as u32)? as usize,
            FamilySpec::D(n) => {
                check_param(n, "D", MAX_D_PARAM)?;
                (1usize << n) - 1
            }
            FamilySpec::A(n) => {
                check_param(n, "A", MAX_A_PARAM)?;
                let mut size = 1usize;
                for m in 2..=n as usize {
                    size = m + (m - 1) * size;
                }
                size
            }
            FamilySpec::U(n) | FamilySpec::S(n) => {
                check_param(n, "U/S", (MAX_FLAT_VERTICES / 2) as u32)?;
                2 * n as usize - 1
            }
            FamilySpec::N => 5,
            FamilySpec::Delta2 => 6,
            FamilySpec::C => 3,
        })
    }
}

fn check_param(p: u32, _family: &'static str, max: u32) -> Result<u32> {
    if p == 0 {
        return Err(Error::ZeroParam);
    }
    if p > max {
        return Err(Error::SizeLimit {
            op: "generate",
            n: p as usize,
            limit: max as usize,
        });
    }
    Ok(p)
}

/// Builds the tournament a `FamilySpec` names.
pub fn generate(spec: &FamilySpec) -> Result<Tournament> {
    spec.size()?;
    Ok(match *spec {
        FamilySpec::L(k) => Tournament::from_fn(k as usize, |_, _| true),
        FamilySpec::D(n) => {
            let mut t = Tournament::single();
            for _ in 2..=n {
                t = compose_delta(&[Tournament::single(), t.clone(), t])?;
            }
            t
        }
        FamilySpec::A(n) => {
            let mut t = Tournament::single();
            for m in 2..=n {
                let mut blocks = Vec::with_capacity(2 * m as usize - 1);
                for _ in 0..m - 1 {
                    blocks.push(Tournament::single());
                    blocks.push(t.clone());
                }
                blocks.push(Tournament::single());
                t = compose_delta(&blocks)?;
            }
            t
        }
        FamilySpec::U(n) => {
            let size = 2 * n as usize - 1;
            // 0-based u corresponds to 1-based position u + 1.
            Tournament::from_fn(size, |u, v| !(u % 2 == 0 && v % 2 == 0))
        }
        FamilySpec::S(n) => {
            let size = 2 * n as usize - 1;
            Tournament::from_fn(size, |u, v| v - u < n as usize)
        }
        FamilySpec::N => {
            // v1 beats v2 and v4, loses to v3 and v5; v2..v5 transitive.
            Tournament::from_fn(5, |u, v| if u == 0 { v == 1 || v == 3 } else { true })
        }
        FamilySpec::Delta2 => {
            let l2 = generate(&FamilySpec::L(2))?;
            compose_delta(&[l2.clone(), l2.clone(), l2])?
        }
        FamilySpec::C => compose_delta(&[
            Tournament::single(),
            Tournament::single(),
            Tournament::single(),
        ])?,
    })
}

impl std::str::FromStr for FamilySpec {
    type Err = String;

    /// Accepts compact tokens such as `d3`, `a4`, `u3`, `s3`, `l5`, `n`,
    /// `delta2`, `c`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim().to_ascii_lowercase();
        let parse_param = |rest: &str| -> std::result::Result<u32, String> {
            rest.parse::<u32>()
                .map_err(|_| format!("bad family parameter in {s:?}"))
        };
        match s.as_str() {
            "n" => return Ok(FamilySpec::N),
            "delta2" => return Ok(FamilySpec::Delta2),
            "c" => return Ok(FamilySpec::C),
            "" => return Err("empty family token".into()),
            _ => {}
        }
        let (head, rest) = s.split_at(1);
        let p = parse_param(rest)?;
        match head {
            "l" => Ok(FamilySpec::L(p)),
            "d" => Ok(FamilySpec::D(p)),
            "a" => Ok(FamilySpec::A(p)),
            "u" => Ok(FamilySpec::U(p)),
            "s" => Ok(FamilySpec::S(p)),
            _ => Err(format!("unknown family {s:?}")),
        }
    }
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            FamilySpec::L(k) => write!(f, "l{k}"),
            FamilySpec::D(n) => write!(f, "d{n}"),
            FamilySpec::A(n) => write!(f, "a{n}"),
            FamilySpec::U(n) => write!(f, "u{n}"),
            FamilySpec::S(n) => write!(f, "s{n}"),
            FamilySpec::N => write!(f, "n"),
            FamilySpec::Delta2 => write!(f, "delta2"),
            FamilySpec::C => write!(f, "c"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::tournament::compose_delta;

    #[test]
    fn sizes() {
        assert_eq!(generate(&FamilySpec::D(2)).unwrap().n(), 3);
        assert_eq!(generate(&FamilySpec::D(4)).unwrap().n(), 15);
        assert_eq!(generate(&FamilySpec::A(3)).unwrap().n(), 9);
        assert_eq!(generate(&FamilySpec::A(4)).unwrap().n(), 31);
        assert_eq!(generate(&FamilySpec::U(3)).unwrap().n(), 5);
        assert_eq!(generate(&FamilySpec::S(3)).unwrap().n(), 5);
        assert_eq!(generate(&FamilySpec::N).unwrap().n(), 5);
        assert_eq!(generate(&FamilySpec::Delta2).unwrap().n(), 6);
        assert_eq!(generate(&FamilySpec::L(1)).unwrap().n(), 1);
        assert_eq!(generate(&FamilySpec::D(0)).unwrap_err(), Error::ZeroParam);
    }

    #[test]
    fn d2_is_c_and_s2_is_c() {
        let c = generate(&FamilySpec::C).unwrap();
        assert_eq!(generate(&FamilySpec::D(2)).unwrap(), c);
        let s2 = generate(&FamilySpec::S(2)).unwrap();
        assert_eq!(canonical_form(&s2).unwrap(), canonical_form(&c).unwrap());
        let u2 = generate(&FamilySpec::U(2)).unwrap();
        assert_eq!(canonical_form(&u2).unwrap(), canonical_form(&c).unwrap());
    }

    #[test]
    fn d_recursion_identity() {
        for n in 2..=5 {
            let dn = generate(&FamilySpec::D(n)).unwrap();
            let prev = generate(&FamilySpec::D(n - 1)).unwrap();
            let built = compose_delta(&[Tournament::single(), prev.clone(), prev]).unwrap();
            assert_eq!(dn, built, "D_{n} recursion");
        }
    }

    #[test]
    fn a_recursion_identity() {
        for n in 2..=4u32 {
            let an = generate(&FamilySpec::A(n)).unwrap();
            let prev = generate(&FamilySpec::A(n - 1)).unwrap();
            let mut blocks = Vec::new();
            for _ in 0..n - 1 {
                blocks.push(Tournament::single());
                blocks.push(prev.clone());
            }
            blocks.push(Tournament::single());
            assert_eq!(an, compose_delta(&blocks).unwrap(), "A_{n} recursion");
        }
    }

    #[test]
    fn u_is_delta_of_singletons() {
        for n in 1..=5u32 {
            let un = generate(&FamilySpec::U(n)).unwrap();
            let blocks = vec![Tournament::single(); 2 * n as usize - 1];
            assert_eq!(un, compose_delta(&blocks).unwrap());
        }
    }

    #[test]
    fn u3_backedges_among_odd_positions() {
        let u3 = generate(&FamilySpec::U(3)).unwrap();
        for u in 0..5 {
            for v in (u + 1)..5 {
                let backward = u3.has_edge(v, u);
                assert_eq!(backward, u % 2 == 0 && v % 2 == 0, "pair ({u},{v})");
            }
        }
    }

    #[test]
    fn s_is_vertex_transitive() {
        for n in 2..=4u32 {
            let s = generate(&FamilySpec::S(n)).unwrap();
            let m = s.n();
            for u in 0..m {
                for v in 0..m {
                    if u != v {
                        assert_eq!(
                            s.has_edge(u, v),
                            s.has_edge((u + 1) % m, (v + 1) % m),
                            "shift automorphism of S_{n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn n_definition() {
        let n = generate(&FamilySpec::N).unwrap();
        // v1 is complete to {v2, v4} and complete from {v3, v5}.
        assert!(n.has_edge(0, 1) && n.has_edge(0, 3));
        assert!(n.has_edge(2, 0) && n.has_edge(4, 0));
        assert!(
            crate::tournament::is_transitive_set(&n, &crate::tournament::VertexSet::new(1..5))
                .unwrap()
        );
    }

    #[test]
    fn fixed_family_codes_are_stable() {
        let n_code = canonical_form(&generate(&FamilySpec::N).unwrap()).unwrap();
        let d2_code = canonical_form(&generate(&FamilySpec::Delta2).unwrap()).unwrap();
        assert_eq!((n_code.n(), n_code.bits()), (5, 0xa));
        assert_eq!((d2_code.n(), d2_code.bits()), (6, 0x198));
    }

    #[test]
    fn family_token_parsing() {
        assert_eq!("d3".parse::<FamilySpec>().unwrap(), FamilySpec::D(3));
        assert_eq!("L5".parse::<FamilySpec>().unwrap(), FamilySpec::L(5));
        assert_eq!("delta2".parse::<FamilySpec>().unwrap(), FamilySpec::Delta2);
        assert_eq!("n".parse::<FamilySpec>().unwrap(), FamilySpec::N);
        assert!("q7".parse::<FamilySpec>().is_err());
        assert!("d".parse::<FamilySpec>().is_err());
    }

    use crate::error::Error;
    use crate::tournament::Tournament;
}
