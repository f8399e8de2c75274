//! Isomorph-free exhaustive generation of small tournaments.
//!
//! Representatives for `n` vertices are produced by extending every
//! representative on `n - 1` vertices with a new vertex in all 2^(n-1)
//! ways and deduplicating by canonical code. Results are cached per size
//! for the lifetime of the process and returned in canonical-code order,
//! so the output is deterministic.

use std::collections::BTreeSet;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::canon::{canonical_form, decode, MAX_CANON_N};
use crate::error::{Error, Result};
use crate::tournament::Tournament;

/// Default enumeration ceiling; override with the `_with_limit` variant.
pub const DEFAULT_ENUM_LIMIT: usize = 8;

fn cache() -> &'static Mutex<HashMap<usize, Arc<Vec<Tournament>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Tournament>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// One representative per isomorphism class of `n`-vertex tournaments.
pub fn enumerate_tournaments(n: usize) -> Result<Vec<Tournament>> {
    enumerate_tournaments_with_limit(n, DEFAULT_ENUM_LIMIT)
}

/// Same as [`enumerate_tournaments`] with an explicit ceiling (at most
/// [`MAX_CANON_N`]).
pub fn enumerate_tournaments_with_limit(n: usize, limit: usize) -> Result<Vec<Tournament>> {
    let limit = limit.min(MAX_CANON_N);
    if n > limit {
        return Err(Error::SizeLimit {
            op: "enumerate_tournaments",
            n,
            limit,
        });
    }
    Ok(enumerated(n).as_ref().clone())
}

pub(crate) fn enumerated(n: usize) -> Arc<Vec<Tournament>> {
    if let Some(hit) = cache().lock().unwrap().get(&n) {
        return Arc::clone(hit);
    }
    let list: Vec<Tournament> = if n == 0 {
        vec![Tournament::empty()]
    } else if n == 1 {
        vec![Tournament::single()]
    } else {
        let prev = enumerated(n - 1);
        let mut codes = BTreeSet::new();
        for t in prev.iter() {
            for mask in 0u64..(1 << (n - 1)) {
                let ext = Tournament::from_fn(n, |u, v| {
                    if v < n - 1 {
                        t.has_edge(u, v)
                    } else {
                        // New vertex beats exactly the vertices in `mask`.
                        mask >> u & 1 == 0
                    }
                });
                codes.insert(canonical_form(&ext).expect("within canon limit"));
            }
        }
        codes.into_iter().map(decode).collect()
    };
    let arc = Arc::new(list);
    cache().lock().unwrap().insert(n, Arc::clone(&arc));
    arc
}
