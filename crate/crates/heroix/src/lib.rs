//! Exact computation with tournaments (complete directed graphs):
//! constructing the named families, deciding structural memberships,
//! computing chromatic numbers, and running the constructive coloring and
//! ordering algorithms, all at exhaustive-verification scale.
//!
//! Everything here is a pure function over immutable values; results are
//! deterministic. Searches that give up on a budget return
//! [`error::Error::Undecided`] rather than guessing.

pub mod canon;
pub mod chromatic;
pub mod colorings;
pub mod containment;
pub mod enumerate;
pub mod error;
pub mod forest;
pub mod generators;
pub mod structure;
pub mod tournament;

pub use canon::{canonical_form, CanonicalCode};
pub use chromatic::{chromatic_number, find_k_coloring, is_valid_coloring, Coloring};
pub use containment::{contains_subtournament, is_family_free, is_hero, Embedding};
pub use enumerate::enumerate_tournaments;
pub use error::{Error, Result};
pub use generators::{generate, FamilySpec};
pub use tournament::{
    build, complement, compose_chain, compose_delta, induced, strong_components, substitute,
    Ordering, Tournament, VertexSet,
};
