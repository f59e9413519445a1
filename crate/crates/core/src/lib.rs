//! Exact combinatorics of labeled rooted forests.
//!
//! The library is built around one recursive idea: a forest whose roots are
//! `1..k-1` becomes a forest with roots `1..k` by cutting off the subtree at
//! vertex `k` (and swapping labels 1 and `k` if a distinguished vertex
//! left tree 1). The cut is undone by exactly `M` choices, where `M`
//! depends only on the family, so counts multiply down the chain. The same
//! step works for multipartite, plane, non-leaf labeled plane and properly
//! edge-colored forests.
//!
//! Modules:
//! - [`forest`], [`plane`], [`colored`], [`parts`], [`degree`]: value types.
//! - [`bijection`]: forward and choice-indexed inverse steps.
//! - [`enumerate`]: brute-force generators used as oracles.
//! - [`counting`]: exact closed forms and identities.
//! - [`codec`]: choice traces, decoding, encoding and uniform sampling.
//! - [`format`]: JSON and DOT rendering.

pub mod bijection;
pub mod codec;
pub mod colored;
pub mod counting;
pub mod degree;
pub mod enumerate;
mod error;
pub mod forest;
pub mod format;
pub mod parts;
pub mod plane;

pub use bijection::ChoiceIndex;
pub use colored::EdgeColoredForest;
pub use degree::{DegreePartition, DegreeSequence};
pub use error::{Error, Result};
pub use forest::{RootedForest, Vertex};
pub use parts::PartAssignment;
pub use plane::{PlaneForest, PlaneNode};

/// Any of the forest kinds handled by the library.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AnyForest {
    Rooted(RootedForest),
    Plane(PlaneForest),
    Colored(EdgeColoredForest),
}

impl AnyForest {
    pub fn into_rooted(self) -> Option<RootedForest> {
        match self {
            Self::Rooted(f) => Some(f),
            _ => None,
        }
    }

    pub fn into_plane(self) -> Option<PlaneForest> {
        match self {
            Self::Plane(f) => Some(f),
            _ => None,
        }
    }

    pub fn into_colored(self) -> Option<EdgeColoredForest> {
        match self {
            Self::Colored(f) => Some(f),
            _ => None,
        }
    }

    /// Canonical text form (see `FORMATS.md`).
    pub fn to_text(&self) -> String {
        match self {
            Self::Rooted(f) => f.to_line(),
            Self::Plane(f) => f.to_term(),
            Self::Colored(f) => f.to_text(),
        }
    }
}

impl std::fmt::Display for AnyForest {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Serializes a big integer as a decimal string so JSON stays exact.
pub(crate) fn decimal<S: serde::Serializer>(
    x: &num_bigint::BigUint,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}
