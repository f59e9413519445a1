use serde::Serialize;

use super::plain::Step;
use super::ChoiceIndex;
use crate::error::{Error, Result};
use crate::forest::{RootedForest, Vertex};
use crate::parts::PartAssignment;

/// Which root chain of a multipartite family a step belongs to.
///
/// `Primary`: `k` roots `1..=k` inside the first part, vertex
/// `r + 1` (the first label of part 2) below root 1; the step splits off
/// vertex `k`.
///
/// `Secondary`: `k` roots `2..=k+1` (the rest of part 1 followed by a
/// prefix of part 2), vertex 1 below root `r + 1`; the step splits off
/// vertex `k + 1`, which must lie in part 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PartiteChain {
    Primary,
    Secondary,
}

impl PartiteChain {
    /// Root labels of a member with `k` roots.
    pub fn roots(self, k: usize) -> Vec<Vertex> {
        match self {
            Self::Primary => (1..=k).collect(),
            Self::Secondary => (2..=k + 1).collect(),
        }
    }

    /// (anchor root, conditioned vertex) of the chain.
    pub fn anchor_and_condition(self, parts: &PartAssignment) -> (Vertex, Vertex) {
        let second = parts.first_of(2);
        match self {
            Self::Primary => (1, second),
            Self::Secondary => (second, 1),
        }
    }

    /// Vertex split off when going from `k - 1` to `k` roots.
    pub fn mover(self, k: usize) -> Vertex {
        match self {
            Self::Primary => k,
            Self::Secondary => k + 1,
        }
    }

    /// Valid values of `k` (root count of the larger-root-count forest).
    pub fn step_range(self, parts: &PartAssignment) -> std::ops::RangeInclusive<usize> {
        let r = parts.sizes()[0];
        match self {
            Self::Primary => 2..=r,
            Self::Secondary => r + 1..=r + parts.sizes().get(1).copied().unwrap_or(1) - 1,
        }
    }
}

/// True iff `forest` is a member of the chain's family with `k` roots.
pub(crate) fn is_member(
    forest: &RootedForest,
    k: usize,
    parts: &PartAssignment,
    chain: PartiteChain,
) -> bool {
    let (anchor, cond) = chain.anchor_and_condition(parts);
    parts.admits(forest)
        && forest.has_roots(&chain.roots(k))
        && forest.is_descendant(cond, anchor).unwrap_or(false)
}

fn check(
    forest: &RootedForest,
    roots: usize,
    k: usize,
    parts: &PartAssignment,
    chain: PartiteChain,
) -> Result<()> {
    if parts.part_count() < 2 {
        return Err(Error::ParameterRange(
            "a multipartite family needs at least two parts".into(),
        ));
    }
    if forest.n() != parts.n() {
        return Err(Error::FamilyViolation(format!(
            "forest has {} vertices but the parts cover {}",
            forest.n(),
            parts.n()
        )));
    }
    if !chain.step_range(parts).contains(&k) {
        return Err(Error::ParameterRange(format!(
            "k = {k} outside {:?} for {chain:?}",
            chain.step_range(parts)
        )));
    }
    if !is_member(forest, roots, parts, chain) {
        return Err(Error::FamilyViolation(format!(
            "forest is not in the {chain:?} family with roots {:?}",
            chain.roots(roots)
        )));
    }
    Ok(())
}

fn with_step<T>(
    k: usize,
    parts: &PartAssignment,
    chain: PartiteChain,
    f: impl FnOnce(&Step) -> T,
) -> T {
    let (anchor, cond) = chain.anchor_and_condition(parts);
    let mover = chain.mover(k);
    let allowed = |v: Vertex| !parts.same_part(v, mover);
    f(&Step {
        anchor,
        mover,
        cond,
        allowed: &allowed,
    })
}

/// Forward step restricted to cross-part edges.
pub fn partite_forward(
    forest: &RootedForest,
    k: usize,
    parts: &PartAssignment,
    chain: PartiteChain,
) -> Result<(RootedForest, ChoiceIndex)> {
    check(forest, k.saturating_sub(1), k, parts, chain)?;
    with_step(k, parts, chain, |s| s.forward(forest))
}

pub fn partite_inverse(
    forest: &RootedForest,
    k: usize,
    parts: &PartAssignment,
    chain: PartiteChain,
    c: ChoiceIndex,
) -> Result<RootedForest> {
    check(forest, k, k, parts, chain)?;
    with_step(k, parts, chain, |s| s.inverse(forest, c))
}

/// Number of vertices outside the moved vertex's part.
pub fn partite_choice_count(k: usize, parts: &PartAssignment, chain: PartiteChain) -> usize {
    let mover = chain.mover(k);
    parts.n() - parts.sizes()[parts.part_of(mover) - 1]
}

/// Re-roots the tree holding roots `1` and vertex `r + 1` at `r + 1`, taking
/// a forest with roots `1..=r` to one with roots `2..=r+1`.
pub fn reroot_switch(forest: &RootedForest, r: usize) -> Result<RootedForest> {
    let n = forest.n();
    if r == 0 || r >= n {
        return Err(Error::ParameterRange(format!("r = {r} outside 1..{n}")));
    }
    if !forest.has_first_roots(r) || !forest.is_descendant(r + 1, 1)? {
        return Err(Error::FamilyViolation(format!(
            "expected roots 1..={r} with {} below 1",
            r + 1
        )));
    }
    forest.reroot(r + 1)
}

/// Mirror of [`reroot_switch`].
pub fn reroot_switch_back(forest: &RootedForest, r: usize) -> Result<RootedForest> {
    let n = forest.n();
    if r == 0 || r >= n {
        return Err(Error::ParameterRange(format!("r = {r} outside 1..{n}")));
    }
    let roots: Vec<Vertex> = (2..=r + 1).collect();
    if !forest.has_roots(&roots) || !forest.is_descendant(1, r + 1)? {
        return Err(Error::FamilyViolation(format!(
            "expected roots 2..={} with 1 below {}",
            r + 1,
            r + 1
        )));
    }
    forest.reroot(1)
}
