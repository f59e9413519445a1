use super::{check_choice, ChoiceIndex};
use crate::error::{Error, Result};
use crate::forest::{RootedForest, Vertex};

/// One detach/attach/swap step on parent-array forests.
///
/// `mover` is the vertex split off by the forward map, `anchor` the root
/// it trades labels with, and `cond` the vertex that must stay below
/// `anchor`. `allowed` filters attachment targets (all vertices for the
/// plain family, other parts for multipartite families).
pub(crate) struct Step<'a> {
    pub anchor: Vertex,
    pub mover: Vertex,
    pub cond: Vertex,
    pub allowed: &'a dyn Fn(Vertex) -> bool,
}

impl Step<'_> {
    /// Attachment targets in canonical order.
    pub fn targets(&self, forest: &RootedForest) -> Result<Vec<Vertex>> {
        let mut inside = vec![false; forest.n() + 1];
        for v in forest.subtree_vertices(self.mover)? {
            inside[v] = true;
        }
        let (mut out, ins): (Vec<Vertex>, Vec<Vertex>) = (1..=forest.n())
            .filter(|&v| (self.allowed)(v))
            .partition(|&v| !inside[v]);
        out.extend(ins);
        Ok(out)
    }

    fn sigma(&self, v: Vertex) -> Vertex {
        if v == self.anchor {
            self.mover
        } else if v == self.mover {
            self.anchor
        } else {
            v
        }
    }

    pub fn forward(&self, forest: &RootedForest) -> Result<(RootedForest, ChoiceIndex)> {
        let u = forest.parent(self.mover)?;
        let mut next = forest.detach_subtree(self.mover)?;
        let mut target = u;
        if !next.is_descendant(self.cond, self.anchor)? {
            next = next.swap_labels(self.anchor, self.mover)?;
            target = self.sigma(u);
        }
        let pos = self
            .targets(&next)?
            .iter()
            .position(|&t| t == target)
            .ok_or_else(|| {
                Error::FamilyViolation(format!(
                    "attachment vertex {target} is not an admissible target"
                ))
            })?;
        Ok((next, ChoiceIndex(pos + 1)))
    }

    pub fn inverse(&self, forest: &RootedForest, c: ChoiceIndex) -> Result<RootedForest> {
        let targets = self.targets(forest)?;
        let v = targets[check_choice(c, targets.len())?];
        if forest.is_descendant(v, self.mover)? {
            forest
                .attach_subtree(self.anchor, v)?
                .swap_labels(self.anchor, self.mover)
        } else {
            forest.attach_subtree(self.mover, v)
        }
    }
}

fn check_plain(forest: &RootedForest, roots: usize, k: usize) -> Result<()> {
    let n = forest.n();
    if k < 2 || k + 1 > n {
        return Err(Error::ParameterRange(format!(
            "k = {k} outside 2..={}",
            n.saturating_sub(1)
        )));
    }
    if !forest.has_first_roots(roots) {
        return Err(Error::FamilyViolation(format!(
            "roots are {:?}, expected 1..={roots}",
            forest.roots()
        )));
    }
    if !forest.is_descendant(n, 1)? {
        return Err(Error::FamilyViolation(format!(
            "vertex {n} is not a descendant of 1"
        )));
    }
    Ok(())
}

pub(crate) fn any_vertex(_: Vertex) -> bool {
    true
}

fn plain_step(n: usize, k: usize) -> Step<'static> {
    Step {
        anchor: 1,
        mover: k,
        cond: n,
        allowed: &any_vertex,
    }
}

/// Splits the subtree at `k` off a forest with roots `1..k-1` (vertex `n`
/// below 1), swapping labels 1 and `k` when `n` leaves tree 1.
pub fn plain_forward(forest: &RootedForest, k: usize) -> Result<(RootedForest, ChoiceIndex)> {
    check_plain(forest, k.saturating_sub(1), k)?;
    plain_step(forest.n(), k).forward(forest)
}

/// Rebuilds a forest with roots `1..k-1` from one with roots `1..k` and a
/// choice in `1..=n`.
pub fn plain_inverse(forest: &RootedForest, k: usize, c: ChoiceIndex) -> Result<RootedForest> {
    check_plain(forest, k, k)?;
    plain_step(forest.n(), k).inverse(forest, c)
}

/// Number of preimages of any forest in the plain family: `n`.
pub fn plain_choice_count(forest: &RootedForest, _k: usize) -> usize {
    forest.n()
}
