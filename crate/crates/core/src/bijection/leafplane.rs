use super::{check_choice, ChoiceIndex};
use crate::error::{Error, Result};
use crate::plane::{Arena, PlaneForest};

/// Validates membership in the non-leaf labeled family with roots
/// `1..=roots` and the largest internal label below 1.
fn check(forest: &PlaneForest, roots: usize, r: usize) -> Result<(Arena, usize)> {
    if !forest.is_leaf_unlabeled() {
        return Err(Error::FamilyViolation(
            "expected unlabeled leaves and internal labels 1..=L".into(),
        ));
    }
    let internal = forest.vertex_count() - forest.leaf_count();
    if r < 2 || r >= internal {
        return Err(Error::ParameterRange(format!(
            "r = {r} outside 2..{internal} for {internal} internal vertices"
        )));
    }
    if !forest.has_first_roots(roots) {
        return Err(Error::FamilyViolation(format!("roots are not 1..={roots}")));
    }
    let arena = Arena::from_forest(forest);
    let (one, top) = (
        arena.find(1).expect("label 1"),
        arena.find(internal).expect("label L"),
    );
    if !arena.is_ancestor(one, top) {
        return Err(Error::FamilyViolation(format!(
            "vertex {internal} is not a descendant of 1"
        )));
    }
    Ok((arena, internal))
}

fn leaves(arena: &Arena) -> Vec<usize> {
    arena
        .preorder()
        .into_iter()
        .filter(|&id| arena.children[id].is_empty())
        .collect()
}

/// Cuts the subtree at internal vertex `r`, leaving an unlabeled leaf in its
/// place. Vertex and leaf counts both grow by one.
pub fn leafplane_forward(forest: &PlaneForest, r: usize) -> Result<(PlaneForest, ChoiceIndex)> {
    let (mut arena, internal) = check(forest, r.saturating_sub(1), r)?;
    let moved = arena.find(r).expect("label r");
    let stub = arena.detach_leaving_leaf(moved);
    let (one, top) = (
        arena.find(1).expect("label 1"),
        arena.find(internal).expect("label L"),
    );
    if !arena.is_ancestor(one, top) {
        arena.swap_labels(1, r);
    }
    let pos = leaves(&arena)
        .iter()
        .position(|&id| id == stub)
        .expect("the stub is a leaf");
    Ok((arena.to_forest(), ChoiceIndex(pos + 1)))
}

/// Replaces the `c`-th leaf (global preorder) by tree `r`, or by tree 1
/// followed by swapping labels 1 and `r` when that leaf lies in tree `r`.
pub fn leafplane_inverse(forest: &PlaneForest, r: usize, c: ChoiceIndex) -> Result<PlaneForest> {
    let (mut arena, _) = check(forest, r, r)?;
    let leaves = leaves(&arena);
    let leaf = leaves[check_choice(c, leaves.len())?];
    let root_r = arena.find(r).expect("root r");
    if arena.tree_root(leaf) == root_r {
        let root_1 = arena.find(1).expect("root 1");
        arena.replace_leaf(leaf, root_1);
        arena.swap_labels(1, r);
    } else {
        arena.replace_leaf(leaf, root_r);
    }
    Ok(arena.to_forest())
}

/// Number of leaves of the larger forest, i.e. `p + 1` for a source with
/// `p` leaves.
pub fn leafplane_choice_count(forest: &PlaneForest) -> usize {
    forest.leaf_count()
}
