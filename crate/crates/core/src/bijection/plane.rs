use super::{check_choice, ChoiceIndex};
use crate::error::{Error, Result};
use crate::forest::Vertex;
use crate::plane::{Arena, PlaneForest};

fn check(forest: &PlaneForest, roots: usize, k: usize) -> Result<Arena> {
    let n = forest.vertex_count();
    if !forest.is_fully_labeled() {
        return Err(Error::FamilyViolation(
            "plane forest is not fully labeled 1..=n".into(),
        ));
    }
    if k < 2 || k + 1 > n {
        return Err(Error::ParameterRange(format!(
            "k = {k} outside 2..={}",
            n.saturating_sub(1)
        )));
    }
    if !forest.has_first_roots(roots) {
        return Err(Error::FamilyViolation(format!("roots are not 1..={roots}")));
    }
    let arena = Arena::from_forest(forest);
    let (one, last) = (
        arena.find(1).expect("label 1"),
        arena.find(n).expect("label n"),
    );
    if !arena.is_ancestor(one, last) {
        return Err(Error::FamilyViolation(format!(
            "vertex {n} is not a descendant of 1"
        )));
    }
    Ok(arena)
}

/// (node, gap position) slots in canonical order: every vertex
/// outside tree `k` by label, then every vertex of tree `k`; each vertex
/// contributes `deg + 1` gaps, left to right.
fn slots(arena: &Arena, k: Vertex) -> Vec<(usize, usize)> {
    let mut nodes: Vec<usize> = arena.preorder();
    nodes.sort_by_key(|&id| arena.label[id]);
    let root_k = arena.find(k).expect("root k");
    let (mut out, inside): (Vec<usize>, Vec<usize>) = nodes
        .into_iter()
        .partition(|&id| arena.tree_root(id) != root_k);
    out.extend(inside);
    out.into_iter()
        .flat_map(|id| (0..=arena.children[id].len()).map(move |g| (id, g)))
        .collect()
}

/// Splits the subtree at `k` off a labeled plane forest with roots
/// `1..k-1`, keeping the order of the remaining siblings.
pub fn plane_forward(forest: &PlaneForest, k: usize) -> Result<(PlaneForest, ChoiceIndex)> {
    let mut arena = check(forest, k.saturating_sub(1), k)?;
    let n = forest.vertex_count();
    let moved = arena.find(k).expect("label k");
    let (parent, gap) = arena.detach(moved);
    let (one, last) = (
        arena.find(1).expect("label 1"),
        arena.find(n).expect("label n"),
    );
    if !arena.is_ancestor(one, last) {
        arena.swap_labels(1, k);
    }
    let pos = slots(&arena, k)
        .iter()
        .position(|&s| s == (parent, gap))
        .expect("the vacated slot is always listed");
    Ok((arena.to_forest(), ChoiceIndex(pos + 1)))
}

pub fn plane_inverse(forest: &PlaneForest, k: usize, c: ChoiceIndex) -> Result<PlaneForest> {
    let mut arena = check(forest, k, k)?;
    let slots = slots(&arena, k);
    let (target, gap) = slots[check_choice(c, slots.len())?];
    let root_k = arena.find(k).expect("root k");
    if arena.tree_root(target) == root_k {
        let root_1 = arena.find(1).expect("root 1");
        arena.attach(root_1, target, gap);
        arena.swap_labels(1, k);
    } else {
        arena.attach(root_k, target, gap);
    }
    Ok(arena.to_forest())
}

/// `2n - k`: every vertex offers one more gap than it has children.
pub fn plane_choice_count(forest: &PlaneForest, k: usize) -> usize {
    2 * forest.vertex_count() - k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pf(s: &str) -> PlaneForest {
        PlaneForest::parse_term(s).unwrap()
    }

    #[test]
    fn three_vertex_preimages() {
        let target = pf("1(3);2");
        assert_eq!(plane_choice_count(&target, 2), 4);
        let pre: Vec<String> = (1..=4)
            .map(|c| plane_inverse(&target, 2, ChoiceIndex(c)).unwrap().to_term())
            .collect();
        assert_eq!(pre, vec!["1(2,3)", "1(3,2)", "1(3(2))", "1(2(3))"]);
        for (i, s) in pre.iter().enumerate() {
            assert_eq!(
                plane_forward(&pf(s), 2).unwrap(),
                (target.clone(), ChoiceIndex(i + 1))
            );
        }
        assert!(plane_inverse(&target, 2, ChoiceIndex(5)).is_err());
    }

    #[test]
    fn sibling_order_survives_the_swap() {
        // 6 sits below 2, so the forward step swaps 1 and 2
        let src = pf("1(4,2(5,6),3)");
        let (dst, c) = plane_forward(&src, 2).unwrap();
        assert_eq!(dst.to_term(), "1(5,6);2(4,3)");
        assert_eq!(c, ChoiceIndex(7));
        assert_eq!(plane_inverse(&dst, 2, c).unwrap(), src);
    }

    #[test]
    fn rejects_partially_labeled() {
        assert!(plane_forward(&pf("1(*,3)"), 2).is_err());
    }
}
