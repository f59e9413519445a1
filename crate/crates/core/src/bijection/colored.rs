use super::{check_choice, ChoiceIndex};
use crate::colored::EdgeColoredForest;
use crate::error::{Error, Result};
use crate::forest::Vertex;

fn check(forest: &EdgeColoredForest, roots: usize, r: usize) -> Result<()> {
    let n = forest.n();
    if forest.colors() < 2 {
        return Err(Error::ParameterRange("need at least two colors".into()));
    }
    if r < 2 || r + 1 > n {
        return Err(Error::ParameterRange(format!(
            "r = {r} outside 2..={}",
            n.saturating_sub(1)
        )));
    }
    if !forest.base().has_first_roots(roots) {
        return Err(Error::FamilyViolation(format!("roots are not 1..={roots}")));
    }
    if !forest.is_special() {
        return Err(Error::FamilyViolation(
            "an edge out of a root uses the last color".into(),
        ));
    }
    if !forest.base().is_descendant(n, 1)? {
        return Err(Error::FamilyViolation(format!(
            "vertex {n} is not a descendant of 1"
        )));
    }
    Ok(())
}

/// All (vertex, color) attachment choices in canonical order. Roots may
/// only receive colors below the last one.
fn choices(forest: &EdgeColoredForest, r: Vertex) -> Result<Vec<(Vertex, usize)>> {
    let base = forest.base();
    let mut inside = vec![false; forest.n() + 1];
    for v in base.subtree_vertices(r)? {
        inside[v] = true;
    }
    let (mut order, ins): (Vec<Vertex>, Vec<Vertex>) = (1..=forest.n()).partition(|&v| !inside[v]);
    order.extend(ins);
    let mut out = Vec::new();
    for v in order {
        let used = forest.incident_colors(v);
        let top = if base.parents()[v - 1] == 0 {
            forest.colors() - 1
        } else {
            forest.colors()
        };
        out.extend((1..=top).filter(|c| !used.contains(c)).map(|c| (v, c)));
    }
    Ok(out)
}

fn child_with_color(forest: &EdgeColoredForest, x: Vertex, c: usize) -> Option<Vertex> {
    (1..=forest.n()).find(|&w| forest.base().parents()[w - 1] == x && forest.color(w) == c)
}

/// Swaps colors `a` and `b` along the maximal path that leaves `start`
/// downwards through an `a`-edge and then alternates `b`, `a`, ... A proper
/// coloring stays proper: interior vertices see both colors swapped, and
/// the last vertex of the path has no edge of the color it gains.
fn swap_along_path(forest: &mut EdgeColoredForest, start: Vertex, a: usize, b: usize) {
    let (mut v, mut c) = (start, a);
    while let Some(w) = child_with_color(forest, v, c) {
        let other = if c == a { b } else { a };
        forest.recolor(w, other);
        v = w;
        c = other;
    }
}

/// Splits the subtree at `r` off a special colored forest with roots
/// `1..r-1`. The edge into `r` had color `x`; if an edge out of `r` has the
/// last color, `x` and the last color are swapped along the alternating
/// path starting with that edge, so that `r` becomes a special root.
pub fn colored_forward(
    forest: &EdgeColoredForest,
    r: usize,
) -> Result<(EdgeColoredForest, ChoiceIndex)> {
    check(forest, r.saturating_sub(1), r)?;
    let n = forest.n();
    let x = forest.color(r);
    let u = forest.base().parent(r)?;
    let mut next = forest.detach_subtree(r)?;
    if x != forest.colors() {
        swap_along_path(&mut next, r, forest.colors(), x);
    }
    let mut target = u;
    if !next.base().is_descendant(n, 1)? {
        next = next.swap_labels(1, r)?;
        target = match u {
            1 => r,
            v if v == r => 1,
            v => v,
        };
    }
    let pos = choices(&next, r)?
        .iter()
        .position(|&ch| ch == (target, x))
        .ok_or_else(|| {
            Error::FamilyViolation(format!("({target}, {x}) is not an admissible choice"))
        })?;
    Ok((next, ChoiceIndex(pos + 1)))
}

pub fn colored_inverse(
    forest: &EdgeColoredForest,
    r: usize,
    c: ChoiceIndex,
) -> Result<EdgeColoredForest> {
    check(forest, r, r)?;
    let list = choices(forest, r)?;
    let (v, y) = list[check_choice(c, list.len())?];
    let swap = forest.base().is_descendant(v, r)?;
    let attached = if swap { 1 } else { r };
    let mut out = forest.attach_subtree(attached, v, y)?;
    if y != forest.colors() {
        swap_along_path(&mut out, attached, y, forest.colors());
    }
    if swap {
        out = out.swap_labels(1, r)?;
    }
    Ok(out)
}

/// `kc * n - 2n + r`.
pub fn colored_choice_count(forest: &EdgeColoredForest, r: usize) -> usize {
    forest.colors() * forest.n() + r - 2 * forest.n()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::RootedForest;

    fn cf(p: &[usize], c: &[usize]) -> EdgeColoredForest {
        EdgeColoredForest::new(
            RootedForest::from_parents(p.to_vec()).unwrap(),
            3,
            c.to_vec(),
        )
        .unwrap()
    }

    /// The nine preimages of `[0,0,0,1,3,1]` with colors x=1, y=2, z=3,
    /// in canonical choice order.
    fn figure_three() -> (EdgeColoredForest, Vec<EdgeColoredForest>) {
        let bottom = cf(&[0, 0, 0, 1, 3, 1], &[0, 0, 0, 1, 1, 2]);
        let top = vec![
            cf(&[0, 0, 2, 1, 3, 1], &[0, 0, 1, 1, 3, 2]),
            cf(&[0, 0, 2, 1, 3, 1], &[0, 0, 2, 1, 1, 2]),
            cf(&[0, 0, 4, 1, 3, 1], &[0, 0, 2, 1, 1, 2]),
            cf(&[0, 0, 4, 1, 3, 1], &[0, 0, 3, 1, 1, 2]),
            cf(&[0, 0, 6, 1, 3, 1], &[0, 0, 1, 1, 3, 2]),
            cf(&[0, 0, 6, 1, 3, 1], &[0, 0, 3, 1, 1, 2]),
            cf(&[0, 0, 1, 3, 1, 3], &[0, 0, 2, 1, 1, 3]),
            cf(&[0, 0, 5, 3, 1, 3], &[0, 0, 2, 1, 1, 3]),
            cf(&[0, 0, 5, 3, 1, 3], &[0, 0, 3, 1, 1, 2]),
        ];
        (bottom, top)
    }

    #[test]
    fn figure_three_preimages() {
        let (bottom, top) = figure_three();
        assert_eq!(colored_choice_count(&bottom, 3), 9);
        assert_eq!(choices(&bottom, 3).unwrap().len(), 9);
        for (i, src) in top.iter().enumerate() {
            assert!(src.is_special());
            assert_eq!(
                colored_forward(src, 3).unwrap(),
                (bottom.clone(), ChoiceIndex(i + 1))
            );
            assert_eq!(
                &colored_inverse(&bottom, 3, ChoiceIndex(i + 1)).unwrap(),
                src
            );
        }
        assert!(colored_inverse(&bottom, 3, ChoiceIndex(10)).is_err());
    }

    #[test]
    fn long_alternating_path_stays_proper() {
        // 1 -2- ... with colors 1, 2, 1: detaching 2 must swap the whole path
        let f = EdgeColoredForest::new(
            RootedForest::from_parents(vec![0, 1, 2, 3]).unwrap(),
            2,
            vec![0, 1, 2, 1],
        )
        .unwrap();
        let (g, c) = colored_forward(&f, 2).unwrap();
        assert!(g.is_proper() && g.is_special());
        assert_eq!(g.base().parents(), &[0, 0, 1, 3]);
        assert_eq!(g.color_vector(), &[0, 0, 1, 2]);
        assert_eq!(colored_inverse(&g, 2, c).unwrap(), f);
    }

    #[test]
    fn rejects_non_special_input() {
        let f = EdgeColoredForest::new(
            RootedForest::from_parents(vec![0, 1, 1]).unwrap(),
            2,
            vec![0, 1, 2],
        )
        .unwrap();
        assert!(matches!(
            colored_forward(&f, 2),
            Err(Error::FamilyViolation(_))
        ));
    }
}
