//! Rooted forests with a proper edge coloring.

use std::fmt;

use serde::Serialize;

use crate::error::{parse_err, Error, Result};
use crate::forest::{parse_numbers, RootedForest, Vertex};

/// A rooted forest whose edges carry colors `1..=colors`. The color of the
/// edge `(parent(v), v)` is stored under the child `v`; roots store 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EdgeColoredForest {
    base: RootedForest,
    colors: usize,
    color: Vec<usize>,
}

impl EdgeColoredForest {
    /// Validates the color range and properness.
    pub fn new(base: RootedForest, colors: usize, color: Vec<usize>) -> Result<Self> {
        let f = Self {
            base,
            colors,
            color,
        };
        f.validate()?;
        Ok(f)
    }

    pub(crate) fn new_unchecked(base: RootedForest, colors: usize, color: Vec<usize>) -> Self {
        Self {
            base,
            colors,
            color,
        }
    }

    fn validate(&self) -> Result<()> {
        let n = self.base.n();
        if self.color.len() != n {
            return Err(Error::InvalidForest(format!(
                "expected {n} color entries, found {}",
                self.color.len()
            )));
        }
        if self.colors == 0 {
            return Err(Error::InvalidForest("color count must be positive".into()));
        }
        for v in 1..=n {
            let c = self.color[v - 1];
            let root = self.base.parents()[v - 1] == 0;
            if root && c != 0 {
                return Err(Error::InvalidForest(format!("root {v} carries color {c}")));
            }
            if !root && !(1..=self.colors).contains(&c) {
                return Err(Error::InvalidForest(format!(
                    "edge into {v} has color {c} outside 1..={}",
                    self.colors
                )));
            }
        }
        if !self.is_proper() {
            return Err(Error::InvalidForest("edge coloring is not proper".into()));
        }
        Ok(())
    }

    pub fn base(&self) -> &RootedForest {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn color_vector(&self) -> &[usize] {
        &self.color
    }

    /// Color of the edge into `v`, 0 for a root.
    pub fn color(&self, v: Vertex) -> usize {
        self.color[v - 1]
    }

    /// Colors of all edges incident to `x`: the edge into `x` (if any) and
    /// the edges to its children.
    pub fn incident_colors(&self, x: Vertex) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .base
            .parents()
            .iter()
            .zip(&self.color)
            .filter(|(&p, _)| p == x)
            .map(|(_, &c)| c)
            .collect();
        if self.color[x - 1] != 0 {
            out.push(self.color[x - 1]);
        }
        out
    }

    /// No two edges sharing a vertex have the same color.
    pub fn is_proper(&self) -> bool {
        let n = self.n();
        let mut seen = vec![0u64; n + 1];
        // a color set per vertex, as a bit mask; falls back for wide palettes
        if self.colors < 64 {
            for v in 1..=n {
                let p = self.base.parents()[v - 1];
                if p == 0 {
                    continue;
                }
                let bit = 1u64 << self.color[v - 1];
                if seen[v] & bit != 0 || seen[p] & bit != 0 {
                    return false;
                }
                seen[v] |= bit;
                seen[p] |= bit;
            }
            true
        } else {
            (1..=n).all(|x| {
                let mut c = self.incident_colors(x);
                c.sort_unstable();
                c.windows(2).all(|w| w[0] != w[1])
            })
        }
    }

    /// Every edge out of a root avoids the last color.
    pub fn is_special(&self) -> bool {
        self.base
            .parents()
            .iter()
            .zip(&self.color)
            .all(|(&p, &c)| p == 0 || self.base.parents()[p - 1] != 0 || c < self.colors)
    }

    pub fn detach_subtree(&self, x: Vertex) -> Result<Self> {
        let base = self.base.detach_subtree(x)?;
        let mut color = self.color.clone();
        color[x - 1] = 0;
        Ok(Self::new_unchecked(base, self.colors, color))
    }

    /// Hangs root `x` under `v` with edge color `c`. Properness is not
    /// checked here.
    pub(crate) fn attach_subtree(&self, x: Vertex, v: Vertex, c: usize) -> Result<Self> {
        let base = self.base.attach_subtree(x, v)?;
        let mut color = self.color.clone();
        color[x - 1] = c;
        Ok(Self::new_unchecked(base, self.colors, color))
    }

    pub(crate) fn recolor(&mut self, v: Vertex, c: usize) {
        self.color[v - 1] = c;
    }

    pub fn swap_labels(&self, a: Vertex, b: Vertex) -> Result<Self> {
        let base = self.base.swap_labels(a, b)?;
        let mut color = self.color.clone();
        color.swap(a - 1, b - 1);
        Ok(Self::new_unchecked(base, self.colors, color))
    }

    /// Two lines: the parent-array line, then `c_1 ... c_n`.
    pub fn to_text(&self) -> String {
        let cs: Vec<String> = self.color.iter().map(ToString::to_string).collect();
        format!("{}\n{}", self.base.to_line(), cs.join(" "))
    }

    /// Parses the two-line form. The palette size is not part of the text.
    pub fn parse_text(text: &str, colors: usize) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let first = lines
            .next()
            .ok_or_else(|| parse_err(0, "missing parent-array line"))?;
        let base = RootedForest::parse_line(first)?;
        let second = lines
            .next()
            .ok_or_else(|| parse_err(first.len(), "missing color line"))?;
        let offset = text.find(second).unwrap_or(0);
        let color: Vec<usize> = parse_numbers(second)
            .map_err(|e| shift(e, offset))?
            .into_iter()
            .map(|x| x.1)
            .collect();
        if lines.next().is_some() {
            return Err(parse_err(text.len(), "unexpected third line"));
        }
        Self::new(base, colors, color).map_err(|e| parse_err(offset, e.to_string()))
    }
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + by, msg },
        other => other,
    }
}

impl fmt::Display for EdgeColoredForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cf(p: &[usize], c: &[usize], k: usize) -> Result<EdgeColoredForest> {
        EdgeColoredForest::new(
            RootedForest::from_parents(p.to_vec()).unwrap(),
            k,
            c.to_vec(),
        )
    }

    #[test]
    fn properness_and_special_predicate() {
        let f = cf(&[0, 0, 0, 1, 3, 1], &[0, 0, 0, 1, 1, 2], 3).unwrap();
        assert!(f.is_special());
        let mut ic = f.incident_colors(1);
        ic.sort_unstable();
        assert_eq!(ic, vec![1, 2]);
        assert!(cf(&[0, 1, 1], &[0, 1, 1], 2).is_err());
        assert!(cf(&[0, 1, 2], &[0, 1, 1], 2).is_err());
        let not_special = cf(&[0, 1, 2], &[0, 2, 1], 2).unwrap();
        assert!(!not_special.is_special());
        assert!(cf(&[0, 1], &[0, 3], 2).is_err());
        assert!(cf(&[0, 1], &[1, 1], 2).is_err());
    }

    #[test]
    fn text_round_trip() {
        let f = cf(&[0, 0, 0, 1, 3, 1], &[0, 0, 0, 1, 1, 2], 3).unwrap();
        let text = f.to_text();
        assert_eq!(text, "6 3 0 0 0 1 3 1\n0 0 0 1 1 2");
        assert_eq!(EdgeColoredForest::parse_text(&text, 3).unwrap(), f);
        assert!(matches!(
            EdgeColoredForest::parse_text("2 1 0 1\n0 x", 2),
            Err(Error::Parse { pos: 10, .. })
        ));
    }

    #[test]
    fn swap_moves_colors_with_vertices() {
        let f = cf(&[0, 1, 2], &[0, 1, 2], 2).unwrap();
        let g = f.swap_labels(1, 3).unwrap();
        assert_eq!(g.base().parents(), &[2, 3, 0]);
        assert_eq!(g.color_vector(), &[2, 1, 0]);
        assert!(g.is_proper());
    }
}
