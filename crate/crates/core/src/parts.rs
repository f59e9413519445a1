//! Vertex partitions for complete multipartite graphs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forest::{RootedForest, Vertex};

/// A partition of `1..=n` into consecutive label blocks
/// `V_1 = {1..n_1}`, `V_2 = {n_1+1..n_1+n_2}`, and so on.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PartAssignment {
    sizes: Vec<usize>,
    part: Vec<usize>,
}

impl PartAssignment {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::ParameterRange(format!(
                "part sizes must be nonempty and positive, got {sizes:?}"
            )));
        }
        let part = sizes
            .iter()
            .enumerate()
            .flat_map(|(i, &s)| std::iter::repeat_n(i + 1, s))
            .collect();
        Ok(Self { sizes, part })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn n(&self) -> usize {
        self.part.len()
    }

    pub fn part_count(&self) -> usize {
        self.sizes.len()
    }

    /// Part index (1-based) of `v`.
    pub fn part_of(&self, v: Vertex) -> usize {
        self.part[v - 1]
    }

    /// Smallest label of part `i` (1-based).
    pub fn first_of(&self, i: usize) -> Vertex {
        self.sizes[..i - 1].iter().sum::<usize>() + 1
    }

    pub fn same_part(&self, a: Vertex, b: Vertex) -> bool {
        self.part_of(a) == self.part_of(b)
    }

    /// True iff no edge of `forest` joins two vertices of the same part.
    pub fn admits(&self, forest: &RootedForest) -> bool {
        forest.n() == self.n()
            && forest
                .parents()
                .iter()
                .enumerate()
                .all(|(i, &p)| p == 0 || !self.same_part(i + 1, p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contiguous_blocks() {
        let p = PartAssignment::new(vec![2, 3, 1]).unwrap();
        assert_eq!(p.n(), 6);
        let parts: Vec<_> = (1..=6).map(|v| p.part_of(v)).collect();
        assert_eq!(parts, vec![1, 1, 2, 2, 2, 3]);
        assert_eq!(p.first_of(2), 3);
        assert_eq!(p.first_of(3), 6);
        assert!(PartAssignment::new(vec![2, 0]).is_err());
    }

    #[test]
    fn admissibility() {
        let p = PartAssignment::new(vec![2, 2]).unwrap();
        let ok = RootedForest::from_parents(vec![0, 3, 1, 0]).unwrap();
        let bad = RootedForest::from_parents(vec![0, 1, 1, 0]).unwrap();
        assert!(p.admits(&ok));
        assert!(!p.admits(&bad));
    }
}
