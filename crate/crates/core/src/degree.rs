//! Degree sequences and degree partitions.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Prescribed child counts `(d_1, ..., d_n)`, one per vertex label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(d: Vec<usize>) -> Self {
        Self(d)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// True iff the sequence can describe a single tree on `n` vertices.
    pub fn is_tree_sequence(&self) -> bool {
        !self.0.is_empty() && self.sum() == self.n() - 1
    }

    /// Every sequence of `n` nonnegative integers summing to `n - 1`, in
    /// lexicographic order.
    pub fn all_tree_sequences(n: usize) -> Vec<Self> {
        fn go(slots: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<DegreeSequence>) {
            if slots == 1 {
                cur.push(left);
                out.push(DegreeSequence(cur.clone()));
                cur.pop();
                return;
            }
            for d in 0..=left {
                cur.push(d);
                go(slots - 1, left - d, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n >= 1 {
            go(n, n - 1, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Degree multiplicities of a tree on `n` vertices: `counts[i - 1]` vertices
/// have exactly `i` children, and the remaining `n_0` vertices are leaves.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DegreePartition {
    n: usize,
    counts: Vec<usize>,
}

impl DegreePartition {
    pub fn new(n: usize, counts: Vec<usize>) -> Result<Self> {
        let weight: usize = counts.iter().enumerate().map(|(i, &c)| (i + 1) * c).sum();
        let used: usize = counts.iter().sum();
        if n == 0 || weight != n - 1 || used > n {
            return Err(Error::ParameterRange(format!(
                "multiplicities {counts:?} are not a degree partition of a tree on {n} vertices"
            )));
        }
        Ok(Self { n, counts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `(n_1, ..., n_m)`.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Number of leaves.
    pub fn leaves(&self) -> usize {
        self.n - self.counts.iter().sum::<usize>()
    }

    /// All degree partitions for trees on `n` vertices, i.e. the integer
    /// partitions of `n - 1`.
    pub fn all(n: usize) -> Vec<Self> {
        fn go(
            left: usize,
            max: usize,
            counts: &mut Vec<usize>,
            n: usize,
            out: &mut Vec<DegreePartition>,
        ) {
            if left == 0 {
                let mut c = counts.clone();
                while c.last() == Some(&0) {
                    c.pop();
                }
                out.push(DegreePartition { n, counts: c });
                return;
            }
            for part in (1..=max.min(left)).rev() {
                counts[part - 1] += 1;
                go(left - part, part, counts, n, out);
                counts[part - 1] -= 1;
            }
        }
        if n == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        go(n - 1, n - 1, &mut vec![0; n.max(1)], n, &mut out);
        out
    }

    /// Partition realized by a degree list.
    pub fn of_degrees(degrees: &[usize]) -> Self {
        let max = degrees.iter().copied().max().unwrap_or(0);
        let mut counts = vec![0; max];
        for &d in degrees {
            if d > 0 {
                counts[d - 1] += 1;
            }
        }
        Self {
            n: degrees.len(),
            counts,
        }
    }
}
