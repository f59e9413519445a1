//! Labeled rooted forests stored as parent arrays.
//!
//! Vertices are labeled `1..=n`; a parent entry of `0` marks a root. Every
//! operation returns a new forest and leaves its input untouched.

use std::fmt;

use serde::Serialize;

use crate::error::{parse_err, Error, Result};

/// A vertex label in `1..=n`. `0` is reserved for "no parent".
pub type Vertex = usize;

/// A forest of rooted trees on the labels `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RootedForest {
    parent: Vec<Vertex>,
}

/// Returns true when iterating `parent` from every vertex reaches 0.
pub(crate) fn is_acyclic(parent: &[Vertex]) -> bool {
    let n = parent.len();
    // 0 = unvisited, 1 = on the current walk, 2 = known to reach a root
    let mut state = vec![0u8; n + 1];
    state[0] = 2;
    let mut walk = Vec::with_capacity(n);
    for start in 1..=n {
        let mut v = start;
        while state[v] == 0 {
            state[v] = 1;
            walk.push(v);
            v = parent[v - 1];
        }
        if state[v] == 1 {
            return false;
        }
        for w in walk.drain(..) {
            state[w] = 2;
        }
    }
    true
}

impl RootedForest {
    /// Builds a forest from `parent[v - 1]` for each vertex `v`.
    pub fn from_parents(parent: Vec<Vertex>) -> Result<Self> {
        let n = parent.len();
        if n == 0 {
            return Err(Error::InvalidForest(
                "a forest needs at least one vertex".into(),
            ));
        }
        for (i, &p) in parent.iter().enumerate() {
            if p > n {
                return Err(Error::InvalidForest(format!(
                    "parent {p} of vertex {} is outside 0..={n}",
                    i + 1
                )));
            }
        }
        if !is_acyclic(&parent) {
            return Err(Error::InvalidForest("parent relation has a cycle".into()));
        }
        Ok(Self { parent })
    }

    /// The forest with `n` isolated vertices.
    pub fn edgeless(n: usize) -> Result<Self> {
        Self::from_parents(vec![0; n])
    }

    pub(crate) fn from_parents_unchecked(parent: Vec<Vertex>) -> Self {
        debug_assert!(is_acyclic(&parent));
        Self { parent }
    }

    /// Builds a forest from an undirected edge list, rooting every component
    /// at its smallest vertex.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidForest(
                "a forest needs at least one vertex".into(),
            ));
        }
        let mut adj = vec![Vec::new(); n + 1];
        for &(a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut parent = vec![0; n];
        let mut seen = vec![false; n + 1];
        let mut stack = Vec::new();
        for root in 1..=n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            stack.push(root);
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        parent[w - 1] = v;
                        stack.push(w);
                    } else if parent[v - 1] != w {
                        return Err(Error::InvalidForest("edge list contains a cycle".into()));
                    }
                }
            }
        }
        Ok(Self { parent })
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn parents(&self) -> &[Vertex] {
        &self.parent
    }

    fn check(&self, v: Vertex) -> Result<()> {
        if v == 0 || v > self.n() {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }

    /// Parent of `v`, or 0 when `v` is a root.
    pub fn parent(&self, v: Vertex) -> Result<Vertex> {
        self.check(v)?;
        Ok(self.parent[v - 1])
    }

    pub fn is_root(&self, v: Vertex) -> Result<bool> {
        Ok(self.parent(v)? == 0)
    }

    /// Roots in ascending order.
    pub fn roots(&self) -> Vec<Vertex> {
        (1..=self.n())
            .filter(|&v| self.parent[v - 1] == 0)
            .collect()
    }

    pub fn root_count(&self) -> usize {
        self.parent.iter().filter(|&&p| p == 0).count()
    }

    /// True iff the roots are exactly `1..=k`.
    pub fn has_first_roots(&self, k: usize) -> bool {
        self.parent
            .iter()
            .enumerate()
            .all(|(i, &p)| (p == 0) == (i < k))
    }

    /// True iff the roots are exactly the given set.
    pub fn has_roots(&self, roots: &[Vertex]) -> bool {
        self.roots() == {
            let mut r = roots.to_vec();
            r.sort_unstable();
            r
        }
    }

    /// Root of the tree containing `v`.
    pub fn root_of(&self, v: Vertex) -> Result<Vertex> {
        self.check(v)?;
        let mut v = v;
        while self.parent[v - 1] != 0 {
            v = self.parent[v - 1];
        }
        Ok(v)
    }

    /// Children of `x` in ascending label order.
    pub fn children(&self, x: Vertex) -> Result<Vec<Vertex>> {
        self.check(x)?;
        Ok((1..=self.n())
            .filter(|&v| self.parent[v - 1] == x)
            .collect())
    }

    /// Number of children of `x`.
    pub fn degree(&self, x: Vertex) -> Result<usize> {
        self.check(x)?;
        Ok(self.parent.iter().filter(|&&p| p == x).count())
    }

    /// Child counts of all vertices, indexed by `v - 1`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n()];
        for &p in &self.parent {
            if p != 0 {
                d[p - 1] += 1;
            }
        }
        d
    }

    /// True iff `y` lies in the subtree rooted at `x`. Reflexive.
    pub fn is_descendant(&self, y: Vertex, x: Vertex) -> Result<bool> {
        self.check(x)?;
        self.check(y)?;
        let mut v = y;
        loop {
            if v == x {
                return Ok(true);
            }
            if v == 0 {
                return Ok(false);
            }
            v = self.parent[v - 1];
        }
    }

    /// Vertices of the subtree rooted at `x`, ascending.
    pub fn subtree_vertices(&self, x: Vertex) -> Result<Vec<Vertex>> {
        self.check(x)?;
        let mut inside = vec![false; self.n() + 1];
        inside[x] = true;
        // Labels are not topologically ordered, so resolve each vertex by
        // walking up until the answer is known.
        let mut known = vec![false; self.n() + 1];
        known[x] = true;
        known[0] = true;
        for v in 1..=self.n() {
            let mut path = Vec::new();
            let mut w = v;
            while !known[w] {
                path.push(w);
                w = self.parent[w - 1];
            }
            let ans = inside[w];
            for u in path {
                known[u] = true;
                inside[u] = ans;
            }
        }
        Ok((1..=self.n()).filter(|&v| inside[v]).collect())
    }

    /// Cuts the edge above `x`, making `x` a new root.
    pub fn detach_subtree(&self, x: Vertex) -> Result<Self> {
        if self.parent(x)? == 0 {
            return Err(Error::AlreadyRoot(x));
        }
        let mut parent = self.parent.clone();
        parent[x - 1] = 0;
        Ok(Self { parent })
    }

    /// Hangs the tree rooted at `x` under `v`.
    pub fn attach_subtree(&self, x: Vertex, v: Vertex) -> Result<Self> {
        self.check(v)?;
        if self.parent(x)? != 0 {
            return Err(Error::NotARoot(x));
        }
        if self.is_descendant(v, x)? {
            return Err(Error::WouldCycle { root: x, target: v });
        }
        let mut parent = self.parent.clone();
        parent[x - 1] = v;
        Ok(Self { parent })
    }

    /// Relabels by the transposition `(a b)`.
    pub fn swap_labels(&self, a: Vertex, b: Vertex) -> Result<Self> {
        self.check(a)?;
        self.check(b)?;
        let sigma = |v: Vertex| {
            if v == a {
                b
            } else if v == b {
                a
            } else {
                v
            }
        };
        let mut parent = vec![0; self.n()];
        for v in 1..=self.n() {
            parent[sigma(v) - 1] = sigma(self.parent[v - 1]);
        }
        Ok(Self { parent })
    }

    /// Re-roots the tree containing `v` at `v` by reversing the path from
    /// its old root. Vertex and edge sets are unchanged.
    pub fn reroot(&self, v: Vertex) -> Result<Self> {
        self.check(v)?;
        let mut parent = self.parent.clone();
        let mut prev = 0;
        let mut cur = v;
        while cur != 0 {
            let next = self.parent[cur - 1];
            parent[cur - 1] = prev;
            prev = cur;
            cur = next;
        }
        Ok(Self { parent })
    }

    /// Renders the parent-array line `n k p_1 ... p_n`.
    pub fn to_line(&self) -> String {
        let mut s = format!("{} {}", self.n(), self.root_count());
        for p in &self.parent {
            s.push(' ');
            s.push_str(&p.to_string());
        }
        s
    }

    /// Parses a parent-array line `n k p_1 ... p_n`.
    pub fn parse_line(line: &str) -> Result<Self> {
        let nums = parse_numbers(line)?;
        if nums.len() < 2 {
            return Err(parse_err(line.len(), "expected `n k p_1 ... p_n`"));
        }
        let (n, k) = (nums[0].1, nums[1].1);
        if n == 0 {
            return Err(parse_err(nums[0].0, "n must be positive"));
        }
        if nums.len() != n + 2 {
            return Err(parse_err(
                nums.last().map_or(0, |x| x.0),
                format!("expected {n} parent entries, found {}", nums.len() - 2),
            ));
        }
        let parent: Vec<Vertex> = nums[2..].iter().map(|x| x.1).collect();
        if let Some((pos, p)) = nums[2..].iter().find(|x| x.1 > n) {
            return Err(parse_err(*pos, format!("parent {p} exceeds n = {n}")));
        }
        let forest = Self::from_parents(parent).map_err(|e| parse_err(0, e.to_string()))?;
        if forest.root_count() != k {
            return Err(parse_err(
                nums[1].0,
                format!(
                    "root count {k} does not match {} zero entries",
                    forest.root_count()
                ),
            ));
        }
        Ok(forest)
    }
}

impl fmt::Display for RootedForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_line())
    }
}

/// Splits on whitespace, returning (byte offset, value) pairs.
pub(crate) fn parse_numbers(line: &str) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for tok in line.split_ascii_whitespace() {
        let pos = line[offset..].find(tok).map_or(offset, |i| i + offset);
        offset = pos + tok.len();
        let v = tok
            .parse::<usize>()
            .map_err(|_| parse_err(pos, format!("`{tok}` is not a nonnegative integer")))?;
        out.push((pos, v));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: &[usize]) -> RootedForest {
        RootedForest::from_parents(p.to_vec()).unwrap()
    }

    #[test]
    fn descendant_queries() {
        let bottom = f(&[0, 0, 0, 3, 1]);
        assert!(bottom.is_descendant(4, 3).unwrap());
        for x in 1..=5 {
            assert!(bottom.is_descendant(x, x).unwrap());
        }
        let path = f(&[0, 1, 2]);
        assert!(path.is_descendant(3, 1).unwrap());
        assert!(!path.is_descendant(1, 3).unwrap());
        assert!(matches!(
            path.is_descendant(4, 1),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        ));
    }

    #[test]
    fn detach_and_attach() {
        assert_eq!(
            f(&[0, 0, 1, 3, 1]).detach_subtree(3).unwrap(),
            f(&[0, 0, 0, 3, 1])
        );
        assert_eq!(f(&[0, 1, 2]).detach_subtree(3).unwrap(), f(&[0, 1, 0]));
        assert_eq!(f(&[0, 1, 2]).detach_subtree(1), Err(Error::AlreadyRoot(1)));

        let bottom = f(&[0, 0, 0, 3, 1]);
        assert_eq!(bottom.attach_subtree(3, 1).unwrap(), f(&[0, 0, 1, 3, 1]));
        assert_eq!(bottom.attach_subtree(3, 5).unwrap(), f(&[0, 0, 5, 3, 1]));
        assert_eq!(
            bottom.attach_subtree(3, 4),
            Err(Error::WouldCycle { root: 3, target: 4 })
        );
        assert_eq!(bottom.attach_subtree(4, 1), Err(Error::NotARoot(4)));
    }

    #[test]
    fn swaps() {
        assert_eq!(f(&[0, 1, 2]).swap_labels(1, 3).unwrap(), f(&[2, 3, 0]));
        let x = f(&[0, 0, 1, 3, 1]);
        assert_eq!(x.swap_labels(2, 2).unwrap(), x);
        let step = f(&[0, 0, 0, 3, 1]).attach_subtree(1, 4).unwrap();
        assert_eq!(step, f(&[4, 0, 0, 3, 1]));
        assert_eq!(step.swap_labels(1, 3).unwrap(), f(&[0, 0, 4, 1, 3]));
    }

    #[test]
    fn degrees_and_subtrees() {
        let top = f(&[0, 0, 1, 3, 1]);
        assert_eq!(top.degree(1).unwrap(), 2);
        assert_eq!(top.children(1).unwrap(), vec![3, 5]);
        let e = RootedForest::edgeless(4).unwrap();
        assert!((1..=4).all(|v| e.degree(v).unwrap() == 0));
        assert_eq!(f(&[0, 0, 0, 3, 1]).subtree_vertices(3).unwrap(), vec![3, 4]);
        assert_eq!(
            f(&[3, 0, 5, 0, 2]).subtree_vertices(2).unwrap(),
            vec![1, 2, 3, 5]
        );
    }

    #[test]
    fn reroot_reverses_the_path() {
        let t = f(&[0, 1, 2, 2]);
        let r = t.reroot(3).unwrap();
        assert_eq!(r, f(&[2, 3, 0, 2]));
        assert_eq!(r.reroot(1).unwrap(), t);
    }

    #[test]
    fn rejects_cycles_and_bad_entries() {
        assert!(RootedForest::from_parents(vec![2, 1]).is_err());
        assert!(RootedForest::from_parents(vec![1]).is_err());
        assert!(RootedForest::from_parents(vec![0, 3]).is_err());
        assert!(RootedForest::from_parents(vec![]).is_err());
    }

    #[test]
    fn text_format() {
        let x = RootedForest::parse_line("5 3 0 0 0 3 1").unwrap();
        assert_eq!(x, f(&[0, 0, 0, 3, 1]));
        assert_eq!(x.to_line(), "5 3 0 0 0 3 1");
        assert!(matches!(
            RootedForest::parse_line("5 2 0 0 0 3 1"),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(
            RootedForest::parse_line("3 1 0 x 1"),
            Err(Error::Parse { pos: 6, .. })
        ));
        assert!(RootedForest::parse_line("3 1 0 1").is_err());
    }

    #[test]
    fn edge_lists_root_at_smallest_vertex() {
        let t = RootedForest::from_edges(4, &[(3, 4), (4, 2), (1, 3)]).unwrap();
        assert_eq!(t, f(&[0, 4, 1, 3]));
        let two = RootedForest::from_edges(4, &[(4, 2)]).unwrap();
        assert_eq!(two.roots(), vec![1, 2, 3]);
        assert!(RootedForest::from_edges(3, &[(1, 2), (2, 3), (3, 1)]).is_err());
    }
}
