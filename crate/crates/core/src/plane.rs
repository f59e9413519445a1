//! Plane forests: rooted forests whose children are linearly ordered.
//!
//! Vertices carry an optional label. In a fully labeled forest every vertex
//! has a distinct label in `1..=n`; in the non-leaf labeled family exactly
//! the internal vertices are labeled `1..=L` and leaves are anonymous.

use std::fmt;

use serde::Serialize;

use crate::error::{parse_err, Error, Result};
use crate::forest::{RootedForest, Vertex};

/// A vertex of a plane tree together with its ordered subtrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PlaneNode {
    pub label: Option<Vertex>,
    pub children: Vec<PlaneNode>,
}

impl PlaneNode {
    pub fn leaf(label: Option<Vertex>) -> Self {
        Self {
            label,
            children: Vec::new(),
        }
    }

    pub fn new(label: Option<Vertex>, children: Vec<PlaneNode>) -> Self {
        Self { label, children }
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(PlaneNode::size).sum::<usize>()
    }

    fn visit<'a>(&'a self, f: &mut impl FnMut(&'a PlaneNode)) {
        f(self);
        for c in &self.children {
            c.visit(f);
        }
    }

    fn erase(&self) -> Self {
        Self {
            label: None,
            children: self.children.iter().map(PlaneNode::erase).collect(),
        }
    }

    fn write_term(&self, out: &mut String) {
        match self.label {
            Some(l) => out.push_str(&l.to_string()),
            None => out.push('*'),
        }
        if !self.children.is_empty() {
            out.push('(');
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                c.write_term(out);
            }
            out.push(')');
        }
    }
}

/// An ordered list of plane trees. When every root is labeled the trees are
/// kept in ascending root-label order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PlaneForest {
    trees: Vec<PlaneNode>,
}

impl PlaneForest {
    pub fn new(mut trees: Vec<PlaneNode>) -> Result<Self> {
        if trees.is_empty() {
            return Err(Error::InvalidForest(
                "a plane forest needs at least one tree".into(),
            ));
        }
        if trees.iter().all(|t| t.label.is_some()) {
            trees.sort_by_key(|t| t.label);
        }
        let forest = Self { trees };
        let mut labels = forest.labels();
        labels.sort_unstable();
        if labels.windows(2).any(|w| w[0] == w[1]) || labels.first() == Some(&0) {
            return Err(Error::InvalidForest(
                "labels must be distinct and positive".into(),
            ));
        }
        Ok(forest)
    }

    pub fn trees(&self) -> &[PlaneNode] {
        &self.trees
    }

    pub fn tree_count(&self) -> usize {
        self.trees.len()
    }

    fn visit<'a>(&'a self, mut f: impl FnMut(&'a PlaneNode)) {
        for t in &self.trees {
            t.visit(&mut f);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.trees.iter().map(PlaneNode::size).sum()
    }

    pub fn leaf_count(&self) -> usize {
        let mut c = 0;
        self.visit(|v| c += usize::from(v.children.is_empty()));
        c
    }

    /// Labels in preorder.
    pub fn labels(&self) -> Vec<Vertex> {
        let mut out = Vec::new();
        self.visit(|v| out.extend(v.label));
        out
    }

    pub fn root_labels(&self) -> Vec<Option<Vertex>> {
        self.trees.iter().map(|t| t.label).collect()
    }

    fn labels_are_prefix(&self, count: usize) -> bool {
        let mut l = self.labels();
        l.sort_unstable();
        l.len() == count && l.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// Every vertex labeled, labels exactly `1..=n`.
    pub fn is_fully_labeled(&self) -> bool {
        self.labels_are_prefix(self.vertex_count())
    }

    /// Vertices are unlabeled iff they are leaves, and the internal labels
    /// are exactly `1..=L`.
    pub fn is_leaf_unlabeled(&self) -> bool {
        let mut ok = true;
        self.visit(|v| ok &= v.label.is_some() != v.children.is_empty());
        ok && self.labels_are_prefix(self.vertex_count() - self.leaf_count())
    }

    /// True iff the roots are labeled exactly `1..=k` (in tree order).
    pub fn has_first_roots(&self, k: usize) -> bool {
        self.trees.len() == k
            && self
                .trees
                .iter()
                .enumerate()
                .all(|(i, t)| t.label == Some(i + 1))
    }

    /// True iff every internal vertex has exactly `arity` children.
    pub fn is_k_ary(&self, arity: usize) -> bool {
        let mut ok = true;
        self.visit(|v| ok &= v.children.is_empty() || v.children.len() == arity);
        ok
    }

    /// The same forest with all labels removed.
    pub fn shape(&self) -> Self {
        Self {
            trees: self.trees.iter().map(PlaneNode::erase).collect(),
        }
    }

    /// Number of children of the vertex labeled `x`.
    pub fn degree(&self, x: Vertex) -> Option<usize> {
        let mut d = None;
        self.visit(|v| {
            if v.label == Some(x) {
                d = Some(v.children.len());
            }
        });
        d
    }

    /// Child counts in preorder, one per vertex.
    pub fn degrees_preorder(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.visit(|v| out.push(v.children.len()));
        out
    }

    /// Plane forest whose children appear in ascending label order.
    pub fn from_rooted(forest: &RootedForest) -> Self {
        fn build(v: Vertex, kids: &[Vec<Vertex>]) -> PlaneNode {
            PlaneNode::new(Some(v), kids[v].iter().map(|&c| build(c, kids)).collect())
        }
        let mut kids = vec![Vec::new(); forest.n() + 1];
        for (i, &p) in forest.parents().iter().enumerate() {
            kids[p].push(i + 1);
        }
        Self {
            trees: forest
                .roots()
                .into_iter()
                .map(|r| build(r, &kids))
                .collect(),
        }
    }

    /// Underlying rooted forest of a fully labeled plane forest (child order
    /// is forgotten).
    pub fn to_rooted(&self) -> Result<RootedForest> {
        if !self.is_fully_labeled() {
            return Err(Error::InvalidForest(
                "plane forest is not fully labeled".into(),
            ));
        }
        fn walk(node: &PlaneNode, parent: Vertex, out: &mut [Vertex]) {
            let v = node.label.expect("fully labeled");
            out[v - 1] = parent;
            for c in &node.children {
                walk(c, v, out);
            }
        }
        let mut parent = vec![0; self.vertex_count()];
        for t in &self.trees {
            walk(t, 0, &mut parent);
        }
        Ok(RootedForest::from_parents_unchecked(parent))
    }

    /// Relabels by the transposition `(a b)`; child order is kept.
    pub fn swap_labels(&self, a: Vertex, b: Vertex) -> Self {
        let mut arena = Arena::from_forest(self);
        arena.swap_labels(a, b);
        arena.to_forest()
    }

    /// Canonical nested-term text, e.g. `1(5,3(4));2`.
    pub fn to_term(&self) -> String {
        let mut out = String::new();
        for (i, t) in self.trees.iter().enumerate() {
            if i > 0 {
                out.push(';');
            }
            t.write_term(&mut out);
        }
        out
    }

    pub fn parse_term(text: &str) -> Result<Self> {
        let mut p = TermParser {
            src: text.as_bytes(),
            pos: 0,
        };
        let mut trees = vec![p.node()?];
        while p.eat(b';') {
            trees.push(p.node()?);
        }
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(parse_err(p.pos, "unexpected trailing input"));
        }
        Self::new(trees).map_err(|e| parse_err(0, e.to_string()))
    }
}

impl fmt::Display for PlaneForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_term())
    }
}

struct TermParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl TermParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn node(&mut self) -> Result<PlaneNode> {
        self.skip_ws();
        let start = self.pos;
        let label = if self.eat(b'*') {
            None
        } else {
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(parse_err(start, "expected a label or `*`"));
            }
            let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
            let v: usize = digits
                .parse()
                .map_err(|_| parse_err(start, format!("label `{digits}` is too large")))?;
            if v == 0 {
                return Err(parse_err(start, "labels start at 1"));
            }
            Some(v)
        };
        let mut children = Vec::new();
        if self.eat(b'(') {
            children.push(self.node()?);
            while self.eat(b',') {
                children.push(self.node()?);
            }
            if !self.eat(b')') {
                return Err(parse_err(self.pos, "expected `,` or `)`"));
            }
        }
        Ok(PlaneNode { label, children })
    }
}

/// Mutable index-based form of a plane forest, used by the bijections.
/// Node ids are stable across edits; removed nodes simply become unreachable.
#[derive(Debug, Clone)]
pub(crate) struct Arena {
    pub label: Vec<Option<Vertex>>,
    pub children: Vec<Vec<usize>>,
    pub parent: Vec<Option<usize>>,
    pub roots: Vec<usize>,
}

impl Arena {
    pub fn from_forest(forest: &PlaneForest) -> Self {
        fn add(a: &mut Arena, node: &PlaneNode, parent: Option<usize>) -> usize {
            let id = a.label.len();
            a.label.push(node.label);
            a.children.push(Vec::new());
            a.parent.push(parent);
            for c in &node.children {
                let cid = add(a, c, Some(id));
                a.children[id].push(cid);
            }
            id
        }
        let mut a = Arena {
            label: Vec::new(),
            children: Vec::new(),
            parent: Vec::new(),
            roots: Vec::new(),
        };
        for t in forest.trees() {
            let id = add(&mut a, t, None);
            a.roots.push(id);
        }
        a
    }

    fn build(&self, id: usize) -> PlaneNode {
        PlaneNode::new(
            self.label[id],
            self.children[id].iter().map(|&c| self.build(c)).collect(),
        )
    }

    pub fn to_forest(&self) -> PlaneForest {
        let mut trees: Vec<PlaneNode> = self.roots.iter().map(|&r| self.build(r)).collect();
        if trees.iter().all(|t| t.label.is_some()) {
            trees.sort_by_key(|t| t.label);
        }
        PlaneForest { trees }
    }

    /// Roots in ascending label order.
    pub fn ordered_roots(&self) -> Vec<usize> {
        let mut r = self.roots.clone();
        r.sort_by_key(|&id| self.label[id]);
        r
    }

    pub fn find(&self, label: Vertex) -> Option<usize> {
        let mut found = None;
        for &r in &self.roots {
            self.walk(r, &mut |id| {
                if self.label[id] == Some(label) {
                    found = Some(id);
                }
            });
        }
        found
    }

    pub fn walk(&self, id: usize, f: &mut impl FnMut(usize)) {
        f(id);
        for &c in &self.children[id] {
            self.walk(c, f);
        }
    }

    /// Live node ids in global preorder (roots by ascending label).
    pub fn preorder(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for r in self.ordered_roots() {
            self.walk(r, &mut |id| out.push(id));
        }
        out
    }

    pub fn is_ancestor(&self, anc: usize, mut id: usize) -> bool {
        loop {
            if id == anc {
                return true;
            }
            match self.parent[id] {
                Some(p) => id = p,
                None => return false,
            }
        }
    }

    pub fn tree_root(&self, mut id: usize) -> usize {
        while let Some(p) = self.parent[id] {
            id = p;
        }
        id
    }

    /// Cuts `id` from its parent; returns (parent, position).
    pub fn detach(&mut self, id: usize) -> (usize, usize) {
        let p = self.parent[id].expect("detach of a root");
        let pos = self.children[p]
            .iter()
            .position(|&c| c == id)
            .expect("child link");
        self.children[p].remove(pos);
        self.parent[id] = None;
        self.roots.push(id);
        (p, pos)
    }

    /// Inserts root `id` as the `pos`-th child of `parent`.
    pub fn attach(&mut self, id: usize, parent: usize, pos: usize) {
        let r = self
            .roots
            .iter()
            .position(|&x| x == id)
            .expect("attach of a non-root");
        self.roots.remove(r);
        self.children[parent].insert(pos, id);
        self.parent[id] = Some(parent);
    }

    /// Cuts `id` from its parent and leaves a fresh unlabeled leaf in its
    /// slot. Returns the new leaf's id.
    pub fn detach_leaving_leaf(&mut self, id: usize) -> usize {
        let (p, pos) = self.detach(id);
        let leaf = self.label.len();
        self.label.push(None);
        self.children.push(Vec::new());
        self.parent.push(Some(p));
        self.children[p].insert(pos, leaf);
        leaf
    }

    /// Replaces the leaf `leaf` by the tree rooted at `root`.
    pub fn replace_leaf(&mut self, leaf: usize, root: usize) {
        let (p, pos) = self.detach(leaf);
        self.roots.retain(|&x| x != leaf);
        self.attach(root, p, pos);
    }

    pub fn swap_labels(&mut self, a: Vertex, b: Vertex) {
        for l in self.label.iter_mut().flatten() {
            if *l == a {
                *l = b;
            } else if *l == b {
                *l = a;
            }
        }
    }
}
