//! Brute-force generators for every forest family.
//!
//! These are the oracles: deliberately naive (parent assignment plus an
//! acyclicity filter, then child orders and colorings on top), canonically
//! ordered and lazy. The search-space guard counts candidate parent and
//! color assignments, not outputs; it defaults to 10^8 and can be changed
//! with the `ROOTFOREST_BUDGET` environment variable.

mod odometer;

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use num_bigint::BigUint;
use serde::Serialize;

use crate::bijection::{partite_choice_count, PartiteChain};
use crate::colored::EdgeColoredForest;
use crate::degree::DegreeSequence;
use crate::error::{Error, Result};
use crate::forest::{RootedForest, Vertex};
use crate::parts::PartAssignment;
use crate::plane::{PlaneForest, PlaneNode};
use crate::AnyForest;

use odometer::{distributions, Arrangements, ParentArrays};

pub const DEFAULT_BUDGET: u128 = 100_000_000;
pub const BUDGET_ENV: &str = "ROOTFOREST_BUDGET";

/// The candidate budget in effect: `ROOTFOREST_BUDGET` if set and valid.
pub fn default_budget() -> u128 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Family {
    /// Rooted forests on `[n]`.
    Plain { n: usize },
    /// Rooted forests on the parts' vertex set using only cross-part edges.
    Partite { parts: PartAssignment },
    /// Fully labeled plane forests on `[n]`.
    Plane { n: usize },
    /// Plane forests with `internal` labeled internal vertices and
    /// `leaves` unlabeled leaves.
    LeafPlane { internal: usize, leaves: usize },
    /// Non-leaf labeled plane forests in which every internal vertex has
    /// exactly `arity` children.
    Kary { arity: usize, internal: usize },
    /// Properly `colors`-edge colored rooted forests on `[n]`.
    Colored { n: usize, colors: usize },
    /// Colored forests whose root edges avoid the last color.
    SpecialColored { n: usize, colors: usize },
}

impl Family {
    /// Number of labeled vertices.
    pub fn labels(&self) -> usize {
        match self {
            Self::Plain { n } | Self::Plane { n } => *n,
            Self::Colored { n, .. } | Self::SpecialColored { n, .. } => *n,
            Self::Partite { parts } => parts.n(),
            Self::LeafPlane { internal, .. } | Self::Kary { internal, .. } => *internal,
        }
    }

    fn is_plane(&self) -> bool {
        matches!(
            self,
            Self::Plane { .. } | Self::LeafPlane { .. } | Self::Kary { .. }
        )
    }
}

/// Which labeled vertices are roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Roots {
    /// Exactly `1..=k`.
    First(usize),
    /// Exactly the listed vertices.
    Exactly(Vec<Vertex>),
    /// Any `k` vertices.
    Any(usize),
}

impl Roots {
    pub fn count(&self) -> usize {
        match self {
            Self::First(k) | Self::Any(k) => *k,
            Self::Exactly(v) => v.len(),
        }
    }
}

/// The condition "`vertex` lies in the subtree of `ancestor`".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Precedes {
    pub vertex: Vertex,
    pub ancestor: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub family: Family,
    pub roots: Roots,
    pub condition: Option<Precedes>,
    /// Required child count of every labeled vertex.
    pub degrees: Option<DegreeSequence>,
    /// Yield distinct unlabeled shapes instead of labeled forests.
    pub shapes: bool,
}

impl FamilySpec {
    pub fn new(family: Family, roots: Roots) -> Self {
        Self {
            family,
            roots,
            condition: None,
            degrees: None,
            shapes: false,
        }
    }

    /// Adds the family's usual condition: the largest label below 1, or
    /// for multipartite families the first vertex of part 2 below 1 (or 1
    /// below it when 1 is not a root).
    pub fn conditioned(mut self) -> Self {
        let cond = match &self.family {
            Family::Partite { parts } => {
                let second = parts.first_of(2.min(parts.part_count()));
                let one_is_root = match &self.roots {
                    Roots::First(k) => *k >= 1,
                    Roots::Exactly(v) => v.contains(&1),
                    Roots::Any(_) => true,
                };
                if one_is_root {
                    Precedes {
                        vertex: second,
                        ancestor: 1,
                    }
                } else {
                    Precedes {
                        vertex: 1,
                        ancestor: second,
                    }
                }
            }
            f => Precedes {
                vertex: f.labels(),
                ancestor: 1,
            },
        };
        self.condition = Some(cond);
        self
    }

    pub fn precedes(mut self, vertex: Vertex, ancestor: Vertex) -> Self {
        self.condition = Some(Precedes { vertex, ancestor });
        self
    }

    pub fn with_degrees(mut self, d: DegreeSequence) -> Self {
        self.degrees = Some(d);
        self
    }

    pub fn shapes(mut self) -> Self {
        self.shapes = true;
        self
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InconsistentSpec(m));
        let labels = self.family.labels();
        if labels == 0 {
            return bad("a family needs at least one labeled vertex".into());
        }
        match &self.family {
            Family::Colored { colors, .. } | Family::SpecialColored { colors, .. }
                if *colors == 0 =>
            {
                return bad("color count must be positive".into());
            }
            Family::Partite { parts } if parts.part_count() < 2 => {
                return bad("a multipartite family needs at least two parts".into());
            }
            Family::Kary { arity: 0, .. } => return bad("arity must be positive".into()),
            _ => {}
        }
        let k = self.roots.count();
        if k == 0 || k > labels {
            return bad(format!("root count {k} outside 1..={labels}"));
        }
        if let Roots::Exactly(v) = &self.roots {
            let mut sorted = v.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != v.len() || sorted.iter().any(|&x| x == 0 || x > labels) {
                return bad(format!(
                    "roots {v:?} are not distinct labels in 1..={labels}"
                ));
            }
        }
        if let Some(c) = self.condition {
            if c.vertex == 0 || c.vertex > labels || c.ancestor == 0 || c.ancestor > labels {
                return bad(format!(
                    "condition {} below {} outside 1..={labels}",
                    c.vertex, c.ancestor
                ));
            }
        }
        if let Some(d) = &self.degrees {
            if d.n() != labels {
                return bad(format!(
                    "degree sequence {d} has length {} but there are {labels} labels",
                    d.n()
                ));
            }
        }
        if self.shapes && !self.family.is_plane() {
            return bad("unlabeled shapes are only defined for plane families".into());
        }
        Ok(())
    }

    fn root_domains(&self) -> (Vec<Vec<Vertex>>, Option<usize>) {
        let n = self.family.labels();
        let parts = match &self.family {
            Family::Partite { parts } => Some(parts),
            _ => None,
        };
        let non_root = |v: Vertex| -> Vec<Vertex> {
            (1..=n)
                .filter(|&u| u != v && parts.is_none_or(|p| !p.same_part(u, v)))
                .collect()
        };
        let domains = (1..=n)
            .map(|v| {
                let fixed_root = match &self.roots {
                    Roots::First(k) => Some(v <= *k),
                    Roots::Exactly(set) => Some(set.contains(&v)),
                    Roots::Any(_) => None,
                };
                match fixed_root {
                    Some(true) => vec![0],
                    Some(false) => non_root(v),
                    None => std::iter::once(0).chain(non_root(v)).collect(),
                }
            })
            .collect();
        let count = matches!(self.roots, Roots::Any(_)).then(|| self.roots.count());
        (domains, count)
    }
}

pub type ForestStream = Box<dyn Iterator<Item = AnyForest> + Send>;

fn check_budget(candidates: u128, budget: u128) -> Result<()> {
    if candidates > budget {
        Err(Error::BudgetExceeded { candidates, budget })
    } else {
        Ok(())
    }
}

/// Base rooted forests: roots, cross-part edges and the condition. The
/// degree filter is left to the caller because leaf-plane degrees include
/// leaves.
fn base_forests(
    spec: &FamilySpec,
    extra: u128,
    budget: u128,
) -> Result<impl Iterator<Item = RootedForest> + Send> {
    let (domains, count) = spec.root_domains();
    check_budget(
        ParentArrays::candidates(&domains).saturating_mul(extra),
        budget,
    )?;
    let cond = spec.condition;
    Ok(ParentArrays::new(domains, count)
        .map(RootedForest::from_parents_unchecked)
        .filter(move |f| {
            cond.is_none_or(|c| f.is_descendant(c.vertex, c.ancestor).unwrap_or(false))
        }))
}

fn degree_filter(d: Option<DegreeSequence>) -> impl Fn(&RootedForest) -> bool + Send {
    move |f| d.as_ref().is_none_or(|d| f.degrees() == d.as_slice())
}

fn children_lists(f: &RootedForest) -> Vec<Vec<usize>> {
    let mut kids = vec![Vec::new(); f.n() + 1];
    for (i, &p) in f.parents().iter().enumerate() {
        if p != 0 {
            kids[p].push(i + 1);
        }
    }
    kids
}

/// Builds a plane forest from per-vertex child token lists (0 = leaf).
fn plane_from_slots(roots: &[Vertex], slots: &[Vec<usize>]) -> PlaneForest {
    fn node(v: Vertex, slots: &[Vec<usize>]) -> PlaneNode {
        let kids = slots[v - 1]
            .iter()
            .map(|&t| {
                if t == 0 {
                    PlaneNode::leaf(None)
                } else {
                    node(t, slots)
                }
            })
            .collect();
        PlaneNode::new(Some(v), kids)
    }
    PlaneForest::new(roots.iter().map(|&r| node(r, slots)).collect()).expect("distinct labels")
}

/// Every plane arrangement of `base` in which vertex `v` additionally
/// carries `leaves[v - 1]` anonymous leaves.
fn arrangements(base: &RootedForest, leaves: &[usize]) -> impl Iterator<Item = PlaneForest> + Send {
    let kids = children_lists(base);
    let slots: Vec<Vec<usize>> = (1..=base.n())
        .map(|v| {
            let mut s = vec![0; leaves[v - 1]];
            s.extend(&kids[v]);
            s
        })
        .collect();
    let roots = base.roots();
    Arrangements::new(slots).map(move |s| plane_from_slots(&roots, &s))
}

fn plane_stream(
    spec: &FamilySpec,
    budget: u128,
) -> Result<Box<dyn Iterator<Item = PlaneForest> + Send>> {
    let n = spec.family.labels();
    let keep = degree_filter(spec.degrees.clone());
    let base = base_forests(spec, 1, budget)?;
    Ok(match spec.family {
        Family::Plane { .. } => Box::new(
            base.filter(keep)
                .flat_map(move |f| arrangements(&f, &vec![0; n])),
        ),
        Family::LeafPlane { leaves, .. } => {
            let want = spec.degrees.clone();
            Box::new(base.flat_map(move |f| {
                let deg = f.degrees();
                let mins: Vec<usize> = deg.iter().map(|&d| usize::from(d == 0)).collect();
                let ok: Vec<Vec<usize>> = distributions(&mins, leaves)
                    .into_iter()
                    .filter(|a| {
                        want.as_ref().is_none_or(|w| {
                            deg.iter()
                                .zip(a)
                                .map(|(d, a)| d + a)
                                .eq(w.as_slice().iter().copied())
                        })
                    })
                    .collect();
                ok.into_iter()
                    .flat_map(move |a| arrangements(&f, &a))
                    .collect::<Vec<_>>()
            }))
        }
        Family::Kary { arity, .. } => {
            let want = spec.degrees.clone();
            Box::new(base.flat_map(move |f| {
                let deg = f.degrees();
                let fits = deg.iter().all(|&d| d <= arity)
                    && want
                        .as_ref()
                        .is_none_or(|w| w.as_slice().iter().all(|&x| x == arity));
                let leaves: Vec<usize> = deg.iter().map(|&d| arity.saturating_sub(d)).collect();
                fits.then(|| arrangements(&f, &leaves))
                    .into_iter()
                    .flatten()
            }))
        }
        _ => unreachable!("not a plane family"),
    })
}

/// Proper colorings of each base forest, color vectors in lexicographic
/// order.
fn colored_stream(
    spec: &FamilySpec,
    colors: usize,
    special: bool,
    budget: u128,
) -> Result<impl Iterator<Item = EdgeColoredForest> + Send> {
    let edges = spec.family.labels() - spec.roots.count();
    let extra = (colors as u128).saturating_pow(edges as u32);
    let base = base_forests(spec, extra, budget)?.filter(degree_filter(spec.degrees.clone()));
    Ok(base.flat_map(move |f| {
        let n = f.n();
        let domains: Vec<Vec<usize>> = (1..=n)
            .map(|v| match f.parents()[v - 1] {
                0 => vec![0],
                p if special && f.parents()[p - 1] == 0 => (1..colors).collect(),
                _ => (1..=colors).collect(),
            })
            .collect();
        let mut out = Vec::new();
        if domains.iter().all(|d| !d.is_empty()) {
            let mut idx = vec![0usize; n];
            loop {
                let color: Vec<usize> = (0..n).map(|i| domains[i][idx[i]]).collect();
                let g = EdgeColoredForest::new_unchecked(f.clone(), colors, color);
                if g.is_proper() {
                    out.push(g);
                }
                let mut i = n;
                loop {
                    if i == 0 {
                        return out;
                    }
                    i -= 1;
                    idx[i] += 1;
                    if idx[i] < domains[i].len() {
                        break;
                    }
                    idx[i] = 0;
                }
            }
        }
        out
    }))
}

/// Streams the members of `spec` in canonical order under an explicit
/// candidate budget.
pub fn enumerate_with_budget(spec: &FamilySpec, budget: u128) -> Result<ForestStream> {
    spec.validate()?;
    if spec.shapes {
        let mut seen = BTreeMap::new();
        for f in plane_stream(spec, budget)? {
            let s = f.shape();
            seen.entry(s.to_term()).or_insert(s);
        }
        return Ok(Box::new(seen.into_values().map(AnyForest::Plane)));
    }
    Ok(match &spec.family {
        Family::Plain { .. } | Family::Partite { .. } => Box::new(
            base_forests(spec, 1, budget)?
                .filter(degree_filter(spec.degrees.clone()))
                .map(AnyForest::Rooted),
        ),
        Family::Plane { .. } | Family::LeafPlane { .. } | Family::Kary { .. } => {
            Box::new(plane_stream(spec, budget)?.map(AnyForest::Plane))
        }
        Family::Colored { colors, .. } => {
            Box::new(colored_stream(spec, *colors, false, budget)?.map(AnyForest::Colored))
        }
        Family::SpecialColored { colors, .. } => {
            Box::new(colored_stream(spec, *colors, true, budget)?.map(AnyForest::Colored))
        }
    })
}

/// Streams the members of `spec` in canonical order.
pub fn enumerate(spec: &FamilySpec) -> Result<ForestStream> {
    enumerate_with_budget(spec, default_budget())
}

/// `enumerate(spec)` restricted to forests whose vertex `i` has `d_i`
/// children.
pub fn enumerate_degree_filtered(spec: &FamilySpec, d: DegreeSequence) -> Result<ForestStream> {
    enumerate(&spec.clone().with_degrees(d))
}

pub fn count_by_enumeration(spec: &FamilySpec) -> Result<BigUint> {
    Ok(BigUint::from(enumerate(spec)?.count()))
}

/// Unlabeled plane trees on `vertices` vertices.
pub fn plane_shapes(vertices: usize) -> Result<Vec<PlaneForest>> {
    let spec = FamilySpec::new(Family::Plane { n: vertices }, Roots::First(1)).shapes();
    Ok(enumerate(&spec)?
        .filter_map(AnyForest::into_plane)
        .collect())
}

/// Unlabeled `arity`-ary plane trees with `internal` internal vertices.
pub fn kary_shapes(arity: usize, internal: usize) -> Result<Vec<PlaneForest>> {
    let spec = FamilySpec::new(Family::Kary { arity, internal }, Roots::First(1)).shapes();
    Ok(enumerate(&spec)?
        .filter_map(AnyForest::into_plane)
        .collect())
}

/// A family whose conditioned members satisfy a multiplicative recurrence
/// in the root count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ChainFamily {
    Plain {
        n: usize,
    },
    Partite {
        parts: PartAssignment,
        chain: PartiteChain,
    },
    Plane {
        n: usize,
    },
    /// `leaves` is the leaf count at one root; each step adds one.
    LeafPlane {
        internal: usize,
        leaves: usize,
    },
    Colored {
        n: usize,
        colors: usize,
    },
}

impl ChainFamily {
    /// Root counts `k` of the larger-root-count side.
    pub fn steps(&self) -> RangeInclusive<usize> {
        match self {
            Self::Plain { n } | Self::Plane { n } | Self::Colored { n, .. } => {
                2..=n.saturating_sub(1)
            }
            Self::LeafPlane { internal, .. } => 2..=internal.saturating_sub(1),
            Self::Partite { parts, chain } => chain.step_range(parts),
        }
    }

    /// The conditioned family with `k` roots.
    pub fn spec(&self, k: usize) -> FamilySpec {
        match self {
            Self::Plain { n } => {
                FamilySpec::new(Family::Plain { n: *n }, Roots::First(k)).conditioned()
            }
            Self::Plane { n } => {
                FamilySpec::new(Family::Plane { n: *n }, Roots::First(k)).conditioned()
            }
            Self::Colored { n, colors } => FamilySpec::new(
                Family::SpecialColored {
                    n: *n,
                    colors: *colors,
                },
                Roots::First(k),
            )
            .conditioned(),
            Self::LeafPlane { internal, leaves } => FamilySpec::new(
                Family::LeafPlane {
                    internal: *internal,
                    leaves: leaves + k - 1,
                },
                Roots::First(k),
            )
            .conditioned(),
            Self::Partite { parts, chain } => {
                let (anchor, cond) = chain.anchor_and_condition(parts);
                FamilySpec::new(
                    Family::Partite {
                        parts: parts.clone(),
                    },
                    Roots::Exactly(chain.roots(k)),
                )
                .precedes(cond, anchor)
            }
        }
    }

    /// Number of inverse choices at step `k`.
    pub fn multiplier(&self, k: usize) -> usize {
        match self {
            Self::Plain { n } => *n,
            Self::Plane { n } => 2 * n - k,
            Self::LeafPlane { leaves, .. } => leaves + k - 1,
            Self::Colored { n, colors } => colors * n + k - 2 * n,
            Self::Partite { parts, chain } => partite_choice_count(k, parts, *chain),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecurrenceRow {
    pub k: usize,
    #[serde(serialize_with = "crate::decimal")]
    pub lhs: BigUint,
    pub multiplier: usize,
    #[serde(serialize_with = "crate::decimal")]
    pub rhs: BigUint,
    pub pass: bool,
}

/// Checks `|family with k-1 roots| = multiplier * |family with k roots|`
/// by enumerating both sides, for each `k` in `ks` (default: every step).
pub fn verify_recurrence(
    family: &ChainFamily,
    ks: Option<RangeInclusive<usize>>,
) -> Result<Vec<RecurrenceRow>> {
    let all = family.steps();
    let ks = ks.unwrap_or_else(|| all.clone());
    if !ks.is_empty() && (!all.contains(ks.start()) || !all.contains(ks.end())) {
        return Err(Error::ParameterRange(format!(
            "steps {ks:?} outside {all:?}"
        )));
    }
    let mut counts: BTreeMap<usize, BigUint> = BTreeMap::new();
    let mut count = |k: usize| -> Result<BigUint> {
        if let Some(c) = counts.get(&k) {
            return Ok(c.clone());
        }
        let c = count_by_enumeration(&family.spec(k))?;
        counts.insert(k, c.clone());
        Ok(c)
    };
    ks.map(|k| {
        let lhs = count(k - 1)?;
        let rhs = count(k)?;
        let multiplier = family.multiplier(k);
        Ok(RecurrenceRow {
            k,
            pass: lhs == &rhs * BigUint::from(multiplier),
            lhs,
            multiplier,
            rhs,
        })
    })
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(spec: FamilySpec) -> usize {
        enumerate(&spec).unwrap().count()
    }

    fn rooted(spec: FamilySpec) -> Vec<Vec<usize>> {
        enumerate(&spec)
            .unwrap()
            .filter_map(AnyForest::into_rooted)
            .map(|f| f.parents().to_vec())
            .collect()
    }

    #[test]
    fn plain_small() {
        assert_eq!(
            rooted(FamilySpec::new(Family::Plain { n: 2 }, Roots::First(1))),
            vec![vec![0, 1]]
        );
        assert_eq!(
            rooted(FamilySpec::new(Family::Plain { n: 3 }, Roots::First(1))),
            vec![vec![0, 1, 1], vec![0, 1, 2], vec![0, 3, 1]]
        );
        assert_eq!(
            count(FamilySpec::new(Family::Plain { n: 5 }, Roots::First(3)).conditioned()),
            5
        );
        assert_eq!(
            count(FamilySpec::new(Family::Plain { n: 5 }, Roots::First(3))),
            15
        );
        assert_eq!(
            count(FamilySpec::new(Family::Plain { n: 4 }, Roots::Any(2))),
            48
        );
    }

    #[test]
    fn partite_k23() {
        let parts = PartAssignment::new(vec![2, 3]).unwrap();
        assert_eq!(
            count(FamilySpec::new(Family::Partite { parts }, Roots::First(1))),
            12
        );
    }

    #[test]
    fn singleton_parts_are_plain() {
        let parts = PartAssignment::new(vec![1; 4]).unwrap();
        assert_eq!(
            rooted(FamilySpec::new(Family::Partite { parts }, Roots::First(2))),
            rooted(FamilySpec::new(Family::Plain { n: 4 }, Roots::First(2)))
        );
    }

    #[test]
    fn plane_and_shapes() {
        assert_eq!(
            count(FamilySpec::new(Family::Plane { n: 3 }, Roots::Any(1))),
            12
        );
        assert_eq!(plane_shapes(5).unwrap().len(), 14);
        assert_eq!(kary_shapes(2, 3).unwrap().len(), 5);
        let d = DegreeSequence::new(vec![1, 1, 0]);
        let terms: Vec<String> =
            enumerate_degree_filtered(&FamilySpec::new(Family::Plane { n: 3 }, Roots::Any(1)), d)
                .unwrap()
                .map(|f| f.to_text())
                .collect();
        assert_eq!(terms, vec!["1(2(3))", "2(1(3))"]);
    }

    #[test]
    fn leaf_plane_members() {
        let spec = FamilySpec::new(
            Family::LeafPlane {
                internal: 2,
                leaves: 2,
            },
            Roots::First(1),
        );
        let terms: Vec<String> = enumerate(&spec).unwrap().map(|f| f.to_text()).collect();
        // leaf distributions (0, 2) then (1, 1), each in every arrangement
        assert_eq!(terms, vec!["1(2(*,*))", "1(*,2(*))", "1(2(*),*)"]);
        assert_eq!(
            count(FamilySpec::new(
                Family::Kary {
                    arity: 2,
                    internal: 2
                },
                Roots::First(1)
            )),
            2
        );
    }

    #[test]
    fn colored_small() {
        let c = |n, colors, r| FamilySpec::new(Family::Colored { n, colors }, Roots::First(r));
        let s =
            |n, colors, r| FamilySpec::new(Family::SpecialColored { n, colors }, Roots::First(r));
        assert_eq!(count(c(3, 2, 1)), 6);
        assert_eq!(count(s(3, 2, 1)), 2);
        assert_eq!(count(c(4, 3, 1)), 168);
    }

    #[test]
    fn degree_filtered_rooted() {
        let d = DegreeSequence::new(vec![2, 0, 0]);
        let spec = FamilySpec::new(Family::Plain { n: 3 }, Roots::Any(1));
        assert_eq!(enumerate_degree_filtered(&spec, d).unwrap().count(), 1);
        let bad = DegreeSequence::new(vec![1, 1, 1]);
        assert_eq!(enumerate_degree_filtered(&spec, bad).unwrap().count(), 0);
    }

    #[test]
    fn budget_guard() {
        let spec = FamilySpec::new(Family::Plain { n: 9 }, Roots::First(1));
        assert!(matches!(
            enumerate_with_budget(&spec, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn inconsistent_specs() {
        let spec = FamilySpec::new(Family::Plain { n: 3 }, Roots::First(4));
        assert!(matches!(enumerate(&spec), Err(Error::InconsistentSpec(_))));
        let spec = FamilySpec::new(Family::Plain { n: 3 }, Roots::First(1)).shapes();
        assert!(matches!(enumerate(&spec), Err(Error::InconsistentSpec(_))));
    }

    #[test]
    fn recurrences() {
        let rows = verify_recurrence(&ChainFamily::Plain { n: 5 }, None).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!((rows[1].k, rows[1].lhs.clone()), (3, BigUint::from(25u32)));
        assert!(rows.iter().all(|r| r.pass));
        let rows = verify_recurrence(&ChainFamily::Colored { n: 4, colors: 3 }, None).unwrap();
        assert!(rows.iter().all(|r| r.pass));
        let parts = PartAssignment::new(vec![2, 2]).unwrap();
        let rows = verify_recurrence(
            &ChainFamily::Partite {
                parts,
                chain: PartiteChain::Primary,
            },
            None,
        )
        .unwrap();
        assert!(rows.iter().all(|r| r.pass));
        let rows = verify_recurrence(
            &ChainFamily::LeafPlane {
                internal: 3,
                leaves: 2,
            },
            None,
        )
        .unwrap();
        assert_eq!(rows[0].multiplier, 3);
        assert!(rows.iter().all(|r| r.pass));
    }
}
