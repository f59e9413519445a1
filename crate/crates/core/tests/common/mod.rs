#![allow(dead_code)]

use std::collections::HashSet;
use std::fmt::Debug;
use std::hash::Hash;

use rootforest::bijection::ChoiceIndex;
use rootforest::enumerate::{enumerate, FamilySpec};
use rootforest::{AnyForest, EdgeColoredForest, PlaneForest, RootedForest};

pub fn rooted(spec: &FamilySpec) -> Vec<RootedForest> {
    enumerate(spec)
        .unwrap()
        .filter_map(AnyForest::into_rooted)
        .collect()
}

pub fn plane(spec: &FamilySpec) -> Vec<PlaneForest> {
    enumerate(spec)
        .unwrap()
        .filter_map(AnyForest::into_plane)
        .collect()
}

pub fn colored(spec: &FamilySpec) -> Vec<EdgeColoredForest> {
    enumerate(spec)
        .unwrap()
        .filter_map(AnyForest::into_colored)
        .collect()
}

/// Checks that `forward` and `inverse` are mutually inverse between `lhs`
/// and `rhs x [m]`, in both directions, over every member.
pub fn assert_step_bijection<F: Clone + Eq + Hash + Debug>(
    lhs: &[F],
    rhs: &[F],
    m: usize,
    forward: impl Fn(&F) -> rootforest::Result<(F, ChoiceIndex)>,
    inverse: impl Fn(&F, ChoiceIndex) -> rootforest::Result<F>,
) {
    assert_eq!(lhs.len(), m * rhs.len(), "|lhs| != {m} |rhs|");
    let lset: HashSet<&F> = lhs.iter().collect();
    let rset: HashSet<&F> = rhs.iter().collect();
    assert_eq!(lset.len(), lhs.len(), "duplicate members on the left");
    for f in lhs {
        let (g, c) = forward(f).unwrap();
        assert!(
            rset.contains(&g),
            "forward({f:?}) = {g:?} leaves the family"
        );
        assert!((1..=m).contains(&c.get()), "choice {c} out of range");
        assert_eq!(&inverse(&g, c).unwrap(), f);
    }
    for g in rhs {
        for c in (1..=m).map(ChoiceIndex) {
            let f = inverse(g, c).unwrap();
            assert!(
                lset.contains(&f),
                "inverse({g:?}, {c}) = {f:?} leaves the family"
            );
            assert_eq!(forward(&f).unwrap(), (g.clone(), c));
        }
    }
}
