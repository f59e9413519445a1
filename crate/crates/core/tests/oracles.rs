//! Closed forms against brute-force enumeration.

mod common;

use std::collections::BTreeMap;

use common::{colored, plane};
use num_bigint::BigUint;
use rootforest::counting::*;
use rootforest::enumerate::{
    count_by_enumeration, kary_shapes, plane_shapes, Family, FamilySpec, Roots,
};
use rootforest::PartAssignment;

fn count(spec: FamilySpec) -> BigUint {
    count_by_enumeration(&spec).unwrap()
}

#[test]
fn trees_and_rooted_forests() {
    for n in 1..=7 {
        assert_eq!(
            count(FamilySpec::new(Family::Plain { n }, Roots::First(1))),
            cayley(n).unwrap(),
            "n={n}"
        );
        for k in 1..n {
            let spec = FamilySpec::new(Family::Plain { n }, Roots::First(k));
            assert_eq!(
                count(spec.clone()),
                rooted_forest_count(n, k, false).unwrap()
            );
            assert_eq!(
                count(spec.conditioned()),
                rooted_forest_count(n, k, true).unwrap()
            );
            assert_eq!(
                count(FamilySpec::new(Family::Plain { n }, Roots::Any(k))),
                forests_k_trees(n, k).unwrap(),
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn riordan_table_matches_separating_forests() {
    // forests with k trees separating 1..=k are exactly those rooted at 1..=k
    let table = RiordanTable::new(7);
    for n in 2..=7 {
        for k in 1..n {
            assert_eq!(
                table.get(n, k).unwrap(),
                &count(FamilySpec::new(Family::Plain { n }, Roots::First(k)))
            );
        }
    }
}

#[test]
fn multipartite_spanning_tree_grid() {
    for sizes in [
        vec![1, 1],
        vec![1, 4],
        vec![2, 2],
        vec![2, 4],
        vec![3, 3],
        vec![1, 1, 1],
        vec![1, 2, 3],
        vec![2, 2, 2],
        vec![1, 1, 1, 1],
        vec![1, 1, 2, 2],
    ] {
        let parts = PartAssignment::new(sizes.clone()).unwrap();
        assert_eq!(
            count(FamilySpec::new(Family::Partite { parts }, Roots::First(1))),
            multipartite_spanning_trees(&sizes).unwrap(),
            "{sizes:?}"
        );
    }
}

#[test]
fn plane_trees() {
    for v in 1..=6 {
        assert_eq!(
            count(FamilySpec::new(Family::Plane { n: v }, Roots::Any(1))),
            plane_labeled(v).unwrap()
        );
        let shapes = plane_shapes(v).unwrap();
        assert_eq!(BigUint::from(shapes.len()), catalan(v - 1).unwrap());
        if v >= 2 {
            let mut by_leaves = BTreeMap::new();
            for s in &shapes {
                *by_leaves.entry(s.leaf_count()).or_insert(0usize) += 1;
            }
            for (p, c) in by_leaves {
                assert_eq!(BigUint::from(c), narayana(v - 1, p).unwrap(), "v={v} p={p}");
            }
        }
    }
}

#[test]
fn composition_stats_brute_force() {
    fn compositions(n: usize, m: usize) -> Vec<Vec<usize>> {
        if m == 1 {
            return vec![vec![n]];
        }
        (1..=n + 1 - m)
            .flat_map(|a| {
                compositions(n - a, m - 1).into_iter().map(move |mut rest| {
                    rest.insert(0, a);
                    rest
                })
            })
            .collect()
    }
    for n in 1..=10 {
        for m in 1..=n {
            let all = compositions(n, m);
            let first: usize = all.iter().map(|c| c[0]).sum();
            assert_eq!(
                composition_stats(n, m).unwrap(),
                (BigUint::from(all.len()), BigUint::from(first)),
                "n={n} m={m}"
            );
        }
    }
}

#[test]
fn kary_forests() {
    for arity in 1..=3 {
        for internal in 1..=4 {
            assert_eq!(
                BigUint::from(kary_shapes(arity, internal).unwrap().len()),
                kary_unlabeled(arity, internal).unwrap()
            );
            for r in 1..=internal {
                let got = plane(&FamilySpec::new(
                    Family::Kary { arity, internal },
                    Roots::First(r),
                ));
                assert!(got.iter().all(|f| f.is_k_ary(arity)));
                assert_eq!(
                    BigUint::from(got.len()),
                    kary_forest_count(arity, internal, r).unwrap(),
                    "arity={arity} n={internal} r={r}"
                );
            }
        }
    }
}

#[test]
fn colored_trees_by_root_degree() {
    for n in 2..=5 {
        for kc in 1..=3 {
            let trees = colored(&FamilySpec::new(
                Family::Colored { n, colors: kc },
                Roots::First(1),
            ));
            assert!(trees.iter().all(|t| t.is_proper()));
            assert_eq!(
                BigUint::from(trees.len()),
                colored_tree_count(n, kc).unwrap()
            );
            let mut by_degree = vec![0usize; n];
            for t in &trees {
                by_degree[t.base().degree(1).unwrap()] += 1;
            }
            for (r, &got) in by_degree.iter().enumerate().skip(1) {
                assert_eq!(
                    BigUint::from(got),
                    colored_root_degree_count(n, kc, r).unwrap(),
                    "n={n} kc={kc} r={r}"
                );
            }
        }
    }
}

#[test]
fn out_of_range_parameters_are_errors() {
    assert!(cayley(0).is_err());
    assert!(rooted_forest_count(4, 4, false).is_err());
    assert!(narayana(3, 0).is_err());
    assert!(multipartite_spanning_trees(&[3]).is_err());
    assert!(colored_root_degree_count(3, 2, 3).is_err());
}
