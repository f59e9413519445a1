mod common;

use std::collections::HashSet;

use common::{assert_step_bijection, plane, rooted};
use rootforest::bijection::{
    partite_forward, partite_inverse, plain_forward, plain_inverse, plane_forward, plane_inverse,
    reroot_switch, reroot_switch_back, PartiteChain,
};
use rootforest::counting::tripartite_base_count;
use rootforest::enumerate::{ChainFamily, Family, FamilySpec, Roots};
use rootforest::PartAssignment;

const PARTS: [&[usize]; 7] = [
    &[2, 2],
    &[2, 3],
    &[3, 2],
    &[3, 3],
    &[2, 2, 2],
    &[2, 1, 1],
    &[1, 2, 2],
];

#[test]
fn detach_attach_over_all_small_forests() {
    for n in 1..=6 {
        for k in 1..=n {
            for f in rooted(&FamilySpec::new(Family::Plain { n }, Roots::Any(k))) {
                for x in 1..=n {
                    let p = f.parent(x).unwrap();
                    if p == 0 {
                        assert!(f.detach_subtree(x).is_err());
                    } else {
                        let g = f.detach_subtree(x).unwrap();
                        assert!(g.is_root(x).unwrap());
                        assert_eq!(g.attach_subtree(x, p).unwrap(), f);
                    }
                }
            }
        }
    }
}

#[test]
fn plain_chain_composes_to_a_tree_bijection() {
    // running every forward step from a tree lands in the base forest
    let n = 6;
    for t in rooted(&FamilySpec::new(Family::Plain { n }, Roots::First(1))) {
        let mut f = t.clone();
        let mut choices = vec![];
        for k in 2..n {
            let (g, c) = plain_forward(&f, k).unwrap();
            choices.push(c);
            f = g;
        }
        assert_eq!(f.roots(), (1..n).collect::<Vec<_>>());
        for (k, c) in (2..n).rev().zip(choices.into_iter().rev()) {
            f = plain_inverse(&f, k, c).unwrap();
        }
        assert_eq!(f, t);
    }
}

#[test]
fn partite_primary_and_secondary_chains() {
    for sizes in PARTS {
        let parts = PartAssignment::new(sizes.to_vec()).unwrap();
        for chain in [PartiteChain::Primary, PartiteChain::Secondary] {
            let fam = ChainFamily::Partite {
                parts: parts.clone(),
                chain,
            };
            for k in fam.steps() {
                let (l, r) = (rooted(&fam.spec(k - 1)), rooted(&fam.spec(k)));
                assert!(!r.is_empty(), "{sizes:?} {chain:?} k={k}: empty family");
                assert_step_bijection(
                    &l,
                    &r,
                    fam.multiplier(k),
                    |f| partite_forward(f, k, &parts, chain),
                    |g, c| partite_inverse(g, k, &parts, chain, c),
                );
            }
        }
    }
}

#[test]
fn reroot_switch_links_the_two_chains() {
    for sizes in PARTS {
        let parts = PartAssignment::new(sizes.to_vec()).unwrap();
        let r = sizes[0];
        let primary = ChainFamily::Partite {
            parts: parts.clone(),
            chain: PartiteChain::Primary,
        };
        let secondary = ChainFamily::Partite {
            parts: parts.clone(),
            chain: PartiteChain::Secondary,
        };
        let from = rooted(&primary.spec(r));
        let to: HashSet<_> = rooted(&secondary.spec(r)).into_iter().collect();
        assert_eq!(from.len(), to.len(), "{sizes:?}");
        let image: HashSet<_> = from
            .iter()
            .map(|f| {
                let g = reroot_switch(f, r).unwrap();
                assert_eq!(&reroot_switch_back(&g, r).unwrap(), f);
                g
            })
            .collect();
        assert_eq!(image, to, "{sizes:?}");
    }
}

#[test]
fn tripartite_base_matches_enumeration() {
    for r in 1..=2 {
        for s in 1..=3 {
            for t in 1..=3 {
                let parts = PartAssignment::new(vec![r, s, t]).unwrap();
                let spec = FamilySpec::new(
                    Family::Partite { parts },
                    Roots::Exactly((2..=r + s).collect()),
                )
                .precedes(1, r + 1);
                assert_eq!(
                    rooted(&spec).len(),
                    usize::try_from(tripartite_base_count(r, s, t).unwrap()).unwrap(),
                    "({r},{s},{t})"
                );
            }
        }
    }
}

#[test]
fn plane_steps_at_seven_vertices() {
    let fam = ChainFamily::Plane { n: 7 };
    for k in [4, 5, 6] {
        let (l, r) = (plane(&fam.spec(k - 1)), plane(&fam.spec(k)));
        assert_step_bijection(
            &l,
            &r,
            14 - k,
            |f| plane_forward(f, k),
            |g, c| plane_inverse(g, k, c),
        );
    }
}

#[test]
fn out_of_range_choices_are_rejected() {
    let f =
        rooted(&FamilySpec::new(Family::Plain { n: 5 }, Roots::First(3)).conditioned())[0].clone();
    assert!(plain_inverse(&f, 3, rootforest::ChoiceIndex(6)).is_err());
    assert!(plain_inverse(&f, 3, rootforest::ChoiceIndex(0)).is_err());
    // wrong root count for the step
    assert!(plain_inverse(&f, 2, rootforest::ChoiceIndex(1)).is_err());
}
