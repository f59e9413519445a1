use proptest::prelude::*;

use rootforest::bijection::{
    colored_forward, colored_inverse, plain_forward, plain_inverse, plane_forward, plane_inverse,
    ChoiceIndex,
};
use rootforest::codec::{decode, random_trace, rng_from_seed, CodecFamily};
use rootforest::{AnyForest, EdgeColoredForest, PlaneForest, RootedForest};

/// A random forest on `[n]`: vertex `i` of a random order picks a parent
/// among earlier vertices or becomes a root, then labels are shuffled.
fn forest() -> impl Strategy<Value = RootedForest> {
    (1usize..=9)
        .prop_flat_map(|n| {
            (
                proptest::collection::vec(any::<prop::sample::Index>(), n),
                Just((1..=n).collect::<Vec<usize>>()).prop_shuffle(),
            )
        })
        .prop_map(|(picks, labels)| {
            let n = labels.len();
            let mut parent = vec![0; n];
            for i in 1..n {
                // index 0 means "root", otherwise one of the i earlier slots
                let j = picks[i].index(i + 1);
                if j > 0 {
                    parent[labels[i] - 1] = labels[j - 1];
                }
            }
            RootedForest::from_parents(parent).unwrap()
        })
}

fn pair() -> impl Strategy<Value = (RootedForest, usize, usize)> {
    forest().prop_flat_map(|f| {
        let n = f.n();
        (Just(f), 1..=n, 1..=n)
    })
}

proptest! {
    #[test]
    fn swap_is_an_involution((f, a, b) in pair()) {
        let g = f.swap_labels(a, b).unwrap();
        prop_assert_eq!(g.root_count(), f.root_count());
        prop_assert_eq!(g.swap_labels(a, b).unwrap(), f);
    }

    #[test]
    fn detach_then_attach_restores(f in forest()) {
        for x in 1..=f.n() {
            let p = f.parents()[x - 1];
            if p != 0 {
                let g = f.detach_subtree(x).unwrap();
                prop_assert_eq!(g.root_count(), f.root_count() + 1);
                prop_assert_eq!(g.attach_subtree(x, p).unwrap(), f.clone());
            }
        }
    }

    #[test]
    fn degrees_sum_to_edges(f in forest()) {
        prop_assert_eq!(f.degrees().iter().sum::<usize>(), f.n() - f.root_count());
    }

    #[test]
    fn text_formats_round_trip(f in forest()) {
        prop_assert_eq!(RootedForest::parse_line(&f.to_line()).unwrap(), f.clone());
        let p = PlaneForest::from_rooted(&f);
        prop_assert_eq!(PlaneForest::parse_term(&p.to_term()).unwrap(), p.clone());
        prop_assert_eq!(p.to_rooted().unwrap(), f);
    }

    #[test]
    fn plain_steps_invert(seed in any::<u64>(), n in 3usize..=12, k_off in 0usize..10, c in any::<prop::sample::Index>()) {
        let k = 2 + k_off % (n - 2);
        let mut rng = rng_from_seed(seed);
        // a member of the k-root family: decode the tail of a random trace
        let t = random_trace(CodecFamily::Plain { n }, &mut rng).unwrap();
        let mut f = RootedForest::from_parents((0..n).map(|i| usize::from(i == n - 1)).collect()).unwrap();
        for (j, &cj) in (k + 1..n).rev().zip(&t.choices) {
            f = plain_inverse(&f, j, ChoiceIndex(cj)).unwrap();
        }
        let c = ChoiceIndex(c.index(n) + 1);
        let g = plain_inverse(&f, k, c).unwrap();
        prop_assert_eq!(plain_forward(&g, k).unwrap(), (f, c));
    }

    #[test]
    fn decoded_trees_are_valid(seed in any::<u64>(), n in 2usize..=10, kc in 2usize..=5) {
        let mut rng = rng_from_seed(seed);
        for family in [CodecFamily::Plane { n }, CodecFamily::Colored { n, colors: kc }] {
            match decode(&random_trace(family, &mut rng).unwrap()).unwrap() {
                AnyForest::Plane(p) => {
                    prop_assert!(p.is_fully_labeled() && p.tree_count() == 1);
                    if n >= 3 {
                        let (q, c) = plane_forward(&p, 2).unwrap();
                        prop_assert_eq!(plane_inverse(&q, 2, c).unwrap(), p);
                    }
                }
                AnyForest::Colored(f) => {
                    prop_assert!(f.is_proper() && f.is_special());
                    let text = f.to_text();
                    prop_assert_eq!(EdgeColoredForest::parse_text(&text, kc).unwrap(), f.clone());
                    if n >= 3 {
                        let (g, c) = colored_forward(&f, 2).unwrap();
                        prop_assert!(g.is_proper() && g.is_special());
                        prop_assert_eq!(colored_inverse(&g, 2, c).unwrap(), f);
                    }
                }
                AnyForest::Rooted(_) => unreachable!(),
            }
        }
    }
}
