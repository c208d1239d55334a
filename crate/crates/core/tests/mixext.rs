use mixspec::linalg::{char_poly, IntMatrix};
use mixspec::mixext::cell_masks;
use mixspec::poly::IntPoly;
use mixspec::spectrum::nontrivial_count;
use mixspec::{expand, is_isomorphic, quotient_matrix, ExtensionType, Graph};
use num_bigint::BigInt;
use proptest::prelude::*;

fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn arb_base_and_type(min_n: usize, max_n: usize, max_abs: i64) -> impl Strategy<Value = (Graph, ExtensionType)> {
    arb_graph(min_n, max_n).prop_flat_map(move |g| {
        let n = g.order();
        let entry = (1..=max_abs, any::<bool>()).prop_map(|(a, neg)| if neg { -a } else { a });
        prop::collection::vec(entry, n).prop_map(move |v| (g.clone(), ExtensionType::new(v).unwrap()))
    })
}

/// `x^a (x + 1)^b` with `a` from coclique cells and `b` from clique cells.
fn trivial_factor(t: &ExtensionType) -> (usize, usize) {
    let a = t.entries().iter().filter(|&&x| x < 0).map(|&x| (-x - 1) as usize).sum();
    let b = t.entries().iter().filter(|&&x| x > 0).map(|&x| (x - 1) as usize).sum();
    (a, b)
}

proptest! {
    #[test]
    fn characteristic_polynomial_factors((g, t) in arb_base_and_type(1, 5, 4)) {
        let b = expand(&g, &t).unwrap();
        let q = quotient_matrix(&g, &t).unwrap();
        let (a, c) = trivial_factor(&t);
        prop_assert_eq!(a + c, b.order() - g.order());
        let rhs = char_poly(&q).mul(&IntPoly::from_roots(&[(0, a), (-1, c)]));
        prop_assert_eq!(char_poly(&IntMatrix::adjacency(&b, 0)), rhs);
    }

    #[test]
    fn partition_is_equitable((g, t) in arb_base_and_type(1, 6, 4)) {
        let b = expand(&g, &t).unwrap();
        let q = quotient_matrix(&g, &t).unwrap();
        let cells = cell_masks(&t);
        prop_assert_eq!(cells.iter().fold(0, |acc, c| acc | c), b.vertex_mask());
        for (i, ci) in cells.iter().enumerate() {
            for (j, cj) in cells.iter().enumerate() {
                for v in (0..64).filter(|v| ci >> v & 1 == 1) {
                    let seen = (b.neighbors(v) & cj).count_ones() as i64;
                    prop_assert_eq!(BigInt::from(seen), q.get(i, j).clone());
                }
            }
        }
    }

    #[test]
    fn small_bases_stay_in_class((g, t) in arb_base_and_type(1, 3, 6)) {
        let b = expand(&g, &t).unwrap();
        prop_assert!(nontrivial_count(&b) <= 3);
    }

    #[test]
    fn relabelling_commutes((g, t) in arb_base_and_type(1, 5, 3), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let mut moved = vec![0; n];
        for v in 0..n {
            moved[perm[v]] = t.entries()[v];
        }
        let h = g.permuted(&perm);
        let u = ExtensionType::new(moved).unwrap();
        prop_assert!(is_isomorphic(&expand(&g, &t).unwrap(), &expand(&h, &u).unwrap()));
    }

    #[test]
    fn identity_type(g in arb_graph(1, 12)) {
        prop_assert_eq!(expand(&g, &ExtensionType::ones(g.order())).unwrap(), g);
    }

    #[test]
    fn singleton_sign_is_irrelevant((g, t) in arb_base_and_type(1, 5, 3)) {
        let flipped: Vec<i64> = t.entries().iter().map(|&x| if x.abs() == 1 { -x } else { x }).collect();
        let u = ExtensionType::new(flipped).unwrap();
        prop_assert_eq!(expand(&g, &t).unwrap(), expand(&g, &u).unwrap());
        prop_assert_eq!(quotient_matrix(&g, &t).unwrap(), quotient_matrix(&g, &u).unwrap());
        prop_assert_eq!(t.normalized(), u.normalized());
    }
}

#[test]
fn exhaustive_three_vertex_bases() {
    let bases = [
        Graph::empty(3).unwrap(),
        Graph::from_edges(3, [(0, 1)]).unwrap(),
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap(),
        Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap(),
    ];
    let values: Vec<i64> = (-4..=4).filter(|&x| x != 0).collect();
    for g in &bases {
        for &a in &values {
            for &b in &values {
                for &c in &values {
                    let t = ExtensionType::new(vec![a, b, c]).unwrap();
                    assert!(nontrivial_count(&expand(g, &t).unwrap()) <= 3, "{t}");
                }
            }
        }
    }
}
