mod common;

use std::collections::BTreeSet;

use common::{atlas, brute_isomorphic, random_graph, random_relabel};
use mixspec::catalog::parse_named;
use mixspec::reduction::{
    contract_true_twins, recognize_extension, reduce_mixed, true_twin_classes, twin_partition, PositionConstraint,
    TwinKind,
};
use mixspec::{expand, ExtensionType, Graph};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Every signed type of total size `m`, expanded and compared by backtracking.
fn oracle(h: &Graph, base: &Graph, constraints: &[PositionConstraint]) -> Vec<ExtensionType> {
    fn walk(
        h: &Graph,
        base: &Graph,
        constraints: &[PositionConstraint],
        left: usize,
        t: &mut Vec<i64>,
        out: &mut BTreeSet<ExtensionType>,
    ) {
        let k = base.order();
        if t.len() == k {
            if left == 0 {
                let ty = ExtensionType::new(t.clone()).unwrap().normalized();
                let admitted = ty.entries().iter().zip(constraints).all(|(&x, c)| c.admits(x));
                if admitted && brute_isomorphic(&expand(base, &ty).unwrap(), h) {
                    out.insert(ty);
                }
            }
            return;
        }
        for s in 1..=left {
            for sign in [1, -1] {
                t.push(sign * s as i64);
                walk(h, base, constraints, left - s, t, out);
                t.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    walk(h, base, constraints, h.order(), &mut Vec::new(), &mut out);
    out.into_iter().collect()
}

fn bases() -> Vec<Graph> {
    ["K1", "K2", "2K1", "P3", "K3", "K1+K2", "P4", "Kpq(1,3)", "C4", "P5"]
        .iter()
        .map(|s| parse_named(s).unwrap())
        .collect()
}

fn random_constraint<R: Rng>(rng: &mut R) -> PositionConstraint {
    match rng.gen_range(0..6) {
        0 | 1 => PositionConstraint::Any,
        2 => PositionConstraint::Clique { min: rng.gen_range(1..=2) },
        3 => PositionConstraint::Coclique { min: rng.gen_range(1..=2) },
        4 => PositionConstraint::Exact(1),
        _ => PositionConstraint::Exact(if rng.gen() { 2 } else { -2 }),
    }
}

#[test]
fn recognition_matches_oracle() {
    let mut rng = StdRng::seed_from_u64(99);
    let mut positives = 0;
    for base in bases() {
        let k = base.order();
        for round in 0..30 {
            let m = rng.gen_range(k..=7.max(k));
            let h = if round % 3 == 0 {
                random_graph(&mut rng, m, 0.5)
            } else {
                let mut sizes = vec![1i64; k];
                for _ in k..m {
                    sizes[rng.gen_range(0..k)] += 1;
                }
                let t: Vec<i64> = sizes.iter().map(|&s| if rng.gen() { s } else { -s }).collect();
                random_relabel(&mut rng, &expand(&base, &ExtensionType::new(t).unwrap()).unwrap())
            };
            let constraints: Vec<PositionConstraint> = if round % 2 == 0 {
                PositionConstraint::any(k)
            } else {
                (0..k).map(|_| random_constraint(&mut rng)).collect()
            };
            let got = recognize_extension(&h, &base, &constraints).unwrap();
            assert_eq!(got, oracle(&h, &base, &constraints), "base {base:?} h {h:?} {constraints:?}");
            positives += usize::from(!got.is_empty());
        }
    }
    assert!(positives > 80, "{positives}");
}

#[test]
fn reduce_reproduces_every_atlas_graph() {
    for e in atlas() {
        let (base, t) = reduce_mixed(&e.graph);
        assert_eq!(t, t.normalized());
        assert!(brute_isomorphic(&expand(&base, &t).unwrap(), &e.graph), "{}", e.text);
    }
}

#[test]
fn contraction_is_sound_and_confluent() {
    let mut rng = StdRng::seed_from_u64(4);
    for e in atlas() {
        let (base, t) = contract_true_twins(&e.graph);
        assert!(t.entries().iter().all(|&x| x > 0));
        assert!(brute_isomorphic(&expand(&base, &t).unwrap(), &e.graph), "{}", e.text);
        assert_eq!(true_twin_classes(&base).len(), base.order());
        for _ in 0..3 {
            let (other, _) = contract_true_twins(&random_relabel(&mut rng, &e.graph));
            assert!(brute_isomorphic(&base, &other), "{}", e.text);
        }
    }
}

#[test]
fn twin_classes_match_pairwise_definition() {
    for e in atlas() {
        let g = &e.graph;
        let n = g.order();
        let closed = |v: usize| g.neighbors(v) | 1 << v;
        let p = twin_partition(g);
        let class_of = |v: usize| p.classes.iter().position(|c| c.vertices.contains(&v)).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                let twins = g.neighbors(u) == g.neighbors(v) || closed(u) == closed(v);
                assert_eq!(class_of(u) == class_of(v), twins, "{} {u} {v}", e.text);
            }
        }
        for c in &p.classes {
            let expected = match c.vertices.as_slice() {
                [_] => TwinKind::Singleton,
                [a, b, ..] if g.has_edge(*a, *b) => TwinKind::Clique,
                _ => TwinKind::Coclique,
            };
            assert_eq!(c.kind, expected);
        }
    }
}
