use mixspec::catalog::path;
use mixspec::classify::{P4_CLIQUE_COCLIQUE_TRIPLES, P4_CLIQUE_QUADRUPLES};
use mixspec::dioph::{
    certify_zeros, det_direct, det_formulas, solve_bipartite_p4, solve_p4_cliques, solve_p4_one_coclique,
    verify_no_solution_patterns, MultiPoly, SignPattern,
};
use mixspec::linalg::IntMatrix;
use mixspec::{quotient_matrix, ExtensionType};
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn embedded_lists_match_solvers() {
    let iii = solve_p4_one_coclique(30).unwrap();
    let triples: Vec<Vec<i64>> = P4_CLIQUE_COCLIQUE_TRIPLES.iter().map(|&(p, q, s)| vec![p, q, s]).collect();
    assert_eq!(iii.solutions, triples);
    let iv = solve_p4_cliques(30).unwrap();
    let quads: Vec<Vec<i64>> = P4_CLIQUE_QUADRUPLES.iter().map(|&(p, q, r, s)| vec![p, q, r, s]).collect();
    assert_eq!(iv.solutions, quads);
}

#[test]
fn reports_are_certified() {
    for r in [solve_bipartite_p4(40).unwrap(), solve_p4_one_coclique(40).unwrap(), solve_p4_cliques(40).unwrap()] {
        assert!(r.rewriting_verified, "{}", r.family);
        assert!(r.alternatives_hold, "{}", r.family);
        assert!(r.search_agrees, "{}", r.family);
        assert!(r.certificate.largest_corner <= 40, "{}", r.family);
    }
    assert!(verify_no_solution_patterns(25).unwrap().all_hold);
}

#[test]
fn bounds_below_minimum_are_rejected() {
    assert!(solve_bipartite_p4(5).is_err());
    assert!(solve_p4_one_coclique(7).is_err());
    assert!(solve_p4_cliques(0).is_err());
}

#[test]
fn all_patterns_small_grid() {
    for pattern in SignPattern::all() {
        for p in 1..=4 {
            for q in 1..=4 {
                for r in 1..=4 {
                    for s in 1..=4 {
                        let x = [p, q, r, s];
                        assert_eq!(
                            det_formulas(&pattern, x).unwrap(),
                            det_direct(&pattern, x).unwrap(),
                            "{pattern} {x:?}"
                        );
                    }
                }
            }
        }
    }
}

/// Quotient matrix of the extension of `P5` of type `(1, a, b, c, 1)`, written out by hand.
fn p5_quotient(a: i64, b: i64, c: i64) -> IntMatrix {
    let own = |t: i64| if t > 0 { t - 1 } else { 0 };
    IntMatrix::from_rows_i64(&[
        vec![0, a.abs(), 0, 0, 0],
        vec![1, own(a), b.abs(), 0, 0],
        vec![0, a.abs(), own(b), c.abs(), 0],
        vec![0, 0, b.abs(), own(c), 1],
        vec![0, 0, 0, c.abs(), 0],
    ])
}

#[test]
fn p5_families_always_degenerate() {
    let p5 = path(5).unwrap();
    let zero = BigInt::from(0);
    for p in 1..=50 {
        for q in 1..=50 {
            for r in 1..=50 {
                let m = p5_quotient(p, -q, r);
                assert_eq!(m.det(), zero, "{p} {q} {r}");
                assert_eq!(m.shifted(1).det(), zero, "{p} {q} {r}");
                if p + q + r <= 60 && (p + q + r) % 7 == 0 {
                    let t = ExtensionType::new(vec![1, p, -q, r, 1]).unwrap();
                    assert_eq!(quotient_matrix(&p5, &t).unwrap(), m);
                }
            }
        }
        let m = p5_quotient(1, -p, 1);
        assert_eq!(m.det(), zero);
        assert_eq!(m.shifted(1).det(), zero);
    }
}

#[test]
fn certificate_of_simple_polynomial() {
    // (p - 3)(q - 2) + 1
    let [p, q, _, _] = MultiPoly::vars();
    let f = p.clone() * q.clone() - 2 * p - 3 * q + 7;
    let c = certify_zeros(&f, [1, 1, 1, 1], [true, true, false, false]).unwrap();
    assert_eq!(c.zeros, vec![vec![2, 3], vec![4, 1]]);
    let brute: Vec<Vec<i64>> =
        (1..=60).flat_map(|a| (1..=60).map(move |b| vec![a, b])).filter(|z| f.eval([z[0], z[1], 1, 1]) == 0).collect();
    assert_eq!(c.zeros, brute);
}

fn arb_poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-5i128..=5, 0usize..4, 0usize..4), 1..6).prop_map(|terms| {
        terms
            .into_iter()
            .fold(MultiPoly::constant(0), |acc, (c, i, j)| acc + c * (MultiPoly::var(i) * MultiPoly::var(j)))
    })
}

proptest! {
    #[test]
    fn formulas_match_determinants(idx in 0usize..10, x in prop::array::uniform4(1i64..=15)) {
        let pattern = SignPattern::all()[idx];
        prop_assert_eq!(det_formulas(&pattern, x).unwrap(), det_direct(&pattern, x).unwrap());
    }

    #[test]
    fn polynomial_ring_laws(f in arb_poly(), g in arb_poly(), x in prop::array::uniform4(-9i64..=9)) {
        prop_assert_eq!((f.clone() * g.clone()).eval(x), f.eval(x) * g.eval(x));
        prop_assert_eq!((f.clone() + g.clone()).eval(x), f.eval(x) + g.eval(x));
        prop_assert_eq!((f.clone() - g.clone()).eval(x), f.eval(x) - g.eval(x));
        prop_assert!((f.clone() - f.clone()).is_zero());
        prop_assert_eq!(f.clone() * g.clone(), g * f);
    }

    #[test]
    fn pattern_text_round_trip(idx in 0usize..10) {
        let pattern = SignPattern::all()[idx];
        prop_assert_eq!(pattern.to_string().parse::<SignPattern>().unwrap(), pattern);
    }
}
