mod common;

use common::{atlas, graph_from_code};
use mixspec::graph6::parse_graph6_lines;
use mixspec::{parse_graph6, write_graph6, Error, Graph};
use proptest::prelude::*;

#[test]
fn atlas_round_trip_up_to_six() {
    let entries: Vec<_> = atlas().into_iter().filter(|e| e.graph.order() <= 6).collect();
    assert_eq!(entries.len(), 1 + 2 + 4 + 11 + 34 + 156);
    for e in &entries {
        assert_eq!(write_graph6(&e.graph), e.text);
    }
}

#[test]
fn atlas_round_trip_seven() {
    for e in atlas().into_iter().filter(|e| e.graph.order() == 7) {
        assert_eq!(write_graph6(&e.graph), e.text);
    }
}

#[test]
fn every_labelled_graph_on_five_vertices() {
    for code in 0..1u64 << 10 {
        let g = graph_from_code(5, code);
        assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }
}

#[test]
fn line_lists() {
    let text: String = atlas().iter().take(20).map(|e| format!("{}\n", e.text)).collect();
    assert_eq!(parse_graph6_lines(&text).unwrap().len(), 20);
    let bad = format!("{}\n\n{}", "A_", "A_x");
    match parse_graph6_lines(&bad) {
        Err(Error::Graph6 { msg, .. }) => assert!(msg.starts_with("line 3"), "{msg}"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn malformed() {
    for bad in ["", "?", "B", "A", "Bw~", "~~", "A\u{7f}"] {
        assert!(parse_graph6(bad).is_err(), "{bad:?}");
    }
}

proptest! {
    #[test]
    fn round_trip(n in 1usize..=62, seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let p: f64 = rng.gen();
        let g = common::random_graph(&mut rng, n, p);
        let text = write_graph6(&g);
        prop_assert_eq!(text.len(), 1 + (n * (n - 1) / 2).div_ceil(6));
        prop_assert_eq!(parse_graph6(&text).unwrap(), g.clone());
        prop_assert_eq!(parse_graph6(&format!(">>graph6<<{text}\n")).unwrap(), g);
    }
}

#[test]
fn order_limit() {
    assert!(Graph::empty(62).is_ok());
    assert_eq!(write_graph6(&Graph::empty(62).unwrap()).as_bytes()[0], 63 + 62);
}
