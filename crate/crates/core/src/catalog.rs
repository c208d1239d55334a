//! Named graph families and the fifteen forbidden induced subgraphs.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mixext::{expand, ExtensionType};

pub fn complete(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("C", "a cycle needs at least 3 vertices"));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Complete multipartite graph with the given part sizes, parts laid out in order.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(invalid("multipartite", "part sizes must be positive"));
    }
    let t = ExtensionType::new(parts.iter().map(|&p| -(p as i64)).collect())?;
    expand(&complete(parts.len())?, &t)
}

/// The pineapple `K_{p+1}^q`: a clique on `p + 1` vertices with `q` pendant
/// vertices at one clique vertex. Equal to `expand(P3, (p, 1, -q))`.
pub fn pineapple(p: usize, q: usize) -> Result<Graph> {
    if p == 0 || q == 0 {
        return Err(invalid("pineapple", "p and q must be positive"));
    }
    expand(&path(3)?, &ExtensionType::new(vec![p as i64, 1, -(q as i64)])?)
}

/// The complete split graph `CS_{p,q}`: a coclique of order `p` joined to a
/// clique of order `q`. Equal to `expand(K2, (-p, q))`.
pub fn complete_split(p: usize, q: usize) -> Result<Graph> {
    if p == 0 || q == 0 {
        return Err(invalid("complete_split", "p and q must be positive"));
    }
    expand(&complete(2)?, &ExtensionType::new(vec![-(p as i64), q as i64])?)
}

fn invalid(name: &str, msg: &str) -> Error {
    Error::InvalidParams { name: name.to_string(), msg: msg.to_string() }
}

/// Names of the forbidden induced subgraphs, in catalog order.
pub const FORBIDDEN_NAMES: [&str; 15] =
    ["C5", "P6", "G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "G9", "G10", "G11", "G12", "G13"];

/// Which half of the interlacing argument rules a forbidden graph out.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Obstruction {
    /// At least two eigenvalues below -1.
    TwoBelowMinusOne,
    /// At least three positive eigenvalues.
    ThreePositive,
}

/// A catalog entry.
#[derive(Clone, Debug)]
pub struct ForbiddenGraph {
    pub name: &'static str,
    pub graph: Graph,
    pub obstruction: Obstruction,
}

/// Edge lists read off the drawings, vertex labels arbitrary.
fn forbidden_edges(name: &str) -> Option<(usize, &'static [(usize, usize)])> {
    Some(match name {
        "C5" => (5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
        "P6" => (6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]),
        // bull: triangle 0-1-2 with pendants 3 at 1 and 4 at 2
        "G1" => (5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]),
        // house: square 1-3-4-2 with roof vertex 0 on edge 1-2
        "G2" => (5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (3, 4)]),
        // diamond 0,1,2,3 (hinges 0,1) with pendant 4 at hinge 0
        "G3" => (5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3)]),
        // gem: path 1-2-3-4 plus dominating vertex 0
        "G4" => (5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)]),
        // wheel: square 1-2-3-4 plus hub 0
        "G5" => (5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (1, 4)]),
        // two triangles sharing 0, pendant 5 at 0
        "G6" => (6, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (0, 5)]),
        // K_{2,2} with two adjacent base vertices doubled into cliques {0,1}, {2,3}
        "G7" => (6, &[(0, 1), (2, 3), (0, 2), (0, 3), (1, 2), (1, 3), (0, 4), (1, 4), (2, 5), (3, 5), (4, 5)]),
        // path 0-1-2-3, vertex 4 ~ {1,2,3}, vertex 5 ~ {1,3}
        "G8" => (6, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 4), (3, 4), (1, 5), (3, 5)]),
        // triangle 2-3-4, pendant path 2-1-0, pendant 5 at 2
        "G9" => (6, &[(0, 1), (1, 2), (2, 3), (2, 4), (3, 4), (2, 5)]),
        // path 0-1-2-3 with leaves 4, 5 at 3
        "G10" => (6, &[(0, 1), (1, 2), (2, 3), (3, 4), (3, 5)]),
        // square 2-3-5-4 with pendant path 2-1-0
        "G11" => (6, &[(0, 1), (1, 2), (2, 3), (3, 5), (4, 5), (2, 4)]),
        // G10 plus the edge 4-5
        "G12" => (6, &[(0, 1), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]),
        // diamond 1,2,3,4 (hinges 2,3) with pendants 0 at 1 and 5 at 4
        "G13" => (6, &[(0, 1), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5)]),
        _ => return None,
    })
}

fn obstruction(name: &str) -> Obstruction {
    match name {
        "G6" | "G7" | "G8" | "G9" | "G12" | "G13" => Obstruction::ThreePositive,
        _ => Obstruction::TwoBelowMinusOne,
    }
}

pub fn forbidden_graph(name: &str) -> Option<ForbiddenGraph> {
    let name = FORBIDDEN_NAMES.iter().find(|&&n| n == name)?;
    let (n, edges) = forbidden_edges(name)?;
    Some(ForbiddenGraph {
        name,
        graph: Graph::from_edges(n, edges.iter().copied()).expect("catalog edge lists are valid"),
        obstruction: obstruction(name),
    })
}

/// All fifteen forbidden graphs in catalog order.
pub fn forbidden_catalog() -> Vec<ForbiddenGraph> {
    FORBIDDEN_NAMES.iter().map(|n| forbidden_graph(n).expect("known name")).collect()
}

/// Looks up a named graph.
///
/// Recognised names: `K` (order), `P` (order), `C` (order), `empty` (order),
/// `Kpq` (p, q), `multipartite` (parts...), `pineapple` (p, q),
/// `complete_split` or `CS` (p, q), and the catalog names `C5`, `P6`, `G1`..`G13`.
pub fn named_graph(name: &str, params: &[usize]) -> Result<Graph> {
    if params.is_empty() {
        if let Some(f) = forbidden_graph(name) {
            return Ok(f.graph);
        }
    }
    let want = |k: usize| -> Result<()> {
        if params.len() == k {
            Ok(())
        } else {
            Err(invalid(name, &format!("expected {k} parameter(s), got {}", params.len())))
        }
    };
    match name {
        "K" => want(1).and_then(|_| complete(params[0])),
        "P" => want(1).and_then(|_| path(params[0])),
        "C" => want(1).and_then(|_| cycle(params[0])),
        "empty" => want(1).and_then(|_| Graph::empty(params[0])),
        "Kpq" => want(2).and_then(|_| complete_multipartite(params)),
        "multipartite" => complete_multipartite(params),
        "pineapple" => want(2).and_then(|_| pineapple(params[0], params[1])),
        "complete_split" | "CS" => want(2).and_then(|_| complete_split(params[0], params[1])),
        _ => Err(Error::UnknownGraph(name.to_string())),
    }
}

/// Splits at `+` signs outside parentheses.
fn top_level_terms(spec: &str) -> Vec<&str> {
    let mut terms = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in spec.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' if depth == 0 => {
                terms.push(&spec[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    terms.push(&spec[start..]);
    terms
}

/// Parses a graph name such as `P4`, `K3`, `C5`, `G7`, `pineapple(3,2)` or `Kpq(2,3)`.
/// Disjoint unions are written with `+` and repeated copies with a count
/// prefix: `K1+K2`, `2K1`.
pub fn parse_named(spec: &str) -> Result<Graph> {
    let spec = spec.trim();
    let parts = top_level_terms(spec);
    if parts.len() > 1 {
        let mut parts = parts.into_iter().map(parse_named);
        let first = parts.next().expect("at least two terms")?;
        return parts.try_fold(first, |g, h| g.disjoint_union(&h?));
    }
    let copies = spec.find(|c: char| !c.is_ascii_digit()).unwrap_or(0);
    if copies > 0 {
        let k: usize = spec[..copies].parse().map_err(|_| Error::UnknownGraph(spec.to_string()))?;
        if k == 0 {
            return Err(invalid(spec, "copy count must be positive"));
        }
        let one = parse_named(&spec[copies..])?;
        let mut g = one.clone();
        for _ in 1..k {
            g = g.disjoint_union(&one)?;
        }
        return Ok(g);
    }
    if let Some(f) = forbidden_graph(spec) {
        return Ok(f.graph);
    }
    if let Some(open) = spec.find('(') {
        let name = &spec[..open];
        let inner = spec[open + 1..].strip_suffix(')').ok_or_else(|| Error::UnknownGraph(spec.to_string()))?;
        let params = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| invalid(name, &format!("`{p}` is not a count"))))
            .collect::<Result<Vec<_>>>()?;
        return named_graph(name, &params);
    }
    let split = spec.find(|c: char| c.is_ascii_digit()).unwrap_or(spec.len());
    let (name, digits) = spec.split_at(split);
    if matches!(name, "K" | "P" | "C") && !digits.is_empty() {
        let n = digits.parse::<usize>().map_err(|_| Error::UnknownGraph(spec.to_string()))?;
        return named_graph(name, &[n]);
    }
    Err(Error::UnknownGraph(spec.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    #[test]
    fn pineapple_shape() {
        let g = pineapple(3, 2).unwrap();
        assert_eq!((g.order(), g.edge_count()), (6, 8));
        let mut d = g.sorted_degrees();
        d.reverse();
        assert_eq!(d, vec![5, 3, 3, 3, 1, 1]);
    }

    #[test]
    fn complete_split_is_multipartite() {
        let g = complete_split(2, 3).unwrap();
        assert!(is_isomorphic(&g, &complete_multipartite(&[2, 1, 1, 1]).unwrap()));
    }

    #[test]
    fn bull() {
        let g1 = forbidden_graph("G1").unwrap().graph;
        let tri = g1.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(tri, complete(3).unwrap());
        assert_eq!(g1.sorted_degrees(), vec![1, 1, 2, 3, 3]);
    }

    #[test]
    fn catalog_sizes() {
        let cat = forbidden_catalog();
        assert_eq!(cat.len(), 15);
        let edges: Vec<usize> = cat.iter().map(|f| f.graph.edge_count()).collect();
        assert_eq!(edges, vec![5, 5, 5, 6, 6, 7, 8, 7, 11, 8, 6, 5, 6, 6, 7]);
        assert!(cat.iter().all(|f| f.graph.is_connected()));
    }

    #[test]
    fn g6_and_g7_are_extensions() {
        use crate::mixext::expand;
        let star = complete_multipartite(&[1, 3]).unwrap();
        // star vertex 0 is the centre; double two leaves
        let g6 = expand(&star, &"1,2,2,1".parse().unwrap()).unwrap();
        assert!(is_isomorphic(&g6, &forbidden_graph("G6").unwrap().graph));
        let c4 = cycle(4).unwrap();
        let g7 = expand(&c4, &"2,2,1,1".parse().unwrap()).unwrap();
        assert!(is_isomorphic(&g7, &forbidden_graph("G7").unwrap().graph));
    }

    #[test]
    fn parse_names() {
        assert_eq!(parse_named("P4").unwrap(), path(4).unwrap());
        assert_eq!(parse_named("K1").unwrap(), complete(1).unwrap());
        assert!(is_isomorphic(&parse_named("pineapple(3,2)").unwrap(), &pineapple(3, 2).unwrap()));
        assert!(is_isomorphic(&parse_named("Kpq(2,3)").unwrap(), &complete_multipartite(&[2, 3]).unwrap()));
        assert_eq!(parse_named("G13").unwrap().order(), 6);
        assert!(matches!(parse_named("Q7"), Err(Error::UnknownGraph(_))));
        let u = parse_named("K1+K2").unwrap();
        assert_eq!((u.order(), u.edges().collect::<Vec<_>>()), (3, vec![(1, 2)]));
        assert_eq!(parse_named("3K1").unwrap(), Graph::empty(3).unwrap());
        assert!(is_isomorphic(&parse_named("2P3+K2").unwrap(), &parse_named("P3+K2+P3").unwrap()));
        assert!(matches!(named_graph("pineapple", &[1]), Err(Error::InvalidParams { .. })));
        assert!(matches!(named_graph("C", &[2]), Err(Error::InvalidParams { .. })));
    }
}
