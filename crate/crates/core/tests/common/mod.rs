#![allow(dead_code)]

use mixspec::enumerate::graphs_without_isolated;
use mixspec::{parse_graph6, Graph};
use rand::seq::SliceRandom;
use rand::Rng;

pub const ATLAS: &str = include_str!("../data/atlas.txt");

/// One atlas line: graph6 text, the graph, and the floating-point census
/// `(m0, m_neg1, n_pos, n_lt_neg1, n_between)`.
pub struct AtlasEntry {
    pub text: String,
    pub graph: Graph,
    pub census: [usize; 5],
}

pub fn atlas() -> Vec<AtlasEntry> {
    ATLAS
        .lines()
        .map(|line| {
            let mut it = line.split_whitespace();
            let text = it.next().unwrap().to_string();
            let graph = parse_graph6(&text).unwrap();
            let v: Vec<usize> = it.map(|x| x.parse().unwrap()).collect();
            AtlasEntry { text, graph, census: [v[0], v[1], v[2], v[3], v[4]] }
        })
        .collect()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn upper_bits(g: &Graph, perm: &[usize]) -> Vec<bool> {
    let n = g.order();
    let mut inv = vec![0; n];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..n {
        for i in 0..j {
            out.push(g.has_edge(inv[i], inv[j]));
        }
    }
    out
}

/// Largest upper-triangle bit string over all relabellings.
pub fn brute_canon(g: &Graph, perms: &[Vec<usize>]) -> Vec<bool> {
    perms.iter().map(|p| upper_bits(g, p)).max().unwrap()
}

/// Backtracking isomorphism test that uses nothing but adjacency and degrees.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() || g.sorted_degrees() != h.sorted_degrees() {
        return false;
    }
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = map.len();
        if v == g.order() {
            return true;
        }
        for w in 0..h.order() {
            if used[w] || g.degree(v) != h.degree(w) {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w)) {
                map.push(w);
                used[w] = true;
                if extend(g, h, map, used) {
                    return true;
                }
                map.pop();
                used[w] = false;
            }
        }
        false
    }
    extend(g, h, &mut Vec::new(), &mut vec![false; n])
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, density: f64) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).filter(|_| rng.gen_bool(density)).collect();
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_relabel<R: Rng>(rng: &mut R, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    g.permuted(&perm)
}

/// Every graph on `n` vertices up to isomorphism, from the generator.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut out = vec![Graph::empty(n).unwrap()];
    for k in 2..=n {
        for g in graphs_without_isolated(k).unwrap() {
            out.push(if k == n { g } else { g.disjoint_union(&Graph::empty(n - k).unwrap()).unwrap() });
        }
    }
    out
}

/// Edge list from bits over the pairs `(i, j)`, `i < j`.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let edges = pairs.iter().enumerate().filter(|(k, _)| code >> k & 1 == 1).map(|(_, &e)| e);
    Graph::from_edges(n, edges).unwrap()
}
