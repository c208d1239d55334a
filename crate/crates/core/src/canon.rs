//! Canonical labelling by colour refinement plus individualisation search.
//!
//! Refinement splits cells by the number of neighbours in each current cell
//! until the ordered partition is equitable. When it is not discrete the
//! first non-singleton cell is individualised vertex by vertex and the
//! smallest relabelled adjacency over all leaves is kept. Two vertices of
//! the target cell that are twins (same open or same closed neighbourhood)
//! give identical subtrees, so only one of them is explored.

use crate::graph::{bit, bits, Graph};
use crate::graph6::write_graph6;

/// Isomorphism-invariant key: the graph relabelled canonically. Ordered by
/// order first, then adjacency rows lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm(Graph);

impl CanonicalForm {
    /// The canonical representative of the isomorphism class.
    pub fn graph(&self) -> &Graph {
        &self.0
    }

    pub fn into_graph(self) -> Graph {
        self.0
    }

    /// Byte key: graph6 of the canonical representative.
    pub fn to_bytes(&self) -> Vec<u8> {
        write_graph6(&self.0).into_bytes()
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(g.permuted(&canonical_labeling(g)))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && g.sorted_degrees() == h.sorted_degrees()
        && canonical_form(g) == canonical_form(h)
}

/// Returns `perm` such that `g.permuted(&perm)` is the canonical form.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut search = Search { g, twin_rep: twin_representatives(g), best_rows: Vec::new(), best_perm: Vec::new() };
    let mut colors = vec![0u8; n];
    refine(g, &mut colors);
    search.descend(colors);
    search.best_perm
}

/// Smallest vertex of each vertex's twin class (true or false twins).
fn twin_representatives(g: &Graph) -> Vec<usize> {
    let n = g.order();
    (0..n)
        .map(|v| {
            let open = g.neighbors(v);
            let closed = open | bit(v);
            (0..v).find(|&u| g.neighbors(u) == open || g.neighbors(u) | bit(u) == closed).unwrap_or(v)
        })
        .collect()
}

struct Search<'a> {
    g: &'a Graph,
    twin_rep: Vec<usize>,
    best_rows: Vec<u64>,
    best_perm: Vec<usize>,
}

impl Search<'_> {
    fn descend(&mut self, colors: Vec<u8>) {
        let n = self.g.order();
        let ncells = colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        if ncells == n {
            self.leaf(&colors);
            return;
        }
        let mut sizes = [0u8; 64];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let target = (0..ncells).find(|&c| sizes[c] > 1).expect("partition not discrete") as u8;
        let mut tried: u64 = 0;
        for v in 0..n {
            if colors[v] != target || tried & bit(self.twin_rep[v]) != 0 {
                continue;
            }
            tried |= bit(self.twin_rep[v]);
            let mut child = colors.clone();
            for (w, c) in child.iter_mut().enumerate() {
                if *c > target || (*c == target && w != v) {
                    *c += 1;
                }
            }
            refine(self.g, &mut child);
            self.descend(child);
        }
    }

    fn leaf(&mut self, colors: &[u8]) {
        let n = self.g.order();
        let mut rows = vec![0u64; n];
        for v in 0..n {
            rows[colors[v] as usize] = bits(self.g.neighbors(v)).fold(0, |acc, w| acc | bit(colors[w] as usize));
        }
        if self.best_rows.is_empty() || rows < self.best_rows {
            self.best_rows = rows;
            self.best_perm = colors.iter().map(|&c| c as usize).collect();
        }
    }
}

/// Refines `colors` (cells numbered 0..k in order) to the coarsest equitable
/// ordered partition below it. The new order depends only on old colours and
/// neighbour counts, never on vertex labels.
fn refine(g: &Graph, colors: &mut [u8]) {
    let n = g.order();
    let mut ncells = colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
    let mut sig = vec![0u8; n * (n + 1)];
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        if ncells == n {
            return;
        }
        let mut masks = [0u64; 64];
        for (v, &c) in colors.iter().enumerate() {
            masks[c as usize] |= bit(v);
        }
        let width = ncells + 1;
        for v in 0..n {
            let row = &mut sig[v * width..(v + 1) * width];
            row[0] = colors[v];
            let nb = g.neighbors(v);
            for c in 0..ncells {
                row[c + 1] = (nb & masks[c]).count_ones() as u8;
            }
        }
        order.sort_unstable_by(|&a, &b| sig[a * width..(a + 1) * width].cmp(&sig[b * width..(b + 1) * width]));
        let mut next = 0u8;
        let mut prev: Option<usize> = None;
        for &v in &order {
            if let Some(p) = prev {
                if sig[p * width..(p + 1) * width] != sig[v * width..(v + 1) * width] {
                    next += 1;
                }
            }
            colors[v] = next;
            prev = Some(v);
        }
        let refined = next as usize + 1;
        if refined == ncells {
            return;
        }
        ncells = refined;
    }
}
