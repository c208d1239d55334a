//! Induced-subgraph search with lexicographically least witnesses.

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::{bit, bits, Graph};

/// A pattern prepared for repeated searches.
#[derive(Clone, Debug)]
pub struct Pattern {
    graph: Graph,
    edges: usize,
    degrees: Vec<usize>,
    key: CanonicalForm,
}

impl Pattern {
    pub fn new(graph: &Graph) -> Self {
        Pattern {
            edges: graph.edge_count(),
            degrees: graph.sorted_degrees(),
            key: canonical_form(graph),
            graph: graph.clone(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Checks whether the subgraph of `host` induced by `mask` is isomorphic to the pattern.
    fn matches(&self, host: &Graph, mask: u64) -> bool {
        let mut edges2 = 0;
        let mut degs = Vec::with_capacity(self.degrees.len());
        for v in bits(mask) {
            let d = (host.neighbors(v) & mask).count_ones() as usize;
            edges2 += d;
            degs.push(d);
        }
        if edges2 != 2 * self.edges {
            return false;
        }
        degs.sort_unstable();
        degs == self.degrees && canonical_form(&host.induced_by_mask(mask)) == self.key
    }

    /// Lexicographically least vertex subset of `host` inducing a copy of the pattern.
    pub fn find_in(&self, host: &Graph) -> Option<Vec<usize>> {
        let k = self.graph.order();
        let n = host.order();
        if k > n {
            return None;
        }
        let mut chosen = Vec::with_capacity(k);
        self.search(host, 0, 0, &mut chosen)
    }

    fn search(&self, host: &Graph, start: usize, mask: u64, chosen: &mut Vec<usize>) -> Option<Vec<usize>> {
        let k = self.graph.order();
        if chosen.len() == k {
            return self.matches(host, mask).then(|| chosen.clone());
        }
        let remaining = k - chosen.len();
        for v in start..=host.order() - remaining {
            chosen.push(v);
            if let Some(found) = self.search(host, v + 1, mask | bit(v), chosen) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }
}

/// Returns the lexicographically least subset `S` with `H[S]` isomorphic to `pattern`.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    Pattern::new(pattern).find_in(host)
}
