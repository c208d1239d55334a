//! Simple undirected graphs on at most 62 vertices, stored as one `u64`
//! neighbour mask per vertex.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order. Keeps graph6 to a single size byte and every
/// adjacency row in one machine word.
pub const MAX_ORDER: usize = 62;

/// An undirected simple graph.
///
/// Invariants: `1 <= n <= 62`, rows are symmetric, no loops, and no bit at
/// or above `n` is set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterates over the set bits of a mask in ascending order.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbour masks; the caller guarantees the invariants.
    pub(crate) fn from_rows_unchecked(adj: Vec<u64>) -> Self {
        debug_assert!(!adj.is_empty() && adj.len() <= MAX_ORDER);
        let g = Graph { n: adj.len(), adj };
        debug_assert!(g.check_invariants());
        g
    }

    pub(crate) fn check_invariants(&self) -> bool {
        let full = self.vertex_mask();
        (0..self.n).all(|i| {
            let row = self.adj[i];
            row & !full == 0 && row & bit(i) == 0 && bits(row).all(|j| self.adj[j] & bit(i) != 0)
        })
    }

    #[inline]
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Neighbour mask of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Mask with the low `n` bits set.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            bit(self.n) - 1
        }
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] >> u >> 1).map(move |k| (u, u + 1 + k)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn sorted_degrees(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adj[v] == 0).collect()
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertex_mask();
        let adj = (0..self.n).map(|v| !self.adj[v] & full & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `subset`, relabelled in ascending vertex order.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<Graph> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut verts = subset.to_vec();
        verts.sort_unstable();
        verts.dedup();
        if let Some(&v) = verts.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, order: self.n });
        }
        Ok(self.induced_by_sorted(&verts))
    }

    /// Subgraph induced by the set bits of `mask` (must be nonempty).
    pub fn induced_by_mask(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        self.induced_by_sorted(&verts)
    }

    fn induced_by_sorted(&self, verts: &[usize]) -> Graph {
        let adj = verts
            .iter()
            .map(|&u| {
                verts.iter().enumerate().filter(|&(_, &w)| self.has_edge(u, w)).fold(0u64, |acc, (j, _)| acc | bit(j))
            })
            .collect();
        Graph { n: verts.len(), adj }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.n];
        for (v, &pv) in perm.iter().enumerate() {
            adj[pv] = bits(self.adj[v]).fold(0, |acc, w| acc | bit(perm[w]));
        }
        Graph { n: self.n, adj }
    }

    /// Block-diagonal union: the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// Masks of the connected components, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen & bit(s) != 0 {
                continue;
            }
            let comp = self.reach(s);
            seen |= comp;
            comps.push(comp);
        }
        comps
    }

    fn reach(&self, s: usize) -> u64 {
        let mut comp = bit(s);
        let mut frontier = bit(s);
        while frontier != 0 {
            let next = bits(frontier).fold(0, |acc, v| acc | self.adj[v]) & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0) == self.vertex_mask()
    }

    /// Returns a 2-colouring `(side_a, side_b)` as vertex masks when one exists.
    /// Vertex 0 of every component goes to `side_a`.
    pub fn bipartition(&self) -> Option<(u64, u64)> {
        let mut side = vec![u8::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for w in bits(self.adj[v]) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        let a = (0..self.n).filter(|&v| side[v] == 0).fold(0, |m, v| m | bit(v));
        Some((a, self.vertex_mask() & !a))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Removes isolated vertices. `None` when the graph has no edges.
    pub fn without_isolated(&self) -> Option<Graph> {
        let keep = (0..self.n).filter(|&v| self.adj[v] != 0).fold(0, |m, v| m | bit(v));
        (keep != 0).then(|| self.induced_by_mask(keep))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}
