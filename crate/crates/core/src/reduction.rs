//! Twins, twin contraction and recognition of mixed extensions.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};
use crate::mixext::{cell_degree, expand, ExtensionType};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TwinKind {
    /// Pairwise adjacent vertices with equal closed neighbourhoods.
    Clique,
    /// Pairwise nonadjacent vertices with equal open neighbourhoods.
    Coclique,
    Singleton,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TwinClass {
    pub vertices: Vec<usize>,
    pub kind: TwinKind,
}

/// Partition of the vertex set into twin classes, ordered by least vertex.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TwinPartition {
    pub classes: Vec<TwinClass>,
}

impl TwinPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn non_singleton(&self) -> impl Iterator<Item = &TwinClass> {
        self.classes.iter().filter(|c| c.kind != TwinKind::Singleton)
    }
}

fn group_by_key(g: &Graph, key: impl Fn(usize) -> u64, kind: TwinKind) -> TwinPartition {
    let mut groups: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for v in 0..g.order() {
        groups.entry(key(v)).or_default().push(v);
    }
    let mut classes: Vec<TwinClass> = groups
        .into_values()
        .map(|vertices| {
            let kind = if vertices.len() > 1 { kind } else { TwinKind::Singleton };
            TwinClass { vertices, kind }
        })
        .collect();
    classes.sort_by_key(|c| c.vertices[0]);
    TwinPartition { classes }
}

/// Classes of identical rows of `A + I`.
pub fn true_twin_classes(g: &Graph) -> TwinPartition {
    group_by_key(g, |v| g.neighbors(v) | bit(v), TwinKind::Clique)
}

/// Classes of identical rows of `A`.
pub fn false_twin_classes(g: &Graph) -> TwinPartition {
    group_by_key(g, |v| g.neighbors(v), TwinKind::Coclique)
}

/// Both kinds together. A vertex cannot have a true twin and a false twin at
/// the same time, so the nontrivial classes of the two partitions are disjoint.
pub fn twin_partition(g: &Graph) -> TwinPartition {
    let tt = true_twin_classes(g);
    let ft = false_twin_classes(g);
    let mut classes: Vec<TwinClass> = tt.non_singleton().chain(ft.non_singleton()).cloned().collect();
    let covered = classes.iter().flat_map(|c| c.vertices.iter()).fold(0u64, |m, &v| m | bit(v));
    classes
        .extend(bits(g.vertex_mask() & !covered).map(|v| TwinClass { vertices: vec![v], kind: TwinKind::Singleton }));
    classes.sort_by_key(|c| c.vertices[0]);
    TwinPartition { classes }
}

/// Contracts true-twin classes to single vertices and returns the contracted
/// graph with the clique sizes, so that `expand(base, t)` reproduces `g`.
pub fn contract_true_twins(g: &Graph) -> (Graph, ExtensionType) {
    let mut cur = g.clone();
    let mut sizes: Vec<i64> = vec![1; g.order()];
    loop {
        let classes = true_twin_classes(&cur);
        if classes.len() == cur.order() {
            break;
        }
        let reps: Vec<usize> = classes.classes.iter().map(|c| c.vertices[0]).collect();
        sizes = classes.classes.iter().map(|c| c.vertices.iter().map(|&v| sizes[v]).sum()).collect();
        cur = cur.induced_subgraph(&reps).expect("nonempty");
    }
    (cur, ExtensionType::new(sizes).expect("sizes are positive and bounded"))
}

/// Repeatedly merges true-twin classes until no two vertices are true twins.
pub fn contract_true_twins_fixpoint(g: &Graph) -> Graph {
    contract_true_twins(g).0
}

/// Merges twin pairs one at a time, always the lowest eligible pair and true
/// twins before false twins, until no pair is eligible. A true-twin merge needs
/// both cells to be cliques or single vertices, a false-twin merge both cells
/// to be cocliques or single vertices. The result satisfies `expand(base, t) = g`
/// up to isomorphism; it need not be the only such reduction.
pub fn reduce_mixed(g: &Graph) -> (Graph, ExtensionType) {
    let mut cur = g.clone();
    let mut t: Vec<i64> = vec![1; g.order()];
    loop {
        let n = cur.order();
        let pair = find_pair(&cur, &t, true).or_else(|| find_pair(&cur, &t, false));
        let Some((u, v, clique)) = pair else {
            break;
        };
        let size = t[u].abs() + t[v].abs();
        t[u] = if clique { size } else { -size };
        t.remove(v);
        let keep: Vec<usize> = (0..n).filter(|&x| x != v).collect();
        cur = cur.induced_subgraph(&keep).expect("nonempty");
    }
    (cur, ExtensionType::new(t).expect("sizes are nonzero and bounded").normalized())
}

fn find_pair(g: &Graph, t: &[i64], clique: bool) -> Option<(usize, usize, bool)> {
    let n = g.order();
    let ok = |x: usize| if clique { t[x] > 0 || t[x] == -1 } else { t[x] < 0 || t[x] == 1 };
    for u in 0..n {
        if !ok(u) {
            continue;
        }
        for v in u + 1..n {
            let twins = if clique {
                g.has_edge(u, v) && g.neighbors(u) | bit(u) == g.neighbors(v) | bit(v)
            } else {
                !g.has_edge(u, v) && g.neighbors(u) == g.neighbors(v)
            };
            if twins && ok(v) {
                return Some((u, v, clique));
            }
        }
    }
    None
}

/// Constraint on one entry of a type vector. Single-vertex cells are written
/// as `1` and satisfy `Clique` and `Coclique` constraints with `min <= 1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PositionConstraint {
    Any,
    /// A clique cell with at least `min` vertices.
    Clique {
        min: usize,
    },
    /// A coclique cell with at least `min` vertices.
    Coclique {
        min: usize,
    },
    /// Exactly this entry; `1` and `-1` both mean a single vertex.
    Exact(i64),
}

impl PositionConstraint {
    /// Whether the normalized entry `t` satisfies the constraint.
    pub fn admits(self, t: i64) -> bool {
        let size = t.unsigned_abs() as usize;
        match self {
            PositionConstraint::Any => true,
            PositionConstraint::Clique { min } => (t > 0 || size == 1) && size >= min,
            PositionConstraint::Coclique { min } => (t < 0 || size == 1) && size >= min,
            PositionConstraint::Exact(e) => {
                if e.abs() == 1 {
                    size == 1
                } else {
                    t == e
                }
            }
        }
    }

    pub fn any(n: usize) -> Vec<PositionConstraint> {
        vec![PositionConstraint::Any; n]
    }
}

/// All normalized types `t` admitted by `constraints` with `expand(base, t)`
/// isomorphic to `h`, in increasing order.
pub fn recognize_extension(h: &Graph, base: &Graph, constraints: &[PositionConstraint]) -> Result<Vec<ExtensionType>> {
    let k = base.order();
    if constraints.len() != k {
        return Err(Error::TypeLength { expected: k, found: constraints.len() });
    }
    let m = h.order();
    if m < k || twin_partition(h).len() > k {
        return Ok(Vec::new());
    }
    let target = canonical_form(h);
    let degrees = h.sorted_degrees();
    let edges2 = 2 * h.edge_count();
    let mut found = Vec::new();
    let mut sizes = vec![0usize; k];
    compositions(m, k, 0, &mut sizes, &mut |sizes| {
        let mut t: Vec<i64> = sizes.iter().map(|&s| s as i64).collect();
        let flexible: Vec<usize> = (0..k).filter(|&i| sizes[i] > 1).collect();
        for signs in 0u32..(1 << flexible.len()) {
            for (b, &i) in flexible.iter().enumerate() {
                t[i] = if signs >> b & 1 == 1 { -(sizes[i] as i64) } else { sizes[i] as i64 };
            }
            if !t.iter().zip(constraints).all(|(&ti, c)| c.admits(ti)) {
                continue;
            }
            if !degrees_match(base, &t, edges2, &degrees) {
                continue;
            }
            let ty = ExtensionType::new(t.clone()).expect("valid entries");
            if canonical_form(&expand(base, &ty).expect("lengths agree")) == target {
                found.push(ty);
            }
        }
    });
    found.sort();
    Ok(found)
}

fn degrees_match(base: &Graph, t: &[i64], edges2: usize, sorted: &[usize]) -> bool {
    let mut total = 0;
    let mut degs = Vec::with_capacity(sorted.len());
    for i in 0..t.len() {
        let d = cell_degree(base, t, i);
        let s = t[i].unsigned_abs() as usize;
        total += d * s;
        degs.extend(std::iter::repeat_n(d, s));
    }
    if total != edges2 {
        return false;
    }
    degs.sort_unstable();
    degs == sorted
}

/// Compositions of `m` into `sizes.len()` positive parts, lexicographically.
fn compositions(m: usize, k: usize, i: usize, sizes: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if i + 1 == k {
        sizes[i] = m;
        f(sizes);
        return;
    }
    for s in 1..=m - (k - i - 1) {
        sizes[i] = s;
        compositions(m - s, k, i + 1, sizes, f);
    }
}
