//! Mixed extensions: every base vertex becomes a clique (positive entry) or
//! a coclique (negative entry) and cells are completely joined exactly when
//! the base vertices are adjacent.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph, MAX_ORDER};
use crate::linalg::IntMatrix;

/// Signed cell sizes `(t_1, ..., t_n)`. Entries are nonzero; `1` and `-1`
/// describe the same single-vertex cell.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct ExtensionType(Vec<i64>);

impl ExtensionType {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if let Some(i) = entries.iter().position(|&t| t == 0) {
            return Err(Error::ZeroTypeEntry(i));
        }
        let total: u64 = entries.iter().map(|t| t.unsigned_abs()).sum();
        if total > MAX_ORDER as u64 {
            return Err(Error::OrderOutOfRange(total as usize));
        }
        Ok(ExtensionType(entries))
    }

    /// All-ones type of length `n` (the identity extension).
    pub fn ones(n: usize) -> Self {
        ExtensionType(vec![1; n])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn cell_sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|t| t.unsigned_abs() as usize)
    }

    /// Number of vertices of the extension.
    pub fn total(&self) -> usize {
        self.cell_sizes().sum()
    }

    /// Replaces every `-1` by `1`.
    pub fn normalized(&self) -> Self {
        ExtensionType(self.0.iter().map(|&t| if t == -1 { 1 } else { t }).collect())
    }

    pub fn reversed(&self) -> Self {
        ExtensionType(self.0.iter().rev().copied().collect())
    }
}

impl TryFrom<Vec<i64>> for ExtensionType {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        ExtensionType::new(v)
    }
}

impl From<ExtensionType> for Vec<i64> {
    fn from(t: ExtensionType) -> Self {
        t.0
    }
}

/// Comma-separated signed integers; a blank or `.` entry stands for a single vertex.
/// Surrounding parentheses are optional: `"3,.,-2"`, `"(3, ,-2)"`.
impl FromStr for ExtensionType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(s);
        let entries = s
            .split(',')
            .enumerate()
            .map(|(pos, raw)| {
                let field = raw.trim();
                if field.is_empty() || field == "." {
                    return Ok(1);
                }
                let v: i64 = field
                    .parse()
                    .map_err(|_| Error::TypeSyntax { pos, msg: format!("`{field}` is not an integer") })?;
                if v == 0 {
                    Err(Error::ZeroTypeEntry(pos))
                } else {
                    Ok(v)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        ExtensionType::new(entries)
    }
}

impl fmt::Display for ExtensionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if t.abs() == 1 {
                f.write_str(".")?;
            } else {
                write!(f, "{t}")?;
            }
        }
        Ok(())
    }
}

fn check_lengths(g: &Graph, t: &ExtensionType) -> Result<()> {
    if t.len() != g.order() {
        return Err(Error::TypeLength { expected: g.order(), found: t.len() });
    }
    Ok(())
}

/// Builds the mixed extension of `g` of type `t`. Cells are laid out in base
/// vertex order with the vertices of a cell consecutive.
pub fn expand(g: &Graph, t: &ExtensionType) -> Result<Graph> {
    check_lengths(g, t)?;
    let m = t.total();
    if m == 0 || m > MAX_ORDER {
        return Err(Error::OrderOutOfRange(m));
    }
    let cells = cell_masks(t);
    let mut adj = vec![0u64; m];
    for (i, &ti) in t.entries().iter().enumerate() {
        let joined = bits(g.neighbors(i)).fold(0, |acc, j| acc | cells[j]);
        for v in bits(cells[i]) {
            adj[v] = joined | if ti > 1 { cells[i] & !bit(v) } else { 0 };
        }
    }
    Ok(Graph::from_rows_unchecked(adj))
}

/// Vertex masks of the cells of `expand(_, t)`.
pub fn cell_masks(t: &ExtensionType) -> Vec<u64> {
    let mut start = 0;
    t.cell_sizes()
        .map(|s| {
            let mask = ((1u64 << s) - 1) << start;
            start += s;
            mask
        })
        .collect()
}

/// Block row sums of the extended adjacency matrix: `Q[i][i] = t_i - 1` for a
/// clique cell, `0` for a coclique cell, and `Q[i][j] = |t_j|` when `i ~ j`.
pub fn quotient_matrix(g: &Graph, t: &ExtensionType) -> Result<IntMatrix> {
    check_lengths(g, t)?;
    let n = g.order();
    let e = t.entries();
    let mut q = vec![vec![0i64; n]; n];
    for i in 0..n {
        q[i][i] = if e[i] > 0 { e[i] - 1 } else { 0 };
        for j in bits(g.neighbors(i)) {
            q[i][j] = e[j].abs();
        }
    }
    Ok(IntMatrix::from_rows_i64(&q))
}

/// Degree of a vertex in cell `i` of `expand(g, t)`, computed without building the graph.
pub(crate) fn cell_degree(g: &Graph, t: &[i64], i: usize) -> usize {
    let own = if t[i] > 1 { t[i] as usize - 1 } else { 0 };
    own + bits(g.neighbors(i)).map(|j| t[j].unsigned_abs() as usize).sum::<usize>()
}
