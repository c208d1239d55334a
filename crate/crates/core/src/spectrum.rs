//! Exact eigenvalue census of adjacency matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{adjacency_rank, char_poly, IntMatrix};
use crate::poly::{Bound, IntPoly, Interval, RootCounter};

/// Counts of adjacency eigenvalues, with multiplicity, in `{0}`, `{-1}`,
/// `(0, inf)`, `(-inf, -1)` and `(-1, 0)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SpectralSummary {
    pub order: usize,
    pub m0: usize,
    pub m_neg1: usize,
    pub n_pos: usize,
    pub n_lt_neg1: usize,
    pub n_between: usize,
}

impl SpectralSummary {
    /// Eigenvalues different from both `0` and `-1`.
    pub fn nontrivial(&self) -> usize {
        self.n_pos + self.n_lt_neg1 + self.n_between
    }
}

/// Exact spectral summary. Ranks of `A` and `A + I` give the two
/// multiplicities; they are cross-checked against the characteristic
/// polynomial before the remaining roots are counted.
pub fn spectral_summary(g: &Graph) -> Result<SpectralSummary> {
    let n = g.order();
    let m0 = n - adjacency_rank(g, 0);
    let m_neg1 = n - adjacency_rank(g, 1);
    let p = char_poly(&IntMatrix::adjacency(g, 0));
    let at0 = p.root_mult_at(&BigInt::from(0));
    let at1 = p.root_mult_at(&BigInt::from(-1));
    if at0 != m0 || at1 != m_neg1 {
        return Err(Error::CrossCheck(format!(
            "ranks give m0={m0}, m_neg1={m_neg1}; characteristic polynomial gives {at0}, {at1}"
        )));
    }
    let trivial = IntPoly::from_roots(&[(0, m0), (-1, m_neg1)]);
    let q = p.div_exact(&trivial)?;
    let counter = RootCounter::new(&q)?;
    let zero = BigRational::from_integer(0.into());
    let minus_one = BigRational::from_integer((-1).into());
    let summary = SpectralSummary {
        order: n,
        m0,
        m_neg1,
        n_pos: counter.count(&Interval::above(zero.clone())),
        n_lt_neg1: counter.count(&Interval::below(minus_one.clone())),
        n_between: counter.count(&Interval::new(Bound::Open(minus_one), Bound::Open(zero))),
    };
    if summary.m0 + summary.m_neg1 + summary.nontrivial() != n {
        return Err(Error::CrossCheck(format!("eigenvalue counts do not sum to {n}")));
    }
    Ok(summary)
}

/// Number of eigenvalues outside `{0, -1}`, from two ranks only.
pub fn nontrivial_count(g: &Graph) -> usize {
    let n = g.order();
    let m0 = n - adjacency_rank(g, 0);
    let m_neg1 = n - adjacency_rank(g, 1);
    n - m0 - m_neg1
}

const THRESHOLDS: [(i64, i64); 8] = [(-2, 1), (-3, 2), (-1, 1), (-1, 2), (0, 1), (1, 2), (1, 1), (2, 1)];

fn counts_around(p: &IntPoly) -> Result<Vec<(usize, usize)>> {
    let counter = RootCounter::new(p)?;
    Ok(THRESHOLDS
        .iter()
        .map(|&(a, b)| {
            let t = BigRational::new(a.into(), b.into());
            (counter.count(&Interval::above(t.clone())), counter.count(&Interval::below(t)))
        })
        .collect())
}

/// Necessary consequence of eigenvalue interlacing for `G = H[subset]`: at
/// each sampled threshold `t`, `G` has no more eigenvalues above `t` (and no
/// more below `t`) than `H` does.
pub fn interlacing_check(h: &Graph, subset: &[usize]) -> Result<bool> {
    let g = h.induced_subgraph(subset)?;
    let ch = counts_around(&char_poly(&IntMatrix::adjacency(h, 0)))?;
    let cg = counts_around(&char_poly(&IntMatrix::adjacency(&g, 0)))?;
    Ok(cg.iter().zip(&ch).all(|(g, h)| g.0 <= h.0 && g.1 <= h.1))
}
