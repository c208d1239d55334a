//! Isomorph-free generation of connected graphs, one level at a time.
//!
//! Every connected graph on `n` vertices has a vertex whose removal leaves it
//! connected, so level `n` is obtained from level `n - 1` by adding a vertex
//! joined to each nonempty subset and keeping one graph per canonical form.

use std::collections::HashSet;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order supported by the generators.
pub const MAX_GENERATED: usize = 10;

fn check_order(n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_GENERATED {
        return Err(Error::OutOfRange { what: "generation order", value: n });
    }
    Ok(())
}

fn children(parent: &Graph, into: &mut HashSet<CanonicalForm>) {
    let m = parent.order();
    let mut rows = parent.rows().to_vec();
    rows.push(0);
    for s in 1..(1u64 << m) {
        let mut r = rows.clone();
        r[m] = s;
        for (v, row) in r.iter_mut().enumerate().take(m) {
            if s >> v & 1 == 1 {
                *row |= 1 << m;
            }
        }
        into.insert(canonical_form(&Graph::from_rows_unchecked(r)));
    }
}

fn next_level(parents: &[Graph]) -> Vec<Graph> {
    #[cfg(feature = "parallel")]
    let set = parents
        .par_iter()
        .fold(HashSet::new, |mut acc, p| {
            children(p, &mut acc);
            acc
        })
        .reduce(HashSet::new, |mut a, b| {
            if a.len() < b.len() {
                return b.into_iter().chain(a).collect();
            }
            a.extend(b);
            a
        });
    #[cfg(not(feature = "parallel"))]
    let set = {
        let mut acc = HashSet::new();
        for p in parents {
            children(p, &mut acc);
        }
        acc
    };
    let mut keys: Vec<CanonicalForm> = set.into_iter().collect();
    keys.sort_unstable();
    keys.into_iter().map(CanonicalForm::into_graph).collect()
}

/// Connected graphs of every order `1..=max_n`; entry `k` holds order `k + 1`,
/// each level sorted by canonical key.
pub fn connected_levels(max_n: usize) -> Result<Vec<Vec<Graph>>> {
    check_order(max_n, 1)?;
    let mut levels = vec![vec![Graph::empty(1)?]];
    while levels.len() < max_n {
        let next = next_level(levels.last().expect("nonempty"));
        levels.push(next);
    }
    Ok(levels)
}

/// One representative per isomorphism class of connected graphs on `n` vertices.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(connected_levels(n)?.pop().expect("nonempty"))
}

/// One representative per isomorphism class of graphs on `n` vertices
/// without isolated vertices, sorted by canonical key.
pub fn graphs_without_isolated(n: usize) -> Result<Vec<Graph>> {
    check_order(n, 2)?;
    let levels = connected_levels(n)?;
    graphs_without_isolated_from(n, &levels)
}

/// As [`graphs_without_isolated`], reusing already generated connected levels.
pub fn graphs_without_isolated_from(n: usize, levels: &[Vec<Graph>]) -> Result<Vec<Graph>> {
    check_order(n, 2)?;
    if levels.len() < n {
        return Err(Error::OutOfRange { what: "available levels", value: levels.len() });
    }
    let mut out = Vec::new();
    let mut parts = Vec::new();
    partitions(n, n, &mut parts, &mut |sizes| {
        // components of equal size are taken with nondecreasing catalog index
        let mut picks = vec![0usize; sizes.len()];
        loop {
            let mut g: Option<Graph> = None;
            for (&k, &i) in sizes.iter().zip(&picks) {
                let c = &levels[k - 1][i];
                g = Some(match g {
                    None => c.clone(),
                    Some(h) => h.disjoint_union(c).expect("order at most 10"),
                });
            }
            out.push(canonical_form(&g.expect("at least one component")));
            if !advance(sizes, &mut picks, levels) {
                break;
            }
        }
    });
    out.sort_unstable();
    out.dedup();
    Ok(out.into_iter().map(CanonicalForm::into_graph).collect())
}

/// Nonincreasing partitions of `n` into parts of size at least 2.
fn partitions(n: usize, max: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if n == 0 {
        f(cur);
        return;
    }
    for k in (2..=max.min(n)).rev() {
        cur.push(k);
        partitions(n - k, k, cur, f);
        cur.pop();
    }
}

/// Odometer over component choices; equal-size neighbours stay nondecreasing.
fn advance(sizes: &[usize], picks: &mut [usize], levels: &[Vec<Graph>]) -> bool {
    for pos in (0..sizes.len()).rev() {
        let limit = levels[sizes[pos] - 1].len();
        if picks[pos] + 1 < limit {
            picks[pos] += 1;
            for later in pos + 1..sizes.len() {
                picks[later] = if sizes[later] == sizes[pos] { picks[pos] } else { 0 };
            }
            return true;
        }
    }
    false
}
