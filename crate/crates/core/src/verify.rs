//! Cross-validation of spectral membership against constructive classification.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{classify, in_class_g};
use crate::enumerate::{connected_levels, graphs_without_isolated_from, MAX_GENERATED};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::write_graph6;

/// Graphs are handed to workers in fixed chunks of this many, in catalog order.
pub const CHUNK: usize = 512;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub jobs: usize,
    /// Graphs to check instead of generating them.
    pub catalog: Option<Vec<Graph>>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_n: 8, jobs: 1, catalog: None }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LevelCounts {
    pub order: usize,
    pub connected: bool,
    pub examined: usize,
    pub spectral_members: usize,
    pub constructive_members: usize,
    pub discrepancies: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Discrepancy {
    pub graph6: String,
    pub spectral: bool,
    pub constructive: bool,
}

/// Verification outcome. The serialized form depends only on the graphs
/// checked, never on timing or thread count.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VerifyReport {
    pub version: String,
    pub max_n: usize,
    pub source: String,
    pub levels: Vec<LevelCounts>,
    pub discrepancies: Vec<Discrepancy>,
    #[serde(skip)]
    pub timings: Vec<(usize, bool, Duration)>,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

fn verdicts(graphs: &[Graph], jobs: usize) -> Result<Vec<(bool, bool)>> {
    let check = |g: &Graph| (in_class_g(g), !classify(g).is_empty());
    #[cfg(feature = "parallel")]
    {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::CrossCheck(format!("thread pool: {e}")))?;
        Ok(pool.install(|| {
            graphs
                .par_chunks(CHUNK)
                .map(|chunk| chunk.iter().map(check).collect::<Vec<_>>())
                .collect::<Vec<_>>()
                .concat()
        }))
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = jobs;
        Ok(graphs.iter().map(check).collect())
    }
}

fn check_level(order: usize, connected: bool, graphs: &[Graph], jobs: usize, report: &mut VerifyReport) -> Result<()> {
    let start = Instant::now();
    let v = verdicts(graphs, jobs)?;
    let mut counts = LevelCounts {
        order,
        connected,
        examined: graphs.len(),
        spectral_members: 0,
        constructive_members: 0,
        discrepancies: 0,
    };
    for (g, &(spectral, constructive)) in graphs.iter().zip(&v) {
        counts.spectral_members += usize::from(spectral);
        counts.constructive_members += usize::from(constructive);
        if spectral != constructive {
            counts.discrepancies += 1;
            report.discrepancies.push(Discrepancy { graph6: write_graph6(g), spectral, constructive });
        }
    }
    report.levels.push(counts);
    report.timings.push((order, connected, start.elapsed()));
    Ok(())
}

/// Checks that spectral membership and constructive classification agree on
/// every connected graph of order `2..=max_n` and every disconnected graph of
/// those orders without isolated vertices, or on every graph of a catalog.
pub fn run_verify(config: &VerifyConfig) -> Result<VerifyReport> {
    if config.max_n < 2 || config.max_n > MAX_GENERATED {
        return Err(Error::OutOfRange { what: "verification order", value: config.max_n });
    }
    let mut report = VerifyReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        max_n: config.max_n,
        source: if config.catalog.is_some() { "catalog" } else { "generated" }.to_string(),
        levels: Vec::new(),
        discrepancies: Vec::new(),
        timings: Vec::new(),
    };
    if let Some(catalog) = &config.catalog {
        let mut groups: BTreeMap<(usize, bool), Vec<Graph>> = BTreeMap::new();
        for g in catalog.iter().filter(|g| g.order() <= config.max_n) {
            groups.entry((g.order(), !g.is_connected())).or_default().push(g.clone());
        }
        for ((order, disconnected), graphs) in groups {
            check_level(order, !disconnected, &graphs, config.jobs, &mut report)?;
        }
        return Ok(report);
    }
    let levels = connected_levels(config.max_n)?;
    for n in 2..=config.max_n {
        check_level(n, true, &levels[n - 1], config.jobs, &mut report)?;
        let disconnected: Vec<Graph> =
            graphs_without_isolated_from(n, &levels)?.into_iter().filter(|g| !g.is_connected()).collect();
        check_level(n, false, &disconnected, config.jobs, &mut report)?;
    }
    Ok(report)
}
