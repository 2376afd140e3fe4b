//! Replicated generation and measurement over the (algorithm, m) grid.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::classify::{classify_cpd, classify_ge, CpdClass, GeClass};
use super::config::{ExperimentConfig, SequenceMode};
use super::summary::{summarize, summarize_defined, Summary};
use crate::degree::DegreeDistribution;
use crate::error::{Error, Result};
use crate::generators::{generate_ba, Algorithm, GenerationReport, GeneratorParams};
use crate::metrics::{full_record, MetricRecord};
use crate::rng::{derive_seed, RandomSource};

/// Seed of one (algorithm, m, replicate) cell.
pub fn replicate_seed(master_seed: u64, algorithm: Algorithm, m: usize, replicate: usize) -> u64 {
    derive_seed(&[master_seed, algorithm.code(), m as u64, replicate as u64])
}

/// Result of one replicate.
#[derive(Debug, Clone, PartialEq)]
pub struct ReplicateRow {
    pub algorithm: Algorithm,
    pub m: usize,
    pub replicate: usize,
    pub seed: u64,
    pub record: MetricRecord,
    pub report: GenerationReport,
}

/// Runs a single cell in isolation. Every algorithm in replicate `i`
/// starts from the same BA network, the one the BA cell itself reports.
pub fn run_replicate(
    cfg: &ExperimentConfig,
    algorithm: Algorithm,
    m: usize,
    replicate: usize,
) -> Result<ReplicateRow> {
    let params = GeneratorParams::new(cfg.n, m)?.with_attachment(cfg.ba_attachment);
    let seed = replicate_seed(cfg.master_seed, algorithm, m, replicate);
    let source_seed = replicate_seed(cfg.master_seed, Algorithm::Ba, m, replicate);
    let (ba, ba_report) = generate_ba(&params, &mut RandomSource::new(source_seed))?;

    let (graph, report) = if algorithm == Algorithm::Ba {
        (ba, ba_report)
    } else {
        let mut rng = RandomSource::new(seed);
        let targets = match cfg.sequence_mode {
            SequenceMode::ExactReuse => ba_report.realized,
            SequenceMode::Resample => {
                DegreeDistribution::from_sequence(&ba_report.realized)?.sample(cfg.n, &mut rng)?
            }
        };
        algorithm.from_sequence(&targets, cfg.mb_order, &mut rng)?
    };

    Ok(ReplicateRow {
        algorithm,
        m,
        replicate,
        seed,
        record: full_record(&graph),
        report,
    })
}

/// Aggregates for one (algorithm, m) cell.
#[derive(Debug, Clone, PartialEq)]
pub struct CellSummary {
    pub algorithm: Algorithm,
    pub m: usize,
    pub replicates: usize,
    pub edges: Summary,
    pub components: Summary,
    pub giant_pct: Summary,
    pub cc: Summary,
    pub cpd: Summary,
    pub ge: Summary,
    pub r: Summary,
    pub ge_class: Option<GeClass>,
    pub cpd_class: Option<CpdClass>,
}

impl CellSummary {
    pub fn metrics(&self) -> [(&'static str, &Summary); 7] {
        [
            ("edges", &self.edges),
            ("components", &self.components),
            ("giant_pct", &self.giant_pct),
            ("cc", &self.cc),
            ("cpd", &self.cpd),
            ("ge", &self.ge),
            ("r", &self.r),
        ]
    }
}

/// Pooled nearest-neighbour degree for one degree class of one cell.
#[derive(Debug, Clone, PartialEq)]
pub struct KnnPoint {
    pub k: usize,
    /// Per-network class means pooled across replicates.
    pub summary: Summary,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryTable {
    pub cells: Vec<CellSummary>,
    pub knn: BTreeMap<(Algorithm, usize), Vec<KnnPoint>>,
}

impl SummaryTable {
    pub fn cell(&self, algorithm: Algorithm, m: usize) -> Option<&CellSummary> {
        self.cells
            .iter()
            .find(|c| c.algorithm == algorithm && c.m == m)
    }

    pub fn knn(&self, algorithm: Algorithm, m: usize) -> &[KnnPoint] {
        self.knn
            .get(&(algorithm, m))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }
}

fn median_class<T>(s: &Summary, classify: fn(f64) -> Result<T>) -> Option<T> {
    s.stats.and_then(|st| classify(st.median).ok())
}

fn summarize_cell(algorithm: Algorithm, m: usize, rows: &[&ReplicateRow]) -> CellSummary {
    let col = |f: fn(&MetricRecord) -> f64| -> Summary {
        summarize_defined(&rows.iter().map(|r| f(&r.record)).collect::<Vec<_>>())
    };
    let opt = |f: fn(&MetricRecord) -> Option<f64>| -> Summary {
        summarize(&rows.iter().map(|r| f(&r.record)).collect::<Vec<_>>())
    };
    let ge = opt(|r| r.global_efficiency);
    let cpd = opt(|r| r.cpd);
    CellSummary {
        algorithm,
        m,
        replicates: rows.len(),
        edges: col(|r| r.edge_count as f64),
        components: col(|r| r.component_count as f64),
        giant_pct: col(|r| r.giant_size_pct),
        cc: col(|r| r.cc_global),
        ge_class: median_class(&ge, classify_ge),
        cpd_class: median_class(&cpd, classify_cpd),
        cpd,
        ge,
        r: opt(|r| r.degree_correlation_r),
    }
}

fn pool_knn(rows: &[&ReplicateRow]) -> Vec<KnnPoint> {
    let mut by_k: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
    for row in rows {
        for (&k, &v) in &row.record.knn_by_degree {
            by_k.entry(k).or_default().push(v);
        }
    }
    by_k.into_iter()
        .map(|(k, values)| KnnPoint {
            k,
            summary: summarize_defined(&values),
        })
        .collect()
}

/// Groups rows (already sorted by algorithm, m, replicate) into cells.
pub fn summarize_rows(cfg: &ExperimentConfig, rows: &[ReplicateRow]) -> SummaryTable {
    let mut cells = Vec::new();
    let mut knn = BTreeMap::new();
    for (algorithm, m) in cfg.cells() {
        let cell_rows: Vec<&ReplicateRow> = rows
            .iter()
            .filter(|r| r.algorithm == algorithm && r.m == m)
            .collect();
        if cell_rows.is_empty() {
            continue;
        }
        cells.push(summarize_cell(algorithm, m, &cell_rows));
        knn.insert((algorithm, m), pool_knn(&cell_rows));
    }
    SummaryTable { cells, knn }
}

/// Runs every replicate of every cell on a bounded worker pool and returns
/// rows sorted by (algorithm, m, replicate).
pub fn run_replicates(cfg: &ExperimentConfig) -> Result<Vec<ReplicateRow>> {
    cfg.validate()?;
    let work: Vec<(Algorithm, usize, usize)> = cfg
        .cells()
        .into_iter()
        .flat_map(|(a, m)| (0..cfg.replicates).map(move |i| (a, m, i)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| Error::Config(format!("worker pool: {e}")))?;
    let mut rows = pool.install(|| {
        work.par_iter()
            .map(|&(a, m, i)| run_replicate(cfg, a, m, i))
            .collect::<Result<Vec<_>>>()
    })?;
    rows.sort_by_key(|r| (r.algorithm, r.m, r.replicate));
    Ok(rows)
}

/// Full experiment: replicates, aggregation, and every output file.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<(Vec<ReplicateRow>, SummaryTable)> {
    cfg.validate()?;
    std::fs::create_dir_all(&cfg.output_dir)?;
    let rows = run_replicates(cfg)?;
    let table = summarize_rows(cfg, &rows);
    super::output::write_all(cfg, &rows, &table)?;
    Ok((rows, table))
}
