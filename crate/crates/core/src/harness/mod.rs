//! Replication engine: runs the algorithm × m grid, aggregates replicate
//! statistics, classifies efficiency and dependence, and writes CSV.

pub mod classify;
pub mod config;
pub mod experiment;
pub mod output;
pub mod summary;

pub use classify::{classify_cpd, classify_ge, CpdClass, GeClass};
pub use config::{ExperimentConfig, SequenceMode};
pub use experiment::{
    replicate_seed, run_experiment, run_replicate, run_replicates, summarize_rows, CellSummary,
    KnnPoint, ReplicateRow, SummaryTable,
};
pub use summary::{summarize, Stats, Summary};
