//! Scale-free networks that share one degree distribution.
//!
//! A preferential-attachment network supplies a degree sequence, four
//! further algorithms rebuild networks from that sequence, and the
//! [`metrics`] module measures how their structure differs. The
//! [`harness`] module runs the replicated comparison and writes CSV.

pub mod degree;
pub mod error;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod metrics;
pub mod rng;

pub use degree::{DegreeDistribution, DegreeSequence};
pub use error::{Error, Result};
pub use generators::{Algorithm, GenerationReport, GeneratorParams, ModelBOrder};
pub use graph::{ComponentDecomposition, Graph};
pub use metrics::MetricRecord;
pub use rng::RandomSource;
