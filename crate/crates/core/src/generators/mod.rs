//! Network construction algorithms that share one degree distribution.
//!
//! `ba` grows a preferential-attachment network; the other four rebuild a
//! network from a target degree sequence (normally the BA network's own).
//! Every generator is deterministic given its inputs and `RandomSource`.

mod ba;
mod kalisky;
mod model_a;
mod model_b;
mod mr;
mod pool;

use std::fmt;
use std::str::FromStr;

pub use ba::{generate_ba, Attachment};
pub use kalisky::generate_kalisky;
pub use model_a::generate_model_a;
pub use model_b::{generate_model_b, generate_model_b_with, ModelBOrder};
pub use mr::generate_mr;

use crate::degree::DegreeSequence;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::RandomSource;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorParams {
    /// Total vertex count.
    pub n: usize,
    /// Edges brought by each added vertex.
    pub m: usize,
    pub attachment: Attachment,
}

impl GeneratorParams {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if m == 0 || m >= n {
            return Err(Error::invalid(format!("need 1 <= m < n, got n={n}, m={m}")));
        }
        Ok(Self {
            n,
            m,
            attachment: Attachment::default(),
        })
    }

    pub fn with_attachment(self, attachment: Attachment) -> Self {
        Self { attachment, ..self }
    }
}

/// One "pick the vertex with most open links and exhaust it" step of
/// Model A or Model B.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExhaustStep {
    pub vertex: usize,
    /// Remaining degree when the vertex was picked.
    pub requested: usize,
    /// Partners actually linked in this step.
    pub partners: Vec<usize>,
}

/// Diagnostics for one generator run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenerationReport {
    pub target: DegreeSequence,
    pub realized: DegreeSequence,
    /// Stubs dropped without being paired.
    pub discarded_stubs: usize,
    /// Stub pairs consumed without producing an edge (self or duplicate).
    pub rejected_pairs: usize,
    /// Processing trace (Model A / Model B only).
    pub steps: Vec<ExhaustStep>,
}

impl GenerationReport {
    fn finish(
        target: DegreeSequence,
        graph: &Graph,
        discarded_stubs: usize,
        rejected_pairs: usize,
        steps: Vec<ExhaustStep>,
    ) -> Self {
        Self {
            target,
            realized: DegreeSequence::of(graph),
            discarded_stubs,
            rejected_pairs,
            steps,
        }
    }

    /// Stubs lost between target and realized degrees.
    pub fn shortfall(&self) -> usize {
        self.target.sum().saturating_sub(self.realized.sum())
    }

    /// `Σ target − Σ realized = discarded + 2·rejected`, and no vertex
    /// exceeds its target.
    pub fn accounting_holds(&self) -> bool {
        let per_vertex = self
            .realized
            .as_slice()
            .iter()
            .zip(self.target.as_slice())
            .all(|(r, t)| r <= t);
        per_vertex
            && self.target.sum()
                == self.realized.sum() + self.discarded_stubs + 2 * self.rejected_pairs
    }

    pub const CSV_HEADER: &'static str =
        "n,edges,target_sum,realized_sum,discarded_stubs,rejected_pairs,shortfall";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.target.len(),
            self.realized.sum() / 2,
            self.target.sum(),
            self.realized.sum(),
            self.discarded_stubs,
            self.rejected_pairs,
            self.shortfall()
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algorithm {
    Ba,
    Mr,
    Kalisky,
    Ma,
    Mb,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Ba,
        Algorithm::Mr,
        Algorithm::Kalisky,
        Algorithm::Ma,
        Algorithm::Mb,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Algorithm::Ba => "BA",
            Algorithm::Mr => "MR",
            Algorithm::Kalisky => "KALISKY",
            Algorithm::Ma => "MA",
            Algorithm::Mb => "MB",
        }
    }

    /// Stable numeric code used in seed derivation.
    pub fn code(self) -> u64 {
        match self {
            Algorithm::Ba => 1,
            Algorithm::Mr => 2,
            Algorithm::Kalisky => 3,
            Algorithm::Ma => 4,
            Algorithm::Mb => 5,
        }
    }

    /// Rebuilds a graph from `targets`. BA cannot be driven by a degree
    /// sequence and is rejected here.
    pub fn from_sequence(
        self,
        targets: &DegreeSequence,
        mb_order: ModelBOrder,
        rng: &mut RandomSource,
    ) -> Result<(Graph, GenerationReport)> {
        match self {
            Algorithm::Ba => Err(Error::invalid("BA grows its own degree sequence")),
            Algorithm::Mr => generate_mr(targets, rng),
            Algorithm::Kalisky => generate_kalisky(targets, rng),
            Algorithm::Ma => generate_model_a(targets, rng),
            Algorithm::Mb => generate_model_b_with(targets, mb_order, rng),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ba" => Ok(Algorithm::Ba),
            "mr" => Ok(Algorithm::Mr),
            "kalisky" => Ok(Algorithm::Kalisky),
            "ma" => Ok(Algorithm::Ma),
            "mb" => Ok(Algorithm::Mb),
            other => Err(Error::Config(format!("unknown algorithm `{other}`"))),
        }
    }
}

fn require_non_empty(targets: &DegreeSequence) -> Result<Graph> {
    if targets.is_empty() {
        return Err(Error::invalid("empty degree sequence"));
    }
    Graph::new(targets.len())
}
