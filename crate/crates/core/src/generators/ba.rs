//! Preferential-attachment growth.
//!
//! Starts from a single vertex and adds `n - 1` vertices, each linking to
//! `m` distinct existing vertices drawn with probability proportional to an
//! attachment weight (see [`Attachment`]). While fewer than `m` vertices
//! exist the newcomer links to all of them.

use std::str::FromStr;

use super::{GenerationReport, GeneratorParams};
use crate::degree::DegreeSequence;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::RandomSource;

/// Attachment weight of an existing vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Attachment {
    /// Links received from later arrivals, plus one. This is igraph's
    /// default `psumtree` rule; for `m = 1` it equals the degree of every
    /// vertex but the first.
    #[default]
    InDegreePlusOne,
    /// Total degree plus one.
    DegreePlusOne,
}

impl Attachment {
    pub fn name(self) -> &'static str {
        match self {
            Attachment::InDegreePlusOne => "indegree",
            Attachment::DegreePlusOne => "degree",
        }
    }
}

impl FromStr for Attachment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "indegree" => Ok(Attachment::InDegreePlusOne),
            "degree" => Ok(Attachment::DegreePlusOne),
            other => Err(Error::Config(format!(
                "unknown attachment kernel `{other}`"
            ))),
        }
    }
}

pub fn generate_ba(
    params: &GeneratorParams,
    rng: &mut RandomSource,
) -> Result<(Graph, GenerationReport)> {
    let GeneratorParams { n, m, attachment } = *params;
    GeneratorParams::new(n, m)?;
    let mut g = Graph::new(n)?;
    // a vertex appears once per unit of weight, so a uniform draw is weighted
    let mut urn: Vec<usize> = Vec::with_capacity(n + 2 * n * m);
    urn.push(0);
    let mut targets: Vec<usize> = Vec::with_capacity(m);

    for v in 1..n {
        targets.clear();
        if v <= m {
            targets.extend(0..v);
        } else {
            while targets.len() < m {
                let t = urn[rng.below(urn.len())];
                if !targets.contains(&t) {
                    targets.push(t);
                }
            }
        }
        urn.push(v);
        for &t in &targets {
            g.insert(v, t);
            urn.push(t);
            if attachment == Attachment::DegreePlusOne {
                urn.push(v);
            }
        }
    }

    let seq = DegreeSequence::of(&g);
    let report = GenerationReport::finish(seq, &g, 0, 0, Vec::new());
    Ok((g, report))
}
