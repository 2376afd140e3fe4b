//! Model B: hubs first, partners taken in a fixed vertex order.
//!
//! Vertices are laid out once in a processing order. The vertex with the
//! highest remaining degree `h` (earliest in the order on ties) is linked to
//! the first `h` vertices of that order that still have open links and are
//! not yet its neighbours, which exhausts it. With the default descending
//! order every hub links to the next hubs in line.

use super::{require_non_empty, ExhaustStep, GenerationReport};
use crate::degree::DegreeSequence;
use crate::error::Result;
use crate::graph::Graph;
use crate::rng::RandomSource;

/// How the processing order is laid out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ModelBOrder {
    /// Descending target degree, ties in random order.
    #[default]
    DescendingDegree,
    /// Uniformly shuffled order.
    Shuffled,
}

impl ModelBOrder {
    pub fn name(self) -> &'static str {
        match self {
            ModelBOrder::DescendingDegree => "descending",
            ModelBOrder::Shuffled => "shuffled",
        }
    }
}

pub fn generate_model_b(
    targets: &DegreeSequence,
    rng: &mut RandomSource,
) -> Result<(Graph, GenerationReport)> {
    generate_model_b_with(targets, ModelBOrder::default(), rng)
}

pub fn generate_model_b_with(
    targets: &DegreeSequence,
    order: ModelBOrder,
    rng: &mut RandomSource,
) -> Result<(Graph, GenerationReport)> {
    require_non_empty(targets)?;
    let mut sequence: Vec<usize> = (0..targets.len()).collect();
    rng.shuffle(&mut sequence);
    if order == ModelBOrder::DescendingDegree {
        let t = targets.as_slice();
        sequence.sort_by(|&a, &b| t[b].cmp(&t[a]));
    }
    generate_model_b_in_order(targets, &sequence)
}

/// Deterministic core: `sequence` is a permutation of the vertex indices.
pub(crate) fn generate_model_b_in_order(
    targets: &DegreeSequence,
    sequence: &[usize],
) -> Result<(Graph, GenerationReport)> {
    let mut g = require_non_empty(targets)?;
    let mut remaining = targets.as_slice().to_vec();
    let mut discarded = 0;
    let mut steps = Vec::new();

    // first position holding the maximum remaining degree
    while let Some(v) = sequence
        .iter()
        .copied()
        .filter(|&v| remaining[v] > 0)
        .reduce(|best, v| {
            if remaining[v] > remaining[best] {
                v
            } else {
                best
            }
        })
    {
        let h = remaining[v];
        let partners: Vec<usize> = sequence
            .iter()
            .copied()
            .filter(|&u| u != v && remaining[u] > 0 && !g.has_edge(v, u))
            .take(h)
            .collect();
        for &u in &partners {
            g.insert(v, u);
            remaining[u] -= 1;
        }
        discarded += h - partners.len();
        remaining[v] = 0;
        steps.push(ExhaustStep {
            vertex: v,
            requested: h,
            partners,
        });
    }

    let report = GenerationReport::finish(targets.clone(), &g, discarded, 0, steps);
    Ok((g, report))
}
