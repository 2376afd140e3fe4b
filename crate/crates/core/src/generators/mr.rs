//! Molloy-Reed stub matching.
//!
//! Two distinct stubs are drawn uniformly from the open-connection pool per
//! step, which selects each vertex in proportion to its open connections.
//! A pair that would form a self-loop or repeat an edge is consumed without
//! an edge. When all remaining stubs sit on a single vertex they are dropped.

use super::pool::StubPool;
use super::{require_non_empty, GenerationReport};
use crate::degree::DegreeSequence;
use crate::error::Result;
use crate::graph::Graph;
use crate::rng::RandomSource;

pub fn generate_mr(
    targets: &DegreeSequence,
    rng: &mut RandomSource,
) -> Result<(Graph, GenerationReport)> {
    let mut g = require_non_empty(targets)?;
    let mut pool = StubPool::new(targets.as_slice());
    let mut discarded = 0;
    let mut rejected = 0;

    while pool.total() > 0 {
        if pool.total() < 2 || pool.distinct() < 2 {
            discarded += pool.clear();
            break;
        }
        let a = pool.draw(rng);
        let b = pool.draw(rng);
        if !g.insert(a, b) {
            rejected += 1;
        }
    }

    let report = GenerationReport::finish(targets.clone(), &g, discarded, rejected, Vec::new());
    Ok((g, report))
}
