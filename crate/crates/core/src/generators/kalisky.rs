//! Layered stub matching.
//!
//! Construction starts at the vertex with the largest target degree. Every
//! open connection of the current layer is paired with a stub drawn
//! uniformly from the global pool; vertices reached for the first time form
//! the next layer. A stub is never paired with another stub of its own
//! vertex. When a tree runs out of open connections while unreached
//! vertices still hold stubs, a new tree starts at the unreached vertex with
//! the largest degree. A draw that repeats an existing edge is consumed
//! without an edge, as in MR.

use super::pool::StubPool;
use super::{require_non_empty, GenerationReport};
use crate::degree::DegreeSequence;
use crate::error::Result;
use crate::graph::Graph;
use crate::rng::RandomSource;

pub fn generate_kalisky(
    targets: &DegreeSequence,
    rng: &mut RandomSource,
) -> Result<(Graph, GenerationReport)> {
    let mut g = require_non_empty(targets)?;
    let n = targets.len();
    let mut pool = StubPool::new(targets.as_slice());
    let mut reached = vec![false; n];
    let mut discarded = 0;
    let mut rejected = 0;

    while let Some(root) = pick_root(&pool, &reached, rng) {
        reached[root] = true;
        let mut layer = vec![root];
        while !layer.is_empty() {
            let mut next = Vec::new();
            for &v in &layer {
                while pool.remaining(v) > 0 {
                    if pool.distinct() == 1 {
                        // only v's own stubs are left
                        discarded += pool.clear();
                        break;
                    }
                    let w = pool.draw_excluding(v, rng);
                    pool.take(v);
                    if !g.insert(v, w) {
                        rejected += 1;
                        continue;
                    }
                    if !reached[w] {
                        reached[w] = true;
                        next.push(w);
                    }
                }
            }
            layer = next;
        }
    }

    let report = GenerationReport::finish(targets.clone(), &g, discarded, rejected, Vec::new());
    Ok((g, report))
}

/// Unreached vertex with the most open stubs, ties broken uniformly.
fn pick_root(pool: &StubPool, reached: &[bool], rng: &mut RandomSource) -> Option<usize> {
    let mut best = 0;
    let mut tied = Vec::new();
    for v in (0..reached.len()).filter(|&v| !reached[v]) {
        let k = pool.remaining(v);
        if k == 0 || k < best {
            continue;
        }
        if k > best {
            best = k;
            tied.clear();
        }
        tied.push(v);
    }
    match tied.len() {
        0 => None,
        1 => Some(tied[0]),
        len => Some(tied[rng.below(len)]),
    }
}
