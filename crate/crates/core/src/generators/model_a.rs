//! Model A: hubs first, random partners.
//!
//! Repeatedly picks the vertex with the highest remaining degree `h` (ties
//! uniform) and links it to `h` distinct vertices sampled uniformly from
//! those that still have open links and are not yet its neighbours. The
//! picked vertex is then exhausted. If fewer than `h` partners qualify it
//! links to all of them and the rest of its stubs are discarded.

use super::{require_non_empty, ExhaustStep, GenerationReport};
use crate::degree::DegreeSequence;
use crate::error::Result;
use crate::graph::Graph;
use crate::rng::RandomSource;

pub fn generate_model_a(
    targets: &DegreeSequence,
    rng: &mut RandomSource,
) -> Result<(Graph, GenerationReport)> {
    let mut g = require_non_empty(targets)?;
    let n = targets.len();
    let mut remaining = targets.as_slice().to_vec();
    let mut discarded = 0;
    let mut steps = Vec::new();
    let mut tied = Vec::new();

    loop {
        let h = remaining.iter().copied().max().unwrap_or(0);
        if h == 0 {
            break;
        }
        tied.clear();
        tied.extend((0..n).filter(|&v| remaining[v] == h));
        let v = tied[rng.below(tied.len())];

        let mut eligible: Vec<usize> = (0..n)
            .filter(|&u| u != v && remaining[u] > 0 && !g.has_edge(v, u))
            .collect();
        rng.sample_without_replacement(&mut eligible, h);
        for &u in &eligible {
            g.insert(v, u);
            remaining[u] -= 1;
        }
        discarded += h - eligible.len();
        remaining[v] = 0;
        steps.push(ExhaustStep {
            vertex: v,
            requested: h,
            partners: eligible,
        });
    }

    let report = GenerationReport::finish(targets.clone(), &g, discarded, 0, steps);
    Ok((g, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(targets: Vec<usize>, seed: u64) -> (Graph, GenerationReport) {
        generate_model_a(&targets.into(), &mut RandomSource::new(seed)).unwrap()
    }

    #[test]
    fn forced_path() {
        for seed in 0..10 {
            let (g, _) = run(vec![2, 1, 1], seed);
            assert_eq!(g.to_edge_list(), vec![(0, 1), (0, 2)]);
        }
    }

    #[test]
    fn four_leaves_make_two_edges() {
        for seed in 0..10 {
            let (g, r) = run(vec![1, 1, 1, 1], seed);
            assert_eq!(g.edge_count(), 2);
            assert_eq!(g.connected_components().count(), 2);
            assert_eq!(r.discarded_stubs, 0);
        }
    }

    #[test]
    fn shortfall_is_discarded() {
        // the hub wants 5 partners but only 3 vertices exist
        let (g, r) = run(vec![5, 1, 1, 1], 0);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(r.discarded_stubs, 2);
        assert_eq!(r.rejected_pairs, 0);
        assert!(r.accounting_holds());
    }

    #[test]
    fn each_vertex_exhausted_once() {
        for seed in 0..30 {
            let (_, r) = run(vec![5, 4, 4, 3, 2, 2, 2, 1, 1, 1, 1], seed);
            let mut done = [false; 11];
            for step in &r.steps {
                assert!(!done[step.vertex]);
                assert!(step.partners.iter().all(|&u| !done[u]));
                done[step.vertex] = true;
            }
            assert!(r.accounting_holds());
        }
    }
}
