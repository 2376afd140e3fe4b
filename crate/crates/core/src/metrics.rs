//! Structural measures: nearest-neighbour degree, clustering, betweenness
//! and central point dominance, global efficiency, degree correlation.
//!
//! Undefined values are `None`. All sums run in ascending vertex order so
//! results do not depend on how callers schedule work.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;

fn check_vertex(g: &Graph, i: usize) -> Result<()> {
    if i >= g.vertex_count() {
        return Err(Error::invalid(format!("vertex {i} out of range")));
    }
    Ok(())
}

/// Mean degree of the neighbours of `i`; `None` for isolated vertices.
pub fn knn_vertex(g: &Graph, i: usize) -> Result<Option<f64>> {
    check_vertex(g, i)?;
    let k = g.degree(i);
    if k == 0 {
        return Ok(None);
    }
    let sum: usize = g.neighbors(i).iter().map(|&j| g.degree(j)).sum();
    Ok(Some(sum as f64 / k as f64))
}

/// Mean `knn_vertex` per degree class `k >= 1`.
pub fn knn_by_degree(g: &Graph) -> BTreeMap<usize, f64> {
    let mut acc: BTreeMap<usize, (f64, usize)> = BTreeMap::new();
    for v in 0..g.vertex_count() {
        if let Ok(Some(knn)) = knn_vertex(g, v) {
            let e = acc.entry(g.degree(v)).or_insert((0.0, 0));
            e.0 += knn;
            e.1 += 1;
        }
    }
    acc.into_iter()
        .map(|(k, (sum, count))| (k, sum / count as f64))
        .collect()
}

fn triangles_at(g: &Graph, i: usize) -> usize {
    let nbrs = g.neighbors(i);
    let mut t = 0;
    for (a, &j) in nbrs.iter().enumerate() {
        for &k in &nbrs[a + 1..] {
            if g.has_edge(j, k) {
                t += 1;
            }
        }
    }
    t
}

/// Fraction of neighbour pairs of `i` that are adjacent; 0 when `k_i < 2`.
pub fn clustering_local(g: &Graph, i: usize) -> Result<f64> {
    check_vertex(g, i)?;
    let k = g.degree(i);
    if k < 2 {
        return Ok(0.0);
    }
    Ok(2.0 * triangles_at(g, i) as f64 / (k * (k - 1)) as f64)
}

/// Mean local clustering over all vertices, zeros included.
pub fn clustering_global(g: &Graph) -> f64 {
    let n = g.vertex_count();
    let sum: f64 = (0..n)
        .map(|i| clustering_local(g, i).expect("in range"))
        .sum();
    sum / n as f64
}

#[derive(Debug, Clone, PartialEq)]
pub struct BetweennessVector {
    /// Shortest-path betweenness over unordered source/target pairs.
    pub raw: Vec<f64>,
    /// `raw` divided by `(N^2 - 3N + 2) / 2`, the star centre's value.
    pub relative: Vec<f64>,
}

/// Betweenness of the centre of an `n`-vertex star.
pub fn max_betweenness(n: usize) -> f64 {
    if n < 3 {
        return 0.0;
    }
    ((n - 1) * (n - 2)) as f64 / 2.0
}

/// Per-source results of one breadth-first sweep.
struct Sweep {
    betweenness: Vec<f64>,
    /// Σ 1/d over ordered reachable pairs.
    inverse_distance_sum: f64,
}

/// Brandes dependency accumulation from every source. Each unordered pair
/// is seen from both ends, hence the final halving.
fn sweep(g: &Graph) -> Sweep {
    let n = g.vertex_count();
    let mut betweenness = vec![0.0; n];
    let mut inverse_distance_sum = 0.0;

    let mut dist = vec![u32::MAX; n];
    let mut sigma = vec![0.0f64; n];
    let mut delta = vec![0.0f64; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::with_capacity(n);

    for s in 0..n {
        for &v in &order {
            dist[v] = u32::MAX;
            sigma[v] = 0.0;
            delta[v] = 0.0;
        }
        order.clear();

        dist[s] = 0;
        sigma[s] = 1.0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            let next = dist[v] + 1;
            for &w in g.neighbors(v) {
                if dist[w] == u32::MAX {
                    dist[w] = next;
                    queue.push_back(w);
                }
                if dist[w] == next {
                    sigma[w] += sigma[v];
                }
            }
        }
        // vertex order, matching `global_efficiency` bit for bit
        let source_sum: f64 = dist
            .iter()
            .filter(|&&d| d != u32::MAX && d > 0)
            .map(|&d| 1.0 / d as f64)
            .sum();
        inverse_distance_sum += source_sum;

        for &w in order.iter().rev() {
            let dw = dist[w];
            let coeff = (1.0 + delta[w]) / sigma[w];
            for &v in g.neighbors(w) {
                if dist[v] != u32::MAX && dist[v] + 1 == dw {
                    delta[v] += sigma[v] * coeff;
                }
            }
            if w != s {
                betweenness[w] += delta[w];
            }
        }
    }

    for b in &mut betweenness {
        *b /= 2.0;
    }
    Sweep {
        betweenness,
        inverse_distance_sum,
    }
}

fn relative_of(raw: &[f64]) -> Vec<f64> {
    let max = max_betweenness(raw.len());
    if max == 0.0 {
        return vec![0.0; raw.len()];
    }
    raw.iter().map(|b| b / max).collect()
}

pub fn betweenness(g: &Graph) -> BetweennessVector {
    let raw = sweep(g).betweenness;
    let relative = relative_of(&raw);
    BetweennessVector { raw, relative }
}

fn cpd_from_relative(relative: &[f64]) -> Option<f64> {
    let n = relative.len();
    if n < 3 {
        return None;
    }
    let max = relative.iter().copied().fold(0.0, f64::max);
    let gap: f64 = relative.iter().map(|b| max - b).sum();
    Some(gap / (n - 1) as f64)
}

/// Mean gap between the largest relative betweenness and every vertex's.
/// Undefined below three vertices.
pub fn central_point_dominance(g: &Graph) -> Option<f64> {
    cpd_from_relative(&betweenness(g).relative)
}

fn efficiency_from_sum(n: usize, sum: f64) -> Option<f64> {
    if n < 2 {
        return None;
    }
    Some(sum / (n * (n - 1)) as f64)
}

/// Mean of `1/d` over ordered pairs; unreachable pairs add nothing.
pub fn global_efficiency(g: &Graph) -> Option<f64> {
    let n = g.vertex_count();
    if n < 2 {
        return None;
    }
    let mut sum = 0.0;
    for s in 0..n {
        let dist = g.bfs_distances(s).expect("in range");
        sum += dist
            .iter()
            .flatten()
            .filter(|&&d| d > 0)
            .map(|&d| 1.0 / d as f64)
            .sum::<f64>();
    }
    efficiency_from_sum(n, sum)
}

/// Pearson correlation of the degrees at the two ends of each edge.
/// `None` without edges or when every edge end has the same degree.
pub fn degree_correlation(g: &Graph) -> Option<f64> {
    let m = g.edge_count() as i128;
    if m == 0 {
        return None;
    }
    // integer sums keep the zero-variance test exact
    let (mut prod, mut sum, mut squares) = (0i128, 0i128, 0i128);
    for (u, v) in g.to_edge_list() {
        let (j, k) = (g.degree(u) as i128, g.degree(v) as i128);
        prod += j * k;
        sum += j + k;
        squares += j * j + k * k;
    }
    // numerator and denominator both scaled by 4 M^2
    let num = 4 * m * prod - sum * sum;
    let den = 2 * m * squares - sum * sum;
    if den == 0 {
        return None;
    }
    Some(num as f64 / den as f64)
}

/// Every measure for one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricRecord {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub component_count: usize,
    pub giant_size_pct: f64,
    pub cc_global: f64,
    pub cpd: Option<f64>,
    pub global_efficiency: Option<f64>,
    pub degree_correlation_r: Option<f64>,
    pub knn_by_degree: BTreeMap<usize, f64>,
}

/// Computes the full record, sharing one BFS sweep between betweenness and
/// efficiency.
pub fn full_record(g: &Graph) -> MetricRecord {
    let n = g.vertex_count();
    let components = g.connected_components();
    let sweep = sweep(g);
    let relative = relative_of(&sweep.betweenness);
    MetricRecord {
        vertex_count: n,
        edge_count: g.edge_count(),
        component_count: components.count(),
        giant_size_pct: components.giant_size_pct(),
        cc_global: clustering_global(g),
        cpd: cpd_from_relative(&relative),
        global_efficiency: efficiency_from_sum(n, sweep.inverse_distance_sum),
        degree_correlation_r: degree_correlation(g),
        knn_by_degree: knn_by_degree(g),
    }
}
