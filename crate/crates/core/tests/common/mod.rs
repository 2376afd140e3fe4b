//! Brute-force reference implementations over a dense adjacency matrix.
//! Deliberately naive: Floyd-Warshall distances, explicit shortest-path
//! enumeration, textbook Pearson. Shared by several test targets.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeMap;

use sfnet::{Graph, RandomSource};

pub struct Dense {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl Dense {
    pub fn of(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.to_edge_list() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Self { n, adj }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&a| a).count()
    }
}

/// Graph on `n` vertices whose edges are the set bits of `mask`, one bit
/// per pair `(i, j)` with `i < j` in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

pub fn random_graph(n: usize, p: f64, rng: &mut RandomSource) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.unit() < p {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

pub const INF: usize = usize::MAX / 4;

pub fn floyd(d: &Dense) -> Vec<Vec<usize>> {
    let n = d.n;
    let mut dist = vec![vec![INF; n]; n];
    for i in 0..n {
        dist[i][i] = 0;
        for j in 0..n {
            if d.adj[i][j] {
                dist[i][j] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if dist[i][k] + dist[k][j] < dist[i][j] {
                    dist[i][j] = dist[i][k] + dist[k][j];
                }
            }
        }
    }
    dist
}

/// Walks every shortest path from `s` to `t`, adding 1 to `hits[v]` for
/// each interior vertex of each path. Returns the number of paths.
fn walk(
    d: &Dense,
    dist: &[Vec<usize>],
    cur: usize,
    t: usize,
    path: &mut Vec<usize>,
    hits: &mut [f64],
) -> usize {
    if cur == t {
        for &v in &path[1..path.len() - 1] {
            hits[v] += 1.0;
        }
        return 1;
    }
    let mut count = 0;
    for next in 0..d.n {
        if d.adj[cur][next] && dist[next][t] + 1 == dist[cur][t] {
            path.push(next);
            count += walk(d, dist, next, t, path, hits);
            path.pop();
        }
    }
    count
}

/// Betweenness over unordered pairs by explicit path enumeration.
pub fn betweenness(g: &Graph) -> Vec<f64> {
    let d = Dense::of(g);
    let dist = floyd(&d);
    let mut b = vec![0.0; d.n];
    for s in 0..d.n {
        for t in s + 1..d.n {
            if dist[s][t] >= INF {
                continue;
            }
            let mut hits = vec![0.0; d.n];
            let paths = walk(&d, &dist, s, t, &mut vec![s], &mut hits);
            for v in 0..d.n {
                b[v] += hits[v] / paths as f64;
            }
        }
    }
    b
}

pub fn cpd(g: &Graph) -> Option<f64> {
    let n = g.vertex_count();
    if n < 3 {
        return None;
    }
    let star_centre = ((n - 1) * (n - 2)) as f64 / 2.0;
    let rel: Vec<f64> = betweenness(g).iter().map(|b| b / star_centre).collect();
    let max = rel.iter().cloned().fold(f64::MIN, f64::max);
    Some(rel.iter().map(|r| max - r).sum::<f64>() / (n - 1) as f64)
}

pub fn efficiency(g: &Graph) -> Option<f64> {
    let d = Dense::of(g);
    if d.n < 2 {
        return None;
    }
    let dist = floyd(&d);
    let mut sum = 0.0;
    for i in 0..d.n {
        for j in 0..d.n {
            if i != j && dist[i][j] < INF {
                sum += 1.0 / dist[i][j] as f64;
            }
        }
    }
    Some(sum / (d.n * (d.n - 1)) as f64)
}

pub fn clustering(g: &Graph) -> f64 {
    let d = Dense::of(g);
    let mut total = 0.0;
    for i in 0..d.n {
        let k = d.degree(i);
        if k < 2 {
            continue;
        }
        let mut closed = 0;
        for a in 0..d.n {
            for b in 0..d.n {
                if a != b && d.adj[i][a] && d.adj[i][b] && d.adj[a][b] {
                    closed += 1;
                }
            }
        }
        // ordered neighbour pairs, so no factor 2
        total += closed as f64 / (k * (k - 1)) as f64;
    }
    total / d.n as f64
}

pub fn knn(g: &Graph) -> BTreeMap<usize, f64> {
    let d = Dense::of(g);
    let mut classes: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
    for i in 0..d.n {
        let k = d.degree(i);
        if k == 0 {
            continue;
        }
        let s: usize = (0..d.n).filter(|&j| d.adj[i][j]).map(|j| d.degree(j)).sum();
        classes.entry(k).or_default().push(s as f64 / k as f64);
    }
    classes
        .into_iter()
        .map(|(k, v)| (k, v.iter().sum::<f64>() / v.len() as f64))
        .collect()
}

/// Pearson correlation over both orientations of every edge.
pub fn assortativity(g: &Graph) -> Option<f64> {
    let d = Dense::of(g);
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for i in 0..d.n {
        for j in 0..d.n {
            if d.adj[i][j] {
                xs.push(d.degree(i) as f64);
                ys.push(d.degree(j) as f64);
            }
        }
    }
    if xs.is_empty() {
        return None;
    }
    let len = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / len;
    let my = ys.iter().sum::<f64>() / len;
    let cov: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let vx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let vy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    if vx == 0.0 || vy == 0.0 {
        return None;
    }
    Some(cov / (vx * vy).sqrt())
}

pub fn component_count(g: &Graph) -> usize {
    let d = Dense::of(g);
    let dist = floyd(&d);
    let mut seen = vec![false; d.n];
    let mut count = 0;
    for i in 0..d.n {
        if !seen[i] {
            count += 1;
            for j in 0..d.n {
                if dist[i][j] < INF {
                    seen[j] = true;
                }
            }
        }
    }
    count
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

pub fn close_opt(a: Option<f64>, b: Option<f64>, tol: f64) -> bool {
    match (a, b) {
        (Some(x), Some(y)) => close(x, y, tol),
        (None, None) => true,
        _ => false,
    }
}

/// Spearman rank correlation with average ranks for ties.
pub fn spearman(xs: &[f64], ys: &[f64]) -> f64 {
    fn ranks(v: &[f64]) -> Vec<f64> {
        let mut idx: Vec<usize> = (0..v.len()).collect();
        idx.sort_by(|&a, &b| v[a].total_cmp(&v[b]));
        let mut r = vec![0.0; v.len()];
        let mut i = 0;
        while i < idx.len() {
            let mut j = i;
            while j + 1 < idx.len() && v[idx[j + 1]] == v[idx[i]] {
                j += 1;
            }
            let avg = (i + j) as f64 / 2.0 + 1.0;
            for &k in &idx[i..=j] {
                r[k] = avg;
            }
            i = j + 1;
        }
        r
    }
    let (rx, ry) = (ranks(xs), ranks(ys));
    let len = rx.len() as f64;
    let mx = rx.iter().sum::<f64>() / len;
    let my = ry.iter().sum::<f64>() / len;
    let cov: f64 = rx.iter().zip(&ry).map(|(a, b)| (a - mx) * (b - my)).sum();
    let vx: f64 = rx.iter().map(|a| (a - mx).powi(2)).sum();
    let vy: f64 = ry.iter().map(|b| (b - my).powi(2)).sum();
    cov / (vx * vy).sqrt()
}
