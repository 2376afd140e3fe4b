//! Simple undirected graphs over dense vertex indices `0..n`.
//!
//! Adjacency lists are kept sorted, so membership tests are a binary search
//! and every traversal visits neighbours in ascending order.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("graph needs at least one vertex"));
        }
        Ok(Self {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count() {
            return Err(Error::invalid(format!(
                "vertex {v} out of range for graph with {} vertices",
                self.vertex_count()
            )));
        }
        Ok(())
    }

    /// Inserts the undirected edge `{u, v}`. Self-loops and duplicates are
    /// refused with `Ok(false)` and leave the graph untouched.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.insert(u, v))
    }

    /// `add_edge` for callers that already guarantee both indices are valid.
    pub(crate) fn insert(&mut self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        let pos = match self.adjacency[u].binary_search(&v) {
            Ok(_) => return false,
            Err(pos) => pos,
        };
        self.adjacency[u].insert(pos, v);
        let pos = self.adjacency[v]
            .binary_search(&u)
            .expect_err("adjacency out of sync");
        self.adjacency[v].insert(pos, u);
        self.edge_count += 1;
        true
    }

    /// Hop distances from `source`; `None` marks vertices in other components.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Option<usize>>> {
        self.check_vertex(source)?;
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let next = dist[v].map(|d| d + 1);
            for &w in &self.adjacency[v] {
                if dist[w].is_none() {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    pub fn connected_components(&self) -> ComponentDecomposition {
        let n = self.vertex_count();
        let mut component_id = vec![usize::MAX; n];
        let mut component_sizes = Vec::new();
        let mut queue = VecDeque::new();
        for root in 0..n {
            if component_id[root] != usize::MAX {
                continue;
            }
            let id = component_sizes.len();
            component_id[root] = id;
            queue.push_back(root);
            let mut size = 0;
            while let Some(v) = queue.pop_front() {
                size += 1;
                for &w in &self.adjacency[v] {
                    if component_id[w] == usize::MAX {
                        component_id[w] = id;
                        queue.push_back(w);
                    }
                }
            }
            component_sizes.push(size);
        }
        ComponentDecomposition {
            component_id,
            component_sizes,
        }
    }

    /// Canonical edge list: `u < v` within a pair, pairs sorted.
    pub fn to_edge_list(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::with_capacity(self.edge_count);
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            edges.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        edges
    }

    /// Builds a graph from pairs, rejecting self-loops, duplicates and
    /// out-of-range indices. Errors report the 1-based pair position.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for (i, &(u, v)) in edges.iter().enumerate() {
            g.push_checked(i + 1, u, v)?;
        }
        Ok(g)
    }

    fn push_checked(&mut self, line: usize, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(Error::parse(
                line,
                format!("edge ({u},{v}) out of range for n={n}"),
            ));
        }
        if u == v {
            return Err(Error::parse(line, format!("self-loop at vertex {u}")));
        }
        if !self.insert(u, v) {
            return Err(Error::parse(line, format!("duplicate edge ({u},{v})")));
        }
        Ok(())
    }

    /// Serializes as `# n=<n>` followed by one `u,v` line per edge.
    pub fn to_edge_list_string(&self) -> String {
        let mut out = format!("# n={}\n", self.vertex_count());
        for (u, v) in self.to_edge_list() {
            let _ = writeln!(out, "{u},{v}");
        }
        out
    }

    pub fn write_edge_list<W: Write>(&self, mut w: W) -> Result<()> {
        w.write_all(self.to_edge_list_string().as_bytes())?;
        Ok(())
    }

    /// Parses the edge-list format. Blank lines and further `#` comment
    /// lines are skipped; a pair may optionally be wrapped in parentheses.
    pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Self> {
        let mut graph: Option<Graph> = None;
        for (idx, line) in reader.lines().enumerate() {
            let line_no = idx + 1;
            let line = line?;
            let text = line.trim();
            if text.is_empty() {
                continue;
            }
            if let Some(comment) = text.strip_prefix('#') {
                if graph.is_none() {
                    let n = parse_header(comment)
                        .ok_or_else(|| Error::parse(line_no, "expected header `# n=<count>`"))?;
                    graph = Some(Graph::new(n).map_err(|e| Error::parse(line_no, e.to_string()))?);
                }
                continue;
            }
            let g = graph
                .as_mut()
                .ok_or_else(|| Error::parse(line_no, "edge before `# n=<count>` header"))?;
            let (u, v) = parse_pair(text)
                .ok_or_else(|| Error::parse(line_no, format!("malformed pair `{text}`")))?;
            g.push_checked(line_no, u, v)?;
        }
        graph.ok_or_else(|| Error::parse(0, "missing `# n=<count>` header"))
    }
}

fn parse_header(comment: &str) -> Option<usize> {
    let rest = comment
        .trim()
        .strip_prefix("n")?
        .trim_start()
        .strip_prefix('=')?;
    rest.trim().parse().ok()
}

fn parse_pair(text: &str) -> Option<(usize, usize)> {
    let text = text
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(text);
    let (a, b) = text.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

/// Partition of the vertex set into connected components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    /// Component label per vertex; labels are assigned in order of the
    /// lowest vertex index in each component.
    pub component_id: Vec<usize>,
    pub component_sizes: Vec<usize>,
}

impl ComponentDecomposition {
    pub fn count(&self) -> usize {
        self.component_sizes.len()
    }

    pub fn largest(&self) -> usize {
        self.component_sizes.iter().copied().max().unwrap_or(0)
    }

    /// Largest component as a percentage of all vertices.
    pub fn giant_size_pct(&self) -> f64 {
        let n: usize = self.component_sizes.iter().sum();
        if n == 0 {
            return 0.0;
        }
        100.0 * self.largest() as f64 / n as f64
    }
}
