//! Loopless undirected multigraphs with dense vertex labels `0..n`.
//!
//! Parallel edges are first-class: several of the graph families built on
//! top of this module (doubled cycles, contracted multigraphs) need them.
//! Edges are stored as a sorted list of normalized `(min, max)` pairs, so
//! two graphs compare equal exactly when their edge multisets agree.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("OutOfRange: vertex {vertex} is not in 0..{n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("LoopEdge: loop at vertex {0} is not allowed")]
    LoopEdge(usize),
    #[error("NotTwoRegular: vertex {vertex} has degree {degree}, expected 2")]
    NotTwoRegular { vertex: usize, degree: usize },
    #[error("ParseError: {0}")]
    Parse(String),
}

/// Loopless undirected multigraph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    /// Builds a graph from an edge multiset. Endpoints must be distinct and
    /// in range; the order inside each pair and the order of pairs do not
    /// matter.
    pub fn from_edge_list(
        n: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for (u, v) in pairs {
            if u >= n {
                return Err(GraphError::OutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::OutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        Ok(Multigraph { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of edges counting multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Normalized `(min, max)` pairs in sorted order, parallel edges repeated.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Entry `v` counts the edge-endpoints at `v`, so a double edge
    /// contributes 2 to each endpoint.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.degree_sequence().iter().all(|&d| d == k)
    }

    /// Neighbor -> edge multiplicity, for each vertex.
    pub fn adjacency_counts(&self) -> Vec<BTreeMap<usize, usize>> {
        let mut adj = vec![BTreeMap::new(); self.n];
        for &(u, v) in &self.edges {
            *adj[u].entry(v).or_insert(0) += 1;
            *adj[v].entry(u).or_insert(0) += 1;
        }
        adj
    }

    /// Distinct neighbors of each vertex (the underlying simple graph).
    pub fn neighbor_sets(&self) -> Vec<BTreeSet<usize>> {
        let mut adj = vec![BTreeSet::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        adj
    }

    /// Connectivity of the underlying simple graph. The empty graph and
    /// single vertices count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let adj = self.neighbor_sets();
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// A 2-coloring witness, or `None` when an odd cycle exists. Each
    /// component's smallest vertex lands in the first set, which makes the
    /// answer canonical on disconnected inputs too.
    pub fn bipartition(&self) -> Option<(BTreeSet<usize>, BTreeSet<usize>)> {
        let adj = self.neighbor_sets();
        let mut color = vec![None::<bool>; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(true);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let mut a = BTreeSet::new();
        let mut b = BTreeSet::new();
        for (v, c) in color.iter().enumerate() {
            if c.unwrap() {
                a.insert(v);
            } else {
                b.insert(v);
            }
        }
        Some((a, b))
    }

    /// Subgraph on `s`, relabeled to `0..|s|` in ascending vertex order.
    /// Returns the graph together with the old -> new label map.
    pub fn induced_subgraph(
        &self,
        s: &BTreeSet<usize>,
    ) -> Result<(Multigraph, BTreeMap<usize, usize>), GraphError> {
        if let Some(&v) = s.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::OutOfRange { vertex: v, n: self.n });
        }
        let relabel: BTreeMap<usize, usize> =
            s.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let edges = self
            .edges
            .iter()
            .filter(|(u, v)| s.contains(u) && s.contains(v))
            .map(|&(u, v)| (relabel[&u], relabel[&v]));
        let g = Multigraph::from_edge_list(s.len(), edges)?;
        Ok((g, relabel))
    }

    /// Decomposes a 2-regular multigraph into its cycles. A digon (double
    /// edge) is a cycle of length 2. Each cycle starts at its smallest
    /// vertex with the smaller neighbor second; the list is sorted by
    /// starting vertex.
    pub fn cycle_decomposition(&self) -> Result<Vec<Vec<usize>>, GraphError> {
        let deg = self.degree_sequence();
        if let Some((v, &d)) = deg.iter().enumerate().find(|(_, &d)| d != 2) {
            return Err(GraphError::NotTwoRegular { vertex: v, degree: d });
        }
        let adj = self.adjacency_counts();
        let mut seen = vec![false; self.n];
        let mut cycles = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let neighbors: Vec<usize> = adj[start].keys().copied().collect();
            if neighbors.len() == 1 && adj[start][&neighbors[0]] == 2 {
                // digon component
                let other = neighbors[0];
                seen[start] = true;
                seen[other] = true;
                cycles.push(vec![start, other]);
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut prev = start;
            let mut cur = neighbors[0]; // smaller of the two neighbors
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                let next = adj[cur]
                    .keys()
                    .copied()
                    .find(|&w| w != prev)
                    .expect("2-regular non-digon component walks forward");
                prev = cur;
                cur = next;
            }
            cycles.push(cycle);
        }
        Ok(cycles)
    }

    /// Parses the edge-list interchange format: first line `n m`, then `m`
    /// lines `u v` with 0-based endpoints, parallel edges repeated.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| GraphError::Parse("empty input".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = parse_token(it.next(), "vertex count")?;
        let m: usize = parse_token(it.next(), "edge count")?;
        if it.next().is_some() {
            return Err(GraphError::Parse("trailing tokens on header line".into()));
        }
        let mut pairs = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| GraphError::Parse(format!("expected {m} edge lines")))?;
            let mut it = line.split_whitespace();
            let u: usize = parse_token(it.next(), "edge endpoint")?;
            let v: usize = parse_token(it.next(), "edge endpoint")?;
            if it.next().is_some() {
                return Err(GraphError::Parse(format!("trailing tokens on edge line `{line}`")));
            }
            pairs.push((u, v));
        }
        if let Some(extra) = lines.next() {
            return Err(GraphError::Parse(format!("unexpected extra line `{extra}`")));
        }
        Multigraph::from_edge_list(n, pairs)
    }

    /// Inverse of [`parse_edge_list`](Self::parse_edge_list); output is
    /// canonical (normalized, sorted edges).
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn parse_token(tok: Option<&str>, what: &str) -> Result<usize, GraphError> {
    let tok = tok.ok_or_else(|| GraphError::Parse(format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| GraphError::Parse(format!("bad {what} `{tok}`")))
}
