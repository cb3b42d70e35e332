//! Rotation systems on darts: oriented combinatorial maps.
//!
//! A map is a fixed-point-free involution `alpha` pairing the two darts of
//! each edge with a permutation `sigma` whose cycles are the counterclockwise
//! rotations at the vertices. Darts are numbered so that edge `i` owns darts
//! `2i` and `2i+1`, making `alpha` the xor-with-1 involution. Faces are the
//! orbits of `sigma . alpha` (apply `alpha` first); the mirror map gives the
//! other convention.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::graph::Multigraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("ParseError: {0}")]
    Parse(String),
    #[error("InvalidRotation: {0}")]
    InvalidRotation(String),
    #[error("Disconnected: darts split into more than one orbit")]
    Disconnected,
    #[error("LoopEdge: both darts of edge {0} sit at one vertex")]
    LoopEdge(usize),
    #[error("NonIntegerGenus: Euler defect {0} is odd")]
    NonIntegerGenus(isize),
    #[error("DegreeTooSmall: vertex {vertex} has degree {degree}, truncation needs >= 3")]
    DegreeTooSmall { vertex: usize, degree: usize },
    #[error("TooSmall: parameter {value} is below the minimum {min}")]
    TooSmall { value: usize, min: usize },
}

/// Oriented combinatorial map. Invariants established at construction:
/// every dart appears in exactly one rotation, no edge is a loop, and the
/// group generated by `sigma` and `alpha` moves darts transitively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Map {
    rotations: Vec<Vec<usize>>,
    sigma: Vec<usize>,
    sigma_inv: Vec<usize>,
    vertex_of: Vec<usize>,
}

impl Map {
    /// Builds a map from per-vertex dart rotations. `rotations[v]` lists the
    /// darts at vertex `v` in counterclockwise order.
    pub fn from_rotations(rotations: Vec<Vec<usize>>) -> Result<Map, MapError> {
        let dart_count: usize = rotations.iter().map(Vec::len).sum();
        if dart_count == 0 {
            return Err(MapError::InvalidRotation("map has no darts".into()));
        }
        if dart_count % 2 != 0 {
            return Err(MapError::InvalidRotation(format!(
                "odd dart count {dart_count}; every edge owns two darts"
            )));
        }
        let mut vertex_of = vec![usize::MAX; dart_count];
        let mut sigma = vec![usize::MAX; dart_count];
        let mut sigma_inv = vec![usize::MAX; dart_count];
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                if d >= dart_count {
                    return Err(MapError::InvalidRotation(format!(
                        "dart {d} out of range 0..{dart_count}"
                    )));
                }
                if vertex_of[d] != usize::MAX {
                    return Err(MapError::InvalidRotation(format!(
                        "dart {d} listed at vertex {} and vertex {v}",
                        vertex_of[d]
                    )));
                }
                vertex_of[d] = v;
                let next = rot[(i + 1) % rot.len()];
                sigma[d] = next;
                sigma_inv[next] = d;
            }
        }
        // every dart placed exactly once
        debug_assert!(vertex_of.iter().all(|&v| v != usize::MAX));
        for e in 0..dart_count / 2 {
            if vertex_of[2 * e] == vertex_of[2 * e + 1] {
                return Err(MapError::LoopEdge(e));
            }
        }
        let map = Map { rotations, sigma, sigma_inv, vertex_of };
        if !map.is_dart_connected() {
            return Err(MapError::Disconnected);
        }
        Ok(map)
    }

    fn is_dart_connected(&self) -> bool {
        let n = self.sigma.len();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(d) = queue.pop_front() {
            for next in [self.sigma[d], d ^ 1] {
                if !seen[next] {
                    seen[next] = true;
                    count += 1;
                    queue.push_back(next);
                }
            }
        }
        count == n
    }

    /// Parses the map file format: optional `#` comment lines, a header
    /// `V E`, then `V` lines of whitespace-separated dart ids giving the
    /// rotation at each vertex. Dart pairing is implicit: edge `i` owns
    /// darts `2i` and `2i+1`.
    pub fn parse(text: &str) -> Result<Map, MapError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| MapError::Parse("empty input".into()))?;
        let mut it = header.split_whitespace();
        let v: usize = parse_num(it.next(), "vertex count")?;
        let e: usize = parse_num(it.next(), "edge count")?;
        if it.next().is_some() {
            return Err(MapError::Parse("trailing tokens on header line".into()));
        }
        let mut rotations = Vec::with_capacity(v);
        for _ in 0..v {
            let line = lines
                .next()
                .ok_or_else(|| MapError::Parse(format!("expected {v} rotation lines")))?;
            let rot: Result<Vec<usize>, _> =
                line.split_whitespace().map(|t| parse_num(Some(t), "dart id")).collect();
            rotations.push(rot?);
        }
        if let Some(extra) = lines.next() {
            return Err(MapError::Parse(format!("unexpected extra line `{extra}`")));
        }
        let dart_count: usize = rotations.iter().map(Vec::len).sum();
        if dart_count != 2 * e {
            return Err(MapError::Parse(format!(
                "header declares {e} edges but rotations list {dart_count} darts"
            )));
        }
        Map::from_rotations(rotations)
    }

    /// Renders the map in the same format [`parse`](Self::parse) reads.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for rot in &self.rotations {
            let line = rot.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ");
            out.push_str(&line);
            out.push('\n');
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.sigma.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.sigma.len()
    }

    /// The other dart of the same edge.
    pub fn alpha(&self, dart: usize) -> usize {
        dart ^ 1
    }

    /// Next dart counterclockwise at the same vertex.
    pub fn sigma(&self, dart: usize) -> usize {
        self.sigma[dart]
    }

    pub fn sigma_inv(&self, dart: usize) -> usize {
        self.sigma_inv[dart]
    }

    pub fn vertex_of(&self, dart: usize) -> usize {
        self.vertex_of[dart]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    /// Forgets the embedding.
    pub fn underlying_multigraph(&self) -> Multigraph {
        let edges =
            (0..self.edge_count()).map(|e| (self.vertex_of[2 * e], self.vertex_of[2 * e + 1]));
        Multigraph::from_edge_list(self.vertex_count(), edges)
            .expect("map invariants forbid loops and stray darts")
    }

    /// Facial walks: orbits of `sigma . alpha`, each starting at its
    /// smallest dart, listed in order of that smallest dart.
    pub fn facial_walks(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.dart_count()];
        let mut faces = Vec::new();
        for start in 0..self.dart_count() {
            if seen[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                face.push(d);
                d = self.sigma[d ^ 1];
            }
            faces.push(face);
        }
        faces
    }

    /// Genus of the embedding surface from `V - E + F = 2 - 2g`.
    pub fn euler_genus(&self) -> Result<usize, MapError> {
        let v = self.vertex_count() as isize;
        let e = self.edge_count() as isize;
        let f = self.facial_walks().len() as isize;
        let defect = 2 - (v - e + f);
        if defect % 2 != 0 || defect < 0 {
            return Err(MapError::NonIntegerGenus(defect));
        }
        Ok((defect / 2) as usize)
    }

    /// Cubic graph on the darts: dart `d` is adjacent to `alpha(d)` and to
    /// its rotation neighbors `sigma(d)`, `sigma_inv(d)`. Requires every
    /// vertex degree at least 3 (smaller degrees would force loops or
    /// doubled rotation edges).
    pub fn vertex_truncation(&self) -> Result<Multigraph, MapError> {
        for (v, rot) in self.rotations.iter().enumerate() {
            if rot.len() < 3 {
                return Err(MapError::DegreeTooSmall { vertex: v, degree: rot.len() });
            }
        }
        let mut edges = Vec::with_capacity(3 * self.edge_count());
        for e in 0..self.edge_count() {
            edges.push((2 * e, 2 * e + 1));
        }
        for d in 0..self.dart_count() {
            edges.push((d, self.sigma[d]));
        }
        Ok(Multigraph::from_edge_list(self.dart_count(), edges)
            .expect("truncation endpoints are darts"))
    }

    /// The mirror map: every rotation reversed. Faces of the mirror are the
    /// faces of `self` traversed backwards, so truncation spectra agree.
    pub fn mirror(&self) -> Map {
        let rotations =
            self.rotations.iter().map(|rot| rot.iter().rev().copied().collect()).collect();
        Map::from_rotations(rotations).expect("mirror of a valid map is valid")
    }
}

impl fmt::Display for Map {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn parse_num(tok: Option<&str>, what: &str) -> Result<usize, MapError> {
    let tok = tok.ok_or_else(|| MapError::Parse(format!("missing {what}")))?;
    tok.parse().map_err(|_| MapError::Parse(format!("bad {what} `{tok}`")))
}

/// The complete bipartite graph `K_{m,m}` as a Cayley graph on `Z_{2m}`
/// with the odd residues as connection set, carrying the rotation that
/// steps through the generators in the cyclic order `(1, 3, ..., 2m-1)` at
/// every vertex. Edge `(i, j)` (between even vertex `2i` and odd vertex
/// `2j+1`) has index `i*m + j`.
pub fn kmm_map(m: usize) -> Result<Map, MapError> {
    if m < 3 {
        return Err(MapError::TooSmall { value: m, min: 3 });
    }
    let edge = |i: usize, j: usize| i * m + j;
    let mut rotations = vec![Vec::with_capacity(m); 2 * m];
    for i in 0..m {
        // even vertex 2i: generator 2t+1 reaches odd vertex 2((i+t) mod m)+1
        rotations[2 * i] = (0..m).map(|t| 2 * edge(i, (i + t) % m)).collect();
        // odd vertex 2i+1: generator 2t+1 reaches even vertex 2((i+t+1) mod m)
        rotations[2 * i + 1] = (0..m).map(|t| 2 * edge((i + t + 1) % m, i) + 1).collect();
    }
    Map::from_rotations(rotations)
}

/// A rotation system on the generalized Petersen graph `P(8, 3)` whose six
/// faces are all octagons, giving the genus-2 embedding. Found once by
/// exhaustive search over the per-vertex orientations and frozen as data;
/// the test suite re-checks every claimed property.
pub fn mobius_kantor_map() -> Map {
    Map::parse(include_str!("data/mobius_kantor.map")).expect("bundled map data is valid")
}
