//! Deterministic constructors for the cubic graph families under study.
//!
//! Every generator documents its vertex labeling, so edge-list output is
//! byte-stable across runs.

use thiserror::Error;

use crate::graph::Multigraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("TooSmall: parameter {value} is below the minimum {min}")]
    TooSmall { value: usize, min: usize },
    #[error("DegenerateStep: inner step {k} degenerates modulo {n} (2k = 0 mod n)")]
    DegenerateStep { n: usize, k: usize },
    #[error("StepOutOfRange: inner step {k} is not in 1..{n}")]
    StepOutOfRange { n: usize, k: usize },
    #[error("NotCubic: vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: usize, degree: usize },
}

/// The doubled even cycle: `C_{2n}` with a parallel copy of every second
/// edge. Vertices are `0..2n` around the cycle; the doubled edges are
/// `{2j, 2j+1}`. Cubic on `2n` vertices.
pub fn f2n(n: usize) -> Result<Multigraph, FamilyError> {
    if n < 2 {
        return Err(FamilyError::TooSmall { value: n, min: 2 });
    }
    let cycle = (0..2 * n).map(|i| (i, (i + 1) % (2 * n)));
    let doubles = (0..n).map(|j| (2 * j, 2 * j + 1));
    Ok(Multigraph::from_edge_list(2 * n, cycle.chain(doubles)).expect("valid by construction"))
}

/// The prism `C_n x K_2`: outer cycle `0..n`, inner cycle `n..2n`, spokes
/// `{i, n+i}`.
pub fn prism(n: usize) -> Result<Multigraph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::TooSmall { value: n, min: 3 });
    }
    let outer = (0..n).map(|i| (i, (i + 1) % n));
    let inner = (0..n).map(|i| (n + i, n + (i + 1) % n));
    let spokes = (0..n).map(|i| (i, n + i));
    Ok(Multigraph::from_edge_list(2 * n, outer.chain(inner).chain(spokes))
        .expect("valid by construction"))
}

/// The generalized Petersen graph `P(n, k)`: outer vertex `j -> j`, inner
/// vertex `j -> n+j`; outer cycle, spokes, and inner step-`k` chords.
/// Steps with `2k = 0 (mod n)` would double the inner edges and are
/// rejected.
pub fn gen_petersen(n: usize, k: usize) -> Result<Multigraph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::TooSmall { value: n, min: 3 });
    }
    if k == 0 || k >= n {
        return Err(FamilyError::StepOutOfRange { n, k });
    }
    if (2 * k) % n == 0 {
        return Err(FamilyError::DegenerateStep { n, k });
    }
    let outer = (0..n).map(|j| (j, (j + 1) % n));
    let spokes = (0..n).map(|j| (j, n + j));
    let inner = (0..n).map(|j| (n + j, n + (j + k) % n));
    Ok(Multigraph::from_edge_list(2 * n, outer.chain(spokes).chain(inner))
        .expect("valid by construction"))
}

/// Closed predicate for vertex-transitivity of `P(n, k)`: true exactly for
/// `(10, 2)` and for `k^2 = +-1 (mod n)`. No graph search involved.
pub fn gp_is_vertex_transitive(n: usize, k: usize) -> bool {
    if (n, k) == (10, 2) {
        return true;
    }
    let sq = (k * k) % n;
    sq == 1 % n || sq == (n - 1) % n
}

/// The cubic graph on `2m^2` vertices built from two families of `m`-cycles
/// joined by a transposed matching: plus-vertex `(i, j) -> i*m + j`,
/// minus-vertex `(i, j) -> m^2 + i*m + j`; edges are the two cycle families
/// over `j` and the matching `{(i,j)+, (j,i)-}`.
pub fn t_m(m: usize) -> Result<Multigraph, FamilyError> {
    if m < 3 {
        return Err(FamilyError::TooSmall { value: m, min: 3 });
    }
    let plus = |i: usize, j: usize| i * m + j;
    let minus = |i: usize, j: usize| m * m + i * m + j;
    let mut edges = Vec::with_capacity(3 * m * m);
    for i in 0..m {
        for j in 0..m {
            edges.push((plus(i, j), plus(i, (j + 1) % m)));
            edges.push((minus(i, j), minus(i, (j + 1) % m)));
            edges.push((plus(i, j), minus(j, i)));
        }
    }
    Ok(Multigraph::from_edge_list(2 * m * m, edges).expect("valid by construction"))
}

/// Vertex truncation of a cubic multigraph: each vertex becomes a triangle
/// on its three edge-ends, each edge joins its two ends. Vertex `d` of the
/// result is dart `d`, where edge `i` of `g` owns darts `2i` (at the
/// smaller stored endpoint) and `2i+1`. Parallel edges are unambiguous
/// because darts, not endpoints, are matched.
pub fn truncate_cubic(g: &Multigraph) -> Result<Multigraph, FamilyError> {
    let deg = g.degree_sequence();
    if let Some((v, &d)) = deg.iter().enumerate().find(|(_, &d)| d != 3) {
        return Err(FamilyError::NotCubic { vertex: v, degree: d });
    }
    let mut darts_at = vec![Vec::new(); g.vertex_count()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        darts_at[u].push(2 * i);
        darts_at[v].push(2 * i + 1);
    }
    let mut edges = Vec::with_capacity(3 * g.vertex_count());
    for i in 0..g.edge_count() {
        edges.push((2 * i, 2 * i + 1));
    }
    for darts in &darts_at {
        edges.push((darts[0], darts[1]));
        edges.push((darts[1], darts[2]));
        edges.push((darts[2], darts[0]));
    }
    Ok(Multigraph::from_edge_list(2 * g.edge_count(), edges).expect("valid by construction"))
}

/// `K_4`, the smallest non-bipartite cubic graph.
pub fn complete_k4() -> Multigraph {
    Multigraph::from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        .expect("valid by construction")
}

/// `K_{3,3}` with parts `{0,1,2}` and `{3,4,5}`.
pub fn complete_k33() -> Multigraph {
    Multigraph::from_edge_list(6, (0..3).flat_map(|i| (3..6).map(move |j| (i, j))))
        .expect("valid by construction")
}

/// Two vertices joined by a triple edge.
pub fn triple_edge() -> Multigraph {
    Multigraph::from_edge_list(2, [(0, 1); 3]).expect("valid by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::eigen_multiplicity;

    fn girth(g: &Multigraph) -> usize {
        // BFS from every vertex; parallel edges make a girth-2 digon.
        let adj = g.adjacency_counts();
        if adj.iter().any(|a| a.values().any(|&m| m >= 2)) {
            return 2;
        }
        let mut best = usize::MAX;
        for s in 0..g.vertex_count() {
            let mut dist = vec![usize::MAX; g.vertex_count()];
            let mut parent = vec![usize::MAX; g.vertex_count()];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in adj[u].keys() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        best
    }

    #[test]
    fn f2n_examples() {
        let f4 = f2n(2).unwrap();
        assert_eq!(f4.vertex_count(), 4);
        assert_eq!(f4.edge_count(), 6);
        assert!(f4.is_regular(3));

        let f6 = f2n(3).unwrap();
        assert_eq!(f6.vertex_count(), 6);
        assert!(f6.is_regular(3));
        assert!(f6.is_connected());

        assert_eq!(eigen_multiplicity(&f2n(4).unwrap(), 1), 1);
        assert_eq!(f2n(1), Err(FamilyError::TooSmall { value: 1, min: 2 }));
    }

    #[test]
    fn prism_examples() {
        assert_eq!(eigen_multiplicity(&prism(3).unwrap(), 1), 1);
        assert_eq!(eigen_multiplicity(&prism(4).unwrap(), 1), 3);
        assert_eq!(eigen_multiplicity(&prism(8).unwrap(), 1), 3);
    }

    #[test]
    fn gen_petersen_examples() {
        let petersen = gen_petersen(5, 2).unwrap();
        assert_eq!(petersen.vertex_count(), 10);
        assert_eq!(girth(&petersen), 5);
        assert!(petersen.is_regular(3));

        assert_eq!(
            gen_petersen(6, 3),
            Err(FamilyError::DegenerateStep { n: 6, k: 3 })
        );
        assert_eq!(
            gen_petersen(5, 0),
            Err(FamilyError::StepOutOfRange { n: 5, k: 0 })
        );
    }

    #[test]
    fn vertex_transitivity_predicate() {
        assert!(gp_is_vertex_transitive(10, 2));
        assert!(gp_is_vertex_transitive(5, 2)); // 4 = -1 mod 5
        assert!(!gp_is_vertex_transitive(7, 2)); // 4 != +-1 mod 7
        assert!(gp_is_vertex_transitive(8, 3)); // 9 = 1 mod 8
    }

    #[test]
    fn t_m_examples() {
        let t3 = t_m(3).unwrap();
        assert_eq!(t3.vertex_count(), 18);
        assert!(t3.is_regular(3));
        assert!(t3.is_connected());
        assert_eq!(eigen_multiplicity(&t3, 1), 1);

        assert_eq!(eigen_multiplicity(&t_m(4).unwrap(), 1), 5);
        assert_eq!(eigen_multiplicity(&t_m(5).unwrap(), 1), 9);
    }

    #[test]
    fn truncation_examples() {
        let tk4 = truncate_cubic(&complete_k4()).unwrap();
        assert_eq!(tk4.vertex_count(), 12);
        assert_eq!(eigen_multiplicity(&tk4, 1), 0);

        let tk33 = truncate_cubic(&complete_k33()).unwrap();
        assert_eq!(tk33.vertex_count(), 18);
        assert_eq!(eigen_multiplicity(&tk33, 1), 1);
        assert!(tk33.bipartition().is_none());

        let theta = truncate_cubic(&triple_edge()).unwrap();
        assert_eq!(theta.vertex_count(), 6);
        assert_eq!(eigen_multiplicity(&theta, 1), 1);

        assert!(matches!(
            truncate_cubic(&f2n(2).unwrap().induced_subgraph(&[0, 1].into()).unwrap().0),
            Err(FamilyError::NotCubic { .. })
        ));
    }

    #[test]
    fn generators_are_cubic_and_connected() {
        let mut graphs: Vec<Multigraph> = Vec::new();
        graphs.extend((2..=12).map(|n| f2n(n).unwrap()));
        graphs.extend((3..=12).map(|n| prism(n).unwrap()));
        for n in 3..=10 {
            for k in 1..n {
                if (2 * k) % n != 0 {
                    graphs.push(gen_petersen(n, k).unwrap());
                }
            }
        }
        graphs.extend((3..=6).map(|m| t_m(m).unwrap()));
        for g in &graphs {
            assert!(g.is_regular(3));
            assert!(g.is_connected());
        }
    }

    #[test]
    fn truncation_triangle_count() {
        // girth > 3 simple cubic input: one triangle per original vertex
        for g in [complete_k33(), prism(4).unwrap(), gen_petersen(5, 2).unwrap()] {
            assert!(girth(&g) > 3);
            let t = truncate_cubic(&g).unwrap();
            let adj = t.neighbor_sets();
            let mut triangles = 0;
            for u in 0..t.vertex_count() {
                for &v in adj[u].iter().filter(|&&v| v > u) {
                    for &w in adj[v].iter().filter(|&&w| w > v) {
                        if adj[u].contains(&w) {
                            triangles += 1;
                        }
                    }
                }
            }
            assert_eq!(triangles, g.vertex_count());
        }
    }

    #[test]
    fn multiplicity_sum_bounded_with_equality_on_integral_spectra() {
        // cube and truncated K4 have integral spectra
        for (g, expect_total) in [
            (prism(4).unwrap(), 8),
            (truncate_cubic(&complete_k4()).unwrap(), 12),
            (gen_petersen(5, 2).unwrap(), 10),
            (prism(5).unwrap(), 2), // only 3 and 1 are integral; the rest involve sqrt(5)
        ] {
            let total: usize = (-3..=3).map(|l| eigen_multiplicity(&g, l)).sum();
            assert!(total <= g.vertex_count());
            assert_eq!(total, expect_total);
        }
    }
}
