//! Structure extracted from a ±1 eigenvector of a cubic graph: the sign
//! partition with its cycle type, the perfect matching between the sides,
//! the contracted multigraph, equitable partitions with their quotient
//! matrices, and the certificate tying simultaneous simplicity of 1 and -1
//! to bipartiteness.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::Multigraph;
use crate::linalg::{adjacency_matrix, adjacency_minus_lambda, rational_nullspace, IntMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("NotSimple: eigenvalue {lambda} has multiplicity {multiplicity}, not 1")]
    NotSimple { lambda: i64, multiplicity: usize },
    #[error("NotPlusMinusOne: the eigenvector for {lambda} is not two-valued")]
    NotPlusMinusOne { lambda: i64 },
    #[error("NotCubic: vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: usize, degree: usize },
    #[error("Disconnected: the graph is not connected")]
    Disconnected,
    #[error("StructureViolation: {0}")]
    Violation(ViolationKind),
    #[error("NotAPartition: {0}")]
    NotAPartition(String),
    #[error("TooLarge: {n} vertices exceeds the exhaustive-search cap {max}")]
    TooLarge { n: usize, max: usize },
}

/// Which guaranteed structural property failed to hold. Any of these on a
/// cubic connected input flags either a non-vertex-transitive graph or an
/// implementation bug.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    PositiveSideNotTwoRegular,
    NegativeSideNotTwoRegular,
    MatchingNotPerfect,
    UnequalCycleLengths,
    SideCycleCountsDiffer,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::PositiveSideNotTwoRegular => {
                "induced subgraph on the positive side is not 2-regular"
            }
            ViolationKind::NegativeSideNotTwoRegular => {
                "induced subgraph on the negative side is not 2-regular"
            }
            ViolationKind::MatchingNotPerfect => "cross edges do not form a perfect matching",
            ViolationKind::UnequalCycleLengths => "cycle lengths differ",
            ViolationKind::SideCycleCountsDiffer => "sides have different cycle counts",
        })
    }
}

/// The unique (up to sign) eigenvector of `lambda`, scaled so entry 0 is
/// `+1`, which must make every entry exactly `+-1`.
pub fn pm1_eigenvector(g: &Multigraph, lambda: i64) -> Result<Vec<i8>, StructureError> {
    let basis = rational_nullspace(&adjacency_minus_lambda(g, lambda));
    if basis.len() != 1 {
        return Err(StructureError::NotSimple { lambda, multiplicity: basis.len() });
    }
    let v = &basis[0].entries;
    let anchor = &v[0];
    if anchor.is_zero() {
        return Err(StructureError::NotPlusMinusOne { lambda });
    }
    let mut signs = Vec::with_capacity(v.len());
    for e in v {
        let scaled = e / anchor;
        if scaled.is_one() {
            signs.push(1i8);
        } else if (-&scaled).is_one() {
            signs.push(-1i8);
        } else {
            return Err(StructureError::NotPlusMinusOne { lambda });
        }
    }
    Ok(signs)
}

/// Decomposition of a cubic graph induced by its ±1 eigenvector for
/// eigenvalue 1: two 2-regular sides joined by a perfect matching, with
/// each side a disjoint union of `m` cycles of length `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignPartition {
    pub vplus: BTreeSet<usize>,
    pub vminus: BTreeSet<usize>,
    /// Cross edges `(u, v)` with `u` positive, `v` negative, sorted by `u`.
    pub matching: Vec<(usize, usize)>,
    /// Cycles of the positive side, in original vertex labels.
    pub cycles_plus: Vec<Vec<usize>>,
    pub cycles_minus: Vec<Vec<usize>>,
    /// `(m, k)`: each side is `m` disjoint cycles of length `k`.
    pub cycle_type: (usize, usize),
}

impl fmt::Display for SignPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (m, k) = self.cycle_type;
        writeln!(f, "type: C({m},{k})")?;
        writeln!(f, "vplus: {}", join_usize(self.vplus.iter()))?;
        writeln!(f, "vminus: {}", join_usize(self.vminus.iter()))?;
        let matches = self
            .matching
            .iter()
            .map(|(u, v)| format!("({u},{v})"))
            .collect::<Vec<_>>()
            .join(" ");
        writeln!(f, "matching: {matches}")?;
        writeln!(f, "cycles_plus: {}", join_cycles(&self.cycles_plus))?;
        writeln!(f, "cycles_minus: {}", join_cycles(&self.cycles_minus))
    }
}

fn join_usize<'a>(it: impl Iterator<Item = &'a usize>) -> String {
    it.map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn join_cycles(cycles: &[Vec<usize>]) -> String {
    cycles
        .iter()
        .map(|c| format!("[{}]", join_usize(c.iter())))
        .collect::<Vec<_>>()
        .join(" ")
}

fn side_cycles(
    g: &Multigraph,
    side: &BTreeSet<usize>,
    not_two_regular: ViolationKind,
) -> Result<Vec<Vec<usize>>, StructureError> {
    let (sub, relabel) = g.induced_subgraph(side).expect("side vertices are in range");
    let back: BTreeMap<usize, usize> = relabel.iter().map(|(&old, &new)| (new, old)).collect();
    let cycles = sub.cycle_decomposition().map_err(|_| StructureError::Violation(not_two_regular))?;
    Ok(cycles
        .into_iter()
        .map(|c| c.into_iter().map(|v| back[&v]).collect())
        .collect())
}

/// Builds and validates the sign partition of `g` for eigenvalue 1.
/// Vertex 0 is positive by convention.
pub fn sign_partition(g: &Multigraph) -> Result<SignPartition, StructureError> {
    let deg = g.degree_sequence();
    if let Some((v, &d)) = deg.iter().enumerate().find(|(_, &d)| d != 3) {
        return Err(StructureError::NotCubic { vertex: v, degree: d });
    }
    if !g.is_connected() {
        return Err(StructureError::Disconnected);
    }
    let signs = pm1_eigenvector(g, 1)?;
    let vplus: BTreeSet<usize> =
        (0..g.vertex_count()).filter(|&v| signs[v] == 1).collect();
    let vminus: BTreeSet<usize> =
        (0..g.vertex_count()).filter(|&v| signs[v] == -1).collect();

    let mut matching = Vec::new();
    let mut covered = vec![0usize; g.vertex_count()];
    for &(u, v) in g.edges() {
        if signs[u] != signs[v] {
            let (p, m) = if signs[u] == 1 { (u, v) } else { (v, u) };
            matching.push((p, m));
            covered[u] += 1;
            covered[v] += 1;
        }
    }
    if covered.iter().any(|&c| c != 1) {
        return Err(StructureError::Violation(ViolationKind::MatchingNotPerfect));
    }
    matching.sort_unstable();

    let cycles_plus = side_cycles(g, &vplus, ViolationKind::PositiveSideNotTwoRegular)?;
    let cycles_minus = side_cycles(g, &vminus, ViolationKind::NegativeSideNotTwoRegular)?;
    if cycles_plus.len() != cycles_minus.len() {
        return Err(StructureError::Violation(ViolationKind::SideCycleCountsDiffer));
    }
    let k = cycles_plus[0].len();
    if cycles_plus.iter().chain(&cycles_minus).any(|c| c.len() != k) {
        return Err(StructureError::Violation(ViolationKind::UnequalCycleLengths));
    }
    Ok(SignPartition {
        vplus,
        vminus,
        matching,
        cycle_type: (cycles_plus.len(), k),
        cycles_plus,
        cycles_minus,
    })
}

const EXHAUSTIVE_CAP: usize = 24;

/// Counts the unordered partitions `{V1, V2}` of a cubic graph with both
/// induced sides 2-regular, by branch-and-prune over sign assignments.
/// In a cubic graph such a partition is the same as giving every vertex
/// exactly one cross edge-end, which is what the pruning propagates.
/// Exhaustive oracle, capped at 24 vertices.
pub fn unique_two_regular_partition(g: &Multigraph) -> Result<usize, StructureError> {
    let n = g.vertex_count();
    if n > EXHAUSTIVE_CAP {
        return Err(StructureError::TooLarge { n, max: EXHAUSTIVE_CAP });
    }
    let deg = g.degree_sequence();
    if let Some((v, &d)) = deg.iter().enumerate().find(|(_, &d)| d != 3) {
        return Err(StructureError::NotCubic { vertex: v, degree: d });
    }
    // endpoint lists with multiplicity
    let mut nbr = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        nbr[u].push(v);
        nbr[v].push(u);
    }
    // BFS order so each new vertex sees an assigned neighbor early
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in &nbr[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let position: Vec<usize> = {
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    };

    fn feasible(v: usize, signs: &[i8], nbr: &[Vec<usize>]) -> bool {
        let mut cross = 0;
        let mut same = 0;
        let mut unassigned = 0;
        for &w in &nbr[v] {
            match signs[w] {
                0 => unassigned += 1,
                s if s == signs[v] => same += 1,
                _ => cross += 1,
            }
        }
        // needs exactly one cross and two same endpoints
        cross <= 1 && same <= 2 && cross + unassigned >= 1 && same + unassigned >= 2
    }

    fn search(idx: usize, order: &[usize], signs: &mut [i8], nbr: &[Vec<usize>], position: &[usize]) -> usize {
        if idx == order.len() {
            return 1;
        }
        let v = order[idx];
        let mut count = 0;
        for s in [1i8, -1i8] {
            if v == order[0] && s == -1 {
                continue; // fix the first vertex positive: partitions are unordered
            }
            signs[v] = s;
            let ok = feasible(v, signs, nbr)
                && nbr[v]
                    .iter()
                    .all(|&w| signs[w] == 0 || position[w] > idx || feasible(w, signs, nbr));
            if ok {
                count += search(idx + 1, order, signs, nbr, position);
            }
        }
        signs[v] = 0;
        count
    }

    let mut signs = vec![0i8; n];
    Ok(search(0, &order, &mut signs, &nbr, &position))
}

/// Collapses each cycle of the partition to a single vertex: cycles of the
/// positive side become `0..m` (ordered by smallest original vertex),
/// cycles of the negative side become `m..2m`, and every matching edge
/// survives. The result is `k`-regular and bipartite across the blocks.
pub fn contracted_multigraph(g: &Multigraph, p: &SignPartition) -> Multigraph {
    let m = p.cycle_type.0;
    let mut cycle_of = BTreeMap::new();
    for (i, cycle) in p.cycles_plus.iter().enumerate() {
        for &v in cycle {
            cycle_of.insert(v, i);
        }
    }
    for (i, cycle) in p.cycles_minus.iter().enumerate() {
        for &v in cycle {
            cycle_of.insert(v, m + i);
        }
    }
    debug_assert_eq!(cycle_of.len(), g.vertex_count());
    let edges = p.matching.iter().map(|&(u, v)| (cycle_of[&u], cycle_of[&v]));
    Multigraph::from_edge_list(2 * m, edges).expect("contracted labels are in range")
}

/// Equitable partition summary: every vertex of part `i` has `b[i][j]`
/// neighbors in part `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMatrix {
    pub parts: Vec<BTreeSet<usize>>,
    pub b: IntMatrix,
}

/// Checks whether `parts` is an equitable partition of `g` and returns the
/// quotient matrix if so. `Err` means `parts` is not a partition of the
/// vertex set at all; `Ok(None)` means the neighbor counts are not constant
/// on some part.
pub fn check_equitable(
    g: &Multigraph,
    parts: &[BTreeSet<usize>],
) -> Result<Option<QuotientMatrix>, StructureError> {
    let n = g.vertex_count();
    let mut part_of = vec![usize::MAX; n];
    let mut covered = 0;
    for (i, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(StructureError::NotAPartition(format!("part {i} is empty")));
        }
        for &v in part {
            if v >= n {
                return Err(StructureError::NotAPartition(format!("vertex {v} out of range")));
            }
            if part_of[v] != usize::MAX {
                return Err(StructureError::NotAPartition(format!("vertex {v} in two parts")));
            }
            part_of[v] = i;
            covered += 1;
        }
    }
    if covered != n {
        return Err(StructureError::NotAPartition("some vertex is in no part".into()));
    }

    let mut counts = vec![vec![0usize; parts.len()]; n];
    for &(u, v) in g.edges() {
        counts[u][part_of[v]] += 1;
        counts[v][part_of[u]] += 1;
    }
    let mut b = IntMatrix::zeros(parts.len(), parts.len());
    for (i, part) in parts.iter().enumerate() {
        let first = *part.iter().next().expect("parts are non-empty");
        for j in 0..parts.len() {
            if part.iter().any(|&v| counts[v][j] != counts[first][j]) {
                return Ok(None);
            }
            b.set(i, j, BigInt::from(counts[first][j]));
        }
    }
    Ok(Some(QuotientMatrix { parts: parts.to_vec(), b }))
}

/// Joint record for the eigenvalues 1 and -1 of a cubic connected graph.
/// When both are simple, the four intersections of the two sign partitions
/// are checked: they must be independent sets, and pairing them up must
/// produce a bipartition of the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BothSimpleCertificate {
    pub mult_one: usize,
    pub mult_minus_one: usize,
    pub bipartite: bool,
    /// `W++, W+-, W-+, W--` in this order; present only when both
    /// multiplicities are 1.
    pub w_sets: Option<[BTreeSet<usize>; 4]>,
    pub w_sets_independent: Option<bool>,
    pub w_bipartition_valid: Option<bool>,
}

impl BothSimpleCertificate {
    pub fn applicable(&self) -> bool {
        self.mult_one == 1 && self.mult_minus_one == 1
    }
}

impl fmt::Display for BothSimpleCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "mult(1): {}", self.mult_one)?;
        writeln!(f, "mult(-1): {}", self.mult_minus_one)?;
        writeln!(f, "bipartite: {}", self.bipartite)?;
        if !self.applicable() {
            return writeln!(f, "verdict: not applicable (1 and -1 are not both simple)");
        }
        let w = self.w_sets.as_ref().expect("applicable certificate carries W sets");
        for (name, set) in ["W++", "W+-", "W-+", "W--"].iter().zip(w) {
            writeln!(f, "{name}: {}", join_usize(set.iter()))?;
        }
        writeln!(f, "w_sets_independent: {}", self.w_sets_independent.expect("set"))?;
        writeln!(f, "w_bipartition_valid: {}", self.w_bipartition_valid.expect("set"))?;
        writeln!(f, "verdict: certified")
    }
}

/// Certificate for the implication "1 and -1 both simple forces bipartite".
pub fn both_simple_certificate(g: &Multigraph) -> Result<BothSimpleCertificate, StructureError> {
    let deg = g.degree_sequence();
    if let Some((v, &d)) = deg.iter().enumerate().find(|(_, &d)| d != 3) {
        return Err(StructureError::NotCubic { vertex: v, degree: d });
    }
    if !g.is_connected() {
        return Err(StructureError::Disconnected);
    }
    let mult_one = crate::linalg::eigen_multiplicity(g, 1);
    let mult_minus_one = crate::linalg::eigen_multiplicity(g, -1);
    let bipartite = g.bipartition().is_some();
    if mult_one != 1 || mult_minus_one != 1 {
        return Ok(BothSimpleCertificate {
            mult_one,
            mult_minus_one,
            bipartite,
            w_sets: None,
            w_sets_independent: None,
            w_bipartition_valid: None,
        });
    }
    let z = pm1_eigenvector(g, 1)?;
    let u = pm1_eigenvector(g, -1)?;
    let mut w: [BTreeSet<usize>; 4] = Default::default();
    for v in 0..g.vertex_count() {
        let idx = match (z[v], u[v]) {
            (1, 1) => 0,
            (1, -1) => 1,
            (-1, 1) => 2,
            _ => 3,
        };
        w[idx].insert(v);
    }
    let independent = {
        let inside = |set: &BTreeSet<usize>| {
            g.edges().iter().any(|(a, b)| set.contains(a) && set.contains(b))
        };
        !w.iter().any(inside)
    };
    // W++ with W-- against W+- with W-+
    let side: Vec<bool> = (0..g.vertex_count())
        .map(|v| w[0].contains(&v) || w[3].contains(&v))
        .collect();
    let valid = g.edges().iter().all(|&(a, b)| side[a] != side[b]);
    Ok(BothSimpleCertificate {
        mult_one,
        mult_minus_one,
        bipartite,
        w_sets: Some(w),
        w_sets_independent: Some(independent),
        w_bipartition_valid: Some(valid),
    })
}

/// Exact check that the `+-1` indicator of a partition is an eigenvector
/// for `lambda`: `A z = lambda z` over the integers.
pub fn is_integer_eigenvector(g: &Multigraph, signs: &[i8], lambda: i64) -> bool {
    let a = adjacency_matrix(g);
    (0..g.vertex_count()).all(|r| {
        let sum: BigInt = a
            .row(r)
            .iter()
            .zip(signs)
            .map(|(e, &s)| e * BigInt::from(s))
            .sum();
        sum == BigInt::from(lambda) * BigInt::from(signs[r])
    })
}
