//! Classification predicates deciding, per family, whether 1 is a simple
//! eigenvalue, plus sweep harnesses that confront every predicate with the
//! exact-rank oracle instance by instance.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::cosine::gp_one_multiplicity;
use crate::families::{self, gp_is_vertex_transitive};
use crate::graph::Multigraph;
use crate::linalg::eigen_multiplicity;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("NotCubic: vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: usize, degree: usize },
    #[error("Disconnected: the graph is not connected")]
    Disconnected,
    #[error("UnknownFamily: `{0}` is not one of f2n, prism, gp, tm")]
    UnknownFamily(String),
}

/// 1 is simple for the doubled cycle on `2n` vertices iff `n` is even.
pub fn predict_f2n(n: usize) -> bool {
    n % 2 == 0
}

/// 1 is simple for the `n`-prism iff `n` is not divisible by 4.
pub fn predict_prism(n: usize) -> bool {
    n % 4 != 0
}

/// 1 is simple for `P(n, k)` iff every applicable divisor clause passes:
/// when `4 | n` the step must be even, and when `5 | n` the step must avoid
/// the residue classes `k = +-2 (mod 5)`. Both clauses bind when both
/// divisors apply.
///
/// The residue form matters: with `n = 5a`, a nontrivial cosine solution
/// sits at `(j, k*j mod n) = (a, 2a)` exactly when `k*a = 2a (mod 5a)`,
/// i.e. `k = 2 (mod 5)` — for example P(15,7) has eigenvalue 1 with
/// multiplicity 5, not 1. The exclusion set `{2, 3, n-3, n-2}` coincides
/// with these classes only for `n <= 10`; the sweep oracle pins the
/// general form.
pub fn predict_gp(n: usize, k: usize) -> bool {
    let four_ok = n % 4 != 0 || k % 2 == 0;
    let five_ok = n % 5 != 0 || !matches!(k % 5, 2 | 3);
    four_ok && five_ok
}

/// 1 is simple for `t_m` iff neither 4 nor 5 divides `m`.
pub fn predict_tm(m: usize) -> bool {
    m % 4 != 0 && m % 5 != 0
}

/// 1 is simple for the truncation of a connected cubic multigraph iff the
/// base graph is bipartite.
pub fn predict_truncation(g: &Multigraph) -> Result<bool, ClassifyError> {
    let deg = g.degree_sequence();
    if let Some((v, &d)) = deg.iter().enumerate().find(|(_, &d)| d != 3) {
        return Err(ClassifyError::NotCubic { vertex: v, degree: d });
    }
    if !g.is_connected() {
        return Err(ClassifyError::Disconnected);
    }
    Ok(g.bipartition().is_some())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    F2n,
    Prism,
    Gp,
    Tm,
}

impl Family {
    pub fn parse(name: &str) -> Result<Family, ClassifyError> {
        match name {
            "f2n" => Ok(Family::F2n),
            "prism" => Ok(Family::Prism),
            "gp" => Ok(Family::Gp),
            "tm" => Ok(Family::Tm),
            other => Err(ClassifyError::UnknownFamily(other.to_string())),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::F2n => "f2n",
            Family::Prism => "prism",
            Family::Gp => "gp",
            Family::Tm => "tm",
        }
    }

    fn min_param(&self) -> usize {
        match self {
            Family::F2n => 2,
            Family::Prism | Family::Gp | Family::Tm => 3,
        }
    }
}

/// One predicate-vs-oracle comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationRow {
    pub params: String,
    pub predicted: bool,
    /// Exact multiplicity of eigenvalue 1 from the rank oracle.
    pub multiplicity: usize,
    pub agree: bool,
    /// `P(n,k)` only: the closed vertex-transitivity predicate, informational.
    pub vertex_transitive: Option<bool>,
    /// `P(n,k)` only: multiplicity recounted through the cosine equation;
    /// must equal `multiplicity`.
    pub cosine_multiplicity: Option<usize>,
}

impl VerificationRow {
    pub fn consistent(&self) -> bool {
        self.agree && self.cosine_multiplicity.map_or(true, |c| c == self.multiplicity)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub family: &'static str,
    pub rows: Vec<VerificationRow>,
}

impl VerificationReport {
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(VerificationRow::consistent)
    }

    pub fn disagreements(&self) -> usize {
        self.rows.iter().filter(|r| !r.consistent()).count()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "family: {}", self.family)?;
        for row in &self.rows {
            write!(
                f,
                "{} predicted={} mult={}",
                row.params, row.predicted, row.multiplicity
            )?;
            if let Some(vt) = row.vertex_transitive {
                write!(f, " vt={vt}")?;
            }
            if let Some(c) = row.cosine_multiplicity {
                write!(f, " cosine_mult={c}")?;
            }
            if row.consistent() {
                writeln!(f, " agree")?;
            } else {
                writeln!(f, " DISAGREE")?;
            }
        }
        writeln!(
            f,
            "summary: rows={} agree={} disagree={}",
            self.rows.len(),
            self.rows.len() - self.disagreements(),
            self.disagreements()
        )
    }
}

fn gp_row(n: usize, k: usize) -> VerificationRow {
    let g = families::gen_petersen(n, k).expect("grid excludes degenerate steps");
    let multiplicity = eigen_multiplicity(&g, 1);
    let predicted = predict_gp(n, k);
    VerificationRow {
        params: format!("n={n} k={k}"),
        predicted,
        multiplicity,
        agree: predicted == (multiplicity == 1),
        vertex_transitive: Some(gp_is_vertex_transitive(n, k)),
        cosine_multiplicity: Some(gp_one_multiplicity(n, k)),
    }
}

fn single_param_row(family: Family, n: usize) -> VerificationRow {
    let (g, predicted) = match family {
        Family::F2n => (families::f2n(n), predict_f2n(n)),
        Family::Prism => (families::prism(n), predict_prism(n)),
        Family::Tm => (families::t_m(n), predict_tm(n)),
        Family::Gp => unreachable!("gp rows carry two parameters"),
    };
    let g = g.expect("grid respects generator minimums");
    let multiplicity = eigen_multiplicity(&g, 1);
    VerificationRow {
        params: format!("n={n}"),
        predicted,
        multiplicity,
        agree: predicted == (multiplicity == 1),
        vertex_transitive: None,
        cosine_multiplicity: None,
    }
}

/// Runs the predicate against the exact oracle over an inclusive parameter
/// range. For `gp`, the grid is every valid `(n, k)` with `n` in range.
/// Rows are computed in parallel but reported in grid order.
pub fn verify_family(family: Family, lo: usize, hi: usize) -> VerificationReport {
    let lo = lo.max(family.min_param());
    let grid: Vec<(usize, usize)> = match family {
        Family::Gp => (lo..=hi)
            .flat_map(|n| (1..n).filter(move |k| (2 * k) % n != 0).map(move |k| (n, k)))
            .collect(),
        _ => (lo..=hi).map(|n| (n, 0)).collect(),
    };
    let rows: Vec<VerificationRow> = grid
        .par_iter()
        .map(|&(n, k)| match family {
            Family::Gp => gp_row(n, k),
            _ => single_param_row(family, n),
        })
        .collect();
    VerificationReport { family: family.name(), rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predicate_examples() {
        assert!(predict_f2n(2));
        assert!(!predict_f2n(3));
        assert!(predict_f2n(100));

        assert!(predict_prism(3));
        assert!(!predict_prism(4));
        assert!(predict_prism(5));

        assert!(predict_gp(7, 2));
        assert!(predict_gp(8, 2));
        assert!(!predict_gp(10, 2));
        // steps in the classes +-2 mod 5 beyond the four smallest offsets
        assert!(!predict_gp(15, 7));
        assert!(!predict_gp(25, 7));
        assert!(predict_gp(15, 1));
        assert!(predict_gp(25, 6));

        assert!(predict_tm(3));
        assert!(!predict_tm(4));
        assert!(!predict_tm(10));
    }

    #[test]
    fn truncation_predicate_examples() {
        assert!(!predict_truncation(&families::complete_k4()).unwrap());
        assert!(predict_truncation(&families::complete_k33()).unwrap());
        assert!(predict_truncation(&families::triple_edge()).unwrap());
        assert!(matches!(
            predict_truncation(&Multigraph::from_edge_list(3, [(0, 1)]).unwrap()),
            Err(ClassifyError::NotCubic { .. })
        ));
    }

    #[test]
    fn sweeps_agree_on_small_grids() {
        assert!(verify_family(Family::F2n, 2, 12).all_agree());
        assert!(verify_family(Family::Prism, 3, 12).all_agree());
        assert!(verify_family(Family::Gp, 3, 12).all_agree());
        assert!(verify_family(Family::Tm, 3, 6).all_agree());
    }

    #[test]
    fn gp_predicate_is_symmetric_in_k() {
        for n in 3..=20usize {
            for k in 1..n {
                if (2 * k) % n != 0 {
                    assert_eq!(predict_gp(n, k), predict_gp(n, n - k), "n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn report_rendering_marks_disagreements() {
        let report = verify_family(Family::Prism, 3, 6);
        let text = report.to_string();
        assert!(text.contains("family: prism"));
        assert!(text.contains("n=3 predicted=true mult=1 agree"));
        assert!(!text.contains("DISAGREE"));
        assert!(text.ends_with("summary: rows=4 agree=4 disagree=0\n"));
    }

    #[test]
    fn family_parsing() {
        assert_eq!(Family::parse("gp").unwrap(), Family::Gp);
        assert!(matches!(Family::parse("nope"), Err(ClassifyError::UnknownFamily(_))));
    }
}
