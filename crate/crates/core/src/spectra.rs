//! Closed-form spectra for the graph families, a floating symmetric
//! eigensolver used as a cross-check oracle, and combined spectrum reports.
//!
//! Closed forms and the numeric solver are display/verification tools;
//! exact multiplicity decisions stay in [`crate::linalg`].

use std::fmt;

use thiserror::Error;

use crate::graph::Multigraph;
use crate::linalg::eigen_multiplicity;
use crate::textfmt::{sig12, sig12_list};

/// Default tolerance for multiset matching of spectra.
pub const MATCH_TOL: f64 = 1e-9;
/// Default tolerance for bucketing numeric eigenvalues at integers.
pub const BUCKET_TOL: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectraError {
    #[error("ConvergenceFailure: eigensolver residual {residual:e} exceeds {bound:e}")]
    ConvergenceFailure { residual: f64, bound: f64 },
    #[error("BadMultiplicity: expected an even count of eigenvalues, got {0}")]
    BadMultiplicity(usize),
    #[error("OutOfRange: eigenvalue {0} outside [-3, 3] fed to the truncation transform")]
    OutOfRange(f64),
}

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. Returns the
/// diagonal (eigenvalues, unsorted) and the accumulated rotation matrix
/// whose columns are the eigenvectors. Rotations are orthogonal by
/// construction, so residuals land near machine precision; the dense
/// graphs here stay small enough that the O(n^3)-per-sweep cost is
/// irrelevant.
fn jacobi_eigen(mut a: Vec<Vec<f64>>) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = a.len();
    let mut v = vec![vec![0.0; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    let frob: f64 = a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    let target = 1e-13 * frob.max(1.0);
    for _sweep in 0..60 {
        let off: f64 = (0..n)
            .flat_map(|p| ((p + 1)..n).map(move |q| (p, q)))
            .map(|(p, q)| 2.0 * a[p][q] * a[p][q])
            .sum::<f64>()
            .sqrt();
        if off <= target {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // A <- J^T A J, J the (p,q)-plane rotation
                for i in 0..n {
                    let aip = a[i][p];
                    let aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for j in 0..n {
                    let apj = a[p][j];
                    let aqj = a[q][j];
                    a[p][j] = c * apj - s * aqj;
                    a[q][j] = s * apj + c * aqj;
                }
                for row in v.iter_mut() {
                    let vip = row[p];
                    let viq = row[q];
                    row[p] = c * vip - s * viq;
                    row[q] = s * vip + c * viq;
                }
            }
        }
    }
    let values = (0..n).map(|i| a[i][i]).collect();
    (values, v)
}

/// All `n` eigenvalues of the adjacency matrix, ascending, via cyclic
/// Jacobi iteration. The residual `max |(A v - lambda v)_i|` over the
/// computed eigenpairs is checked against `tol * n`.
pub fn numeric_spectrum(g: &Multigraph, tol: f64) -> Result<Vec<f64>, SpectraError> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut a = vec![vec![0.0f64; n]; n];
    for &(u, v) in g.edges() {
        a[u][v] += 1.0;
        a[v][u] += 1.0;
    }
    let (values, vectors) = jacobi_eigen(a.clone());
    let mut residual = 0.0f64;
    for (j, &lambda) in values.iter().enumerate() {
        for i in 0..n {
            let av: f64 = (0..n).map(|k| a[i][k] * vectors[k][j]).sum();
            residual = residual.max((av - lambda * vectors[i][j]).abs());
        }
    }
    let bound = tol * n as f64;
    if residual > bound {
        return Err(SpectraError::ConvergenceFailure { residual, bound });
    }
    let mut vals = values;
    vals.sort_by(f64::total_cmp);
    Ok(vals)
}

fn sorted(mut vals: Vec<f64>) -> Vec<f64> {
    vals.sort_by(f64::total_cmp);
    vals
}

/// Spectrum of the doubled even cycle on `2n` vertices:
/// `+-sqrt(4 cos(2 pi j / n) + 5)` for `j = 0..n`.
pub fn f2n_closed_spectrum(n: usize) -> Vec<f64> {
    let mut vals = Vec::with_capacity(2 * n);
    for j in 0..n {
        let root = (4.0 * (std::f64::consts::TAU * j as f64 / n as f64).cos() + 5.0).sqrt();
        vals.push(root);
        vals.push(-root);
    }
    sorted(vals)
}

/// Prism spectrum: `2 cos(2 pi j / n) +- 1` for `j = 0..n`.
pub fn prism_closed_spectrum(n: usize) -> Vec<f64> {
    let mut vals = Vec::with_capacity(2 * n);
    for j in 0..n {
        let c = 2.0 * (std::f64::consts::TAU * j as f64 / n as f64).cos();
        vals.push(c + 1.0);
        vals.push(c - 1.0);
    }
    sorted(vals)
}

/// `P(n, k)` spectrum: for each `j`, the two roots of
/// `x^2 - (a_j + b_j) x + a_j b_j - 1` with `a_j = 2 cos(2 pi j / n)` and
/// `b_j = 2 cos(2 pi j k / n)`. The discriminant `(a - b)^2 + 4` is
/// positive, so each `j` contributes two distinct reals.
pub fn gp_closed_spectrum(n: usize, k: usize) -> Vec<f64> {
    let mut vals = Vec::with_capacity(2 * n);
    for (a, b) in gp_cos_pairs(n, k) {
        let disc = ((a - b) * (a - b) + 4.0).sqrt();
        vals.push((a + b + disc) / 2.0);
        vals.push((a + b - disc) / 2.0);
    }
    sorted(vals)
}

/// The `(a_j, b_j)` cosine pairs behind [`gp_closed_spectrum`].
pub fn gp_cos_pairs(n: usize, k: usize) -> Vec<(f64, f64)> {
    (0..n)
        .map(|j| {
            let theta = std::f64::consts::TAU * j as f64 / n as f64;
            (2.0 * theta.cos(), 2.0 * (theta * k as f64).cos())
        })
        .collect()
}

/// Spectrum of the order-`2m^2` graph of `t_m`:
/// `cos(2 pi j / m) + cos(2 pi l / m) +- sqrt((cos j - cos l)^2 + 1)` over
/// all pairs `(j, l)`.
pub fn tm_closed_spectrum(m: usize) -> Vec<f64> {
    let cos: Vec<f64> =
        (0..m).map(|j| (std::f64::consts::TAU * j as f64 / m as f64).cos()).collect();
    let mut vals = Vec::with_capacity(2 * m * m);
    for &a in &cos {
        for &b in &cos {
            let disc = ((a - b) * (a - b) + 1.0).sqrt();
            vals.push(a + b + disc);
            vals.push(a + b - disc);
        }
    }
    sorted(vals)
}

/// Spectrum transform of cubic vertex truncation: each input eigenvalue
/// `mu` yields `(1 +- sqrt(4 mu + 13)) / 2`, plus `n/2` copies each of
/// `-2` and `0`.
pub fn truncation_closed_spectrum(mu: &[f64], n: usize) -> Result<Vec<f64>, SpectraError> {
    if mu.len() != n || n % 2 != 0 {
        return Err(SpectraError::BadMultiplicity(mu.len()));
    }
    let mut vals = Vec::with_capacity(3 * n);
    for &m in mu {
        if !(-3.0 - BUCKET_TOL..=3.0 + BUCKET_TOL).contains(&m) {
            return Err(SpectraError::OutOfRange(m));
        }
        let disc = (4.0 * m + 13.0).sqrt();
        vals.push((1.0 + disc) / 2.0);
        vals.push((1.0 - disc) / 2.0);
    }
    vals.extend(std::iter::repeat(-2.0).take(n / 2));
    vals.extend(std::iter::repeat(0.0).take(n / 2));
    Ok(sorted(vals))
}

/// True when the two sorted multisets agree elementwise within `tol`.
pub fn multisets_match(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len()
        && sorted(a.to_vec())
            .iter()
            .zip(sorted(b.to_vec()))
            .all(|(x, y)| (x - y).abs() <= tol)
}

/// Number of entries of `spectrum` within `tol` of `target`.
pub fn count_close(spectrum: &[f64], target: f64, tol: f64) -> usize {
    spectrum.iter().filter(|&&x| (x - target).abs() <= tol).count()
}

/// Provenance of a spectrum report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumSource {
    /// Integer multiplicities from fraction-free rank, numeric listing from
    /// the eigensolver.
    ExactRank,
    /// Values from a family's closed-form expression.
    ClosedForm,
    /// Eigensolver output only.
    Numeric,
}

impl fmt::Display for SpectrumSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpectrumSource::ExactRank => "exact-rank",
            SpectrumSource::ClosedForm => "closed-form",
            SpectrumSource::Numeric => "numeric",
        })
    }
}

/// Eigenvalue listing for one graph: exact integer multiplicities next to
/// the numeric spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    pub n: usize,
    pub edge_count: usize,
    /// `(lambda, multiplicity)` for every integer eigenvalue with nonzero
    /// multiplicity, ascending in `lambda`; multiplicities are exact.
    pub integer_eigs: Vec<(i64, usize)>,
    pub numeric_eigs: Vec<f64>,
    pub source: SpectrumSource,
}

/// Numeric spectrum plus exact multiplicities at every integer in
/// `[-max_degree, max_degree]`, at the default residual tolerance.
pub fn spectrum_report(g: &Multigraph) -> Result<SpectrumReport, SpectraError> {
    spectrum_report_with(g, MATCH_TOL)
}

/// [`spectrum_report`] with an explicit eigensolver residual tolerance.
pub fn spectrum_report_with(g: &Multigraph, tol: f64) -> Result<SpectrumReport, SpectraError> {
    let numeric_eigs = numeric_spectrum(g, tol)?;
    let delta = g.degree_sequence().into_iter().max().unwrap_or(0) as i64;
    let integer_eigs = (-delta..=delta)
        .filter_map(|lambda| {
            let mult = eigen_multiplicity(g, lambda);
            (mult > 0).then_some((lambda, mult))
        })
        .collect();
    Ok(SpectrumReport {
        n: g.vertex_count(),
        edge_count: g.edge_count(),
        integer_eigs,
        numeric_eigs,
        source: SpectrumSource::ExactRank,
    })
}

impl fmt::Display for SpectrumReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "edges: {}", self.edge_count)?;
        let ints = self
            .integer_eigs
            .iter()
            .map(|(l, m)| format!("({l}, {m})"))
            .collect::<Vec<_>>()
            .join(" ");
        writeln!(f, "integer_eigs: {ints}")?;
        writeln!(f, "numeric_eigs: {}", sig12_list(&self.numeric_eigs))?;
        writeln!(f, "source: {}", self.source)
    }
}

impl SpectrumReport {
    /// Internal consistency: numeric count is `n`, trace vanishes, the sum
    /// of squares matches the diagonal of `A^2`, and every exact integer
    /// multiplicity is reproduced by numeric bucketing.
    ///
    /// The sum of squared eigenvalues equals the number of ordered vertex
    /// pairs weighted by squared edge multiplicity; for simple graphs that
    /// is `2 |E|`.
    pub fn check_consistency(&self, g: &Multigraph) -> Result<(), String> {
        if self.numeric_eigs.len() != self.n {
            return Err(format!("expected {} numeric eigenvalues", self.n));
        }
        let trace: f64 = self.numeric_eigs.iter().sum();
        if trace.abs() > BUCKET_TOL {
            return Err(format!("trace {} not ~ 0", sig12(trace)));
        }
        let sq_sum: f64 = self.numeric_eigs.iter().map(|x| x * x).sum();
        let adj = g.adjacency_counts();
        let expected: usize = adj.iter().flat_map(|m| m.values()).map(|&c| c * c).sum();
        if (sq_sum - expected as f64).abs() > BUCKET_TOL {
            return Err(format!("sum of squares {} != {expected}", sig12(sq_sum)));
        }
        for &(lambda, mult) in &self.integer_eigs {
            let bucket = count_close(&self.numeric_eigs, lambda as f64, BUCKET_TOL);
            if bucket != mult {
                return Err(format!("lambda={lambda}: exact {mult} vs numeric {bucket}"));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{
        complete_k33, complete_k4, f2n, gen_petersen, prism, t_m, triple_edge, truncate_cubic,
    };
    use approx::assert_abs_diff_eq;

    fn cycle(n: usize) -> Multigraph {
        Multigraph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn numeric_examples() {
        let c4 = numeric_spectrum(&cycle(4), MATCH_TOL).unwrap();
        for (got, want) in c4.iter().zip([-2.0, 0.0, 0.0, 2.0]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-9);
        }
        let te = numeric_spectrum(&triple_edge(), MATCH_TOL).unwrap();
        for (got, want) in te.iter().zip([-3.0, 3.0]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-9);
        }
        let pet = numeric_spectrum(&gen_petersen(5, 2).unwrap(), MATCH_TOL).unwrap();
        let mut expect = vec![-2.0; 4];
        expect.extend(vec![1.0; 5]);
        expect.push(3.0);
        assert!(multisets_match(&pet, &expect, 1e-9));
    }

    #[test]
    fn f2n_closed_examples() {
        assert!(multisets_match(&f2n_closed_spectrum(2), &[3.0, 1.0, -1.0, -3.0], 1e-12));
        let s3 = f2n_closed_spectrum(3);
        let r3 = 3f64.sqrt();
        assert!(multisets_match(&s3, &[3.0, -3.0, r3, r3, -r3, -r3], 1e-12));
        let numeric = numeric_spectrum(&f2n(4).unwrap(), MATCH_TOL).unwrap();
        assert!(multisets_match(&f2n_closed_spectrum(4), &numeric, 1e-9));
    }

    #[test]
    fn prism_closed_examples() {
        assert!(multisets_match(
            &prism_closed_spectrum(3),
            &[3.0, 1.0, 0.0, 0.0, -2.0, -2.0],
            1e-12
        ));
        assert!(multisets_match(
            &prism_closed_spectrum(4),
            &[3.0, 1.0, 1.0, 1.0, -1.0, -1.0, -1.0, -3.0],
            1e-12
        ));
        let numeric = numeric_spectrum(&prism(5).unwrap(), MATCH_TOL).unwrap();
        assert!(multisets_match(&prism_closed_spectrum(5), &numeric, 1e-9));
    }

    #[test]
    fn gp_closed_examples() {
        let mut petersen = vec![3.0];
        petersen.extend(vec![1.0; 5]);
        petersen.extend(vec![-2.0; 4]);
        assert!(multisets_match(&gp_closed_spectrum(5, 2), &petersen, 1e-9));

        let cube = [3.0, 1.0, 1.0, 1.0, -1.0, -1.0, -1.0, -3.0];
        assert!(multisets_match(&gp_closed_spectrum(4, 1), &cube, 1e-9));

        for n in 3..=12usize {
            for k in 1..n {
                if (2 * k) % n == 0 {
                    continue;
                }
                let numeric =
                    numeric_spectrum(&gen_petersen(n, k).unwrap(), MATCH_TOL).unwrap();
                assert!(
                    multisets_match(&gp_closed_spectrum(n, k), &numeric, 1e-9),
                    "P({n},{k})"
                );
            }
        }
    }

    #[test]
    fn gp_pairs_satisfy_their_quadratic() {
        for n in 3..=12usize {
            for k in 1..n {
                if (2 * k) % n == 0 {
                    continue;
                }
                for (a, b) in gp_cos_pairs(n, k) {
                    let disc = ((a - b) * (a - b) + 4.0).sqrt();
                    let x1 = (a + b + disc) / 2.0;
                    let x2 = (a + b - disc) / 2.0;
                    assert_abs_diff_eq!(x1 + x2, a + b, epsilon = 1e-12);
                    assert_abs_diff_eq!(x1 * x2, a * b - 1.0, epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn tm_closed_examples() {
        // forced evaluation at j = l = 0: 2 +- 1
        let s3 = tm_closed_spectrum(3);
        assert_eq!(count_close(&s3, 3.0, 1e-9), 1);
        let numeric = numeric_spectrum(&t_m(3).unwrap(), MATCH_TOL).unwrap();
        assert!(multisets_match(&s3, &numeric, 1e-9));

        assert_eq!(count_close(&tm_closed_spectrum(4), 1.0, 1e-9), 5);
    }

    #[test]
    fn truncation_closed_examples() {
        let k4 = truncation_closed_spectrum(&[3.0, -1.0, -1.0, -1.0], 4).unwrap();
        let mut expect = vec![3.0, -2.0];
        expect.extend([2.0, -1.0, 2.0, -1.0, 2.0, -1.0]);
        expect.extend([-2.0, -2.0, 0.0, 0.0]);
        assert!(multisets_match(&k4, &expect, 1e-12));

        // mu = -3 contributes (1 +- 1)/2 = {1, 0}: eigenvalue 1 exactly once
        let k33_mu = numeric_spectrum(&complete_k33(), MATCH_TOL).unwrap();
        let tk33 = truncation_closed_spectrum(&k33_mu, 6).unwrap();
        assert_eq!(count_close(&tk33, 1.0, 1e-6), 1);

        for g in [complete_k4(), complete_k33(), prism(4).unwrap(), triple_edge()] {
            let mu = numeric_spectrum(&g, MATCH_TOL).unwrap();
            let closed = truncation_closed_spectrum(&mu, g.vertex_count()).unwrap();
            let numeric =
                numeric_spectrum(&truncate_cubic(&g).unwrap(), MATCH_TOL).unwrap();
            assert!(multisets_match(&closed, &numeric, 1e-9));
        }

        assert!(matches!(
            truncation_closed_spectrum(&[3.0], 1),
            Err(SpectraError::BadMultiplicity(1))
        ));
    }

    #[test]
    fn report_examples() {
        let rep = spectrum_report(&gen_petersen(5, 2).unwrap()).unwrap();
        assert_eq!(rep.integer_eigs, vec![(-2, 4), (1, 5), (3, 1)]);
        rep.check_consistency(&gen_petersen(5, 2).unwrap()).unwrap();

        let rep = spectrum_report(&f2n(4).unwrap()).unwrap();
        for pair in [(-3, 1), (-1, 1), (1, 1), (3, 1)] {
            assert!(rep.integer_eigs.contains(&pair), "missing {pair:?}");
        }
        rep.check_consistency(&f2n(4).unwrap()).unwrap();

        let rep = spectrum_report(&cycle(5)).unwrap();
        assert_eq!(rep.integer_eigs, vec![(2, 1)]);
    }

    #[test]
    fn report_rendering_is_stable() {
        let rep = spectrum_report(&triple_edge()).unwrap();
        assert_eq!(
            rep.to_string(),
            "n: 2\nedges: 3\ninteger_eigs: (-3, 1) (3, 1)\nnumeric_eigs: -3 3\nsource: exact-rank\n"
        );
    }

    #[test]
    fn exact_and_numeric_multiplicities_agree_on_small_graphs() {
        let graphs: Vec<Multigraph> = vec![
            triple_edge(),
            complete_k4(),
            complete_k33(),
            cycle(4),
            cycle(5),
            f2n(2).unwrap(),
            f2n(3).unwrap(),
            f2n(6).unwrap(),
            prism(3).unwrap(),
            prism(4).unwrap(),
            prism(5).unwrap(),
            prism(6).unwrap(),
            gen_petersen(5, 2).unwrap(),
            gen_petersen(6, 2).unwrap(),
        ];
        for g in &graphs {
            assert!(g.vertex_count() <= 12);
            let numeric = numeric_spectrum(g, MATCH_TOL).unwrap();
            for lambda in -3..=3i64 {
                assert_eq!(
                    eigen_multiplicity(g, lambda),
                    count_close(&numeric, lambda as f64, 1e-6),
                    "lambda={lambda}"
                );
            }
        }
    }

    #[test]
    fn bipartite_spectra_are_symmetric() {
        for g in [complete_k33(), prism(4).unwrap(), f2n(2).unwrap(), cycle(6)] {
            assert!(g.bipartition().is_some());
            let s = numeric_spectrum(&g, MATCH_TOL).unwrap();
            let negated: Vec<f64> = s.iter().map(|x| -x).collect();
            assert!(multisets_match(&s, &negated, 1e-9));
        }
    }
}
