//! Exact rank and nullspace of integer matrices over the rationals.
//!
//! Eigenvalue multiplicities are decided here, by fraction-free (Bareiss)
//! elimination on `A - lambda*I` with arbitrary-precision integers. No
//! float ever enters a multiplicity claim; the floating eigensolver in
//! [`crate::spectra`] exists only as a cross-check oracle.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::graph::Multigraph;

/// Dense arbitrary-precision integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        IntMatrix { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Self::new(rows, cols, entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![BigInt::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { BigInt::one() } else { BigInt::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Exact matrix-vector product over the rationals.
    pub fn mul_rational(&self, v: &RationalVector) -> Vec<BigRational> {
        assert_eq!(v.entries.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(&v.entries)
                    .filter(|(a, x)| !a.is_zero() && !x.is_zero())
                    .map(|(a, x)| BigRational::from(a.clone()) * x)
                    .sum()
            })
            .collect()
    }
}

/// Vector of rationals in lowest terms (maintained by the `BigRational`
/// representation itself).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalVector {
    pub entries: Vec<BigRational>,
}

impl RationalVector {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Symmetric adjacency matrix; entry `(u, v)` is the multiplicity of the
/// edge `{u, v}`, diagonal zero.
pub fn adjacency_matrix(g: &Multigraph) -> IntMatrix {
    let n = g.vertex_count();
    let mut m = IntMatrix::zeros(n, n);
    for &(u, v) in g.edges() {
        let inc: BigInt = m.get(u, v) + 1;
        m.set(u, v, inc.clone());
        m.set(v, u, inc);
    }
    m
}

/// `A - lambda*I` for the adjacency matrix `A` of `g`.
pub fn adjacency_minus_lambda(g: &Multigraph, lambda: i64) -> IntMatrix {
    let mut m = adjacency_matrix(g);
    for v in 0..g.vertex_count() {
        let e = m.get(v, v) - BigInt::from(lambda);
        m.set(v, v, e);
    }
    m
}

/// Fraction-free row echelon form. Returns the eliminated rows and the
/// pivot column of each pivot row. Pivots are the first nonzero entry in
/// column order, no magnitude pivoting, so elimination traces are
/// reproducible.
fn bareiss_echelon(m: &IntMatrix) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows).map(|r| m.row(r).to_vec()).collect();
    let mut pivot_cols = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][c].clone();
        for i in r + 1..m.rows {
            for j in c + 1..m.cols {
                let t = &pivot * &a[i][j] - &a[i][c] * &a[r][j];
                debug_assert!((&t % &prev).is_zero(), "Bareiss division must be exact");
                a[i][j] = t / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = pivot;
        pivot_cols.push(c);
        r += 1;
    }
    (a, pivot_cols)
}

/// Rank over the rationals.
pub fn integer_rank(m: &IntMatrix) -> usize {
    bareiss_echelon(m).1.len()
}

/// Multiplicity of `lambda` as an eigenvalue of the adjacency matrix:
/// `n - rank(A - lambda*I)`. Algebraic and geometric multiplicities agree
/// because the matrix is symmetric.
pub fn eigen_multiplicity(g: &Multigraph, lambda: i64) -> usize {
    g.vertex_count() - integer_rank(&adjacency_minus_lambda(g, lambda))
}

/// Basis of `ker(m)` over the rationals, one vector per free column of the
/// echelon form, each normalized so its first nonzero entry is 1.
pub fn rational_nullspace(m: &IntMatrix) -> Vec<RationalVector> {
    let (a, pivot_cols) = bareiss_echelon(m);
    let pivot_set: BTreeSet<usize> = pivot_cols.iter().copied().collect();
    let mut basis = Vec::new();
    for f in (0..m.cols).filter(|c| !pivot_set.contains(c)) {
        let mut x = vec![BigRational::zero(); m.cols];
        x[f] = BigRational::one();
        // Echelon row r has its first nonzero entry at pivot_cols[r], so in
        // reverse order every x[j] to the right of the pivot is known.
        for (r, &c) in pivot_cols.iter().enumerate().rev() {
            let mut s = BigRational::zero();
            for j in c + 1..m.cols {
                if !a[r][j].is_zero() && !x[j].is_zero() {
                    s += BigRational::from(a[r][j].clone()) * &x[j];
                }
            }
            x[c] = -s / BigRational::from(a[r][c].clone());
        }
        let inv = x
            .iter()
            .find(|e| !e.is_zero())
            .expect("nullspace vector has a nonzero entry")
            .recip();
        for e in &mut x {
            *e *= &inv;
        }
        basis.push(RationalVector { entries: x });
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Multigraph;
    use proptest::prelude::*;

    fn triple_edge() -> Multigraph {
        Multigraph::from_edge_list(2, [(0, 1); 3]).unwrap()
    }

    fn cycle(n: usize) -> Multigraph {
        Multigraph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn f4() -> Multigraph {
        Multigraph::from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 1), (2, 3)]).unwrap()
    }

    fn petersen_like(n: usize, k: usize) -> Multigraph {
        let outer = (0..n).map(|j| (j, (j + 1) % n));
        let spokes = (0..n).map(|j| (j, n + j));
        let inner = (0..n).map(|j| (n + j, n + (j + k) % n));
        Multigraph::from_edge_list(2 * n, outer.chain(spokes).chain(inner)).unwrap()
    }

    #[test]
    fn adjacency_examples() {
        let a = adjacency_matrix(&triple_edge());
        assert_eq!(a, IntMatrix::from_i64(2, 2, &[0, 3, 3, 0]));

        let c3 = adjacency_matrix(&cycle(3));
        assert_eq!(c3, IntMatrix::from_i64(3, 3, &[0, 1, 1, 1, 0, 1, 1, 1, 0]));

        let f = adjacency_matrix(&f4());
        assert_eq!(
            f,
            IntMatrix::from_i64(4, 4, &[0, 2, 0, 1, 2, 0, 1, 0, 0, 1, 0, 2, 1, 0, 2, 0])
        );
    }

    #[test]
    fn rank_examples() {
        assert_eq!(integer_rank(&IntMatrix::identity(4)), 4);
        assert_eq!(integer_rank(&IntMatrix::zeros(3, 5)), 0);
        // Petersen graph: eigenvalue 1 has multiplicity 5, so A - I has rank 5.
        let shifted = adjacency_minus_lambda(&petersen_like(5, 2), 1);
        assert_eq!(integer_rank(&shifted), 5);
    }

    #[test]
    fn rank_of_rank_deficient_with_zero_columns() {
        // forces column skipping in the elimination
        let m = IntMatrix::from_i64(3, 4, &[0, 2, 4, 6, 0, 1, 2, 3, 0, 0, 0, 5]);
        assert_eq!(integer_rank(&m), 2);
    }

    #[test]
    fn eigen_multiplicity_examples() {
        assert_eq!(eigen_multiplicity(&cycle(4), 0), 2);
        assert_eq!(eigen_multiplicity(&triple_edge(), 3), 1);
        // P(8,3): 1 is not simple; the exact count is 3.
        assert_eq!(eigen_multiplicity(&petersen_like(8, 3), 1), 3);
    }

    #[test]
    fn nullspace_examples() {
        assert!(rational_nullspace(&IntMatrix::identity(3)).is_empty());

        let zero = rational_nullspace(&IntMatrix::zeros(2, 2));
        assert_eq!(zero.len(), 2);
        let one = BigRational::one();
        let nil = BigRational::zero();
        assert_eq!(zero[0].entries, vec![one.clone(), nil.clone()]);
        assert_eq!(zero[1].entries, vec![nil, one]);

        let basis = rational_nullspace(&adjacency_minus_lambda(&f4(), 1));
        assert_eq!(basis.len(), 1);
        let expect: Vec<BigRational> =
            [1, 1, -1, -1].iter().map(|&x| BigRational::from_integer(x.into())).collect();
        assert_eq!(basis[0].entries, expect);
    }

    fn arb_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..=8, 1usize..=8).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-9i64..=9, r * c)
                .prop_map(move |v| IntMatrix::from_i64(r, c, &v))
        })
    }

    fn arb_matrix_20() -> impl Strategy<Value = IntMatrix> {
        (1usize..=20, 1usize..=20).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-4i64..=4, r * c)
                .prop_map(move |v| IntMatrix::from_i64(r, c, &v))
        })
    }

    proptest! {
        #[test]
        fn nullspace_vectors_are_in_kernel(m in arb_matrix()) {
            for v in rational_nullspace(&m) {
                prop_assert!(m.mul_rational(&v).iter().all(|e| e.is_zero()));
            }
        }

        #[test]
        fn nullity_plus_rank_is_cols(m in arb_matrix()) {
            prop_assert_eq!(integer_rank(&m) + rational_nullspace(&m).len(), m.cols());
        }

        #[test]
        fn rank_equals_rank_of_transpose(m in arb_matrix_20()) {
            prop_assert_eq!(integer_rank(&m), integer_rank(&m.transpose()));
        }
    }
}
