//! Exact elimination: fraction-free rank, reduced row echelon form, kernels
//! and linear solves.

use num_traits::{One, Zero};

use super::{Matrix, Ring, Scalar};

/// Rank by fraction-free (Bareiss) elimination.
///
/// Works over any [`Ring`] with exact division, so the same routine gives the
/// rank over ℚ(i) for scalar matrices and the rank over the rational function
/// field for polynomial matrices.
pub fn bareiss_rank<T: Ring>(m: &Matrix<T>) -> usize {
    let mut a = m.to_rows();
    let rows = m.rows();
    let cols = m.cols();
    let mut prev = T::one();
    let mut rank = 0;
    for k in 0..cols {
        if rank == rows {
            break;
        }
        let pivot = (rank..rows)
            .filter(|&i| !a[i][k].is_zero())
            .min_by_key(|&i| a[i][k].weight());
        let Some(p) = pivot else { continue };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let prow = &top[rank];
        let pk = prow[k].clone();
        for row in rest.iter_mut() {
            let factor = row[k].clone();
            for j in (k + 1)..cols {
                let v = pk.clone() * &row[j] - &(factor.clone() * &prow[j]);
                row[j] = v
                    .exact_div(&prev)
                    .expect("Bareiss step must divide exactly");
            }
            row[k] = T::zero();
        }
        prev = pk;
        rank += 1;
    }
    rank
}

/// `rank` over the Gaussian rationals.
pub fn rank(m: &Matrix<Scalar>) -> usize {
    bareiss_rank(m)
}

/// Reduced row echelon form. Returns the reduced matrix and pivot columns.
pub fn rref(m: &Matrix<Scalar>) -> (Matrix<Scalar>, Vec<usize>) {
    let mut a = m.to_rows();
    let rows = m.rows();
    let cols = m.cols();
    let mut pivots = Vec::new();
    let mut r = 0;
    for k in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows)
            .filter(|&i| !a[i][k].is_zero())
            .min_by_key(|&i| a[i][k].bit_weight())
        else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][k].inv().expect("nonzero pivot");
        for v in a[r].iter_mut() {
            if !v.is_zero() {
                *v = &*v * &inv;
            }
        }
        let prow = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[k].is_zero() {
                continue;
            }
            let f = row[k].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        pivots.push(k);
        r += 1;
    }
    (Matrix::from_rows_or_empty(a, rows, cols), pivots)
}

impl Matrix<Scalar> {
    fn from_rows_or_empty(rows: Vec<Vec<Scalar>>, r: usize, c: usize) -> Self {
        if r == 0 {
            Matrix::zeros(0, c)
        } else {
            Matrix::from_rows(rows)
        }
    }
}

/// Basis of the right null space `{x : m·x = 0}`.
pub fn kernel_basis(m: &Matrix<Scalar>) -> Vec<Vec<Scalar>> {
    let (r, pivots) = rref(m);
    let cols = m.cols();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); cols];
            v[f] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&r[(row, f)];
            }
            v
        })
        .collect()
}

/// Reduced echelon basis of the span of `vectors` (all of length `len`).
pub fn span_basis(vectors: &[Vec<Scalar>], len: usize) -> Vec<Vec<Scalar>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_rows(vectors.to_vec());
    let (r, pivots) = rref(&m);
    debug_assert!(r.cols() == len);
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

/// Rank of a family of vectors.
pub fn vectors_rank(vectors: &[Vec<Scalar>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    rank(&Matrix::from_rows(vectors.to_vec()))
}

/// Some solution of `m·x = b`, or `None` if the system is inconsistent.
pub fn solve(m: &Matrix<Scalar>, b: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(m.rows(), b.len());
    let aug = Matrix::from_fn(m.rows(), m.cols() + 1, |i, j| {
        if j < m.cols() {
            m[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&m.cols()) {
        return None;
    }
    let mut x = vec![Scalar::zero(); m.cols()];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r[(row, m.cols())].clone();
    }
    Some(x)
}

pub fn inverse(m: &Matrix<Scalar>) -> Option<Matrix<Scalar>> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    let aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m[(i, j)].clone()
        } else if j - n == i {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(Matrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
}
