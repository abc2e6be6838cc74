//! Commutative nilpotent subalgebras of `so(G)`: membership, the free-rowed
//! family without an open orbit, and maximality via centralizers.

use num_traits::{One, Zero};

use crate::exact::{exp_nilpotent, kernel_basis, rank, vectors_rank, Matrix, Scalar};
use crate::orbits::orbit_dim_at;
use crate::quadric::{build_b0, canonical_quadric_algebra};
use crate::{Error, Result};

/// A symmetric nondegenerate form `G`.
#[derive(Clone, Debug, PartialEq)]
pub struct FormMatrix {
    matrix: Matrix<Scalar>,
}

impl FormMatrix {
    pub fn new(matrix: Matrix<Scalar>) -> Result<Self> {
        if !matrix.is_square() || !matrix.is_symmetric() {
            return Err(Error::DimensionMismatch("form must be a symmetric square matrix".into()));
        }
        if rank(&matrix) != matrix.rows() {
            return Err(Error::DimensionMismatch("form is degenerate".into()));
        }
        Ok(FormMatrix { matrix })
    }

    pub fn identity(dim: usize) -> Self {
        FormMatrix {
            matrix: Matrix::identity(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix<Scalar> {
        &self.matrix
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        dot(x, &self.matrix.mul_vec(y))
    }

    /// `gᵀGg == G`.
    pub fn is_preserved_by(&self, g: &Matrix<Scalar>) -> bool {
        &(&g.transpose() * &self.matrix) * g == self.matrix
    }
}

fn dot(x: &[Scalar], y: &[Scalar]) -> Scalar {
    x.iter().zip(y).fold(Scalar::zero(), |acc, (a, b)| &acc + &(a * b))
}

/// `XᵀG + GX = 0`.
pub fn so_membership(x: &Matrix<Scalar>, g: &FormMatrix) -> bool {
    x.rows() == g.dim()
        && x.is_square()
        && (&(&x.transpose() * g.matrix()) + &(g.matrix() * x)).is_zero()
}

/// A linear span of matrices together with the form they should preserve.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixSubalgebra {
    basis: Vec<Matrix<Scalar>>,
    form: FormMatrix,
}

impl MatrixSubalgebra {
    pub fn new(basis: Vec<Matrix<Scalar>>, form: FormMatrix) -> Result<Self> {
        let d = form.dim();
        if basis.iter().any(|x| x.rows() != d || x.cols() != d) {
            return Err(Error::DimensionMismatch(format!("basis matrices must be {d}×{d}")));
        }
        let flat: Vec<Vec<Scalar>> = basis.iter().map(|x| x.entries().cloned().collect()).collect();
        if vectors_rank(&flat) != basis.len() {
            return Err(Error::DimensionMismatch("basis matrices are linearly dependent".into()));
        }
        Ok(MatrixSubalgebra { basis, form })
    }

    pub fn ambient_dim(&self) -> usize {
        self.form.dim()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix<Scalar>] {
        &self.basis
    }

    pub fn form(&self) -> &FormMatrix {
        &self.form
    }

    /// `Σ cᵢXᵢ`.
    pub fn element(&self, coeffs: &[Scalar]) -> Matrix<Scalar> {
        let d = self.ambient_dim();
        self.basis
            .iter()
            .zip(coeffs)
            .fold(Matrix::zeros(d, d), |acc, (x, c)| &acc + &x.scale(c))
    }

    pub fn all_so_members(&self) -> bool {
        self.basis.iter().all(|x| so_membership(x, &self.form))
    }

    pub fn is_commutative(&self) -> bool {
        self.basis
            .iter()
            .enumerate()
            .all(|(i, x)| self.basis[i + 1..].iter().all(|y| x.commutator(y).is_zero()))
    }

    pub fn is_nilpotent(&self) -> bool {
        let d = self.ambient_dim();
        self.basis.iter().all(|x| x.pow(d).is_zero())
    }
}

/// The form of the free-rowed family on `ℂ^{n+2}`, with blocks
/// `(0 0 E₄ / 0 E_{n−6} 0 / E₄ 0 0)`.
pub fn free_rowed_form(n: usize) -> FormMatrix {
    assert!(n >= 6, "free-rowed family needs n ≥ 6");
    let d = n + 2;
    let matrix = Matrix::from_fn(d, d, |i, j| {
        let paired = (i < 4 && j == i + d - 4) || (j < 4 && i == j + d - 4);
        let middle = i == j && (4..d - 4).contains(&i);
        if paired || middle {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    FormMatrix { matrix }
}

/// Block matrices `(0 A Y / 0 0 B / 0 0 0)` with `Y` antisymmetric, `A`
/// zero except its first row `m`, and `B` zero except its first column
/// `−m`. Basis: the six `Y` generators, then one per `mₖ`.
pub fn free_rowed_subalgebra(n: usize) -> MatrixSubalgebra {
    let form = free_rowed_form(n);
    let d = n + 2;
    let top = d - 4;
    let mut basis = Vec::with_capacity(n);
    for i in 0..4 {
        for j in i + 1..4 {
            let mut y = Matrix::zeros(d, d);
            y[(i, top + j)] = Scalar::one();
            y[(j, top + i)] = -Scalar::one();
            basis.push(y);
        }
    }
    for k in 0..n - 6 {
        let mut x = Matrix::zeros(d, d);
        x[(0, 4 + k)] = Scalar::one();
        x[(4 + k, top)] = -Scalar::one();
        basis.push(x);
    }
    MatrixSubalgebra::new(basis, form).expect("independent generators")
}

/// Left multiplications by `S₁..S_n` on the canonical quadric algebra,
/// with the form `B₀`.
pub fn quadric_subalgebra(n: usize) -> MatrixSubalgebra {
    let a = canonical_quadric_algebra(n);
    let b = build_b0(&a).expect("canonical algebra has dim m² = 1");
    let form = FormMatrix::new(b.matrix_in_algebra_basis()).expect("B₀ is nondegenerate");
    let basis = a
        .generators()
        .expect("canonical generators")
        .iter()
        .map(|g| a.left_mult_of(g))
        .collect();
    MatrixSubalgebra::new(basis, form).expect("independent generators")
}

fn sample_vector(rng: &mut rand_chacha::ChaCha8Rng, d: usize, bound: i64) -> Vec<Scalar> {
    (0..d)
        .map(|_| crate::orbits::random_gaussian(rng, bound))
        .collect()
}

/// Moves `v` onto the quadric `G(v, v) = 0` along an isotropic basis
/// direction `e`: `v − G(v,v)/(2G(e,v))·e`.
fn onto_quadric(g: &FormMatrix, v: &[Scalar]) -> Option<Vec<Scalar>> {
    let d = g.dim();
    let q = g.eval(v, v);
    (0..d).find_map(|j| {
        if !g.matrix()[(j, j)].is_zero() {
            return None;
        }
        let gev = g.matrix().row(j).iter().zip(v).fold(Scalar::zero(), |acc, (a, b)| &acc + &(a * b));
        if gev.is_zero() {
            return None;
        }
        let t = &q / &(&Scalar::from_int(2) * &gev);
        let mut w = v.to_vec();
        w[j] = &w[j] - &t;
        Some(w)
    })
}

/// Largest projective orbit dimension `rank[v, X₁v, …] − 1` over the
/// standard basis vectors and `trials` random vectors, each also moved
/// onto the quadric of the form.
pub fn no_open_orbit_check(s: &MatrixSubalgebra, seed: u64, trials: usize) -> usize {
    let d = s.ambient_dim();
    let mut rng = crate::orbits::stratum_rng(seed, 0);
    let mut points: Vec<Vec<Scalar>> = (0..d)
        .map(|i| (0..d).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
        .collect();
    for _ in 0..trials {
        let v = sample_vector(&mut rng, d, 10);
        if let Some(w) = onto_quadric(s.form(), &v) {
            debug_assert!(s.form().eval(&w, &w).is_zero());
            points.push(w);
        }
        points.push(v);
    }
    points
        .iter()
        .map(|v| orbit_dim_at(s.basis(), v))
        .max()
        .unwrap_or(0)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Centralizer {
    pub dim: usize,
    pub basis: Vec<Matrix<Scalar>>,
}

/// Solutions of `XᵀG + GX = 0`, `[X, Xᵢ] = 0` for all basis elements.
pub fn centralizer_in_so(s: &MatrixSubalgebra) -> Centralizer {
    let d = s.ambient_dim();
    let g = s.form().matrix();
    let unit = |k: usize| {
        let mut e = Matrix::zeros(d, d);
        e[(k / d, k % d)] = Scalar::one();
        e
    };
    // Column k holds the image of the k-th matrix unit under every equation.
    let images: Vec<Vec<Scalar>> = (0..d * d)
        .map(|k| {
            let e = unit(k);
            let mut col: Vec<Scalar> = (&(&e.transpose() * g) + &(g * &e)).entries().cloned().collect();
            for x in s.basis() {
                col.extend(e.commutator(x).entries().cloned());
            }
            col
        })
        .collect();
    let system = Matrix::from_columns(images[0].len(), &images);
    let basis: Vec<Matrix<Scalar>> = kernel_basis(&system)
        .into_iter()
        .map(|v| Matrix::from_fn(d, d, |i, j| v[i * d + j].clone()))
        .collect();
    Centralizer {
        dim: basis.len(),
        basis,
    }
}

/// Checks on the generic (all parameters 1) element of the free-rowed family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleSummary {
    pub n: usize,
    pub so_membership: bool,
    pub commutative: bool,
    pub cube_zero: bool,
    /// Nonzero entries of `X²` as 0-based `(row, col, value)`. Empty for
    /// `n = 6`, where the single entry `−(n−6)` vanishes.
    pub square_support: Vec<(usize, usize, String)>,
    pub exp_identity: bool,
    pub exp_preserves_form: bool,
    pub max_orbit_dim: usize,
    pub centralizer_dim: usize,
}

impl CounterexampleSummary {
    /// `X²` vanishes away from the 0-based entry `(0, n−2)`.
    pub fn square_in_corner(&self) -> bool {
        self.square_support.iter().all(|&(i, j, _)| (i, j) == (0, self.n - 2))
    }

    pub fn passed(&self) -> bool {
        self.so_membership
            && self.commutative
            && self.cube_zero
            && self.square_in_corner()
            && self.exp_identity
            && self.exp_preserves_form
            && self.max_orbit_dim < self.n
    }
}

/// `exp(X) = E + X + ½X²` and `exp(X)` preserves `G`, for a square-zero-cube `X`.
pub fn exp_checks(x: &Matrix<Scalar>, g: &FormMatrix) -> (bool, bool) {
    let d = x.rows();
    let e = exp_nilpotent(x, d).expect("nilpotent");
    let truncated = &(&Matrix::identity(d) + x) + &x.pow(2).scale(&Scalar::ratio(1, 2));
    (e == truncated, g.is_preserved_by(&e))
}

pub fn so_counterexample(n: usize, seed: u64, trials: usize) -> CounterexampleSummary {
    let s = free_rowed_subalgebra(n);
    let x = s.element(&vec![Scalar::one(); s.dim()]);
    let x2 = x.pow(2);
    let d = s.ambient_dim();
    let square_support = (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .filter(|&(i, j)| !x2[(i, j)].is_zero())
        .map(|(i, j)| (i, j, x2[(i, j)].to_string()))
        .collect();
    let (exp_identity, exp_preserves_form) = exp_checks(&x, s.form());
    CounterexampleSummary {
        n,
        so_membership: s.all_so_members(),
        commutative: s.is_commutative(),
        cube_zero: x.pow(3).is_zero(),
        square_support,
        exp_identity,
        exp_preserves_form,
        max_orbit_dim: no_open_orbit_check(&s, seed, trials),
        centralizer_dim: centralizer_in_so(&s).dim,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_rowed_basics() {
        let s = free_rowed_subalgebra(6);
        assert_eq!((s.dim(), s.ambient_dim()), (6, 8));
        assert!(s.all_so_members() && s.is_commutative() && s.is_nilpotent());
        assert!(so_membership(&Matrix::zeros(8, 8), s.form()));
    }

    #[test]
    fn generic_square_has_one_entry() {
        let c = so_counterexample(9, 0, 4);
        assert_eq!(c.square_support, vec![(0, 7, "-3".to_string())]);
        assert!(c.passed(), "{c:?}");
        assert!(c.max_orbit_dim <= 7);
    }

    #[test]
    fn jordan_block_is_not_orthogonal() {
        let mut j = Matrix::zeros(3, 3);
        j[(1, 0)] = Scalar::one();
        j[(2, 1)] = Scalar::one();
        assert!(!so_membership(&j, &FormMatrix::identity(3)));
    }

    #[test]
    fn quadric_side_has_open_orbit() {
        let s = quadric_subalgebra(3);
        assert!(s.all_so_members() && s.is_commutative());
        assert_eq!(no_open_orbit_check(&s, 0, 2), 3);
        assert_eq!(centralizer_in_so(&s).dim, 3);
    }

    #[test]
    fn single_generator_is_not_maximal() {
        let s = free_rowed_subalgebra(7);
        let one = MatrixSubalgebra::new(vec![s.basis()[6].clone()], s.form().clone()).unwrap();
        assert!(centralizer_in_so(&one).dim > 1);
        let zero = MatrixSubalgebra::new(vec![], s.form().clone()).unwrap();
        assert_eq!(no_open_orbit_check(&zero, 0, 3), 0);
    }
}
