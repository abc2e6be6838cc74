//! The bilinear form `B₀` of an algebra with one-dimensional `m²` and the
//! resulting quadric criterion.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{Element, LocalAlgebra, Table};
use crate::corresp::rep_from_algebra;
use crate::exact::{indexed_names, inverse, rank, Matrix, MultiPoly, Scalar};
use crate::{Error, Result};

/// A symmetric bilinear form on an algebra, stored in its own basis.
///
/// `basis` gives that basis in the algebra's coordinates; for forms built
/// by [`build_b0`] it is the proper basis `1, μ…, w`.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm {
    matrix: Matrix<Scalar>,
    basis: Vec<Element>,
    labels: Vec<String>,
    proper: bool,
}

impl BilinearForm {
    /// A form given directly in the algebra's basis.
    pub fn in_algebra_basis(a: &LocalAlgebra, matrix: Matrix<Scalar>) -> Result<Self> {
        if matrix.rows() != a.dim() || !matrix.is_symmetric() {
            return Err(Error::DimensionMismatch(
                "form must be a symmetric matrix of the algebra's dimension".into(),
            ));
        }
        Ok(BilinearForm {
            matrix,
            basis: (0..a.dim()).map(|i| a.basis_element(i)).collect(),
            labels: a.labels().to_vec(),
            proper: false,
        })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix<Scalar> {
        &self.matrix
    }

    pub fn basis(&self) -> &[Element] {
        &self.basis
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rank(&self) -> usize {
        rank(&self.matrix)
    }

    /// The reordering of the algebra's basis, when every vector of the
    /// form's basis is a standard basis vector.
    pub fn permutation(&self) -> Option<Vec<usize>> {
        self.basis
            .iter()
            .map(|v| {
                let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
                (nz.len() == 1 && v[nz[0]].is_one()).then(|| nz[0])
            })
            .collect()
    }

    /// `B(x, y)` for coordinates in the form's basis.
    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let by = self.matrix.mul_vec(y);
        x.iter().zip(&by).fold(Scalar::zero(), |acc, (a, b)| &acc + &(a * b))
    }

    /// `B(u, u)` in variables `u₀, u₁, …`.
    pub fn quadratic_form(&self) -> MultiPoly {
        let d = self.dim();
        let mut q = MultiPoly::zero();
        for i in 0..d {
            for j in 0..d {
                let c = &self.matrix[(i, j)];
                if !c.is_zero() {
                    q = &q + &(&MultiPoly::var(i) * &MultiPoly::var(j)).scale(c);
                }
            }
        }
        q
    }

    /// The quadric equation `−B(y, y)`, so that the canonical form reads
    /// `2y₀y_{n+1} − Σ yᵢ²`.
    pub fn equation(&self) -> MultiPoly {
        -self.quadratic_form()
    }

    /// The matrix transported to the algebra's own coordinates.
    pub fn matrix_in_algebra_basis(&self) -> Matrix<Scalar> {
        let p = Matrix::from_columns(self.dim(), &self.basis);
        let pinv = inverse(&p).expect("form basis is a basis");
        &(&pinv.transpose() * &self.matrix) * &pinv
    }

    /// Whether the basis is a proper basis `1, μ…, w` built by [`build_b0`].
    pub fn is_proper(&self) -> bool {
        self.proper
    }

    /// Middle vectors `μ₂..μ_{n+1}` of a proper basis.
    pub fn middle(&self) -> &[Element] {
        &self.basis[1..self.dim() - 1]
    }
}

/// Variable names `y0, y1, …` for printing quadric equations.
pub fn quadric_names(dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("y{i}")).collect()
}

/// `B₀` in a proper basis `1, μ₂..μ_{n+1}, w` where `w` is the first nonzero
/// product `μᵢμⱼ` (pairs in lex order) and `B₀(1, w) = −1`.
pub fn build_b0(a: &LocalAlgebra) -> Result<BilinearForm> {
    a.ensure_valid()?;
    let powers = a.m_powers();
    let dim_m2 = powers.get(1).map_or(0, Vec::len);
    if dim_m2 != 1 {
        return Err(Error::NotDimOneSquare { dim: dim_m2 });
    }
    assert!(powers.len() == 2, "m³ must vanish when dim m² = 1");
    let d = a.dim();
    let w = (1..d)
        .flat_map(|i| (i..d).map(move |j| (i, j)))
        .map(|(i, j)| a.product(i, j))
        .find(|v| v.iter().any(|x| !x.is_zero()))
        .expect("m² ≠ 0");
    let pivot = (0..d).rev().find(|&k| !w[k].is_zero()).expect("w ≠ 0");
    let mut basis = vec![a.unity()];
    let mut labels = vec![a.labels()[0].clone()];
    for k in (1..d).filter(|&k| k != pivot) {
        basis.push(a.basis_element(k));
        labels.push(a.labels()[k].clone());
    }
    basis.push(w.clone());
    labels.push(a.format_element(&w));

    let last = d - 1;
    let mut b = Matrix::zeros(d, d);
    b[(0, last)] = -Scalar::one();
    b[(last, 0)] = -Scalar::one();
    for i in 1..last {
        for j in 1..last {
            let prod = a.mul(&basis[i], &basis[j]);
            b[(i, j)] = &prod[pivot] / &w[pivot];
        }
    }
    Ok(BilinearForm {
        matrix: b,
        basis,
        labels,
        proper: true,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub enum QuadricVerdict {
    Nondegenerate(BilinearForm),
    Degenerate { form: BilinearForm, rank: usize },
    NotDimOneSquare { dim: usize },
}

impl QuadricVerdict {
    pub fn kind(&self) -> &'static str {
        match self {
            QuadricVerdict::Nondegenerate(_) => "NondegenerateQuadric",
            QuadricVerdict::Degenerate { .. } => "DegenerateQuadric",
            QuadricVerdict::NotDimOneSquare { .. } => "NotDimOneSquare",
        }
    }

    pub fn form(&self) -> Option<&BilinearForm> {
        match self {
            QuadricVerdict::Nondegenerate(f) | QuadricVerdict::Degenerate { form: f, .. } => Some(f),
            QuadricVerdict::NotDimOneSquare { .. } => None,
        }
    }

    pub fn rank(&self) -> Option<usize> {
        self.form().map(BilinearForm::rank)
    }
}

pub fn quadric_verdict(a: &LocalAlgebra) -> Result<QuadricVerdict> {
    match build_b0(a) {
        Ok(form) => {
            let r = form.rank();
            if r == a.dim() {
                Ok(QuadricVerdict::Nondegenerate(form))
            } else {
                Ok(QuadricVerdict::Degenerate { form, rank: r })
            }
        }
        Err(Error::NotDimOneSquare { dim }) => Ok(QuadricVerdict::NotDimOneSquare { dim }),
        Err(e) => Err(e),
    }
}

/// `1, S₁..S_n, w` with `Sᵢ² = w` and all other products of `m` zero.
/// For `n = 1` this is `ℂ[S]/(S³)`.
pub fn canonical_quadric_algebra(n: usize) -> LocalAlgebra {
    assert!(n >= 1, "canonical quadric algebra needs n ≥ 1");
    let d = n + 2;
    let mut labels = vec!["1".to_string()];
    labels.extend(indexed_names("S", n));
    labels.push("S1^2".to_string());
    let mut w = vec![Scalar::zero(); d];
    w[d - 1] = Scalar::one();
    let table: Table = (1..=n).map(|i| ((i, i), w.clone())).collect::<BTreeMap<_, _>>();
    let a = LocalAlgebra::from_table(labels, &table).expect("well-formed table");
    let gens = (1..=n).map(|i| a.basis_element(i)).collect();
    a.with_generators(gens)
}

/// Rank of the middle block of `B₀`: the congruence class of the form
/// `m/m² × m/m² → m²`.
pub fn rank_invariant(a: &LocalAlgebra) -> Result<usize> {
    let b = build_b0(a)?;
    let d = b.dim();
    let middle = Matrix::from_fn(d - 2, d - 2, |i, j| b.matrix()[(i + 1, j + 1)].clone());
    Ok(rank(&middle))
}

/// `B(gx, y) + B(x, gy) = 0` for every group generator `g` and all `x, y`.
///
/// Generators are the middle vectors of a proper basis when the form has
/// one, otherwise the algebra's generators.
pub fn invariance_check(a: &LocalAlgebra, b: &BilinearForm) -> bool {
    if b.dim() != a.dim() {
        return false;
    }
    let g = b.matrix_in_algebra_basis();
    let gens: Vec<Element> = if b.proper {
        b.middle().to_vec()
    } else {
        a.generators_or_basis()
    };
    gens.iter().all(|x| {
        let l = a.left_mult_of(x);
        (&(&l.transpose() * &g) + &(&g * &l)).is_zero()
    })
}

/// The defining identities of `B₀` against the algebra's products:
/// `B(1, μᵢ) = 0`, `B(μᵢ, μⱼ) = −B(1, μᵢμⱼ)`, `B(μᵢ, w) = 0`.
pub fn defining_identities_hold(a: &LocalAlgebra, b: &BilinearForm) -> bool {
    let g = b.matrix_in_algebra_basis();
    let form = |x: &[Scalar], y: &[Scalar]| -> Scalar {
        let gy = g.mul_vec(y);
        x.iter().zip(&gy).fold(Scalar::zero(), |acc, (p, q)| &acc + &(p * q))
    };
    let one = a.unity();
    let mid = b.middle();
    let w = &b.basis()[b.dim() - 1];
    mid.iter().all(|m| form(&one, m).is_zero() && form(m, w).is_zero())
        && form(w, w).is_zero()
        && mid.iter().all(|x| {
            mid.iter()
                .all(|y| form(x, y) == -form(&one, &a.mul(x, y)))
        })
}

/// `q(ρ(a)·1)` as a polynomial in `a₁..a_n`, with `ρ` generated by the
/// middle vectors. Zero exactly when the open orbit lies on the quadric.
pub fn orbit_on_quadric(a: &LocalAlgebra, b: &BilinearForm) -> Result<MultiPoly> {
    let rep = rep_from_algebra(a, b.middle())?;
    let point = rep.matrix().column(0);
    let g = b.matrix_in_algebra_basis().to_poly();
    let gp = g.mul_vec(&point);
    Ok(point
        .iter()
        .zip(&gp)
        .fold(MultiPoly::zero(), |acc, (x, y)| &acc + &(x * y)))
}
