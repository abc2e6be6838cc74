//! Algebra ↔ cyclic representation ↔ shift-invariant polynomial space.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{truncated_quotient, Element, LocalAlgebra, Presentation};
use crate::exact::{
    exp_nilpotent, indexed_names, inverse, kernel_basis, nilpotency_index, rref, vectors_rank,
    Matrix, Monomial, MultiPoly, Scalar,
};
use crate::{Error, Exec, Result};

/// `ρ(a) = exp(a₁M₁ + … + a_nM_n)` as a matrix of polynomials in `a₁..a_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct RepMatrix {
    n: usize,
    matrix: Matrix<MultiPoly>,
    marked: usize,
}

impl RepMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix<MultiPoly> {
        &self.matrix
    }

    /// Index of the cyclic vector (the unity coordinate).
    pub fn marked_vector(&self) -> usize {
        self.marked
    }

    pub fn param_names(&self) -> Vec<String> {
        indexed_names("a", self.n)
    }

    pub fn eval(&self, a: &[Scalar]) -> Matrix<Scalar> {
        self.matrix.eval(a)
    }

    /// `∂ρ/∂aᵢ` at `a = 0`, i.e. the `i`-th generator matrix.
    pub fn derivative_at_zero(&self, i: usize) -> Matrix<Scalar> {
        let m = Monomial::var(i);
        self.matrix.map(|p| p.coeff(&m))
    }

    pub fn display(&self) -> String {
        self.matrix.display(&self.param_names())
    }

    /// `ρ(a)·ρ(b) = ρ(a + b)` as a polynomial identity in `a, b`.
    pub fn is_homomorphism(&self) -> bool {
        let n = self.n;
        let b: Vec<MultiPoly> = (0..n).map(|i| MultiPoly::var(n + i)).collect();
        let sum: Vec<MultiPoly> = (0..n)
            .map(|i| &MultiPoly::var(i) + &MultiPoly::var(n + i))
            .collect();
        let lhs = &self.matrix * &self.matrix.substitute(&b);
        lhs == self.matrix.substitute(&sum)
    }

    /// `ρ(0) = E` and `ρ(a) − E` nilpotent over the function field.
    pub fn is_unipotent(&self) -> bool {
        let dim = self.dim();
        let zero = vec![Scalar::zero(); self.n];
        if self.eval(&zero) != Matrix::identity(dim) {
            return false;
        }
        let shifted = &self.matrix - &Matrix::identity(dim);
        shifted.pow(dim).is_zero()
    }
}

/// The representation attached to an algebra and generator elements.
pub fn rep_from_algebra(a: &LocalAlgebra, gens: &[Element]) -> Result<RepMatrix> {
    a.ensure_valid()?;
    if vectors_rank(gens) < gens.len() {
        return Err(Error::NotEffective);
    }
    let dim = a.dim();
    let mut sum = Matrix::<MultiPoly>::zeros(dim, dim);
    for (i, g) in gens.iter().enumerate() {
        let var = MultiPoly::var(i);
        sum = &sum + &a.left_mult_of(g).map(|s| var.scale(s));
    }
    Ok(RepMatrix {
        n: gens.len(),
        matrix: exp_nilpotent(&sum, dim)?,
        marked: 0,
    })
}

/// The algebra's own generators, or all of `m` when none are recorded.
pub fn rep_from_algebra_default(a: &LocalAlgebra) -> Result<RepMatrix> {
    rep_from_algebra(a, &a.generators_or_basis())
}

/// Reconstructs the algebra from commuting nilpotent matrices and a cyclic
/// vector. Basis vectors are the images of monomials in the matrices,
/// searched breadth-first in basis order; labels use `S1..Sn`.
pub fn algebra_from_rep(mats: &[Matrix<Scalar>], v: &[Scalar]) -> Result<LocalAlgebra> {
    let dim = v.len();
    for (i, m) in mats.iter().enumerate() {
        if m.rows() != dim || m.cols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "matrix {} is {}×{}, vector has length {dim}",
                i + 1,
                m.rows(),
                m.cols()
            )));
        }
        if nilpotency_index(m).is_err() {
            return Err(Error::NotNilpotent(format!("matrix {}", i + 1)));
        }
    }
    for i in 0..mats.len() {
        for j in (i + 1)..mats.len() {
            if !mats[i].commutator(&mats[j]).is_zero() {
                return Err(Error::NotCommuting(format!("matrices {} and {}", i + 1, j + 1)));
            }
        }
    }
    if v.iter().all(Zero::is_zero) {
        return Err(Error::NotCyclic { span: 0, dim });
    }

    let mut words: Vec<(Monomial, Matrix<Scalar>)> = vec![(Monomial::one(), Matrix::identity(dim))];
    let mut vectors: Vec<Element> = vec![v.to_vec()];
    let mut frontier = vec![0usize];
    while !frontier.is_empty() && vectors.len() < dim {
        let mut next = Vec::new();
        for &w in &frontier {
            for (k, m) in mats.iter().enumerate() {
                let word = words[w].0.mul(&Monomial::var(k));
                if words.iter().any(|(x, _)| *x == word) {
                    continue;
                }
                let op = m * &words[w].1;
                let image = op.mul_vec(v);
                let mut trial = vectors.clone();
                trial.push(image.clone());
                if vectors_rank(&trial) > vectors.len() {
                    vectors.push(image);
                    words.push((word, op));
                    next.push(words.len() - 1);
                }
            }
        }
        next.sort_by(|&x, &y| words[x].0.basis_cmp(&words[y].0));
        frontier = next;
    }
    if vectors.len() < dim {
        return Err(Error::NotCyclic {
            span: vectors.len(),
            dim,
        });
    }
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&x, &y| words[x].0.basis_cmp(&words[y].0));
    let p = Matrix::from_columns(dim, &order.iter().map(|&k| vectors[k].clone()).collect::<Vec<_>>());
    let pinv = inverse(&p).expect("independent by construction");
    let names = indexed_names("S", mats.len());
    let labels = order.iter().map(|&k| words[k].0.display(&names)).collect();
    let mult = order.iter().map(|&k| &(&pinv * &words[k].1) * &p).collect();
    let gens = mats.iter().map(|m| pinv.mul_vec(&m.mul_vec(v))).collect();
    let a = LocalAlgebra::from_mult(labels, mult).with_generators(gens);
    a.ensure_valid()?;
    Ok(a)
}

/// `V = {f : F(∂)f = 0 for all F ∈ I}` with an echelon basis.
#[derive(Clone, Debug, PartialEq)]
pub struct DualSpace {
    names: Vec<String>,
    degree_bound: u32,
    basis: Vec<MultiPoly>,
}

impl DualSpace {
    /// Echelon-reduces the given polynomials.
    pub fn from_polys(names: Vec<String>, degree_bound: u32, polys: &[MultiPoly]) -> Self {
        DualSpace {
            basis: echelon_polys(polys),
            names,
            degree_bound,
        }
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    pub fn basis(&self) -> &[MultiPoly] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn max_degree(&self) -> u32 {
        self.basis.iter().filter_map(MultiPoly::degree).max().unwrap_or(0)
    }

    pub fn contains(&self, f: &MultiPoly) -> bool {
        let mut all = self.basis.clone();
        all.push(f.clone());
        echelon_polys(&all).len() == self.basis.len()
    }

    /// One polynomial per line.
    pub fn display(&self) -> String {
        self.basis
            .iter()
            .map(|p| p.display(&self.names) + "\n")
            .collect()
    }
}

/// Reduced echelon basis of a polynomial span; pivots are leading monomials
/// and the result is listed in basis order of those pivots.
fn echelon_polys(polys: &[MultiPoly]) -> Vec<MultiPoly> {
    let mut monos: Vec<Monomial> = polys
        .iter()
        .flat_map(|p| p.terms().map(|(m, _)| m.clone()))
        .collect();
    monos.sort();
    monos.dedup();
    monos.reverse();
    if monos.is_empty() {
        return Vec::new();
    }
    let rows: Vec<Element> = polys
        .iter()
        .map(|p| monos.iter().map(|m| p.coeff(m)).collect())
        .collect();
    let (r, pivots) = rref(&Matrix::from_rows(rows));
    let mut out: Vec<MultiPoly> = (0..pivots.len())
        .map(|i| MultiPoly::from_terms(monos.iter().cloned().zip(r.row(i).iter().cloned())))
        .collect();
    out.sort_by(|a, b| {
        let la = a.leading().map(|(m, _)| m.clone()).unwrap_or_else(Monomial::one);
        let lb = b.leading().map(|(m, _)| m.clone()).unwrap_or_else(Monomial::one);
        la.basis_cmp(&lb)
    });
    out
}

/// Dual variable names: `S3 ↦ x3`, other names unchanged.
pub fn dual_names(vars: &[String]) -> Vec<String> {
    vars.iter()
        .map(|v| match v.strip_prefix('S') {
            Some(rest) if !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()) => {
                format!("x{rest}")
            }
            _ => v.clone(),
        })
        .collect()
}

/// Inverse system of the presentation in degrees `≤ bound`; the bound
/// defaults to the truncation degree of the quotient.
pub fn dual_space(p: &Presentation, bound: Option<u32>) -> Result<DualSpace> {
    dual_space_with(p, bound, Exec::default())
}

pub fn dual_space_with(p: &Presentation, bound: Option<u32>, exec: Exec) -> Result<DualSpace> {
    let (_, report) = truncated_quotient(p)?;
    let bound = bound.unwrap_or(report.degree);
    let monos = Monomial::up_to_degree(p.nvars(), bound);
    let index: BTreeMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let blocks = exec.map(p.relations().to_vec(), |g| {
        let mut block = Matrix::zeros(monos.len(), monos.len());
        for (j, m) in monos.iter().enumerate() {
            let image = g.apply_as_operator(&MultiPoly::monomial(m.clone(), Scalar::one()));
            for (t, c) in image.terms() {
                block[(index[t], j)] = c.clone();
            }
        }
        block
    });
    let kernel = kernel_basis(&Matrix::vstack(&blocks));
    let polys: Vec<MultiPoly> = kernel
        .iter()
        .map(|k| MultiPoly::from_terms(monos.iter().cloned().zip(k.iter().cloned())))
        .collect();
    let v = DualSpace::from_polys(dual_names(p.vars()), bound, &polys);
    if v.dim() < report.quotient_dim {
        return Err(Error::BoundTooSmall {
            found: v.dim(),
            expected: report.quotient_dim,
        });
    }
    Ok(v)
}

/// Whether `f(x + α)` stays in `V` for every basis element `f`.
pub fn shift_invariance_check(v: &DualSpace, alpha: &[Scalar]) -> bool {
    let images: Vec<MultiPoly> = (0..v.n())
        .map(|i| {
            let shift = alpha.get(i).cloned().unwrap_or_else(Scalar::zero);
            &MultiPoly::var(i) + &MultiPoly::constant(shift)
        })
        .collect();
    v.basis().iter().all(|f| v.contains(&f.substitute(&images)))
}
