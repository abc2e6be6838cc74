use num_traits::Zero;

use super::{Element, LocalAlgebra};
use crate::exact::{kernel_basis, span_basis, vectors_rank, Matrix, Scalar};

/// Isomorphism invariants of a local algebra. Equal vectors are necessary,
/// not sufficient, for isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantVector {
    pub dim: usize,
    /// `dim m, dim m², …`, ending with the first zero.
    pub hilbert: Vec<usize>,
    /// Dimension of the last nonzero power of `m`.
    pub socle_dim: usize,
    /// `dim {x ∈ m : x·m = 0}`.
    pub ann_dim: usize,
    /// `dim m/m²`.
    pub min_generators: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NFactor {
    /// `n` elements of `m` whose images generate the algebra.
    Witness(Vec<Element>),
    /// More than `n` generators are needed.
    NotNFactor { min_generators: usize },
    /// `m` has fewer than `n` dimensions, so no `n` independent elements exist.
    TooFewDimensions { dim_m: usize },
}

impl LocalAlgebra {
    /// Echelon bases of `m, m², …` up to the last nonzero power.
    pub fn m_powers(&self) -> Vec<Vec<Element>> {
        let dim = self.dim();
        let m: Vec<Element> = (1..dim).map(|i| self.basis_element(i)).collect();
        let mut powers = Vec::new();
        let mut current = span_basis(&m, dim);
        while !current.is_empty() {
            let products: Vec<Element> = current
                .iter()
                .flat_map(|v| {
                    let l = self.left_mult_of(v);
                    (1..dim).map(move |j| l.column(j))
                })
                .filter(|v| v.iter().any(|x| !x.is_zero()))
                .collect();
            let next = span_basis(&products, dim);
            powers.push(current);
            current = next;
        }
        powers
    }

    /// `dim m, dim m², …, 0`.
    pub fn hilbert(&self) -> Vec<usize> {
        let mut h: Vec<usize> = self.m_powers().iter().map(Vec::len).collect();
        h.push(0);
        h
    }

    /// Basis of `{x ∈ m : x·m = 0}`.
    pub fn annihilator_of_m(&self) -> Vec<Element> {
        let dim = self.dim();
        // x·eⱼ = L(eⱼ)x; stack L(e₁)…L(e_{d-1}) and add the row x₀ = 0.
        let mut blocks: Vec<Matrix<Scalar>> = (1..dim).map(|j| self.left_mult(j).clone()).collect();
        blocks.push(Matrix::from_fn(1, dim, |_, c| {
            if c == 0 {
                Scalar::from_int(1)
            } else {
                Scalar::zero()
            }
        }));
        kernel_basis(&Matrix::vstack(&blocks))
    }

    pub fn invariant_vector(&self) -> InvariantVector {
        let hilbert = self.hilbert();
        let socle_dim = hilbert
            .iter()
            .rev()
            .copied()
            .find(|&d| d > 0)
            .unwrap_or(0);
        let min_generators = hilbert[0] - hilbert.get(1).copied().unwrap_or(0);
        InvariantVector {
            dim: self.dim(),
            hilbert,
            socle_dim,
            ann_dim: self.annihilator_of_m().len(),
            min_generators,
        }
    }

    /// Alias of [`LocalAlgebra::invariant_vector`], kept for the filtration view.
    pub fn filtration(&self) -> InvariantVector {
        self.invariant_vector()
    }

    /// `n` elements of `m` lifting a basis of `m/m²`, padded from `m²`.
    pub fn n_factor_witness(&self, n: usize) -> NFactor {
        let dim = self.dim();
        let powers = self.m_powers();
        let dim_m = powers.first().map_or(0, Vec::len);
        let m2: Vec<Element> = powers.get(1).cloned().unwrap_or_default();
        let min_generators = dim_m - m2.len();
        if min_generators > n {
            return NFactor::NotNFactor { min_generators };
        }
        if dim_m < n {
            return NFactor::TooFewDimensions { dim_m };
        }
        let mut span = m2.clone();
        let mut lifts = Vec::new();
        for i in 1..dim {
            if lifts.len() == min_generators {
                break;
            }
            let e = self.basis_element(i);
            let mut trial = span.clone();
            trial.push(e.clone());
            if vectors_rank(&trial) > span.len() {
                span = trial;
                lifts.push(e);
            }
        }
        // Any basis of m² pads the lifts; prefer unit vectors for readable output.
        let mut padding: Vec<Element> = Vec::new();
        let m2_rank = m2.len();
        for i in 1..dim {
            if padding.len() == n - min_generators {
                break;
            }
            let e = self.basis_element(i);
            let mut in_m2 = m2.clone();
            in_m2.push(e.clone());
            let mut indep = padding.clone();
            indep.push(e.clone());
            if vectors_rank(&in_m2) == m2_rank && vectors_rank(&indep) == indep.len() {
                padding.push(e);
            }
        }
        for v in &m2 {
            if padding.len() == n - min_generators {
                break;
            }
            let mut indep = padding.clone();
            indep.push(v.clone());
            if vectors_rank(&indep) == indep.len() {
                padding.push(v.clone());
            }
        }
        lifts.extend(padding);
        NFactor::Witness(lifts)
    }
}
