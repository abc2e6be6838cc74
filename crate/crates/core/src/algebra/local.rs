use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};

use crate::exact::{inverse, nilpotency_index, vectors_rank, Matrix, MultiPoly, Scalar};
use crate::{Error, Result};

/// Coordinates of an algebra element in the algebra's basis.
pub type Element = Vec<Scalar>;

/// A finite-dimensional commutative algebra given by structure constants.
///
/// Basis index 0 is the unity. The table stores products of non-unity basis
/// elements; everything else follows from bilinearity. Multiplication is kept
/// as one left-multiplication matrix per basis element (column `j` of
/// `mult[i]` is `eᵢ·eⱼ`).
#[derive(Clone, PartialEq)]
pub struct LocalAlgebra {
    labels: Vec<String>,
    mult: Vec<Matrix<Scalar>>,
    generators: Option<Vec<Element>>,
}

/// Products `(i, j) ↦ eᵢ·eⱼ` of non-unity basis elements. Missing keys are zero.
pub type Table = BTreeMap<(usize, usize), Element>;

impl LocalAlgebra {
    /// Builds the algebra without checking the axioms; see [`LocalAlgebra::validate`].
    pub fn from_table(labels: Vec<String>, table: &Table) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::InvalidAlgebra("empty basis".into()));
        }
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != dim {
            return Err(Error::InvalidAlgebra("duplicate basis labels".into()));
        }
        for (&(i, j), v) in table {
            if i == 0 || j == 0 || i >= dim || j >= dim {
                return Err(Error::InvalidAlgebra(format!(
                    "table entry ({i},{j}) outside the non-unity range 1..{dim}"
                )));
            }
            if v.len() != dim {
                return Err(Error::InvalidAlgebra(format!(
                    "product ({i},{j}) has {} coordinates, expected {dim}",
                    v.len()
                )));
            }
        }
        let mult = (0..dim)
            .map(|i| {
                Matrix::from_fn(dim, dim, |r, j| {
                    if i == 0 {
                        delta(r, j)
                    } else if j == 0 {
                        delta(r, i)
                    } else {
                        table
                            .get(&(i, j))
                            .map_or_else(Scalar::zero, |v| v[r].clone())
                    }
                })
            })
            .collect();
        Ok(LocalAlgebra {
            labels,
            mult,
            generators: None,
        })
    }

    pub(crate) fn from_mult(labels: Vec<String>, mult: Vec<Matrix<Scalar>>) -> Self {
        LocalAlgebra {
            labels,
            mult,
            generators: None,
        }
    }

    pub fn with_generators(mut self, gens: Vec<Element>) -> Self {
        self.generators = Some(gens);
        self
    }

    /// Generators given by basis labels.
    pub fn with_generator_labels(self, names: &[&str]) -> Result<Self> {
        let gens = names
            .iter()
            .map(|n| {
                self.index_of(n)
                    .map(|i| self.basis_element(i))
                    .ok_or_else(|| Error::InvalidAlgebra(format!("unknown basis label {n}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.with_generators(gens))
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn generators(&self) -> Option<&[Element]> {
        self.generators.as_deref()
    }

    /// Generators if present, otherwise the non-unity basis elements.
    pub fn generators_or_basis(&self) -> Vec<Element> {
        match &self.generators {
            Some(g) => g.clone(),
            None => (1..self.dim()).map(|i| self.basis_element(i)).collect(),
        }
    }

    pub fn unity(&self) -> Element {
        self.basis_element(0)
    }

    pub fn basis_element(&self, i: usize) -> Element {
        (0..self.dim()).map(|r| delta(r, i)).collect()
    }

    /// Left multiplication by the basis element `eᵢ`.
    pub fn left_mult(&self, i: usize) -> &Matrix<Scalar> {
        &self.mult[i]
    }

    /// Left multiplication by an arbitrary element.
    pub fn left_mult_of(&self, x: &[Scalar]) -> Matrix<Scalar> {
        let mut acc = Matrix::zeros(self.dim(), self.dim());
        for (c, m) in x.iter().zip(&self.mult) {
            if !c.is_zero() {
                acc = &acc + &m.scale(c);
            }
        }
        acc
    }

    pub fn product(&self, i: usize, j: usize) -> Element {
        self.mult[i].column(j)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Element {
        self.left_mult_of(x).mul_vec(y)
    }

    /// Nonzero products of non-unity basis elements, upper triangle only.
    pub fn table(&self) -> Table {
        let mut t = Table::new();
        for i in 1..self.dim() {
            for j in i..self.dim() {
                let v = self.product(i, j);
                if v.iter().any(|x| !x.is_zero()) {
                    t.insert((i, j), v);
                }
            }
        }
        t
    }

    /// Human-readable linear combination of basis labels.
    pub fn format_element(&self, x: &[Scalar]) -> String {
        format_combination(x, &self.labels)
    }

    /// The algebra in a new basis. `basis[0]` must be the unity; vectors are
    /// given in the current coordinates.
    pub fn change_basis(&self, basis: &[Element], labels: Vec<String>) -> Result<LocalAlgebra> {
        let dim = self.dim();
        if basis.len() != dim || labels.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "new basis has {} vectors for a {dim}-dimensional algebra",
                basis.len()
            )));
        }
        if basis[0] != self.unity() {
            return Err(Error::InvalidAlgebra("first basis vector must be the unity".into()));
        }
        let p = Matrix::from_columns(dim, basis);
        let pinv = inverse(&p)
            .ok_or_else(|| Error::InvalidAlgebra("new basis is not linearly independent".into()))?;
        let mult = basis
            .iter()
            .map(|b| &(&pinv * &self.left_mult_of(b)) * &p)
            .collect();
        let generators = self
            .generators
            .as_ref()
            .map(|gs| gs.iter().map(|g| pinv.mul_vec(g)).collect());
        Ok(LocalAlgebra {
            labels,
            mult,
            generators,
        })
    }

    /// Checks the local-algebra axioms; downstream operations assume a
    /// report with every check passing.
    pub fn validate(&self) -> ValidationReport {
        let dim = self.dim();
        let mut checks = Vec::new();

        let mut sym = None;
        'sym: for i in 1..dim {
            for j in (i + 1)..dim {
                if self.product(i, j) != self.product(j, i) {
                    sym = Some(format!("{}·{} ≠ {}·{}", self.labels[i], self.labels[j], self.labels[j], self.labels[i]));
                    break 'sym;
                }
            }
        }
        checks.push(Check::new("symmetric", sym));

        let mut assoc = None;
        'assoc: for i in 1..dim {
            for j in 1..dim {
                let lij = self.left_mult_of(&self.product(i, j));
                let li_lj = &self.mult[i] * &self.mult[j];
                if lij != li_lj {
                    for k in 1..dim {
                        if lij.column(k) != li_lj.column(k) {
                            assoc = Some(format!(
                                "({}·{})·{} ≠ {}·({}·{})",
                                self.labels[i], self.labels[j], self.labels[k],
                                self.labels[i], self.labels[j], self.labels[k]
                            ));
                            break 'assoc;
                        }
                    }
                }
            }
        }
        checks.push(Check::new("associative", assoc));

        let mut local = None;
        'local: for i in 1..dim {
            for j in 1..dim {
                if !self.mult[i][(0, j)].is_zero() {
                    local = Some(format!(
                        "{}·{} has a unity component",
                        self.labels[i], self.labels[j]
                    ));
                    break 'local;
                }
            }
            if nilpotency_index(&self.mult[i]).is_err() {
                local = Some(format!("{} is not nilpotent", self.labels[i]));
                break;
            }
        }
        checks.push(Check::new("local", local));

        if let Some(gens) = &self.generators {
            let failure = if gens.iter().any(|g| g.len() != dim) {
                Some("generator has the wrong number of coordinates".to_string())
            } else {
                let span = generated_span(self, gens);
                (span < dim).then(|| format!("generators span {span} of {dim} dimensions"))
            };
            checks.push(Check::new("generators", failure));
        }
        ValidationReport { checks }
    }

    pub(crate) fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        match report.first_failure() {
            None => Ok(()),
            Some(c) => Err(Error::InvalidAlgebra(format!("{}: {}", c.name, c.detail))),
        }
    }
}

/// Dimension of the span of `{monomials in L(g) applied to 1}`.
fn generated_span(a: &LocalAlgebra, gens: &[Element]) -> usize {
    let ops: Vec<Matrix<Scalar>> = gens.iter().map(|g| a.left_mult_of(g)).collect();
    let mut basis = vec![a.unity()];
    let mut frontier = basis.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in &frontier {
            for op in &ops {
                let w = op.mul_vec(v);
                let mut trial = basis.clone();
                trial.push(w.clone());
                if vectors_rank(&trial) > basis.len() {
                    basis.push(w.clone());
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    basis.len()
}

fn delta(i: usize, j: usize) -> Scalar {
    if i == j {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

pub(crate) fn format_combination(x: &[Scalar], labels: &[String]) -> String {
    let mut p = MultiPoly::zero();
    for (i, c) in x.iter().enumerate() {
        p.add_term(crate::exact::Monomial::var(i), c.clone());
    }
    p.display(labels)
}

impl fmt::Debug for LocalAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LocalAlgebra(dim {}, basis {:?})", self.dim(), self.labels)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, failure: Option<String>) -> Self {
        Check {
            name,
            passed: failure.is_none(),
            detail: failure.unwrap_or_default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}
