use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{Element, LocalAlgebra};
use crate::exact::{kernel_basis, nilpotency_index, Matrix, Monomial, MultiPoly, Scalar};
use crate::{Error, Exec, Result};

/// Largest truncation degree tried when looking for a stable quotient.
pub const TRUNCATION_CAP: u32 = 12;

/// `ℂ[S₁,…,S_n]/I` with `I` given by generators.
#[derive(Clone, Debug, PartialEq)]
pub struct Presentation {
    vars: Vec<String>,
    relations: Vec<MultiPoly>,
    truncation: Option<u32>,
}

impl Presentation {
    pub fn new(vars: Vec<String>, relations: Vec<MultiPoly>) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::InvalidPresentation("no variables".into()));
        }
        if relations.is_empty() {
            return Err(Error::InvalidPresentation("no relations".into()));
        }
        for r in &relations {
            if !r.constant_term().is_zero() {
                return Err(Error::InvalidPresentation(format!(
                    "relation {} has a nonzero constant term",
                    r.display(&vars)
                )));
            }
            if r.nvars() > vars.len() {
                return Err(Error::InvalidPresentation("relation uses an undeclared variable".into()));
            }
        }
        Ok(Presentation {
            vars,
            relations,
            truncation: None,
        })
    }

    /// Parses relations written in the given variables.
    pub fn parse(vars: &[&str], relations: &[&str]) -> Result<Self> {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let rels = relations
            .iter()
            .map(|r| crate::exact::parse_poly(r, &vars))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(vars, rels)
    }

    pub fn with_truncation(mut self, degree: u32) -> Self {
        self.truncation = Some(degree);
        self
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn relations(&self) -> &[MultiPoly] {
        &self.relations
    }

    pub fn truncation(&self) -> Option<u32> {
        self.truncation
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CollapseReport {
    /// Linear forms in the variables that lie in the ideal, as a basis.
    pub forced_zero: Vec<MultiPoly>,
    pub quotient_dim: usize,
    /// Truncation degree the quotient was read off at.
    pub degree: u32,
}

impl CollapseReport {
    pub fn is_nondegenerate(&self) -> bool {
        self.forced_zero.is_empty()
    }
}

/// Row-echelon span of polynomials keyed by leading (largest) monomial.
#[derive(Default, Clone)]
struct Echelon {
    rows: BTreeMap<Monomial, MultiPoly>,
}

impl Echelon {
    /// Full reduction: no monomial of the result is a pivot.
    fn normal_form(&self, p: &MultiPoly) -> MultiPoly {
        let mut rem = p.clone();
        let mut out = MultiPoly::zero();
        loop {
            let Some((m, c)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) else {
                return out;
            };
            match self.rows.get(&m) {
                Some(row) => rem = &rem - &row.scale(&c),
                None => {
                    out.add_term(m.clone(), c.clone());
                    rem.add_term(m, -c);
                }
            }
        }
    }

    fn insert(&mut self, p: &MultiPoly) -> bool {
        let r = self.normal_form(p);
        let Some((m, c)) = r.leading().map(|(m, c)| (m.clone(), c.clone())) else {
            return false;
        };
        let row = r.scale(&c.inv().expect("nonzero leading coefficient"));
        self.rows.insert(m, row);
        true
    }
}

fn truncate(p: &MultiPoly, d: u32) -> MultiPoly {
    MultiPoly::from_terms(
        p.terms()
            .filter(|(m, _)| m.degree() <= d)
            .map(|(m, c)| (m.clone(), c.clone())),
    )
}

fn order(p: &MultiPoly) -> u32 {
    p.terms().next().map_or(0, |(m, _)| m.degree())
}

fn is_homogeneous(p: &MultiPoly) -> bool {
    order(p) == p.degree().unwrap_or(0)
}

/// Reduces each batch against the current rows (in parallel), then inserts
/// sequentially so the result does not depend on scheduling.
fn insert_batch(echelon: &mut Echelon, batch: Vec<MultiPoly>, exec: Exec) {
    let snapshot = &*echelon;
    let reduced = exec.map(batch, |q| snapshot.normal_form(&q));
    for q in reduced {
        if !q.is_zero() {
            echelon.insert(&q);
        }
    }
}

/// Span of `I + m^{d+1}` inside `ℂ[S]/m^{d+1}`, spanned by the truncated
/// multiples `monomial · relation`.
fn local_echelon(p: &Presentation, d: u32, exec: Exec) -> Echelon {
    let mut echelon = Echelon::default();
    for k in 0..=d {
        let mut batch = Vec::new();
        for r in &p.relations {
            if order(r) + k > d {
                continue;
            }
            for m in Monomial::of_degree(p.nvars(), k) {
                batch.push(truncate(&r.mul_monomial(&m, &Scalar::one()), d));
            }
        }
        insert_batch(&mut echelon, batch, exec);
    }
    echelon
}

fn local_dim(p: &Presentation, d: u32, exec: Exec) -> (usize, Echelon) {
    let e = local_echelon(p, d, exec);
    (Monomial::up_to_degree(p.nvars(), d).len() - e.rows.len(), e)
}

/// Least `D` with `dim ℂ[S]/(I + m^{D+1}) = dim ℂ[S]/(I + m^{D+2})`.
///
/// Equality gives `m^{D+1} ⊆ I + m^{D+2}`, hence `m^{D+1} ⊆ I` locally by
/// Nakayama, so the truncation at `D` is the local algebra at the origin.
fn stable_degree(p: &Presentation, exec: Exec) -> Result<(u32, Echelon)> {
    if let Some(d) = p.truncation {
        return Ok((d, local_echelon(p, d, exec)));
    }
    let (mut prev, mut prev_e) = local_dim(p, 1, exec);
    for d in 1..=TRUNCATION_CAP {
        let (next, next_e) = local_dim(p, d + 1, exec);
        if next == prev {
            return Ok((d, prev_e));
        }
        prev = next;
        prev_e = next_e;
    }
    Err(Error::NotFinite { cap: TRUNCATION_CAP })
}

/// Whether every `targets[i]` lies in the ideal, searching the untruncated
/// multiples of the relations up to total degree `limit`.
fn all_in_ideal(p: &Presentation, targets: &[MultiPoly], limit: u32, exec: Exec) -> Vec<bool> {
    let mut echelon = Echelon::default();
    let mut found = vec![false; targets.len()];
    for e in 0..=limit {
        let mut batch = Vec::new();
        for r in &p.relations {
            let dr = r.degree().unwrap_or(0);
            if dr <= e {
                for m in Monomial::of_degree(p.nvars(), e - dr) {
                    batch.push(r.mul_monomial(&m, &Scalar::one()));
                }
            }
        }
        insert_batch(&mut echelon, batch, exec);
        for (t, f) in targets.iter().zip(found.iter_mut()) {
            if !*f && t.degree().unwrap_or(0) <= e {
                *f = echelon.normal_form(t).is_zero();
            }
        }
        if found.iter().all(|&f| f) {
            break;
        }
    }
    found
}

pub fn truncated_quotient(p: &Presentation) -> Result<(LocalAlgebra, CollapseReport)> {
    truncated_quotient_with(p, Exec::default())
}

/// As [`truncated_quotient`], with an explicit execution strategy for the
/// row reductions. The output does not depend on `exec`.
pub fn truncated_quotient_with(
    p: &Presentation,
    exec: Exec,
) -> Result<(LocalAlgebra, CollapseReport)> {
    let (degree, echelon) = stable_degree(p, exec)?;
    let mut std: Vec<Monomial> = Monomial::up_to_degree(p.nvars(), degree)
        .into_iter()
        .filter(|m| !echelon.rows.contains_key(m))
        .collect();
    std.sort_by(|a, b| a.basis_cmp(b));
    let dim = std.len();
    debug_assert!(std.first().is_some_and(Monomial::is_one));

    let index: BTreeMap<&Monomial, usize> = std.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let coords = |q: &MultiPoly| -> Element {
        let nf = echelon.normal_form(&truncate(q, degree));
        let mut v = vec![Scalar::zero(); dim];
        for (m, c) in nf.terms() {
            v[index[m]] = c.clone();
        }
        v
    };

    let labels: Vec<String> = std.iter().map(|m| m.display(p.vars())).collect();
    let mult: Vec<Matrix<Scalar>> = std
        .iter()
        .map(|a| {
            let cols: Vec<Element> = std
                .iter()
                .map(|b| coords(&MultiPoly::monomial(a.mul(b), Scalar::one())))
                .collect();
            Matrix::from_columns(dim, &cols)
        })
        .collect();
    let gens: Vec<Element> = (0..p.nvars()).map(|i| coords(&MultiPoly::var(i))).collect();
    let algebra = LocalAlgebra::from_mult(labels, mult).with_generators(gens.clone());

    // The truncation sees only the origin. For non-homogeneous relations the
    // ideal may have further zeros; rule them out by checking that each
    // variable is nilpotent in the global quotient.
    if !p.relations.iter().all(is_homogeneous) {
        let powers: Vec<MultiPoly> = gens
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let k = nilpotency_index(&algebra.left_mult_of(g)).expect("nilpotent in the local quotient");
                MultiPoly::var(i).pow(k as u32)
            })
            .collect();
        let top = powers.iter().filter_map(MultiPoly::degree).max().unwrap_or(0);
        let rel = p.relations.iter().filter_map(MultiPoly::degree).max().unwrap_or(0);
        let limit = TRUNCATION_CAP.max(top + rel);
        let found = all_in_ideal(p, &powers, limit, exec);
        if let Some(i) = found.iter().position(|f| !f) {
            return Err(Error::NotLocal(format!(
                "{} is not nilpotent modulo the ideal",
                p.vars()[i]
            )));
        }
    }

    let forced_zero = kernel_basis(&Matrix::from_columns(dim, &gens))
        .into_iter()
        .map(|k| {
            let mut f = MultiPoly::zero();
            for (i, c) in k.into_iter().enumerate() {
                f.add_term(Monomial::var(i), c);
            }
            f
        })
        .collect();
    Ok((
        algebra,
        CollapseReport {
            forced_zero,
            quotient_dim: dim,
            degree,
        },
    ))
}
