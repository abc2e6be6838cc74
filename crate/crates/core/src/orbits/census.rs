use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::strata::{orbit_dim_at, random_gaussian, stratum_rng, SampleOptions, Setup, Stratum};
use crate::algebra::{Element, LocalAlgebra};
use crate::exact::{exp_nilpotent, kernel_basis, rank, Matrix, Monomial, MultiPoly, Scalar};
use crate::{Error, Result};

/// The quadric containing the open orbit, in a filtration-adapted basis.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosureQuadric {
    /// Symmetric matrix of `q`, normalised so the `u₀u_k` coefficient is −2.
    pub matrix: Matrix<Scalar>,
    /// Labels of the adapted basis the coordinates refer to.
    pub labels: Vec<String>,
}

impl ClosureQuadric {
    /// `q(u)` in variables `u₀, u₁, …`.
    pub fn polynomial(&self) -> MultiPoly {
        let u: Vec<MultiPoly> = (0..self.matrix.rows()).map(MultiPoly::var).collect();
        quadratic_in(&self.matrix, &u)
    }

    pub fn rank(&self) -> usize {
        rank(&self.matrix)
    }
}

fn quadratic_in(m: &Matrix<Scalar>, x: &[MultiPoly]) -> MultiPoly {
    let mut q = MultiPoly::zero();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m[(i, j)].is_zero() {
                q = &q + &(&x[i] * &x[j]).scale(&m[(i, j)]);
            }
        }
    }
    q
}

/// The unique quadric through the orbit `ρ(a)·1`, found by solving for a
/// symmetric `Q` with `Q(ρ(a)·1) ≡ 0`.
pub fn closure_quadric(a: &LocalAlgebra, gens: &[Element]) -> Result<ClosureQuadric> {
    let setup = Setup::new(a, gens)?;
    closure_quadric_of(&setup)
}

fn closure_quadric_of(setup: &Setup) -> Result<ClosureQuadric> {
    let d = setup.algebra.dim();
    if setup.ops.len() + 2 != d {
        return Err(Error::NoQuadricClosure(format!(
            "{} generators on a {d}-dimensional algebra: the orbit closure is not a hypersurface",
            setup.ops.len()
        )));
    }
    let mut sum = Matrix::<MultiPoly>::zeros(d, d);
    for (i, n) in setup.ops.iter().enumerate() {
        let v = MultiPoly::var(i);
        sum = &sum + &n.map(|s| v.scale(s));
    }
    let point = exp_nilpotent(&sum, d)?.column(0);

    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (i..d).map(move |j| (i, j))).collect();
    let columns: Vec<MultiPoly> = pairs
        .iter()
        .map(|&(i, j)| {
            let p = &point[i] * &point[j];
            if i == j {
                p
            } else {
                p.scale(&Scalar::from_int(2))
            }
        })
        .collect();
    let mut rows: BTreeMap<Monomial, usize> = BTreeMap::new();
    for p in &columns {
        for (m, _) in p.terms() {
            let next = rows.len();
            rows.entry(m.clone()).or_insert(next);
        }
    }
    let system = Matrix::from_fn(rows.len(), pairs.len(), |r, c| {
        let m = rows.iter().find(|(_, &k)| k == r).map(|(m, _)| m).expect("row index");
        columns[c].coeff(m)
    });
    let kernel = kernel_basis(&system);
    if kernel.len() != 1 {
        return Err(Error::NoQuadricClosure(format!(
            "{} independent quadrics contain the orbit",
            kernel.len()
        )));
    }
    let mut q = Matrix::zeros(d, d);
    for (&(i, j), v) in pairs.iter().zip(&kernel[0]) {
        q[(i, j)] = v.clone();
        q[(j, i)] = v.clone();
    }
    let lead = (1..d)
        .map(|k| q[(0, k)].clone())
        .find(|v| !v.is_zero())
        .ok_or_else(|| Error::NoQuadricClosure("the quadric does not meet u₀ = 0 properly".into()))?;
    let scale = &Scalar::from_int(-1) / &lead;
    let matrix = q.scale(&scale);
    if rank(&matrix) < 3 {
        return Err(Error::NoQuadricClosure("the quadric is reducible".into()));
    }
    Ok(ClosureQuadric {
        matrix,
        labels: setup.algebra.labels().to_vec(),
    })
}

/// How the boundary quadric `q = 0` meets a stratum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Locus {
    Empty,
    /// `q` vanishes on the whole stratum.
    Whole,
    /// A quadric (or hyperplane) hypersurface of the stratum.
    Hypersurface,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub c: usize,
    pub ambient_dim: usize,
    pub locus: Locus,
    pub locus_dim: Option<usize>,
    pub orbit_dim: Option<usize>,
    pub family_dim: Option<usize>,
    /// Irreducible components of the locus.
    pub components: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CensusVerdict {
    /// Total number of orbits in the closure, the open orbit included.
    Finite(usize),
    /// A stratum carrying a positive-dimensional family of orbits.
    InfiniteCertificate { c: usize, family_dim: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Census {
    pub quadric: ClosureQuadric,
    pub rows: Vec<CensusRow>,
    pub verdict: CensusVerdict,
}

/// Gradient-free evaluation helpers for a quadratic polynomial on a line.
struct Restricted {
    q: MultiPoly,
    quad: MultiPoly,
    grad: Vec<MultiPoly>,
}

impl Restricted {
    fn new(q: MultiPoly, k: usize) -> Self {
        let quad = MultiPoly::from_terms(
            q.terms()
                .filter(|(m, _)| m.degree() == 2)
                .map(|(m, c)| (m.clone(), c.clone())),
        );
        let grad = (0..k).map(|j| q.partial(j)).collect();
        Restricted { q, quad, grad }
    }

    /// `(L, Q)` with `q(p + s·d) = q(p) + L·s + Q·s²`.
    fn line(&self, p: &[Scalar], d: &[Scalar]) -> (Scalar, Scalar) {
        let l = self
            .grad
            .iter()
            .zip(d)
            .fold(Scalar::zero(), |acc, (g, dj)| &acc + &(&g.eval(p) * dj));
        (l, self.quad.eval(d))
    }

    fn shift(p: &[Scalar], d: &[Scalar], s: &Scalar) -> Vec<Scalar> {
        p.iter().zip(d).map(|(x, y)| x + &(s * y)).collect()
    }

    /// A point of `q = 0` with Gaussian-rational coordinates, searched on
    /// lines through small grid points.
    fn base_point(&self, k: usize) -> Option<Vec<Scalar>> {
        let digits = [
            Scalar::zero(),
            Scalar::one(),
            -Scalar::one(),
            Scalar::i(),
            -Scalar::i(),
            Scalar::from_int(2),
        ];
        let units: Vec<Vec<Scalar>> = (0..k)
            .map(|j| (0..k).map(|i| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
            .collect();
        for code in 0..(6usize.pow(k.min(4) as u32)) {
            let mut c = code;
            let start: Vec<Scalar> = (0..k)
                .map(|_| {
                    let s = digits[c % 6].clone();
                    c /= 6;
                    s
                })
                .collect();
            let c0 = self.q.eval(&start);
            if c0.is_zero() {
                return Some(start);
            }
            for d in &units {
                let (l, qd) = self.line(&start, d);
                let s = if qd.is_zero() {
                    if l.is_zero() {
                        continue;
                    }
                    -(&c0 / &l)
                } else {
                    let disc = &(&l * &l) - &(&(&Scalar::from_int(4) * &qd) * &c0);
                    let Some(r) = disc.sqrt() else { continue };
                    &(&r - &l) / &(&Scalar::from_int(2) * &qd)
                };
                return Some(Restricted::shift(&start, d, &s));
            }
        }
        None
    }
}

/// Rank of the homogenised quadric `s²·q(t/s)` as a symmetric matrix.
fn homogenized_rank(q: &MultiPoly, k: usize) -> usize {
    let half = Scalar::ratio(1, 2);
    let mut h = Matrix::zeros(k + 1, k + 1);
    for (m, c) in q.terms() {
        let vars: Vec<usize> = (0..k).flat_map(|j| std::iter::repeat_n(j + 1, m.exp(j) as usize)).collect();
        match vars.as_slice() {
            [] => h[(0, 0)] = &h[(0, 0)] + c,
            [j] => {
                let v = c * &half;
                h[(0, *j)] = &h[(0, *j)] + &v;
                h[(*j, 0)] = &h[(*j, 0)] + &v;
            }
            [i, j] if i == j => h[(*i, *i)] = &h[(*i, *i)] + c,
            [i, j] => {
                let v = c * &half;
                h[(*i, *j)] = &h[(*i, *j)] + &v;
                h[(*j, *i)] = &h[(*j, *i)] + &v;
            }
            _ => unreachable!("quadratic polynomial"),
        }
    }
    rank(&h)
}

fn census_row(setup: &Setup, quadric: &ClosureQuadric, s: Stratum, opts: &SampleOptions) -> Result<CensusRow> {
    let k = s.ambient_dim;
    let free: Vec<MultiPoly> = (0..k).map(MultiPoly::var).collect();
    let x = setup.point(s.c, &free);
    let q = quadratic_in(&quadric.matrix, &x);
    let mut rng = stratum_rng(opts.seed, s.c);
    let trials = opts.trials.max(1);
    let empty = CensusRow {
        c: s.c,
        ambient_dim: k,
        locus: Locus::Empty,
        locus_dim: None,
        orbit_dim: None,
        family_dim: None,
        components: 0,
    };
    let (locus, locus_dim, samples) = if q.is_zero() {
        let pts: Vec<Vec<Scalar>> = (0..trials)
            .map(|_| (0..k).map(|_| random_gaussian(&mut rng, opts.bound)).collect())
            .collect();
        (Locus::Whole, k, pts)
    } else if q.is_constant() {
        return Ok(empty);
    } else {
        let r = Restricted::new(q.clone(), k);
        let mut p = r.base_point(k).ok_or_else(|| {
            Error::NoQuadricClosure(format!("no rational point found on stratum c = {}", s.c))
        })?;
        let mut pts = vec![p.clone()];
        let mut attempts = 0;
        while pts.len() < trials + 1 && attempts < 16 * trials {
            attempts += 1;
            let d: Vec<Scalar> = (0..k).map(|_| random_gaussian(&mut rng, opts.bound)).collect();
            let (l, qd) = r.line(&p, &d);
            if qd.is_zero() || l.is_zero() {
                continue;
            }
            p = Restricted::shift(&p, &d, &-(&l / &qd));
            debug_assert!(r.q.eval(&p).is_zero());
            pts.push(p.clone());
        }
        (Locus::Hypersurface, k - 1, pts)
    };
    let orbit_dim = samples
        .iter()
        .map(|t| orbit_dim_at(&setup.ops, &setup.point(s.c, t)))
        .max()
        .unwrap_or(0);
    let components = if locus == Locus::Hypersurface && q.degree() == Some(2) && homogenized_rank(&q, k) == 2 {
        2
    } else {
        1
    };
    Ok(CensusRow {
        locus,
        locus_dim: Some(locus_dim),
        orbit_dim: Some(orbit_dim),
        family_dim: Some(locus_dim - orbit_dim.min(locus_dim)),
        components,
        ..empty
    })
}

/// Orbits in the closure of the open orbit, counted stratum by stratum on
/// the boundary `q = 0, u₀ = 0`.
pub fn closure_orbit_census(
    a: &LocalAlgebra,
    gens: &[Element],
    opts: &SampleOptions,
) -> Result<Census> {
    let setup = Setup::new(a, gens)?;
    let quadric = closure_quadric_of(&setup)?;
    let strata: Vec<Stratum> = (0..setup.dim_m())
        .map(|c| Stratum::new(c, setup.dim_m()))
        .collect::<Result<_>>()?;
    let rows = opts
        .exec
        .map(strata, |s| census_row(&setup, &quadric, s, opts))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let worst = rows
        .iter()
        .filter_map(|r| r.family_dim.map(|f| (f, r.c)))
        .fold(None, |best: Option<(usize, usize)>, (f, c)| match best {
            Some((bf, _)) if bf >= f => best,
            _ => Some((f, c)),
        });
    let verdict = match worst {
        Some((f, c)) if f > 0 => CensusVerdict::InfiniteCertificate { c, family_dim: f },
        _ => CensusVerdict::Finite(1 + rows.iter().map(|r| r.components).sum::<usize>()),
    };
    Ok(Census {
        quadric,
        rows,
        verdict,
    })
}

/// Boundary of the open orbit on the nondegenerate quadric `Q_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricBoundary {
    pub n: usize,
    /// Dimension of the family of one-dimensional boundary orbits
    /// `{(0 : b : *)}` with `Σ bᵢ² = 0`; `None` when there are none.
    pub family_dim: Option<usize>,
    pub boundary_orbit_dim: Option<usize>,
    /// Coordinates of the unique fixed point `(0 : … : 0 : 1)`.
    pub fixed_point: Vec<u8>,
    /// Total number of orbits on the quadric when finite.
    pub total_orbits: Option<usize>,
}

impl QuadricBoundary {
    pub fn is_finite(&self) -> bool {
        self.total_orbits.is_some()
    }

    pub fn modality(&self) -> usize {
        self.family_dim.unwrap_or(0)
    }
}

/// The boundary of the orbit of `1` for the canonical action on `Q_n`: the
/// isotropic directions `[b] ∈ P^{n−1}` form a quadric of dimension `n − 2`,
/// each giving a line orbit, plus one fixed point.
pub fn quadric_boundary_analysis(n: usize) -> QuadricBoundary {
    assert!(n >= 1, "n ≥ 1");
    let mut fixed_point = vec![0u8; n + 2];
    fixed_point[n + 1] = 1;
    match n {
        1 => QuadricBoundary {
            n,
            family_dim: None,
            boundary_orbit_dim: None,
            fixed_point,
            total_orbits: Some(2),
        },
        // Two isotropic points (1 : ±i) of P¹.
        2 => QuadricBoundary {
            n,
            family_dim: Some(0),
            boundary_orbit_dim: Some(1),
            fixed_point,
            total_orbits: Some(4),
        },
        _ => QuadricBoundary {
            n,
            family_dim: Some(n - 2),
            boundary_orbit_dim: Some(1),
            fixed_point,
            total_orbits: None,
        },
    }
}
