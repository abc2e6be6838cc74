use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Element, LocalAlgebra};
use crate::exact::{bareiss_rank, inverse, rank, Matrix, MultiPoly, Scalar};
use crate::{Error, Exec, Result};

/// Sampling parameters shared by the orbit computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleOptions {
    pub seed: u64,
    pub trials: usize,
    /// Coordinates are Gaussian integers with parts in `[−bound, bound]`.
    pub bound: i64,
    /// Use the exact rank over the function field instead of sampling.
    pub symbolic: bool,
    pub exec: Exec,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions {
            seed: 0,
            trials: 8,
            bound: 10,
            symbolic: false,
            exec: Exec::default(),
        }
    }
}

/// Points of `P(m)` with `x₁ = … = x_c = 0`, `x_{c+1} ≠ 0`, in a
/// filtration-adapted basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub c: usize,
    pub ambient_dim: usize,
}

impl Stratum {
    pub fn new(c: usize, dim_m: usize) -> Result<Self> {
        if c >= dim_m {
            return Err(Error::EmptyStratum { c, dim_m });
        }
        Ok(Stratum {
            c,
            ambient_dim: dim_m - 1 - c,
        })
    }
}

/// Algebra in a filtration-adapted basis with the generator operators.
#[derive(Clone, Debug)]
pub(crate) struct Setup {
    pub algebra: LocalAlgebra,
    pub ops: Vec<Matrix<Scalar>>,
}

impl Setup {
    pub fn new(a: &LocalAlgebra, gens: &[Element]) -> Result<Self> {
        a.ensure_valid()?;
        let (algebra, basis) = a.filtration_adapted()?;
        let p = Matrix::from_columns(a.dim(), &basis);
        let pinv = inverse(&p).expect("adapted basis is a basis");
        let ops = gens
            .iter()
            .map(|g| algebra.left_mult_of(&pinv.mul_vec(g)))
            .collect();
        Ok(Setup { algebra, ops })
    }

    pub fn dim_m(&self) -> usize {
        self.algebra.dim() - 1
    }

    /// Full coordinate vector of the stratum point with free part `free`.
    pub fn point<T: Clone + Zero + One>(&self, c: usize, free: &[T]) -> Vec<T> {
        let d = self.algebra.dim();
        let mut x = vec![T::zero(); d];
        x[c + 1] = T::one();
        for (k, f) in free.iter().enumerate() {
            x[c + 2 + k] = f.clone();
        }
        x
    }
}

/// Projective orbit dimension at `x`: `rank[x, N₁x, …, N_nx] − 1`.
pub fn orbit_dim_at(ops: &[Matrix<Scalar>], x: &[Scalar]) -> usize {
    let mut cols = vec![x.to_vec()];
    cols.extend(ops.iter().map(|n| n.mul_vec(x)));
    rank(&Matrix::from_columns(x.len(), &cols)).saturating_sub(1)
}

pub(crate) fn stratum_rng(seed: u64, c: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(c as u64);
    rng
}

pub(crate) fn random_gaussian(rng: &mut ChaCha8Rng, bound: i64) -> Scalar {
    Scalar::gaussian(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
}

fn sampled_orbit_dim(setup: &Setup, s: Stratum, opts: &SampleOptions) -> usize {
    let mut rng = stratum_rng(opts.seed, s.c);
    (0..opts.trials.max(1))
        .map(|_| {
            let free: Vec<Scalar> = (0..s.ambient_dim)
                .map(|_| random_gaussian(&mut rng, opts.bound))
                .collect();
            orbit_dim_at(&setup.ops, &setup.point(s.c, &free))
        })
        .max()
        .unwrap_or(0)
}

/// Generic orbit dimension by exact rank over the field of rational
/// functions in the free stratum coordinates.
fn symbolic_orbit_dim(setup: &Setup, s: Stratum) -> usize {
    let free: Vec<MultiPoly> = (0..s.ambient_dim).map(MultiPoly::var).collect();
    let x = setup.point(s.c, &free);
    let mut cols = vec![x.clone()];
    for n in &setup.ops {
        cols.push(n.to_poly().mul_vec(&x));
    }
    bareiss_rank(&Matrix::from_columns(x.len(), &cols)).saturating_sub(1)
}

fn orbit_dim(setup: &Setup, s: Stratum, opts: &SampleOptions) -> usize {
    if opts.symbolic {
        symbolic_orbit_dim(setup, s)
    } else {
        sampled_orbit_dim(setup, s, opts)
    }
}

/// Generic projective orbit dimension on stratum `c`.
pub fn generic_orbit_dim(
    a: &LocalAlgebra,
    gens: &[Element],
    c: usize,
    opts: &SampleOptions,
) -> Result<usize> {
    let setup = Setup::new(a, gens)?;
    let s = Stratum::new(c, setup.dim_m())?;
    Ok(orbit_dim(&setup, s, opts))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StrataRow {
    pub c: usize,
    pub ambient_dim: usize,
    pub orbit_dim: usize,
    pub family_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrataTable {
    pub rows: Vec<StrataRow>,
    /// Largest family dimension over the strata ("stratified modality").
    pub modality: usize,
}

impl StrataTable {
    /// `c⟨TAB⟩orbit_dim⟨TAB⟩family_dim` rows and a final `modality⟨TAB⟩k`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("c\torbit_dim\tfamily_dim\n");
        for r in &self.rows {
            out += &format!("{}\t{}\t{}\n", r.c, r.orbit_dim, r.family_dim);
        }
        out += &format!("modality\t{}\n", self.modality);
        out
    }

    /// Human-readable table with the stratum dimensions.
    pub fn to_pretty(&self) -> String {
        let mut out = String::from("   c  stratum  orbit  family\n");
        for r in &self.rows {
            out += &format!(
                "{:>4}  {:>7}  {:>5}  {:>6}\n",
                r.c, r.ambient_dim, r.orbit_dim, r.family_dim
            );
        }
        out += &format!("stratified modality: {}\n", self.modality);
        out
    }

    /// Rows differing from `(c, orbit_dim, family_dim)` reference triples.
    pub fn differences(&self, reference: &[(usize, usize, usize)]) -> Vec<(StrataRow, (usize, usize))> {
        reference
            .iter()
            .filter_map(|&(c, o, f)| {
                let row = self.rows.iter().find(|r| r.c == c)?;
                (row.orbit_dim != o || row.family_dim != f).then_some((*row, (o, f)))
            })
            .collect()
    }
}

/// One row per stratum `c = 0..dim m − 1` with
/// `family_dim = (dim m − 1 − c) − orbit_dim`.
pub fn modality_table(
    a: &LocalAlgebra,
    gens: &[Element],
    opts: &SampleOptions,
) -> Result<StrataTable> {
    let setup = Setup::new(a, gens)?;
    let strata: Vec<Stratum> = (0..setup.dim_m())
        .map(|c| Stratum::new(c, setup.dim_m()))
        .collect::<Result<_>>()?;
    let rows = opts.exec.map(strata, |s| {
        let orbit_dim = orbit_dim(&setup, s, opts);
        StrataRow {
            c: s.c,
            ambient_dim: s.ambient_dim,
            orbit_dim,
            family_dim: s.ambient_dim - orbit_dim.min(s.ambient_dim),
        }
    });
    let modality = rows.iter().map(|r| r.family_dim).max().unwrap_or(0);
    Ok(StrataTable { rows, modality })
}
