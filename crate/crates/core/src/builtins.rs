//! Named constructions: `truncated:n:k`, `ht-finite:n`, `quadric:n`,
//! `r5:i`, `remark1:j`, `bn:n`, `free-rowed:n`.

use crate::algebra::{truncated_quotient, CollapseReport, Element, LocalAlgebra, Presentation};
use crate::exact::{indexed_names, Monomial, MultiPoly};
use crate::orbits::StrataTable;
use crate::ortho::{free_rowed_subalgebra, MatrixSubalgebra};
use crate::quadric::canonical_quadric_algebra;
use crate::{Error, Result};

/// Id patterns accepted by [`builtin`].
pub const BUILTIN_IDS: [&str; 7] = [
    "truncated:<n>:<k>",
    "ht-finite:<n>",
    "quadric:<n>",
    "r5:<1..10|3p>",
    "remark1:<1|2>",
    "bn:<n>",
    "free-rowed:<n>",
];

pub fn list() -> &'static [&'static str] {
    &BUILTIN_IDS
}

/// The ten listed five-dimensional presentations, then `3p`.
const R5: [(&str, &[&str]); 11] = [
    ("1", &["S1^2-S2", "S1*S2-S3", "S1*S3-S4", "S2*S3", "S1*S4"]),
    ("2", &["S1^2-S3", "S1*S2", "S2^2", "S1*S3-S4", "S1*S4"]),
    ("3", &["S1^2-S3", "S1*S2", "S2^2-S3", "S1*S3-S4", "S1*S4"]),
    ("4", &["S1^2-S3", "S1*S2-S3", "S2^2", "S1*S3-S4", "S1*S4"]),
    ("5", &["S1^2-S3", "S1*S2-S4", "S2^2", "S1*S3", "S2*S3", "S1*S4"]),
    ("6", &["S1^2-S3", "S2^2-S4", "S1*S2", "S1*S3", "S2*S4"]),
    ("7", &["S1^2-S4", "S1*S2", "S1*S3", "S2*S3-S4", "S2^2", "S3^2", "S1*S4"]),
    ("8", &["S1^2", "S2^2", "S3^2", "S1*S2-S4", "S1*S3", "S2*S3"]),
    ("9", &["S1^2-S4", "S2^2", "S3^2", "S1*S2", "S1*S3", "S2*S3", "S1*S4"]),
    (
        "10",
        &["S1^2", "S1*S2", "S1*S3", "S1*S4", "S2^2", "S2*S3", "S2*S4", "S3^2", "S3*S4", "S4^2"],
    ),
    ("3p", &["S1^2-S3", "S1*S2", "S2^2-S4", "S1*S3-S4", "S2*S3", "S1*S4"]),
];

/// `(c, orbit_dim, family_dim)` for `truncated:2:3` as printed in the
/// reference table.
pub const REFERENCE_TRUNCATED_2_3: [(usize, usize, usize); 9] = [
    (0, 5, 3),
    (1, 5, 2),
    (2, 2, 4),
    (3, 2, 3),
    (4, 2, 3),
    (5, 1, 3),
    (6, 0, 2),
    (7, 0, 1),
    (8, 0, 0),
];

/// An algebra built from a presentation or directly, with the generators
/// of the acting group.
#[derive(Clone, Debug)]
pub struct AlgebraBuiltin {
    pub algebra: LocalAlgebra,
    /// Generators of the acting group: all of `m` for actions on projective
    /// space, the algebra generators for actions on a quadric.
    pub group_gens: Vec<Element>,
    pub presentation: Option<Presentation>,
    pub collapse: Option<CollapseReport>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug)]
pub enum Builtin {
    Algebra(AlgebraBuiltin),
    Subalgebra(MatrixSubalgebra),
}

impl Builtin {
    pub fn algebra(&self) -> Option<&AlgebraBuiltin> {
        match self {
            Builtin::Algebra(a) => Some(a),
            Builtin::Subalgebra(_) => None,
        }
    }
}

fn var_names(n: usize) -> Vec<String> {
    match n {
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        3 => vec!["x".into(), "y".into(), "z".into()],
        _ => indexed_names("x", n),
    }
}

/// `ℂ[x₁..x_n]/(x₁..x_n)^{k+1}`.
pub fn truncated_presentation(n: usize, k: u32) -> Presentation {
    let rels = Monomial::of_degree(n, k + 1)
        .into_iter()
        .map(|m| MultiPoly::monomial(m, 1.into()))
        .collect();
    Presentation::new(var_names(n), rels).expect("monomial relations")
}

/// `ℂ[S₁..S_n]/(S₁ⁱ − Sᵢ, S_jS_k : j + k > n)`.
pub fn ht_finite_presentation(n: usize) -> Presentation {
    let vars = indexed_names("S", n);
    let mut rels = Vec::new();
    for i in 2..=n {
        rels.push(&MultiPoly::var(0).pow(i as u32) - &MultiPoly::var(i - 1));
    }
    for j in 1..=n {
        for k in j..=n {
            if j + k > n {
                rels.push(&MultiPoly::var(j - 1) * &MultiPoly::var(k - 1));
            }
        }
    }
    Presentation::new(vars, rels).expect("no constant terms")
}

/// `ℂ[S₁..S_{n+1}]/(SᵢSⱼ)`.
pub fn bn_presentation(n: usize) -> Presentation {
    let vars = indexed_names("S", n + 1);
    let rels = Monomial::of_degree(n + 1, 2)
        .into_iter()
        .map(|m| MultiPoly::monomial(m, 1.into()))
        .collect();
    Presentation::new(vars, rels).expect("monomial relations")
}

pub fn r5_presentation(i: &str) -> Result<Presentation> {
    let (_, rels) = R5
        .iter()
        .find(|(name, _)| *name == i)
        .ok_or_else(|| Error::UnknownBuiltin(format!("r5:{i}")))?;
    Presentation::parse(&["S1", "S2", "S3", "S4"], rels)
}

pub fn remark1_presentation(j: u32) -> Result<Presentation> {
    match j {
        1 => Presentation::parse(&["x", "y"], &["x^3-y", "x^4"]),
        2 => Presentation::parse(&["x", "y"], &["y^2", "x*y", "x^3"]),
        _ => Err(Error::UnknownBuiltin(format!("remark1:{j}"))),
    }
}

/// Every `r5` id in listing order.
pub fn r5_ids() -> impl Iterator<Item = &'static str> {
    R5.iter().map(|(name, _)| *name)
}

fn all_of_m(a: &LocalAlgebra) -> Vec<Element> {
    (1..a.dim()).map(|i| a.basis_element(i)).collect()
}

fn from_presentation(p: Presentation, whole_m: bool, expected_dim: Option<usize>) -> Result<AlgebraBuiltin> {
    let (algebra, collapse) = truncated_quotient(&p)?;
    let group_gens = if whole_m {
        all_of_m(&algebra)
    } else {
        algebra.generators_or_basis()
    };
    let mut warnings = Vec::new();
    if let Some(d) = expected_dim.filter(|&d| d != collapse.quotient_dim) {
        let zeros: Vec<String> = collapse.forced_zero.iter().map(|z| z.display(p.vars())).collect();
        warnings.push(format!(
            "quotient has dimension {} instead of {d}; forced to zero: {}",
            collapse.quotient_dim,
            zeros.join(", ")
        ));
    }
    Ok(AlgebraBuiltin {
        algebra,
        group_gens,
        presentation: Some(p),
        collapse: Some(collapse),
        warnings,
    })
}

fn number<T: std::str::FromStr>(id: &str, s: Option<&str>) -> Result<T> {
    s.and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::UnknownBuiltin(format!("{id}: expected a number")))
}

/// Constructs the object named by `id`.
pub fn builtin(id: &str) -> Result<Builtin> {
    let mut parts = id.split(':');
    let head = parts.next().unwrap_or_default();
    let mut args: Vec<&str> = parts.collect();
    let wrong_arity = || Error::UnknownBuiltin(format!("{id}: wrong number of arguments"));
    let arity = match head {
        "truncated" => 2,
        "ht-finite" | "quadric" | "r5" | "remark1" | "bn" | "free-rowed" => 1,
        _ => return Err(Error::UnknownBuiltin(id.into())),
    };
    if args.len() != arity {
        return Err(wrong_arity());
    }
    let first = args.remove(0);
    let positive = |n: usize| {
        if n == 0 {
            Err(Error::UnknownBuiltin(format!("{id}: n must be positive")))
        } else {
            Ok(n)
        }
    };
    let built = match head {
        "truncated" => {
            let n = positive(number(id, Some(first))?)?;
            let k: u32 = number(id, args.first().copied())?;
            if k == 0 {
                return Err(Error::UnknownBuiltin(format!("{id}: k must be positive")));
            }
            Builtin::Algebra(from_presentation(truncated_presentation(n, k), true, None)?)
        }
        "ht-finite" => {
            let n = positive(number(id, Some(first))?)?;
            Builtin::Algebra(from_presentation(ht_finite_presentation(n), true, Some(n + 1))?)
        }
        "bn" => {
            let n = positive(number(id, Some(first))?)?;
            Builtin::Algebra(from_presentation(bn_presentation(n), true, Some(n + 2))?)
        }
        "quadric" => {
            let n = positive(number(id, Some(first))?)?;
            let algebra = canonical_quadric_algebra(n);
            Builtin::Algebra(AlgebraBuiltin {
                group_gens: algebra.generators_or_basis(),
                algebra,
                presentation: None,
                collapse: None,
                warnings: Vec::new(),
            })
        }
        "r5" => Builtin::Algebra(from_presentation(r5_presentation(first)?, true, Some(5))?),
        "remark1" => {
            let j: u32 = number(id, Some(first))?;
            Builtin::Algebra(from_presentation(remark1_presentation(j)?, false, Some(4))?)
        }
        "free-rowed" => {
            let n: usize = number(id, Some(first))?;
            if n < 6 {
                return Err(Error::UnknownBuiltin(format!("{id}: n must be at least 6")));
            }
            Builtin::Subalgebra(free_rowed_subalgebra(n))
        }
        _ => unreachable!(),
    };
    Ok(built)
}

/// Notes comparing a computed modality table with the reference table,
/// when one is on record for `id`.
pub fn modality_notes(id: &str, table: &StrataTable) -> Vec<String> {
    if id != "truncated:2:3" {
        return Vec::new();
    }
    let mut notes: Vec<String> = table
        .differences(&REFERENCE_TRUNCATED_2_3)
        .into_iter()
        .map(|(row, (o, f))| {
            format!(
                "reference table discrepancy at c = {}: printed (orbit {o}, family {f}), computed (orbit {}, family {}); orbit + family must equal the stratum dimension {}",
                row.c, row.orbit_dim, row.family_dim, row.ambient_dim
            )
        })
        .collect();
    let reference_modality = REFERENCE_TRUNCATED_2_3.iter().map(|r| r.2).max().unwrap_or(0);
    if reference_modality == table.modality {
        notes.push(format!("modality agrees with the reference value {reference_modality}"));
    } else {
        notes.push(format!(
            "modality differs from the reference value {reference_modality}"
        ));
    }
    notes
}

/// Notes on the printed action formula for `truncated:2:3`.
pub fn rep_notes(id: &str) -> Vec<String> {
    if id != "truncated:2:3" {
        return Vec::new();
    }
    vec!["reference formula discrepancy: the y^3 component of rho(a)(x mu) has coefficient (a5 + a2^2/2) on x2; the printed formula has (a5 + a1^2/2)".into()]
}

/// `pk − p² + p` with `p = ⌊(k+1)/2⌋`, the maximum of the family counts of
/// `ℂ[x,y]/(x,y)^{k+1}`.
pub fn truncated_plane_modality(k: usize) -> usize {
    let p = k.div_ceil(2);
    p * k - p * p + p
}
