use gaq::builtins::builtin;
use gaq::corresp::{algebra_from_rep, dual_space, rep_from_algebra};
use gaq::exact::{parse_poly, Monomial, MultiPoly, Scalar};
use num_traits::Zero;

/// Rows of the reference matrix for `ℂ[x,y]/(x,y)⁴`, basis `1, x, y, x², xy, y², x³, x²y, xy², y³`.
const REFERENCE: [[&str; 10]; 10] = [
    ["1", "0", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["a1", "1", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["a2", "0", "1", "0", "0", "0", "0", "0", "0", "0"],
    ["a3+a1^2/2", "a1", "0", "1", "0", "0", "0", "0", "0", "0"],
    ["a4+a1*a2", "a2", "a1", "0", "1", "0", "0", "0", "0", "0"],
    ["a5+a2^2/2", "0", "a2", "0", "0", "1", "0", "0", "0", "0"],
    ["a6+a1*a3+a1^3/6", "a3+a1^2/2", "0", "a1", "0", "0", "1", "0", "0", "0"],
    ["a7+a1*a4+a2*a3+a1^2*a2/2", "a4+a1*a2", "a3+a1^2/2", "a2", "a1", "0", "0", "1", "0", "0"],
    ["a8+a1*a5+a2*a4+a1*a2^2/2", "a5+a2^2/2", "a4+a1*a2", "0", "a2", "a1", "0", "0", "1", "0"],
    ["a9+a2*a5+a2^3/6", "0", "a5+a2^2/2", "0", "0", "a2", "0", "0", "0", "1"],
];

fn names() -> Vec<String> {
    (1..=9).map(|i| format!("a{i}")).collect()
}

/// `exp(Σ aᵢμᵢ)·μⱼ` computed with polynomials in `a₁..a₉, x, y`, dropping
/// `x, y`-degree above 3.
fn power_series_oracle() -> Vec<Vec<MultiPoly>> {
    let x = MultiPoly::var(9);
    let y = MultiPoly::var(10);
    let mus = [
        MultiPoly::constant(Scalar::from_int(1)),
        x.clone(),
        y.clone(),
        x.pow(2),
        &x * &y,
        y.pow(2),
        x.pow(3),
        &x.pow(2) * &y,
        &x * &y.pow(2),
        y.pow(3),
    ];
    let truncate = |p: &MultiPoly| {
        MultiPoly::from_terms(
            p.terms()
                .filter(|(m, _)| m.exp(9) + m.exp(10) <= 3)
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    };
    let n = (1..10).fold(MultiPoly::zero(), |acc, i| &acc + &(&MultiPoly::var(i - 1) * &mus[i]));
    let mut exp = MultiPoly::constant(Scalar::from_int(1));
    let mut power = exp.clone();
    for k in 1..=3 {
        power = truncate(&(&power * &n));
        exp = &exp + &power.scale(&Scalar::ratio(1, [1, 1, 2, 6][k]));
    }
    let coordinate = |p: &MultiPoly, i: usize| {
        let target = &mus[i];
        let (mono, _) = target.terms().next().unwrap();
        let mut out = MultiPoly::zero();
        for (m, c) in p.terms() {
            let xy = Monomial::new((0..11).map(|v| if v >= 9 { m.exp(v) } else { 0 }).collect());
            if xy == *mono {
                let a = Monomial::new((0..11).map(|v| if v < 9 { m.exp(v) } else { 0 }).collect());
                out.add_term(a, c.clone());
            }
        }
        out
    };
    (0..10)
        .map(|i| (0..10).map(|j| coordinate(&truncate(&(&exp * &mus[j])), i)).collect())
        .collect()
}

#[test]
fn cubic_truncation_matrix_matches_reference_and_oracle() {
    let b = builtin("truncated:2:3").unwrap();
    let a = b.algebra().unwrap();
    let rep = rep_from_algebra(&a.algebra, &a.group_gens).unwrap();
    let oracle = power_series_oracle();
    let names = names();
    for i in 0..10 {
        for j in 0..10 {
            let printed = parse_poly(REFERENCE[i][j], &names).unwrap();
            let computed = &rep.matrix()[(i, j)];
            assert_eq!(computed, &printed, "entry ({}, {})", i + 1, j + 1);
            let oracle_entry = MultiPoly::from_terms(
                oracle[i][j].terms().map(|(m, c)| (Monomial::new((0..9).map(|v| m.exp(v)).collect()), c.clone())),
            );
            assert_eq!(computed, &oracle_entry, "oracle ({}, {})", i + 1, j + 1);
        }
    }
    assert!(rep.is_homomorphism() && rep.is_unipotent());
}

#[test]
fn round_trip_preserves_invariants() {
    for id in ["truncated:2:2", "r5:2", "r5:3p", "remark1:1", "remark1:2", "quadric:3", "ht-finite:4"] {
        let b = builtin(id).unwrap();
        let a = b.algebra().unwrap();
        let rep = rep_from_algebra(&a.algebra, &a.group_gens).unwrap();
        let mats: Vec<_> = (0..rep.n()).map(|i| rep.derivative_at_zero(i)).collect();
        let back = algebra_from_rep(&mats, &a.algebra.unity()).unwrap();
        assert_eq!(back.invariant_vector(), a.algebra.invariant_vector(), "{id}");
    }
}

#[test]
fn dual_space_dimension_matches() {
    for id in ["truncated:2:3", "r5:1", "r5:8", "remark1:1", "ht-finite:5", "bn:2"] {
        let b = builtin(id).unwrap();
        let a = b.algebra().unwrap();
        let v = dual_space(a.presentation.as_ref().unwrap(), None).unwrap();
        assert_eq!(v.dim(), a.algebra.dim(), "{id}");
    }
}
