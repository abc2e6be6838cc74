use gaq::builtins::builtin;
use gaq::exact::{MultiPoly, Scalar};
use gaq::quadric::{
    build_b0, canonical_quadric_algebra, defining_identities_hold, invariance_check,
    orbit_on_quadric, quadric_verdict, rank_invariant, QuadricVerdict,
};
use num_traits::Zero;

/// `2y₀y_{n+1} − Σ yᵢ²` written out term by term.
fn expected_equation(n: usize) -> MultiPoly {
    let mut q = (&MultiPoly::var(0) * &MultiPoly::var(n + 1)).scale(&Scalar::from_int(2));
    for i in 1..=n {
        q = &q - &MultiPoly::var(i).pow(2);
    }
    q
}

#[test]
fn canonical_algebras_give_the_smooth_quadric() {
    for n in 1..=10 {
        let a = canonical_quadric_algebra(n);
        let v = quadric_verdict(&a).unwrap();
        let QuadricVerdict::Nondegenerate(form) = &v else {
            panic!("n = {n}: {}", v.kind());
        };
        assert_eq!(form.equation(), expected_equation(n), "n = {n}");
        assert_eq!(rank_invariant(&a).unwrap(), n);
        assert!(orbit_on_quadric(&a, form).unwrap().is_zero(), "n = {n}");
        assert!(invariance_check(&a, form) && defining_identities_hold(&a, form));
    }
}

#[test]
fn cone_of_the_second_curve_algebra() {
    let b = builtin("remark1:2").unwrap();
    let a = &b.algebra().unwrap().algebra;
    let v = quadric_verdict(a).unwrap();
    assert_eq!((v.kind(), v.rank()), ("DegenerateQuadric", Some(3)));
}

#[test]
fn larger_square_is_rejected() {
    let b = builtin("truncated:2:2").unwrap();
    let a = &b.algebra().unwrap().algebra;
    assert_eq!(quadric_verdict(a).unwrap(), QuadricVerdict::NotDimOneSquare { dim: 3 });
    assert!(build_b0(a).is_err());
}

#[test]
fn b0_is_invariant_for_every_square_one_builtin() {
    let ids = ["quadric:1", "quadric:4", "remark1:2", "truncated:1:2", "r5:7", "r5:8", "r5:9"];
    for id in ids {
        let b = builtin(id).unwrap();
        let a = &b.algebra().unwrap().algebra;
        let form = build_b0(a).unwrap();
        assert!(invariance_check(a, &form), "{id}");
        assert!(defining_identities_hold(a, &form), "{id}");
    }
}
