use gaq::algebra::{truncated_quotient, Element, LocalAlgebra, Presentation};
use gaq::builtins::builtin;
use gaq::corresp::{algebra_from_rep, dual_space, rep_from_algebra};
use gaq::exact::{Matrix, Monomial, MultiPoly, Scalar};
use gaq::orbits::SampleOptions;
use gaq::quadric::{build_b0, invariance_check, rank_invariant};
use gaq::text::{parse_algebra, print_algebra};
use num_traits::{One, Zero};
use proptest::prelude::*;

const IDS: [&str; 10] = [
    "truncated:2:2",
    "truncated:1:4",
    "ht-finite:3",
    "quadric:2",
    "quadric:3",
    "r5:1",
    "r5:3p",
    "remark1:1",
    "remark1:2",
    "bn:2",
];

const SQUARE_ONE: [&str; 6] = ["quadric:2", "quadric:3", "remark1:2", "r5:7", "r5:8", "r5:9"];

fn algebra(id: &str) -> (LocalAlgebra, Vec<Element>) {
    let b = builtin(id).unwrap();
    let a = b.algebra().unwrap();
    (a.algebra.clone(), a.group_gens.clone())
}

/// New basis `1, f₁, …` of `m` from a unit upper triangular times unit lower
/// triangular integer matrix.
fn new_basis(a: &LocalAlgebra, upper: &[i64], lower: &[i64]) -> Vec<Element> {
    let k = a.dim() - 1;
    let mut u = Matrix::<Scalar>::identity(k);
    let mut l = Matrix::<Scalar>::identity(k);
    let mut idx = 0;
    for i in 0..k {
        for j in i + 1..k {
            u[(i, j)] = Scalar::from_int(upper[idx % upper.len()]);
            l[(j, i)] = Scalar::from_int(lower[idx % lower.len()]);
            idx += 1;
        }
    }
    let t = &u * &l;
    let mut basis = vec![a.unity()];
    for c in 0..k {
        let mut v = vec![Scalar::zero()];
        v.extend(t.column(c));
        basis.push(v);
    }
    basis
}

fn relabelled(a: &LocalAlgebra, upper: &[i64], lower: &[i64]) -> LocalAlgebra {
    let basis = new_basis(a, upper, lower);
    let labels = (0..a.dim()).map(|i| if i == 0 { "1".into() } else { format!("f{i}") }).collect();
    a.change_basis(&basis, labels).unwrap()
}

fn small() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, 1..12)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, rng_seed: proptest::test_runner::RngSeed::Fixed(7), ..ProptestConfig::default() })]

    #[test]
    fn representation_is_a_homomorphism(id in 0..IDS.len(), a in small(), b in small()) {
        let (alg, gens) = algebra(IDS[id]);
        let rep = rep_from_algebra(&alg, &gens).unwrap();
        let n = rep.n();
        let pa: Vec<Scalar> = (0..n).map(|i| Scalar::from_int(a[i % a.len()])).collect();
        let pb: Vec<Scalar> = (0..n).map(|i| Scalar::from_int(b[i % b.len()])).collect();
        let sum: Vec<Scalar> = pa.iter().zip(&pb).map(|(x, y)| x + y).collect();
        prop_assert_eq!(&rep.eval(&pa) * &rep.eval(&pb), rep.eval(&sum));
    }

    #[test]
    fn invariants_survive_basis_changes(id in 0..IDS.len(), u in small(), l in small()) {
        let (alg, _) = algebra(IDS[id]);
        let other = relabelled(&alg, &u, &l);
        prop_assert!(other.validate().passed());
        prop_assert_eq!(other.invariant_vector(), alg.invariant_vector());
    }

    #[test]
    fn b0_is_invariant_in_any_basis(id in 0..SQUARE_ONE.len(), u in small(), l in small()) {
        let (alg, _) = algebra(SQUARE_ONE[id]);
        let other = relabelled(&alg, &u, &l);
        let form = build_b0(&other).unwrap();
        prop_assert!(invariance_check(&other, &form));
        prop_assert_eq!(rank_invariant(&other).unwrap(), rank_invariant(&alg).unwrap());
        prop_assert_eq!(form.rank(), build_b0(&alg).unwrap().rank());
    }

    #[test]
    fn round_trip_through_representation(id in 0..IDS.len(), u in small(), l in small()) {
        let (alg, _) = algebra(IDS[id]);
        let other = relabelled(&alg, &u, &l);
        let m: Vec<Element> = (1..other.dim()).map(|i| other.basis_element(i)).collect();
        let rep = rep_from_algebra(&other, &m).unwrap();
        let mats: Vec<_> = (0..rep.n()).map(|i| rep.derivative_at_zero(i)).collect();
        let back = algebra_from_rep(&mats, &other.unity()).unwrap();
        prop_assert_eq!(back.invariant_vector(), alg.invariant_vector());
    }

    #[test]
    fn text_round_trip(id in 0..IDS.len(), u in small(), l in small()) {
        let (alg, _) = algebra(IDS[id]);
        let other = relabelled(&alg, &u, &l);
        let text = print_algebra(&other);
        let parsed = parse_algebra(&text).unwrap();
        prop_assert_eq!(parsed.labels(), other.labels());
        prop_assert_eq!(parsed.table(), other.table());
        let once = print_algebra(&parsed);
        prop_assert_eq!(print_algebra(&parse_algebra(&once).unwrap()), once);
    }

    #[test]
    fn dual_space_matches_quotient(a in 1u32..5, b in 1u32..5, mixed in prop::collection::vec((1u32..4, 1u32..4), 0..3)) {
        let mut rels = vec![
            MultiPoly::monomial(Monomial::new(vec![a, 0]), Scalar::one()),
            MultiPoly::monomial(Monomial::new(vec![0, b]), Scalar::one()),
        ];
        for (i, j) in mixed {
            rels.push(MultiPoly::monomial(Monomial::new(vec![i, j]), Scalar::one()));
        }
        let p = Presentation::new(vec!["x".into(), "y".into()], rels).unwrap();
        let (q, _) = truncated_quotient(&p).unwrap();
        prop_assert_eq!(dual_space(&p, None).unwrap().dim(), q.dim());
    }

    #[test]
    fn strata_are_invariant(seed in 0u64..1000, c in 0usize..9) {
        let (alg, gens) = algebra("truncated:2:3");
        let rep = rep_from_algebra(&alg, &gens).unwrap();
        let mut rng = seed;
        let mut next = || { rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); ((rng >> 33) % 7) as i64 - 3 };
        let params: Vec<Scalar> = (0..rep.n()).map(|_| Scalar::from_int(next())).collect();
        let mut x = vec![Scalar::zero(); alg.dim()];
        x[c + 1] = Scalar::one();
        for v in x.iter_mut().skip(c + 2) {
            *v = Scalar::from_int(next());
        }
        let y = rep.eval(&params).mul_vec(&x);
        prop_assert!(y[0].is_zero());
        let lead = (1..alg.dim()).find(|&k| !y[k].is_zero()).unwrap();
        prop_assert!(lead > c);
    }
}

#[test]
fn sampling_is_deterministic() {
    let (alg, gens) = algebra("truncated:2:3");
    let opts = SampleOptions { seed: 42, ..Default::default() };
    let a = gaq::orbits::modality_table(&alg, &gens, &opts).unwrap();
    let b = gaq::orbits::modality_table(&alg, &gens, &opts).unwrap();
    assert_eq!(a.to_tsv(), b.to_tsv());
}

#[test]
fn dual_dimension_for_builtin_presentations() {
    for id in IDS.iter().filter(|id| !id.starts_with("quadric")) {
        let b = builtin(id).unwrap();
        let a = b.algebra().unwrap();
        let v = dual_space(a.presentation.as_ref().unwrap(), None).unwrap();
        assert_eq!(v.dim(), a.algebra.dim(), "{id}");
    }
}
