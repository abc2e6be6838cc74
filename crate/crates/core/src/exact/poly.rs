//! Sparse multivariate polynomials over [`Scalar`].
//!
//! Variables are positional: a polynomial only stores exponent vectors, and
//! names are supplied when printing or parsing. Exponent vectors are kept with
//! trailing zeros trimmed, so polynomials built in different numbers of
//! variables combine without ceremony.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Scalar;

/// An exponent vector. `Ord` is graded lexicographic with `x₁ > x₂ > …`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    /// The single variable `x_{var}` (0-based).
    pub fn var(var: usize) -> Self {
        let mut e = vec![0; var + 1];
        e[var] = 1;
        Monomial(e)
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.0.get(var).copied().unwrap_or(0)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial::new((0..n).map(|i| self.exp(i) + other.exp(i)).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..self.0.len()).all(|i| self.exp(i) <= other.exp(i))
    }

    /// `other / self`, assuming `self.divides(other)`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let n = other.0.len();
        Monomial::new((0..n).map(|i| other.exp(i) - self.exp(i)).collect())
    }

    /// All monomials in `nvars` variables of total degree exactly `d`,
    /// listed in basis order (largest first under lex).
    pub fn of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn rec(nvars: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == nvars {
                cur[i] = left;
                out.push(Monomial::new(cur.clone()));
                cur[i] = 0;
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e;
                rec(nvars, i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        if nvars == 0 {
            return if d == 0 { vec![Monomial::one()] } else { vec![] };
        }
        let mut out = Vec::new();
        rec(nvars, 0, d, &mut vec![0; nvars], &mut out);
        out
    }

    /// All monomials of degree `<= d` in basis order: by degree, then
    /// lex-descending within a degree (`1; x, y; x², xy, y²; …`).
    pub fn up_to_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        (0..=d).flat_map(|k| Monomial::of_degree(nvars, k)).collect()
    }

    /// Comparison key for basis order (see [`Monomial::up_to_degree`]).
    pub fn basis_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.cmp(self))
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = names.get(i).cloned().unwrap_or_else(|| format!("x{}", i + 1));
            if e == 1 {
                parts.push(name);
            } else {
                parts.push(format!("{name}^{e}"));
            }
        }
        parts.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let n = self.0.len().max(other.0.len());
            for i in 0..n {
                match self.exp(i).cmp(&other.exp(i)) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial: a map from monomials to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn constant(c: Scalar) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(i: usize) -> Self {
        MultiPoly::monomial(Monomial::var(i), Scalar::one())
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Monomial::one())
    }

    /// Number of variable slots touched by any term.
    pub fn nvars(&self) -> usize {
        self.terms.keys().map(|m| m.exps().len()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    t = &t * &point[i];
                }
            }
            acc += &t;
        }
        acc
    }

    /// Composition: replaces variable `i` by `images[i]`. Variables beyond
    /// the end of `images` are left untouched.
    pub fn substitute(&self, images: &[MultiPoly]) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(c.clone());
            let mut rest = Vec::new();
            for (i, &e) in m.exps().iter().enumerate() {
                if i < images.len() {
                    t = &t * &images[i].pow(e);
                    rest.push(0);
                } else {
                    rest.push(e);
                }
            }
            t = t.mul_monomial(&Monomial::new(rest), &Scalar::one());
            acc = &acc + &t;
        }
        acc
    }

    pub fn partial(&self, var: usize) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[var] -= 1;
            out.add_term(Monomial::new(exps), c * &Scalar::from_int(e as i64));
        }
        out
    }

    /// Applies `self(∂/∂x₁, …, ∂/∂xₙ)` to `f`.
    pub fn apply_as_operator(&self, f: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (op, c) in &self.terms {
            for (m, v) in &f.terms {
                if !op.divides(m) {
                    continue;
                }
                let mut k = c * v;
                for (i, &e) in op.exps().iter().enumerate() {
                    let a = m.exp(i);
                    for j in 0..e {
                        k = &k * &Scalar::from_int((a - j) as i64);
                    }
                }
                out.add_term(op.quotient_of(m), k);
            }
        }
        out
    }

    /// Exact division, `None` when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        let (lm, lc) = divisor.leading()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        if divisor.is_constant() {
            return Some(self.scale(&lc.inv()?));
        }
        let mut rem = self.clone();
        let mut quo = MultiPoly::zero();
        while let Some((m, c)) = rem.leading() {
            if !lm.divides(m) {
                return None;
            }
            let qm = lm.quotient_of(m);
            let qc = c / &lc;
            rem = &rem - &divisor.mul_monomial(&qm, &qc);
            quo.add_term(qm, qc);
        }
        Some(quo)
    }

    /// Terms printed in basis order (ascending degree, lex-descending within
    /// a degree), e.g. `a6 + a1*a3 + 1/6*a1^3`.
    pub fn display(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|a, b| a.0.basis_cmp(b.0));
        let mut out = String::new();
        for (k, (m, c)) in ordered.into_iter().enumerate() {
            let negative = c.is_real() && num_traits::Signed::is_negative(c.re());
            let mag = if negative { -c } else { c.clone() };
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let coeff = if mag.is_real() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            if m.is_one() {
                out.push_str(&coeff);
            } else if mag.is_one() {
                out.push_str(&m.display(names));
            } else {
                let _ = write!(out, "{coeff}*{}", m.display(names));
            }
        }
        out
    }
}

impl Zero for MultiPoly {
    fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MultiPoly {
    fn one() -> Self {
        MultiPoly::constant(Scalar::one())
    }
}

impl From<Scalar> for MultiPoly {
    fn from(c: Scalar) -> Self {
        MultiPoly::constant(c)
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Scalar::one())
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Names `prefix1, prefix2, …, prefixN`.
pub fn indexed_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    #[test]
    fn grlex_order() {
        let x = Monomial::var(0);
        let y = Monomial::var(1);
        assert!(x > y);
        assert!(y.mul(&y) > x);
        assert!(x.mul(&x) > x.mul(&y));
        let listed: Vec<String> = Monomial::up_to_degree(2, 2)
            .iter()
            .map(|m| m.display(&names()))
            .collect();
        assert_eq!(listed, ["1", "x", "y", "x^2", "x*y", "y^2"]);
    }

    #[test]
    fn exact_division() {
        let x = MultiPoly::var(0);
        let y = MultiPoly::var(1);
        let f = &(&x + &y) * &(&x - &y);
        assert_eq!(f.exact_div(&(&x + &y)), Some(&x - &y));
        assert_eq!(f.exact_div(&(&x + &MultiPoly::one())), None);
    }

    #[test]
    fn operator_application() {
        // d^2/dx^2 (x^3 y) = 6 x y
        let op = MultiPoly::monomial(Monomial::new(vec![2]), Scalar::one());
        let f = MultiPoly::monomial(Monomial::new(vec![3, 1]), Scalar::one());
        let g = op.apply_as_operator(&f);
        assert_eq!(g, MultiPoly::monomial(Monomial::new(vec![1, 1]), Scalar::from_int(6)));
    }

    #[test]
    fn display_style() {
        let p = crate::exact::parse::parse_poly("a6 + a1*a3 + a1^3/6", &indexed_names("a", 6))
            .unwrap();
        assert_eq!(p.display(&indexed_names("a", 6)), "a6 + a1*a3 + 1/6*a1^3");
        let q = crate::exact::parse::parse_poly("-x + (1+i)*y^2", &names()).unwrap();
        assert_eq!(q.display(&names()), "-x + (1+i)*y^2");
    }
}
