//! Integer Laurent polynomials and graded multiset ranks.
//!
//! `LaurentPoly` is the scalar ring Z[v^{±1}] of every Grothendieck-group
//! computation in this crate. Coefficients are arbitrary-precision integers;
//! the zero coefficient is never stored, so equality is structural.

use num::{BigInt, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact Laurent polynomial in one formal variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    /// The monomial c * v^exp. Zero coefficients collapse to the zero polynomial.
    pub fn monomial(c: i64, exp: i32) -> Self {
        Self::monomial_big(BigInt::from(c), exp)
    }

    pub fn monomial_big(c: BigInt, exp: i32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        LaurentPoly { coeffs }
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    fn add_term(&mut self, exp: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(0) == BigInt::from(1)
    }

    pub fn coeff(&self, exp: i32) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Highest exponent with nonzero coefficient, None for the zero polynomial.
    pub fn degree(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.values().all(|c| c.sign() != num::bigint::Sign::Minus)
    }

    /// The bar involution v -> v^{-1}: every exponent is negated.
    pub fn bar_involution(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Substitute v -> v^k for k != 0 (exponents scale by k).
    pub fn stretch(&self, k: i32) -> Self {
        assert!(k != 0, "stretch factor must be nonzero");
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        }
    }

    /// Multiply by v^k.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Render with an explicit variable name, e.g. "1+q" or "v^-2+v^2".
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let one = BigInt::from(1);
        let minus_one = BigInt::from(-1);
        let mut out = String::new();
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            let negative = c.sign() == num::bigint::Sign::Minus;
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push(if negative { '-' } else { '+' });
            }
            let abs = if negative { -c.clone() } else { c.clone() };
            let coeff_is_unit = *c == one || *c == minus_one;
            match (*e, coeff_is_unit) {
                (0, _) => out.push_str(&abs.to_string()),
                (1, true) => out.push_str(var),
                (1, false) => {
                    out.push_str(&abs.to_string());
                    out.push_str(var);
                }
                (exp, true) => out.push_str(&format!("{var}^{exp}")),
                (exp, false) => out.push_str(&format!("{abs}{var}^{exp}")),
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_in("v"))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// Finite multiset of integers, the degrees of free generators of a graded
/// free module. Carries the same data as a Laurent polynomial with
/// nonnegative coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedRank {
    degrees: BTreeMap<i32, u64>,
}

impl GradedRank {
    pub fn new() -> Self {
        GradedRank::default()
    }

    pub fn with_generator(degree: i32) -> Self {
        let mut r = GradedRank::new();
        r.add_generators(degree, 1);
        r
    }

    pub fn add_generators(&mut self, degree: i32, count: u64) {
        if count > 0 {
            *self.degrees.entry(degree).or_insert(0) += count;
        }
    }

    pub fn multiplicity(&self, degree: i32) -> u64 {
        self.degrees.get(&degree).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.degrees.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, u64)> + '_ {
        self.degrees.iter().map(|(d, m)| (*d, *m))
    }

    /// Entrywise comparison: every degree of `self` occurs at least as often
    /// in `other`.
    pub fn dominated_by(&self, other: &GradedRank) -> bool {
        self.degrees
            .iter()
            .all(|(d, m)| other.multiplicity(*d) >= *m)
    }

    /// Laurent polynomial sum over generators of v^degree.
    pub fn to_laurent(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (d, m) in &self.degrees {
            p = p + LaurentPoly::monomial_big(BigInt::from(*m), *d);
        }
        p
    }

    /// Reinterpret a cohomological grading in even degrees as a polynomial
    /// in q, one degree-2 step per power. None if an odd degree occurs.
    pub fn to_q_polynomial(&self) -> Option<LaurentPoly> {
        let mut p = LaurentPoly::zero();
        for (d, m) in &self.degrees {
            if d % 2 != 0 {
                return None;
            }
            p = p + LaurentPoly::monomial_big(BigInt::from(*m), d / 2);
        }
        Some(p)
    }

    pub fn from_laurent(p: &LaurentPoly) -> Option<Self> {
        let mut r = GradedRank::new();
        for (e, c) in p.terms() {
            let m: u64 = c.try_into().ok()?;
            r.add_generators(e, m);
        }
        Some(r)
    }
}

impl fmt::Display for GradedRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degrees.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .degrees
            .iter()
            .map(|(d, m)| format!("{d}:{m}"))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn bar_involution_negates_exponents() {
        // v + 2v^{-3} -> v^{-1} + 2v^3
        let p = poly(&[(1, 1), (-3, 2)]);
        let expected = poly(&[(-1, 1), (3, 2)]);
        assert_eq!(p.bar_involution(), expected);
    }

    #[test]
    fn bar_involution_fixes_zero() {
        assert_eq!(LaurentPoly::zero().bar_involution(), LaurentPoly::zero());
    }

    #[test]
    fn display_matches_expected_forms() {
        assert_eq!(poly(&[(0, 1), (1, 1)]).to_string_in("q"), "1+q");
        assert_eq!(poly(&[(-2, 1), (2, 1)]).to_string(), "v^-2+v^2");
        assert_eq!(poly(&[(3, 2)]).to_string(), "2v^3");
        assert_eq!(poly(&[(0, 5)]).to_string(), "5");
        assert_eq!(poly(&[(0, 1), (2, -3)]).to_string(), "1-3v^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn graded_rank_round_trips_through_laurent() {
        let mut r = GradedRank::new();
        r.add_generators(0, 1);
        r.add_generators(2, 3);
        let p = r.to_laurent();
        assert_eq!(GradedRank::from_laurent(&p), Some(r.clone()));
        assert_eq!(r.to_q_polynomial(), Some(poly(&[(0, 1), (1, 3)])));
    }

    #[test]
    fn odd_degree_has_no_q_form() {
        let r = GradedRank::with_generator(3);
        assert_eq!(r.to_q_polynomial(), None);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-6i32..=6, -9i64..=9), 0..6)
            .prop_map(|terms| LaurentPoly::from_terms(terms))
    }

    proptest! {
        #[test]
        fn bar_is_an_involution(p in arb_poly()) {
            prop_assert_eq!(p.bar_involution().bar_involution(), p);
        }

        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            // associativity of multiplication
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            // distributivity
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            // commutativity and additive inverse
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a - &a, LaurentPoly::zero());
        }

        #[test]
        fn bar_is_multiplicative(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a * &b).bar_involution(),
                            &a.bar_involution() * &b.bar_involution());
        }
    }
}
