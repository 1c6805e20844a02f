use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::upoly::UPoly;

/// Exponent of a Lefschetz power, an exact rational in lowest terms.
pub type Exponent = Rational64;

/// A finite integer combination of fractional Lefschetz powers
/// `sum c_q L^q`, kept in canonical sparse form (no zero coefficients).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MotivicElement {
    terms: BTreeMap<Exponent, BigInt>,
}

impl MotivicElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The Lefschetz class `L`.
    pub fn lefschetz() -> Self {
        Self::monomial(Exponent::from_integer(1), 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(Exponent::zero(), c)
    }

    /// `c * L^exponent`.
    pub fn monomial(exponent: Exponent, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        MotivicElement { terms }
    }

    /// `L^(num/den)` with coefficient one.
    pub fn lefschetz_power(num: i64, den: i64) -> Self {
        Self::monomial(Exponent::new(num, den), 1)
    }

    /// Builds an element from `(exponent, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, C)>,
        C: Into<BigInt>,
    {
        let mut out = MotivicElement::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    /// Polynomial in `L` with integer coefficients, lowest degree first.
    pub fn from_int_poly(coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (Exponent::from_integer(i as i64), c)),
        )
    }

    pub(crate) fn add_term(&mut self, exponent: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Exponent::zero())
                .is_some_and(|c| c.is_one())
    }

    /// Terms in ascending exponent order.
    pub fn terms(
        &self,
    ) -> impl DoubleEndedIterator<Item = (&Exponent, &BigInt)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exponent: &Exponent) -> BigInt {
        self.terms.get(exponent).cloned().unwrap_or_default()
    }

    pub fn min_exponent(&self) -> Option<Exponent> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<Exponent> {
        self.terms.keys().next_back().copied()
    }

    /// Least common multiple of the exponent denominators (1 when empty).
    pub fn ramification_index(&self) -> i64 {
        self.terms.keys().fold(1, |acc, e| acc.lcm(e.denom()))
    }

    /// Sum of the coefficients, i.e. the value at `L = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// True when every exponent is a non-negative integer.
    pub fn is_polynomial(&self) -> bool {
        self.terms
            .keys()
            .all(|e| e.is_integer() && !e.is_negative())
    }

    /// Applies `q -> f(q)` to every exponent.
    pub fn map_exponents(&self, f: impl Fn(&Exponent) -> Exponent) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (f(e), c.clone())))
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, c * s)))
    }

    /// Multiplies by `L^shift`.
    pub fn shift(&self, shift: Exponent) -> Self {
        self.map_exponents(|e| e + shift)
    }

    /// Writes the element as `u^offset * poly(u)` with `u = L^(1/r)`, where
    /// `poly` has nonzero constant term. `r` must be a multiple of the
    /// ramification index. Returns `(0, 0)` for zero.
    pub(crate) fn to_upoly(&self, r: i64) -> (i64, UPoly) {
        let Some(min) = self.min_exponent() else {
            return (0, UPoly::zero());
        };
        let scaled = |e: &Exponent| -> i64 {
            let s = *e * r;
            debug_assert!(s.is_integer());
            s.to_integer()
        };
        let offset = scaled(&min);
        let top = scaled(&self.max_exponent().unwrap()) - offset;
        let mut coeffs = vec![BigInt::zero(); top as usize + 1];
        for (e, c) in &self.terms {
            coeffs[(scaled(e) - offset) as usize] = c.clone();
        }
        (offset, UPoly::from_coeffs(coeffs))
    }

    pub(crate) fn from_upoly(poly: &UPoly, offset: i64, r: i64) -> Self {
        Self::from_terms(
            poly.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (Exponent::new(offset + i as i64, r), c.clone())),
        )
    }

    /// Renders with the given variable name, highest exponent first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if e.is_zero() {
                out.push_str(&abs.to_string());
                continue;
            }
            if !abs.is_one() {
                out.push_str(&abs.to_string());
            }
            out.push_str(var);
            if *e != Exponent::one() {
                if e.is_integer() && e.numer().is_positive() {
                    out.push_str(&format!("^{}", e.numer()));
                } else {
                    out.push_str(&format!("^({e})"));
                }
            }
        }
        out
    }

    /// Coefficient as an `i64` when it fits, for compact serialization.
    pub(crate) fn small_coefficient(c: &BigInt) -> Option<i64> {
        c.to_i64()
    }
}

impl fmt::Display for MotivicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("L"))
    }
}

impl From<i64> for MotivicElement {
    fn from(c: i64) -> Self {
        MotivicElement::constant(c)
    }
}

impl Add<&MotivicElement> for &MotivicElement {
    type Output = MotivicElement;
    fn add(self, rhs: &MotivicElement) -> MotivicElement {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub<&MotivicElement> for &MotivicElement {
    type Output = MotivicElement;
    fn sub(self, rhs: &MotivicElement) -> MotivicElement {
        self + &(-rhs)
    }
}

impl Neg for &MotivicElement {
    type Output = MotivicElement;
    fn neg(self) -> MotivicElement {
        MotivicElement {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul<&MotivicElement> for &MotivicElement {
    type Output = MotivicElement;
    fn mul(self, rhs: &MotivicElement) -> MotivicElement {
        let mut out = MotivicElement::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident, $t:ty) => {
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t {
                (&self).$m(rhs)
            }
        }
    };
}
pub(crate) use forward_owned;

forward_owned!(Add, add, MotivicElement);
forward_owned!(Sub, sub, MotivicElement);
forward_owned!(Mul, mul, MotivicElement);

impl Neg for MotivicElement {
    type Output = MotivicElement;
    fn neg(self) -> MotivicElement {
        -&self
    }
}

impl std::iter::Sum for MotivicElement {
    fn sum<I: Iterator<Item = MotivicElement>>(iter: I) -> Self {
        iter.fold(MotivicElement::zero(), |acc, x| acc + x)
    }
}
