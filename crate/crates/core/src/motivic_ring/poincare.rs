use std::fmt;
use std::ops::{Add, Mul};

use num_rational::BigRational;

use super::element::{Exponent, MotivicElement};
use super::rational::MotivicRational;
use super::RingError;

/// A rational function in `T^(1/r)`, the image of a motivic value under
/// the virtual Poincaré realization `L -> T^2`.
///
/// The representation is the same canonical quotient as
/// [`MotivicRational`], with exponents read as powers of `T`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PoincareFunction {
    inner: MotivicRational,
}

impl PoincareFunction {
    /// Wraps a quotient whose exponents are already powers of `T`.
    pub fn from_t(inner: MotivicRational) -> Self {
        PoincareFunction { inner }
    }

    /// `sum c * T^q` from `(q, c)` pairs.
    pub fn from_t_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, i64)>,
    {
        Self::from_t(MotivicElement::from_terms(terms).into())
    }

    pub fn as_t_rational(&self) -> &MotivicRational {
        &self.inner
    }

    pub fn numerator(&self) -> &MotivicElement {
        self.inner.numerator()
    }

    pub fn denominator(&self) -> &MotivicElement {
        self.inner.denominator()
    }

    /// Least `r` such that the function lies in `Q(T^(1/r))`.
    pub fn ramification_index(&self) -> i64 {
        self.inner.ramification_index()
    }

    /// Value at `T = 0`.
    pub fn eval_at_zero(&self) -> Result<BigRational, RingError> {
        self.inner.eval_at_zero("T = 0")
    }

    /// Whether `T^(2d) * f(T^-1) = f(T)`.
    pub fn satisfies_duality(&self, d: u32) -> bool {
        let shift = Exponent::from_integer(2 * i64::from(d));
        let flipped = self.inner.map_exponents(|q| -q);
        let twisted = &flipped * &MotivicRational::from(MotivicElement::monomial(shift, 1));
        twisted == self.inner
    }

    /// Whether the function is a polynomial in `T` itself (denominator 1,
    /// non-negative integer exponents only).
    pub fn is_integral_polynomial(&self) -> bool {
        self.inner.denominator().is_one() && self.inner.numerator().is_polynomial()
    }
}

impl fmt::Display for PoincareFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.inner.display_with("T"))
    }
}

impl Add<&PoincareFunction> for &PoincareFunction {
    type Output = PoincareFunction;
    fn add(self, rhs: &PoincareFunction) -> PoincareFunction {
        PoincareFunction::from_t(&self.inner + &rhs.inner)
    }
}

impl Mul<&PoincareFunction> for &PoincareFunction {
    type Output = PoincareFunction;
    fn mul(self, rhs: &PoincareFunction) -> PoincareFunction {
        PoincareFunction::from_t(&self.inner * &rhs.inner)
    }
}

/// Virtual Poincaré realization, `L^q -> T^(2q)`.
pub fn poincare_realize(x: &MotivicRational) -> PoincareFunction {
    PoincareFunction::from_t(x.map_exponents(|q| q * 2))
}

pub fn eval_at_zero(f: &PoincareFunction) -> Result<BigRational, RingError> {
    f.eval_at_zero()
}

pub fn duality_check(f: &PoincareFunction, d: u32) -> bool {
    f.satisfies_duality(d)
}

pub fn is_integral_polynomial(f: &PoincareFunction) -> bool {
    f.is_integral_polynomial()
}
