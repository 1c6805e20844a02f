use std::fmt;

use num_rational::BigRational;
use num_traits::Signed;

use super::element::{Exponent, MotivicElement};
use super::rational::MotivicRational;
use super::RingError;

/// A motivic value or the divergent value `Infinite`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtendedMotivic {
    Finite(MotivicRational),
    Infinite,
}

impl ExtendedMotivic {
    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedMotivic::Infinite)
    }

    pub fn finite(&self) -> Option<&MotivicRational> {
        match self {
            ExtendedMotivic::Finite(x) => Some(x),
            ExtendedMotivic::Infinite => None,
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (ExtendedMotivic::Finite(a), ExtendedMotivic::Finite(b)) => {
                ExtendedMotivic::Finite(a + b)
            }
            _ => ExtendedMotivic::Infinite,
        }
    }

    /// Product; `Infinite * 0` is undefined.
    pub fn mul(&self, rhs: &Self) -> Result<Self, RingError> {
        match (self, rhs) {
            (ExtendedMotivic::Finite(a), ExtendedMotivic::Finite(b)) => {
                Ok(ExtendedMotivic::Finite(a * b))
            }
            (ExtendedMotivic::Finite(x), ExtendedMotivic::Infinite)
            | (ExtendedMotivic::Infinite, ExtendedMotivic::Finite(x))
                if x.is_zero() =>
            {
                Err(RingError::InfiniteTimesZero)
            }
            _ => Ok(ExtendedMotivic::Infinite),
        }
    }
}

impl From<MotivicRational> for ExtendedMotivic {
    fn from(x: MotivicRational) -> Self {
        ExtendedMotivic::Finite(x)
    }
}

impl From<MotivicElement> for ExtendedMotivic {
    fn from(x: MotivicElement) -> Self {
        ExtendedMotivic::Finite(x.into())
    }
}

impl fmt::Display for ExtendedMotivic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedMotivic::Finite(x) => x.fmt(f),
            ExtendedMotivic::Infinite => f.write_str("infinity"),
        }
    }
}

/// Exact Euler characteristic, possibly divergent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum EulerValue {
    Finite(BigRational),
    Infinite,
}

impl EulerValue {
    pub fn is_integer(&self) -> bool {
        matches!(self, EulerValue::Finite(x) if x.is_integer())
    }
}

impl fmt::Display for EulerValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EulerValue::Finite(x) => x.fmt(f),
            EulerValue::Infinite => f.write_str("infinity"),
        }
    }
}

/// Topological Euler characteristic realization: the reduced value at
/// `L = 1`. Removable singularities have already been cancelled by
/// canonical reduction.
pub fn euler_realize(x: &ExtendedMotivic) -> Result<EulerValue, RingError> {
    match x {
        ExtendedMotivic::Infinite => Ok(EulerValue::Infinite),
        ExtendedMotivic::Finite(q) => q.eval_at_one().map(EulerValue::Finite),
    }
}

/// The formal sum `sum_{i >= 0} class_factor * L^(initial - i * step)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometricStrand {
    pub initial_exponent: Exponent,
    pub step: Exponent,
    pub class_factor: MotivicElement,
    /// Upper bound on the dimension of the varieties whose classes make up
    /// `class_factor`.
    pub dimension_bound: i64,
}

impl GeometricStrand {
    pub fn new(initial_exponent: Exponent, step: Exponent, class_factor: MotivicElement) -> Self {
        let dimension_bound = class_factor
            .max_exponent()
            .map(|e| e.ceil().to_integer())
            .unwrap_or(0);
        GeometricStrand {
            initial_exponent,
            step,
            class_factor,
            dimension_bound,
        }
    }
}

/// Sums a geometric strand. The series converges iff the terms' dimensions
/// tend to minus infinity, which for a fixed class factor means `step > 0`.
pub fn geometric_sum(s: &GeometricStrand) -> ExtendedMotivic {
    if s.class_factor.is_zero() {
        return MotivicRational::zero().into();
    }
    if !s.step.is_positive() {
        return ExtendedMotivic::Infinite;
    }
    // L^b / (1 - L^-c) = L^(b + c) / (L^c - 1)
    let num = s.class_factor.shift(s.initial_exponent + s.step);
    let den = &MotivicElement::monomial(s.step, 1) - &MotivicElement::one();
    MotivicRational::new(num, den)
        .expect("L^c - 1 is nonzero for c > 0")
        .into()
}

/// Sums a finite union of strands.
pub fn sum_strands<'a>(strands: impl IntoIterator<Item = &'a GeometricStrand>) -> ExtendedMotivic {
    strands
        .into_iter()
        .map(geometric_sum)
        .fold(MotivicRational::zero().into(), |acc: ExtendedMotivic, x| {
            acc.add(&x)
        })
}
