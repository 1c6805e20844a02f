//! Exact arithmetic with Laurent polynomials and rational functions in
//! fractional powers of the Lefschetz class `L`, with the virtual Poincaré
//! and Euler characteristic realizations.

mod element;
mod extended;
mod poincare;
mod rational;
mod serde_impl;
mod upoly;

pub use element::{Exponent, MotivicElement};
pub use extended::{
    euler_realize, geometric_sum, sum_strands, EulerValue, ExtendedMotivic, GeometricStrand,
};
pub use poincare::{
    duality_check, eval_at_zero, is_integral_polynomial, poincare_realize, PoincareFunction,
};
pub use rational::MotivicRational;
pub use serde_impl::{parse_rational, rational_to_string};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("pole at {point}")]
    Pole { point: &'static str },
    #[error("infinite value multiplied by zero")]
    InfiniteTimesZero,
}

/// Sum of two elements.
pub fn add(a: &MotivicElement, b: &MotivicElement) -> MotivicElement {
    a + b
}

/// Product of two quotients in canonical form.
pub fn mul(a: &MotivicRational, b: &MotivicRational) -> MotivicRational {
    a * b
}
