//! Dense univariate polynomials over the integers, used as the working
//! representation when reducing quotients in `u = L^(1/r)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Integer polynomial stored low degree first. The leading coefficient is
/// never zero; the zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct UPoly {
    coeffs: Vec<BigInt>,
}

impl UPoly {
    pub(crate) fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub(crate) fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub(crate) fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub(crate) fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub(crate) fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Non-negative gcd of the coefficients (0 for the zero polynomial).
    pub(crate) fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    pub(crate) fn div_scalar_exact(&self, s: &BigInt) -> Self {
        debug_assert!(!s.is_zero());
        UPoly::from_coeffs(self.coeffs.iter().map(|c| c / s).collect())
    }

    pub(crate) fn neg(&self) -> Self {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Primitive part, normalized to a positive leading coefficient.
    pub(crate) fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut p = self.div_scalar_exact(&self.content());
        if p.leading().is_some_and(|c| c.is_negative()) {
            p = p.neg();
        }
        p
    }

    fn mul_scalar(&self, s: &BigInt) -> Self {
        UPoly::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(out)
    }

    /// `u^sa * a + u^sb * b`.
    pub(crate) fn add_shifted(a: &Self, sa: usize, b: &Self, sb: usize) -> Self {
        let len = (a.coeffs.len() + sa).max(b.coeffs.len() + sb);
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in a.coeffs.iter().enumerate() {
            out[i + sa] += c;
        }
        for (i, c) in b.coeffs.iter().enumerate() {
            out[i + sb] += c;
        }
        UPoly::from_coeffs(out)
    }

    /// Splits off the largest power of `u` dividing `self`.
    pub(crate) fn strip_low(mut self) -> (usize, Self) {
        let t = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if t > 0 && t < self.coeffs.len() {
            self.coeffs.drain(..t);
        }
        (t, self)
    }

    /// Pseudo-remainder of `self` by `divisor`: `lc(divisor)^k * self mod divisor`.
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let dd = divisor.degree().expect("pseudo_rem by zero polynomial");
        let lc = divisor.leading().unwrap().clone();
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            let lead = rem.leading().unwrap().clone();
            let mut scaled = rem.mul_scalar(&lc);
            for (i, c) in divisor.coeffs.iter().enumerate() {
                scaled.coeffs[i + shift] -= &lead * c;
            }
            rem = UPoly::from_coeffs(scaled.coeffs);
        }
        rem
    }

    /// Primitive gcd over `Z[u]` (equivalently, the monic gcd over `Q[u]`
    /// scaled to a primitive integer polynomial with positive leading
    /// coefficient). `gcd(0, 0)` is zero.
    pub(crate) fn gcd(&self, other: &Self) -> Self {
        if self.degree() == Some(0) || other.degree() == Some(0) {
            return UPoly::from_coeffs(vec![BigInt::one()]);
        }
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    /// Exact quotient `self / divisor`; the caller guarantees divisibility
    /// in `Z[u]`.
    pub(crate) fn div_exact(&self, divisor: &Self) -> Self {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return UPoly::zero();
        };
        if sd < dd {
            debug_assert!(self.is_zero(), "inexact polynomial division");
            return UPoly::zero();
        }
        let mut quot = vec![BigInt::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let (q, r) = rem[k + dd].div_rem(lc);
            debug_assert!(r.is_zero(), "inexact polynomial division");
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        debug_assert!(
            rem.iter().all(|c| c.is_zero()),
            "inexact polynomial division"
        );
        UPoly::from_coeffs(quot)
    }

    pub(crate) fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}
