use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::element::{forward_owned, Exponent, MotivicElement};
use super::upoly::UPoly;
use super::RingError;

/// A quotient of motivic elements in canonical reduced form.
///
/// Writing numerator and denominator as `u^k * N(u)` and `u^j * D(u)` with
/// `u = L^(1/r)`, the canonical form has `gcd(N, D) = 1` over `Q[u]`,
/// jointly primitive integer coefficients, a positive leading coefficient
/// of `D`, and the monomial part moved entirely to one side. Structural
/// equality is therefore equality of values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MotivicRational {
    num: MotivicElement,
    den: MotivicElement,
}

impl MotivicRational {
    pub fn new(num: MotivicElement, den: MotivicElement) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::ZeroDenominator);
        }
        Ok(Self::canonicalize(&num, &den))
    }

    pub fn zero() -> Self {
        MotivicRational {
            num: MotivicElement::zero(),
            den: MotivicElement::one(),
        }
    }

    pub fn one() -> Self {
        MotivicRational {
            num: MotivicElement::one(),
            den: MotivicElement::one(),
        }
    }

    pub fn numerator(&self) -> &MotivicElement {
        &self.num
    }

    pub fn denominator(&self) -> &MotivicElement {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Joint ramification index of numerator and denominator.
    pub fn ramification_index(&self) -> i64 {
        self.num
            .ramification_index()
            .lcm(&self.den.ramification_index())
    }

    /// Reduces `num / den`; `den` must be nonzero.
    fn canonicalize(num: &MotivicElement, den: &MotivicElement) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let r = num.ramification_index().lcm(&den.ramification_index());
        let (a, n) = num.to_upoly(r);
        let (b, d) = den.to_upoly(r);
        let g = n.gcd(&d);
        let (n, d) = if g.is_one() {
            (n, d)
        } else {
            (n.div_exact(&g), d.div_exact(&g))
        };
        Parts { r, k: a - b, n, d }.finish()
    }

    /// Re-runs canonical reduction; the identity on canonical values.
    pub fn canonical(&self) -> Self {
        Self::canonicalize(&self.num, &self.den)
    }

    pub fn recip(&self) -> Result<Self, RingError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, RingError> {
        if rhs.is_zero() {
            return Err(RingError::ZeroDenominator);
        }
        Ok(Self::canonicalize(
            &(&self.num * &rhs.den),
            &(&self.den * &rhs.num),
        ))
    }

    /// The Laurent polynomial this value equals, if its reduced
    /// denominator is a unit monomial `L^e`.
    pub fn as_element(&self) -> Option<MotivicElement> {
        if self.den.num_terms() != 1 {
            return None;
        }
        let (e, c) = self.den.terms().next().unwrap();
        if *c != BigInt::from(1) {
            return None;
        }
        Some(self.num.shift(-*e))
    }

    /// Value at `L = 1` (topological Euler characteristic realization).
    pub fn eval_at_one(&self) -> Result<BigRational, RingError> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            return Err(RingError::Pole { point: "L = 1" });
        }
        Ok(BigRational::new(self.num.eval_at_one(), d))
    }

    /// Value at `u = 0`: ratio of lowest-order coefficients once the
    /// monomial parts are compared.
    pub(crate) fn eval_at_zero(&self, point: &'static str) -> Result<BigRational, RingError> {
        let Some(nmin) = self.num.min_exponent() else {
            return Ok(BigRational::zero());
        };
        let dmin = self.den.min_exponent().unwrap();
        match nmin.cmp(&dmin) {
            std::cmp::Ordering::Greater => Ok(BigRational::zero()),
            std::cmp::Ordering::Less => Err(RingError::Pole { point }),
            std::cmp::Ordering::Equal => Ok(BigRational::new(
                self.num.coefficient(&nmin),
                self.den.coefficient(&dmin),
            )),
        }
    }

    /// Applies `q -> f(q)` to every exponent of both parts and reduces.
    pub(crate) fn map_exponents(&self, f: impl Fn(&Exponent) -> Exponent + Copy) -> Self {
        Self::canonicalize(&self.num.map_exponents(f), &self.den.map_exponents(f))
    }

    pub fn display_with(&self, var: &str) -> String {
        let n = self.num.display_with(var);
        if self.den.is_one() {
            return n;
        }
        let wrap = |e: &MotivicElement, s: String| {
            if e.num_terms() > 1 || s.starts_with('-') {
                format!("({s})")
            } else {
                s
            }
        };
        let d = self.den.display_with(var);
        format!("{}/{}", wrap(&self.num, n), wrap(&self.den, d))
    }
}

impl Default for MotivicRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<MotivicElement> for MotivicRational {
    fn from(num: MotivicElement) -> Self {
        MotivicRational::canonicalize(&num, &MotivicElement::one())
    }
}

impl fmt::Display for MotivicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("L"))
    }
}

impl Add<&MotivicRational> for &MotivicRational {
    type Output = MotivicRational;
    fn add(self, rhs: &MotivicRational) -> MotivicRational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let r = self.ramification_index().lcm(&rhs.ramification_index());
        let (x, y) = (Parts::of(self, r), Parts::of(rhs, r));
        // Henrici: with g = gcd(d1, d2), the sum's numerator only shares
        // factors with g.
        let g = x.d.gcd(&y.d);
        let (d1g, d2g) = if g.is_one() {
            (x.d.clone(), y.d.clone())
        } else {
            (x.d.div_exact(&g), y.d.div_exact(&g))
        };
        let kmin = x.k.min(y.k);
        let num = UPoly::add_shifted(
            &x.n.mul(&d2g),
            (x.k - kmin) as usize,
            &y.n.mul(&d1g),
            (y.k - kmin) as usize,
        );
        if num.is_zero() {
            return MotivicRational::zero();
        }
        let (t, num) = num.strip_low();
        let h = num.gcd(&g);
        let (n, d2h) = if h.is_one() {
            (num, y.d)
        } else {
            (num.div_exact(&h), y.d.div_exact(&h))
        };
        Parts {
            r,
            k: kmin + t as i64,
            n,
            d: d1g.mul(&d2h),
        }
        .finish()
    }
}

impl Sub<&MotivicRational> for &MotivicRational {
    type Output = MotivicRational;
    fn sub(self, rhs: &MotivicRational) -> MotivicRational {
        self + &(-rhs)
    }
}

impl Neg for &MotivicRational {
    type Output = MotivicRational;
    fn neg(self) -> MotivicRational {
        MotivicRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for MotivicRational {
    type Output = MotivicRational;
    fn neg(self) -> MotivicRational {
        -&self
    }
}

impl Mul<&MotivicRational> for &MotivicRational {
    type Output = MotivicRational;
    fn mul(self, rhs: &MotivicRational) -> MotivicRational {
        if self.is_zero() || rhs.is_zero() {
            return MotivicRational::zero();
        }
        let r = self.ramification_index().lcm(&rhs.ramification_index());
        let (x, y) = (Parts::of(self, r), Parts::of(rhs, r));
        let cancel = |n: UPoly, d: UPoly| {
            let g = n.gcd(&d);
            if g.is_one() {
                (n, d)
            } else {
                (n.div_exact(&g), d.div_exact(&g))
            }
        };
        let (n1, d2) = cancel(x.n, y.d);
        let (n2, d1) = cancel(y.n, x.d);
        Parts {
            r,
            k: x.k + y.k,
            n: n1.mul(&n2),
            d: d1.mul(&d2),
        }
        .finish()
    }
}

forward_owned!(Add, add, MotivicRational);
forward_owned!(Sub, sub, MotivicRational);
forward_owned!(Mul, mul, MotivicRational);

impl std::iter::Sum for MotivicRational {
    fn sum<I: Iterator<Item = MotivicRational>>(iter: I) -> Self {
        iter.fold(MotivicRational::zero(), |acc, x| acc + x)
    }
}

/// A quotient `u^k * n / d` in `u = L^(1/r)` with `n(0), d(0)` nonzero and
/// `n, d` coprime over `Q[u]`.
struct Parts {
    r: i64,
    k: i64,
    n: UPoly,
    d: UPoly,
}

impl Parts {
    /// `x` must be canonical and nonzero, and `r` a multiple of its index.
    fn of(x: &MotivicRational, r: i64) -> Parts {
        let (a, n) = x.num.to_upoly(r);
        let (b, d) = x.den.to_upoly(r);
        Parts { r, k: a - b, n, d }
    }

    fn finish(self) -> MotivicRational {
        let Parts { r, k, mut n, mut d } = self;
        let mut content = n.content().gcd(&d.content());
        if d.leading().is_some_and(|c| c.is_negative()) {
            content = -content;
        }
        if !content.is_one() {
            n = n.div_scalar_exact(&content);
            d = d.div_scalar_exact(&content);
        }
        MotivicRational {
            num: MotivicElement::from_upoly(&n, k.max(0), r),
            den: MotivicElement::from_upoly(&d, (-k).max(0), r),
        }
    }
}
