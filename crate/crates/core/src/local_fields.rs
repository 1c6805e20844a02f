//! Totally tamely ramified extensions of `F_q((t))` by direct enumeration
//! over an explicitly constructed finite field, and the resulting check of
//! Serre's mass formula `sum_L q^(-d(L)) / #Aut(L/K) = q^(1-n)`.
//!
//! A totally tamely ramified extension of degree `n` is `K(y)` with
//! `y^n = u t` for a unit `u` of `F_q`, and `u`, `u c^n` give isomorphic
//! extensions. Classes are therefore the cosets of the `n`-th powers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow};
use serde::Serialize;
use thiserror::Error;

use crate::cyclic_reps::is_prime;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("no built-in field of order {0}")]
    UnsupportedOrder(u32),
    #[error("defining polynomial {0:?} is not irreducible")]
    Reducible(Vec<u32>),
    #[error("degree {n} is divisible by the characteristic {p}")]
    WildDegree { n: u32, p: u32 },
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("enumeration found {found} but the closed form gives {expected} for {what}")]
    EnumerationMismatch {
        what: &'static str,
        found: u64,
        expected: u64,
    },
}

/// Defining polynomials for the non-prime fields, as `(q, p, coefficients
/// low to high)`; each is monic of degree `e` with `q = p^e`.
pub const FIELD_TABLE: &[(u32, u32, &[u32])] = &[
    (4, 2, &[1, 1, 1]),
    (8, 2, &[1, 1, 0, 1]),
    (9, 3, &[1, 0, 1]),
    (16, 2, &[1, 1, 0, 0, 1]),
    (25, 5, &[2, 0, 1]),
    (27, 3, &[1, 2, 0, 1]),
    (49, 7, &[1, 0, 1]),
];

/// An element of `F_q`, encoded as the base-`p` digits of its polynomial
/// representative (constant term lowest). Zero is `FieldElement(0)` and
/// one is `FieldElement(1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FieldElement(pub u32);

/// `F_q = F_p[x]/(f)` with `f` irreducible of degree `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
}

impl FiniteField {
    /// Prime fields of any order, and the tabulated prime powers.
    pub fn new(q: u32) -> Result<Self, FieldError> {
        if is_prime(q) {
            return Self::with_modulus(q, vec![0, 1]);
        }
        let (_, p, coeffs) = FIELD_TABLE
            .iter()
            .find(|(order, _, _)| *order == q)
            .ok_or(FieldError::UnsupportedOrder(q))?;
        Self::with_modulus(*p, coeffs.to_vec())
    }

    /// `F_p[x]/(modulus)`; the modulus must be monic and irreducible.
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Self, FieldError> {
        if !is_prime(p)
            || modulus.len() < 2
            || *modulus.last().unwrap() != 1
            || modulus.iter().any(|&c| c >= p)
        {
            return Err(FieldError::Reducible(modulus));
        }
        if !is_irreducible(p, &modulus) {
            return Err(FieldError::Reducible(modulus));
        }
        let e = modulus.len() as u32 - 1;
        let q = p
            .checked_pow(e)
            .ok_or(FieldError::Reducible(modulus.clone()))?;
        Ok(FiniteField { p, e, q, modulus })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// The nonzero elements in encoding order.
    pub fn units(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.q).map(FieldElement)
    }

    fn digits(&self, x: FieldElement) -> Vec<u64> {
        let mut v = x.0;
        (0..self.e)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                u64::from(d)
            })
            .collect()
    }

    fn encode(&self, digits: &[u64]) -> FieldElement {
        FieldElement(
            digits
                .iter()
                .rev()
                .fold(0u32, |acc, &d| acc * self.p + d as u32),
        )
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = u64::from(self.p);
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
        self.encode(&sum)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.e == 1 {
            let p = u64::from(self.p);
            return FieldElement(((u64::from(a.0) * u64::from(b.0)) % p) as u32);
        }
        let p = u64::from(self.p);
        let e = self.e as usize;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, x) in da.iter().enumerate() {
            for (j, y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        // reduce with x^e = -(f_0 + ... + f_{e-1} x^{e-1})
        for k in (e..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &f) in self.modulus[..e].iter().enumerate() {
                let sub = (c * u64::from(f)) % p;
                prod[k - e + i] = (prod[k - e + i] + p - sub) % p;
            }
        }
        self.encode(&prod[..e])
    }

    pub fn pow(&self, a: FieldElement, mut exp: u64) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative order of a unit.
    pub fn unit_order(&self, a: FieldElement) -> u64 {
        assert_ne!(a, self.zero(), "zero has no multiplicative order");
        let group = u64::from(self.q - 1);
        let mut order = group;
        for d in divisors(group) {
            if self.pow(a, d) == self.one() {
                order = d;
                break;
            }
        }
        order
    }

    /// A generator of the multiplicative group, found by search.
    pub fn multiplicative_generator(&self) -> FieldElement {
        let group = u64::from(self.q - 1);
        self.units()
            .find(|&u| self.unit_order(u) == group)
            .expect("the multiplicative group of a finite field is cyclic")
    }

    pub fn format_element(&self, x: FieldElement) -> String {
        if self.e == 1 {
            return x.0.to_string();
        }
        let terms: Vec<String> = self
            .digits(x)
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &d)| d != 0)
            .map(|(i, &d)| match (i, d) {
                (0, d) => d.to_string(),
                (1, 1) => "a".to_string(),
                (1, d) => format!("{d}a"),
                (i, 1) => format!("a^{i}"),
                (i, d) => format!("{d}a^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|&d| n.is_multiple_of(d)).collect()
}

/// Remainder of `a` modulo the monic polynomial `m` over `F_p`.
fn poly_rem(p: u32, a: &[u32], m: &[u32]) -> Vec<u32> {
    let p = u64::from(p);
    let mut r: Vec<u64> = a.iter().map(|&c| u64::from(c)).collect();
    let dm = m.len() - 1;
    while r.len() > dm {
        let c = r.pop().unwrap();
        if c != 0 {
            let shift = r.len() - dm;
            for (i, &mi) in m[..dm].iter().enumerate() {
                let sub = (c * u64::from(mi)) % p;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
    }
    r.into_iter().map(|c| c as u32).collect()
}

/// Irreducibility by trial division with every monic polynomial of degree
/// at most half the degree.
fn is_irreducible(p: u32, f: &[u32]) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = u64::from(p).pow(d as u32);
        for idx in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut v = idx;
            for _ in 0..d {
                g.push((v % u64::from(p)) as u32);
                v /= u64::from(p);
            }
            g.push(1);
            if poly_rem(p, f, &g).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// One isomorphism class `K(y)/(y^n - u t)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TameExtensionClass {
    pub n: u32,
    /// Representative of `u` modulo `n`-th powers.
    pub uniformizer_class: FieldElement,
    /// Number of units `u` giving this class.
    pub orbit_size: u64,
    /// Discriminant exponent `d(L) = n - 1`.
    pub disc_exponent: u32,
    pub aut_order: u64,
}

fn require_tame(field: &FiniteField, n: u32) -> Result<(), FieldError> {
    if n == 0 {
        return Err(FieldError::ZeroDegree);
    }
    if n.is_multiple_of(field.p) {
        return Err(FieldError::WildDegree { n, p: field.p });
    }
    Ok(())
}

fn gcd_closed_form(field: &FiniteField, n: u32) -> u64 {
    u64::from(n).gcd(&u64::from(field.q - 1))
}

/// `#Aut(L/K)` for a degree `n` tame extension: the number of `n`-th roots
/// of unity in `F_q`, counted by exhaustive search and checked against
/// `gcd(n, q - 1)`.
pub fn aut_order(field: &FiniteField, n: u32) -> Result<u64, FieldError> {
    require_tame(field, n)?;
    let found = field
        .units()
        .filter(|&c| field.pow(c, u64::from(n)) == field.one())
        .count() as u64;
    let expected = gcd_closed_form(field, n);
    if found != expected {
        return Err(FieldError::EnumerationMismatch {
            what: "roots of unity",
            found,
            expected,
        });
    }
    Ok(found)
}

/// Enumerates the classes of `y^n - u t` under `u ~ u c^n`.
pub fn enumerate_tame_classes(
    field: &FiniteField,
    n: u32,
) -> Result<Vec<TameExtensionClass>, FieldError> {
    require_tame(field, n)?;
    let aut = aut_order(field, n)?;
    let mut powers: Vec<FieldElement> = field.units().map(|c| field.pow(c, u64::from(n))).collect();
    powers.sort();
    powers.dedup();

    let mut seen = vec![false; field.q as usize];
    let mut classes = Vec::new();
    for u in field.units() {
        if seen[u.0 as usize] {
            continue;
        }
        let mut orbit_size = 0;
        for &h in &powers {
            let v = field.mul(u, h);
            if !seen[v.0 as usize] {
                seen[v.0 as usize] = true;
                orbit_size += 1;
            }
        }
        classes.push(TameExtensionClass {
            n,
            uniformizer_class: u,
            orbit_size,
            disc_exponent: n - 1,
            aut_order: aut,
        });
    }
    Ok(classes)
}

/// Result of evaluating the mass formula by enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SerreMass {
    pub q: u32,
    pub n: u32,
    pub classes: Vec<TameExtensionClass>,
    /// `sum 1/#Aut * q^(-d(L))` over the enumerated classes.
    pub mass: BigRational,
    /// `q^(1 - n)`.
    pub expected: BigRational,
}

impl SerreMass {
    pub fn ok(&self) -> bool {
        self.mass == self.expected
    }
}

impl fmt::Display for SerreMass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "q={} n={}: {} classes, mass {} (expected {})",
            self.q,
            self.n,
            self.classes.len(),
            self.mass,
            self.expected
        )
    }
}

pub fn serre_mass(field: &FiniteField, n: u32) -> Result<SerreMass, FieldError> {
    let classes = enumerate_tame_classes(field, n)?;
    let q = BigInt::from(field.q);
    let mass = classes
        .iter()
        .map(|c| {
            BigRational::new(
                BigInt::one(),
                BigInt::from(c.aut_order) * Pow::pow(&q, c.disc_exponent),
            )
        })
        .fold(BigRational::from_integer(0.into()), |acc, x| acc + x);
    let expected = BigRational::new(BigInt::one(), Pow::pow(&q, n - 1));
    Ok(SerreMass {
        q: field.q,
        n,
        classes,
        mass,
        expected,
    })
}
