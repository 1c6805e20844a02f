//! JSON encoding: an element is a list of `[num, den, coeff]` triples
//! meaning `coeff * L^(num/den)`, highest exponent first; a quotient is
//! `{"num": [...], "den": [...]}`; divergent values are `"infinity"`.
//! Coefficients that do not fit in an `i64` are written as decimal strings.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use super::element::{Exponent, MotivicElement};
use super::extended::{EulerValue, ExtendedMotivic};
use super::poincare::PoincareFunction;
use super::rational::MotivicRational;

#[derive(Deserialize)]
#[serde(untagged)]
enum Coeff {
    Small(i64),
    Big(String),
}

impl Serialize for MotivicElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.num_terms()))?;
        for (e, c) in self.terms().rev() {
            match MotivicElement::small_coefficient(c) {
                Some(small) => seq.serialize_element(&(e.numer(), e.denom(), small))?,
                None => seq.serialize_element(&(e.numer(), e.denom(), c.to_string()))?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for MotivicElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let triples: Vec<(i64, i64, Coeff)> = Vec::deserialize(d)?;
        let mut out = MotivicElement::zero();
        for (num, den, c) in triples {
            if den <= 0 {
                return Err(de::Error::custom(format!(
                    "exponent denominator must be positive, got {den}"
                )));
            }
            let c = match c {
                Coeff::Small(c) => BigInt::from(c),
                Coeff::Big(s) => BigInt::from_str(&s).map_err(de::Error::custom)?,
            };
            out.add_term(Exponent::new(num, den), c);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct QuotientRepr {
    num: MotivicElement,
    den: MotivicElement,
}

impl Serialize for MotivicRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        QuotientRepr {
            num: self.numerator().clone(),
            den: self.denominator().clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MotivicRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = QuotientRepr::deserialize(d)?;
        MotivicRational::new(repr.num, repr.den).map_err(de::Error::custom)
    }
}

impl Serialize for PoincareFunction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.as_t_rational().serialize(s)
    }
}

impl<'de> Deserialize<'de> for PoincareFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        MotivicRational::deserialize(d).map(PoincareFunction::from_t)
    }
}

const INFINITY: &str = "infinity";

#[derive(Deserialize)]
#[serde(untagged)]
enum ExtendedRepr {
    Word(String),
    Finite(MotivicRational),
}

impl Serialize for ExtendedMotivic {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtendedMotivic::Finite(x) => x.serialize(s),
            ExtendedMotivic::Infinite => s.serialize_str(INFINITY),
        }
    }
}

impl<'de> Deserialize<'de> for ExtendedMotivic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match ExtendedRepr::deserialize(d)? {
            ExtendedRepr::Finite(x) => Ok(ExtendedMotivic::Finite(x)),
            ExtendedRepr::Word(w) if w == INFINITY => Ok(ExtendedMotivic::Infinite),
            ExtendedRepr::Word(w) => Err(de::Error::custom(format!("unexpected value {w:?}"))),
        }
    }
}

/// Exact rendering `a/b` (or `a` for integers).
pub fn rational_to_string(x: &BigRational) -> String {
    x.to_string()
}

/// Parses `a/b` or `a`.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let parsed = match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|e| e.to_string())?;
            let d = BigInt::from_str(d.trim()).map_err(|e| e.to_string())?;
            if d == BigInt::from(0) {
                return Err(format!("zero denominator in {s:?}"));
            }
            BigRational::new(n, d)
        }
        None => BigRational::from_integer(BigInt::from_str(s).map_err(|e| e.to_string())?),
    };
    Ok(parsed)
}

impl Serialize for EulerValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            EulerValue::Finite(x) => s.serialize_str(&rational_to_string(x)),
            EulerValue::Infinite => s.serialize_str(INFINITY),
        }
    }
}

impl<'de> Deserialize<'de> for EulerValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        if s == INFINITY {
            return Ok(EulerValue::Infinite);
        }
        parse_rational(&s)
            .map(EulerValue::Finite)
            .map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_wire_format() {
        let x = MotivicElement::from_terms([(Exponent::new(4, 3), 1), (Exponent::new(0, 1), -2)]);
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, "[[4,3,1],[0,1,-2]]");
        let back: MotivicElement = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn big_coefficients_survive() {
        let big = BigInt::from(i64::MAX) * BigInt::from(1000);
        let x = MotivicElement::monomial(Exponent::from_integer(1), big.clone());
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, format!("[[1,1,\"{big}\"]]"));
        assert_eq!(serde_json::from_str::<MotivicElement>(&json).unwrap(), x);
    }

    #[test]
    fn quotient_and_infinity() {
        let q = MotivicRational::new(
            MotivicElement::one(),
            MotivicElement::from_int_poly(&[1, 1]),
        )
        .unwrap();
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, r#"{"num":[[0,1,1]],"den":[[1,1,1],[0,1,1]]}"#);
        // non-canonical input is reduced on the way in
        let unreduced = r#"{"num":[[1,1,2],[0,1,-2]],"den":[[2,1,2],[0,1,-2]]}"#;
        assert_eq!(
            serde_json::from_str::<MotivicRational>(unreduced).unwrap(),
            q
        );
        let inf = serde_json::to_string(&ExtendedMotivic::Infinite).unwrap();
        assert_eq!(inf, "\"infinity\"");
        assert_eq!(
            serde_json::from_str::<ExtendedMotivic>(&inf).unwrap(),
            ExtendedMotivic::Infinite
        );
        assert!(serde_json::from_str::<MotivicRational>(r#"{"num":[],"den":[]}"#).is_err());
    }

    #[test]
    fn rationals_as_strings() {
        let e = EulerValue::Finite(BigRational::new(3.into(), 2.into()));
        assert_eq!(serde_json::to_string(&e).unwrap(), "\"3/2\"");
        assert_eq!(
            parse_rational(" -6/4 ").unwrap(),
            BigRational::new((-3).into(), 2.into())
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
