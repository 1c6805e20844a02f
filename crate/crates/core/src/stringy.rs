//! Stringy motifs from simple normal crossing resolution data.
//!
//! Inputs are the discrepancies `a_i` of the exceptional divisors and the
//! classes of the locally closed strata `E_J° ∩ f⁻¹(W)`. The classes are
//! supplied by the caller; nothing here constructs a resolution.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::motivic_ring::{
    poincare_realize, Exponent, MotivicElement, MotivicRational, PoincareFunction, RingError,
};

/// Largest supported number of exceptional divisors.
pub const MAX_DIVISORS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StringyError {
    #[error("discrepancy of divisor {id:?} is {a}, but log terminal requires a > -1")]
    InvalidDiscrepancy { id: String, a: Exponent },
    #[error("divisor {id:?} is not crepant (a = {a})")]
    NotCrepant { id: String, a: Exponent },
    #[error("unknown divisor id {0:?}")]
    UnknownDivisor(String),
    #[error("divisor id {0:?} declared twice")]
    DuplicateDivisor(String),
    #[error("{0} divisors exceed the supported maximum of {MAX_DIVISORS}")]
    TooManyDivisors(usize),
    #[error("connected component counts are missing")]
    MissingPi0,
    #[error("connected component count missing for stratum {0}")]
    IncompletePi0(String),
    #[error("invalid discrepancy {num}/{den}")]
    BadRational { num: i64, den: i64 },
    #[error("invalid stratum data: {0}")]
    Json(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// A subset `J` of the divisor index set, as a bitmask over declaration
/// order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StratumKey(u32);

impl StratumKey {
    pub const EMPTY: StratumKey = StratumKey(0);

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        StratumKey(indices.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn is_subset_of(self, other: StratumKey) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = StratumKey> {
        let full = self.0;
        let mut next = Some(full);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 {
                None
            } else {
                Some((cur - 1) & full)
            };
            Some(StratumKey(cur))
        })
    }
}

impl fmt::Display for StratumKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.indices().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", ids.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divisor {
    pub id: String,
    pub discrepancy: Exponent,
}

impl Divisor {
    pub fn new(id: impl Into<String>, discrepancy: Exponent) -> Self {
        Divisor {
            id: id.into(),
            discrepancy,
        }
    }
}

/// Class-valued data on subsets of exceptional divisors. Subsets not
/// present carry the zero class.
pub type StrataMap = BTreeMap<StratumKey, MotivicElement>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SncStrataData {
    dimension: u32,
    divisors: Vec<Divisor>,
    strata: StrataMap,
    pi0: Option<BTreeMap<StratumKey, u64>>,
}

impl SncStrataData {
    pub fn new(dimension: u32, divisors: Vec<Divisor>) -> Result<Self, StringyError> {
        if divisors.len() > MAX_DIVISORS {
            return Err(StringyError::TooManyDivisors(divisors.len()));
        }
        for (i, d) in divisors.iter().enumerate() {
            if divisors[..i].iter().any(|e| e.id == d.id) {
                return Err(StringyError::DuplicateDivisor(d.id.clone()));
            }
            if d.discrepancy <= -Exponent::from_integer(1) {
                return Err(StringyError::InvalidDiscrepancy {
                    id: d.id.clone(),
                    a: d.discrepancy,
                });
            }
        }
        Ok(SncStrataData {
            dimension,
            divisors,
            strata: StrataMap::new(),
            pi0: None,
        })
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn divisors(&self) -> &[Divisor] {
        &self.divisors
    }

    pub fn strata(&self) -> &StrataMap {
        &self.strata
    }

    pub fn pi0(&self) -> Option<&BTreeMap<StratumKey, u64>> {
        self.pi0.as_ref()
    }

    /// Resolves divisor ids to a subset key.
    pub fn key<S: AsRef<str>>(&self, ids: &[S]) -> Result<StratumKey, StringyError> {
        let indices = ids
            .iter()
            .map(|id| {
                let id = id.as_ref();
                self.divisors
                    .iter()
                    .position(|d| d.id == id)
                    .ok_or_else(|| StringyError::UnknownDivisor(id.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(StratumKey::from_indices(indices))
    }

    /// Adds `class` to the open stratum over `ids`; repeated subsets sum.
    pub fn add_stratum<S: AsRef<str>>(
        &mut self,
        ids: &[S],
        class: MotivicElement,
    ) -> Result<&mut Self, StringyError> {
        let key = self.key(ids)?;
        self.add_stratum_key(key, class);
        Ok(self)
    }

    pub fn add_stratum_key(&mut self, key: StratumKey, class: MotivicElement) {
        let entry = self.strata.entry(key).or_default();
        *entry = &*entry + &class;
    }

    pub fn set_pi0<S: AsRef<str>>(
        &mut self,
        ids: &[S],
        count: u64,
    ) -> Result<&mut Self, StringyError> {
        let key = self.key(ids)?;
        self.pi0
            .get_or_insert_with(BTreeMap::new)
            .insert(key, count);
        Ok(self)
    }

    pub fn set_pi0_key(&mut self, key: StratumKey, count: u64) {
        self.pi0
            .get_or_insert_with(BTreeMap::new)
            .insert(key, count);
    }

    pub fn is_crepant(&self) -> bool {
        self.divisors.iter().all(|d| d.discrepancy.is_zero())
    }

    /// Human-readable name of a subset, using divisor ids.
    pub fn key_name(&self, key: StratumKey) -> String {
        let ids: Vec<&str> = key
            .indices()
            .map(|i| self.divisors[i].id.as_str())
            .collect();
        format!("{{{}}}", ids.join(","))
    }

    fn batyrev_factor(&self, i: usize) -> MotivicRational {
        let a = self.divisors[i].discrepancy;
        let num = &MotivicElement::lefschetz() - &MotivicElement::one();
        let den = &MotivicElement::monomial(a + 1, 1) - &MotivicElement::one();
        MotivicRational::new(num, den).expect("a > -1 keeps L^(a+1) - 1 nonzero")
    }
}

/// `sum_J [E_J° ∩ f⁻¹(W)] prod_{j in J} (L - 1)/(L^(a_j + 1) - 1)`.
pub fn stringy_motif(data: &SncStrataData) -> MotivicRational {
    let factors: Vec<MotivicRational> = (0..data.divisors.len())
        .map(|i| data.batyrev_factor(i))
        .collect();
    data.strata
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(key, class)| {
            key.indices()
                .fold(MotivicRational::from(class.clone()), |acc, i| {
                    &acc * &factors[i]
                })
        })
        .sum()
}

/// `[f⁻¹(W)] = sum_J [E_J° ∩ f⁻¹(W)]`, the stringy motif of a crepant
/// resolution.
pub fn crepant_total_class(data: &SncStrataData) -> Result<MotivicElement, StringyError> {
    if let Some(d) = data.divisors.iter().find(|d| !d.discrepancy.is_zero()) {
        return Err(StringyError::NotCrepant {
            id: d.id.clone(),
            a: d.discrepancy,
        });
    }
    Ok(data.strata.values().cloned().sum())
}

/// Closed strata from open ones: `closed(J) = sum_{J ⊆ J'} open(J')`.
///
/// The result covers every subset of a nonzero open stratum. The empty set
/// (the whole of `f⁻¹(W)`) is only reported when the input has an entry
/// for it.
pub fn closed_from_open(open: &StrataMap) -> StrataMap {
    let mut closed = StrataMap::new();
    for (key, class) in open.iter().filter(|(_, c)| !c.is_zero()) {
        for sub in key.subsets() {
            let entry = closed.entry(sub).or_default();
            *entry = &*entry + class;
        }
    }
    if !open.contains_key(&StratumKey::EMPTY) {
        closed.remove(&StratumKey::EMPTY);
    }
    closed.retain(|_, c| !c.is_zero());
    closed
}

/// Open strata from closed ones:
/// `open(J) = sum_{J ⊆ J'} (-1)^(#J' - #J) closed(J')`.
pub fn open_from_closed(closed: &StrataMap) -> StrataMap {
    let mut open = StrataMap::new();
    for (key, class) in closed.iter().filter(|(_, c)| !c.is_zero()) {
        for sub in key.subsets() {
            if sub.is_empty() && !closed.contains_key(&StratumKey::EMPTY) {
                continue;
            }
            let signed = if (key.len() - sub.len()) % 2 == 0 {
                class.clone()
            } else {
                -class
            };
            let entry = open.entry(sub).or_default();
            *entry = &*entry + &signed;
        }
    }
    open.retain(|_, c| !c.is_zero());
    open
}

impl SncStrataData {
    pub fn closed_strata(&self) -> StrataMap {
        closed_from_open(&self.strata)
    }
}

/// `P_st = P(M_st)`.
pub fn stringy_poincare(data: &SncStrataData) -> PoincareFunction {
    poincare_realize(&stringy_motif(data))
}

/// Euler characteristic of the dual complex read off as `P_st` at `T = 0`.
/// The hypotheses making this equal to `χ(Γ(E))` (proper `R` whose preimage
/// has the same dual complex) are the caller's responsibility.
pub fn dual_complex_euler_from_pst(data: &SncStrataData) -> Result<BigRational, StringyError> {
    Ok(stringy_poincare(data).eval_at_zero()?)
}

/// `sum_{∅ ≠ J} (-1)^(#J - 1) #π₀(F_J)`.
pub fn dual_complex_euler_direct(data: &SncStrataData) -> Result<i64, StringyError> {
    let pi0 = data.pi0.as_ref().ok_or(StringyError::MissingPi0)?;
    for (key, _) in data.closed_strata().iter().filter(|(k, _)| !k.is_empty()) {
        if !pi0.contains_key(key) {
            return Err(StringyError::IncompletePi0(data.key_name(*key)));
        }
    }
    Ok(pi0
        .iter()
        .filter(|(k, _)| !k.is_empty())
        .map(|(k, &n)| {
            if k.len() % 2 == 1 {
                n as i64
            } else {
                -(n as i64)
            }
        })
        .sum())
}

/// Poincaré duality of `P_st` in the data's dimension; expected when the
/// variety is proper and `W = X`.
pub fn duality_report(data: &SncStrataData) -> bool {
    stringy_poincare(data).satisfies_duality(data.dimension)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChiValue {
    Value(BigRational),
    Pole,
}

impl Serialize for ChiValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ChiValue::Value(x) => s.serialize_str(&x.to_string()),
            ChiValue::Pole => s.serialize_str("pole"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityResult {
    pub d: u32,
    pub holds: bool,
}

/// Everything computed from one set of resolution data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StringyResult {
    pub motif: MotivicRational,
    pub poincare: PoincareFunction,
    pub crepant: bool,
    pub duality: Option<DualityResult>,
    pub chi_from_pst: Option<ChiValue>,
    pub chi_direct: Option<i64>,
}

/// Runs the stringy computations; duality is checked in dimension `d` when
/// requested and Euler characteristics are computed when `with_chi` is set
/// (the direct one only if component counts were supplied).
pub fn analyze(
    data: &SncStrataData,
    check_duality: Option<u32>,
    with_chi: bool,
) -> Result<StringyResult, StringyError> {
    let motif = stringy_motif(data);
    let poincare = poincare_realize(&motif);
    let crepant = data.is_crepant();
    let duality = check_duality.map(|d| DualityResult {
        d,
        holds: poincare.satisfies_duality(d),
    });
    let (chi_from_pst, chi_direct) = if with_chi {
        let pst = match poincare.eval_at_zero() {
            Ok(x) => ChiValue::Value(x),
            Err(_) => ChiValue::Pole,
        };
        let direct = match data.pi0 {
            Some(_) => Some(dual_complex_euler_direct(data)?),
            None => None,
        };
        (Some(pst), direct)
    } else {
        (None, None)
    };
    Ok(StringyResult {
        motif,
        poincare,
        crepant,
        duality,
        chi_from_pst,
        chi_direct,
    })
}

#[derive(Serialize, Deserialize)]
struct DivisorRepr {
    id: String,
    a: (i64, i64),
}

#[derive(Serialize, Deserialize)]
struct StratumRepr {
    #[serde(rename = "J")]
    j: Vec<String>,
    class: MotivicElement,
}

#[derive(Serialize, Deserialize)]
struct Pi0Repr {
    #[serde(rename = "J")]
    j: Vec<String>,
    count: u64,
}

#[derive(Serialize, Deserialize)]
struct DataRepr {
    dimension: u32,
    divisors: Vec<DivisorRepr>,
    #[serde(default)]
    strata: Vec<StratumRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pi0: Option<Vec<Pi0Repr>>,
}

impl SncStrataData {
    /// Parses the JSON stratum schema:
    /// `{"dimension", "divisors": [{"id", "a": [num, den]}],
    ///   "strata": [{"J": [ids], "class": [[num, den, coeff], ...]}],
    ///   "pi0": [{"J": [ids], "count"}]}`.
    pub fn from_json(input: &str) -> Result<Self, StringyError> {
        let repr: DataRepr =
            serde_json::from_str(input).map_err(|e| StringyError::Json(e.to_string()))?;
        let divisors = repr
            .divisors
            .into_iter()
            .map(|d| {
                let (num, den) = d.a;
                if den == 0 {
                    return Err(StringyError::BadRational { num, den });
                }
                Ok(Divisor::new(d.id, Exponent::new(num, den)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut data = SncStrataData::new(repr.dimension, divisors)?;
        for s in repr.strata {
            data.add_stratum(&s.j, s.class)?;
        }
        if let Some(pi0) = repr.pi0 {
            data.pi0 = Some(BTreeMap::new());
            for entry in pi0 {
                data.set_pi0(&entry.j, entry.count)?;
            }
        }
        Ok(data)
    }

    pub fn to_json(&self) -> String {
        let ids = |key: StratumKey| -> Vec<String> {
            key.indices().map(|i| self.divisors[i].id.clone()).collect()
        };
        let repr = DataRepr {
            dimension: self.dimension,
            divisors: self
                .divisors
                .iter()
                .map(|d| DivisorRepr {
                    id: d.id.clone(),
                    a: (*d.discrepancy.numer(), *d.discrepancy.denom()),
                })
                .collect(),
            strata: self
                .strata
                .iter()
                .map(|(k, c)| StratumRepr {
                    j: ids(*k),
                    class: c.clone(),
                })
                .collect(),
            pi0: self.pi0.as_ref().map(|m| {
                m.iter()
                    .map(|(k, &count)| Pi0Repr { j: ids(*k), count })
                    .collect()
            }),
        };
        serde_json::to_string(&repr).expect("stratum data serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex(n: i64, d: i64) -> Exponent {
        Exponent::new(n, d)
    }

    fn poly(c: &[i64]) -> MotivicElement {
        MotivicElement::from_int_poly(c)
    }

    /// Minimal resolution of `A^2/(Z/m)` acting by `(z, z)`: a single
    /// exceptional curve `P^1` with self-intersection `-m` and discrepancy
    /// `2/m - 1`; the fiber over the origin is the curve itself.
    fn cyclic_surface(m: i64) -> SncStrataData {
        let mut data = SncStrataData::new(2, vec![Divisor::new("E", ex(2 - m, m))]).unwrap();
        data.add_stratum(&["E"], poly(&[1, 1])).unwrap();
        data
    }

    #[test]
    fn a1_and_one_third() {
        assert_eq!(stringy_motif(&cyclic_surface(2)), poly(&[1, 1]).into());
        let expected = MotivicElement::from_terms([(ex(0, 1), 1), (ex(2, 3), 1), (ex(4, 3), 1)]);
        assert_eq!(stringy_motif(&cyclic_surface(3)), expected.into());
    }

    #[test]
    fn crepant_specialization() {
        let mut data = SncStrataData::new(
            2,
            vec![Divisor::new("1", ex(0, 1)), Divisor::new("2", ex(0, 1))],
        )
        .unwrap();
        data.add_stratum(&["1"], poly(&[0, 1]))
            .unwrap()
            .add_stratum(&["2"], poly(&[0, 1]))
            .unwrap()
            .add_stratum(&["1", "2"], poly(&[1]))
            .unwrap();
        let total = crepant_total_class(&data).unwrap();
        assert_eq!(total, poly(&[1, 2]));
        assert_eq!(stringy_motif(&data), total.into());
        let empty = SncStrataData::new(2, vec![Divisor::new("1", ex(0, 1))]).unwrap();
        assert_eq!(crepant_total_class(&empty), Ok(MotivicElement::zero()));
        assert!(matches!(
            crepant_total_class(&cyclic_surface(3)),
            Err(StringyError::NotCrepant { .. })
        ));
    }

    #[test]
    fn validation() {
        assert!(matches!(
            SncStrataData::new(2, vec![Divisor::new("E", ex(-1, 1))]),
            Err(StringyError::InvalidDiscrepancy { .. })
        ));
        assert!(matches!(
            SncStrataData::new(
                2,
                vec![Divisor::new("E", ex(0, 1)), Divisor::new("E", ex(1, 1))]
            ),
            Err(StringyError::DuplicateDivisor(_))
        ));
        let many = (0..21)
            .map(|i| Divisor::new(i.to_string(), ex(0, 1)))
            .collect();
        assert_eq!(
            SncStrataData::new(2, many),
            Err(StringyError::TooManyDivisors(21))
        );
        let mut data = cyclic_surface(2);
        assert!(matches!(
            data.add_stratum(&["F"], poly(&[1])),
            Err(StringyError::UnknownDivisor(_))
        ));
    }

    #[test]
    fn closed_strata_examples() {
        let (a, b) = (poly(&[3]), poly(&[0, 1]));
        let open: StrataMap = [
            (StratumKey::EMPTY, a.clone()),
            (StratumKey::from_indices([0]), b.clone()),
        ]
        .into();
        let closed = closed_from_open(&open);
        assert_eq!(closed[&StratumKey::EMPTY], &a + &b);
        assert_eq!(closed[&StratumKey::from_indices([0])], b);

        let (x, y, z) = (poly(&[1]), poly(&[0, 1]), poly(&[2, 0, 1]));
        let k1 = StratumKey::from_indices([0]);
        let k2 = StratumKey::from_indices([1]);
        let k12 = StratumKey::from_indices([0, 1]);
        let open: StrataMap = [(k1, x.clone()), (k2, y.clone()), (k12, z.clone())].into();
        let closed = closed_from_open(&open);
        let expected: StrataMap = [(k1, &x + &z), (k2, &y + &z), (k12, z)].into();
        assert_eq!(closed, expected);
        assert_eq!(open_from_closed(&closed), open);

        let zeros: StrataMap = [(k1, MotivicElement::zero())].into();
        assert!(closed_from_open(&zeros).is_empty());
    }

    #[test]
    fn poincare_examples() {
        let p = stringy_poincare(&cyclic_surface(2));
        assert_eq!(p.to_string(), "T^2 + 1");
        let p = stringy_poincare(&cyclic_surface(3));
        assert_eq!(p.to_string(), "T^(8/3) + T^(4/3) + 1");
    }

    #[test]
    fn euler_examples() {
        let mut a1 = cyclic_surface(2);
        a1.set_pi0(&["E"], 1).unwrap();
        assert_eq!(
            dual_complex_euler_from_pst(&a1),
            Ok(BigRational::from_integer(1.into()))
        );
        assert_eq!(dual_complex_euler_direct(&a1), Ok(1));

        // chain of two P^1 meeting in a point
        let mut chain = SncStrataData::new(
            2,
            vec![Divisor::new("1", ex(-1, 3)), Divisor::new("2", ex(-1, 2))],
        )
        .unwrap();
        chain
            .add_stratum(&["1"], poly(&[0, 1]))
            .unwrap()
            .add_stratum(&["2"], poly(&[0, 1]))
            .unwrap()
            .add_stratum(&["1", "2"], poly(&[1]))
            .unwrap();
        assert_eq!(
            dual_complex_euler_from_pst(&chain),
            Ok(BigRational::from_integer(1.into()))
        );
        assert_eq!(
            dual_complex_euler_direct(&chain),
            Err(StringyError::MissingPi0)
        );
        chain
            .set_pi0(&["1"], 1)
            .unwrap()
            .set_pi0(&["2"], 1)
            .unwrap();
        assert!(matches!(
            dual_complex_euler_direct(&chain),
            Err(StringyError::IncompletePi0(_))
        ));
        chain.set_pi0(&["1", "2"], 1).unwrap();
        assert_eq!(dual_complex_euler_direct(&chain), Ok(1));

        let mut disjoint = SncStrataData::new(
            2,
            vec![Divisor::new("1", ex(0, 1)), Divisor::new("2", ex(0, 1))],
        )
        .unwrap();
        disjoint
            .set_pi0(&["1"], 1)
            .unwrap()
            .set_pi0(&["2"], 1)
            .unwrap()
            .set_pi0(&["1", "2"], 0)
            .unwrap();
        assert_eq!(dual_complex_euler_direct(&disjoint), Ok(2));
    }

    #[test]
    fn duality_examples() {
        let mut curve = SncStrataData::new(1, vec![]).unwrap();
        curve.add_stratum::<&str>(&[], poly(&[1, 1])).unwrap();
        assert!(duality_report(&curve));
        assert!(!duality_report(&cyclic_surface(2)));
        let mut surface = SncStrataData::new(2, vec![]).unwrap();
        surface.add_stratum::<&str>(&[], poly(&[1, 2, 1])).unwrap();
        assert!(duality_report(&surface));
    }

    #[test]
    fn json_schema() {
        let input = r#"{
            "dimension": 2,
            "divisors": [{"id": "E", "a": [-1, 3]}],
            "strata": [{"J": ["E"], "class": [[1, 1, 1], [0, 1, 1]]}],
            "pi0": [{"J": ["E"], "count": 1}]
        }"#;
        let data = SncStrataData::from_json(input).unwrap();
        let mut expected = cyclic_surface(3);
        expected.set_pi0(&["E"], 1).unwrap();
        assert_eq!(data, expected);
        assert_eq!(SncStrataData::from_json(&data.to_json()).unwrap(), data);
        assert!(matches!(
            SncStrataData::from_json(r#"{"dimension": 2, "divisors": [{"id": "E", "a": [1, 0]}]}"#),
            Err(StringyError::BadRational { .. })
        ));
        assert!(matches!(
            SncStrataData::from_json("{"),
            Err(StringyError::Json(_))
        ));
    }

    #[test]
    fn analysis_bundle() {
        let mut data = cyclic_surface(2);
        data.set_pi0(&["E"], 1).unwrap();
        let r = analyze(&data, Some(2), true).unwrap();
        assert!(r.crepant);
        assert_eq!(r.duality, Some(DualityResult { d: 2, holds: false }));
        assert_eq!(
            r.chi_from_pst,
            Some(ChiValue::Value(BigRational::from_integer(1.into())))
        );
        assert_eq!(r.chi_direct, Some(1));
        let r = analyze(&cyclic_surface(3), None, false).unwrap();
        assert!(!r.crepant);
        assert_eq!(r.chi_from_pst, None);
    }
}
