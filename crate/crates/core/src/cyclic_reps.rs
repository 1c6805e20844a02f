//! Cyclic group representations and the closed-form invariants attached
//! to them: ages, weight functions, motivic masses, the invariant `D_V`,
//! the Jordan-block lift to characteristic zero, and necessary conditions
//! for crepant resolutions.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::motivic_ring::{
    euler_realize, poincare_realize, EulerValue, Exponent, ExtendedMotivic, MotivicElement,
    MotivicRational,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("group order must be positive")]
    ZeroOrder,
    #[error("a representation needs at least one weight or block")]
    Empty,
    #[error("weight {weight} is outside 0..{order}")]
    WeightOutOfRange { weight: u32, order: u32 },
    #[error("weights {weights:?} do not generate a faithful action of Z/{order}")]
    NotFaithful { order: u32, weights: Vec<u32> },
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("Jordan block size {size} is outside 1..={p}")]
    BlockOutOfRange { size: u32, p: u32 },
    #[error("group element index {index} is outside {lo}..={hi}")]
    IndexOutOfRange { index: u32, lo: u32, hi: u32 },
    #[error("the representation contains a reflection")]
    Reflection,
    #[error("invalid valuation data: {0}")]
    InvalidValuationData(&'static str),
    #[error("cannot parse representation {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A diagonal action of `Z/m` with generator `diag(z^a_1, ..., z^a_d)`
/// for a primitive `m`-th root of unity `z` (tame case).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TameCyclicRep {
    order: u32,
    weights: Vec<u32>,
}

impl TameCyclicRep {
    pub fn new(order: u32, weights: Vec<u32>) -> Result<Self, RepError> {
        if order == 0 {
            return Err(RepError::ZeroOrder);
        }
        if weights.is_empty() {
            return Err(RepError::Empty);
        }
        if let Some(&weight) = weights.iter().find(|&&a| a >= order) {
            return Err(RepError::WeightOutOfRange { weight, order });
        }
        let g = weights.iter().fold(order, |g, &a| g.gcd(&a));
        if g != 1 {
            return Err(RepError::NotFaithful { order, weights });
        }
        Ok(TameCyclicRep { order, weights })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn dimension(&self) -> usize {
        self.weights.len()
    }

    /// Residues `s * a_i mod m` for the element `g^s`.
    fn residues(&self, s: u32) -> impl Iterator<Item = u64> + '_ {
        let m = u64::from(self.order);
        self.weights
            .iter()
            .map(move |&a| (u64::from(s) * u64::from(a)) % m)
    }

    /// Direct sum with another representation of the same group.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, RepError> {
        let mut weights = self.weights.clone();
        weights.extend_from_slice(&other.weights);
        TameCyclicRep::new(self.order, weights)
    }

    pub fn has_reflection(&self) -> bool {
        (1..self.order).any(|s| self.residues(s).filter(|&r| r != 0).count() == 1)
    }
}

impl fmt::Display for TameCyclicRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.order, join(&self.weights))
    }
}

/// A representation of `Z/p` in characteristic `p`, given by the sizes
/// of the Jordan blocks of a generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WildCyclicRep {
    p: u32,
    blocks: Vec<u32>,
}

impl WildCyclicRep {
    pub fn new(p: u32, blocks: Vec<u32>) -> Result<Self, RepError> {
        if !is_prime(p) {
            return Err(RepError::NotPrime(p));
        }
        if blocks.is_empty() {
            return Err(RepError::Empty);
        }
        if let Some(&size) = blocks.iter().find(|&&d| d == 0 || d > p) {
            return Err(RepError::BlockOutOfRange { size, p });
        }
        Ok(WildCyclicRep { p, blocks })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn blocks(&self) -> &[u32] {
        &self.blocks
    }

    pub fn dimension(&self) -> u32 {
        self.blocks.iter().sum()
    }

    pub fn num_blocks(&self) -> u32 {
        self.blocks.len() as u32
    }

    /// Every block has size one, so the generator acts as the identity.
    pub fn is_trivial(&self) -> bool {
        self.blocks.iter().all(|&d| d == 1)
    }

    /// The generator fixes a hyperplane. Every nontrivial power of a
    /// unipotent generator has the same fixed space (of dimension equal to
    /// the number of blocks), so this is `d - l = 1`.
    pub fn has_reflection(&self) -> bool {
        self.dimension() - self.num_blocks() == 1
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self, RepError> {
        let mut blocks = self.blocks.clone();
        blocks.extend_from_slice(&other.blocks);
        WildCyclicRep::new(self.p, blocks)
    }

    fn require_no_reflection(&self) -> Result<(), RepError> {
        if self.has_reflection() {
            Err(RepError::Reflection)
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for WildCyclicRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.p, join(&self.blocks))
    }
}

fn join(xs: &[u32]) -> String {
    xs.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn parse_rep(input: &str) -> Result<(u32, Vec<u32>), RepError> {
    let err = |reason: &str| RepError::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    let (head, tail) = input
        .split_once(':')
        .ok_or_else(|| err("expected <order>:<list>"))?;
    let order = head
        .trim()
        .parse::<u32>()
        .map_err(|e| err(&e.to_string()))?;
    let list = tail
        .split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|e| err(&e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((order, list))
}

impl FromStr for TameCyclicRep {
    type Err = RepError;

    /// Parses `m:a_1,...,a_d`, e.g. `3:1,2`.
    fn from_str(s: &str) -> Result<Self, RepError> {
        let (m, weights) = parse_rep(s)?;
        TameCyclicRep::new(m, weights)
    }
}

impl FromStr for WildCyclicRep {
    type Err = RepError;

    /// Parses `p:d_1,...,d_l`, e.g. `3:2,2,2`.
    fn from_str(s: &str) -> Result<Self, RepError> {
        let (p, blocks) = parse_rep(s)?;
        WildCyclicRep::new(p, blocks)
    }
}

/// Either kind of cyclic representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CyclicRep {
    Tame(TameCyclicRep),
    Wild(WildCyclicRep),
}

impl CyclicRep {
    pub fn has_reflection(&self) -> bool {
        match self {
            CyclicRep::Tame(r) => r.has_reflection(),
            CyclicRep::Wild(r) => r.has_reflection(),
        }
    }
}

pub fn has_reflection(rep: &CyclicRep) -> bool {
    rep.has_reflection()
}

/// `age(g^s) = (1/m) sum_i (s a_i mod m)`.
pub fn age(rep: &TameCyclicRep, s: u32) -> Result<Exponent, RepError> {
    if s >= rep.order {
        return Err(RepError::IndexOutOfRange {
            index: s,
            lo: 0,
            hi: rep.order - 1,
        });
    }
    let total: u64 = rep.residues(s).sum();
    Ok(Exponent::new(total as i64, i64::from(rep.order)))
}

/// `sum_{g in G} L^(age g)`.
pub fn tame_mass(rep: &TameCyclicRep) -> MotivicElement {
    MotivicElement::from_terms((0..rep.order).map(|s| (age(rep, s).expect("s < m"), 1)))
}

/// Weight of the tame cover sector `s`: `d - (1/m) sum a_i'(s)` with
/// `a_i'(s) = s a_i mod m` taken in `(0, m]`.
pub fn tame_weight(rep: &TameCyclicRep, s: u32) -> Result<Exponent, RepError> {
    if s == 0 || s >= rep.order {
        return Err(RepError::IndexOutOfRange {
            index: s,
            lo: 1,
            hi: rep.order.saturating_sub(1),
        });
    }
    let m = u64::from(rep.order);
    let total: u64 = rep.residues(s).map(|r| if r == 0 { m } else { r }).sum();
    Ok(Exponent::from_integer(rep.dimension() as i64) - Exponent::new(total as i64, m as i64))
}

fn floor_sum(block: u32, j: u32, p: u32) -> i64 {
    (1..block).map(|t| i64::from(t * j / p)).sum()
}

/// Weight of a wild `Z/p` cover with ramification jump `j`:
/// `-sum_i sum_{t=1}^{d_i - 1} floor(t j / p)`.
pub fn wild_weight(rep: &WildCyclicRep, j: u32) -> Result<i64, RepError> {
    if j == 0 || j >= rep.p {
        return Err(RepError::IndexOutOfRange {
            index: j,
            lo: 1,
            hi: rep.p - 1,
        });
    }
    Ok(-rep
        .blocks
        .iter()
        .map(|&d| floor_sum(d, j, rep.p))
        .sum::<i64>())
}

/// `D_V = sum_i d_i (d_i - 1) / 2`.
pub fn d_invariant(rep: &WildCyclicRep) -> u32 {
    rep.blocks.iter().map(|&d| d * (d - 1) / 2).sum()
}

/// Motivic mass of a wild `Z/p` representation without reflections:
/// divergent when `D_V < p`, otherwise
/// `1 + (L - 1) sum_{s=1}^{p-1} L^(s + w(s)) / (L - L^(p - D_V))`.
pub fn wild_mass(rep: &WildCyclicRep) -> Result<ExtendedMotivic, RepError> {
    rep.require_no_reflection()?;
    let p = rep.p;
    let dv = d_invariant(rep);
    if dv < p {
        return Ok(ExtendedMotivic::Infinite);
    }
    let sectors = MotivicElement::from_terms((1..p).map(|s| {
        let w = wild_weight(rep, s).expect("1 <= s < p");
        (Exponent::from_integer(i64::from(s) + w), 1)
    }));
    let l = MotivicElement::lefschetz();
    let num = &(&l - &MotivicElement::one()) * &sectors;
    let den = &l - &MotivicElement::lefschetz_power(i64::from(p) - i64::from(dv), 1);
    let fraction =
        MotivicRational::new(num, den).expect("D_V >= p > 1 keeps L - L^(p - D_V) nonzero");
    Ok((&MotivicRational::one() + &fraction).into())
}

/// Euler characteristic of the mass in closed form: `m` in the tame case,
/// `1 + (p - 1)/(D_V - p + 1)` or divergent in the wild case.
pub fn euler_mass_closed_form(rep: &CyclicRep) -> Result<EulerValue, RepError> {
    match rep {
        CyclicRep::Tame(t) => Ok(EulerValue::Finite(BigRational::from_integer(
            t.order.into(),
        ))),
        CyclicRep::Wild(w) => {
            w.require_no_reflection()?;
            let dv = i64::from(d_invariant(w));
            let p = i64::from(w.p);
            if dv < p {
                return Ok(EulerValue::Infinite);
            }
            Ok(EulerValue::Finite(
                BigRational::one() + BigRational::new((p - 1).into(), (dv - p + 1).into()),
            ))
        }
    }
}

/// Lift of a wild representation over `Z[x]/(x^p - 1)`: each Jordan block
/// of size `d_i` becomes an upper triangular matrix with diagonal
/// `1, x, ..., x^(d_i - 1)`, so its reductions away from `p` are diagonal
/// with weights `0, ..., d_i - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LiftedRep {
    p: u32,
    block_weight_sets: Vec<Vec<u32>>,
}

impl LiftedRep {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn block_weight_sets(&self) -> &[Vec<u32>] {
        &self.block_weight_sets
    }

    /// All eigenvalue exponents, block by block.
    pub fn weights(&self) -> Vec<u32> {
        self.block_weight_sets.iter().flatten().copied().collect()
    }

    /// The diagonal representation of `Z/p` obtained by reducing the lift
    /// to a characteristic other than `p`. Fails for the trivial lift,
    /// which is not faithful.
    pub fn reduction(&self) -> Result<TameCyclicRep, RepError> {
        TameCyclicRep::new(self.p, self.weights())
    }

    /// `alpha(s) = sum_i sum_{t=1}^{d_i - 1} {t s / p}`.
    pub fn alpha(&self, s: u32) -> Exponent {
        let p = i64::from(self.p);
        let total: i64 = self
            .block_weight_sets
            .iter()
            .flatten()
            .map(|&t| (i64::from(t) * i64::from(s)) % p)
            .sum();
        Exponent::new(total, p)
    }
}

pub fn lift_rep(rep: &WildCyclicRep) -> LiftedRep {
    LiftedRep {
        p: rep.p,
        block_weight_sets: rep
            .blocks
            .iter()
            .map(|&d| (0..d).map(|t| t % rep.p).collect())
            .collect(),
    }
}

/// `1 + sum_{s=1}^{p-1} L^(alpha(s))`.
pub fn lifted_tame_mass(lift: &LiftedRep) -> MotivicElement {
    MotivicElement::from_terms(
        std::iter::once((Exponent::zero(), 1)).chain((1..lift.p).map(|s| (lift.alpha(s), 1))),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum UniformityWitness {
    /// `D_V != p`, which rules out uniformity.
    DInvariant { d_v: u32, p: u32 },
    /// `alpha(s) != s + w(s)`.
    Alpha {
        s: u32,
        alpha: String,
        s_plus_weight: String,
    },
    /// The two masses differ.
    Mass {
        wild: ExtendedMotivic,
        lifted: MotivicElement,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniformityVerdict {
    pub uniform: bool,
    pub witness: Option<UniformityWitness>,
}

/// Checks that the wild mass agrees with the mass of the lift reduced away
/// from `p`, sector by sector.
pub fn uniformity_check(rep: &WildCyclicRep) -> Result<UniformityVerdict, RepError> {
    rep.require_no_reflection()?;
    let fail = |w| {
        Ok(UniformityVerdict {
            uniform: false,
            witness: Some(w),
        })
    };
    let dv = d_invariant(rep);
    if dv != rep.p {
        return fail(UniformityWitness::DInvariant { d_v: dv, p: rep.p });
    }
    let lift = lift_rep(rep);
    for s in 1..rep.p {
        let alpha = lift.alpha(s);
        let shifted = Exponent::from_integer(i64::from(s) + wild_weight(rep, s)?);
        if alpha != shifted {
            return fail(UniformityWitness::Alpha {
                s,
                alpha: alpha.to_string(),
                s_plus_weight: shifted.to_string(),
            });
        }
    }
    let wild = wild_mass(rep)?;
    let lifted = lifted_tame_mass(&lift);
    if wild != ExtendedMotivic::from(lifted.clone()) {
        return fail(UniformityWitness::Mass { wild, lifted });
    }
    Ok(UniformityVerdict {
        uniform: true,
        witness: None,
    })
}

/// `w(E) = d - v(det Q)/#G - dim V_0^(G')` for a cover whose determinant
/// valuation and fixed-space dimension are known.
pub fn weight_from_valuation_data(
    dimension: u32,
    group_order: u32,
    det_valuation: u64,
    fixed_dim: u32,
) -> Result<BigRational, RepError> {
    if group_order == 0 {
        return Err(RepError::InvalidValuationData(
            "group order must be positive",
        ));
    }
    if fixed_dim > dimension {
        return Err(RepError::InvalidValuationData(
            "fixed dimension exceeds dimension",
        ));
    }
    Ok(
        BigRational::from_integer((i64::from(dimension) - i64::from(fixed_dim)).into())
            - BigRational::new(det_valuation.into(), group_order.into()),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "reason", rename_all = "snake_case")]
pub enum CrepantVerdict {
    Admissible,
    Obstructed(String),
}

impl CrepantVerdict {
    pub fn is_admissible(&self) -> bool {
        matches!(self, CrepantVerdict::Admissible)
    }
}

/// Necessary conditions for a crepant resolution of `V/G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrepantReport {
    pub d_v: u32,
    pub d_v_equals_p: bool,
    /// Euler characteristic of the mass; `None` marks a pole at `L = 1`.
    pub euler: Option<EulerValue>,
    pub euler_is_integer: bool,
    pub pst_is_integral_polynomial: bool,
    pub verdict: CrepantVerdict,
}

pub fn crepant_conditions(rep: &WildCyclicRep) -> Result<CrepantReport, RepError> {
    let mass = wild_mass(rep)?;
    let d_v = d_invariant(rep);
    let d_v_equals_p = d_v == rep.p;
    let euler = euler_realize(&mass).ok();
    let euler_is_integer = euler.as_ref().is_some_and(EulerValue::is_integer);
    let pst_is_integral_polynomial = mass
        .finite()
        .is_some_and(|m| poincare_realize(m).is_integral_polynomial());

    let mut reasons = Vec::new();
    if !d_v_equals_p {
        reasons.push(format!("D_V = {d_v} differs from p = {}", rep.p));
    }
    if !euler_is_integer {
        match &euler {
            Some(e) => reasons.push(format!("Euler characteristic {e} is not an integer")),
            None => reasons.push("Euler characteristic has a pole".to_string()),
        }
    }
    if !pst_is_integral_polynomial {
        reasons.push("stringy Poincaré function is not a polynomial in T".to_string());
    }
    let verdict = if reasons.is_empty() {
        CrepantVerdict::Admissible
    } else {
        CrepantVerdict::Obstructed(reasons.join("; "))
    };
    Ok(CrepantReport {
        d_v,
        d_v_equals_p,
        euler,
        euler_is_integer,
        pst_is_integral_polynomial,
        verdict,
    })
}

/// All block decompositions `d_1 >= ... >= d_l` with `d_i <= p` and total
/// dimension at most `max_dim`, in lexicographic order by dimension then
/// blocks descending. Reflections and trivial actions are included.
pub fn block_decompositions(p: u32, max_dim: u32) -> Vec<Vec<u32>> {
    fn extend(max_part: u32, remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            prefix.push(part);
            extend(part, remaining - part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for dim in 1..=max_dim {
        extend(p, dim, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tame(m: u32, w: &[u32]) -> TameCyclicRep {
        TameCyclicRep::new(m, w.to_vec()).unwrap()
    }

    fn wild(p: u32, b: &[u32]) -> WildCyclicRep {
        WildCyclicRep::new(p, b.to_vec()).unwrap()
    }

    fn q(n: i64, d: i64) -> Exponent {
        Exponent::new(n, d)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn poly(c: &[i64]) -> MotivicElement {
        MotivicElement::from_int_poly(c)
    }

    #[test]
    fn validation() {
        assert_eq!(TameCyclicRep::new(0, vec![0]), Err(RepError::ZeroOrder));
        assert_eq!(TameCyclicRep::new(3, vec![]), Err(RepError::Empty));
        assert!(matches!(
            TameCyclicRep::new(3, vec![3]),
            Err(RepError::WeightOutOfRange { .. })
        ));
        assert!(matches!(
            TameCyclicRep::new(4, vec![2, 2]),
            Err(RepError::NotFaithful { .. })
        ));
        assert_eq!(WildCyclicRep::new(4, vec![2]), Err(RepError::NotPrime(4)));
        assert!(matches!(
            WildCyclicRep::new(3, vec![4]),
            Err(RepError::BlockOutOfRange { .. })
        ));
        assert!(matches!(
            WildCyclicRep::new(3, vec![0]),
            Err(RepError::BlockOutOfRange { .. })
        ));
        assert_eq!("3:1,2".parse::<TameCyclicRep>().unwrap(), tame(3, &[1, 2]));
        assert_eq!(
            "3:2,2,2".parse::<WildCyclicRep>().unwrap(),
            wild(3, &[2, 2, 2])
        );
        assert!(matches!(
            "3-2".parse::<WildCyclicRep>(),
            Err(RepError::Parse { .. })
        ));
        assert!(matches!(
            "3:2,x".parse::<WildCyclicRep>(),
            Err(RepError::Parse { .. })
        ));
        assert_eq!(wild(3, &[2, 2, 2]).to_string(), "3:2,2,2");
    }

    #[test]
    fn age_examples() {
        assert_eq!(age(&tame(3, &[1, 2]), 1), Ok(q(1, 1)));
        assert_eq!(age(&tame(7, &[1, 3, 5]), 0), Ok(q(0, 1)));
        assert_eq!(age(&tame(2, &[1, 1]), 1), Ok(q(1, 1)));
        assert!(age(&tame(2, &[1, 1]), 2).is_err());
    }

    #[test]
    fn tame_mass_examples() {
        assert_eq!(tame_mass(&tame(3, &[1, 2])), poly(&[1, 2]));
        assert_eq!(tame_mass(&tame(2, &[1, 1])), poly(&[1, 1]));
        assert_eq!(
            tame_mass(&tame(3, &[1, 1])),
            MotivicElement::from_terms([(q(0, 1), 1), (q(2, 3), 1), (q(4, 3), 1)])
        );
    }

    #[test]
    fn tame_weight_examples() {
        assert_eq!(tame_weight(&tame(3, &[1, 2]), 1), Ok(q(1, 1)));
        assert_eq!(tame_weight(&tame(2, &[1, 1]), 1), Ok(q(1, 1)));
        assert_eq!(tame_weight(&tame(4, &[1, 3]), 2), Ok(q(1, 1)));
        assert!(tame_weight(&tame(4, &[1, 3]), 0).is_err());
    }

    #[test]
    fn wild_weight_examples() {
        assert_eq!(wild_weight(&wild(3, &[3]), 2), Ok(-1));
        assert_eq!(wild_weight(&wild(3, &[3]), 1), Ok(0));
        for j in 1..7 {
            assert_eq!(wild_weight(&wild(7, &[1, 1, 1]), j), Ok(0));
        }
        assert!(wild_weight(&wild(3, &[3]), 3).is_err());
    }

    #[test]
    fn d_invariant_examples() {
        assert_eq!(d_invariant(&wild(3, &[2, 2, 2])), 3);
        assert_eq!(d_invariant(&wild(3, &[3])), 3);
        assert_eq!(d_invariant(&wild(5, &[1, 1, 1])), 0);
    }

    #[test]
    fn reflection_examples() {
        assert!(CyclicRep::Tame(tame(2, &[1, 0])).has_reflection());
        assert!(!tame(3, &[1, 2]).has_reflection());
        // Z/4 with weights (1, 2): g^2 acts as diag(-1, 1)
        assert!(tame(4, &[1, 2]).has_reflection());
        assert!(has_reflection(&CyclicRep::Wild(wild(2, &[2]))));
        assert!(!wild(2, &[2, 2]).has_reflection());
        assert!(wild(3, &[2, 1, 1]).has_reflection());
    }

    #[test]
    fn wild_mass_examples() {
        assert_eq!(wild_mass(&wild(3, &[2, 2, 2])), Ok(poly(&[1, 1, 1]).into()));
        assert_eq!(wild_mass(&wild(3, &[3])), Ok(poly(&[1, 2]).into()));
        // 1 + L^2/(L + 1)
        let expected = &MotivicRational::one()
            + &MotivicRational::new(poly(&[0, 0, 1]), poly(&[1, 1])).unwrap();
        assert_eq!(wild_mass(&wild(2, &[2, 2, 2])), Ok(expected.into()));
        assert_eq!(wild_mass(&wild(5, &[2, 2])), Ok(ExtendedMotivic::Infinite));
        assert_eq!(wild_mass(&wild(2, &[2])), Err(RepError::Reflection));
    }

    #[test]
    fn euler_closed_form_examples() {
        let w = |p, b: &[u32]| euler_mass_closed_form(&CyclicRep::Wild(wild(p, b))).unwrap();
        assert_eq!(w(3, &[3]), EulerValue::Finite(rat(3, 1)));
        assert_eq!(w(2, &[2, 2, 2]), EulerValue::Finite(rat(3, 2)));
        assert_eq!(w(5, &[2, 2]), EulerValue::Infinite);
        assert_eq!(
            euler_mass_closed_form(&CyclicRep::Tame(tame(5, &[1, 2, 3]))),
            Ok(EulerValue::Finite(rat(5, 1)))
        );
        assert_eq!(
            euler_mass_closed_form(&CyclicRep::Wild(wild(2, &[2]))),
            Err(RepError::Reflection)
        );
    }

    #[test]
    fn lift_examples() {
        assert_eq!(
            lift_rep(&wild(3, &[3])).block_weight_sets(),
            &[vec![0, 1, 2]]
        );
        assert_eq!(
            lift_rep(&wild(5, &[2, 2])).block_weight_sets(),
            &[vec![0, 1], vec![0, 1]]
        );
        assert_eq!(lift_rep(&wild(5, &[1, 1, 1])).weights(), vec![0, 0, 0]);
        assert!(lift_rep(&wild(5, &[1, 1])).reduction().is_err());
    }

    #[test]
    fn lifted_mass_examples() {
        assert_eq!(
            lifted_tame_mass(&lift_rep(&wild(3, &[2, 2, 2]))),
            poly(&[1, 1, 1])
        );
        assert_eq!(lifted_tame_mass(&lift_rep(&wild(3, &[3]))), poly(&[1, 2]));
        assert_eq!(lifted_tame_mass(&lift_rep(&wild(7, &[1, 1]))), poly(&[7]));
    }

    #[test]
    fn uniformity_examples() {
        assert_eq!(
            uniformity_check(&wild(3, &[2, 2, 2])),
            Ok(UniformityVerdict {
                uniform: true,
                witness: None
            })
        );
        assert!(uniformity_check(&wild(3, &[3])).unwrap().uniform);
        assert_eq!(
            uniformity_check(&wild(2, &[2, 2, 2])).unwrap().witness,
            Some(UniformityWitness::DInvariant { d_v: 3, p: 2 })
        );
        assert_eq!(
            uniformity_check(&wild(3, &[2, 1])),
            Err(RepError::Reflection)
        );
    }

    #[test]
    fn valuation_weight_examples() {
        // trivial cover: no determinant contribution, everything fixed
        assert_eq!(weight_from_valuation_data(4, 6, 0, 4), Ok(rat(0, 1)));
        assert_eq!(weight_from_valuation_data(2, 3, 3, 0), Ok(rat(1, 1)));
        // wild, p = 3, one block of size 3, jump j = 1: v(det Q) = sum 3 ceil(i/3)
        let v: u64 = (0..3u64).map(|i| 3 * i.div_ceil(3)).sum();
        assert_eq!(v, 6);
        assert_eq!(weight_from_valuation_data(3, 3, v, 1), Ok(rat(0, 1)));
        assert!(weight_from_valuation_data(2, 0, 0, 0).is_err());
        assert!(weight_from_valuation_data(2, 3, 0, 3).is_err());
    }

    #[test]
    fn crepant_examples() {
        let r = crepant_conditions(&wild(3, &[3])).unwrap();
        assert_eq!(r.verdict, CrepantVerdict::Admissible);
        assert_eq!(r.euler, Some(EulerValue::Finite(rat(3, 1))));
        assert!(r.pst_is_integral_polynomial);

        let r = crepant_conditions(&wild(2, &[2, 2])).unwrap();
        assert!(r.verdict.is_admissible());
        assert_eq!(r.euler, Some(EulerValue::Finite(rat(2, 1))));

        let r = crepant_conditions(&wild(2, &[2, 2, 2])).unwrap();
        assert!(!r.euler_is_integer);
        assert!(!r.d_v_equals_p);
        match &r.verdict {
            CrepantVerdict::Obstructed(reason) => assert!(reason.contains("3/2")),
            v => panic!("unexpected {v:?}"),
        }

        let r = crepant_conditions(&wild(5, &[2, 2])).unwrap();
        assert_eq!(r.euler, Some(EulerValue::Infinite));
        assert!(!r.verdict.is_admissible());
        assert!(crepant_conditions(&wild(2, &[2])).is_err());
    }

    #[test]
    fn decompositions() {
        assert_eq!(
            block_decompositions(2, 3),
            vec![vec![1], vec![2], vec![1, 1], vec![2, 1], vec![1, 1, 1]]
        );
        assert!(block_decompositions(3, 0).is_empty());
    }

    #[test]
    fn primes() {
        let ps: Vec<u32> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
