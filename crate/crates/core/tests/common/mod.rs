//! Shared oracles and generators for the integration and acceptance tests.
#![allow(dead_code)]

use motmass::motivic_ring::{Exponent, MotivicElement, MotivicRational};
use motmass::stringy::{open_from_closed, Divisor, SncStrataData, StrataMap, StratumKey};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::Rng;

// ---------------------------------------------------------------------------
// Hirzebruch-Jung resolution of the cyclic surface quotient 1/m(1, q)

/// `m/q = b_1 - 1/(b_2 - 1/(...))` with every `b_i >= 2`.
pub fn hj_continued_fraction(m: i64, q: i64) -> Vec<i64> {
    assert!(0 < q && q < m);
    let (mut num, mut den) = (m, q);
    let mut out = Vec::new();
    while den != 0 {
        // ceiling division
        let b = (num + den - 1) / den;
        out.push(b);
        let rem = b * den - num;
        num = den;
        den = rem;
    }
    out
}

/// Discrepancies of the chain of exceptional curves with self-intersections
/// `-b_i`, from adjunction `K.E_i = b_i - 2` and `K = sum a_j E_j`.
pub fn chain_discrepancies(bs: &[i64]) -> Vec<Exponent> {
    let n = bs.len();
    let mut m: Vec<Vec<Exponent>> = (0..n)
        .map(|i| {
            let mut row = vec![Exponent::zero(); n + 1];
            row[i] = Exponent::from_integer(-bs[i]);
            if i > 0 {
                row[i - 1] = Exponent::one();
            }
            if i + 1 < n {
                row[i + 1] = Exponent::one();
            }
            row[n] = Exponent::from_integer(bs[i] - 2);
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("intersection matrix is negative definite");
        m.swap(col, pivot);
        let lead = m[col][col];
        for x in &mut m[col][col..] {
            *x /= lead;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col];
                for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= f * y;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n]).collect()
}

/// Resolution data over the origin of `A^2/(Z/m)` acting with weights
/// `(1, q)`: a chain of `P^1`s, each punctured at its neighbours, plus the
/// intersection points.
pub fn cyclic_surface_resolution(m: i64, q: i64) -> SncStrataData {
    let bs = hj_continued_fraction(m, q);
    let a = chain_discrepancies(&bs);
    let n = bs.len();
    let divisors = (0..n)
        .map(|i| Divisor::new(format!("E{}", i + 1), a[i]))
        .collect();
    let mut data = SncStrataData::new(2, divisors).unwrap();
    for i in 0..n {
        let neighbours = i64::from(i > 0) + i64::from(i + 1 < n);
        data.add_stratum_key(
            StratumKey::from_indices([i]),
            MotivicElement::from_int_poly(&[1 - neighbours, 1]),
        );
        if i + 1 < n {
            data.add_stratum_key(StratumKey::from_indices([i, i + 1]), MotivicElement::one());
        }
    }
    data
}

pub fn fixture(name: &str) -> String {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("reading {path}: {e}"))
}

// ---------------------------------------------------------------------------
// Synthetic simple normal crossing configurations

/// A dual complex given by the component counts `#π₀(F_J)` of every
/// nonempty intersection, together with the ambient dimension.
#[derive(Clone, Debug)]
pub struct SncConfig {
    pub name: String,
    pub dimension: u32,
    pub vertices: usize,
    pub faces: Vec<(Vec<usize>, u64)>,
}

impl SncConfig {
    fn new(name: impl Into<String>, dimension: u32, vertices: usize) -> Self {
        let mut faces = Vec::new();
        for v in 0..vertices {
            faces.push((vec![v], 1));
        }
        SncConfig {
            name: name.into(),
            dimension,
            vertices,
            faces,
        }
    }

    fn with(mut self, face: &[usize], count: u64) -> Self {
        match self.faces.iter_mut().find(|(f, _)| f == face) {
            Some(entry) => entry.1 = count,
            None => self.faces.push((face.to_vec(), count)),
        }
        self
    }

    /// Euler characteristic of the dual complex, each component of `F_J`
    /// counted as one simplex of dimension `#J - 1`.
    pub fn euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .map(|(f, c)| {
                if f.len() % 2 == 1 {
                    *c as i64
                } else {
                    -(*c as i64)
                }
            })
            .sum()
    }

    /// Stratum data whose closed strata are `#π₀(F_J)` copies of
    /// `(P^1)^(d - #J)`, with the given discrepancies.
    pub fn to_data(&self, discrepancies: &[Exponent]) -> SncStrataData {
        let divisors = (0..self.vertices)
            .map(|i| Divisor::new(format!("D{i}"), discrepancies[i]))
            .collect();
        let mut data = SncStrataData::new(self.dimension, divisors).unwrap();
        let p1 = MotivicElement::from_int_poly(&[1, 1]);
        let mut closed = StrataMap::new();
        for (face, count) in &self.faces {
            let codim = self.dimension as usize - face.len();
            let class =
                (0..codim).fold(MotivicElement::constant(*count as i64), |acc, _| &acc * &p1);
            closed.insert(StratumKey::from_indices(face.iter().copied()), class);
        }
        for (key, class) in open_from_closed(&closed) {
            data.add_stratum_key(key, class);
        }
        for (face, count) in &self.faces {
            data.set_pi0_key(StratumKey::from_indices(face.iter().copied()), *count);
        }
        data
    }
}

pub fn chain(n: usize) -> SncConfig {
    (0..n.saturating_sub(1)).fold(SncConfig::new(format!("chain-{n}"), 2, n), |c, i| {
        c.with(&[i, i + 1], 1)
    })
}

pub fn cycle(n: usize) -> SncConfig {
    assert!(n >= 3);
    (0..n).fold(SncConfig::new(format!("cycle-{n}"), 2, n), |c, i| {
        let (a, b) = (i.min((i + 1) % n), i.max((i + 1) % n));
        c.with(&[a, b], 1)
    })
}

pub fn star(leaves: usize) -> SncConfig {
    (1..=leaves).fold(
        SncConfig::new(format!("star-{leaves}"), 2, leaves + 1),
        |c, i| c.with(&[0, i], 1),
    )
}

/// Disjoint union of chains of the given lengths.
pub fn disjoint_chains(lengths: &[usize]) -> SncConfig {
    let total: usize = lengths.iter().sum();
    let mut config = SncConfig::new(format!("chains-{lengths:?}"), 2, total);
    let mut offset = 0;
    for &len in lengths {
        for i in 0..len.saturating_sub(1) {
            config = config.with(&[offset + i, offset + i + 1], 1);
        }
        offset += len;
    }
    config
}

/// All nonempty subsets of `n` vertices of size at most `max_face`, each
/// intersection connected.
pub fn simplex_skeleton(n: usize, max_face: usize) -> SncConfig {
    let mut config = SncConfig::new(format!("skeleton-{n}-{max_face}"), max_face as u32, n);
    for mask in 1u32..(1 << n) {
        let face: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        if face.len() >= 2 && face.len() <= max_face {
            config = config.with(&face, 1);
        }
    }
    config
}

/// The synthetic configurations: chains, trees, cycles, disjoint unions,
/// simplices and their boundaries, and multiply-meeting divisors.
pub fn snc_configurations() -> Vec<SncConfig> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push(chain(n));
    }
    for n in 3..=6 {
        out.push(cycle(n));
    }
    for k in 2..=4 {
        out.push(star(k));
    }
    // a tree that is not a star: 0-1-2 with 3, 4 attached to 1 and 2
    out.push(
        SncConfig::new("tree-5", 2, 5)
            .with(&[0, 1], 1)
            .with(&[1, 2], 1)
            .with(&[1, 3], 1)
            .with(&[2, 4], 1),
    );
    out.push(disjoint_chains(&[1, 1]));
    out.push(disjoint_chains(&[2, 3]));
    out.push(disjoint_chains(&[1, 2, 2]));
    // two curves meeting transversally in two points: a loop
    out.push(SncConfig::new("bigon", 2, 2).with(&[0, 1], 2));
    // one divisor whose preimage over R has three components
    out.push(SncConfig::new("split-vertex", 2, 1).with(&[0], 3));
    out.push(simplex_skeleton(3, 3));
    out.push(simplex_skeleton(3, 2));
    out.push(simplex_skeleton(4, 3));
    out.push(simplex_skeleton(4, 4));
    out
}

/// A log terminal discrepancy in `(-1, 3]` with denominator at most 6.
pub fn random_discrepancy(rng: &mut impl Rng) -> Exponent {
    let den = rng.gen_range(1..=6);
    let num = rng.gen_range(-den + 1..=3 * den);
    Exponent::new(num, den)
}

pub fn random_class(rng: &mut impl Rng) -> MotivicElement {
    let terms = rng.gen_range(0..=3);
    MotivicElement::from_terms((0..terms).map(|_| {
        (
            Exponent::from_integer(rng.gen_range(0..=3)),
            rng.gen_range(-4i64..=4),
        )
    }))
}

/// Random crepant strata over up to `max_divisors` divisors.
pub fn random_crepant_data(rng: &mut impl Rng, max_divisors: usize) -> SncStrataData {
    let n = rng.gen_range(0..=max_divisors);
    let divisors = (0..n)
        .map(|i| Divisor::new(format!("E{i}"), Exponent::zero()))
        .collect();
    let mut data = SncStrataData::new(rng.gen_range(1..=4), divisors).unwrap();
    for _ in 0..rng.gen_range(0..=6) {
        let mask = rng.gen_range(0..(1u32 << n));
        data.add_stratum_key(
            StratumKey::from_indices((0..n).filter(|&i| mask & (1 << i) != 0)),
            random_class(rng),
        );
    }
    data
}

// ---------------------------------------------------------------------------
// proptest strategies

pub fn arb_exponent() -> impl Strategy<Value = Exponent> {
    (-6i64..=6, prop::sample::select(vec![1i64, 2, 3, 4, 6])).prop_map(|(n, d)| Exponent::new(n, d))
}

pub fn arb_element() -> impl Strategy<Value = MotivicElement> {
    prop::collection::vec((arb_exponent(), -5i64..=5), 0..5).prop_map(MotivicElement::from_terms)
}

pub fn arb_nonzero_element() -> impl Strategy<Value = MotivicElement> {
    arb_element().prop_filter("nonzero", |x| !x.is_zero())
}

pub fn arb_rational() -> impl Strategy<Value = MotivicRational> {
    (arb_element(), arb_nonzero_element()).prop_map(|(n, d)| MotivicRational::new(n, d).unwrap())
}

pub fn arb_nonzero_rational() -> impl Strategy<Value = MotivicRational> {
    (arb_nonzero_element(), arb_nonzero_element())
        .prop_map(|(n, d)| MotivicRational::new(n, d).unwrap())
}

/// Coefficient vectors indexed by multiples of `1/r`, length `2 d r + 1`.
pub fn arb_palindrome() -> impl Strategy<Value = (u32, i64, Vec<i64>)> {
    (0u32..=3, prop::sample::select(vec![1i64, 2, 3])).prop_flat_map(|(d, r)| {
        let len = (2 * i64::from(d) * r + 1) as usize;
        let half = len.div_ceil(2);
        prop::collection::vec(-3i64..=3, half).prop_map(move |h| {
            let mut full = h.clone();
            full.extend(h[..len - half].iter().rev());
            (d, r, full)
        })
    })
}
