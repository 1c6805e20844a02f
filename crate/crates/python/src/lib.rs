//! Python bindings. Motivic values cross the boundary as `Motive`
//! objects; structured reports cross as JSON strings.

use motmass_core::cyclic_reps::{self, TameCyclicRep, WildCyclicRep};
use motmass_core::local_fields::{self, FiniteField};
use motmass_core::motivic_ring::{
    euler_realize, poincare_realize, Exponent, ExtendedMotivic, MotivicElement, MotivicRational,
};
use motmass_core::stringy::{self, SncStrataData};
use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

/// `(num, den, coeff)`: `coeff * L^(num/den)`, the coefficient in decimal.
type Triple = (i64, i64, String);

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An exact motivic value: a quotient of Laurent polynomials in `L^(1/r)`.
#[pyclass(module = "motmass", frozen, from_py_object)]
#[derive(Clone, Debug)]
pub struct Motive {
    inner: MotivicRational,
}

impl From<MotivicRational> for Motive {
    fn from(inner: MotivicRational) -> Self {
        Motive { inner }
    }
}

impl From<MotivicElement> for Motive {
    fn from(x: MotivicElement) -> Self {
        Motive { inner: x.into() }
    }
}

#[pymethods]
impl Motive {
    /// `sum coeff * L^(num/den)` over `(num, den, coeff)` triples.
    #[new]
    fn new(terms: Vec<(i64, i64, i64)>) -> PyResult<Self> {
        if terms.iter().any(|&(_, d, _)| d == 0) {
            return Err(PyValueError::new_err(
                "exponent denominator must be nonzero",
            ));
        }
        Ok(
            MotivicElement::from_terms(terms.into_iter().map(|(n, d, c)| (Exponent::new(n, d), c)))
                .into(),
        )
    }

    #[staticmethod]
    fn lefschetz() -> Self {
        MotivicElement::lefschetz().into()
    }

    #[staticmethod]
    fn integer(n: i64) -> Self {
        MotivicElement::constant(n).into()
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str::<MotivicRational>(text)
            .map(Into::into)
            .map_err(value_error)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("motivic values serialize")
    }

    fn __add__(&self, other: &Motive) -> Motive {
        (&self.inner + &other.inner).into()
    }

    fn __sub__(&self, other: &Motive) -> Motive {
        (&self.inner - &other.inner).into()
    }

    fn __mul__(&self, other: &Motive) -> Motive {
        (&self.inner * &other.inner).into()
    }

    fn __truediv__(&self, other: &Motive) -> PyResult<Motive> {
        self.inner
            .checked_div(&other.inner)
            .map(Into::into)
            .map_err(|e| PyZeroDivisionError::new_err(e.to_string()))
    }

    fn __neg__(&self) -> Motive {
        (-&self.inner).into()
    }

    fn __eq__(&self, other: &Motive) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Motive('{}')", self.inner)
    }

    /// Numerator and denominator as `(num, den, coeff)` triples, highest
    /// exponent first.
    fn parts(&self) -> (Vec<Triple>, Vec<Triple>) {
        let triples = |x: &MotivicElement| {
            x.terms()
                .rev()
                .map(|(e, c)| (*e.numer(), *e.denom(), c.to_string()))
                .collect()
        };
        (
            triples(self.inner.numerator()),
            triples(self.inner.denominator()),
        )
    }

    fn is_polynomial(&self) -> bool {
        self.inner.as_element().is_some()
    }

    /// Virtual Poincaré realization `L -> T^2`, rendered in `T`.
    fn poincare(&self) -> String {
        poincare_realize(&self.inner).to_string()
    }

    /// Euler characteristic (value at `L = 1`) as an exact rational string.
    fn euler(&self) -> PyResult<String> {
        euler_realize(&ExtendedMotivic::Finite(self.inner.clone()))
            .map(|e| e.to_string())
            .map_err(value_error)
    }

    /// `P(T^-1) T^(2d) = P(T)`.
    fn satisfies_duality(&self, d: u32) -> bool {
        poincare_realize(&self.inner).satisfies_duality(d)
    }
}

fn finite(mass: ExtendedMotivic) -> Option<Motive> {
    mass.finite().cloned().map(Into::into)
}

fn wild(p: u32, blocks: Vec<u32>) -> PyResult<WildCyclicRep> {
    WildCyclicRep::new(p, blocks).map_err(value_error)
}

/// `sum_g L^(age g)` for the diagonal action of `Z/m` with these weights.
#[pyfunction]
fn tame_mass(m: u32, weights: Vec<u32>) -> PyResult<Motive> {
    let rep = TameCyclicRep::new(m, weights).map_err(value_error)?;
    Ok(cyclic_reps::tame_mass(&rep).into())
}

#[pyfunction]
fn age(m: u32, weights: Vec<u32>, s: u32) -> PyResult<String> {
    let rep = TameCyclicRep::new(m, weights).map_err(value_error)?;
    cyclic_reps::age(&rep, s)
        .map(|a| a.to_string())
        .map_err(value_error)
}

/// Mass of `Z/p` acting by Jordan blocks; `None` when it diverges.
#[pyfunction]
fn wild_mass(p: u32, blocks: Vec<u32>) -> PyResult<Option<Motive>> {
    let rep = wild(p, blocks)?;
    cyclic_reps::wild_mass(&rep)
        .map(finite)
        .map_err(value_error)
}

#[pyfunction]
fn d_invariant(p: u32, blocks: Vec<u32>) -> PyResult<u32> {
    Ok(cyclic_reps::d_invariant(&wild(p, blocks)?))
}

#[pyfunction]
fn wild_weight(p: u32, blocks: Vec<u32>, j: u32) -> PyResult<i64> {
    cyclic_reps::wild_weight(&wild(p, blocks)?, j).map_err(value_error)
}

#[pyfunction]
fn has_reflection(p: u32, blocks: Vec<u32>) -> PyResult<bool> {
    Ok(wild(p, blocks)?.has_reflection())
}

#[pyfunction]
fn lifted_tame_mass(p: u32, blocks: Vec<u32>) -> PyResult<Motive> {
    let rep = wild(p, blocks)?;
    Ok(cyclic_reps::lifted_tame_mass(&cyclic_reps::lift_rep(&rep)).into())
}

#[pyfunction]
fn uniformity_check(p: u32, blocks: Vec<u32>) -> PyResult<bool> {
    let rep = wild(p, blocks)?;
    cyclic_reps::uniformity_check(&rep)
        .map(|v| v.uniform)
        .map_err(value_error)
}

/// Necessary conditions for a crepant resolution, as a JSON object.
#[pyfunction]
fn crepant_conditions(p: u32, blocks: Vec<u32>) -> PyResult<String> {
    let report = cyclic_reps::crepant_conditions(&wild(p, blocks)?).map_err(value_error)?;
    Ok(serde_json::to_string(&report).expect("reports serialize"))
}

/// `(mass, expected, ok)` from enumerating tame degree `n` extensions of
/// `F_q((t))`.
#[pyfunction]
fn serre_mass(q: u32, n: u32) -> PyResult<(String, String, bool)> {
    let field = FiniteField::new(q).map_err(value_error)?;
    let r = local_fields::serre_mass(&field, n).map_err(value_error)?;
    Ok((r.mass.to_string(), r.expected.to_string(), r.ok()))
}

/// Resolution data in the JSON stratum schema.
#[pyclass(module = "motmass", frozen)]
pub struct StrataData {
    inner: SncStrataData,
}

#[pymethods]
impl StrataData {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        SncStrataData::from_json(text)
            .map(|inner| StrataData { inner })
            .map_err(value_error)
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn is_crepant(&self) -> bool {
        self.inner.is_crepant()
    }

    fn stringy_motif(&self) -> Motive {
        stringy::stringy_motif(&self.inner).into()
    }

    fn dual_complex_euler_from_pst(&self) -> PyResult<String> {
        stringy::dual_complex_euler_from_pst(&self.inner)
            .map(|x| x.to_string())
            .map_err(value_error)
    }

    fn dual_complex_euler_direct(&self) -> PyResult<i64> {
        stringy::dual_complex_euler_direct(&self.inner).map_err(value_error)
    }

    /// Full analysis as a JSON object.
    #[pyo3(signature = (check_duality=None, with_chi=false))]
    fn analyze(&self, check_duality: Option<u32>, with_chi: bool) -> PyResult<String> {
        let result = stringy::analyze(&self.inner, check_duality, with_chi).map_err(value_error)?;
        Ok(serde_json::to_string(&result).expect("results serialize"))
    }
}

#[pymodule]
fn motmass(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Motive>()?;
    m.add_class::<StrataData>()?;
    m.add_function(wrap_pyfunction!(tame_mass, m)?)?;
    m.add_function(wrap_pyfunction!(age, m)?)?;
    m.add_function(wrap_pyfunction!(wild_mass, m)?)?;
    m.add_function(wrap_pyfunction!(d_invariant, m)?)?;
    m.add_function(wrap_pyfunction!(wild_weight, m)?)?;
    m.add_function(wrap_pyfunction!(has_reflection, m)?)?;
    m.add_function(wrap_pyfunction!(lifted_tame_mass, m)?)?;
    m.add_function(wrap_pyfunction!(uniformity_check, m)?)?;
    m.add_function(wrap_pyfunction!(crepant_conditions, m)?)?;
    m.add_function(wrap_pyfunction!(serre_mass, m)?)?;
    Ok(())
}
