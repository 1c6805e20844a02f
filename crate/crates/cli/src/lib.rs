//! Front end for the `motmass` binary: argument parsing, dispatch and
//! report rendering. [`run`] is deterministic and never panics on bad
//! input; it reports exit code 2 instead.

pub mod args;
mod render;

use std::fmt;
use std::path::PathBuf;

use motmass::cyclic_reps::{
    block_decompositions, crepant_conditions, d_invariant, is_prime, lift_rep, lifted_tame_mass,
    tame_mass, uniformity_check, wild_mass, RepError, TameCyclicRep, WildCyclicRep,
};
use motmass::local_fields::{serre_mass, FieldError, FiniteField};
use motmass::motivic_ring::{euler_realize, poincare_realize, ExtendedMotivic, MotivicRational};
use motmass::stringy::{analyze, ChiValue, SncStrataData};
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub use render::render_human;

/// Largest dimension accepted by [`Command::SweepWild`].
pub const MAX_SWEEP_DIM: u32 = 40;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    MassTame {
        m: u32,
        weights: Vec<u32>,
    },
    MassWild {
        p: u32,
        blocks: Vec<u32>,
    },
    Stringy {
        input_path: PathBuf,
        check_duality: Option<u32>,
        with_chi: bool,
    },
    Uniform {
        p: u32,
        blocks: Vec<u32>,
    },
    Crepant {
        p: u32,
        blocks: Vec<u32>,
    },
    Serre {
        q: u32,
        n: u32,
    },
    SweepWild {
        p: u32,
        max_dim: u32,
    },
}

fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::MassTame { m, weights } => {
                write!(f, "mass tame --m {m} --weights {}", join(weights))
            }
            Command::MassWild { p, blocks } => {
                write!(f, "mass wild --p {p} --blocks {}", join(blocks))
            }
            Command::Stringy {
                input_path,
                check_duality,
                with_chi,
            } => {
                write!(f, "stringy --input {}", input_path.display())?;
                if let Some(d) = check_duality {
                    write!(f, " --check-duality {d}")?;
                }
                if *with_chi {
                    f.write_str(" --with-chi")?;
                }
                Ok(())
            }
            Command::Uniform { p, blocks } => {
                write!(f, "uniform --p {p} --blocks {}", join(blocks))
            }
            Command::Crepant { p, blocks } => {
                write!(f, "crepant --p {p} --blocks {}", join(blocks))
            }
            Command::Serre { q, n } => write!(f, "serre --q {q} --n {n}"),
            Command::SweepWild { p, max_dim } => {
                write!(f, "sweep-wild --p {p} --max-dim {max_dim}")
            }
        }
    }
}

/// Outcome of one command. `exit_code` is 0 on success, 1 when a
/// verification command ran and its identity failed, 2 on bad input.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub result: Value,
    pub diagnostics: Vec<String>,
    pub exit_code: u8,
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_INVALID_INPUT: u8 = 2;

/// Bad input, naming the offending argument.
#[derive(Debug)]
struct InputError {
    argument: &'static str,
    message: String,
}

impl InputError {
    fn new(argument: &'static str, message: impl fmt::Display) -> Self {
        InputError {
            argument,
            message: message.to_string(),
        }
    }
}

struct Outcome {
    result: Value,
    diagnostics: Vec<String>,
    exit_code: u8,
}

impl Outcome {
    fn ok(result: Value) -> Self {
        Outcome {
            result,
            diagnostics: Vec::new(),
            exit_code: EXIT_OK,
        }
    }

    fn check(mut self, holds: bool, failure: impl FnOnce() -> String) -> Self {
        if !holds {
            self.exit_code = EXIT_CHECK_FAILED;
            self.diagnostics.push(failure());
        }
        self
    }
}

pub fn run(command: &Command) -> Report {
    let outcome = match dispatch(command) {
        Ok(o) => o,
        Err(e) => Outcome {
            result: Value::Null,
            diagnostics: vec![format!("{}: {}", e.argument, e.message)],
            exit_code: EXIT_INVALID_INPUT,
        },
    };
    Report {
        command: command.to_string(),
        result: outcome.result,
        diagnostics: outcome.diagnostics,
        exit_code: outcome.exit_code,
    }
}

fn dispatch(command: &Command) -> Result<Outcome, InputError> {
    match command {
        Command::MassTame { m, weights } => mass_tame(*m, weights),
        Command::MassWild { p, blocks } => mass_wild(&wild_input(*p, blocks)?),
        Command::Stringy {
            input_path,
            check_duality,
            with_chi,
        } => stringy(input_path, *check_duality, *with_chi),
        Command::Uniform { p, blocks } => uniform(&wild_input(*p, blocks)?),
        Command::Crepant { p, blocks } => crepant(&wild_input(*p, blocks)?),
        Command::Serre { q, n } => serre(*q, *n),
        Command::SweepWild { p, max_dim } => sweep_wild(*p, *max_dim),
    }
}

fn rep_error(e: RepError) -> InputError {
    match e {
        RepError::ZeroOrder | RepError::NotFaithful { .. } => InputError::new("--m", e),
        RepError::WeightOutOfRange { .. } => InputError::new("--weights", e),
        RepError::NotPrime(_) => InputError::new("--p", e),
        RepError::Reflection => InputError::new("--blocks", format!("trivial/reflection: {e}")),
        _ => InputError::new("--blocks", e),
    }
}

/// A wild representation the mass formulas apply to: nontrivial and
/// without reflections.
fn wild_input(p: u32, blocks: &[u32]) -> Result<WildCyclicRep, InputError> {
    if !is_prime(p) {
        return Err(InputError::new("--p", format!("{p} is not prime")));
    }
    let rep = WildCyclicRep::new(p, blocks.to_vec()).map_err(rep_error)?;
    if rep.is_trivial() {
        return Err(InputError::new(
            "--blocks",
            format!("trivial/reflection: {rep} acts trivially"),
        ));
    }
    if rep.has_reflection() {
        return Err(InputError::new(
            "--blocks",
            format!("trivial/reflection: {rep} contains a reflection (dimension minus block count is 1)"),
        ));
    }
    Ok(rep)
}

fn motivic(x: &MotivicRational) -> (Value, Value) {
    (
        json!(x.to_string()),
        serde_json::to_value(x).expect("motivic values serialize"),
    )
}

fn mass_tame(m: u32, weights: &[u32]) -> Result<Outcome, InputError> {
    let rep = TameCyclicRep::new(m, weights.to_vec()).map_err(rep_error)?;
    let mass = MotivicRational::from(tame_mass(&rep));
    let poincare = poincare_realize(&mass);
    let euler = euler_realize(&mass.clone().into()).expect("tame masses are polynomials");
    let (pretty, value) = motivic(&mass);
    let mut out = Outcome::ok(json!({
        "rep": rep.to_string(),
        "mass": pretty,
        "mass_value": value,
        "euler": euler.to_string(),
        "poincare": poincare.to_string(),
        "poincare_value": poincare,
    }));
    if rep.has_reflection() {
        out.diagnostics
            .push(format!("reflection detected in {rep}"));
    }
    Ok(out)
}

fn mass_wild(rep: &WildCyclicRep) -> Result<Outcome, InputError> {
    let mass = wild_mass(rep).map_err(rep_error)?;
    let euler = euler_realize(&mass).map_err(|e| InputError::new("--blocks", e))?;
    let report = crepant_conditions(rep).map_err(rep_error)?;
    let d_v = d_invariant(rep);
    let poincare = mass.finite().map(poincare_realize);
    let mut out = Outcome::ok(json!({
        "rep": rep.to_string(),
        "d_v": d_v,
        "mass": mass.to_string(),
        "mass_value": mass,
        "euler": euler.to_string(),
        "poincare": poincare.as_ref().map(|p| p.to_string()),
        "poincare_value": poincare,
        "crepant_report": report,
    }));
    if mass.is_infinite() {
        out.diagnostics
            .push(format!("divergent mass: D_V = {d_v} < p = {}", rep.p()));
    }
    Ok(out)
}

fn stringy(
    path: &PathBuf,
    check_duality: Option<u32>,
    with_chi: bool,
) -> Result<Outcome, InputError> {
    if !path.is_file() {
        return Err(InputError::new(
            "--input",
            format!("{} is not a readable file", path.display()),
        ));
    }
    let text = std::fs::read_to_string(path).map_err(|e| InputError::new("--input", e))?;
    let data = SncStrataData::from_json(&text).map_err(|e| InputError::new("--input", e))?;
    let result =
        analyze(&data, check_duality, with_chi).map_err(|e| InputError::new("--input", e))?;
    let (motif, motif_value) = motivic(&result.motif);
    let mut out = Outcome::ok(json!({
        "motif": motif,
        "motif_value": motif_value,
        "poincare": result.poincare.to_string(),
        "poincare_value": result.poincare,
        "crepant": result.crepant,
        "duality": result.duality,
        "chi_from_pst": result.chi_from_pst,
        "chi_direct": result.chi_direct,
    }));
    if let (Some(ChiValue::Value(a)), Some(b)) = (&result.chi_from_pst, result.chi_direct) {
        if *a != BigRational::from_integer(b.into()) {
            out.diagnostics.push(format!(
                "P_st(0) = {a} differs from the direct dual complex count {b}; the data may not satisfy the hypotheses"
            ));
        }
    }
    if let Some(ChiValue::Pole) = result.chi_from_pst {
        out.diagnostics.push("P_st has a pole at T = 0".to_string());
    }
    Ok(match result.duality {
        Some(d) => out.check(d.holds, || {
            format!("Poincaré duality fails in dimension {}", d.d)
        }),
        None => out,
    })
}

fn uniform(rep: &WildCyclicRep) -> Result<Outcome, InputError> {
    let verdict = uniformity_check(rep).map_err(rep_error)?;
    let mass = wild_mass(rep).map_err(rep_error)?;
    let lifted = MotivicRational::from(lifted_tame_mass(&lift_rep(rep)));
    let (lifted_pretty, lifted_value) = motivic(&lifted);
    let out = Outcome::ok(json!({
        "rep": rep.to_string(),
        "d_v": d_invariant(rep),
        "uniform": verdict.uniform,
        "witness": verdict.witness,
        "wild_mass": mass.to_string(),
        "wild_mass_value": mass,
        "lifted_mass": lifted_pretty,
        "lifted_mass_value": lifted_value,
    }));
    Ok(out.check(verdict.uniform, || format!("{rep} is not uniform")))
}

fn crepant(rep: &WildCyclicRep) -> Result<Outcome, InputError> {
    let report = crepant_conditions(rep).map_err(rep_error)?;
    Ok(Outcome::ok(json!({
        "rep": rep.to_string(),
        "report": report,
    })))
}

fn serre(q: u32, n: u32) -> Result<Outcome, InputError> {
    let field = FiniteField::new(q).map_err(|e| InputError::new("--q", e))?;
    let result = serre_mass(&field, n).map_err(|e| match e {
        FieldError::WildDegree { .. } | FieldError::ZeroDegree => InputError::new("--n", e),
        _ => InputError::new("--q", e),
    })?;
    let classes: Vec<Value> = result
        .classes
        .iter()
        .map(|c| {
            json!({
                "uniformizer_class": field.format_element(c.uniformizer_class),
                "orbit_size": c.orbit_size,
                "disc_exponent": c.disc_exponent,
                "aut_order": c.aut_order,
            })
        })
        .collect();
    let aut_orders: Vec<u64> = result.classes.iter().map(|c| c.aut_order).collect();
    let ok = result.ok();
    let out = Outcome::ok(json!({
        "q": q,
        "n": n,
        "classes": classes,
        "aut_orders": aut_orders,
        "mass": result.mass.to_string(),
        "expected": result.expected.to_string(),
        "ok": ok,
    }));
    Ok(out.check(ok, || {
        format!(
            "mass {} differs from q^(1-n) = {}",
            result.mass, result.expected
        )
    }))
}

/// One row of the wild sweep.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub blocks: Vec<u32>,
    pub dimension: u32,
    pub d_v: u32,
    pub mass: String,
    pub euler: String,
    pub uniform: bool,
    pub crepant: String,
}

fn sweep_row(rep: &WildCyclicRep) -> SweepRow {
    let mass = wild_mass(rep).expect("sweep inputs have no reflection");
    let euler = euler_realize(&mass).expect("wild masses have no pole at L = 1");
    let uniform = uniformity_check(rep)
        .expect("sweep inputs have no reflection")
        .uniform;
    let crepant = crepant_conditions(rep).expect("sweep inputs have no reflection");
    SweepRow {
        blocks: rep.blocks().to_vec(),
        dimension: rep.dimension(),
        d_v: d_invariant(rep),
        mass: match &mass {
            ExtendedMotivic::Finite(m) => m.to_string(),
            ExtendedMotivic::Infinite => "infinity".to_string(),
        },
        euler: euler.to_string(),
        uniform,
        crepant: if crepant.verdict.is_admissible() {
            "admissible".to_string()
        } else {
            "obstructed".to_string()
        },
    }
}

fn sweep_wild(p: u32, max_dim: u32) -> Result<Outcome, InputError> {
    if !is_prime(p) {
        return Err(InputError::new("--p", format!("{p} is not prime")));
    }
    if max_dim > MAX_SWEEP_DIM {
        return Err(InputError::new(
            "--max-dim",
            format!("{max_dim} exceeds {MAX_SWEEP_DIM}"),
        ));
    }
    let reps: Vec<WildCyclicRep> = block_decompositions(p, max_dim)
        .into_iter()
        .map(|b| WildCyclicRep::new(p, b).expect("enumerated blocks are in range"))
        .filter(|r| !r.is_trivial() && !r.has_reflection())
        .collect();
    let rows: Vec<SweepRow> = reps.par_iter().map(sweep_row).collect();
    Ok(Outcome::ok(json!({
        "p": p,
        "max_dim": max_dim,
        "rows": rows,
    })))
}
