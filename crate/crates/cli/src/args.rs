//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use motmass::cyclic_reps::{TameCyclicRep, WildCyclicRep};

use crate::Command;

#[derive(Debug, Parser)]
#[command(
    name = "motmass",
    version,
    about = "Exact motivic masses and stringy invariants"
)]
pub struct Cli {
    /// Emit the machine-readable JSON report.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Sub,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Motivic mass of a cyclic representation.
    #[command(subcommand)]
    Mass(MassKind),
    /// Stringy motif and realizations of resolution data.
    Stringy {
        /// JSON stratum data.
        #[arg(long)]
        input: PathBuf,
        /// Check Poincaré duality in dimension D.
        #[arg(long, value_name = "D")]
        check_duality: Option<u32>,
        /// Compute the dual complex Euler characteristic.
        #[arg(long)]
        with_chi: bool,
    },
    /// Compare the wild mass with the mass of the lift.
    Uniform(WildArgs),
    /// Necessary conditions for a crepant resolution.
    Crepant(WildArgs),
    /// Serre's mass formula by enumeration over F_q((t)).
    Serre {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: u32,
    },
    /// Tabulate every block decomposition up to a dimension.
    SweepWild {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        max_dim: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum MassKind {
    /// Diagonal representation of Z/m, given as "m:w1,w2,..." or flags.
    Tame(TameArgs),
    /// Jordan blocks of Z/p in characteristic p, as "p:d1,d2,..." or flags.
    Wild(WildArgs),
}

#[derive(Debug, Args)]
pub struct TameArgs {
    #[arg(conflicts_with_all = ["m", "weights"])]
    pub rep: Option<String>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long, value_delimiter = ',')]
    pub weights: Vec<u32>,
}

#[derive(Debug, Args)]
pub struct WildArgs {
    #[arg(conflicts_with_all = ["p", "blocks"])]
    pub rep: Option<String>,
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long, value_delimiter = ',')]
    pub blocks: Vec<u32>,
}

impl TameArgs {
    fn resolve(self) -> Result<(u32, Vec<u32>), String> {
        if let Some(rep) = self.rep {
            let r: TameCyclicRep = rep.parse().map_err(|e| format!("REP: {e}"))?;
            return Ok((r.order(), r.weights().to_vec()));
        }
        let m = self.m.ok_or("--m: required unless REP is given")?;
        if self.weights.is_empty() {
            return Err("--weights: required unless REP is given".into());
        }
        Ok((m, self.weights))
    }
}

impl WildArgs {
    fn resolve(self) -> Result<(u32, Vec<u32>), String> {
        if let Some(rep) = self.rep {
            let r: WildCyclicRep = rep.parse().map_err(|e| format!("REP: {e}"))?;
            return Ok((r.p(), r.blocks().to_vec()));
        }
        let p = self.p.ok_or("--p: required unless REP is given")?;
        if self.blocks.is_empty() {
            return Err("--blocks: required unless REP is given".into());
        }
        Ok((p, self.blocks))
    }
}

impl Sub {
    /// Converts parsed arguments into a [`Command`]; the error names the
    /// offending argument.
    pub fn into_command(self) -> Result<Command, String> {
        Ok(match self {
            Sub::Mass(MassKind::Tame(a)) => {
                let (m, weights) = a.resolve()?;
                Command::MassTame { m, weights }
            }
            Sub::Mass(MassKind::Wild(a)) => {
                let (p, blocks) = a.resolve()?;
                Command::MassWild { p, blocks }
            }
            Sub::Stringy {
                input,
                check_duality,
                with_chi,
            } => Command::Stringy {
                input_path: input,
                check_duality,
                with_chi,
            },
            Sub::Uniform(a) => {
                let (p, blocks) = a.resolve()?;
                Command::Uniform { p, blocks }
            }
            Sub::Crepant(a) => {
                let (p, blocks) = a.resolve()?;
                Command::Crepant { p, blocks }
            }
            Sub::Serre { q, n } => Command::Serre { q, n },
            Sub::SweepWild { p, max_dim } => Command::SweepWild { p, max_dim },
        })
    }
}
