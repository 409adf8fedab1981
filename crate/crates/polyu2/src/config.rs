//! Command-line arguments and their validated form.

use std::path::PathBuf;

use clap::{ArgAction, Parser, ValueEnum};
use polyu2_core::HalfInt;

use crate::encode::Mode;
use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Operator matrices of each representation.
    Rep,
    /// Check the defining relations on each representation.
    Verify,
    /// Dimension of the unitary truncation.
    Dims,
    /// Contracted versus limiting structure function.
    Contract,
    /// Two-boson realization: sectors and the cubic commutator.
    Higgs,
    /// Coherent-state kernel coefficients and normalization.
    Coherent,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Rep => "rep",
            Command::Verify => "verify",
            Command::Dims => "dims",
            Command::Contract => "contract",
            Command::Higgs => "higgs",
            Command::Coherent => "coherent",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "polyu2", version, about = "Polynomial u(2) algebras: representations, contraction, two-boson realization")]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,

    /// Spin labels: comma-separated `t/2` values or integers, or inclusive
    /// ranges `a..b` stepping by 1/2.
    #[arg(long, value_name = "LIST")]
    pub j: Option<String>,

    /// Deformation parameters, comma-separated. Repeat to sweep. An empty
    /// value means the undeformed algebra.
    #[arg(long, value_name = "K1,K2,..", allow_hyphen_values = true, action = ArgAction::Append)]
    pub kappa: Vec<String>,

    #[arg(long, value_enum, env = "POLYU2_MODE", default_value = "exact")]
    pub mode: Mode,

    /// Exclusive per-mode occupation bound for `higgs`.
    #[arg(long)]
    pub cap: Option<usize>,

    /// Coherent-state label.
    #[arg(long, value_name = "RE,IM", allow_hyphen_values = true)]
    pub z: Option<String>,

    #[arg(long, default_value_t = 5)]
    pub n_max: i64,

    #[arg(long, value_enum, default_value = "json")]
    pub format: OutFormat,

    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    /// Ascending, without duplicates.
    pub js: Vec<HalfInt>,
    /// Unparsed components; parsing depends on the mode.
    pub kappas: Vec<Vec<String>>,
    pub mode: Mode,
    pub cap: Option<usize>,
    pub z: Option<[String; 2]>,
    pub n_max: i64,
    pub format: OutFormat,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        let js = match &cli.j {
            Some(s) => parse_j_list(s)?,
            None => Vec::new(),
        };
        let mut kappas: Vec<Vec<String>> = cli.kappa.iter().map(|k| split_list(k)).collect();
        if kappas.is_empty() {
            kappas.push(Vec::new());
        }
        let z = match &cli.z {
            Some(s) => match split_list(s).as_slice() {
                [re, im] => Some([re.clone(), im.clone()]),
                [re] => Some([re.clone(), "0".to_string()]),
                _ => return Err(CliError::Usage(format!("--z takes `re,im`, got `{s}`"))),
            },
            None => None,
        };
        let cfg = RunConfig {
            command: cli.command,
            js,
            kappas,
            mode: cli.mode,
            cap: cli.cap,
            z,
            n_max: cli.n_max,
            format: cli.format,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), CliError> {
        use Command::*;
        if self.format == OutFormat::Csv && !matches!(self.command, Dims | Contract) {
            return Err(CliError::Usage(format!(
                "csv output is available for dims and contract, not {}",
                self.command.name()
            )));
        }
        if self.js.is_empty() && self.command != Higgs {
            return Err(CliError::Usage(format!("{} needs --j", self.command.name())));
        }
        if self.command == Contract {
            if self.n_max < 0 {
                return Err(CliError::Usage("--n-max must be nonnegative".into()));
            }
            let needed = self.n_max.max(1);
            if self.js[0].twice() < needed {
                return Err(CliError::Usage(format!(
                    "contract needs 2j ≥ max(n_max, 1) = {needed} for every j; smallest j is {}",
                    self.js[0]
                )));
            }
            if self.format == OutFormat::Csv && self.kappas.len() > 1 {
                return Err(CliError::Usage("csv contraction tables take a single --kappa".into()));
            }
        }
        if matches!(self.command, Higgs | Coherent) {
            if let Some(k) = self.kappas.iter().find(|k| k.len() > 1) {
                return Err(CliError::Usage(format!(
                    "{} takes one deformation parameter per --kappa, got {}",
                    self.command.name(),
                    k.join(",")
                )));
            }
        }
        Ok(())
    }
}

fn split_list(s: &str) -> Vec<String> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(String::from)
        .collect()
}

fn parse_halfint(s: &str) -> Result<HalfInt, CliError> {
    let j: HalfInt = s
        .trim()
        .parse()
        .map_err(|e| CliError::Usage(format!("--j `{s}`: {e}")))?;
    if j.twice() < 0 {
        return Err(CliError::Usage(format!("--j `{s}` is negative")));
    }
    Ok(j)
}

/// `"0/2..3/2,4"` → `0, 1/2, 1, 3/2, 4`.
pub fn parse_j_list(s: &str) -> Result<Vec<HalfInt>, CliError> {
    let mut out = Vec::new();
    for item in split_list(s) {
        match item.split_once("..") {
            Some((a, b)) => {
                let (a, b) = (parse_halfint(a)?, parse_halfint(b)?);
                if a > b {
                    return Err(CliError::Usage(format!("--j range `{item}` is empty")));
                }
                out.extend((a.twice()..=b.twice()).map(HalfInt::from_twice));
            }
            None => out.push(parse_halfint(&item)?),
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}
