//! Dispatch of a validated configuration to the core operations.

use polyu2_core::bargmann::CoherentState;
use polyu2_core::contraction::contract_table;
use polyu2_core::higgs::{
    block_diagonal_check, build_two_mode, closure_dimension, sector_decomposition,
    sector_ladder_check, verify_higgs,
};
use polyu2_core::repu2::{admissible_levels, build_rep, verify_structure};
use polyu2_core::{HalfInt, KappaVector, Rational, VerificationReport};
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{Command, OutFormat, RunConfig};
use crate::encode::{Carrier, Mode};
use crate::error::CliError;
use crate::formats::{
    contraction_csv, dims_csv, kappa_text, CoherentDoc, ContractDoc, DimsRow, Document,
    OperatorDoc, RepDoc, ReportDoc, SectorReportDoc, VerifyDoc, SCHEMA,
};

#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub body: String,
    /// Names of failed checks, prefixed by the point they belong to.
    pub failures: Vec<String>,
}

impl Output {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn run(cfg: &RunConfig) -> Result<Output, CliError> {
    match cfg.mode {
        Mode::Exact => run_in::<Rational>(cfg),
        Mode::Float => run_in::<f64>(cfg),
    }
}

fn run_in<S: Carrier>(cfg: &RunConfig) -> Result<Output, CliError> {
    match cfg.command {
        Command::Rep => rep::<S>(cfg),
        Command::Verify => verify::<S>(cfg),
        Command::Dims => dims::<S>(cfg),
        Command::Contract => contract::<S>(cfg),
        Command::Higgs => higgs::<S>(cfg),
        Command::Coherent => coherent::<S>(cfg),
    }
}

/// Evaluates every point in parallel; results and the first error follow the
/// input order.
fn sweep<P: Sync, T: Send>(
    points: &[P],
    f: impl Fn(&P) -> Result<T, CliError> + Sync + Send,
) -> Result<Vec<T>, CliError> {
    let results: Vec<Result<T, CliError>> = points.par_iter().map(f).collect();
    results.into_iter().collect()
}

fn kappa_vectors<S: Carrier>(cfg: &RunConfig) -> Result<Vec<KappaVector<S>>, CliError> {
    cfg.kappas
        .iter()
        .map(|k| {
            let params = k.iter().map(|s| S::parse_value(s)).collect::<Result<_, _>>()?;
            Ok(KappaVector::new(params))
        })
        .collect()
}

/// One parameter per `--kappa`; an empty value is `κ = 0`.
fn kappa_scalars<S: Carrier>(cfg: &RunConfig) -> Result<Vec<S>, CliError> {
    cfg.kappas
        .iter()
        .map(|k| match k.first() {
            Some(s) => Ok(S::parse_value(s)?),
            None => Ok(S::zero()),
        })
        .collect()
}

/// κ-major, then ascending `j`.
fn grid<K: Clone>(kappas: &[K], js: &[HalfInt]) -> Vec<(K, HalfInt)> {
    kappas
        .iter()
        .flat_map(|k| js.iter().map(move |&j| (k.clone(), j)))
        .collect()
}

fn document<T: Serialize>(
    cfg: &RunConfig,
    results: Vec<T>,
    failures: Vec<String>,
) -> Result<Output, CliError> {
    let doc = Document {
        schema: SCHEMA,
        command: cfg.command.name().to_string(),
        mode: cfg.mode,
        all_passed: failures.is_empty(),
        results,
    };
    Ok(Output {
        body: doc.to_json()?,
        failures,
    })
}

fn failures_of(point: &str, report: &VerificationReport) -> Vec<String> {
    report.failures().map(|c| format!("{point}: {}", c.name)).collect()
}

fn rep<S: Carrier>(cfg: &RunConfig) -> Result<Output, CliError> {
    let points = grid(&kappa_vectors::<S>(cfg)?, &cfg.js);
    let docs = sweep(&points, |(kappa, j)| {
        let rep = build_rep(*j, kappa)?;
        Ok(RepDoc {
            j_twice: j.twice(),
            kappa: kappa_text(kappa),
            dim: rep.dim(),
            operators: rep.operators().into_iter().map(OperatorDoc::encode::<S>).collect(),
        })
    })?;
    document(cfg, docs, Vec::new())
}

fn verify<S: Carrier>(cfg: &RunConfig) -> Result<Output, CliError> {
    let points = grid(&kappa_vectors::<S>(cfg)?, &cfg.js);
    let results = sweep(&points, |(kappa, j)| {
        let rep = build_rep(*j, kappa)?;
        let report = verify_structure(&rep);
        let point = format!("j={j} kappa=({})", kappa_text(kappa).join(","));
        Ok((
            VerifyDoc {
                j_twice: j.twice(),
                kappa: kappa_text(kappa),
                dim: rep.dim(),
                report: ReportDoc::from(&report),
            },
            failures_of(&point, &report),
        ))
    })?;
    let (docs, failures): (Vec<_>, Vec<_>) = results.into_iter().unzip();
    document(cfg, docs, failures.concat())
}

fn dims<S: Carrier>(cfg: &RunConfig) -> Result<Output, CliError> {
    let points = grid(&kappa_vectors::<S>(cfg)?, &cfg.js);
    let rows = sweep(&points, |(kappa, j)| {
        let adm = admissible_levels(*j, kappa);
        Ok(DimsRow {
            j_twice: j.twice(),
            kappa: kappa_text(kappa),
            dim: adm.dim(),
            clean: adm.clean,
        })
    })?;
    match cfg.format {
        OutFormat::Csv => Ok(Output {
            body: dims_csv(&rows)?,
            failures: Vec::new(),
        }),
        OutFormat::Json => document(cfg, rows, Vec::new()),
    }
}

fn contract<S: Carrier>(cfg: &RunConfig) -> Result<Output, CliError> {
    let kappas = kappa_vectors::<S>(cfg)?;
    let tables = sweep(&kappas, |kappa| Ok(contract_table(cfg.n_max, kappa, &cfg.js)?))?;
    match cfg.format {
        OutFormat::Csv => Ok(Output {
            body: contraction_csv(&tables[0])?,
            failures: Vec::new(),
        }),
        OutFormat::Json => document(
            cfg,
            tables.iter().map(ContractDoc::encode).collect(),
            Vec::new(),
        ),
    }
}

fn higgs<S: Carrier>(cfg: &RunConfig) -> Result<Output, CliError> {
    let kappas = kappa_scalars::<S>(cfg)?;
    let results = sweep(&kappas, |kappa| {
        let cap = match (cfg.cap, kappa.is_negative()) {
            (Some(cap), _) => cap,
            (None, true) => closure_dimension(kappa).ok_or_else(|| {
                polyu2_core::higgs::HiggsError::UnsupportedKappa {
                    kappa: kappa.to_text(),
                }
            })?,
            (None, false) => {
                return Err(CliError::Usage(format!("higgs with κ = {} ≥ 0 needs --cap", kappa.to_text())))
            }
        };
        let space = build_two_mode(kappa.clone(), cap)?;
        let map = sector_decomposition(&space);
        let mut report = verify_higgs(&space);
        report.extend(block_diagonal_check(&space));
        for sector in map.sectors.iter().filter(|s| s.j.twice() < cap as i64) {
            report.extend(sector_ladder_check(&space, sector.j)?);
        }
        let point = format!("kappa={} cap={cap}", kappa.to_text());
        let failures = failures_of(&point, &report);
        Ok((SectorReportDoc::encode(&space, &map, &report), failures))
    })?;
    let (docs, failures): (Vec<_>, Vec<_>) = results.into_iter().unzip();
    document(cfg, docs, failures.concat())
}

fn coherent<S: Carrier>(cfg: &RunConfig) -> Result<Output, CliError> {
    let [re, im] = cfg
        .z
        .clone()
        .unwrap_or_else(|| ["0".to_string(), "0".to_string()]);
    let (re, im) = (S::parse_value(&re)?, S::parse_value(&im)?);
    let points = grid(&kappa_scalars::<S>(cfg)?, &cfg.js);
    let docs = sweep(&points, |(kappa, j)| {
        let state = CoherentState::new(*j, kappa.clone(), re.clone(), im.clone())?;
        Ok(CoherentDoc::encode(&state))
    })?;
    document(cfg, docs, Vec::new())
}
