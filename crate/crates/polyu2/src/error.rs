use std::path::PathBuf;

use polyu2_core::bargmann::BargmannError;
use polyu2_core::contraction::ContractionError;
use polyu2_core::higgs::HiggsError;
use polyu2_core::repu2::RepError;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::encode::ValueError;
use crate::formats::{FormatError, SCHEMA};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_VERIFICATION: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_DOMAIN: u8 = 3;
pub const EXIT_IO: u8 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Value(#[from] ValueError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Higgs(#[from] HiggsError),
    #[error(transparent)]
    Contraction(#[from] ContractionError),
    #[error(transparent)]
    Bargmann(#[from] BargmannError),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Value(_) => EXIT_USAGE,
            CliError::Higgs(HiggsError::CapMismatch { .. } | HiggsError::EmptyCap) => EXIT_USAGE,
            CliError::Contraction(ContractionError::DomainTooSmall { .. }) => EXIT_USAGE,
            CliError::Rep(_) | CliError::Higgs(_) | CliError::Contraction(_) | CliError::Bargmann(_) => {
                EXIT_DOMAIN
            }
            CliError::Format(_) | CliError::Io { .. } => EXIT_IO,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) | CliError::Value(_) => "InvalidConfig",
            CliError::Rep(RepError::NonUnitarizable { .. }) => "NonUnitarizable",
            CliError::Rep(RepError::NilpotencyMismatch { .. }) => "NilpotencyMismatch",
            CliError::Higgs(e) => match e {
                HiggsError::UnsupportedKappa { .. } => "UnsupportedKappa",
                HiggsError::CapMismatch { .. } => "CapMismatch",
                HiggsError::EmptyCap => "EmptyCap",
                HiggsError::SectorTruncated { .. } => "SectorTruncated",
                HiggsError::NoSuchSector { .. } => "NoSuchSector",
            },
            CliError::Contraction(ContractionError::DomainTooSmall { .. }) => "DomainTooSmall",
            CliError::Contraction(ContractionError::NegativeStructure { .. }) => "NegativeStructure",
            CliError::Bargmann(e) => match e {
                BargmannError::NegativeLadder { .. } => "NegativeLadder",
                BargmannError::OutOfSector { .. } => "OutOfSector",
                BargmannError::LengthMismatch { .. } => "LengthMismatch",
                BargmannError::DegenerateSector { .. } => "DegenerateSector",
            },
            CliError::Format(_) => "Format",
            CliError::Io { .. } => "Io",
        }
    }
}

/// Machine-readable summary written to stderr when a run does not pass.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureSummary {
    pub schema: u32,
    pub kind: String,
    pub exit_code: u8,
    pub message: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

impl FailureSummary {
    pub fn from_error(e: &CliError) -> Self {
        FailureSummary {
            schema: SCHEMA,
            kind: e.kind().to_string(),
            exit_code: e.exit_code(),
            message: e.to_string(),
            failures: Vec::new(),
        }
    }

    pub fn verification(failures: Vec<String>) -> Self {
        FailureSummary {
            schema: SCHEMA,
            kind: "VerificationFailed".to_string(),
            exit_code: EXIT_VERIFICATION,
            message: format!("{} checks failed", failures.len()),
            failures,
        }
    }
}
