//! JSON documents and CSV tables written by the command-line tool.

use polyu2_core::contraction::ContractionTable;
use polyu2_core::higgs::{FockState, SectorMap, TwoModeSpace};
use polyu2_core::report::Witness;
use polyu2_core::scalar::format_f64_17;
use polyu2_core::{
    Basis, Check, HalfInt, KappaVector, Matrix, OpLabel, OperatorMatrix, VerificationReport,
};
use polyu2_core::bargmann::CoherentState;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::encode::{Carrier, Entry, Mode, ValueError};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error(transparent)]
    Value(#[from] ValueError),
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

/// Top-level wrapper carried by every JSON output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Document<T> {
    pub schema: u32,
    pub command: String,
    pub mode: Mode,
    pub all_passed: bool,
    pub results: Vec<T>,
}

impl<T: Serialize> Document<T> {
    pub fn to_json(&self) -> Result<String, FormatError> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}

pub fn kappa_text<S: Carrier>(kappa: &KappaVector<S>) -> Vec<String> {
    kappa.params().iter().map(Carrier::to_text).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BasisDoc {
    Levels { j: String, levels: Vec<i64> },
    TwoMode { states: Vec<[u32; 2]> },
    Number { dim: usize },
}

impl From<&Basis> for BasisDoc {
    fn from(b: &Basis) -> Self {
        match b {
            Basis::Levels { j, levels } => BasisDoc::Levels {
                j: j.to_string(),
                levels: levels.clone(),
            },
            Basis::TwoMode { states } => BasisDoc::TwoMode {
                states: states.iter().map(|s| [s.n1, s.n2]).collect(),
            },
            Basis::Number { dim } => BasisDoc::Number { dim: *dim },
        }
    }
}

impl TryFrom<&BasisDoc> for Basis {
    type Error = FormatError;

    fn try_from(b: &BasisDoc) -> Result<Self, FormatError> {
        Ok(match b {
            BasisDoc::Levels { j, levels } => Basis::Levels {
                j: j.parse::<HalfInt>()
                    .map_err(|e| FormatError::Malformed(e.to_string()))?,
                levels: levels.clone(),
            },
            BasisDoc::TwoMode { states } => Basis::TwoMode {
                states: states.iter().map(|&[a, b]| FockState::new(a, b)).collect(),
            },
            BasisDoc::Number { dim } => Basis::Number { dim: *dim },
        })
    }
}

fn label_text(label: OpLabel) -> &'static str {
    match label {
        OpLabel::J0 => "J0",
        OpLabel::J3 => "J3",
        OpLabel::Jplus => "J+",
        OpLabel::Jminus => "J-",
        OpLabel::Other => "other",
    }
}

fn parse_label(s: &str) -> Result<OpLabel, FormatError> {
    Ok(match s {
        "J0" => OpLabel::J0,
        "J3" => OpLabel::J3,
        "J+" => OpLabel::Jplus,
        "J-" => OpLabel::Jminus,
        "other" => OpLabel::Other,
        _ => return Err(FormatError::Malformed(format!("unknown operator label `{s}`"))),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorDoc {
    pub label: String,
    pub dim: usize,
    pub basis: BasisDoc,
    /// Row-major.
    pub entries: Vec<Vec<Entry>>,
}

impl OperatorDoc {
    pub fn encode<S: Carrier>(op: &OperatorMatrix<S::Root>) -> Self {
        OperatorDoc {
            label: label_text(op.label).to_string(),
            dim: op.dim(),
            basis: BasisDoc::from(&op.basis),
            entries: op
                .matrix
                .rows()
                .map(|row| row.iter().map(S::encode_root).collect())
                .collect(),
        }
    }

    pub fn decode<S: Carrier>(&self) -> Result<OperatorMatrix<S::Root>, FormatError> {
        let basis = Basis::try_from(&self.basis)?;
        if self.entries.len() != self.dim || basis.len() != self.dim {
            return Err(FormatError::Malformed("entry rows do not match dim".into()));
        }
        let mut m = Matrix::zeros(self.dim);
        for (r, row) in self.entries.iter().enumerate() {
            if row.len() != self.dim {
                return Err(FormatError::Malformed(format!("row {r} has {} entries", row.len())));
            }
            for (c, e) in row.iter().enumerate() {
                m.set(r, c, S::decode_root(e)?);
            }
        }
        Ok(OperatorMatrix::new(parse_label(&self.label)?, basis, m))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub row: usize,
    pub col: usize,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub name: String,
    pub passed: bool,
    /// `"0"` when the identity holds exactly.
    pub residual: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub excluded: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub all_passed: bool,
    pub max_residual: String,
    pub checks: Vec<CheckDoc>,
}

impl From<&VerificationReport> for ReportDoc {
    fn from(r: &VerificationReport) -> Self {
        ReportDoc {
            all_passed: r.all_passed(),
            max_residual: format_f64_17(r.max_residual()),
            checks: r
                .checks
                .iter()
                .map(|c| CheckDoc {
                    name: c.name.clone(),
                    passed: c.passed,
                    residual: format_f64_17(c.residual),
                    witness: c.witness.as_ref().map(|w| WitnessDoc {
                        row: w.row,
                        col: w.col,
                        expected: w.expected.clone(),
                        actual: w.actual.clone(),
                    }),
                    excluded: c.excluded.clone(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&ReportDoc> for VerificationReport {
    type Error = FormatError;

    fn try_from(doc: &ReportDoc) -> Result<Self, FormatError> {
        let mut report = VerificationReport::new();
        for c in &doc.checks {
            let residual = c
                .residual
                .parse()
                .map_err(|_| FormatError::Malformed(format!("residual `{}`", c.residual)))?;
            report.push(Check {
                name: c.name.clone(),
                passed: c.passed,
                residual,
                witness: c.witness.as_ref().map(|w| Witness {
                    row: w.row,
                    col: w.col,
                    expected: w.expected.clone(),
                    actual: w.actual.clone(),
                }),
                excluded: c.excluded.clone(),
            });
        }
        Ok(report)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepDoc {
    pub j_twice: i64,
    pub kappa: Vec<String>,
    pub dim: usize,
    pub operators: Vec<OperatorDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub j_twice: i64,
    pub kappa: Vec<String>,
    pub dim: usize,
    pub report: ReportDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsRow {
    pub j_twice: i64,
    pub kappa: Vec<String>,
    pub dim: usize,
    /// The structure function vanishes exactly where the chain stops.
    pub clean: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractRow {
    pub j_twice: i64,
    pub n: i64,
    pub contracted: String,
    pub limit: String,
    pub abs_error: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractDoc {
    pub kappa: Vec<String>,
    pub n_max: i64,
    pub rows: Vec<ContractRow>,
}

impl ContractDoc {
    pub fn encode<S: Carrier>(t: &ContractionTable<S>) -> Self {
        ContractDoc {
            kappa: kappa_text(&t.kappa),
            n_max: t.n_max,
            rows: t
                .rows
                .iter()
                .map(|r| ContractRow {
                    j_twice: r.j.twice(),
                    n: r.n,
                    contracted: r.contracted.to_text(),
                    limit: r.limit.to_text(),
                    abs_error: r.abs_error.to_text(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorDoc {
    pub j_twice: i64,
    pub dim: usize,
    pub m_lo_twice: i64,
    pub m_hi_twice: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorReportDoc {
    pub kappa: String,
    pub cap: usize,
    pub closed: bool,
    pub sectors: Vec<SectorDoc>,
    pub total_dim: usize,
    pub report: ReportDoc,
}

impl SectorReportDoc {
    pub fn encode<S: Carrier>(
        space: &TwoModeSpace<S>,
        map: &SectorMap,
        report: &VerificationReport,
    ) -> Self {
        SectorReportDoc {
            kappa: space.kappa.to_text(),
            cap: space.cap,
            closed: space.closed,
            sectors: map
                .sectors
                .iter()
                .map(|s| SectorDoc {
                    j_twice: s.j.twice(),
                    dim: s.dim(),
                    m_lo_twice: s.m_lo.twice(),
                    m_hi_twice: s.m_hi.twice(),
                })
                .collect(),
            total_dim: map.total_dim(),
            report: ReportDoc::from(report),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoherentDoc {
    pub j_twice: i64,
    pub kappa: String,
    /// Kernel coefficients `aₙ`, `n = 0, …, 2j`.
    pub coeffs: Vec<Entry>,
    pub z: [String; 2],
    pub norm2: String,
}

impl CoherentDoc {
    pub fn encode<S: Carrier>(c: &CoherentState<S>) -> Self {
        CoherentDoc {
            j_twice: c.j.twice(),
            kappa: c.kappa.to_text(),
            coeffs: c.a.iter().map(S::encode_root).collect(),
            z: [c.z_re.to_text(), c.z_im.to_text()],
            norm2: c.norm2.to_text(),
        }
    }

    pub fn decode<S: Carrier>(&self) -> Result<CoherentState<S>, FormatError> {
        Ok(CoherentState {
            j: HalfInt::from_twice(self.j_twice),
            kappa: S::parse_value(&self.kappa)?,
            a: self
                .coeffs
                .iter()
                .map(S::decode_root)
                .collect::<Result<_, _>>()?,
            z_re: S::parse_value(&self.z[0])?,
            z_im: S::parse_value(&self.z[1])?,
            norm2: S::parse_value(&self.norm2)?,
        })
    }
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> Result<String, FormatError> {
    let bytes = w
        .into_inner()
        .map_err(|e| FormatError::Malformed(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| FormatError::Malformed(e.to_string()))
}

/// `j` as a plain decimal: `5`, `2.5`.
pub fn halfint_decimal(j: HalfInt) -> String {
    let t = j.twice();
    if t % 2 == 0 {
        (t / 2).to_string()
    } else {
        let sign = if t < 0 { "-" } else { "" };
        format!("{sign}{}.5", t.abs() / 2)
    }
}

/// Columns `j,n,contracted,limit,abs_error`; values have 17 significant digits.
pub fn contraction_csv<S: Carrier>(t: &ContractionTable<S>) -> Result<String, FormatError> {
    let mut w = csv_writer();
    w.write_record(["j", "n", "contracted", "limit", "abs_error"])?;
    for r in &t.rows {
        w.write_record([
            halfint_decimal(r.j),
            r.n.to_string(),
            r.contracted.decimal(),
            r.limit.decimal(),
            r.abs_error.decimal(),
        ])?;
    }
    finish(w)
}

/// Columns `j,kappa,dim,clean`; κ components are separated by `;`.
pub fn dims_csv(rows: &[DimsRow]) -> Result<String, FormatError> {
    let mut w = csv_writer();
    w.write_record(["j", "kappa", "dim", "clean"])?;
    for r in rows {
        w.write_record([
            halfint_decimal(HalfInt::from_twice(r.j_twice)),
            r.kappa.join(";"),
            r.dim.to_string(),
            r.clean.to_string(),
        ])?;
    }
    finish(w)
}
