//! Pass/fail records for identity checks.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::matrix::Matrix;
use crate::scalar::Ring;

/// Float-mode identities pass when the largest entry residual is at most
/// `FLOAT_REL_TOL · (1 + largest |entry|)`.
pub const FLOAT_REL_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub residual: f64,
    /// Worst entry, recorded only for failed checks.
    pub witness: Option<Witness>,
    /// Columns (input states) left out because truncation makes the identity
    /// inapplicable there.
    pub excluded: Vec<usize>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: true,
            residual: 0.0,
            witness: None,
            excluded: Vec::new(),
        }
    }

    /// A scalar check: `expected` against `actual`.
    pub fn scalar<T: Ring>(name: impl Into<String>, expected: &T, actual: &T) -> Self {
        let diff = actual.clone() - expected.clone();
        let residual = diff.to_f64().abs();
        let passed = if T::EXACT {
            diff.is_zero()
        } else {
            let scale = expected.to_f64().abs().max(actual.to_f64().abs());
            residual <= FLOAT_REL_TOL * (1.0 + scale)
        };
        Check {
            name: name.into(),
            passed,
            residual,
            witness: (!passed).then(|| Witness {
                row: 0,
                col: 0,
                expected: expected.to_string(),
                actual: actual.to_string(),
            }),
            excluded: Vec::new(),
        }
    }

    /// Entrywise comparison of two matrices, restricted to the columns with
    /// `cols[c] == true` when a mask is given.
    pub fn matrices<T: Ring>(
        name: impl Into<String>,
        expected: &Matrix<T>,
        actual: &Matrix<T>,
        cols: Option<&[bool]>,
    ) -> Self {
        let name = name.into();
        if expected.dim() != actual.dim() {
            return Check {
                passed: false,
                residual: f64::INFINITY,
                witness: Some(Witness {
                    row: 0,
                    col: 0,
                    expected: format!("dimension {}", expected.dim()),
                    actual: format!("dimension {}", actual.dim()),
                }),
                excluded: Vec::new(),
                name,
            };
        }
        let n = expected.dim();
        let included = |c: usize| cols.is_none_or(|mask| mask[c]);
        let mut residual = 0.0f64;
        let mut scale = 0.0f64;
        let mut exact_ok = true;
        let mut worst: Option<(usize, usize)> = None;
        for r in 0..n {
            for c in (0..n).filter(|&c| included(c)) {
                let (e, a) = (expected.get(r, c), actual.get(r, c));
                scale = scale.max(e.to_f64().abs()).max(a.to_f64().abs());
                let diff = a.clone() - e.clone();
                if diff.is_zero() {
                    continue;
                }
                exact_ok = false;
                let d = diff.to_f64().abs();
                if worst.is_none() || d > residual {
                    residual = residual.max(d);
                    worst = Some((r, c));
                }
            }
        }
        let passed = if T::EXACT {
            exact_ok
        } else {
            residual <= FLOAT_REL_TOL * (1.0 + scale)
        };
        Check {
            name,
            passed,
            residual,
            witness: worst.filter(|_| !passed).map(|(row, col)| Witness {
                row,
                col,
                expected: expected.get(row, col).to_string(),
                actual: actual.get(row, col).to_string(),
            }),
            excluded: match cols {
                Some(mask) => (0..n).filter(|&c| !mask[c]).collect(),
                None => Vec::new(),
            },
        }
    }

    pub fn with_excluded(mut self, excluded: Vec<usize>) -> Self {
        self.excluded = excluded;
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.residual).fold(0.0, f64::max)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Rational, Scalar};

    #[test]
    fn exact_mismatch_records_witness() {
        let a = Matrix::from_diag([Rational::from_int(1), Rational::from_int(2)]);
        let b = Matrix::from_diag([Rational::from_int(1), Rational::from_int(3)]);
        let c = Check::matrices("diag", &a, &b, None);
        assert!(!c.passed);
        assert_eq!(c.residual, 1.0);
        let w = c.witness.unwrap();
        assert_eq!((w.row, w.col), (1, 1));
        assert_eq!(w.expected, "2");
    }

    #[test]
    fn masked_columns_are_ignored() {
        let a = Matrix::from_diag([1.0, 2.0]);
        let b = Matrix::from_diag([1.0, 5.0]);
        let c = Check::matrices("diag", &a, &b, Some(&[true, false]));
        assert!(c.passed);
        assert_eq!(c.excluded, [1]);
    }

    #[test]
    fn float_tolerance_is_relative() {
        let a = Matrix::from_diag([1.0e6]);
        let b = Matrix::from_diag([1.0e6 + 1.0e-7]);
        assert!(Check::matrices("big", &a, &b, None).passed);
        let b = Matrix::from_diag([1.0e6 + 1.0e-3]);
        assert!(!Check::matrices("big", &a, &b, None).passed);
    }
}
