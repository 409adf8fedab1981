//! Finite unitary representations of the polynomial u(2) algebra on the
//! `|j, m⟩` basis.
//!
//! States are indexed by the level `n = j + m`, lowest weight first, so `J₊`
//! is a subdiagonal shift with `(J₊)_{n+1,n} = √Φ(n+1)` where
//! `Φ(n) = Φ(j, n − j)`. The dimension is fixed by scanning `Φ(n)` upward
//! from `n = 1` until it stops being positive.

use alloc::format;
use alloc::vec::Vec;

use thiserror::Error;

use crate::kernel::{g_at_level, phi_at_level, HalfInt, KappaVector};
use crate::matrix::{Basis, Matrix, OpLabel, OperatorMatrix};
use crate::report::{Check, VerificationReport};
use crate::scalar::{Ring, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("j = {j}: Φ({level}) < 0 ends the ladder chain, no unitary truncation exists")]
    NonUnitarizable { j: HalfInt, level: i64 },
    #[error("J+ vanishes at power {jplus} but J- at power {jminus}")]
    NilpotencyMismatch { jplus: usize, jminus: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepBasis {
    pub j: HalfInt,
    pub levels: Vec<i64>,
}

impl RepBasis {
    pub fn dim(&self) -> usize {
        self.levels.len()
    }

    /// Weight `m = n − j` of each basis state.
    pub fn weights(&self) -> impl Iterator<Item = HalfInt> + '_ {
        let j = self.j;
        self.levels
            .iter()
            .map(move |&n| HalfInt::from_int(n) - j)
    }

    fn as_basis(&self) -> Basis {
        Basis::Levels {
            j: self.j,
            levels: self.levels.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Admissible {
    pub levels: Vec<i64>,
    /// `Φ(d) = 0` exactly; `false` means the chain is cut by a negative value.
    pub clean: bool,
}

impl Admissible {
    pub fn dim(&self) -> usize {
        self.levels.len()
    }
}

/// Longest run of levels `0, …, d − 1` with `Φ(n) > 0` for `1 ≤ n < d`.
pub fn admissible_levels<S: Scalar>(j: HalfInt, kappa: &KappaVector<S>) -> Admissible {
    assert!(j.twice() >= 0, "spin label must be nonnegative");
    let top = j.twice() + 1;
    let mut d = top;
    let mut clean = true;
    for n in 1..=top {
        let value = phi_at_level(j, n, kappa);
        if !value.is_positive() {
            d = n;
            clean = value.is_zero();
            break;
        }
    }
    Admissible {
        levels: (0..d).collect(),
        clean,
    }
}

pub fn dimension<S: Scalar>(j: HalfInt, kappa: &KappaVector<S>) -> usize {
    admissible_levels(j, kappa).dim()
}

#[derive(Clone, Debug, PartialEq)]
pub struct Representation<S: Scalar> {
    pub basis: RepBasis,
    pub kappa: KappaVector<S>,
    pub j0: OperatorMatrix<S::Root>,
    pub j3: OperatorMatrix<S::Root>,
    pub jplus: OperatorMatrix<S::Root>,
    pub jminus: OperatorMatrix<S::Root>,
}

impl<S: Scalar> Representation<S> {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn j(&self) -> HalfInt {
        self.basis.j
    }

    pub fn operators(&self) -> [&OperatorMatrix<S::Root>; 4] {
        [&self.j0, &self.j3, &self.jplus, &self.jminus]
    }
}

pub fn build_rep<S: Scalar>(
    j: HalfInt,
    kappa: &KappaVector<S>,
) -> Result<Representation<S>, RepError> {
    let adm = admissible_levels(j, kappa);
    let d = adm.dim();
    if !adm.clean {
        return Err(RepError::NonUnitarizable {
            j,
            level: d as i64,
        });
    }
    let basis = RepBasis {
        j,
        levels: adm.levels,
    };
    let j_root = S::Root::from(j.to_scalar::<S>());
    let j0 = Matrix::from_diag((0..d).map(|_| j_root.clone()));
    let j3 = Matrix::from_diag(basis.weights().map(|m| S::Root::from(m.to_scalar::<S>())));
    let mut jplus = Matrix::zeros(d);
    for n in 0..d.saturating_sub(1) {
        let value = phi_at_level(j, n as i64 + 1, kappa);
        let root = value
            .sqrt()
            .expect("admissible levels carry a positive structure function");
        jplus.set(n + 1, n, root);
    }
    let jminus = jplus.transpose();
    let b = basis.as_basis();
    Ok(Representation {
        j0: OperatorMatrix::new(OpLabel::J0, b.clone(), j0),
        j3: OperatorMatrix::new(OpLabel::J3, b.clone(), j3),
        jplus: OperatorMatrix::new(OpLabel::Jplus, b.clone(), jplus),
        jminus: OperatorMatrix::new(OpLabel::Jminus, b, jminus),
        basis,
        kappa: kappa.clone(),
    })
}

/// Checks every defining relation entrywise on the representation.
pub fn verify_structure<S: Scalar>(rep: &Representation<S>) -> VerificationReport {
    let j = rep.j();
    let d = rep.dim();
    let (j0, j3) = (&rep.j0.matrix, &rep.j3.matrix);
    let (jp, jm) = (&rep.jplus.matrix, &rep.jminus.matrix);
    let root = |x: S| S::Root::from(x);
    let levels = || 0..d as i64;

    let mut report = VerificationReport::new();
    report.push(Check::matrices("[J3,J+] = J+", jp, &j3.commutator(jp), None));
    report.push(Check::matrices(
        "[J3,J-] = -J-",
        &jm.scale(&-S::Root::one()),
        &j3.commutator(jm),
        None,
    ));
    let g = Matrix::from_diag(levels().map(|n| root(g_at_level(j, n, &rep.kappa))));
    report.push(Check::matrices("[J+,J-] = G(J3,J0)", &g, &jp.commutator(jm), None));
    report.push(Check::matrices("J+ = (J-)^†", &jm.transpose(), jp, None));
    let phi_lo = Matrix::from_diag(levels().map(|n| root(phi_at_level(j, n, &rep.kappa))));
    let phi_hi = Matrix::from_diag(levels().map(|n| root(phi_at_level(j, n + 1, &rep.kappa))));
    report.push(Check::matrices("J+J- = Φ(J3,J0)", &phi_lo, &(jp * jm), None));
    report.push(Check::matrices("J-J+ = Φ(J3+1,J0)", &phi_hi, &(jm * jp), None));
    let zero = Matrix::zeros(d);
    for (name, op) in [("J0", j0), ("J3", j3), ("J+", jp), ("J-", jm)] {
        report.push(Check::matrices(
            format!("[J0,{name}] = 0"),
            &zero,
            &j0.commutator(op),
            None,
        ));
    }
    report
}

/// Smallest `k ≥ 1` with `(J₊)ᵏ = 0`, checked against the same power of `J₋`.
pub fn nilpotency_index<S: Scalar>(rep: &Representation<S>) -> Result<usize, RepError> {
    let first_zero_power = |m: &Matrix<S::Root>| {
        let mut power = m.clone();
        let mut k = 1;
        while !power.is_zero() {
            power = &power * m;
            k += 1;
        }
        k
    };
    let jplus = first_zero_power(&rep.jplus.matrix);
    let jminus = first_zero_power(&rep.jminus.matrix);
    if jplus == jminus {
        Ok(jplus)
    } else {
        Err(RepError::NilpotencyMismatch { jplus, jminus })
    }
}
