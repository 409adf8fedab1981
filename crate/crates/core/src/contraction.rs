//! Ordinary Schwinger map and the large-j contraction to the generalized
//! Weyl-Heisenberg algebra.
//!
//! On the sector `n₊ + n₋ = 2j` the structure function becomes
//! `Φ_j(n) = n (2j + 1 − n) ∏ᵢ (1 + κᵢ (n − 1))`. Rescaling
//! `a± = J± / √(2j)` gives `a₊a₋ = Φ_j(n) / (2j) = Φ_∞(n) (2j + 1 − n) / (2j)`,
//! which tends to `Φ_∞(n)` with error exactly `Φ_∞(n) (n − 1) / (2j)`.

use alloc::format;
use alloc::vec::Vec;

use thiserror::Error;

use crate::kernel::{f_wh, phi_at_level, phi_inf, HalfInt, KappaVector};
use crate::matrix::{Basis, Matrix, OpLabel, OperatorMatrix};
use crate::report::{Check, VerificationReport};
use crate::repu2::Representation;
use crate::scalar::{Ring, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContractionError {
    #[error("j = {j} is too small: need 2j ≥ max(n_max, 1) = {needed}")]
    DomainTooSmall { j: HalfInt, needed: i64 },
    #[error("structure function is negative at level {level}")]
    NegativeStructure { level: i64 },
}

/// `(n₊, n₋) ↦ (j, m) = ((n₊ + n₋)/2, (n₊ − n₋)/2)`.
pub fn boson_to_jm(n_plus: u32, n_minus: u32) -> (HalfInt, HalfInt) {
    let (p, m) = (i64::from(n_plus), i64::from(n_minus));
    (HalfInt::from_twice(p + m), HalfInt::from_twice(p - m))
}

/// Inverse of [`boson_to_jm`]: `n± = j ± m`.
pub fn jm_to_boson(j: HalfInt, m: HalfInt) -> Option<(u32, u32)> {
    let n_plus = j.sum_int(m)?;
    let n_minus = j.sum_int(-m)?;
    Some((u32::try_from(n_plus).ok()?, u32::try_from(n_minus).ok()?))
}

/// `Φ_j(n) = n (2j + 1 − n) ∏ᵢ (1 + κᵢ (n − 1))`.
pub fn phi_j<S: Scalar>(n: i64, j: HalfInt, kappa: &KappaVector<S>) -> S {
    phi_at_level(j, n, kappa)
}

/// Two ordinary bosons on the states with `n₊ + n₋ ≤ 2 j_max`, ordered by
/// total quanta and then by ascending `n₊` (ascending `m` inside a sector).
#[derive(Clone, Debug)]
pub struct SchwingerOps<T> {
    pub states: Vec<(u32, u32)>,
    pub n_plus: Matrix<T>,
    pub n_minus: Matrix<T>,
    pub j0: Matrix<T>,
    pub j3: Matrix<T>,
    pub jplus: Matrix<T>,
    pub jminus: Matrix<T>,
}

impl<T: Ring> SchwingerOps<T> {
    /// Indices of the states in the sector `n₊ + n₋ = 2j`, ascending `m`.
    pub fn sector_indices(&self, j: HalfInt) -> Vec<usize> {
        self.states
            .iter()
            .enumerate()
            .filter(|(_, &(p, m))| i64::from(p + m) == j.twice())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn sector_block(&self, op: &Matrix<T>, j: HalfInt) -> Matrix<T> {
        op.submatrix(&self.sector_indices(j))
    }
}

pub fn schwinger_ops<S: Scalar>(j_max: HalfInt) -> SchwingerOps<S::Root> {
    let cap = j_max.twice().max(0) as u32;
    let states: Vec<(u32, u32)> = (0..=cap)
        .flat_map(|total| (0..=total).map(move |p| (p, total - p)))
        .collect();
    let index = |p: u32, m: u32| states.iter().position(|&s| s == (p, m));
    let dim = states.len();
    let sqrt_int = |n: u32| S::from_int(i64::from(n)).sqrt().expect("n ≥ 0");

    // Truncated creation operators; annihilators are their transposes.
    let mut create_plus = Matrix::zeros(dim);
    let mut create_minus = Matrix::zeros(dim);
    for (col, &(p, m)) in states.iter().enumerate() {
        if let Some(row) = index(p + 1, m) {
            create_plus.set(row, col, sqrt_int(p + 1));
        }
        if let Some(row) = index(p, m + 1) {
            create_minus.set(row, col, sqrt_int(m + 1));
        }
    }
    let annihilate_plus = create_plus.transpose();
    let annihilate_minus = create_minus.transpose();
    let n_plus = &create_plus * &annihilate_plus;
    let n_minus = &create_minus * &annihilate_minus;
    let half = S::Root::from(S::from_ratio(1, 2));
    let j0 = (&n_plus + &n_minus).scale(&half);
    let j3 = (&n_plus - &n_minus).scale(&half);
    let jplus = &create_plus * &annihilate_minus;
    let jminus = &create_minus * &annihilate_plus;
    SchwingerOps {
        states,
        n_plus,
        n_minus,
        j0,
        j3,
        jplus,
        jminus,
    }
}

/// Verifies the ordinary u(2) relations of the two-boson realization sector
/// by sector, together with `J₀ + J₃ = N` and `J₀ − J₃ = 2j − N`.
pub fn schwinger_u2_check<S: Scalar>(j_max: HalfInt) -> VerificationReport {
    let ops = schwinger_ops::<S>(j_max);
    let mut report = VerificationReport::new();
    let two = S::Root::from(S::from_int(2));
    for twice_j in 0..=j_max.twice().max(0) {
        let j = HalfInt::from_twice(twice_j);
        let block = |m: &Matrix<S::Root>| ops.sector_block(m, j);
        let (j0, j3, jp, jm) = (block(&ops.j0), block(&ops.j3), block(&ops.jplus), block(&ops.jminus));
        let n = block(&ops.n_plus);
        let d = j0.dim();
        let zero = Matrix::zeros(d);
        let tag = |s: &str| format!("sector j={j}: {s}");
        report.push(Check::matrices(tag("[J3,J+] = J+"), &jp, &j3.commutator(&jp), None));
        report.push(Check::matrices(
            tag("[J3,J-] = -J-"),
            &jm.scale(&-S::Root::one()),
            &j3.commutator(&jm),
            None,
        ));
        report.push(Check::matrices(
            tag("[J+,J-] = 2J3"),
            &j3.scale(&two),
            &jp.commutator(&jm),
            None,
        ));
        for (name, op) in [("J3", &j3), ("J+", &jp), ("J-", &jm)] {
            report.push(Check::matrices(
                tag(&format!("[J0,{name}] = 0")),
                &zero,
                &j0.commutator(op),
                None,
            ));
        }
        report.push(Check::matrices(tag("J0+J3 = N"), &n, &(&j0 + &j3), None));
        let two_j = Matrix::identity(d).scale(&S::Root::from(S::from_int(twice_j)));
        report.push(Check::matrices(tag("J0-J3 = 2j-N"), &(&two_j - &n), &(&j0 - &j3), None));
    }
    report
}

#[derive(Clone, Debug, PartialEq)]
pub struct ContractionRow<S> {
    pub j: HalfInt,
    pub n: i64,
    /// `Φ_j(n) / (2j)`
    pub contracted: S,
    /// `Φ_∞(n)`
    pub limit: S,
    pub abs_error: S,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ContractionTable<S> {
    pub kappa: KappaVector<S>,
    pub n_max: i64,
    pub rows: Vec<ContractionRow<S>>,
}

/// Contracted versus limiting structure function for every `n ≤ n_max` and
/// every `j` in `j_list`; rows sorted by `(j, n)`.
pub fn contract_table<S: Scalar>(
    n_max: i64,
    kappa: &KappaVector<S>,
    j_list: &[HalfInt],
) -> Result<ContractionTable<S>, ContractionError> {
    let needed = n_max.max(1);
    if let Some(&j) = j_list.iter().find(|j| j.twice() < needed) {
        return Err(ContractionError::DomainTooSmall { j, needed });
    }
    if let Some(level) = (1..=n_max).find(|&n| phi_inf(n, kappa).is_negative()) {
        return Err(ContractionError::NegativeStructure { level });
    }
    let mut js = j_list.to_vec();
    js.sort();
    js.dedup();
    let mut rows = Vec::with_capacity(js.len() * (n_max as usize + 1));
    for j in js {
        let two_j = S::from_int(j.twice());
        for n in 0..=n_max {
            let contracted = phi_j(n, j, kappa) / two_j.clone();
            let limit = phi_inf(n, kappa);
            let diff = contracted.clone() - limit.clone();
            let abs_error = if diff.is_negative() { -diff } else { diff };
            rows.push(ContractionRow {
                j,
                n,
                contracted,
                limit,
                abs_error,
            });
        }
    }
    Ok(ContractionTable {
        kappa: kappa.clone(),
        n_max,
        rows,
    })
}

/// `a± = J± / √(2j)` on a representation with `j > 0`.
pub fn contracted_ladder<S: Scalar>(
    rep: &Representation<S>,
) -> Option<(Matrix<S::Root>, Matrix<S::Root>)> {
    let scale = S::from_int(rep.j().twice()).sqrt()?;
    let inv = S::Root::one().try_div(&scale)?;
    Some((rep.jplus.matrix.scale(&inv), rep.jminus.matrix.scale(&inv)))
}

/// One-mode operators `a⁺, a⁻, N` of `A_κ` on `n_cap` number states.
#[derive(Clone, Debug)]
pub struct OneModeOps<T> {
    pub create: OperatorMatrix<T>,
    pub annihilate: OperatorMatrix<T>,
    pub number: OperatorMatrix<T>,
    /// `F(n_cap) = 0`: the truncation is the true end of the chain.
    pub closed: bool,
}

pub fn one_mode_ops<S: Scalar>(kappa: &S, n_cap: usize) -> Result<OneModeOps<S::Root>, ContractionError> {
    let mut create = Matrix::zeros(n_cap);
    for n in 1..n_cap as i64 {
        let root = f_wh(n, kappa)
            .sqrt()
            .ok_or(ContractionError::NegativeStructure { level: n })?;
        create.set(n as usize, n as usize - 1, root);
    }
    let closed = f_wh::<S>(n_cap as i64, kappa).is_zero();
    let basis = Basis::Number { dim: n_cap };
    let number = Matrix::from_diag((0..n_cap as i64).map(|n| S::Root::from(S::from_int(n))));
    Ok(OneModeOps {
        annihilate: OperatorMatrix::new(OpLabel::Jminus, basis.clone(), create.transpose()),
        create: OperatorMatrix::new(OpLabel::Jplus, basis.clone(), create),
        number: OperatorMatrix::new(OpLabel::Other, basis, number),
        closed,
    })
}

/// Verifies `a⁺a⁻ = F(N)`, `[N, a±] = ±a±` and `[a⁻, a⁺] = I + 2κN`. The
/// last identity is restricted to levels whose image under `a⁺` stays
/// inside the truncation unless the space closes exactly.
pub fn a_kappa_check<S: Scalar>(kappa: &S, n_cap: usize) -> Result<VerificationReport, ContractionError> {
    let ops = one_mode_ops(kappa, n_cap)?;
    let (ap, am, num) = (&ops.create.matrix, &ops.annihilate.matrix, &ops.number.matrix);
    let root = |x: S| S::Root::from(x);
    let levels = || 0..n_cap as i64;
    let interior: Vec<bool> = levels()
        .map(|n| ops.closed || n + 1 < n_cap as i64)
        .collect();

    let mut report = VerificationReport::new();
    let f = Matrix::from_diag(levels().map(|n| root(f_wh(n, kappa))));
    report.push(Check::matrices("a+a- = F(N)", &f, &(ap * am), None));
    report.push(Check::matrices("[N,a+] = a+", ap, &num.commutator(ap), None));
    report.push(Check::matrices(
        "[N,a-] = -a-",
        &am.scale(&-S::Root::one()),
        &num.commutator(am),
        None,
    ));
    let two_kappa = S::from_int(2) * kappa.clone();
    let rhs = Matrix::from_diag(levels().map(|n| root(S::one() + two_kappa.clone() * S::from_int(n))));
    report.push(Check::matrices(
        "[a-,a+] = I + 2κN",
        &rhs,
        &am.commutator(ap),
        Some(&interior),
    ));
    Ok(report)
}
