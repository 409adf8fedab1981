//! Schwinger realization from two `A_κ` bosons and the cubic Higgs algebra.
//!
//! With `F(n) = n (1 + κ (n − 1))` for each mode, the bilinears
//! `j₊ = a₁⁺a₂⁻`, `j₋ = a₁⁻a₂⁺`, `j₃ = (N₁ − N₂)/2`, `j₀ = (N₁ + N₂)/2`
//! close on
//!
//! ```text
//! [j₊, j₋] = 2 j₃ (1 − κ + 2κ j₀ (1 + κ j₀)) − 4κ² j₃³
//! ```
//!
//! For `κ < 0` with `−1/κ ∈ ℕ*` each mode stops at `d = 1 − 1/κ` states and
//! the space is exactly `d²`-dimensional. For `κ ≥ 0` the modes are cut at a
//! user cap and identities are checked only on the interior window.

use alloc::format;
use alloc::vec::Vec;

use thiserror::Error;

use crate::kernel::{f_higgs, f_wh, HalfInt};
use crate::matrix::{Basis, Matrix, OpLabel, OperatorMatrix};
use crate::report::{Check, VerificationReport};
use crate::scalar::{Ring, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HiggsError {
    #[error("κ = {kappa} < 0 needs -1/κ to be a positive integer")]
    UnsupportedKappa { kappa: alloc::string::String },
    #[error("κ < 0 fixes the per-mode cap to d = {expected}, got {got}")]
    CapMismatch { expected: usize, got: usize },
    #[error("cap must be at least 1")]
    EmptyCap,
    #[error("sector j = {j} is clipped by the cap {cap}")]
    SectorTruncated { j: HalfInt, cap: usize },
    #[error("sector j = {j} does not exist in a space with cap {cap}")]
    NoSuchSector { j: HalfInt, cap: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FockState {
    pub n1: u32,
    pub n2: u32,
}

impl FockState {
    pub const fn new(n1: u32, n2: u32) -> Self {
        FockState { n1, n2 }
    }

    /// `(j, m) = ((n₁ + n₂)/2, (n₁ − n₂)/2)`.
    pub fn jm(self) -> (HalfInt, HalfInt) {
        let (a, b) = (i64::from(self.n1), i64::from(self.n2));
        (HalfInt::from_twice(a + b), HalfInt::from_twice(a - b))
    }
}

/// `d = 1 − 1/κ` when `κ < 0` and `−1/κ` is a positive integer.
pub fn closure_dimension<S: Scalar>(kappa: &S) -> Option<usize> {
    if !kappa.is_negative() {
        return None;
    }
    let k = (-(S::one() / kappa.clone())).as_integer()?;
    (k >= 1).then(|| k as usize + 1)
}

#[derive(Clone, Debug, PartialEq)]
pub struct TwoModeSpace<S> {
    pub kappa: S,
    /// Exclusive per-mode bound on occupation numbers.
    pub cap: usize,
    /// Lexicographic in `(n1, n2)`.
    pub states: Vec<FockState>,
    pub closed: bool,
}

pub fn build_two_mode<S: Scalar>(kappa: S, cap: usize) -> Result<TwoModeSpace<S>, HiggsError> {
    if cap == 0 {
        return Err(HiggsError::EmptyCap);
    }
    let closed = if kappa.is_negative() {
        let d = closure_dimension(&kappa).ok_or_else(|| HiggsError::UnsupportedKappa {
            kappa: format!("{kappa}"),
        })?;
        if d != cap {
            return Err(HiggsError::CapMismatch {
                expected: d,
                got: cap,
            });
        }
        true
    } else {
        false
    };
    let c = cap as u32;
    let states = (0..c)
        .flat_map(|n1| (0..c).map(move |n2| FockState::new(n1, n2)))
        .collect();
    Ok(TwoModeSpace {
        kappa,
        cap,
        states,
        closed,
    })
}

/// Creation, annihilation and number operators of both modes.
#[derive(Clone, Debug)]
pub struct BosonOps<T> {
    pub a1_plus: Matrix<T>,
    pub a1_minus: Matrix<T>,
    pub a2_plus: Matrix<T>,
    pub a2_minus: Matrix<T>,
    pub n1: Matrix<T>,
    pub n2: Matrix<T>,
}

#[derive(Clone, Debug)]
pub struct HiggsOps<T> {
    pub jplus: OperatorMatrix<T>,
    pub jminus: OperatorMatrix<T>,
    pub j3: OperatorMatrix<T>,
    pub j0: OperatorMatrix<T>,
}

impl<S: Scalar> TwoModeSpace<S> {
    pub fn dim(&self) -> usize {
        self.states.len()
    }

    pub fn index_of(&self, state: FockState) -> Option<usize> {
        let cap = self.cap as u32;
        (state.n1 < cap && state.n2 < cap).then(|| (state.n1 * cap + state.n2) as usize)
    }

    /// States whose images under `j±` and the one-mode ladders stay in the
    /// space. Every state qualifies when the space is closed.
    pub fn interior_mask(&self) -> Vec<bool> {
        let last = self.cap as u32 - 1;
        self.states
            .iter()
            .map(|s| self.closed || (s.n1 < last && s.n2 < last))
            .collect()
    }

    fn f(&self, n: u32) -> S {
        f_wh(i64::from(n), &self.kappa)
    }

    fn sqrt_f(&self, n: u32) -> S::Root {
        self.f(n)
            .sqrt()
            .expect("occupation numbers below the cap have F(n) ≥ 0")
    }

    pub fn boson_ops(&self) -> BosonOps<S::Root> {
        let dim = self.dim();
        let mut a1_plus = Matrix::zeros(dim);
        let mut a2_plus = Matrix::zeros(dim);
        for (col, s) in self.states.iter().enumerate() {
            if let Some(row) = self.index_of(FockState::new(s.n1 + 1, s.n2)) {
                a1_plus.set(row, col, self.sqrt_f(s.n1 + 1));
            }
            if let Some(row) = self.index_of(FockState::new(s.n1, s.n2 + 1)) {
                a2_plus.set(row, col, self.sqrt_f(s.n2 + 1));
            }
        }
        let number = |pick: fn(&FockState) -> u32| {
            Matrix::from_diag(
                self.states
                    .iter()
                    .map(|s| S::Root::from(S::from_int(i64::from(pick(s))))),
            )
        };
        BosonOps {
            a1_minus: a1_plus.transpose(),
            a2_minus: a2_plus.transpose(),
            a1_plus,
            a2_plus,
            n1: number(|s| s.n1),
            n2: number(|s| s.n2),
        }
    }

    fn basis(&self) -> Basis {
        Basis::TwoMode {
            states: self.states.clone(),
        }
    }
}

pub fn build_higgs_ops<S: Scalar>(space: &TwoModeSpace<S>) -> HiggsOps<S::Root> {
    let b = space.boson_ops();
    let half = S::Root::from(S::from_ratio(1, 2));
    let basis = space.basis();
    let op = |label, m| OperatorMatrix::new(label, basis.clone(), m);
    HiggsOps {
        jplus: op(OpLabel::Jplus, &b.a1_plus * &b.a2_minus),
        jminus: op(OpLabel::Jminus, &b.a1_minus * &b.a2_plus),
        j3: op(OpLabel::J3, (&b.n1 - &b.n2).scale(&half)),
        j0: op(OpLabel::J0, (&b.n1 + &b.n2).scale(&half)),
    }
}

/// Eigenvalue of `2 j₃ (1 − κ + 2κ j₀ (1 + κ j₀)) − 4κ² j₃³` on a state with
/// `j₀ = j` and `j₃ = m`.
pub fn higgs_rhs<S: Scalar>(j: HalfInt, m: HalfInt, kappa: &S) -> S {
    let (j, m): (S, S) = (j.to_scalar(), m.to_scalar());
    let k = kappa.clone();
    let two = S::from_int(2);
    let inner = S::one() - k.clone() + two.clone() * k.clone() * j.clone() * (S::one() + k.clone() * j);
    two * m.clone() * inner - S::from_int(4) * k.clone() * k * m.clone() * m.clone() * m
}

/// Verifies the Higgs relations entrywise on the interior window.
pub fn verify_higgs<S: Scalar>(space: &TwoModeSpace<S>) -> VerificationReport {
    let ops = build_higgs_ops(space);
    let (jp, jm) = (&ops.jplus.matrix, &ops.jminus.matrix);
    let (j3, j0) = (&ops.j3.matrix, &ops.j0.matrix);
    let interior = space.interior_mask();
    let dim = space.dim();
    let k = S::Root::from(space.kappa.clone());
    let one = Matrix::identity(dim);
    let scalar = |x: S| S::Root::from(x);

    // 2 j3 (I − κ I + 2κ j0 (I + κ j0)) − 4κ² j3³ built from the matrices
    let inner = &(&one - &one.scale(&k)) + &(j0 * &(&one + &j0.scale(&k))).scale(&(k.clone() * scalar(S::from_int(2))));
    let cubic = &(j3 * &(j3 * j3)).scale(&(k.clone() * k.clone() * scalar(S::from_int(4))));
    let rhs = &(j3 * &inner).scale(&scalar(S::from_int(2))) - cubic;

    let mut report = VerificationReport::new();
    report.push(Check::matrices(
        "[j+,j-] = 2j3(1-κ+2κj0(1+κj0)) - 4κ²j3³",
        &rhs,
        &jp.commutator(jm),
        Some(&interior),
    ));
    // the same identity through the scalar eigenvalue formula
    let rhs_scalar = Matrix::from_diag(space.states.iter().map(|s| {
        let (j, m) = s.jm();
        scalar(higgs_rhs(j, m, &space.kappa))
    }));
    report.push(Check::matrices("cubic rhs eigenvalues", &rhs_scalar, &rhs, None));
    report.push(Check::matrices("[j3,j+] = j+", jp, &j3.commutator(jp), None));
    report.push(Check::matrices(
        "[j3,j-] = -j-",
        &jm.scale(&-S::Root::one()),
        &j3.commutator(jm),
        None,
    ));
    let zero = Matrix::zeros(dim);
    for (name, op) in [("j3", j3), ("j+", jp), ("j-", jm)] {
        report.push(Check::matrices(
            format!("[j0,{name}] = 0"),
            &zero,
            &j0.commutator(op),
            None,
        ));
    }
    report.push(Check::matrices("j+ = (j-)^†", &jm.transpose(), jp, None));
    report
}

#[derive(Clone, Debug, PartialEq)]
pub struct Sector {
    pub j: HalfInt,
    /// Ascending `m`.
    pub states: Vec<FockState>,
    pub m_lo: HalfInt,
    pub m_hi: HalfInt,
}

impl Sector {
    pub fn dim(&self) -> usize {
        self.states.len()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SectorMap {
    pub sectors: Vec<Sector>,
}

impl SectorMap {
    pub fn total_dim(&self) -> usize {
        self.sectors.iter().map(Sector::dim).sum()
    }

    pub fn get(&self, j: HalfInt) -> Option<&Sector> {
        self.sectors.iter().find(|s| s.j == j)
    }
}

/// Groups states by `j = (n₁ + n₂)/2`; `j` runs over `0, 1/2, …, cap − 1`.
pub fn sector_decomposition<S: Scalar>(space: &TwoModeSpace<S>) -> SectorMap {
    let last = space.cap as i64 - 1;
    let sectors = (0..=2 * last)
        .map(|twice_j| {
            let j = HalfInt::from_twice(twice_j);
            let mut states: Vec<FockState> = space
                .states
                .iter()
                .copied()
                .filter(|s| i64::from(s.n1 + s.n2) == twice_j)
                .collect();
            states.sort_by_key(|s| s.n1);
            let m_lo = (-j).max(j - HalfInt::from_int(last));
            let m_hi = j.min(HalfInt::from_int(last) - j);
            Sector {
                j,
                states,
                m_lo,
                m_hi,
            }
        })
        .collect();
    SectorMap { sectors }
}

impl<S: Scalar> TwoModeSpace<S> {
    pub fn sector_indices(&self, sector: &Sector) -> Vec<usize> {
        sector
            .states
            .iter()
            .map(|&s| self.index_of(s).expect("sector states belong to the space"))
            .collect()
    }
}

/// Checks that every operator maps each sector into itself.
pub fn block_diagonal_check<S: Scalar>(space: &TwoModeSpace<S>) -> VerificationReport {
    let ops = build_higgs_ops(space);
    let mut report = VerificationReport::new();
    for op in [&ops.jplus, &ops.jminus, &ops.j3, &ops.j0] {
        let mut leak = op.matrix.clone();
        for (r, sr) in space.states.iter().enumerate() {
            for (c, sc) in space.states.iter().enumerate() {
                if sr.n1 + sr.n2 == sc.n1 + sc.n2 {
                    leak.set(r, c, S::Root::zero());
                }
            }
        }
        report.push(Check::matrices(
            format!("{:?} preserves n1+n2", op.label),
            &Matrix::zeros(space.dim()),
            &leak,
            None,
        ));
    }
    report
}

/// Restriction of each Higgs operator to the sector `j`, in ascending `m`.
pub fn sector_ops<S: Scalar>(
    space: &TwoModeSpace<S>,
    j: HalfInt,
) -> Result<HiggsOps<S::Root>, HiggsError> {
    let map = sector_decomposition(space);
    let sector = map.get(j).ok_or(HiggsError::NoSuchSector { j, cap: space.cap })?;
    let idx = space.sector_indices(sector);
    let ops = build_higgs_ops(space);
    let basis = Basis::TwoMode {
        states: sector.states.clone(),
    };
    let restrict = |op: &OperatorMatrix<S::Root>| {
        OperatorMatrix::new(op.label, basis.clone(), op.matrix.submatrix(&idx))
    };
    Ok(HiggsOps {
        jplus: restrict(&ops.jplus),
        jminus: restrict(&ops.jminus),
        j3: restrict(&ops.j3),
        j0: restrict(&ops.j0),
    })
}

/// Ladder form on an untruncated sector, `n = j + m = n₁`:
/// `j₋|n⟩ = √f(n)|n−1⟩`, `j₊|n⟩ = √f(n+1)|n+1⟩`, `j₃|n⟩ = (n − j)|n⟩`,
/// and `j₊j₋ = f(N)`.
pub fn sector_ladder_check<S: Scalar>(
    space: &TwoModeSpace<S>,
    j: HalfInt,
) -> Result<VerificationReport, HiggsError> {
    if j.twice() < 0 || j.twice() > 2 * (space.cap as i64 - 1) {
        return Err(HiggsError::NoSuchSector { j, cap: space.cap });
    }
    if j.twice() > space.cap as i64 - 1 {
        return Err(HiggsError::SectorTruncated { j, cap: space.cap });
    }
    let ops = sector_ops(space, j)?;
    let d = (j.twice() + 1) as usize;
    let kappa = &space.kappa;
    let f = |n: i64| f_higgs(n, j, kappa);
    let sqrt_f = |n: i64| f(n).sqrt().expect("unitary sector has f(n) ≥ 0");

    let mut jplus = Matrix::zeros(d);
    for n in 0..d - 1 {
        jplus.set(n + 1, n, sqrt_f(n as i64 + 1));
    }
    let jminus = jplus.transpose();
    let j3 = Matrix::from_diag(
        (0..d as i64).map(|n| S::Root::from((HalfInt::from_int(n) - j).to_scalar::<S>())),
    );
    let fdiag = Matrix::from_diag((0..d as i64).map(|n| S::Root::from(f(n))));

    let mut report = VerificationReport::new();
    let tag = |s: &str| format!("sector j={j}: {s}");
    report.push(Check::matrices(tag("j- = √f(n) shift"), &jminus, &ops.jminus.matrix, None));
    report.push(Check::matrices(tag("j+ = √f(n+1) shift"), &jplus, &ops.jplus.matrix, None));
    report.push(Check::matrices(tag("j3 = n - j"), &j3, &ops.j3.matrix, None));
    report.push(Check::matrices(
        tag("j+j- = f(N)"),
        &fdiag,
        &(&ops.jplus.matrix * &ops.jminus.matrix),
        None,
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Rational, RadicalSum};
    use alloc::vec;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn h(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    fn apply(op: &Matrix<RadicalSum>, space: &TwoModeSpace<Rational>, s: FockState) -> Vec<(FockState, RadicalSum)> {
        let col = space.index_of(s).unwrap();
        space
            .states
            .iter()
            .enumerate()
            .filter(|(r, _)| !op.get(*r, col).is_zero())
            .map(|(r, t)| (*t, op.get(r, col).clone()))
            .collect()
    }

    #[test]
    fn two_mode_spaces() {
        let s = build_two_mode(q(0, 1), 3).unwrap();
        assert_eq!((s.dim(), s.closed), (9, false));
        let s = build_two_mode(q(-1, 2), 3).unwrap();
        assert_eq!((s.dim(), s.closed), (9, true));
        let s = build_two_mode(q(-1, 3), 4).unwrap();
        assert_eq!((s.dim(), s.closed), (16, true));
    }

    #[test]
    fn two_mode_rejections() {
        assert!(matches!(
            build_two_mode(q(-2, 3), 3),
            Err(HiggsError::UnsupportedKappa { .. })
        ));
        assert_eq!(
            build_two_mode(q(-1, 2), 4).unwrap_err(),
            HiggsError::CapMismatch { expected: 3, got: 4 }
        );
        assert_eq!(build_two_mode(q(1, 1), 0).unwrap_err(), HiggsError::EmptyCap);
    }

    #[test]
    fn raising_action() {
        let s = build_two_mode(q(0, 1), 3).unwrap();
        let ops = build_higgs_ops(&s);
        assert_eq!(
            apply(&ops.jplus.matrix, &s, FockState::new(1, 1)),
            vec![(FockState::new(2, 0), q(2, 1).sqrt().unwrap())]
        );
        let s = build_two_mode(q(1, 1), 3).unwrap();
        let ops = build_higgs_ops(&s);
        // √(F(2) F(1)) = √4, with F(2) = 2·2 and F(1) = 1
        assert_eq!(
            apply(&ops.jplus.matrix, &s, FockState::new(1, 1)),
            vec![(FockState::new(2, 0), q(4, 1).sqrt().unwrap())]
        );
        for n1 in 0..3 {
            assert!(apply(&ops.jplus.matrix, &s, FockState::new(n1, 0)).is_empty());
        }
    }

    #[test]
    fn cubic_witness() {
        // F(n1)F(n2+1) − F(n1+1)F(n2) at |3,1⟩ with F(n) = n²
        let f = |n: i64| f_wh(n, &q(1, 1));
        let lhs = f(3) * f(2) - f(4) * f(1);
        assert_eq!(lhs, q(20, 1));
        assert_eq!(higgs_rhs(h(4), h(2), &q(1, 1)), q(20, 1));

        let s = build_two_mode(q(1, 1), 5).unwrap();
        let ops = build_higgs_ops(&s);
        let c = ops.jplus.matrix.commutator(&ops.jminus.matrix);
        let i = s.index_of(FockState::new(3, 1)).unwrap();
        assert_eq!(c.get(i, i), &RadicalSum::from(q(20, 1)));
    }

    #[test]
    fn higgs_relations_hold() {
        for (kappa, cap) in [(q(0, 1), 4), (q(1, 1), 5), (q(-1, 2), 3), (q(-1, 3), 4), (q(2, 7), 4)] {
            let s = build_two_mode(kappa, cap).unwrap();
            let r = verify_higgs(&s);
            assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn truncated_boundary_would_fail() {
        // without the interior window the cap produces spurious residuals
        let s = build_two_mode(q(1, 1), 3).unwrap();
        let r = verify_higgs(&s);
        let cubic = &r.checks[0];
        assert!(cubic.passed);
        assert!(!cubic.excluded.is_empty());
        let ops = build_higgs_ops(&s);
        let c = ops.jplus.matrix.commutator(&ops.jminus.matrix);
        let i = s.index_of(FockState::new(2, 1)).unwrap();
        assert_ne!(c.get(i, i), &RadicalSum::from(higgs_rhs(h(3), h(1), &q(1, 1))));
    }

    #[test]
    fn sector_examples() {
        let s = build_two_mode(q(-1, 2), 3).unwrap();
        let map = sector_decomposition(&s);
        let js: Vec<_> = map.sectors.iter().map(|x| x.j.twice()).collect();
        let dims: Vec<_> = map.sectors.iter().map(Sector::dim).collect();
        assert_eq!(js, vec![0, 1, 2, 3, 4]);
        assert_eq!(dims, vec![1, 2, 3, 2, 1]);
        assert_eq!(map.total_dim(), 9);
        let top = map.get(h(3)).unwrap();
        assert_eq!((top.m_lo, top.m_hi), (h(-1), h(1)));

        let s = build_two_mode(q(0, 1), 2).unwrap();
        let dims: Vec<_> = sector_decomposition(&s).sectors.iter().map(Sector::dim).collect();
        assert_eq!(dims, vec![1, 2, 1]);
    }

    #[test]
    fn j0_is_constant_on_sectors() {
        let s = build_two_mode(q(1, 3), 4).unwrap();
        let map = sector_decomposition(&s);
        for sector in &map.sectors {
            let ops = sector_ops(&s, sector.j).unwrap();
            let want = Matrix::identity(sector.dim()).scale(&RadicalSum::from(sector.j.to_scalar::<Rational>()));
            assert_eq!(ops.j0.matrix, want);
        }
        assert!(block_diagonal_check(&s).all_passed());
    }

    #[test]
    fn ladder_examples() {
        let s = build_two_mode(q(0, 1), 3).unwrap();
        assert!(sector_ladder_check(&s, h(2)).unwrap().all_passed());
        let s = build_two_mode(q(1, 1), 3).unwrap();
        let ops = sector_ops(&s, h(2)).unwrap();
        let two = RadicalSum::from(q(2, 1));
        assert_eq!(ops.jplus.matrix.get(1, 0), &two);
        assert_eq!(ops.jplus.matrix.get(2, 1), &two);
        assert!(sector_ladder_check(&s, h(2)).unwrap().all_passed());
        // top of the chain
        assert!((0..3).all(|r| ops.jplus.matrix.get(r, 2).is_zero()));
    }

    #[test]
    fn ladder_rejects_clipped_sector() {
        let s = build_two_mode(q(0, 1), 3).unwrap();
        assert_eq!(
            sector_ladder_check(&s, h(3)).unwrap_err(),
            HiggsError::SectorTruncated { j: h(3), cap: 3 }
        );
        assert!(matches!(
            sector_ladder_check(&s, h(5)),
            Err(HiggsError::NoSuchSector { .. })
        ));
    }

    #[test]
    fn float_space_closure_detection() {
        let s = build_two_mode(-1.0 / 3.0, 4).unwrap();
        assert!(s.closed);
        assert!(verify_higgs(&s).all_passed());
    }
}
