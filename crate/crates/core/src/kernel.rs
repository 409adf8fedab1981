//! Deformation parameters and the scalar structure functions.
//!
//! Everything here is a pure function of its arguments. Level-indexed forms
//! (`*_at_level`) take `n = j + m` directly and are what the matrix builders
//! use; the `(j, m)` forms check the half-integer parity first.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};
use core::str::FromStr;

use thiserror::Error;

use crate::scalar::Scalar;

/// An integer or half-integer, stored as twice its value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// `true` when `self ± other` are integers.
    pub const fn same_parity(self, other: HalfInt) -> bool {
        (self.twice - other.twice) % 2 == 0
    }

    /// Integer value of `self + other`, when it is one.
    pub fn sum_int(self, other: HalfInt) -> Option<i64> {
        let t = self.twice + other.twice;
        (t % 2 == 0).then_some(t / 2)
    }

    pub fn to_scalar<S: Scalar>(self) -> S {
        S::from_ratio(self.twice, 2)
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }
}

impl Add for HalfInt {
    type Output = HalfInt;

    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + rhs.twice)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;

    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - rhs.twice)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;

    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseHalfIntError {
    #[error("`{0}` is not a number of the form t/2 or an integer")]
    Malformed(alloc::string::String),
    #[error("`{0}` is not an integer or half-integer")]
    NotHalfInteger(alloc::string::String),
}

impl FromStr for HalfInt {
    type Err = ParseHalfIntError;

    /// Accepts `p/q` with `p/q` an integer or half-integer, or a bare integer.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let malformed = || ParseHalfIntError::Malformed(s.into());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (
                n.trim().parse::<i64>().map_err(|_| malformed())?,
                d.trim().parse::<i64>().map_err(|_| malformed())?,
            ),
            None => (s.parse::<i64>().map_err(|_| malformed())?, 1),
        };
        if den <= 0 {
            return Err(malformed());
        }
        let twice = num.checked_mul(2).ok_or_else(malformed)?;
        if twice % den != 0 {
            return Err(ParseHalfIntError::NotHalfInteger(s.into()));
        }
        Ok(HalfInt::from_twice(twice / den))
    }
}

/// Ordered deformation parameters `κ₁, …, κ_r`. The empty vector is the
/// undeformed algebra.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct KappaVector<S>(pub Vec<S>);

impl<S: Scalar> KappaVector<S> {
    pub fn new(params: Vec<S>) -> Self {
        KappaVector(params)
    }

    pub fn undeformed() -> Self {
        KappaVector(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn params(&self) -> &[S] {
        &self.0
    }

    /// `∏ᵢ (1 + κᵢ x)`.
    pub fn product_at(&self, x: &S) -> S {
        self.0
            .iter()
            .fold(S::one(), |acc, k| acc * (S::one() + k.clone() * x.clone()))
    }
}

/// Elementary symmetric coefficients `s₀ = 1, s₁, …, s_r`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymCoeffs<S>(pub Vec<S>);

impl<S: Scalar> SymCoeffs<S> {
    /// `Σᵢ sᵢ xⁱ`, by Horner's rule.
    pub fn eval(&self, x: &S) -> S {
        self.0
            .iter()
            .rev()
            .fold(S::zero(), |acc, s| acc * x.clone() + s.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("labels j = {j} and m = {m} do not differ by an integer")]
pub struct ParityError {
    pub j: HalfInt,
    pub m: HalfInt,
}

pub fn elementary_symmetric<S: Scalar>(kappa: &KappaVector<S>) -> SymCoeffs<S> {
    let mut s = Vec::with_capacity(kappa.len() + 1);
    s.push(S::one());
    for k in kappa.params() {
        s.push(S::zero());
        for i in (1..s.len()).rev() {
            let lower = s[i - 1].clone();
            s[i] = s[i].clone() + k.clone() * lower;
        }
    }
    SymCoeffs(s)
}

fn check_parity(j: HalfInt, m: HalfInt) -> Result<i64, ParityError> {
    j.sum_int(m).ok_or(ParityError { j, m })
}

/// `Φ` at level `n = j + m`: `n (2j + 1 − n) ∏ᵢ (1 + κᵢ (n − 1))`.
pub fn phi_at_level<S: Scalar>(j: HalfInt, n: i64, kappa: &KappaVector<S>) -> S {
    let upper = j.twice() + 1 - n;
    S::from_int(n) * S::from_int(upper) * kappa.product_at(&S::from_int(n - 1))
}

/// `Φ(j, m) = (j + m)(1 + j − m) ∏ᵢ (1 + κᵢ (j + m − 1))`.
pub fn phi<S: Scalar>(j: HalfInt, m: HalfInt, kappa: &KappaVector<S>) -> Result<S, ParityError> {
    check_parity(j, m).map(|n| phi_at_level(j, n, kappa))
}

/// `Φ(j, m)` through the elementary symmetric expansion; a cross-check on
/// [`phi`], which uses the product form.
pub fn phi_expanded<S: Scalar>(
    j: HalfInt,
    m: HalfInt,
    kappa: &KappaVector<S>,
) -> Result<S, ParityError> {
    let n = check_parity(j, m)?;
    let s = elementary_symmetric(kappa);
    Ok(S::from_int(n) * S::from_int(j.twice() + 1 - n) * s.eval(&S::from_int(n - 1)))
}

/// `G(j, m) = Φ(j, m) − Φ(j, m + 1)`, the eigenvalue of `[J₊, J₋]`.
pub fn g_fn<S: Scalar>(j: HalfInt, m: HalfInt, kappa: &KappaVector<S>) -> Result<S, ParityError> {
    let n = check_parity(j, m)?;
    Ok(g_at_level(j, n, kappa))
}

pub fn g_at_level<S: Scalar>(j: HalfInt, n: i64, kappa: &KappaVector<S>) -> S {
    phi_at_level(j, n, kappa) - phi_at_level(j, n + 1, kappa)
}

/// One-mode structure function `F(n) = n (1 + κ (n − 1))`.
pub fn f_wh<S: Scalar>(n: i64, kappa: &S) -> S {
    S::from_int(n) * (S::one() + kappa.clone() * S::from_int(n - 1))
}

/// Sector ladder function `f(n) = F(n) F(2j − n + 1)`.
pub fn f_higgs<S: Scalar>(n: i64, j: HalfInt, kappa: &S) -> S {
    let twice_j = j.twice();
    S::from_int(n)
        * S::from_int(twice_j + 1 - n)
        * (S::one() + kappa.clone() * S::from_int(n - 1))
        * (S::one() + kappa.clone() * S::from_int(twice_j - n))
}

/// Contracted structure function `Φ_∞(n) = n ∏ᵢ (1 + κᵢ (n − 1))`.
pub fn phi_inf<S: Scalar>(n: i64, kappa: &KappaVector<S>) -> S {
    S::from_int(n) * kappa.product_at(&S::from_int(n - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use alloc::vec;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn kv(params: &[(i64, i64)]) -> KappaVector<Rational> {
        KappaVector::new(params.iter().map(|&(n, d)| q(n, d)).collect())
    }

    fn h(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    #[test]
    fn elementary_symmetric_examples() {
        assert_eq!(elementary_symmetric(&kv(&[])).0, vec![q(1, 1)]);
        assert_eq!(
            elementary_symmetric(&kv(&[(2, 1), (3, 1)])).0,
            vec![q(1, 1), q(5, 1), q(6, 1)]
        );
        assert_eq!(
            elementary_symmetric(&kv(&[(0, 1), (0, 1), (0, 1)])).0,
            vec![q(1, 1), q(0, 1), q(0, 1), q(0, 1)]
        );
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(h(2), h(0), &kv(&[])), Ok(q(2, 1)));
        assert_eq!(phi(h(2), h(2), &kv(&[(-1, 2)])), Ok(q(1, 1)));
        assert_eq!(phi(h(3), h(3), &kv(&[(-1, 2)])), Ok(q(0, 1)));
    }

    #[test]
    fn phi_rejects_mixed_parity() {
        assert_eq!(
            phi(h(2), h(1), &kv(&[])),
            Err(ParityError { j: h(2), m: h(1) })
        );
        assert!(g_fn(h(3), h(0), &kv(&[])).is_err());
    }

    #[test]
    fn g_examples() {
        assert_eq!(g_fn(h(2), h(0), &kv(&[])), Ok(q(0, 1)));
        assert_eq!(g_fn(h(2), h(2), &kv(&[])), Ok(q(2, 1)));
        assert_eq!(g_fn(h(2), h(0), &kv(&[(1, 1)])), Ok(q(-2, 1)));
    }

    #[test]
    fn one_mode_and_sector_functions() {
        assert_eq!(f_wh(3, &q(0, 1)), q(3, 1));
        assert_eq!(f_wh(3, &q(1, 1)), q(9, 1));
        assert_eq!(f_wh(3, &q(-1, 2)), q(0, 1));
        assert_eq!(f_higgs(1, h(2), &q(0, 1)), q(2, 1));
        assert_eq!(f_higgs(1, h(2), &q(1, 1)), q(4, 1));
        assert_eq!(f_higgs(0, h(5), &q(1, 3)), q(0, 1));
    }

    #[test]
    fn contracted_structure_function() {
        assert_eq!(phi_inf(4, &kv(&[])), q(4, 1));
        assert_eq!(phi_inf(4, &kv(&[(1, 1)])), q(16, 1));
        assert_eq!(phi_inf(2, &kv(&[(1, 2), (-1, 4)])), q(9, 4));
    }

    #[test]
    fn halfint_parse_and_display() {
        assert_eq!("5/2".parse::<HalfInt>(), Ok(h(5)));
        assert_eq!("4/2".parse::<HalfInt>(), Ok(h(4)));
        assert_eq!("3".parse::<HalfInt>(), Ok(h(6)));
        assert_eq!("-1/2".parse::<HalfInt>(), Ok(h(-1)));
        assert!(matches!(
            "1/3".parse::<HalfInt>(),
            Err(ParseHalfIntError::NotHalfInteger(_))
        ));
        assert!("x".parse::<HalfInt>().is_err());
        assert_eq!(alloc::format!("{}", h(5)), "5/2");
        assert_eq!(alloc::format!("{}", h(-4)), "-2");
        assert_eq!((h(3) + h(1)).twice(), 4);
    }

    #[test]
    fn float_mode_matches_exact() {
        let kx = kv(&[(1, 3), (-1, 5)]);
        let kf = KappaVector::new(vec![1.0 / 3.0, -0.2]);
        for twice_j in 0..10 {
            for n in 0..=twice_j + 1 {
                let e = phi_at_level(h(twice_j), n, &kx);
                let f = phi_at_level(h(twice_j), n, &kf);
                let e = crate::scalar::Ring::to_f64(&e);
                assert!((e - f).abs() <= 1e-12 * (1.0 + e.abs()));
            }
        }
    }
}
