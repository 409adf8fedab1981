//! Analytic (Fock-Bargmann) representation of a spin-j Higgs sector.
//!
//! A state `Σ ψₙ |n⟩` with `n = j + m` is carried to the polynomial
//! `Σ ψₙ aₙ zⁿ`, `aₙ = √(f(n)!) / n!`. Then `j₋` acts as `d/dz`, `j₃` as
//! `z d/dz − j`, and `j₊` as
//! `z (1 + κ z d/dz)(2j − z d/dz)(1 + (2j − 1)κ − κ z d/dz)`.
//! All three factors of `j₊` are polynomials in `z d/dz`, so on `zⁿ` the
//! operator is multiplication by `(1 + κn)(2j − n)(1 + κ(2j − 1 − n))`
//! followed by a shift of degree.
//!
//! The coherent-state kernel `Σ aₙ zⁿ |n⟩` is kept unnormalized; its squared
//! norm `Σ (f(n)! / (n!)²) |z|²ⁿ` is returned separately.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Sub};

use thiserror::Error;

use crate::kernel::{f_higgs, HalfInt};
use crate::matrix::Matrix;
use crate::scalar::{Ring, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BargmannError {
    #[error("f({n}) < 0: the spin-{j} sector is not unitary")]
    NegativeLadder { j: HalfInt, n: i64 },
    #[error("level {n} lies outside the spin-{j} sector")]
    OutOfSector { j: HalfInt, n: i64 },
    #[error("expected {expected} components, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("a coherent-state coefficient vanishes inside the spin-{j} sector")]
    DegenerateSector { j: HalfInt },
}

/// Polynomial `Σ cₙ zⁿ`. Trailing zero coefficients are insignificant.
#[derive(Clone, Debug)]
pub struct PolyFn<T> {
    pub coeffs: Vec<T>,
}

impl<T: Ring> PolyFn<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        PolyFn { coeffs }
    }

    pub fn zero() -> Self {
        PolyFn { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        PolyFn { coeffs: vec![c] }
    }

    /// `c zⁿ`
    pub fn monomial(n: usize, c: T) -> Self {
        let mut coeffs: Vec<T> = (0..n).map(|_| T::zero()).collect();
        coeffs.push(c);
        PolyFn { coeffs }
    }

    /// Coefficient of `zⁿ`.
    pub fn coeff(&self, n: usize) -> T {
        self.coeffs.get(n).cloned().unwrap_or_else(T::zero)
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    pub fn trimmed(mut self) -> Self {
        let len = self.degree().map_or(0, |d| d + 1);
        self.coeffs.truncate(len);
        self
    }

    pub fn scale(&self, c: &T) -> Self {
        PolyFn {
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(T, T) -> T) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        PolyFn {
            coeffs: (0..len).map(|n| f(self.coeff(n), other.coeff(n))).collect(),
        }
        .trimmed()
    }

    /// Evaluates at a real point.
    pub fn eval(&self, z: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * z.clone() + c.clone())
    }
}

impl<T: Ring> PartialEq for PolyFn<T> {
    fn eq(&self, other: &Self) -> bool {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).all(|n| self.coeff(n) == other.coeff(n))
    }
}

impl<T: Ring> Add for &PolyFn<T> {
    type Output = PolyFn<T>;

    fn add(self, rhs: &PolyFn<T>) -> PolyFn<T> {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<T: Ring> Sub for &PolyFn<T> {
    type Output = PolyFn<T>;

    fn sub(self, rhs: &PolyFn<T>) -> PolyFn<T> {
        self.zip_with(rhs, |a, b| a - b)
    }
}

fn unitary_ladder<S: Scalar>(j: HalfInt, kappa: &S) -> Result<Vec<S>, BargmannError> {
    (1..=j.twice())
        .map(|n| {
            let f = f_higgs(n, j, kappa);
            if f.is_negative() {
                Err(BargmannError::NegativeLadder { j, n })
            } else {
                Ok(f)
            }
        })
        .collect()
}

/// `f(n)!/(n!)² = aₙ²` for `n = 0, …, 2j`.
pub fn coeff_squares<S: Scalar>(j: HalfInt, kappa: &S) -> Result<Vec<S>, BargmannError> {
    let ladder = unitary_ladder(j, kappa)?;
    let mut out = Vec::with_capacity(ladder.len() + 1);
    let mut acc = S::one();
    out.push(acc.clone());
    for (i, f) in ladder.into_iter().enumerate() {
        let n = S::from_int(i as i64 + 1);
        acc = acc * f / (n.clone() * n);
        out.push(acc.clone());
    }
    Ok(out)
}

/// `aₙ = √(f(n)!) / n!`, `a₀ = 1`, for `n = 0, …, 2j`.
pub fn coherent_coeffs<S: Scalar>(j: HalfInt, kappa: &S) -> Result<Vec<S::Root>, BargmannError> {
    assert!(j.twice() >= 0, "spin label must be nonnegative");
    let ladder = unitary_ladder(j, kappa)?;
    let mut gen_factorial = S::one();
    let mut factorial = S::one();
    let mut out = Vec::with_capacity(ladder.len() + 1);
    out.push(S::Root::one());
    for (i, f) in ladder.into_iter().enumerate() {
        gen_factorial = gen_factorial * f;
        factorial = factorial * S::from_int(i as i64 + 1);
        let root = gen_factorial.sqrt().expect("product of nonnegative values");
        out.push(root * S::Root::from(S::one() / factorial.clone()));
    }
    Ok(out)
}

/// `|𝒩|² = Σₙ (f(n)! / (n!)²) xⁿ` with `x = |z|²`.
pub fn normalization2<S: Scalar>(z_abs2: &S, j: HalfInt, kappa: &S) -> Result<S, BargmannError> {
    let squares = coeff_squares(j, kappa)?;
    Ok(squares
        .iter()
        .rev()
        .fold(S::zero(), |acc, c| acc * z_abs2.clone() + c.clone()))
}

/// `fₙ(z) = aₙ zⁿ`.
pub fn monomial<S: Scalar>(n: i64, j: HalfInt, kappa: &S) -> Result<PolyFn<S::Root>, BargmannError> {
    if n < 0 || n > j.twice() {
        return Err(BargmannError::OutOfSector { j, n });
    }
    let a = coherent_coeffs(j, kappa)?;
    Ok(PolyFn::monomial(n as usize, a[n as usize].clone()))
}

/// `d/dz`
pub fn apply_jminus<T: Ring + From<S>, S: Scalar>(p: &PolyFn<T>) -> PolyFn<T> {
    PolyFn::new(
        p.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| c.clone() * T::from(S::from_int(n as i64)))
            .collect(),
    )
    .trimmed()
}

/// Eigenvalue of `(1 + κ z d/dz)(2j − z d/dz)(1 + (2j − 1)κ − κ z d/dz)` on `zⁿ`.
pub fn jplus_multiplier<S: Scalar>(n: i64, j: HalfInt, kappa: &S) -> S {
    let k = kappa.clone();
    let twice_j = j.twice();
    (S::one() + k.clone() * S::from_int(n))
        * S::from_int(twice_j - n)
        * (S::one() + k * S::from_int(twice_j - 1 - n))
}

/// `z (1 + κ z d/dz)(2j − z d/dz)(1 + (2j − 1)κ − κ z d/dz)`
pub fn apply_jplus<S: Scalar>(p: &PolyFn<S::Root>, j: HalfInt, kappa: &S) -> PolyFn<S::Root> {
    let mut coeffs = vec![S::Root::zero()];
    coeffs.extend(
        p.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.clone() * S::Root::from(jplus_multiplier(n as i64, j, kappa))),
    );
    PolyFn::new(coeffs).trimmed()
}

/// `z d/dz − j`
pub fn apply_j3<S: Scalar>(p: &PolyFn<S::Root>, j: HalfInt) -> PolyFn<S::Root> {
    PolyFn::new(
        p.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.clone() * S::Root::from((HalfInt::from_int(n as i64) - j).to_scalar::<S>()))
            .collect(),
    )
    .trimmed()
}

/// `Ψ(z) = Σₙ ψₙ fₙ(z)`.
pub fn analytic_rep<S: Scalar>(
    psi: &[S::Root],
    j: HalfInt,
    kappa: &S,
) -> Result<PolyFn<S::Root>, BargmannError> {
    let a = coherent_coeffs(j, kappa)?;
    if psi.len() != a.len() {
        return Err(BargmannError::LengthMismatch {
            expected: a.len(),
            got: psi.len(),
        });
    }
    Ok(PolyFn::new(psi.iter().zip(&a).map(|(p, a)| p.clone() * a.clone()).collect()).trimmed())
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoherentState<S: Scalar> {
    pub j: HalfInt,
    pub kappa: S,
    /// Unnormalized kernel coefficients `aₙ`.
    pub a: Vec<S::Root>,
    pub z_re: S,
    pub z_im: S,
    /// `|𝒩|²` at this `z`.
    pub norm2: S,
}

impl<S: Scalar> CoherentState<S> {
    pub fn new(j: HalfInt, kappa: S, z_re: S, z_im: S) -> Result<Self, BargmannError> {
        let a = coherent_coeffs(j, &kappa)?;
        let z_abs2 = z_re.clone() * z_re.clone() + z_im.clone() * z_im.clone();
        let norm2 = normalization2(&z_abs2, j, &kappa)?;
        Ok(CoherentState {
            j,
            kappa,
            a,
            z_re,
            z_im,
            norm2,
        })
    }

    /// The kernel as a polynomial in `z`.
    pub fn kernel(&self) -> PolyFn<S::Root> {
        PolyFn::new(self.a.clone())
    }
}

/// Matrices of `j₊`, `j₋`, `j₃` in the monomial basis `{fₙ}`, read off from the
/// differential operators. Requires every `aₙ` to be nonzero.
pub fn ladder_matrices<S: Scalar>(
    j: HalfInt,
    kappa: &S,
) -> Result<[Matrix<S::Root>; 3], BargmannError> {
    let a = coherent_coeffs(j, kappa)?;
    if a.iter().any(Ring::is_zero) {
        return Err(BargmannError::DegenerateSector { j });
    }
    let d = a.len();
    let mut jplus = Matrix::zeros(d);
    let mut jminus = Matrix::zeros(d);
    let mut j3 = Matrix::zeros(d);
    let component = |p: &PolyFn<S::Root>, m: usize| {
        p.coeff(m)
            .try_div(&a[m])
            .ok_or(BargmannError::DegenerateSector { j })
    };
    for n in 0..d {
        let f = PolyFn::monomial(n, a[n].clone());
        let up = apply_jplus(&f, j, kappa);
        let down = apply_jminus::<S::Root, S>(&f);
        let diag = apply_j3::<S>(&f, j);
        for m in 0..d {
            jplus.set(m, n, component(&up, m)?);
            jminus.set(m, n, component(&down, m)?);
            j3.set(m, n, component(&diag, m)?);
        }
        if up.degree().is_some_and(|deg| deg >= d) {
            return Err(BargmannError::OutOfSector { j, n: n as i64 + 1 });
        }
    }
    Ok([jplus, jminus, j3])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{RadicalSum, Rational};

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn h(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    fn r(n: i64, d: i64) -> RadicalSum {
        RadicalSum::from(q(n, d))
    }

    fn sqrt(n: i64) -> RadicalSum {
        q(n, 1).sqrt().unwrap()
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(coherent_coeffs(h(2), &q(0, 1)).unwrap(), vec![r(1, 1), sqrt(2), r(1, 1)]);
        assert_eq!(coherent_coeffs(h(2), &q(1, 1)).unwrap(), vec![r(1, 1), r(2, 1), r(2, 1)]);
        for kappa in [q(0, 1), q(1, 3), q(-1, 2), q(5, 1)] {
            assert_eq!(coherent_coeffs(h(1), &kappa).unwrap(), vec![r(1, 1), r(1, 1)]);
        }
    }

    #[test]
    fn non_unitary_sector_rejected() {
        // f(1) at j = 2, κ = −1/2 is 1·4·1·(1 − 3/2) < 0
        assert_eq!(
            coherent_coeffs(h(4), &q(-1, 2)).unwrap_err(),
            BargmannError::NegativeLadder { j: h(4), n: 1 }
        );
    }

    #[test]
    fn normalization_examples() {
        assert_eq!(normalization2(&q(0, 1), h(7), &q(1, 3)), Ok(q(1, 1)));
        assert_eq!(normalization2(&q(1, 1), h(2), &q(1, 1)), Ok(q(9, 1)));
        assert_eq!(normalization2(&q(1, 1), h(2), &q(0, 1)), Ok(q(4, 1)));
    }

    #[test]
    fn monomial_examples() {
        assert_eq!(monomial(0, h(2), &q(1, 1)).unwrap(), PolyFn::constant(r(1, 1)));
        assert_eq!(monomial(1, h(2), &q(1, 1)).unwrap(), PolyFn::monomial(1, r(2, 1)));
        assert_eq!(monomial(2, h(2), &q(0, 1)).unwrap(), PolyFn::monomial(2, r(1, 1)));
        assert_eq!(
            monomial(3, h(2), &q(0, 1)).unwrap_err(),
            BargmannError::OutOfSector { j: h(2), n: 3 }
        );
    }

    #[test]
    fn lowering_is_derivative() {
        let d = |p: PolyFn<RadicalSum>| apply_jminus::<RadicalSum, Rational>(&p);
        assert!(d(PolyFn::constant(r(1, 1))).is_zero());
        assert_eq!(d(PolyFn::monomial(3, r(1, 1))), PolyFn::monomial(2, r(3, 1)));
        let f1 = monomial(1, h(2), &q(1, 1)).unwrap();
        assert_eq!(d(f1), PolyFn::constant(r(2, 1)));
    }

    #[test]
    fn raising_examples() {
        let top = PolyFn::monomial(2, r(1, 1));
        assert!(apply_jplus(&top, h(2), &q(1, 1)).is_zero());
        let f0 = monomial(0, h(2), &q(1, 1)).unwrap();
        assert_eq!(apply_jplus(&f0, h(2), &q(1, 1)), PolyFn::monomial(1, r(4, 1)));
        // j = 1, κ = 0: f₁ = √2 z ↦ √2 z², and √f(2)·f₂ = √2 z²
        let f1 = monomial(1, h(2), &q(0, 1)).unwrap();
        assert_eq!(apply_jplus(&f1, h(2), &q(0, 1)), PolyFn::monomial(2, sqrt(2)));
    }

    #[test]
    fn weight_operator() {
        assert!(apply_j3::<Rational>(&PolyFn::monomial(2, r(1, 1)), h(4)).is_zero());
        let f0 = monomial(0, h(3), &q(1, 2)).unwrap();
        assert_eq!(apply_j3::<Rational>(&f0, h(3)), f0.scale(&r(-3, 2)));
        assert_eq!(
            apply_j3::<Rational>(&PolyFn::monomial(2, r(1, 1)), h(2)),
            PolyFn::monomial(2, r(1, 1))
        );
    }

    #[test]
    fn analytic_images_of_basis_vectors() {
        let (j, kappa) = (h(4), q(1, 3));
        for n in 0..5 {
            let mut psi = vec![RadicalSum::zero(); 5];
            psi[n] = RadicalSum::one();
            assert_eq!(analytic_rep(&psi, j, &kappa).unwrap(), monomial(n as i64, j, &kappa).unwrap());
        }
        assert!(matches!(
            analytic_rep(&[RadicalSum::one()], j, &kappa),
            Err(BargmannError::LengthMismatch { expected: 5, got: 1 })
        ));
    }

    #[test]
    fn coherent_state_norm() {
        let cs = CoherentState::new(h(3), q(1, 2), q(0, 1), q(0, 1)).unwrap();
        assert_eq!(cs.norm2, q(1, 1));
        let cs = CoherentState::new(h(3), q(1, 2), q(1, 3), q(0, 1)).unwrap();
        assert!(cs.norm2 > q(1, 1));
        assert_eq!(cs.kernel().coeffs, coherent_coeffs(h(3), &q(1, 2)).unwrap());
        let cf = CoherentState::new(h(3), 0.5, 0.2, -0.3).unwrap();
        assert!(cf.norm2 > 1.0);
    }

    #[test]
    fn ladder_matrices_degenerate_sector() {
        // f(1) = 0 at j = 3/2, κ = −1/2
        assert_eq!(
            ladder_matrices(h(3), &q(-1, 2)).unwrap_err(),
            BargmannError::DegenerateSector { j: h(3) }
        );
    }
}
