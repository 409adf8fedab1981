//! Dense square matrices over a [`Ring`] and basis-tagged operators.

use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use crate::higgs::FockState;
use crate::kernel::HalfInt;
use crate::scalar::Ring;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    dim: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Matrix {
            dim,
            data: (0..dim * dim).map(|_| T::zero()).collect(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_diag((0..dim).map(|_| T::one()))
    }

    pub fn from_diag<I: IntoIterator<Item = T>>(diag: I) -> Self {
        let diag: Vec<T> = diag.into_iter().collect();
        let mut m = Self::zeros(diag.len());
        for (i, v) in diag.into_iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: T) {
        self.data[row * self.dim + col] = value;
    }

    pub fn diag(&self) -> Vec<T> {
        (0..self.dim).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn scale(&self, factor: &T) -> Self {
        Matrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .map(|v| {
                    if v.is_zero() {
                        T::zero()
                    } else {
                        v.clone() * factor.clone()
                    }
                })
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|r| (0..self.dim).all(|c| r == c || self.get(r, c).is_zero()))
    }

    /// `AB − BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::identity(self.dim);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Restriction to the rows and columns listed in `indices`, in that order.
    pub fn submatrix(&self, indices: &[usize]) -> Self {
        let mut out = Self::zeros(indices.len());
        for (r, &ir) in indices.iter().enumerate() {
            for (c, &ic) in indices.iter().enumerate() {
                out.set(r, c, self.get(ir, ic).clone());
            }
        }
        out
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.to_f64().abs()).fold(0.0, f64::max)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.dim.max(1))
    }
}

impl<'a, T: Ring> Mul for &'a Matrix<T> {
    type Output = Matrix<T>;

    /// Skips zero entries; ladder matrices are very sparse.
    fn mul(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Matrix::<T>::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let acc = out.get(i, j).clone() + a.clone() * b.clone();
                    out.set(i, j, acc);
                }
            }
        }
        out
    }
}

impl<'a, T: Ring> Add for &'a Matrix<T> {
    type Output = Matrix<T>;

    fn add(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        Matrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<'a, T: Ring> Sub for &'a Matrix<T> {
    type Output = Matrix<T>;

    fn sub(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        Matrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

/// Which generator an operator matrix represents.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpLabel {
    J0,
    J3,
    Jplus,
    Jminus,
    Other,
}

/// Ordered basis an operator matrix acts on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Basis {
    /// `|j, m⟩` states of one representation, indexed by level `n = j + m`.
    Levels { j: HalfInt, levels: Vec<i64> },
    /// One-mode number states `|0⟩, …, |dim − 1⟩`.
    Number { dim: usize },
    /// Two-mode Fock states.
    TwoMode { states: Vec<FockState> },
}

impl Basis {
    pub fn len(&self) -> usize {
        match self {
            Basis::Levels { levels, .. } => levels.len(),
            Basis::Number { dim } => *dim,
            Basis::TwoMode { states } => states.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix<T> {
    pub label: OpLabel,
    pub basis: Basis,
    pub matrix: Matrix<T>,
}

impl<T: Ring> OperatorMatrix<T> {
    pub fn new(label: OpLabel, basis: Basis, matrix: Matrix<T>) -> Self {
        debug_assert_eq!(basis.len(), matrix.dim());
        OperatorMatrix {
            label,
            basis,
            matrix,
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Rational, Scalar};

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn products_and_commutators() {
        let mut a = Matrix::<Rational>::zeros(2);
        a.set(1, 0, q(1));
        let b = a.transpose();
        let c = a.commutator(&b);
        assert_eq!(c, Matrix::from_diag([q(-1), q(1)]));
        assert!(a.pow(2).is_zero());
        assert_eq!(a.pow(0), Matrix::identity(2));
    }

    #[test]
    fn submatrix_picks_rows_and_columns() {
        let m = Matrix::from_diag([q(1), q(2), q(3)]);
        assert_eq!(m.submatrix(&[2, 0]), Matrix::from_diag([q(3), q(1)]));
    }
}
