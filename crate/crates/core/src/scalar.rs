//! Scalar carriers.
//!
//! Every algebra quantity is evaluated either exactly or in 64-bit floating
//! point. Structure-function values are polynomial in the deformation
//! parameters and therefore live in a field ([`Scalar`]): arbitrary-precision
//! rationals in exact mode, `f64` in float mode. Matrix entries need square
//! roots of those values, so each scalar names a [`Scalar::Root`] ring that is
//! closed under the products and sums met in ladder-matrix identities:
//! [`RadicalSum`] for rationals and plain `f64` for floats.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{Float, One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

/// Commutative ring used for matrix entries and scalars alike.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// `true` when equality is decided exactly rather than up to rounding.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn to_f64(&self) -> f64;

    /// Division that may be unavailable for some divisors (zero, or a
    /// divisor the carrier cannot invert in closed form).
    fn try_div(&self, rhs: &Self) -> Option<Self>;
}

/// Ordered field of structure-function values.
pub trait Scalar: Ring + Div<Output = Self> + PartialOrd {
    /// Carrier for square roots of nonnegative values of `Self`.
    type Root: Ring + From<Self>;

    fn from_int(n: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;

    /// Square root of a nonnegative value, `None` for negative input.
    fn sqrt(&self) -> Option<Self::Root>;

    /// The value as an integer when it is one (exactly in rational mode,
    /// up to a relative rounding margin in float mode).
    fn as_integer(&self) -> Option<i64>;

    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }

    fn is_positive(&self) -> bool {
        *self > Self::zero()
    }
}

impl Ring for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        if *rhs == 0.0 {
            None
        } else {
            Some(self / rhs)
        }
    }
}

impl Scalar for f64 {
    type Root = f64;

    fn from_int(n: i64) -> Self {
        n as f64
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn sqrt(&self) -> Option<f64> {
        if *self < 0.0 {
            None
        } else {
            Some(Float::sqrt(*self))
        }
    }
    fn as_integer(&self) -> Option<i64> {
        let r = Float::round(*self);
        if !r.is_finite() || Float::abs(r) > 9.0e15 {
            return None;
        }
        if Float::abs(*self - r) <= 1e-9 * (1.0 + Float::abs(r)) {
            Some(r as i64)
        } else {
            None
        }
    }
}

impl Ring for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn to_f64(&self) -> f64 {
        ratio_to_f64(self)
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
}

impl Scalar for Rational {
    type Root = RadicalSum;

    fn from_int(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Rational::new(BigInt::from(num), BigInt::from(den))
    }
    fn sqrt(&self) -> Option<RadicalSum> {
        RadicalScalar::sqrt_of(self).map(RadicalSum::from)
    }
    fn as_integer(&self) -> Option<i64> {
        if self.is_integer() {
            self.to_integer().to_i64()
        } else {
            None
        }
    }
}

fn ratio_to_f64(r: &Rational) -> f64 {
    ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
}

/// Writes `n = s² · t` with `t` squarefree. Requires `n > 0`.
fn squarefree_split(n: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(n.is_positive());
    if let Some(small) = n.to_u64() {
        let (s, t) = squarefree_split_u64(small);
        return (BigInt::from(s), BigInt::from(t));
    }
    let mut rest = n.clone();
    let mut s = BigInt::one();
    let mut t = BigInt::one();
    let mut d: u64 = 2;
    loop {
        let db = BigInt::from(d);
        if &db * &db * &db > rest {
            break;
        }
        let mut e = 0u32;
        while rest.is_multiple_of(&db) {
            rest /= &db;
            e += 1;
        }
        s *= db.pow(e / 2);
        if e % 2 == 1 {
            t *= &db;
        }
        if let Some(small) = rest.to_u64() {
            let (s2, t2) = squarefree_split_u64(small);
            return (s * BigInt::from(s2), t * BigInt::from(t2));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    // Every prime factor of `rest` now exceeds its cube root.
    let r = rest.sqrt();
    if &r * &r == rest {
        s *= r;
    } else {
        t *= rest;
    }
    (s, t)
}

fn squarefree_split_u64(mut rest: u64) -> (u64, u64) {
    let mut s: u64 = 1;
    let mut t: u64 = 1;
    let mut d: u64 = 2;
    while (d as u128) * (d as u128) * (d as u128) <= rest as u128 {
        let mut e = 0u32;
        while rest.is_multiple_of(d) {
            rest /= d;
            e += 1;
        }
        s *= d.pow(e / 2);
        if e % 2 == 1 {
            t *= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let r = rest.sqrt();
    if r * r == rest {
        s *= r;
    } else {
        t *= rest;
    }
    (s, t)
}

/// A number `coeff · √radicand`.
///
/// Canonical form: the radicand is a squarefree positive integer, or the
/// value is zero and stored as `0 · √0`. Canonical values compare equal iff
/// they represent the same real number.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RadicalScalar {
    coeff: Rational,
    radicand: BigInt,
}

impl RadicalScalar {
    pub fn zero() -> Self {
        RadicalScalar {
            coeff: Zero::zero(),
            radicand: BigInt::zero(),
        }
    }

    pub fn rational(q: Rational) -> Self {
        if Zero::is_zero(&q) {
            Self::zero()
        } else {
            RadicalScalar {
                coeff: q,
                radicand: BigInt::one(),
            }
        }
    }

    /// `coeff · √radicand` for any nonnegative rational radicand.
    pub fn new(coeff: Rational, radicand: &Rational) -> Option<Self> {
        if Signed::is_negative(radicand) {
            return None;
        }
        if Zero::is_zero(radicand) || Zero::is_zero(&coeff) {
            return Some(Self::zero());
        }
        // √(a/b) = √(ab) / b
        let (a, b) = (radicand.numer(), radicand.denom());
        let (s, t) = squarefree_split(&(a * b));
        let coeff = coeff * Rational::new(s, b.clone());
        Some(RadicalScalar { coeff, radicand: t })
    }

    pub fn sqrt_of(r: &Rational) -> Option<Self> {
        Self::new(One::one(), r)
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        Zero::is_zero(&self.coeff)
    }

    /// The rational number `value²` carrying the sign of the value.
    pub fn signed_square(&self) -> Rational {
        let sq = &self.coeff * &self.coeff * Rational::from_integer(self.radicand.clone());
        if Signed::is_negative(&self.coeff) {
            -sq
        } else {
            sq
        }
    }

    pub fn to_f64(&self) -> f64 {
        ratio_to_f64(&self.coeff) * Float::sqrt(self.radicand.to_f64().unwrap_or(f64::NAN))
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // 1/(q√t) = √t / (q t)
        let denom = &self.coeff * Rational::from_integer(self.radicand.clone());
        Some(RadicalScalar {
            coeff: denom.recip(),
            radicand: self.radicand.clone(),
        })
    }
}

impl Mul for RadicalScalar {
    type Output = RadicalScalar;

    fn mul(self, rhs: RadicalScalar) -> RadicalScalar {
        &self * &rhs
    }
}

impl<'a> Mul<&'a RadicalScalar> for &'a RadicalScalar {
    type Output = RadicalScalar;

    fn mul(self, rhs: &RadicalScalar) -> RadicalScalar {
        if self.is_zero() || rhs.is_zero() {
            return RadicalScalar::zero();
        }
        // Both radicands squarefree: √a·√b = g·√((a/g)(b/g)), g = gcd(a, b).
        let g = self.radicand.gcd(&rhs.radicand);
        let radicand = (&self.radicand / &g) * (&rhs.radicand / &g);
        RadicalScalar {
            coeff: &self.coeff * &rhs.coeff * Rational::from_integer(g),
            radicand,
        }
    }
}

impl Neg for RadicalScalar {
    type Output = RadicalScalar;

    fn neg(self) -> RadicalScalar {
        RadicalScalar {
            coeff: -self.coeff,
            radicand: self.radicand,
        }
    }
}

impl PartialOrd for RadicalScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.signed_square().cmp(&other.signed_square()))
    }
}

impl fmt::Display for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_term(f, &self.coeff, &self.radicand)
    }
}

fn fmt_term(f: &mut fmt::Formatter<'_>, coeff: &Rational, radicand: &BigInt) -> fmt::Result {
    if radicand.is_one() || Zero::is_zero(coeff) {
        write!(f, "{}", coeff)
    } else if coeff.is_one() {
        write!(f, "√{}", radicand)
    } else if (-coeff).is_one() {
        write!(f, "-√{}", radicand)
    } else {
        write!(f, "{}·√{}", coeff, radicand)
    }
}

/// A finite sum `Σ qᵢ √tᵢ` over distinct squarefree radicands.
///
/// Square roots of distinct squarefree integers are linearly independent
/// over the rationals, so this canonical map decides equality exactly.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RadicalSum {
    terms: BTreeMap<BigInt, Rational>,
}

impl RadicalSum {
    pub fn terms(&self) -> impl Iterator<Item = RadicalScalar> + '_ {
        self.terms.iter().map(|(t, q)| RadicalScalar {
            coeff: q.clone(),
            radicand: t.clone(),
        })
    }

    /// The single term of this sum, if it has at most one.
    pub fn as_single(&self) -> Option<RadicalScalar> {
        match self.terms.len() {
            0 => Some(RadicalScalar::zero()),
            1 => self.terms().next(),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Zero::zero()),
            1 => self.terms.get(&BigInt::one()).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, radicand: BigInt, coeff: Rational) {
        if Zero::is_zero(&coeff) {
            return;
        }
        match self.terms.entry(radicand) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if Zero::is_zero(o.get()) {
                    o.remove();
                }
            }
        }
    }

    fn scaled_by(&self, r: &RadicalScalar) -> RadicalSum {
        let mut out = RadicalSum::default();
        for term in self.terms() {
            let p = &term * r;
            out.add_term(p.radicand, p.coeff);
        }
        out
    }
}

impl From<RadicalScalar> for RadicalSum {
    fn from(r: RadicalScalar) -> Self {
        let mut out = RadicalSum::default();
        out.add_term(r.radicand, r.coeff);
        out
    }
}

impl From<Rational> for RadicalSum {
    fn from(q: Rational) -> Self {
        RadicalSum::from(RadicalScalar::rational(q))
    }
}

impl Add for RadicalSum {
    type Output = RadicalSum;

    fn add(mut self, rhs: RadicalSum) -> RadicalSum {
        for (t, q) in rhs.terms {
            self.add_term(t, q);
        }
        self
    }
}

impl Sub for RadicalSum {
    type Output = RadicalSum;

    fn sub(self, rhs: RadicalSum) -> RadicalSum {
        self + (-rhs)
    }
}

impl Neg for RadicalSum {
    type Output = RadicalSum;

    fn neg(mut self) -> RadicalSum {
        for q in self.terms.values_mut() {
            *q = -q.clone();
        }
        self
    }
}

impl Mul for RadicalSum {
    type Output = RadicalSum;

    fn mul(self, rhs: RadicalSum) -> RadicalSum {
        let mut out = RadicalSum::default();
        for a in self.terms() {
            for b in rhs.terms() {
                let p = &a * &b;
                out.add_term(p.radicand, p.coeff);
            }
        }
        out
    }
}

impl fmt::Display for RadicalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (t, q)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            fmt_term(f, q, t)?;
        }
        Ok(())
    }
}

impl Ring for RadicalSum {
    const EXACT: bool = true;

    fn zero() -> Self {
        RadicalSum::default()
    }
    fn one() -> Self {
        RadicalSum::from(RadicalScalar::rational(One::one()))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn to_f64(&self) -> f64 {
        let v: f64 = self.terms().map(|t| t.to_f64()).sum();
        // a nonzero sum of independent radicals is never exactly zero
        if v == 0.0 && !self.terms.is_empty() {
            f64::MIN_POSITIVE
        } else {
            v
        }
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        let single = rhs.as_single()?;
        let inv = single.recip()?;
        Some(self.scaled_by(&inv))
    }
}

/// Formats a float with 17 significant digits in positional notation.
pub fn format_f64_17(x: f64) -> String {
    if x == 0.0 {
        return String::from("0");
    }
    if !x.is_finite() {
        return alloc::format!("{}", x);
    }
    let exp10 = Float::floor(Float::log10(Float::abs(x))) as i32;
    if !(-30..=30).contains(&exp10) {
        return alloc::format!("{:.16e}", x);
    }
    let decimals = (16 - exp10).max(0) as usize;
    alloc::format!("{:.*}", decimals, x)
}

/// Collects the terms of a sum; used by serializers.
pub fn radical_terms(x: &RadicalSum) -> Vec<RadicalScalar> {
    x.terms().collect()
}
