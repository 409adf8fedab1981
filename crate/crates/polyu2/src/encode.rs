//! Text encodings of scalars for the JSON and CSV writers.

use std::fmt;
use std::str::FromStr;

use clap::ValueEnum;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use polyu2_core::scalar::format_f64_17;
use polyu2_core::{RadicalScalar, RadicalSum, Rational, Ring, Scalar};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Float => "float",
        })
    }
}

/// One matrix entry or coefficient.
///
/// Exact values are `[numerator, denominator, radicand numerator, radicand
/// denominator]` for `(p/q)·√(r/s)`; a sum of such terms is a list of them.
/// Float values are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Decimal(String),
    Radical([String; 4]),
    Sum(Vec<[String; 4]>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValueError {
    #[error("`{0}` is not a rational number; exact mode takes p/q or an integer")]
    NotRational(String),
    #[error("`{0}` is not a number")]
    NotNumber(String),
    #[error("entry {0:?} does not match the {1} encoding")]
    BadEntry(Entry, Mode),
}

/// A scalar type selectable on the command line.
pub trait Carrier: Scalar<Root: Send + Sync> + Send + Sync {
    const MODE: Mode;

    fn parse_value(s: &str) -> Result<Self, ValueError>;

    /// Compact text: `p/q` for rationals, 17 significant digits for floats.
    fn to_text(&self) -> String;

    /// Positional decimal with 17 significant digits.
    fn decimal(&self) -> String;

    fn encode_root(r: &Self::Root) -> Entry;

    fn decode_root(e: &Entry) -> Result<Self::Root, ValueError>;
}

impl Carrier for Rational {
    const MODE: Mode = Mode::Exact;

    fn parse_value(s: &str) -> Result<Self, ValueError> {
        Rational::from_str(s.trim()).map_err(|_| ValueError::NotRational(s.to_string()))
    }

    fn to_text(&self) -> String {
        self.to_string()
    }

    fn decimal(&self) -> String {
        rational_decimal_17(self)
    }

    fn encode_root(r: &RadicalSum) -> Entry {
        let mut terms: Vec<[String; 4]> = r.terms().map(|t| quadruple(&t)).collect();
        match terms.len() {
            0 => Entry::Radical(quadruple(&RadicalScalar::zero())),
            1 => Entry::Radical(terms.remove(0)),
            _ => Entry::Sum(terms),
        }
    }

    fn decode_root(e: &Entry) -> Result<RadicalSum, ValueError> {
        let bad = || ValueError::BadEntry(e.clone(), Mode::Exact);
        let term = |q: &[String; 4]| -> Result<RadicalSum, ValueError> {
            let part = |i: usize| BigInt::from_str(&q[i]).map_err(|_| bad());
            let (n, d, rn, rd) = (part(0)?, part(1)?, part(2)?, part(3)?);
            if d.is_zero() || rd.is_zero() {
                return Err(bad());
            }
            let coeff = Rational::new(n, d);
            RadicalScalar::new(coeff, &Rational::new(rn, rd))
                .map(RadicalSum::from)
                .ok_or_else(bad)
        };
        match e {
            Entry::Decimal(_) => Err(bad()),
            Entry::Radical(q) => term(q),
            Entry::Sum(qs) => qs
                .iter()
                .try_fold(RadicalSum::zero(), |acc, q| Ok(acc + term(q)?)),
        }
    }
}

impl Carrier for f64 {
    const MODE: Mode = Mode::Float;

    /// Accepts decimals and `p/q`.
    fn parse_value(s: &str) -> Result<Self, ValueError> {
        let s = s.trim();
        let err = || ValueError::NotNumber(s.to_string());
        match s.split_once('/') {
            Some((p, q)) => {
                let p: f64 = p.trim().parse().map_err(|_| err())?;
                let q: f64 = q.trim().parse().map_err(|_| err())?;
                Some(p / q).filter(|x| x.is_finite()).ok_or_else(err)
            }
            None => s.parse::<f64>().ok().filter(|x| x.is_finite()).ok_or_else(err),
        }
    }

    fn to_text(&self) -> String {
        format_f64_17(*self)
    }

    fn decimal(&self) -> String {
        format_f64_17(*self)
    }

    fn encode_root(r: &f64) -> Entry {
        Entry::Decimal(format_f64_17(*r))
    }

    fn decode_root(e: &Entry) -> Result<f64, ValueError> {
        match e {
            Entry::Decimal(s) => s
                .parse()
                .map_err(|_| ValueError::BadEntry(e.clone(), Mode::Float)),
            _ => Err(ValueError::BadEntry(e.clone(), Mode::Float)),
        }
    }
}

fn quadruple(t: &RadicalScalar) -> [String; 4] {
    let c = t.coeff();
    [
        c.numer().to_string(),
        c.denom().to_string(),
        t.radicand().to_string(),
        "1".to_string(),
    ]
}

/// Exact decimal expansion of `q` rounded to 17 significant digits, laid out
/// like [`format_f64_17`].
pub fn rational_decimal_17(q: &Rational) -> String {
    if Zero::is_zero(q) {
        return "0".to_string();
    }
    let neg = Signed::is_negative(q);
    let a = q.abs();
    let ten = Rational::from_int(10);
    // floor(log10 a), estimated then corrected exactly
    let mut e = Ring::to_f64(&a).log10().floor() as i32;
    let pow = |k: i32| -> Rational {
        let p = num_traits::pow(ten.clone(), k.unsigned_abs() as usize);
        if k >= 0 {
            p
        } else {
            p.recip()
        }
    };
    while pow(e) > a {
        e -= 1;
    }
    while pow(e + 1) <= a {
        e += 1;
    }
    let sign = if neg { "-" } else { "" };
    if !(-30..=30).contains(&e) {
        let digits = (&a * pow(16 - e)).round().to_integer();
        let (digits, e) = if digits.to_string().len() > 17 {
            ((&a * pow(15 - e)).round().to_integer(), e + 1)
        } else {
            (digits, e)
        };
        let s = digits.to_string();
        return format!("{sign}{}.{}e{e}", &s[..1], &s[1..]);
    }
    let decimals = (16 - e).max(0) as usize;
    let scaled = (&a * pow(decimals as i32)).round().to_integer().to_string();
    if decimals == 0 {
        return format!("{sign}{scaled}");
    }
    let padded = format!("{scaled:0>width$}", width = decimals + 1);
    let (int, frac) = padded.split_at(padded.len() - decimals);
    format!("{sign}{int}.{frac}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn rational_decimals() {
        assert_eq!(rational_decimal_17(&q(1, 10)), "0.10000000000000000");
        assert_eq!(rational_decimal_17(&q(2, 1)), "2.0000000000000000");
        assert_eq!(rational_decimal_17(&q(-1, 3)), "-0.33333333333333333");
        assert_eq!(rational_decimal_17(&q(2, 3)), "0.66666666666666667");
        assert_eq!(rational_decimal_17(&q(1, 40)), "0.025000000000000000");
        assert_eq!(rational_decimal_17(&q(0, 1)), "0");
        assert_eq!(rational_decimal_17(&q(123456789, 1)), "123456789.00000000");
    }

    #[test]
    fn decimals_match_float_layout() {
        for (n, d) in [(1, 4), (3, 2), (-5, 8), (1_000_000, 1), (7, 1024)] {
            assert_eq!(rational_decimal_17(&q(n, d)), format_f64_17(n as f64 / d as f64));
        }
    }

    #[test]
    fn huge_values_use_exponent() {
        let big = Rational::from_int(10).pow(40) * q(3, 1);
        assert_eq!(rational_decimal_17(&big), "3.0000000000000000e40");
        assert_eq!(rational_decimal_17(&big.recip()), "3.3333333333333333e-41");
    }

    #[test]
    fn exact_entries_round_trip() {
        let half_root_two = RadicalSum::from(RadicalScalar::sqrt_of(&q(1, 2)).unwrap());
        let mixed = half_root_two.clone() + RadicalSum::from(q(3, 1));
        for x in [RadicalSum::zero(), half_root_two, mixed, RadicalSum::from(q(-7, 3))] {
            let e = Rational::encode_root(&x);
            assert_eq!(Rational::decode_root(&e), Ok(x));
        }
        assert_eq!(
            Rational::encode_root(&RadicalSum::zero()),
            Entry::Radical(["0", "1", "0", "1"].map(String::from))
        );
    }

    #[test]
    fn parses_by_mode() {
        assert_eq!(Rational::parse_value("-1/2"), Ok(q(-1, 2)));
        assert_eq!(Rational::parse_value("3"), Ok(q(3, 1)));
        assert!(Rational::parse_value("0.5").is_err());
        assert!(Rational::parse_value("1/0").is_err());
        assert_eq!(f64::parse_value("1/4"), Ok(0.25));
        assert_eq!(f64::parse_value("-0.5"), Ok(-0.5));
        assert!(f64::parse_value("x").is_err());
    }
}
