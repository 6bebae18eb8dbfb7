//! Arbitrary-precision rational scalars.
//!
//! The scalar type is `num_rational`'s [`BigRational`], which already
//! guarantees the canonical form this crate relies on everywhere:
//! reduced fraction, positive denominator, zero stored as 0/1. Equality
//! is therefore structural.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type QRat = BigRational;

/// Shorthand constructor from machine integers. Panics on a zero
/// denominator; use [`checked_div`] for data-dependent divisions.
pub fn qrat(numer: i64, denom: i64) -> QRat {
    assert!(denom != 0, "rational with zero denominator");
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn qint(n: i64) -> QRat {
    BigRational::from_integer(BigInt::from(n))
}

/// Division with the divide-by-zero case reported as a domain error.
pub fn checked_div(a: &QRat, b: &QRat) -> Result<QRat> {
    if b.is_zero() {
        return Err(Error::Domain("division by zero".into()));
    }
    Ok(a / b)
}

/// Integer power allowing negative exponents for nonzero bases.
pub fn rat_pow(r: &QRat, e: i64) -> Result<QRat> {
    if e < 0 && r.is_zero() {
        return Err(Error::Domain("negative power of zero".into()));
    }
    Ok(r.pow(e as i32))
}

/// Canonical text form: `p/q`, or `p` when the denominator is one.
pub fn format_rat(r: &QRat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p/q` or `p`. The result is reduced and sign-normalized by
/// construction.
pub fn parse_rat(s: &str) -> Result<QRat> {
    let s = s.trim();
    match s.split_once('/') {
        None => s
            .parse::<BigInt>()
            .map(BigRational::from_integer)
            .map_err(|_| Error::Parse(format!("invalid rational: {s:?}"))),
        Some((num, den)) => {
            let n = num
                .trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("invalid numerator: {num:?}")))?;
            let d = den
                .trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("invalid denominator: {den:?}")))?;
            if d.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Lossy conversion for the float-only validation layer.
pub fn rat_to_f64(r: &QRat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // Fall back to a division of rounded parts for magnitudes that
        // overflow the direct conversion.
        let n = r
            .numer()
            .to_f64()
            .unwrap_or(f64::INFINITY * r.numer().signum().to_f64().unwrap_or(1.0));
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}
