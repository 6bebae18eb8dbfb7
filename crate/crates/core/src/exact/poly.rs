//! Dense univariate polynomials over the rationals in the indeterminate `x`.
//!
//! Coefficients are stored lowest degree first with no trailing zeros; the
//! zero polynomial is the empty list. All constructors normalize, so
//! equality is structural.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::rational::{format_rat, parse_rat, qrat, QRat};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<QRat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(QRat::one())
    }

    pub fn constant(c: QRat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The indeterminate `x`.
    pub fn var() -> Self {
        Poly::from_coeffs(vec![QRat::zero(), QRat::one()])
    }

    /// Builds from lowest-degree-first coefficients, dropping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<QRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| qrat(c, 1)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> QRat {
        self.coeffs.get(i).cloned().unwrap_or_else(QRat::zero)
    }

    pub fn coeffs(&self) -> &[QRat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&QRat> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &QRat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn eval(&self, at: &QRat) -> QRat {
        let mut acc = QRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Substitution: `self(inner(x))`, by Horner's scheme.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact division in the polynomial ring. Fails when the divisor is
    /// zero or does not divide exactly.
    pub fn try_div_exact(&self, q: &Poly) -> Result<Poly> {
        if q.is_zero() {
            return Err(Error::Domain("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        let dq = q.degree().unwrap();
        let dp = match self.degree() {
            Some(d) if d >= dq => d,
            _ => return Err(Error::ExactDivision),
        };
        let lead = q.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![QRat::zero(); dp - dq + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dq] / &lead;
            if !c.is_zero() {
                for (i, qc) in q.coeffs.iter().enumerate() {
                    let delta = qc * &c;
                    rem[k + i] = &rem[k + i] - &delta;
                }
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::ExactDivision);
        }
        Ok(Poly::from_coeffs(quot))
    }

    /// Canonical text form: lowest-degree-first array of rational strings.
    pub fn to_text_array(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rat).collect()
    }

    pub fn from_text_array(items: &[String]) -> Result<Poly> {
        let coeffs = items
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::from_coeffs(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::from_coeffs(out)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![QRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Renders one term `c*x^k` into `out`, `first` tracking sign placement.
fn push_term(out: &mut String, c: &QRat, k: usize, first: bool) {
    let mag = c.abs();
    if first {
        if c.is_negative() {
            out.push('-');
        }
    } else if c.is_negative() {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    let coeff_txt = format_rat(&mag);
    if k == 0 {
        out.push_str(&coeff_txt);
    } else {
        if coeff_txt != "1" {
            out.push_str(&coeff_txt);
            out.push('*');
        }
        out.push('x');
        if k > 1 {
            out.push_str(&format!("^{k}"));
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            push_term(&mut out, c, k, first);
            first = false;
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::qint;

    fn x() -> Poly {
        Poly::var()
    }

    #[test]
    fn product_and_difference() {
        // (x - 1/2)^2 = x^2 - x + 1/4
        let p = &x() - &Poly::constant(qrat(1, 2));
        let sq = &p * &p;
        assert_eq!(sq, Poly::from_coeffs(vec![qrat(1, 4), qint(-1), qint(1)]));
        // (x^2 - x + 1/6) - (x^2 - x) = 1/6
        let b2 = Poly::from_coeffs(vec![qrat(1, 6), qint(-1), qint(1)]);
        let e2 = Poly::from_coeffs(vec![qint(0), qint(-1), qint(1)]);
        assert_eq!(&b2 - &e2, Poly::constant(qrat(1, 6)));
        assert_eq!(&b2 * &Poly::zero(), Poly::zero());
    }

    #[test]
    fn degree_adds_on_products() {
        let p = Poly::from_i64(&[1, 2, 3]);
        let q = Poly::from_i64(&[-1, 1]);
        assert_eq!(
            (&p * &q).degree().unwrap(),
            p.degree().unwrap() + q.degree().unwrap()
        );
    }

    #[test]
    fn exact_division() {
        // (x^2 - 1) / (x - 1) = x + 1
        let num = Poly::from_i64(&[-1, 0, 1]);
        let den = Poly::from_i64(&[-1, 1]);
        assert_eq!(num.try_div_exact(&den).unwrap(), Poly::from_i64(&[1, 1]));
        // 0 / (x + 2) = 0
        assert_eq!(
            Poly::zero()
                .try_div_exact(&Poly::from_i64(&[2, 1]))
                .unwrap(),
            Poly::zero()
        );
        // (x^3 - x) / (x^2 - 1) = x
        let num = Poly::from_i64(&[0, -1, 0, 1]);
        let den = Poly::from_i64(&[-1, 0, 1]);
        assert_eq!(num.try_div_exact(&den).unwrap(), x());
        // non-exact division is an error
        assert_eq!(
            Poly::from_i64(&[1, 0, 1]).try_div_exact(&Poly::from_i64(&[-1, 1])),
            Err(Error::ExactDivision)
        );
    }

    #[test]
    fn composition() {
        // identity substitution
        let p = Poly::from_i64(&[3, -2, 5]);
        assert_eq!(p.compose(&x()), p);
        // x - 1/2 at (x+1)/2 gives x/2
        let half_shift = Poly::from_coeffs(vec![qrat(1, 2), qrat(1, 2)]);
        let b1 = &x() - &Poly::constant(qrat(1, 2));
        assert_eq!(
            b1.compose(&half_shift),
            Poly::from_coeffs(vec![qint(0), qrat(1, 2)])
        );
    }

    #[test]
    fn text_array_roundtrip() {
        let p = Poly::from_coeffs(vec![qrat(1, 6), qint(-1), qint(1)]);
        let txt = p.to_text_array();
        assert_eq!(txt, vec!["1/6", "-1", "1"]);
        assert_eq!(Poly::from_text_array(&txt).unwrap(), p);
    }

    #[test]
    fn display_form() {
        let p = Poly::from_coeffs(vec![qrat(1, 6), qint(-1), qint(1)]);
        assert_eq!(p.to_string(), "x^2 - x + 1/6");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::from_i64(&[0, -1]).to_string(), "-x");
    }
}
