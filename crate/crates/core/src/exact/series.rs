//! Truncated formal power / Laurent series with `Poly` coefficients.
//!
//! A series holds terms `coeff(e) * var^e` for exponents in
//! `[min_exp, order]` (both inclusive), plus an optional symbolic log
//! term `log_coeff * log(...)` whose coefficient is a plain `Poly`.
//! The log slot only ever combines additively or under scalar scaling;
//! every operation that would need a product of two log terms, or a log
//! times a non-constant series, is an error. Binary operations truncate
//! to the precision actually supported by both operands.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::poly::Poly;
use crate::exact::rational::{rat_pow, QRat};

/// Formal variable labels. `Z` and `T` are the series variables of the
/// generating functions handled here; `W` is the reciprocal-argument unit
/// used by the asymptotic digamma expansions before reindexing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesVar {
    Z,
    T,
    W,
}

impl fmt::Display for SeriesVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesVar::Z => write!(f, "z"),
            SeriesVar::T => write!(f, "t"),
            SeriesVar::W => write!(f, "w"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct TruncSeries {
    var: SeriesVar,
    min_exp: i64,
    order: i64,
    coeffs: BTreeMap<i64, Poly>,
    log_coeff: Poly,
}

impl TruncSeries {
    pub fn zero(var: SeriesVar, order: i64) -> Self {
        TruncSeries {
            var,
            min_exp: 0,
            order,
            coeffs: BTreeMap::new(),
            log_coeff: Poly::zero(),
        }
    }

    pub fn one(var: SeriesVar, order: i64) -> Self {
        TruncSeries::constant(var, order, Poly::one())
    }

    pub fn constant(var: SeriesVar, order: i64, c: Poly) -> Self {
        TruncSeries::monomial(var, order, 0, c)
    }

    pub fn monomial(var: SeriesVar, order: i64, exp: i64, c: Poly) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() && exp <= order {
            coeffs.insert(exp, c);
        }
        TruncSeries {
            var,
            min_exp: exp.min(0),
            order,
            coeffs,
            log_coeff: Poly::zero(),
        }
    }

    pub fn from_terms(var: SeriesVar, order: i64, terms: Vec<(i64, Poly)>) -> Self {
        let mut s = TruncSeries::zero(var, order);
        for (e, c) in terms {
            s.min_exp = s.min_exp.min(e);
            if !c.is_zero() && e <= order {
                s.coeffs.insert(e, c);
            }
        }
        s
    }

    pub fn var(&self) -> SeriesVar {
        self.var
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn coeff(&self, e: i64) -> Poly {
        self.coeffs.get(&e).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn log_coeff(&self) -> &Poly {
        &self.log_coeff
    }

    pub fn set_log_coeff(&mut self, c: Poly) {
        self.log_coeff = c;
    }

    pub fn has_log(&self) -> bool {
        !self.log_coeff.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(Poly::is_zero) && !self.has_log()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Poly)> {
        self.coeffs.iter().filter(|(_, c)| !c.is_zero())
    }

    fn assert_same_var(&self, other: &TruncSeries) {
        assert_eq!(
            self.var, other.var,
            "series arithmetic requires matching variables"
        );
    }

    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        self.assert_same_var(other);
        let order = self.order.min(other.order);
        let mut out = TruncSeries::zero(self.var, order);
        out.min_exp = self.min_exp.min(other.min_exp);
        for (&e, c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            if e > order {
                continue;
            }
            let entry = out.coeffs.entry(e).or_insert_with(Poly::zero);
            *entry = &*entry + c;
        }
        out.coeffs.retain(|_, c| !c.is_zero());
        out.log_coeff = &self.log_coeff + &other.log_coeff;
        out
    }

    pub fn neg(&self) -> TruncSeries {
        let mut out = self.clone();
        for c in out.coeffs.values_mut() {
            *c = -&*c;
        }
        out.log_coeff = -&out.log_coeff;
        out
    }

    pub fn sub(&self, other: &TruncSeries) -> TruncSeries {
        self.add(&other.neg())
    }

    /// Scalar scaling; acts on the log slot as well.
    pub fn scale_poly(&self, p: &Poly) -> TruncSeries {
        let mut out = TruncSeries::zero(self.var, self.order);
        out.min_exp = self.min_exp;
        for (&e, c) in &self.coeffs {
            let prod = c * p;
            if !prod.is_zero() {
                out.coeffs.insert(e, prod);
            }
        }
        out.log_coeff = &self.log_coeff * p;
        out
    }

    pub fn scale_rat(&self, c: &QRat) -> TruncSeries {
        self.scale_poly(&Poly::constant(c.clone()))
    }

    /// Product. With negative exponents in play the reliable order of the
    /// product is `min(a.order + b.min_exp, b.order + a.min_exp)`; for two
    /// ordinary power series this is the usual minimum of the orders.
    /// Refuses to combine log terms (a log times a constant is allowed).
    pub fn mul(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.assert_same_var(other);
        if self.has_log() && other.has_log() {
            return Err(Error::LogProduct);
        }
        if self.has_log() || other.has_log() {
            // Only multiplication by a pure constant keeps the log slot
            // representable.
            let (logful, plain) = if self.has_log() {
                (self, other)
            } else {
                (other, self)
            };
            let constant_only = plain.coeffs.keys().all(|&e| e == 0);
            if !constant_only {
                return Err(Error::LogProduct);
            }
            return Ok(logful.scale_poly(&plain.coeff(0)));
        }
        let order = (self.order + other.min_exp).min(other.order + self.min_exp);
        let mut out = TruncSeries::zero(self.var, order);
        out.min_exp = self.min_exp + other.min_exp;
        for (&ea, ca) in &self.coeffs {
            for (&eb, cb) in &other.coeffs {
                let e = ea + eb;
                if e > order {
                    continue;
                }
                let prod = ca * cb;
                if prod.is_zero() {
                    continue;
                }
                let entry = out.coeffs.entry(e).or_insert_with(Poly::zero);
                *entry = &*entry + &prod;
            }
        }
        out.coeffs.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    /// Multiplies by `var^delta`, shifting every exponent.
    pub fn shift_exp(&self, delta: i64) -> Result<TruncSeries> {
        if self.has_log() {
            return Err(Error::LogProduct);
        }
        let mut out = TruncSeries::zero(self.var, self.order + delta);
        out.min_exp = self.min_exp + delta;
        for (&e, c) in &self.coeffs {
            out.coeffs.insert(e + delta, c.clone());
        }
        Ok(out)
    }

    /// Exponent-wise rescaling `coeff(e) -> coeff(e) * factor^e`, the
    /// bookkeeping step for substitutions like `w = 2z`. The truncation
    /// window is unchanged.
    pub fn reindex_scale(&self, factor: &QRat, newvar: SeriesVar) -> Result<TruncSeries> {
        if self.has_log() {
            return Err(Error::LogProduct);
        }
        if factor.is_zero() {
            return Err(Error::Domain("reindex factor must be nonzero".into()));
        }
        let mut out = TruncSeries::zero(newvar, self.order);
        out.min_exp = self.min_exp;
        for (&e, c) in &self.coeffs {
            let scaled = c.scale(&rat_pow(factor, e)?);
            if !scaled.is_zero() {
                out.coeffs.insert(e, scaled);
            }
        }
        Ok(out)
    }

    pub fn relabel(&self, newvar: SeriesVar) -> TruncSeries {
        let mut out = self.clone();
        out.var = newvar;
        out
    }

    /// Coefficient-wise equality through `min(order, other.order, upto)`,
    /// including the log slots. This is the comparison the identity tests
    /// use; exponents beyond either truncation are not inspected.
    pub fn agrees_with(&self, other: &TruncSeries, upto: i64) -> bool {
        if self.var != other.var || self.log_coeff != other.log_coeff {
            return false;
        }
        let hi = self.order.min(other.order).min(upto);
        let lo = self.min_exp.min(other.min_exp);
        (lo..=hi).all(|e| self.coeff(e) == other.coeff(e))
    }
}

/// Truncated long division `num / den`. The divisor's lowest-order
/// coefficient must be nonzero, every coefficient step must divide exactly
/// in the polynomial ring, and neither operand may carry a log term.
pub fn series_divide(num: &TruncSeries, den: &TruncSeries) -> Result<TruncSeries> {
    num.assert_same_var(den);
    if num.has_log() || den.has_log() {
        return Err(Error::LogProduct);
    }
    let (e0, d0) = match den.terms().next() {
        Some((&e, c)) => (e, c.clone()),
        None => return Err(Error::SeriesDivision),
    };
    let order = num.order.min(den.order) - e0;
    let min_exp = num.min_exp - e0;
    let mut rem = num.clone();
    let mut out = TruncSeries::zero(num.var, order);
    out.min_exp = min_exp;
    for qe in min_exp..=order {
        let r = rem.coeff(qe + e0);
        if r.is_zero() {
            continue;
        }
        let q = r.try_div_exact(&d0)?;
        // subtract q * var^qe * den from the remainder
        for (&de, dc) in &den.coeffs {
            let e = qe + de;
            if e > num.order {
                continue;
            }
            let delta = &q * dc;
            let entry = rem.coeffs.entry(e).or_insert_with(Poly::zero);
            *entry = &*entry - &delta;
        }
        out.coeffs.insert(qe, q);
    }
    out.coeffs.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// The exponential series `sum scale^n var^n / n!` truncated at `order`.
pub fn exp_series(scale: &Poly, var: SeriesVar, order: i64) -> TruncSeries {
    let mut terms = Vec::new();
    let mut num = Poly::one();
    let mut fact = QRat::from_integer(1.into());
    for n in 0..=order.max(0) {
        if n > 0 {
            num = &num * scale;
            fact *= QRat::from_integer(n.into());
        }
        let c = num.scale(&fact.recip());
        if !c.is_zero() {
            terms.push((n, c));
        }
    }
    TruncSeries::from_terms(var, order, terms)
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.has_log() {
            parts.push(format!("({})*log", self.log_coeff));
        }
        for (e, c) in self.terms() {
            let head = match e {
                0 => String::new(),
                1 => format!("{}", self.var),
                _ => format!("{}^{}", self.var, e),
            };
            if head.is_empty() {
                parts.push(format!("({c})"));
            } else {
                parts.push(format!("({c})*{head}"));
            }
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(
            f,
            "{} + O({}^{})",
            parts.join(" + "),
            self.var,
            self.order + 1
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{qint, qrat};

    #[test]
    fn divide_recovers_bernoulli_numbers() {
        // t / (e^t - 1): coefficient of t^n is B_n / n!
        let order = 8;
        let num = TruncSeries::monomial(SeriesVar::T, order, 1, Poly::one());
        let den = exp_series(&Poly::one(), SeriesVar::T, order)
            .sub(&TruncSeries::one(SeriesVar::T, order));
        let q = series_divide(&num, &den).unwrap();
        let expected = [
            qint(1),
            qrat(-1, 2),
            qrat(1, 6),
            qint(0),
            qrat(-1, 30),
            qint(0),
            qrat(1, 42),
        ];
        let mut fact = qint(1);
        for (n, b) in expected.iter().enumerate() {
            if n > 0 {
                fact *= qint(n as i64);
            }
            assert_eq!(q.coeff(n as i64), Poly::constant(b / &fact), "n = {n}");
        }
    }

    #[test]
    fn one_over_one() {
        let one = TruncSeries::one(SeriesVar::T, 5);
        let q = series_divide(&one, &one).unwrap();
        assert!(q.agrees_with(&one, 5));
    }

    #[test]
    fn zero_divisor_rejected() {
        let num = TruncSeries::one(SeriesVar::T, 4);
        let den = TruncSeries::zero(SeriesVar::T, 4);
        assert!(matches!(
            series_divide(&num, &den),
            Err(Error::SeriesDivision)
        ));
    }

    #[test]
    fn laurent_product_order() {
        // (z^-2 + ...) * (z^-2 + ...) known to order 5 each is reliable
        // only to order 3.
        let a = TruncSeries::monomial(SeriesVar::Z, 5, -2, Poly::one());
        let b = a.clone();
        let p = a.mul(&b).unwrap();
        assert_eq!(p.order(), 3);
        assert_eq!(p.coeff(-4), Poly::one());
    }

    #[test]
    fn log_slot_rules() {
        let mut with_log = TruncSeries::zero(SeriesVar::W, 4);
        with_log.set_log_coeff(Poly::one());
        let plain = TruncSeries::monomial(SeriesVar::W, 4, 1, Poly::one());
        assert!(matches!(with_log.mul(&with_log), Err(Error::LogProduct)));
        assert!(matches!(with_log.mul(&plain), Err(Error::LogProduct)));
        // log times a constant stays representable
        let two = TruncSeries::constant(SeriesVar::W, 4, Poly::from_i64(&[2]));
        let scaled = with_log.mul(&two).unwrap();
        assert_eq!(scaled.log_coeff(), &Poly::from_i64(&[2]));
        // logs cancel under subtraction
        let diff = with_log.sub(&with_log);
        assert!(!diff.has_log());
    }
}
