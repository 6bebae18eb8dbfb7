//! Text renderers: factored product forms and LaTeX output.
//!
//! Closed-form Hankel determinants are built as explicit products
//! (rational scale times polynomial powers) so the factored shape can be
//! printed for humans while the canonical expanded `Poly` is what the
//! equality tests consume.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::exact::poly::Poly;
use crate::exact::rational::{format_rat, QRat};

/// `scale * prod_i factor_i ^ e_i`, with the sign carried by `scale`.
#[derive(Debug, Clone, PartialEq)]
pub struct FactoredForm {
    pub scale: QRat,
    pub factors: Vec<(Poly, usize)>,
}

impl FactoredForm {
    pub fn new(scale: QRat) -> Self {
        FactoredForm {
            scale,
            factors: Vec::new(),
        }
    }

    pub fn push(&mut self, base: Poly, exp: usize) {
        if exp > 0 {
            self.factors.push((base, exp));
        }
    }

    pub fn expand(&self) -> Poly {
        if self.scale.is_zero() {
            return Poly::zero();
        }
        let mut acc = Poly::constant(self.scale.clone());
        for (base, exp) in &self.factors {
            acc = &acc * &base.pow(*exp);
        }
        acc
    }

    pub fn to_latex(&self) -> String {
        let mut out = String::new();
        if self.scale.is_negative() {
            out.push('-');
        }
        let mag = self.scale.abs();
        if !mag.is_one() || self.factors.is_empty() {
            if mag.denom().is_one() {
                out.push_str(&mag.numer().to_string());
            } else {
                out.push_str(&format!("\\frac{{{}}}{{{}}}", mag.numer(), mag.denom()));
            }
        }
        for (base, exp) in &self.factors {
            let body = poly_latex(base);
            let needs_parens = base.coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
            let wrapped = if needs_parens {
                format!("\\left({body}\\right)")
            } else {
                body
            };
            if *exp == 1 {
                out.push_str(&wrapped);
            } else {
                out.push_str(&format!("{wrapped}^{{{exp}}}"));
            }
        }
        out
    }
}

impl fmt::Display for FactoredForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mag = self.scale.abs();
        if !mag.is_one() || self.factors.is_empty() {
            parts.push(format_rat(&mag));
        }
        for (base, exp) in &self.factors {
            let body = base.to_string();
            let needs_parens = base.coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
            let wrapped = if needs_parens {
                format!("({body})")
            } else {
                body
            };
            if *exp == 1 {
                parts.push(wrapped);
            } else {
                parts.push(format!("{wrapped}^{exp}"));
            }
        }
        let sign = if self.scale.is_negative() { "-" } else { "" };
        write!(f, "{sign}{}", parts.join(" * "))
    }
}

/// Splits a polynomial into `scale * primitive` where `primitive` has
/// coprime integer coefficients (positive leading coefficient). Used to
/// print rows like `1/16 * (x^4 - 18*x^2 + 41)`.
pub fn extract_content(p: &Poly) -> (QRat, Poly) {
    use num_bigint::BigInt;
    use num_integer::Integer;
    if p.is_zero() {
        return (QRat::zero(), Poly::zero());
    }
    let mut denom_lcm = BigInt::from(1);
    for c in p.coeffs() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let scaled: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    let mut numer_gcd = BigInt::from(0);
    for v in &scaled {
        numer_gcd = numer_gcd.gcd(v);
    }
    if p.leading().unwrap().is_negative() {
        numer_gcd = -numer_gcd;
    }
    let primitive = Poly::from_coeffs(
        scaled
            .iter()
            .map(|v| QRat::from_integer(v / &numer_gcd))
            .collect(),
    );
    (QRat::new(numer_gcd, denom_lcm), primitive)
}

/// `extract_content` formatted as text, e.g. `1/16 * (x^4 - 18*x^2 + 41)`.
pub fn poly_content_form(p: &Poly) -> String {
    let (scale, primitive) = extract_content(p);
    if primitive.is_constant() || scale.is_one() {
        return p.to_string();
    }
    format!("{} * ({})", format_rat(&scale), primitive)
}

/// LaTeX rendering of a polynomial, highest degree first.
pub fn poly_latex(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    let mut first = true;
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if first {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        first = false;
        let mag = c.abs();
        let coeff = if mag.denom().is_one() {
            mag.numer().to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
        };
        if k == 0 {
            out.push_str(&coeff);
        } else {
            if coeff != "1" {
                out.push_str(&coeff);
            }
            out.push('x');
            if k > 1 {
                out.push_str(&format!("^{{{k}}}"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{qint, qrat};

    #[test]
    fn factored_display_and_expand() {
        let mut form = FactoredForm::new(qrat(-1, 48));
        form.push(Poly::var(), 2);
        form.push(Poly::from_i64(&[-1, 0, 1]), 1);
        assert_eq!(form.to_string(), "-1/48 * x^2 * (x^2 - 1)");
        // -(1/48) x^2 (x^2 - 1) = -(1/48)(x^4 - x^2)
        let expanded = form.expand();
        assert_eq!(expanded.coeff(4), qrat(-1, 48));
        assert_eq!(expanded.coeff(2), qrat(1, 48));
        assert_eq!(expanded.coeff(0), qint(0));
    }

    #[test]
    fn latex_poly() {
        let p = Poly::from_coeffs(vec![qrat(1, 6), qint(-1), qint(1)]);
        assert_eq!(poly_latex(&p), "x^{2} - x + \\frac{1}{6}");
    }

    #[test]
    fn content_extraction() {
        // (x^4 - 18x^2 + 41)/16
        let p = Poly::from_i64(&[41, 0, -18, 0, 1]).scale(&qrat(1, 16));
        let (scale, primitive) = extract_content(&p);
        assert_eq!(scale, qrat(1, 16));
        assert_eq!(primitive, Poly::from_i64(&[41, 0, -18, 0, 1]));
        assert_eq!(poly_content_form(&p), "1/16 * (x^4 - 18*x^2 + 41)");
    }
}
