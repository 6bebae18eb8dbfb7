//! Polynomials in a second indeterminate `y` with `Poly` coefficients.
//!
//! These carry the orthogonal polynomials: degree in `y`, coefficients in
//! the ring of rational polynomials in `x`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exact::poly::Poly;
use crate::exact::rational::QRat;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct YPoly {
    ycoeffs: Vec<Poly>,
}

impl YPoly {
    pub fn zero() -> Self {
        YPoly {
            ycoeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        YPoly::constant(Poly::one())
    }

    pub fn constant(p: Poly) -> Self {
        YPoly::from_ycoeffs(vec![p])
    }

    /// The indeterminate `y`.
    pub fn var() -> Self {
        YPoly::from_ycoeffs(vec![Poly::zero(), Poly::one()])
    }

    pub fn from_ycoeffs(mut ycoeffs: Vec<Poly>) -> Self {
        while ycoeffs.last().is_some_and(Poly::is_zero) {
            ycoeffs.pop();
        }
        YPoly { ycoeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.ycoeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.ycoeffs.len().checked_sub(1)
    }

    pub fn ycoeff(&self, i: usize) -> Poly {
        self.ycoeffs.get(i).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn ycoeffs(&self) -> &[Poly] {
        &self.ycoeffs
    }

    pub fn is_monic(&self) -> bool {
        self.ycoeffs.last().is_some_and(Poly::is_one)
    }

    pub fn scale_poly(&self, p: &Poly) -> YPoly {
        if p.is_zero() {
            return YPoly::zero();
        }
        YPoly {
            ycoeffs: self.ycoeffs.iter().map(|c| c * p).collect(),
        }
    }

    pub fn scale_rat(&self, c: &QRat) -> YPoly {
        self.scale_poly(&Poly::constant(c.clone()))
    }

    /// Multiplication by `y^r`.
    pub fn mul_ypow(&self, r: usize) -> YPoly {
        if self.is_zero() {
            return YPoly::zero();
        }
        let mut ycoeffs = vec![Poly::zero(); r];
        ycoeffs.extend(self.ycoeffs.iter().cloned());
        YPoly { ycoeffs }
    }

    pub fn to_text(&self) -> Vec<Vec<String>> {
        self.ycoeffs.iter().map(Poly::to_text_array).collect()
    }
}

impl Add for &YPoly {
    type Output = YPoly;
    fn add(self, rhs: &YPoly) -> YPoly {
        let n = self.ycoeffs.len().max(rhs.ycoeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.ycoeff(i) + &rhs.ycoeff(i));
        }
        YPoly::from_ycoeffs(out)
    }
}

impl Sub for &YPoly {
    type Output = YPoly;
    fn sub(self, rhs: &YPoly) -> YPoly {
        let n = self.ycoeffs.len().max(rhs.ycoeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.ycoeff(i) - &rhs.ycoeff(i));
        }
        YPoly::from_ycoeffs(out)
    }
}

impl Mul for &YPoly {
    type Output = YPoly;
    fn mul(self, rhs: &YPoly) -> YPoly {
        if self.is_zero() || rhs.is_zero() {
            return YPoly::zero();
        }
        let mut out = vec![Poly::zero(); self.ycoeffs.len() + rhs.ycoeffs.len() - 1];
        for (i, a) in self.ycoeffs.iter().enumerate() {
            for (j, b) in rhs.ycoeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        YPoly::from_ycoeffs(out)
    }
}

impl Neg for &YPoly {
    type Output = YPoly;
    fn neg(self) -> YPoly {
        YPoly {
            ycoeffs: self.ycoeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (k, c) in self.ycoeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let head = match k {
                0 => String::new(),
                1 => "y".into(),
                _ => format!("y^{k}"),
            };
            let part = if k == 0 {
                format!("({c})")
            } else if c.is_one() {
                head
            } else {
                format!("({c})*{head}")
            };
            parts.push(part);
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::qrat;

    #[test]
    fn recurrence_step_shapes() {
        // (y + 1/2) * (y + 1/2)
        let p = &YPoly::var() + &YPoly::constant(Poly::constant(qrat(1, 2)));
        let sq = &p * &p;
        assert_eq!(sq.degree(), Some(2));
        assert!(sq.is_monic());
        assert_eq!(sq.ycoeff(0), Poly::constant(qrat(1, 4)));
        assert_eq!(sq.ycoeff(1), Poly::constant(qrat(1, 1)));
    }

    #[test]
    fn ypow_shift() {
        let p = &YPoly::var() + &YPoly::one();
        let shifted = p.mul_ypow(2);
        assert_eq!(shifted.degree(), Some(3));
        assert_eq!(shifted.ycoeff(0), Poly::zero());
        assert_eq!(shifted.ycoeff(2), Poly::one());
    }
}
