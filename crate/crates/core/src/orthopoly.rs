//! The moment functional, monic orthogonal polynomials by bordered
//! determinant and by three-term recurrence, Jacobi-parameter extraction
//! from raw moments, and the named families.
//!
//! Sign convention: the recurrence is always stored as
//! `P_{n+1}(y) = (y + s_n) P_n(y) - t_n P_{n-1}(y)`.
//! The classical families whose published recurrences read
//! `... + tau_n P_{n-1}` are therefore stored with `t_n = -tau_n`;
//! their `s_n` equals the published `sigma_n` unchanged.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::poly::Poly;
use crate::exact::rational::{qrat, QRat};
use crate::exact::ypoly::YPoly;
use crate::hankel::{bareiss, hankel_det};
use crate::seq::{MomentSeq, SeqSpec};

/// Jacobi parameters: the 0th moment plus the recurrence coefficients.
/// `s` holds `s_0..s_{d-1}` and `t` holds `t_1..t_d`.
#[derive(Debug, Clone, PartialEq)]
pub struct JacobiParams {
    pub c0: Poly,
    pub s: Vec<Poly>,
    pub t: Vec<Poly>,
}

impl JacobiParams {
    pub fn depth(&self) -> usize {
        self.s.len().min(self.t.len())
    }

    /// t_n for n >= 1.
    pub fn t_at(&self, n: usize) -> Result<&Poly> {
        self.t.get(n - 1).ok_or(Error::Arity {
            need: n,
            have: self.t.len(),
        })
    }

    /// s_n for n >= 0.
    pub fn s_at(&self, n: usize) -> Result<&Poly> {
        self.s.get(n).ok_or(Error::Arity {
            need: n + 1,
            have: self.s.len(),
        })
    }

    /// H_n reconstructed from the product form
    /// `c_0^{n+1} t_1^n t_2^{n-1} ... t_n`.
    pub fn hankel_product(&self, n: usize) -> Result<Poly> {
        let mut acc = self.c0.pow(n + 1);
        for j in 1..=n {
            acc = &acc * &self.t_at(j)?.pow(n + 1 - j);
        }
        Ok(acc)
    }
}

/// Applies the moment functional `y^k -> seq.gen(k)` coefficient-wise;
/// the constant term goes through `c_0`.
pub fn apply_functional(seq: &MomentSeq, p: &YPoly) -> Poly {
    let mut acc = Poly::zero();
    for (k, c) in p.ycoeffs().iter().enumerate() {
        if !c.is_zero() {
            acc = &acc + &(c * &seq.gen(k));
        }
    }
    acc
}

/// Monic orthogonal polynomial of degree `n` through the bordered
/// determinant divided by `H_{n-1}`. Requires `H_{n-1} != 0`.
pub fn orth_poly_det(seq: &MomentSeq, n: usize) -> Result<YPoly> {
    if n == 0 {
        return Ok(YPoly::one());
    }
    let h_prev = hankel_det(seq, n - 1);
    if h_prev.is_zero() {
        return Err(Error::DegenerateMoments(n - 1));
    }
    let moments = seq.prefix(2 * n);
    let mut ycoeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        // minor: moment rows 0..n-1 with column j removed
        let minor: bareiss::Matrix = (0..n)
            .map(|i| {
                (0..=n)
                    .filter(|&c| c != j)
                    .map(|c| moments[i + c].clone())
                    .collect()
            })
            .collect();
        let mut cof = bareiss::det(minor);
        if (n + j) % 2 == 1 {
            cof = -&cof;
        }
        ycoeffs.push(cof.try_div_exact(&h_prev)?);
    }
    Ok(YPoly::from_ycoeffs(ycoeffs))
}

/// Monic orthogonal polynomial of degree `n` by the three-term recurrence.
pub fn orth_poly_rec(params: &JacobiParams, n: usize) -> Result<YPoly> {
    let mut prev = YPoly::one(); // P_0
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = &YPoly::var() + &YPoly::constant(params.s_at(0)?.clone()); // P_1
    for m in 1..n {
        let shift = YPoly::constant(params.s_at(m)?.clone());
        let lead = &(&YPoly::var() + &shift) * &cur;
        let tail = prev.scale_poly(params.t_at(m)?);
        let next = &lead - &tail;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Extracts Jacobi parameters from raw moments.
///
/// `t_n = H_n H_{n-2} / H_{n-1}^2` (with `H_{-1} = 1`), and `s_n` comes
/// from the shifted-Hankel formula
/// `s_n = -(H_{n-1}(a_k) H_n(a_{k+1}) / H_n(a_k)
///        + H_n(a_k) H_{n-2}(a_{k+1}) / H_{n-1}(a_k)) / H_{n-1}(a_{k+1})`,
/// with `H_{-1} = 1` and `H_{-2} = 0` for both sequences. All divisions
/// are exact in the polynomial ring for the families handled here.
///
/// When a sequence is symmetric (odd moments all zero, e.g. the Euler
/// numbers) the shifted determinants `H_{n-1}(a_{k+1})` vanish for even
/// `n-1` and the formula degenerates to `0 = 0`; those `s_n` are then
/// read off the bordered-determinant polynomials instead.
pub fn jacobi_from_moments(seq: &MomentSeq, depth: usize) -> Result<JacobiParams> {
    let c0 = seq.gen(0);
    // H_{-1} = 1 stored at index 0, then H_0..H_depth.
    let mut h = vec![Poly::one()];
    for n in 0..=depth {
        let d = hankel_det(seq, n);
        if n < depth && d.is_zero() {
            return Err(Error::DegenerateMoments(n));
        }
        h.push(d);
    }
    let shifted = MomentSeq::new(SeqSpec::Shifted(Box::new(seq.spec().clone()), 1));
    let mut h1 = vec![Poly::one()];
    for n in 0..depth {
        h1.push(hankel_det(&shifted, n));
    }

    let mut t = Vec::with_capacity(depth);
    for n in 1..=depth {
        let num = &h[n + 1] * &h[n - 1];
        t.push(num.try_div_exact(&(&h[n] * &h[n]))?);
    }

    let at = |v: &[Poly], n: isize| -> Poly {
        // n indexes H_n with H_{-1} = 1, H_{-2} = 0
        if n < -1 {
            Poly::zero()
        } else {
            v[(n + 1) as usize].clone()
        }
    };
    let mut s = Vec::with_capacity(depth);
    for n in 0..depth as isize {
        let h1_nm1 = at(&h1, n - 1);
        if h1_nm1.is_zero() {
            s.push(s_from_bordered(seq, n as usize)?);
            continue;
        }
        let term1 = &at(&h, n - 1) * &at(&h1, n).try_div_exact(&at(&h, n))?;
        let term2 = &at(&h, n).try_div_exact(&at(&h, n - 1))? * &at(&h1, n - 2);
        let sum = &term1 + &term2;
        s.push(-&sum.try_div_exact(&h1_nm1)?);
    }
    Ok(JacobiParams { c0, s, t })
}

/// `s_n` read off the recurrence applied to the determinant-formula
/// polynomials: comparing `y^n` coefficients in
/// `P_{n+1} = (y + s_n) P_n - t_n P_{n-1}` with `P_n` monic gives
/// `s_n = [y^n] P_{n+1} - [y^{n-1}] P_n`.
fn s_from_bordered(seq: &MomentSeq, n: usize) -> Result<Poly> {
    let p_next = orth_poly_det(seq, n + 1)?;
    let lower = if n == 0 {
        Poly::zero()
    } else {
        orth_poly_det(seq, n)?.ycoeff(n - 1)
    };
    Ok(&p_next.ycoeff(n) - &lower)
}

/// The built-in recurrence families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// s_n = 1/2, tau_n = -n^4 / (4(2n+1)(2n-1)); orthogonal for the
    /// Bernoulli numbers.
    Touchard,
    /// s_n = 0, tau_n = n^2; orthogonal for the Euler numbers.
    AlSalamCarlitz,
    /// sigma_n = C(n+1,2) - (x^2-1)/4, tau_n = n^4 (x^2-n^2)/(4(2n+1)(2n-1));
    /// orthogonal for B_{2k+1}((x+1)/2).
    BernoulliOdd,
    /// sigma_n = (2n+1)(n + nu/2) - (x^2-1)/4,
    /// tau_n = n^2/4 (x^2 - (2n+nu-1)^2); orthogonal for
    /// E_{2k+nu}((x+1)/2), nu in {0, 1, 2}.
    EulerNu(usize),
}

impl Family {
    pub fn parse(name: &str) -> Result<Family> {
        match name {
            "touchard" => Ok(Family::Touchard),
            "alsalam-carlitz" => Ok(Family::AlSalamCarlitz),
            "bernoulli-odd" => Ok(Family::BernoulliOdd),
            "euler-nu(0)" | "euler-nu-0" => Ok(Family::EulerNu(0)),
            "euler-nu(1)" | "euler-nu-1" => Ok(Family::EulerNu(1)),
            "euler-nu(2)" | "euler-nu-2" => Ok(Family::EulerNu(2)),
            _ => Err(Error::Parse(format!(
                "unknown family {name:?}; known: touchard, alsalam-carlitz, bernoulli-odd, euler-nu(0|1|2)"
            ))),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Family::Touchard => "touchard".into(),
            Family::AlSalamCarlitz => "alsalam-carlitz".into(),
            Family::BernoulliOdd => "bernoulli-odd".into(),
            Family::EulerNu(nu) => format!("euler-nu({nu})"),
        }
    }

    /// The moment sequence this family is orthogonal against.
    pub fn moment_spec(&self) -> SeqSpec {
        match self {
            Family::Touchard => SeqSpec::BernoulliNum,
            Family::AlSalamCarlitz => SeqSpec::EulerNum,
            Family::BernoulliOdd => SeqSpec::BernoulliOddHalf,
            Family::EulerNu(nu) => SeqSpec::EulerNuHalf(*nu),
        }
    }

    /// sigma_n of the published recurrence (equal to s_n).
    pub fn sigma(&self, n: usize) -> Poly {
        match self {
            Family::Touchard => Poly::constant(qrat(1, 2)),
            Family::AlSalamCarlitz => Poly::zero(),
            Family::BernoulliOdd => {
                // C(n+1, 2) - (x^2 - 1)/4
                let tri = QRat::from_integer(BigInt::from(n * (n + 1) / 2));
                Poly::from_coeffs(vec![
                    tri + qrat(1, 4),
                    QRat::from_integer(0.into()),
                    qrat(-1, 4),
                ])
            }
            Family::EulerNu(nu) => {
                // (2n+1)(n + nu/2) - (x^2 - 1)/4
                let lin = QRat::from_integer(BigInt::from(2 * n + 1))
                    * (QRat::from_integer(BigInt::from(n)) + qrat(*nu as i64, 2));
                Poly::from_coeffs(vec![
                    lin + qrat(1, 4),
                    QRat::from_integer(0.into()),
                    qrat(-1, 4),
                ])
            }
        }
    }

    /// tau_n of the published recurrence (so `t_n = -tau_n`), n >= 1.
    pub fn tau(&self, n: usize) -> Poly {
        assert!(n >= 1);
        let nn = n as i64;
        match self {
            Family::Touchard => {
                let num = QRat::from_integer(BigInt::from(nn.pow(4)));
                let den = qrat(4 * (2 * nn + 1) * (2 * nn - 1), 1);
                Poly::constant(num / den)
            }
            Family::AlSalamCarlitz => Poly::from_i64(&[nn * nn]),
            Family::BernoulliOdd => {
                let scale = QRat::from_integer(BigInt::from(nn.pow(4)))
                    / qrat(4 * (2 * nn + 1) * (2 * nn - 1), 1);
                Poly::from_i64(&[-(nn * nn), 0, 1]).scale(&scale)
            }
            Family::EulerNu(nu) => {
                let root = 2 * nn + *nu as i64 - 1;
                Poly::from_i64(&[-(root * root), 0, 1]).scale(&qrat(nn * nn, 4))
            }
        }
    }

    /// The 0th moment of the family's sequence.
    pub fn c0(&self) -> Poly {
        MomentSeq::new(self.moment_spec()).gen(0)
    }

    /// Jacobi parameters to the requested depth, in the internal sign
    /// convention.
    pub fn params(&self, depth: usize) -> JacobiParams {
        JacobiParams {
            c0: self.c0(),
            s: (0..depth).map(|n| self.sigma(n)).collect(),
            t: (1..=depth).map(|n| -&self.tau(n)).collect(),
        }
    }
}

/// The family's degree-`n` member via its published recurrence.
pub fn named_family(family: Family, n: usize) -> YPoly {
    orth_poly_rec(&family.params(n.max(1)), n)
        .expect("family parameters cover the requested degree")
}

/// `L(y^r P_n)`: zero for `r < n`, and `H_n / H_{n-1}` at `r = n`.
pub fn verify_orthogonality(seq: &MomentSeq, n: usize, r: usize) -> Result<Poly> {
    let p = orth_poly_det(seq, n)?;
    Ok(apply_functional(seq, &p.mul_ypow(r)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::qint;
    use crate::seq::special::bernoulli_number;

    fn touchard_r4() -> YPoly {
        YPoly::from_ycoeffs(vec![
            Poly::constant(qrat(12, 35)),
            Poly::constant(qrat(10, 7)),
            Poly::constant(qrat(17, 7)),
            Poly::constant(qint(2)),
            Poly::one(),
        ])
    }

    #[test]
    fn functional_annihilates_touchard() {
        let seq = MomentSeq::new(SeqSpec::BernoulliNum);
        // R_1(y) = y + 1/2 maps to B_1 + 1/2 = 0
        let r1 = &YPoly::var() + &YPoly::constant(Poly::constant(qrat(1, 2)));
        assert_eq!(apply_functional(&seq, &r1), Poly::zero());
        // y * R_4(y) maps to B_5 + 2 B_4 + ... = 0
        assert_eq!(
            apply_functional(&seq, &touchard_r4().mul_ypow(1)),
            Poly::zero()
        );
        // the constant polynomial goes through c_0
        assert_eq!(
            apply_functional(&seq, &YPoly::one()),
            Poly::constant(bernoulli_number(0))
        );
    }

    #[test]
    fn determinant_formula_members() {
        let seq = MomentSeq::new(SeqSpec::BernoulliNum);
        assert_eq!(orth_poly_det(&seq, 0).unwrap(), YPoly::one());
        let p1 = orth_poly_det(&seq, 1).unwrap();
        assert_eq!(
            p1,
            &YPoly::var() + &YPoly::constant(Poly::constant(qrat(1, 2)))
        );
        assert_eq!(orth_poly_det(&seq, 4).unwrap(), touchard_r4());
    }

    #[test]
    fn recurrence_members() {
        // Touchard degree 2 equals the determinant formula
        let seq = MomentSeq::new(SeqSpec::BernoulliNum);
        let rec = named_family(Family::Touchard, 2);
        assert_eq!(rec, orth_poly_det(&seq, 2).unwrap());
        // Al-Salam-Carlitz Q_3 = y^3 + 5y
        let q3 = named_family(Family::AlSalamCarlitz, 3);
        assert_eq!(
            q3,
            YPoly::from_ycoeffs(vec![
                Poly::zero(),
                Poly::from_i64(&[5]),
                Poly::zero(),
                Poly::one()
            ])
        );
        assert_eq!(named_family(Family::Touchard, 0), YPoly::one());
    }

    #[test]
    fn bernoulli_odd_family_first_member() {
        // W_1(y; x) = y + sigma_0 = y - (x^2 - 1)/4
        let w1 = named_family(Family::BernoulliOdd, 1);
        assert_eq!(
            w1.ycoeff(0),
            Poly::from_coeffs(vec![qrat(1, 4), qint(0), qrat(-1, 4)])
        );
        assert!(w1.is_monic());
    }

    #[test]
    fn euler_nu1_first_member() {
        // q_1^(1)(y; x) = y + (3 - x^2)/4
        let q1 = named_family(Family::EulerNu(1), 1);
        assert_eq!(
            q1.ycoeff(0),
            Poly::from_coeffs(vec![qrat(3, 4), qint(0), qrat(-1, 4)])
        );
    }

    #[test]
    fn jacobi_extraction_matches_published_parameters() {
        // Euler numbers: s = (0,0,0), t = (-1,-4,-9)
        let seq = MomentSeq::new(SeqSpec::EulerNum);
        let params = jacobi_from_moments(&seq, 3).unwrap();
        assert_eq!(params.s, vec![Poly::zero(), Poly::zero(), Poly::zero()]);
        assert_eq!(
            params.t,
            vec![
                Poly::from_i64(&[-1]),
                Poly::from_i64(&[-4]),
                Poly::from_i64(&[-9])
            ]
        );

        // Bernoulli numbers to depth 2: s = (1/2, 1/2), t_1 = -1/12
        let seq = MomentSeq::new(SeqSpec::BernoulliNum);
        let params = jacobi_from_moments(&seq, 2).unwrap();
        assert_eq!(params.s[0], Poly::constant(qrat(1, 2)));
        assert_eq!(params.s[1], Poly::constant(qrat(1, 2)));
        assert_eq!(params.t[0], Poly::constant(qrat(-1, 12)));
        // cross-check H_1 = c_0^2 t_1 = -1/12
        assert_eq!(
            params.hankel_product(1).unwrap(),
            Poly::constant(qrat(-1, 12))
        );

        // odd Bernoulli family to depth 3 reproduces sigma, tau
        let seq = MomentSeq::new(SeqSpec::BernoulliOddHalf);
        let params = jacobi_from_moments(&seq, 3).unwrap();
        let family = Family::BernoulliOdd;
        for n in 0..3 {
            assert_eq!(params.s[n], family.sigma(n), "sigma_{n}");
        }
        for n in 1..=3 {
            assert_eq!(params.t[n - 1], -&family.tau(n), "tau_{n}");
        }
    }

    #[test]
    fn orthogonality_contract() {
        let seq = MomentSeq::new(SeqSpec::BernoulliNum);
        assert_eq!(verify_orthogonality(&seq, 4, 2).unwrap(), Poly::zero());
        let nu0 = MomentSeq::new(SeqSpec::EulerNuHalf(0));
        assert_eq!(verify_orthogonality(&nu0, 2, 0).unwrap(), Poly::zero());
        // at r = n the functional returns H_n / H_{n-1}
        let odd = MomentSeq::new(SeqSpec::BernoulliOddHalf);
        let got = verify_orthogonality(&odd, 3, 3).unwrap();
        let expected = hankel_det(&odd, 3)
            .try_div_exact(&hankel_det(&odd, 2))
            .unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn degenerate_moments_detected() {
        let ones = MomentSeq::new(SeqSpec::Table(vec![Poly::one(); 8]));
        assert!(matches!(
            orth_poly_det(&ones, 2),
            Err(Error::DegenerateMoments(1))
        ));
    }
}
