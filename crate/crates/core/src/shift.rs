//! Shifted-sequence machinery: the tridiagonal band matrix of the Jacobi
//! parameters, its leading principal minors `d_n`, propagation of Hankel
//! determinants under index shifts, and the closed forms for the
//! even-Euler minors.
//!
//! Band layout (in the internal `s, t` convention): diagonal `-s_i`,
//! superdiagonal 1, subdiagonal `t_i`, so for the classical families with
//! `t = -tau` the subdiagonal reads `-tau_i`.

use crate::error::{Error, Result};
use crate::exact::poly::Poly;
use crate::exact::rational::qrat;
use crate::hankel::{bareiss, hankel_det};
use crate::orthopoly::jacobi_from_moments;
use crate::seq::{MomentSeq, SeqSpec};

/// The (n+1) x (n+1) leading principal submatrix of the band matrix.
#[derive(Debug, Clone)]
pub struct BandMatrix {
    pub s: Vec<Poly>,
    pub t: Vec<Poly>,
    pub n: usize,
}

impl BandMatrix {
    /// Requires `s_0..s_n` and, for n >= 1, `t_1..t_n`.
    pub fn new(s: Vec<Poly>, t: Vec<Poly>, n: usize) -> Result<Self> {
        if s.len() <= n {
            return Err(Error::Arity {
                need: n + 1,
                have: s.len(),
            });
        }
        if t.len() < n {
            return Err(Error::Arity {
                need: n,
                have: t.len(),
            });
        }
        Ok(BandMatrix { s, t, n })
    }

    pub fn materialize(&self) -> bareiss::Matrix {
        let n = self.n;
        let mut m = vec![vec![Poly::zero(); n + 1]; n + 1];
        for i in 0..=n {
            m[i][i] = -&self.s[i];
            if i < n {
                m[i][i + 1] = Poly::one();
                m[i + 1][i] = self.t[i].clone();
            }
        }
        m
    }
}

/// `d_n` by the minor recurrence
/// `d_{n+1} = -s_{n+1} d_n - t_{n+1} d_{n-1}`, seeded `d_{-1} = 1`,
/// `d_0 = -s_0`. With the classical `t = -tau` mapping this is the
/// published `d_{n+1} = -sigma_{n+1} d_n + tau_{n+1} d_{n-1}`, and it is
/// independent of where the parameter lists come from.
pub fn dn_via_recurrence(s: &[Poly], t: &[Poly], n: isize) -> Result<Poly> {
    if n < -1 {
        return Err(Error::Domain("minor index below -1".into()));
    }
    let mut prev = Poly::one(); // d_{-1}
    if n == -1 {
        return Ok(prev);
    }
    let need = |lists_ok: bool, need: usize, have: usize| {
        if lists_ok {
            Ok(())
        } else {
            Err(Error::Arity { need, have })
        }
    };
    need(!s.is_empty(), 1, s.len())?;
    let mut cur = -&s[0]; // d_0
    for m in 1..=n as usize {
        need(s.len() > m, m + 1, s.len())?;
        need(t.len() >= m, m, t.len())?;
        let next = &(&(-&s[m]) * &cur) - &(&t[m - 1] * &prev);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `d_n` as an exact band-matrix determinant; an independent route that
/// must agree with the recurrence.
pub fn dn_via_determinant(m: &BandMatrix) -> Poly {
    bareiss::det(m.materialize())
}

/// Closed form of the even-Euler minors:
/// `d_n^(0) = prod_{l=0}^{n} (x^2 - (2l+1)^2) / 4`, expanded.
pub fn dn0_closed(n: usize) -> Poly {
    let mut acc = Poly::one();
    for l in 0..=n as i64 {
        let root = 2 * l + 1;
        acc = &acc * &Poly::from_i64(&[-root * root, 0, 1]).scale(&qrat(1, 4));
    }
    acc
}

/// Shifted Hankel determinants from unshifted data:
/// `H_n(a_{k+1}) = H_n(a_k) d_n` and
/// `H_n(a_{k+2}) = H_n(a_k) sum_{l=-1}^{n} d_l^2 prod_{j=l+2}^{n+1} t_j`
/// (the division-free regrouping of the published double product).
pub fn shifted_hankel_via_minors(seq: &MomentSeq, n: usize, shift: usize) -> Result<Poly> {
    if !(shift == 1 || shift == 2) {
        return Err(Error::Domain("shift must be 1 or 2".into()));
    }
    let params = jacobi_from_moments(seq, n + 1)?;
    let h = hankel_det(seq, n);
    // d_{-1}..d_n
    let mut d = Vec::with_capacity(n + 2);
    for m in -1..=n as isize {
        d.push(dn_via_recurrence(&params.s, &params.t, m)?);
    }
    if shift == 1 {
        return Ok(&h * &d[n + 1]);
    }
    let mut sum = Poly::zero();
    for (l, d_l) in d.iter().enumerate() {
        // slot l holds d_{l-1}
        let mut term = d_l * d_l;
        for t_j in &params.t[l..=n] {
            term = &term * t_j;
        }
        sum = &sum + &term;
    }
    Ok(&h * &sum)
}

/// `s_n` recovered from shifted Hankel determinants:
/// `s_n = -(H_{n-1}(a_k) H_n(a_{k+1}) / H_n(a_k)
///        + H_n(a_k) H_{n-2}(a_{k+1}) / H_{n-1}(a_k)) / H_{n-1}(a_{k+1})`.
pub fn s_from_shifted(seq: &MomentSeq, n: usize) -> Result<Poly> {
    let shifted = MomentSeq::new(SeqSpec::Shifted(Box::new(seq.spec().clone()), 1));
    let h = |m: isize| -> Poly {
        match m {
            -2 => Poly::zero(),
            -1 => Poly::one(),
            m => hankel_det(seq, m as usize),
        }
    };
    let h1 = |m: isize| -> Poly {
        match m {
            -2 => Poly::zero(),
            -1 => Poly::one(),
            m => hankel_det(&shifted, m as usize),
        }
    };
    let n = n as isize;
    let divisor = h1(n - 1);
    if divisor.is_zero() {
        return Err(Error::DegenerateMoments((n - 1).max(0) as usize));
    }
    let term1 = &h(n - 1) * &h1(n).try_div_exact(&h(n))?;
    let term2 = &h(n).try_div_exact(&h(n - 1))? * &h1(n - 2);
    Ok(-&(&term1 + &term2).try_div_exact(&divisor)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::qint;
    use crate::orthopoly::Family;

    #[test]
    fn minor_seeds_and_table_rows() {
        let p = Family::EulerNu(1).params(5);
        assert_eq!(dn_via_recurrence(&p.s, &p.t, -1).unwrap(), Poly::one());
        // d_0^(1) = (x^2 - 3)/4
        assert_eq!(
            dn_via_recurrence(&p.s, &p.t, 0).unwrap(),
            Poly::from_coeffs(vec![qrat(-3, 4), qint(0), qrat(1, 4)])
        );
        // d_2^(1) = (x^6 - 53 x^4 + 655 x^2 - 1323)/64
        let d2 = dn_via_recurrence(&p.s, &p.t, 2).unwrap();
        let expected = Poly::from_i64(&[-1323, 0, 655, 0, -53, 0, 1]).scale(&qrat(1, 64));
        assert_eq!(d2, expected);
    }

    #[test]
    fn determinant_route_agrees() {
        // 1x1 case is -sigma_0
        let p = Family::EulerNu(0).params(6);
        let m = BandMatrix::new(p.s.clone(), p.t.clone(), 0).unwrap();
        assert_eq!(dn_via_determinant(&m), -&p.s[0]);
        // n = 1 for the even-Euler family: (x^2-1)(x^2-9)/16
        let m = BandMatrix::new(p.s.clone(), p.t.clone(), 1).unwrap();
        let expected = &Poly::from_i64(&[-1, 0, 1]).scale(&qrat(1, 4))
            * &Poly::from_i64(&[-9, 0, 1]).scale(&qrat(1, 4));
        assert_eq!(dn_via_determinant(&m), expected);
        // recurrence vs determinant across the nu = 1 family
        let p1 = Family::EulerNu(1).params(6);
        for n in 0..=3usize {
            let m = BandMatrix::new(p1.s.clone(), p1.t.clone(), n).unwrap();
            assert_eq!(
                dn_via_determinant(&m),
                dn_via_recurrence(&p1.s, &p1.t, n as isize).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn closed_even_euler_minors() {
        assert_eq!(
            dn0_closed(0),
            Poly::from_i64(&[-1, 0, 1]).scale(&qrat(1, 4))
        );
        let p = Family::EulerNu(0).params(6);
        for n in 0..=4usize {
            assert_eq!(
                dn0_closed(n),
                dn_via_recurrence(&p.s, &p.t, n as isize).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn shift_propagation_matches_direct_determinants() {
        let seq = MomentSeq::new(SeqSpec::EulerNuHalf(0));
        for n in 0..=3usize {
            for shift in [1usize, 2] {
                let via_prop = shifted_hankel_via_minors(&seq, n, shift).unwrap();
                let direct = hankel_det(
                    &MomentSeq::new(SeqSpec::Shifted(Box::new(SeqSpec::EulerNuHalf(0)), shift)),
                    n,
                );
                assert_eq!(via_prop, direct, "n = {n}, shift = {shift}");
            }
        }
    }

    #[test]
    fn s_recovery() {
        // Bernoulli odd family: s_1 = sigma_1
        let seq = MomentSeq::new(SeqSpec::BernoulliOddHalf);
        assert_eq!(
            s_from_shifted(&seq, 1).unwrap(),
            Family::BernoulliOdd.sigma(1)
        );
        // Euler numbers: no s-term at n = 2
        let e = MomentSeq::new(SeqSpec::EulerNum);
        assert_eq!(s_from_shifted(&e, 2).unwrap(), Poly::zero());
        // even-Euler family at n = 0
        let nu0 = MomentSeq::new(SeqSpec::EulerNuHalf(0));
        assert_eq!(
            s_from_shifted(&nu0, 0).unwrap(),
            Family::EulerNu(0).sigma(0)
        );
    }
}
