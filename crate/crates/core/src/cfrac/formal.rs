//! The formal series side of the continued-fraction identities:
//! expansion of a J-fraction into its moment series, and the asymptotic
//! digamma/trigamma series whose combinations reproduce the generating
//! functions of the odd Bernoulli and shifted Euler sequences.
//!
//! Variable bookkeeping is done purely by exponent maps and powers of 2:
//! a series in the reciprocal unit `w` (standing for the inverse of the
//! large argument) is turned into a series in `z` by an exponent-wise
//! scale factor (w = 2z contributes 2^m at exponent m) and an exponent
//! shift for the outer power of z. Log terms must cancel before any
//! reindexing step.

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::poly::Poly;
use crate::exact::rational::{qrat, QRat};
use crate::exact::series::{series_divide, SeriesVar, TruncSeries};
use crate::orthopoly::JacobiParams;
use crate::seq::special::bernoulli_poly;
use crate::seq::MomentSeq;

/// Expands the J-fraction
/// `c_0 / (1 + s_0 z^2 - t_1 z^4 / (1 + s_1 z^2 - ...))`
/// as a power series in `z` through `z^order`.
///
/// Truncation depth policy: the nominal depth is `order/2 + 1`; a
/// depth-d tail already matches the full expansion through `z^{4d-2}`,
/// and when the parameters allow it the result is cross-checked against
/// the depth-(d-1) expansion on their common range.
pub fn jfraction_series(params: &JacobiParams, order: i64) -> TruncSeries {
    let t_order = (order.max(0) as usize) / 2;
    // depth d consumes s_0..s_{d-1} and t_1..t_{d-1}
    let max_depth = params.s.len().min(params.t.len() + 1);
    let depth = (t_order + 1).min(max_depth).max(1);
    assert!(
        2 * depth > t_order,
        "parameters too short: depth {depth} matches only through z^{}, need z^{order}",
        4 * depth - 2
    );
    let result = jfraction_series_at_depth(params, order, depth);
    if depth >= 2 {
        let shallower = jfraction_series_at_depth(params, order, depth - 1);
        let common = (4 * (depth - 1) as i64 - 2).min(order);
        assert!(
            result.agrees_with(&shallower, common),
            "J-fraction expansions at depths {depth} and {} disagree",
            depth - 1
        );
    }
    result
}

/// Expansion at an explicit truncation depth; exposed for the
/// cross-depth stability diagnostics.
pub fn jfraction_series_at_depth(params: &JacobiParams, order: i64, depth: usize) -> TruncSeries {
    let one = TruncSeries::one(SeriesVar::Z, order);
    // innermost denominator: 1 + s_{depth-1} z^2
    let mut den = one.add(&TruncSeries::monomial(
        SeriesVar::Z,
        order,
        2,
        params.s[depth - 1].clone(),
    ));
    for j in (0..depth - 1).rev() {
        let tail_num = TruncSeries::monomial(SeriesVar::Z, order, 4, params.t[j].clone());
        let tail = series_divide(&tail_num, &den).expect("J-fraction denominators are units");
        den = one
            .add(&TruncSeries::monomial(
                SeriesVar::Z,
                order,
                2,
                params.s[j].clone(),
            ))
            .sub(&tail);
    }
    let num = TruncSeries::constant(SeriesVar::Z, order, params.c0.clone());
    series_divide(&num, &den).expect("J-fraction denominators are units")
}

/// The moment generating series `sum_k seq.gen(k) z^{2k}` through `z^order`.
pub fn moment_series(seq: &MomentSeq, order: i64) -> TruncSeries {
    let mut terms = Vec::new();
    let mut k = 0usize;
    while 2 * k as i64 <= order {
        terms.push((2 * k as i64, seq.gen(k)));
        k += 1;
    }
    TruncSeries::from_terms(SeriesVar::Z, order, terms)
}

/// Coefficient-wise comparison of the J-fraction expansion against the
/// moment series through `z^order`.
pub fn verify_jfraction_vs_moments(seq: &MomentSeq, params: &JacobiParams, order: i64) -> bool {
    jfraction_series(params, order).agrees_with(&moment_series(seq, order), order)
}

/// Asymptotic digamma series at argument `1/w + a`:
/// log slot 1, and coefficient `(-1)^{m-1} B_m(a) / m` at `w^m`.
pub fn psi_asymptotic(a: &Poly, order: i64) -> TruncSeries {
    let mut terms = Vec::new();
    for m in 1..=order.max(0) {
        let mut c = bernoulli_poly(m as usize)
            .compose(a)
            .scale(&(QRat::one() / QRat::from_integer(m.into())));
        if m % 2 == 0 {
            c = -&c;
        }
        terms.push((m, c));
    }
    let mut s = TruncSeries::from_terms(SeriesVar::W, order, terms);
    s.set_log_coeff(Poly::one());
    s
}

/// Asymptotic trigamma series at argument `1/w + a`:
/// no log slot, coefficient `(-1)^{m-1} B_{m-1}(a)` at `w^m`.
pub fn psi_prime_asymptotic(a: &Poly, order: i64) -> TruncSeries {
    let mut terms = Vec::new();
    for m in 1..=order.max(0) {
        let mut c = bernoulli_poly((m - 1) as usize).compose(a);
        if m % 2 == 0 {
            c = -&c;
        }
        terms.push((m, c));
    }
    TruncSeries::from_terms(SeriesVar::W, order, terms)
}

/// Which moment generating function to assemble from digamma series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FKind {
    /// sum B_{2k+1}((x+1)/2) z^{2k}
    BernoulliOdd,
    /// sum E_{2k+nu}((x+1)/2) z^{2k}
    EulerNu(usize),
}

fn quarter(offset: i64, x_sign: i64) -> Poly {
    // (offset + x_sign * x) / 4
    Poly::from_coeffs(vec![qrat(offset, 4), qrat(x_sign, 4)])
}

/// Assembles the right-hand sides of the digamma identities as a series
/// in `z` through `z^order` (order must be even). All log terms must
/// cancel exactly in the combination; a residue is an assembly bug and
/// reported as [`Error::FormalCancellation`].
pub fn formal_f(kind: FKind, order: i64) -> Result<TruncSeries> {
    if order < 0 || order % 2 != 0 {
        return Err(Error::Domain("order must be even and nonnegative".into()));
    }
    match kind {
        FKind::BernoulliOdd => {
            // (psi'(1/z + (1-x)/2) - psi'(1/z + (1+x)/2)) / (2 z^2)
            let o = order + 2;
            let lo = Poly::from_coeffs(vec![qrat(1, 2), qrat(-1, 2)]);
            let hi = Poly::from_coeffs(vec![qrat(1, 2), qrat(1, 2)]);
            let diff = psi_prime_asymptotic(&lo, o).sub(&psi_prime_asymptotic(&hi, o));
            if diff.has_log() {
                return Err(Error::FormalCancellation);
            }
            let in_z = diff
                .relabel(SeriesVar::Z)
                .shift_exp(-2)?
                .scale_rat(&qrat(1, 2));
            finish(in_z, order)
        }
        FKind::EulerNu(0) => {
            let f = euler_psi_combination(&[1, -1, 1, -1], order + 1)?;
            // divide by 2z
            finish(f.shift_exp(-1)?.scale_rat(&qrat(1, 2)), order)
        }
        FKind::EulerNu(1) => {
            let f = euler_psi_combination(&[-1, 1, 1, -1], order + 2)?;
            // divide by 2 z^2
            finish(f.shift_exp(-2)?.scale_rat(&qrat(1, 2)), order)
        }
        FKind::EulerNu(2) => {
            // (F^(0)(z) - 1) / z^2
            let f0 = formal_f(FKind::EulerNu(0), order + 2)?;
            let numer = f0.sub(&TruncSeries::one(SeriesVar::Z, order + 2));
            finish(numer.shift_exp(-2)?, order)
        }
        FKind::EulerNu(nu) => Err(Error::Domain(format!(
            "no digamma assembly for nu = {nu}; only 0, 1, 2"
        ))),
    }
}

/// Signed combination of the four digamma series at arguments
/// `1/(2z) + (3+x)/4, (1+x)/4, (3-x)/4, (1-x)/4`, reindexed from the
/// `w = 2z` unit into `z` (factor `2^m` at exponent m).
fn euler_psi_combination(signs: &[i64; 4], order: i64) -> Result<TruncSeries> {
    let args = [quarter(3, 1), quarter(1, 1), quarter(3, -1), quarter(1, -1)];
    let mut acc = TruncSeries::zero(SeriesVar::W, order);
    for (sign, a) in signs.iter().zip(args.iter()) {
        let s = psi_asymptotic(a, order);
        acc = if *sign >= 0 { acc.add(&s) } else { acc.sub(&s) };
    }
    if acc.has_log() {
        return Err(Error::FormalCancellation);
    }
    acc.reindex_scale(&qrat(2, 1), SeriesVar::Z)
}

/// Final hygiene: no exponent below zero may survive, and the series is
/// reported at exactly the requested order.
fn finish(s: TruncSeries, order: i64) -> Result<TruncSeries> {
    for (e, c) in s.terms() {
        if *e < 0 && !c.is_zero() {
            return Err(Error::FormalCancellation);
        }
    }
    let terms = s
        .terms()
        .filter(|(e, _)| **e >= 0 && **e <= order)
        .map(|(e, c)| (*e, c.clone()))
        .collect();
    Ok(TruncSeries::from_terms(SeriesVar::Z, order, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::qint;
    use crate::orthopoly::Family;
    use crate::seq::special::{euler_poly, half_shift};
    use crate::seq::SeqSpec;

    #[test]
    fn jfraction_expansion_first_terms() {
        // odd Bernoulli family: x/2 + (x^3 - x)/8 z^2 + ...
        let params = Family::BernoulliOdd.params(4);
        let s = jfraction_series(&params, 2);
        assert_eq!(s.coeff(0), Poly::from_coeffs(vec![qint(0), qrat(1, 2)]));
        assert_eq!(
            s.coeff(2),
            Poly::from_coeffs(vec![qint(0), qrat(-1, 8), qint(0), qrat(1, 8)])
        );
        // order 0 returns the bare normalization
        let s0 = jfraction_series(&Family::EulerNu(1).params(3), 0);
        assert_eq!(s0.coeff(0), Poly::from_coeffs(vec![qint(0), qrat(1, 2)]));
    }

    #[test]
    fn depth_one_expansion_is_geometric_in_s0() {
        // at depth 1 the fraction collapses to c_0 / (1 + s_0 z^2)
        let params = Family::BernoulliOdd.params(3);
        let s = jfraction_series_at_depth(&params, 6, 1);
        assert_eq!(s.coeff(0), params.c0);
        assert_eq!(s.coeff(2), -&(&params.c0 * &params.s[0]));
        assert_eq!(s.coeff(4), &params.c0 * &(&params.s[0] * &params.s[0]));
    }

    #[test]
    fn jfraction_matches_moments_and_detects_perturbation() {
        let seq = MomentSeq::new(SeqSpec::BernoulliOddHalf);
        let params = Family::BernoulliOdd.params(8);
        assert!(verify_jfraction_vs_moments(&seq, &params, 12));
        // negative control: perturb t_1
        let mut bad = params.clone();
        bad.t[0] = &bad.t[0] + &Poly::one();
        assert!(!verify_jfraction_vs_moments(&seq, &bad, 12));
    }

    #[test]
    fn psi_series_coefficients() {
        // at a = 1/2 the w^1 coefficient B_1(1/2) vanishes
        let s = psi_asymptotic(&Poly::constant(qrat(1, 2)), 3);
        assert_eq!(s.coeff(1), Poly::zero());
        assert_eq!(s.log_coeff(), &Poly::one());
        // trigamma: leading 1/w, and at a = 1/2 the w^2 coefficient vanishes
        let sp = psi_prime_asymptotic(&Poly::zero(), 1);
        assert_eq!(sp.coeff(1), Poly::one());
        assert!(!sp.has_log());
        let sp_half = psi_prime_asymptotic(&Poly::constant(qrat(1, 2)), 2);
        assert_eq!(sp_half.coeff(2), Poly::zero());
    }

    #[test]
    fn trigamma_difference_combination() {
        // psi'(1/w + (1+x)/2) - psi'(1/w + (1-x)/2) = -x w^2 + ...
        let hi = Poly::from_coeffs(vec![qrat(1, 2), qrat(1, 2)]);
        let lo = Poly::from_coeffs(vec![qrat(1, 2), qrat(-1, 2)]);
        let diff = psi_prime_asymptotic(&hi, 4).sub(&psi_prime_asymptotic(&lo, 4));
        assert_eq!(diff.coeff(1), Poly::zero());
        assert_eq!(diff.coeff(2), Poly::from_i64(&[0, -1]));
    }

    #[test]
    fn formal_series_match_moment_sequences() {
        // odd Bernoulli: coefficients B_1, B_3, ... at (x+1)/2
        let f = formal_f(FKind::BernoulliOdd, 8).unwrap();
        let seq = MomentSeq::new(SeqSpec::BernoulliOddHalf);
        assert!(f.agrees_with(&moment_series(&seq, 8), 8));

        // Euler nu = 0 at order 0 is exactly 1
        let f0 = formal_f(FKind::EulerNu(0), 0).unwrap();
        assert_eq!(f0.coeff(0), Poly::one());

        // Euler nu = 1: E_1, E_3, E_5 at (x+1)/2 through z^4
        let f1 = formal_f(FKind::EulerNu(1), 4).unwrap();
        for k in 0..=2usize {
            let expected = euler_poly(2 * k + 1).compose(&half_shift());
            assert_eq!(f1.coeff(2 * k as i64), expected, "k = {k}");
        }
    }
}
