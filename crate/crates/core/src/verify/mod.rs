//! The machine-verification registry: every identity the library claims
//! is encoded here as a named check that recomputes both sides from
//! first principles. Checks are pure and independent, so the runner can
//! fan them out across threads; results come back sorted by id.

pub mod rng;

use std::time::Instant;

use serde::Serialize;

use crate::cfrac::formal::{
    formal_f, jfraction_series, jfraction_series_at_depth, moment_series,
    verify_jfraction_vs_moments, FKind,
};
use crate::cfrac::{
    cf_approximant, cf_equivalence, cf_even_contraction, cf_odd_contraction, CFSpec,
};
use crate::exact::poly::Poly;
use crate::exact::rational::{qint, qrat, QRat};
use crate::exact::series::{exp_series, series_divide, SeriesVar, TruncSeries};
use crate::hankel::{
    bareiss, closed_bernoulli_even_center, closed_bernoulli_numbers, closed_bernoulli_odd,
    closed_euler, hankel_det, hankel_matrix, EulerKind,
};
use crate::numerics::{digamma, trigamma, validate_identity, Identity, IdentityParams};
use crate::orthopoly::{
    apply_functional, jacobi_from_moments, orth_poly_det, orth_poly_rec, Family,
};
use crate::seq::special::{
    bernoulli_number, euler_number, euler_poly, verify_euler_from_bernoulli, verify_reflection,
};
use crate::seq::{MomentSeq, SeqSpec};
use crate::shift::{
    dn0_closed, dn_via_determinant, dn_via_recurrence, shifted_hankel_via_minors, BandMatrix,
};
use crate::{par, Error};
use rng::SplitMix64;

/// Depth cap and seed for the randomized suites.
#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub max_depth: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_depth: 8,
            seed: 0x5EED_0123,
        }
    }
}

type CheckFn = fn(&VerifyConfig) -> Result<String, String>;

pub struct Check {
    pub id: &'static str,
    pub module: &'static str,
    pub run: CheckFn,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub id: String,
    pub module: String,
    pub pass: bool,
    pub details: String,
    pub millis: u128,
}

macro_rules! ensure {
    ($cond:expr, $($arg:tt)*) => {
        // negation is deliberate for float conditions: NaN must fail
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !$cond {
            return Err(format!($($arg)*));
        }
    };
}

fn cap(cfg: &VerifyConfig, depth: usize) -> usize {
    depth.min(cfg.max_depth)
}

/// The standard built-in sequences used by the sweeps.
fn builtin_specs() -> Vec<SeqSpec> {
    vec![
        SeqSpec::BernoulliNum,
        SeqSpec::EulerNum,
        SeqSpec::BernoulliPoly,
        SeqSpec::EulerPoly,
        SeqSpec::BernoulliOddHalf,
        SeqSpec::EulerNuHalf(0),
        SeqSpec::EulerNuHalf(1),
        SeqSpec::EulerNuHalf(2),
    ]
}

fn families() -> Vec<Family> {
    vec![
        Family::Touchard,
        Family::AlSalamCarlitz,
        Family::BernoulliOdd,
        Family::EulerNu(0),
        Family::EulerNu(1),
        Family::EulerNu(2),
    ]
}

// ---------------------------------------------------------------- exact

fn check_ring_axioms(cfg: &VerifyConfig) -> Result<String, String> {
    let mut rng = SplitMix64::new(cfg.seed ^ 0x01);
    for case in 0..1000usize {
        let (a, b, c) = (rng.rat(), rng.rat(), rng.rat());
        ensure!(
            (&a + &b) + &c == &a + &(&b + &c),
            "rational add assoc, case {case}"
        );
        ensure!(
            (&a * &b) * &c == &a * &(&b * &c),
            "rational mul assoc, case {case}"
        );
        ensure!(
            &a * &(&b + &c) == &a * &b + &a * &c,
            "rational distrib, case {case}"
        );
        ensure!(
            &a + &b == &b + &a && &a * &b == &b * &a,
            "rational comm, case {case}"
        );
        let (p, q, r) = (rng.poly(3), rng.poly(3), rng.poly(3));
        ensure!(
            &(&p + &q) + &r == &p + &(&q + &r),
            "poly add assoc, case {case}"
        );
        ensure!(
            &(&p * &q) * &r == &p * &(&q * &r),
            "poly mul assoc, case {case}"
        );
        ensure!(
            &p * &(&q + &r) == &(&p * &q) + &(&p * &r),
            "poly distrib, case {case}"
        );
        ensure!(&p * &q == &q * &p, "poly comm, case {case}");
    }
    Ok("1000 randomized ring-axiom cases over rationals and polynomials".into())
}

fn check_division_roundtrip(cfg: &VerifyConfig) -> Result<String, String> {
    let mut rng = SplitMix64::new(cfg.seed ^ 0x02);
    for case in 0..300usize {
        let p = rng.poly(5);
        let q = rng.nonzero_poly(4);
        let prod = &p * &q;
        let back = prod
            .try_div_exact(&q)
            .map_err(|e| format!("case {case}: {e}"))?;
        ensure!(back == p, "division round-trip mismatch, case {case}");
    }
    Ok("300 randomized exact-division round-trips".into())
}

fn check_compose_associativity(cfg: &VerifyConfig) -> Result<String, String> {
    let mut rng = SplitMix64::new(cfg.seed ^ 0x03);
    for case in 0..150usize {
        let p = rng.poly(3);
        let a = rng.poly(3);
        let b = rng.poly(3);
        ensure!(
            p.compose(&a).compose(&b) == p.compose(&a.compose(&b)),
            "composition associativity, case {case}"
        );
    }
    Ok("150 randomized composition-associativity cases".into())
}

fn check_series_roundtrip(cfg: &VerifyConfig) -> Result<String, String> {
    let mut rng = SplitMix64::new(cfg.seed ^ 0x04);
    let order = 8;
    for case in 0..100usize {
        let num = TruncSeries::from_terms(
            SeriesVar::T,
            order,
            (0..=order).map(|e| (e, rng.poly(2))).collect(),
        );
        let mut den_terms: Vec<(i64, Poly)> = (1..=order).map(|e| (e, rng.poly(2))).collect();
        den_terms.push((0, Poly::constant(rng.nonzero_rat())));
        let den = TruncSeries::from_terms(SeriesVar::T, order, den_terms);
        let q = series_divide(&num, &den).map_err(|e| format!("case {case}: {e}"))?;
        let back = q.mul(&den).map_err(|e| format!("case {case}: {e}"))?;
        ensure!(
            back.agrees_with(&num, back.order()),
            "series division round-trip mismatch, case {case}"
        );
    }
    Ok("100 randomized series-division round-trips".into())
}

// ------------------------------------------------------------------ seq

fn check_genfunc_oracle(_cfg: &VerifyConfig) -> Result<String, String> {
    // one guard exponent: dividing by e^t - 1 costs one order of precision
    let order = 31i64;
    // t / (e^t - 1)
    let num = TruncSeries::monomial(SeriesVar::T, order, 1, Poly::one());
    let den =
        exp_series(&Poly::one(), SeriesVar::T, order).sub(&TruncSeries::one(SeriesVar::T, order));
    let bern = series_divide(&num, &den).map_err(|e| e.to_string())?;
    // 2 / (e^t + e^{-t})
    let two = TruncSeries::constant(SeriesVar::T, order, Poly::from_i64(&[2]));
    let cosh2 = exp_series(&Poly::one(), SeriesVar::T, order).add(&exp_series(
        &Poly::from_i64(&[-1]),
        SeriesVar::T,
        order,
    ));
    let eul = series_divide(&two, &cosh2).map_err(|e| e.to_string())?;
    let mut fact = qint(1);
    for n in 0..=30i64 {
        if n > 0 {
            fact *= qint(n);
        }
        ensure!(
            bern.coeff(n) == Poly::constant(&bernoulli_number(n as usize) / &fact),
            "Bernoulli generating function mismatch at n = {n}"
        );
        ensure!(
            eul.coeff(n) == Poly::constant(&euler_number(n as usize) / &fact),
            "Euler generating function mismatch at n = {n}"
        );
    }
    // 2 e^{xt} / (e^t + 1): Euler polynomials through n = 6
    let small = 6i64;
    let num = exp_series(&Poly::var(), SeriesVar::T, small).scale_rat(&qint(2));
    let den =
        exp_series(&Poly::one(), SeriesVar::T, small).add(&TruncSeries::one(SeriesVar::T, small));
    let epoly = series_divide(&num, &den).map_err(|e| e.to_string())?;
    let mut fact = qint(1);
    for n in 0..=small {
        if n > 0 {
            fact *= qint(n);
        }
        ensure!(
            epoly.coeff(n) == euler_poly(n as usize).scale(&fact.recip()),
            "Euler polynomial generating function mismatch at n = {n}"
        );
    }
    Ok("generating functions reproduce B_n, E_n (n <= 30) and E_n(x) (n <= 6)".into())
}

fn check_number_identities(_cfg: &VerifyConfig) -> Result<String, String> {
    for n in 0..=30usize {
        ensure!(
            crate::seq::special::bernoulli_poly(n).eval(&qint(0)) == bernoulli_number(n),
            "B_{n}(0) != B_{n}"
        );
        ensure!(
            euler_poly(n).eval(&qrat(1, 2)) == euler_number(n) / qrat(2, 1).pow(n as i32),
            "E_{n}(1/2) != E_{n}/2^{n}"
        );
    }
    for j in 1..=15usize {
        ensure!(
            bernoulli_number(2 * j + 1) == qint(0),
            "B_{} must vanish",
            2 * j + 1
        );
    }
    for j in 0..=15usize {
        ensure!(
            euler_number(2 * j + 1) == qint(0),
            "E_{} must vanish",
            2 * j + 1
        );
    }
    for n in 0..=12usize {
        ensure!(verify_reflection(n), "reflection fails at n = {n}");
    }
    for n in 1..=12usize {
        ensure!(
            verify_euler_from_bernoulli(n),
            "Euler-from-Bernoulli fails at n = {n}"
        );
    }
    Ok("number/polynomial consistency, odd-index vanishing, reflection".into())
}

// --------------------------------------------------------------- hankel

fn check_det_oracle(cfg: &VerifyConfig) -> Result<String, String> {
    let n_max = cap(cfg, 4);
    let mut count = 0usize;
    let mut specs = builtin_specs();
    specs.push(SeqSpec::BernoulliEvenHalf);
    specs.push(SeqSpec::BernoulliEvenCenter);
    for spec in specs {
        let seq = MomentSeq::new(spec);
        for n in 0..=n_max {
            let m = hankel_matrix(&seq, n);
            ensure!(
                bareiss::det(m.entries.clone()) == bareiss::det_cofactor(&m.entries),
                "elimination vs cofactor mismatch: {} at n = {n}",
                seq.name()
            );
            count += 1;
        }
    }
    Ok(format!(
        "{count} determinants agree with the cofactor oracle"
    ))
}

fn check_bernoulli_number_hankel(cfg: &VerifyConfig) -> Result<String, String> {
    let seq = MomentSeq::new(SeqSpec::BernoulliNum);
    let listed = [
        "1",
        "-1/12",
        "-1/540",
        "1/42000",
        "1/3215625",
        "-4/623959875",
        "-64/213746467935",
    ];
    for (n, text) in listed.iter().enumerate().take(cap(cfg, 6) + 1) {
        let expected = crate::exact::rational::parse_rat(text).unwrap();
        ensure!(
            hankel_det(&seq, n) == Poly::constant(expected.clone()),
            "H_{n}(B_k) != {text}"
        );
        ensure!(
            closed_bernoulli_numbers(n) == expected,
            "closed form differs at n = {n}"
        );
    }
    for n in 0..=cap(cfg, 8) {
        ensure!(
            hankel_det(&seq, n) == Poly::constant(closed_bernoulli_numbers(n)),
            "closed form vs determinant at n = {n}"
        );
    }
    if cfg.max_depth >= 10 {
        let det = hankel_det(&seq, 10);
        let expected = qrat(-1, 1) * (qint(2).pow(42) * qint(3).pow(15) * qint(5).pow(4))
            / (qint(11).pow(11) * qint(13).pow(9) * qint(17).pow(5) * qint(19).pow(3));
        ensure!(det == Poly::constant(expected), "H_10(B_k) factorization");
    }
    Ok("Bernoulli-number Hankel values and closed form".into())
}

fn check_bernoulli_odd_hankel(cfg: &VerifyConfig) -> Result<String, String> {
    let seq = MomentSeq::new(SeqSpec::BernoulliOddHalf);
    let n_max = cap(cfg, 6);
    for n in 0..=n_max {
        ensure!(
            hankel_det(&seq, n) == closed_bernoulli_odd(n),
            "odd-Bernoulli product formula fails at n = {n}"
        );
    }
    Ok(format!(
        "product formula matches determinants for n <= {n_max}"
    ))
}

fn check_euler_hankel_closed(cfg: &VerifyConfig) -> Result<String, String> {
    let nums = MomentSeq::new(SeqSpec::EulerNum);
    let polys = MomentSeq::new(SeqSpec::EulerPoly);
    for n in 0..=cap(cfg, 5) {
        ensure!(
            hankel_det(&nums, n) == closed_euler(EulerKind::Numbers, n),
            "Euler-number closed form at n = {n}"
        );
        // polynomial case carries the extra 2^{-n(n+1)} factor
        let scale = qrat(1, 2).pow((n * (n + 1)) as i32);
        ensure!(
            hankel_det(&polys, n) == closed_euler(EulerKind::Numbers, n).scale(&scale),
            "Euler-polynomial closed form at n = {n}"
        );
    }
    for nu in 0..=2usize {
        let seq = MomentSeq::new(SeqSpec::EulerNuHalf(nu));
        for n in 0..=cap(cfg, 4) {
            ensure!(
                hankel_det(&seq, n) == closed_euler(EulerKind::Nu(nu), n),
                "even/odd Euler closed form at nu = {nu}, n = {n}"
            );
        }
    }
    Ok("Euler closed forms (numbers, polynomials, shifted families)".into())
}

fn check_chen_identity(cfg: &VerifyConfig) -> Result<String, String> {
    let seq = MomentSeq::new(SeqSpec::BernoulliEvenCenter);
    for n in 0..=cap(cfg, 4) {
        ensure!(
            hankel_det(&seq, n) == Poly::constant(closed_bernoulli_even_center(n)),
            "centered even-Bernoulli product formula at n = {n}"
        );
    }
    Ok("centered even-Bernoulli Hankel product formula, n <= 4".into())
}

fn check_scaling_invariance(cfg: &VerifyConfig) -> Result<String, String> {
    let mut rng = SplitMix64::new(cfg.seed ^ 0x10);
    let n_max = cap(cfg, 4).max(1);
    for case in 0..200usize {
        let n = 1 + (case % n_max);
        let rows: Vec<Poly> = (0..=2 * n).map(|_| Poly::constant(rng.rat())).collect();
        let base = MomentSeq::new(SeqSpec::Table(rows.clone()));
        let factor = rng.nonzero_poly(2);
        let scaled = MomentSeq::new(SeqSpec::Scaled(
            Box::new(SeqSpec::Table(rows)),
            factor.clone(),
        ));
        let expected = &factor.pow(n * (n + 1)) * &hankel_det(&base, n);
        ensure!(
            hankel_det(&scaled, n) == expected,
            "geometric-scaling invariance fails, case {case} (n = {n})"
        );
    }
    Ok("200 seeded cases of the geometric-scaling determinant identity".into())
}

fn check_binomial_invariance(cfg: &VerifyConfig) -> Result<String, String> {
    let mut rng = SplitMix64::new(cfg.seed ^ 0x11);
    let n_max = cap(cfg, 4).max(1);
    for case in 0..200usize {
        let n = 1 + (case % n_max);
        let rows: Vec<Poly> = (0..=2 * n).map(|_| Poly::constant(rng.rat())).collect();
        let base = MomentSeq::new(SeqSpec::Table(rows.clone()));
        // alternate the symbolic variable and a random rational shift
        let shift = if case % 2 == 0 {
            Poly::var()
        } else {
            Poly::constant(rng.rat())
        };
        let transformed = MomentSeq::new(SeqSpec::BinomialTransform(
            Box::new(SeqSpec::Table(rows)),
            shift,
        ));
        ensure!(
            hankel_det(&transformed, n) == hankel_det(&base, n),
            "binomial-transform invariance fails, case {case} (n = {n})"
        );
    }
    Ok("200 seeded cases of the binomial-transform determinant identity".into())
}

fn check_euler_poly_scaling(cfg: &VerifyConfig) -> Result<String, String> {
    let nums = MomentSeq::new(SeqSpec::EulerNum);
    let polys = MomentSeq::new(SeqSpec::EulerPoly);
    for n in 0..=cap(cfg, 5) {
        let scale = qrat(1, 2).pow((n * (n + 1)) as i32);
        ensure!(
            hankel_det(&polys, n) == hankel_det(&nums, n).scale(&scale),
            "2^(-n(n+1)) scaling between Euler polynomials and numbers at n = {n}"
        );
    }
    Ok("Euler polynomial determinants are 2^(-n(n+1)) times the number case".into())
}

fn check_nonfactoring_even_bernoulli(_cfg: &VerifyConfig) -> Result<String, String> {
    let seq = MomentSeq::new(SeqSpec::BernoulliEvenHalf);
    let h1 = Poly::from_coeffs(vec![qrat(1, 45), qint(0), qrat(-1, 12)]);
    ensure!(
        hankel_det(&seq, 1) == h1,
        "even-Bernoulli H_1 control value"
    );
    let h2 = Poly::from_coeffs(vec![
        qrat(16, 55125),
        qint(0),
        qrat(-11, 4725),
        qint(0),
        qrat(97, 18900),
        qint(0),
        qrat(-1, 540),
    ]);
    ensure!(
        hankel_det(&seq, 2) == h2,
        "even-Bernoulli H_2 control value"
    );
    Ok("non-factoring even-Bernoulli controls match their recorded values".into())
}

// ------------------------------------------------------------ orthopoly

fn check_orthogonality_sweep(cfg: &VerifyConfig) -> Result<String, String> {
    let n_max = cap(cfg, 5);
    let mut count = 0usize;
    for family in families() {
        let seq = MomentSeq::new(family.moment_spec());
        for n in 1..=n_max {
            let p = orth_poly_det(&seq, n).map_err(|e| e.to_string())?;
            ensure!(p.is_monic(), "{}: P_{n} not monic", family.name());
            for r in 0..n {
                ensure!(
                    apply_functional(&seq, &p.mul_ypow(r)).is_zero(),
                    "{}: functional of y^{r} P_{n} nonzero",
                    family.name()
                );
                count += 1;
            }
            let ratio = hankel_det(&seq, n)
                .try_div_exact(&hankel_det(&seq, n - 1))
                .map_err(|e| e.to_string())?;
            ensure!(
                apply_functional(&seq, &p.mul_ypow(n)) == ratio,
                "{}: functional of y^{n} P_{n} differs from H_{n}/H_{}",
                family.name(),
                n - 1
            );
        }
    }
    Ok(format!(
        "{count} vanishing cases plus the diagonal ratios, all families"
    ))
}

fn check_touchard_r4(_cfg: &VerifyConfig) -> Result<String, String> {
    let seq = MomentSeq::new(SeqSpec::BernoulliNum);
    let r4 = orth_poly_det(&seq, 4).map_err(|e| e.to_string())?;
    let expected = crate::exact::ypoly::YPoly::from_ycoeffs(vec![
        Poly::constant(qrat(12, 35)),
        Poly::constant(qrat(10, 7)),
        Poly::constant(qrat(17, 7)),
        Poly::constant(qint(2)),
        Poly::one(),
    ]);
    ensure!(r4 == expected, "degree-4 member of the Bernoulli family");
    ensure!(
        r4 == crate::orthopoly::named_family(Family::Touchard, 4),
        "recurrence route differs from the determinant route"
    );
    for r in 0..4 {
        ensure!(
            apply_functional(&seq, &r4.mul_ypow(r)).is_zero(),
            "functional of y^{r} R_4 nonzero"
        );
    }
    Ok("R_4 coefficients exact; annihilation for r < 4".into())
}

fn check_det_rec_agreement(cfg: &VerifyConfig) -> Result<String, String> {
    let n_max = cap(cfg, 5);
    for family in families() {
        let seq = MomentSeq::new(family.moment_spec());
        let params = jacobi_from_moments(&seq, n_max).map_err(|e| e.to_string())?;
        for n in 0..=n_max {
            ensure!(
                orth_poly_rec(&params, n).map_err(|e| e.to_string())?
                    == orth_poly_det(&seq, n).map_err(|e| e.to_string())?,
                "{}: recurrence and determinant routes differ at n = {n}",
                family.name()
            );
        }
    }
    Ok(format!(
        "both construction routes agree for n <= {n_max}, all families"
    ))
}

fn check_jacobi_recovery(cfg: &VerifyConfig) -> Result<String, String> {
    let n_max = cap(cfg, 5);
    for family in families() {
        let seq = MomentSeq::new(family.moment_spec());
        let params = jacobi_from_moments(&seq, n_max).map_err(|e| e.to_string())?;
        let published = family.params(n_max);
        ensure!(
            params.c0 == published.c0,
            "{}: normalization differs",
            family.name()
        );
        for n in 0..n_max {
            ensure!(
                params.s[n] == published.s[n],
                "{}: s_{n} differs from the published recurrence",
                family.name()
            );
        }
        for n in 0..n_max {
            ensure!(
                params.t[n] == published.t[n],
                "{}: t_{} differs from the published recurrence",
                family.name(),
                n + 1
            );
        }
    }
    Ok(format!(
        "moment extraction reproduces all published parameters to depth {n_max}"
    ))
}

fn check_hankel_product_form(cfg: &VerifyConfig) -> Result<String, String> {
    let n_max = cap(cfg, 5);
    for family in families() {
        let seq = MomentSeq::new(family.moment_spec());
        let params = jacobi_from_moments(&seq, n_max).map_err(|e| e.to_string())?;
        for n in 0..=n_max {
            ensure!(
                params.hankel_product(n).map_err(|e| e.to_string())? == hankel_det(&seq, n),
                "{}: c_0^(n+1) t_1^n ... t_n != H_n at n = {n}",
                family.name()
            );
        }
    }
    Ok(format!(
        "Hankel determinants equal the t-product form, n <= {n_max}"
    ))
}

// ---------------------------------------------------------------- cfrac

fn random_cf(rng: &mut SplitMix64, len: usize) -> CFSpec<QRat> {
    let a: Vec<QRat> = (0..len).map(|_| rng.nonzero_rat()).collect();
    let b: Vec<QRat> = (0..len).map(|_| rng.nonzero_rat()).collect();
    CFSpec::from_tables(rng.rat(), a, b)
}

fn check_contraction_laws(cfg: &VerifyConfig) -> Result<String, String> {
    let mut rng = SplitMix64::new(cfg.seed ^ 0x20);
    for case in 0..500usize {
        let cf = random_cf(&mut rng, 9);
        let depth = 1 + (case % 4);
        let even = cf_even_contraction(&cf, depth).map_err(|e| format!("case {case}: {e}"))?;
        for k in 0..=depth {
            let c = cf_approximant(&even, k);
            let a = cf_approximant(&cf, 2 * k);
            ensure!(
                c.num == a.num && c.den == a.den,
                "even contraction pair mismatch, case {case}, k = {k}"
            );
        }
        let odd_depth = depth.min(4);
        let odd = cf_odd_contraction(&cf, odd_depth).map_err(|e| format!("case {case}: {e}"))?;
        for k in 0..=odd_depth {
            let c = cf_approximant(&odd, k);
            let a = cf_approximant(&cf, 2 * k + 1);
            ensure!(
                &c.num * &a.den == &a.num * &c.den,
                "odd contraction value mismatch, case {case}, k = {k}"
            );
            if k >= 1 {
                ensure!(
                    c.num == a.num && c.den == a.den,
                    "odd contraction pair mismatch, case {case}, k = {k}"
                );
            }
        }
    }
    symbolic_contraction_patterns()?;
    Ok("500 seeded contractions match the approximant definition; symbolic patterns hold".into())
}

/// The S-fraction contraction patterns with symbolic alpha_m = x^m and a
/// series variable t.
fn symbolic_contraction_patterns() -> Result<(), String> {
    let order = 16;
    let alpha = |m: usize| Poly::var().pow(m);
    let one = TruncSeries::one(SeriesVar::T, order);
    let cf = CFSpec::new(
        TruncSeries::zero(SeriesVar::T, order),
        move |m| {
            if m == 1 {
                TruncSeries::one(SeriesVar::T, order)
            } else {
                TruncSeries::monomial(SeriesVar::T, order, 1, -&alpha(m - 1))
            }
        },
        move |_| TruncSeries::one(SeriesVar::T, order),
        12,
    );
    let even = cf_even_contraction(&cf, 3).map_err(|e| e.to_string())?;
    ensure!(
        even.a(1).agrees_with(&one, order),
        "even contraction first numerator"
    );
    for k in 1..=3usize {
        // d_k = 1 - (alpha_{2k-2} + alpha_{2k-1}) t, with alpha_0 = 0
        let mut lin = Poly::var().pow(2 * k - 1);
        if k >= 2 {
            lin = &lin + &Poly::var().pow(2 * k - 2);
        }
        let expected = one.sub(&TruncSeries::monomial(SeriesVar::T, order, 1, lin));
        ensure!(
            even.b(k).agrees_with(&expected, order),
            "even contraction denominator pattern at k = {k}"
        );
        if k >= 2 {
            let quad = -&(&Poly::var().pow(2 * k - 3) * &Poly::var().pow(2 * k - 2));
            let expected = TruncSeries::monomial(SeriesVar::T, order, 2, quad);
            ensure!(
                even.a(k).agrees_with(&expected, order),
                "even contraction numerator pattern at k = {k}"
            );
        }
    }
    let odd = cf_odd_contraction(&cf, 3).map_err(|e| e.to_string())?;
    ensure!(odd.b0.agrees_with(&one, order), "odd contraction seed");
    let expected_c1 = TruncSeries::monomial(SeriesVar::T, order, 1, Poly::var());
    ensure!(
        odd.a(1).agrees_with(&expected_c1, order),
        "odd contraction first numerator"
    );
    for k in 1..=3usize {
        // d_k = 1 - (alpha_{2k-1} + alpha_{2k}) t
        let lin = &Poly::var().pow(2 * k - 1) + &Poly::var().pow(2 * k);
        let expected = one.sub(&TruncSeries::monomial(SeriesVar::T, order, 1, lin));
        ensure!(
            odd.b(k).agrees_with(&expected, order),
            "odd contraction denominator pattern at k = {k}"
        );
        if k >= 2 {
            let quad = -&(&Poly::var().pow(2 * k - 2) * &Poly::var().pow(2 * k - 1));
            let expected = TruncSeries::monomial(SeriesVar::T, order, 2, quad);
            ensure!(
                odd.a(k).agrees_with(&expected, order),
                "odd contraction numerator pattern at k = {k}"
            );
        }
    }
    Ok(())
}

fn check_equivalence_law(cfg: &VerifyConfig) -> Result<String, String> {
    let mut rng = SplitMix64::new(cfg.seed ^ 0x21);
    for case in 0..300usize {
        let cf = random_cf(&mut rng, 6);
        let r: Vec<QRat> = (0..=6).map(|_| rng.nonzero_rat()).collect();
        let transformed = cf_equivalence(&cf, |m| if m == 0 { qint(1) } else { r[m].clone() }, 5)
            .map_err(|e| format!("case {case}: {e}"))?;
        for n in 0..=5usize {
            let orig = cf_approximant(&cf, n);
            let new = cf_approximant(&transformed, n);
            ensure!(
                &orig.num * &new.den == &new.num * &orig.den,
                "equivalence changed approximant {n}, case {case}"
            );
        }
    }
    Ok("300 seeded equivalence transforms preserve every approximant".into())
}

fn check_cf_determinant_identity(cfg: &VerifyConfig) -> Result<String, String> {
    let mut rng = SplitMix64::new(cfg.seed ^ 0x22);
    for case in 0..200usize {
        let cf = random_cf(&mut rng, 5);
        let mut prod = qint(1);
        for n in 1..=5usize {
            prod = &prod * &cf.a(n);
            let hi = cf_approximant(&cf, n);
            let lo = cf_approximant(&cf, n - 1);
            let det = &hi.num * &lo.den - &lo.num * &hi.den;
            let sign = if (n - 1) % 2 == 0 { qint(1) } else { qint(-1) };
            ensure!(
                det == &sign * &prod,
                "determinant identity fails, case {case}, n = {n}"
            );
        }
    }
    Ok("200 seeded numerator/denominator determinant identities".into())
}

/// The trigamma-difference CF with symbolic parameters, carried into
/// J-fraction shape by the equivalence transform r_m = z^2/(4(2m-1)),
/// and the two Euler-side transforms.
fn check_polygamma_cf_transforms(_cfg: &VerifyConfig) -> Result<String, String> {
    let order = 12;
    let x = Poly::var();

    // Trigamma-difference CF at s = 2/z, b = x.
    let cf = CFSpec::new(
        TruncSeries::zero(SeriesVar::Z, order),
        {
            let x = x.clone();
            move |m| {
                if m == 1 {
                    TruncSeries::constant(SeriesVar::Z, order, x.clone())
                } else {
                    let k = (m - 1) as i64;
                    let c = Poly::from_i64(&[-(k * k), 0, 1]).scale(&qint(4 * k * k * k * k));
                    // a_{m} = -4(k^2 - x^2) k^4 = 4 k^4 (x^2 - k^2)
                    TruncSeries::constant(SeriesVar::Z, order, c)
                }
            }
        },
        {
            let x = x.clone();
            move |m| {
                let k = m as i64;
                let const_part =
                    (&Poly::from_i64(&[2 * k * (k - 1) + 1]) - &(&x * &x)).scale(&qint(2 * k - 1));
                TruncSeries::from_terms(
                    SeriesVar::Z,
                    order,
                    vec![(-2, Poly::from_i64(&[4 * (2 * k - 1)])), (0, const_part)],
                )
            }
        },
        8,
    );
    let transformed = cf_equivalence(
        &cf,
        |m| {
            if m == 0 {
                TruncSeries::one(SeriesVar::Z, order)
            } else {
                TruncSeries::monomial(
                    SeriesVar::Z,
                    order,
                    2,
                    Poly::constant(qrat(1, 4 * (2 * m as i64 - 1))),
                )
            }
        },
        5,
    )
    .map_err(|e| e.to_string())?;
    let w = Family::BernoulliOdd;
    let expected_c1 = TruncSeries::monomial(SeriesVar::Z, order, 2, Poly::var().scale(&qrat(1, 4)));
    ensure!(
        transformed.a(1).agrees_with(&expected_c1, order),
        "transformed numerator differs from (x/4) z^2"
    );
    for m in 1..=4usize {
        let expected_d = TruncSeries::one(SeriesVar::Z, order).add(&TruncSeries::monomial(
            SeriesVar::Z,
            order,
            2,
            w.sigma(m - 1),
        ));
        ensure!(
            transformed.b(m).agrees_with(&expected_d, order),
            "transformed denominator differs at m = {m}"
        );
        let expected_a = TruncSeries::monomial(SeriesVar::Z, order, 4, w.tau(m));
        ensure!(
            transformed.a(m + 1).agrees_with(&expected_a, order),
            "transformed numerator differs at m = {}",
            m + 1
        );
    }

    // Even-Euler digamma CF at s = 2/z: equivalence with r_m = z/2 turns
    // it into 1/(1 + (a_1/4) z^2 / (1 + ...)).
    fn lange_nu0(j: usize) -> Poly {
        if j % 2 == 1 {
            let n = j.div_ceil(2) as i64;
            Poly::from_i64(&[(2 * n - 1) * (2 * n - 1), 0, -1])
        } else {
            let n = (j / 2) as i64;
            Poly::from_i64(&[4 * n * n])
        }
    }
    let cf = CFSpec::new(
        TruncSeries::zero(SeriesVar::Z, order),
        {
            let lange = lange_nu0;
            move |m| {
                if m == 1 {
                    TruncSeries::monomial(SeriesVar::Z, order, -1, Poly::from_i64(&[2]))
                } else {
                    TruncSeries::constant(SeriesVar::Z, order, lange(m - 1))
                }
            }
        },
        move |_| TruncSeries::monomial(SeriesVar::Z, order, -1, Poly::from_i64(&[2])),
        10,
    );
    let transformed = cf_equivalence(
        &cf,
        |m| {
            if m == 0 {
                TruncSeries::one(SeriesVar::Z, order)
            } else {
                TruncSeries::monomial(SeriesVar::Z, order, 1, Poly::constant(qrat(1, 2)))
            }
        },
        6,
    )
    .map_err(|e| e.to_string())?;
    let one = TruncSeries::one(SeriesVar::Z, order);
    ensure!(
        transformed.a(1).agrees_with(&one, order),
        "even-Euler transform: first numerator is 1"
    );
    for m in 1..=5usize {
        ensure!(
            transformed.b(m).agrees_with(&one, order),
            "even-Euler transform: denominators are 1"
        );
        let expected =
            TruncSeries::monomial(SeriesVar::Z, order, 2, lange_nu0(m).scale(&qrat(1, 4)));
        ensure!(
            transformed.a(m + 1).agrees_with(&expected, order),
            "even-Euler transform: numerator (a_{m}/4) z^2"
        );
    }

    // Odd contraction of that S-fraction reproduces the nu = 2 J-fraction.
    let s_fraction = CFSpec::new(
        TruncSeries::zero(SeriesVar::Z, order),
        {
            let lange = lange_nu0;
            move |m| {
                if m == 1 {
                    TruncSeries::one(SeriesVar::Z, order)
                } else {
                    TruncSeries::monomial(SeriesVar::Z, order, 2, lange(m - 1).scale(&qrat(1, 4)))
                }
            }
        },
        move |_| TruncSeries::one(SeriesVar::Z, order),
        10,
    );
    let contracted = cf_odd_contraction(&s_fraction, 3).map_err(|e| e.to_string())?;
    ensure!(
        contracted.b0.agrees_with(&one, order),
        "odd contraction seed is 1"
    );
    let q2 = Family::EulerNu(2);
    let expected_c1 = TruncSeries::monomial(SeriesVar::Z, order, 2, q2.c0());
    ensure!(
        contracted.a(1).agrees_with(&expected_c1, order),
        "contracted numerator differs from E_2((x+1)/2) z^2"
    );
    for k in 1..=3usize {
        let expected_d = one.add(&TruncSeries::monomial(
            SeriesVar::Z,
            order,
            2,
            q2.sigma(k - 1),
        ));
        ensure!(
            contracted.b(k).agrees_with(&expected_d, order),
            "contracted denominator differs at k = {k}"
        );
        if k >= 2 {
            let expected_a = TruncSeries::monomial(SeriesVar::Z, order, 4, q2.tau(k - 1));
            ensure!(
                contracted.a(k).agrees_with(&expected_a, order),
                "contracted numerator differs at k = {k}"
            );
        }
    }
    Ok("polygamma CF transforms land on the published J-fraction parameters".into())
}

fn check_jfraction_moments(cfg: &VerifyConfig) -> Result<String, String> {
    let order = 12;
    let depth = cap(cfg, 8).max(order as usize / 2 + 1);
    for family in families() {
        let seq = MomentSeq::new(family.moment_spec());
        ensure!(
            verify_jfraction_vs_moments(&seq, &family.params(depth), order),
            "{}: J-fraction expansion differs from moments through z^{order}",
            family.name()
        );
    }
    // negative control
    let mut bad = Family::BernoulliOdd.params(depth);
    bad.t[0] = &bad.t[0] + &Poly::one();
    let odd = MomentSeq::new(SeqSpec::BernoulliOddHalf);
    ensure!(
        !verify_jfraction_vs_moments(&odd, &bad, order),
        "perturbed parameters must not match"
    );
    Ok(format!(
        "J-fraction expansions match moments through z^{order}, all families"
    ))
}

fn check_formal_series(_cfg: &VerifyConfig) -> Result<String, String> {
    let order = 16;
    let cases = [
        (FKind::BernoulliOdd, SeqSpec::BernoulliOddHalf),
        (FKind::EulerNu(0), SeqSpec::EulerNuHalf(0)),
        (FKind::EulerNu(1), SeqSpec::EulerNuHalf(1)),
        (FKind::EulerNu(2), SeqSpec::EulerNuHalf(2)),
    ];
    for (kind, spec) in cases {
        let f = formal_f(kind, order).map_err(|e| format!("{kind:?}: {e}"))?;
        let seq = MomentSeq::new(spec);
        ensure!(
            f.agrees_with(&moment_series(&seq, order), order),
            "{kind:?}: digamma assembly differs from the moment series"
        );
        ensure!(!f.has_log(), "{kind:?}: residual log term");
    }
    Ok(format!(
        "digamma assemblies match the moment series through z^{order}"
    ))
}

fn check_jfraction_depth_stability(_cfg: &VerifyConfig) -> Result<String, String> {
    let order = 20;
    for family in families() {
        let params = family.params(12);
        for d in 1..=5usize {
            let shallow = jfraction_series_at_depth(&params, order, d);
            let deep = jfraction_series_at_depth(&params, order, d + 1);
            let common = (4 * d as i64 - 2).min(order);
            ensure!(
                deep.agrees_with(&shallow, common),
                "{}: depths {d} and {} disagree through z^{common}",
                family.name(),
                d + 1
            );
        }
        // the public entry point embeds the same cross-check
        let _ = jfraction_series(&params, order);
    }
    Ok("truncation depths d and d+1 agree through z^(4d-2), all families".into())
}

// ---------------------------------------------------------------- shift

fn check_band_minor_agreement(cfg: &VerifyConfig) -> Result<String, String> {
    let n_max = cap(cfg, 5);
    for family in families() {
        let p = family.params(n_max + 1);
        for n in 0..=n_max {
            let m = BandMatrix::new(p.s.clone(), p.t.clone(), n).map_err(|e| e.to_string())?;
            ensure!(
                dn_via_determinant(&m)
                    == dn_via_recurrence(&p.s, &p.t, n as isize).map_err(|e| e.to_string())?,
                "{}: minor recurrence vs determinant at n = {n}",
                family.name()
            );
        }
    }
    // the recurrence is independent of where the parameters come from
    let mut rng = SplitMix64::new(cfg.seed ^ 0x30);
    for case in 0..50usize {
        let s: Vec<Poly> = (0..=4).map(|_| rng.poly(2)).collect();
        let t: Vec<Poly> = (0..4).map(|_| rng.poly(2)).collect();
        for n in 0..=3usize {
            let m = BandMatrix::new(s.clone(), t.clone(), n).map_err(|e| e.to_string())?;
            ensure!(
                dn_via_determinant(&m)
                    == dn_via_recurrence(&s, &t, n as isize).map_err(|e| e.to_string())?,
                "randomized band minors, case {case}, n = {n}"
            );
        }
    }
    Ok("band minors agree between recurrence and determinant (families + 50 random)".into())
}

fn check_even_euler_minor_closed(cfg: &VerifyConfig) -> Result<String, String> {
    let n_max = cap(cfg, 5);
    let p = Family::EulerNu(0).params(n_max + 1);
    for n in 0..=n_max {
        ensure!(
            dn0_closed(n) == dn_via_recurrence(&p.s, &p.t, n as isize).map_err(|e| e.to_string())?,
            "closed even-Euler minor at n = {n}"
        );
        let m = BandMatrix::new(p.s.clone(), p.t.clone(), n).map_err(|e| e.to_string())?;
        ensure!(
            dn0_closed(n) == dn_via_determinant(&m),
            "closed even-Euler minor vs determinant at n = {n}"
        );
    }
    Ok(format!(
        "closed product equals the band minors for n <= {n_max}"
    ))
}

fn check_table3_rows(_cfg: &VerifyConfig) -> Result<String, String> {
    let p = Family::EulerNu(1).params(5);
    let rows = [
        (vec![-3i64, 0, 1], 4i64),
        (vec![41, 0, -18, 0, 1], 16),
        (vec![-1323, 0, 655, 0, -53, 0, 1], 64),
        (vec![77841, 0, -41364, 0, 3958, 0, -116, 0, 1], 256),
    ];
    for (n, (coeffs, den)) in rows.iter().enumerate() {
        let expected = Poly::from_i64(coeffs).scale(&qrat(1, *den));
        ensure!(
            dn_via_recurrence(&p.s, &p.t, n as isize).map_err(|e| e.to_string())? == expected,
            "odd-Euler minor table row n = {n}"
        );
    }
    Ok("odd-Euler minor rows n = 0..3 exact".into())
}

fn check_shift_propagation(cfg: &VerifyConfig) -> Result<String, String> {
    let n_max = cap(cfg, 4);
    let mut count = 0usize;
    for spec in builtin_specs() {
        let seq = MomentSeq::new(spec.clone());
        for n in 0..=n_max.saturating_sub(1) {
            for shift in [1usize, 2] {
                let via_prop = shifted_hankel_via_minors(&seq, n, shift)
                    .map_err(|e| format!("{spec}: {e}"))?;
                let direct = hankel_det(
                    &MomentSeq::new(SeqSpec::Shifted(Box::new(spec.clone()), shift)),
                    n,
                );
                ensure!(
                    via_prop == direct,
                    "{spec}: shift-{shift} propagation differs at n = {n}"
                );
                count += 1;
            }
        }
    }
    Ok(format!(
        "{count} shifted determinants reproduced from unshifted data"
    ))
}

fn check_euler_shift_identities(cfg: &VerifyConfig) -> Result<String, String> {
    let n_max = cap(cfg, 3);
    let nu0 = MomentSeq::new(SeqSpec::EulerNuHalf(0));
    let nu1 = MomentSeq::new(SeqSpec::EulerNuHalf(1));
    let nu2 = MomentSeq::new(SeqSpec::EulerNuHalf(2));
    let nu3 = MomentSeq::new(SeqSpec::EulerNuHalf(3));
    let p1 = Family::EulerNu(1).params(n_max + 1);
    for n in 0..=n_max {
        // H_n(c^(2)) = H_n(c^(0)) * prod_{l=0}^{n} (x^2-(2l+1)^2)/4
        ensure!(
            hankel_det(&nu2, n) == &hankel_det(&nu0, n) * &dn0_closed(n),
            "nu-step identity (0 -> 2) at n = {n}"
        );
        // H_n(c^(3)) = H_n(c^(1)) * d_n^(1)
        let d1 = dn_via_recurrence(&p1.s, &p1.t, n as isize).map_err(|e| e.to_string())?;
        ensure!(
            hankel_det(&nu3, n) == &hankel_det(&nu1, n) * &d1,
            "nu-step identity (1 -> 3) at n = {n}"
        );
    }
    Ok(format!(
        "nu-step determinant identities hold for n <= {n_max}"
    ))
}

fn check_factor_retention(cfg: &VerifyConfig) -> Result<String, String> {
    let n_max = cap(cfg, 3);
    let shifted = MomentSeq::new(SeqSpec::Shifted(Box::new(SeqSpec::BernoulliOddHalf), 1));
    for n in 0..=n_max {
        let det = hankel_det(&shifted, n);
        // product of all linear factors of the unshifted closed form,
        // with multiplicities
        let mut factors = Poly::var().pow(n + 1);
        for l in 1..=n as i64 {
            factors = &factors * &Poly::from_i64(&[-(l * l), 0, 1]).pow(n + 1 - l as usize);
        }
        ensure!(
            det.try_div_exact(&factors).is_ok(),
            "shifted determinant loses linear factors at n = {n}"
        );
    }
    Ok(format!(
        "all linear factors retained under the index shift, n <= {n_max}"
    ))
}

// ------------------------------------------------------------- numerics

fn check_digamma_recurrence(cfg: &VerifyConfig) -> Result<String, String> {
    let mut rng = SplitMix64::new(cfg.seed ^ 0x40);
    for case in 0..200usize {
        let v = rng.float(0.1, 50.0);
        let lhs = digamma(v + 1.0).map_err(|e| e.to_string())?
            - digamma(v).map_err(|e| e.to_string())?
            - 1.0 / v;
        ensure!(
            lhs.abs() < 1e-13,
            "recurrence residual {lhs:e} at v = {v}, case {case}"
        );
    }
    Ok("200 random digamma recurrence residuals below 1e-13".into())
}

fn check_trigamma_series(cfg: &VerifyConfig) -> Result<String, String> {
    let mut rng = SplitMix64::new(cfg.seed ^ 0x41);
    for _ in 0..3 {
        let v = rng.float(0.2, 20.0);
        // defining series, summed upward from the small terms, plus the
        // Euler-Maclaurin tail 1/(v+K) + 1/(2(v+K)^2)
        let k_max = 1_000_000u64;
        let mut sum = 0.0f64;
        for k in (0..k_max).rev() {
            let t = v + k as f64;
            sum += 1.0 / (t * t);
        }
        let tail_base = v + k_max as f64;
        sum += 1.0 / tail_base + 0.5 / (tail_base * tail_base);
        let direct = trigamma(v).map_err(|e| e.to_string())?;
        ensure!(
            (sum - direct).abs() < 1e-10,
            "trigamma differs from defining series by {:e} at v = {v}",
            (sum - direct).abs()
        );
    }
    Ok("trigamma matches its defining series within 1e-10".into())
}

fn check_analytic_identities(_cfg: &VerifyConfig) -> Result<String, String> {
    let cases: [(Identity, [IdentityParams; 3]); 3] = [
        (
            Identity::RamanujanTrigamma,
            [
                IdentityParams {
                    s: 10.0,
                    a: 0.0,
                    b: 0.5,
                },
                IdentityParams {
                    s: 7.0,
                    a: 0.0,
                    b: 0.25,
                },
                IdentityParams {
                    s: 12.0,
                    a: 0.0,
                    b: 0.75,
                },
            ],
        ),
        (
            Identity::LangeDigammaSum,
            [
                IdentityParams {
                    s: 10.0,
                    a: 0.5,
                    b: 1.0,
                },
                IdentityParams {
                    s: 8.0,
                    a: 1.25,
                    b: 0.75,
                },
                IdentityParams {
                    s: 12.0,
                    a: 2.0,
                    b: 1.5,
                },
            ],
        ),
        (
            Identity::LangeDigammaAlt,
            [
                IdentityParams {
                    s: 10.0,
                    a: 0.5,
                    b: 0.0,
                },
                IdentityParams {
                    s: 12.0,
                    a: 1.5,
                    b: 0.0,
                },
                IdentityParams {
                    s: 15.0,
                    a: 2.5,
                    b: 0.0,
                },
            ],
        ),
    ];
    for (id, params) in cases {
        for p in params {
            let report = validate_identity(id, p, 30).map_err(|e| e.to_string())?;
            ensure!(
                report.abs_err < 1e-10,
                "{} at s = {}, a = {}, b = {}: |err| = {:e}",
                id.name(),
                p.s,
                p.a,
                p.b,
                report.abs_err
            );
        }
    }
    // terminating case: b = 1 collapses to an exact finite fraction
    let report = validate_identity(
        Identity::RamanujanTrigamma,
        IdentityParams {
            s: 4.0,
            a: 0.0,
            b: 1.0,
        },
        30,
    )
    .map_err(|e| e.to_string())?;
    ensure!(report.terminated, "b = 1 must terminate the fraction");
    ensure!(
        report.abs_err < 1e-14,
        "terminating case error {:e}",
        report.abs_err
    );
    Ok("three parameter sets per identity at depth 30; terminating case exact".into())
}

fn check_error_decay(_cfg: &VerifyConfig) -> Result<String, String> {
    let cases = [
        (
            Identity::RamanujanTrigamma,
            IdentityParams {
                s: 10.0,
                a: 0.0,
                b: 0.5,
            },
        ),
        (
            Identity::LangeDigammaSum,
            IdentityParams {
                s: 10.0,
                a: 0.5,
                b: 1.0,
            },
        ),
        (
            Identity::LangeDigammaAlt,
            IdentityParams {
                s: 10.0,
                a: 0.5,
                b: 0.0,
            },
        ),
    ];
    const NOISE_FLOOR: f64 = 1e-13;
    for (id, p) in cases {
        let mut prev = f64::INFINITY;
        for depth in [5usize, 10, 15, 20, 25, 30] {
            let err = validate_identity(id, p, depth)
                .map_err(|e| e.to_string())?
                .abs_err;
            ensure!(
                err <= prev * 1.000001 + NOISE_FLOOR,
                "{}: error grew from {prev:e} to {err:e} at depth {depth}",
                id.name()
            );
            prev = err;
        }
    }
    Ok("approximation error decreases with depth (within the noise floor)".into())
}

pub fn all_checks() -> Vec<Check> {
    vec![
        Check {
            id: "ring-axioms",
            module: "exact",
            run: check_ring_axioms,
        },
        Check {
            id: "division-roundtrip",
            module: "exact",
            run: check_division_roundtrip,
        },
        Check {
            id: "compose-associativity",
            module: "exact",
            run: check_compose_associativity,
        },
        Check {
            id: "series-roundtrip",
            module: "exact",
            run: check_series_roundtrip,
        },
        Check {
            id: "genfunc-oracle",
            module: "seq",
            run: check_genfunc_oracle,
        },
        Check {
            id: "number-identities",
            module: "seq",
            run: check_number_identities,
        },
        Check {
            id: "det-oracle",
            module: "hankel",
            run: check_det_oracle,
        },
        Check {
            id: "bernoulli-number-hankel",
            module: "hankel",
            run: check_bernoulli_number_hankel,
        },
        Check {
            id: "bernoulli-odd-hankel",
            module: "hankel",
            run: check_bernoulli_odd_hankel,
        },
        Check {
            id: "euler-hankel-closed",
            module: "hankel",
            run: check_euler_hankel_closed,
        },
        Check {
            id: "centered-even-bernoulli",
            module: "hankel",
            run: check_chen_identity,
        },
        Check {
            id: "scaling-invariance",
            module: "hankel",
            run: check_scaling_invariance,
        },
        Check {
            id: "binomial-invariance",
            module: "hankel",
            run: check_binomial_invariance,
        },
        Check {
            id: "euler-poly-scaling",
            module: "hankel",
            run: check_euler_poly_scaling,
        },
        Check {
            id: "nonfactoring-even-bernoulli",
            module: "hankel",
            run: check_nonfactoring_even_bernoulli,
        },
        Check {
            id: "orthogonality-sweep",
            module: "orthopoly",
            run: check_orthogonality_sweep,
        },
        Check {
            id: "bernoulli-degree4-member",
            module: "orthopoly",
            run: check_touchard_r4,
        },
        Check {
            id: "det-rec-agreement",
            module: "orthopoly",
            run: check_det_rec_agreement,
        },
        Check {
            id: "jacobi-recovery",
            module: "orthopoly",
            run: check_jacobi_recovery,
        },
        Check {
            id: "hankel-product-form",
            module: "orthopoly",
            run: check_hankel_product_form,
        },
        Check {
            id: "contraction-laws",
            module: "cfrac",
            run: check_contraction_laws,
        },
        Check {
            id: "equivalence-law",
            module: "cfrac",
            run: check_equivalence_law,
        },
        Check {
            id: "cf-determinant-identity",
            module: "cfrac",
            run: check_cf_determinant_identity,
        },
        Check {
            id: "polygamma-cf-transforms",
            module: "cfrac",
            run: check_polygamma_cf_transforms,
        },
        Check {
            id: "jfraction-moments",
            module: "cfrac",
            run: check_jfraction_moments,
        },
        Check {
            id: "formal-series",
            module: "cfrac",
            run: check_formal_series,
        },
        Check {
            id: "jfraction-depth-stability",
            module: "cfrac",
            run: check_jfraction_depth_stability,
        },
        Check {
            id: "band-minor-agreement",
            module: "shift",
            run: check_band_minor_agreement,
        },
        Check {
            id: "even-euler-minor-closed",
            module: "shift",
            run: check_even_euler_minor_closed,
        },
        Check {
            id: "odd-euler-minor-table",
            module: "shift",
            run: check_table3_rows,
        },
        Check {
            id: "shift-propagation",
            module: "shift",
            run: check_shift_propagation,
        },
        Check {
            id: "euler-shift-identities",
            module: "shift",
            run: check_euler_shift_identities,
        },
        Check {
            id: "factor-retention",
            module: "shift",
            run: check_factor_retention,
        },
        Check {
            id: "digamma-recurrence",
            module: "numerics",
            run: check_digamma_recurrence,
        },
        Check {
            id: "trigamma-series",
            module: "numerics",
            run: check_trigamma_series,
        },
        Check {
            id: "analytic-identities",
            module: "numerics",
            run: check_analytic_identities,
        },
        Check {
            id: "error-decay",
            module: "numerics",
            run: check_error_decay,
        },
    ]
}

pub fn known_modules() -> Vec<&'static str> {
    let mut mods: Vec<&'static str> = all_checks().iter().map(|c| c.module).collect();
    mods.dedup();
    mods
}

/// Runs the checks selected by `scope` ("all", a module name, or a check
/// id). Independent checks fan out across the thread pool; the report is
/// sorted by id so aggregation order never shows.
pub fn run_scope(scope: &str, cfg: &VerifyConfig) -> crate::Result<Vec<CheckOutcome>> {
    let checks = all_checks();
    let selected: Vec<Check> = if scope == "all" {
        checks
    } else if checks.iter().any(|c| c.module == scope) {
        checks.into_iter().filter(|c| c.module == scope).collect()
    } else if checks.iter().any(|c| c.id == scope) {
        checks.into_iter().filter(|c| c.id == scope).collect()
    } else {
        return Err(Error::Parse(format!(
            "unknown scope {scope:?}; use \"all\", a module ({}), or a check id",
            known_modules().join(", ")
        )));
    };
    let cfg = *cfg;
    let mut outcomes = par::map_collect(selected, move |check| {
        let start = Instant::now();
        let result = (check.run)(&cfg);
        let millis = start.elapsed().as_millis();
        let (pass, details) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        CheckOutcome {
            id: check.id.to_string(),
            module: check.module.to_string(),
            pass,
            details,
            millis,
        }
    });
    outcomes.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(outcomes)
}
