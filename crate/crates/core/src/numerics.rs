//! Double-precision digamma/trigamma and floating continued-fraction
//! evaluation, used only to validate the analytic identities that are
//! not purely formal. No exact API consumes anything from this module;
//! the only crossing is exact Bernoulli numbers feeding the asymptotic
//! coefficients as f64.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exact::rational::rat_to_f64;
use crate::seq::special::bernoulli_number;

/// B_{2k}/(2k) for k = 1..=9 (through B_18), from the exact generator.
fn digamma_coeffs() -> &'static [f64; 9] {
    static COEFFS: OnceLock<[f64; 9]> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let mut out = [0.0; 9];
        for (k, slot) in out.iter_mut().enumerate() {
            let n = 2 * (k + 1);
            *slot = rat_to_f64(&bernoulli_number(n)) / n as f64;
        }
        out
    })
}

/// B_{2k} for k = 1..=9.
fn trigamma_coeffs() -> &'static [f64; 9] {
    static COEFFS: OnceLock<[f64; 9]> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let mut out = [0.0; 9];
        for (k, slot) in out.iter_mut().enumerate() {
            *slot = rat_to_f64(&bernoulli_number(2 * (k + 1)));
        }
        out
    })
}

const ASYMPTOTIC_CUTOFF: f64 = 10.0;

/// Digamma for positive arguments: argument raising to v >= 10, then the
/// asymptotic series with Bernoulli coefficients through B_18.
pub fn digamma(v: f64) -> Result<f64> {
    if v.is_nan() || v <= 0.0 {
        return Err(Error::Domain(format!("digamma requires v > 0, got {v}")));
    }
    let mut acc = 0.0;
    let mut x = v;
    while x < ASYMPTOTIC_CUTOFF {
        acc -= 1.0 / x;
        x += 1.0;
    }
    let mut result = x.ln() - 0.5 / x;
    let inv2 = 1.0 / (x * x);
    let mut pow = inv2;
    for c in digamma_coeffs() {
        result -= c * pow;
        pow *= inv2;
    }
    Ok(acc + result)
}

/// Trigamma for positive arguments, by the same raising strategy:
/// psi'(v) = psi'(v+1) + 1/v^2, then
/// 1/x + 1/(2x^2) + sum B_{2k} / x^{2k+1}.
pub fn trigamma(v: f64) -> Result<f64> {
    if v.is_nan() || v <= 0.0 {
        return Err(Error::Domain(format!("trigamma requires v > 0, got {v}")));
    }
    let mut acc = 0.0;
    let mut x = v;
    while x < ASYMPTOTIC_CUTOFF {
        acc += 1.0 / (x * x);
        x += 1.0;
    }
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut result = inv + 0.5 * inv2;
    let mut pow = inv2 * inv;
    for c in trigamma_coeffs() {
        result += c * pow;
        pow *= inv2;
    }
    Ok(acc + result)
}

/// A continued fraction with real partial quantities.
pub struct FloatCF {
    pub b0: f64,
    pub a: Box<dyn Fn(usize) -> f64 + Send + Sync>,
    pub b: Box<dyn Fn(usize) -> f64 + Send + Sync>,
    pub depth: usize,
}

/// Outcome of a floating evaluation. `warning` flags a near-vanishing
/// final denominator; the value is then the best available estimate.
#[derive(Debug, Clone, Copy)]
pub struct CfEval {
    pub value: f64,
    pub terminated: bool,
    pub warning: bool,
}

/// Forward evaluation of `A_depth / B_depth` with overflow-guarded
/// rescaling of the running pairs.
pub fn cf_eval_float(cf: &FloatCF) -> CfEval {
    let mut num_prev = 1.0; // A_{-1}
    let mut num = cf.b0; // A_0
    let mut den_prev = 0.0; // B_{-1}
    let mut den = 1.0; // B_0
    let mut terminated = false;
    for m in 1..=cf.depth {
        let a_m = (cf.a)(m);
        if a_m == 0.0 {
            terminated = true;
            break;
        }
        let b_m = (cf.b)(m);
        let num_next = b_m * num + a_m * num_prev;
        let den_next = b_m * den + a_m * den_prev;
        num_prev = num;
        num = num_next;
        den_prev = den;
        den = den_next;
        let scale = num.abs().max(den.abs());
        if scale > 1e250 {
            let inv = 1.0 / scale;
            num *= inv;
            num_prev *= inv;
            den *= inv;
            den_prev *= inv;
        }
    }
    let warning = den.abs() < 1e-280 * num.abs().max(1.0);
    CfEval {
        value: num / den,
        terminated,
        warning,
    }
}

/// The analytic identities under numerical validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    /// Trigamma difference sum_k (1/(s-b+2k+1)^2 - 1/(s+b+2k+1)^2)
    /// against its continued fraction with
    /// b_m = (2m-1)(s^2 - b^2 + 2m(m-1) + 1), a_1 = b,
    /// a_{m+1} = -4(m^2 - b^2) m^4.
    RamanujanTrigamma,
    /// Four-digamma sum over quarter-shifted arguments against
    /// 1/(s + K(a_m/s)) with a_{2n-1} = (2n-1)^2 b^2 - a^2, a_{2n} = 4n^2 b^2.
    LangeDigammaSum,
    /// Alternating four-digamma combination against
    /// (a/(s^2-1)) / (1 + K(a_m/1)) with a_{2n} = ((2n)^2 - a^2)/(s^2-1),
    /// a_{2n+1} = (2n)^2/(s^2-1).
    LangeDigammaAlt,
}

impl Identity {
    pub fn parse(name: &str) -> Result<Identity> {
        match name {
            "ramanujan-trigamma" => Ok(Identity::RamanujanTrigamma),
            "lange-digamma-sum" => Ok(Identity::LangeDigammaSum),
            "lange-digamma-alt" => Ok(Identity::LangeDigammaAlt),
            _ => Err(Error::Parse(format!(
                "unknown identity {name:?}; known: ramanujan-trigamma, lange-digamma-sum, lange-digamma-alt"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Identity::RamanujanTrigamma => "ramanujan-trigamma",
            Identity::LangeDigammaSum => "lange-digamma-sum",
            Identity::LangeDigammaAlt => "lange-digamma-alt",
        }
    }
}

/// Free parameters of the identities. `RamanujanTrigamma` uses (s, b),
/// `LangeDigammaSum` uses (s, a, b), `LangeDigammaAlt` uses (s, a).
#[derive(Debug, Clone, Copy)]
pub struct IdentityParams {
    pub s: f64,
    pub a: f64,
    pub b: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct ValidationReport {
    pub lhs: f64,
    pub rhs: f64,
    pub abs_err: f64,
    pub terminated: bool,
    pub warning: bool,
}

/// Evaluates both sides of an identity: the left side through the
/// digamma/trigamma evaluators, the right side through the floating
/// continued fraction at the requested depth.
pub fn validate_identity(
    which: Identity,
    params: IdentityParams,
    depth: usize,
) -> Result<ValidationReport> {
    let IdentityParams { s, a, b } = params;
    let (lhs, cf) = match which {
        Identity::RamanujanTrigamma => {
            // sum_k 1/(u + 2k + 1)^2 = trigamma((u+1)/2) / 4
            let lhs = (trigamma((s - b + 1.0) / 2.0)? - trigamma((s + b + 1.0) / 2.0)?) / 4.0;
            let s2b2 = s * s - b * b;
            let cf = FloatCF {
                b0: 0.0,
                a: Box::new(move |m| {
                    if m == 1 {
                        b
                    } else {
                        let k = (m - 1) as f64;
                        -4.0 * (k * k - b * b) * k.powi(4)
                    }
                }),
                b: Box::new(move |m| {
                    let k = m as f64;
                    (2.0 * k - 1.0) * (s2b2 + 2.0 * k * (k - 1.0) + 1.0)
                }),
                depth,
            };
            (lhs, cf)
        }
        Identity::LangeDigammaSum => {
            let lhs = (digamma((s - a + 3.0 * b) / (4.0 * b))? - digamma((s - a + b) / (4.0 * b))?
                + digamma((s + a + 3.0 * b) / (4.0 * b))?
                - digamma((s + a + b) / (4.0 * b))?)
                / (4.0 * b);
            let cf = FloatCF {
                b0: 0.0,
                a: Box::new(move |m| {
                    if m == 1 {
                        1.0
                    } else {
                        // Lange's a_{m-1}
                        let j = m - 1;
                        if j % 2 == 1 {
                            let n = j.div_ceil(2) as f64;
                            (2.0 * n - 1.0).powi(2) * b * b - a * a
                        } else {
                            let n = (j / 2) as f64;
                            4.0 * n * n * b * b
                        }
                    }
                }),
                b: Box::new(move |_| s),
                depth,
            };
            (lhs, cf)
        }
        Identity::LangeDigammaAlt => {
            let lhs = (digamma((s - a + 3.0) / 4.0)? - digamma((s + a + 3.0) / 4.0)?
                + digamma((s + a + 1.0) / 4.0)?
                - digamma((s - a + 1.0) / 4.0)?)
                / 4.0;
            let s2m1 = s * s - 1.0;
            if s2m1 == 0.0 {
                return Err(Error::Domain("s^2 - 1 must be nonzero".into()));
            }
            let cf = FloatCF {
                b0: 0.0,
                a: Box::new(move |m| {
                    if m == 1 {
                        a / s2m1
                    } else if m % 2 == 0 {
                        let n = (m / 2) as f64;
                        ((2.0 * n).powi(2) - a * a) / s2m1
                    } else {
                        let n = ((m - 1) / 2) as f64;
                        (2.0 * n).powi(2) / s2m1
                    }
                }),
                b: Box::new(move |_| 1.0),
                depth,
            };
            (lhs, cf)
        }
    };
    let eval = cf_eval_float(&cf);
    Ok(ValidationReport {
        lhs,
        rhs: eval.value,
        abs_err: (lhs - eval.value).abs(),
        terminated: eval.terminated,
        warning: eval.warning,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

    #[test]
    fn digamma_reference_values() {
        assert!((digamma(1.0).unwrap() + EULER_GAMMA).abs() < 1e-12);
        let half = -EULER_GAMMA - 2.0 * 2f64.ln();
        assert!((digamma(0.5).unwrap() - half).abs() < 1e-12);
        assert!((digamma(2.0).unwrap() - (1.0 - EULER_GAMMA)).abs() < 1e-12);
        assert!(digamma(0.0).is_err());
        assert!(digamma(-1.5).is_err());
    }

    #[test]
    fn trigamma_reference_values() {
        assert!((trigamma(1.0).unwrap() - PI * PI / 6.0).abs() < 1e-12);
        assert!((trigamma(0.5).unwrap() - PI * PI / 2.0).abs() < 1e-12);
        // leading asymptotic for large argument: next term is 1/(2v^2)
        let v = 1e6;
        assert!((trigamma(v).unwrap() - 1.0 / v).abs() < 1.0 / (v * v));
    }

    #[test]
    fn digamma_recurrence_residual() {
        let mut v = 0.13;
        for _ in 0..50 {
            let lhs = digamma(v + 1.0).unwrap() - digamma(v).unwrap() - 1.0 / v;
            assert!(lhs.abs() < 1e-13, "residual {lhs} at v = {v}");
            v += 0.91;
        }
    }

    #[test]
    fn terminating_ramanujan_case() {
        // b = 1: the second partial numerator vanishes, value is exactly
        // b / (s^2 - b^2 + 1) = 1/16 at s = 4.
        let report = validate_identity(
            Identity::RamanujanTrigamma,
            IdentityParams {
                s: 4.0,
                a: 0.0,
                b: 1.0,
            },
            30,
        )
        .unwrap();
        assert!(report.terminated);
        assert!((report.rhs - 1.0 / 16.0).abs() < 1e-15);
        assert!(report.abs_err < 1e-14, "err = {}", report.abs_err);
    }

    #[test]
    fn generic_depth_one() {
        let cf = FloatCF {
            b0: 2.0,
            a: Box::new(|_| 3.0),
            b: Box::new(|_| 4.0),
            depth: 1,
        };
        let eval = cf_eval_float(&cf);
        assert!((eval.value - (2.0 + 3.0 / 4.0)).abs() < 1e-15);
    }

    #[test]
    fn identities_converge_at_depth_30() {
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
        for (id, p) in cases {
            let report = validate_identity(id, p, 30).unwrap();
            assert!(
                report.abs_err < 1e-10,
                "{}: err = {:e}",
                id.name(),
                report.abs_err
            );
        }
    }
}
