//! Bernoulli and Euler numbers and polynomials.
//!
//! Numbers come from their defining recurrences with global memoization;
//! the generating-function route in [`crate::exact::series`] serves as an
//! independent cross-check in the test and verification suites.
//! Polynomials are assembled from the numbers through the binomial
//! expansions that connect the two.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact::poly::Poly;
use crate::exact::rational::{qrat, QRat};

pub fn binomial_big(n: usize, k: usize) -> BigInt {
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

pub fn qbinom(n: usize, k: usize) -> QRat {
    QRat::from_integer(binomial_big(n, k))
}

fn bernoulli_memo() -> &'static Mutex<Vec<QRat>> {
    static MEMO: OnceLock<Mutex<Vec<QRat>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(vec![QRat::from_integer(1.into())]))
}

/// B_n, from sum_{j=0}^{n} C(n+1, j) B_j = 0 with B_0 = 1.
pub fn bernoulli_number(n: usize) -> QRat {
    let mut memo = bernoulli_memo().lock().unwrap();
    while memo.len() <= n {
        let m = memo.len(); // computing B_m
        let mut acc = QRat::zero();
        for (j, b) in memo.iter().enumerate() {
            acc += QRat::from_integer(binomial_big(m + 1, j)) * b;
        }
        let val = -acc / QRat::from_integer(BigInt::from(m + 1));
        memo.push(val);
    }
    memo[n].clone()
}

fn euler_memo() -> &'static Mutex<Vec<QRat>> {
    static MEMO: OnceLock<Mutex<Vec<QRat>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(vec![QRat::from_integer(1.into())]))
}

/// E_n. Odd indices vanish; even indices satisfy
/// sum_{j=0}^{n} C(2n, 2j) E_{2j} = 0 with E_0 = 1.
pub fn euler_number(n: usize) -> QRat {
    if !n.is_multiple_of(2) {
        return QRat::zero();
    }
    let half = n / 2;
    let mut memo = euler_memo().lock().unwrap(); // memo[j] = E_{2j}
    while memo.len() <= half {
        let m = memo.len(); // computing E_{2m}
        let mut acc = QRat::zero();
        for (j, e) in memo.iter().enumerate() {
            acc += QRat::from_integer(binomial_big(2 * m, 2 * j)) * e;
        }
        memo.push(-acc);
    }
    memo[half].clone()
}

fn bernoulli_poly_memo() -> &'static Mutex<Vec<Poly>> {
    static MEMO: OnceLock<Mutex<Vec<Poly>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(Vec::new()))
}

/// B_n(x) = sum_j C(n, j) B_j x^{n-j}, monic of degree n.
pub fn bernoulli_poly(n: usize) -> Poly {
    {
        let memo = bernoulli_poly_memo().lock().unwrap();
        if let Some(p) = memo.get(n) {
            return p.clone();
        }
    }
    let mut coeffs = vec![QRat::zero(); n + 1];
    for j in 0..=n {
        coeffs[n - j] = qbinom(n, j) * bernoulli_number(j);
    }
    let p = Poly::from_coeffs(coeffs);
    let mut memo = bernoulli_poly_memo().lock().unwrap();
    while memo.len() <= n {
        let m = memo.len();
        if m == n {
            memo.push(p.clone());
        } else {
            let mut c = vec![QRat::zero(); m + 1];
            for j in 0..=m {
                c[m - j] = qbinom(m, j) * bernoulli_number(j);
            }
            memo.push(Poly::from_coeffs(c));
        }
    }
    p
}

fn euler_poly_memo() -> &'static Mutex<Vec<Poly>> {
    static MEMO: OnceLock<Mutex<Vec<Poly>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(Vec::new()))
}

/// E_n(x) = sum_j C(n, j) (E_j / 2^j) (x - 1/2)^{n-j}, monic of degree n.
pub fn euler_poly(n: usize) -> Poly {
    {
        let memo = euler_poly_memo().lock().unwrap();
        if let Some(p) = memo.get(n) {
            return p.clone();
        }
    }
    let shifted = Poly::from_coeffs(vec![qrat(-1, 2), qrat(1, 1)]); // x - 1/2
    let build = |m: usize| {
        let mut acc = Poly::zero();
        for j in 0..=m {
            let scale = qbinom(m, j) * euler_number(j) / qrat(2, 1).pow(j as i32);
            if scale.is_zero() {
                continue;
            }
            acc = &acc + &shifted.pow(m - j).scale(&scale);
        }
        acc
    };
    let p = build(n);
    let mut memo = euler_poly_memo().lock().unwrap();
    while memo.len() <= n {
        let m = memo.len();
        memo.push(if m == n { p.clone() } else { build(m) });
    }
    p
}

/// The substitution target (x+1)/2.
pub fn half_shift() -> Poly {
    Poly::from_coeffs(vec![qrat(1, 2), qrat(1, 2)])
}

/// Checks the reflection identities B_n(1-x) = (-1)^n B_n(x) and
/// E_n(1-x) = (-1)^n E_n(x).
pub fn verify_reflection(n: usize) -> bool {
    let one_minus_x = Poly::from_i64(&[1, -1]);
    let sign = |p: &Poly| if n.is_multiple_of(2) { p.clone() } else { -p };
    let b = bernoulli_poly(n);
    let e = euler_poly(n);
    b.compose(&one_minus_x) == sign(&b) && e.compose(&one_minus_x) == sign(&e)
}

/// Checks E_{n-1}(x) = (2^n / n) (B_n((x+1)/2) - B_n(x/2)), together with
/// the same identity precomposed with (x+1)/2, which rewrites the left
/// side at (x+1)/2 through quarter-shifted Bernoulli polynomials.
pub fn verify_euler_from_bernoulli(n: usize) -> bool {
    assert!(n >= 1, "identity requires n >= 1");
    let bn = bernoulli_poly(n);
    let scale = qrat(2, 1).pow(n as i32) / QRat::from_integer(BigInt::from(n));
    let x_half = Poly::from_coeffs(vec![QRat::zero(), qrat(1, 2)]);
    let plain = (&bn.compose(&half_shift()) - &bn.compose(&x_half)).scale(&scale);
    if plain != euler_poly(n - 1) {
        return false;
    }
    // Shifted variant: E_{n-1}((x+1)/2) = (2^n/n)(B_n((x+3)/4) - B_n((x+1)/4)).
    let three_quarter = Poly::from_coeffs(vec![qrat(3, 4), qrat(1, 4)]);
    let one_quarter = Poly::from_coeffs(vec![qrat(1, 4), qrat(1, 4)]);
    let shifted = (&bn.compose(&three_quarter) - &bn.compose(&one_quarter)).scale(&scale);
    shifted == euler_poly(n - 1).compose(&half_shift())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::qint;

    #[test]
    fn bernoulli_numbers() {
        assert_eq!(bernoulli_number(0), qint(1));
        assert_eq!(bernoulli_number(1), qrat(-1, 2));
        assert_eq!(bernoulli_number(6), qrat(1, 42));
        assert_eq!(bernoulli_number(7), qint(0));
        assert_eq!(bernoulli_number(12), qrat(-691, 2730));
    }

    #[test]
    fn euler_numbers() {
        assert_eq!(euler_number(0), qint(1));
        assert_eq!(euler_number(3), qint(0));
        assert_eq!(euler_number(4), qint(5));
        assert_eq!(euler_number(6), qint(-61));
    }

    #[test]
    fn bernoulli_polys() {
        assert_eq!(bernoulli_poly(0), Poly::one());
        assert_eq!(
            bernoulli_poly(2),
            Poly::from_coeffs(vec![qrat(1, 6), qint(-1), qint(1)])
        );
        assert_eq!(
            bernoulli_poly(5),
            Poly::from_coeffs(vec![
                qint(0),
                qrat(-1, 6),
                qint(0),
                qrat(5, 3),
                qrat(-5, 2),
                qint(1)
            ])
        );
    }

    #[test]
    fn euler_polys() {
        assert_eq!(euler_poly(1), Poly::from_coeffs(vec![qrat(-1, 2), qint(1)]));
        assert_eq!(
            euler_poly(3),
            Poly::from_coeffs(vec![qrat(1, 4), qint(0), qrat(-3, 2), qint(1)])
        );
        assert_eq!(euler_poly(6), Poly::from_i64(&[0, -3, 0, 5, 0, -3, 1]));
    }

    #[test]
    fn polys_evaluate_back_to_numbers() {
        for n in 0..=12 {
            assert_eq!(bernoulli_poly(n).eval(&qint(0)), bernoulli_number(n));
            assert_eq!(
                euler_poly(n).eval(&qrat(1, 2)),
                euler_number(n) / qrat(2, 1).pow(n as i32)
            );
        }
    }

    #[test]
    fn odd_bernoulli_composition_matches_product_oracle() {
        // B_3(u) = u(u - 1)(u - 1/2), so at u = (x+1)/2 the product
        // telescopes to x(x^2 - 1)/8
        let u = half_shift();
        let oracle = &(&u * &(&u - &Poly::one())) * &(&u - &Poly::constant(qrat(1, 2)));
        assert_eq!(bernoulli_poly(3).compose(&half_shift()), oracle);
        assert_eq!(
            oracle,
            Poly::from_coeffs(vec![qint(0), qrat(-1, 8), qint(0), qrat(1, 8)])
        );
    }

    #[test]
    fn reflection_holds() {
        for n in [0, 3, 12] {
            assert!(verify_reflection(n));
        }
    }

    #[test]
    fn euler_from_bernoulli_holds() {
        for n in [1, 2, 7] {
            assert!(verify_euler_from_bernoulli(n));
        }
    }
}
