//! Hankel matrices, exact determinants, and the closed product forms.
//!
//! Indexing contract used everywhere in this crate: `H_n` denotes the
//! determinant of the (n+1) x (n+1) matrix `(c_{i+j})_{0 <= i,j <= n}`,
//! so `hankel_det(seq, 0) = c_0`.

pub mod bareiss;

use num_bigint::BigInt;
use num_traits::One;

use crate::exact::poly::Poly;
use crate::exact::rational::{qrat, QRat};
use crate::render::FactoredForm;
use crate::seq::MomentSeq;

/// A materialized Hankel matrix `(c_{i+j})`.
#[derive(Debug, Clone)]
pub struct HankelMatrix {
    pub n: usize,
    pub entries: bareiss::Matrix,
    pub source: String,
}

impl HankelMatrix {
    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i][j]
    }
}

/// Fills the (n+1) x (n+1) matrix from `seq.gen(0..=2n)`.
pub fn hankel_matrix(seq: &MomentSeq, n: usize) -> HankelMatrix {
    let moments = seq.prefix(2 * n + 1);
    let entries = (0..=n)
        .map(|i| (0..=n).map(|j| moments[i + j].clone()).collect())
        .collect();
    HankelMatrix {
        n,
        entries,
        source: seq.name(),
    }
}

/// Exact Hankel determinant by fraction-free elimination.
pub fn hankel_det(seq: &MomentSeq, n: usize) -> Poly {
    bareiss::det(hankel_matrix(seq, n).entries)
}

/// Single-threaded variant, for the benchmark comparison.
pub fn hankel_det_sequential(seq: &MomentSeq, n: usize) -> Poly {
    bareiss::det_sequential(hankel_matrix(seq, n).entries)
}

/// Parity of C(n+1, 2), the sign exponent of the product formulas.
fn half_triangle_sign(n: usize) -> QRat {
    if (n * (n + 1) / 2).is_multiple_of(2) {
        QRat::one()
    } else {
        -QRat::one()
    }
}

fn qint_big(n: u64) -> QRat {
    QRat::from_integer(BigInt::from(n))
}

/// H_n of the Bernoulli numbers:
/// (-1)^C(n+1,2) prod_{l=1}^{n} (l^4 / (4(2l+1)(2l-1)))^{n+1-l}.
pub fn closed_bernoulli_numbers(n: usize) -> QRat {
    let mut acc = half_triangle_sign(n);
    for l in 1..=n as u64 {
        let base = qint_big(l).pow(4) / (qint_big(4) * qint_big(2 * l + 1) * qint_big(2 * l - 1));
        acc *= base.pow((n as i32) + 1 - l as i32);
    }
    acc
}

/// H_n of `B_{2k+1}((x+1)/2)` in factored form:
/// (-1)^C(n+1,2) (x/2)^{n+1} prod (l^4 (x^2 - l^2) / (4(2l+1)(2l-1)))^{n+1-l}.
pub fn closed_bernoulli_odd_factored(n: usize) -> FactoredForm {
    let mut scale = half_triangle_sign(n) * qrat(1, 2).pow(n as i32 + 1);
    let mut form = FactoredForm::new(QRat::one());
    form.push(Poly::var(), n + 1);
    for l in 1..=n as u64 {
        let exp = n + 1 - l as usize;
        let coeff = qint_big(l).pow(4) / (qint_big(4) * qint_big(2 * l + 1) * qint_big(2 * l - 1));
        scale *= coeff.pow(exp as i32);
        // x^2 - l^2
        form.push(
            Poly::from_coeffs(vec![
                -qint_big(l * l),
                QRat::from_integer(0.into()),
                QRat::one(),
            ]),
            exp,
        );
    }
    form.scale = scale;
    form
}

/// Expanded canonical form of [`closed_bernoulli_odd_factored`].
pub fn closed_bernoulli_odd(n: usize) -> Poly {
    closed_bernoulli_odd_factored(n).expand()
}

/// Which Euler closed form to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EulerKind {
    /// H_n(E_k) = (-1)^C(n+1,2) prod (l!)^2
    Numbers,
    /// H_n(E_{2k+nu}((x+1)/2)) for nu = 0, 1, 2
    Nu(usize),
}

/// Factored closed form for the Euler cases.
///
/// For `Nu(nu)` the product is
/// (-1)^C(n+1,2) E_nu((x+1)/2)^{n+1} prod_{l=1}^{n} (l^2/4 (x^2 - (2l+nu-1)^2))^{n+1-l},
/// whose leading factors specialize to 1, (x/2), ((x^2-1)/4) for nu = 0, 1, 2.
pub fn closed_euler_factored(kind: EulerKind, n: usize) -> FactoredForm {
    let mut scale = half_triangle_sign(n);
    let mut form = FactoredForm::new(QRat::one());
    match kind {
        EulerKind::Numbers => {
            let mut fact = QRat::one();
            for l in 1..=n as u64 {
                fact *= qint_big(l);
                scale *= fact.pow(2);
            }
        }
        EulerKind::Nu(nu) => {
            assert!(nu <= 2, "closed Euler forms exist for nu = 0, 1, 2");
            match nu {
                0 => {}
                1 => {
                    scale *= qrat(1, 2).pow(n as i32 + 1);
                    form.push(Poly::var(), n + 1);
                }
                _ => {
                    scale *= qrat(1, 4).pow(n as i32 + 1);
                    form.push(Poly::from_i64(&[-1, 0, 1]), n + 1);
                }
            }
            for l in 1..=n as u64 {
                let exp = n + 1 - l as usize;
                scale *= (qint_big(l * l) / qint_big(4)).pow(exp as i32);
                let root = 2 * l as i64 + nu as i64 - 1;
                form.push(Poly::from_i64(&[-root * root, 0, 1]), exp);
            }
        }
    }
    form.scale = scale;
    form
}

pub fn closed_euler(kind: EulerKind, n: usize) -> Poly {
    closed_euler_factored(kind, n).expand()
}

/// H_n of `B_{2k}(1/2)`:
/// prod_{l=1}^{n} (l^4 (2l-1)^4 / ((4l-3)(4l-1)^2(4l+1)))^{n-l+1}.
pub fn closed_bernoulli_even_center(n: usize) -> QRat {
    let mut acc = QRat::one();
    for l in 1..=n as u64 {
        let num = qint_big(l).pow(4) * qint_big(2 * l - 1).pow(4);
        let den = qint_big(4 * l - 3) * qint_big(4 * l - 1).pow(2) * qint_big(4 * l + 1);
        acc *= (num / den).pow((n as i32) - l as i32 + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{parse_rat, qint};
    use crate::seq::SeqSpec;

    #[test]
    fn matrix_shape_and_persymmetry() {
        let seq = MomentSeq::new(SeqSpec::BernoulliPoly);
        let m = hankel_matrix(&seq, 1);
        // [[1, x - 1/2], [x - 1/2, x^2 - x + 1/6]]
        assert_eq!(m.entry(0, 0), &Poly::one());
        assert_eq!(m.entry(0, 1), m.entry(1, 0));
        assert_eq!(
            m.entry(1, 1),
            &Poly::from_coeffs(vec![qrat(1, 6), qint(-1), qint(1)])
        );

        let e = MomentSeq::new(SeqSpec::EulerNum);
        let me = hankel_matrix(&e, 1);
        assert_eq!(me.entry(0, 0), &Poly::one());
        assert_eq!(me.entry(0, 1), &Poly::zero());
        assert_eq!(me.entry(1, 1), &Poly::from_i64(&[-1]));

        let single = hankel_matrix(&seq, 0);
        assert_eq!(single.entries.len(), 1);
    }

    #[test]
    fn bernoulli_number_determinants() {
        let seq = MomentSeq::new(SeqSpec::BernoulliNum);
        assert_eq!(hankel_det(&seq, 3), Poly::constant(qrat(1, 42000)));
        let poly_seq = MomentSeq::new(SeqSpec::BernoulliPoly);
        assert_eq!(hankel_det(&poly_seq, 1), Poly::constant(qrat(-1, 12)));
    }

    #[test]
    fn tenth_determinant_factorization() {
        let seq = MomentSeq::new(SeqSpec::BernoulliNum);
        let det = hankel_det(&seq, 10);
        let num =
            BigInt::from(2u32).pow(42) * BigInt::from(3u32).pow(15) * BigInt::from(5u32).pow(4);
        let den = BigInt::from(11u32).pow(11)
            * BigInt::from(13u32).pow(9)
            * BigInt::from(17u32).pow(5)
            * BigInt::from(19u32).pow(3);
        assert_eq!(det, Poly::constant(-QRat::new(num, den)));
    }

    #[test]
    fn closed_forms_small_cases() {
        assert_eq!(closed_bernoulli_numbers(0), qint(1));
        assert_eq!(closed_bernoulli_numbers(1), qrat(-1, 12));
        assert_eq!(
            closed_bernoulli_numbers(6),
            parse_rat("-64/213746467935").unwrap()
        );

        // n = 0 row: x/2
        assert_eq!(
            closed_bernoulli_odd(0),
            Poly::from_coeffs(vec![qint(0), qrat(1, 2)])
        );
        // n = 1 row: -(1/48) x^2 (x^2 - 1)
        let row1 = closed_bernoulli_odd(1);
        assert_eq!(row1.coeff(4), qrat(-1, 48));
        assert_eq!(row1.coeff(2), qrat(1, 48));

        assert_eq!(closed_euler(EulerKind::Numbers, 1), Poly::from_i64(&[-1]));
        assert_eq!(
            closed_euler(EulerKind::Nu(1), 0),
            Poly::from_coeffs(vec![qint(0), qrat(1, 2)])
        );
    }

    #[test]
    fn euler_nu0_level1_matches_brute_force() {
        // Independent 2x2 oracle over E_0, E_2, E_4 at (x+1)/2.
        use crate::seq::special::{euler_poly, half_shift};
        let e2 = euler_poly(2).compose(&half_shift());
        let e4 = euler_poly(4).compose(&half_shift());
        let det = &e4 - &(&e2 * &e2); // E_0 = 1
        assert_eq!(det, closed_euler(EulerKind::Nu(0), 1));
        // -(x^2 - 1)/4
        assert_eq!(
            det,
            Poly::from_coeffs(vec![qrat(1, 4), qint(0), qrat(-1, 4)])
        );
    }

    #[test]
    fn even_center_closed_form() {
        assert_eq!(closed_bernoulli_even_center(0), qint(1));
        assert_eq!(closed_bernoulli_even_center(1), qrat(1, 45));
        // direct determinant oracle at n = 1 and n = 2
        let seq = MomentSeq::new(SeqSpec::BernoulliEvenCenter);
        for n in [1usize, 2] {
            assert_eq!(
                hankel_det(&seq, n),
                Poly::constant(closed_bernoulli_even_center(n)),
                "n = {n}"
            );
        }
    }
}
