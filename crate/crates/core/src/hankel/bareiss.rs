//! Exact determinants of polynomial matrices.
//!
//! The workhorse is fraction-free Bareiss elimination: intermediate
//! entries stay in the polynomial ring and every division is exact by
//! the Sylvester identity, so a division failure is a loud bug rather
//! than silent precision loss. Row swaps handle zero pivots with sign
//! tracking; if an entire pivot column vanishes the determinant is zero
//! (expansion along that column has no nonzero term).
//!
//! `det_cofactor` is a deliberately independent reference implementation
//! used by the verification suites.

use crate::exact::poly::Poly;
use crate::par;

pub type Matrix = Vec<Vec<Poly>>;

/// Fraction-free determinant; row updates fan out in parallel builds.
pub fn det(m: Matrix) -> Poly {
    det_impl(m, true)
}

/// The same elimination forced onto a single thread; kept public so the
/// benchmark suite can compare both paths within one build.
pub fn det_sequential(m: Matrix) -> Poly {
    det_impl(m, false)
}

fn det_impl(mut m: Matrix, parallel: bool) -> Poly {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    if n == 0 {
        return Poly::one();
    }
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Poly::zero(),
            }
        }
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = pivot_row[k].clone();
        let step = |row: &mut Vec<Poly>| {
            for j in k + 1..n {
                let num = &(&pivot * &row[j]) - &(&row[k] * &pivot_row[j]);
                row[j] = num
                    .try_div_exact(&prev)
                    .expect("fraction-free elimination produced a non-exact division");
            }
            row[k] = Poly::zero();
        };
        if parallel {
            par::for_each_mut(rest, step);
        } else {
            rest.iter_mut().for_each(step);
        }
        prev = pivot;
    }
    let last = m[n - 1][n - 1].clone();
    if negate {
        -&last
    } else {
        last
    }
}

/// Reference determinant by cofactor expansion along the first row.
pub fn det_cofactor(m: &Matrix) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Poly::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Matrix = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &det_cofactor(&minor);
        acc = if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::qrat;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&v| Poly::from_i64(&[v])).collect())
            .collect()
    }

    #[test]
    fn small_integer_matrices() {
        assert_eq!(det(m(&[&[2]])), Poly::from_i64(&[2]));
        assert_eq!(det(m(&[&[1, 2], &[3, 4]])), Poly::from_i64(&[-2]));
        assert_eq!(
            det(m(&[&[0, 1, 2], &[1, 0, 3], &[4, 5, 0]])),
            Poly::from_i64(&[22])
        );
    }

    #[test]
    fn zero_pivot_column_means_singular() {
        // column 0 entirely zero after no elimination
        assert_eq!(det(m(&[&[0, 1], &[0, 2]])), Poly::zero());
        // zero pivot fixed by a row swap
        assert_eq!(det(m(&[&[0, 1], &[1, 0]])), Poly::from_i64(&[-1]));
    }

    #[test]
    fn polynomial_entries_match_cofactor() {
        let x = Poly::var();
        let rows: Matrix = vec![
            vec![Poly::one(), x.clone(), &x * &x],
            vec![x.clone(), &x * &x, Poly::from_i64(&[1, 1])],
            vec![Poly::from_i64(&[2, 0, 1]), Poly::one(), x.clone()],
        ];
        assert_eq!(det(rows.clone()), det_cofactor(&rows));
        assert_eq!(det_sequential(rows.clone()), det_cofactor(&rows));
    }

    #[test]
    fn rational_entries() {
        let rows: Matrix = vec![
            vec![Poly::constant(qrat(1, 2)), Poly::constant(qrat(1, 3))],
            vec![Poly::constant(qrat(1, 5)), Poly::constant(qrat(1, 7))],
        ];
        assert_eq!(det(rows), Poly::constant(qrat(1, 14) - qrat(1, 15)));
    }
}
