//! Property tests for the structural invariants: ring laws, exact
//! division round-trips, persymmetry, and the continued-fraction index
//! laws, on proptest-generated inputs.

use proptest::prelude::*;

use hankelfrac::cfrac::{
    cf_approximant, cf_equivalence, cf_even_contraction, cf_odd_contraction, CFSpec,
};
use hankelfrac::exact::series::{series_divide, SeriesVar, TruncSeries};
use hankelfrac::exact::{qint, Poly, QRat};
use hankelfrac::hankel::hankel_matrix;
use hankelfrac::seq::{MomentSeq, SeqSpec};

fn rat() -> impl Strategy<Value = QRat> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| QRat::new(n.into(), d.into()))
}

fn nonzero_rat() -> impl Strategy<Value = QRat> {
    rat().prop_filter("nonzero", |r| !num_traits::Zero::is_zero(r))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(rat(), 0..=max_deg + 1).prop_map(Poly::from_coeffs)
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn poly_ring_laws(p in poly(4), q in poly(4), r in poly(4)) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
    }

    #[test]
    fn exact_division_roundtrip(p in poly(5), q in nonzero_poly(4)) {
        let prod = &p * &q;
        prop_assert_eq!(prod.try_div_exact(&q).unwrap(), p);
    }

    #[test]
    fn composition_is_associative(p in poly(3), a in poly(3), b in poly(3)) {
        prop_assert_eq!(p.compose(&a).compose(&b), p.compose(&a.compose(&b)));
    }

    #[test]
    fn series_division_roundtrip(
        num_coeffs in prop::collection::vec(poly(2), 1..=6),
        den_coeffs in prop::collection::vec(poly(2), 0..=5),
        lead in nonzero_rat(),
    ) {
        let order = 6i64;
        let num = TruncSeries::from_terms(
            SeriesVar::T,
            order,
            num_coeffs.into_iter().enumerate().map(|(e, c)| (e as i64, c)).collect(),
        );
        let mut terms: Vec<(i64, Poly)> = den_coeffs
            .into_iter()
            .enumerate()
            .map(|(e, c)| (e as i64 + 1, c))
            .collect();
        terms.push((0, Poly::constant(lead)));
        let den = TruncSeries::from_terms(SeriesVar::T, order, terms);
        let q = series_divide(&num, &den).unwrap();
        let back = q.mul(&den).unwrap();
        prop_assert!(back.agrees_with(&num, back.order()));
    }

    #[test]
    fn hankel_matrices_are_persymmetric(n in 0usize..=3, rows in prop::collection::vec(rat(), 9)) {
        let table: Vec<Poly> = rows.into_iter().map(Poly::constant).collect();
        prop_assume!(table.len() > 2 * n);
        let seq = MomentSeq::new(SeqSpec::Table(table));
        let m = hankel_matrix(&seq, n);
        for i in 0..=n {
            for j in 0..=n {
                for (i2, j2) in [(j, i), (i.min(j), i.max(j))] {
                    prop_assert_eq!(m.entry(i, j), m.entry(i2, j2));
                }
            }
        }
    }

    #[test]
    fn cf_index_laws(
        a in prop::collection::vec(nonzero_rat(), 9),
        b in prop::collection::vec(nonzero_rat(), 9),
        b0 in rat(),
        r in prop::collection::vec(nonzero_rat(), 5),
    ) {
        let cf = CFSpec::from_tables(b0, a.clone(), b);
        // determinant identity
        let mut prod = qint(1);
        for n in 1..=4usize {
            prod = &prod * &a[n - 1];
            let hi = cf_approximant(&cf, n);
            let lo = cf_approximant(&cf, n - 1);
            let det = &hi.num * &lo.den - &lo.num * &hi.den;
            let sign = if (n - 1) % 2 == 0 { qint(1) } else { qint(-1) };
            prop_assert_eq!(det, &sign * &prod);
        }
        // contraction index laws
        let even = cf_even_contraction(&cf, 3).unwrap();
        for k in 0..=3usize {
            let c = cf_approximant(&even, k);
            let o = cf_approximant(&cf, 2 * k);
            prop_assert_eq!(&c.num, &o.num);
            prop_assert_eq!(&c.den, &o.den);
        }
        let odd = cf_odd_contraction(&cf, 3).unwrap();
        for k in 0..=3usize {
            let c = cf_approximant(&odd, k);
            let o = cf_approximant(&cf, 2 * k + 1);
            prop_assert_eq!(&c.num * &o.den, &o.num * &c.den);
        }
        // equivalence preserves approximant values
        let eq = cf_equivalence(&cf, |m| if m == 0 { qint(1) } else { r[m - 1].clone() }, 4)
            .unwrap();
        for n in 0..=4usize {
            let o = cf_approximant(&cf, n);
            let t = cf_approximant(&eq, n);
            prop_assert_eq!(&o.num * &t.den, &t.num * &o.den);
        }
    }
}
