//! Generic continued-fraction algebra: approximants by the standard
//! three-term recurrences, equivalence transforms, and the even/odd
//! canonical contractions in closed form.
//!
//! A continued fraction `b_0 + K(a_m / b_m)` is held as its partial
//! quantity generators. The element type is anything ring-like with a
//! partial division: exact rationals, polynomials, or truncated Laurent
//! series, so the same machinery serves randomized value-level checks
//! and symbolic partial-quantity manipulations.

pub mod formal;

use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::poly::Poly;
use crate::exact::rational::QRat;
use crate::exact::series::TruncSeries;

/// Ring-with-partial-division interface for CF elements. `zero_like` /
/// `one_like` exist because series constants carry structure (variable,
/// truncation order) that bare constructors cannot guess.
pub trait CfElem: Clone + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn try_div(&self, other: &Self) -> Result<Self>;
}

impl CfElem for QRat {
    fn zero_like(&self) -> Self {
        QRat::zero()
    }
    fn one_like(&self) -> Self {
        QRat::from_integer(1.into())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_div(&self, other: &Self) -> Result<Self> {
        crate::exact::rational::checked_div(self, other)
    }
}

impl CfElem for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero()
    }
    fn one_like(&self) -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_div_exact(other)
    }
}

impl CfElem for TruncSeries {
    fn zero_like(&self) -> Self {
        TruncSeries::zero(self.var(), self.order())
    }
    fn one_like(&self) -> Self {
        TruncSeries::one(self.var(), self.order())
    }
    fn is_zero(&self) -> bool {
        TruncSeries::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        TruncSeries::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        TruncSeries::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        TruncSeries::mul(self, other).expect("CF series elements must be log-free")
    }
    fn neg(&self) -> Self {
        TruncSeries::neg(self)
    }
    fn try_div(&self, other: &Self) -> Result<Self> {
        crate::exact::series::series_divide(self, other)
    }
}

type Gen<T> = Arc<dyn Fn(usize) -> T + Send + Sync>;

/// `b_0 + K(a_m / b_m)` with pure partial-quantity generators for
/// `m >= 1`. `depth_hint` is how deep the generators are known valid.
#[derive(Clone)]
pub struct CFSpec<T> {
    pub b0: T,
    a: Gen<T>,
    b: Gen<T>,
    pub depth_hint: usize,
}

impl<T: CfElem + Send + Sync + 'static> CFSpec<T> {
    pub fn new<A, B>(b0: T, a: A, b: B, depth_hint: usize) -> Self
    where
        A: Fn(usize) -> T + Send + Sync + 'static,
        B: Fn(usize) -> T + Send + Sync + 'static,
    {
        CFSpec {
            b0,
            a: Arc::new(a),
            b: Arc::new(b),
            depth_hint,
        }
    }

    /// A CF with explicitly tabulated partial quantities
    /// `a[0] = a_1, ...`, `b[0] = b_1, ...`.
    pub fn from_tables(b0: T, a: Vec<T>, b: Vec<T>) -> Self {
        assert_eq!(a.len(), b.len(), "partial quantity tables must align");
        let depth = a.len();
        CFSpec {
            b0,
            a: Arc::new(move |m| {
                a.get(m - 1)
                    .unwrap_or_else(|| panic!("partial numerator a_{m} beyond table"))
                    .clone()
            }),
            b: Arc::new(move |m| {
                b.get(m - 1)
                    .unwrap_or_else(|| panic!("partial denominator b_{m} beyond table"))
                    .clone()
            }),
            depth_hint: depth,
        }
    }

    /// a_m, m >= 1.
    pub fn a(&self, m: usize) -> T {
        debug_assert!(m >= 1);
        (self.a)(m)
    }

    /// b_m, m >= 1.
    pub fn b(&self, m: usize) -> T {
        debug_assert!(m >= 1);
        (self.b)(m)
    }
}

/// The n-th numerator/denominator pair `A_n / B_n`.
#[derive(Debug, Clone)]
pub struct Approximant<T> {
    pub num: T,
    pub den: T,
    pub index: usize,
    /// Set when a vanishing partial numerator terminated the fraction
    /// before the requested index; the value is then exact.
    pub terminated: bool,
}

impl Approximant<QRat> {
    pub fn value(&self) -> Result<QRat> {
        self.num.try_div(&self.den)
    }
}

/// Computes `A_n / B_n` by the forward recurrences
/// `A_m = b_m A_{m-1} + a_m A_{m-2}`, seeded `A_{-1} = 1, A_0 = b_0,
/// B_{-1} = 0, B_0 = 1`. A zero `a_m` legitimately terminates the
/// fraction; the approximant is then flagged and final.
pub fn cf_approximant<T: CfElem + Send + Sync + 'static>(
    cf: &CFSpec<T>,
    n: usize,
) -> Approximant<T> {
    let one = cf.b0.one_like();
    let zero = cf.b0.zero_like();
    let mut num_prev = one.clone(); // A_{-1}
    let mut num = cf.b0.clone(); // A_0
    let mut den_prev = zero; // B_{-1}
    let mut den = one; // B_0
    let mut terminated = false;
    for m in 1..=n {
        let a_m = cf.a(m);
        if a_m.is_zero() {
            terminated = true;
            break;
        }
        let b_m = cf.b(m);
        let num_next = b_m.mul(&num).add(&a_m.mul(&num_prev));
        let den_next = b_m.mul(&den).add(&a_m.mul(&den_prev));
        num_prev = num;
        num = num_next;
        den_prev = den;
        den = den_next;
    }
    Approximant {
        num,
        den,
        index: n,
        terminated,
    }
}

/// Equivalence transform: `d_m = r_m b_m`, `c_{m+1} = r_{m+1} r_m a_{m+1}`
/// with `r_0 = 1`. Every approximant of the result equals the original's
/// at the same index. Materialized through `depth`.
pub fn cf_equivalence<T, R>(cf: &CFSpec<T>, r: R, depth: usize) -> Result<CFSpec<T>>
where
    T: CfElem + Send + Sync + 'static,
    R: Fn(usize) -> T,
{
    let r_at = |m: usize| -> Result<T> {
        let v = r(m);
        if m >= 1 && v.is_zero() {
            return Err(Error::Equivalence(m));
        }
        Ok(v)
    };
    let mut a = Vec::with_capacity(depth);
    let mut b = Vec::with_capacity(depth);
    let mut r_prev = cf.b0.one_like(); // r_0 = 1
    for m in 1..=depth {
        let r_m = r_at(m)?;
        a.push(r_m.mul(&r_prev).mul(&cf.a(m)));
        b.push(r_m.mul(&cf.b(m)));
        r_prev = r_m;
    }
    Ok(CFSpec::from_tables(cf.b0.clone(), a, b))
}

/// Even canonical contraction: the result's n-th approximant pair equals
/// the original's 2n-th. Exists when `b_{2k} != 0`; partial quantities
/// are
/// `c_1 = a_1 b_2, d_1 = a_2 + b_1 b_2`, and for k >= 2
/// `c_k = -a_{2k-2} a_{2k-1} b_{2k} / b_{2k-2}`,
/// `d_k = a_{2k} + b_{2k-1} b_{2k} + a_{2k-1} b_{2k} / b_{2k-2}`.
pub fn cf_even_contraction<T: CfElem + Send + Sync + 'static>(
    cf: &CFSpec<T>,
    depth: usize,
) -> Result<CFSpec<T>> {
    for k in 1..=depth {
        if cf.b(2 * k).is_zero() {
            return Err(Error::Contraction(format!(
                "even contraction requires b_{} != 0",
                2 * k
            )));
        }
    }
    let mut c = Vec::with_capacity(depth);
    let mut d = Vec::with_capacity(depth);
    if depth >= 1 {
        c.push(cf.a(1).mul(&cf.b(2)));
        d.push(cf.a(2).add(&cf.b(1).mul(&cf.b(2))));
    }
    for k in 2..=depth {
        let ratio = cf.b(2 * k).try_div(&cf.b(2 * k - 2)).map_err(|_| {
            Error::Contraction(format!("b_{} / b_{} is not exact", 2 * k, 2 * k - 2))
        })?;
        c.push(cf.a(2 * k - 2).mul(&cf.a(2 * k - 1)).mul(&ratio).neg());
        d.push(
            cf.a(2 * k)
                .add(&cf.b(2 * k - 1).mul(&cf.b(2 * k)))
                .add(&cf.a(2 * k - 1).mul(&ratio)),
        );
    }
    Ok(CFSpec::from_tables(cf.b0.clone(), c, d))
}

/// Odd canonical contraction: the result's 0th approximant is
/// `A_1 / B_1` and its n-th pair equals the original's (2n+1)-th for
/// n >= 1. Exists when the odd partial denominators are nonzero;
/// partial quantities are
/// `b0' = (b_0 b_1 + a_1) / b_1`,
/// `c_1 = -a_1 a_2 b_3 / b_1, d_1 = b_1 (a_3 + b_2 b_3) + a_2 b_3`,
/// `c_2 = -a_3 a_4 b_5 b_1 / b_3`, and for k >= 2
/// `c_k = -a_{2k-1} a_{2k} b_{2k+1} / b_{2k-1}` (times `b_1` at k = 2),
/// `d_k = a_{2k+1} + b_{2k} b_{2k+1} + a_{2k} b_{2k+1} / b_{2k-1}`.
pub fn cf_odd_contraction<T: CfElem + Send + Sync + 'static>(
    cf: &CFSpec<T>,
    depth: usize,
) -> Result<CFSpec<T>> {
    for k in 0..=depth {
        if cf.b(2 * k + 1).is_zero() {
            return Err(Error::Contraction(format!(
                "odd contraction requires b_{} != 0",
                2 * k + 1
            )));
        }
    }
    let b1 = cf.b(1);
    let b0 = cf
        .b0
        .mul(&b1)
        .add(&cf.a(1))
        .try_div(&b1)
        .map_err(|_| Error::Contraction("(b_0 b_1 + a_1) / b_1 is not exact".into()))?;
    let mut c = Vec::with_capacity(depth);
    let mut d = Vec::with_capacity(depth);
    if depth >= 1 {
        let ratio = cf
            .a(2)
            .mul(&cf.b(3))
            .try_div(&b1)
            .map_err(|_| Error::Contraction("a_2 b_3 / b_1 is not exact".into()))?;
        c.push(cf.a(1).mul(&ratio).neg());
        d.push(
            b1.mul(&cf.a(3).add(&cf.b(2).mul(&cf.b(3))))
                .add(&cf.a(2).mul(&cf.b(3))),
        );
    }
    for k in 2..=depth {
        let ratio = cf.b(2 * k + 1).try_div(&cf.b(2 * k - 1)).map_err(|_| {
            Error::Contraction(format!("b_{} / b_{} is not exact", 2 * k + 1, 2 * k - 1))
        })?;
        let mut c_k = cf.a(2 * k - 1).mul(&cf.a(2 * k)).mul(&ratio).neg();
        if k == 2 {
            c_k = c_k.mul(&b1);
        }
        c.push(c_k);
        d.push(
            cf.a(2 * k + 1)
                .add(&cf.b(2 * k).mul(&cf.b(2 * k + 1)))
                .add(&cf.a(2 * k).mul(&ratio)),
        );
    }
    Ok(CFSpec::from_tables(b0, c, d))
}
