//! Exact arithmetic: rationals, dense polynomials over the rationals,
//! bivariate polynomials, and truncated formal series.

pub mod poly;
pub mod rational;
pub mod series;
pub mod ypoly;

pub use poly::Poly;
pub use rational::{checked_div, format_rat, parse_rat, qint, qrat, QRat};
pub use series::{exp_series, series_divide, SeriesVar, TruncSeries};
pub use ypoly::YPoly;
