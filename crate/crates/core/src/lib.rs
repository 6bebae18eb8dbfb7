//! Exact Hankel determinants, monic orthogonal polynomials, and Jacobi
//! continued fractions for moment sequences built from Bernoulli and
//! Euler numbers and polynomials, plus a float-only validator for the
//! analytic continued-fraction identities.
//!
//! Everything outside [`numerics`] is exact: rationals of arbitrary
//! precision, dense polynomials over them, and truncated formal series.
//! All values are immutable after construction; the only mutable state is
//! the memo cache inside [`seq::MomentSeq`], which is internally
//! synchronized.

pub mod cfrac;
pub mod error;
pub mod exact;
pub mod hankel;
pub mod numerics;
pub(crate) mod par;
pub mod render;
pub mod seq;
pub mod shift;
pub mod verify;

pub mod orthopoly;

pub use error::{Error, Result};
