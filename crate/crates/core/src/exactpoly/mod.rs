//! Exact scalars and dense univariate/bivariate polynomial arithmetic.

mod bi;
mod scalar;
mod uni;

pub use bi::BiPoly;
pub use scalar::Scalar;
pub use uni::{Degree, Poly};

pub(crate) use uni::sign;
