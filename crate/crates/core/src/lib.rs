//! Exact construction of q-Eulerian, Bell, alternating-run and multiset
//! composition polynomials, together with certificate-producing checks of
//! their real-rootedness, zero multiplicities and interlacing.
//!
//! The polynomial, root-isolation and interlacing layers are generic over an
//! exact ordered field ([`Scalar`]). The combinatorial families and the
//! theorem verifiers work over [`Rational`], exposed through the aliases
//! below.

pub mod basisops;
pub mod error;
pub mod exactpoly;
pub mod families;
pub mod interlace;
pub mod realroots;
pub mod suite;
pub mod theorems;

pub use error::{Error, Result};
pub use exactpoly::{Degree, Scalar};

/// Arbitrary-precision rational scalar used throughout.
pub type Rational = num_rational::BigRational;
/// Dense univariate polynomial over [`Rational`].
pub type UniPoly = exactpoly::Poly<Rational>;
/// Polynomial in `x` with [`UniPoly`]-in-`q` coefficients.
pub type BiPoly = exactpoly::BiPoly<Rational>;
/// Root description of a [`UniPoly`].
pub type RootReport = realroots::RootReport<Rational>;
/// Separation verdict over [`Rational`].
pub type SeparationVerdict = interlace::SeparationVerdict<Rational>;

/// Integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `n / d` as a [`Rational`].
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
