//! Exact ordered-field scalars.
//!
//! Everything in this crate is computed without rounding, so the scalar
//! abstraction is an exact ordered field rather than a float type. The
//! blanket implementation covers [`num_rational::Ratio`] over any signed
//! machine or big integer; [`BigRational`](num_rational::BigRational) is the
//! type used by the concrete aliases at the crate root.

use std::fmt::{Debug, Display};
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, NumAssign, Signed, Zero};

/// An exact ordered field usable as a polynomial coefficient.
pub trait Scalar:
    Clone
    + Debug
    + PartialOrd
    + Signed
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + for<'a> DivAssign<&'a Self>
{
    fn from_int(v: i64) -> Self;

    /// Largest integer not exceeding `self`.
    fn floor(&self) -> Self;

    /// A strictly positive factor `c` such that `c * coeffs` are integers
    /// with unit content. Returns one for an all-zero slice.
    fn primitive_scale(coeffs: &[Self]) -> Self;

    /// Number of bits in the integer part of `|self|`, rounded up.
    fn bit_size(&self) -> u64;

    /// Canonical `num/den` text: lowest terms, positive denominator.
    fn to_canonical(&self) -> String;

    /// Parses `num/den` or a bare integer.
    fn from_canonical(s: &str) -> Option<Self>;

    /// Sign of the polynomial with ascending `coeffs` at `x`. The default is
    /// Horner evaluation in the field.
    fn poly_sign(coeffs: &[Self], x: &Self) -> i8 {
        let mut acc = Self::zero();
        for a in coeffs.iter().rev() {
            acc *= x;
            acc += a;
        }
        if acc.is_positive() {
            1
        } else if acc.is_negative() {
            -1
        } else {
            0
        }
    }

    fn half(&self) -> Self {
        let mut h = self.clone();
        h /= &Self::from_int(2);
        h
    }
}

impl<I> Scalar for Ratio<I>
where
    I: Integer + Signed + Clone + NumAssign + FromPrimitive + Display + FromStr + Debug,
{
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(I::from_i64(v).expect("integer fits scalar"))
    }

    fn floor(&self) -> Self {
        Ratio::floor(self)
    }

    fn primitive_scale(coeffs: &[Self]) -> Self {
        let mut den_lcm = I::one();
        for c in coeffs.iter().filter(|c| !c.is_zero()) {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = I::zero();
        for c in coeffs.iter().filter(|c| !c.is_zero()) {
            let scaled = c.numer().clone() * (den_lcm.clone() / c.denom().clone());
            num_gcd = num_gcd.gcd(&scaled);
        }
        if num_gcd.is_zero() {
            return Ratio::from_integer(I::one());
        }
        Ratio::new(den_lcm, num_gcd)
    }

    fn bit_size(&self) -> u64 {
        let mut v = self.abs().ceil().to_integer();
        let two = I::one() + I::one();
        let mut bits = 0;
        while !v.is_zero() {
            v = v / two.clone();
            bits += 1;
        }
        bits
    }

    /// Evaluates `L b^d p(a/b)` for `x = a/b` and `L` the common denominator
    /// of the coefficients, which has the sign of `p(x)` and needs no gcds.
    fn poly_sign(coeffs: &[Self], x: &Self) -> i8 {
        let mut den_lcm = I::one();
        for c in coeffs.iter().filter(|c| !c.is_zero()) {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let (a, b) = (x.numer(), x.denom());
        let mut acc = I::zero();
        let mut b_pow = I::one();
        for c in coeffs.iter().rev() {
            acc = acc * a.clone();
            if !c.is_zero() {
                acc += c.numer().clone() * (den_lcm.clone() / c.denom().clone()) * b_pow.clone();
            }
            b_pow = b_pow * b.clone();
        }
        if acc.is_positive() {
            1
        } else if acc.is_negative() {
            -1
        } else {
            0
        }
    }

    fn to_canonical(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn from_canonical(s: &str) -> Option<Self> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num = I::from_str(num).ok()?;
        let den = I::from_str(den).ok()?;
        if den.is_zero() {
            return None;
        }
        Some(Ratio::new(num, den))
    }
}
