//! Polynomials in `x` whose coefficients are polynomials in `q`.

use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use super::{Poly, Scalar};
use crate::error::{Error, Result};

/// Dense in both variables: `coeffs[i]` is the `q`-polynomial multiplying
/// `x^i`. Trailing zero coefficients (in `x`) are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiPoly<T> {
    coeffs: Vec<Poly<T>>,
}

impl<T: Scalar> BiPoly<T> {
    pub fn new(mut coeffs: Vec<Poly<T>>) -> Self {
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::new(vec![Poly::one()])
    }

    /// The variable `q` as a bivariate polynomial.
    pub fn q() -> Self {
        Self::new(vec![Poly::x()])
    }

    /// Embeds a polynomial in `x` with scalar coefficients.
    pub fn from_x_poly(p: &Poly<T>) -> Self {
        Self::new(p.coeffs().iter().map(|c| Poly::constant(c.clone())).collect())
    }

    /// Embeds a polynomial in `q` as an `x`-constant.
    pub fn from_q_poly(p: Poly<T>) -> Self {
        Self::new(vec![p])
    }

    /// Outer product `qpart(q) * xpart(x)`.
    pub fn outer(qpart: &Poly<T>, xpart: &Poly<T>) -> Self {
        Self::new(xpart.coeffs().iter().map(|c| qpart.scale(c)).collect())
    }

    pub fn coeffs(&self) -> &[Poly<T>] {
        &self.coeffs
    }

    /// `q`-polynomial multiplying `x^i`.
    pub fn coeff(&self, i: usize) -> Poly<T> {
        self.coeffs.get(i).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `x`; `None` for zero.
    pub fn x_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree in `q` over all coefficients; `None` for zero.
    pub fn q_degree(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(|c| c.degree().finite()).max()
    }

    pub fn derivative_x(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&T::from_int(i as i64)))
                .collect(),
        )
    }

    /// Multiplies every coefficient by a polynomial in `q`.
    pub fn mul_q_poly(&self, p: &Poly<T>) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * p).collect())
    }

    /// Substitutes `q = q0`.
    pub fn specialize(&self, q0: &T) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| c.evaluate(q0)).collect())
    }

    /// JSON array of canonical `q`-polynomial strings, outer index = `x`-degree.
    pub fn to_canonical_json(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(Poly::to_canonical).collect();
        serde_json::to_string(&parts).expect("strings serialize")
    }

    pub fn from_canonical_json(s: &str) -> Result<Self> {
        let parts: Vec<String> = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        parts
            .iter()
            .map(|p| Poly::from_canonical(p))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

impl<'a, T: Scalar> Add<&'a BiPoly<T>> for &'a BiPoly<T> {
    type Output = BiPoly<T>;
    fn add(self, rhs: &'a BiPoly<T>) -> BiPoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl<'a, T: Scalar> Sub<&'a BiPoly<T>> for &'a BiPoly<T> {
    type Output = BiPoly<T>;
    fn sub(self, rhs: &'a BiPoly<T>) -> BiPoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::new((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl<'a, T: Scalar> Mul<&'a BiPoly<T>> for &'a BiPoly<T> {
    type Output = BiPoly<T>;
    fn mul(self, rhs: &'a BiPoly<T>) -> BiPoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut coeffs = vec![Poly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        BiPoly::new(coeffs)
    }
}

impl<T: Scalar> Zero for BiPoly<T> {
    fn zero() -> Self {
        BiPoly::zero()
    }
    fn is_zero(&self) -> bool {
        BiPoly::is_zero(self)
    }
}

impl<T: Scalar> Add for BiPoly<T> {
    type Output = BiPoly<T>;
    fn add(self, rhs: BiPoly<T>) -> BiPoly<T> {
        &self + &rhs
    }
}
