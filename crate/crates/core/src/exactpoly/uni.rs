//! Dense univariate polynomials over an exact scalar field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Scalar;
use crate::error::{Error, Result};

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`,
/// which orders below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }

    /// `self + k`, with `-inf + k = -inf`.
    pub fn plus(self, k: usize) -> Degree {
        match self {
            Degree::NegInfinity => Degree::NegInfinity,
            Degree::Finite(d) => Degree::Finite(d + k),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Dense polynomial; `coeffs[i]` is the coefficient of `x^i`.
/// Trailing zeros are always trimmed, so the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn monomial(c: T, power: usize) -> Self {
        let mut coeffs = vec![T::zero(); power + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    /// The monic linear factor `x - r`.
    pub fn linear_root(r: &T) -> Self {
        Self::new(vec![-r.clone(), T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for nonzero constants and the zero polynomial.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Positive leading coefficient.
    pub fn is_standard(&self) -> bool {
        self.leading().is_some_and(|c| c.is_positive())
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    let mut a = a.clone();
                    a *= c;
                    a
                })
                .collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| {
                    let mut a = a.clone();
                    a *= &T::from_int(i as i64);
                    a
                })
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x0: &T) -> T {
        let mut acc = T::zero();
        for a in self.coeffs.iter().rev() {
            acc *= x0;
            acc += a;
        }
        acc
    }

    /// Sign of `self(x0)` as -1, 0 or 1.
    pub fn sign_at(&self, x0: &T) -> i8 {
        T::poly_sign(&self.coeffs, x0)
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Composition `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(a.clone());
        }
        acc
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Quotient and remainder of Euclidean division.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let Some(lead) = d.leading() else {
            return Err(Error::DivisionByZero);
        };
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let mut q = rem[i + dd].clone();
            if q.is_zero() {
                continue;
            }
            q /= lead;
            for (j, dj) in d.coeffs.iter().enumerate() {
                let mut t = q.clone();
                t *= dj;
                rem[i + j] -= &t;
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        self.div_rem(d).map(|(_, r)| r)
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn divide_exact(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    /// Synthetic division by `x - r`: returns quotient and `self(r)`.
    pub fn deflate(&self, r: &T) -> (Self, T) {
        if self.is_zero() {
            return (Self::zero(), T::zero());
        }
        let n = self.coeffs.len();
        let mut quot = vec![T::zero(); n - 1];
        let mut acc = T::zero();
        for i in (0..n).rev() {
            acc *= r;
            acc += &self.coeffs[i];
            if i > 0 {
                quot[i - 1] = acc.clone();
            }
        }
        (Self::new(quot), acc)
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lead) => {
                let mut inv = T::one();
                inv /= lead;
                self.scale(&inv)
            }
        }
    }

    /// Integer coefficients with unit content, scaled by a positive factor
    /// so every sign is preserved.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&T::primitive_scale(&self.coeffs))
    }

    /// Monic greatest common divisor. `gcd(0, 0)` is zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.coeffs.len() < b.coeffs.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.rem(&b).expect("divisor is nonzero").primitive();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Squarefree part `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(&self.derivative());
        self.divide_exact(&g).expect("gcd divides its argument").monic()
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }

    /// Yun's algorithm. Returns monic, squarefree, pairwise coprime factors
    /// with their multiplicities in increasing order, such that
    /// `self = leading * prod(p_i ^ m_i)`. Constants yield an empty list.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.divide_exact(&a0).expect("gcd divides");
        let c = df.divide_exact(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            let next_b = b.divide_exact(&a).expect("gcd divides");
            let next_c = d.divide_exact(&a).expect("gcd divides");
            if !a.is_constant() {
                out.push((a, i));
            }
            d = &next_c - &next_b.derivative();
            b = next_b;
            i += 1;
        }
        out
    }

    /// Largest `k` with `(x - r)^k` dividing `self`. Zero for the zero
    /// polynomial by convention; callers guard against it.
    pub fn multiplicity_at(&self, r: &T) -> usize {
        if self.is_zero() {
            return 0;
        }
        let mut k = 0;
        let mut p = self.clone();
        loop {
            let (q, value) = p.deflate(r);
            if !value.is_zero() {
                return k;
            }
            k += 1;
            p = q;
        }
    }

    /// `(1 + x)^n * p(x / (1 + x))`, expanded.
    pub fn binomial_substitute(&self, n: usize) -> Result<Self> {
        if let Degree::Finite(d) = self.degree() {
            if d > n {
                return Err(Error::DegreeTooHigh { degree: d, order: n });
            }
        }
        let one_plus_x = Self::from_ints(&[1, 1]);
        let mut acc = Self::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let term = one_plus_x.pow(n - i).shift_up(i).scale(a);
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Comma-separated `num/den` coefficients in ascending degree.
    /// The zero polynomial serializes as the empty string.
    pub fn to_canonical(&self) -> String {
        self.coeffs.iter().map(T::to_canonical).collect::<Vec<_>>().join(",")
    }

    pub fn from_canonical(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::zero());
        }
        s.split(',')
            .map(|c| T::from_canonical(c).ok_or_else(|| Error::Parse(format!("bad rational {c:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

pub(crate) fn sign<T: Scalar>(v: &T) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

impl<T: fmt::Debug> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Poly").field(&self.coeffs).finish()
    }
}

/// Human-readable form, e.g. `2*x + 10*x^2`.
impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = c.abs().to_canonical();
            let text = text.strip_suffix("/1").unwrap_or(&text).to_string();
            let sep = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let is_one = c.abs().is_one();
            let body = match (i, is_one) {
                (0, _) => text,
                (1, true) => "x".to_string(),
                (1, false) => format!("{text}*x"),
                (_, true) => format!("x^{i}"),
                (_, false) => format!("{text}*x^{i}"),
            };
            write!(f, "{sep}{body}")?;
            first = false;
        }
        Ok(())
    }
}

impl<'a, T: Scalar> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &'a Poly<T>) -> Poly<T> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::new(coeffs)
    }
}

impl<'a, T: Scalar> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &'a Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, T::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        Poly::new(coeffs)
    }
}

impl<'a, T: Scalar> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &'a Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let mut t = a.clone();
                t *= b;
                coeffs[i + j] += &t;
            }
        }
        Poly::new(coeffs)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl<T: Scalar> $trait<Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
