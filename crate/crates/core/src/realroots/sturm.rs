use crate::error::{Error, Result};
use crate::exactpoly::{sign, Poly, Scalar};

/// A point of the extended real line.
#[derive(Debug, Clone, PartialEq)]
pub enum Bound<T> {
    NegInf,
    Finite(T),
    PosInf,
}

/// Sturm sequence of a squarefree polynomial. Each remainder is negated and
/// reduced to primitive integer content with a positive factor, so signs are
/// unchanged.
#[derive(Debug, Clone)]
pub struct SturmChain<T> {
    seq: Vec<Poly<T>>,
}

impl<T: Scalar> SturmChain<T> {
    pub fn new(p: &Poly<T>) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !p.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        Ok(Self::new_unchecked(p))
    }

    /// Caller guarantees `p` is nonzero and squarefree.
    pub(crate) fn new_unchecked(p: &Poly<T>) -> Self {
        let mut seq = vec![p.primitive()];
        let mut next = p.derivative().primitive();
        while !next.is_zero() {
            let prev = seq.last().expect("nonempty");
            let r = -prev.rem(&next).expect("nonzero divisor").primitive();
            seq.push(next);
            next = r;
        }
        SturmChain { seq }
    }

    pub fn polynomial(&self) -> &Poly<T> {
        &self.seq[0]
    }

    fn sign_at(p: &Poly<T>, at: &Bound<T>) -> i8 {
        match at {
            Bound::Finite(x) => p.sign_at(x),
            Bound::PosInf => p.leading().map_or(0, sign),
            Bound::NegInf => {
                let s = p.leading().map_or(0, sign);
                match p.degree().finite() {
                    Some(d) if d % 2 == 1 => -s,
                    _ => s,
                }
            }
        }
    }

    /// Sign changes along the chain at `at`, zeros skipped.
    pub fn variations(&self, at: &Bound<T>) -> usize {
        let mut last = 0i8;
        let mut changes = 0;
        for p in &self.seq {
            let s = Self::sign_at(p, at);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    /// Distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count(&self, lo: &Bound<T>, hi: &Bound<T>) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }

    pub(crate) fn count_finite(&self, lo: &T, hi: &T) -> usize {
        self.count(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()))
    }
}

/// Number of distinct real roots of a squarefree `p` in `(lo, hi]`.
pub fn sturm_count<T: Scalar>(p: &Poly<T>, lo: &Bound<T>, hi: &Bound<T>) -> Result<usize> {
    Ok(SturmChain::new(p)?.count(lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, UniPoly};

    #[test]
    fn whole_line_counts() {
        let p = UniPoly::from_ints(&[-2, 0, 1]);
        assert_eq!(sturm_count(&p, &Bound::NegInf, &Bound::PosInf).unwrap(), 2);
        let p = UniPoly::from_ints(&[1, 0, 1]);
        assert_eq!(sturm_count(&p, &Bound::NegInf, &Bound::PosInf).unwrap(), 0);
    }

    #[test]
    fn half_open_convention() {
        // x(x+1)(x-1): (-1, 0] holds only 0, (-2, -1] holds -1
        let p = UniPoly::from_ints(&[0, -1, 0, 1]);
        let c = SturmChain::new(&p).unwrap();
        assert_eq!(c.count_finite(&rat(-1), &rat(0)), 1);
        assert_eq!(c.count_finite(&rat(-2), &rat(-1)), 1);
        assert_eq!(c.count_finite(&rat(-1), &rat(1)), 2);
        assert_eq!(c.count(&Bound::NegInf, &Bound::Finite(rat(-1))), 1);
    }

    #[test]
    fn squarefree_is_required() {
        let p = UniPoly::from_ints(&[1, -2, 1]);
        assert_eq!(sturm_count(&p, &Bound::NegInf, &Bound::PosInf), Err(Error::NotSquarefree));
        assert_eq!(
            sturm_count(&UniPoly::zero(), &Bound::NegInf, &Bound::PosInf),
            Err(Error::ZeroPolynomial)
        );
    }
}
