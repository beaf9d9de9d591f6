//! Exactly located real roots: either a rational number or an irrational
//! root pinned by a squarefree defining polynomial and an isolating interval.
//! Signs of other polynomials at such a root are decided exactly with gcds
//! and Sturm counts; no approximation is involved.

use std::cmp::Ordering;

use super::sturm::SturmChain;
use crate::error::{Error, Result};
use crate::exactpoly::{Poly, Scalar};

/// Refinement cap for sign and comparison queries that have no caller-given
/// bound. Distinct algebraic numbers separate long before this.
pub(crate) const DEFAULT_ROUNDS: usize = 4096;

/// A single real root of a squarefree polynomial inside an open interval.
///
/// Invariants: `poly` is squarefree with exactly one root in `(lo, hi)`, and
/// does not vanish at either endpoint.
#[derive(Debug, Clone, PartialEq)]
pub struct IsolatedRoot<T> {
    poly: Poly<T>,
    lo: T,
    hi: T,
    lo_sign: i8,
}

impl<T: Scalar> IsolatedRoot<T> {
    /// Returns `None` if the invariants do not hold.
    pub fn new(poly: Poly<T>, lo: T, hi: T) -> Option<Self> {
        let lo_sign = poly.sign_at(&lo);
        let hi_sign = poly.sign_at(&hi);
        if lo >= hi || lo_sign == 0 || hi_sign == 0 || lo_sign == hi_sign || !poly.is_squarefree() {
            return None;
        }
        if SturmChain::new_unchecked(&poly).count_finite(&lo, &hi) != 1 {
            return None;
        }
        Some(IsolatedRoot { poly, lo, hi, lo_sign })
    }

    pub(crate) fn new_unchecked(poly: Poly<T>, lo: T, hi: T) -> Self {
        let lo_sign = poly.sign_at(&lo);
        debug_assert!(lo_sign != 0 && poly.sign_at(&hi) == -lo_sign);
        IsolatedRoot { poly, lo, hi, lo_sign }
    }

    pub fn poly(&self) -> &Poly<T> {
        &self.poly
    }

    pub fn lo(&self) -> &T {
        &self.lo
    }

    pub fn hi(&self) -> &T {
        &self.hi
    }

    pub fn width(&self) -> T {
        let mut w = self.hi.clone();
        w -= &self.lo;
        w
    }

    pub fn midpoint(&self) -> T {
        let mut m = self.lo.clone();
        m += &self.hi;
        m.half()
    }

    /// Halves the interval. Returns the midpoint if it is the root.
    pub fn bisect(&mut self) -> Option<T> {
        let mid = self.midpoint();
        self.split_at(mid)
    }

    /// Narrows the interval to one side of `x`. Returns `x` if it is the root.
    pub fn split_at(&mut self, x: T) -> Option<T> {
        if x <= self.lo || x >= self.hi {
            return None;
        }
        let s = self.poly.sign_at(&x);
        if s == 0 {
            return Some(x);
        }
        if s == self.lo_sign {
            self.lo = x;
        } else {
            self.hi = x;
        }
        None
    }
}

/// A real root located exactly.
#[derive(Debug, Clone, PartialEq)]
pub enum RealRoot<T> {
    Exact(T),
    Isolated(IsolatedRoot<T>),
}

impl<T: Scalar> RealRoot<T> {
    /// Lower end of the current enclosure (the value itself when exact).
    pub fn lower(&self) -> &T {
        match self {
            RealRoot::Exact(x) => x,
            RealRoot::Isolated(r) => r.lo(),
        }
    }

    pub fn upper(&self) -> &T {
        match self {
            RealRoot::Exact(x) => x,
            RealRoot::Isolated(r) => r.hi(),
        }
    }

    /// A representative point: the value, or the enclosure midpoint.
    pub fn sort_key(&self) -> T {
        match self {
            RealRoot::Exact(x) => x.clone(),
            RealRoot::Isolated(r) => r.midpoint(),
        }
    }

    pub fn as_exact(&self) -> Option<&T> {
        match self {
            RealRoot::Exact(x) => Some(x),
            RealRoot::Isolated(_) => None,
        }
    }

    /// One bisection step, collapsing to `Exact` when the midpoint is the root.
    pub fn refine(&mut self) {
        if let RealRoot::Isolated(r) = self {
            if let Some(x) = r.bisect() {
                *self = RealRoot::Exact(x);
            }
        }
    }

    fn split_at(&mut self, x: &T) {
        if let RealRoot::Isolated(r) = self {
            if let Some(x) = r.split_at(x.clone()) {
                *self = RealRoot::Exact(x);
            }
        }
    }

    /// Orders the root against a rational point, narrowing the enclosure so
    /// that it lies on one side of `x` afterwards.
    pub fn cmp_point(&mut self, x: &T) -> Ordering {
        self.split_at(x);
        match self {
            RealRoot::Exact(v) => (*v).partial_cmp(x).expect("total order"),
            RealRoot::Isolated(r) => {
                if r.hi() <= x {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }

    /// Sign of `q` at this root.
    pub fn sign_of(&mut self, q: &Poly<T>) -> Result<i8> {
        self.sign_of_bounded(q, DEFAULT_ROUNDS)
    }

    pub fn sign_of_bounded(&mut self, q: &Poly<T>, max_rounds: usize) -> Result<i8> {
        if q.is_zero() {
            return Ok(0);
        }
        let RealRoot::Isolated(r) = self else {
            return Ok(q.sign_at(self.lower()));
        };
        let g = r.poly().gcd(q);
        if !g.is_constant() && SturmChain::new_unchecked(&g).count_finite(r.lo(), r.hi()) > 0 {
            return Ok(0);
        }
        let q_chain = SturmChain::new_unchecked(&q.squarefree_part());
        for _ in 0..max_rounds {
            let RealRoot::Isolated(r) = self else {
                return Ok(q.sign_at(self.lower()));
            };
            let s_lo = q.sign_at(r.lo());
            if s_lo != 0 && q.sign_at(r.hi()) != 0 && q_chain.count_finite(r.lo(), r.hi()) == 0 {
                return Ok(s_lo);
            }
            self.refine();
        }
        Err(Error::RefinementBound { rounds: max_rounds })
    }

    /// True iff `q` vanishes at this root.
    pub fn is_root_of(&mut self, q: &Poly<T>) -> Result<bool> {
        Ok(self.sign_of(q)? == 0)
    }

    /// Multiplicity of this root as a zero of `q` (zero if `q` does not
    /// vanish here). `q` must be nonzero.
    pub fn multiplicity_in(&mut self, q: &Poly<T>) -> Result<usize> {
        if q.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if let RealRoot::Exact(x) = self {
            return Ok(q.multiplicity_at(x));
        }
        let mut k = 0;
        let mut d = q.clone();
        while !d.is_zero() && self.is_root_of(&d)? {
            k += 1;
            d = d.derivative();
        }
        Ok(k)
    }

    /// Exact comparison of two roots. Equal roots are detected through the
    /// gcd of the defining polynomials; distinct roots are refined until
    /// their enclosures are disjoint, failing after `max_rounds` bisections.
    pub fn compare(&mut self, other: &mut RealRoot<T>, max_rounds: usize) -> Result<Ordering> {
        match (&*self, &*other) {
            (RealRoot::Exact(a), RealRoot::Exact(b)) => return Ok(a.partial_cmp(b).expect("total order")),
            (RealRoot::Exact(a), RealRoot::Isolated(_)) => {
                let a = a.clone();
                return Ok(other.cmp_point(&a).reverse());
            }
            (RealRoot::Isolated(_), RealRoot::Exact(b)) => {
                let b = b.clone();
                return Ok(self.cmp_point(&b));
            }
            (RealRoot::Isolated(a), RealRoot::Isolated(b)) => {
                if a.hi() > b.lo() && b.hi() > a.lo() {
                    let g = a.poly().gcd(b.poly());
                    if !g.is_constant() {
                        let lo = if a.lo() > b.lo() { a.lo() } else { b.lo() };
                        let hi = if a.hi() < b.hi() { a.hi() } else { b.hi() };
                        if SturmChain::new_unchecked(&g).count_finite(lo, hi) > 0 {
                            return Ok(Ordering::Equal);
                        }
                    }
                }
            }
        }
        for _ in 0..=max_rounds {
            if self.upper() <= other.lower() && self.as_exact().is_none() {
                return Ok(Ordering::Less);
            }
            if other.upper() <= self.lower() && other.as_exact().is_none() {
                return Ok(Ordering::Greater);
            }
            if self.as_exact().is_some() || other.as_exact().is_some() {
                return self.compare(other, max_rounds);
            }
            self.refine();
            other.refine();
        }
        Err(Error::RefinementBound { rounds: max_rounds })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio, UniPoly};

    fn sqrt2() -> RealRoot<crate::Rational> {
        RealRoot::Isolated(IsolatedRoot::new(UniPoly::from_ints(&[-2, 0, 1]), rat(1), rat(2)).unwrap())
    }

    #[test]
    fn isolated_construction_checks_invariants() {
        let p = UniPoly::from_ints(&[-2, 0, 1]);
        assert!(IsolatedRoot::new(p.clone(), rat(-2), rat(2)).is_none());
        assert!(IsolatedRoot::new(p.clone(), rat(0), rat(1)).is_none());
        assert!(IsolatedRoot::new(UniPoly::from_ints(&[-1, 1]), rat(1), rat(2)).is_none());
        assert!(IsolatedRoot::new(p, rat(1), rat(2)).is_some());
    }

    #[test]
    fn signs_at_sqrt2() {
        let mut r = sqrt2();
        assert_eq!(r.sign_of(&UniPoly::from_ints(&[-2, 0, 1])).unwrap(), 0);
        assert_eq!(r.sign_of(&UniPoly::from_ints(&[-3, 0, 1])).unwrap(), -1);
        // x - 1.4142 > 0
        assert_eq!(r.sign_of(&UniPoly::new(vec![-ratio(14142, 10000), rat(1)])).unwrap(), 1);
        assert_eq!(r.sign_of(&UniPoly::new(vec![-ratio(14143, 10000), rat(1)])).unwrap(), -1);
        // (x^2 - 2)^2 (x + 1) vanishes with multiplicity 2
        let q = &UniPoly::from_ints(&[-2, 0, 1]).pow(2) * &UniPoly::from_ints(&[1, 1]);
        assert_eq!(r.multiplicity_in(&q).unwrap(), 2);
    }

    #[test]
    fn comparisons() {
        let mut a = sqrt2();
        assert_eq!(a.cmp_point(&ratio(3, 2)), Ordering::Less);
        assert_eq!(a.cmp_point(&ratio(7, 5)), Ordering::Greater);
        // same root from a different defining polynomial: (x^2-2)(x-5)
        let p = &UniPoly::from_ints(&[-2, 0, 1]) * &UniPoly::from_ints(&[-5, 1]);
        let mut b = RealRoot::Isolated(IsolatedRoot::new(p, rat(1), ratio(3, 2)).unwrap());
        assert_eq!(a.compare(&mut b, 64).unwrap(), Ordering::Equal);
        // sqrt(3) > sqrt(2)
        let mut c = RealRoot::Isolated(IsolatedRoot::new(UniPoly::from_ints(&[-3, 0, 1]), rat(1), rat(2)).unwrap());
        assert_eq!(a.compare(&mut c, 64).unwrap(), Ordering::Less);
        assert_eq!(c.compare(&mut a, 64).unwrap(), Ordering::Greater);
        let mut e = RealRoot::Exact(rat(1));
        assert_eq!(e.compare(&mut c, 64).unwrap(), Ordering::Less);
    }
}
