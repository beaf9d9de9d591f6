use serde_json::{json, Value};

use super::root::{IsolatedRoot, RealRoot};
use super::sturm::SturmChain;
use crate::error::{Error, Result};
use crate::exactpoly::{Poly, Scalar};

/// Open isolating interval of one irrational root.
#[derive(Debug, Clone, PartialEq)]
pub struct IsolatingInterval<T> {
    pub lo: T,
    pub hi: T,
    pub multiplicity: usize,
    /// Squarefree factor of the analyzed polynomial having this root.
    pub factor: Poly<T>,
}

impl<T: Scalar> IsolatingInterval<T> {
    pub fn to_root(&self) -> RealRoot<T> {
        RealRoot::Isolated(IsolatedRoot::new_unchecked(self.factor.clone(), self.lo.clone(), self.hi.clone()))
    }
}

/// Complete description of the real zeros of a nonzero polynomial. Roots are
/// listed in decreasing order; every rational root is listed exactly, so each
/// interval holds an irrational root.
#[derive(Debug, Clone, PartialEq)]
pub struct RootReport<T> {
    pub total_degree: usize,
    pub rational_roots: Vec<(T, usize)>,
    pub irrational_root_intervals: Vec<IsolatingInterval<T>>,
    pub nonreal_count: usize,
}

impl<T: Scalar> RootReport<T> {
    pub fn is_real_rooted(&self) -> bool {
        self.nonreal_count == 0
    }

    pub fn distinct_real_count(&self) -> usize {
        self.rational_roots.len() + self.irrational_root_intervals.len()
    }

    pub fn real_count_with_multiplicity(&self) -> usize {
        self.rational_roots.iter().map(|r| r.1).sum::<usize>()
            + self.irrational_root_intervals.iter().map(|r| r.multiplicity).sum::<usize>()
    }

    /// All distinct real roots with multiplicities, in decreasing order.
    pub fn roots(&self) -> Vec<(RealRoot<T>, usize)> {
        let mut all: Vec<(RealRoot<T>, usize)> = self
            .rational_roots
            .iter()
            .map(|(r, m)| (RealRoot::Exact(r.clone()), *m))
            .chain(self.irrational_root_intervals.iter().map(|iv| (iv.to_root(), iv.multiplicity)))
            .collect();
        all.sort_by(|a, b| b.0.sort_key().partial_cmp(&a.0.sort_key()).expect("total order"));
        all
    }

    pub fn multiplicity_of_rational(&self, x: &T) -> usize {
        self.rational_roots.iter().find(|(r, _)| r == x).map_or(0, |r| r.1)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "degree": self.total_degree,
            "rational": self.rational_roots.iter().map(|(r, m)| json!([r.to_canonical(), m])).collect::<Vec<_>>(),
            "intervals": self
                .irrational_root_intervals
                .iter()
                .map(|iv| json!([iv.lo.to_canonical(), iv.hi.to_canonical(), iv.multiplicity]))
                .collect::<Vec<_>>(),
            "nonreal": self.nonreal_count,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RayDirection {
    /// `(-inf, e]`
    Down,
    /// `[e, +inf)`
    Up,
}

/// Region of the real line that should contain every zero.
#[derive(Debug, Clone, PartialEq)]
pub enum IntervalSpec<T> {
    WholeLine,
    Closed(T, T),
    Ray(T, RayDirection),
}

impl<T: Scalar> IntervalSpec<T> {
    pub fn closed(a: T, b: T) -> Self {
        assert!(a <= b, "closed interval needs a <= b");
        IntervalSpec::Closed(a, b)
    }

    pub fn at_most(e: T) -> Self {
        IntervalSpec::Ray(e, RayDirection::Down)
    }

    pub fn at_least(e: T) -> Self {
        IntervalSpec::Ray(e, RayDirection::Up)
    }

    pub fn contains_point(&self, x: &T) -> bool {
        match self {
            IntervalSpec::WholeLine => true,
            IntervalSpec::Closed(a, b) => a <= x && x <= b,
            IntervalSpec::Ray(e, RayDirection::Down) => x <= e,
            IntervalSpec::Ray(e, RayDirection::Up) => x >= e,
        }
    }

    fn endpoints(&self) -> Vec<&T> {
        match self {
            IntervalSpec::WholeLine => vec![],
            IntervalSpec::Closed(a, b) => vec![a, b],
            IntervalSpec::Ray(e, _) => vec![e],
        }
    }

    pub fn describe(&self) -> String {
        match self {
            IntervalSpec::WholeLine => "(-inf,+inf)".into(),
            IntervalSpec::Closed(a, b) => format!("[{},{}]", a.to_canonical(), b.to_canonical()),
            IntervalSpec::Ray(e, RayDirection::Down) => format!("(-inf,{}]", e.to_canonical()),
            IntervalSpec::Ray(e, RayDirection::Up) => format!("[{},+inf)", e.to_canonical()),
        }
    }
}

/// Cauchy bound `1 + max |a_i / a_d|`; every root lies strictly inside.
pub fn cauchy_bound<T: Scalar>(p: &Poly<T>) -> T {
    let lead = p.leading().expect("nonzero").abs();
    let d = p.coeffs().len() - 1;
    let mut max = T::zero();
    for c in &p.coeffs()[..d] {
        let mut r = c.abs();
        r /= &lead;
        if r > max {
            max = r;
        }
    }
    max += &T::one();
    max
}

/// A power of two strictly exceeding the modulus of every root, from
/// `|z| <= 2 max_i |a_(d-i) / a_d|^(1/i)`. Usually far tighter than
/// [`cauchy_bound`] when coefficients are large.
pub fn root_bound<T: Scalar>(p: &Poly<T>) -> T {
    let lead = p.leading().expect("nonzero").abs();
    let d = p.coeffs().len() - 1;
    let mut k = 0u64;
    for i in 1..=d {
        let mut r = p.coeffs()[d - i].abs();
        r /= &lead;
        // 2^(k i) > r once k i >= bit_size(r)
        k = k.max(r.bit_size().div_ceil(i as u64));
    }
    let mut b = T::one();
    for _ in 0..k + 2 {
        b *= &T::from_int(2);
    }
    b
}

/// Isolates every distinct real root of a nonzero polynomial.
pub fn analyze<T: Scalar>(p: &Poly<T>) -> Result<RootReport<T>> {
    let total_degree = p.degree().finite().ok_or(Error::ZeroPolynomial)?;
    let factors = p.squarefree_decomposition();
    if factors.is_empty() {
        return Ok(RootReport {
            total_degree,
            rational_roots: vec![],
            irrational_root_intervals: vec![],
            nonreal_count: 0,
        });
    }
    let sqf = factors.iter().fold(Poly::one(), |acc, (f, _)| &acc * f).primitive();
    let multiplicity_of = |x: &T| -> usize {
        factors.iter().find(|(f, _)| f.sign_at(x) == 0).map(|(_, m)| *m).expect("root of some factor")
    };

    let mut exact: Vec<T> = Vec::new();
    for d in [T::zero(), T::one(), -T::one()] {
        if sqf.sign_at(&d) == 0 {
            exact.push(d);
        }
    }

    let chain = SturmChain::new_unchecked(&sqf);
    let bound = root_bound(&sqf);
    let mut isolated: Vec<(T, T)> = Vec::new();
    let lo0 = -bound.clone();
    let total = chain.count_finite(&lo0, &bound);
    let mut stack = vec![(lo0, bound, total)];
    while let Some((lo, hi, count)) = stack.pop() {
        match count {
            0 => {}
            1 => isolated.push((lo, hi)),
            _ => {
                let mut mid = lo.clone();
                mid += &hi;
                let mid = mid.half();
                let mid_is_root = sqf.sign_at(&mid) == 0;
                let mut left = chain.count_finite(&lo, &mid);
                if mid_is_root {
                    exact.push(mid.clone());
                    left -= 1;
                }
                let right = count - left - usize::from(mid_is_root);
                stack.push((mid.clone(), hi, right));
                stack.push((lo, mid, left));
            }
        }
    }

    let mut intervals = Vec::new();
    for (mut lo, mut hi) in isolated {
        // Open interval with one root; make the endpoints non-roots.
        let mut found = None;
        while found.is_none() && (sqf.sign_at(&lo) == 0 || sqf.sign_at(&hi) == 0) {
            let mut mid = lo.clone();
            mid += &hi;
            let mid = mid.half();
            if sqf.sign_at(&mid) == 0 {
                found = Some(mid);
            } else {
                if chain.count_finite(&lo, &mid) > 0 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
        }
        if let Some(x) = found {
            exact.push(x);
            continue;
        }
        if let Some(x) = exact.iter().find(|x| **x > lo && **x < hi) {
            let x = x.clone();
            exact.push(x);
            continue;
        }
        let (factor, m) = factors
            .iter()
            .find(|(f, _)| f.sign_at(&lo) != f.sign_at(&hi))
            .map(|(f, m)| (f.primitive(), *m))
            .expect("the isolated root belongs to some factor");
        match rational_in_interval(&factor, lo, hi) {
            Ok(x) => exact.push(x),
            Err(root) => intervals.push(IsolatingInterval {
                lo: root.lo().clone(),
                hi: root.hi().clone(),
                multiplicity: m,
                factor,
            }),
        }
    }

    exact.sort_by(|a, b| b.partial_cmp(a).expect("total order"));
    exact.dedup();
    let rational_roots: Vec<(T, usize)> = exact.into_iter().map(|x| {
        let m = multiplicity_of(&x);
        (x, m)
    }).collect();
    intervals.sort_by(|a, b| b.lo.partial_cmp(&a.lo).expect("total order"));

    let real: usize = rational_roots.iter().map(|r| r.1).sum::<usize>()
        + intervals.iter().map(|iv| iv.multiplicity).sum::<usize>();
    Ok(RootReport {
        total_degree,
        rational_roots,
        irrational_root_intervals: intervals,
        nonreal_count: total_degree - real,
    })
}

/// Decides whether the single root of the primitive integer polynomial
/// `factor` in `(lo, hi)` is rational. A rational root `a/b` in lowest terms
/// has `b | L` for the leading coefficient `L`, so `L * root` is an integer;
/// once `L * (hi - lo) < 1` there is at most one candidate.
fn rational_in_interval<T: Scalar>(factor: &Poly<T>, lo: T, hi: T) -> std::result::Result<T, IsolatedRoot<T>> {
    let lead = factor.leading().expect("nonzero").abs();
    let mut root = IsolatedRoot::new_unchecked(factor.clone(), lo, hi);
    loop {
        let mut w = root.width();
        w *= &lead;
        if w < T::one() {
            break;
        }
        if let Some(x) = root.bisect() {
            return Ok(x);
        }
    }
    let mut scaled_lo = root.lo().clone();
    scaled_lo *= &lead;
    let mut candidate = scaled_lo.floor();
    candidate += &T::one();
    let mut scaled_hi = root.hi().clone();
    scaled_hi *= &lead;
    if candidate < scaled_hi {
        candidate /= &lead;
        if factor.sign_at(&candidate) == 0 {
            return Ok(candidate);
        }
    }
    Err(root)
}

/// Outcome of a real-rootedness check, with the root report as witness.
#[derive(Debug, Clone, PartialEq)]
pub struct RzVerdict<T> {
    pub holds: bool,
    pub report: RootReport<T>,
}

/// True iff every zero of `p` is real and lies in `region`. Isolating
/// intervals straddling a region endpoint are split at that endpoint.
pub fn is_rz<T: Scalar>(p: &Poly<T>, region: &IntervalSpec<T>) -> Result<RzVerdict<T>> {
    let mut report = analyze(p)?;
    let mut holds = report.is_real_rooted();
    holds &= report.rational_roots.iter().all(|(r, _)| region.contains_point(r));
    let mut promoted = Vec::new();
    let mut kept = Vec::new();
    for iv in std::mem::take(&mut report.irrational_root_intervals) {
        let mut root = iv.to_root();
        for e in region.endpoints() {
            root.cmp_point(e);
        }
        match root {
            RealRoot::Exact(x) => {
                holds &= region.contains_point(&x);
                promoted.push((x, iv.multiplicity));
            }
            RealRoot::Isolated(r) => {
                holds &= region.contains_point(r.lo()) && region.contains_point(r.hi());
                kept.push(IsolatingInterval {
                    lo: r.lo().clone(),
                    hi: r.hi().clone(),
                    multiplicity: iv.multiplicity,
                    factor: iv.factor,
                });
            }
        }
    }
    report.irrational_root_intervals = kept;
    if !promoted.is_empty() {
        report.rational_roots.extend(promoted);
        report.rational_roots.sort_by(|a, b| b.0.partial_cmp(&a.0).expect("total order"));
    }
    Ok(RzVerdict { holds, report })
}

/// True iff `p` has no repeated zero (real or complex).
pub fn all_simple<T: Scalar>(p: &Poly<T>) -> bool {
    p.is_squarefree()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio, UniPoly};

    #[test]
    fn repeated_rational_root() {
        // -(x-1)^4
        let p = -UniPoly::from_ints(&[-1, 1]).pow(4);
        let r = analyze(&p).unwrap();
        assert_eq!(r.rational_roots, vec![(rat(1), 4)]);
        assert!(r.irrational_root_intervals.is_empty());
        assert_eq!(r.nonreal_count, 0);
    }

    #[test]
    fn rational_root_off_the_bisection_grid() {
        // 2x + 4, and (3x+1)(5x-2)(x^2+1)
        let r = analyze(&UniPoly::from_ints(&[4, 2])).unwrap();
        assert_eq!(r.rational_roots, vec![(rat(-2), 1)]);
        let p = &(&UniPoly::from_ints(&[1, 3]) * &UniPoly::from_ints(&[-2, 5])) * &UniPoly::from_ints(&[1, 0, 1]);
        let r = analyze(&p).unwrap();
        assert_eq!(r.rational_roots, vec![(ratio(2, 5), 1), (ratio(-1, 3), 1)]);
        assert_eq!(r.nonreal_count, 2);
    }

    #[test]
    fn bell_three() {
        // x + 3x^2 + x^3 = x (x^2 + 3x + 1), roots 0 and (-3 ± sqrt5)/2
        let r = analyze(&UniPoly::from_ints(&[0, 1, 3, 1])).unwrap();
        assert_eq!(r.rational_roots, vec![(rat(0), 1)]);
        assert_eq!(r.irrational_root_intervals.len(), 2);
        let a = &r.irrational_root_intervals[0];
        let b = &r.irrational_root_intervals[1];
        assert!(b.hi <= a.lo);
        // (-3 + sqrt5)/2 ~ -0.382, (-3 - sqrt5)/2 ~ -2.618
        assert!(a.lo < ratio(-382, 1000) && a.hi > ratio(-382, 1000));
        assert!(b.lo < ratio(-2618, 1000) && b.hi > ratio(-2618, 1000));
        assert_eq!(r.nonreal_count, 0);
        assert_eq!(r.real_count_with_multiplicity(), 3);
    }

    #[test]
    fn scaling_does_not_change_the_report() {
        let p = &UniPoly::from_ints(&[-2, 0, 1]).pow(2) * &UniPoly::from_ints(&[1, 7, 2]);
        let a = analyze(&p).unwrap();
        let b = analyze(&p.scale(&ratio(7, 3))).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn region_membership() {
        let region = IntervalSpec::at_most(rat(0));
        assert!(!is_rz(&UniPoly::from_ints(&[1, 0, 1]), &IntervalSpec::WholeLine).unwrap().holds);
        // x^2 - 2 has a positive root
        assert!(!is_rz(&UniPoly::from_ints(&[-2, 0, 1]), &region).unwrap().holds);
        // x(x^2 + 3x + 1) lies in (-inf, 0] and in [-3, 0] but not [-2, 0]
        let b3 = UniPoly::from_ints(&[0, 1, 3, 1]);
        assert!(is_rz(&b3, &region).unwrap().holds);
        assert!(is_rz(&b3, &IntervalSpec::closed(rat(-3), rat(0))).unwrap().holds);
        assert!(!is_rz(&b3, &IntervalSpec::closed(rat(-2), rat(0))).unwrap().holds);
        // endpoint roots are inside a closed region
        let p = UniPoly::from_ints(&[-1, 1]).pow(3);
        assert!(is_rz(&p, &IntervalSpec::at_least(rat(1))).unwrap().holds);
        assert!(!is_rz(&p, &IntervalSpec::at_least(ratio(11, 10))).unwrap().holds);
        // constants have no zeros
        assert!(is_rz(&UniPoly::from_ints(&[-3]), &IntervalSpec::at_least(rat(1))).unwrap().holds);
        assert_eq!(analyze(&UniPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn simplicity() {
        assert!(all_simple(&UniPoly::from_ints(&[-1, 0, 1])));
        assert!(!all_simple(&UniPoly::from_ints(&[1, -2, 1])));
    }
}
