//! Change of basis between `x^i`, the falling factorials `(x)_i` and the
//! binomials `binom(x, i)`, and the two coefficient-transplant operators
//! `T((x)_i) = x^i` and `E(binom(x, i)) = x^i`.

use serde_json::json;

use crate::error::{Error, Result};
use crate::exactpoly::{Poly, Scalar};
use crate::realroots::{is_rz, IntervalSpec};
use crate::theorems::{check_corollary, check_mthm, Certificate, MthmInstance};
use crate::{interlace, rat, Rational, UniPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    StandardPower,
    /// `(x)_i = x(x-1)...(x-i+1)`
    FallingFactorial,
    /// `binom(x, i) = (x)_i / i!`
    BinomialChoose,
}

/// Coefficients of `p` in the given basis, lowest index first. The zero
/// polynomial has no coefficients.
pub fn to_basis<T: Scalar>(p: &Poly<T>, kind: BasisKind) -> Vec<T> {
    match kind {
        BasisKind::StandardPower => p.coeffs().to_vec(),
        BasisKind::FallingFactorial => {
            // p = c_0 + x(c_1 + (x-1)(c_2 + (x-2)(...)))
            let mut out = Vec::with_capacity(p.coeffs().len());
            let mut rest = p.clone();
            let mut j = 0i64;
            while !rest.is_zero() {
                let (quot, value) = rest.deflate(&T::from_int(j));
                out.push(value);
                rest = quot;
                j += 1;
            }
            out
        }
        BasisKind::BinomialChoose => {
            let Some(d) = p.degree().finite() else {
                return vec![];
            };
            let mut diffs: Vec<T> = (0..=d as i64).map(|k| p.evaluate(&T::from_int(k))).collect();
            let mut out = Vec::with_capacity(d + 1);
            for _ in 0..=d {
                out.push(diffs[0].clone());
                for k in 0..diffs.len() - 1 {
                    let mut delta = diffs[k + 1].clone();
                    delta -= &diffs[k];
                    diffs[k] = delta;
                }
                diffs.pop();
            }
            out
        }
    }
}

/// `(x)_i`.
pub fn falling_factorial<T: Scalar>(i: usize) -> Poly<T> {
    (0..i).fold(Poly::one(), |acc, j| &acc * &Poly::new(vec![-T::from_int(j as i64), T::one()]))
}

/// `binom(x, i)`.
pub fn binomial_basis<T: Scalar>(i: usize) -> Poly<T> {
    let mut fact = T::one();
    for j in 2..=i as i64 {
        fact *= &T::from_int(j);
    }
    let mut inv = T::one();
    inv /= &fact;
    falling_factorial::<T>(i).scale(&inv)
}

pub fn from_basis<T: Scalar>(coeffs: &[T], kind: BasisKind) -> Poly<T> {
    match kind {
        BasisKind::StandardPower => Poly::new(coeffs.to_vec()),
        BasisKind::FallingFactorial | BasisKind::BinomialChoose => {
            // Horner in the nested form c_0 + (x-0)/w_1 (c_1 + (x-1)/w_2 (c_2 + ...)),
            // with w_i = 1 for falling factorials and w_i = i for binomials.
            let mut acc = Poly::zero();
            for (i, c) in coeffs.iter().enumerate().rev() {
                if i + 1 < coeffs.len() {
                    let mut step = Poly::new(vec![-T::from_int(i as i64), T::one()]);
                    if kind == BasisKind::BinomialChoose {
                        let mut inv = T::one();
                        inv /= &T::from_int(i as i64 + 1);
                        step = step.scale(&inv);
                    }
                    acc = &acc * &step;
                }
                acc = &acc + &Poly::constant(c.clone());
            }
            acc
        }
    }
}

/// `T(p)`: falling-factorial coefficients read as power coefficients.
pub fn t_transform<T: Scalar>(p: &Poly<T>) -> Poly<T> {
    Poly::new(to_basis(p, BasisKind::FallingFactorial))
}

pub fn t_inverse<T: Scalar>(f: &Poly<T>) -> Poly<T> {
    from_basis(f.coeffs(), BasisKind::FallingFactorial)
}

/// `E(p)`: binomial-basis coefficients read as power coefficients.
pub fn e_transform<T: Scalar>(p: &Poly<T>) -> Poly<T> {
    Poly::new(to_basis(p, BasisKind::BinomialChoose))
}

pub fn e_inverse<T: Scalar>(f: &Poly<T>) -> Poly<T> {
    from_basis(f.coeffs(), BasisKind::BinomialChoose)
}

fn x_minus(c: &Rational) -> UniPoly {
    UniPoly::linear_root(c)
}

/// `T((x - xi) p) = (x - xi) T(p) + x T(p)'`.
pub fn verify_t_identity(p: &UniPoly, xi: &Rational) -> Certificate {
    let mut cert = Certificate::new("t-identity", json!({ "p": p.to_canonical(), "xi": xi.to_canonical() }));
    let lhs = t_transform(&(&x_minus(xi) * p));
    let f = t_transform(p);
    let rhs = &(&x_minus(xi) * &f) + &f.derivative().shift_up(1);
    cert.assert_eq_poly("T((x-xi)p) = (x-xi)T(p) + x T(p)'", &lhs, &rhs);
    cert
}

/// `E((x - alpha) p) = (x - alpha) E(p) + x(x+1) E(p)'`.
pub fn verify_e_identity(p: &UniPoly, alpha: &Rational) -> Certificate {
    let mut cert = Certificate::new("e-identity", json!({ "p": p.to_canonical(), "alpha": alpha.to_canonical() }));
    let lhs = e_transform(&(&x_minus(alpha) * p));
    let f = e_transform(p);
    let rhs = &(&x_minus(alpha) * &f) + &(&UniPoly::from_ints(&[0, 1, 1]) * &f.derivative());
    cert.assert_eq_poly("E((x-alpha)p) = (x-alpha)E(p) + x(x+1)E(p)'", &lhs, &rhs);
    cert
}

/// Multiplies by -1 if needed so the leading coefficient is positive. The
/// zero sets and multiplicities involved are sign-invariant.
fn standardize(f: &UniPoly) -> UniPoly {
    if f.is_standard() {
        f.clone()
    } else {
        -f
    }
}

/// Real-rootedness, zeros at 0 and interlacing for `F = T((x - xi) p)`,
/// given `T(p)` with only nonpositive real zeros.
pub fn check_t_prop(p: &UniPoly, xi: &Rational) -> Result<Certificate> {
    let f = t_transform(p);
    if f.is_zero() {
        return Err(Error::NotApplicable("T(p) is the zero polynomial".into()));
    }
    if !is_rz(&f, &IntervalSpec::at_most(rat(0)))?.holds {
        return Err(Error::NotApplicable("T(p) has a zero outside (-inf,0]".into()));
    }
    let mut cert = Certificate::new("t-prop", json!({ "p": p.to_canonical(), "xi": xi.to_canonical() }));
    let m = f.multiplicity_at(&rat(0));
    let big_f = t_transform(&(&x_minus(xi) * p));
    cert.record("T(p)", json!({ "f": f.to_canonical(), "m": m, "F": big_f.to_canonical() }));

    let identity = verify_t_identity(p, xi);
    cert.assert("F = (x-xi)f + x f'", identity.holds, identity.witness_summary());

    let rz = is_rz(&big_f, &IntervalSpec::WholeLine)?;
    cert.assert("(a) F is real-rooted", rz.holds, rz.report.to_json());

    let ray = is_rz(&big_f, &IntervalSpec::at_most(rat(0)))?;
    let predicted = *xi <= rat(m as i64);
    cert.assert(
        "(b) F in RZ(-inf,0] iff xi <= m",
        ray.holds == predicted,
        json!({ "F_in_ray": ray.holds, "xi_le_m": predicted, "roots": ray.report.to_json() }),
    );

    let m_big = big_f.multiplicity_at(&rat(0));
    let (ok, expect) = if *xi == rat(m as i64) {
        (m_big > m, format!(">= {}", m + 1))
    } else {
        (m_big == m, m.to_string())
    };
    cert.assert(
        "(c) multiplicity of 0 in F",
        ok,
        json!({ "m": m, "expected": expect, "observed": m_big }),
    );

    let inst = MthmInstance::new(standardize(&f), x_minus(xi), UniPoly::from_ints(&[0, 1]));
    let cross = check_mthm(&inst);
    let (agree, witness) = cross_path(&cross, cert.holds);
    cert.assert("agrees with check_mthm on u = x - xi, v = x", agree, witness);
    Ok(cert)
}

/// Zero location, interlacing, simplicity and the multiplicities at 0 and -1
/// for `F = E((x - alpha) p)`, given `alpha` in `[-1, 0]` and `E(p)` with all
/// zeros in `[-1, 0]`.
pub fn check_e_prop(p: &UniPoly, alpha: &Rational) -> Result<Certificate> {
    if *alpha < rat(-1) || *alpha > rat(0) {
        return Err(Error::NotApplicable("alpha must lie in [-1,0]".into()));
    }
    let f = e_transform(p);
    if f.is_zero() {
        return Err(Error::NotApplicable("E(p) is the zero polynomial".into()));
    }
    let unit = IntervalSpec::closed(rat(-1), rat(0));
    if !is_rz(&f, &unit)?.holds {
        return Err(Error::NotApplicable("E(p) has a zero outside [-1,0]".into()));
    }
    let mut cert = Certificate::new("e-prop-op", json!({ "p": p.to_canonical(), "alpha": alpha.to_canonical() }));
    let big_f = e_transform(&(&x_minus(alpha) * p));
    let m0 = f.multiplicity_at(&rat(0));
    let m1 = f.multiplicity_at(&rat(-1));
    cert.record("E(p)", json!({ "f": f.to_canonical(), "m0": m0, "m1": m1, "F": big_f.to_canonical() }));

    let identity = verify_e_identity(p, alpha);
    cert.assert("F = (x-alpha)f + x(x+1)f'", identity.holds, identity.witness_summary());

    let rz = is_rz(&big_f, &unit)?;
    cert.assert("F in RZ[-1,0]", rz.holds, rz.report.to_json());

    let sep = interlace::separates(&f, &big_f)?;
    cert.assert("E(p) separates F", sep.holds, sep.to_json());

    if f.is_squarefree() {
        cert.assert("simple zeros are preserved", big_f.is_squarefree(), json!({ "F": big_f.to_canonical() }));
    }

    let zero = rat(0);
    let expect0 = m0 + usize::from(m0 == 0 && *alpha == zero);
    let got0 = big_f.multiplicity_at(&zero);
    cert.assert(
        "multiplicity of 0 in F is m0, or m0+1 when m0 = alpha = 0",
        got0 == expect0,
        json!({ "m0": m0, "expected": expect0, "observed": got0 }),
    );
    let expect1 = m1 + usize::from(m1 == 0 && *alpha == rat(-1));
    let got1 = big_f.multiplicity_at(&rat(-1));
    cert.assert(
        "multiplicity of -1 in F is m1, or m1+1 when m1 = 0 and alpha = -1",
        got1 == expect1,
        json!({ "m1": m1, "expected": expect1, "observed": got1 }),
    );

    let cross = check_corollary(&standardize(&f), &rat(1), &-alpha.clone());
    let (agree, witness) = cross_path(&cross, cert.holds);
    cert.assert("agrees with check_corollary on a = 1, b = -alpha", agree, witness);
    Ok(cert)
}

fn cross_path(other: &Result<Certificate>, verdict: bool) -> (bool, serde_json::Value) {
    match other {
        Ok(c) => (c.holds == verdict, json!({ "claim": c.claim_id, "holds": c.holds, "this_path": verdict })),
        Err(e) => (false, json!({ "error": e.to_string() })),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{bell, stirling2};
    use crate::ratio;

    /// Stirling-matrix conversion: `x^n = sum_k S(n,k) (x)_k`.
    fn falling_by_stirling(p: &UniPoly) -> Vec<Rational> {
        let d = p.coeffs().len();
        (0..d)
            .map(|k| (k..d).fold(rat(0), |acc, n| acc + p.coeff(n) * stirling2(n, k)))
            .collect()
    }

    #[test]
    fn basis_examples() {
        let x2 = UniPoly::from_ints(&[0, 0, 1]);
        assert_eq!(to_basis(&x2, BasisKind::FallingFactorial), vec![rat(0), rat(1), rat(1)]);
        assert_eq!(to_basis(&UniPoly::x(), BasisKind::BinomialChoose), vec![rat(0), rat(1)]);
        assert_eq!(from_basis(&[rat(0), rat(0), rat(1)], BasisKind::FallingFactorial), UniPoly::from_ints(&[0, -1, 1]));
        assert_eq!(from_basis(&[rat(0), rat(0), rat(1)], BasisKind::BinomialChoose), binomial_basis(2));
        assert!(to_basis(&UniPoly::zero(), BasisKind::BinomialChoose).is_empty());
        assert!(to_basis(&UniPoly::zero(), BasisKind::FallingFactorial).is_empty());
    }

    #[test]
    fn operators_on_basis_elements() {
        assert_eq!(t_transform(&falling_factorial::<Rational>(3)), UniPoly::monomial(rat(1), 3));
        assert_eq!(e_transform(&binomial_basis::<Rational>(2)), UniPoly::monomial(rat(1), 2));
        assert_eq!(t_transform(&UniPoly::from_ints(&[0, 0, 1])), bell(2));
        for n in 0..=10 {
            assert_eq!(t_transform(&UniPoly::monomial(rat(1), n)), bell(n));
        }
    }

    #[test]
    fn stirling_matrix_agrees() {
        let p = UniPoly::new(vec![ratio(1, 2), rat(-3), rat(0), ratio(7, 3), rat(1), rat(-2)]);
        assert_eq!(to_basis(&p, BasisKind::FallingFactorial), falling_by_stirling(&p));
    }

    #[test]
    fn identities_small() {
        assert!(verify_t_identity(&UniPoly::one(), &rat(0)).holds);
        assert!(verify_t_identity(&falling_factorial(2), &rat(1)).holds);
        // T(x (x)_2 - (x)_2) with x (x)_i = (x)_{i+1} + i (x)_i:
        // (x)_3 + 2(x)_2 - (x)_2 -> x^3 + x^2
        assert_eq!(
            t_transform(&(&x_minus(&rat(1)) * &falling_factorial(2))),
            UniPoly::from_ints(&[0, 0, 1, 1])
        );
        assert!(verify_e_identity(&UniPoly::one(), &rat(0)).holds);
        assert!(verify_e_identity(&UniPoly::x(), &rat(-1)).holds);
    }

    #[test]
    fn t_prop_examples() {
        // T(p) = x + x^2, m = 1
        let p = t_inverse(&UniPoly::from_ints(&[0, 1, 1]));
        assert_eq!(p, UniPoly::from_ints(&[0, 0, 1]));
        for xi in [rat(0), rat(2), rat(1), ratio(-3, 2), ratio(1, 2)] {
            let c = check_t_prop(&p, &xi).unwrap();
            assert!(c.holds, "{}", c.to_json_string());
        }
        // xi = 2 > m: F has a positive zero
        let big = t_transform(&(&x_minus(&rat(2)) * &p));
        assert!(!is_rz(&big, &IntervalSpec::at_most(rat(0))).unwrap().holds);
        // xi = m = 1: x^2 | F
        let big = t_transform(&(&x_minus(&rat(1)) * &p));
        assert!(big.divide_exact(&UniPoly::from_ints(&[0, 0, 1])).is_ok());
        assert!(matches!(check_t_prop(&UniPoly::from_ints(&[-1, 1]), &rat(0)), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn e_prop_examples() {
        let p = e_inverse(&UniPoly::from_ints(&[0, 1, 1]));
        let c = check_e_prop(&p, &ratio(-1, 2)).unwrap();
        assert!(c.holds, "{}", c.to_json_string());
        // E(p) = x + 1, alpha = -1: m1 = 0 and alpha = -1, so (x+1)^1 || F
        let p = e_inverse(&UniPoly::from_ints(&[1, 1]));
        let c = check_e_prop(&p, &rat(-1)).unwrap();
        assert!(c.holds, "{}", c.to_json_string());
        let big = e_transform(&(&x_minus(&rat(-1)) * &p));
        assert_eq!(big.multiplicity_at(&rat(-1)), 1);
        // E(p) = 1, alpha = 0: m0 = alpha = 0, F = x
        let c = check_e_prop(&UniPoly::one(), &rat(0)).unwrap();
        assert!(c.holds);
        assert!(check_e_prop(&UniPoly::one(), &rat(1)).is_err());
    }
}
