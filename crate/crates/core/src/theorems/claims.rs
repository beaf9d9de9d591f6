//! Per-family claims: q-Eulerian zero locations, closed forms, composition
//! and alternating-run results, and the links between classical families.

use num_traits::{One, Zero};
use serde_json::json;

use super::Certificate;
use crate::basisops::t_transform;
use crate::error::{Error, Result};
use crate::families::{
    self, alt_runs, alt_runs_from_triangle, bell, classical_frobenius, composition_gf, eulerian, kfact_stirling,
    q_eulerian, q_eulerian_at, q_frobenius, Multiset,
};
use crate::interlace::separates;
use crate::realroots::{all_simple, analyze, is_rz, IntervalSpec};
use crate::{rat, Rational, Scalar, UniPoly};

/// Upper bound on multiset size for [`check_simion`].
pub const SIMION_LIMIT: usize = 40;

fn x_minus_1() -> UniPoly {
    UniPoly::from_ints(&[-1, 1])
}

/// Zero location and multiplicity of `A_n(x;q0)`, dispatched on `q0`:
/// `q0 > 0` (nonpositive simple zeros for `n >= 2`), `n + q0 <= 0`
/// (zeros of `A_{n+1}` in `[1, +inf)`), and `q0 = -t` a negative integer
/// (`(x-1)^max(n-t,0) || A_n`). Parameters covered by no part yield a
/// vacuous certificate.
pub fn check_eprop(n: usize, q0: &Rational) -> Result<Certificate> {
    let mut cert = Certificate::new("eprop", json!({ "n": n, "q": q0.to_canonical() }));
    let zero = rat(0);
    let mut parts = Vec::new();

    if *q0 > zero && n >= 2 {
        parts.push("a");
        let p = q_eulerian_at(n, q0);
        let v = is_rz(&p, &IntervalSpec::at_most(zero.clone()))?;
        cert.assert("(a) A_n(x;q) in RZ(-inf,0]", v.holds, v.report.to_json());
        cert.assert("(a) A_n(x;q) has simple zeros", all_simple(&p), json!(p.to_canonical()));
    }

    if rat(n as i64) + q0 <= zero {
        parts.push("b");
        let p = q_eulerian_at(n + 1, q0);
        if p.is_zero() {
            // A_1(x;0) = 0: no zeros to locate
            cert.record("(b) A_{n+1}(x;q) is the zero polynomial; vacuous", json!(p.to_canonical()));
        } else {
            let v = is_rz(&p, &IntervalSpec::at_least(rat(1)))?;
            cert.assert("(b) A_{n+1}(x;q) in RZ[1,+inf)", v.holds, v.report.to_json());
        }
    }

    if q0.is_integer() && *q0 < zero {
        parts.push("c");
        let t = (-q0).to_integer();
        let p = q_eulerian_at(n, q0);
        let v = is_rz(&p, &IntervalSpec::at_least(rat(1)))?;
        cert.assert("(c) A_n(x;q) in RZ[1,+inf)", v.holds, v.report.to_json());
        let expected = (rat(n as i64) + q0).max(zero.clone()).to_integer();
        let expected: usize = expected.try_into().expect("small");
        let observed = p.multiplicity_at(&rat(1));
        let divides = p.divide_exact(&x_minus_1().pow(expected)).is_ok();
        let not_higher = p.divide_exact(&x_minus_1().pow(expected + 1)).is_err();
        cert.assert(
            "(c) (x-1)^m || A_n(x;q) with m = max(n+q, 0)",
            observed == expected && divides && not_higher,
            json!({ "expected": expected, "observed": observed, "divides": divides, "exact": not_higher }),
        );
        if t.is_one() && n >= 1 {
            let closed = -x_minus_1().pow(n - 1);
            cert.assert_eq_poly("(c) A_n(x;-1) = -(x-1)^(n-1)", &p, &closed);
        }
    }

    if parts.is_empty() {
        cert.record("no part applies to these parameters", json!({ "parts": parts }));
    } else {
        cert.record("parts checked", json!({ "parts": parts }));
    }
    Ok(cert)
}

/// `A_n(x;q) = sum_k binom(q+k-1, k) k! S(n,k) (x-1)^(n-k)` as bivariate
/// polynomials.
pub fn verify_q_frobenius(n: usize) -> Certificate {
    let mut cert = Certificate::new("q-frobenius", json!({ "n": n }));
    let lhs = q_eulerian(n);
    let rhs = q_frobenius(n);
    let passed = lhs == rhs;
    let witness = if passed {
        json!(lhs.to_canonical_json())
    } else {
        json!({ "recurrence": lhs.to_canonical_json(), "closed_form": rhs.to_canonical_json() })
    };
    cert.assert("q-Eulerian recurrence equals q-Frobenius sum", passed, witness);
    cert
}

/// `A_n(x) = x sum_k k! S(n,k) (x-1)^(n-k)` for `n >= 1`.
pub fn verify_classical_frobenius(n: usize) -> Certificate {
    let mut cert = Certificate::new("classical-frobenius", json!({ "n": n }));
    cert.assert_eq_poly("A_n(x) = x sum_k k! S(n,k) (x-1)^(n-k)", &eulerian(n), &classical_frobenius(n));
    cert
}

/// `x A_n(x;1) = A_n(x)` for `n >= 1`, with `A_0(x;1) = A_0(x) = 1`.
pub fn verify_eulerian_at_one(n: usize) -> Certificate {
    let mut cert = Certificate::new("eulerian-q1", json!({ "n": n }));
    let at_one = q_eulerian_at(n, &rat(1));
    let lhs = if n == 0 { at_one } else { at_one.shift_up(1) };
    cert.assert_eq_poly("x A_n(x;1) = A_n(x)", &lhs, &eulerian(n));
    cert
}

/// Zeros of `f_n` in `[-1,0]`, multiplicity of `-1` equal to
/// `max_i(n_i - 1)`, and `f_n` separating every one-copy extension.
pub fn check_simion(m: &Multiset) -> Result<Certificate> {
    if m.size() > SIMION_LIMIT {
        return Err(Error::TooLarge { size: m.size(), limit: SIMION_LIMIT });
    }
    let mut cert = Certificate::new("simion", json!({ "multiset": m.to_string() }));
    let f = composition_gf(m);
    cert.record("f_n", json!(f.to_canonical()));
    let expected = m.max_count() - 1;
    let observed = f.multiplicity_at(&rat(-1));
    cert.assert(
        "multiplicity of -1 is max_i(n_i - 1)",
        observed == expected,
        json!({ "expected": expected, "observed": observed }),
    );
    let v = is_rz(&f, &IntervalSpec::closed(rat(-1), rat(0)))?;
    cert.assert("f_n in RZ[-1,0]", v.holds, v.report.to_json());
    for j in 0..=m.counts().len() {
        let ext = m.add_copy(j)?;
        let g = composition_gf(&ext);
        let sep = separates(&f, &g)?;
        cert.assert(format!("f_n separates f_(n+e_{}) = f_({ext})", j + 1), sep.holds, sep.to_json());
    }
    Ok(cert)
}

/// `x^(n+1) A_n((x+1)/x)` as a polynomial: `sum_k a_k (x+1)^k x^(n+1-k)`.
fn eulerian_reversal_substitution(n: usize) -> UniPoly {
    let a = eulerian(n);
    let x_plus_1 = UniPoly::from_ints(&[1, 1]);
    a.coeffs().iter().enumerate().fold(UniPoly::zero(), |acc, (k, c)| {
        &acc + &x_plus_1.pow(k).shift_up(n + 1 - k).scale(c)
    })
}

/// `(x+1) F_n(x) = x^(n+1) A_n((x+1)/x)`.
pub fn verify_fn_relation(n: usize) -> Result<Certificate> {
    let f_n = kfact_stirling(n)?;
    let mut cert = Certificate::new("fn-relation", json!({ "n": n }));
    let lhs = &UniPoly::from_ints(&[1, 1]) * &f_n;
    cert.assert_eq_poly("(x+1) F_n(x) = x^(n+1) A_n((x+1)/x)", &lhs, &eulerian_reversal_substitution(n));
    Ok(cert)
}

/// Zeros of `R_n` in `[-1,0]`, `(x+1)^(floor(n/2)-1) || R_n`, the cofactor
/// having `ceil(n/2)` simple zeros including 0, and `R_n` separating
/// `R_{n+1}`.
pub fn check_bona_wilf(n: usize) -> Result<Certificate> {
    if n < 2 {
        return Err(Error::NotApplicable("requires n >= 2".into()));
    }
    let mut cert = Certificate::new("bona-wilf", json!({ "n": n }));
    let r = alt_runs(n)?;
    cert.record("R_n", json!(r.to_canonical()));
    let v = is_rz(&r, &IntervalSpec::closed(rat(-1), rat(0)))?;
    cert.assert("R_n in RZ[-1,0]", v.holds, v.report.to_json());

    let expected = n / 2 - 1;
    let observed = r.multiplicity_at(&rat(-1));
    cert.assert(
        "multiplicity of -1 is floor(n/2) - 1",
        observed == expected,
        json!({ "expected": expected, "observed": observed }),
    );

    match r.divide_exact(&UniPoly::from_ints(&[1, 1]).pow(expected)) {
        Ok(cofactor) => {
            let report = analyze(&cofactor)?;
            let want = n.div_ceil(2);
            let simple = cofactor.is_squarefree();
            let distinct = report.distinct_real_count();
            let has_zero = cofactor.evaluate(&rat(0)).is_zero();
            cert.assert(
                "cofactor has ceil(n/2) simple real zeros including 0",
                simple && report.is_real_rooted() && distinct == want && has_zero,
                json!({
                    "cofactor": cofactor.to_canonical(),
                    "expected": want,
                    "distinct_real": distinct,
                    "squarefree": simple,
                    "zero_at_0": has_zero,
                }),
            );
        }
        Err(_) => cert.assert("(x+1)^(floor(n/2)-1) divides R_n", false, json!(r.to_canonical())),
    }

    let next = alt_runs(n + 1)?;
    let sep = separates(&r, &next)?;
    cert.assert("R_n separates R_{n+1}", sep.holds, sep.to_json());
    Ok(cert)
}

/// `R_n(x) = ((1+x)/2)^(n-1) (1+w)^(n+1) A_n((1-w)/(1+w))` at the rational
/// point `x0 = (1-w0^2)/(1+w0^2)`, where `w = sqrt((1-x)/(1+x))` is `w0`.
pub fn verify_knuth_identity(n: usize, w0: &Rational) -> Result<Certificate> {
    let one = Rational::one();
    if *w0 <= rat(0) || *w0 >= one {
        return Err(Error::InvalidW(w0.to_string()));
    }
    if n == 0 {
        return Err(Error::NotApplicable("requires n >= 1".into()));
    }
    let mut cert = Certificate::new("knuth", json!({ "n": n, "w": w0.to_canonical() }));
    let w2 = w0 * w0;
    let x0 = (&one - &w2) / (&one + &w2);
    let lhs = alt_runs(n)?.evaluate(&x0);
    let half_1px = (&one + &x0) / rat(2);
    let arg = (&one - w0) / (&one + w0);
    let rhs = pow(&half_1px, n - 1) * pow(&(&one + w0), n + 1) * eulerian(n).evaluate(&arg);
    cert.assert(
        "R_n(x0) = ((1+x0)/2)^(n-1) (1+w)^(n+1) A_n((1-w)/(1+w))",
        lhs == rhs,
        json!({ "x0": x0.to_canonical(), "lhs": lhs.to_canonical(), "rhs": rhs.to_canonical() }),
    );
    Ok(cert)
}

fn pow(base: &Rational, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, _| acc * base)
}

/// `B_n` has only real, simple, nonpositive zeros, and `T(x^n) = B_n`.
pub fn check_bell(n: usize) -> Result<Certificate> {
    let mut cert = Certificate::new("bell", json!({ "n": n }));
    let b = bell(n);
    let v = is_rz(&b, &IntervalSpec::at_most(rat(0)))?;
    cert.assert("B_n in RZ(-inf,0]", v.holds, v.report.to_json());
    cert.assert("B_n has simple zeros", all_simple(&b), json!(b.to_canonical()));
    cert.assert_eq_poly("T(x^n) = B_n", &t_transform(&UniPoly::monomial(rat(1), n)), &b);
    Ok(cert)
}

/// Recurrence output equals permutation enumeration for `A_n(x;q)`.
pub fn verify_q_eulerian_oracle(n: usize) -> Result<Certificate> {
    let oracle = families::q_eulerian_oracle(n)?;
    let mut cert = Certificate::new("oracle-q-eulerian", json!({ "n": n }));
    let generated = q_eulerian(n);
    cert.assert(
        "recurrence equals enumeration by excedances and cycles",
        generated == oracle,
        json!({ "recurrence": generated.to_canonical_json(), "oracle": oracle.to_canonical_json() }),
    );
    Ok(cert)
}

/// Recurrence, triangle and permutation enumeration agree on `R_n`.
pub fn verify_alt_runs_oracle(n: usize) -> Result<Certificate> {
    let oracle = families::alt_runs_oracle(n)?;
    let mut cert = Certificate::new("oracle-alt-runs", json!({ "n": n }));
    cert.assert_eq_poly("derivative recurrence equals enumeration", &alt_runs(n)?, &oracle);
    cert.assert_eq_poly("triangle recurrence equals enumeration", &alt_runs_from_triangle(n)?, &oracle);
    Ok(cert)
}

/// Derivative-recurrence `R_n` equals the triangle `R(n,k)`, without enumeration.
pub fn verify_alt_runs_triangle(n: usize) -> Result<Certificate> {
    let mut cert = Certificate::new("alt-runs-triangle", json!({ "n": n }));
    cert.assert_eq_poly("derivative recurrence equals triangle", &alt_runs(n)?, &alt_runs_from_triangle(n)?);
    Ok(cert)
}

/// Recurrence output equals composition enumeration for `f_n`.
pub fn verify_composition_oracle(m: &Multiset) -> Result<Certificate> {
    let oracle = families::composition_oracle(m)?;
    let mut cert = Certificate::new("oracle-composition", json!({ "multiset": m.to_string() }));
    cert.assert_eq_poly("recurrence equals enumeration", &composition_gf(m), &oracle);
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    #[test]
    fn eprop_examples() {
        let c = check_eprop(6, &ratio(1, 3)).unwrap();
        assert!(c.holds, "{}", c.to_json_string());
        let c = check_eprop(5, &rat(-3)).unwrap();
        assert!(c.holds, "{}", c.to_json_string());
        assert!(c.sub_assertions.iter().any(|s| s.description.starts_with("(c) (x-1)^m") && s.witness["observed"] == 2));
        let c = check_eprop(4, &rat(-1)).unwrap();
        assert!(c.holds);
        assert!(c.sub_assertions.iter().any(|s| s.description == "(c) A_n(x;-1) = -(x-1)^(n-1)"));
        // n = 0, q = 0: A_1(x;0) = 0
        let c = check_eprop(0, &rat(0)).unwrap();
        assert!(c.holds);
        // -1/2 with n = 3: no part applies
        let c = check_eprop(3, &ratio(-1, 2)).unwrap();
        assert!(c.holds);
        assert_eq!(c.sub_assertions.len(), 1);
    }

    #[test]
    fn closed_forms() {
        for n in [0, 3, 6] {
            assert!(verify_q_frobenius(n).holds);
        }
        for n in 1..=6 {
            assert!(verify_classical_frobenius(n).holds);
            assert!(verify_fn_relation(n).unwrap().holds);
        }
        for n in 0..=6 {
            assert!(verify_eulerian_at_one(n).holds);
        }
        // n = 2: (x+1)(x + 2x^2) = x^3 A_2((x+1)/x)
        assert_eq!(eulerian_reversal_substitution(2), UniPoly::from_ints(&[0, 1, 3, 2]));
        assert!(verify_fn_relation(0).is_err());
    }

    #[test]
    fn simion_examples() {
        let m = |c: &[usize]| Multiset::new(c.to_vec()).unwrap();
        let c = check_simion(&m(&[2])).unwrap();
        assert!(c.holds);
        assert_eq!(c.sub_assertions[1].witness["observed"], 1);
        let c = check_simion(&m(&[1, 1, 1])).unwrap();
        assert!(c.holds);
        assert_eq!(c.sub_assertions[1].witness["observed"], 0);
        assert!(check_simion(&m(&[3, 2])).unwrap().holds);
    }

    #[test]
    fn bona_wilf_examples() {
        for n in [2, 4, 7] {
            let c = check_bona_wilf(n).unwrap();
            assert!(c.holds, "{}", c.to_json_string());
        }
        let c = check_bona_wilf(7).unwrap();
        assert_eq!(c.sub_assertions[2].witness["observed"], 2);
        assert_eq!(c.sub_assertions[3].witness["distinct_real"], 4);
        assert!(check_bona_wilf(1).is_err());
    }

    #[test]
    fn knuth_examples() {
        let c = verify_knuth_identity(2, &ratio(1, 2)).unwrap();
        assert!(c.holds);
        assert_eq!(c.sub_assertions[0].witness["lhs"], "6/5");
        // n = 1: 1 against 1 - w^2
        let c = verify_knuth_identity(1, &ratio(1, 2)).unwrap();
        assert!(!c.holds);
        assert_eq!(c.sub_assertions[0].witness["rhs"], "3/4");
        assert!(matches!(verify_knuth_identity(2, &rat(1)), Err(Error::InvalidW(_))));
    }

    #[test]
    fn oracles_and_bell() {
        assert!(verify_q_eulerian_oracle(4).unwrap().holds);
        assert!(verify_alt_runs_oracle(5).unwrap().holds);
        assert!(verify_composition_oracle(&Multiset::new(vec![2, 1]).unwrap()).unwrap().holds);
        assert!(check_bell(5).unwrap().holds);
        assert!(verify_alt_runs_triangle(12).unwrap().holds);
    }
}
