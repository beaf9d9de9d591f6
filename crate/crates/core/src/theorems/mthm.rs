//! Verifiers for `F = u f + v f'`: real-rootedness, separation and the
//! multiplicity trichotomy, the one-sided location biconditionals, and the
//! `x(x+1)` corollary.

use std::cmp::Ordering;

use serde_json::{json, Value};

use super::Certificate;
use crate::error::{Error, Result};
use crate::interlace::{refinement_bound, separates};
use crate::realroots::{analyze, is_rz, IntervalSpec, RealRoot};
use crate::{rat, Rational, Scalar, UniPoly};

/// `F = u f + v f'` with `f` standard and real-rooted.
#[derive(Debug, Clone, PartialEq)]
pub struct MthmInstance {
    pub f: UniPoly,
    pub u: UniPoly,
    pub v: UniPoly,
}

impl MthmInstance {
    pub fn new(f: UniPoly, u: UniPoly, v: UniPoly) -> Self {
        MthmInstance { f, u, v }
    }

    pub fn big_f(&self) -> UniPoly {
        &(&self.u * &self.f) + &(&self.v * &self.f.derivative())
    }

    pub fn to_json(&self) -> Value {
        json!({ "f": self.f.to_canonical(), "u": self.u.to_canonical(), "v": self.v.to_canonical() })
    }
}

pub(crate) fn root_json(r: &RealRoot<Rational>) -> Value {
    match r {
        RealRoot::Exact(x) => json!(x.to_canonical()),
        RealRoot::Isolated(iv) => json!([iv.lo().to_canonical(), iv.hi().to_canonical()]),
    }
}

struct Validated {
    big_f: UniPoly,
    roots: Vec<(RealRoot<Rational>, usize)>,
}

/// Checks the hypotheses; failures are `NotApplicable`.
fn validate(inst: &MthmInstance) -> Result<Validated> {
    let na = |s: &str| Err(Error::NotApplicable(s.into()));
    if !inst.f.is_standard() {
        return na("f must be standard (positive leading coefficient)");
    }
    let big_f = inst.big_f();
    if big_f.is_zero() {
        return na("F = u f + v f' is the zero polynomial");
    }
    if !big_f.is_standard() {
        return na("F = u f + v f' is not standard");
    }
    let (df, d_big) = (inst.f.degree().finite().expect("nonzero"), big_f.degree().finite().expect("nonzero"));
    if d_big != df && d_big != df + 1 {
        return na("deg F must be deg f or deg f + 1");
    }
    let report = analyze(&inst.f)?;
    if !report.is_real_rooted() {
        return na("f is not real-rooted");
    }
    let mut roots = report.roots();
    for (r, _) in &mut roots {
        if r.sign_of(&inst.v)? > 0 {
            return na("v is positive at a zero of f");
        }
    }
    Ok(Validated { big_f, roots })
}

/// True iff the instance meets the hypotheses checked by [`check_mthm`].
pub fn admissible(inst: &MthmInstance) -> bool {
    validate(inst).is_ok()
}

/// Which case of the trichotomy applies at `r`, and the multiplicity it
/// predicts for `r` as a zero of `F`.
fn trichotomy(inst: &MthmInstance, r: &mut RealRoot<Rational>, m: usize) -> Result<(char, usize, i8)> {
    if r.sign_of(&inst.v)? != 0 {
        return Ok(('a', m - 1, 0));
    }
    let w = &inst.u + &inst.v.derivative().scale(&rat(m as i64));
    let sw = r.sign_of(&w)?;
    Ok(if sw != 0 { ('b', m, sw) } else { ('c', m + 1, 0) })
}

pub fn check_mthm(inst: &MthmInstance) -> Result<Certificate> {
    let Validated { big_f, mut roots } = validate(inst)?;
    let mut cert = Certificate::new("mthm", inst.to_json());
    cert.record("F", json!(big_f.to_canonical()));

    let rz = is_rz(&big_f, &IntervalSpec::WholeLine)?;
    cert.assert("F is real-rooted", rz.holds, rz.report.to_json());
    let sep = separates(&inst.f, &big_f)?;
    cert.assert("f separates F", sep.holds, sep.to_json());

    for (r, m) in &mut roots {
        let (case, predicted, _) = trichotomy(inst, r, *m)?;
        let observed = r.multiplicity_in(&big_f)?;
        cert.assert(
            format!("multiplicity trichotomy case ({case})"),
            observed == predicted,
            json!({ "root": root_json(r), "m": m, "predicted": predicted, "observed": observed }),
        );
    }
    Ok(cert)
}

/// True iff every zero of `p` is real and lies on the given side of `r`
/// (at or below it when `below`).
fn zeros_on_side(p: &UniPoly, r: &RealRoot<Rational>, below: bool, rounds: usize) -> Result<(bool, Value)> {
    if let RealRoot::Exact(x) = r {
        let region = if below { IntervalSpec::at_most(x.clone()) } else { IntervalSpec::at_least(x.clone()) };
        let v = is_rz(p, &region)?;
        return Ok((v.holds, json!({ "region": region.describe(), "roots": v.report.to_json() })));
    }
    let report = analyze(p)?;
    let mut holds = report.is_real_rooted();
    for (mut s, _) in report.roots() {
        let ord = s.compare(&mut r.clone(), rounds)?;
        holds &= if below { ord != Ordering::Greater } else { ord != Ordering::Less };
    }
    Ok((holds, json!({ "bound": root_json(r), "below": below, "roots": report.to_json() })))
}

/// Both one-sided biconditionals: `(A)` at the largest zero of `f`, `(B)` at
/// the smallest. Each side is evaluated independently.
pub fn check_mthm_ab(inst: &MthmInstance) -> Result<Certificate> {
    let Validated { big_f, mut roots } = validate(inst)?;
    if roots.is_empty() {
        return Err(Error::NotApplicable("f has no zeros".into()));
    }
    let mut cert = Certificate::new("mthm-ab", inst.to_json());
    let rounds = refinement_bound(&inst.f, &big_f);
    let same_degree = big_f.degree() == inst.f.degree();

    let (r, m) = &mut roots[0];
    let (lhs, witness) = zeros_on_side(&big_f, r, true, rounds)?;
    let v_zero = r.sign_of(&inst.v)? == 0;
    let w_sign = if v_zero { trichotomy(inst, r, *m)?.2 } else { 0 };
    let rhs = v_zero && w_sign >= 0;
    cert.assert(
        "(A) F in RZ(-inf,r] iff v(r) = 0 and u(r) + m v'(r) >= 0",
        lhs == rhs,
        json!({ "r": root_json(r), "m": m, "lhs": lhs, "rhs": rhs, "F_roots": witness }),
    );

    let last = roots.len() - 1;
    let (r, m) = &mut roots[last];
    let (lhs, witness) = zeros_on_side(&big_f, r, false, rounds)?;
    let v_zero = r.sign_of(&inst.v)? == 0;
    let w_sign = if v_zero { trichotomy(inst, r, *m)?.2 } else { 0 };
    let rhs = same_degree || (v_zero && w_sign <= 0);
    cert.assert(
        "(B) F in RZ[r,+inf) iff deg F = deg f, or v(r) = 0 and u(r) + m v'(r) <= 0",
        lhs == rhs,
        json!({ "r": root_json(r), "m": m, "lhs": lhs, "rhs": rhs, "F_roots": witness }),
    );
    Ok(cert)
}

/// `F = (ax + b) f + x(x+1) f'` with `f` standard in `RZ[-1,0]`, under
/// `b + m0 >= 0` and `a + m1 >= b`.
pub fn check_corollary(f: &UniPoly, a: &Rational, b: &Rational) -> Result<Certificate> {
    let na = |s: &str| Err(Error::NotApplicable(s.into()));
    if !f.is_standard() {
        return na("f must be standard");
    }
    let unit = IntervalSpec::closed(rat(-1), rat(0));
    if !is_rz(f, &unit)?.holds {
        return na("f has a zero outside [-1,0]");
    }
    let m0 = f.multiplicity_at(&rat(0));
    let m1 = f.multiplicity_at(&rat(-1));
    let b_m0 = b + rat(m0 as i64);
    let a_m1 = a + rat(m1 as i64);
    if b_m0 < rat(0) || a_m1 < *b {
        return na("requires b + m0 >= 0 and a + m1 >= b");
    }
    let u = UniPoly::new(vec![b.clone(), a.clone()]);
    let big_f = &(&u * f) + &(&UniPoly::from_ints(&[0, 1, 1]) * &f.derivative());
    if big_f.is_zero() || !big_f.is_standard() {
        return na("F is zero or not standard");
    }
    let mut cert = Certificate::new(
        "corollary",
        json!({ "f": f.to_canonical(), "a": a.to_canonical(), "b": b.to_canonical() }),
    );
    cert.record("F", json!({ "F": big_f.to_canonical(), "m0": m0, "m1": m1 }));

    let rz = is_rz(&big_f, &unit)?;
    cert.assert("F in RZ[-1,0]", rz.holds, rz.report.to_json());
    let sep = separates(f, &big_f)?;
    cert.assert("f separates F", sep.holds, sep.to_json());

    let expect0 = if b_m0 > rat(0) { m0 } else { m0 + 1 };
    let got0 = big_f.multiplicity_at(&rat(0));
    cert.assert(
        "x^m0 || F if b + m0 > 0, x^(m0+1) || F if b + m0 = 0",
        got0 == expect0,
        json!({ "b_plus_m0": b_m0.to_canonical(), "expected": expect0, "observed": got0 }),
    );
    let expect1 = if a_m1 > *b { m1 } else { m1 + 1 };
    let got1 = big_f.multiplicity_at(&rat(-1));
    cert.assert(
        "(x+1)^m1 || F if a + m1 > b, (x+1)^(m1+1) || F if a + m1 = b",
        got1 == expect1,
        json!({ "a_plus_m1": a_m1.to_canonical(), "b": b.to_canonical(), "expected": expect1, "observed": got1 }),
    );
    Ok(cert)
}
