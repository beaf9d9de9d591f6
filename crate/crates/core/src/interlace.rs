//! The separation relation `f ⪯ F`: `deg f <= deg F <= deg f + 1` and the
//! zeros `r_i` of `f` and `s_j` of `F`, listed with multiplicity in
//! nonincreasing order, satisfy `s_1 >= r_1 >= s_2 >= r_2 >= ...`.
//!
//! Equal zeros are decided algebraically (gcd of defining polynomials);
//! interval refinement only orders zeros already known to be distinct.

use std::cmp::Ordering;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactpoly::{Degree, Poly, Scalar};
use crate::realroots::{analyze, cauchy_bound, RealRoot, RootReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootTag {
    /// Zero of the separating polynomial only.
    Lower,
    /// Zero of the separated polynomial only.
    Upper,
    Shared,
}

impl RootTag {
    pub fn as_str(self) -> &'static str {
        match self {
            RootTag::Lower => "f",
            RootTag::Upper => "F",
            RootTag::Shared => "shared",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum RootDescriptor<T> {
    Exact(T),
    Interval(T, T),
}

impl<T: Scalar> RootDescriptor<T> {
    fn of(root: &RealRoot<T>) -> Self {
        match root {
            RealRoot::Exact(x) => RootDescriptor::Exact(x.clone()),
            RealRoot::Isolated(r) => RootDescriptor::Interval(r.lo().clone(), r.hi().clone()),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            RootDescriptor::Exact(x) => json!(x.to_canonical()),
            RootDescriptor::Interval(lo, hi) => json!([lo.to_canonical(), hi.to_canonical()]),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WitnessEntry<T> {
    pub tag: RootTag,
    pub root: RootDescriptor<T>,
    pub mult: usize,
}

/// Result of a separation check. Failures are verdicts, not errors.
#[derive(Debug, Clone, PartialEq)]
pub struct SeparationVerdict<T> {
    pub holds: bool,
    pub degree_ok: bool,
    /// Distinct zeros of both polynomials in decreasing order. A zero common
    /// to both appears as `Shared` with the smaller multiplicity, followed by
    /// the excess tagged with its owner.
    pub merged_order_witness: Vec<WitnessEntry<T>>,
    pub failure_reason: Option<String>,
    /// Interpretation notes, e.g. how the chain ends for equal degrees.
    pub note: Option<String>,
}

impl<T: Scalar> SeparationVerdict<T> {
    fn fail(degree_ok: bool, reason: impl Into<String>) -> Self {
        SeparationVerdict {
            holds: false,
            degree_ok,
            merged_order_witness: vec![],
            failure_reason: Some(reason.into()),
            note: None,
        }
    }

    /// Zeros tagged `Shared`, with multiplicities.
    pub fn shared(&self) -> impl Iterator<Item = (&RootDescriptor<T>, usize)> {
        self.merged_order_witness
            .iter()
            .filter(|w| w.tag == RootTag::Shared)
            .map(|w| (&w.root, w.mult))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "holds": self.holds,
            "degree_ok": self.degree_ok,
            "witness": self.merged_order_witness.iter().map(|w| json!({
                "tag": w.tag.as_str(),
                "root": w.root.to_json(),
                "mult": w.mult,
            })).collect::<Vec<_>>(),
            "failure_reason": self.failure_reason,
            "note": self.note,
        })
    }
}

/// Bisection budget for ordering distinct zeros of `f` and `F`:
/// `4 * (bits of the larger Cauchy bound + total degree)`.
pub fn refinement_bound<T: Scalar>(f: &Poly<T>, big_f: &Poly<T>) -> usize {
    let bits = |p: &Poly<T>| -> u64 {
        let s = p.squarefree_part();
        if s.is_constant() {
            0
        } else {
            cauchy_bound(&s).bit_size()
        }
    };
    let deg = |p: &Poly<T>| p.degree().finite().unwrap_or(0) as u64;
    (4 * (bits(f).max(bits(big_f)) + deg(f) + deg(big_f))) as usize
}

/// Decides `f ⪯ F`.
///
/// Errors only on an internal refinement-bound overrun, which indicates a
/// defect rather than a mathematical failure.
pub fn separates<T: Scalar>(f: &Poly<T>, big_f: &Poly<T>) -> Result<SeparationVerdict<T>> {
    let (Degree::Finite(df), Degree::Finite(d_big)) = (f.degree(), big_f.degree()) else {
        return Ok(SeparationVerdict::fail(false, "zero polynomial"));
    };
    let degree_ok = df <= d_big && d_big <= df + 1;
    let rf = analyze(f)?;
    let r_big = analyze(big_f)?;
    if !rf.is_real_rooted() || !r_big.is_real_rooted() {
        return Ok(SeparationVerdict::fail(degree_ok, "NotRealRooted"));
    }
    let rounds = refinement_bound(f, big_f);
    let merged = merge_roots(&rf, &r_big, rounds)?;

    // Flat nonincreasing sequences as positions in the merged order.
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    for (pos, (_, mf, m_big)) in merged.iter().enumerate() {
        lower.extend(std::iter::repeat(pos).take(*mf));
        upper.extend(std::iter::repeat(pos).take(*m_big));
    }
    // s_1, r_1, s_2, r_2, ... while terms exist.
    let mut chain = Vec::new();
    for i in 0..lower.len().max(upper.len()) {
        if let Some(&s) = upper.get(i) {
            chain.push(('s', i + 1, s));
        }
        if let Some(&r) = lower.get(i) {
            chain.push(('r', i + 1, r));
        }
    }
    let violation = chain.windows(2).find(|w| w[0].2 > w[1].2).map(|w| {
        format!("chain broken: {}_{} < {}_{}", w[0].0, w[0].1, w[1].0, w[1].1)
    });

    let mut witness = Vec::new();
    for (root, mf, m_big) in &merged {
        let desc = RootDescriptor::of(root);
        let common = (*mf).min(*m_big);
        if common > 0 {
            witness.push(WitnessEntry { tag: RootTag::Shared, root: desc.clone(), mult: common });
        }
        if *mf > common {
            witness.push(WitnessEntry { tag: RootTag::Lower, root: desc.clone(), mult: mf - common });
        }
        if *m_big > common {
            witness.push(WitnessEntry { tag: RootTag::Upper, root: desc, mult: m_big - common });
        }
    }

    let failure_reason = if !degree_ok {
        Some(format!("degree condition violated: deg f = {df}, deg F = {d_big}"))
    } else {
        violation
    };
    let note = (df == d_big && df > 0)
        .then(|| "equal degrees: chain s_1 >= r_1 >= ... >= s_d >= r_d checked as written; r_d has no lower bound".to_string());
    Ok(SeparationVerdict {
        holds: failure_reason.is_none(),
        degree_ok,
        merged_order_witness: witness,
        failure_reason,
        note,
    })
}

type Merged<T> = Vec<(RealRoot<T>, usize, usize)>;

/// Merges two decreasing lists of distinct zeros into one decreasing list of
/// `(zero, multiplicity in f, multiplicity in F)`.
fn merge_roots<T: Scalar>(rf: &RootReport<T>, r_big: &RootReport<T>, rounds: usize) -> Result<Merged<T>> {
    let mut a = rf.roots().into_iter().peekable();
    let mut b = r_big.roots().into_iter().peekable();
    let mut out = Vec::new();
    loop {
        match (a.peek_mut(), b.peek_mut()) {
            (None, None) => break,
            (Some(_), None) => {
                let (r, m) = a.next().expect("peeked");
                out.push((r, m, 0));
            }
            (None, Some(_)) => {
                let (r, m) = b.next().expect("peeked");
                out.push((r, 0, m));
            }
            (Some((ra, _)), Some((rb, _))) => match ra.compare(rb, rounds)? {
                Ordering::Equal => {
                    let (r, ma) = a.next().expect("peeked");
                    let (_, mb) = b.next().expect("peeked");
                    out.push((r, ma, mb));
                }
                Ordering::Greater => {
                    let (r, m) = a.next().expect("peeked");
                    out.push((r, m, 0));
                }
                Ordering::Less => {
                    let (r, m) = b.next().expect("peeked");
                    out.push((r, 0, m));
                }
            },
        }
    }
    Ok(out)
}

/// `f' ⪯ f` for a real-rooted `f` of degree at least one.
pub fn derivative_interlaces<T: Scalar>(f: &Poly<T>) -> Result<SeparationVerdict<T>> {
    match f.degree() {
        Degree::Finite(d) if d >= 1 => separates(&f.derivative(), f),
        _ => Err(Error::NotApplicable("derivative interlacing needs degree >= 1".into())),
    }
}
