//! Polynomial families generated from their recurrences, plus closed forms
//! and enumeration oracles used to cross-check them.
//!
//! | family | generator |
//! |---|---|
//! | `A_n(x)` Eulerian | `A_{n+1} = (n+1)x A_n + x(1-x) A_n'` |
//! | `A_n(x;q)` q-Eulerian | `A_{n+1} = (nx+q) A_n + x(1-x) dA_n/dx` |
//! | `E_n(x;q)` | `E_{n+1} = q(1+x) E_n + x(1+x) E_n'` |
//! | `B_n(x)` Bell | `B_n = x B_{n-1} + x B_{n-1}'` |
//! | `R_n(x)` alternating runs | `R_{n+2} = x(nx+2) R_{n+1} + x(1-x^2) R_{n+1}'` |
//! | `f_n(x)` multiset compositions | `(n_j+1) f_{n+e_j} = (x+n_j) f_n + x(x+1) f_n'` |

mod multiset;
pub mod oracle;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use multiset::Multiset;
pub use oracle::{alt_runs_oracle, composition_oracle, q_eulerian_oracle};

use crate::error::{Error, Result};
use crate::{rat, BiPoly, Rational, UniPoly};

/// Identifies a generated family; parameterized members carry their parameter.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilyId {
    Eulerian,
    QEulerianSymbolic,
    QEulerianAt(Rational),
    ETransformAt(Rational),
    Bell,
    AltRuns,
    CompositionGF(Multiset),
    KFactorialStirling,
}

impl FamilyId {
    /// CLI-facing name.
    pub fn name(&self) -> &'static str {
        match self {
            FamilyId::Eulerian => "eulerian",
            FamilyId::QEulerianSymbolic => "q-eulerian",
            FamilyId::QEulerianAt(_) => "q-eulerian-at",
            FamilyId::ETransformAt(_) => "e-poly",
            FamilyId::Bell => "bell",
            FamilyId::AltRuns => "alt-runs",
            FamilyId::CompositionGF(_) => "composition",
            FamilyId::KFactorialStirling => "kfact-stirling",
        }
    }

    pub const NAMES: [&'static str; 8] =
        ["eulerian", "q-eulerian", "q-eulerian-at", "e-poly", "bell", "alt-runs", "composition", "kfact-stirling"];

    /// Univariate member `n`; `None` for the symbolic q-Eulerian family,
    /// where [`q_eulerian`] is the generator. Composition families ignore `n`.
    pub fn member(&self, n: usize) -> Result<Option<UniPoly>> {
        Ok(Some(match self {
            FamilyId::Eulerian => eulerian(n),
            FamilyId::QEulerianSymbolic => return Ok(None),
            FamilyId::QEulerianAt(q) => q_eulerian_at(n, q),
            FamilyId::ETransformAt(q) => e_poly(n, q),
            FamilyId::Bell => bell(n),
            FamilyId::AltRuns => alt_runs(n)?,
            FamilyId::CompositionGF(m) => composition_gf(m),
            FamilyId::KFactorialStirling => kfact_stirling(n)?,
        }))
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parses a family name; `q` and `multiset` supply parameters where needed.
pub fn parse_family(name: &str, q: Option<&Rational>, multiset: Option<&Multiset>) -> Result<FamilyId> {
    let need_q = || q.cloned().ok_or_else(|| Error::Parse(format!("family {name} needs --q")));
    Ok(match name {
        "eulerian" => FamilyId::Eulerian,
        "q-eulerian" => FamilyId::QEulerianSymbolic,
        "q-eulerian-at" => FamilyId::QEulerianAt(need_q()?),
        "e-poly" => FamilyId::ETransformAt(need_q()?),
        "bell" => FamilyId::Bell,
        "alt-runs" => FamilyId::AltRuns,
        "composition" => FamilyId::CompositionGF(
            multiset.cloned().ok_or_else(|| Error::Parse("family composition needs --multiset".into()))?,
        ),
        "kfact-stirling" => FamilyId::KFactorialStirling,
        other => return Err(Error::Parse(format!("unknown family {other:?}"))),
    })
}

impl FromStr for FamilyId {
    type Err = Error;

    /// Parameter-free families only.
    fn from_str(s: &str) -> Result<Self> {
        parse_family(s, None, None)
    }
}

/// `x(1 - x)`.
fn x_one_minus_x() -> UniPoly {
    UniPoly::from_ints(&[0, 1, -1])
}

/// Classical Eulerian polynomial `A_n(x) = sum over S_n of x^(exc+1)`.
pub fn eulerian(n: usize) -> UniPoly {
    let mut a = UniPoly::one();
    for m in 0..n {
        let lin = UniPoly::from_ints(&[0, m as i64 + 1]);
        a = &(&lin * &a) + &(&x_one_minus_x() * &a.derivative());
    }
    a
}

/// `A_n(x;q)` with `q` symbolic.
pub fn q_eulerian(n: usize) -> BiPoly {
    let v = BiPoly::from_x_poly(&x_one_minus_x());
    let mut a = BiPoly::one();
    for m in 0..n {
        // m x + q
        let u = BiPoly::new(vec![UniPoly::x(), UniPoly::constant(rat(m as i64))]);
        a = &(&u * &a) + &(&v * &a.derivative_x());
    }
    a
}

/// `A_n(x;q0)`.
pub fn q_eulerian_at(n: usize, q0: &Rational) -> UniPoly {
    q_eulerian(n).specialize(q0)
}

/// `E_n(x;q0) = (1+x)^n A_n(x/(1+x); q0)`, via its own recurrence.
pub fn e_poly(n: usize, q0: &Rational) -> UniPoly {
    let q_one_plus_x = UniPoly::new(vec![q0.clone(), q0.clone()]);
    let x_one_plus_x = UniPoly::from_ints(&[0, 1, 1]);
    let mut e = UniPoly::one();
    for _ in 0..n {
        e = &(&q_one_plus_x * &e) + &(&x_one_plus_x * &e.derivative());
    }
    e
}

/// Bell polynomial `B_n(x) = sum_k S(n,k) x^k` from `B_n = x B_{n-1} + x B_{n-1}'`.
pub fn bell(n: usize) -> UniPoly {
    let mut b = UniPoly::one();
    for _ in 0..n {
        b = (&b + &b.derivative()).shift_up(1);
    }
    b
}

/// Rows `0..=n` of the Stirling triangle `S(m+1,k) = k S(m,k) + S(m,k-1)`.
pub fn stirling2_table(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows = vec![vec![BigInt::one()]];
    for m in 0..n {
        let prev = &rows[m];
        let mut row = vec![BigInt::zero(); m + 2];
        for (k, cell) in row.iter_mut().enumerate() {
            if k <= m {
                *cell += BigInt::from(k) * &prev[k];
            }
            if k >= 1 {
                *cell += &prev[k - 1];
            }
        }
        rows.push(row);
    }
    rows
}

/// Stirling number of the second kind, zero outside `0 <= k <= n`.
pub fn stirling2(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    Rational::from_integer(stirling2_table(n)[n][k].clone())
}

pub fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Triangle `R(n,k)` of permutations of `[n]` with `k` alternating runs:
/// `R(n,k) = k R(n-1,k) + 2 R(n-1,k-1) + (n-k) R(n-1,k-2)`, `R(1,0) = 1`.
pub fn alt_runs_triangle(n: usize, k: usize) -> BigInt {
    alt_runs_rows(n).pop().and_then(|row| row.get(k).cloned()).unwrap_or_default()
}

fn alt_runs_rows(n: usize) -> Vec<Vec<BigInt>> {
    if n == 0 {
        return vec![];
    }
    let mut rows = vec![vec![BigInt::one(), BigInt::zero()]];
    for m in 2..=n {
        let prev = rows.last().expect("nonempty");
        let at = |k: isize| -> BigInt {
            if k < 0 {
                BigInt::zero()
            } else {
                prev.get(k as usize).cloned().unwrap_or_default()
            }
        };
        let row: Vec<BigInt> = (0..=m)
            .map(|k| {
                let ki = k as isize;
                BigInt::from(k) * at(ki) + BigInt::from(2) * at(ki - 1) + BigInt::from(m - k) * at(ki - 2)
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// `R_n(x) = sum_k R(n,k) x^k` from the derivative recurrence, with
/// `R_1 = 1` and `R_2 = 2x`.
pub fn alt_runs(n: usize) -> Result<UniPoly> {
    match n {
        0 => Err(Error::NotApplicable("alternating runs need n >= 1".into())),
        1 => Ok(UniPoly::one()),
        _ => {
            let mut r = UniPoly::from_ints(&[0, 2]);
            let x_one_minus_x2 = UniPoly::from_ints(&[0, 1, 0, -1]);
            // r holds R_{m+1}; step to R_{m+2}
            for m in 1..n - 1 {
                let lead = UniPoly::from_ints(&[0, 2, m as i64]);
                r = &(&lead * &r) + &(&x_one_minus_x2 * &r.derivative());
            }
            Ok(r)
        }
    }
}

/// `R_n(x)` read off the triangle.
pub fn alt_runs_from_triangle(n: usize) -> Result<UniPoly> {
    if n == 0 {
        return Err(Error::NotApplicable("alternating runs need n >= 1".into()));
    }
    let row = alt_runs_rows(n).pop().expect("n >= 1");
    Ok(UniPoly::new(row.into_iter().map(Rational::from_integer).collect()))
}

/// Generating polynomial of compositions of `m` by number of parts, built in
/// canonical order: types by index, copies one at a time.
pub fn composition_gf(m: &Multiset) -> UniPoly {
    let steps: Vec<usize> = m
        .counts()
        .iter()
        .enumerate()
        .flat_map(|(j, &c)| std::iter::repeat(j).take(c))
        .collect();
    composition_gf_by_steps(&steps)
}

/// Builds `f_n` by adjoining one copy of type `steps[i]` at a time, starting
/// from the empty multiset (`f = 1`). Each step divides exactly by `n_j + 1`.
pub fn composition_gf_by_steps(steps: &[usize]) -> UniPoly {
    let x_one_plus_x = UniPoly::from_ints(&[0, 1, 1]);
    let mut counts: Vec<usize> = Vec::new();
    let mut f = UniPoly::one();
    for &j in steps {
        if j >= counts.len() {
            counts.resize(j + 1, 0);
        }
        let nj = counts[j];
        let lin = UniPoly::from_ints(&[nj as i64, 1]);
        let rhs = &(&lin * &f) + &(&x_one_plus_x * &f.derivative());
        f = rhs.scale(&Rational::new(1.into(), (nj as i64 + 1).into()));
        debug_assert!(f.coeffs().iter().all(|c| c.is_integer()), "inexact division by n_j + 1");
        counts[j] += 1;
    }
    f
}

/// `F_n(x) = sum_{k=1}^n k! S(n,k) x^k`.
pub fn kfact_stirling(n: usize) -> Result<UniPoly> {
    if n == 0 {
        return Err(Error::NotApplicable("F_n needs n >= 1".into()));
    }
    let row = &stirling2_table(n)[n];
    Ok(UniPoly::new(
        (0..=n).map(|k| Rational::from_integer(factorial(k) * &row[k])).collect(),
    ))
}

/// `x sum_k k! S(n,k) (x-1)^(n-k)`, the classical Frobenius form of `A_n(x)`.
pub fn classical_frobenius(n: usize) -> UniPoly {
    let row = &stirling2_table(n)[n];
    let x_minus_1 = UniPoly::from_ints(&[-1, 1]);
    let sum = (0..=n).fold(UniPoly::zero(), |acc, k| {
        let c = Rational::from_integer(factorial(k) * &row[k]);
        &acc + &x_minus_1.pow(n - k).scale(&c)
    });
    if n == 0 {
        // A_0 = 1 is a definition, not an instance of the formula.
        return UniPoly::one();
    }
    sum.shift_up(1)
}

/// `binom(q+k-1, k)` as a polynomial in `q`: the rising factorial
/// `q(q+1)...(q+k-1)` divided by `k!`.
pub fn rising_binomial(k: usize) -> UniPoly {
    let rising = (0..k).fold(UniPoly::one(), |acc, i| &acc * &UniPoly::from_ints(&[i as i64, 1]));
    rising.scale(&Rational::new(1.into(), factorial(k)))
}

/// `sum_k binom(q+k-1, k) k! S(n,k) (x-1)^(n-k)` as a bivariate polynomial.
pub fn q_frobenius(n: usize) -> BiPoly {
    let row = &stirling2_table(n)[n];
    let x_minus_1 = UniPoly::from_ints(&[-1, 1]);
    (0..=n).fold(BiPoly::zero(), |acc, k| {
        let weight = Rational::from_integer(factorial(k) * &row[k]);
        let qpart = rising_binomial(k).scale(&weight);
        &acc + &BiPoly::outer(&qpart, &x_minus_1.pow(n - k))
    })
}

/// `A_n(x;-t) = sum_k (-1)^k binom(t,k) k! S(n,k) (x-1)^(n-k)`.
pub fn q_eulerian_neg(n: usize, t: usize) -> Result<UniPoly> {
    if t == 0 {
        return Err(Error::NotApplicable("t must be a positive integer".into()));
    }
    let row = &stirling2_table(n)[n];
    let x_minus_1 = UniPoly::from_ints(&[-1, 1]);
    let mut binom = BigInt::one();
    let mut acc = UniPoly::zero();
    for k in 0..=n.min(t) {
        if k > 0 {
            binom = binom * BigInt::from(t - k + 1) / BigInt::from(k);
        }
        let mut c = Rational::from_integer(&binom * factorial(k) * &row[k]);
        if k % 2 == 1 {
            c = -c;
        }
        acc = &acc + &x_minus_1.pow(n - k).scale(&c);
    }
    Ok(acc)
}
