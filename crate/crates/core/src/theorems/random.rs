//! Seeded instance generators. Every generated polynomial has rational
//! zeros chosen up front, so hypotheses hold by construction and rejection
//! only filters degenerate `F`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::mthm::{admissible, MthmInstance};
use crate::basisops::{e_inverse, t_inverse};
use crate::{rat, ratio, Rational, UniPoly};

pub type InstanceRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> InstanceRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rational(rng: &mut InstanceRng, num: std::ops::RangeInclusive<i64>, max_den: i64) -> Rational {
    ratio(rng.gen_range(num), rng.gen_range(1..=max_den))
}

fn product(factors: &[(Rational, usize)]) -> UniPoly {
    factors.iter().fold(UniPoly::one(), |acc, (r, m)| &acc * &UniPoly::linear_root(r).pow(*m))
}

/// Distinct zeros with multiplicities, drawn by `draw`.
fn zeros(
    rng: &mut InstanceRng,
    count: usize,
    max_mult: usize,
    mut draw: impl FnMut(&mut InstanceRng) -> Rational,
) -> Vec<(Rational, usize)> {
    let mut out: Vec<(Rational, usize)> = Vec::new();
    while out.len() < count {
        let r = draw(rng);
        if out.iter().all(|(s, _)| *s != r) {
            let m = rng.gen_range(1..=max_mult);
            out.push((r, m));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// A valid `F = u f + v f'` instance: `f` monic with one to three distinct
/// rational zeros, `v` of degree at most 2 with `v <= 0` at every zero, and
/// `u` of degree at most 1. About a third of the draws force case (c) of the
/// trichotomy at some zero where `v` vanishes.
pub fn random_mthm_instance(rng: &mut InstanceRng) -> MthmInstance {
    loop {
        let k = rng.gen_range(1..=3);
        let roots = zeros(rng, k, 3, |g| rational(g, -6..=6, 3));
        let f = product(&roots);
        let lo = roots[0].0.clone();
        let hi = roots[k - 1].0.clone();
        let c = rational(rng, 1..=3, 2);
        let v = match rng.gen_range(0..7) {
            0 => UniPoly::constant(-c),
            1 => UniPoly::linear_root(&hi).scale(&c),
            2 => UniPoly::linear_root(&lo).scale(&-c),
            3 => (&UniPoly::linear_root(&lo) * &UniPoly::linear_root(&hi)).scale(&c),
            4 => UniPoly::linear_root(&roots.choose(rng).expect("nonempty").0).pow(2).scale(&-c),
            5 => UniPoly::new((0..3).map(|_| rat(rng.gen_range(-3..=3))).collect()),
            _ => UniPoly::zero(),
        };
        let forced = rng.gen_bool(1.0 / 3.0);
        let vanishing: Vec<&(Rational, usize)> = roots.iter().filter(|(r, _)| v.evaluate(r) == rat(0)).collect();
        let u = match vanishing.choose(rng) {
            Some((r, m)) if forced => {
                // u(r) + m v'(r) = 0
                let a1 = rat(rng.gen_range(-2..=3));
                let shift = v.derivative().evaluate(r) * rat(*m as i64);
                &UniPoly::linear_root(r).scale(&a1) - &UniPoly::constant(shift)
            }
            _ => UniPoly::new(vec![rational(rng, -6..=6, 2), rat(rng.gen_range(-2..=3))]),
        };
        let inst = MthmInstance::new(f, u, v);
        if admissible(&inst) {
            return inst;
        }
    }
}

/// Standard `f` with all zeros in `[-1,0]`: `x^m0 (x+1)^m1` times up to
/// three interior zeros.
fn unit_interval_poly(rng: &mut InstanceRng) -> UniPoly {
    let m0 = rng.gen_range(0..=2);
    let m1 = rng.gen_range(0..=2);
    let k = rng.gen_range(0..=3);
    let inner = zeros(rng, k, 2, |g| {
        let den = g.gen_range(2..=6);
        ratio(-g.gen_range(1..den), den)
    });
    &(&UniPoly::x().pow(m0) * &UniPoly::from_ints(&[1, 1]).pow(m1)) * &product(&inner)
}

fn pick(rng: &mut InstanceRng, choices: &[Rational]) -> Rational {
    choices.choose(rng).expect("nonempty").clone()
}

/// `(f, a, b)` for the `x(x+1)` corollary with `b + m0 >= 0` and
/// `a + m1 >= b`; equality cases are drawn often.
pub fn random_corollary_instance(rng: &mut InstanceRng) -> (UniPoly, Rational, Rational) {
    loop {
        let f = unit_interval_poly(rng);
        let m0 = f.multiplicity_at(&rat(0)) as i64;
        let m1 = f.multiplicity_at(&rat(-1)) as i64;
        let slack = [rat(0), rat(0), ratio(1, 2), rat(1), rat(2), ratio(7, 3)];
        let b = rat(-m0) + pick(rng, &slack);
        let a = &b - rat(m1) + pick(rng, &slack);
        let big_f = &(&UniPoly::new(vec![b.clone(), a.clone()]) * &f)
            + &(&UniPoly::from_ints(&[0, 1, 1]) * &f.derivative());
        if !big_f.is_zero() && big_f.is_standard() {
            return (f, a, b);
        }
    }
}

/// `(p, xi)` with `T(p)` having only nonpositive zeros; `xi` is drawn around
/// the multiplicity `m` of 0 so that all three regimes of the proposition
/// occur.
pub fn random_t_prop_instance(rng: &mut InstanceRng) -> (UniPoly, Rational) {
    let m = rng.gen_range(0..=2);
    let k = rng.gen_range(0..=3);
    let neg = zeros(rng, k, 2, |g| -rational(g, 1..=12, 3));
    let scale = pick(rng, &[rat(1), rat(2), ratio(1, 2), rat(-1), ratio(-3, 2)]);
    let f = (&UniPoly::x().pow(m) * &product(&neg)).scale(&scale);
    let mi = rat(m as i64);
    let xi = match rng.gen_range(0..4) {
        0 => mi,
        1 => mi + pick(rng, &[rat(-1), ratio(-1, 2), ratio(1, 2), rat(1)]),
        _ => rational(rng, -8..=8, 2),
    };
    (t_inverse(&f), xi)
}

/// `(p, alpha)` with `E(p)` having all zeros in `[-1,0]` and `alpha` in
/// `[-1,0]`, endpoints included often.
pub fn random_e_prop_instance(rng: &mut InstanceRng) -> (UniPoly, Rational) {
    let scale = pick(rng, &[rat(1), rat(3), ratio(1, 2), rat(-1)]);
    let f = unit_interval_poly(rng).scale(&scale);
    let alpha = match rng.gen_range(0..4) {
        0 => rat(0),
        1 => rat(-1),
        _ => {
            let den = rng.gen_range(2..=7);
            ratio(-rng.gen_range(1..den), den)
        }
    };
    (e_inverse(&f), alpha)
}

/// Arbitrary `(p, c)` with `deg p <= 12` for the operator identities.
pub fn random_identity_instance(rng: &mut InstanceRng) -> (UniPoly, Rational) {
    let d = rng.gen_range(0..=12);
    let p = UniPoly::new((0..=d).map(|_| rational(rng, -9..=9, 4)).collect());
    (p, rational(rng, -6..=6, 3))
}
