use proptest::prelude::*;

use rzcert::basisops::{
    e_inverse, e_transform, falling_factorial, from_basis, t_inverse, t_transform, to_basis, verify_e_identity,
    verify_t_identity, BasisKind,
};
use rzcert::interlace::{derivative_interlaces, separates};
use rzcert::realroots::{analyze, is_rz, sturm_count, Bound, IntervalSpec};
use rzcert::{rat, ratio, BiPoly, Rational, Scalar, UniPoly};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| *r != rat(0))
}

fn poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(rational(), 0..=max_deg + 1).prop_map(UniPoly::new)
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

/// Roots with multiplicities; the product of `(x - r)^m` is real-rooted.
fn root_multiset(max_roots: usize) -> impl Strategy<Value = Vec<(Rational, usize)>> {
    prop::collection::vec((rational(), 1usize..=3), 1..=max_roots)
}

fn product(roots: &[(Rational, usize)]) -> UniPoly {
    roots
        .iter()
        .fold(UniPoly::one(), |acc, (r, m)| &acc * &UniPoly::linear_root(r).pow(*m))
}

fn distinct(roots: &[(Rational, usize)]) -> Vec<Rational> {
    let mut rs: Vec<Rational> = roots.iter().map(|r| r.0.clone()).collect();
    rs.sort();
    rs.dedup();
    rs
}

fn bipoly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(poly(3), 0..=4).prop_map(BiPoly::new)
}

proptest! {
    #[test]
    fn mul_then_divide_round_trips(a in poly(8), b in nonzero_poly(6)) {
        let prod = &a * &b;
        prop_assert_eq!(prod.divide_exact(&b).unwrap(), a.clone());
        let (q, r) = (&prod + &UniPoly::one()).div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, &prod + &UniPoly::one());
    }

    #[test]
    fn squarefree_decomposition_reconstructs(roots in root_multiset(5), c in nonzero_rational()) {
        let p = product(&roots).scale(&c);
        let rebuilt = p
            .squarefree_decomposition()
            .iter()
            .fold(UniPoly::one(), |acc, (f, k)| &acc * &f.pow(*k));
        prop_assert_eq!(rebuilt.monic(), p.monic());
        prop_assert!(p.squarefree_part().is_squarefree());
        prop_assert_eq!(p.squarefree_part().degree().finite(), Some(distinct(&roots).len()));
    }

    #[test]
    fn derivative_lowers_multiplicity_by_one(roots in root_multiset(5)) {
        let p = product(&roots);
        let dp = p.derivative();
        for r in distinct(&roots) {
            let m: usize = roots.iter().filter(|x| x.0 == r).map(|x| x.1).sum();
            prop_assert_eq!(p.multiplicity_at(&r), m);
            prop_assert_eq!(dp.multiplicity_at(&r), m - 1);
        }
    }

    #[test]
    fn specialize_is_a_ring_homomorphism(a in bipoly(), b in bipoly(), q in rational()) {
        prop_assert_eq!((&a * &b).specialize(&q), &a.specialize(&q) * &b.specialize(&q));
        prop_assert_eq!((&a + &b).specialize(&q), &a.specialize(&q) + &b.specialize(&q));
        prop_assert_eq!(a.derivative_x().specialize(&q), a.specialize(&q).derivative());
    }

    #[test]
    fn binomial_substitute_matches_pointwise(p in poly(6), extra in 0usize..3, x in rational()) {
        prop_assume!(x != rat(-1));
        let n = p.degree().finite().unwrap_or(0) + extra;
        let s = p.binomial_substitute(n).unwrap();
        let one_plus = rat(1) + &x;
        let expect = num_traits::pow(one_plus.clone(), n) * p.evaluate(&(x.clone() / &one_plus));
        prop_assert_eq!(s.evaluate(&x), expect);
    }

    #[test]
    fn sign_at_matches_field_evaluation(p in poly(10), x in rational()) {
        let v = p.evaluate(&x);
        let want = if v > rat(0) { 1 } else if v < rat(0) { -1 } else { 0 };
        prop_assert_eq!(p.sign_at(&x), want);
        prop_assert_eq!(<Rational as Scalar>::poly_sign(p.coeffs(), &x), want);
    }

    #[test]
    fn analyze_finds_every_rational_root(roots in root_multiset(6), c in nonzero_rational()) {
        let p = product(&roots);
        let a = analyze(&p).unwrap();
        let b = analyze(&p.scale(&c)).unwrap();
        prop_assert!(a.is_real_rooted());
        prop_assert_eq!(&a, &b);
        prop_assert!(a.irrational_root_intervals.is_empty());
        prop_assert_eq!(a.real_count_with_multiplicity(), p.degree().finite().unwrap());
        let mut found: Vec<Rational> = a.rational_roots.iter().map(|r| r.0.clone()).collect();
        found.sort();
        prop_assert_eq!(found, distinct(&roots));
    }

    #[test]
    fn irreducible_quadratic_factor_is_not_real_rooted(roots in root_multiset(4), s in 1i64..5) {
        let p = &product(&roots) * &UniPoly::from_ints(&[s, 0, 1]);
        let a = analyze(&p).unwrap();
        prop_assert_eq!(a.nonreal_count, 2);
        prop_assert!(!is_rz(&p, &IntervalSpec::closed(rat(-100), rat(100))).unwrap().holds);
    }

    #[test]
    fn is_rz_tracks_root_positions(roots in root_multiset(6)) {
        let p = product(&roots);
        let max = roots.iter().map(|r| r.0.clone()).max().unwrap();
        let min = roots.iter().map(|r| r.0.clone()).min().unwrap();
        prop_assert!(is_rz(&p, &IntervalSpec::at_most(max.clone())).unwrap().holds);
        prop_assert!(is_rz(&p, &IntervalSpec::at_least(min.clone())).unwrap().holds);
        prop_assert!(is_rz(&p, &IntervalSpec::closed(min.clone(), max.clone())).unwrap().holds);
        let below = max.clone() - ratio(1, 7);
        prop_assert!(!is_rz(&p, &IntervalSpec::at_most(below)).unwrap().holds);
    }

    #[test]
    fn sturm_count_agrees_with_known_roots(roots in root_multiset(6), lo in rational(), w in 0i64..10) {
        let p = product(&roots).squarefree_part();
        let hi = lo.clone() + rat(w);
        let rs = distinct(&roots);
        let inside = rs.iter().filter(|r| **r > lo && **r <= hi).count();
        prop_assert_eq!(sturm_count(&p, &Bound::Finite(lo), &Bound::Finite(hi)).unwrap(), inside);
        prop_assert_eq!(sturm_count(&p, &Bound::NegInf, &Bound::PosInf).unwrap(), rs.len());
    }

    #[test]
    fn derivative_of_real_rooted_interlaces(roots in root_multiset(6)) {
        let p = product(&roots);
        prop_assume!(p.degree().finite().unwrap() >= 1);
        let v = derivative_interlaces(&p).unwrap();
        prop_assert!(v.holds, "{:?}", v.failure_reason);
        let direct = separates(&p.derivative(), &p).unwrap();
        prop_assert_eq!(direct.holds, v.holds);
    }

    #[test]
    fn separation_survives_positive_scaling(roots in root_multiset(5), k in 0i64..4, c in 1i64..9, d in 1i64..9) {
        let f = product(&roots);
        let top = roots.iter().map(|r| r.0.clone()).max().unwrap() + rat(k);
        let big_f = &UniPoly::linear_root(&top) * &f;
        prop_assert!(separates(&f, &big_f).unwrap().holds);
        prop_assert!(separates(&f.scale(&rat(c)), &big_f.scale(&rat(d))).unwrap().holds);
        // two zeros of F above every zero of f break the chain
        let low = roots.iter().map(|r| r.0.clone()).min().unwrap();
        let high = &UniPoly::linear_root(&(top.clone() + rat(1))) * &UniPoly::linear_root(&(top + rat(2)));
        let bad = &f.divide_exact(&UniPoly::linear_root(&low)).unwrap() * &high;
        prop_assert!(!separates(&f, &bad).unwrap().holds);
    }

    #[test]
    fn t_and_e_identities_hold(p in poly(8), xi in rational()) {
        prop_assert!(verify_t_identity(&p, &xi).holds);
        prop_assert!(verify_e_identity(&p, &xi).holds);
        prop_assert_eq!(t_inverse(&t_transform(&p)), p.clone());
        prop_assert_eq!(e_inverse(&e_transform(&p)), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn basis_changes_round_trip(p in poly(20)) {
        for kind in [BasisKind::StandardPower, BasisKind::FallingFactorial, BasisKind::BinomialChoose] {
            let c = to_basis(&p, kind);
            prop_assert_eq!(from_basis(&c, kind), p.clone(), "{:?}", kind);
        }
        let ff = to_basis(&p, BasisKind::FallingFactorial);
        let expanded = ff
            .iter()
            .enumerate()
            .fold(UniPoly::zero(), |acc, (i, a)| &acc + &falling_factorial::<Rational>(i).scale(a));
        prop_assert_eq!(expanded, p);
    }
}
