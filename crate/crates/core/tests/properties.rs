//! Property tests for the algebra kernel: exact ring axioms, parser/printer
//! inversion, term-order laws, normal-form membership soundness, and the
//! brute-force staircase oracle for local quotient dimensions.

use proptest::prelude::*;

use germcalc_core::ring::{
    coeff_int, parse_polynomial, print_polynomial, Coeff, Monomial, MonomialOrder, Polynomial,
};
use germcalc_core::sbasis::{
    ideal_sum, local_quotient_dim, mora_normal_form, standard_basis, Ideal, InvariantValue,
};

const NVARS: usize = 3;

fn arb_coeff() -> impl Strategy<Value = Coeff> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| germcalc_core::ring::coeff_ratio(n, d))
}

fn arb_monomial() -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0u32..4, NVARS).prop_map(Monomial::new)
}

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((arb_monomial(), arb_coeff()), 0..4)
        .prop_map(|terms| Polynomial::from_terms(NVARS, terms))
}

// compact inputs for the tests that run full standard-basis completions
fn small_monomial() -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0u32..3, NVARS).prop_map(Monomial::new)
}

fn small_poly() -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((small_monomial(), arb_coeff()), 0..3)
        .prop_map(|terms| Polynomial::from_terms(NVARS, terms))
}

fn arb_order() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::GlobalDegRevLex),
        Just(MonomialOrder::LocalAntiDegRevLex),
        Just(MonomialOrder::Block { global_vars: vec![2] }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn addition_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn multiplication_commutes_and_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn print_parse_roundtrip(p in arb_poly(), order in arb_order()) {
        let names: Vec<String> = vec!["x".into(), "y".into(), "z".into()];
        let printed = print_polynomial(&p, &names, &order);
        let reparsed = parse_polynomial(&printed, &names).unwrap();
        prop_assert_eq!(p, reparsed);
    }

    #[test]
    fn orders_are_total_and_antisymmetric(a in arb_monomial(), b in arb_monomial(), order in arb_order()) {
        use std::cmp::Ordering;
        let ab = order.compare(&a, &b);
        let ba = order.compare(&b, &a);
        prop_assert_eq!(ab, ba.reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
    }

    #[test]
    fn orders_are_transitive_and_multiplicative(
        a in arb_monomial(),
        b in arb_monomial(),
        c in arb_monomial(),
        order in arb_order(),
    ) {
        use std::cmp::Ordering;
        if order.compare(&a, &b) != Ordering::Less && order.compare(&b, &c) != Ordering::Less {
            prop_assert_ne!(order.compare(&a, &c), Ordering::Less);
        }
        prop_assert_eq!(order.compare(&a, &b), order.compare(&a.mul(&c), &b.mul(&c)));
    }

    #[test]
    fn normal_form_vanishes_on_random_combinations(
        gens in proptest::collection::vec(small_poly().prop_filter("nonzero", |p| !p.is_zero()), 1..3),
        coeffs in proptest::collection::vec((small_poly(), 0usize..3), 1..3),
    ) {
        // membership soundness: any polynomial combination of a standard
        // basis reduces to zero
        let ideal = Ideal::local(NVARS, gens.clone());
        let sb = standard_basis(&ideal);
        let mut member = Polynomial::zero(NVARS);
        for (q, pick) in coeffs {
            let g = &gens[pick % gens.len()];
            member = &member + &(&q * g);
        }
        let r = mora_normal_form(&member, sb.gens(), sb.order());
        prop_assert!(r.is_zero(), "nonzero normal form {r:?}");
    }

    #[test]
    fn standard_basis_idempotent_and_dim_stable(
        gens in proptest::collection::vec(small_poly().prop_filter("nonzero", |p| !p.is_zero()), 1..3),
    ) {
        let ideal = Ideal::local(NVARS, gens.clone());
        let sb = standard_basis(&ideal);
        let sb2 = standard_basis(&sb);
        prop_assert_eq!(sb.gens(), sb2.gens());

        let dim = local_quotient_dim(&ideal);
        // permuting generators does not change the quotient dimension
        let mut permuted = gens.clone();
        permuted.reverse();
        prop_assert_eq!(local_quotient_dim(&Ideal::local(NVARS, permuted)), dim);
        // adding a redundant generator (a multiple of the first) neither
        let mut padded = gens.clone();
        let extra = &gens[0] * &Polynomial::var(NVARS, 1);
        padded.push(extra);
        prop_assert_eq!(local_quotient_dim(&Ideal::local(NVARS, padded)), dim);
    }

    #[test]
    fn staircase_count_matches_brute_force(
        exps in proptest::collection::vec(proptest::collection::vec(0u32..5, NVARS), 1..5),
    ) {
        // zero-dimensional monomial ideals: make sure each variable has a
        // pure power by adding x_i^4
        let mut gens: Vec<Polynomial> = exps
            .into_iter()
            .filter(|e| e.iter().any(|&x| x > 0))
            .map(|e| Polynomial::from_term(Monomial::new(e), coeff_int(1)))
            .collect();
        for i in 0..NVARS {
            let mut e = vec![0u32; NVARS];
            e[i] = 4;
            gens.push(Polynomial::from_term(Monomial::new(e), coeff_int(1)));
        }
        let monomials: Vec<Monomial> = gens
            .iter()
            .map(|p| p.terms().next().unwrap().0.clone())
            .collect();
        let ideal = Ideal::local(NVARS, gens);
        let computed = local_quotient_dim(&ideal);

        // brute-force lattice count over the bounding box
        let mut count = 0u64;
        for a in 0..4u32 {
            for b in 0..4u32 {
                for c in 0..4u32 {
                    let m = Monomial::new(vec![a, b, c]);
                    if !monomials.iter().any(|g| g.divides(&m)) {
                        count += 1;
                    }
                }
            }
        }
        prop_assert_eq!(computed, InvariantValue::Finite(count));
    }

    #[test]
    fn quotient_dim_invariant_under_unimodular_change(
        gens in proptest::collection::vec(small_poly().prop_filter("nonzero", |p| !p.is_zero()), 1..3),
        shears in proptest::collection::vec((0usize..NVARS, 0usize..NVARS, -1i64..=1), 1..3),
    ) {
        let ideal = Ideal::local(NVARS, gens.clone());
        let dim = local_quotient_dim(&ideal);
        // build a unimodular matrix as a product of integer shears
        let mut m: Vec<Vec<Coeff>> = (0..NVARS)
            .map(|i| (0..NVARS).map(|j| coeff_int(i64::from(i == j))).collect())
            .collect();
        for (i, j, c) in shears {
            if i == j || c == 0 {
                continue;
            }
            for row in 0..NVARS {
                let add = &m[row][j] * &coeff_int(c);
                m[row][i] = &m[row][i] + &add;
            }
        }
        let moved: Vec<Polynomial> = gens.iter().map(|g| g.substitute_linear(&m)).collect();
        prop_assert_eq!(local_quotient_dim(&Ideal::local(NVARS, moved)), dim);
    }

    #[test]
    fn intersection_with_sum_stays_inside(a in small_poly(), b in small_poly()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assume!(a.constant_term() == coeff_int(0) && b.constant_term() == coeff_int(0));
        let ia = Ideal::local(NVARS, vec![a.clone()]);
        let ib = Ideal::local(NVARS, vec![b.clone()]);
        let meet = germcalc_core::sbasis::ideal_intersect(&ia, &ib);
        // every intersection generator lies in both ideals
        let sa = standard_basis(&ia);
        let sb_ = standard_basis(&ib);
        for g in meet.gens() {
            prop_assert!(mora_normal_form(g, sa.gens(), sa.order()).is_zero());
            prop_assert!(mora_normal_form(g, sb_.gens(), sb_.order()).is_zero());
        }
        // and the product lies in the intersection
        let prod = &a * &b;
        let smeet = standard_basis(&meet);
        prop_assert!(mora_normal_form(&prod, smeet.gens(), smeet.order()).is_zero());
        let _ = ideal_sum(&ia, &ib);
    }
}
