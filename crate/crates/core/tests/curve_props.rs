use germs::arith::{factorize, is_prime, minimal_divisor_chain, sigma};
use germs::milnor::{
    implicitize, implicitize_germ, intersection_multiplicity, milnor_from_exponents,
    milnor_implicit_oracle, milnor_minimal_closed_form, milnor_multibranch, milnor_of_branch,
};
use germs::normalform::{
    deform_to_minimal, is_minimal_branch, is_minimal_germ, max_k, minimal_char_exponents,
    minimal_normal_form, minimal_normal_form_germ, MinimalitySpec,
};
use germs::puiseux::{characteristic_exponents, count_exponents, PlaneCurveGerm, PuiseuxBranch};
use num_rational::BigRational;
use proptest::prelude::*;

/// Longest chain `m = d_0 > d_1 > ... > 1` by depth-first search.
fn longest_chain(m: u64, memo: &mut Vec<usize>) -> usize {
    if m == 1 {
        return 1;
    }
    if memo[m as usize] > 0 {
        return memo[m as usize];
    }
    let best = (1..m).filter(|d| m.is_multiple_of(*d)).map(|d| longest_chain(d, memo)).max().unwrap() + 1;
    memo[m as usize] = best;
    best
}

/// A primitive branch of multiplicity `m` with terms at the given exponents.
fn branch(m: u64, terms: &[(u64, i64)]) -> Option<PuiseuxBranch> {
    PuiseuxBranch::from_ints(m, terms).ok()
}

fn branch_strategy(max_m: u64, max_e: u64) -> impl Strategy<Value = PuiseuxBranch> {
    (2..=max_m)
        .prop_flat_map(move |m| {
            let term = (m..=max_e, prop_oneof![-3i64..=-1, 1i64..=3]);
            (Just(m), prop::collection::vec(term, 1..=4))
        })
        .prop_filter_map("not primitive", |(m, ts)| branch(m, &ts))
}

#[test]
fn sigma_is_the_longest_chain() {
    let n = 10_000;
    let mut memo = vec![0; n + 1];
    for m in 1..=n as u64 {
        // the chain length counts d_0 = m, sigma counts the drops
        let drops = longest_chain(m, &mut memo) - 1;
        assert_eq!(sigma(m), drops.max(1), "m = {m}");
    }
}

#[test]
fn minimal_chains_are_valid_with_prime_quotients() {
    for m in 2..=200u64 {
        if is_prime(m) {
            continue;
        }
        for k in 2..=sigma(m) + 1 {
            let c = minimal_divisor_chain(m, k).unwrap();
            assert!(c.is_valid(), "m={m} k={k}");
            assert!(c.divisors.windows(2).skip(1).all(|w| is_prime(w[0] / w[1])), "m={m} k={k}");
        }
    }
}

#[test]
fn minimal_forms_are_minimal() {
    for m in 2..=60u64 {
        for k in 2..=max_k(m) {
            let b = minimal_normal_form(m, k).unwrap();
            assert!(is_minimal_branch(&b).unwrap());
            assert_eq!(milnor_of_branch(&b).unwrap(), milnor_minimal_closed_form(m, k).unwrap());
            assert_eq!(
                milnor_from_exponents(&minimal_char_exponents(m, k).unwrap()),
                milnor_minimal_closed_form(m, k).unwrap()
            );
        }
    }
}

#[test]
fn minimal_values_increase_with_k() {
    for m in (4..=60u64).filter(|&m| !is_prime(m)) {
        for k in 2..=sigma(m) {
            for k2 in k + 1..=sigma(m) + 1 {
                let (a, b) = (milnor_minimal_closed_form(m, k).unwrap(), milnor_minimal_closed_form(m, k2).unwrap());
                assert!(a < b, "m={m}: µ({k}) = {a} !< µ({k2}) = {b}");
            }
        }
    }
}

#[test]
fn germ_normal_forms_are_transversal() {
    let spec = MinimalitySpec::new(vec![2, 4, 6], vec![2, 3, 3]).unwrap();
    let g = minimal_normal_form_germ(&spec).unwrap();
    let bs = g.branches();
    for i in 0..bs.len() {
        for j in i + 1..bs.len() {
            assert_eq!(intersection_multiplicity(&bs[i], &bs[j]).unwrap(), bs[i].m() * bs[j].m());
        }
    }
    assert!(is_minimal_germ(&g).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sigma_is_additive(m in 2u64..5000, n in 2u64..5000) {
        prop_assert_eq!(sigma(m * n), sigma(m) + sigma(n));
        prop_assert_eq!(factorize(m).value(), m);
    }

    #[test]
    fn gcd_sequences_drop_to_one(b in branch_strategy(60, 120)) {
        let e = characteristic_exponents(&b).unwrap();
        prop_assert!(e.b.windows(2).all(|w| w[1] < w[0]));
        prop_assert_eq!(*e.b.last().unwrap(), 1);
        prop_assert!(count_exponents(&b).unwrap() <= sigma(b.m()) + 1);
    }

    #[test]
    fn exponents_survive_rescaling(b in branch_strategy(12, 40), num in 1i64..=5, den in 1i64..=5) {
        let c = BigRational::new(num.into(), den.into());
        let r = b.rescaled(&c).unwrap();
        prop_assert_eq!(characteristic_exponents(&r).unwrap(), characteristic_exponents(&b).unwrap());
    }

    #[test]
    fn formula_matches_oracle(b in branch_strategy(6, 14)) {
        let mu = milnor_of_branch(&b).unwrap();
        prop_assert_eq!(milnor_implicit_oracle(&implicitize(&b)).unwrap(), mu);
    }

    #[test]
    fn intersections_are_symmetric_and_bounded(a in branch_strategy(4, 10), b in branch_strategy(4, 10)) {
        let Ok(ab) = intersection_multiplicity(&a, &b) else { return Ok(()) };
        let ba = intersection_multiplicity(&b, &a).unwrap();
        prop_assert_eq!(ab, ba);
        prop_assert!(ab >= a.m() * b.m());
        let transversal = a.tangent_direction() != b.tangent_direction();
        prop_assert_eq!(ab == a.m() * b.m(), transversal);
    }

    #[test]
    fn multibranch_formula_matches_oracle(a in branch_strategy(3, 7), b in branch_strategy(3, 7)) {
        let Ok(g) = PlaneCurveGerm::new(vec![a.clone(), b.clone().swapped()]) else { return Ok(()) };
        let Ok(mu) = milnor_multibranch(&g) else { return Ok(()) };
        prop_assert_eq!(milnor_implicit_oracle(&implicitize_germ(&g)).unwrap(), mu);
    }

    #[test]
    fn deformation_reaches_minimality(b in branch_strategy(12, 40)) {
        let e = characteristic_exponents(&b).unwrap();
        let special = deform_to_minimal(&b).unwrap().specialize(&BigRational::from_integer(1.into())).unwrap();
        let s = &special.branches()[0];
        let se = characteristic_exponents(s).unwrap();
        prop_assert!(is_minimal_branch(s).unwrap());
        prop_assert_eq!((se.m(), se.k()), (e.m(), e.k()));
    }
}
