use germs::mapgerm::{
    detect_qh_type, divided_differences, double_point_curve, slice_exponents, transverse_slice,
    CorankOneGerm, SliceCase,
};
use germs::poly::{exact_divide, rat, Monomial, Polynomial, Var};
use germs::unfolding::{
    image_multiplicity, is_topologically_trivial, multiplicity_at, whitney_verdict,
    SpaceBranchParam, Unfolding, WhitneyVerdict,
};
use proptest::prelude::*;

fn xy(c: i64, a: u32, b: u32) -> Polynomial {
    Polynomial::term(rat(c), Monomial::var(Var::X, a).mul(&Monomial::var(Var::Y, b)))
}

fn drop_germs() -> Vec<CorankOneGerm> {
    [(15, 18, 17, 17), (13, 22, 19, 7), (11, 26, 21, 5), (9, 22, 15, 3)]
        .into_iter()
        .map(|(a, b, c, d)| {
            let p = &xy(1, 0, 16) + &xy(1, 1, a);
            let q = &(&xy(1, 0, b) + &xy(1, 1, c)) + &xy(1, d, 1);
            CorankOneGerm::new(p, q).unwrap()
        })
        .collect()
}

/// A weighted homogeneous polynomial of degree `d` for weights `(w1, w2)`
/// with a pure power of `y` and random lower terms in `x`.
fn qh_poly(d: u64, w1: u64, w2: u64, coeffs: &[i64]) -> Polynomial {
    let mut p = xy(1, 0, (d / w2) as u32);
    let mut i = 0;
    for a in 1..=d / w1 {
        let rest = d - a * w1;
        if rest.is_multiple_of(w2) && a + rest / w2 >= 2 {
            p = &p + &xy(coeffs[i % coeffs.len()], a as u32, (rest / w2) as u32);
            i += 1;
        }
    }
    p
}

fn qh_germ() -> impl Strategy<Value = CorankOneGerm> {
    (1u64..=4, 2u64..=5, 1u64..=4, prop::collection::vec(-2i64..=2, 1..4))
        .prop_filter_map("invalid germ", |(w1, m, extra, coeffs)| {
            let (d2, d3) = (m, m + extra);
            let p = qh_poly(d2, w1, 1, &coeffs);
            let q = qh_poly(d3, w1, 1, &coeffs[1..].iter().chain(&coeffs[..1]).copied().collect::<Vec<_>>());
            CorankOneGerm::new(p, q).ok()
        })
}

/// `c(x, y, y)`.
fn diagonal(c: &Polynomial) -> Polynomial {
    c.substitute(Var::Z, &Polynomial::var(Var::Y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn divided_differences_restrict_to_derivatives(f in qh_germ()) {
        let (phi, psi) = divided_differences(&f);
        prop_assert_eq!(diagonal(&phi), f.p().derivative(Var::Y));
        prop_assert_eq!(diagonal(&psi), f.q().derivative(Var::Y));
        let dy = &Polynomial::var(Var::Y) - &Polynomial::var(Var::Z);
        let pz = f.p().substitute(Var::Y, &Polynomial::var(Var::Z));
        prop_assert_eq!(exact_divide(&(f.p() - &pz), &dy).unwrap(), phi);
    }

    #[test]
    fn double_points_are_weighted_homogeneous(f in qh_germ()) {
        let t = detect_qh_type(&f).unwrap();
        if let Ok(d) = double_point_curve(&f) {
            prop_assert!(d.weighted_homogeneous_degree(&t.weights()).is_some(), "{d}");
        }
    }

    #[test]
    fn formulas_agree_with_plane_sections(f in qh_germ()) {
        let t = detect_qh_type(&f).unwrap();
        prop_assume!(germs::mapgerm::is_finitely_determined(&f).unwrap());
        if let Ok(s) = slice_exponents(&f, &t) {
            prop_assert_eq!(transverse_slice(&f).unwrap().exponents, s.exponents);
        }
    }

    #[test]
    fn image_multiplicity_ignores_reparametrization(a in 1u32..8, b in 1u32..8, j in 1u32..4) {
        let y = Polynomial::var(Var::Y);
        let c = |k: u32| [Polynomial::zero(), y.pow(a * k), y.pow((a + b) * k)];
        let base = image_multiplicity(&SpaceBranchParam::new(c(1), Var::Y).unwrap());
        prop_assert_eq!(image_multiplicity(&SpaceBranchParam::new(c(j), Var::Y).unwrap()), base);
    }

    #[test]
    fn verdicts_are_coherent(f in qh_germ(), e in 1u32..8, slot in 0usize..3) {
        let mut d = [Polynomial::zero(), Polynomial::zero(), Polynomial::zero()];
        d[slot] = &Polynomial::var(Var::T) * &Polynomial::var(Var::Y).pow(e);
        let Ok(u) = Unfolding::new(f.clone(), d) else { return Ok(()) };
        let topo = is_topologically_trivial(&u).unwrap().value;
        if let Ok(v) = whitney_verdict(&u) {
            prop_assert!(topo || v.whitney != WhitneyVerdict::Equisingular);
        }
    }

    #[test]
    fn base_multiplicity_is_slice_multiplicity(f in qh_germ()) {
        let t = detect_qh_type(&f).unwrap();
        let Ok(s) = slice_exponents(&f, &t) else { return Ok(()) };
        prop_assume!(s.case != SliceCase::Geometric);
        let m = multiplicity_at(&Unfolding::trivial(f), &rat(0)).unwrap();
        prop_assert_eq!(m, s.exponents.m());
    }
}

#[test]
fn drop_germ_double_points_contain_the_line() {
    for f in drop_germs() {
        let t = detect_qh_type(&f).unwrap();
        let d = double_point_curve(&f).unwrap();
        assert!(exact_divide(&d, &Polynomial::var(Var::X)).is_ok());
        assert!(d.weighted_homogeneous_degree(&t.weights()).is_some());
        let s = slice_exponents(&f, &t).unwrap();
        assert!((2..=3).contains(&s.exponents.k()));
    }
}

#[test]
fn minimal_even_pair_slices_have_the_expected_weights() {
    let mut fired = 0;
    for m in [4u32, 6, 8, 10, 12] {
        for n in [m + 2, m + 4] {
            for w1 in 1..m {
                let p = &xy(1, 0, m) + &xy(1, 1, m - w1);
                let q = &xy(1, 0, n) + &xy(2, 1, n - w1);
                let f = CorankOneGerm::new(p, q).unwrap();
                let t = detect_qh_type(&f).unwrap();
                if !germs::mapgerm::is_finitely_determined(&f).unwrap() {
                    continue;
                }
                let Ok(s) = slice_exponents(&f, &t) else { continue };
                let e = &s.exponents;
                if s.case == SliceCase::EvenPair
                    && germs::normalform::minimal_char_exponents(e.m(), e.k()).unwrap() == *e
                {
                    fired += 1;
                    assert_eq!(t.w2, 1, "{f}");
                    assert_eq!(t.w1 % 2, 1, "{f}");
                    assert_eq!(t.w1, e.m() - 1, "{f}");
                    assert_ne!(t.w1 % 3, 0, "{f}");
                }
            }
        }
    }
    assert!(fired > 0);
}
