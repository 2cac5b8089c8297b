//! One-parameter unfoldings `F = (f_t, t)` of corank-1 germs and the
//! equisingularity conditions along the parameter.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::mapgerm::{
    detect_qh_type, gcd_all, geometric_slice, slice_exponents, transverse_slice, CorankOneGerm,
    QhType, SliceCase, SliceData,
};
use crate::milnor::MilnorNumber;
use crate::normalform::minimal_char_exponents;
use crate::poly::{rat, solve_first_component, substitute_truncated, truncate_total, Polynomial, Valuation, Var};

/// Parameter values standing in for a generic `t`.
const GENERIC_T: [i64; 2] = [1, 2];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unfolding {
    base: CorankOneGerm,
    deltas: [Polynomial; 3],
}

impl Unfolding {
    /// `f_t = (x + δ1, p + δ2, q + δ3)`; each `δ_i` is a polynomial in
    /// `x, y, t` vanishing at `t = 0` and at `x = y = 0`.
    pub fn new(base: CorankOneGerm, deltas: [Polynomial; 3]) -> Result<Self> {
        for d in &deltas {
            if !d.variables().iter().all(|v| matches!(v, Var::X | Var::Y | Var::T)) {
                return Err(Error::InvalidUnfolding(format!("{d} involves variables besides x, y, t")));
            }
            if !d.eval(Var::T, &BigRational::zero()).is_zero() {
                return Err(Error::InvalidUnfolding(format!("{d} does not vanish at t = 0")));
            }
            let at_origin = d.eval(Var::X, &BigRational::zero()).eval(Var::Y, &BigRational::zero());
            if !at_origin.is_zero() {
                return Err(Error::InvalidUnfolding(format!("{d} moves the origin")));
            }
        }
        Ok(Unfolding { base, deltas })
    }

    pub fn trivial(base: CorankOneGerm) -> Self {
        Unfolding { base, deltas: [Polynomial::zero(), Polynomial::zero(), Polynomial::zero()] }
    }

    pub fn base(&self) -> &CorankOneGerm {
        &self.base
    }

    pub fn deltas(&self) -> &[Polynomial; 3] {
        &self.deltas
    }

    pub fn is_trivial(&self) -> bool {
        self.deltas.iter().all(Polynomial::is_zero)
    }

    /// The three coordinates of `f_t` at a fixed parameter value.
    pub fn specialize(&self, t: &BigRational) -> [Polynomial; 3] {
        let base = [Polynomial::var(Var::X), self.base.p().clone(), self.base.q().clone()];
        let mut out = base.clone();
        for (o, d) in out.iter_mut().zip(&self.deltas) {
            *o = &*o + &d.eval(Var::T, t);
        }
        out
    }

    fn max_degree(&self) -> u32 {
        let comps = self.specialize(&rat(1));
        comps.iter().filter_map(Polynomial::total_degree).max().unwrap_or(1)
    }
}

/// A parametrized space curve `u -> (c_1(u), c_2(u), c_3(u))` through 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceBranchParam {
    coords: [Polynomial; 3],
    var: Var,
}

impl SpaceBranchParam {
    pub fn new(coords: [Polynomial; 3], var: Var) -> Result<Self> {
        for c in &coords {
            if c.variables().iter().any(|&v| v != var) {
                return Err(Error::InvalidBranch(format!("{c} is not a series in {var}")));
            }
            if !c.constant_term().is_zero() {
                return Err(Error::InvalidBranch(format!("{c} does not pass through 0")));
            }
        }
        if coords.iter().all(Polynomial::is_zero) {
            return Err(Error::InvalidBranch("all coordinates vanish".into()));
        }
        Ok(SpaceBranchParam { coords, var })
    }

    pub fn coords(&self) -> &[Polynomial; 3] {
        &self.coords
    }

    fn exponents(&self) -> impl Iterator<Item = u64> + '_ {
        self.coords
            .iter()
            .flat_map(move |c| c.terms().map(move |(m, _)| m.exp(self.var) as u64))
    }
}

/// Least order of the coordinates divided by the gcd of all exponents, so
/// that a multiple cover counts its image once.
///
/// ```
/// use germs::poly::{Polynomial, Var};
/// use germs::unfolding::{image_multiplicity, SpaceBranchParam};
/// let y = Polynomial::var(Var::Y);
/// let c = SpaceBranchParam::new([Polynomial::zero(), y.pow(16), y.pow(18)], Var::Y).unwrap();
/// assert_eq!(image_multiplicity(&c), 8);
/// ```
pub fn image_multiplicity(c: &SpaceBranchParam) -> u64 {
    let g = gcd_all(c.exponents());
    c.exponents().min().expect("some coordinate is nonzero") / g
}

/// Weighted degrees of the three coordinates of the base.
fn coordinate_degrees(t: &QhType) -> [u64; 3] {
    if t.swapped {
        [t.d1, t.d3, t.d2]
    } else {
        [t.d1, t.d2, t.d3]
    }
}

/// Every added monomial is at least as heavy as the coordinate it perturbs;
/// `t` has weight 0.
pub fn is_non_negative_degree(f: &Unfolding, t: &QhType) -> bool {
    let w = t.weights();
    f.deltas.iter().zip(coordinate_degrees(t)).all(|(d, deg)| {
        d.terms().all(|(m, _)| m.weighted_degree(&w) >= deg)
    })
}

/// A boolean together with the result it rests on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cited {
    pub value: bool,
    pub citation: &'static str,
}

pub const CITE_DAMON: &str = "non-negative degree <=> topologically trivial (quasihomogeneous corank 1)";
pub const CITE_MINIMAL_SLICE: &str = "minimal transverse slice => Whitney equisingular";
pub const CITE_TWO_INVARIANTS: &str = "Whitney equisingular <=> mu(D(f_t)) and mu(slice_t) constant";
pub const CITE_TRIVIAL: &str = "constant family";
pub const CITE_VACUOUS: &str = "Whitney equisingular => topologically trivial";

/// For quasihomogeneous bases this is the non-negative degree condition.
pub fn is_topologically_trivial(f: &Unfolding) -> Result<Cited> {
    let t = detect_qh_type(&f.base).ok_or(Error::NotQuasihomogeneous)?;
    Ok(Cited { value: is_non_negative_degree(f, &t), citation: CITE_DAMON })
}

/// `min(ord_y f_2(ξ, y), ord_y f_3(ξ, y))` where `x = ξ(y)` solves `f_1 = 0`.
pub fn multiplicity_at(f: &Unfolding, t: &BigRational) -> Result<u64> {
    let c = f.specialize(t);
    let mut n = 4 * f.max_degree();
    for _ in 0..2 {
        let xi = solve_first_component(&c[0], n)?;
        let order = |p: &Polynomial| {
            truncate_total(&substitute_truncated(p, Var::X, &xi, n), n)
                .univariate_order(Var::Y)
        };
        if let Valuation::Finite(k) = order(&c[1]).min(order(&c[2])) {
            return Ok(k as u64);
        }
        n *= 2;
    }
    Err(Error::TruncationTooSmall(n / 2))
}

/// Multiplicity at `t = 0` equals the multiplicity at the generic values.
pub fn is_equimultiple(f: &Unfolding) -> Result<bool> {
    let m0 = multiplicity_at(f, &rat(0))?;
    for t in GENERIC_T {
        if multiplicity_at(f, &rat(t))? != m0 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WhitneyVerdict {
    Equisingular,
    NotEquisingular,
    Unknown,
    /// The family is not topologically trivial, so it cannot be Whitney
    /// equisingular and the question does not arise.
    NotApplicable,
}

/// Slice data behind a Whitney verdict.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Witness {
    pub slice_0: Option<SliceData>,
    pub slice_t: Option<SliceData>,
    /// `µ(γ_0) - 2·(m(f(V(x))) - m(f_t(V(x))))` when the image of the line
    /// `x = 0` changes multiplicity.
    pub predicted_mu_t: Option<MilnorNumber>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnfoldingVerdict {
    pub non_negative_degree: bool,
    pub topologically_trivial: Cited,
    pub equimultiple: bool,
    pub whitney: WhitneyVerdict,
    pub whitney_citation: &'static str,
    pub witness: Witness,
}

/// Image of the line `x = 0` under `f_t`.
fn line_image(f: &Unfolding, t: &BigRational) -> Result<SpaceBranchParam> {
    let c = f.specialize(t).map(|p| p.eval(Var::X, &BigRational::zero()));
    SpaceBranchParam::new(c, Var::Y)
}

/// `µ(γ_0) - 2·Δ` for the drop `Δ` in line-image multiplicity, or `None`
/// if there is no drop.
fn predicted_mu(f: &Unfolding, mu0: MilnorNumber) -> Result<Option<MilnorNumber>> {
    let m0 = image_multiplicity(&line_image(f, &rat(0))?);
    let mut drop = None;
    for t in GENERIC_T {
        let mt = image_multiplicity(&line_image(f, &rat(t))?);
        if drop.is_some_and(|d| d != m0.saturating_sub(mt)) {
            return Ok(None);
        }
        drop = Some(m0.saturating_sub(mt));
    }
    Ok(drop.filter(|&d| d > 0).and_then(|d| mu0.checked_sub(2 * d)))
}

fn base_slice(f: &CorankOneGerm, t: &QhType) -> Result<SliceData> {
    match slice_exponents(f, t) {
        Err(Error::UnhandledCase(_)) => transverse_slice(f),
        other => other,
    }
}

/// Slice at the generic parameter values, if they agree.
fn generic_slice(f: &Unfolding) -> Result<Option<SliceData>> {
    let mut out: Option<SliceData> = None;
    for t in GENERIC_T {
        let c = f.specialize(&rat(t));
        let e = geometric_slice([&c[0], &c[1], &c[2]])?;
        let s = SliceData { mu: crate::milnor::milnor_from_exponents(&e), exponents: e, case: SliceCase::Geometric };
        if out.as_ref().is_some_and(|o| *o != s) {
            return Ok(None);
        }
        out = Some(s);
    }
    Ok(out)
}

/// Degree condition, equimultiplicity and a Whitney verdict.
///
/// A minimal base slice settles equisingularity outright. Otherwise the
/// slice of `f_t` is computed at generic `t`; since a topologically trivial
/// family keeps `µ(D(f_t))` constant, the verdict follows from whether
/// `µ(γ_t)` moves.
pub fn whitney_verdict(f: &Unfolding) -> Result<UnfoldingVerdict> {
    let t = detect_qh_type(&f.base).ok_or(Error::NotQuasihomogeneous)?;
    let nnd = is_non_negative_degree(f, &t);
    let topo = Cited { value: nnd, citation: CITE_DAMON };
    let equimultiple = is_equimultiple(f)?;
    let mut out = UnfoldingVerdict {
        non_negative_degree: nnd,
        topologically_trivial: topo,
        equimultiple,
        whitney: WhitneyVerdict::Unknown,
        whitney_citation: CITE_TWO_INVARIANTS,
        witness: Witness::default(),
    };
    if f.is_trivial() {
        out.whitney = WhitneyVerdict::Equisingular;
        out.whitney_citation = CITE_TRIVIAL;
        return Ok(out);
    }
    if !topo.value {
        out.whitney = WhitneyVerdict::NotApplicable;
        out.whitney_citation = CITE_VACUOUS;
        return Ok(out);
    }
    let s0 = base_slice(&f.base, &t)?;
    let e = &s0.exponents;
    let minimal = minimal_char_exponents(e.m(), e.k())? == *e;
    out.witness.predicted_mu_t = predicted_mu(f, s0.mu)?;
    out.witness.slice_0 = Some(s0.clone());
    if minimal {
        out.whitney = WhitneyVerdict::Equisingular;
        out.whitney_citation = CITE_MINIMAL_SLICE;
        return Ok(out);
    }
    if let Some(st) = generic_slice(f)? {
        out.whitney = if st.mu == s0.mu {
            WhitneyVerdict::Equisingular
        } else {
            WhitneyVerdict::NotEquisingular
        };
        out.witness.slice_t = Some(st);
    }
    Ok(out)
}

/// The family `(x + t·y^{m-2}, p, q)` with `m = d2 / w2`, together with its
/// predicted `(µ(γ_0), µ(γ_t))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub unfolding: Unfolding,
    pub mu_0: MilnorNumber,
    pub predicted_mu_t: MilnorNumber,
}

/// Requires a non-minimal slice with three exponents and `w1 < d2 - 1`.
pub fn counterexample_unfolding(f: &CorankOneGerm, t: &QhType) -> Result<Counterexample> {
    let s = slice_exponents(f, t)?;
    let e = &s.exponents;
    if e.k() != 3 {
        return Err(Error::HypothesisFailed(format!("slice {e} has {} exponents, not 3", e.k())));
    }
    if minimal_char_exponents(e.m(), e.k())? == *e {
        return Err(Error::HypothesisFailed(format!("slice {e} is minimal")));
    }
    if t.w1 + 1 >= t.d2 {
        return Err(Error::HypothesisFailed(format!("w1 = {} is not below d2 - 1 = {}", t.w1, t.d2 - 1)));
    }
    let m = (t.d2 / t.w2) as u32;
    let delta1 = Polynomial::var(Var::T) * Polynomial::var(Var::Y).pow(m - 2);
    let unfolding = Unfolding::new(f.clone(), [delta1, Polynomial::zero(), Polynomial::zero()])?;
    if !is_non_negative_degree(&unfolding, t) {
        return Err(Error::HypothesisFailed(format!("t*y^{} has negative degree", m - 2)));
    }
    let predicted_mu_t = predicted_mu(&unfolding, s.mu)?
        .ok_or_else(|| Error::HypothesisFailed("the image of x = 0 keeps its multiplicity".into()))?;
    Ok(Counterexample { unfolding, mu_0: s.mu, predicted_mu_t })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::testing::*;

    fn germ(p: Polynomial, q: Polynomial) -> CorankOneGerm {
        CorankOneGerm::new(p, q).unwrap()
    }

    fn drop_germ(row: usize) -> CorankOneGerm {
        let (a, b, c, d) = [(15, 18, 17, 17), (13, 22, 19, 7), (11, 26, 21, 5), (9, 22, 15, 3)][row];
        germ(&y().pow(16) + &xy(1, a), &(&y().pow(b) + &xy(1, c)) + &xy(d, 1))
    }

    fn sextic() -> CorankOneGerm {
        germ(y().pow(4), &(&xy(1, 5) + &xy(5, 1)) + &y().pow(6))
    }

    fn unfold(base: CorankOneGerm, d: [Polynomial; 3]) -> Unfolding {
        Unfolding::new(base, d).unwrap()
    }

    fn zero() -> Polynomial {
        Polynomial::zero()
    }

    #[test]
    fn validation() {
        let base = sextic();
        assert!(Unfolding::new(base.clone(), [y(), zero(), zero()]).is_err());
        assert!(Unfolding::new(base.clone(), [t(), zero(), zero()]).is_err());
        assert!(Unfolding::new(base, [&t() * &z(), zero(), zero()]).is_err());
    }

    #[test]
    fn degree_condition() {
        let f = unfold(sextic(), [zero(), zero(), &t() * &y().pow(7)]);
        let ty = detect_qh_type(f.base()).unwrap();
        assert!(is_non_negative_degree(&f, &ty));
        assert!(is_topologically_trivial(&f).unwrap().value);
        let f = unfold(drop_germ(0), [&t() * &y().pow(14), zero(), zero()]);
        assert!(is_non_negative_degree(&f, &detect_qh_type(f.base()).unwrap()));
        let f = unfold(germ(y().pow(2), &x() * &y()), [zero(), &t() * &y(), zero()]);
        assert!(!is_topologically_trivial(&f).unwrap().value);
        let nq = unfold(germ(&y().pow(2) + &x().pow(3), &(&x() * &y()) + &y().pow(3)), [zero(), zero(), zero()]);
        assert_eq!(is_topologically_trivial(&nq), Err(Error::NotQuasihomogeneous));
    }

    #[test]
    fn equimultiplicity() {
        let f = unfold(drop_germ(0), [&t() * &y().pow(14), zero(), zero()]);
        assert!(is_equimultiple(&f).unwrap());
        assert_eq!(multiplicity_at(&f, &rat(1)).unwrap(), 16);
        assert!(is_equimultiple(&Unfolding::trivial(sextic())).unwrap());
        let f = unfold(germ(y().pow(2), &x() * &y()), [zero(), &t() * &y(), zero()]);
        assert!(!is_equimultiple(&f).unwrap());
    }

    #[test]
    fn image_multiplicities() {
        let b = |c: [Polynomial; 3]| image_multiplicity(&SpaceBranchParam::new(c, Var::Y).unwrap());
        assert_eq!(b([zero(), y().pow(16), y().pow(18)]), 8);
        assert_eq!(b([c(3) * y().pow(14), y().pow(16), y().pow(18)]), 7);
        assert_eq!(b([y().pow(2), y().pow(2), y().pow(3)]), 2);
        assert!(SpaceBranchParam::new([zero(), zero(), zero()], Var::Y).is_err());
    }

    #[test]
    fn slice_drop_verdicts() {
        for (row, (mu0, mut_)) in [(270, 268), (328, 326), (386, 384), (324, 322)].into_iter().enumerate() {
            let f = drop_germ(row);
            let ty = detect_qh_type(&f).unwrap();
            let cx = counterexample_unfolding(&f, &ty).unwrap();
            assert_eq!((cx.mu_0, cx.predicted_mu_t), (mu0, mut_));
            assert_eq!(cx.unfolding.deltas()[0], &t() * &y().pow(14));
            let v = whitney_verdict(&cx.unfolding).unwrap();
            assert!(v.non_negative_degree && v.equimultiple);
            assert_eq!(v.whitney, WhitneyVerdict::NotEquisingular);
            assert_eq!(v.witness.slice_t.unwrap().mu, mut_);
            assert_eq!(v.witness.predicted_mu_t, Some(mut_));
        }
    }

    #[test]
    fn equisingular_families() {
        let g = germ(&y().pow(6) + &(&x() * &y()), &y().pow(8) + &(c(2) * x() * y().pow(3)));
        let v = whitney_verdict(&unfold(g.clone(), [zero(), zero(), &t() * &y().pow(9)])).unwrap();
        assert_eq!((v.whitney, v.whitney_citation), (WhitneyVerdict::Equisingular, CITE_MINIMAL_SLICE));
        let v = whitney_verdict(&Unfolding::trivial(drop_germ(2))).unwrap();
        assert_eq!(v.whitney, WhitneyVerdict::Equisingular);
        let ty = detect_qh_type(&g).unwrap();
        assert!(matches!(counterexample_unfolding(&g, &ty), Err(Error::HypothesisFailed(_))));
    }

    #[test]
    fn sextic_family_is_not_equisingular() {
        let f = unfold(sextic(), [zero(), zero(), &t() * &y().pow(7)]);
        let v = whitney_verdict(&f).unwrap();
        assert!(v.topologically_trivial.value);
        assert_eq!(v.witness.slice_0.unwrap().exponents.e, vec![4, 6, 9]);
        assert_eq!(v.witness.slice_t.unwrap().exponents.e, vec![4, 6, 7]);
        assert_eq!(v.whitney, WhitneyVerdict::NotEquisingular);
    }

    #[test]
    fn negative_degree_is_not_applicable() {
        let f = unfold(germ(y().pow(2), &x() * &y()), [zero(), &t() * &y(), zero()]);
        assert_eq!(whitney_verdict(&f).unwrap().whitney, WhitneyVerdict::NotApplicable);
    }
}
