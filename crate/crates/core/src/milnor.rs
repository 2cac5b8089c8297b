//! Milnor numbers and intersection multiplicities of plane curve germs.
//!
//! Closed forms work from characteristic exponents; the implicit oracle works
//! from a defining equation only, through the local intersection number of
//! its two partial derivatives.

use num_traits::Zero;

use crate::arith::{check_k, minimal_divisor_chain};
use crate::error::{Error, Result};
use crate::poly::{resultant, Polynomial, Valuation, Var};
use crate::puiseux::{characteristic_exponents, CharExponents, PlaneCurveGerm, PuiseuxBranch};

pub type MilnorNumber = u64;

/// Shears tried by the oracle before giving up.
pub const MAX_SHEAR: i64 = 8;

/// `Σ (b_{i-1} - b_i)(e_i - 1)`; zero for a smooth branch.
///
/// ```
/// use germs::milnor::milnor_from_exponents;
/// use germs::puiseux::CharExponents;
/// let e = CharExponents::from_exponents(&[8, 10, 11]).unwrap();
/// assert_eq!(milnor_from_exponents(&e), 64);
/// ```
pub fn milnor_from_exponents(e: &CharExponents) -> MilnorNumber {
    (1..e.k()).map(|i| (e.b[i - 1] - e.b[i]) * (e.e[i] - 1)).sum()
}

pub fn milnor_of_branch(b: &PuiseuxBranch) -> Result<MilnorNumber> {
    Ok(milnor_from_exponents(&characteristic_exponents(b)?))
}

/// Least Milnor number among branches of multiplicity `m` with `k`
/// characteristic exponents.
pub fn milnor_minimal_closed_form(m: u64, k: usize) -> Result<MilnorNumber> {
    check_k(m, k)?;
    if k == 2 {
        return Ok(m * (m - 1));
    }
    let d = minimal_divisor_chain(m, k)?.divisors;
    let tail: u64 = (1..=k - 3).map(|j| d[j] * (d[j + 1] - 1)).sum();
    Ok(m * (m - 2 + d[1]) + tail)
}

/// Defining equation `Res_v(x - x(v), y - y(v))`, primitive with positive
/// leading coefficient.
pub fn implicitize(b: &PuiseuxBranch) -> Polynomial {
    let (px, py) = b.coordinates(Var::V);
    let f = &Polynomial::var(Var::X) - &px;
    let g = &Polynomial::var(Var::Y) - &py;
    resultant(&f, &g, Var::V)
        .expect("x - x(v) has positive degree in v")
        .primitive_normalized()
}

/// Product of the branch equations.
pub fn implicitize_germ(g: &PlaneCurveGerm) -> Polynomial {
    g.branches()
        .iter()
        .fold(Polynomial::one(), |acc, b| &acc * &implicitize(b))
}

/// Local intersection number of two distinct branches at the origin.
///
/// ```
/// use germs::milnor::intersection_multiplicity;
/// use germs::puiseux::PuiseuxBranch;
/// let cusp = PuiseuxBranch::monic(2, &[3]).unwrap();
/// assert_eq!(intersection_multiplicity(&cusp, &cusp.clone().swapped()).unwrap(), 4);
/// ```
pub fn intersection_multiplicity(a: &PuiseuxBranch, b: &PuiseuxBranch) -> Result<u64> {
    let h = implicitize(b);
    let (xa, ya) = a.coordinates(Var::U);
    let along = h.substitute(Var::X, &xa).substitute(Var::Y, &ya);
    match along.univariate_order(Var::U) {
        Valuation::Finite(n) => Ok(n as u64),
        Valuation::Infinite => Err(Error::SharedBranch),
    }
}

/// `1 + Σ (µ_i - 1) + 2 Σ_{i<j} i(X^i, X^j)`.
pub fn milnor_multibranch(g: &PlaneCurveGerm) -> Result<MilnorNumber> {
    let bs = g.branches();
    let mut total: i64 = 1;
    for b in bs {
        total += milnor_of_branch(b)? as i64 - 1;
    }
    for i in 0..bs.len() {
        for j in i + 1..bs.len() {
            total += 2 * intersection_multiplicity(&bs[i], &bs[j])? as i64;
        }
    }
    Ok(total as MilnorNumber)
}

/// Milnor–Orlik value `(d - w1)(d - w2) / (w1 w2)` for a weighted homogeneous
/// curve of degree `d`.
pub fn milnor_quasihomogeneous_curve(d: u64, w1: u64, w2: u64) -> Result<MilnorNumber> {
    if w1 == 0 || w2 == 0 || d < w1 || d < w2 {
        return Err(Error::NonInteger);
    }
    let num = (d - w1) * (d - w2);
    let den = w1 * w2;
    if !num.is_multiple_of(den) {
        return Err(Error::NonInteger);
    }
    Ok(num / den)
}

/// The local intersection number of `a` and `b` at the origin, read off as
/// the order of a resultant after a sweep of shears `x -> x + λy`.
///
/// Returns `Ok(None)` when every tried resultant vanished identically.
pub(crate) fn local_intersection(a: &Polynomial, b: &Polynomial) -> Result<Option<u64>> {
    for p in [a, b] {
        if !p.variables().iter().all(|v| matches!(v, Var::X | Var::Y)) {
            return Err(Error::InvalidGerm("expected a polynomial in x and y".into()));
        }
    }
    if !a.constant_term().is_zero() || !b.constant_term().is_zero() {
        return Ok(Some(0));
    }
    if a.is_zero() || b.is_zero() {
        return Ok(None);
    }
    if let Some(n) = certified_order(a, b)? {
        return Ok(Some(n));
    }
    let mut last: Option<u64> = None;
    let mut all_zero = true;
    for lambda in 1..=MAX_SHEAR {
        let shift = &Polynomial::var(Var::X) + &Polynomial::monomial(lambda, Var::Y, 1);
        let sa = a.substitute(Var::X, &shift);
        let sb = b.substitute(Var::X, &shift);
        if let Some(n) = certified_order(&sa, &sb)? {
            return Ok(Some(n));
        }
        if !leading_y_coefficient_is_unit(&sb) && !leading_y_coefficient_is_unit(&sa) {
            continue;
        }
        let r = elim_order(&sa, &sb, Var::Y)?;
        match r {
            None => last = None,
            Some(n) => {
                all_zero = false;
                if last == Some(n) {
                    return Ok(Some(n));
                }
                last = Some(n);
            }
        }
    }
    if all_zero {
        Ok(None)
    } else {
        Err(Error::NoConvergence(MAX_SHEAR as u32))
    }
}

/// Order of `Res_v(a, b)` in the remaining variable; `None` when it is zero.
fn elim_order(a: &Polynomial, b: &Polynomial, v: Var) -> Result<Option<u64>> {
    let other = if v == Var::Y { Var::X } else { Var::Y };
    let r = match resultant(a, b, v) {
        Ok(r) => r,
        Err(Error::DegenerateInput) => {
            // both free of v: the intersection is that of two curves in `other`
            let g = crate::poly::gcd(a, b);
            if g.is_constant() {
                return Ok(Some(0));
            }
            return Ok(None);
        }
        Err(e) => return Err(e),
    };
    Ok(r.univariate_order(other).finite().map(u64::from))
}

fn leading_y_coefficient_is_unit(p: &Polynomial) -> bool {
    p.coefficients_in(Var::Y)
        .last()
        .is_some_and(|c| !c.constant_term().is_zero())
}

/// `p` restricted to `{other = 0}` is `c·v^deg_v(p)` with `c ≠ 0`.
fn regular_monomial(p: &Polynomial, v: Var) -> bool {
    let other = if v == Var::Y { Var::X } else { Var::Y };
    let coeffs = p.coefficients_in(v);
    let Some((top, rest)) = coeffs.split_last() else {
        return false;
    };
    let at0 = |c: &Polynomial| c.eval(other, &num_rational::BigRational::zero());
    !at0(top).is_zero() && rest.iter().all(|c| at0(c).is_zero())
}

/// When one argument meets the line through the origin transverse to the
/// eliminated variable only at the origin, the resultant order is exact.
fn certified_order(a: &Polynomial, b: &Polynomial) -> Result<Option<u64>> {
    for v in [Var::Y, Var::X] {
        if regular_monomial(b, v) || regular_monomial(a, v) {
            if let Some(n) = elim_order(a, b, v)? {
                return Ok(Some(n));
            }
        }
    }
    Ok(None)
}

/// Milnor number of `h` at the origin from its equation alone.
///
/// ```
/// use germs::milnor::milnor_implicit_oracle;
/// use germs::poly::{Polynomial, Var};
/// let x = Polynomial::var(Var::X);
/// let y = Polynomial::var(Var::Y);
/// assert_eq!(milnor_implicit_oracle(&(x.pow(2) - y.pow(3))).unwrap(), 2);
/// ```
pub fn milnor_implicit_oracle(h: &Polynomial) -> Result<MilnorNumber> {
    let hx = h.derivative(Var::X);
    let hy = h.derivative(Var::Y);
    match local_intersection(&hx, &hy)? {
        Some(n) => Ok(n),
        None => Err(Error::NonIsolated),
    }
}
