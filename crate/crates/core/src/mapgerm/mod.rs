//! Corank-1 map germs `(x, y) -> (x, p(x, y), q(x, y))` from the plane to
//! 3-space: weights, double points, cross-caps and transverse slices.

mod slice;

use std::fmt;

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::milnor::{
    local_intersection, milnor_from_exponents, milnor_implicit_oracle,
    milnor_quasihomogeneous_curve, MilnorNumber,
};
use crate::normalform::minimal_char_exponents;
use crate::poly::{gcd, resultant, Polynomial, Valuation, Var, NVARS};
use crate::puiseux::CharExponents;

pub use slice::geometric_slice;
pub(crate) use slice::gcd_all;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorankOneGerm {
    p: Polynomial,
    q: Polynomial,
}

impl CorankOneGerm {
    pub fn new(p: Polynomial, q: Polynomial) -> Result<Self> {
        for c in [&p, &q] {
            if !c.variables().iter().all(|v| matches!(v, Var::X | Var::Y)) {
                return Err(Error::InvalidGerm(format!("{c} is not a polynomial in x and y")));
            }
            if c.order_at_origin() < Valuation::Finite(2) {
                return Err(Error::InvalidGerm(format!("{c} has a constant or linear term")));
            }
        }
        if p.eval(Var::X, &Zero::zero()).is_zero() && q.eval(Var::X, &Zero::zero()).is_zero() {
            return Err(Error::InvalidGerm("p(0, y) and q(0, y) both vanish".into()));
        }
        Ok(CorankOneGerm { p, q })
    }

    pub fn p(&self) -> &Polynomial {
        &self.p
    }

    pub fn q(&self) -> &Polynomial {
        &self.q
    }

    fn max_degree(&self) -> u32 {
        [&self.p, &self.q].iter().filter_map(|c| c.total_degree()).max().unwrap_or(0)
    }
}

impl fmt::Display for CorankOneGerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(x, {}, {})", self.p, self.q)
    }
}

/// Type `(d1, d2, d3; w1, w2)` with `d2 <= d3`; `swapped` records that `q`
/// carries `d2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QhType {
    pub d1: u64,
    pub d2: u64,
    pub d3: u64,
    pub w1: u64,
    pub w2: u64,
    pub swapped: bool,
}

impl QhType {
    pub fn weights(&self) -> [u64; NVARS] {
        [self.w1, self.w2, 0, 0, 0, 0]
    }
}

impl fmt::Display for QhType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{};{},{})", self.d1, self.d2, self.d3, self.w1, self.w2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SliceCase {
    /// `w1 <= d2`, `gcd(m, n) = 1`: exponents `m, n`.
    Coprime,
    /// `w1 > d2`: exponents `m, ((d3 - w2) m + w1) / w1`.
    HeavyX,
    /// `w1 <= d2`, `gcd(m, n) = 2`: exponents `d2, d3, d2 + d3 - w1`.
    EvenPair,
    /// Not in normal form; computed from an explicit plane section.
    Geometric,
}

impl SliceCase {
    pub fn tag(self) -> &'static str {
        match self {
            SliceCase::Coprime => "slice1",
            SliceCase::HeavyX => "slice2",
            SliceCase::EvenPair => "slice3",
            SliceCase::Geometric => "geometric",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceData {
    pub exponents: CharExponents,
    pub mu: MilnorNumber,
    pub case: SliceCase,
}

impl SliceData {
    fn new(exponents: CharExponents, case: SliceCase) -> Self {
        let mu = milnor_from_exponents(&exponents);
        SliceData { exponents, mu, case }
    }
}

/// Smallest weights `(w1, w2)` (by `w1 + w2`, then `w1`) making both
/// coordinates weighted homogeneous.
///
/// ```
/// use germs::mapgerm::{detect_qh_type, CorankOneGerm};
/// use germs::poly::{Polynomial, Var};
/// let (x, y) = (Polynomial::var(Var::X), Polynomial::var(Var::Y));
/// let f = CorankOneGerm::new(y.pow(2), &x * &y).unwrap();
/// assert_eq!(detect_qh_type(&f).unwrap().to_string(), "(1,2,2;1,1)");
/// ```
pub fn detect_qh_type(f: &CorankOneGerm) -> Option<QhType> {
    if f.p.is_zero() || f.q.is_zero() {
        return None;
    }
    let bound = f.max_degree() as u64;
    for s in 2..=2 * bound {
        for w1 in 1..s {
            let w2 = s - w1;
            if w1 > bound || w2 > bound || w1.gcd(&w2) != 1 {
                continue;
            }
            let w = [w1, w2, 0, 0, 0, 0];
            let (Some(dp), Some(dq)) =
                (f.p.weighted_homogeneous_degree(&w), f.q.weighted_homogeneous_degree(&w))
            else {
                continue;
            };
            let swapped = dq < dp;
            let (d2, d3) = if swapped { (dq, dp) } else { (dp, dq) };
            return Some(QhType { d1: w1, d2, d3, w1, w2, swapped });
        }
    }
    None
}

/// `(c(x, y) - c(x, z)) / (y - z)`.
fn divided_difference(c: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero();
    for (m, a) in c.terms() {
        let b = m.exp(Var::Y);
        for i in 0..b {
            let mono = m.with_exp(Var::Y, i).with_exp(Var::Z, b - 1 - i);
            out.add_term(mono, a.clone());
        }
    }
    out
}

/// The divided differences `φ` of `p` and `ψ` of `q` in `x, y, z`.
pub fn divided_differences(f: &CorankOneGerm) -> (Polynomial, Polynomial) {
    (divided_difference(&f.p), divided_difference(&f.q))
}

/// `Res_z(φ, ψ)`, primitive with positive leading coefficient.
///
/// ```
/// use germs::mapgerm::{double_point_curve, CorankOneGerm};
/// use germs::poly::{Polynomial, Var};
/// let (x, y) = (Polynomial::var(Var::X), Polynomial::var(Var::Y));
/// let f = CorankOneGerm::new(y.pow(2), &x * &y).unwrap();
/// assert_eq!(double_point_curve(&f).unwrap(), x);
/// ```
pub fn double_point_curve(f: &CorankOneGerm) -> Result<Polynomial> {
    let (phi, psi) = divided_differences(f);
    let d = resultant(&phi, &psi, Var::Z)?;
    if d.is_zero() {
        return Err(Error::IdenticallyZero);
    }
    Ok(d.primitive_normalized())
}

/// Whether `D(f)` is reduced with an isolated singularity at the origin.
/// A germ that is not generically one-to-one is reported as `false`.
pub fn is_finitely_determined(f: &CorankOneGerm) -> Result<bool> {
    let d = match double_point_curve(f) {
        Ok(d) => d,
        Err(Error::IdenticallyZero) => return Ok(false),
        Err(e) => return Err(e),
    };
    if !d.constant_term().is_zero() {
        return Ok(true);
    }
    if !is_reduced(&d) {
        return Ok(false);
    }
    if let Some(t) = detect_qh_type(f) {
        if let Some(deg) = d.weighted_homogeneous_degree(&t.weights()) {
            if milnor_quasihomogeneous_curve(deg, t.w1, t.w2).is_ok() {
                return Ok(true);
            }
        }
    }
    match milnor_implicit_oracle(&d) {
        Ok(_) => Ok(true),
        Err(Error::NonIsolated) => Ok(false),
        Err(e) => Err(e),
    }
}

/// A repeated factor of `d` divides both partials, and conversely.
fn is_reduced(d: &Polynomial) -> bool {
    gcd(&gcd(d, &d.derivative(Var::X)), &d.derivative(Var::Y)).is_constant()
}

/// `c·y^e` when `r(0, y)` is a single nonzero monomial.
fn pure_power(r: &Polynomial) -> Option<u32> {
    let r0 = r.eval(Var::X, &Zero::zero());
    (r0.len() == 1).then(|| r0.terms().next().unwrap().0.exp(Var::Y))
}

/// Exponents of the transverse slice.
///
/// In normal form (`p(0, y)` and `q(0, y)` nonzero monomials) the exponents
/// come from the weighted type; otherwise from an explicit plane section.
pub fn slice_exponents(f: &CorankOneGerm, t: &QhType) -> Result<SliceData> {
    let (lo, hi) = if t.swapped { (&f.q, &f.p) } else { (&f.p, &f.q) };
    if pure_power(lo).is_none() || pure_power(hi).is_none() {
        return transverse_slice(f);
    }
    let (m, n) = (t.d2 / t.w2, t.d3 / t.w2);
    let unhandled = |why: &str| Error::UnhandledCase(format!("type {t}: {why}"));
    let (e, case) = match (t.w1 <= t.d2, m.gcd(&n)) {
        (true, 1) => (vec![m, n], SliceCase::Coprime),
        (false, 1) => {
            let num = (t.d3 - t.w2) * m + t.w1;
            if !num.is_multiple_of(t.w1) {
                return Err(unhandled("second exponent is not an integer"));
            }
            (vec![m, num / t.w1], SliceCase::HeavyX)
        }
        (true, 2) => (vec![t.d2, t.d3, t.d2 + t.d3 - t.w1], SliceCase::EvenPair),
        (_, g) => return Err(unhandled(&format!("gcd(m, n) = {g}"))),
    };
    match CharExponents::from_exponents(&e) {
        Ok(ce) if ce.m() == m => Ok(SliceData::new(ce, case)),
        _ => Err(unhandled(&format!("{e:?} is not an exponent sequence of multiplicity {m}"))),
    }
}

/// Slice exponents from an explicit generic plane section of the image.
pub fn transverse_slice(f: &CorankOneGerm) -> Result<SliceData> {
    let x = Polynomial::var(Var::X);
    Ok(SliceData::new(geometric_slice([&x, &f.p, &f.q])?, SliceCase::Geometric))
}

/// Whether the slice exponents are the minimal ones for their `m` and `k`.
pub fn is_slice_minimal(f: &CorankOneGerm, t: &QhType) -> Result<bool> {
    let e = slice_exponents(f, t)?.exponents;
    Ok(minimal_char_exponents(e.m(), e.k())? == e)
}

/// Local intersection number of `∂p/∂y` and `∂q/∂y` at the origin.
///
/// ```
/// use germs::mapgerm::{cross_cap_count, CorankOneGerm};
/// use germs::poly::{Polynomial, Var};
/// let (x, y) = (Polynomial::var(Var::X), Polynomial::var(Var::Y));
/// let f = CorankOneGerm::new(y.pow(2), &y.pow(3) + &(x.pow(2) * y.clone())).unwrap();
/// assert_eq!(cross_cap_count(&f).unwrap(), 2);
/// ```
pub fn cross_cap_count(f: &CorankOneGerm) -> Result<u64> {
    let (py, qy) = (f.p.derivative(Var::Y), f.q.derivative(Var::Y));
    let g = gcd(&py, &qy);
    if !g.is_constant() && g.constant_term().is_zero() {
        return Err(Error::InfiniteCrossCaps);
    }
    local_intersection(&py, &qy)?.ok_or(Error::InfiniteCrossCaps)
}
