//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Every polynomial lives over the fixed variable set `x, y, z, t, u, v`
//! (in that order). Terms are kept in a map keyed by [`Monomial`], ordered
//! graded-lexicographically, and zero coefficients are never stored, so two
//! polynomials are equal exactly when their term maps are equal.

mod gcd;
mod resultant;
pub(crate) mod ring;
mod series;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use gcd::{gcd, squarefree_part};
pub use resultant::{resultant, resultant_with, ResultantMethod};
pub use series::{solve_first_component, truncate_total};
pub(crate) use series::substitute_truncated;

pub const NVARS: usize = 6;

/// The global variables, in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    Z,
    T,
    U,
    V,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::X, Var::Y, Var::Z, Var::T, Var::U, Var::V];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["x", "y", "z", "t", "u", "v"][self.index()]
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An exponent vector over the global variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(v: Var, e: u32) -> Monomial {
        let mut m = Monomial::ONE;
        m.0[v.index()] = e;
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; NVARS]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a = a.checked_sub(b)?;
        }
        Some(Monomial(e))
    }

    pub fn with_exp(&self, v: Var, e: u32) -> Monomial {
        let mut m = *self;
        m.0[v.index()] = e;
        m
    }

    /// Weighted degree under per-variable weights.
    pub fn weighted_degree(&self, weights: &[u64; NVARS]) -> u64 {
        self.0.iter().zip(weights).map(|(&e, &w)| e as u64 * w).sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Order of a polynomial at the origin; `Infinite` only for zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<u32> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Polynomial::term(c, Monomial::ONE)
    }

    pub fn from_int(c: i64) -> Self {
        Polynomial::constant(rat(c))
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn var(v: Var) -> Self {
        Polynomial::term(BigRational::one(), Monomial::var(v, 1))
    }

    /// `c * v^e`.
    pub fn monomial(c: i64, v: Var, e: u32) -> Self {
        Polynomial::term(rat(c), Monomial::var(v, e))
    }

    /// Builds a polynomial from `(coefficient, monomial)` pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (BigRational, Monomial)>>(it: I) -> Self {
        let mut p = Polynomial::zero();
        for (c, m) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(&Monomial::ONE)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        Var::ALL
            .into_iter()
            .filter(|&v| self.terms.keys().any(|m| m.exp(v) > 0))
            .collect()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    /// Lowest exponent of `v` over the support (`None` for zero).
    pub fn min_degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(v)).min()
    }

    pub fn order_at_origin(&self) -> Valuation {
        self.terms
            .keys()
            .next()
            .map_or(Valuation::Infinite, |m| Valuation::Finite(m.degree()))
    }

    pub fn map_coeffs(&self, f: impl Fn(&BigRational) -> BigRational) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (f(c), *m)))
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, v: Var) -> Polynomial {
        let i = v.index();
        Polynomial::from_terms(self.terms.iter().filter(|(m, _)| m.0[i] > 0).map(|(m, c)| {
            let mut e = m.0;
            let k = e[i];
            e[i] -= 1;
            (c * rat(k as i64), Monomial(e))
        }))
    }

    /// Coefficients of `self` as a polynomial in `v`; entry `i` multiplies `v^i`.
    pub fn coefficients_in(&self, v: Var) -> Vec<Polynomial> {
        let Some(d) = self.degree_in(v) else {
            return Vec::new();
        };
        let mut out = vec![Polynomial::zero(); d as usize + 1];
        for (m, c) in &self.terms {
            let k = m.exp(v) as usize;
            out[k].terms.insert(m.with_exp(v, 0), c.clone());
        }
        out
    }

    /// Inverse of [`Polynomial::coefficients_in`].
    pub fn from_coefficients(v: Var, coeffs: &[Polynomial]) -> Polynomial {
        let mut p = Polynomial::zero();
        for (k, c) in coeffs.iter().enumerate() {
            p = p + c.mul_monomial(&Monomial::var(v, k as u32));
        }
        p
    }

    /// Substitutes `v := value`.
    pub fn substitute(&self, v: Var, value: &Polynomial) -> Polynomial {
        let coeffs = self.coefficients_in(v);
        let mut acc = Polynomial::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Substitutes `v := value` for a rational number.
    pub fn eval(&self, v: Var, value: &BigRational) -> Polynomial {
        self.substitute(v, &Polynomial::constant(value.clone()))
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Renames variables by a permutation-free map (both sides must not collide).
    pub fn swap_vars(&self, a: Var, b: Var) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0;
                    e.swap(a.index(), b.index());
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Weighted degree if every term has the same weighted degree.
    pub fn weighted_homogeneous_degree(&self, weights: &[u64; NVARS]) -> Option<u64> {
        let mut it = self.terms.keys().map(|m| m.weighted_degree(weights));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Lcm of denominators and gcd of numerators.
    fn denominators_lcm(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Integer content times a sign, chosen so the result has coprime integer
    /// coefficients and positive leading coefficient.
    pub fn primitive_normalized(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let l = self.denominators_lcm();
        let ints: Vec<BigInt> = self
            .terms
            .values()
            .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let lead_negative = self.leading_term().is_some_and(|(_, c)| c.is_negative());
        let mut factor = BigRational::new(l, g);
        if lead_negative {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Monic normalization over the rationals.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => Polynomial::zero(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// `(scale, integer polynomial)` with `self = integer / scale`.
    pub(crate) fn to_integer_terms(&self) -> (BigInt, Vec<(Monomial, BigInt)>) {
        let l = self.denominators_lcm();
        let lr = BigRational::from_integer(l.clone());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (*m, (c * &lr).to_integer()))
            .collect();
        (l, terms)
    }

    /// Lowest exponent of `v` in the support; the order at 0 for a
    /// polynomial in `v` alone.
    pub fn univariate_order(&self, v: Var) -> Valuation {
        self.min_degree_in(v).map_or(Valuation::Infinite, Valuation::Finite)
    }

    pub fn to_i64_coeff(&self, m: &Monomial) -> Option<i64> {
        let c = self.terms.get(m)?;
        if c.is_integer() {
            c.to_integer().to_i64()
        } else {
            None
        }
    }
}

/// Exact quotient `num / den`, failing when the division leaves a remainder.
pub fn exact_divide(num: &Polynomial, den: &Polynomial) -> Result<Polynomial> {
    let (lm, lc) = den.leading_term().ok_or(Error::DivisionByZero)?;
    let (lm, lc) = (*lm, lc.clone());
    let mut rem = num.clone();
    let mut quot = Polynomial::zero();
    while let Some((m, c)) = rem.leading_term() {
        let Some(q_m) = m.div(&lm) else {
            return Err(Error::NotDivisible);
        };
        let q_c = c / &lc;
        let t = Polynomial::term(q_c.clone(), q_m);
        rem = &rem - &(den * &t);
        quot.add_term(q_m, q_c);
    }
    Ok(quot)
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for v in Var::ALL {
        let e = m.exp(v);
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (mut big, small) = if self.len() >= rhs.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(*m, c.clone());
        }
        big
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut acc: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.entry(m) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += c;
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Polynomial { terms: acc }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::from_int(c)
    }
}

impl From<Var> for Polynomial {
    fn from(v: Var) -> Self {
        Polynomial::var(v)
    }
}

#[cfg(test)]
pub(crate) mod testing {
    use super::*;

    /// `x^a y^b`.
    pub fn xy(a: u32, b: u32) -> Polynomial {
        Polynomial::term(rat(1), Monomial::var(Var::X, a).mul(&Monomial::var(Var::Y, b)))
    }

    pub fn x() -> Polynomial {
        Polynomial::var(Var::X)
    }
    pub fn y() -> Polynomial {
        Polynomial::var(Var::Y)
    }
    pub fn z() -> Polynomial {
        Polynomial::var(Var::Z)
    }
    pub fn t() -> Polynomial {
        Polynomial::var(Var::T)
    }
    pub fn u() -> Polynomial {
        Polynomial::var(Var::U)
    }
    pub fn c(n: i64) -> Polynomial {
        Polynomial::from_int(n)
    }
}
