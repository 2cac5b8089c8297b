use num_rational::BigRational;
use num_traits::Zero;

use super::{Monomial, Polynomial, Var};
use crate::error::{Error, Result};

/// Drops every term of total degree above `n`.
pub fn truncate_total(p: &Polynomial, n: u32) -> Polynomial {
    p.filter_terms(|m| m.degree() <= n)
}

pub(crate) fn mul_truncated(a: &Polynomial, b: &Polynomial, n: u32) -> Polynomial {
    let mut out = Polynomial::zero();
    for (ma, ca) in a.terms() {
        let da = ma.degree();
        if da > n {
            continue;
        }
        for (mb, cb) in b.terms() {
            if da + mb.degree() <= n {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
    }
    out
}

/// `p(v := value)` modulo terms of total degree above `n`.
pub(crate) fn substitute_truncated(p: &Polynomial, v: Var, value: &Polynomial, n: u32) -> Polynomial {
    let mut acc = Polynomial::zero();
    for c in p.coefficients_in(v).iter().rev() {
        acc = &mul_truncated(&acc, value, n) + &truncate_total(c, n);
    }
    acc
}

/// Solves `f1(x, y, t, ...) = 0` for `x` as a power series in the other
/// variables, modulo total degree `n + 1`.
///
/// Requires `f1(0) = 0` and a nonzero coefficient of `x`; the series is the
/// fixed point of `x <- x - f1 / c` where `c` is that coefficient.
///
/// ```
/// use germs::poly::{solve_first_component, Polynomial, Var};
/// let x = Polynomial::var(Var::X);
/// let y = Polynomial::var(Var::Y);
/// let f1 = &(&x - &y.pow(2)) - &x.pow(2);
/// let xi = solve_first_component(&f1, 6).unwrap();
/// assert_eq!(xi.to_string(), "2*y^6 + y^4 + y^2");
/// ```
pub fn solve_first_component(f1: &Polynomial, n: u32) -> Result<Polynomial> {
    let c = f1.coeff(&Monomial::var(Var::X, 1));
    if c.is_zero() {
        return Err(Error::NotSolvable("the coefficient of x vanishes".into()));
    }
    if !f1.constant_term().is_zero() {
        return Err(Error::NotSolvable("f1 does not vanish at the origin".into()));
    }
    let g = &Polynomial::var(Var::X) - &f1.scale(&(BigRational::from_integer(1.into()) / &c));
    let mut xi = Polynomial::zero();
    for _ in 0..=n + 1 {
        let next = substitute_truncated(&g, Var::X, &xi, n);
        if next == xi {
            break;
        }
        xi = next;
    }
    let residual = substitute_truncated(f1, Var::X, &xi, n);
    if residual.is_zero() {
        Ok(xi)
    } else {
        Err(Error::TruncationTooSmall(n))
    }
}
