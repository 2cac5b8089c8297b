use num_bigint::BigInt;
use num_rational::BigRational;

use super::ring::{from_coeff, to_uni, Backend, Coeff, DenseZ, Ring, UniPoly, ZPoly};
use super::{Polynomial, Var};
use crate::error::{Error, Result};

/// Elimination strategy for [`resultant_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ResultantMethod {
    /// Subresultant pseudo-remainder sequence.
    #[default]
    Subresultant,
    /// Fraction-free (Bareiss) determinant of the Sylvester matrix.
    Sylvester,
}

/// Sylvester resultant of `f` and `g` with respect to `v`.
///
/// ```
/// use germs::poly::{resultant, Polynomial, Var};
/// let x = Polynomial::var(Var::X);
/// let y = Polynomial::var(Var::Y);
/// let u = Polynomial::var(Var::U);
/// let r = resultant(&(&x - &u.pow(2)), &(&y - &u.pow(3)), Var::U).unwrap();
/// assert_eq!(r.primitive_normalized(), x.pow(3) - y.pow(2));
/// ```
pub fn resultant(f: &Polynomial, g: &Polynomial, v: Var) -> Result<Polynomial> {
    resultant_with(f, g, v, ResultantMethod::Subresultant)
}

pub fn resultant_with(
    f: &Polynomial,
    g: &Polynomial,
    v: Var,
    method: ResultantMethod,
) -> Result<Polynomial> {
    let n = f.degree_in(v).unwrap_or(0);
    let m = g.degree_in(v).unwrap_or(0);
    if n == 0 && m == 0 {
        return Err(Error::DegenerateInput);
    }
    if f.is_zero() || g.is_zero() {
        return Ok(Polynomial::zero());
    }
    let (a, ft) = f.to_integer_terms();
    let (b, gt) = g.to_integer_terms();
    let backend = Backend::for_polys(&[f, g], v);
    let r = match backend {
        Backend::Integer => run::<BigInt>(&ft, &gt, v, backend, method),
        Backend::Dense(_) => run::<DenseZ>(&ft, &gt, v, backend, method),
        Backend::Sparse => run::<ZPoly>(&ft, &gt, v, backend, method),
    };
    // Res(F/a, G/b) = Res(F, G) / (a^deg G * b^deg F).
    let denom = num_traits::pow(a, m as usize) * num_traits::pow(b, n as usize);
    Ok(r.scale(&BigRational::new(BigInt::from(1u8), denom)))
}

fn run<R: Coeff>(
    f: &[(super::Monomial, BigInt)],
    g: &[(super::Monomial, BigInt)],
    v: Var,
    backend: Backend,
    method: ResultantMethod,
) -> Polynomial {
    let a: UniPoly<R> = to_uni(f, v, backend);
    let b: UniPoly<R> = to_uni(g, v, backend);
    let r = match method {
        ResultantMethod::Subresultant => subresultant(a, b),
        ResultantMethod::Sylvester => sylvester_bareiss(&a, &b),
    };
    from_coeff(&r, backend)
}

fn pow_ratio<R: Ring>(num: &R, e_num: usize, den: &R, e_den: usize) -> R {
    let n = num.pow(e_num as u32);
    if e_den == 0 {
        return n;
    }
    n.exact_div(&den.pow(e_den as u32))
        .expect("subresultant quotient is exact")
}

/// Resultant via the subresultant remainder sequence.
pub(crate) fn subresultant<R: Ring>(a: UniPoly<R>, b: UniPoly<R>) -> R {
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return R::zero();
    };
    let (mut a, mut b, mut s) = if da < db {
        let sign = if (da * db) % 2 == 1 { R::one().neg() } else { R::one() };
        (b, a, sign)
    } else {
        (a, b, R::one())
    };
    let mut g = R::one();
    let mut h = R::one();
    loop {
        let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
            return R::zero();
        };
        if db == 0 {
            let lb = b.lc();
            return s.mul(&pow_ratio(lb, da, &h, da.saturating_sub(1)));
        }
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = s.neg();
        }
        let r = a.prem(&b);
        if r.is_zero() {
            return R::zero();
        }
        let divisor = g.mul(&h.pow(delta as u32));
        let r = r.div_scalar(&divisor).expect("subresultant division is exact");
        a = b;
        b = r;
        g = a.lc().clone();
        if delta > 0 {
            h = pow_ratio(&g, delta, &h, delta - 1);
        }
    }
}

/// Determinant of the Sylvester matrix by fraction-free elimination.
pub(crate) fn sylvester_bareiss<R: Ring>(a: &UniPoly<R>, b: &UniPoly<R>) -> R {
    let (Some(n), Some(m)) = (a.degree(), b.degree()) else {
        return R::zero();
    };
    let size = n + m;
    if size == 0 {
        return R::one();
    }
    let mut mat = vec![vec![R::zero(); size]; size];
    for i in 0..m {
        for j in 0..=n {
            mat[i][i + j] = a.0[n - j].clone();
        }
    }
    for i in 0..n {
        for j in 0..=m {
            mat[m + i][i + j] = b.0[m - j].clone();
        }
    }
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..size {
        if mat[k][k].is_zero() {
            let Some(p) = (k + 1..size).find(|&i| !mat[i][k].is_zero()) else {
                return R::zero();
            };
            mat.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let val = mat[i][j].mul(&mat[k][k]).sub(&mat[i][k].mul(&mat[k][j]));
                mat[i][j] = val.exact_div(&prev).expect("Bareiss division is exact");
            }
            mat[i][k] = R::zero();
        }
        prev = mat[k][k].clone();
    }
    let det = mat[size - 1][size - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}
