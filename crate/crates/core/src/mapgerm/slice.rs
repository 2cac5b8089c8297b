//! Transverse slices computed directly: intersect the image with a plane,
//! parametrize the slice by power series and read off its exponents.

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{rat, Polynomial, Var};
use crate::puiseux::{scan_exponents, CharExponents};

/// Planes `X + bY + cZ = 0` tried in turn; two consecutive agreements win.
const PLANES: [(i64, i64); 6] = [(3, 2), (-2, 5), (5, -3), (7, 4), (-4, 9), (11, -6)];

/// Largest truncation order tried on one plane.
const MAX_ORDER: usize = 320;

/// Truncation doublings tried on one plane before it counts as special.
const DOUBLINGS: usize = 2;

/// Dense truncated power series in one variable, coefficients `0..=n`.
type Series = Vec<BigRational>;

fn dense(p: &Polynomial, v: Var, n: usize) -> Series {
    let mut out = vec![BigRational::zero(); n + 1];
    for (m, c) in p.terms() {
        let e = m.exp(v) as usize;
        if e <= n {
            out[e] += c;
        }
    }
    out
}

fn mul(a: &[BigRational], b: &[BigRational], n: usize) -> Series {
    let mut out = vec![BigRational::zero(); n + 1];
    for (i, ai) in a.iter().enumerate().take(n + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(n + 1 - i) {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// `1 / a` for `a(0) != 0`.
fn inverse(a: &[BigRational], n: usize) -> Series {
    let a0 = a[0].recip();
    let mut out = vec![BigRational::zero(); n + 1];
    out[0] = a0.clone();
    for k in 1..=n {
        let mut s = BigRational::zero();
        for j in 1..=k.min(a.len() - 1) {
            s += &a[j] * &out[k - j];
        }
        out[k] = -s * &a0;
    }
    out
}

/// `s^α` for `s(0) = 1`, from `s w' = α s' w`.
fn power(s: &[BigRational], alpha: &BigRational, n: usize) -> Series {
    let mut w = vec![BigRational::zero(); n + 1];
    w[0] = BigRational::one();
    for k in 1..=n {
        let mut acc = BigRational::zero();
        for j in 1..=k.min(s.len() - 1) {
            if s[j].is_zero() {
                continue;
            }
            let f = alpha * rat(j as i64) - rat((k - j) as i64);
            acc += f * &s[j] * &w[k - j];
        }
        w[k] = acc / rat(k as i64);
    }
    w
}

/// `Σ_k c_k(y) x^k` evaluated at `x = ξ(y)`.
fn horner(coeffs: &[Series], xi: &[BigRational], n: usize) -> Series {
    let mut acc = vec![BigRational::zero(); n + 1];
    for c in coeffs.iter().rev() {
        acc = mul(&acc, xi, n);
        for (a, b) in acc.iter_mut().zip(c) {
            *a += b;
        }
    }
    acc
}

fn x_coefficients(p: &Polynomial, n: usize) -> Vec<Series> {
    p.coefficients_in(Var::X).iter().map(|c| dense(c, Var::Y, n)).collect()
}

/// The root `x = ξ(y)` of `h(x, y) = 0` with `ξ(0) = 0`, by Newton steps.
fn solve_x(h: &Polynomial, n: usize) -> Result<Series> {
    let hx = h.derivative(Var::X);
    if hx.constant_term().is_zero() || !h.constant_term().is_zero() {
        return Err(Error::NotSolvable("plane equation is not regular in x".into()));
    }
    let (hc, hxc) = (x_coefficients(h, n), x_coefficients(&hx, n));
    let mut xi = vec![BigRational::zero(); n + 1];
    let mut prec = 1;
    loop {
        let r = horner(&hc, &xi, n);
        if r.iter().all(Zero::is_zero) {
            return Ok(xi);
        }
        if prec > 2 * n + 2 {
            return Err(Error::TruncationTooSmall(n as u32));
        }
        let d = inverse(&horner(&hxc, &xi, n), n);
        for (a, b) in xi.iter_mut().zip(mul(&r, &d, n)) {
            *a -= b;
        }
        prec *= 2;
    }
}

/// Exponents of the plane curve `(A(y), B(y))` with `ord A <= ord B`, or
/// `None` when the truncation is too short to see the final gcd drop.
fn branch_exponents(a: &[BigRational], b: &[BigRational], n: usize) -> Option<CharExponents> {
    let m = a.iter().position(|c| !c.is_zero())?;
    if m == 1 {
        return CharExponents::from_exponents(&[1]).ok();
    }
    // A = c y^M s(y) and u = y s^{1/M}; Lagrange inversion gives
    // [u^k] B(y(u)) = (1/k) [y^{k-1}] B'(y) v(y)^k with v = s^{-1/M}.
    let len = n - m;
    let s: Series = a[m..].iter().map(|c| c / &a[m]).collect();
    let v = power(&s, &-BigRational::new(1.into(), (m as i64).into()), len);
    let db: Series = (1..=n).map(|i| &b[i] * rat(i as i64)).collect();
    let mut vk = vec![BigRational::one()];
    let mut support = Vec::new();
    for k in 1..=n {
        vk = mul(&vk, &v, len);
        let mut acc = BigRational::zero();
        for i in m - 1..k {
            if k - 1 - i <= len {
                acc += &db[i] * &vk[k - 1 - i];
            }
        }
        if !acc.is_zero() {
            support.push(k as u64);
        }
    }
    scan_exponents(m as u64, support).ok()
}

/// `None` when the section looks like a multiple cover up to the largest
/// truncation tried, as happens for special planes.
fn exponents_in_plane(f: [&Polynomial; 3], b: i64, c: i64, start: usize) -> Result<Option<CharExponents>> {
    let h = f[0] + &(&f[1].scale(&rat(b)) + &f[2].scale(&rat(c)));
    let mut n = start;
    for _ in 0..=DOUBLINGS {
        let xi = solve_x(&h, n)?;
        let p = horner(&x_coefficients(f[1], n), &xi, n);
        let q = horner(&x_coefficients(f[2], n), &xi, n);
        let order = |s: &Series| s.iter().position(|c| !c.is_zero()).unwrap_or(usize::MAX);
        let (lo, hi) = if order(&p) <= order(&q) { (&p, &q) } else { (&q, &p) };
        if let Some(e) = branch_exponents(lo, hi, n) {
            return Ok(Some(e));
        }
        if n >= MAX_ORDER {
            break;
        }
        n = (2 * n).min(MAX_ORDER);
    }
    Ok(None)
}

/// Characteristic exponents of the slice of the image of `(f1, f2, f3)`,
/// where `f1` has a unit coefficient of `x` and `f2, f3` vanish to order 2.
pub fn geometric_slice(f: [&Polynomial; 3]) -> Result<CharExponents> {
    for p in f {
        if !p.variables().iter().all(|v| matches!(v, Var::X | Var::Y)) {
            return Err(Error::InvalidGerm("expected polynomials in x and y".into()));
        }
    }
    let deg = f.iter().filter_map(|p| p.total_degree()).max().unwrap_or(1) as usize;
    let start = (2 * deg + 8).min(MAX_ORDER);
    let mut prev: Option<CharExponents> = None;
    let mut seen = false;
    for (b, c) in PLANES {
        let e = exponents_in_plane(f, b, c, start)?;
        seen |= e.is_some();
        if let Some(found) = &e {
            if prev.as_ref() == Some(found) {
                return Ok(found.clone());
            }
        }
        prev = e;
    }
    if seen {
        Err(Error::NoConvergence(PLANES.len() as u32))
    } else {
        Err(Error::TruncationTooSmall(MAX_ORDER as u32))
    }
}

/// Gcd of a list, zero for an empty one.
pub(crate) fn gcd_all(it: impl IntoIterator<Item = u64>) -> u64 {
    it.into_iter().fold(0, |a, b| a.gcd(&b))
}
