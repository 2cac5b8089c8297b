use num_integer::Integer;
use num_traits::{One, Signed};

use super::ring::{to_uni, Backend, Ring, UniPoly, ZPoly};
use super::{exact_divide, Polynomial, Var};

/// Greatest common divisor over the rationals, normalized to coprime integer
/// coefficients with a positive leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let g = gcd_z(&ZPoly::from_polynomial(a).1, &ZPoly::from_polynomial(b).1);
    g.to_polynomial().primitive_normalized()
}

/// `f / gcd(f, df/dv)` together with whether that gcd was a unit.
///
/// A polynomial free of `v` has no repeated factor involving `v`, so it is
/// returned unchanged and reported squarefree.
pub fn squarefree_part(f: &Polynomial, v: Var) -> (Polynomial, bool) {
    let df = f.derivative(v);
    if df.is_zero() {
        return (f.clone(), true);
    }
    let g = gcd(f, &df);
    if g.is_constant() {
        return (f.clone(), true);
    }
    let q = exact_divide(f, &g).expect("gcd divides its argument");
    (q, false)
}

fn variables(p: &ZPoly) -> Vec<Var> {
    Var::ALL
        .into_iter()
        .filter(|&v| p.0.keys().any(|m| m.exp(v) > 0))
        .collect()
}

/// Associate with positive leading coefficient.
fn normalize(p: &ZPoly) -> ZPoly {
    match p.leading() {
        Some((_, c)) if c.is_negative() => p.neg(),
        _ => p.clone(),
    }
}

fn content(u: &UniPoly<ZPoly>) -> ZPoly {
    let mut c = ZPoly::zero();
    for a in &u.0 {
        c = gcd_z(&c, a);
        if c.is_constant() && c.leading().is_some_and(|(_, k)| One::is_one(&k.abs())) {
            break;
        }
    }
    c
}

fn primitive(u: &UniPoly<ZPoly>) -> UniPoly<ZPoly> {
    let c = content(u);
    u.div_scalar(&c).expect("content divides every coefficient")
}

pub(crate) fn gcd_z(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_zero() {
        return normalize(b);
    }
    if b.is_zero() {
        return normalize(a);
    }
    let mut vars = variables(a);
    for v in variables(b) {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    let Some(&v) = vars.iter().max() else {
        let ka = a.leading().map(|(_, c)| c.clone()).unwrap_or_default();
        let kb = b.leading().map(|(_, c)| c.clone()).unwrap_or_default();
        return ZPoly::constant(ka.gcd(&kb));
    };
    let split = |p: &ZPoly| -> UniPoly<ZPoly> {
        let terms: Vec<_> = p.0.iter().map(|(m, c)| (*m, c.clone())).collect();
        to_uni(&terms, v, Backend::Sparse)
    };
    let (ua, ub) = (split(a), split(b));
    let (ca, cb) = (content(&ua), content(&ub));
    let c = gcd_z(&ca, &cb);
    let (mut pa, mut pb) = (
        ua.div_scalar(&ca).expect("content divides"),
        ub.div_scalar(&cb).expect("content divides"),
    );
    if pa.degree() < pb.degree() {
        std::mem::swap(&mut pa, &mut pb);
    }
    let g = loop {
        if pb.degree() == Some(0) {
            break UniPoly::new(vec![ZPoly::one()]);
        }
        let r = pa.prem(&pb);
        if r.is_zero() {
            break pb;
        }
        pa = pb;
        pb = primitive(&r);
    };
    let mut out = ZPoly::zero();
    for (k, coeff) in g.0.iter().enumerate() {
        for (m, a) in &coeff.0 {
            out.0.insert(m.with_exp(v, k as u32), a.clone());
        }
    }
    normalize(&out.mul(&c))
}

#[cfg(test)]
mod tests {
    use super::super::testing::*;
    use super::*;

    #[test]
    fn gcd_of_products() {
        let f = &x() + &y();
        let a = &f * &(&x() - &c(2));
        let b = &f * &(y().pow(2) + c(1));
        assert_eq!(gcd(&a, &b), f);
        assert_eq!(gcd(&x(), &y()), c(1));
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_part(&x().pow(2), Var::X), (x(), false));
        let n = x().pow(2) + y().pow(2);
        assert_eq!(squarefree_part(&n, Var::X), (n.clone(), true));
        let a = &y() - &x().pow(2);
        let f = &a.pow(2) * &(&y() + &x());
        let (q, sq) = squarefree_part(&f, Var::Y);
        assert!(!sq);
        assert_eq!(q.primitive_normalized(), (&a * &(&y() + &x())).primitive_normalized());
    }
}
