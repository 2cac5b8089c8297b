//! Integer coefficient rings used internally by elimination and gcd code.
//!
//! Public polynomials carry rational coefficients; resultants and remainder
//! sequences clear denominators first and run over `Z`, `Z[w]` (dense), or
//! `Z[w_1, ..., w_n]` (sparse), then convert back.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Monomial, Polynomial, Var};

pub(crate) trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / o` when the division is exact.
    fn exact_div(&self, o: &Self) -> Option<Self>;

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, o: &Self) -> Option<Self> {
        if Zero::is_zero(o) {
            return None;
        }
        let (q, r) = self.div_rem(o);
        Zero::is_zero(&r).then_some(q)
    }
}

/// Dense univariate polynomial over `Z`, little-endian, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub(crate) struct DenseZ(pub Vec<BigInt>);

impl DenseZ {
    fn trim(mut v: Vec<BigInt>) -> Self {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        DenseZ(v)
    }
}

impl Ring for DenseZ {
    fn zero() -> Self {
        DenseZ(Vec::new())
    }
    fn one() -> Self {
        DenseZ(vec![BigInt::from(1u8)])
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let v = (0..n)
            .map(|i| match (self.0.get(i), o.0.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => BigInt::ZERO,
            })
            .collect();
        DenseZ::trim(v)
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.0.is_empty() || o.0.is_empty() {
            return DenseZ::zero();
        }
        let mut v = vec![BigInt::ZERO; self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                if !Zero::is_zero(b) {
                    v[i + j] += a * b;
                }
            }
        }
        DenseZ::trim(v)
    }
    fn neg(&self) -> Self {
        DenseZ(self.0.iter().map(|c| -c).collect())
    }
    fn exact_div(&self, o: &Self) -> Option<Self> {
        if o.0.is_empty() {
            return None;
        }
        if self.0.is_empty() {
            return Some(DenseZ::zero());
        }
        if self.0.len() < o.0.len() {
            return None;
        }
        let mut r = self.0.clone();
        let m = o.0.len() - 1;
        let lc = &o.0[m];
        let qn = r.len() - m;
        let mut q = vec![BigInt::ZERO; qn];
        for k in (0..qn).rev() {
            let top = &r[k + m];
            if Zero::is_zero(top) {
                continue;
            }
            let (qc, rem) = top.div_rem(lc);
            if !Zero::is_zero(&rem) {
                return None;
            }
            for (j, b) in o.0.iter().enumerate() {
                if !Zero::is_zero(b) {
                    r[k + j] -= &qc * b;
                }
            }
            q[k] = qc;
        }
        r.iter().all(Zero::is_zero).then(|| DenseZ::trim(q))
    }
}

/// Sparse multivariate polynomial over `Z`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub(crate) struct ZPoly(pub BTreeMap<Monomial, BigInt>);

impl ZPoly {
    pub fn constant(c: BigInt) -> Self {
        let mut m = BTreeMap::new();
        if !Zero::is_zero(&c) {
            m.insert(Monomial::ONE, c);
        }
        ZPoly(m)
    }

    fn add_term(map: &mut BTreeMap<Monomial, BigInt>, m: Monomial, c: BigInt) {
        use std::collections::btree_map::Entry;
        match map.entry(m) {
            Entry::Vacant(e) => {
                if !Zero::is_zero(&c) {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if Zero::is_zero(e.get()) {
                    e.remove();
                }
            }
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.0.iter().next_back()
    }

    pub fn is_constant(&self) -> bool {
        self.0.keys().all(Monomial::is_one)
    }

    pub fn from_polynomial(p: &Polynomial) -> (BigInt, ZPoly) {
        let (l, terms) = p.to_integer_terms();
        (l, ZPoly(terms.into_iter().collect()))
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_terms(
            self.0
                .iter()
                .map(|(m, c)| (BigRational::from_integer(c.clone()), *m)),
        )
    }
}

impl Ring for ZPoly {
    fn zero() -> Self {
        ZPoly(BTreeMap::new())
    }
    fn one() -> Self {
        ZPoly::constant(BigInt::from(1u8))
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        let (mut big, small) = if self.0.len() >= o.0.len() {
            (self.0.clone(), &o.0)
        } else {
            (o.0.clone(), &self.0)
        };
        for (m, c) in small {
            ZPoly::add_term(&mut big, *m, c.clone());
        }
        ZPoly(big)
    }
    fn sub(&self, o: &Self) -> Self {
        let mut out = self.0.clone();
        for (m, c) in &o.0 {
            ZPoly::add_term(&mut out, *m, -c);
        }
        ZPoly(out)
    }
    fn mul(&self, o: &Self) -> Self {
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.0 {
            for (mb, cb) in &o.0 {
                *acc.entry(ma.mul(mb)).or_insert(BigInt::ZERO) += ca * cb;
            }
        }
        acc.retain(|_, c| !Zero::is_zero(c));
        ZPoly(acc)
    }
    fn neg(&self) -> Self {
        ZPoly(self.0.iter().map(|(m, c)| (*m, -c)).collect())
    }
    fn exact_div(&self, o: &Self) -> Option<Self> {
        let (lm, lc) = o.leading()?;
        let (lm, lc) = (*lm, lc.clone());
        if o.0.len() == 1 {
            let mut q = BTreeMap::new();
            for (m, c) in &self.0 {
                let (qc, r) = c.div_rem(&lc);
                if !Zero::is_zero(&r) {
                    return None;
                }
                q.insert(m.div(&lm)?, qc);
            }
            return Some(ZPoly(q));
        }
        let mut rem = self.0.clone();
        let mut q = BTreeMap::new();
        while let Some((m, c)) = rem.iter().next_back() {
            let qm = m.div(&lm)?;
            let (qc, r) = c.div_rem(&lc);
            if !Zero::is_zero(&r) {
                return None;
            }
            for (om, oc) in &o.0 {
                ZPoly::add_term(&mut rem, om.mul(&qm), -(&qc * oc));
            }
            q.insert(qm, qc);
        }
        Some(ZPoly(q))
    }
}

/// Dense polynomial in one distinguished variable over a coefficient ring.
#[derive(Clone, PartialEq, Debug)]
pub(crate) struct UniPoly<R: Ring>(pub Vec<R>);

impl<R: Ring> UniPoly<R> {
    pub fn new(mut v: Vec<R>) -> Self {
        while v.last().is_some_and(Ring::is_zero) {
            v.pop();
        }
        UniPoly(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lc(&self) -> &R {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    pub fn scale(&self, c: &R) -> Self {
        UniPoly::new(self.0.iter().map(|a| a.mul(c)).collect())
    }

    pub fn div_scalar(&self, c: &R) -> Option<Self> {
        let v = self
            .0
            .iter()
            .map(|a| a.exact_div(c))
            .collect::<Option<Vec<_>>>()?;
        Some(UniPoly::new(v))
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn prem(&self, b: &Self) -> Self {
        let (Some(n), Some(m)) = (self.degree(), b.degree()) else {
            return self.clone();
        };
        if n < m {
            return self.clone();
        }
        let lb = b.lc().clone();
        let mut r = self.0.clone();
        let mut e = (n - m + 1) as u32;
        while let Some(dr) = UniPoly::new(r.clone()).degree() {
            if dr < m {
                break;
            }
            r.truncate(dr + 1);
            let lr = r[dr].clone();
            let s = dr - m;
            for c in r.iter_mut() {
                *c = c.mul(&lb);
            }
            for (j, bj) in b.0.iter().enumerate() {
                if !bj.is_zero() {
                    r[s + j] = r[s + j].sub(&lr.mul(bj));
                }
            }
            r.pop();
            e -= 1;
        }
        let out = UniPoly::new(r);
        if e > 0 {
            out.scale(&lb.pow(e))
        } else {
            out
        }
    }
}

/// Which coefficient ring a conversion targets.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Backend {
    Integer,
    Dense(Var),
    Sparse,
}

impl Backend {
    /// Picks the cheapest ring for coefficients in the variables other than `v`.
    pub fn for_polys(polys: &[&Polynomial], v: Var) -> Backend {
        let mut rest = std::collections::BTreeSet::new();
        for p in polys {
            rest.extend(p.variables());
        }
        rest.remove(&v);
        match rest.len() {
            0 => Backend::Integer,
            1 => Backend::Dense(*rest.iter().next().unwrap()),
            _ => Backend::Sparse,
        }
    }
}

/// Ring elements that can be built from and read back into integer terms.
pub(crate) trait Coeff: Ring {
    fn embed(terms: Vec<(Monomial, BigInt)>, backend: Backend) -> Self;
    fn extract(&self, backend: Backend) -> Vec<(Monomial, BigInt)>;
}

impl Coeff for BigInt {
    fn embed(terms: Vec<(Monomial, BigInt)>, _: Backend) -> Self {
        terms.into_iter().map(|(_, c)| c).sum()
    }
    fn extract(&self, _: Backend) -> Vec<(Monomial, BigInt)> {
        vec![(Monomial::ONE, self.clone())]
    }
}

impl Coeff for DenseZ {
    fn embed(terms: Vec<(Monomial, BigInt)>, backend: Backend) -> Self {
        let Backend::Dense(w) = backend else {
            unreachable!("dense ring needs its variable")
        };
        let n = terms.iter().map(|(m, _)| m.exp(w) as usize + 1).max().unwrap_or(0);
        let mut v = vec![BigInt::ZERO; n];
        for (m, c) in terms {
            v[m.exp(w) as usize] += c;
        }
        DenseZ::trim(v)
    }
    fn extract(&self, backend: Backend) -> Vec<(Monomial, BigInt)> {
        let Backend::Dense(w) = backend else {
            unreachable!("dense ring needs its variable")
        };
        self.0
            .iter()
            .enumerate()
            .filter(|(_, c)| !Zero::is_zero(*c))
            .map(|(i, c)| (Monomial::var(w, i as u32), c.clone()))
            .collect()
    }
}

impl Coeff for ZPoly {
    fn embed(terms: Vec<(Monomial, BigInt)>, _: Backend) -> Self {
        let mut map = BTreeMap::new();
        for (m, c) in terms {
            ZPoly::add_term(&mut map, m, c);
        }
        ZPoly(map)
    }
    fn extract(&self, _: Backend) -> Vec<(Monomial, BigInt)> {
        self.0.iter().map(|(m, c)| (*m, c.clone())).collect()
    }
}

/// Splits an integer-coefficient polynomial by powers of `v`.
pub(crate) fn to_uni<R: Coeff>(terms: &[(Monomial, BigInt)], v: Var, backend: Backend) -> UniPoly<R> {
    let n = terms.iter().map(|(m, _)| m.exp(v) as usize + 1).max().unwrap_or(0);
    let mut buckets: Vec<Vec<(Monomial, BigInt)>> = vec![Vec::new(); n];
    for (m, c) in terms {
        buckets[m.exp(v) as usize].push((m.with_exp(v, 0), c.clone()));
    }
    UniPoly::new(buckets.into_iter().map(|b| R::embed(b, backend)).collect())
}

pub(crate) fn from_coeff<R: Coeff>(c: &R, backend: Backend) -> Polynomial {
    Polynomial::from_terms(
        c.extract(backend)
            .into_iter()
            .map(|(m, a)| (BigRational::from_integer(a), m)),
    )
}
