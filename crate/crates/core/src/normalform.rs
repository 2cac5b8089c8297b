//! Normal forms of curves with least Milnor number for fixed multiplicities
//! and exponent counts, and tests for that minimality.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use crate::arith::{check_k, is_prime, minimal_divisor_chain, sigma};
use crate::error::{Error, Result};
use crate::milnor::intersection_multiplicity;
use crate::poly::rat;
use crate::puiseux::{characteristic_exponents, CharExponents, PlaneCurveGerm, PuiseuxBranch};

/// Branch multiplicities and exponent counts `(m_i, k_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalitySpec {
    pub m_vec: Vec<u64>,
    pub k_vec: Vec<usize>,
}

impl MinimalitySpec {
    pub fn new(m_vec: Vec<u64>, k_vec: Vec<usize>) -> Result<Self> {
        if m_vec.len() != k_vec.len() || m_vec.is_empty() {
            return Err(Error::InvalidBranch(
                "multiplicity and exponent-count lists must be nonempty and of equal length".into(),
            ));
        }
        for (&m, &k) in m_vec.iter().zip(&k_vec) {
            check_pair(m, k)?;
        }
        Ok(MinimalitySpec { m_vec, k_vec })
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u64, usize)> + '_ {
        self.m_vec.iter().copied().zip(self.k_vec.iter().copied())
    }
}

fn check_pair(m: u64, k: usize) -> Result<()> {
    match m {
        0 => Err(Error::InvalidBranch("multiplicity must be positive".into())),
        1 if k == 1 => Ok(()),
        1 if k == 0 => Err(Error::KTooSmall { m, k }),
        1 => Err(Error::KTooLarge { m, k, max: 1 }),
        _ if k >= 3 && is_prime(m) => Err(Error::PrimeNeedsK2(m)),
        _ => check_k(m, k),
    }
}

/// Exponents `m, m+d_1, m+d_1+d_2, ..., m+d_1+...+d_{k-2}+1`.
///
/// ```
/// use germs::normalform::minimal_char_exponents;
/// assert_eq!(minimal_char_exponents(36, 5).unwrap().e, vec![36, 48, 52, 54, 55]);
/// ```
pub fn minimal_char_exponents(m: u64, k: usize) -> Result<CharExponents> {
    check_pair(m, k)?;
    if m == 1 {
        return CharExponents::from_exponents(&[1]);
    }
    let mut e = vec![m];
    if k == 2 {
        e.push(m + 1);
    } else {
        let d = minimal_divisor_chain(m, k)?.divisors;
        let mut acc = m;
        for &di in &d[1..k - 1] {
            acc += di;
            e.push(acc);
        }
        e.push(acc + 1);
    }
    CharExponents::from_exponents(&e)
}

/// The branch `(u^m, Σ u^{e_i})` over the minimal exponents, or `(u, 0)`.
pub fn minimal_normal_form(m: u64, k: usize) -> Result<PuiseuxBranch> {
    let e = minimal_char_exponents(m, k)?;
    if m == 1 {
        return Ok(PuiseuxBranch::smooth());
    }
    PuiseuxBranch::monic(m, &e.e[1..])
}

pub fn is_minimal_branch(b: &PuiseuxBranch) -> Result<bool> {
    let e = characteristic_exponents(b)?;
    Ok(minimal_char_exponents(e.m(), e.k())? == e)
}

/// Every branch minimal and every pair of branches transversal.
pub fn is_minimal_germ(g: &PlaneCurveGerm) -> Result<bool> {
    let bs = g.branches();
    let mut ok = true;
    for b in bs {
        ok &= is_minimal_branch(b)?;
    }
    for i in 0..bs.len() {
        for j in i + 1..bs.len() {
            let n = intersection_multiplicity(&bs[i], &bs[j])?;
            ok &= n == bs[i].m() * bs[j].m();
        }
    }
    Ok(ok)
}

/// Branch `i` is the irreducible normal form plus the tangent term `i·u^{m_i}`.
pub fn minimal_normal_form_germ(spec: &MinimalitySpec) -> Result<PlaneCurveGerm> {
    let mut branches = Vec::new();
    for (i, (m, k)) in spec.pairs().enumerate() {
        let b = minimal_normal_form(m, k)?;
        branches.push(b.with_term(m, rat(i as i64))?);
    }
    PlaneCurveGerm::new(branches)
}

/// A family `base + t·(added terms)`, branch by branch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationFamily {
    pub base: PlaneCurveGerm,
    pub added_terms: Vec<BTreeMap<u64, BigRational>>,
}

impl DeformationFamily {
    pub fn is_trivial(&self) -> bool {
        self.added_terms.iter().all(BTreeMap::is_empty)
    }

    pub fn specialize(&self, t: &BigRational) -> Result<PlaneCurveGerm> {
        let mut out = Vec::new();
        for (b, added) in self.base.branches().iter().zip(&self.added_terms) {
            let mut nb = b.clone();
            for (&a, c) in added {
                nb = nb.with_term(a, c * t)?;
            }
            out.push(nb);
        }
        PlaneCurveGerm::new(out)
    }
}

impl fmt::Display for DeformationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (b, added) in self.base.branches().iter().zip(&self.added_terms) {
            let mut y = crate::puiseux::ascending_series(b.y_terms());
            for (a, c) in added {
                let coeff = if *c == rat(1) { String::new() } else { format!("{c}*") };
                y.push_str(&format!(" + {coeff}t*u^{a}"));
            }
            parts.push(format!("(u^{}, {y})", b.m()));
        }
        f.write_str(&parts.join(" ∪ "))
    }
}

/// Adds `t·u^α` for every minimal exponent missing from the branch.
pub fn deform_to_minimal(b: &PuiseuxBranch) -> Result<DeformationFamily> {
    let e = characteristic_exponents(b)?;
    let mut added = BTreeMap::new();
    if e.m() >= 2 {
        let target = minimal_char_exponents(e.m(), e.k())?;
        for &a in &target.e[1..] {
            if !e.e.contains(&a) {
                added.insert(a, rat(1));
            }
        }
    }
    Ok(DeformationFamily { base: b.clone().into(), added_terms: vec![added] })
}

/// Largest admissible exponent count for multiplicity `m`.
pub fn max_k(m: u64) -> usize {
    match m {
        1 => 1,
        _ if is_prime(m) => 2,
        _ => sigma(m) + 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::milnor::{milnor_from_exponents, milnor_minimal_closed_form};

    fn monic(m: u64, a: &[u64]) -> PuiseuxBranch {
        PuiseuxBranch::monic(m, a).unwrap()
    }

    #[test]
    fn normal_forms_for_36() {
        assert_eq!(minimal_normal_form(36, 5).unwrap(), monic(36, &[48, 52, 54, 55]));
        assert_eq!(minimal_normal_form(36, 4).unwrap(), monic(36, &[40, 42, 43]));
        assert_eq!(minimal_normal_form(36, 3).unwrap(), monic(36, &[38, 39]));
        assert_eq!(minimal_normal_form(36, 2).unwrap(), monic(36, &[37]));
        assert_eq!(minimal_normal_form(4, 3).unwrap(), monic(4, &[6, 7]));
        assert_eq!(minimal_normal_form(2, 2).unwrap(), monic(2, &[3]));
        assert_eq!(minimal_normal_form(1, 1).unwrap(), PuiseuxBranch::smooth());
    }

    #[test]
    fn exponent_lists() {
        assert_eq!(minimal_char_exponents(36, 3).unwrap().e, vec![36, 38, 39]);
        assert_eq!(minimal_char_exponents(6, 3).unwrap().e, vec![6, 8, 9]);
        assert_eq!(minimal_char_exponents(16, 3).unwrap().e, vec![16, 18, 19]);
        assert_eq!(minimal_char_exponents(8, 4).unwrap().e, vec![8, 12, 14, 15]);
    }

    #[test]
    fn spec_errors() {
        assert_eq!(minimal_normal_form(7, 3), Err(Error::PrimeNeedsK2(7)));
        assert!(matches!(minimal_normal_form(36, 6), Err(Error::KTooLarge { .. })));
        assert!(matches!(minimal_normal_form(4, 1), Err(Error::KTooSmall { .. })));
    }

    #[test]
    fn branch_minimality() {
        assert!(is_minimal_branch(&monic(4, &[6, 7])).unwrap());
        assert!(!is_minimal_branch(&monic(4, &[6, 9])).unwrap());
        assert!(is_minimal_branch(&monic(8, &[10, 11])).unwrap());
        assert!(!is_minimal_branch(&monic(8, &[20, 22, 23])).unwrap());
    }

    #[test]
    fn germ_minimality() {
        let cusp = monic(2, &[3]);
        let g = PlaneCurveGerm::new(vec![cusp.clone(), cusp.clone().swapped()]).unwrap();
        assert!(is_minimal_germ(&g).unwrap());
        let tangent = PlaneCurveGerm::new(vec![cusp.clone(), monic(2, &[3, 5])]).unwrap();
        assert!(!is_minimal_germ(&tangent).unwrap());
        let mixed = PlaneCurveGerm::new(vec![cusp, monic(4, &[4, 6, 7])]).unwrap();
        assert!(is_minimal_germ(&mixed).unwrap());
    }

    #[test]
    fn germ_normal_forms() {
        let spec = MinimalitySpec::new(vec![2, 4], vec![2, 3]).unwrap();
        let g = minimal_normal_form_germ(&spec).unwrap();
        assert_eq!(g.branches(), &[monic(2, &[3]), monic(4, &[4, 6, 7])]);
        let spec = MinimalitySpec::new(vec![2, 2], vec![2, 2]).unwrap();
        let g = minimal_normal_form_germ(&spec).unwrap();
        assert_eq!(g.branches(), &[monic(2, &[3]), monic(2, &[2, 3])]);
        let spec = MinimalitySpec::new(vec![1, 1], vec![1, 1]).unwrap();
        let g = minimal_normal_form_germ(&spec).unwrap();
        assert_eq!(g.branches(), &[PuiseuxBranch::smooth(), monic(1, &[1])]);
        assert!(is_minimal_germ(&g).unwrap());
    }

    #[test]
    fn deformations() {
        let fam = deform_to_minimal(&monic(4, &[6, 9])).unwrap();
        assert_eq!(fam.added_terms[0], BTreeMap::from([(7, rat(1))]));
        assert_eq!(fam.to_string(), "(u^4, u^6 + u^9 + t*u^7)");
        let fam = deform_to_minimal(&monic(8, &[20, 22, 23])).unwrap();
        assert_eq!(fam.added_terms[0].keys().copied().collect::<Vec<_>>(), vec![12, 14, 15]);
        let special = fam.specialize(&rat(1)).unwrap();
        assert!(is_minimal_germ(&special).unwrap());
        assert!(deform_to_minimal(&monic(4, &[6, 7])).unwrap().is_trivial());
    }

    #[test]
    fn closed_form_matches_exponents() {
        for m in 2..=60u64 {
            for k in 2..=max_k(m) {
                let e = minimal_char_exponents(m, k).unwrap();
                assert_eq!(milnor_from_exponents(&e), milnor_minimal_closed_form(m, k).unwrap());
            }
        }
    }
}
