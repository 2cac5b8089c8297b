//! Parametrized branches `u -> (u^m, Σ c_α u^α)` and their characteristic
//! exponents.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::sigma;
use crate::error::{Error, Result};
use crate::poly::{rat, Polynomial, Var};

/// Which coordinate carries the pure power `u^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Orientation {
    /// `(u^m, Y(u))`.
    #[default]
    Standard,
    /// `(Y(u), u^m)`, the same curve reflected in the diagonal.
    Swapped,
}

/// An irreducible plane branch with a polynomial parametrization.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PuiseuxBranch {
    m: u64,
    y_terms: BTreeMap<u64, BigRational>,
    orientation: Orientation,
}

impl PuiseuxBranch {
    /// Builds `(u^m, Σ c_α u^α)`, dropping zero coefficients.
    ///
    /// Fails when some exponent is below `m` or when the parametrization is a
    /// multiple cover (gcd of `m` and the exponents above 1).
    pub fn new(m: u64, terms: impl IntoIterator<Item = (u64, BigRational)>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidBranch("multiplicity must be positive".into()));
        }
        let mut y_terms = BTreeMap::new();
        for (a, c) in terms {
            let e: &mut BigRational = y_terms.entry(a).or_insert_with(BigRational::zero);
            *e += c;
        }
        y_terms.retain(|_, c: &mut BigRational| !c.is_zero());
        if let Some(&a) = y_terms.keys().find(|&&a| a < m) {
            return Err(Error::InvalidBranch(format!(
                "exponent {a} is below the multiplicity {m}"
            )));
        }
        let g = y_terms.keys().fold(m, |g, &a| g.gcd(&a));
        if g != 1 {
            return Err(Error::NotPrimitive(format!(
                "gcd of multiplicity and exponents is {g}"
            )));
        }
        Ok(PuiseuxBranch { m, y_terms, orientation: Orientation::Standard })
    }

    /// Integer-coefficient shorthand: `from_ints(8, &[(10, 1), (11, 1)])`.
    pub fn from_ints(m: u64, terms: &[(u64, i64)]) -> Result<Self> {
        PuiseuxBranch::new(m, terms.iter().map(|&(a, c)| (a, rat(c))))
    }

    /// Unit-coefficient shorthand: `monic(4, &[6, 7])` is `(u^4, u^6 + u^7)`.
    pub fn monic(m: u64, exponents: &[u64]) -> Result<Self> {
        PuiseuxBranch::new(m, exponents.iter().map(|&a| (a, BigRational::one())))
    }

    /// The smooth branch `(u, 0)`.
    pub fn smooth() -> Self {
        PuiseuxBranch { m: 1, y_terms: BTreeMap::new(), orientation: Orientation::Standard }
    }

    /// The same parametrization with its coordinates exchanged.
    pub fn swapped(mut self) -> Self {
        self.orientation = match self.orientation {
            Orientation::Standard => Orientation::Swapped,
            Orientation::Swapped => Orientation::Standard,
        };
        self
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn y_terms(&self) -> &BTreeMap<u64, BigRational> {
        &self.y_terms
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// The non-power coordinate `Y(u)` as a polynomial in `var`.
    pub fn y_poly(&self, var: Var) -> Polynomial {
        let mut p = Polynomial::zero();
        for (&a, c) in &self.y_terms {
            p = p + Polynomial::term(c.clone(), crate::poly::Monomial::var(var, a as u32));
        }
        p
    }

    /// `(x(u), y(u))` in the variable `var`.
    pub fn coordinates(&self, var: Var) -> (Polynomial, Polynomial) {
        let power = Polynomial::monomial(1, var, self.m as u32);
        match self.orientation {
            Orientation::Standard => (power, self.y_poly(var)),
            Orientation::Swapped => (self.y_poly(var), power),
        }
    }

    /// Coefficient of `u^m` in `Y`, the slope of the tangent line.
    pub fn tangent_coefficient(&self) -> BigRational {
        self.y_terms.get(&self.m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Tangent direction as a projective point `[dx : dy]`.
    pub fn tangent_direction(&self) -> (BigRational, BigRational) {
        let c = self.tangent_coefficient();
        match self.orientation {
            Orientation::Standard => (BigRational::one(), c),
            Orientation::Swapped => (c, BigRational::one()),
        }
    }

    /// Reparametrization `u -> c·u` followed by rescaling `x` so the first
    /// coordinate stays `u^m`. Changes coefficients but not exponents.
    pub fn rescaled(&self, c: &BigRational) -> Result<Self> {
        let mut b = PuiseuxBranch::new(
            self.m,
            self.y_terms.iter().map(|(&a, k)| (a, k * num_traits::pow(c.clone(), a as usize))),
        )?;
        b.orientation = self.orientation;
        Ok(b)
    }

    /// Adds `c·u^a` to the second coordinate.
    pub fn with_term(&self, a: u64, c: BigRational) -> Result<Self> {
        let mut terms = self.y_terms.clone();
        let e = terms.entry(a).or_insert_with(BigRational::zero);
        *e += c;
        let mut b = PuiseuxBranch::new(self.m, terms)?;
        b.orientation = self.orientation;
        Ok(b)
    }
}

/// `Σ c_a u^a` in ascending order, e.g. `u^6 - 2*u^9`.
pub fn ascending_series<'a>(terms: impl IntoIterator<Item = (&'a u64, &'a BigRational)>) -> String {
    let mut out = String::new();
    for (&a, c) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        let sign = match (out.is_empty(), neg) {
            (true, false) => "",
            (true, true) => "-",
            (false, false) => " + ",
            (false, true) => " - ",
        };
        let power = match a {
            0 => String::new(),
            1 => "u".to_string(),
            _ => format!("u^{a}"),
        };
        let coeff = match (mag.is_one(), power.is_empty()) {
            (true, false) => String::new(),
            (_, true) => mag.to_string(),
            (false, false) => format!("{mag}*"),
        };
        out.push_str(&format!("{sign}{coeff}{power}"));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for PuiseuxBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let y = ascending_series(&self.y_terms);
        let x = if self.m == 1 { "u".to_string() } else { format!("u^{}", self.m) };
        match self.orientation {
            Orientation::Standard => write!(f, "({x}, {y})"),
            Orientation::Swapped => write!(f, "({y}, {x})"),
        }
    }
}

/// Characteristic exponents `e_0 = m < e_1 < ...` and running gcds `b_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharExponents {
    pub e: Vec<u64>,
    pub b: Vec<u64>,
}

impl CharExponents {
    /// Validates an exponent sequence and computes its gcd sequence.
    ///
    /// The sequence must be strictly increasing, every entry after the first
    /// must drop the running gcd, and the final gcd must be 1.
    pub fn from_exponents(e: &[u64]) -> Result<Self> {
        let Some(&m) = e.first() else {
            return Err(Error::InvalidBranch("empty exponent sequence".into()));
        };
        if m == 0 {
            return Err(Error::InvalidBranch("multiplicity must be positive".into()));
        }
        let mut b = vec![m];
        for w in e.windows(2) {
            if w[1] <= w[0] {
                return Err(Error::InvalidBranch(format!("exponents {e:?} not increasing")));
            }
            let prev = *b.last().unwrap();
            let g = prev.gcd(&w[1]);
            if g == prev {
                return Err(Error::InvalidBranch(format!(
                    "{} does not lower the gcd {prev}",
                    w[1]
                )));
            }
            b.push(g);
        }
        if *b.last().unwrap() != 1 {
            return Err(Error::NotPrimitive(format!("final gcd of {e:?} is not 1")));
        }
        Ok(CharExponents { e: e.to_vec(), b })
    }

    pub fn m(&self) -> u64 {
        self.e[0]
    }

    pub fn k(&self) -> usize {
        self.e.len()
    }
}

impl fmt::Display for CharExponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.e.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Ascending gcd scan over the exponents of the second coordinate.
///
/// ```
/// use germs::puiseux::{characteristic_exponents, PuiseuxBranch};
/// let b = PuiseuxBranch::monic(8, &[12, 14, 15]).unwrap();
/// assert_eq!(characteristic_exponents(&b).unwrap().e, vec![8, 12, 14, 15]);
/// ```
pub fn characteristic_exponents(branch: &PuiseuxBranch) -> Result<CharExponents> {
    scan_exponents(branch.m, branch.y_terms.keys().copied())
}

/// The same scan over an arbitrary ascending exponent support.
pub fn scan_exponents(m: u64, support: impl IntoIterator<Item = u64>) -> Result<CharExponents> {
    let mut e = vec![m];
    let mut b = vec![m];
    let mut cur = m;
    for a in support {
        if cur == 1 {
            break;
        }
        let g = cur.gcd(&a);
        if g < cur {
            e.push(a);
            b.push(g);
            cur = g;
        }
    }
    if cur != 1 {
        return Err(Error::NotPrimitive(format!("gcd stalls at {cur}")));
    }
    debug_assert!(e.len() <= sigma(m) + 1);
    Ok(CharExponents { e, b })
}

pub fn count_exponents(branch: &PuiseuxBranch) -> Result<usize> {
    Ok(characteristic_exponents(branch)?.k())
}

/// A finite union of pairwise distinct branches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneCurveGerm {
    branches: Vec<PuiseuxBranch>,
}

impl PlaneCurveGerm {
    pub fn new(branches: Vec<PuiseuxBranch>) -> Result<Self> {
        if branches.is_empty() {
            return Err(Error::InvalidBranch("a curve needs at least one branch".into()));
        }
        for (i, a) in branches.iter().enumerate() {
            if branches[..i].contains(a) {
                return Err(Error::InvalidBranch(format!("branch {a} listed twice")));
            }
        }
        Ok(PlaneCurveGerm { branches })
    }

    pub fn branches(&self) -> &[PuiseuxBranch] {
        &self.branches
    }

    pub fn multiplicity(&self) -> u64 {
        self.branches.iter().map(PuiseuxBranch::m).sum()
    }
}

impl From<PuiseuxBranch> for PlaneCurveGerm {
    fn from(b: PuiseuxBranch) -> Self {
        PlaneCurveGerm { branches: vec![b] }
    }
}

impl fmt::Display for PlaneCurveGerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.branches.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" ∪ "))
    }
}
