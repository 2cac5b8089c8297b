//! Prime factorizations, nested divisor chains and the `σ` function.

use crate::error::{Error, Result};

/// Prime powers in strictly increasing prime order; empty for 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub prime_powers: Vec<(u64, u32)>,
}

impl Factorization {
    /// The primes with multiplicity, ascending.
    pub fn primes(&self) -> Vec<u64> {
        self.prime_powers
            .iter()
            .flat_map(|&(p, a)| std::iter::repeat_n(p, a as usize))
            .collect()
    }

    pub fn value(&self) -> u64 {
        self.prime_powers.iter().map(|&(p, a)| p.pow(a)).product()
    }
}

/// A chain `m = d_0 > d_1 > ... > d_s = 1` where each term divides the previous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorChain {
    pub divisors: Vec<u64>,
}

impl DivisorChain {
    pub fn is_valid(&self) -> bool {
        let d = &self.divisors;
        d.last() == Some(&1) && d.windows(2).all(|w| w[0] > w[1] && w[0] % w[1] == 0)
    }
}

pub fn factorize(m: u64) -> Factorization {
    let mut n = m;
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        let mut a = 0;
        while n.is_multiple_of(p) {
            n /= p;
            a += 1;
        }
        if a > 0 {
            out.push((p, a));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    Factorization { prime_powers: out }
}

/// Longest nested divisor chain length of `m`: 1 for `m = 1`, otherwise the
/// number of prime factors counted with multiplicity.
///
/// ```
/// assert_eq!(germs::arith::sigma(30), 3);
/// assert_eq!(germs::arith::sigma(36), 4);
/// ```
pub fn sigma(m: u64) -> usize {
    if m <= 1 {
        return 1;
    }
    factorize(m).prime_powers.iter().map(|&(_, a)| a as usize).sum()
}

pub fn is_prime(m: u64) -> bool {
    m >= 2 && factorize(m).prime_powers == [(m, 1)]
}

/// Checks `2 <= k <= σ(m) + 1`.
pub(crate) fn check_k(m: u64, k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::KTooSmall { m, k });
    }
    let max = sigma(m) + 1;
    if k > max {
        return Err(Error::KTooLarge { m, k, max });
    }
    Ok(())
}

/// The chain used by the minimal normal forms: `d_i` is the product of the
/// `(k-1) - i` smallest primes of `m`, counted with multiplicity.
pub fn minimal_divisor_chain(m: u64, k: usize) -> Result<DivisorChain> {
    if m < 2 {
        return Err(Error::KTooLarge { m, k, max: 1 });
    }
    check_k(m, k)?;
    let primes = factorize(m).primes();
    let mut divisors = vec![m];
    for i in 1..k - 1 {
        divisors.push(primes[..(k - 1) - i].iter().product());
    }
    divisors.push(1);
    Ok(DivisorChain { divisors })
}
