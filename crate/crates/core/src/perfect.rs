//! Even perfect numbers via the Euclid–Euler characterization:
//! N = 2^(p−1)(2^p − 1) is perfect exactly when p and 2^p − 1 are both
//! prime. Primality of the exponent is settled by trial division (the
//! exponents stay tiny); primality of 2^p − 1 by the Lucas–Lehmer test.

use crate::arith::{pow, Natural};
use crate::error::{Error, Result};
use num_traits::Zero;
use rayon::prelude::*;

/// Residue class of a Mersenne exponent mod 6. Every prime p > 3 lands in
/// one of the two 6k classes; p = 2 and p = 3 are the special base cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ResidueClass {
    SpecialP2,
    SpecialP3,
    OneModSix { k: u32 },
    FiveModSix { k: u32 },
}

/// A prime p for which 2^p − 1 is also prime, tagged with its residue
/// class mod 6. Both primality conditions are verified at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MersenneExponent {
    p: u32,
    residue: ResidueClass,
}

impl MersenneExponent {
    /// Validates both primality conditions and tags the residue class.
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime_u64(p as u64) {
            return Err(Error::CompositeExponent(p));
        }
        if !lucas_lehmer(p)? {
            return Err(Error::CompositeMersenne(p));
        }
        let residue = match p {
            2 => ResidueClass::SpecialP2,
            3 => ResidueClass::SpecialP3,
            _ => match p % 6 {
                1 => ResidueClass::OneModSix { k: (p - 1) / 6 },
                5 => ResidueClass::FiveModSix { k: (p - 5) / 6 },
                _ => unreachable!("prime p > 3 is 1 or 5 mod 6"),
            },
        };
        Ok(Self { p, residue })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn residue_class(&self) -> ResidueClass {
        self.residue
    }

    /// The k with p = 6k+1 or p = 6k+5; `None` for the special cases 2, 3.
    pub fn k(&self) -> Option<u32> {
        match self.residue {
            ResidueClass::OneModSix { k } | ResidueClass::FiveModSix { k } => Some(k),
            _ => None,
        }
    }
}

/// An even perfect number N = 2^(p−1)(2^p − 1) paired with its exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenPerfect {
    exponent: MersenneExponent,
    value: Natural,
}

impl EvenPerfect {
    pub fn exponent(&self) -> &MersenneExponent {
        &self.exponent
    }

    pub fn value(&self) -> &Natural {
        &self.value
    }

    pub fn p(&self) -> u32 {
        self.exponent.p
    }
}

/// N = 2^(p−1)(2^p − 1), exact at every magnitude.
pub fn even_perfect(exponent: &MersenneExponent) -> EvenPerfect {
    let two = Natural::from(2u32);
    let p = exponent.p as u64;
    let value = pow(&two, p - 1) * (pow(&two, p) - 1u32);
    EvenPerfect {
        exponent: *exponent,
        value,
    }
}

/// Lucas–Lehmer: 2^p − 1 is prime iff s_{p−2} ≡ 0 (mod 2^p − 1), where
/// s₀ = 4 and s_{i+1} = s_i² − 2. Requires p prime; p = 2 is hardcoded.
pub fn lucas_lehmer(p: u32) -> Result<bool> {
    if p < 2 || !is_prime_u64(p as u64) {
        return Err(Error::CompositeExponent(p));
    }
    if p == 2 {
        return Ok(true);
    }
    let m = pow(&Natural::from(2u32), p as u64) - 1u32;
    let mut s = Natural::from(4u32);
    for _ in 0..p - 2 {
        // s² − 2 mod m, kept nonnegative by adding m before subtracting.
        s = (&s * &s + &m - 2u32) % &m;
    }
    Ok(s.is_zero())
}

/// All valid Mersenne exponents p ≤ bound, ascending. Candidates are
/// tested concurrently; the returned order is deterministic.
pub fn mersenne_exponents_up_to(bound: u32) -> Vec<MersenneExponent> {
    (2..=bound)
        .filter(|&p| is_prime_u64(p as u64))
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter_map(|p| MersenneExponent::new(p).ok())
        .collect()
}

/// Nicomachus's classification by aliquot sum (sum of proper divisors).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Deficient,
    Perfect,
    Abundant,
}

/// Classifies n by comparing its aliquot sum to n. Supports 1 ≤ n < 2^64;
/// `scan_limit` caps the trial divisors examined while factoring.
pub fn classify(n: &Natural, scan_limit: u64) -> Result<Classification> {
    if n.is_zero() || n.bits() > 64 {
        return Err(Error::ClassifyRange(n.to_string()));
    }
    let n: u64 = n
        .try_into()
        .map_err(|_| Error::ClassifyRange(n.to_string()))?;
    let sigma = sigma_u64(n, scan_limit)?;
    let aliquot = sigma - n as u128;
    Ok(match aliquot.cmp(&(n as u128)) {
        std::cmp::Ordering::Less => Classification::Deficient,
        std::cmp::Ordering::Equal => Classification::Perfect,
        std::cmp::Ordering::Greater => Classification::Abundant,
    })
}

/// σ(n), the sum of all divisors, from the prime factorization.
fn sigma_u64(n: u64, scan_limit: u64) -> Result<u128> {
    let mut remaining = n;
    let mut sigma: u128 = 1;
    let mut d: u64 = 2;
    while d as u128 * d as u128 <= remaining as u128 {
        if d > scan_limit {
            return Err(Error::DivisorScanExceeded {
                n,
                limit: scan_limit,
            });
        }
        if remaining.is_multiple_of(d) {
            let mut term: u128 = 1;
            let mut power: u128 = 1;
            while remaining.is_multiple_of(d) {
                remaining /= d;
                power *= d as u128;
                term += power;
            }
            sigma *= term;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if remaining > 1 {
        sigma *= 1 + remaining as u128;
    }
    Ok(sigma)
}

/// Deterministic trial-division primality for machine-sized integers.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d as u128 * d as u128 <= n as u128 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}
