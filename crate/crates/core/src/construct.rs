//! Constructive 5-cube decompositions of even perfect numbers, branching
//! on the exponent's residue class mod 6:
//!
//! * p = 3: 28 = 1³ + 3³ directly.
//! * p = 6k+1: N = 2^(6k)(2^(6k+1) − 1) and 2n⁶ − 2 = a³ + b³ with
//!   n = 2^k, a = n²+n−1, b = n²−n−1 gives three cubes.
//! * p = 6k+5: peeling 64 = 3³ + 3³ + 2³ + 2 off 2^(6k+6) first, then
//!   applying the same pair identity to the leftover 2·2^(6k) − 2,
//!   gives five cubes.
//!
//! Intermediates are signed: b < 0 at n ∈ {0, 1}. Only the final bases
//! are naturals.

use crate::arith::{cube, pow, Natural};
use crate::error::{Error, Result};
use crate::perfect::{EvenPerfect, ResidueClass};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// The pair (a, b) = (n²+n−1, n²−n−1) with a³ + b³ = 2n⁶ − 2, checked at
/// construction over signed integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityPair {
    n: Natural,
    a: BigInt,
    b: BigInt,
}

impl IdentityPair {
    pub fn n(&self) -> &Natural {
        &self.n
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }
}

/// Builds the identity pair for n and verifies a³ + b³ = 2n⁶ − 2.
pub fn identity_pair(n: &Natural) -> IdentityPair {
    let ni = BigInt::from(n.clone());
    let n_sq = &ni * &ni;
    let a = &n_sq + &ni - BigInt::one();
    let b = &n_sq - &ni - BigInt::one();
    let lhs = &a * &a * &a + &b * &b * &b;
    let rhs = pow_int(&ni, 6) * 2 - 2;
    assert_eq!(lhs, rhs, "pair identity failed at n = {n}");
    IdentityPair { n: n.clone(), a, b }
}

fn pow_int(base: &BigInt, exp: u32) -> BigInt {
    num_traits::Pow::pow(base, exp)
}

/// Which route produced a decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecompositionKind {
    Heath,
    ConstructiveCaseP3,
    ConstructiveCase1,
    ConstructiveCase2,
    Searched,
}

impl DecompositionKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            DecompositionKind::Heath => "heath",
            DecompositionKind::ConstructiveCaseP3 => "constructive_case_p3",
            DecompositionKind::ConstructiveCase1 => "constructive_case1",
            DecompositionKind::ConstructiveCase2 => "constructive_case2",
            DecompositionKind::Searched => "searched",
        }
    }
}

impl std::fmt::Display for DecompositionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for DecompositionKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(match s {
            "heath" => DecompositionKind::Heath,
            "constructive_case_p3" => DecompositionKind::ConstructiveCaseP3,
            "constructive_case1" => DecompositionKind::ConstructiveCase1,
            "constructive_case2" => DecompositionKind::ConstructiveCase2,
            "searched" => DecompositionKind::Searched,
            other => return Err(format!("unknown decomposition kind {other:?}")),
        })
    }
}

/// A target written as the sum of exactly five cubes of naturals, padded
/// with zeros where the construction needs fewer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeDecomposition {
    target: Natural,
    bases: Vec<Natural>,
    kind: DecompositionKind,
    nonzero_count: u32,
    cancelled_pair: bool,
}

impl CubeDecomposition {
    fn new(
        target: Natural,
        mut bases: Vec<Natural>,
        kind: DecompositionKind,
        cancelled_pair: bool,
    ) -> Self {
        bases.sort();
        let nonzero_count = bases.iter().filter(|b| !b.is_zero()).count() as u32;
        let d = Self {
            target,
            bases,
            kind,
            nonzero_count,
            cancelled_pair,
        };
        assert!(d.verify(), "cube sum does not reach the target");
        d
    }

    pub fn target(&self) -> &Natural {
        &self.target
    }

    /// Exactly five bases, ascending, zeros allowed.
    pub fn bases(&self) -> &[Natural] {
        &self.bases
    }

    pub fn kind(&self) -> DecompositionKind {
        self.kind
    }

    pub fn nonzero_count(&self) -> u32 {
        self.nonzero_count
    }

    /// True when the p = 5 boundary cancelled the ±2^(2k+1) cube pair.
    pub fn cancelled_pair(&self) -> bool {
        self.cancelled_pair
    }

    /// Re-sums the cubes with fresh arithmetic.
    pub fn verify(&self) -> bool {
        self.bases.iter().map(cube).sum::<Natural>() == self.target
    }
}

/// Decomposes an even perfect number other than 6 into at most five
/// cubes, by the residue-class construction. Every returned value has
/// exactly five bases (zero-padded) and passes `verify`.
pub fn constructive_decompose(n: &EvenPerfect) -> Result<CubeDecomposition> {
    let zero = Natural::from(0u32);
    let two = Natural::from(2u32);
    match n.exponent().residue_class() {
        ResidueClass::SpecialP2 => Err(Error::SixExcluded),
        ResidueClass::SpecialP3 => {
            // 28 = 1³ + 3³, padded.
            Ok(CubeDecomposition::new(
                n.value().clone(),
                vec![
                    zero.clone(),
                    zero.clone(),
                    zero,
                    Natural::from(1u32),
                    Natural::from(3u32),
                ],
                DecompositionKind::ConstructiveCaseP3,
                false,
            ))
        }
        ResidueClass::OneModSix { k } => {
            // N = (2^(2k)a)³ + (2^(2k)b)³ + (2^(2k))³; k >= 1 so b >= 1.
            let pair = identity_pair(&pow(&two, k as u64));
            let scale = pow(&two, 2 * k as u64);
            let a = pair.a().magnitude().clone();
            let b = pair.b().magnitude().clone();
            debug_assert!(pair.b().is_positive());
            Ok(CubeDecomposition::new(
                n.value().clone(),
                vec![&scale * a, &scale * b, scale, zero.clone(), zero],
                DecompositionKind::ConstructiveCase1,
                false,
            ))
        }
        ResidueClass::FiveModSix { k } => {
            // N = (3·2^(4k+1))³ + (3·2^(4k+1))³ + (2·2^(4k+1))³
            //   + (2^(2k+1)a)³ + (2^(2k+1)b)³.
            let pair = identity_pair(&pow(&two, k as u64));
            let t = pow(&two, 4 * k as u64 + 1);
            let u = pow(&two, 2 * k as u64 + 1);
            let mut bases = vec![&t * 3u32, &t * 3u32, &t * 2u32];
            let cancelled = pair.b().is_negative();
            if cancelled {
                // Only k = 0 lands here: (a, b) = (1, −1), so the two
                // remaining terms are ±(2^(2k+1))³ and cancel exactly.
                debug_assert!(pair.a().is_one());
                bases.push(zero.clone());
                bases.push(zero);
            } else {
                bases.push(&u * pair.a().magnitude());
                bases.push(&u * pair.b().magnitude());
            }
            Ok(CubeDecomposition::new(
                n.value().clone(),
                bases,
                DecompositionKind::ConstructiveCase2,
                cancelled,
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perfect::{even_perfect, mersenne_exponents_up_to, MersenneExponent};

    fn perfect(p: u32) -> EvenPerfect {
        even_perfect(&MersenneExponent::new(p).unwrap())
    }

    fn base_u64s(d: &CubeDecomposition) -> Vec<u64> {
        d.bases().iter().map(|b| b.try_into().unwrap()).collect()
    }

    #[test]
    fn identity_pair_edge_cases() {
        let p = identity_pair(&Natural::from(1u32));
        assert_eq!(p.a(), &BigInt::from(1));
        assert_eq!(p.b(), &BigInt::from(-1));

        let p = identity_pair(&Natural::from(2u32));
        assert_eq!((p.a(), p.b()), (&BigInt::from(5), &BigInt::from(1)));

        let p = identity_pair(&Natural::from(4u32));
        assert_eq!((p.a(), p.b()), (&BigInt::from(19), &BigInt::from(11)));
        // 6859 + 1331 = 8190 = 2·4096 − 2
        assert_eq!(19i64 * 19 * 19 + 11 * 11 * 11, 2 * 4096 - 2);
    }

    #[test]
    fn identity_pair_zero() {
        let p = identity_pair(&Natural::from(0u32));
        assert_eq!((p.a(), p.b()), (&BigInt::from(-1), &BigInt::from(-1)));
    }

    #[test]
    fn case1_p7() {
        let d = constructive_decompose(&perfect(7)).unwrap();
        assert_eq!(base_u64s(&d), [0, 0, 4, 4, 20]);
        assert_eq!(d.kind(), DecompositionKind::ConstructiveCase1);
        assert_eq!(d.nonzero_count(), 3);
        assert!(!d.cancelled_pair());
    }

    #[test]
    fn case1_p13() {
        let d = constructive_decompose(&perfect(13)).unwrap();
        assert_eq!(base_u64s(&d), [0, 0, 16, 176, 304]);
        assert_eq!(d.kind(), DecompositionKind::ConstructiveCase1);
        assert_eq!(d.nonzero_count(), 3);
    }

    #[test]
    fn case2_boundary_p5_cancels() {
        let d = constructive_decompose(&perfect(5)).unwrap();
        assert_eq!(base_u64s(&d), [0, 0, 4, 6, 6]);
        assert_eq!(d.kind(), DecompositionKind::ConstructiveCase2);
        assert_eq!(d.nonzero_count(), 3);
        assert!(d.cancelled_pair());
    }

    #[test]
    fn case2_p17() {
        let d = constructive_decompose(&perfect(17)).unwrap();
        assert_eq!(base_u64s(&d), [352, 608, 1024, 1536, 1536]);
        assert_eq!(d.kind(), DecompositionKind::ConstructiveCase2);
        assert_eq!(d.nonzero_count(), 5);
        assert!(!d.cancelled_pair());
        // 2·1536³ + 1024³ + 608³ + 352³ = 8589869056 by direct summation
        let sum: u64 = [352u64, 608, 1024, 1536, 1536]
            .iter()
            .map(|b| b * b * b)
            .sum();
        assert_eq!(sum, 8589869056);
    }

    #[test]
    fn p3_base_case() {
        let d = constructive_decompose(&perfect(3)).unwrap();
        assert_eq!(base_u64s(&d), [0, 0, 0, 1, 3]);
        assert_eq!(d.kind(), DecompositionKind::ConstructiveCaseP3);
        assert_eq!(d.nonzero_count(), 2);
    }

    #[test]
    fn p2_rejected() {
        assert!(matches!(
            constructive_decompose(&perfect(2)),
            Err(Error::SixExcluded)
        ));
    }

    #[test]
    fn all_desk_scale_exponents_verify() {
        for e in mersenne_exponents_up_to(130) {
            if e.p() == 2 {
                continue;
            }
            let n = even_perfect(&e);
            let d = constructive_decompose(&n).unwrap();
            assert!(d.verify(), "p = {}", e.p());
            assert_eq!(d.bases().len(), 5);
            // Kind tracks the residue class.
            match e.p() % 6 {
                1 => assert_eq!(d.kind(), DecompositionKind::ConstructiveCase1),
                5 => assert_eq!(d.kind(), DecompositionKind::ConstructiveCase2),
                _ => assert_eq!(e.p(), 3),
            }
            if d.kind() == DecompositionKind::ConstructiveCase1 {
                assert_eq!(d.nonzero_count(), 3, "p = {}", e.p());
            }
        }
    }

    #[test]
    fn kind_strings_round_trip() {
        use std::str::FromStr;
        for kind in [
            DecompositionKind::Heath,
            DecompositionKind::ConstructiveCaseP3,
            DecompositionKind::ConstructiveCase1,
            DecompositionKind::ConstructiveCase2,
            DecompositionKind::Searched,
        ] {
            let s = kind.to_string();
            assert_eq!(DecompositionKind::from_str(&s).unwrap(), kind);
            // serde and Display agree on the wire name
            assert_eq!(serde_json::to_string(&kind).unwrap(), format!("{s:?}"));
        }
        assert_eq!(
            DecompositionKind::ConstructiveCaseP3.as_str(),
            "constructive_case_p3"
        );
        assert_eq!(
            DecompositionKind::ConstructiveCase1.as_str(),
            "constructive_case1"
        );
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn pair_identity_holds(n in 0u64..100_000) {
                let n = Natural::from(n);
                let pair = identity_pair(&n); // asserts internally
                let ni = BigInt::from(n);
                prop_assert_eq!(pair.a() + pair.b(), (&ni * &ni) * 2 - 2);
            }
        }
    }
}
