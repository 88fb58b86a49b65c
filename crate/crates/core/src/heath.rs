//! Every even perfect number other than 6 is the sum of the first
//! n = 2^((p−1)/2) consecutive odd cubes, because
//! 1³ + 3³ + ⋯ + (2n−1)³ = n²(2n² − 1) and N = 2^(p−1)(2^p − 1)
//! factors as exactly that with n a power of two.

use crate::arith::{cube, pow, Natural};
use crate::error::{Error, Result};
use crate::perfect::EvenPerfect;
use num_traits::One;

/// Exponent cap for materializing the base list: explicit up to n = 2^20.
pub const EXPLICIT_LIMIT_LOG2: u32 = 20;

/// The base list [1, 3, …, 2n−1], held explicitly only at desk scale.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HeathBases {
    Explicit(Vec<Natural>),
    /// n exceeds 2^20; the decomposition is carried by n alone.
    Implicit,
}

/// An even perfect number written as the sum of the first n odd cubes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeathDecomposition {
    target: Natural,
    n: Natural,
    bases: HeathBases,
}

impl HeathDecomposition {
    pub fn target(&self) -> &Natural {
        &self.target
    }

    /// The count of odd cubes, n = 2^((p−1)/2).
    pub fn n(&self) -> &Natural {
        &self.n
    }

    pub fn bases(&self) -> &HeathBases {
        &self.bases
    }

    pub fn is_explicit(&self) -> bool {
        matches!(self.bases, HeathBases::Explicit(_))
    }
}

/// Decomposes N = 2^(p−1)(2^p − 1) into consecutive odd cubes starting
/// at 1. Rejects p = 2: the theorem excludes 6, and (p−1)/2 must be
/// integral.
pub fn heath_decompose(n: &EvenPerfect) -> Result<HeathDecomposition> {
    let p = n.p();
    if p == 2 {
        return Err(Error::SixExcluded);
    }
    let half = (p - 1) / 2;
    let count = pow(&Natural::from(2u32), half as u64);

    // Closed form n²(2n²−1) must reproduce N; anything else is a bug.
    let closed = &count * &count * ((&count * &count) * 2u32 - 1u32);
    assert_eq!(
        &closed,
        n.value(),
        "odd-cube closed form failed for p = {p}"
    );

    let bases = if half <= EXPLICIT_LIMIT_LOG2 {
        let terms = 1u64 << half;
        HeathBases::Explicit((1..=terms).map(|i| Natural::from(2 * i - 1)).collect())
    } else {
        HeathBases::Implicit
    };

    Ok(HeathDecomposition {
        target: n.value().clone(),
        n: count,
        bases,
    })
}

/// Literal check of 1³ + 3³ + ⋯ + (2n−1)³ = n²(2n²−1), summing term by
/// term. Runs in u128 when the sum fits, exact big integers otherwise.
pub fn odd_cube_identity_check(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    if n <= 1 << 30 {
        odd_cube_identity_u128(n)
    } else {
        odd_cube_identity_big(n)
    }
}

/// Largest term (2n−1)³ < 2^93 and there are ≤ 2^30 of them, so the sum
/// stays below 2^123.
fn odd_cube_identity_u128(n: u64) -> bool {
    let mut sum: u128 = 0;
    for i in 1..=n as u128 {
        let odd = 2 * i - 1;
        sum += odd * odd * odd;
    }
    let n = n as u128;
    sum == n * n * (2 * n * n - 1)
}

fn odd_cube_identity_big(n: u64) -> bool {
    let mut sum = Natural::from(0u32);
    let mut i = Natural::one();
    let n = Natural::from(n);
    while i <= n {
        sum += cube(&(&i * 2u32 - 1u32));
        i += 1u32;
    }
    sum == &n * &n * ((&n * &n) * 2u32 - 1u32)
}
