//! Exact big-integer helpers: integer cube root, perfect-cube testing and
//! exact exponentiation. Everything here is pure and allocation-only:
//! no floating point, no silent overflow at any magnitude.

use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};

/// Arbitrary-precision nonnegative integer, the universal value type.
pub type Natural = BigUint;

/// Floor of the cube root: the unique r with r³ ≤ x < (r+1)³.
///
/// Newton iteration seeded from the bit length, descending monotonically,
/// with a floor-correcting final step. `icbrt(0) = 0`.
pub fn icbrt(x: &Natural) -> Natural {
    if x.is_zero() {
        return Natural::zero();
    }
    // 2^ceil(bits/3) >= x^(1/3), so the iteration descends onto the root.
    let mut r: Natural = Natural::one() << x.bits().div_ceil(3);
    loop {
        let next = (&r * 2u32 + x / (&r * &r)) / 3u32;
        if next >= r {
            break;
        }
        r = next;
    }
    while cube(&r) > *x {
        r -= 1u32;
    }
    loop {
        let up = &r + 1u32;
        if cube(&up) <= *x {
            r = up;
        } else {
            break;
        }
    }
    r
}

/// The cube root r when x = r³ exactly, otherwise `None`.
pub fn is_perfect_cube(x: &Natural) -> Option<Natural> {
    let r = icbrt(x);
    (cube(&r) == *x).then_some(r)
}

/// Exact base^exp. `pow(x, 0) = 1` for every x, including 0.
pub fn pow(base: &Natural, exp: u64) -> Natural {
    Pow::pow(base, exp)
}

/// x³ without intermediate clones beyond the two multiplies.
pub fn cube(x: &Natural) -> Natural {
    x * x * x
}

/// Floor cube root on u128, the fast path used by the search engines.
///
/// Requires x < 2^126 so the correction steps can cube without overflow.
pub(crate) fn icbrt_u128(x: u128) -> u128 {
    debug_assert!(x < 1 << 126);
    if x == 0 {
        return 0;
    }
    let mut r = (x as f64).cbrt() as u128;
    // f64 seeding is within a few ulps; correct down then up.
    while r > 0 && r * r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}
