//! Shared inputs for the benchmark suite.

use perfect_cubes::{even_perfect, mersenne_exponents_up_to, EvenPerfect};

/// The perfect numbers whose 3-cube searches stay desk-scale.
pub fn searchable_perfects() -> Vec<EvenPerfect> {
    mersenne_exponents_up_to(19)
        .iter()
        .filter(|e| e.p() != 2)
        .map(even_perfect)
        .collect()
}

/// One large perfect number for big-integer benchmarks.
pub fn large_perfect() -> EvenPerfect {
    let e = mersenne_exponents_up_to(130)
        .into_iter()
        .next_back()
        .expect("127 is in range");
    even_perfect(&e)
}
