//! Even perfect numbers and their cube decompositions.
//!
//! Everything orbits one chain of classical facts: an even number is
//! perfect exactly when it has the shape 2^(p−1)(2^p − 1) with 2^p − 1
//! prime (Euclid and Euler), every such number past 6 is a sum of
//! consecutive odd cubes (Heath), and a short identity compresses that
//! sum to at most five cubes. Whether three cubes always suffice is
//! open; the `search` module checks it exhaustively at desk scale.
//!
//! Modules:
//!
//! * [`arith`]: exact big-integer helpers (cube, integer cube root).
//! * [`perfect`]: Lucas-Lehmer testing, perfect number construction,
//!   deficient/perfect/abundant classification.
//! * [`heath`]: the consecutive-odd-cube decomposition.
//! * [`construct`]: the five-cube construction, split by p mod 6.
//! * [`search`]: exhaustive 2- and 3-cube representation search.
//! * [`records`]: verification and JSONL/CSV persistence of results.
//!
//! All numbers are naturals (0 included); nothing here touches signed
//! cube representations.

pub mod arith;
pub mod construct;
pub mod error;
pub mod heath;
pub mod perfect;
pub mod records;
pub mod search;

pub use arith::{cube, icbrt, is_perfect_cube, pow, Natural};
pub use construct::{
    constructive_decompose, identity_pair, CubeDecomposition, DecompositionKind, IdentityPair,
};
pub use error::{Error, Result};
pub use heath::{
    heath_decompose, odd_cube_identity_check, HeathBases, HeathDecomposition, EXPLICIT_LIMIT_LOG2,
};
pub use perfect::{
    classify, even_perfect, lucas_lehmer, mersenne_exponents_up_to, Classification, EvenPerfect,
    MersenneExponent, ResidueClass,
};
pub use records::{emit, parse, DecompositionRecord, RecordFormat};
pub use search::{
    conjecture_scan, conjecture_scan_with, search_three_cubes, search_three_cubes_with,
    search_two_cubes, search_two_cubes_with, ProgressFn, Representation, ScanEntry, SearchOptions,
    SearchReport, THREE_CUBE_BOUND_LOG2, TWO_CUBE_BOUND_LOG2,
};
