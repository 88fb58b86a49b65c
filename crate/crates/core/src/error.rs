use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// The exponent itself is not prime, so 2^p - 1 cannot be a Mersenne prime.
    #[error("p = {0} is not prime")]
    CompositeExponent(u32),

    /// The exponent is prime but 2^p - 1 is composite.
    #[error("2^{0} - 1 is not prime")]
    CompositeMersenne(u32),

    /// p = 2 (N = 6) is excluded from every cube decomposition here.
    #[error("p = 2 (N = 6) is excluded from cube decompositions")]
    SixExcluded,

    /// classify only supports 1 <= n < 2^64.
    #[error("n = {0} is outside the supported range [1, 2^64)")]
    ClassifyRange(String),

    /// Trial division hit the divisor-scan limit before fully factoring n.
    #[error("divisor scan limit {limit} exceeded while factoring {n}")]
    DivisorScanExceeded { n: u64, limit: u64 },

    /// A search target exceeds the desk-scale bound and force was not set.
    #[error("target {target} exceeds the {k}-cube search bound 2^{bound_log2} (the force option overrides)")]
    SearchBoundExceeded {
        target: String,
        k: u8,
        bound_log2: u32,
    },

    /// A conjecture scan failed for one specific exponent.
    #[error("p = {p}: {source}")]
    ScanExponent { p: u32, source: Box<Error> },

    /// A record field did not parse as an exact decimal integer.
    #[error("field `{field}`: invalid decimal string {value:?}")]
    InvalidDecimal { field: String, value: String },

    /// The base list of a Heath decomposition is implicit (too large to list).
    #[error("heath bases for p = {p} are implicit (n = 2^{log2_n} exceeds the explicit limit 2^{limit_log2})")]
    HeathImplicit {
        p: u32,
        log2_n: u32,
        limit_log2: u32,
    },

    /// A serialized record stream could not be parsed.
    #[error("malformed {format} record on line {line}: {msg}")]
    MalformedRecord {
        format: &'static str,
        line: usize,
        msg: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
