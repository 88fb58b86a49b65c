//! Flat, precision-safe record format for decomposition results.
//!
//! Every integer travels as a decimal string: N outgrows u64 at p = 37
//! and loses double-precision exactness at p = 19, so native numbers in
//! JSON or CSV would silently corrupt downstream. Two wire formats,
//! JSONL and CSV, with byte-stable output and full round-tripping.

use crate::arith::{cube, Natural};
use crate::construct::{CubeDecomposition, DecompositionKind};
use crate::error::{Error, Result};
use crate::heath::{HeathBases, HeathDecomposition, EXPLICIT_LIMIT_LOG2};
use crate::search::Representation;
use num_traits::Num;
use serde::{Deserialize, Serialize};

/// One decomposition, ready for the wire. `bases` length varies by
/// source: five for constructive records, three for table and search
/// rows, 2^((p−1)/2) for explicit Heath records.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionRecord {
    pub p: u32,
    #[serde(rename = "N")]
    pub n: String,
    pub kind: DecompositionKind,
    pub bases: Vec<String>,
    pub nonzero_count: u32,
    pub cancelled_pair: bool,
    pub verified: bool,
}

impl DecompositionRecord {
    /// Builds a record and sets `verified` by re-parsing its own strings
    /// and re-summing, so the flag never leans on the producer's word.
    pub fn from_bases(
        p: u32,
        target: &Natural,
        bases: &[Natural],
        kind: DecompositionKind,
        cancelled_pair: bool,
    ) -> Self {
        let bases: Vec<String> = bases.iter().map(|b| b.to_string()).collect();
        let nonzero_count = bases.iter().filter(|b| *b != "0").count() as u32;
        let mut record = DecompositionRecord {
            p,
            n: target.to_string(),
            kind,
            bases,
            nonzero_count,
            cancelled_pair,
            verified: false,
        };
        record.verified = record
            .verify()
            .expect("freshly stringified naturals parse back");
        record
    }

    pub fn from_cube(p: u32, d: &CubeDecomposition) -> Self {
        Self::from_bases(p, d.target(), d.bases(), d.kind(), d.cancelled_pair())
    }

    /// Heath records need the explicit base list; implicit decompositions
    /// (p > 41) are rejected rather than truncated.
    pub fn from_heath(p: u32, d: &HeathDecomposition) -> Result<Self> {
        match d.bases() {
            HeathBases::Explicit(bases) => Ok(Self::from_bases(
                p,
                d.target(),
                bases,
                DecompositionKind::Heath,
                false,
            )),
            HeathBases::Implicit => Err(Error::HeathImplicit {
                p,
                log2_n: (p - 1) / 2,
                limit_log2: EXPLICIT_LIMIT_LOG2,
            }),
        }
    }

    pub fn from_representation(p: u32, target: &Natural, r: &Representation) -> Self {
        Self::from_bases(p, target, r.bases(), DecompositionKind::Searched, false)
    }

    /// True iff Σ bases³ = N by fresh big-integer arithmetic on the
    /// stored strings. Parse failures name the offending field; decimal
    /// strings must have no leading zeros (the literal "0" aside).
    pub fn verify(&self) -> Result<bool> {
        let n = parse_decimal("N", &self.n)?;
        let mut sum = Natural::from(0u32);
        for (i, b) in self.bases.iter().enumerate() {
            sum += cube(&parse_decimal(&format!("bases[{i}]"), b)?);
        }
        Ok(sum == n)
    }
}

fn parse_decimal(field: &str, value: &str) -> Result<Natural> {
    let malformed = || Error::InvalidDecimal {
        field: field.to_string(),
        value: value.to_string(),
    };
    if value.is_empty()
        || (value.len() > 1 && value.starts_with('0'))
        || !value.bytes().all(|b| b.is_ascii_digit())
    {
        return Err(malformed());
    }
    Natural::from_str_radix(value, 10).map_err(|_| malformed())
}

/// Wire format selector for `emit` and `parse`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecordFormat {
    Jsonl,
    Csv,
}

const CSV_HEADER: &str = "p,N,kind,bases,nonzero_count,cancelled_pair,verified";

/// Serializes records: one line per record, LF endings, UTF-8. JSONL has
/// no header; CSV leads with one. An empty JSONL list is an empty
/// stream; an empty CSV list is header-only. The bases column is joined
/// by "+" inside one quoted CSV field.
pub fn emit(records: &[DecompositionRecord], format: RecordFormat) -> String {
    let mut out = String::new();
    match format {
        RecordFormat::Jsonl => {
            for r in records {
                out.push_str(&serde_json::to_string(r).expect("record serializes"));
                out.push('\n');
            }
        }
        RecordFormat::Csv => {
            out.push_str(CSV_HEADER);
            out.push('\n');
            for r in records {
                out.push_str(&format!(
                    "{},{},{},\"{}\",{},{},{}\n",
                    r.p,
                    r.n,
                    r.kind,
                    r.bases.join("+"),
                    r.nonzero_count,
                    r.cancelled_pair,
                    r.verified
                ));
            }
        }
    }
    out
}

/// Inverse of `emit`. Malformed input is reported with its line number;
/// CSV must open with the exact header.
pub fn parse(input: &str, format: RecordFormat) -> Result<Vec<DecompositionRecord>> {
    match format {
        RecordFormat::Jsonl => parse_jsonl(input),
        RecordFormat::Csv => parse_csv(input),
    }
}

fn parse_jsonl(input: &str) -> Result<Vec<DecompositionRecord>> {
    let mut records = Vec::new();
    for (i, line) in input.lines().enumerate() {
        if line.is_empty() {
            continue;
        }
        let record = serde_json::from_str(line).map_err(|e| Error::MalformedRecord {
            format: "jsonl",
            line: i + 1,
            msg: e.to_string(),
        })?;
        records.push(record);
    }
    Ok(records)
}

fn parse_csv(input: &str) -> Result<Vec<DecompositionRecord>> {
    let malformed = |line: usize, msg: String| Error::MalformedRecord {
        format: "csv",
        line,
        msg,
    };
    let mut lines = input.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header == CSV_HEADER => {}
        Some((_, header)) => {
            return Err(malformed(1, format!("bad header {header:?}")));
        }
        None => return Err(malformed(1, "missing header".to_string())),
    }
    let mut records = Vec::new();
    for (i, line) in lines {
        let lineno = i + 1;
        if line.is_empty() {
            continue;
        }
        // The only quoted field is bases, and its content is digits and
        // '+' only, so a plain comma split is exact.
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 7 {
            return Err(malformed(
                lineno,
                format!("expected 7 fields, found {}", fields.len()),
            ));
        }
        let bases_field = fields[3];
        let joined = bases_field
            .strip_prefix('"')
            .and_then(|s| s.strip_suffix('"'))
            .ok_or_else(|| malformed(lineno, "bases field must be quoted".to_string()))?;
        let bases: Vec<String> = if joined.is_empty() {
            Vec::new()
        } else {
            joined.split('+').map(str::to_string).collect()
        };
        let parse_bool = |field: &str, value: &str| match value {
            "true" => Ok(true),
            "false" => Ok(false),
            other => Err(malformed(lineno, format!("bad {field}: {other:?}"))),
        };
        records.push(DecompositionRecord {
            p: fields[0]
                .parse()
                .map_err(|e| malformed(lineno, format!("bad p: {e}")))?,
            n: fields[1].to_string(),
            kind: fields[2]
                .parse()
                .map_err(|e| malformed(lineno, format!("bad kind: {e}")))?,
            bases,
            nonzero_count: fields[4]
                .parse()
                .map_err(|e| malformed(lineno, format!("bad nonzero_count: {e}")))?,
            cancelled_pair: parse_bool("cancelled_pair", fields[5])?,
            verified: parse_bool("verified", fields[6])?,
        });
    }
    Ok(records)
}
