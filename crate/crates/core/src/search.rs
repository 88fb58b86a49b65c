//! Exhaustive k-cube representation search (k = 2 or 3) over the
//! naturals, zeros allowed.
//!
//! The core move is a monotone two-pointer scan: x ascends from 0, y
//! descends from the cube root of the target, stepping by the sign of
//! x³ + y³ − target. Every level set of x³ + y³ is crossed exactly once,
//! so the scan is complete. The 3-cube search runs one such scan per
//! outer z, with z descending and y capped at z.
//!
//! Targets below 2⁹⁶ run on a u128 engine; anything larger (reachable
//! only with `force`) falls back to big-integer arithmetic. Both engines
//! share the scan logic shape and are tested against each other.

use crate::arith::{cube, icbrt, icbrt_u128, Natural};
use crate::error::{Error, Result};
use crate::perfect::{even_perfect, MersenneExponent};
use num_traits::ToPrimitive;
use rayon::prelude::*;
use std::cmp::Ordering;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::Arc;
use std::time::{Duration, Instant};

/// Two-cube searches reject targets at or above 2^80.
pub const TWO_CUBE_BOUND_LOG2: u32 = 80;
/// Three-cube searches reject targets at or above 2^45.
pub const THREE_CUBE_BOUND_LOG2: u32 = 45;

/// Callback receiving (z_done, z_total, found_so_far).
pub type ProgressFn = Arc<dyn Fn(u64, u64, u64) + Send + Sync>;

/// Knobs for the search drivers. `Default` gives a bounded, quiet,
/// globally-pooled search.
#[derive(Clone, Default)]
pub struct SearchOptions {
    /// Run even when the target exceeds the configured bound.
    pub force: bool,
    /// Some(1) scans z sequentially on the calling thread (deterministic
    /// progress order); Some(n) builds a private n-thread pool; None uses
    /// the global pool.
    pub threads: Option<usize>,
    /// Invoked during 3-cube scans; ignored by 2-cube searches, which
    /// have no outer loop to hang it on.
    pub progress: Option<ProgressFn>,
    /// Completed-z interval between callbacks; 0 is treated as 1. The
    /// final z always reports.
    pub progress_interval: u64,
}

impl std::fmt::Debug for SearchOptions {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SearchOptions")
            .field("force", &self.force)
            .field("threads", &self.threads)
            .field("progress", &self.progress.is_some())
            .field("progress_interval", &self.progress_interval)
            .finish()
    }
}

/// One way of writing the target as a sum of cubes: k bases, ascending,
/// zeros allowed. Ascending order makes each representation canonical,
/// so result sets are duplicate-free and ordering is plain `Ord`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Representation {
    bases: Vec<Natural>,
}

impl Representation {
    pub(crate) fn new(mut bases: Vec<Natural>) -> Self {
        bases.sort();
        Representation { bases }
    }

    pub fn bases(&self) -> &[Natural] {
        &self.bases
    }

    /// Re-sums the cubes with fresh arithmetic.
    pub fn verify(&self, target: &Natural) -> bool {
        self.bases.iter().map(cube).sum::<Natural>() == *target
    }
}

/// Everything a search produced: the complete representation list in
/// lexicographic order plus scan instrumentation. `z_range` is the
/// outer-loop interval actually scanned, `(high + 1, high)` when empty.
/// No equality impl: `elapsed` varies run to run.
#[derive(Debug, Clone)]
pub struct SearchReport {
    target: Natural,
    k: u8,
    representations: Vec<Representation>,
    z_range: (Natural, Natural),
    pairs_examined: u64,
    elapsed: Duration,
}

impl SearchReport {
    pub fn target(&self) -> &Natural {
        &self.target
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn representations(&self) -> &[Representation] {
        &self.representations
    }

    pub fn z_range(&self) -> (&Natural, &Natural) {
        (&self.z_range.0, &self.z_range.1)
    }

    pub fn pairs_examined(&self) -> u64 {
        self.pairs_examined
    }

    pub fn elapsed(&self) -> Duration {
        self.elapsed
    }

    pub fn is_representable(&self) -> bool {
        !self.representations.is_empty()
    }
}

fn check_bound(target: &Natural, k: u8, bound_log2: u32, force: bool) -> Result<()> {
    if !force && target.bits() > bound_log2 as u64 {
        return Err(Error::SearchBoundExceeded {
            target: target.to_string(),
            k,
            bound_log2,
        });
    }
    Ok(())
}

/// All pairs 0 ≤ x ≤ y with x³ + y³ = target. Bounded by 2^80 unless
/// forced; the scan itself is O(target^(1/3)).
pub fn search_two_cubes(target: &Natural) -> Result<SearchReport> {
    search_two_cubes_with(target, &SearchOptions::default())
}

pub fn search_two_cubes_with(target: &Natural, opts: &SearchOptions) -> Result<SearchReport> {
    check_bound(target, 2, TWO_CUBE_BOUND_LOG2, opts.force)?;
    let start = Instant::now();
    let (representations, pairs_examined, y_start) = if target.bits() <= 96 {
        let t = target.to_u128().unwrap();
        let (pairs, examined, y_start) = two_cube_scan_u128(t, None);
        let reps = pairs
            .into_iter()
            .map(|(x, y)| Representation::new(vec![Natural::from(x), Natural::from(y)]))
            .collect();
        (reps, examined, Natural::from(y_start))
    } else {
        let (pairs, examined, y_start) = two_cube_scan_big(target, None);
        let reps = pairs
            .into_iter()
            .map(|(x, y)| Representation::new(vec![x, y]))
            .collect();
        (reps, examined, y_start)
    };
    Ok(SearchReport {
        target: target.clone(),
        k: 2,
        representations,
        z_range: (Natural::from(0u32), y_start),
        pairs_examined,
        elapsed: start.elapsed(),
    })
}

/// All triples 0 ≤ x ≤ y ≤ z with x³ + y³ + z³ = target. Bounded by 2^45
/// unless forced. z descends so the small residual subproblems come
/// first; z-values may scan in parallel, and results are sorted before
/// return, so reports are deterministic.
pub fn search_three_cubes(target: &Natural) -> Result<SearchReport> {
    search_three_cubes_with(target, &SearchOptions::default())
}

pub fn search_three_cubes_with(target: &Natural, opts: &SearchOptions) -> Result<SearchReport> {
    check_bound(target, 3, THREE_CUBE_BOUND_LOG2, opts.force)?;
    let start = Instant::now();
    let mut out = if target.bits() <= 96 {
        three_cube_scan_u128(target.to_u128().unwrap(), opts)
    } else {
        three_cube_scan_big(target, opts)
    };
    out.representations.sort();
    Ok(SearchReport {
        target: target.clone(),
        k: 3,
        representations: out.representations,
        z_range: out.z_range,
        pairs_examined: out.pairs_examined,
        elapsed: start.elapsed(),
    })
}

struct EngineOutput {
    representations: Vec<Representation>,
    z_range: (Natural, Natural),
    pairs_examined: u64,
}

/// Runs `scan_one` over offsets 0..count, sequentially for one thread,
/// otherwise on a rayon pool, and flattens the per-z outputs.
fn drive<T: Send>(
    count: u64,
    threads: Option<usize>,
    scan_one: impl Fn(u64) -> T + Send + Sync,
) -> Vec<T> {
    match threads {
        Some(1) => (0..count).map(scan_one).collect(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("building a scoped thread pool")
            .install(|| (0..count).into_par_iter().map(scan_one).collect()),
        None => (0..count).into_par_iter().map(scan_one).collect(),
    }
}

struct ProgressState<'a> {
    done: AtomicU64,
    found: AtomicU64,
    total: u64,
    interval: u64,
    callback: Option<&'a ProgressFn>,
}

impl<'a> ProgressState<'a> {
    fn new(total: u64, opts: &'a SearchOptions) -> Self {
        ProgressState {
            done: AtomicU64::new(0),
            found: AtomicU64::new(0),
            total,
            interval: opts.progress_interval.max(1),
            callback: opts.progress.as_ref(),
        }
    }

    fn record(&self, found_here: u64) {
        let found = self.found.fetch_add(found_here, AtomicOrdering::Relaxed) + found_here;
        let done = self.done.fetch_add(1, AtomicOrdering::Relaxed) + 1;
        if let Some(cb) = self.callback {
            if done.is_multiple_of(self.interval) || done == self.total {
                cb(done, self.total, found);
            }
        }
    }
}

fn three_cube_scan_u128(target: u128, opts: &SearchOptions) -> EngineOutput {
    let z_high = icbrt_u128(target);
    let z_low = three_cube_z_low_u128(target, z_high);
    if z_low > z_high {
        return EngineOutput {
            representations: Vec::new(),
            z_range: (Natural::from(z_low), Natural::from(z_high)),
            pairs_examined: 0,
        };
    }
    let count = z_high - z_low + 1;
    let progress = ProgressState::new(count as u64, opts);
    let per_z = drive(count as u64, opts.threads, |i| {
        let z = z_high - i as u128;
        let residual = target - z * z * z;
        let (pairs, examined, _) = two_cube_scan_u128(residual, Some(z));
        progress.record(pairs.len() as u64);
        (z, pairs, examined)
    });
    let mut representations = Vec::new();
    let mut pairs_examined = 0u64;
    for (z, pairs, examined) in per_z {
        pairs_examined += examined;
        for (x, y) in pairs {
            representations.push(Representation::new(vec![
                Natural::from(x),
                Natural::from(y),
                Natural::from(z),
            ]));
        }
    }
    EngineOutput {
        representations,
        z_range: (Natural::from(z_low), Natural::from(z_high)),
        pairs_examined,
    }
}

fn three_cube_scan_big(target: &Natural, opts: &SearchOptions) -> EngineOutput {
    let z_high = icbrt(target);
    let z_low = three_cube_z_low_big(target, &z_high);
    if z_low > z_high {
        return EngineOutput {
            representations: Vec::new(),
            z_range: (z_low, z_high),
            pairs_examined: 0,
        };
    }
    let count = (&z_high - &z_low + 1u32)
        .to_u64()
        .expect("scan range exceeds feasible size");
    let progress = ProgressState::new(count, opts);
    let per_z = drive(count, opts.threads, |i| {
        let z = &z_high - i;
        let residual = target - cube(&z);
        let (pairs, examined, _) = two_cube_scan_big(&residual, Some(&z));
        progress.record(pairs.len() as u64);
        (z, pairs, examined)
    });
    let mut representations = Vec::new();
    let mut pairs_examined = 0u64;
    for (z, pairs, examined) in per_z {
        pairs_examined += examined;
        for (x, y) in pairs {
            representations.push(Representation::new(vec![x, y, z.clone()]));
        }
    }
    EngineOutput {
        representations,
        z_range: (z_low, z_high),
        pairs_examined,
    }
}

/// Smallest z with 3z³ ≥ target: below it even three copies of z³ fall
/// short, so no triple with maximum z exists. At most z_high + 1.
fn three_cube_z_low_u128(target: u128, z_high: u128) -> u128 {
    let mut z = icbrt_u128(target / 3 + u128::from(!target.is_multiple_of(3)));
    while 3 * z * z * z < target {
        z += 1;
    }
    while z > 0 && 3 * (z - 1) * (z - 1) * (z - 1) >= target {
        z -= 1;
    }
    debug_assert!(z <= z_high + 1);
    z
}

fn three_cube_z_low_big(target: &Natural, z_high: &Natural) -> Natural {
    let mut z = icbrt(&((target + 2u32) / 3u32));
    while cube(&z) * 3u32 < *target {
        z += 1u32;
    }
    while z > Natural::from(0u32) && cube(&(&z - 1u32)) * 3u32 >= *target {
        z -= 1u32;
    }
    debug_assert!(z <= z_high + 1u32);
    z
}

/// Monotone scan core. Returns the matching pairs in ascending-x order,
/// the number of (x, y) states examined, and the starting y. On a match
/// only x advances, so equal-sum runs are still visited one state at a
/// time. Callers keep target below 2^97 so x³ + y³ cannot overflow.
pub(crate) fn two_cube_scan_u128(
    target: u128,
    y_cap: Option<u128>,
) -> (Vec<(u128, u128)>, u64, u128) {
    let mut y = icbrt_u128(target);
    if let Some(cap) = y_cap {
        y = y.min(cap);
    }
    let y_start = y;
    let mut x = 0u128;
    let mut pairs = Vec::new();
    let mut examined = 0u64;
    while x <= y {
        examined += 1;
        let sum = x * x * x + y * y * y;
        match sum.cmp(&target) {
            Ordering::Equal => {
                pairs.push((x, y));
                x += 1;
            }
            Ordering::Less => x += 1,
            Ordering::Greater => y -= 1,
        }
    }
    (pairs, examined, y_start)
}

pub(crate) fn two_cube_scan_big(
    target: &Natural,
    y_cap: Option<&Natural>,
) -> (Vec<(Natural, Natural)>, u64, Natural) {
    let mut y = icbrt(target);
    if let Some(cap) = y_cap {
        if y > *cap {
            y = cap.clone();
        }
    }
    let y_start = y.clone();
    let mut x = Natural::from(0u32);
    let mut pairs = Vec::new();
    let mut examined = 0u64;
    while x <= y {
        examined += 1;
        let sum = cube(&x) + cube(&y);
        match sum.cmp(target) {
            Ordering::Equal => {
                pairs.push((x.clone(), y.clone()));
                x += 1u32;
            }
            Ordering::Less => x += 1u32,
            Ordering::Greater => y -= 1u32,
        }
    }
    (pairs, examined, y_start)
}

/// One 3-cube scan per exponent, with a per-p representability flag.
#[derive(Debug, Clone)]
pub struct ScanEntry {
    p: u32,
    report: SearchReport,
    representable: bool,
}

impl ScanEntry {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn report(&self) -> &SearchReport {
        &self.report
    }

    /// False marks a counterexample candidate.
    pub fn representable(&self) -> bool {
        self.representable
    }
}

/// Runs the full 3-cube search over each exponent's perfect number.
/// p = 2 is rejected (6 is excluded throughout); bound rejections are
/// reported with the offending p attached.
pub fn conjecture_scan(exponents: &[MersenneExponent]) -> Result<Vec<ScanEntry>> {
    conjecture_scan_with(exponents, &SearchOptions::default())
}

pub fn conjecture_scan_with(
    exponents: &[MersenneExponent],
    opts: &SearchOptions,
) -> Result<Vec<ScanEntry>> {
    let mut entries = Vec::with_capacity(exponents.len());
    for e in exponents {
        if e.p() == 2 {
            return Err(Error::SixExcluded);
        }
        let n = even_perfect(e);
        let report =
            search_three_cubes_with(n.value(), opts).map_err(|err| Error::ScanExponent {
                p: e.p(),
                source: Box::new(err),
            })?;
        let representable = report.is_representable();
        entries.push(ScanEntry {
            p: e.p(),
            report,
            representable,
        });
    }
    Ok(entries)
}
