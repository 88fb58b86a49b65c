//! Command-line front end: generate perfect numbers, decompose them into
//! cubes, search for representations, and verify record files.
//!
//! Exit codes: 0 success; 1 a verification failed or a counterexample
//! candidate turned up; 2 usage or input error; 3 a search bound was
//! exceeded without --force.

mod output;

use clap::{Parser, Subcommand, ValueEnum};
use output::Format;
use perfect_cubes::{
    conjecture_scan_with, constructive_decompose, even_perfect, heath_decompose, icbrt,
    mersenne_exponents_up_to, records, search_three_cubes_with, search_two_cubes_with,
    DecompositionRecord, Error as CoreError, EvenPerfect, MersenneExponent, Natural, RecordFormat,
    SearchOptions, SearchReport,
};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(
    name = "perfect-cubes",
    version,
    about = "Even perfect numbers as sums of cubes",
    max_term_width = 80
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write output to a file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    /// Output format; elapsed time appears only in pretty
    #[arg(long, global = true, value_enum, default_value = "pretty")]
    format: Format,

    /// Run searches past their configured size bounds
    #[arg(long, global = true)]
    force: bool,

    /// Worker threads for searches; 1 means fully sequential
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    /// Report search progress on stderr
    #[arg(long, global = true)]
    progress: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List Mersenne exponents and their perfect numbers up to a limit
    Generate {
        /// Largest exponent p to test
        #[arg(long, value_name = "P")]
        max_p: u32,
    },
    /// Decompose one perfect number into a sum of cubes
    Decompose {
        /// Mersenne exponent of the number to decompose
        #[arg(long)]
        p: u32,
        /// heath: consecutive odd cubes; construct: at most five cubes
        #[arg(long, value_enum)]
        method: Method,
    },
    /// Find every way to write a target as a sum of k cubes
    Search {
        /// Target as a decimal natural
        #[arg(long, value_parser = parse_natural)]
        target: Natural,
        /// Number of cubes
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
        k: u8,
    },
    /// 3-cube search across every perfect number up to an exponent
    Scan {
        /// Largest exponent p to include (6 itself is always skipped)
        #[arg(long, value_name = "P")]
        max_p: u32,
    },
    /// Print the five smallest perfect numbers past 6 as sums of three cubes
    Table,
    /// Re-verify a record file; nonzero exit on any failure
    Verify {
        /// JSONL or CSV record file (format sniffed from the first byte)
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Heath,
    Construct,
}

fn parse_natural(s: &str) -> Result<Natural, String> {
    if s.is_empty() || (s.len() > 1 && s.starts_with('0')) || !s.bytes().all(|b| b.is_ascii_digit())
    {
        return Err(format!("not a decimal natural: {s:?}"));
    }
    Ok(s.parse().expect("digit strings parse"))
}

enum Failure {
    Core(CoreError),
    Input(String),
    Io(std::io::Error),
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Core(e) => write!(f, "{e}"),
            Failure::Input(msg) => write!(f, "{msg}"),
            Failure::Io(e) => write!(f, "{e}"),
        }
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Core(e) => core_exit_code(e),
            Failure::Input(_) | Failure::Io(_) => 2,
        }
    }
}

fn core_exit_code(e: &CoreError) -> u8 {
    match e {
        CoreError::SearchBoundExceeded { .. } | CoreError::HeathImplicit { .. } => 3,
        CoreError::ScanExponent { source, .. } => core_exit_code(source),
        _ => 2,
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.code())
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let opts = search_options(&cli);
    match &cli.command {
        Command::Generate { max_p } => {
            let perfects: Vec<EvenPerfect> = mersenne_exponents_up_to(*max_p)
                .iter()
                .map(even_perfect)
                .collect();
            let payload = match cli.format {
                Format::Jsonl => output::generate_jsonl(&perfects),
                Format::Csv => output::generate_csv(&perfects),
                Format::Pretty => output::generate_pretty(&perfects),
            };
            write_payload(&payload, cli.output.as_deref())?;
            Ok(0)
        }
        Command::Decompose { p, method } => {
            let exponent = MersenneExponent::new(*p)?;
            let n = even_perfect(&exponent);
            let record = match method {
                Method::Construct => {
                    DecompositionRecord::from_cube(*p, &constructive_decompose(&n)?)
                }
                Method::Heath => DecompositionRecord::from_heath(*p, &heath_decompose(&n)?)?,
            };
            emit_records(&[record], &cli)?;
            Ok(0)
        }
        Command::Search { target, k } => {
            let report = match k {
                2 => search_two_cubes_with(target, &opts)?,
                _ => search_three_cubes_with(target, &with_progress(&opts, target, cli.progress))?,
            };
            assert_representations_verify(&report);
            let payload = match cli.format {
                Format::Jsonl => output::search_jsonl(&report),
                Format::Csv => output::search_csv(&report),
                Format::Pretty => output::search_pretty(&report),
            };
            write_payload(&payload, cli.output.as_deref())?;
            Ok(0)
        }
        Command::Scan { max_p } => {
            let exponents: Vec<MersenneExponent> = mersenne_exponents_up_to(*max_p)
                .into_iter()
                .filter(|e| e.p() != 2)
                .collect();
            let scan_opts = match exponents.last() {
                Some(e) => with_progress(&opts, even_perfect(e).value(), cli.progress),
                None => opts.clone(),
            };
            let entries = conjecture_scan_with(&exponents, &scan_opts)?;
            for e in &entries {
                assert_representations_verify(e.report());
            }
            let payload = match cli.format {
                Format::Jsonl => output::scan_jsonl(&entries),
                Format::Csv => output::scan_csv(&entries),
                Format::Pretty => output::scan_pretty(&entries),
            };
            write_payload(&payload, cli.output.as_deref())?;
            Ok(if entries.iter().all(|e| e.representable()) {
                0
            } else {
                1
            })
        }
        Command::Table => {
            let (records, rows) = build_table(&opts)?;
            let payload = match cli.format {
                Format::Jsonl => records::emit(&records, RecordFormat::Jsonl),
                Format::Csv => records::emit(&records, RecordFormat::Csv),
                Format::Pretty => output::table_pretty(&rows),
            };
            for r in &records {
                assert!(r.verified, "table row p = {} failed self-verification", r.p);
            }
            write_payload(&payload, cli.output.as_deref())?;
            Ok(0)
        }
        Command::Verify { input } => {
            let text = fs::read_to_string(input)?;
            let format = sniff_format(&text);
            let parsed = records::parse(&text, format)?;
            let mut results = Vec::with_capacity(parsed.len());
            let mut failures = 0usize;
            for record in parsed {
                let fresh = record.verify()?;
                if !fresh {
                    failures += 1;
                }
                results.push((record, fresh));
            }
            let payload = output::verify_pretty(&results);
            write_payload(&payload, cli.output.as_deref())?;
            Ok(if failures == 0 { 0 } else { 1 })
        }
    }
}

fn search_options(cli: &Cli) -> SearchOptions {
    SearchOptions {
        force: cli.force,
        threads: cli.threads,
        progress: None,
        progress_interval: 0,
    }
}

/// Attaches a stderr progress callback sized to the target: about twenty
/// lines per scan regardless of magnitude.
fn with_progress(opts: &SearchOptions, target: &Natural, enabled: bool) -> SearchOptions {
    if !enabled {
        return opts.clone();
    }
    let z_estimate = u64::try_from(&icbrt(target)).unwrap_or(u64::MAX);
    // the scanned z interval is roughly 30% of icbrt(target)
    let interval = (z_estimate * 3 / 10 / 20).max(1);
    let mut opts = opts.clone();
    opts.progress = Some(Arc::new(|done, total, found| {
        eprintln!("progress: {done}/{total} z-values scanned, {found} found");
    }));
    opts.progress_interval = interval;
    opts
}

fn assert_representations_verify(report: &SearchReport) {
    for r in report.representations() {
        assert!(
            r.verify(report.target()),
            "representation failed self-verification for target {}",
            report.target()
        );
    }
}

/// The five display rows: constructive for p in {3, 5, 7, 13}, searched
/// for p = 17. Construction yields five bases with at most three nonzero
/// for these p, so the last three (ascending) are the displayed triple;
/// the p = 17 triple is the lexicographically least search result.
fn build_table(opts: &SearchOptions) -> Result<(Vec<DecompositionRecord>, TableRows), Failure> {
    let mut records = Vec::new();
    let mut rows = Vec::new();
    for p in [3u32, 5, 7, 13] {
        let n = even_perfect(&MersenneExponent::new(p)?);
        let d = constructive_decompose(&n)?;
        let triple = d.bases()[2..].to_vec();
        records.push(DecompositionRecord::from_bases(
            p,
            n.value(),
            &triple,
            d.kind(),
            d.cancelled_pair(),
        ));
        rows.push((n.value().clone(), triple));
    }
    let n = even_perfect(&MersenneExponent::new(17)?);
    let report = search_three_cubes_with(n.value(), opts)?;
    let first = report
        .representations()
        .first()
        .ok_or_else(|| Failure::Input("no 3-cube representation found for p = 17".to_string()))?;
    records.push(DecompositionRecord::from_representation(
        17,
        n.value(),
        first,
    ));
    rows.push((n.value().clone(), first.bases().to_vec()));
    Ok((records, rows))
}

type TableRows = Vec<(Natural, Vec<Natural>)>;

fn emit_records(records: &[DecompositionRecord], cli: &Cli) -> Result<(), Failure> {
    for r in records {
        assert!(r.verified, "record p = {} failed self-verification", r.p);
    }
    let payload = match cli.format {
        Format::Jsonl => records::emit(records, RecordFormat::Jsonl),
        Format::Csv => records::emit(records, RecordFormat::Csv),
        Format::Pretty => {
            let mut out = String::new();
            for r in records {
                out.push_str(&output::record_pretty(r));
            }
            out
        }
    };
    write_payload(&payload, cli.output.as_deref())?;
    Ok(())
}

fn sniff_format(text: &str) -> RecordFormat {
    match text.trim_start().as_bytes().first() {
        Some(b'{') => RecordFormat::Jsonl,
        _ => RecordFormat::Csv,
    }
}

fn write_payload(payload: &str, output: Option<&Path>) -> std::io::Result<()> {
    match output {
        Some(path) => fs::write(path, payload),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}
