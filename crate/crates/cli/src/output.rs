//! Rendering for every subcommand payload.
//!
//! Three formats. jsonl and csv are machine formats: byte-stable across
//! identical invocations, all integers as decimal strings, no timing
//! fields. pretty is for terminals and is the only place elapsed time
//! appears. Decomposition records go through the record serializer in
//! the library; the report-shaped payloads (generate, search, scan) have
//! their own flat wire structs here.

use perfect_cubes::{DecompositionRecord, EvenPerfect, Natural, ScanEntry, SearchReport};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Jsonl,
    Csv,
    Pretty,
}

fn cube_terms(bases: &[String]) -> String {
    let terms: Vec<String> = bases.iter().map(|b| format!("{b}^3")).collect();
    terms.join(" + ")
}

fn representations_as_strings(report: &SearchReport) -> Vec<Vec<String>> {
    report
        .representations()
        .iter()
        .map(|r| r.bases().iter().map(|b| b.to_string()).collect())
        .collect()
}

#[derive(Serialize)]
struct GenerateWire {
    p: u32,
    #[serde(rename = "N")]
    n: String,
}

pub fn generate_jsonl(perfects: &[EvenPerfect]) -> String {
    let mut out = String::new();
    for n in perfects {
        let wire = GenerateWire {
            p: n.p(),
            n: n.value().to_string(),
        };
        out.push_str(&serde_json::to_string(&wire).expect("wire struct serializes"));
        out.push('\n');
    }
    out
}

pub fn generate_csv(perfects: &[EvenPerfect]) -> String {
    let mut out = String::from("p,N\n");
    for n in perfects {
        out.push_str(&format!("{},{}\n", n.p(), n.value()));
    }
    out
}

pub fn generate_pretty(perfects: &[EvenPerfect]) -> String {
    let mut out = String::from("   p  N\n");
    for n in perfects {
        out.push_str(&format!("{:>4}  {}\n", n.p(), n.value()));
    }
    out
}

#[derive(Serialize)]
struct SearchWire {
    target: String,
    k: u8,
    representations: Vec<Vec<String>>,
    z_low: String,
    z_high: String,
    pairs_examined: u64,
}

pub fn search_jsonl(report: &SearchReport) -> String {
    let (z_low, z_high) = report.z_range();
    let wire = SearchWire {
        target: report.target().to_string(),
        k: report.k(),
        representations: representations_as_strings(report),
        z_low: z_low.to_string(),
        z_high: z_high.to_string(),
        pairs_examined: report.pairs_examined(),
    };
    let mut out = serde_json::to_string(&wire).expect("wire struct serializes");
    out.push('\n');
    out
}

pub fn search_csv(report: &SearchReport) -> String {
    let mut out = String::from("target,k,bases,z_low,z_high,pairs_examined\n");
    let (z_low, z_high) = report.z_range();
    for rep in representations_as_strings(report) {
        out.push_str(&format!(
            "{},{},\"{}\",{},{},{}\n",
            report.target(),
            report.k(),
            rep.join("+"),
            z_low,
            z_high,
            report.pairs_examined()
        ));
    }
    out
}

pub fn search_pretty(report: &SearchReport) -> String {
    let (z_low, z_high) = report.z_range();
    let reps = representations_as_strings(report);
    let mut out = format!(
        "target = {}\nk = {}\nscan range = {} .. {}\npairs examined = {}\nrepresentations ({})",
        report.target(),
        report.k(),
        z_low,
        z_high,
        report.pairs_examined(),
        reps.len()
    );
    if reps.is_empty() {
        out.push_str(": none\n");
    } else {
        out.push_str(":\n");
        for rep in &reps {
            out.push_str(&format!("  {}\n", cube_terms(rep)));
        }
    }
    out.push_str(&format!("elapsed = {:?}\n", report.elapsed()));
    out
}

#[derive(Serialize)]
struct ScanWire {
    p: u32,
    #[serde(rename = "N")]
    n: String,
    representable: bool,
    representations: Vec<Vec<String>>,
    z_low: String,
    z_high: String,
    pairs_examined: u64,
}

pub fn scan_jsonl(entries: &[ScanEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        let (z_low, z_high) = e.report().z_range();
        let wire = ScanWire {
            p: e.p(),
            n: e.report().target().to_string(),
            representable: e.representable(),
            representations: representations_as_strings(e.report()),
            z_low: z_low.to_string(),
            z_high: z_high.to_string(),
            pairs_examined: e.report().pairs_examined(),
        };
        out.push_str(&serde_json::to_string(&wire).expect("wire struct serializes"));
        out.push('\n');
    }
    out
}

pub fn scan_csv(entries: &[ScanEntry]) -> String {
    let mut out = String::from("p,N,representable,representations,z_low,z_high,pairs_examined\n");
    for e in entries {
        let (z_low, z_high) = e.report().z_range();
        let joined: Vec<String> = representations_as_strings(e.report())
            .iter()
            .map(|rep| rep.join("+"))
            .collect();
        out.push_str(&format!(
            "{},{},{},\"{}\",{},{},{}\n",
            e.p(),
            e.report().target(),
            e.representable(),
            joined.join("|"),
            z_low,
            z_high,
            e.report().pairs_examined()
        ));
    }
    out
}

pub fn scan_pretty(entries: &[ScanEntry]) -> String {
    let p_width = entries
        .iter()
        .map(|e| e.p().to_string().len())
        .max()
        .unwrap_or(1);
    let n_width = entries
        .iter()
        .map(|e| e.report().target().to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    let mut representable = 0usize;
    for e in entries {
        let reps = representations_as_strings(e.report());
        let tail = if let Some(first) = reps.first() {
            representable += 1;
            let more = match reps.len() {
                1 => String::new(),
                n => format!(" (+{} more)", n - 1),
            };
            format!("representable  via {}{}", cube_terms(first), more)
        } else {
            "NOT REPRESENTABLE (counterexample candidate)".to_string()
        };
        out.push_str(&format!(
            "p = {:>pw$}  N = {:<nw$}  {}\n",
            e.p(),
            e.report().target().to_string(),
            tail,
            pw = p_width,
            nw = n_width,
        ));
    }
    out.push_str(&format!(
        "scanned {} exponents: {} representable, {} counterexample candidates\n",
        entries.len(),
        representable,
        entries.len() - representable
    ));
    out
}

/// One record as an equation plus its metadata, a line per field.
pub fn record_pretty(r: &DecompositionRecord) -> String {
    format!(
        "{} = {}\np = {}\nkind = {}\nnonzero bases = {}\ncancelled pair = {}\nverified = {}\n",
        r.n,
        cube_terms(&r.bases),
        r.p,
        r.kind,
        r.nonzero_count,
        r.cancelled_pair,
        r.verified
    )
}

/// Per-record verdict lines from fresh verification, then a summary.
pub fn verify_pretty(results: &[(DecompositionRecord, bool)]) -> String {
    let mut out = String::new();
    let mut ok = 0usize;
    for (record, fresh) in results {
        if *fresh {
            ok += 1;
        }
        out.push_str(&format!(
            "{}  p={}  N={}\n",
            if *fresh { "ok  " } else { "FAIL" },
            record.p,
            record.n
        ));
    }
    out.push_str(&format!(
        "{} records: {} ok, {} failed\n",
        results.len(),
        ok,
        results.len() - ok
    ));
    out
}

/// The five-row display: N and bases right-aligned to shared widths.
pub fn table_pretty(rows: &[(Natural, Vec<Natural>)]) -> String {
    let n_width = rows
        .iter()
        .map(|(n, _)| n.to_string().len())
        .max()
        .unwrap_or(1);
    let base_width = rows
        .iter()
        .flat_map(|(_, bases)| bases.iter())
        .map(|b| b.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for (n, bases) in rows {
        let terms: Vec<String> = bases
            .iter()
            .map(|b| format!("{:>w$}^3", b.to_string(), w = base_width))
            .collect();
        out.push_str(&format!(
            "{:>w$} = {}\n",
            n.to_string(),
            terms.join(" + "),
            w = n_width
        ));
    }
    out
}
