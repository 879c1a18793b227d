//! Command-line front end: classify a given m, verify invariants over a
//! range, or print the polynomial of a single class.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 unrealizable (I, F) input.

use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use aq_classifier::cohomology::poincare_two_var;
use aq_classifier::feasibility::feasible_witness;
use aq_classifier::parabolic::{enumerate_classes, induced_class, realizability_system};
use aq_classifier::record;
use aq_classifier::roots::{build_root_data, HermitianRootData, Root};
use aq_classifier::verify::{all_passed, radius_from_env, verify_range};
use aq_classifier::Error;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_UNREALIZABLE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "aq",
    about = "Exact classifier for the cohomological unitary dual of SO0(2,m)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate and classify every parabolic class for one m.
    Classify {
        /// Rank parameter of SO0(2,m); must be at least 1.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Re-run the invariant battery for every m up to a bound.
    Verify {
        /// Largest m to check.
        #[arg(long = "m-max", default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        m_max: u32,
    },
    /// Print P(x,t) for one class, selected by index or by an explicit pair.
    Poincare {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        /// Class index in canonical enumeration order.
        #[arg(long, conflicts_with_all = ["ideal", "filter"])]
        index: Option<usize>,
        /// Down-set I as semicolon-separated coefficient vectors, e.g. "1,0;1,1".
        #[arg(long)]
        ideal: Option<String>,
        /// Up-set F in the same syntax; omitted or empty means the empty set.
        #[arg(long)]
        filter: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Classify { m, format } => cmd_classify(m, format),
        Command::Verify { m_max } => cmd_verify(m_max),
        Command::Poincare { m, index, ideal, filter } => cmd_poincare(m, index, ideal, filter),
    }
}

fn cmd_classify(m: u32, format: Format) -> ExitCode {
    let data = match build_root_data(m) {
        Ok(d) => d,
        Err(e) => return usage_error(&e.to_string()),
    };
    let records = match record::build_records(&data) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_VERIFY_FAILED);
        }
    };
    match format {
        Format::Json => emit(&record::to_json(&record::document(m, records))),
        Format::Csv => emit(&record::to_csv(&records)),
        Format::Latex => match record::to_latex(&data, &records) {
            Ok(s) => emit(&s),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_VERIFY_FAILED);
            }
        },
        Format::Text => emit(&record::to_text(&records)),
    }
    ExitCode::SUCCESS
}

/// Write to stdout, tolerating a closed pipe (e.g. `aq classify | head`).
fn emit(s: &str) {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    let res = if s.ends_with('\n') {
        stdout.write_all(s.as_bytes())
    } else {
        writeln!(stdout, "{s}")
    };
    if res.is_err() {
        std::process::exit(0);
    }
}

fn cmd_verify(m_max: u32) -> ExitCode {
    let radius = radius_from_env();
    let outcomes = verify_range(m_max, radius);
    for o in &outcomes {
        emit(&o.to_string());
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    if failed == 0 {
        emit(&format!("all {} checks passed (m <= {m_max}, grid radius {radius})", outcomes.len()));
        ExitCode::SUCCESS
    } else {
        emit(&format!("{failed} of {} checks FAILED", outcomes.len()));
        debug_assert!(!all_passed(&outcomes));
        ExitCode::from(EXIT_VERIFY_FAILED)
    }
}

fn cmd_poincare(
    m: u32,
    index: Option<usize>,
    ideal: Option<String>,
    filter: Option<String>,
) -> ExitCode {
    let data = match build_root_data(m) {
        Ok(d) => d,
        Err(e) => return usage_error(&e.to_string()),
    };
    let class = if let Some(idx) = index {
        let classes = enumerate_classes(&data);
        match classes.into_iter().nth(idx) {
            Some(c) => c,
            None => return usage_error(&format!("class index {idx} out of range for m={m}")),
        }
    } else {
        if ideal.is_none() && filter.is_none() {
            return usage_error("select a class with --index or with --ideal/--filter");
        }
        let ideal_set = match parse_root_set(&data, ideal.as_deref().unwrap_or("")) {
            Ok(s) => s,
            Err(msg) => return usage_error(&msg),
        };
        let filter_set = match parse_root_set(&data, filter.as_deref().unwrap_or("")) {
            Ok(s) => s,
            Err(msg) => return usage_error(&msg),
        };
        let sys = match realizability_system(&data, &ideal_set, &filter_set) {
            Ok(sys) => sys,
            Err(e @ (Error::NotDownSet | Error::NotUpSet | Error::Overlapping)) => {
                eprintln!("unrealizable: {e}");
                return ExitCode::from(EXIT_UNREALIZABLE);
            }
            Err(e) => return usage_error(&e.to_string()),
        };
        let witness = match feasible_witness(&sys) {
            Some(w) => w,
            None => {
                eprintln!("unrealizable: the sign constraints for this (I, F) are infeasible");
                return ExitCode::from(EXIT_UNREALIZABLE);
            }
        };
        induced_class(&data, &witness).expect("solver witness must induce a class")
    };
    let poly = poincare_two_var(&data, &class);
    emit(&format!("P(x,t) = {poly}"));
    emit(&format!("P(t) = {}", poly.one_variable_string()));
    ExitCode::SUCCESS
}

/// Parse "1,0;1,1" into noncompact positive root indices. Empty input is
/// the empty set.
fn parse_root_set(data: &HermitianRootData, spec: &str) -> Result<BTreeSet<usize>, String> {
    let mut out = BTreeSet::new();
    for chunk in spec.split(';') {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            continue;
        }
        let mut coeffs = Vec::new();
        for part in chunk.split(',') {
            let c: i64 = part
                .trim()
                .parse()
                .map_err(|_| format!("bad coefficient '{}' in root '{chunk}'", part.trim()))?;
            coeffs.push(c);
        }
        let idx = data
            .nc_index(&Root::new(coeffs))
            .ok_or_else(|| format!("'{chunk}' is not a noncompact positive root for m={}", data.m))?;
        out.insert(idx);
    }
    Ok(out)
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("usage error: {msg}");
    ExitCode::from(EXIT_USAGE)
}
