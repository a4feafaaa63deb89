use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hvs_cli::format::parse_rational;
use hvs_cli::input::{load, load_one, LinkRecord};
use hvs_cli::report::{self, parse_zeta, InvariantReport, ReportOptions, Status};
use hvs_cli::skein::{self, parse_hypothesis, SkeinReport, DEFAULT_ZETAS};
use hvs_cli::catalog;
use hvs_core::Real;
use serde::Serialize;

/// H-numbers, spectra, signatures and Alexander polynomials of links from
/// Seifert matrices.
#[derive(Parser)]
#[command(name = "hvs", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant report for every record of the inputs.
    Report(ReportArgs),
    /// Bounds along a skein triple, or semicontinuity of a pair of links.
    Skein(SkeinArgs),
    /// Print built-in records as a JSON array.
    Catalog(CatalogArgs),
}

#[derive(Args)]
struct ReportArgs {
    /// Record files (JSON arrays), `-` for standard input, PATH#NAME for one
    /// record of a file, or catalog:NAME.
    #[arg(required = true, value_name = "SOURCE")]
    inputs: Vec<String>,
    /// Working precision in bits for certified numerics.
    #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(u64).range(16..=65536))]
    precision: u64,
    /// Signature sample ζ = e^{2πi·a/b}; repeatable.
    #[arg(long = "zeta", value_name = "a/b", value_parser = parse_zeta)]
    zetas: Vec<(i64, i64)>,
    /// N signature samples spread over the circle, avoiding eigenvalue arguments.
    #[arg(long, value_name = "N")]
    zeta_sweep: Option<usize>,
    /// Run every cross-route check at extra sample points; mismatches fail.
    #[arg(long)]
    check_all: bool,
    /// Write the machine-readable reports to PATH.
    #[arg(long, value_name = "PATH")]
    json_out: Option<PathBuf>,
    /// Start from each record's monodromy and variation matrices.
    #[arg(long)]
    from_monodromy: bool,
    /// No text report on standard output.
    #[arg(long, short)]
    quiet: bool,
}

#[derive(Args)]
struct SkeinArgs {
    /// S₊ of a skein triple.
    #[arg(long, value_name = "SOURCE", conflicts_with_all = ["l1", "l2"])]
    plus: Option<String>,
    /// S₋; derived from S₊ when omitted together with --zero.
    #[arg(long, value_name = "SOURCE", requires = "plus")]
    minus: Option<String>,
    /// S₀; derived from S₊ when omitted together with --minus.
    #[arg(long, value_name = "SOURCE", requires = "plus")]
    zero: Option<String>,
    /// First link of a semicontinuity pair.
    #[arg(long, value_name = "SOURCE", requires_all = ["l2", "hypothesis", "x"])]
    l1: Option<String>,
    /// Second link of a semicontinuity pair.
    #[arg(long, value_name = "SOURCE", requires = "l1")]
    l2: Option<String>,
    /// How L₁ arises from L₂: a, b or c.
    #[arg(long, value_parser = parse_hypothesis)]
    hypothesis: Option<hvs_core::Hypothesis>,
    /// Half-plane parameter in (0, 1), as p/q or a decimal.
    #[arg(long, value_parser = parse_x)]
    x: Option<Real>,
    /// Extra signature sample ζ = e^{2πi·a/b}; repeatable.
    #[arg(long = "zeta", value_name = "a/b", value_parser = parse_zeta)]
    zetas: Vec<(i64, i64)>,
    #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(u64).range(16..=65536))]
    precision: u64,
    /// Write the machine-readable report to PATH.
    #[arg(long, value_name = "PATH")]
    json_out: Option<PathBuf>,
    #[arg(long, short)]
    quiet: bool,
}

#[derive(Args)]
struct CatalogArgs {
    /// Only these entries (T(p,q) builds any torus link).
    names: Vec<String>,
    /// Add the (p, q) torus link; repeatable.
    #[arg(long, value_name = "p,q", value_parser = catalog::parse_torus)]
    torus: Vec<(usize, usize)>,
    /// Print names only.
    #[arg(long)]
    list: bool,
}

fn parse_x(s: &str) -> Result<Real, String> {
    parse_rational(s, true).map(Real::Exact)
}

fn write_json<T: Serialize + ?Sized>(path: &Path, value: &T) -> Result<(), String> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    text.push('\n');
    std::fs::write(path, text).map_err(|e| format!("{}: {}", path.display(), e))
}

fn run_report(args: ReportArgs) -> Status {
    let opts = ReportOptions {
        precision: args.precision as usize,
        zetas: args.zetas,
        sweep: args.zeta_sweep,
        check_all: args.check_all,
        from_monodromy: args.from_monodromy,
    };
    let mut status = Status::Ok;
    let mut reports: Vec<InvariantReport> = Vec::new();
    for source in &args.inputs {
        let records = match load(source) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("error: {}", e);
                status = Status::InputError;
                continue;
            }
        };
        for record in &records {
            let r = report::build(record, &opts);
            if !args.quiet {
                emit(&format!("{}\n", report::render_text(&r)));
            }
            if r.status != Status::Ok {
                eprintln!("{}: {:?}{}", r.name, r.status, r.error.as_deref().map(|e| format!(": {}", e)).unwrap_or_default());
            }
            status = status.max(r.status);
            reports.push(r);
        }
    }
    if let Some(path) = &args.json_out {
        if let Err(e) = write_json(path, &reports) {
            eprintln!("error: {}", e);
            status = status.max(Status::InputError);
        }
    }
    status
}

fn run_skein(args: SkeinArgs) -> Status {
    let precision = args.precision as usize;
    let result: Result<SkeinReport, String> = (|| {
        if let Some(plus) = &args.plus {
            let plus = load_one(plus)?;
            let minus = args.minus.as_deref().map(load_one).transpose()?;
            let zero = args.zero.as_deref().map(load_one).transpose()?;
            let mut zetas = DEFAULT_ZETAS.to_vec();
            zetas.extend(args.zetas.iter().copied());
            Ok(SkeinReport::Triple(skein::check_triple(&plus, minus.as_ref(), zero.as_ref(), &zetas, precision)))
        } else if let (Some(l1), Some(l2), Some(h), Some(x)) = (&args.l1, &args.l2, args.hypothesis, &args.x) {
            let (l1, l2): (LinkRecord, LinkRecord) = (load_one(l1)?, load_one(l2)?);
            Ok(SkeinReport::Semicontinuity(skein::check_pair(&l1, &l2, h, x, precision)))
        } else {
            Err("give --plus [--minus --zero] for a triple, or --l1 --l2 --hypothesis --x for a pair".into())
        }
    })();
    let r = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {}", e);
            return Status::InputError;
        }
    };
    if !args.quiet {
        emit(&skein::render_text(&r));
    }
    let mut status = r.status();
    if let Some(path) = &args.json_out {
        if let Err(e) = write_json(path, &r) {
            eprintln!("error: {}", e);
            status = status.max(Status::InputError);
        }
    }
    status
}

fn run_catalog(args: CatalogArgs) -> Status {
    let mut records = if args.names.is_empty() {
        catalog::all()
    } else {
        match args.names.iter().map(|n| catalog::lookup(n)).collect::<Result<Vec<_>, _>>() {
            Ok(r) => r,
            Err(e) => {
                eprintln!("error: {}", e);
                return Status::InputError;
            }
        }
    };
    for (p, q) in args.torus {
        match catalog::torus(p, q) {
            Ok(r) => records.push(r),
            Err(e) => {
                eprintln!("error: {}", e);
                return Status::InputError;
            }
        }
    }
    if args.list {
        for r in &records {
            emit(&format!("{}\t{}x{}\t{}\n", r.name, r.seifert.0.rows(), r.seifert.0.cols(), r.tags.join(",")));
        }
    } else {
        emit(&format!("{}\n", serde_json::to_string_pretty(&records).expect("records serialize")));
    }
    Status::Ok
}

/// Writes to stdout; a closed pipe ends the process quietly.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: {}", e);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let status = match cli.command {
        Command::Report(a) => run_report(a),
        Command::Skein(a) => run_skein(a),
        Command::Catalog(a) => run_catalog(a),
    };
    ExitCode::from(status.exit_code())
}
