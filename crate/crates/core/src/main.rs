use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use antipodal::antipodality::{count_pairs, difference_body_counts, Mode, PairReport};
use antipodal::bounds::{bound_table, RecursionRule};
use antipodal::constructions::construct;
use antipodal::io::{read_config, read_segments, segments_to_json, write_atomic, write_config, CertificateRecord};
use antipodal::search::{
    search_extremal, Objective, Position, SearchParams, SearchTask, DEFAULT_BUDGET, DEFAULT_RESTARTS,
};
use antipodal::segments::{family_test, segment_construction, SegmentKind};
use antipodal::verify::run_suite;
use antipodal::Error;

#[derive(Parser)]
#[command(
    name = "antipod",
    version,
    about = "Antipodal and strictly antipodal pairs of finite point sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Antipodal,
    Strict,
    Both,
}

impl ModeArg {
    fn modes(self) -> Vec<Mode> {
        match self {
            ModeArg::Antipodal => vec![Mode::Antipodal],
            ModeArg::Strict => vec![Mode::Strict],
            ModeArg::Both => vec![Mode::Antipodal, Mode::Strict],
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum OracleArg {
    Lp,
    Diffbody,
    Both,
}

fn parse_lib<T: std::str::FromStr<Err = Error>>(s: &str) -> Result<T, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Count antipodal and strictly antipodal pairs of a configuration file.
    Count {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "lp")]
        oracle: OracleArg,
        /// Write one certificate per pair found by the LP oracle.
        #[arg(long)]
        certificates: Option<PathBuf>,
        /// Re-embed a lower-dimensional input into its affine hull first.
        #[arg(long)]
        in_affine_hull: bool,
    },
    /// Build a named construction and write it as a configuration file.
    Construct {
        #[arg(long)]
        name: String,
        /// Comma-separated `key=value` pairs, e.g. `d=4,k=2`.
        #[arg(long, value_delimiter = ',')]
        params: Vec<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the verification suite.
    Verify {
        /// `all`, a criterion number or a criterion name.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Print the table of lower and upper bounds as JSON.
    Bounds {
        #[arg(long)]
        dmax: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, value_parser = parse_lib::<RecursionRule>, default_value = "literal")]
        rule: RecursionRule,
    },
    /// Search for a configuration with few or many (strictly) antipodal pairs.
    Search {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_lib::<Mode>)]
        mode: Mode,
        #[arg(long, value_parser = parse_lib::<Objective>)]
        objective: Objective,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Annealing steps per restart.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long, default_value_t = DEFAULT_RESTARTS)]
        restarts: usize,
        #[arg(long, value_parser = parse_lib::<Position>, default_value = "strictly_convex")]
        position: Position,
        /// Stop once this value is verified.
        #[arg(long)]
        stop_at: Option<usize>,
        /// TOML file with annealing parameters.
        #[arg(long)]
        params: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        /// Run log; defaults to the output path with `.log.json`.
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// Test a family of segments in three-space.
    Segments {
        #[arg(long, conflicts_with = "construction", required_unless_present = "construction")]
        input: Option<PathBuf>,
        /// A named family instead of an input file.
        #[arg(long, value_parser = parse_lib::<SegmentKind>)]
        construction: Option<SegmentKind>,
        #[arg(long, value_parser = parse_lib::<Mode>)]
        mode: Option<Mode>,
        /// Write the named family to a file.
        #[arg(long, requires = "construction")]
        out: Option<PathBuf>,
    },
}

type Run = Result<bool, Error>;

fn count(input: &Path, mode: ModeArg, oracle: OracleArg, certificates: Option<&Path>, reembed: bool) -> Run {
    let mut config = read_config(input)?;
    if reembed {
        config = config.reembed()?;
    }
    config.require_full_dimensional()?;
    println!("{} points in R^{}", config.len(), config.dim());
    let modes = mode.modes();
    let mut reports: Vec<PairReport> = Vec::new();
    if oracle != OracleArg::Diffbody || certificates.is_some() {
        for &m in &modes {
            reports.push(count_pairs(&config, m)?);
        }
    }
    let name = |m: Mode| if m == Mode::Antipodal { "a" } else { "sa" };
    let mut agree = true;
    if oracle != OracleArg::Diffbody {
        for r in &reports {
            println!("{} = {} (lp)", name(r.mode), r.count);
        }
    }
    if oracle != OracleArg::Lp {
        let db = difference_body_counts(&config)?;
        for &m in &modes {
            let v = if m == Mode::Antipodal { db.a } else { db.sa };
            println!("{} = {v} (diffbody)", name(m));
            if oracle == OracleArg::Both {
                agree &= reports.iter().any(|r| r.mode == m && r.count == v);
            }
        }
        println!("difference body vertices = {}", db.db_vertices);
        if oracle == OracleArg::Both {
            println!("{}", if agree { "oracles agree" } else { "oracles DISAGREE" });
        }
    }
    if let Some(path) = certificates {
        let records: Vec<CertificateRecord> = reports
            .iter()
            .flat_map(|r| {
                r.pairs
                    .iter()
                    .zip(&r.certificates)
                    .map(|(&(i, j), c)| CertificateRecord::new(i, j, r.mode, c))
            })
            .collect();
        write_atomic(path, &(serde_json::to_string_pretty(&records)? + "\n"))?;
        println!("wrote {} certificates to {}", records.len(), path.display());
    }
    Ok(agree)
}

fn construct_cmd(name: &str, params: &[String], out: &Path) -> Run {
    let mut map = BTreeMap::new();
    for p in params.iter().filter(|p| !p.trim().is_empty()) {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("parameter '{p}' is not of the form key=value")))?;
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    let config = construct(name, &map)?;
    write_config(out, &config)?;
    println!(
        "wrote {} points in R^{} to {}",
        config.len(),
        config.dim(),
        out.display()
    );
    Ok(true)
}

fn verify(suite: &str, report: Option<&Path>) -> Run {
    let r = run_suite(suite)?;
    for e in &r.entries {
        println!(
            "criterion {} {}: {} ({})",
            e.id,
            e.name,
            if e.pass { "PASS" } else { "FAIL" },
            e.actual
        );
        for f in &e.failures {
            println!("    {f}");
        }
    }
    println!("{} passed, {} failed", r.summary.passed, r.summary.failed);
    if let Some(path) = report {
        write_atomic(path, &(serde_json::to_string_pretty(&r)? + "\n"))?;
    }
    Ok(r.all_pass())
}

fn bounds(dmax: usize, csv: Option<&Path>, rule: RecursionRule) -> Run {
    let table = bound_table(dmax, rule)?;
    println!("{}", serde_json::to_string_pretty(&table)?);
    if let Some(path) = csv {
        let mut text = String::from("d,k,n,lower,upper,exact,provenance\n");
        for b in &table {
            let exact = b.exact.map(|v| v.to_string()).unwrap_or_default();
            text += &format!(
                "{},{},{},{},{},{},{}\n",
                b.d,
                b.k,
                b.d + b.k,
                b.lower,
                b.upper,
                exact,
                b.provenance.join(";")
            );
        }
        write_atomic(path, &text)?;
    }
    Ok(true)
}

fn segments(input: Option<&Path>, kind: Option<SegmentKind>, mode: Option<Mode>, out: Option<&Path>) -> Run {
    let (family, mode) = match (input, kind) {
        (Some(path), _) => (
            read_segments(path)?,
            mode.ok_or_else(|| Error::Parse("--mode is required with --input".into()))?,
        ),
        (None, Some(kind)) => (segment_construction(kind), mode.unwrap_or(kind.mode())),
        (None, None) => return Err(Error::Parse("give --input or --construction".into())),
    };
    if let Some(path) = out {
        write_atomic(path, &(segments_to_json(&family) + "\n"))?;
    }
    let report = family_test(&family, mode)?;
    match report.failing_pair {
        None => println!("{} segments: {mode} family holds", family.len()),
        Some((i, j)) => println!("{} segments: {mode} fails for segments {i} and {j}", family.len()),
    }
    Ok(report.holds)
}

fn run(cli: Cli) -> Run {
    match cli.command {
        Command::Count {
            input,
            mode,
            oracle,
            certificates,
            in_affine_hull,
        } => count(&input, mode, oracle, certificates.as_deref(), in_affine_hull),
        Command::Construct { name, params, out } => construct_cmd(&name, &params, &out),
        Command::Verify { suite, report } => verify(&suite, report.as_deref()),
        Command::Bounds { dmax, csv, rule } => bounds(dmax, csv.as_deref(), rule),
        Command::Search {
            d,
            n,
            mode,
            objective,
            seed,
            budget,
            restarts,
            position,
            stop_at,
            params,
            out,
            log,
        } => {
            let params = match params {
                Some(p) => SearchParams::from_file(&p)?,
                None => SearchParams::default(),
            };
            let task = SearchTask {
                d,
                n,
                mode,
                objective,
                budget,
                seed,
                restarts,
                position,
                stop_at,
            };
            let result = search_extremal(&task, &params)?;
            write_config(&out, &result.best_config)?;
            let log = log.unwrap_or_else(|| out.with_extension("log.json"));
            write_atomic(
                &log,
                &(serde_json::to_string_pretty(&result.log(&task, &params))? + "\n"),
            )?;
            let name = if mode == Mode::Antipodal { "a" } else { "sa" };
            println!(
                "best {name} = {} (restart {}), written to {}",
                result.best_value,
                result.winner,
                out.display()
            );
            Ok(true)
        }
        Command::Segments {
            input,
            construction,
            mode,
            out,
        } => segments(input.as_deref(), construction, mode, out.as_deref()),
    }
}

/// Bad input exits with 2, failed checks with 1.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Verification(_) | Error::RetryCapExceeded(..) | Error::SearchFailed(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("ANTIPOD_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
