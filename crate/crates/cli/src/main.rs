//! `wpgap`: enumeration, weight and classification queries, bound
//! verification runs, and table emission over numerical semigroups.
//!
//! Exit codes: 0 all checks passed, 1 a mathematical check failed
//! (counterexample found), 2 usage error, 3 resource cap exceeded.
//! Reports go to stdout, diagnostics to stderr.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wpgap_core::bounds::Rational64;
use wpgap_core::{
    bounds, cache, enumeration, EnumerationConfig, EnumerationFilter, Error, LemmaClass,
    NumericalSemigroup, TPolicy,
};

const EXIT_OK: u8 = 0;
const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "wpgap",
    version,
    about = "Numerical semigroups, Weierstrass gap sequences, and double-covering weight bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all numerical semigroups of a genus, optionally filtered.
    Enumerate(EnumerateArgs),
    /// Run exhaustive or closed-form verification checks.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Emit CSV tables of thresholds, bounds, or counting comparisons.
    #[command(subcommand)]
    Table(TableCommand),
    /// Weight and invariants of a single gap set.
    Weight(WeightArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    /// Target genus.
    #[arg(long)]
    genus: u32,
    /// Keep only semigroups with at least this multiplicity.
    #[arg(long = "min-mult")]
    min_mult: Option<u32>,
    /// Keep only semigroups with exactly this many even gaps.
    #[arg(long = "even-gaps")]
    even_gaps: Option<u32>,
    /// Interval A:B that must consist of elements only.
    #[arg(long = "require-interval", value_parser = parse_range_u32)]
    require_interval: Option<(u32, u32)>,
    /// Interval A:B that must contain at least one gap.
    #[arg(long = "require-gap-in", value_parser = parse_range_u32)]
    require_gap_in: Option<(u32, u32)>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Lines)]
    format: Format,
    /// Sort gap sets lexicographically before emitting.
    #[arg(long)]
    sorted: bool,
    /// Cache directory; overrides WPGAP_CACHE_DIR.
    #[arg(long = "cache-dir")]
    cache_dir: Option<PathBuf>,
    /// Worker threads. Never changes output, only wall time.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Refuse genera above this cap.
    #[arg(long = "genus-cap", default_value_t = 35)]
    genus_cap: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Lines,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Exhaustively verify the per-class weight caps over a genus range.
    Lemma(VerifyLemmaArgs),
    /// Run the distinct-point counting pipeline against N(g, 1).
    Theorem(VerifyTheoremArgs),
}

#[derive(Args)]
struct VerifyLemmaArgs {
    #[arg(long)]
    gamma: u32,
    /// Genus range A:B, inclusive.
    #[arg(long = "genus-range", value_parser = parse_range_u32)]
    genus_range: (u32, u32),
    /// Candidate class: I, II, a, b, or III.
    #[arg(long = "class", value_parser = parse_class)]
    class: LemmaClass,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long = "genus-cap", default_value_t = 35)]
    genus_cap: u32,
}

#[derive(Args)]
struct VerifyTheoremArgs {
    #[arg(long)]
    gamma: i64,
    /// Single genus to check.
    #[arg(long, conflicts_with = "genus_range")]
    genus: Option<i64>,
    /// Genus range A:B, inclusive.
    #[arg(long = "genus-range", value_parser = parse_range_i64)]
    genus_range: Option<(i64, i64)>,
    /// Which type-I count the pipeline assumes.
    #[arg(long = "t-policy", value_enum, default_value_t = PolicyArg::Min)]
    t_policy: PolicyArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyArg {
    Paper,
    Min,
}

#[derive(Subcommand)]
enum TableCommand {
    /// Published genus thresholds next to the exact scan minimum.
    Thresholds(ThresholdArgs),
    /// c1/c2/c3, N(g,1) and omega_1 along a genus range.
    Bounds(BoundsArgs),
    /// The n >= 2 counting comparison along a genus range.
    #[command(name = "pflaum-n2")]
    PflaumN2(PflaumArgs),
}

#[derive(Args)]
struct ThresholdArgs {
    /// Gamma range A:B, inclusive.
    #[arg(long = "gamma-range", value_parser = parse_range_i64)]
    gamma_range: (i64, i64),
    /// Upper end of the exact scan.
    #[arg(long = "scan-max", default_value_t = 500)]
    scan_max: i64,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    gamma: i64,
    #[arg(long = "genus-range", value_parser = parse_range_i64)]
    genus_range: (i64, i64),
}

#[derive(Args)]
struct PflaumArgs {
    #[arg(long = "genus-range", value_parser = parse_range_i64)]
    genus_range: (i64, i64),
    #[arg(long)]
    n: i64,
}

#[derive(Args)]
struct WeightArgs {
    /// Comma-separated ascending gaps; empty string for the naturals.
    #[arg(long, allow_hyphen_values = false)]
    gaps: String,
}

fn parse_range_u32(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("expected A:B, got {s:?}"))?;
    let a: u32 = a.parse().map_err(|_| format!("bad range start {a:?}"))?;
    let b: u32 = b.parse().map_err(|_| format!("bad range end {b:?}"))?;
    if a > b {
        return Err(format!("range start {a} exceeds end {b}"));
    }
    Ok((a, b))
}

fn parse_range_i64(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("expected A:B, got {s:?}"))?;
    let a: i64 = a.parse().map_err(|_| format!("bad range start {a:?}"))?;
    let b: i64 = b.parse().map_err(|_| format!("bad range end {b:?}"))?;
    if a > b {
        return Err(format!("range start {a} exceeds end {b}"));
    }
    Ok((a, b))
}

fn parse_class(s: &str) -> Result<LemmaClass, String> {
    match s {
        "I" => Ok(LemmaClass::TypeI),
        "II" => Ok(LemmaClass::TypeII),
        "a" => Ok(LemmaClass::CaseA),
        "b" => Ok(LemmaClass::CaseB),
        "III" => Ok(LemmaClass::AllType3),
        other => Err(format!(
            "unknown class {other:?}; expected I, II, a, b or III"
        )),
    }
}

fn class_token(kind: LemmaClass) -> &'static str {
    match kind {
        LemmaClass::TypeI => "I",
        LemmaClass::TypeII => "II",
        LemmaClass::CaseA => "a",
        LemmaClass::CaseB => "b",
        LemmaClass::AllType3 => "III",
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::GenusTooLarge { .. } => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    }
}

fn rational_json(r: &Rational64) -> Value {
    json!({ "num": *r.numer(), "den": *r.denom() })
}

fn gaps_value(gaps: &[u32]) -> Value {
    Value::Array(gaps.iter().map(|&x| json!(x)).collect())
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<u8, Error> {
    let mut filter = EnumerationFilter::none();
    filter.min_multiplicity = args.min_mult;
    filter.even_gap_count = args.even_gaps;
    filter.required_interval = args.require_interval;
    filter.required_gap_in = args.require_gap_in;

    let cfg = EnumerationConfig::default()
        .with_jobs(args.jobs)
        .with_genus_cap(args.genus_cap);

    let cache_dir = args
        .cache_dir
        .clone()
        .or_else(|| std::env::var_os("WPGAP_CACHE_DIR").map(PathBuf::from));
    let mut sems = match &cache_dir {
        Some(dir) => cache::enumerate_filtered_cached(args.genus, &filter, &cfg, dir)?,
        None => enumeration::enumerate_filtered(args.genus, &filter, &cfg)?,
    };
    if args.sorted {
        sems.sort_by(|a, b| a.gaps().cmp(b.gaps()));
    }

    match args.format {
        Format::Lines => {
            for s in &sems {
                println!("{s}");
            }
        }
        Format::Csv => {
            println!("genus,multiplicity,conductor,weight,even_gaps,gaps");
            for s in &sems {
                let joined: Vec<String> = s.gaps().iter().map(|x| x.to_string()).collect();
                println!(
                    "{},{},{},{},{},{}",
                    s.genus(),
                    s.multiplicity(),
                    s.conductor(),
                    s.weight(),
                    s.even_gap_count(),
                    joined.join(" ")
                );
            }
        }
        Format::Json => {
            let doc = json!({
                "wpgap_report": 1,
                "command": "enumerate",
                "genus": args.genus,
                "filter": filter.canonical_string(),
                "count": sems.len(),
                "gap_sets": sems.iter().map(|s| gaps_value(s.gaps())).collect::<Vec<_>>(),
            });
            println!("{doc}");
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify_lemma(args: &VerifyLemmaArgs) -> Result<u8, Error> {
    let cfg = EnumerationConfig::default()
        .with_jobs(args.jobs)
        .with_genus_cap(args.genus_cap);
    let mut results = Vec::new();
    let mut all_hold = true;
    for g in args.genus_range.0..=args.genus_range.1 {
        let v = bounds::verify_lemma(g, args.gamma, args.class, &cfg)?;
        all_hold &= v.holds;
        results.push(json!({
            "genus": v.g,
            "bound": v.bound,
            "class_count": v.class_count,
            "class_empty": v.class_count == 0,
            "max_observed": v.max_observed,
            "witness": v.witness.as_deref().map(gaps_value),
            "holds": v.holds,
        }));
    }
    let doc = json!({
        "wpgap_report": 1,
        "command": "verify",
        "check": "lemma",
        "gamma": args.gamma,
        "class": class_token(args.class),
        "results": results,
        "all_hold": all_hold,
    });
    println!("{doc}");
    Ok(if all_hold { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn cmd_verify_theorem(args: &VerifyTheoremArgs) -> Result<u8, Error> {
    let policy = match args.t_policy {
        PolicyArg::Paper => TPolicy::PaperT,
        PolicyArg::Min => TPolicy::MinT,
    };
    let (lo, hi) = match (args.genus, args.genus_range) {
        (Some(g), None) => (g, g),
        (None, Some(r)) => r,
        (None, None) => {
            return Err(Error::PreconditionViolated(
                "verify theorem needs --genus or --genus-range".into(),
            ))
        }
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    };
    let mut results = Vec::new();
    let mut all_hold = true;
    for g in lo..=hi {
        let r = bounds::theorem_pipeline(g, args.gamma, policy)?;
        all_hold &= r.holds;
        results.push(json!({
            "genus": r.g,
            "t_used": r.t_used,
            "numerator": r.numerator,
            "nonpositive_numerator": r.nonpositive_numerator,
            "c3": r.c3,
            "w1_lower": r.w1_lower,
            "n_g_1": r.n_g_1,
            "holds": r.holds,
            "closed_form": r.closed_form.as_ref().map(rational_json),
        }));
    }
    let doc = json!({
        "wpgap_report": 1,
        "command": "verify",
        "check": "theorem",
        "gamma": args.gamma,
        "t_policy": match policy { TPolicy::PaperT => "paper", TPolicy::MinT => "min" },
        "results": results,
        "all_hold": all_hold,
    });
    println!("{doc}");
    Ok(if all_hold { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn cmd_table_thresholds(args: &ThresholdArgs) -> Result<u8, Error> {
    println!("gamma,paper_threshold,exact_min_genus");
    for gamma in args.gamma_range.0..=args.gamma_range.1 {
        let paper = bounds::genus_threshold(gamma)?;
        let exact = bounds::exact_min_genus(gamma, args.scan_max)?;
        let exact = exact.map_or_else(|| "none".to_string(), |v| v.to_string());
        println!("{gamma},{paper},{exact}");
    }
    Ok(EXIT_OK)
}

fn cmd_table_bounds(args: &BoundsArgs) -> Result<u8, Error> {
    println!("g,c1,c2,c3,N,omega1");
    for g in args.genus_range.0..=args.genus_range.1 {
        let b = bounds::bound_set(g, args.gamma, 1)?;
        println!("{g},{},{},{},{},{}", b.c1, b.c2, b.c3, b.n_g_n, b.omega_n);
    }
    Ok(EXIT_OK)
}

fn cmd_table_pflaum(args: &PflaumArgs) -> Result<u8, Error> {
    println!("g,n,omega_n,W_lower,N,holds");
    for g in args.genus_range.0..=args.genus_range.1 {
        let om = bounds::omega(g, args.n)?;
        let lower = bounds::homma_ommori_lower_wn(g, args.n)?;
        let n = bounds::n_g_n(g, args.n)?;
        println!("{g},{},{om},{lower},{n},{}", args.n, lower > n);
    }
    Ok(EXIT_OK)
}

fn cmd_weight(args: &WeightArgs) -> Result<u8, Error> {
    let gaps: Vec<u32> = if args.gaps.trim().is_empty() {
        Vec::new()
    } else {
        args.gaps
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidGapList(format!("bad gap entry {t:?}")))
            })
            .collect::<Result<_, _>>()?
    };
    let s = NumericalSemigroup::from_gaps(&gaps)?;
    let doc = json!({
        "wpgap_report": 1,
        "command": "weight",
        "gaps": gaps_value(s.gaps()),
        "genus": s.genus(),
        "multiplicity": s.multiplicity(),
        "conductor": s.conductor(),
        "weight": s.weight(),
        "even_gaps": s.even_gap_count(),
    });
    println!("{doc}");
    Ok(EXIT_OK)
}

fn run(cli: &Cli) -> Result<u8, Error> {
    match &cli.command {
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Verify(VerifyCommand::Lemma(args)) => cmd_verify_lemma(args),
        Command::Verify(VerifyCommand::Theorem(args)) => cmd_verify_theorem(args),
        Command::Table(TableCommand::Thresholds(args)) => cmd_table_thresholds(args),
        Command::Table(TableCommand::Bounds(args)) => cmd_table_bounds(args),
        Command::Table(TableCommand::PflaumN2(args)) => cmd_table_pflaum(args),
        Command::Weight(args) => cmd_weight(args),
    }
}

fn main() -> ExitCode {
    // clap exits with code 2 on usage errors by itself.
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("wpgap: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
