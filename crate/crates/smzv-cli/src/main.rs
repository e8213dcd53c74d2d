//! Command-line front end: evaluate split t-series and run the verification
//! batteries with byte-stable text or JSON reports.
//!
//! Exit codes are part of the contract: 0 all checks pass, 2 usage error
//! (bad arguments, unknown target or id), 3 requested precision unreachable,
//! 4 a verification check failed.

use clap::{Parser, Subcommand, ValueEnum};
use smzv::expr::format_series;
use smzv::genseries::{verify_series, SeriesReport};
use smzv::index::Index;
use smzv::json::{index_value, series_value};
use smzv::numeric::bigfloat::{bits_for_digits, BigFloat};
use smzv::numeric::eval::eval_series;
use smzv::numeric::{load_cache_file, save_cache_file};
use smzv::smzv::{t_adic_smzv, RegularizationFlavor};
use smzv::verify::{
    pow10_tolerance, verify_all, verify_antipode, verify_astsh, verify_conjectures,
    verify_duality, verify_index_lemmas, verify_intro_t2, verify_numeric, verify_regshwd,
    verify_series_target, verify_summary, verify_theorem, verify_word_lemmas, AllReport, Report,
};
use smzv::Error;
use std::path::PathBuf;

const EXIT_USAGE: i32 = 2;
const EXIT_PRECISION: i32 = 3;
const EXIT_VERIFICATION: i32 = 4;

#[derive(Parser)]
#[command(
    name = "smzv",
    version,
    about = "Exact and high-precision checks for t-adic symmetric multiple zeta values"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Flavor {
    /// Shuffle regularization.
    Sh,
    /// Harmonic (stuffle) regularization.
    Star,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the split t-series of one index, symbolically and optionally
    /// numerically.
    Eval {
        /// Comma-separated index parts; the empty string is the empty index.
        #[arg(long)]
        index: String,
        /// Truncation order: the series is reported mod t^m.
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Regularization flavor.
        #[arg(long, value_enum, default_value_t = Flavor::Sh)]
        flavor: Flavor,
        /// Evaluate every coefficient numerically.
        #[arg(long)]
        numeric: bool,
        /// Working precision, in decimal digits.
        #[arg(long, default_value_t = 40)]
        prec: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Zeta-value cache file; the SMZV_CACHE environment variable
        /// overrides this flag.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Run one verification battery, or all of them.
    Verify {
        /// word | index | regshwd | astsh | duality | antipode | numeric |
        /// theorem | summary | series | intro-t2-coefficient | conjectures |
        /// all
        target: String,
        /// Statement id inside the battery (e.g. wordA, I1rev, main0,
        /// ZHAT_1, or a series lemma id); omit to run the whole battery.
        id: Option<String>,
        /// Largest family parameter n to check, where applicable.
        #[arg(long)]
        max_n: Option<u32>,
        /// Working precision for numeric targets, in decimal digits.
        #[arg(long, default_value_t = 60)]
        prec: u32,
        /// Numeric tolerance; defaults to 10^-(prec-20).
        #[arg(long)]
        tol: Option<String>,
        /// Seed for the randomized batteries.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Series order for the series target.
        #[arg(long, default_value_t = 14)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Zeta-value cache file; SMZV_CACHE overrides.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Check one generating-series identity coefficient by coefficient.
    Series {
        /// Catalogue id (e.g. "lem:zeta(4^n)_gen") or "preamble".
        lemma: String,
        /// Number of series coefficients to compare.
        #[arg(long, default_value_t = 14)]
        order: usize,
        /// Working precision, in decimal digits.
        #[arg(long, default_value_t = 60)]
        prec: u32,
        /// Numeric tolerance; defaults to 10^-(prec-20).
        #[arg(long)]
        tol: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Zeta-value cache file; SMZV_CACHE overrides.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Eval {
            index,
            m,
            flavor,
            numeric,
            prec,
            format,
            cache,
        } => run_eval(&index, m, flavor, numeric, prec, format, cache),
        Command::Verify {
            target,
            id,
            max_n,
            prec,
            tol,
            seed,
            order,
            format,
            cache,
        } => run_verify(&target, id.as_deref(), max_n, prec, tol, seed, order, format, cache),
        Command::Series {
            lemma,
            order,
            prec,
            tol,
            format,
            cache,
        } => run_series(&lemma, order, prec, tol, format, cache),
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::PrecisionUnreachable { .. } => EXIT_PRECISION,
        _ => EXIT_USAGE,
    }
}

/// SMZV_CACHE wins over --cache; either may be absent.
fn cache_path(flag: Option<PathBuf>) -> Option<PathBuf> {
    std::env::var_os("SMZV_CACHE").map(PathBuf::from).or(flag)
}

fn load_cache(path: &Option<PathBuf>) {
    if let Some(p) = path {
        if p.exists() {
            if let Err(e) = load_cache_file(p) {
                eprintln!("warning: could not load cache {}: {e}", p.display());
            }
        }
    }
}

fn save_cache(path: &Option<PathBuf>) {
    if let Some(p) = path {
        if let Err(e) = save_cache_file(p) {
            eprintln!("warning: could not save cache {}: {e}", p.display());
        }
    }
}

fn parse_tolerance(tol: Option<String>, prec: u32) -> Result<BigFloat, i32> {
    match tol {
        Some(s) => BigFloat::parse(&s, bits_for_digits(prec)).map_err(|e| {
            eprintln!("error: invalid --tol: {e}");
            EXIT_USAGE
        }),
        None => Ok(pow10_tolerance(prec.saturating_sub(20), prec)),
    }
}

#[allow(clippy::too_many_arguments)]
fn run_eval(
    index: &str,
    m: usize,
    flavor: Flavor,
    numeric: bool,
    prec: u32,
    format: Format,
    cache: Option<PathBuf>,
) -> i32 {
    if m < 1 {
        eprintln!("error: --m must be at least 1");
        return EXIT_USAGE;
    }
    let k = match Index::parse(index) {
        Ok(k) => k,
        Err(e) => {
            eprintln!("error: invalid --index: {e}");
            return EXIT_USAGE;
        }
    };
    let reg = match flavor {
        Flavor::Sh => RegularizationFlavor::Shuffle,
        Flavor::Star => RegularizationFlavor::Harmonic,
    };
    let series = t_adic_smzv(&k, m, reg);

    let cache = cache_path(cache);
    load_cache(&cache);
    let values = if numeric {
        match eval_series(&series, prec) {
            Ok(v) => Some(v),
            Err(e) => {
                eprintln!("error: {e}");
                return exit_code_for(&e);
            }
        }
    } else {
        None
    };
    save_cache(&cache);

    let flavor_name = match flavor {
        Flavor::Sh => "sh",
        Flavor::Star => "star",
    };
    match format {
        Format::Text => {
            println!("index: {k}");
            println!("flavor: {flavor_name}");
            println!("series: {}", format_series(&series));
            if let Some(values) = &values {
                for (j, v) in values.iter().enumerate() {
                    println!("t^{j} = {}", v.to_decimal(prec));
                }
            }
        }
        Format::Json => {
            let mut doc = serde_json::json!({
                "schema": "smzv-report/1",
                "target": "eval",
                "index": index_value(&k),
                "flavor": flavor_name,
                "series": series_value(&series),
            });
            if let Some(values) = &values {
                doc["precision"] = serde_json::json!(prec);
                doc["numeric"] = serde_json::Value::Array(
                    values.iter().map(|v| serde_json::json!(v.to_decimal(prec))).collect(),
                );
            }
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
    0
}

enum VerifyOutcome {
    One(Report),
    All(Box<AllReport>),
}

#[allow(clippy::too_many_arguments)]
fn run_verify(
    target: &str,
    id: Option<&str>,
    max_n: Option<u32>,
    prec: u32,
    tol: Option<String>,
    seed: u64,
    order: usize,
    format: Format,
    cache: Option<PathBuf>,
) -> i32 {
    let tolerance = match parse_tolerance(tol, prec) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let reject_id = |outcome: smzv::Result<Report>| -> smzv::Result<VerifyOutcome> {
        if let Some(extra) = id {
            return Err(Error::UnknownId(format!(
                "target {target} does not take an id (got {extra:?})"
            )));
        }
        outcome.map(VerifyOutcome::One)
    };

    let cache = cache_path(cache);
    load_cache(&cache);
    let outcome = match target {
        "word" | "word-lemmas" => verify_word_lemmas(id, max_n).map(VerifyOutcome::One),
        "index" | "index-lemmas" => verify_index_lemmas(id, max_n, seed).map(VerifyOutcome::One),
        "regshwd" => reject_id(verify_regshwd()),
        "astsh" => reject_id(verify_astsh(prec, &tolerance, seed)),
        "duality" => reject_id(verify_duality(prec, &tolerance, seed)),
        "antipode" => reject_id(verify_antipode(prec, &tolerance)),
        "numeric" => reject_id(verify_numeric(prec, &tolerance, seed)),
        "theorem" | "theorems" => {
            verify_theorem(id, max_n, prec, &tolerance).map(VerifyOutcome::One)
        }
        "summary" => verify_summary(id, prec, &tolerance).map(VerifyOutcome::One),
        "series" => verify_series_target(id, order, prec, &tolerance).map(VerifyOutcome::One),
        "intro-t2-coefficient" => reject_id(verify_intro_t2(prec, &tolerance)),
        "conjectures" => reject_id(verify_conjectures()),
        "all" => {
            if id.is_some() {
                Err(Error::UnknownId("target all does not take an id".to_string()))
            } else {
                verify_all(prec, &tolerance, seed).map(|r| VerifyOutcome::All(Box::new(r)))
            }
        }
        other => Err(Error::UnknownId(format!("unknown verify target {other:?}"))),
    };
    save_cache(&cache);

    match outcome {
        Ok(VerifyOutcome::One(report)) => {
            match format {
                Format::Text => print!("{}", report.render_text()),
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
            }
            if report.passed() {
                0
            } else {
                EXIT_VERIFICATION
            }
        }
        Ok(VerifyOutcome::All(report)) => {
            match format {
                Format::Text => print!("{}", report.render_text()),
                Format::Json => println!("{}", serde_json::to_string_pretty(&*report).unwrap()),
            }
            if report.passed() {
                0
            } else {
                EXIT_VERIFICATION
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn render_series_text(report: &SeriesReport) -> String {
    let mut out = format!(
        "lemma: {}  (order {}, precision {})\n",
        report.lemma, report.order, report.precision
    );
    for row in &report.coefficients {
        let status = if row.pass { "pass" } else { "FAIL" };
        out.push_str(&format!(
            "  {status}  u^{:<3} lhs {:<32} rhs {:<32} |diff| = {}\n",
            row.power, row.lhs, row.rhs, row.absdiff
        ));
    }
    out.push_str(&format!("verdict: {}\n", report.verdict));
    out
}

fn run_series(
    lemma: &str,
    order: usize,
    prec: u32,
    tol: Option<String>,
    format: Format,
    cache: Option<PathBuf>,
) -> i32 {
    let tolerance = match parse_tolerance(tol, prec) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let cache = cache_path(cache);
    load_cache(&cache);
    let outcome = verify_series(lemma, order, prec, &tolerance);
    save_cache(&cache);
    match outcome {
        Ok(report) => {
            match format {
                Format::Text => print!("{}", render_series_text(&report)),
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
            }
            if report.passed() {
                0
            } else {
                EXIT_VERIFICATION
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}
