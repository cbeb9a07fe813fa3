//! `hexatile` subcommands. Exit codes: 0 success, 1 failed verification,
//! 2 usage, 3 domain or capacity, 4 IO.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hexatile_core::asymptotics::real::{real_rat, to_scientific};
use hexatile_core::asymptotics::{asym_ratio, classify_limit, LimitOutcome};
use hexatile_core::exactnum::rat_int;
use hexatile_core::formulas::{intrusion_count, intrusion_ratio, macmahon};
use hexatile_core::oracle::{count_pp_restricted, count_tilings_with, enumerate_pp, OracleConfig};
use hexatile_core::{Parity, RegionSpec};
use serde::Serialize;

use crate::json::{count_string, ratio_string, RegionDocument};
use crate::svg::render_svg;
use crate::verify::{Bounds, Suite, Verifier};

pub const MAX_WIDTH_VAR: &str = "HEXATILE_MAX_WIDTH";

#[derive(Debug, Parser)]
#[command(name = "hexatile", version, about = "Lozenge tilings of hexagons with a horizontal intrusion")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count tilings of H_{left,b,c;d} from the product formula.
    Count(CountArgs),
    /// Run a property sweep against the brute-force oracles.
    Verify(VerifyArgs),
    /// Compare exact intrusion ratios with the large-N estimate.
    Asym(AsymArgs),
    /// Draw a region as SVG, or dump it as JSON.
    Render(RenderArgs),
    /// Count boxed plane partitions, optionally with pinned anti-diagonal entries.
    Pp(PpArgs),
}

#[derive(Debug, Args)]
struct CountArgs {
    #[arg(long)]
    left: u32,
    #[arg(long)]
    b: u32,
    #[arg(long)]
    c: u32,
    #[arg(long, default_value_t = 0)]
    d: u32,
    /// Also count with the transfer-matrix oracle.
    #[arg(long)]
    oracle: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[arg(long)]
    max_m: Option<u32>,
    #[arg(long)]
    max_a: Option<u32>,
    #[arg(long)]
    max_c: Option<u32>,
    #[arg(long)]
    max_n: Option<u32>,
    #[arg(long)]
    max_x: Option<u32>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct AsymArgs {
    #[arg(long, value_enum)]
    parity: ParityArg,
    #[arg(long)]
    a: u32,
    #[arg(long)]
    b: u32,
    #[arg(long)]
    c: u32,
    #[arg(long)]
    d: u32,
    #[arg(long, value_delimiter = ',', default_value = "2,4,8,16")]
    grid: Vec<u32>,
    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    format: TableFormat,
    /// Significant digits of the decimal columns (at most 15).
    #[arg(long, default_value_t = 12)]
    digits: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Hexagon,
    Intruded,
    HPrime,
    HDoublePrime,
    R,
    Rbar,
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RenderFormat {
    Svg,
    Json,
}

#[derive(Debug, Args)]
struct RenderArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    left: Option<u32>,
    #[arg(long)]
    a: Option<u32>,
    #[arg(long)]
    b: Option<u32>,
    #[arg(long)]
    c: Option<u32>,
    #[arg(long)]
    d: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, allow_negative_numbers = true)]
    x: Option<i64>,
    /// Output file, `-` for standard output.
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value_t = RenderFormat::Svg)]
    format: RenderFormat,
}

#[derive(Debug, Args)]
struct PpArgs {
    #[arg(long)]
    b: u32,
    #[arg(long)]
    c: u32,
    #[arg(long)]
    height: u32,
    /// Pin the first d anti-diagonal entries to height/2.
    #[arg(long)]
    d: Option<u32>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(hexatile_core::Error),
    Io(String),
    Verification,
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Verification => 1,
            Failure::Usage(_) => 2,
            Failure::Domain(_) => 3,
            Failure::Io(_) => 4,
        }
    }
}

impl From<hexatile_core::Error> for Failure {
    fn from(e: hexatile_core::Error) -> Self {
        Failure::Domain(e)
    }
}

fn io_failure(what: &str, e: std::io::Error) -> Failure {
    Failure::Io(format!("{what}: {e}"))
}

fn oracle_config(max_width: Option<&str>) -> Result<OracleConfig, Failure> {
    match max_width {
        None => Ok(OracleConfig::default()),
        Some(v) => v
            .trim()
            .parse()
            .map(|w| OracleConfig { max_interface_width: w })
            .map_err(|_| Failure::Usage(format!("{MAX_WIDTH_VAR} must be a nonnegative integer (got {v:?})"))),
    }
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("report types always serialize");
    writeln!(out, "{text}").map_err(|e| io_failure("stdout", e))
}

#[derive(Serialize)]
struct CountReport {
    region: RegionSpec,
    count: String,
    ratio: String,
    source: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_count: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agrees: Option<bool>,
}

fn count(args: &CountArgs, config: &OracleConfig, out: &mut dyn Write) -> Result<(), Failure> {
    let (m, b, c, d) = (i64::from(args.left), i64::from(args.b), i64::from(args.c), i64::from(args.d));
    let formula = intrusion_count(m, b, c, d)?;
    let ratio = intrusion_ratio(Parity::of(m), m / 2, b, c, d)?;
    let mut report = CountReport {
        region: RegionSpec::Intruded { m, b, c, d },
        count: count_string(&formula.value),
        ratio: ratio_string(&ratio),
        source: "formula",
        oracle_count: None,
        agrees: None,
    };
    if args.oracle {
        let spec = RegionSpec::Intruded { m, b, c, d };
        let o = count_tilings_with(&spec.build()?, config)?;
        report.agrees = Some(o.value == formula.value);
        report.oracle_count = Some(count_string(&o.value));
    }
    emit_json(out, &report)
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    suite: &'a str,
    passed: bool,
    total: usize,
    failed: usize,
    checks: Vec<VerifyLine<'a>>,
}

#[derive(Serialize)]
struct VerifyLine<'a> {
    suite: &'a str,
    params: &'a str,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<&'a str>,
}

fn verify(args: &VerifyArgs, config: OracleConfig, out: &mut dyn Write) -> Result<(), Failure> {
    let bounds = Bounds {
        max_m: args.max_m.map(i64::from),
        max_a: args.max_a.map(i64::from),
        max_c: args.max_c.map(i64::from),
        max_n: args.max_n.map(i64::from),
        max_x: args.max_x.map(i64::from),
    };
    let mut v = Verifier::new(bounds, config);
    v.run(args.suite);
    let failed = v.checks.iter().filter(|c| !c.passed).count();
    let suite_name = args.suite.to_possible_value().map(|p| p.get_name().to_string()).unwrap_or_default();
    if args.json {
        let report = VerifyReport {
            suite: &suite_name,
            passed: failed == 0,
            total: v.checks.len(),
            failed,
            checks: v
                .checks
                .iter()
                .map(|c| VerifyLine { suite: c.suite, params: &c.params, passed: c.passed, detail: c.detail.as_deref() })
                .collect(),
        };
        emit_json(out, &report)?;
    } else {
        let mut text = String::new();
        for c in &v.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            text.push_str(&format!("{status} {} {}", c.suite, c.params));
            if let Some(d) = &c.detail {
                text.push_str(&format!(" ({d})"));
            }
            text.push('\n');
        }
        text.push_str(&format!("{suite_name}: {} of {} checks passed\n", v.checks.len() - failed, v.checks.len()));
        out.write_all(text.as_bytes()).map_err(|e| io_failure("stdout", e))?;
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

#[derive(Serialize)]
struct AsymRow {
    n: u32,
    exact: String,
    estimate: String,
    quotient: String,
}

#[derive(Serialize)]
struct AsymReport {
    parity: &'static str,
    a: u32,
    b: u32,
    c: u32,
    d: u32,
    classification: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    criterion: Option<String>,
    rows: Vec<AsymRow>,
}

fn asym(args: &AsymArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let (parity, parity_name) = match args.parity {
        ParityArg::Even => (Parity::Even, "even"),
        ParityArg::Odd => (Parity::Odd, "odd"),
    };
    let (a, b, c, d) = (i64::from(args.a), i64::from(args.b), i64::from(args.c), i64::from(args.d));
    let class = classify_limit(parity, a, b, c, d)?;
    let mut rows = Vec::with_capacity(args.grid.len());
    for &n in &args.grid {
        let e = asym_ratio(parity, a, b, c, d, i64::from(n))?.with_exact()?;
        let exact = e.exact.as_ref().expect("filled by with_exact");
        rows.push(AsymRow {
            n,
            exact: to_scientific(&real_rat(exact), args.digits),
            estimate: to_scientific(&e.value, args.digits),
            quotient: to_scientific(&e.quotient().expect("exact present"), args.digits),
        });
    }
    let classification = match class.outcome {
        LimitOutcome::Zero => "Zero",
        LimitOutcome::Infinity => "Infinity",
    };
    match args.format {
        TableFormat::Json => emit_json(
            out,
            &AsymReport {
                parity: parity_name,
                a: args.a,
                b: args.b,
                c: args.c,
                d: args.d,
                classification,
                criterion: class.criterion.as_ref().map(ratio_string),
                rows,
            },
        ),
        TableFormat::Csv => {
            let mut text = String::from("n,exact,estimate,quotient,classification\n");
            for r in rows {
                text.push_str(&format!("{},{},{},{},{classification}\n", r.n, r.exact, r.estimate, r.quotient));
            }
            out.write_all(text.as_bytes()).map_err(|e| io_failure("stdout", e))
        }
    }
}

fn need(value: Option<u32>, flag: &str, family: &str) -> Result<i64, Failure> {
    value.map(i64::from).ok_or_else(|| Failure::Usage(format!("--{flag} is required for --family {family}")))
}

fn render_spec(args: &RenderArgs) -> Result<RegionSpec, Failure> {
    let name = args.family.to_possible_value().map(|p| p.get_name().to_string()).unwrap_or_default();
    let f = name.as_str();
    Ok(match args.family {
        Family::Hexagon => RegionSpec::Hexagon { a: need(args.a, "a", f)?, b: need(args.b, "b", f)?, c: need(args.c, "c", f)? },
        Family::Intruded => RegionSpec::Intruded {
            m: need(args.left, "left", f)?,
            b: need(args.b, "b", f)?,
            c: need(args.c, "c", f)?,
            d: need(args.d, "d", f)?,
        },
        Family::HPrime | Family::HDoublePrime => {
            let (a, b, c, k) = (need(args.a, "a", f)?, need(args.b, "b", f)?, need(args.c, "c", f)?, need(args.k, "k", f)?);
            if matches!(args.family, Family::HPrime) {
                RegionSpec::HPrime { a, b, c, k }
            } else {
                RegionSpec::HDoublePrime { a, b, c, k }
            }
        }
        Family::R | Family::Rbar => {
            let (m, n) = (need(args.m, "m", f)?, need(args.n, "n", f)?);
            let x = args.x.ok_or_else(|| Failure::Usage(format!("--x is required for --family {f}")))?;
            if matches!(args.family, Family::R) {
                RegionSpec::R { m, n, x }
            } else {
                RegionSpec::Rbar { m, n, x }
            }
        }
        Family::Plus | Family::Minus => {
            let (m, c, d) = (need(args.left, "left", f)?, need(args.c, "c", f)?, need(args.d, "d", f)?);
            if matches!(args.family, Family::Plus) {
                RegionSpec::PlusPart { m, c, d }
            } else {
                RegionSpec::MinusPart { m, c, d }
            }
        }
    })
}

fn render(args: &RenderArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let region = render_spec(args)?.build()?;
    let text = match args.format {
        RenderFormat::Svg => render_svg(&region),
        RenderFormat::Json => {
            let mut t = serde_json::to_string_pretty(&RegionDocument::from_region(&region)).expect("documents serialize");
            t.push('\n');
            t
        }
    };
    if args.out.as_os_str() == "-" {
        out.write_all(text.as_bytes()).map_err(|e| io_failure("stdout", e))
    } else {
        std::fs::write(&args.out, text).map_err(|e| io_failure(&args.out.display().to_string(), e))
    }
}

#[derive(Serialize)]
struct PpReport {
    b: u32,
    c: u32,
    height: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    d: Option<u32>,
    count: String,
    formula: String,
    agrees: bool,
}

fn pp(args: &PpArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let (b, c, h) = (i64::from(args.b), i64::from(args.c), i64::from(args.height));
    let (count, formula) = match args.d {
        None => (enumerate_pp(b, c, h)?, macmahon(b, c, h)?.value),
        Some(d) => (count_pp_restricted(b, c, h, i64::from(d))?, intrusion_count(h, b, c, i64::from(d))?.value),
    };
    let count = rat_int(count);
    emit_json(
        out,
        &PpReport {
            b: args.b,
            c: args.c,
            height: args.height,
            d: args.d,
            agrees: count == formula,
            count: count_string(&count),
            formula: count_string(&formula),
        },
    )
}

/// Runs the CLI; `max_width` is the value of `HEXATILE_MAX_WIDTH`, if set.
pub fn run<I, T>(args: I, max_width: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let result = oracle_config(max_width).and_then(|config| match &cli.command {
        Command::Count(a) => count(a, &config, out),
        Command::Verify(a) => verify(a, config, out),
        Command::Asym(a) => asym(a, out),
        Command::Render(a) => render(a, out),
        Command::Pp(a) => pp(a, out),
    });
    match result {
        Ok(()) => 0,
        Err(f) => {
            let _ = match &f {
                Failure::Usage(m) => writeln!(err, "usage error: {m}"),
                Failure::Domain(e) => writeln!(err, "{e}"),
                Failure::Io(m) => writeln!(err, "io error: {m}"),
                Failure::Verification => writeln!(err, "verification failed"),
            };
            f.code()
        }
    }
}
