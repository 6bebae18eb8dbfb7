//! Batch command-line front end: sequences, Hankel determinants,
//! orthogonal polynomials, Jacobi parameters, continued fractions,
//! shifted determinants, the built-in tables, float validation of the
//! analytic identities, and the full verification suite.
//!
//! Exit codes: 0 success, 1 mismatch or failed verification, 2 usage
//! error. The env var `HF_MAX_DEPTH` caps every depth-like parameter.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use hankelfrac::cfrac::formal::jfraction_series;
use hankelfrac::cfrac::{cf_even_contraction, cf_odd_contraction, CFSpec};
use hankelfrac::exact::{format_rat, Poly};
use hankelfrac::hankel::{
    closed_bernoulli_even_center, closed_bernoulli_numbers, closed_bernoulli_odd_factored,
    closed_euler_factored, hankel_det, EulerKind,
};
use hankelfrac::numerics::{validate_identity, Identity, IdentityParams};
use hankelfrac::orthopoly::{jacobi_from_moments, named_family, Family};
use hankelfrac::render::{poly_content_form, poly_latex, FactoredForm};
use hankelfrac::seq::special::{bernoulli_number, bernoulli_poly, euler_number, euler_poly};
use hankelfrac::seq::{MomentSeq, SeqSpec};
use hankelfrac::shift::{dn_via_recurrence, shifted_hankel_via_minors};
use hankelfrac::verify::{run_scope, VerifyConfig};

#[derive(Parser)]
#[command(
    name = "hankelfrac",
    version,
    about = "Exact Hankel determinants, orthogonal polynomials, and Jacobi continued fractions for Bernoulli/Euler moment sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Latex,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the first terms of a moment sequence
    Seq(SeqArgs),
    /// Hankel determinant of a sequence, optionally with its closed form
    Hankel(HankelArgs),
    /// A named orthogonal-polynomial family member
    Orthpoly(OrthArgs),
    /// Jacobi parameters extracted from a sequence's moments
    Jacobi(JacobiArgs),
    /// Continued-fraction operations
    #[command(subcommand)]
    Cfrac(CfracCmd),
    /// Shifted-sequence Hankel determinants
    Shift(ShiftArgs),
    /// Regenerate one of the built-in tables
    Table(TableArgs),
    /// Validate an analytic identity numerically
    Validate(ValidateArgs),
    /// Run the machine-verification suite
    Verify(VerifyArgs),
}

#[derive(Args)]
struct SeqArgs {
    /// Sequence name, e.g. bernoulli-odd-half or shifted(euler-nu-half(0),1)
    #[arg(long)]
    seq: String,
    /// How many leading terms to emit
    #[arg(long, default_value_t = 8)]
    count: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct HankelArgs {
    #[arg(long)]
    seq: String,
    /// Determinant index: H_n is the (n+1) x (n+1) determinant
    #[arg(long)]
    n: usize,
    /// Also evaluate the closed product form, when one exists
    #[arg(long)]
    closed_form: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct OrthArgs {
    /// touchard | alsalam-carlitz | bernoulli-odd | euler-nu(0|1|2)
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct JacobiArgs {
    #[arg(long)]
    seq: String,
    #[arg(long)]
    depth: usize,
}

#[derive(Subcommand)]
enum CfracCmd {
    /// Expand a family's J-fraction as a power series
    Expand(ExpandArgs),
    /// Contract a literal continued fraction (JSON on stdin or --input)
    Contract(ContractArgs),
}

#[derive(Args)]
struct ExpandArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    order: i64,
}

#[derive(Args)]
struct ContractArgs {
    /// even: approximants k <-> 2k; odd: k <-> 2k+1
    #[arg(long)]
    mode: String,
    #[arg(long)]
    depth: usize,
    /// Path to a JSON CF description; defaults to stdin
    #[arg(long)]
    input: Option<String>,
}

#[derive(Args)]
struct ShiftArgs {
    #[arg(long)]
    seq: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    shift: usize,
    /// prop: from unshifted data via the band minors; direct: determinant
    /// of the shifted sequence
    #[arg(long, default_value = "prop")]
    via: String,
}

#[derive(Args)]
struct TableArgs {
    /// 1: factored odd-Bernoulli determinants; 2: Bernoulli/Euler numbers
    /// and polynomials; 3: odd-Euler band minors
    #[arg(long)]
    which: u32,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct ValidateArgs {
    /// ramanujan-trigamma | lange-digamma-sum | lange-digamma-alt
    #[arg(long)]
    identity: String,
    #[arg(long, default_value_t = 10.0)]
    s: f64,
    #[arg(long, default_value_t = 0.5)]
    a: f64,
    #[arg(long, default_value_t = 0.5)]
    b: f64,
    #[arg(long, default_value_t = 30)]
    depth: usize,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
}

#[derive(Args)]
struct VerifyArgs {
    /// "all", a module name, or a check id
    #[arg(default_value = "all")]
    scope: String,
    #[arg(long, default_value_t = 8)]
    max_depth: usize,
    /// Seed for the randomized suites
    #[arg(long, default_value_t = 0x5EED_0123)]
    seed: u64,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

/// Depth cap from the environment; applies to every depth-like flag.
fn env_depth_cap() -> Option<usize> {
    std::env::var("HF_MAX_DEPTH")
        .ok()
        .and_then(|v| v.parse().ok())
}

fn capped(value: usize) -> usize {
    match env_depth_cap() {
        Some(cap) => value.min(cap),
        None => value,
    }
}

fn capped_order(value: i64) -> i64 {
    match env_depth_cap() {
        Some(cap) => value.min(4 * cap as i64),
        None => value,
    }
}

enum CliError {
    Usage(String),
    Math(String),
}

impl From<hankelfrac::Error> for CliError {
    fn from(e: hankelfrac::Error) -> Self {
        match e {
            hankelfrac::Error::Parse(msg) => CliError::Usage(msg),
            other => CliError::Math(other.to_string()),
        }
    }
}

fn poly_text(p: &Poly) -> Vec<String> {
    p.to_text_array()
}

#[derive(Serialize)]
struct HankelReport {
    n: usize,
    sequence: String,
    det: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r#match: Option<bool>,
}

/// The factored closed form for sequences that have one.
fn closed_factored_for(spec: &SeqSpec, n: usize) -> Option<FactoredForm> {
    match spec {
        // the binomial transform drops out, so numbers and polynomials
        // share one closed form
        SeqSpec::BernoulliNum | SeqSpec::BernoulliPoly => {
            Some(FactoredForm::new(closed_bernoulli_numbers(n)))
        }
        SeqSpec::EulerNum => Some(closed_euler_factored(EulerKind::Numbers, n)),
        SeqSpec::EulerPoly => {
            let mut f = closed_euler_factored(EulerKind::Numbers, n);
            f.scale *= hankelfrac::exact::qrat(1, 2).pow((n * (n + 1)) as i32);
            Some(f)
        }
        SeqSpec::BernoulliOddHalf => Some(closed_bernoulli_odd_factored(n)),
        SeqSpec::EulerNuHalf(nu) if *nu <= 2 => Some(closed_euler_factored(EulerKind::Nu(*nu), n)),
        SeqSpec::BernoulliEvenCenter => Some(FactoredForm::new(closed_bernoulli_even_center(n))),
        _ => None,
    }
}

fn cmd_seq(args: &SeqArgs) -> Result<i32, CliError> {
    let seq = MomentSeq::parse(&args.seq)?;
    let terms: Vec<Vec<String>> = seq.prefix(args.count).iter().map(poly_text).collect();
    match args.format {
        Format::Json => {
            #[derive(Serialize)]
            struct SeqReport {
                sequence: String,
                count: usize,
                terms: Vec<Vec<String>>,
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&SeqReport {
                    sequence: seq.name(),
                    count: args.count,
                    terms,
                })
                .unwrap()
            );
        }
        _ => {
            for (k, p) in seq.prefix(args.count).iter().enumerate() {
                println!("c_{k} = {p}");
            }
        }
    }
    Ok(0)
}

fn cmd_hankel(args: &HankelArgs) -> Result<i32, CliError> {
    let seq = MomentSeq::parse(&args.seq)?;
    let n = capped(args.n);
    let det = hankel_det(&seq, n);
    let closed = if args.closed_form {
        match closed_factored_for(seq.spec(), n) {
            Some(f) => Some(f),
            None => {
                return Err(CliError::Usage(format!(
                    "no closed form is known for {}",
                    seq.name()
                )))
            }
        }
    } else {
        None
    };
    let matches = closed.as_ref().map(|f| f.expand() == det);
    match args.format {
        Format::Json => {
            let report = HankelReport {
                n,
                sequence: seq.name(),
                det: poly_text(&det),
                closed: closed.as_ref().map(|f| poly_text(&f.expand())),
                r#match: matches,
            };
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
        }
        Format::Latex => {
            println!("H_{{{n}}} = {}", poly_latex(&det));
            if let Some(f) = &closed {
                println!("closed: {}", f.to_latex());
            }
        }
        _ => {
            println!("H_{n}({}) = {det}", seq.name());
            if let Some(f) = &closed {
                println!("closed form: {f}");
                println!("match: {}", matches.unwrap());
            }
        }
    }
    Ok(if matches == Some(false) { 1 } else { 0 })
}

fn cmd_orthpoly(args: &OrthArgs) -> Result<i32, CliError> {
    let family = Family::parse(&args.family)?;
    let n = capped(args.n);
    let p = named_family(family, n);
    match args.format {
        Format::Json => {
            #[derive(Serialize)]
            struct OrthReport {
                family: String,
                n: usize,
                ycoeffs: Vec<Vec<String>>,
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&OrthReport {
                    family: family.name(),
                    n,
                    ycoeffs: p.to_text(),
                })
                .unwrap()
            );
        }
        _ => println!("P_{n}(y) = {p}"),
    }
    Ok(0)
}

fn cmd_jacobi(args: &JacobiArgs) -> Result<i32, CliError> {
    let seq = MomentSeq::parse(&args.seq)?;
    let depth = capped(args.depth);
    let params = jacobi_from_moments(&seq, depth)?;
    #[derive(Serialize)]
    struct JacobiReport {
        sequence: String,
        depth: usize,
        c0: Vec<String>,
        s: Vec<Vec<String>>,
        t: Vec<Vec<String>>,
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&JacobiReport {
            sequence: seq.name(),
            depth,
            c0: poly_text(&params.c0),
            s: params.s.iter().map(poly_text).collect(),
            t: params.t.iter().map(poly_text).collect(),
        })
        .unwrap()
    );
    Ok(0)
}

fn cmd_cfrac_expand(args: &ExpandArgs) -> Result<i32, CliError> {
    let family = Family::parse(&args.family)?;
    let order = capped_order(args.order);
    let depth = (order.max(0) as usize) / 2 + 2;
    let series = jfraction_series(&family.params(depth), order);
    #[derive(Serialize)]
    struct ExpandReport {
        family: String,
        order: i64,
        series: Vec<(i64, Vec<String>)>,
    }
    let terms = series.terms().map(|(e, c)| (*e, poly_text(c))).collect();
    println!(
        "{}",
        serde_json::to_string_pretty(&ExpandReport {
            family: family.name(),
            order,
            series: terms,
        })
        .unwrap()
    );
    Ok(0)
}

#[derive(Deserialize)]
struct CfLiteral {
    b0: Vec<String>,
    a: Vec<Vec<String>>,
    b: Vec<Vec<String>>,
}

fn cmd_cfrac_contract(args: &ContractArgs) -> Result<i32, CliError> {
    let text = match &args.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    let literal: CfLiteral =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("bad CF JSON: {e}")))?;
    let parse_polys = |items: &[Vec<String>]| -> Result<Vec<Poly>, CliError> {
        items
            .iter()
            .map(|p| Poly::from_text_array(p).map_err(CliError::from))
            .collect()
    };
    let b0 = Poly::from_text_array(&literal.b0)?;
    let a = parse_polys(&literal.a)?;
    let b = parse_polys(&literal.b)?;
    let cf = CFSpec::from_tables(b0, a, b);
    let depth = capped(args.depth);
    let contracted = match args.mode.as_str() {
        "even" => cf_even_contraction(&cf, depth),
        "odd" => cf_odd_contraction(&cf, depth),
        other => {
            return Err(CliError::Usage(format!(
                "mode must be even or odd, got {other:?}"
            )))
        }
    }
    .map_err(|e| CliError::Math(e.to_string()))?;
    #[derive(Serialize)]
    struct ContractReport {
        mode: String,
        depth: usize,
        b0: Vec<String>,
        a: Vec<Vec<String>>,
        b: Vec<Vec<String>>,
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&ContractReport {
            mode: args.mode.clone(),
            depth,
            b0: poly_text(&contracted.b0),
            a: (1..=depth).map(|m| poly_text(&contracted.a(m))).collect(),
            b: (1..=depth).map(|m| poly_text(&contracted.b(m))).collect(),
        })
        .unwrap()
    );
    Ok(0)
}

fn cmd_shift(args: &ShiftArgs) -> Result<i32, CliError> {
    let seq = MomentSeq::parse(&args.seq)?;
    let n = capped(args.n);
    if !(args.shift == 1 || args.shift == 2) {
        return Err(CliError::Usage("shift must be 1 or 2".into()));
    }
    let det = match args.via.as_str() {
        "prop" => shifted_hankel_via_minors(&seq, n, args.shift)?,
        "direct" => hankel_det(
            &MomentSeq::new(SeqSpec::Shifted(Box::new(seq.spec().clone()), args.shift)),
            n,
        ),
        other => {
            return Err(CliError::Usage(format!(
                "via must be prop or direct, got {other:?}"
            )))
        }
    };
    #[derive(Serialize)]
    struct ShiftReport {
        sequence: String,
        n: usize,
        shift: usize,
        via: String,
        det: Vec<String>,
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&ShiftReport {
            sequence: seq.name(),
            n,
            shift: args.shift,
            via: args.via.clone(),
            det: poly_text(&det),
        })
        .unwrap()
    );
    Ok(0)
}

fn cmd_table(args: &TableArgs) -> Result<i32, CliError> {
    match args.which {
        1 => {
            // factored Hankel determinants of the odd-Bernoulli sequence
            let rows: Vec<(usize, FactoredForm)> = (0..=4)
                .map(|n| (n, closed_bernoulli_odd_factored(n)))
                .collect();
            match args.format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Row {
                        n: usize,
                        factored: String,
                        expanded: Vec<String>,
                    }
                    let body: Vec<Row> = rows
                        .iter()
                        .map(|(n, f)| Row {
                            n: *n,
                            factored: f.to_string(),
                            expanded: poly_text(&f.expand()),
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&body).unwrap());
                }
                Format::Latex => {
                    for (n, f) in &rows {
                        println!("{n} & {} \\\\", f.to_latex());
                    }
                }
                Format::Csv => {
                    println!("n,factored");
                    for (n, f) in &rows {
                        println!("{n},\"{f}\"");
                    }
                }
                Format::Plain => {
                    for (n, f) in &rows {
                        println!("{n}: {f}");
                    }
                }
            }
        }
        2 => {
            let rows: Vec<(usize, String, String, String, String)> = (0..=6)
                .map(|n| {
                    (
                        n,
                        format_rat(&bernoulli_number(n)),
                        format_rat(&euler_number(n)),
                        bernoulli_poly(n).to_string(),
                        euler_poly(n).to_string(),
                    )
                })
                .collect();
            match args.format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Row {
                        n: usize,
                        bernoulli_number: String,
                        euler_number: String,
                        bernoulli_poly: String,
                        euler_poly: String,
                    }
                    let body: Vec<Row> = rows
                        .iter()
                        .map(|(n, bn, en, bp, ep)| Row {
                            n: *n,
                            bernoulli_number: bn.clone(),
                            euler_number: en.clone(),
                            bernoulli_poly: bp.clone(),
                            euler_poly: ep.clone(),
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&body).unwrap());
                }
                Format::Latex => {
                    for (n, bn, en, bp, ep) in &rows {
                        println!(
                            "{n} & {bn} & {en} & {} & {} \\\\",
                            poly_latex(&bernoulli_poly(*n)),
                            poly_latex(&euler_poly(*n))
                        );
                        let _ = (bp, ep);
                    }
                }
                Format::Csv => {
                    println!("n,B_n,E_n,B_n(x),E_n(x)");
                    for (n, bn, en, bp, ep) in &rows {
                        println!("{n},{bn},{en},\"{bp}\",\"{ep}\"");
                    }
                }
                Format::Plain => {
                    println!("n | B_n | E_n | B_n(x) | E_n(x)");
                    for (n, bn, en, bp, ep) in &rows {
                        println!("{n} | {bn} | {en} | {bp} | {ep}");
                    }
                }
            }
        }
        3 => {
            let params = Family::EulerNu(1).params(5);
            let rows: Vec<(usize, Poly)> = (0..=3)
                .map(|n| {
                    (
                        n,
                        dn_via_recurrence(&params.s, &params.t, n as isize)
                            .expect("parameters cover the table depth"),
                    )
                })
                .collect();
            match args.format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Row {
                        n: usize,
                        minor: Vec<String>,
                        content_form: String,
                    }
                    let body: Vec<Row> = rows
                        .iter()
                        .map(|(n, p)| Row {
                            n: *n,
                            minor: poly_text(p),
                            content_form: poly_content_form(p),
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&body).unwrap());
                }
                Format::Latex => {
                    for (n, p) in &rows {
                        println!("{n} & {} \\\\", poly_latex(p));
                    }
                }
                Format::Csv => {
                    println!("n,d_n");
                    for (n, p) in &rows {
                        println!("{n},\"{}\"", poly_content_form(p));
                    }
                }
                Format::Plain => {
                    for (n, p) in &rows {
                        println!("{n}: {}", poly_content_form(p));
                    }
                }
            }
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown table {other}; available: 1, 2, 3"
            )))
        }
    }
    Ok(0)
}

fn cmd_validate(args: &ValidateArgs) -> Result<i32, CliError> {
    let identity = Identity::parse(&args.identity)?;
    let report = validate_identity(
        identity,
        IdentityParams {
            s: args.s,
            a: args.a,
            b: args.b,
        },
        capped(args.depth),
    )?;
    #[derive(Serialize)]
    struct Out {
        identity: String,
        s: f64,
        a: f64,
        b: f64,
        depth: usize,
        lhs: f64,
        rhs: f64,
        abs_err: f64,
        tol: f64,
        pass: bool,
        terminated: bool,
        warning: bool,
    }
    let pass = report.abs_err < args.tol;
    println!(
        "{}",
        serde_json::to_string_pretty(&Out {
            identity: identity.name().to_string(),
            s: args.s,
            a: args.a,
            b: args.b,
            depth: capped(args.depth),
            lhs: report.lhs,
            rhs: report.rhs,
            abs_err: report.abs_err,
            tol: args.tol,
            pass,
            terminated: report.terminated,
            warning: report.warning,
        })
        .unwrap()
    );
    Ok(if pass { 0 } else { 1 })
}

fn cmd_verify(args: &VerifyArgs) -> Result<i32, CliError> {
    let cfg = VerifyConfig {
        max_depth: capped(args.max_depth),
        seed: args.seed,
    };
    let outcomes = run_scope(&args.scope, &cfg)?;
    let failed = outcomes.iter().filter(|o| !o.pass).count();
    match args.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                scope: &'a str,
                max_depth: usize,
                seed: u64,
                checks: &'a [hankelfrac::verify::CheckOutcome],
                failed: usize,
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&Out {
                    scope: &args.scope,
                    max_depth: cfg.max_depth,
                    seed: cfg.seed,
                    checks: &outcomes,
                    failed,
                })
                .unwrap()
            );
        }
        _ => {
            for o in &outcomes {
                println!(
                    "{} {} [{}] ({} ms): {}",
                    if o.pass { "PASS" } else { "FAIL" },
                    o.id,
                    o.module,
                    o.millis,
                    o.details
                );
            }
            println!("{} checks, {} failed", outcomes.len(), failed);
        }
    }
    Ok(if failed > 0 { 1 } else { 0 })
}

fn dispatch(cli: &Cli) -> Result<i32, CliError> {
    match &cli.command {
        Command::Seq(args) => cmd_seq(args),
        Command::Hankel(args) => cmd_hankel(args),
        Command::Orthpoly(args) => cmd_orthpoly(args),
        Command::Jacobi(args) => cmd_jacobi(args),
        Command::Cfrac(CfracCmd::Expand(args)) => cmd_cfrac_expand(args),
        Command::Cfrac(CfracCmd::Contract(args)) => cmd_cfrac_contract(args),
        Command::Shift(args) => cmd_shift(args),
        Command::Table(args) => cmd_table(args),
        Command::Validate(args) => cmd_validate(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Math(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
