//! Thin command-line front end over the library.
//!
//! Exit codes: 0 success, 1 verified-identity failure (a bug signal), 2 input
//! validation, 3 resource guard, 4 I/O. The `EHRHART_ENUM_LIMIT` environment
//! variable overrides the enumeration ceiling used by the resource guard.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use dedekind_ehrhart::dedekind::{
    reciprocity_check, sum_fast, sum_via_cotangent, sum_via_sawtooth,
};
use dedekind_ehrhart::extraction::{constant_term_decomposition, ehrhart_coefficient};
use dedekind_ehrhart::lattice::DEFAULT_ENUM_LIMIT;
use dedekind_ehrhart::{gcd, AxisSimplex, CoprimePair, Error};

#[derive(Parser)]
#[command(
    name = "dedekind-ehrhart",
    version,
    about = "Dedekind sums, Ehrhart polynomials, and cotangent Laurent coefficients, exactly"
)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dedekind sum s(a, b) for coprime positive integers.
    Dedekind {
        a: String,
        b: String,
        /// sawtooth and fast are exact; cotangent is floating point.
        #[arg(long, value_enum, default_value_t = Method::Fast)]
        method: Method,
    },
    /// Evaluate both sides of the reciprocity identity, exactly.
    Reciprocity { a: String, b: String },
    /// Ehrhart polynomial of the axis simplex with the given intercepts.
    Ehrhart {
        /// Pairwise coprime positive intercepts a_1 .. a_n.
        #[arg(required = true)]
        intercepts: Vec<u64>,
        /// Count lattice points of the t-fold dilate instead.
        #[arg(long, conflicts_with_all = ["coeff", "laurent"])]
        count: Option<u64>,
        /// Print the single coefficient c_m.
        #[arg(long, value_name = "M")]
        coeff: Option<usize>,
        /// Extract the coefficient from the cotangent Laurent series.
        #[arg(long, requires = "coeff")]
        laurent: bool,
    },
    /// Split the constant Ehrhart coefficient into its three exact parts.
    Decompose { a: String, b: String },
    /// Reciprocity sweep over coprime pairs in the given ranges, as CSV.
    Sweep {
        /// Range of a, e.g. 1..300 (inclusive).
        a_range: String,
        /// Range of b, e.g. 1..300 (inclusive).
        b_range: String,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Sawtooth,
    Cotangent,
    Fast,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Sawtooth => "sawtooth",
            Method::Cotangent => "cotangent",
            Method::Fast => "fast",
        }
    }
}

type CmdResult = Result<u8, (u8, String)>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err((code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Dedekind { a, b, method } => cmd_dedekind(&a, &b, method, cli.json),
        Command::Reciprocity { a, b } => cmd_reciprocity(&a, &b, cli.json),
        Command::Ehrhart {
            intercepts,
            count,
            coeff,
            laurent,
        } => cmd_ehrhart(intercepts, count, coeff, laurent, cli.json),
        Command::Decompose { a, b } => cmd_decompose(&a, &b, cli.json),
        Command::Sweep {
            a_range,
            b_range,
            out,
        } => cmd_sweep(&a_range, &b_range, out.as_deref(), cli.json),
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::InstanceTooLarge { .. } => 3,
        Error::InternalInvariant(_) => 1,
        _ => 2,
    }
}

fn lib_err(err: Error) -> (u8, String) {
    (exit_code(&err), err.to_string())
}

fn io_err(err: std::io::Error) -> (u8, String) {
    (4, err.to_string())
}

fn parse_bigint(name: &str, s: &str) -> Result<BigInt, (u8, String)> {
    BigInt::from_str(s).map_err(|_| (2, format!("{name} is not an integer: {s:?}")))
}

fn parse_pair(a: &str, b: &str) -> Result<CoprimePair, (u8, String)> {
    let a = parse_bigint("a", a)?;
    let b = parse_bigint("b", b)?;
    CoprimePair::new(a, b).map_err(lib_err)
}

fn enum_limit() -> Result<f64, (u8, String)> {
    match std::env::var("EHRHART_ENUM_LIMIT") {
        Ok(raw) => raw
            .parse::<f64>()
            .map_err(|_| (2, format!("EHRHART_ENUM_LIMIT is not a number: {raw:?}"))),
        Err(_) => Ok(DEFAULT_ENUM_LIMIT),
    }
}

fn cmd_dedekind(a: &str, b: &str, method: Method, json: bool) -> CmdResult {
    let pair = parse_pair(a, b)?;
    match method {
        Method::Cotangent => {
            let value = sum_via_cotangent(&pair);
            if json {
                println!(
                    "{}",
                    json!({
                        "a": pair.a().to_string(),
                        "b": pair.b().to_string(),
                        "method": method.name(),
                        "value": value,
                    })
                );
            } else {
                println!("{value:.10}");
            }
        }
        Method::Sawtooth | Method::Fast => {
            let value = match method {
                Method::Sawtooth => sum_via_sawtooth(&pair),
                _ => sum_fast(&pair),
            };
            if json {
                println!(
                    "{}",
                    json!({
                        "a": pair.a().to_string(),
                        "b": pair.b().to_string(),
                        "method": method.name(),
                        "value": value.to_string(),
                    })
                );
            } else {
                println!("{value}");
            }
        }
    }
    Ok(0)
}

fn cmd_reciprocity(a: &str, b: &str, json: bool) -> CmdResult {
    let pair = parse_pair(a, b)?;
    let report = reciprocity_check(&pair);
    if json {
        println!(
            "{}",
            json!({
                "a": pair.a().to_string(),
                "b": pair.b().to_string(),
                "s_ab": report.s_ab.to_string(),
                "s_ba": report.s_ba.to_string(),
                "lhs": report.lhs.to_string(),
                "rhs": report.rhs.to_string(),
                "holds": report.holds,
            })
        );
    } else {
        println!("s(a,b) = {}", report.s_ab);
        println!("s(b,a) = {}", report.s_ba);
        println!("lhs    = {}", report.lhs);
        println!("rhs    = {}", report.rhs);
        println!(
            "reciprocity {}",
            if report.holds { "HOLDS" } else { "FAILS" }
        );
    }
    Ok(if report.holds { 0 } else { 1 })
}

fn cmd_ehrhart(
    intercepts: Vec<u64>,
    count: Option<u64>,
    coeff: Option<usize>,
    laurent: bool,
    json: bool,
) -> CmdResult {
    let simplex = AxisSimplex::new(intercepts).map_err(lib_err)?;
    let limit = enum_limit()?;

    if let Some(t) = count {
        let points = simplex
            .lattice_points_with_limit(t, limit)
            .map_err(lib_err)?;
        if json {
            println!(
                "{}",
                json!({ "intercepts": simplex.intercepts(), "t": t, "count": points })
            );
        } else {
            println!("{points}");
        }
        return Ok(0);
    }

    if laurent {
        let m = coeff.expect("clap enforces --coeff with --laurent");
        // The extraction sums over r = 1..=p; guard it like an enumeration.
        let p = simplex.intercept_product() as f64;
        if p > limit {
            return Err(lib_err(Error::InstanceTooLarge { estimate: p, limit }));
        }
        let value = ehrhart_coefficient(&simplex, m).map_err(lib_err)?;
        if json {
            println!(
                "{}",
                json!({
                    "intercepts": simplex.intercepts(),
                    "m": m,
                    "re": value.re,
                    "im": value.im,
                })
            );
        } else {
            println!("{:.9} (im {:.1e})", value.re, value.im);
        }
        return Ok(0);
    }

    if let Some(m) = coeff {
        if m > simplex.dimension() {
            return Err(lib_err(Error::CoefficientOutOfRange {
                m,
                dimension: simplex.dimension(),
            }));
        }
        let poly = simplex
            .ehrhart_polynomial_with_limit(limit)
            .map_err(lib_err)?;
        let value = poly.coefficient(m);
        if json {
            println!(
                "{}",
                json!({
                    "intercepts": simplex.intercepts(),
                    "m": m,
                    "coefficient": value.to_string(),
                })
            );
        } else {
            println!("{value}");
        }
        return Ok(0);
    }

    let poly = simplex
        .ehrhart_polynomial_with_limit(limit)
        .map_err(lib_err)?;
    if json {
        let coefficients: Vec<String> = (0..=simplex.dimension())
            .map(|m| poly.coefficient(m).to_string())
            .collect();
        println!(
            "{}",
            json!({
                "intercepts": simplex.intercepts(),
                "dimension": simplex.dimension(),
                "coefficients": coefficients,
            })
        );
    } else {
        println!("{poly}");
    }
    Ok(0)
}

fn cmd_decompose(a: &str, b: &str, json: bool) -> CmdResult {
    let pair = parse_pair(a, b)?;
    let d = constant_term_decomposition(&pair);
    let ok = d.total.is_one();
    if json {
        println!(
            "{}",
            json!({
                "a": pair.a().to_string(),
                "b": pair.b().to_string(),
                "contrib_a": d.contrib_a.to_string(),
                "contrib_b": d.contrib_b.to_string(),
                "contrib_triple": d.contrib_triple.to_string(),
                "total": d.total.to_string(),
            })
        );
    } else {
        println!("contrib_a      = {}", d.contrib_a);
        println!("contrib_b      = {}", d.contrib_b);
        println!("contrib_triple = {}", d.contrib_triple);
        println!("total          = {}", d.total);
    }
    Ok(if ok { 0 } else { 1 })
}

fn parse_range(name: &str, s: &str) -> Result<(u64, u64), (u8, String)> {
    let err = || {
        (
            2u8,
            format!("{name} must be an inclusive range like 1..300, got {s:?}"),
        )
    };
    let (lo, hi) = s.split_once("..").ok_or_else(err)?;
    let lo = lo.parse::<u64>().map_err(|_| err())?;
    let hi = hi.parse::<u64>().map_err(|_| err())?;
    if lo == 0 {
        return Err((2, format!("{name} must start at 1 or above")));
    }
    Ok((lo, hi))
}

fn cmd_sweep(a_range: &str, b_range: &str, out: Option<&std::path::Path>, json: bool) -> CmdResult {
    let (a_lo, a_hi) = parse_range("a range", a_range)?;
    let (b_lo, b_hi) = parse_range("b range", b_range)?;

    let mut rows = Vec::new();
    let mut failures = 0u64;
    for a in a_lo..=a_hi {
        for b in b_lo..=b_hi {
            if gcd(a, b) != 1 {
                continue;
            }
            let pair = CoprimePair::from_u64(a, b).expect("gcd checked");
            let report = reciprocity_check(&pair);
            if !report.holds {
                failures += 1;
            }
            rows.push((a, b, report));
        }
    }

    let rendered = if json {
        let array: Vec<_> = rows
            .iter()
            .map(|(a, b, r)| {
                json!({
                    "a": a.to_string(),
                    "b": b.to_string(),
                    "s_ab": r.s_ab.to_string(),
                    "s_ba": r.s_ba.to_string(),
                    "lhs": r.lhs.to_string(),
                    "rhs": r.rhs.to_string(),
                    "holds": r.holds,
                })
            })
            .collect();
        format!("{}\n", serde_json::Value::Array(array))
    } else {
        let mut text = String::from("a,b,s_ab,s_ba,lhs,rhs,holds\n");
        for (a, b, r) in &rows {
            text.push_str(&format!(
                "{a},{b},{},{},{},{},{}\n",
                r.s_ab, r.s_ba, r.lhs, r.rhs, r.holds
            ));
        }
        text
    };

    match out {
        Some(path) => {
            let mut file = std::fs::File::create(path).map_err(io_err)?;
            file.write_all(rendered.as_bytes()).map_err(io_err)?;
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(rendered.as_bytes()).map_err(io_err)?;
        }
    }

    if failures > 0 {
        eprintln!("{failures} pairs failed the reciprocity identity");
        return Ok(1);
    }
    Ok(0)
}
