//! Command-line surface: family generation, identity verification, curve
//! diagnostics, bounded-height search, and table verification.
//!
//! Exit codes: 0 success, 1 failed verification or bad arguments, 2 pole at
//! the evaluation point, 3 symbolic depth exceeded, 64 malformed CSV.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use prodsum::curve::{
    non_torsion_certificate, quartic_to_weierstrass, specialize_curve, specialize_point,
    CurvePoint, TorsionOutcome,
};
use prodsum::exact::Assignment;
use prodsum::families::{
    self, parse_bindings, schemes, specialize, verify_solution_identity, Scheme, SolutionTuple,
};
use prodsum::search::{
    bundled_table, parse_table, search_range, verify_table, TableRow,
};
use prodsum::Error;

#[derive(Parser)]
#[command(name = "prodsum", version, about = "Exact solution families and searches for xyz(x+y+z) = a")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the n-th member of a solution family.
    Family {
        /// Scheme: euler, elkies, or fourvar.
        scheme: String,
        /// Multiple of the base point.
        #[arg(long)]
        n: i64,
        /// Numeric bindings, e.g. a=1,s=1,t=1.
        #[arg(long)]
        at: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Re-verify a solution tuple serialized as JSON (stdin or --file).
    Verify {
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Show a scheme's curve, base point, and doubling; optionally emit a
    /// torsion certificate at a numeric specialization.
    Curve {
        /// Scheme: euler, elkies, or fourvar.
        scheme: String,
        /// Numeric bindings, e.g. a=1,s=1,t=1.
        #[arg(long)]
        at: Option<String>,
        /// Emit a torsion certificate (requires --at).
        #[arg(long)]
        torsion: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Brute-force small positive solutions at bounded height.
    Search {
        /// Single value `N` or inclusive range `LO..HI`.
        #[arg(long)]
        a: String,
        #[arg(long, default_value_t = 60)]
        height: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Verify a solution table in the `a,x,y,z` CSV schema (bundled table
    /// when --file is omitted).
    Table {
        #[arg(long)]
        file: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe instead of panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::PoleAtPoint(_) => 2,
        Error::SymbolicDepthExceeded { .. } => 3,
        Error::MalformedRow { .. } => 64,
        _ => 1,
    }
}

fn run(command: Command) -> prodsum::Result<ExitCode> {
    match command {
        Command::Family {
            scheme,
            n,
            at,
            format,
        } => cmd_family(&scheme, n, at.as_deref(), format),
        Command::Verify { file } => cmd_verify(file.as_deref()),
        Command::Curve {
            scheme,
            at,
            torsion,
            format,
        } => cmd_curve(&scheme, at.as_deref(), torsion, format),
        Command::Search { a, height, format } => cmd_search(&a, height, format),
        Command::Table { file } => cmd_table(file.as_deref()),
    }
}

fn generate(scheme: Scheme, n: i64) -> prodsum::Result<SolutionTuple> {
    match scheme {
        Scheme::Euler3 => families::euler_family(n),
        Scheme::Elkies3 => families::elkies_family(n),
        Scheme::FourVar => families::fourvar_family(n),
    }
}

fn cmd_family(
    scheme: &str,
    n: i64,
    at: Option<&str>,
    format: Format,
) -> prodsum::Result<ExitCode> {
    let scheme: Scheme = scheme.parse()?;
    let tuple = generate(scheme, n)?;
    let names = scheme.component_names();
    match at {
        None => match format {
            Format::Json => println!("{}", tuple.to_json()),
            _ => {
                for (name, component) in names.iter().zip(&tuple.components) {
                    println!("{name} = {component}");
                }
                println!("identity: {}", verify_solution_identity(&tuple));
            }
        },
        Some(bindings) => {
            let at = parse_bindings(bindings)?;
            let values = specialize(&tuple, &at)?;
            let verified = check_numeric(&values, &at)?;
            match format {
                Format::Json => {
                    println!(
                        "{}",
                        json!({
                            "scheme": scheme.name(),
                            "n": tuple.n,
                            "at": bindings_json(&at),
                            "components": values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                            "verified": verified,
                        })
                    );
                }
                _ => {
                    for (name, value) in names.iter().zip(&values) {
                        println!("{name} = {value}");
                    }
                    println!("verified: {verified}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn check_numeric(
    values: &[prodsum::ExactRational],
    at: &Assignment,
) -> prodsum::Result<bool> {
    let product: prodsum::ExactRational = values.iter().product();
    let sum: prodsum::ExactRational = values.iter().sum();
    let a = at
        .get(prodsum::Var::A)
        .cloned()
        .ok_or(Error::UnboundVariable('a'))?;
    Ok(product * sum == a)
}

fn bindings_json(at: &Assignment) -> serde_json::Value {
    let mut map = serde_json::Map::new();
    for (name, value) in [("a", &at.a), ("s", &at.s), ("t", &at.t)] {
        if let Some(v) = value {
            map.insert(name.into(), json!(v.to_string()));
        }
    }
    serde_json::Value::Object(map)
}

fn cmd_verify(file: Option<&std::path::Path>) -> prodsum::Result<ExitCode> {
    let text = match file {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Parse(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    let tuple = SolutionTuple::from_json(&text)?;
    let ok = verify_solution_identity(&tuple);
    println!(
        "scheme {} n={}: identity {}",
        tuple.scheme,
        tuple.n,
        if ok { "holds" } else { "FAILS" }
    );
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn scheme_curve_and_base(
    scheme: Scheme,
) -> prodsum::Result<(
    prodsum::curve::WeierstrassCurve<prodsum::RationalFunction>,
    CurvePoint<prodsum::RationalFunction>,
)> {
    Ok(match scheme {
        Scheme::Euler3 => {
            let (curve, maps) = quartic_to_weierstrass(&schemes::euler_quartic())?;
            let base = maps.branch_point();
            (curve, base)
        }
        Scheme::Elkies3 => schemes::elkies_curve_and_base(),
        Scheme::FourVar => {
            let (curve, maps) = quartic_to_weierstrass(&schemes::fourvar_quartic())?;
            let base = maps.branch_point();
            (curve, base)
        }
    })
}

fn cmd_curve(
    scheme: &str,
    at: Option<&str>,
    torsion: bool,
    format: Format,
) -> prodsum::Result<ExitCode> {
    let scheme: Scheme = scheme.parse()?;
    let (curve, base) = scheme_curve_and_base(scheme)?;
    let double = curve.double(&base)?;

    match at {
        None => {
            if torsion {
                return Err(Error::Parse(
                    "--torsion needs a numeric specialization; pass --at".into(),
                ));
            }
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "scheme": scheme.name(),
                        "curve": curve_json(&curve),
                        "base_point": point_json(&base),
                        "on_curve": curve.contains(&base),
                        "double_x": double.coordinates().map(|(x, _)| x.to_string()),
                    })
                ),
                _ => {
                    println!("curve: {curve}");
                    println!("P = {base}");
                    println!("on curve: {}", curve.contains(&base));
                    if let Some((x, _)) = double.coordinates() {
                        println!("2P.x = {x}");
                    }
                }
            }
        }
        Some(bindings) => {
            let at = parse_bindings(bindings)?;
            let curve_q = specialize_curve(&curve, &at)?;
            let base_q = specialize_point(&base, &at)?;
            if !curve_q.contains(&base_q) {
                return Err(Error::OffCurveInput);
            }
            if torsion {
                let cert = non_torsion_certificate(&curve_q, &base_q)?;
                match format {
                    Format::Json => println!("{}", cert.to_json()),
                    _ => {
                        println!("curve: {curve_q}");
                        println!("P = {base_q}");
                        match &cert.outcome {
                            TorsionOutcome::NonTorsion { via_integrality } => println!(
                                "verdict: non-torsion ({})",
                                if *via_integrality {
                                    "a multiple has a non-integer coordinate"
                                } else {
                                    "no admissible order vanishes"
                                }
                            ),
                            TorsionOutcome::Torsion { order } => {
                                println!("verdict: torsion of order {order}")
                            }
                        }
                        for row in &cert.witness {
                            println!(
                                "  {}P = {} ({})",
                                row.n,
                                row.point,
                                if row.integral { "integral" } else { "non-integral" }
                            );
                        }
                    }
                }
            } else {
                let double_q = curve_q.double(&base_q)?;
                match format {
                    Format::Json => println!(
                        "{}",
                        json!({
                            "scheme": scheme.name(),
                            "curve": curve_json_q(&curve_q),
                            "base_point": point_json_q(&base_q),
                            "on_curve": true,
                            "double": point_json_q(&double_q),
                        })
                    ),
                    _ => {
                        println!("curve: {curve_q}");
                        println!("P = {base_q}");
                        println!("on curve: true");
                        println!("2P = {double_q}");
                    }
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn curve_json(
    curve: &prodsum::curve::WeierstrassCurve<prodsum::RationalFunction>,
) -> serde_json::Value {
    json!({
        "a1": curve.a1.to_string(),
        "a3": curve.a3.to_string(),
        "a2": curve.a2.to_string(),
        "a4": curve.a4.to_string(),
        "a6": curve.a6.to_string(),
    })
}

fn curve_json_q(
    curve: &prodsum::curve::WeierstrassCurve<prodsum::ExactRational>,
) -> serde_json::Value {
    json!({
        "a1": curve.a1.to_string(),
        "a3": curve.a3.to_string(),
        "a2": curve.a2.to_string(),
        "a4": curve.a4.to_string(),
        "a6": curve.a6.to_string(),
    })
}

fn point_json(pt: &CurvePoint<prodsum::RationalFunction>) -> serde_json::Value {
    match pt.coordinates() {
        None => json!("Infinity"),
        Some((x, y)) => json!([x.to_string(), y.to_string()]),
    }
}

fn point_json_q(pt: &CurvePoint<prodsum::ExactRational>) -> serde_json::Value {
    match pt.coordinates() {
        None => json!("Infinity"),
        Some((x, y)) => json!([x.to_string(), y.to_string()]),
    }
}

fn parse_a_range(text: &str) -> prodsum::Result<Vec<u32>> {
    let text = text.trim();
    let parse_one = |piece: &str| -> prodsum::Result<u32> {
        piece
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad value '{piece}' in --a")))
    };
    if let Some((lo, hi)) = text.split_once("..") {
        let lo = parse_one(lo)?;
        let hi = parse_one(hi)?;
        if lo > hi {
            return Err(Error::Parse(format!("empty range {lo}..{hi}")));
        }
        Ok((lo..=hi).collect())
    } else {
        Ok(vec![parse_one(text)?])
    }
}

fn cmd_search(a: &str, height: u32, format: Format) -> prodsum::Result<ExitCode> {
    let values = parse_a_range(a)?;
    let rows = search_range(&values, height);
    match format {
        Format::Json => {
            let body: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "a": r.a,
                        "x": r.x.to_string(),
                        "y": r.y.to_string(),
                        "z": r.z.to_string(),
                    })
                })
                .collect();
            println!("{}", serde_json::Value::Array(body));
        }
        Format::Csv => {
            for row in &rows {
                println!("{}", row.to_csv());
            }
        }
        Format::Text => {
            for row in &rows {
                println!("a={} x={} y={} z={}", row.a, row.x, row.y, row.z);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(file: Option<&std::path::Path>) -> prodsum::Result<ExitCode> {
    let rows: Vec<TableRow> = match file {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::MalformedRow {
                line: 0,
                reason: format!("cannot read {}: {e}", path.display()),
            })?;
            parse_table(&text)?
        }
        None => bundled_table(),
    };
    let report = verify_table(&rows);
    if report.all_pass() {
        println!("{} rows verified, all pass", report.rows);
        Ok(ExitCode::SUCCESS)
    } else {
        for (line, reason) in &report.failures {
            println!("row {line}: {reason}");
        }
        println!(
            "{} rows verified, {} failed",
            report.rows,
            report.failures.len()
        );
        Ok(ExitCode::from(1))
    }
}
