mod cache;
mod verify;

use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{anyhow, bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use holetile::closed_forms::count_holey;
use holetile::hyperasym::{asymptote, convergence_report, correlation_limit, Candidate, ConvergenceReport, Which};
use holetile::oracle::count_tilings_dp;
use holetile::path_matrices::count_by_matrices;
use holetile::regions::{realize_cells, validate_region};
use holetile::{Family, Rat, RegionSpec, ValidatedRegion};

#[derive(Parser)]
#[command(name = "holetile", version, about = "Exact lozenge tiling counts for hexagons with two triangular holes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Hexagon,
    Vertical,
    Lower,
    UpperWeighted,
    Plain,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Matrix,
    Oracle,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhichArg {
    #[value(name = "V")]
    V,
    #[value(name = "Hminus")]
    Hminus,
    #[value(name = "Hplus")]
    Hplus,
    #[value(name = "H")]
    H,
}

impl From<WhichArg> for Which {
    fn from(w: WhichArg) -> Which {
        match w {
            WhichArg::V => Which::V,
            WhichArg::Hminus => Which::Hminus,
            WhichArg::Hplus => Which::Hplus,
            WhichArg::H => Which::H,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Count tilings of a region.
    Count {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        b: u32,
        /// Third side, plain hexagons only.
        #[arg(long)]
        c: Option<u32>,
        /// Hole position; omit for the hole-free region.
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, value_enum, default_value = "formula")]
        method: Method,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Run cross-check suites over all small parameters.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: u32,
        #[arg(long, default_value_t = 3)]
        max_m: u32,
        /// Comma-separated subset of pfaffian,lu,oracle,factorization,identities.
        #[arg(long, value_delimiter = ',')]
        suites: Option<Vec<String>>,
    },
    /// Limit correlation, optionally with finite-n convergence rows.
    Correlate {
        #[arg(long, value_enum)]
        which: WhichArg,
        #[arg(long)]
        k: u32,
        /// Aspect ratio, as an integer, fraction (3/2) or decimal (0.5).
        #[arg(long, default_value = "1")]
        xi: String,
        /// Comma-separated n values.
        #[arg(long)]
        n_grid: Option<String>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Limit against the large-k asymptote, as CSV.
    Asymptote {
        #[arg(long, value_enum)]
        which: WhichArg,
        #[arg(long, default_value = "1")]
        xi: String,
        /// Comma-separated k values.
        #[arg(long, default_value = "")]
        k_list: String,
    },
}

fn parse_rational(s: &str) -> Result<Rat> {
    let s = s.trim();
    if let Some((whole, frac_part)) = s.split_once('.') {
        let digits = frac_part.len() as u32;
        let joined: BigInt = format!("{whole}{frac_part}").parse().map_err(|_| anyhow!("bad number {s:?}"))?;
        return Ok(Rat::new(joined, BigInt::from(10).pow(digits)));
    }
    Rat::from_str(s).map_err(|_| anyhow!("bad number {s:?}"))
}

fn parse_list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| anyhow!("bad integer {t:?} in list")))
        .collect()
}

/// Domain failures exit 1; clap handles usage errors with 2.
struct Domain(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Domain {
    fn from(e: E) -> Self {
        Domain(e.into())
    }
}

fn region_spec(family: FamilyArg, n: u32, b: u32, c: Option<u32>, k: Option<u32>) -> Result<RegionSpec> {
    let family = match family {
        FamilyArg::Plain => {
            let c = c.ok_or_else(|| anyhow!("--c is required for plain hexagons"))?;
            if k.is_some() {
                bail!("plain hexagons take no --k");
            }
            Family::PlainHexagon { c }
        }
        FamilyArg::Hexagon => Family::HoleyHexagon,
        FamilyArg::Vertical => Family::VerticalHalf,
        FamilyArg::Lower => Family::LowerHalf,
        FamilyArg::UpperWeighted => Family::WeightedUpperHalf,
    };
    Ok(RegionSpec { family, n, b, k })
}

fn compute(v: &ValidatedRegion, method: &str) -> holetile::Result<String> {
    let value = match method {
        "formula" => count_holey(v)?,
        "matrix" => count_by_matrices(v)?,
        _ => count_tilings_dp(&realize_cells(v))?,
    };
    Ok(value.to_string())
}

fn emit(value: &Value) {
    println!("{}", serde_json::to_string(value).expect("json values always serialize"));
}

fn cmd_count(
    family: FamilyArg,
    n: u32,
    b: u32,
    c: Option<u32>,
    k: Option<u32>,
    method: Method,
    format: Format,
) -> std::result::Result<bool, Domain> {
    let spec = region_spec(family, n, b, c, k)?;
    let v = validate_region(spec)?;
    let methods: Vec<&str> = match method {
        Method::Formula => vec!["formula"],
        Method::Matrix => vec!["matrix"],
        Method::Oracle => vec!["oracle"],
        // the matrix route exists only for regions with holes
        Method::All if v.spec().k.is_some() && !matches!(v.spec().family, Family::PlainHexagon { .. }) => {
            vec!["formula", "matrix", "oracle"]
        }
        Method::All => vec!["formula", "oracle"],
    };
    let cache = cache::Cache::from_env()?;
    let mut values = Vec::new();
    for m in &methods {
        let hit = cache.as_ref().and_then(|c| c.get(v.spec(), m));
        let value = match hit {
            Some(value) => value,
            None => {
                let value = compute(&v, m)?;
                if let Some(c) = &cache {
                    c.put(v.spec(), m, &value)?;
                }
                value
            }
        };
        values.push((*m, value));
    }
    let all_match = values.windows(2).all(|w| w[0].1 == w[1].1);
    let verdict = (method == Method::All).then(|| if all_match { "MATCH" } else { "MISMATCH" });
    let s = v.spec();
    match format {
        Format::Plain => {
            if let [(_, value)] = values.as_slice() {
                println!("{value}");
            } else {
                for (m, value) in &values {
                    println!("{m}: {value}");
                }
            }
            if let Some(verdict) = verdict {
                println!("{verdict}");
            }
        }
        Format::Csv => {
            println!("family,n,b,c,k,method,value,verdict");
            let c = c.map(|c| c.to_string()).unwrap_or_default();
            let k = s.k.map(|k| k.to_string()).unwrap_or_default();
            for (m, value) in &values {
                println!("{},{},{},{c},{k},{m},{value},{}", s.family.name(), s.n, s.b, verdict.unwrap_or(""));
            }
        }
        Format::Json => {
            let counts: Map<String, Value> = values.iter().map(|(m, v)| (m.to_string(), json!(v))).collect();
            emit(&json!({
                "family": s.family.name(),
                "n": s.n,
                "b": s.b,
                "c": c,
                "k": s.k,
                "counts": counts,
                "verdict": verdict,
            }));
        }
    }
    Ok(all_match)
}

fn cmd_verify(max_n: u32, max_m: u32, suites: Option<Vec<String>>) -> std::result::Result<bool, Domain> {
    let suites = suites.unwrap_or_else(|| verify::SUITES.iter().map(|s| s.to_string()).collect());
    let mut ok = true;
    let mut total = 0;
    println!("suite,cases,failures,status");
    for name in &suites {
        let report = verify::run_suite(name.trim(), max_n, max_m)
            .ok_or_else(|| anyhow!("unknown suite {name:?}; choose from {}", verify::SUITES.join(",")))?;
        let status = if report.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("{},{},{},{status}", report.name, report.cases, report.failures.len());
        for f in report.failures.iter().take(5) {
            eprintln!("{}: {f}", report.name);
        }
        total += report.cases;
        ok &= report.failures.is_empty();
    }
    eprintln!("{total} cases checked");
    Ok(ok)
}

fn candidate_name(c: Candidate) -> &'static str {
    match c {
        Candidate::WithE => "with_e",
        Candidate::WithoutE => "without_e",
    }
}

const TABLE_HEADER: &str = "n,m,finite,limit_e,limit_noe,ratio_e,ratio_noe";

fn table_rows(report: &ConvergenceReport) -> Vec<String> {
    report
        .rows
        .iter()
        .map(|r| format!("{},{},{},{},{},{},{}", r.n, r.m, r.finite, r.limit_e, r.limit_noe, r.ratio_e, r.ratio_noe))
        .collect()
}

fn cmd_correlate(which: Which, k: u32, xi: &str, n_grid: Option<String>, format: Format) -> std::result::Result<bool, Domain> {
    let xi = parse_rational(xi)?;
    let r = correlation_limit(which, k, &xi)?;
    let report = match n_grid {
        Some(grid) => Some(convergence_report(which, k, &xi, &parse_list(&grid)?)?),
        None => None,
    };
    let fields: Vec<(&str, String)> = vec![
        ("which", which.name().to_string()),
        ("k", k.to_string()),
        ("xi", r.xi.to_string()),
        ("exact_value", r.exact_value.to_string()),
        ("candidate", candidate_name(r.candidate).to_string()),
        ("float_value", r.float_value.to_string()),
        ("limit_with_e", r.limit_with_e.to_string()),
        ("limit_without_e", r.limit_without_e.to_string()),
        ("asymptote", r.asymptote.to_string()),
        ("ratio", r.ratio.to_string()),
    ];
    match format {
        Format::Plain => {
            for (name, value) in &fields {
                println!("{name}: {value}");
            }
            if let Some(report) = &report {
                println!();
                println!("{TABLE_HEADER}");
                table_rows(report).iter().for_each(|row| println!("{row}"));
            }
        }
        Format::Csv => match &report {
            Some(report) => {
                println!("{TABLE_HEADER}");
                table_rows(report).iter().for_each(|row| println!("{row}"));
            }
            None => {
                println!("{}", fields.iter().map(|f| f.0).collect::<Vec<_>>().join(","));
                println!("{}", fields.iter().map(|f| f.1.as_str()).collect::<Vec<_>>().join(","));
            }
        },
        Format::Json => {
            let mut out = json!({
                "which": which.name(),
                "k": k,
                "xi": r.xi.to_string(),
                "exact_value": r.exact_value.to_string(),
                "candidate": candidate_name(r.candidate),
                "float_value": r.float_value,
                "limit_with_e": r.limit_with_e,
                "limit_without_e": r.limit_without_e,
                "asymptote": r.asymptote,
                "ratio": r.ratio,
            });
            if let Some(report) = &report {
                out["convergence"] = json!(report
                    .rows
                    .iter()
                    .map(|r| json!({
                        "n": r.n, "m": r.m, "finite": r.finite, "limit_e": r.limit_e,
                        "limit_noe": r.limit_noe, "ratio_e": r.ratio_e, "ratio_noe": r.ratio_noe,
                    }))
                    .collect::<Vec<_>>());
            }
            emit(&out);
        }
    }
    Ok(true)
}

fn cmd_asymptote(which: Which, xi: &str, k_list: &str) -> std::result::Result<bool, Domain> {
    let xi = parse_rational(xi)?;
    let ks = parse_list(k_list)?;
    println!("k,limit,asymptote,ratio");
    for k in ks {
        let r = correlation_limit(which, k, &xi)?;
        println!("{k},{},{},{}", r.float_value, asymptote(which, k, &xi), r.ratio);
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Count { family, n, b, c, k, method, format } => cmd_count(family, n, b, c, k, method, format),
        Command::Verify { max_n, max_m, suites } => cmd_verify(max_n, max_m, suites),
        Command::Correlate { which, k, xi, n_grid, format } => cmd_correlate(which.into(), k, &xi, n_grid, format),
        Command::Asymptote { which, xi, k_list } => cmd_asymptote(which.into(), &xi, &k_list),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Domain(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
