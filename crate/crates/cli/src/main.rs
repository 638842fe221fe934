//! `chainsub`: build subdivisions, evaluate the face number transforms and
//! run the verification suites from the command line.
//!
//! Exit status is 0 on success, 1 when a check fails and 2 for usage or
//! file errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use chainsub::classical::{barycentric, cms, colored_barycentric, edgewise};
use chainsub::colored::EulerianTable;
use chainsub::eulerian::{eulerian_gamma, eulerian_polynomial, gamma_via_slides, GammaSelector, Method, Selector};
use chainsub::json;
use chainsub::multichain::{multichain_subdivision, type_one, type_two, IncreasingMap};
use chainsub::poly::IntPolynomial;
use chainsub::sturm::{count_real_roots, is_real_rooted, isolate_real_roots};
use chainsub::transforms::{f_matrix, h_matrix};
use chainsub::verify::{run_suite, Suite, SuiteParams};
use chainsub::{FVector, HVector, SimplicialComplex};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "chainsub", version, about = "Multichain subdivisions and colored Eulerian numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Include the wall-clock duration in the output document.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Subdivide a complex read from JSON.
    Subdivide {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long, value_enum)]
        method: SubdivisionMethod,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long = "N")]
        n: Option<usize>,
        /// Increasing map for `--method multichain`, e.g. `1,4,5`.
        #[arg(long)]
        iota: Option<String>,
    },
    /// Print the f- or h-transformation matrix, or apply it to a vector.
    Transform {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        /// A JSON integer array, or a complex whose vector is transformed.
        #[arg(long)]
        apply: Option<PathBuf>,
    },
    /// Colored Eulerian numbers and polynomials.
    Eulerian {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        /// Last color.
        #[arg(long)]
        s: Option<usize>,
        /// Block index: the last letter is d + 1 − j.
        #[arg(long)]
        j: Option<usize>,
        /// Sum over all nonzero last colors.
        #[arg(long, conflicts_with = "s")]
        nonzero: bool,
        #[arg(long, value_enum, default_value_t = CountMethod::Recurrence)]
        method: CountMethod,
    },
    /// γ-vector of a symmetric colored Eulerian polynomial.
    Gamma {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum)]
        which: Which,
    },
    /// Exact real-rootedness test.
    RrCheck {
        /// Coefficients lowest degree first, e.g. `1,3,1`.
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        complex: Option<PathBuf>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long = "N")]
        n: Option<usize>,
        #[arg(long)]
        max_d: Option<usize>,
        #[arg(long)]
        max_r: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SubdivisionMethod {
    Barycentric,
    Edgewise,
    Colored,
    Cms,
    Type1,
    Type2,
    Multichain,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    F,
    H,
}

#[derive(Clone, Copy, ValueEnum)]
enum CountMethod {
    Bruteforce,
    Recurrence,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Color0,
    Nonzero,
}

/// A result document plus whether every check in it passed.
struct Outcome {
    doc: Value,
    passed: bool,
}

impl Outcome {
    fn ok(doc: Value) -> Self {
        Self { doc, passed: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli.command) {
        Ok(mut outcome) => {
            let elapsed = start.elapsed().as_secs_f64() * 1000.0;
            if cli.timing {
                if let Value::Object(map) = &mut outcome.doc {
                    map.insert("duration_ms".into(), json!(elapsed));
                }
            }
            if matches!(cli.command, Command::Verify { .. }) {
                eprintln!("elapsed: {elapsed:.1} ms");
            }
            match render(&outcome.doc, cli.format) {
                Ok(text) => print!("{text}"),
                Err(e) => {
                    eprintln!("error: {e:#}");
                    return ExitCode::from(2);
                }
            }
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::Subdivide { complex, method, r, n, iota } => subdivide(complex, *method, *r, *n, iota.as_deref()),
        Command::Transform { kind, d, r, apply } => transform(*kind, *d, *r, apply.as_deref()),
        Command::Eulerian { d, r, s, j, nonzero, method } => eulerian(*d, *r, *s, *j, *nonzero, *method),
        Command::Gamma { d, r, which } => gamma(*d, *r, *which),
        Command::RrCheck { poly } => rr_check(poly),
        Command::Verify { suite, complex, r, n, max_d, max_r } => {
            let suite: Suite = suite.parse().map_err(|e: String| anyhow!("--suite: {e}"))?;
            let mut params = SuiteParams { r: *r, n: *n, max_d: *max_d, max_r: *max_r, ..SuiteParams::default() };
            if let Some(path) = complex {
                let name = path.file_stem().map_or_else(|| "complex".into(), |s| s.to_string_lossy().into_owned());
                params.complexes.push((name, read_complex(path)?));
            }
            let report = run_suite(suite, &params);
            Ok(Outcome { passed: report.passed, doc: serde_json::to_value(&report)? })
        }
    }
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn read_complex(path: &Path) -> Result<SimplicialComplex> {
    json::parse_complex(&read_file(path)?).with_context(|| format!("invalid complex in {}", path.display()))
}

fn require(value: Option<usize>, flag: &str, method: &str) -> Result<usize> {
    value.ok_or_else(|| anyhow!("{flag} is required for --method {method}"))
}

fn subdivide(
    path: &Path,
    method: SubdivisionMethod,
    r: Option<usize>,
    n: Option<usize>,
    iota: Option<&str>,
) -> Result<Outcome> {
    let base = read_complex(path)?;
    if iota.is_some() && !matches!(method, SubdivisionMethod::Multichain) {
        bail!("--iota is only used with --method multichain");
    }
    let complex = match method {
        SubdivisionMethod::Barycentric => barycentric(&base),
        SubdivisionMethod::Edgewise => {
            let order: Vec<usize> = (0..base.num_vertices()).collect();
            edgewise(&base, require(r, "--r", "edgewise")?, &order)?.complex
        }
        SubdivisionMethod::Colored => colored_barycentric(&base, require(r, "--r", "colored")?)?.complex,
        SubdivisionMethod::Cms => cms(&base, require(n, "--N", "cms")?)?.complex,
        SubdivisionMethod::Type1 => type_one(&base, require(r, "--r", "type1")?)?.complex,
        SubdivisionMethod::Type2 => type_two(&base, require(r, "--r", "type2")?)?.complex,
        SubdivisionMethod::Multichain => {
            let iota: IncreasingMap = iota
                .ok_or_else(|| anyhow!("--iota is required for --method multichain"))?
                .parse()
                .context("--iota")?;
            if r.is_some_and(|r| r != iota.r()) {
                bail!("--r {} does not match the length of --iota ({})", r.unwrap_or(0), iota.r());
            }
            multichain_subdivision(&base, iota.r(), &iota)?.complex
        }
    };
    Ok(Outcome::ok(json::complex(&complex)))
}

fn transform(kind: Kind, d: usize, r: usize, apply: Option<&Path>) -> Result<Outcome> {
    if r == 0 {
        bail!("--r must be at least 1");
    }
    let matrix = match kind {
        Kind::F => f_matrix(d, r),
        Kind::H => h_matrix(d, r),
    };
    let Some(path) = apply else {
        return Ok(Outcome::ok(json::matrix(&matrix)));
    };
    let text = read_file(path)?;
    let vector = match json::parse_complex(&text) {
        Ok(c) => match kind {
            Kind::F => c.f_vector().0,
            Kind::H => c.h_vector().0,
        },
        Err(_) => json::parse_vector(&text).with_context(|| format!("invalid vector in {}", path.display()))?,
    };
    if vector.len() != d + 1 {
        bail!("--d {d} expects a vector of length {}, {} has {}", d + 1, path.display(), vector.len());
    }
    let out = match kind {
        Kind::F => FVector(matrix.apply(&vector)).0,
        Kind::H => HVector(matrix.apply(&vector)).0,
    };
    Ok(Outcome::ok(json::bigints(&out)))
}

fn eulerian(
    d: usize,
    r: usize,
    s: Option<usize>,
    j: Option<usize>,
    nonzero: bool,
    method: CountMethod,
) -> Result<Outcome> {
    if d == 0 || r == 0 {
        bail!("--d and --r must be at least 1");
    }
    if s.is_some_and(|s| s >= r) {
        bail!("--s must be below --r");
    }
    if j.is_some_and(|j| j == 0 || j > d) {
        bail!("--j must lie in 1..={d}");
    }
    let method = match method {
        CountMethod::Bruteforce => Method::Bruteforce,
        CountMethod::Recurrence => Method::Recurrence,
    };
    match (s, j) {
        (Some(s), Some(j)) => {
            let table = match method {
                Method::Bruteforce => EulerianTable::bruteforce(d, r),
                Method::Recurrence => EulerianTable::recurrence(d, r),
            };
            Ok(Outcome::ok(json::bigints(table.row(s, j))))
        }
        (None, Some(_)) => bail!("--j needs --s"),
        (s, None) => {
            let selector = match (s, nonzero) {
                (Some(s), _) => Selector::Color(s),
                (None, true) => Selector::Nonzero,
                (None, false) => Selector::Total,
            };
            Ok(Outcome::ok(json::bigints(eulerian_polynomial(d, r, selector, method).coeffs())))
        }
    }
}

fn gamma(d: usize, r: usize, which: Which) -> Result<Outcome> {
    if d == 0 || r == 0 {
        bail!("--d and --r must be at least 1");
    }
    let which = match which {
        Which::Color0 => GammaSelector::Color0,
        Which::Nonzero => GammaSelector::Nonzero,
    };
    let decomposed = eulerian_gamma(d, r, which)?;
    let slides = gamma_via_slides(d, r, which);
    let agree = decomposed == slides;
    Ok(Outcome {
        passed: agree && decomposed.is_nonnegative(),
        doc: json!({
            "d": d,
            "r": r,
            "center": decomposed.n,
            "gammas": json::bigints(&decomposed.gammas),
            "gammas_by_slides": json::bigints(&slides.gammas),
            "agree": agree,
            "nonnegative": decomposed.is_nonnegative(),
        }),
    })
}

fn rr_check(poly: &str) -> Result<Outcome> {
    let p: IntPolynomial = poly.parse().context("--poly")?;
    let real = is_real_rooted(&p);
    let roots: Vec<Value> = isolate_real_roots(&p)
        .iter()
        .map(|iv| json!({"lo": iv.lo.to_string(), "hi": iv.hi.to_string(), "multiplicity": iv.multiplicity}))
        .collect();
    Ok(Outcome {
        passed: real,
        doc: json!({
            "poly": p.to_string(),
            "real_rooted": real,
            "distinct_real_roots": count_real_roots(&p),
            "roots": roots,
        }),
    })
}

/// CSV view of a document: arrays become rows, complexes list their
/// vectors and facets, suite reports list their checks.
fn render(doc: &Value, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(format!("{doc}\n")),
        Format::Csv => {
            let mut writer = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
            let cell = |v: &Value| match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            let row_of = |v: &Value| -> Vec<String> {
                match v {
                    Value::Array(items) => items.iter().map(cell).collect(),
                    other => vec![cell(other)],
                }
            };
            match doc {
                Value::Array(items) if items.iter().any(Value::is_array) => {
                    for item in items {
                        writer.write_record(row_of(item))?;
                    }
                }
                Value::Array(_) => writer.write_record(row_of(doc))?,
                Value::Object(map) if map.contains_key("checks") => {
                    writer.write_record(["check", "result"])?;
                    for check in map["checks"].as_array().into_iter().flatten() {
                        let result = if check["passed"] == json!(true) { "PASS" } else { "FAIL" };
                        writer.write_record([cell(&check["name"]), result.to_string()])?;
                    }
                }
                Value::Object(map) if map.contains_key("facets") => {
                    for key in ["f_vector", "h_vector"] {
                        let mut row = vec![key.to_string()];
                        row.extend(row_of(&map[key]));
                        writer.write_record(row)?;
                    }
                    for facet in map["facets"].as_array().into_iter().flatten() {
                        let mut row = vec!["facet".to_string()];
                        row.extend(row_of(facet));
                        writer.write_record(row)?;
                    }
                }
                Value::Object(map) => {
                    for (key, value) in map {
                        let mut row = vec![key.clone()];
                        row.extend(row_of(value));
                        writer.write_record(row)?;
                    }
                }
                other => writer.write_record([cell(other)])?,
            }
            Ok(String::from_utf8(writer.into_inner()?)?)
        }
    }
}
