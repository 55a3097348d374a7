//! `hessq` — compute and verify Poincaré polynomials of regular nilpotent
//! partial Hessenberg varieties from the command line.
//!
//! Conventions on the wire: positive roots are addressed by their 0-based
//! canonical index (height ascending, then coefficient-lexicographic), while
//! Θ is given as 1-based simple-root indices matching the usual α_i naming.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use hessenberg::ideal::{
    enumerate_theta_ideals, partial_hessenberg_from_ideal, typea_root_pair, IdealSet,
    PartialHessenbergFunction,
};
use hessenberg::poincare::{
    arrangement_exponents, dimension, height_dist_factors, poincare_cells, poincare_height_dist,
    poincare_product, poincare_qbinomial, poincare_weyltype, verify_identity,
};
use hessenberg::qpoly::QPolynomial;
use hessenberg::root_system::{Family, RootSystem, ThetaSet};
use hessenberg::Error;

#[derive(Parser)]
#[command(
    name = "hessq",
    version,
    about = "Poincaré polynomials of regular nilpotent partial Hessenberg varieties",
    long_about = "Builds finite root systems, enumerates Θ-ideals, and computes the \
Poincaré polynomial of the regular nilpotent partial Hessenberg variety attached to a \
Θ-ideal by several independent formulas, checking that they agree."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TypeArgs {
    /// Type family letter: A, B, C, D, E, F, or G
    #[arg(long = "type")]
    family: String,
    /// Rank of the root system
    #[arg(long)]
    rank: usize,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    All,
    Cells,
    Weyltype,
    Product,
    HeightDist,
    Qbinomial,
}

#[derive(Subcommand)]
enum Command {
    /// List the positive roots with canonical indices and heights
    Roots {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Enumerate the Θ-ideals of a root system
    Ideals {
        #[command(flatten)]
        ty: TypeArgs,
        /// Θ as comma-separated 1-based simple indices (omit for Θ = ∅)
        #[arg(long, value_delimiter = ',')]
        theta: Option<Vec<usize>>,
        /// Print only the number of ideals
        #[arg(long)]
        count: bool,
        /// Enumeration cap (default 10^6; env HESSQ_CAP overrides)
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Compute the Poincaré polynomial of a Θ-ideal
    Poincare {
        #[command(flatten)]
        ty: TypeArgs,
        /// Θ as comma-separated 1-based simple indices (with --ideal only)
        #[arg(long, value_delimiter = ',')]
        theta: Option<Vec<usize>>,
        /// Type-A marked dimensions K = k_1,...,k_s (requires --h; Θ is inferred)
        #[arg(long = "K", value_delimiter = ',')]
        ks: Option<Vec<usize>>,
        /// Partial Hessenberg values h(k_1),...,h(k_s),h(n)
        #[arg(long = "h", value_delimiter = ',')]
        hvals: Option<Vec<usize>>,
        /// Ideal as comma-separated 0-based canonical root indices
        #[arg(long, value_delimiter = ',')]
        ideal: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
        /// Include the coefficient vectors of the ideal's roots in the output
        #[arg(long)]
        show_roots: bool,
        /// Enumeration cap (defaults: 10^6 matrices / 10^7 permutations)
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Verify the polynomial identities over every Θ-ideal of a type
    Verify {
        #[command(flatten)]
        ty: TypeArgs,
        /// Restrict to one Θ (1-based simple indices); omit to sweep all Θ
        #[arg(long, value_delimiter = ',')]
        theta: Option<Vec<usize>>,
        /// Enumeration cap (default 10^6; env HESSQ_CAP overrides)
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Exponents of an ideal arrangement (dual partition of the height distribution)
    Exponents {
        #[command(flatten)]
        ty: TypeArgs,
        /// Lower ideal as comma-separated 0-based canonical root indices
        #[arg(long, value_delimiter = ',')]
        ideal: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

enum CliError {
    Invalid(String),
    Cap(String),
    Identity(String),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Invalid(_) => "invalid-input",
            CliError::Cap(_) => "cap-exceeded",
            CliError::Identity(_) => "identity-failure",
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Invalid(m) | CliError::Cap(m) | CliError::Identity(m) => m,
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Identity(_) => 4,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded(m) => CliError::Cap(m),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

// ---------------------------------------------------------------------------
// Wire formats
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct RootOut {
    index: usize,
    height: usize,
    coeffs: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pair: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct RootsOut {
    r#type: String,
    rank: usize,
    roots: Vec<RootOut>,
}

#[derive(Serialize, Deserialize)]
struct IdealsOut {
    r#type: String,
    rank: usize,
    theta: Vec<usize>,
    count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    ideals: Option<Vec<Vec<usize>>>,
}

#[derive(Serialize, Deserialize)]
struct MethodOut {
    coeffs: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct HessenbergOut {
    n: usize,
    #[serde(rename = "K")]
    ks: Vec<usize>,
    h: Vec<usize>,
    extended: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PoincareOut {
    r#type: String,
    rank: usize,
    theta: Vec<usize>,
    ideal: Vec<usize>,
    methods: BTreeMap<String, MethodOut>,
    dimension: usize,
    agree: bool,
    /// (n, m) pairs standing for [n]_q^m, from the height distribution.
    #[serde(skip_serializing_if = "Option::is_none")]
    factored: Option<Vec<(usize, i64)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hessenberg: Option<HessenbergOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ideal_roots: Option<Vec<RootOut>>,
}

#[derive(Serialize, Deserialize)]
struct VerifyFailure {
    theta: Vec<usize>,
    ideal: Vec<usize>,
    failed_checks: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct VerifyOut {
    r#type: String,
    rank: usize,
    thetas: usize,
    ideals_checked: usize,
    failures: usize,
    elapsed_ms: u128,
    failing: Vec<VerifyFailure>,
}

#[derive(Serialize, Deserialize)]
struct ExponentsOut {
    r#type: String,
    rank: usize,
    ideal: Vec<usize>,
    exponents: Vec<usize>,
}

// ---------------------------------------------------------------------------

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.command.format();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match format {
                Format::Json => {
                    let obj = serde_json::json!({
                        "error": { "kind": e.kind(), "message": e.message() }
                    });
                    eprintln!("{obj}");
                }
                _ => eprintln!("error ({}): {}", e.kind(), e.message()),
            }
            ExitCode::from(e.exit_code())
        }
    }
}

impl Command {
    fn format(&self) -> Format {
        match self {
            Command::Roots { format, .. }
            | Command::Ideals { format, .. }
            | Command::Poincare { format, .. }
            | Command::Verify { format, .. }
            | Command::Exponents { format, .. } => *format,
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Roots { ty, format } => cmd_roots(&ty, format),
        Command::Ideals {
            ty,
            theta,
            count,
            cap,
            format,
        } => cmd_ideals(&ty, theta, count, resolve_cap(cap), format),
        Command::Poincare {
            ty,
            theta,
            ks,
            hvals,
            ideal,
            method,
            show_roots,
            cap,
            format,
        } => cmd_poincare(
            &ty,
            theta,
            ks,
            hvals,
            ideal,
            method,
            show_roots,
            resolve_cap(cap),
            format,
        ),
        Command::Verify {
            ty,
            theta,
            cap,
            format,
        } => cmd_verify(&ty, theta, resolve_cap(cap), format),
        Command::Exponents { ty, ideal, format } => cmd_exponents(&ty, ideal, format),
    }
}

fn resolve_cap(flag: Option<usize>) -> Option<usize> {
    flag.or_else(|| {
        std::env::var("HESSQ_CAP")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
    })
}

fn build_system(ty: &TypeArgs) -> Result<RootSystem, CliError> {
    let family = Family::from_str(&ty.family)?;
    Ok(RootSystem::new(family, ty.rank)?)
}

/// 1-based simple indices from the wire, 0-based internally.
fn parse_theta(rs: &RootSystem, theta: Option<Vec<usize>>) -> Result<ThetaSet, CliError> {
    let rank = rs.rank();
    match theta {
        None => Ok(ThetaSet::empty(rank)),
        Some(list) => {
            for &i in &list {
                if i == 0 || i > rank {
                    return Err(CliError::Invalid(format!(
                        "theta index {i} out of range 1..={rank}"
                    )));
                }
            }
            Ok(ThetaSet::from_indices(rank, list.into_iter().map(|i| i - 1))?)
        }
    }
}

fn theta_on_wire(theta: &ThetaSet) -> Vec<usize> {
    theta.indices().into_iter().map(|i| i + 1).collect()
}

fn root_out(rs: &RootSystem, idx: usize) -> RootOut {
    RootOut {
        index: idx,
        height: rs.height(idx),
        coeffs: rs.root(idx).coeffs().to_vec(),
        pair: typea_root_pair(rs, idx).map(|(i, j)| format!("x{i}-x{j}")),
    }
}

fn coeffs_u64(poly: &QPolynomial) -> Result<Vec<u64>, CliError> {
    poly.to_u64_coeffs()
        .ok_or_else(|| CliError::Invalid("coefficient exceeds the u64 wire format".into()))
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serialization cannot fail")
    );
}

// ---------------------------------------------------------------------------
// roots
// ---------------------------------------------------------------------------

fn cmd_roots(ty: &TypeArgs, format: Format) -> Result<(), CliError> {
    let rs = build_system(ty)?;
    let out = RootsOut {
        r#type: rs.family().to_string(),
        rank: rs.rank(),
        roots: (0..rs.num_positive_roots()).map(|i| root_out(&rs, i)).collect(),
    };
    match format {
        Format::Json => print_json(&out),
        Format::Csv => {
            println!("index,height,coeffs");
            for r in &out.roots {
                let coeffs: Vec<String> = r.coeffs.iter().map(|c| c.to_string()).collect();
                println!("{},{},{}", r.index, r.height, coeffs.join(" "));
            }
        }
        Format::Plain => {
            println!("{} positive roots of {}{}", out.roots.len(), out.r#type, out.rank);
            for r in &out.roots {
                let mut line = format!("  [{:>3}] height {:>2}  {:?}", r.index, r.height, r.coeffs);
                if let Some(pair) = &r.pair {
                    let _ = write!(line, "  {pair}");
                }
                println!("{line}");
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// ideals
// ---------------------------------------------------------------------------

fn cmd_ideals(
    ty: &TypeArgs,
    theta: Option<Vec<usize>>,
    count_only: bool,
    cap: Option<usize>,
    format: Format,
) -> Result<(), CliError> {
    let rs = build_system(ty)?;
    let theta = parse_theta(&rs, theta)?;
    let ideals = enumerate_theta_ideals(&rs, &theta, cap)?;
    let out = IdealsOut {
        r#type: rs.family().to_string(),
        rank: rs.rank(),
        theta: theta_on_wire(&theta),
        count: ideals.len(),
        ideals: (!count_only).then(|| ideals.iter().map(|s| s.indices()).collect()),
    };
    match format {
        Format::Json => print_json(&out),
        Format::Csv => match &out.ideals {
            None => println!("{}", out.count),
            Some(list) => {
                for ideal in list {
                    let idx: Vec<String> = ideal.iter().map(|i| i.to_string()).collect();
                    println!("{}", idx.join(","));
                }
            }
        },
        Format::Plain => {
            println!(
                "{} Θ-ideals of {}{} for theta {:?}",
                out.count, out.r#type, out.rank, out.theta
            );
            if let Some(list) = &out.ideals {
                for ideal in list {
                    println!("  {ideal:?}");
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// poincare
// ---------------------------------------------------------------------------

#[allow(clippy::too_many_arguments)]
fn cmd_poincare(
    ty: &TypeArgs,
    theta: Option<Vec<usize>>,
    ks: Option<Vec<usize>>,
    hvals: Option<Vec<usize>>,
    ideal: Option<Vec<usize>>,
    method: Method,
    show_roots: bool,
    cap: Option<usize>,
    format: Format,
) -> Result<(), CliError> {
    let rs = build_system(ty)?;

    let hessenberg_input = match (&ks, &hvals) {
        (Some(k), Some(h)) => Some((k.clone(), h.clone())),
        (None, None) => None,
        _ => {
            return Err(CliError::Invalid(
                "--K and --h must be given together".into(),
            ))
        }
    };
    if hessenberg_input.is_some() == ideal.is_some() {
        return Err(CliError::Invalid(
            "give exactly one ideal source: --ideal, or --K with --h".into(),
        ));
    }

    let (theta_set, ideal_set, hess) = match hessenberg_input {
        Some((k, h)) => {
            if theta.is_some() {
                return Err(CliError::Invalid(
                    "--theta is inferred from --K; do not pass both".into(),
                ));
            }
            if rs.family() != Family::A {
                return Err(CliError::Invalid(
                    "--K/--h describe type-A partial Hessenberg functions".into(),
                ));
            }
            let f = PartialHessenbergFunction::new(rs.rank() + 1, k, h)?;
            let (t, i, _) = f.to_ideal(&rs)?;
            (t, i, Some(f))
        }
        None => {
            let t = parse_theta(&rs, theta)?;
            let i = IdealSet::from_indices(&rs, ideal.unwrap())?;
            // recover the (K, h) data when the ideal happens to be type A,
            // so the q-binomial method stays available
            let f = if rs.family() == Family::A {
                partial_hessenberg_from_ideal(&rs, &i, &t).ok()
            } else {
                None
            };
            (t, i, f)
        }
    };

    let mut methods: BTreeMap<String, MethodOut> = BTreeMap::new();
    let mut polys: Vec<QPolynomial> = Vec::new();
    let mut add = |name: &str, poly: QPolynomial, methods: &mut BTreeMap<String, MethodOut>|
     -> Result<(), CliError> {
        methods.insert(
            name.to_string(),
            MethodOut {
                coeffs: coeffs_u64(&poly)?,
            },
        );
        polys.push(poly);
        Ok(())
    };

    let want = |m: Method| method == Method::All || method == m;
    let mut factored = None;
    if want(Method::Cells) {
        add("cells", poincare_cells(&rs, &ideal_set, &theta_set, cap)?, &mut methods)?;
    }
    if want(Method::Weyltype) {
        add(
            "weyltype",
            poincare_weyltype(&rs, &ideal_set, &theta_set, cap)?,
            &mut methods,
        )?;
    }
    if want(Method::Product) {
        add("product", poincare_product(&rs, &ideal_set, &theta_set)?, &mut methods)?;
    }
    if want(Method::HeightDist) {
        add(
            "height-dist",
            poincare_height_dist(&rs, &ideal_set, &theta_set)?,
            &mut methods,
        )?;
        factored = Some(height_dist_factors(&rs, &ideal_set, &theta_set)?);
    }
    if method == Method::Qbinomial || (method == Method::All && hess.is_some()) {
        let f = hess.as_ref().ok_or_else(|| {
            CliError::Invalid("qbinomial requires type-A Hessenberg input (--K/--h)".into())
        })?;
        add("qbinomial", poincare_qbinomial(f)?, &mut methods)?;
    }

    let agree = polys.windows(2).all(|w| w[0] == w[1]);
    let out = PoincareOut {
        r#type: rs.family().to_string(),
        rank: rs.rank(),
        theta: theta_on_wire(&theta_set),
        ideal: ideal_set.indices(),
        methods,
        dimension: dimension(&rs, &ideal_set, &theta_set)?,
        agree,
        factored,
        hessenberg: hess.as_ref().map(|f| HessenbergOut {
            n: f.n(),
            ks: f.ks().to_vec(),
            h: f.values().to_vec(),
            extended: f.extended(),
        }),
        ideal_roots: show_roots
            .then(|| ideal_set.indices().into_iter().map(|i| root_out(&rs, i)).collect()),
    };

    match format {
        Format::Json => print_json(&out),
        Format::Csv => {
            for (name, m) in &out.methods {
                let coeffs: Vec<String> = m.coeffs.iter().map(|c| c.to_string()).collect();
                println!("{name},{}", coeffs.join(","));
            }
        }
        Format::Plain => {
            println!(
                "{}{}  theta {:?}  ideal {:?}",
                out.r#type, out.rank, out.theta, out.ideal
            );
            if let Some(h) = &out.hessenberg {
                println!("hessenberg n={} K={:?} h={:?} extended={:?}", h.n, h.ks, h.h, h.extended);
            }
            println!("dimension {}", out.dimension);
            for (name, m) in &out.methods {
                let poly = QPolynomial::from_coeffs(m.coeffs.iter().map(|&c| c.into()).collect());
                println!("  {name:<12} {:?}  =  {poly}", m.coeffs);
            }
            if let Some(factors) = &out.factored {
                let parts: Vec<String> = factors
                    .iter()
                    .map(|(n, m)| {
                        if *m == 1 {
                            format!("[{n}]")
                        } else {
                            format!("[{n}]^{m}")
                        }
                    })
                    .collect();
                println!("factored {}", if parts.is_empty() { "1".into() } else { parts.join(" ") });
            }
            println!("agree {}", out.agree);
            if let Some(roots) = &out.ideal_roots {
                println!("ideal roots:");
                for r in roots {
                    let pair = r.pair.as_deref().unwrap_or("");
                    println!("  [{:>3}] {:?} {pair}", r.index, r.coeffs);
                }
            }
        }
    }

    if !agree {
        return Err(CliError::Identity(
            "the computed methods disagree; this contradicts a proven identity and indicates a bug"
                .into(),
        ));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(
    ty: &TypeArgs,
    theta: Option<Vec<usize>>,
    cap: Option<usize>,
    format: Format,
) -> Result<(), CliError> {
    let rs = build_system(ty)?;
    let thetas: Vec<ThetaSet> = match theta {
        Some(list) => vec![parse_theta(&rs, Some(list))?],
        None => (0..(1u64 << rs.rank()))
            .map(|mask| ThetaSet::from_mask(rs.rank(), mask))
            .collect(),
    };
    let start = Instant::now();
    let mut checked = 0usize;
    let mut failing: Vec<VerifyFailure> = Vec::new();
    for t in &thetas {
        for ideal in enumerate_theta_ideals(&rs, t, cap)? {
            let hess = if rs.family() == Family::A {
                partial_hessenberg_from_ideal(&rs, &ideal, t).ok()
            } else {
                None
            };
            let report = verify_identity(&rs, &ideal, t, hess.as_ref(), cap)?;
            checked += 1;
            if !report.pass() {
                failing.push(VerifyFailure {
                    theta: theta_on_wire(t),
                    ideal: ideal.indices(),
                    failed_checks: report
                        .checks
                        .iter()
                        .filter(|c| !c.pass)
                        .map(|c| c.name.clone())
                        .collect(),
                });
            }
        }
    }
    let out = VerifyOut {
        r#type: rs.family().to_string(),
        rank: rs.rank(),
        thetas: thetas.len(),
        ideals_checked: checked,
        failures: failing.len(),
        elapsed_ms: start.elapsed().as_millis(),
        failing,
    };
    match format {
        Format::Json => print_json(&out),
        Format::Csv => {
            println!("thetas,ideals_checked,failures,elapsed_ms");
            println!(
                "{},{},{},{}",
                out.thetas, out.ideals_checked, out.failures, out.elapsed_ms
            );
        }
        Format::Plain => {
            println!(
                "{}{}: checked {} Θ-ideals over {} theta sets in {} ms, {} failures",
                out.r#type, out.rank, out.ideals_checked, out.thetas, out.elapsed_ms, out.failures
            );
            for f in &out.failing {
                println!(
                    "  FAIL theta {:?} ideal {:?}: {:?}",
                    f.theta, f.ideal, f.failed_checks
                );
            }
        }
    }
    if out.failures > 0 {
        return Err(CliError::Identity(format!(
            "{} of {} Θ-ideals violate a proven identity; this indicates a bug",
            out.failures, out.ideals_checked
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// exponents
// ---------------------------------------------------------------------------

fn cmd_exponents(ty: &TypeArgs, ideal: Vec<usize>, format: Format) -> Result<(), CliError> {
    let rs = build_system(ty)?;
    let set = IdealSet::from_indices(&rs, ideal)?;
    let exponents = arrangement_exponents(&rs, &set)?;
    let out = ExponentsOut {
        r#type: rs.family().to_string(),
        rank: rs.rank(),
        ideal: set.indices(),
        exponents,
    };
    match format {
        Format::Json => print_json(&out),
        Format::Csv => {
            let e: Vec<String> = out.exponents.iter().map(|x| x.to_string()).collect();
            println!("{}", e.join(","));
        }
        Format::Plain => {
            println!(
                "{}{}  ideal {:?}  exponents {:?}",
                out.r#type, out.rank, out.ideal, out.exponents
            );
        }
    }
    Ok(())
}
