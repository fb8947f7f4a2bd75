use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rayon::prelude::*;

use fsig::cyclic::{self, CyclicError, CyclicSingularity, DEFAULT_ORACLE_CAP};
use fsig::group::{self, GroupError, GroupSpec, Labeling};
use fsig::qpoly::{polynomial_latex, polynomial_text};
use fsig::{arith, data, Format, QpolyError, QuasiPolynomial};

#[derive(Parser)]
#[command(name = "fsig", version, about = "F-signature and multiplicity quasi-polynomials of quotient singularities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Quasi-polynomial of a cyclic quotient singularity 1/n(t_1,…,t_d)
    Cyclic(CyclicArgs),
    /// All n multiplicity quasi-polynomials of a cyclic singularity, grouped
    Table(TableArgs),
    /// Quasi-polynomial of a group given by class data
    Group(GroupArgs),
    /// Exact value at a single e
    Eval(EvalArgs),
    /// Compare the engine against brute-force lattice counts
    Verify(VerifyArgs),
}

#[derive(Args)]
struct SingArgs {
    /// Group order n
    #[arg(long)]
    n: u64,
    /// Comma-separated weights t_1,…,t_d
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    t: Vec<i64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Latex,
    Json,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Text => Format::Text,
            OutFormat::Latex => Format::Latex,
            OutFormat::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LabelingArg {
    Fixed,
    Adapted,
}

impl From<LabelingArg> for Labeling {
    fn from(l: LabelingArg) -> Self {
        match l {
            LabelingArg::Fixed => Labeling::Fixed,
            LabelingArg::Adapted => Labeling::FrobeniusAdapted,
        }
    }
}

#[derive(Args)]
struct CyclicArgs {
    #[command(flatten)]
    sing: SingArgs,
    #[arg(long, value_parser = parse_big)]
    p: BigUint,
    /// Which multiplicity function: a residue mod n, or `all` (default 0 = F-signature)
    #[arg(long, default_value = "0")]
    alpha: String,
    #[arg(long, value_enum, default_value = "text")]
    format: OutFormat,
    /// Also list the coefficients for every unit residue mod n, not only those reached by p
    #[arg(long)]
    all_residues: bool,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    sing: SingArgs,
    #[arg(long, value_parser = parse_big)]
    p: BigUint,
    #[arg(long, value_enum, default_value = "text")]
    format: OutFormat,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SpecSource {
    /// Group spec JSON file
    #[arg(long)]
    file: Option<String>,
    /// Shipped spec: e6, klein4 or d4_veronese3
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Args)]
struct GroupArgs {
    #[command(flatten)]
    source: SpecSource,
    #[arg(long, value_parser = parse_big)]
    p: BigUint,
    /// Character row index, or `all` (default: the trivial row)
    #[arg(long)]
    char: Option<String>,
    /// Evaluate at this e instead of printing the quasi-polynomial
    #[arg(long)]
    e: Option<u64>,
    #[arg(long, value_enum, default_value = "fixed")]
    labeling: LabelingArg,
    #[arg(long, value_enum, default_value = "text")]
    format: OutFormat,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long, requires = "t")]
    n: Option<u64>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    t: Vec<i64>,
    #[arg(long, conflicts_with_all = ["n", "builtin"])]
    file: Option<String>,
    #[arg(long, conflicts_with = "n")]
    builtin: Option<String>,
    /// A quasi-polynomial previously written with --format json
    #[arg(long, conflicts_with_all = ["n", "file", "builtin", "p"])]
    qpoly: Option<String>,
    #[arg(long, value_parser = parse_big)]
    p: Option<BigUint>,
    #[arg(long)]
    e: u64,
    /// Residue α for cyclic input, character row for group input
    #[arg(long)]
    alpha: Option<u64>,
    #[arg(long, value_enum, default_value = "fixed")]
    labeling: LabelingArg,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, requires_all = ["t", "p", "e"], conflicts_with = "sweep")]
    n: Option<u64>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    t: Vec<i64>,
    #[arg(long, value_parser = parse_big)]
    p: Option<BigUint>,
    #[arg(long)]
    e: Option<u32>,
    /// Run a built-in sweep (`default`: n ≤ 10, d ≤ 3, p ∈ {7, 11}, e = 1)
    #[arg(long)]
    sweep: Option<String>,
    /// Print every case, not only failures
    #[arg(long)]
    verbose: bool,
    /// Oracle enumeration cap (overrides FSIG_ORACLE_CAP)
    #[arg(long)]
    cap: Option<u64>,
}

fn parse_big(s: &str) -> Result<BigUint, String> {
    s.parse().map_err(|_| format!("{s:?} is not a nonnegative integer"))
}

enum Failure {
    Mismatch,
    Invalid(String),
    Cap(String),
    Inconsistent(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Mismatch => 1,
            Failure::Invalid(_) => 2,
            Failure::Cap(_) => 3,
            Failure::Inconsistent(_) => 4,
        }
    }
}

impl From<CyclicError> for Failure {
    fn from(e: CyclicError) -> Self {
        match e {
            CyclicError::CapExceeded { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        if e.is_inconsistent_data() {
            Failure::Inconsistent(e.to_string())
        } else {
            Failure::Invalid(e.to_string())
        }
    }
}

impl From<QpolyError> for Failure {
    fn from(e: QpolyError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Cyclic(a) => cmd_cyclic(a),
        Command::Table(a) => cmd_table(a),
        Command::Group(a) => cmd_group(a),
        Command::Eval(a) => cmd_eval(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Mismatch => {}
                Failure::Invalid(m) => eprintln!("error: {m}"),
                Failure::Cap(m) => eprintln!("error: {m}; raise FSIG_ORACLE_CAP or --cap to allow it"),
                Failure::Inconsistent(m) => eprintln!("error: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}

fn oracle_cap(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var("FSIG_ORACLE_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Invalid(format!("FSIG_ORACLE_CAP={v:?} is not a nonnegative integer"))),
        Err(_) => Ok(DEFAULT_ORACLE_CAP),
    }
}

fn load_spec(file: Option<&str>, builtin: Option<&str>) -> Result<GroupSpec, Failure> {
    match (file, builtin) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{path}: {e}")))?;
            Ok(GroupSpec::from_json(&text)?)
        }
        (None, Some(name)) => match data::builtin(name) {
            Some(spec) => Ok(spec?),
            None => Err(Failure::Invalid(format!(
                "unknown builtin {name:?}; available: {}",
                data::BUILTIN_NAMES.join(", ")
            ))),
        },
        (None, None) => Err(Failure::Invalid("give --file or --builtin".into())),
    }
}

/// Prints several quasi-polynomials, merging labels whose tables coincide.
fn print_grouped(qps: &[QuasiPolynomial], label: &str, format: OutFormat) {
    if let OutFormat::Json = format {
        let items: Vec<String> = qps.iter().map(QuasiPolynomial::to_json).collect();
        println!("[{}]", items.join(",\n"));
        return;
    }
    let mut groups: Vec<(Vec<usize>, &QuasiPolynomial)> = Vec::new();
    for qp in qps {
        match groups.iter_mut().find(|(_, rep)| rep.table() == qp.table()) {
            Some((labels, _)) => labels.push(qp.alpha()),
            None => groups.push((vec![qp.alpha()], qp)),
        }
    }
    for (labels, qp) in groups {
        let labels: Vec<String> = labels.iter().map(usize::to_string).collect();
        match format {
            OutFormat::Latex => println!("{} = {}: {}", latex_label(label), labels.join(", "), qp.render(Format::Latex)),
            _ => println!("{label} = {}: {}", labels.join(", "), qp.render(Format::Text)),
        }
    }
}

fn latex_label(label: &str) -> &str {
    match label {
        "α" => "\\alpha",
        "χ" => "\\chi",
        other => other,
    }
}

fn parse_selector(s: &str, what: &str) -> Result<Option<u64>, Failure> {
    if s == "all" {
        return Ok(None);
    }
    s.parse()
        .map(Some)
        .map_err(|_| Failure::Invalid(format!("{what} must be a nonnegative integer or `all`, got {s:?}")))
}

fn cmd_cyclic(a: CyclicArgs) -> Outcome {
    let sing = CyclicSingularity::new(a.sing.n, &a.sing.t)?;
    match parse_selector(&a.alpha, "--alpha")? {
        None => print_grouped(&cyclic::multiplicity_table(&sing, &a.p)?, "α", a.format),
        Some(alpha) => {
            let qp = cyclic::multiplicity_qpoly(&sing, &a.p, alpha)?;
            println!("{}", qp.render(a.format.into()));
            if a.all_residues {
                print_all_residues(&sing, alpha % sing.order(), a.format);
            }
        }
    }
    Ok(())
}

/// Coefficients for every unit residue mod n: the answer for a generic prime.
fn print_all_residues(sing: &CyclicSingularity, alpha: u64, format: OutFormat) {
    let n = sing.order();
    let profile = cyclic::subset_gcds(sing).expect("validated dimension");
    let units: Vec<u64> = if n == 1 { vec![0] } else { (1..n).filter(|&r| arith::gcd(r, n) == 1).collect() };
    println!("all residues r = p^e mod {n}:");
    for r in units {
        let row = cyclic::coefficient_row(sing, &profile, alpha, if n == 1 { 1 } else { r });
        match format {
            OutFormat::Latex => println!("  r = {r}: {}", polynomial_latex(&row)),
            _ => println!("  r = {r}: {}", polynomial_text(&row)),
        }
    }
}

fn cmd_table(a: TableArgs) -> Outcome {
    let sing = CyclicSingularity::new(a.sing.n, &a.sing.t)?;
    print_grouped(&cyclic::multiplicity_table(&sing, &a.p)?, "α", a.format);
    Ok(())
}

fn cmd_group(a: GroupArgs) -> Outcome {
    let spec = load_spec(a.source.file.as_deref(), a.source.builtin.as_deref())?;
    let labeling = a.labeling.into();
    let selector = match &a.char {
        Some(s) => parse_selector(s, "--char")?,
        None => Some(spec.trivial_index() as u64),
    };
    match (selector, a.e) {
        (Some(k), Some(e)) => println!("{}", group::multiplicity_general(&spec, &a.p, e, k as usize, labeling)?),
        (Some(k), None) => {
            let qp = group::fsignature_qpoly_general(&spec, &a.p, k as usize, labeling)?;
            println!("{}", qp.render(a.format.into()));
        }
        (None, Some(e)) => {
            for k in 0..spec.characters().len() {
                let v = group::multiplicity_general(&spec, &a.p, e, k, labeling)?;
                println!("χ = {k}: {v}");
            }
        }
        (None, None) => print_grouped(&group::multiplicity_table_general(&spec, &a.p, labeling)?, "χ", a.format),
    }
    Ok(())
}

fn cmd_eval(a: EvalArgs) -> Outcome {
    let qp = if let Some(path) = &a.qpoly {
        let text = fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{path}: {e}")))?;
        QuasiPolynomial::from_json(&text)?
    } else {
        let p = a.p.as_ref().ok_or_else(|| Failure::Invalid("--p is required".into()))?;
        if let Some(n) = a.n {
            let sing = CyclicSingularity::new(n, &a.t)?;
            cyclic::multiplicity_qpoly(&sing, p, a.alpha.unwrap_or(0))?
        } else if a.file.is_some() || a.builtin.is_some() {
            let spec = load_spec(a.file.as_deref(), a.builtin.as_deref())?;
            let k = a.alpha.map_or(spec.trivial_index(), |k| k as usize);
            let value = group::multiplicity_general(&spec, p, a.e, k, a.labeling.into())?;
            println!("{value}");
            return Ok(());
        } else {
            return Err(Failure::Invalid("give --n/--t, --file, --builtin or --qpoly".into()));
        }
    };
    println!("{}", qp.evaluate(a.e)?);
    Ok(())
}

struct CaseReport {
    key: String,
    lines: Vec<String>,
    failed: usize,
    total: usize,
}

fn verify_case(sing: &CyclicSingularity, p: u64, e: u32, cap: u64) -> Result<CaseReport, Failure> {
    let qps = cyclic::multiplicity_table(sing, &BigUint::from(p))?;
    let counts = cyclic::brute_force_histogram(sing, p, e, cap)?;
    let mut report = CaseReport {
        key: format!("{sing} p={p} e={e}"),
        lines: Vec::new(),
        failed: 0,
        total: 0,
    };
    for (alpha, qp) in qps.iter().enumerate() {
        let engine = qp.evaluate(e as u64)?;
        let oracle = counts[alpha];
        let ok = engine == fsig::exactnum::int(oracle);
        report.total += 1;
        if !ok {
            report.failed += 1;
        }
        report.lines.push(format!(
            "{} {} α={alpha}: engine {engine}, oracle {oracle}",
            if ok { "PASS" } else { "FAIL" },
            report.key
        ));
    }
    Ok(report)
}

fn cmd_verify(a: VerifyArgs) -> Outcome {
    let cap = oracle_cap(a.cap)?;
    let reports: Vec<CaseReport> = match a.sweep.as_deref() {
        Some("default") => {
            let cases: Vec<(CyclicSingularity, u64)> = cyclic::all_singularities(10, 3)
                .into_iter()
                .flat_map(|s| {
                    let n = s.order();
                    [7u64, 11]
                        .into_iter()
                        .filter(move |p| n % p != 0)
                        .map(move |p| (s.clone(), p))
                })
                .collect();
            let mut out = cases
                .par_iter()
                .map(|(s, p)| verify_case(s, *p, 1, cap))
                .collect::<Result<Vec<_>, _>>()?;
            out.sort_by(|x, y| x.key.cmp(&y.key));
            out
        }
        Some(other) => return Err(Failure::Invalid(format!("unknown sweep {other:?}; available: default"))),
        None => {
            let n = a.n.ok_or_else(|| Failure::Invalid("give --n/--t/--p/--e or --sweep".into()))?;
            let sing = CyclicSingularity::new(n, &a.t)?;
            let p = a.p.expect("required with --n");
            let p = u64::try_from(&p).map_err(|_| Failure::Invalid("p is too large for enumeration".into()))?;
            vec![verify_case(&sing, p, a.e.expect("required with --n"), cap)?]
        }
    };
    let single = reports.len() == 1;
    let (mut failed, mut total) = (0, 0);
    for r in &reports {
        failed += r.failed;
        total += r.total;
        for line in &r.lines {
            if single || a.verbose || line.starts_with("FAIL") {
                println!("{line}");
            }
        }
    }
    println!(
        "{} of {total} checks passed across {} case(s){}",
        total - failed,
        reports.len(),
        if failed == 0 { "" } else { "; MISMATCHES FOUND" }
    );
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}
