//! Command-line front end for `tjurina-core`.
//!
//! [`run`] parses an argument vector, executes the command and returns the
//! buffered output together with the exit status, so the binary and the
//! tests share one code path.

pub mod curve_file;
pub mod report;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use tjurina_core::local::{multiplicity_sequence, LocalEngine, LocalError, DEFAULT_CAP};
use tjurina_core::saito::{verify_report, SaitoError};
use tjurina_core::topology::{
    conductor_crosscheck, dg_bound, resolution_chain, scan_classes, tau_min, validate_exponents,
    ScanBounds, TopologyError,
};

use curve_file::{parse_curve_file, CurveFileError};
use report::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    ScanViolation = 1,
    InputError = 2,
    NotSaitoBasis = 3,
    NonIsolated = 4,
}

impl Status {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug)]
pub struct Outcome {
    pub status: Status,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Parser)]
#[command(
    name = "tjurina",
    version,
    about = "Tjurina and Milnor numbers of plane branches"
)]
pub struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest truncation degree tried by the colength engine.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub colength_cap: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Resolution data, mu, tau_min and the Dimca-Greuel bound of a class.
    Topo {
        /// Characteristic exponents, comma separated, e.g. 9,12,17.
        #[arg(value_delimiter = ',', required = true)]
        exponents: Vec<u64>,
    },
    /// Checks a Saito basis and the blow-up formula on an explicit curve.
    Verify { file: PathBuf },
    /// Checks the tau_min inequalities on every class within bounds.
    Scan {
        #[arg(long)]
        max_beta0: u64,
        #[arg(long)]
        max_beta1: u64,
        #[arg(long, default_value_t = 2)]
        max_pairs: usize,
        /// Worker threads (defaults to the number of cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// List every class, not only violations and witnesses.
        #[arg(long)]
        list: bool,
    },
    /// The Dimca-Greuel lower bound for tau given mu.
    Bound { mu: u64 },
}

/// A failure with its exit status and a stable kind tag.
struct Failure {
    status: Status,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn input(kind: &'static str, message: impl ToString) -> Self {
        Failure {
            status: Status::InputError,
            kind,
            message: message.to_string(),
        }
    }
}

impl From<TopologyError> for Failure {
    fn from(e: TopologyError) -> Self {
        let kind = match e {
            TopologyError::InvalidExponents(_) => "invalid_exponents",
            TopologyError::InvalidBounds { .. } => "invalid_bounds",
            TopologyError::Smooth => "smooth_branch",
            _ => "topology",
        };
        Failure::input(kind, e)
    }
}

impl From<LocalError> for Failure {
    fn from(e: LocalError) -> Self {
        match e {
            LocalError::NonIsolated { .. } => Failure {
                status: Status::NonIsolated,
                kind: "non_isolated",
                message: e.to_string(),
            },
            LocalError::CapExceeded { .. } => {
                Failure::input("cap_exceeded", format!("{e}; raise --colength-cap"))
            }
            _ => Failure::input("curve", e),
        }
    }
}

impl From<SaitoError> for Failure {
    fn from(e: SaitoError) -> Self {
        match e {
            SaitoError::NotSaitoBasis(ref check) => Failure {
                status: Status::NotSaitoBasis,
                kind: "not_saito_basis",
                message: format!(
                    "{e}: the wedge coefficient is {}divisible by f{}",
                    if check.divisible { "" } else { "not " },
                    if check.divisible {
                        format!(" but the quotient {} is not a unit", check.unit)
                    } else {
                        String::new()
                    }
                ),
            },
            SaitoError::Local(l) => l.into(),
            _ => Failure::input("form", e),
        }
    }
}

impl From<CurveFileError> for Failure {
    fn from(e: CurveFileError) -> Self {
        match e {
            CurveFileError::Form(s) => s.into(),
            _ => Failure::input("curve_file", e),
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// Parses `args` (without the program name) and runs the command.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(std::iter::once("tjurina".to_string()).chain(args.clone()))
    {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    status: Status::InputError,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    status: Status::Success,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let echo = CommandEcho {
        name: match cli.command {
            Command::Topo { .. } => "topo",
            Command::Verify { .. } => "verify",
            Command::Scan { .. } => "scan",
            Command::Bound { .. } => "bound",
        }
        .to_string(),
        args,
    };
    let result = match &cli.command {
        Command::Topo { exponents } => topo(&cli, echo.clone(), exponents),
        Command::Verify { file } => verify(&cli, echo.clone(), file),
        Command::Scan {
            max_beta0,
            max_beta1,
            max_pairs,
            jobs,
            list,
        } => {
            let bounds = ScanBounds {
                max_beta0: *max_beta0,
                max_beta1: *max_beta1,
                max_pairs: *max_pairs,
            };
            scan(&cli, echo.clone(), bounds, *jobs, *list)
        }
        Command::Bound { mu } => Ok(bound(&cli, echo.clone(), *mu)),
    };
    match result {
        Ok(outcome) => outcome,
        Err(f) if cli.json => Outcome {
            status: f.status,
            stdout: to_json(&ErrorReport {
                schema_version: SCHEMA_VERSION.to_string(),
                command: echo,
                exit_code: f.status.code(),
                kind: f.kind.to_string(),
                message: f.message,
            }),
            stderr: String::new(),
        },
        Err(f) => Outcome {
            status: f.status,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn ok(stdout: String) -> Outcome {
    Outcome {
        status: Status::Success,
        stdout,
        stderr: String::new(),
    }
}

fn tuple(xs: &[String]) -> String {
    format!("({})", xs.join(","))
}

fn topo(cli: &Cli, echo: CommandEcho, exponents: &[u64]) -> Result<Outcome, Failure> {
    let c = validate_exponents(exponents)?;
    let chain = resolution_chain(&c)?;
    let tau = tau_min(&c)?;
    let report = TopoReport::new(
        echo,
        &c,
        &chain,
        conductor_crosscheck(&c),
        tau,
        dg_bound(chain.mu),
    );
    if cli.json {
        return Ok(ok(to_json(&report)));
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        "exponents {}  gcd chain {}",
        tuple(&report.exponents),
        tuple(&report.gcd_chain)
    );
    let _ = writeln!(
        out,
        "{:>5}  {:<20} {:>6} {:>6} {:>5} {:>5} {:>5} {:>5} {:>12}",
        "stage", "exponents", "nu", "n", "p1", "i", "nu1", "nu2", "contribution"
    );
    for (k, s) in report.stages.iter().enumerate() {
        let _ = writeln!(
            out,
            "{:>5}  {:<20} {:>6} {:>6} {:>5} {:>5} {:>5} {:>5} {:>12}",
            k + 1,
            tuple(&s.exponents),
            s.multiplicity,
            s.n,
            s.p1,
            s.curve_index,
            s.nu1,
            s.nu2,
            s.contribution
        );
    }
    let _ = writeln!(out, "mu = {}", report.mu);
    let _ = writeln!(out, "tau_min = {}", report.tau_min);
    let _ = writeln!(out, "dg_bound = {}", report.dg_bound);
    let _ = writeln!(
        out,
        "4*tau_min > 3*mu: {}",
        if report.strict_inequality {
            "yes"
        } else {
            "NO"
        }
    );
    Ok(ok(out))
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::input("io", format!("cannot read {}: {e}", path.display())))
}

fn verify(cli: &Cli, echo: CommandEcho, path: &PathBuf) -> Result<Outcome, Failure> {
    let curve = parse_curve_file(&read_file(path)?)?;
    let engine = LocalEngine::new(cli.colength_cap);
    engine.require_isolated(&curve.f)?;
    let nu = curve.f.order_u32().ok_or(LocalError::ZeroCurve)?;
    let sequence = multiplicity_sequence(&curve.f)
        .ok()
        .map(|s| s.iter().map(u32::to_string).collect::<Vec<_>>());

    let (mu, tau, saito) = match &curve.forms {
        Some((w1, w2)) => {
            let r = verify_report(&engine, &curve.f, w1, w2)?;
            let form = |w: &tjurina_core::saito::OneForm| FormReport {
                a: w.a().to_string(),
                b: w.b().to_string(),
            };
            (r.mu, r.tau, Some(SaitoReport::new(form(w1), form(w2), &r)))
        }
        None => {
            let (mu, tau) = rayon::join(|| engine.milnor(&curve.f), || engine.tjurina(&curve.f));
            (mu?, tau?, None)
        }
    };
    let report = VerifyReport {
        schema_version: SCHEMA_VERSION.to_string(),
        command: echo,
        f: curve.f.to_string(),
        nu: nu.to_string(),
        multiplicity_sequence: sequence,
        mu: mu.to_string(),
        tau: tau.to_string(),
        saito,
    };
    if cli.json {
        return Ok(ok(to_json(&report)));
    }
    Ok(ok(verify_text(&report)))
}

fn verify_text(r: &VerifyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "f = {}", r.f);
    let _ = writeln!(out, "nu = {}", r.nu);
    if let Some(seq) = &r.multiplicity_sequence {
        let _ = writeln!(out, "multiplicity sequence = {}", tuple(seq));
    }
    let Some(s) = &r.saito else {
        let _ = writeln!(out, "mu = {}", r.mu);
        let _ = writeln!(out, "tau = {}", r.tau);
        let _ = writeln!(out, "no Saito basis given");
        return out;
    };
    let _ = writeln!(out, "Saito basis: yes (unit {})", s.unit);
    let _ = writeln!(
        out,
        "tangent line y + epsilon*x, epsilon = {}; nu1 = {}, nu2 = {}",
        s.epsilon, s.nu1, s.nu2
    );
    let _ = writeln!(out, "g1 = {}", s.g1);
    let _ = writeln!(out, "g2 = {}", s.g2);
    let _ = writeln!(
        out,
        "i(omega1) = {}, i(omega2) = {}, index {} {}",
        s.i1,
        s.i2,
        if s.curve_index_exact { "=" } else { "<=" },
        s.curve_index
    );
    let _ = writeln!(out, "strict transform = {}", s.strict_transform);
    let _ = writeln!(out, "mu~ = {}, tau~ = {}", s.mu_tilde, s.tau_tilde);
    for (k, d) in s.diagnostics.iter().enumerate() {
        let _ = writeln!(
            out,
            "gcd(B{0}, f_y) = {1}, gcd(B{0}, g{0}) = {2}",
            k + 1,
            d.gcd_b_fy,
            d.gcd_b_cofactor
        );
    }
    let verdict = match &s.rhs {
        None => "formula n/a (index infinite)".to_string(),
        Some(rhs) if s.formula_holds => format!("formula {} = {rhs} HOLDS", s.lhs),
        Some(rhs) if s.good_basis => format!("formula {} ≠ {rhs} FAILS", s.lhs),
        Some(rhs) => format!("formula {} ≠ {rhs} (expected: no good basis)", s.lhs),
    };
    let _ = writeln!(
        out,
        "good basis: {}; mu={} tau={} I(g1,g2)={}; {verdict}",
        if s.good_basis { "yes" } else { "no" },
        r.mu,
        r.tau,
        s.igg
    );
    out
}

fn scan(
    cli: &Cli,
    echo: CommandEcho,
    bounds: ScanBounds,
    jobs: Option<usize>,
    list: bool,
) -> Result<Outcome, Failure> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        if j == 0 {
            return Err(Failure::input(
                "invalid_bounds",
                "--jobs must be at least 1",
            ));
        }
        pool = pool.num_threads(j);
    }
    let pool = pool
        .build()
        .map_err(|e| Failure::input("threads", format!("cannot start workers: {e}")))?;
    let start = Instant::now();
    let report = pool.install(|| scan_classes(bounds))?;
    let elapsed = start.elapsed().as_millis();
    let json = ScanJson::new(echo, &report, list, elapsed);
    let status = if report.violation_count() == 0 {
        Status::Success
    } else {
        Status::ScanViolation
    };
    let stdout = if cli.json {
        to_json(&json)
    } else {
        scan_text(&json)
    };
    Ok(Outcome {
        status,
        stdout,
        stderr: String::new(),
    })
}

fn class_line(c: &ClassReport) -> String {
    format!(
        "{}  nu {}  mu={} tau_min={} dg_bound={} slack={} sum(nu-1)={}",
        tuple(&c.exponents),
        tuple(&c.multiplicities),
        c.mu,
        c.tau_min,
        c.dg_bound,
        c.slack,
        c.sum_nu_minus_one
    )
}

fn scan_text(r: &ScanJson) -> String {
    let mut out = String::new();
    if let Some(classes) = &r.classes {
        for c in classes {
            let _ = writeln!(out, "{}", class_line(c));
        }
    }
    for c in &r.violations {
        let _ = writeln!(out, "VIOLATION {} [{}]", class_line(c), c.failed.join("; "));
    }
    for e in &r.errors {
        let _ = writeln!(out, "ERROR {}: {}", tuple(&e.exponents), e.message);
    }
    let _ = writeln!(
        out,
        "{} classes, {} violations",
        r.class_count, r.violation_count
    );
    if let Some(w) = &r.min_slack_witness {
        let _ = writeln!(out, "minimal slack: {}", class_line(w));
    }
    if let Some(w) = &r.min_dg_witness {
        let _ = writeln!(out, "closest to dg_bound: {}", class_line(w));
    }
    let _ = writeln!(out, "elapsed {} ms", r.elapsed_ms);
    out
}

fn bound(cli: &Cli, echo: CommandEcho, mu: u64) -> Outcome {
    let report = BoundReport {
        schema_version: SCHEMA_VERSION.to_string(),
        command: echo,
        mu: mu.to_string(),
        dg_bound: dg_bound(mu).to_string(),
    };
    if cli.json {
        ok(to_json(&report))
    } else {
        ok(format!("{}\n", report.dg_bound))
    }
}
