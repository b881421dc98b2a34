//! Machine-readable reports. Integers, rationals and polynomials are emitted
//! as strings so that no consumer has to cope with precision loss.

use serde::{Deserialize, Serialize};
use tjurina_core::saito::InvariantReport;
use tjurina_core::topology::{
    CharExponents, ClassCheck, ResolutionChain, ResolutionStage, ScanReport,
};
use tjurina_core::Valuation;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommandEcho {
    pub name: String,
    pub args: Vec<String>,
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(T::to_string).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageReport {
    pub exponents: Vec<String>,
    pub multiplicity: String,
    pub n: String,
    pub p1: String,
    pub curve_index: String,
    pub nu1: String,
    pub nu2: String,
    pub contribution: String,
}

impl From<&ResolutionStage> for StageReport {
    fn from(s: &ResolutionStage) -> Self {
        StageReport {
            exponents: strings(s.exponents.beta()),
            multiplicity: s.multiplicity.to_string(),
            n: s.n.to_string(),
            p1: s.p1.to_string(),
            curve_index: s.curve_index.to_string(),
            nu1: s.nu1.to_string(),
            nu2: s.nu2.to_string(),
            contribution: s.contribution.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopoReport {
    pub schema_version: String,
    pub command: CommandEcho,
    pub exponents: Vec<String>,
    pub gcd_chain: Vec<String>,
    pub stages: Vec<StageReport>,
    pub mu: String,
    pub conductor: String,
    pub tau_min: String,
    pub dg_bound: String,
    /// `4·τ_min > 3·μ`.
    pub strict_inequality: bool,
}

impl TopoReport {
    pub fn new(
        command: CommandEcho,
        c: &CharExponents,
        chain: &ResolutionChain,
        conductor: u64,
        tau_min: u64,
        dg_bound: u64,
    ) -> Self {
        TopoReport {
            schema_version: SCHEMA_VERSION.to_string(),
            command,
            exponents: strings(c.beta()),
            gcd_chain: strings(c.gcd_chain()),
            stages: chain.stages.iter().map(StageReport::from).collect(),
            mu: chain.mu.to_string(),
            conductor: conductor.to_string(),
            tau_min: tau_min.to_string(),
            dg_bound: dg_bound.to_string(),
            strict_inequality: 4 * u128::from(tau_min) > 3 * u128::from(chain.mu),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormReport {
    pub a: String,
    pub b: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagnosticReport {
    pub gcd_b_fy: String,
    pub gcd_b_cofactor: String,
    pub trivial: bool,
}

fn valuation(v: Valuation) -> String {
    v.to_string()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaitoReport {
    pub omega1: FormReport,
    pub omega2: FormReport,
    pub is_basis: bool,
    pub unit: String,
    pub unit_at_origin: String,
    pub epsilon: String,
    pub nu1: String,
    pub nu2: String,
    pub good_basis: bool,
    pub g1: String,
    pub g2: String,
    pub i1: String,
    pub i2: String,
    pub curve_index: String,
    /// Whether `curve_index` is the index of the curve or only an upper bound.
    pub curve_index_exact: bool,
    pub strict_transform: String,
    pub mu_tilde: String,
    pub tau_tilde: String,
    pub lhs: String,
    pub igg: String,
    pub rhs: Option<String>,
    pub formula_holds: bool,
    pub diagnostics: Vec<DiagnosticReport>,
}

impl SaitoReport {
    pub fn new(omega1: FormReport, omega2: FormReport, r: &InvariantReport) -> Self {
        SaitoReport {
            omega1,
            omega2,
            is_basis: r.check.is_basis,
            unit: r.check.unit.to_string(),
            unit_at_origin: r.check.unit_at_origin.to_string(),
            epsilon: r.epsilon.to_string(),
            nu1: r.nu1.to_string(),
            nu2: r.nu2.to_string(),
            good_basis: r.good_basis,
            g1: r.g1.to_string(),
            g2: r.g2.to_string(),
            i1: valuation(r.i1),
            i2: valuation(r.i2),
            curve_index: valuation(r.curve_index),
            curve_index_exact: r.curve_index_is_exact(),
            strict_transform: r.strict_transform.to_string(),
            mu_tilde: r.mu_tilde.to_string(),
            tau_tilde: r.tau_tilde.to_string(),
            lhs: r.lhs.to_string(),
            igg: valuation(r.igg),
            rhs: r.rhs.map(|v| v.to_string()),
            formula_holds: r.formula_holds,
            diagnostics: r
                .diagnostics
                .iter()
                .map(|d| DiagnosticReport {
                    gcd_b_fy: d.gcd_b_fy.to_string(),
                    gcd_b_cofactor: d.gcd_b_cofactor.to_string(),
                    trivial: d.all_trivial(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema_version: String,
    pub command: CommandEcho,
    pub f: String,
    pub nu: String,
    pub multiplicity_sequence: Option<Vec<String>>,
    pub mu: String,
    pub tau: String,
    pub saito: Option<SaitoReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub exponents: Vec<String>,
    pub multiplicities: Vec<String>,
    pub mu: String,
    pub tau_min: String,
    pub dg_bound: String,
    pub slack: String,
    pub sum_nu_minus_one: String,
    pub identity_rhs: String,
    pub failed: Vec<String>,
}

impl From<&ClassCheck> for ClassReport {
    fn from(c: &ClassCheck) -> Self {
        ClassReport {
            exponents: strings(c.exponents.beta()),
            multiplicities: strings(&c.multiplicities),
            mu: c.mu.to_string(),
            tau_min: c.tau_min.to_string(),
            dg_bound: c.dg_bound.to_string(),
            slack: c.slack.to_string(),
            sum_nu_minus_one: c.sum_nu_minus_one.to_string(),
            identity_rhs: c.identity_rhs.to_string(),
            failed: c.failed.iter().map(|k| k.name().to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassError {
    pub exponents: Vec<String>,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanBoundsReport {
    pub max_beta0: String,
    pub max_beta1: String,
    pub max_pairs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanJson {
    pub schema_version: String,
    pub command: CommandEcho,
    pub bounds: ScanBoundsReport,
    pub class_count: String,
    pub violation_count: String,
    pub violations: Vec<ClassReport>,
    pub errors: Vec<ClassError>,
    pub min_slack_witness: Option<ClassReport>,
    pub min_dg_witness: Option<ClassReport>,
    /// Every class, only when listing was requested.
    pub classes: Option<Vec<ClassReport>>,
    pub elapsed_ms: String,
}

impl ScanJson {
    pub fn new(command: CommandEcho, r: &ScanReport, list: bool, elapsed_ms: u128) -> Self {
        ScanJson {
            schema_version: SCHEMA_VERSION.to_string(),
            command,
            bounds: ScanBoundsReport {
                max_beta0: r.bounds.max_beta0.to_string(),
                max_beta1: r.bounds.max_beta1.to_string(),
                max_pairs: r.bounds.max_pairs.to_string(),
            },
            class_count: r.classes.len().to_string(),
            violation_count: r.violation_count().to_string(),
            violations: r.violations().map(ClassReport::from).collect(),
            errors: r
                .errors
                .iter()
                .map(|(c, e)| ClassError {
                    exponents: strings(c.beta()),
                    message: e.to_string(),
                })
                .collect(),
            min_slack_witness: r.min_slack_witness().map(ClassReport::from),
            min_dg_witness: r.min_dg_witness().map(ClassReport::from),
            classes: list.then(|| r.classes.iter().map(ClassReport::from).collect()),
            elapsed_ms: elapsed_ms.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub schema_version: String,
    pub command: CommandEcho,
    pub mu: String,
    pub dg_bound: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub schema_version: String,
    pub command: CommandEcho,
    pub exit_code: i32,
    pub kind: String,
    pub message: String,
}
