//! Exhaustive checks of the τ_min inequalities over bounded classes.

use num_integer::Integer;
use rayon::prelude::*;

use super::{
    conductor_crosscheck, dg_bound, milnor_from_sequence, resolution_chain, tau_min,
    validate_exponents, CharExponents, TopologyError,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanBounds {
    pub max_beta0: u64,
    /// Bound on every exponent after `β₀`.
    pub max_beta1: u64,
    pub max_pairs: usize,
}

/// The individual assertions made for each class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// `4τ_min > 3μ`.
    StrictInequality,
    /// `τ_min ≥ dg_bound(μ)`.
    DimcaGreuel,
    /// `4τ_min − 3μ ≥ Σ(ν − 1)`.
    SlackBound,
    /// `4τ_min − 3μ = Σ(ν + δ + 4(p₁ − 1))`, `δ = 0` for even `ν`, 3 for odd.
    ProofIdentity,
    /// Conductor formula agrees with the multiplicity sequence.
    Conductor,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::StrictInequality => "4*tau_min > 3*mu",
            Check::DimcaGreuel => "tau_min >= dg_bound(mu)",
            Check::SlackBound => "4*tau_min - 3*mu >= sum(nu - 1)",
            Check::ProofIdentity => "4*tau_min - 3*mu = sum(nu + delta + 4*(p1 - 1))",
            Check::Conductor => "conductor = sum nu*(nu - 1)",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCheck {
    pub exponents: CharExponents,
    pub multiplicities: Vec<u64>,
    pub mu: u64,
    pub tau_min: u64,
    pub dg_bound: u64,
    /// `4τ_min − 3μ`.
    pub slack: i64,
    pub sum_nu_minus_one: u64,
    pub identity_rhs: i64,
    pub failed: Vec<Check>,
}

impl ClassCheck {
    pub fn passed(&self) -> bool {
        self.failed.is_empty()
    }

    /// `4τ_min − 3μ − Σ(ν − 1)`.
    pub fn slack_margin(&self) -> i64 {
        self.slack - self.sum_nu_minus_one as i64
    }

    /// `τ_min − dg_bound(μ)`.
    pub fn dg_margin(&self) -> i64 {
        self.tau_min as i64 - self.dg_bound as i64
    }
}

#[derive(Clone, Debug)]
pub struct ScanReport {
    pub bounds: ScanBounds,
    /// All classes, sorted by exponent sequence.
    pub classes: Vec<ClassCheck>,
    /// Classes whose evaluation itself failed.
    pub errors: Vec<(CharExponents, TopologyError)>,
}

impl ScanReport {
    pub fn violations(&self) -> impl Iterator<Item = &ClassCheck> {
        self.classes.iter().filter(|c| !c.passed())
    }

    pub fn violation_count(&self) -> usize {
        self.violations().count() + self.errors.len()
    }

    /// Class with the smallest `4τ_min − 3μ − Σ(ν − 1)`; first in order on ties.
    pub fn min_slack_witness(&self) -> Option<&ClassCheck> {
        self.classes.iter().min_by_key(|c| c.slack_margin())
    }

    /// Class with the smallest `τ_min − dg_bound(μ)`; first in order on ties.
    pub fn min_dg_witness(&self) -> Option<&ClassCheck> {
        self.classes.iter().min_by_key(|c| c.dg_margin())
    }
}

/// Runs every check on a single class.
pub fn check_class(c: &CharExponents) -> Result<ClassCheck, TopologyError> {
    let chain = resolution_chain(c)?;
    let tau = tau_min(c)?;
    let multiplicities = chain.multiplicities();
    let mu = milnor_from_sequence(&multiplicities);
    let dg = dg_bound(mu);
    let slack = 4 * tau as i64 - 3 * mu as i64;
    let sum_nu_minus_one = multiplicities.iter().map(|v| v - 1).sum();
    let identity_rhs = chain
        .stages
        .iter()
        .map(|s| {
            let delta = if s.multiplicity.is_even() { 0 } else { 3 };
            s.multiplicity as i64 + delta + 4 * (s.p1 as i64 - 1)
        })
        .sum();

    let mut failed = Vec::new();
    if 4 * tau <= 3 * mu {
        failed.push(Check::StrictInequality);
    }
    if tau < dg {
        failed.push(Check::DimcaGreuel);
    }
    if slack < sum_nu_minus_one as i64 {
        failed.push(Check::SlackBound);
    }
    if slack != identity_rhs {
        failed.push(Check::ProofIdentity);
    }
    if conductor_crosscheck(c) != mu {
        failed.push(Check::Conductor);
    }
    Ok(ClassCheck {
        exponents: c.clone(),
        multiplicities,
        mu,
        tau_min: tau,
        dg_bound: dg,
        slack,
        sum_nu_minus_one,
        identity_rhs,
        failed,
    })
}

/// All singular classes with `2 ≤ β₀ ≤ max_beta0`, every later exponent at
/// most `max_beta1`, and at most `max_pairs` characteristic pairs, sorted.
pub fn enumerate_classes(bounds: ScanBounds) -> Vec<CharExponents> {
    fn extend(beta: &mut Vec<u64>, e: u64, bounds: &ScanBounds, out: &mut Vec<CharExponents>) {
        let last = *beta.last().expect("nonempty");
        for b in last + 1..=bounds.max_beta1 {
            let next = e.gcd(&b);
            if next == e {
                continue;
            }
            beta.push(b);
            if next == 1 {
                out.push(validate_exponents(beta).expect("enumerated exponents are valid"));
            } else if beta.len() <= bounds.max_pairs {
                extend(beta, next, bounds, out);
            }
            beta.pop();
        }
    }

    let mut out = Vec::new();
    for b0 in 2..=bounds.max_beta0 {
        extend(&mut vec![b0], b0, &bounds, &mut out);
    }
    out.sort();
    out
}

/// Enumerates and checks every class within `bounds` on the current rayon
/// pool. The report is independent of the number of workers.
pub fn scan_classes(bounds: ScanBounds) -> Result<ScanReport, TopologyError> {
    if bounds.max_beta0 < 2 || bounds.max_beta1 < 2 || bounds.max_pairs == 0 {
        return Err(TopologyError::InvalidBounds {
            max_beta0: bounds.max_beta0,
            max_beta1: bounds.max_beta1,
            max_pairs: bounds.max_pairs,
        });
    }
    let results: Vec<_> = enumerate_classes(bounds)
        .into_par_iter()
        .map(|c| check_class(&c).map_err(|e| (c, e)))
        .collect();
    let mut classes = Vec::with_capacity(results.len());
    let mut errors = Vec::new();
    for r in results {
        match r {
            Ok(c) => classes.push(c),
            Err(e) => errors.push(e),
        }
    }
    Ok(ScanReport {
        bounds,
        classes,
        errors,
    })
}
