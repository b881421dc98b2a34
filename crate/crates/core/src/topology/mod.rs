//! Topological invariants of an irreducible plane curve germ, computed from
//! its characteristic exponents `(β₀; β₁, …, β_s)`.
//!
//! The resolution is followed through the exponents alone: each blow-up maps
//! the exponent list of a singular branch to that of its strict transform,
//! and the multiplicities `ν₍ᵢ₎ = β₀` of the successive strict transforms give
//! `μ = Σ ν₍ᵢ₎(ν₍ᵢ₎ − 1)`. Every stage also contributes
//! `(ν₁ − 1)(ν₂ − 1) + 𝔦 − 1` to `μ − τ_min`, where `𝔦 = [β₀/2] + 1 − p₁` and
//! `p₁` is read off a table in `(β₀, β₁)`.

mod scan;

use std::fmt;

use num_integer::{Integer, Roots};

pub use scan::{
    check_class, enumerate_classes, scan_classes, Check, ClassCheck, ScanBounds, ScanReport,
};

/// Largest accepted exponent. Keeps every derived quantity well inside `u64`
/// and bounds the length of the resolution chain.
pub const MAX_EXPONENT: u64 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExponentRule {
    Empty,
    ZeroMultiplicity,
    NotIncreasing { position: usize },
    GcdNotDecreasing { position: usize },
    LastGcdNotOne { gcd: u64 },
    TooLarge { position: usize },
}

impl fmt::Display for ExponentRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExponentRule::Empty => write!(f, "exponent list is empty"),
            ExponentRule::ZeroMultiplicity => write!(f, "beta_0 must be at least 1"),
            ExponentRule::NotIncreasing { position } => {
                write!(
                    f,
                    "exponents not strictly increasing at position {position}"
                )
            }
            ExponentRule::GcdNotDecreasing { position } => {
                write!(
                    f,
                    "gcd chain not strictly decreasing at position {position}"
                )
            }
            ExponentRule::LastGcdNotOne { gcd } => write!(f, "last gcd e_s = {gcd} is not 1"),
            ExponentRule::TooLarge { position } => {
                write!(f, "exponent at position {position} exceeds {MAX_EXPONENT}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TopologyError {
    #[error("invalid characteristic exponents: {0}")]
    InvalidExponents(ExponentRule),
    #[error("the branch is smooth")]
    Smooth,
    #[error("({beta0}, {beta1}) is not a characteristic pair")]
    InvalidPair { beta0: u64, beta1: u64 },
    #[error("p1({beta0}, {beta1}) = {p1} exceeds [beta_0/2]")]
    IndexInconsistent { beta0: u64, beta1: u64, p1: u64 },
    #[error("closed-form tau_min {closed} differs from recursive value {recursive}")]
    ClosedFormMismatch { closed: i128, recursive: u64 },
    #[error(
        "scan bounds need max_beta0 >= 2, max_beta1 >= 2 and max_pairs >= 1 \
         (got {max_beta0}, {max_beta1}, {max_pairs})"
    )]
    InvalidBounds {
        max_beta0: u64,
        max_beta1: u64,
        max_pairs: usize,
    },
}

/// A validated exponent list together with its gcd chain `e₀ = β₀`,
/// `e_i = gcd(e_{i−1}, β_i)`. The smooth branch is `[1]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharExponents {
    beta: Vec<u64>,
    gcd_chain: Vec<u64>,
}

impl CharExponents {
    pub fn smooth() -> Self {
        CharExponents {
            beta: vec![1],
            gcd_chain: vec![1],
        }
    }

    pub fn beta(&self) -> &[u64] {
        &self.beta
    }

    pub fn gcd_chain(&self) -> &[u64] {
        &self.gcd_chain
    }

    pub fn multiplicity(&self) -> u64 {
        self.beta[0]
    }

    /// Number of characteristic pairs `s`.
    pub fn pairs(&self) -> usize {
        self.beta.len() - 1
    }

    pub fn is_smooth(&self) -> bool {
        self.beta[0] == 1
    }
}

impl fmt::Display for CharExponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.beta.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

pub fn validate_exponents(beta: &[u64]) -> Result<CharExponents, TopologyError> {
    let invalid = TopologyError::InvalidExponents;
    let Some(&b0) = beta.first() else {
        return Err(invalid(ExponentRule::Empty));
    };
    if b0 == 0 {
        return Err(invalid(ExponentRule::ZeroMultiplicity));
    }
    if let Some(position) = beta.iter().position(|&b| b > MAX_EXPONENT) {
        return Err(invalid(ExponentRule::TooLarge { position }));
    }
    let mut gcd_chain = vec![b0];
    for (position, w) in beta.windows(2).enumerate().map(|(i, w)| (i + 1, w)) {
        if w[1] <= w[0] {
            return Err(invalid(ExponentRule::NotIncreasing { position }));
        }
        let prev = *gcd_chain.last().expect("nonempty");
        let e = prev.gcd(&w[1]);
        if e >= prev {
            return Err(invalid(ExponentRule::GcdNotDecreasing { position }));
        }
        gcd_chain.push(e);
    }
    let last = *gcd_chain.last().expect("nonempty");
    if last != 1 {
        return Err(invalid(ExponentRule::LastGcdNotOne { gcd: last }));
    }
    Ok(CharExponents {
        beta: beta.to_vec(),
        gcd_chain,
    })
}

/// Exponents of the strict transform after one blow-up.
pub fn blowup_exponents(c: &CharExponents) -> Result<CharExponents, TopologyError> {
    if c.is_smooth() {
        return Err(TopologyError::Smooth);
    }
    let b = &c.beta;
    let (b0, b1) = (b[0], b[1]);
    let r = b1 - b0;
    let next: Vec<u64> = if b1 > 2 * b0 {
        std::iter::once(b0)
            .chain(b[1..].iter().map(|&x| x - b0))
            .collect()
    } else {
        let tail = b[2..].iter().map(|&x| x - b1 + b0);
        if b0 % r != 0 {
            [r, b0].into_iter().chain(tail).collect()
        } else {
            std::iter::once(r).chain(tail).collect()
        }
    };
    validate_exponents(&next)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionStage {
    pub exponents: CharExponents,
    pub multiplicity: u64,
    pub n: u64,
    pub p1: u64,
    pub curve_index: u64,
    pub nu1: u64,
    pub nu2: u64,
    pub contribution: u64,
}

impl ResolutionStage {
    fn new(exponents: CharExponents) -> Result<Self, TopologyError> {
        let (b0, b1) = (exponents.beta[0], exponents.beta[1]);
        let p1 = p1(b0, b1)?;
        let curve_index = stage_index(b0, b1)?;
        let nu1 = b0 / 2;
        let nu2 = b0 - nu1;
        Ok(ResolutionStage {
            multiplicity: b0,
            n: b1.div_ceil(b1 - b0),
            p1,
            curve_index,
            nu1,
            nu2,
            contribution: (nu1 - 1) * (nu2 - 1) + curve_index - 1,
            exponents,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionChain {
    pub stages: Vec<ResolutionStage>,
    pub mu: u64,
    pub tau_min: u64,
}

impl ResolutionChain {
    pub fn multiplicities(&self) -> Vec<u64> {
        self.stages.iter().map(|s| s.multiplicity).collect()
    }

    pub fn contributions(&self) -> Vec<u64> {
        self.stages.iter().map(|s| s.contribution).collect()
    }
}

/// Blows up until the branch is smooth, recording every singular stage.
pub fn resolution_chain(c: &CharExponents) -> Result<ResolutionChain, TopologyError> {
    if c.is_smooth() {
        return Err(TopologyError::Smooth);
    }
    let mut stages = Vec::new();
    let mut cur = c.clone();
    while !cur.is_smooth() {
        let next = blowup_exponents(&cur)?;
        stages.push(ResolutionStage::new(cur)?);
        cur = next;
    }
    let mu = milnor_from_sequence(&stages.iter().map(|s| s.multiplicity).collect::<Vec<_>>());
    let defect: u64 = stages.iter().map(|s| s.contribution).sum();
    Ok(ResolutionChain {
        stages,
        mu,
        tau_min: mu - defect,
    })
}

pub fn milnor_from_sequence(seq: &[u64]) -> u64 {
    seq.iter().map(|&v| v * (v - 1)).sum()
}

/// Milnor number from the conductor of the semigroup:
/// `μ = Σ (e_{i−1} − e_i) β_i − β₀ + 1`.
pub fn conductor_crosscheck(c: &CharExponents) -> u64 {
    let e = &c.gcd_chain;
    let sum: u64 = (1..c.beta.len())
        .map(|i| (e[i - 1] - e[i]) * c.beta[i])
        .sum();
    sum + 1 - c.beta[0]
}

fn check_pair(beta0: u64, beta1: u64) -> Result<(), TopologyError> {
    if beta0 < 2 || beta1 <= beta0 || beta1.is_multiple_of(beta0) {
        return Err(TopologyError::InvalidPair { beta0, beta1 });
    }
    Ok(())
}

/// The `p₁` table, with `n = ⌈β₁/(β₁ − β₀)⌉`. The `n = 2` row is consulted
/// before the parity rows.
pub fn p1(beta0: u64, beta1: u64) -> Result<u64, TopologyError> {
    check_pair(beta0, beta1)?;
    let n = beta1.div_ceil(beta1 - beta0);
    let b1_even = beta1.is_multiple_of(2);
    let n_even = n.is_multiple_of(2);
    let value = if beta0.is_multiple_of(2) {
        match () {
            _ if n == 2 => 1,
            _ if b1_even => 1,
            _ if !n_even => (n - 1) / 2,
            _ => (n - 2) / 2,
        }
    } else {
        match () {
            _ if n == 2 => 0,
            _ if !b1_even => 1,
            _ if !n_even => (n - 3) / 2,
            _ => (n - 2) / 2,
        }
    };
    Ok(value)
}

/// `𝔦 = [β₀/2] + 1 − p₁(β₀, β₁)`.
pub fn stage_index(beta0: u64, beta1: u64) -> Result<u64, TopologyError> {
    let p = p1(beta0, beta1)?;
    if p > beta0 / 2 {
        return Err(TopologyError::IndexInconsistent {
            beta0,
            beta1,
            p1: p,
        });
    }
    Ok(beta0 / 2 + 1 - p)
}

/// Closed form `Σ (ν² + [ν/2]([ν/2] − ν − 1) − 1 + p₁)` over the singular stages.
fn tau_min_closed_form(chain: &ResolutionChain) -> i128 {
    chain
        .stages
        .iter()
        .map(|s| {
            let v = s.multiplicity as i128;
            let h = v / 2;
            v * v + h * (h - v - 1) - 1 + s.p1 as i128
        })
        .sum()
}

/// Minimal Tjurina number of the class, evaluated both in closed form and by
/// the stage recursion; the two must agree.
pub fn tau_min(c: &CharExponents) -> Result<u64, TopologyError> {
    let chain = resolution_chain(c)?;
    let closed = tau_min_closed_form(&chain);
    if closed != chain.tau_min as i128 {
        return Err(TopologyError::ClosedFormMismatch {
            closed,
            recursive: chain.tau_min,
        });
    }
    Ok(chain.tau_min)
}

/// Smallest integer `t` with `t ≥ 3μ/4 + (√(1+4μ) − 1)/8`.
///
/// Equivalently `8t − 6μ + 1 ≥ √(1+4μ)`; the left side is an integer, so
/// this is `8t ≥ ⌈√(1+4μ)⌉ + 6μ − 1`.
pub fn dg_bound(mu: u64) -> u64 {
    let d = 1 + 4 * mu as u128;
    let mut s = d.sqrt();
    if s * s < d {
        s += 1;
    }
    let t = (s + 6 * mu as u128 - 1).div_ceil(8);
    debug_assert!({
        let lhs = 8 * t as i128 - 6 * mu as i128 + 1;
        lhs > 0 && (lhs * lhs) as u128 >= d
    });
    t as u64
}
