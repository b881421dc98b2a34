//! Saito bases of logarithmic 1-forms along a plane branch.
//!
//! A pair `{w1, w2}` of forms `w = A dx + B dy` is a Saito basis for the
//! curve `f = 0` when `w1 ^ w2 = u f dx ^ dy` with `u(0,0) != 0`. Each
//! logarithmic form has a cofactor `g` with `A f_y - B f_x = g f`, and the
//! Tjurina defect of the curve is `mu - tau = I(g1, g2)`.
//!
//! [`verify_report`] evaluates every invariant entering the blow-up formula
//!
//! ```text
//! mu - tau = mu~ - tau~ + (nu1 - 1)(nu2 - 1) + i(S) - 1
//! ```
//!
//! which is guaranteed when the basis is good (`nu1 + nu2 = nu`). Membership
//! of a form in the logarithmic module is only certified through exact
//! polynomial division.

use num_traits::Zero;
use thiserror::Error;

use crate::local::{strict_transform, tangent_line, LocalEngine, LocalError};
use crate::poly::{Poly, Rational, Valuation};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SaitoError {
    #[error("the zero polynomial does not define a curve")]
    ZeroCurve,
    #[error("a 1-form needs at least one nonzero coefficient")]
    ZeroForm,
    #[error("f does not divide w ^ df for form {which}: not a logarithmic form")]
    NotInvariant { which: usize },
    #[error("not a Saito basis: w1 ^ w2 is not a unit multiple of f")]
    NotSaitoBasis(Box<SaitoCheck>),
    #[error(transparent)]
    Local(#[from] LocalError),
}

/// The form `A dx + B dy`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneForm {
    a: Poly,
    b: Poly,
}

impl OneForm {
    pub fn new(a: Poly, b: Poly) -> Result<Self, SaitoError> {
        if a.is_zero() && b.is_zero() {
            return Err(SaitoError::ZeroForm);
        }
        Ok(OneForm { a, b })
    }

    /// `df = f_x dx + f_y dy`.
    pub fn differential(f: &Poly) -> Result<Self, SaitoError> {
        OneForm::new(f.dx(), f.dy())
    }

    pub fn a(&self) -> &Poly {
        &self.a
    }

    pub fn b(&self) -> &Poly {
        &self.b
    }

    /// Algebraic multiplicity `min(ord A, ord B)`.
    pub fn order(&self) -> u32 {
        form_order(self)
    }
}

pub fn form_order(w: &OneForm) -> u32 {
    w.a.order_u32()
        .into_iter()
        .chain(w.b.order_u32())
        .min()
        .expect("a OneForm is never zero")
}

/// Coefficient of `dx ^ dy` in `w1 ^ w2`, that is `A1 B2 - A2 B1`.
pub fn wedge_coefficient(w1: &OneForm, w2: &OneForm) -> Poly {
    &(&w1.a * &w2.b) - &(&w2.a * &w1.b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaitoCheck {
    pub is_basis: bool,
    pub divisible: bool,
    /// `u = (w1 ^ w2) / f` when the division is exact, zero otherwise.
    pub unit: Poly,
    pub unit_at_origin: Rational,
}

pub fn check_saito_basis(f: &Poly, w1: &OneForm, w2: &OneForm) -> Result<SaitoCheck, SaitoError> {
    if f.is_zero() {
        return Err(SaitoError::ZeroCurve);
    }
    let wedge = wedge_coefficient(w1, w2);
    let (divisible, unit) = match wedge.exact_divide(f) {
        Ok(u) => (true, u),
        Err(_) => (false, Poly::zero()),
    };
    let unit_at_origin = unit.constant_term();
    Ok(SaitoCheck {
        is_basis: divisible && !unit_at_origin.is_zero(),
        divisible,
        unit,
        unit_at_origin,
    })
}

/// The cofactor `g` with `A f_y - B f_x = g f`.
pub fn cofactor(f: &Poly, w: &OneForm) -> Result<Poly, SaitoError> {
    cofactor_of(f, w, 1)
}

fn cofactor_of(f: &Poly, w: &OneForm, which: usize) -> Result<Poly, SaitoError> {
    if f.is_zero() {
        return Err(SaitoError::ZeroCurve);
    }
    let contact = &(&w.a * &f.dy()) - &(&w.b * &f.dx());
    contact
        .exact_divide(f)
        .map_err(|_| SaitoError::NotInvariant { which })
}

/// Index of `w` along the tangent direction of `f`: the multiplicity at
/// `t = -epsilon` of `A_k(1, t) + t B_k(1, t)` with `k = ord(w)`. Infinite
/// exactly for dicritical forms.
pub fn index(f: &Poly, w: &OneForm) -> Result<Valuation, SaitoError> {
    let line = tangent_line(f)?;
    Ok(index_along(&line.epsilon, w))
}

fn index_along(epsilon: &Rational, w: &OneForm) -> Valuation {
    let k = form_order(w);
    let restricted =
        w.a.restrict_to_line(k)
            .add(&w.b.restrict_to_line(k).shift(1));
    restricted.root_multiplicity(&-epsilon.clone())
}

/// Common factors checked by the intersection lemma for one basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdDiagnostic {
    pub gcd_b_fy: Poly,
    pub gcd_b_cofactor: Poly,
}

impl GcdDiagnostic {
    pub fn all_trivial(&self) -> bool {
        self.gcd_b_fy.is_constant() && self.gcd_b_cofactor.is_constant()
    }
}

/// Every invariant of a curve together with a Saito basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub check: SaitoCheck,
    pub epsilon: Rational,
    pub nu: u32,
    pub nu1: u32,
    pub nu2: u32,
    pub good_basis: bool,
    pub g1: Poly,
    pub g2: Poly,
    pub mu: u64,
    pub tau: u64,
    pub i1: Valuation,
    pub i2: Valuation,
    /// `min(i1, i2)`. Equal to the curve index when the basis is good;
    /// otherwise only an upper bound for it.
    pub curve_index: Valuation,
    pub strict_transform: Poly,
    pub mu_tilde: u64,
    pub tau_tilde: u64,
    /// `mu - tau`.
    pub lhs: i64,
    /// `I(g1, g2)`.
    pub igg: Valuation,
    /// `mu~ - tau~ + (nu1 - 1)(nu2 - 1) + i - 1`; absent if both forms are
    /// dicritical.
    pub rhs: Option<i64>,
    pub formula_holds: bool,
    pub diagnostics: [GcdDiagnostic; 2],
}

impl InvariantReport {
    pub fn curve_index_is_exact(&self) -> bool {
        self.good_basis
    }

    /// `mu - tau = I(g1, g2)`.
    pub fn defect_matches_cofactors(&self) -> bool {
        u64::try_from(self.lhs).ok().map(Valuation::Finite) == Some(self.igg)
    }
}

fn as_i64(v: u64) -> i64 {
    i64::try_from(v).expect("invariant fits in i64")
}

/// Milnor and Tjurina numbers of a strict transform, zero when it is smooth.
fn transform_invariants(engine: &LocalEngine, t: &Poly) -> Result<(u64, u64), LocalError> {
    if t.order_u32().is_some_and(|o| o <= 1) {
        return Ok((0, 0));
    }
    let (mu, tau) = rayon::join(|| engine.milnor(t), || engine.tjurina(t));
    Ok((mu?, tau?))
}

pub fn verify_report(
    engine: &LocalEngine,
    f: &Poly,
    w1: &OneForm,
    w2: &OneForm,
) -> Result<InvariantReport, SaitoError> {
    let check = check_saito_basis(f, w1, w2)?;
    if !check.is_basis {
        return Err(SaitoError::NotSaitoBasis(Box::new(check)));
    }
    engine.require_isolated(f)?;
    let line = tangent_line(f)?;
    let nu = line.nu;
    let (nu1, nu2) = (form_order(w1), form_order(w2));
    let g1 = cofactor_of(f, w1, 1)?;
    let g2 = cofactor_of(f, w2, 2)?;
    let (transform, _) = strict_transform(f)?;

    let ((mu, tau), (tilde, igg)) = rayon::join(
        || rayon::join(|| engine.milnor(f), || engine.tjurina(f)),
        || {
            rayon::join(
                || transform_invariants(engine, &transform),
                || engine.intersection_multiplicity(&g1, &g2),
            )
        },
    );
    let (mu, tau, (mu_tilde, tau_tilde), igg) = (mu?, tau?, tilde?, igg?);

    let i1 = index_along(&line.epsilon, w1);
    let i2 = index_along(&line.epsilon, w2);
    let curve_index = i1.min(i2);
    let lhs = as_i64(mu) - as_i64(tau);
    let rhs = curve_index.finite().map(|i| {
        as_i64(mu_tilde) - as_i64(tau_tilde)
            + (i64::from(nu1) - 1) * (i64::from(nu2) - 1)
            + as_i64(i)
            - 1
    });

    let fy = f.dy();
    let diag = |w: &OneForm, g: &Poly| GcdDiagnostic {
        gcd_b_fy: w.b.gcd(&fy),
        gcd_b_cofactor: w.b.gcd(g),
    };
    let diagnostics = [diag(w1, &g1), diag(w2, &g2)];

    Ok(InvariantReport {
        check,
        epsilon: line.epsilon,
        nu,
        nu1,
        nu2,
        good_basis: nu1 + nu2 == nu,
        g1,
        g2,
        mu,
        tau,
        i1,
        i2,
        curve_index,
        strict_transform: transform,
        mu_tilde,
        tau_tilde,
        lhs,
        igg,
        formula_holds: rhs == Some(lhs),
        rhs,
        diagnostics,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::p;

    fn form(a: &str, b: &str) -> OneForm {
        OneForm::new(p(a), p(b)).unwrap()
    }

    #[test]
    fn orders_of_forms() {
        let w = form(
            "-6*x*y + 16/15*x^3*y^2 - 8/5*x*y^5",
            "5*x^2 + 4/3*y^3 + 4/5*x^2*y^4",
        );
        assert_eq!(form_order(&w), 2);
        let w = form("605*x^4*y + 150*x^5*y^2", "-(40*y^3 + 275*x^5 + 90*x^6*y)");
        assert_eq!(form_order(&w), 3);
        assert_eq!(form_order(&form("1", "0")), 0);
        assert_eq!(
            OneForm::new(Poly::zero(), Poly::zero()),
            Err(SaitoError::ZeroForm)
        );
    }

    #[test]
    fn self_wedge_vanishes() {
        let w = form("x^2 + y", "3*x*y");
        assert!(wedge_coefficient(&w, &w).is_zero());
    }

    #[test]
    fn differential_pair_is_not_a_basis() {
        let f = p("y^2 - x^3");
        let df = OneForm::differential(&f).unwrap();
        let c = check_saito_basis(&f, &df, &df).unwrap();
        assert!(!c.is_basis);
        assert!(c.divisible && c.unit.is_zero());
    }

    #[test]
    fn cusp_basis_and_cofactors() {
        let f = p("y^2 - x^3");
        let w1 = form("3*y", "-2*x");
        let df = OneForm::differential(&f).unwrap();
        let c = check_saito_basis(&f, &w1, &df).unwrap();
        assert!(c.is_basis);
        assert_eq!(c.unit, Poly::from_int(6));
        assert_eq!(cofactor(&f, &w1), Ok(Poly::from_int(6)));
        assert_eq!(cofactor(&f, &df), Ok(Poly::zero()));
    }

    #[test]
    fn non_logarithmic_form() {
        let f = p("y^2 - x^3");
        assert_eq!(
            cofactor(&f, &form("1", "0")),
            Err(SaitoError::NotInvariant { which: 1 })
        );
    }

    #[test]
    fn radial_form_is_dicritical() {
        let f = p("y^2 - x^3");
        assert_eq!(index(&f, &form("-y", "x")), Ok(Valuation::Infinite));
    }

    #[test]
    fn not_a_basis_is_an_error_in_reports() {
        let f = p("y^2 - x^3");
        let w = form("3*y", "-2*x");
        let err = verify_report(&LocalEngine::default(), &f, &w, &w).unwrap_err();
        assert!(matches!(err, SaitoError::NotSaitoBasis(_)));
    }
}
