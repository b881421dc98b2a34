//! Local algebra at the origin: colengths of ideals, Milnor and Tjurina
//! numbers, intersection multiplicities, tangent cones and strict transforms.
//!
//! Colengths are computed on truncations. For a degree bound `D` the ideal
//! `I` is replaced by its image `V_D` in `Q[x,y]/m^D`, spanned by the
//! products `x^a y^b g` truncated below degree `D`. If every monomial of
//! degree `D-1` lies in `V_D` then `m^{D-1} ⊆ I + m^D`, and Nakayama gives
//! `m^{D-1} ⊆ I`; from that point on the truncated codimension is the true
//! colength.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::linalg::{Echelon, SparseRow};
use crate::poly::{Poly, Rational, Valuation};

/// Largest truncation degree tried before giving up.
pub const DEFAULT_CAP: u32 = 512;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LocalError {
    #[error("the generator list is empty")]
    EmptyIdeal,
    #[error("all generators are zero")]
    ZeroIdeal,
    #[error("the zero polynomial does not define a curve")]
    ZeroCurve,
    #[error("the curve does not pass through the origin (f(0,0) = {0})")]
    NotThroughOrigin(Rational),
    #[error("non-isolated singularity: {gcd} is a multiple component through the origin")]
    NonIsolated { gcd: Poly },
    #[error("colength not certified below truncation degree {cap}")]
    CapExceeded { cap: u32 },
    #[error("tangent cone {jet} is not a power of a single line y + e*x with rational e")]
    NotSingleLine { jet: Poly },
}

/// Tangent cone `(y + epsilon*x)^nu` of a branch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentLine {
    pub epsilon: Rational,
    pub nu: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColengthValue {
    Finite(u64),
    /// The generators share a component through the origin.
    Infinite,
    /// No certificate was found up to the cap.
    ExceedsCap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColengthResult {
    pub value: ColengthValue,
    /// Truncation degree at which the Nakayama certificate fired (or the last
    /// degree tried when the cap was hit; zero when infinity was detected by
    /// the gcd test).
    pub certified_degree: u32,
    pub cap: u32,
}

impl ColengthResult {
    pub fn finite(&self) -> Option<u64> {
        match self.value {
            ColengthValue::Finite(v) => Some(v),
            _ => None,
        }
    }
}

/// Codimension of `V_D` and whether the Nakayama certificate holds at `D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Truncation {
    pub degree: u32,
    pub codim: u64,
    pub certified: bool,
}

fn monomials_below(d: u32) -> usize {
    let d = d as usize;
    d * (d + 1) / 2
}

/// Column of `x^a y^b` when monomials are listed by degree, lowest first.
fn column(a: u32, b: u32) -> usize {
    monomials_below(a + b) + b as usize
}

/// Builds `V_D` for the given generators and reports its codimension in
/// `Q[x,y]/m^D` together with the certificate test.
pub fn truncated_colength(gens: &[Poly], d: u32) -> Truncation {
    let ncols = monomials_below(d);
    let mut echelon = Echelon::new(ncols);
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let ord = g.order_u32().expect("nonzero");
        if ord >= d {
            continue;
        }
        let terms = g.integer_terms();
        for s in 0..d - ord {
            for b in 0..=s {
                let a = s - b;
                let mut row: SparseRow = terms
                    .iter()
                    .filter(|&&((i, j), _)| i + j + s < d)
                    .map(|&((i, j), ref c)| (column(i + a, j + b), c.clone()))
                    .collect();
                row.sort_unstable_by_key(|e| e.0);
                echelon.insert(row);
            }
        }
    }
    let top = monomials_below(d.saturating_sub(1))..ncols;
    Truncation {
        degree: d,
        codim: (ncols - echelon.rank()) as u64,
        certified: echelon.pivots_in(top) == d as usize,
    }
}

/// Polynomial gcd of a list; it vanishes at the origin exactly when the
/// generators share a curve component through the origin.
fn common_factor(gens: &[Poly]) -> Poly {
    gens.iter().fold(Poly::zero(), |acc, g| acc.gcd(g))
}

/// Whether one of the first two truncations of the colength schedule already
/// certifies a finite colength, which rules out a common component.
fn quick_certificate(gens: &[Poly], cap: u32) -> bool {
    let Some(o) = gens.iter().filter_map(Poly::order_u32).min() else {
        return false;
    };
    let d0 = (2 * o + 2).min(cap);
    truncated_colength(gens, d0).certified
        || (d0 < cap && truncated_colength(gens, (2 * d0).min(cap)).certified)
}

fn vanishes_at_origin(p: &Poly) -> bool {
    p.constant_term().is_zero()
}

/// Configured entry point for the colength-based invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalEngine {
    cap: u32,
}

impl Default for LocalEngine {
    fn default() -> Self {
        LocalEngine { cap: DEFAULT_CAP }
    }
}

impl LocalEngine {
    pub fn new(cap: u32) -> Self {
        LocalEngine { cap: cap.max(2) }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// Dimension of `Q{x,y}/(gens)`.
    pub fn colength(&self, gens: &[Poly]) -> Result<ColengthResult, LocalError> {
        if gens.is_empty() {
            return Err(LocalError::EmptyIdeal);
        }
        let min_order = gens
            .iter()
            .filter_map(Poly::order_u32)
            .min()
            .ok_or(LocalError::ZeroIdeal)?;
        let mut d = 2 * min_order + 2;
        let mut attempts = 0;
        loop {
            attempts += 1;
            let degree = d.min(self.cap);
            let t = truncated_colength(gens, degree);
            if t.certified {
                return Ok(ColengthResult {
                    value: ColengthValue::Finite(t.codim),
                    certified_degree: degree,
                    cap: self.cap,
                });
            }
            // The gcd is comparatively expensive, so it is only consulted
            // once the first two truncations have failed to certify.
            let last = degree >= self.cap;
            if (attempts == 2 || (last && attempts < 2)) && vanishes_at_origin(&common_factor(gens))
            {
                return Ok(ColengthResult {
                    value: ColengthValue::Infinite,
                    certified_degree: 0,
                    cap: self.cap,
                });
            }
            if last {
                return Ok(ColengthResult {
                    value: ColengthValue::ExceedsCap,
                    certified_degree: degree,
                    cap: self.cap,
                });
            }
            d = degree.saturating_mul(2);
        }
    }

    fn check_curve(f: &Poly) -> Result<(), LocalError> {
        if f.is_zero() {
            return Err(LocalError::ZeroCurve);
        }
        let c = f.constant_term();
        if !c.is_zero() {
            return Err(LocalError::NotThroughOrigin(c));
        }
        Ok(())
    }

    /// Whether `f` has an isolated singularity at the origin, i.e. no
    /// repeated component through it. Equivalent to finiteness of
    /// `colength([f, f_x, f_y])`.
    pub fn is_isolated(&self, f: &Poly) -> Result<bool, LocalError> {
        Self::check_curve(f)?;
        let gens = [f.clone(), f.dx(), f.dy()];
        if quick_certificate(&gens, self.cap) {
            return Ok(true);
        }
        Ok(!vanishes_at_origin(&common_factor(&gens)))
    }

    /// Like [`LocalEngine::is_isolated`], but reports the offending
    /// multiple component.
    pub fn require_isolated(&self, f: &Poly) -> Result<(), LocalError> {
        Self::check_curve(f)?;
        let gens = [f.clone(), f.dx(), f.dy()];
        if quick_certificate(&gens, self.cap) {
            return Ok(());
        }
        let g = common_factor(&gens);
        if vanishes_at_origin(&g) {
            return Err(LocalError::NonIsolated { gcd: g });
        }
        Ok(())
    }

    fn finite_colength(&self, gens: &[Poly], f: &Poly) -> Result<u64, LocalError> {
        let r = self.colength(gens)?;
        match r.value {
            ColengthValue::Finite(v) => Ok(v),
            ColengthValue::Infinite => Err(LocalError::NonIsolated {
                gcd: common_factor(&[f.clone(), f.dx(), f.dy()]),
            }),
            ColengthValue::ExceedsCap => Err(LocalError::CapExceeded { cap: self.cap }),
        }
    }

    pub fn milnor(&self, f: &Poly) -> Result<u64, LocalError> {
        self.require_isolated(f)?;
        self.finite_colength(&[f.dx(), f.dy()], f)
    }

    pub fn tjurina(&self, f: &Poly) -> Result<u64, LocalError> {
        self.require_isolated(f)?;
        self.finite_colength(&[f.clone(), f.dx(), f.dy()], f)
    }

    /// `I(g, h)`; infinite when `g` and `h` share a component through the
    /// origin (including when either is zero and the other vanishes there).
    pub fn intersection_multiplicity(&self, g: &Poly, h: &Poly) -> Result<Valuation, LocalError> {
        if g.is_zero() && h.is_zero() {
            return Ok(Valuation::Infinite);
        }
        let r = self.colength(&[g.clone(), h.clone()])?;
        match r.value {
            ColengthValue::Finite(v) => Ok(Valuation::Finite(v)),
            ColengthValue::Infinite => Ok(Valuation::Infinite),
            ColengthValue::ExceedsCap => Err(LocalError::CapExceeded { cap: self.cap }),
        }
    }
}

/// Tangent cone of `f` as `(y + epsilon*x)^nu`.
pub fn tangent_line(f: &Poly) -> Result<TangentLine, LocalError> {
    LocalEngine::check_curve(f)?;
    let jet = f.initial_form();
    let nu = jet.order_u32().expect("nonzero");
    let c = jet.coeff(0, nu);
    if c.is_zero() {
        return Err(LocalError::NotSingleLine { jet });
    }
    let epsilon = jet.coeff(1, nu - 1) / (&c * Rational::from_integer(BigInt::from(nu)));
    let line = &Poly::y() + &Poly::x().scale(&epsilon);
    if line.pow(nu).scale(&c) != jet {
        return Err(LocalError::NotSingleLine { jet });
    }
    Ok(TangentLine { epsilon, nu })
}

/// Strict transform in the chart `(x, y) -> (x, x*y)`, recentred so that the
/// point `(0, -epsilon)` on the exceptional divisor becomes the origin.
pub fn strict_transform(f: &Poly) -> Result<(Poly, TangentLine), LocalError> {
    let line = tangent_line(f)?;
    let pulled = f.substitute(&Poly::x(), &(&Poly::x() * &Poly::y()));
    let transform = pulled
        .exact_divide(&Poly::x().pow(line.nu))
        .expect("x^nu divides the pullback when nu is the order");
    let shift = &Poly::y() - &Poly::constant(line.epsilon.clone());
    Ok((transform.substitute(&Poly::x(), &shift), line))
}

/// Multiplicities of the successive strict transforms until the curve is
/// smooth. When the tangent is the line `x = 0` the coordinates are swapped
/// before blowing up.
pub fn multiplicity_sequence(f: &Poly) -> Result<Vec<u32>, LocalError> {
    let mut cur = f.clone();
    let mut seq = Vec::new();
    loop {
        LocalEngine::check_curve(&cur)?;
        let nu = cur.order_u32().expect("nonzero");
        if nu <= 1 {
            return Ok(seq);
        }
        seq.push(nu);
        let jet = cur.initial_form();
        if jet.coeff(0, nu).is_zero() && jet == Poly::monomial(jet.coeff(nu, 0), nu, 0) {
            cur = cur.swap_xy();
        }
        cur = strict_transform(&cur)?.0;
    }
}

/// Exact evaluation helper used by diagnostics: whether `p(0,0) != 0`.
pub fn is_unit(p: &Poly) -> bool {
    !p.constant_term().is_zero()
}

impl TangentLine {
    /// The line `y + epsilon*x` as a polynomial.
    pub fn linear_form(&self) -> Poly {
        &Poly::y() + &Poly::x().scale(&self.epsilon)
    }

    pub fn is_horizontal(&self) -> bool {
        self.epsilon.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::p;
    use num_traits::One;

    fn engine() -> LocalEngine {
        LocalEngine::default()
    }

    fn colength(gens: &[&str]) -> ColengthResult {
        let gens: Vec<Poly> = gens.iter().map(|s| p(s)).collect();
        engine().colength(&gens).unwrap()
    }

    #[test]
    fn maximal_ideal() {
        assert_eq!(colength(&["x", "y"]).value, ColengthValue::Finite(1));
    }

    #[test]
    fn monomial_staircase() {
        let r = colength(&["x^2", "y^3"]);
        assert_eq!(r.value, ColengthValue::Finite(6));
        assert_eq!(r.certified_degree, 6);
    }

    #[test]
    fn unit_ideal_has_colength_zero() {
        assert_eq!(colength(&["6", "0"]).value, ColengthValue::Finite(0));
        assert_eq!(colength(&["1 + x"]).value, ColengthValue::Finite(0));
    }

    #[test]
    fn cofactors_of_the_56_curve() {
        assert_eq!(
            colength(&["-30*x - 8*x*y^4", "-30*y - 12*x^2*y^2"]).value,
            ColengthValue::Finite(1)
        );
    }

    #[test]
    fn common_component_is_infinite() {
        assert_eq!(colength(&["x*y", "x^2"]).value, ColengthValue::Infinite);
    }

    #[test]
    fn empty_and_zero_ideals() {
        assert_eq!(engine().colength(&[]), Err(LocalError::EmptyIdeal));
        assert_eq!(
            engine().colength(&[Poly::zero()]),
            Err(LocalError::ZeroIdeal)
        );
    }

    #[test]
    fn cap_is_respected() {
        let tiny = LocalEngine::new(3);
        let r = tiny.colength(&[p("x^5"), p("y^5")]).unwrap();
        assert_eq!(r.value, ColengthValue::ExceedsCap);
        assert_eq!(r.certified_degree, 3);
    }

    #[test]
    fn cusp_invariants() {
        let f = p("y^2 - x^3");
        assert_eq!(engine().milnor(&f), Ok(2));
        assert_eq!(engine().tjurina(&f), Ok(2));
    }

    #[test]
    fn isolation() {
        assert_eq!(engine().is_isolated(&p("y^2 - x^3")), Ok(true));
        assert_eq!(engine().is_isolated(&p("(y^2 - x^3)^2")), Ok(false));
        assert_eq!(engine().is_isolated(&p("x*y*(x + y)")), Ok(true));
        assert!(matches!(
            engine().is_isolated(&p("1 + x")),
            Err(LocalError::NotThroughOrigin(_))
        ));
        assert!(matches!(
            engine().milnor(&p("(y^2 - x^3)^2")),
            Err(LocalError::NonIsolated { .. })
        ));
    }

    #[test]
    fn intersections() {
        assert_eq!(
            engine().intersection_multiplicity(&p("x"), &p("y")),
            Ok(Valuation::Finite(1))
        );
        assert_eq!(
            engine().intersection_multiplicity(&p("x*(y - x)"), &p("x*y")),
            Ok(Valuation::Infinite)
        );
        assert_eq!(
            engine().intersection_multiplicity(&p("y^2 - x^3"), &Poly::zero()),
            Ok(Valuation::Infinite)
        );
    }

    #[test]
    fn tangent_lines() {
        let t = tangent_line(&p("y^5 - x^6 + x^4*y^3")).unwrap();
        assert_eq!((t.epsilon.clone(), t.nu), (Rational::zero(), 5));
        let t = tangent_line(&p("(y + x)^5 - x^11 + x^6*(y + x)^3")).unwrap();
        assert_eq!((t.epsilon, t.nu), (Rational::one(), 5));
        assert!(matches!(
            tangent_line(&p("x*y")),
            Err(LocalError::NotSingleLine { .. })
        ));
        assert!(matches!(
            tangent_line(&p("x^2 - y^3")),
            Err(LocalError::NotSingleLine { .. })
        ));
    }

    #[test]
    fn strict_transforms() {
        assert_eq!(strict_transform(&p("y^2 - x^3")).unwrap().0, p("y^2 - x"));
        assert_eq!(
            strict_transform(&p("y^5 - x^11 + x^6*y^3")).unwrap().0,
            p("y^5 - x^6 + x^4*y^3")
        );
        let (t, _) = strict_transform(&p("y^7 - x^8 - 7*x^6*y^2 - 147/8*x^4*y^4")).unwrap();
        assert_eq!(t.order(), Valuation::Finite(1));
    }

    #[test]
    fn strict_transform_recentres_a_slanted_tangent() {
        let f = p("(y + x)^5 - x^11 + x^6*(y + x)^3");
        let (t, line) = strict_transform(&f).unwrap();
        assert_eq!(line.epsilon, Rational::one());
        assert_eq!(t, p("y^5 - x^6 + x^4*y^3"));
    }

    #[test]
    fn sequences_with_coordinate_swap() {
        assert_eq!(multiplicity_sequence(&p("y^3 - x^5")).unwrap(), vec![3, 2]);
        assert_eq!(
            multiplicity_sequence(&p("y^5 - x^11 + x^6*y^3")).unwrap(),
            vec![5, 5]
        );
    }
}
