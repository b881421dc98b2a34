//! Sparse bivariate polynomials over the rationals.
//!
//! A [`Poly`] is a finite map from exponent pairs `(a, b)` (the monomial
//! `x^a y^b`) to nonzero rational coefficients. Zero coefficients are never
//! stored, so structural equality is polynomial equality.

mod gcd;
mod parse;
mod univariate;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use parse::{parse_poly, ParseError};
pub use univariate::UniPoly;

/// Exact rational coefficient, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Exponent pair `(a, b)` of the monomial `x^a y^b`.
pub type Monomial = (u32, u32);

/// A natural number or infinity. Used for orders, root multiplicities,
/// indices and intersection multiplicities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// One of the two coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// Returned by [`Poly::exact_divide`] when the divisor does not divide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DivisionError {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("not divisible")]
    NotDivisible,
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

/// Graded lexicographic comparison with `x > y`.
fn grlex_cmp(m: &Monomial, n: &Monomial) -> std::cmp::Ordering {
    (m.0 + m.1, m.0).cmp(&(n.0 + n.1, n.0))
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::monomial(c, 0, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Poly::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Poly::monomial(Rational::one(), 0, 1)
    }

    /// `c * x^a * y^b`.
    pub fn monomial(c: Rational, a: u32, b: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        Poly { terms }
    }

    /// Builds a polynomial from `(a, b, coefficient)` triples, summing
    /// repeated monomials.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, Rational)>,
    {
        let mut p = Poly::zero();
        for (a, b, c) in terms {
            p.add_term((a, b), c);
        }
        p
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms(terms: &[(u32, u32, i64)]) -> Self {
        Poly::from_terms(
            terms
                .iter()
                .map(|&(a, b, c)| (a, b, Rational::from_integer(BigInt::from(c)))),
        )
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in storage order (lexicographic on `(a, b)`).
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &Rational)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    /// Terms sorted by descending graded-lex order, the printing order.
    pub fn terms_grlex(&self) -> Vec<(Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|p, q| grlex_cmp(&q.0, &p.0));
        v
    }

    pub fn coeff(&self, a: u32, b: u32) -> Rational {
        self.terms
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Value at the origin.
    pub fn constant_term(&self) -> Rational {
        self.coeff(0, 0)
    }

    /// Minimum total degree of a stored term; infinite for zero.
    pub fn order(&self) -> Valuation {
        self.terms
            .keys()
            .map(|&(a, b)| u64::from(a + b))
            .min()
            .map_or(Valuation::Infinite, Valuation::Finite)
    }

    /// Order as a plain integer, `None` for the zero polynomial.
    pub fn order_u32(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, b)| a + b).min()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, b)| a + b).max()
    }

    pub fn degree_in(&self, var: Var) -> Option<u32> {
        self.terms
            .keys()
            .map(|&(a, b)| match var {
                Var::X => a,
                Var::Y => b,
            })
            .max()
    }

    /// Leading term under graded-lex order with `x > y`.
    pub fn leading_term(&self) -> Option<(Monomial, &Rational)> {
        self.terms().max_by(|p, q| grlex_cmp(&p.0, &q.0))
    }

    pub fn homogeneous_component(&self, d: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(&(a, b), _)| a + b == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// The lowest-degree homogeneous part.
    pub fn initial_form(&self) -> Poly {
        match self.order_u32() {
            Some(d) => self.homogeneous_component(d),
            None => Poly::zero(),
        }
    }

    /// Drops every term of total degree `>= d`.
    pub fn truncate_below(&self, d: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(&(a, b), _)| a + b < d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Multiplies by the monomial `x^a y^b`.
    pub fn shift(&self, a: u32, b: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i + a, j + b), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn partial(&self, var: Var) -> Poly {
        let mut out = Poly::zero();
        for (&(a, b), c) in &self.terms {
            match var {
                Var::X if a > 0 => out.add_term((a - 1, b), c * Rational::from_integer(a.into())),
                Var::Y if b > 0 => out.add_term((a, b - 1), c * Rational::from_integer(b.into())),
                _ => {}
            }
        }
        out
    }

    pub fn dx(&self) -> Poly {
        self.partial(Var::X)
    }

    pub fn dy(&self) -> Poly {
        self.partial(Var::Y)
    }

    /// Exact quotient `self / d` by single-divisor reduction on graded-lex
    /// leading terms.
    pub fn exact_divide(&self, d: &Poly) -> Result<Poly, DivisionError> {
        let ((da, db), dc) = d.leading_term().ok_or(DivisionError::ZeroDivisor)?;
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quotient = Poly::zero();
        while let Some(((ra, rb), rc)) = rem.leading_term() {
            if ra < da || rb < db {
                return Err(DivisionError::NotDivisible);
            }
            let q = Poly::monomial(rc / &dc, ra - da, rb - db);
            rem = &rem - &(&q * d);
            quotient = &quotient + &q;
        }
        Ok(quotient)
    }

    pub fn divides(&self, p: &Poly) -> bool {
        p.exact_divide(self).is_ok()
    }

    /// Evaluates `self(sx, sy)` exactly.
    pub fn substitute(&self, sx: &Poly, sy: &Poly) -> Poly {
        let max_a = self.degree_in(Var::X).unwrap_or(0);
        let max_b = self.degree_in(Var::Y).unwrap_or(0);
        let powers = |s: &Poly, n: u32| {
            let mut v = Vec::with_capacity(n as usize + 1);
            v.push(Poly::one());
            for i in 1..=n as usize {
                let next = &v[i - 1] * s;
                v.push(next);
            }
            v
        };
        let px = powers(sx, max_a);
        let py = powers(sy, max_b);
        let mut out = Poly::zero();
        for (&(a, b), c) in &self.terms {
            let t = (&px[a as usize] * &py[b as usize]).scale(c);
            out = &out + &t;
        }
        out
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swap_xy(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((b, a), c.clone()))
                .collect(),
        }
    }

    /// The degree-`d` homogeneous component evaluated at `(1, t)`.
    pub fn restrict_to_line(&self, d: u32) -> UniPoly {
        let mut coeffs = vec![Rational::zero(); d as usize + 1];
        for (&(a, b), c) in &self.terms {
            if a + b == d {
                coeffs[b as usize] += c;
            }
        }
        UniPoly::new(coeffs)
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms
            .iter()
            .fold(Rational::zero(), |acc, (&(a, b), c)| {
                acc + c
                    * num_traits::pow(x.clone(), a as usize)
                    * num_traits::pow(y.clone(), b as usize)
            })
    }

    /// Least common multiple of all coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Coefficients scaled to integers by [`Poly::denominator_lcm`].
    pub fn integer_terms(&self) -> Vec<(Monomial, BigInt)> {
        let l = self.denominator_lcm();
        self.terms
            .iter()
            .map(|(m, c)| (*m, (c * Rational::from_integer(l.clone())).to_integer()))
            .collect()
    }

    /// Scales so that the graded-lex leading coefficient is one.
    pub fn monic(&self) -> Poly {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => Poly::zero(),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&m| m == (0, 0))
    }

    /// Greatest common divisor, normalised to be monic in graded-lex order.
    /// `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        gcd::gcd(self, other)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, a: u32, b: u32) -> fmt::Result {
    let mut first = true;
    for (name, e) in [("x", a), ("y", b)] {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((a, b), c)) in self.terms_grlex().into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if a + b == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, a, b)?;
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (&(a, b), c) in &self.terms {
            for (&(i, j), d) in &rhs.terms {
                out.add_term((a + i, b + j), c * d);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl std::str::FromStr for Poly {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

#[cfg(test)]
pub(crate) fn p(s: &str) -> Poly {
    parse_poly(s).unwrap()
}
