use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Rational, Valuation};

/// Dense integer coefficients, low degree first, no trailing zeros.
type IntCoeffs = Vec<BigInt>;

fn make_primitive(mut v: IntCoeffs) -> IntCoeffs {
    let mut g = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if v.last().is_some_and(Signed::is_negative) {
        g = -g;
    }
    if !g.is_zero() && !g.is_one() {
        for c in &mut v {
            *c /= &g;
        }
    }
    v
}

fn primitive_integer(p: &UniPoly) -> IntCoeffs {
    let lcm = p.coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    make_primitive(
        p.coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect(),
    )
}

/// `lc(b)^k a mod b` with exact integer arithmetic.
fn integer_prem(a: &IntCoeffs, b: &IntCoeffs) -> IntCoeffs {
    let lb = b.last().expect("nonzero divisor");
    let mut r = a.clone();
    while r.len() >= b.len() {
        let la = r.last().expect("nonempty").clone();
        let shift = r.len() - b.len();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, c) in b.iter().enumerate() {
            r[j + shift] -= &la * c;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

/// Dense univariate polynomial with rational coefficients, lowest degree
/// first. The leading coefficient is nonzero unless the polynomial is zero
/// (empty coefficient vector).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        UniPoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly::new(coeffs)
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] / &lc;
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[k - dd + j] -= &q * c;
            }
            quot[k - dd] = q;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.recip()),
            None => UniPoly::zero(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    /// Monic gcd. Runs a primitive pseudo-remainder sequence over the
    /// integers, which avoids the coefficient growth of Euclid over `Q`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let (mut a, mut b) = (primitive_integer(self), primitive_integer(other));
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while b.len() > 1 {
            let r = integer_prem(&a, &b);
            if r.is_empty() {
                break;
            }
            a = b;
            b = make_primitive(r);
        }
        if b.len() == 1 {
            return UniPoly::constant(Rational::one());
        }
        UniPoly::new(b.into_iter().map(Rational::from_integer).collect()).monic()
    }

    /// Multiplicity of `r` as a root, by repeated synthetic division by
    /// `t - r`. Infinite for the zero polynomial.
    pub fn root_multiplicity(&self, r: &Rational) -> Valuation {
        if self.is_zero() {
            return Valuation::Infinite;
        }
        let mut cur = self.coeffs.clone();
        let mut mult = 0;
        loop {
            // Horner: cur = (t - r) * q + rem
            let n = cur.len();
            let mut q = vec![Rational::zero(); n - 1];
            let mut acc = Rational::zero();
            for k in (0..n).rev() {
                acc = acc * r + &cur[k];
                if k > 0 {
                    q[k - 1] = acc.clone();
                }
            }
            if !acc.is_zero() || q.is_empty() {
                return Valuation::Finite(mult);
            }
            mult += 1;
            cur = q;
        }
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn from_ints(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&n| r(n)).collect())
    }

    #[test]
    fn triple_root() {
        // (t+1)^3 (t-2)
        let t_plus_1 = from_ints(&[1, 1]);
        let q = t_plus_1
            .mul(&t_plus_1)
            .mul(&t_plus_1)
            .mul(&from_ints(&[-2, 1]));
        assert_eq!(q.root_multiplicity(&r(-1)), Valuation::Finite(3));
        assert_eq!(q.root_multiplicity(&r(2)), Valuation::Finite(1));
        assert_eq!(q.root_multiplicity(&r(5)), Valuation::Finite(0));
    }

    #[test]
    fn double_root_at_zero() {
        assert_eq!(
            from_ints(&[0, 0, 330]).root_multiplicity(&r(0)),
            Valuation::Finite(2)
        );
    }

    #[test]
    fn zero_polynomial_is_dicritical() {
        assert_eq!(
            UniPoly::zero().root_multiplicity(&r(7)),
            Valuation::Infinite
        );
        assert_eq!(from_ints(&[0, 0]), UniPoly::zero());
    }

    #[test]
    fn nonzero_constant_has_no_root() {
        assert_eq!(
            from_ints(&[4]).root_multiplicity(&r(0)),
            Valuation::Finite(0)
        );
    }

    #[test]
    fn euclid() {
        let a = from_ints(&[-1, 0, 1]); // t^2 - 1
        let b = from_ints(&[1, 1]);
        let (q, rem) = a.div_rem(&b);
        assert_eq!(q, from_ints(&[-1, 1]));
        assert!(rem.is_zero());
        assert_eq!(
            a.gcd(&from_ints(&[-1, 1]).mul(&from_ints(&[3, 1]))),
            from_ints(&[-1, 1])
        );
    }
}
