//! Bivariate gcd over the rationals, viewing polynomials as elements of
//! `Q[x][y]` and running a primitive pseudo-remainder sequence in `y`.

use num_traits::Zero;

use super::{Poly, Rational, UniPoly};

/// Coefficients in `Q[x]`, indexed by the power of `y`.
type YPoly = Vec<UniPoly>;

fn to_ypoly(p: &Poly) -> YPoly {
    let deg = p.degree_in(super::Var::Y).unwrap_or(0) as usize;
    let deg_x = p.degree_in(super::Var::X).unwrap_or(0) as usize;
    let mut rows = vec![vec![Rational::zero(); deg_x + 1]; deg + 1];
    for ((a, b), c) in p.terms() {
        rows[b as usize][a as usize] = c.clone();
    }
    let mut out: YPoly = rows.into_iter().map(UniPoly::new).collect();
    trim(&mut out);
    out
}

fn from_ypoly(v: &YPoly) -> Poly {
    Poly::from_terms(v.iter().enumerate().flat_map(|(b, cx)| {
        cx.coeffs()
            .iter()
            .enumerate()
            .map(move |(a, c)| (a as u32, b as u32, c.clone()))
    }))
}

fn trim(v: &mut YPoly) {
    while v.last().is_some_and(UniPoly::is_zero) {
        v.pop();
    }
}

fn content(v: &YPoly) -> UniPoly {
    v.iter().fold(UniPoly::zero(), |acc, c| acc.gcd(c))
}

fn primitive_part(v: &YPoly) -> YPoly {
    let c = content(v);
    if c.is_zero() || c.is_one() {
        return v.clone();
    }
    v.iter()
        .map(|coef| {
            let (q, r) = coef.div_rem(&c);
            debug_assert!(r.is_zero());
            q
        })
        .collect()
}

/// Pseudo-remainder of `a` by `b` in `y`.
fn prem(a: &YPoly, b: &YPoly) -> YPoly {
    let lc_b = b.last().expect("nonzero divisor").clone();
    let mut a = a.clone();
    while a.len() >= b.len() && !a.is_empty() {
        let k = a.len() - b.len();
        let lc_a = a.last().expect("nonempty").clone();
        let mut next: YPoly = a.iter().map(|c| c.mul(&lc_b)).collect();
        for (j, c) in b.iter().enumerate() {
            next[j + k] = next[j + k].sub(&c.mul(&lc_a));
        }
        trim(&mut next);
        a = next;
    }
    a
}

pub(super) fn gcd(p: &Poly, q: &Poly) -> Poly {
    if p.is_zero() {
        return q.monic();
    }
    if q.is_zero() {
        return p.monic();
    }
    let (pa, pb) = (to_ypoly(p), to_ypoly(q));
    let cont = content(&pa).gcd(&content(&pb));
    let (mut a, mut b) = (primitive_part(&pa), primitive_part(&pb));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let prim_gcd = loop {
        if b.len() == 1 {
            break vec![UniPoly::constant(Rational::from_integer(1.into()))];
        }
        let r = prem(&a, &b);
        if r.is_empty() {
            break b;
        }
        a = b;
        b = primitive_part(&r);
    };
    let cont_poly = from_ypoly(&vec![cont]);
    (&cont_poly * &from_ypoly(&prim_gcd)).monic()
}
