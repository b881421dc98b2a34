#![allow(dead_code)]

use tjurina_core::saito::OneForm;
use tjurina_core::{parse_poly, Poly};

pub struct Curve {
    pub name: &'static str,
    pub f: Poly,
    pub w1: OneForm,
    pub w2: OneForm,
}

fn form(a: &str, b: &str) -> OneForm {
    OneForm::new(parse_poly(a).unwrap(), parse_poly(b).unwrap()).unwrap()
}

/// `y^p - x^q` with `q y dx - p x dy` and `df`.
pub fn quasi_homogeneous(p: u32, q: u32) -> Curve {
    let f = parse_poly(&format!("y^{p} - x^{q}")).unwrap();
    let w1 = form(&format!("{q}*y"), &format!("-{p}*x"));
    let w2 = OneForm::differential(&f).unwrap();
    Curve {
        name: "S1",
        f,
        w1,
        w2,
    }
}

pub fn s2() -> Curve {
    Curve {
        name: "S2",
        f: parse_poly("y^5 - x^6 + x^4*y^3").unwrap(),
        w1: form(
            "-6*x*y + 16/15*x^3*y^2 - 8/5*x*y^5",
            "5*x^2 + 4/3*y^3 + 4/5*x^2*y^4",
        ),
        w2: form("-6*y^2 + 8/5*x^4 - 12/5*x^2*y^3", "5*x*y + 6/5*x^3*y^2"),
    }
}

pub fn s3() -> Curve {
    Curve {
        name: "S3",
        f: parse_poly("y^5 - x^11 + x^6*y^3").unwrap(),
        w1: form("605*y^2 + 198*x*y^3 - 88*x^6", "-(275*x*y + 66*x^2*y^2)"),
        w2: form("605*x^4*y + 150*x^5*y^2", "-(40*y^3 + 275*x^5 + 90*x^6*y)"),
    }
}

pub fn s4() -> Curve {
    Curve {
        name: "S4",
        f: parse_poly("y^7 - x^8 - 7*x^6*y^2 - 147/8*x^4*y^4").unwrap(),
        w1: form(
            "8*x^2*y - 147/8*x^4 - 3087/4*x^2*y^2 - 21609/16*y^4",
            "-7*x^3 + 7/4*x*y^2 + 64827/64*x*y^3 + 5145/8*x^3*y",
        ),
        w2: form("8*x*y^2 + 1029/8*x^3*y", "-7*x^2*y + 7/4*y^3 - 1029/8*x^4"),
    }
}

/// Pullback along `(x, y) -> (x, y + t*x)`; forms transform by
/// `A dx + B dy -> (A + t*B) dx + B dy`.
pub fn shear(c: &Curve, t: i64) -> Curve {
    let x = Poly::x();
    let sy = &Poly::y() + &x.scale(&tjurina_core::Rational::from_integer(t.into()));
    let pull = |w: &OneForm| {
        let a = w.a().substitute(&x, &sy);
        let b = w.b().substitute(&x, &sy);
        let tb = b.scale(&tjurina_core::Rational::from_integer(t.into()));
        OneForm::new(&a + &tb, b).unwrap()
    };
    Curve {
        name: c.name,
        f: c.f.substitute(&x, &sy),
        w1: pull(&c.w1),
        w2: pull(&c.w2),
    }
}

pub fn reference_curves() -> Vec<Curve> {
    vec![
        quasi_homogeneous(2, 3),
        quasi_homogeneous(5, 6),
        s2(),
        s3(),
        s4(),
    ]
}
