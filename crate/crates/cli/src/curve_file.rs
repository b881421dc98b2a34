//! Line-oriented curve files.
//!
//! ```text
//! # comment
//! f = "y^5 - x^6 + x^4*y^3"
//! omega1.A = "..."
//! omega1.B = "..."
//! omega2.A = "..."
//! omega2.B = "..."
//! ```
//!
//! `f` is required. The forms are optional but must be given completely.

use tjurina_core::poly::ParseError;
use tjurina_core::saito::{OneForm, SaitoError};
use tjurina_core::{parse_poly, Poly};

const KEYS: [&str; 5] = ["f", "omega1.A", "omega1.B", "omega2.A", "omega2.B"];

#[derive(Debug, thiserror::Error)]
pub enum CurveFileError {
    #[error("line {line}: expected `key = \"expression\"`")]
    Malformed { line: usize },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: duplicate key `{key}`")]
    DuplicateKey { line: usize, key: String },
    #[error("missing key `f`")]
    MissingCurve,
    #[error("the forms must be given completely (missing `{key}`)")]
    IncompleteForms { key: &'static str },
    #[error("line {line}: {source}")]
    Expression {
        line: usize,
        #[source]
        source: ParseError,
    },
    #[error("{0}")]
    Form(#[from] SaitoError),
}

#[derive(Clone, Debug)]
pub struct CurveFile {
    pub f: Poly,
    pub forms: Option<(OneForm, OneForm)>,
}

pub fn parse_curve_file(text: &str) -> Result<CurveFile, CurveFileError> {
    let mut values: [Option<Poly>; 5] = Default::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or(CurveFileError::Malformed { line })?;
        let key = key.trim();
        let value = value
            .trim()
            .strip_prefix('"')
            .and_then(|v| v.strip_suffix('"'))
            .ok_or(CurveFileError::Malformed { line })?;
        let slot =
            KEYS.iter()
                .position(|k| *k == key)
                .ok_or_else(|| CurveFileError::UnknownKey {
                    line,
                    key: key.to_string(),
                })?;
        if values[slot].is_some() {
            return Err(CurveFileError::DuplicateKey {
                line,
                key: key.to_string(),
            });
        }
        let poly =
            parse_poly(value).map_err(|source| CurveFileError::Expression { line, source })?;
        values[slot] = Some(poly);
    }
    let [f, a1, b1, a2, b2] = values;
    let f = f.ok_or(CurveFileError::MissingCurve)?;
    let given = [&a1, &b1, &a2, &b2];
    let forms = if given.iter().all(|v| v.is_none()) {
        None
    } else {
        if let Some(k) = given.iter().position(|v| v.is_none()) {
            return Err(CurveFileError::IncompleteForms { key: KEYS[k + 1] });
        }
        let (a1, b1, a2, b2) = (a1.unwrap(), b1.unwrap(), a2.unwrap(), b2.unwrap());
        Some((OneForm::new(a1, b1)?, OneForm::new(a2, b2)?))
    };
    Ok(CurveFile { f, forms })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_file() {
        let text = "# cusp\n\nf = \"y^2 - x^3\"\nomega1.A = \"3*y\"\nomega1.B = \"-2*x\"\n\
                    omega2.A = \"-3*x^2\"\n  omega2.B=\"2*y\"  \n";
        let c = parse_curve_file(text).unwrap();
        assert_eq!(c.f, parse_poly("y^2 - x^3").unwrap());
        let (w1, _) = c.forms.unwrap();
        assert_eq!(w1.b(), &parse_poly("-2*x").unwrap());
    }

    #[test]
    fn curve_only() {
        assert!(parse_curve_file("f = \"y^2 - x^5\"")
            .unwrap()
            .forms
            .is_none());
    }

    #[test]
    fn errors() {
        let err = |t: &str| parse_curve_file(t).unwrap_err();
        assert!(matches!(err("f y"), CurveFileError::Malformed { line: 1 }));
        assert!(matches!(
            err("f = y"),
            CurveFileError::Malformed { line: 1 }
        ));
        assert!(matches!(
            err("g = \"y\""),
            CurveFileError::UnknownKey { .. }
        ));
        assert!(matches!(
            err("f = \"y\"\nf = \"x\""),
            CurveFileError::DuplicateKey { line: 2, .. }
        ));
        assert!(matches!(err("# nothing"), CurveFileError::MissingCurve));
        assert!(matches!(
            err("f = \"y\"\nomega1.A = \"x\""),
            CurveFileError::IncompleteForms { key: "omega1.B" }
        ));
        assert!(matches!(
            err("f = \"2x\""),
            CurveFileError::Expression { line: 1, .. }
        ));
        let zero =
            "f = \"y^2-x^3\"\nomega1.A=\"0\"\nomega1.B=\"0\"\nomega2.A=\"x\"\nomega2.B=\"y\"";
        assert!(matches!(err(zero), CurveFileError::Form(_)));
    }
}
