//! Polynomial files: `{"coeffs": ["n/d", ...]}` with index 0 the constant term, optionally with a
//! `roots` block, a `separation` and a `rootless_floor` used to derive the default threshold.

use std::path::Path;

use certiroot::rational::{int, parse, Rational};
use serde::Deserialize;

use crate::error::CliError;

pub const MAX_DEGREE_VAR: &str = "CERTIROOT_MAX_DEGREE";
pub const DEFAULT_MAX_DEGREE: usize = 64;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPolyFile {
    #[serde(default)]
    format: Option<u32>,
    coeffs: Vec<String>,
    #[serde(default)]
    roots: Option<Vec<RawRoot>>,
    #[serde(default)]
    separation: Option<String>,
    #[serde(default)]
    rootless_floor: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRoot {
    value: String,
    #[serde(default = "one")]
    multiplicity: u32,
}

fn one() -> u32 {
    1
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFile {
    /// Declared coefficient vector, trailing zeros kept.
    pub coeffs: Vec<Rational>,
    /// Sorted distinct real roots, when a `roots` block was given.
    pub roots: Option<Vec<(Rational, u32)>>,
    pub separation: Option<Rational>,
    pub rootless_floor: Option<Rational>,
}

impl PolyFile {
    /// Lower bound on the gap between distinct real roots, if the file supplies one.
    ///
    /// An explicit `separation` wins; otherwise it is the smallest gap in the `roots` block, and 2
    /// when that block lists fewer than two roots.
    pub fn effective_separation(&self) -> Option<Rational> {
        if let Some(s) = &self.separation {
            return Some(s.clone());
        }
        let roots = self.roots.as_ref()?;
        Some(roots.windows(2).map(|w| &w[1].0 - &w[0].0).min().unwrap_or_else(|| int(2)))
    }
}

pub fn parse_rational(field: &str, s: &str) -> Result<Rational, CliError> {
    parse(s).ok_or_else(|| CliError::Parse(format!("{field}: {s:?} is not a rational of the form n or n/d")))
}

pub fn max_degree() -> Result<usize, CliError> {
    match std::env::var(MAX_DEGREE_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Parse(format!("{MAX_DEGREE_VAR}={v:?} is not a degree"))),
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
    }
}

pub fn parse_poly_file(text: &str, max_degree: usize) -> Result<PolyFile, CliError> {
    let raw: RawPolyFile = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    if let Some(f) = raw.format {
        if f != 1 {
            return Err(CliError::Parse(format!("unsupported format {f}")));
        }
    }
    if raw.coeffs.is_empty() {
        return Err(CliError::Parse("coeffs must not be empty".into()));
    }
    let degree = raw.coeffs.len() - 1;
    if degree > max_degree {
        return Err(CliError::DegreeLimit { degree, max: max_degree });
    }
    let coeffs = raw
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| parse_rational(&format!("coeffs[{i}]"), c))
        .collect::<Result<Vec<_>, _>>()?;
    let roots = match raw.roots {
        None => None,
        Some(list) => {
            let mut roots = list
                .iter()
                .map(|r| {
                    if r.multiplicity == 0 {
                        return Err(CliError::Parse("root multiplicity must be at least 1".into()));
                    }
                    Ok((parse_rational("roots.value", &r.value)?, r.multiplicity))
                })
                .collect::<Result<Vec<_>, _>>()?;
            roots.sort();
            if roots.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(CliError::Parse("roots must be distinct".into()));
            }
            Some(roots)
        }
    };
    let separation = raw.separation.as_deref().map(|s| parse_rational("separation", s)).transpose()?;
    let rootless_floor = raw.rootless_floor.as_deref().map(|s| parse_rational("rootless_floor", s)).transpose()?;
    Ok(PolyFile { coeffs, roots, separation, rootless_floor })
}

pub fn read_poly_file(path: &Path) -> Result<PolyFile, CliError> {
    let text = read_text(path)?;
    parse_poly_file(&text, max_degree()?)
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use certiroot::rational::ratio;

    #[test]
    fn parses_minimal_file() {
        let f = parse_poly_file(r#"{"coeffs": ["-2", "0", "1/1"]}"#, 64).unwrap();
        assert_eq!(f.coeffs, vec![int(-2), int(0), int(1)]);
        assert_eq!(f.effective_separation(), None);
    }

    #[test]
    fn separation_from_roots_block() {
        let text = r#"{"coeffs": ["6", "-5", "1"], "roots": [{"value": "3"}, {"value": "2", "multiplicity": 1}]}"#;
        let f = parse_poly_file(text, 64).unwrap();
        assert_eq!(f.roots.as_ref().unwrap()[0].0, int(2));
        assert_eq!(f.effective_separation(), Some(int(1)));
        let text = r#"{"coeffs": ["1", "1"], "roots": [{"value": "-1"}], "separation": "1/3"}"#;
        assert_eq!(parse_poly_file(text, 64).unwrap().effective_separation(), Some(ratio(1, 3)));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_poly_file(r#"{"coeffs": ["1.5"]}"#, 64), Err(CliError::Parse(_))));
        assert!(matches!(parse_poly_file(r#"{"coeffs": ["1/0"]}"#, 64), Err(CliError::Parse(_))));
        assert!(matches!(parse_poly_file(r#"{"coeffs": []}"#, 64), Err(CliError::Parse(_))));
        assert!(matches!(parse_poly_file(r#"{"coefs": ["1"]}"#, 64), Err(CliError::Parse(_))));
        assert!(matches!(parse_poly_file(r#"{"coeffs": ["1","2","3"]}"#, 1), Err(CliError::DegreeLimit { degree: 2, max: 1 })));
    }
}
