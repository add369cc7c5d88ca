//! Plain-text ideal files.
//!
//! Format: the first meaningful line declares the variable table,
//!
//! ```text
//! vars: x1 x2 x3
//! # comments start with a hash
//! x1^2 - x2
//! x2^2 - x3
//! ```
//!
//! and every following meaningful line is one polynomial in the grammar of
//! [`crate::poly`]. Blank lines and `#` comments are ignored anywhere.

use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactmath::Rationals;
use crate::poly::{MonomialOrder, MultiPoly, PolyRing};

/// Parsed contents of an ideal file.
#[derive(Debug, Clone)]
pub struct IdealFile {
    pub ring: Arc<PolyRing<Rationals>>,
    pub polys: Vec<MultiPoly<Rationals>>,
}

fn meaningful_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn valid_var_name(name: &str) -> bool {
    !name.is_empty()
        && name != "zeta"
        && name
            .chars()
            .next()
            .map_or(false, |c| c.is_ascii_alphabetic() || c == '_')
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses ideal-file text with the given monomial order. The `origin`
/// string only labels error messages.
pub fn parse_ideal_text(text: &str, order: MonomialOrder, origin: &str) -> Result<IdealFile> {
    let mut lines = meaningful_lines(text);
    let (lineno, header) = lines.next().ok_or_else(|| Error::FileError {
        path: origin.to_string(),
        message: "empty file: expected a `vars:` header".into(),
    })?;
    let rest = header.strip_prefix("vars:").ok_or_else(|| Error::FileError {
        path: origin.to_string(),
        message: format!("line {}: expected a `vars:` header", lineno),
    })?;
    let names: Vec<&str> = rest.split_whitespace().collect();
    if names.is_empty() {
        return Err(Error::FileError {
            path: origin.to_string(),
            message: format!("line {}: the variable table is empty", lineno),
        });
    }
    let mut seen = std::collections::HashSet::new();
    for n in &names {
        if !valid_var_name(n) {
            return Err(Error::FileError {
                path: origin.to_string(),
                message: format!("line {}: invalid variable name `{}`", lineno, n),
            });
        }
        if !seen.insert(*n) {
            return Err(Error::FileError {
                path: origin.to_string(),
                message: format!("line {}: duplicate variable `{}`", lineno, n),
            });
        }
    }
    let ring = PolyRing::new(Rationals, &names, order);
    let mut polys = Vec::new();
    for (lineno, line) in lines {
        let p = ring.parse(line).map_err(|e| match e {
            Error::SyntaxError { offset, message } => Error::FileError {
                path: origin.to_string(),
                message: format!("line {}, byte {}: {}", lineno, offset, message),
            },
            Error::UnknownVariable { name, offset } => Error::FileError {
                path: origin.to_string(),
                message: format!(
                    "line {}, byte {}: unknown variable `{}`",
                    lineno, offset, name
                ),
            },
            other => other,
        })?;
        polys.push(p);
    }
    Ok(IdealFile { ring, polys })
}

/// Reads and parses an ideal file with the given monomial order.
pub fn read_ideal_file_with_order(path: &Path, order: MonomialOrder) -> Result<IdealFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::FileError {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_ideal_text(&text, order, &path.display().to_string())
}

/// Reads and parses an ideal file with the default grevlex order.
pub fn read_ideal_file(path: &Path) -> Result<IdealFile> {
    read_ideal_file_with_order(path, MonomialOrder::Grevlex)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_header_comments_and_polys() {
        let text = "# gradient system\nvars: x1 x2\n\nx1^2 - x2\n# middle comment\nx2^2 - x1\n";
        let f = parse_ideal_text(text, MonomialOrder::Grevlex, "test").unwrap();
        assert_eq!(f.ring.vars(), &["x1".to_string(), "x2".to_string()]);
        assert_eq!(f.polys.len(), 2);
        assert_eq!(f.polys[0], f.ring.parse("x1^2 - x2").unwrap());
    }

    #[test]
    fn missing_header_is_an_error() {
        let text = "x1^2 - x2\n";
        match parse_ideal_text(text, MonomialOrder::Grevlex, "test") {
            Err(Error::FileError { message, .. }) => {
                assert!(message.contains("vars:"), "{}", message)
            }
            other => panic!("expected file error, got {:?}", other),
        }
    }

    #[test]
    fn bad_poly_line_reports_location() {
        let text = "vars: x\nx^2 +\n";
        match parse_ideal_text(text, MonomialOrder::Grevlex, "test") {
            Err(Error::FileError { message, .. }) => {
                assert!(message.contains("line 2"), "{}", message)
            }
            other => panic!("expected file error, got {:?}", other),
        }
    }

    #[test]
    fn undeclared_variable_reports_name() {
        let text = "vars: x\nx + y\n";
        match parse_ideal_text(text, MonomialOrder::Grevlex, "test") {
            Err(Error::FileError { message, .. }) => assert!(message.contains("`y`")),
            other => panic!("expected file error, got {:?}", other),
        }
    }

    #[test]
    fn duplicate_and_invalid_names_rejected() {
        assert!(parse_ideal_text("vars: x x\n", MonomialOrder::Grevlex, "t").is_err());
        assert!(parse_ideal_text("vars: 1x\n", MonomialOrder::Grevlex, "t").is_err());
        assert!(parse_ideal_text("vars: zeta\n", MonomialOrder::Grevlex, "t").is_err());
    }
}
