//! Shared pieces of the `name:param,param,...` mini-language.

use alloc::format;
use alloc::vec::Vec;

use crate::SpecParseError;

/// Splits `name:args` into `(name, args)`.
pub(crate) fn split(spec: &str) -> (&str, Option<&str>) {
    match spec.split_once(':') {
        Some((name, args)) => (name, Some(args)),
        None => (spec, None),
    }
}

/// Comma-separated parameters, exactly `expected` of them.
pub(crate) fn params<'a>(
    name: &str,
    args: Option<&'a str>,
    expected: usize,
    usage: &str,
) -> Result<Vec<&'a str>, SpecParseError> {
    let list: Vec<&str> = match args {
        None => Vec::new(),
        Some(a) => a.split(',').map(str::trim).collect(),
    };
    if list.len() != expected {
        return Err(SpecParseError::new(format!(
            "'{name}' takes {expected} parameter(s), got {}; usage: {usage}",
            list.len()
        )));
    }
    Ok(list)
}

/// A finite decimal literal.
pub(crate) fn float(field: &str, s: &str) -> Result<f64, SpecParseError> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(SpecParseError::new(format!(
            "{field}: '{s}' is not a finite decimal number"
        ))),
    }
}

pub(crate) fn unknown(kind: &str, name: &str, valid: &[&str]) -> SpecParseError {
    SpecParseError::new(format!(
        "unknown {kind} '{name}'; valid {kind}s: {}",
        valid.join(", ")
    ))
}
