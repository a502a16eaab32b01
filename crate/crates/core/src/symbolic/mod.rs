//! Exact multivariate polynomial arithmetic over the rationals.
//!
//! Polynomials index variables by position in a universe; the named
//! functions below resolve names against such a universe.

mod parse;
mod poly;

use std::collections::BTreeMap;

pub use parse::parse;
pub use poly::{rat, ratio, Monomial, Poly, PolyDisplay, Rational};

use crate::error::{Error, Result};

fn lookup(name: &str, universe: &[String]) -> Result<usize> {
    universe
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| Error::UnknownVariable {
            name: name.to_string(),
            position: 0,
        })
}

/// Parses `expr` into canonical form over `universe`.
pub fn poly_parse(expr: &str, universe: &[String]) -> Result<Poly> {
    parse(expr, universe)
}

/// Prints `p` in canonical form using the names of `universe`.
pub fn poly_print(p: &Poly, universe: &[String]) -> String {
    p.to_string_with(universe)
}

/// Partial derivative of `p` with respect to the variable named `v`.
pub fn poly_diff(p: &Poly, v: &str, universe: &[String]) -> Result<Poly> {
    Ok(p.diff(lookup(v, universe)?))
}

/// Simultaneous substitution of named variables.
pub fn poly_subst(p: &Poly, bindings: &[(&str, Poly)], universe: &[String]) -> Result<Poly> {
    let mut map = BTreeMap::new();
    for (name, q) in bindings {
        map.insert(lookup(name, universe)?, q.clone());
    }
    Ok(p.subst(&map))
}

/// Exact zero test.
pub fn poly_is_zero(p: &Poly) -> bool {
    p.is_zero()
}

/// Names `prefix1..prefixN`.
pub fn indexed_names(prefix: &str, count: usize) -> Vec<String> {
    (1..=count).map(|k| format!("{prefix}{k}")).collect()
}
