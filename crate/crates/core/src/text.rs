//! Compact text form of group ring elements: `<group>: <term> <term> …`.
//!
//! Terms are written per group kind:
//!
//! * cyclic `c15`: `g7` (also `1` and `g`)
//! * product `c24x4`: `h1g21`, `g15`, `h2` (`h` and `g` exponents, either may be omitted)
//! * dihedral `d10`: `b3`, `ab2`, `a`
//!
//! Exponents must already be reduced. Formatting lists terms in canonical
//! listing order with every exponent written out.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::ring::GroupRingElement;

/// Splits a term like `h1g21` into `(letter, exponent)` pieces.
fn factors(term: &str) -> Result<Vec<(char, usize)>> {
    let bad = || Error::Parse(format!("malformed term '{term}'"));
    let mut out = Vec::new();
    let mut chars = term.chars().peekable();
    while let Some(c) = chars.next() {
        if !c.is_ascii_alphabetic() {
            return Err(bad());
        }
        let mut digits = String::new();
        while let Some(d) = chars.peek().copied().filter(char::is_ascii_digit) {
            digits.push(d);
            chars.next();
        }
        let exp = if digits.is_empty() {
            1
        } else {
            digits.parse().map_err(|_| bad())?
        };
        out.push((c, exp));
    }
    if out.is_empty() {
        return Err(bad());
    }
    Ok(out)
}

fn check_exp(term: &str, letter: char, exp: usize, bound: usize) -> Result<usize> {
    if exp < bound {
        Ok(exp)
    } else {
        Err(Error::Parse(format!(
            "exponent of {letter} in '{term}' must be < {bound}"
        )))
    }
}

/// Listing index of a single term.
pub fn parse_term(spec: GroupSpec, term: &str) -> Result<usize> {
    if term == "1" {
        return Ok(0);
    }
    let parts = factors(term)?;
    let letters: String = parts.iter().map(|p| p.0).collect();
    let exp = |i: usize, bound: usize| check_exp(term, parts[i].0, parts[i].1, bound);
    let unexpected = || Error::Parse(format!("term '{term}' does not fit group {spec}"));
    match spec {
        GroupSpec::Cyclic(n) => match letters.as_str() {
            "g" => exp(0, n),
            _ => Err(unexpected()),
        },
        GroupSpec::Product(n, m) => match letters.as_str() {
            "g" => exp(0, n),
            "h" => Ok(exp(0, m)? * n),
            "hg" => Ok(exp(0, m)? * n + exp(1, n)?),
            _ => Err(unexpected()),
        },
        GroupSpec::Dihedral(n) => match letters.as_str() {
            "b" => exp(0, n),
            "a" if parts[0].1 == 1 => Ok(n),
            "ab" if parts[0].1 == 1 => Ok(n + exp(1, n)?),
            _ => Err(unexpected()),
        },
    }
}

pub fn format_term(spec: GroupSpec, index: usize) -> String {
    match spec {
        GroupSpec::Cyclic(_) => format!("g{index}"),
        GroupSpec::Product(n, _) => {
            let (i, j) = (index % n, index / n);
            if j == 0 {
                format!("g{i}")
            } else {
                format!("h{j}g{i}")
            }
        }
        GroupSpec::Dihedral(n) => {
            if index < n {
                format!("b{index}")
            } else {
                format!("ab{}", index - n)
            }
        }
    }
}

/// Parses `<group>: <terms>`. Blank lines and `#` comments are ignored, so a
/// fixture file can be passed straight in. Repeated terms are rejected.
pub fn parse_element(text: &str) -> Result<GroupRingElement> {
    let body: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .collect();
    let body = body.join(" ");
    let (group, terms) = body
        .split_once(':')
        .ok_or_else(|| Error::Parse("expected '<group>: <terms>'".into()))?;
    let spec: GroupSpec = group.parse()?;
    let mut indices = Vec::new();
    for term in terms.split_whitespace() {
        let idx = parse_term(spec, term)?;
        if indices.contains(&idx) {
            return Err(Error::Parse(format!("repeated term '{term}'")));
        }
        indices.push(idx);
    }
    GroupRingElement::from_indices(spec, indices)
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.spec())?;
        for &i in self.support() {
            write!(f, " {}", format_term(self.spec(), i))?;
        }
        Ok(())
    }
}

impl FromStr for GroupRingElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_element(s)
    }
}
