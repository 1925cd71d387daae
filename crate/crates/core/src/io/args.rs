//! Short command-line notations for groups and coefficient modules.
//!
//! Groups: `1` or `trivial`, `Z/n`, products `Z/a x Z/b`, dihedral `Dn` of
//! order `n`. Coefficients: `Z`, `Z/m`, `k*`, `Pic0(g=N)`.

use super::ParseError;
use crate::gcoh::{FiniteGroup, ModuleDescriptor};
use crate::stackcurve::{validate_group, RawGroup};

fn number(s: &str, what: &str) -> Result<u64, ParseError> {
    let s = s.trim();
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::new(format!("bad {what} {s:?}")));
    }
    s.parse().map_err(|_| ParseError::new(format!("{what} {s:?} out of range")))
}

/// Parses a group notation into its raw description.
pub fn parse_group_arg_raw(s: &str) -> Result<RawGroup, ParseError> {
    let s = s.trim();
    match s {
        "1" | "trivial" | "0" => return Ok(RawGroup::trivial()),
        _ => {}
    }
    if let Some(n) = s.strip_prefix('D') {
        return Ok(RawGroup::dihedral(number(n, "dihedral order")?));
    }
    let mut factors = Vec::new();
    for part in s.split(['x', '×']) {
        let part = part.trim();
        let n = part
            .strip_prefix("Z/")
            .ok_or_else(|| ParseError::new(format!("expected Z/n, got {part:?}")))?;
        let n = number(n, "cyclic order")?;
        if n == 0 {
            return Err(ParseError::new("cyclic order must be positive"));
        }
        factors.push(n);
    }
    Ok(match factors.as_slice() {
        [n] => RawGroup::cyclic(*n),
        _ => RawGroup::abelian(&factors),
    })
}

pub fn parse_group_arg(s: &str) -> Result<FiniteGroup, ParseError> {
    let raw = parse_group_arg_raw(s)?;
    validate_group(&raw).map_err(|d| {
        ParseError::new(d.iter().map(|x| x.message.clone()).collect::<Vec<_>>().join("; "))
    })
}

pub fn parse_coeff_arg(s: &str, characteristic: u64) -> Result<ModuleDescriptor, ParseError> {
    let s = s.trim();
    if s == "Z" {
        return Ok(ModuleDescriptor::integers());
    }
    if s == "k*" {
        return Ok(ModuleDescriptor::units(characteristic));
    }
    if let Some(m) = s.strip_prefix("Z/") {
        let m = number(m, "modulus")?;
        if m == 0 {
            return Err(ParseError::new("modulus must be positive"));
        }
        return Ok(ModuleDescriptor::cyclic(m));
    }
    if let Some(g) = s
        .strip_prefix("Pic0(g=")
        .or_else(|| s.strip_prefix("Pic0("))
        .and_then(|r| r.strip_suffix(')'))
    {
        let g = number(g, "genus")?;
        let g = u32::try_from(g).map_err(|_| ParseError::new("genus out of range"))?;
        return Ok(ModuleDescriptor::picard_zero(g, characteristic));
    }
    Err(ParseError::new(format!("unrecognised coefficient module {s:?}")))
}
