//! Group strings: `0`, `Z^r + Z/d1 + Z/d2`, plus `k*` and `Pic0(g=N)`.

use num_bigint::BigInt;

use super::ParseError;
use crate::zlin::{AbelianGroup, Divisible, GroupValue};

fn term_error(t: &str) -> ParseError {
    ParseError::new(format!("unrecognised summand {t:?}"))
}

fn parse_term(t: &str, free: &mut usize, orders: &mut Vec<BigInt>, div: &mut Vec<Divisible>) -> Result<(), ParseError> {
    let t = t.trim();
    match t {
        "0" => return Ok(()),
        "Z" => {
            *free += 1;
            return Ok(());
        }
        "k*" => {
            div.push(Divisible::Units);
            return Ok(());
        }
        _ => {}
    }
    if let Some(r) = t.strip_prefix("Z^") {
        let r: usize = r.parse().map_err(|_| term_error(t))?;
        *free = free.checked_add(r).ok_or_else(|| term_error(t))?;
    } else if let Some(d) = t.strip_prefix("Z/") {
        let d: BigInt = d.parse().map_err(|_| term_error(t))?;
        if d < BigInt::from(1) || d.to_string() != t[2..] {
            return Err(term_error(t));
        }
        orders.push(d);
    } else if let Some(g) = t.strip_prefix("Pic0(g=").and_then(|s| s.strip_suffix(')')) {
        let genus: u32 = g.parse().map_err(|_| term_error(t))?;
        div.push(Divisible::Picard0 { genus });
    } else {
        return Err(term_error(t));
    }
    Ok(())
}

/// Parses a `+`-separated sum of summands. Cyclic summands need not be in
/// invariant-factor form; the result is canonical.
pub fn parse_group_value(s: &str) -> Result<GroupValue, ParseError> {
    if s.trim().is_empty() {
        return Err(ParseError::new("empty group string"));
    }
    let mut free = 0usize;
    let mut orders = Vec::new();
    let mut div = Vec::new();
    for t in s.split('+') {
        parse_term(t, &mut free, &mut orders, &mut div)?;
    }
    Ok(GroupValue::new(AbelianGroup::from_cyclic_orders(free, &orders), div))
}

/// As [`parse_group_value`], rejecting symbolic summands.
pub fn parse_group(s: &str) -> Result<AbelianGroup, ParseError> {
    let v = parse_group_value(s)?;
    if !v.divisible.is_empty() {
        return Err(ParseError::new(format!("{s:?} has a symbolic summand")));
    }
    Ok(v.group)
}

pub fn render_group(g: &AbelianGroup) -> String {
    g.to_string()
}

pub fn render_group_value(v: &GroupValue) -> String {
    v.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(parse_group("0").unwrap(), AbelianGroup::trivial());
        assert_eq!(parse_group("Z^1 + Z/2 + Z/6").unwrap().to_string(), "Z^1 + Z/2 + Z/6");
        assert_eq!(parse_group("Z/2 + Z/3").unwrap().to_string(), "Z/6");
        assert_eq!(parse_group("Z + Z").unwrap(), AbelianGroup::free(2));
        let v = parse_group_value("Z^2 + k* + Pic0(g=1)").unwrap();
        assert_eq!(v.to_string(), "Z^2 + k* + Pic0(g=1)");
        assert_eq!(parse_group_value("Pic0(g=0)").unwrap(), GroupValue::trivial());
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "Z/0", "Z/-3", "Z/+3", "Q", "Z^", "Pic0(g=x)", "Z/2 +", "k"] {
            assert!(parse_group_value(s).is_err(), "{s}");
        }
        assert!(parse_group("k*").is_err());
    }

    proptest! {
        #[test]
        fn rendering_round_trips(free in 0usize..4, orders in proptest::collection::vec(1u64..60, 0..5), units in any::<bool>(), genus in proptest::option::of(0u32..4)) {
            let mut div = Vec::new();
            if units { div.push(Divisible::Units); }
            if let Some(g) = genus { div.push(Divisible::Picard0 { genus: g }); }
            let v = GroupValue::new(AbelianGroup::from_u64_orders(free, &orders), div);
            prop_assert_eq!(parse_group_value(&render_group_value(&v)).unwrap(), v);
        }
    }
}
