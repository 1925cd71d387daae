//! Groups with symbolic divisible summands, and the splitting calculus for
//! short exact sequences `0 -> sub -> E -> quot -> 0`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::group::AbelianGroup;

/// A divisible group that cannot be written down as finitely generated.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Divisible {
    /// Units of the algebraically closed ground field.
    Units,
    /// Degree-zero Picard group of a smooth projective curve of genus `genus`.
    Picard0 { genus: u32 },
}

impl Divisible {
    /// `n`-torsion for `n` prime to the characteristic.
    pub fn torsion(&self, n: &BigInt) -> AbelianGroup {
        let z = AbelianGroup::from_cyclic_orders(0, &[n.clone()]);
        match self {
            Divisible::Units => z,
            Divisible::Picard0 { genus } => z.power(2 * *genus as usize),
        }
    }

    /// Whether the symbol stands for the zero group.
    pub fn is_zero(&self) -> bool {
        matches!(self, Divisible::Picard0 { genus: 0 })
    }
}

impl fmt::Display for Divisible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Divisible::Units => write!(f, "k*"),
            Divisible::Picard0 { genus } => write!(f, "Pic0(g={genus})"),
        }
    }
}

/// A finitely generated group plus a list of divisible summands.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupValue {
    pub group: AbelianGroup,
    pub divisible: Vec<Divisible>,
}

impl GroupValue {
    pub fn new(group: AbelianGroup, mut divisible: Vec<Divisible>) -> Self {
        divisible.retain(|d| !d.is_zero());
        divisible.sort();
        GroupValue { group, divisible }
    }

    pub fn exact(group: AbelianGroup) -> Self {
        GroupValue {
            group,
            divisible: Vec::new(),
        }
    }

    pub fn divisible(d: Divisible) -> Self {
        Self::new(AbelianGroup::trivial(), vec![d])
    }

    pub fn trivial() -> Self {
        Self::exact(AbelianGroup::trivial())
    }

    pub fn is_trivial(&self) -> bool {
        self.group.is_trivial() && self.divisible.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.group.is_finite() && self.divisible.is_empty()
    }

    /// True when the value has no finitely generated part and some divisible part.
    pub fn is_purely_divisible(&self) -> bool {
        self.group.is_trivial() && !self.divisible.is_empty()
    }

    /// The finitely generated part, if there is no symbolic part.
    pub fn as_exact(&self) -> Option<&AbelianGroup> {
        self.divisible.is_empty().then_some(&self.group)
    }

    pub fn order(&self) -> Option<BigInt> {
        if self.divisible.is_empty() {
            self.group.order()
        } else {
            None
        }
    }

    pub fn direct_sum(&self, other: &GroupValue) -> GroupValue {
        let mut d = self.divisible.clone();
        d.extend(other.divisible.iter().cloned());
        GroupValue::new(self.group.direct_sum(&other.group), d)
    }

    pub fn power(&self, n: usize) -> GroupValue {
        (0..n).fold(GroupValue::trivial(), |acc, _| acc.direct_sum(self))
    }

    /// `n`-torsion subgroup, with `n` prime to the characteristic.
    pub fn torsion_of(&self, n: &BigInt) -> AbelianGroup {
        let mut t = self.group.torsion_of(n);
        for d in &self.divisible {
            t = t.direct_sum(&d.torsion(n));
        }
        t
    }

    /// `V / nV`; divisible summands vanish.
    pub fn mod_multiples(&self, n: &BigInt) -> AbelianGroup {
        self.group.mod_multiples(n)
    }
}

impl From<AbelianGroup> for GroupValue {
    fn from(g: AbelianGroup) -> Self {
        GroupValue::exact(g)
    }
}

impl fmt::Display for GroupValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.divisible.is_empty() {
            return write!(f, "{}", self.group);
        }
        let mut parts = Vec::new();
        if !self.group.is_trivial() {
            parts.push(self.group.to_string());
        }
        parts.extend(self.divisible.iter().map(ToString::to_string));
        write!(f, "{}", parts.join(" + "))
    }
}

/// Why an extension is known to split.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitCriterion {
    TrivialPiece,
    FreeQuotient,
    DivisibleSub,
    CoprimeOrders,
    /// The caller exhibited a retraction onto the subgroup.
    Retraction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionResult {
    pub resolved: bool,
    pub group: Option<GroupValue>,
    /// Graded pieces from the bottom of the filtration up.
    pub filtration: Vec<GroupValue>,
    pub order: Option<BigInt>,
    pub criteria: Vec<SplitCriterion>,
}

impl ExtensionResult {
    pub fn resolved(group: GroupValue, pieces: Vec<GroupValue>, criteria: Vec<SplitCriterion>) -> Self {
        let order = product_order(&pieces);
        ExtensionResult {
            resolved: true,
            group: Some(group),
            filtration: pieces,
            order,
            criteria,
        }
    }

    pub fn unresolved(pieces: Vec<GroupValue>) -> Self {
        let order = product_order(&pieces);
        ExtensionResult {
            resolved: false,
            group: None,
            filtration: pieces,
            order,
            criteria: Vec::new(),
        }
    }

    /// A split extension certified by the caller.
    pub fn split_by(sub: &GroupValue, quot: &GroupValue, criterion: SplitCriterion) -> Self {
        Self::resolved(
            sub.direct_sum(quot),
            vec![sub.clone(), quot.clone()],
            vec![criterion],
        )
    }
}

fn product_order(pieces: &[GroupValue]) -> Option<BigInt> {
    pieces
        .iter()
        .try_fold(BigInt::one(), |acc, p| p.order().map(|o| acc * o))
}

/// The splitting criterion that applies to `0 -> sub -> E -> quot -> 0`, if any.
pub fn split_criterion(sub: &GroupValue, quot: &GroupValue) -> Option<SplitCriterion> {
    if sub.is_trivial() || quot.is_trivial() {
        return Some(SplitCriterion::TrivialPiece);
    }
    if quot.divisible.is_empty() && quot.group.is_free() {
        return Some(SplitCriterion::FreeQuotient);
    }
    if sub.is_purely_divisible() {
        return Some(SplitCriterion::DivisibleSub);
    }
    if let (Some(a), Some(b)) = (sub.order(), quot.order()) {
        if a.gcd(&b).is_one() {
            return Some(SplitCriterion::CoprimeOrders);
        }
    }
    None
}

pub fn resolve_extension(sub: &GroupValue, quot: &GroupValue) -> ExtensionResult {
    match split_criterion(sub, quot) {
        Some(c) => ExtensionResult::split_by(sub, quot, c),
        None => ExtensionResult::unresolved(vec![sub.clone(), quot.clone()]),
    }
}

/// Folds a filtration from the bottom up, merging adjacent pieces whenever a
/// criterion applies. Trivial pieces are dropped.
pub fn resolve_filtration(pieces: &[GroupValue]) -> ExtensionResult {
    let nontrivial: Vec<GroupValue> = pieces.iter().filter(|p| !p.is_trivial()).cloned().collect();
    let mut merged: Vec<GroupValue> = Vec::new();
    let mut criteria = Vec::new();
    for p in nontrivial {
        match merged.last() {
            Some(last) => match split_criterion(last, &p) {
                Some(c) => {
                    let s = last.direct_sum(&p);
                    *merged.last_mut().unwrap() = s;
                    criteria.push(c);
                }
                None => merged.push(p),
            },
            None => merged.push(p),
        }
    }
    match merged.len() {
        0 => ExtensionResult::resolved(GroupValue::trivial(), Vec::new(), vec![SplitCriterion::TrivialPiece]),
        1 => {
            let g = merged[0].clone();
            let mut r = ExtensionResult::resolved(g, pieces.to_vec(), criteria);
            r.filtration = pieces.iter().filter(|p| !p.is_trivial()).cloned().collect();
            r
        }
        _ => ExtensionResult::unresolved(merged),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> GroupValue {
        AbelianGroup::cyclic(n).into()
    }

    #[test]
    fn coprime_orders_split() {
        let r = resolve_extension(&z(2), &z(3));
        assert!(r.resolved);
        assert_eq!(r.group.unwrap(), z(6));
        assert_eq!(r.order, Some(BigInt::from(6)));
    }

    #[test]
    fn divisible_sub_splits_over_free() {
        let sub = GroupValue::divisible(Divisible::Units);
        let quot: GroupValue = AbelianGroup::free(3).into();
        let r = resolve_extension(&sub, &quot);
        assert!(r.resolved);
        assert_eq!(r.group.unwrap().to_string(), "Z^3 + k*");
    }

    #[test]
    fn equal_primes_stay_unresolved() {
        for p in [2u64, 3, 5, 7] {
            let r = resolve_extension(&z(p), &z(p));
            assert!(!r.resolved);
            assert!(r.group.is_none());
            assert_eq!(r.order, Some(BigInt::from(p * p)));
            assert_eq!(r.filtration, vec![z(p), z(p)]);
        }
    }

    #[test]
    fn filtration_fold() {
        let r = resolve_filtration(&[z(4), GroupValue::trivial(), z(9)]);
        assert!(r.resolved);
        assert_eq!(r.group.unwrap(), z(36));
        let r = resolve_filtration(&[z(3), z(2), z(3)]);
        // Z/3 + Z/2 merges, then Z/6 against Z/3 does not.
        assert!(!r.resolved);
        assert_eq!(r.filtration, vec![z(6), z(3)]);
        assert_eq!(r.order, Some(BigInt::from(18)));
    }

    #[test]
    fn display() {
        let v = GroupValue::new(
            AbelianGroup::from_u64_orders(1, &[2]),
            vec![Divisible::Picard0 { genus: 2 }, Divisible::Units],
        );
        assert_eq!(v.to_string(), "Z^1 + Z/2 + k* + Pic0(g=2)");
        assert_eq!(GroupValue::divisible(Divisible::Picard0 { genus: 0 }).to_string(), "0");
    }
}
