//! Finite groups as cyclic orders, abelian invariant factors, or explicit
//! multiplication tables.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::GcohError;
use crate::zlin::{AbelianGroup, IntegerMatrix, Presented};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Cyclic(u64),
    /// Invariant factors, each dividing the next.
    Abelian(Vec<u64>),
    Table,
}

/// A finite group on the elements `0..order`.
///
/// Cyclic and abelian kinds encode an element as mixed-radix digits, the
/// first factor varying fastest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    kind: GroupKind,
    order: usize,
    radices: Vec<usize>,
    identity: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    pub fn cyclic(d: u64) -> Result<Self, GcohError> {
        if d == 0 {
            return Err(GcohError::InvalidGroup("cyclic order must be positive".into()));
        }
        let radices = if d == 1 { vec![] } else { vec![d as usize] };
        Ok(Self::mixed_radix(GroupKind::Cyclic(d), radices))
    }

    pub fn trivial() -> Self {
        Self::cyclic(1).expect("order 1")
    }

    pub fn abelian(factors: &[u64]) -> Result<Self, GcohError> {
        for w in factors.windows(2) {
            if w[1] % w[0] != 0 {
                return Err(GcohError::InvalidGroup(format!(
                    "factor {} does not divide {}",
                    w[0], w[1]
                )));
            }
        }
        if let Some(f) = factors.iter().find(|&&f| f < 2) {
            return Err(GcohError::InvalidGroup(format!("factor {f} is below 2")));
        }
        let radices = factors.iter().map(|&f| f as usize).collect();
        Ok(Self::mixed_radix(GroupKind::Abelian(factors.to_vec()), radices))
    }

    /// Any list of cyclic orders; canonicalized to invariant factors.
    pub fn abelian_from_orders(orders: &[u64]) -> Result<Self, GcohError> {
        if orders.contains(&0) {
            return Err(GcohError::InvalidGroup("cyclic order must be positive".into()));
        }
        let g = AbelianGroup::from_u64_orders(0, orders);
        let f: Vec<u64> = g
            .invariant_factors()
            .iter()
            .map(|x| u64::try_from(x).expect("product of u64 orders"))
            .collect();
        Self::abelian(&f)
    }

    fn mixed_radix(kind: GroupKind, radices: Vec<usize>) -> Self {
        let order = radices.iter().product();
        FiniteGroup {
            kind,
            order,
            radices,
            identity: 0,
            table: Vec::new(),
            inverse: Vec::new(),
        }
    }

    /// A group from its multiplication table, `table[a][b] = a * b`.
    pub fn from_table(table: Vec<Vec<usize>>, identity: usize) -> Result<Self, GcohError> {
        let n = table.len();
        if n == 0 {
            return Err(GcohError::InvalidGroup("empty table".into()));
        }
        if identity >= n {
            return Err(GcohError::InvalidGroup(format!("identity {identity} out of range")));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(GcohError::InvalidGroup(format!("row {a} has length {}", row.len())));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return Err(GcohError::InvalidGroup(format!("entry {x} out of range")));
            }
            flat.extend_from_slice(row);
        }
        let m = |a: usize, b: usize| flat[a * n + b];
        for a in 0..n {
            if m(identity, a) != a || m(a, identity) != a {
                return Err(GcohError::InvalidGroup(format!("{identity} is not an identity")));
            }
        }
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| m(a, b) == identity && m(b, a) == identity) {
                Some(b) => inverse[a] = b,
                None => return Err(GcohError::InvalidGroup(format!("element {a} has no inverse"))),
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = m(a, b);
                for c in 0..n {
                    if m(ab, c) != m(a, m(b, c)) {
                        return Err(GcohError::InvalidGroup(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            kind: GroupKind::Table,
            order: n,
            radices: Vec::new(),
            identity,
            table: flat,
            inverse,
        })
    }

    /// The dihedral group of order `2m`; element `i + m*j` is `r^i s^j`.
    pub fn dihedral(m: usize) -> Result<Self, GcohError> {
        if m < 1 {
            return Err(GcohError::InvalidGroup("dihedral needs m >= 1".into()));
        }
        let n = 2 * m;
        let mut t = vec![vec![0; n]; n];
        for (x, row) in t.iter_mut().enumerate() {
            let (a, b) = (x % m, x / m);
            for (y, cell) in row.iter_mut().enumerate() {
                let (c, d) = (y % m, y / m);
                let i = if b == 0 { (a + c) % m } else { (a + m - c) % m };
                *cell = i + m * ((b + d) % 2);
            }
        }
        Self::from_table(t, 0)
    }

    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n, k) = (self.order, other.order);
        let t: Vec<Vec<usize>> = (0..n * k)
            .map(|x| {
                (0..n * k)
                    .map(|y| self.mul(x % n, y % n) + n * other.mul(x / n, y / n))
                    .collect()
            })
            .collect();
        Self::from_table(t, self.identity + n * other.identity).expect("products of groups are groups")
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        if let GroupKind::Table = self.kind {
            return self.table[a * self.order + b];
        }
        let (mut a, mut b) = (a, b);
        let (mut out, mut stride) = (0, 1);
        for &r in &self.radices {
            out += ((a % r + b % r) % r) * stride;
            a /= r;
            b /= r;
            stride *= r;
        }
        out
    }

    pub fn inv(&self, a: usize) -> usize {
        if let GroupKind::Table = self.kind {
            return self.inverse[a];
        }
        let mut a = a;
        let (mut out, mut stride) = (0, 1);
        for &r in &self.radices {
            out += ((r - a % r) % r) * stride;
            a /= r;
            stride *= r;
        }
        out
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Mixed-radix digits of an element of a cyclic or abelian group; these
    /// are its coordinates on the invariant-factor generators.
    pub fn digits(&self, a: usize) -> Option<Vec<u64>> {
        if let GroupKind::Table = self.kind {
            return None;
        }
        let mut a = a;
        Some(
            self.radices
                .iter()
                .map(|&r| {
                    let d = a % r;
                    a /= r;
                    d as u64
                })
                .collect(),
        )
    }

    pub fn from_digits(&self, digits: &[u64]) -> Option<usize> {
        if let GroupKind::Table = self.kind {
            return None;
        }
        let (mut out, mut stride) = (0, 1);
        for (&d, &r) in digits.iter().zip(&self.radices) {
            out += (d as usize % r) * stride;
            stride *= r;
        }
        Some(out)
    }

    pub fn is_abelian(&self) -> bool {
        match self.kind {
            GroupKind::Table => self
                .elements()
                .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a))),
            _ => true,
        }
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements().any(|a| self.element_order(a) == self.order)
    }

    /// Invariant factors if the group is abelian.
    pub fn abelian_invariants(&self) -> Option<Vec<u64>> {
        match &self.kind {
            GroupKind::Cyclic(1) => Some(vec![]),
            GroupKind::Cyclic(d) => Some(vec![*d]),
            GroupKind::Abelian(f) => Some(f.clone()),
            GroupKind::Table => self.is_abelian().then(|| {
                self.abelianization()
                    .invariant_factors()
                    .iter()
                    .map(|x| u64::try_from(x).expect("fits"))
                    .collect()
            }),
        }
    }

    /// `G / [G, G]`, from the presentation `Z^G / <e_a + e_b - e_ab>`.
    pub fn abelianization(&self) -> AbelianGroup {
        match &self.kind {
            GroupKind::Cyclic(d) => return AbelianGroup::from_u64_orders(0, &[*d]),
            GroupKind::Abelian(f) => return AbelianGroup::from_u64_orders(0, f),
            GroupKind::Table => {}
        }
        let n = self.order;
        let mut cols = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let mut c = vec![BigInt::from(0); n];
                c[a] += 1;
                c[b] += 1;
                c[self.mul(a, b)] -= 1;
                cols.push(c);
            }
        }
        Presented::new(n, &IntegerMatrix::from_columns(&cols, n)).group
    }

    /// Closure of a generator list; always contains the identity.
    pub fn generate(&self, generators: &[usize]) -> Result<Subgroup, GcohError> {
        if let Some(&g) = generators.iter().find(|&&g| g >= self.order) {
            return Err(GcohError::NotASubgroup(format!("element {g} out of range")));
        }
        let mut set = BTreeSet::from([self.identity]);
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in generators {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Ok(Subgroup {
            elements: set.into_iter().collect(),
        })
    }

    /// A subgroup given by its full element list, checked for closure.
    pub fn subgroup(&self, elements: &[usize]) -> Result<Subgroup, GcohError> {
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        if set.iter().any(|&x| x >= self.order) {
            return Err(GcohError::NotASubgroup("element out of range".into()));
        }
        if !set.contains(&self.identity) {
            return Err(GcohError::NotASubgroup("identity missing".into()));
        }
        for &a in &set {
            for &b in &set {
                if !set.contains(&self.mul(a, b)) {
                    return Err(GcohError::NotASubgroup(format!("not closed at ({a}, {b})")));
                }
            }
        }
        Ok(Subgroup {
            elements: set.into_iter().collect(),
        })
    }

    /// The unique subgroup of order `k` of a cyclic group.
    pub fn cyclic_subgroup_of_order(&self, k: usize) -> Result<Subgroup, GcohError> {
        if !self.order.is_multiple_of(k) {
            return Err(GcohError::NotASubgroup(format!("{k} does not divide {}", self.order)));
        }
        let g = self
            .elements()
            .find(|&a| self.element_order(a) == k)
            .ok_or_else(|| GcohError::NotASubgroup(format!("no element of order {k}")))?;
        self.generate(&[g])
    }
}

/// A subgroup as a sorted element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn index_in(&self, g: &FiniteGroup) -> usize {
        g.order() / self.order()
    }

    /// The subgroup as a group of its own, with `embedding[i]` the element of
    /// the ambient group that element `i` stands for.
    pub fn as_group(&self, g: &FiniteGroup) -> (FiniteGroup, Vec<usize>) {
        let pos = |x: usize| self.elements.binary_search(&x).expect("closed");
        let t: Vec<Vec<usize>> = self
            .elements
            .iter()
            .map(|&a| self.elements.iter().map(|&b| pos(g.mul(a, b))).collect())
            .collect();
        let h = FiniteGroup::from_table(t, pos(g.identity())).expect("subgroups are groups");
        (h, self.elements.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_arithmetic() {
        let g = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(g.mul(4, 5), 3);
        assert_eq!(g.inv(2), 4);
        assert!(g.is_cyclic());
        assert_eq!(g.element_order(2), 3);
    }

    #[test]
    fn abelian_encoding() {
        let g = FiniteGroup::abelian(&[2, 4]).unwrap();
        assert_eq!(g.order(), 8);
        // (1, 3) + (1, 2) = (0, 1)
        assert_eq!(g.mul(1 + 2 * 3, 1 + 2 * 2), 2);
        assert!(!g.is_cyclic());
        assert!(FiniteGroup::abelian(&[4, 2]).is_err());
        assert_eq!(FiniteGroup::abelian_from_orders(&[2, 3]).unwrap().kind(), &GroupKind::Abelian(vec![6]));
    }

    #[test]
    fn dihedral_checks() {
        let d6 = FiniteGroup::dihedral(3).unwrap();
        assert_eq!(d6.order(), 6);
        assert!(!d6.is_abelian());
        assert_eq!(d6.abelianization(), AbelianGroup::cyclic(2));
        let d8 = FiniteGroup::dihedral(4).unwrap();
        assert_eq!(d8.abelianization(), AbelianGroup::from_u64_orders(0, &[2, 2]));
        let rot = d6.generate(&[1]).unwrap();
        assert_eq!(rot.order(), 3);
        assert_eq!(rot.index_in(&d6), 2);
    }

    #[test]
    fn bad_tables_rejected() {
        assert!(FiniteGroup::from_table(vec![vec![0, 1], [1, 1].to_vec()], 0).is_err());
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 0]], 1).is_err());
        // a quasigroup that is not associative
        let t = vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 0]];
        assert!(FiniteGroup::from_table(t, 0).is_err());
    }

    #[test]
    fn subgroup_checks() {
        let g = FiniteGroup::cyclic(4).unwrap();
        assert!(g.subgroup(&[0, 1]).is_err());
        let h = g.subgroup(&[0, 2]).unwrap();
        let (hg, emb) = h.as_group(&g);
        assert_eq!(hg.order(), 2);
        assert_eq!(emb, vec![0, 2]);
        assert_eq!(g.cyclic_subgroup_of_order(2).unwrap(), h);
    }

    #[test]
    fn product_is_abelian_when_factors_are() {
        let p = FiniteGroup::cyclic(2).unwrap().direct_product(&FiniteGroup::cyclic(3).unwrap());
        assert!(p.is_cyclic());
        assert_eq!(p.abelian_invariants(), Some(vec![6]));
    }
}
