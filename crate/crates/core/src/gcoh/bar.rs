//! The normalized bar complex of a finite group with trivial coefficients.
//!
//! `C^r` has one basis vector per tuple of `r` non-identity elements. The
//! differential is the standard one,
//! `(df)(g_1..g_{r+1}) = f(g_2..) + sum_i (-1)^i f(..g_i g_{i+1}..) + (-1)^{r+1} f(..g_r)`,
//! with terms that contain the identity dropped.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;

use super::closed::free_complex_cohomology;
use super::group::FiniteGroup;
use super::GcohError;
use crate::zlin::{AbelianGroup, Presented, SparseMatrix};

pub const DEFAULT_ORACLE_BUDGET: usize = 4096;
/// Environment variable overriding [`DEFAULT_ORACLE_BUDGET`].
pub const BUDGET_ENV: &str = "STACKCOH_ORACLE_BUDGET";

const CACHED_DEGREES: usize = 16;

pub fn oracle_budget() -> usize {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_ORACLE_BUDGET)
}

#[derive(Debug)]
pub struct BarComplex {
    group: FiniteGroup,
    nontrivial: Vec<usize>,
    pos: Vec<usize>,
    budget: usize,
    invariants: Vec<OnceLock<Vec<BigInt>>>,
}

impl BarComplex {
    pub fn new(group: FiniteGroup) -> Self {
        Self::with_budget(group, oracle_budget())
    }

    pub fn with_budget(group: FiniteGroup, budget: usize) -> Self {
        let e = group.identity();
        let nontrivial: Vec<usize> = group.elements().filter(|&x| x != e).collect();
        let mut pos = vec![usize::MAX; group.order()];
        for (i, &x) in nontrivial.iter().enumerate() {
            pos[x] = i;
        }
        BarComplex {
            group,
            nontrivial,
            pos,
            budget,
            invariants: (0..CACHED_DEGREES).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// `|G|^r`, saturating.
    pub fn size(&self, r: usize) -> usize {
        (0..r).fold(1usize, |acc, _| acc.saturating_mul(self.group.order()))
    }

    pub fn check_budget(&self, r: usize) -> Result<(), GcohError> {
        let size = self.size(r);
        if size > self.budget || r + 1 >= CACHED_DEGREES {
            return Err(GcohError::BudgetExceeded {
                size,
                budget: self.budget,
            });
        }
        Ok(())
    }

    /// Rank of `C^r`.
    pub fn rank(&self, r: usize) -> usize {
        self.nontrivial.len().pow(r as u32)
    }

    /// Basis index of a tuple, or `None` if it contains the identity.
    pub fn encode(&self, tuple: &[usize]) -> Option<usize> {
        let m = self.nontrivial.len();
        let mut idx = 0;
        for &g in tuple {
            let p = self.pos[g];
            if p == usize::MAX {
                return None;
            }
            idx = idx * m + p;
        }
        Some(idx)
    }

    pub fn decode(&self, mut idx: usize, r: usize) -> Vec<usize> {
        let m = self.nontrivial.len();
        let mut t = vec![0; r];
        for k in (0..r).rev() {
            t[k] = self.nontrivial[idx % m];
            idx /= m;
        }
        t
    }

    /// `d^r : C^r -> C^{r+1}`.
    pub fn differential(&self, r: usize) -> SparseMatrix {
        let g = &self.group;
        let rows = (0..self.rank(r + 1))
            .map(|i| {
                let t = self.decode(i, r + 1);
                let mut row = Vec::with_capacity(r + 2);
                if let Some(c) = self.encode(&t[1..]) {
                    row.push((c, 1));
                }
                let mut buf = Vec::with_capacity(r);
                for k in 1..=r {
                    buf.clear();
                    buf.extend_from_slice(&t[..k - 1]);
                    buf.push(g.mul(t[k - 1], t[k]));
                    buf.extend_from_slice(&t[k + 1..]);
                    if let Some(c) = self.encode(&buf) {
                        row.push((c, if k % 2 == 0 { 1 } else { -1 }));
                    }
                }
                if let Some(c) = self.encode(&t[..r]) {
                    row.push((c, if r % 2 == 0 { -1 } else { 1 }));
                }
                row
            })
            .collect();
        SparseMatrix::new(self.rank(r), rows)
    }

    /// Nonzero invariant factors of `d^r`, computed once.
    pub fn invariants(&self, r: usize) -> &[BigInt] {
        self.invariants[r].get_or_init(|| self.differential(r).nonzero_invariants())
    }

    pub fn coboundary(&self, r: usize, f: &[BigInt]) -> Vec<BigInt> {
        self.differential(r).mul_vec(f)
    }

    pub fn cohomology(&self, r: usize, coeff: &AbelianGroup) -> Result<AbelianGroup, GcohError> {
        self.check_budget(r)?;
        let incoming: &[BigInt] = if r == 0 { &[] } else { self.invariants(r - 1) };
        let outgoing = self.invariants(r);
        Ok(free_complex_cohomology(self.rank(r), incoming, outgoing, coeff))
    }

    /// `H^r(G, Z)` with explicit cocycle representatives.
    pub fn classes(&self, r: usize) -> Result<BarClasses, GcohError> {
        self.check_budget(r)?;
        if r == 0 {
            return Ok(BarClasses {
                group: AbelianGroup::free(1),
                presented: None,
                free_skip: 0,
                degree: 0,
            });
        }
        let presented = Presented::new(self.rank(r), &self.differential(r - 1).to_dense());
        let free_skip = presented.group.free_rank();
        if free_skip != self.invariants(r).len() {
            return Err(GcohError::OracleInconsistent(format!(
                "degree {r}: cokernel rank {free_skip} differs from rank of the next differential {}",
                self.invariants(r).len()
            )));
        }
        Ok(BarClasses {
            group: presented.group.torsion(),
            presented: Some(presented),
            free_skip,
            degree: r,
        })
    }
}

/// `H^r(G, Z)` for `r >= 1` is the torsion of `C^r / im d^{r-1}`; degree 0 is `Z`.
#[derive(Clone, Debug)]
pub struct BarClasses {
    pub group: AbelianGroup,
    presented: Option<Presented>,
    free_skip: usize,
    degree: usize,
}

impl BarClasses {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Class of a cocycle in canonical coordinates.
    pub fn coordinates(&self, x: &[BigInt]) -> Result<Vec<BigInt>, GcohError> {
        let Some(p) = &self.presented else {
            return Ok(vec![x[0].clone()]);
        };
        let c = p.coordinates(x);
        if !c[..self.free_skip].iter().all(Zero::is_zero) {
            return Err(GcohError::NotACocycle);
        }
        Ok(c[self.free_skip..].to_vec())
    }

    pub fn representative(&self, i: usize) -> Vec<BigInt> {
        match &self.presented {
            Some(p) => p.representative(self.free_skip + i),
            None => vec![BigInt::from(1)],
        }
    }
}

pub fn bar_cohomology(g: &FiniteGroup, coeff: &AbelianGroup, r: u32) -> Result<AbelianGroup, GcohError> {
    BarComplex::new(g.clone()).cohomology(r as usize, coeff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zlin::{homology_at, AbelianHom, IntegerMatrix, Presentation};

    fn z(n: u64) -> AbelianGroup {
        AbelianGroup::cyclic(n)
    }

    #[test]
    fn differential_squares_to_zero() {
        let b = BarComplex::new(FiniteGroup::dihedral(3).unwrap());
        for r in 0..3 {
            let p = &b.differential(r + 1).to_dense() * &b.differential(r).to_dense();
            assert!(p.is_zero(), "r = {r}");
        }
    }

    #[test]
    fn small_integral_values() {
        let c2 = BarComplex::new(FiniteGroup::cyclic(2).unwrap());
        let zz = AbelianGroup::free(1);
        assert_eq!(c2.cohomology(0, &zz).unwrap(), zz);
        assert!(c2.cohomology(1, &zz).unwrap().is_trivial());
        assert_eq!(c2.cohomology(2, &zz).unwrap(), z(2));
        let d6 = BarComplex::new(FiniteGroup::dihedral(3).unwrap());
        assert_eq!(d6.cohomology(2, &zz).unwrap(), z(2));
    }

    /// Cohomology with `Z/m` coefficients by direct homology of the reduced complex.
    fn brute_force(g: &FiniteGroup, m: u64, r: usize) -> AbelianGroup {
        let b = BarComplex::new(g.clone());
        let pres = |k: usize| Presentation::new(vec![BigInt::from(m); b.rank(k)]);
        let d = |k: usize| AbelianHom::new(pres(k), pres(k + 1), b.differential(k).to_dense()).unwrap();
        let din = if r == 0 {
            AbelianHom::new(Presentation::free(0), pres(0), IntegerMatrix::zeros(1, 0)).unwrap()
        } else {
            d(r - 1)
        };
        homology_at(&din, &d(r)).unwrap().group
    }

    #[test]
    fn universal_coefficients_agree_with_direct_homology() {
        for g in [FiniteGroup::cyclic(2).unwrap(), FiniteGroup::cyclic(3).unwrap(), FiniteGroup::cyclic(4).unwrap()] {
            let b = BarComplex::new(g.clone());
            for m in 2..=4u64 {
                for r in 0..=2 {
                    assert_eq!(b.cohomology(r, &z(m)).unwrap(), brute_force(&g, m, r), "m={m} r={r}");
                }
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let b = BarComplex::with_budget(FiniteGroup::cyclic(5).unwrap(), 100);
        assert!(matches!(
            b.cohomology(3, &AbelianGroup::free(1)),
            Err(GcohError::BudgetExceeded { size: 125, budget: 100 })
        ));
    }

    #[test]
    fn classes_round_trip() {
        let b = BarComplex::new(FiniteGroup::cyclic(4).unwrap());
        let c = b.classes(2).unwrap();
        assert_eq!(c.group, z(4));
        let rep = c.representative(0);
        assert!(b.coboundary(2, &rep).iter().all(Zero::is_zero));
        assert_eq!(c.coordinates(&rep).unwrap(), vec![BigInt::from(1)]);
    }
}
