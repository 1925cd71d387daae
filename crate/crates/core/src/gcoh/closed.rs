//! Closed forms and periodic-resolution complexes for cyclic and abelian groups.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::group::FiniteGroup;
use super::module::ModuleDescriptor;
use super::GcohError;
use crate::zlin::snf::Smith;
use crate::zlin::{homology_at, AbelianGroup, AbelianHom, GroupValue, IntegerMatrix, Presentation, Subquotient};

/// `H^r(Z/d, M)` with trivial action.
pub fn cyclic_cohomology(d: u64, m: &ModuleDescriptor, r: u32) -> Result<GroupValue, GcohError> {
    if d == 0 {
        return Err(GcohError::InvalidGroup("cyclic order must be positive".into()));
    }
    m.check_tame(d)?;
    Ok(if r == 0 {
        m.value()
    } else if r % 2 == 1 {
        GroupValue::exact(m.torsion(d))
    } else {
        GroupValue::exact(m.mod_multiples(d))
    })
}

/// `H^r` of a cochain complex of free modules with coefficients in `M`,
/// from the rank of `C^r` and the nonzero invariant factors of the
/// differentials into and out of degree `r`.
pub(crate) fn free_complex_cohomology(
    rank: usize,
    incoming: &[BigInt],
    outgoing: &[BigInt],
    coeff: &AbelianGroup,
) -> AbelianGroup {
    let beta = rank - incoming.len() - outgoing.len();
    let mut parts = vec![coeff.power(beta)];
    for e in incoming.iter().filter(|e| !e.is_one()) {
        parts.push(coeff.mod_multiples(e));
    }
    for e in outgoing.iter().filter(|e| !e.is_one()) {
        parts.push(coeff.torsion_of(e));
    }
    AbelianGroup::direct_sum_all(&parts)
}

/// Nonzero invariant factors of an integer matrix.
pub(crate) fn nonzero_invariants(m: &IntegerMatrix) -> Vec<BigInt> {
    let s = Smith::diagonal_only(m);
    s.diag[..s.rank].to_vec()
}

/// `Hom_G(P, Z)` for `P` the tensor product of the periodic resolutions of the
/// cyclic factors of an abelian group.
///
/// Degree `n` has one basis vector per multi-index `(i_1, .., i_k)` summing to
/// `n`; factor `j` contributes `0` from even and `f_j` from odd degrees.
#[derive(Clone, Debug)]
pub struct PeriodicComplex {
    factors: Vec<u64>,
}

impl PeriodicComplex {
    pub fn new(factors: &[u64]) -> Self {
        PeriodicComplex {
            factors: factors.to_vec(),
        }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    /// Multi-indices of total degree `n`, in lexicographic order.
    pub fn basis(&self, n: usize) -> Vec<Vec<usize>> {
        fn rec(k: usize, n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if k == 1 {
                prefix.push(n);
                out.push(prefix.clone());
                prefix.pop();
                return;
            }
            for i in 0..=n {
                prefix.push(i);
                rec(k - 1, n - i, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        match self.factors.len() {
            0 => {
                if n == 0 {
                    out.push(Vec::new());
                }
            }
            k => rec(k, n, &mut Vec::new(), &mut out),
        }
        out
    }

    pub fn rank(&self, n: usize) -> usize {
        self.basis(n).len()
    }

    /// `d^n : C^n -> C^{n+1}`, shape `rank(n+1) x rank(n)`.
    pub fn differential(&self, n: usize) -> IntegerMatrix {
        let src = self.basis(n);
        let dst = self.basis(n + 1);
        let mut m = IntegerMatrix::zeros(dst.len(), src.len());
        for (c, idx) in src.iter().enumerate() {
            let mut sign_deg = 0usize;
            for j in 0..idx.len() {
                if idx[j] % 2 == 1 {
                    let mut t = idx.clone();
                    t[j] += 1;
                    let row = dst.binary_search(&t).expect("basis is sorted");
                    let v = BigInt::from(self.factors[j]);
                    m.set(row, c, if sign_deg % 2 == 0 { v } else { -v });
                }
                sign_deg += idx[j];
            }
        }
        m
    }

    pub fn cohomology(&self, r: usize, coeff: &AbelianGroup) -> AbelianGroup {
        let incoming = if r == 0 {
            Vec::new()
        } else {
            nonzero_invariants(&self.differential(r - 1))
        };
        let outgoing = nonzero_invariants(&self.differential(r));
        free_complex_cohomology(self.rank(r), &incoming, &outgoing, coeff)
    }

    /// `H^r(G, Z)` as a subquotient of `C^r`, with class coordinates.
    pub fn classes(&self, r: usize) -> Subquotient {
        let dout = AbelianHom::new(
            Presentation::free(self.rank(r)),
            Presentation::free(self.rank(r + 1)),
            self.differential(r),
        )
        .expect("free source");
        let din = if r == 0 {
            AbelianHom::zero(Presentation::free(0), Presentation::free(self.rank(0)))
        } else {
            AbelianHom::new(
                Presentation::free(self.rank(r - 1)),
                Presentation::free(self.rank(r)),
                self.differential(r - 1),
            )
            .expect("free source")
        };
        homology_at(&din, &dout).expect("d^2 = 0")
    }
}

/// `H^r(G, Z)` for `G` abelian with the given invariant factors.
pub fn abelian_cohomology_z(factors: &[u64], r: u32) -> AbelianGroup {
    PeriodicComplex::new(factors).cohomology(r as usize, &AbelianGroup::free(1))
}

/// `H^r(G, M)` for `G` abelian and `M` finitely generated.
pub fn abelian_cohomology(factors: &[u64], coeff: &AbelianGroup, r: u32) -> AbelianGroup {
    PeriodicComplex::new(factors).cohomology(r as usize, coeff)
}

/// `Hom(G, k*)`, isomorphic to the abelianization under tameness.
pub fn hom_to_units(g: &FiniteGroup, characteristic: u64) -> Result<AbelianGroup, GcohError> {
    check_tame(g, characteristic)?;
    Ok(g.abelianization())
}

pub fn check_tame(g: &FiniteGroup, characteristic: u64) -> Result<(), GcohError> {
    let n = g.order() as u64;
    if characteristic > 0 && n > 1 && n.gcd(&characteristic) != 1 {
        return Err(GcohError::Wild {
            order: n,
            characteristic,
        });
    }
    Ok(())
}

/// `H^r(G, M)` for abelian `G` and divisible `M`, `r >= 1`, by the shift
/// `H^r(G, M) = H^{r+1}(G, Z)^k`.
pub fn divisible_cohomology(
    g: &FiniteGroup,
    coeff: &ModuleDescriptor,
    r: u32,
) -> Result<AbelianGroup, GcohError> {
    let k = coeff
        .shift_multiplicity()
        .ok_or_else(|| GcohError::Unsupported("coefficients are not divisible".into()))?;
    if r == 0 {
        return Err(GcohError::Unsupported("degree 0 of a divisible module is not finite".into()));
    }
    check_tame(g, coeff.characteristic())?;
    let factors = g
        .abelian_invariants()
        .ok_or_else(|| GcohError::Unsupported("group is not abelian".into()))?;
    Ok(abelian_cohomology_z(&factors, r + 1).power(k))
}

/// `H^r(Z/d, Z)`.
pub fn cyclic_cohomology_z(d: u64, r: u32) -> AbelianGroup {
    if r == 0 {
        AbelianGroup::free(1)
    } else if r % 2 == 1 || d == 1 {
        AbelianGroup::trivial()
    } else {
        AbelianGroup::cyclic(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> AbelianGroup {
        AbelianGroup::cyclic(n)
    }

    #[test]
    fn cyclic_table() {
        let zm = ModuleDescriptor::integers();
        for d in 2..=7u64 {
            assert_eq!(cyclic_cohomology(d, &zm, 2).unwrap(), z(d).into());
            assert!(cyclic_cohomology(d, &zm, 1).unwrap().is_trivial());
            assert_eq!(
                cyclic_cohomology(d, &ModuleDescriptor::units(0), 3).unwrap(),
                z(d).into()
            );
            assert!(cyclic_cohomology(d, &ModuleDescriptor::units(0), 2).unwrap().is_trivial());
        }
        let pic = ModuleDescriptor::picard_zero(3, 0);
        assert_eq!(
            cyclic_cohomology(2, &pic, 1).unwrap(),
            AbelianGroup::from_u64_orders(0, &[2; 6]).into()
        );
        assert!(cyclic_cohomology(4, &ModuleDescriptor::units(2), 1).is_err());
    }

    #[test]
    fn periodic_matches_cyclic_closed_form() {
        for d in 1..=8u64 {
            let f: Vec<u64> = if d == 1 { vec![] } else { vec![d] };
            for r in 0..=6 {
                assert_eq!(abelian_cohomology_z(&f, r), cyclic_cohomology_z(d, r), "d={d} r={r}");
            }
        }
    }

    #[test]
    fn klein_four() {
        assert_eq!(abelian_cohomology_z(&[2, 2], 2), AbelianGroup::from_u64_orders(0, &[2, 2]));
        assert_eq!(abelian_cohomology_z(&[2, 2], 3), z(2));
        assert_eq!(abelian_cohomology_z(&[2, 2], 1), AbelianGroup::trivial());
    }

    #[test]
    fn differentials_square_to_zero() {
        let c = PeriodicComplex::new(&[2, 6, 12]);
        for n in 0..5 {
            let p = &c.differential(n + 1) * &c.differential(n);
            assert!(p.is_zero());
        }
    }

    #[test]
    fn divisible_shift() {
        let g = FiniteGroup::cyclic(5).unwrap();
        assert_eq!(divisible_cohomology(&g, &ModuleDescriptor::units(0), 1).unwrap(), z(5));
        assert!(divisible_cohomology(&g, &ModuleDescriptor::picard_zero(2, 0), 2).unwrap().is_trivial());
        let v = FiniteGroup::abelian(&[2, 2]).unwrap();
        assert_eq!(
            divisible_cohomology(&v, &ModuleDescriptor::units(0), 1).unwrap(),
            AbelianGroup::from_u64_orders(0, &[2, 2])
        );
    }

    #[test]
    fn units_hom() {
        assert_eq!(hom_to_units(&FiniteGroup::cyclic(7).unwrap(), 0).unwrap(), z(7));
        assert_eq!(hom_to_units(&FiniteGroup::dihedral(3).unwrap(), 0).unwrap(), z(2));
        assert!(hom_to_units(&FiniteGroup::trivial(), 0).unwrap().is_trivial());
        assert!(hom_to_units(&FiniteGroup::cyclic(6).unwrap(), 3).is_err());
    }
}
