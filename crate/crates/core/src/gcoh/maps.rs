//! Restriction and transfer on `H^r(-, Z)`.
//!
//! Within the oracle budget both maps are computed on bar cochains. Beyond it,
//! abelian inclusions fall back to laws on character groups in degree 2 and
//! to the generator laws for cyclic groups in every degree.

use num_bigint::BigInt;
use num_traits::Zero;

use super::bar::{BarClasses, BarComplex};
use super::closed::cyclic_cohomology_z;
use super::group::{FiniteGroup, GroupKind, Subgroup};
use super::{GcohError, Provenance};
use crate::zlin::{AbelianGroup, AbelianHom, IntegerMatrix};

#[derive(Clone, Debug)]
pub struct CohomologyMap {
    pub source: AbelianGroup,
    pub target: AbelianGroup,
    pub hom: AbelianHom,
    pub provenance: Provenance,
}

struct Setup {
    big: BarComplex,
    small: BarComplex,
    embedding: Vec<usize>,
    index: usize,
}

fn setup(g: &FiniteGroup, h: &Subgroup) -> Result<Setup, GcohError> {
    let h = g.subgroup(h.elements())?;
    let (hg, embedding) = h.as_group(g);
    Ok(Setup {
        big: BarComplex::new(g.clone()),
        small: BarComplex::new(hg),
        embedding,
        index: h.index_in(g),
    })
}

fn classes(s: &Setup, r: usize) -> Result<(BarClasses, BarClasses), GcohError> {
    s.big.check_budget(r)?;
    s.small.check_budget(r)?;
    Ok((s.big.classes(r)?, s.small.classes(r)?))
}

fn assemble(
    source: &AbelianGroup,
    target: &AbelianGroup,
    cols: Vec<Vec<BigInt>>,
    provenance: Provenance,
) -> Result<CohomologyMap, GcohError> {
    let m = IntegerMatrix::from_columns(&cols, target.ngens());
    Ok(CohomologyMap {
        source: source.clone(),
        target: target.clone(),
        hom: AbelianHom::between(source, target, m)?,
        provenance,
    })
}

/// `res: H^r(G, Z) -> H^r(H, Z)`.
pub fn restriction_map(g: &FiniteGroup, h: &Subgroup, r: u32) -> Result<CohomologyMap, GcohError> {
    let s = setup(g, h)?;
    let r = r as usize;
    let (cg, ch) = match classes(&s, r) {
        Ok(c) => c,
        Err(GcohError::BudgetExceeded { .. }) if fallback_applies(g, h, r) => {
            return fallback(g, h, r, false);
        }
        Err(e) => return Err(e),
    };
    let cols = (0..cg.group.ngens())
        .map(|i| {
            let x = cg.representative(i);
            let y: Vec<BigInt> = (0..s.small.rank(r))
                .map(|k| {
                    let t: Vec<usize> = s.small.decode(k, r).iter().map(|&e| s.embedding[e]).collect();
                    let c = s.big.encode(&t).expect("embedding preserves non-identity elements");
                    x[c].clone()
                })
                .collect();
            ch.coordinates(&y)
        })
        .collect::<Result<Vec<_>, _>>()?;
    assemble(&cg.group, &ch.group, cols, Provenance::BarOracle)
}

/// `cor: H^r(H, Z) -> H^r(G, Z)`.
pub fn transfer_map(g: &FiniteGroup, h: &Subgroup, r: u32) -> Result<CohomologyMap, GcohError> {
    let s = setup(g, h)?;
    let r = r as usize;
    let (cg, ch) = match classes(&s, r) {
        Ok(c) => c,
        Err(GcohError::BudgetExceeded { .. }) if fallback_applies(g, h, r) => {
            return fallback(g, h, r, true);
        }
        Err(e) => return Err(e),
    };
    let hg = s.small.group();
    // rho(h t) = h for right coset representatives t; elements of hg.
    let mut rho = vec![usize::MAX; g.order()];
    for t in g.elements() {
        if rho[t] != usize::MAX {
            continue;
        }
        for (i, &e) in s.embedding.iter().enumerate() {
            rho[g.mul(e, t)] = i;
        }
    }
    let mut left = Vec::with_capacity(s.index);
    let mut seen = vec![false; g.order()];
    for x in g.elements() {
        if seen[x] {
            continue;
        }
        left.push(x);
        for &e in &s.embedding {
            seen[g.mul(x, e)] = true;
        }
    }

    let cols = (0..ch.group.ngens())
        .map(|j| {
            let f = ch.representative(j);
            let mut out = vec![BigInt::zero(); s.big.rank(r)];
            let mut xs = vec![0usize; r + 1];
            let mut args = vec![0usize; r];
            for (k, slot) in out.iter_mut().enumerate() {
                let t = s.big.decode(k, r);
                xs[0] = g.identity();
                for i in 0..r {
                    xs[i + 1] = g.mul(xs[i], t[i]);
                }
                let mut acc = BigInt::zero();
                for &sr in &left {
                    let si = g.inv(sr);
                    let ys: Vec<usize> = xs.iter().map(|&x| rho[g.mul(si, x)]).collect();
                    for i in 0..r {
                        args[i] = hg.mul(hg.inv(ys[i]), ys[i + 1]);
                    }
                    if let Some(c) = s.small.encode(&args) {
                        acc += &f[c];
                    }
                }
                *slot = acc;
            }
            cg.coordinates(&out)
        })
        .collect::<Result<Vec<_>, _>>()?;
    assemble(&ch.group, &cg.group, cols, Provenance::BarOracle)
}

/// Checks `cor ∘ res = [G:H]` as matrices on canonical generators.
pub fn transfer_identity_holds(g: &FiniteGroup, h: &Subgroup, r: u32) -> Result<bool, GcohError> {
    let res = restriction_map(g, h, r)?;
    let tr = transfer_map(g, h, r)?;
    let comp = AbelianHom::compose(&tr.hom, &res.hom)?;
    let idx = AbelianHom::multiplication(res.source.presentation(), &BigInt::from(h.index_in(g)));
    Ok(comp == idx)
}

fn is_digit_group(g: &FiniteGroup) -> bool {
    !matches!(g.kind(), GroupKind::Table)
}

fn fallback_applies(g: &FiniteGroup, h: &Subgroup, r: usize) -> bool {
    let cyclic_in_cyclic = matches!(g.kind(), GroupKind::Cyclic(_));
    let cyclic_in_abelian = is_digit_group(g) && h.is_cyclic_in(g) && r == 2;
    cyclic_in_cyclic || cyclic_in_abelian
}

fn fallback(g: &FiniteGroup, h: &Subgroup, r: usize, transfer: bool) -> Result<CohomologyMap, GcohError> {
    let index = BigInt::from(h.index_in(g));
    if let GroupKind::Cyclic(n) = g.kind() {
        // res sends the generator to the generator; cor sends it to index times it.
        let m = h.order() as u64;
        let big = cyclic_cohomology_z(*n, r as u32);
        let small = cyclic_cohomology_z(m, r as u32);
        let (src, dst) = if transfer { (&small, &big) } else { (&big, &small) };
        let cols: Vec<Vec<BigInt>> = (0..src.ngens())
            .map(|_| {
                let v = if transfer { index.clone() } else { BigInt::from(1) };
                vec![v; dst.ngens()]
            })
            .collect();
        return assemble(src, dst, cols, Provenance::FallbackLaw);
    }
    // Degree 2: H^2(A, Z) is the character group of A, res is restriction of
    // characters and cor(chi)(a) = chi(a^index).
    let factors: Vec<u64> = match g.kind() {
        GroupKind::Abelian(f) => f.clone(),
        _ => unreachable!("checked by fallback_applies"),
    };
    let g0 = h.generator(g).expect("cyclic subgroup");
    let m = h.order() as u64;
    let hdual = AbelianGroup::from_u64_orders(0, &[m]);
    let gdual = AbelianGroup::from_u64_orders(0, &factors);
    // Map on groups, then dualize: f: A -> B with matrix M gives
    // f^(psi_i) = sum_j M_ij a_j / b_i chi_j.
    let (a_orders, b_orders, mtx): (Vec<u64>, Vec<u64>, Vec<Vec<u64>>) = if transfer {
        // power map G -> H, g -> g^index, in coordinates of gen
        let k = h.index_in(g);
        let rows: Vec<u64> = (0..factors.len())
            .map(|j| {
                let mut d = vec![0u64; factors.len()];
                d[j] = 1;
                let e = g.from_digits(&d).expect("digit group");
                let p = g.pow(e, k);
                (0..m).find(|&i| g.pow(g0, i as usize) == p).expect("power lies in H")
            })
            .collect();
        (factors.clone(), vec![m], vec![rows])
    } else {
        // inclusion H -> G
        let d = g.digits(g0).expect("digit group");
        (vec![m], factors.clone(), d.iter().map(|&x| vec![x]).collect())
    };
    // dual map B^ -> A^, column i has entries M_ij a_j / b_i
    let src = if transfer { &hdual } else { &gdual };
    let dst = if transfer { &gdual } else { &hdual };
    if src.is_trivial() || dst.is_trivial() {
        let cols = vec![vec![BigInt::zero(); dst.ngens()]; src.ngens()];
        return assemble(src, dst, cols, Provenance::FallbackLaw);
    }
    let cols: Vec<Vec<BigInt>> = (0..b_orders.len())
        .map(|i| {
            (0..a_orders.len())
                .map(|j| BigInt::from(mtx[i][j]) * a_orders[j] / b_orders[i])
                .collect()
        })
        .collect();
    assemble(src, dst, cols, Provenance::FallbackLaw)
}

impl Subgroup {
    /// Whether this subgroup of `g` is cyclic.
    pub fn is_cyclic_in(&self, g: &FiniteGroup) -> bool {
        self.generator(g).is_some()
    }

    /// An element generating the subgroup, if it is cyclic.
    pub fn generator(&self, g: &FiniteGroup) -> Option<usize> {
        self.elements()
            .iter()
            .copied()
            .find(|&x| g.element_order(x) == self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn restriction_z4_to_z2_is_surjective() {
        let g = FiniteGroup::cyclic(4).unwrap();
        let h = g.generate(&[2]).unwrap();
        let res = restriction_map(&g, &h, 2).unwrap();
        assert_eq!(res.source, AbelianGroup::cyclic(4));
        assert_eq!(res.target, AbelianGroup::cyclic(2));
        assert!(crate::zlin::hom_analyze(&res.hom).is_surjective());
        assert_eq!(res.provenance, Provenance::BarOracle);
    }

    #[test]
    fn identity_subgroup_cases() {
        let g = FiniteGroup::cyclic(6).unwrap();
        let all = g.generate(&[1]).unwrap();
        for r in 0..=3 {
            let res = restriction_map(&g, &all, r).unwrap();
            assert_eq!(res.hom, AbelianHom::identity(res.source.presentation()));
            let tr = transfer_map(&g, &all, r).unwrap();
            assert_eq!(tr.hom, AbelianHom::identity(tr.source.presentation()));
        }
        let triv = g.generate(&[]).unwrap();
        assert!(restriction_map(&g, &triv, 2).unwrap().hom.is_zero());
    }

    #[test]
    fn transfer_identity_small_cases() {
        let g = FiniteGroup::cyclic(4).unwrap();
        let h = g.generate(&[2]).unwrap();
        for r in 0..=3 {
            assert!(transfer_identity_holds(&g, &h, r).unwrap(), "r = {r}");
        }
        let d6 = FiniteGroup::dihedral(3).unwrap();
        let rot = d6.generate(&[1]).unwrap();
        let tr = transfer_map(&d6, &rot, 2).unwrap();
        assert!(tr.hom.is_zero());
        assert!(transfer_identity_holds(&d6, &rot, 2).unwrap());
    }

    #[test]
    fn fallback_matches_bar_on_small_cases() {
        let g = FiniteGroup::abelian(&[2, 4]).unwrap();
        // element with digits (1, 2) has order 2; (0, 1) order 4
        let h = g.generate(&[g.from_digits(&[0, 1]).unwrap()]).unwrap();
        for transfer in [false, true] {
            let law = fallback(&g, &h, 2, transfer).unwrap();
            let bar = if transfer { transfer_map(&g, &h, 2) } else { restriction_map(&g, &h, 2) }.unwrap();
            let a = crate::zlin::hom_analyze(&law.hom);
            let b = crate::zlin::hom_analyze(&bar.hom);
            assert_eq!((a.kernel, a.cokernel), (b.kernel, b.cokernel));
        }
        let c = FiniteGroup::cyclic(8).unwrap();
        let h = c.generate(&[4]).unwrap();
        for r in 0..=3 {
            for transfer in [false, true] {
                let law = fallback(&c, &h, r, transfer).unwrap();
                let bar = if transfer { transfer_map(&c, &h, r as u32) } else { restriction_map(&c, &h, r as u32) }.unwrap();
                let a = crate::zlin::hom_analyze(&law.hom);
                let b = crate::zlin::hom_analyze(&bar.hom);
                assert_eq!((a.kernel, a.cokernel), (b.kernel, b.cokernel), "r={r} transfer={transfer}");
            }
        }
    }
}
