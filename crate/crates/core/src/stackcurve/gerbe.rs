//! Gerbes over orbicurves: the trivial product `Y x BG_0` and cyclic towers.

use num_bigint::BigInt;
use serde::Serialize;

use super::descriptor::{CurveDescriptor, Gerbe};
use super::orbicurve::{picard_orbicurve, stacky_sum};
use super::value::{CohomologyValue, Pipeline};
use super::StackcurveError;
use crate::gcoh::{abelian_cohomology, abelian_cohomology_z, PeriodicComplex};
use crate::zlin::{
    hom_analyze, resolve_extension, resolve_filtration, AbelianGroup, AbelianHom, Divisible, ExtensionResult,
    GroupValue, IntegerMatrix, SplitCriterion,
};

/// One graded piece of an assembled filtration, with how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PieceAudit {
    pub label: String,
    pub value: GroupValue,
    pub method: String,
}

impl PieceAudit {
    fn new(label: String, value: GroupValue, method: &str) -> Self {
        PieceAudit {
            label,
            value,
            method: method.into(),
        }
    }
}

fn abelian_factors(desc: &CurveDescriptor) -> Result<Vec<u64>, StackcurveError> {
    desc.generic_stabilizer
        .abelian_invariants()
        .ok_or_else(|| StackcurveError::Unsupported("generic stabilizer is not abelian".into()))
}

fn non_nodal(desc: &CurveDescriptor) -> Result<(), StackcurveError> {
    if desc.is_nodal() {
        return Err(StackcurveError::Unsupported("gerbes over nodal curves".into()));
    }
    Ok(())
}

/// `H^r(G_0, M)` for `M = D + Pic0(g)`, `r >= 1`.
fn cohomology_of_picard(f: &[u64], pic: &GroupValue, r: u32) -> AbelianGroup {
    let mut out = abelian_cohomology(f, &pic.group, r);
    for d in &pic.divisible {
        let k = match d {
            Divisible::Units => 1,
            Divisible::Picard0 { genus } => 2 * *genus as usize,
        };
        out = out.direct_sum(&abelian_cohomology_z(f, r + 1).power(k));
    }
    out
}

/// `coker(H^n(G_0, Z) -> H^n(G_0 x Z/d, Z))`, pulling back along the
/// projection. On the tensor-product resolution this is the inclusion of the
/// multi-indices whose last entry is `0`.
pub fn quotient_term(factors: &[u64], d: u64, n: u32) -> Result<AbelianGroup, StackcurveError> {
    let n = n as usize;
    let small = PeriodicComplex::new(factors);
    let mut big_factors = factors.to_vec();
    big_factors.push(d);
    let big = PeriodicComplex::new(&big_factors);
    let cs = small.classes(n);
    let cb = big.classes(n);
    let big_basis = big.basis(n);
    let small_basis = small.basis(n);
    let cols = (0..cs.group.ngens())
        .map(|i| {
            let rep = cs.representative(i);
            let mut v = vec![BigInt::from(0); big_basis.len()];
            for (k, idx) in small_basis.iter().enumerate() {
                let mut t = idx.clone();
                t.push(0);
                let pos = big_basis.binary_search(&t).expect("row (.., 0) lies in the total complex");
                v[pos] = rep[k].clone();
            }
            cb.coordinates(&v).ok_or_else(|| {
                StackcurveError::Group(crate::gcoh::GcohError::OracleInconsistent(
                    "inflated cocycle is not a cocycle".into(),
                ))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let m = IntegerMatrix::from_columns(&cols, cb.group.ngens());
    let inf = AbelianHom::between(&cs.group, &cb.group, m)?;
    let a = hom_analyze(&inf);
    if !a.is_injective() {
        return Err(crate::gcoh::GcohError::OracleInconsistent("inflation is not injective".into()).into());
    }
    Ok(a.cokernel)
}

/// The three graded pieces of `H^r(Y x BG_0, G_m)` for `r >= 2`, bottom up.
pub fn trivial_gerbe_pieces(desc: &CurveDescriptor, r: u32) -> Result<Vec<PieceAudit>, StackcurveError> {
    non_nodal(desc)?;
    let f = abelian_factors(desc)?;
    let pic = picard_orbicurve(desc)?.value();
    let a = abelian_cohomology_z(&f, r + 1);
    let b = cohomology_of_picard(&f, &pic, r - 1);
    let mut q = AbelianGroup::trivial();
    for &d in &desc.indices() {
        q = q.direct_sum(&quotient_term(&f, d, r - 1)?);
    }
    Ok(vec![
        PieceAudit::new(
            format!("H^{r}(G0, Gamma(C, Gm))"),
            a.into(),
            "H^{r+1}(G0, Z) by the periodic resolution",
        ),
        PieceAudit::new(
            format!("H^{}(G0, Pic Y)", r - 1),
            GroupValue::exact(b),
            "fg part by the periodic resolution, Pic0 by the divisible shift",
        ),
        PieceAudit::new(
            format!("(+)_l H^{}(G0 x Z/d_l, Z) / H^{}(G0, Z)", r - 1, r - 1),
            GroupValue::exact(q),
            "cokernel of the inflation on the tensor-product resolution",
        ),
    ])
}

fn audited(mut v: CohomologyValue, pieces: &[PieceAudit]) -> CohomologyValue {
    for p in pieces {
        v = v.with_audit(&p.label, &p.value);
    }
    v
}

pub fn cohomology_trivial_gerbe(desc: &CurveDescriptor, r: u32) -> Result<CohomologyValue, StackcurveError> {
    non_nodal(desc)?;
    let f = abelian_factors(desc)?;
    let g0 = GroupValue::exact(AbelianGroup::from_u64_orders(0, &f));
    let v = match r {
        0 => CohomologyValue::new(0, Pipeline::TrivialGerbe, GroupValue::divisible(Divisible::Units)),
        1 => {
            // pulling back along Y x BG_0 -> BG_0 splits off Hom(G_0, k*)
            let pic = picard_orbicurve(desc)?.value();
            let ext = ExtensionResult::split_by(&pic, &g0, SplitCriterion::Retraction);
            CohomologyValue::filtration(1, Pipeline::TrivialGerbe, ext)
                .with_audit("Pic(Y)", &pic)
                .with_audit("Hom(G0, k*)", &g0)
        }
        r => {
            let pieces = trivial_gerbe_pieces(desc, r)?;
            let (a, b, q) = (&pieces[0].value, &pieces[1].value, &pieces[2].value);
            // a k-point of Y gives BG_0 -> Y x BG_0 -> BG_0, so the bottom piece is a summand
            let upper = resolve_extension(b, q);
            let all: Vec<GroupValue> = pieces.iter().map(|p| p.value.clone()).collect();
            let ext = if upper.resolved {
                let mut criteria = vec![SplitCriterion::Retraction];
                criteria.extend(upper.criteria.iter().copied());
                let group = a.direct_sum(upper.group.as_ref().expect("resolved"));
                ExtensionResult::resolved(group, all, criteria)
            } else {
                let mut e = ExtensionResult::unresolved(all);
                e.criteria = vec![SplitCriterion::Retraction];
                e
            };
            audited(CohomologyValue::filtration(r, Pipeline::TrivialGerbe, ext), &pieces)
        }
    };
    Ok(v)
}

/// `H^0` and `H^1` from the general assembly, for any generic stabilizer.
pub(crate) fn low_degree(desc: &CurveDescriptor, r: u32, pipeline: Pipeline) -> Result<CohomologyValue, StackcurveError> {
    non_nodal(desc)?;
    match r {
        0 => Ok(CohomologyValue::new(0, pipeline, GroupValue::divisible(Divisible::Units))),
        1 => {
            let pic = picard_orbicurve(desc)?.value();
            let chars = GroupValue::exact(desc.generic_stabilizer.abelianization());
            let ext = resolve_extension(&pic, &chars);
            Ok(CohomologyValue::filtration(1, pipeline, ext)
                .with_audit("Pic(Y)", &pic)
                .with_audit("Hom(G0, k*)", &chars))
        }
        _ => Err(StackcurveError::Unsupported(format!("degree {r} is not a low degree"))),
    }
}

pub fn cohomology_cyclic_tower(desc: &CurveDescriptor, r: u32) -> Result<CohomologyValue, StackcurveError> {
    if desc.gerbe != Gerbe::CyclicTower {
        return Err(StackcurveError::WrongPipeline("descriptor is not a cyclic tower".into()));
    }
    non_nodal(desc)?;
    let n = desc.generic_stabilizer.order() as u64;
    if r <= 1 {
        return low_degree(desc, r, Pipeline::CyclicTower);
    }
    if r % 2 == 0 {
        let mut product = desc.clone();
        product.gerbe = Gerbe::TrivialProduct;
        let mut v = cohomology_trivial_gerbe(&product, 2)?;
        v.degree = r;
        v.pipeline = Pipeline::CyclicTower;
        return Ok(v.with_note("even degrees agree with H^2 of Y x BG0"));
    }
    let pic = picard_orbicurve(desc)?.value();
    let f: Vec<u64> = if n == 1 { Vec::new() } else { vec![n] };
    let h2 = GroupValue::exact(cohomology_of_picard(&f, &pic, 2));
    let sigma = GroupValue::exact(stacky_sum(&desc.indices()));
    let chars = GroupValue::exact(AbelianGroup::from_u64_orders(0, &[n]));
    let ext = resolve_filtration(&[h2.clone(), sigma.clone(), chars.clone()]);
    Ok(CohomologyValue::filtration(r, Pipeline::CyclicTower, ext)
        .with_audit("H^2(G0, Pic Y)", h2)
        .with_audit("(+)_l Z/d_l", sigma)
        .with_audit("Hom(G0, k*)", chars))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stackcurve::descriptor::{validate_descriptor, RawCoarse, RawDescriptor, RawGroup, RawPoint};

    fn desc(coarse: &str, genus: Option<u32>, g0: RawGroup, d: &[u64], gerbe: &str) -> CurveDescriptor {
        validate_descriptor(&RawDescriptor {
            characteristic: 0,
            coarse: RawCoarse {
                kind: coarse.into(),
                genus,
                ..Default::default()
            },
            generic_stabilizer: g0,
            stacky_points: d.iter().enumerate().map(|(i, &x)| RawPoint::new(&format!("p{i}"), x)).collect(),
            gerbe: gerbe.into(),
        })
        .unwrap()
    }

    #[test]
    fn quotient_term_for_trivial_g0_is_cyclic_cohomology() {
        assert_eq!(quotient_term(&[], 5, 2).unwrap(), AbelianGroup::cyclic(5));
        assert!(quotient_term(&[], 5, 3).unwrap().is_trivial());
    }

    #[test]
    fn quotient_term_of_square() {
        // H^2((Z/p)^2, Z) = (Z/p)^2 and H^2(Z/p, Z) = Z/p
        assert_eq!(quotient_term(&[3], 3, 2).unwrap(), AbelianGroup::cyclic(3));
        // H^3((Z/p)^2, Z) = Z/p, H^3(Z/p, Z) = 0
        assert_eq!(quotient_term(&[2], 2, 3).unwrap(), AbelianGroup::cyclic(2));
    }

    #[test]
    fn genus_one_table() {
        let d = desc("projective", Some(1), RawGroup::cyclic(2), &[], "trivial_product");
        for r in 2..=5 {
            let v = cohomology_trivial_gerbe(&d, r).unwrap();
            assert_eq!(v.exact_group().unwrap(), AbelianGroup::cyclic(2).power(2), "r = {r}");
        }
    }

    #[test]
    fn trivial_generic_stabilizer_matches_orbicurve() {
        let g = desc("projective", Some(0), RawGroup::trivial(), &[2, 3, 4], "trivial_product");
        for r in 2..=5 {
            let a = cohomology_trivial_gerbe(&g, r).unwrap();
            let b = crate::stackcurve::cohomology_orbicurve(&g, r).unwrap();
            assert!(a.same_as(&b), "r = {r}: {a} vs {b}");
        }
    }

    #[test]
    fn affine_companion_of_dihedral_vanishes() {
        for m in [3, 5] {
            let d = desc("affine_line", None, RawGroup::cyclic(m), &[2], "trivial_product");
            assert!(cohomology_trivial_gerbe(&d, 2).unwrap().exact_group().unwrap().is_trivial());
        }
    }

    #[test]
    fn tower_odd_degrees_have_order_p_cubed() {
        for p in [2u64, 3] {
            let d = desc("affine_line", None, RawGroup::cyclic(p), &[p], "cyclic_tower");
            for r in [3, 5] {
                let v = cohomology_cyclic_tower(&d, r).unwrap();
                assert!(!v.is_resolved());
                assert_eq!(v.order(), Some(BigInt::from(p * p * p)));
            }
            let h1 = cohomology_cyclic_tower(&d, 1).unwrap();
            assert!(!h1.is_resolved());
            assert_eq!(h1.order(), Some(BigInt::from(p * p)));
            let h2 = cohomology_cyclic_tower(&d, 2).unwrap();
            let h4 = cohomology_cyclic_tower(&d, 4).unwrap();
            assert!(h2.same_as(&h4));
        }
    }

    #[test]
    fn companion_odd_degree_has_three_pieces_of_order_p() {
        let d = desc("affine_line", None, RawGroup::cyclic(3), &[3], "trivial_product");
        let v = cohomology_trivial_gerbe(&d, 3).unwrap();
        let pieces = v.pieces();
        assert_eq!(pieces.len(), 3);
        assert!(pieces.iter().all(|p| p.order() == Some(BigInt::from(3))));
        assert_eq!(v.order(), Some(BigInt::from(27)));
    }
}
