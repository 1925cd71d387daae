//! Twisted nodal curves, through the normalization `Y^ -> Y`.

use num_bigint::BigInt;

use super::descriptor::{Coarse, CurveDescriptor};
use super::orbicurve::stacky_sum;
use super::value::{CohomologyValue, Pipeline};
use super::StackcurveError;
use crate::zlin::{
    hom_analyze, resolve_filtration, AbelianGroup, AbelianHom, Divisible, GroupValue, IntegerMatrix, Presentation,
};

/// `rho : (+)_{Y^ stacky} Z/d -> (+)_{stacky nodes} Z/d`, `(a, b) -> a - b` on
/// the two branches over a node and zero on smooth points.
pub fn node_map(desc: &CurveDescriptor) -> AbelianHom {
    let mut src = Vec::new();
    let mut tgt = Vec::new();
    let mut entries = Vec::new();
    for p in &desc.points {
        let d = BigInt::from(p.index);
        if p.node {
            let row = tgt.len();
            tgt.push(d.clone());
            entries.push((row, src.len(), 1));
            src.push(d.clone());
            entries.push((row, src.len(), -1));
            src.push(d);
        } else {
            src.push(d);
        }
    }
    let mut m = IntegerMatrix::zeros(tgt.len(), src.len());
    for (i, j, v) in entries {
        m.set(i, j, BigInt::from(v));
    }
    AbelianHom::new(Presentation::new(src), Presentation::new(tgt), m).expect("orders match on each branch")
}

/// `Pic(C)` for a connected nodal curve: multidegree, the Jacobians of the
/// components, and one torus factor per independent cycle of the dual graph.
pub fn nodal_coarse_picard(genera: &[u32], node_count: usize) -> GroupValue {
    let b1 = node_count + 1 - genera.len();
    let mut div: Vec<Divisible> = genera.iter().map(|&genus| Divisible::Picard0 { genus }).collect();
    div.extend(std::iter::repeat_n(Divisible::Units, b1));
    GroupValue::new(AbelianGroup::free(genera.len()), div)
}

pub fn cohomology_twisted_nodal(desc: &CurveDescriptor, r: u32) -> Result<CohomologyValue, StackcurveError> {
    let Coarse::NodalProjective { genera, node_count } = &desc.coarse else {
        return Err(StackcurveError::WrongPipeline("coarse curve is not nodal".into()));
    };
    if desc.generic_stabilizer.order() != 1 {
        return Err(StackcurveError::Unsupported(
            "twisted nodal curves have trivial generic stabilizer".into(),
        ));
    }
    let sigma = stacky_sum(&desc.indices());
    let v = match r {
        0 => CohomologyValue::new(0, Pipeline::TwistedNodal, GroupValue::divisible(Divisible::Units)),
        1 => {
            let pic_c = nodal_coarse_picard(genera, *node_count);
            let ext = resolve_filtration(&[pic_c.clone(), GroupValue::exact(sigma.clone())]);
            CohomologyValue::filtration(1, Pipeline::TwistedNodal, ext)
                .with_audit("Pic(C)", pic_c)
                .with_audit("Pic(Y)/Pic(C)", &sigma)
        }
        r => {
            let rho = node_map(desc);
            let a = hom_analyze(&rho);
            let v = if r % 2 == 1 {
                CohomologyValue::exact(r, Pipeline::TwistedNodal, a.kernel.clone())
            } else {
                CohomologyValue::exact(r, Pipeline::TwistedNodal, a.cokernel.clone())
            };
            let v = v.with_audit("ker rho", &a.kernel).with_audit("coker rho", &a.cokernel);
            if a.kernel != sigma {
                v.with_note(format!("ker rho = {} differs from the stacky sum {}", a.kernel, sigma))
            } else {
                v
            }
        }
    };
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stackcurve::descriptor::{validate_descriptor, RawCoarse, RawDescriptor, RawGroup, RawPoint};

    fn nodal(points: &[(u64, bool)]) -> CurveDescriptor {
        validate_descriptor(&RawDescriptor {
            characteristic: 0,
            coarse: RawCoarse {
                kind: "nodal_projective".into(),
                genera: Some(vec![0, 1]),
                node_count: Some(2),
                ..Default::default()
            },
            generic_stabilizer: RawGroup::trivial(),
            stacky_points: points
                .iter()
                .enumerate()
                .map(|(i, &(d, node))| RawPoint {
                    node,
                    ..RawPoint::new(&format!("q{i}"), d)
                })
                .collect(),
            gerbe: "trivial_product".into(),
        })
        .unwrap()
    }

    #[test]
    fn node_and_smooth_point() {
        let d = nodal(&[(3, true), (2, false)]);
        let got: Vec<String> = (2..=5).map(|r| cohomology_twisted_nodal(&d, r).unwrap().to_string()).collect();
        assert_eq!(got, ["0", "Z/6", "0", "Z/6"]);
    }

    #[test]
    fn node_map_kernel_is_diagonal() {
        let d = nodal(&[(4, true)]);
        let a = hom_analyze(&node_map(&d));
        assert_eq!(a.kernel, AbelianGroup::cyclic(4));
        assert!(a.cokernel.is_trivial());
    }

    #[test]
    fn no_stacky_structure_vanishes() {
        let d = nodal(&[]);
        for r in 2..6 {
            assert!(cohomology_twisted_nodal(&d, r).unwrap().exact_group().unwrap().is_trivial());
        }
        let pic = cohomology_twisted_nodal(&d, 1).unwrap();
        assert_eq!(pic.to_string(), "Z^2 + k* + Pic0(g=1)");
    }

    #[test]
    fn picard_is_an_open_extension() {
        let d = nodal(&[(3, true)]);
        let v = cohomology_twisted_nodal(&d, 1).unwrap();
        assert!(!v.is_resolved());
    }
}
