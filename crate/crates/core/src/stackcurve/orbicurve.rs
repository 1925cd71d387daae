//! Smooth orbicurves: Picard group and `H^r(Y, G_m)`.

use num_bigint::BigInt;

use super::descriptor::{Coarse, CurveDescriptor};
use super::value::{CohomologyValue, Pipeline, PicardValue};
use super::StackcurveError;
use crate::gcoh::GcohError;
use crate::zlin::{AbelianGroup, Divisible, GroupValue, IntegerMatrix, Presented};

/// `<h, t_1..t_N | d_l t_l = h>` for projective coarse curves, and
/// `<t_1..t_N | d_l t_l = 0>` for the affine line.
fn discrete_picard(projective: bool, d: &[u64]) -> (Presented, Presented) {
    let off = usize::from(projective);
    let n = d.len() + off;
    let mut rel = IntegerMatrix::zeros(n, d.len());
    for (l, &dl) in d.iter().enumerate() {
        rel.set(off + l, l, BigInt::from(dl));
        if projective {
            rel.set(0, l, BigInt::from(-1));
        }
    }
    let pic = Presented::new(n, &rel);
    let mut with_h = IntegerMatrix::zeros(n, d.len() + off);
    for i in 0..n {
        for j in 0..d.len() {
            with_h.set(i, j, rel.get(i, j).clone());
        }
    }
    if projective {
        with_h.set(0, d.len(), BigInt::from(1));
    }
    (pic, Presented::new(n, &with_h))
}

pub fn picard_orbicurve(desc: &CurveDescriptor) -> Result<PicardValue, StackcurveError> {
    let d = desc.indices();
    let (projective, divisible, coarse_discrete) = match &desc.coarse {
        Coarse::Projective { genus } => (true, Some(Divisible::Picard0 { genus: *genus }), AbelianGroup::free(1)),
        Coarse::AffineLine => (false, None, AbelianGroup::trivial()),
        Coarse::NodalProjective { .. } => {
            return Err(StackcurveError::WrongPipeline(
                "nodal coarse curves use the twisted-nodal pipeline".into(),
            ))
        }
    };
    let (pic, quot) = discrete_picard(projective, &d);
    let expected = AbelianGroup::from_u64_orders(0, &d);
    if quot.group != expected {
        return Err(GcohError::OracleInconsistent(format!(
            "Picard quotient {} differs from {}",
            quot.group, expected
        ))
        .into());
    }
    // the l-th root generator must have order d_l in the quotient
    let off = usize::from(projective);
    for (l, &dl) in d.iter().enumerate() {
        let mut e = vec![BigInt::from(0); d.len() + off];
        e[off + l] = BigInt::from(1);
        let c = quot.coordinates(&e);
        let order = c
            .iter()
            .zip(quot.group.invariant_factors())
            .map(|(x, f)| f / num_integer::Integer::gcd(x, f))
            .fold(BigInt::from(1), |a, b| num_integer::Integer::lcm(&a, &b));
        if order != BigInt::from(dl) {
            return Err(GcohError::OracleInconsistent(format!("root generator {l} has order {order}, not {dl}")).into());
        }
    }
    Ok(PicardValue {
        divisible_part: divisible.filter(|d| !d.is_zero()),
        discrete_part: pic.group,
        coarse_discrete,
        quotient: quot.group,
        provenance: if projective {
            "root presentation <h, t_l | d_l t_l = h>".into()
        } else {
            "root presentation <t_l | d_l t_l = 0>".into()
        },
    })
}

pub(crate) fn stacky_sum(d: &[u64]) -> AbelianGroup {
    AbelianGroup::from_u64_orders(0, d)
}

pub fn cohomology_orbicurve(desc: &CurveDescriptor, r: u32) -> Result<CohomologyValue, StackcurveError> {
    if desc.is_nodal() {
        return Err(StackcurveError::WrongPipeline(
            "nodal coarse curves use the twisted-nodal pipeline".into(),
        ));
    }
    if desc.generic_stabilizer.order() != 1 {
        return Err(StackcurveError::WrongPipeline(
            "nontrivial generic stabilizer; use a gerbe pipeline".into(),
        ));
    }
    let v = match r {
        0 => CohomologyValue::new(0, Pipeline::Orbicurve, GroupValue::divisible(Divisible::Units)),
        1 => {
            let pic = picard_orbicurve(desc)?;
            CohomologyValue::new(1, Pipeline::Orbicurve, pic.value())
                .with_audit("Pic(C)", pic.coarse_value())
                .with_audit("Pic(Y)/Pic(C)", &pic.quotient)
        }
        r if r % 2 == 0 => CohomologyValue::exact(r, Pipeline::Orbicurve, AbelianGroup::trivial()),
        r => CohomologyValue::exact(r, Pipeline::Orbicurve, stacky_sum(&desc.indices())),
    };
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stackcurve::descriptor::{validate_descriptor, RawCoarse, RawDescriptor, RawGroup, RawPoint};

    fn desc(coarse: &str, genus: Option<u32>, d: &[u64]) -> CurveDescriptor {
        validate_descriptor(&RawDescriptor {
            characteristic: 0,
            coarse: RawCoarse {
                kind: coarse.into(),
                genus,
                ..Default::default()
            },
            generic_stabilizer: RawGroup::trivial(),
            stacky_points: d.iter().enumerate().map(|(i, &x)| RawPoint::new(&format!("p{i}"), x)).collect(),
            gerbe: "trivial_product".into(),
        })
        .unwrap()
    }

    #[test]
    fn genus_zero_two_three_picard_is_z() {
        let p = picard_orbicurve(&desc("projective", Some(0), &[2, 3])).unwrap();
        assert_eq!(p.discrete_part, AbelianGroup::free(1));
        assert_eq!(p.quotient, AbelianGroup::from_u64_orders(0, &[2, 3]));
        assert_eq!(p.to_string(), "Z^1");
    }

    #[test]
    fn equal_indices_leave_torsion() {
        let p = picard_orbicurve(&desc("projective", Some(1), &[2, 2])).unwrap();
        assert_eq!(p.discrete_part, AbelianGroup::from_u64_orders(1, &[2]));
        assert_eq!(p.to_string(), "Z^1 + Z/2 + Pic0(g=1)");
    }

    #[test]
    fn affine_line_picard_is_the_root_sum() {
        let p = picard_orbicurve(&desc("affine_line", None, &[3])).unwrap();
        assert_eq!(p.discrete_part, AbelianGroup::cyclic(3));
        assert!(p.divisible_part.is_none());
        assert!(p.coarse_discrete.is_trivial());
    }

    #[test]
    fn no_points_gives_coarse_picard() {
        let p = picard_orbicurve(&desc("projective", Some(2), &[])).unwrap();
        assert_eq!(p.value(), p.coarse_value());
    }

    #[test]
    fn table_for_two_three() {
        let d = desc("projective", Some(0), &[2, 3]);
        let got: Vec<String> = (0..6).map(|r| cohomology_orbicurve(&d, r).unwrap().to_string()).collect();
        assert_eq!(got, ["k*", "Z^1", "0", "Z/6", "0", "Z/6"]);
    }
}
