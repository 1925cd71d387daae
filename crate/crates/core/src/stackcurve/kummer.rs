//! Kummer groups `H^2(Y, mu_n)` and banded gerbes `H^2(Y, G_0)`.

use num_bigint::BigInt;
use serde::Serialize;

use super::descriptor::{Coarse, CurveDescriptor};
use super::orbicurve::picard_orbicurve;
use super::StackcurveError;
use crate::gcoh::GcohError;
use crate::zlin::AbelianGroup;

fn check_tame(desc: &CurveDescriptor, n: u64) -> Result<(), StackcurveError> {
    let p = desc.characteristic;
    if p > 0 && n % p == 0 {
        return Err(GcohError::Wild {
            order: n,
            characteristic: p,
        }
        .into());
    }
    Ok(())
}

/// Discrete part of `Pic(Y)`; divisible summands die modulo `n`.
fn discrete_picard(desc: &CurveDescriptor) -> Result<AbelianGroup, StackcurveError> {
    match &desc.coarse {
        Coarse::NodalProjective { genera, .. } => {
            if desc.points.is_empty() {
                Ok(AbelianGroup::free(genera.len()))
            } else {
                Err(StackcurveError::Unsupported(
                    "Kummer groups of nodal curves with stacky points need the component of each point".into(),
                ))
            }
        }
        _ => Ok(picard_orbicurve(desc)?.discrete_part),
    }
}

/// `H^2(Y, mu_n) = Pic(Y) / n`, using `H^2(Y, G_m) = 0`.
pub fn kummer_h2(desc: &CurveDescriptor, n: u64) -> Result<AbelianGroup, StackcurveError> {
    if desc.generic_stabilizer.order() != 1 {
        return Err(StackcurveError::WrongPipeline(
            "Kummer groups need trivial generic stabilizer".into(),
        ));
    }
    if n == 0 {
        return Err(StackcurveError::Unsupported("n must be positive".into()));
    }
    check_tame(desc, n)?;
    Ok(discrete_picard(desc)?.mod_multiples(&BigInt::from(n)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootDecomposition {
    /// Invariant factors of `G_0`.
    pub factors: Vec<u64>,
    /// `H^2(Y, Z/d_h)` for each factor.
    pub summands: Vec<AbelianGroup>,
    pub h2: AbelianGroup,
    pub psi_surjective: bool,
    pub statement: String,
}

/// `H^2(Y, G_0) = (+)_h Pic(Y) / d_h` for `G_0 = (+)_h Z/d_h`.
pub fn gerbe_root_decomposition(desc: &CurveDescriptor, factors: &[u64]) -> Result<RootDecomposition, StackcurveError> {
    let g0 = AbelianGroup::from_u64_orders(0, factors);
    let inv: Vec<u64> = g0
        .invariant_factors()
        .iter()
        .map(|f| u64::try_from(f).expect("from u64 orders"))
        .collect();
    let y = desc.rigidified();
    let mut summands = Vec::new();
    for &d in &inv {
        summands.push(kummer_h2(&y, d)?);
    }
    let h2 = AbelianGroup::direct_sum_all(&summands);
    let statement = if inv.is_empty() {
        "G0 is trivial; the only gerbe is Y itself".to_string()
    } else {
        format!(
            "every gerbe banded by {g0} is a fiber product of {} root constructions of line bundles",
            inv.len()
        )
    };
    Ok(RootDecomposition {
        factors: inv,
        summands,
        h2,
        psi_surjective: true,
        statement,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stackcurve::descriptor::{validate_descriptor, RawCoarse, RawDescriptor, RawGroup, RawPoint};

    fn desc(coarse: &str, genus: Option<u32>, d: &[u64], p: u64) -> CurveDescriptor {
        validate_descriptor(&RawDescriptor {
            characteristic: p,
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
    fn affine_point_gives_root_group() {
        assert_eq!(kummer_h2(&desc("affine_line", None, &[5], 0), 5).unwrap(), AbelianGroup::cyclic(5));
    }

    #[test]
    fn projective_curve_gives_degree_mod_n() {
        for n in [2, 3, 7] {
            assert_eq!(kummer_h2(&desc("projective", Some(2), &[], 0), n).unwrap(), AbelianGroup::cyclic(n));
        }
        assert!(kummer_h2(&desc("projective", Some(2), &[], 0), 1).unwrap().is_trivial());
    }

    #[test]
    fn wild_n_is_rejected() {
        assert!(kummer_h2(&desc("projective", Some(0), &[], 3), 6).is_err());
    }

    #[test]
    fn root_decomposition_examples() {
        let y = desc("affine_line", None, &[3], 0);
        let r = gerbe_root_decomposition(&y, &[3]).unwrap();
        assert_eq!(r.h2, AbelianGroup::cyclic(3));
        assert!(r.psi_surjective);
        assert!(gerbe_root_decomposition(&y, &[]).unwrap().h2.is_trivial());
        let p1 = desc("projective", Some(0), &[2], 0);
        assert_eq!(gerbe_root_decomposition(&p1, &[2, 2]).unwrap().h2, AbelianGroup::cyclic(2).power(2));
    }
}
