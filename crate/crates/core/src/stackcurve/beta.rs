//! `H^2(X, G_m)` over the affine line as the kernel of `beta = tau o beta_0`.
//!
//! With trivial coarse Picard group `beta_0` identifies the stacky components
//! with `H^2(G_0, Z)`, so only the transfers at stacky points matter.

use serde::Serialize;

use super::descriptor::{Coarse, CurveDescriptor};
use super::value::{CohomologyValue, Pipeline};
use super::StackcurveError;
use crate::gcoh::{group_cohomology, transfer_map, ModuleDescriptor, Provenance};
use crate::zlin::{
    hom_analyze, kernel_cokernel_sequence, resolve_filtration, AbelianHom, GroupValue, SixTermRecord,
};

#[derive(Clone, Debug, Serialize)]
pub struct TransferAudit {
    pub point: String,
    pub source: String,
    pub target: String,
    /// Columns are images of source generators.
    pub matrix: Vec<Vec<String>>,
    pub provenance: Option<Provenance>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BetaAudit {
    pub transfers: Vec<TransferAudit>,
    /// `0 -> ker b0 -> ker b -> ker t -> coker b0 -> coker b -> coker t -> 0`.
    pub six_term: SixTermRecord,
    pub bottom: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct BetaResult {
    pub value: CohomologyValue,
    pub audit: BetaAudit,
}

fn matrix_strings(h: &AbelianHom) -> Vec<Vec<String>> {
    let m = h.matrix();
    (0..m.cols())
        .map(|j| m.column(j).iter().map(ToString::to_string).collect())
        .collect()
}

fn check_shape(desc: &CurveDescriptor) -> Result<(), StackcurveError> {
    if desc.coarse != Coarse::AffineLine {
        return Err(StackcurveError::WrongPipeline(
            "the beta factorization needs the affine line as coarse curve".into(),
        ));
    }
    Ok(())
}

/// Computes every transfer `H^2(G_0, Z) -> H^2(G_sigma, Z)` and assembles.
pub fn h2_via_beta_factorization(desc: &CurveDescriptor) -> Result<BetaResult, StackcurveError> {
    check_shape(desc)?;
    let mut maps = Vec::new();
    let mut provenance = Vec::new();
    for p in &desc.points {
        let s = p.stabilizer.as_ref().ok_or_else(|| {
            StackcurveError::Unsupported(format!("stabilizer at {} is too large to tabulate", p.label))
        })?;
        let h = s.subgroup(&p.embedding)?;
        let t = transfer_map(s, &h, 2)?;
        maps.push(t.hom);
        provenance.push(Some(t.provenance));
    }
    assemble(desc, maps, provenance)
}

/// As [`h2_via_beta_factorization`] with the transfers given, one per point.
pub fn h2_via_beta_with_transfers(
    desc: &CurveDescriptor,
    transfers: Vec<AbelianHom>,
) -> Result<BetaResult, StackcurveError> {
    check_shape(desc)?;
    if transfers.len() != desc.points.len() {
        return Err(StackcurveError::Unsupported(format!(
            "{} transfers for {} stacky points",
            transfers.len(),
            desc.points.len()
        )));
    }
    let n = transfers.len();
    assemble(desc, transfers, vec![None; n])
}

fn assemble(
    desc: &CurveDescriptor,
    maps: Vec<AbelianHom>,
    provenance: Vec<Option<Provenance>>,
) -> Result<BetaResult, StackcurveError> {
    let tau = AbelianHom::block_diagonal(&maps);
    let beta0 = AbelianHom::identity(tau.domain().clone());
    let seq = kernel_cokernel_sequence(&beta0, &tau)?;
    let ker_tau = hom_analyze(&tau).kernel;
    let bottom = group_cohomology(&desc.generic_stabilizer, &ModuleDescriptor::units(desc.characteristic), 2)?;
    let ext = resolve_filtration(&[bottom.value.clone(), GroupValue::exact(ker_tau.clone())]);
    let transfers = desc
        .points
        .iter()
        .zip(&maps)
        .zip(provenance)
        .map(|((p, m), provenance)| TransferAudit {
            point: p.label.clone(),
            source: m.domain().canonical().to_string(),
            target: m.codomain().canonical().to_string(),
            matrix: matrix_strings(m),
            provenance,
        })
        .collect();
    let six_term = seq.record();
    let value = CohomologyValue::filtration(2, Pipeline::BetaFactorization, ext)
        .with_audit("H^2(G0, Gamma(C, Gm))", &bottom.value)
        .with_audit("ker tau", &ker_tau)
        .with_audit("coker tau", &seq.groups[5])
        .with_audit("six-term exact", six_term.exact);
    Ok(BetaResult {
        value,
        audit: BetaAudit {
            transfers,
            six_term,
            bottom: bottom.value.to_string(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stackcurve::descriptor::{validate_descriptor, RawCoarse, RawDescriptor, RawGroup, RawPoint};
    use crate::zlin::AbelianGroup;

    fn dihedral(m: u64) -> CurveDescriptor {
        let mut pt = RawPoint::new("x", 2);
        pt.stabilizer = Some(RawGroup::dihedral(2 * m));
        pt.embedding = Some((0..m as usize).collect());
        validate_descriptor(&RawDescriptor {
            characteristic: 0,
            coarse: RawCoarse {
                kind: "affine_line".into(),
                ..Default::default()
            },
            generic_stabilizer: RawGroup::cyclic(m),
            stacky_points: vec![pt],
            gerbe: "explicit".into(),
        })
        .unwrap()
    }

    #[test]
    fn dihedral_kernel_is_everything() {
        for m in [3u64, 5] {
            let b = h2_via_beta_factorization(&dihedral(m)).unwrap();
            assert_eq!(b.value.exact_group().unwrap(), AbelianGroup::cyclic(m));
            assert!(b.audit.six_term.exact);
            assert_eq!(b.audit.transfers[0].target, "Z/2");
        }
    }

    #[test]
    fn supplied_zero_transfer() {
        let d = dihedral(3);
        let z = AbelianHom::zero(AbelianGroup::cyclic(3).presentation(), AbelianGroup::cyclic(2).presentation());
        let b = h2_via_beta_with_transfers(&d, vec![z]).unwrap();
        assert_eq!(b.value.exact_group().unwrap(), AbelianGroup::cyclic(3));
        assert!(h2_via_beta_with_transfers(&d, vec![]).is_err());
    }
}
