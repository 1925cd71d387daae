//! The kernel-cokernel exact sequence of a composable pair.

use num_bigint::BigInt;
use serde::Serialize;

use super::group::AbelianGroup;
use super::hom::{hom_analyze, AbelianHom, HomAnalysis};
use super::matrix::IntegerMatrix;
use super::ZlinError;

/// `0 -> ker g -> ker hg -> ker h -> coker g -> coker hg -> coker h -> 0`.
#[derive(Clone, Debug)]
pub struct SixTermSequence {
    /// In order: ker g, ker hg, ker h, coker g, coker hg, coker h.
    pub groups: [AbelianGroup; 6],
    /// The five connecting maps between consecutive groups.
    pub maps: [AbelianHom; 5],
    pub analysis_g: HomAnalysis,
    pub analysis_h: HomAnalysis,
    pub analysis_hg: HomAnalysis,
}

/// Human-readable audit of a six-term sequence.
#[derive(Clone, Debug, Serialize)]
pub struct SixTermRecord {
    pub terms: Vec<String>,
    pub exact: bool,
}

impl SixTermSequence {
    pub fn record(&self) -> SixTermRecord {
        SixTermRecord {
            terms: self.groups.iter().map(ToString::to_string).collect(),
            exact: true,
        }
    }
}

fn columns_to_matrix(cols: Vec<Vec<BigInt>>, rows: usize) -> IntegerMatrix {
    IntegerMatrix::from_columns(&cols, rows)
}

/// Builds the sequence for `g: A -> B`, `h: B -> C` and verifies exactness at
/// every inner term and at both ends.
pub fn kernel_cokernel_sequence(
    g: &AbelianHom,
    h: &AbelianHom,
) -> Result<SixTermSequence, ZlinError> {
    let hg = AbelianHom::compose(h, g)?;
    let ag = hom_analyze(g);
    let ah = hom_analyze(h);
    let ahg = hom_analyze(&hg);

    let n = |grp: &AbelianGroup| grp.ngens();

    let m1 = {
        let cols = (0..n(&ag.kernel))
            .map(|i| {
                let x = ag.kernel_inclusion.matrix().column(i);
                ahg.kernel_coordinates(&x).ok_or(ZlinError::NotExact("ker g into ker hg"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        AbelianHom::between(&ag.kernel, &ahg.kernel, columns_to_matrix(cols, n(&ahg.kernel)))?
    };
    let m2 = {
        let cols = (0..n(&ahg.kernel))
            .map(|i| {
                let x = ahg.kernel_inclusion.matrix().column(i);
                let y = g.apply(&x);
                ah.kernel_coordinates(&y).ok_or(ZlinError::NotExact("ker hg into ker h"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        AbelianHom::between(&ahg.kernel, &ah.kernel, columns_to_matrix(cols, n(&ah.kernel)))?
    };
    let m3 = {
        let cols = (0..n(&ah.kernel))
            .map(|i| {
                let y = ah.kernel_inclusion.matrix().column(i);
                ag.cokernel_coordinates(&y)
            })
            .collect();
        AbelianHom::between(&ah.kernel, &ag.cokernel, columns_to_matrix(cols, n(&ag.cokernel)))?
    };
    let m4 = {
        let cols = (0..n(&ag.cokernel))
            .map(|i| {
                let b = ag.cokernel_representative(i);
                ahg.cokernel_coordinates(&h.apply(&b))
            })
            .collect();
        AbelianHom::between(&ag.cokernel, &ahg.cokernel, columns_to_matrix(cols, n(&ahg.cokernel)))?
    };
    let m5 = {
        let cols = (0..n(&ahg.cokernel))
            .map(|i| {
                let c = ahg.cokernel_representative(i);
                ah.cokernel_coordinates(&c)
            })
            .collect();
        AbelianHom::between(&ahg.cokernel, &ah.cokernel, columns_to_matrix(cols, n(&ah.cokernel)))?
    };

    let maps = [m1, m2, m3, m4, m5];
    let analyses: Vec<HomAnalysis> = maps.iter().map(hom_analyze).collect();
    if !analyses[0].is_injective() {
        return Err(ZlinError::NotExact("ker g -> ker hg is not injective"));
    }
    if !analyses[4].is_surjective() {
        return Err(ZlinError::NotExact("coker hg -> coker h is not surjective"));
    }
    for k in 0..4 {
        if !AbelianHom::compose(&maps[k + 1], &maps[k])?.is_zero() {
            return Err(ZlinError::NotExact("consecutive maps do not compose to zero"));
        }
        let out = &analyses[k + 1];
        for i in 0..out.kernel.ngens() {
            let x = out.kernel_inclusion.matrix().column(i);
            if !analyses[k].in_image(&x) {
                return Err(ZlinError::NotExact("kernel not contained in image"));
            }
        }
    }

    Ok(SixTermSequence {
        groups: [
            ag.kernel.clone(),
            ahg.kernel.clone(),
            ah.kernel.clone(),
            ag.cokernel.clone(),
            ahg.cokernel.clone(),
            ah.cokernel.clone(),
        ],
        maps,
        analysis_g: ag,
        analysis_h: ah,
        analysis_hg: ahg,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zlin::group::Presentation;

    #[test]
    fn multiplication_maps_on_integers() {
        // Z --2--> Z --3--> Z: ker all trivial, cokernels Z/2, Z/6, Z/3.
        let g = AbelianHom::multiplication(Presentation::free(1), &BigInt::from(2));
        let h = AbelianHom::multiplication(Presentation::free(1), &BigInt::from(3));
        let s = kernel_cokernel_sequence(&g, &h).unwrap();
        assert!(s.groups[0].is_trivial() && s.groups[1].is_trivial() && s.groups[2].is_trivial());
        assert_eq!(s.groups[3], AbelianGroup::cyclic(2));
        assert_eq!(s.groups[4], AbelianGroup::cyclic(6));
        assert_eq!(s.groups[5], AbelianGroup::cyclic(3));
    }

    #[test]
    fn torsion_pair() {
        // Z/4 --2--> Z/4 --2--> Z/4
        let p = AbelianGroup::cyclic(4).presentation();
        let g = AbelianHom::multiplication(p.clone(), &BigInt::from(2));
        let s = kernel_cokernel_sequence(&g, &g).unwrap();
        assert_eq!(s.groups[1], AbelianGroup::cyclic(4));
        assert_eq!(s.groups[4], AbelianGroup::cyclic(4));
    }
}
