//! Constructive check that `Phi_2 : H^p(G, H^q(J)) -> H^{p+2}(G, H^{q-1}(J))`
//! vanishes for a complex `J` with trivial action.
//!
//! For each generator: take a cocycle `f`, lift its values to cycles of
//! `J^q`, apply the group differential, divide by `delta^{q-1}` to get `nu`,
//! apply the group differential again and project to `H^{q-1}(J)`.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use super::bar::BarComplex;
use super::group::FiniteGroup;
use super::GcohError;
use crate::zlin::{
    hom_analyze, homology_at, AbelianGroup, AbelianHom, IntegerMatrix, Presentation, Subquotient, ZlinError,
};

/// `J^0 -> J^1 -> ... -> J^n` with trivial group action.
#[derive(Clone, Debug)]
pub struct CochainComplexSpec {
    terms: Vec<AbelianGroup>,
    differentials: Vec<AbelianHom>,
}

impl CochainComplexSpec {
    pub fn new(terms: Vec<AbelianGroup>, differentials: Vec<AbelianHom>) -> Result<Self, GcohError> {
        if terms.is_empty() || differentials.len() + 1 != terms.len() {
            return Err(GcohError::Unsupported(format!(
                "{} terms need {} differentials, got {}",
                terms.len(),
                terms.len().saturating_sub(1),
                differentials.len()
            )));
        }
        for (i, d) in differentials.iter().enumerate() {
            if d.domain() != &terms[i].presentation() || d.codomain() != &terms[i + 1].presentation() {
                return Err(ZlinError::NotComposable.into());
            }
        }
        for w in differentials.windows(2) {
            if !AbelianHom::compose(&w[1], &w[0])?.is_zero() {
                return Err(ZlinError::NotAComplex.into());
            }
        }
        Ok(CochainComplexSpec {
            terms,
            differentials,
        })
    }

    /// All differentials zero.
    pub fn zero(terms: Vec<AbelianGroup>) -> Self {
        let differentials = terms
            .windows(2)
            .map(|w| AbelianHom::zero(w[0].presentation(), w[1].presentation()))
            .collect();
        CochainComplexSpec {
            terms,
            differentials,
        }
    }

    pub fn terms(&self) -> &[AbelianGroup] {
        &self.terms
    }

    pub fn differentials(&self) -> &[AbelianHom] {
        &self.differentials
    }

    /// `delta^q`, with zero maps off the ends.
    fn delta(&self, q: isize) -> AbelianHom {
        let n = self.terms.len() as isize;
        let term = |i: isize| {
            if i < 0 || i >= n {
                Presentation::free(0)
            } else {
                self.terms[i as usize].presentation()
            }
        };
        if q >= 0 && q + 1 < n {
            self.differentials[q as usize].clone()
        } else {
            AbelianHom::zero(term(q), term(q + 1))
        }
    }

    pub fn cohomology(&self, q: usize) -> Subquotient {
        homology_at(&self.delta(q as isize - 1), &self.delta(q as isize)).expect("checked complex")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Phi2Report {
    pub p: u32,
    pub q: u32,
    pub source: String,
    pub target: String,
    /// Columns are images of source generators in target coordinates.
    pub matrix: Vec<Vec<String>>,
    pub is_zero: bool,
}

/// `d^r ⊗ id` on cochains with values in a finite group given by `coeff`.
fn coefficient_differential(bar: &BarComplex, r: usize, coeff: &Presentation) -> AbelianHom {
    let k = coeff.ngens();
    let d = bar.differential(r);
    let mut m = IntegerMatrix::zeros(bar.rank(r + 1) * k, bar.rank(r) * k);
    for row in 0..d.rows() {
        for &(c, v) in d.row(row) {
            for a in 0..k {
                let cur = m.get(row * k + a, c * k + a) + v;
                m.set(row * k + a, c * k + a, cur);
            }
        }
    }
    let dom = Presentation::direct_sum(&vec![coeff.clone(); bar.rank(r)]);
    let cod = Presentation::direct_sum(&vec![coeff.clone(); bar.rank(r + 1)]);
    AbelianHom::new(dom, cod, m).expect("trivial action commutes with relations")
}

fn group_classes(bar: &BarComplex, r: usize, coeff: &Presentation) -> Subquotient {
    let dout = coefficient_differential(bar, r, coeff);
    let din = if r == 0 {
        AbelianHom::zero(Presentation::free(0), dout.domain().clone())
    } else {
        coefficient_differential(bar, r - 1, coeff)
    };
    homology_at(&din, &dout).expect("d^2 = 0")
}

/// Applies the bar differential to a cochain with values in `Z^k`.
fn apply_bar(bar: &BarComplex, r: usize, f: &[Vec<BigInt>], k: usize) -> Vec<Vec<BigInt>> {
    let d = bar.differential(r);
    (0..d.rows())
        .map(|row| {
            let mut acc = vec![BigInt::zero(); k];
            for &(c, v) in d.row(row) {
                for a in 0..k {
                    acc[a] += &f[c][a] * v;
                }
            }
            acc
        })
        .collect()
}

pub fn phi2_vanishing_check(
    g: &FiniteGroup,
    j: &CochainComplexSpec,
    p: u32,
    q: u32,
) -> Result<Phi2Report, GcohError> {
    if q == 0 || q as usize >= j.terms.len() {
        return Err(GcohError::Unsupported(format!("q = {q} out of range")));
    }
    let bar = BarComplex::new(g.clone());
    bar.check_budget(p as usize + 2)?;
    let (pu, qu) = (p as usize, q as usize);
    let hq = j.cohomology(qu);
    let hq1 = j.cohomology(qu - 1);
    let hq_pres = hq.group.presentation();
    let hq1_pres = hq1.group.presentation();
    let source = group_classes(&bar, pu, &hq_pres);
    let target = group_classes(&bar, pu + 2, &hq1_pres);
    let delta_prev = hom_analyze(&j.delta(qu as isize - 1));
    let jq = if qu < j.terms.len() { j.terms[qu].presentation() } else { Presentation::free(0) };
    let jq1 = j.terms[qu - 1].presentation();
    let kq = hq_pres.ngens();

    let mut columns = Vec::new();
    for i in 0..source.group.ngens() {
        let f = source.representative(i);
        // lift each value to a cycle of J^q
        let lifted: Vec<Vec<BigInt>> = (0..bar.rank(pu))
            .map(|t| {
                let mut v = vec![BigInt::zero(); jq.ngens()];
                for a in 0..kq {
                    let rep = hq.representative(a);
                    for (x, y) in v.iter_mut().zip(&rep) {
                        *x += &f[t * kq + a] * y;
                    }
                }
                v
            })
            .collect();
        let df = apply_bar(&bar, pu, &lifted, jq.ngens());
        let nu: Vec<Vec<BigInt>> = df
            .iter()
            .map(|y| {
                let mut y = y.clone();
                jq.reduce(&mut y);
                delta_prev.preimage(&y).ok_or_else(|| {
                    GcohError::OracleInconsistent("group coboundary of a lift is not a boundary".into())
                })
            })
            .collect::<Result<_, _>>()?;
        let dnu = apply_bar(&bar, pu + 1, &nu, jq1.ngens());
        let mut cochain = Vec::with_capacity(dnu.len() * hq1_pres.ngens());
        for v in &dnu {
            let mut v = v.clone();
            jq1.reduce(&mut v);
            let c = hq1.coordinates(&v).ok_or_else(|| {
                GcohError::OracleInconsistent("second coboundary is not a cycle".into())
            })?;
            cochain.extend(c);
        }
        let class = target.coordinates(&cochain).ok_or_else(|| {
            GcohError::OracleInconsistent("constructed cochain is not a cocycle".into())
        })?;
        columns.push(class);
    }
    let is_zero = columns.iter().all(|c| c.iter().all(Zero::is_zero));
    Ok(Phi2Report {
        p,
        q,
        source: source.group.to_string(),
        target: target.group.to_string(),
        matrix: columns
            .iter()
            .map(|c| c.iter().map(ToString::to_string).collect())
            .collect(),
        is_zero,
    })
}

const SMALL_GROUPS: &[&[u64]] = &[
    &[],
    &[2],
    &[3],
    &[4],
    &[2, 2],
    &[5],
    &[6],
    &[7],
    &[8],
    &[2, 4],
    &[2, 2, 2],
];

fn random_group<R: Rng>(rng: &mut R, max_order: u64) -> AbelianGroup {
    let choices: Vec<&[u64]> = SMALL_GROUPS
        .iter()
        .copied()
        .filter(|f| f.iter().product::<u64>() <= max_order)
        .collect();
    AbelianGroup::from_u64_orders(0, choices[rng.gen_range(0..choices.len())])
}

/// A random well-defined map between finite groups in canonical form.
fn random_hom<R: Rng>(rng: &mut R, a: &Presentation, b: &Presentation) -> AbelianHom {
    let mut m = IntegerMatrix::zeros(b.ngens(), a.ngens());
    for (j, o) in a.orders().iter().enumerate() {
        for (i, c) in b.orders().iter().enumerate() {
            let step = c / num_integer::Integer::gcd(o, c);
            m.set(i, j, step * rng.gen_range(0..8u32));
        }
    }
    AbelianHom::new(a.clone(), b.clone(), m).expect("entries chosen to respect orders")
}

/// A random three-term complex of finite groups of order at most `max_order`.
/// The second differential factors through the cokernel of the first.
pub fn random_complex<R: Rng>(rng: &mut R, max_order: u64) -> CochainComplexSpec {
    let terms: Vec<AbelianGroup> = (0..3).map(|_| random_group(rng, max_order)).collect();
    let d0 = random_hom(rng, &terms[0].presentation(), &terms[1].presentation());
    let a0 = hom_analyze(&d0);
    let psi = random_hom(rng, &a0.cokernel.presentation(), &terms[2].presentation());
    let d1 = AbelianHom::compose(&psi, &a0.cokernel_projection).expect("composable");
    CochainComplexSpec::new(terms, vec![d0, d1]).expect("d1 kills the image of d0")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn zero_differentials_give_zero_map() {
        let j = CochainComplexSpec::zero(vec![AbelianGroup::cyclic(2), AbelianGroup::cyclic(4), AbelianGroup::cyclic(2)]);
        for g in [FiniteGroup::cyclic(2).unwrap(), FiniteGroup::cyclic(3).unwrap()] {
            let r = phi2_vanishing_check(&g, &j, 0, 1).unwrap();
            assert!(r.is_zero);
        }
    }

    #[test]
    fn random_complexes_are_complexes() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let j = random_complex(&mut rng, 8);
            let r = phi2_vanishing_check(&FiniteGroup::cyclic(2).unwrap(), &j, 0, 1).unwrap();
            assert!(r.is_zero, "{r:?}");
        }
    }

    #[test]
    fn rejects_non_complex() {
        let z4 = AbelianGroup::cyclic(4);
        let id = AbelianHom::identity(z4.presentation());
        assert!(CochainComplexSpec::new(vec![z4.clone(), z4.clone(), z4], vec![id.clone(), id]).is_err());
    }
}
