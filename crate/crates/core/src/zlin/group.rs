//! Finitely generated abelian groups in invariant-factor form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::IntegerMatrix;
use super::snf::{Smith, Track};
use super::ZlinError;

/// `Z^free_rank + Z/d_1 + ... + Z/d_k` with `d_1 | d_2 | ... | d_k` and every
/// `d_i >= 2`. Two groups are isomorphic iff they compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    free_rank: usize,
    invariant_factors: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup {
            free_rank: 0,
            invariant_factors: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            free_rank: rank,
            invariant_factors: Vec::new(),
        }
    }

    /// `Z/n`; `n = 0` gives `Z` and `n = 1` the trivial group.
    pub fn cyclic(n: u64) -> Self {
        Self::from_cyclic_orders(0, &[BigInt::from(n)])
    }

    /// Canonical form of `Z^free_rank + sum Z/n_i` for arbitrary orders
    /// (`0` means a copy of `Z`, `1` is dropped, signs are ignored).
    pub fn from_cyclic_orders(free_rank: usize, orders: &[BigInt]) -> Self {
        Presentation::new(
            std::iter::repeat_n(BigInt::zero(), free_rank)
                .chain(orders.iter().map(|o| o.abs()))
                .collect(),
        )
        .canonical()
    }

    pub fn from_u64_orders(free_rank: usize, orders: &[u64]) -> Self {
        let o: Vec<BigInt> = orders.iter().map(|&x| BigInt::from(x)).collect();
        Self::from_cyclic_orders(free_rank, &o)
    }

    /// Validates an already-canonical description.
    pub fn from_invariants(free_rank: usize, factors: Vec<BigInt>) -> Result<Self, ZlinError> {
        for (i, f) in factors.iter().enumerate() {
            if *f < BigInt::from(2) {
                return Err(ZlinError::NotCanonical(format!("factor {f} is below 2")));
            }
            if i > 0 && !(f % &factors[i - 1]).is_zero() {
                return Err(ZlinError::NotCanonical(format!(
                    "factor {} does not divide {f}",
                    factors[i - 1]
                )));
            }
        }
        Ok(AbelianGroup {
            free_rank,
            invariant_factors: factors,
        })
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.free_rank + self.invariant_factors.len() <= 1
    }

    /// Number of canonical generators.
    pub fn ngens(&self) -> usize {
        self.free_rank + self.invariant_factors.len()
    }

    pub fn order(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.invariant_factors.iter().product::<BigInt>())
    }

    /// Exponent of the torsion subgroup (1 when torsion-free).
    pub fn exponent(&self) -> BigInt {
        self.invariant_factors
            .last()
            .cloned()
            .unwrap_or_else(BigInt::one)
    }

    pub fn torsion(&self) -> AbelianGroup {
        AbelianGroup {
            free_rank: 0,
            invariant_factors: self.invariant_factors.clone(),
        }
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut orders = self.invariant_factors.clone();
        orders.extend(other.invariant_factors.iter().cloned());
        Self::from_cyclic_orders(self.free_rank + other.free_rank, &orders)
    }

    pub fn direct_sum_all<'a>(groups: impl IntoIterator<Item = &'a AbelianGroup>) -> AbelianGroup {
        groups
            .into_iter()
            .fold(AbelianGroup::trivial(), |acc, g| acc.direct_sum(g))
    }

    pub fn power(&self, n: usize) -> AbelianGroup {
        AbelianGroup::direct_sum_all(std::iter::repeat_n(self, n))
    }

    /// `A / nA`.
    pub fn mod_multiples(&self, n: &BigInt) -> AbelianGroup {
        let n = n.abs();
        let mut orders: Vec<BigInt> = std::iter::repeat_n(n.clone(), self.free_rank).collect();
        orders.extend(self.invariant_factors.iter().map(|d| d.gcd(&n)));
        Self::from_cyclic_orders(0, &orders)
    }

    /// The `n`-torsion subgroup `A[n]`.
    pub fn torsion_of(&self, n: &BigInt) -> AbelianGroup {
        let n = n.abs();
        if n.is_zero() {
            return self.torsion();
        }
        let orders: Vec<BigInt> = self.invariant_factors.iter().map(|d| d.gcd(&n)).collect();
        Self::from_cyclic_orders(0, &orders)
    }

    /// Diagonal presentation on the canonical generators.
    pub fn presentation(&self) -> Presentation {
        Presentation::new(
            std::iter::repeat_n(BigInt::zero(), self.free_rank)
                .chain(self.invariant_factors.iter().cloned())
                .collect(),
        )
    }
}

impl fmt::Debug for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbelianGroup({self})")
    }
}

/// Renders as `Z^r + Z/d1 + Z/d2 ...`, or `0` for the trivial group.
impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" + "))
    }
}

/// A group given as a direct sum of cyclic groups, one per generator, in an
/// arbitrary order. Order `0` is a copy of `Z`; order `1` is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    orders: Vec<BigInt>,
}

impl Presentation {
    pub fn new(orders: Vec<BigInt>) -> Self {
        Presentation {
            orders: orders.into_iter().map(|o| o.abs()).collect(),
        }
    }

    pub fn free(n: usize) -> Self {
        Self::new(vec![BigInt::zero(); n])
    }

    pub fn ngens(&self) -> usize {
        self.orders.len()
    }

    pub fn orders(&self) -> &[BigInt] {
        &self.orders
    }

    /// `n x t` matrix whose columns are the defining relations.
    pub fn relation_matrix(&self) -> IntegerMatrix {
        let torsion: Vec<usize> = (0..self.ngens())
            .filter(|&i| !self.orders[i].is_zero())
            .collect();
        let mut r = IntegerMatrix::zeros(self.ngens(), torsion.len());
        for (k, &i) in torsion.iter().enumerate() {
            r.set(i, k, self.orders[i].clone());
        }
        r
    }

    /// Reduces a coordinate vector modulo the generator orders.
    pub fn reduce(&self, v: &mut [BigInt]) {
        for (x, o) in v.iter_mut().zip(&self.orders) {
            if !o.is_zero() {
                *x = x.mod_floor(o);
            }
        }
    }

    pub fn is_zero_element(&self, v: &[BigInt]) -> bool {
        v.iter()
            .zip(&self.orders)
            .all(|(x, o)| if o.is_zero() { x.is_zero() } else { (x % o).is_zero() })
    }

    pub fn canonical(&self) -> AbelianGroup {
        Presented::new(self.ngens(), &self.relation_matrix()).group
    }

    pub fn direct_sum(parts: &[Presentation]) -> Presentation {
        Presentation::new(parts.iter().flat_map(|p| p.orders.iter().cloned()).collect())
    }
}

/// Cokernel of a relation matrix with explicit change of coordinates to its
/// canonical generators.
#[derive(Clone, Debug)]
pub struct Presented {
    pub group: AbelianGroup,
    /// `canonical_gens x n`: canonical coordinates of each original generator.
    to_canonical: IntegerMatrix,
    /// `n x canonical_gens`: a representative of each canonical generator.
    from_canonical: IntegerMatrix,
    orders: Presentation,
}

impl Presented {
    /// `Z^n / (column span of relations)`; `relations` is `n x m`.
    pub fn new(n: usize, relations: &IntegerMatrix) -> Presented {
        assert_eq!(relations.rows(), n, "relation matrix must have one row per generator");
        let s = Smith::compute(
            relations,
            Track {
                u: true,
                u_inv: true,
                v: false,
            },
        );
        let u = s.u.expect("tracked");
        let w = s.u_inv.expect("tracked");
        // Canonical order: free coordinates first, then the nonunit factors.
        let mut keep: Vec<usize> = (s.rank..n).collect();
        let mut factors = Vec::new();
        for i in 0..s.rank {
            if !s.diag[i].is_one() {
                keep.push(i);
                factors.push(s.diag[i].clone());
            }
        }
        let free_rank = n - s.rank;
        let group = AbelianGroup {
            free_rank,
            invariant_factors: factors,
        };
        let orders = group.presentation();
        let to_canonical = u.select_rows(&keep);
        let mut to_canonical_reduced = to_canonical.clone();
        for (k, o) in orders.orders().iter().enumerate() {
            if !o.is_zero() {
                for j in 0..n {
                    to_canonical_reduced.set(k, j, to_canonical.get(k, j).mod_floor(o));
                }
            }
        }
        Presented {
            group,
            to_canonical: to_canonical_reduced,
            from_canonical: w.select_columns(&keep),
            orders,
        }
    }

    /// Canonical coordinates (reduced) of an element given in original coordinates.
    pub fn coordinates(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut c = self.to_canonical.mul_vec(v);
        self.orders.reduce(&mut c);
        c
    }

    pub fn to_canonical(&self) -> &IntegerMatrix {
        &self.to_canonical
    }

    pub fn from_canonical(&self) -> &IntegerMatrix {
        &self.from_canonical
    }

    /// Representative of canonical generator `i` in original coordinates.
    pub fn representative(&self, i: usize) -> Vec<BigInt> {
        self.from_canonical.column(i)
    }
}

/// Canonical form of the cokernel of a relation matrix whose rows are
/// relations among `generators` generators.
pub fn group_from_presentation(
    generators: usize,
    relations: &IntegerMatrix,
) -> Result<AbelianGroup, ZlinError> {
    if relations.cols() != generators {
        return Err(ZlinError::DimensionMismatch {
            expected: generators,
            found: relations.cols(),
            what: "relation columns",
        });
    }
    Ok(Presented::new(generators, &relations.transpose()).group)
}

/// The sublattice of `Z^n` spanned by the columns of a matrix, with an exact
/// solver for membership.
#[derive(Clone, Debug)]
pub struct Lattice {
    basis: IntegerMatrix,
    diag: Vec<BigInt>,
    rank: usize,
    u: IntegerMatrix,
    v: IntegerMatrix,
}

impl Lattice {
    pub fn new(generators: IntegerMatrix) -> Lattice {
        let s = Smith::compute(
            &generators,
            Track {
                u: true,
                u_inv: false,
                v: true,
            },
        );
        Lattice {
            basis: generators,
            diag: s.diag,
            rank: s.rank,
            u: s.u.expect("tracked"),
            v: s.v.expect("tracked"),
        }
    }

    pub fn generators(&self) -> &IntegerMatrix {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Some `c` with `generators * c = b`, if `b` lies in the lattice.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        let y = self.u.mul_vec(b);
        let mut z = vec![BigInt::zero(); self.basis.cols()];
        for (i, yi) in y.iter().enumerate() {
            if i < self.rank {
                let (q, r) = yi.div_rem(&self.diag[i]);
                if !r.is_zero() {
                    return None;
                }
                z[i] = q;
            } else if !yi.is_zero() {
                return None;
            }
        }
        Some(self.v.mul_vec(&z))
    }

    pub fn contains(&self, b: &[BigInt]) -> bool {
        self.solve(b).is_some()
    }

    /// Basis of the integer kernel of `m` (columns), from its Smith form.
    pub fn kernel_basis(m: &IntegerMatrix) -> IntegerMatrix {
        let s = Smith::compute(
            m,
            Track {
                u: false,
                u_inv: false,
                v: true,
            },
        );
        let v = s.v.expect("tracked");
        let cols: Vec<usize> = (s.rank..m.cols()).collect();
        v.select_columns(&cols)
    }
}
