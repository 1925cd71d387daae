//! Homomorphisms between finitely generated abelian groups.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::group::{AbelianGroup, Lattice, Presentation, Presented};
use super::matrix::IntegerMatrix;
use super::ZlinError;

/// A homomorphism given on generators: column `j` of `matrix` is the image
/// of the `j`-th domain generator in codomain coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianHom {
    domain: Presentation,
    codomain: Presentation,
    matrix: IntegerMatrix,
}

impl AbelianHom {
    /// Checks that relations of the domain land on relations of the codomain.
    pub fn new(
        domain: Presentation,
        codomain: Presentation,
        matrix: IntegerMatrix,
    ) -> Result<Self, ZlinError> {
        if matrix.rows() != codomain.ngens() || matrix.cols() != domain.ngens() {
            return Err(ZlinError::ShapeMismatch {
                expected: (codomain.ngens(), domain.ngens()),
                found: (matrix.rows(), matrix.cols()),
            });
        }
        for (j, o) in domain.orders().iter().enumerate() {
            if o.is_zero() {
                continue;
            }
            let image: Vec<BigInt> = matrix.column(j).iter().map(|x| x * o).collect();
            if !codomain.is_zero_element(&image) {
                return Err(ZlinError::IllDefined(format!(
                    "generator {j} has order {o} but its image does not"
                )));
            }
        }
        let mut m = matrix;
        for (i, o) in codomain.orders().iter().enumerate() {
            if o.is_zero() {
                continue;
            }
            for j in 0..m.cols() {
                let r = m.get(i, j).mod_floor(o);
                m.set(i, j, r);
            }
        }
        Ok(AbelianHom {
            domain,
            codomain,
            matrix: m,
        })
    }

    pub fn between(
        domain: &AbelianGroup,
        codomain: &AbelianGroup,
        matrix: IntegerMatrix,
    ) -> Result<Self, ZlinError> {
        Self::new(domain.presentation(), codomain.presentation(), matrix)
    }

    pub fn zero(domain: Presentation, codomain: Presentation) -> Self {
        let m = IntegerMatrix::zeros(codomain.ngens(), domain.ngens());
        AbelianHom {
            domain,
            codomain,
            matrix: m,
        }
    }

    pub fn identity(p: Presentation) -> Self {
        Self::multiplication(p, &BigInt::one())
    }

    /// Multiplication by `k` on a group.
    pub fn multiplication(p: Presentation, k: &BigInt) -> Self {
        let m = IntegerMatrix::identity(p.ngens()).scale(k);
        Self::new(p.clone(), p, m).expect("scalar maps are well defined")
    }

    pub fn domain(&self) -> &Presentation {
        &self.domain
    }

    pub fn codomain(&self) -> &Presentation {
        &self.codomain
    }

    pub fn matrix(&self) -> &IntegerMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        let mut y = self.matrix.mul_vec(x);
        self.codomain.reduce(&mut y);
        y
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// `outer ∘ inner`.
    pub fn compose(outer: &AbelianHom, inner: &AbelianHom) -> Result<AbelianHom, ZlinError> {
        if inner.codomain != outer.domain {
            return Err(ZlinError::NotComposable);
        }
        Self::new(
            inner.domain.clone(),
            outer.codomain.clone(),
            &outer.matrix * &inner.matrix,
        )
    }

    /// Componentwise sum `A_1 + ... -> B_1 + ...`.
    pub fn block_diagonal(parts: &[AbelianHom]) -> AbelianHom {
        let dom = Presentation::direct_sum(&parts.iter().map(|p| p.domain.clone()).collect::<Vec<_>>());
        let cod = Presentation::direct_sum(&parts.iter().map(|p| p.codomain.clone()).collect::<Vec<_>>());
        let mut m = IntegerMatrix::zeros(cod.ngens(), dom.ngens());
        let (mut r0, mut c0) = (0, 0);
        for p in parts {
            for i in 0..p.matrix.rows() {
                for j in 0..p.matrix.cols() {
                    m.set(r0 + i, c0 + j, p.matrix.get(i, j).clone());
                }
            }
            r0 += p.matrix.rows();
            c0 += p.matrix.cols();
        }
        AbelianHom {
            domain: dom,
            codomain: cod,
            matrix: m,
        }
    }
}

/// Kernel, image and cokernel of a homomorphism in canonical form, with the
/// structure maps needed to move elements between them.
#[derive(Clone, Debug)]
pub struct HomAnalysis {
    pub kernel: AbelianGroup,
    pub image: AbelianGroup,
    pub cokernel: AbelianGroup,
    /// Canonical kernel generators into the domain.
    pub kernel_inclusion: AbelianHom,
    /// Canonical image generators into the codomain.
    pub image_inclusion: AbelianHom,
    /// Codomain onto canonical cokernel generators.
    pub cokernel_projection: AbelianHom,
    map: AbelianHom,
    kernel_lattice: Lattice,
    kernel_presented: Presented,
    coker_presented: Presented,
    // columns: map matrix then codomain relations
    preimage_lattice: Lattice,
}

impl HomAnalysis {
    /// Canonical kernel coordinates of a domain element, if it lies in the kernel.
    pub fn kernel_coordinates(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        let c = self.kernel_lattice.solve(x)?;
        Some(self.kernel_presented.coordinates(&c))
    }

    /// Canonical cokernel coordinates of a codomain element.
    pub fn cokernel_coordinates(&self, y: &[BigInt]) -> Vec<BigInt> {
        self.coker_presented.coordinates(y)
    }

    /// A codomain representative of canonical cokernel generator `i`.
    pub fn cokernel_representative(&self, i: usize) -> Vec<BigInt> {
        self.coker_presented.representative(i)
    }

    /// Some `x` with `f(x) = y`, if `y` is in the image.
    pub fn preimage(&self, y: &[BigInt]) -> Option<Vec<BigInt>> {
        let c = self.preimage_lattice.solve(y)?;
        let n = self.map.domain().ngens();
        Some(c[..n].to_vec())
    }

    pub fn in_image(&self, y: &[BigInt]) -> bool {
        self.preimage_lattice.contains(y)
    }

    pub fn map(&self) -> &AbelianHom {
        &self.map
    }

    pub fn is_injective(&self) -> bool {
        self.kernel.is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel.is_trivial()
    }
}

/// Lift of the kernel of `f` to the domain's free cover, as a lattice basis.
fn kernel_lift(f: &AbelianHom) -> IntegerMatrix {
    let n_a = f.domain.ngens();
    let m = f.matrix.hstack(&f.codomain.relation_matrix());
    let kb = Lattice::kernel_basis(&m);
    let rows: Vec<usize> = (0..n_a).collect();
    kb.select_rows(&rows)
}

/// Kernel, image and cokernel of `f`, canonical.
pub fn hom_analyze(f: &AbelianHom) -> HomAnalysis {
    let n_a = f.domain.ngens();
    let n_b = f.codomain.ngens();
    let k = kernel_lift(f);
    let kernel_lattice = Lattice::new(k.clone());

    // Domain relations rewritten in the kernel basis.
    let ra = f.domain.relation_matrix();
    let mut rel_cols = Vec::with_capacity(ra.cols());
    for j in 0..ra.cols() {
        let c = kernel_lattice
            .solve(&ra.column(j))
            .expect("domain relations lie in the kernel lift");
        rel_cols.push(c);
    }
    let rel = IntegerMatrix::from_columns(&rel_cols, k.cols());
    let kernel_presented = Presented::new(k.cols(), &rel);
    let kernel = kernel_presented.group.clone();
    let kernel_inclusion = AbelianHom::new(
        kernel.presentation(),
        f.domain.clone(),
        &k * kernel_presented.from_canonical(),
    )
    .expect("kernel inclusion is well defined");

    let image_presented = Presented::new(n_a, &k);
    let image = image_presented.group.clone();
    let image_inclusion = AbelianHom::new(
        image.presentation(),
        f.codomain.clone(),
        &f.matrix * image_presented.from_canonical(),
    )
    .expect("image inclusion is well defined");

    let full = f.matrix.hstack(&f.codomain.relation_matrix());
    let coker_presented = Presented::new(n_b, &full);
    let cokernel = coker_presented.group.clone();
    let cokernel_projection = AbelianHom::new(
        f.codomain.clone(),
        cokernel.presentation(),
        coker_presented.to_canonical().clone(),
    )
    .expect("cokernel projection is well defined");

    HomAnalysis {
        kernel,
        image,
        cokernel,
        kernel_inclusion,
        image_inclusion,
        cokernel_projection,
        map: f.clone(),
        kernel_lattice,
        kernel_presented,
        coker_presented,
        preimage_lattice: Lattice::new(full),
    }
}

/// `ker g / im f` for composable `f: A -> B`, `g: B -> C` with `g ∘ f = 0`,
/// with representatives and a coordinate function on cycles.
#[derive(Clone, Debug)]
pub struct Subquotient {
    pub group: AbelianGroup,
    ambient: Presentation,
    cycles: Lattice,
    presented: Presented,
}

impl Subquotient {
    /// An element of `B` representing canonical generator `i`.
    pub fn representative(&self, i: usize) -> Vec<BigInt> {
        let c = self.presented.representative(i);
        let mut v = self.cycles.generators().mul_vec(&c);
        self.ambient.reduce(&mut v);
        v
    }

    /// Class of a cycle in canonical coordinates; `None` if `b` is not a cycle.
    pub fn coordinates(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        let c = self.cycles.solve(b)?;
        Some(self.presented.coordinates(&c))
    }

    pub fn is_cycle(&self, b: &[BigInt]) -> bool {
        self.cycles.contains(b)
    }

    pub fn ambient(&self) -> &Presentation {
        &self.ambient
    }
}

pub fn homology_at(f: &AbelianHom, g: &AbelianHom) -> Result<Subquotient, ZlinError> {
    if f.codomain != g.domain {
        return Err(ZlinError::NotComposable);
    }
    if !AbelianHom::compose(g, f)?.is_zero() {
        return Err(ZlinError::NotAComplex);
    }
    let k = kernel_lift(g);
    let cycles = Lattice::new(k.clone());
    let boundaries = f.matrix.hstack(&f.codomain.relation_matrix());
    let mut cols = Vec::with_capacity(boundaries.cols());
    for j in 0..boundaries.cols() {
        cols.push(
            cycles
                .solve(&boundaries.column(j))
                .ok_or(ZlinError::NotAComplex)?,
        );
    }
    let rel = IntegerMatrix::from_columns(&cols, k.cols());
    let presented = Presented::new(k.cols(), &rel);
    Ok(Subquotient {
        group: presented.group.clone(),
        ambient: g.domain.clone(),
        cycles,
        presented,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn zn(n: u64) -> Presentation {
        AbelianGroup::cyclic(n).presentation()
    }

    #[test]
    fn multiplication_on_cyclic_matches_enumeration() {
        for n in 2..=12u64 {
            for d in 0..=12i64 {
                let f = AbelianHom::multiplication(zn(n), &big(d));
                let a = hom_analyze(&f);
                // brute force over Z/n
                let kernel_size = (0..n as i64).filter(|x| (d * x) % n as i64 == 0).count();
                let image: std::collections::BTreeSet<i64> =
                    (0..n as i64).map(|x| (d * x).rem_euclid(n as i64)).collect();
                assert_eq!(a.kernel.order().unwrap(), BigInt::from(kernel_size));
                assert_eq!(a.cokernel.order().unwrap(), BigInt::from(n as usize / image.len()));
                let g = d.gcd(&(n as i64)) as u64;
                assert_eq!(a.kernel, AbelianGroup::cyclic(g));
                assert_eq!(a.cokernel, AbelianGroup::cyclic(g));
            }
        }
    }

    #[test]
    fn zero_and_identity_maps() {
        let a = AbelianGroup::from_u64_orders(1, &[2]);
        let b = AbelianGroup::from_u64_orders(0, &[3, 3]);
        let z = hom_analyze(&AbelianHom::zero(a.presentation(), b.presentation()));
        assert_eq!(z.kernel, a);
        assert_eq!(z.cokernel, b);
        let id = hom_analyze(&AbelianHom::identity(Presentation::free(2)));
        assert!(id.kernel.is_trivial() && id.cokernel.is_trivial());
    }

    #[test]
    fn ill_defined_map_rejected() {
        // Z/2 -> Z/3 sending 1 to 1
        let m = IntegerMatrix::from_rows(&[[1]]);
        assert!(AbelianHom::new(zn(2), zn(3), m).is_err());
        // Z/2 -> Z sending 1 to 1
        assert!(AbelianHom::new(zn(2), Presentation::free(1), IntegerMatrix::from_rows(&[[1]])).is_err());
    }

    #[test]
    fn kernel_inclusion_lands_in_kernel() {
        // Z^2 + Z/4 -> Z/6 + Z, (a, b, c) -> (a + 3c mod 6? ...)
        let dom = AbelianGroup::from_u64_orders(2, &[4]).presentation();
        let cod = Presentation::new(vec![big(6), big(0)]);
        let m = IntegerMatrix::from_rows(&[[1, 2, 3], [2, -4, 0]]);
        let f = AbelianHom::new(dom, cod, m).unwrap();
        let a = hom_analyze(&f);
        let comp = AbelianHom::compose(&f, &a.kernel_inclusion).unwrap();
        assert!(comp.is_zero());
        let comp = AbelianHom::compose(&a.cokernel_projection, &f).unwrap();
        assert!(comp.is_zero());
    }

    #[test]
    fn homology_of_short_complex() {
        // Z --2--> Z --0--> Z : homology at middle is Z/2
        let f = AbelianHom::multiplication(Presentation::free(1), &big(2));
        let g = AbelianHom::zero(Presentation::free(1), Presentation::free(1));
        let h = homology_at(&f, &g).unwrap();
        assert_eq!(h.group, AbelianGroup::cyclic(2));
        let rep = h.representative(0);
        assert_eq!(h.coordinates(&rep).unwrap(), vec![big(1)]);
        assert_eq!(h.coordinates(&[big(2)]).unwrap(), vec![big(0)]);
    }
}
