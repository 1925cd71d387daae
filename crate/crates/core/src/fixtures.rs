//! Reference descriptors used by the verification suites, the acceptance
//! tests and the checked-in JSON files.

use crate::stackcurve::{RawCoarse, RawDescriptor, RawGroup, RawPoint};

fn points(d: &[u64]) -> Vec<RawPoint> {
    d.iter()
        .enumerate()
        .map(|(i, &x)| RawPoint::new(&format!("p{}", i + 1), x))
        .collect()
}

fn affine() -> RawCoarse {
    RawCoarse {
        kind: "affine_line".into(),
        ..Default::default()
    }
}

fn projective(genus: u32) -> RawCoarse {
    RawCoarse {
        kind: "projective".into(),
        genus: Some(genus),
        ..Default::default()
    }
}

/// Smooth orbicurve over a projective curve of genus `genus`.
pub fn orbicurve(genus: u32, indices: &[u64]) -> RawDescriptor {
    RawDescriptor {
        characteristic: 0,
        coarse: projective(genus),
        generic_stabilizer: RawGroup::trivial(),
        stacky_points: points(indices),
        gerbe: "trivial_product".into(),
    }
}

/// Irreducible rational curve with one node, a stacky node of order 3 and a
/// smooth stacky point of order 2.
pub fn twisted_nodal() -> RawDescriptor {
    let mut node = RawPoint::new("node", 3);
    node.node = true;
    RawDescriptor {
        characteristic: 0,
        coarse: RawCoarse {
            kind: "nodal_projective".into(),
            genera: Some(vec![0]),
            node_count: Some(1),
            ..Default::default()
        },
        generic_stabilizer: RawGroup::trivial(),
        stacky_points: vec![node, RawPoint::new("smooth", 2)],
        gerbe: "trivial_product".into(),
    }
}

/// `C x BZ/d` for a projective curve `C` of genus `genus`.
pub fn projective_trivial_gerbe(genus: u32, d: u64) -> RawDescriptor {
    RawDescriptor {
        characteristic: 0,
        coarse: projective(genus),
        generic_stabilizer: RawGroup::cyclic(d),
        stacky_points: Vec::new(),
        gerbe: "trivial_product".into(),
    }
}

/// `[A^1 / D_2m]` with `D_2m` acting through its quotient of order 2: generic
/// stabilizer `Z/m`, one point with stabilizer `D_2m`.
pub fn dihedral(m: u64) -> RawDescriptor {
    let mut pt = RawPoint::new("origin", 2);
    pt.stabilizer = Some(RawGroup::dihedral(2 * m));
    pt.embedding = Some((0..m as usize).collect());
    RawDescriptor {
        characteristic: 0,
        coarse: affine(),
        generic_stabilizer: RawGroup::cyclic(m),
        stacky_points: vec![pt],
        gerbe: "explicit".into(),
    }
}

/// The companion `Y x BZ/m` of [`dihedral`].
pub fn dihedral_companion(m: u64) -> RawDescriptor {
    RawDescriptor {
        stacky_points: points(&[2]),
        gerbe: "trivial_product".into(),
        ..dihedral(m)
    }
}

/// `[A^1 / Z/p^2]` with `Z/p^2` acting through its quotient of order `p`.
pub fn cyclic_tower(p: u64) -> RawDescriptor {
    RawDescriptor {
        characteristic: 0,
        coarse: affine(),
        generic_stabilizer: RawGroup::cyclic(p),
        stacky_points: points(&[p]),
        gerbe: "cyclic_tower".into(),
    }
}

/// Every named fixture, keyed by file stem.
pub fn all() -> Vec<(String, RawDescriptor)> {
    let mut v = vec![
        ("orbicurve_2_3".to_string(), orbicurve(0, &[2, 3])),
        ("twisted_nodal".to_string(), twisted_nodal()),
    ];
    for (g, d) in [(0, 2), (1, 2), (1, 3)] {
        v.push((format!("trivial_gerbe_g{g}_d{d}"), projective_trivial_gerbe(g, d)));
    }
    for m in [3, 5] {
        v.push((format!("dihedral_{m}"), dihedral(m)));
    }
    for p in [2, 3] {
        v.push((format!("cyclic_tower_{p}"), cyclic_tower(p)));
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stackcurve::validate_descriptor;

    #[test]
    fn all_fixtures_validate() {
        for (name, raw) in all() {
            assert!(validate_descriptor(&raw).is_ok(), "{name}");
        }
        for m in [3, 5] {
            assert!(validate_descriptor(&dihedral_companion(m)).is_ok());
        }
    }
}
