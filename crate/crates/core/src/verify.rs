//! Named self-checks grouped into suites.

use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::fixtures;
use crate::gcoh::{
    bar_cohomology, cyclic_cohomology, phi2_vanishing_check, random_complex, restriction_map, transfer_map,
    FiniteGroup, ModuleDescriptor, Subgroup,
};
use crate::io::{parse_group_value, render_group_value};
use crate::stackcurve::{
    cohomology, cohomology_trivial_gerbe, h2_abelian_crosscheck, h2_via_beta_factorization, picard_orbicurve,
    validate_descriptor, CrosscheckStatus, CurveDescriptor, RawDescriptor,
};
use crate::zlin::{smith_normal_form, AbelianGroup, AbelianHom, Divisible, GroupValue, IntegerMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    All,
    Zlin,
    Gcoh,
    Stackcurve,
    Crosschecks,
}

impl Suite {
    pub const NAMES: [&'static str; 5] = ["all", "zlin", "gcoh", "stackcurve", "crosschecks"];

    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Zlin, Suite::Gcoh, Suite::Stackcurve, Suite::Crosschecks],
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = *self as usize;
        f.write_str(Self::NAMES[i])
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "all" => Suite::All,
            "zlin" => Suite::Zlin,
            "gcoh" => Suite::Gcoh,
            "stackcurve" => Suite::Stackcurve,
            "crosschecks" => Suite::Crosschecks,
            _ => return Err(format!("unknown suite {s:?}; expected one of {}", Self::NAMES.join(", "))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    /// A reported disagreement that is not a failure.
    Flagged,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Flagged => "flagged",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: String,
    pub outcome: Outcome,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    /// True unless some check failed; flagged checks do not count.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.outcome != Outcome::Fail)
    }

    pub fn count(&self, o: Outcome) -> usize {
        self.checks.iter().filter(|c| c.outcome == o).count()
    }
}

type CheckFn = Box<dyn Fn() -> Result<(Outcome, String), String>>;

fn check(name: impl Into<String>, f: impl Fn() -> Result<(Outcome, String), String> + 'static) -> (String, CheckFn) {
    (name.into(), Box::new(f))
}

fn pass(detail: impl Into<String>) -> Result<(Outcome, String), String> {
    Ok((Outcome::Pass, detail.into()))
}

fn expect_eq<T: PartialEq + fmt::Display>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn err<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

fn descriptor(raw: &RawDescriptor) -> Result<CurveDescriptor, String> {
    validate_descriptor(raw).map_err(|d| {
        d.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
    })
}

fn run_checks(suite: Suite, checks: Vec<(String, CheckFn)>) -> Vec<CheckResult> {
    let mut out: Vec<CheckResult> = checks
        .into_iter()
        .map(|(name, f)| {
            let (outcome, detail) = match catch_unwind(AssertUnwindSafe(&*f)) {
                Ok(Ok(r)) => r,
                Ok(Err(e)) => (Outcome::Fail, e),
                Err(_) => (Outcome::Fail, "panicked".into()),
            };
            CheckResult {
                suite,
                name,
                outcome,
                detail,
            }
        })
        .collect();
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

pub fn run(suite: Suite) -> VerifyReport {
    let mut checks = Vec::new();
    for s in suite.parts() {
        let list = match s {
            Suite::Zlin => zlin_checks(),
            Suite::Gcoh => gcoh_checks(),
            Suite::Stackcurve => stackcurve_checks(),
            Suite::Crosschecks => crosscheck_checks(),
            Suite::All => unreachable!("expanded above"),
        };
        checks.extend(run_checks(s, list));
    }
    VerifyReport { suite, checks }
}

fn random_matrix(rng: &mut ChaCha8Rng) -> IntegerMatrix {
    let r = rng.gen_range(1..=6);
    let c = rng.gen_range(1..=6);
    let rows: Vec<Vec<i64>> = (0..r)
        .map(|_| (0..c).map(|_| rng.gen_range(-20..=20)).collect())
        .collect();
    IntegerMatrix::from_rows_with_cols(&rows, c)
}

fn snf_certificate(m: &IntegerMatrix) -> Result<(), String> {
    let s = smith_normal_form(m);
    if &(&s.u * m) * &s.v != s.d {
        return Err("u * m * v differs from d".into());
    }
    for w in [&s.u, &s.v] {
        let det = w.determinant();
        if det != BigInt::from(1) && det != BigInt::from(-1) {
            return Err(format!("certificate has determinant {det}"));
        }
    }
    let diag = s.invariant_factors();
    for i in 0..s.d.rows() {
        for j in 0..s.d.cols() {
            if i != j && s.d.get(i, j) != &BigInt::from(0) {
                return Err("d is not diagonal".into());
            }
        }
    }
    if diag.iter().any(|x| x < &BigInt::from(0)) || diag.windows(2).any(|w| &w[1] % &w[0] != BigInt::from(0)) {
        return Err(format!("diagonal {diag:?} is not a divisor chain"));
    }
    Ok(())
}

fn zlin_checks() -> Vec<(String, CheckFn)> {
    vec![
        check("snf_certificates", || {
            let mut rng = ChaCha8Rng::seed_from_u64(20);
            for i in 0..100 {
                let m = random_matrix(&mut rng);
                snf_certificate(&m).map_err(|e| format!("matrix {i}: {e}"))?;
            }
            pass("100 random matrices re-multiply to their Smith forms")
        }),
        check("group_rendering_round_trip", || {
            let mut rng = ChaCha8Rng::seed_from_u64(21);
            for _ in 0..100 {
                let orders: Vec<u64> = (0..rng.gen_range(0..5)).map(|_| rng.gen_range(1..40)).collect();
                let mut div = Vec::new();
                if rng.gen_bool(0.3) {
                    div.push(Divisible::Units);
                }
                if rng.gen_bool(0.3) {
                    div.push(Divisible::Picard0 { genus: rng.gen_range(0..4) });
                }
                let v = GroupValue::new(AbelianGroup::from_u64_orders(rng.gen_range(0..3), &orders), div);
                let s = render_group_value(&v);
                if parse_group_value(&s).map_err(err)? != v {
                    return Err(format!("{s} does not parse back"));
                }
            }
            pass("100 random groups")
        }),
    ]
}

fn transfer_identity(g: &FiniteGroup, h: &Subgroup, r: u32) -> Result<String, String> {
    let res = restriction_map(g, h, r).map_err(err)?;
    let tr = transfer_map(g, h, r).map_err(err)?;
    let comp = AbelianHom::compose(&tr.hom, &res.hom).map_err(err)?;
    let idx = AbelianHom::multiplication(res.source.presentation(), &BigInt::from(h.index_in(g)));
    if comp != idx {
        return Err(format!("r = {r}: cor o res differs from multiplication by the index"));
    }
    Ok(format!("r = {r} ({}, {})", res.provenance, tr.provenance))
}

fn gcoh_checks() -> Vec<(String, CheckFn)> {
    let mut v = Vec::new();
    for d in 2..=6u64 {
        v.push(check(format!("cyclic_oracle_d{d}"), move || {
            let g = FiniteGroup::cyclic(d).map_err(err)?;
            let mut coeffs = vec![ModuleDescriptor::integers()];
            coeffs.extend((2..=6).map(ModuleDescriptor::cyclic));
            for m in &coeffs {
                let ModuleDescriptor::FinitelyGenerated { group } = m else {
                    unreachable!("finitely generated coefficients only")
                };
                for r in 0..=4 {
                    let closed = cyclic_cohomology(d, m, r).map_err(err)?;
                    let bar = GroupValue::from(bar_cohomology(&g, group, r).map_err(err)?);
                    expect_eq(&format!("H^{r}(Z/{d}, {group})"), bar, closed)?;
                }
            }
            pass("coefficients Z and Z/m (m <= 6), r <= 4")
        }));
        v.push(check(format!("cyclic_integral_table_d{d}"), move || {
            let g = FiniteGroup::cyclic(d).map_err(err)?;
            let z = AbelianGroup::free(1);
            let cd = AbelianGroup::cyclic(d);
            let want = [z.clone(), AbelianGroup::trivial(), cd.clone(), AbelianGroup::trivial(), cd];
            for (r, w) in want.iter().enumerate() {
                let closed = cyclic_cohomology(d, &ModuleDescriptor::integers(), r as u32).map_err(err)?;
                expect_eq(&format!("closed H^{r}"), closed, GroupValue::from(w.clone()))?;
                expect_eq(&format!("bar H^{r}"), &bar_cohomology(&g, &z, r as u32).map_err(err)?, w)?;
            }
            pass("Z, 0, Z/d, 0, Z/d on both paths")
        }));
    }
    for m in [3usize, 5] {
        v.push(check(format!("dihedral_h2_order_{}", 2 * m), move || {
            let g = FiniteGroup::dihedral(m).map_err(err)?;
            let h = bar_cohomology(&g, &AbelianGroup::free(1), 2).map_err(err)?;
            expect_eq("H^2(D, Z)", h, AbelianGroup::cyclic(2))?;
            pass("Z/2 from the bar oracle")
        }));
    }
    let cases: Vec<(&str, fn() -> Result<(FiniteGroup, Subgroup), String>)> = vec![
        ("z2_in_z4", || {
            let g = FiniteGroup::cyclic(4).map_err(err)?;
            let h = g.cyclic_subgroup_of_order(2).map_err(err)?;
            Ok((g, h))
        }),
        ("z3_in_z6", || {
            let g = FiniteGroup::cyclic(6).map_err(err)?;
            let h = g.cyclic_subgroup_of_order(3).map_err(err)?;
            Ok((g, h))
        }),
        ("z2_in_z2xz2", || {
            let g = FiniteGroup::abelian(&[2, 2]).map_err(err)?;
            let h = g.subgroup(&[0, 1]).map_err(err)?;
            Ok((g, h))
        }),
        ("z3_in_z3xz3", || {
            let g = FiniteGroup::abelian(&[3, 3]).map_err(err)?;
            let h = g.subgroup(&[0, 1, 2]).map_err(err)?;
            Ok((g, h))
        }),
    ];
    for (name, make) in cases {
        v.push(check(format!("transfer_identity_{name}"), move || {
            let (g, h) = make()?;
            let a = transfer_identity(&g, &h, 2)?;
            let b = transfer_identity(&g, &h, 3)?;
            pass(format!("{a}; {b}"))
        }));
    }
    v.push(check("phi2_vanishing", || {
        let mut rng = ChaCha8Rng::seed_from_u64(50);
        let groups = [2u64, 3, 4].map(|d| FiniteGroup::cyclic(d).expect("small cyclic"));
        let degrees = [(0u32, 1u32), (1, 1), (0, 2)];
        for i in 0..50 {
            let j = random_complex(&mut rng, 8);
            let g = &groups[i % 3];
            let (p, q) = degrees[(i / 3) % 3];
            let r = phi2_vanishing_check(g, &j, p, q).map_err(err)?;
            if !r.is_zero {
                return Err(format!("complex {i}: map for (p, q) = ({p}, {q}) is nonzero"));
            }
        }
        pass("50 random complexes, all constructed maps zero")
    }));
    v
}

fn table(desc: &CurveDescriptor, degrees: std::ops::RangeInclusive<u32>) -> Result<Vec<String>, String> {
    degrees
        .map(|r| cohomology(desc, r).map(|v| v.to_string()).map_err(err))
        .collect()
}

fn expect_table(got: Vec<String>, want: &[&str]) -> Result<(), String> {
    if got.iter().map(String::as_str).eq(want.iter().copied()) {
        Ok(())
    } else {
        Err(format!("got [{}], expected [{}]", got.join(", "), want.join(", ")))
    }
}

fn stackcurve_checks() -> Vec<(String, CheckFn)> {
    let mut v = vec![
        check("orbicurve_2_3", || {
            let d = descriptor(&fixtures::orbicurve(0, &[2, 3]))?;
            expect_table(table(&d, 2..=5)?, &["0", "Z/6", "0", "Z/6"])?;
            let pic = picard_orbicurve(&d).map_err(err)?;
            expect_eq("discrete Pic", pic.discrete_part, AbelianGroup::free(1))?;
            expect_eq("Pic quotient", pic.quotient, AbelianGroup::from_u64_orders(0, &[2, 3]))?;
            pass("H^2..5 = 0, Z/6, 0, Z/6; Pic discrete Z with quotient Z/2 + Z/3")
        }),
        check("twisted_nodal", || {
            let d = descriptor(&fixtures::twisted_nodal())?;
            expect_table(table(&d, 2..=4)?, &["0", "Z/6", "0"])?;
            pass("H^2..4 = 0, Z/3 + Z/2, 0")
        }),
    ];
    for (g, n) in [(0u32, 2u64), (1, 2), (1, 3)] {
        v.push(check(format!("trivial_gerbe_table_g{g}_d{n}"), move || {
            let d = descriptor(&fixtures::projective_trivial_gerbe(g, n))?;
            let even = AbelianGroup::cyclic(n).power(2 * g as usize);
            let odd = AbelianGroup::cyclic(n).power(2);
            for r in 2..=5u32 {
                let h = cohomology_trivial_gerbe(&d, r).map_err(err)?;
                let want = if r % 2 == 0 { &even } else { &odd };
                match h.exact_group() {
                    Some(x) if &x == want => {}
                    _ => return Err(format!("H^{r} = {h}, expected resolved {want}")),
                }
            }
            pass(format!("even {even}, odd {odd}, resolved"))
        }));
    }
    for p in [2u64, 3] {
        v.push(check(format!("cyclic_tower_periodicity_p{p}"), move || {
            let d = descriptor(&fixtures::cyclic_tower(p))?;
            for r in 2..=4u32 {
                let a = cohomology(&d, r).map_err(err)?;
                let b = cohomology(&d, r + 2).map_err(err)?;
                if a.to_string() != b.to_string() || a.order() != b.order() {
                    return Err(format!("H^{r} = {a} but H^{} = {b}", r + 2));
                }
            }
            pass("degrees r and r + 2 agree for r = 2..4")
        }));
        v.push(check(format!("non_split_h1_p{p}"), move || {
            let d = descriptor(&fixtures::cyclic_tower(p))?;
            let h = cohomology(&d, 1).map_err(err)?;
            if h.is_resolved() {
                return Err(format!("H^1 was resolved to {h}"));
            }
            if h.order() != Some(BigInt::from(p * p)) {
                return Err(format!("H^1 order {:?}", h.order()));
            }
            pass(format!("filtration {h} of order {} left unresolved", p * p))
        }));
    }
    v
}

fn crosscheck_checks() -> Vec<(String, CheckFn)> {
    let mut v = Vec::new();
    for m in [3u64, 5] {
        v.push(check(format!("dihedral_{m}"), move || {
            let d = descriptor(&fixtures::dihedral(m))?;
            let beta = h2_via_beta_factorization(&d).map_err(err)?;
            if beta.value.exact_group() != Some(AbelianGroup::cyclic(m)) {
                return Err(format!("beta H^2 = {}", beta.value));
            }
            let companion = descriptor(&fixtures::dihedral_companion(m))?;
            let t = cohomology_trivial_gerbe(&companion, 2).map_err(err)?;
            if !t.exact_group().is_some_and(|g| g.is_trivial()) {
                return Err(format!("companion H^2 = {t}"));
            }
            let rep = h2_abelian_crosscheck(&d).map_err(err)?;
            if rep.status != CrosscheckStatus::Unequal || rep.flagged {
                return Err(format!("crosscheck status {:?}, flagged {}", rep.status, rep.flagged));
            }
            pass(format!("{} vs {}: H^2 depends on the gerbe", rep.direct, rep.trivial_gerbe))
        }));
    }
    for p in [2u64, 3] {
        v.push(check(format!("cyclic_tower_{p}"), move || {
            let d = descriptor(&fixtures::cyclic_tower(p))?;
            let rep = h2_abelian_crosscheck(&d).map_err(err)?;
            if !rep.order_laws_hold {
                return Err("order laws fail".into());
            }
            let odd = rep.odd_degree.as_ref().ok_or("no odd-degree comparison")?;
            let p3 = Some(BigInt::from(p.pow(3)));
            if odd.tower_order != p3 || odd.trivial_gerbe_order != p3 {
                return Err(format!(
                    "odd orders {:?} and {:?}, expected {}",
                    odd.tower_order,
                    odd.trivial_gerbe_order,
                    p.pow(3)
                ));
            }
            let detail = format!(
                "H^2 {} vs {}; H^3 {} vs {}; {}",
                rep.direct,
                rep.trivial_gerbe,
                odd.tower,
                odd.trivial_gerbe,
                rep.notes.join("; ")
            );
            Ok((if rep.flagged { Outcome::Flagged } else { Outcome::Pass }, detail))
        }));
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for n in Suite::NAMES {
            assert_eq!(n.parse::<Suite>().unwrap().to_string(), n);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn zlin_suite_passes() {
        let r = run(Suite::Zlin);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.checks.len(), 2);
    }
}
