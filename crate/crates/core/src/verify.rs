//! Invariant suites runnable on demand, each producing a machine-readable
//! pass/fail report with counterexample payloads.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::builders::{self, LoopBraidKind};
use crate::cospan::{bbfg, bfg, compose, fg_matrix, identity_cospan, tensor, Cospan};
use crate::error::CospanError;
use crate::group::{FiniteGroup, GroupElement};
use crate::homs::{count_homs, enumerate_homs, nat_classes, EnumConfig, GroupoidHom};
use crate::matrix::{scalar_to_string, TqftMatrix};
use crate::presentation::{pushout, GroupoidPresentation, ObjectId};
use crate::random::{random_composable_pair, random_pushout_setup};

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    GroupAxioms,
    PushoutOracle,
    BasepointInvariance,
    Functoriality,
    Identity,
    Tensor,
    BraidRelations,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::GroupAxioms,
        Suite::PushoutOracle,
        Suite::BasepointInvariance,
        Suite::Functoriality,
        Suite::Identity,
        Suite::Tensor,
        Suite::BraidRelations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::GroupAxioms => "group-axioms",
            Suite::PushoutOracle => "pushout-oracle",
            Suite::BasepointInvariance => "basepoint-invariance",
            Suite::Functoriality => "functoriality",
            Suite::Identity => "identity",
            Suite::Tensor => "tensor",
            Suite::BraidRelations => "braid-relations",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
            format!("unknown suite `{s}`; available: {}", names.join(", "))
        })
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    pub trials: usize,
    pub enumeration: EnumConfig,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: DEFAULT_SEED, trials: 20, enumeration: EnumConfig::default() }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: Value,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub group: String,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "group": self.group,
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "passed": c.passed,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

pub fn run_suite(suite: Suite, group: &FiniteGroup, cfg: &VerifyConfig) -> Result<SuiteReport, CospanError> {
    let checks = match suite {
        Suite::GroupAxioms => group_axioms(group, cfg),
        Suite::PushoutOracle => pushout_oracle(group, cfg)?,
        Suite::BasepointInvariance => basepoint_invariance(group, cfg)?,
        Suite::Functoriality => functoriality(group, cfg)?,
        Suite::Identity => identity_law(group, cfg)?,
        Suite::Tensor => tensor_law(group, cfg)?,
        Suite::BraidRelations => braid_relations(group, cfg)?,
    };
    Ok(SuiteReport { suite, group: group.name().to_string(), checks })
}

fn check(name: impl Into<String>, passed: bool, detail: Value) -> CheckResult {
    CheckResult { name: name.into(), passed, detail }
}

fn group_axioms(group: &FiniteGroup, cfg: &VerifyConfig) -> Vec<CheckResult> {
    let n = group.order();
    let e = group.identity();
    let mut out = Vec::new();

    let bad_unit = group.elements().find(|&x| group.mul(e, x) != x || group.mul(x, e) != x);
    out.push(check("identity", bad_unit.is_none(), json!({ "counterexample": bad_unit.map(|x| x.0) })));

    let bad_inv = group
        .elements()
        .find(|&x| group.mul(group.inv(x), x) != e || group.mul(x, group.inv(x)) != e || group.inv(group.inv(x)) != x);
    out.push(check("inverses", bad_inv.is_none(), json!({ "counterexample": bad_inv.map(|x| x.0) })));

    let assoc_fails = |a: GroupElement, b: GroupElement, c: GroupElement| {
        group.mul(group.mul(a, b), c) != group.mul(a, group.mul(b, c))
    };
    let mut bad_assoc = None;
    let exhaustive = n <= 64;
    if exhaustive {
        'outer: for a in group.elements() {
            for b in group.elements() {
                for c in group.elements() {
                    if assoc_fails(a, b, c) {
                        bad_assoc = Some([a.0, b.0, c.0]);
                        break 'outer;
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        for _ in 0..100_000 {
            let mut pick = || GroupElement(rng.gen_range(0..n as u32));
            let (a, b, c) = (pick(), pick(), pick());
            if assoc_fails(a, b, c) {
                bad_assoc = Some([a.0, b.0, c.0]);
                break;
            }
        }
    }
    out.push(check(
        "associativity",
        bad_assoc.is_none(),
        json!({ "exhaustive": exhaustive, "counterexample": bad_assoc }),
    ));

    let classes = group.conjugacy_classes();
    let covered: usize = classes.iter().map(Vec::len).sum();
    let closed = classes.iter().all(|class| {
        class.iter().all(|&x| group.elements().all(|k| class.contains(&group.conjugate(k, x))))
    });
    out.push(check(
        "conjugacy-partition",
        covered == n && closed && classes[0] == vec![e],
        json!({ "classes": classes.len(), "sizes": classes.iter().map(Vec::len).collect::<Vec<_>>() }),
    ));
    out
}

/// Number of pairs `(h1, h2)` of homs of the two legs' targets that agree on
/// the apex, by enumerating both sides independently.
pub fn agreeing_pairs(
    f: &crate::presentation::PresentationMap,
    g: &crate::presentation::PresentationMap,
    group: &FiniteGroup,
    cfg: &EnumConfig,
) -> Result<u64, CospanError> {
    let mut left: HashMap<GroupoidHom, u64> = HashMap::new();
    for h in enumerate_homs(f.target(), group, cfg)? {
        *left.entry(h.pull_back(f, group)?).or_default() += 1;
    }
    let mut total = 0;
    for h in enumerate_homs(g.target(), group, cfg)? {
        total += left.get(&h.pull_back(g, group)?).copied().unwrap_or(0);
    }
    Ok(total)
}

/// Number of classes of `Ob(M) ⊔ Ob(N)` under the equivalence generated by
/// `f(y) ~ g(y)`, by iterated label propagation.
pub fn brute_object_classes(m_objects: usize, n_objects: usize, pairs: &[(usize, usize)]) -> usize {
    let total = m_objects + n_objects;
    let mut label: Vec<usize> = (0..total).collect();
    loop {
        let mut changed = false;
        for &(a, b) in pairs {
            let (la, lb) = (label[a], label[m_objects + b]);
            if la != lb {
                let (keep, drop) = (la.min(lb), la.max(lb));
                for l in label.iter_mut() {
                    if *l == drop {
                        *l = keep;
                    }
                }
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut distinct = label;
    distinct.sort_unstable();
    distinct.dedup();
    distinct.len()
}

fn pushout_oracle(group: &FiniteGroup, cfg: &VerifyConfig) -> Result<Vec<CheckResult>, CospanError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::new();
    for trial in 0..cfg.trials.max(1) {
        let setup = random_pushout_setup(&mut rng);
        let (p, _, _) = pushout(&setup.apex, &setup.f, &setup.g)?;
        let homs = count_homs(&p, group, &cfg.enumeration)?;
        let pairs = agreeing_pairs(&setup.f, &setup.g, group, &cfg.enumeration)?;
        let object_pairs: Vec<(usize, usize)> = (0..setup.apex.num_objects())
            .map(|y| (setup.f.object_map()[y].0, setup.g.object_map()[y].0))
            .collect();
        let expected_objects =
            brute_object_classes(setup.f.target().num_objects(), setup.g.target().num_objects(), &object_pairs);
        out.push(check(
            format!("pushout-{trial}"),
            homs == pairs && p.num_objects() == expected_objects,
            json!({
                "pushout_homs": homs,
                "agreeing_pairs": pairs,
                "objects": p.num_objects(),
                "expected_objects": expected_objects,
            }),
        ));
    }
    Ok(out)
}

fn ratio_of_totals(a: &TqftMatrix, b: &TqftMatrix) -> Option<BigRational> {
    let sum = |m: &TqftMatrix| m.entries().iter().flatten().fold(BigRational::from_integer(BigInt::from(0)), |acc, x| acc + x);
    let (sa, sb) = (sum(a), sum(b));
    (sb != BigRational::from_integer(BigInt::from(0))).then(|| sa / sb)
}

/// Builder cospans used by the fixed suites.
pub fn builder_fixtures() -> Vec<Cospan> {
    vec![
        builders::pair_of_pants(),
        builders::three_strand_tube(),
        identity_cospan(&Arc::new(builders::circle())).with_label("id(circle)"),
        builders::artin_braid_generator(2, 1, false).expect("valid index"),
        builders::loop_braid_generator(2, 1, LoopBraidKind::Band).expect("valid index"),
    ]
}

fn basepoint_invariance(group: &FiniteGroup, cfg: &VerifyConfig) -> Result<Vec<CheckResult>, CospanError> {
    let e = &cfg.enumeration;
    let order = BigRational::from_integer(BigInt::from(group.order()));
    let mut out = Vec::new();
    for c in builder_fixtures() {
        let raw = bfg(&c, group, e)?;
        let norm = bbfg(&c, group, e)?;
        let fg = fg_matrix(&c, group, e)?;
        for at in 0..c.m().num_objects() {
            let (d, _) = c.with_basepoint(ObjectId(at), "extra")?;
            let raw_d = bfg(&d, group, e)?;
            let ok_raw = raw_d == raw.scaled(&order);
            let ok_norm = bbfg(&d, group, e)? == norm;
            let ok_fg = fg_matrix(&d, group, e)? == fg;
            out.push(check(
                format!("{}@{}", c.label(), c.m().objects[at].id),
                ok_raw && ok_norm && ok_fg,
                json!({
                    "bfg_factor": ratio_of_totals(&raw_d, &raw).map(|r| scalar_to_string(&r)),
                    "bfg_scaled_by_order": ok_raw,
                    "bbfg_unchanged": ok_norm,
                    "fg_unchanged": ok_fg,
                }),
            ));
        }
    }
    Ok(out)
}

fn mismatch_detail(lhs: &TqftMatrix, rhs: &TqftMatrix) -> Value {
    if lhs.shape() != rhs.shape() {
        return json!({ "lhs_shape": [lhs.shape().0, lhs.shape().1], "rhs_shape": [rhs.shape().0, rhs.shape().1] });
    }
    for (r, (a, b)) in lhs.entries().iter().zip(rhs.entries()).enumerate() {
        for (c, (x, y)) in a.iter().zip(b).enumerate() {
            if x != y {
                return json!({ "row": r, "col": c, "lhs": scalar_to_string(x), "rhs": scalar_to_string(y) });
            }
        }
    }
    json!({ "bases_differ": true })
}

/// `F(c2 ∘ c1)` against `F(c2) · F(c1)`.
pub fn check_composition(c1: &Cospan, c2: &Cospan, group: &FiniteGroup, cfg: &EnumConfig) -> Result<(bool, Value), CospanError> {
    let composite = compose(c1, c2)?;
    let lhs = fg_matrix(&composite, group, cfg)?;
    let rhs = fg_matrix(c2, group, cfg)?
        .matmul(&fg_matrix(c1, group, cfg)?)
        .map_err(|e| CospanError::BoundaryMismatch(e.to_string()))?;
    let ok = lhs.same_map_as(&rhs);
    let detail = if ok {
        json!({ "shape": [lhs.shape().0, lhs.shape().1], "middle_objects": composite.m().num_objects(), "middle_generators": composite.m().num_generators() })
    } else {
        mismatch_detail(&lhs, &rhs)
    };
    Ok((ok, detail))
}

fn functoriality(group: &FiniteGroup, cfg: &VerifyConfig) -> Result<Vec<CheckResult>, CospanError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::new();
    for trial in 0..cfg.trials.max(1) {
        let (c1, c2) = random_composable_pair(&mut rng, group);
        let (ok, detail) = check_composition(&c1, &c2, group, &cfg.enumeration)?;
        out.push(check(format!("random-pair-{trial}"), ok, detail));
    }
    Ok(out)
}

pub fn identity_fixtures() -> Vec<(&'static str, GroupoidPresentation)> {
    vec![
        ("empty", GroupoidPresentation::new()),
        ("circle", builders::circle()),
        ("two-circles", builders::two_circles()),
        ("figure-eight", builders::figure_eight()),
        ("torsion-2", builders::cyclic_relator(2)),
    ]
}

fn identity_law(group: &FiniteGroup, cfg: &VerifyConfig) -> Result<Vec<CheckResult>, CospanError> {
    let mut out = Vec::new();
    for (name, p) in identity_fixtures() {
        let m = fg_matrix(&identity_cospan(&Arc::new(p)), group, &cfg.enumeration)?;
        out.push(check(name, m.is_identity(), json!({ "dimension": m.shape().0 })));
    }
    Ok(out)
}

fn tensor_law(group: &FiniteGroup, cfg: &VerifyConfig) -> Result<Vec<CheckResult>, CospanError> {
    let e = &cfg.enumeration;
    let pieces = vec![
        identity_cospan(&Arc::new(builders::circle())).with_label("id(circle)"),
        builders::artin_braid_generator(2, 1, false)?,
        builders::pair_of_pants(),
        identity_cospan(&Arc::new(GroupoidPresentation::new())).with_label("id(empty)"),
    ];
    let mut out = Vec::new();
    for a in &pieces {
        for b in &pieces {
            let t = tensor(a, b)?;
            let lhs = fg_matrix(&t, group, e)?;
            let rhs = fg_matrix(a, group, e)?.kron(&fg_matrix(b, group, e)?);
            let dims_multiply = nat_classes(t.x(), group, e)?.dimension()
                == nat_classes(a.x(), group, e)?.dimension() * nat_classes(b.x(), group, e)?.dimension();
            let ok = lhs == rhs && dims_multiply;
            let detail = if ok { json!({ "shape": [lhs.shape().0, lhs.shape().1] }) } else { mismatch_detail(&lhs, &rhs) };
            out.push(check(format!("{} ⊗ {}", a.label(), b.label()), ok, detail));
        }
    }
    Ok(out)
}

fn product(ms: &[&TqftMatrix]) -> Result<TqftMatrix, CospanError> {
    let mut it = ms.iter();
    let first = (*it.next().expect("non-empty product")).clone();
    it.try_fold(first, |acc, m| acc.matmul(m)).map_err(|e| CospanError::BoundaryMismatch(e.to_string()))
}

fn relation_check(name: &str, lhs: &[&TqftMatrix], rhs: &[&TqftMatrix]) -> Result<CheckResult, CospanError> {
    let (l, r) = (product(lhs)?, product(rhs)?);
    let ok = l == r;
    let detail = if ok { json!({ "dimension": l.shape().0 }) } else { mismatch_detail(&l, &r) };
    Ok(check(name, ok, detail))
}

fn braid_relations(group: &FiniteGroup, cfg: &VerifyConfig) -> Result<Vec<CheckResult>, CospanError> {
    let e = &cfg.enumeration;
    let fg = |c: Cospan| fg_matrix(&c, group, e);
    let mut out = Vec::new();
    for n in 2..=4usize {
        let s: Vec<TqftMatrix> = (1..n).map(|i| fg(builders::artin_braid_generator(n, i, false)?)).collect::<Result<_, _>>()?;
        let t: Vec<TqftMatrix> = (1..n).map(|i| fg(builders::artin_braid_generator(n, i, true)?)).collect::<Result<_, _>>()?;
        let id = TqftMatrix::identity(s[0].rows().to_vec());
        for i in 0..n - 1 {
            let c = relation_check(&format!("n={n}: s{0} s{0}^-1 = 1", i + 1), &[&s[i], &t[i]], &[&id])?;
            out.push(c);
            let c = relation_check(&format!("n={n}: s{0}^-1 s{0} = 1", i + 1), &[&t[i], &s[i]], &[&id])?;
            out.push(c);
            if i + 1 < n - 1 {
                let (a, b) = (&s[i], &s[i + 1]);
                out.push(relation_check(&format!("n={n}: s{0} s{1} s{0} = s{1} s{0} s{1}", i + 1, i + 2), &[a, b, a], &[b, a, b])?);
            }
            for k in i + 2..n - 1 {
                out.push(relation_check(&format!("n={n}: s{} s{} = s{} s{}", i + 1, k + 1, k + 1, i + 1), &[&s[i], &s[k]], &[&s[k], &s[i]])?);
            }
        }
    }
    Ok(out)
}
