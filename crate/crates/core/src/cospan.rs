//! Based cospans `X -> M <- Y` of presentations and their evaluation as
//! exact counting matrices.
//!
//! For homs `f` of `X` and `g` of `Y`, the raw entry `⟨g|bFG|f⟩` counts homs
//! `h` of `M` with `h∘i = f` and `h∘j = g`. The normalized matrix scales by
//! `|G|^-(|Ob M| - |Ob X|)`. The class matrix uses natural-isomorphism
//! classes as bases, restricting exactly on the incoming side and up to
//! natural isomorphism on the outgoing side.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{CospanError, HomError};
use crate::group::{FiniteGroup, GroupElement};
use crate::homs::{enumerate_homs, fold_homs, nat_classes, EnumConfig, NatClasses};
use crate::matrix::{class_basis, inverse_power, raw_basis, BasisElement, TqftMatrix};
use crate::presentation::{
    add_basepoint, coproduct, coproduct_map, pushout, same_presentation, GenId, Generator, GroupoidPresentation,
    Letter, Object, ObjectId, PresentationMap, Relation, Word,
};

/// A cospan `X --i--> M <--j-- Y` with injective object maps whose images are disjoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cospan {
    label: String,
    i_map: PresentationMap,
    j_map: PresentationMap,
}

impl Cospan {
    pub fn new(label: impl Into<String>, i_map: PresentationMap, j_map: PresentationMap) -> Result<Self, CospanError> {
        if !same_presentation(i_map.target(), j_map.target()) {
            return Err(CospanError::InvariantViolation("legs have different targets".into()));
        }
        if !i_map.is_injective_on_objects() {
            return Err(CospanError::InvariantViolation("incoming object map is not injective".into()));
        }
        if !j_map.is_injective_on_objects() {
            return Err(CospanError::InvariantViolation("outgoing object map is not injective".into()));
        }
        if let Some(o) = i_map.object_map().iter().find(|o| j_map.object_map().contains(o)) {
            return Err(CospanError::InvariantViolation(format!(
                "object {} of the middle is hit by both legs",
                o.0
            )));
        }
        Ok(Cospan { label: label.into(), i_map, j_map })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn x(&self) -> &Arc<GroupoidPresentation> {
        self.i_map.source()
    }

    pub fn y(&self) -> &Arc<GroupoidPresentation> {
        self.j_map.source()
    }

    pub fn m(&self) -> &Arc<GroupoidPresentation> {
        self.i_map.target()
    }

    pub fn i_map(&self) -> &PresentationMap {
        &self.i_map
    }

    pub fn j_map(&self) -> &PresentationMap {
        &self.j_map
    }

    /// Adds a basepoint to the middle at `at`; both legs are carried over unchanged.
    pub fn with_basepoint(&self, at: ObjectId, label: &str) -> Result<(Cospan, GenId), CospanError> {
        let (m, gamma) = add_basepoint(self.m(), at, label)?;
        let m = Arc::new(m);
        let i = self.i_map.retarget(m.clone())?;
        let j = self.j_map.retarget(m)?;
        Ok((Cospan::new(self.label.clone(), i, j)?, gamma))
    }

    /// `|Ob M| - |Ob X|`, the exponent of the `|G|` normalization.
    pub fn normalization_exponent(&self) -> usize {
        self.m().num_objects() - self.x().num_objects()
    }
}

enum Bin {
    At(usize),
    Skip,
    Invalid,
}

/// Pulls back along a leg by evaluating the compiled images of its generators.
struct Restriction {
    words: Vec<Vec<(usize, bool)>>,
}

impl Restriction {
    fn new(m: &PresentationMap) -> Self {
        Restriction {
            words: m
                .generator_map()
                .iter()
                .map(|w| w.letters().iter().map(|l| (l.gen.0, l.inverse)).collect())
                .collect(),
        }
    }

    fn apply(&self, group: &FiniteGroup, images: &[GroupElement], out: &mut Vec<GroupElement>) {
        out.clear();
        for w in &self.words {
            let mut acc = group.identity();
            for &(g, inv) in w {
                let x = images[g];
                acc = group.mul(if inv { group.inv(x) } else { x }, acc);
            }
            out.push(acc);
        }
    }
}

#[derive(Clone)]
struct Tally {
    counts: Vec<u64>,
    invalid: Option<&'static str>,
}

/// One pass over `homs(M)`, binning each hom by its two restrictions.
fn tally<C, R>(c: &Cospan, group: &FiniteGroup, cfg: &EnumConfig, n_rows: usize, n_cols: usize, col_bin: C, row_bin: R) -> Result<Vec<u64>, CospanError>
where
    C: Fn(&[GroupElement]) -> Bin + Sync + Send,
    R: Fn(&[GroupElement]) -> Bin + Sync + Send,
{
    let ri = Restriction::new(c.i_map());
    let rj = Restriction::new(c.j_map());
    let parts = fold_homs(
        c.m(),
        group,
        cfg,
        || (Tally { counts: vec![0; n_rows * n_cols], invalid: None }, Vec::new()),
        |(acc, buf), images| {
            if acc.invalid.is_some() {
                return;
            }
            ri.apply(group, images, buf);
            let col = match col_bin(buf) {
                Bin::At(k) => k,
                Bin::Skip => return,
                Bin::Invalid => {
                    acc.invalid = Some("i");
                    return;
                }
            };
            rj.apply(group, images, buf);
            let row = match row_bin(buf) {
                Bin::At(k) => k,
                Bin::Skip => return,
                Bin::Invalid => {
                    acc.invalid = Some("j");
                    return;
                }
            };
            acc.counts[row * n_cols + col] += 1;
        },
    )?;
    let mut counts = vec![0u64; n_rows * n_cols];
    for (part, _) in parts {
        if let Some(leg) = part.invalid {
            return Err(CospanError::InconsistentMap { leg });
        }
        for (a, b) in counts.iter_mut().zip(part.counts) {
            *a += b;
        }
    }
    Ok(counts)
}

fn hom_index(homs: &[crate::homs::GroupoidHom]) -> HashMap<Vec<GroupElement>, usize> {
    homs.iter().enumerate().map(|(k, h)| (h.images().to_vec(), k)).collect()
}

/// Row basis, column basis and row-major counts.
type RawCounts = (Vec<BasisElement>, Vec<BasisElement>, Vec<u64>);

fn raw_counts(c: &Cospan, group: &FiniteGroup, cfg: &EnumConfig) -> Result<RawCounts, CospanError> {
    let xs = enumerate_homs(c.x(), group, cfg)?;
    let ys = enumerate_homs(c.y(), group, cfg)?;
    let (xi, yi) = (hom_index(&xs), hom_index(&ys));
    let lookup = |idx: &HashMap<Vec<GroupElement>, usize>, images: &[GroupElement]| match idx.get(images) {
        Some(&k) => Bin::At(k),
        None => Bin::Invalid,
    };
    let counts = tally(c, group, cfg, ys.len(), xs.len(), |v| lookup(&xi, v), |v| lookup(&yi, v))?;
    Ok((raw_basis(&ys), raw_basis(&xs), counts))
}

/// Raw counting matrix in the bases of all homs of `X` (columns) and `Y` (rows).
pub fn bfg(c: &Cospan, group: &FiniteGroup, cfg: &EnumConfig) -> Result<TqftMatrix, CospanError> {
    let (rows, cols, counts) = raw_counts(c, group, cfg)?;
    Ok(TqftMatrix::from_counts(rows, cols, &counts, &num_traits::One::one()))
}

/// [`bfg`] scaled by `|G|^-(|Ob M| - |Ob X|)`.
pub fn bbfg(c: &Cospan, group: &FiniteGroup, cfg: &EnumConfig) -> Result<TqftMatrix, CospanError> {
    let (rows, cols, counts) = raw_counts(c, group, cfg)?;
    let scale = inverse_power(group.order(), c.normalization_exponent());
    Ok(TqftMatrix::from_counts(rows, cols, &counts, &scale))
}

/// The functor's value on a cospan, in natural-isomorphism class bases.
pub fn fg_matrix(c: &Cospan, group: &FiniteGroup, cfg: &EnumConfig) -> Result<TqftMatrix, CospanError> {
    let xc = nat_classes(c.x(), group, cfg)?;
    let yc = nat_classes(c.y(), group, cfg)?;
    fg_matrix_with(c, group, cfg, &xc, &yc)
}

/// [`fg_matrix`] with precomputed boundary classes.
pub fn fg_matrix_with(
    c: &Cospan,
    group: &FiniteGroup,
    cfg: &EnumConfig,
    x_classes: &NatClasses,
    y_classes: &NatClasses,
) -> Result<TqftMatrix, CospanError> {
    let col_bin = |v: &[GroupElement]| match x_classes.class_of(v) {
        None => Bin::Invalid,
        Some(k) if x_classes.classes()[k].representative.images() == v => Bin::At(k),
        Some(_) => Bin::Skip,
    };
    let row_bin = |v: &[GroupElement]| match y_classes.class_of(v) {
        None => Bin::Invalid,
        Some(k) => Bin::At(k),
    };
    let counts = tally(c, group, cfg, y_classes.dimension(), x_classes.dimension(), col_bin, row_bin)?;
    let scale = inverse_power(group.order(), c.normalization_exponent());
    Ok(TqftMatrix::from_counts(class_basis(y_classes), class_basis(x_classes), &counts, &scale))
}

/// Glues `c1: X -> Y` and `c2: Y -> Z` along `Y` by pushout.
pub fn compose(c1: &Cospan, c2: &Cospan) -> Result<Cospan, CospanError> {
    if !same_presentation(c1.y(), c2.x()) {
        return Err(CospanError::BoundaryMismatch(format!(
            "outgoing boundary of `{}` differs from incoming boundary of `{}`",
            c1.label(),
            c2.label()
        )));
    }
    let (_, to_m, to_n) = pushout(c1.y(), c1.j_map(), c2.i_map())?;
    let i = c1.i_map().then(&to_m)?;
    let j = c2.j_map().then(&to_n)?;
    Cospan::new(format!("{};{}", c1.label(), c2.label()), i, j)
}

/// The cylinder `X × I` with its two end inclusions.
///
/// The middle has objects `(x, 0)` then `(x, 1)`, generators the level-0
/// copies of those of `X` followed by one rung `(x, 0) -> (x, 1)` per object,
/// and the relations of `X` at level 0. The outgoing leg sends `a: s -> t` to
/// `rung_t ∘ a ∘ rung_s^-1`.
pub fn identity_cospan(px: &Arc<GroupoidPresentation>) -> Cospan {
    let n = px.num_objects();
    let n_gen = px.num_generators();
    let mut m = GroupoidPresentation::new();
    for level in 0..2 {
        for o in &px.objects {
            m.objects.push(Object { id: format!("{}@{level}", o.id), label: o.label.clone() });
        }
    }
    for g in &px.generators {
        m.generators.push(Generator { id: format!("{}@0", g.id), ..g.clone() });
    }
    for (k, o) in px.objects.iter().enumerate() {
        m.generators.push(Generator {
            id: format!("rung.{}", o.id),
            source: ObjectId(k),
            target: ObjectId(k + n),
            label: format!("rung at {}", o.label),
        });
    }
    m.relations = px.relations.iter().map(|r| Relation { lhs: r.lhs.clone(), rhs: r.rhs.clone() }).collect();
    let m = Arc::new(m);

    let i = PresentationMap::identity(px.clone());
    let i = PresentationMap::new(px.clone(), m.clone(), i.object_map().to_vec(), i.generator_map().to_vec())
        .expect("level-0 inclusion is well formed");
    let rung = |o: ObjectId| GenId(n_gen + o.0);
    let j_words = px
        .generators
        .iter()
        .enumerate()
        .map(|(k, g)| {
            Word::from_letters(
                &m,
                ObjectId(g.source.0 + n),
                [
                    Letter { gen: rung(g.source), inverse: true },
                    Letter::pos(k),
                    Letter { gen: rung(g.target), inverse: false },
                ],
            )
        })
        .collect::<Result<Vec<_>, _>>()
        .expect("rung conjugates chain");
    let j = PresentationMap::new(px.clone(), m, (0..n).map(|o| ObjectId(o + n)).collect(), j_words)
        .expect("level-1 inclusion is well formed");
    Cospan::new("id", i, j).expect("cylinder legs are injective and disjoint")
}

/// Componentwise disjoint union of two cospans.
pub fn tensor(c1: &Cospan, c2: &Cospan) -> Result<Cospan, CospanError> {
    let (x, _, _) = coproduct(c1.x(), c2.x());
    let (y, _, _) = coproduct(c1.y(), c2.y());
    let (m, _, _) = coproduct(c1.m(), c2.m());
    let i = coproduct_map(c1.i_map(), c2.i_map(), &x, &m)?;
    let j = coproduct_map(c1.j_map(), c2.j_map(), &y, &m)?;
    Cospan::new(format!("({} ⊗ {})", c1.label(), c2.label()), i, j)
}

/// The state space on `px`: its natural-isomorphism classes, in canonical order.
pub fn object_space(px: &GroupoidPresentation, group: &FiniteGroup, cfg: &EnumConfig) -> Result<NatClasses, HomError> {
    nat_classes(px, group, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    fn circle() -> Arc<GroupoidPresentation> {
        let mut p = GroupoidPresentation::new();
        let o = p.add_object("o", "o");
        p.add_generator("x", o, o, "x");
        Arc::new(p)
    }

    #[test]
    fn identity_cylinder_shape() {
        let c = identity_cospan(&circle());
        assert_eq!(c.m().num_objects(), 2);
        assert_eq!(c.m().num_generators(), 2);
        assert_eq!(c.normalization_exponent(), 1);
        assert!(c.m().validate().is_empty());
    }

    #[test]
    fn identity_cylinder_raw_counts_over_z2() {
        // Each hom of M is a loop image plus a free rung; over Z2 the
        // restriction to the top equals that of the bottom.
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let m = bfg(&identity_cospan(&circle()), &z2, &EnumConfig::default()).unwrap();
        let two = BigRational::from_integer(2.into());
        assert_eq!(m.entries(), &[vec![two.clone(), BigRational::zero()], vec![BigRational::zero(), two]]);
        let n = bbfg(&identity_cospan(&circle()), &z2, &EnumConfig::default()).unwrap();
        assert!(n.is_identity());
    }

    #[test]
    fn empty_identity() {
        let empty = Arc::new(GroupoidPresentation::new());
        let c = identity_cospan(&empty);
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let m = fg_matrix(&c, &s3, &EnumConfig::default()).unwrap();
        assert_eq!(m.shape(), (1, 1));
        assert!(m.entry(0, 0).is_one());
    }

    #[test]
    fn circle_identity_over_s3() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let m = fg_matrix(&identity_cospan(&circle()), &s3, &EnumConfig::default()).unwrap();
        assert_eq!(m.shape(), (3, 3));
        assert!(m.is_identity());
    }

    #[test]
    fn cospan_invariants_are_enforced() {
        let c = circle();
        let id = PresentationMap::identity(c.clone());
        assert!(matches!(Cospan::new("bad", id.clone(), id), Err(CospanError::InvariantViolation(_))));
    }

    #[test]
    fn compose_rejects_mismatched_boundaries() {
        let a = identity_cospan(&circle());
        let mut two = GroupoidPresentation::new();
        two.add_object("p", "p");
        let b = identity_cospan(&Arc::new(two));
        assert!(matches!(compose(&a, &b), Err(CospanError::BoundaryMismatch(_))));
    }

    #[test]
    fn compose_identity_with_itself() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let cfg = EnumConfig::default();
        let id = identity_cospan(&circle());
        let twice = compose(&id, &id).unwrap();
        assert_eq!(twice.m().num_objects(), 3);
        assert!(fg_matrix(&twice, &s3, &cfg).unwrap().is_identity());
        // Cylinder-of-cylinder homs: 6 (loop) * 6 * 6 (rungs) after the gluing relation.
        let count = crate::homs::count_homs(twice.m(), &s3, &cfg).unwrap();
        assert_eq!(count, 6 * 6 * 6);
    }

    #[test]
    fn basepoint_on_middle() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let cfg = EnumConfig::default();
        let c = identity_cospan(&circle());
        let (d, _) = c.with_basepoint(ObjectId(1), "extra").unwrap();
        let six = BigRational::from_integer(6.into());
        assert_eq!(bfg(&d, &s3, &cfg).unwrap(), bfg(&c, &s3, &cfg).unwrap().scaled(&six));
        assert_eq!(bbfg(&d, &s3, &cfg).unwrap(), bbfg(&c, &s3, &cfg).unwrap());
        assert_eq!(fg_matrix(&d, &s3, &cfg).unwrap(), fg_matrix(&c, &s3, &cfg).unwrap());
    }

    #[test]
    fn parallel_assembly_is_deterministic() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let c = compose(&identity_cospan(&circle()), &identity_cospan(&circle())).unwrap();
        let base = fg_matrix(&c, &s3, &EnumConfig::default()).unwrap();
        for workers in [2, 3, 8] {
            assert_eq!(fg_matrix(&c, &s3, &EnumConfig::default().with_parallelism(workers)).unwrap(), base);
        }
    }
}
