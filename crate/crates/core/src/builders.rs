//! Concrete presentations and cospans: the pair of pants, the three-strand
//! tube, and braid / loop-braid generators realized as twisted cylinders.
//!
//! Products such as `x_i x_{i+1} x_i^-1` below are group products under
//! evaluation, so the stored words list the same letters right to left.

use std::sync::Arc;

use crate::cospan::{identity_cospan, Cospan};
use crate::error::{CospanError, PresentationError};
use crate::presentation::{GroupoidPresentation, Letter, ObjectId, PresentationMap, Word};

/// One object with `n` free loops `x1..xn`.
pub fn bouquet(n: usize) -> GroupoidPresentation {
    let mut p = GroupoidPresentation::new();
    let o = p.add_object("o", "o");
    for k in 1..=n {
        p.add_generator(format!("x{k}"), o, o, format!("x{k}"));
    }
    p
}

pub fn circle() -> GroupoidPresentation {
    bouquet(1)
}

pub fn figure_eight() -> GroupoidPresentation {
    bouquet(2)
}

/// Two one-object circles.
pub fn two_circles() -> GroupoidPresentation {
    let mut p = GroupoidPresentation::new();
    let a = p.add_object("p", "p");
    let b = p.add_object("q", "q");
    p.add_generator("x1", a, a, "x1");
    p.add_generator("x2", b, b, "x2");
    p
}

/// `⟨a | a^k = 1⟩` on one object.
pub fn cyclic_relator(k: usize) -> GroupoidPresentation {
    let mut p = bouquet(1);
    let o = ObjectId(0);
    let w = Word::from_letters(&p, o, vec![Letter::pos(0); k]).expect("loop chains");
    p.add_relation(w, Word::empty(o)).expect("relation endpoints agree");
    p
}

/// Word whose evaluation is the group product `factors[0] * factors[1] * ...`.
fn product_word(p: &GroupoidPresentation, start: ObjectId, factors: &[Letter]) -> Result<Word, PresentationError> {
    Word::from_letters(p, start, factors.iter().rev().copied())
}

/// The cospan `X --i∘φ--> X×I <--j-- X` of an endomorphism `φ` of `X`:
/// the identity cylinder with its incoming leg precomposed by `φ`.
pub fn twisted_cylinder(phi: &PresentationMap, label: &str) -> Result<Cospan, CospanError> {
    let cyl = identity_cospan(phi.source());
    let i = phi.then(cyl.i_map())?;
    Cospan::new(label, i, cyl.j_map().clone())
}

/// An endomorphism of `bouquet(n)` given by product words for each generator.
fn bouquet_endomorphism(n: usize, images: Vec<Vec<Letter>>) -> PresentationMap {
    let p = Arc::new(bouquet(n));
    let words = images
        .iter()
        .map(|f| product_word(&p, ObjectId(0), f))
        .collect::<Result<Vec<_>, _>>()
        .expect("loops chain");
    PresentationMap::new(p.clone(), p, vec![ObjectId(0)], words).expect("one-object endomorphism")
}

fn check_index(n: usize, i: usize) -> Result<(), CospanError> {
    if i == 0 || i >= n {
        Err(CospanError::Parameter(format!("generator index {i} out of range 1..{n}")))
    } else {
        Ok(())
    }
}

fn x(k: usize) -> Letter {
    Letter::pos(k - 1)
}

fn x_inv(k: usize) -> Letter {
    Letter::neg(k - 1)
}

/// Artin action of `σ_i` (or its inverse) on the free group `F_n`:
/// `σ_i: x_i ↦ x_i x_{i+1} x_i^-1, x_{i+1} ↦ x_i`.
pub fn artin_automorphism(n: usize, i: usize, inverse: bool) -> Result<PresentationMap, CospanError> {
    check_index(n, i)?;
    let images = (1..=n)
        .map(|k| match (k, inverse) {
            (k, false) if k == i => vec![x(i), x(i + 1), x_inv(i)],
            (k, false) if k == i + 1 => vec![x(i)],
            (k, true) if k == i => vec![x(i + 1)],
            (k, true) if k == i + 1 => vec![x_inv(i + 1), x(i), x(i + 1)],
            (k, _) => vec![x(k)],
        })
        .collect();
    Ok(bouquet_endomorphism(n, images))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LoopBraidKind {
    /// `x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}^-1 x_i x_{i+1}`
    Band,
    /// `x_i ↔ x_{i+1}`
    Permutation,
}

impl std::str::FromStr for LoopBraidKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "band" | "sigma" => Ok(LoopBraidKind::Band),
            "permutation" | "rho" => Ok(LoopBraidKind::Permutation),
            other => Err(format!("unknown loop-braid kind `{other}` (expected band or permutation)")),
        }
    }
}

pub fn loop_braid_automorphism(n: usize, i: usize, kind: LoopBraidKind) -> Result<PresentationMap, CospanError> {
    check_index(n, i)?;
    let images = (1..=n)
        .map(|k| match kind {
            LoopBraidKind::Band if k == i => vec![x(i + 1)],
            LoopBraidKind::Band if k == i + 1 => vec![x_inv(i + 1), x(i), x(i + 1)],
            LoopBraidKind::Permutation if k == i => vec![x(i + 1)],
            LoopBraidKind::Permutation if k == i + 1 => vec![x(i)],
            _ => vec![x(k)],
        })
        .collect();
    Ok(bouquet_endomorphism(n, images))
}

pub fn artin_braid_generator(n: usize, i: usize, inverse: bool) -> Result<Cospan, CospanError> {
    let phi = artin_automorphism(n, i, inverse)?;
    let label = if inverse { format!("sigma{i}^-1") } else { format!("sigma{i}") };
    twisted_cylinder(&phi, &label)
}

pub fn loop_braid_generator(n: usize, i: usize, kind: LoopBraidKind) -> Result<Cospan, CospanError> {
    let phi = loop_braid_automorphism(n, i, kind)?;
    let label = match kind {
        LoopBraidKind::Band => format!("band{i}"),
        LoopBraidKind::Permutation => format!("rho{i}"),
    };
    twisted_cylinder(&phi, &label)
}

/// Two circles merging into one.
///
/// Middle: objects `p, q, r`; loops `a` at `p`, `b` at `q`; paths
/// `c: r -> p`, `d: p -> q`. The outgoing circle runs out along `c`, round
/// `a`, across `d`, round `b` and back, so a hom `h` sends it to
/// `c^-1 d^-1 b d a c`.
pub fn pair_of_pants() -> Cospan {
    let x = Arc::new(two_circles());

    let mut y = GroupoidPresentation::new();
    let r = y.add_object("r", "r");
    y.add_generator("y1", r, r, "y1");
    let y = Arc::new(y);

    let mut m = GroupoidPresentation::new();
    let p = m.add_object("p", "p");
    let q = m.add_object("q", "q");
    let r = m.add_object("r", "r");
    let a = m.add_generator("a", p, p, "a");
    let b = m.add_generator("b", q, q, "b");
    let c = m.add_generator("c", r, p, "c");
    let d = m.add_generator("d", p, q, "d");
    let m = Arc::new(m);

    let pos = |g: crate::presentation::GenId| Letter { gen: g, inverse: false };
    let neg = |g: crate::presentation::GenId| Letter { gen: g, inverse: true };
    let i = PresentationMap::new(
        x,
        m.clone(),
        vec![p, q],
        vec![Word::generator(&m, a).unwrap(), Word::generator(&m, b).unwrap()],
    )
    .expect("pants incoming leg");
    let loop_word = product_word(&m, r, &[neg(c), neg(d), pos(b), pos(d), pos(a), pos(c)]).expect("loop chains");
    let j = PresentationMap::new(y, m, vec![r], vec![loop_word]).expect("pants outgoing leg");
    Cospan::new("pair-of-pants", i, j).expect("pants legs are disjoint")
}

/// Three strands in a cube, two of them fused into a tube.
///
/// Incoming boundary: a twice-punctured disk (object `x` with loops `x1`,
/// `x2`) plus two contractible points `u`, `v`. Outgoing boundary: a circle
/// (object `y`, loop `y1`) plus a point `w`. The middle has a component free
/// on `x1, x2` containing `x` and `y`, joined by `g3: x -> y`, and a
/// contractible component on `u, v, w` spanned by `g1: u -> v`, `g2: u -> w`.
/// A hom sends `y1` to `g3 x2 x1 g3^-1`.
pub fn three_strand_tube() -> Cospan {
    let mut x = GroupoidPresentation::new();
    let xo = x.add_object("x", "x");
    x.add_object("u", "u");
    x.add_object("v", "v");
    x.add_generator("x1", xo, xo, "x1");
    x.add_generator("x2", xo, xo, "x2");
    let x = Arc::new(x);

    let mut y = GroupoidPresentation::new();
    let yo = y.add_object("y", "y");
    y.add_object("w", "w");
    y.add_generator("y1", yo, yo, "y1");
    let y = Arc::new(y);

    let mut m = GroupoidPresentation::new();
    let mx = m.add_object("x", "x");
    let mu = m.add_object("u", "u");
    let mv = m.add_object("v", "v");
    let my = m.add_object("y", "y");
    let mw = m.add_object("w", "w");
    let x1 = m.add_generator("x1", mx, mx, "x1");
    let x2 = m.add_generator("x2", mx, mx, "x2");
    m.add_generator("g1", mu, mv, "gamma1");
    m.add_generator("g2", mu, mw, "gamma2");
    let g3 = m.add_generator("g3", mx, my, "gamma3");
    let m = Arc::new(m);

    let i = PresentationMap::new(
        x,
        m.clone(),
        vec![mx, mu, mv],
        vec![Word::generator(&m, x1).unwrap(), Word::generator(&m, x2).unwrap()],
    )
    .expect("tube incoming leg");
    let pos = |g| Letter { gen: g, inverse: false };
    let loop_word = product_word(&m, my, &[pos(g3), pos(x2), pos(x1), Letter { gen: g3, inverse: true }])
        .expect("loop chains");
    let j = PresentationMap::new(y, m, vec![my, mw], vec![loop_word]).expect("tube outgoing leg");
    Cospan::new("three-strand-tube", i, j).expect("tube legs are disjoint")
}

/// A named builder invocation and its output.
#[derive(Clone, Debug)]
pub struct ExampleSpec {
    pub name: String,
    pub parameters: Vec<(String, String)>,
    pub cospan: Cospan,
}

pub const EXAMPLE_NAMES: &[&str] = &["pair-of-pants", "three-strand-tube", "artin", "loop-braid", "identity"];

/// Fixture presentations addressable by name.
pub fn named_presentation(name: &str) -> Option<GroupoidPresentation> {
    match name {
        "empty" => Some(GroupoidPresentation::new()),
        "circle" => Some(circle()),
        "two-circles" => Some(two_circles()),
        "figure-eight" => Some(figure_eight()),
        _ => None,
    }
}

/// Builds an example from a name and positional parameters, e.g.
/// `artin 3 1`, `artin 3 1 inverse`, `loop-braid 3 2 band`, `identity circle`.
pub fn build_example(name: &str, params: &[String]) -> Result<ExampleSpec, CospanError> {
    let bad = |msg: String| CospanError::Parameter(msg);
    let num = |k: usize, what: &str| -> Result<usize, CospanError> {
        params
            .get(k)
            .ok_or_else(|| bad(format!("`{name}` needs parameter {what}")))?
            .parse()
            .map_err(|_| bad(format!("parameter {what} must be a positive integer")))
    };
    let (cospan, named): (Cospan, Vec<(&str, String)>) = match name {
        "pair-of-pants" => (pair_of_pants(), vec![]),
        "three-strand-tube" => (three_strand_tube(), vec![]),
        "artin" => {
            let (n, i) = (num(0, "n")?, num(1, "i")?);
            let inverse = match params.get(2).map(String::as_str) {
                None => false,
                Some("inverse") | Some("inv") | Some("-1") => true,
                Some(other) => return Err(bad(format!("unexpected artin flag `{other}`"))),
            };
            (artin_braid_generator(n, i, inverse)?, vec![("n", n.to_string()), ("i", i.to_string()), ("inverse", inverse.to_string())])
        }
        "loop-braid" => {
            let (n, i) = (num(0, "n")?, num(1, "i")?);
            let kind_str = params.get(2).map(String::as_str).unwrap_or("band");
            let kind: LoopBraidKind = kind_str.parse().map_err(bad)?;
            (loop_braid_generator(n, i, kind)?, vec![("n", n.to_string()), ("i", i.to_string()), ("kind", kind_str.to_string())])
        }
        "identity" => {
            let which = params.first().map(String::as_str).unwrap_or("circle");
            let p = named_presentation(which).ok_or_else(|| bad(format!("unknown presentation `{which}`")))?;
            (identity_cospan(&Arc::new(p)).with_label(format!("id({which})")), vec![("presentation", which.to_string())])
        }
        other => {
            return Err(bad(format!("unknown example `{other}`; available: {}", EXAMPLE_NAMES.join(", "))))
        }
    };
    Ok(ExampleSpec {
        name: name.to_string(),
        parameters: named.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        cospan,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cospan::{compose, fg_matrix};
    use crate::group::FiniteGroup;
    use crate::homs::{g_consistency_check, EnumConfig};

    #[test]
    fn artin_inverse_composes_to_identity_automorphism() {
        for n in 2..=4 {
            for i in 1..n {
                let s = artin_automorphism(n, i, false).unwrap();
                let t = artin_automorphism(n, i, true).unwrap();
                let id = PresentationMap::identity(s.source().clone());
                assert_eq!(s.then(&t).unwrap(), id);
                assert_eq!(t.then(&s).unwrap(), id);
            }
        }
    }

    #[test]
    fn artin_braid_relation_as_automorphisms() {
        let s1 = artin_automorphism(3, 1, false).unwrap();
        let s2 = artin_automorphism(3, 2, false).unwrap();
        let lhs = s1.then(&s2).unwrap().then(&s1).unwrap();
        let rhs = s2.then(&s1).unwrap().then(&s2).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn index_range() {
        assert!(artin_braid_generator(3, 0, false).is_err());
        assert!(artin_braid_generator(3, 3, false).is_err());
        assert!(loop_braid_generator(2, 2, LoopBraidKind::Band).is_err());
    }

    #[test]
    fn builders_are_valid_and_consistent() {
        let cfg = EnumConfig::default();
        let groups = [FiniteGroup::cyclic(2).unwrap(), FiniteGroup::symmetric(3).unwrap()];
        let cospans = vec![
            pair_of_pants(),
            three_strand_tube(),
            artin_braid_generator(3, 1, false).unwrap(),
            artin_braid_generator(3, 2, true).unwrap(),
            loop_braid_generator(3, 1, LoopBraidKind::Band).unwrap(),
            loop_braid_generator(3, 2, LoopBraidKind::Permutation).unwrap(),
        ];
        for c in &cospans {
            for p in [c.x(), c.y(), c.m()] {
                assert!(p.validate().is_empty(), "{}: {:?}", c.label(), p.validate());
            }
            for g in &groups {
                assert_eq!(g_consistency_check(c.i_map(), g, &cfg).unwrap(), None);
                assert_eq!(g_consistency_check(c.j_map(), g, &cfg).unwrap(), None);
            }
        }
    }

    #[test]
    fn builders_are_deterministic() {
        assert_eq!(pair_of_pants(), pair_of_pants());
        assert_eq!(three_strand_tube(), three_strand_tube());
        assert_eq!(artin_braid_generator(4, 2, true).unwrap(), artin_braid_generator(4, 2, true).unwrap());
    }

    #[test]
    fn braid_inverse_matrix_over_s3() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let cfg = EnumConfig::default();
        let s = artin_braid_generator(2, 1, false).unwrap();
        let t = artin_braid_generator(2, 1, true).unwrap();
        let ms = fg_matrix(&s, &s3, &cfg).unwrap();
        let mt = fg_matrix(&t, &s3, &cfg).unwrap();
        assert!(mt.matmul(&ms).unwrap().is_identity());
        assert!(ms.matmul(&mt).unwrap().is_identity());
        assert!(fg_matrix(&compose(&s, &t).unwrap(), &s3, &cfg).unwrap().is_identity());
    }

    #[test]
    fn build_example_parsing() {
        let e = build_example("artin", &["3".into(), "2".into(), "inverse".into()]).unwrap();
        assert_eq!(e.cospan.label(), "sigma2^-1");
        assert!(build_example("artin", &["3".into()]).is_err());
        assert!(build_example("loop-braid", &["3".into(), "1".into(), "twist".into()]).is_err());
        assert!(build_example("nope", &[]).is_err());
        assert_eq!(build_example("identity", &["figure-eight".into()]).unwrap().cospan.x().num_generators(), 2);
    }
}
