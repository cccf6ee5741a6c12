//! Seeded generators of small random presentations, maps and cospans, used
//! by the verification suites and property tests.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::cospan::Cospan;
use crate::group::FiniteGroup;
use crate::homs::{g_consistency_check, EnumConfig};
use crate::presentation::{GroupoidPresentation, Letter, ObjectId, PresentationMap, Relation, Word};

/// Size limits for generated presentations.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub max_objects: usize,
    pub max_generators: usize,
    pub max_relations: usize,
}

impl Limits {
    pub const BOUNDARY: Limits = Limits { max_objects: 2, max_generators: 2, max_relations: 1 };
    pub const MIDDLE: Limits = Limits { max_objects: 4, max_generators: 4, max_relations: 2 };
}

/// A random walk of exactly `len` steps from `start` along generators in
/// either direction, or `None` if it gets stuck.
fn random_walk<R: Rng>(rng: &mut R, p: &GroupoidPresentation, start: ObjectId, len: usize) -> Option<Word> {
    let mut letters = Vec::with_capacity(len);
    let mut at = start;
    for _ in 0..len {
        let options: Vec<Letter> = p
            .generators
            .iter()
            .enumerate()
            .flat_map(|(k, g)| {
                let mut v = Vec::new();
                if g.source == at {
                    v.push(Letter::pos(k));
                }
                if g.target == at {
                    v.push(Letter::neg(k));
                }
                v
            })
            .collect();
        let &l = options.choose(rng)?;
        at = p.letter_endpoints(l).ok()?.1;
        letters.push(l);
    }
    Word::from_letters(p, start, letters).ok()
}

/// A random word from `from` to `to` of length at most `max_len`.
fn random_path<R: Rng>(rng: &mut R, p: &GroupoidPresentation, from: ObjectId, to: ObjectId, max_len: usize) -> Option<Word> {
    for _ in 0..64 {
        let len = rng.gen_range(0..=max_len);
        if let Some(w) = random_walk(rng, p, from, len) {
            if w.target() == to {
                return Some(w);
            }
        }
    }
    None
}

fn random_relation<R: Rng>(rng: &mut R, p: &GroupoidPresentation) -> Option<Relation> {
    if p.generators.is_empty() {
        return None;
    }
    let start = ObjectId(rng.gen_range(0..p.num_objects()));
    let len = rng.gen_range(1..=3);
    let lhs = random_walk(rng, p, start, len)?;
    let rhs = random_path(rng, p, start, lhs.target(), 3)?;
    (lhs != rhs).then_some(Relation { lhs, rhs })
}

/// A random presentation within `limits`, with at least `min_objects` objects.
pub fn random_presentation<R: Rng>(rng: &mut R, limits: Limits, min_objects: usize) -> GroupoidPresentation {
    let mut p = GroupoidPresentation::new();
    let n_obj = rng.gen_range(min_objects.max(1)..=limits.max_objects.max(min_objects).max(1));
    for k in 0..n_obj {
        p.add_object(format!("o{k}"), format!("o{k}"));
    }
    let n_gen = rng.gen_range(0..=limits.max_generators);
    for k in 0..n_gen {
        let s = ObjectId(rng.gen_range(0..n_obj));
        let t = if rng.gen_bool(0.5) { s } else { ObjectId(rng.gen_range(0..n_obj)) };
        p.add_generator(format!("g{k}"), s, t, format!("g{k}"));
    }
    let n_rel = rng.gen_range(0..=limits.max_relations);
    for _ in 0..n_rel {
        if let Some(r) = random_relation(rng, &p) {
            p.relations.push(r);
        }
    }
    p
}

/// A random map `source -> target` with the given object map, or `None`
/// when some generator has no short image path.
fn random_map_with_objects<R: Rng>(
    rng: &mut R,
    source: &Arc<GroupoidPresentation>,
    target: &Arc<GroupoidPresentation>,
    object_map: Vec<ObjectId>,
) -> Option<PresentationMap> {
    let words = source
        .generators
        .iter()
        .map(|g| random_path(rng, target, object_map[g.source.0], object_map[g.target.0], 3))
        .collect::<Option<Vec<_>>>()?;
    PresentationMap::new(source.clone(), target.clone(), object_map, words).ok()
}

/// A random map with arbitrary (not necessarily injective) object map.
pub fn random_map<R: Rng>(
    rng: &mut R,
    source: &Arc<GroupoidPresentation>,
    target: &Arc<GroupoidPresentation>,
) -> Option<PresentationMap> {
    let object_map = (0..source.num_objects())
        .map(|_| ObjectId(rng.gen_range(0..target.num_objects())))
        .collect();
    random_map_with_objects(rng, source, target, object_map)
}

/// A random cospan `x -> M <- y` whose legs respect the boundary relations
/// for homs into `group`. Boundary relations are imported into `M` along
/// the incoming leg so that they have a chance to hold.
pub fn random_cospan<R: Rng>(
    rng: &mut R,
    x: &Arc<GroupoidPresentation>,
    y: &Arc<GroupoidPresentation>,
    group: &FiniteGroup,
    limits: Limits,
) -> Option<Cospan> {
    let cfg = EnumConfig::default();
    let boundary = x.num_objects() + y.num_objects();
    if boundary > limits.max_objects {
        return None;
    }
    for _ in 0..200 {
        let mut m = random_presentation(rng, Limits { max_relations: 0, ..limits }, boundary);
        // Injective, disjoint placement of both boundaries.
        let mut slots: Vec<ObjectId> = (0..m.num_objects()).map(ObjectId).collect();
        slots.shuffle(rng);
        let (xs, rest) = slots.split_at(x.num_objects());
        let ys = &rest[..y.num_objects()];

        let budget = limits.max_relations;
        let own = rng.gen_range(0..=budget);
        for _ in 0..own {
            if let Some(r) = random_relation(rng, &m) {
                m.relations.push(r);
            }
        }
        let m0 = Arc::new(m.clone());
        let Some(i) = random_map_with_objects(rng, x, &m0, xs.to_vec()) else { continue };
        let Some(j) = random_map_with_objects(rng, y, &m0, ys.to_vec()) else { continue };

        // Import boundary relations through the legs while the budget lasts.
        let mut imported = Vec::new();
        for (leg, p) in [(&i, x), (&j, y)] {
            for r in &p.relations {
                let (lhs, rhs) = (leg.apply(&r.lhs).ok()?, leg.apply(&r.rhs).ok()?);
                if lhs != rhs && m.relations.len() + imported.len() < budget {
                    imported.push(Relation { lhs, rhs });
                }
            }
        }
        m.relations.extend(imported);
        let m = Arc::new(m);
        let (Ok(i), Ok(j)) = (i.retarget(m.clone()), j.retarget(m.clone())) else { continue };
        let consistent = |leg: &PresentationMap| matches!(g_consistency_check(leg, group, &cfg), Ok(None));
        if !consistent(&i) || !consistent(&j) {
            continue;
        }
        if let Ok(c) = Cospan::new("random", i, j) {
            return Some(c);
        }
    }
    None
}

/// Two composable random cospans `X -> Y -> Z`, glued along a `Y` with at
/// least one generator.
pub fn random_composable_pair<R: Rng>(rng: &mut R, group: &FiniteGroup) -> (Cospan, Cospan) {
    loop {
        let x = Arc::new(random_presentation(rng, Limits::BOUNDARY, 1));
        let y = Arc::new(random_presentation(rng, Limits::BOUNDARY, 1));
        if y.generators.is_empty() {
            continue;
        }
        let z = Arc::new(random_presentation(rng, Limits::BOUNDARY, 1));
        let Some(c1) = random_cospan(rng, &x, &y, group, Limits::MIDDLE) else { continue };
        let Some(c2) = random_cospan(rng, &y, &z, group, Limits::MIDDLE) else { continue };
        return (c1.with_label("c1"), c2.with_label("c2"));
    }
}

/// Apex `Y` with two arbitrary maps out of it, for pushout checks.
pub struct PushoutSetup {
    pub apex: Arc<GroupoidPresentation>,
    pub f: PresentationMap,
    pub g: PresentationMap,
}

pub fn random_pushout_setup<R: Rng>(rng: &mut R) -> PushoutSetup {
    let small = Limits { max_objects: 3, max_generators: 3, max_relations: 1 };
    loop {
        let apex = Arc::new(random_presentation(rng, Limits { max_objects: 3, max_generators: 2, max_relations: 1 }, 0));
        let m = Arc::new(random_presentation(rng, small, 1));
        let n = Arc::new(random_presentation(rng, small, 1));
        let (Some(f), Some(g)) = (random_map(rng, &apex, &m), random_map(rng, &apex, &n)) else { continue };
        return PushoutSetup { apex, f, g };
    }
}
