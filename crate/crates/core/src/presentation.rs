//! Finitely presented groupoids, words in their generators, maps between
//! presentations, and the colimits used to glue cospans.
//!
//! Words are kept freely reduced at all times. Relations are never used for
//! rewriting; downstream code only ever evaluates both sides in a finite group.
//!
//! Composition follows application order: the word `[a, b]` means "first
//! `a`, then `b`", i.e. the composite `b ∘ a`.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::PresentationError;
use crate::unionfind::DisjointSets;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjectId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenId(pub usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Object {
    pub id: String,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub id: String,
    pub source: ObjectId,
    pub target: ObjectId,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

/// A generator or its formal inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: GenId,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(gen: usize) -> Self {
        Letter { gen: GenId(gen), inverse: false }
    }

    pub fn neg(gen: usize) -> Self {
        Letter { gen: GenId(gen), inverse: true }
    }

    pub fn inverted(self) -> Self {
        Letter { gen: self.gen, inverse: !self.inverse }
    }
}

/// A freely reduced, composable word with explicit endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    source: ObjectId,
    target: ObjectId,
    letters: Vec<Letter>,
}

impl Word {
    /// The identity path at `at`.
    pub fn empty(at: ObjectId) -> Self {
        Word { source: at, target: at, letters: Vec::new() }
    }

    pub fn generator(p: &GroupoidPresentation, gen: GenId) -> Result<Self, PresentationError> {
        let g = p.generator(gen)?;
        Ok(Word { source: g.source, target: g.target, letters: vec![Letter { gen, inverse: false }] })
    }

    /// Builds a word from letters in application order starting at `start`,
    /// checking the chain condition and reducing freely.
    pub fn from_letters(
        p: &GroupoidPresentation,
        start: ObjectId,
        letters: impl IntoIterator<Item = Letter>,
    ) -> Result<Self, PresentationError> {
        p.object(start)?;
        let mut w = Word::empty(start);
        for (position, letter) in letters.into_iter().enumerate() {
            let (s, t) = p.letter_endpoints(letter)?;
            if s != w.target {
                return Err(PresentationError::BrokenChain { position, expected: w.target.0, found: s.0 });
            }
            w.push(letter, t);
        }
        Ok(w)
    }

    /// Like [`Word::from_letters`], but the start is read off the first letter.
    pub fn parse(p: &GroupoidPresentation, letters: &[Letter]) -> Result<Self, PresentationError> {
        let first = letters.first().ok_or_else(|| {
            PresentationError::Invalid("cannot infer endpoints of an empty word".into())
        })?;
        let (start, _) = p.letter_endpoints(*first)?;
        Word::from_letters(p, start, letters.iter().copied())
    }

    /// Constructs without consulting a presentation. Letters are reduced but
    /// the chain condition is the caller's responsibility.
    #[cfg(test)]
    pub(crate) fn from_raw(source: ObjectId, target: ObjectId, letters: Vec<Letter>) -> Self {
        let mut w = Word { source, target: source, letters: Vec::with_capacity(letters.len()) };
        for l in letters {
            w.push(l, target);
        }
        w.target = target;
        w
    }

    fn push(&mut self, letter: Letter, new_target: ObjectId) {
        if self.letters.last() == Some(&letter.inverted()) {
            self.letters.pop();
        } else {
            self.letters.push(letter);
        }
        self.target = new_target;
    }

    pub fn source(&self) -> ObjectId {
        self.source
    }

    pub fn target(&self) -> ObjectId {
        self.target
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self` followed by `next`, freely reduced.
    pub fn then(&self, next: &Word) -> Result<Word, PresentationError> {
        if self.target != next.source {
            return Err(PresentationError::EndpointMismatch {
                first_target: self.target.0,
                second_source: next.source.0,
            });
        }
        let mut w = self.clone();
        for &l in &next.letters {
            if w.letters.last() == Some(&l.inverted()) {
                w.letters.pop();
            } else {
                w.letters.push(l);
            }
        }
        w.target = next.target;
        Ok(w)
    }

    pub fn inverse(&self) -> Word {
        Word {
            source: self.target,
            target: self.source,
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
        }
    }

    /// Re-indexes generators and objects, e.g. when embedding into a colimit.
    pub(crate) fn reindex(&self, obj: impl Fn(ObjectId) -> ObjectId, gen: impl Fn(GenId) -> GenId) -> Word {
        Word {
            source: obj(self.source),
            target: obj(self.target),
            letters: self.letters.iter().map(|l| Letter { gen: gen(l.gen), inverse: l.inverse }).collect(),
        }
    }

    /// Chain-condition and range check against `p`.
    pub fn check_in(&self, p: &GroupoidPresentation) -> Result<(), PresentationError> {
        p.object(self.source)?;
        p.object(self.target)?;
        let mut at = self.source;
        for (position, &l) in self.letters.iter().enumerate() {
            let (s, t) = p.letter_endpoints(l)?;
            if s != at {
                return Err(PresentationError::BrokenChain { position, expected: at.0, found: s.0 });
            }
            at = t;
        }
        if at != self.target {
            return Err(PresentationError::Invalid(format!(
                "word ends at object {} but declares target {}",
                at.0, self.target.0
            )));
        }
        Ok(())
    }
}

/// `w1` then `w2` (the composite `w2 ∘ w1`).
pub fn compose_words(w1: &Word, w2: &Word) -> Result<Word, PresentationError> {
    w1.then(w2)
}

pub fn invert_word(w: &Word) -> Word {
    w.inverse()
}

/// A structural problem found by [`GroupoidPresentation::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    DuplicateObjectId(String),
    DuplicateGeneratorId(String),
    UndeclaredEndpoint { generator: String, object: usize },
    BadRelationWord { relation: usize, side: &'static str, reason: String },
    RelationEndpoints { relation: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateObjectId(id) => write!(f, "duplicate object id `{id}`"),
            Violation::DuplicateGeneratorId(id) => write!(f, "duplicate generator id `{id}`"),
            Violation::UndeclaredEndpoint { generator, object } => {
                write!(f, "generator `{generator}` uses undeclared object {object}")
            }
            Violation::BadRelationWord { relation, side, reason } => {
                write!(f, "relation {relation} {side}: {reason}")
            }
            Violation::RelationEndpoints { relation } => {
                write!(f, "relation {relation} has sides with different endpoints")
            }
        }
    }
}

/// A finitely presented groupoid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupoidPresentation {
    pub objects: Vec<Object>,
    pub generators: Vec<Generator>,
    pub relations: Vec<Relation>,
}

impl GroupoidPresentation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_object(&mut self, id: impl Into<String>, label: impl Into<String>) -> ObjectId {
        self.objects.push(Object { id: id.into(), label: label.into() });
        ObjectId(self.objects.len() - 1)
    }

    pub fn add_generator(
        &mut self,
        id: impl Into<String>,
        source: ObjectId,
        target: ObjectId,
        label: impl Into<String>,
    ) -> GenId {
        self.generators.push(Generator { id: id.into(), source, target, label: label.into() });
        GenId(self.generators.len() - 1)
    }

    pub fn add_relation(&mut self, lhs: Word, rhs: Word) -> Result<(), PresentationError> {
        lhs.check_in(self)?;
        rhs.check_in(self)?;
        if lhs.source != rhs.source || lhs.target != rhs.target {
            return Err(PresentationError::Invalid("relation sides have different endpoints".into()));
        }
        self.relations.push(Relation { lhs, rhs });
        Ok(())
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn object(&self, o: ObjectId) -> Result<&Object, PresentationError> {
        self.objects.get(o.0).ok_or(PresentationError::UnknownObject(o.0))
    }

    pub fn generator(&self, g: GenId) -> Result<&Generator, PresentationError> {
        self.generators.get(g.0).ok_or(PresentationError::UnknownGenerator(g.0))
    }

    pub fn object_by_id(&self, id: &str) -> Option<ObjectId> {
        self.objects.iter().position(|o| o.id == id).map(ObjectId)
    }

    pub fn generator_by_id(&self, id: &str) -> Option<GenId> {
        self.generators.iter().position(|g| g.id == id).map(GenId)
    }

    /// (start, end) of a letter, in application order.
    pub fn letter_endpoints(&self, l: Letter) -> Result<(ObjectId, ObjectId), PresentationError> {
        let g = self.generator(l.gen)?;
        Ok(if l.inverse { (g.target, g.source) } else { (g.source, g.target) })
    }

    /// Collects every structural violation; never stops at the first one.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        for o in &self.objects {
            if !seen.insert(o.id.as_str()) {
                out.push(Violation::DuplicateObjectId(o.id.clone()));
            }
        }
        let mut seen = HashSet::new();
        for g in &self.generators {
            if !seen.insert(g.id.as_str()) {
                out.push(Violation::DuplicateGeneratorId(g.id.clone()));
            }
            for end in [g.source, g.target] {
                if end.0 >= self.objects.len() {
                    out.push(Violation::UndeclaredEndpoint { generator: g.id.clone(), object: end.0 });
                }
            }
        }
        for (i, r) in self.relations.iter().enumerate() {
            let mut ok = true;
            for (side, w) in [("lhs", &r.lhs), ("rhs", &r.rhs)] {
                if let Err(e) = w.check_in(self) {
                    ok = false;
                    out.push(Violation::BadRelationWord { relation: i, side, reason: e.to_string() });
                }
            }
            if ok && (r.lhs.source != r.rhs.source || r.lhs.target != r.rhs.target) {
                out.push(Violation::RelationEndpoints { relation: i });
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Connected components of the underlying undirected graph, each sorted,
    /// ordered by minimal member.
    pub fn path_components(&self) -> Vec<Vec<ObjectId>> {
        let mut ds = DisjointSets::new(self.objects.len());
        for g in &self.generators {
            ds.union(g.source.0, g.target.0);
        }
        let (class, count) = ds.classes();
        let mut out = vec![Vec::new(); count];
        for (o, c) in class.into_iter().enumerate() {
            out[c].push(ObjectId(o));
        }
        out
    }

    fn fresh_object_id(&self, base: &str) -> String {
        fresh_id(base, |s| self.object_by_id(s).is_some())
    }

    fn fresh_generator_id(&self, base: &str) -> String {
        fresh_id(base, |s| self.generator_by_id(s).is_some())
    }
}

fn fresh_id(base: &str, taken: impl Fn(&str) -> bool) -> String {
    if !taken(base) {
        return base.to_string();
    }
    (1..).map(|k| format!("{base}#{k}")).find(|s| !taken(s)).unwrap()
}

pub(crate) fn same_presentation(a: &Arc<GroupoidPresentation>, b: &Arc<GroupoidPresentation>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A functor between presented groupoids, given on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationMap {
    source: Arc<GroupoidPresentation>,
    target: Arc<GroupoidPresentation>,
    object_map: Vec<ObjectId>,
    generator_map: Vec<Word>,
}

impl PresentationMap {
    /// Checks sizes, ranges and endpoint compatibility. Whether relations are
    /// respected is not decidable in general and is not checked here.
    pub fn new(
        source: Arc<GroupoidPresentation>,
        target: Arc<GroupoidPresentation>,
        object_map: Vec<ObjectId>,
        generator_map: Vec<Word>,
    ) -> Result<Self, PresentationError> {
        if object_map.len() != source.num_objects() {
            return Err(PresentationError::InvalidMap(format!(
                "object map has {} entries for {} objects",
                object_map.len(),
                source.num_objects()
            )));
        }
        if generator_map.len() != source.num_generators() {
            return Err(PresentationError::InvalidMap(format!(
                "generator map has {} entries for {} generators",
                generator_map.len(),
                source.num_generators()
            )));
        }
        for &o in &object_map {
            target.object(o)?;
        }
        for (g, w) in source.generators.iter().zip(&generator_map) {
            w.check_in(&target)?;
            let s = object_map.get(g.source.0).ok_or(PresentationError::UnknownObject(g.source.0))?;
            let t = object_map.get(g.target.0).ok_or(PresentationError::UnknownObject(g.target.0))?;
            if w.source != *s || w.target != *t {
                return Err(PresentationError::InvalidMap(format!(
                    "image of generator `{}` runs {} -> {}, expected {} -> {}",
                    g.id, w.source.0, w.target.0, s.0, t.0
                )));
            }
        }
        Ok(PresentationMap { source, target, object_map, generator_map })
    }

    pub fn identity(p: Arc<GroupoidPresentation>) -> Self {
        let object_map = (0..p.num_objects()).map(ObjectId).collect();
        let generator_map = p
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| Word { source: g.source, target: g.target, letters: vec![Letter::pos(i)] })
            .collect();
        PresentationMap { source: p.clone(), target: p, object_map, generator_map }
    }

    pub fn source(&self) -> &Arc<GroupoidPresentation> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GroupoidPresentation> {
        &self.target
    }

    pub fn object_map(&self) -> &[ObjectId] {
        &self.object_map
    }

    pub fn generator_map(&self) -> &[Word] {
        &self.generator_map
    }

    pub fn map_object(&self, o: ObjectId) -> Result<ObjectId, PresentationError> {
        self.object_map.get(o.0).copied().ok_or(PresentationError::UnknownObject(o.0))
    }

    pub fn map_generator(&self, g: GenId) -> Result<&Word, PresentationError> {
        self.generator_map.get(g.0).ok_or(PresentationError::UnknownGenerator(g.0))
    }

    /// Letterwise substitution, freely reduced.
    pub fn apply(&self, w: &Word) -> Result<Word, PresentationError> {
        let mut out = Word::empty(self.map_object(w.source)?);
        for &l in &w.letters {
            let image = self.map_generator(l.gen)?;
            let image = if l.inverse { image.inverse() } else { image.clone() };
            out = out.then(&image)?;
        }
        Ok(out)
    }

    /// `self` followed by `next`, i.e. `next ∘ self`.
    pub fn then(&self, next: &PresentationMap) -> Result<PresentationMap, PresentationError> {
        if !same_presentation(&self.target, &next.source) {
            return Err(PresentationError::InvalidMap("composable maps must share a middle presentation".into()));
        }
        let object_map = self.object_map.iter().map(|&o| next.object_map[o.0]).collect();
        let generator_map = self.generator_map.iter().map(|w| next.apply(w)).collect::<Result<_, _>>()?;
        Ok(PresentationMap { source: self.source.clone(), target: next.target.clone(), object_map, generator_map })
    }

    /// Same data, viewed as a map into `target`, which must extend the
    /// current target index-wise (same leading objects and generators).
    pub fn retarget(&self, target: Arc<GroupoidPresentation>) -> Result<PresentationMap, PresentationError> {
        PresentationMap::new(self.source.clone(), target, self.object_map.clone(), self.generator_map.clone())
    }

    pub fn is_injective_on_objects(&self) -> bool {
        let mut seen = HashSet::new();
        self.object_map.iter().all(|o| seen.insert(*o))
    }
}

pub fn apply_map(m: &PresentationMap, w: &Word) -> Result<Word, PresentationError> {
    m.apply(w)
}

fn prefixed(prefix: &str, id: &str) -> String {
    format!("{prefix}.{id}")
}

/// Disjoint union; objects and generators of `p1` come first, ids prefixed `1.` and `2.`.
pub fn coproduct(
    p1: &Arc<GroupoidPresentation>,
    p2: &Arc<GroupoidPresentation>,
) -> (Arc<GroupoidPresentation>, PresentationMap, PresentationMap) {
    let mut p = GroupoidPresentation::new();
    let (o1, g1) = (p1.num_objects(), p1.num_generators());
    for (prefix, part, obj_off, gen_off) in [("1", p1, 0, 0), ("2", p2, o1, g1)] {
        for o in &part.objects {
            p.objects.push(Object { id: prefixed(prefix, &o.id), label: o.label.clone() });
        }
        for g in &part.generators {
            p.generators.push(Generator {
                id: prefixed(prefix, &g.id),
                source: ObjectId(g.source.0 + obj_off),
                target: ObjectId(g.target.0 + obj_off),
                label: g.label.clone(),
            });
        }
        for r in &part.relations {
            let shift = |w: &Word| w.reindex(|o| ObjectId(o.0 + obj_off), |g| GenId(g.0 + gen_off));
            p.relations.push(Relation { lhs: shift(&r.lhs), rhs: shift(&r.rhs) });
        }
    }
    let p = Arc::new(p);
    let inj1 = shifted_inclusion(p1, &p, 0, 0);
    let inj2 = shifted_inclusion(p2, &p, o1, g1);
    (p, inj1, inj2)
}

fn shifted_inclusion(
    part: &Arc<GroupoidPresentation>,
    whole: &Arc<GroupoidPresentation>,
    obj_off: usize,
    gen_off: usize,
) -> PresentationMap {
    let object_map = (0..part.num_objects()).map(|o| ObjectId(o + obj_off)).collect();
    let generator_map = part
        .generators
        .iter()
        .enumerate()
        .map(|(i, g)| Word {
            source: ObjectId(g.source.0 + obj_off),
            target: ObjectId(g.target.0 + obj_off),
            letters: vec![Letter::pos(i + gen_off)],
        })
        .collect();
    PresentationMap { source: part.clone(), target: whole.clone(), object_map, generator_map }
}

/// The map `m1 ⊔ m2` between coproducts built by [`coproduct`].
pub fn coproduct_map(
    m1: &PresentationMap,
    m2: &PresentationMap,
    source: &Arc<GroupoidPresentation>,
    target: &Arc<GroupoidPresentation>,
) -> Result<PresentationMap, PresentationError> {
    let (t_obj, t_gen) = (m1.target.num_objects(), m1.target.num_generators());
    let mut object_map = m1.object_map.clone();
    object_map.extend(m2.object_map.iter().map(|o| ObjectId(o.0 + t_obj)));
    let mut generator_map = m1.generator_map.clone();
    generator_map.extend(
        m2.generator_map
            .iter()
            .map(|w| w.reindex(|o| ObjectId(o.0 + t_obj), |g| GenId(g.0 + t_gen))),
    );
    PresentationMap::new(source.clone(), target.clone(), object_map, generator_map)
}

/// Pushout of `f: Y -> M` and `g: Y -> N`.
///
/// Objects are the coequaliser of the two object maps, computed with
/// union-find (representative = minimal index in `Ob(M) ⊔ Ob(N)`).
/// Generators are those of `M` followed by those of `N`. Relations are
/// those of `M`, those of `N`, then `pM(f(b)) = pN(g(b))` for every
/// generator `b` of `Y`, kept even when redundant.
pub fn pushout(
    apex: &Arc<GroupoidPresentation>,
    f: &PresentationMap,
    g: &PresentationMap,
) -> Result<(Arc<GroupoidPresentation>, PresentationMap, PresentationMap), PresentationError> {
    if !same_presentation(apex, &f.source) || !same_presentation(apex, &g.source) {
        return Err(PresentationError::SourceMismatch);
    }
    let (pm, pn) = (&f.target, &g.target);
    let m_obj = pm.num_objects();
    let m_gen = pm.num_generators();

    let mut ds = DisjointSets::new(m_obj + pn.num_objects());
    for y in 0..apex.num_objects() {
        ds.union(f.object_map[y].0, m_obj + g.object_map[y].0);
    }
    let (class, count) = ds.classes();

    let mut p = GroupoidPresentation::new();
    let mut reps = vec![None; count];
    for (i, &c) in class.iter().enumerate() {
        if reps[c].is_none() {
            reps[c] = Some(i);
        }
    }
    for rep in reps.into_iter().map(Option::unwrap) {
        let (prefix, o) = if rep < m_obj { ("M", &pm.objects[rep]) } else { ("N", &pn.objects[rep - m_obj]) };
        p.objects.push(Object { id: prefixed(prefix, &o.id), label: o.label.clone() });
    }
    let m_obj_map = |o: ObjectId| ObjectId(class[o.0]);
    let n_obj_map = |o: ObjectId| ObjectId(class[o.0 + m_obj]);
    let n_gen_map = |gi: GenId| GenId(gi.0 + m_gen);

    for gen in &pm.generators {
        p.generators.push(Generator {
            id: prefixed("M", &gen.id),
            source: m_obj_map(gen.source),
            target: m_obj_map(gen.target),
            label: gen.label.clone(),
        });
    }
    for gen in &pn.generators {
        p.generators.push(Generator {
            id: prefixed("N", &gen.id),
            source: n_obj_map(gen.source),
            target: n_obj_map(gen.target),
            label: gen.label.clone(),
        });
    }
    for r in &pm.relations {
        p.relations.push(Relation {
            lhs: r.lhs.reindex(m_obj_map, |x| x),
            rhs: r.rhs.reindex(m_obj_map, |x| x),
        });
    }
    for r in &pn.relations {
        p.relations.push(Relation {
            lhs: r.lhs.reindex(n_obj_map, n_gen_map),
            rhs: r.rhs.reindex(n_obj_map, n_gen_map),
        });
    }
    for b in 0..apex.num_generators() {
        p.relations.push(Relation {
            lhs: f.generator_map[b].reindex(m_obj_map, |x| x),
            rhs: g.generator_map[b].reindex(n_obj_map, n_gen_map),
        });
    }

    let p = Arc::new(p);
    let to_m = PresentationMap {
        source: pm.clone(),
        target: p.clone(),
        object_map: (0..m_obj).map(|o| m_obj_map(ObjectId(o))).collect(),
        generator_map: pm
            .generators
            .iter()
            .enumerate()
            .map(|(i, gen)| Word {
                source: m_obj_map(gen.source),
                target: m_obj_map(gen.target),
                letters: vec![Letter::pos(i)],
            })
            .collect(),
    };
    let to_n = PresentationMap {
        source: pn.clone(),
        target: p.clone(),
        object_map: (0..pn.num_objects()).map(|o| n_obj_map(ObjectId(o))).collect(),
        generator_map: pn
            .generators
            .iter()
            .enumerate()
            .map(|(i, gen)| Word {
                source: n_obj_map(gen.source),
                target: n_obj_map(gen.target),
                letters: vec![Letter::pos(i + m_gen)],
            })
            .collect(),
    };
    Ok((p, to_m, to_n))
}

/// Adds a new object joined to `at` by a free generator `at -> new`.
///
/// Existing objects and generators keep their indices, so maps into `p`
/// can be retargeted at the result unchanged.
pub fn add_basepoint(
    p: &GroupoidPresentation,
    at: ObjectId,
    label: &str,
) -> Result<(GroupoidPresentation, GenId), PresentationError> {
    p.object(at)?;
    let mut out = p.clone();
    let obj_id = out.fresh_object_id(label);
    let new_obj = out.add_object(obj_id.clone(), label);
    let gen_id = out.fresh_generator_id(&format!("path_{obj_id}"));
    let gamma = out.add_generator(gen_id, at, new_obj, format!("path to {label}"));
    Ok((out, gamma))
}
