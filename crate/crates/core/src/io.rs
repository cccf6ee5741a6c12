//! JSON formats for presentations, maps, cospans, homs and matrices.
//!
//! Presentation:
//! `{"objects":[{"id","label"}], "generators":[{"id","src","tgt","label"}],
//!   "relations":[{"lhs":[["gen","+"],...], "rhs":[...]}]}`
//! A relation whose sides are both empty names its object with `"at"`.
//!
//! Map: `{"objects":{src_id: tgt_id}, "generators":{gen_id: [["gen","+"],...]}}`.
//!
//! Cospan: `{"label", "x", "y", "m", "i", "j"}` where the three presentations
//! are inline objects or paths relative to the cospan file.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::cospan::Cospan;
use crate::error::FormatError;
use crate::group::FiniteGroup;
use crate::homs::{GroupoidHom, NatClasses};
use crate::matrix::{scalar_to_string, BasisElement, TqftMatrix};
use crate::presentation::{Generator, GroupoidPresentation, Letter, Object, ObjectId, PresentationMap, Relation, Word};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectJson {
    pub id: String,
    #[serde(default)]
    pub label: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorJson {
    pub id: String,
    pub src: String,
    pub tgt: String,
    #[serde(default)]
    pub label: String,
}

pub type LetterJson = (String, String);

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationJson {
    pub lhs: Vec<LetterJson>,
    pub rhs: Vec<LetterJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub at: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationJson {
    #[serde(default)]
    pub objects: Vec<ObjectJson>,
    #[serde(default)]
    pub generators: Vec<GeneratorJson>,
    #[serde(default)]
    pub relations: Vec<RelationJson>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapJson {
    pub objects: BTreeMap<String, String>,
    #[serde(default)]
    pub generators: BTreeMap<String, Vec<LetterJson>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PresentationSource {
    Path(String),
    Inline(PresentationJson),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CospanJson {
    #[serde(default)]
    pub label: String,
    pub x: PresentationSource,
    pub y: PresentationSource,
    pub m: PresentationSource,
    pub i: MapJson,
    pub j: MapJson,
}

fn letter_to_json(p: &GroupoidPresentation, l: &Letter) -> LetterJson {
    let sign = if l.inverse { "-" } else { "+" };
    (p.generators[l.gen.0].id.clone(), sign.to_string())
}

fn word_to_json(p: &GroupoidPresentation, w: &Word) -> Vec<LetterJson> {
    w.letters().iter().map(|l| letter_to_json(p, l)).collect()
}

fn letters_from_json(p: &GroupoidPresentation, letters: &[LetterJson], ctx: &str) -> Result<Vec<Letter>, FormatError> {
    letters
        .iter()
        .enumerate()
        .map(|(k, (gen, sign))| {
            let g = p
                .generator_by_id(gen)
                .ok_or_else(|| FormatError::schema(format!("{ctx}[{k}]"), format!("unknown generator `{gen}`")))?;
            let inverse = match sign.as_str() {
                "+" => false,
                "-" => true,
                other => {
                    return Err(FormatError::schema(format!("{ctx}[{k}]"), format!("orientation `{other}` is not + or -")))
                }
            };
            Ok(Letter { gen: g, inverse })
        })
        .collect()
}

fn word_from_json(p: &GroupoidPresentation, start: ObjectId, letters: &[LetterJson], ctx: &str) -> Result<Word, FormatError> {
    let letters = letters_from_json(p, letters, ctx)?;
    Word::from_letters(p, start, letters).map_err(|e| FormatError::schema(ctx, e.to_string()))
}

fn object_ref(p: &GroupoidPresentation, id: &str, ctx: &str) -> Result<ObjectId, FormatError> {
    p.object_by_id(id).ok_or_else(|| FormatError::schema(ctx, format!("unknown object `{id}`")))
}

impl PresentationJson {
    pub fn from_presentation(p: &GroupoidPresentation) -> Self {
        PresentationJson {
            objects: p.objects.iter().map(|o| ObjectJson { id: o.id.clone(), label: o.label.clone() }).collect(),
            generators: p
                .generators
                .iter()
                .map(|g| GeneratorJson {
                    id: g.id.clone(),
                    src: p.objects[g.source.0].id.clone(),
                    tgt: p.objects[g.target.0].id.clone(),
                    label: g.label.clone(),
                })
                .collect(),
            relations: p
                .relations
                .iter()
                .map(|r| RelationJson {
                    lhs: word_to_json(p, &r.lhs),
                    rhs: word_to_json(p, &r.rhs),
                    at: (r.lhs.is_empty() && r.rhs.is_empty()).then(|| p.objects[r.lhs.source().0].id.clone()),
                })
                .collect(),
        }
    }

    pub fn to_presentation(&self) -> Result<GroupoidPresentation, FormatError> {
        let mut p = GroupoidPresentation::new();
        for o in &self.objects {
            p.objects.push(Object { id: o.id.clone(), label: o.label.clone() });
        }
        for (k, g) in self.generators.iter().enumerate() {
            let ctx = format!("generators[{k}]");
            let source = object_ref(&p, &g.src, &format!("{ctx}.src"))?;
            let target = object_ref(&p, &g.tgt, &format!("{ctx}.tgt"))?;
            p.generators.push(Generator { id: g.id.clone(), source, target, label: g.label.clone() });
        }
        for (k, r) in self.relations.iter().enumerate() {
            let ctx = format!("relations[{k}]");
            let start = |side: &[LetterJson], name: &str| -> Result<Option<ObjectId>, FormatError> {
                let letters = letters_from_json(&p, side, &format!("{ctx}.{name}"))?;
                match letters.first() {
                    Some(&l) => Ok(Some(p.letter_endpoints(l).map_err(|e| FormatError::schema(&ctx, e.to_string()))?.0)),
                    None => Ok(None),
                }
            };
            let at = match (start(&r.lhs, "lhs")?, start(&r.rhs, "rhs")?, &r.at) {
                (_, _, Some(id)) => object_ref(&p, id, &format!("{ctx}.at"))?,
                (Some(s), _, None) | (None, Some(s), None) => s,
                (None, None, None) => {
                    return Err(FormatError::schema(&ctx, "both sides are empty; name the object with \"at\""))
                }
            };
            let lhs = word_from_json(&p, at, &r.lhs, &format!("{ctx}.lhs"))?;
            let rhs = word_from_json(&p, at, &r.rhs, &format!("{ctx}.rhs"))?;
            p.relations.push(Relation { lhs, rhs });
        }
        let violations = p.validate();
        if let Some(v) = violations.first() {
            return Err(FormatError::schema("presentation", v.to_string()));
        }
        Ok(p)
    }
}

impl MapJson {
    pub fn from_map(m: &PresentationMap) -> Self {
        let (s, t) = (m.source(), m.target());
        MapJson {
            objects: s
                .objects
                .iter()
                .zip(m.object_map())
                .map(|(o, img)| (o.id.clone(), t.objects[img.0].id.clone()))
                .collect(),
            generators: s
                .generators
                .iter()
                .zip(m.generator_map())
                .map(|(g, w)| (g.id.clone(), word_to_json(t, w)))
                .collect(),
        }
    }

    pub fn to_map(
        &self,
        source: &Arc<GroupoidPresentation>,
        target: &Arc<GroupoidPresentation>,
        ctx: &str,
    ) -> Result<PresentationMap, FormatError> {
        for id in self.objects.keys() {
            object_ref(source, id, &format!("{ctx}.objects"))?;
        }
        for id in self.generators.keys() {
            if source.generator_by_id(id).is_none() {
                return Err(FormatError::schema(format!("{ctx}.generators"), format!("unknown generator `{id}`")));
            }
        }
        let object_map = source
            .objects
            .iter()
            .map(|o| {
                let img = self
                    .objects
                    .get(&o.id)
                    .ok_or_else(|| FormatError::schema(format!("{ctx}.objects"), format!("object `{}` is not mapped", o.id)))?;
                object_ref(target, img, &format!("{ctx}.objects.{}", o.id))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let generator_map = source
            .generators
            .iter()
            .map(|g| {
                let gctx = format!("{ctx}.generators.{}", g.id);
                let letters = self
                    .generators
                    .get(&g.id)
                    .ok_or_else(|| FormatError::schema(&gctx, "generator is not mapped"))?;
                word_from_json(target, object_map[g.source.0], letters, &gctx)
            })
            .collect::<Result<Vec<_>, _>>()?;
        PresentationMap::new(source.clone(), target.clone(), object_map, generator_map)
            .map_err(|e| FormatError::schema(ctx, e.to_string()))
    }
}

pub fn presentation_to_json(p: &GroupoidPresentation) -> Value {
    serde_json::to_value(PresentationJson::from_presentation(p)).expect("presentation serializes")
}

pub fn parse_presentation(text: &str) -> Result<GroupoidPresentation, FormatError> {
    let json: PresentationJson = serde_json::from_str(text)?;
    json.to_presentation()
}

pub fn load_presentation(path: &Path) -> Result<GroupoidPresentation, FormatError> {
    let text = std::fs::read_to_string(path)?;
    parse_presentation(&text).map_err(|e| with_file(path, e))
}

fn with_file(path: &Path, e: FormatError) -> FormatError {
    match e {
        FormatError::Schema { context, message } => {
            FormatError::Schema { context: format!("{}: {context}", path.display()), message }
        }
        FormatError::Json(err) => FormatError::Schema { context: path.display().to_string(), message: err.to_string() },
        other => other,
    }
}

impl CospanJson {
    pub fn from_cospan(c: &Cospan) -> Self {
        let inline = |p: &GroupoidPresentation| PresentationSource::Inline(PresentationJson::from_presentation(p));
        CospanJson {
            label: c.label().to_string(),
            x: inline(c.x()),
            y: inline(c.y()),
            m: inline(c.m()),
            i: MapJson::from_map(c.i_map()),
            j: MapJson::from_map(c.j_map()),
        }
    }

    pub fn to_cospan(&self, base: Option<&Path>) -> Result<Cospan, FormatError> {
        let resolve = |src: &PresentationSource, name: &str| -> Result<Arc<GroupoidPresentation>, FormatError> {
            match src {
                PresentationSource::Inline(p) => p
                    .to_presentation()
                    .map(Arc::new)
                    .map_err(|e| prefix_context(name, e)),
                PresentationSource::Path(rel) => {
                    let path = base.map(|b| b.join(rel)).unwrap_or_else(|| rel.into());
                    load_presentation(&path).map(Arc::new)
                }
            }
        };
        let x = resolve(&self.x, "x")?;
        let y = resolve(&self.y, "y")?;
        let m = resolve(&self.m, "m")?;
        let i = self.i.to_map(&x, &m, "i")?;
        let j = self.j.to_map(&y, &m, "j")?;
        Ok(Cospan::new(self.label.clone(), i, j)?)
    }
}

fn prefix_context(name: &str, e: FormatError) -> FormatError {
    match e {
        FormatError::Schema { context, message } => FormatError::Schema { context: format!("{name}.{context}"), message },
        other => other,
    }
}

pub fn cospan_to_json(c: &Cospan) -> Value {
    serde_json::to_value(CospanJson::from_cospan(c)).expect("cospan serializes")
}

pub fn parse_cospan(text: &str, base: Option<&Path>) -> Result<Cospan, FormatError> {
    let json: CospanJson = serde_json::from_str(text)?;
    json.to_cospan(base)
}

pub fn load_cospan(path: &Path) -> Result<Cospan, FormatError> {
    let text = std::fs::read_to_string(path)?;
    parse_cospan(&text, path.parent()).map_err(|e| with_file(path, e))
}

/// `{"gen_id": element_index}` in generator order.
pub fn hom_to_json(p: &GroupoidPresentation, h: &GroupoidHom) -> Value {
    let map: Map<String, Value> =
        p.generators.iter().zip(h.images()).map(|(g, x)| (g.id.clone(), json!(x.0))).collect();
    Value::Object(map)
}

/// Compact `id=elem;id=elem` label, `()` for the empty hom.
pub fn hom_label(p: &GroupoidPresentation, h: &GroupoidHom) -> String {
    if h.images().is_empty() {
        return "()".into();
    }
    p.generators
        .iter()
        .zip(h.images())
        .map(|(g, x)| format!("{}={}", g.id, x.0))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn classes_to_json(p: &GroupoidPresentation, classes: &NatClasses) -> Value {
    Value::Array(
        classes
            .classes()
            .iter()
            .map(|c| json!({ "rep": hom_to_json(p, &c.representative), "size": c.size }))
            .collect(),
    )
}

fn basis_to_json(p: &GroupoidPresentation, basis: &[BasisElement]) -> Value {
    Value::Array(
        basis
            .iter()
            .map(|b| match b.class_size {
                Some(size) => json!({ "rep": hom_to_json(p, &b.representative), "size": size }),
                None => json!({ "rep": hom_to_json(p, &b.representative) }),
            })
            .collect(),
    )
}

/// Matrix with both bases; rows are homs of `y`, columns homs of `x`.
pub fn matrix_to_json(
    kind: &str,
    group: &FiniteGroup,
    x: &GroupoidPresentation,
    y: &GroupoidPresentation,
    m: &TqftMatrix,
) -> Value {
    json!({
        "kind": kind,
        "group": group.name(),
        "order": group.order(),
        "shape": [m.shape().0, m.shape().1],
        "rows": basis_to_json(y, m.rows()),
        "cols": basis_to_json(x, m.cols()),
        "entries": m.entries().iter().map(|r| r.iter().map(scalar_to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}
