//! Command implementations behind the `fgtqft` binary. Each command returns
//! its rendered report and whether every requested check passed.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use fgtqft::builders::build_example;
use fgtqft::io::{
    classes_to_json, cospan_to_json, hom_label, hom_to_json, load_cospan, load_presentation, matrix_to_json,
};
use fgtqft::matrix::scalar_to_string;
use fgtqft::verify::{run_suite, Suite, VerifyConfig, DEFAULT_SEED};
use fgtqft::{
    bbfg, bfg, compose, enumerate_homs, fg_matrix, nat_classes, Cospan, EnumConfig, FiniteGroup, FormatError,
    GroupDescriptor, GroupoidPresentation, TqftMatrix,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format `{other}` (expected json or csv)")),
        }
    }
}

/// Settings shared by all commands.
#[derive(Clone, Debug)]
pub struct JobConfig {
    pub format: Format,
    pub budget: u64,
    pub parallelism: usize,
    pub seed: u64,
}

impl Default for JobConfig {
    fn default() -> Self {
        JobConfig { format: Format::Json, budget: fgtqft::homs::DEFAULT_BUDGET, parallelism: 1, seed: DEFAULT_SEED }
    }
}

impl JobConfig {
    fn enumeration(&self) -> EnumConfig {
        EnumConfig { budget: self.budget, parallelism: self.parallelism }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, passed: true }
    }
}

/// Parses a group given as a shorthand (`S3`, `Z2`, `D4`), inline JSON, or
/// a path to a JSON descriptor file.
pub fn parse_group(spec: &str) -> Result<FiniteGroup> {
    let trimmed = spec.trim();
    let descriptor: GroupDescriptor = if !trimmed.starts_with('{') && Path::new(trimmed).is_file() {
        let text = std::fs::read_to_string(trimmed).with_context(|| format!("reading group file {trimmed}"))?;
        text.parse().with_context(|| format!("group file {trimmed}"))?
    } else {
        trimmed.parse()?
    };
    Ok(descriptor.build()?)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json renders");
    s.push('\n');
    s
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(&r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// Schema diagnostics already name the file; I/O errors do not.
fn with_path(path: &Path, e: FormatError) -> anyhow::Error {
    match e {
        FormatError::Io(err) => anyhow::anyhow!("{}: {err}", path.display()),
        other => other.into(),
    }
}

fn load_p(path: &Path) -> Result<GroupoidPresentation> {
    load_presentation(path).map_err(|e| with_path(path, e))
}

fn load_c(path: &Path) -> Result<Cospan> {
    load_cospan(path).map_err(|e| with_path(path, e))
}

pub fn cmd_homs(path: &Path, group: &FiniteGroup, count_only: bool, cfg: &JobConfig) -> Result<Output> {
    let p = load_p(path)?;
    let e = cfg.enumeration();
    if count_only {
        let n = fgtqft::count_homs(&p, group, &e)?;
        let text = match cfg.format {
            Format::Json => pretty(&json!({ "group": group.name(), "order": group.order(), "count": n })),
            Format::Csv => csv_text(&["count"], [vec![n.to_string()]])?,
        };
        return Ok(Output::ok(text));
    }
    let homs = enumerate_homs(&p, group, &e)?;
    let text = match cfg.format {
        Format::Json => pretty(&json!({
            "group": group.name(),
            "order": group.order(),
            "count": homs.len(),
            "homs": homs.iter().map(|h| hom_to_json(&p, h)).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let header: Vec<&str> = p.generators.iter().map(|g| g.id.as_str()).collect();
            csv_text(&header, homs.iter().map(|h| h.images().iter().map(|x| x.0.to_string()).collect()))?
        }
    };
    Ok(Output::ok(text))
}

pub fn cmd_classes(path: &Path, group: &FiniteGroup, cfg: &JobConfig) -> Result<Output> {
    let p = load_p(path)?;
    let classes = nat_classes(&p, group, &cfg.enumeration())?;
    let text = match cfg.format {
        Format::Json => pretty(&json!({
            "group": group.name(),
            "order": group.order(),
            "dimension": classes.dimension(),
            "total_homs": classes.total_homs(),
            "classes": classes_to_json(&p, &classes),
        })),
        Format::Csv => csv_text(
            &["class", "size", "representative"],
            classes
                .classes()
                .iter()
                .enumerate()
                .map(|(k, c)| vec![k.to_string(), c.size.to_string(), hom_label(&p, &c.representative)]),
        )?,
    };
    Ok(Output::ok(text))
}

fn matrix_rows(kind: &str, c: &Cospan, m: &TqftMatrix) -> Vec<Vec<String>> {
    let mut out = Vec::new();
    for (r, row) in m.rows().iter().enumerate() {
        for (k, col) in m.cols().iter().enumerate() {
            out.push(vec![
                kind.to_string(),
                r.to_string(),
                k.to_string(),
                hom_label(c.y(), &row.representative),
                hom_label(c.x(), &col.representative),
                scalar_to_string(m.entry(r, k)),
            ]);
        }
    }
    out
}

const MATRIX_HEADER: [&str; 6] = ["matrix", "row", "col", "row_rep", "col_rep", "value"];

/// Evaluates a cospan file: the class-basis matrix, plus the raw and
/// normalized counting matrices on request.
pub fn cmd_tqft(path: &Path, group: &FiniteGroup, raw: bool, normalized: bool, cfg: &JobConfig) -> Result<Output> {
    let c = load_c(path)?;
    let e = cfg.enumeration();
    let mut mats = vec![("FG", fg_matrix(&c, group, &e)?)];
    if raw {
        mats.push(("bFG", bfg(&c, group, &e)?));
    }
    if normalized {
        mats.push(("bbFG", bbfg(&c, group, &e)?));
    }
    let text = match cfg.format {
        Format::Json => {
            let mut v = json!({ "cospan": c.label() });
            for (kind, m) in &mats {
                v[*kind] = matrix_to_json(kind, group, c.x(), c.y(), m);
            }
            pretty(&v)
        }
        Format::Csv => csv_text(&MATRIX_HEADER, mats.iter().flat_map(|(k, m)| matrix_rows(k, &c, m)))?,
    };
    Ok(Output::ok(text))
}

/// Composes cospans left to right. With a group, also compares the matrix of
/// the composite against the product of the factors' matrices.
pub fn cmd_compose(paths: &[PathBuf], group: Option<&FiniteGroup>, cfg: &JobConfig) -> Result<Output> {
    if paths.is_empty() {
        bail!("compose needs at least one cospan");
    }
    let parts = paths.iter().map(|p| load_c(p)).collect::<Result<Vec<_>>>()?;
    let mut composite = parts[0].clone();
    for (k, next) in parts.iter().enumerate().skip(1) {
        composite = compose(&composite, next)
            .with_context(|| format!("composing {} with {}", paths[k - 1].display(), paths[k].display()))?;
    }

    let Some(group) = group else {
        if cfg.format == Format::Csv {
            bail!("compose without --group emits a cospan, which has no CSV form");
        }
        return Ok(Output::ok(pretty(&json!({ "cospan": cospan_to_json(&composite) }))));
    };

    let e = cfg.enumeration();
    let direct = fg_matrix(&composite, group, &e)?;
    let mut product: Option<TqftMatrix> = None;
    for c in &parts {
        let m = fg_matrix(c, group, &e)?;
        product = Some(match product {
            None => m,
            Some(acc) => m.matmul(&acc).map_err(|err| anyhow::anyhow!(err.to_string()))?,
        });
    }
    let product = product.expect("at least one part");
    let passed = direct.same_map_as(&product);

    let text = match cfg.format {
        Format::Json => pretty(&json!({
            "cospan": cospan_to_json(&composite),
            "FG": matrix_to_json("FG", group, composite.x(), composite.y(), &direct),
            "product_check": { "passed": passed, "factors": parts.len() },
        })),
        Format::Csv => {
            let mut rows = matrix_rows("FG", &composite, &direct);
            rows.extend(matrix_rows("product", &composite, &product));
            let mut text = csv_text(&MATRIX_HEADER, rows)?;
            text.push_str(&csv_text(&["check", "passed"], [vec!["product".into(), passed.to_string()]])?);
            text
        }
    };
    Ok(Output { text, passed })
}

pub fn cmd_verify(suite: &str, group: &FiniteGroup, trials: Option<usize>, cfg: &JobConfig) -> Result<Output> {
    let suite: Suite = suite.parse().map_err(anyhow::Error::msg)?;
    let mut vc = VerifyConfig { seed: cfg.seed, enumeration: cfg.enumeration(), ..VerifyConfig::default() };
    if let Some(t) = trials {
        vc.trials = t;
    }
    let report = run_suite(suite, group, &vc)?;
    let passed = report.passed();
    let text = match cfg.format {
        Format::Json => {
            let mut v = report.to_json();
            v["seed"] = json!(cfg.seed);
            pretty(&v)
        }
        Format::Csv => csv_text(
            &["suite", "check", "passed", "detail"],
            report
                .checks
                .iter()
                .map(|c| vec![suite.name().to_string(), c.name.clone(), c.passed.to_string(), c.detail.to_string()]),
        )?,
    };
    Ok(Output { text, passed })
}

pub fn cmd_example(name: &str, params: &[String], cfg: &JobConfig) -> Result<Output> {
    if cfg.format == Format::Csv {
        bail!("example emits a cospan, which has no CSV form");
    }
    let spec = build_example(name, params)?;
    Ok(Output::ok(pretty(&cospan_to_json(&spec.cospan))))
}
