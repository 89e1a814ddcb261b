//! Run configuration, named checks, suites and the JSON report.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{AlgebraError, Result};
use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::groebner::{buchberger_with, GbConfig, DEFAULT_BUDGET};
use crate::ideals::{
    alpha, maximal_ideal_frobenius, symplectic_gens, symplectic_localization_gens, voc_gens, voc_localization_gens,
    witness_f, yz_entries, IdealGens,
};
use crate::order::BlockOrder;
use crate::ring::{Ring, Shape};
use crate::verify::{self, Localization, Verdict};

pub const SCHEMA: u32 = 1;
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum ShapeKind {
    Symplectic,
    Gl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum FieldKind {
    Fp,
    Qq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum IdealKind {
    /// Entries of `Y^T Ω Y` or of `YZ`.
    Nullcone,
    /// Entries of `YZ`.
    Yz,
    /// `p_{r,s}`.
    Voc,
    Alpha,
    /// Cleared localization generators at `y[1,1]`.
    Localization,
    /// Bracket power of the maximal ideal.
    MBracket,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum ShowObject {
    SymplecticOrder,
    GlOrder,
    Ideal,
    Gb,
    LeadTerms,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum CheckName {
    Lemma33,
    Lemma53,
    Alpha,
    Heights,
    Squarefree,
    Decomposition,
    Localization,
    Fedder,
    Glassbrenner,
    Compatible,
    Pigeonhole,
    ColonOracle,
    ColonContainment,
    SymplecticExample,
    GlExample,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteName {
    PaperExamples,
    SymplecticGrid,
    GlGrid,
    FrobeniusDesk,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", content = "target", rename_all = "kebab-case")]
pub enum Command {
    Show(ShowObject),
    Check(CheckName),
    Suite(SuiteName),
}

/// Everything needed to reproduce a run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    #[serde(flatten)]
    pub command: Command,
    pub shape: Option<ShapeKind>,
    pub m: Option<usize>,
    pub t: Option<usize>,
    pub n: Option<usize>,
    pub r: Option<usize>,
    pub s: Option<usize>,
    pub t_max: Option<usize>,
    pub n_max: Option<usize>,
    pub h: Option<usize>,
    pub ideal: Option<IdealKind>,
    pub field: FieldKind,
    pub p: u32,
    pub budget: u64,
    pub seed: u64,
    pub timings: bool,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            shape: None,
            m: None,
            t: None,
            n: None,
            r: None,
            s: None,
            t_max: None,
            n_max: None,
            h: None,
            ideal: None,
            field: FieldKind::Fp,
            p: 2,
            budget: DEFAULT_BUDGET,
            seed: 0,
            timings: false,
        }
    }

    pub fn gb_config(&self) -> GbConfig {
        GbConfig::with_budget(self.budget)
    }

    pub fn field_spec(&self) -> FieldSpec {
        match self.field {
            FieldKind::Fp => FieldSpec::PrimeField { p: self.p },
            FieldKind::Qq => FieldSpec::Rationals,
        }
    }

    fn shape_kind(&self) -> ShapeKind {
        self.shape.unwrap_or(if self.m.is_some() { ShapeKind::Gl } else { ShapeKind::Symplectic })
    }

    fn need(&self, v: Option<usize>, name: &str) -> Result<usize> {
        match v {
            Some(0) => Err(AlgebraError::Parameter(format!("--{name} must be at least 1"))),
            Some(x) => Ok(x),
            None => Err(AlgebraError::Parameter(format!("--{name} is required"))),
        }
    }

    /// The shape selected by `--shape` and the size flags.
    pub fn shape(&self) -> Result<Shape> {
        match self.shape_kind() {
            ShapeKind::Symplectic => Ok(Shape::Symplectic { t: self.need(self.t, "t")?, n: self.need(self.n, "n")? }),
            ShapeKind::Gl => Ok(Shape::GeneralLinear {
                m: self.need(self.m, "m")?,
                t: self.need(self.t, "t")?,
                n: self.need(self.n, "n")?,
            }),
        }
    }

    /// Range checks done before any computation.
    pub fn validate(&self) -> Result<()> {
        if self.budget == 0 {
            return Err(AlgebraError::Parameter("--budget must be positive".into()));
        }
        if self.field == FieldKind::Fp {
            PrimeField::new(self.p)?;
        }
        for (v, name) in [(self.m, "m"), (self.t, "t"), (self.n, "n"), (self.t_max, "t-max"), (self.n_max, "n-max")] {
            if v == Some(0) {
                return Err(AlgebraError::Parameter(format!("--{name} must be at least 1")));
            }
            if v.is_some_and(|v| v > 12) {
                return Err(AlgebraError::Parameter(format!("--{name} is capped at 12")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub total_elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub version: String,
    pub config: RunConfig,
    pub verdicts: Vec<Verdict>,
    pub summary: Summary,
    /// Objects printed by `show`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<Value>,
}

/// Process exit status for a finished run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Pass = 0,
    Fail = 1,
    Usage = 2,
    Budget = 3,
}

impl Exit {
    pub fn code(self) -> u8 {
        self as u8
    }

    pub fn for_error(e: &AlgebraError) -> Exit {
        match e {
            AlgebraError::Budget { .. } => Exit::Budget,
            _ => Exit::Usage,
        }
    }
}

const BUDGET_PREFIX: &str = "budget exhausted";

impl Report {
    fn assemble(config: &RunConfig, mut verdicts: Vec<Verdict>, output: Option<Value>, elapsed_ms: u64) -> Report {
        if !config.timings {
            for v in &mut verdicts {
                v.elapsed_ms = 0;
            }
        }
        let skipped = verdicts.iter().filter(|v| !v.passed && v.detail.starts_with(BUDGET_PREFIX)).count();
        let pass = verdicts.iter().filter(|v| v.passed).count();
        let summary = Summary {
            pass,
            fail: verdicts.len() - pass - skipped,
            skipped,
            total_elapsed_ms: if config.timings { elapsed_ms } else { 0 },
        };
        Report { schema: SCHEMA, version: VERSION.to_string(), config: config.clone(), verdicts, summary, output }
    }

    /// Failures take precedence over budget exhaustion.
    pub fn exit(&self) -> Exit {
        if self.summary.fail > 0 {
            Exit::Fail
        } else if self.summary.skipped > 0 {
            Exit::Budget
        } else {
            Exit::Pass
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Report> {
        serde_json::from_str(s).map_err(|e| AlgebraError::Parameter(format!("bad report: {e}")))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(v) = &self.output {
            out.push_str(&render_output(v));
        }
        for v in &self.verdicts {
            let status = if v.passed {
                "PASS"
            } else if v.detail.starts_with(BUDGET_PREFIX) {
                "SKIP"
            } else {
                "FAIL"
            };
            let params: Vec<String> = v.params.iter().map(|(k, val)| format!("{k}={}", plain(val))).collect();
            let _ = writeln!(out, "{status} {} [{}]: {}", v.check_name, params.join(" "), v.detail);
            if let Some(w) = v.witness.as_ref().filter(|_| !v.passed) {
                let _ = writeln!(out, "    witness: {w}");
            }
        }
        if !self.verdicts.is_empty() {
            let s = &self.summary;
            let _ = writeln!(out, "summary: {} passed, {} failed, {} skipped", s.pass, s.fail, s.skipped);
        }
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_output(v: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = v {
        for (k, val) in map {
            match val {
                Value::Array(rows) => {
                    let _ = writeln!(out, "{k}:");
                    for row in rows {
                        let _ = writeln!(out, "  {}", plain(row));
                    }
                }
                other => {
                    let _ = writeln!(out, "{k}: {}", plain(other));
                }
            }
        }
    }
    out
}

type Task = Box<dyn Fn() -> Result<Verdict> + Send + Sync>;
type Labelled = (String, BTreeMap<String, Value>, Task);

/// Parameters echoed into a verdict that never ran.
fn task_params(cfg: &RunConfig) -> BTreeMap<String, Value> {
    let mut out = BTreeMap::new();
    for (k, v) in [("m", cfg.m), ("t", cfg.t), ("n", cfg.n), ("r", cfg.r), ("s", cfg.s)] {
        if let Some(v) = v {
            out.insert(k.to_string(), json!(v));
        }
    }
    out.insert("field".to_string(), json!(cfg.field_spec().to_string()));
    out
}

/// Runs tasks on the rayon pool, keeping their order. Budget errors become
/// skipped verdicts; other errors abort the run.
fn run_tasks(tasks: Vec<Labelled>) -> Result<Vec<Verdict>> {
    tasks
        .into_par_iter()
        .map(|(name, params, task)| match task() {
            Err(AlgebraError::Budget { limit }) => Ok(Verdict {
                check_name: name,
                params,
                passed: false,
                witness: None,
                detail: format!("{BUDGET_PREFIX} after {limit} operations"),
                elapsed_ms: 0,
            }),
            other => other,
        })
        .collect()
}

fn ring_for<F: Field>(field: &F, shape: Shape) -> Result<Arc<Ring<F>>> {
    Ring::new(field.clone(), shape)
}

fn ideal_of<F: Field>(ring: &Arc<Ring<F>>, kind: IdealKind, cfg: &RunConfig) -> Result<IdealGens<F>> {
    match (kind, ring.shape()) {
        (IdealKind::Nullcone, Shape::Symplectic { .. }) => symplectic_gens(ring),
        (IdealKind::Nullcone | IdealKind::Yz, Shape::GeneralLinear { .. }) => yz_entries(ring),
        (IdealKind::Voc, Shape::GeneralLinear { .. }) => voc_gens(ring, cfg.r.unwrap_or(0), cfg.s.unwrap_or(0)),
        (IdealKind::Alpha, _) => alpha(ring),
        (IdealKind::Localization, Shape::Symplectic { .. }) => symplectic_localization_gens(ring),
        (IdealKind::Localization, Shape::GeneralLinear { .. }) => {
            voc_localization_gens(ring, cfg.r.unwrap_or(1), cfg.s.unwrap_or(0))
        }
        (IdealKind::MBracket, _) => maximal_ideal_frobenius(ring, cfg.p),
        (kind, shape) => Err(AlgebraError::Parameter(format!("ideal {kind:?} is not defined for {shape}"))),
    }
}

fn default_ideal(shape: Shape) -> IdealKind {
    match shape {
        Shape::Symplectic { .. } => IdealKind::Nullcone,
        Shape::GeneralLinear { .. } => IdealKind::Yz,
    }
}

fn check_colon_caps(shape: Shape) -> Result<()> {
    let ok = match shape {
        Shape::Symplectic { t, n } => 2 * t * n <= 16,
        Shape::GeneralLinear { m, t, n } => m * t + t * n <= 18,
    };
    if ok {
        Ok(())
    } else {
        Err(AlgebraError::Parameter(format!("full colon computations are capped at 16 (symplectic) or 18 (gl) variables; {shape} is larger")))
    }
}

/// Builds the task list for one named check with a concrete field.
fn check_tasks<F: Field + 'static>(field: F, name: CheckName, cfg: &RunConfig) -> Result<Vec<Labelled>> {
    let gb = cfg.gb_config();
    let p = cfg.p;
    let label = format!("{name:?}").to_lowercase();
    let one = |t: Task| Ok(vec![(label.clone(), task_params(cfg), t)]);
    match name {
        CheckName::Lemma33 => {
            if let (Some(tm), Some(nm)) = (cfg.t_max, cfg.n_max) {
                let mut out: Vec<Labelled> = Vec::new();
                for t in 1..=tm {
                    for n in 1..=nm {
                        let params = BTreeMap::from([("t".to_string(), json!(t)), ("n".to_string(), json!(n))]);
                        out.push((label.clone(), params, Box::new(move || verify::check_symplectic_alpha_leads(t, n))));
                    }
                }
                Ok(out)
            } else {
                let (t, n) = (cfg.need(cfg.t, "t")?, cfg.need(cfg.n, "n")?);
                one(Box::new(move || verify::check_symplectic_alpha_leads(t, n)))
            }
        }
        CheckName::Lemma53 => {
            let Shape::GeneralLinear { m, t, n } = cfg.shape()? else {
                return Err(AlgebraError::Parameter("lemma53 needs --m --t --n".into()));
            };
            one(Box::new(move || verify::check_gl_alpha_leads(m, t, n)))
        }
        CheckName::SymplecticExample => one(Box::new(verify::check_symplectic_example)),
        CheckName::GlExample => one(Box::new(verify::check_gl_example)),
        _ => {
            let shape = cfg.shape()?;
            let ring = ring_for(&field, shape)?;
            let cfgc = cfg.clone();
            let task: Task = match name {
                CheckName::Alpha => Box::new(move || verify::check_alpha_groebner_and_height(&ring, gb)),
                CheckName::Heights => Box::new(move || verify::check_heights(&ring, gb)),
                CheckName::Squarefree => {
                    let kind = cfg.ideal.unwrap_or(default_ideal(shape));
                    let ideal = ideal_of(&ring, kind, cfg)?;
                    let order = BlockOrder::for_shape(shape)?;
                    Box::new(move || verify::check_squarefree_initial(&ideal, &order, gb))
                }
                CheckName::Decomposition => Box::new(move || verify::check_nullcone_decomposition(&ring, gb)),
                CheckName::Localization => {
                    let which = match shape {
                        Shape::Symplectic { .. } => Localization::Symplectic,
                        Shape::GeneralLinear { .. } => {
                            Localization::VarietyOfComplexes { r: cfg.r.unwrap_or(1), s: cfg.s.unwrap_or(0) }
                        }
                    };
                    Box::new(move || verify::check_localization(&ring, which, gb))
                }
                CheckName::Fedder => Box::new(move || verify::fedder_nullcone(&ring, p, gb)),
                CheckName::Glassbrenner => {
                    let rs = cfg.r.zip(cfg.s);
                    Box::new(move || verify::glassbrenner_default(&ring, rs, p, gb))
                }
                CheckName::Compatible => Box::new(move || verify::check_compatible_splitting(&ring, p, gb)),
                CheckName::Pigeonhole => {
                    let kind = cfg.ideal.unwrap_or(default_ideal(shape));
                    let ideal = ideal_of(&ring, kind, cfg)?;
                    let seed = cfg.seed;
                    let h = match cfg.h {
                        Some(h) => h,
                        None => default_height(&ring, kind, &cfgc)?,
                    };
                    Box::new(move || verify::check_pigeonhole(&ideal, h, p, seed, gb))
                }
                CheckName::ColonOracle => {
                    check_colon_caps(shape)?;
                    let Shape::Symplectic { .. } = shape else {
                        return Err(AlgebraError::Parameter("colon-oracle uses the symplectic witness".into()));
                    };
                    Box::new(move || {
                        let w = witness_f(&ring)?.pow(p - 1);
                        verify::check_colon_oracle(&symplectic_gens(&ring)?, &w, p, gb)
                    })
                }
                CheckName::ColonContainment => {
                    check_colon_caps(shape)?;
                    let Shape::Symplectic { .. } = shape else {
                        return Err(AlgebraError::Parameter("colon-containment compares alpha with the symplectic nullcone".into()));
                    };
                    Box::new(move || verify::check_colon_containment(&alpha(&ring)?, &symplectic_gens(&ring)?, p, gb))
                }
                CheckName::Lemma33 | CheckName::Lemma53 | CheckName::SymplecticExample | CheckName::GlExample => {
                    unreachable!()
                }
            };
            one(task)
        }
    }
}

fn default_height<F: Field>(ring: &Arc<Ring<F>>, kind: IdealKind, cfg: &RunConfig) -> Result<usize> {
    use crate::ideals::{expected_height, HeightOf};
    match (kind, ring.shape()) {
        (IdealKind::Nullcone, s @ Shape::Symplectic { .. }) => expected_height(s, HeightOf::SymplecticNullcone),
        (IdealKind::Voc, s) => expected_height(s, HeightOf::VarietyOfComplexes { r: cfg.r.unwrap_or(0), s: cfg.s.unwrap_or(0) }),
        _ => Err(AlgebraError::Parameter("pass --h for this ideal".into())),
    }
}

fn with_field<T>(
    cfg: &RunConfig,
    fp: impl FnOnce(PrimeField) -> Result<T>,
    qq: impl FnOnce(Rationals) -> Result<T>,
) -> Result<T> {
    match cfg.field {
        FieldKind::Fp => fp(PrimeField::new(cfg.p)?),
        FieldKind::Qq => qq(Rationals),
    }
}

fn require_fp(cfg: &RunConfig, what: &str) -> Result<()> {
    if cfg.field == FieldKind::Qq {
        Err(AlgebraError::Field(format!("{what} needs --field fp")))
    } else {
        Ok(())
    }
}

fn suite_tasks(name: SuiteName, cfg: &RunConfig) -> Result<Vec<Labelled>> {
    let mut tasks = Vec::new();
    let mut add = |check: CheckName, edit: &dyn Fn(&mut RunConfig)| -> Result<()> {
        let mut c = cfg.clone();
        c.command = Command::Check(check);
        c.shape = None;
        c.m = None;
        c.r = None;
        c.s = None;
        c.ideal = None;
        c.h = None;
        c.t_max = None;
        c.n_max = None;
        edit(&mut c);
        tasks.extend(with_field(&c, |f| check_tasks(f, check, &c), |f| check_tasks(f, check, &c))?);
        Ok(())
    };
    let sym = |t: usize, n: usize| move |c: &mut RunConfig| {
        c.t = Some(t);
        c.n = Some(n);
    };
    let gl = |m: usize, t: usize, n: usize| move |c: &mut RunConfig| {
        c.m = Some(m);
        c.t = Some(t);
        c.n = Some(n);
    };
    match name {
        SuiteName::PaperExamples => {
            add(CheckName::SymplecticExample, &|_| {})?;
            add(CheckName::GlExample, &|_| {})?;
            add(CheckName::Lemma33, &sym(2, 4))?;
            add(CheckName::Lemma53, &gl(5, 3, 5))?;
            add(CheckName::Alpha, &sym(2, 4))?;
            add(CheckName::Heights, &sym(2, 4))?;
            if cfg.field == FieldKind::Fp {
                add(CheckName::Glassbrenner, &sym(2, 4))?;
            }
        }
        SuiteName::SymplecticGrid => {
            for t in 1..=cfg.t_max.unwrap_or(6) {
                for n in 1..=cfg.n_max.unwrap_or(6) {
                    add(CheckName::Lemma33, &sym(t, n))?;
                }
            }
            for t in 1..=cfg.t_max.unwrap_or(5).min(5) {
                for n in 1..=cfg.n_max.unwrap_or(5).min(5) {
                    add(CheckName::Alpha, &sym(t, n))?;
                }
            }
            for (t, n) in [(1, 3), (1, 4), (2, 3), (2, 4)] {
                add(CheckName::Squarefree, &sym(t, n))?;
            }
            add(CheckName::Localization, &sym(2, 2))?;
            add(CheckName::Localization, &sym(2, 3))?;
        }
        SuiteName::GlGrid => {
            for m in 1..=5 {
                for n in 1..=5 {
                    for t in 1..=m.min(n) {
                        add(CheckName::Lemma53, &gl(m, t, n))?;
                    }
                }
            }
            for (m, t, n) in [(1, 1, 1), (2, 2, 2), (3, 2, 2), (2, 2, 3)] {
                add(CheckName::Decomposition, &gl(m, t, n))?;
            }
            for (m, t, n) in [(2, 2, 2), (3, 2, 2)] {
                add(CheckName::Heights, &gl(m, t, n))?;
            }
            add(CheckName::Squarefree, &gl(2, 2, 2))?;
            add(CheckName::Squarefree, &|c| {
                gl(2, 2, 2)(c);
                c.ideal = Some(IdealKind::Voc);
                c.r = Some(1);
                c.s = Some(1);
            })?;
            add(CheckName::Localization, &gl(2, 2, 2))?;
        }
        SuiteName::FrobeniusDesk => {
            require_fp(cfg, "frobenius-desk")?;
            for (t, n) in [(1, 2), (1, 3), (2, 2), (2, 3), (2, 4)] {
                add(CheckName::Fedder, &sym(t, n))?;
                add(CheckName::Glassbrenner, &sym(t, n))?;
            }
            for (t, n) in [(1, 2), (1, 3)] {
                add(CheckName::ColonOracle, &sym(t, n))?;
            }
            add(CheckName::ColonContainment, &sym(1, 3))?;
            add(CheckName::ColonContainment, &sym(2, 3))?;
            add(CheckName::Pigeonhole, &sym(1, 3))?;
            add(CheckName::Glassbrenner, &|c| {
                gl(2, 2, 2)(c);
                c.r = Some(1);
                c.s = Some(1);
            })?;
            add(CheckName::Fedder, &gl(2, 2, 2))?;
            add(CheckName::Compatible, &gl(2, 2, 2))?;
            add(CheckName::Compatible, &gl(3, 2, 3))?;
        }
    }
    Ok(tasks)
}

fn matrix_json(rows: &[Vec<u32>]) -> Value {
    Value::Array(rows.iter().map(|r| json!(r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))).collect())
}

fn show_output<F: Field>(field: F, object: ShowObject, cfg: &RunConfig) -> Result<Value> {
    match object {
        ShowObject::SymplecticOrder => {
            let (t, n) = (cfg.need(cfg.t, "t")?, cfg.need(cfg.n, "n")?);
            let o = BlockOrder::symplectic(t, n);
            Ok(json!({ "order": format!("symplectic blocks t={t} n={n}"), "blocks_Y": matrix_json(&o.block_matrices().0) }))
        }
        ShowObject::GlOrder => {
            let (m, t, n) = (cfg.need(cfg.m, "m")?, cfg.need(cfg.t, "t")?, cfg.need(cfg.n, "n")?);
            let o = BlockOrder::gl(m, t, n)?;
            let (y, z) = o.block_matrices();
            Ok(json!({
                "order": format!("gl blocks m={m} t={t} n={n}"),
                "blocks_Y": matrix_json(&y),
                "blocks_Z": matrix_json(&z.unwrap_or_default()),
            }))
        }
        ShowObject::Ideal | ShowObject::Gb | ShowObject::LeadTerms => {
            let shape = cfg.shape()?;
            let ring = ring_for(&field, shape)?;
            let order = BlockOrder::for_shape(shape)?;
            let kind = cfg.ideal.unwrap_or(match object {
                ShowObject::LeadTerms => IdealKind::Alpha,
                _ => default_ideal(shape),
            });
            let ideal = ideal_of(&ring, kind, cfg)?;
            let polys = match object {
                ShowObject::Gb => buchberger_with(&ideal, &order, cfg.gb_config())?.basis().to_vec(),
                _ => ideal.gens.clone(),
            };
            let text: Vec<String> = match object {
                ShowObject::LeadTerms => polys
                    .iter()
                    .map(|g| {
                        let (m, _) = g.lead_term(&order)?;
                        let lead = crate::poly::Polynomial::monomial(&ring, m.clone(), ring.field().one());
                        Ok(format!("{}  <-  {}", lead.to_text(&order), g.to_text(&order)))
                    })
                    .collect::<Result<_>>()?,
                _ => polys.iter().map(|g| g.to_text(&order)).collect(),
            };
            Ok(json!({
                "ideal": ideal.label,
                "shape": shape.to_string(),
                "field": ring.field().spec().to_string(),
                "count": text.len(),
                "generators": text,
            }))
        }
    }
}

/// Runs a configuration to a report. Errors are usage or budget errors.
pub fn run(cfg: &RunConfig) -> Result<Report> {
    cfg.validate()?;
    let start = Instant::now();
    let (verdicts, output) = match cfg.command {
        Command::Show(object) => {
            let v = with_field(cfg, |f| show_output(f, object, cfg), |f| show_output(f, object, cfg))?;
            (Vec::new(), Some(v))
        }
        Command::Check(name) => {
            let tasks = with_field(cfg, |f| check_tasks(f, name, cfg), |f| check_tasks(f, name, cfg))?;
            (run_tasks(tasks)?, None)
        }
        Command::Suite(name) => (run_tasks(suite_tasks(name, cfg)?)?, None),
    };
    Ok(Report::assemble(cfg, verdicts, output, start.elapsed().as_millis() as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(name: CheckName) -> RunConfig {
        RunConfig::new(Command::Check(name))
    }

    #[test]
    fn symplectic_leads_grid_report() {
        let mut c = check(CheckName::Lemma33);
        c.t_max = Some(3);
        c.n_max = Some(3);
        let r = run(&c).unwrap();
        assert_eq!(r.verdicts.len(), 9);
        assert_eq!(r.summary.pass, 9);
        assert_eq!(r.exit(), Exit::Pass);
    }

    #[test]
    fn report_roundtrip_and_determinism() {
        let mut c = check(CheckName::Fedder);
        c.t = Some(1);
        c.n = Some(3);
        let a = run(&c).unwrap();
        let b = run(&c).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(Report::from_json(&a.to_json()).unwrap(), a);
        assert_eq!(a.summary.pass + a.summary.fail + a.summary.skipped, a.verdicts.len());
    }

    #[test]
    fn budget_becomes_skip_and_exit_3() {
        let mut c = check(CheckName::Decomposition);
        c.m = Some(2);
        c.t = Some(2);
        c.n = Some(2);
        c.budget = 5;
        let r = run(&c).unwrap();
        assert_eq!(r.summary.skipped, 1);
        assert_eq!(r.verdicts[0].params["m"], 2);
        assert_eq!(r.exit(), Exit::Budget);
    }

    #[test]
    fn usage_errors() {
        let mut c = check(CheckName::Fedder);
        c.t = Some(1);
        assert!(run(&c).is_err());
        c.n = Some(3);
        c.p = 4;
        assert_eq!(Exit::for_error(&run(&c).unwrap_err()), Exit::Usage);
        let mut d = RunConfig::new(Command::Suite(SuiteName::FrobeniusDesk));
        d.field = FieldKind::Qq;
        assert!(run(&d).is_err());
    }

    #[test]
    fn show_orders() {
        let mut c = RunConfig::new(Command::Show(ShowObject::SymplecticOrder));
        c.t = Some(2);
        c.n = Some(4);
        let r = run(&c).unwrap();
        assert_eq!(r.output.as_ref().unwrap()["blocks_Y"][0], "1 3 1 0");
        let mut g = RunConfig::new(Command::Show(ShowObject::Ideal));
        g.shape = Some(ShapeKind::Gl);
        g.m = Some(2);
        g.t = Some(2);
        g.n = Some(2);
        g.ideal = Some(IdealKind::Yz);
        let r = run(&g).unwrap();
        assert_eq!(r.output.unwrap()["count"], 4);
    }

    #[test]
    fn worked_examples_suite_passes() {
        let r = run(&RunConfig::new(Command::Suite(SuiteName::PaperExamples))).unwrap();
        assert_eq!(r.summary.fail, 0, "{}", r.to_text());
        assert_eq!(r.verdicts[0].check_name, "symplectic_example");
    }
}
