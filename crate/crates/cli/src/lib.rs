//! Front end shared by the `foliate` binary and the acceptance suite:
//! reads input documents, runs one command and returns the report, the
//! optional DOT graph, a one-line summary and the exit code.

use divisor::{dicritical_decide, parse_divisor, CDivisor};
use model::{annotated_dot, blowup_stability, compute_model, logarithmic_model_form, model_json, tree_json, verify_json};
use numtower::{eigen_ratio_class, TowerError, TowerElem};
use resolution::{
    classify_form, desingularize_list, resolve_with, to_dot, ListError, ResolutionTree, ResolveError, ResolveOptions,
};
use serde_json::{json, Value};
use symbolic::{parse_foliation_document, parse_list_document, BiPoly, OneForm, ParseError, Parsed};

/// Exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    /// An internal consistency check failed.
    pub const INTERNAL: i32 = 1;
    pub const PARSE: i32 = 2;
    /// Not a generalized curve, or a dicritical divisor.
    pub const REJECTED: i32 = 3;
    /// Depth or tower-degree cap exceeded.
    pub const CAP: i32 = 4;
}

#[derive(Clone, Debug)]
pub enum Command {
    Resolve,
    Model,
    Classify,
    Dicritical,
    ReduceList,
    /// Checks the divisor document (given as text) against the foliation.
    Verify(String),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Resolve => "resolve",
            Command::Model => "model",
            Command::Classify => "classify",
            Command::Dicritical => "dicritical",
            Command::ReduceList => "reduce-list",
            Command::Verify(_) => "verify",
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub max_depth: usize,
    pub tower_cap: usize,
    /// Branch equations for the logarithmic model.
    pub equations: Vec<BiPoly>,
}

impl RunConfig {
    pub fn new(command: Command) -> RunConfig {
        RunConfig { command, max_depth: 64, tower_cap: numtower::DEFAULT_DEGREE_CAP, equations: Vec::new() }
    }

    fn options(&self, equations: Vec<BiPoly>) -> ResolveOptions {
        ResolveOptions { max_depth: self.max_depth, tower_cap: self.tower_cap, equations, ..Default::default() }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub code: i32,
    pub json: Value,
    pub dot: Option<String>,
    pub summary: String,
}

impl Outcome {
    fn fail(code: i32, status: &str, msg: String) -> Outcome {
        Outcome { code, json: json!({ "status": status, "error": msg }), dot: None, summary: format!("{status}: {msg}") }
    }
}

fn parse_failure(e: impl std::fmt::Display) -> Outcome {
    Outcome::fail(exit::PARSE, "parse_error", e.to_string())
}

fn tower_failure(e: &TowerError) -> Outcome {
    match e {
        TowerError::DegreeCapExceeded { .. } => Outcome::fail(exit::CAP, "cap_exceeded", e.to_string()),
        _ => Outcome::fail(exit::INTERNAL, "error", e.to_string()),
    }
}

fn resolve_failure(e: ResolveError) -> Outcome {
    match e {
        ResolveError::Rejected(r) => Outcome {
            code: exit::REJECTED,
            json: json!({
                "status": "rejected",
                "reason": r.reason.to_string(),
                "address": r.address.to_string(),
                "diagnosis": r.diagnosis.map(|d| d.to_string()),
            }),
            dot: None,
            summary: format!("rejected: {r}"),
        },
        ResolveError::DepthCap(_) => Outcome::fail(exit::CAP, "cap_exceeded", e.to_string()),
        ResolveError::Tower(t) => tower_failure(&t),
        ResolveError::ZeroForm => Outcome::fail(exit::PARSE, "parse_error", e.to_string()),
        ResolveError::Blowup(_) => Outcome::fail(exit::INTERNAL, "error", e.to_string()),
    }
}

/// The reduced form of a `foliation:` document, with the equations of a
/// logarithmic presentation when one was given.
pub fn read_foliation(text: &str) -> Result<(OneForm, Vec<BiPoly>), ParseError> {
    match parse_foliation_document(text)? {
        Parsed::Form(w) => Ok((w.strip_common_factor().0, Vec::new())),
        Parsed::Log(l) => {
            let eqs = l.pairs.iter().map(|p| p.1.clone()).filter(BiPoly::vanishes_at_origin).collect();
            Ok((l.to_reduced_form(), eqs))
        }
        Parsed::Poly(_) => unreachable!("rejected by the document parser"),
    }
}

fn plural(n: usize, word: &str) -> String {
    format!("{n} {word}{}", if n == 1 { "" } else { "s" })
}

/// Runs one command on the text of one input document.
pub fn run(cfg: &RunConfig, input: &str) -> Outcome {
    match &cfg.command {
        Command::Resolve => run_resolve(cfg, input),
        Command::Model => run_model(cfg, input),
        Command::Classify => run_classify(input),
        Command::Dicritical => run_dicritical(cfg, input),
        Command::ReduceList => run_reduce_list(cfg, input),
        Command::Verify(d) => run_verify(cfg, input, d),
    }
}

fn resolve_input(cfg: &RunConfig, input: &str) -> Result<(ResolutionTree, Vec<BiPoly>), Outcome> {
    let (w, log_eqs) = read_foliation(input).map_err(parse_failure)?;
    let eqs = if cfg.equations.is_empty() { log_eqs } else { cfg.equations.clone() };
    let t = resolve_with(&w, &cfg.options(eqs.clone())).map_err(resolve_failure)?;
    Ok((t, eqs))
}

fn run_resolve(cfg: &RunConfig, input: &str) -> Outcome {
    let (t, _) = match resolve_input(cfg, input) {
        Ok(x) => x,
        Err(o) => return o,
    };
    let mut j = tree_json(&t);
    j["status"] = json!("ok");
    Outcome {
        code: exit::OK,
        json: j,
        dot: Some(to_dot(&t, &|_| None)),
        summary: format!("ok: {}, {}", plural(t.num_blowups(), "blow-up"), plural(t.branches.len(), "branch")),
    }
}

fn run_model(cfg: &RunConfig, input: &str) -> Outcome {
    let (t, eqs) = match resolve_input(cfg, input) {
        Ok(x) => x,
        Err(o) => return o,
    };
    let r = match compute_model(&t) {
        Ok(r) => r,
        Err(e) => return Outcome::fail(exit::INTERNAL, "error", e.to_string()),
    };
    let mut j = model_json(&t, &r);
    let stability = match blowup_stability(&t, &r.model) {
        Ok(v) => v.iter().map(|c| json!({ "point": c.point, "ok": c.ok })).collect::<Vec<_>>(),
        Err(e) => return Outcome::fail(exit::INTERNAL, "error", e.to_string()),
    };
    j["checks"]["blowup_stability"] = json!(stability);
    if !eqs.is_empty() {
        j["logarithmic_model"] = match logarithmic_model_form(&t, &r.model) {
            Ok(l) => json!(l.to_string()),
            Err(e) => json!({ "error": e.to_string() }),
        };
    }
    let coeffs: Vec<String> = r.model.lambdas.iter().map(TowerElem::to_string).collect();
    Outcome {
        code: exit::OK,
        json: j,
        dot: Some(annotated_dot(&t, Some(&r.model))),
        summary: format!("ok: model ({}) after {}", coeffs.join(", "), plural(t.num_blowups(), "blow-up")),
    }
}

fn run_classify(input: &str) -> Outcome {
    let (w, _) = match read_foliation(input) {
        Ok(x) => x,
        Err(e) => return parse_failure(e),
    };
    if w.is_zero() {
        return Outcome::fail(exit::PARSE, "parse_error", "zero form".into());
    }
    let (c, lin) = classify_form(&w, 0);
    let linear = lin.as_ref().map(|l| {
        json!({
            "a_x": l.a_x.to_string(), "a_y": l.a_y.to_string(),
            "b_x": l.b_x.to_string(), "b_y": l.b_y.to_string(),
            "trace": l.trace().to_string(), "det": l.det().to_string(),
            "eigen_ratio": format!("{:?}", eigen_ratio_class(&l.trace(), &l.det())),
        })
    });
    Outcome {
        code: exit::OK,
        json: json!({ "status": "ok", "classification": c.name(), "order": w.order(), "linear": linear }),
        dot: None,
        summary: format!("ok: {c}"),
    }
}

fn witness_outcome(at: Option<String>, w: Vec<u64>, coeffs: &[TowerElem]) -> Outcome {
    Outcome {
        code: exit::REJECTED,
        json: json!({
            "status": "dicritical",
            "at": at,
            "witness": w,
            "coefficients": coeffs.iter().map(TowerElem::to_string).collect::<Vec<_>>(),
        }),
        dot: None,
        summary: format!("dicritical: witness {w:?}"),
    }
}

/// Coefficient of each branch, read through the equations of `d`.
fn branch_coefficients(t: &ResolutionTree, d: &CDivisor) -> Result<Vec<TowerElem>, String> {
    let labeled: Vec<_> = d.components().iter().filter(|c| c.equation.is_some()).collect();
    t.branches
        .iter()
        .enumerate()
        .map(|(i, b)| match b.equation {
            Some(e) => Ok(labeled[e].coeff.clone()),
            None => Err(format!("branch B{} matches no component equation", i + 1)),
        })
        .collect()
}

fn run_dicritical(cfg: &RunConfig, input: &str) -> Outcome {
    let d = match parse_divisor(input) {
        Ok(d) => d,
        Err(e) => return parse_failure(e),
    };
    let with_eq = d.components().iter().filter(|c| c.equation.is_some()).count();
    if with_eq == 0 {
        // Normal-crossings support: decide on the coefficients directly.
        let cs = d.coefficients();
        return match dicritical_decide(&cs) {
            Ok(Some(w)) => witness_outcome(None, w, &cs),
            Ok(None) => Outcome {
                code: exit::OK,
                json: json!({ "status": "non_dicritical", "normal_crossings_assumed": true }),
                dot: None,
                summary: "non-dicritical".into(),
            },
            Err(e) => Outcome::fail(exit::INTERNAL, "error", e.to_string()),
        };
    }
    if with_eq != d.len() {
        return parse_failure("either every component carries an equation or none does");
    }
    let eqs: Vec<BiPoly> = d.components().iter().map(|c| c.equation.clone().unwrap()).collect();
    if let Some(c) = d.components().iter().find(|c| !c.equation.as_ref().unwrap().vanishes_at_origin()) {
        return parse_failure(format!("the curve of {} does not pass through the origin", c.label));
    }
    let f = eqs.iter().fold(BiPoly::one(), |a, b| a.mul(b));
    let w = OneForm::exact(&f).strip_common_factor().0;
    let t = match resolve_with(&w, &cfg.options(eqs)) {
        Ok(t) => t,
        Err(e) => return resolve_failure(e),
    };
    let lambdas = match branch_coefficients(&t, &d) {
        Ok(l) => l,
        Err(m) => return Outcome::fail(exit::INTERNAL, "error", m),
    };
    match model::divisor_dicriticality(&t, &lambdas) {
        Ok(Some((at, w))) => witness_outcome(Some(at), w, &lambdas),
        Ok(None) => Outcome {
            code: exit::OK,
            json: json!({ "status": "non_dicritical", "normal_crossings_assumed": false, "blowups": t.num_blowups() }),
            dot: None,
            summary: format!("non-dicritical after {}", plural(t.num_blowups(), "blow-up")),
        },
        Err(e) => Outcome::fail(exit::INTERNAL, "error", e.to_string()),
    }
}

fn run_reduce_list(cfg: &RunConfig, input: &str) -> Outcome {
    let fs = match parse_list_document(input) {
        Ok(f) => f,
        Err(e) => return parse_failure(e),
    };
    let t = match desingularize_list(&fs, cfg.max_depth) {
        Ok(t) => t,
        Err(ListError::ZeroInput) => return parse_failure("zero function in the list"),
        Err(e @ ListError::DepthCap(_)) => return Outcome::fail(exit::CAP, "cap_exceeded", e.to_string()),
        Err(ListError::Tower(e)) => return tower_failure(&e),
    };
    let points: Vec<Value> = t
        .terminal()
        .map(|n| {
            let c = n.certificate.as_ref().expect("terminal points are certified");
            json!({
                "address": n.address.to_string(),
                "lines": c.lines.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
                "functions": c.functions.iter().map(|f| json!({ "unit": f.unit.to_string(), "exponents": [f.exponents.0, f.exponents.1] })).collect::<Vec<_>>(),
                "verified": c.verify(&n.germs),
            })
        })
        .collect();
    Outcome {
        code: exit::OK,
        json: json!({ "status": "ok", "blowups": t.num_blowups(), "points": points }),
        dot: None,
        summary: format!("ok: desingularized after {}", plural(t.num_blowups(), "blow-up")),
    }
}

fn run_verify(cfg: &RunConfig, input: &str, divisor_text: &str) -> Outcome {
    let d = match parse_divisor(divisor_text) {
        Ok(d) => d,
        Err(e) => return parse_failure(e),
    };
    let eqs: Vec<BiPoly> = d.components().iter().filter_map(|c| c.equation.clone()).collect();
    let cfg = RunConfig { equations: eqs.clone(), ..cfg.clone() };
    let (t, _) = match resolve_input(&cfg, input) {
        Ok(x) => x,
        Err(o) => return o,
    };
    // With equations, relabel the divisor on the branches they reach.
    let d = if eqs.is_empty() {
        d
    } else {
        match branch_coefficients(&t, &d) {
            Ok(l) => CDivisor::from_pairs(l.into_iter().enumerate().map(|(i, c)| (format!("B{}", i + 1), c))),
            Err(m) => return Outcome::fail(exit::REJECTED, "not_a_model", m),
        }
    };
    match model::verify_model(&t, &d) {
        Ok(r) => {
            let ok = r.is_model();
            let mut j = verify_json(&r);
            j["status"] = json!(if ok { "model" } else { "not_a_model" });
            Outcome {
                code: if ok { exit::OK } else { exit::REJECTED },
                json: j,
                dot: None,
                summary: if ok { "ok: divisorial model".into() } else { "not a divisorial model".into() },
            }
        }
        Err(e) => Outcome::fail(exit::INTERNAL, "error", e.to_string()),
    }
}
