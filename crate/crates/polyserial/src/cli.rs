//! Declarative batch front end: JSON job configs in, JSON or text reports
//! out.
//!
//! A job config names a ring, optionally a code (and a second code for the
//! stabilizer construction), and the command decides what to compute. The
//! JSON report is the primary output; the text rendering is derived from
//! the same JSON value, so the two never disagree. Reports are
//! deterministic: serde_json keeps object keys sorted, every enumeration
//! in the library is ordered, and sizes too large for a JSON number are
//! emitted as decimal strings.
//!
//! Config schema:
//!
//! ```json
//! {
//!   "note": "optional free-form string",
//!   "ring": {
//!     "base": {"p": 3, "e": 2, "t": 1, "modulus": [..optional t+1 ints..]},
//!     "moduli": [[-1, 0, 1], ...]
//!   },
//!   "code": {"n": 5, "f": [1, 0, 2, 1, 0], "generators": [[1, 1]]},
//!   "code2": {"generators": [[1, 1]]},
//!   "route": "annihilator"
//! }
//! ```
//!
//! `f` lists the relation coefficients `f_0..f_{n-1}` with
//! `x^n = f_0 + f_1 x + ... + f_{n-1} x^{n-1}`; generators are ascending
//! polynomial coefficient lists. An element of the ring is a bare integer
//! (mapped through the integers), an array of `m` base-ring entries, or,
//! when the base has `t > 1`, an array of `m` arrays of `t` integers.
//! `code2` and `route` apply to the `css` command only.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::chain::{ChainElem, ChainRing};
use crate::code::{Ambient, LinearCode};
use crate::css::{css_construct, euclidean_css, gray_min_distance, GrayMap};
use crate::duality::{
    annihilator_dual, classify, count_codes, enumerate_ideal_count, enumerate_monic_divisors,
    euclidean_dual, gram_matrix, CriterionReport,
};
use crate::error::{Error, Result};
use crate::poly::PolyRing;
use crate::ring::Ring;
use crate::serial::{SerialElem, SerialRing};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CommandKind {
    Decompose,
    CodeInfo,
    Dual,
    Classify,
    Gram,
    Css,
    CountCodes,
    SearchSelfdual,
}

impl CommandKind {
    pub fn name(&self) -> &'static str {
        match self {
            CommandKind::Decompose => "decompose",
            CommandKind::CodeInfo => "code-info",
            CommandKind::Dual => "dual",
            CommandKind::Classify => "classify",
            CommandKind::Gram => "gram",
            CommandKind::Css => "css",
            CommandKind::CountCodes => "count-codes",
            CommandKind::SearchSelfdual => "search-selfdual",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Route {
    Annihilator,
    Euclidean,
}

pub struct Options {
    pub budget: u64,
    pub gray: Option<GrayMap>,
}

pub struct CodeSpec {
    pub n: usize,
    /// Relation coefficients `f_0..f_{n-1}`.
    pub f: Vec<SerialElem>,
    /// Ascending coefficient lists.
    pub generators: Vec<Vec<SerialElem>>,
}

pub struct JobConfig {
    pub ring: SerialRing,
    pub code: Option<CodeSpec>,
    pub code2: Option<CodeSpec>,
    pub route: Route,
}

fn bad(path: &str, what: impl std::fmt::Display) -> Error {
    Error::InvalidInput(format!("config {path}: {what}"))
}

fn as_object<'v>(v: &'v Value, path: &str) -> Result<&'v Map<String, Value>> {
    v.as_object().ok_or_else(|| bad(path, "expected an object"))
}

fn as_array<'v>(v: &'v Value, path: &str) -> Result<&'v Vec<Value>> {
    v.as_array().ok_or_else(|| bad(path, "expected an array"))
}

fn as_u64(v: &Value, path: &str) -> Result<u64> {
    v.as_u64()
        .ok_or_else(|| bad(path, "expected a non-negative integer"))
}

fn as_i64(v: &Value, path: &str) -> Result<i64> {
    v.as_i64().ok_or_else(|| bad(path, "expected an integer"))
}

fn reject_unknown(map: &Map<String, Value>, allowed: &[&str], path: &str) -> Result<()> {
    for key in map.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(bad(
                path,
                format!("unknown key {key:?} (allowed: {})", allowed.join(", ")),
            ));
        }
    }
    Ok(())
}

fn parse_chain_elem(base: &ChainRing, v: &Value, path: &str) -> Result<ChainElem> {
    match v {
        Value::Number(_) => Ok(base.from_i64(as_i64(v, path)?)),
        Value::Array(parts) => {
            if parts.len() != base.t() as usize {
                return Err(bad(
                    path,
                    format!(
                        "base-ring element needs {} coordinates, got {}",
                        base.t(),
                        parts.len()
                    ),
                ));
            }
            let mut coords = Vec::with_capacity(parts.len());
            for (i, p) in parts.iter().enumerate() {
                coords.push(as_i64(p, &format!("{path}[{i}]"))?);
            }
            base.elem_from_i64_coeffs(&coords)
                .map_err(|e| bad(path, e))
        }
        _ => Err(bad(path, "expected an integer or an array of integers")),
    }
}

fn parse_elem(ring: &SerialRing, v: &Value, path: &str) -> Result<SerialElem> {
    match v {
        Value::Number(_) => Ok(ring.from_i64(as_i64(v, path)?)),
        Value::Array(parts) => {
            if parts.len() != ring.dim() {
                return Err(bad(
                    path,
                    format!(
                        "ring element needs {} coordinates, got {}",
                        ring.dim(),
                        parts.len()
                    ),
                ));
            }
            let mut coords = Vec::with_capacity(parts.len());
            for (i, p) in parts.iter().enumerate() {
                coords.push(parse_chain_elem(ring.base(), p, &format!("{path}[{i}]"))?);
            }
            Ok(coords)
        }
        _ => Err(bad(path, "expected an integer or a coordinate array")),
    }
}

fn parse_ring(v: &Value) -> Result<SerialRing> {
    let obj = as_object(v, "ring")?;
    reject_unknown(obj, &["base", "moduli"], "ring")?;
    let base_v = obj
        .get("base")
        .ok_or_else(|| bad("ring", "missing \"base\""))?;
    let base_obj = as_object(base_v, "ring.base")?;
    reject_unknown(base_obj, &["p", "e", "t", "modulus"], "ring.base")?;
    let p = as_u64(
        base_obj
            .get("p")
            .ok_or_else(|| bad("ring.base", "missing \"p\""))?,
        "ring.base.p",
    )?;
    let e = as_u64(
        base_obj
            .get("e")
            .ok_or_else(|| bad("ring.base", "missing \"e\""))?,
        "ring.base.e",
    )?;
    let t = as_u64(
        base_obj
            .get("t")
            .ok_or_else(|| bad("ring.base", "missing \"t\""))?,
        "ring.base.t",
    )?;
    let e = u32::try_from(e).map_err(|_| bad("ring.base.e", "out of range"))?;
    let t = u32::try_from(t).map_err(|_| bad("ring.base.t", "out of range"))?;
    let modulus = match base_obj.get("modulus") {
        None => None,
        Some(mv) => {
            let arr = as_array(mv, "ring.base.modulus")?;
            let mut coeffs = Vec::with_capacity(arr.len());
            for (i, c) in arr.iter().enumerate() {
                let x = as_i64(c, &format!("ring.base.modulus[{i}]"))?;
                if x < 0 {
                    return Err(bad(
                        &format!("ring.base.modulus[{i}]"),
                        "modulus coefficients must be non-negative",
                    ));
                }
                coeffs.push(x as u64);
            }
            Some(coeffs)
        }
    };
    let base = ChainRing::new(p, e, t, modulus)?;
    let moduli_v = obj
        .get("moduli")
        .ok_or_else(|| bad("ring", "missing \"moduli\""))?;
    let moduli_arr = as_array(moduli_v, "ring.moduli")?;
    let px = PolyRing::new(&base);
    let mut moduli = Vec::with_capacity(moduli_arr.len());
    for (i, mv) in moduli_arr.iter().enumerate() {
        let path = format!("ring.moduli[{i}]");
        let arr = as_array(mv, &path)?;
        if arr.is_empty() {
            return Err(bad(&path, "modulus polynomial must be nonempty"));
        }
        let mut coeffs = Vec::with_capacity(arr.len());
        for (j, c) in arr.iter().enumerate() {
            coeffs.push(parse_chain_elem(&base, c, &format!("{path}[{j}]"))?);
        }
        moduli.push(px.from_coeffs(coeffs));
    }
    SerialRing::new(base, moduli)
}

fn parse_code(ring: &SerialRing, v: &Value, path: &str, sibling: Option<&CodeSpec>) -> Result<CodeSpec> {
    let obj = as_object(v, path)?;
    reject_unknown(obj, &["n", "f", "generators"], path)?;
    let (n, f) = match (obj.get("n"), obj.get("f")) {
        (Some(nv), Some(fv)) => {
            let n = as_u64(nv, &format!("{path}.n"))? as usize;
            if n == 0 {
                return Err(bad(&format!("{path}.n"), "length must be at least 1"));
            }
            let arr = as_array(fv, &format!("{path}.f"))?;
            if arr.len() != n {
                return Err(bad(
                    &format!("{path}.f"),
                    format!("must list exactly n = {n} relation coefficients, got {}", arr.len()),
                ));
            }
            let mut f = Vec::with_capacity(n);
            for (i, c) in arr.iter().enumerate() {
                f.push(parse_elem(ring, c, &format!("{path}.f[{i}]"))?);
            }
            (n, f)
        }
        (None, None) => match sibling {
            Some(s) => (s.n, s.f.clone()),
            None => return Err(bad(path, "missing \"n\" and \"f\"")),
        },
        _ => return Err(bad(path, "\"n\" and \"f\" must be given together")),
    };
    if let Some(s) = sibling {
        if s.n != n || s.f != f {
            return Err(bad(path, "must use the same length and f as \"code\""));
        }
    }
    let mut generators = Vec::new();
    if let Some(gv) = obj.get("generators") {
        let arr = as_array(gv, &format!("{path}.generators"))?;
        for (i, g) in arr.iter().enumerate() {
            let gp = format!("{path}.generators[{i}]");
            let garr = as_array(g, &gp)?;
            if garr.is_empty() || garr.len() > n + 1 {
                return Err(bad(
                    &gp,
                    format!("generator must have 1 to n + 1 = {} coefficients", n + 1),
                ));
            }
            let mut coeffs = Vec::with_capacity(garr.len());
            for (j, c) in garr.iter().enumerate() {
                coeffs.push(parse_elem(ring, c, &format!("{gp}[{j}]"))?);
            }
            generators.push(coeffs);
        }
    }
    Ok(CodeSpec { n, f, generators })
}

/// Parse and validate a raw config against the schema; unknown keys are
/// rejected, malformed JSON errors carry serde's line and column.
pub fn validate(raw: &str, command: CommandKind) -> Result<JobConfig> {
    let root: Value = serde_json::from_str(raw)
        .map_err(|e| Error::InvalidInput(format!("config is not valid JSON: {e}")))?;
    let obj = as_object(&root, "(top level)")?;
    reject_unknown(obj, &["note", "ring", "code", "code2", "route"], "(top level)")?;
    if let Some(note) = obj.get("note") {
        if !note.is_string() {
            return Err(bad("note", "expected a string"));
        }
    }
    let ring = parse_ring(
        obj.get("ring")
            .ok_or_else(|| bad("(top level)", "missing \"ring\""))?,
    )?;
    let code = match obj.get("code") {
        Some(cv) => Some(parse_code(&ring, cv, "code", None)?),
        None => None,
    };
    if code.is_none() && command != CommandKind::Decompose {
        return Err(bad(
            "(top level)",
            format!("the {} command needs a \"code\" section", command.name()),
        ));
    }
    let code2 = match obj.get("code2") {
        None => None,
        Some(cv) => {
            if command != CommandKind::Css {
                return Err(bad("code2", "only the css command takes a second code"));
            }
            Some(parse_code(&ring, cv, "code2", code.as_ref())?)
        }
    };
    let route = match obj.get("route") {
        None => Route::Annihilator,
        Some(rv) => {
            if command != CommandKind::Css {
                return Err(bad("route", "only the css command takes a route"));
            }
            match rv.as_str() {
                Some("annihilator") => Route::Annihilator,
                Some("euclidean") => Route::Euclidean,
                _ => {
                    return Err(bad(
                        "route",
                        "expected \"annihilator\" or \"euclidean\"",
                    ))
                }
            }
        }
    };
    Ok(JobConfig { ring, code, code2, route })
}

fn ring_json(ring: &SerialRing) -> Value {
    let base = ring.base();
    let moduli: Vec<Value> = ring
        .moduli()
        .iter()
        .map(|m| Value::Array(m.coeffs().iter().map(|c| chain_json(base, c)).collect()))
        .collect();
    json!({
        "p": base.p(),
        "e": base.e(),
        "t": base.t(),
        "num_vars": ring.num_vars(),
        "moduli": moduli,
    })
}

fn chain_json(base: &ChainRing, c: &ChainElem) -> Value {
    let coeffs = c.coeffs();
    if base.t() == 1 {
        json!(coeffs[0])
    } else {
        json!(coeffs)
    }
}

fn elem_json(ring: &SerialRing, e: &SerialElem) -> Value {
    Value::Array(e.iter().map(|c| chain_json(ring.base(), c)).collect())
}

fn word_json(ring: &SerialRing, w: &[SerialElem]) -> Value {
    Value::Array(w.iter().map(|s| elem_json(ring, s)).collect())
}

fn big_json(b: &BigUint) -> Value {
    match b.to_u64() {
        Some(u) if u < (1 << 53) => json!(u),
        _ => json!(b.to_string()),
    }
}

fn code_spec(cfg: &JobConfig) -> Result<&CodeSpec> {
    cfg.code
        .as_ref()
        .ok_or_else(|| Error::InvalidInput("this command needs a \"code\" section".into()))
}

fn build_ambient<'a>(cfg: &'a JobConfig) -> Result<Ambient<'a>> {
    let spec = code_spec(cfg)?;
    Ambient::new(&cfg.ring, spec.f.clone())
}

fn build_code(ambient: &Ambient, spec: &CodeSpec, path: &str) -> Result<LinearCode> {
    if spec.generators.is_empty() {
        return Err(Error::InvalidInput(format!(
            "this command needs at least one generator under \"{path}\""
        )));
    }
    let vecs: Vec<Vec<SerialElem>> = spec
        .generators
        .iter()
        .map(|g| ambient.poly_to_vec(g))
        .collect();
    Ok(ambient.ideal_code(&vecs))
}

fn dual_json(ambient: &Ambient, dual: &LinearCode) -> Value {
    let ring = ambient.ring();
    let rows: Vec<Value> = (0..dual.form.mat.rows)
        .map(|i| word_json(ring, &ambient.unflatten(dual.form.mat.row(i))))
        .collect();
    json!({
        "generators": rows,
        "size": big_json(&ambient.code_size(dual)),
    })
}

fn criterion_json(c: &CriterionReport) -> Value {
    json!({
        "self_dual": c.self_dual,
        "self_orthogonal": c.self_orthogonal,
        "dual_containing": c.dual_containing,
        "lcd": c.lcd,
        "component_self_dual": c.component_self_dual,
        "component_self_orthogonal": c.component_self_orthogonal,
        "component_dual_containing": c.component_dual_containing,
        "component_lcd": c.component_lcd,
    })
}

/// Execute a validated job and return the JSON report.
pub fn run(command: CommandKind, cfg: &JobConfig, opts: &Options) -> Result<Value> {
    let mut warnings: Vec<String> = cfg.ring.warnings().to_vec();
    if opts.gray.is_some() && command != CommandKind::CodeInfo {
        warnings.push("the --gray option only affects code-info; ignored".into());
    }
    let payload = match command {
        CommandKind::Decompose => run_decompose(cfg)?,
        CommandKind::CodeInfo => run_code_info(cfg, opts)?,
        CommandKind::Dual => run_dual(cfg, &mut warnings)?,
        CommandKind::Classify => run_classify(cfg)?,
        CommandKind::Gram => run_gram(cfg)?,
        CommandKind::Css => run_css(cfg, opts)?,
        CommandKind::CountCodes => run_count_codes(cfg, opts, &mut warnings)?,
        CommandKind::SearchSelfdual => run_search_selfdual(cfg, opts)?,
    };
    let mut report = Map::new();
    report.insert("command".into(), json!(command.name()));
    report.insert("warnings".into(), json!(warnings));
    for (k, v) in payload {
        report.insert(k, v);
    }
    Ok(Value::Object(report))
}

type Payload = Vec<(String, Value)>;

fn run_decompose(cfg: &JobConfig) -> Result<Payload> {
    let ring = &cfg.ring;
    let comps: Vec<Value> = ring
        .components()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            json!({
                "idempotent": elem_json(ring, &c.idempotent),
                "residue_degree": c.residue_degree,
                "size": big_json(&ring.component_size(i)),
            })
        })
        .collect();
    let orbits = ring.frobenius_orbit_count(1)?;
    if orbits.count != ring.components().len() {
        return Err(Error::Internal(format!(
            "idempotent decomposition found {} components but the orbit count is {}",
            ring.components().len(),
            orbits.count
        )));
    }
    Ok(vec![
        ("ring".into(), ring_json(ring)),
        ("size".into(), big_json(&ring.size())),
        ("k".into(), json!(ring.components().len())),
        ("components".into(), Value::Array(comps)),
        (
            "orbit_check".into(),
            json!({
                "count": orbits.count,
                "orbit_sizes": orbits.orbit_sizes,
                "splitting_degree": orbits.splitting_degree,
            }),
        ),
    ])
}

fn run_code_info(cfg: &JobConfig, opts: &Options) -> Result<Payload> {
    let ambient = build_ambient(cfg)?;
    let code = build_code(&ambient, code_spec(cfg)?, "code")?;
    let profile = ambient.code_profile(&code)?;
    let dist = ambient.min_distance(&code, opts.budget)?;
    let mut payload = vec![
        ("n".into(), json!(ambient.n())),
        ("size".into(), big_json(&profile.size)),
        ("free".into(), json!(profile.free)),
        (
            "rank".into(),
            profile.rank.map_or(Value::Null, |r| json!(r)),
        ),
        (
            "component_sizes".into(),
            Value::Array(profile.component_sizes.iter().map(big_json).collect()),
        ),
        ("component_ranks".into(), json!(profile.component_ranks)),
        ("component_free".into(), json!(profile.component_free)),
        ("min_distance".into(), json!(dist)),
        ("qsdp".into(), json!(ambient.qsdp_check(&code))),
    ];
    if let Some(map) = opts.gray {
        let name = match map {
            GrayMap::Phi => "phi",
            GrayMap::Ashraf4 => "ashraf4",
        };
        let gd = gray_min_distance(&ambient, &code, map, opts.budget)?;
        payload.push(("gray_map".into(), json!(name)));
        payload.push(("gray_distance".into(), json!(gd)));
    }
    Ok(payload)
}

fn run_dual(cfg: &JobConfig, warnings: &mut Vec<String>) -> Result<Payload> {
    let ambient = build_ambient(cfg)?;
    let code = build_code(&ambient, code_spec(cfg)?, "code")?;
    let euclidean = euclidean_dual(&ambient, &code);
    let annihilator = match annihilator_dual(&ambient, &code) {
        Ok(d) => dual_json(&ambient, &d),
        Err(Error::NonUnitConstant(msg)) => {
            warnings.push(format!("annihilator dual unavailable: {msg}"));
            Value::Null
        }
        Err(e) => return Err(e),
    };
    Ok(vec![
        ("n".into(), json!(ambient.n())),
        ("code_size".into(), big_json(&ambient.code_size(&code))),
        ("euclidean_dual".into(), dual_json(&ambient, &euclidean)),
        ("annihilator_dual".into(), annihilator),
    ])
}

fn run_classify(cfg: &JobConfig) -> Result<Payload> {
    let ambient = build_ambient(cfg)?;
    let spec = code_spec(cfg)?;
    let code = build_code(&ambient, spec, "code")?;
    let single = if spec.generators.len() == 1 {
        Some(spec.generators[0].clone())
    } else {
        None
    };
    let report = classify(&ambient, &code, single.as_deref())?;
    Ok(vec![
        ("n".into(), json!(ambient.n())),
        ("self_dual".into(), json!(report.self_dual)),
        ("self_orthogonal".into(), json!(report.self_orthogonal)),
        ("dual_containing".into(), json!(report.dual_containing)),
        ("lcd".into(), json!(report.lcd)),
        ("code_size".into(), big_json(&report.code_size)),
        ("dual_size".into(), big_json(&report.dual_size)),
        (
            "criterion".into(),
            report
                .criterion
                .as_ref()
                .map_or(Value::Null, criterion_json),
        ),
        ("route_agreement".into(), json!(report.route_agreement)),
    ])
}

fn run_gram(cfg: &JobConfig) -> Result<Payload> {
    let ambient = build_ambient(cfg)?;
    let gram = gram_matrix(&ambient);
    let rows: Vec<Value> = gram.iter().map(|row| word_json(ambient.ring(), row)).collect();
    Ok(vec![
        ("n".into(), json!(ambient.n())),
        ("matrix".into(), Value::Array(rows)),
    ])
}

fn run_css(cfg: &JobConfig, opts: &Options) -> Result<Payload> {
    let ambient = build_ambient(cfg)?;
    let c1 = build_code(&ambient, code_spec(cfg)?, "code")?;
    let c2 = match &cfg.code2 {
        Some(spec) => build_code(&ambient, spec, "code2")?,
        None => c1.clone(),
    };
    let (route_name, report) = match cfg.route {
        Route::Annihilator => (
            "annihilator",
            css_construct(&ambient, &c1, &c2, opts.budget)?,
        ),
        Route::Euclidean => ("euclidean", euclidean_css(&ambient, &c1, &c2, opts.budget)?),
    };
    Ok(vec![
        ("n".into(), json!(report.n)),
        ("k".into(), json!(report.k)),
        ("d".into(), json!(report.d)),
        ("q_base".into(), big_json(&report.q_base)),
        ("route".into(), json!(route_name)),
        ("k1".into(), json!(report.k1)),
        ("k2".into(), json!(report.k2)),
    ])
}

fn run_count_codes(cfg: &JobConfig, opts: &Options, warnings: &mut Vec<String>) -> Result<Payload> {
    let ambient = build_ambient(cfg)?;
    let counted = count_codes(&ambient)?;
    let oracle = match enumerate_ideal_count(&ambient, opts.budget) {
        Ok(c) => {
            if BigUint::from(c) != counted.count {
                return Err(Error::Internal(format!(
                    "code-count formula gives {} but exhaustive enumeration finds {c}",
                    counted.count
                )));
            }
            json!(c)
        }
        Err(Error::BudgetExceeded(msg)) => {
            warnings.push(format!("oracle enumeration skipped: {msg}"));
            Value::Null
        }
        Err(e) => return Err(e),
    };
    Ok(vec![
        ("formula".into(), big_json(&counted.count)),
        ("k".into(), json!(counted.k)),
        ("oracle".into(), oracle),
    ])
}

fn run_search_selfdual(cfg: &JobConfig, opts: &Options) -> Result<Payload> {
    let ambient = build_ambient(cfg)?;
    let ring = ambient.ring();
    let divisors = enumerate_monic_divisors(&ambient, opts.budget)?;
    let mut seen: std::collections::BTreeSet<Vec<Vec<ChainElem>>> = Default::default();
    let mut codes: Vec<Value> = Vec::new();
    let mut class_counts: BTreeMap<&'static str, usize> = BTreeMap::new();
    for g in &divisors {
        let code = ambient.principal_code(g);
        if !seen.insert(code.form.mat.row_vecs()) {
            continue;
        }
        let report = classify(&ambient, &code, Some(g))?;
        let class = if report.self_dual {
            "self-dual"
        } else if report.self_orthogonal {
            "self-orthogonal"
        } else if report.dual_containing {
            "dual-containing"
        } else if report.lcd {
            "lcd"
        } else {
            "none"
        };
        *class_counts.entry(class).or_insert(0) += 1;
        codes.push(json!({
            "generator": word_json(ring, g),
            "class": class,
            "size": big_json(&report.code_size),
        }));
    }
    let counts_json: Map<String, Value> = class_counts
        .into_iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    Ok(vec![
        ("candidates".into(), json!(divisors.len())),
        ("distinct_codes".into(), json!(codes.len())),
        ("class_counts".into(), Value::Object(counts_json)),
        ("codes".into(), Value::Array(codes)),
    ])
}

/// Text rendering of a report, derived from the JSON value.
pub fn render_text(report: &Value) -> String {
    let mut out = String::new();
    render_value(report, 0, &mut out);
    out
}

fn inline(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(inline).collect::<Option<_>>()?;
            let joined = format!("[{}]", parts.join(", "));
            if joined.len() <= 72 {
                Some(joined)
            } else {
                None
            }
        }
        Value::Object(_) => None,
    }
}

fn render_value(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                if let Some(line) = inline(val) {
                    out.push_str(&format!("{pad}{k}: {line}\n"));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render_value(val, indent + 1, out);
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if let Some(line) = inline(item) {
                    out.push_str(&format!("{pad}- {line}\n"));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render_value(item, indent + 1, out);
                }
            }
        }
        _ => {
            let line = inline(v).unwrap_or_default();
            out.push_str(&format!("{pad}{line}\n"));
        }
    }
}
