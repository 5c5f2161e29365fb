use std::collections::BTreeMap;

use lrc_core::closedform::{count_summands, deformed_p, equivariant_on_word, equivariant_table, lr_coefficient, lr_trace, Filter, SummandTrace};
use lrc_core::coxeter::{matrix_from_json, preset_with};
use lrc_core::oracles::crosscheck;
use lrc_core::positivity::{
    admissible_words, commutativity_invariance_audit, hypothesis_class, nonneg_audit, root_positivity_check,
    t_positivity_audit, AuditReport, HypothesisClass,
};
use lrc_core::rank2::{binomial_c, binomial_d, Rank2Params};
use lrc_core::{parse_poly, GroupElement, LrcError, MultiPoly, NumberField, PolyRing, QuasiCartanMatrix, Result, Word};
use serde_json::{json, Value};

use crate::config::{AuditArgs, AuditKind, Command, ComputeArgs, DeformArgs, MatrixSource, Rank2Args, ReducedWordsArgs, RunConfig, TableArgs};

/// What a command produced. `text` and `json` carry the same content.
#[derive(Debug)]
pub struct Output {
    pub text: Vec<String>,
    pub json: Value,
    /// 0, or 1 when a check found a violation or disagreement.
    pub status: i32,
}

impl Output {
    fn ok(text: Vec<String>, json: Value) -> Self {
        Output { text, json, status: 0 }
    }
}

pub fn execute(cfg: &RunConfig) -> Result<Output> {
    match &cfg.command {
        Command::Compute(args) => compute(cfg, &load_matrix(cfg)?, args),
        Command::Table(args) => table(cfg, &load_matrix(cfg)?, args),
        Command::Crosscheck => crosscheck_cmd(cfg, &load_matrix(cfg)?),
        Command::Deform(args) => deform(&load_matrix(cfg)?, args),
        Command::Audit(args) => audit(cfg, &load_matrix(cfg)?, args),
        Command::ReducedWords(args) => reduced_words(&load_matrix(cfg)?, args),
        Command::Rank2(args) => rank2(cfg, args),
    }
}

fn load_matrix(cfg: &RunConfig) -> Result<QuasiCartanMatrix> {
    match &cfg.matrix {
        None => Err(LrcError::Config("no matrix given; use --preset or --matrix".into())),
        Some(MatrixSource::Preset(name)) => preset_with(name, !cfg.no_validate),
        Some(MatrixSource::File(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| LrcError::Config(format!("{}: {e}", path.display())))?;
            let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            matrix_from_json(&text, &name, cfg.no_validate)
        }
    }
}

/// Parses a word and returns its element, with a notice on stderr when the
/// word was not reduced.
fn element(a: &QuasiCartanMatrix, label: &str, text: &str) -> Result<(Word, GroupElement)> {
    let word = Word::parse(text)?;
    let e = a.element(&word)?;
    if e.length() != word.len() {
        eprintln!("note: --{label} {word} is not reduced; using {e}");
    }
    Ok((word, e))
}

/// The target element and a reduced base word for it.
fn target(a: &QuasiCartanMatrix, w: Option<&str>, iota: Option<&str>) -> Result<(GroupElement, Word)> {
    match (w, iota) {
        (None, None) => Err(LrcError::Config("one of --w or --iota is required".into())),
        (Some(w), None) => {
            let (word, e) = element(a, "w", w)?;
            let base = if word.len() == e.length() { word } else { e.canonical().clone() };
            Ok((e, base))
        }
        (w, Some(iota)) => {
            let base = Word::parse(iota)?;
            base.check_rank(a.rank())?;
            let e = match w {
                Some(w) => element(a, "w", w)?.1,
                None => a.system().normal_form(&base),
            };
            a.system().check_reduced_for(&base, &e)?;
            Ok((e, base))
        }
    }
}

fn set(s: &[usize]) -> String {
    let parts: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn trace_line(s: &SummandTrace) -> String {
    format!(
        "K'={} K''={} phi={} p={} alpha={} value={}{}",
        set(&s.kprime),
        set(&s.kdoubleprime),
        s.phi,
        s.p,
        s.alpha_product,
        s.value(),
        if s.admissible { "" } else { " (not admissible)" }
    )
}

fn compute(cfg: &RunConfig, a: &QuasiCartanMatrix, args: &ComputeArgs) -> Result<Output> {
    let (_, u) = element(a, "u", &args.u)?;
    let (_, v) = element(a, "v", &args.v)?;
    let (w, iota) = target(a, args.w.as_deref(), args.iota.as_deref())?;
    let filter = Filter::from(cfg.filter);
    let mut json = json!({
        "matrix": a.name(),
        "u": u.to_string(),
        "v": v.to_string(),
        "w": w.to_string(),
        "iota": iota.to_string(),
    });
    if args.count_only {
        let n = count_summands(a, &u, &v, &w, &iota)?;
        json["summands"] = json!({ "admissible": n.admissible, "all": n.all });
        return Ok(Output::ok(vec![format!("summands: {} (admissible), {} (all)", n.admissible, n.all)], json));
    }
    let c = lr_coefficient(a, &u, &v, &w, &iota, filter)?;
    let mut text = Vec::new();
    if args.trace {
        let summands = lr_trace(a, &u, &v, &w, &iota, filter)?;
        text.extend(summands.iter().map(trace_line));
        json["trace"] = summands.iter().map(SummandTrace::to_json).collect();
    }
    json["c"] = json!(c.render());
    if args.equivariant {
        let p = equivariant_on_word(a, &u, &v, &iota, filter)?;
        text.push(format!("c = {c}"));
        text.push(format!("p = {p}"));
        json["p"] = json!(p.render());
    } else if args.trace {
        text.push(format!("c = {c}"));
    } else {
        text.push(c.render());
    }
    Ok(Output::ok(text, json))
}

/// `c*σw` with the coefficient omitted when it is 1.
fn term(c: &MultiPoly, w: &GroupElement) -> String {
    let label = format!("σ{}", w.canonical().compact());
    let r = c.render();
    if r == "1" {
        label
    } else if r.contains(' ') {
        format!("({r})*{label}")
    } else {
        format!("{r}*{label}")
    }
}

fn table(cfg: &RunConfig, a: &QuasiCartanMatrix, args: &TableArgs) -> Result<Output> {
    let [l1, l2] = args.len[..] else {
        return Err(LrcError::Config("--len takes exactly two lengths".into()));
    };
    let total = l1 + l2;
    if total > cfg.max_len {
        return Err(LrcError::TooLarge { len: total, cap: cfg.max_len });
    }
    let elements = a.system().elements_up_to(total, cfg.group_cap)?;
    let filter = Filter::from(cfg.filter);
    let mut products: BTreeMap<(GroupElement, GroupElement), Vec<(GroupElement, MultiPoly)>> = BTreeMap::new();
    for w in elements.iter().filter(|w| w.length() == total) {
        for ((u, v), p) in equivariant_table(a, w.canonical(), filter)? {
            if u.length() == l1 && v.length() == l2 {
                products.entry((u, v)).or_default().push((w.clone(), p));
            }
        }
    }
    let mut text = Vec::new();
    let mut rows = Vec::new();
    for u in elements.iter().filter(|x| x.length() == l1) {
        for v in elements.iter().filter(|x| x.length() == l2) {
            let terms = products.remove(&(u.clone(), v.clone())).unwrap_or_default();
            let rhs = if terms.is_empty() {
                "0".to_string()
            } else {
                terms.iter().map(|(w, c)| term(c, w)).collect::<Vec<_>>().join(" + ")
            };
            let line = format!("σ{} · σ{} = {rhs}", u.canonical().compact(), v.canonical().compact());
            rows.push(json!({
                "u": u.to_string(),
                "v": v.to_string(),
                "terms": terms.iter().map(|(w, c)| json!({ "w": w.to_string(), "c": c.render() })).collect::<Vec<_>>(),
                "text": line,
            }));
            text.push(line);
        }
    }
    Ok(Output::ok(text, json!({ "matrix": a.name(), "len": [l1, l2], "rows": rows })))
}

fn crosscheck_cmd(cfg: &RunConfig, a: &QuasiCartanMatrix) -> Result<Output> {
    let report = crosscheck(a, cfg.max_len, cfg.duan_cap, cfg.group_cap)?;
    let mut text = vec![
        format!("matrix: {}", report.matrix),
        format!("max length: {}, duan cap: {}", report.max_len, report.duan_cap),
        format!("cases: {}", report.cases.len()),
        format!("duan compared: {}", report.cases.iter().filter(|c| c.duan.is_some()).count()),
        format!("rank2 compared: {}", report.cases.iter().filter(|c| c.rank2.is_some()).count()),
        format!("square rule: {}", report.bs_square_rule),
    ];
    for c in report.cases.iter().filter(|c| !c.agree) {
        text.push(format!(
            "disagree w={} iota={} u={} v={}: closed={} all={} recursion={} duan={} rank2={}",
            c.w,
            c.iota,
            c.u,
            c.v,
            c.closed_form,
            c.closed_form_all,
            c.recursion,
            c.duan.as_deref().unwrap_or("-"),
            c.rank2.as_deref().unwrap_or("-")
        ));
    }
    text.push(format!("disagreements: {}", report.disagreements));
    text.push(if report.all_agree { "all agree".into() } else { "DISAGREE".into() });
    let status = if report.all_agree { 0 } else { 1 };
    let json = serde_json::to_value(&report).expect("report serializes");
    Ok(Output { text, json, status })
}

fn parse_scalar(a: &QuasiCartanMatrix, text: &str) -> Result<MultiPoly> {
    let p = parse_poly(a.ring(), text)?;
    if p.constant_value().is_none() {
        return Err(LrcError::Parse(format!("--at expects a number, got `{text}`")));
    }
    Ok(p)
}

fn deform(a: &QuasiCartanMatrix, args: &DeformArgs) -> Result<Output> {
    let (_, u) = element(a, "u", &args.u)?;
    let (_, v) = element(a, "v", &args.v)?;
    let (w, iota) = target(a, args.w.as_deref(), args.iota.as_deref())?;
    let at = args.at.as_deref().map(|t| parse_scalar(a, t)).transpose()?;
    let eval = |word: &Word| -> Result<MultiPoly> {
        let p = deformed_p(a, &u, &v, word)?;
        Ok(match &at {
            Some(x) => p.substitute_t(&x.constant_value().expect("checked constant")),
            None => p,
        })
    };
    let mut json = json!({ "matrix": a.name(), "u": u.to_string(), "v": v.to_string(), "w": w.to_string() });
    if let Some(t) = &args.at {
        json["at"] = json!(t);
    }
    if !args.per_word && !args.classes {
        let p = eval(&iota)?;
        json["iota"] = json!(iota.to_string());
        json["p"] = json!(p.render());
        return Ok(Output::ok(vec![p.render()], json));
    }
    let words: Vec<Word> = a.system().reduced_words(&w).into_iter().collect();
    let mut values = BTreeMap::new();
    for word in &words {
        values.insert(word.clone(), eval(word)?);
    }
    let mut text = Vec::new();
    let mut entries = Vec::new();
    if args.per_word {
        for (word, p) in &values {
            text.push(format!("{word}: {p}"));
            entries.push(json!({ "words": [word.to_string()], "p": p.render() }));
        }
    } else {
        for class in a.commutativity_classes(&words) {
            let labels: Vec<String> = class.iter().map(Word::to_string).collect();
            let first = &values[&class[0]];
            if class.iter().all(|x| &values[x] == first) {
                text.push(format!("[{}]: {first}", labels.join(" | ")));
                entries.push(json!({ "words": labels, "p": first.render() }));
            } else {
                // Not constant on the class; show each member.
                for word in &class {
                    text.push(format!("[{}] {word}: {}", labels.join(" | "), values[word]));
                    entries.push(json!({ "words": [word.to_string()], "class": labels, "p": values[word].render() }));
                }
            }
        }
    }
    json["entries"] = json!(entries);
    Ok(Output::ok(text, json))
}

fn audit_text(r: &AuditReport) -> Vec<String> {
    let mut text = vec![
        format!("audit: {}", r.audit),
        format!("matrix: {}", r.matrix),
        format!("hypothesis: {}", r.hypothesis),
        format!("max length: {}", r.max_len),
        format!("cases: {}", r.cases),
        format!("violations: {}", r.violations.len()),
    ];
    for v in &r.violations {
        text.push(format!("violation w={} iota={} u={} v={}: {}", v.w, v.iota, v.u, v.v, v.value));
    }
    text.extend(r.warnings.iter().map(|w| format!("warning: {w}")));
    text.push(if r.pass { "PASS".into() } else { "FAIL".into() });
    text
}

fn audit(cfg: &RunConfig, a: &QuasiCartanMatrix, args: &AuditArgs) -> Result<Output> {
    let report = match args.kind {
        AuditKind::Nonneg => nonneg_audit(a, cfg.max_len, cfg.group_cap)?,
        AuditKind::TPositivity => t_positivity_audit(a, cfg.max_len, cfg.group_cap)?,
        AuditKind::Commutativity => commutativity_invariance_audit(a, cfg.max_len, cfg.group_cap)?,
        AuditKind::Root => return root_audit(cfg, a),
    };
    let status = if report.pass { 0 } else { 1 };
    Ok(Output { text: audit_text(&report), json: serde_json::to_value(&report).expect("report serializes"), status })
}

fn root_audit(cfg: &RunConfig, a: &QuasiCartanMatrix) -> Result<Output> {
    let words = admissible_words(a.rank(), cfg.max_len);
    let mut failures = Vec::new();
    for word in &words {
        let r = root_positivity_check(a, word)?;
        if !r.holds {
            failures.push((word.to_string(), r.witness.unwrap_or_default()));
        }
    }
    let hypothesis: HypothesisClass = hypothesis_class(a);
    let mut text = vec![
        "audit: root".to_string(),
        format!("matrix: {}", a.name()),
        format!("hypothesis: {hypothesis}"),
        format!("max length: {}", cfg.max_len),
        format!("cases: {}", words.len()),
        format!("violations: {}", failures.len()),
    ];
    text.extend(failures.iter().map(|(w, why)| format!("violation iota={w}: {why}")));
    text.push(if failures.is_empty() { "PASS".into() } else { "FAIL".into() });
    let json = json!({
        "matrix": a.name(),
        "audit": "root",
        "hypothesis": hypothesis,
        "max_len": cfg.max_len,
        "cases": words.len(),
        "violations": failures.iter().map(|(w, why)| json!({ "iota": w, "witness": why })).collect::<Vec<_>>(),
        "pass": failures.is_empty(),
    });
    Ok(Output { text, json, status: if failures.is_empty() { 0 } else { 1 } })
}

fn reduced_words(a: &QuasiCartanMatrix, args: &ReducedWordsArgs) -> Result<Output> {
    let (_, w) = element(a, "w", &args.w)?;
    let words: Vec<Word> = a.system().reduced_words(&w).into_iter().collect();
    let mut json = json!({ "matrix": a.name(), "w": w.to_string(), "words": words.iter().map(Word::to_string).collect::<Vec<_>>() });
    if !args.classes {
        return Ok(Output::ok(words.iter().map(Word::to_string).collect(), json));
    }
    let classes: Vec<Vec<String>> =
        a.commutativity_classes(&words).iter().map(|c| c.iter().map(Word::to_string).collect()).collect();
    json["classes"] = json!(classes);
    Ok(Output::ok(classes.iter().map(|c| c.join(" | ")).collect(), json))
}

fn rank2(cfg: &RunConfig, args: &Rank2Args) -> Result<Output> {
    let params = match (&args.a, &args.b, &cfg.matrix) {
        (None, None, Some(_)) => Rank2Params::from_matrix(&load_matrix(cfg)?)?,
        _ => {
            let golden = [&args.a, &args.b].iter().any(|x| x.as_deref().is_some_and(|s| s.contains("rho")));
            let ring = PolyRing::new(if golden { NumberField::golden() } else { NumberField::rational() }, 2);
            let mut p = Rank2Params::symbolic(&ring);
            if let Some(a) = &args.a {
                p.a = parse_poly(&ring, a)?;
            }
            if let Some(b) = &args.b {
                p.b = parse_poly(&ring, b)?;
            }
            p
        }
    };
    let cell = |r: Result<MultiPoly>| -> Result<String> {
        match r {
            Ok(p) => Ok(p.render()),
            Err(LrcError::InexactDivision(_)) => Ok("undefined".into()),
            Err(e) => Err(e),
        }
    };
    let mut text = vec![format!("a = {}, b = {}", params.a, params.b)];
    let mut rows = Vec::new();
    for m in 0..=cfg.max_len {
        for k in 0..=m {
            let c = cell(binomial_c(&params, k, m))?;
            let d = cell(binomial_d(&params, k, m))?;
            text.push(format!("C({k},{m}) = {c}"));
            text.push(format!("D({k},{m}) = {d}"));
            rows.push(json!({ "k": k, "m": m, "C": c, "D": d }));
        }
    }
    Ok(Output::ok(text, json!({ "a": params.a.render(), "b": params.b.render(), "cells": rows })))
}
