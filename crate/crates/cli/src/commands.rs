//! The subcommands, each rendering its result in every format it supports.

use std::fmt;
use std::io;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use descartes_core::paperchecks::{emit_figure_data, manifest_json, run_checks, CheckConfig, Region, CHECK_NAMES};
use descartes_core::polycore::rational::format_rational;
use descartes_core::polycore::{Poly, Rational};
use descartes_core::realize::{build_catalog_with, known_nonrealizable, Realizer, SearchConfig, Status, Witness};
use descartes_core::rootcount::{RootReport, RootSign};
use descartes_core::signs::{admissible_pairs, check_realization, descartes_pair, AdmissiblePair, Couple, SignError, SignPattern, Verdict};
use serde_json::{json, Value};

use crate::{Format, Options};

pub const SUCCESS: u8 = 0;
pub const FAILED: u8 = 1;
pub const USAGE: u8 = 2;
pub const UNKNOWN: u8 = 3;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String, io::Error),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => USAGE,
            CliError::Io(..) => FAILED,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Io(path, e) => write!(f, "{path}: {e}"),
        }
    }
}

impl From<SignError> for CliError {
    fn from(e: SignError) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// A command's result in the formats it supports, plus an optional summary
/// shown beside the main output.
#[derive(Debug, Default)]
pub struct Outcome {
    json: Option<String>,
    text: Option<String>,
    csv: Option<String>,
    default: Option<Format>,
    summary: Option<String>,
    code: u8,
}

impl Outcome {
    fn new(json: &Value, text: String, code: u8) -> Self {
        let json = serde_json::to_string_pretty(json).expect("json value serializes");
        Self { json: Some(json), text: Some(text), default: Some(Format::Text), code, ..Self::default() }
    }

    /// Writes the chosen format to `out` or standard output, and returns the
    /// exit code. The summary goes to standard error when the main output
    /// takes standard output.
    pub fn emit(self, format: Option<Format>, out: Option<&Path>) -> Result<u8, CliError> {
        let format = format.or(self.default).unwrap_or(Format::Text);
        let body = match format {
            Format::Json => self.json,
            Format::Text => self.text,
            Format::Csv => self.csv,
        };
        let name = match format {
            Format::Json => "json",
            Format::Text => "text",
            Format::Csv => "csv",
        };
        let mut body = body.ok_or_else(|| CliError::Usage(format!("this command has no {name} output")))?;
        if !body.ends_with('\n') {
            body.push('\n');
        }
        match out {
            Some(path) => {
                std::fs::write(path, body).map_err(|e| CliError::Io(path.display().to_string(), e))?;
                if let Some(s) = &self.summary {
                    println!("{s}");
                }
            }
            None => {
                print!("{body}");
                if let Some(s) = &self.summary {
                    eprintln!("{s}");
                }
            }
        }
        Ok(self.code)
    }
}

fn couple_json(c: &Couple) -> Value {
    json!({ "pattern": c.pattern().to_string(), "pos": c.pair().pos, "neg": c.pair().neg })
}

fn coefficients_text(p: &Poly) -> String {
    p.to_leading_texts().join(",")
}

fn report_text(r: &RootReport) -> String {
    let mut lines = vec![format!(
        "roots: {} positive, {} negative, {} zero, {} complex pairs",
        r.pos_mult, r.neg_mult, r.zero_mult, r.complex_pairs
    )];
    for root in &r.roots {
        let side = match root.sign {
            RootSign::Negative => "negative",
            RootSign::Zero => "zero",
            RootSign::Positive => "positive",
        };
        lines.push(format!(
            "  {side} root in [{}, {}], multiplicity {}",
            format_rational(&root.interval.lo),
            format_rational(&root.interval.hi),
            root.multiplicity
        ));
    }
    lines.join("\n")
}

fn search_config(opts: &Options) -> SearchConfig {
    SearchConfig { seed: opts.seed, budget: opts.budget, radius: opts.radius.clone(), ..SearchConfig::default() }
}

fn generated_at(opts: &Options) -> Option<String> {
    if opts.deterministic {
        return None;
    }
    let secs = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
    Some(format!("unix:{secs}"))
}

fn couple(pattern: SignPattern, pos: usize, neg: usize) -> Result<Couple, CliError> {
    Ok(Couple::new(pattern, AdmissiblePair::new(pos, neg))?)
}

pub fn pairs(pattern: &SignPattern) -> Outcome {
    let dp = descartes_pair(pattern);
    let pairs: Vec<AdmissiblePair> = admissible_pairs(pattern).into_iter().collect();
    let json = json!({
        "pattern": pattern.to_string(),
        "c": dp.c,
        "p": dp.p,
        "admissible": pairs.iter().map(|a| [a.pos, a.neg]).collect::<Vec<_>>(),
    });
    let listed: Vec<String> = pairs.iter().map(ToString::to_string).collect();
    let text = format!(
        "pattern {pattern}\nDescartes pair (c, p) = ({}, {})\n{} admissible pairs (pos, neg): {}",
        dp.c,
        dp.p,
        pairs.len(),
        listed.join(" ")
    );
    Outcome::new(&json, text, SUCCESS)
}

pub fn orbit(pattern: SignPattern, pos: usize, neg: usize) -> Result<Outcome, CliError> {
    let cp = couple(pattern, pos, neg)?;
    let members: Vec<(Couple, String)> = descartes_core::signs::orbit(&cp).into_iter().map(|(c, g)| (c, g.to_string())).collect();
    let json = json!({
        "couple": couple_json(&cp),
        "members": members
            .iter()
            .map(|(c, g)| json!({ "pattern": c.pattern().to_string(), "pos": c.pair().pos, "neg": c.pair().neg, "action": g }))
            .collect::<Vec<_>>(),
    });
    let mut lines = vec![format!("orbit of {cp}: {} members", members.len())];
    lines.extend(members.iter().map(|(c, g)| format!("  {c}  by {g}")));
    Ok(Outcome::new(&json, lines.join("\n"), SUCCESS))
}

fn witness_outcome(w: &Witness) -> Outcome {
    let poly = w.poly();
    let json = json!({
        "couple": couple_json(w.couple()),
        "status": "realized",
        "polynomial": poly.to_string(),
        "coefficients": poly.to_leading_texts(),
        "report": w.report(),
        "trace": w.trace(),
    });
    let trace = serde_json::to_string(w.trace()).expect("trace serializes");
    let text = format!(
        "{}: realized\npolynomial {poly}\ncoefficients (leading first) {}\n{}\ntrace {trace}",
        w.couple(),
        coefficients_text(poly),
        report_text(w.report())
    );
    Outcome::new(&json, text, SUCCESS)
}

pub fn realize(pattern: SignPattern, pos: usize, neg: usize, opts: &Options) -> Result<Outcome, CliError> {
    let cp = couple(pattern, pos, neg)?;
    let cfg = search_config(opts);
    if let Some(w) = Realizer::new(cfg.clone()).realize(&cp) {
        return Ok(witness_outcome(&w));
    }
    let canonical = cp.canonical();
    let citation = known_nonrealizable(cp.degree()).into_iter().find(|k| k.couple.canonical() == canonical).map(|k| k.citation);
    let json = json!({
        "couple": couple_json(&cp),
        "status": "unknown",
        "budget": cfg.budget,
        "seed": cfg.seed,
        "radius": format_rational(&cfg.radius),
        "known_nonrealizable": citation,
    });
    let mut text = format!(
        "{cp}: unknown\nno witness within a search budget of {} (seed {}, radius {})",
        cfg.budget,
        cfg.seed,
        format_rational(&cfg.radius)
    );
    if let Some(c) = citation {
        text.push_str(&format!("\nknown nonrealizable: {c}"));
    }
    Ok(Outcome::new(&json, text, UNKNOWN))
}

/// Coefficients, leading first, from plain text, a JSON array, or a JSON
/// object with a `coefficients` array.
pub fn parse_coefficients(text: &str) -> Result<Poly, CliError> {
    let trimmed = text.trim();
    let texts: Vec<String> = if trimmed.starts_with('[') || trimmed.starts_with('{') {
        let v: Value = serde_json::from_str(trimmed).map_err(|e| CliError::Usage(format!("coefficients: {e}")))?;
        let list = if v.is_object() { v.get("coefficients").cloned().unwrap_or(Value::Null) } else { v };
        let Value::Array(items) = list else {
            return Err(CliError::Usage("coefficients: expected an array".to_string()));
        };
        items
            .into_iter()
            .map(|item| match item {
                Value::String(s) => Ok(s),
                Value::Number(n) => Ok(n.to_string()),
                other => Err(CliError::Usage(format!("coefficients: unexpected {other}"))),
            })
            .collect::<Result<_, _>>()?
    } else {
        trimmed.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).map(str::to_string).collect()
    };
    if texts.is_empty() {
        return Err(CliError::Usage("no coefficients given".to_string()));
    }
    Poly::from_leading_texts(&texts).map_err(|e| CliError::Usage(format!("coefficients: {e}")))
}

pub fn verify(pattern: SignPattern, pos: usize, neg: usize, coefficients: &str) -> Result<Outcome, CliError> {
    let cp = couple(pattern, pos, neg)?;
    let poly = parse_coefficients(coefficients)?;
    let (verdict, report) = check_realization(&poly, &cp);
    let passed = verdict.is_realized();
    let zero_index = match &verdict {
        Verdict::BadPattern(SignError::ZeroCoefficient(k)) => Some(*k),
        _ => None,
    };
    let json = json!({
        "couple": couple_json(&cp),
        "polynomial": poly.to_string(),
        "coefficients": poly.to_leading_texts(),
        "passed": passed,
        "verdict": verdict.to_string(),
        "zero_coefficient": zero_index,
        "report": report,
    });
    let mut text = format!("{cp}: {}\npolynomial {poly}\nverdict {verdict}", if passed { "pass" } else { "fail" });
    if let Some(k) = zero_index {
        text.push_str(&format!("\nZeroCoefficient at index {k} (coefficient of x^{k})"));
    }
    if let Some(r) = &report {
        text.push('\n');
        text.push_str(&report_text(r));
    }
    Ok(Outcome::new(&json, text, if passed { SUCCESS } else { FAILED }))
}

pub fn catalog(degree: usize, opts: &Options) -> Outcome {
    let mut cat = build_catalog_with(degree, &Realizer::new(search_config(opts)));
    cat.generated_at = generated_at(opts);
    let counts = cat.summary();
    let summary = format!(
        "degree {degree}: {} couples; {}",
        cat.entries.len(),
        counts.iter().map(|(k, v)| format!("{k} {v}")).collect::<Vec<_>>().join(", ")
    );
    let mut lines = Vec::with_capacity(cat.entries.len());
    for e in &cat.entries {
        let detail = match &e.status {
            Status::Realized(w) => coefficients_text(w.poly()),
            Status::NonrealizableProved { citation } | Status::NonrealizableCited { citation } => citation.clone(),
            Status::Unknown { budget } => format!("budget {budget}"),
        };
        lines.push(format!("{} {} {} {} {detail}", e.couple.pattern(), e.couple.pair().pos, e.couple.pair().neg, e.status.label()));
    }
    let code = if cat.entries.iter().any(|e| matches!(e.status, Status::Unknown { .. })) { UNKNOWN } else { SUCCESS };
    Outcome {
        json: Some(cat.to_json()),
        text: Some(lines.join("\n")),
        default: Some(Format::Json),
        summary: Some(summary),
        code,
        ..Outcome::default()
    }
}

pub fn paper_verify(check: &str, opts: &Options) -> Result<Outcome, CliError> {
    let names: Vec<&str> = if check == "all" {
        CHECK_NAMES.to_vec()
    } else if CHECK_NAMES.contains(&check) {
        vec![check]
    } else {
        return Err(CliError::Usage(format!("unknown check {check:?}; known: all, {}", CHECK_NAMES.join(", "))));
    };
    let cfg = CheckConfig { seed: opts.seed, points: opts.points as usize, ..CheckConfig::default() };
    let results = run_checks(&names, &cfg).expect("names are known");
    let passed = results.iter().filter(|r| r.passed()).count();
    let mut lines = Vec::new();
    for r in &results {
        lines.push(format!("{} {} ({} assertions)", r.name, r.status(), r.assertions.len()));
        for f in r.failures().take(5) {
            lines.push(format!("  {}: expected {}, computed {}", f.label, f.expected, f.computed));
        }
    }
    Ok(Outcome {
        json: Some(manifest_json(&results, generated_at(opts).as_deref())),
        text: Some(lines.join("\n")),
        default: Some(Format::Json),
        summary: Some(format!("{passed} of {} checks pass", results.len())),
        code: if passed == results.len() { SUCCESS } else { FAILED },
        ..Outcome::default()
    })
}

pub fn figure_data(t_min: Rational, t_max: Rational, w_min: Rational, w_max: Rational, nt: usize, nw: usize) -> Result<Outcome, CliError> {
    let region = Region { t_min, t_max, w_min, w_max };
    let mut buf = Vec::new();
    emit_figure_data(&region, nt, nw, &mut buf).map_err(|e| CliError::Usage(e.to_string()))?;
    let csv = String::from_utf8(buf).expect("csv is utf-8");
    Ok(Outcome { csv: Some(csv), default: Some(Format::Csv), code: SUCCESS, ..Outcome::default() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> SignPattern {
        s.parse().unwrap()
    }

    #[test]
    fn coefficients_in_three_spellings() {
        let expected = Poly::from_leading_ints(&[1, -1, 1]);
        assert_eq!(parse_coefficients("1,-1,1").unwrap(), expected);
        assert_eq!(parse_coefficients(" 1 -1\n1 ").unwrap(), expected);
        assert_eq!(parse_coefficients(r#"["1", -1, "1"]"#).unwrap(), expected);
        assert_eq!(parse_coefficients(r#"{"coefficients": ["1", "-1", "1"]}"#).unwrap(), expected);
        assert!(parse_coefficients("1,x").is_err());
        assert!(parse_coefficients("").is_err());
    }

    #[test]
    fn zero_coefficient_reports_its_power() {
        let out = verify(pat("+-+"), 0, 0, "1,0,1").unwrap();
        assert_eq!(out.code, FAILED);
        assert!(out.text.unwrap().contains("ZeroCoefficient at index 1"));
        assert!(out.json.unwrap().contains("\"zero_coefficient\": 1"));
    }

    #[test]
    fn inadmissible_pair_is_a_usage_error() {
        let err = orbit(pat("+-+"), 1, 0).unwrap_err();
        assert_eq!(err.code(), USAGE);
    }

    #[test]
    fn csv_only_where_offered() {
        let out = pairs(&pat("+-"));
        assert!(matches!(out.emit(Some(Format::Csv), None), Err(CliError::Usage(_))));
    }
}
