//! Document formats and the `report`, `verify` and `fuzz` commands.
//!
//! Every field element crosses the boundary as a string in the literal
//! grammar of its field (`"3/2"` over Q, `"5"` over F_7). The functions here
//! return the text to emit together with the process exit code, so the
//! binary stays a thin argument parser.

pub mod fuzz;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::affine::Point3;
use crate::blinalg::SymmetricForm;
use crate::checks::{CheckResults, Outcome};
use crate::error::Error;
use crate::field::{FieldElement, FieldSpec};
use crate::tetra::{
    analyze, tri_rectangular_checks, verify_geometry, verify_identities, Entry, InvariantReport,
    SkewPairing, Tetrahedron, UndefinedReason,
};

pub use fuzz::{run_fuzz, FuzzConfig};

/// Exit code for success.
pub const EXIT_OK: i32 = 0;
/// Exit code when some identity verdict is a failure.
pub const EXIT_FAILURE: i32 = 1;
/// Exit code for unreadable or invalid input.
pub const EXIT_INVALID: i32 = 2;

pub const FORM_KEYS: [&str; 6] = ["a1", "a2", "a3", "b1", "b2", "b3"];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{path}: {message}")]
    Invalid { path: String, message: String },
    #[error("{0}")]
    Io(String),
}

impl CliError {
    fn at(path: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Invalid { path: path.into(), message: message.into() }
    }

    pub fn exit_code(&self) -> i32 {
        EXIT_INVALID
    }
}

/// Text to write and the exit code to return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub stdout: String,
    /// Extra text for the diagnostic stream, such as a replayable counterexample.
    pub stderr: String,
    pub exit_code: i32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    /// Attach identity verdicts to `report` output.
    pub checks: bool,
    /// Include the three skew quadrances.
    pub skew: bool,
    /// Run the tri-rectangular checks at `A0`.
    pub tri_rectangular: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { checks: false, skew: true, tri_rectangular: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputDocument {
    pub form: SymmetricForm,
    pub points: [Point3; 4],
    pub options: Options,
}

impl InputDocument {
    pub fn new(form: SymmetricForm, points: [Point3; 4], options: Options) -> Self {
        InputDocument { form, points, options }
    }

    pub fn spec(&self) -> FieldSpec {
        self.form.spec()
    }

    pub fn tetrahedron(&self) -> Tetrahedron {
        Tetrahedron::new(self.points.clone(), self.form.clone()).expect("validated on parse")
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let value: Value = serde_json::from_str(text).map_err(|e| CliError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        InputDocument::from_value(&value)
    }

    pub fn from_value(value: &Value) -> Result<Self, CliError> {
        let top = as_object(value, "$")?;
        reject_unknown(top, "$", &["field", "form", "points", "options"])?;

        let field_text = required(top, "$", "field")?
            .as_str()
            .ok_or_else(|| CliError::at("$.field", "expected a string such as \"Q\" or \"F_7\""))?;
        let spec: FieldSpec = field_text.parse().map_err(|e| CliError::at("$.field", format!("{e}")))?;

        let form_obj = as_object(required(top, "$", "form")?, "$.form")?;
        reject_unknown(form_obj, "$.form", &FORM_KEYS)?;
        let mut entries = Vec::with_capacity(6);
        for key in FORM_KEYS {
            let path = format!("$.form.{key}");
            entries.push(literal(required(form_obj, "$.form", key)?, spec, &path)?);
        }
        let entries: [FieldElement; 6] = entries.try_into().expect("six entries");
        let form = SymmetricForm::new(entries).map_err(|e| match e {
            Error::DegenerateForm => CliError::at("$.form", "form is degenerate (det B = 0)"),
            other => CliError::at("$.form", other.to_string()),
        })?;

        let points_val = required(top, "$", "points")?;
        let list = points_val
            .as_array()
            .filter(|a| a.len() == 4)
            .ok_or_else(|| CliError::at("$.points", "expected an array of four points"))?;
        let mut points = Vec::with_capacity(4);
        for (i, p) in list.iter().enumerate() {
            let path = format!("$.points[{i}]");
            let coords = p
                .as_array()
                .filter(|a| a.len() == 3)
                .ok_or_else(|| CliError::at(&path, "expected an array of three coordinates"))?;
            let c: Vec<FieldElement> = coords
                .iter()
                .enumerate()
                .map(|(j, x)| literal(x, spec, &format!("{path}[{j}]")))
                .collect::<Result<_, _>>()?;
            let [x, y, z]: [FieldElement; 3] = c.try_into().expect("three coordinates");
            points.push(Point3::new(x, y, z).expect("one field"));
        }
        let points: [Point3; 4] = points.try_into().expect("four points");

        let mut options = Options::default();
        if let Some(opt) = top.get("options") {
            let obj = as_object(opt, "$.options")?;
            reject_unknown(obj, "$.options", &["checks", "skew", "tri_rectangular"])?;
            let flag = |key: &str, default: bool| -> Result<bool, CliError> {
                match obj.get(key) {
                    None => Ok(default),
                    Some(v) => v
                        .as_bool()
                        .ok_or_else(|| CliError::at(format!("$.options.{key}"), "expected true or false")),
                }
            };
            options = Options {
                checks: flag("checks", options.checks)?,
                skew: flag("skew", options.skew)?,
                tri_rectangular: flag("tri_rectangular", options.tri_rectangular)?,
            };
        }

        Ok(InputDocument { form, points, options })
    }

    pub fn to_value(&self) -> Value {
        let mut form = Map::new();
        for (key, x) in FORM_KEYS.iter().zip(self.form.entries()) {
            form.insert(key.to_string(), Value::String(x.render()));
        }
        let points: Vec<Value> = self
            .points
            .iter()
            .map(|p| Value::Array(p.coords().iter().map(|x| Value::String(x.render())).collect()))
            .collect();
        json!({
            "field": self.spec().to_string(),
            "form": form,
            "points": points,
            "options": {
                "checks": self.options.checks,
                "skew": self.options.skew,
                "tri_rectangular": self.options.tri_rectangular,
            },
        })
    }

    pub fn to_json(&self) -> String {
        pretty(&self.to_value())
    }
}

fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>, CliError> {
    v.as_object().ok_or_else(|| CliError::at(path, "expected an object"))
}

fn required<'a>(obj: &'a Map<String, Value>, path: &str, key: &str) -> Result<&'a Value, CliError> {
    obj.get(key).ok_or_else(|| CliError::at(format!("{path}.{key}"), "missing"))
}

fn reject_unknown(obj: &Map<String, Value>, path: &str, allowed: &[&str]) -> Result<(), CliError> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(CliError::at(format!("{path}.{k}"), "unknown key")),
        None => Ok(()),
    }
}

fn literal(v: &Value, spec: FieldSpec, path: &str) -> Result<FieldElement, CliError> {
    let s = v
        .as_str()
        .ok_or_else(|| CliError::at(path, "expected a string literal such as \"3/2\""))?;
    spec.parse(s).map_err(|e| CliError::at(path, e.to_string()))
}

/// Pretty-printed with a trailing newline.
pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn entry_to_value(e: &Entry) -> Value {
    match e {
        Entry::Defined(x) => Value::String(x.render()),
        Entry::Undefined(why) => json!({ "undefined": why.as_str() }),
    }
}

pub fn entry_from_value(v: &Value, spec: FieldSpec, path: &str) -> Result<Entry, CliError> {
    if let Some(obj) = v.as_object() {
        let reason = obj
            .get("undefined")
            .and_then(Value::as_str)
            .and_then(UndefinedReason::parse)
            .ok_or_else(|| CliError::at(path, "expected {\"undefined\": <reason>}"))?;
        return Ok(Entry::Undefined(reason));
    }
    literal(v, spec, path).map(Entry::Defined)
}

fn is_skew_key(key: &str) -> bool {
    key.strip_prefix('R').is_some_and(|rest| SkewPairing::parse(rest).is_some())
}

pub fn invariants_to_value(report: &InvariantReport, include_skew: bool) -> Value {
    let mut m = Map::new();
    for (key, e) in report.entries() {
        if include_skew || !is_skew_key(&key) {
            m.insert(key, entry_to_value(&e));
        }
    }
    Value::Object(m)
}

/// Reads back the `invariants` map of a `report` document.
pub fn parse_invariants(text: &str) -> Result<(FieldSpec, Vec<(String, Entry)>), CliError> {
    let value: Value = serde_json::from_str(text).map_err(|e| CliError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let top = as_object(&value, "$")?;
    let spec: FieldSpec = required(top, "$", "field")?
        .as_str()
        .ok_or_else(|| CliError::at("$.field", "expected a string"))?
        .parse()
        .map_err(|e| CliError::at("$.field", format!("{e}")))?;
    let inv = as_object(required(top, "$", "invariants")?, "$.invariants")?;
    let entries = inv
        .iter()
        .map(|(k, v)| Ok((k.clone(), entry_from_value(v, spec, &format!("$.invariants.{k}"))?)))
        .collect::<Result<_, CliError>>()?;
    Ok((spec, entries))
}

pub fn verdicts_to_value(results: &CheckResults) -> Value {
    Value::Array(
        results
            .verdicts()
            .iter()
            .map(|v| json!({ "theorem": v.theorem, "instance": v.instance, "outcome": v.outcome.as_str() }))
            .collect(),
    )
}

fn tally(results: &CheckResults) -> Value {
    json!({
        "checked": results.verdicts().len(),
        "passed": results.count(Outcome::Pass),
        "failed": results.count(Outcome::Fail),
        "inapplicable": results.count(Outcome::Inapplicable),
    })
}

fn tri_rect_value(t: &Tetrahedron) -> Result<CheckResults, String> {
    tri_rectangular_checks(t).map_err(|e| match e {
        Error::NotTriRectangular => "NotTriRectangular".to_string(),
        Error::DegenerateParams(why) => format!("DegenerateParams: {why}"),
        other => other.to_string(),
    })
}

/// Every invariant of the input tetrahedron, with identity verdicts when
/// `options.checks` is set and tri-rectangular verdicts when
/// `options.tri_rectangular` is set. Always exits 0.
pub fn run_report(doc: &InputDocument) -> CommandOutput {
    let t = doc.tetrahedron();
    let report = analyze(&t);
    let mut out = Map::new();
    out.insert("input".into(), doc.to_value());
    out.insert("field".into(), Value::String(doc.spec().to_string()));
    out.insert("invariants".into(), invariants_to_value(&report, doc.options.skew));
    if doc.options.checks {
        out.insert("checks".into(), verdicts_to_value(&verify_identities(&report)));
    }
    if doc.options.tri_rectangular {
        let v = match tri_rect_value(&t) {
            Ok(r) => verdicts_to_value(&r),
            Err(why) => json!({ "error": why }),
        };
        out.insert("tri_rectangular".into(), v);
    }
    CommandOutput { stdout: pretty(&Value::Object(out)), stderr: String::new(), exit_code: EXIT_OK }
}

/// Adds one to a defined entry, or defines an undefined one as 1.
pub fn corrupt_entry(report: &mut InvariantReport, key: &str) -> Result<(), CliError> {
    let one = report.spec().one();
    let bumped = match report.get(key) {
        Some(Entry::Defined(x)) => Entry::Defined(x + one),
        Some(Entry::Undefined(_)) => Entry::Defined(one),
        None => return Err(CliError::at("--debug-corrupt", format!("unknown entry {key:?}"))),
    };
    report.set(key, bumped).map_err(|e| CliError::at("--debug-corrupt", e))
}

/// Parameters `(λ, μ)` used by `verify` for skew point independence.
pub fn verify_skew_params(spec: FieldSpec) -> Vec<(FieldElement, FieldElement)> {
    vec![(spec.int(2), spec.int(-3)), (spec.int(5), spec.int(7))]
}

/// All verdicts for one document: identities among report entries, the
/// geometric factorizations, and the tri-rectangular checks when requested.
/// `corrupt` names a report entry to perturb before the identity checks.
pub fn collect_verdicts(doc: &InputDocument, corrupt: Option<&str>) -> Result<CheckResults, CliError> {
    let t = doc.tetrahedron();
    let spec = doc.spec();
    let mut report = analyze(&t);
    if let Some(key) = corrupt {
        corrupt_entry(&mut report, key)?;
    }
    let mut results = verify_identities(&report);
    results.extend(verify_geometry(&t, &verify_skew_params(spec)));
    if doc.options.tri_rectangular {
        let tri = tri_rect_value(&t).map_err(|why| CliError::at("$.options.tri_rectangular", why))?;
        results.extend(tri);
    }
    Ok(results)
}

/// Exit 0 iff no verdict fails, 1 otherwise.
pub fn run_verify(doc: &InputDocument, corrupt: Option<&str>) -> Result<CommandOutput, CliError> {
    let results = collect_verdicts(doc, corrupt)?;
    let out = json!({
        "field": doc.spec().to_string(),
        "summary": tally(&results),
        "verdicts": verdicts_to_value(&results),
    });
    let exit_code = if results.has_failure() { EXIT_FAILURE } else { EXIT_OK };
    Ok(CommandOutput { stdout: pretty(&out), stderr: String::new(), exit_code })
}

#[cfg(test)]
mod tests {
    use super::*;

    const UNIT: &str = r#"{
        "field": "Q",
        "form": {"a1": "1", "a2": "1", "a3": "1", "b1": "0", "b2": "0", "b3": "0"},
        "points": [["0","0","0"], ["1","0","0"], ["0","1","0"], ["0","0","1"]]
    }"#;

    fn invalid_path(text: &str) -> String {
        match InputDocument::parse(text).unwrap_err() {
            CliError::Invalid { path, .. } => path,
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parses_unit_document() {
        let doc = InputDocument::parse(UNIT).unwrap();
        assert_eq!(doc.spec(), FieldSpec::rational());
        assert_eq!(doc.options, Options::default());
        let again = InputDocument::parse(&doc.to_json()).unwrap();
        assert_eq!(again, doc);
    }

    #[test]
    fn diagnostics_name_the_field() {
        assert_eq!(invalid_path(&UNIT.replace(r#""a2": "1""#, r#""a2": "x""#)), "$.form.a2");
        assert_eq!(invalid_path(&UNIT.replace(r#"["0","0","1"]"#, r#"["0","0"]"#)), "$.points[3]");
        assert_eq!(invalid_path(&UNIT.replace(r#""1","0","0"]"#, r#"1,"0","0"]"#)), "$.points[1][0]");
        assert_eq!(invalid_path(&UNIT.replace(r#""Q""#, r#""F_9""#)), "$.field");
        assert_eq!(invalid_path(&UNIT.replace(r#""a1": "1""#, r#""a1": "0""#)), "$.form");
        assert_eq!(invalid_path(&UNIT.replace(r#""field""#, r#""extra": 1, "field""#)), "$.extra");
        assert!(matches!(InputDocument::parse("{ \"field\": "), Err(CliError::Syntax { line: 1, .. })));
    }

    #[test]
    fn report_contains_desk_values() {
        let out = run_report(&InputDocument::parse(UNIT).unwrap());
        assert_eq!(out.exit_code, 0);
        assert!(out.stdout.contains(r#""V": "4""#));
        assert!(out.stdout.contains(r#""R": "1/3""#));
        assert!(out.stdout.contains(r#""R01;23": "1/2""#));
    }

    #[test]
    fn verify_unit_and_corrupted() {
        let doc = InputDocument::parse(UNIT).unwrap();
        assert_eq!(run_verify(&doc, None).unwrap().exit_code, 0);
        assert_eq!(run_verify(&doc, Some("E12")).unwrap().exit_code, 1);
        assert!(run_verify(&doc, Some("nope")).is_err());
    }
}
