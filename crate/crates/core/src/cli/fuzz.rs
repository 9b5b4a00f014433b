//! Randomized identity checking over a prime field.
//!
//! Sample `i` draws from a ChaCha stream keyed by `(seed, i)`, so each
//! sample is a pure function of the configuration and its index. Samples
//! run in parallel and are merged in index order, which keeps the summary
//! byte-identical for any worker count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use super::{corrupt_entry, pretty, CliError, CommandOutput, InputDocument, Options, EXIT_FAILURE, EXIT_OK};
use crate::affine::Point3;
use crate::blinalg::SymmetricForm;
use crate::checks::{CheckResults, Outcome, Verdict};
use crate::field::{FieldElement, FieldSpec};
use crate::tetra::{analyze, verify_geometry, verify_identities, InvariantReport, Tetrahedron};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzConfig {
    pub prime: u64,
    pub samples: u64,
    pub seed: u64,
    /// Resample tetrahedra with zero quadrume.
    pub reject_degenerate: bool,
    /// Draw a random non-degenerate form per sample instead of the identity.
    pub random_form: bool,
    /// Worker threads; `None` uses the rayon default.
    pub workers: Option<usize>,
    /// Report entry to perturb in every sample (negative control).
    pub debug_corrupt: Option<String>,
}

impl FuzzConfig {
    pub fn new(prime: u64, samples: u64, seed: u64) -> Self {
        FuzzConfig {
            prime,
            samples,
            seed,
            reject_degenerate: true,
            random_form: false,
            workers: None,
            debug_corrupt: None,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Tally {
    checked: u64,
    passed: u64,
    failed: u64,
    inapplicable: u64,
}

impl Tally {
    fn add(&mut self, other: &Tally) {
        self.checked += other.checked;
        self.passed += other.passed;
        self.failed += other.failed;
        self.inapplicable += other.inapplicable;
    }

    fn to_value(self) -> Value {
        json!({
            "checked": self.checked,
            "passed": self.passed,
            "failed": self.failed,
            "inapplicable": self.inapplicable,
        })
    }
}

/// Per-theorem tallies in first-seen order.
#[derive(Debug, Clone, Default)]
struct Tallies(Vec<(&'static str, Tally)>);

impl Tallies {
    fn slot(&mut self, theorem: &'static str) -> &mut Tally {
        let pos = match self.0.iter().position(|(t, _)| *t == theorem) {
            Some(p) => p,
            None => {
                self.0.push((theorem, Tally::default()));
                self.0.len() - 1
            }
        };
        &mut self.0[pos].1
    }

    fn record(&mut self, results: &CheckResults) {
        for v in results.verdicts() {
            let t = self.slot(v.theorem);
            t.checked += 1;
            match v.outcome {
                Outcome::Pass => t.passed += 1,
                Outcome::Fail => t.failed += 1,
                Outcome::Inapplicable => t.inapplicable += 1,
            }
        }
    }

    fn merge(&mut self, other: &Tallies) {
        for (theorem, tally) in &other.0 {
            self.slot(theorem).add(tally);
        }
    }
}

#[derive(Debug, Clone)]
struct Failure {
    index: u64,
    verdict: Verdict,
    doc: InputDocument,
    skew_params: Vec<(FieldElement, FieldElement)>,
}

#[derive(Debug, Clone, Default)]
struct SampleSummary {
    tallies: Tallies,
    singular_forms: u64,
    degenerate: u64,
    failure: Option<Failure>,
}

fn element(rng: &mut ChaCha8Rng, spec: FieldSpec, p: u64) -> FieldElement {
    spec.int(rng.gen_range(0..p) as i64)
}

fn random_form(rng: &mut ChaCha8Rng, spec: FieldSpec, p: u64, rejected: &mut u64) -> SymmetricForm {
    loop {
        let entries = std::array::from_fn(|_| element(rng, spec, p));
        match SymmetricForm::new(entries) {
            Ok(b) => return b,
            Err(_) => *rejected += 1,
        }
    }
}

fn random_points(rng: &mut ChaCha8Rng, spec: FieldSpec, p: u64) -> [Point3; 4] {
    std::array::from_fn(|_| {
        let [x, y, z] = std::array::from_fn(|_| element(rng, spec, p));
        Point3::new(x, y, z).expect("one field")
    })
}

fn run_sample(cfg: &FuzzConfig, spec: FieldSpec, index: u64) -> SampleSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index);
    let p = cfg.prime;
    let mut summary = SampleSummary::default();

    let form = if cfg.random_form {
        random_form(&mut rng, spec, p, &mut summary.singular_forms)
    } else {
        SymmetricForm::identity(spec)
    };
    let (t, mut report) = loop {
        let t = Tetrahedron::new(random_points(&mut rng, spec, p), form.clone()).expect("one field");
        let report = analyze(&t);
        if cfg.reject_degenerate && report.quadrume().is_zero() {
            summary.degenerate += 1;
            continue;
        }
        break (t, report);
    };
    let skew_params: Vec<_> = (0..2).map(|_| (element(&mut rng, spec, p), element(&mut rng, spec, p))).collect();

    if let Some(key) = &cfg.debug_corrupt {
        corrupt_entry(&mut report, key).expect("key checked before sampling");
    }
    let mut results = verify_identities(&report);
    results.extend(verify_geometry(&t, &skew_params));
    summary.tallies.record(&results);
    if let Some(v) = results.failures().next() {
        summary.failure = Some(Failure {
            index,
            verdict: v.clone(),
            doc: InputDocument::new(form, t.vertices().clone(), Options::default()),
            skew_params,
        });
    }
    summary
}

fn failure_value(f: &Failure) -> Value {
    let params: Vec<Value> = f
        .skew_params
        .iter()
        .map(|(l, m)| json!([l.render(), m.render()]))
        .collect();
    json!({
        "sample": f.index,
        "theorem": f.verdict.theorem,
        "instance": f.verdict.instance,
        "skew_params": params,
        "input": f.doc.to_value(),
    })
}

/// Runs the identity suite on `cfg.samples` random tetrahedra over F_p.
/// Exits 1 if any verdict fails; the summary then carries the failing
/// sample with the lowest index, and the diagnostic stream carries its
/// input document alone so it can be replayed with `verify`.
pub fn run_fuzz(cfg: &FuzzConfig) -> Result<CommandOutput, CliError> {
    let spec = FieldSpec::prime(cfg.prime).map_err(|e| CliError::at("--prime", e.to_string()))?;
    if cfg.workers == Some(0) {
        return Err(CliError::at("--workers", "must be positive"));
    }
    if let Some(key) = &cfg.debug_corrupt {
        if !InvariantReport::keys().iter().any(|k| k == key) {
            return Err(CliError::at("--debug-corrupt", format!("unknown entry {key:?}")));
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Io(e.to_string()))?;
    let samples: Vec<SampleSummary> =
        pool.install(|| (0..cfg.samples).into_par_iter().map(|i| run_sample(cfg, spec, i)).collect());

    let mut tallies = Tallies::default();
    let (mut singular_forms, mut degenerate) = (0u64, 0u64);
    let mut first_failure = None;
    let mut failed_samples = 0u64;
    for s in &samples {
        tallies.merge(&s.tallies);
        singular_forms += s.singular_forms;
        degenerate += s.degenerate;
        if s.failure.is_some() {
            failed_samples += 1;
            first_failure = first_failure.or(s.failure.as_ref());
        }
    }

    let mut total = Tally::default();
    let mut theorems = Map::new();
    for (name, t) in &tallies.0 {
        total.add(t);
        theorems.insert(name.to_string(), t.to_value());
    }
    let out = json!({
        "config": {
            "field": spec.to_string(),
            "samples": cfg.samples,
            "seed": cfg.seed,
            "reject_degenerate": cfg.reject_degenerate,
            "random_form": cfg.random_form,
        },
        "rejections": { "degenerate": degenerate, "singular_form": singular_forms },
        "theorems": theorems,
        "total": total.to_value(),
        "failed_samples": failed_samples,
        "counterexample": first_failure.map(failure_value),
    });
    let (stderr, exit_code) = match first_failure {
        Some(f) => (f.doc.to_json(), EXIT_FAILURE),
        None => (String::new(), EXIT_OK),
    };
    Ok(CommandOutput { stdout: pretty(&out), stderr, exit_code })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_run() {
        let out = run_fuzz(&FuzzConfig::new(101, 0, 1)).unwrap();
        assert_eq!(out.exit_code, 0);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["theorems"], json!({}));
        assert_eq!(v["total"]["checked"], 0);
    }

    #[test]
    fn rejects_bad_prime() {
        assert!(run_fuzz(&FuzzConfig::new(2, 10, 1)).is_err());
        assert!(run_fuzz(&FuzzConfig::new(15, 10, 1)).is_err());
    }

    #[test]
    fn small_run_passes() {
        let mut cfg = FuzzConfig::new(13, 40, 7);
        cfg.random_form = true;
        let out = run_fuzz(&cfg).unwrap();
        assert_eq!(out.exit_code, 0, "{}", out.stdout);
        assert!(out.stderr.is_empty());
    }

    #[test]
    fn corrupted_run_reports_lowest_failing_sample() {
        let mut cfg = FuzzConfig::new(101, 20, 5);
        cfg.debug_corrupt = Some("R".into());
        let out = run_fuzz(&cfg).unwrap();
        assert_eq!(out.exit_code, 1);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["counterexample"]["sample"], 0);
        let replay = InputDocument::parse(&out.stderr).unwrap();
        assert_eq!(replay.to_value(), v["counterexample"]["input"]);
        cfg.debug_corrupt = Some("nope".into());
        assert!(run_fuzz(&cfg).is_err());
    }

    #[test]
    fn samples_are_index_addressed() {
        let cfg = FuzzConfig::new(31, 5, 99);
        let spec = FieldSpec::prime(31).unwrap();
        let a = run_sample(&cfg, spec, 3);
        let b = run_sample(&cfg, spec, 3);
        assert_eq!(a.tallies.0, b.tallies.0);
        assert_eq!(a.degenerate, b.degenerate);
    }
}
