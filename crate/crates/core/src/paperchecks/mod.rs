//! Machine checks of the computations behind the degree-9 nonrealization
//! argument: exact coefficient identities, Jacobian determinants,
//! resultant factorizations, printed root digits, randomized sign-chain
//! properties and sign data for plotting the curve pictures.
//!
//! Every check returns a [`CheckResult`] listing its assertions. Randomized
//! checks draw from a generator seeded by the global seed and the check
//! name, so a run is reproducible and checks can run in any order.

mod chains;
mod digits;
mod elimination;
mod families;
mod figure;
mod identities;
mod resultants;

pub use chains::check_sign_chains;
pub use digits::{check_root_digits, digit_claims, DigitClaim};
pub use elimination::check_lemma11;
pub use families::{a4_star, a5_star, h_star};
pub use figure::{emit_figure_data, Region};
pub use identities::{check_case_formulas, check_identity_lemma10, check_jacobians};
pub use resultants::check_resultants;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::polycore::rational::format_rational;
use crate::polycore::{Poly, Rational};
use crate::realize::search::fnv1a;

/// How far a computed value may be from the expected one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tolerance {
    Exact,
    /// Absolute distance, as an exact rational.
    Abs(Rational),
}

impl Serialize for Tolerance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Tolerance::Exact => s.serialize_str("exact"),
            Tolerance::Abs(q) => s.serialize_str(&format_rational(q)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Assertion {
    pub label: String,
    pub expected: String,
    pub computed: String,
    pub tolerance: Tolerance,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub assertions: Vec<Assertion>,
    /// Sample counts, degree bounds, conventions and similar audit data.
    pub notes: Vec<String>,
}

impl CheckResult {
    pub fn new(name: &str) -> Self {
        Self { name: name.to_string(), assertions: Vec::new(), notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.passed)
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Assertion> {
        self.assertions.iter().filter(|a| !a.passed)
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn push(&mut self, a: Assertion) -> bool {
        let ok = a.passed;
        self.assertions.push(a);
        ok
    }

    /// Exact equality of two rationals.
    pub fn exact(&mut self, label: impl Into<String>, expected: &Rational, computed: &Rational) -> bool {
        let passed = expected == computed;
        let note = (!passed).then(|| ratio_note(expected, computed)).flatten();
        self.push(Assertion {
            label: label.into(),
            expected: format_rational(expected),
            computed: format_rational(computed),
            tolerance: Tolerance::Exact,
            passed,
            note,
        })
    }

    /// Exact equality of two polynomials.
    pub fn exact_poly(&mut self, label: impl Into<String>, expected: &Poly, computed: &Poly) -> bool {
        let passed = expected == computed;
        self.push(Assertion {
            label: label.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            tolerance: Tolerance::Exact,
            passed,
            note: None,
        })
    }

    /// A yes/no property; `computed` describes what was seen.
    pub fn holds(&mut self, label: impl Into<String>, passed: bool, expected: &str, computed: impl Into<String>) -> bool {
        self.push(Assertion {
            label: label.into(),
            expected: expected.to_string(),
            computed: computed.into(),
            tolerance: Tolerance::Exact,
            passed,
            note: None,
        })
    }
}

fn ratio_note(expected: &Rational, computed: &Rational) -> Option<String> {
    use num_traits::Zero;
    (!expected.is_zero()).then(|| format!("computed/expected = {}", format_rational(&(computed / expected))))
}

/// Generator for one check, derived from the global seed and its name.
pub(crate) fn check_rng(seed: u64, name: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(fnv1a(format!("{seed}:{name}").as_bytes()))
}

/// A positive rational with small numerator and denominator.
pub(crate) fn positive(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(1..=40i64).into(), rng.gen_range(1..=12i64).into())
}

/// A nonzero rational of either sign.
pub(crate) fn nonzero(rng: &mut ChaCha8Rng) -> Rational {
    let q = positive(rng);
    if rng.gen() {
        q
    } else {
        -q
    }
}

/// Settings shared by all checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckConfig {
    pub seed: u64,
    /// Sample points for exact identity checks.
    pub points: usize,
    /// Samples for randomized property checks.
    pub samples: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self { seed: 0, points: 200, samples: 500 }
    }
}

/// Names accepted by [`run_check`], in manifest order.
pub const CHECK_NAMES: &[&str] = &[
    "check_identity_lemma10",
    "check_jacobians",
    "check_case_formulas",
    "check_resultants",
    "check_root_digits",
    "check_sign_chains",
    "check_lemma11",
];

/// Runs one named check; `None` for an unknown name.
pub fn run_check(name: &str, cfg: &CheckConfig) -> Option<CheckResult> {
    Some(match name {
        "check_identity_lemma10" => check_identity_lemma10(cfg.seed, cfg.points),
        "check_jacobians" => check_jacobians(cfg.seed, cfg.points),
        "check_case_formulas" => check_case_formulas(cfg.seed, cfg.points),
        "check_resultants" => check_resultants(),
        "check_root_digits" => check_root_digits(),
        "check_sign_chains" => check_sign_chains(cfg.seed, cfg.samples),
        "check_lemma11" => check_lemma11(),
        _ => return None,
    })
}

/// Runs the named checks in parallel; results keep the input order and a
/// failing check never stops the others.
pub fn run_checks(names: &[&str], cfg: &CheckConfig) -> Option<Vec<CheckResult>> {
    names.par_iter().map(|n| run_check(n, cfg)).collect()
}

/// Failures listed per check in the manifest; the rest are counted.
const MANIFEST_FAILURE_LIMIT: usize = 20;

#[derive(Serialize)]
struct ManifestEntry<'a> {
    name: &'a str,
    status: &'static str,
    assertions: usize,
    failures: Vec<&'a Assertion>,
    #[serde(skip_serializing_if = "is_zero")]
    failures_not_listed: usize,
    notes: &'a [String],
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

#[derive(Serialize)]
struct Manifest<'a> {
    #[serde(rename = "generated-at", skip_serializing_if = "Option::is_none")]
    generated_at: Option<&'a str>,
    checks: Vec<ManifestEntry<'a>>,
}

/// Machine-readable summary: `{checks: [{name, status, assertions, failures}]}`.
/// The creation time is written only when given.
pub fn manifest_json(results: &[CheckResult], generated_at: Option<&str>) -> String {
    let checks = results
        .iter()
        .map(|r| {
            let failures: Vec<&Assertion> = r.failures().collect();
            let total = failures.len();
            ManifestEntry {
                name: &r.name,
                status: r.status(),
                assertions: r.assertions.len(),
                failures: failures.into_iter().take(MANIFEST_FAILURE_LIMIT).collect(),
                failures_not_listed: total.saturating_sub(MANIFEST_FAILURE_LIMIT),
                notes: &r.notes,
            }
        })
        .collect();
    serde_json::to_string_pretty(&Manifest { generated_at, checks }).expect("manifest serializes")
}
