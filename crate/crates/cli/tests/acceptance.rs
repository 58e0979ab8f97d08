//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Run with `cargo test -p descartes-cli --test acceptance`.

use std::collections::BTreeSet;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use descartes_core::paperchecks::{
    check_case_formulas, check_identity_lemma10, check_jacobians, check_resultants, check_sign_chains, digit_claims, CheckResult,
};
use descartes_core::polycore::{ComplexPair, Poly, Rational};
use descartes_core::realize::{concatenate, degree9_case_couples, realize_low_degree, Catalog, D9Outcome, Realizer, SearchConfig};
use descartes_core::rootcount::root_report;
use descartes_core::signs::{admissible_pairs, descartes_pair, orbit, realizes, AdmissiblePair, Couple, Sign, SignPattern};
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestRunner};
use serde_json::Value;

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict { passed, detail: detail.into() }
}

fn descartes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_descartes")).args(args).output().expect("binary runs")
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn first_failure(r: &CheckResult) -> String {
    r.failures()
        .next()
        .map(|a| format!("; first failure: {}: expected {}, computed {}", a.label, a.expected, a.computed))
        .unwrap_or_default()
}

fn check_summary(r: &CheckResult, took: Duration) -> String {
    format!("{} assertions, {} failed, {:.2} s{}", r.assertions.len(), r.failures().count(), took.as_secs_f64(), first_failure(r))
}

fn digit_reproduction() -> Verdict {
    let (out, took) = timed(|| descartes(&["paper-verify", "check_root_digits", "--deterministic", "--format", "json"]));
    let v: Value = serde_json::from_slice(&out.stdout).expect("manifest");
    let check = &v["checks"][0];
    let n = check["assertions"].as_u64().unwrap_or(0);
    let printed: BTreeSet<String> = digit_claims().into_iter().flat_map(|c| c.claimed).collect();
    let listed = ["6.7245", "0.368", "2.719", "-10.90", "2.68"].iter().all(|x| printed.contains(*x));
    let ok = out.status.code() == Some(0) && check["status"] == "pass" && n >= 25 && listed && took < Duration::from_secs(30);
    verdict(ok, format!("{n} assertions, sample values listed: {listed}, {:.2} s (limit 30 s)", took.as_secs_f64()))
}

fn exact_factorizations() -> Verdict {
    let (r, took) = timed(check_resultants);
    let needles = ["Δw = 9", "Δt = 9", "2125764", "52488", "2176782336", "170061120", "26244"];
    let found = needles.iter().filter(|n| r.assertions.iter().any(|a| a.label.contains(*n) && a.passed)).count();
    let ok = r.passed() && found == needles.len() && took < Duration::from_secs(10);
    verdict(ok, format!("{found}/7 identities hold exactly; {} (limit 10 s)", check_summary(&r, took)))
}

fn jacobian_forms() -> Verdict {
    let (r, took) = timed(|| check_jacobians(0, 100));
    verdict(r.passed() && took < Duration::from_secs(10), format!("{} (limit 10 s)", check_summary(&r, took)))
}

fn identity_with_signs() -> Verdict {
    let (r, took) = timed(|| check_identity_lemma10(0, 200));
    let count = |prefix: &str| r.assertions.iter().filter(|a| a.label.starts_with(prefix) && a.passed).count();
    let (id, xi, a1) = (count("27·a1 identity"), count("Ξ > 0"), count("a1 < 0"));
    let ok = r.passed() && id == 200 && xi == 200 && a1 == 200;
    verdict(ok, format!("identity {id}/200, Ξ > 0 {xi}/200, a1 < 0 {a1}/200; {}", check_summary(&r, took)))
}

fn case_formulas() -> Verdict {
    let (r, took) = timed(|| check_case_formulas(0, 200));
    verdict(r.passed(), check_summary(&r, took))
}

fn catalog(degree: u8) -> Result<Catalog, String> {
    let out = descartes(&["catalog", &degree.to_string(), "--deterministic"]);
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    Catalog::from_json(&text).map_err(|e| e.to_string())
}

fn unrealized(cat: &Catalog) -> BTreeSet<Couple> {
    cat.entries.iter().filter(|e| !e.status.is_realized()).map(|e| e.couple.clone()).collect()
}

fn low_degree_catalogs() -> Verdict {
    let (cats, took) = timed(|| (1..=3).map(catalog).collect::<Result<Vec<_>, _>>());
    match cats {
        Ok(cats) => {
            let total: usize = cats.iter().map(|c| c.entries.len()).sum();
            let realized = cats.iter().flat_map(|c| &c.entries).filter(|e| e.status.is_realized()).count();
            let ok = realized == total && took < Duration::from_secs(60);
            verdict(ok, format!("{realized}/{total} couples realized and re-verified, {:.2} s (limit 60 s)", took.as_secs_f64()))
        }
        Err(e) => verdict(false, e),
    }
}

fn orbit_of(pattern: &str, pos: usize, neg: usize) -> BTreeSet<Couple> {
    orbit(&Couple::parse(pattern, pos, neg).unwrap()).into_iter().map(|(c, _)| c).collect()
}

fn exceptional_orbits() -> Verdict {
    let (c4, c5) = match (catalog(4), catalog(5)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return verdict(false, e),
    };
    let (u4, u5) = (unrealized(&c4), unrealized(&c5));
    let ok = u4 == orbit_of("++-++", 2, 0) && u5 == orbit_of("++-+--", 3, 0);
    verdict(ok, format!("d=4: {} of {} unrealized; d=5: {} of {} unrealized", u4.len(), c4.entries.len(), u5.len(), c5.entries.len()))
}

fn nonrealization_evidence() -> Verdict {
    let out = descartes(&["realize", "+----++++-", "1", "6", "--budget", "100000", "--format", "json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    let unknown = out.status.code() == Some(3) && v["status"] == "unknown";
    let out = descartes(&["orbit", "+----++++-", "1", "6", "--format", "json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    let members = v["members"].as_array().map_or(0, Vec::len);
    let sigma: SignPattern = "+----++++-".parse().unwrap();
    let dp = descartes_pair(&sigma);
    let admissible = AdmissiblePair::new(1, 6).is_admissible_for(&sigma);
    let ok = unknown && members == 2 && (dp.c, dp.p) == (3, 6) && admissible;
    verdict(ok, format!("search unknown: {unknown}, orbit members {members}, pair ({}, {}), (1, 6) admissible: {admissible}", dp.c, dp.p))
}

fn degree9_recipes() -> Verdict {
    let realizer = Realizer::new(SearchConfig::default());
    let couples = degree9_case_couples();
    let (mut covered, mut bad) = (0, Vec::new());
    for (name, cp) in &couples {
        if let D9Outcome::Witness(w) = realizer.realize_d9(cp) {
            covered += 1;
            if !(w.couple() == cp && realizes(w.poly(), cp)) {
                bad.push(name.clone());
            }
        }
    }
    let ok = covered > 0 && bad.is_empty();
    verdict(ok, format!("{covered}/{} case couples covered, {} witnesses fail", couples.len(), bad.len()))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn positive() -> impl Strategy<Value = Rational> {
    (1i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn couple(max_deg: usize) -> impl Strategy<Value = Couple> {
    (prop::collection::vec(any::<bool>(), 1..=max_deg), any::<prop::sample::Index>()).prop_map(|(tail, i)| {
        let signs = std::iter::once(Sign::Plus).chain(tail.into_iter().map(|b| if b { Sign::Plus } else { Sign::Minus })).collect();
        let s = SignPattern::new(signs).unwrap();
        let pairs: Vec<AdmissiblePair> = admissible_pairs(&s).into_iter().collect();
        let pair = pairs[i.index(pairs.len())];
        Couple::new(s, pair).unwrap()
    })
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config { cases, rng_seed: RngSeed::Fixed(0), failure_persistence: None, ..Config::default() })
}

fn round_trip(cases: u32) -> Result<(), String> {
    let strategy = (
        prop::collection::btree_set(rational(), 0..5),
        prop::collection::vec(1u32..=3, 5),
        prop::collection::vec((rational(), positive()), 0..3),
        positive(),
    );
    runner(cases)
        .run(&strategy, |(roots, mults, pairs, lead)| {
            let real: Vec<(Rational, u32)> = roots.into_iter().zip(mults).collect();
            let pairs: Vec<ComplexPair> = pairs.into_iter().map(|(re, im)| ComplexPair::new(re, im)).collect();
            let p = Poly::from_roots(&real, &pairs, &lead).unwrap();
            if p.is_constant() {
                return Ok(());
            }
            let rep = root_report(&p).unwrap();
            let count = |keep: fn(&Rational) -> bool| real.iter().filter(|(r, _)| keep(r)).map(|(_, m)| m).sum::<u32>();
            prop_assert_eq!((rep.pos_mult, rep.neg_mult, rep.zero_mult), (count(|r| r.is_positive()), count(|r| r.is_negative()), count(Zero::is_zero)));
            prop_assert_eq!(rep.complex_pairs as usize, pairs.len());
            prop_assert_eq!(rep.roots.len(), real.len());
            for (found, (r, m)) in rep.roots.iter().zip(&real) {
                prop_assert_eq!(found.multiplicity, *m);
                prop_assert!(r.is_zero() || found.interval.contains(r));
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn pair_additivity(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&(couple(3), couple(3)), |(a, b)| {
            let w = concatenate(&realize_low_degree(&a).unwrap(), &realize_low_degree(&b).unwrap()).unwrap();
            let (pa, pb) = (a.pair(), b.pair());
            prop_assert_eq!(w.couple().pair(), AdmissiblePair::new(pa.pos + pb.pos, pa.neg + pb.neg));
            prop_assert!(realizes(w.poly(), w.couple()));
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn property_suites() -> Verdict {
    let rt = round_trip(1000);
    let pa = pair_additivity(500);
    let chains = check_sign_chains(0, 500);
    let ok = rt.is_ok() && pa.is_ok() && chains.passed();
    let show = |r: &Result<(), String>| r.as_ref().map_or_else(|e| format!("fail ({e})"), |_| "pass".to_string());
    verdict(
        ok,
        format!(
            "round trip x1000 {}, pair additivity x500 {}, sign chains x500 {} ({} assertions{})",
            show(&rt),
            show(&pa),
            chains.status(),
            chains.assertions.len(),
            first_failure(&chains)
        ),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 10] = [
        ("digit reproduction", digit_reproduction),
        ("exact factorizations", exact_factorizations),
        ("Jacobian closed forms", jacobian_forms),
        ("six-variable identity with Ξ > 0, a1 < 0", identity_with_signs),
        ("case-formula suite", case_formulas),
        ("catalogs of degree 1 to 3 fully realized", low_degree_catalogs),
        ("exceptional orbits in degrees 4 and 5", exceptional_orbits),
        ("degree-9 nonrealization evidence", nonrealization_evidence),
        ("degree-9 recipes", degree9_recipes),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let v = run();
        if !v.passed {
            failed += 1;
        }
        println!("{} {:>2} {name}: {}", if v.passed { "PASS" } else { "FAIL" }, i + 1, v.detail);
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
