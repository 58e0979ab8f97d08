//! Catalogs of every couple of one degree, with realizability status.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::dataset::known_nonrealizable;
use super::recipes::Realizer;
use super::search::SearchConfig;
use super::{RealizeError, Trace, Witness};
use crate::polycore::Poly;
use crate::signs::{admissible_pairs, Action, Couple, SignPattern};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Realized(Witness),
    NonrealizableProved { citation: String },
    NonrealizableCited { citation: String },
    Unknown { budget: u64 },
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Realized(_) => "realized",
            Status::NonrealizableProved { .. } => "nonrealizable_proved",
            Status::NonrealizableCited { .. } => "nonrealizable_cited",
            Status::Unknown { .. } => "unknown",
        }
    }

    pub fn is_realized(&self) -> bool {
        matches!(self, Status::Realized(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub couple: Couple,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    pub degree: usize,
    pub seed: u64,
    /// Creation time; left out of deterministic output.
    pub generated_at: Option<String>,
    pub entries: Vec<CatalogEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct EntryJson {
    pattern: String,
    pos: usize,
    neg: usize,
    status: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    witness: Option<Poly>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    trace: Option<Trace>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    citation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    budget: Option<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct CatalogJson {
    degree: usize,
    seed: u64,
    #[serde(rename = "generated-at", skip_serializing_if = "Option::is_none", default)]
    generated_at: Option<String>,
    entries: Vec<EntryJson>,
}

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("malformed catalog: {0}")]
    Json(#[from] serde_json::Error),
    #[error("entry {index}: {source}")]
    Entry { index: usize, source: RealizeError },
    #[error("entry {index}: unknown status {status:?}")]
    Status { index: usize, status: String },
}

impl Catalog {
    /// Number of entries per status label.
    pub fn summary(&self) -> BTreeMap<&'static str, usize> {
        let mut out = BTreeMap::new();
        for e in &self.entries {
            *out.entry(e.status.label()).or_insert(0) += 1;
        }
        out
    }

    pub fn to_json(&self) -> String {
        let entries = self
            .entries
            .iter()
            .map(|e| {
                let mut j = EntryJson {
                    pattern: e.couple.pattern().to_string(),
                    pos: e.couple.pair().pos,
                    neg: e.couple.pair().neg,
                    status: e.status.label().to_string(),
                    witness: None,
                    trace: None,
                    citation: None,
                    budget: None,
                };
                match &e.status {
                    Status::Realized(w) => {
                        j.witness = Some(w.poly().clone());
                        j.trace = Some(w.trace().clone());
                    }
                    Status::NonrealizableProved { citation } | Status::NonrealizableCited { citation } => {
                        j.citation = Some(citation.clone())
                    }
                    Status::Unknown { budget } => j.budget = Some(*budget),
                }
                j
            })
            .collect();
        let doc = CatalogJson { degree: self.degree, seed: self.seed, generated_at: self.generated_at.clone(), entries };
        serde_json::to_string_pretty(&doc).expect("catalog serializes")
    }

    /// Parses a catalog, re-verifying every realized entry.
    pub fn from_json(text: &str) -> Result<Catalog, CatalogError> {
        let doc: CatalogJson = serde_json::from_str(text)?;
        let mut entries = Vec::with_capacity(doc.entries.len());
        for (index, e) in doc.entries.into_iter().enumerate() {
            let wrap = |source: RealizeError| CatalogError::Entry { index, source };
            let couple = Couple::parse(&e.pattern, e.pos, e.neg).map_err(|s| wrap(s.into()))?;
            let status = match e.status.as_str() {
                "realized" => {
                    let poly = e.witness.ok_or_else(|| wrap(RealizeError::ReplayMismatch))?;
                    let trace = e.trace.ok_or_else(|| wrap(RealizeError::ReplayMismatch))?;
                    Status::Realized(Witness::from_parts(poly, couple.clone(), trace).map_err(wrap)?)
                }
                "nonrealizable_proved" => Status::NonrealizableProved { citation: e.citation.unwrap_or_default() },
                "nonrealizable_cited" => Status::NonrealizableCited { citation: e.citation.unwrap_or_default() },
                "unknown" => Status::Unknown { budget: e.budget.unwrap_or_default() },
                other => return Err(CatalogError::Status { index, status: other.to_string() }),
            };
            entries.push(CatalogEntry { couple, status });
        }
        Ok(Catalog { degree: doc.degree, seed: doc.seed, generated_at: doc.generated_at, entries })
    }
}

/// Every couple of degree `d`, realized or classified.
///
/// Work is done once per orbit, on its least member, and carried to the
/// other members by the action. Couples that resist realization are marked
/// with their citation when known, else as unknown.
pub fn build_catalog(d: usize, cfg: &SearchConfig) -> Catalog {
    build_catalog_with(d, &Realizer::new(cfg.clone()))
}

pub fn build_catalog_with(d: usize, realizer: &Realizer) -> Catalog {
    assert!((1..=9).contains(&d), "catalog degree must be between 1 and 9");
    let couples: Vec<Couple> = SignPattern::all(d)
        .flat_map(|s| admissible_pairs(&s).into_iter().map(move |p| Couple::new(s.clone(), p).expect("admissible")))
        .collect();
    let mut reps: Vec<Couple> = couples.iter().map(Couple::canonical).collect();
    reps.sort();
    reps.dedup();

    let known: Vec<(Couple, String, bool)> = known_nonrealizable(d)
        .into_iter()
        .map(|k| (k.couple.canonical(), k.citation.to_string(), k.proved))
        .collect();
    let budget = realizer.config().budget;
    let settled: BTreeMap<Couple, Status> = reps
        .par_iter()
        .map(|rep| {
            let status = match realizer.realize(rep) {
                Some(w) => Status::Realized(w),
                None => match known.iter().find(|(c, _, _)| c == rep) {
                    Some((_, citation, true)) => Status::NonrealizableProved { citation: citation.clone() },
                    Some((_, citation, false)) => Status::NonrealizableCited { citation: citation.clone() },
                    None => Status::Unknown { budget },
                },
            };
            (rep.clone(), status)
        })
        .collect();

    let entries = couples
        .into_iter()
        .map(|couple| {
            let rep = couple.canonical();
            let status = match &settled[&rep] {
                Status::Realized(w) => {
                    let g = Action::ALL.into_iter().find(|&g| rep.act(g) == couple).expect("couple lies in its orbit");
                    Status::Realized(w.act(g))
                }
                other => other.clone(),
            };
            CatalogEntry { couple, status }
        })
        .collect();
    Catalog { degree: d, seed: realizer.config().seed, generated_at: None, entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signs::realizes;

    #[test]
    fn degree_three_is_fully_realized_and_reloads() {
        let cat = build_catalog(3, &SearchConfig::default().with_budget(1_000));
        assert_eq!(cat.entries.len(), 16);
        assert!(cat.entries.iter().all(|e| e.status.is_realized()));
        let back = Catalog::from_json(&cat.to_json()).unwrap();
        assert_eq!(back, cat);
        for e in &back.entries {
            let Status::Realized(w) = &e.status else { unreachable!() };
            assert!(realizes(w.poly(), &e.couple));
        }
    }

    #[test]
    fn tampered_witness_is_rejected_on_reload() {
        let cat = build_catalog(1, &SearchConfig::default());
        let text = cat.to_json().replacen("\"-1\"", "\"-3\"", 1);
        assert!(Catalog::from_json(&text).is_err());
    }
}
