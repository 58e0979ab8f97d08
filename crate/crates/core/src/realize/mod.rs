//! Constructing realizations: witnesses with replayable traces,
//! concatenation, fixed recipes, randomized search and catalogs.

mod catalog;
mod dataset;
mod recipes;
pub(crate) mod search;

pub use catalog::{build_catalog, build_catalog_with, Catalog, CatalogEntry, CatalogError, Status};
pub use dataset::{case_table, degree9_case_couples, known_nonrealizable, CaseRow, KnownCouple};
pub use recipes::{
    frozen_quintic, no_real_root_quadratic, one_negative_root_cubic, positive_quadratic, realize_low_degree, unit_root,
    D9Outcome, Realizer,
};
pub use search::{realize_search, SearchConfig, SearchOutcome};

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::polycore::rational::{format_rational, pow2, serde_text, serde_text_vec};
use crate::polycore::{ComplexPair, Poly, PolyError, Rational};
use crate::rootcount::RootReport;
use crate::signs::{check_realization, Action, AdmissiblePair, Couple, SignError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RealizeError {
    #[error(transparent)]
    Sign(#[from] SignError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("trace does not replay to the stored polynomial")]
    ReplayMismatch,
    #[error("polynomial does not realize {couple}: {reason}")]
    NotRealized { couple: String, reason: String },
    #[error("no epsilon down to {min_eps} gives the concatenated couple")]
    EpsilonExhausted { min_eps: String },
    #[error("degree {0} is outside the supported range")]
    UnsupportedDegree(usize),
}

/// Where a root placement came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    /// A fixed, hand-checked polynomial.
    Table { name: String },
    /// Found by the bounded dyadic grid for low degrees.
    Dyadic,
    /// Found by randomized search.
    Search { seed: u64, evaluations: u64 },
    /// Found by search once and stored as a constant.
    Frozen { name: String, seed: u64 },
}

/// How a witness polynomial is built. Replaying a trace is exact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Trace {
    /// Monic polynomial with these simple real roots and complex pairs.
    Roots {
        #[serde(with = "serde_text_vec")]
        real: Vec<Rational>,
        pairs: Vec<ComplexPair>,
        origin: Origin,
    },
    /// `ε^{deg right} · left(x) · right(x/ε)`.
    Concat {
        #[serde(with = "serde_text")]
        eps: Rational,
        left: Box<Trace>,
        right: Box<Trace>,
    },
    /// Image of a witness under a group element.
    Act { action: Action, inner: Box<Trace> },
}

impl Trace {
    pub fn replay(&self) -> Result<Poly, RealizeError> {
        Ok(match self {
            Trace::Roots { real, pairs, .. } => {
                let roots: Vec<(Rational, u32)> = real.iter().map(|r| (r.clone(), 1)).collect();
                Poly::from_roots(&roots, pairs, &Rational::one())?
            }
            Trace::Concat { eps, left, right } => &left.replay()? * &right.replay()?.scale_compose(eps)?,
            Trace::Act { action, inner } => action.apply_poly(&inner.replay()?),
        })
    }

    /// Number of concatenation steps.
    pub fn concatenations(&self) -> usize {
        match self {
            Trace::Roots { .. } => 0,
            Trace::Concat { left, right, .. } => 1 + left.concatenations() + right.concatenations(),
            Trace::Act { inner, .. } => inner.concatenations(),
        }
    }
}

/// A polynomial certified to realize a couple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    poly: Poly,
    couple: Couple,
    report: RootReport,
    trace: Trace,
}

impl Witness {
    /// Replays the trace and checks the realization; fails unless both hold.
    pub fn new(couple: Couple, trace: Trace) -> Result<Self, RealizeError> {
        let poly = trace.replay()?;
        Self::verified(poly, couple, trace)
    }

    /// Like [`Witness::new`] but also checks the stored polynomial.
    pub fn from_parts(poly: Poly, couple: Couple, trace: Trace) -> Result<Self, RealizeError> {
        if trace.replay()? != poly {
            return Err(RealizeError::ReplayMismatch);
        }
        Self::verified(poly, couple, trace)
    }

    fn verified(poly: Poly, couple: Couple, trace: Trace) -> Result<Self, RealizeError> {
        match check_realization(&poly, &couple) {
            (v, Some(report)) if v.is_realized() => Ok(Self { poly, couple, report, trace }),
            (v, _) => Err(RealizeError::NotRealized { couple: couple.to_string(), reason: v.to_string() }),
        }
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn couple(&self) -> &Couple {
        &self.couple
    }

    pub fn report(&self) -> &RootReport {
        &self.report
    }

    pub fn trace(&self) -> &Trace {
        &self.trace
    }

    /// The witness for the acted couple.
    pub fn act(&self, g: Action) -> Witness {
        if g == Action::Identity {
            return self.clone();
        }
        let trace = Trace::Act { action: g, inner: Box::new(self.trace.clone()) };
        Witness::new(self.couple.act(g), trace).expect("the group action preserves realizations")
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} realizes {}", self.poly, self.couple)
    }
}

/// Smallest ε tried by [`concatenate`] unless overridden.
pub fn default_eps_floor() -> Rational {
    pow2(-64)
}

/// Glues two witnesses: `ε^{d2}·P1(x)·P2(x/ε)`, halving ε from 1 until the
/// product realizes the concatenated pattern and the summed pair.
pub fn concatenate(w1: &Witness, w2: &Witness) -> Result<Witness, RealizeError> {
    concatenate_with_floor(w1, w2, &default_eps_floor())
}

pub fn concatenate_with_floor(w1: &Witness, w2: &Witness, floor: &Rational) -> Result<Witness, RealizeError> {
    let pattern = w1.couple.pattern().concatenated(w2.couple.pattern());
    let (a, b) = (w1.couple.pair(), w2.couple.pair());
    let couple = Couple::new(pattern, AdmissiblePair::new(a.pos + b.pos, a.neg + b.neg))?;
    let two = Rational::from_integer(2.into());
    let mut eps = Rational::one();
    while &eps >= floor && eps.is_positive() {
        let poly = &w1.poly * &w2.poly.scale_compose(&eps)?;
        if let (v, Some(report)) = check_realization(&poly, &couple) {
            if v.is_realized() {
                let trace = Trace::Concat {
                    eps: eps.clone(),
                    left: Box::new(w1.trace.clone()),
                    right: Box::new(w2.trace.clone()),
                };
                return Ok(Witness { poly, couple, report, trace });
            }
        }
        eps /= &two;
    }
    Err(RealizeError::EpsilonExhausted { min_eps: format_rational(floor) })
}

/// Serializable form of a witness; loading re-verifies everything.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub pattern: String,
    pub pos: usize,
    pub neg: usize,
    pub poly: Poly,
    pub trace: Trace,
}

impl From<&Witness> for WitnessRecord {
    fn from(w: &Witness) -> Self {
        Self {
            pattern: w.couple.pattern().to_string(),
            pos: w.couple.pair().pos,
            neg: w.couple.pair().neg,
            poly: w.poly.clone(),
            trace: w.trace.clone(),
        }
    }
}

impl TryFrom<WitnessRecord> for Witness {
    type Error = RealizeError;
    fn try_from(r: WitnessRecord) -> Result<Self, RealizeError> {
        let couple = Couple::parse(&r.pattern, r.pos, r.neg)?;
        Witness::from_parts(r.poly, couple, r.trace)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rational::{int, rat};
    use crate::signs::realizes;

    fn linear(root: i64, pattern: &str, pos: usize, neg: usize) -> Witness {
        let trace = Trace::Roots { real: vec![int(root)], pairs: vec![], origin: Origin::Dyadic };
        Witness::new(Couple::parse(pattern, pos, neg).unwrap(), trace).unwrap()
    }

    #[test]
    fn concatenation_of_linear_factors() {
        let plus = linear(-1, "++", 0, 1);
        let minus = linear(1, "+-", 1, 0);
        let w = concatenate(&plus, &minus).unwrap();
        assert_eq!(w.couple(), &Couple::parse("++-", 1, 1).unwrap());
        let Trace::Concat { eps, .. } = w.trace() else { panic!("expected a concatenation") };
        assert_eq!(eps, &rat(1, 2));
        assert_eq!(w.poly(), &Poly::from_leading_ints(&[2, 1, -1]).scale(&rat(1, 2)));
    }

    #[test]
    fn concatenation_after_minus_flips_the_tail() {
        let minus = linear(1, "+-", 1, 0);
        let plus = linear(-1, "++", 0, 1);
        let w = concatenate(&minus, &plus).unwrap();
        assert_eq!(w.couple(), &Couple::parse("+--", 1, 1).unwrap());
        assert!(realizes(w.poly(), w.couple()));
    }

    #[test]
    fn witness_rejects_wrong_couple_and_bad_replay() {
        let trace = Trace::Roots { real: vec![int(1)], pairs: vec![], origin: Origin::Dyadic };
        assert!(Witness::new(Couple::parse("++", 0, 1).unwrap(), trace.clone()).is_err());
        let err = Witness::from_parts(Poly::from_leading_ints(&[1, -2]), Couple::parse("+-", 1, 0).unwrap(), trace);
        assert_eq!(err, Err(RealizeError::ReplayMismatch));
    }

    #[test]
    fn tiny_floor_reports_exhaustion() {
        let plus = linear(-1, "++", 0, 1);
        let minus = linear(1, "+-", 1, 0);
        let err = concatenate_with_floor(&plus, &minus, &int(2));
        assert!(matches!(err, Err(RealizeError::EpsilonExhausted { .. })));
    }

    #[test]
    fn record_round_trip_reverifies() {
        let w = concatenate(&linear(-1, "++", 0, 1), &linear(1, "+-", 1, 0)).unwrap();
        let json = serde_json::to_string(&WitnessRecord::from(&w)).unwrap();
        let back: WitnessRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(Witness::try_from(back).unwrap(), w);
    }

    #[test]
    fn acting_on_a_witness() {
        let w = concatenate(&linear(-1, "++", 0, 1), &linear(1, "+-", 1, 0)).unwrap();
        for g in Action::ALL {
            let image = w.act(g);
            assert_eq!(image.couple(), &w.couple().act(g));
        }
    }
}
