//! Fixed small witnesses, the low-degree grid, and recursive realization by
//! peeling known factors off the end of a pattern.

use std::collections::HashMap;
use std::sync::Mutex;

use super::search::{realize_search, SearchConfig, SearchOutcome};
use super::{concatenate, Origin, RealizeError, Trace, Witness};
use crate::polycore::rational::{int, pow2, rat};
use crate::polycore::{ComplexPair, Rational};
use crate::signs::{orbit, AdmissiblePair, Couple, Sign};

fn table(name: &str, couple: (&str, usize, usize), real: Vec<Rational>, pairs: Vec<ComplexPair>) -> Witness {
    let trace = Trace::Roots { real, pairs, origin: Origin::Table { name: name.to_string() } };
    let couple = Couple::parse(couple.0, couple.1, couple.2).expect("table couples are admissible");
    Witness::new(couple, trace).expect("table witnesses are valid")
}

/// `x − 1` when `positive`, else `x + 1`.
pub fn unit_root(positive: bool) -> Witness {
    if positive {
        table("x - 1", ("+-", 1, 0), vec![int(1)], vec![])
    } else {
        table("x + 1", ("++", 0, 1), vec![int(-1)], vec![])
    }
}

/// `x² − x + 1`, pattern `+-+`, no real roots.
pub fn no_real_root_quadratic() -> Witness {
    table("x^2 - x + 1", ("+-+", 0, 0), vec![], vec![ComplexPair::new(rat(1, 2), rat(3, 4))])
}

/// `x² + x + 1`, pattern `+++`, no real roots.
pub fn positive_quadratic() -> Witness {
    table("x^2 + x + 1", ("+++", 0, 0), vec![], vec![ComplexPair::new(rat(-1, 2), rat(3, 4))])
}

/// `(x + 2)((x − 2)² + 1) = x³ − 2x² − 3x + 10`, pattern `+--+`, one
/// negative root.
pub fn one_negative_root_cubic() -> Witness {
    table("x^3 - 2x^2 - 3x + 10", ("+--+", 0, 1), vec![int(-2)], vec![ComplexPair::new(int(2), int(1))])
}

/// Seed under which the quintic below was found.
const FROZEN_QUINTIC_SEED: u64 = 3;

/// Degree-5 witness for `(++---+, (0, 3))`, found once by search and stored.
pub fn frozen_quintic() -> Witness {
    let trace = Trace::Roots {
        real: vec![int(-280), int(-656), int(-704)],
        pairs: vec![ComplexPair::new(int(304), int(625))],
        origin: Origin::Frozen { name: "++---+ (0, 3)".to_string(), seed: FROZEN_QUINTIC_SEED },
    };
    Witness::new(Couple::parse("++---+", 0, 3).expect("admissible"), trace).expect("frozen witness is valid")
}

fn table_witnesses() -> Vec<Witness> {
    vec![unit_root(true), unit_root(false), no_real_root_quadratic(), positive_quadratic(), one_negative_root_cubic()]
}

/// Direct construction for degree at most 3: a table lookup, then a bounded
/// grid of dyadic root magnitudes `2^k`, `|k| ≤ 6`, smallest exponents first.
pub fn realize_low_degree(cp: &Couple) -> Result<Witness, RealizeError> {
    let d = cp.degree();
    if d > 3 {
        return Err(RealizeError::UnsupportedDegree(d));
    }
    if let Some(w) = table_witnesses().into_iter().find(|w| w.couple() == cp) {
        return Ok(w);
    }
    let pair = cp.pair();
    let k = (d - pair.pos - pair.neg) / 2;
    let exps: Vec<i32> = std::iter::once(0).chain((1..=6).flat_map(|e| [e, -e])).collect();
    // Coordinates: positive magnitudes, negative magnitudes, then for each
    // pair (real-part magnitude, imaginary magnitude); pair real parts also
    // take a sign.
    let n = pair.pos + pair.neg + 2 * k;
    let mut candidates: Vec<(i32, Vec<usize>, Vec<bool>)> = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let distinct = |range: std::ops::Range<usize>| idx[range].windows(2).all(|w| w[0] < w[1]);
        if distinct(0..pair.pos) && distinct(pair.pos..pair.pos + pair.neg) {
            let cost: i32 = idx.iter().map(|&i| exps[i].abs()).sum();
            for signs in 0..1u32 << k {
                candidates.push((cost, idx.clone(), (0..k).map(|j| signs >> j & 1 == 1).collect()));
            }
        }
        // Odometer step.
        let mut pos = 0;
        while pos < n {
            idx[pos] += 1;
            if idx[pos] < exps.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
        if pos == n {
            break;
        }
    }
    candidates.sort_by_key(|c| c.0);
    for (_, idx, flips) in candidates {
        let mag = |i: usize| pow2(exps[idx[i]]);
        let mut real: Vec<Rational> = (0..pair.pos).map(mag).collect();
        real.extend((pair.pos..pair.pos + pair.neg).map(|i| -mag(i)));
        let pairs = (0..k)
            .map(|j| {
                let base = pair.pos + pair.neg + 2 * j;
                let re = if flips[j] { -mag(base) } else { mag(base) };
                let im = mag(base + 1);
                ComplexPair::new(re, &im * &im)
            })
            .collect();
        if let Ok(w) = Witness::new(cp.clone(), Trace::Roots { real, pairs, origin: Origin::Dyadic }) {
            return Ok(w);
        }
    }
    Err(RealizeError::NotRealized { couple: cp.to_string(), reason: "dyadic grid exhausted".to_string() })
}

/// Result of the degree-9 recipes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum D9Outcome {
    Witness(Witness),
    NotCovered(String),
}

/// Realizes couples recursively, memoizing every couple it settles.
///
/// Results depend only on the couple and the configuration, so sharing one
/// realizer across threads gives the same answers as running serially.
pub struct Realizer {
    cfg: SearchConfig,
    cache: Mutex<HashMap<Couple, Option<Witness>>>,
}

/// A factor peeled off the end of a pattern, and what it takes away.
struct Peel {
    tail: fn() -> Witness,
    /// Number of signs removed from the pattern.
    len: usize,
}

impl Realizer {
    pub fn new(cfg: SearchConfig) -> Self {
        Self { cfg, cache: Mutex::new(HashMap::new()) }
    }

    pub fn config(&self) -> &SearchConfig {
        &self.cfg
    }

    /// Full routing: low-degree construction, the degree-9 recipes, recursive
    /// peeling, then randomized search.
    pub fn realize(&self, cp: &Couple) -> Option<Witness> {
        if cp.degree() == 9 {
            if let D9Outcome::Witness(w) = self.realize_d9(cp) {
                return Some(w);
            }
        }
        self.realize_prefix(cp)
    }

    /// Low-degree construction, then peeling, then search; memoized.
    pub fn realize_prefix(&self, cp: &Couple) -> Option<Witness> {
        if let Some(hit) = self.cache.lock().expect("cache lock").get(cp) {
            return hit.clone();
        }
        let found = if cp.degree() <= 3 {
            realize_low_degree(cp).ok()
        } else {
            self.by_peeling(cp).or_else(|| match realize_search(cp, &self.cfg) {
                SearchOutcome::Found(w) => Some(w),
                SearchOutcome::Unknown { .. } => None,
            })
        };
        self.cache.lock().expect("cache lock").insert(cp.clone(), found.clone());
        found
    }

    /// Tries `x ± 1`, `x² − x + 1` and `x² + x + 1` as last factor.
    fn by_peeling(&self, cp: &Couple) -> Option<Witness> {
        let peels = [
            Peel { tail: || unit_root(false), len: 1 },
            Peel { tail: || unit_root(true), len: 1 },
            Peel { tail: no_real_root_quadratic, len: 2 },
            Peel { tail: positive_quadratic, len: 2 },
        ];
        peels.iter().find_map(|peel| self.peel(cp, (peel.tail)(), peel.len))
    }

    /// Realizes `cp` as (prefix witness) ⊕ `tail`, when the pattern and pair
    /// decompose that way.
    fn peel(&self, cp: &Couple, tail: Witness, len: usize) -> Option<Witness> {
        let prefix_pattern = cp.pattern().truncated(len).ok()?;
        if &prefix_pattern.concatenated(tail.couple().pattern()) != cp.pattern() {
            return None;
        }
        let (want, t) = (cp.pair(), tail.couple().pair());
        let pair = AdmissiblePair::new(want.pos.checked_sub(t.pos)?, want.neg.checked_sub(t.neg)?);
        let prefix = Couple::new(prefix_pattern, pair).ok()?;
        let head = self.realize_prefix(&prefix)?;
        concatenate(&head, &tail).ok()
    }

    /// The degree-9 rules, tried on every orbit member and mapped back:
    /// `pos, neg ≥ 2` peels `x ± 1`; `pos = 1` with suffix `--` peels `x + 1`;
    /// suffixes `-+-`, `-++-` and `--+++-` peel `x² − x + 1`, the cubic
    /// `x³ − 2x² − 3x + 10` and the frozen quintic respectively.
    pub fn realize_d9(&self, cp: &Couple) -> D9Outcome {
        if cp.degree() != 9 {
            return D9Outcome::NotCovered(format!("degree {} is not 9", cp.degree()));
        }
        if is_exceptional_d9(cp) {
            return D9Outcome::NotCovered("orbit of the nonrealizable degree-9 couple".to_string());
        }
        for (member, g) in orbit(cp) {
            if let Some(w) = self.d9_rules(&member) {
                return D9Outcome::Witness(w.act(g.inverse()));
            }
        }
        D9Outcome::NotCovered("no rule applies or a prefix witness was not found".to_string())
    }

    fn d9_rules(&self, cp: &Couple) -> Option<Witness> {
        use Sign::{Minus, Plus};
        let AdmissiblePair { pos, neg } = cp.pair();
        let sigma = cp.pattern();
        if pos >= 2 && neg >= 2 {
            let s = sigma.signs();
            let equal = s[s.len() - 1] == s[s.len() - 2];
            return self.peel(cp, unit_root(!equal), 1);
        }
        if pos == 1 && neg >= 2 && sigma.ends_with(&[Minus, Minus]) {
            if let Some(w) = self.peel(cp, unit_root(false), 1) {
                return Some(w);
            }
        }
        let suffix_rules: [(&[Sign], fn() -> Witness, usize); 3] = [
            (&[Minus, Plus, Minus], no_real_root_quadratic, 2),
            (&[Minus, Plus, Plus, Minus], one_negative_root_cubic, 3),
            (&[Minus, Minus, Plus, Plus, Plus, Minus], frozen_quintic, 5),
        ];
        suffix_rules
            .iter()
            .filter(|(suffix, _, _)| sigma.ends_with(suffix))
            .find_map(|(_, tail, len)| self.peel(cp, tail(), *len))
    }
}

fn is_exceptional_d9(cp: &Couple) -> bool {
    let sigma0 = Couple::parse("+----++++-", 1, 6).expect("admissible");
    cp.canonical() == sigma0.canonical()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::Poly;
    use crate::signs::{admissible_pairs, realizes, SignPattern};

    #[test]
    fn fixed_witnesses() {
        assert_eq!(no_real_root_quadratic().poly(), &Poly::from_leading_ints(&[1, -1, 1]));
        assert_eq!(one_negative_root_cubic().poly(), &Poly::from_leading_ints(&[1, -2, -3, 10]));
        assert_eq!(unit_root(true).poly(), &Poly::from_leading_ints(&[1, -1]));
        let q = frozen_quintic();
        assert!(realizes(q.poly(), &Couple::parse("++---+", 0, 3).unwrap()));
        assert_eq!(
            q.poly(),
            &Poly::from_leading_ints(&[1, 1032, -61455, -230417432, -222338176, 12031198699520])
        );
    }

    #[test]
    fn low_degree_examples() {
        let w = realize_low_degree(&Couple::parse("+-", 1, 0).unwrap()).unwrap();
        assert_eq!(w.poly(), &Poly::from_leading_ints(&[1, -1]));
        let w = realize_low_degree(&Couple::parse("+-+", 0, 0).unwrap()).unwrap();
        assert_eq!(w.poly(), &Poly::from_leading_ints(&[1, -1, 1]));
        let w = realize_low_degree(&Couple::parse("+--+", 0, 1).unwrap()).unwrap();
        assert_eq!(w.poly(), &Poly::from_leading_ints(&[1, -2, -3, 10]));
        assert!(matches!(
            realize_low_degree(&Couple::parse("++-++", 2, 2).unwrap()),
            Err(RealizeError::UnsupportedDegree(4))
        ));
    }

    #[test]
    fn low_degree_covers_every_couple() {
        for d in 1..=3 {
            for sigma in SignPattern::all(d) {
                for pair in admissible_pairs(&sigma) {
                    let cp = Couple::new(sigma.clone(), pair).unwrap();
                    let w = realize_low_degree(&cp).unwrap_or_else(|e| panic!("{cp}: {e}"));
                    assert!(realizes(w.poly(), &cp));
                }
            }
        }
    }

    #[test]
    fn exceptional_couple_is_not_covered() {
        let r = Realizer::new(SearchConfig::default().with_budget(1));
        let cp = Couple::parse("+----++++-", 1, 6).unwrap();
        assert!(matches!(r.realize_d9(&cp), D9Outcome::NotCovered(_)));
        let mirrored = Couple::parse("++-+--+-++", 6, 1).unwrap();
        assert!(matches!(r.realize_d9(&mirrored), D9Outcome::NotCovered(_)));
    }

    #[test]
    fn peeling_realizes_long_hyperbolic_prefix() {
        let r = Realizer::new(SearchConfig::default().with_budget(2_000));
        let cp = Couple::parse("++++----", 1, 6).unwrap();
        let w = r.realize_prefix(&cp).unwrap();
        assert!(realizes(w.poly(), &cp));
    }
}
