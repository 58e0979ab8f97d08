//! Randomized root-placement search.
//!
//! Candidates are placements of `pos` positive roots, `neg` negative roots
//! and complex pairs, with magnitudes drawn log-uniformly from
//! `[1/radius, radius]`. Scoring runs in `f64` and only steers the search:
//! any candidate whose float coefficients have the right signs is rounded to
//! short dyadic rationals and checked exactly before it is accepted.

use std::f64::consts::SQRT_2;

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Origin, Trace, Witness};
use crate::polycore::{ComplexPair, Rational};
use crate::signs::{Couple, Sign};

#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    pub seed: u64,
    /// Maximum number of scored candidates.
    pub budget: u64,
    /// Root magnitudes stay within `[1/radius, radius]`.
    pub radius: Rational,
    /// Multiplicative moves tried on each magnitude, in order; each factor
    /// is tried together with its inverse.
    pub factors: Vec<f64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            budget: 100_000,
            radius: Rational::from_integer(1024.into()),
            factors: vec![2.0, SQRT_2],
        }
    }
}

impl SearchConfig {
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Witness),
    Unknown { evaluations: u64 },
}

impl SearchOutcome {
    pub fn witness(self) -> Option<Witness> {
        match self {
            SearchOutcome::Found(w) => Some(w),
            SearchOutcome::Unknown { .. } => None,
        }
    }
}

/// 64-bit FNV-1a, stable across platforms and releases.
pub(crate) fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, &b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// Per-couple seed derived from the global seed and the couple's text.
pub(crate) fn couple_seed(seed: u64, cp: &Couple) -> u64 {
    let key = format!("{seed}:{}:{}:{}", cp.pattern(), cp.pair().pos, cp.pair().neg);
    fnv1a(key.as_bytes())
}

#[derive(Debug, Clone)]
struct Placement {
    pos: Vec<f64>,
    neg: Vec<f64>,
    /// (real part, imaginary magnitude); the real part carries its sign.
    pairs: Vec<(f64, f64)>,
}

impl Placement {
    fn coords(&self) -> usize {
        self.pos.len() + self.neg.len() + 2 * self.pairs.len()
    }

    fn coord_mut(&mut self, i: usize) -> &mut f64 {
        let (np, nn) = (self.pos.len(), self.neg.len());
        if i < np {
            &mut self.pos[i]
        } else if i < np + nn {
            &mut self.neg[i - np]
        } else {
            let k = i - np - nn;
            let pair = &mut self.pairs[k / 2];
            if k % 2 == 0 {
                &mut pair.0
            } else {
                &mut pair.1
            }
        }
    }

    /// Ascending float coefficients of the monic product.
    fn coefficients(&self, out: &mut Vec<f64>) {
        out.clear();
        out.push(1.0);
        let mul_linear = |out: &mut Vec<f64>, c0: f64| {
            out.push(0.0);
            for i in (0..out.len()).rev() {
                let below = if i > 0 { out[i - 1] } else { 0.0 };
                out[i] = out[i] * c0 + below;
            }
        };
        for &r in &self.pos {
            mul_linear(out, -r);
        }
        for &s in &self.neg {
            mul_linear(out, s);
        }
        for &(re, im) in &self.pairs {
            let (c1, c0) = (-2.0 * re, re * re + im * im);
            out.push(0.0);
            out.push(0.0);
            for i in (0..out.len()).rev() {
                let b1 = if i > 0 { out[i - 1] } else { 0.0 };
                let b2 = if i > 1 { out[i - 2] } else { 0.0 };
                out[i] = out[i] * c0 + b1 * c1 + b2;
            }
        }
    }
}

/// `(wrong signs, smallest wrong magnitude relative to the largest)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
struct Score(usize, f64);

fn score(coeffs: &[f64], target: &[i8]) -> Score {
    let scale = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut wrong = 0;
    let mut closest = f64::INFINITY;
    for (c, &t) in coeffs.iter().zip(target) {
        let s = if *c > 0.0 { 1 } else if *c < 0.0 { -1 } else { 0 };
        if s != t {
            wrong += 1;
            closest = closest.min(c.abs() / scale);
        }
    }
    Score(wrong, if wrong == 0 { 0.0 } else { closest })
}

struct Searcher<'a> {
    couple: &'a Couple,
    target: Vec<i8>,
    lo: f64,
    hi: f64,
    factors: Vec<f64>,
    buf: Vec<f64>,
    evaluations: u64,
    budget: u64,
}

impl Searcher<'_> {
    fn eval(&mut self, x: &Placement) -> Score {
        self.evaluations += 1;
        x.coefficients(&mut self.buf);
        score(&self.buf, &self.target)
    }

    fn exhausted(&self) -> bool {
        self.evaluations >= self.budget
    }

    fn log_uniform(&self, rng: &mut ChaCha8Rng) -> f64 {
        (rng.gen::<f64>() * (self.hi.ln() - self.lo.ln()) + self.lo.ln()).exp()
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> Placement {
        let pair = self.couple.pair();
        let k = (self.couple.degree() - pair.pos - pair.neg) / 2;
        Placement {
            pos: (0..pair.pos).map(|_| self.log_uniform(rng)).collect(),
            neg: (0..pair.neg).map(|_| self.log_uniform(rng)).collect(),
            pairs: (0..k)
                .map(|_| {
                    let re = self.log_uniform(rng);
                    let sign = if rng.gen::<bool>() { 1.0 } else { -1.0 };
                    (sign * re, self.log_uniform(rng))
                })
                .collect(),
        }
    }

    /// First-improvement coordinate descent. Returns the final placement and
    /// whether its float signs all match.
    fn descend(&mut self, mut x: Placement) -> Option<(Placement, bool)> {
        let mut best = self.eval(&x);
        let moves: Vec<f64> = self.factors.iter().flat_map(|&f| [f, 1.0 / f]).collect();
        loop {
            if best.0 == 0 {
                return Some((x, true));
            }
            let mut improved = false;
            'scan: for i in 0..x.coords() {
                for &m in moves.iter().chain([-1.0].iter()) {
                    let mut cand = x.clone();
                    let v = cand.coord_mut(i);
                    if m < 0.0 {
                        // Sign flips only make sense for a pair's real part.
                        let is_re = i >= x.pos.len() + x.neg.len() && (i - x.pos.len() - x.neg.len()) % 2 == 0;
                        if !is_re {
                            continue;
                        }
                        *v = -*v;
                    } else {
                        *v *= m;
                        if v.abs() < self.lo || v.abs() > self.hi {
                            continue;
                        }
                    }
                    if self.exhausted() {
                        return None;
                    }
                    let s = self.eval(&cand);
                    if s < best {
                        best = s;
                        x = cand;
                        improved = true;
                        break 'scan;
                    }
                }
            }
            if !improved {
                return Some((x, false));
            }
        }
    }

    /// Rounds the placement to `bits` significant bits and checks exactly.
    fn certify(&self, x: &Placement, seed: u64) -> Option<Witness> {
        for bits in [3, 6, 10, 16, 24, 53] {
            let q = |v: f64| dyadic(v, bits);
            let mut real: Vec<Rational> = x.pos.iter().map(|&r| q(r)).collect();
            real.extend(x.neg.iter().map(|&s| -q(s)));
            let pairs = x.pairs.iter().map(|&(re, im)| {
                let im = q(im);
                ComplexPair::new(q(re), &im * &im)
            });
            let trace = Trace::Roots {
                real,
                pairs: pairs.collect(),
                origin: Origin::Search { seed, evaluations: self.evaluations },
            };
            if let Ok(w) = Witness::new(self.couple.clone(), trace) {
                return Some(w);
            }
        }
        None
    }
}

/// `v` rounded to `bits` significant binary digits, as an exact rational.
fn dyadic(v: f64, bits: u32) -> Rational {
    if v == 0.0 {
        return Rational::from_integer(0.into());
    }
    let e = v.abs().log2().floor() as i32 - (bits as i32 - 1);
    let m = (v / 2f64.powi(e)).round();
    let mant = Rational::from_float(m).expect("finite");
    mant * crate::polycore::rational::pow2(e)
}

/// Searches for a witness of `cp`; deterministic in `(cfg.seed, cp)`.
pub fn realize_search(cp: &Couple, cfg: &SearchConfig) -> SearchOutcome {
    let seed = couple_seed(cfg.seed, cp);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let radius = cfg.radius.to_f64().filter(|r| *r > 1.0).unwrap_or(2.0);
    let target: Vec<i8> = cp.pattern().signs().iter().rev().map(|s: &Sign| s.as_i8()).collect();
    let mut s = Searcher {
        couple: cp,
        target,
        lo: 1.0 / radius,
        hi: radius,
        factors: cfg.factors.clone(),
        buf: Vec::with_capacity(cp.degree() + 1),
        evaluations: 0,
        budget: cfg.budget.max(1),
    };
    while !s.exhausted() {
        let start = s.sample(&mut rng);
        let Some((x, signs_ok)) = s.descend(start) else { break };
        if signs_ok {
            if let Some(w) = s.certify(&x, cfg.seed) {
                return SearchOutcome::Found(w);
            }
        }
    }
    SearchOutcome::Unknown { evaluations: s.evaluations }
}
