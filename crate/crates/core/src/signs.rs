//! Sign patterns, Descartes pairs, admissible pairs and the Z2×Z2 action.
//!
//! A pattern is read from the leading coefficient down to the constant term
//! and always starts with `+`. The action is generated by reversal
//! (`x ↦ 1/x`, leaving the root-count pair alone) and mirroring
//! (`x ↦ −x`, swapping positive and negative counts).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::polycore::rational::signum;
use crate::polycore::Poly;
use crate::rootcount::{root_report, RootReport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SignError {
    #[error("invalid pattern character {0:?}: expected '+' or '-'")]
    BadCharacter(char),
    #[error("pattern needs at least two signs")]
    TooShort,
    #[error("pattern must start with '+'")]
    NegativeLeading,
    #[error("coefficient of x^{0} is zero")]
    ZeroCoefficient(usize),
    #[error("zero polynomial has no sign pattern")]
    ZeroPolynomial,
    #[error("pair ({pos}, {neg}) is not admissible for {pattern}")]
    NotAdmissible { pattern: String, pos: usize, neg: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Signs of a polynomial's coefficients, leading first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignPattern(Vec<Sign>);

impl SignPattern {
    pub fn new(signs: Vec<Sign>) -> Result<Self, SignError> {
        match signs.first() {
            _ if signs.len() < 2 => Err(SignError::TooShort),
            Some(Sign::Minus) => Err(SignError::NegativeLeading),
            _ => Ok(Self(signs)),
        }
    }

    /// Multiplies by the leading sign so the result starts with `+`.
    pub fn normalized(signs: Vec<Sign>) -> Result<Self, SignError> {
        let signs = match signs.first() {
            Some(Sign::Minus) => signs.into_iter().map(Sign::flip).collect(),
            _ => signs,
        };
        Self::new(signs)
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn last(&self) -> Sign {
        *self.0.last().expect("patterns have at least two signs")
    }

    /// Sign of the coefficient of `x^k`.
    pub fn at_power(&self, k: usize) -> Sign {
        self.0[self.degree() - k]
    }

    /// Every pattern of degree `d`, in lexicographic order with `+ < -`.
    pub fn all(d: usize) -> impl Iterator<Item = SignPattern> {
        assert!((1..usize::BITS as usize).contains(&d), "degree out of range");
        (0..1usize << d).map(move |bits| {
            let mut signs = vec![Sign::Plus];
            signs.extend((0..d).rev().map(|i| if bits >> i & 1 == 1 { Sign::Minus } else { Sign::Plus }));
            SignPattern(signs)
        })
    }

    /// The pattern followed by `tail`, with `tail` negated when this pattern
    /// ends in `-`. This is the sign pattern of a concatenated product.
    pub fn concatenated(&self, tail: &SignPattern) -> SignPattern {
        let flip = self.last() == Sign::Minus;
        let mut signs = self.0.clone();
        signs.extend(tail.0[1..].iter().map(|&s| if flip { s.flip() } else { s }));
        SignPattern(signs)
    }

    /// Drops the last `k` signs. Fails if fewer than two would remain.
    pub fn truncated(&self, k: usize) -> Result<SignPattern, SignError> {
        if k + 2 > self.0.len() {
            return Err(SignError::TooShort);
        }
        Ok(SignPattern(self.0[..self.0.len() - k].to_vec()))
    }

    pub fn ends_with(&self, suffix: &[Sign]) -> bool {
        self.0.ends_with(suffix)
    }
}

impl FromStr for SignPattern {
    type Err = SignError;
    fn from_str(s: &str) -> Result<Self, SignError> {
        let signs = s
            .trim()
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' | '\u{2212}' => Ok(Sign::Minus),
                other => Err(SignError::BadCharacter(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(signs)
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

impl Serialize for SignPattern {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SignPattern {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Sign changes `c` and preservations `p` between adjacent entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DescartesPair {
    pub c: usize,
    pub p: usize,
}

pub fn descartes_pair(sigma: &SignPattern) -> DescartesPair {
    let c = sigma.0.windows(2).filter(|w| w[0] != w[1]).count();
    DescartesPair { c, p: sigma.degree() - c }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AdmissiblePair {
    pub pos: usize,
    pub neg: usize,
}

impl AdmissiblePair {
    pub fn new(pos: usize, neg: usize) -> Self {
        Self { pos, neg }
    }

    pub fn swapped(self) -> Self {
        Self { pos: self.neg, neg: self.pos }
    }

    pub fn is_admissible_for(self, sigma: &SignPattern) -> bool {
        let DescartesPair { c, p } = descartes_pair(sigma);
        self.pos <= c && (c - self.pos) % 2 == 0 && self.neg <= p && (p - self.neg) % 2 == 0
    }
}

impl fmt::Display for AdmissiblePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.pos, self.neg)
    }
}

/// All pairs allowed by Descartes' rule of signs.
pub fn admissible_pairs(sigma: &SignPattern) -> BTreeSet<AdmissiblePair> {
    let DescartesPair { c, p } = descartes_pair(sigma);
    let mut out = BTreeSet::new();
    for pos in (c % 2..=c).step_by(2) {
        for neg in (p % 2..=p).step_by(2) {
            out.insert(AdmissiblePair { pos, neg });
        }
    }
    out
}

/// Pattern read from the back, renormalized to a leading `+`.
pub fn revert(sigma: &SignPattern) -> SignPattern {
    let reversed: Vec<Sign> = sigma.0.iter().rev().copied().collect();
    SignPattern::normalized(reversed).expect("length is preserved")
}

/// Flips the signs of the powers whose parity differs from the degree's.
pub fn mirror(sigma: &SignPattern) -> SignPattern {
    // Index i (leading first) holds power d - i, so those are the odd indices.
    SignPattern(
        sigma
            .0
            .iter()
            .enumerate()
            .map(|(i, &s)| if i % 2 == 1 { s.flip() } else { s })
            .collect(),
    )
}

/// A pattern together with an admissible pair.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Couple {
    pattern: SignPattern,
    pair: AdmissiblePair,
}

impl Couple {
    pub fn new(pattern: SignPattern, pair: AdmissiblePair) -> Result<Self, SignError> {
        if !pair.is_admissible_for(&pattern) {
            return Err(SignError::NotAdmissible { pattern: pattern.to_string(), pos: pair.pos, neg: pair.neg });
        }
        Ok(Self { pattern, pair })
    }

    /// Parses the pattern text and checks admissibility.
    pub fn parse(pattern: &str, pos: usize, neg: usize) -> Result<Self, SignError> {
        Self::new(pattern.parse()?, AdmissiblePair::new(pos, neg))
    }

    pub fn pattern(&self) -> &SignPattern {
        &self.pattern
    }

    pub fn pair(&self) -> AdmissiblePair {
        self.pair
    }

    pub fn degree(&self) -> usize {
        self.pattern.degree()
    }

    pub fn act(&self, g: Action) -> Couple {
        let (pattern, pair) = match g {
            Action::Identity => (self.pattern.clone(), self.pair),
            Action::Revert => (revert(&self.pattern), self.pair),
            Action::Mirror => (mirror(&self.pattern), self.pair.swapped()),
            Action::MirrorRevert => (mirror(&revert(&self.pattern)), self.pair.swapped()),
        };
        Couple { pattern, pair }
    }

    /// Least orbit member; used as the orbit's key.
    pub fn canonical(&self) -> Couple {
        Action::ALL.iter().map(|&g| self.act(g)).min().expect("nonempty")
    }
}

impl fmt::Display for Couple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.pattern, self.pair)
    }
}

/// The four group elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Action {
    Identity,
    Revert,
    Mirror,
    MirrorRevert,
}

impl Action {
    pub const ALL: [Action; 4] = [Action::Identity, Action::Revert, Action::Mirror, Action::MirrorRevert];

    /// Every element is its own inverse.
    pub fn inverse(self) -> Action {
        self
    }

    /// Applies the action to a polynomial with nonzero constant term. A
    /// realization of a couple maps to a realization of the acted couple.
    pub fn apply_poly(self, p: &Poly) -> Poly {
        match self {
            Action::Identity => p.clone(),
            Action::Revert => revert_poly(p),
            Action::Mirror => mirror_poly(p),
            Action::MirrorRevert => mirror_poly(&revert_poly(p)),
        }
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Action::Identity => "identity",
            Action::Revert => "revert",
            Action::Mirror => "mirror",
            Action::MirrorRevert => "mirror∘revert",
        })
    }
}

/// `(−1)^d p(−x)`: roots negated, leading sign kept.
pub fn mirror_poly(p: &Poly) -> Poly {
    let q = p.negate_variable();
    if p.deg() % 2 == 1 {
        -q
    } else {
        q
    }
}

/// `x^d p(1/x) / p(0)`: roots inverted, result monic. Panics if `p(0) = 0`.
pub fn revert_poly(p: &Poly) -> Poly {
    let c0 = p.coeff(0);
    assert!(!c0.is_zero(), "reversal needs a nonzero constant term");
    p.reversed().scale(&c0.recip())
}

/// Distinct orbit members, each labeled with the first action reaching it.
pub fn orbit(cp: &Couple) -> Vec<(Couple, Action)> {
    let mut out: Vec<(Couple, Action)> = Vec::with_capacity(4);
    for g in Action::ALL {
        let member = cp.act(g);
        if !out.iter().any(|(c, _)| c == &member) {
            out.push((member, g));
        }
    }
    out
}

/// Sign pattern of a polynomial with nonzero coefficients and positive
/// leading coefficient.
pub fn sign_pattern_of(p: &Poly) -> Result<SignPattern, SignError> {
    if p.is_zero() {
        return Err(SignError::ZeroPolynomial);
    }
    let mut signs = Vec::with_capacity(p.coeffs().len());
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        signs.push(match signum(c) {
            1 => Sign::Plus,
            -1 => Sign::Minus,
            _ => return Err(SignError::ZeroCoefficient(k)),
        });
    }
    SignPattern::new(signs)
}

/// Why a polynomial does or does not realize a couple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Realizes,
    BadPattern(SignError),
    PatternMismatch { expected: SignPattern, found: SignPattern },
    WrongCounts { pos: u32, neg: u32 },
    MultipleRealRoot,
}

impl Verdict {
    pub fn is_realized(&self) -> bool {
        matches!(self, Verdict::Realizes)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Realizes => write!(f, "realizes"),
            Verdict::BadPattern(e) => write!(f, "no sign pattern: {e}"),
            Verdict::PatternMismatch { expected, found } => write!(f, "pattern {found} differs from {expected}"),
            Verdict::WrongCounts { pos, neg } => write!(f, "root counts ({pos}, {neg}) differ from the pair"),
            Verdict::MultipleRealRoot => write!(f, "a real root is not simple"),
        }
    }
}

/// Full realization check, returning the root report whenever one exists.
pub fn check_realization(p: &Poly, cp: &Couple) -> (Verdict, Option<RootReport>) {
    let report = root_report(p).ok();
    let verdict = match sign_pattern_of(p) {
        Err(e) => Verdict::BadPattern(e),
        Ok(found) if &found != cp.pattern() => Verdict::PatternMismatch { expected: cp.pattern().clone(), found },
        Ok(_) => {
            // Nonzero coefficients rule out a zero root.
            let r = report.as_ref().expect("nonzero polynomial");
            let want = cp.pair();
            if r.pos_mult as usize != want.pos || r.neg_mult as usize != want.neg {
                Verdict::WrongCounts { pos: r.pos_mult, neg: r.neg_mult }
            } else if !r.real_roots_simple() {
                Verdict::MultipleRealRoot
            } else {
                Verdict::Realizes
            }
        }
    };
    (verdict, report)
}

/// `p` has the couple's pattern and exactly the couple's numbers of simple
/// positive and negative roots.
pub fn realizes(p: &Poly, cp: &Couple) -> bool {
    check_realization(p, cp).0.is_realized()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> SignPattern {
        s.parse().unwrap()
    }

    const SIGMA0: &str = "+----++++-";
    const SIGMA_STAR: &str = "++-++";

    #[test]
    fn parse_and_display() {
        assert_eq!(pat(SIGMA0).to_string(), SIGMA0);
        assert_eq!("-+".parse::<SignPattern>(), Err(SignError::NegativeLeading));
        assert_eq!("+".parse::<SignPattern>(), Err(SignError::TooShort));
        assert_eq!("+0-".parse::<SignPattern>(), Err(SignError::BadCharacter('0')));
        assert_eq!(pat("+\u{2212}"), pat("+-"));
    }

    #[test]
    fn descartes_pair_examples() {
        assert_eq!(descartes_pair(&pat(SIGMA_STAR)), DescartesPair { c: 2, p: 2 });
        assert_eq!(descartes_pair(&pat(SIGMA0)), DescartesPair { c: 3, p: 6 });
        assert_eq!(descartes_pair(&pat("+++++")), DescartesPair { c: 0, p: 4 });
    }

    #[test]
    fn admissible_pair_examples() {
        let star: Vec<_> = admissible_pairs(&pat(SIGMA_STAR)).into_iter().map(|a| (a.pos, a.neg)).collect();
        assert_eq!(star, vec![(0, 0), (0, 2), (2, 0), (2, 2)]);
        let zero = admissible_pairs(&pat(SIGMA0));
        assert_eq!(zero.len(), 8);
        assert!(zero.contains(&AdmissiblePair::new(1, 6)));
        assert!(zero.iter().all(|a| [1, 3].contains(&a.pos) && a.neg % 2 == 0 && a.neg <= 6));
        assert_eq!(admissible_pairs(&pat("+-")).into_iter().collect::<Vec<_>>(), vec![AdmissiblePair::new(1, 0)]);
    }

    #[test]
    fn action_examples() {
        assert_eq!(revert(&pat(SIGMA0)), pat(SIGMA0));
        assert_eq!(revert(&pat("++-")), pat("+--"));
        assert_eq!(mirror(&pat(SIGMA0)), pat("++-+--+-++"));
        assert_eq!(mirror(&mirror(&pat(SIGMA0))), pat(SIGMA0));
    }

    #[test]
    fn mirror_matches_polynomial_substitution() {
        // A polynomial with pattern σ⁰: x^9 - x^8 - ... chosen with unit magnitudes.
        let p = Poly::from_leading_ints(&[1, -1, -1, -1, -1, 1, 1, 1, 1, -1]);
        assert_eq!(sign_pattern_of(&mirror_poly(&p)).unwrap(), mirror(&pat(SIGMA0)));
        assert_eq!(sign_pattern_of(&revert_poly(&p)).unwrap(), revert(&pat(SIGMA0)));
    }

    #[test]
    fn orbit_examples() {
        let zero = Couple::parse(SIGMA0, 1, 6).unwrap();
        let o = orbit(&zero);
        assert_eq!(o.len(), 2);
        assert_eq!(o[1].0, Couple::parse("++-+--+-++", 6, 1).unwrap());
        assert_eq!(o[1].1, Action::Mirror);

        let grabiner = Couple::parse(SIGMA_STAR, 2, 0).unwrap();
        let o = orbit(&grabiner);
        assert_eq!(o.len(), 2);
        assert!(o.iter().any(|(c, _)| c == &Couple::parse("+---+", 0, 2).unwrap()));

        // Mirroring always flips the second sign, so no orbit is a singleton.
        for d in 1..=6 {
            for sigma in SignPattern::all(d) {
                for pair in admissible_pairs(&sigma) {
                    let n = orbit(&Couple::new(sigma.clone(), pair).unwrap()).len();
                    assert!(n == 2 || n == 4, "{sigma} {pair}: {n}");
                }
            }
        }
    }

    #[test]
    fn couple_rejects_non_admissible_pairs() {
        assert!(matches!(Couple::parse(SIGMA_STAR, 1, 0), Err(SignError::NotAdmissible { .. })));
        assert!(Couple::parse(SIGMA_STAR, 2, 0).is_ok());
    }

    #[test]
    fn sign_pattern_of_examples() {
        assert_eq!(sign_pattern_of(&Poly::from_leading_ints(&[1, -2, -3, 10])).unwrap(), pat("+--+"));
        assert_eq!(sign_pattern_of(&Poly::from_leading_ints(&[1, -1, 1])).unwrap(), pat("+-+"));
        assert_eq!(sign_pattern_of(&Poly::from_leading_ints(&[1, 0, 1])), Err(SignError::ZeroCoefficient(1)));
        assert_eq!(sign_pattern_of(&Poly::from_leading_ints(&[-1, 1])), Err(SignError::NegativeLeading));
    }

    #[test]
    fn realizes_examples() {
        assert!(realizes(&Poly::from_leading_ints(&[1, -1, 1]), &Couple::parse("+-+", 0, 0).unwrap()));
        assert!(realizes(&Poly::from_leading_ints(&[1, -2, -3, 10]), &Couple::parse("+--+", 0, 1).unwrap()));
        // (x - 1)^2 (x + 2) = x^3 - 3x + 2 has a zero coefficient; nudge it into x^3 + x^2 - 5x + 3 = (x-1)^2(x+3).
        let double = Poly::from_leading_ints(&[1, 1, -5, 3]);
        let (v, _) = check_realization(&double, &Couple::parse("++-+", 2, 1).unwrap());
        assert_eq!(v, Verdict::MultipleRealRoot);
        let (v, report) = check_realization(&Poly::from_leading_ints(&[1, 0, 1]), &Couple::parse("+++", 0, 0).unwrap());
        assert_eq!(v, Verdict::BadPattern(SignError::ZeroCoefficient(1)));
        assert!(report.is_some());
    }

    #[test]
    fn all_patterns_enumerates_every_sign_choice() {
        let all: Vec<_> = SignPattern::all(3).collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], pat("++++"));
        assert_eq!(all[7], pat("+---"));
    }

    #[test]
    fn concatenated_pattern_follows_last_sign() {
        assert_eq!(pat("++").concatenated(&pat("+-")), pat("++-"));
        assert_eq!(pat("+-").concatenated(&pat("++")), pat("+--"));
        assert_eq!(pat("+--").concatenated(&pat("+-+")), pat("+--+-"));
    }
}
