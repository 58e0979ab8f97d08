//! Exact real-root counting, isolation and refinement via Sturm chains.
//!
//! Multiple roots are handled through square-free decomposition: each
//! square-free factor is isolated separately and its roots inherit the
//! factor's multiplicity. A root at zero is detected from the trailing
//! coefficients before any Sturm evaluation, since Sturm endpoints must not
//! vanish.

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::polycore::rational::{format_rational, max_abs, signum, Rational};
use crate::polycore::Poly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("the zero polynomial has no root report")]
    ZeroPolynomial,
    #[error("input is not square-free")]
    NotSquareFree,
    #[error("polynomial vanishes at interval endpoint {0}")]
    VanishingEndpoint(String),
    #[error("empty interval: lower bound {lo} is not below upper bound {hi}")]
    EmptyInterval { lo: String, hi: String },
    #[error("no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: String, hi: String },
    #[error("tolerance must be positive")]
    NonPositiveTolerance,
}

/// `p, p′, −rem(p, p′), …` down to a nonzero constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmChain {
    chain: Vec<Poly>,
}

impl SturmChain {
    /// Builds the chain of a square-free polynomial.
    pub fn new(p: &Poly) -> Result<Self, RootError> {
        if p.is_zero() {
            return Err(RootError::ZeroPolynomial);
        }
        if !p.is_square_free() {
            return Err(RootError::NotSquareFree);
        }
        Ok(Self::build(p))
    }

    fn build(p: &Poly) -> Self {
        let mut chain = vec![p.clone()];
        let mut next = p.derivative();
        while !next.is_zero() {
            let r = chain.last().expect("chain is nonempty").rem(&next);
            chain.push(next);
            // Positive rescaling keeps sign sequences intact and the numbers small.
            next = match r.leading() {
                Some(lc) => r.scale(&(-lc.abs().recip())),
                None => Poly::zero(),
            };
        }
        Self { chain }
    }

    pub fn polys(&self) -> &[Poly] {
        &self.chain
    }

    /// Number of sign changes in the chain evaluated at `x`, zeros skipped.
    pub fn variations(&self, x: &Rational) -> usize {
        let mut last = 0i8;
        let mut changes = 0;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    /// Distinct roots in `(lo, hi]`.
    pub fn count(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

/// Number of distinct real roots of a square-free `p` in `(lo, hi]`.
pub fn sturm_count(p: &Poly, lo: &Rational, hi: &Rational) -> Result<usize, RootError> {
    if lo >= hi {
        return Err(RootError::EmptyInterval { lo: format_rational(lo), hi: format_rational(hi) });
    }
    let chain = SturmChain::new(p)?;
    for end in [lo, hi] {
        if p.sign_at(end) == 0 {
            return Err(RootError::VanishingEndpoint(format_rational(end)));
        }
    }
    Ok(chain.count(lo, hi))
}

/// Open interval `(lo, hi)` with rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IsolatingInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl IsolatingInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo < hi);
        Self { lo, hi }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo < x && x < &self.hi
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootSign {
    Negative,
    Zero,
    Positive,
}

/// One distinct real root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealRoot {
    pub interval: IsolatingInterval,
    pub multiplicity: u32,
    pub sign: RootSign,
    /// Monic square-free factor having this root as a simple root.
    pub factor: Poly,
}

impl RealRoot {
    /// Narrows the isolating interval to width below `width`.
    pub fn refined(&self, width: &Rational) -> IsolatingInterval {
        if self.sign == RootSign::Zero {
            return IsolatingInterval::new(-width / Rational::from_integer(4.into()), width / Rational::from_integer(4.into()));
        }
        let mut iv = self.interval.clone();
        while &iv.width() >= width {
            iv = halve(&self.factor, &iv);
        }
        iv
    }
}

/// Multiplicity-exact real root census of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootReport {
    pub pos_mult: u32,
    pub neg_mult: u32,
    pub zero_mult: u32,
    pub complex_pairs: u32,
    /// Distinct real roots in increasing order, with disjoint intervals.
    pub roots: Vec<RealRoot>,
}

impl RootReport {
    pub fn degree(&self) -> u32 {
        self.pos_mult + self.neg_mult + self.zero_mult + 2 * self.complex_pairs
    }

    /// True when every nonzero real root is simple.
    pub fn real_roots_simple(&self) -> bool {
        self.roots.iter().all(|r| r.multiplicity == 1)
    }

    pub fn positive(&self) -> impl Iterator<Item = &RealRoot> {
        self.roots.iter().filter(|r| r.sign == RootSign::Positive)
    }

    pub fn negative(&self) -> impl Iterator<Item = &RealRoot> {
        self.roots.iter().filter(|r| r.sign == RootSign::Negative)
    }
}

impl Serialize for RootReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            lo: String,
            hi: String,
            mult: u32,
        }
        let roots: Vec<Entry> = self
            .roots
            .iter()
            .map(|r| Entry {
                lo: format_rational(&r.interval.lo),
                hi: format_rational(&r.interval.hi),
                mult: r.multiplicity,
            })
            .collect();
        let mut st = s.serialize_struct("RootReport", 5)?;
        st.serialize_field("pos", &self.pos_mult)?;
        st.serialize_field("neg", &self.neg_mult)?;
        st.serialize_field("zero", &self.zero_mult)?;
        st.serialize_field("pairs", &self.complex_pairs)?;
        st.serialize_field("roots", &roots)?;
        st.end()
    }
}

/// `1 + max |a_i / a_d|`: every root has modulus strictly below it.
pub fn cauchy_bound(p: &Poly) -> Rational {
    let Some(lead) = p.leading() else {
        return Rational::one();
    };
    let d = p.deg();
    let m = max_abs(p.coeffs()[..d].iter());
    Rational::one() + m / lead.abs()
}

/// Builds the root report of a nonzero polynomial.
pub fn root_report(p: &Poly) -> Result<RootReport, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let zero_mult = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let stripped = Poly::from_coeffs(p.coeffs()[zero_mult..].to_vec());

    let mut found: Vec<RealRoot> = Vec::new();
    for (factor, mult) in stripped.square_free_decompose() {
        for (interval, sign) in isolate_square_free(&factor) {
            found.push(RealRoot { interval, multiplicity: mult, sign, factor: factor.clone() });
        }
    }
    separate(&mut found);

    if zero_mult > 0 {
        let near = found
            .iter()
            .map(|r| if r.sign == RootSign::Positive { r.interval.lo.clone() } else { -r.interval.hi.clone() })
            .min()
            .unwrap_or_else(|| Rational::from_integer(2.into()));
        let m = near / Rational::from_integer(2.into());
        found.push(RealRoot {
            interval: IsolatingInterval::new(-m.clone(), m),
            multiplicity: zero_mult as u32,
            sign: RootSign::Zero,
            factor: Poly::x(),
        });
        found.sort_by(|a, b| a.interval.lo.cmp(&b.interval.lo));
    }

    let sum = |sign: RootSign| -> u32 {
        found.iter().filter(|r| r.sign == sign).map(|r| r.multiplicity).sum()
    };
    let pos_mult = sum(RootSign::Positive);
    let neg_mult = sum(RootSign::Negative);
    let real = pos_mult + neg_mult + zero_mult as u32;
    let degree = p.deg() as u32;
    debug_assert!(real <= degree && (degree - real) % 2 == 0);
    Ok(RootReport {
        pos_mult,
        neg_mult,
        zero_mult: zero_mult as u32,
        complex_pairs: (degree - real) / 2,
        roots: found,
    })
}

/// Distinct real roots of `p` in increasing order.
pub fn real_roots(p: &Poly) -> Result<Vec<RealRoot>, RootError> {
    Ok(root_report(p)?.roots)
}

/// Bisects the sign change of the square-free part of `p` on `iv` until the
/// returned point is within `tol` of the root.
pub fn refine_root(p: &Poly, iv: &IsolatingInterval, tol: &Rational) -> Result<Rational, RootError> {
    if !tol.is_positive() {
        return Err(RootError::NonPositiveTolerance);
    }
    if iv.lo >= iv.hi {
        return Err(RootError::EmptyInterval { lo: format_rational(&iv.lo), hi: format_rational(&iv.hi) });
    }
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let f = p.square_free_part();
    let (s_lo, s_hi) = (f.sign_at(&iv.lo), f.sign_at(&iv.hi));
    if s_lo == 0 {
        return Ok(iv.lo.clone());
    }
    if s_hi == 0 {
        return Ok(iv.hi.clone());
    }
    if s_lo == s_hi {
        return Err(RootError::NoSignChange { lo: format_rational(&iv.lo), hi: format_rational(&iv.hi) });
    }
    let (mut lo, mut hi) = (iv.lo.clone(), iv.hi.clone());
    let two = Rational::from_integer(2.into());
    while &(&hi - &lo) >= tol {
        let mid = (&lo + &hi) / &two;
        match f.sign_at(&mid) {
            0 => return Ok(mid),
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
    Ok((lo + hi) / two)
}

/// Isolating intervals for the real roots of a square-free polynomial with
/// no root at zero. Negative-root intervals lie in `(−B, 0)`, positive ones
/// in `(0, B)`, and no interval touches zero.
fn isolate_square_free(f: &Poly) -> Vec<(IsolatingInterval, RootSign)> {
    if f.is_constant() {
        return Vec::new();
    }
    let chain = SturmChain::build(f);
    let bound = cauchy_bound(f);
    let zero = Rational::zero();
    let mut out = Vec::new();
    for (lo, hi, sign) in [
        (-bound.clone(), zero.clone(), RootSign::Negative),
        (zero.clone(), bound.clone(), RootSign::Positive),
    ] {
        let mut stack = vec![(lo.clone(), hi.clone(), chain.count(&lo, &hi))];
        while let Some((a, b, n)) = stack.pop() {
            match n {
                0 => {}
                1 => {
                    let mut iv = IsolatingInterval::new(a, b);
                    while iv.lo.is_zero() || iv.hi.is_zero() {
                        iv = halve(f, &iv);
                    }
                    out.push((iv, sign));
                }
                _ => {
                    let mid = split_point(f, &a, &b);
                    let left = chain.count(&a, &mid);
                    stack.push((mid.clone(), b, n - left));
                    stack.push((a, mid, left));
                }
            }
        }
    }
    out
}

/// A point strictly inside `(a, b)` where `f` does not vanish, preferring
/// the midpoint.
fn split_point(f: &Poly, a: &Rational, b: &Rational) -> Rational {
    let width = b - a;
    for den in 2i64.. {
        for num in 1..den {
            let t = a + &width * Rational::new(num.into(), den.into());
            if f.sign_at(&t) != 0 {
                return t;
            }
        }
    }
    unreachable!("a nonzero polynomial has finitely many roots")
}

/// Keeps the half of `iv` on which `f` changes sign.
fn halve(f: &Poly, iv: &IsolatingInterval) -> IsolatingInterval {
    let mid = split_point(f, &iv.lo, &iv.hi);
    let s_lo = f.sign_at(&iv.lo);
    if s_lo != 0 && signum(&f.eval(&mid)) != s_lo {
        IsolatingInterval::new(iv.lo.clone(), mid)
    } else {
        IsolatingInterval::new(mid, iv.hi.clone())
    }
}

/// Sorts roots and shrinks overlapping neighbours until all intervals are
/// pairwise disjoint. Roots of coprime factors are distinct, so this ends.
fn separate(roots: &mut [RealRoot]) {
    loop {
        roots.sort_by(|a, b| a.interval.lo.cmp(&b.interval.lo));
        let mut clean = true;
        for i in 1..roots.len() {
            if roots[i - 1].interval.hi > roots[i].interval.lo {
                clean = false;
                for k in [i - 1, i] {
                    roots[k].interval = halve(&roots[k].factor, &roots[k].interval);
                }
            }
        }
        if clean {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rational::{int, rat};
    use crate::polycore::ComplexPair;

    fn p(leading: &[i64]) -> Poly {
        Poly::from_leading_ints(leading)
    }

    #[test]
    fn sturm_count_examples() {
        assert_eq!(sturm_count(&p(&[1, 0, -1]), &int(-2), &int(2)).unwrap(), 2);
        assert_eq!(sturm_count(&p(&[1, 0, 1]), &int(-10), &int(10)).unwrap(), 0);
        assert_eq!(sturm_count(&p(&[-2, 20, -50, 40]), &int(0), &int(100)).unwrap(), 1);
    }

    #[test]
    fn sturm_count_rejects_bad_input() {
        let double = &p(&[1, -1]).pow(2) * &p(&[1, 3]);
        assert_eq!(sturm_count(&double, &int(-5), &int(5)), Err(RootError::NotSquareFree));
        assert!(matches!(
            sturm_count(&p(&[1, 0, -1]), &int(1), &int(3)),
            Err(RootError::VanishingEndpoint(_))
        ));
        assert!(matches!(sturm_count(&p(&[1, 0, -1]), &int(3), &int(3)), Err(RootError::EmptyInterval { .. })));
    }

    #[test]
    fn report_examples() {
        let r = root_report(&(&p(&[1, 1]).pow(6) * &p(&[1, -1]).pow(3))).unwrap();
        assert_eq!((r.pos_mult, r.neg_mult, r.zero_mult, r.complex_pairs), (3, 6, 0, 0));
        let r = root_report(&p(&[1, -1, 1])).unwrap();
        assert_eq!((r.pos_mult, r.neg_mult, r.zero_mult, r.complex_pairs), (0, 0, 0, 1));
        let r = root_report(&p(&[1, -2, -3, 10])).unwrap();
        assert_eq!((r.pos_mult, r.neg_mult, r.zero_mult, r.complex_pairs), (0, 1, 0, 1));
        assert!(r.roots[0].interval.contains(&int(-2)));
    }

    #[test]
    fn report_handles_zero_root_and_shared_intervals() {
        // x^2 (x - 1/1000)(x - 1/999)(x^2 + 1)
        let q = Poly::from_roots(
            &[(int(0), 2), (rat(1, 1000), 1), (rat(1, 999), 1)],
            &[ComplexPair::new(int(0), int(1))],
            &int(1),
        )
        .unwrap();
        let r = root_report(&q).unwrap();
        assert_eq!((r.pos_mult, r.neg_mult, r.zero_mult, r.complex_pairs), (2, 0, 2, 1));
        assert_eq!(r.roots.len(), 3);
        for w in r.roots.windows(2) {
            assert!(w[0].interval.hi <= w[1].interval.lo);
        }
        assert!(r.roots[0].interval.contains(&int(0)));
        assert!(r.roots[1].interval.contains(&rat(1, 1000)));
        assert!(r.roots[2].interval.contains(&rat(1, 999)));
    }

    #[test]
    fn report_json_shape() {
        let r = root_report(&p(&[1, 0, -1])).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["pos"], 1);
        assert_eq!(v["neg"], 1);
        assert_eq!(v["zero"], 0);
        assert_eq!(v["pairs"], 0);
        assert_eq!(v["roots"].as_array().unwrap().len(), 2);
        assert_eq!(v["roots"][0]["mult"], 1);
        assert!(v["roots"][0]["lo"].is_string());
    }

    #[test]
    fn refine_examples() {
        let a30 = p(&[-2, 20, -50, 40]);
        let tol = rat(1, 10_000);
        let m = refine_root(&a30, &IsolatingInterval::new(int(6), int(7)), &tol).unwrap();
        assert!((m - rat(67245, 10_000)).abs() < tol);

        let a42 = p(&[1, -10, 10]);
        let roots = real_roots(&a42).unwrap();
        let got: Vec<Rational> = roots
            .iter()
            .map(|r| refine_root(&a42, &r.interval, &rat(1, 100_000)).unwrap())
            .collect();
        assert!((&got[0] - rat(1127, 1000)).abs() < rat(1, 1000));
        assert!((&got[1] - rat(8872, 1000)).abs() < rat(1, 1000));

        let sqrt2 = refine_root(&p(&[1, 0, -2]), &IsolatingInterval::new(int(1), int(2)), &rat(1, 1_000_000)).unwrap();
        assert!((sqrt2 - rat(1_414_213, 1_000_000)).abs() < rat(1, 1_000_000));
    }

    #[test]
    fn refine_rejects_interval_without_sign_change() {
        let err = refine_root(&p(&[1, 0, -2]), &IsolatingInterval::new(int(2), int(3)), &rat(1, 10));
        assert!(matches!(err, Err(RootError::NoSignChange { .. })));
        let exact = refine_root(&p(&[1, 0, -4]), &IsolatingInterval::new(int(2), int(3)), &rat(1, 10)).unwrap();
        assert_eq!(exact, int(2));
    }

    #[test]
    fn cauchy_bound_encloses_roots() {
        let q = p(&[2, -7, 1, 9]);
        let b = cauchy_bound(&q);
        for r in real_roots(&q).unwrap() {
            assert!(r.interval.lo > -b.clone() && r.interval.hi < b);
        }
    }
}
