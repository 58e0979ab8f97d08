//! Printed real-root values, reproduced by exact isolation and bisection.
//!
//! A value printed with `k` decimals is accepted when the isolating interval
//! of the matching root lies within `5·10^-k` of it, which covers both
//! truncation and rounding. Values printed without decimals are checked as
//! exact roots.

use num_traits::{Signed, Zero};

use super::families::printed::{delta_flat, delta_sharp, r_delta, r_sharp, rt1, rt2, rw1, rw2, unit_quadratic};
use super::families::{a4_star, a5_star, h_star};
use super::{Assertion, CheckResult, Tolerance};
use crate::polycore::rational::{int, parse_rational, rat, to_decimal};
use crate::polycore::{Poly, Rational};
use crate::rootcount::{real_roots, IsolatingInterval, RealRoot};

/// A polynomial and the real roots printed for it, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitClaim {
    pub context: String,
    pub poly: Poly,
    /// Every real root, as printed; empty when none are claimed to exist.
    pub claimed: Vec<String>,
}

fn claim(context: &str, poly: Poly, claimed: &[&str]) -> DigitClaim {
    DigitClaim { context: context.to_string(), poly, claimed: claimed.iter().map(|s| s.to_string()).collect() }
}

fn lead(c: &[i64]) -> Poly {
    Poly::from_leading_ints(c)
}

pub fn digit_claims() -> Vec<DigitClaim> {
    let a50 = &Poly::monomial(rat(3, 2), 3) + &lead(&[-9, 16, -12]);
    let a6_dagger = &lead(&[-5, 5]) * &lead(&[4, -9, 1]);
    let (h, a5, a4) = (h_star(), a5_star(), a4_star());
    vec![
        claim("a30 = -2t^3 + 20t^2 - 50t + 40", lead(&[-2, 20, -50, 40]), &["6.7245"]),
        claim("a42 = t^2 - 10t + 10", lead(&[1, -10, 10]), &["1.127", "8.872"]),
        claim("a40 = -10t^3 + 55t^2 - 100t + 45", lead(&[-10, 55, -100, 45]), &["0.662"]),
        claim("a6* = 10t^2 - 20t + 5", lead(&[10, -20, 5]), &["0.293", "1.707"]),
        claim("a6† = -5(t - 1)(4t^2 - 9t + 1)", a6_dagger, &["0.117", "1", "2.133"]),
        claim("sign thresholds of a8/t: (5t - 2)(5 - 2t)", &lead(&[5, -2]) * &lead(&[-2, 5]), &["2/5", "5/2"]),
        claim("C = 6w^5 - 40w^4 + 85w^3 - 54w^2 + 32w - 8", lead(&[6, -40, 85, -54, 32, -8]), &["0.368"]),
        claim("a50 = (3/2)w^3 - 9w^2 + 16w - 12", a50, &["3.703"]),
        claim("7w^3 - 14w^2 + 21w - 8", lead(&[7, -14, 21, -8]), &["0.510"]),
        claim("D = 8w^5 - 32w^4 + 54w^3 - 85w^2 + 40w - 6", lead(&[8, -32, 54, -85, 40, -6]), &["2.719"]),
        claim("2t^2 - 3t + 2", lead(&[2, -3, 2]), &[]),
        claim("2t^2 + t + 2", lead(&[2, 1, 2]), &[]),
        claim("H* on t = 2/3", h.eval_main(&rat(2, 3)), &["-5/24"]),
        claim("Rw1", rw1(), &["-2.56", "-0.30", "1.18"]),
        claim("Rw2", rw2(), &["0.34", "1.16"]),
        claim("a5* on w = 0", a5.eval_secondary(&int(0)), &["-5.55", "0", "1.18"]),
        claim("R♯", r_sharp(), &["-0.09", "0.37"]),
        claim("w^2 - w + 1", unit_quadratic(), &[]),
        claim("Rt1", rt1(), &[]),
        claim("Rt2", rt2(), &["-19.61", "1.81"]),
        claim("w^2 + 2w - 6", lead(&[1, 2, -6]), &["-3.64", "1.64"]),
        claim("a5* on w = 4, roots t1 < t2 < t3", a5.eval_secondary(&int(4)), &["-3.3", "-0.8", "0.3"]),
        claim("H* on w = 4, roots t- < t+", h.eval_secondary(&int(4)), &["-1.6", "0.2"]),
        claim("Δb", delta_flat(), &[]),
        claim("Δ♯", delta_sharp(), &["-7.72", "2.56"]),
        claim("a4* on w = 0", a4.eval_secondary(&int(0)), &[]),
        claim("a4* on t = 0", a4.eval_main(&int(0)), &["-18.1", "2.5"]),
        claim("RΔ", r_delta(), &["-10.90", "2.68"]),
        claim("H* on w = 4, roots h- < h+", h.eval_secondary(&int(4)), &["-1.63", "0.22"]),
        claim("a4* on w = 4, roots A- < A+", a4.eval_secondary(&int(4)), &["-1.26", "0.85"]),
    ]
}

/// Decimals after the point, or `None` for a value printed exactly.
fn printed_decimals(text: &str) -> Option<usize> {
    text.split_once('.').map(|(_, frac)| frac.len())
}

fn check_claim(r: &mut CheckResult, c: &DigitClaim) {
    let roots = match real_roots(&c.poly) {
        Ok(roots) => roots,
        Err(e) => {
            r.holds(format!("{}: real roots", c.context), false, "isolated", e.to_string());
            return;
        }
    };
    let count_ok = r.holds(
        format!("{}: number of distinct real roots", c.context),
        roots.len() == c.claimed.len(),
        &c.claimed.len().to_string(),
        roots.len().to_string(),
    );
    if !count_ok {
        return;
    }
    for (root, text) in roots.iter().zip(&c.claimed) {
        let value = parse_rational(text).expect("printed values parse");
        let label = format!("{}: root {text}", c.context);
        match printed_decimals(text) {
            None => {
                let exact = c.poly.eval(&value).is_zero();
                r.holds(label, exact, text, if exact { text.clone() } else { "not a root".into() });
            }
            Some(k) => {
                let tol = rat(5, 1) / Rational::from_integer(num_traits::pow(10.into(), k));
                let iv = root.refined(&(&tol / int(8)));
                let far = (&iv.lo - &value).abs().max((&iv.hi - &value).abs());
                r.push(Assertion {
                    label,
                    expected: text.clone(),
                    computed: to_decimal(&iv.midpoint(), k + 3),
                    tolerance: Tolerance::Abs(tol.clone()),
                    passed: far <= tol,
                    note: None,
                });
            }
        }
    }
}

/// Refines two root lists until every interval is disjoint from the others,
/// then reports the merged order as labels.
fn interleave(a: &[RealRoot], b: &[RealRoot], names_a: &[&str], names_b: &[&str]) -> Option<Vec<String>> {
    let mut width = rat(1, 1 << 10);
    for _ in 0..8 {
        let mut all: Vec<(IsolatingInterval, &str)> = a
            .iter()
            .zip(names_a)
            .chain(b.iter().zip(names_b))
            .map(|(root, name)| (root.refined(&width), *name))
            .collect();
        all.sort_by(|x, y| x.0.lo.cmp(&y.0.lo));
        if all.windows(2).all(|w| w[0].0.hi < w[1].0.lo) {
            return Some(all.into_iter().map(|(_, n)| n.to_string()).collect());
        }
        width /= int(1 << 10);
    }
    None
}

fn check_order(r: &mut CheckResult, label: &str, a: &Poly, b: &Poly, names: (&[&str], &[&str]), expected: &[&str]) {
    let (Ok(ra), Ok(rb)) = (real_roots(a), real_roots(b)) else {
        r.holds(label, false, &expected.join(" < "), "roots not isolated");
        return;
    };
    if ra.len() != names.0.len() || rb.len() != names.1.len() {
        r.holds(label, false, &expected.join(" < "), format!("{} and {} real roots", ra.len(), rb.len()));
        return;
    }
    let order = interleave(&ra, &rb, names.0, names.1);
    let seen = order.as_ref().map(|o| o.join(" < ")).unwrap_or_else(|| "roots not separated".into());
    r.holds(label, order.is_some_and(|o| o == expected), &expected.join(" < "), seen);
}

pub fn check_root_digits() -> CheckResult {
    let mut r = CheckResult::new("check_root_digits");
    r.note("tolerance 5·10^-k for k printed decimals; values printed without decimals are exact roots");
    for c in digit_claims() {
        check_claim(&mut r, &c);
    }
    let (h, a5, a4) = (h_star(), a5_star(), a4_star());
    let w4 = int(4);
    check_order(
        &mut r,
        "w = 4: roots of a5* and H* interleave strictly",
        &a5.eval_secondary(&w4),
        &h.eval_secondary(&w4),
        (&["t1", "t2", "t3"], &["t-", "t+"]),
        &["t1", "t-", "t2", "t+", "t3"],
    );
    check_order(
        &mut r,
        "w = 4: roots of H* and a4* interleave strictly",
        &h.eval_secondary(&w4),
        &a4.eval_secondary(&w4),
        (&["h-", "h+"], &["A-", "A+"]),
        &["h-", "A-", "h+", "A+"],
    );
    r
}
