//! Randomized sign-chain properties on sampled polynomials.

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::families::{minus, plus};
use super::{check_rng, nonzero, positive, CheckResult};
use crate::polycore::rational::{format_rational, int, rat, signum};
use crate::polycore::{Poly, Rational};
use crate::rootcount::root_report;
use crate::signs::{sign_pattern_of, SignPattern};

fn coefficient_signs(p: &Poly) -> Vec<i8> {
    p.coeffs().iter().rev().map(signum).collect()
}

fn sign_text(signs: &[i8]) -> String {
    signs.iter().map(|s| match s { 1 => '+', -1 => '-', _ => '0' }).collect()
}

/// Sign changes along the coefficient sequence, zeros skipped.
fn sign_changes(signs: &[i8]) -> usize {
    let nonzero: Vec<i8> = signs.iter().copied().filter(|&s| s != 0).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}

pub fn check_sign_chains(seed: u64, samples: usize) -> CheckResult {
    let name = "check_sign_chains";
    let mut r = CheckResult::new(name);
    let mut rng = check_rng(seed, name);
    r.note(format!("{samples} samples per property"));
    for _ in 0..samples.max(1) {
        two_positive_roots_quartic(&mut r, &mut rng);
        one_sign_change_chain(&mut r, &mut rng);
        hyperbolic_properties(&mut r, &mut rng);
    }
    two_distinct_roots_line(&mut r, &mut rng, samples.max(1));
    r
}

/// A monic quartic with pattern `++-++` and two simple positive roots
/// `u < v` has two negative roots, and is negative at `−(u+v)/2`.
fn two_positive_roots_quartic(r: &mut CheckResult, rng: &mut ChaCha8Rng) {
    let (u, v) = loop {
        let (a, b) = (positive(rng), positive(rng));
        if a != b {
            break (a, b);
        }
    };
    let sum = &u + &v;
    let prod = &u * &v;
    // Coefficients of (x−u)(x−v)(x^2+px+q): p > u+v, 0 < q < min(p(u+v) − uv, uvp/(u+v)).
    let p = &sum + positive(rng);
    let cap = (&p * &sum - &prod).min(&prod * &p / &sum);
    let q = &cap * rat(rng.gen_range(1..=99), 100);
    let quartic = &(&minus(&u) * &minus(&v)) * &Poly::from_coeffs(vec![q.clone(), p.clone(), Rational::one()]);
    let label = format!("u={}, v={}, p={}, q={}", format_rational(&u), format_rational(&v), format_rational(&p), format_rational(&q));
    let signs = coefficient_signs(&quartic);
    if !r.holds(format!("sampled quartic has pattern ++-++ at {label}"), signs == [1, 1, -1, 1, 1], "++-++", sign_text(&signs)) {
        return;
    }
    match root_report(&quartic) {
        Ok(rep) => {
            let simple = rep.real_roots_simple();
            r.holds(
                format!("two simple negative roots at {label}"),
                rep.neg_mult == 2 && rep.pos_mult == 2 && simple,
                "pos 2, neg 2, simple",
                format!("pos {}, neg {}, simple {simple}", rep.pos_mult, rep.neg_mult),
            );
        }
        Err(e) => {
            r.holds(format!("root report at {label}"), false, "report", e.to_string());
        }
    }
    let mid = quartic.eval(&(-&sum / int(2)));
    r.holds(format!("value at −(u+v)/2 is negative at {label}"), mid.is_negative(), "< 0", format_rational(&mid));
}

/// `P1 (x − w) (x^2 + β1 x + β0)` with `P1` having six negative roots, `w > 0`,
/// `β1 ≥ 0`, `β1^2 < 4β0`: never the pattern `+----++++-`; and when `γ6 < 0`,
/// every `γj < 0` and `a2, a3, a4 < 0`.
fn one_sign_change_chain(r: &mut CheckResult, rng: &mut ChaCha8Rng) {
    let roots: Vec<Rational> = (0..6).map(|_| positive(rng)).collect();
    let sum: Rational = roots.iter().sum();
    // Half of the samples put w beyond Σ roots so that γ6 = Σ − w < 0.
    let w = if rng.gen() { &sum + positive(rng) } else { positive(rng) };
    let beta1 = if rng.gen_range(0..5) == 0 { Rational::zero() } else { positive(rng) };
    let beta0 = &beta1 * &beta1 / int(4) + positive(rng);
    let p1 = roots.iter().fold(Poly::one(), |acc, z| &acc * &plus(z));
    let gamma = &p1 * &minus(&w);
    let p = &gamma * &Poly::from_coeffs(vec![beta0.clone(), beta1.clone(), Rational::one()]);
    let label = format!(
        "roots -({}), w={}, β1={}, β0={}",
        roots.iter().map(format_rational).collect::<Vec<_>>().join(", "),
        format_rational(&w),
        format_rational(&beta1),
        format_rational(&beta0)
    );

    let sigma0: SignPattern = "+----++++-".parse().expect("valid pattern");
    let pattern = sign_pattern_of(&p);
    let is_sigma0 = pattern.as_ref().is_ok_and(|s| s == &sigma0);
    let seen = pattern.map(|s| s.to_string()).unwrap_or_else(|e| e.to_string());
    r.holds(format!("pattern differs from +----++++- at {label}"), !is_sigma0, "not +----++++-", seen);

    let gs = coefficient_signs(&gamma);
    r.holds(format!("P1(x−w) has one sign change at {label}"), sign_changes(&gs) == 1, "1", sign_changes(&gs).to_string());
    if gamma.coeff(6).is_negative() {
        let all_negative = (0..=6).all(|j| gamma.coeff(j).is_negative());
        r.holds(format!("γ6 < 0 forces γ0..γ6 < 0 at {label}"), all_negative, "all negative", sign_text(&gs));
        let a234 = [p.coeff(2), p.coeff(3), p.coeff(4)];
        let ok = a234.iter().all(Signed::is_negative);
        let seen = a234.iter().map(format_rational).collect::<Vec<_>>().join(", ");
        r.holds(format!("a2, a3, a4 < 0 at {label}"), ok, "all negative", seen);
    }
}

/// Products of real linear factors with no zero root: no two consecutive
/// zero coefficients, zeros flanked by opposite signs, and root counts equal
/// to sign changes of `P(x)` and `P(−x)`.
fn hyperbolic_properties(r: &mut CheckResult, rng: &mut ChaCha8Rng) {
    let degree = rng.gen_range(2..=9);
    let mut roots: Vec<Rational> = Vec::with_capacity(degree);
    while roots.len() < degree {
        let z = nonzero(rng);
        match rng.gen_range(0..4) {
            // Symmetric pairs make vanishing coefficients likely.
            0 if roots.len() + 2 <= degree => {
                roots.push(z.clone());
                roots.push(-z);
            }
            1 if !roots.is_empty() => {
                let again = roots[rng.gen_range(0..roots.len())].clone();
                roots.push(again);
            }
            _ => roots.push(z),
        }
    }
    let p = roots.iter().fold(Poly::one(), |acc, z| &acc * &minus(z));
    let label = format!("roots ({})", roots.iter().map(format_rational).collect::<Vec<_>>().join(", "));
    let signs = coefficient_signs(&p);
    let text = sign_text(&signs);

    let double_zero = signs.windows(2).any(|w| w == [0, 0]);
    r.holds(format!("no two consecutive zero coefficients at {label}"), !double_zero, "none", text.clone());
    let flanked = signs.windows(3).all(|w| w[1] != 0 || w[0] == -w[2]);
    r.holds(format!("zero coefficients flanked by opposite signs at {label}"), flanked, "opposite neighbours", text.clone());

    let pos = roots.iter().filter(|z| z.is_positive()).count();
    let neg = roots.len() - pos;
    let changes = sign_changes(&signs);
    let mirrored = sign_changes(&coefficient_signs(&p.negate_variable()));
    r.holds(format!("positive roots = sign changes at {label}"), pos == changes, &pos.to_string(), changes.to_string());
    r.holds(format!("negative roots = sign changes of P(−x) at {label}"), neg == mirrored, &neg.to_string(), mirrored.to_string());
}

/// `(x+u)^6 (x−w)^3`: `a8 = 6u − 3w`, `a1 = 3u^5 w^2 (u − 2w)`, and on the
/// line `6u − 3w = −1`, `u − 2w = (−9w − 1)/6`, negative for `w > 0`.
fn two_distinct_roots_line(r: &mut CheckResult, rng: &mut ChaCha8Rng, samples: usize) {
    // u(w) = (3w − 1)/6 as a polynomial in w.
    let u_of_w = Poly::from_coeffs(vec![rat(-1, 6), rat(1, 2)]);
    let diff = &u_of_w - &Poly::from_coeffs(vec![int(0), int(2)]);
    r.exact_poly("u − 2w on the line 6u − 3w = −1", &Poly::from_coeffs(vec![rat(-1, 6), rat(-3, 2)]), &diff);
    for _ in 0..samples {
        let w = rat(1, 3) + positive(rng);
        let u = u_of_w.eval(&w);
        let p = &plus(&u).pow(6) * &minus(&w).pow(3);
        let label = format!("u={}, w={}", format_rational(&u), format_rational(&w));
        r.exact(format!("a8 = 6u − 3w at {label}"), &int(-1), &p.coeff(8));
        let a1 = p.coeff(1);
        r.exact(format!("a1 = 3u^5 w^2 (u − 2w) at {label}"), &(int(3) * u.pow(5) * &w * &w * (&u - int(2) * &w)), &a1);
        r.holds(format!("a1 < 0 on the line at {label}"), a1.is_negative(), "< 0", format_rational(&a1));
    }
}
