//! Exact identity checks at seeded rational points: the triple-root
//! identity for `a1`, Jacobian determinants in closed form, and the
//! coefficient formulas of the parametrized families.

use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::families::{
    a4_star, a5_star, eval_terms, five_one_family, four_two_family, h_star, jacobian, linear, minus, partial, plus,
    product, s0, three_three_family, Factor,
};
use super::{check_rng, nonzero, positive, CheckResult};
use crate::polycore::linalg::{determinant, rank};
use crate::polycore::rational::{format_rational, int, rat};
use crate::polycore::{Poly, Rational};

/// `name = value` pairs for labels, so a failing sample is reproducible.
fn at(vars: &[(&str, &Rational)]) -> String {
    let parts: Vec<String> = vars.iter().map(|(n, v)| format!("{n}={}", format_rational(v))).collect();
    format!("({})", parts.join(", "))
}

/// `27 a1 = −(−3∏u + X + Y)(Σu + 1)^2` for `P = ∏(x+u_i) (x−ξ*)^3`,
/// `ξ* = (Σu + 1)/3`, with `Ξ = −3∏u + X + Y > 0` and `a1 < 0`.
pub fn check_identity_lemma10(seed: u64, points: usize) -> CheckResult {
    let name = "check_identity_lemma10";
    let mut r = CheckResult::new(name);
    let mut rng = check_rng(seed, name);
    r.note(format!("{points} points in six positive variables; the identity has degree 8"));
    for k in 0..points.max(1) {
        let us: Vec<Rational> = if k == 0 { vec![int(1); 6] } else { (0..6).map(|_| positive(&mut rng)).collect() };
        let sum: Rational = us.iter().sum();
        let xi = (&sum + int(1)) / int(3);
        let p = us.iter().fold(minus(&xi).pow(3), |acc, u| &acc * &plus(u));
        let a1 = p.coeff(1);

        let prod: Rational = us.iter().product();
        let y = &prod * us.iter().map(|u| u.recip()).sum::<Rational>();
        let mut x = Rational::zero();
        for (i, ui) in us.iter().enumerate() {
            for (j, uj) in us.iter().enumerate() {
                if i != j {
                    x += ui / uj;
                }
            }
        }
        x *= &prod;
        let big_xi = int(-3) * &prod + x + y;
        let rhs = -(&big_xi) * (&sum + int(1)).pow(2);

        let point = format!("u=({})", us.iter().map(format_rational).collect::<Vec<_>>().join(", "));
        r.exact(format!("27·a1 identity at {point}"), &rhs, &(int(27) * &a1));
        r.holds(format!("Ξ > 0 at {point}"), big_xi.is_positive(), "> 0", format_rational(&big_xi));
        r.holds(format!("a1 < 0 at {point}"), a1.is_negative(), "< 0", format_rational(&a1));
    }
    r
}

/// Determinants of the coefficient Jacobians of three families, compared
/// with their printed factored forms.
pub fn check_jacobians(seed: u64, points: usize) -> CheckResult {
    let name = "check_jacobians";
    let mut r = CheckResult::new(name);
    let mut rng = check_rng(seed, name);
    r.note(format!("{points} points per family; partial derivatives taken on the factored form"));
    for _ in 0..points.max(1) {
        double_pair_family(&mut r, &mut rng);
        quadruple_family(&mut r, &mut rng);
    }
    for k in 0..points.max(1) {
        let (u, w, xi) = if k == 0 { (int(1), int(2), int(3)) } else { (positive(&mut rng), positive(&mut rng), positive(&mut rng)) };
        sextuple_family(&mut r, &u, &w, &xi);
    }
    r
}

/// A point of the families `(x+u)^2(x+v)^2 S Δ` and `(x+u)^4 S Δ`, with
/// `Δ = (x^2 − ξx + η)(x − w)`, `S = x^2 + Ax + B`, all positive and
/// `ξ^2 < 4η`.
struct ComplexPairPoint {
    a: Rational,
    b: Rational,
    u: Rational,
    v: Rational,
    w: Rational,
    xi: Rational,
    eta: Rational,
}

impl ComplexPairPoint {
    fn sample(rng: &mut ChaCha8Rng) -> Self {
        let xi = positive(rng);
        let eta = &xi * &xi / int(4) + positive(rng);
        Self { a: positive(rng), b: positive(rng), u: positive(rng), v: positive(rng), w: positive(rng), xi, eta }
    }

    /// Factors with parameters ordered `(ξ, η, w, u)`; `v_mult` is 0 for
    /// the quadruple-root family.
    fn factors(&self, u_mult: u32, v_mult: u32) -> Vec<Factor> {
        let q = Poly::from_coeffs(vec![self.eta.clone(), -&self.xi, Rational::one()]);
        let s = Poly::from_coeffs(vec![self.b.clone(), self.a.clone(), Rational::one()]);
        vec![
            Factor { poly: q, mult: 1, grad: vec![-Poly::x(), Poly::one(), Poly::zero(), Poly::zero()] },
            Factor::moving(minus(&self.w), 1, 4, 2, -Poly::one()),
            Factor::moving(plus(&self.u), u_mult, 4, 3, Poly::one()),
            Factor::fixed(plus(&self.v), v_mult, 4),
            Factor::fixed(s, 1, 4),
        ]
    }

    /// `(ξu + η + u^2)(−η − w^2 + wξ)(w + u)`, shared by both closed forms.
    fn common(&self) -> Rational {
        let (u, w, xi, eta) = (&self.u, &self.w, &self.xi, &self.eta);
        (xi * u + eta + u * u) * (-eta - w * w + w * xi) * (w + u)
    }

    fn label(&self) -> String {
        at(&[("A", &self.a), ("B", &self.b), ("u", &self.u), ("v", &self.v), ("w", &self.w), ("ξ", &self.xi), ("η", &self.eta)])
    }
}

fn double_pair_family(r: &mut CheckResult, rng: &mut ChaCha8Rng) {
    let p = ComplexPairPoint::sample(rng);
    let f = p.factors(2, 2);
    let pi = int(-2) * &p.v * p.common();
    let vars = [&p.a, &p.b, &p.u, &p.v];
    let j1 = eval_terms(
        &[
            (1, [2, 0, 2, 1]),
            (2, [2, 0, 1, 2]),
            (2, [1, 0, 2, 2]),
            (1, [1, 0, 1, 3]),
            (2, [1, 1, 2, 0]),
            (5, [1, 1, 1, 1]),
            (2, [1, 1, 0, 2]),
            (3, [0, 1, 2, 1]),
            (2, [0, 1, 1, 2]),
            (1, [0, 1, 0, 3]),
            (2, [0, 2, 1, 0]),
            (1, [0, 2, 0, 1]),
        ],
        vars,
    ) * &pi;
    let j2 = eval_terms(
        &[
            (1, [2, 0, 1, 1]),
            (1, [1, 0, 2, 1]),
            (2, [1, 0, 1, 2]),
            (2, [1, 1, 1, 0]),
            (1, [1, 1, 0, 1]),
            (2, [0, 1, 2, 0]),
            (4, [0, 1, 1, 1]),
            (2, [0, 1, 0, 2]),
        ],
        vars,
    ) * &pi;
    let label = p.label();
    r.exact(format!("(x+u)^2(x+v)^2 family det J1 at {label}"), &j1, &determinant(jacobian(&f, 4, &[8, 7, 1, 4])));
    r.exact(format!("(x+u)^2(x+v)^2 family det J2 at {label}"), &j2, &determinant(jacobian(&f, 4, &[8, 7, 1, 5])));
}

fn quadruple_family(r: &mut CheckResult, rng: &mut ChaCha8Rng) {
    let p = ComplexPairPoint::sample(rng);
    let f = p.factors(4, 0);
    let m = int(-4) * &p.u * &p.u * p.common();
    let vars = [&p.a, &p.b, &p.u];
    let j1 = eval_terms(&[(3, [2, 0, 2]), (3, [1, 0, 3]), (9, [1, 1, 1]), (6, [0, 1, 2]), (3, [0, 2, 0])], vars) * &m;
    let j2 = eval_terms(&[(1, [2, 0, 1]), (3, [1, 0, 2]), (3, [1, 1, 0]), (8, [0, 1, 1])], vars) * &m;
    let label = p.label();
    r.exact(format!("(x+u)^4 family det J1 at {label}"), &j1, &determinant(jacobian(&f, 4, &[8, 7, 1, 4])));
    r.exact(format!("(x+u)^4 family det J2 at {label}"), &j2, &determinant(jacobian(&f, 4, &[8, 7, 1, 5])));
}

/// `(x+u)^6 (x−w)^2 (x−ξ)`, parameters `(u, w, ξ)`.
fn sextuple_factors(u: &Rational, w: &Rational, xi: &Rational) -> Vec<Factor> {
    vec![
        Factor::moving(plus(u), 6, 3, 0, Poly::one()),
        Factor::moving(minus(w), 2, 3, 1, -Poly::one()),
        Factor::moving(minus(xi), 1, 3, 2, -Poly::one()),
    ]
}

fn sextuple_family(r: &mut CheckResult, u: &Rational, w: &Rational, xi: &Rational) {
    let f = sextuple_factors(u, w, xi);
    let common = (u + w) * (xi - w) * (xi + u);
    let printed = [
        (1, int(-12) * u.pow(4) * (u - int(5) * w) * &common),
        (4, int(-60) * u * (int(2) * u - w) * &common),
        (5, int(-12) * u * (int(5) * u - w) * &common),
    ];
    let label = at(&[("u", u), ("w", w), ("ξ", xi)]);
    for (j, expected) in printed {
        let computed = determinant(jacobian(&f, 3, &[8, 7, j]));
        r.exact(format!("(x+u)^6(x-w)^2(x-ξ) det J{j}* at {label}"), &expected, &computed);
    }
}

/// Coefficient formulas of the (5,1), (4,2) and (3,3) families, the
/// quartic cofactors of the rank arguments, and the degenerate lines of the
/// sextuple-root family.
pub fn check_case_formulas(seed: u64, points: usize) -> CheckResult {
    let name = "check_case_formulas";
    let mut r = CheckResult::new(name);
    let mut rng = check_rng(seed, name);
    r.note(format!("{points} points per formula group"));
    fixed_restrictions(&mut r);
    for _ in 0..points.max(1) {
        five_one(&mut r, &mut rng);
        four_two(&mut r, &mut rng);
        three_three(&mut r, &mut rng);
        quartic_cofactors(&mut r, &mut rng);
        degenerate_lines(&mut r, &mut rng);
        rank_arguments(&mut r, &mut rng);
    }
    r
}

/// `c_2 X^2 + c_1 X + c_0` at `X`.
fn quad(c2: &Rational, c1: &Rational, c0: &Rational, x: &Rational) -> Rational {
    c2 * x * x + c1 * x + c0
}

fn five_one(r: &mut CheckResult, rng: &mut ChaCha8Rng) {
    let t = positive(rng);
    let mut w = positive(rng);
    if &w + int(2) * &t - int(5) <= Rational::zero() {
        w += int(5);
    }
    let s = &w + int(2) * &t - int(5);
    let label = at(&[("t", &t), ("w", &w)]);

    let free_s = positive(rng);
    let a1 = five_one_family(&free_s, &t, &w).coeff(1);
    r.exact(format!("(5,1) a1 = w + 2t − s − 5 at {label}, s={}", free_s), &(&w + int(2) * &t - &free_s - int(5)), &a1);

    let p = five_one_family(&s, &t, &w);
    r.exact(format!("(5,1) a1 = 0 on s = w + 2t − 5 at {label}"), &Rational::zero(), &p.coeff(1));
    let tp = |c: &[i64]| Poly::from_leading_ints(c).eval(&t);
    let (a32, a31, a30) = (tp(&[-2, 5]), -tp(&[2, -5]).pow(2), tp(&[-2, 20, -50, 40]));
    let (a42, a41, a40) = (tp(&[1, -10, 10]), tp(&[2, -25, 70, -50]), tp(&[-10, 55, -100, 45]));
    r.exact(format!("(5,1) a3 quadratic in w at {label}"), &quad(&a32, &a31, &a30, &w), &p.coeff(3));
    r.exact(format!("(5,1) a4 quadratic in w at {label}"), &quad(&a42, &a41, &a40, &w), &p.coeff(4));
    r.exact(format!("(5,1) a41 = (2t − 5)a42 at {label}"), &(tp(&[2, -5]) * &a42), &a41);
    r.exact(format!("(5,1) a4 = s w a42 + a40 at {label}"), &(&s * &w * &a42 + &a40), &p.coeff(4));
    r.exact(format!("(5,1) a32 w^2 + a31 w = w(5 − 2t)s at {label}"), &(&w * tp(&[-2, 5]) * &s), &(quad(&a32, &a31, &Rational::zero(), &w)));
    let a8_over_t = p.coeff(8) / &t;
    let expanded = eval_terms(&[(10, [2, 1]), (5, [1, 2]), (-2, [2, 0]), (-29, [1, 1]), (-2, [0, 2]), (5, [1, 0]), (10, [0, 1])], [&t, &w]);
    r.exact(format!("(5,1) a8/t expanded at {label}"), &expanded, &a8_over_t);
    r.exact(format!("(5,1) a8/t = (5t − 2)ws + t(5 − 2t) at {label}"), &(tp(&[5, -2]) * &w * &s + &t * tp(&[-2, 5])), &a8_over_t);
    let a6_star = tp(&[10, -20, 5]);
    let a6_dagger = int(-5) * (&t - int(1)) * tp(&[4, -9, 1]);
    r.exact(format!("(5,1) a6 = a6* w s + a6† at {label}"), &(a6_star * &w * &s + a6_dagger), &p.coeff(6));
}

fn four_two(r: &mut CheckResult, rng: &mut ChaCha8Rng) {
    let (big_t, w) = (positive(rng), positive(rng));
    let label = at(&[("T", &big_t), ("w", &w)]);
    let free_s = nonzero(rng);
    r.exact(
        format!("(4,2) a1 = w + 2S − 4 at {label}, S={}", free_s),
        &(&w + int(2) * &free_s - int(4)),
        &four_two_family(&big_t, &free_s, &w).coeff(1),
    );

    let big_s = (int(4) - &w) / int(2);
    let wp = |c: &[i64]| Poly::from_leading_ints(c).eval(&w);
    let p = four_two_family(&big_t, &big_s, &w);
    r.exact(format!("(4,2) a1 = 0 on S = (4 − w)/2 at {label}"), &Rational::zero(), &p.coeff(1));
    r.exact(format!("(4,2) a8/T at {label}"), &(wp(&[4, -1]) * &big_t + wp(&[-1, 4, 0])), &(p.coeff(8) / &big_t));
    let (a52, a51) = (wp(&[1, -4]), wp(&[-4, 10, -16]));
    let a50 = rat(3, 2) * w.pow(3) + wp(&[-9, 16, -12]);
    r.exact(format!("(4,2) a5 quadratic in T at {label}"), &quad(&a52, &a51, &a50, &big_t), &p.coeff(5));

    // Derivatives in T, structurally: the quadratic factor has ∂/∂T = x^2.
    let quad_factor = Poly::from_coeffs(vec![int(-1), big_s.clone(), big_t.clone()]);
    let f = [
        Factor::fixed(plus(&Rational::one()), 4, 1),
        Factor::moving(quad_factor, 2, 1, 0, Poly::monomial(Rational::one(), 2)),
        Factor::fixed(linear(&w, &int(-1)), 1, 1),
    ];
    let d = partial(&f, 0);
    r.exact(format!("(4,2) ∂a5/∂T at {label}"), &(wp(&[2, -8]) * &big_t + &a51), &d.coeff(5));
    r.exact(format!("(4,2) ∂a4/∂T at {label}"), &(-(&w * &w) - int(2) * &big_t - int(4)), &d.coeff(4));

    if w != rat(1, 4) {
        let den = wp(&[4, -1]);
        let t0 = wp(&[1, -4, 0]) / &den;
        let at_t0 = four_two_family(&t0, &big_s, &w);
        let c = wp(&[6, -40, 85, -54, 32, -8]);
        let dd = wp(&[8, -32, 54, -85, 40, -6]);
        let sq = int(2) * &den * &den;
        r.exact(format!("(4,2) a5 at T0 = 3C/2(4w−1)^2, w={}", w), &(int(3) * c / &sq), &at_t0.coeff(5));
        r.exact(format!("(4,2) a4 at T0 = 3D/2(4w−1)^2, w={}", w), &(int(3) * dd / &sq), &at_t0.coeff(4));
        let slope = wp(&[2, -8]) * &t0 + &a51;
        r.exact(format!("(4,2) ∂a5/∂T at T0, w={}", w), &(int(-2) * wp(&[7, -14, 21, -8]) / &den), &slope);
    }
}

fn three_three(r: &mut CheckResult, rng: &mut ChaCha8Rng) {
    let t = positive(rng);
    let mut w = positive(rng);
    if s0(&t, &w) <= Rational::zero() {
        w += int(3);
    }
    let label = at(&[("t", &t), ("w", &w)]);
    let free_s = positive(rng);
    r.exact(
        format!("(3,3) a1 = w + 2t − 3s − 3 at {label}, s={}", free_s),
        &(&w + int(2) * &t - int(3) * &free_s - int(3)),
        &three_three_family(&free_s, &t, &w).coeff(1),
    );
    let p = three_three_family(&s0(&t, &w), &t, &w);
    let h = h_star().eval(&t, &w);
    r.exact(format!("(3,3) a1 = 0 on s = s0 at {label}"), &Rational::zero(), &p.coeff(1));
    r.exact(format!("(3,3) 27 a8 = t(w + 2t − 3)^2 H* at {label}"), &(&t * (&w + int(2) * &t - int(3)).pow(2) * &h), &(int(27) * p.coeff(8)));
    r.exact(format!("(3,3) printed a5* = 27 a5 on s = s0 at {label}"), &a5_star().eval(&t, &w), &(int(27) * p.coeff(5)));
    r.exact(format!("(3,3) printed a4* = 27 a4 on s = s0 at {label}"), &a4_star().eval(&t, &w), &(int(27) * p.coeff(4)));
    let tp = |c: &[i64]| Poly::from_leading_ints(c).eval(&t);
    let b0 = int(-2) * &t * (&t - rat(3, 2));
    r.exact(format!("H* = b2 w^2 + b1 w + b0 at {label}"), &quad(&tp(&[3, -2]), &tp(&[6, -5, 6]), &b0, &w), &h);
    let wp = |c: &[i64]| Poly::from_leading_ints(c).eval(&w);
    let c0 = int(-2) * &w * (&w - int(3));
    r.exact(format!("H* = c2 t^2 + c1 t + c0 at {label}"), &quad(&wp(&[6, -2]), &wp(&[3, -5, 3]), &c0, &t), &h);
}

/// Identities in one variable on fixed lines, checked as polynomials.
fn fixed_restrictions(r: &mut CheckResult) {
    let (h, a5, a4) = (h_star(), a5_star(), a4_star());
    let lead = |c: &[i64]| Poly::from_leading_ints(c);
    let frac = |c: &[Rational]| Poly::from_coeffs(c.iter().rev().cloned().collect());

    r.exact_poly("H* on w = 1/3", &frac(&[rat(5, 3), rat(16, 9)]), &h.eval_secondary(&rat(1, 3)));
    r.exact_poly("H* on w = 0 is b0 = −2t(t − 3/2)", &lead(&[-2, 3, 0]), &h.eval_secondary(&int(0)));
    r.exact_poly("H* on w = 3 is t(16t + 15)", &lead(&[16, 15, 0]), &h.eval_secondary(&int(3)));
    r.exact_poly("H* on t = 2/3", &frac(&[rat(16, 3), rat(10, 9)]), &h.eval_main(&rat(2, 3)));
    r.exact_poly("a5* on w = 0", &(&lead(&[-4, 0]) * &lead(&[2, 6, -21, 36, -27])), &a5.eval_secondary(&int(0)));
    r.exact_poly(
        "a5* on t = 3/2",
        &frac(&[int(-30), rat(-45, 2), int(0), rat(-243, 4)]),
        &a5.eval_main(&rat(3, 2)),
    );
    r.exact_poly("a5* on t = 2", &lead(&[-1, -43, -60, -22, -328]), &a5.eval_main(&int(2)));
    r.exact_poly("a5* on w = 3", &(&lead(&[-4, 0, 0]) * &lead(&[2, 0, 15, 90])), &a5.eval_secondary(&int(3)));
    r.exact_poly("a5* leading coefficient in t", &lead(&[-8]), &a5.coeff(5));
    r.exact_poly(
        "a5* constant term in t is 3w(w − 3)(w^2 + 2w − 6)",
        &(&(&lead(&[3, 0]) * &lead(&[1, -3])) * &lead(&[1, 2, -6])),
        &a5.eval_main(&int(0)),
    );
    r.exact_poly("a4* on w = 0", &lead(&[-20, 66, -135, 108, -81]), &a4.eval_secondary(&int(0)));
    r.exact_poly("a4* on t = 0", &lead(&[1, 15, -54, 54, -81]), &a4.eval_main(&int(0)));
    r.exact_poly("a4* leading coefficient in t", &lead(&[-20]), &a4.coeff(4));

    let four_two_w = rat(1, 4);
    let big_s = (int(4) - &four_two_w) / int(2);
    let p = four_two_family(&int(1), &big_s, &four_two_w);
    r.exact("(4,2) a8/T at w = 1/4, T = 1", &rat(15, 16), &p.coeff(8));
}

/// Quartic cofactors `(x+1)^{ℓ−1}(x+v)^{m−1}(x+w)^{n−1}(x−t)` and the two
/// closed forms for `d − ac` on `b = 0`.
fn quartic_cofactors(r: &mut CheckResult, rng: &mut ChaCha8Rng) {
    let (t, v, w) = (positive(rng), positive(rng), positive(rng));
    let one = Rational::one();
    let abcd = |p: &Poly| [p.coeff(3), p.coeff(2), p.coeff(1), p.coeff(0)];
    let check = |r: &mut CheckResult, case: &str, p: &Poly, expected: [Rational; 4], label: &str| {
        for (name, (e, c)) in ["a", "b", "c", "d"].iter().zip(expected.iter().zip(abcd(p))) {
            r.exact(format!("{case} cofactor {name} at {label}"), e, &c);
        }
    };

    let p1 = &plus(&one).pow(3) * &minus(&t);
    check(r, "(4,1,1)", &p1, [int(3) - &t, int(3) - int(3) * &t, int(1) - int(3) * &t, -t.clone()], &at(&[("t", &t)]));

    let p2 = &(&plus(&one).pow(2) * &plus(&v)) * &minus(&t);
    let e2 = [
        int(2) + &v - &t,
        int(1) + int(2) * &v - (int(2) + &v) * &t,
        &v - (int(1) + int(2) * &v) * &t,
        -(&v * &t),
    ];
    check(r, "(3,2,1)", &p2, e2, &at(&[("t", &t), ("v", &v)]));

    let p3 = &(&(&plus(&one) * &plus(&v)) * &plus(&w)) * &minus(&t);
    let e3 = [
        int(1) + &v + &w - &t,
        &v + (int(1) + &v) * &w - (int(1) + &v + &w) * &t,
        &v * &w - (&v + (int(1) + &v) * &w) * &t,
        -(&v * &w * &t),
    ];
    check(r, "(2,2,2)", &p3, e3, &at(&[("t", &t), ("v", &v), ("w", &w)]));

    // b = 0 on t = (1 + 2v)/(2 + v); then d − ac = 3(v^2 + v + 1)^2/(2 + v)^2.
    let t_bullet = (int(1) + int(2) * &v) / (int(2) + &v);
    let [a, b, c, d] = abcd(&(&(&plus(&one).pow(2) * &plus(&v)) * &minus(&t_bullet)));
    let label = at(&[("v", &v)]);
    r.exact(format!("(3,2,1) b = 0 on t• at {label}"), &Rational::zero(), &b);
    let vv = &v * &v + &v + int(1);
    r.exact(format!("(3,2,1) d• − a•c• closed form at {label}"), &(int(3) * &vv * &vv / (int(2) + &v).pow(2)), &(d - a * c));

    let sum = int(1) + &v + &w;
    let t_delta = (&v * &w + &v + &w) / &sum;
    let [a, b, c, d] = abcd(&(&(&(&plus(&one) * &plus(&v)) * &plus(&w)) * &minus(&t_delta)));
    let label = at(&[("v", &v), ("w", &w)]);
    r.exact(format!("(2,2,2) b = 0 on tΔ at {label}"), &Rational::zero(), &b);
    let closed = (&w * &w + &w + int(1)) * &vv * (&v * &v + &v * &w + &w * &w) / sum.pow(2);
    let diff = d - a * c;
    r.exact(format!("(2,2,2) dΔ − aΔcΔ closed form at {label}"), &closed, &diff);
    r.holds(format!("(2,2,2) dΔ − aΔcΔ > 0 at {label}"), diff.is_positive(), "> 0", format_rational(&diff));
}

/// Coefficients of `(x+u)^6(x−w)^2(x−ξ)` on the lines where one Jacobian
/// degenerates.
fn degenerate_lines(r: &mut CheckResult, rng: &mut ChaCha8Rng) {
    let (w, xi) = (positive(rng), positive(rng));
    let sext = |u: &Rational, w: &Rational, xi: &Rational| product(&sextuple_factors(u, w, xi));

    let p = sext(&(int(5) * &w), &w, &xi);
    let label = at(&[("w", &w), ("ξ", &xi)]);
    r.exact(format!("u = 5w: a3 = −2500 w^5 (ξ + 5w) at {label}"), &(int(-2500) * w.pow(5) * (&xi + int(5) * &w)), &p.coeff(3));

    let p = sext(&(&w / int(2)), &w, &xi);
    r.exact(format!("u = w/2: a1 = −w^7(10ξ − w)/64 at {label}"), &(-w.pow(7) * (int(10) * &xi - &w) / int(64)), &p.coeff(1));
    r.exact(format!("u = w/2: a8 = w − ξ at {label}"), &(&w - &xi), &p.coeff(8));

    let u = positive(rng);
    let p = sext(&u, &(int(5) * &u), &xi);
    let label = at(&[("u", &u), ("ξ", &xi)]);
    r.exact(format!("w = 5u: a6 = 20u^2(u + ξ) at {label}"), &(int(20) * &u * &u * (&u + &xi)), &p.coeff(6));
}

/// `count` distinct positive rationals.
fn distinct(rng: &mut ChaCha8Rng, count: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    while out.len() < count {
        let q = positive(rng);
        if !out.contains(&q) {
            out.push(q);
        }
    }
    out
}

/// Rank of the coefficient Jacobian versus the rank of the matrix built
/// from shifts of the cofactor `P / ∏(x − root)`, rows restricted to the
/// given coefficients.
fn rank_pair(roots: &[(Rational, u32)], rows: &[usize]) -> (usize, usize) {
    let n = roots.len();
    let factors: Vec<Factor> = roots.iter().enumerate().map(|(k, (z, m))| Factor::moving(minus(z), *m, n, k, -Poly::one())).collect();
    let jac = jacobian(&factors, n, rows);
    let cofactor = roots.iter().fold(Poly::one(), |acc, (z, m)| &acc * &minus(z).pow(m - 1));
    let shifts = 9 - cofactor.deg();
    let cols: Vec<Poly> = (0..shifts).map(|s| &cofactor * &Poly::monomial(Rational::one(), s)).collect();
    let gen: Vec<Vec<Rational>> = rows.iter().map(|&j| cols.iter().map(|c| c.coeff(j)).collect()).collect();
    (rank(&jac), rank(&gen))
}

fn rank_arguments(r: &mut CheckResult, rng: &mut ChaCha8Rng) {
    // Four distinct nonzero roots of total multiplicity 9; rows a8, a7, a_j.
    let mut mults = [1u32; 4];
    for _ in 0..5 {
        mults[rng.gen_range(0..4)] += 1;
    }
    let roots: Vec<(Rational, u32)> = distinct(rng, 4)
        .into_iter()
        .zip(mults)
        .map(|(z, m)| (if rng.gen() { z } else { -z }, m))
        .collect();
    let label = roots.iter().map(|(z, m)| format!("{}^{m}", format_rational(z))).collect::<Vec<_>>().join(" ");
    for j in [1, 4, 5] {
        let (jr, gr) = rank_pair(&roots, &[8, 7, j]);
        r.holds(format!("four roots, rows (8,7,{j}): rank J = rank of shifts = 3 at {label}"), jr == gr && jr == 3, "3 = 3", format!("{jr} = {gr}"));
    }

    // Five and six distinct roots, rows a8, a7, a_j, a1.
    let mut spread = [(4u32, 1u32, 1u32), (3, 2, 1), (2, 2, 2)].choose(rng).copied().expect("non-empty");
    if rng.gen() {
        spread = (spread.2, spread.0, spread.1);
    }
    let z = distinct(rng, 5);
    let five = vec![
        (-z[0].clone(), spread.0),
        (-z[1].clone(), spread.1),
        (-z[2].clone(), spread.2),
        (z[3].clone(), 2),
        (z[4].clone(), 1),
    ];
    let z = distinct(rng, 6);
    let six_mults = [(4u32, 1u32, 1u32), (3, 2, 1), (2, 2, 2)].choose(rng).copied().expect("non-empty");
    let six = vec![
        (-z[0].clone(), six_mults.0),
        (-z[1].clone(), six_mults.1),
        (-z[2].clone(), six_mults.2),
        (z[3].clone(), 1),
        (z[4].clone(), 1),
        (z[5].clone(), 1),
    ];
    for (name, roots) in [("five", five), ("six", six)] {
        let label = roots.iter().map(|(z, m)| format!("{}^{m}", format_rational(z))).collect::<Vec<_>>().join(" ");
        for j in [4, 5] {
            let (jr, gr) = rank_pair(&roots, &[8, 7, j, 1]);
            r.holds(format!("{name} roots, rows (8,7,{j},1): rank J = rank of shifts at {label}"), jr == gr, "equal", format!("{jr} vs {gr}"));
        }
    }
}
