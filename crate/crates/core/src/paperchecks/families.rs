//! Products of parametrized factors, their exact parameter derivatives, and
//! the printed two-parameter polynomials `H*`, `a5*`, `a4*`.

use num_traits::{One, Zero};

use crate::polycore::rational::int;
use crate::polycore::{BiPoly, Poly, Rational};

/// `x + c`.
pub(super) fn plus(c: &Rational) -> Poly {
    Poly::from_coeffs(vec![c.clone(), Rational::one()])
}

/// `x − c`.
pub(super) fn minus(c: &Rational) -> Poly {
    plus(&-c)
}

/// `a·x + b`.
pub(super) fn linear(a: &Rational, b: &Rational) -> Poly {
    Poly::from_coeffs(vec![b.clone(), a.clone()])
}

/// One factor `f^mult` of a product, with `∂f/∂p_k` for each parameter.
pub(super) struct Factor {
    pub poly: Poly,
    pub mult: u32,
    pub grad: Vec<Poly>,
}

impl Factor {
    /// A factor that does not depend on the parameters.
    pub fn fixed(poly: Poly, mult: u32, params: usize) -> Self {
        Self { poly, mult, grad: vec![Poly::zero(); params] }
    }

    /// A factor depending on parameter `k` only, with derivative `d`.
    pub fn moving(poly: Poly, mult: u32, params: usize, k: usize, d: Poly) -> Self {
        let mut grad = vec![Poly::zero(); params];
        grad[k] = d;
        Self { poly, mult, grad }
    }
}

pub(super) fn product(factors: &[Factor]) -> Poly {
    factors.iter().fold(Poly::one(), |acc, f| &acc * &f.poly.pow(f.mult))
}

/// `∂P/∂p_k = Σ_i m_i f_i^{m_i−1} (∂f_i/∂p_k) ∏_{j≠i} f_j^{m_j}`.
pub(super) fn partial(factors: &[Factor], k: usize) -> Poly {
    let mut out = Poly::zero();
    for (i, f) in factors.iter().enumerate() {
        if f.grad[k].is_zero() || f.mult == 0 {
            continue;
        }
        let mut term = f.poly.pow(f.mult - 1).scale(&int(f.mult as i64));
        term = &term * &f.grad[k];
        for (j, g) in factors.iter().enumerate() {
            if j != i {
                term = &term * &g.poly.pow(g.mult);
            }
        }
        out = &out + &term;
    }
    out
}

/// Rows are coefficient indices (`x^j`), columns the parameters.
pub(super) fn jacobian(factors: &[Factor], params: usize, rows: &[usize]) -> Vec<Vec<Rational>> {
    let cols: Vec<Poly> = (0..params).map(|k| partial(factors, k)).collect();
    rows.iter().map(|&j| cols.iter().map(|c| c.coeff(j)).collect()).collect()
}

/// Evaluates `Σ c · ∏ vars[i]^e[i]` over the listed terms.
pub(super) fn eval_terms<const N: usize>(terms: &[(i64, [u32; N])], vars: [&Rational; N]) -> Rational {
    let mut total = Rational::zero();
    for (c, exps) in terms {
        let mut m = int(*c);
        for (v, &e) in vars.iter().zip(exps) {
            for _ in 0..e {
                m *= *v;
            }
        }
        total += m;
    }
    total
}

/// `H*` as printed, main variable `t`, secondary `w`.
pub fn h_star() -> BiPoly {
    BiPoly::from_int_terms(&[(2, 1, 6), (2, 0, -2), (1, 2, 3), (1, 1, -5), (1, 0, 3), (0, 1, 6), (0, 2, -2)])
}

/// `a5*` as printed (27 times `a5` on `s = s0`), main `t`, secondary `w`.
pub fn a5_star() -> BiPoly {
    BiPoly::from_int_terms(&[
        (5, 0, -8),
        (4, 1, 8),
        (3, 2, 6),
        (2, 3, -4),
        (1, 4, -2),
        (4, 0, -24),
        (3, 1, -66),
        (2, 2, -63),
        (1, 3, -12),
        (0, 4, 3),
        (3, 0, 84),
        (2, 1, 153),
        (1, 2, 90),
        (0, 3, -3),
        (2, 0, -144),
        (1, 1, -144),
        (0, 2, -36),
        (1, 0, 108),
        (0, 1, 54),
    ])
}

/// `a4*` as printed (27 times `a4` on `s = s0`), main `t`, secondary `w`.
pub fn a4_star() -> BiPoly {
    BiPoly::from_int_terms(&[
        (4, 0, -20),
        (3, 1, -22),
        (2, 2, -30),
        (1, 3, -10),
        (0, 4, 1),
        (3, 0, 66),
        (2, 1, 45),
        (1, 2, 36),
        (0, 3, 15),
        (2, 0, -135),
        (1, 1, -54),
        (0, 2, -54),
        (1, 0, 108),
        (0, 1, 54),
        (0, 0, -81),
    ])
}

/// `(x+1)^5 (sx+1) (tx−1)^2 (wx−1)`.
pub(super) fn five_one_family(s: &Rational, t: &Rational, w: &Rational) -> Poly {
    let one = Rational::one();
    &(&plus(&one).pow(5) * &linear(s, &one)) * &(&linear(t, &-&one).pow(2) * &linear(w, &-&one))
}

/// `(x+1)^4 (Tx^2+Sx−1)^2 (wx−1)`.
pub(super) fn four_two_family(big_t: &Rational, big_s: &Rational, w: &Rational) -> Poly {
    let one = Rational::one();
    let quad = Poly::from_coeffs(vec![-&one, big_s.clone(), big_t.clone()]);
    &(&plus(&one).pow(4) * &quad.pow(2)) * &linear(w, &-&one)
}

/// `(x+1)^3 (sx+1)^3 (tx−1)^2 (wx−1)`.
pub(super) fn three_three_family(s: &Rational, t: &Rational, w: &Rational) -> Poly {
    let one = Rational::one();
    &(&plus(&one).pow(3) * &linear(s, &one).pow(3)) * &(&linear(t, &-&one).pow(2) * &linear(w, &-&one))
}

/// `s0 = (w + 2t − 3)/3`, the value making `a1` vanish in the (3,3) family.
pub(super) fn s0(t: &Rational, w: &Rational) -> Rational {
    (w + int(2) * t - int(3)) / int(3)
}

/// Coefficient `a_j` of the (3,3) family on `s = s0`, as a bivariate
/// polynomial recovered by exact interpolation (main `t`, secondary `w`).
pub(super) fn three_three_coefficient(j: usize) -> BiPoly {
    BiPoly::interpolate(9, 9, |t, w| three_three_family(&s0(t, w), t, w).coeff(j))
}

/// Printed univariate factors of the resultants and discriminants.
pub(super) mod printed {
    use crate::polycore::Poly;

    fn p(c: &[i64]) -> Poly {
        Poly::from_leading_ints(c)
    }

    pub fn rw1() -> Poly {
        p(&[32, 16, -80, 184, -142, -63])
    }
    pub fn rw2() -> Poly {
        p(&[10, -80, 365, -928, 1564, -1788, 1345, -668, 208, -40, 4])
    }
    pub fn r_sharp() -> Poly {
        p(&[5, -16, 40, -23, 61, -16, -2])
    }
    pub fn rt1() -> Poly {
        p(&[5, 50, 100, -2513, 10781, -25932, 46604, -70411, 86678, -82706, 65264, -43104, 16896])
    }
    pub fn rt2() -> Poly {
        p(&[8, 154, -68, -239, -352])
    }
    pub fn delta_flat() -> Poly {
        p(&[9, 48, 82, 56, 205])
    }
    pub fn delta_sharp() -> Poly {
        p(&[3, 14, -63, 51, -82])
    }
    pub fn r_delta() -> Poly {
        p(&[2, 16, -61, 23, -40, 16, -5])
    }
    /// `w^2 − w + 1`, the squared factor common to three resultants.
    pub fn unit_quadratic() -> Poly {
        p(&[1, -1, 1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rational::rat;

    #[test]
    fn partials_match_the_product_rule() {
        // (x+u)^2 (x−w): ∂/∂u = 2(x+u)(x−w), ∂/∂w = −(x+u)^2.
        let (u, w) = (int(2), int(3));
        let f = [Factor::moving(plus(&u), 2, 2, 0, Poly::one()), Factor::moving(minus(&w), 1, 2, 1, -Poly::one())];
        assert_eq!(partial(&f, 0), &(&plus(&u) * &minus(&w)) * &Poly::constant(int(2)));
        assert_eq!(partial(&f, 1), -plus(&u).pow(2));
        assert_eq!(product(&f), &plus(&u).pow(2) * &minus(&w));
    }

    #[test]
    fn term_evaluation() {
        // 3a^2 b − 1 at (a, b) = (1/2, 4)
        let v = eval_terms(&[(3, [2, 1]), (-1, [0, 0])], [&rat(1, 2), &int(4)]);
        assert_eq!(v, int(2));
    }

    #[test]
    fn interpolated_coefficient_is_exact() {
        let a8 = three_three_coefficient(8);
        let (t, w) = (rat(7, 5), rat(2, 3));
        assert_eq!(a8.eval(&t, &w), three_three_family(&s0(&t, &w), &t, &w).coeff(8));
    }
}
