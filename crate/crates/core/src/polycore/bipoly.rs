//! Polynomials in a main variable with coefficients in `Q[secondary]`.
//!
//! Used for two-parameter coefficient families, e.g. a polynomial in `t`
//! whose coefficients are polynomials in `w`.

use num_traits::Zero;
use std::ops::{Add, Mul, Neg, Sub};

use super::linalg::determinant;
use super::poly::Poly;
use super::rational::Rational;
use super::PolyError;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    coeffs: Vec<Poly>,
}

impl BiPoly {
    pub fn from_coeffs(mut coeffs: Vec<Poly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Sum of `c · main^i · secondary^j` over `(i, j, c)`.
    pub fn from_terms(terms: &[(usize, usize, Rational)]) -> Self {
        let mut out = Self::zero();
        for (i, j, c) in terms {
            let mut coeffs = vec![Poly::zero(); i + 1];
            coeffs[*i] = Poly::monomial(c.clone(), *j);
            out = &out + &Self::from_coeffs(coeffs);
        }
        out
    }

    /// Integer-coefficient convenience form of [`BiPoly::from_terms`].
    pub fn from_int_terms(terms: &[(usize, usize, i64)]) -> Self {
        let t: Vec<_> = terms
            .iter()
            .map(|&(i, j, c)| (i, j, Rational::from_integer(c.into())))
            .collect();
        Self::from_terms(&t)
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// The main variable itself.
    pub fn main_var() -> Self {
        Self::from_coeffs(vec![Poly::zero(), Poly::one()])
    }

    /// The secondary variable as a constant in the main variable.
    pub fn secondary_var() -> Self {
        Self::from_coeffs(vec![Poly::x()])
    }

    pub fn constant(p: Poly) -> Self {
        Self::from_coeffs(vec![p])
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Poly {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn main_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn secondary_degree(&self) -> usize {
        self.coeffs.iter().map(Poly::deg).max().unwrap_or(0)
    }

    /// Fix the secondary variable, leaving a polynomial in the main one.
    pub fn eval_secondary(&self, s: &Rational) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| c.eval(s)).collect())
    }

    /// Fix the main variable, leaving a polynomial in the secondary one.
    pub fn eval_main(&self, m: &Rational) -> Poly {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &acc.scale(m) + c)
    }

    pub fn eval(&self, main: &Rational, secondary: &Rational) -> Rational {
        self.eval_secondary(secondary).eval(main)
    }

    pub fn derivative_main(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&Rational::from_integer(i.into())))
                .collect(),
        )
    }

    pub fn derivative_secondary(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(Poly::derivative).collect())
    }

    /// Exchange the roles of the two variables.
    pub fn swap_variables(&self) -> Self {
        let sd = self.secondary_degree();
        let mut out = vec![vec![Rational::zero(); self.coeffs.len()]; sd + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            for (j, v) in c.coeffs().iter().enumerate() {
                out[j][i] = v.clone();
            }
        }
        Self::from_coeffs(out.into_iter().map(Poly::from_coeffs).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|p| p.scale(c)).collect())
    }

    /// Recovers a polynomial of bounded degrees from its values on a grid
    /// `{0..=deg_main} × {0..=deg_secondary}`. Exact whenever `f` is such a
    /// polynomial.
    pub fn interpolate<F>(deg_main: usize, deg_secondary: usize, f: F) -> Self
    where
        F: Fn(&Rational, &Rational) -> Rational,
    {
        let nodes = |n: usize| -> Vec<Rational> {
            (0..=n).map(|k| Rational::from_integer((k as i64).into())).collect()
        };
        let mains = nodes(deg_main);
        let secs = nodes(deg_secondary);
        // For each secondary node, the slice in the main variable.
        let slices: Vec<Poly> = secs
            .iter()
            .map(|s| {
                let pts: Vec<_> = mains.iter().map(|m| (m.clone(), f(m, s))).collect();
                Poly::interpolate(&pts)
            })
            .collect();
        let coeffs = (0..=deg_main)
            .map(|i| {
                let pts: Vec<_> = secs
                    .iter()
                    .zip(&slices)
                    .map(|(s, sl)| (s.clone(), sl.coeff(i)))
                    .collect();
                Poly::interpolate(&pts)
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Sylvester resultant in the main variable, a polynomial in the
    /// secondary one.
    pub fn resultant(f: &BiPoly, g: &BiPoly) -> Result<Poly, PolyError> {
        let (Some(m), Some(n)) = (f.main_degree(), g.main_degree()) else {
            return Err(PolyError::ZeroPolynomial);
        };
        Ok(determinant(sylvester(f, g, m, n)))
    }
}

/// Rows `0..n` hold shifted copies of `f`, rows `n..n+m` of `g`, each written
/// leading coefficient first.
fn sylvester(f: &BiPoly, g: &BiPoly, m: usize, n: usize) -> Vec<Vec<Poly>> {
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (src, deg, copies) in [(f, m, n), (g, n, m)] {
        for r in 0..copies {
            let mut row = vec![Poly::zero(); size];
            for k in 0..=deg {
                row[r + k] = src.coeff(deg - k);
            }
            rows.push(row);
        }
    }
    rows
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::from_coeffs((0..len).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![Poly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BiPoly::from_coeffs(out)
    }
}
