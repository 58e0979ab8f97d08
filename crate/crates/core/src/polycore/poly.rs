//! Dense univariate polynomials over the rationals.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::{format_rational, parse_rational, signum, Rational};
use super::PolyError;

/// Polynomial with rational coefficients, stored ascending by power.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and `degree() == coeffs.len() - 1` otherwise.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

/// A conjugate pair `re ± i·sqrt(imag_sq)`, contributing the real quadratic
/// factor `x² − 2·re·x + re² + imag_sq`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComplexPair {
    #[serde(with = "super::rational::serde_text")]
    pub re: Rational,
    #[serde(with = "super::rational::serde_text")]
    pub imag_sq: Rational,
}

impl ComplexPair {
    pub fn new(re: Rational, imag_sq: Rational) -> Self {
        Self { re, imag_sq }
    }

    pub fn quadratic(&self) -> Poly {
        let two = Rational::from_integer(2.into());
        Poly::from_coeffs(vec![
            &self.re * &self.re + &self.imag_sq,
            -(two * &self.re),
            Rational::one(),
        ])
    }
}

impl Poly {
    /// Builds a polynomial from ascending coefficients, trimming leading zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Ascending integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// Integer coefficients listed from the leading one down to the constant.
    pub fn from_leading_ints(coeffs: &[i64]) -> Self {
        let mut asc: Vec<i64> = coeffs.to_vec();
        asc.reverse();
        Self::from_ints(&asc)
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `x − r`
    pub fn linear_root(r: &Rational) -> Self {
        Self::from_coeffs(vec![-r.clone(), Rational::one()])
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Sign of `p(x)` as -1, 0 or 1.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        signum(&self.eval(x))
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dlead = divisor.leading().expect("division by the zero polynomial");
        let ddeg = divisor.deg();
        if self.coeffs.len() < divisor.coeffs.len() {
            return (Self::zero(), self.clone());
        }
        let inv = dlead.recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + ddeg] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(ddeg);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `p(−x)`
    pub fn negate_variable(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// `x^deg · p(1/x)`: coefficients in reverse order.
    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::from_coeffs(c)
    }

    /// `p(q(x))` by Horner's scheme.
    pub fn compose(&self, q: &Poly) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * q) + &Self::constant(c.clone()))
    }

    /// `ε^deg · p(x/ε)`, which maps each root r to ε·r.
    pub fn scale_compose(&self, eps: &Rational) -> Result<Self, PolyError> {
        if !eps.is_positive() {
            return Err(PolyError::NonPositiveScale(format_rational(eps)));
        }
        let Some(d) = self.degree() else {
            return Ok(Self::zero());
        };
        let mut power = Rational::one();
        let mut out = vec![Rational::zero(); d + 1];
        for i in (0..=d).rev() {
            out[i] = &self.coeffs[i] * &power;
            power *= eps;
        }
        Ok(Self::from_coeffs(out))
    }

    /// `lead · ∏(x − r)^m · ∏(x² − 2·re·x + re² + imag_sq)`.
    pub fn from_roots(
        real_roots: &[(Rational, u32)],
        complex_pairs: &[ComplexPair],
        lead: &Rational,
    ) -> Result<Self, PolyError> {
        if lead.is_zero() {
            return Err(PolyError::ZeroLeadingCoefficient);
        }
        let mut out = Self::constant(lead.clone());
        for (r, m) in real_roots {
            out = &out * &Self::linear_root(r).pow(*m);
        }
        for (i, pair) in complex_pairs.iter().enumerate() {
            if !pair.imag_sq.is_positive() {
                return Err(PolyError::DegenerateComplexPair(i));
            }
            out = &out * &pair.quadratic();
        }
        Ok(out)
    }

    /// Yun's square-free decomposition: `p = lead · ∏ f_i^{m_i}` with each
    /// `f_i` monic, square-free and pairwise coprime. Sorted by multiplicity.
    pub fn square_free_decompose(&self) -> Vec<(Poly, u32)> {
        assert!(!self.is_zero(), "square-free decomposition of the zero polynomial");
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let dp = self.derivative();
        let a0 = Self::gcd(self, &dp);
        let mut b = self.div_exact(&a0);
        let c = dp.div_exact(&a0);
        let mut d = &c - &b.derivative();
        let mut mult = 1u32;
        while !b.is_constant() {
            let a = Self::gcd(&b, &d);
            let next_b = b.div_exact(&a);
            let next_c = d.div_exact(&a);
            if !a.is_constant() {
                out.push((a, mult));
            }
            d = &next_c - &next_b.derivative();
            b = next_b;
            mult += 1;
        }
        out
    }

    /// `p / gcd(p, p′)`, made monic.
    pub fn square_free_part(&self) -> Self {
        if self.is_constant() {
            return self.monic();
        }
        self.div_exact(&Self::gcd(self, &self.derivative())).monic()
    }

    pub fn is_square_free(&self) -> bool {
        Self::gcd(self, &self.derivative()).is_constant()
    }

    /// Lagrange interpolation through distinct abscissae.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Self {
        let mut out = Self::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = Self::one();
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = &basis * &Self::linear_root(xj);
                    denom *= xi - xj;
                }
            }
            out = &out + &basis.scale(&(yi / denom));
        }
        out
    }

    /// Coefficient texts, leading coefficient first.
    pub fn to_leading_texts(&self) -> Vec<String> {
        self.coeffs.iter().rev().map(format_rational).collect()
    }

    /// Inverse of [`Poly::to_leading_texts`].
    pub fn from_leading_texts<S: AsRef<str>>(texts: &[S]) -> Result<Self, PolyError> {
        let mut asc = texts
            .iter()
            .map(|t| parse_rational(t.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        asc.reverse();
        Ok(Self::from_coeffs(asc))
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_leading_texts().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let texts = Vec::<String>::deserialize(d)?;
        Poly::from_leading_texts(&texts).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut c = long.coeffs.clone();
        for (a, b) in c.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        Poly::from_coeffs(c)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::from_coeffs(c)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rational::{int, rat};

    fn p(leading: &[i64]) -> Poly {
        Poly::from_leading_ints(leading)
    }

    #[test]
    fn add_cancels_and_trims() {
        assert_eq!(&p(&[1, 1]) + &p(&[1, -1]), p(&[2, 0]));
        assert_eq!(&p(&[1, 0, -1]) + &p(&[-1, 0, 0]), p(&[-1]));
        let q = p(&[3, -2, 7]);
        assert_eq!(&q + &Poly::zero(), q);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p(&[1, 2]) * &p(&[1, -4, 5]), p(&[1, -2, -3, 10]));
        let q = p(&[5, 0, -1, 2]);
        assert_eq!(&q * &Poly::one(), q);
        assert_eq!(&p(&[1, 1]).pow(2) * &p(&[1, -2]), p(&[1, 0, -3, -2]));
    }

    #[test]
    fn from_roots_examples() {
        let roots = [(int(-1), 2), (int(2), 1)];
        assert_eq!(Poly::from_roots(&roots, &[], &int(1)).unwrap(), p(&[1, 0, -3, -2]));
        let pair = ComplexPair::new(rat(1, 2), rat(3, 4));
        assert_eq!(Poly::from_roots(&[], &[pair], &int(1)).unwrap(), p(&[1, -1, 1]));
        let six_three = Poly::from_roots(&[(int(-1), 6), (int(1), 3)], &[], &int(1)).unwrap();
        assert_eq!(six_three, &p(&[1, 1]).pow(6) * &p(&[1, -1]).pow(3));
        let bad = ComplexPair::new(int(1), int(0));
        assert_eq!(
            Poly::from_roots(&[], &[bad], &int(1)),
            Err(PolyError::DegenerateComplexPair(0))
        );
        assert_eq!(Poly::from_roots(&[], &[], &int(0)), Err(PolyError::ZeroLeadingCoefficient));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[1, 0, -3, -2]).derivative(), p(&[3, 0, -3]));
        assert!(p(&[7]).derivative().is_zero());
        let sixth = p(&[1, 1]).pow(6);
        assert_eq!(sixth.derivative(), p(&[1, 1]).pow(5).scale(&int(6)));
    }

    #[test]
    fn square_free_examples() {
        let f = &p(&[1, -1]).pow(2) * &p(&[1, 2]);
        assert_eq!(f.square_free_decompose(), vec![(p(&[1, 2]), 1), (p(&[1, -1]), 2)]);
        let g = p(&[2, -4, 6]);
        assert_eq!(g.square_free_decompose(), vec![(p(&[1, -2, 3]), 1)]);
        let h = &p(&[1, 1]).pow(6) * &p(&[1, -2]).pow(3);
        let dec = h.square_free_decompose();
        assert_eq!(dec, vec![(p(&[1, -2]), 3), (p(&[1, 1]), 6)]);
        let back = dec.iter().fold(Poly::one(), |acc, (f, m)| &acc * &f.pow(*m));
        assert_eq!(back, h);
    }

    #[test]
    fn scale_compose_examples() {
        assert_eq!(p(&[1, -1]).scale_compose(&rat(1, 2)).unwrap(), Poly::from_coeffs(vec![rat(-1, 2), int(1)]));
        let q = p(&[1, -1, 1]);
        assert_eq!(q.scale_compose(&int(1)).unwrap(), q);
        assert_eq!(
            q.scale_compose(&rat(1, 3)).unwrap(),
            Poly::from_coeffs(vec![rat(1, 9), rat(-1, 3), int(1)])
        );
        assert!(q.scale_compose(&int(0)).is_err());
        assert!(q.scale_compose(&int(-2)).is_err());
    }

    #[test]
    fn division_and_gcd() {
        let a = &p(&[1, -1]).pow(2) * &p(&[1, 3]);
        let b = &p(&[1, -1]) * &p(&[2, 5]);
        assert_eq!(Poly::gcd(&a, &b), p(&[1, -1]));
        let (q, r) = p(&[1, 0, 0, 1]).div_rem(&p(&[1, 1]));
        assert_eq!(q, p(&[1, -1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let q = p(&[3, 0, -2, 1]);
        let pts: Vec<_> = (0..4).map(|i| (int(i), q.eval(&int(i)))).collect();
        assert_eq!(Poly::interpolate(&pts), q);
    }

    #[test]
    fn text_roundtrip_is_leading_first() {
        let q = Poly::from_coeffs(vec![rat(1, 9), rat(-1, 3), int(1)]);
        assert_eq!(q.to_leading_texts(), vec!["1", "-1/3", "1/9"]);
        assert_eq!(Poly::from_leading_texts(&q.to_leading_texts()).unwrap(), q);
        assert_eq!(serde_json::to_string(&q).unwrap(), r#"["1","-1/3","1/9"]"#);
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(p(&[1, -2, -3, 10]).to_string(), "x^3 - 2x^2 - 3x + 10");
        assert_eq!(Poly::from_coeffs(vec![rat(1, 9), int(-1)]).to_string(), "-x + (1/9)");
    }
}
