//! Exact scalars and dense polynomials in the degeneracy parameter λ.
//!
//! Every degenerate quantity in this crate is a polynomial in λ with rational
//! coefficients. [`LambdaPoly`] keeps the coefficients in ascending degree and
//! is always canonical: the highest stored coefficient is nonzero, and the
//! zero polynomial is the empty list.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// `n / d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or an integer literal. Whitespace around the parts is
/// allowed; a zero denominator is rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// `"p/q"` with the denominator always present (`0/1`, `-1/1`, `3/2`).
pub fn rational_to_pq(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Dense polynomial in λ with rational coefficients, ascending degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LambdaPoly {
    coeffs: Vec<Rational>,
}

impl LambdaPoly {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = LambdaPoly { coeffs };
        p.normalize();
        p
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `λ`.
    pub fn lambda() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `c·λ^degree`.
    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds `c0 + c1·λ + …` from small integer ratios; handy in tests.
    pub fn from_ratios(terms: &[(i64, i64)]) -> Self {
        Self::from_coeffs(terms.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `λ^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The constant term if the polynomial does not depend on λ.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Drops trailing zero coefficients.
    pub fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Horner evaluation at `λ = v`.
    pub fn eval(&self, v: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * v + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LambdaPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Coefficients rendered as `"p/q"` strings, ascending degree.
    pub fn to_pq_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(rational_to_pq).collect()
    }

    pub fn from_pq_strings<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        let coeffs = items
            .iter()
            .map(|s| parse_rational(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(coeffs))
    }
}

impl From<Rational> for LambdaPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Zero for LambdaPoly {
    fn zero() -> Self {
        LambdaPoly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LambdaPoly {
    fn one() -> Self {
        LambdaPoly {
            coeffs: vec![Rational::one()],
        }
    }
}

impl<'a> Add<&'a LambdaPoly> for &'a LambdaPoly {
    type Output = LambdaPoly;

    fn add(self, rhs: &'a LambdaPoly) -> LambdaPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        LambdaPoly::from_coeffs(coeffs)
    }
}

impl Add for LambdaPoly {
    type Output = LambdaPoly;

    fn add(self, rhs: LambdaPoly) -> LambdaPoly {
        &self + &rhs
    }
}

impl AddAssign<&LambdaPoly> for LambdaPoly {
    fn add_assign(&mut self, rhs: &LambdaPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (c, r) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c += r;
        }
        self.normalize();
    }
}

impl<'a> Sub<&'a LambdaPoly> for &'a LambdaPoly {
    type Output = LambdaPoly;

    fn sub(self, rhs: &'a LambdaPoly) -> LambdaPoly {
        self + &(-rhs)
    }
}

impl Sub for LambdaPoly {
    type Output = LambdaPoly;

    fn sub(self, rhs: LambdaPoly) -> LambdaPoly {
        &self - &rhs
    }
}

impl Neg for &LambdaPoly {
    type Output = LambdaPoly;

    fn neg(self) -> LambdaPoly {
        LambdaPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LambdaPoly {
    type Output = LambdaPoly;

    fn neg(self) -> LambdaPoly {
        -&self
    }
}

impl<'a> Mul<&'a LambdaPoly> for &'a LambdaPoly {
    type Output = LambdaPoly;

    fn mul(self, rhs: &'a LambdaPoly) -> LambdaPoly {
        if self.is_zero() || rhs.is_zero() {
            return LambdaPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LambdaPoly::from_coeffs(coeffs)
    }
}

impl Mul for LambdaPoly {
    type Output = LambdaPoly;

    fn mul(self, rhs: LambdaPoly) -> LambdaPoly {
        &self * &rhs
    }
}

impl Mul<Rational> for LambdaPoly {
    type Output = LambdaPoly;

    fn mul(self, rhs: Rational) -> LambdaPoly {
        self.scale(&rhs)
    }
}

impl Sum for LambdaPoly {
    fn sum<I: Iterator<Item = LambdaPoly>>(iter: I) -> Self {
        iter.fold(LambdaPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

/// Plain rendering with `L` standing for λ: `1/4 - 3/2*L + 2*L^2`.
/// Coefficients are always printed, so `-λ` renders as `-1*L`.
impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match deg {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*L")?,
                _ => write!(f, "{mag}*L^{deg}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl FromStr for LambdaPoly {
    type Err = Error;

    /// Inverse of the `Display` rendering. Also accepts a bare `L`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidPolynomial(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }

        // Split into signed terms; a sign after '/', '*' or '^' belongs to a literal.
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..bytes.len() {
            if matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'/' | b'*' | b'^') {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);

        let mut acc = LambdaPoly::zero();
        for term in terms {
            let (neg, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let (coeff, degree) = match body.split_once('L') {
                None => (parse_rational(body).map_err(|_| bad())?, 0),
                Some((c, rest)) => {
                    let c = match c.strip_suffix('*') {
                        Some(c) => parse_rational(c).map_err(|_| bad())?,
                        None if c.is_empty() => Rational::one(),
                        None => return Err(bad()),
                    };
                    let degree = match rest {
                        "" => 1,
                        r => r
                            .strip_prefix('^')
                            .and_then(|d| d.parse::<usize>().ok())
                            .ok_or_else(bad)?,
                    };
                    (c, degree)
                }
            };
            let coeff = if neg { -coeff } else { coeff };
            acc += &LambdaPoly::monomial(coeff, degree);
        }
        Ok(acc)
    }
}
