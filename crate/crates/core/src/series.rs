//! Truncated power series in `t` with [`LambdaPoly`] coefficients.
//!
//! Coefficients are stored in the ordinary basis (`Σ cₙ tⁿ`); generating
//! functions in this crate are exponential, so values are read back with
//! [`Series::egf_coeff`], which multiplies by `n!`.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numbers::{degen_falling, factorial};
use crate::ring::{int, LambdaPoly, Rational};

/// Truncation order used to read the coefficient of `t^n`. Truncation never
/// changes lower coefficients, so order `n` is exact.
pub fn order_for(n: usize) -> usize {
    n
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    // always order + 1 entries
    coeffs: Vec<LambdaPoly>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![LambdaPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(LambdaPoly::one(), 0, order)
    }

    /// The formal variable `t`.
    pub fn t(order: usize) -> Self {
        Self::monomial(LambdaPoly::one(), 1, order)
    }

    /// `c·t^degree`, which is the zero series when `degree > order`.
    pub fn monomial(c: LambdaPoly, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = c;
        }
        s
    }

    /// Takes ordinary coefficients `c₀..c_N`, padding or cutting to `order`.
    pub fn from_coeffs(mut coeffs: Vec<LambdaPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, LambdaPoly::zero());
        Series { coeffs }
    }

    /// Series whose `n`-th exponential coefficient is `egf(n)`, i.e.
    /// `Σ egf(n) tⁿ/n!`.
    pub fn from_egf(order: usize, mut egf: impl FnMut(usize) -> LambdaPoly) -> Self {
        let coeffs = (0..=order)
            .map(|n| egf(n).scale(&factorial(n).recip()))
            .collect();
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[LambdaPoly] {
        &self.coeffs
    }

    /// Ordinary coefficient of `tⁿ`; zero beyond the order.
    pub fn coeff(&self, n: usize) -> LambdaPoly {
        self.coeffs.get(n).cloned().unwrap_or_else(LambdaPoly::zero)
    }

    /// `n!·cₙ`, the value attached to `tⁿ/n!`.
    pub fn egf_coeff(&self, n: usize) -> Result<LambdaPoly> {
        let c = self.coeffs.get(n).ok_or(Error::CoefficientOutOfRange {
            index: n,
            order: self.order(),
        })?;
        Ok(c.scale(&factorial(n)))
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs[..=order.min(self.order())].to_vec(), order.min(self.order()))
    }

    pub fn scale(&self, c: &LambdaPoly) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn has_zero_constant(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    /// `sᵏ`, with `s⁰ = 1`.
    pub fn pow(&self, mut k: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `Σ_{k=0}^{N} sᵏ/k!`, exact because `s` has no constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.has_zero_constant() {
            return Err(Error::NonZeroConstantTerm);
        }
        let order = self.order();
        let mut acc = Self::one(order);
        let mut term = Self::one(order);
        for k in 1..=order {
            term = (&term * self).scale_rational(&int(k as i64).recip());
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// `log(1 + s) = Σ_{m≥1} (−1)^{m+1} sᵐ/m`.
    pub fn log1p(&self) -> Result<Self> {
        if !self.has_zero_constant() {
            return Err(Error::NonZeroConstantTerm);
        }
        let order = self.order();
        let mut acc = Self::zero(order);
        let mut power = Self::one(order);
        for m in 1..=order {
            power = &power * self;
            let sign = if m % 2 == 1 { 1 } else { -1 };
            acc = &acc + &power.scale_rational(&Rational::new(sign.into(), (m as i64).into()));
        }
        Ok(acc)
    }
}

/// `e_λ^x(t) = Σ (x)_{n,λ} tⁿ/n!`, built from degenerate falling factorials so
/// every coefficient stays polynomial in λ.
pub fn degen_exp_series(x: &Rational, order: usize) -> Series {
    Series::from_egf(order, |n| degen_falling(x, n))
}

impl<'a> Add<&'a Series> for &'a Series {
    type Output = Series;

    fn add(self, rhs: &'a Series) -> Series {
        let order = self.order().min(rhs.order());
        Series {
            coeffs: (0..=order).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl<'a> Sub<&'a Series> for &'a Series {
    type Output = Series;

    fn sub(self, rhs: &'a Series) -> Series {
        let order = self.order().min(rhs.order());
        Series {
            coeffs: (0..=order).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a Series> for &'a Series {
    type Output = Series;

    /// Truncated Cauchy product.
    fn mul(self, rhs: &'a Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![LambdaPoly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        Series { coeffs }
    }
}
