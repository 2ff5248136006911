//! Scalar number families: degenerate factorials, the central kernel,
//! Stirling numbers of both kinds and degenerate central factorial numbers.
//!
//! Families that have both a generating-function route and a closed sum are
//! exposed through both so each can serve as the other's oracle.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ring::{int, rat, LambdaPoly, Rational};
use crate::series::{order_for, degen_exp_series, Series};

/// Index pair `(n, k)`; `n < k` is a legal query and yields zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexPair {
    pub n: usize,
    pub k: usize,
}

pub fn factorial(n: usize) -> Rational {
    Rational::from_integer((1..=n).fold(BigInt::one(), |acc, i| acc * i))
}

/// Binomial coefficient via Pascal's rule.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::one());
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::one());
        row = next;
    }
    row.swap_remove(k)
}

/// `(x)_{m,λ} = x(x−λ)…(x−(m−1)λ)`.
pub fn degen_falling(x: &Rational, m: usize) -> LambdaPoly {
    (0..m)
        .map(|j| LambdaPoly::from_coeffs(vec![x.clone(), int(-(j as i64))]))
        .fold(LambdaPoly::one(), |acc, f| &acc * &f)
}

/// `<x>_{m,λ} = x(x+λ)…(x+(m−1)λ)`.
pub fn degen_rising(x: &Rational, m: usize) -> LambdaPoly {
    (0..m)
        .map(|j| LambdaPoly::from_coeffs(vec![x.clone(), int(j as i64)]))
        .fold(LambdaPoly::one(), |acc, f| &acc * &f)
}

/// Central kernel `c_m = (1/2)_{m,λ} − (−1)^m <1/2>_{m,λ}`, the `t^m/m!`
/// coefficient of `e_λ^{1/2}(t) − e_λ^{−1/2}(t)`.
pub fn central_coeff(m: usize) -> LambdaPoly {
    let half = rat(1, 2);
    let rising = degen_rising(&half, m);
    let falling = degen_falling(&half, m);
    if m.is_multiple_of(2) {
        &falling - &rising
    } else {
        &falling + &rising
    }
}

/// `e_λ^{1/2}(t) − e_λ^{−1/2}(t)` built from the two degenerate exponentials
/// directly, without going through [`central_coeff`].
pub fn central_kernel_series(order: usize) -> Series {
    &degen_exp_series(&rat(1, 2), order) - &degen_exp_series(&rat(-1, 2), order)
}

/// `(1/k!)·base^k` read at `tⁿ/n!`.
fn egf_power_coeff(base: &Series, n: usize, k: usize) -> LambdaPoly {
    base.pow(k)
        .scale_rational(&factorial(k).recip())
        .egf_coeff(n)
        .expect("series order covers n")
}

/// Signed Stirling number of the first kind from `(log(1+t))^k / k!`.
pub fn stirling1(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let log = Series::t(order_for(n)).log1p().expect("t has zero constant term");
    egf_power_coeff(&log, n, k)
        .as_constant()
        .expect("Stirling numbers of the first kind do not depend on λ")
}

/// Rows `0..=n_max` of the first-kind triangle from
/// `s(n+1,k) = s(n,k−1) − n·s(n,k)`.
pub fn stirling1_table(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows = vec![vec![BigInt::one()]];
    for n in 0..n_max {
        let prev = &rows[n];
        let mut next = vec![BigInt::zero(); n + 2];
        for k in 0..=n + 1 {
            let left = if k >= 1 { prev[k - 1].clone() } else { BigInt::zero() };
            let stay = prev.get(k).cloned().unwrap_or_default();
            next[k] = left - stay * n;
        }
        rows.push(next);
    }
    rows
}

pub fn stirling1_recurrence(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    Rational::from_integer(stirling1_table(n)[n][k].clone())
}

/// `S_{2,λ}(n,k)` from `(e_λ(t) − 1)^k / k!`.
pub fn degen_stirling2(n: usize, k: usize) -> LambdaPoly {
    if k > n {
        return LambdaPoly::zero();
    }
    let order = order_for(n);
    let base = &degen_exp_series(&int(1), order) - &Series::one(order);
    egf_power_coeff(&base, n, k)
}

/// `T_{2,λ}(n,k)` from `(e_λ^{1/2}(t) − e_λ^{−1/2}(t))^k / k!`.
pub fn central_factorial2(n: usize, k: usize) -> LambdaPoly {
    if k > n {
        return LambdaPoly::zero();
    }
    egf_power_coeff(&central_kernel_series(order_for(n)), n, k)
}

/// `T_{2,λ}(n,k)` as
/// `Σ_m [(1/k!) Σ_l C(k,l)(−1)^{k−l}(l − k/2)^m] λ^{n−m} s(n,m)`,
/// using the recurrence triangle for `s(n,m)`.
pub fn central_factorial2_sum(n: usize, k: usize) -> LambdaPoly {
    let s1 = stirling1_table(n);
    let inv_kfact = factorial(k).recip();
    let half_k = rat(k as i64, 2);
    let terms: Vec<(Rational, Rational)> = (0..=k)
        .map(|l| {
            let sign = if (k - l).is_multiple_of(2) { 1 } else { -1 };
            let weight = Rational::from_integer(binomial(k, l) * sign);
            (weight, int(l as i64) - &half_k)
        })
        .collect();

    (0..=n)
        .map(|m| {
            let inner: Rational = terms
                .iter()
                .map(|(w, base)| w * num_traits::pow(base.clone(), m))
                .sum();
            let scalar = inner * &inv_kfact * Rational::from_integer(s1[n][m].clone());
            LambdaPoly::monomial(scalar, n - m)
        })
        .sum()
}
