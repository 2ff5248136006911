//! Incomplete and complete Bell polynomial families, classical, degenerate and
//! degenerate central.
//!
//! Each family is available through its generating function and through a
//! sum over partition profiles. Arguments `x_j` are exact rationals; the
//! result is a polynomial in λ.

use std::ops::{Add, Mul};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numbers::{
    central_coeff, central_factorial2, central_kernel_series, degen_falling, degen_rising,
    degen_stirling2, factorial,
};
use crate::ring::{int, rat, LambdaPoly, Rational};
use crate::series::{order_for, degen_exp_series, Series};

/// Multi-index `(i₁,…,i_L)` with `Σ i_j = k` and `Σ j·i_j = n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionProfile {
    pub counts: Vec<usize>,
}

impl PartitionProfile {
    /// Number of parts, `Σ i_j`.
    pub fn parts(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Total size, `Σ j·i_j`.
    pub fn total(&self) -> usize {
        self.counts.iter().enumerate().map(|(j, &i)| (j + 1) * i).sum()
    }

    /// `n!/(i₁!⋯i_L!·(1!)^{i₁}⋯(L!)^{i_L})`, the number of set partitions
    /// of an `n`-set with this block-size profile.
    pub fn multiplicity(&self) -> Rational {
        let mut denom = Rational::one();
        for (j, &i) in self.counts.iter().enumerate() {
            denom *= factorial(i) * num_traits::pow(factorial(j + 1), i);
        }
        factorial(self.total()) / denom
    }
}

/// All profiles of length `n−k+1` with `k` parts summing to `n`, in
/// descending lexicographic order. Empty when `k > n` or when `k = 0 < n`.
pub fn partition_profiles(n: usize, k: usize) -> Vec<PartitionProfile> {
    if k > n {
        return Vec::new();
    }
    let len = n - k + 1;
    let mut out = Vec::new();
    let mut counts = vec![0; len];
    fill_profiles(1, len, k, n, &mut counts, &mut out);
    out
}

/// All profiles `(m₁,…,m_n)` with `Σ j·m_j = n`, any number of parts.
/// `n = 0` yields the single empty profile.
pub fn all_profiles(n: usize) -> Vec<PartitionProfile> {
    let mut out = Vec::new();
    let mut counts = vec![0; n];
    fill_any(1, n, n, &mut counts, &mut out);
    out
}

// Chooses i_part for part sizes part..=max_part with `parts` parts of total `sum` left.
fn fill_profiles(
    part: usize,
    max_part: usize,
    parts: usize,
    sum: usize,
    counts: &mut [usize],
    out: &mut Vec<PartitionProfile>,
) {
    if part > max_part {
        if parts == 0 && sum == 0 {
            out.push(PartitionProfile {
                counts: counts.to_vec(),
            });
        }
        return;
    }
    // feasibility: remaining parts each lie in [part, max_part]
    if sum < parts * part || sum > parts * max_part {
        return;
    }
    let most = parts.min(sum / part);
    for i in (0..=most).rev() {
        counts[part - 1] = i;
        fill_profiles(part + 1, max_part, parts - i, sum - i * part, counts, out);
    }
    counts[part - 1] = 0;
}

fn fill_any(
    part: usize,
    max_part: usize,
    sum: usize,
    counts: &mut [usize],
    out: &mut Vec<PartitionProfile>,
) {
    if part > max_part {
        if sum == 0 {
            out.push(PartitionProfile {
                counts: counts.to_vec(),
            });
        }
        return;
    }
    for i in (0..=sum / part).rev() {
        counts[part - 1] = i;
        fill_any(part + 1, max_part, sum - i * part, counts, out);
    }
    counts[part - 1] = 0;
}

/// `(1, 1, …, 1)` of the given length.
pub fn ones(len: usize) -> Vec<Rational> {
    vec![Rational::one(); len]
}

/// `(x, x², …, x^len)`.
pub fn powers(x: &Rational, len: usize) -> Vec<Rational> {
    (1..=len).map(|j| num_traits::pow(x.clone(), j)).collect()
}

/// Argument count expected by an incomplete polynomial of shape `(n, k)`.
/// `None` when `k > n`, where every family vanishes.
pub fn incomplete_arity(n: usize, k: usize) -> Option<usize> {
    (k <= n).then(|| n - k + 1)
}

fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::ArgumentLength { expected, got })
    }
}

/// `Σ_profiles mult·Π w_j^{i_j}` over a coefficient ring.
fn profile_sum<T>(profiles: &[PartitionProfile], weights: &[T]) -> T
where
    T: Clone + Zero + One + Add<Output = T> + Mul<Output = T> + Mul<Rational, Output = T>,
{
    profiles
        .iter()
        .map(|p| {
            let product = p
                .counts
                .iter()
                .zip(weights)
                .filter(|(&i, _)| i > 0)
                .fold(T::one(), |acc, (&i, w)| acc * num_traits::pow(w.clone(), i));
            product * p.multiplicity()
        })
        .fold(T::zero(), |acc, t| acc + t)
}

/// Classical incomplete Bell polynomial `B_{n,k}(x₁,…,x_{n−k+1})`.
pub fn incomplete_bell_classical(n: usize, k: usize, xs: &[Rational]) -> Result<Rational> {
    let Some(len) = incomplete_arity(n, k) else {
        return Ok(Rational::zero());
    };
    check_len(len, xs.len())?;
    Ok(profile_sum(&partition_profiles(n, k), xs))
}

/// Classical incomplete Bell polynomial evaluated at arguments that are
/// themselves polynomials in λ.
pub fn incomplete_bell_classical_poly(
    n: usize,
    k: usize,
    args: &[LambdaPoly],
) -> Result<LambdaPoly> {
    let Some(len) = incomplete_arity(n, k) else {
        return Ok(LambdaPoly::zero());
    };
    check_len(len, args.len())?;
    Ok(profile_sum(&partition_profiles(n, k), args))
}

/// Complete Bell polynomial `Σ_k B_{n,k}` as one sum over all profiles with
/// `Σ j·m_j = n`, at arguments that are polynomials in λ.
pub fn complete_bell_classical_poly(n: usize, args: &[LambdaPoly]) -> Result<LambdaPoly> {
    check_len(n, args.len())?;
    Ok(profile_sum(&all_profiles(n), args))
}

/// `Σ_{m=1}^{len} x_m w_m t^m/m!`.
fn weighted_series(xs: &[Rational], weight: impl Fn(usize) -> LambdaPoly, order: usize) -> Series {
    Series::from_egf(order, |m| {
        if m == 0 || m > xs.len() {
            LambdaPoly::zero()
        } else {
            weight(m).scale(&xs[m - 1])
        }
    })
}

fn incomplete_gf(
    n: usize,
    k: usize,
    xs: &[Rational],
    weight: impl Fn(usize) -> LambdaPoly,
) -> Result<LambdaPoly> {
    let Some(len) = incomplete_arity(n, k) else {
        return Ok(LambdaPoly::zero());
    };
    check_len(len, xs.len())?;
    let inner = weighted_series(xs, weight, order_for(n));
    inner
        .pow(k)
        .scale_rational(&factorial(k).recip())
        .egf_coeff(n)
}

fn incomplete_partition(
    n: usize,
    k: usize,
    xs: &[Rational],
    weight: impl Fn(usize) -> LambdaPoly,
) -> Result<LambdaPoly> {
    let Some(len) = incomplete_arity(n, k) else {
        return Ok(LambdaPoly::zero());
    };
    check_len(len, xs.len())?;
    let weights: Vec<LambdaPoly> = xs
        .iter()
        .enumerate()
        .map(|(j, x)| weight(j + 1).scale(x))
        .collect();
    Ok(profile_sum(&partition_profiles(n, k), &weights))
}

fn complete_gf(n: usize, xs: &[Rational], weight: impl Fn(usize) -> LambdaPoly) -> Result<LambdaPoly> {
    check_len(n, xs.len())?;
    weighted_series(xs, weight, order_for(n))
        .exp()?
        .egf_coeff(n)
}

fn unit_falling(m: usize) -> LambdaPoly {
    degen_falling(&int(1), m)
}

/// Degenerate incomplete Bell polynomial `B_{n,k}(x₁,…|λ)` from
/// `(Σ x_m (1)_{m,λ} t^m/m!)^k / k!`.
pub fn incomplete_bell_degenerate(n: usize, k: usize, xs: &[Rational]) -> Result<LambdaPoly> {
    incomplete_gf(n, k, xs, unit_falling)
}

/// Partition-sum route for [`incomplete_bell_degenerate`].
pub fn incomplete_bell_degenerate_partition(
    n: usize,
    k: usize,
    xs: &[Rational],
) -> Result<LambdaPoly> {
    incomplete_partition(n, k, xs, unit_falling)
}

/// Degenerate complete Bell polynomial `B_n(x₁,…,x_n|λ)` from
/// `exp(Σ x_i (1)_{i,λ} t^i/i!)`.
pub fn complete_bell_degenerate(n: usize, xs: &[Rational]) -> Result<LambdaPoly> {
    complete_gf(n, xs, unit_falling)
}

/// `Σ_k B_{n,k}(x₁,…,x_{n−k+1}|λ)`.
pub fn complete_bell_degenerate_sum(n: usize, xs: &[Rational]) -> Result<LambdaPoly> {
    check_len(n, xs.len())?;
    if n == 0 {
        return Ok(LambdaPoly::one());
    }
    (1..=n)
        .map(|k| incomplete_bell_degenerate(n, k, &xs[..n - k + 1]))
        .sum()
}

/// Degenerate Bell polynomial `B_{n,λ}(x) = Σ_k x^k S_{2,λ}(n,k)`.
pub fn degenerate_bell_poly(n: usize, x: &Rational) -> LambdaPoly {
    (0..=n)
        .map(|k| degen_stirling2(n, k).scale(&num_traits::pow(x.clone(), k)))
        .sum()
}

/// `B_{n,λ}(x)` read from `exp(x(e_λ(t) − 1))`.
pub fn degenerate_bell_poly_gf(n: usize, x: &Rational) -> LambdaPoly {
    let order = order_for(n);
    let inner = (&degen_exp_series(&int(1), order) - &Series::one(order)).scale_rational(x);
    inner
        .exp()
        .and_then(|e| e.egf_coeff(n))
        .expect("inner series has zero constant term")
}

/// Which central kernel the central families use. `FlippedSign` replaces
/// `(−1)^m` with `(−1)^{m+1}` and exists only for mutation testing of the
/// identity suite.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CentralKernel {
    #[default]
    Standard,
    FlippedSign,
}

impl CentralKernel {
    pub fn coeff(self, m: usize) -> LambdaPoly {
        match self {
            CentralKernel::Standard => central_coeff(m),
            CentralKernel::FlippedSign => {
                let half = rat(1, 2);
                let falling = degen_falling(&half, m);
                let rising = degen_rising(&half, m);
                if m.is_multiple_of(2) {
                    &falling + &rising
                } else {
                    &falling - &rising
                }
            }
        }
    }
}

/// Degenerate central incomplete Bell polynomial `T_{n,k}(x₁,…|λ)` from
/// `(Σ x_m c_m t^m/m!)^k / k!`, for every `(n, k)`.
pub fn central_incomplete(n: usize, k: usize, xs: &[Rational]) -> Result<LambdaPoly> {
    central_incomplete_with(CentralKernel::Standard, n, k, xs)
}

pub fn central_incomplete_with(
    kernel: CentralKernel,
    n: usize,
    k: usize,
    xs: &[Rational],
) -> Result<LambdaPoly> {
    incomplete_gf(n, k, xs, |m| kernel.coeff(m))
}

/// Partition-sum route for [`central_incomplete`].
pub fn central_incomplete_partition(n: usize, k: usize, xs: &[Rational]) -> Result<LambdaPoly> {
    incomplete_partition(n, k, xs, central_coeff)
}

/// Degenerate central complete Bell polynomial `B_n^{(c)}(x₁,…,x_n|λ)` from
/// `exp(Σ x_i c_i t^i/i!)`.
pub fn central_complete(n: usize, xs: &[Rational]) -> Result<LambdaPoly> {
    central_complete_with(CentralKernel::Standard, n, xs)
}

pub fn central_complete_with(kernel: CentralKernel, n: usize, xs: &[Rational]) -> Result<LambdaPoly> {
    complete_gf(n, xs, |m| kernel.coeff(m))
}

/// `Σ_k T_{n,k}(x₁,…,x_{n−k+1}|λ)`.
pub fn central_complete_sum(n: usize, xs: &[Rational]) -> Result<LambdaPoly> {
    central_complete_sum_with(CentralKernel::Standard, n, xs)
}

pub fn central_complete_sum_with(
    kernel: CentralKernel,
    n: usize,
    xs: &[Rational],
) -> Result<LambdaPoly> {
    check_len(n, xs.len())?;
    if n == 0 {
        return Ok(LambdaPoly::one());
    }
    // k = 0 contributes nothing for n > 0; its n+1 arguments are not needed.
    (1..=n)
        .map(|k| central_incomplete_with(kernel, n, k, &xs[..n - k + 1]))
        .sum()
}

/// Sum over all profiles with `Σ j·m_j = n` of
/// `n!/(m₁!⋯m_n!)·Π (x_j c_j/j!)^{m_j}`.
pub fn central_complete_partition(n: usize, xs: &[Rational]) -> Result<LambdaPoly> {
    central_complete_partition_with(CentralKernel::Standard, n, xs)
}

pub fn central_complete_partition_with(
    kernel: CentralKernel,
    n: usize,
    xs: &[Rational],
) -> Result<LambdaPoly> {
    let weights: Vec<LambdaPoly> = xs
        .iter()
        .enumerate()
        .map(|(j, x)| kernel.coeff(j + 1).scale(x))
        .collect();
    complete_bell_classical_poly(n, &weights)
}

/// Degenerate central Bell polynomial `B_{n,λ}^{(c)}(x) = Σ_k T_{2,λ}(n,k) x^k`.
pub fn degenerate_central_bell(n: usize, x: &Rational) -> LambdaPoly {
    (0..=n)
        .map(|k| central_factorial2(n, k).scale(&num_traits::pow(x.clone(), k)))
        .sum()
}

/// `B_{n,λ}^{(c)}(x)` read from `exp(x(e_λ^{1/2}(t) − e_λ^{−1/2}(t)))`.
pub fn degenerate_central_bell_gf(n: usize, x: &Rational) -> LambdaPoly {
    central_kernel_series(order_for(n))
        .scale_rational(x)
        .exp()
        .and_then(|e| e.egf_coeff(n))
        .expect("central kernel has zero constant term")
}
