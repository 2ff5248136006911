//! Executable identity checks over an `(n, k)` grid.
//!
//! Every check compares two independently computed sides exactly. Arguments
//! `x_j` are drawn from a seeded generator; λ is either kept symbolic or
//! specialised to a list of rational samples. Where an identity is only
//! claimed on a parity class of `n − k`, the complementary class is still
//! evaluated and reported as an observation, never folded into the status.

use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bell::{
    self, all_profiles, central_complete_with, central_incomplete_with, ones, powers,
    CentralKernel,
};
use crate::numbers::{
    binomial, central_factorial2, central_factorial2_sum, degen_falling, degen_rising,
    degen_stirling2, factorial, stirling1, stirling1_recurrence,
};
use crate::ring::{int, rat, rational_to_pq, LambdaPoly, Rational};
use crate::series::{order_for, Series};

/// How λ is treated when comparing two sides.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum LambdaMode {
    #[default]
    Symbolic,
    Samples(Vec<Rational>),
}

impl LambdaMode {
    /// `"symbolic"` or `"samples:p/q,p/q,…"`.
    pub fn label(&self) -> String {
        match self {
            LambdaMode::Symbolic => "symbolic".to_string(),
            LambdaMode::Samples(vs) => {
                let items: Vec<String> = vs.iter().map(rational_to_pq).collect();
                format!("samples:{}", items.join(","))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub n_max: usize,
    pub lambda: LambdaMode,
    pub seed: u64,
    /// Minimum number of random argument vectors per `(n, k)` shape; the
    /// suite uses `max(samples, n + 1)`.
    pub samples: usize,
    pub kernel: CentralKernel,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n_max: 8,
            lambda: LambdaMode::Symbolic,
            seed: 1,
            samples: 5,
            kernel: CentralKernel::Standard,
        }
    }
}

impl SuiteConfig {
    fn samples_for(&self, n: usize) -> usize {
        self.samples.max(n + 1)
    }

    /// Nonzero λ values for checks that need a numeric route.
    fn numeric_lambdas(&self) -> Vec<Rational> {
        match &self.lambda {
            LambdaMode::Samples(vs) => vs.iter().filter(|v| !v.is_zero()).cloned().collect(),
            LambdaMode::Symbolic => vec![rat(1, 2), rat(-1, 3), int(2)],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParityClass {
    /// Exactly the `(n, k)` pairs the identity is claimed for.
    AsStated,
    /// The complement of an as-stated parity restriction.
    OffParity,
    /// No parity restriction.
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub id: &'static str,
    pub description: &'static str,
    pub parity_class: ParityClass,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    pub n_max: usize,
    pub samples: usize,
    pub lambda_mode: String,
    /// Number of `(n, k)` pairs visited in the as-stated class.
    pub visited: usize,
}

/// First disagreement found. `lhs`/`rhs` are ascending λ-coefficient lists;
/// `lambda` is `"sym"` or the sampled value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub n: usize,
    pub k: Option<usize>,
    pub lambda: String,
    pub xs: Vec<String>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Observation {
    pub parity_class: ParityClass,
    pub visited: usize,
    pub comparisons: usize,
    pub agreed: usize,
    pub first_disagreement: Option<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub check_id: String,
    pub description: String,
    pub grid: Grid,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub observations: Option<Observation>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// True when every report passed.
pub fn all_passed(reports: &[IdentityReport]) -> bool {
    reports.iter().all(IdentityReport::passed)
}

type CheckFn = fn(&mut Ctx);

struct Registered {
    check: IdentityCheck,
    run: CheckFn,
}

const REGISTRY: &[Registered] = &[
    Registered {
        check: IdentityCheck {
            id: "L1",
            description: "central incomplete Bell polynomial equals the classical incomplete Bell polynomial at x_j times the explicit signed central weight, n-k even",
            parity_class: ParityClass::AsStated,
        },
        run: check_central_vs_classical,
    },
    Registered {
        check: IdentityCheck {
            id: "T2",
            description: "x^n times the Stirling-sum formula for T_{2,lambda}(n,k) equals T_{n,k}(x,x^2,...|lambda) for n>=k and 0 for n<k, n-k even; also via exp((l-k/2)/lambda log(1+lambda x t)) at numeric lambda",
            parity_class: ParityClass::AsStated,
        },
        run: check_stirling_sum_formula,
    },
    Registered {
        check: IdentityCheck {
            id: "C3",
            description: "T_{n,k}(1,...,1|lambda) equals T_{2,lambda}(n,k) on both routes, and T_{n,k}(x,x^2,...|lambda) = x^n T_{n,k}(1,...,1|lambda), n-k even",
            parity_class: ParityClass::AsStated,
        },
        run: check_all_ones_central,
    },
    Registered {
        check: IdentityCheck {
            id: "Z0",
            description: "T_{n,k}(x,0,...,0|lambda) = x^k C(0,n-k), n-k even",
            parity_class: ParityClass::AsStated,
        },
        run: check_zero_tail,
    },
    Registered {
        check: IdentityCheck {
            id: "H1",
            description: "T_{n,k}(x,...,x|lambda) = x^k T_{n,k}(1,...,1|lambda) and T_{n,k}(a xs|lambda) = a^k T_{n,k}(xs|lambda), n-k even",
            parity_class: ParityClass::AsStated,
        },
        run: check_central_homogeneity,
    },
    Registered {
        check: IdentityCheck {
            id: "H2",
            description: "degenerate incomplete Bell polynomial scales by a^k under x_j -> a x_j and by a^n under x_j -> a^j x_j",
            parity_class: ParityClass::All,
        },
        run: check_degenerate_homogeneity,
    },
    Registered {
        check: IdentityCheck {
            id: "E9",
            description: "B_{n,k}(1,...,1|lambda) equals the degenerate Stirling number of the second kind",
            parity_class: ParityClass::All,
        },
        run: check_ones_is_stirling2,
    },
    Registered {
        check: IdentityCheck {
            id: "E11",
            description: "degenerate complete Bell polynomial equals the row sum of degenerate incomplete Bell polynomials",
            parity_class: ParityClass::All,
        },
        run: check_complete_is_row_sum,
    },
    Registered {
        check: IdentityCheck {
            id: "E12",
            description: "B_n(x,...,x|lambda) = sum_k x^k S_{2,lambda}(n,k) = B_{n,lambda}(x) from exp(x(e_lambda(t)-1))",
            parity_class: ParityClass::All,
        },
        run: check_diagonal_is_bell,
    },
    Registered {
        check: IdentityCheck {
            id: "T4",
            description: "central complete Bell polynomial equals the sum over all profiles m_1+2m_2+...+n m_n = n with explicit signed weights, n odd",
            parity_class: ParityClass::AsStated,
        },
        run: check_central_profile_expansion,
    },
    Registered {
        check: IdentityCheck {
            id: "T5",
            description: "sum_k x^k T_{n,k}(1,...,1|lambda) = B^{(c)}_{n,lambda}(x) on both its routes",
            parity_class: ParityClass::All,
        },
        run: check_central_bell_row_sum,
    },
    Registered {
        check: IdentityCheck {
            id: "C6",
            description: "B^{(c)}_n(x,...,x|lambda) = sum_k T_{n,k}(x,...,x|lambda) = B^{(c)}_{n,lambda}(x)",
            parity_class: ParityClass::All,
        },
        run: check_central_diagonal_is_bell,
    },
    Registered {
        check: IdentityCheck {
            id: "D0",
            description: "every family agrees across its independent computation routes; the Stirling-sum route for T_{2,lambda}(n,k) is recorded separately for odd n-k",
            parity_class: ParityClass::All,
        },
        run: check_dual_routes,
    },
];

/// Every registered check, in execution order.
pub fn registry() -> Vec<IdentityCheck> {
    REGISTRY.iter().map(|r| r.check).collect()
}

/// Runs every registered check. Checks run in parallel; each has its own
/// random stream derived from the seed, so the output depends only on the
/// configuration.
pub fn run_suite(config: &SuiteConfig) -> Vec<IdentityReport> {
    REGISTRY
        .par_iter()
        .enumerate()
        .map(|(i, r)| run_registered(config, i, r))
        .collect()
}

/// Runs the single check with the given id.
pub fn run_check(config: &SuiteConfig, id: &str) -> Option<IdentityReport> {
    REGISTRY
        .iter()
        .enumerate()
        .find(|(_, r)| r.check.id == id)
        .map(|(i, r)| run_registered(config, i, r))
}

fn run_registered(config: &SuiteConfig, index: usize, r: &Registered) -> IdentityReport {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index as u64);
    let mut ctx = Ctx {
        config,
        rng,
        stated: Tally::default(),
        off: None,
    };
    (r.run)(&mut ctx);
    ctx.into_report(&r.check)
}

#[derive(Default)]
struct Tally {
    pairs: usize,
    comparisons: usize,
    agreed: usize,
    first_failure: Option<Counterexample>,
}

struct Ctx<'a> {
    config: &'a SuiteConfig,
    rng: ChaCha8Rng,
    stated: Tally,
    off: Option<Tally>,
}

#[derive(Clone, Copy)]
enum Class {
    Stated,
    Off,
}

impl Ctx<'_> {
    fn n_max(&self) -> usize {
        self.config.n_max
    }

    fn kernel(&self) -> CentralKernel {
        self.config.kernel
    }

    fn random_rational(&mut self) -> Rational {
        let p: i64 = self.rng.gen_range(-20..=20);
        let q: i64 = self.rng.gen_range(1..=10);
        rat(p, q)
    }

    fn random_vec(&mut self, len: usize) -> Vec<Rational> {
        (0..len).map(|_| self.random_rational()).collect()
    }

    fn tally(&mut self, class: Class) -> &mut Tally {
        match class {
            Class::Stated => &mut self.stated,
            Class::Off => self.off.get_or_insert_with(Tally::default),
        }
    }

    fn visit(&mut self, class: Class) {
        self.tally(class).pairs += 1;
    }

    /// Compares two λ-polynomials under the configured λ mode.
    fn compare(
        &mut self,
        class: Class,
        n: usize,
        k: Option<usize>,
        xs: &[Rational],
        lhs: &LambdaPoly,
        rhs: &LambdaPoly,
    ) {
        match self.config.lambda.clone() {
            LambdaMode::Symbolic => {
                let cx = (lhs != rhs).then(|| Counterexample {
                    n,
                    k,
                    lambda: "sym".to_string(),
                    xs: xs.iter().map(rational_to_pq).collect(),
                    lhs: lhs.to_pq_strings(),
                    rhs: rhs.to_pq_strings(),
                });
                self.record(class, cx);
            }
            LambdaMode::Samples(values) => {
                for v in values {
                    self.compare_at(class, n, k, xs, &v, &lhs.eval(&v), &rhs.eval(&v));
                }
            }
        }
    }

    /// Compares two values already specialised at `λ = v`.
    #[allow(clippy::too_many_arguments)]
    fn compare_at(
        &mut self,
        class: Class,
        n: usize,
        k: Option<usize>,
        xs: &[Rational],
        v: &Rational,
        lhs: &Rational,
        rhs: &Rational,
    ) {
        let cx = (lhs != rhs).then(|| Counterexample {
            n,
            k,
            lambda: rational_to_pq(v),
            xs: xs.iter().map(rational_to_pq).collect(),
            lhs: LambdaPoly::constant(lhs.clone()).to_pq_strings(),
            rhs: LambdaPoly::constant(rhs.clone()).to_pq_strings(),
        });
        self.record(class, cx);
    }

    fn record(&mut self, class: Class, failure: Option<Counterexample>) {
        let t = self.tally(class);
        t.comparisons += 1;
        match failure {
            None => t.agreed += 1,
            Some(cx) => {
                if t.first_failure.is_none() {
                    t.first_failure = Some(cx);
                }
            }
        }
    }

    fn into_report(self, check: &IdentityCheck) -> IdentityReport {
        let config = self.config;
        let status = if self.stated.first_failure.is_none() {
            Status::Pass
        } else {
            Status::Fail
        };
        IdentityReport {
            check_id: check.id.to_string(),
            description: check.description.to_string(),
            grid: Grid {
                n_max: config.n_max,
                samples: config.samples_for(config.n_max),
                lambda_mode: config.lambda.label(),
                visited: self.stated.pairs,
            },
            status,
            counterexample: self.stated.first_failure,
            observations: self.off.map(|t| Observation {
                parity_class: ParityClass::OffParity,
                visited: t.pairs,
                comparisons: t.comparisons,
                agreed: t.agreed,
                first_disagreement: t.first_failure,
            }),
        }
    }
}

fn parity_class(n: usize, k: usize) -> Class {
    if n.abs_diff(k).is_multiple_of(2) {
        Class::Stated
    } else {
        Class::Off
    }
}

/// `(1/2)_{j,λ} + <1/2>_{j,λ}` for odd `j`, `(1/2)_{j,λ} − <1/2>_{j,λ}` for
/// even `j`: the central weight spelled out term by term.
fn explicit_central_weight(j: usize) -> LambdaPoly {
    let half = rat(1, 2);
    let falling = degen_falling(&half, j);
    let rising = degen_rising(&half, j);
    if j % 2 == 1 {
        &falling + &rising
    } else {
        &falling - &rising
    }
}

fn x_pow(x: &Rational, e: usize) -> Rational {
    num_traits::pow(x.clone(), e)
}

fn check_central_vs_classical(ctx: &mut Ctx) {
    let kernel = ctx.kernel();
    for n in 0..=ctx.n_max() {
        for k in 0..=n {
            let class = parity_class(n, k);
            ctx.visit(class);
            let len = n - k + 1;
            for _ in 0..ctx.config.samples_for(n) {
                let xs = ctx.random_vec(len);
                let lhs = central_incomplete_with(kernel, n, k, &xs).expect("arity");
                let args: Vec<LambdaPoly> = xs
                    .iter()
                    .enumerate()
                    .map(|(j, x)| explicit_central_weight(j + 1).scale(x))
                    .collect();
                let rhs = bell::incomplete_bell_classical_poly(n, k, &args).expect("arity");
                ctx.compare(class, n, Some(k), &xs, &lhs, &rhs);
            }
        }
    }
}

/// `(1/k!) Σ_l C(k,l)(−1)^{k−l} e_λ^{l−k/2}(xt)` at `tⁿ/n!`, evaluated at a
/// numeric `λ = v ≠ 0` through `exp(((l − k/2)/v)·log(1 + v x t))`.
fn central_power_via_log(n: usize, k: usize, x: &Rational, v: &Rational) -> Rational {
    let order = order_for(n);
    let log = Series::t(order)
        .scale_rational(&(v * x))
        .log1p()
        .expect("zero constant term");
    let half_k = rat(k as i64, 2);
    let mut acc = Series::zero(order);
    for l in 0..=k {
        let sign = if (k - l).is_multiple_of(2) { 1 } else { -1 };
        let weight = Rational::from_integer(binomial(k, l) * sign);
        let rate = (int(l as i64) - &half_k) / v;
        let term = log.scale_rational(&rate).exp().expect("zero constant term");
        acc = &acc + &term.scale_rational(&weight);
    }
    acc.scale_rational(&factorial(k).recip())
        .egf_coeff(n)
        .expect("order covers n")
        .as_constant()
        .expect("numeric λ leaves constants")
}

fn check_stirling_sum_formula(ctx: &mut Ctx) {
    let kernel = ctx.kernel();
    let lambdas = ctx.config.numeric_lambdas();
    let n_max = ctx.n_max();
    for n in 0..=n_max {
        // k runs past n so the vanishing branch is exercised too.
        for k in 0..=n_max.max(n + 2) {
            let class = parity_class(n, k);
            ctx.visit(class);
            let sum_formula = central_factorial2_sum(n, k);
            for _ in 0..ctx.config.samples_for(n).min(3) {
                let x = ctx.random_rational();
                let lhs = sum_formula.scale(&x_pow(&x, n));
                let rhs = if n >= k {
                    central_incomplete_with(kernel, n, k, &powers(&x, n - k + 1)).expect("arity")
                } else {
                    LambdaPoly::zero()
                };
                let xs = [x.clone()];
                ctx.compare(class, n, Some(k), &xs, &lhs, &rhs);
                for v in &lambdas {
                    let via_log = central_power_via_log(n, k, &x, v);
                    ctx.compare_at(class, n, Some(k), &xs, v, &lhs.eval(v), &via_log);
                }
            }
        }
    }
}

fn check_all_ones_central(ctx: &mut Ctx) {
    let kernel = ctx.kernel();
    for n in 0..=ctx.n_max() {
        for k in 0..=n {
            let class = parity_class(n, k);
            ctx.visit(class);
            let len = n - k + 1;
            let all_ones = central_incomplete_with(kernel, n, k, &ones(len)).expect("arity");
            let one = [int(1)];
            ctx.compare(class, n, Some(k), &one, &all_ones, &central_factorial2(n, k));
            ctx.compare(class, n, Some(k), &one, &all_ones, &central_factorial2_sum(n, k));
            for _ in 0..3 {
                let x = ctx.random_rational();
                let lhs = central_incomplete_with(kernel, n, k, &powers(&x, len)).expect("arity");
                let rhs = all_ones.scale(&x_pow(&x, n));
                ctx.compare(class, n, Some(k), &[x], &lhs, &rhs);
            }
        }
    }
}

fn check_zero_tail(ctx: &mut Ctx) {
    let kernel = ctx.kernel();
    for n in 0..=ctx.n_max() {
        for k in 0..=n {
            let class = parity_class(n, k);
            ctx.visit(class);
            for _ in 0..ctx.config.samples_for(n) {
                let x = ctx.random_rational();
                let mut xs = vec![Rational::zero(); n - k + 1];
                xs[0] = x.clone();
                let lhs = central_incomplete_with(kernel, n, k, &xs).expect("arity");
                let rhs = if n == k {
                    LambdaPoly::constant(x_pow(&x, k))
                } else {
                    LambdaPoly::zero()
                };
                ctx.compare(class, n, Some(k), &xs, &lhs, &rhs);
            }
        }
    }
}

fn check_central_homogeneity(ctx: &mut Ctx) {
    let kernel = ctx.kernel();
    for n in 0..=ctx.n_max() {
        for k in 0..=n {
            let class = parity_class(n, k);
            ctx.visit(class);
            let len = n - k + 1;
            let all_ones = central_incomplete_with(kernel, n, k, &ones(len)).expect("arity");
            for _ in 0..ctx.config.samples_for(n) {
                let x = ctx.random_rational();
                let diagonal = central_incomplete_with(kernel, n, k, &vec![x.clone(); len])
                    .expect("arity");
                ctx.compare(class, n, Some(k), std::slice::from_ref(&x), &diagonal, &all_ones.scale(&x_pow(&x, k)));

                let alpha = ctx.random_rational();
                let xs = ctx.random_vec(len);
                let scaled: Vec<Rational> = xs.iter().map(|x| x * &alpha).collect();
                let lhs = central_incomplete_with(kernel, n, k, &scaled).expect("arity");
                let rhs = central_incomplete_with(kernel, n, k, &xs)
                    .expect("arity")
                    .scale(&x_pow(&alpha, k));
                ctx.compare(class, n, Some(k), &scaled, &lhs, &rhs);
            }
        }
    }
}

fn check_degenerate_homogeneity(ctx: &mut Ctx) {
    for n in 0..=ctx.n_max() {
        for k in 0..=n {
            ctx.visit(Class::Stated);
            let len = n - k + 1;
            for _ in 0..ctx.config.samples_for(n) {
                let alpha = ctx.random_rational();
                let xs = ctx.random_vec(len);
                let base = bell::incomplete_bell_degenerate(n, k, &xs).expect("arity");

                let uniform: Vec<Rational> = xs.iter().map(|x| x * &alpha).collect();
                let lhs = bell::incomplete_bell_degenerate(n, k, &uniform).expect("arity");
                ctx.compare(Class::Stated, n, Some(k), &uniform, &lhs, &base.scale(&x_pow(&alpha, k)));

                let graded: Vec<Rational> = xs
                    .iter()
                    .enumerate()
                    .map(|(j, x)| x * x_pow(&alpha, j + 1))
                    .collect();
                let lhs = bell::incomplete_bell_degenerate(n, k, &graded).expect("arity");
                ctx.compare(Class::Stated, n, Some(k), &graded, &lhs, &base.scale(&x_pow(&alpha, n)));
            }
        }
    }
}

fn check_ones_is_stirling2(ctx: &mut Ctx) {
    for n in 0..=ctx.n_max() {
        for k in 0..=n {
            ctx.visit(Class::Stated);
            let lhs = bell::incomplete_bell_degenerate(n, k, &ones(n - k + 1)).expect("arity");
            ctx.compare(Class::Stated, n, Some(k), &[int(1)], &lhs, &degen_stirling2(n, k));
        }
    }
}

fn check_complete_is_row_sum(ctx: &mut Ctx) {
    for n in 0..=ctx.n_max() {
        ctx.visit(Class::Stated);
        for _ in 0..ctx.config.samples_for(n) {
            let xs = ctx.random_vec(n);
            let lhs = bell::complete_bell_degenerate(n, &xs).expect("arity");
            let rhs: LambdaPoly = if n == 0 {
                LambdaPoly::one()
            } else {
                (1..=n)
                    .map(|k| bell::incomplete_bell_degenerate(n, k, &xs[..n - k + 1]).expect("arity"))
                    .sum()
            };
            ctx.compare(Class::Stated, n, None, &xs, &lhs, &rhs);
        }
    }
}

fn check_diagonal_is_bell(ctx: &mut Ctx) {
    for n in 0..=ctx.n_max() {
        ctx.visit(Class::Stated);
        for _ in 0..ctx.config.samples_for(n) {
            let x = ctx.random_rational();
            let lhs = bell::complete_bell_degenerate(n, &vec![x.clone(); n]).expect("arity");
            let stirling_sum: LambdaPoly = (0..=n)
                .map(|k| degen_stirling2(n, k).scale(&x_pow(&x, k)))
                .sum();
            let xs = [x.clone()];
            ctx.compare(Class::Stated, n, None, &xs, &lhs, &stirling_sum);
            ctx.compare(Class::Stated, n, None, &xs, &lhs, &bell::degenerate_bell_poly_gf(n, &x));
        }
    }
}

fn check_central_profile_expansion(ctx: &mut Ctx) {
    let kernel = ctx.kernel();
    for n in 0..=ctx.n_max() {
        let class = if n % 2 == 1 { Class::Stated } else { Class::Off };
        ctx.visit(class);
        for _ in 0..ctx.config.samples_for(n) {
            let xs = ctx.random_vec(n);
            let lhs = central_complete_with(kernel, n, &xs).expect("arity");
            let weights: Vec<LambdaPoly> = xs
                .iter()
                .enumerate()
                .map(|(j, x)| explicit_central_weight(j + 1).scale(x))
                .collect();
            debug_assert!(all_profiles(n).iter().all(|p| p.total() == n));
            let rhs = bell::complete_bell_classical_poly(n, &weights).expect("arity");
            ctx.compare(class, n, None, &xs, &lhs, &rhs);
        }
    }
}

fn check_central_bell_row_sum(ctx: &mut Ctx) {
    let kernel = ctx.kernel();
    for n in 0..=ctx.n_max() {
        ctx.visit(Class::Stated);
        let rows: Vec<LambdaPoly> = (0..=n)
            .map(|k| central_incomplete_with(kernel, n, k, &ones(n - k + 1)).expect("arity"))
            .collect();
        for _ in 0..3 {
            let x = ctx.random_rational();
            let lhs: LambdaPoly = rows
                .iter()
                .enumerate()
                .map(|(k, t)| t.scale(&x_pow(&x, k)))
                .sum();
            let xs = [x.clone()];
            ctx.compare(Class::Stated, n, None, &xs, &lhs, &bell::degenerate_central_bell(n, &x));
            ctx.compare(Class::Stated, n, None, &xs, &lhs, &bell::degenerate_central_bell_gf(n, &x));
        }
    }
}

fn check_central_diagonal_is_bell(ctx: &mut Ctx) {
    let kernel = ctx.kernel();
    for n in 0..=ctx.n_max() {
        ctx.visit(Class::Stated);
        for _ in 0..3 {
            let x = ctx.random_rational();
            let complete = central_complete_with(kernel, n, &vec![x.clone(); n]).expect("arity");
            let row_sum: LambdaPoly = if n == 0 {
                LambdaPoly::one()
            } else {
                (1..=n)
                    .map(|k| {
                        central_incomplete_with(kernel, n, k, &vec![x.clone(); n - k + 1])
                            .expect("arity")
                    })
                    .sum()
            };
            let xs = [x.clone()];
            let bell_poly = bell::degenerate_central_bell(n, &x);
            ctx.compare(Class::Stated, n, None, &xs, &complete, &row_sum);
            ctx.compare(Class::Stated, n, None, &xs, &complete, &bell_poly);
        }
    }
}

fn check_dual_routes(ctx: &mut Ctx) {
    for n in 0..=ctx.n_max() {
        for k in 0..=n {
            ctx.visit(Class::Stated);
            let one = [int(1)];
            let s1 = LambdaPoly::constant(stirling1(n, k));
            let s1_rec = LambdaPoly::constant(stirling1_recurrence(n, k));
            ctx.compare(Class::Stated, n, Some(k), &one, &s1, &s1_rec);

            let route_a = central_factorial2(n, k);
            let route_b = central_factorial2_sum(n, k);
            ctx.compare(Class::Stated, n, Some(k), &one, &route_a, &route_b);
            if (n - k) % 2 == 1 {
                ctx.visit(Class::Off);
                ctx.compare(Class::Off, n, Some(k), &one, &route_a, &route_b);
            }

            for _ in 0..ctx.config.samples_for(n) {
                let xs = ctx.random_vec(n - k + 1);
                let gf = bell::incomplete_bell_degenerate(n, k, &xs).expect("arity");
                let part = bell::incomplete_bell_degenerate_partition(n, k, &xs).expect("arity");
                ctx.compare(Class::Stated, n, Some(k), &xs, &gf, &part);
                let gf = bell::central_incomplete(n, k, &xs).expect("arity");
                let part = bell::central_incomplete_partition(n, k, &xs).expect("arity");
                ctx.compare(Class::Stated, n, Some(k), &xs, &gf, &part);
            }
        }
        for _ in 0..ctx.config.samples_for(n) {
            let xs = ctx.random_vec(n);
            let gf = bell::central_complete(n, &xs).expect("arity");
            let sum = bell::central_complete_sum(n, &xs).expect("arity");
            let part = bell::central_complete_partition(n, &xs).expect("arity");
            ctx.compare(Class::Stated, n, None, &xs, &gf, &sum);
            ctx.compare(Class::Stated, n, None, &xs, &gf, &part);
            let gf = bell::complete_bell_degenerate(n, &xs).expect("arity");
            let sum = bell::complete_bell_degenerate_sum(n, &xs).expect("arity");
            ctx.compare(Class::Stated, n, None, &xs, &gf, &sum);

            let x = ctx.random_rational();
            let xs = [x.clone()];
            let (a, b) = (bell::degenerate_bell_poly(n, &x), bell::degenerate_bell_poly_gf(n, &x));
            ctx.compare(Class::Stated, n, None, &xs, &a, &b);
            let (a, b) = (
                bell::degenerate_central_bell(n, &x),
                bell::degenerate_central_bell_gf(n, &x),
            );
            ctx.compare(Class::Stated, n, None, &xs, &a, &b);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(n_max: usize) -> SuiteConfig {
        SuiteConfig {
            n_max,
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn registry_ids_are_unique() {
        let ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
        for id in ["L1", "T2", "C3", "Z0", "H1", "H2", "E9", "E11", "E12", "T4", "T5", "C6", "D0"] {
            assert!(ids.contains(&id), "{id} missing");
        }
    }

    #[test]
    fn explicit_weight_matches_kernel() {
        for j in 1..=8 {
            assert_eq!(explicit_central_weight(j), crate::numbers::central_coeff(j));
        }
    }

    #[test]
    fn log_route_small_case() {
        // (n,k,x) = (2,1,1) at λ = 1/2: T_{2,1}(1,1|λ) = −λ.
        assert_eq!(central_power_via_log(2, 1, &int(1), &rat(1, 2)), rat(-1, 2));
        // (3,1,2): 2³·(1/4 + 2λ²) at λ = 1.
        assert_eq!(central_power_via_log(3, 1, &int(2), &int(1)), int(18));
        assert_eq!(central_power_via_log(1, 3, &int(1), &int(1)), int(0));
    }

    #[test]
    fn trivial_grid_passes() {
        let reports = run_suite(&config(0));
        assert_eq!(reports.len(), REGISTRY.len());
        assert!(all_passed(&reports));
    }

    #[test]
    fn visited_pairs_cover_parity_classes() {
        let r = run_check(&config(8), "L1").unwrap();
        // Σ_{n=0}^{8} (⌊n/2⌋ + 1)
        assert_eq!(r.grid.visited, 25);
        let obs = r.observations.unwrap();
        assert_eq!(obs.visited, 45 - 25);
        assert_eq!(obs.agreed, obs.comparisons);

        let t4 = run_check(&config(8), "T4").unwrap();
        assert_eq!(t4.grid.visited, 4);
        assert_eq!(t4.observations.unwrap().visited, 5);
    }

    #[test]
    fn sampled_lambda_mode() {
        let cfg = SuiteConfig {
            n_max: 4,
            lambda: LambdaMode::Samples(vec![rat(1, 2), int(0), int(-3)]),
            ..SuiteConfig::default()
        };
        let reports = run_suite(&cfg);
        assert!(all_passed(&reports));
        assert_eq!(reports[0].grid.lambda_mode, "samples:1/2,0/1,-3/1");
    }
}
