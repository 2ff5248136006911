//! Name-based dispatch onto the core number families.

use std::fmt;
use std::str::FromStr;

use degbell_core::bell;
use degbell_core::numbers;
use degbell_core::ring::parse_rational;
use degbell_core::{LambdaPoly, Rational};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Stirling1,
    Stirling2Deg,
    CentralFactorial2,
    BellDeg,
    BellCentralDeg,
    Incomplete,
    IncompleteDeg,
    CentralIncomplete,
    CompleteDeg,
    CentralComplete,
}

/// What a family is indexed by besides `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// `(n, k)` with no further arguments.
    Triangle,
    /// `(n)` and a scalar `x`.
    Scalar,
    /// `(n, k)` and `n − k + 1` arguments.
    Incomplete,
    /// `(n)` and `n` arguments.
    Complete,
}

const NAMES: &[(&str, Family)] = &[
    ("stirling1", Family::Stirling1),
    ("stirling2-deg", Family::Stirling2Deg),
    ("central-factorial2", Family::CentralFactorial2),
    ("bell-deg", Family::BellDeg),
    ("bell-central-deg", Family::BellCentralDeg),
    ("incomplete", Family::Incomplete),
    ("incomplete-deg", Family::IncompleteDeg),
    ("central-incomplete", Family::CentralIncomplete),
    ("complete-deg", Family::CompleteDeg),
    ("central-complete", Family::CentralComplete),
];

impl FromStr for Family {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        NAMES
            .iter()
            .find(|(name, _)| *name == s)
            .map(|&(_, f)| f)
            .ok_or_else(|| {
                let known: Vec<&str> = NAMES.iter().map(|(n, _)| *n).collect();
                CliError::Usage(format!("unknown family {s:?} (expected one of {})", known.join(", ")))
            })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = NAMES.iter().find(|(_, fam)| fam == self).map(|(n, _)| *n).unwrap();
        f.write_str(name)
    }
}

impl Family {
    pub fn shape(self) -> Shape {
        match self {
            Family::Stirling1 | Family::Stirling2Deg | Family::CentralFactorial2 => Shape::Triangle,
            Family::BellDeg | Family::BellCentralDeg => Shape::Scalar,
            Family::Incomplete | Family::IncompleteDeg | Family::CentralIncomplete => {
                Shape::Incomplete
            }
            Family::CompleteDeg | Family::CentralComplete => Shape::Complete,
        }
    }

    pub fn has_k(self) -> bool {
        matches!(self.shape(), Shape::Triangle | Shape::Incomplete)
    }

    /// Exact value at `(n, k)`; `args` must already have the exact length the
    /// shape requires, `x` is used by scalar families.
    pub fn evaluate(
        self,
        n: usize,
        k: Option<usize>,
        args: &[Rational],
        x: &Rational,
    ) -> Result<LambdaPoly, CliError> {
        let k_or = || k.ok_or_else(|| CliError::Usage(format!("{self} needs --k")));
        let value = match self {
            Family::Stirling1 => LambdaPoly::constant(numbers::stirling1(n, k_or()?)),
            Family::Stirling2Deg => numbers::degen_stirling2(n, k_or()?),
            Family::CentralFactorial2 => numbers::central_factorial2(n, k_or()?),
            Family::BellDeg => bell::degenerate_bell_poly(n, x),
            Family::BellCentralDeg => bell::degenerate_central_bell(n, x),
            Family::Incomplete => {
                LambdaPoly::constant(bell::incomplete_bell_classical(n, k_or()?, args)?)
            }
            Family::IncompleteDeg => bell::incomplete_bell_degenerate(n, k_or()?, args)?,
            Family::CentralIncomplete => bell::central_incomplete(n, k_or()?, args)?,
            Family::CompleteDeg => bell::complete_bell_degenerate(n, args)?,
            Family::CentralComplete => bell::central_complete(n, args)?,
        };
        Ok(value)
    }

    /// Number of arguments needed at `(n, k)`, zero for families without an
    /// argument vector.
    pub fn arity(self, n: usize, k: Option<usize>) -> usize {
        match self.shape() {
            Shape::Incomplete => k.and_then(|k| bell::incomplete_arity(n, k)).unwrap_or(0),
            Shape::Complete => n,
            Shape::Triangle | Shape::Scalar => 0,
        }
    }
}

/// λ as given on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LambdaArg {
    Symbolic,
    Value(Rational),
}

impl LambdaArg {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        if s == "sym" {
            return Ok(LambdaArg::Symbolic);
        }
        parse_rational(s)
            .map(LambdaArg::Value)
            .map_err(|_| CliError::Usage(format!("invalid --lambda {s:?}: expected \"sym\" or p/q")))
    }

    pub fn apply(&self, p: &LambdaPoly) -> LambdaPoly {
        match self {
            LambdaArg::Symbolic => p.clone(),
            LambdaArg::Value(v) => LambdaPoly::constant(p.eval(v)),
        }
    }

    pub fn label(&self) -> String {
        match self {
            LambdaArg::Symbolic => "sym".to_string(),
            LambdaArg::Value(v) => degbell_core::ring::rational_to_pq(v),
        }
    }
}

/// Comma-separated rational literals.
pub fn parse_rational_list(s: &str, flag: &str) -> Result<Vec<Rational>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|item| {
            parse_rational(item)
                .map_err(|_| CliError::Usage(format!("invalid rational {item:?} in {flag}")))
        })
        .collect()
}
