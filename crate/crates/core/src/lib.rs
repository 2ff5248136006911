//! Exact computation of degenerate central complete and incomplete Bell
//! polynomials, together with the number families they are built from.
//!
//! Everything is exact: scalars are arbitrary-precision rationals and every
//! degenerate quantity is a polynomial in λ ([`LambdaPoly`]). Most quantities
//! can be computed by two independent routes (a generating function and a
//! closed or partition-indexed sum); [`identities`] checks the known
//! relations between them over configurable grids.

pub mod bell;
pub mod error;
pub mod identities;
pub mod numbers;
pub mod ring;
pub mod series;

pub use error::{Error, Result};
pub use ring::{LambdaPoly, Rational};
pub use series::Series;
