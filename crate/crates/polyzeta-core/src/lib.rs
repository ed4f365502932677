//! High-precision and exact-symbolic evaluation of a family of polytope
//! integrals, the multiple zeta values ζ(m, {1}_k), polylogarithms at 1/2,
//! and integral representations of Euler's constant.
//!
//! The crate is organized as independent evaluation routes that are checked
//! against each other:
//!
//! - [`kernel`]: big rationals, D-digit reals, ln Γ, Bernoulli numbers, and
//!   double-exponential quadrature.
//! - [`zeta_numeric`]: series-based oracles for ζ(s), Li_s(z), multiple
//!   polylogarithms, MZVs, and the logarithmic integral.
//! - [`symbolic`]: exact zeta-polynomial algebra and the reduction of
//!   ζ(m,{1}_k) and the triangle integrals to single zeta values.
//! - [`polytope`]: direct quadrature and Monte Carlo oracles for every
//!   integral, independent of the symbolic route.
//! - [`asymptotics`]: pole-data expansion engine and constant-weight sums.
//! - [`euler_gamma`]: generating-function identities and Euler's constant.
//! - [`combinatorics`]: weight coefficients and the higher-dimensional
//!   polytope reductions.
//! - [`verify`]: the named check suites behind `polyzeta verify`.

pub mod asymptotics;
pub mod combinatorics;
pub mod error;
pub mod euler_gamma;
pub mod kernel;
pub mod polytope;
pub mod symbolic;
pub mod verify;
pub mod zeta_numeric;

pub use error::{Error, Result};
pub use kernel::real::HighPrecReal;
pub use kernel::{QuadratureConfig, Scheme};
pub use verify::{run_suite, Check, RunConfig, Suite, SuiteReport};
pub use zeta_numeric::{MPLIndex, MZVIndex};

/// Exact rational with unbounded integers; the coefficient type of every
/// symbolic object in this crate.
pub type BigRational = num_rational::BigRational;
