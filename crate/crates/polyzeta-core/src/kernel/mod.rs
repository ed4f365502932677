//! Exact rationals, high-precision reals, gamma/Bernoulli primitives, and
//! singularity-robust quadrature. Everything downstream builds on this.

pub mod bernoulli;
pub mod gamma;
pub mod quad;
pub mod real;

pub use bernoulli::{bernoulli, bernoulli_even, binomial_big, factorial_big};
pub use gamma::{binom_real, ln_gamma, ln_gamma_signed, recip_central_binom};
pub use quad::{quad_de, quad_de_halfline, HalfLinePoint, QuadPoint, QuadResult, QuadratureConfig, Scheme};
pub use real::{HighPrecReal, DEFAULT_DIGITS, MIN_DIGITS};
