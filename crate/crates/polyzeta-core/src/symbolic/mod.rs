//! Exact symbolic algebra over zeta atoms: the Kölbig reduction of the
//! J-integrals, the two expressions for I_n, even-zeta canonicalization,
//! duality, and the coefficient extraction behind the irrationality
//! witness. No floating point enters this module except through explicit
//! numeric evaluation of finished polynomials.

mod atom;
mod kolbig;
mod poly;
mod serial;

pub use atom::ZetaAtom;
pub use kolbig::{duality_check, i_n_mzv_sum, i_n_reduce, kolbig_j, mzv_reduce, DualityReport};
pub use poly::{ZetaMonomial, ZetaPolynomial};
pub use serial::{from_json, to_json};
