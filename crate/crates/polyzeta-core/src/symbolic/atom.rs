//! The transcendental atoms zeta-polynomials are built from.

use std::fmt;

use crate::error::{Error, Result};

/// One transcendental constant: π, ln 2, ζ(s), Li_s(1/2), or
/// Li_{b,{1}_c}(1/2). Canonical form forbids ζ at even arguments (those are
/// rewritten to powers of π).
///
/// The variant order fixes the display order of polynomials (highest
/// monomial first), chosen so the paper's displays come out verbatim:
/// zeta terms, then ln 2 powers, then Li values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ZetaAtom {
    Pi,
    LiHalf(u32),
    MplHalf(u32, u32),
    Ln2,
    Zeta(u32),
}

impl ZetaAtom {
    pub fn validate(&self) -> Result<()> {
        match *self {
            ZetaAtom::Pi | ZetaAtom::Ln2 => Ok(()),
            ZetaAtom::Zeta(s) if s >= 2 => Ok(()),
            ZetaAtom::LiHalf(s) if s >= 2 => Ok(()),
            ZetaAtom::MplHalf(b, c) if b >= 2 && c >= 1 => Ok(()),
            other => Err(Error::Domain(format!("invalid atom parameters: {other:?}"))),
        }
    }

    /// Weight grading: π and ln 2 weigh 1; ζ(s) and Li_s weigh s;
    /// Li_{b,{1}_c} weighs b + c.
    pub fn weight(&self) -> u32 {
        match *self {
            ZetaAtom::Pi | ZetaAtom::Ln2 => 1,
            ZetaAtom::Zeta(s) | ZetaAtom::LiHalf(s) => s,
            ZetaAtom::MplHalf(b, c) => b + c,
        }
    }

    pub fn is_even_zeta(&self) -> bool {
        matches!(*self, ZetaAtom::Zeta(s) if s % 2 == 0)
    }
}

impl fmt::Display for ZetaAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ZetaAtom::Pi => write!(f, "pi"),
            ZetaAtom::Ln2 => write!(f, "ln2"),
            ZetaAtom::Zeta(s) => write!(f, "zeta({s})"),
            ZetaAtom::LiHalf(s) => write!(f, "li_half({s})"),
            ZetaAtom::MplHalf(b, c) => write!(f, "mpl_half({b},{c})"),
        }
    }
}
