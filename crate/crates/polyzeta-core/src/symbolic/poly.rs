//! Exact multivariate polynomials over the zeta atoms with big-rational
//! coefficients. Everything here is exact; the only floating point is in
//! [`ZetaPolynomial::eval_numeric`], which hands the atoms to the series
//! oracles.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::atom::ZetaAtom;
use crate::error::Result;
use crate::kernel::bernoulli::{bernoulli_even, factorial_big};
use crate::kernel::real::HighPrecReal;
use crate::zeta_numeric::{mpl_ones, polylog_half, zeta_int, MPLIndex};

type R = HighPrecReal;

/// A product of atoms with positive integer exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZetaMonomial {
    exps: BTreeMap<ZetaAtom, u32>,
}

impl ZetaMonomial {
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn atom(a: ZetaAtom) -> Self {
        Self::atom_pow(a, 1)
    }

    pub fn atom_pow(a: ZetaAtom, e: u32) -> Self {
        let mut exps = BTreeMap::new();
        if e > 0 {
            exps.insert(a, e);
        }
        Self { exps }
    }

    pub fn is_unit(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut exps = self.exps.clone();
        for (a, e) in &other.exps {
            *exps.entry(*a).or_insert(0) += e;
        }
        Self { exps }
    }

    pub fn weight(&self) -> u32 {
        self.exps.iter().map(|(a, e)| a.weight() * e).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ZetaAtom, &u32)> {
        self.exps.iter()
    }
}

impl fmt::Display for ZetaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (a, e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Finite sum of monomials with exact rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ZetaPolynomial {
    terms: BTreeMap<ZetaMonomial, BigRational>,
}

impl ZetaPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(ZetaMonomial::unit(), c);
        p
    }

    pub fn from_atom(a: ZetaAtom) -> Self {
        let mut p = Self::zero();
        p.add_term(ZetaMonomial::atom(a), BigRational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ZetaMonomial, &BigRational)> {
        self.terms.iter()
    }

    /// Add `c * mono`, keeping the no-zero-coefficient invariant.
    pub fn add_term(&mut self, mono: ZetaMonomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (m, q) in &self.terms {
            out.add_term(m.clone(), q * c);
        }
        out
    }

    /// Exact coefficient of a monomial, zero when absent.
    pub fn coeff_of(&self, mono: &ZetaMonomial) -> BigRational {
        self.terms.get(mono).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Common weight of all monomials, or `None` if mixed or zero.
    pub fn weight_homogeneous(&self) -> Option<u32> {
        let mut weights = self.terms.keys().map(|m| m.weight());
        let w = weights.next()?;
        if weights.all(|v| v == w) {
            Some(w)
        } else {
            None
        }
    }

    /// Rewrite every ζ(even s) into its exact rational multiple of π^s:
    /// ζ(2n) = (-1)^(n+1) B_{2n} 2^(2n-1) π^(2n) / (2n)!.
    pub fn canonicalize(&self) -> Self {
        let mut out = Self::zero();
        for (mono, coeff) in &self.terms {
            let mut new_coeff = coeff.clone();
            let mut new_mono = ZetaMonomial::unit();
            for (a, e) in mono.iter() {
                if let ZetaAtom::Zeta(s) = *a {
                    if s % 2 == 0 {
                        let n = s / 2;
                        let b2n = bernoulli_even(n).expect("n >= 1");
                        let mut rat = b2n
                            * BigRational::from_integer(BigInt::from(2u32).pow(s - 1))
                            / BigRational::from_integer(factorial_big(s as u64));
                        if n % 2 == 0 {
                            rat = -rat;
                        }
                        // rat^e * pi^(s e)
                        let mut rp = BigRational::one();
                        for _ in 0..*e {
                            rp *= &rat;
                        }
                        new_coeff *= rp;
                        new_mono = new_mono.mul(&ZetaMonomial::atom_pow(ZetaAtom::Pi, s * e));
                        continue;
                    }
                }
                new_mono = new_mono.mul(&ZetaMonomial::atom_pow(*a, *e));
            }
            out.add_term(new_mono, new_coeff);
        }
        out
    }

    /// Numeric value via the series oracles, atoms cached per call.
    pub fn eval_numeric(&self, digits: u32) -> Result<R> {
        let mut cache: HashMap<ZetaAtom, R> = HashMap::new();
        let mut total = R::zero(digits);
        for (mono, coeff) in &self.terms {
            let mut term = R::from_rational(coeff, digits);
            for (a, e) in mono.iter() {
                let v = match cache.get(a) {
                    Some(v) => v.clone(),
                    None => {
                        let v = atom_value(*a, digits)?;
                        cache.insert(*a, v.clone());
                        v
                    }
                };
                term = &term * &v.powi(*e as i64);
            }
            total = &total + &term;
        }
        Ok(total)
    }
}

fn atom_value(a: ZetaAtom, digits: u32) -> Result<R> {
    match a {
        ZetaAtom::Pi => Ok(R::pi(digits)),
        ZetaAtom::Ln2 => Ok(R::ln2(digits)),
        ZetaAtom::Zeta(s) => zeta_int(s, digits),
        ZetaAtom::LiHalf(s) => polylog_half(s, digits),
        ZetaAtom::MplHalf(b, c) => {
            let idx = MPLIndex::new(b, c, R::from_f64(0.5, digits))?;
            mpl_ones(&idx, digits)
        }
    }
}

impl Add<&ZetaPolynomial> for &ZetaPolynomial {
    type Output = ZetaPolynomial;
    fn add(self, rhs: &ZetaPolynomial) -> ZetaPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&ZetaPolynomial> for &ZetaPolynomial {
    type Output = ZetaPolynomial;
    fn sub(self, rhs: &ZetaPolynomial) -> ZetaPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul<&ZetaPolynomial> for &ZetaPolynomial {
    type Output = ZetaPolynomial;
    fn mul(self, rhs: &ZetaPolynomial) -> ZetaPolynomial {
        let mut out = ZetaPolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &ZetaPolynomial {
    type Output = ZetaPolynomial;
    fn neg(self) -> ZetaPolynomial {
        let mut out = ZetaPolynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}
