//! The reduction of J_{k,l} (and with it ζ(m,{1}_k) and the triangle
//! integrals I_n) to polynomials in single zeta values.
//!
//! J_{k,l} = k! l! Σ_{p} (-1)^(p+1)/p! Σ_{t} ζ(t₁)…ζ(t_p)/(t₁…t_p)
//!           Σ_{l_i} C(t₁,l₁)…C(t_p,l_p),
//!
//! with t₁ + … + t_p = k + l + 1, t_i > 1, and 0 < l_i < t_i summing to l.
//! The t-sum runs over multisets; enumerating each multiset once carries the
//! symmetry factor p!/∏ mult! orderings, so the effective weight per
//! multiset is (-1)^(p+1)/∏ mult!. The convention is pinned by the numeric
//! oracle (J_{1,2} = 2ζ(3,1) = ζ(4)/2 requires the 1/2! on {2,2}).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::atom::ZetaAtom;
use super::poly::{ZetaMonomial, ZetaPolynomial};
use crate::error::{Error, Result};
use crate::kernel::bernoulli::{binomial_big, factorial_big};
use crate::kernel::real::HighPrecReal;
use crate::zeta_numeric::MZVIndex;

type R = HighPrecReal;

/// Visit every multiset of integers ≥ 2 with the given sum, as a
/// non-increasing slice.
fn for_each_partition<F: FnMut(&[u32])>(sum: u32, f: &mut F) {
    fn rec<F: FnMut(&[u32])>(remaining: u32, max_part: u32, current: &mut Vec<u32>, f: &mut F) {
        if remaining == 0 {
            f(current);
            return;
        }
        let hi = remaining.min(max_part);
        let mut part = hi;
        while part >= 2 {
            current.push(part);
            rec(remaining - part, part, current, f);
            current.pop();
            part -= 1;
        }
    }
    let mut current = Vec::new();
    rec(sum, sum, &mut current, f);
}

/// Coefficient of x^l in ∏_i ( Σ_{0<li<t_i} C(t_i, li) x^li ).
fn composition_sum(parts: &[u32], l: u32) -> BigInt {
    let l = l as usize;
    let mut acc = vec![BigInt::zero(); l + 1];
    acc[0] = BigInt::one();
    for &t in parts {
        let mut next = vec![BigInt::zero(); l + 1];
        for (deg, c) in acc.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for li in 1..t {
                let nd = deg + li as usize;
                if nd > l {
                    break;
                }
                next[nd] += c * binomial_big(t as u64, li as u64);
            }
        }
        acc = next;
    }
    acc[l].clone()
}

/// J_{k,l} as an exact polynomial in single zeta values.
pub fn kolbig_j(k: u32, l: u32) -> Result<ZetaPolynomial> {
    if l < 1 {
        return Err(Error::Domain(
            "kolbig_j requires l >= 1 (the integral diverges at l = 0)".into(),
        ));
    }
    let weight = k + l + 1;
    let kf_lf = BigRational::from_integer(factorial_big(k as u64) * factorial_big(l as u64));
    let mut out = ZetaPolynomial::zero();
    for_each_partition(weight, &mut |parts| {
        let comp = composition_sum(parts, l);
        if comp.is_zero() {
            return;
        }
        let p = parts.len();
        // ∏ mult_v! over repeated part values
        let mut mult_fact = BigInt::one();
        let mut run = 1u64;
        for w in 1..=p {
            if w < p && parts[w] == parts[w - 1] {
                run += 1;
            } else {
                mult_fact *= factorial_big(run);
                run = 1;
            }
        }
        let mut denom = mult_fact;
        for &t in parts {
            denom *= BigInt::from(t);
        }
        let mut coeff = &kf_lf * BigRational::new(comp, denom);
        if p % 2 == 0 {
            coeff = -coeff;
        }
        let mut mono = ZetaMonomial::unit();
        for &t in parts {
            mono = mono.mul(&ZetaMonomial::atom(ZetaAtom::Zeta(t)));
        }
        out.add_term(mono, coeff);
    });
    Ok(out)
}

/// ζ(m, {1}_k) as an exact polynomial in single zeta values
/// (J_{k,m-1} / (k! (m-1)!)).
pub fn mzv_reduce(idx: &MZVIndex) -> Result<ZetaPolynomial> {
    let m = idx.leading;
    let k = idx.ones;
    let j = kolbig_j(k, m - 1)?;
    let denom = BigRational::from_integer(factorial_big(k as u64) * factorial_big(m as u64 - 1));
    Ok(j.scale(&denom.recip()))
}

/// The n+1 multiple zeta values of I_n = n! Σ_k ζ(n-k+2, {1}_k), with their
/// common coefficient n!.
pub fn i_n_mzv_sum(n: u32) -> Vec<(BigInt, MZVIndex)> {
    let nf = factorial_big(n as u64);
    (0..=n)
        .map(|k| {
            (nf.clone(), MZVIndex::new(n - k + 2, k).expect("leading >= 2"))
        })
        .collect()
}

/// I_n as an exact polynomial in single zeta values, assembled along the
/// J-integral route: I_n = Σ_k C(n,k) J_{k,n-k+1}/(n-k+1).
pub fn i_n_reduce(n: u32) -> Result<ZetaPolynomial> {
    let mut out = ZetaPolynomial::zero();
    for k in 0..=n {
        let j = kolbig_j(k, n - k + 1)?;
        let c = BigRational::new(
            binomial_big(n as u64, k as u64),
            BigInt::from(n as u64 - k as u64 + 1),
        );
        out = &out + &j.scale(&c);
    }
    Ok(out)
}

/// Outcome of the duality comparison ζ(k+2,{1}_l) vs ζ(l+2,{1}_k): the
/// canonical polynomials may or may not coincide formally (the paper does
/// not claim they must), so both facts are reported.
#[derive(Clone, Debug)]
pub struct DualityReport {
    pub formal_equal: bool,
    pub numeric_delta: R,
    pub numeric_pass: bool,
}

/// Compare the two reductions of the dual pair at the given precision.
/// `numeric_pass` asserts the evaluated difference is ≤ 10^-20.
pub fn duality_check(k: u32, l: u32, digits: u32) -> Result<DualityReport> {
    let digits = digits.max(30);
    let a = mzv_reduce(&MZVIndex::new(k + 2, l)?)?.canonicalize();
    let b = mzv_reduce(&MZVIndex::new(l + 2, k)?)?.canonicalize();
    let formal_equal = a == b;
    let delta = (&a.eval_numeric(digits)? - &b.eval_numeric(digits)?).abs();
    let numeric_pass = delta <= R::pow10(-20, digits);
    Ok(DualityReport { formal_equal, numeric_delta: delta, numeric_pass })
}
