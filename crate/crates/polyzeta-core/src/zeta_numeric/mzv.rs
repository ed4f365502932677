//! Direct evaluation of ζ(m, {1}_k) = Σ_{n} T_k(n)/n^m with T_k(n) the
//! elementary symmetric sums e_k(1, 1/2, …, 1/(n-1)).
//!
//! Truncating the outer sum at N leaves a tail of size ~ (ln N)^k / N^(m-1),
//! which no affordable N can push below 10^-10 when m = 2. The tail is
//! therefore *added back* analytically:
//!
//!   Σ_{n>N} T_k(n)/n^s
//!     = T_k(N+1)·Z_s(N+1) + Σ_{r>N} (T_{k-1}(r)/r)·Z_s(r+1),
//!
//! where Z_s(M) = Σ_{n≥M} n^{-s}. Expanding Z_s(r+1) about r by
//! Euler–Maclaurin (remainder bounded by the first omitted term, since
//! t^{-s} is completely monotone) turns the second sum into the same kind of
//! tail with k-1 ones and a larger exponent, so the computation recurses
//! down to plain zeta tails. Every dropped term is charged to an explicit
//! error budget with a factor-2 safety margin.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::zeta_tail_int;
use crate::error::{Error, Result};
use crate::kernel::bernoulli::{bernoulli_even, factorial_big};
use crate::kernel::real::HighPrecReal;

type R = HighPrecReal;

/// Direct sum Σ_{n≤cutoff} T_k(n)/n^m; also returns T_j(cutoff+1), j = 0..=k.
fn direct_part(m: u32, k: u32, cutoff: u64, dw: u32) -> (R, Vec<R>) {
    let k = k as usize;
    let mut t = vec![R::zero(dw); k + 1];
    t[0] = R::one(dw);
    let mut sum = R::zero(dw);
    for n in 1..=cutoff {
        if !t[k].is_zero() {
            sum = &sum + &(&t[k] * &R::from_u64(n, dw).powi(-(m as i64)));
        }
        let inv_n = R::from_u64(n, dw).recip();
        for j in (1..=k).rev() {
            let add = &t[j - 1] * &inv_n;
            t[j] = &t[j] + &add;
        }
    }
    (sum, t)
}

/// Upper bound for Σ_{r>N} T_k(r) r^{-s}, via T_k(r) ≤ (1+ln r)^k / k! and
/// an incomplete-gamma closed form for the comparison integral.
fn crude_tail_bound(k: u32, s: u32, n: u64, dw: u32) -> R {
    let ln_n = R::from_u64(n, dw).ln().expect("n >= 1");
    let one_plus_ln = &R::one(dw) + &ln_n;
    let s1 = R::from_u64(s as u64 - 1, dw);
    let y = &s1 * &one_plus_ln;
    // Σ_{i=0}^{k} y^i / i!
    let mut partial = R::zero(dw);
    let mut yp = R::one(dw);
    let mut fact = R::one(dw);
    for i in 0..=k {
        if i > 0 {
            yp = &yp * &y;
            fact = &fact * &R::from_u64(i as u64, dw);
        }
        partial = &partial + &(&yp / &fact);
    }
    let integral = &(&R::from_u64(n, dw).powi(1 - s as i64) * &partial)
        / &s1.powi(k as i64 + 1);
    // first tail term, divided by k!
    let kfact = R::from_bigint(&factorial_big(k as u64), dw);
    let first = &(&one_plus_ln.powi(k as i64) * &R::from_u64(n + 1, dw).powi(-(s as i64))) / &kfact;
    &first + &integral
}

struct TailCtx<'a> {
    n: u64,
    dw: u32,
    eps_budget: R,
    t_at_n1: &'a [R],
    memo: HashMap<(u32, u32), (R, R)>,
}

/// (value, certified error bound) for Σ_{r>N} T_k(r)/r^s.
fn tail(ctx: &mut TailCtx, k: u32, s: u32) -> Result<(R, R)> {
    if let Some(hit) = ctx.memo.get(&(k, s)) {
        return Ok(hit.clone());
    }
    let dw = ctx.dw;
    let result = if k == 0 {
        zeta_tail_int(s, ctx.n + 1, dw)?
    } else {
        let (z_n1, z_err) = zeta_tail_int(s, ctx.n + 1, dw)?;
        let t_k = &ctx.t_at_n1[k as usize];
        let mut value = t_k * &z_n1;
        let mut err = t_k * &z_err;

        // d_0 = 1/(s-1), d_1 = -1/2 from the EM expansion of Z_s(r+1)
        let (v0, e0) = tail(ctx, k - 1, s)?;
        let d0 = R::from_u64(s as u64 - 1, dw).recip();
        value = &value + &(&d0 * &v0);
        err = &err + &(&d0 * &e0);

        let (v1, e1) = tail(ctx, k - 1, s + 1)?;
        let half = &R::one(dw) / &R::from_u64(2, dw);
        value = &value - &(&half * &v1);
        err = &err + &(&half * &e1);

        // d_{2j} = B_{2j} (s)_{2j-1} / (2j)! at exponent s + 2j
        let mut poch = BigInt::from(s);
        for j in 1u32..=60 {
            if j > 1 {
                poch *= BigInt::from(s as u64 + 2 * j as u64 - 3);
                poch *= BigInt::from(s as u64 + 2 * j as u64 - 2);
            }
            let d2j = bernoulli_even(j)? * BigRational::from_integer(poch.clone())
                / BigRational::from_integer(factorial_big(2 * j as u64));
            let d2j = R::from_rational(&d2j, dw);
            let (vj, ej) = tail(ctx, k - 1, s + 2 * j)?;
            value = &value + &(&d2j * &vj);
            err = &err + &(&d2j.abs() * &ej);

            // can we stop? remainder ≤ b_j · crude(k-1, s+2j+2)
            let poch_next = &poch
                * BigInt::from(s as u64 + 2 * j as u64 - 1)
                * BigInt::from(s as u64 + 2 * j as u64);
            let b_next = BigRational::new(
                bernoulli_even(j + 1)?.numer().abs(),
                bernoulli_even(j + 1)?.denom().clone(),
            ) * BigRational::from_integer(poch_next)
                / BigRational::from_integer(factorial_big(2 * j as u64 + 2));
            let rem = &R::from_rational(&b_next, dw)
                * &crude_tail_bound(k - 1, s + 2 * j + 2, ctx.n, dw);
            if rem <= ctx.eps_budget {
                err = &err + &rem;
                let out = (value, err);
                ctx.memo.insert((k, s), out.clone());
                return Ok(out);
            }
        }
        return Err(Error::NonConvergence(format!(
            "MZV tail expansion did not close at (k,s)=({k},{s}), N={}",
            ctx.n
        )));
    };
    ctx.memo.insert((k, s), result.clone());
    Ok(result)
}

pub(crate) fn mzv_ones_impl(m: u32, k: u32, digits: u32) -> Result<R> {
    if m < 2 {
        return Err(Error::Domain(format!(
            "mzv leading entry {m} < 2 diverges"
        )));
    }
    let dw = digits + 10;
    let target = R::pow10(-(digits as i64) - 2, dw);
    let mut cutoff = 1024u64.max(k as u64 + 2);
    for _attempt in 0..3 {
        let (direct, t_at_n1) = direct_part(m, k, cutoff, dw);
        let mut ctx = TailCtx {
            n: cutoff,
            dw,
            eps_budget: &target / &R::from_u64(64, dw),
            t_at_n1: &t_at_n1,
            memo: HashMap::new(),
        };
        let (tail_value, tail_err) = tail(&mut ctx, k, m)?;
        // factor-2 safety margin on the certified bound
        if &tail_err * &R::from_u64(2, dw) <= target {
            return Ok((&direct + &tail_value).with_digits(digits));
        }
        cutoff *= 4;
    }
    Err(Error::NonConvergence(format!(
        "mzv_ones({m},{k}) error bound did not meet 10^-{} at cutoff {}",
        digits + 2,
        cutoff
    )))
}

/// Plain truncated partial sum (no tail correction); exposed for the
/// monotone-truncation property and divergence demonstrations.
pub fn mzv_ones_partial_sum(m: u32, k: u32, cutoff: u64, digits: u32) -> R {
    let dw = digits + 10;
    let (sum, _) = direct_part(m, k, cutoff, dw);
    sum.with_digits(digits)
}
