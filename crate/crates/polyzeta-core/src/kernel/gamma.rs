//! Log-gamma and the generalized binomial coefficient.
//!
//! ln Γ is evaluated by an upward argument shift into the Stirling regime
//! followed by the Stirling series with its explicit remainder bound (the
//! remainder of the truncated series is no larger than the first omitted
//! term for positive real arguments). This keeps the error bound computable
//! at any precision, which a fixed Lanczos fit cannot do.

use num_rational::BigRational;

use super::bernoulli::bernoulli_even;
use super::real::HighPrecReal;
use crate::error::{Error, Result};

type R = HighPrecReal;

/// Stirling series at `x0`, valid once `x0` clears the precision threshold.
/// Returns the full ln Γ(x0) value.
fn stirling(x0: &R, digits: u32) -> Result<R> {
    let dw = digits + 8;
    let ln_x0 = x0.ln()?;
    let half = R::from_rational(&BigRational::new(1.into(), 2.into()), dw);
    let two_pi = &R::pi(dw) * &R::from_u64(2, dw);
    let mut sum = &(&(x0 - &half) * &ln_x0) - x0;
    sum = &sum + &(&two_pi.ln()? * &half);

    let scale = R::one(dw).max(&sum.abs());
    let eps = &R::pow10(-(digits as i64) - 5, dw) * &scale;

    let inv = x0.recip();
    let inv_sq = &inv * &inv;
    let mut pw = inv.clone(); // x0^{-(2j-1)}
    let mut prev_mag: Option<R> = None;
    for j in 1u32..400 {
        let b = bernoulli_even(j)?;
        let denom = BigRational::from_integer(((2 * j) as i64 * (2 * j - 1) as i64).into());
        let coeff = R::from_rational(&(b / denom), dw);
        let term = &coeff * &pw;
        let mag = term.abs();
        if let Some(p) = &prev_mag {
            if &mag > p {
                return Err(Error::NonConvergence(
                    "Stirling series stalled before reaching the error target".into(),
                ));
            }
        }
        sum = &sum + &term;
        pw = &pw * &inv_sq;
        // remainder bound: first omitted term
        let b_next = bernoulli_even(j + 1)?;
        let denom_next =
            BigRational::from_integer(((2 * j + 2) as i64 * (2 * j + 1) as i64).into());
        let bound = &R::from_rational(&(b_next / denom_next), dw).abs() * &pw;
        if bound <= eps {
            return Ok(sum);
        }
        prev_mag = Some(mag);
    }
    Err(Error::NonConvergence("Stirling series exhausted 400 terms".into()))
}

/// ln Γ(x) for x > 0.
pub fn ln_gamma(x: &R, digits: u32) -> Result<R> {
    if !x.is_positive() {
        return Err(Error::Domain("ln_gamma requires x > 0".into()));
    }
    let dw = digits + 8;
    let x = x.with_digits(dw);
    // argument shift into the Stirling regime
    let threshold = 0.38 * (dw as f64) + 6.0;
    let xf = x.to_f64();
    let shift = if xf.is_finite() && xf < threshold {
        (threshold - xf).ceil() as u64
    } else {
        0
    };
    let x0 = &x + &R::from_u64(shift, dw);
    let mut result = stirling(&x0, digits)?;
    for i in 0..shift {
        let xi = &x + &R::from_u64(i, dw);
        result = &result - &xi.ln()?;
    }
    Ok(result.with_digits(digits))
}

/// ln |Γ(x)| and the sign of Γ(x), for any non-pole real x.
/// Negative arguments go through the reflection formula.
pub fn ln_gamma_signed(x: &R, digits: u32) -> Result<(R, i8)> {
    if x.is_positive() {
        return Ok((ln_gamma(x, digits)?, 1));
    }
    let dw = digits + 8;
    let x = x.with_digits(dw);
    // x = n + f with n the nearest integer; sin(pi x) = (-1)^n sin(pi f)
    let n = x.round_i64();
    let frac = &x - &R::from_i64(n, dw);
    if frac.is_zero() {
        return Err(Error::Domain(format!("gamma pole at x = {n}")));
    }
    let sin_pi_frac = (&R::pi(dw) * &frac).sin();
    let mut sign_sin: i8 = if sin_pi_frac.is_negative() { -1 } else { 1 };
    if n % 2 != 0 {
        sign_sin = -sign_sin;
    }
    let one_minus_x = &R::one(dw) - &x;
    let lg = ln_gamma(&one_minus_x, dw)?;
    let ln_abs = &(&R::pi(dw).ln()? - &sin_pi_frac.abs().ln()?) - &lg;
    Ok((ln_abs.with_digits(digits), sign_sin))
}

/// Generalized binomial coefficient Γ(s+1) / (Γ(t+1) Γ(s-t+1)),
/// restricted to the positive-argument regime the integrals live in.
pub fn binom_real(s: &R, t: &R, digits: u32) -> Result<R> {
    let dw = digits + 8;
    let one = R::one(dw);
    let a = &s.with_digits(dw) + &one;
    let b = &t.with_digits(dw) + &one;
    let c = &(&s.with_digits(dw) - &t.with_digits(dw)) + &one;
    for (name, v) in [("s+1", &a), ("t+1", &b), ("s-t+1", &c)] {
        if !v.is_positive() {
            return Err(Error::Domain(format!(
                "binom_real requires {name} > 0 (pole regime not supported)"
            )));
        }
    }
    let lg = &(&ln_gamma(&a, dw)? - &ln_gamma(&b, dw)?) - &ln_gamma(&c, dw)?;
    Ok(lg.exp().with_digits(digits))
}

/// 1 - 1/C(2t,t) for t > 0, stable down to infinitesimal t. Each log-gamma
/// is ~γt while the difference 2lnΓ(t+1) - lnΓ(2t+1) is ~ζ(2)t², so the
/// working precision grows with -log10 t before the exponential is taken.
pub fn one_minus_recip_central_binom_pos(t: &R, digits: u32) -> Result<R> {
    if !t.is_positive() {
        return Err(Error::Domain("positive t required".into()));
    }
    let boost = match t.exponent_base2() {
        Some(e) if e < 0 => ((-e) as f64 * 0.302).ceil() as u32 + 4,
        _ => 0,
    };
    let dg = digits + 8 + boost;
    let one = R::one(dg);
    let l1 = ln_gamma(&(&t.with_digits(dg) + &one), dg)?;
    let l2 = ln_gamma(&(&(&t.with_digits(dg) * &R::from_u64(2, dg)) + &one), dg)?;
    let g = &(&l1 * &R::from_u64(2, dg)) - &l2;
    Ok(g.one_minus_exp().with_digits(digits))
}

/// 1 / C(2t, t) = Γ(t+1)² / Γ(2t+1), valid for every real t except the
/// simple poles of the ratio at t = -1, -2, …. Half-negative-integer t hit
/// a pole of Γ(2t+1) in the denominator, where the ratio vanishes.
pub fn recip_central_binom(t: &R, digits: u32) -> Result<R> {
    let dw = digits + 8;
    let one = R::one(dw);
    let a = &t.with_digits(dw) + &one; // t+1
    let b = &(&t.with_digits(dw) * &R::from_u64(2, dw)) + &one; // 2t+1
    let (la, _sa) = ln_gamma_signed(&a, dw)?; // squared, sign drops out
    let (lb, sb) = match ln_gamma_signed(&b, dw) {
        Ok(v) => v,
        Err(Error::Domain(_)) => return Ok(R::zero(digits)),
        Err(e) => return Err(e),
    };
    let ln_mag = &(&la * &R::from_u64(2, dw)) - &lb;
    let v = ln_mag.exp();
    let v = if sb < 0 { -v } else { v };
    Ok(v.with_digits(digits))
}
