//! Series-based numeric oracles: ζ(s), Li_s(z), multiple polylogarithms
//! Li_{b,{1}_c}(z), multiple zeta values ζ(m,{1}_k), and the logarithmic
//! integral. These are the independent ground truth against which the
//! symbolic reductions and the quadrature oracles are tested, so nothing in
//! here may call into `symbolic` or `polytope`.

mod mzv;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::kernel::bernoulli::{bernoulli_even, factorial_big};
use crate::kernel::quad::{quad_de, QuadratureConfig};
use crate::kernel::real::HighPrecReal;

pub use mzv::mzv_ones_partial_sum;

type R = HighPrecReal;

/// Index of a multiple zeta value of the shape ζ(m, {1}_k).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MZVIndex {
    /// Leading entry m ≥ 2.
    pub leading: u32,
    /// Number of trailing ones.
    pub ones: u32,
}

impl MZVIndex {
    pub fn new(leading: u32, ones: u32) -> Result<Self> {
        if leading < 2 {
            return Err(Error::Domain(format!(
                "MZV leading entry must be >= 2 for convergence, got {leading}"
            )));
        }
        Ok(Self { leading, ones })
    }

    pub fn weight(&self) -> u32 {
        self.leading + self.ones
    }
}

/// Index of a multiple polylogarithm Li_{b, {1}_c}(z) with 0 < z ≤ 1/2.
#[derive(Clone, Debug)]
pub struct MPLIndex {
    pub leading: u32,
    pub ones: u32,
    pub argument: R,
}

impl MPLIndex {
    pub fn new(leading: u32, ones: u32, argument: R) -> Result<Self> {
        if leading < 1 {
            return Err(Error::Domain("MPL leading entry must be >= 1".into()));
        }
        let half = R::from_f64(0.5, argument.digits());
        if !argument.is_positive() || argument > half {
            return Err(Error::Domain(
                "MPL argument must lie in (0, 1/2]; use mzv_ones for z = 1".into(),
            ));
        }
        Ok(Self { leading, ones, argument })
    }
}

/// Euler–Maclaurin tail Σ_{n≥from} n^{-s} for integer s ≥ 2, with a
/// certified bound (the EM remainder for the completely monotone t^{-s} is
/// no larger than the first omitted term). Returns (value, error bound).
pub(crate) fn zeta_tail_int(s: u32, from: u64, digits: u32) -> Result<(R, R)> {
    let dw = digits + 8;
    let m = R::from_u64(from, dw);
    let s_i = s as i64;
    let m_pow_1ms = m.powi(1 - s_i); // M^{1-s}
    let m_inv = m.recip();
    let m_pow_ms = &m_pow_1ms * &m_inv; // M^{-s}
    let mut sum = &(&m_pow_1ms / &R::from_u64(s as u64 - 1, dw))
        + &(&m_pow_ms / &R::from_u64(2, dw));
    let eps = R::pow10(-(digits as i64) - 6, dw);

    let m_inv_sq = &m_inv * &m_inv;
    let mut pw = &m_pow_ms * &m_inv; // M^{-s-2j+1} for j = 1
    // rising factorial (s)_q as exact integers
    let mut poch = BigInt::from(s); // (s)_1
    let mut prev_bound: Option<R> = None;
    for j in 1u32..400 {
        // (s)_{2j-1}: extend from (s)_{2j-3} by two factors
        if j > 1 {
            poch *= BigInt::from(s as u64 + 2 * j as u64 - 3);
            poch *= BigInt::from(s as u64 + 2 * j as u64 - 2);
        }
        let coeff = BigRational::new(
            bernoulli_even(j)?.numer() * &poch,
            bernoulli_even(j)?.denom() * factorial_big(2 * j as u64),
        );
        sum = &sum + &(&R::from_rational(&coeff, dw) * &pw);
        // first omitted term bounds the remainder
        let poch_next = &poch
            * BigInt::from(s as u64 + 2 * j as u64 - 1)
            * BigInt::from(s as u64 + 2 * j as u64);
        let bound_coeff = BigRational::new(
            bernoulli_even(j + 1)?.numer().abs(),
            bernoulli_even(j + 1)?.denom().abs(),
        ) * BigRational::from_integer(poch_next)
            / BigRational::from_integer(factorial_big(2 * j as u64 + 2));
        pw = &pw * &m_inv_sq;
        let bound = &R::from_rational(&bound_coeff, dw) * &pw;
        if bound <= eps {
            return Ok((sum, bound));
        }
        if let Some(pb) = &prev_bound {
            if &bound > pb {
                return Err(Error::NonConvergence(format!(
                    "Euler-Maclaurin zeta tail stalled at s={s}, from={from}"
                )));
            }
        }
        prev_bound = Some(bound);
    }
    Err(Error::NonConvergence("Euler-Maclaurin zeta tail exhausted terms".into()))
}

/// Euler–Maclaurin tail Σ_{n≥from} n^{-s} for real s > 1.
pub(crate) fn zeta_tail_real(s: &R, from: u64, digits: u32) -> Result<(R, R)> {
    let dw = digits + 8;
    let s = s.with_digits(dw);
    let one = R::one(dw);
    let m = R::from_u64(from, dw);
    let ln_m = m.ln()?;
    let m_pow_ms = (-(&s * &ln_m)).exp(); // M^{-s}
    let m_inv = m.recip();
    let m_pow_1ms = &m_pow_ms * &m;
    let mut sum = &(&m_pow_1ms / &(&s - &one)) + &(&m_pow_ms / &R::from_u64(2, dw));
    let eps = R::pow10(-(digits as i64) - 6, dw);

    let m_inv_sq = &m_inv * &m_inv;
    let mut pw = &m_pow_ms * &m_inv;
    let mut poch = s.clone(); // (s)_1
    let mut prev_bound: Option<R> = None;
    for j in 1u32..400 {
        if j > 1 {
            poch = &poch * &(&s + &R::from_u64(2 * j as u64 - 3, dw));
            poch = &poch * &(&s + &R::from_u64(2 * j as u64 - 2, dw));
        }
        let b2j = R::from_rational(&bernoulli_even(j)?, dw);
        let fact = R::from_bigint(&factorial_big(2 * j as u64), dw);
        let term = &(&(&b2j * &poch) / &fact) * &pw;
        sum = &sum + &term;
        let poch_next = &(&poch * &(&s + &R::from_u64(2 * j as u64 - 1, dw)))
            * &(&s + &R::from_u64(2 * j as u64, dw));
        let b_next = R::from_rational(&bernoulli_even(j + 1)?, dw).abs();
        let fact_next = R::from_bigint(&factorial_big(2 * j as u64 + 2), dw);
        pw = &pw * &m_inv_sq;
        let bound = &(&(&b_next * &poch_next.abs()) / &fact_next) * &pw;
        if bound <= eps {
            return Ok((sum, bound));
        }
        if let Some(pb) = &prev_bound {
            if &bound > pb {
                return Err(Error::NonConvergence(format!(
                    "Euler-Maclaurin zeta tail (real s) stalled at from={from}"
                )));
            }
        }
        prev_bound = Some(bound);
    }
    Err(Error::NonConvergence("Euler-Maclaurin zeta tail (real s) exhausted terms".into()))
}

/// ζ(s) for integer s ≥ 2: direct sum plus Euler–Maclaurin tail.
pub fn zeta_int(s: u32, digits: u32) -> Result<R> {
    if s < 2 {
        return Err(Error::Domain(format!("zeta_int requires s >= 2, got {s}")));
    }
    let dw = digits + 8;
    if s >= 30 {
        // geometric regime: the plain series already converges fast
        let eps = R::pow10(-(digits as i64) - 6, dw);
        let mut sum = R::one(dw);
        let mut n = 2u64;
        loop {
            let term = R::from_u64(n, dw).powi(-(s as i64));
            if term < eps {
                break;
            }
            sum = &sum + &term;
            n += 1;
            if n > 100_000 {
                return Err(Error::NonConvergence("zeta_int direct sum too slow".into()));
            }
        }
        return Ok(sum.with_digits(digits));
    }
    let m = ((0.42 * (digits as f64 + 10.0)).ceil() as u64).max(20);
    let mut sum = R::zero(dw);
    for n in 1..m {
        sum = &sum + &R::from_u64(n, dw).powi(-(s as i64));
    }
    let (tail, _bound) = zeta_tail_int(s, m, digits + 4)?;
    Ok((&sum + &tail).with_digits(digits))
}

/// Li_s(1/2) for s ≥ 1 by the geometric-tail partial sum.
pub fn polylog_half(s: u32, digits: u32) -> Result<R> {
    if s < 1 {
        return Err(Error::Domain(format!("polylog_half requires s >= 1, got {s}")));
    }
    let dw = digits + 8;
    let n_terms = (((digits + 8) as f64) * std::f64::consts::LN_10 / std::f64::consts::LN_2)
        .ceil() as u64
        + 4;
    let half = R::from_rational(&BigRational::new(1.into(), 2.into()), dw);
    let mut zpow = R::one(dw);
    let mut sum = R::zero(dw);
    for r in 1..=n_terms {
        zpow = &zpow * &half;
        sum = &sum + &(&zpow * &R::from_u64(r, dw).powi(-(s as i64)));
    }
    Ok(sum.with_digits(digits))
}

/// Multiple polylogarithm Li_{b, {1}_c}(z) for 0 < z ≤ 1/2, via the nested
/// elementary-sum recurrence T_j(n+1) = T_j(n) + T_{j-1}(n)/n.
pub fn mpl_ones(idx: &MPLIndex, digits: u32) -> Result<R> {
    let b = idx.leading;
    let c = idx.ones as usize;
    let z = idx.argument.with_digits(digits + 10);
    let dw = digits + 10;
    let eps = R::pow10(-(digits as i64) - 4, dw);

    let zf = z.to_f64();
    let mut n_cut = (((digits + 10) as f64) * std::f64::consts::LN_10 / (1.0 / zf).ln()).ceil()
        as u64
        + 6 * c as u64
        + 24;
    // grow the cutoff until the geometric tail bound clears the target
    loop {
        let ln_n1 = ((n_cut + 1) as f64).ln();
        let mut bound_f = zf.powi((n_cut + 1) as i32).ln(); // work in logs
        bound_f += (1.0 + ln_n1).ln() * c as f64;
        bound_f -= (factorial_big(c as u64)
            .to_string()
            .parse::<f64>()
            .unwrap_or(1.0))
        .ln();
        bound_f -= (b as f64) * ln_n1;
        bound_f -= (1.0 - zf * (1.0 + c as f64 / n_cut as f64)).ln();
        if bound_f < -((digits + 4) as f64) * std::f64::consts::LN_10 {
            break;
        }
        n_cut *= 2;
        if n_cut > 1 << 26 {
            return Err(Error::NonConvergence("mpl_ones cutoff grew unreasonably".into()));
        }
    }

    let mut t = vec![R::zero(dw); c + 1];
    t[0] = R::one(dw);
    let mut zpow = R::one(dw);
    let mut sum = R::zero(dw);
    for n in 1..=n_cut {
        zpow = &zpow * &z;
        if !t[c].is_zero() {
            sum = &sum + &(&(&zpow * &t[c]) * &R::from_u64(n, dw).powi(-(b as i64)));
        }
        let inv_n = R::from_u64(n, dw).recip();
        for j in (1..=c).rev() {
            let add = &t[j - 1] * &inv_n;
            t[j] = &t[j] + &add;
        }
    }
    let _ = eps;
    Ok(sum.with_digits(digits))
}

/// ζ(m, {1}_k): direct nested sum to a cutoff plus the recursive
/// Euler–Maclaurin tail correction. Absolute error tracked against
/// 10^-(digits+2); see `mzv` for the tail machinery.
pub fn mzv_ones(idx: &MZVIndex, digits: u32) -> Result<R> {
    mzv::mzv_ones_impl(idx.leading, idx.ones, digits)
}

/// Logarithmic integral li(x) = ∫₀ˣ dt/ln t for 0 < x < 1, evaluated by
/// quadrature so it inherits the audited error contract.
pub fn li(x: &R, digits: u32) -> Result<R> {
    let one = R::one(x.digits().max(digits));
    if !x.is_positive() || *x >= one {
        return Err(Error::Domain("li requires 0 < x < 1".into()));
    }
    let one_minus_x = &one - x;
    li_with_complement(x, &one_minus_x, digits)
}

/// As [`li`], but with 1 - x supplied by the caller. Quadrature nodes near
/// x = 1 need the complement to more precision than x itself can carry.
pub fn li_with_complement(x: &R, one_minus_x: &R, digits: u32) -> Result<R> {
    let dw = digits + 6;
    let x = x.with_digits(dw);
    let one_minus_x = one_minus_x.with_digits(dw);
    let cfg = QuadratureConfig::for_digits(digits);
    let half = R::from_f64(0.5, dw);
    let res = quad_de(
        |p| {
            // ln t loses digits only when t is close to 1; there
            // 1 - t = (1-x) + dist_b is the accurate route
            let one_minus_t = &one_minus_x + &p.dist_b;
            let ln_t = if one_minus_t < half {
                (-&one_minus_t).ln_1p().expect("1-t < 1 inside (0,1)")
            } else {
                p.x.ln().expect("t > 0 inside (0, x)")
            };
            ln_t.recip()
        },
        &R::zero(dw),
        &x,
        &cfg,
        digits,
    );
    Ok(res.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol(e: i64, d: u32) -> R {
        R::pow10(e, d)
    }

    /// Test-only Euler–Maclaurin evaluation of ζ(s), written independently
    /// of `zeta_int`/`zeta_tail_int` (fixed cutoff and depth, f64-free).
    fn zeta_oracle(s: u32, digits: u32) -> R {
        let dw = digits + 10;
        let n = 60u64;
        let mut sum = R::zero(dw);
        for r in 1..n {
            sum = &sum + &R::from_u64(r, dw).powi(-(s as i64));
        }
        let nf = R::from_u64(n, dw);
        sum = &sum + &(&nf.powi(1 - s as i64) / &R::from_u64(s as u64 - 1, dw));
        sum = &sum + &(&nf.powi(-(s as i64)) / &R::from_u64(2, dw));
        let mut poch = BigRational::from_integer(BigInt::from(s));
        for j in 1u32..=40 {
            if j > 1 {
                poch *= BigRational::from_integer(BigInt::from(s as u64 + 2 * j as u64 - 3));
                poch *= BigRational::from_integer(BigInt::from(s as u64 + 2 * j as u64 - 2));
            }
            let coeff = bernoulli_even(j).unwrap() * &poch
                / BigRational::from_integer(factorial_big(2 * j as u64));
            sum = &sum
                + &(&R::from_rational(&coeff, dw) * &nf.powi(-(s as i64) - 2 * j as i64 + 1));
        }
        sum.with_digits(digits)
    }

    #[test]
    fn zeta_two_is_pi_squared_over_six() {
        let d = 40;
        let z2 = zeta_int(2, d).unwrap();
        let pi = R::pi(d);
        let expected = &(&pi * &pi) / &R::from_u64(6, d);
        assert!((&z2 - &expected).abs() < tol(-40, d));
    }

    #[test]
    fn zeta_four_is_pi_fourth_over_ninety() {
        let d = 40;
        let z4 = zeta_int(4, d).unwrap();
        let expected = &R::pi(d).powi(4) / &R::from_u64(90, d);
        assert!((&z4 - &expected).abs() < tol(-40, d));
    }

    #[test]
    fn zeta_three_against_independent_oracle() {
        let d = 30;
        let z3 = zeta_int(3, d).unwrap();
        let oracle = zeta_oracle(3, d);
        assert!((&z3 - &oracle).abs() < tol(-28, d));
        // frozen digits computed from the oracle at D=30
        let frozen = R::parse_dec("1.202056903159594285399738161511", d).unwrap();
        assert!((&z3 - &frozen).abs() < tol(-28, d));
    }

    #[test]
    fn zeta_large_s() {
        let d = 30;
        let z = zeta_int(50, d).unwrap();
        // 1 + 2^-50 + 3^-50 + 4^-50 dominates; next term 5^-50 ≈ 1e-35
        let expected = &(&(&R::one(d) + &R::from_u64(2, d).powi(-50))
            + &R::from_u64(3, d).powi(-50))
            + &R::from_u64(4, d).powi(-50);
        assert!((&z - &expected).abs() < tol(-33, d));
        assert!(zeta_int(1, d).is_err());
    }

    #[test]
    fn polylog_one_is_ln_two() {
        let d = 40;
        let v = polylog_half(1, d).unwrap();
        assert!((&v - &R::ln2(d)).abs() < tol(-40, d));
        assert!(polylog_half(0, d).is_err());
    }

    #[test]
    fn mpl_reduces_to_polylog_when_no_ones() {
        let d = 35;
        for b in 1..=6u32 {
            let half = R::from_f64(0.5, d);
            let idx = MPLIndex::new(b, 0, half).unwrap();
            let v = mpl_ones(&idx, d).unwrap();
            let li_b = polylog_half(b, d).unwrap();
            assert!((&v - &li_b).abs() < tol(-33, d), "b = {b}");
        }
    }

    #[test]
    fn mpl_against_brute_force_double_sum() {
        // Li_{3,1}(1/2) by the raw definition, summed to n = 200 at D=20
        let d = 20;
        let dw = d + 5;
        let half = R::from_f64(0.5, dw);
        let mut brute = R::zero(dw);
        for n1 in 2u64..=200 {
            let mut inner = R::zero(dw);
            for n2 in 1..n1 {
                inner = &inner + &R::from_u64(n2, dw).recip();
            }
            let zp = half.powi(n1 as i64);
            brute = &brute + &(&(&zp * &inner) * &R::from_u64(n1, dw).powi(-3));
        }
        let idx = MPLIndex::new(3, 1, R::from_f64(0.5, d)).unwrap();
        let v = mpl_ones(&idx, d).unwrap();
        assert!((&v - &brute).abs() < tol(-18, d));
    }

    #[test]
    fn mpl_domain_checks() {
        let d = 20;
        assert!(MPLIndex::new(2, 0, R::from_f64(0.7, d)).is_err());
        assert!(MPLIndex::new(2, 0, R::zero(d)).is_err());
        assert!(MPLIndex::new(0, 1, R::from_f64(0.5, d)).is_err());
    }

    #[test]
    fn mzv_single_zeta_case() {
        let d = 30;
        let idx = MZVIndex::new(5, 0).unwrap();
        let v = mzv_ones(&idx, d).unwrap();
        let z5 = zeta_int(5, d).unwrap();
        assert!((&v - &z5).abs() < tol(-28, d));
    }

    #[test]
    fn mzv_two_one_is_zeta_three() {
        let d = 30;
        let idx = MZVIndex::new(2, 1).unwrap();
        let v = mzv_ones(&idx, d).unwrap();
        let z3 = zeta_int(3, d).unwrap();
        assert!((&v - &z3).abs() < tol(-25, d));
    }

    #[test]
    fn mzv_three_one_is_quarter_zeta_four() {
        let d = 30;
        let idx = MZVIndex::new(3, 1).unwrap();
        let v = mzv_ones(&idx, d).unwrap();
        let expected = &zeta_int(4, d).unwrap() / &R::from_u64(4, d);
        assert!((&v - &expected).abs() < tol(-25, d));
    }

    #[test]
    fn mzv_duality_numeric() {
        let d = 30;
        for k in 0u32..=6 {
            for l in 0..=(6 - k) {
                let a = mzv_ones(&MZVIndex::new(k + 2, l).unwrap(), d).unwrap();
                let b = mzv_ones(&MZVIndex::new(l + 2, k).unwrap(), d).unwrap();
                assert!((&a - &b).abs() < tol(-9, d), "duality ({k},{l})");
            }
        }
    }

    #[test]
    fn mzv_rejects_divergent_index() {
        assert!(MZVIndex::new(1, 3).is_err());
    }

    #[test]
    fn mzv_partial_sums_increase_monotonically() {
        let d = 25;
        let cuts = [50u64, 100, 200, 400];
        let mut prev = R::zero(d);
        for n in cuts {
            let v = mzv_ones_partial_sum(3, 2, n, d);
            assert!(v > prev, "partial sums must increase with the cutoff");
            prev = v;
        }
    }

    #[test]
    fn li_behaves_at_small_argument() {
        let d = 30;
        let x = R::pow10(-8, d);
        let v = li(&x, d).unwrap();
        assert!(v.is_negative());
        assert!(v.abs() < &R::from_u64(2, d) * &x);
    }

    #[test]
    fn li_quarter_against_midpoint_brute_force() {
        // midpoint rule with 200k panels on (0, 1/4), f64: crude but
        // independent of the quadrature kernel
        let d = 30;
        let n = 200_000u64;
        let h = 0.25 / n as f64;
        let mut acc = 0.0f64;
        for i in 0..n {
            let t = (i as f64 + 0.5) * h;
            acc += 1.0 / t.ln();
        }
        acc *= h;
        let v = li(&R::from_f64(0.25, d), d).unwrap();
        assert!((v.to_f64() - acc).abs() < 1e-7);
        // frozen from the midpoint/quadrature oracles at D=30
        let frozen = R::parse_dec("-0.118662056447123105305095706472", d).unwrap();
        assert!((&v - &frozen).abs() < tol(-24, d));
    }

    #[test]
    fn li_rejects_unit_and_larger() {
        let d = 20;
        assert!(li(&R::one(d), d).is_err());
        assert!(li(&R::from_f64(1.5, d), d).is_err());
    }
}
