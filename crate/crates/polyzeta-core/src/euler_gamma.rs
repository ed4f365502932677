//! Euler's constant and the generating function
//! f(t) = (1 - 1/C(2t,t))/t² = Σ (-1)^n (I_n/n!) tⁿ: the two-variable
//! gamma-ratio identity, the binomial integral for γ, Ser's product, and
//! the identity tying I_{-1} to every I_n.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::kernel::bernoulli::{bernoulli_even, binomial_big, factorial_big};
use crate::kernel::gamma::{ln_gamma, one_minus_recip_central_binom_pos, recip_central_binom};
use crate::kernel::quad::{quad_de, QuadratureConfig};
use crate::kernel::real::HighPrecReal;
use crate::polytope::{i_minus1_numeric, IMinus1Form};
use crate::symbolic::i_n_reduce;
use crate::zeta_numeric::{li_with_complement, zeta_int, zeta_tail_real};

type R = HighPrecReal;

/// Euler's constant by the harmonic-limit oracle:
/// γ = H_N - ln N - 1/(2N) + Σ_j B_{2j}/(2j N^{2j}), remainder below the
/// first omitted term.
pub fn euler_gamma_harmonic(digits: u32) -> Result<R> {
    let dw = digits + 8;
    let n = ((0.38 * (digits as f64 + 8.0)).ceil() as u64).max(24);
    let mut h = R::zero(dw);
    for r in 1..=n {
        h = &h + &R::from_u64(r, dw).recip();
    }
    let nf = R::from_u64(n, dw);
    let mut gamma = &(&h - &nf.ln()?) - &(&R::from_u64(2 * n, dw)).recip();
    let eps = R::pow10(-(digits as i64) - 6, dw);
    let inv_sq = &nf.powi(-2);
    let mut pw = inv_sq.clone();
    for j in 1u32..200 {
        let coeff = bernoulli_even(j)? / BigRational::from_integer(BigInt::from(2 * j));
        gamma = &gamma + &(&R::from_rational(&coeff, dw) * &pw);
        let next = (bernoulli_even(j + 1)?
            / BigRational::from_integer(BigInt::from(2 * j + 2)))
        .abs();
        pw = &pw * inv_sq;
        if &R::from_rational(&next, dw) * &pw <= eps {
            return Ok(gamma.with_digits(digits));
        }
    }
    Err(Error::NonConvergence("harmonic-limit expansion for gamma".into()))
}

/// The generating function f(t) = (1 - 1/C(2t,t))/t².
///
/// Positive integers take an exact rational path (so f(1) = 1/2 exactly);
/// |t| < 1e-4 goes through the series with the I_0..I_3 terms (removable
/// singularity at 0); everything else assembles the Γ ratio, which is valid
/// for every non-pole real t.
pub fn genfun_f(t: &R, digits: u32) -> Result<R> {
    let dw = digits + 6;
    let t = t.with_digits(dw);
    if t.is_zero() {
        return zeta_int(2, digits);
    }
    // exact path for positive integers
    let rounded = t.round_i64();
    if rounded >= 1 && (&t - &R::from_i64(rounded, dw)).is_zero() {
        let n = rounded as u64;
        let c = binomial_big(2 * n, n);
        let f = (BigRational::one() - BigRational::new(BigInt::one(), c))
            / BigRational::from_integer(BigInt::from(n * n));
        return Ok(R::from_rational(&f, digits.max(crate::kernel::real::MIN_DIGITS)));
    }
    if rounded <= -1 && (&t - &R::from_i64(rounded, dw)).is_zero() {
        return Err(Error::Domain(format!("f has a simple pole at t = {rounded}")));
    }
    if t.abs() < R::pow10(-4, dw) {
        // Σ_{n≤3} (-1)^n (I_n/n!) t^n; the next term is ~2 t⁴
        let mut acc = R::zero(dw);
        let mut tp = R::one(dw);
        for n in 0..=3u32 {
            let i_n = i_n_reduce(n)?.eval_numeric(dw)?;
            let coeff = &i_n / &R::from_bigint(&factorial_big(n as u64), dw);
            let term = &coeff * &tp;
            acc = if n % 2 == 0 { &acc + &term } else { &acc - &term };
            tp = &tp * &t;
        }
        return Ok(acc.with_digits(digits));
    }
    if t.is_positive() {
        let numer = one_minus_recip_central_binom_pos(&t, dw)?;
        return Ok((&numer / &(&t * &t)).with_digits(digits));
    }
    let recip = recip_central_binom(&t, dw)?;
    Ok((&(&R::one(dw) - &recip) / &(&t * &t)).with_digits(digits))
}

/// Partial sum Σ_{n≤N} (-1)^n (I_n/n!) tⁿ against the closed form;
/// both values are returned for comparison.
pub fn genfun_series_check(t: &R, n_terms: u32, digits: u32) -> Result<(R, R)> {
    let dw = digits + 6;
    let t = t.with_digits(dw);
    let half = R::from_f64(0.5, dw);
    if t.is_zero() || t.abs() > half {
        return Err(Error::Domain(
            "series comparison needs 0 < |t| <= 1/2 for geometric decay".into(),
        ));
    }
    let mut acc = R::zero(dw);
    let mut tp = R::one(dw);
    for n in 0..=n_terms {
        let i_n = i_n_reduce(n)?.eval_numeric(dw)?;
        let coeff = &i_n / &R::from_bigint(&factorial_big(n as u64), dw);
        let term = &coeff * &tp;
        acc = if n % 2 == 0 { &acc + &term } else { &acc - &term };
        tp = &tp * &t;
    }
    let closed = genfun_f(&t, digits)?;
    Ok((acc.with_digits(digits), closed))
}

/// Both sides of the two-variable generating identity:
/// 1 - Γ(1-x)Γ(1-y)/Γ(1-x-y)  vs  1 - exp(Σ_{n≥2} (xⁿ+yⁿ-(x+y)ⁿ) ζ(n)/n).
pub fn genfun_bbg(x: &R, y: &R, digits: u32) -> Result<(R, R)> {
    let dw = digits + 8;
    let x = x.with_digits(dw);
    let y = y.with_digits(dw);
    let one = R::one(dw);
    let s = &x + &y;
    for v in [&x, &y, &s] {
        if v.abs() >= one {
            return Err(Error::Domain("genfun_bbg needs |x|, |y|, |x+y| < 1".into()));
        }
    }
    let lhs = if x.is_zero() && y.is_zero() {
        R::zero(dw)
    } else {
        let g = &(&ln_gamma(&(&one - &x), dw)? + &ln_gamma(&(&one - &y), dw)?)
            - &ln_gamma(&(&one - &s), dw)?;
        g.one_minus_exp()
    };

    // exp-sum side, truncated with the geometric tail bound
    let rho = x.abs().max(&y.abs()).max(&s.abs());
    let rho_f = rho.to_f64();
    let n_max = if rho_f > 0.0 {
        (((digits + 6) as f64) * std::f64::consts::LN_10 / (1.0 / rho_f).ln()).ceil() as u32 + 4
    } else {
        2
    };
    let mut acc = R::zero(dw);
    let mut xp = &x * &x;
    let mut yp = &y * &y;
    let mut sp = &s * &s;
    for n in 2..=n_max.max(2) {
        let num = &(&xp + &yp) - &sp;
        acc = &acc + &(&(&num * &zeta_int(n, dw)?) / &R::from_u64(n as u64, dw));
        xp = &xp * &x;
        yp = &yp * &y;
        sp = &sp * &s;
    }
    let rhs = if x.is_zero() && y.is_zero() { R::zero(dw) } else { acc.one_minus_exp() };
    Ok((lhs.with_digits(digits), rhs.with_digits(digits)))
}

/// Euler's constant from the binomial integral
/// γ = ∫₀^∞ Σ_{k≥2} dt/(k² C(t+k,k)): quadrature on (0, T], analytic tail.
/// Modest 1e-6 target by design; the outer integrand decays like 1/(2t²).
pub fn gamma_prop2(digits: u32, tail_t: f64) -> Result<R> {
    if tail_t < 10.0 {
        return Err(Error::Domain("tail split point must be >= 10".into()));
    }
    // accuracy is capped by the analytic tail treatment, not by digits
    let dq = digits.min(22);
    let dw = dq + 8;
    let inner_eps = R::pow10(-(dq as i64) - 4, dw);
    let inner_cap = 400u64;

    let integrand = |t: &R| -> R {
        // u_k = k!/(k² (t+1)…(t+k)), u_{k} = u_{k-1} (k-1)²/(k (t+k))
        let mut u = (&(&(t + &R::one(dw)) * &(t + &R::from_u64(2, dw)))
            * &R::from_u64(2, dw))
            .recip();
        let mut sum = u.clone();
        let mut k = 2u64;
        while u.abs() > inner_eps && k < inner_cap {
            k += 1;
            let ratio = &R::from_u64((k - 1) * (k - 1), dw)
                / &(&R::from_u64(k, dw) * &(t + &R::from_u64(k, dw)));
            u = &u * &ratio;
            sum = &sum + &u;
        }
        if k >= inner_cap {
            // small-t stragglers: Γ(t+1)[Z(2+t) - t(1+t)/2 · Z(3+t)] from K+1 on
            let lg = ln_gamma(&(t + &R::one(dw)), dw).expect("t+1 > 0");
            let g = lg.exp();
            let (z2, _) = zeta_tail_real(&(t + &R::from_u64(2, dw)), inner_cap + 1, dw)
                .expect("tail converges");
            let (z3, _) = zeta_tail_real(&(t + &R::from_u64(3, dw)), inner_cap + 1, dw)
                .expect("tail converges");
            let corr = &(&(t * &(t + &R::one(dw))) / &R::from_u64(2, dw)) * &z3;
            sum = &sum + &(&g * &(&z2 - &corr));
        }
        sum
    };

    let cfg = QuadratureConfig::for_digits(dq);
    let head = quad_de(
        |p| integrand(&p.x),
        &R::zero(dw),
        &R::from_f64(tail_t, dw),
        &cfg,
        dq,
    );
    if !head.converged {
        return Err(Error::NonConvergence("gamma_prop2 outer quadrature".into()));
    }

    // ∫_T^∞ k!/((t+1)…(t+k)) dt = -k! Σ_j A_j ln(T+j),
    // A_j = (-1)^(j-1)/((j-1)!(k-j)!), exactly; k ≥ 13 is below 1e-13 here
    let mut tail = R::zero(dw);
    let t0 = R::from_f64(tail_t, dw);
    for k in 2u64..=12 {
        let mut acc = R::zero(dw);
        for j in 1..=k {
            let a_j = BigRational::new(
                BigInt::one(),
                factorial_big(j - 1) * factorial_big(k - j),
            );
            let a_j = if j % 2 == 0 { -a_j } else { a_j };
            let ln_term = (&t0 + &R::from_u64(j, dw)).ln()?;
            acc = &acc + &(&R::from_rational(&a_j, dw) * &ln_term);
        }
        let scale = BigRational::new(factorial_big(k), BigInt::from(k * k));
        tail = &tail - &(&R::from_rational(&scale, dw) * &acc);
    }
    Ok((&head.value + &tail).with_digits(digits))
}

/// Partial Ser product: exp( Σ_{k=2}^K (1/k) Σ_{j=1}^k (-1)^j C(k-1,j-1) ln j ).
/// The inner alternating sums cancel like 2^k, so the configured precision
/// must satisfy D ≥ 0.4 K + 20; anything less is a hard error, not a
/// warning.
pub fn ser_product_partial(k_max: u32, digits: u32) -> Result<R> {
    if k_max < 2 {
        return Err(Error::Domain("Ser product starts at k = 2".into()));
    }
    let required = (0.4 * k_max as f64).ceil() as u32 + 20;
    if digits < required {
        return Err(Error::Precision(format!(
            "Ser product at K={k_max} needs >= {required} digits (2^K cancellation), got {digits}"
        )));
    }
    let dw = digits + 10;
    let ln_j: Vec<R> = (0..=k_max as usize)
        .map(|j| {
            if j < 2 {
                R::zero(dw)
            } else {
                R::from_u64(j as u64, dw).ln().expect("j >= 2")
            }
        })
        .collect();
    let mut total = R::zero(dw);
    let mut row: Vec<BigInt> = vec![BigInt::one()]; // C(k-1, ·) for k = 1
    for k in 2..=k_max {
        // extend Pascal row to C(k-1, ·)
        let mut next = vec![BigInt::one(); k as usize];
        for i in 1..(k as usize - 1) {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
        let mut inner = R::zero(dw);
        for j in 1..=k as usize {
            let c = R::from_bigint(&row[j - 1], dw);
            let term = &c * &ln_j[j];
            inner = if j % 2 == 0 { &inner + &term } else { &inner - &term };
        }
        total = &total + &(&inner / &R::from_u64(k as u64, dw));
    }
    Ok(total.exp().with_digits(digits))
}

/// The two sides of the identity
/// I_{-1} = Σ (-1)^n I_n/(n+1)! + ∫₀¹ li(x-x²)/x dx + 1,
/// with the conditionally convergent series evaluated as ∫₀¹ f(t) dt.
#[derive(Clone, Debug)]
pub struct Theorem4Report {
    pub lhs: R,
    pub rhs: R,
    pub delta: R,
    pub genfun_integral: R,
    pub li_integral: R,
}

pub fn theorem4_verify(digits: u32) -> Result<Theorem4Report> {
    let dw = digits + 4;
    let lhs = i_minus1_numeric(IMinus1Form::LogRatio, digits)?;

    let cfg = QuadratureConfig::for_digits(digits);
    let genfun_integral = {
        let res = quad_de(
            |p| {
                // the gamma route stays cancellation-free down to the
                // smallest node, avoiding a seam at the series branch
                let numer = one_minus_recip_central_binom_pos(&p.dist_a, dw)
                    .expect("t > 0 inside (0,1)");
                &numer / &(&p.dist_a * &p.dist_a)
            },
            &R::zero(dw),
            &R::one(dw),
            &cfg,
            digits,
        );
        if !res.converged {
            return Err(Error::NonConvergence("∫₀¹ f(t) dt".into()));
        }
        res.value
    };

    let li_digits = digits.min(25);
    let li_integral = {
        let res = quad_de(
            |p| {
                // x - x² = dist_a · dist_b on (0,1), exact in both tails
                let u = &p.dist_a * &p.dist_b;
                let one_minus_u = &R::one(dw) - &u;
                let v = li_with_complement(&u, &one_minus_u, li_digits)
                    .expect("0 < x - x² <= 1/4");
                &v / &p.dist_a
            },
            &R::zero(dw),
            &R::one(dw),
            &QuadratureConfig::for_digits(li_digits),
            li_digits,
        );
        if !res.converged {
            return Err(Error::NonConvergence("∫₀¹ li(x-x²)/x dx".into()));
        }
        res.value
    };

    let rhs = &(&genfun_integral + &li_integral) + &R::one(dw);
    let delta = (&lhs - &rhs).abs();
    Ok(Theorem4Report {
        lhs: lhs.with_digits(digits),
        rhs: rhs.with_digits(digits),
        delta: delta.with_digits(digits),
        genfun_integral: genfun_integral.with_digits(digits),
        li_integral: li_integral.with_digits(digits),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol(e: i64, d: u32) -> R {
        R::pow10(e, d)
    }

    #[test]
    fn harmonic_gamma_value() {
        let d = 40;
        let g = euler_gamma_harmonic(d).unwrap();
        let known = R::parse_dec("0.57721566490153286060651209008240243104215933593992", d).unwrap();
        assert!((&g - &known).abs() < tol(-40, d));
    }

    #[test]
    fn genfun_exact_at_positive_integers() {
        let d = 30;
        let f1 = genfun_f(&R::one(d), d).unwrap();
        assert_eq!(f1, R::from_f64(0.5, d)); // exact rational path
        // f(2) = (1 - 1/6)/4 = 5/24
        let f2 = genfun_f(&R::from_u64(2, d), d).unwrap();
        let expected = R::from_rational(&BigRational::new(5.into(), 24.into()), d);
        assert!((&f2 - &expected).abs() < tol(-32, d));
    }

    #[test]
    fn genfun_limit_at_zero_is_zeta_two() {
        let d = 30;
        let t = R::pow10(-5, d);
        let v = genfun_f(&t, d).unwrap();
        let z2 = zeta_int(2, d).unwrap();
        // |f(t) - ζ(2)| ≤ 3 ζ(3) |t| for tiny t
        let slack = &(&zeta_int(3, d).unwrap() * &R::from_u64(3, d)) * &t;
        assert!((&v - &z2).abs() < slack);
    }

    #[test]
    fn genfun_half_value() {
        // f(1/2) = (1 - 1/C(1, 1/2))/(1/4) = 4 - π
        let d = 30;
        let v = genfun_f(&R::from_f64(0.5, d), d).unwrap();
        let expected = &R::from_u64(4, d) - &R::pi(d);
        assert!((&v - &expected).abs() < tol(-27, d));
    }

    #[test]
    fn genfun_rejects_poles() {
        let d = 20;
        assert!(genfun_f(&R::from_i64(-1, d), d).is_err());
        assert!(genfun_f(&R::from_i64(-3, d), d).is_err());
    }

    #[test]
    fn series_check_within_tail_bound() {
        let d = 30;
        for (t, n) in [(0.3, 20u32), (-0.3, 20), (0.5, 30), (0.1, 12), (-0.1, 12)] {
            let (partial, closed) = genfun_series_check(&R::from_f64(t, d), n, d).unwrap();
            // tail bound: terms approach ±2 t^n, factor 2 slack then doubled
            let bound = &R::from_f64(t.abs(), d).powi(n as i64 + 1) * &R::from_u64(4, d);
            assert!(
                (&partial - &closed).abs() < bound,
                "t = {t}, N = {n}"
            );
        }
    }

    #[test]
    fn bbg_two_paths_agree() {
        let d = 30;
        let cases = [(0.0, 0.0), (0.2, 0.3), (-0.4, -0.4), (0.35, -0.15), (-0.25, 0.55)];
        for (x, y) in cases {
            let (lhs, rhs) = genfun_bbg(&R::from_f64(x, d), &R::from_f64(y, d), d).unwrap();
            assert!((&lhs - &rhs).abs() < tol(-20, d), "({x},{y})");
        }
        assert!(genfun_bbg(&R::from_f64(0.7, 30), &R::from_f64(0.5, 30), 30).is_err());
    }

    #[test]
    fn bbg_diagonal_matches_genfun() {
        // x = y = -t gives t² Σ (-1)^n (I_n/n!) t^n = t² f(t)
        let d = 30;
        let t = R::from_f64(0.4, d);
        let (lhs, rhs) = genfun_bbg(&(-&t), &(-&t), d).unwrap();
        let f = genfun_f(&t, d).unwrap();
        let expected = &(&t * &t) * &f;
        assert!((&lhs - &expected).abs() < tol(-10, d));
        assert!((&rhs - &expected).abs() < tol(-10, d));
    }

    #[test]
    fn ser_product_first_factors() {
        let d = 40;
        let v = ser_product_partial(2, d).unwrap();
        let sqrt2 = R::from_u64(2, d).sqrt().unwrap();
        assert!((&v - &sqrt2).abs() < tol(-38, d));
        // K = 3: √2 (4/3)^(1/3)
        let v3 = ser_product_partial(3, d).unwrap();
        let third = &R::one(d) / &R::from_u64(3, d);
        let f3 = (&(&R::from_u64(4, d) / &R::from_u64(3, d)).ln().unwrap() * &third).exp();
        let expected = &sqrt2 * &f3;
        assert!((&v3 - &expected).abs() < tol(-37, d));
    }

    #[test]
    fn ser_product_precision_guard() {
        assert!(matches!(
            ser_product_partial(100, 40),
            Err(Error::Precision(_))
        ));
    }

    #[test]
    fn prop2_gamma_modest_accuracy() {
        let d = 30;
        let v = gamma_prop2(d, 50.0).unwrap();
        let g = euler_gamma_harmonic(d).unwrap();
        assert!((&v - &g).abs() < R::from_f64(1e-6, d));
        assert!(gamma_prop2(d, 5.0).is_err());
    }

    #[test]
    fn prop2_inner_sum_endpoints() {
        // at t = 0 the inner sum is ζ(2) - 1; at t = 1 it telescopes to
        // Σ 1/(k²(k+1)) · k!·... = Σ 1/(k²(k+1)) · (k+1 choose ...)
        // checked against brute force
        let d = 25;
        let dw = d + 8;
        // brute force Σ_{k=2}^{2000} 1/(k² C(t+k,k)) at t = 1: C(k+1,k) = k+1
        let mut brute = 0.0f64;
        for k in 2..(4000u64) {
            brute += 1.0 / ((k * k) as f64 * (k + 1) as f64);
        }
        let mut u = (&(&(&R::one(dw) + &R::one(dw)) * &(&R::one(dw) + &R::from_u64(2, dw)))
            * &R::from_u64(2, dw))
            .recip();
        let mut sum = u.clone();
        for k in 3..4000u64 {
            let ratio = &R::from_u64((k - 1) * (k - 1), dw)
                / &(&R::from_u64(k, dw) * &(&R::one(dw) + &R::from_u64(k, dw)));
            u = &u * &ratio;
            sum = &sum + &u;
        }
        assert!((sum.to_f64() - brute).abs() < 1e-9);
    }
}
