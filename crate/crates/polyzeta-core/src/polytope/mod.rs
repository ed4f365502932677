//! Direct numeric oracles for the polytope integrals, via their 1-D
//! reductions (obtained by closed-form inner integration) plus Monte Carlo
//! sanity checks for bounded integrands.
//!
//! Naive Monte Carlo over T has infinite variance for the singular
//! integrands (-ln xy)^n/(xy) near the axes, so the 1-D reductions are the
//! primary oracles here and [`mc::mc_integrate`] is restricted to bounded
//! integrands.

pub mod mc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::kernel::bernoulli::{binomial_big, factorial_big};
use crate::kernel::gamma::one_minus_recip_central_binom_pos;
use crate::kernel::quad::{quad_de, quad_de_halfline, QuadPoint, QuadratureConfig};
use crate::kernel::real::HighPrecReal;

type R = HighPrecReal;

/// -ln x for a node on (0, 1), formed from whichever endpoint distance is
/// accurate.
fn neg_ln_x(p: &QuadPoint) -> R {
    if p.dist_a <= p.dist_b {
        -p.dist_a.ln().expect("interior node is positive")
    } else {
        -(-&p.dist_b).ln_1p().expect("1 - dist_b > 0")
    }
}

/// -ln(1-x) for a node on (0, 1).
fn neg_ln_one_minus_x(p: &QuadPoint) -> R {
    if p.dist_b <= p.dist_a {
        -p.dist_b.ln().expect("interior node below 1")
    } else {
        -(-&p.dist_a).ln_1p().expect("1 - dist_a > 0")
    }
}

fn run_quad<F>(f: F, a: &R, b: &R, digits: u32, what: &str) -> Result<R>
where
    F: Fn(&QuadPoint) -> R,
{
    let cfg = QuadratureConfig::for_digits(digits);
    let res = quad_de(f, a, b, &cfg, digits);
    if !res.converged {
        return Err(Error::NonConvergence(format!(
            "{what}: quadrature error estimate {} after {} levels",
            res.error_estimate, res.levels_used
        )));
    }
    Ok(res.value)
}

/// J_{k,l} = ∫₀¹ (-ln(1-x))^k/(1-x) · (-ln x)^l dx, requiring l ≥ 1.
pub fn j_numeric(k: u32, l: u32, digits: u32) -> Result<R> {
    if l < 1 {
        return Err(Error::Domain("J_{k,0} diverges; l >= 1 required".into()));
    }
    let dw = digits + 5;
    run_quad(
        |p| {
            let num = neg_ln_one_minus_x(p).powi(k as i64);
            let lnx = neg_ln_x(p).powi(l as i64);
            &(&num / &p.dist_b) * &lnx
        },
        &R::zero(dw),
        &R::one(dw),
        digits,
        "J_numeric",
    )
}

/// I_n over the triangle, by the single-integral form
/// I_n = 1/(n+1) ∫₀¹ [(-ln x - ln(1-x))^{n+1} - (-ln x)^{n+1}]/x dx,
/// with the bracket expanded binomially so nothing cancels.
pub fn i_n_numeric(n: u32, digits: u32) -> Result<R> {
    let dw = digits + 5;
    let binoms: Vec<R> = (1..=n + 1)
        .map(|j| R::from_bigint(&binomial_big(n as u64 + 1, j as u64), dw))
        .collect();
    let value = run_quad(
        |p| {
            let a = neg_ln_x(p);
            let b = neg_ln_one_minus_x(p);
            let b_over_x = &b / &p.dist_a;
            // Σ_j C(n+1,j) a^{n+1-j} b^{j-1} · (b/x)
            let mut sum = R::zero(dw);
            let mut b_pow = R::one(dw);
            for j in 1..=n + 1 {
                let term = &(&binoms[(j - 1) as usize] * &a.powi((n + 1 - j) as i64)) * &b_pow;
                sum = &sum + &term;
                b_pow = &b_pow * &b;
            }
            &sum * &b_over_x
        },
        &R::zero(dw),
        &R::one(dw),
        digits,
        "I_n_numeric",
    )?;
    Ok(&value / &R::from_u64(n as u64 + 1, digits + 5))
}

/// I_{k,l} over the triangle, via (l+1) I_{k,l} = J_{k,l+1}.
pub fn i_kl_numeric(k: u32, l: u32, digits: u32) -> Result<R> {
    let j = j_numeric(k, l + 1, digits)?;
    Ok(&j / &R::from_u64(l as u64 + 1, digits))
}

/// The two single-integral forms of I_{-1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IMinus1Form {
    /// ∫₀^∞ (1 - 1/C(2t,t)) dt/t²
    HalfLine,
    /// ∫₀¹ ln(1 + ln(1-x)/ln x) dx/x
    LogRatio,
}

pub fn i_minus1_numeric(form: IMinus1Form, digits: u32) -> Result<R> {
    let dw = digits + 5;
    match form {
        IMinus1Form::HalfLine => {
            let cfg = QuadratureConfig::for_digits(digits);
            let res = quad_de_halfline(
                |p| {
                    let numer =
                        one_minus_recip_central_binom_pos(&p.x, dw).expect("t > 0 on (0,inf)");
                    &numer / &(&p.x * &p.x)
                },
                &cfg,
                digits,
            );
            if !res.converged {
                return Err(Error::NonConvergence("I_{-1} half-line quadrature".into()));
            }
            Ok(res.value)
        }
        IMinus1Form::LogRatio => run_quad(
            |p| {
                let ln_one_minus_x = -neg_ln_one_minus_x(p);
                let ln_x = -neg_ln_x(p);
                let ratio = &ln_one_minus_x / &ln_x;
                let log_term = ratio.ln_1p().expect("1 + ratio > 0 on (0,1)");
                &log_term / &p.dist_a
            },
            &R::zero(dw),
            &R::one(dw),
            digits,
            "I_{-1} log-ratio",
        ),
    }
}

/// Euler's constant as the y-integrated form of the triangle integral:
/// γ = ∫₀¹ (1/y)(1 - y/(-ln(1-y))) dy.
pub fn gamma_t_numeric(digits: u32) -> Result<R> {
    let dw = digits + 5;
    run_quad(
        |p| {
            let s = neg_ln_one_minus_x(p); // -ln(1-y)
            let diff = &s - &p.dist_a; // -ln(1-y) - y, loses ~|y| digits; guard absorbs it
            &(&diff / &s) / &p.dist_a
        },
        &R::zero(dw),
        &R::one(dw),
        digits,
        "gamma_T",
    )
}

/// L_m over W_m, m ≥ 2, by the proof's reduction to [1/2, 1]:
/// L_m = (m-1)(-(ln 2)^m) + m(m-1) ∫_{1/2}^1 (-ln y)^{m-2}(-ln(1-y))/y dy.
pub fn l_m_numeric(m: u32, digits: u32) -> Result<R> {
    if m < 2 {
        return Err(Error::Domain("L_m requires m >= 2".into()));
    }
    let dw = digits + 5;
    let integral = run_quad(
        |p| {
            // on (1/2, 1]: -ln y from the distance to 1, -ln(1-y) directly
            let d = -(-&p.dist_b).ln_1p().expect("y < 1 + dist");
            let e = -p.dist_b.ln().expect("y < 1 strictly");
            &(&d.powi(m as i64 - 2) * &e) / &p.x
        },
        &R::from_f64(0.5, dw),
        &R::one(dw),
        digits,
        "L_m",
    )?;
    let ln2_pow = R::ln2(dw).powi(m as i64);
    let m1 = R::from_u64(m as u64 - 1, dw);
    let mm1 = R::from_u64((m as u64) * (m as u64 - 1), dw);
    Ok((&(&mm1 * &integral) - &(&m1 * &ln2_pow)).with_digits(digits))
}

/// M_{m,n} over W_m for m ∈ {2,3}, n ≤ 4. The m = 3 case reduces to one
/// dimension: integrating the largest coordinate in closed form and then
/// the smallest against 1/x leaves
/// M_{3,n} = 6/(n+1) ∫_{1/2}^1 (1/y) Σ_{j,i} C(n+1,j) C(n+1-j,i)
///           (-ln y)^{n+1-i} [(-ln(1-y))^{i+1} - (-ln y)^{i+1}]/(i+1) dy.
pub fn m_mn_numeric(m: u32, n: u32, digits: u32) -> Result<R> {
    check_low_dim(m, n)?;
    if m == 2 {
        return i_n_numeric(n, digits);
    }
    let dw = digits + 5;
    // coefficient of D^{n+1-i} (E^{i+1} - D^{i+1})/(i+1): Σ_j C(n+1,j) C(n+1-j,i)
    let mut coeff = vec![BigInt::from(0u32); (n + 2) as usize];
    for j in 1..=n + 1 {
        for i in 0..=(n + 1 - j) {
            coeff[i as usize] +=
                binomial_big(n as u64 + 1, j as u64) * binomial_big((n + 1 - j) as u64, i as u64);
        }
    }
    let coeff: Vec<R> = coeff.iter().map(|c| R::from_bigint(c, dw)).collect();
    let integral = run_quad(
        |p| {
            let d = -(-&p.dist_b).ln_1p().expect("y < 1 + dist"); // -ln y
            let e = -p.dist_b.ln().expect("y < 1 strictly"); // -ln(1-y)
            let mut sum = R::zero(dw);
            for i in 0..=n + 1 {
                if coeff[i as usize].is_zero() {
                    continue;
                }
                let bracket = &(&e.powi(i as i64 + 1) - &d.powi(i as i64 + 1))
                    / &R::from_u64(i as u64 + 1, dw);
                sum = &sum + &(&(&coeff[i as usize] * &d.powi((n + 1 - i) as i64)) * &bracket);
            }
            &sum / &p.x
        },
        &R::from_f64(0.5, dw),
        &R::one(dw),
        digits,
        "M_{3,n}",
    )?;
    Ok((&(&R::from_u64(6, dw) * &integral) / &R::from_u64(n as u64 + 1, dw)).with_digits(digits))
}

/// K_{m,n} over V_m for m ∈ {2,3}, n ≤ 4. The m = 3 case collapses onto
/// J-integrals by the closed inner integrals of the V_m proof:
/// K_{3,n} = Σ_{k1+q=n} (n!/k1!) c_q J_{k1, q+2},
/// c_q = Σ_{j=0}^q 1/((j+1)!(q-j+1)!) — independent of the Kölbig formula.
pub fn k_mn_numeric(m: u32, n: u32, digits: u32) -> Result<R> {
    check_low_dim(m, n)?;
    if m == 2 {
        return i_n_numeric(n, digits);
    }
    let dw = digits + 5;
    let nf = factorial_big(n as u64);
    let mut total = R::zero(dw);
    for k1 in 0..=n {
        let q = n - k1;
        let mut c_q = BigRational::new(0.into(), 1.into());
        for j in 0..=q {
            c_q += BigRational::new(
                1.into(),
                factorial_big(j as u64 + 1) * factorial_big((q - j) as u64 + 1),
            );
        }
        let outer = BigRational::from_integer(nf.clone())
            / BigRational::from_integer(factorial_big(k1 as u64));
        let j_int = j_numeric(k1, q + 2, digits)?;
        total = &total + &(&R::from_rational(&(outer * c_q), dw) * &j_int);
    }
    Ok(total.with_digits(digits))
}

fn check_low_dim(m: u32, n: u32) -> Result<()> {
    if !(2..=3).contains(&m) {
        return Err(Error::Domain(format!(
            "numeric oracle supports m in {{2,3}}, got {m}; use the symbolic path"
        )));
    }
    if n > 4 {
        return Err(Error::Domain(format!(
            "numeric oracle supports n <= 4, got {n}; use the symbolic path"
        )));
    }
    Ok(())
}
