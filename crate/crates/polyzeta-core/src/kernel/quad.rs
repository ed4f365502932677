//! Double-exponential quadrature.
//!
//! `quad_de` integrates over a finite interval with the tanh-sinh
//! transform x = m + L·tanh((π/2)·sinh t); `quad_de_halfline` covers (0, ∞)
//! with the exp-sinh variant x = exp((π/2)·sinh t). Both cluster nodes
//! double-exponentially at the endpoints, which is what the integrands here
//! (logarithmic endpoint singularities) need.
//!
//! Integrands receive the node together with its exact distances to the two
//! endpoints, because expressions like ln(1-x) must be formed from the
//! distance, not from x itself, once x is within 10^-40 of an endpoint.

use super::real::HighPrecReal;

type R = HighPrecReal;

/// Quadrature scheme selector. Only the double-exponential family is
/// implemented; the variant exists so configurations are self-describing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scheme {
    DoubleExponential,
}

#[derive(Clone, Debug)]
pub struct QuadratureConfig {
    pub target_abs_error: f64,
    pub max_levels: u32,
    pub scheme: Scheme,
}

impl QuadratureConfig {
    /// Target tuned so the quadrature does not limit a D-digit computation.
    pub fn for_digits(digits: u32) -> Self {
        Self {
            target_abs_error: 10f64.powi(-(digits as i32) - 3),
            max_levels: 12,
            scheme: Scheme::DoubleExponential,
        }
    }

    pub fn with_target(mut self, target: f64) -> Self {
        self.target_abs_error = target;
        self
    }
}

/// A tanh-sinh node: the abscissa and its distances to both endpoints.
pub struct QuadPoint {
    pub x: R,
    pub dist_a: R,
    pub dist_b: R,
}

/// An exp-sinh node on (0, ∞): the abscissa and its logarithm (free of
/// charge from the transform, and exact where x itself under- or overflows
/// no precision).
pub struct HalfLinePoint {
    pub x: R,
    pub ln_x: R,
}

#[derive(Clone, Debug)]
pub struct QuadResult {
    pub value: R,
    pub error_estimate: R,
    pub converged: bool,
    pub levels_used: u32,
    pub evaluations: u64,
}

/// t beyond which tanh-sinh weights push nodes closer to the endpoints than
/// 10^-(digits+13); nothing out there can move a D-digit result.
fn t_max_finite(digits: u32) -> f64 {
    let ln_delta = ((digits + 13) as f64) * std::f64::consts::LN_10 + std::f64::consts::LN_2;
    ((2.0 / std::f64::consts::PI) * ln_delta).ln() + 0.6
}

fn t_max_halfline(digits: u32) -> f64 {
    let ln_delta = ((digits + 15) as f64) * std::f64::consts::LN_10;
    ((4.0 / std::f64::consts::PI) * ln_delta).ln() + 0.5
}

struct TanhSinhNode {
    // everything the summation needs at one |t|; mirrored for ±t
    weight: R,
    dist_lo: R, // distance to the t = -∞ endpoint for +|t|
    dist_hi: R,
}

/// Evaluate node geometry at t (t ≥ 0); the t < 0 node mirrors it.
fn tanh_sinh_node(t: &R, half_len: &R, dw: u32) -> TanhSinhNode {
    let pi_half = &R::pi(dw) / &R::from_u64(2, dw);
    let u = &pi_half * &t.sinh();
    let eu = u.exp();
    let emu = eu.recip();
    let two = R::from_u64(2, dw);
    let cosh_u = &(&eu + &emu) / &two;
    let w = &(&(&pi_half * &t.cosh()) * half_len) / &(&cosh_u * &cosh_u);
    // 1 - tanh u = e^-u / cosh u ; 1 + tanh u = e^u / cosh u
    let dist_hi = &(half_len * &emu) / &cosh_u;
    let dist_lo = &(half_len * &eu) / &cosh_u;
    TanhSinhNode { weight: w, dist_lo, dist_hi }
}

/// Tanh-sinh quadrature of `f` over (a, b).
pub fn quad_de<F>(f: F, a: &R, b: &R, cfg: &QuadratureConfig, digits: u32) -> QuadResult
where
    F: Fn(&QuadPoint) -> R,
{
    let dw = digits + 10;
    let a = a.with_digits(dw);
    let b = b.with_digits(dw);
    let half_len = &(&b - &a) / &R::from_u64(2, dw);
    let t_max = t_max_finite(digits);
    let target = R::from_f64(cfg.target_abs_error, dw);

    let eval_at = |t: &R, sum: &mut R, evals: &mut u64| {
        let node = tanh_sinh_node(t, &half_len, dw);
        if !node.weight.is_zero() {
            // +t side: nearest endpoint is b
            let p_hi = QuadPoint {
                x: &b - &node.dist_hi,
                dist_a: node.dist_lo.clone(),
                dist_b: node.dist_hi.clone(),
            };
            *sum = &*sum + &(&f(&p_hi) * &node.weight);
            *evals += 1;
            if !t.is_zero() {
                let p_lo = QuadPoint {
                    x: &a + &node.dist_hi,
                    dist_a: node.dist_hi.clone(),
                    dist_b: node.dist_lo.clone(),
                };
                *sum = &*sum + &(&f(&p_lo) * &node.weight);
                *evals += 1;
            }
        }
    };

    let mut h = 1.0f64;
    let mut evals: u64 = 0;
    let mut total = R::zero(dw);
    let mut prev_total: Option<R> = None;
    let mut err_est = R::from_f64(f64::MAX, dw);
    let mut levels_used = 0;

    for level in 0..cfg.max_levels {
        if level > 0 {
            h /= 2.0;
        }
        let mut new_sum = R::zero(dw);
        let n_max = (t_max / h).floor() as i64;
        let hr = R::from_f64(h, dw);
        if level == 0 {
            for j in 0..=n_max {
                let t = &hr * &R::from_i64(j, dw);
                eval_at(&t, &mut new_sum, &mut evals);
            }
            total = &new_sum * &hr;
        } else {
            // only odd multiples of the new h are new nodes
            let mut j = 1i64;
            while j <= n_max {
                let t = &hr * &R::from_i64(j, dw);
                eval_at(&t, &mut new_sum, &mut evals);
                j += 2;
            }
            total = &(&total / &R::from_u64(2, dw)) + &(&new_sum * &hr);
        }
        levels_used = level + 1;
        if let Some(prev) = &prev_total {
            err_est = (&total - prev).abs();
            if err_est <= target {
                return QuadResult {
                    value: total.with_digits(digits),
                    error_estimate: err_est.with_digits(digits),
                    converged: true,
                    levels_used,
                    evaluations: evals,
                };
            }
        }
        prev_total = Some(total.clone());
    }
    QuadResult {
        value: total.with_digits(digits),
        error_estimate: err_est.with_digits(digits),
        converged: false,
        levels_used,
        evaluations: evals,
    }
}

/// Exp-sinh quadrature of `f` over (0, ∞). The integrand must decay
/// algebraically (faster than 1/x) at infinity and stay integrable at 0.
pub fn quad_de_halfline<F>(f: F, cfg: &QuadratureConfig, digits: u32) -> QuadResult
where
    F: Fn(&HalfLinePoint) -> R,
{
    let dw = digits + 10;
    let t_max = t_max_halfline(digits);
    let target = R::from_f64(cfg.target_abs_error, dw);
    let pi_half = &R::pi(dw) / &R::from_u64(2, dw);

    let eval_at = |t: &R, sum: &mut R, evals: &mut u64| {
        let u = &pi_half * &t.sinh();
        let x = u.exp();
        let w = &(&pi_half * &t.cosh()) * &x;
        let p = HalfLinePoint { x, ln_x: u };
        *sum = &*sum + &(&f(&p) * &w);
        *evals += 1;
    };

    let mut h = 1.0f64;
    let mut evals: u64 = 0;
    let mut total = R::zero(dw);
    let mut prev_total: Option<R> = None;
    let mut err_est = R::from_f64(f64::MAX, dw);
    let mut levels_used = 0;

    for level in 0..cfg.max_levels {
        if level > 0 {
            h /= 2.0;
        }
        let mut new_sum = R::zero(dw);
        let n_max = (t_max / h).floor() as i64;
        let hr = R::from_f64(h, dw);
        if level == 0 {
            for j in -n_max..=n_max {
                let t = &hr * &R::from_i64(j, dw);
                eval_at(&t, &mut new_sum, &mut evals);
            }
            total = &new_sum * &hr;
        } else {
            let mut j = -n_max;
            while j <= n_max {
                if j.rem_euclid(2) != 0 {
                    let t = &hr * &R::from_i64(j, dw);
                    eval_at(&t, &mut new_sum, &mut evals);
                }
                j += 1;
            }
            total = &(&total / &R::from_u64(2, dw)) + &(&new_sum * &hr);
        }
        levels_used = level + 1;
        if let Some(prev) = &prev_total {
            err_est = (&total - prev).abs();
            if err_est <= target {
                return QuadResult {
                    value: total.with_digits(digits),
                    error_estimate: err_est.with_digits(digits),
                    converged: true,
                    levels_used,
                    evaluations: evals,
                };
            }
        }
        prev_total = Some(total.clone());
    }
    QuadResult {
        value: total.with_digits(digits),
        error_estimate: err_est.with_digits(digits),
        converged: false,
        levels_used,
        evaluations: evals,
    }
}
