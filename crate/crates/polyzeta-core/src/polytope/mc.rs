//! Seeded Monte Carlo over the paper's polytopes. Bounded integrands only:
//! the singular triangle integrands have infinite variance and are covered
//! by the quadrature reductions instead.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};

/// The integration regions: the triangle T, the unit square S, the upper
/// half-triangle H, and the higher-dimensional analogs V_m and W_m.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolytopeSpec {
    /// {(x,y) ∈ [0,1]² : x+y ≥ 1}
    T,
    /// [0,1]²
    S,
    /// {0 ≤ x ≤ y ≤ 1, x+y ≥ 1}
    H,
    /// {x ∈ [0,1]^m : x₁ + x_j ≥ 1, j = 2..m}
    V(u32),
    /// {x ∈ [0,1]^m : x_i + x_j ≥ 1, i < j}
    W(u32),
}

impl PolytopeSpec {
    pub fn dimension(&self) -> usize {
        match *self {
            PolytopeSpec::T | PolytopeSpec::S | PolytopeSpec::H => 2,
            PolytopeSpec::V(m) | PolytopeSpec::W(m) => m as usize,
        }
    }

    /// Exact volume where sampling is direct; `None` for rejection regions.
    fn direct_volume(&self) -> Option<f64> {
        match *self {
            PolytopeSpec::T => Some(0.5),
            PolytopeSpec::S => Some(1.0),
            PolytopeSpec::H => Some(0.25),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct MCResult {
    /// Estimate of the integral over the polytope.
    pub mean: f64,
    /// Sample standard deviation of the estimator divided by √samples.
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
}

const WORKERS: u64 = 8;

/// Integrate `f` over the polytope with `samples` uniform points.
/// Deterministic in `seed`: each worker runs its own counter-derived ChaCha
/// stream and partial results merge in worker order, independent of
/// scheduling.
pub fn mc_integrate<F>(p: &PolytopeSpec, f: F, samples: u64, seed: u64) -> Result<MCResult>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    if samples == 0 {
        return Err(Error::Domain("samples must be positive".into()));
    }
    let dim = p.dimension();
    if dim < 2 {
        return Err(Error::Domain("polytopes here have dimension >= 2".into()));
    }

    let worker_quota: Vec<u64> = (0..WORKERS)
        .map(|w| samples / WORKERS + u64::from(w < samples % WORKERS))
        .collect();

    // (Σ X_i, Σ X_i², accepted) per worker, X_i the per-sample estimator
    let run_worker = |w: u64| -> (f64, f64, u64) {
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        rng.set_stream(w + 1);
        let mut point = vec![0.0f64; dim];
        let mut sum = 0.0;
        let mut sum_sq = 0.0;
        let mut accepted = 0u64;
        for _ in 0..worker_quota[w as usize] {
            for c in point.iter_mut() {
                *c = rng.gen::<f64>();
            }
            let x = match *p {
                PolytopeSpec::S => {
                    accepted += 1;
                    f(&point)
                }
                PolytopeSpec::T => {
                    if point[0] + point[1] < 1.0 {
                        point[0] = 1.0 - point[0];
                        point[1] = 1.0 - point[1];
                    }
                    accepted += 1;
                    0.5 * f(&point)
                }
                PolytopeSpec::H => {
                    if point[0] + point[1] < 1.0 {
                        point[0] = 1.0 - point[0];
                        point[1] = 1.0 - point[1];
                    }
                    if point[0] > point[1] {
                        point.swap(0, 1);
                    }
                    accepted += 1;
                    0.25 * f(&point)
                }
                PolytopeSpec::V(_) => {
                    let inside = point[1..].iter().all(|&xj| point[0] + xj >= 1.0);
                    if inside {
                        accepted += 1;
                        f(&point)
                    } else {
                        0.0
                    }
                }
                PolytopeSpec::W(_) => {
                    let mut inside = true;
                    'pairs: for i in 0..dim {
                        for j in (i + 1)..dim {
                            if point[i] + point[j] < 1.0 {
                                inside = false;
                                break 'pairs;
                            }
                        }
                    }
                    if inside {
                        accepted += 1;
                        f(&point)
                    } else {
                        0.0
                    }
                }
            };
            sum += x;
            sum_sq += x * x;
        }
        (sum, sum_sq, accepted)
    };

    let partials: Vec<(f64, f64, u64)> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..WORKERS)
            .map(|w| scope.spawn(move || run_worker(w)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });

    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    let mut accepted = 0u64;
    for (s, s2, a) in partials {
        sum += s;
        sum_sq += s2;
        accepted += a;
    }
    if p.direct_volume().is_none() && accepted == 0 {
        return Err(Error::ZeroAcceptance { attempts: samples });
    }

    let n = samples as f64;
    let mean = sum / n;
    let variance = (sum_sq / n - mean * mean).max(0.0);
    Ok(MCResult {
        mean,
        std_error: (variance / n).sqrt(),
        samples,
        seed,
    })
}
