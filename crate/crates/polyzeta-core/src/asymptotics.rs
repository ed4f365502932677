//! Asymptotic expansion of Taylor coefficients from simple-pole data:
//! a_n ≈ -r₁/z₁^{n+1} - r₂/z₂^{n+1} - …, applied to I_n/n! through the
//! poles of the generating function at the negative integers, the
//! constant-weight MZV sums, and the Abel summation of Σ (-1)^n I_n/n!.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::euler_gamma::genfun_f;
use crate::kernel::bernoulli::binomial_big;
use crate::kernel::real::HighPrecReal;

type R = HighPrecReal;

/// Ordered simple poles (location, residue), real, 0 < |z₁| ≤ |z₂| ≤ ….
#[derive(Clone, Debug)]
pub struct PoleData {
    poles: Vec<(BigRational, BigRational)>,
}

impl PoleData {
    pub fn new(poles: Vec<(BigRational, BigRational)>) -> Result<Self> {
        let mut prev: Option<BigRational> = None;
        for (z, _) in &poles {
            let m = z.abs();
            if m.is_zero() {
                return Err(Error::Domain("pole at the origin is not allowed".into()));
            }
            if let Some(p) = &prev {
                if &m < p {
                    return Err(Error::Domain(
                        "poles must be ordered by non-decreasing modulus".into(),
                    ));
                }
            }
            prev = Some(m);
        }
        Ok(Self { poles })
    }

    pub fn len(&self) -> usize {
        self.poles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poles.is_empty()
    }

    pub fn poles(&self) -> &[(BigRational, BigRational)] {
        &self.poles
    }

    /// Scale every residue by an exact rational (linearity checks).
    pub fn scale_residues(&self, c: &BigRational) -> Self {
        Self {
            poles: self.poles.iter().map(|(z, r)| (z.clone(), r * c)).collect(),
        }
    }
}

/// A K-term coefficient approximation with the modulus of the first
/// neglected term, when one is available.
#[derive(Clone, Debug)]
pub struct AsymptoticApprox {
    pub n: u32,
    pub terms_used: u32,
    pub value: R,
    pub next_term_bound: Option<R>,
}

/// -Σ_{j≤K} r_j / z_j^{n+1}, exactly in rationals, rounded at the end.
pub fn lemma2_approx(p: &PoleData, n: u32, k_terms: u32, digits: u32) -> Result<AsymptoticApprox> {
    if k_terms as usize > p.len() {
        return Err(Error::Domain(format!(
            "requested {k_terms} terms but only {} poles are available",
            p.len()
        )));
    }
    let mut acc = BigRational::zero();
    for (z, r) in &p.poles[..k_terms as usize] {
        let zp = pow_rational(z, n + 1);
        acc -= r / zp;
    }
    let next = p.poles.get(k_terms as usize).map(|(z, r)| {
        let zp = pow_rational(z, n + 1);
        R::from_rational(&(r / zp).abs(), digits)
    });
    Ok(AsymptoticApprox {
        n,
        terms_used: k_terms,
        value: R::from_rational(&acc, digits),
        next_term_bound: next,
    })
}

fn pow_rational(z: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::from_integer(BigInt::from(1));
    for _ in 0..e {
        acc *= z;
    }
    acc
}

/// K-term expansion of I_n/n! = Σ_k C(2k,k)/k^{n+2}: the Taylor
/// coefficient of the generating function is a_n = (-1)^n I_n/n!, so this
/// is (-1)^n times [`lemma2_approx`] on the Theorem-5 pole data.
pub fn i_n_over_factorial_expansion(
    n: u32,
    k_terms: u32,
    digits: u32,
) -> Result<AsymptoticApprox> {
    let poles = theorem5_pole_data(k_terms + 1)?;
    let mut approx = lemma2_approx(&poles, n, k_terms, digits)?;
    if n % 2 == 1 {
        approx.value = -approx.value;
    }
    Ok(approx)
}

/// Pole data of f(t) = (1 - 1/C(2t,t))/t²: simple poles at t = -k with
/// residues C(2k,k)/k, k = 1..K, exactly.
pub fn theorem5_pole_data(k_max: u32) -> Result<PoleData> {
    if k_max < 1 {
        return Err(Error::Domain("need at least one pole".into()));
    }
    let poles = (1..=k_max as u64)
        .map(|k| {
            (
                BigRational::from_integer(BigInt::from(-(k as i64))),
                BigRational::new(binomial_big(2 * k, k), BigInt::from(k)),
            )
        })
        .collect();
    PoleData::new(poles)
}

/// Numeric residue of f at t = -k: symmetric limit of (t+k) f(t) at
/// t = -k ± ε with Neville extrapolation over a geometric ε ladder.
pub fn residue_numeric_check(k: u32, digits: u32) -> Result<R> {
    if k < 1 {
        return Err(Error::Domain("poles sit at negative integers".into()));
    }
    let dw = digits + 6;
    let center = R::from_i64(-(k as i64), dw);
    let eps_values = [1e-2, 1e-3, 1e-4, 1e-5];
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for &e in &eps_values {
        let eps = R::from_f64(e, dw);
        let plus = {
            let t = &center + &eps;
            &eps * &genfun_f(&t, dw)?
        };
        let minus = {
            let t = &center - &eps;
            -(&eps * &genfun_f(&t, dw)?)
        };
        // symmetric mean kills the odd orders: value = Res + c₂ε² + c₄ε⁴…
        xs.push(&eps * &eps);
        ys.push(&(&plus + &minus) / &R::from_u64(2, dw));
    }
    // Neville tableau at 0
    let n = xs.len();
    let mut tableau = ys;
    for level in 1..n {
        for i in 0..(n - level) {
            let num = &(&xs[i + level] * &tableau[i]) - &(&xs[i] * &tableau[i + 1]);
            let den = &xs[i + level] - &xs[i];
            tableau[i] = &num / &den;
        }
    }
    Ok(tableau[0].with_digits(digits))
}

/// K-term truncation of Corollary 4:
/// Σ_{k=0}^{m-2} ζ(m-k,{1}_k) ≈ Σ_{k=1}^{K} C(2k,k)/k^m.
pub fn weight_sum_expansion(m: u32, k_terms: u32, digits: u32) -> Result<AsymptoticApprox> {
    if m < 2 {
        return Err(Error::Domain("constant-weight sums need m >= 2".into()));
    }
    let mut acc = BigRational::zero();
    for k in 1..=k_terms as u64 {
        acc += BigRational::new(binomial_big(2 * k, k), BigInt::from(k).pow(m));
    }
    let next_k = k_terms as u64 + 1;
    let next = BigRational::new(binomial_big(2 * next_k, next_k), BigInt::from(next_k).pow(m));
    Ok(AsymptoticApprox {
        n: m,
        terms_used: k_terms,
        value: R::from_rational(&acc, digits),
        next_term_bound: Some(R::from_rational(&next, digits)),
    })
}

/// Values of the generating function at 1-ε: the Abel route to 1/2.
pub fn abel_limit_check(eps_list: &[f64], digits: u32) -> Result<Vec<(f64, R)>> {
    eps_list
        .iter()
        .map(|&e| {
            if !(0.0..1.0).contains(&e) || e == 0.0 {
                return Err(Error::Domain("Abel offsets must lie in (0, 1)".into()));
            }
            let t = &R::one(digits + 4) - &R::from_f64(e, digits + 4);
            Ok((e, genfun_f(&t, digits)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::i_n_reduce;
    use crate::kernel::bernoulli::factorial_big;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn single_pole_geometric_case() {
        // pole z = -1, residue -2: a_5 = -(-2)/(-1)^6 = 2
        let d = 25;
        let p = PoleData::new(vec![(q(-1, 1), q(-2, 1))]).unwrap();
        let a = lemma2_approx(&p, 5, 1, d).unwrap();
        assert_eq!(a.value, R::from_u64(2, d));
        assert!(a.next_term_bound.is_none());
    }

    #[test]
    fn pole_ordering_enforced() {
        assert!(PoleData::new(vec![(q(-2, 1), q(1, 1)), (q(1, 1), q(1, 1))]).is_err());
        assert!(PoleData::new(vec![(q(0, 1), q(1, 1))]).is_err());
    }

    #[test]
    fn theorem5_leading_terms() {
        let d = 30;
        let p = theorem5_pole_data(4).unwrap();
        // residues are exactly C(2k,k)/k
        assert_eq!(p.poles()[0].1, q(2, 1));
        assert_eq!(p.poles()[1].1, q(3, 1));
        assert_eq!(p.poles()[2].1, q(20, 3));
        assert_eq!(p.poles()[3].1, q(70, 4));
        // K = 1 at any n gives the constant 2
        let a = lemma2_approx(&p, 10, 1, d).unwrap();
        assert_eq!(a.value, R::from_u64(2, d));
        // K = 4 at n = 10: 2 + 6/2^12 + 20/3^12 + 70/4^12
        let a4 = lemma2_approx(&p, 10, 4, d).unwrap();
        let expected = q(2, 1)
            + q(6, 4096)
            + BigRational::new(20.into(), BigInt::from(3).pow(12))
            + BigRational::new(70.into(), BigInt::from(4).pow(12));
        assert_eq!(a4.value, R::from_rational(&expected, d));
    }

    #[test]
    fn linearity_in_residues() {
        let d = 25;
        let p = theorem5_pole_data(3).unwrap();
        let doubled = p.scale_residues(&q(2, 1));
        let a = lemma2_approx(&p, 7, 3, d).unwrap();
        let b = lemma2_approx(&doubled, 7, 3, d).unwrap();
        assert_eq!(&a.value * &R::from_u64(2, d), b.value);
    }

    #[test]
    fn residues_by_limit_extrapolation() {
        let d = 30;
        for k in 1..=3u32 {
            let v = residue_numeric_check(k, d).unwrap();
            let exact = R::from_rational(
                &BigRational::new(binomial_big(2 * k as u64, k as u64), BigInt::from(k)),
                d,
            );
            assert!(
                (&v - &exact).abs() < R::pow10(-8, d),
                "residue at -{k}: {v} vs {exact}"
            );
        }
    }

    #[test]
    fn remark1_error_ordering() {
        // |I_n/n! - K-term approx| ≤ 10 |r_{K+1}|/(K+1)^{n+2} for n in 8..=16
        let d = 40;
        for n in 8u32..=16 {
            let truth = {
                let i_n = i_n_reduce(n).unwrap().eval_numeric(d).unwrap();
                &i_n / &R::from_bigint(&factorial_big(n as u64), d)
            };
            for k in 1u32..=3 {
                let approx = i_n_over_factorial_expansion(n, k, d).unwrap();
                let bound = &approx.next_term_bound.clone().unwrap() * &R::from_u64(10, d);
                assert!(
                    (&truth - &approx.value).abs() <= bound,
                    "n = {n}, K = {k}"
                );
            }
        }
    }

    #[test]
    fn weight_sum_matches_mzv_sum() {
        // m = 10: Σ_k ζ(m-k,{1}_k) vs the 4-term expansion, within twice
        // the next term
        let d = 30;
        let m = 10u32;
        let mut series_sum = R::zero(d);
        for k in 0..=(m - 2) {
            let idx = crate::zeta_numeric::MZVIndex::new(m - k, k).unwrap();
            series_sum = &series_sum + &crate::zeta_numeric::mzv_ones(&idx, d).unwrap();
        }
        let a = weight_sum_expansion(m, 4, d).unwrap();
        let slack = &a.next_term_bound.clone().unwrap() * &R::from_u64(2, d);
        assert!((&series_sum - &a.value).abs() <= slack);
    }

    #[test]
    fn average_trends_to_two_over_m() {
        // (Σ/(m-1)) / (2/m) → 1 from above as m grows
        let d = 25;
        let mut prev_ratio: Option<f64> = None;
        for m in [10u32, 16, 24, 40] {
            let a = weight_sum_expansion(m, 6, d).unwrap();
            let avg = a.value.to_f64() / (m as f64 - 1.0);
            let ratio = avg / (2.0 / m as f64);
            if let Some(p) = prev_ratio {
                assert!(ratio < p, "ratio must decrease toward 1");
            }
            assert!(ratio > 1.0);
            prev_ratio = Some(ratio);
        }
    }

    #[test]
    fn abel_values_approach_half() {
        let d = 30;
        let vals = abel_limit_check(&[1e-1, 1e-2, 1e-3], d).unwrap();
        let half = R::from_f64(0.5, d);
        for (e, v) in &vals {
            let slack = R::from_f64(10.0 * e, d);
            assert!((v - &half).abs() < slack, "eps = {e}");
        }
        // f(1) = 1/2 exactly
        assert_eq!(genfun_f(&R::one(d), d).unwrap(), half);
        assert!(abel_limit_check(&[0.0], d).is_err());
    }

    #[test]
    fn partial_sums_oscillate_without_converging() {
        // Σ (-1)^n I_n/n! diverges: |I_n/n!| → 2, so consecutive partial
        // sums keep jumping by about 2
        let d = 30;
        let mut partial = R::zero(d);
        let mut jumps = Vec::new();
        for n in 0..=18u32 {
            let i_n = i_n_reduce(n).unwrap().eval_numeric(d).unwrap();
            let term = &i_n / &R::from_bigint(&factorial_big(n as u64), d);
            let signed = if n % 2 == 0 { term.clone() } else { -&term };
            partial = &partial + &signed;
            if n >= 14 {
                jumps.push(term.to_f64());
            }
        }
        for j in jumps {
            assert!((j - 2.0).abs() < 0.1, "late terms sit near 2, got {j}");
        }
    }
}
