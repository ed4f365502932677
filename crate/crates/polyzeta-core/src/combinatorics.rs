//! The weight coefficients a_{m,p} and A(k₂,…,k_m), the symbolic
//! assemblies of the V_m and W_m integrals, their recurrence, and the
//! polylog–MZV relation they imply.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::kernel::bernoulli::{binomial_big, factorial_big};
use crate::kernel::real::HighPrecReal;
use crate::symbolic::{mzv_reduce, ZetaAtom, ZetaMonomial, ZetaPolynomial};
use crate::zeta_numeric::{mpl_ones, mzv_ones, polylog_half, zeta_int, MPLIndex, MZVIndex};

type R = HighPrecReal;

/// Default cap on m+n for the symbolic assemblies; the partition
/// enumeration behind the reductions grows super-polynomially past this.
pub const DEFAULT_WEIGHT_CAP: u32 = 10;

/// Exponent list (k₂,…,k_m) of one multinomial term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    pub ks: Vec<u32>,
}

impl WeightVector {
    pub fn new(ks: Vec<u32>) -> Self {
        Self { ks }
    }

    pub fn total(&self) -> u32 {
        self.ks.iter().sum()
    }
}

/// a_{m,p} = Σ_{k₂+…+k_m = p} (p+m-1)!/((k₂+1)!…(k_m+1)!), evaluated as
/// (p+m-1)! [x^p] ((e^x - 1)/x)^(m-1) by exact convolution. The defining
/// enumeration lives in the tests as the independent oracle.
pub fn a_weight(m: u32, p: u32) -> Result<BigInt> {
    if m < 2 {
        return Err(Error::Domain("a_weight needs m >= 2".into()));
    }
    let deg = p as usize;
    // base series (e^x - 1)/x: coefficient of x^i is 1/(i+1)!
    let base: Vec<BigRational> = (0..=deg)
        .map(|i| BigRational::new(BigInt::one(), factorial_big(i as u64 + 1)))
        .collect();
    let mut acc: Vec<BigRational> = vec![BigRational::zero(); deg + 1];
    acc[0] = BigRational::one();
    for _ in 0..(m - 1) {
        let mut next = vec![BigRational::zero(); deg + 1];
        for (i, c) in acc.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, b) in base.iter().enumerate() {
                if i + j > deg {
                    break;
                }
                next[i + j] += c * b;
            }
        }
        acc = next;
    }
    let v = &acc[deg] * BigRational::from_integer(factorial_big((p + m - 1) as u64));
    debug_assert!(v.denom().is_one(), "a_weight must be an integer");
    Ok(v.to_integer())
}

/// Proposition-3 recurrence, exactly:
/// Σ_{t=0}^{m-2} C(m-1,t) a_{m-t, p+t} = (m-1)^{m+p-1}.
pub fn prop3_check(m: u32, p: u32) -> Result<bool> {
    if m < 2 {
        return Err(Error::Domain("prop3_check needs m >= 2".into()));
    }
    let mut lhs = BigInt::zero();
    for t in 0..=(m - 2) {
        lhs += binomial_big((m - 1) as u64, t as u64) * a_weight(m - t, p + t)?;
    }
    let rhs = BigInt::from((m - 1) as u64).pow(m + p - 1);
    Ok(lhs == rhs)
}

/// K_{m,n} assembled symbolically: the integer MZV combination
/// n! Σ_p a_{m,p} ζ(m+p, {1}_{n-p}) and its reduction to single zetas.
#[derive(Clone, Debug)]
pub struct KSymbolic {
    pub polynomial: ZetaPolynomial,
    pub mzv_combination: Vec<(BigInt, MZVIndex)>,
}

pub fn k_symbolic(m: u32, n: u32, weight_cap: u32) -> Result<KSymbolic> {
    if m < 2 {
        return Err(Error::Domain("K_{m,n} needs m >= 2".into()));
    }
    if m + n > weight_cap {
        return Err(Error::WeightCap { requested: m + n, cap: weight_cap });
    }
    let nf = factorial_big(n as u64);
    let mut combination = Vec::new();
    let mut poly = ZetaPolynomial::zero();
    for p in 0..=n {
        let coeff = &nf * a_weight(m, p)?;
        let idx = MZVIndex::new(m + p, n - p)?;
        let reduced = mzv_reduce(&idx)?;
        poly = &poly + &reduced.scale(&BigRational::from_integer(coeff.clone()));
        combination.push((coeff, idx));
    }
    Ok(KSymbolic { polynomial: poly, mzv_combination: combination })
}

/// A(k₂,…,k_m): 1/k₂! for m = 2; for m ≥ 3 the factorial product divided
/// by the chain (k_m+1)(k_{m-1}+k_m+2)…(k₃+…+k_m+m-2).
pub fn a_coeff(ks: &WeightVector) -> Result<BigRational> {
    if ks.ks.is_empty() {
        return Err(Error::Domain("A(…) needs at least k₂ (m >= 2)".into()));
    }
    let mut denom = BigInt::one();
    for &k in &ks.ks {
        denom *= factorial_big(k as u64);
    }
    // chain factors: j-th is (sum of the last j entries) + j, j = 1..m-2
    let m_minus_1 = ks.ks.len(); // entries k₂..k_m
    let mut suffix = 0u64;
    for j in 1..m_minus_1 {
        suffix += ks.ks[m_minus_1 - j] as u64;
        denom *= BigInt::from(suffix + j as u64);
    }
    Ok(BigRational::new(BigInt::one(), denom))
}

/// Every composition of `total` into `parts` nonnegative entries.
fn for_each_composition<F: FnMut(&[u32])>(total: u32, parts: usize, f: &mut F) {
    fn rec<F: FnMut(&[u32])>(left: u32, idx: usize, cur: &mut Vec<u32>, f: &mut F) {
        if idx + 1 == cur.len() {
            cur[idx] = left;
            f(cur);
            return;
        }
        for v in 0..=left {
            cur[idx] = v;
            rec(left - v, idx + 1, cur, f);
        }
    }
    if parts == 0 {
        if total == 0 {
            f(&[]);
        }
        return;
    }
    let mut cur = vec![0u32; parts];
    rec(total, 0, &mut cur, f);
}

/// M_{m,n} assembled symbolically: MZV parts reduced to single zetas,
/// ln 2 powers and Li_{b,{1}_c}(1/2) atoms kept symbolic.
pub fn m_symbolic(m: u32, n: u32, weight_cap: u32) -> Result<ZetaPolynomial> {
    if m < 2 {
        return Err(Error::Domain("M_{m,n} needs m >= 2".into()));
    }
    if m + n > weight_cap {
        return Err(Error::WeightCap { requested: m + n, cap: weight_cap });
    }
    let w = m + n;
    let prefactor = BigRational::from_integer(factorial_big(m as u64) * factorial_big(n as u64));
    let mut total = ZetaPolynomial::zero();
    for k1 in 0..=n {
        let q = n - k1;
        // Σ over (k₂..k_m) compositions of q of A(k₂..k_m)
        let mut a_sum = BigRational::zero();
        let mut err: Option<Error> = None;
        for_each_composition(q, (m - 1) as usize, &mut |ks| {
            if err.is_some() {
                return;
            }
            match a_coeff(&WeightVector::new(ks.to_vec())) {
                Ok(a) => a_sum += a,
                Err(e) => err = Some(e),
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        if a_sum.is_zero() {
            continue;
        }
        let qm2 = (q + m - 2) as u64; // (q+m-2)! appears twice
        let fact_qm2 = BigRational::from_integer(factorial_big(qm2));

        let mut bracket = ZetaPolynomial::zero();
        // (q+m-2)! ζ(q+m, {1}_{k1})
        let zeta_part = mzv_reduce(&MZVIndex::new(q + m, k1)?)?;
        bracket = &bracket + &zeta_part.scale(&fact_qm2);
        // - ln^{m+n} 2 / ((k1+1)!(m+n))
        let ln_coeff = BigRational::new(
            BigInt::one(),
            factorial_big(k1 as u64 + 1) * BigInt::from(w as u64),
        );
        bracket.add_term(ZetaMonomial::atom_pow(ZetaAtom::Ln2, w), -ln_coeff);
        // - (q+m-2)! Σ_p (ln^p 2 / p!) Li_{q+m-p, {1}_{k1}}(1/2)
        for p in 0..=(q + m - 2) {
            let b = q + m - p;
            let li_atom = if k1 == 0 {
                ZetaAtom::LiHalf(b)
            } else {
                ZetaAtom::MplHalf(b, k1)
            };
            let mono = ZetaMonomial::atom(li_atom).mul(&ZetaMonomial::atom_pow(ZetaAtom::Ln2, p));
            let c = &fact_qm2 / BigRational::from_integer(factorial_big(p as u64));
            bracket.add_term(mono, -c);
        }
        total = &total + &bracket.scale(&(&prefactor * &a_sum));
    }
    Ok(total)
}

/// L_m = m! ζ(m) - (m-1) ln^m 2 - m! Σ_{p=0}^{m-2} (ln^p 2/p!) Li_{m-p}(1/2),
/// exactly as displayed.
pub fn l_symbolic(m: u32) -> Result<ZetaPolynomial> {
    if m < 2 {
        return Err(Error::Domain("L_m needs m >= 2".into()));
    }
    let mf = BigRational::from_integer(factorial_big(m as u64));
    let mut poly = ZetaPolynomial::zero();
    poly.add_term(ZetaMonomial::atom(ZetaAtom::Zeta(m)), mf.clone());
    poly.add_term(
        ZetaMonomial::atom_pow(ZetaAtom::Ln2, m),
        -BigRational::from_integer(BigInt::from((m - 1) as u64)),
    );
    for p in 0..=(m - 2) {
        let mono = ZetaMonomial::atom(ZetaAtom::LiHalf(m - p))
            .mul(&ZetaMonomial::atom_pow(ZetaAtom::Ln2, p));
        let c = &mf / BigRational::from_integer(factorial_big(p as u64));
        poly.add_term(mono, -c);
    }
    Ok(poly)
}

/// Corollary 7, both routes evaluated numerically:
/// lhs = Σ_k Σ_p (ln^p 2/p!) Li_{n-k+2-p,{1}_k}(1/2),
/// rhs = (1-2^{n+1})/(n+2)! ln^{n+2} 2 + ½ Σ_k ζ(n-k+2,{1}_k).
pub fn corollary7_check(n: u32, digits: u32) -> Result<(R, R, R)> {
    let dw = digits + 5;
    let ln2 = R::ln2(dw);
    let half_arg = R::from_f64(0.5, dw);
    let mut lhs = R::zero(dw);
    for k in 0..=n {
        for p in 0..=(n - k) {
            let b = n - k + 2 - p;
            let li = mpl_ones(&MPLIndex::new(b, k, half_arg.clone())?, dw)?;
            let c = &ln2.powi(p as i64) / &R::from_bigint(&factorial_big(p as u64), dw);
            lhs = &lhs + &(&c * &li);
        }
    }
    let mut rhs = {
        let coeff = BigRational::new(
            BigInt::one() - BigInt::from(2u64).pow(n + 1),
            factorial_big(n as u64 + 2),
        );
        &R::from_rational(&coeff, dw) * &ln2.powi(n as i64 + 2)
    };
    let mut mzv_sum = R::zero(dw);
    for k in 0..=n {
        mzv_sum = &mzv_sum + &mzv_ones(&MZVIndex::new(n - k + 2, k)?, dw)?;
    }
    rhs = &rhs + &(&mzv_sum / &R::from_u64(2, dw));
    let delta = (&lhs - &rhs).abs();
    Ok((lhs.with_digits(digits), rhs.with_digits(digits), delta.with_digits(digits)))
}

/// Σ_{k=0}^n 1/((k+1)!(n-k)!) = (2^{n+1}-1)/(n+1)!, exactly.
pub fn binomial_sum_identity_check(n: u32) -> bool {
    let mut lhs = BigRational::zero();
    for k in 0..=n {
        lhs += BigRational::new(
            BigInt::one(),
            factorial_big(k as u64 + 1) * factorial_big((n - k) as u64),
        );
    }
    let rhs = BigRational::new(
        BigInt::from(2u64).pow(n + 1) - BigInt::one(),
        factorial_big(n as u64 + 1),
    );
    lhs == rhs
}

/// Ramanujan's summation: Σ 1/(r² 2^r) H_r = ζ(3) - π² ln2/12, with the
/// left side as Li_{2,1}(1/2) + Li₃(1/2).
pub fn ramanujan_check(digits: u32) -> Result<(R, R, R)> {
    let dw = digits + 5;
    let lhs = {
        let li21 = mpl_ones(&MPLIndex::new(2, 1, R::from_f64(0.5, dw))?, dw)?;
        let li3 = polylog_half(3, dw)?;
        &li21 + &li3
    };
    let rhs = {
        let pi = R::pi(dw);
        let corr = &(&(&pi * &pi) * &R::ln2(dw)) / &R::from_u64(12, dw);
        &zeta_int(3, dw)? - &corr
    };
    let delta = (&lhs - &rhs).abs();
    Ok((lhs.with_digits(digits), rhs.with_digits(digits), delta.with_digits(digits)))
}
