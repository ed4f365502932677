//! Named verification suites with machine-readable reports. Every numeric
//! field in a report is a decimal string, and for a fixed [`RunConfig`] the
//! serialized report is byte-identical across runs.

use serde::{Deserialize, Serialize};

use crate::asymptotics::{i_n_over_factorial_expansion, residue_numeric_check, weight_sum_expansion};
use crate::combinatorics::{
    a_weight, binomial_sum_identity_check, corollary7_check, k_symbolic, l_symbolic, m_symbolic,
    prop3_check, ramanujan_check,
};
use crate::error::{Error, Result};
use crate::euler_gamma::{
    euler_gamma_harmonic, gamma_prop2, genfun_bbg, genfun_f, genfun_series_check,
    ser_product_partial, theorem4_verify,
};
use crate::kernel::bernoulli::factorial_big;
use crate::kernel::real::HighPrecReal;
use crate::polytope::mc::{mc_integrate, PolytopeSpec};
use crate::polytope::{i_minus1_numeric, j_numeric, k_mn_numeric, m_mn_numeric, IMinus1Form};
use crate::polytope::gamma_t_numeric;
use crate::symbolic::{duality_check, i_n_reduce, kolbig_j};
use crate::zeta_numeric::{mzv_ones, zeta_int, MZVIndex};

type R = HighPrecReal;

/// Configuration shared by every CLI command and suite run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunConfig {
    pub digits: u32,
    pub seed: u64,
    pub weight_cap: u32,
    pub tolerance_scale: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self { digits: 50, seed: 0, weight_cap: 10, tolerance_scale: 1.0 }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.digits < 15 {
            return Err(Error::Domain("precision must be at least 15 digits".into()));
        }
        if self.tolerance_scale <= 0.0 {
            return Err(Error::Domain("tolerance scale must be positive".into()));
        }
        Ok(())
    }
}

/// One named check: |delta| against a tolerance, both as decimal strings.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub delta: String,
    pub tolerance: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    fn numeric(name: impl Into<String>, delta: &R, tol: f64) -> Self {
        let pass = delta.abs() <= R::from_f64(tol, delta.digits());
        Self {
            name: name.into(),
            delta: delta.abs().to_dec_string(),
            tolerance: format!("{tol:e}"),
            pass,
            note: None,
        }
    }

    fn exact(name: impl Into<String>, pass: bool) -> Self {
        Self {
            name: name.into(),
            delta: if pass { "0".into() } else { "1".into() },
            tolerance: "0 (exact)".into(),
            pass,
            note: None,
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema: String,
    pub command: String,
    pub config: RunConfig,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl SuiteReport {
    fn new(command: String, config: RunConfig, checks: Vec<Check>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        Self {
            schema: "polyzeta-report/1".into(),
            command,
            config,
            checks,
            pass,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,delta,tolerance,pass\n");
        for c in &self.checks {
            out.push_str(&format!(
                "{},{},{},{}\n",
                csv_quote(&c.name),
                c.delta,
                c.tolerance,
                c.pass
            ));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "[{}] {} (delta {}, tol {})\n",
                if c.pass { "pass" } else { "FAIL" },
                c.name,
                c.delta,
                c.tolerance
            ));
            if let Some(n) = &c.note {
                out.push_str(&format!("       {n}\n"));
            }
        }
        out.push_str(&format!(
            "{}: {} of {} checks passed\n",
            self.command,
            self.checks.iter().filter(|c| c.pass).count(),
            self.checks.len()
        ));
        out
    }
}

fn csv_quote(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// The named suites behind `polyzeta verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Lemma1,
    Duality,
    Theorem4,
    Theorem5,
    Corollary7,
    Prop3,
    Asymptotics,
    Gamma,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 9] = [
        "lemma1",
        "duality",
        "theorem4",
        "theorem5",
        "corollary7",
        "prop3",
        "asymptotics",
        "gamma",
        "all",
    ];

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "lemma1" => Suite::Lemma1,
            "duality" => Suite::Duality,
            "theorem4" => Suite::Theorem4,
            "theorem5" => Suite::Theorem5,
            "corollary7" => Suite::Corollary7,
            "prop3" => Suite::Prop3,
            "asymptotics" => Suite::Asymptotics,
            "gamma" => Suite::Gamma,
            "all" => Suite::All,
            other => {
                return Err(Error::Domain(format!(
                    "unknown suite {other:?}; expected one of {:?}",
                    Suite::NAMES
                )))
            }
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Lemma1 => "lemma1",
            Suite::Duality => "duality",
            Suite::Theorem4 => "theorem4",
            Suite::Theorem5 => "theorem5",
            Suite::Corollary7 => "corollary7",
            Suite::Prop3 => "prop3",
            Suite::Asymptotics => "asymptotics",
            Suite::Gamma => "gamma",
            Suite::All => "all",
        }
    }
}

pub fn run_suite(suite: Suite, cfg: &RunConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let checks = match suite {
        Suite::Lemma1 => lemma1_checks(cfg)?,
        Suite::Duality => duality_checks(cfg)?,
        Suite::Theorem4 => theorem4_checks(cfg)?,
        Suite::Theorem5 => theorem5_checks(cfg)?,
        Suite::Corollary7 => corollary7_checks(cfg)?,
        Suite::Prop3 => prop3_checks(cfg)?,
        Suite::Asymptotics => asymptotics_checks(cfg)?,
        Suite::Gamma => gamma_checks(cfg)?,
        Suite::All => {
            let mut all = Vec::new();
            all.extend(lemma1_checks(cfg)?);
            all.extend(duality_checks(cfg)?);
            all.extend(theorem4_checks(cfg)?);
            all.extend(theorem5_checks(cfg)?);
            all.extend(corollary7_checks(cfg)?);
            all.extend(prop3_checks(cfg)?);
            all.extend(asymptotics_checks(cfg)?);
            all.extend(gamma_checks(cfg)?);
            all
        }
    };
    Ok(SuiteReport::new(format!("verify {}", suite.name()), cfg.clone(), checks))
}

fn lemma1_checks(cfg: &RunConfig) -> Result<Vec<Check>> {
    let d = cfg.digits.min(30); // quadrature cost grows quickly past this
    let mut checks = Vec::new();
    for k in 0u32..=5 {
        for l in 1u32..=(6 - k) {
            let j = j_numeric(k, l, d)?;
            let mzv = mzv_ones(&MZVIndex::new(l + 1, k)?, d)?;
            let scale = R::from_bigint(&(factorial_big(k as u64) * factorial_big(l as u64)), d);
            let delta = &j - &(&scale * &mzv);
            checks.push(Check::numeric(
                format!("lemma1: J({k},{l}) = {k}!{l}! zeta({},{{1}}_{k}) [series]", l + 1),
                &delta,
                1e-9 * cfg.tolerance_scale,
            ));
            let sym = kolbig_j(k, l)?.eval_numeric(d)?;
            let delta = &sym - &j;
            checks.push(Check::numeric(
                format!("kolbig: J({k},{l}) reduction vs quadrature"),
                &delta,
                1e-10 * cfg.tolerance_scale,
            ));
        }
    }
    Ok(checks)
}

fn duality_checks(cfg: &RunConfig) -> Result<Vec<Check>> {
    let d = cfg.digits.max(30);
    let mut checks = Vec::new();
    for k in 0u32..=6 {
        for l in k..=(6 - k).max(k) {
            if k + l > 6 {
                continue;
            }
            let a = mzv_ones(&MZVIndex::new(k + 2, l)?, d)?;
            let b = mzv_ones(&MZVIndex::new(l + 2, k)?, d)?;
            checks.push(Check::numeric(
                format!("duality: zeta({},{{1}}_{l}) vs zeta({},{{1}}_{k}) [series]", k + 2, l + 2),
                &(&a - &b),
                1e-9 * cfg.tolerance_scale,
            ));
            let rep = duality_check(k, l, d)?;
            checks.push(
                Check::numeric(
                    format!("duality: canonical polynomials ({k},{l}) numeric"),
                    &rep.numeric_delta,
                    1e-20 * cfg.tolerance_scale,
                )
                .with_note(if rep.formal_equal {
                    "canonical polynomials identical"
                } else {
                    "canonical polynomials differ formally"
                }),
            );
            if !rep.formal_equal {
                checks.push(Check::exact(
                    format!("duality: formal canonical equality ({k},{l})"),
                    false,
                ));
            }
        }
    }
    Ok(checks)
}

fn theorem4_checks(cfg: &RunConfig) -> Result<Vec<Check>> {
    let d = cfg.digits.min(30);
    let mut checks = Vec::new();
    let a = i_minus1_numeric(IMinus1Form::HalfLine, d)?;
    let b = i_minus1_numeric(IMinus1Form::LogRatio, d)?;
    checks.push(Check::numeric(
        "prop1: I_{-1} half-line vs log-ratio",
        &(&a - &b),
        1e-10 * cfg.tolerance_scale,
    ));
    let lo = R::parse_dec("1.7330025", d)?;
    let hi = R::parse_dec("1.7330026", d)?;
    checks.push(
        Check::numeric("prop1: I_{-1} = 1.7330025... (7 decimals)", &(&a - &lo), 1e-7)
            .with_note(format!("truncation window pass = {}", a >= lo && a < hi)),
    );
    let rep = theorem4_verify(d)?;
    checks.push(
        Check::numeric("theorem4: I_{-1} = sum + li-integral + 1", &rep.delta, 1e-8 * cfg.tolerance_scale)
            .with_note(format!("lhs {}, rhs {}", rep.lhs, rep.rhs)),
    );
    Ok(checks)
}

fn theorem5_checks(cfg: &RunConfig) -> Result<Vec<Check>> {
    let d = cfg.digits.min(40).max(30);
    let mut checks = Vec::new();
    for (t, n) in [(0.1, 16u32), (-0.1, 16), (0.3, 20), (-0.3, 20), (0.5, 30)] {
        let (partial, closed) = genfun_series_check(&R::from_f64(t, d), n, d)?;
        let bound = 4.0 * t.abs().powi(n as i32 + 1);
        checks.push(Check::numeric(
            format!("theorem5: series tail at t={t}, N={n}"),
            &(&partial - &closed),
            bound * cfg.tolerance_scale,
        ));
    }
    let grid = [-0.4f64, -0.2, 0.0, 0.2, 0.4];
    for x in grid {
        for y in grid {
            if x.abs() + y.abs() > 0.8 {
                continue;
            }
            let (lhs, rhs) = genfun_bbg(&R::from_f64(x, d), &R::from_f64(y, d), d)?;
            checks.push(Check::numeric(
                format!("eq14/eq16: gamma form vs exp form at ({x},{y})"),
                &(&lhs - &rhs),
                10f64.powi(10 - d as i32) * cfg.tolerance_scale,
            ));
        }
    }
    Ok(checks)
}

fn corollary7_checks(cfg: &RunConfig) -> Result<Vec<Check>> {
    let d = cfg.digits.max(30);
    let mut checks = Vec::new();
    for n in 0u32..=6 {
        let (_, _, delta) = corollary7_check(n, d)?;
        checks.push(Check::numeric(
            format!("corollary7: two-path agreement at n={n}"),
            &delta,
            1e-20 * cfg.tolerance_scale,
        ));
    }
    let (_, _, delta) = ramanujan_check(d)?;
    checks.push(Check::numeric("example2: Ramanujan summation", &delta, 1e-20 * cfg.tolerance_scale));
    {
        use crate::zeta_numeric::{mpl_ones, MPLIndex};
        let li21 = mpl_ones(&MPLIndex::new(2, 1, R::from_f64(0.5, d))?, d)?;
        let closed = &(&zeta_int(3, d)? / &R::from_u64(8, d))
            - &(&R::ln2(d).powi(3) / &R::from_u64(6, d));
        checks.push(Check::numeric(
            "example2: Li_{2,1}(1/2) = zeta(3)/8 - ln2^3/6",
            &(&li21 - &closed),
            1e-20 * cfg.tolerance_scale,
        ));
    }
    for n in [0u32, 3, 7, 12] {
        checks.push(Check::exact(
            format!("corollary7: binomial sum identity at n={n}"),
            binomial_sum_identity_check(n),
        ));
    }
    // Theorems 7-8 numeric content
    let l2 = l_symbolic(2)?.eval_numeric(d)?;
    checks.push(Check::numeric(
        "theorem7: L_2 evaluates to zeta(2) (Euler dilog formula)",
        &(&l2 - &zeta_int(2, d)?),
        1e-20 * cfg.tolerance_scale,
    ));
    let l3 = l_symbolic(3)?.eval_numeric(d)?;
    let target = &(&zeta_int(3, d)? * &R::from_u64(3, d)) / &R::from_u64(4, d);
    checks.push(Check::numeric(
        "theorem7: L_3 = 3/4 zeta(3) (Landen trilog formula)",
        &(&l3 - &target),
        1e-20 * cfg.tolerance_scale,
    ));
    let l4 = l_symbolic(4)?.eval_numeric(d)?;
    let display = {
        use crate::zeta_numeric::polylog_half;
        let pi = R::pi(d);
        let ln2 = R::ln2(d);
        &(&(&(&(&(&pi.powi(4) * &R::from_u64(4, d)) / &R::from_u64(15, d)) - &ln2.powi(4))
            + &(&(&pi * &pi) * &(&ln2 * &ln2)))
            - &(&(&zeta_int(3, d)? * &R::from_u64(21, d)) * &ln2))
            - &(&polylog_half(4, d)? * &R::from_u64(24, d))
    };
    checks.push(Check::numeric(
        "theorem7: L_4 matches its display",
        &(&l4 - &display),
        1e-20 * cfg.tolerance_scale,
    ));
    for n in 0u32..=5 {
        let m2n = m_symbolic(2, n, cfg.weight_cap.max(n + 2))?.eval_numeric(d)?;
        let i_n = i_n_reduce(n)?.eval_numeric(d)?;
        checks.push(Check::numeric(
            format!("theorem8: M(2,{n}) = I_{n} numerically"),
            &(&m2n - &i_n),
            1e-20 * cfg.tolerance_scale,
        ));
    }
    Ok(checks)
}

fn prop3_checks(cfg: &RunConfig) -> Result<Vec<Check>> {
    let d = cfg.digits.min(30);
    let mut checks = Vec::new();
    for m in 2u32..=8 {
        let mut ok = true;
        for p in 0..=10 {
            ok &= prop3_check(m, p)?;
        }
        checks.push(Check::exact(format!("prop3: recurrence at m={m}, p<=10"), ok));
    }
    {
        use num_bigint::BigInt;
        let mut ok3 = true;
        let mut ok4 = true;
        for p in 0..=12u32 {
            let a3 = BigInt::from(4u64) * BigInt::from(2u64).pow(p) - BigInt::from(2u64);
            ok3 &= a_weight(3, p)? == a3;
            let a4 = BigInt::from(27u64) * BigInt::from(3u64).pow(p)
                - BigInt::from(24u64) * BigInt::from(2u64).pow(p)
                + BigInt::from(3u64);
            ok4 &= a_weight(4, p)? == a4;
        }
        checks.push(Check::exact("a_weight: a_{3,p} = 4*2^p - 2 for p<=12", ok3));
        checks.push(Check::exact("a_weight: a_{4,p} = 27*3^p - 24*2^p + 3 for p<=12", ok4));
    }
    for m in 2u32..=6 {
        use num_rational::BigRational;
        let k = k_symbolic(m, 0, cfg.weight_cap.max(m))?;
        let expected = crate::symbolic::ZetaPolynomial::from_atom(crate::symbolic::ZetaAtom::Zeta(m))
            .scale(&BigRational::from_integer(factorial_big(m as u64 - 1)));
        checks.push(Check::exact(
            format!("corollary6: K({m},0) = ({})! zeta({m})", m - 1),
            k.polynomial.canonicalize() == expected.canonicalize(),
        ));
    }
    for n in 0u32..=4 {
        let k = k_symbolic(2, n, cfg.weight_cap.max(n + 2))?;
        checks.push(Check::exact(
            format!("theorem6: K(2,{n}) reduces to I_{n}"),
            k.polynomial.canonicalize() == i_n_reduce(n)?.canonicalize(),
        ));
    }
    {
        let k31_sym = k_symbolic(3, 1, cfg.weight_cap.max(4))?.polynomial.eval_numeric(d)?;
        let k31_num = k_mn_numeric(3, 1, d)?;
        checks.push(Check::numeric(
            "theorem6: K(3,1) symbolic vs numeric",
            &(&k31_sym - &k31_num),
            1e-8 * cfg.tolerance_scale,
        ));
        let m31_sym = m_symbolic(3, 1, cfg.weight_cap.max(4))?.eval_numeric(d)?;
        let m31_num = m_mn_numeric(3, 1, d)?;
        checks.push(Check::numeric(
            "theorem8: M(3,1) symbolic vs numeric",
            &(&m31_sym - &m31_num),
            1e-8 * cfg.tolerance_scale,
        ));
        checks.push(Check::exact(
            "theorem7/8: M(3,0) coincides with L_3 formally",
            m_symbolic(3, 0, cfg.weight_cap.max(3))? == l_symbolic(3)?,
        ));
    }
    Ok(checks)
}

fn asymptotics_checks(cfg: &RunConfig) -> Result<Vec<Check>> {
    let d = cfg.digits.max(40);
    let mut checks = Vec::new();
    for n in 8u32..=16 {
        let truth = {
            let i_n = i_n_reduce(n)?.eval_numeric(d)?;
            &i_n / &R::from_bigint(&factorial_big(n as u64), d)
        };
        let approx = i_n_over_factorial_expansion(n, 3, d)?;
        let bound = 10.0 * 70.0 / 4f64.powi(n as i32 + 2);
        checks.push(Check::numeric(
            format!("theorem3: I_{n}/{n}! vs 3-term expansion"),
            &(&truth - &approx.value),
            bound * cfg.tolerance_scale,
        ));
    }
    for m in [10u32, 15, 20] {
        let mut series_sum = R::zero(d);
        for k in 0..=(m - 2) {
            series_sum = &series_sum + &mzv_ones(&MZVIndex::new(m - k, k)?, d)?;
        }
        let approx = weight_sum_expansion(m, 3, d)?;
        let bound = 10.0 * 70.0 / 4f64.powi(m as i32);
        checks.push(Check::numeric(
            format!("corollary4: constant-weight sum at m={m}"),
            &(&series_sum - &approx.value),
            bound * cfg.tolerance_scale,
        ));
    }
    {
        let half = R::from_f64(0.5, d);
        let f1 = genfun_f(&R::one(d), d)?;
        checks.push(Check::exact("corollary5: f(1) = 1/2 exactly", f1 == half));
        for e in [1e-2, 1e-3] {
            let v = genfun_f(&(&R::one(d) - &R::from_f64(e, d)), d)?;
            checks.push(Check::numeric(
                format!("corollary5: f(1-{e}) near 1/2"),
                &(&v - &half),
                10.0 * e * cfg.tolerance_scale,
            ));
        }
    }
    for k in 1u32..=3 {
        use num_bigint::BigInt;
        use num_rational::BigRational;
        let v = residue_numeric_check(k, d.min(35))?;
        let exact = R::from_rational(
            &BigRational::new(
                crate::kernel::bernoulli::binomial_big(2 * k as u64, k as u64),
                BigInt::from(k),
            ),
            d,
        );
        checks.push(Check::numeric(
            format!("theorem3: residue at t=-{k} by limit extrapolation"),
            &(&v - &exact),
            1e-8 * cfg.tolerance_scale,
        ));
    }
    Ok(checks)
}

fn gamma_checks(cfg: &RunConfig) -> Result<Vec<Check>> {
    let d = cfg.digits.min(30);
    let mut checks = Vec::new();
    let harmonic = euler_gamma_harmonic(d)?;
    let prop2 = gamma_prop2(d, 50.0)?;
    let tri = gamma_t_numeric(d)?;
    checks.push(Check::numeric(
        "gamma: proposition-2 integral vs harmonic limit",
        &(&prop2 - &harmonic),
        1e-5 * cfg.tolerance_scale,
    ));
    checks.push(Check::numeric(
        "gamma: triangle integral vs harmonic limit",
        &(&tri - &harmonic),
        1e-5 * cfg.tolerance_scale,
    ));
    checks.push(Check::numeric(
        "gamma: proposition-2 vs triangle integral",
        &(&prop2 - &tri),
        1e-5 * cfg.tolerance_scale,
    ));
    {
        // Ser's product at K=100 needs >= 60 digits by its own guard rail
        let ser_digits = cfg.digits.max(60);
        let ser = ser_product_partial(100, ser_digits)?;
        let e_gamma = euler_gamma_harmonic(ser_digits)?.exp();
        checks.push(Check::numeric(
            "gamma: Ser product partial K=100 vs e^gamma",
            &(&ser - &e_gamma).with_digits(d),
            1e-2 * cfg.tolerance_scale,
        ));
    }
    {
        // bounded-enough sanity check of the triangle integrand by seeded MC
        let res = mc_integrate(
            &PolytopeSpec::T,
            |p| {
                let (x, y) = (p[0], p[1]);
                (1.0 - x) / (x * y * (-(1.0 - y).ln()))
            },
            2_000_000,
            cfg.seed,
        )?;
        let delta = R::from_f64(res.mean, d) - &harmonic;
        let tol = 4.0 * res.std_error + 1e-3;
        checks.push(
            Check::numeric("gamma: Monte Carlo over T within 4 standard errors", &delta, tol)
                .with_note(format!("mc mean {:.9}, std_error {:.3e}", res.mean, res.std_error)),
        );
    }
    Ok(checks)
}
