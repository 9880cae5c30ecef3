//! Generalized Mittag-Leffler summation computed three independent ways.
//!
//! The sum is S(x) = sum_n x^{alpha n} beta^n / Gamma(gamma n + delta + 1).
//! Routes: direct partial summation, the 1F_gamma form obtained from the
//! Gauss multiplication expansion of Gamma(gamma n + delta + 1) (integer
//! gamma only), and the compact H-function form
//! H^{1,1}_{1,2}[-beta x^alpha | (0,1); (0,1), (-delta, gamma)].

use num_complex::Complex64;

use crate::error::{HfunError, Result};
use crate::eval::{eval_opts, EvalResult, Method, SeriesOptions};
use crate::model::{pfq_eval_with_limit, HFunctionSpec, ParamPair, PfqSpec};
use crate::special::gamma;

/// Parameters of the generalized Mittag-Leffler sum.
///
/// gamma may be any positive real for the direct and H-function routes; the
/// pFq route additionally requires it to be a positive integer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MlSumSpec {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
    pub x: f64,
}

impl MlSumSpec {
    pub fn new(alpha: f64, beta: f64, gamma: f64, delta: f64, x: f64) -> Self {
        MlSumSpec {
            alpha,
            beta,
            gamma,
            delta,
            x,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let alpha_ok = self.alpha.is_finite() && self.alpha >= 0.0;
        if !alpha_ok {
            return Err(HfunError::InvalidSpec(format!(
                "alpha must be >= 0, got {}",
                self.alpha
            )));
        }
        let gamma_ok = self.gamma.is_finite() && self.gamma > 0.0;
        if !gamma_ok {
            return Err(HfunError::InvalidSpec(format!(
                "gamma must be positive, got {}",
                self.gamma
            )));
        }
        let delta_ok = self.delta.is_finite() && self.delta >= 0.0;
        if !delta_ok {
            return Err(HfunError::InvalidSpec(format!(
                "delta must be >= 0, got {}",
                self.delta
            )));
        }
        let x_ok = self.x.is_finite() && self.x > 0.0;
        if !x_ok {
            return Err(HfunError::InvalidSpec(format!(
                "x must be positive, got {}",
                self.x
            )));
        }
        if !self.beta.is_finite() {
            return Err(HfunError::InvalidSpec("beta must be finite".to_string()));
        }
        Ok(())
    }

    /// The compact H-function form: spec applied at argument
    /// -beta x^alpha.
    pub fn h_form(&self) -> (HFunctionSpec, Complex64) {
        let spec = HFunctionSpec::new(
            1,
            1,
            vec![ParamPair::real(0.0, 1.0)],
            vec![
                ParamPair::real(0.0, 1.0),
                ParamPair::real(-self.delta, self.gamma),
            ],
        );
        let arg = Complex64::new(-self.beta * self.x.powf(self.alpha), 0.0);
        (spec, arg)
    }
}

/// All three routes plus the largest pairwise relative discrepancy.
#[derive(Debug, Clone)]
pub struct TripleResult {
    pub direct: Option<EvalResult>,
    pub via_pfq: Option<EvalResult>,
    pub via_h: Option<EvalResult>,
    pub max_pairwise_discrepancy: f64,
}

const ML_MAX_TERMS: usize = 100_000;

/// Direct partial summation until the tail falls below tol.
pub fn ml_direct(spec: &MlSumSpec, tol: f64) -> Result<EvalResult> {
    spec.validate()?;
    let xa = spec.x.powf(spec.alpha);
    let mut sum = crate::eval::KahanSum::default();
    let mut peak = 0.0f64;
    let mut power = 1.0f64; // (beta x^alpha)^n
    let mut small_run = 0usize;
    let mut last_mag = 0.0f64;
    for n in 0..ML_MAX_TERMS {
        let g = gamma(Complex64::new(spec.gamma * n as f64 + spec.delta + 1.0, 0.0));
        debug_assert!(!g.is_pole, "gamma(gamma n + delta + 1) is pole-free for delta >= 0");
        let term = power / g.value.re;
        sum.add(Complex64::new(term, 0.0));
        let total = sum.value().re;
        peak = peak.max(total.abs()).max(term.abs());
        if !total.is_finite() {
            return Err(HfunError::NoConvergence { terms: n + 1 });
        }
        if term.abs() <= tol * total.abs().max(1e-300) {
            small_run += 1;
            last_mag = last_mag.max(term.abs());
            if small_run >= 4 {
                return Ok(EvalResult {
                    value: sum.value(),
                    abs_error_estimate: last_mag + f64::EPSILON * peak,
                    method: Method::SeriesLeft,
                    work: (n + 1) as u64,
                });
            }
        } else {
            small_run = 0;
            last_mag = 0.0;
        }
        power *= spec.beta * xa;
    }
    Err(HfunError::NoConvergence {
        terms: ML_MAX_TERMS,
    })
}

/// The 1F_gamma route: (1/Gamma(delta+1)) 1F_gamma[1; (delta+1)/gamma, ...,
/// (delta+gamma)/gamma; beta x^alpha / gamma^gamma]. Requires integer gamma.
pub fn ml_via_pfq(spec: &MlSumSpec, tol: f64) -> Result<EvalResult> {
    spec.validate()?;
    let g_int = spec.gamma.round();
    if (spec.gamma - g_int).abs() > 1e-12 || g_int < 1.0 {
        return Err(HfunError::InvalidSpec(format!(
            "the pFq route requires a positive integer gamma, got {}",
            spec.gamma
        )));
    }
    let k = g_int as usize;
    let lower: Vec<Complex64> = (0..k)
        .map(|j| Complex64::new((spec.delta + 1.0 + j as f64) / spec.gamma, 0.0))
        .collect();
    let pfq = PfqSpec::new(vec![Complex64::new(1.0, 0.0)], lower);
    let arg = Complex64::new(
        spec.beta * spec.x.powf(spec.alpha) / spec.gamma.powf(spec.gamma),
        0.0,
    );
    let g0 = gamma(Complex64::new(spec.delta + 1.0, 0.0));
    if g0.is_pole {
        return Err(HfunError::pole(Complex64::new(spec.delta + 1.0, 0.0)));
    }
    let mut r = pfq_eval_with_limit(&pfq, arg, tol, ML_MAX_TERMS)?;
    r.value /= g0.value;
    r.abs_error_estimate /= g0.value.norm();
    Ok(r)
}

/// The H-function route through the dispatcher.
pub fn ml_via_h(spec: &MlSumSpec, tol: f64) -> Result<EvalResult> {
    spec.validate()?;
    let (h, arg) = spec.h_form();
    if arg.norm() == 0.0 {
        // beta = 0 collapses the sum to its n = 0 term
        let g0 = gamma(Complex64::new(spec.delta + 1.0, 0.0));
        return Ok(EvalResult {
            value: Complex64::new(1.0, 0.0) / g0.value,
            abs_error_estimate: f64::EPSILON,
            method: Method::SeriesLeft,
            work: 1,
        });
    }
    eval_opts(&h, arg, &SeriesOptions::with_tol(tol))
}

/// Runs all three routes; succeeds when at least two do, and reports the
/// largest pairwise relative discrepancy among the successes.
pub fn ml_triple(spec: &MlSumSpec, tol: f64) -> Result<TripleResult> {
    spec.validate()?;
    let direct = ml_direct(spec, tol).ok();
    let via_pfq = ml_via_pfq(spec, tol).ok();
    let via_h = ml_via_h(spec, tol).ok();
    let successes: Vec<Complex64> = [&direct, &via_pfq, &via_h]
        .iter()
        .filter_map(|r| r.as_ref().map(|e| e.value))
        .collect();
    if successes.len() < 2 {
        let mut errs = Vec::new();
        if let Err(e) = ml_direct(spec, tol) {
            errs.push(e);
        }
        if let Err(e) = ml_via_pfq(spec, tol) {
            errs.push(e);
        }
        if let Err(e) = ml_via_h(spec, tol) {
            errs.push(e);
        }
        return Err(HfunError::Unevaluable(errs));
    }
    let mut max_disc = 0.0f64;
    for i in 0..successes.len() {
        for j in i + 1..successes.len() {
            let scale = successes[i]
                .norm()
                .max(successes[j].norm())
                .max(1e-300);
            max_disc = max_disc.max((successes[i] - successes[j]).norm() / scale);
        }
    }
    Ok(TripleResult {
        direct,
        via_pfq,
        via_h,
        max_pairwise_discrepancy: max_disc,
    })
}
