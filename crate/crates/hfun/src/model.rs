//! Parameter model for H-functions: validation, the pFq bridge, power
//! rescaling, and direct pFq series evaluation.
//!
//! An `HFunctionSpec` holds the full parameter set (m, n; (a_j, A_j) over p
//! upper slots; (b_j, B_j) over q lower slots). The first m lower pairs and
//! first n upper pairs generate the two pole families of the defining
//! contour integral; order within each group is semantically significant.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{HfunError, Result};
use crate::eval::{EvalResult, Method};
use crate::special::{gamma, is_gamma_pole};

/// One (coefficient, scale) pair; scales are required positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamPair {
    pub coeff: Complex64,
    pub scale: f64,
}

impl ParamPair {
    pub fn new(re: f64, im: f64, scale: f64) -> Self {
        ParamPair {
            coeff: Complex64::new(re, im),
            scale,
        }
    }

    pub fn real(re: f64, scale: f64) -> Self {
        Self::new(re, 0.0, scale)
    }

    /// Component-wise equality within `tol`, used by the identity layer.
    pub fn approx_eq(&self, other: &ParamPair, tol: f64) -> bool {
        (self.coeff - other.coeff).norm() < tol && (self.scale - other.scale).abs() < tol
    }
}

/// Full H-function parameter set.
///
/// Serialized as `{"m":..,"n":..,"upper":[[re,im,scale],..],"lower":[[re,im,scale],..]}`,
/// the canonical interchange format consumed by the CLI.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "SpecWire", from = "SpecWire")]
pub struct HFunctionSpec {
    pub m: usize,
    pub n: usize,
    pub upper: Vec<ParamPair>,
    pub lower: Vec<ParamPair>,
}

#[derive(Serialize, Deserialize)]
struct SpecWire {
    m: usize,
    n: usize,
    upper: Vec<(f64, f64, f64)>,
    lower: Vec<(f64, f64, f64)>,
}

impl From<HFunctionSpec> for SpecWire {
    fn from(s: HFunctionSpec) -> Self {
        SpecWire {
            m: s.m,
            n: s.n,
            upper: s.upper.iter().map(|p| (p.coeff.re, p.coeff.im, p.scale)).collect(),
            lower: s.lower.iter().map(|p| (p.coeff.re, p.coeff.im, p.scale)).collect(),
        }
    }
}

impl From<SpecWire> for HFunctionSpec {
    fn from(w: SpecWire) -> Self {
        HFunctionSpec {
            m: w.m,
            n: w.n,
            upper: w.upper.iter().map(|&(re, im, s)| ParamPair::new(re, im, s)).collect(),
            lower: w.lower.iter().map(|&(re, im, s)| ParamPair::new(re, im, s)).collect(),
        }
    }
}

impl HFunctionSpec {
    pub fn new(m: usize, n: usize, upper: Vec<ParamPair>, lower: Vec<ParamPair>) -> Self {
        HFunctionSpec { m, n, upper, lower }
    }

    pub fn p(&self) -> usize {
        self.upper.len()
    }

    pub fn q(&self) -> usize {
        self.lower.len()
    }

    /// delta = sum of lower scales minus sum of upper scales. Controls which
    /// residue series converges and where.
    pub fn delta(&self) -> f64 {
        let sb: f64 = self.lower.iter().map(|p| p.scale).sum();
        let sa: f64 = self.upper.iter().map(|p| p.scale).sum();
        sb - sa
    }

    /// D = prod A_j^{A_j} / prod B_j^{B_j}; 1/D bounds the convergence disk
    /// when delta = 0.
    pub fn big_d(&self) -> f64 {
        let num: f64 = self.upper.iter().map(|p| p.scale.powf(p.scale)).product();
        let den: f64 = self.lower.iter().map(|p| p.scale.powf(p.scale)).product();
        num / den
    }
}

/// Convergence domain of the residue series attached to a spec.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DomainClass {
    /// The applicable series converges for every z != 0.
    AllNonzeroZ,
    /// delta = 0 and only the ascending series applies: 0 < |z| < 1/D.
    DiskInterior,
    /// delta = 0 and only the descending series applies: |z| > 1/D.
    DiskExterior,
    /// No pole family feeds the applicable series.
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceInfo {
    pub delta: f64,
    pub big_d: f64,
    pub domain_class: DomainClass,
}

/// Horizon for the pairwise pole-separation scan; collisions beyond 50
/// candidate pole indices are outside any series horizon used here.
const SEPARATION_HORIZON: usize = 50;
const SEPARATION_TOL: f64 = 1e-10;

/// Validates a spec and classifies its convergence domain.
///
/// Checks scale positivity, index bounds, and that no lower-family pole
/// collides with an upper-family pole (the contour could not separate them).
pub fn validate(spec: &HFunctionSpec) -> Result<ConvergenceInfo> {
    if spec.n > spec.p() {
        return Err(HfunError::InvalidSpec(format!(
            "n = {} exceeds p = {}",
            spec.n,
            spec.p()
        )));
    }
    if spec.m > spec.q() {
        return Err(HfunError::InvalidSpec(format!(
            "m = {} exceeds q = {}",
            spec.m,
            spec.q()
        )));
    }
    for (row, pairs) in [("upper", &spec.upper), ("lower", &spec.lower)] {
        for (j, p) in pairs.iter().enumerate() {
            let scale_ok = p.scale.is_finite() && p.scale > 0.0;
            if !scale_ok {
                return Err(HfunError::InvalidSpec(format!(
                    "{row} pair {} has non-positive scale {}",
                    j + 1,
                    p.scale
                )));
            }
            if !p.coeff.re.is_finite() || !p.coeff.im.is_finite() {
                return Err(HfunError::InvalidSpec(format!(
                    "{row} pair {} has non-finite coefficient",
                    j + 1
                )));
            }
        }
    }
    // Pole separation: A_k (b_j + nu) != B_j (a_k - 1 - mu) for the first m
    // lower and first n upper pairs.
    for j in 0..spec.m {
        let (b, bb) = (spec.lower[j].coeff, spec.lower[j].scale);
        for k in 0..spec.n {
            let (a, aa) = (spec.upper[k].coeff, spec.upper[k].scale);
            for nu in 0..=SEPARATION_HORIZON {
                for mu in 0..=SEPARATION_HORIZON {
                    let lhs = (b + nu as f64) * aa;
                    let rhs = (a - 1.0 - mu as f64) * bb;
                    if (lhs - rhs).norm() <= SEPARATION_TOL {
                        return Err(HfunError::InvalidSpec(format!(
                            "pole separation fails: lower pair {} pole {} meets upper pair {} pole {}",
                            j + 1,
                            nu,
                            k + 1,
                            mu
                        )));
                    }
                }
            }
        }
    }

    let delta = spec.delta();
    let big_d = spec.big_d();
    let domain_class = if delta > 0.0 {
        if spec.m >= 1 {
            DomainClass::AllNonzeroZ
        } else {
            DomainClass::Empty
        }
    } else if delta < 0.0 {
        if spec.n >= 1 {
            DomainClass::AllNonzeroZ
        } else {
            DomainClass::Empty
        }
    } else if spec.m >= 1 {
        DomainClass::DiskInterior
    } else if spec.n >= 1 {
        DomainClass::DiskExterior
    } else {
        DomainClass::Empty
    };
    Ok(ConvergenceInfo {
        delta,
        big_d,
        domain_class,
    })
}

/// Multiplies every scale by k. Contract: H(spec, z) = k * H(rescaled, z^k)
/// on the principal branch; the caller owns the factor k and the argument
/// transform.
pub fn power_rescale(spec: &HFunctionSpec, k: f64) -> Result<HFunctionSpec> {
    let k_ok = k.is_finite() && k > 0.0;
    if !k_ok {
        return Err(HfunError::InvalidSpec(format!(
            "rescale exponent must be positive, got {k}"
        )));
    }
    let mut out = spec.clone();
    for p in out.upper.iter_mut().chain(out.lower.iter_mut()) {
        p.scale *= k;
    }
    Ok(out)
}

/// Generalized hypergeometric parameter set; the argument is supplied at
/// call time.
#[derive(Debug, Clone, PartialEq)]
pub struct PfqSpec {
    pub upper: Vec<Complex64>,
    pub lower: Vec<Complex64>,
}

impl PfqSpec {
    pub fn new(upper: Vec<Complex64>, lower: Vec<Complex64>) -> Self {
        PfqSpec { upper, lower }
    }

    pub fn real(upper: &[f64], lower: &[f64]) -> Self {
        PfqSpec {
            upper: upper.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
            lower: lower.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        }
    }
}

/// Expresses pFq as an H-function: returns (prefactor, spec) with
/// prefactor * H(spec, -z) = pFq(z).
///
/// The spec is H^{1,p}_{p,q+1} with upper pairs (1-a_j, 1) and lower pairs
/// (0,1), (1-b_j, 1).
pub fn pfq_to_h(pfq: &PfqSpec) -> Result<(Complex64, HFunctionSpec)> {
    let mut prefactor = Complex64::new(1.0, 0.0);
    for &b in &pfq.lower {
        let g = gamma(b);
        if g.is_pole {
            return Err(HfunError::pole(b));
        }
        prefactor *= g.value;
    }
    for &a in &pfq.upper {
        let g = gamma(a);
        if g.is_pole {
            return Err(HfunError::pole(a));
        }
        prefactor /= g.value;
    }
    let upper: Vec<ParamPair> = pfq
        .upper
        .iter()
        .map(|&a| ParamPair {
            coeff: Complex64::new(1.0, 0.0) - a,
            scale: 1.0,
        })
        .collect();
    let mut lower = vec![ParamPair::real(0.0, 1.0)];
    lower.extend(pfq.lower.iter().map(|&b| ParamPair {
        coeff: Complex64::new(1.0, 0.0) - b,
        scale: 1.0,
    }));
    let p = pfq.upper.len();
    let spec = HFunctionSpec::new(1, p, upper, lower);
    Ok((prefactor, spec))
}

/// Default term budget for the pFq power series.
pub const PFQ_MAX_TERMS: usize = 1_000_000;

/// Partial sums of the pFq power series until the term ratio falls below
/// `tol`; the error estimate is the magnitude of the first neglected term.
pub fn pfq_eval(pfq: &PfqSpec, z: Complex64, tol: f64) -> Result<EvalResult> {
    pfq_eval_with_limit(pfq, z, tol, PFQ_MAX_TERMS)
}

pub fn pfq_eval_with_limit(
    pfq: &PfqSpec,
    z: Complex64,
    tol: f64,
    max_terms: usize,
) -> Result<EvalResult> {
    for &b in &pfq.lower {
        if is_gamma_pole(b) {
            return Err(HfunError::pole(b));
        }
    }
    let p = pfq.upper.len();
    let q = pfq.lower.len();
    if p > q + 1 && z.norm() > 0.0 {
        return Err(HfunError::Divergent(format!(
            "p = {p} exceeds q + 1 = {} and z != 0",
            q + 1
        )));
    }
    if p == q + 1 && z.norm() >= 1.0 {
        return Err(HfunError::Divergent(
            "p = q + 1 requires |z| < 1".to_string(),
        ));
    }

    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = crate::eval::KahanSum::default();
    sum.add(term);
    let mut peak = 1.0f64;
    let mut small_run = 0usize;
    for k in 0..max_terms {
        let kf = k as f64;
        let mut ratio = z / (kf + 1.0);
        for &a in &pfq.upper {
            ratio *= a + kf;
        }
        for &b in &pfq.lower {
            ratio /= b + kf;
        }
        term *= ratio;
        sum.add(term);
        peak = peak.max(sum.value().norm()).max(term.norm());
        if !sum.value().is_finite() {
            return Err(HfunError::NoConvergence { terms: k + 1 });
        }
        if term.norm() <= tol * sum.value().norm().max(1e-300) {
            small_run += 1;
            if small_run >= 4 {
                return Ok(EvalResult {
                    value: sum.value(),
                    abs_error_estimate: term.norm() + f64::EPSILON * peak,
                    method: Method::SeriesLeft,
                    work: (k + 2) as u64,
                });
            }
        } else {
            small_run = 0;
        }
    }
    Err(HfunError::NoConvergence { terms: max_terms })
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn assert_close(a: Complex64, b: Complex64, tol: f64) {
        let scale = a.norm().max(b.norm()).max(1e-300);
        assert!(
            (a - b).norm() / scale < tol,
            "mismatch: {a} vs {b} (rel {})",
            (a - b).norm() / scale
        );
    }

    fn exp_neg_spec() -> HFunctionSpec {
        HFunctionSpec::new(1, 0, vec![], vec![ParamPair::real(0.0, 1.0)])
    }

    #[test]
    fn validate_exp_neg() {
        let info = validate(&exp_neg_spec()).unwrap();
        assert_eq!(info.delta, 1.0);
        assert_eq!(info.domain_class, DomainClass::AllNonzeroZ);
    }

    #[test]
    fn validate_cosh_chain_spec() {
        let spec = HFunctionSpec::new(
            1,
            1,
            vec![ParamPair::real(0.0, 1.0)],
            vec![ParamPair::real(0.0, 1.0), ParamPair::real(0.0, 2.0)],
        );
        let info = validate(&spec).unwrap();
        assert_eq!(info.delta, 2.0);
    }

    #[test]
    fn validate_rejects_zero_scale() {
        let spec = HFunctionSpec::new(1, 0, vec![], vec![ParamPair::real(0.0, 0.0)]);
        assert!(matches!(validate(&spec), Err(HfunError::InvalidSpec(_))));
    }

    #[test]
    fn validate_rejects_index_overflow() {
        let spec = HFunctionSpec::new(2, 0, vec![], vec![ParamPair::real(0.0, 1.0)]);
        assert!(matches!(validate(&spec), Err(HfunError::InvalidSpec(_))));
    }

    #[test]
    fn validate_rejects_pole_collision() {
        // Lower pole at b + nu = 0 + 0 meets upper pole at a - 1 - mu with a = 1.
        let spec = HFunctionSpec::new(
            1,
            1,
            vec![ParamPair::real(1.0, 1.0)],
            vec![ParamPair::real(0.0, 1.0)],
        );
        assert!(matches!(validate(&spec), Err(HfunError::InvalidSpec(_))));
    }

    #[test]
    fn validate_order_stable_outside_pole_groups() {
        let mut spec = HFunctionSpec::new(
            1,
            0,
            vec![ParamPair::real(0.3, 0.5), ParamPair::real(0.9, 0.25)],
            vec![ParamPair::real(0.0, 1.0), ParamPair::real(0.2, 0.75)],
        );
        let a = validate(&spec).unwrap();
        spec.upper.swap(0, 1);
        let b = validate(&spec).unwrap();
        assert_eq!(a.delta, b.delta);
        assert_eq!(a.big_d, b.big_d);
    }

    #[test]
    fn power_rescale_scales_everything() {
        let spec = exp_neg_spec();
        let r = power_rescale(&spec, 0.5).unwrap();
        assert_eq!(r.lower[0].scale, 0.5);
        assert!(power_rescale(&spec, 0.0).is_err());
        let id = power_rescale(&spec, 1.0).unwrap();
        assert_eq!(id, spec);
    }

    #[test]
    fn power_rescale_halving_reproduces_exp() {
        // H(spec, z) = (1/2) H(half-scaled, z^{1/2}) at z = 1: both sides e^{-1}
        let spec = exp_neg_spec();
        let half = power_rescale(&spec, 0.5).unwrap();
        let lhs = crate::eval::eval(&spec, c(1.0, 0.0), 1e-12).unwrap().value;
        let rhs = crate::eval::eval(&half, c(1.0, 0.0), 1e-12).unwrap().value * 0.5;
        assert_close(lhs, rhs, 1e-11);
        assert_close(lhs, c(0.36787944117144232160, 0.0), 1e-12);
    }

    #[test]
    fn pfq_to_h_shapes() {
        // 0F0 maps to the exp spec with unit prefactor.
        let (pref, spec) = pfq_to_h(&PfqSpec::real(&[], &[])).unwrap();
        assert_close(pref, c(1.0, 0.0), 1e-15);
        assert_eq!(spec, exp_neg_spec());

        // 0F1(-; 1/2; .) has prefactor Gamma(1/2) and shape H^{1,0}_{0,2}.
        let (pref, spec) = pfq_to_h(&PfqSpec::real(&[], &[0.5])).unwrap();
        assert_close(pref, c(1.7724538509055160273, 0.0), 1e-13);
        assert_eq!((spec.m, spec.n, spec.p(), spec.q()), (1, 0, 0, 2));

        assert!(pfq_to_h(&PfqSpec::real(&[-1.0], &[])).is_err());
    }

    #[test]
    fn pfq_eval_examples() {
        // 0F0(1) = e
        let r = pfq_eval(&PfqSpec::real(&[], &[]), c(1.0, 0.0), 1e-12).unwrap();
        assert_close(r.value, c(std::f64::consts::E, 0.0), 1e-12);
        // 2F1(1,1;2;0.5) = 2 ln 2
        let r = pfq_eval(&PfqSpec::real(&[1.0, 1.0], &[2.0]), c(0.5, 0.0), 1e-12).unwrap();
        assert_close(r.value, c(1.3862943611198906188, 0.0), 1e-11);
        // z = 0 is the unit term only
        let r = pfq_eval(&PfqSpec::real(&[3.0], &[1.5]), c(0.0, 0.0), 1e-12).unwrap();
        assert_close(r.value, c(1.0, 0.0), 1e-15);
        // 0F1(;1/2;-1/4) = cos(1)
        let r = pfq_eval(&PfqSpec::real(&[], &[0.5]), c(-0.25, 0.0), 1e-13).unwrap();
        assert_close(r.value, c(0.5403023058681397174, 0.0), 1e-12);
    }

    #[test]
    fn pfq_eval_rejects_divergent() {
        assert!(matches!(
            pfq_eval(&PfqSpec::real(&[1.0, 1.0, 1.0], &[]), c(0.5, 0.0), 1e-10),
            Err(HfunError::Divergent(_))
        ));
        assert!(matches!(
            pfq_eval(&PfqSpec::real(&[1.0, 1.0], &[2.0]), c(1.5, 0.0), 1e-10),
            Err(HfunError::Divergent(_))
        ));
        assert!(matches!(
            pfq_eval(&PfqSpec::real(&[1.0], &[-2.0]), c(0.5, 0.0), 1e-10),
            Err(HfunError::Pole { .. })
        ));
    }

    #[test]
    fn spec_json_round_trip() {
        let spec = HFunctionSpec::new(
            1,
            1,
            vec![ParamPair::new(0.0, 0.25, 1.0)],
            vec![ParamPair::real(0.0, 1.0), ParamPair::real(-1.0, 2.0)],
        );
        let text = serde_json::to_string(&spec).unwrap();
        assert!(text.starts_with("{\"m\":1,\"n\":1,\"upper\":[[0.0,0.25,1.0]]"));
        let back: HFunctionSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(back, spec);
    }
}
