//! Invariant suites producing machine-readable reports.
//!
//! Each suite runs a deterministic sweep (seeded RNG, fixed grids) and emits
//! one report per identity. A report passes iff its largest relative
//! discrepancy stays below the threshold; thresholds default per suite and
//! can be overridden globally.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalog::Fixture;
use crate::error::Result;
use crate::eval::{
    auto_quadrature_config, eval, eval_mellin_barnes, eval_series_left, eval_series_right,
};
use crate::identities::{reduce_akr, reduce_new, registry, split_akr, split_new, SplitResult};
use crate::mlsum::{ml_triple, MlSumSpec};
use crate::model::{validate, HFunctionSpec, ParamPair};
use crate::special::{gamma, gamma_multiplication_factor, pochhammer, sin_pi};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Gamma,
    Splits,
    MlSum,
    Catalog,
}

impl Suite {
    pub fn parse(name: &str) -> Option<Vec<Suite>> {
        match name {
            "gamma" => Some(vec![Suite::Gamma]),
            "splits" => Some(vec![Suite::Splits]),
            "mlsum" => Some(vec![Suite::MlSum]),
            "catalog" => Some(vec![Suite::Catalog]),
            "all" => Some(vec![Suite::Gamma, Suite::Splits, Suite::MlSum, Suite::Catalog]),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GridPoint {
    pub argument: (f64, f64),
    pub lhs: (f64, f64),
    pub rhs: (f64, f64),
    pub rel_discrepancy: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub identity_name: String,
    pub grid: Vec<GridPoint>,
    pub max_rel_discrepancy: f64,
    pub pass: bool,
    pub threshold: f64,
}

fn rel_disc(a: Complex64, b: Complex64) -> f64 {
    let scale = a.norm().max(b.norm()).max(1e-300);
    (a - b).norm() / scale
}

fn point(z: Complex64, lhs: Complex64, rhs: Complex64) -> GridPoint {
    GridPoint {
        argument: (z.re, z.im),
        lhs: (lhs.re, lhs.im),
        rhs: (rhs.re, rhs.im),
        rel_discrepancy: rel_disc(lhs, rhs),
    }
}

/// A grid entry for an evaluation that failed outright: an infinite
/// discrepancy that can never pass.
fn failed_point(z: Complex64) -> GridPoint {
    GridPoint {
        argument: (z.re, z.im),
        lhs: (f64::NAN, f64::NAN),
        rhs: (f64::NAN, f64::NAN),
        rel_discrepancy: f64::MAX,
    }
}

fn report(name: &str, threshold: f64, grid: Vec<GridPoint>) -> IdentityReport {
    let max = grid
        .iter()
        .map(|g| g.rel_discrepancy)
        .fold(0.0f64, f64::max);
    IdentityReport {
        identity_name: name.to_string(),
        max_rel_discrepancy: max,
        pass: !grid.is_empty() && max < threshold,
        threshold,
        grid,
    }
}

/// Runs one suite against a fixture catalog. `threshold_override` replaces
/// every per-report default when set.
pub fn run_suite(
    suite: Suite,
    threshold_override: Option<f64>,
    fixtures: &[Fixture],
) -> Vec<IdentityReport> {
    let th = |default: f64| threshold_override.unwrap_or(default);
    let mut reports = match suite {
        Suite::Gamma => gamma_suite(&th),
        Suite::Splits => splits_suite(&th),
        Suite::MlSum => mlsum_suite(&th),
        Suite::Catalog => catalog_suite(&th, fixtures),
    };
    reports.sort_by(|a, b| a.identity_name.cmp(&b.identity_name));
    reports
}

fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

// ---------------------------------------------------------------------------
// gamma suite

fn gamma_suite(th: &dyn Fn(f64) -> f64) -> Vec<IdentityReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x47414d4d41);
    let one = c64(1.0, 0.0);

    // Reflection: Gamma(z) Gamma(1-z) sin(pi z) / pi = 1, away from integers.
    let mut grid = Vec::with_capacity(1000);
    while grid.len() < 1000 {
        let z = c64(rng.gen_range(-20.0..20.0), rng.gen_range(-20.0..20.0));
        let dist = (z - c64(z.re.round(), 0.0)).norm();
        if dist < 0.1 {
            continue;
        }
        let lhs = gamma(z).value * gamma(one - z).value * sin_pi(z) / std::f64::consts::PI;
        grid.push(point(z, lhs, one));
    }
    let reflection = report("gamma/reflection", th(1e-11), grid);

    // Multiplication: prod_j Gamma(z + j/k) equals the closed factor.
    let mut grid = Vec::new();
    for k in 2u32..=4 {
        for _ in 0..200 {
            let z = c64(rng.gen_range(0.2..4.0), rng.gen_range(-4.0..4.0));
            let mut lhs = one;
            for j in 0..k {
                lhs *= gamma(z + j as f64 / k as f64).value;
            }
            let rhs = gamma_multiplication_factor(z, k).unwrap();
            grid.push(point(z, lhs, rhs));
        }
    }
    let multiplication = report("gamma/multiplication", th(1e-11), grid);

    // Duplication chain: Gamma(w) Gamma(1-w) =
    // Gamma(2w) Gamma(1-2w) (e^{i pi w} + e^{-i pi w}) with w = alpha + lambda s.
    let mut grid = Vec::new();
    while grid.len() < 300 {
        let alpha = c64(rng.gen_range(-1.0..1.0), rng.gen_range(-0.5..0.5));
        let lambda = rng.gen_range(0.1..1.5);
        let s = c64(rng.gen_range(-2.0..2.0), rng.gen_range(-3.0..3.0));
        let w = alpha + lambda * s;
        // stay away from the poles of both sides
        let half_dist = (2.0 * w - c64((2.0 * w.re).round(), 0.0)).norm();
        if half_dist < 0.1 || w.im.abs() > 6.0 {
            continue;
        }
        let lhs = gamma(w).value * gamma(one - w).value;
        let i_pi_w = c64(0.0, std::f64::consts::PI) * w;
        let rhs = gamma(2.0 * w).value
            * gamma(one - 2.0 * w).value
            * (i_pi_w.exp() + (-i_pi_w).exp());
        grid.push(point(w, lhs, rhs));
    }
    let duplication = report("gamma/duplication-chain", th(1e-10), grid);

    // Pochhammer recurrence, exact as computed.
    let mut grid = Vec::new();
    for _ in 0..200 {
        let a = c64(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let n = rng.gen_range(0u64..40);
        let lhs = pochhammer(a, n + 1);
        let rhs = pochhammer(a, n) * (a + n as f64);
        grid.push(point(a, lhs, rhs));
    }
    let poch = report("gamma/pochhammer-recurrence", th(1e-15), grid);

    vec![reflection, multiplication, duplication, poch]
}

// ---------------------------------------------------------------------------
// splits suite

fn cosh_chain_spec() -> HFunctionSpec {
    HFunctionSpec::new(
        1,
        1,
        vec![ParamPair::real(0.0, 1.0)],
        vec![ParamPair::real(0.0, 1.0), ParamPair::real(0.0, 2.0)],
    )
}

fn sinh_chain_spec() -> HFunctionSpec {
    HFunctionSpec::new(
        1,
        1,
        vec![ParamPair::real(0.0, 1.0)],
        vec![ParamPair::real(0.0, 1.0), ParamPair::real(-1.0, 2.0)],
    )
}

fn exp_neg_spec() -> HFunctionSpec {
    HFunctionSpec::new(1, 0, vec![], vec![ParamPair::real(0.0, 1.0)])
}

fn expm1_spec() -> HFunctionSpec {
    HFunctionSpec::new(
        1,
        1,
        vec![ParamPair::real(0.0, 1.0)],
        vec![ParamPair::real(0.0, 1.0), ParamPair::real(-1.0, 1.0)],
    )
}

fn expm1_minus_z_spec() -> HFunctionSpec {
    HFunctionSpec::new(
        1,
        2,
        vec![ParamPair::real(0.0, 1.0), ParamPair::real(-1.0, 1.0)],
        vec![
            ParamPair::real(0.0, 1.0),
            ParamPair::real(-1.0, 1.0),
            ParamPair::real(-2.0, 1.0),
        ],
    )
}

/// Left-family simplicity scan used by the random generator.
fn left_families_simple(spec: &HFunctionSpec) -> bool {
    let fams: Vec<(Complex64, f64)> = spec.lower[..spec.m]
        .iter()
        .map(|p| (p.coeff, p.scale))
        .collect();
    for h in 0..fams.len() {
        for j in h + 1..fams.len() {
            for nu in 0..=64u32 {
                for mu in 0..=64u32 {
                    let lhs = (fams[h].0 + nu as f64) * fams[j].1;
                    let rhs = (fams[j].0 + mu as f64) * fams[h].1;
                    if (lhs - rhs).norm() <= 5e-2 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn spec_ok(spec: &HFunctionSpec) -> bool {
    validate(spec).is_ok() && left_families_simple(spec)
}

/// Random spec with delta >= 0.5, one or two lower pole families, and
/// healthy pole margins.
fn random_base_spec(rng: &mut ChaCha8Rng) -> HFunctionSpec {
    loop {
        let m = rng.gen_range(1..=2usize);
        let mut lower: Vec<ParamPair> = (0..m)
            .map(|_| ParamPair::real(rng.gen_range(-0.4..1.0), rng.gen_range(0.5..1.4)))
            .collect();
        let n = rng.gen_range(0..=1usize);
        let mut upper: Vec<ParamPair> = (0..n)
            .map(|_| ParamPair::real(rng.gen_range(0.9..1.7), rng.gen_range(0.3..0.8)))
            .collect();
        if rng.gen_bool(0.5) {
            lower.push(ParamPair::real(
                rng.gen_range(-0.3..0.8),
                rng.gen_range(0.3..1.0),
            ));
        }
        if rng.gen_bool(0.3) {
            upper.push(ParamPair::real(
                rng.gen_range(-0.2..0.9),
                rng.gen_range(0.3..0.8),
            ));
        }
        let spec = HFunctionSpec::new(m, n, upper, lower);
        if spec.delta() >= 0.5 && spec_ok(&spec) {
            return spec;
        }
    }
}

fn prepend_pair(spec: &HFunctionSpec, pair: ParamPair) -> HFunctionSpec {
    let mut out = spec.clone();
    out.upper.insert(0, pair);
    out.lower.insert(0, pair);
    out.m += 1;
    out.n += 1;
    out
}

fn append_pair(spec: &HFunctionSpec, pair: ParamPair) -> HFunctionSpec {
    let mut out = spec.clone();
    out.upper.push(pair);
    out.lower.push(pair);
    out
}

/// Evaluates a split contract over a grid of real positive arguments.
fn contract_grid(split: &SplitResult, args: &[f64], tol: f64, grid: &mut Vec<GridPoint>) {
    for &x in args {
        let z = c64(x, 0.0);
        let lhs = eval(&split.source, z, tol);
        let rhs: Result<Complex64> = split.terms.iter().try_fold(c64(0.0, 0.0), |acc, t| {
            Ok(acc + t.weight * eval(&t.spec, t.argument_factor * z, tol)?.value)
        });
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => grid.push(point(z, l.value, r)),
            _ => grid.push(failed_point(z)),
        }
    }
}

const CONTRACT_ARGS: [f64; 10] = [0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0, 2.25, 2.5];
const CONTRACT_TOL: f64 = 1e-11;

fn splits_suite(th: &dyn Fn(f64) -> f64) -> Vec<IdentityReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x53504c4954);

    // doubling split: the fixed application-chain specs plus randomized ones
    let mut grid = Vec::new();
    let mut fixed = vec![cosh_chain_spec(), sinh_chain_spec()];
    for delta in [0.0, -1.0, -2.0] {
        fixed.push(HFunctionSpec::new(
            1,
            1,
            vec![ParamPair::real(0.0, 1.0)],
            vec![ParamPair::real(0.0, 1.0), ParamPair::real(delta, 3.0)],
        ));
    }
    for spec in fixed {
        let s = split_new(&spec, c64(0.0, 0.0), 1.0).unwrap();
        contract_grid(&s, &CONTRACT_ARGS, CONTRACT_TOL, &mut grid);
    }
    let mut done = 0;
    while done < 10 {
        let alpha = c64(rng.gen_range(-0.35..0.45), 0.0);
        let lambda: f64 = rng.gen_range(0.35..1.0);
        let base = random_base_spec(&mut rng);
        let pair = ParamPair {
            coeff: alpha,
            scale: lambda,
        };
        let src = prepend_pair(&base, pair);
        if !spec_ok(&src) {
            continue;
        }
        let split = match split_new(&src, alpha, lambda) {
            Ok(s) => s,
            Err(_) => continue,
        };
        if !spec_ok(&split.terms[0].spec) {
            continue;
        }
        contract_grid(&split, &CONTRACT_ARGS, CONTRACT_TOL, &mut grid);
        done += 1;
    }
    let doubling = report("splits/doubling", th(1e-7), grid);

    // append split: the classic reduction structures plus randoms
    let mut grid = Vec::new();
    for (base, alpha, lambda) in [
        (exp_neg_spec(), c64(0.5, 0.0), 1.0 / 6.0),
        (expm1_spec(), c64(2.0 / 3.0, 0.0), 1.0 / 6.0),
        (expm1_minus_z_spec(), c64(5.0 / 6.0, 0.0), 1.0 / 6.0),
    ] {
        let s = split_akr(&base, alpha, lambda).unwrap();
        contract_grid(&s, &CONTRACT_ARGS, CONTRACT_TOL, &mut grid);
    }
    let mut done = 0;
    while done < 10 {
        let alpha = c64(rng.gen_range(-0.4..0.6), rng.gen_range(-0.2..0.2));
        let lambda: f64 = rng.gen_range(0.3..1.0);
        let base = random_base_spec(&mut rng);
        let split = match split_akr(&base, alpha, lambda) {
            Ok(s) => s,
            Err(_) => continue,
        };
        if !spec_ok(&split.source) {
            continue;
        }
        contract_grid(&split, &CONTRACT_ARGS, CONTRACT_TOL, &mut grid);
        done += 1;
    }
    let append = report("splits/append", th(1e-7), grid);

    // append reduction: prepended pairs cancel back out
    let mut grid = Vec::new();
    for (base, alpha, lambda) in [
        (cosh_chain_spec(), c64(1.0 / 3.0, 0.0), 0.5),
        (expm1_spec(), c64(0.3, 0.0), 0.7),
    ] {
        let t = prepend_pair(
            &base,
            ParamPair {
                coeff: alpha,
                scale: lambda,
            },
        );
        if let Ok(s) = reduce_akr(&t) {
            contract_grid(&s, &CONTRACT_ARGS, CONTRACT_TOL, &mut grid);
        }
    }
    let mut done = 0;
    while done < 10 {
        let alpha = c64(rng.gen_range(-0.35..0.5), 0.0);
        let lambda: f64 = rng.gen_range(0.3..0.9);
        let base = random_base_spec(&mut rng);
        let t = prepend_pair(
            &base,
            ParamPair {
                coeff: alpha,
                scale: lambda,
            },
        );
        if !spec_ok(&t) {
            continue;
        }
        let s = match reduce_akr(&t) {
            Ok(s) => s,
            Err(_) => continue,
        };
        contract_grid(&s, &CONTRACT_ARGS, CONTRACT_TOL, &mut grid);
        done += 1;
    }
    let reduce_append = report("splits/reduce-append", th(1e-7), grid);

    // doubling reduction: leading doubled pair plus trailing pair cancel
    let mut grid = Vec::new();
    for (base, alpha, lambda) in [
        (cosh_chain_spec(), c64(0.25, 0.0), 0.5),
        (expm1_spec(), c64(0.1, 0.0), 1.0),
    ] {
        let pair = ParamPair {
            coeff: alpha,
            scale: lambda,
        };
        let doubled = ParamPair {
            coeff: alpha * 2.0,
            scale: lambda * 2.0,
        };
        let spec = append_pair(&prepend_pair(&base, doubled), pair);
        if let Ok(s) = reduce_new(&spec) {
            contract_grid(&s, &CONTRACT_ARGS, CONTRACT_TOL, &mut grid);
        }
    }
    let mut done = 0;
    while done < 10 {
        let alpha = c64(rng.gen_range(-0.3..0.4), 0.0);
        let lambda: f64 = rng.gen_range(0.3..0.9);
        let base = random_base_spec(&mut rng);
        let pair = ParamPair {
            coeff: alpha,
            scale: lambda,
        };
        let doubled = ParamPair {
            coeff: alpha * 2.0,
            scale: lambda * 2.0,
        };
        let spec = append_pair(&prepend_pair(&base, doubled), pair);
        if !spec_ok(&spec) {
            continue;
        }
        let s = match reduce_new(&spec) {
            Ok(s) => s,
            Err(_) => continue,
        };
        contract_grid(&s, &CONTRACT_ARGS, CONTRACT_TOL, &mut grid);
        done += 1;
    }
    let reduce_doubling = report("splits/reduce-doubling", th(1e-7), grid);

    vec![doubling, append, reduce_append, reduce_doubling]
}

// ---------------------------------------------------------------------------
// mlsum suite

fn mlsum_suite(th: &dyn Fn(f64) -> f64) -> Vec<IdentityReport> {
    // Triple agreement over the full parameter grid.
    let mut grid = Vec::new();
    for gamma_p in [1.0, 2.0, 3.0, 4.0] {
        for delta in [0.0, 1.0, 2.0, 3.0] {
            for beta in [-1.0, 1.0] {
                for alpha in [1.0, 2.0, 3.0] {
                    for x in [0.25, 1.0, 2.0] {
                        let spec = MlSumSpec::new(alpha, beta, gamma_p, delta, x);
                        match ml_triple(&spec, 1e-11) {
                            Ok(t) => {
                                let lhs = t.direct.map(|r| r.value).unwrap_or_default();
                                let rhs = t.via_h.map(|r| r.value).unwrap_or_default();
                                grid.push(GridPoint {
                                    argument: (x, 0.0),
                                    lhs: (lhs.re, lhs.im),
                                    rhs: (rhs.re, rhs.im),
                                    rel_discrepancy: t.max_pairwise_discrepancy,
                                });
                            }
                            Err(_) => grid.push(failed_point(c64(x, 0.0))),
                        }
                    }
                }
            }
        }
    }
    let triple = report("mlsum/triple-agreement", th(1e-8), grid);

    // Degenerate anchor: gamma = delta = 0-shift, the plain exponential.
    let mut grid = Vec::new();
    for k in 0..=25 {
        let x = 1e-6 + 5.0 * k as f64 / 25.0;
        let spec = MlSumSpec::new(1.0, 1.0, 1.0, 0.0, x);
        match crate::mlsum::ml_direct(&spec, 1e-14) {
            Ok(r) => grid.push(point(c64(x, 0.0), r.value, c64(x.exp(), 0.0))),
            Err(_) => grid.push(failed_point(c64(x, 0.0))),
        }
    }
    let anchor = report("mlsum/exp-anchor", th(1e-12), grid);

    // Alternating-sign sums collapse to trigonometric closed forms.
    let mut grid = Vec::new();
    for k in 1..=20 {
        let x = 2.5 * k as f64 / 20.0;
        let ex = x.exp();
        let spec = MlSumSpec::new(2.0, -1.0, 2.0, 0.0, x);
        match crate::mlsum::ml_direct(&spec, 1e-12) {
            Ok(r) => grid.push(point(
                c64(x, 0.0),
                r.value * ex,
                c64(ex * x.cos(), 0.0),
            )),
            Err(_) => grid.push(failed_point(c64(x, 0.0))),
        }
        let spec = MlSumSpec::new(2.0, -1.0, 2.0, 1.0, x);
        match crate::mlsum::ml_direct(&spec, 1e-12) {
            Ok(r) => grid.push(point(
                c64(x, 0.0),
                r.value * ex,
                c64(ex * x.sin() / x, 0.0),
            )),
            Err(_) => grid.push(failed_point(c64(x, 0.0))),
        }
    }
    let trig = report("mlsum/trig-transform", th(1e-7), grid);

    vec![triple, anchor, trig]
}

// ---------------------------------------------------------------------------
// catalog suite

fn catalog_suite(th: &dyn Fn(f64) -> f64, fixtures: &[Fixture]) -> Vec<IdentityReport> {
    let mut reports = Vec::new();

    // Each fixture: 30-point sweep, all links pairwise.
    for f in fixtures {
        let mut grid = Vec::new();
        for i in 0..30 {
            let x = 2.5 * (i + 1) as f64 / 30.0;
            match f.link_values(x, 1e-11) {
                Ok((vals, disc)) => {
                    let lhs = vals[0];
                    let rhs = *vals.last().unwrap();
                    grid.push(GridPoint {
                        argument: (x, 0.0),
                        lhs: (lhs.re, lhs.im),
                        rhs: (rhs.re, rhs.im),
                        rel_discrepancy: disc,
                    });
                }
                Err(_) => grid.push(failed_point(c64(x, 0.0))),
            }
        }
        reports.push(report(&format!("catalog/{}", f.name), th(1e-7), grid));
    }

    // Closed-form registry soundness.
    let mut grid = Vec::new();
    for cf in registry() {
        for k in 0..50 {
            let r = 0.06 + 2.9 * (k as f64) / 49.0;
            let theta = std::f64::consts::PI * ((k % 7) as f64 / 3.5 - 1.0) * 0.999;
            let w = Complex64::from_polar(r, theta);
            match eval(&cf.pattern, w, 1e-11) {
                Ok(h) => grid.push(point(w, h.value, cf.eval_formula(w))),
                Err(_) => grid.push(failed_point(w)),
            }
        }
    }
    reports.push(report("catalog/registry", th(1e-8), grid));

    // Series vs quadrature on every catalog spec whose integrand decays.
    let mut grid = Vec::new();
    let mut specs: Vec<HFunctionSpec> = Vec::new();
    for f in fixtures {
        collect_specs(&f.exprs, &mut specs);
    }
    for cf in registry() {
        if !specs.contains(&cf.pattern) {
            specs.push(cf.pattern.clone());
        }
    }
    // a descending-series representative: H(z) = exp(-1/z)
    specs.push(HFunctionSpec::new(
        0,
        1,
        vec![ParamPair::real(1.0, 1.0)],
        vec![],
    ));
    for spec in &specs {
        let delta = spec.delta();
        for k in 0..20 {
            let x = 0.3 + 2.1 * k as f64 / 19.0;
            let z = c64(x, 0.0);
            let cfg = match auto_quadrature_config(spec, z) {
                Ok(cfg) => cfg,
                Err(_) => continue, // no decaying contour for this spec
            };
            let series = if delta >= 0.0 {
                eval_series_left(spec, z, 1e-11)
            } else {
                eval_series_right(spec, z, 1e-11)
            };
            let quad = eval_mellin_barnes(spec, z, &cfg, 1e-11);
            match (series, quad) {
                (Ok(s), Ok(q)) => grid.push(point(z, s.value, q.value)),
                _ => grid.push(failed_point(z)),
            }
        }
    }
    reports.push(report("catalog/cross-evaluator", th(1e-7), grid));

    reports
}

fn collect_specs(exprs: &[crate::catalog::Expr], out: &mut Vec<HFunctionSpec>) {
    use crate::catalog::Expr;
    for e in exprs {
        match e {
            Expr::Hfun { spec, arg } => {
                if !out.contains(spec) {
                    out.push(spec.clone());
                }
                collect_specs(std::slice::from_ref(arg), out);
            }
            Expr::Add { terms } => collect_specs(terms, out),
            Expr::Mul { factors } => collect_specs(factors, out),
            Expr::Pow { base, exp } => {
                collect_specs(std::slice::from_ref(base), out);
                collect_specs(std::slice::from_ref(exp), out);
            }
            Expr::Exp { arg }
            | Expr::Cos { arg }
            | Expr::Sin { arg }
            | Expr::Cosh { arg }
            | Expr::Sinh { arg }
            | Expr::Pfq { arg, .. } => collect_specs(std::slice::from_ref(arg), out),
            _ => {}
        }
    }
}
