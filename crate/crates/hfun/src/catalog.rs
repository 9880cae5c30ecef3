//! Application fixture catalog: chains of expressions (series, pFq,
//! H-function, and elementary forms) that must agree pointwise on the sweep
//! domain x in (0, 2.5].
//!
//! Fixtures ship as a versioned JSON file embedded in the crate. Constants
//! like sqrt(3)/2 or 2 pi / 3 are stored symbolically (rational x pi-power x
//! square root) and realized only at evaluation time, so no rounded decimal
//! multipliers are baked into the data.

use num_complex::Complex64;
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::eval::eval;
use crate::mlsum::{ml_direct, MlSumSpec};
use crate::model::{pfq_eval, HFunctionSpec, PfqSpec};

fn one_i64() -> i64 {
    1
}
fn one_u64() -> u64 {
    1
}
fn one_f64() -> f64 {
    1.0
}

/// Expression tree over the sweep variable x. Every node evaluates to a
/// complex number; equality of the sibling expressions in a fixture is the
/// tested contract.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Expr {
    /// The sweep variable.
    X,
    /// (num/den) * pi^pi_pow * sqrt(root) * factor; factor exists so tests
    /// can perturb a constant without touching the symbolic part.
    Const {
        #[serde(default = "one_i64")]
        num: i64,
        #[serde(default = "one_i64")]
        den: i64,
        #[serde(default, rename = "pi")]
        pi_pow: i32,
        #[serde(default = "one_u64")]
        root: u64,
        #[serde(default = "one_f64")]
        factor: f64,
    },
    Add {
        terms: Vec<Expr>,
    },
    Mul {
        factors: Vec<Expr>,
    },
    Pow {
        base: Box<Expr>,
        exp: Box<Expr>,
    },
    Exp {
        arg: Box<Expr>,
    },
    Cos {
        arg: Box<Expr>,
    },
    Sin {
        arg: Box<Expr>,
    },
    Cosh {
        arg: Box<Expr>,
    },
    Sinh {
        arg: Box<Expr>,
    },
    /// H-function evaluated at arg(x) through the dispatcher.
    Hfun {
        spec: HFunctionSpec,
        arg: Box<Expr>,
    },
    /// Generalized Mittag-Leffler sum at the sweep variable.
    MlSum {
        alpha: f64,
        beta: f64,
        gamma: f64,
        delta: f64,
    },
    /// pFq series at arg(x).
    Pfq {
        upper: Vec<(f64, f64)>,
        lower: Vec<(f64, f64)>,
        arg: Box<Expr>,
    },
}

/// Evaluates an expression at x. H-function and series nodes run at `tol`.
pub fn eval_expr(expr: &Expr, x: f64, tol: f64) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    Ok(match expr {
        Expr::X => Complex64::new(x, 0.0),
        Expr::Const {
            num,
            den,
            pi_pow,
            root,
            factor,
        } => {
            let v = (*num as f64 / *den as f64)
                * std::f64::consts::PI.powi(*pi_pow)
                * (*root as f64).sqrt()
                * factor;
            Complex64::new(v, 0.0)
        }
        Expr::Add { terms } => {
            let mut acc = Complex64::new(0.0, 0.0);
            for t in terms {
                acc += eval_expr(t, x, tol)?;
            }
            acc
        }
        Expr::Mul { factors } => {
            let mut acc = one;
            for f in factors {
                acc *= eval_expr(f, x, tol)?;
            }
            acc
        }
        Expr::Pow { base, exp } => {
            let b = eval_expr(base, x, tol)?;
            let e = eval_expr(exp, x, tol)?;
            b.powc(e)
        }
        Expr::Exp { arg } => eval_expr(arg, x, tol)?.exp(),
        Expr::Cos { arg } => eval_expr(arg, x, tol)?.cos(),
        Expr::Sin { arg } => eval_expr(arg, x, tol)?.sin(),
        Expr::Cosh { arg } => eval_expr(arg, x, tol)?.cosh(),
        Expr::Sinh { arg } => eval_expr(arg, x, tol)?.sinh(),
        Expr::Hfun { spec, arg } => {
            let w = eval_expr(arg, x, tol)?;
            eval(spec, w, tol)?.value
        }
        Expr::MlSum {
            alpha,
            beta,
            gamma,
            delta,
        } => ml_direct(&MlSumSpec::new(*alpha, *beta, *gamma, *delta, x), tol)?.value,
        Expr::Pfq { upper, lower, arg } => {
            let w = eval_expr(arg, x, tol)?;
            let pfq = PfqSpec::new(
                upper.iter().map(|&(re, im)| Complex64::new(re, im)).collect(),
                lower.iter().map(|&(re, im)| Complex64::new(re, im)).collect(),
            );
            pfq_eval(&pfq, w, tol)?.value
        }
    })
}

/// One catalog entry: sibling expressions that agree on x in (0, 2.5].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub description: String,
    pub exprs: Vec<Expr>,
}

impl Fixture {
    /// Evaluates every link at x and returns the values together with the
    /// largest pairwise relative discrepancy.
    pub fn link_values(&self, x: f64, tol: f64) -> Result<(Vec<Complex64>, f64)> {
        let mut vals = Vec::with_capacity(self.exprs.len());
        for e in &self.exprs {
            vals.push(eval_expr(e, x, tol)?);
        }
        let mut max_disc = 0.0f64;
        for i in 0..vals.len() {
            for j in i + 1..vals.len() {
                let scale = vals[i].norm().max(vals[j].norm()).max(1e-300);
                max_disc = max_disc.max((vals[i] - vals[j]).norm() / scale);
            }
        }
        Ok((vals, max_disc))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogFile {
    pub version: u32,
    pub fixtures: Vec<Fixture>,
}

static CATALOG: Lazy<CatalogFile> = Lazy::new(|| {
    let file: CatalogFile = serde_json::from_str(include_str!("../data/catalog.json"))
        .expect("embedded catalog must parse");
    assert_eq!(file.version, 1, "unsupported catalog version");
    file
});

/// The full application fixture list shipped with the crate.
pub fn application_catalog() -> &'static [Fixture] {
    &CATALOG.fixtures
}

/// Parses a catalog from JSON text (the CLI accepts external catalogs).
pub fn parse_catalog(text: &str) -> std::result::Result<CatalogFile, serde_json::Error> {
    serde_json::from_str(text)
}
