//! Error types shared across the crate.

use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, HfunError>;

#[derive(Debug, Clone, Error)]
pub enum HfunError {
    /// Gamma function evaluated within tolerance of a non-positive integer.
    #[error("gamma pole at z = {re}{im:+}i")]
    Pole { re: f64, im: f64 },

    /// Parameter set violates a structural invariant (scale signs, index
    /// bounds, pole separation).
    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    /// The residue series requires simple poles and the requested pole
    /// family has a collision.
    #[error("pole family is not simple: {0}")]
    MultiplePoles(String),

    /// The argument lies outside the convergence domain of the requested
    /// representation.
    #[error("argument outside convergence domain: {0}")]
    Domain(String),

    /// Series did not meet the tail bound within the term budget.
    #[error("no convergence after {terms} terms")]
    NoConvergence { terms: usize },

    /// The series diverges for the given parameters and argument.
    #[error("divergent series: {0}")]
    Divergent(String),

    /// No contour abscissa separates the two pole families.
    #[error("contour error: {0}")]
    Contour(String),

    /// The Mellin-Barnes integrand does not decay along the contour.
    #[error("integrand does not decay: {0}")]
    Decay(String),

    /// An identity was applied to a spec that does not have the required
    /// parameter layout.
    #[error("structure error: {0}")]
    Structure(String),

    /// Every applicable evaluation strategy failed.
    #[error("unevaluable: {}", format_failures(.0))]
    Unevaluable(Vec<HfunError>),
}

impl HfunError {
    pub fn pole(z: Complex64) -> Self {
        HfunError::Pole { re: z.re, im: z.im }
    }
}

fn format_failures(errs: &[HfunError]) -> String {
    errs.iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
