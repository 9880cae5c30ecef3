//! Numerical Fox H-function toolkit.
//!
//! Evaluates H-functions through their residue series and Mellin-Barnes
//! contour integral, applies the splitting identities that rewrite one
//! H-function as a weighted pair at phase-rotated arguments, and computes
//! generalized Mittag-Leffler sums three independent ways. A fixture
//! catalog ties the H-function machinery to elementary closed forms and
//! powers the verification suites.

pub mod catalog;
pub mod error;
pub mod eval;
pub mod identities;
pub mod mlsum;
pub mod model;
pub mod special;
pub mod verify;

pub use error::{HfunError, Result};
pub use eval::{eval, EvalResult, Method, QuadratureConfig};
pub use model::{HFunctionSpec, ParamPair, PfqSpec};
