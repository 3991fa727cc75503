//! Exact computations with the Z^2-graded oscillator representations of
//! `sl(n)` on `F[x1..xn, y1..yn]`: operators, highest-weight modules, and
//! the growth of their filtrations.

pub mod catalog;
pub mod error;
pub mod growth;
pub mod oscillator;
pub mod parallel;
pub mod poly;
pub mod rational;
pub mod span;
pub mod weyl;

pub use catalog::{catalog, validate_hwv, CaseId, Family, HwModuleSpec, HwValidationReport};
pub use error::{Error, Result};
pub use growth::{
    estimate_degree, filtration_sweep, gk_formula, is_minimal_case, minimal_gk, DegreeEstimate,
    GrowthReport, SweepOptions, Verdict,
};
pub use oscillator::{e_op, root_vectors, verify_brackets, Weight};
pub use parallel::ExecMode;
pub use poly::{GradedPair, Monomial, Poly, Rational, RepConfig};
pub use span::{EchelonBasis, Insertion, WeightLedger};
pub use weyl::{Var, WeylOp};
