//! Symmetric functions in noncommuting variables.
//!
//! The crate works entirely in complete homogeneous bases with exact
//! rational coefficients:
//!
//! * [`SymExpansion`]: commutative `h_λ`, with skew and ribbon Schur
//!   functions from Jacobi–Trudi determinants.
//! * [`NCExpansion`]: noncommutative `h_π` indexed by set partitions, with
//!   slash-product multiplication, the symmetric-group action, and source,
//!   skew, standard and ribbon Schur functions.
//! * [`classification`]: the equality criterion for skew Schur functions
//!   in noncommuting variables and an exhaustive verifier for it.

pub mod classification;
pub mod composition;
pub mod determinant;
pub mod diagram;
pub mod error;
pub mod expansion;
pub mod monomial;
pub mod ncsym;
pub mod permutation;
pub mod rational;
pub mod set_partition;
pub mod sym;

pub use classification::{
    count_equivalent, equal_oracle, equal_same_diagram, theorem_predicate, theorem_verdict,
    verify_exhaustive, verify_exhaustive_with, LabeledDiagram, SameDiagramCheck, TheoremVerdict,
    VerificationReport, VerifyOptions,
};
pub use composition::{Composition, Partition, WeakComposition};
pub use diagram::{SkewDiagram, SubscriptMatrix};
pub use error::{Error, Result};
pub use expansion::{BasisKey, Expansion};
pub use monomial::{monomial_truncation, NCMonomialTruncation};
pub use ncsym::{
    act_nc, delta_of, h_basis, nc_mul, rho, ribbon_schur_nc, schur_nc, skew_schur_nc,
    source_skew_schur, NCExpansion,
};
pub use permutation::Permutation;
pub use rational::Rational;
pub use set_partition::SetPartition;
pub use sym::{overlap_necessary, ribbon_schur, skew_schur, SymExpansion};
