//! Exact combinatorics of nilpotent-orbit function rings.
//!
//! Starting from a weighted Dynkin diagram on a simple root system, this
//! crate grades the algebra by the associated coweight, decomposes the
//! symmetric powers of the degree >= 2 space into Levi irreducibles, and
//! evaluates the alternating-sum multiplicity of each irreducible
//! representation in the ring of regular functions on the normalization of
//! the orbit closure.
//!
//! The flagship computation is the 8-dimensional nilpotent orbit of G2
//! (diagram labels (1,0)), whose function ring contains every irreducible
//! representation exactly once; `verify-model` sweeps that statement over
//! all dominant weights up to a bound, cross-checked against an independent
//! brute-force enumeration.
//!
//! All arithmetic is exact: integers and rationals only, no tolerances.

pub mod cli;
pub mod grading;
pub mod input;
mod linalg;
pub mod multiplicity;
pub mod report;
pub mod rootsys;
pub mod sym;

pub use grading::{coweight_from_diagram, grade_roots, Coweight, DimsReport, Grading, LeviWeight};
pub use multiplicity::{
    bruteforce_multiplicity_g2, multiplicity, s_lambda_set, truncation_bound, verify_model,
    MultiplicityReport,
};
pub use rootsys::{Root, RootSystem, Series, Weight, WeylElement};
pub use sym::{
    g2_closed_form_sk, levi_irrep_extract, sym_power_multiset, verify_sk_equality, LeviConstituent,
    WeightMultiset,
};

/// Errors across the crate. Exact-arithmetic operations never approximate;
/// anything out of contract is reported, never coerced.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Unknown or unsupported simple type label.
    #[error("unknown or unsupported simple type: {0}")]
    InvalidType(String),
    /// A weight that had to be dominant was not.
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    /// The Weyl group is too large to materialize.
    #[error("Weyl group enumeration exceeds the supported order ({0})")]
    Unsupported(u128),
    /// Diagram labels with no integral coweight solution.
    #[error("not in the coweight lattice: {0}")]
    NotInCoweightLattice(String),
    /// A multiset handed to the extractor was not Levi-Weyl-invariant.
    #[error("{0}")]
    NotWeylInvariant(String),
    /// Antisymmetrization produced a negative value: corrupted input.
    #[error("negative multiplicity: {0}")]
    NegativeMultiplicity(String),
    /// Malformed caller input (CLI values, mismatched ranks, bad bounds).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
