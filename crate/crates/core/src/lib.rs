//! Decide whether the wreath product of two abelian groups generates the
//! product of their varieties, evaluate the nilpotency-class formulas behind
//! the decision, and check them against brute force on small finite groups.

pub mod abelian;
pub mod cardinal;
pub mod criterion;
pub mod error;
pub mod nilpotency;
pub mod notation;
pub mod oracle;
pub mod primes;

pub use abelian::AbelianDescriptor;
pub use cardinal::{Cardinal, ExtNat};
pub use criterion::{
    chain_analysis, classify, generates, generates_finite, separating_parameters, Alternative,
    Branch, CaseTag, Certificate, ChainReport, ChainStep, Classification, Separation, Verdict,
    Witness,
};
pub use error::{Error, Result};
pub use nilpotency::{
    lambda_bound, lambda_general_bound, liebeck_class, min_t0, nu, nu_general, separation_gap,
    ChainShape, ClassFormulaInput,
};
pub use notation::parse_descriptor;
