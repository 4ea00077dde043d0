//! Integral trace forms of tame cyclic number fields.
//!
//! A cyclic field of degree `n` with tame ramification data
//! `{(p_i, e_i)}` has, on its normal integral basis, a trace-form Gram matrix
//! that depends only on that data. This crate builds it as a circulant in
//! the group ring `Z[Z/n]`, derives invariants (discriminant, signature,
//! isometry), and certifies everything against a brute-force computation
//! with Gauss periods in a cyclotomic field.

pub mod arith;
pub mod cyclotomic;
pub mod exec;
pub mod group_ring;
pub mod matrix;
pub mod trace_form;

pub use cyclotomic::{
    certify, certify_with, gram_oracle, ramanujan_sum, realize, realize_default, CertifyReport,
    Counterexample, FieldRealization, FormalRootSum, OracleError,
};
pub use exec::Execution;
pub use group_ring::{FiniteAbelianGroup, GroupRingElement, GroupRingError, Subgroup};
pub use matrix::{GramMatrix, Inertia};
pub use trace_form::{
    circulant_to_matrix, closed_form_coefficients, discriminant, enumerate_specs,
    expanded_coefficients, field_circulant, gram_matrix, is_isometric, local_circulant,
    signature, validate_spec, Circulant, CoefficientSource, CoefficientTable, FieldSpec,
    IsometryVerdict, RamifiedPrime, SpecError, TraceFormError,
};

use num_bigint::BigInt;

/// Canonical Gram matrices for a batch of specs.
pub fn gram_all(specs: &[FieldSpec], exec: Execution) -> Vec<GramMatrix> {
    exec.map(specs, gram_matrix)
}

/// Determinants of the canonical Gram matrices for a batch of specs.
pub fn determinants_all(specs: &[FieldSpec], exec: Execution) -> Vec<BigInt> {
    exec.map(specs, |s| gram_matrix(s).determinant())
}

/// Certify every spec; each uses its own seeded stream, so results do not
/// depend on the execution mode.
pub fn certify_all(
    specs: &[FieldSpec],
    trials: usize,
    seed: u64,
    exec: Execution,
) -> Vec<Result<CertifyReport, OracleError>> {
    let indexed: Vec<(usize, &FieldSpec)> = specs.iter().enumerate().collect();
    exec.map(&indexed, |&(i, s)| {
        certify_with(s, trials, seed.wrapping_add(i as u64), Execution::Sequential)
    })
}
