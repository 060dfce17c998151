//! Exact exterior algebra on the one-forms `ω^i_j = π_i^* η_j` of a Galois
//! closure, with `i` running over the `d` sheets and `j` over a basis of
//! `q` one-forms downstairs.
//!
//! The relation `ω^1_j + … + ω^d_j = 0` is built in: the basis is
//! `ω^i_j` for `1 ≤ i ≤ d−1`, and `ω^d_j` always expands to
//! `−ω^1_j − … − ω^{d−1}_j`. Basis index of `ω^i_j` is `(j−1)(d−1) + (i−1)`,
//! so for `q = 2` a 2-form's matrix splits into the `j = 1` and `j = 2`
//! blocks.

mod forms;
mod tensor;

use thiserror::Error;

pub use forms::{
    apply_permutation, build_sum_form, is_decomposable, omega_identity_rhs, two_form_rank,
    verify_omega_identity, Permutation,
};
pub use tensor::{AlternatingTensor, FormSpace, OneForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtAlgError {
    #[error("form space needs d >= 2 and q >= 1, got d={d}, q={q}")]
    InvalidSpace { d: u32, q: u32 },
    #[error("ω^{i}_{j} is outside the space (1 <= i <= {d}, 1 <= j <= {q})")]
    IndexOutOfRange { i: u32, j: u32, d: u32, q: u32 },
    #[error("form index {0} is repeated")]
    RepeatedIndex(u32),
    #[error("expected a tensor of degree {expected}, got degree {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("degree {degree} exceeds the dimension {dim} of the form space")]
    DegreeTooLarge { degree: usize, dim: usize },
    #[error("operands live in different form spaces")]
    SpaceMismatch,
    #[error("{0:?} is not a permutation of 1..={1}")]
    InvalidPermutation(Vec<u32>, u32),
}
