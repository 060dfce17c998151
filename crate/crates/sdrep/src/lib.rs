//! Character theory of the symmetric group S_d, exact over ℚ.
//!
//! Conjugacy classes and irreducible representations are both labelled by
//! [`Partition`]s of `d`. Characters are [`ClassFunction`]s with one exact
//! rational value per class, and [`decompose`] splits a character into
//! irreducibles by the inner product. The [`invariants`] module counts
//! graded dimensions of the invariant ring ℂ[ξ₂,…,ξ_d] and checks them
//! against trivial multiplicities in symmetric powers of the standard
//! representation.
//!
//! Supported degrees are `1..=10`. Classes and irreducibles are always
//! listed in the order of [`Partition::all`]: lexicographically increasing
//! part vectors, identity class `(1,…,1)` first and `(d)` last.

mod character;
mod decompose;
pub mod invariants;
mod partition;

use thiserror::Error;

pub use character::{
    character_table, conjugacy_classes, ext_power_character, irreducible_character, sign_character,
    standard_character, sym_power_character, trivial_character, CharacterTable, ClassFunction,
};
pub use decompose::{decompose, RepDecomposition};
pub use invariants::{
    dim_a, kernel_lower_bound, lg_bookkeeping, min_irregularity, trivial_multiplicity_sym_gamma,
    KernelBound, LgBookkeeping,
};
pub use partition::Partition;

/// Largest supported degree.
pub const MAX_DEGREE: u32 = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SdRepError {
    #[error("degree {d} outside the supported range {min}..={max}")]
    DegreeOutOfRange { d: u32, min: u32, max: u32 },
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),
    #[error("partition has weight {found}, expected {expected}")]
    WeightMismatch { expected: u32, found: u32 },
    #[error("class function of S_{d} needs {expected} values, got {found}")]
    WrongValueCount {
        d: u32,
        expected: usize,
        found: usize,
    },
    #[error("class functions live on different groups: S_{left} and S_{right}")]
    DegreeMismatch { left: u32, right: u32 },
    #[error("not a character: non-natural multiplicities {}", fmt_offending(.offending))]
    NotACharacter { offending: Vec<(Partition, String)> },
    #[error(
        "trivial multiplicity of Sym^{k} of the standard representation of S_{d} is {from_characters}, \
         but dim ℂ[ξ₂..ξ_d]_{k} = {from_partitions}"
    )]
    InvariantCountMismatch {
        d: u32,
        k: u32,
        from_characters: String,
        from_partitions: u64,
    },
    #[error("parameters out of range: need 2 <= p <= q, got p={p}, q={q}")]
    InvalidExponent { p: u32, q: u32 },
    #[error(
        "trivial multiplicity {found} of the p-th exterior power is below the lower bound {bound}"
    )]
    KernelBoundViolated { found: String, bound: u64 },
    #[error("bookkeeping mismatch in {what}: expected {expected}, computed {computed}")]
    Bookkeeping {
        what: &'static str,
        expected: String,
        computed: String,
    },
}

fn fmt_offending(items: &[(Partition, String)]) -> String {
    items
        .iter()
        .map(|(p, m)| format!("{p}: {m}"))
        .collect::<Vec<_>>()
        .join(", ")
}

pub(crate) fn check_degree(d: u32, min: u32) -> Result<(), SdRepError> {
    if d < min || d > MAX_DEGREE {
        return Err(SdRepError::DegreeOutOfRange {
            d,
            min,
            max: MAX_DEGREE,
        });
    }
    Ok(())
}
