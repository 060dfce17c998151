//! Intersection lattices of blown-up surfaces, exact to the last integer:
//! blow-ups with total-transform bookkeeping, strict transforms, adjunction,
//! the ramification and branch classes of the triple cover `S̄ → F₃`, and
//! the numerical invariants of the double cover branched along `B`.

mod cover;
mod lattice;
mod sbar;

use thiserror::Error;

pub use cover::{
    derived_numerics, double_cover_invariants, fv_numerics, s_tilde, DerivedNumerics,
    DoubleCoverInvariants, FvNumerics, SigmaTildeInputs, Q_X, SIGMA_TILDE,
};
pub use lattice::{
    make_abelian_12, make_hirzebruch, BlowUpRecord, ClassKind, DivisorClass, Parent, SurfaceLattice,
};
pub use sbar::{build_sbar, BranchSolution, Sbar, G_NAMES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NsError {
    #[error("no basis class named {0:?}")]
    UnknownClass(String),
    #[error("{0:?} is not an exceptional class")]
    NotExceptional(String),
    #[error("basis class {0:?} already exists")]
    DuplicateName(String),
    #[error("divisor has {found} coordinates, lattice has rank {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("gram matrix is not symmetric")]
    AsymmetricGram,
    #[error("K·D + D² = {0} is odd, so D is not the class of a curve")]
    OddAdjunction(i64),
    #[error("{what}: expected {expected}, computed {computed}")]
    Verification {
        what: &'static str,
        expected: String,
        computed: String,
    },
    #[error("branch-class system: {0}")]
    BranchSystem(#[from] lgcheck_core::LinalgError),
    #[error("{what} = {value} is not an integer")]
    NonIntegral { what: &'static str, value: String },
    #[error("Noether's formula fails: 12·{chi} != {ksq} + {c2}")]
    Noether { ksq: i64, c2: i64, chi: i64 },
}

pub(crate) fn mismatch<T: std::fmt::Display>(
    what: &'static str,
    expected: T,
    computed: T,
) -> NsError {
    NsError::Verification {
        what,
        expected: expected.to_string(),
        computed: computed.to_string(),
    }
}
