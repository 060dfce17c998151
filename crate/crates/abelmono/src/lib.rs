//! Symplectic monodromy on torsion points of an abelian surface with a
//! `(1,2)` polarization, and exact `SL₂(ℤ)` reduction for elliptic curves
//! `ℂ/Λ` with Gaussian-rational period lattices.

mod elliptic;
mod matrix;
mod modular;
mod torsion;

use thiserror::Error;

pub use elliptic::{
    elliptic_quotients_check, lattice_to_tau, quotient_lattice, EllipticEntry, EllipticReport,
    GaussianLattice, GaussianRational,
};
pub use matrix::{
    is_symplectic, tau_generators, validate_generators, IntMatrix4, SymplecticForm, TAU_TABLE,
};
pub use modular::{reduce_fundamental, Sl2, UpperHalfPoint, REDUCTION_CAP};
pub use torsion::{
    act, group_order, inverse_mod, kernel_of_polarization, orbit, pairing, two_torsion_report,
    TorsionVector, TwoTorsionReport, CLOSURE_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbelMonoError {
    #[error("modulus {0} is not supported (need n >= 2)")]
    InvalidModulus(u32),
    #[error("generator τ{index} does not preserve the polarization form")]
    NotSymplectic { index: usize },
    #[error("matrix with determinant {det} is not invertible mod {n}")]
    NotInvertible { det: i64, n: u32 },
    #[error("torsion vectors of different moduli: {0} and {1}")]
    ModulusMismatch(u32, u32),
    #[error("group closure exceeded {0} elements")]
    ClosureCapExceeded(usize),
    #[error("nonzero kernel of the polarization is not a union of orbits; orbit {0} crosses it")]
    KernelNotInvariant(String),
    #[error("imaginary part {0} is not positive")]
    NotInUpperHalfPlane(String),
    #[error("reduction did not terminate within {0} steps")]
    IterationCap(usize),
    #[error("lattice generators are linearly dependent over the reals")]
    DependentGenerators,
    #[error("{0} is not a 2-torsion point of the lattice")]
    NotTwoTorsion(String),
    #[error("quotients {0} and {1} have the same canonical form {2}")]
    CanonicalCollision(String, String, String),
}
