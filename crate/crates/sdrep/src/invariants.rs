//! Invariant counting: graded pieces of ℂ[ξ₂,…,ξ_d], trivial summands of
//! symmetric and exterior powers, and the S₃ bookkeeping for the LG
//! surface (H^{1,0} ≅ Γ⊕Γ).

use lgcheck_core::{binomial, int, to_i64, to_ratio_string, Rational};
use num_traits::Signed;

use crate::character::{
    ext_power_character, standard_character, sym_power_character, trivial_character,
};
use crate::decompose::{decompose, RepDecomposition};
use crate::partition::Partition;
use crate::{check_degree, SdRepError};

/// `dim ℂ[ξ₂,…,ξ_d]_k` with `deg ξ_h = h`: the number of multisets drawn
/// from `{2,…,d}` summing to `k`.
pub fn dim_a(d: u32, k: u32) -> u64 {
    let k = k as usize;
    let mut ways = vec![0u64; k + 1];
    ways[0] = 1;
    for part in 2..=d as usize {
        for s in part..=k {
            ways[s] += ways[s - part];
        }
    }
    ways[k]
}

fn natural(r: &Rational) -> Option<u64> {
    if r.is_negative() {
        return None;
    }
    to_i64(r).map(|v| v as u64)
}

/// Multiplicity of the trivial representation in `Sym^k Γ`, computed from
/// characters and required to agree with [`dim_a`].
pub fn trivial_multiplicity_sym_gamma(d: u32, k: u32) -> Result<u64, SdRepError> {
    check_degree(d, 2)?;
    let sym = sym_power_character(&standard_character(d)?, k);
    let m = sym.inner(&trivial_character(d)?)?;
    let from_partitions = dim_a(d, k);
    match natural(&m) {
        Some(v) if v == from_partitions => Ok(v),
        _ => Err(SdRepError::InvariantCountMismatch {
            d,
            k,
            from_characters: to_ratio_string(&m),
            from_partitions,
        }),
    }
}

/// Lower bound on the kernel of `∧^p H^{1,0} → H^{p,0}` when `H^{1,0}`
/// contains `q` copies of the standard representation of S_d.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KernelBound {
    /// `C(q, p)`.
    pub bound: u64,
    /// `C(q, p) · dim A_p`.
    pub trivial_copies: u64,
    /// Trivial multiplicity of `∧^p(Γ^{⊕q})`, from characters.
    pub character_multiplicity: u64,
}

pub fn kernel_lower_bound(d: u32, q: u32, p: u32) -> Result<KernelBound, SdRepError> {
    check_degree(d, 2)?;
    if p < 2 || p > q {
        return Err(SdRepError::InvalidExponent { p, q });
    }
    let r = binomial(u64::from(q), u64::from(p));
    let trivial_copies = r * dim_a(d, p);
    let gamma_q = standard_character(d)?.scale(&int(i64::from(q)));
    let m = ext_power_character(&gamma_q, p).inner(&trivial_character(d)?)?;
    match natural(&m) {
        Some(found) if found >= trivial_copies => Ok(KernelBound {
            bound: r,
            trivial_copies,
            character_multiplicity: found,
        }),
        _ => Err(SdRepError::KernelBoundViolated {
            found: to_ratio_string(&m),
            bound: trivial_copies,
        }),
    }
}

/// `q(d − 1)`: the dimension of `Γ^{⊕q}`.
pub fn min_irregularity(d: u32, q: u32) -> u32 {
    q * d.saturating_sub(1)
}

/// Trivial copies of U inside `ker ρ₂^{1,1}` on the LG surface.
const KER_RHO11_TRIVIAL: u64 = 3;
/// Copies of Γ inside `ker ρ₂^{1,1}`.
const KER_RHO11_STANDARD: u64 = 1;

/// S₃-representation bookkeeping for the LG surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LgBookkeeping {
    /// `H^{1,0} ≅ Γ ⊕ Γ`.
    pub h10: RepDecomposition,
    /// `H^{1,0} ⊗ H^{0,1}`.
    pub h10_tensor_h01: RepDecomposition,
    /// Invariant part of `∧² H^{1,0}`, which is `ker ψ₂`.
    pub ker_psi2: RepDecomposition,
    /// `ker ψ₂ ⊕ conj(ker ψ₂) ⊕ ker ρ₂^{1,1}`.
    pub ker_rho2: RepDecomposition,
}

fn s3(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("static S3 label")
}

pub fn lg_bookkeeping() -> Result<LgBookkeeping, SdRepError> {
    let (trivial, sign, standard) = (s3(&[3]), s3(&[1, 1, 1]), s3(&[2, 1]));
    let gamma = standard_character(3)?;
    let h10_char = gamma.add(&gamma)?;
    let h10 = decompose(&h10_char)?;
    if h10.dimension() != 4 {
        return Err(SdRepError::Bookkeeping {
            what: "dim H^{1,0}",
            expected: "4".into(),
            computed: h10.dimension().to_string(),
        });
    }

    // H^{0,1} is the conjugate of H^{1,0}; S₃ characters are real.
    let tensor = decompose(&h10_char.mul(&h10_char)?)?;
    let expected_tensor = RepDecomposition::new(
        3,
        [
            (standard.clone(), 4),
            (sign.clone(), 4),
            (trivial.clone(), 4),
        ],
    )?;
    if tensor != expected_tensor {
        return Err(SdRepError::Bookkeeping {
            what: "H^{1,0} ⊗ H^{0,1}",
            expected: expected_tensor.to_string(),
            computed: tensor.to_string(),
        });
    }

    let wedge2 = decompose(&ext_power_character(&h10_char, 2))?;
    let ker_psi2 = RepDecomposition::new(3, [(trivial.clone(), wedge2.multiplicity(&trivial))])?;

    if KER_RHO11_TRIVIAL > tensor.multiplicity(&trivial)
        || KER_RHO11_STANDARD > tensor.multiplicity(&standard)
    {
        return Err(SdRepError::Bookkeeping {
            what: "ker ρ₂^{1,1} inside H^{1,0} ⊗ H^{0,1}",
            expected: format!("U^{KER_RHO11_TRIVIAL} + Γ^{KER_RHO11_STANDARD} fits"),
            computed: tensor.to_string(),
        });
    }
    let psi = ker_psi2.multiplicity(&trivial);
    let ker_rho2 = RepDecomposition::new(
        3,
        [
            (trivial.clone(), 2 * psi + KER_RHO11_TRIVIAL),
            (standard.clone(), KER_RHO11_STANDARD),
        ],
    )?;
    let expected_kernel = RepDecomposition::new(3, [(standard, 1), (trivial, 5)])?;
    if ker_rho2 != expected_kernel || ker_rho2.dimension() != 7 {
        return Err(SdRepError::Bookkeeping {
            what: "ker ρ₂",
            expected: expected_kernel.to_string(),
            computed: ker_rho2.to_string(),
        });
    }
    Ok(LgBookkeeping {
        h10,
        h10_tensor_h01: tensor,
        ker_psi2,
        ker_rho2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dim_a_small_values() {
        assert_eq!(dim_a(3, 2), 1);
        assert_eq!(dim_a(3, 6), 2);
        assert_eq!(dim_a(7, 1), 0);
        assert_eq!(dim_a(2, 5), 0);
        assert_eq!(dim_a(5, 0), 1);
    }

    #[test]
    fn trivial_multiplicity_examples() {
        assert_eq!(trivial_multiplicity_sym_gamma(3, 2), Ok(1));
        assert_eq!(trivial_multiplicity_sym_gamma(4, 3), Ok(1));
        assert_eq!(trivial_multiplicity_sym_gamma(2, 5), Ok(0));
    }

    #[test]
    fn kernel_bounds() {
        let b = kernel_lower_bound(3, 2, 2).unwrap();
        assert_eq!(
            (b.bound, b.trivial_copies, b.character_multiplicity),
            (1, 1, 1)
        );
        let b = kernel_lower_bound(3, 4, 2).unwrap();
        assert_eq!((b.bound, b.trivial_copies), (6, 6));
        let b = kernel_lower_bound(5, 3, 3).unwrap();
        assert_eq!((b.bound, b.trivial_copies), (1, 1));
        assert_eq!(
            kernel_lower_bound(3, 2, 3),
            Err(SdRepError::InvalidExponent { p: 3, q: 2 })
        );
        assert_eq!(
            kernel_lower_bound(3, 2, 1),
            Err(SdRepError::InvalidExponent { p: 1, q: 2 })
        );
    }

    #[test]
    fn irregularity() {
        assert_eq!(min_irregularity(3, 2), 4);
        assert_eq!(min_irregularity(2, 0), 0);
        assert_eq!(min_irregularity(6, 3), 15);
    }

    #[test]
    fn lg_surface_bookkeeping() {
        let lg = lg_bookkeeping().unwrap();
        assert_eq!(lg.h10.dimension(), 4);
        assert_eq!(lg.h10_tensor_h01.dimension(), 16);
        let mults: Vec<u64> = lg.h10_tensor_h01.terms().values().copied().collect();
        assert_eq!(mults, [4, 4, 4]);
        assert_eq!(lg.ker_psi2.dimension(), 1);
        assert_eq!(lg.ker_rho2.dimension(), 7);
        assert_eq!(lg.ker_rho2.to_string(), "(3)^5 + (2,1)^1");
    }
}
