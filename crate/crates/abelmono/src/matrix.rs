use std::fmt;

use lgcheck_core::det_i64;

use crate::AbelMonoError;

/// 4×4 integer matrix on the basis `(λ₁, λ₂, μ₁, μ₂)`; row `i` holds the
/// coordinates of the image of the `i`-th basis vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix4(pub [[i64; 4]; 4]);

impl IntMatrix4 {
    pub const IDENTITY: IntMatrix4 =
        IntMatrix4([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);

    pub fn rows(&self) -> &[[i64; 4]; 4] {
        &self.0
    }

    pub fn mul(&self, other: &IntMatrix4) -> IntMatrix4 {
        let mut out = [[0i64; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..4).map(|k| self.0[i][k] * other.0[k][j]).sum();
            }
        }
        IntMatrix4(out)
    }

    pub fn transpose(&self) -> IntMatrix4 {
        let mut out = [[0i64; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.0[j][i];
            }
        }
        IntMatrix4(out)
    }

    pub fn det(&self) -> i64 {
        det_i64(&self.0.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    /// Entries reduced into `[0, n)`.
    pub fn reduce_mod(&self, n: u32) -> IntMatrix4 {
        let n = n as i64;
        IntMatrix4(self.0.map(|r| r.map(|x| x.rem_euclid(n))))
    }
}

impl fmt::Display for IntMatrix4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .0
            .iter()
            .map(|r| {
                format!(
                    "[{}]",
                    r.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
                )
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// Alternating integer form `E(v, w) = v·J·wᵗ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymplecticForm {
    pub j: IntMatrix4,
}

impl SymplecticForm {
    /// The polarization form the monodromy generators preserve:
    /// `E(λ₁, λ₂) = 1`, `E(μ₁, μ₂) = 2`, all other basis pairings zero.
    pub fn gamma_d() -> Self {
        SymplecticForm {
            j: IntMatrix4([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 2], [0, 0, -2, 0]]),
        }
    }

    /// `[[0, D], [−D, 0]]` with `D = diag(d1, d2)` in the order
    /// `(λ₁, λ₂, μ₁, μ₂)`, i.e. `E(λᵢ, μᵢ) = dᵢ`.
    pub fn standard_block(d1: i64, d2: i64) -> Self {
        SymplecticForm {
            j: IntMatrix4([[0, 0, d1, 0], [0, 0, 0, d2], [-d1, 0, 0, 0], [0, -d2, 0, 0]]),
        }
    }

    pub fn preserved_by(&self, r: &IntMatrix4) -> bool {
        r.mul(&self.j).mul(&r.transpose()) == self.j
    }
}

/// `R·J·Rᵗ = J` for the polarization form [`SymplecticForm::gamma_d`].
pub fn is_symplectic(r: &IntMatrix4) -> bool {
    SymplecticForm::gamma_d().preserved_by(r)
}

/// The monodromy generators `τ₁…τ₆`.
pub const TAU_TABLE: [[[i64; 4]; 4]; 6] = [
    [[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]],
    [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]],
    [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1]],
    [[3, 0, -1, 0], [0, 1, 0, 1], [-2, 0, 1, 0], [0, 2, 0, 3]],
];

/// Checks each matrix against the polarization form; `index` in the error
/// is 1-based.
pub fn validate_generators(table: &[[[i64; 4]; 4]]) -> Result<Vec<IntMatrix4>, AbelMonoError> {
    table
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let m = IntMatrix4(*m);
            if is_symplectic(&m) {
                Ok(m)
            } else {
                Err(AbelMonoError::NotSymplectic { index: i + 1 })
            }
        })
        .collect()
}

pub fn tau_generators() -> Result<Vec<IntMatrix4>, AbelMonoError> {
    validate_generators(&TAU_TABLE)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_symplectic_with_unit_determinant() {
        let gens = tau_generators().unwrap();
        assert_eq!(gens.len(), 6);
        for g in &gens {
            assert_eq!(g.det(), 1);
        }
        assert_eq!(
            gens[0],
            IntMatrix4(IntMatrix4::IDENTITY.0.map(|r| r.map(|x| -x)))
        );
        assert_eq!(gens[3].rows()[0], [1, 1, 0, 0]);
        assert_eq!(gens[5].det(), 1);
    }

    #[test]
    fn bare_swap_is_not_symplectic() {
        let swap = IntMatrix4([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        assert!(!is_symplectic(&swap));
        assert!(is_symplectic(&IntMatrix4::IDENTITY));
    }

    #[test]
    fn corrupted_generator_is_rejected() {
        let mut table = TAU_TABLE;
        table[5][0][0] = 2;
        assert_eq!(
            validate_generators(&table),
            Err(AbelMonoError::NotSymplectic { index: 6 })
        );
    }

    #[test]
    fn standard_block_layout_rejects_the_table() {
        let std = SymplecticForm::standard_block(1, 2);
        let preserved: Vec<bool> = TAU_TABLE
            .iter()
            .map(|m| std.preserved_by(&IntMatrix4(*m)))
            .collect();
        assert_eq!(preserved, [true, false, false, false, false, true]);
    }

    #[test]
    fn display_is_row_major() {
        assert_eq!(
            IntMatrix4::IDENTITY.to_string(),
            "[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]"
        );
    }
}
