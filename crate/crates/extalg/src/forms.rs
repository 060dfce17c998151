use lgcheck_core::{rank, rat, Rational};
use num_traits::Zero;

use crate::{AlternatingTensor, ExtAlgError, FormSpace, OneForm};

/// A permutation of `1..=d` in one-line notation: `images[i-1] = σ(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self, ExtAlgError> {
        let d = images.len() as u32;
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x < 1 || x > d || seen[(x - 1) as usize] {
                return Err(ExtAlgError::InvalidPermutation(images, d));
            }
            seen[(x - 1) as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(d: u32) -> Self {
        Permutation {
            images: (1..=d).collect(),
        }
    }

    /// The transposition `(a b)` in `S_d`.
    pub fn transposition(d: u32, a: u32, b: u32) -> Result<Self, ExtAlgError> {
        let mut images: Vec<u32> = (1..=d).collect();
        if a < 1 || b < 1 || a > d || b > d || a == b {
            images.push(a.max(b));
            return Err(ExtAlgError::InvalidPermutation(images, d));
        }
        images.swap((a - 1) as usize, (b - 1) as usize);
        Ok(Permutation { images })
    }

    /// The cycle `1 → 2 → … → d → 1`.
    pub fn long_cycle(d: u32) -> Self {
        Permutation {
            images: (1..=d).map(|i| i % d + 1).collect(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.images[(i - 1) as usize]
    }
}

/// `Σ_i ω^i_{j₁} ∧ … ∧ ω^i_{j_p}`, summed over all `d` sheets.
pub fn build_sum_form(space: FormSpace, indices: &[u32]) -> Result<AlternatingTensor, ExtAlgError> {
    for (n, &j) in indices.iter().enumerate() {
        if indices[..n].contains(&j) {
            return Err(ExtAlgError::RepeatedIndex(j));
        }
    }
    let mut acc = AlternatingTensor::zero(space, indices.len());
    for i in 1..=space.d() {
        let forms = indices
            .iter()
            .map(|&j| space.omega(i, j))
            .collect::<Result<Vec<_>, _>>()?;
        acc = acc.add(&AlternatingTensor::wedge_all(space, &forms)?)?;
    }
    Ok(acc)
}

/// Pushes `t` forward along `σω^i_j = ω^{σ(i)}_j`.
pub fn apply_permutation(
    t: &AlternatingTensor,
    sigma: &Permutation,
) -> Result<AlternatingTensor, ExtAlgError> {
    let space = t.space();
    if sigma.degree() != space.d() {
        return Err(ExtAlgError::InvalidPermutation(
            sigma.images.clone(),
            space.d(),
        ));
    }
    let images: Vec<OneForm> = (0..space.dim())
        .map(|idx| {
            let (i, j) = space.label(idx);
            space.omega(sigma.apply(i), j)
        })
        .collect::<Result<_, _>>()?;
    let mut out = AlternatingTensor::zero(space, t.degree());
    for (key, c) in t.terms() {
        let forms: Vec<OneForm> = key.iter().map(|&k| images[k].clone()).collect();
        out = out.add(&AlternatingTensor::wedge_all(space, &forms)?.scale(c))?;
    }
    Ok(out)
}

fn require_two_form(t: &AlternatingTensor) -> Result<(), ExtAlgError> {
    if t.degree() != 2 {
        return Err(ExtAlgError::DegreeMismatch {
            expected: 2,
            found: t.degree(),
        });
    }
    Ok(())
}

/// Rank of the antisymmetric matrix `A` with `t = Σ_{a<b} A_{ab} e_a ∧ e_b`.
pub fn two_form_rank(t: &AlternatingTensor) -> Result<usize, ExtAlgError> {
    require_two_form(t)?;
    let n = t.space().dim();
    let mut m = vec![vec![Rational::zero(); n]; n];
    for (key, c) in t.terms() {
        m[key[0]][key[1]] = c.clone();
        m[key[1]][key[0]] = -c.clone();
    }
    Ok(rank(&m))
}

pub fn is_decomposable(t: &AlternatingTensor) -> Result<bool, ExtAlgError> {
    Ok(two_form_rank(t)? <= 2)
}

/// `pure · ω³₁∧ω³₂ + mixed · (ω¹₁−ω²₁)∧(ω¹₂−ω²₂)` on the `d = 3, q = 2`
/// space. With `pure = 3/2` and `mixed = 1/2` this is the sum form.
pub fn omega_identity_rhs(
    pure: &Rational,
    mixed: &Rational,
) -> Result<AlternatingTensor, ExtAlgError> {
    let s = FormSpace::new(3, 2)?;
    let w = |i, j| s.omega(i, j);
    let pure_part = AlternatingTensor::wedge_all(s, &[w(3, 1)?, w(3, 2)?])?.scale(pure);
    let diff1 = w(1, 1)?.sub(&w(2, 1)?)?;
    let diff2 = w(1, 2)?.sub(&w(2, 2)?)?;
    let mixed_part = AlternatingTensor::wedge_all(s, &[diff1, diff2])?.scale(mixed);
    pure_part.add(&mixed_part)
}

pub fn verify_omega_identity() -> bool {
    let lhs = FormSpace::new(3, 2).and_then(|s| build_sum_form(s, &[1, 2]));
    let rhs = omega_identity_rhs(&rat(3, 2), &rat(1, 2));
    matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use lgcheck_core::int;
    use num_traits::One;

    #[test]
    fn degree_two_sum_form_has_expected_shape() {
        let s = FormSpace::new(2, 2).unwrap();
        let t = build_sum_form(s, &[1, 2]).unwrap();
        let expected =
            AlternatingTensor::wedge_all(s, &[s.omega(1, 1).unwrap(), s.omega(1, 2).unwrap()])
                .unwrap()
                .scale(&int(2));
        assert_eq!(t, expected);
    }

    #[test]
    fn one_forms_sum_to_zero() {
        for d in 2..=6 {
            let s = FormSpace::new(d, 3).unwrap();
            assert!(build_sum_form(s, &[1]).unwrap().is_zero());
        }
    }

    #[test]
    fn repeated_index_is_rejected() {
        let s = FormSpace::new(3, 2).unwrap();
        assert_eq!(
            build_sum_form(s, &[2, 2]),
            Err(ExtAlgError::RepeatedIndex(2))
        );
    }

    #[test]
    fn omega_identity_and_its_perturbations() {
        assert!(verify_omega_identity());
        let lhs = build_sum_form(FormSpace::new(3, 2).unwrap(), &[1, 2]).unwrap();
        assert_ne!(lhs, omega_identity_rhs(&int(1), &rat(1, 2)).unwrap());
        let s = FormSpace::new(3, 2).unwrap();
        let swapped = build_sum_form(s, &[2, 1]).unwrap();
        assert_ne!(swapped, omega_identity_rhs(&rat(3, 2), &rat(1, 2)).unwrap());
        assert_eq!(swapped, lhs.scale(&-Rational::one()));
    }

    #[test]
    fn ranks_and_decomposability() {
        let s = FormSpace::new(3, 2).unwrap();
        let omega = build_sum_form(s, &[1, 2]).unwrap();
        assert_eq!(two_form_rank(&omega), Ok(4));
        assert_eq!(is_decomposable(&omega), Ok(false));
        let pure =
            AlternatingTensor::wedge_all(s, &[s.omega(1, 1).unwrap(), s.omega(1, 2).unwrap()])
                .unwrap();
        assert_eq!(is_decomposable(&pure), Ok(true));
        let zero = AlternatingTensor::zero(s, 2);
        assert_eq!(two_form_rank(&zero), Ok(0));
        assert_eq!(is_decomposable(&zero), Ok(true));
        let one = s.omega(1, 1).unwrap().to_tensor();
        assert_eq!(
            two_form_rank(&one),
            Err(ExtAlgError::DegreeMismatch {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn permutation_relabels_sheets() {
        let s = FormSpace::new(3, 2).unwrap();
        let tau = Permutation::transposition(3, 1, 2).unwrap();
        let image = apply_permutation(&s.omega(1, 1).unwrap().to_tensor(), &tau).unwrap();
        assert_eq!(image, s.omega(2, 1).unwrap().to_tensor());
        let omega = build_sum_form(s, &[1, 2]).unwrap();
        assert_eq!(
            apply_permutation(&omega, &Permutation::identity(3)).unwrap(),
            omega
        );
        assert_eq!(
            apply_permutation(&omega, &Permutation::long_cycle(3)).unwrap(),
            omega
        );
    }

    #[test]
    fn invalid_permutations() {
        assert!(Permutation::new(vec![1, 1, 3]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::transposition(3, 2, 2).is_err());
        let s = FormSpace::new(3, 1).unwrap();
        let t = s.omega(1, 1).unwrap().to_tensor();
        assert!(apply_permutation(&t, &Permutation::identity(4)).is_err());
    }
}
