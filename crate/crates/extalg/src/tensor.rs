use std::collections::BTreeMap;
use std::fmt;

use lgcheck_core::{int, to_ratio_string, Rational};
use num_traits::{One, Zero};

use crate::ExtAlgError;

/// Span of the `ω^i_j` modulo the sheet-sum relation; dimension `q(d−1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FormSpace {
    d: u32,
    q: u32,
}

impl FormSpace {
    pub fn new(d: u32, q: u32) -> Result<Self, ExtAlgError> {
        if d < 2 || q < 1 {
            return Err(ExtAlgError::InvalidSpace { d, q });
        }
        Ok(FormSpace { d, q })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn dim(&self) -> usize {
        (self.q * (self.d - 1)) as usize
    }

    /// `(i, j)`, 1-based, of a basis index.
    pub fn label(&self, idx: usize) -> (u32, u32) {
        let block = (self.d - 1) as usize;
        ((idx % block) as u32 + 1, (idx / block) as u32 + 1)
    }

    fn index(&self, i: u32, j: u32) -> usize {
        ((j - 1) * (self.d - 1) + (i - 1)) as usize
    }

    /// `ω^i_j` for `1 ≤ i ≤ d`; `i = d` comes back expanded.
    pub fn omega(&self, i: u32, j: u32) -> Result<OneForm, ExtAlgError> {
        if i < 1 || i > self.d || j < 1 || j > self.q {
            return Err(ExtAlgError::IndexOutOfRange {
                i,
                j,
                d: self.d,
                q: self.q,
            });
        }
        let mut coeffs = vec![Rational::zero(); self.dim()];
        if i < self.d {
            coeffs[self.index(i, j)] = Rational::one();
        } else {
            for k in 1..self.d {
                coeffs[self.index(k, j)] = -Rational::one();
            }
        }
        Ok(OneForm {
            space: *self,
            coeffs,
        })
    }
}

/// A linear combination of basis one-forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneForm {
    space: FormSpace,
    coeffs: Vec<Rational>,
}

impl OneForm {
    pub fn space(&self) -> FormSpace {
        self.space
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn add(&self, other: &OneForm) -> Result<OneForm, ExtAlgError> {
        if self.space != other.space {
            return Err(ExtAlgError::SpaceMismatch);
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(OneForm {
            space: self.space,
            coeffs,
        })
    }

    pub fn sub(&self, other: &OneForm) -> Result<OneForm, ExtAlgError> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> OneForm {
        OneForm {
            space: self.space,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn to_tensor(&self) -> AlternatingTensor {
        let mut t = AlternatingTensor::zero(self.space, 1);
        for (k, c) in self.coeffs.iter().enumerate() {
            t.accumulate(vec![k], c.clone());
        }
        t
    }
}

/// Element of `∧^p` of a [`FormSpace`], stored sparsely on strictly
/// increasing index tuples. Zero coefficients are never stored, so derived
/// equality is equality of tensors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingTensor {
    space: FormSpace,
    degree: usize,
    coeffs: BTreeMap<Vec<usize>, Rational>,
}

/// Sorts `indices` in place and returns the permutation sign, or `None` if
/// an index repeats.
fn normalize(indices: &mut [usize]) -> Option<i64> {
    let mut swaps = 0usize;
    for a in 0..indices.len() {
        for b in 0..indices.len() - 1 - a {
            if indices[b] > indices[b + 1] {
                indices.swap(b, b + 1);
                swaps += 1;
            }
        }
    }
    if indices.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(if swaps.is_multiple_of(2) { 1 } else { -1 })
}

impl AlternatingTensor {
    pub fn zero(space: FormSpace, degree: usize) -> Self {
        AlternatingTensor {
            space,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn space(&self) -> FormSpace {
        self.space
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Rational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, indices: &[usize]) -> Rational {
        let mut idx = indices.to_vec();
        match normalize(&mut idx) {
            Some(sign) => self
                .coeffs
                .get(&idx)
                .map_or_else(Rational::zero, |c| c * int(sign)),
            None => Rational::zero(),
        }
    }

    /// Adds `c · e_{indices}`; indices may come in any order.
    pub fn accumulate(&mut self, mut indices: Vec<usize>, c: Rational) {
        debug_assert_eq!(indices.len(), self.degree);
        if c.is_zero() {
            return;
        }
        let Some(sign) = normalize(&mut indices) else {
            return;
        };
        let entry = self
            .coeffs
            .entry(indices.clone())
            .or_insert_with(Rational::zero);
        *entry += c * int(sign);
        if entry.is_zero() {
            self.coeffs.remove(&indices);
        }
    }

    fn compatible(&self, other: &Self) -> Result<(), ExtAlgError> {
        if self.space != other.space {
            return Err(ExtAlgError::SpaceMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExtAlgError> {
        self.compatible(other)?;
        if self.degree != other.degree {
            return Err(ExtAlgError::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.accumulate(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExtAlgError> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.space, self.degree);
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(k, v)| (k.clone(), v * c))
            .collect();
        AlternatingTensor {
            space: self.space,
            degree: self.degree,
            coeffs,
        }
    }

    pub fn wedge(&self, other: &Self) -> Result<Self, ExtAlgError> {
        self.compatible(other)?;
        let degree = self.degree + other.degree;
        if degree > self.space.dim() {
            return Err(ExtAlgError::DegreeTooLarge {
                degree,
                dim: self.space.dim(),
            });
        }
        let mut out = Self::zero(self.space, degree);
        for (ka, ca) in &self.coeffs {
            for (kb, cb) in &other.coeffs {
                let mut idx = ka.clone();
                idx.extend_from_slice(kb);
                out.accumulate(idx, ca * cb);
            }
        }
        Ok(out)
    }

    /// `f₁ ∧ … ∧ f_p`.
    pub fn wedge_all(space: FormSpace, forms: &[OneForm]) -> Result<Self, ExtAlgError> {
        let mut acc = Self::zero(space, 0);
        acc.coeffs.insert(Vec::new(), Rational::one());
        for f in forms {
            if f.space != space {
                return Err(ExtAlgError::SpaceMismatch);
            }
            acc = acc.wedge(&f.to_tensor())?;
        }
        Ok(acc)
    }
}

impl fmt::Display for AlternatingTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(k, c)| {
                let basis: Vec<String> = k
                    .iter()
                    .map(|&idx| {
                        let (i, j) = self.space.label(idx);
                        format!("w{i}_{j}")
                    })
                    .collect();
                format!("{}*{}", to_ratio_string(c), basis.join("^"))
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn last_sheet_expands_through_the_relation() {
        let s = FormSpace::new(3, 2).unwrap();
        let w3 = s.omega(3, 2).unwrap();
        let sum = s
            .omega(1, 2)
            .unwrap()
            .add(&s.omega(2, 2).unwrap())
            .unwrap()
            .add(&w3)
            .unwrap();
        assert!(sum.coeffs().iter().all(Zero::is_zero));
        assert!(matches!(
            s.omega(4, 1),
            Err(ExtAlgError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            s.omega(1, 3),
            Err(ExtAlgError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn antisymmetry_of_wedge() {
        let s = FormSpace::new(3, 2).unwrap();
        let a = s.omega(1, 1).unwrap();
        let b = s.omega(2, 2).unwrap();
        let ab = AlternatingTensor::wedge_all(s, &[a.clone(), b.clone()]).unwrap();
        let ba = AlternatingTensor::wedge_all(s, &[b, a.clone()]).unwrap();
        assert!(ab.add(&ba).unwrap().is_zero());
        assert!(AlternatingTensor::wedge_all(s, &[a.clone(), a])
            .unwrap()
            .is_zero());
    }

    #[test]
    fn degree_is_bounded_by_dimension() {
        let s = FormSpace::new(2, 1).unwrap();
        let w = s.omega(1, 1).unwrap();
        assert_eq!(
            AlternatingTensor::wedge_all(s, &[w.clone(), w]),
            Err(ExtAlgError::DegreeTooLarge { degree: 2, dim: 1 })
        );
    }

    #[test]
    fn coefficient_lookup_respects_order() {
        let s = FormSpace::new(3, 1).unwrap();
        let t = AlternatingTensor::wedge_all(s, &[s.omega(1, 1).unwrap(), s.omega(2, 1).unwrap()])
            .unwrap();
        assert_eq!(t.coefficient(&[0, 1]), int(1));
        assert_eq!(t.coefficient(&[1, 0]), int(-1));
        assert_eq!(t.coefficient(&[1, 1]), int(0));
        assert_eq!(t.to_string(), "1/1*w1_1^w2_1");
    }
}
