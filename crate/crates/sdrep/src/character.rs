use std::collections::HashMap;
use std::sync::OnceLock;

use lgcheck_core::{factorial, int, Rational};
use num_traits::{One, Zero};

use crate::partition::Partition;
use crate::{check_degree, SdRepError, MAX_DEGREE};

/// The irreducible characters of S_d, one row per irreducible label and one
/// column per conjugacy class, both in [`Partition::all`] order.
#[derive(Debug)]
pub struct CharacterTable {
    d: u32,
    labels: Vec<Partition>,
    class_sizes: Vec<u64>,
    rows: Vec<Vec<i64>>,
}

impl CharacterTable {
    fn compute(d: u32) -> Self {
        let labels = Partition::all(d);
        let class_sizes = labels.iter().map(Partition::class_size).collect();
        let mut memo = HashMap::new();
        let rows = labels
            .iter()
            .map(|lambda| {
                labels
                    .iter()
                    .map(|mu| murnaghan_nakayama(lambda.parts(), mu.parts(), &mut memo))
                    .collect()
            })
            .collect();
        CharacterTable {
            d,
            labels,
            class_sizes,
            rows,
        }
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.labels.binary_search(p).ok()
    }

    pub fn row(&self, label: &Partition) -> Option<&[i64]> {
        self.index_of(label).map(|i| self.rows[i].as_slice())
    }
}

static TABLES: [OnceLock<CharacterTable>; MAX_DEGREE as usize] =
    [const { OnceLock::new() }; MAX_DEGREE as usize];

/// Character table of S_d, computed once per degree and shared.
pub fn character_table(d: u32) -> Result<&'static CharacterTable, SdRepError> {
    check_degree(d, 1)?;
    Ok(TABLES[(d - 1) as usize].get_or_init(|| CharacterTable::compute(d)))
}

/// χ^λ(μ) by rim-hook removal on the β-set (first-column hook lengths) of λ.
/// Removing an `r`-hook moves one bead from `b` to `b - r`; the sign is the
/// parity of the beads jumped over.
fn murnaghan_nakayama(
    lambda: &[u32],
    mu: &[u32],
    memo: &mut HashMap<(Vec<u32>, Vec<u32>), i64>,
) -> i64 {
    if mu.is_empty() {
        return i64::from(lambda.is_empty());
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = mu[0];
    let len = lambda.len() as u32;
    let beta: Vec<u32> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i as u32)
        .collect();
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let shape: Vec<u32> = next
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (len - 1 - i as u32))
            .filter(|&p| p > 0)
            .collect();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * murnaghan_nakayama(&shape, &mu[1..], memo);
    }
    memo.insert(key, total);
    total
}

/// All conjugacy classes of S_d with their sizes. The sizes sum to `d!`.
pub fn conjugacy_classes(d: u32) -> Result<Vec<(Partition, u64)>, SdRepError> {
    let t = character_table(d)?;
    Ok(t.labels
        .iter()
        .cloned()
        .zip(t.class_sizes.iter().copied())
        .collect())
}

/// A ℚ-valued function on the conjugacy classes of S_d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    d: u32,
    values: Vec<Rational>,
}

impl ClassFunction {
    /// Values must be listed in [`Partition::all`] order.
    pub fn new(d: u32, values: Vec<Rational>) -> Result<Self, SdRepError> {
        check_degree(d, 1)?;
        let expected = Partition::all(d).len();
        if values.len() != expected {
            return Err(SdRepError::WrongValueCount {
                d,
                expected,
                found: values.len(),
            });
        }
        Ok(ClassFunction { d, values })
    }

    pub fn from_integers(d: u32, values: &[i64]) -> Result<Self, SdRepError> {
        Self::new(d, values.iter().map(|&v| int(v)).collect())
    }

    pub fn constant(d: u32, c: Rational) -> Result<Self, SdRepError> {
        let n = character_table(d)?.labels.len();
        Ok(ClassFunction {
            d,
            values: vec![c; n],
        })
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, class: &Partition) -> Option<&Rational> {
        let t = character_table(self.d).ok()?;
        t.index_of(class).map(|i| &self.values[i])
    }

    /// Value at the identity class, i.e. the dimension of a representation.
    pub fn dimension(&self) -> &Rational {
        &self.values[0]
    }

    fn same_group(&self, other: &Self) -> Result<(), SdRepError> {
        if self.d != other.d {
            return Err(SdRepError::DegreeMismatch {
                left: self.d,
                right: other.d,
            });
        }
        Ok(())
    }

    /// Direct sum.
    pub fn add(&self, other: &Self) -> Result<Self, SdRepError> {
        self.same_group(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a + b)
            .collect();
        Ok(ClassFunction { d: self.d, values })
    }

    /// Tensor product (pointwise product).
    pub fn mul(&self, other: &Self) -> Result<Self, SdRepError> {
        self.same_group(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b)
            .collect();
        Ok(ClassFunction { d: self.d, values })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ClassFunction {
            d: self.d,
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    /// `⟨χ, ψ⟩ = (1/d!) Σ_c |c| χ(c) ψ(c)`. Characters here are real, so no
    /// conjugation is needed.
    pub fn inner(&self, other: &Self) -> Result<Rational, SdRepError> {
        self.same_group(other)?;
        let t = character_table(self.d)?;
        let sum = self
            .values
            .iter()
            .zip(&other.values)
            .zip(&t.class_sizes)
            .fold(Rational::zero(), |acc, ((a, b), &size)| {
                acc + a * b * int(size as i64)
            });
        Ok(sum / int(factorial(u64::from(self.d)) as i64))
    }

    /// The class function `g ↦ χ(g^k)`.
    pub fn adams(&self, k: u32) -> Self {
        let t = character_table(self.d).expect("degree validated at construction");
        let values = t
            .labels
            .iter()
            .map(|c| {
                let i = t
                    .index_of(&c.power(k))
                    .expect("power of a class is a class");
                self.values[i].clone()
            })
            .collect();
        ClassFunction { d: self.d, values }
    }
}

pub fn irreducible_character(d: u32, label: &Partition) -> Result<ClassFunction, SdRepError> {
    check_degree(d, 1)?;
    if label.weight() != d {
        return Err(SdRepError::WeightMismatch {
            expected: d,
            found: label.weight(),
        });
    }
    let t = character_table(d)?;
    let row = t.row(label).expect("label is a partition of d");
    ClassFunction::from_integers(d, row)
}

pub fn trivial_character(d: u32) -> Result<ClassFunction, SdRepError> {
    ClassFunction::constant(d, Rational::one())
}

pub fn sign_character(d: u32) -> Result<ClassFunction, SdRepError> {
    irreducible_character(d, &Partition::new(vec![1; d as usize])?)
}

/// The standard representation on zero-sum vectors: `fix(σ) − 1`.
pub fn standard_character(d: u32) -> Result<ClassFunction, SdRepError> {
    check_degree(d, 2)?;
    let values = Partition::all(d)
        .iter()
        .map(|c| int(i64::from(c.fixed_points()) - 1))
        .collect();
    ClassFunction::new(d, values)
}

/// Character of `∧^p V` from the character of `V`, via
/// `m·e_m = Σ_{k=1}^{m} (−1)^{k−1} ψ_k · e_{m−k}` with `ψ_k(g) = χ(g^k)`.
pub fn ext_power_character(chi: &ClassFunction, p: u32) -> ClassFunction {
    newton(chi, p, true)
}

/// Character of `Sym^k V`, via `m·h_m = Σ_{i=1}^{m} ψ_i · h_{m−i}`.
pub fn sym_power_character(chi: &ClassFunction, k: u32) -> ClassFunction {
    newton(chi, k, false)
}

fn newton(chi: &ClassFunction, n: u32, alternating: bool) -> ClassFunction {
    let n_classes = chi.values.len();
    let adams: Vec<ClassFunction> = (1..=n).map(|k| chi.adams(k)).collect();
    let mut seq: Vec<Vec<Rational>> = vec![vec![Rational::one(); n_classes]];
    for m in 1..=n as usize {
        let mut next = vec![Rational::zero(); n_classes];
        for k in 1..=m {
            let negate = alternating && k % 2 == 0;
            for c in 0..n_classes {
                let term = &adams[k - 1].values[c] * &seq[m - k][c];
                if negate {
                    next[c] -= term;
                } else {
                    next[c] += term;
                }
            }
        }
        let m_q = int(m as i64);
        seq.push(next.into_iter().map(|v| v / &m_q).collect());
    }
    ClassFunction {
        d: chi.d,
        values: seq.pop().expect("sequence starts non-empty"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lgcheck_core::rat;

    fn ints(f: &ClassFunction) -> Vec<i64> {
        f.values()
            .iter()
            .map(|v| lgcheck_core::to_i64(v).unwrap())
            .collect()
    }

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn classes_of_small_groups() {
        assert_eq!(conjugacy_classes(1).unwrap(), vec![(part(&[1]), 1)]);
        assert_eq!(
            conjugacy_classes(3).unwrap(),
            vec![(part(&[1, 1, 1]), 1), (part(&[2, 1]), 3), (part(&[3]), 2)]
        );
        assert!(matches!(
            conjugacy_classes(0),
            Err(SdRepError::DegreeOutOfRange { .. })
        ));
        assert!(matches!(
            conjugacy_classes(11),
            Err(SdRepError::DegreeOutOfRange { .. })
        ));
    }

    #[test]
    fn s3_irreducibles() {
        assert_eq!(
            ints(&irreducible_character(3, &part(&[3])).unwrap()),
            [1, 1, 1]
        );
        assert_eq!(
            ints(&irreducible_character(3, &part(&[2, 1])).unwrap()),
            [2, 0, -1]
        );
        assert_eq!(
            ints(&irreducible_character(3, &part(&[1, 1, 1])).unwrap()),
            [1, -1, 1]
        );
        assert_eq!(
            irreducible_character(4, &part(&[2, 1])),
            Err(SdRepError::WeightMismatch {
                expected: 4,
                found: 3
            })
        );
    }

    #[test]
    fn standard_characters() {
        assert_eq!(ints(&standard_character(2).unwrap()), [1, -1]);
        assert_eq!(ints(&standard_character(3).unwrap()), [2, 0, -1]);
        let five = standard_character(5).unwrap();
        assert_eq!(five.value(&part(&[5])), Some(&int(-1)));
        assert!(standard_character(1).is_err());
    }

    #[test]
    fn exterior_and_symmetric_powers_of_the_s3_standard() {
        let g = standard_character(3).unwrap();
        assert_eq!(ints(&ext_power_character(&g, 0)), [1, 1, 1]);
        assert_eq!(ints(&ext_power_character(&g, 2)), [1, -1, 1]);
        assert_eq!(ints(&sym_power_character(&g, 1)), ints(&g));
        assert_eq!(ints(&sym_power_character(&g, 2)), [3, 1, 0]);
        assert_eq!(sym_power_character(&g, 3).dimension(), &int(4));
        let gg = g.add(&g).unwrap();
        assert_eq!(ext_power_character(&gg, 2).dimension(), &int(6));
    }

    #[test]
    fn inner_products_are_exact() {
        let g = standard_character(3).unwrap();
        let sym2 = sym_power_character(&g, 2);
        let triv = trivial_character(3).unwrap();
        assert_eq!(sym2.inner(&triv).unwrap(), int(1));
        let half = ClassFunction::new(3, vec![rat(1, 2), int(0), int(0)]).unwrap();
        assert_eq!(half.inner(&triv).unwrap(), rat(1, 12));
        let other = trivial_character(4).unwrap();
        assert!(matches!(
            g.inner(&other),
            Err(SdRepError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn rejects_wrong_value_count() {
        assert_eq!(
            ClassFunction::from_integers(3, &[1, 1]),
            Err(SdRepError::WrongValueCount {
                d: 3,
                expected: 3,
                found: 2
            })
        );
    }
}
