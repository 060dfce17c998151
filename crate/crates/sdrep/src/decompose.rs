use std::collections::BTreeMap;
use std::fmt;

use lgcheck_core::{int, to_i64, to_ratio_string};
use num_traits::Signed;

use crate::character::{character_table, irreducible_character, ClassFunction};
use crate::partition::Partition;
use crate::SdRepError;

/// A representation of S_d as multiplicities of irreducibles. Zero
/// multiplicities are not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepDecomposition {
    d: u32,
    terms: BTreeMap<Partition, u64>,
}

impl RepDecomposition {
    pub fn new(
        d: u32,
        terms: impl IntoIterator<Item = (Partition, u64)>,
    ) -> Result<Self, SdRepError> {
        character_table(d)?;
        let mut map = BTreeMap::new();
        for (p, m) in terms {
            if p.weight() != d {
                return Err(SdRepError::WeightMismatch {
                    expected: d,
                    found: p.weight(),
                });
            }
            if m > 0 {
                *map.entry(p).or_insert(0) += m;
            }
        }
        Ok(RepDecomposition { d, terms: map })
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn terms(&self) -> &BTreeMap<Partition, u64> {
        &self.terms
    }

    pub fn multiplicity(&self, label: &Partition) -> u64 {
        self.terms.get(label).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> u64 {
        self.terms.iter().map(|(p, m)| m * p.hook_dimension()).sum()
    }

    /// The character `Σ m_λ χ_λ`.
    pub fn character(&self) -> ClassFunction {
        let mut acc = ClassFunction::constant(self.d, int(0)).expect("degree validated");
        for (p, &m) in &self.terms {
            let chi = irreducible_character(self.d, p).expect("label validated");
            acc = acc.add(&chi.scale(&int(m as i64))).expect("same group");
        }
        acc
    }
}

impl fmt::Display for RepDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // largest label first reads naturally: trivial, …, sign
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(p, m)| format!("{p}^{m}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Multiplicities `⟨χ, χ_λ⟩` for every irreducible `λ`. Anything other than
/// a non-negative integer means `chi` is not the character of a
/// representation, and the offending labels are reported.
pub fn decompose(chi: &ClassFunction) -> Result<RepDecomposition, SdRepError> {
    let d = chi.degree();
    let t = character_table(d)?;
    let mut terms = Vec::new();
    let mut offending = Vec::new();
    for label in t.labels() {
        let m = chi.inner(&irreducible_character(d, label)?)?;
        match to_i64(&m) {
            Some(v) if !m.is_negative() => terms.push((label.clone(), v as u64)),
            _ => offending.push((label.clone(), to_ratio_string(&m))),
        }
    }
    if !offending.is_empty() {
        return Err(SdRepError::NotACharacter { offending });
    }
    RepDecomposition::new(d, terms)
}
