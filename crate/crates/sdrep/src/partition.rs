use std::fmt;

use lgcheck_core::factorial;

use crate::SdRepError;

/// An integer partition: positive, weakly decreasing parts.
///
/// The derived ordering is lexicographic on the part vector, so sorting a
/// list of partitions of `d` puts `(1,…,1)` first and `(d)` last.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, SdRepError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(SdRepError::InvalidPartition(parts))
        }
    }

    /// A partition that must have weight `d`.
    pub fn of(d: u32, parts: Vec<u32>) -> Result<Self, SdRepError> {
        let p = Self::new(parts)?;
        if p.weight() != d {
            return Err(SdRepError::WeightMismatch {
                expected: d,
                found: p.weight(),
            });
        }
        Ok(p)
    }

    pub(crate) fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// All partitions of `d`, lexicographically increasing.
    pub fn all(d: u32) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in 1..=rest.min(max) {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(d, d, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// Order of the centralizer of a permutation with this cycle type:
    /// `∏ i^{m_i} · m_i!`.
    pub fn centralizer_order(&self) -> u64 {
        let mut z = 1u64;
        let mut i = 0;
        while i < self.0.len() {
            let part = self.0[i];
            let mut m = 0u64;
            while i < self.0.len() && self.0[i] == part {
                m += 1;
                i += 1;
            }
            z *= u64::from(part).pow(m as u32) * factorial(m);
        }
        z
    }

    pub fn class_size(&self) -> u64 {
        factorial(u64::from(self.weight())) / self.centralizer_order()
    }

    /// Cycle type of `g^k` when `g` has this cycle type: an `ℓ`-cycle
    /// splits into `gcd(ℓ, k)` cycles of length `ℓ / gcd(ℓ, k)`.
    pub fn power(&self, k: u32) -> Partition {
        let mut parts = Vec::new();
        for &l in &self.0 {
            let g = gcd(l, k);
            parts.extend(std::iter::repeat_n(l / g, g as usize));
        }
        Partition::from_unsorted(parts)
    }

    pub fn fixed_points(&self) -> u32 {
        self.0.iter().filter(|&&p| p == 1).count() as u32
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32)
                .collect(),
        )
    }

    /// Dimension of the irreducible labelled by this partition, by the
    /// hook-length formula.
    pub fn hook_dimension(&self) -> u64 {
        let conj = self.conjugate();
        let mut hooks = 1u64;
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.0[j as usize] - i as u32 - 1;
                hooks *= u64::from(arm + leg + 1);
            }
        }
        factorial(u64::from(self.weight())) / hooks
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(
            Partition::of(4, vec![2, 1]),
            Err(SdRepError::WeightMismatch {
                expected: 4,
                found: 3
            })
        );
    }

    #[test]
    fn enumeration_order_puts_identity_first() {
        let all: Vec<String> = Partition::all(4).iter().map(ToString::to_string).collect();
        assert_eq!(all, ["(1,1,1,1)", "(2,1,1)", "(2,2)", "(3,1)", "(4)"]);
        let counts: Vec<usize> = (1..=10).map(|d| Partition::all(d).len()).collect();
        assert_eq!(counts, [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn powers_of_cycle_types() {
        let p = Partition::new(vec![6, 2]).unwrap();
        assert_eq!(p.power(2).parts(), &[3, 3, 1, 1]);
        assert_eq!(p.power(3).parts(), &[2, 2, 2, 2]);
        assert_eq!(p.power(6).parts(), &[1; 8]);
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(Partition::new(vec![3, 1]).unwrap().hook_dimension(), 3);
        assert_eq!(Partition::new(vec![2, 2]).unwrap().hook_dimension(), 2);
        assert_eq!(Partition::new(vec![3, 2]).unwrap().hook_dimension(), 5);
        assert_eq!(Partition::new(vec![4, 2, 1]).unwrap().hook_dimension(), 35);
    }
}
