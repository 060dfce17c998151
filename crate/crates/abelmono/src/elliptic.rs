use std::fmt;

use lgcheck_core::{hermite_normal_form, int, rat, to_i64, Rational};
use num_traits::{Signed, Zero};

use crate::modular::fmt_complex;
use crate::{reduce_fundamental, AbelMonoError, Sl2, UpperHalfPoint};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_ratios(ren: i64, red: i64, imn: i64, imd: i64) -> Self {
        GaussianRational {
            re: rat(ren, red),
            im: rat(imn, imd),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        GaussianRational {
            re: &self.re * c,
            im: &self.im * c,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        GaussianRational {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn div(&self, o: &Self) -> Self {
        let n = o.norm_sq();
        GaussianRational {
            re: (&self.re * &o.re + &self.im * &o.im) / &n,
            im: (&self.im * &o.re - &self.re * &o.im) / &n,
        }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_complex(&self.re, &self.im, f)
    }
}

/// `ℤw₁ ⊕ ℤw₂ ⊂ ℂ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianLattice {
    w1: GaussianRational,
    w2: GaussianRational,
}

impl GaussianLattice {
    pub fn new(w1: GaussianRational, w2: GaussianRational) -> Result<Self, AbelMonoError> {
        let lat = GaussianLattice { w1, w2 };
        if lat.oriented_area().is_zero() {
            return Err(AbelMonoError::DependentGenerators);
        }
        Ok(lat)
    }

    pub fn generators(&self) -> (&GaussianRational, &GaussianRational) {
        (&self.w1, &self.w2)
    }

    fn oriented_area(&self) -> Rational {
        &self.w1.re * &self.w2.im - &self.w1.im * &self.w2.re
    }

    pub fn covolume(&self) -> Rational {
        self.oriented_area().abs()
    }

    /// `[self : sub]`; meaningful when `sub ⊂ self`.
    pub fn index_of(&self, sub: &GaussianLattice) -> Rational {
        sub.covolume() / self.covolume()
    }

    /// Real coordinates `(a, b)` with `z = a·w₁ + b·w₂`.
    pub fn coordinates(&self, z: &GaussianRational) -> (Rational, Rational) {
        let det = self.oriented_area();
        let a = (&z.re * &self.w2.im - &z.im * &self.w2.re) / &det;
        let b = (&self.w1.re * &z.im - &self.w1.im * &z.re) / &det;
        (a, b)
    }

    pub fn contains(&self, z: &GaussianRational) -> bool {
        let (a, b) = self.coordinates(z);
        a.is_integer() && b.is_integer()
    }
}

impl fmt::Display for GaussianLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.w1, self.w2)
    }
}

/// `w₁/w₂`, sign-flipped into the upper half plane if needed.
pub fn lattice_to_tau(lat: &GaussianLattice) -> UpperHalfPoint {
    let t = lat.w1.div(&lat.w2);
    let (x, y) = if t.im.is_negative() {
        (-t.re, -t.im)
    } else {
        (t.re, t.im)
    };
    UpperHalfPoint::new(x, y).expect("independent generators give a non-real ratio")
}

/// Basis of `lat + ℤ·h` for a 2-torsion representative `h`.
pub fn quotient_lattice(
    lat: &GaussianLattice,
    h: &GaussianRational,
) -> Result<GaussianLattice, AbelMonoError> {
    let (a, b) = lat.coordinates(h);
    let two = int(2);
    let (a2, b2) = match (to_i64(&(&a * &two)), to_i64(&(&b * &two))) {
        (Some(x), Some(y)) => (x, y),
        _ => return Err(AbelMonoError::NotTwoTorsion(h.to_string())),
    };
    let rows = hermite_normal_form(&[vec![2, 0], vec![0, 2], vec![a2, b2]]);
    debug_assert_eq!(rows.len(), 2);
    let half = rat(1, 2);
    let gen = |r: &[i64]| {
        lat.w1
            .scale(&(int(r[0]) * &half))
            .add(&lat.w2.scale(&(int(r[1]) * &half)))
    };
    GaussianLattice::new(gen(&rows[0]), gen(&rows[1]))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllipticEntry {
    pub label: &'static str,
    pub halfperiod: GaussianRational,
    pub quotient: GaussianLattice,
    pub index: Rational,
    pub tau: UpperHalfPoint,
    pub canonical: UpperHalfPoint,
    pub transform: Sl2,
    pub expected: UpperHalfPoint,
}

impl EllipticEntry {
    pub fn matches(&self) -> bool {
        self.canonical == self.expected
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllipticReport {
    pub base: GaussianLattice,
    pub entries: Vec<EllipticEntry>,
}

impl EllipticReport {
    pub fn all_match(&self) -> bool {
        self.entries.iter().all(EllipticEntry::matches)
    }

    pub fn pairwise_distinct(&self) -> bool {
        let e = &self.entries;
        (0..e.len()).all(|i| (0..i).all(|j| e[i].canonical != e[j].canonical))
    }
}

/// Quotients of `E = ℂ/(2iℤ ⊕ ℤ)` by its three 2-torsion points
/// `i`, `1/2`, `1/2 + i`, reduced to canonical form.
pub fn elliptic_quotients_check() -> Result<EllipticReport, AbelMonoError> {
    let base = GaussianLattice::new(
        GaussianRational::from_ratios(0, 1, 2, 1),
        GaussianRational::from_ratios(1, 1, 0, 1),
    )?;
    let cases = [
        (
            "e1",
            GaussianRational::from_ratios(0, 1, 1, 1),
            UpperHalfPoint::from_ratios(0, 1, 1, 1)?,
        ),
        (
            "e2",
            GaussianRational::from_ratios(1, 2, 0, 1),
            UpperHalfPoint::from_ratios(0, 1, 4, 1)?,
        ),
        (
            "e3",
            GaussianRational::from_ratios(1, 2, 1, 1),
            UpperHalfPoint::from_ratios(0, 1, 2, 1)?,
        ),
    ];
    let mut entries = Vec::with_capacity(cases.len());
    for (label, halfperiod, expected) in cases {
        let quotient = quotient_lattice(&base, &halfperiod)?;
        let index = quotient.index_of(&base);
        let tau = lattice_to_tau(&quotient);
        let (canonical, transform) = reduce_fundamental(&tau)?;
        entries.push(EllipticEntry {
            label,
            halfperiod,
            quotient,
            index,
            tau,
            canonical,
            transform,
            expected,
        });
    }
    for i in 0..entries.len() {
        for j in 0..i {
            if entries[i].canonical == entries[j].canonical {
                return Err(AbelMonoError::CanonicalCollision(
                    entries[j].label.to_string(),
                    entries[i].label.to_string(),
                    entries[i].canonical.to_string(),
                ));
            }
        }
    }
    Ok(EllipticReport { base, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64, c: i64, d: i64) -> GaussianRational {
        GaussianRational::from_ratios(a, b, c, d)
    }

    fn base() -> GaussianLattice {
        GaussianLattice::new(g(0, 1, 2, 1), g(1, 1, 0, 1)).unwrap()
    }

    #[test]
    fn tau_of_lattices() {
        let t = |w1, w2| lattice_to_tau(&GaussianLattice::new(w1, w2).unwrap()).to_string();
        assert_eq!(t(g(0, 1, 2, 1), g(1, 2, 0, 1)), "4i");
        assert_eq!(t(g(1, 2, 1, 1), g(1, 2, 0, 1)), "1+2i");
        assert_eq!(t(g(0, 1, 1, 1), g(1, 1, 0, 1)), "i");
        assert_eq!(t(g(1, 1, 0, 1), g(0, 1, 1, 1)), "i");
    }

    #[test]
    fn quotients_by_half_periods() {
        let b = base();
        let q1 = quotient_lattice(&b, &g(0, 1, 1, 1)).unwrap();
        assert_eq!(q1.generators(), (&g(0, 1, 1, 1), &g(1, 1, 0, 1)));
        let q2 = quotient_lattice(&b, &g(1, 2, 0, 1)).unwrap();
        assert_eq!(q2.generators(), (&g(0, 1, 2, 1), &g(1, 2, 0, 1)));
        for q in [&q1, &q2] {
            assert_eq!(q.index_of(&b), int(2));
            assert!(q.contains(&g(0, 1, 2, 1)) && q.contains(&g(1, 1, 0, 1)));
        }
        let same = quotient_lattice(&b, &g(1, 1, 2, 1)).unwrap();
        assert_eq!(same.index_of(&b), int(1));
        assert!(matches!(
            quotient_lattice(&b, &g(1, 3, 0, 1)),
            Err(AbelMonoError::NotTwoTorsion(_))
        ));
    }

    #[test]
    fn dependent_generators_rejected() {
        assert_eq!(
            GaussianLattice::new(g(1, 1, 1, 1), g(2, 1, 2, 1)),
            Err(AbelMonoError::DependentGenerators)
        );
    }

    #[test]
    fn elliptic_report_contents() {
        let r = elliptic_quotients_check().unwrap();
        let got: Vec<String> = r.entries.iter().map(|e| e.canonical.to_string()).collect();
        assert_eq!(got, ["i", "4i", "1/2+i"]);
        assert!(r.pairwise_distinct());
        assert!(r.entries[0].matches() && r.entries[1].matches());
        assert!(!r.entries[2].matches());
        assert!(r.entries.iter().all(|e| e.index == int(2)));
    }
}
