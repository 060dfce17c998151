use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::NsError;

/// Integer coordinates over a lattice basis.
///
/// Blow-ups only ever append basis classes, so arithmetic between classes of
/// different lengths pads the shorter one with zeros, which is the total
/// transform (pullback) of the older class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivisorClass(Vec<i64>);

impl DivisorClass {
    pub fn new(coords: Vec<i64>) -> Self {
        DivisorClass(coords)
    }

    pub fn zero(rank: usize) -> Self {
        DivisorClass(vec![0; rank])
    }

    pub fn basis(rank: usize, idx: usize) -> Self {
        let mut v = vec![0; rank];
        v[idx] = 1;
        DivisorClass(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn coord(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Pads with zeros up to `rank`; never truncates.
    pub fn pulled_back(&self, rank: usize) -> Self {
        let mut v = self.0.clone();
        if v.len() < rank {
            v.resize(rank, 0);
        }
        DivisorClass(v)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(i64, i64) -> i64) -> Self {
        let n = self.len().max(other.len());
        DivisorClass((0..n).map(|i| f(self.coord(i), other.coord(i))).collect())
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass(self.0.iter().map(|x| -x).collect())
    }
}

impl Mul<&DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, rhs: &DivisorClass) -> DivisorClass {
        DivisorClass(rhs.0.iter().map(|x| self * x).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for DivisorClass {
            type Output = DivisorClass;
            fn $m(self, rhs: DivisorClass) -> DivisorClass {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&DivisorClass> for DivisorClass {
            type Output = DivisorClass;
            fn $m(self, rhs: &DivisorClass) -> DivisorClass {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);

impl Mul<DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, rhs: DivisorClass) -> DivisorClass {
        self * &rhs
    }
}

impl std::iter::Sum for DivisorClass {
    fn sum<I: Iterator<Item = DivisorClass>>(iter: I) -> DivisorClass {
        iter.fold(DivisorClass::zero(0), |a, b| a + b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassKind {
    Polarization,
    ExceptionalTotal,
    Abstract,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parent {
    GenericPoint,
    /// A point on the strict transform of the named exceptional curve.
    On(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowUpRecord {
    pub name: String,
    pub parent: Parent,
}

impl BlowUpRecord {
    pub fn generic(name: impl Into<String>) -> Self {
        BlowUpRecord {
            name: name.into(),
            parent: Parent::GenericPoint,
        }
    }

    pub fn on(name: impl Into<String>, parent: impl Into<String>) -> Self {
        BlowUpRecord {
            name: name.into(),
            parent: Parent::On(parent.into()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct BasisClass {
    name: String,
    kind: ClassKind,
    parent: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceLattice {
    basis: Vec<BasisClass>,
    gram: Vec<Vec<i64>>,
    canonical: DivisorClass,
    euler: i64,
    chi: i64,
}

impl SurfaceLattice {
    /// A lattice from raw data. Every class is marked [`ClassKind::Abstract`]
    /// except the ones listed in `kinds`.
    pub fn from_gram(
        names: &[&str],
        kinds: &[ClassKind],
        gram: Vec<Vec<i64>>,
        canonical: DivisorClass,
        euler: i64,
        chi: i64,
    ) -> Result<Self, NsError> {
        let n = names.len();
        if gram.len() != n || gram.iter().any(|r| r.len() != n) {
            return Err(NsError::DimensionMismatch {
                expected: n,
                found: gram.len(),
            });
        }
        if canonical.len() != n {
            return Err(NsError::DimensionMismatch {
                expected: n,
                found: canonical.len(),
            });
        }
        if (0..n).any(|i| (0..i).any(|j| gram[i][j] != gram[j][i])) {
            return Err(NsError::AsymmetricGram);
        }
        let mut basis = Vec::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(NsError::DuplicateName(name.to_string()));
            }
            let kind = kinds.get(i).copied().unwrap_or(ClassKind::Abstract);
            basis.push(BasisClass {
                name: name.to_string(),
                kind,
                parent: None,
            });
        }
        Ok(SurfaceLattice {
            basis,
            gram,
            canonical,
            euler,
            chi,
        })
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.basis.iter().map(|b| b.name.as_str())
    }

    pub fn kind(&self, name: &str) -> Result<ClassKind, NsError> {
        Ok(self.basis[self.index_of(name)?].kind)
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn canonical(&self) -> &DivisorClass {
        &self.canonical
    }

    pub fn euler(&self) -> i64 {
        self.euler
    }

    pub fn chi(&self) -> i64 {
        self.chi
    }

    pub fn index_of(&self, name: &str) -> Result<usize, NsError> {
        self.basis
            .iter()
            .position(|b| b.name == name)
            .ok_or_else(|| NsError::UnknownClass(name.to_string()))
    }

    /// The basis class called `name`.
    pub fn class(&self, name: &str) -> Result<DivisorClass, NsError> {
        Ok(DivisorClass::basis(self.rank(), self.index_of(name)?))
    }

    pub fn intersect(&self, a: &DivisorClass, b: &DivisorClass) -> Result<i64, NsError> {
        let n = self.rank();
        for d in [a, b] {
            if d.len() != n {
                return Err(NsError::DimensionMismatch {
                    expected: n,
                    found: d.len(),
                });
            }
        }
        let mut total = 0;
        for (i, row) in self.gram.iter().enumerate() {
            if a.0[i] == 0 {
                continue;
            }
            let partial: i64 = row.iter().zip(&b.0).map(|(g, y)| g * y).sum();
            total += a.0[i] * partial;
        }
        Ok(total)
    }

    pub fn self_intersection(&self, d: &DivisorClass) -> Result<i64, NsError> {
        self.intersect(d, d)
    }

    /// Arithmetic genus `(K·D + D²)/2 + 1`.
    pub fn adjunction_pa(&self, d: &DivisorClass) -> Result<i64, NsError> {
        let twice = self.intersect(&self.canonical, d)? + self.self_intersection(d)?;
        if twice % 2 != 0 {
            return Err(NsError::OddAdjunction(twice));
        }
        Ok(twice / 2 + 1)
    }

    pub fn blow_up(&self, rec: &BlowUpRecord) -> Result<SurfaceLattice, NsError> {
        if self.index_of(&rec.name).is_ok() {
            return Err(NsError::DuplicateName(rec.name.clone()));
        }
        let parent = match &rec.parent {
            Parent::GenericPoint => None,
            Parent::On(p) => {
                let idx = self.index_of(p)?;
                if self.basis[idx].kind != ClassKind::ExceptionalTotal {
                    return Err(NsError::NotExceptional(p.clone()));
                }
                Some(idx)
            }
        };
        let n = self.rank();
        let mut gram: Vec<Vec<i64>> = self
            .gram
            .iter()
            .map(|r| [r.as_slice(), &[0]].concat())
            .collect();
        let mut last = vec![0; n + 1];
        last[n] = -1;
        gram.push(last);
        let mut basis = self.basis.clone();
        basis.push(BasisClass {
            name: rec.name.clone(),
            kind: ClassKind::ExceptionalTotal,
            parent,
        });
        let canonical = self.canonical.pulled_back(n + 1) + DivisorClass::basis(n + 1, n);
        Ok(SurfaceLattice {
            basis,
            gram,
            canonical,
            euler: self.euler + 1,
            chi: self.chi,
        })
    }

    pub fn blow_up_all(&self, recs: &[BlowUpRecord]) -> Result<SurfaceLattice, NsError> {
        recs.iter().try_fold(self.clone(), |lat, r| lat.blow_up(r))
    }

    /// Total class minus the total classes of everything blown up directly
    /// on it. Non-exceptional classes are returned unchanged.
    pub fn strict_transform(&self, name: &str) -> Result<DivisorClass, NsError> {
        let idx = self.index_of(name)?;
        let mut d = DivisorClass::basis(self.rank(), idx);
        for (k, b) in self.basis.iter().enumerate() {
            if b.parent == Some(idx) {
                d.0[k] -= 1;
            }
        }
        Ok(d)
    }

    /// Number of points blown up directly on `name`.
    pub fn children(&self, name: &str) -> Result<usize, NsError> {
        let idx = self.index_of(name)?;
        Ok(self.basis.iter().filter(|b| b.parent == Some(idx)).count())
    }

    /// `a·X + b·Y − …` in this lattice's basis.
    pub fn render(&self, d: &DivisorClass) -> String {
        render_terms(
            d.coords()
                .iter()
                .zip(self.names())
                .map(|(&c, n)| (c, n.to_string())),
        )
    }
}

pub(crate) fn render_terms(terms: impl Iterator<Item = (i64, String)>) -> String {
    let mut out = String::new();
    for (c, name) in terms.filter(|(c, _)| *c != 0) {
        let sign = if c < 0 { "-" } else { "+" };
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        if c.abs() != 1 {
            out.push_str(&format!("{}*", c.abs()));
        }
        out.push_str(&name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// An abelian surface with a `(1,2)` polarization `L`, `L² = 4`.
pub fn make_abelian_12() -> SurfaceLattice {
    SurfaceLattice::from_gram(
        &["L"],
        &[ClassKind::Polarization],
        vec![vec![4]],
        DivisorClass::zero(1),
        0,
        0,
    )
    .expect("fixed data is well formed")
}

/// The Hirzebruch surface `F_e` on `{C₀, f}`.
pub fn make_hirzebruch(e: u32) -> SurfaceLattice {
    let e = e as i64;
    SurfaceLattice::from_gram(
        &["C0", "f"],
        &[],
        vec![vec![-e, 1], vec![1, 0]],
        DivisorClass::new(vec![-2, -(e + 2)]),
        4,
        1,
    )
    .expect("fixed data is well formed")
}
