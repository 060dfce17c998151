use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::{AbelMonoError, IntMatrix4, SymplecticForm};

/// Upper bound on explicit subgroup enumeration.
pub const CLOSURE_CAP: usize = 1_000_000;

/// The torsion point `(a₁λ₁ + a₂λ₂ + b₁μ₁ + b₂μ₂)/n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorsionVector {
    n: u32,
    coords: [u32; 4],
}

impl TorsionVector {
    pub fn new(n: u32, coords: [i64; 4]) -> Result<Self, AbelMonoError> {
        if n < 2 {
            return Err(AbelMonoError::InvalidModulus(n));
        }
        Ok(TorsionVector {
            n,
            coords: coords.map(|c| c.rem_euclid(n as i64) as u32),
        })
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    pub fn coords(&self) -> [u32; 4] {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords == [0; 4]
    }

    /// All `n⁴` vectors, in lexicographic order.
    pub fn all(n: u32) -> Result<Vec<TorsionVector>, AbelMonoError> {
        let n_i = n as i64;
        let mut out = Vec::with_capacity((n_i * n_i * n_i * n_i) as usize);
        for a in 0..n_i {
            for b in 0..n_i {
                for c in 0..n_i {
                    for d in 0..n_i {
                        out.push(TorsionVector::new(n, [a, b, c, d])?);
                    }
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for TorsionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.coords;
        write!(f, "({a},{b},{c},{d})")
    }
}

/// Image of `v` under the basis change `R`: `v·R mod n`.
pub fn act(r: &IntMatrix4, v: &TorsionVector) -> TorsionVector {
    let mut out = [0i64; 4];
    for (j, cell) in out.iter_mut().enumerate() {
        *cell = (0..4).map(|i| v.coords[i] as i64 * r.0[i][j]).sum();
    }
    TorsionVector::new(v.n, out).expect("modulus already validated")
}

/// `v·J·wᵗ mod n`.
pub fn pairing(
    form: &SymplecticForm,
    v: &TorsionVector,
    w: &TorsionVector,
) -> Result<u32, AbelMonoError> {
    if v.n != w.n {
        return Err(AbelMonoError::ModulusMismatch(v.n, w.n));
    }
    let mut total = 0i64;
    for i in 0..4 {
        for j in 0..4 {
            total += v.coords[i] as i64 * form.j.0[i][j] * w.coords[j] as i64;
        }
    }
    Ok(total.rem_euclid(v.n as i64) as u32)
}

fn inverse_of_unit(a: i64, n: i64) -> Option<i64> {
    let (mut r0, mut r1) = (a.rem_euclid(n), n);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    (r0 == 1).then(|| s0.rem_euclid(n))
}

fn minor(m: &IntMatrix4, row: usize, col: usize) -> i64 {
    let sub: Vec<Vec<i64>> = (0..4)
        .filter(|&i| i != row)
        .map(|i| (0..4).filter(|&j| j != col).map(|j| m.0[i][j]).collect())
        .collect();
    lgcheck_core::det_i64(&sub)
}

/// `R⁻¹ mod n` through the adjugate, entries in `[0, n)`.
pub fn inverse_mod(r: &IntMatrix4, n: u32) -> Result<IntMatrix4, AbelMonoError> {
    if n < 2 {
        return Err(AbelMonoError::InvalidModulus(n));
    }
    let det = r.det();
    let inv = inverse_of_unit(det, n as i64).ok_or(AbelMonoError::NotInvertible { det, n })?;
    let mut out = [[0i64; 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            *cell = (sign * minor(r, j, i) * inv).rem_euclid(n as i64);
        }
    }
    Ok(IntMatrix4(out))
}

fn with_inverses(gens: &[IntMatrix4], n: u32) -> Result<Vec<IntMatrix4>, AbelMonoError> {
    let mut all = Vec::with_capacity(2 * gens.len());
    for g in gens {
        all.push(g.reduce_mod(n));
        all.push(inverse_mod(g, n)?);
    }
    Ok(all)
}

/// Breadth-first closure of `{v0}` under the generators and their inverses.
pub fn orbit(
    v0: &TorsionVector,
    gens: &[IntMatrix4],
) -> Result<BTreeSet<TorsionVector>, AbelMonoError> {
    let moves = with_inverses(gens, v0.n)?;
    let mut seen = BTreeSet::from([*v0]);
    let mut queue = VecDeque::from([*v0]);
    while let Some(v) = queue.pop_front() {
        for g in &moves {
            let w = act(g, &v);
            if seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    Ok(seen)
}

/// Order of the subgroup of `GL₄(ℤ/n)` generated by `gens`.
pub fn group_order(gens: &[IntMatrix4], n: u32) -> Result<usize, AbelMonoError> {
    let moves = with_inverses(gens, n)?;
    let id = IntMatrix4::IDENTITY.reduce_mod(n);
    let mut seen = BTreeSet::from([id]);
    let mut queue = VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        for g in &moves {
            let p = m.mul(g).reduce_mod(n);
            if seen.insert(p) {
                if seen.len() > CLOSURE_CAP {
                    return Err(AbelMonoError::ClosureCapExceeded(CLOSURE_CAP));
                }
                queue.push_back(p);
            }
        }
    }
    Ok(seen.len())
}

/// Nonzero `v` mod `n` with `v·J ≡ 0`, i.e. the nonzero points of the
/// kernel of the polarization isogeny restricted to `n`-torsion.
pub fn kernel_of_polarization(
    form: &SymplecticForm,
    n: u32,
) -> Result<BTreeSet<TorsionVector>, AbelMonoError> {
    let mut out = BTreeSet::new();
    for v in TorsionVector::all(n)? {
        if v.is_zero() {
            continue;
        }
        let pairs_trivially = (0..4).all(|j| {
            let s: i64 = (0..4).map(|i| v.coords[i] as i64 * form.j.0[i][j]).sum();
            s.rem_euclid(n as i64) == 0
        });
        if pairs_trivially {
            out.insert(v);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoTorsionReport {
    /// Orbits on the 15 nonzero 2-torsion points, largest first, ties by
    /// smallest element.
    pub orbits: Vec<BTreeSet<TorsionVector>>,
    pub kernel: BTreeSet<TorsionVector>,
    pub covered: usize,
}

impl TwoTorsionReport {
    pub fn shape(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.orbits.iter().map(BTreeSet::len).collect();
        s.sort_unstable();
        s
    }

    pub fn is_three_twelve(&self) -> bool {
        self.shape() == [3, 12]
    }
}

pub fn two_torsion_report(gens: &[IntMatrix4]) -> Result<TwoTorsionReport, AbelMonoError> {
    let kernel = kernel_of_polarization(&SymplecticForm::gamma_d(), 2)?;
    let mut remaining: BTreeSet<TorsionVector> = TorsionVector::all(2)?
        .into_iter()
        .filter(|v| !v.is_zero())
        .collect();
    let mut orbits = Vec::new();
    while let Some(&v) = remaining.iter().next() {
        let o = orbit(&v, gens)?;
        for w in &o {
            remaining.remove(w);
        }
        let inside = o.iter().filter(|w| kernel.contains(w)).count();
        if inside != 0 && inside != o.len() {
            return Err(AbelMonoError::KernelNotInvariant(v.to_string()));
        }
        orbits.push(o);
    }
    orbits.sort_by(|a, b| {
        b.len()
            .cmp(&a.len())
            .then_with(|| a.iter().next().cmp(&b.iter().next()))
    });
    let covered = orbits.iter().map(BTreeSet::len).sum();
    Ok(TwoTorsionReport {
        orbits,
        kernel,
        covered,
    })
}
