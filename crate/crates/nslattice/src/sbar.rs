use lgcheck_core::{int, solve_unique, to_i64, Rational};

use crate::lattice::render_terms;
use crate::{make_abelian_12, mismatch, BlowUpRecord, DivisorClass, NsError, SurfaceLattice};

/// `S̄`: the abelian surface blown up at the four base points `E₀…E₃` of
/// the pencil, then twice on each of `E₁, E₂, E₃` (the points `G_{1k}`,
/// `G_{2k}`).
#[derive(Debug, Clone)]
pub struct Sbar {
    pub lattice: SurfaceLattice,
    pub l: DivisorClass,
    /// Total transforms `E₀ᵗ…E₃ᵗ`.
    pub e_total: [DivisorClass; 4],
    /// Strict transforms `E₀…E₃`.
    pub e: [DivisorClass; 4],
    /// `G_{jk}` in the order `G₁₁, G₂₁, G₁₂, G₂₂, G₁₃, G₂₃`.
    pub g: [DivisorClass; 6],
    pub f: DivisorClass,
    pub k: DivisorClass,
}

pub const G_NAMES: [&str; 6] = ["G11", "G21", "G12", "G22", "G13", "G23"];

/// Solved ansatz `B = −2R + 10(E₁+E₂+E₃) + mF + Σ n_{jk} G_{jk}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchSolution {
    pub class: DivisorClass,
    pub m: i64,
    pub n: [i64; 6],
}

pub fn build_sbar() -> Result<Sbar, NsError> {
    let mut recs: Vec<BlowUpRecord> = (0..4)
        .map(|k| BlowUpRecord::generic(format!("E{k}")))
        .collect();
    for k in 1..=3 {
        for j in 1..=2 {
            recs.push(BlowUpRecord::on(format!("G{j}{k}"), format!("E{k}")));
        }
    }
    let lattice = make_abelian_12().blow_up_all(&recs)?;
    let class = |n: &str| lattice.class(n);
    let l = class("L")?;
    let e_total = [class("E0")?, class("E1")?, class("E2")?, class("E3")?];
    let e = [
        lattice.strict_transform("E0")?,
        lattice.strict_transform("E1")?,
        lattice.strict_transform("E2")?,
        lattice.strict_transform("E3")?,
    ];
    let mut g = Vec::with_capacity(6);
    for name in G_NAMES {
        g.push(class(name)?);
    }
    let g: [DivisorClass; 6] = g.try_into().expect("six classes");
    let f = &l - &e_total.iter().cloned().sum::<DivisorClass>();
    let k = lattice.canonical().clone();
    let sbar = Sbar {
        lattice,
        l,
        e_total,
        e,
        g,
        f,
        k,
    };

    let dot = |a: &DivisorClass, b: &DivisorClass| sbar.lattice.intersect(a, b);
    let ff = dot(&sbar.f, &sbar.f)?;
    if ff != 0 {
        return Err(mismatch("F·F", 0, ff));
    }
    for ek in &sbar.e {
        let v = dot(&sbar.f, ek)?;
        if v != 1 {
            return Err(mismatch("F·E_k", 1, v));
        }
    }
    for gk in &sbar.g {
        let v = dot(&sbar.f, gk)?;
        if v != 0 {
            return Err(mismatch("F·G_jk", 0, v));
        }
    }
    Ok(sbar)
}

impl Sbar {
    pub fn intersect(&self, a: &DivisorClass, b: &DivisorClass) -> Result<i64, NsError> {
        self.lattice.intersect(a, b)
    }

    pub fn sum_e123(&self) -> DivisorClass {
        &(&self.e[1] + &self.e[2]) + &self.e[3]
    }

    pub fn sum_g(&self) -> DivisorClass {
        self.g.iter().cloned().sum()
    }

    /// `γ*` for the triple cover `S̄ → F₃`: `C₀ ↦ E₁+E₂+E₃`, `f ↦ F`.
    pub fn pullback_from_hirzebruch(&self, d: &DivisorClass) -> Result<DivisorClass, NsError> {
        if d.len() != 2 {
            return Err(NsError::DimensionMismatch {
                expected: 2,
                found: d.len(),
            });
        }
        let [c0, fib] = [d.coords()[0], d.coords()[1]];
        Ok(c0 * self.sum_e123() + fib * &self.f)
    }

    /// The class the ramification divisor must have.
    pub fn expected_ramification(&self) -> DivisorClass {
        &(&(&self.e[0] + &(3 * self.sum_e123())) + &(2 * self.sum_g())) + &(5 * &self.f)
    }

    /// `R = K_{S̄} − γ*K_Y`, checked against the expected class.
    pub fn ramification_class(&self) -> Result<DivisorClass, NsError> {
        let ky = crate::make_hirzebruch(3).canonical().clone();
        let r = &self.k - &self.pullback_from_hirzebruch(&ky)?;
        let expected = self.expected_ramification();
        if r != expected {
            return Err(mismatch("R", self.express(&expected), self.express(&r)));
        }
        Ok(r)
    }

    /// The class the branch curve must have: `−2E₀ + 4ΣE_k + 20F − 4ΣG`.
    pub fn expected_branch(&self) -> DivisorClass {
        &(&(&(-2 * &self.e[0]) + &(4 * self.sum_e123())) + &(20 * &self.f)) - &(4 * self.sum_g())
    }

    /// Solves for `m` and `n_{jk}` from `B·F = 10`, `B·G_{jk} = 8` and
    /// `B·E_k = 0` (`k = 1, 2, 3`).
    pub fn branch_class_solve(&self) -> Result<BranchSolution, NsError> {
        let r = self.ramification_class()?;
        let base = &(-2 * &r) + &(10 * self.sum_e123());
        let mut unknowns = vec![self.f.clone()];
        unknowns.extend(self.g.iter().cloned());
        let mut constraints: Vec<(DivisorClass, i64)> = vec![(self.f.clone(), 10)];
        constraints.extend(self.g.iter().map(|g| (g.clone(), 8)));
        constraints.extend(self.e[1..].iter().map(|e| (e.clone(), 0)));

        let mut a = Vec::with_capacity(constraints.len());
        let mut b = Vec::with_capacity(constraints.len());
        for (test, target) in &constraints {
            let row = unknowns
                .iter()
                .map(|u| self.intersect(u, test).map(int))
                .collect::<Result<Vec<Rational>, _>>()?;
            a.push(row);
            b.push(int(target - self.intersect(&base, test)?));
        }
        let x = solve_unique(&a, &b)?;
        let ints = x
            .iter()
            .map(|v| {
                to_i64(v).ok_or_else(|| NsError::NonIntegral {
                    what: "branch coefficient",
                    value: lgcheck_core::to_ratio_string(v),
                })
            })
            .collect::<Result<Vec<i64>, _>>()?;
        let mut class = base;
        for (c, u) in ints.iter().zip(&unknowns) {
            class = &class + &(*c * u);
        }
        let expected = self.expected_branch();
        if class != expected {
            return Err(mismatch("B", self.express(&expected), self.express(&class)));
        }
        let n: [i64; 6] = ints[1..].try_into().expect("six coefficients");
        Ok(BranchSolution {
            class,
            m: ints[0],
            n,
        })
    }

    /// Coordinates in the basis `F, E₀, E₁, E₂, E₃, G₁₁, …, G₂₃` (strict
    /// transforms), rendered as text.
    pub fn express(&self, d: &DivisorClass) -> String {
        let mut basis = vec![self.f.clone()];
        basis.extend(self.e.iter().cloned());
        basis.extend(self.g.iter().cloned());
        let names = ["F", "E0", "E1", "E2", "E3"].into_iter().chain(G_NAMES);
        let n = self.lattice.rank();
        let a: Vec<Vec<Rational>> = (0..n)
            .map(|i| basis.iter().map(|v| int(v.coords()[i])).collect())
            .collect();
        let rhs: Vec<Rational> = d.pulled_back(n).coords().iter().map(|&c| int(c)).collect();
        match solve_unique(&a, &rhs) {
            Ok(x) if x.iter().all(|v| to_i64(v).is_some()) => render_terms(
                x.iter()
                    .map(|v| to_i64(v).unwrap_or_default())
                    .zip(names.map(String::from)),
            ),
            _ => self.lattice.render(d),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sbar_shape_and_canonical() {
        let s = build_sbar().unwrap();
        assert_eq!(s.lattice.rank(), 11);
        assert_eq!(s.lattice.euler(), 10);
        assert_eq!(s.lattice.chi(), 0);
        assert_eq!(s.intersect(&s.k, &s.k), Ok(-10));
        let k_strict = &(&(&s.e[0] + &s.sum_e123()) + &(2 * s.sum_g())).pulled_back(11);
        assert_eq!(&s.k, k_strict);
        for k in 1..=3 {
            assert_eq!(s.intersect(&s.e[k], &s.e[k]), Ok(-3));
        }
        assert_eq!(s.e[0], s.e_total[0]);
        assert_eq!(s.lattice.strict_transform("G11").unwrap(), s.g[0]);
    }

    #[test]
    fn pullback_and_ramification() {
        let s = build_sbar().unwrap();
        let y = crate::make_hirzebruch(3);
        assert_eq!(
            s.pullback_from_hirzebruch(&y.class("C0").unwrap()).unwrap(),
            s.sum_e123()
        );
        assert_eq!(
            s.pullback_from_hirzebruch(&y.class("f").unwrap()).unwrap(),
            s.f
        );
        let r = s.ramification_class().unwrap();
        assert_eq!(s.intersect(&r, &s.f), Ok(10));
        assert_eq!(
            s.express(&r),
            "5*F + E0 + 3*E1 + 3*E2 + 3*E3 + 2*G11 + 2*G21 + 2*G12 + 2*G22 + 2*G13 + 2*G23"
        );
        assert!(s.pullback_from_hirzebruch(&DivisorClass::zero(3)).is_err());
    }

    #[test]
    fn branch_solution() {
        let s = build_sbar().unwrap();
        let sol = s.branch_class_solve().unwrap();
        assert_eq!(sol.m, 30);
        assert_eq!(sol.n, [0; 6]);
        let b = &sol.class;
        assert_eq!(s.intersect(b, &s.e[0]), Ok(22));
        assert_eq!(s.intersect(b, b), Ok(-36));
        assert_eq!(s.intersect(&s.k, b), Ok(118));
        assert_eq!(s.lattice.adjunction_pa(b), Ok(42));
    }

    #[test]
    fn genera_of_named_curves() {
        let s = build_sbar().unwrap();
        assert_eq!(s.lattice.adjunction_pa(&s.f), Ok(3));
        assert_eq!(s.lattice.adjunction_pa(&s.e[1]), Ok(0));
        assert_eq!(s.intersect(&s.k, &s.e[1]), Ok(1));
    }
}
