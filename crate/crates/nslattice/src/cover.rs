use lgcheck_core::{int, rat, to_i64, to_ratio_string, Rational};

use crate::{
    build_sbar, make_abelian_12, mismatch, BlowUpRecord, DivisorClass, NsError, SurfaceLattice,
};

/// Irregularity of the double cover `X`, taken as given.
pub const Q_X: i64 = 4;

/// Invariants of the canonical resolution `Σ̃` and the genus of its fibration
/// over `P¹`, taken as given.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SigmaTildeInputs {
    pub ksq: i64,
    pub c2: i64,
    pub chi: i64,
    pub fibre_genus: i64,
}

pub const SIGMA_TILDE: SigmaTildeInputs = SigmaTildeInputs {
    ksq: 66,
    c2: 258,
    chi: 27,
    fibre_genus: 4,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DoubleCoverInvariants {
    pub ksq: i64,
    pub c2: i64,
    pub chi: i64,
}

fn integral(what: &'static str, v: &Rational) -> Result<i64, NsError> {
    to_i64(v).ok_or_else(|| NsError::NonIntegral {
        what,
        value: to_ratio_string(v),
    })
}

/// Invariants of a double cover branched along a smooth curve of genus
/// `pa_b` and self-intersection `bsq` on a surface with `K² = ksq`,
/// `c₂ = c2`, `χ(O) = chi`.
pub fn double_cover_invariants(
    ksq: i64,
    c2: i64,
    chi: &Rational,
    pa_b: i64,
    bsq: i64,
) -> Result<DoubleCoverInvariants, NsError> {
    let ksq_x = int(2 * (ksq + 2 * pa_b - 2)) - rat(3, 2) * int(bsq);
    let c2_x = 2 * c2 + 2 * pa_b - 2;
    let chi_x = int(2) * chi + rat(pa_b - 1, 2) - rat(bsq, 8);
    let out = DoubleCoverInvariants {
        ksq: integral("K_X^2", &ksq_x)?,
        c2: c2_x,
        chi: integral("chi(O_X)", &chi_x)?,
    };
    if 12 * out.chi != out.ksq + out.c2 {
        return Err(NsError::Noether {
            ksq: out.ksq,
            c2: out.c2,
            chi: out.chi,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedNumerics {
    pub branch_genus: i64,
    pub branch_sq: i64,
    pub cover: DoubleCoverInvariants,
    pub tau: i64,
    pub p_g: i64,
    pub fibre_genus: i64,
    pub s_tilde_ksq: i64,
    pub s_tilde_c2: i64,
    pub s_tilde_chi: i64,
    pub nodal_fibres: i64,
    pub horikawa_degree: i64,
    pub k_f_sq: i64,
    pub chi_f: i64,
    pub slope: Rational,
}

/// `S̃`: the abelian surface blown up at the four base points.
pub fn s_tilde() -> Result<SurfaceLattice, NsError> {
    let recs: Vec<_> = (0..4)
        .map(|k| BlowUpRecord::generic(format!("E{k}")))
        .collect();
    make_abelian_12().blow_up_all(&recs)
}

pub fn derived_numerics() -> Result<DerivedNumerics, NsError> {
    let sbar = build_sbar()?;
    let b = sbar.branch_class_solve()?.class;
    let lat = &sbar.lattice;
    let branch_genus = lat.adjunction_pa(&b)?;
    let branch_sq = lat.self_intersection(&b)?;
    let cover = double_cover_invariants(
        lat.self_intersection(lat.canonical())?,
        lat.euler(),
        &int(lat.chi()),
        branch_genus,
        branch_sq,
    )?;
    let tau = integral("tau", &rat(cover.ksq - 2 * cover.c2, 3))?;
    let p_g = cover.chi + Q_X - 1;

    let st = s_tilde()?;
    let s_tilde_ksq = st.self_intersection(st.canonical())?;
    let fibre: DivisorClass = &st.class("L")?
        - &(0..4)
            .map(|k| st.class(&format!("E{k}")))
            .sum::<Result<DivisorClass, _>>()?;
    let fibre_genus = st.adjunction_pa(&fibre)?;
    // Each nodal fibre raises the Euler number by one over a smooth fibre.
    let nodal_fibres = st.euler() - 2 * (2 - 2 * fibre_genus);
    let horikawa_degree = s_tilde_ksq - 3 * st.chi() + 10;

    let g = SIGMA_TILDE.fibre_genus;
    let k_f_sq = SIGMA_TILDE.ksq + 8 * (g - 1);
    let chi_f = SIGMA_TILDE.chi + (g - 1);
    Ok(DerivedNumerics {
        branch_genus,
        branch_sq,
        cover,
        tau,
        p_g,
        fibre_genus,
        s_tilde_ksq,
        s_tilde_c2: st.euler(),
        s_tilde_chi: st.chi(),
        nodal_fibres,
        horikawa_degree,
        k_f_sq,
        chi_f,
        slope: rat(k_f_sq, chi_f),
    })
}

impl DerivedNumerics {
    /// Compares every field against the stated constants.
    pub fn validate(&self) -> Result<(), NsError> {
        let pairs: [(&'static str, i64, i64); 9] = [
            ("K_X^2", 198, self.cover.ksq),
            ("c2(X)", 102, self.cover.c2),
            ("chi(O_X)", 25, self.cover.chi),
            ("tau(X)", -2, self.tau),
            ("p_g(X)", 28, self.p_g),
            ("fibre genus", 3, self.fibre_genus),
            ("nodal fibres", 12, self.nodal_fibres),
            ("deg T", 6, self.horikawa_degree),
            ("slope", 3, to_i64(&self.slope).unwrap_or(i64::MIN)),
        ];
        for (what, expected, computed) in pairs {
            if expected != computed {
                return Err(mismatch(what, expected, computed));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FvNumerics {
    pub components: i64,
    pub fv_sq: i64,
    pub pa_fv: i64,
    pub k_plus_fv_dot_fv: i64,
    pub k_dot_fv: i64,
    pub bound: Rational,
    pub tau: i64,
}

impl FvNumerics {
    pub fn bound_equals_tau(&self) -> bool {
        self.bound == int(self.tau)
    }
}

/// `F_V` as six disjoint smooth rational `−3`-curves.
pub fn fv_numerics() -> Result<FvNumerics, NsError> {
    const COMPONENTS: usize = 6;
    const COMPONENT_SQ: i64 = -3;
    const COMPONENT_PA: i64 = 0;
    let gram: Vec<Vec<i64>> = (0..COMPONENTS)
        .map(|i| {
            (0..COMPONENTS)
                .map(|j| if i == j { COMPONENT_SQ } else { 0 })
                .collect()
        })
        .collect();
    let fv = DivisorClass::new(vec![1; COMPONENTS]);
    let fv_sq: i64 = (0..COMPONENTS)
        .flat_map(|i| (0..COMPONENTS).map(move |j| (i, j)))
        .map(|(i, j)| fv.coords()[i] * gram[i][j] * fv.coords()[j])
        .sum();
    // Adjunction on each component gives K·C = 2p_a − 2 − C².
    let k_dot_c = 2 * COMPONENT_PA - 2 - COMPONENT_SQ;
    let k_dot_fv = COMPONENTS as i64 * k_dot_c;
    let pa_fv = COMPONENTS as i64 * COMPONENT_PA - COMPONENTS as i64 + 1;
    let k_plus_fv_dot_fv = k_dot_fv + fv_sq;
    if k_plus_fv_dot_fv != 2 * pa_fv - 2 {
        return Err(mismatch("(K+F_V)·F_V", 2 * pa_fv - 2, k_plus_fv_dot_fv));
    }
    let bound = rat(2, 3) * int(k_dot_fv) + rat(1, 3) * int(fv_sq);
    let tau = derived_numerics()?.tau;
    Ok(FvNumerics {
        components: COMPONENTS as i64,
        fv_sq,
        pa_fv,
        k_plus_fv_dot_fv,
        k_dot_fv,
        bound,
        tau,
    })
}
