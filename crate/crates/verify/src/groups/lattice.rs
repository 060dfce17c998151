use lgcheck_core::{int, to_ratio_string};
use lgcheck_nslattice::{
    build_sbar, derived_numerics, double_cover_invariants, fv_numerics, make_abelian_12,
    make_hirzebruch, DerivedNumerics, Sbar,
};

use super::list;
use crate::check::{spec, Check, Group};
use crate::report::Provenance::{Derived, Stated, Trivial};
use crate::VerifyError;

const G: Group = Group::Lattice;

fn sbar() -> Result<Sbar, VerifyError> {
    Ok(build_sbar()?)
}

fn numerics() -> Result<DerivedNumerics, VerifyError> {
    Ok(derived_numerics()?)
}

pub(crate) fn all() -> Vec<Check> {
    vec![
        spec(
            G,
            "lattice.abelian_l_sq",
            Stated,
            "L is a (1,2) polarization with two sections",
            "L·L on the abelian surface",
        )
        .exact(4, || {
            let a = make_abelian_12();
            let l = a.class("L")?;
            Ok(a.intersect(&l, &l)?)
        }),
        spec(
            G,
            "lattice.hirzebruch_canonical",
            Stated,
            "K_Y of F_3",
            "canonical class of F_3",
        )
        .exact("-2*C0 - 5*f", || {
            let y = make_hirzebruch(3);
            Ok(y.render(y.canonical()))
        }),
        spec(
            G,
            "lattice.hirzebruch_k_sq",
            Derived,
            "K_Y of F_3",
            "K_Y² on F_3",
        )
        .exact(8, || {
            let y = make_hirzebruch(3);
            Ok(y.self_intersection(y.canonical())?)
        }),
        spec(
            G,
            "lattice.sbar_canonical",
            Stated,
            "canonical divisor of the blown-up surface",
            "K of S̄ in strict transforms",
        )
        .exact(
            "E0 + E1 + E2 + E3 + 2*G11 + 2*G21 + 2*G12 + 2*G22 + 2*G13 + 2*G23",
            || {
                let s = sbar()?;
                Ok(s.express(&s.k))
            },
        ),
        spec(
            G,
            "lattice.sbar_euler",
            Stated,
            "c_2 of the blown-up surface is 10",
            "Euler number of S̄",
        )
        .exact(10, || Ok(sbar()?.lattice.euler())),
        spec(
            G,
            "lattice.sbar_k_sq",
            Derived,
            "plumbing",
            "K² of S̄ after ten blow-ups",
        )
        .exact(-10, || {
            let s = sbar()?;
            Ok(s.intersect(&s.k, &s.k)?)
        }),
        spec(
            G,
            "lattice.fibre_intersections",
            Derived,
            "general fibre F = L − ΣE",
            "F², F·E_k (k = 0..3), F·G_jk",
        )
        .exact("F^2=0 F.E=[1,1,1,1] F.G=[0,0,0,0,0,0]", || {
            let s = sbar()?;
            let fe =
                s.e.iter()
                    .map(|e| s.intersect(&s.f, e))
                    .collect::<Result<Vec<_>, _>>()?;
            let fg =
                s.g.iter()
                    .map(|g| s.intersect(&s.f, g))
                    .collect::<Result<Vec<_>, _>>()?;
            Ok(format!(
                "F^2={} F.E={} F.G={}",
                s.intersect(&s.f, &s.f)?,
                list(fe),
                list(fg)
            ))
        }),
        spec(
            G,
            "lattice.strict_sections",
            Stated,
            "the sections E_1, E_2, E_3 are −3-curves",
            "E_k² for k = 1, 2, 3",
        )
        .exact("[-3,-3,-3]", || {
            let s = sbar()?;
            Ok(list(
                s.e[1..]
                    .iter()
                    .map(|e| s.intersect(e, e))
                    .collect::<Result<Vec<_>, _>>()?,
            ))
        }),
        spec(
            G,
            "lattice.fibre_genus",
            Stated,
            "the fibres are smooth curves of genus 3",
            "p_a(F) by adjunction",
        )
        .exact(3, || {
            let s = sbar()?;
            Ok(s.lattice.adjunction_pa(&s.f)?)
        }),
        spec(
            G,
            "lattice.section_genus",
            Derived,
            "plumbing",
            "p_a(E_1) by adjunction",
        )
        .exact(0, || {
            let s = sbar()?;
            Ok(s.lattice.adjunction_pa(&s.e[1])?)
        }),
        spec(
            G,
            "lattice.pullback_c0",
            Stated,
            "γ*C_0 = E_1 + E_2 + E_3",
            "pullback of the negative section",
        )
        .exact("E1 + E2 + E3", || {
            let s = sbar()?;
            let c0 = make_hirzebruch(3).class("C0")?;
            Ok(s.express(&s.pullback_from_hirzebruch(&c0)?))
        }),
        spec(
            G,
            "lattice.ramification",
            Stated,
            "R = E_0 + 3ΣE_k + 2ΣG + 5F",
            "K_S̄ − γ*K_Y",
        )
        .exact(
            "5*F + E0 + 3*E1 + 3*E2 + 3*E3 + 2*G11 + 2*G21 + 2*G12 + 2*G22 + 2*G13 + 2*G23",
            || {
                let s = sbar()?;
                Ok(s.express(&s.ramification_class()?))
            },
        ),
        spec(
            G,
            "lattice.ramification_dot_f",
            Derived,
            "R·F matches the branch degree on a fibre",
            "R·F",
        )
        .exact(10, || {
            let s = sbar()?;
            Ok(s.intersect(&s.ramification_class()?, &s.f)?)
        }),
        spec(
            G,
            "lattice.riemann_hurwitz",
            Derived,
            "K_S̄ = R + γ*K_Y",
            "canonical class reassembled from R and γ*K_Y",
        )
        .exact("true", || {
            let s = sbar()?;
            let ky = make_hirzebruch(3).canonical().clone();
            Ok(s.k == &s.ramification_class()? + &s.pullback_from_hirzebruch(&ky)?)
        }),
        spec(
            G,
            "lattice.branch_class",
            Stated,
            "class of the branch curve B",
            "solved branch class",
        )
        .exact(
            "20*F - 2*E0 + 4*E1 + 4*E2 + 4*E3 - 4*G11 - 4*G21 - 4*G12 - 4*G22 - 4*G13 - 4*G23",
            || {
                let s = sbar()?;
                Ok(s.express(&s.branch_class_solve()?.class))
            },
        ),
        spec(
            G,
            "lattice.branch_parameters",
            Stated,
            "the ansatz gives m = 30 and n_jk = 0",
            "(m, n_jk)",
        )
        .exact("(30,[0,0,0,0,0,0])", || {
            let sol = sbar()?.branch_class_solve()?;
            Ok(format!("({},{})", sol.m, list(sol.n)))
        }),
        spec(
            G,
            "lattice.branch_constraints",
            Stated,
            "B·F = 10, B·G_jk = 8, B·E_k = 0",
            "intersections of the solved B",
        )
        .exact("B.F=10 B.G=[8,8,8,8,8,8] B.E=[0,0,0]", || {
            let s = sbar()?;
            let b = s.branch_class_solve()?.class;
            let bg =
                s.g.iter()
                    .map(|g| s.intersect(&b, g))
                    .collect::<Result<Vec<_>, _>>()?;
            let be = s.e[1..]
                .iter()
                .map(|e| s.intersect(&b, e))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(format!(
                "B.F={} B.G={} B.E={}",
                s.intersect(&b, &s.f)?,
                list(bg),
                list(be)
            ))
        }),
        spec(G, "lattice.branch_e0", Stated, "B·E_0 = 22", "B·E_0").exact(22, || {
            let s = sbar()?;
            Ok(s.intersect(&s.branch_class_solve()?.class, &s.e[0])?)
        }),
        spec(G, "lattice.branch_sq", Derived, "plumbing", "B²").exact(-36, || {
            let s = sbar()?;
            let b = s.branch_class_solve()?.class;
            Ok(s.intersect(&b, &b)?)
        }),
        spec(G, "lattice.branch_k", Derived, "plumbing", "K·B").exact(118, || {
            let s = sbar()?;
            Ok(s.intersect(&s.k, &s.branch_class_solve()?.class)?)
        }),
        spec(
            G,
            "lattice.branch_genus",
            Stated,
            "p_a(B) = 42",
            "p_a(B) by adjunction",
        )
        .exact(42, || {
            let s = sbar()?;
            Ok(s.lattice.adjunction_pa(&s.branch_class_solve()?.class)?)
        }),
        spec(
            G,
            "lattice.chern_invariants",
            Stated,
            "K² = 198, c_2 = 102, χ = 25 for the double cover",
            "(K², c_2, χ) of X",
        )
        .exact("(198,102,25)", || {
            let c = numerics()?.cover;
            Ok(format!("({},{},{})", c.ksq, c.c2, c.chi))
        }),
        spec(
            G,
            "lattice.noether",
            Trivial,
            "plumbing",
            "12χ = K² + c_2 on X",
        )
        .exact("300=300", || {
            let c = numerics()?.cover;
            Ok(format!("{}={}", 12 * c.chi, c.ksq + c.c2))
        }),
        spec(
            G,
            "lattice.etale_cover",
            Trivial,
            "plumbing",
            "empty branch locus doubles every invariant",
        )
        .exact("(-20,20,0)", || {
            let c = double_cover_invariants(-10, 10, &int(0), 1, 0)?;
            Ok(format!("({},{},{})", c.ksq, c.c2, c.chi))
        }),
        spec(G, "lattice.signature", Stated, "τ(X) = −2", "(K² − 2c_2)/3")
            .exact(-2, || Ok(numerics()?.tau)),
        spec(
            G,
            "lattice.geometric_genus",
            Stated,
            "p_g(X) = 28",
            "χ + q − 1 with q = 4",
        )
        .exact(28, || Ok(numerics()?.p_g)),
        spec(
            G,
            "lattice.nodal_fibres",
            Stated,
            "the pencil has 12 singular fibres",
            "c_2(S̃) − e(P¹)e(F)",
        )
        .exact(12, || Ok(numerics()?.nodal_fibres)),
        spec(
            G,
            "lattice.horikawa_degree",
            Stated,
            "the degree of T is 6",
            "K²_S̃ − 3χ + 10",
        )
        .exact(6, || Ok(numerics()?.horikawa_degree)),
        spec(
            G,
            "lattice.slope",
            Stated,
            "the genus 4 fibration reaches the slope bound",
            "K_f²/χ_f for Σ̃ over P¹",
        )
        .exact("90/30 = 3/1", || {
            let n = numerics()?;
            Ok(format!(
                "{}/{} = {}",
                n.k_f_sq,
                n.chi_f,
                to_ratio_string(&n.slope)
            ))
        }),
        spec(
            G,
            "lattice.fv_sq",
            Stated,
            "F_V² = −18",
            "six disjoint −3-curves",
        )
        .exact(-18, || Ok(fv_numerics()?.fv_sq)),
        spec(
            G,
            "lattice.fv_adjunction",
            Stated,
            "2p_a(F_V) − 2 = −12",
            "(K + F_V)·F_V",
        )
        .exact(-12, || Ok(fv_numerics()?.k_plus_fv_dot_fv)),
        spec(
            G,
            "lattice.fv_bound",
            Stated,
            "the bound τ ≥ −2 is an equality",
            "(2/3)K·F_V + (1/3)F_V² against τ",
        )
        .exact("-2/1 = τ", || {
            let fv = fv_numerics()?;
            let rel = if fv.bound_equals_tau() { "=" } else { "!=" };
            Ok(format!("{} {rel} τ", to_ratio_string(&fv.bound)))
        }),
    ]
}
