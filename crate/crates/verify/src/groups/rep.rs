use lgcheck_core::{int, to_i64, to_ratio_string};

use crate::VerifyError;
use lgcheck_sdrep::{
    character_table, conjugacy_classes, decompose, dim_a, ext_power_character,
    irreducible_character, kernel_lower_bound, lg_bookkeeping, min_irregularity,
    standard_character, trivial_character, trivial_multiplicity_sym_gamma, ClassFunction,
    Partition, RepDecomposition,
};

use super::list;
use crate::check::{spec, Check, Group};
use crate::oracle::{choose, restricted_partitions};
use crate::report::Provenance::{Derived, Stated, Trivial};

const G: Group = Group::Rep;

fn s3(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("static label")
}

fn kernel_bound(d: u32, q: u32, p: u32) -> Check {
    let bound = choose(q.into(), p.into());
    let copies = bound * restricted_partitions(p, 2, d);
    let prov = if (d, q, p) == (3, 2, 2) {
        Stated
    } else {
        Derived
    };
    spec(
        G,
        format!("rep.kernel_bound_d{d}_q{q}_p{p}"),
        prov,
        "kernel of the wedge map contains C(q,p) dim A_p trivial copies",
        format!("(C({q},{p}), C({q},{p})·dim A_{p}) for S_{d}"),
    )
    .exact(format!("({bound},{copies})"), move || {
        let k = kernel_lower_bound(d, q, p)?;
        Ok(format!("({},{})", k.bound, k.trivial_copies))
    })
}

fn kernel_character(d: u32, q: u32, p: u32) -> Check {
    let copies = choose(q.into(), p.into()) * restricted_partitions(p, 2, d);
    spec(
        G,
        format!("rep.kernel_character_d{d}_q{q}_p{p}"),
        Derived,
        "kernel of the wedge map contains C(q,p) dim A_p trivial copies",
        format!("trivial multiplicity of the {p}-th exterior power of {q} copies of the standard rep of S_{d}"),
    )
    .judged(format!(">= {copies}"), move || {
        let k = kernel_lower_bound(d, q, p)?;
        Ok((k.character_multiplicity.to_string(), k.character_multiplicity >= copies))
    })
}

fn sym_gamma(d: u32) -> Check {
    spec(
        G,
        format!("rep.sym_gamma_d{d}"),
        Stated,
        "invariants of Sym^k of the standard representation are counted by A_k",
        format!(
            "trivial multiplicity of Sym^k Γ equals restricted partition count, S_{d}, k = 0..10"
        ),
    )
    .exact("11/11", move || {
        let mut agree = 0;
        for k in 0..=10 {
            if trivial_multiplicity_sym_gamma(d, k)? == restricted_partitions(k, 2, d) {
                agree += 1;
            }
        }
        Ok(format!("{agree}/11"))
    })
}

fn irregularity(d: u32, q: u32) -> Check {
    spec(
        G,
        format!("rep.min_irregularity_d{d}_q{q}"),
        Stated,
        "h^{1,0} of the Galois closure is at least q(d-1)",
        format!("dimension of {q} copies of the standard rep of S_{d}"),
    )
    .exact(min_irregularity(d, q), move || {
        let chi = standard_character(d)?.scale(&int(q.into()));
        to_i64(chi.dimension())
            .map(|v| v.to_string())
            .ok_or_else(|| VerifyError::Inconsistent("non-integral dimension".into()))
    })
}

/// Checks for one `(d, q, p)` triple, as run by `lgcheck rep`.
pub fn rep_checks(d: u32, q: u32, p: u32) -> Vec<Check> {
    vec![
        kernel_bound(d, q, p),
        kernel_character(d, q, p),
        irregularity(d, q),
        sym_gamma(d),
    ]
}

fn decomposition_text(d: u32, terms: &[(&[u32], u64)]) -> String {
    RepDecomposition::new(d, terms.iter().map(|(p, m)| (s3(p), *m)))
        .map(|r| r.to_string())
        .unwrap_or_default()
}

pub(crate) fn all() -> Vec<Check> {
    let mut checks = vec![
        spec(
            G,
            "rep.class_sizes_s4",
            Derived,
            "plumbing",
            "conjugacy class sizes of S_4 in partition order",
        )
        .exact("[1,6,3,8,6]", || {
            Ok(list(conjugacy_classes(4)?.into_iter().map(|(_, n)| n)))
        }),
        spec(
            G,
            "rep.orthogonality",
            Derived,
            "plumbing",
            "irreducible characters are orthonormal, d = 1..7",
        )
        .exact("7/7", || {
            let mut ok = 0;
            for d in 1..=7 {
                let table = character_table(d)?;
                let chars: Vec<ClassFunction> = table
                    .labels()
                    .iter()
                    .map(|l| irreducible_character(d, l))
                    .collect::<Result<_, _>>()?;
                let mut orthonormal = true;
                for (i, a) in chars.iter().enumerate() {
                    for (j, b) in chars.iter().enumerate() {
                        orthonormal &= a.inner(b)? == int(i64::from(i == j));
                    }
                }
                ok += u32::from(orthonormal);
            }
            Ok(format!("{ok}/7"))
        }),
        spec(
            G,
            "rep.standard_character",
            Trivial,
            "standard representation of S_d",
            "fix − 1 equals χ_(d−1,1), d = 2..7",
        )
        .exact("6/6", || {
            let mut ok = 0;
            for d in 2..=7u32 {
                let label = Partition::new(vec![d - 1, 1])?;
                ok += u32::from(standard_character(d)? == irreducible_character(d, &label)?);
            }
            Ok(format!("{ok}/6"))
        }),
        spec(
            G,
            "rep.sym_gamma_table",
            Stated,
            "invariants of Sym^k of the standard representation are counted by A_k",
            "trivial multiplicity of Sym^k Γ equals dim A_k for 2 ≤ d ≤ 7, 0 ≤ k ≤ 10",
        )
        .exact("66/66", || {
            let mut agree = 0;
            for d in 2..=7 {
                for k in 0..=10 {
                    if trivial_multiplicity_sym_gamma(d, k)? == restricted_partitions(k, 2, d) {
                        agree += 1;
                    }
                }
            }
            Ok(format!("{agree}/66"))
        }),
        spec(
            G,
            "rep.dim_a_s3",
            Derived,
            "plumbing",
            "dim A_k for S_3, k = 0..6",
        )
        .exact(
            list((0..=6).map(|k| restricted_partitions(k, 2, 3))),
            || Ok(list((0..=6).map(|k| dim_a(3, k)))),
        ),
        kernel_bound(3, 2, 2),
        kernel_bound(3, 4, 2),
        kernel_bound(5, 3, 3),
        kernel_character(3, 2, 2),
        spec(
            G,
            "rep.wedge2_trivial_s3",
            Stated,
            "the sum form spans the invariant part of the second exterior power",
            "⟨∧²(Γ⊕Γ), 1⟩ for S_3",
        )
        .exact("1/1", || {
            let gamma = standard_character(3)?;
            let m = ext_power_character(&gamma.add(&gamma)?, 2).inner(&trivial_character(3)?)?;
            Ok(to_ratio_string(&m))
        }),
        spec(
            G,
            "rep.h10",
            Stated,
            "H^{1,0} of the LG surface is two copies of the standard representation",
            "decomposition of Γ⊕Γ",
        )
        .exact(decomposition_text(3, &[(&[2, 1], 2)]), || {
            let gamma = standard_character(3)?;
            Ok(decompose(&gamma.add(&gamma)?)?.to_string())
        }),
        spec(
            G,
            "rep.h10_tensor_h01",
            Stated,
            "H^{1,0} ⊗ H^{0,1} as an S_3 representation",
            "decomposition of (Γ⊕Γ)⊗(Γ⊕Γ)",
        )
        .exact(
            decomposition_text(3, &[(&[3], 4), (&[2, 1], 4), (&[1, 1, 1], 4)]),
            || Ok(lg_bookkeeping()?.h10_tensor_h01.to_string()),
        ),
        spec(
            G,
            "rep.ker_psi2",
            Stated,
            "kernel of ψ_2 is the trivial line spanned by the sum form",
            "invariant part of ∧²H^{1,0}",
        )
        .exact(decomposition_text(3, &[(&[3], 1)]), || {
            Ok(lg_bookkeeping()?.ker_psi2.to_string())
        }),
        spec(
            G,
            "rep.ker_rho2",
            Stated,
            "kernel of ρ_2 is Γ plus five trivial lines",
            "decomposition and dimension of ker ρ_2",
        )
        .exact(
            format!(
                "{} (dim 7)",
                decomposition_text(3, &[(&[3], 5), (&[2, 1], 1)])
            ),
            || {
                let k = lg_bookkeeping()?.ker_rho2;
                Ok(format!("{k} (dim {})", k.dimension()))
            },
        ),
        irregularity(3, 2),
    ];
    checks.push(sym_gamma(3));
    checks
}
