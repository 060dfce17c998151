use lgcheck_core::{int, rat};
use lgcheck_extalg::{
    apply_permutation, build_sum_form, is_decomposable, omega_identity_rhs, two_form_rank,
    verify_omega_identity, AlternatingTensor, FormSpace, Permutation,
};

use crate::check::{spec, Check, Group};
use crate::report::Provenance::{Derived, Stated, Trivial};
use crate::VerifyError;

const G: Group = Group::Form;
const RANK_ANCHOR: &str = "the invariant sum form has rank 2(d-1)";
const INVARIANCE_ANCHOR: &str = "the sum form is invariant under S_d";

fn rank(d: u32) -> Check {
    let prov = if d == 3 { Stated } else { Derived };
    spec(
        G,
        format!("form.rank_d{d}"),
        prov,
        RANK_ANCHOR,
        format!("rank of Σ_i ω^i_1∧ω^i_2 for d = {d}"),
    )
    .exact(2 * (d - 1), move || {
        let t = build_sum_form(FormSpace::new(d, 2)?, &[1, 2])?;
        Ok(two_form_rank(&t)?)
    })
}

/// Number of adjacent transpositions in `S_d` fixing the sum form.
fn fixed_by_transpositions(d: u32, q: u32, indices: &[u32]) -> Result<u32, VerifyError> {
    let t = build_sum_form(FormSpace::new(d, q)?, indices)?;
    let mut ok = 0;
    for a in 1..d {
        ok += u32::from(apply_permutation(&t, &Permutation::transposition(d, a, a + 1)?)? == t);
    }
    Ok(ok)
}

fn invariance(d: u32) -> Check {
    spec(
        G,
        format!("form.invariance_d{d}"),
        Stated,
        INVARIANCE_ANCHOR,
        format!("adjacent transpositions fixing the sum form, d = {d}"),
    )
    .exact(format!("{}/{}", d - 1, d - 1), move || {
        Ok(format!(
            "{}/{}",
            fixed_by_transpositions(d, 2, &[1, 2])?,
            d - 1
        ))
    })
}

fn one_forms_vanish(ds: std::ops::RangeInclusive<u32>) -> Check {
    let (lo, hi) = (*ds.start(), *ds.end());
    spec(
        G,
        format!("form.one_forms_vanish_d{lo}_{hi}"),
        Trivial,
        "relation Σ_i ω^i = 0",
        "Σ_i ω^i_1 is zero",
    )
    .exact("true", move || {
        let mut all = true;
        for d in lo..=hi {
            all &= build_sum_form(FormSpace::new(d, 1)?, &[1])?.is_zero();
        }
        Ok(all)
    })
}

fn three_forms(ds: std::ops::RangeInclusive<u32>) -> Check {
    let (lo, hi) = (*ds.start(), *ds.end());
    let total: u32 = (lo..=hi).map(|d| d - 1).sum();
    spec(
        G,
        format!("form.three_form_invariance_d{lo}_{hi}"),
        Derived,
        INVARIANCE_ANCHOR,
        "adjacent transpositions fixing Σ_i ω^i_1∧ω^i_2∧ω^i_3",
    )
    .exact(format!("{total}/{total}"), move || {
        let mut ok = 0;
        for d in lo..=hi {
            ok += fixed_by_transpositions(d, 3, &[1, 2, 3])?;
        }
        Ok(format!("{ok}/{total}"))
    })
}

/// Checks for a single degree, as run by `lgcheck form`.
pub fn form_checks(d: u32) -> Vec<Check> {
    vec![
        rank(d),
        invariance(d),
        one_forms_vanish(d..=d),
        three_forms(d..=d),
    ]
}

fn omega() -> Result<AlternatingTensor, VerifyError> {
    Ok(build_sum_form(FormSpace::new(3, 2)?, &[1, 2])?)
}

pub(crate) fn all() -> Vec<Check> {
    let mut checks: Vec<Check> = (2..=7).map(rank).collect();
    checks.push(
        spec(
            G,
            "form.invariance_all",
            Stated,
            INVARIANCE_ANCHOR,
            "adjacent transpositions fixing the sum form, summed over d = 2..7",
        )
        .exact("21/21", || {
            let mut ok = 0;
            for d in 2..=7 {
                ok += fixed_by_transpositions(d, 2, &[1, 2])?;
            }
            Ok(format!("{ok}/21"))
        }),
    );
    checks.extend([
        spec(
            G,
            "form.omega_identity",
            Stated,
            "ω = 3/2 ω^3_1∧ω^3_2 + 1/2 (ω^1_1−ω^2_1)∧(ω^1_2−ω^2_2)",
            "both sides agree after eliminating ω^3",
        )
        .exact("true", || Ok(verify_omega_identity())),
        spec(
            G,
            "form.omega_perturbed",
            Trivial,
            "plumbing",
            "coefficient 3/2 replaced by 1 breaks the identity",
        )
        .exact("false", || {
            Ok(omega()? == omega_identity_rhs(&int(1), &rat(1, 2))?)
        }),
        spec(
            G,
            "form.omega_swapped",
            Derived,
            "plumbing",
            "swapping j on the left side flips the sign",
        )
        .exact("false", || {
            let swapped = build_sum_form(FormSpace::new(3, 2)?, &[2, 1])?;
            Ok(swapped == omega_identity_rhs(&rat(3, 2), &rat(1, 2))?)
        }),
        spec(
            G,
            "form.sum_form_d2",
            Derived,
            "plumbing",
            "d = 2 sum form after ω^2 = −ω^1",
        )
        .exact("2/1*w1_1^w1_2", || {
            Ok(build_sum_form(FormSpace::new(2, 2)?, &[1, 2])?)
        }),
        one_forms_vanish(2..=7),
        spec(
            G,
            "form.decomposable_pure",
            Trivial,
            "plumbing",
            "ω^1_1∧ω^1_2 is decomposable",
        )
        .exact("true", || {
            let s = FormSpace::new(3, 2)?;
            Ok(is_decomposable(&AlternatingTensor::wedge_all(
                s,
                &[s.omega(1, 1)?, s.omega(1, 2)?],
            )?)?)
        }),
        spec(
            G,
            "form.decomposable_sum",
            Stated,
            RANK_ANCHOR,
            "the d = 3 sum form is not decomposable",
        )
        .exact("false", || Ok(is_decomposable(&omega()?)?)),
        three_forms(3..=5),
    ]);
    checks
}
