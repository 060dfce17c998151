use lgcheck_abelmono::{
    elliptic_quotients_check, lattice_to_tau, reduce_fundamental, EllipticReport, GaussianLattice,
    GaussianRational, Sl2, UpperHalfPoint,
};
use lgcheck_core::to_ratio_string;

use super::list;
use crate::check::{spec, Check, Group};
use crate::report::Provenance::{Derived, Stated, Trivial};
use crate::Provenance;
use crate::VerifyError;

const G: Group = Group::Elliptic;
const NON_ISO_ANCHOR: &str = "the quotients by i and by 1/2 are not isomorphic";

/// `{"x":"p/q","y":"r/s"}`.
fn tau_text(p: &UpperHalfPoint) -> String {
    serde_json::json!({ "x": to_ratio_string(p.x()), "y": to_ratio_string(p.y()) }).to_string()
}

fn point(xn: i64, xd: i64, yn: i64, yd: i64) -> UpperHalfPoint {
    UpperHalfPoint::from_ratios(xn, xd, yn, yd).expect("static point")
}

fn g(a: i64, b: i64, c: i64, d: i64) -> GaussianRational {
    GaussianRational::from_ratios(a, b, c, d)
}

fn report() -> Result<EllipticReport, VerifyError> {
    Ok(elliptic_quotients_check()?)
}

fn lattice_tau(w1: GaussianRational, w2: GaussianRational) -> Result<String, VerifyError> {
    Ok(tau_text(&lattice_to_tau(&GaussianLattice::new(w1, w2)?)))
}

fn reduced(p: UpperHalfPoint) -> Result<String, VerifyError> {
    let (c, m) = reduce_fundamental(&p)?;
    if m.act(&p) != c {
        return Err(VerifyError::Inconsistent(format!(
            "transform {m} does not map {p} to {c}"
        )));
    }
    Ok(tau_text(&c))
}

fn canonical(
    idx: usize,
    prov: Provenance,
    anchor: &'static str,
    expected: UpperHalfPoint,
) -> Check {
    let label = ["e1", "e2", "e3"][idx];
    spec(
        G,
        format!("elliptic.canonical_{label}"),
        prov,
        anchor,
        format!("canonical τ of E/⟨{label}⟩"),
    )
    .exact(tau_text(&expected), move || {
        Ok(tau_text(&report()?.entries[idx].canonical))
    })
}

pub(crate) fn all() -> Vec<Check> {
    vec![
        spec(
            G,
            "elliptic.tau_2i_half",
            Stated,
            "ℂ/(2iℤ⊕½ℤ) ≅ ℂ/(4iℤ⊕ℤ)",
            "τ of the lattice (2i, 1/2)",
        )
        .exact(tau_text(&point(0, 1, 4, 1)), || {
            lattice_tau(g(0, 1, 2, 1), g(1, 2, 0, 1))
        }),
        spec(
            G,
            "elliptic.tau_printed_e3",
            Stated,
            "ℂ/((1/2+i)ℤ⊕½ℤ) ≅ ℂ/((1+2i)ℤ⊕ℤ)",
            "τ of the lattice (1/2+i, 1/2)",
        )
        .exact(tau_text(&point(1, 1, 2, 1)), || {
            lattice_tau(g(1, 2, 1, 1), g(1, 2, 0, 1))
        }),
        spec(
            G,
            "elliptic.reduce_1_plus_2i",
            Derived,
            "plumbing",
            "canonical form of 1+2i",
        )
        .exact(tau_text(&point(0, 1, 2, 1)), || reduced(point(1, 1, 2, 1))),
        spec(
            G,
            "elliptic.reduce_i_over_2",
            Derived,
            "plumbing",
            "canonical form of i/2",
        )
        .exact(tau_text(&point(0, 1, 2, 1)), || reduced(point(0, 1, 1, 2))),
        spec(
            G,
            "elliptic.reduce_4i",
            Trivial,
            "plumbing",
            "4i is reduced with the identity transform",
        )
        .exact(Sl2::identity(), || {
            Ok(reduce_fundamental(&point(0, 1, 4, 1))?.1)
        }),
        spec(
            G,
            "elliptic.quotient_e1",
            Stated,
            "E/⟨e1⟩ = ℂ/(iℤ⊕ℤ)",
            "basis of 2iℤ⊕ℤ + ℤi",
        )
        .exact("<i, 1>", || Ok(report()?.entries[0].quotient.to_string())),
        spec(
            G,
            "elliptic.quotient_e2",
            Stated,
            "E/⟨e2⟩ = ℂ/(2iℤ⊕½ℤ)",
            "basis of 2iℤ⊕ℤ + ℤ/2",
        )
        .exact("<2i, 1/2>", || {
            Ok(report()?.entries[1].quotient.to_string())
        }),
        spec(
            G,
            "elliptic.index_two",
            Derived,
            "plumbing",
            "index of 2iℤ⊕ℤ in each quotient lattice",
        )
        .exact("[2/1,2/1,2/1]", || {
            Ok(list(
                report()?.entries.iter().map(|e| to_ratio_string(&e.index)),
            ))
        }),
        canonical(0, Stated, NON_ISO_ANCHOR, point(0, 1, 1, 1)),
        canonical(1, Stated, NON_ISO_ANCHOR, point(0, 1, 4, 1)),
        canonical(
            2,
            Derived,
            "third quotient reduces to 2i",
            point(0, 1, 2, 1),
        ),
        spec(
            G,
            "elliptic.first_pair_distinct",
            Stated,
            NON_ISO_ANCHOR,
            "canonical forms of E/⟨e1⟩ and E/⟨e2⟩ differ",
        )
        .exact("true", || {
            let r = report()?;
            Ok(r.entries[0].canonical != r.entries[1].canonical)
        }),
        spec(
            G,
            "elliptic.pairwise_distinct",
            Derived,
            "plumbing",
            "the three canonical forms are pairwise distinct",
        )
        .exact("true", || Ok(report()?.pairwise_distinct())),
    ]
}
