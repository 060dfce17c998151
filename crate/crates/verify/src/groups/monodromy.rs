use std::collections::BTreeSet;

use lgcheck_abelmono::{
    act, is_symplectic, kernel_of_polarization, orbit, two_torsion_report, validate_generators,
    IntMatrix4, SymplecticForm, TorsionVector,
};

use super::list;
use crate::check::{spec, Check, Group};
use crate::report::Provenance::{Derived, Stated, Trivial};
use crate::Fixtures;

const G: Group = Group::Monodromy;
const ORBIT_ANCHOR: &str = "the monodromy acts transitively on the 80 nonzero 3-torsion preimages";
const KERNEL_ANCHOR: &str = "monodromy separates the three order-2 base points from the other 12";

fn set_text(s: &BTreeSet<TorsionVector>) -> String {
    let parts: Vec<String> = s.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

/// Forward closure without inverses; a finite group needs none.
fn naive_orbit_size(table: &[[[i64; 4]; 4]], n: u32) -> usize {
    let gens: Vec<IntMatrix4> = table.iter().map(|m| IntMatrix4(*m)).collect();
    let Ok(v0) = TorsionVector::new(n, [1, 0, 0, 0]) else {
        return 0;
    };
    let mut set = BTreeSet::from([v0]);
    let mut frontier = vec![v0];
    while let Some(v) = frontier.pop() {
        for g in &gens {
            let w = act(g, &v);
            if set.insert(w) {
                frontier.push(w);
            }
        }
    }
    set.len()
}

/// Generator checks plus the orbit of `(1,0,0,0)` mod `n`, as run by
/// `lgcheck monodromy`.
pub fn monodromy_checks(n: u32, fixtures: &Fixtures) -> Vec<Check> {
    let table = fixtures.tau_table;
    let mut checks: Vec<Check> = (0..6)
        .map(|k| {
            spec(
                G,
                format!("monodromy.tau{}_symplectic", k + 1),
                Derived,
                "generators preserve the (1,2) polarization form",
                format!("τ{} J τ{}ᵗ = J", k + 1, k + 1),
            )
            .exact("true", move || Ok(is_symplectic(&IntMatrix4(table[k]))))
        })
        .collect();
    let (expected, prov, anchor) = if n == 3 {
        (80, Stated, ORBIT_ANCHOR)
    } else {
        (naive_orbit_size(&table, n), Derived, "plumbing")
    };
    checks.push(
        spec(
            G,
            format!("monodromy.orbit_mod{n}"),
            prov,
            anchor,
            format!("orbit of (1,0,0,0) mod {n} under τ1..τ6"),
        )
        .exact(expected, move || {
            let gens = validate_generators(&table)?;
            Ok(orbit(&TorsionVector::new(n, [1, 0, 0, 0])?, &gens)?.len())
        }),
    );
    checks.push(
        spec(
            G,
            format!("monodromy.origin_fixed_mod{n}"),
            Trivial,
            "plumbing",
            "orbit of the origin",
        )
        .exact(1, move || {
            let gens = validate_generators(&table)?;
            Ok(orbit(&TorsionVector::new(n, [0; 4])?, &gens)?.len())
        }),
    );
    checks.extend(two_torsion(fixtures));
    checks
}

fn two_torsion(fixtures: &Fixtures) -> Vec<Check> {
    let table = fixtures.tau_table;
    vec![
        spec(
            G,
            "monodromy.kernel_of_polarization",
            Derived,
            KERNEL_ANCHOR,
            "nonzero v mod 2 with v·J ≡ 0",
        )
        .exact("{(0,0,0,1),(0,0,1,0),(0,0,1,1)}", || {
            Ok(set_text(&kernel_of_polarization(
                &SymplecticForm::gamma_d(),
                2,
            )?))
        }),
        spec(
            G,
            "monodromy.kernel_invariant",
            Derived,
            KERNEL_ANCHOR,
            "nonzero kernel points form a union of orbits",
        )
        .judged("union of orbits", move || {
            let gens = validate_generators(&table)?;
            let r = two_torsion_report(&gens)?;
            Ok((
                format!("union of orbits, kernel {}", set_text(&r.kernel)),
                true,
            ))
        }),
        spec(
            G,
            "monodromy.two_torsion_partition",
            Derived,
            KERNEL_ANCHOR,
            "orbit sizes on nonzero 2-torsion",
        )
        .exact("[3,12]", move || {
            let gens = validate_generators(&table)?;
            Ok(list(two_torsion_report(&gens)?.shape()))
        }),
        spec(
            G,
            "monodromy.two_torsion_covered",
            Trivial,
            "plumbing",
            "points covered by the 2-torsion orbits",
        )
        .exact(15, move || {
            let gens = validate_generators(&table)?;
            Ok(two_torsion_report(&gens)?.covered)
        }),
    ]
}

pub(crate) fn all(fixtures: &Fixtures) -> Vec<Check> {
    let table = fixtures.tau_table;
    let mut checks = monodromy_checks(3, fixtures);
    checks.extend([
        spec(G, "monodromy.tau6_det", Derived, "plumbing", "det τ6")
            .exact(1, move || Ok(IntMatrix4(table[5]).det())),
        spec(
            G,
            "monodromy.bare_swap",
            Derived,
            "plumbing",
            "λ1 ↔ λ2 alone is not symplectic",
        )
        .exact("false", || {
            Ok(is_symplectic(&IntMatrix4([
                [0, 1, 0, 0],
                [1, 0, 0, 0],
                [0, 0, 1, 0],
                [0, 0, 0, 1],
            ])))
        }),
        spec(
            G,
            "monodromy.tau4_action",
            Derived,
            "plumbing",
            "τ4 on (1,0,0,0) mod 3",
        )
        .exact("(1,1,0,0)", move || {
            Ok(act(
                &IntMatrix4(table[3]),
                &TorsionVector::new(3, [1, 0, 0, 0])?,
            ))
        }),
        spec(
            G,
            "monodromy.negation",
            Trivial,
            "plumbing",
            "τ1 on (1,2,3,4) mod 5",
        )
        .exact("(4,3,2,1)", move || {
            Ok(act(
                &IntMatrix4(table[0]),
                &TorsionVector::new(5, [1, 2, 3, 4])?,
            ))
        }),
    ]);
    checks
}
