//! Check registry, parallel runner and report model behind the `lgcheck`
//! command-line tool.

mod check;
mod groups;
mod oracle;
mod report;

use lgcheck_abelmono::TAU_TABLE;
use rayon::prelude::*;
use thiserror::Error;

pub use check::{Check, Group};
pub use groups::{form_checks, monodromy_checks, rep_checks};
pub use report::{CheckResult, Provenance, VerificationReport};

/// Anything a check body can fail with. A failing body is recorded as a
/// failed check, never propagated.
#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Rep(#[from] lgcheck_sdrep::SdRepError),
    #[error(transparent)]
    Form(#[from] lgcheck_extalg::ExtAlgError),
    #[error(transparent)]
    Lattice(#[from] lgcheck_nslattice::NsError),
    #[error(transparent)]
    Monodromy(#[from] lgcheck_abelmono::AbelMonoError),
    #[error("{0}")]
    Inconsistent(String),
}

/// Input data the checks read; replaceable for fault injection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixtures {
    pub tau_table: [[[i64; 4]; 4]; 6],
}

impl Default for Fixtures {
    fn default() -> Self {
        Fixtures {
            tau_table: TAU_TABLE,
        }
    }
}

impl Fixtures {
    /// `τ₆` with its `(λ₁, λ₁)` entry changed from 3 to 2.
    pub fn corrupt_tau6() -> Self {
        let mut tau_table = TAU_TABLE;
        tau_table[5][0][0] = 2;
        Fixtures { tau_table }
    }
}

/// Every registered check, in the fixed order rep → form → lattice →
/// monodromy → elliptic.
pub fn all_checks(fixtures: &Fixtures) -> Vec<Check> {
    let mut checks = groups::rep::all();
    checks.extend(groups::form::all());
    checks.extend(groups::lattice::all());
    checks.extend(groups::monodromy::all(fixtures));
    checks.extend(groups::elliptic::all());
    checks
}

/// Runs `checks` in parallel; results keep registration order.
pub fn run(checks: &[Check], timings: bool) -> VerificationReport {
    let results: Vec<CheckResult> = checks.par_iter().map(|c| c.execute(timings)).collect();
    VerificationReport::new(results)
}

/// `all_checks` narrowed to one group when `only` is set.
pub fn run_all(fixtures: &Fixtures, only: Option<Group>, timings: bool) -> VerificationReport {
    let checks: Vec<Check> = all_checks(fixtures)
        .into_iter()
        .filter(|c| only.is_none_or(|g| c.group() == g))
        .collect();
    run(&checks, timings)
}
