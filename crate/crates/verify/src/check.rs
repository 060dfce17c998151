use std::fmt;
use std::time::Instant;

use crate::report::{CheckResult, Provenance};
use crate::VerifyError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    Rep,
    Form,
    Lattice,
    Monodromy,
    Elliptic,
}

impl Group {
    pub const ALL: [Group; 5] = [
        Group::Rep,
        Group::Form,
        Group::Lattice,
        Group::Monodromy,
        Group::Elliptic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Group::Rep => "rep",
            Group::Form => "form",
            Group::Lattice => "lattice",
            Group::Monodromy => "monodromy",
            Group::Elliptic => "elliptic",
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub(crate) enum Verdict {
    /// Passes iff the text equals the expected text.
    Exact(String),
    /// Pass/fail decided by the check body (inequalities, set conditions).
    Judged { computed: String, pass: bool },
}

type Body = Box<dyn Fn() -> Result<Verdict, VerifyError> + Send + Sync>;

pub struct Check {
    id: String,
    group: Group,
    provenance: Provenance,
    anchor: String,
    description: String,
    expected: String,
    body: Body,
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Check")
            .field("id", &self.id)
            .field("expected", &self.expected)
            .finish_non_exhaustive()
    }
}

impl Check {
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn execute(&self, timings: bool) -> CheckResult {
        let start = Instant::now();
        let (computed, pass) = match (self.body)() {
            Ok(Verdict::Exact(c)) => {
                let pass = c == self.expected;
                (c, pass)
            }
            Ok(Verdict::Judged { computed, pass }) => (computed, pass),
            Err(e) => (format!("error: {e}"), false),
        };
        CheckResult {
            check_id: self.id.clone(),
            description: self.description.clone(),
            anchor: self.anchor.clone(),
            expected: self.expected.clone(),
            computed,
            provenance: self.provenance,
            pass,
            elapsed: timings.then(|| start.elapsed().as_millis() as u64),
        }
    }
}

/// Metadata half of a check; finished by [`Spec::exact`] or [`Spec::judged`].
pub(crate) struct Spec {
    id: String,
    group: Group,
    provenance: Provenance,
    anchor: String,
    description: String,
}

pub(crate) fn spec(
    group: Group,
    id: impl Into<String>,
    provenance: Provenance,
    anchor: impl Into<String>,
    description: impl Into<String>,
) -> Spec {
    Spec {
        id: id.into(),
        group,
        provenance,
        anchor: anchor.into(),
        description: description.into(),
    }
}

impl Spec {
    fn finish(self, expected: String, body: Body) -> Check {
        Check {
            id: self.id,
            group: self.group,
            provenance: self.provenance,
            anchor: self.anchor,
            description: self.description,
            expected,
            body,
        }
    }

    pub(crate) fn exact<T, F>(self, expected: impl fmt::Display, f: F) -> Check
    where
        T: fmt::Display,
        F: Fn() -> Result<T, VerifyError> + Send + Sync + 'static,
    {
        self.finish(
            expected.to_string(),
            Box::new(move || f().map(|v| Verdict::Exact(v.to_string()))),
        )
    }

    pub(crate) fn judged<F>(self, expected: impl fmt::Display, f: F) -> Check
    where
        F: Fn() -> Result<(String, bool), VerifyError> + Send + Sync + 'static,
    {
        self.finish(
            expected.to_string(),
            Box::new(move || f().map(|(computed, pass)| Verdict::Judged { computed, pass })),
        )
    }
}
