pub(crate) mod elliptic;
pub(crate) mod form;
pub(crate) mod lattice;
pub(crate) mod monodromy;
pub(crate) mod rep;

pub use form::form_checks;
pub use monodromy::monodromy_checks;
pub use rep::rep_checks;

/// `[a,b,c]` with no spaces.
pub(crate) fn list<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}
