use std::io::Write;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use lgcheck_verify::{
    form_checks, monodromy_checks, rep_checks, run, run_all, Fixtures, Group, VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "lgcheck",
    version,
    about = "Exact verification suite for the LG surface computations"
)]
struct Cli {
    /// Emit the report as JSON on standard output
    #[arg(long, global = true)]
    json: bool,

    /// Only print failing checks and the summary line
    #[arg(long, global = true)]
    quiet: bool,

    /// Record wall time per check (makes output non-reproducible)
    #[arg(long, global = true)]
    timings: bool,

    /// Replace a fixture with a corrupted one (negative control)
    #[arg(long, global = true, hide = true, value_enum)]
    inject_fault: Option<Fault>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fault {
    CorruptTau6,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    Rep,
    Form,
    Lattice,
    Monodromy,
    Elliptic,
}

impl From<GroupArg> for Group {
    fn from(g: GroupArg) -> Group {
        match g {
            GroupArg::Rep => Group::Rep,
            GroupArg::Form => Group::Form,
            GroupArg::Lattice => Group::Lattice,
            GroupArg::Monodromy => Group::Monodromy,
            GroupArg::Elliptic => Group::Elliptic,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run every registered check
    All {
        /// Restrict to one check group
        #[arg(long, value_enum)]
        only: Option<GroupArg>,
    },
    /// Representation-theoretic bounds for S_d
    Rep {
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(2..=10))]
        d: u32,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..=8))]
        q: u32,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..=8))]
        p: u32,
    },
    /// Rank and invariance of the sum form
    Form {
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(2..=10))]
        d: u32,
    },
    /// Néron–Severi lattice and double-cover invariants
    Lattice,
    /// Torsion-point orbits under the monodromy generators
    Monodromy {
        #[arg(long = "mod", default_value_t = 3, value_parser = clap::value_parser!(u32).range(2..=5))]
        modulus: u32,
    },
    /// Canonical forms of the elliptic quotients
    Elliptic,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let fixtures = match cli.inject_fault {
        Some(Fault::CorruptTau6) => Fixtures::corrupt_tau6(),
        None => Fixtures::default(),
    };
    let report = match cli.command {
        Command::All { only } => run_all(&fixtures, only.map(Group::from), cli.timings),
        Command::Rep { d, q, p } => {
            if p > q {
                Cli::command()
                    .error(
                        clap::error::ErrorKind::ArgumentConflict,
                        format!("--p {p} exceeds --q {q}"),
                    )
                    .exit();
            }
            run(&rep_checks(d, q, p), cli.timings)
        }
        Command::Form { d } => run(&form_checks(d), cli.timings),
        Command::Lattice => run_all(&fixtures, Some(Group::Lattice), cli.timings),
        Command::Monodromy { modulus } => run(&monodromy_checks(modulus, &fixtures), cli.timings),
        Command::Elliptic => run_all(&fixtures, Some(Group::Elliptic), cli.timings),
    };
    emit(&report, cli.json, cli.quiet)
}

fn emit(report: &VerificationReport, json: bool, quiet: bool) -> ExitCode {
    let text = if json {
        match report.to_json() {
            Ok(s) => s + "\n",
            Err(e) => {
                eprintln!("lgcheck: cannot serialize report: {e}");
                return ExitCode::from(2);
            }
        }
    } else {
        report.render_text(quiet)
    };
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("lgcheck: cannot write report: {e}");
            return ExitCode::from(2);
        }
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
