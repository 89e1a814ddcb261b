use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use nullcone::report::{
    self, CheckName, Command, Exit, FieldKind, IdealKind, RunConfig, ShapeKind, ShowObject, SuiteName,
};

/// Nullcone ideals, block orders and Frobenius splitting certificates.
#[derive(Parser)]
#[command(name = "nullcone-lab", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print block matrices, generators, Gröbner bases or lead terms.
    Show {
        object: ShowObject,
        #[command(flatten)]
        flags: Flags,
    },
    /// Run one named check.
    Check {
        name: CheckName,
        #[command(flatten)]
        flags: Flags,
    },
    /// Run a curated set of checks.
    Suite {
        name: SuiteName,
        #[command(flatten)]
        flags: Flags,
    },
}

#[derive(Args)]
struct Flags {
    #[arg(long, value_enum)]
    shape: Option<ShapeKind>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t_max: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    /// Exponent multiplier for the pigeonhole check (defaults to the height).
    #[arg(long)]
    h: Option<usize>,
    #[arg(long, value_enum)]
    ideal: Option<IdealKind>,
    #[arg(long, value_enum, default_value = "fp")]
    field: FieldKind,
    #[arg(long, default_value_t = 2)]
    p: u32,
    /// Cap on monomial operations per Gröbner computation.
    #[arg(long, default_value_t = nullcone::groebner::DEFAULT_BUDGET)]
    budget: u64,
    /// JSON report destination.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Keep wall-clock timings in the JSON report.
    #[arg(long)]
    timings: bool,
    /// Print the JSON report instead of text.
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, f) = match cli.command {
        Cmd::Show { object, flags } => (Command::Show(object), flags),
        Cmd::Check { name, flags } => (Command::Check(name), flags),
        Cmd::Suite { name, flags } => (Command::Suite(name), flags),
    };
    let config = RunConfig {
        command,
        shape: f.shape,
        m: f.m,
        t: f.t,
        n: f.n,
        r: f.r,
        s: f.s,
        t_max: f.t_max,
        n_max: f.n_max,
        h: f.h,
        ideal: f.ideal,
        field: f.field,
        p: f.p,
        budget: f.budget,
        seed: f.seed,
        timings: f.timings,
    };
    let report = match report::run(&config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("nullcone-lab: {e}");
            return ExitCode::from(Exit::for_error(&e).code());
        }
    };
    let json = report.to_json();
    if let Some(path) = &f.out {
        if let Err(e) = std::fs::write(path, format!("{json}\n")) {
            eprintln!("nullcone-lab: cannot write {}: {e}", path.display());
            return ExitCode::from(Exit::Usage.code());
        }
    }
    if f.json {
        println!("{json}");
    } else {
        print!("{}", report.to_text());
    }
    ExitCode::from(report.exit().code())
}
