//! Command-line front end: reads an instance file, runs one computation and
//! writes a report.
//!
//! Exit codes: 0 on success, 1 when a checked property fails or the oracle
//! disagrees (or cannot decide), 2 on usage and domain errors.

mod commands;
mod report;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use rrclosure::{ChainLimits, Instance};

use report::Format;

#[derive(Parser, Debug)]
#[command(
    name = "rrclosure",
    version,
    about = "Ratliff-Rush closures of monomial ideals and modules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closure of I^n E (n from --n, default 1).
    Closure(Opts),
    /// Ass(E / closure of I^n E) for n = 1..nmax.
    AssSeq(Opts),
    /// Ass(E / I^n E) for n = 1..nmax.
    PowerSeq(Opts),
    /// Ass of the successive quotients closure(I^n E) / closure(I^{n+1} E).
    QuotientSeq(Opts),
    /// The colon-shift identity for n >= m >= 1.
    Lemma21(Opts),
    /// Whether N1 is a Ratliff-Rush reduction of N2.
    Reduction(Opts),
    /// Whether I contains an element regular on E.
    Grade(Opts),
    /// Stable sets of the quotient and successive sequences for E = R.
    Cor25(Opts),
    /// Least n0 with closure(I^n E) = I^n E on [n0, nmax].
    EventualEq(Opts),
    /// Cross-check the structural routines against the brute-force oracle.
    Verify(Opts),
    /// Seeded random property suite for reductions.
    Props(Opts),
    /// Generate random instance files.
    Gen(Opts),
}

#[derive(Args, Debug, Clone)]
struct Opts {
    /// Instance file; `-` reads standard input.
    #[arg()]
    instance: Option<PathBuf>,
    #[arg(long, default_value_t = 6)]
    nmax: u32,
    #[arg(long, default_value_t = 3)]
    window: u32,
    #[arg(long, default_value_t = 20)]
    cap: u32,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, default_value_t = 12)]
    truncation_degree: u32,
    /// Oracle bound on the chain index.
    #[arg(long, default_value_t = 6)]
    kmax: u32,
    /// Largest truncation degree `verify` may raise to; defaults to
    /// --truncation-degree.
    #[arg(long)]
    max_degree: Option<u32>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    count: Option<usize>,
    #[arg(long, default_value_t = 3)]
    max_dim: usize,
    #[arg(long, default_value_t = 2)]
    max_rank: usize,
    #[arg(long, default_value_t = 4)]
    max_gens: usize,
    #[arg(long, default_value_t = 4)]
    max_exp: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Opts {
    fn limits(&self) -> anyhow::Result<ChainLimits> {
        Ok(ChainLimits::new(self.window, self.cap)?)
    }

    fn read_instance(&self) -> anyhow::Result<(Instance, String)> {
        let Some(path) = &self.instance else {
            bail!("this command needs an instance file");
        };
        let text = if path.as_os_str() == "-" {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .context("reading standard input")?;
            s
        } else {
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
        };
        let inst = Instance::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
        let canonical = inst.to_text();
        Ok((inst, canonical))
    }
}

fn write_output(opts: &Opts, s: &str) -> anyhow::Result<()> {
    match &opts.out {
        Some(p) => std::fs::write(p, s).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{s}");
            Ok(())
        }
    }
}

impl Command {
    fn parts(&self) -> (&'static str, &Opts) {
        match self {
            Command::Closure(o) => ("closure", o),
            Command::AssSeq(o) => ("ass-seq", o),
            Command::PowerSeq(o) => ("power-seq", o),
            Command::QuotientSeq(o) => ("quotient-seq", o),
            Command::Lemma21(o) => ("lemma21", o),
            Command::Reduction(o) => ("reduction", o),
            Command::Grade(o) => ("grade", o),
            Command::Cor25(o) => ("cor25", o),
            Command::EventualEq(o) => ("eventual-eq", o),
            Command::Verify(o) => ("verify", o),
            Command::Props(o) => ("props", o),
            Command::Gen(o) => ("gen", o),
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<bool> {
    let (name, opts) = cli.command.parts();
    let report = match name {
        "gen" => return commands::gen(opts).map(|()| true),
        "props" => commands::props(opts)?,
        _ => {
            let (inst, text) = opts.read_instance()?;
            commands::dispatch(name, &inst, text, opts)?
        }
    };
    write_output(opts, &report.render(opts.format))?;
    if let Some(reason) = &report.failure {
        eprintln!("rrclosure: {reason}");
    }
    Ok(report.failure.is_none())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("rrclosure: {e:#}");
            ExitCode::from(2)
        }
    }
}
