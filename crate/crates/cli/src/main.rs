use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use spindex_cli::{check_twist, localize, parse_input, run_suite, Kind, Mode, Report, Suite, TwistQuery, VerifyOptions};

#[derive(Parser)]
#[command(name = "spindex", version, about = "Exact spin-representation checks and fixed-point index localization")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Rank for `structure-actions`; without it the full sign table runs.
        #[arg(long)]
        r: Option<u32>,
        /// Multiplicity, or the first one when r is divisible by 4.
        #[arg(long)]
        m: Option<u32>,
        /// Second multiplicity when r is divisible by 4.
        #[arg(long)]
        m2: Option<u32>,
        /// Write the machine-readable report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Decide whether a twisted spinor module descends to the structure group.
    CheckTwist {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        m2: Option<u32>,
        #[arg(long, default_value_t = 0)]
        u: u32,
        #[arg(long, default_value_t = 0)]
        u2: u32,
        #[arg(long, default_value_t = 0)]
        s: u32,
        #[arg(long, default_value_t = 0)]
        t: u32,
        #[arg(long, value_enum, default_value_t = Kind::Exterior)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Mode::Both)]
        mode: Mode,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Sum fixed-point contributions read from a JSON file.
    Localize {
        input: PathBuf,
        #[arg(long, alias = "report")]
        output: Option<PathBuf>,
    },
}

fn write_report(report: &Report, path: Option<&Path>) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, report.to_json()).map_err(|e| format!("{}: {e}", p.display())),
        None => Ok(()),
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Verify { suite, seed, samples, r, m, m2, report } => {
            let opts = VerifyOptions { seed, samples, r, m, m2 };
            let rep = run_suite(suite, &opts);
            print!("{}", rep.render_text());
            write_report(&rep, report.as_deref())?;
            Ok(rep.exit_code())
        }
        Command::CheckTwist { r, m, m2, u, u2, s, t, kind, mode, report } => {
            let q = TwistQuery { r, m, m2, u, u2, s, t, kind, mode };
            let (rep, verdict) = check_twist(&q).map_err(|e| e.to_string())?;
            print!("{}", rep.render_text());
            println!("{verdict}");
            write_report(&rep, report.as_deref())?;
            Ok(rep.exit_code())
        }
        Command::Localize { input, output } => {
            let text = std::fs::read_to_string(&input).map_err(|e| format!("{}: {e}", input.display()))?;
            let fps = parse_input(&text).map_err(|e| format!("{}: {e}", input.display()))?;
            let (rep, verdict) = localize(&fps).map_err(|e| e.to_string())?;
            print!("{}", rep.render_text());
            println!("{verdict}");
            write_report(&rep, output.as_deref())?;
            Ok(rep.exit_code())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
