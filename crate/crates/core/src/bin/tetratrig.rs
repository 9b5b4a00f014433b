use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use tetratrig::cli::{run_fuzz, run_report, run_verify, CliError, CommandOutput, FuzzConfig, InputDocument};

#[derive(Parser)]
#[command(name = "tetratrig", version, about = "Exact rational trigonometry of tetrahedra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Io {
    /// Input document; stdin when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Output path; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print every invariant of a tetrahedron.
    Report(Io),
    /// Check every identity on a tetrahedron; exit 1 on any failure.
    Verify {
        #[command(flatten)]
        io: Io,
        /// Perturb one report entry before checking (negative control).
        #[arg(long, value_name = "KEY")]
        debug_corrupt: Option<String>,
    },
    /// Check the identities on random tetrahedra over F_p.
    Fuzz {
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Keep tetrahedra with zero quadrume.
        #[arg(long)]
        allow_degenerate: bool,
        /// Draw a random non-degenerate form per sample.
        #[arg(long)]
        random_form: bool,
        #[arg(long)]
        workers: Option<usize>,
        /// Perturb one report entry in every sample (negative control).
        #[arg(long, value_name = "KEY")]
        debug_corrupt: Option<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn read_input(path: &Option<PathBuf>) -> Result<InputDocument, CliError> {
    let text = match path {
        Some(p) => fs::read_to_string(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?,
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
            s
        }
    };
    InputDocument::parse(&text)
}

fn emit(out: &CommandOutput, path: &Option<PathBuf>) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, &out.stdout).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?,
        None => io::stdout()
            .write_all(out.stdout.as_bytes())
            .map_err(|e| CliError::Io(format!("stdout: {e}")))?,
    }
    if !out.stderr.is_empty() {
        let _ = io::stderr().write_all(out.stderr.as_bytes());
    }
    Ok(())
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let (out, path) = match cli.command {
        Command::Report(io) => (run_report(&read_input(&io.input)?), io.output),
        Command::Verify { io, debug_corrupt } => {
            (run_verify(&read_input(&io.input)?, debug_corrupt.as_deref())?, io.output)
        }
        Command::Fuzz { prime, samples, seed, allow_degenerate, random_form, workers, debug_corrupt, output } => {
            let cfg = FuzzConfig {
                prime,
                samples,
                seed,
                reject_degenerate: !allow_degenerate,
                random_form,
                workers,
                debug_corrupt,
            };
            (run_fuzz(&cfg)?, output)
        }
    };
    emit(&out, &path)?;
    Ok(out.exit_code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
