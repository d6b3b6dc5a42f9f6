use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use spherecert::report::{run_suite, Format, Suite, SuiteConfig};
use spherecert::tables::{emit_table, TableKind};

#[derive(Parser)]
#[command(name = "spherecert", version, about = "Exact verification of sphere frames, brackets and Hopf maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and print its report.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit a CSV table.
    Tables {
        #[arg(long)]
        kind: TableKind,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn write_out(output: Option<&Path>, body: &str) -> io::Result<()> {
    match output {
        Some(path) => fs::write(path, body),
        None => io::stdout().lock().write_all(body.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { suite, samples, seed, format, output } => {
            let config = SuiteConfig {
                suite,
                samples: samples as usize,
                seed,
                format,
                output,
            };
            let report = match run_suite(&config) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            if let Err(e) = write_out(config.output.as_deref(), &report.render(format)) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Command::Tables { kind, output } => {
            let csv = match emit_table(kind) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            if let Err(e) = write_out(output.as_deref(), &csv) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
    }
}
