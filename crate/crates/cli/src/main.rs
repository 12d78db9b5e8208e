use clap::Parser;
use flagstab_cli::{run_batch, run_text, Command, Format, Options};
use std::path::PathBuf;
use std::process::ExitCode;

/// Gröbner bases, flat limits, Chow weights and stability checks for
/// flags of projective varieties.
#[derive(Parser, Debug)]
#[command(name = "flagstab", version)]
struct Cli {
    command: Command,
    /// Input document, or a directory for `batch`.
    file: PathBuf,
    /// Also run the independent cross-checks.
    #[arg(long)]
    check: bool,
    /// Degree bound for the linear-algebra cross-checks.
    #[arg(long, default_value_t = 6)]
    degree_bound: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    output: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = Options {
        check: cli.check,
        degree_bound: cli.degree_bound,
    };
    let report = if cli.command == Command::Batch {
        run_batch(&cli.file, &opts)
    } else {
        match std::fs::read_to_string(&cli.file) {
            Ok(text) => run_text(cli.command, &text, &opts),
            Err(e) => {
                eprintln!("flagstab: {}: {e}", cli.file.display());
                return ExitCode::from(1);
            }
        }
    };
    print!("{}", report.render(cli.output));
    ExitCode::from(report.exit_code as u8)
}
