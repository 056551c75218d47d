use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use weylkit_cli::command::{Cli, Command, Format};
use weylkit_cli::report::Report;
use weylkit_cli::run::{error_report, read_batch, run, run_batch};

fn emit(out: &mut impl Write, report: &Report, format: Format) -> std::io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", report.to_json()),
        Format::Text => write!(out, "{}", report.to_text()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version are not errors; usage errors exit 1, not 2,
            // since 2 is reserved for exhausted searches.
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let format = cli.opts.format;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let reports = match &cli.command {
        Command::Schema => {
            let _ = write!(out, "{}", weylkit_cli::SCHEMA);
            return ExitCode::SUCCESS;
        }
        Command::Batch { file } => match read_batch(file) {
            Ok(text) => run_batch(&text),
            Err(e) => vec![error_report("batch", &e)],
        },
        _ => vec![run(&cli)],
    };
    for r in &reports {
        if emit(&mut out, r, format).is_err() {
            return ExitCode::from(1);
        }
    }
    let status = reports.iter().map(Report::status).max();
    ExitCode::from(status.map_or(0, |s| s.exit_code()) as u8)
}
