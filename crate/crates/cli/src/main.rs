//! `tricenter`: electrostatic and Riesz-potential centers of a triangle
//! from the command line.
//!
//! Exit status is 0 on success, 1 when `verify` finds a mismatch and 2 on
//! bad input or solver failure. Errors are written to stderr as a JSON
//! object `{"error": {"kind", "message"}}`.

mod args;
mod commands;
mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use tricenter_core::{Error, Result};

use args::{Cli, Command, Format};
use commands::Report;

fn sink(cli: &Cli) -> Result<Box<dyn Write>> {
    match &cli.out {
        Some(path) => {
            let f = File::create(path)
                .map_err(|e| Error::InvalidInput(format!("cannot create {}: {e}", path.display())))?;
            Ok(Box::new(BufWriter::new(f)))
        }
        None => Ok(Box::new(BufWriter::new(io::stdout().lock()))),
    }
}

fn run(cli: &Cli) -> Result<u8> {
    let format = cli.format;
    let report: Report = match &cli.command {
        Command::Center { triangle } => {
            commands::center(&triangle.triangle()?, cli.solver_tol()?, format.unwrap_or(Format::Json))?
        }
        Command::RpCenter { triangle, p } => commands::rp(
            &triangle.triangle()?,
            *p,
            cli.solver_tol()?,
            format.unwrap_or(Format::Json),
        )?,
        Command::Arc {
            triangle,
            p_min,
            p_max,
            steps,
        } => commands::arc(
            &triangle.triangle()?,
            *p_min,
            *p_max,
            *steps,
            cli.solver_tol()?,
            format.unwrap_or(Format::Csv),
        )?,
        Command::LambdaCurve {
            triangle,
            lambda_min,
            lambda_max,
            steps,
        } => commands::curve(
            &triangle.triangle()?,
            *lambda_min,
            *lambda_max,
            *steps,
            cli.solver_tol()?,
            format.unwrap_or(Format::Csv),
        )?,
        Command::Grid { triangle, n } => {
            if format == Some(Format::Json) {
                return Err(Error::InvalidInput("grid output is CSV only".into()));
            }
            let tri = triangle.triangle()?;
            let mut out = sink(cli)?;
            commands::grid(&tri, *n, &mut out)?;
            out.flush()
                .map_err(|e| Error::InvalidInput(format!("write failed: {e}")))?;
            return Ok(0);
        }
        Command::Verify { json } => {
            let format = if *json { Some(Format::Json) } else { format };
            commands::verify(cli.tol, format)?
        }
        Command::SearchValue { triangle, digits } => {
            commands::search_value(&triangle.side_lengths()?, *digits, cli.solver_tol()?, format)?
        }
        Command::Survey { n, seed } => commands::survey(*n, *seed, format.unwrap_or(Format::Json))?,
    };
    let mut out = sink(cli)?;
    out.write_all(report.body.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| Error::InvalidInput(format!("write failed: {e}")))?;
    Ok(report.code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            eprintln!("{}", output::usage_error_json(&e.to_string()));
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("{}", output::error_json(&e));
            ExitCode::from(2)
        }
    }
}
