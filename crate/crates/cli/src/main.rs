use std::process::ExitCode;

use clap::Parser;
use graded_hilbert_cli::{parse_dims_arg, parse_group_arg, render_human, run, Checks, CliError, JobSpec};

/// Hilbert series of the identity component of a group-graded free algebra.
#[derive(Debug, Parser)]
#[command(name = "graded-hilbert", version)]
struct Args {
    /// Preset (cyclic:N, dihedral:N, symmetric:N, product:A+B), inline JSON, or a JSON file.
    #[arg(long)]
    group: String,
    /// JSON map from element label or index to dimension, inline or as a file.
    #[arg(long, default_value = "{}")]
    dims: String,
    /// Number of series coefficients to print and to check against the recursion.
    #[arg(long, default_value_t = 30)]
    expand: usize,
    /// Comma-separated checks: oracle, structure, fg, components (or all, none).
    #[arg(long, default_value = "all")]
    check: String,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
    /// Print nothing unless a check fails.
    #[arg(long)]
    quiet: bool,
}

fn job(args: &Args) -> Result<JobSpec, CliError> {
    let group = parse_group_arg(&args.group)?;
    let dims = parse_dims_arg(&args.dims)?;
    let checks = Checks::parse(&args.check)?;
    Ok(JobSpec::new(group, &dims, args.expand, checks)?)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let report = match job(&args).and_then(|spec| run(&spec)) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let passed = report.all_checks_passed();
    if args.json {
        println!("{}", report.to_json());
    } else if !args.quiet {
        print!("{}", render_human(&report));
    } else if !passed {
        for (name, c) in report.checks.iter().filter(|(_, c)| !c.passed) {
            eprintln!("check {name} failed: {}", c.detail);
        }
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}
