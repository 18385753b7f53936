use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use cli_verify::battery::BatterySpec;
use cli_verify::commands::{analyze_text, battery, construct, recipe, RecipeParams};
use cli_verify::ReportJson;

#[derive(Parser)]
#[command(name = "brloci", about = "Degeneracy loci of Buchsbaum-Rim sections: construct, analyze, verify")]
struct Cli {
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Degree cap for Gröbner computations.
    #[arg(long, global = true, env = "BRLOCI_MAX_DEGREE")]
    max_degree: Option<u32>,
    #[arg(long = "char", global = true, default_value_t = 32003)]
    characteristic: u32,
    /// Write the JSON report (or report stream) here instead of stdout.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Random instance with the given twists.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        f: Vec<i32>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        g: Vec<i32>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        p: Vec<i32>,
    },
    /// Full report for one instance file.
    Analyze { file: PathBuf },
    /// Reports for files or a seeded battery; nonzero exit iff some claim fails.
    Verify {
        files: Vec<PathBuf>,
        #[arg(long)]
        battery: Option<String>,
        #[arg(long, default_value_t = 1)]
        seeds: u64,
    },
    /// Instance file from a named construction.
    Recipe {
        name: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<u32>,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        twist: Option<i32>,
        #[arg(long, default_value_t = 4)]
        points: usize,
    },
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.json {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<bool> {
    match &cli.cmd {
        Cmd::Construct { n, f, g, p } => {
            let file = construct(*n, f, g, p, cli.seed, cli.characteristic)?;
            print!("{}", file.to_text());
            Ok(true)
        }
        Cmd::Recipe { name, n, degrees, k, twist, points } => {
            let params = RecipeParams {
                n: *n,
                degrees: degrees.clone(),
                k: *k,
                twist: *twist,
                points: *points,
                seed: cli.seed,
                characteristic: cli.characteristic,
            };
            print!("{}", recipe(name, &params)?.to_text());
            Ok(true)
        }
        Cmd::Analyze { file } => {
            let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
            let report = analyze_text(&text, cli.max_degree).with_context(|| file.display().to_string())?;
            eprint!("{}", report.summary());
            emit(cli, &(serde_json::to_string_pretty(&report)? + "\n"))?;
            Ok(!report.failed())
        }
        Cmd::Verify { files, battery: spec, seeds } => {
            let mut ok = true;
            let mut stream = String::new();
            let mut push = |label: String, r: Result<ReportJson, cli_verify::CliError>| -> Result<()> {
                match r {
                    Ok(rep) => {
                        let fails = rep.diff.iter().filter(|c| c.status == sections_loci::Status::Fail).count();
                        eprintln!("{label}: {} ({} claims, {fails} failed)", rep.verdict.as_str(), rep.diff.len());
                        ok &= !rep.failed();
                        stream.push_str(&serde_json::to_string(&rep)?);
                        stream.push('\n');
                    }
                    Err(e) => {
                        eprintln!("{label}: ERROR {e}");
                        ok = false;
                    }
                }
                Ok(())
            };
            for f in files {
                let r = fs::read_to_string(f).map_err(cli_verify::CliError::from).and_then(|t| analyze_text(&t, cli.max_degree));
                push(f.display().to_string(), r)?;
            }
            if let Some(spec) = spec {
                let spec = BatterySpec::parse(spec)?;
                for (case, r) in battery(&spec, *seeds, cli.characteristic) {
                    push(format!("n={} r={} t={} g={} seed={}", case.n, case.r, case.t, case.g, case.seed), r)?;
                }
            }
            emit(cli, &stream)?;
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
