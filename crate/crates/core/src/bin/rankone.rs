use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rankone::catalog::{build_example, AnyBundle, ExampleParams};
use rankone::format::{read_file, write_any, write_file};
use rankone::report::{analyze_any, AnalyzeOptions};
use rankone::{Error, FieldSpec};

/// Structure analysis of finite-dimensional algebras given by structure constants.
#[derive(Parser)]
#[command(name = "rankone", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the algebra axioms and every optional component of a file.
    Validate { file: PathBuf },
    /// Run the full analysis.
    Analyze {
        file: PathBuf,
        /// Print the machine-readable report.
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Ignore idempotents stored in the file.
        #[arg(long)]
        automatic: bool,
    },
    /// Print the per-block rank-one verdicts.
    RankOne {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write one of the built-in examples.
    Example {
        /// group-c2, group-c3, group-s3, smash, rrca-c2 or usl2
        name: String,
        #[arg(long, default_value = "Q")]
        field: FieldSpec,
        /// Truncation degree (smash).
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Cherednik parameter (rrca-c2).
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        c: String,
        /// Characteristic (usl2).
        #[arg(long, default_value_t = 3)]
        p: u32,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Multiplicities of the named modules and the reciprocity checks.
    Bgg {
        file: PathBuf,
        /// Comma-separated module names.
        #[arg(long, value_delimiter = ',', required = true)]
        vermas: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

fn load(file: &Path) -> Result<AnyBundle, Error> {
    let b = read_file(file)?;
    b.validate()?;
    Ok(b)
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Validate { file } => {
            let b = load(&file)?;
            println!("ok: dimension {}", b.dim());
            Ok(0)
        }
        Command::Analyze { file, json, seed, automatic } => {
            let b = load(&file)?;
            let opts = AnalyzeOptions { seed, use_supplied_idempotents: !automatic, ..Default::default() };
            let report = analyze_any(&b, &opts)?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.summary());
            }
            Ok(report.exit_code())
        }
        Command::RankOne { file, seed } => {
            let b = load(&file)?;
            let report = analyze_any(&b, &AnalyzeOptions { seed, ..Default::default() })?;
            for (i, blk) in report.per_block.iter().enumerate() {
                let v = serde_json::to_value(blk.verdict).unwrap_or_default();
                println!("block {i} {:?}: {}", blk.classes, v.as_str().unwrap_or(""));
            }
            let g = serde_json::to_value(report.verdict.global).unwrap_or_default();
            println!("global: {}", g.as_str().unwrap_or(""));
            Ok(i32::from(report.verdict.violated()))
        }
        Command::Example { name, field, n, c, p, output } => {
            let b = build_example(&name, &ExampleParams { field, n, c, p })?;
            b.validate()?;
            match output {
                Some(path) => write_file(&path, &b)?,
                None => print!("{}", write_any(&b)),
            }
            Ok(0)
        }
        Command::Bgg { file, vermas, seed, json } => {
            let b = load(&file)?;
            let opts = AnalyzeOptions { seed, vermas: Some(vermas), ..Default::default() };
            let report = analyze_any(&b, &opts)?;
            let m = report.multiplicity.expect("modules requested");
            if json {
                println!("{}", serde_json::to_string_pretty(&m).expect("json"));
            } else {
                println!("modules    {:?}", m.vermas);
                println!("M          {:?}", m.matrix);
                println!("C          {:?}", report.cartan);
                println!("C = MtM    {}", m.bgg_holds);
                println!("rows ∝ dim {}", m.proportional_holds);
                println!("rank M ~ C {}", m.rank_equivalence_holds);
            }
            Ok(i32::from(!(m.bgg_holds && m.proportional_holds && m.rank_equivalence_holds)))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
