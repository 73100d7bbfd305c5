use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use forge::verify::{
    registry, run_checks, select, to_json, to_markdown, validate_registry, write_atomic, Status, Workbench,
};

#[derive(Parser)]
#[command(name = "forge", version, about = "Finite group workbench: build groups and modules, run named checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List registered checks.
    List,
    /// Run checks and write reports.
    Check {
        /// Check ids; dependencies are added automatically.
        ids: Vec<String>,
        /// Run every registered check.
        #[arg(long, conflicts_with = "ids")]
        all: bool,
        /// JSON report path.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Markdown report path.
        #[arg(long)]
        md: Option<PathBuf>,
        /// Worker threads.
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
        /// Directory for cached stabilizer chains.
        #[arg(long, env = "FORGE_CACHE_DIR")]
        cache_dir: Option<PathBuf>,
        /// Seed for randomized searches.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let reg = registry();
    if let Err(e) = validate_registry(&reg) {
        eprintln!("forge: {e}");
        return ExitCode::from(2);
    }
    match cli.command {
        Command::List => {
            let mut out = std::io::stdout().lock();
            for c in &reg {
                if writeln!(out, "{:<28} {}", c.id, c.claim).is_err() {
                    break;
                }
            }
            ExitCode::SUCCESS
        }
        Command::Check { ids, all, json, md, jobs, cache_dir, seed } => {
            if ids.is_empty() && !all {
                eprintln!("forge: name at least one check id or pass --all");
                return ExitCode::from(2);
            }
            let selected = if all {
                reg.iter().collect()
            } else {
                match select(&reg, &ids) {
                    Ok(s) => s,
                    Err(e) => {
                        eprintln!("forge: {e}");
                        return ExitCode::from(2);
                    }
                }
            };
            let wb = Workbench::new(seed, cache_dir);
            let results = run_checks(&selected, &wb, jobs);
            for r in &results {
                let tag = match r.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Skip => "skip",
                };
                println!("{tag}  {:<28} {} ms", r.check_id, r.runtime_ms);
            }
            let outputs = [(json, to_json(&results)), (md, to_markdown(&results))];
            for (path, text) in outputs {
                if let Some(p) = path {
                    if let Err(e) = write_atomic(&p, &text) {
                        eprintln!("forge: cannot write {}: {e}", p.display());
                        return ExitCode::from(2);
                    }
                }
            }
            let pass = results.iter().filter(|r| r.status == Status::Pass).count();
            println!("{pass}/{} passed", results.len());
            if pass == results.len() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
