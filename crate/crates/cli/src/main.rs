//! `loopforge`: invariant transversals, RCC loop folders and envelopes from the command
//! line.
//!
//! Exit codes: 0 on success, 1 when a check fails or a counterexample is found, 2 on a
//! usage or input error.

mod commands;
mod config;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use commands::{CliError, CliResult, EnumerateArgs, Outcome};
use config::{Format, RunConfig, BUDGET_ENV};

#[derive(Parser, Debug)]
#[command(name = "loopforge", version, about = "Invariant transversals, RCC loop folders and their envelopes")]
struct Cli {
    /// Largest group order accepted from input files.
    #[arg(long, global = true)]
    max_order: Option<usize>,
    /// Search node budget (overrides LOOPFORGE_BUDGET).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Seed recorded in reports; all sampling derives from it.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Directory receiving reports and emitted `.grp`/`.folder`/`.loop` files.
    #[arg(long, global = true)]
    out_dir: Option<PathBuf>,
    /// Report formats (repeatable); the first is printed to stdout.
    #[arg(long = "format", value_enum, global = true)]
    formats: Vec<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the built-in catalog of small groups.
    Catalog {
        /// Largest group order listed (at most 63).
        #[arg(long, default_value_t = 40)]
        max: usize,
    },
    /// Enumerate the G-invariant transversals of H\G containing 1.
    Enumerate {
        /// Group file (`.grp`).
        #[arg(long)]
        group: PathBuf,
        /// Generators of H as element indices, e.g. "1 3".
        #[arg(long)]
        subgroup: Option<String>,
        /// Take H = Z(G).
        #[arg(long)]
        subgroup_center: bool,
        /// Stop after this many transversals (0 = all).
        #[arg(long, default_value_t = 0)]
        limit: usize,
        /// Keep only transversals generating G.
        #[arg(long)]
        require_generating: bool,
        /// Also count all invariant transversals without listing them.
        #[arg(long)]
        count: bool,
    },
    /// Validate a `.folder` file and build its loop.
    Folder {
        file: PathBuf,
        /// Check transversality against every conjugate of H, not only via invariance.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Inspect a `.loop` file; for RCC loops, build and verify the envelope.
    Loop { file: PathBuf },
    /// Detect a Frobenius structure; with --subgroup, count and lift transversals.
    Frobenius {
        /// Group file (`.grp`).
        #[arg(long)]
        group: PathBuf,
        /// Generators of a subgroup H of the complement.
        #[arg(long)]
        subgroup: Option<String>,
    },
    /// Build a generating transversal in an abelian group, or lift one from a quotient.
    AbelianTransversal {
        /// Group file (`.grp`).
        #[arg(long)]
        group: PathBuf,
        /// Generators of H as element indices, e.g. "1 3".
        #[arg(long)]
        subgroup: String,
        /// Generators of a normal subgroup Q: lift a transversal of G/Q.
        #[arg(long)]
        quotient_lift: Option<String>,
    },
    /// Check "H abelian with an RCC folder implies G' ∩ H = 1" over the catalog.
    VerifyConjecture {
        /// Check groups of order strictly below this bound.
        #[arg(long, default_value_t = 40)]
        catalog_max: usize,
        /// Also count all invariant transversals per subgroup.
        #[arg(long)]
        full_enumeration: bool,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyze an envelope of an RCC loop of order pq.
    AnalyzePq {
        /// Folder file (`.folder`) of an envelope with loop order pq.
        #[arg(long)]
        folder: PathBuf,
        /// The prime |K:H|.
        #[arg(long)]
        p: usize,
        /// The prime |G:K|.
        #[arg(long)]
        q: usize,
    },
}

fn run(cli: &Cli, cfg: &RunConfig) -> CliResult<Outcome> {
    match &cli.command {
        Command::Catalog { max } => commands::catalog(*max),
        Command::Enumerate { group, subgroup, subgroup_center, limit, require_generating, count } => commands::enumerate(
            &EnumerateArgs {
                group,
                subgroup: subgroup.as_deref(),
                subgroup_center: *subgroup_center,
                limit: *limit,
                require_generating: *require_generating,
                count: *count,
            },
            cfg,
        ),
        Command::Folder { file, exhaustive } => commands::folder(file, *exhaustive, cfg),
        Command::Loop { file } => commands::loop_cmd(file, cfg),
        Command::Frobenius { group, subgroup } => commands::frobenius(group, subgroup.as_deref(), cfg),
        Command::AbelianTransversal { group, subgroup, quotient_lift } => {
            commands::abelian_transversal(group, subgroup, quotient_lift.as_deref(), cfg)
        }
        Command::VerifyConjecture { catalog_max, full_enumeration, .. } => {
            commands::verify_conjecture(*catalog_max, *full_enumeration, cfg)
        }
        Command::AnalyzePq { folder, p, q } => commands::analyze_pq(folder, *p, *q),
    }
}

fn render(o: &Outcome, cfg: &RunConfig, format: Format) -> String {
    match format {
        Format::Json => {
            let report = json!({
                "tool": "loopforge",
                "version": env!("CARGO_PKG_VERSION"),
                "command": o.command,
                "config": cfg,
                "result": o.result,
            });
            let mut s = serde_json::to_string_pretty(&report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => o.text.clone(),
        Format::Csv => o.csv.clone().unwrap_or_else(|| o.text.clone()),
    }
}

fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    std::fs::write(path, contents).map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
}

/// All output goes through here, in a fixed order.
fn emit(cli: &Cli, o: &Outcome, cfg: &RunConfig) -> CliResult<()> {
    print!("{}", render(o, cfg, cfg.emit_formats[0]));
    if let Command::VerifyConjecture { out: Some(path), .. } = &cli.command {
        write_file(path, &render(o, cfg, Format::Json))?;
    }
    if let Some(dir) = &cfg.output_directory {
        std::fs::create_dir_all(dir).map_err(|e| CliError::Usage(format!("cannot create {}: {e}", dir.display())))?;
        for &f in &cfg.emit_formats {
            write_file(&dir.join(format!("{}.{}", o.command, f.extension())), &render(o, cfg, f))?;
        }
        for (name, contents) in &o.artifacts {
            write_file(&dir.join(name), contents)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let cfg = match RunConfig::resolve(
        cli.max_order,
        cli.budget,
        std::env::var(BUDGET_ENV).ok(),
        cli.seed,
        cli.out_dir.clone(),
        cli.formats.clone(),
    ) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let result = run(&cli, &cfg).and_then(|o| emit(&cli, &o, &cfg).map(|()| o.failed));
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(CliError::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
