//! Front end for `lrc`: argument parsing, the run configuration and
//! rendering. Exit codes: 0 ok, 1 violation or disagreement, 2 bad input,
//! 3 unmet precondition, 4 resource cap.

pub mod commands;
pub mod config;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use lrc_core::LrcError;

use commands::{execute, Output};
use config::{Command, FilterChoice, Format, MatrixSource, RunConfig, DEFAULT_DUAN_CAP, DEFAULT_GROUP_CAP, DEFAULT_MAX_LEN};

#[derive(Debug, Parser)]
#[command(name = "lrc", version, about = "Exact structure constants for Coxeter groups with a quasi-Cartan matrix")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: TopCommand,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Built-in matrix, e.g. A3, H3, affine-SL2 or dihedral(2,2,0).
    #[arg(long, global = true, conflicts_with = "matrix")]
    pub preset: Option<String>,
    /// Matrix config file (JSON).
    #[arg(long, global = true)]
    pub matrix: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true, value_enum, default_value_t = FilterChoice::Admissible)]
    pub filter: FilterChoice,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_LEN)]
    pub max_len: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_DUAN_CAP)]
    pub duan_cap: usize,
    /// Give up once a group enumeration passes this many elements.
    #[arg(long, global = true, default_value_t = DEFAULT_GROUP_CAP)]
    pub group_cap: usize,
    /// Worker threads, 0 = one per core.
    #[arg(long, global = true, env = "LRC_THREADS", default_value_t = 0)]
    pub threads: usize,
    /// Skip the matrix compatibility check.
    #[arg(long, global = true)]
    pub no_validate: bool,
    /// Print the run configuration as JSON instead of running it.
    #[arg(long, global = true)]
    pub print_config: bool,
}

#[derive(Debug, Subcommand)]
pub enum TopCommand {
    #[command(flatten)]
    Op(Command),
    /// Run a saved configuration.
    Run { config: PathBuf },
}

impl Cli {
    pub fn into_config(self) -> Result<RunConfig, LrcError> {
        let g = self.global;
        match self.command {
            TopCommand::Run { config } => {
                let text =
                    std::fs::read_to_string(&config).map_err(|e| LrcError::Config(format!("{}: {e}", config.display())))?;
                RunConfig::from_json(&text)
            }
            TopCommand::Op(command) => {
                let matrix = match (g.preset, g.matrix) {
                    (Some(p), _) => Some(MatrixSource::Preset(p)),
                    (None, Some(f)) => Some(MatrixSource::File(f)),
                    (None, None) => None,
                };
                Ok(RunConfig {
                    matrix,
                    command,
                    format: g.format,
                    filter: g.filter,
                    max_len: g.max_len,
                    duan_cap: g.duan_cap,
                    group_cap: g.group_cap,
                    threads: g.threads,
                    no_validate: g.no_validate,
                })
            }
        }
    }
}

pub fn exit_code(e: &LrcError) -> i32 {
    match e {
        LrcError::Parse(_)
        | LrcError::InvalidMatrix(_)
        | LrcError::InvalidField(_)
        | LrcError::LetterOutOfRange { .. }
        | LrcError::UnknownPreset(_)
        | LrcError::Config(_) => 2,
        LrcError::TooLarge { .. } => 4,
        _ => 3,
    }
}

fn render(cfg: &RunConfig, out: &Output) -> String {
    match cfg.format {
        Format::Text => out.text.iter().map(|l| format!("{l}\n")).collect(),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&out.json).expect("json")),
    }
}

/// Runs one invocation and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let print_config = cli.global.print_config;
    let cfg = match cli.into_config() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    if print_config {
        println!("{}", cfg.to_json());
        return 0;
    }
    if cfg.threads > 0 {
        // Only fails if a pool already exists, which is harmless.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cfg.threads).build_global();
    }
    match execute(&cfg) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(render(&cfg, &out).as_bytes());
            out.status
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
