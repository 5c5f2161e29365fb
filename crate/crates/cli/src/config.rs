//! The run configuration. Every invocation of `lrc` maps onto one
//! `RunConfig`, which can be printed with `--print-config` and replayed
//! with `lrc run FILE`.

use std::path::PathBuf;

use clap::{Args, Subcommand, ValueEnum};
use lrc_core::closedform::Filter;
use lrc_core::{LrcError, Result};
use serde::{Deserialize, Serialize};

pub const DEFAULT_MAX_LEN: usize = 4;
pub const DEFAULT_DUAN_CAP: usize = 8;
pub const DEFAULT_GROUP_CAP: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum MatrixSource {
    Preset(String),
    File(PathBuf),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum FilterChoice {
    #[default]
    Admissible,
    All,
}

impl From<FilterChoice> for Filter {
    fn from(f: FilterChoice) -> Filter {
        match f {
            FilterChoice::Admissible => Filter::Admissible,
            FilterChoice::All => Filter::All,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum AuditKind {
    Nonneg,
    TPositivity,
    Commutativity,
    Root,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize, Args)]
#[serde(deny_unknown_fields)]
pub struct ComputeArgs {
    #[arg(long)]
    pub u: String,
    #[arg(long)]
    pub v: String,
    /// Target element; a reduced word also serves as the base word.
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<String>,
    /// Base word, a reduced word for w.
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iota: Option<String>,
    /// Also print the equivariant coefficient.
    #[arg(long)]
    #[serde(default)]
    pub equivariant: bool,
    /// Print every summand.
    #[arg(long)]
    #[serde(default)]
    pub trace: bool,
    /// Only count summands.
    #[arg(long, conflicts_with = "trace")]
    #[serde(default)]
    pub count_only: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize, Args)]
#[serde(deny_unknown_fields)]
pub struct TableArgs {
    /// Lengths of the two factors.
    #[arg(long, num_args = 2, value_names = ["L1", "L2"], required = true)]
    pub len: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize, Args)]
#[serde(deny_unknown_fields)]
pub struct DeformArgs {
    #[arg(long)]
    pub u: String,
    #[arg(long)]
    pub v: String,
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<String>,
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iota: Option<String>,
    /// Evaluate at this value of t.
    #[arg(long, allow_hyphen_values = true)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub at: Option<String>,
    /// One line per reduced word of w.
    #[arg(long, conflicts_with = "classes")]
    #[serde(default)]
    pub per_word: bool,
    /// One line per commutativity class of reduced words of w.
    #[arg(long)]
    #[serde(default)]
    pub classes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Args)]
#[serde(deny_unknown_fields)]
pub struct AuditArgs {
    #[arg(long, value_enum)]
    pub kind: AuditKind,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize, Args)]
#[serde(deny_unknown_fields)]
pub struct ReducedWordsArgs {
    #[arg(long)]
    pub w: String,
    /// Group the words into commutativity classes.
    #[arg(long)]
    #[serde(default)]
    pub classes: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize, Args)]
#[serde(deny_unknown_fields)]
pub struct Rank2Args {
    /// Value of a (symbolic when omitted).
    #[arg(long, allow_hyphen_values = true)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Subcommand)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum Command {
    /// A single structure constant c^w_{u,v}.
    Compute(ComputeArgs),
    /// Products of dual classes with factors of fixed lengths.
    Table(TableArgs),
    /// Compare the closed form with the independent oracles.
    Crosscheck,
    /// The t-deformed equivariant coefficient.
    Deform(DeformArgs),
    /// Exhaustive positivity audits.
    Audit(AuditArgs),
    /// All reduced words of an element.
    ReducedWords(ReducedWordsArgs),
    /// Rank-2 binomial tables C(k,m) and D(k,m).
    Rank2(Rank2Args),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<MatrixSource>,
    pub command: Command,
    #[serde(default)]
    pub format: Format,
    #[serde(default)]
    pub filter: FilterChoice,
    #[serde(default = "default_max_len")]
    pub max_len: usize,
    #[serde(default = "default_duan_cap")]
    pub duan_cap: usize,
    #[serde(default = "default_group_cap")]
    pub group_cap: usize,
    /// Worker threads, 0 = one per core.
    #[serde(default)]
    pub threads: usize,
    #[serde(default)]
    pub no_validate: bool,
}

fn default_max_len() -> usize {
    DEFAULT_MAX_LEN
}

fn default_duan_cap() -> usize {
    DEFAULT_DUAN_CAP
}

fn default_group_cap() -> usize {
    DEFAULT_GROUP_CAP
}

impl RunConfig {
    pub fn new(matrix: Option<MatrixSource>, command: Command) -> Self {
        RunConfig {
            matrix,
            command,
            format: Format::Text,
            filter: FilterChoice::Admissible,
            max_len: DEFAULT_MAX_LEN,
            duan_cap: DEFAULT_DUAN_CAP,
            group_cap: DEFAULT_GROUP_CAP,
            threads: 0,
            no_validate: false,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| LrcError::Config(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }
}
