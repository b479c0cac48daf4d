use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "polish",
    version,
    about = "Parse and evaluate Polish-notation logic formulas"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Print nothing; report through the exit status only.
    #[arg(long, short, global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check well-formedness and show the tree, infix form and variables.
    Parse(ParseArgs),
    /// Tabulate a formula over every assignment.
    Table(TableArgs),
    /// Decide whether a formula is a tautology or two formulas are equivalent.
    Check(CheckArgs),
    /// Evaluate a formula under one assignment.
    Eval(EvalArgs),
    /// List the assignments where two semantics disagree.
    Diff(DiffArgs),
    /// Dump the connective matrices.
    Matrices(MatricesArgs),
}

#[derive(Debug, Args)]
pub struct ParseArgs {
    pub expr: String,

    /// Extra operators as `symbol:arity` pairs, e.g. `+:2,-:1`.
    #[arg(long)]
    pub ops: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Logic {
    Classical,
    Lukasiewicz,
    Kleene,
    Matrix,
    Projection,
}

impl Logic {
    pub fn label(self) -> &'static str {
        match self {
            Logic::Classical => "classical",
            Logic::Lukasiewicz => "lukasiewicz",
            Logic::Kleene => "kleene",
            Logic::Matrix => "matrix",
            Logic::Projection => "projection",
        }
    }
}

#[derive(Debug, Args)]
pub struct BasisArgs {
    /// Dimension of the truth vectors.
    #[arg(long, default_value_t = 2)]
    pub dim: usize,

    /// `canonical` or `random:<seed>`.
    #[arg(long, default_value = "canonical")]
    pub basis: String,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    pub expr: String,

    #[arg(long, value_enum, default_value_t = Logic::Classical)]
    pub logic: Logic,

    /// Comma-separated weights for matrix and projection tables.
    #[arg(long)]
    pub grid: Option<String>,

    #[command(flatten)]
    pub basis: BasisArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckMode {
    Tautology,
    Equiv,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub expr: String,

    /// Second formula, required with `--mode equiv`.
    pub other: Option<String>,

    #[arg(long, value_enum, default_value_t = CheckMode::Tautology)]
    pub mode: CheckMode,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    pub expr: String,

    /// Assignment such as `p=0.5,q=1`.
    #[arg(long, default_value = "")]
    pub assign: String,

    #[arg(long, value_enum, default_value_t = Logic::Classical)]
    pub logic: Logic,

    #[command(flatten)]
    pub basis: BasisArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Pair {
    LukKleene,
    LukMatrix,
}

#[derive(Debug, Args)]
pub struct DiffArgs {
    pub expr: String,

    #[arg(long, value_enum, default_value_t = Pair::LukKleene)]
    pub pair: Pair,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SymbolChoice {
    N,
    C,
    K,
    A,
    All,
}

#[derive(Debug, Args)]
pub struct MatricesArgs {
    #[command(flatten)]
    pub basis: BasisArgs,

    #[arg(long, value_enum, ignore_case = true, default_value_t = SymbolChoice::All)]
    pub symbol: SymbolChoice,
}
