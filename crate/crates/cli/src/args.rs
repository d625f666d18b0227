use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "wfano",
    version,
    about = "Decide whether the blow-up of P³ along a smooth curve is (weak) Fano"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a curve type (g, d).
    Classify {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Curves on a smooth cubic surface.
    #[command(subcommand)]
    Cubic(CubicCommand),
    /// Curves on the rational quartic with an elliptic singularity.
    #[command(subcommand)]
    Quartic(QuarticCommand),
    /// Which bad secant curves can occur for a curve of the type.
    Secants {
        #[command(flatten)]
        curve: CurveArgs,
    },
    /// Residual of a complete-intersection linkage.
    Linkage {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        n1: i64,
        #[arg(long)]
        n2: i64,
    },
    /// Emit or verify the embedded tables.
    #[command(subcommand)]
    Tables(TablesCommand),
    /// Blow-ups of points.
    #[command(subcommand)]
    Points(PointsCommand),
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub genus: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub degree: i64,
}

#[derive(Debug, Subcommand)]
pub enum CubicCommand {
    /// List the canonical classes whose blow-up is weak Fano.
    Enumerate {
        #[arg(long, value_enum, default_value_t = CategoryFilter::All)]
        category: CategoryFilter,
    },
    /// Classify a class "k;m1,...,m6" on the cubic.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        class: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum QuarticCommand {
    /// Recompute every row of the embedded quartic table.
    VerifyTable4,
    /// All admissible sorted classes realising (g, d).
    Search {
        #[command(flatten)]
        curve: CurveArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum TablesCommand {
    Emit {
        #[arg(long, value_enum)]
        table: TableName,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check a previously emitted JSON table against the embedded data.
    Verify {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum PointsCommand {
    /// Numerical verdict and incidence check for a point file.
    Classify {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Markdown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CategoryFilter {
    Fano,
    Small,
    Divisorial,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableName {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    CubicI,
    CubicIi,
    CubicIii,
    #[value(name = "4")]
    Four,
}

impl TableName {
    pub const ALL: [TableName; 6] = [
        TableName::One,
        TableName::Two,
        TableName::CubicI,
        TableName::CubicIi,
        TableName::CubicIii,
        TableName::Four,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TableName::One => "1",
            TableName::Two => "2",
            TableName::CubicI => "cubic-i",
            TableName::CubicIi => "cubic-ii",
            TableName::CubicIii => "cubic-iii",
            TableName::Four => "4",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.as_str() == s)
    }
}
