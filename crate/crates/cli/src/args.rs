use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use garside_core::coxeter::{catalog, Bond, CatalogSpec, CoxeterMatrix};
use garside_core::error::{Error, Result};

#[derive(Debug, Parser)]
#[command(name = "garside", version, about = "Small roots, low elements and Garside families of Coxeter systems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub system: SystemArgs,

    #[command(flatten)]
    pub caps: Caps,

    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Dot,
    Text,
}

#[derive(Debug, Args)]
pub struct SystemArgs {
    /// Catalog type: A, B, C, D, H, I2, affineA, affineB, affineC, rightAngled.
    #[arg(long = "type", global = true)]
    pub ty: Option<String>,

    /// Rank (the affine rank for affine types).
    #[arg(long, global = true)]
    pub rank: Option<usize>,

    /// Bond label for I2 (a number or `inf`).
    #[arg(long, global = true)]
    pub bond: Option<Bond>,

    /// Commuting pair `a,b` for rightAngled; repeatable.
    #[arg(long = "commute", global = true, value_parser = parse_pair)]
    pub commute: Vec<(usize, usize)>,

    /// JSON presentation document (catalog descriptor or explicit matrix).
    #[arg(long, global = true, conflicts_with = "ty")]
    pub matrix: Option<PathBuf>,

    /// Generator order, comma separated.
    #[arg(long, global = true, value_delimiter = ',')]
    pub order: Vec<String>,
}

#[derive(Debug, Args, Clone, Copy)]
pub struct Caps {
    #[arg(long, global = true, default_value_t = garside_core::roots::DEFAULT_SMALL_ROOT_CAP, value_parser = positive)]
    pub cap_small: usize,

    #[arg(long, global = true, default_value_t = garside_core::low::DEFAULT_LOW_CAP, value_parser = positive)]
    pub cap_low: usize,

    /// Group elements listed for spherical systems.
    #[arg(long, global = true, default_value_t = garside_core::low::DEFAULT_GROUP_CAP, value_parser = positive)]
    pub cap_bfs: usize,

    #[arg(long, global = true, default_value_t = garside_core::automaton::DEFAULT_STATE_CAP, value_parser = positive)]
    pub cap_states: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Root data.
    #[command(subcommand)]
    Roots(RootsCommand),
    /// Low elements.
    #[command(subcommand)]
    Low(LowCommand),
    /// The smallest Garside family.
    #[command(subcommand)]
    Garside(GarsideCommand),
    /// Family normal form of a monoid word.
    Nf { word: Vec<String> },
    /// Exit 0 iff two monoid words are equal.
    Eq { a: String, b: String },
    /// Exit 0 iff the simple element `f` left-divides `word`.
    Divides { f: String, word: String },
    /// Right-lcm of two simple elements; exit 1 when there is none.
    Lcm { f: String, g: String },
    /// The canonical automaton of reduced words.
    #[command(subcommand)]
    Automaton(AutomatonCommand),
    /// Cayley graph of the smallest family.
    Cayley,
    /// Summary counts; `table1` runs the six affine presets and checks
    /// them against the reference counts.
    Report { preset: Option<Preset> },
}

#[derive(Debug, Subcommand)]
pub enum RootsCommand {
    Small,
}

#[derive(Debug, Subcommand)]
pub enum LowCommand {
    Enumerate,
}

#[derive(Debug, Subcommand)]
pub enum GarsideCommand {
    Family,
    Extremals,
    Verify,
}

#[derive(Debug, Subcommand)]
pub enum AutomatonCommand {
    Count,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    Table1,
}

fn parse_pair(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s.split_once([',', '-']).ok_or_else(|| format!("expected `a,b`, got `{s}`"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((num(a)?, num(b)?))
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("cap must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

impl SystemArgs {
    pub fn is_given(&self) -> bool {
        self.ty.is_some() || self.matrix.is_some()
    }

    pub fn matrix(&self) -> Result<CoxeterMatrix> {
        let matrix = if let Some(path) = &self.matrix {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            CoxeterMatrix::parse(&text)?
        } else if let Some(ty) = &self.ty {
            catalog(&CatalogSpec { ty: ty.clone(), rank: self.rank, bond: self.bond, commuting: self.commute.clone() })?
        } else {
            return Err(Error::Parse("give --type or --matrix".into()));
        };
        if self.order.is_empty() {
            Ok(matrix)
        } else {
            matrix.reordered(&self.order)
        }
    }

    pub fn label(&self) -> String {
        match (&self.matrix, &self.ty) {
            (Some(p), _) => p.display().to_string(),
            (None, Some(ty)) => match (self.rank, self.bond) {
                (_, Some(b)) => format!("{ty}({b})"),
                (Some(n), None) => format!("{ty}{n}"),
                (None, None) => ty.clone(),
            },
            (None, None) => String::new(),
        }
    }
}
