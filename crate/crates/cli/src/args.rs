use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ribbon_core::verify::Suite;
use ribbon_core::{Permutation, Word};

#[derive(Debug, Parser)]
#[command(
    name = "ribbon",
    version,
    about = "Exact enumeration of ribbon tilings of simple diagrams",
    after_help = "Exit codes: 0 ok, 1 internal error, 2 usage, 3 resource limit, 4 verification failure."
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest n + k for searches that materialize results.
    #[arg(long, global = true, value_name = "SYMBOLS")]
    pub budget: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Search the permutation model.
    Enum,
    /// Evaluate the counting polynomial (needs n > 2k - 1).
    Formula,
    /// The polynomial when it applies, otherwise the search.
    Auto,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count decompositions (and tableaux) of (w, n).
    Count(CountArgs),
    /// Inversion generating polynomial of BSD(w, n).
    Qpoly(QpolyArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Weil-Petersson volume of M_{0,n}, or the sequence v_3..v_N.
    Wp(WpArgs),
    /// Ribbon tilings of the 2n x n rectangles from the recurrence.
    Rect(RectArgs),
    /// Group the words of length k by counting polynomial and compare with isometry orbits.
    Scan(ScanArgs),
    /// Draw a diagram, optionally with one of its tilings.
    Render(RenderArgs),
    /// Stream decompositions or tableaux as JSON lines.
    Enumerate(EnumerateArgs),
    /// Inspect a permutation: its word, n-descents and canonical form.
    Perm(PermArgs),
    /// Compare the counting polynomials of two words of equal length.
    Compare(CompareArgs),
}

fn parse_word(s: &str) -> Result<Word, String> {
    s.parse().map_err(|e: ribbon_core::Error| e.to_string())
}

fn parse_perm(s: &str) -> Result<Permutation, String> {
    s.parse().map_err(|e: ribbon_core::Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<SuiteChoice, String> {
    if s == "all" {
        return Ok(SuiteChoice::All);
    }
    s.parse().map(SuiteChoice::One).map_err(|_| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("unknown suite {s:?}; expected all, {}", names.join(", "))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteChoice {
    All,
    One(Suite),
}

#[derive(Debug, Args)]
pub struct Shape {
    /// Word over {r, c}; "" is the square.
    #[arg(long, value_parser = parse_word)]
    pub word: Word,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub shape: Shape,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    pub method: Method,
    /// Also count border-strip tableaux.
    #[arg(long)]
    pub tableaux: bool,
    /// Recompute by an independent route and fail on disagreement.
    #[arg(long)]
    pub check: bool,
}

#[derive(Debug, Args)]
pub struct QpolyArgs {
    #[arg(long, value_parser = parse_word, required_unless_present = "all_words")]
    pub word: Option<Word>,
    #[arg(long)]
    pub n: usize,
    /// Sum over all words of length --k.
    #[arg(long, requires = "k", conflicts_with = "word")]
    pub all_words: bool,
    #[arg(long)]
    pub k: Option<usize>,
    /// Count each r letter as one extra inversion.
    #[arg(long)]
    pub weighted: bool,
    /// Compare with the applicable closed form or recursion.
    #[arg(long)]
    pub identity: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// all, bijection, fibers, oracle, q-identities, polynomiality, wp-threeway,
    /// rectangle, straightness, j-linearity or scan.
    #[arg(long, value_parser = parse_suite, default_value = "all")]
    pub suite: SuiteChoice,
    #[arg(long)]
    pub max_n: Option<usize>,
    #[arg(long)]
    pub max_k: Option<usize>,
    /// Largest n + k examined.
    #[arg(long)]
    pub max_symbols: Option<usize>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct WpArgs {
    #[arg(long)]
    pub n: Option<usize>,
    /// Print "index value" lines for v_3..v_N.
    #[arg(long)]
    pub max_n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct RectArgs {
    #[arg(long)]
    pub n: usize,
    /// Compare with enumeration and the inclusion-exclusion sum.
    #[arg(long)]
    pub check: bool,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, default_value_t = 3)]
    pub k: usize,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[command(flatten)]
    pub shape: Shape,
    /// Index of a decomposition in enumeration order.
    #[arg(long, conflicts_with = "input")]
    pub tiling: Option<usize>,
    /// Decomposition JSON to draw; "-" reads stdin.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub shape: Shape,
    /// Emit tableaux instead of decompositions.
    #[arg(long)]
    pub tableaux: bool,
    /// Stop after this many records.
    #[arg(long)]
    pub limit: Option<usize>,
}

#[derive(Debug, Args)]
pub struct PermArgs {
    /// One-line notation, e.g. "[3,2,5,6,1,4]".
    #[arg(long, value_parser = parse_perm)]
    pub sigma: Permutation,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(long, value_parser = parse_word)]
    pub v: Word,
    #[arg(long, value_parser = parse_word)]
    pub w: Word,
}
