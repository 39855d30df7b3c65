use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use modhecke::fock::NodeOrder;
use modhecke::klcells::Property;

mod run;

/// Exact Hecke algebra computations: crystals, basic sets, Schur elements, KL bases.
///
/// Exit codes: 0 success, 1 a verification failed, 2 invalid input.
#[derive(Parser)]
#[command(name = "modhecke", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Crystal graph of the empty multipartition in the level-r Fock space.
    Crystal(CrystalArgs),
    /// Canonical basic set for types A, B, D at a specialization.
    Basicset(BasicsetArgs),
    /// Schur element invariants (f, alpha), or the Schur element of one character.
    Schur(SchurArgs),
    /// Kazhdan-Lusztig basis, a-function, J-ring and property checks.
    Kl(KlArgs),
    /// Checks the canonical basic set conditions on a decomposition matrix.
    VerifyDecomp(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    A,
    B,
    D,
    G2,
    F4,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Cbasis,
    Afn,
    Gamma,
    Dinv,
    Jring,
    Phimatrix,
}

#[derive(Args)]
struct CrystalArgs {
    /// Rank parameter of affine sl_l.
    #[arg(long)]
    l: u32,
    /// Level; defaults to the length of --u.
    #[arg(long)]
    r: Option<usize>,
    /// Charge u_1,...,u_r.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    u: Vec<i64>,
    /// Largest size of multipartition to reach.
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "flotw", value_parser = parse_order)]
    order: NodeOrder,
    #[arg(long, default_value_t = modhecke::fock::DEFAULT_LEVEL_CAP)]
    cap: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn parse_order(s: &str) -> Result<NodeOrder, String> {
    s.parse().map_err(|e: modhecke::fock::FockError| e.to_string())
}

#[derive(Args)]
struct BasicsetArgs {
    #[arg(long = "type", value_enum, ignore_case = true)]
    family: Family,
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 1)]
    a: u64,
    #[arg(long, default_value_t = 0)]
    b: u64,
    /// Multiplicative order of xi = v^2 in the field.
    #[arg(long)]
    xi_order: u64,
    /// Characteristic of the field (0 or a prime).
    #[arg(long, default_value_t = 0)]
    char: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct SchurArgs {
    #[arg(long = "type", value_enum, ignore_case = true)]
    family: Family,
    /// Size: S_n for A, rank for B and D; ignored for G2 and F4.
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    a: Option<u32>,
    #[arg(long)]
    b: Option<u32>,
    /// Shorthand for --a and --b.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["a", "b"])]
    weights: Option<Vec<u32>>,
    /// One character: `21` (A), `21|1` (B), `2|1` or `1|+` (D), or a table label (G2, F4).
    #[arg(long)]
    character: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct KlArgs {
    #[arg(long = "type", value_enum, ignore_case = true)]
    family: Family,
    /// Rank; fixed for G2 and F4.
    #[arg(long)]
    rank: Option<usize>,
    /// a[,b]: see the README for which generators get which weight.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    weights: Vec<u32>,
    #[arg(long, value_enum, value_delimiter = ',')]
    emit: Vec<Emit>,
    /// Properties to check, e.g. P2,P3,P15.
    #[arg(long, value_delimiter = ',', value_parser = parse_property)]
    check: Vec<Property>,
    /// Allow groups beyond the structure-constant cap.
    #[arg(long)]
    force: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

fn parse_property(s: &str) -> Result<Property, String> {
    s.parse()
}

#[derive(Args)]
struct VerifyArgs {
    /// Decomposition matrix JSON file.
    #[arg(required_unless_present = "fixture")]
    path: Option<PathBuf>,
    /// A shipped matrix: table3_b0, table3_b2, table3_b4, g2_char2.
    #[arg(long, conflicts_with = "path")]
    fixture: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// Text on stdout plus an exit code, or an input error.
pub struct Outcome {
    pub out: String,
    pub code: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Crystal(a) => run::crystal(a),
        Cmd::Basicset(a) => run::basicset(a),
        Cmd::Schur(a) => run::schur(a),
        Cmd::Kl(a) => run::kl(a),
        Cmd::VerifyDecomp(a) => run::verify(a),
    };
    match result {
        Ok(o) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(o.out.as_bytes());
            ExitCode::from(o.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
