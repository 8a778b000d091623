//! Command-line surface: one subcommand per plot-ready data product plus
//! the vortex detector and the oracle self-check.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "qvortex",
    version,
    about = "Two-mode bosonic evolution: entropy scans, vortex wavefunctions, \
             coherence maps and an exact matrix-exponential self-check",
    propagate_version = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Entanglement entropy S versus reflectivity R = |v21|² for a set of j
    EntropyScan(EntropyScanArgs),
    /// Entropy at the balanced point R = ½ for every sector index j
    EntropyVsJ(EntropyVsJArgs),
    /// Balanced-point entropy versus total quanta N for j ∈ {0, 1, ⌊N/2⌋}
    EntropyVsN(EntropyVsNArgs),
    /// |ψ|² and phase of the evolved two-mode wavefunction on an (x, y) grid
    Wavefunction(WavefunctionArgs),
    /// Reduced single-mode correlation kernel ⟨x|ρ|y⟩ on an (x, y) grid
    Correlation(CorrelationArgs),
    /// Spatial coherence γ as a map over separation l and reflectivity R
    Coherence(CoherenceArgs),
    /// Detect single-vortex collapse and classify the evolution condition
    Detect(DetectArgs),
    /// Compare the analytic evolution against exp(−iHt); exit 2 on mismatch
    OracleCheck(OracleCheckArgs),
}

/// Hamiltonian parameters shared by the evolution-based subcommands.
#[derive(Args)]
pub struct EvolutionArgs {
    /// Mode-exchange coupling g
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub coupling: f64,
    /// Mode-imbalance detuning Ω
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub detuning: f64,
    /// Exchange phase φ
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub phi: f64,
    /// Evolution time t
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub time: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PrepKind {
    /// Evolve the bare Fock state |N−j, j⟩
    Fock,
    /// Apply the balanced vortex-preparation unitary before evolving
    Vortex,
    /// Apply a caller-supplied 2×2 unitary given via --prep-matrix
    Custom,
}

#[derive(Args)]
pub struct PrepArgs {
    /// Input-state preparation applied before the evolution
    #[arg(long, value_enum, default_value = "fock")]
    pub prep: PrepKind,
    /// Custom preparation matrix as 8 comma-separated reals:
    /// re(v11),im(v11),re(v12),im(v12),re(v21),im(v21),re(v22),im(v22)
    #[arg(long, value_name = "REALS", allow_hyphen_values = true)]
    pub prep_matrix: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args)]
pub struct OutputArgs {
    /// Output file path; written to stdout when omitted
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Output format
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LogBase {
    /// Entropy in bits
    #[value(name = "2")]
    Two,
    /// Entropy in nats
    E,
}

/// Rectangular evaluation grid `xmin,xmax,ymin,ymax,nx,ny`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
    pub nx: usize,
    pub ny: usize,
}

impl GridSpec {
    pub fn xs(&self) -> Vec<f64> {
        linspace(self.xmin, self.xmax, self.nx)
    }

    pub fn ys(&self) -> Vec<f64> {
        linspace(self.ymin, self.ymax, self.ny)
    }

    pub fn echo(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.xmin, self.xmax, self.ymin, self.ymax, self.nx, self.ny
        )
    }
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 6 {
            return Err(format!(
                "grid needs 6 comma-separated fields xmin,xmax,ymin,ymax,nx,ny, got {}",
                parts.len()
            ));
        }
        let f = |i: usize| -> Result<f64, String> {
            parts[i]
                .trim()
                .parse::<f64>()
                .map_err(|e| format!("grid field {}: {e}", i + 1))
        };
        let c = |i: usize| -> Result<usize, String> {
            parts[i]
                .trim()
                .parse::<usize>()
                .map_err(|e| format!("grid field {}: {e}", i + 1))
        };
        let g = GridSpec {
            xmin: f(0)?,
            xmax: f(1)?,
            ymin: f(2)?,
            ymax: f(3)?,
            nx: c(4)?,
            ny: c(5)?,
        };
        if !(g.xmin < g.xmax) || !(g.ymin < g.ymax) {
            return Err("grid ranges must satisfy xmin < xmax and ymin < ymax".into());
        }
        if g.nx < 2 || g.ny < 2 {
            return Err("grid counts nx, ny must be at least 2".into());
        }
        Ok(g)
    }
}

pub fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let step = (hi - lo) / (count - 1) as f64;
    (0..count).map(|i| lo + step * i as f64).collect()
}

#[derive(Args)]
pub struct EntropyScanArgs {
    /// Total quanta N of the sector
    #[arg(long = "total-n", value_name = "N")]
    pub total_n: u32,
    /// Sector index j; repeatable, defaults to all 0 ≤ j ≤ N
    #[arg(long = "j", value_name = "J")]
    pub j: Vec<u32>,
    /// Number of reflectivity samples across [0, 1]
    #[arg(long, default_value_t = 101)]
    pub samples: usize,
    /// Logarithm base for the entropy
    #[arg(long = "log-base", value_enum, default_value = "2")]
    pub log_base: LogBase,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct EntropyVsJArgs {
    /// Total quanta N of the sector
    #[arg(long = "total-n", value_name = "N")]
    pub total_n: u32,
    /// Logarithm base for the entropy
    #[arg(long = "log-base", value_enum, default_value = "2")]
    pub log_base: LogBase,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct EntropyVsNArgs {
    /// Largest total quanta N to tabulate (rows run N = 1..=N)
    #[arg(long = "total-n", value_name = "N")]
    pub total_n: u32,
    /// Logarithm base for the entropy
    #[arg(long = "log-base", value_enum, default_value = "2")]
    pub log_base: LogBase,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct WavefunctionArgs {
    /// Total quanta N of the sector
    #[arg(long = "total-n", value_name = "N")]
    pub total_n: u32,
    /// Sector index j of the input state |N−j, j⟩
    #[arg(long = "j", value_name = "J")]
    pub j: u32,
    #[command(flatten)]
    pub evolution: EvolutionArgs,
    #[command(flatten)]
    pub prep: PrepArgs,
    /// Evaluation grid xmin,xmax,ymin,ymax,nx,ny
    #[arg(long, default_value = "-4,4,-4,4,161,161", allow_hyphen_values = true)]
    pub grid: GridSpec,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct CorrelationArgs {
    /// Total quanta N of the sector
    #[arg(long = "total-n", value_name = "N")]
    pub total_n: u32,
    /// Sector index j of the input state |N−j, j⟩
    #[arg(long = "j", value_name = "J")]
    pub j: u32,
    /// Reflectivity R = |v21|² of the evolution, in [0, 1]
    #[arg(long, value_name = "R")]
    pub reflectivity: f64,
    /// Evaluation grid xmin,xmax,ymin,ymax,nx,ny
    #[arg(long, default_value = "-5,5,-5,5,201,201", allow_hyphen_values = true)]
    pub grid: GridSpec,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct CoherenceArgs {
    /// Total quanta N of the sector
    #[arg(long = "total-n", value_name = "N")]
    pub total_n: u32,
    /// Sector index j of the input state |N−j, j⟩
    #[arg(long = "j", value_name = "J")]
    pub j: u32,
    /// Largest separation l of the map
    #[arg(long = "l-max", default_value_t = 8.0)]
    pub l_max: f64,
    /// Number of separation samples across [0, l-max]
    #[arg(long = "l-count", default_value_t = 161)]
    pub l_count: usize,
    /// Number of reflectivity samples across [0, 1]
    #[arg(long = "r-count", default_value_t = 101)]
    pub r_count: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct DetectArgs {
    /// Total quanta N of the sector
    #[arg(long = "total-n", value_name = "N")]
    pub total_n: u32,
    /// Sector index j of the input state |N−j, j⟩
    #[arg(long = "j", value_name = "J")]
    pub j: u32,
    #[command(flatten)]
    pub evolution: EvolutionArgs,
    #[command(flatten)]
    pub prep: PrepArgs,
    /// Collapse tolerance on |γ±(0)|
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Output file path; written to stdout when omitted (always JSON)
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct OracleCheckArgs {
    /// Total quanta N; every sector index 0 ≤ j ≤ N is checked
    #[arg(long = "total-n", value_name = "N")]
    pub total_n: u32,
    #[command(flatten)]
    pub evolution: EvolutionArgs,
    /// Maximum allowed componentwise deviation
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Optional JSON report path
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}
