use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};

use clap::{Args, Parser, Subcommand, ValueEnum};
use symdirac::dirac::{spectrum_below, Caps};
use symdirac::pairdoc::SpaceSpec;
use symdirac::report::{
    listing, render_decomposition, render_listing, render_report, render_spectrum_report,
    render_verification, Decomposition, Report, SpectrumReport, VerificationSummary,
};
use symdirac::symmspace::{catalog, inner_pairs};
use symdirac::verify::{verify_pair, VerifyOptions};
use symdirac::weight::parse_rational;
use symdirac::{Error, Q};

/// First Dirac eigenvalue and low spectrum of compact equal-rank spin
/// symmetric spaces, in exact arithmetic.
#[derive(Parser)]
#[command(name = "symdirac", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Read the space from a JSON pair document instead of naming it.
    #[arg(long, global = true, value_name = "PATH")]
    pair_file: Option<PathBuf>,

    /// Largest |Φ_n⁺| for which all 2^|Φ_n⁺| spin weights are enumerated.
    #[arg(long, global = true, default_value_t = Caps::default().spin_weights)]
    max_spin_weights: usize,

    /// Largest G-irreducible dimension expanded into weights.
    #[arg(long, global = true, default_value_t = Caps::default().dimension)]
    max_dimension: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct SpaceArg {
    /// Catalog name such as `sphere-even(2)` (see `list`).
    space: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// First eigenvalue of D² with the data behind it.
    Eigenvalue(SpaceArg),
    /// The K-decomposition of the spin representation.
    Decompose(SpaceArg),
    /// Eigenvalues of D² up to a cutoff, with multiplicities.
    Spectrum {
        #[command(flatten)]
        space: SpaceArg,
        /// Inclusive upper bound, as `p/q` or an integer.
        #[arg(long, value_parser = rational)]
        cutoff: Q,
    },
    /// Run the invariant battery on one space or the whole catalog.
    Verify {
        #[command(flatten)]
        space: SpaceArg,
        /// Every spin entry of the catalog.
        #[arg(long, conflicts_with = "space")]
        all: bool,
        /// Also check that the spectrum below this value starts at λ₁².
        #[arg(long, value_parser = rational)]
        spectrum_cutoff: Option<Q>,
    },
    /// Catalog entries with G, K, dimension and spin status.
    List,
}

fn rational(s: &str) -> Result<Q, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// A failure together with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::CapExceeded { .. } => 3,
            Error::InconsistentCharacter(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn invalid(message: String) -> Failure {
    Failure { code: 2, message }
}

impl Cli {
    fn caps(&self) -> Caps {
        Caps {
            spin_weights: self.max_spin_weights,
            dimension: self.max_dimension,
        }
    }

    fn spec(&self, arg: &SpaceArg) -> Result<SpaceSpec, Failure> {
        match (&arg.space, &self.pair_file) {
            (Some(_), Some(_)) => Err(invalid("give either a space name or --pair-file, not both".into())),
            (None, None) => Err(invalid("missing space: name a catalog entry or pass --pair-file".into())),
            (Some(name), None) => Ok(SpaceSpec::Catalog(name.clone())),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| invalid(format!("cannot read {}: {e}", path.display())))?;
                Ok(SpaceSpec::from_json(&text)?)
            }
        }
    }

    fn emit<T: serde::Serialize>(&self, out: &mut String, value: &T, text: impl FnOnce(&T) -> String) {
        match self.format {
            Format::Json => {
                out.push_str(&serde_json::to_string_pretty(value).expect("serializable"));
                out.push('\n');
            }
            Format::Text => out.push_str(&text(value)),
        }
    }

    /// Runs the command, appending its output to `out` even when it fails.
    fn run(&self, out: &mut String) -> Result<(), Failure> {
        match &self.command {
            Command::Eigenvalue(arg) => {
                let spec = self.spec(arg)?;
                let report = Report::new(&spec.label(), &spec.resolve()?)?;
                self.emit(out, &report, render_report);
            }
            Command::Decompose(arg) => {
                let spec = self.spec(arg)?;
                let d = Decomposition::new(&spec.label(), &spec.resolve()?)?;
                self.emit(out, &d, render_decomposition);
            }
            Command::Spectrum { space, cutoff } => {
                let spec = self.spec(space)?;
                let pair = spec.resolve()?;
                let lines = spectrum_below(&pair, cutoff, self.caps().dimension)?;
                let r = SpectrumReport::new(&spec.label(), &pair, cutoff, &lines);
                self.emit(out, &r, render_spectrum_report);
            }
            Command::Verify {
                space,
                all,
                spectrum_cutoff,
            } => {
                let opts = VerifyOptions {
                    caps: self.caps(),
                    spectrum_cutoff: spectrum_cutoff.clone(),
                };
                let mut results = Vec::new();
                if *all {
                    if self.pair_file.is_some() {
                        return Err(invalid("--all does not take --pair-file".into()));
                    }
                    results = verify_catalog(&opts)?;
                } else {
                    let spec = self.spec(space)?;
                    let v = verify_pair(&spec.label(), &spec.resolve()?, &opts)?;
                    results.push(VerificationSummary::new(&v));
                }
                match self.format {
                    Format::Json if *all => self.emit(out, &results, |_| String::new()),
                    _ if *all => {
                        for r in &results {
                            out.push_str(&render_verification(r));
                        }
                        let failed = results.iter().filter(|r| !r.passed).count();
                        out.push_str(&format!("{} spaces, {} failed\n", results.len(), failed));
                    }
                    _ => self.emit(out, &results[0], render_verification),
                }
                let failed: Vec<&str> = results.iter().filter(|r| !r.passed).map(|r| r.space.as_str()).collect();
                if !failed.is_empty() {
                    return Err(Failure {
                        code: 1,
                        message: format!("verification failed for {}", failed.join(", ")),
                    });
                }
            }
            Command::List => {
                let entries = listing(&inner_pairs())?;
                self.emit(out, &entries, |e| render_listing(e));
            }
        }
        Ok(())
    }
}

/// Verifies every spin catalog entry on a pool of threads; results come
/// back in catalog order.
fn verify_catalog(opts: &VerifyOptions) -> Result<Vec<VerificationSummary>, Failure> {
    let entries = catalog();
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(entries.len());
    let next = AtomicUsize::new(0);
    let mut slots: Vec<Option<symdirac::Result<VerificationSummary>>> = vec![None; entries.len()];
    let done = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                scope.spawn(|| {
                    let mut mine = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        let Some(entry) = entries.get(i) else { break };
                        let v = entry
                            .build()
                            .and_then(|p| verify_pair(&entry.name, &p, opts))
                            .map(|v| VerificationSummary::new(&v));
                        mine.push((i, v));
                    }
                    mine
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("verification thread panicked"))
            .collect::<Vec<_>>()
    });
    for (i, v) in done {
        slots[i] = Some(v);
    }
    slots.into_iter().map(|v| Ok(v.expect("every entry visited")?)).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let status = cli.run(&mut out);
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    match status {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
