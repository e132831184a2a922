use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use metric_lie::fidelity::{run_fidelity, FidelityOptions};
use metric_lie::generators::random_two_step;
use metric_lie::nilpotent::{gen_h_type, gen_heisenberg, HTypePreset};
use metric_lie::report::Status;
use metric_lie::specfile::{load_algebra, Extras, SpecFile};
use metric_lie::suites::Suite;
use metric_lie::{Geometry, InnerProduct, LieAlgebra, LiftedAlgebra};

#[derive(Parser)]
#[command(name = "metric-lie", version, about = "Metric Lie algebras: inspection, lifting, generation and identity audits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a description file and print basic structure
    Check { file: PathBuf },
    /// Sectional curvature of the plane spanned by two basis vectors
    Curvature {
        file: PathBuf,
        /// 1-based basis indices, e.g. 1,2
        #[arg(long, value_parser = parse_plane)]
        plane: (usize, usize),
    },
    /// Write the 4n-dimensional matrix lift as a description file
    Lift {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate a description file
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Run the identity catalog and print the report
    Verify {
        file: PathBuf,
        #[arg(long, default_value = "all", value_parser = parse_suites)]
        suite: Suites,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Treat VACUOUS entries as failures
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Heisenberg algebra of dimension 2m+1
    Heisenberg {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Heisenberg-type algebra from a Clifford-module preset
    HType {
        #[arg(long, value_enum)]
        preset: Preset,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random 2-step nilpotent algebra with p generators and q-dimensional center
    #[command(name = "random-2step")]
    Random2Step {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    Complex,
    Quaternion,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_plane(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected i,j")?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t}: {e}"));
    Ok((parse(a)?, parse(b)?))
}

#[derive(Clone)]
struct Suites(Vec<Suite>);

fn parse_suites(s: &str) -> Result<Suites, String> {
    Suite::parse(s).map(Suites).ok_or_else(|| format!("unknown suite {s}; expected all, geometry, matrix, complex or nilpotent"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> metric_lie::Result<ExitCode> {
    match command {
        Command::Check { file } => {
            let loaded = load_algebra(&file)?;
            let alg = &loaded.alg;
            let class = match alg.lower_central_series().class {
                Some(c) => c.to_string(),
                None => "none (not nilpotent)".into(),
            };
            println!("{}: dim {}, class {}, center rank {}", loaded.name, alg.dim(), class, alg.center().rank());
            println!("semisimple: {}", if alg.is_semisimple() { "yes" } else { "no" });
            println!("jacobi defect: {:.3e}", alg.jacobi_defect());
        }
        Command::Curvature { file, plane: (i, j) } => {
            let loaded = load_algebra(&file)?;
            let n = loaded.alg.dim();
            for idx in [i, j] {
                if idx == 0 || idx > n {
                    return Err(metric_lie::Error::IndexOutOfRange { index: idx, dim: n });
                }
            }
            let geom = Geometry::new(loaded.alg, loaded.metric)?;
            let k = geom.sectional_basis(i - 1, j - 1)?;
            println!("{}", round(k));
        }
        Command::Lift { file, out } => {
            let loaded = load_algebra(&file)?;
            let lift = LiftedAlgebra::lift(&loaded.alg, &loaded.metric)?;
            let name = format!("{}_lift", loaded.name);
            SpecFile::from_parts(&name, &lift.as_lie_algebra(), &lift.metric(), &Extras::default()).write(&out)?;
            println!("wrote {} (dim {})", out.display(), lift.dim());
        }
        Command::Gen { kind } => {
            let (name, (alg, g), out) = match kind {
                GenKind::Heisenberg { m, out } => (format!("heisenberg{}", 2 * m + 1), gen_heisenberg(m)?, out),
                GenKind::HType { preset, out } => {
                    let (p, name) = match preset {
                        Preset::Complex => (HTypePreset::Complex, "htype_complex"),
                        Preset::Quaternion => (HTypePreset::Quaternion, "htype_quaternion"),
                    };
                    (name.to_string(), gen_h_type(&p.maps())?, out)
                }
                GenKind::Random2Step { p, q, seed, out } => {
                    (format!("random_2step_p{p}_q{q}_s{seed}"), random_two_step(p, q, seed)?, out)
                }
            };
            emit(&name, &alg, &g, out.as_deref())?;
        }
        Command::Verify { file, suite, trials, seed, tol, format, strict } => {
            let loaded = load_algebra(&file)?;
            let opts = FidelityOptions { trials, seed, tol, suites: suite.0 };
            let report = run_fidelity(&loaded, &opts)?;
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            let failed = report.count(Status::Fail) > 0 || (strict && report.count(Status::Vacuous) > 0);
            return Ok(ExitCode::from(if failed { 1 } else { 0 }));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn emit(name: &str, alg: &LieAlgebra, g: &InnerProduct, out: Option<&Path>) -> metric_lie::Result<()> {
    let spec = SpecFile::from_parts(name, alg, g, &Extras::default());
    match out {
        Some(path) => spec.write(path),
        None => {
            print!("{}", spec.to_json());
            Ok(())
        }
    }
}

/// Drops floating-point noise below 1e-12.
fn round(x: f64) -> f64 {
    let r = (x * 1e12).round() / 1e12;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}
