use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use jacmap::fixtures::{self, FLOAT_TOLERANCE};
use jacmap::goodpair::{
    float_good_pair_check, generate_jacobian_equations, is_good_pair_log, is_good_pair_monomial,
    CMatrix, Phi,
};
use jacmap::invert::{finite_newton_inverse, NewtonOptions};
use jacmap::universal::{
    block_row_sum_matrix, build_universal, is_universal, ordered_form, UniversalSpec,
};
use jacmap::{Error, RMatrix};

#[derive(Parser)]
#[command(
    name = "jacmap",
    version,
    about = "Universal matrices, good pairs and Newton inverses of x + φ(Ax)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build U(p, Π) from a spec file.
    Construct {
        spec: PathBuf,
        /// Write the matrix here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report universality and the good-pair verdict for a matrix.
    Verify {
        matrix: PathBuf,
        /// pow:d, log or exp.
        #[arg(long, default_value = "pow:2")]
        phi: String,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
    },
    /// Finite Newton inverse of x + (Ax)^d.
    Invert {
        matrix: PathBuf,
        #[arg(long, default_value_t = 2)]
        d: u32,
        /// Largest admissible Newton order (default: the matrix size).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Jacobian equations of degree d in dimension n.
    Equations {
        n: usize,
        d: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the embedded fixture catalogue.
    Fixtures {
        /// Fixture name substring, or pow / log / exp.
        #[arg(long)]
        filter: Option<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Float,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) => 2,
            Error::NotExact(_) => 4,
            Error::NoStabilization { .. } => 5,
            Error::CostGuard(_) | Error::TooLarge(_) => 6,
            _ => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure {
            code: 1,
            message: format!("{}: {e}", p.display()),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn matrix_inline(a: &RMatrix) -> String {
    let rows: Vec<String> = a
        .rows()
        .map(|r| {
            format!(
                "[{}]",
                r.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

fn construct(spec: &Path, out: Option<&Path>) -> Outcome {
    let spec: UniversalSpec = read(spec)?.parse()?;
    emit(out, &build_universal(&spec)?.to_string())?;
    Ok(0)
}

fn float_verdict(a: &CMatrix, phi: Phi) -> Result<bool, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    Ok(float_good_pair_check(a, phi, 10, &mut rng)? < FLOAT_TOLERANCE)
}

fn verify(path: &Path, phi: &str, mode: Mode) -> Outcome {
    let phi: Phi = phi.parse()?;
    if mode == Mode::Exact && !phi.is_exact() {
        return Err(Error::NotExact(phi.to_string()).into());
    }
    let text = read(path)?;
    let a = match text.parse::<RMatrix>() {
        Ok(a) => a,
        Err(e) if mode == Mode::Float => match text.parse::<CMatrix>() {
            Ok(c) => {
                println!("good-pair({phi}): {}", yes_no(float_verdict(&c, phi)?));
                return Ok(0);
            }
            Err(_) => return Err(e.into()),
        },
        Err(e) => return Err(e.into()),
    };
    let good = match (mode, phi) {
        (Mode::Float, _) => float_verdict(&CMatrix::from_rational(&a), phi)?,
        (Mode::Exact, Phi::Pow(d)) => is_good_pair_monomial(&a, d)?,
        (Mode::Exact, Phi::Log) => is_good_pair_log(&a)?,
        (Mode::Exact, Phi::Exp) => unreachable!("rejected above"),
    };
    let form = ordered_form(&a);
    println!("universal: {}", yes_no(is_universal(&a)));
    println!("good-pair({phi}): {}", yes_no(good));
    println!(
        "block-row-sums: {}",
        matrix_inline(&block_row_sum_matrix(&a))
    );
    println!("partition: {}", form.partition);
    println!("rank: {}", a.rank());
    println!("nilpotent: {}", yes_no(a.is_nilpotent()));
    Ok(0)
}

fn invert(path: &Path, d: u32, cap: Option<usize>) -> Outcome {
    if d < 2 {
        return Err(Error::Invariant(format!("degree {d} is below 2")).into());
    }
    let a: RMatrix = read(path)?.parse()?;
    let result = finite_newton_inverse(
        &a,
        d,
        NewtonOptions {
            cap,
            ..NewtonOptions::default()
        },
    )?;
    println!("order: {}", result.order);
    print!("{}", result.inverse.to_machine());
    Ok(0)
}

fn equations(n: usize, d: u32, out: Option<&Path>) -> Outcome {
    let system = generate_jacobian_equations(n, d)?;
    if let Some(p) = out {
        emit(Some(p), &system.to_string())?;
    }
    println!("count: {}", system.equations.len());
    println!("max-degree: {}", system.max_degree());
    if out.is_none() {
        print!("{system}");
    }
    Ok(0)
}

fn run_fixtures(filter: Option<&str>) -> Outcome {
    let records: Vec<_> = fixtures::catalog()?
        .into_iter()
        .filter(|r| filter.is_none_or(|f| fixtures::matches(r, f)))
        .collect();
    if records.is_empty() {
        eprintln!("warning: no fixture matches {:?}", filter.unwrap_or(""));
        return Ok(0);
    }
    let outcomes = fixtures::run_catalog(&records);
    let mut failed = 0;
    for o in &outcomes {
        let details: Vec<String> = o
            .checks
            .iter()
            .map(|(what, e, got)| format!("{what}={got} (expected {e})"))
            .collect();
        println!(
            "{} {}: {}",
            if o.passed() { "PASS" } else { "FAIL" },
            o.name,
            details.join(", ")
        );
        failed += usize::from(!o.passed());
    }
    println!("passed: {}/{}", outcomes.len() - failed, outcomes.len());
    Ok(u8::from(failed > 0))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Construct { spec, out } => construct(spec, out.as_deref()),
        Command::Verify { matrix, phi, mode } => verify(matrix, phi, *mode),
        Command::Invert { matrix, d, cap } => invert(matrix, *d, *cap),
        Command::Equations { n, d, out } => equations(*n, *d, out.as_deref()),
        Command::Fixtures { filter } => run_fixtures(filter.as_deref()),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
