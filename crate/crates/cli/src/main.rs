mod commands;
mod output;

use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qsphere::scalar::parse_rational;
use qsphere::{Context, Error};

use crate::output::Format;

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

/// Exact computations on quantum SL(2) and the standard Podles sphere.
///
/// Every flag can also be set through an environment variable with the
/// `QSPHERE_` prefix, e.g. `QSPHERE_SEED=7` or `QSPHERE_FORMAT=csv`.
#[derive(Debug, Parser)]
#[command(name = "qsphere", version)]
pub struct Cli {
    /// Specialise q to this rational (e.g. `2`, `3/5`); symbolic when absent.
    #[arg(long, global = true, env = "QSPHERE_Q", value_name = "RATIONAL")]
    pub q: Option<String>,
    /// Output format; queries default to text, checks to json.
    #[arg(long, global = true, env = "QSPHERE_FORMAT", value_enum)]
    pub format: Option<Format>,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true, env = "QSPHERE_OUT", value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Seed for the randomized checks.
    #[arg(long, global = true, env = "QSPHERE_SEED", default_value_t = 42)]
    pub seed: u64,
    /// Leave `elapsed_ms` null so that reports are byte-identical.
    #[arg(long, global = true, env = "QSPHERE_NO_TIMINGS")]
    pub no_timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algebra {
    Qsl2,
    Podles,
    Laurent,
    Smash,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal form of an expression.
    Nf {
        #[arg(long, value_enum, default_value_t = Algebra::Qsl2)]
        algebra: Algebra,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Coproduct, one `left ⊗ right` line per left basis monomial.
    Delta {
        #[arg(long, value_enum, default_value_t = Algebra::Qsl2)]
        algebra: Algebra,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Power of the antipode.
    Antipode {
        #[arg(long, value_enum, default_value_t = Algebra::Qsl2)]
        algebra: Algebra,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        power: i32,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Projection to the Laurent polynomials in z.
    Pi {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Whether an element of quantum SL(2) lies in the Podles sphere.
    Member {
        #[arg(long, value_enum, default_value_t = Algebra::Qsl2)]
        algebra: Algebra,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// `d1 ∘ d2 = 0` and truncated exactness of the Koszul resolution.
    KoszulVerify {
        #[arg(long = "N", env = "QSPHERE_N", default_value_t = 6)]
        n: usize,
    },
    /// `Ext_B(k, B)` with the character on the top degree.
    Ext {
        #[arg(long = "N", env = "QSPHERE_N", default_value_t = 8)]
        n: usize,
    },
    /// The map ζ on `V_j` for `j <= jmax`.
    Zeta {
        #[arg(long, env = "QSPHERE_JMAX", default_value_t = 8)]
        jmax: usize,
    },
    /// Twisted centres `H^0(B, ω_{i,j})`.
    H0Table {
        #[arg(long, env = "QSPHERE_IMAX", default_value_t = 6)]
        imax: i32,
        #[arg(long, env = "QSPHERE_JMAX", default_value_t = 3)]
        jmax: i32,
        /// Truncation level; each cell uses at least `2|j| + |i| + 2`.
        #[arg(long = "N", env = "QSPHERE_N")]
        n: Option<usize>,
    },
    /// `b∘ξ = ξ∘d`, `ξ^{-1}ξ = id` and `b² = d² = 0` on random cochains.
    XiCheck {
        #[arg(long, env = "QSPHERE_TRIALS", default_value_t = 100)]
        trials: usize,
        /// Filtration level of the random cochains.
        #[arg(long = "N", env = "QSPHERE_N", default_value_t = 3)]
        n: usize,
    },
    /// Apply σ to a sphere element, or check σ on the basis up to `--N`.
    Sigma {
        #[arg(long, allow_hyphen_values = true, value_name = "EXPR")]
        apply: Option<String>,
        #[arg(long = "N", env = "QSPHERE_N", default_value_t = 8)]
        n: usize,
    },
    /// Basis of `ω_{n,m}` up to length `--N`.
    OmegaBasis {
        #[arg(long, allow_negative_numbers = true)]
        n: i32,
        #[arg(long, allow_negative_numbers = true, default_value_t = 0)]
        m: i32,
        #[arg(long = "N", env = "QSPHERE_N", default_value_t = 4)]
        level: usize,
    },
    /// Membership and spanning of products `ω_{n,m} × ω_{i,j} → ω_{n+i,m+j}`.
    FridgeCheck {
        #[arg(long = "N", env = "QSPHERE_N", default_value_t = 4)]
        n: usize,
    },
    /// Apply β to an element of quantum SL(2), or check its properties.
    Beta {
        #[arg(long, allow_hyphen_values = true, value_name = "EXPR")]
        apply: Option<String>,
        #[arg(long = "N", env = "QSPHERE_N", default_value_t = 5)]
        n: usize,
        #[arg(long, env = "QSPHERE_TRIALS", default_value_t = 100)]
        trials: usize,
    },
    /// `χγ = ε` on the sphere basis.
    TransesCheck {
        #[arg(long = "N", env = "QSPHERE_N", default_value_t = 5)]
        n: usize,
        /// Character values on `y-1,y0,y1`, comma separated; counit when absent.
        #[arg(long, allow_hyphen_values = true)]
        chi: Option<String>,
    },
    /// The explicit left inverse of σ on the sphere basis.
    SigmaInvCheck {
        #[arg(long = "N", env = "QSPHERE_N", default_value_t = 8)]
        n: usize,
    },
    /// Every acceptance check; exits 1 if any fails.
    VerifyAll {
        /// Run only these checks (by name or number prefix, e.g. `03`).
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Trial count for the randomized cochain checks.
        #[arg(long, env = "QSPHERE_TRIALS")]
        trials: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match panic::catch_unwind(AssertUnwindSafe(|| execute(&cli))) {
        Ok(code) => code,
        Err(_) => ExitCode::from(EXIT_INTERNAL),
    }
}

fn execute(cli: &Cli) -> ExitCode {
    let outcome = match &cli.q {
        None => commands::run(&Context::symbolic(), cli, "symbolic"),
        Some(q) => match parse_rational(q).map_err(Error::from).and_then(|q0| Ok(Context::specialized(q0)?)) {
            Ok(ctx) => commands::run(&ctx, cli, &format!("q={}", ctx.q())),
            Err(e) => Err(e),
        },
    };
    let report = match outcome {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let format = cli.format.unwrap_or(report.default_format);
    let rendered = match output::render(&report, format) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INTERNAL);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, rendered.as_bytes()),
        None => std::io::stdout().write_all(rendered.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    if report.pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    }
}

/// Bad input is a usage error; a violated internal invariant is not.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}
