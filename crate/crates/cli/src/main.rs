//! `powersum`: command-line front end for `powersum-core`.
//!
//! Data goes to stdout, diagnostics to stderr. Exit status is 0 on success,
//! 1 when a verification fails and 2 on usage errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use powersum_core::format::{render, TriangleFormat};
use powersum_core::power_sums::{self, evaluate};
use powersum_core::verify::{self, CheckSpec, Suite};
use powersum_core::{
    falling_factorial_generalized, faulhaber, triangles, BernoulliMethod, CRoute, CoeffKind, Error,
    EvalMethod, Family, PowerSumKind,
};

#[derive(Parser)]
#[command(
    name = "powersum",
    version,
    about = "Exact power sums and the A304330 triangle"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print rows of R, U, u, Ps or salie.
    Triangle {
        #[arg(long)]
        seq: Family,
        #[arg(long, default_value_t = 6)]
        rows: usize,
        #[arg(long, default_value = "table")]
        format: TriangleFormat,
        /// Print R(k,k-s)/((2k)!(k-s)) for k = s+1..=rows instead of the rows.
        #[arg(long, value_name = "S")]
        diagonal: Option<usize>,
    },
    /// Evaluate S_k(n), T_k(n) or omega_k(n).
    Eval {
        #[arg(long)]
        sum: PowerSumKind,
        /// Literal exponent of the power sum.
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value = "brute")]
        method: EvalMethod,
    },
    /// Faulhaber coefficients b, c or d for one k.
    Faulhaber {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        coeffs: CoeffKind,
        #[arg(long, default_value = "legendre-stirling")]
        route: CRoute,
    },
    /// Bernoulli numbers B_0..=B_upto.
    Bernoulli {
        #[arg(long)]
        upto: usize,
        #[arg(long, value_enum, default_value_t = BernoulliArg::RFormula)]
        method: BernoulliArg,
    },
    /// Print Q_(k,m), F_m, G_m, B_k(x) or <x>_m.
    Poly {
        #[arg(long, value_enum)]
        which: PolyKind,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Run the identity suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Run only the named check.
        #[arg(long)]
        check: Option<String>,
        #[arg(long, default_value_t = verify::DEFAULT_MAX_K)]
        max_k: usize,
        #[arg(long, default_value_t = verify::DEFAULT_MAX_N)]
        max_n: u64,
        /// Also write the report as JSON.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// List registered checks and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BernoulliArg {
    RFormula,
    Recurrence,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyKind {
    #[value(name = "Q")]
    Q,
    #[value(name = "F")]
    F,
    #[value(name = "G")]
    G,
    #[value(name = "bernoulli")]
    Bernoulli,
    #[value(name = "falling")]
    Falling,
}

/// Outcome of a command that ran to completion.
struct Output {
    text: String,
    ok: bool,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Self { text, ok: true }
    }
}

fn required(value: Option<usize>, flag: &str) -> Result<usize, Error> {
    value.ok_or_else(|| Error::Usage(format!("--{flag} is required for this polynomial")))
}

fn run(command: Command) -> Result<Output, Error> {
    match command {
        Command::Triangle {
            seq,
            rows,
            format,
            diagonal,
        } => match diagonal {
            Some(s) => {
                if seq != Family::R {
                    return Err(Error::Usage("--diagonal only applies to --seq R".into()));
                }
                let mut out = String::new();
                for k in s + 1..=rows {
                    out += &format!("{k} {}\n", triangles::diagonal_ratio(k, s)?);
                }
                Ok(out.into())
            }
            None => Ok(render(&triangles::triangle_rows(seq, rows), format).into()),
        },
        Command::Eval { sum, k, n, method } => {
            Ok(format!("{}\n", evaluate(sum, k, n, method)?).into())
        }
        Command::Faulhaber { k, coeffs, route } => {
            Ok(format!("{}\n", faulhaber::faulhaber(k, coeffs, route)?).into())
        }
        Command::Bernoulli { upto, method } => {
            let method = match method {
                BernoulliArg::RFormula => BernoulliMethod::RFormula,
                BernoulliArg::Recurrence => BernoulliMethod::Recurrence,
            };
            let values = power_sums::bernoulli_numbers_by(upto, method)?;
            let items: Vec<String> = values
                .iter()
                .enumerate()
                .map(|(i, b)| format!("B_{i}={b}"))
                .collect();
            Ok(format!("{}\n", items.join(" ")).into())
        }
        Command::Poly { which, k, m } => {
            let (poly, var) = match which {
                PolyKind::Q => (
                    power_sums::q_polynomial(required(k, "k")?, required(m, "m")?)?,
                    "n",
                ),
                PolyKind::F => (power_sums::f_polynomial(required(m, "m")?)?, "n"),
                PolyKind::G => (power_sums::g_polynomial(required(m, "m")?)?, "n"),
                PolyKind::Bernoulli => (power_sums::bernoulli_polynomial(required(k, "k")?), "x"),
                PolyKind::Falling => {
                    let m = required(m, "m")?;
                    if m == 0 {
                        return Err(Error::Domain("<x>_m requires m >= 1".into()));
                    }
                    (falling_factorial_generalized(m), "x")
                }
            };
            Ok(format!("{}\n", poly.display_in(var)).into())
        }
        Command::Verify {
            suite,
            check,
            max_k,
            max_n,
            json,
            list,
        } => {
            if list {
                let mut out = String::new();
                for (name, suite, anchor) in verify::list_checks() {
                    out += &format!("{name}\t{suite}\t{anchor}\n");
                }
                return Ok(out.into());
            }
            let spec = CheckSpec {
                suite,
                check,
                max_k,
                max_n,
            };
            let report = verify::run_suite(&spec)?;
            if let Some(path) = json {
                fs::write(&path, report.to_json() + "\n")
                    .map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(Output {
                text: report.to_table(),
                ok: report.is_success(),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e @ (Error::Usage(_) | Error::Domain(_))) => {
            eprintln!("powersum: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("powersum: {e}");
            ExitCode::from(1)
        }
    }
}
