//! Command-line front end. All heavy lifting lives in the library; this
//! binary only parses arguments, dispatches, and formats output.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num::{BigInt, BigRational};
use serde_json::json;

use parabolic_avoid::counting::{self, PrefixSpec};
use parabolic_avoid::gf::{bdpp_first_agreement, gf_coefficients, main_theorem_gf};
use parabolic_avoid::output::{format_bfile, format_csv};
use parabolic_avoid::perm::{self, AvoidanceClass};
use parabolic_avoid::{asympt, brute_force_ceiling, verify};

#[derive(Parser)]
#[command(
    name = "parabolic-avoid",
    about = "Exact counts of permutations avoiding cosets of maximal parabolic subgroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Bfile,
}

#[derive(Subcommand)]
enum Command {
    /// Count avoiders of σ^a P_{l,m} in S_n (recurrence, cross-checked
    /// by brute force when n is within the brute-force ceiling).
    Count {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        a: usize,
        #[arg(long)]
        n: usize,
    },
    /// Emit the coefficients 0..=N of the generating function.
    Series {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        #[arg(long = "N")]
        n_max: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<std::path::PathBuf>,
    },
    /// Stream the avoiders of σ^a P_{l,m} in S_n, one per line.
    Enumerate {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        a: usize,
        #[arg(long)]
        n: usize,
    },
    /// Run a verification sweep; exits nonzero if any case fails.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long = "k-max", default_value_t = 5)]
        k_max: usize,
        #[arg(long = "n-max", default_value_t = 8)]
        n_max: usize,
        #[arg(long = "s-max", default_value_t = 8)]
        s_max: usize,
        #[arg(long = "t-max", default_value_t = 8)]
        t_max: usize,
    },
    /// Growth-rate report: certified γ interval, constant c, and the
    /// Ismail–Li bound.
    Asympt {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        /// Interval width target, as a decimal such as 1e-9.
        #[arg(long, default_value = "1e-9")]
        tol: String,
    },
    /// Coefficients of the algebraic generating function for
    /// P_{1,1,k-2}, with the first-agreement index against brute force.
    Bdpp {
        #[arg(long)]
        k: usize,
        #[arg(long = "N")]
        n_max: usize,
    },
}

fn parse_tolerance(text: &str) -> Result<BigRational, String> {
    // Accept "1e-9", "0.001", or "p/q".
    if let Some((num, den)) = text.split_once('/') {
        let n: BigInt = num.parse().map_err(|_| format!("bad tolerance {text:?}"))?;
        let d: BigInt = den.parse().map_err(|_| format!("bad tolerance {text:?}"))?;
        return Ok(BigRational::new(n, d));
    }
    if let Some((mant, exp)) = text.split_once(['e', 'E']) {
        let base = parse_tolerance(mant)?;
        let exp: i32 = exp.parse().map_err(|_| format!("bad tolerance {text:?}"))?;
        let ten = BigRational::from(BigInt::from(10));
        let scale = ten.pow(exp);
        return Ok(base * scale);
    }
    if let Some((int, frac)) = text.split_once('.') {
        let digits = format!("{int}{frac}");
        let n: BigInt = digits.parse().map_err(|_| format!("bad tolerance {text:?}"))?;
        let d = BigInt::from(10).pow(frac.len() as u32);
        return Ok(BigRational::new(n, d));
    }
    let n: BigInt = text.parse().map_err(|_| format!("bad tolerance {text:?}"))?;
    Ok(BigRational::from(n))
}

fn emit(output: Option<&std::path::Path>, text: &str) -> std::io::Result<()> {
    match output {
        Some(path) => std::fs::write(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Count { l, m, a, n } => {
            let cls = AvoidanceClass::new(l, m, a).map_err(|e| e.to_string())?;
            let fast = counting::f_fast(l, m, n).map_err(|e| e.to_string())?;
            let (method, brute, agrees) = if n <= brute_force_ceiling() {
                let bf = counting::g_oracle(&PrefixSpec {
                    cls,
                    n,
                    prefix: vec![],
                })
                .map_err(|e| e.to_string())?;
                let ok = bf == fast;
                ("recurrence+brute_force", Some(bf.to_string()), Some(ok))
            } else {
                ("recurrence", None, None)
            };
            let doc = json!({
                "l": l, "m": m, "a": a, "n": n,
                "value": fast.to_string(),
                "method": method,
                "brute_force": brute,
                "agrees": agrees,
            });
            println!("{doc}");
            Ok(u8::from(agrees == Some(false)))
        }
        Command::Series {
            l,
            m,
            n_max,
            format,
            output,
        } => {
            let gf = main_theorem_gf(l, m).map_err(|e| e.to_string())?;
            let series = gf_coefficients(&gf, n_max).map_err(|e| e.to_string())?;
            let values = series
                .as_integers()
                .ok_or("series coefficients were not integers")?;
            let text = match format {
                Format::Bfile => format_bfile(0, &values),
                Format::Csv => {
                    let rows: Vec<Vec<String>> = values
                        .iter()
                        .enumerate()
                        .map(|(n, v)| vec![n.to_string(), v.to_string()])
                        .collect();
                    format_csv(&["n", "coefficient"], &rows)
                }
                Format::Json => {
                    let doc = json!({
                        "l": l, "m": m, "N": n_max,
                        "coefficients": values.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    });
                    format!("{doc}\n")
                }
            };
            emit(output.as_deref(), &text).map_err(|e| e.to_string())?;
            Ok(0)
        }
        Command::Enumerate { l, m, a, n } => {
            let cls = AvoidanceClass::new(l, m, a).map_err(|e| e.to_string())?;
            let ceiling = brute_force_ceiling();
            if n > ceiling {
                return Err(format!(
                    "n={n} exceeds brute-force ceiling {ceiling} (set PARABOLIC_AVOID_BF_CEILING to override)"
                ));
            }
            let coset = perm::parabolic_coset(&cls).map_err(|e| e.to_string())?;
            let mut stdout = std::io::stdout().lock();
            perm::for_each_avoider(n, &coset, Default::default(), |word| {
                let parts: Vec<String> = word.iter().map(ToString::to_string).collect();
                writeln!(stdout, "{}", parts.join(" ")).expect("stdout write");
            });
            Ok(0)
        }
        Command::Verify {
            suite,
            k_max,
            n_max,
            s_max,
            t_max,
        } => {
            let report =
                verify::run_suite(&suite, k_max, n_max, s_max, t_max).map_err(|e| e.to_string())?;
            println!(
                "{}",
                serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?
            );
            Ok(u8::from(!report.passed))
        }
        Command::Asympt { l, m, tol } => {
            let tol = parse_tolerance(&tol)?;
            let est = asympt::growth_estimate(l, m, &tol).map_err(|e| e.to_string())?;
            let doc = json!({
                "l": l, "m": m,
                "gamma": est.gamma,
                "gamma_interval": [
                    est.gamma_interval.0.to_string(),
                    est.gamma_interval.1.to_string(),
                ],
                "c": est.c,
                "il_bound": est.il_bound,
            });
            println!("{doc}");
            Ok(0)
        }
        Command::Bdpp { k, n_max } => {
            let compare_to = n_max.min(brute_force_ceiling());
            let cmp = bdpp_first_agreement(k, compare_to).map_err(|e| e.to_string())?;
            let full = parabolic_avoid::gf::bdpp_coefficients(k, n_max).map_err(|e| e.to_string())?;
            let doc = json!({
                "k": k, "N": n_max,
                "coefficients": full.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
                "brute_force": cmp.brute_force.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "first_agreement": cmp.first_agreement,
            });
            println!("{doc}");
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
