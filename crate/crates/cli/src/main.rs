use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand};
use nsjack::composition::Composition;
use nsjack::oracle::brute_elementary;
use nsjack::pieri::closed_form_elementary;
use nsjack::pieri::complement::expand_en1;
use nsjack::pieri::single::{expand_e1, expand_z_i};
use nsjack::pieri::symmetric::expand_ep_p;
use nsjack::scalar::{format_scalar, parse_scalar, Scalar};
use nsjack::verify::{explore, explore_csv, run_suite, summarize, VerifyConfig};
use nsjack::{cache, JackTable};

#[derive(Parser, Debug)]
#[command(name = "nsjack", version)]
#[command(about = "Exact non-symmetric Jack polynomials and Pieri-type expansions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate every E_eta with |eta| <= max-weight and write the table cache
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_alpha)]
        alpha: Scalar,
        #[arg(long)]
        max_weight: u32,
        /// Cache file; the cache goes to stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a Pieri-type expansion of a product with E_eta (or P_kappa)
    Pieri {
        /// Comma-separated composition, e.g. 2,0,1
        #[arg(long, value_parser = parse_composition)]
        eta: Composition,
        /// One of: zi <i>, e1, eN1, ep <p>, sym <p> (indices are 1-based)
        #[arg(long, num_args = 1..=2, required = true)]
        mode: Vec<String>,
        #[arg(long, value_parser = parse_alpha)]
        alpha: Scalar,
    },
    /// Check every closed form against the brute-force oracle
    Verify {
        #[arg(long)]
        n: usize,
        /// One or more values, comma-separated or repeated
        #[arg(long, value_parser = parse_alpha, value_delimiter = ',', num_args = 1.., required = true)]
        alpha: Vec<Scalar>,
        #[arg(long)]
        max_weight: u32,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Compare the general-p candidate formulas with the oracle and write CSV
    Explore {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, value_parser = parse_alpha)]
        alpha: Scalar,
        #[arg(long)]
        max_weight: u32,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Variable(usize),
    E1,
    EN1,
    Elementary(usize),
    Symmetric(usize),
}

fn parse_alpha(s: &str) -> Result<Scalar, String> {
    parse_scalar(s).map_err(|e| e.to_string())
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    s.parse::<Composition>().map_err(|e| e.to_string())
}

fn parse_mode(words: &[String], n: usize) -> Result<Mode, String> {
    let index = |w: Option<&String>, what: &str| -> Result<usize, String> {
        w.ok_or_else(|| format!("mode needs {what}"))?
            .parse::<usize>()
            .map_err(|_| format!("{what} must be a nonnegative integer"))
    };
    let head = words[0].as_str();
    let arg = words.get(1);
    let no_arg = |m: Mode| {
        if arg.is_some() {
            Err(format!("mode `{head}` takes no argument"))
        } else {
            Ok(m)
        }
    };
    match head {
        "zi" => {
            let i = index(arg, "a variable index")?;
            if i == 0 || i > n {
                return Err(format!("variable index must lie in 1..={n}"));
            }
            Ok(Mode::Variable(i - 1))
        }
        "e1" => no_arg(Mode::E1),
        "eN1" => no_arg(Mode::EN1),
        "ep" | "sym" => {
            let p = index(arg, "p")?;
            if p > n {
                return Err(format!("p must lie in 0..={n}"));
            }
            Ok(if head == "ep" {
                Mode::Elementary(p)
            } else {
                Mode::Symmetric(p)
            })
        }
        other => Err(format!("unknown mode `{other}`; expected zi, e1, eN1, ep or sym")),
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ! {
    Cli::command().error(ErrorKind::InvalidValue, msg).exit()
}

fn print_terms(header: &str, basis: &str, terms: &[(Composition, Scalar)]) {
    println!("{header}");
    for (nu, c) in terms {
        println!("  {basis}{nu}  {}", format_scalar(c));
    }
}

fn cmd_gen(n: usize, alpha: Scalar, max_weight: u32, out: Option<PathBuf>) -> Result<ExitCode, String> {
    let start = Instant::now();
    let mut table = JackTable::new(n, alpha).map_err(|e| e.to_string())?;
    table.generate_up_to(max_weight).map_err(|e| e.to_string())?;
    let text = cache::serialize(&table);
    let elapsed = start.elapsed();
    let summary = format!("generated {} polynomials in {:.3}s", table.len(), elapsed.as_secs_f64());
    match out {
        Some(path) => {
            fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?;
            println!("{summary}");
            println!("wrote {}", path.display());
        }
        None => {
            print!("{text}");
            eprintln!("{summary}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_pieri(eta: Composition, mode: Mode, alpha: Scalar) -> Result<ExitCode, String> {
    let n = eta.len();
    let err = |e: nsjack::Error| e.to_string();
    match mode {
        Mode::Variable(i) => {
            let exp = expand_z_i(&eta, i, &alpha).map_err(err)?;
            print_terms(&format!("z_{} * E{eta}  [closed form]", i + 1), "E", &exp.terms);
        }
        Mode::E1 => {
            let exp = expand_e1(&eta, &alpha).map_err(err)?;
            print_terms(&format!("e_1 * E{eta}  [closed form]"), "E", &exp.terms);
        }
        Mode::EN1 => {
            if n < 2 {
                return Err("eN1 needs at least two variables".into());
            }
            let exp = expand_en1(&eta, &alpha).map_err(err)?;
            print_terms(&format!("e_{} * E{eta}  [closed form]", n - 1), "E", &exp.terms);
        }
        Mode::Elementary(p) => match closed_form_elementary(&eta, p, &alpha) {
            Some(exp) => {
                let exp = exp.map_err(err)?;
                print_terms(&format!("e_{p} * E{eta}  [closed form]"), "E", &exp.terms);
            }
            None => {
                let mut table = JackTable::new(n, alpha).map_err(err)?;
                let exp = brute_elementary(&eta, p, &mut table).map_err(err)?;
                print_terms(
                    &format!("e_{p} * E{eta}  [oracle: no closed form for 1 < p < N-1]"),
                    "E",
                    &exp.terms,
                );
            }
        },
        Mode::Symmetric(p) => {
            let terms = expand_ep_p(&eta, p, &alpha).map_err(err)?;
            print_terms(&format!("e_{p} * P{eta}  [closed form]"), "P", &terms);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(n: usize, alphas: Vec<Scalar>, max_weight: u32, inject_fault: bool) -> Result<ExitCode, String> {
    let mut all_passed = true;
    for alpha in alphas {
        println!("== N = {n}, alpha = {}, max weight = {max_weight}", format_scalar(&alpha));
        let start = Instant::now();
        let report = run_suite(&VerifyConfig {
            n,
            alpha,
            max_weight,
            inject_fault,
        })
        .map_err(|e| e.to_string())?;
        print!("{report}");
        println!("   ({:.3}s)", start.elapsed().as_secs_f64());
        all_passed &= report.passed();
    }
    println!("{}", if all_passed { "all identities hold" } else { "verification FAILED" });
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_explore(n: usize, p: usize, alpha: Scalar, max_weight: u32, out: PathBuf) -> Result<ExitCode, String> {
    let records = explore(n, p, &alpha, max_weight).map_err(|e| e.to_string())?;
    let csv = explore_csv(&records).map_err(|e| e.to_string())?;
    fs::write(&out, csv).map_err(|e| format!("{}: {e}", out.display()))?;
    println!(
        "N = {n}, p = {p}, alpha = {}, max weight = {max_weight}: {} rows written to {}",
        format_scalar(&alpha),
        records.len(),
        out.display()
    );
    for line in summarize(&records) {
        println!("{line}");
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen {
            n,
            alpha,
            max_weight,
            out,
        } => cmd_gen(n, alpha, max_weight, out),
        Command::Pieri { eta, mode, alpha } => {
            let mode = parse_mode(&mode, eta.len()).unwrap_or_else(|e| usage_error(e));
            cmd_pieri(eta, mode, alpha)
        }
        Command::Verify {
            n,
            alpha,
            max_weight,
            inject_fault,
        } => cmd_verify(n, alpha, max_weight, inject_fault),
        Command::Explore {
            n,
            p,
            alpha,
            max_weight,
            out,
        } => {
            if p == 0 || p > n {
                usage_error(format!("p must lie in 1..={n}"));
            }
            cmd_explore(n, p, alpha, max_weight, out)
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn modes() {
        assert_eq!(parse_mode(&words("zi 1"), 2), Ok(Mode::Variable(0)));
        assert_eq!(parse_mode(&words("e1"), 3), Ok(Mode::E1));
        assert_eq!(parse_mode(&words("eN1"), 3), Ok(Mode::EN1));
        assert_eq!(parse_mode(&words("ep 2"), 4), Ok(Mode::Elementary(2)));
        assert_eq!(parse_mode(&words("sym 1"), 2), Ok(Mode::Symmetric(1)));
        assert!(parse_mode(&words("zi 0"), 2).is_err());
        assert!(parse_mode(&words("zi 3"), 2).is_err());
        assert!(parse_mode(&words("e1 2"), 2).is_err());
        assert!(parse_mode(&words("ep"), 2).is_err());
        assert!(parse_mode(&words("xx"), 2).is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
