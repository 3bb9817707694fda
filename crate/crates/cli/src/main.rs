//! `hermite`: command-line front end for real-rootedness certificates.
//!
//! Exit codes: 0 real-rooted / success, 1 not real-rooted, 2 usage or input
//! error, 3 internal disagreement (oracle mismatch or self-rejected
//! certificate).

mod render;

use std::io::Read;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hermite_core::corpus::CorpusConfig;
use hermite_core::parse::parse_coeff_list;
use hermite_core::selftest::{run_selftest, Fault};
use hermite_core::{
    approx_roots, certify, lemma2_witness, newton_power_sums, oracle_is_real_rooted, parse_poly,
    squarefree_part, sturm_count_all, verify_certificate, Error, HermiteMatrix, Poly, Verdict,
};
use serde_json::json;

const EXIT_REAL_ROOTED: u8 = 0;
const EXIT_NOT_REAL_ROOTED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DISAGREEMENT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "hermite",
    version,
    about = "Decide and certify real-rootedness of rational polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PolyInput {
    /// Polynomial in x (e.g. "x^3-6*x^2+11*x-6"), an ascending coefficient
    /// list ("-6, 11, -6, 1"), or "-" to read stdin.
    poly: String,
    /// Read the input strictly as an ascending coefficient list.
    #[arg(long)]
    coeffs: bool,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide real-rootedness and print the certificate.
    Check {
        #[command(flatten)]
        input: PolyInput,
        /// Attach the interpolation witness when not real-rooted.
        #[arg(long)]
        lemma2: bool,
        /// Cross-check the verdict against a Sturm sequence count.
        #[arg(long)]
        oracle: bool,
    },
    /// Print the power sums and the Hermite matrix.
    Matrix {
        #[command(flatten)]
        input: PolyInput,
    },
    /// Print negativity witnesses for a polynomial with a non-real root.
    Witness {
        #[command(flatten)]
        input: PolyInput,
    },
    /// Distinct and distinct real root counts from rank and signature.
    Counts {
        #[command(flatten)]
        input: PolyInput,
        /// Compare with the squarefree degree and Sturm count.
        #[arg(long)]
        oracle: bool,
    },
    /// Run the oracle-equivalence suite on a generated corpus.
    Selftest {
        #[arg(long, default_value_t = 10)]
        degree_max: usize,
        #[arg(long, default_value_t = 500)]
        cases: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        json: bool,
        #[arg(long, hide = true, value_enum)]
        inject_fault: Option<FaultArg>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    NegateM2,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn read_poly(input: &PolyInput) -> anyhow::Result<Poly> {
    let text = if input.poly == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading stdin")?;
        buf
    } else {
        input.poly.clone()
    };
    let f = if input.coeffs {
        parse_coeff_list(&text)?
    } else {
        parse_poly(&text)?
    };
    if f.is_constant() {
        bail!(Error::ConstantPolynomial);
    }
    Ok(f)
}

fn print_json(v: &serde_json::Value) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Check {
            input,
            lemma2,
            oracle,
        } => {
            let f = read_poly(&input)?;
            let cert = certify(&f, lemma2)?;
            let self_check = verify_certificate(&cert, &f);
            let oracle_result = if oracle {
                Some(oracle_is_real_rooted(&f)?)
            } else {
                None
            };
            let decided = cert.verdict == Verdict::RealRooted;
            let agrees = oracle_result.is_none_or(|o| o == decided);

            if input.json {
                let mut doc = serde_json::to_value(&cert)?;
                if let Some(o) = oracle_result {
                    doc["oracle"] = json!({ "sturm_real_rooted": o, "agrees": agrees });
                }
                print_json(&doc)?;
            } else {
                print!("{}", render::certificate(&cert));
                if let Some(o) = oracle_result {
                    println!(
                        "oracle (Sturm): real-rooted = {o} -> {}",
                        if agrees { "agrees" } else { "DISAGREES" }
                    );
                }
            }
            if let Err(reason) = self_check {
                eprintln!("internal error: emitted certificate failed verification ({reason})");
                return Ok(EXIT_DISAGREEMENT);
            }
            if !agrees {
                eprintln!("internal error: Hermite verdict disagrees with Sturm oracle");
                return Ok(EXIT_DISAGREEMENT);
            }
            Ok(if decided {
                EXIT_REAL_ROOTED
            } else {
                EXIT_NOT_REAL_ROOTED
            })
        }
        Command::Matrix { input } => {
            let f = read_poly(&input)?;
            let sums = newton_power_sums(&f, None)?;
            let h = HermiteMatrix::from_power_sums(&sums)?;
            if input.json {
                print_json(&json!({
                    "polynomial": f.to_string(),
                    "degree": sums.n,
                    "power_sums": sums.values.iter().map(hermite_core::rational::to_fraction_string).collect::<Vec<_>>(),
                    "hermite": serde_json::to_value(&h)?,
                }))?;
            } else {
                print!("{}", render::matrix(&f, &sums, &h));
            }
            Ok(0)
        }
        Command::Witness { input } => {
            let f = read_poly(&input)?;
            let cert = certify(&f, false)?;
            if cert.verdict == Verdict::RealRooted {
                if input.json {
                    print_json(
                        &json!({ "verdict": cert.verdict, "witness": null, "lemma2": null }),
                    )?;
                } else {
                    println!(
                        "verdict: RealRooted (H_f is positive semidefinite; no witness exists)"
                    );
                }
                return Ok(EXIT_REAL_ROOTED);
            }
            let w = lemma2_witness(&f)?;
            if input.json {
                print_json(&json!({
                    "verdict": cert.verdict,
                    "witness": serde_json::to_value(&cert.witness)?,
                    "witness_value": cert.witness_value.as_ref().map(hermite_core::rational::to_fraction_string),
                    "lemma2": serde_json::to_value(&w)?,
                }))?;
            } else {
                print!("{}", render::witnesses(&cert, &w));
            }
            Ok(EXIT_NOT_REAL_ROOTED)
        }
        Command::Counts { input, oracle } => {
            let f = read_poly(&input)?;
            let cert = certify(&f, false)?;
            let mut code = 0;
            let oracle_doc = if oracle {
                let r = squarefree_part(&f)?.degree().unwrap_or(0);
                let real = sturm_count_all(&f)?;
                let agrees =
                    r == cert.counts.distinct_roots && real == cert.counts.distinct_real_roots;
                if !agrees {
                    code = EXIT_DISAGREEMENT;
                }
                Some((r, real, agrees))
            } else {
                None
            };
            if input.json {
                let mut doc = serde_json::to_value(&cert.counts)?;
                if let Some((r, real, agrees)) = oracle_doc {
                    doc["oracle"] = json!({
                        "squarefree_degree": r,
                        "sturm_real_roots": real,
                        "agrees": agrees,
                    });
                }
                print_json(&doc)?;
            } else {
                println!("distinct roots (rank H_f): {}", cert.counts.distinct_roots);
                println!(
                    "distinct real roots (signature H_f): {}",
                    cert.counts.distinct_real_roots
                );
                println!("note: {}", cert.counts.note);
                if let Some((r, real, agrees)) = oracle_doc {
                    println!(
                        "oracle: squarefree degree {r}, Sturm count {real} -> {}",
                        if agrees { "agrees" } else { "DISAGREES" }
                    );
                }
            }
            // Roots are only listed in text mode, as a convenience.
            if !input.json {
                if let Ok(roots) = approx_roots(&f) {
                    print!("{}", render::roots(&roots));
                }
            }
            Ok(code)
        }
        Command::Selftest {
            degree_max,
            cases,
            seed,
            json,
            inject_fault,
        } => {
            let config = CorpusConfig {
                cases,
                degree_max,
                seed,
            };
            let fault = inject_fault.map(|FaultArg::NegateM2| Fault::NegateM2);
            let report = run_selftest(&config, fault);
            if json {
                print_json(&json!({
                    "cases": report.cases,
                    "real_rooted": report.real_rooted,
                    "passed": report.passed(),
                    "failures": report.failures,
                    "seed": seed,
                    "degree_max": degree_max,
                }))?;
            } else {
                println!(
                    "selftest: {} cases (degree <= {degree_max}, seed {seed}), {} real-rooted, {} failures",
                    report.cases,
                    report.real_rooted,
                    report.failures.len()
                );
                for f in report.failures.iter().take(20) {
                    println!("  {f}");
                }
            }
            Ok(if report.passed() {
                0
            } else {
                EXIT_DISAGREEMENT
            })
        }
    }
}
