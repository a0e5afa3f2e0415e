//! `ncsym` command-line interface.
//!
//! Exit codes: 0 on success, 1 on a domain error (or a failed check), 2 on
//! malformed input.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ncsym::classification::{DEFAULT_MAX_N, HARD_MAX_N};
use ncsym::{
    equal_oracle, equal_same_diagram, rho, skew_schur, skew_schur_nc, source_skew_schur,
    theorem_verdict, verify_exhaustive_with, BasisKey, Error, Expansion, LabeledDiagram,
    Permutation, SkewDiagram, TheoremVerdict, VerifyOptions,
};

#[derive(Parser)]
#[command(
    name = "ncsym",
    version,
    about = "Skew Schur functions in commuting and noncommuting variables"
)]
struct Cli {
    /// Output style for expansions and verification reports.
    #[arg(long, value_enum, global = true, default_value_t = Format::Plain)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Commutative skew Schur function of a diagram, in the h basis.
    Expand { diagram: String },
    /// Skew Schur function in noncommuting variables: `[PERM] DIAGRAM`.
    ExpandNc {
        /// Use the identity labeling.
        #[arg(long)]
        source: bool,
        #[arg(num_args = 1..=2, required = true)]
        args: Vec<String>,
    },
    /// Decide s_(PERM1,DIAG1) = s_(PERM2,DIAG2) by comparing expansions.
    Equal {
        perm1: String,
        diag1: String,
        perm2: String,
        diag2: String,
    },
    /// Apply the classification criterion to two labeled diagrams.
    Classify {
        perm1: String,
        diag1: String,
        perm2: String,
        diag2: String,
    },
    /// k-row overlap composition and partition.
    Overlap { diagram: String, k: String },
    /// Let the variables commute and compare with the commutative function.
    Rho { perm: String, diagram: String },
    /// Check the criterion against the oracle for every pair of size n.
    Verify {
        n: String,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        /// Allow n above the default cap.
        #[arg(long)]
        force: bool,
    },
    /// ASCII picture of a diagram.
    Show { diagram: String },
}

/// Text written to stdout and whether the command succeeded.
struct Outcome {
    text: String,
    success: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome {
            text,
            success: true,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Error::Disconnected(shape)) => {
            eprintln!("error: refusing {shape}: both diagrams must be connected skew diagrams");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_parse() { 2 } else { 1 })
        }
    }
}

fn diagram(text: &str) -> Result<SkewDiagram, Error> {
    text.parse()
}

/// `id` takes its size from the diagram.
fn perm(text: &str, size: usize) -> Result<Permutation, Error> {
    if text.trim() == "id" {
        Ok(Permutation::identity(size))
    } else {
        text.parse()
    }
}

fn labeled(p: &str, d: &str) -> Result<LabeledDiagram, Error> {
    let d = diagram(d)?;
    let p = perm(p, d.size())?;
    LabeledDiagram::new(p, d)
}

fn render<K: BasisKey>(e: &Expansion<K>, format: Format) -> String {
    match format {
        Format::Plain => format!("{e}\n"),
        Format::Machine => e.to_machine(),
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let format = cli.format;
    match &cli.command {
        Command::Expand { diagram: d } => {
            Ok(Outcome::ok(render(&skew_schur(&diagram(d)?), format)))
        }
        Command::ExpandNc { source, args } => {
            let e = match (args.as_slice(), source) {
                ([d], true) => source_skew_schur(&diagram(d)?),
                ([d], false) => {
                    return Err(Error::Parse {
                        token: d.clone(),
                        reason: "expected `PERM DIAGRAM` or `--source DIAGRAM`".into(),
                    })
                }
                ([_, d], true) => {
                    return Err(Error::Parse {
                        token: d.clone(),
                        reason: "--source takes only a diagram".into(),
                    })
                }
                ([p, d], false) => {
                    let d = diagram(d)?;
                    skew_schur_nc(&perm(p, d.size())?, &d)?
                }
                _ => unreachable!("clap limits the argument count"),
            };
            Ok(Outcome::ok(render(&e, format)))
        }
        Command::Equal {
            perm1,
            diag1,
            perm2,
            diag2,
        } => {
            let a = labeled(perm1, diag1)?;
            let b = labeled(perm2, diag2)?;
            let verdict = if equal_oracle(&a, &b)? {
                "EQUAL"
            } else {
                "NOT-EQUAL"
            };
            Ok(Outcome::ok(format!("{verdict}\n")))
        }
        Command::Classify {
            perm1,
            diag1,
            perm2,
            diag2,
        } => {
            let a = labeled(perm1, diag1)?;
            let b = labeled(perm2, diag2)?;
            let line = if a.diagram() == b.diagram() {
                let sigma = b.perm().inverse().compose(a.perm())?;
                let check = equal_same_diagram(&sigma, a.diagram())?;
                let verdict = if check.equal { "EQUAL" } else { "NOT-EQUAL" };
                format!("{verdict} (oracle)")
            } else {
                match theorem_verdict(&a, &b)? {
                    TheoremVerdict::Equal => "EQUAL".to_string(),
                    v => format!(
                        "NOT-EQUAL (condition {})",
                        v.failed_condition().expect("failing verdict")
                    ),
                }
            };
            Ok(Outcome::ok(format!("{line}\n")))
        }
        Command::Overlap { diagram: d, k } => {
            let d = diagram(d)?;
            let k: usize = k.trim().parse().map_err(|_| Error::Parse {
                token: k.clone(),
                reason: "expected a positive integer".into(),
            })?;
            let comp = d.row_overlap_composition(k)?;
            let part = d.row_overlap_partition(k)?;
            Ok(Outcome::ok(format!("{comp}\npartition: {part}\n")))
        }
        Command::Rho {
            perm: p,
            diagram: d,
        } => {
            let d = diagram(d)?;
            let p = perm(p, d.size())?;
            let projected = rho(&skew_schur_nc(&p, &d)?);
            let matches = projected == skew_schur(&d);
            let mut text = render(&projected, format);
            text.push_str(&format!(
                "MATCHES commutative: {}\n",
                if matches { "yes" } else { "no" }
            ));
            Ok(Outcome {
                text,
                success: matches,
            })
        }
        Command::Verify { n, jobs, force } => {
            let n: usize = n.trim().parse().map_err(|_| Error::Parse {
                token: n.clone(),
                reason: "expected a positive integer".into(),
            })?;
            let options = VerifyOptions {
                jobs: *jobs,
                max_n: if *force { HARD_MAX_N } else { DEFAULT_MAX_N },
                ..Default::default()
            };
            let report = verify_exhaustive_with(n, &options)?;
            let text = match format {
                Format::Plain => {
                    let mut s = report.summary();
                    for d in &report.disagreements {
                        s.push_str(&format!(
                            "disagreement: ({}, {}) vs (id, {}): predicate {} oracle {}\n",
                            d.sigma, d.diagram, d.target, d.predicate, d.oracle
                        ));
                    }
                    s
                }
                Format::Machine => report
                    .disagreements
                    .iter()
                    .map(|d| d.machine_line() + "\n")
                    .collect(),
            };
            Ok(Outcome {
                text,
                success: report.passed(),
            })
        }
        Command::Show { diagram: d } => Ok(Outcome::ok(diagram(d)?.render_ascii())),
    }
}
