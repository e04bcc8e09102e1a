use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dercurve::families::{self, FamilyInstance};
use dercurve::poincare::{self, TruncatedSeries};
use dercurve::report::{self, AnalyzeOptions, PoincareData, ResidueSeries, BOUND_ENV};
use dercurve::{Error, Result};

/// Derivation modules of plane curve singularities with two Puiseux pairs.
#[derive(Parser, Debug)]
#[command(name = "dercurve", version, about)]
struct Cli {
    /// Print a human-readable table instead of JSON.
    #[arg(long, global = true)]
    human: bool,

    /// Degree bound for the Cohen-Macaulay check and witness scans.
    #[arg(long, global = true, env = BOUND_ENV)]
    bound: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyze the semigroup generated by the given integers.
    Analyze {
        #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
        generators: Vec<i64>,
        #[command(flatten)]
        residue: ResidueArgs,
    },
    /// Validate a named family against its closed formulas.
    Family {
        #[command(subcommand)]
        family: FamilyCommand,
    },
    /// Derivation-module Poincaré series from the residue-field series.
    Poincare {
        #[arg(long)]
        h1: u64,
        #[arg(long)]
        h2: u64,
        #[command(flatten)]
        residue: ResidueArgs,
    },
}

#[derive(Args, Debug)]
struct ResidueArgs {
    /// Truncated residue-field series, e.g. `1,5`.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
    /// Rational residue-field series `p;q`, e.g. `1;1,-2`.
    #[arg(long, allow_hyphen_values = true)]
    rational: Option<String>,
    /// Expansion order for the rational form.
    #[arg(long)]
    order: Option<usize>,
}

impl ResidueArgs {
    fn parse(&self) -> Result<ResidueSeries> {
        let coeffs = self
            .coeffs
            .as_deref()
            .map(|s| poincare::parse_coeffs::<u64>(s).and_then(TruncatedSeries::new))
            .transpose()?;
        let rational = self
            .rational
            .as_deref()
            .map(poincare::parse_rational)
            .transpose()?;
        Ok(ResidueSeries {
            coeffs,
            rational,
            order: self.order,
        })
    }
}

#[derive(Subcommand, Debug)]
enum FamilyCommand {
    /// ⟨h²+3h+2, h²+3h+3, h²+4h+4, h²+4h+5⟩ for h ≥ 2.
    Arslan {
        #[arg(long)]
        h: i64,
        /// Validate every h up to this value.
        #[arg(long)]
        sweep: Option<i64>,
    },
    /// Type-2n+4 family indexed by n ≥ 2 and r ≥ 3n+2.
    Backelin {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        r: i64,
        /// Validate every r up to this value.
        #[arg(long)]
        sweep: Option<i64>,
        /// Skip instances whose parameter s exceeds this.
        #[arg(long, default_value_t = 200)]
        max_s: i64,
    },
}

fn check_sweep(start: i64, sweep: Option<i64>) -> Result<()> {
    match sweep {
        Some(end) if end < start => Err(Error::ParamOutOfRange(format!(
            "sweep end {end} is below the start {start}"
        ))),
        _ => Ok(()),
    }
}

fn family_instances(cmd: &FamilyCommand) -> Result<(Vec<FamilyInstance>, bool)> {
    match *cmd {
        FamilyCommand::Arslan { h, sweep } => {
            check_sweep(h, sweep)?;
            let hs = h..=sweep.unwrap_or(h);
            let insts = hs
                .map(|h| families::arslan(h).map(FamilyInstance::from))
                .collect::<Result<Vec<_>>>()?;
            Ok((insts, sweep.is_some()))
        }
        FamilyCommand::Backelin { n, r, sweep, max_s } => {
            check_sweep(r, sweep)?;
            let first = families::backelin(n, r)?;
            let mut insts = vec![FamilyInstance::from(first)];
            for r in r + 1..=sweep.unwrap_or(r) {
                let inst = families::backelin(n, r)?;
                if inst.s > max_s {
                    break;
                }
                insts.push(inst.into());
            }
            Ok((insts, sweep.is_some()))
        }
    }
}

fn run(cli: &Cli) -> Result<(String, bool)> {
    match &cli.command {
        Command::Analyze {
            generators,
            residue,
        } => {
            let opts = AnalyzeOptions {
                degree_bound: cli.bound,
                residue: residue.parse()?,
            };
            let r = report::analyze(generators, &opts)?;
            let out = if cli.human {
                r.render_human()
            } else {
                report::to_json(&r)
            };
            Ok((out, true))
        }
        Command::Family { family } => {
            let (insts, sweep) = family_instances(family)?;
            if sweep {
                let r = report::sweep_report(&insts, cli.bound);
                let out = if cli.human {
                    r.render_human()
                } else {
                    report::to_json(&r)
                };
                Ok((out, r.passed))
            } else {
                let r = report::family_report(&insts[0], cli.bound);
                let out = if cli.human {
                    r.render_human()
                } else {
                    report::to_json(&r)
                };
                Ok((out, r.passed))
            }
        }
        Command::Poincare { h1, h2, residue } => {
            let residue = residue.parse()?;
            if residue.coeffs.is_none() && residue.rational.is_none() {
                return Err(Error::Parse(
                    "one of --coeffs or --rational is required".into(),
                ));
            }
            let data = PoincareData::new(*h1, *h2, &residue)?;
            let out = if cli.human {
                let mut lines = vec![format!("P_Der = {}", data.relation)];
                if let Some(t) = &data.truncated {
                    lines.push(t.wire.clone());
                }
                if let Some(r) = &data.rational {
                    lines.push(r.derivation_module.clone());
                    if let Some(e) = &r.expansion {
                        lines.push(e.to_string());
                    }
                }
                lines.join("\n") + "\n"
            } else {
                report::to_json(&data)
            };
            Ok((out, true))
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(out: &str) {
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    if !out.ends_with('\n') {
        let _ = stdout.write_all(b"\n");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, passed)) => {
            emit(&out);
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if cli.human {
                eprintln!("error: {e}");
            } else {
                emit(&report::error_json(&e));
            }
            ExitCode::from(report::exit_code(&e) as u8)
        }
    }
}
