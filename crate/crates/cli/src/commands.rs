use charconj::characters::{mn_character, normalized_character};
use charconj::combinatorics::{parse_partition, Partition};
use charconj::conjecture::{
    conjectured_f, g_mu, interpolate_f, shape_to_partition, verify_conjecture,
    verify_conjecture_polynomial, verify_formula9, verify_g_structure, verify_oracles,
    verify_prop1_specialization, verify_reduction, verify_reductions, verify_theorem1,
    RectangleUnionShape, VerificationReport,
};
use charconj::polyalg::{formula9_fk, MultiPoly};
use serde_json::{json, Value};

use crate::{Cli, Command, Format, Identity, VerifyArgs, EXIT_MISMATCH};

type Outcome = Result<u8, String>;

pub fn run(cli: &Cli) -> Outcome {
    let format = cli.format;
    let text = format.unwrap_or(Format::Text) == Format::Text;
    match &cli.command {
        Command::Char { lambda, nu } => {
            let (lambda, nu) = (partition(lambda)?, partition(nu)?);
            let value = mn_character(&lambda, &nu).map_err(|e| e.to_string())?;
            emit(
                text,
                &value.to_string(),
                || json!({"lambda": lambda, "nu": nu, "value": value.to_string()}),
            )
        }
        Command::Fhat { lambda, shape, mu } => {
            let (lambda, shape) = match (lambda, shape) {
                (Some(l), _) => (partition(l)?, None),
                (None, Some(s)) => {
                    let shape: RectangleUnionShape = s.parse().map_err(|e| format!("{e}"))?;
                    (shape_to_partition(&shape), Some(shape.to_string()))
                }
                (None, None) => return Err("one of --lambda or --shape is required".into()),
            };
            let mu = partition(mu)?;
            let value = normalized_character(&lambda, &mu).map_err(|e| e.to_string())?;
            emit(text, &value.to_string(), || {
                let mut record = json!({"lambda": lambda, "mu": mu, "value": value.to_string()});
                if let Some(shape) = shape {
                    record["shape"] = json!(shape);
                }
                record
            })
        }
        Command::Gpoly { mu, m, signed } => {
            let mu = nonempty(partition(mu)?)?;
            positive("--m", *m)?;
            let poly = if *signed {
                conjectured_f(&mu, *m)
            } else {
                g_mu(&mu, *m)
            };
            emit_poly(text, &poly)
        }
        Command::Fk { k, m } => {
            positive("--k", *k)?;
            positive("--m", *m)?;
            let poly = formula9_fk(*k, *m).map_err(|e| e.to_string())?;
            emit_poly(text, &poly)
        }
        Command::Interp { mu, m } => {
            let mu = nonempty(partition(mu)?)?;
            positive("--m", *m)?;
            let poly = interpolate_f(&mu, *m).map_err(|e| e.to_string())?;
            emit_poly(text, &poly)
        }
        Command::Verify(args) => verify(format.unwrap_or(Format::Json), args),
    }
}

fn partition(text: &str) -> Result<Partition, String> {
    parse_partition(text).map_err(|e| format!("invalid partition {text:?}: {e}"))
}

fn nonempty(mu: Partition) -> Result<Partition, String> {
    if mu.is_empty() {
        Err("--mu must be a nonempty partition".into())
    } else {
        Ok(mu)
    }
}

fn positive(flag: &str, value: usize) -> Result<usize, String> {
    if value == 0 {
        Err(format!("{flag} must be at least 1"))
    } else {
        Ok(value)
    }
}

fn emit(text: bool, plain: &str, record: impl FnOnce() -> Value) -> Outcome {
    if text {
        println!("{plain}");
    } else {
        println!("{}", record());
    }
    Ok(0)
}

fn emit_poly(text: bool, poly: &MultiPoly) -> Outcome {
    if text {
        println!("{poly}");
    } else {
        println!(
            "{}",
            serde_json::to_string(poly).map_err(|e| e.to_string())?
        );
    }
    Ok(0)
}

fn verify(format: Format, args: &VerifyArgs) -> Outcome {
    let kmax = |default| args.kmax.map_or(Ok(default), |k| positive("--kmax", k));
    let m = |default| args.m.map_or(Ok(default), |m| positive("--m", m));
    let mmax = |default| args.mmax.map_or(Ok(default), |m| positive("--mmax", m));
    let dim = |default| args.dim.map_or(Ok(default), |d| positive("--dim", d));

    let report = match args.identity {
        Identity::Theorem1 => verify_theorem1(kmax(5)?, dim(4)?),
        Identity::Conjecture if args.polynomial => verify_conjecture_polynomial(kmax(3)?, m(2)?),
        Identity::Conjecture => verify_conjecture(kmax(4)?, m(2)?, dim(3)?),
        Identity::Prop1 => verify_prop1_specialization(kmax(6)?, mmax(3)?),
        Identity::Reduction => match &args.mu {
            Some(mu) => {
                let mu = nonempty(partition(mu)?)?;
                let m = m(2)?;
                let i = args.i.unwrap_or(1);
                if !(1 <= i && i < m) {
                    return Err(format!("--i must lie in 1..{m} (exclusive) for --m {m}"));
                }
                verify_reduction(&mu, m, i)
            }
            None => verify_reductions(kmax(5)?, mmax(3)?),
        },
        Identity::Formula9 => {
            let kgrid = args.kgrid.map_or(Ok(4), |k| positive("--kgrid", k))?;
            verify_formula9(kmax(5)?, kgrid, m(2)?, dim(3)?)
        }
        Identity::Oracles => verify_oracles(args.nmax.unwrap_or(8), args.ntableaux.unwrap_or(10)),
        Identity::Structure => verify_g_structure(kmax(5)?, mmax(3)?),
    };
    let report = if args.no_timing {
        report.without_timing()
    } else {
        report
    };
    print_report(format, &report)?;
    Ok(if report.pass { 0 } else { EXIT_MISMATCH })
}

fn print_report(format: Format, report: &VerificationReport) -> Result<(), String> {
    for mismatch in &report.mismatches {
        let line = serde_json::to_string(mismatch).map_err(|e| e.to_string())?;
        eprintln!("COUNTEREXAMPLE {line}");
    }
    match format {
        Format::Json => {
            let body = serde_json::to_string_pretty(report).map_err(|e| e.to_string())?;
            println!("{body}");
        }
        Format::Text => {
            println!(
                "{}: {} ({} cases, {} mismatches, {} ms)",
                report.identity,
                if report.pass { "PASS" } else { "FAIL" },
                report.cases,
                report.mismatches.len(),
                report.elapsed_ms
            );
            for (key, value) in &report.details {
                println!(
                    "  {key} = {}",
                    value
                        .as_str()
                        .map_or_else(|| value.to_string(), str::to_string)
                );
            }
            for mismatch in &report.mismatches {
                println!(
                    "  {}: expected {}, got {}",
                    mismatch.case, mismatch.expected, mismatch.actual
                );
            }
        }
    }
    Ok(())
}
