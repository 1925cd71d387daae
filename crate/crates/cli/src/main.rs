use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use stackcoh::gcoh::{group_cohomology, oracle_cohomology, GcohError, Provenance};
use stackcoh::io::{parse_coeff_arg, parse_descriptor, parse_group_arg, to_stable_json, ResultRecord};
use stackcoh::stackcurve::{
    cohomology, h2_abelian_crosscheck, kummer_h2, picard_orbicurve, CurveDescriptor, StackcurveError,
};
use stackcoh::verify::{self, Suite};

const EXIT_INVALID: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "stackcoh", version, about = "Etale cohomology of tame stacky curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// H^r(X, G_m) for r = 0..=R.
    Cohom {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        max_degree: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Picard group of the curve.
    Picard {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// H^r(G, M) for a finite group with trivial action.
    Groupcoh {
        /// `Z/n`, `Z/a x Z/b`, `Dn` (dihedral of order n) or `trivial`.
        #[arg(long)]
        group: String,
        /// `Z`, `Z/m`, `k*` or `Pic0(g=N)`.
        #[arg(long)]
        coeff: String,
        #[arg(long)]
        degree: u32,
        /// Force the bar-resolution oracle.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = 0)]
        characteristic: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// H^2(Y, mu_n).
    Kummer {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Compares H^2 of the curve with H^2 of Y x BG_0.
    Crosscheck {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Runs the self-check suites.
    Verify {
        #[arg(default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }
}

impl From<GcohError> for Failure {
    fn from(e: GcohError) -> Self {
        let code = if matches!(e, GcohError::BudgetExceeded { .. }) {
            EXIT_BUDGET
        } else {
            EXIT_INVALID
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<StackcurveError> for Failure {
    fn from(e: StackcurveError) -> Self {
        match e {
            StackcurveError::Group(g) => g.into(),
            StackcurveError::Invalid(d) => Failure::invalid(diagnostics(&d)),
            other => Failure::invalid(other.to_string()),
        }
    }
}

fn diagnostics<T: ToString>(d: &[T]) -> String {
    d.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
}

fn load(path: &PathBuf) -> Result<CurveDescriptor, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))?;
    parse_descriptor(&text).map_err(|d| Failure::invalid(diagnostics(&d)))
}

fn cohom(input: &PathBuf, max_degree: u32, format: Format) -> Result<String, Failure> {
    let desc = load(input)?;
    let records = (0..=max_degree)
        .map(|r| cohomology(&desc, r).map(|v| ResultRecord::from(&v)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(match format {
        Format::Json => to_stable_json(&records),
        Format::Text => {
            let mut out = String::new();
            for rec in &records {
                let mark = if rec.resolved { "" } else { "  (unresolved)" };
                writeln!(out, "H^{}\t{}\t[{}]{mark}", rec.degree, rec.value, rec.provenance).unwrap();
                for n in &rec.notes {
                    writeln!(out, "\tnote: {n}").unwrap();
                }
            }
            out
        }
    })
}

#[derive(Serialize)]
struct PicardRecord {
    value: String,
    provenance: String,
    discrete_part: Option<String>,
    quotient: Option<String>,
    resolved: bool,
    notes: Vec<String>,
}

fn picard(input: &PathBuf, format: Format) -> Result<String, Failure> {
    let desc = load(input)?;
    let rec = if desc.generic_stabilizer.order() == 1 && !desc.is_nodal() {
        let p = picard_orbicurve(&desc)?;
        PicardRecord {
            value: p.to_string(),
            provenance: p.provenance.clone(),
            discrete_part: Some(p.discrete_part.to_string()),
            quotient: Some(p.quotient.to_string()),
            resolved: true,
            notes: Vec::new(),
        }
    } else {
        let h1 = ResultRecord::from(&cohomology(&desc, 1)?);
        PicardRecord {
            value: h1.value,
            provenance: h1.provenance,
            discrete_part: None,
            quotient: None,
            resolved: h1.resolved,
            notes: h1.notes,
        }
    };
    Ok(match format {
        Format::Json => to_stable_json(&rec),
        Format::Text => {
            let mut out = format!("Pic\t{}\t[{}]\n", rec.value, rec.provenance);
            if let (Some(d), Some(q)) = (&rec.discrete_part, &rec.quotient) {
                writeln!(out, "discrete\t{d}\nquotient\t{q}").unwrap();
            }
            out
        }
    })
}

#[derive(Serialize)]
struct GroupRecord {
    degree: u32,
    value: String,
    provenance: Provenance,
}

fn groupcoh(group: &str, coeff: &str, degree: u32, oracle: bool, p: u64, format: Format) -> Result<String, Failure> {
    let g = parse_group_arg(group).map_err(|e| Failure::invalid(format!("--group: {e}")))?;
    let m = parse_coeff_arg(coeff, p).map_err(|e| Failure::invalid(format!("--coeff: {e}")))?;
    let (value, provenance) = if oracle {
        (oracle_cohomology(&g, &m, degree)?, Provenance::BarOracle)
    } else {
        let t = group_cohomology(&g, &m, degree)?;
        (t.value, t.provenance)
    };
    let rec = GroupRecord {
        degree,
        value: value.to_string(),
        provenance,
    };
    Ok(match format {
        Format::Json => to_stable_json(&rec),
        Format::Text => format!("{}\t[{}]\n", rec.value, rec.provenance),
    })
}

fn kummer(input: &PathBuf, n: u64, format: Format) -> Result<String, Failure> {
    let desc = load(input)?;
    let g = kummer_h2(&desc, n)?;
    Ok(match format {
        Format::Json => to_stable_json(&serde_json::json!({ "n": n, "value": g.to_string() })),
        Format::Text => format!("{g}\n"),
    })
}

fn crosscheck(input: &PathBuf, format: Format) -> Result<String, Failure> {
    let desc = load(input)?;
    let rep = h2_abelian_crosscheck(&desc)?;
    Ok(match format {
        Format::Json => to_stable_json(&rep),
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "H^2 via {}\t{}", rep.direct_pipeline, rep.direct).unwrap();
            writeln!(out, "H^2(Y x BG0)\t{}", rep.trivial_gerbe).unwrap();
            for a in &rep.trivial_gerbe.audit {
                writeln!(out, "\t{}: {}", a.label, a.value).unwrap();
            }
            if let Some(o) = &rep.odd_degree {
                writeln!(out, "H^{} via cyclic_tower\t{}", o.degree, o.tower).unwrap();
                writeln!(out, "H^{}(Y x BG0)\t{}", o.degree, o.trivial_gerbe).unwrap();
            }
            let status = if rep.flagged { "flagged" } else { "ok" };
            writeln!(out, "status\t{:?}\t{status}", rep.status).unwrap();
            writeln!(out, "order laws\t{}", if rep.order_laws_hold { "hold" } else { "FAIL" }).unwrap();
            for n in &rep.notes {
                writeln!(out, "note: {n}").unwrap();
            }
            out
        }
    })
}

fn verify_cmd(suite: Suite, format: Format) -> (String, bool) {
    let rep = verify::run(suite);
    let text = match format {
        Format::Json => to_stable_json(&rep),
        Format::Text => {
            let mut out = String::new();
            for c in &rep.checks {
                writeln!(out, "{}\t{}/{}\t{}", c.outcome, c.suite, c.name, c.detail).unwrap();
            }
            writeln!(
                out,
                "{} passed, {} failed, {} flagged",
                rep.count(verify::Outcome::Pass),
                rep.count(verify::Outcome::Fail),
                rep.count(verify::Outcome::Flagged)
            )
            .unwrap();
            out
        }
    };
    (text, rep.passed())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    let result = match &cli.command {
        Command::Cohom {
            input,
            max_degree,
            format,
        } => cohom(input, *max_degree, *format),
        Command::Picard { input, format } => picard(input, *format),
        Command::Groupcoh {
            group,
            coeff,
            degree,
            oracle,
            characteristic,
            format,
        } => groupcoh(group, coeff, *degree, *oracle, *characteristic, *format),
        Command::Kummer { input, n, format } => kummer(input, *n, *format),
        Command::Crosscheck { input, format } => crosscheck(input, *format),
        Command::Verify { suite, format } => {
            let (text, ok) = verify_cmd(*suite, *format);
            print!("{text}");
            return if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_INVALID)
            };
        }
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
