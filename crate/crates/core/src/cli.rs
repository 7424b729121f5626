//! Command-line front end.
//!
//! Exit status: 0 on success, 1 for invalid input, 2 when a formula check
//! disagrees with the direct computation. Failures print a single line
//! `error[<code>]: <message>` on stderr.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use crate::code::{QuantumCode, TransformSpec};
use crate::erasure::minimum_distance;
use crate::error::Error;
use crate::fixtures;
use crate::report::{self, UnionReport};
use crate::union::{union_code, verify_theorem4, verify_theorem5};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Analyze,
    Classify,
    Distance,
    Union,
    TheoremCheck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(
    name = "erasure-spaces",
    version,
    about = "Erasure spaces and union codes for small quantum codes"
)]
pub struct Args {
    #[arg(value_enum)]
    pub mode: Mode,

    /// Built-in code: rains-subcode, rains-union, gbp, gbp-union
    #[arg(long, conflicts_with = "code")]
    pub fixture: Option<String>,

    /// Code description in JSON
    #[arg(long)]
    pub code: Option<PathBuf>,

    /// Second component for `union`
    #[arg(long)]
    pub code2: Option<PathBuf>,

    /// Transform as inline JSON or a path to a JSON file
    #[arg(long)]
    pub transform: Option<String>,

    /// Largest Pauli weight to classify (default: n)
    #[arg(long)]
    pub max_weight: Option<usize>,

    /// Use the pure erasure conditions
    #[arg(long)]
    pub pure: bool,

    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,

    /// Write the report here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

enum Failure {
    Invalid(Error),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e)
    }
}

fn read_file(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))
}

fn load_code(args: &Args) -> Result<QuantumCode, Error> {
    match (&args.fixture, &args.code) {
        (Some(name), None) => fixtures::fixture(name),
        (None, Some(path)) => QuantumCode::from_json(&read_file(path)?),
        _ => Err(Error::Malformed(
            "exactly one of --fixture or --code is required".into(),
        )),
    }
}

fn load_transform(text: &str) -> Result<TransformSpec, Error> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        TransformSpec::from_json(text)
    } else {
        TransformSpec::from_json(&read_file(&PathBuf::from(text))?)
    }
}

fn execute(args: &Args) -> Result<String, Failure> {
    let code = load_code(args)?;
    let max_weight = args.max_weight.unwrap_or(code.n());
    let json = args.format == Format::Json;
    match args.mode {
        Mode::Analyze => {
            let r = report::analysis_report(&code, max_weight, args.pure)?;
            Ok(if json {
                report::to_json(&r)
            } else {
                report::analysis_table(&r)
            })
        }
        Mode::Classify => {
            let r = report::classification_report(&code, max_weight, args.pure)?;
            Ok(if json {
                report::to_json(&r)
            } else {
                report::classification_table(&r)
            })
        }
        Mode::Distance => {
            let r = report::distance_report(&code);
            Ok(if json {
                report::to_json(&r)
            } else {
                report::distance_table(&r)
            })
        }
        Mode::Union | Mode::TheoremCheck => {
            let r = match (&args.transform, &args.code2) {
                (Some(t), None) => {
                    let u = load_transform(t)?.build(code.n())?.to_action();
                    let image = code
                        .transform_with(&u)?
                        .with_label(format!("U {}", code.label()));
                    let (joined, build) = union_code(&[code.clone(), image])?;
                    let mut r = UnionReport::new(&build, minimum_distance(&joined).value);
                    r.theorem4 = Some(verify_theorem4(&code, &u)?.into());
                    r.theorem5 = Some(verify_theorem5(&code, &u)?.into());
                    r
                }
                (None, Some(path)) if args.mode == Mode::Union => {
                    let other = QuantumCode::from_json(&read_file(path)?)?;
                    let (joined, build) = union_code(&[code, other])?;
                    UnionReport::new(&build, minimum_distance(&joined).value)
                }
                (None, Some(_)) => {
                    return Err(Error::Malformed("theorem-check needs --transform".into()).into());
                }
                _ => {
                    return Err(Error::Malformed(
                        "union needs exactly one of --transform or --code2".into(),
                    )
                    .into());
                }
            };
            let text = if json {
                report::to_json(&r)
            } else {
                report::union_table(&r)
            };
            let failed: Vec<&str> = [("theorem4", &r.theorem4), ("theorem5", &r.theorem5)]
                .into_iter()
                .filter(|(_, t)| t.as_ref().is_some_and(|t| !t.matches_direct))
                .map(|(name, _)| name)
                .collect();
            if args.mode == Mode::TheoremCheck && !failed.is_empty() {
                return Err(Failure::Mismatch(format!(
                    "{} disagree with the direct computation\n{text}",
                    failed.join(", ")
                )));
            }
            Ok(text)
        }
    }
}

/// Runs the tool on `argv` (including the program name), writing reports to
/// `stdout` and errors to `stderr`. Returns the exit status.
pub fn run_cli<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let first = e
                .to_string()
                .lines()
                .next()
                .unwrap_or("")
                .trim_start_matches("error: ")
                .to_string();
            let _ = writeln!(stderr, "error[usage]: {first}");
            return 1;
        }
    };
    match execute(&args) {
        Ok(text) => {
            if let Some(path) = &args.out {
                if let Err(e) = std::fs::write(path, &text) {
                    let _ = writeln!(stderr, "error[io]: {}: {e}", path.display());
                    return 1;
                }
            } else {
                let _ = stdout.write_all(text.as_bytes());
            }
            0
        }
        Err(Failure::Invalid(e)) => {
            let _ = writeln!(stderr, "error[{}]: {e}", e.code());
            1
        }
        Err(Failure::Mismatch(msg)) => {
            let mut lines = msg.lines();
            let _ = writeln!(
                stderr,
                "error[theorem-mismatch]: {}",
                lines.next().unwrap_or("")
            );
            for l in lines {
                let _ = writeln!(stdout, "{l}");
            }
            2
        }
    }
}
