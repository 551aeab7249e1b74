//! `mvc`: MV polytopes, Demazure crystals and strata from the command line.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use mvcrystal::demazure::{
    extremal, extremal_on, in_demazure, in_opposite_demazure, in_opposite_demazure_fmax,
    in_opposite_demazure_polytopal, MembershipReport, Method,
};
use mvcrystal::graph::{generate_crystal, scan_question};
use mvcrystal::io::{datum_to_json, graph_to_csv, graph_to_dot, graph_to_json};
use mvcrystal::lusztig::element_key;
use mvcrystal::oracle::oracle_opposite_set;
use mvcrystal::strata::{iota, kappa};
use mvcrystal::validate::validate;
use mvcrystal::{Base, Coweight, Error, Limits, LusztigDatum, ReducedWord, RootDatum, WeylElement};

mod selftest;

const EXIT_USAGE: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_GATE: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "mvc", version, about = "Exact MV polytopes and Demazure crystals for types A, D, E")]
struct Cli {
    /// Override the node gate (also read from MVC_MAX_NODES).
    #[arg(long, global = true)]
    max_nodes: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OppositeMethod {
    /// Vertex equalities on one word through `x w0`.
    Fast,
    /// Membership in the inductively built opposite Demazure crystal.
    Oracle,
    /// The `f^max` chain reaching the lowest element.
    Fmax,
    /// Containment of the extremal polytope.
    Polytopal,
}

#[derive(Debug, Args)]
struct TypeArg {
    /// Cartan type, e.g. A2, D4, E6.
    #[arg(long = "type", value_name = "TYPE")]
    cartan_type: String,
}

#[derive(Debug, Args)]
struct DatumArgs {
    #[command(flatten)]
    ty: TypeArg,
    /// Highest weight in coroot coordinates, or `inf` for B(inf).
    #[arg(long, default_value = "inf")]
    lambda: String,
    /// Reduced word of w0, one-based and comma separated (default: the reference word).
    #[arg(long)]
    word: Option<String>,
    /// Lusztig datum on the word.
    #[arg(long, allow_hyphen_values = true)]
    n: String,
}

#[derive(Debug, Args)]
struct Output {
    /// Write to a file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate the crystal graph of B(lambda).
    Gen {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        lambda: String,
        /// Annotate every node with iota and kappa (always on for CSV).
        #[arg(long)]
        strata: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Demazure membership.
    Demazure {
        #[command(flatten)]
        datum: DatumArgs,
        /// Reduced word of x.
        #[arg(long)]
        x: String,
        #[command(flatten)]
        output: Output,
    },
    /// Opposite Demazure membership.
    Opposite {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long)]
        x: String,
        #[arg(long, value_enum, default_value = "fast")]
        method: OppositeMethod,
        #[command(flatten)]
        output: Output,
    },
    /// The extremal MV polytope of weight x lambda.
    Extremal {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        x: String,
        /// Express the result on this word instead of the reference word.
        #[arg(long)]
        word: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// The finest Demazure stratum containing the datum.
    Iota {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        output: Output,
    },
    /// The finest opposite Demazure stratum containing the datum.
    Kappa {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        output: Output,
    },
    /// The star involution on B(inf).
    Star {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Re-express a datum on another reduced word.
    Convert {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long)]
        to: String,
        #[command(flatten)]
        output: Output,
    },
    /// Check the datum against the defining conditions.
    Validate {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Test whether Demazure elements lie in the matching extremal polytope.
    ScanQdem {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        lambda: String,
        #[command(flatten)]
        output: Output,
    },
    /// Compare the decision procedures with their brute-force oracles.
    Selftest {
        /// Types to test, comma separated.
        #[arg(long = "type", default_value = "A2,A3")]
        types: String,
        /// Largest coordinate of the highest weights swept.
        #[arg(long, default_value_t = 1)]
        max_coord: i64,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        let code = match error.downcast_ref::<Error>() {
            Some(Error::SizeGate { .. }) => EXIT_GATE,
            Some(Error::Parse(_) | Error::UnknownType(_)) => EXIT_USAGE,
            _ => EXIT_INVALID,
        };
        Failure { code, error }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        anyhow::Error::from(e).into()
    }
}

fn datum_for(ty: &TypeArg, limits: Limits) -> Result<RootDatum, Error> {
    RootDatum::parse_with_limits(&ty.cartan_type, limits)
}

fn parse_lambda(d: &RootDatum, s: &str) -> Result<Coweight, Error> {
    let l: Coweight = s.parse()?;
    d.check_dominant(&l)?;
    Ok(l)
}

fn parse_x(d: &RootDatum, s: &str) -> Result<WeylElement, Error> {
    Ok(ReducedWord::parse(d, s)?.target(d))
}

fn load_datum(args: &DatumArgs, limits: Limits) -> Result<LusztigDatum, Error> {
    let d = datum_for(&args.ty, limits)?;
    let word = match &args.word {
        Some(w) => ReducedWord::parse_longest(&d, w)?,
        None => ReducedWord(d.reference_word().to_vec()),
    };
    let base: Base = args.lambda.parse()?;
    let n = mvcrystal::root::parse_int_list(&args.n)?;
    LusztigDatum::new(&d, word, n, base)
}

fn emit(output: &Output, text: String) -> anyhow::Result<()> {
    match &output.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn report_text(output: &Output, report: &MembershipReport) -> anyhow::Result<String> {
    Ok(match output.format.unwrap_or(Format::Json) {
        Format::Json => with_newline(serde_json::to_string_pretty(report)?),
        Format::Text => format!("member={}\n", report.member),
        f => bail!(Error::Parse(format!("format {f:?} is not available for membership reports"))),
    })
}

fn datum_text(output: &Output, p: &LusztigDatum, with_vertices: bool) -> anyhow::Result<String> {
    Ok(match output.format.unwrap_or(Format::Json) {
        Format::Json => with_newline(datum_to_json(p, with_vertices)?),
        Format::Text => format!("word={} n={}\n", p.word(), join(p.n())),
        f => bail!(Error::Parse(format!("format {f:?} is not available for a single datum"))),
    })
}

fn join(v: &[i64]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

fn element_text(output: &Output, d: &RootDatum, w: &WeylElement, label: &str) -> anyhow::Result<String> {
    let key = element_key(d, w);
    Ok(match output.format.unwrap_or(Format::Text) {
        Format::Text => format!("{key}\n"),
        Format::Json => with_newline(serde_json::to_string_pretty(&serde_json::json!({ label: key }))?),
        f => bail!(Error::Parse(format!("format {f:?} is not available here"))),
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    let mut limits = Limits::from_env();
    if let Some(n) = cli.max_nodes {
        limits.max_nodes = n;
    }
    match cli.command {
        Command::Gen {
            ty,
            lambda,
            strata,
            output,
        } => {
            let d = datum_for(&ty, limits)?;
            let l = parse_lambda(&d, &lambda)?;
            let mut g = generate_crystal(&d, &l)?;
            let format = output.format.unwrap_or(Format::Json);
            if strata || format == Format::Csv {
                g.annotate_strata()?;
            }
            let text = match format {
                Format::Json => with_newline(graph_to_json(&g)),
                Format::Dot => graph_to_dot(&g),
                Format::Csv => graph_to_csv(&g)?,
                Format::Text => format!("{} elements, {} edges\n", g.len(), g.edges.len()),
            };
            emit(&output, text)?;
        }
        Command::Demazure { datum, x, output } => {
            let p = load_datum(&datum, limits)?;
            let x = parse_x(p.datum(), &x)?;
            emit(&output, report_text(&output, &in_demazure(&p, &x))?)?;
        }
        Command::Opposite {
            datum,
            x,
            method,
            output,
        } => {
            let p = load_datum(&datum, limits)?;
            let x = parse_x(p.datum(), &x)?;
            let report = match method {
                OppositeMethod::Fast => in_opposite_demazure(&p, &x)?,
                OppositeMethod::Fmax => in_opposite_demazure_fmax(&p, &x)?,
                OppositeMethod::Polytopal => in_opposite_demazure_polytopal(&p, &x)?,
                OppositeMethod::Oracle => {
                    let lambda = p.lambda().cloned().ok_or(Error::RequiresHighestWeight)?;
                    MembershipReport {
                        member: oracle_opposite_set(p.datum(), &x, &lambda)?.contains(&p),
                        method: Method::OracleInductive,
                        witness: None,
                    }
                }
            };
            emit(&output, report_text(&output, &report)?)?;
        }
        Command::Extremal {
            ty,
            lambda,
            x,
            word,
            output,
        } => {
            let d = datum_for(&ty, limits)?;
            let l = parse_lambda(&d, &lambda)?;
            let x = parse_x(&d, &x)?;
            let p = match word {
                Some(w) => extremal_on(&d, &x, &l, &ReducedWord::parse_longest(&d, &w)?)?,
                None => extremal(&d, &x, &l)?,
            };
            emit(&output, datum_text(&output, &p, true)?)?;
        }
        Command::Iota { datum, output } => {
            let p = load_datum(&datum, limits)?;
            emit(&output, element_text(&output, p.datum(), &iota(&p)?, "iota")?)?;
        }
        Command::Kappa { datum, output } => {
            let p = load_datum(&datum, limits)?;
            emit(&output, element_text(&output, p.datum(), &kappa(&p)?, "kappa")?)?;
        }
        Command::Star { datum, output } => {
            let p = load_datum(&datum, limits)?;
            emit(&output, datum_text(&output, &p.star()?, false)?)?;
        }
        Command::Convert { datum, to, output } => {
            let p = load_datum(&datum, limits)?;
            let target = ReducedWord::parse_longest(p.datum(), &to)?;
            let q = p.change_word(&target)?;
            let text = match output.format.unwrap_or(Format::Text) {
                Format::Text => format!("n={}\n", join(q.n())),
                _ => datum_text(&output, &q, false)?,
            };
            emit(&output, text)?;
        }
        Command::Validate { datum, output } => {
            let d = datum_for(&datum.ty, limits)?;
            let word = match &datum.word {
                Some(w) => ReducedWord::parse_longest(&d, w)?,
                None => ReducedWord(d.reference_word().to_vec()),
            };
            let base: Base = datum.lambda.parse()?;
            let n = mvcrystal::root::parse_int_list(&datum.n)?;
            if n.len() != word.len() {
                return Err(Error::LengthMismatch {
                    expected: word.len(),
                    got: n.len(),
                }
                .into());
            }
            let p = LusztigDatum::new_unchecked(&d, word, n, base);
            let report = validate(&p);
            let text = match output.format.unwrap_or(Format::Text) {
                Format::Json => with_newline(serde_json::to_string_pretty(&report).map_err(anyhow::Error::from)?),
                _ if report.issues.is_empty() => "valid\n".to_string(),
                _ => report.issues.iter().map(|i| format!("{i}\n")).collect(),
            };
            emit(&output, text)?;
            if !report.is_valid() {
                return Err(Failure {
                    code: EXIT_INVALID,
                    error: anyhow::anyhow!("datum failed validation"),
                });
            }
        }
        Command::ScanQdem { ty, lambda, output } => {
            let d = datum_for(&ty, limits)?;
            let l = parse_lambda(&d, &lambda)?;
            let report = scan_question(&d, &l)?;
            let text = match output.format.unwrap_or(Format::Text) {
                Format::Json => with_newline(serde_json::to_string_pretty(&report).map_err(anyhow::Error::from)?),
                _ => {
                    let mut s = format!("{}\n", report.summary());
                    for c in &report.counterexamples {
                        s.push_str(&format!("  x={} n={}\n", c.x, join(&c.n)));
                    }
                    s
                }
            };
            emit(&output, text)?;
        }
        Command::Selftest { types, max_coord } => {
            let mut failures = 0;
            for name in types.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let d = RootDatum::parse_with_limits(name, limits)?;
                for line in selftest::run(&d, max_coord)? {
                    println!("{line}");
                    if !line.ok {
                        failures += 1;
                    }
                }
            }
            if failures > 0 {
                return Err(Failure {
                    code: EXIT_INVALID,
                    error: anyhow::anyhow!("{failures} selftest suites reported discrepancies"),
                });
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("mvc: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
