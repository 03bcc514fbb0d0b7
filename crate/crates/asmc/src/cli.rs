//! Command-line front end. Every command reads one object (or none), calls
//! the library and prints the result; no arithmetic happens here.
//!
//! Exit status: 0 on success, 1 on usage or I/O problems, 2 on domain
//! errors, 3 when `verify` finds a failing property.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use asmc_core::{
    classical_params, discharge, distribution, dual_table, gen_table, gv_dual, neutralize,
    one_minus_stats, pair_from_table, phi, phi_inv, prime, recharge, render, restore, AsmMatrix,
    EnumFilter, NeutralPair, RenderFormat, SignClass, Stat, DEFAULT_CAP,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::format::{parse_object, Object, ReadError};
use crate::parallel::{count_parallel, enumerate_parallel};
use crate::pipeline::pipeline;
use crate::verify::{verify_with, Hooks, VerifyOptions};

#[derive(Debug, Parser)]
#[command(
    name = "asmc",
    version,
    about = "Alternating sign matrices with one -1: charges, bijections and lattice paths"
)]
struct Cli {
    /// Output format. `svg` and `ascii` draw configurations.
    #[arg(long, short = 'f', value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the output to this file instead of stdout.
    #[arg(long, short = 'o', global = true)]
    output: Option<PathBuf>,
    /// Largest order allowed for enumeration.
    #[arg(long, env = "ASMC_CAP", default_value_t = DEFAULT_CAP, global = true)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Svg,
    Ascii,
}

#[derive(Debug, Args)]
struct Input {
    /// Input file; stdin when absent or `-`.
    input: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ClassArg {
    Positive,
    Neutral,
    Negative,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that the input is an alternating sign matrix.
    Validate(Input),
    /// Print r, s, i and, for one -1, E, B, J.
    Params(Input),
    /// Mirror the matrix left to right.
    Reflect(Input),
    /// Matrix of non-negative class to its tuple (k, P, c, E).
    Discharge(Input),
    /// Tuple (k, P, c, E) back to its matrix.
    Recharge(Input),
    /// Matrix with one -1 to its neutral pair (N, E).
    Neutralize(Input),
    /// Neutral pair back to its matrix.
    Restore(Input),
    /// Exchange the electric and magnetic charges.
    Prime(Input),
    /// Generalized inversion table of a neutral pair.
    Table(Input),
    /// Neutral pair encoded by a table.
    FromTable(Input),
    /// Mixed lattice-path configuration of a neutral pair.
    Paths {
        #[command(flatten)]
        input: Input,
        /// Slant the levels in SVG output.
        #[arg(long)]
        shifted: bool,
    },
    /// Dual object: reflected matrix or pair, dual table, dual configuration.
    Dual {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        shifted: bool,
    },
    /// List all matrices of order n.
    Enumerate {
        #[arg(long, short = 'n', value_parser = clap::value_parser!(u16).range(1..))]
        n: u16,
        /// Exact number of -1 entries.
        #[arg(long, short = 's')]
        s: Option<usize>,
        /// Sign class; implies one -1.
        #[arg(long, value_enum)]
        class: Option<ClassArg>,
        /// Print only the number of matrices.
        #[arg(long)]
        count: bool,
        /// Worker threads; all cores by default.
        #[arg(long, short = 'j')]
        jobs: Option<usize>,
    },
    /// Count matrices of order n by statistics, e.g. `--keys E,B`.
    Dist {
        #[arg(long, short = 'n', value_parser = clap::value_parser!(u16).range(1..))]
        n: u16,
        #[arg(long, value_delimiter = ',', required = true, value_parser = parse_stat)]
        keys: Vec<Stat>,
    },
    /// Check every property exhaustively for 3 <= n <= n-max.
    Verify {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        /// Swap in a deliberately broken charge flip (harness self-test).
        #[arg(long, hide = true)]
        mutate_xi: bool,
    },
    /// Matrix, pair, table and configuration in one document.
    Pipeline(Input),
}

fn parse_stat(s: &str) -> Result<Stat, String> {
    Stat::parse(s).ok_or_else(|| format!("unknown statistic {s:?}; use r, s, i, E, B or J"))
}

enum Failure {
    Usage(String),
    Io(String),
    Domain(String),
    Verify(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) | Failure::Io(_) => 1,
            Failure::Domain(_) => 2,
            Failure::Verify(_) => 3,
        }
    }
}

impl From<asmc_core::Error> for Failure {
    fn from(e: asmc_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<ReadError> for Failure {
    fn from(e: ReadError) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// What a command produced, before formatting.
enum Output {
    Object(Object),
    /// Pre-rendered text together with its JSON form.
    Doc(String, Value),
}

fn read_input(input: &Input, stdin: &mut dyn Read) -> Result<Object, Failure> {
    let text = match &input.input {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p)
            .map_err(|e| Failure::Io(format!("cannot read {}: {e}", p.display())))?,
        _ => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Io(format!("cannot read stdin: {e}")))?;
            s
        }
    };
    Ok(parse_object(&text)?)
}

fn wrong_kind(expected: &str, found: &Object) -> Failure {
    Failure::Domain(format!(
        "MalformedInput: expected {expected}, found a {}",
        found.kind()
    ))
}

/// The matrix an object stands for.
fn as_matrix(obj: Object) -> Result<AsmMatrix, Failure> {
    Ok(match obj {
        Object::Matrix(m) => m,
        Object::Tuple(t) => recharge(&t)?,
        Object::Pair(p) => restore(&p)?,
        Object::Table(t) => restore(&pair_from_table(&t)?)?,
        Object::Config(c) => restore(&phi_inv(&c)?)?,
    })
}

/// The neutral pair an object stands for.
fn as_pair(obj: Object) -> Result<NeutralPair, Failure> {
    Ok(match obj {
        Object::Pair(p) => p,
        Object::Table(t) => pair_from_table(&t)?,
        Object::Config(c) => phi_inv(&c)?,
        other => neutralize(&as_matrix(other)?)?,
    })
}

fn params_doc(a: &AsmMatrix) -> Result<Output, Failure> {
    let p = classical_params(a);
    if p.s != 1 {
        let text = format!("r={} s={} i={}\n", p.r, p.s, p.i);
        return Ok(Output::Doc(text, json!({ "r": p.r, "s": p.s, "i": p.i })));
    }
    let x = one_minus_stats(a)?;
    let text = format!("r={} s=1 i={} E={} B={} J={}\n", x.r, x.i, x.e, x.b, x.j);
    Ok(Output::Doc(
        text,
        json!({ "r": x.r, "s": 1, "i": x.i, "E": x.e, "B": x.b, "J": x.j }),
    ))
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Output, Failure> {
    let read = |input: &Input, stdin: &mut dyn Read| read_input(input, stdin);
    Ok(match &cli.command {
        Command::Validate(i) => {
            let obj = read(i, stdin)?;
            let Object::Matrix(m) = obj else {
                return Err(wrong_kind("a matrix", &obj));
            };
            let s = m.minus_count();
            Output::Doc(
                format!("ok n={} s={s}\n", m.order()),
                json!({ "valid": true, "n": m.order(), "s": s }),
            )
        }
        Command::Params(i) => params_doc(&as_matrix(read(i, stdin)?)?)?,
        Command::Reflect(i) => {
            Output::Object(Object::Matrix(as_matrix(read(i, stdin)?)?.reflect()))
        }
        Command::Discharge(i) => {
            Output::Object(Object::Tuple(discharge(&as_matrix(read(i, stdin)?)?)?))
        }
        Command::Recharge(i) => {
            let obj = read(i, stdin)?;
            let Object::Tuple(t) = obj else {
                return Err(wrong_kind("a discharge tuple", &obj));
            };
            Output::Object(Object::Matrix(recharge(&t)?))
        }
        Command::Neutralize(i) => {
            Output::Object(Object::Pair(neutralize(&as_matrix(read(i, stdin)?)?)?))
        }
        Command::Restore(i) => Output::Object(Object::Matrix(restore(&as_pair(read(i, stdin)?)?)?)),
        Command::Prime(i) => Output::Object(Object::Matrix(prime(&as_matrix(read(i, stdin)?)?)?)),
        Command::Table(i) => Output::Object(Object::Table(gen_table(&as_pair(read(i, stdin)?)?))),
        Command::FromTable(i) => {
            let obj = read(i, stdin)?;
            let Object::Table(t) = obj else {
                return Err(wrong_kind("a table", &obj));
            };
            Output::Object(Object::Pair(pair_from_table(&t)?))
        }
        Command::Paths { input, .. } => {
            Output::Object(Object::Config(phi(&as_pair(read(input, stdin)?)?)))
        }
        Command::Dual { input, .. } => Output::Object(match read(input, stdin)? {
            Object::Matrix(m) => Object::Matrix(m.reflect()),
            Object::Pair(p) => Object::Pair(p.reflect()),
            Object::Table(t) => Object::Table(dual_table(&t)?),
            Object::Config(c) => Object::Config(gv_dual(&c)?),
            Object::Tuple(t) => Object::Matrix(recharge(&t)?.reflect()),
        }),
        Command::Enumerate {
            n,
            s,
            class,
            count,
            jobs,
        } => {
            let class = class.map(|c| match c {
                ClassArg::Positive => SignClass::Positive,
                ClassArg::Neutral => SignClass::Neutral,
                ClassArg::Negative => SignClass::Negative,
            });
            let s = if class.is_some() {
                Some(s.unwrap_or(1))
            } else {
                *s
            };
            if class.is_some() && s != Some(1) {
                return Err(Failure::Usage("--class needs exactly one -1".into()));
            }
            let filter = EnumFilter {
                n: usize::from(*n),
                s,
                class,
            };
            if *count {
                let c = count_parallel(filter, cli.cap, *jobs)?;
                Output::Doc(format!("{c}\n"), json!({ "n": n, "count": c }))
            } else {
                let all = enumerate_parallel(filter, cli.cap, *jobs)?;
                let text = all
                    .iter()
                    .map(AsmMatrix::to_string)
                    .collect::<Vec<_>>()
                    .join("\n");
                let lines = all
                    .iter()
                    .map(|m| Object::Matrix(m.clone()).to_json().to_string() + "\n")
                    .collect::<String>();
                Output::Doc(text, Value::String(lines))
            }
        }
        Command::Dist { n, keys } => {
            let d = distribution(usize::from(*n), keys, cli.cap)?;
            let names: Vec<&str> = keys.iter().map(|k| k.name()).collect();
            let mut text = format!("{} count\n", names.join(" "));
            for (values, count) in &d.counts {
                let vals: Vec<String> = values.iter().map(i64::to_string).collect();
                text += &format!("{} {count}\n", vals.join(" "));
            }
            let rows: Vec<Value> = d
                .counts
                .iter()
                .map(|(v, c)| json!({ "values": v, "count": c }))
                .collect();
            Output::Doc(
                text,
                json!({ "n": n, "keys": names, "total": d.total(), "counts": rows }),
            )
        }
        Command::Verify { n_max, mutate_xi } => {
            let hooks = if *mutate_xi {
                Hooks::mutated()
            } else {
                Hooks::default()
            };
            let report = verify_with(&VerifyOptions {
                hooks,
                ..VerifyOptions::new(*n_max, cli.cap)
            })?;
            let out = Output::Doc(report.to_text(), report.to_json());
            if !report.passed() {
                let rendered = format_output(out, cli)?;
                return Err(Failure::Verify(rendered));
            }
            out
        }
        Command::Pipeline(i) => {
            let b = pipeline(&as_matrix(read(i, stdin)?)?)?;
            Output::Doc(b.to_text(), b.to_json())
        }
    })
}

fn shifted(cli: &Cli) -> bool {
    matches!(
        cli.command,
        Command::Paths { shifted: true, .. } | Command::Dual { shifted: true, .. }
    )
}

fn format_output(out: Output, cli: &Cli) -> Result<String, Failure> {
    let json_text =
        |v: &Value| serde_json::to_string_pretty(v).expect("JSON values serialize") + "\n";
    match (out, cli.format) {
        (Output::Object(Object::Config(c)), Format::Svg) => Ok(render(
            &c,
            RenderFormat::Svg {
                shifted: shifted(cli),
            },
        )),
        (Output::Object(Object::Config(c)), Format::Ascii) => Ok(render(&c, RenderFormat::Ascii)),
        (_, Format::Svg | Format::Ascii) => Err(Failure::Usage(
            "svg and ascii output only apply to configurations".into(),
        )),
        (Output::Object(o), Format::Text) => Ok(o.to_text()),
        (Output::Object(o), Format::Json) => Ok(json_text(&o.to_json())),
        (Output::Doc(text, _), Format::Text) => Ok(text),
        // Streams are already JSON lines.
        (Output::Doc(_, Value::String(lines)), Format::Json) => Ok(lines),
        (Output::Doc(_, v), Format::Json) => Ok(json_text(&v)),
    }
}

fn emit(text: &str, cli: &Cli, stdout: &mut dyn Write) -> Result<(), Failure> {
    match &cli.output {
        Some(p) => fs::write(p, text)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", p.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(format!("cannot write stdout: {e}"))),
    }
}

/// Runs one command line and returns the exit status.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let shown = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(shown.as_bytes());
                1
            } else {
                let _ = stdout.write_all(shown.as_bytes());
                0
            };
        }
    };
    let result = execute(&cli, stdin)
        .and_then(|out| format_output(out, &cli))
        .and_then(|t| emit(&t, &cli, stdout));
    match result {
        Ok(()) => 0,
        Err(Failure::Verify(report)) => {
            let _ = emit(&report, &cli, stdout);
            let _ = writeln!(stderr, "error: verification failed");
            3
        }
        Err(f) => {
            let code = f.code();
            let (Failure::Usage(m) | Failure::Io(m) | Failure::Domain(m) | Failure::Verify(m)) = f;
            let _ = writeln!(stderr, "error: {m}");
            code
        }
    }
}
