//! The `lzeta` command line.
//!
//! Every command reads JSON (inline, from a file, or `-` for stdin) and
//! writes one line of JSON. Exit status is 0 on success, 1 when a check
//! command finds a violation and 2 on any input error; input errors are
//! reported as `{"error": code, "detail": ...}`.

use std::io::Read;
use std::path::Path;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::Error;
use crate::json::{self, rational_to_string};
use crate::series::{MonicSeries, DEFAULT_ORDER};
use crate::spectral::{self, SpectralClass};
use crate::transforms::{self, SpIndexSequence};
use crate::verify;
use crate::zeta::{self, IndexSequence};

/// Largest working order accepted from the command line.
pub const MAX_ORDER: usize = 4096;

#[derive(Parser, Debug)]
#[command(name = "lzeta", version, about = "Exact Lefschetz zeta function toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Io {
    /// Inline JSON, a file path, or `-` for stdin.
    #[arg(long, visible_alias = "input-series")]
    input: Option<String>,
    /// Write the JSON result here instead of stdout.
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args, Debug)]
struct OrderArg {
    /// Working truncation order.
    #[arg(long)]
    order: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Index sequence -> zeta series.
    ZetaFromIndices {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Monic series -> index sequence.
    IndicesFromZeta {
        #[command(flatten)]
        io: Io,
    },
    /// Index sequence -> symmetric-product indices s_1..s_N.
    SpFromIndices {
        #[command(flatten)]
        io: Io,
        /// Use the composition-sum oracle instead of the recurrence.
        #[arg(long)]
        oracle: bool,
    },
    /// Symmetric-product indices s_1..s_N -> index sequence.
    IndicesFromSp {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        oracle: bool,
    },
    /// Dold congruence verdict for an index sequence.
    DoldCheck {
        #[command(flatten)]
        io: Io,
    },
    /// Dold coefficients a_1..a_N.
    DoldCoefficients {
        #[command(flatten)]
        io: Io,
    },
    /// Monic series -> exponents of prod (1 - t^l)^{e_l}.
    Factorize {
        #[command(flatten)]
        io: Io,
    },
    /// Exponents -> monic series.
    Expand {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Zeta function of a hyperbolic linear map from its spectral class.
    LinearZeta {
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        sigma_minus: u8,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        sigma_plus: u8,
        #[command(flatten)]
        order: OrderArg,
        #[arg(long)]
        output: Option<String>,
    },
    /// Zeta function of a rational matrix, computed both ways.
    MatrixZeta {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Zeta function of a periodic-orbit table.
    OrbitZeta {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Zeta function of the k-th iterate on the period-m orbits with counts (a, b).
    Iterate {
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        order: OrderArg,
        #[arg(long)]
        output: Option<String>,
    },
    /// (1 - t)^{-chi}.
    Macdonald {
        #[arg(long, allow_hyphen_values = true)]
        chi: i64,
        #[command(flatten)]
        order: OrderArg,
        #[arg(long)]
        output: Option<String>,
    },
    /// (1 - t^q)^r / (1 - t).
    Lecalvez {
        #[arg(long)]
        q: usize,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[command(flatten)]
        order: OrderArg,
        #[arg(long)]
        output: Option<String>,
    },
    /// Largest n <= n_max such that no A^k, k <= n, has eigenvalue 1.
    Admissibility {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        n_max: usize,
    },
    /// Compares the zeta functions of AB and BA; input {"a": matrix, "b": matrix}.
    Commutativity {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Seeded identity suites over every module.
    Verify {
        #[command(flatten)]
        order: OrderArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long)]
        output: Option<String>,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
struct Failure {
    code: &'static str,
    detail: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: e.code(),
            detail: e.to_string(),
        }
    }
}

fn fail(code: &'static str, detail: impl Into<String>) -> Failure {
    Failure {
        code,
        detail: detail.into(),
    }
}

struct Success {
    value: Value,
    check_failed: bool,
    note: Option<String>,
    output: Option<String>,
}

impl Success {
    fn ok(value: Value, output: &Option<String>) -> Self {
        Success {
            value,
            check_failed: false,
            note: None,
            output: output.clone(),
        }
    }
}

/// Runs one command; `args` excludes the program name.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv = std::iter::once("lzeta".to_string()).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => return clap_outcome(e),
    };
    match dispatch(cli.command) {
        Ok(s) => finish(s),
        Err(f) => error_outcome(f),
    }
}

fn clap_outcome(e: clap::Error) -> Outcome {
    use clap::error::ErrorKind;
    match e.kind() {
        ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
            status: 0,
            stdout: format!("{}\n", json!({ "usage": e.to_string() })),
            stderr: String::new(),
        },
        kind => {
            let code = match kind {
                ErrorKind::InvalidSubcommand => "unknown_command",
                ErrorKind::MissingSubcommand | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    "missing_command"
                }
                _ => "usage",
            };
            let detail = e.to_string();
            let first = detail.lines().next().unwrap_or("").trim_start_matches("error: ").to_string();
            Outcome {
                status: 2,
                stdout: format!("{}\n", json!({ "error": code, "detail": first })),
                stderr: detail,
            }
        }
    }
}

fn error_outcome(f: Failure) -> Outcome {
    Outcome {
        status: 2,
        stdout: format!("{}\n", json!({ "error": f.code, "detail": f.detail })),
        stderr: format!("lzeta: {}\n", f.detail),
    }
}

fn finish(s: Success) -> Outcome {
    let line = format!("{}\n", s.value);
    let status = if s.check_failed { 1 } else { 0 };
    let mut stderr = s.note.map(|n| format!("{n}\n")).unwrap_or_default();
    let stdout = match &s.output {
        None => line,
        Some(path) => match std::fs::write(path, &line) {
            Ok(()) => String::new(),
            Err(e) => {
                return error_outcome(fail("io", format!("cannot write {path}: {e}")));
            }
        },
    };
    if s.output.is_some() {
        stderr.push_str(&format!("lzeta: wrote {}\n", s.output.as_deref().unwrap_or_default()));
    }
    Outcome { status, stdout, stderr }
}

fn order_or(o: &OrderArg, default: usize) -> Result<usize, Failure> {
    let n = o.order.unwrap_or(default);
    if n > MAX_ORDER {
        return Err(fail("order_overflow", format!("order {n} exceeds the cap {MAX_ORDER}")));
    }
    Ok(n)
}

fn read_input(io: &Io) -> Result<Value, Failure> {
    let src = io
        .input
        .as_deref()
        .ok_or_else(|| fail("malformed_input", "missing --input"))?;
    let text = if src == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| fail("io", format!("cannot read stdin: {e}")))?;
        buf
    } else if Path::new(src).is_file() {
        std::fs::read_to_string(src).map_err(|e| fail("io", format!("cannot read {src}: {e}")))?
    } else {
        src.to_string()
    };
    serde_json::from_str(&text).map_err(|e| fail("malformed_json", format!("invalid JSON: {e}")))
}

fn input_sequence(io: &Io) -> Result<IndexSequence, Failure> {
    Ok(IndexSequence::new(json::sequence_from_json(&read_input(io)?)?))
}

fn input_monic(io: &Io) -> Result<MonicSeries, Failure> {
    Ok(MonicSeries::new(json::series_from_json(&read_input(io)?)?)?)
}

fn check_oracle_len(len: usize) -> Result<(), Failure> {
    if len > transforms::COMPOSITION_CAP {
        return Err(Error::SizeCap {
            what: "composition oracle length",
            value: len,
            cap: transforms::COMPOSITION_CAP,
        }
        .into());
    }
    Ok(())
}

fn series_json(z: &MonicSeries) -> Value {
    json::series_to_json(z.inner())
}

fn class_json(c: SpectralClass) -> Value {
    let (m, p) = c.bits();
    json!({ "sigma_minus": m.to_string(), "sigma_plus": p.to_string() })
}

fn dispatch(cmd: Command) -> Result<Success, Failure> {
    Ok(match cmd {
        Command::ZetaFromIndices { io, order } => {
            let i = input_sequence(&io)?;
            let n = order_or(&order, i.len())?;
            if n > i.len() {
                return Err(Error::Precision {
                    target: n,
                    available: i.len(),
                }
                .into());
            }
            Success::ok(series_json(&zeta::zeta_from_indices(&i.truncate(n))), &io.output)
        }
        Command::IndicesFromZeta { io } => {
            let z = input_monic(&io)?;
            Success::ok(json::sequence_to_json(zeta::indices_from_zeta(&z).values()), &io.output)
        }
        Command::SpFromIndices { io, oracle } => {
            let i = input_sequence(&io)?;
            let s: Vec<_> = if oracle {
                check_oracle_len(i.len())?;
                (1..=i.len())
                    .map(|n| transforms::sp_from_indices_compositions(&i, n))
                    .collect::<Result<_, _>>()?
            } else {
                transforms::sp_from_indices_recurrence(&i).values().to_vec()
            };
            Success::ok(json::sequence_to_json(&s), &io.output)
        }
        Command::IndicesFromSp { io, oracle } => {
            let s = SpIndexSequence::new(json::sequence_from_json(&read_input(&io)?)?);
            let i: Vec<_> = if oracle {
                check_oracle_len(s.len())?;
                (1..=s.len())
                    .map(|n| transforms::indices_from_sp_compositions(&s, n))
                    .collect::<Result<_, _>>()?
            } else {
                transforms::indices_from_sp_recurrence(&s).values().to_vec()
            };
            Success::ok(json::sequence_to_json(&i), &io.output)
        }
        Command::DoldCheck { io } => {
            let i = input_sequence(&io)?;
            let verdict = transforms::dold_check(&i);
            let note = verdict.first_violation.as_ref().map(|(k, v)| {
                format!("dold-check: FAIL at k={k}, a_{k} = {}", rational_to_string(v))
            });
            Success {
                value: json::dold_verdict_to_json(&verdict),
                check_failed: !verdict.pass,
                note,
                output: io.output,
            }
        }
        Command::DoldCoefficients { io } => {
            let i = input_sequence(&io)?;
            Success::ok(json::dold_coefficients_to_json(&transforms::dold_coefficients(&i)), &io.output)
        }
        Command::Factorize { io } => {
            let z = input_monic(&io)?;
            Success::ok(json::factors_to_json(&zeta::factorize(&z)), &io.output)
        }
        Command::Expand { io, order } => {
            let f = json::factors_from_json(&read_input(&io)?)?;
            let n = order_or(&order, f.max_index())?;
            Success::ok(series_json(&zeta::expand_factors(&f, n)), &io.output)
        }
        Command::LinearZeta {
            sigma_minus,
            sigma_plus,
            order,
            output,
        } => {
            let class = SpectralClass::from_bits(sigma_minus, sigma_plus)?;
            let n = order_or(&order, DEFAULT_ORDER)?;
            Success::ok(series_json(&spectral::linear_zeta(class, n)), &output)
        }
        Command::MatrixZeta { io, order } => {
            let a = json::matrix_from_json(&read_input(&io)?)?;
            let n = order_or(&order, DEFAULT_ORDER)?;
            let mz = spectral::matrix_zeta(&a, n)?;
            let value = json!({
                "class": class_json(mz.class),
                "indices": json::sequence_to_json(mz.indices.values()),
                "zeta": series_json(&mz.zeta),
            });
            if mz.zeta != mz.zeta_from_indices {
                return Err(fail("internal", "spectral and index zeta functions disagree"));
            }
            Success::ok(value, &io.output)
        }
        Command::OrbitZeta { io, order } => {
            let t = json::orbit_table_from_json(&read_input(&io)?)?;
            let n = order_or(&order, DEFAULT_ORDER)?;
            Success::ok(series_json(&spectral::orbit_zeta(&t, n)?), &io.output)
        }
        Command::Iterate {
            m,
            a,
            b,
            k,
            order,
            output,
        } => {
            if m == 0 || k == 0 {
                return Err(Error::Domain("--m and --k must be positive".into()).into());
            }
            let n = order_or(&order, DEFAULT_ORDER)?;
            Success::ok(series_json(&spectral::orbit_zeta_iterate(m, a, b, k, n)), &output)
        }
        Command::Macdonald { chi, order, output } => {
            let n = order_or(&order, DEFAULT_ORDER)?;
            Success::ok(series_json(&spectral::macdonald_series(chi, n)), &output)
        }
        Command::Lecalvez { q, r, order, output } => {
            if q == 0 {
                return Err(Error::Domain("--q must be positive".into()).into());
            }
            let n = order_or(&order, DEFAULT_ORDER)?;
            Success::ok(series_json(&spectral::lecalvez_zeta(q, r, n)), &output)
        }
        Command::Admissibility { io, n_max } => {
            let a = json::matrix_from_json(&read_input(&io)?)?;
            let n_max = order_or(&OrderArg { order: Some(n_max) }, 0)?;
            let adm = spectral::admissibility_order(&a, n_max)?;
            Success::ok(
                json!({ "admissibility_order": adm.to_string(), "n_max": n_max.to_string() }),
                &io.output,
            )
        }
        Command::Commutativity { io, order } => {
            let v = read_input(&io)?;
            let a = json::matrix_from_json(v.get("a").ok_or_else(|| fail("malformed_input", "missing field \"a\""))?)?;
            let b = json::matrix_from_json(v.get("b").ok_or_else(|| fail("malformed_input", "missing field \"b\""))?)?;
            let n = order_or(&order, DEFAULT_ORDER)?;
            let w = spectral::commutativity_witness(&a, &b, n)?;
            Success {
                value: json!({
                    "pass": w.pass,
                    "indices_ab": json::sequence_to_json(w.indices_ab.values()),
                    "indices_ba": json::sequence_to_json(w.indices_ba.values()),
                    "zeta_ab": series_json(&w.zeta_ab),
                    "zeta_ba": series_json(&w.zeta_ba),
                }),
                check_failed: !w.pass,
                note: (!w.pass).then(|| "commutativity: FAIL".to_string()),
                output: io.output,
            }
        }
        Command::Verify {
            order,
            seed,
            count,
            output,
        } => {
            let n = order_or(&order, DEFAULT_ORDER)?;
            let report = verify::verify(n, seed, count);
            let failed: Vec<_> = report
                .properties
                .iter()
                .filter(|p| !p.pass)
                .map(|p| format!("{}::{}", p.module, p.name))
                .collect();
            Success {
                value: report.to_json(),
                check_failed: !failed.is_empty(),
                note: (!failed.is_empty()).then(|| format!("verify: FAIL {}", failed.join(", "))),
                output,
            }
        }
    })
}
