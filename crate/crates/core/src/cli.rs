//! The `quandle` command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification found witnesses (they are
//! in the payload), 2 on usage or input errors.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::alexander::AlexanderParams;
use crate::error::{QuandleError, Result};
use crate::group::{extended_axiom_check, is_connected, operator_group, DEFAULT_GROUP_CAP};
use crate::morphism::{enumerate_automorphisms, generated_subquandle, pair_automorphism};
use crate::quandle::{validate_axioms, FiniteQuandle, TableJson};
use crate::verify::{verify, Theorem};
use crate::word::{evaluate, operationally_equivalent, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutcome {
    fn ok(stdout: String) -> Self {
        Self {
            exit_code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Self {
            exit_code: 2,
            stdout: String::new(),
            stderr: msg.into(),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "quandle",
    version,
    about = "Finite and Alexander quandles over Z_n"
)]
struct Cli {
    /// Render human-readable text instead of JSON.
    #[arg(long, global = true)]
    plain: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Source {
    /// Modulus of an Alexander quandle.
    #[arg(long)]
    n: Option<u64>,
    /// Unit t of an Alexander quandle.
    #[arg(long, allow_hyphen_values = true)]
    t: Option<i64>,
    /// Alexander parameters as a JSON file {"n":..,"t":..}.
    #[arg(long, conflicts_with_all = ["n", "t", "table"])]
    params: Option<PathBuf>,
    /// Cayley table JSON file {"n":..,"table":[[..]]}.
    #[arg(long, conflicts_with_all = ["n", "t"])]
    table: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct ParamArgs {
    #[arg(long)]
    n: u64,
    #[arg(long, allow_hyphen_values = true)]
    t: i64,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum AlexanderOutput {
    Table,
    Params,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum TheoremArg {
    Gens,
    PairAut,
    Lemmas,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the quandle axioms of a table file.
    Validate {
        /// Table JSON file.
        file: PathBuf,
    },
    /// Build an Alexander quandle and print its table or parameters.
    Alexander {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(value_enum, default_value = "table")]
        output: AlexanderOutput,
    },
    /// Evaluate x^w.
    Eval {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        x: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// The orbit {a^(b^k)} in an Alexander quandle.
    Orbit {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
    },
    /// Subquandle generated by a set of elements.
    Closure {
        #[command(flatten)]
        source: Source,
        /// Comma-separated element indices.
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<usize>,
    },
    /// Whether the operator group acts transitively.
    Connected {
        #[command(flatten)]
        source: Source,
    },
    /// Order of the operator group.
    Opgroup {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = DEFAULT_GROUP_CAP)]
        cap: usize,
    },
    /// Whether two words act identically on every element.
    Equiv {
        #[command(flatten)]
        source: Source,
        #[arg(long, allow_hyphen_values = true)]
        w1: String,
        #[arg(long, allow_hyphen_values = true)]
        w2: String,
    },
    /// Enumerate automorphisms.
    Aut {
        #[command(flatten)]
        source: Source,
        #[arg(long, conflicts_with = "list")]
        count: bool,
        #[arg(long)]
        list: bool,
    },
    /// The automorphism sending (a,b) to (c,d).
    PairAut {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_delimiter = ',', num_args = 1)]
        from: Vec<u64>,
        #[arg(long, value_delimiter = ',', num_args = 1)]
        to: Vec<u64>,
    },
    /// The unique c with a^c = b.
    Transport {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
    },
    /// An explicit word in a, b carrying a to c.
    GenWord {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        c: u64,
    },
    /// Check the extended self-distributivity identities on random words.
    ExtAxiom {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Batch verification over primes up to --pmax.
    Verify {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[arg(long, default_value_t = 31)]
        pmax: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Loaded {
    Alexander(AlexanderParams),
    Table(FiniteQuandle),
}

impl Loaded {
    fn quandle(&self) -> FiniteQuandle {
        match self {
            Loaded::Alexander(p) => p.quandle(),
            Loaded::Table(q) => q.clone(),
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> std::result::Result<T, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load(source: &Source) -> std::result::Result<Loaded, String> {
    if let Some(path) = &source.table {
        let j: TableJson = read_json(path)?;
        return FiniteQuandle::try_from(j)
            .map(Loaded::Table)
            .map_err(|e| e.to_string());
    }
    if let Some(path) = &source.params {
        let p: AlexanderParams = read_json(path)?;
        return Ok(Loaded::Alexander(p));
    }
    match (source.n, source.t) {
        (Some(n), Some(t)) => AlexanderParams::new(n, t)
            .map(Loaded::Alexander)
            .map_err(|e| e.to_string()),
        _ => Err("a quandle is required: give --n and --t, --params FILE, or --table FILE".into()),
    }
}

fn params(p: &ParamArgs) -> Result<AlexanderParams> {
    AlexanderParams::new(p.n, p.t)
}

/// Result of a subcommand before rendering.
struct Payload {
    json: Value,
    plain: String,
    failed: bool,
}

impl Payload {
    fn new(json: Value, plain: String) -> Self {
        Payload {
            json,
            plain,
            failed: false,
        }
    }

    fn of<T: Serialize>(value: &T, plain: String) -> Self {
        Payload::new(serde_json::to_value(value).expect("serializable"), plain)
    }
}

fn render_rows(rows: &[Vec<usize>]) -> String {
    let width = rows.len().saturating_sub(1).to_string().len();
    let mut s = String::new();
    for row in rows {
        let line: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        let _ = writeln!(s, "{}", line.join(" "));
    }
    s
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn dispatch(command: Command) -> std::result::Result<Payload, String> {
    let err = |e: QuandleError| e.to_string();
    Ok(match command {
        Command::Validate { file } => {
            let j: TableJson = read_json(&file)?;
            let rows = j.rows().map_err(err)?;
            let report = validate_axioms(&rows).map_err(err)?;
            let mut payload = Payload::of(&report, format!("{report}\n"));
            payload.failed = !report.valid;
            payload
        }
        Command::Alexander { params: p, output } => {
            let params = params(&p).map_err(err)?;
            match output {
                AlexanderOutput::Table => {
                    let q = params.quandle();
                    Payload::of(&q, render_rows(&q.rows()))
                }
                AlexanderOutput::Params => {
                    let plain = format!(
                        "n = {}\nt = {}\nt^-1 = {}\norder of t = {}\n",
                        params.n(),
                        params.t(),
                        params.t_inv(),
                        params.order_of_t()
                    );
                    let json = json!({
                        "n": params.n(),
                        "t": params.t(),
                        "t_inv": params.t_inv(),
                        "order": params.order_of_t(),
                        "one_minus_t_invertible": params.one_minus_t_inverse().is_some(),
                    });
                    Payload::new(json, plain)
                }
            }
        }
        Command::Eval { source, x, word } => {
            let q = load(&source)?.quandle();
            let w: Word = word.parse().map_err(err)?;
            let value = evaluate(&q, x, &w).map_err(err)?;
            Payload::new(
                json!({"x": x, "word": w, "value": value}),
                format!("{value}\n"),
            )
        }
        Command::Orbit { params: p, a, b } => {
            let params = params(&p).map_err(err)?;
            let orbit = params.cycle_orbit(a, b);
            let plain = format!("{}\n", join(&orbit));
            Payload::new(
                json!({"orbit": orbit, "size": orbit.len(), "order": params.order_of_t()}),
                plain,
            )
        }
        Command::Closure { source, gens } => {
            let q = load(&source)?.quandle();
            let set = generated_subquandle(&q, &gens).map_err(err)?;
            let plain = format!("{}\n", join(&set));
            Payload::new(
                json!({"elements": set, "size": set.len(), "full": set.len() == q.order()}),
                plain,
            )
        }
        Command::Connected { source } => {
            let connected = is_connected(&load(&source)?.quandle());
            Payload::new(json!({"connected": connected}), format!("{connected}\n"))
        }
        Command::Opgroup { source, cap } => {
            let group = operator_group(&load(&source)?.quandle(), cap).map_err(err)?;
            Payload::new(
                json!({"order": group.order()}),
                format!("{}\n", group.order()),
            )
        }
        Command::Equiv { source, w1, w2 } => {
            let q = load(&source)?.quandle();
            let w1: Word = w1.parse().map_err(err)?;
            let w2: Word = w2.parse().map_err(err)?;
            let eq = operationally_equivalent(&q, &w1, &w2).map_err(err)?;
            Payload::new(json!({"equivalent": eq}), format!("{eq}\n"))
        }
        Command::Aut {
            source,
            count,
            list,
        } => {
            let auts = enumerate_automorphisms(&load(&source)?.quandle()).map_err(err)?;
            if list && !count {
                let plain: String = auts
                    .iter()
                    .map(|f| format!("{}\n", join(f.images())))
                    .collect();
                Payload::new(json!({"count": auts.len(), "automorphisms": auts}), plain)
            } else {
                Payload::new(json!({"count": auts.len()}), format!("{}\n", auts.len()))
            }
        }
        Command::PairAut {
            params: p,
            from,
            to,
        } => {
            let params = params(&p).map_err(err)?;
            let (&[a, b], &[c, d]) = (from.as_slice(), to.as_slice()) else {
                return Err("--from and --to each take two comma-separated elements".into());
            };
            let f = pair_automorphism(&params, a, b, c, d).map_err(err)?;
            Payload::of(&f, format!("{}\n", join(f.images())))
        }
        Command::Transport { params: p, a, b } => {
            let params = params(&p).map_err(err)?;
            let c = params.solve_transport(a, b).map_err(err)?;
            Payload::new(json!({"c": c}), format!("{c}\n"))
        }
        Command::GenWord { params: p, a, b, c } => {
            let params = params(&p).map_err(err)?;
            let w = params.generating_word(a, b, c).map_err(err)?;
            Payload::new(json!({"word": w, "length": w.len()}), format!("{w}\n"))
        }
        Command::ExtAxiom {
            source,
            trials,
            seed,
        } => {
            let report = extended_axiom_check(&load(&source)?.quandle(), trials, seed);
            let plain = format!("pass: {} ({} trials)\n", report.pass, report.trials);
            let mut payload = Payload::of(&report, plain);
            payload.failed = !report.pass;
            payload
        }
        Command::Verify {
            theorem,
            pmax,
            seed,
        } => {
            let theorem = match theorem {
                TheoremArg::Gens => Theorem::Gens,
                TheoremArg::PairAut => Theorem::PairAut,
                TheoremArg::Lemmas => Theorem::Lemmas,
            };
            let report = verify(theorem, pmax, seed).map_err(err)?;
            let plain = format!(
                "{}: {} ({} cases, {} checks, {} witnesses)\n",
                report.theorem,
                if report.pass { "pass" } else { "FAIL" },
                report.cases,
                report.checks,
                report.witnesses.len()
            );
            let mut payload = Payload::of(&report, plain);
            payload.failed = !report.pass;
            payload
        }
    })
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    CommandOutcome::ok(e.to_string())
                }
                _ => {
                    let msg = e.to_string();
                    let line = msg
                        .lines()
                        .find(|l| !l.trim().is_empty())
                        .unwrap_or("usage error");
                    CommandOutcome::usage(format!("{}\n", line.trim()))
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(payload) => {
            let stdout = if cli.plain {
                payload.plain
            } else {
                format!("{}\n", payload.json)
            };
            CommandOutcome {
                exit_code: if payload.failed { 1 } else { 0 },
                stdout,
                stderr: String::new(),
            }
        }
        Err(msg) => CommandOutcome::usage(format!("error: {msg}\n")),
    }
}
