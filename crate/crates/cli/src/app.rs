//! Argument parsing and dispatch.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use kfree_core::graph::{to_graph6, Graph};

use crate::commands::{self, Params};
use crate::report::VerificationReport;
use crate::verify;
use crate::CliError;

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

#[derive(Debug, Parser)]
#[command(name = "kfree", version, about = "Exact tools for K_{r+1}-free extremal graph problems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Read graph6 input from this file instead of stdin.
    #[arg(long = "in", global = true)]
    pub input: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Search-node budget for chromatic number computations.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Checkpoint file for long enumerations.
    #[arg(long, global = true)]
    pub resume: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Json,
}

#[derive(Debug, Args, Default)]
pub struct ParamArgs {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub f: Option<usize>,
    /// Build the primed member of the extremal family.
    #[arg(long)]
    pub prime: bool,
    /// Leave the empty set out of the independent sets of the lambda25 gadget.
    #[arg(long)]
    pub exclude_empty: bool,
}

#[derive(Debug, Args)]
pub struct RangeArgs {
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub n: usize,
    /// Last order of the range; defaults to `--n`.
    #[arg(long)]
    pub n_max: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a named graph family.
    Construct {
        family: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Report invariants of each input graph.
    Analyze,
    /// List one graph per isomorphism class.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "none")]
        filter: String,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Greedily saturate each input graph.
    Saturate {
        #[arg(long)]
        q: usize,
    },
    /// Optimal blow-up of each input graph to order `n`.
    BlowupOpt {
        #[arg(long)]
        n: usize,
    },
    /// Complete tripartite subgraph of each 4-saturated input graph.
    ExtractTripartite {
        #[arg(long = "C-param", default_value_t = kfree_core::tripartite::DEFAULT_C_PARAM)]
        c_param: usize,
    },
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Maximum size of non-r-colorable K_{r+1}-free graphs.
    Thm1(RangeArgs),
    /// Classification of the extremal graphs.
    Thm2(RangeArgs),
    /// Λ searches and gadgets.
    Lambda {
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        max_order: Option<usize>,
    },
    /// Exhaustive property checks.
    Lemmas,
}

/// Text to emit and whether every assertion held.
pub struct Output {
    pub text: String,
    pub ok: bool,
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("outputs serialize");
    s.push('\n');
    s
}

fn graph6_line(g: &Graph) -> Result<String, CliError> {
    to_graph6(g).map(|s| s + "\n").map_err(|e| CliError::Format(e.to_string()))
}

fn input_graphs(cli: &Cli) -> Result<Vec<Graph>, CliError> {
    let text = match &cli.input {
        Some(p) => fs::read_to_string(p)?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    commands::read_graphs(&text)
}

fn report_output(rep: VerificationReport, started: Instant) -> Output {
    eprintln!("{}: {} ms", rep.theorem, started.elapsed().as_millis());
    for c in rep.cases.iter().filter(|c| !c.matches) {
        eprintln!("mismatch in {}: computed {:?}, expected {:?}", c.label, c.computed, c.predicted);
        for n in &c.notes {
            eprintln!("  {n}");
        }
    }
    Output {
        ok: rep.all_match,
        text: rep.to_json() + "\n",
    }
}

/// Runs a parsed command. The enumerate command writes straight to
/// `--out` when that is set.
pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let ok = |text: String| Ok(Output { text, ok: true });
    let started = Instant::now();
    match &cli.command {
        Command::Construct { family, params } => {
            let p = Params {
                n: params.n,
                r: params.r,
                l: params.l,
                m: params.m,
                f: params.f,
                prime: params.prime,
                exclude_empty: params.exclude_empty,
            };
            let c = commands::construct(family, p)?;
            match cli.format.unwrap_or(Format::Graph6) {
                Format::Graph6 => ok(graph6_line(&c.graph)?),
                Format::Json => ok(json(&commands::construction_view(&c)?)),
            }
        }
        Command::Analyze => {
            let out: Vec<_> = input_graphs(cli)?
                .iter()
                .map(|g| commands::analyze(g, cli.budget))
                .collect::<Result<_, _>>()?;
            ok(json(&out))
        }
        Command::Enumerate { n, filter, r } => {
            let f = commands::parse_filter(filter, *r)?;
            let mut buf = Vec::new();
            let count = commands::enumerate_to(*n, f, cli.out.as_deref(), cli.resume.as_deref(), &mut buf)?;
            eprintln!("{count} graphs");
            ok(String::from_utf8(buf).expect("graph6 is ASCII"))
        }
        Command::Saturate { q } => {
            let graphs = input_graphs(cli)?;
            match cli.format.unwrap_or(Format::Graph6) {
                Format::Graph6 => {
                    let mut s = String::new();
                    for g in &graphs {
                        s += &graph6_line(&commands::saturate_graph(g, *q)?)?;
                    }
                    ok(s)
                }
                Format::Json => {
                    let reps: Vec<_> = graphs
                        .iter()
                        .map(|g| commands::saturate_graph(g, *q).map(|h| kfree_core::saturation::is_saturated(&h, *q)))
                        .collect::<Result<Vec<_>, _>>()?
                        .into_iter()
                        .map(|r| r.expect("q validated by saturate"))
                        .collect();
                    ok(json(&reps))
                }
            }
        }
        Command::BlowupOpt { n } => {
            let out: Vec<_> = input_graphs(cli)?
                .iter()
                .map(|g| commands::blowup(g, *n))
                .collect::<Result<_, _>>()?;
            ok(json(&out))
        }
        Command::ExtractTripartite { c_param } => {
            let out: Vec<_> = input_graphs(cli)?
                .iter()
                .map(|g| commands::tripartite(g, *c_param))
                .collect::<Result<_, _>>()?;
            ok(json(&out))
        }
        Command::Verify(v) => {
            let resume = cli.resume.as_deref();
            let rep = match v {
                VerifyCommand::Thm1(a) => verify::verify_thm1(a.r, a.n, a.n_max.unwrap_or(a.n), resume)?,
                VerifyCommand::Thm2(a) => verify::verify_thm2(a.r, a.n, a.n_max.unwrap_or(a.n), resume)?,
                VerifyCommand::Lambda { r, k, max_order } => {
                    let search = match (r, k, max_order) {
                        (Some(r), Some(k), Some(m)) => Some((*r, *k, *m)),
                        (None, None, None) => None,
                        _ => return Err(CliError::Usage("give all of --r, --k and --max-order, or none".into())),
                    };
                    verify::verify_lambda(search, cli.budget)?
                }
                VerifyCommand::Lemmas => verify::verify_lemmas()?,
            };
            Ok(report_output(rep, started))
        }
    }
}

/// Entry point; returns the process exit code.
pub fn main_with(args: impl IntoIterator<Item = OsString>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let writes_itself = matches!(cli.command, Command::Enumerate { .. });
    match run(&cli) {
        Ok(out) => {
            let written = match (&cli.out, writes_itself) {
                (Some(_), true) => Ok(()),
                (Some(p), false) => fs::write(p, &out.text),
                (None, _) => io::stdout().write_all(out.text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return 2;
            }
            if out.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
