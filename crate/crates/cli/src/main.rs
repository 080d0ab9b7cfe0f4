use std::process::ExitCode;

use autoform::{run, CliError, Command, Options};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

/// Exact analysis of u' = g(u) as the 1-form dx/g on the projective line.
#[derive(Parser, Debug)]
#[command(name = "autoform", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// A 1-form, e.g. "(1/(x^3-x^2)) dx" (repeatable).
    #[arg(long = "form", global = true, conflicts_with = "odes")]
    forms: Vec<String>,
    /// An equation, e.g. "u' = u^3 - u^2" (repeatable).
    #[arg(long = "ode", global = true)]
    odes: Vec<String>,
    /// Defining polynomial of the session field, e.g. "a^2-2".
    #[arg(long, global = true)]
    alg: Option<String>,
    /// Named constant, e.g. "sqrt2=a" (repeatable).
    #[arg(long = "sym", global = true)]
    syms: Vec<String>,
    /// A point: a constant of the session field or "inf".
    #[arg(long, global = true, allow_hyphen_values = true)]
    at: Option<String>,
    /// Truncation order of series.
    #[arg(long, global = true, default_value_t = 8)]
    terms: u64,
    /// Map for pullback, or extra candidates for search (repeatable).
    #[arg(long, global = true)]
    via: Vec<String>,
    /// Largest candidate degree in pullback search.
    #[arg(long, global = true, default_value_t = 6)]
    max_degree: usize,
    /// Emit JSON.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Cmd {
    /// Exact, exponential or general type, with newness.
    Classify,
    /// The decomposition w = sum a_i du_i/u_i + dv.
    Decompose,
    /// Divisor of the form.
    Divisor,
    /// Residues at all poles.
    Residues,
    /// Whether the form is a pullback along --via.
    Pullback,
    /// Search for pullback structure up to --max-degree.
    Search,
    /// Moebius maps phi with phi^* w2 = w1 for two forms.
    Isom,
    /// Formal solution with initial value --at.
    Solve,
    /// Local order and normal form at --at.
    Local,
    /// Combined report for one or more forms.
    Report,
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::Classify => Command::Classify,
            Cmd::Decompose => Command::Decompose,
            Cmd::Divisor => Command::Divisor,
            Cmd::Residues => Command::Residues,
            Cmd::Pullback => Command::Pullback,
            Cmd::Search => Command::Search,
            Cmd::Isom => Command::Isom,
            Cmd::Solve => Command::Solve,
            Cmd::Local => Command::Local,
            Cmd::Report => Command::Report,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = Options {
        forms: cli.forms,
        odes: cli.odes,
        alg: cli.alg,
        syms: cli.syms,
        at: cli.at,
        terms: cli.terms,
        via: cli.via,
        max_degree: cli.max_degree,
    };
    let inputs: Vec<&String> = opts.forms.iter().chain(&opts.odes).collect();
    match run(cli.command.into(), &opts) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&Value::Object(report.json)).expect("serializable"));
            } else {
                print!("{}", report.text);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            if cli.json {
                let doc = json!({ "input": inputs, "errors": [e.to_json()] });
                println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            } else {
                eprintln!("error[{}]: {e}", e.code());
            }
            exit(&e)
        }
    }
}

fn exit(e: &CliError) -> ExitCode {
    ExitCode::from(e.exit_code() as u8)
}
