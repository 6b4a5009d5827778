use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use frobforge::workbench::{run_text, OrderChoice, RunOptions};

#[derive(Parser)]
#[command(
    name = "frobforge",
    version,
    about = "Relative Frobenius workbench over F_p"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Lex,
    Grevlex,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a session file and print the text report.
    Run {
        file: PathBuf,
        /// Also write the JSON report here (`-` for stdout instead of text).
        #[arg(long, value_name = "OUT")]
        json: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "grevlex")]
        order: Order,
        #[arg(long, value_name = "N", default_value_t = frobforge::tower::DEFAULT_MAX_STAGE)]
        max_stage: usize,
        #[arg(long, value_name = "L", default_value_t = frobforge::pipeline::DEFAULT_TOR_BOUND)]
        tor_bound: usize,
        #[arg(long, value_name = "N", default_value_t = frobforge::groebner::DEFAULT_STEP_BUDGET)]
        step_budget: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let Cmd::Run {
        file,
        json,
        order,
        max_stage,
        tor_bound,
        step_budget,
    } = cli.command;
    let text = match std::fs::read_to_string(&file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", file.display());
            return ExitCode::from(1);
        }
    };
    let order = match order {
        Order::Lex => OrderChoice::Lex,
        Order::Grevlex => OrderChoice::Grevlex,
    };
    let doc = run_text(
        &text,
        &RunOptions {
            order,
            max_stage,
            tor_bound,
            step_budget,
        },
    );
    match json.as_deref() {
        Some(p) if p.as_os_str() == "-" => print!("{}", doc.to_json()),
        Some(p) => {
            if let Err(e) = std::fs::write(p, doc.to_json()) {
                eprintln!("error: cannot write {}: {e}", p.display());
                return ExitCode::from(1);
            }
            print!("{}", doc.to_text());
        }
        None => print!("{}", doc.to_text()),
    }
    match &doc.error {
        Some(e) => {
            eprintln!(
                "error at {}:{}: {} ({}): {}",
                e.line, e.column, e.module, e.kind, e.message
            );
            ExitCode::from(2)
        }
        None => ExitCode::SUCCESS,
    }
}
