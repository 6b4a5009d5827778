//! Session files, the command runner and report emission.

pub mod ast;
pub mod report;
pub mod run;
pub mod syntax;

pub use ast::{parse_session, CheckKind, Command, Session, Statement, StmtKind};
pub use report::{Document, ErrorReport, Report, SCHEMA, VERSION};
pub use run::{run_command, run_session, run_text, Environment, OrderChoice, RunOptions};
