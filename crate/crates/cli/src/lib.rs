//! Problem files, polynomial parsing and command dispatch for exact ideal
//! interpolation.

pub mod commands;
pub mod error;
pub mod limits;
pub mod parser;
pub mod problem;
pub mod random;

pub use commands::{run_command, Command, LawCheckOptions, ResultDocument};
pub use error::{CliError, Result};
pub use parser::{parse_polynomial, render};
pub use problem::{load_problem, ProblemKind, ProblemSpec};
