//! Text grammar, pretty-printer, JSON output and the command-line front end.

mod ast;
pub mod cli;
pub mod format;
pub mod json;
mod lexer;
mod normalize;

pub use format::{format_general_term, format_hyperreal, format_series};
pub use json::{TermJson, ValueReport};
pub use normalize::{parse_hyperreal, parse_rational, parse_series};
