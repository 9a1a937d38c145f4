//! Expression language, seeded verification suites and the command-line
//! front end for `zinbiel-core`.

pub mod cli;
pub mod eval;
pub mod parse;
pub mod random;
pub mod suites;
