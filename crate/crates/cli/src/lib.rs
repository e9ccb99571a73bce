//! Command-line front end: the `.cat` file format and command dispatch.

pub mod file;
pub mod run;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
