//! Library behind the `hstar` command-line tool.

pub mod commands;
pub mod document;
pub mod report;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("ParseError: {0}")]
    Parse(String),
    #[error("{name}: {message} (points: {points})")]
    Domain {
        name: &'static str,
        message: String,
        points: String,
    },
    #[error("ConfigError: {0}")]
    Config(String),
    #[error("IoError: {0}")]
    Io(#[from] std::io::Error),
}
