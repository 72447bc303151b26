//! Crate-wide error type.

use std::fmt;
use std::io;

#[derive(Debug)]
pub enum Error {
    /// A physical parameter failed validation (dimension, speed, period).
    InvalidParameter(String),
    /// A track file or its geometry is not usable.
    InvalidTrack(String),
    /// A run configuration is incomplete or inconsistent.
    InvalidConfig(String),
    /// Wheel speeds with opposite signs were passed to a same-direction
    /// motion routine (or vice versa).
    WrongMotionScenario { left: f64, right: f64 },
    /// A state or action index outside the table dimensions.
    IndexOutOfRange { what: &'static str, index: usize, limit: usize },
    /// A Q-value became NaN during training; signals a hyperparameter
    /// pathology and aborts the run.
    QValueNaN { episode: u32, step: u64 },
    /// A checkpoint or CSV file could not be parsed.
    Format(String),
    Io(io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::InvalidTrack(msg) => write!(f, "invalid track: {msg}"),
            Error::InvalidConfig(msg) => write!(f, "invalid config: {msg}"),
            Error::WrongMotionScenario { left, right } => write!(
                f,
                "wheel speeds ({left}, {right}) belong to the other motion scenario"
            ),
            Error::IndexOutOfRange { what, index, limit } => {
                write!(f, "{what} index {index} out of range (limit {limit})")
            }
            Error::QValueNaN { episode, step } => write!(
                f,
                "Q-value became NaN at episode {episode}, step {step}; \
                 check learning rate and reward scaling"
            ),
            Error::Format(msg) => write!(f, "format error: {msg}"),
            Error::Io(err) => write!(f, "io error: {err}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(err) => Some(err),
            _ => None,
        }
    }
}

impl From<io::Error> for Error {
    fn from(err: io::Error) -> Self {
        Error::Io(err)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
