use alloc::string::String;
use core::fmt;

use crate::words::{Generator, WordContext};

/// Errors raised by the algebraic core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    GeneratorOutOfRange {
        gen: Generator,
        ctx: WordContext,
    },
    ContextMismatch {
        left: WordContext,
        right: WordContext,
    },
    NotInverse,
    BraidIndexOutOfRange {
        index: u32,
        strands: u32,
    },
    TooFewStrands {
        strands: u32,
        required: u32,
    },
    UnknownRepresentation(String),
    MissingParameter(&'static str),
    UnexpectedParameter(&'static str),
    /// A virtual letter was handed to a representation of the classical braid group.
    VirtualLetter,
    VariableMismatch,
    SizeMismatch {
        left: usize,
        right: usize,
    },
    NotInvertible,
    InvalidDiagram(String),
    InvalidPosition {
        circle: usize,
        position: usize,
    },
    MovePattern(String),
    InvalidGroup(String),
    SearchLimit {
        limit: u64,
    },
    Precondition(String),
    NotRealizable(String),
    Refuted(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::GeneratorOutOfRange { gen, ctx } => write!(
                f,
                "generator {gen} is out of range for context (x_count={}, v_count={})",
                ctx.x_count, ctx.v_count
            ),
            Error::ContextMismatch { left, right } => write!(
                f,
                "context mismatch: ({}, {}) vs ({}, {})",
                left.x_count, left.v_count, right.x_count, right.v_count
            ),
            Error::NotInverse => write!(f, "endomaps are not mutually inverse"),
            Error::BraidIndexOutOfRange { index, strands } => {
                write!(f, "braid letter index {index} out of range for {strands} strands")
            }
            Error::TooFewStrands { strands, required } => {
                write!(f, "{strands} strands given, at least {required} required")
            }
            Error::UnknownRepresentation(name) => write!(f, "unknown representation `{name}`"),
            Error::MissingParameter(p) => write!(f, "missing parameter `{p}`"),
            Error::UnexpectedParameter(p) => write!(f, "unexpected parameter `{p}`"),
            Error::VirtualLetter => {
                write!(f, "virtual letter passed to a classical braid representation")
            }
            Error::VariableMismatch => write!(f, "polynomials over different variable lists"),
            Error::SizeMismatch { left, right } => write!(f, "size mismatch: {left} vs {right}"),
            Error::NotInvertible => write!(f, "element is not invertible"),
            Error::InvalidDiagram(msg) => write!(f, "invalid diagram: {msg}"),
            Error::InvalidPosition { circle, position } => {
                write!(f, "invalid gap {position} on circle {circle}")
            }
            Error::MovePattern(msg) => write!(f, "move does not apply: {msg}"),
            Error::InvalidGroup(msg) => write!(f, "invalid finite group: {msg}"),
            Error::SearchLimit { limit } => {
                write!(f, "homomorphism search exceeded the limit of {limit} nodes")
            }
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::NotRealizable(msg) => write!(f, "presentation is not realizable: {msg}"),
            Error::Refuted(msg) => write!(f, "hypothesis refuted: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
