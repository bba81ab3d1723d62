use core::fmt;

use alloc::string::String;

use crate::flips::FlipClass;
use crate::rectangulation::{EdgeId, Obstruction};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A word that is not a permutation of `1..=n`.
    InvalidPermutation(String),
    /// An index argument outside `1..n`.
    OutOfRange { index: usize, n: usize },
    /// Two permutations of different sizes were compared.
    SizeMismatch { left: usize, right: usize },
    /// A label matrix whose equal labels do not form rectangles of cells.
    InvalidGrid(String),
    /// A grid that is a valid rectangulation but not in canonical diagonal form.
    NotCanonical(String),
    /// The rectangulation contains one of the forbidden diagonal configurations.
    NotDiagonal(Obstruction),
    /// The edge does not separate two rectangles of the rectangulation.
    NoSuchEdge(EdgeId),
    /// The edge cannot be flipped.
    Unflippable { edge: EdgeId, class: FlipClass },
    /// A permutation that was required to be Baxter is not.
    NotBaxter(String),
    /// The requested size exceeds what the exhaustive routines accept.
    TooLarge { n: usize, max: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPermutation(s) => write!(f, "not a permutation: {s}"),
            Error::OutOfRange { index, n } => {
                write!(f, "index {index} out of range for size {n}")
            }
            Error::SizeMismatch { left, right } => {
                write!(f, "size mismatch: {left} vs {right}")
            }
            Error::InvalidGrid(s) => write!(f, "invalid rectangulation grid: {s}"),
            Error::NotCanonical(s) => write!(f, "not a canonical diagonal drawing: {s}"),
            Error::NotDiagonal(o) => write!(f, "not a diagonal rectangulation: {o}"),
            Error::NoSuchEdge(e) => write!(f, "no interior edge {e}"),
            Error::Unflippable { edge, class } => {
                write!(f, "edge {edge} is unflippable ({class})")
            }
            Error::NotBaxter(s) => write!(f, "not a Baxter permutation: {s}"),
            Error::TooLarge { n, max } => write!(f, "size {n} exceeds the limit of {max}"),
        }
    }
}

impl core::error::Error for Error {}
