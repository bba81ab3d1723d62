//! Diagonal rectangulations, the permutation families that encode them, and
//! the flips between them.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function over immutable values; file formats, rendering and the command
//! line live in the `diagrect-cli` companion crate.
//!
//! Conventions used throughout:
//!
//! * permutation values and positions are 1-based, as in word notation;
//! * a rectangulation with `n` rectangles is drawn on an `n x n` grid of unit
//!   cells, row 0 at the top, and rectangle `i` owns the diagonal cell
//!   `(i - 1, i - 1)`;
//! * rectangle extents are half-open lattice intervals, so a rectangle with
//!   `top = 0, bottom = 2` covers cell rows 0 and 1.

#![no_std]

extern crate alloc;

mod error;

pub mod bijection;
pub mod flipgraph;
pub mod flips;
pub mod order;
pub mod permutation;
pub mod rectangulation;

pub use error::Error;
pub use flips::{FlipClass, FlipOutcome};
pub use permutation::{ClassName, PatternClass, Permutation, VincularPattern};
pub use rectangulation::{CellGrid, EdgeId, GridRectangulation, Orientation, Rect};

/// Largest size accepted by the exhaustive fiber search.
pub const MAX_FIBER_N: usize = 10;
