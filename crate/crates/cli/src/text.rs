//! Plain-text label matrices: a line holding `n`, then `n` rows of `n`
//! whitespace-separated labels.

use std::fmt::Write as _;

use diagrect::rectangulation::canonicalize;
use diagrect::{CellGrid, Error, GridRectangulation};

pub fn write_rect(g: &GridRectangulation) -> String {
    write_grid(g.grid())
}

pub fn write_grid(grid: &CellGrid) -> String {
    let mut out = String::new();
    writeln!(out, "{}", grid.rows()).unwrap();
    for r in 0..grid.rows() {
        let row: Vec<String> = (0..grid.cols()).map(|c| grid.label(r, c).to_string()).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

/// Parses a square label matrix of any shape, without checking diagonality.
pub fn parse_grid(s: &str) -> Result<CellGrid, Error> {
    let mut tokens = s.split_whitespace();
    let n: usize = tokens
        .next()
        .ok_or_else(|| Error::InvalidGrid("empty input".into()))?
        .parse()
        .map_err(|_| Error::InvalidGrid("first token must be the size n".into()))?;
    if n == 0 {
        return Err(Error::InvalidGrid("size must be positive".into()));
    }
    let labels = tokens
        .map(|t| {
            t.parse::<u8>()
                .map_err(|_| Error::InvalidGrid(format!("bad label {t:?}")))
        })
        .collect::<Result<Vec<u8>, Error>>()?;
    CellGrid::new(n, n, labels)
}

/// Parses a matrix and requires it to be the canonical drawing of a
/// diagonal rectangulation.
pub fn parse_rect(s: &str) -> Result<GridRectangulation, Error> {
    let grid = parse_grid(s)?;
    let canonical = canonicalize(&grid)?;
    if canonical.grid() != &grid {
        return Err(Error::NotCanonical(
            "the drawing is diagonal but differs from its canonical form".into(),
        ));
    }
    Ok(canonical)
}
