//! SVG 1.1 rendering of a drawing on its unit grid.

use std::fmt::Write as _;

use diagrect::flips::classify_all;
use diagrect::{GridRectangulation, Orientation};

use crate::export::class_color;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderStyle {
    /// Side of one grid cell in pixels.
    pub cell: usize,
    pub margin: usize,
    pub edge_width: usize,
    pub diagonal_color: &'static str,
    pub diagonal_dash: &'static str,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            cell: 40,
            margin: 10,
            edge_width: 3,
            diagonal_color: "#888888",
            diagonal_dash: "4 4",
        }
    }
}

/// Draws the rectangles, the main diagonal, and every interior edge in the
/// color of its flip class.
pub fn render(g: &GridRectangulation, style: &RenderStyle) -> String {
    let n = g.n();
    let (cell, m) = (style.cell, style.margin);
    let side = n * cell;
    let total = side + 2 * m;
    let at = |k: usize| m + k * cell;
    let mut out = String::new();
    writeln!(out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>").unwrap();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{total}\" height=\"{total}\" viewBox=\"0 0 {total} {total}\">"
    )
    .unwrap();
    writeln!(
        out,
        "  <rect x=\"0\" y=\"0\" width=\"{total}\" height=\"{total}\" fill=\"white\"/>"
    )
    .unwrap();
    writeln!(
        out,
        "  <line x1=\"{m}\" y1=\"{m}\" x2=\"{e}\" y2=\"{e}\" stroke=\"{}\" stroke-width=\"1\" stroke-dasharray=\"{}\"/>",
        style.diagonal_color,
        style.diagonal_dash,
        e = m + side
    )
    .unwrap();
    for (e, class) in classify_all(g) {
        let (x1, y1, x2, y2) = match e.orientation {
            Orientation::Vertical => (at(e.line), at(e.span.0), at(e.line), at(e.span.1)),
            Orientation::Horizontal => (at(e.span.0), at(e.line), at(e.span.1), at(e.line)),
        };
        writeln!(
            out,
            "  <line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"{}\" stroke-width=\"{}\" stroke-linecap=\"square\"><title>{} {}</title></line>",
            class_color(class),
            style.edge_width,
            e.id,
            class.as_str()
        )
        .unwrap();
    }
    writeln!(
        out,
        "  <rect x=\"{m}\" y=\"{m}\" width=\"{side}\" height=\"{side}\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\"/>",
        style.edge_width
    )
    .unwrap();
    for (i, r) in g.rects().iter().enumerate() {
        let cx = m * 2 + (r.left + r.right) * cell;
        let cy = m * 2 + (r.top + r.bottom) * cell;
        writeln!(
            out,
            "  <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"{}\" text-anchor=\"middle\" dominant-baseline=\"central\">{}</text>",
            half(cx),
            half(cy),
            cell / 2,
            i + 1
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

fn half(twice: usize) -> String {
    if twice.is_multiple_of(2) {
        (twice / 2).to_string()
    } else {
        format!("{}.5", twice / 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertical_cut() {
        let svg = render(&GridRectangulation::vertical_cut(), &RenderStyle::default());
        assert!(svg.contains("<line x1=\"50\" y1=\"10\" x2=\"50\" y2=\"90\" stroke=\"green\""));
        assert!(svg.contains("<title>1|2:v simple</title>"));
        assert!(svg.contains(">1</text>") && svg.contains(">2</text>"));
        assert!(svg.ends_with("</svg>\n"));
    }
}
