//! Staircase pictures of plane good semigroups and their ideals.
//!
//! Both renderers draw the membership pattern over an explicit window,
//! marking the minimum, the conductor, and the other small elements
//! distinctly from plain members. Output is deterministic text: an ASCII
//! grid or a single self-contained SVG file.

use crate::lattice::{Point, Window};
use crate::limits::Budget;
use crate::semigroup::SmallElements;
use crate::{Error, Result};

/// Output flavors of [`render_staircase`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

/// Pixel edge of one lattice cell in SVG output.
const CELL: i64 = 20;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Cell {
    Gamma,
    Mu,
    Small,
    Member,
    Empty,
}

fn classify<T: SmallElements>(set: &T, p: &Point) -> Cell {
    if p == set.conductor() {
        Cell::Gamma
    } else if p == set.minimum() {
        Cell::Mu
    } else if set.small().contains(p) {
        Cell::Small
    } else if set.contains_unchecked(p) {
        Cell::Member
    } else {
        Cell::Empty
    }
}

/// Draws the membership staircase of a plane set over `window`.
///
/// Rows run top-down from the window's highest second coordinate, columns
/// left-right along the first. ASCII marks γ as `G`, μ as `M`, other small
/// elements as `s`, members as `#`, and non-members as `.`; the SVG uses
/// color for the same five classes and labels γ and μ. Only dimension 2 is
/// drawable.
pub fn render_staircase<T: SmallElements>(
    set: &T,
    window: &Window,
    format: RenderFormat,
) -> Result<String> {
    if set.dim() != 2 {
        return Err(Error::RenderDimension(set.dim()));
    }
    if window.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: window.dim(),
        });
    }
    Budget::default().check_box_cells(window.volume())?;
    match format {
        RenderFormat::Ascii => Ok(render_ascii(set, window)),
        RenderFormat::Svg => Ok(render_svg(set, window)),
    }
}

fn render_ascii<T: SmallElements>(set: &T, window: &Window) -> String {
    let mut out = String::new();
    for y in (window.lo().coord(1)..=window.hi().coord(1)).rev() {
        for x in window.lo().coord(0)..=window.hi().coord(0) {
            let mark = match classify(set, &Point::new(vec![x, y])) {
                Cell::Gamma => 'G',
                Cell::Mu => 'M',
                Cell::Small => 's',
                Cell::Member => '#',
                Cell::Empty => '.',
            };
            out.push(mark);
        }
        out.push('\n');
    }
    out
}

fn render_svg<T: SmallElements>(set: &T, window: &Window) -> String {
    let cols = window.hi().coord(0) - window.lo().coord(0) + 1;
    let rows = window.hi().coord(1) - window.lo().coord(1) + 1;
    let width = cols * CELL;
    let height = rows * CELL;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n"
    ));
    out.push_str(&format!(
        "  <rect x=\"0\" y=\"0\" width=\"{width}\" height=\"{height}\" fill=\"#ffffff\"/>\n"
    ));
    let mut labels = String::new();
    for y in window.lo().coord(1)..=window.hi().coord(1) {
        for x in window.lo().coord(0)..=window.hi().coord(0) {
            let cell = classify(set, &Point::new(vec![x, y]));
            let px = (x - window.lo().coord(0)) * CELL;
            let py = (window.hi().coord(1) - y) * CELL;
            let fill = match cell {
                Cell::Gamma => "#b22222",
                Cell::Mu => "#2e8b57",
                Cell::Small => "#4682b4",
                Cell::Member => "#b0c4de",
                Cell::Empty => "#ffffff",
            };
            out.push_str(&format!(
                "  <rect x=\"{px}\" y=\"{py}\" width=\"{CELL}\" height=\"{CELL}\" \
                 fill=\"{fill}\" stroke=\"#999999\" stroke-width=\"1\"/>\n"
            ));
            let label = match cell {
                Cell::Gamma => Some('G'),
                Cell::Mu => Some('M'),
                _ => None,
            };
            if let Some(ch) = label {
                let tx = px + CELL / 2;
                let ty = py + CELL / 2 + 5;
                labels.push_str(&format!(
                    "  <text x=\"{tx}\" y=\"{ty}\" font-family=\"monospace\" font-size=\"12\" \
                     fill=\"#ffffff\" text-anchor=\"middle\">{ch}</text>\n"
                ));
            }
        }
    }
    out.push_str(&labels);
    out.push_str("</svg>\n");
    out
}
