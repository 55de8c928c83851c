//! SVG pictures of 2V elements: the domain square on the left, the range
//! square on the right, paired pieces sharing a label and a fill colour.
//!
//! Coordinate 0 runs horizontally (bit 0 = left half), coordinate 1
//! vertically (bit 0 = top half).

use std::fmt::Write;

use crate::block::Subblock;
use crate::element::Element;
use crate::error::{NvError, Result};
use crate::word::BinaryWord;

pub const SQUARE: f64 = 512.0;
const MARGIN: f64 = 32.0;

/// Offset and length of a word's interval inside `[0, 1]`.
fn span(w: &BinaryWord) -> (f64, f64) {
    let mut start = 0.0;
    let mut len = 1.0;
    for b in w.iter() {
        len /= 2.0;
        if b == 1 {
            start += len;
        }
    }
    (start, len)
}

/// Rectangle `(x, y, width, height)` of a subblock inside a unit square of
/// side [`SQUARE`] placed at `(ox, oy)`.
pub fn subblock_rect(s: &Subblock, ox: f64, oy: f64) -> (f64, f64, f64, f64) {
    let (hx, hw) = span(s.word(0));
    let (vy, vh) = span(s.word(1));
    (ox + hx * SQUARE, oy + vy * SQUARE, hw * SQUARE, vh * SQUARE)
}

/// Deterministic fill for pair `i`, spreading hues by the golden angle.
pub fn pair_color(i: usize) -> String {
    let hue = (i as f64 * 137.507_764) % 360.0;
    format!("hsl({hue:.1},70%,78%)")
}

pub fn render_svg(g: &Element) -> Result<String> {
    if g.dim() != 2 {
        return Err(NvError::DimensionMismatch {
            expected: 2,
            found: g.dim(),
        });
    }
    let width = 2.0 * SQUARE + 3.0 * MARGIN;
    let height = SQUARE + 2.0 * MARGIN;
    let left = MARGIN;
    let right = 2.0 * MARGIN + SQUARE;
    let top = MARGIN;

    let mut out = String::new();
    let w = &mut out;
    writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(
        w,
        r#"<g font-family="sans-serif" text-anchor="middle" dominant-baseline="central">"#
    )
    .unwrap();
    writeln!(
        w,
        r#"<text x="{}" y="{}" font-size="14">domain</text>"#,
        left + SQUARE / 2.0,
        top / 2.0
    )
    .unwrap();
    writeln!(
        w,
        r#"<text x="{}" y="{}" font-size="14">range</text>"#,
        right + SQUARE / 2.0,
        top / 2.0
    )
    .unwrap();

    let mut labels = String::new();
    for (i, (d, r)) in g.pairs().enumerate() {
        let color = pair_color(i);
        for (sub, ox) in [(d, left), (r, right)] {
            let (x, y, rw, rh) = subblock_rect(sub, ox, top);
            writeln!(
                w,
                r#"<rect x="{x}" y="{y}" width="{rw}" height="{rh}" fill="{color}" stroke="black" stroke-width="1" data-pair="{i}"/>"#
            )
            .unwrap();
            let size = (rw.min(rh) * 0.4).clamp(4.0, 24.0);
            writeln!(
                labels,
                r#"<text x="{}" y="{}" font-size="{size:.1}">{i}</text>"#,
                x + rw / 2.0,
                y + rh / 2.0
            )
            .unwrap();
        }
    }
    out.push_str(&labels);
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::identity;

    #[test]
    fn spans_are_dyadic() {
        assert_eq!(span(&"e".parse().unwrap()), (0.0, 1.0));
        assert_eq!(span(&"01".parse().unwrap()), (0.25, 0.25));
        assert_eq!(span(&"1".parse().unwrap()), (0.5, 0.5));
    }

    #[test]
    fn identity_is_two_squares() {
        let svg = render_svg(&identity(2)).unwrap();
        assert_eq!(svg.matches("<rect").count(), 2);
        assert!(svg.contains(r#"width="512""#));
    }

    #[test]
    fn wrong_dimension() {
        assert!(render_svg(&identity(1)).is_err());
    }
}
