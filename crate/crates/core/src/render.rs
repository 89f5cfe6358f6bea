//! Deterministic SVG drawings of bar layouts.

use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::visibility::{BarLayout, Coord, VisEdge};

const UNIT: f64 = 40.0;
const ROW: f64 = 30.0;
const MARGIN: f64 = 20.0;

fn x_of(x: Coord) -> f64 {
    x.to_f64().unwrap_or(0.0)
}

/// Bars become horizontal rectangles, ordered top to bottom by height rank.
/// With `witnesses`, every witness of every edge is drawn as a vertical line
/// from the edge's top bar to its bottom bar.
pub fn layout_svg(layout: &BarLayout, edges: &[VisEdge], witnesses: bool) -> String {
    let bars = layout.bars();
    let mut ranks: Vec<i64> = bars.iter().map(|b| b.y_rank).collect();
    ranks.sort_unstable();
    let row_of = |y: i64| ranks.binary_search(&y).unwrap_or(0);
    let min_x = bars.iter().map(|b| x_of(b.x_left)).fold(f64::INFINITY, f64::min);
    let max_x = bars.iter().map(|b| x_of(b.x_right)).fold(f64::NEG_INFINITY, f64::max);
    let (min_x, max_x) = if bars.is_empty() { (0.0, 0.0) } else { (min_x, max_x) };
    let px = |x: f64| MARGIN + (x - min_x) * UNIT;
    let py = |row: usize| MARGIN + row as f64 * ROW + ROW / 2.0;
    let width = 2.0 * MARGIN + (max_x - min_x) * UNIT;
    let height = 2.0 * MARGIN + ranks.len() as f64 * ROW;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for (idx, b) in bars.iter().enumerate() {
        let (x0, x1) = (px(x_of(b.x_left)), px(x_of(b.x_right)));
        let y = py(row_of(b.y_rank));
        let _ = writeln!(
            out,
            r#"<rect class="bar" data-bar="{}" x="{x0:.2}" y="{:.2}" width="{:.2}" height="6.00" fill="black"/>"#,
            idx + 1,
            y - 3.0,
            x1 - x0
        );
    }
    if witnesses {
        for e in edges {
            let rows: Vec<usize> = e.members.iter().map(|&i| row_of(bars[i].y_rank)).collect();
            let top = rows.iter().copied().min().unwrap_or(0);
            let bottom = rows.iter().copied().max().unwrap_or(0);
            let label = e
                .members
                .iter()
                .map(|i| (i + 1).to_string())
                .collect::<Vec<_>>()
                .join(",");
            for &x in &e.witnesses {
                let xp = px(x_of(x));
                let _ = writeln!(
                    out,
                    r#"<line class="witness" data-edge="{label}" x1="{xp:.2}" y1="{:.2}" x2="{xp:.2}" y2="{:.2}" stroke="red" stroke-width="2"/>"#,
                    py(top),
                    py(bottom)
                );
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::visibility::{sweep_edges, Bar};
    use num_rational::Ratio;

    #[test]
    fn stacked_bars_draw_two_witnesses() {
        let int = Ratio::from_integer;
        let layout = BarLayout::new(
            vec![
                Bar::new(1, int(0), int(10)),
                Bar::new(2, int(1), int(11)),
                Bar::new(3, int(2), int(12)),
            ],
            0,
        )
        .unwrap();
        let edges = sweep_edges(&layout);
        let svg = layout_svg(&layout, &edges, true);
        assert_eq!(svg.matches("class=\"bar\"").count(), 3);
        assert_eq!(svg.matches("class=\"witness\"").count(), 2);
        assert_eq!(svg, layout_svg(&layout, &edges, true));
        assert_eq!(layout_svg(&layout, &edges, false).matches("<line").count(), 0);
    }
}
