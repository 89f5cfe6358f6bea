//! Bar s-visibility hypergraphs.
//!
//! Bars are horizontal segments at distinct heights. An edge is a set of
//! `s + 2` bars that some vertical segment meets with no other bar in
//! between. Heights are ranks where smaller values are higher up, matching
//! matrix rows. All geometry uses exact rationals.

use std::collections::{BTreeMap, HashSet};
use std::ops::Bound::{Excluded, Unbounded};

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{avoids_all, Matrix01};
use crate::patterns::{generate_t, TrsParams};

/// Exact x coordinate.
pub type Coord = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bar {
    pub y_rank: i64,
    pub x_left: Coord,
    pub x_right: Coord,
}

impl Bar {
    pub fn new(y_rank: i64, x_left: Coord, x_right: Coord) -> Self {
        Bar {
            y_rank,
            x_left,
            x_right,
        }
    }

    #[inline]
    pub fn covers(&self, x: Coord) -> bool {
        self.x_left <= x && x <= self.x_right
    }
}

/// A validated set of bars plus the visibility parameter `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarLayout {
    bars: Vec<Bar>,
    s: usize,
}

impl BarLayout {
    /// Rejects degenerate bars, repeated heights and repeated endpoint coordinates.
    pub fn new(bars: Vec<Bar>, s: usize) -> Result<Self> {
        let mut heights = HashSet::new();
        let mut xs = HashSet::new();
        for (idx, b) in bars.iter().enumerate() {
            if b.x_left >= b.x_right {
                return Err(Error::LayoutRejected(format!("bar {} has x_left >= x_right", idx + 1)));
            }
            if !heights.insert(b.y_rank) {
                return Err(Error::LayoutRejected(format!("height {} used twice", b.y_rank)));
            }
            for x in [b.x_left, b.x_right] {
                if !xs.insert(x) {
                    return Err(Error::LayoutRejected(format!("endpoint coordinate {x} used twice")));
                }
            }
        }
        Ok(BarLayout { bars, s })
    }

    pub fn bars(&self) -> &[Bar] {
        &self.bars
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn len(&self) -> usize {
        self.bars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bars.is_empty()
    }

    /// Same bars mirrored over the vertical line `x = 0`.
    pub fn reflect_h(&self) -> Self {
        let bars = self
            .bars
            .iter()
            .map(|b| Bar::new(b.y_rank, -b.x_right, -b.x_left))
            .collect();
        BarLayout { bars, s: self.s }
    }

    /// Does the vertical segment at `x` spanning `members` meet exactly those bars?
    pub fn realizes(&self, members: &[usize], x: Coord) -> bool {
        if members.len() != self.s + 2 || !members.iter().all(|&i| self.bars[i].covers(x)) {
            return false;
        }
        let lo = members.iter().map(|&i| self.bars[i].y_rank).min().unwrap_or(0);
        let hi = members.iter().map(|&i| self.bars[i].y_rank).max().unwrap_or(0);
        let between = self
            .bars
            .iter()
            .filter(|b| b.covers(x) && (lo..=hi).contains(&b.y_rank))
            .count();
        between == members.len()
    }

    /// Parses lines of `y_rank x_left x_right`; coordinates are `p/q` or integers.
    /// Blank lines and lines starting with `#` are skipped.
    pub fn parse(text: &str, s: usize) -> Result<Self> {
        let mut bars = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Parse { line: n + 1, message };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(err(format!("expected 3 fields, found {}", fields.len())));
            }
            let y = fields[0].parse::<i64>().map_err(|e| err(format!("bad y_rank: {e}")))?;
            let xl = parse_coord(fields[1]).map_err(err)?;
            let xr = parse_coord(fields[2]).map_err(err)?;
            bars.push(Bar::new(y, xl, xr));
        }
        Self::new(bars, s)
    }

    /// One bar per line, coordinates always written as `p/q`.
    pub fn to_text(&self) -> String {
        self.bars
            .iter()
            .map(|b| {
                format!(
                    "{} {}/{} {}/{}\n",
                    b.y_rank,
                    b.x_left.numer(),
                    b.x_left.denom(),
                    b.x_right.numer(),
                    b.x_right.denom()
                )
            })
            .collect()
    }
}

fn parse_coord(s: &str) -> std::result::Result<Coord, String> {
    let bad = |e: std::num::ParseIntError| format!("bad coordinate {s:?}: {e}");
    match s.split_once('/') {
        Some((p, q)) => {
            let p = p.parse::<i64>().map_err(bad)?;
            let q = q.parse::<i64>().map_err(bad)?;
            if q == 0 {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Ratio::new(p, q))
        }
        None => s.parse::<i64>().map(Ratio::from_integer).map_err(bad),
    }
}

/// An edge: `s + 2` bar indices (ascending) and the x positions realizing it.
///
/// For geometric layouts there is one witness per maximal x-interval over
/// which the edge is visible; for matrix-derived layouts one per column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VisEdge {
    pub members: Vec<usize>,
    pub witnesses: Vec<Coord>,
}

impl VisEdge {
    pub fn multiplicity(&self) -> usize {
        self.witnesses.len()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum EventKind {
    Insert,
    Remove,
}

/// Every edge of the layout, found by a left-to-right sweep over bar endpoints.
///
/// An edge can only appear where the stack of bars above a point changes: at
/// a left endpoint the new bar joins up to `s + 2` windows of consecutive
/// bars, and at a right endpoint up to `s + 1` windows close over the gap it
/// leaves. Each appearance starts a new maximal interval, recorded by a
/// witness in the gap that follows the event.
pub fn sweep_edges(layout: &BarLayout) -> Vec<VisEdge> {
    let bars = layout.bars();
    let size = layout.s() + 2;
    let mut events: Vec<(Coord, EventKind, usize)> = bars
        .iter()
        .enumerate()
        .flat_map(|(i, b)| [(b.x_left, EventKind::Insert, i), (b.x_right, EventKind::Remove, i)])
        .collect();
    events.sort();

    let mut active: BTreeMap<i64, usize> = BTreeMap::new();
    let mut edges: BTreeMap<Vec<usize>, Vec<Coord>> = BTreeMap::new();
    for (e, &(x, kind, bar)) in events.iter().enumerate() {
        let y = bars[bar].y_rank;
        let Some(&(next_x, _, _)) = events.get(e + 1) else {
            break;
        };
        let witness = (x + next_x) / Ratio::from_integer(2);
        let above: Vec<usize> = {
            let mut v: Vec<usize> = active.range(..y).rev().take(size - 1).map(|(_, &i)| i).collect();
            v.reverse();
            v
        };
        let below: Vec<usize> = active
            .range((Excluded(y), Unbounded))
            .take(size - 1)
            .map(|(_, &i)| i)
            .collect();
        let (stack, must_span) = match kind {
            EventKind::Insert => {
                active.insert(y, bar);
                let mut stack = above.clone();
                stack.push(bar);
                stack.extend(&below);
                // windows must contain the new bar
                (stack, (above.len(), above.len()))
            }
            EventKind::Remove => {
                active.remove(&y);
                if above.is_empty() || below.is_empty() {
                    continue;
                }
                let mut stack = above.clone();
                stack.extend(&below);
                // windows must contain the last bar above and the first below
                (stack, (above.len() - 1, above.len()))
            }
        };
        if stack.len() < size {
            continue;
        }
        for start in 0..=stack.len() - size {
            let end = start + size - 1;
            if start <= must_span.0 && end >= must_span.1 {
                let mut members = stack[start..=end].to_vec();
                members.sort_unstable();
                edges.entry(members).or_default().push(witness);
            }
        }
    }
    edges
        .into_iter()
        .map(|(members, witnesses)| VisEdge { members, witnesses })
        .collect()
}

/// `(2s + 3) * n`, the most edges a layout of `n` bars can have.
pub fn edge_bound(n: usize, s: usize) -> usize {
    (2 * s + 3) * n
}

/// Result of turning a matrix into a bar visibility hypergraph.
#[derive(Clone, Debug)]
pub struct MatrixVisibility {
    /// The matrix after deleting the outer ones of every row and the lowest ones of every column.
    pub trimmed: Matrix01,
    pub layout: BarLayout,
    /// 0-based matrix row of each bar.
    pub bar_rows: Vec<usize>,
    /// Edges with their witness columns (1-based, as coordinates).
    pub edges: Vec<VisEdge>,
}

impl MatrixVisibility {
    pub fn max_multiplicity(&self) -> usize {
        self.edges.iter().map(VisEdge::multiplicity).max().unwrap_or(0)
    }
}

/// Deletes, simultaneously, the first and last `s + 1` ones of every row and
/// the last `r` ones of every column.
pub fn trim_matrix(m: &Matrix01, r: usize, s: usize) -> Matrix01 {
    let mut out = m.clone();
    for i in 0..m.rows() {
        let ones = m.row_ones(i);
        let n = ones.len();
        for (pos, &j) in ones.iter().enumerate() {
            if pos < s + 1 || pos + s + 1 >= n {
                out.set(i, j, false);
            }
        }
    }
    for j in 0..m.cols() {
        let ones = m.col_ones(j);
        for &i in ones.iter().rev().take(r) {
            out.set(i, j, false);
        }
    }
    out
}

/// Builds the bar s-visibility hypergraph of `m` with respect to `T_{r,s}`.
///
/// Each nonempty row of the trimmed matrix becomes a bar from its first to its
/// last one. Row `i` (1-based) is widened by `i * eps` on both sides with
/// `eps = 1 / (2 * rows + 2)`, which makes all endpoints distinct without
/// changing which integer columns a bar covers. Every one of the trimmed
/// matrix with at least `s + 1` ones below it starts a vertical segment down to
/// the `(s + 1)`-st bar below; those `s + 2` bars form an edge witnessed by the
/// column.
pub fn matrix_to_visibility(m: &Matrix01, r: usize, s: usize) -> Result<MatrixVisibility> {
    let trimmed = trim_matrix(m, r, s);
    let eps = Ratio::new(1, 2 * m.rows() as i64 + 2);
    let mut bars = Vec::new();
    let mut bar_rows = Vec::new();
    let mut bar_of_row = vec![None; m.rows()];
    let mut spans = vec![None; m.rows()];
    for i in 0..m.rows() {
        let ones = trimmed.row_ones(i);
        let (Some(&first), Some(&last)) = (ones.first(), ones.last()) else {
            continue;
        };
        let widen = eps * Ratio::from_integer(i as i64 + 1);
        bar_of_row[i] = Some(bars.len());
        spans[i] = Some((first, last));
        bar_rows.push(i);
        bars.push(Bar::new(
            i as i64 + 1,
            Ratio::from_integer(first as i64 + 1) - widen,
            Ratio::from_integer(last as i64 + 1) + widen,
        ));
    }
    let layout = BarLayout::new(bars, s)?;

    let mut edges: BTreeMap<Vec<usize>, Vec<Coord>> = BTreeMap::new();
    for j in 0..trimmed.cols() {
        let ones = trimmed.col_ones(j);
        for (pos, &i) in ones.iter().enumerate() {
            if ones.len() - pos - 1 < s + 1 {
                break;
            }
            let mut members: Vec<usize> = vec![bar_of_row[i].expect("row with a one has a bar")];
            members.extend(
                (i + 1..m.rows())
                    .filter(|&row| spans[row].is_some_and(|(f, l)| f <= j && j <= l))
                    .take(s + 1)
                    .map(|row| bar_of_row[row].expect("spanning row has a bar")),
            );
            edges
                .entry(members)
                .or_default()
                .push(Ratio::from_integer(j as i64 + 1));
        }
    }
    let edges = edges
        .into_iter()
        .map(|(members, witnesses)| VisEdge { members, witnesses })
        .collect();
    Ok(MatrixVisibility {
        trimmed,
        layout,
        bar_rows,
        edges,
    })
}

/// Weight of a square `T_{r,s}`-avoider against the linear bound obtained
/// from the visibility reduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KvisReport {
    pub n: usize,
    pub weight: i64,
    pub bound: i64,
    pub edges: usize,
    pub max_multiplicity: usize,
    pub holds: bool,
}

/// `(3s+3+r)n + (r-1)(2s+3)(n-r)`, with `r - 1` and `n - r` floored at zero.
///
/// Only rows with at least `r` ones below them can carry a bar, so there are
/// at most `max(n - r, 0)` bars; for `r = 0` there are no edges at all.
pub fn kvis_weight_bound(n: usize, r: usize, s: usize) -> i64 {
    let (n, r, s) = (n as i64, r as i64, s as i64);
    (3 * s + 3 + r) * n + (r - 1).max(0) * (2 * s + 3) * (n - r).max(0)
}

pub fn check_weight_bound_kvis(m: &Matrix01, r: usize, s: usize) -> Result<KvisReport> {
    if m.rows() != m.cols() {
        return Err(Error::Precondition("matrix must be square".into()));
    }
    if !avoids_all(m, &generate_t(TrsParams::new(r, s))) {
        return Err(Error::Precondition(format!(
            "matrix contains a member of T_{{{r},{s}}}"
        )));
    }
    let vis = matrix_to_visibility(m, r, s)?;
    let n = m.rows();
    let weight = m.weight() as i64;
    let bound = kvis_weight_bound(n, r, s);
    Ok(KvisReport {
        n,
        weight,
        bound,
        edges: vis.edges.len(),
        max_multiplicity: vis.max_multiplicity(),
        holds: weight <= bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Coord {
        Ratio::from_integer(v)
    }

    fn stacked3(s: usize) -> BarLayout {
        BarLayout::new(
            vec![
                Bar::new(1, int(0), int(10)),
                Bar::new(2, int(1), int(11)),
                Bar::new(3, int(2), int(12)),
            ],
            s,
        )
        .unwrap()
    }

    fn members(edges: &[VisEdge]) -> Vec<Vec<usize>> {
        edges.iter().map(|e| e.members.clone()).collect()
    }

    #[test]
    fn three_stacked_bars() {
        assert_eq!(members(&sweep_edges(&stacked3(0))), vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(members(&sweep_edges(&stacked3(1))), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn tiny_layouts_have_no_edges() {
        let one = BarLayout::new(vec![Bar::new(0, int(0), int(1))], 0).unwrap();
        assert!(sweep_edges(&one).is_empty());
        let apart = BarLayout::new(vec![Bar::new(0, int(0), int(1)), Bar::new(1, int(2), int(3))], 0).unwrap();
        assert!(sweep_edges(&apart).is_empty());
    }

    #[test]
    fn blocked_then_reopened_counts_two_intervals() {
        // a short middle bar interrupts visibility between the long ones
        let layout = BarLayout::new(
            vec![
                Bar::new(1, int(0), int(10)),
                Bar::new(2, int(3), int(5)),
                Bar::new(3, int(1), int(11)),
            ],
            0,
        )
        .unwrap();
        let edges = sweep_edges(&layout);
        let outer = edges.iter().find(|e| e.members == vec![0, 2]).unwrap();
        assert_eq!(outer.multiplicity(), 2);
        for e in &edges {
            for &x in &e.witnesses {
                assert!(layout.realizes(&e.members, x));
            }
        }
    }

    #[test]
    fn layout_validation() {
        let dup_x = BarLayout::new(vec![Bar::new(0, int(0), int(2)), Bar::new(1, int(2), int(3))], 0);
        assert!(matches!(dup_x, Err(Error::LayoutRejected(_))));
        let dup_y = BarLayout::new(vec![Bar::new(0, int(0), int(1)), Bar::new(0, int(2), int(3))], 0);
        assert!(matches!(dup_y, Err(Error::LayoutRejected(_))));
        let flat = BarLayout::new(vec![Bar::new(0, int(1), int(1))], 0);
        assert!(matches!(flat, Err(Error::LayoutRejected(_))));
    }

    #[test]
    fn layout_text_format() {
        let l = BarLayout::parse("# comment\n1 0 10\n2 1/2 11\n\n3 2 25/2\n", 0).unwrap();
        assert_eq!(l.bars()[1].x_left, Ratio::new(1, 2));
        assert_eq!(l.to_text(), "1 0/1 10/1\n2 1/2 11/1\n3 2/1 25/2\n");
        assert_eq!(BarLayout::parse(&l.to_text(), 0).unwrap(), l);
        assert!(matches!(BarLayout::parse("1 0", 0), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(BarLayout::parse("1 0 1/0", 0), Err(Error::Parse { .. })));
    }

    #[test]
    fn identity_has_no_bars() {
        let vis = matrix_to_visibility(&Matrix01::identity(6), 1, 0).unwrap();
        assert!(vis.layout.is_empty());
        assert!(vis.edges.is_empty());
    }

    #[test]
    fn all_ones_five_by_five() {
        // r = 0, s = 0: every row loses its first and last one, columns lose nothing.
        let vis = matrix_to_visibility(&Matrix01::ones(5, 5), 0, 0).unwrap();
        assert_eq!(vis.trimmed.to_text(), "01110\n01110\n01110\n01110\n01110");
        assert_eq!(vis.layout.len(), 5);
        // in columns 2..4 each of rows 1..4 starts a segment to the next row
        let expected: Vec<Vec<usize>> = (0..4).map(|i| vec![i, i + 1]).collect();
        assert_eq!(members(&vis.edges), expected);
        assert!(vis.edges.iter().all(|e| e.multiplicity() == 3));
        for e in &vis.edges {
            for &x in &e.witnesses {
                assert!(vis.layout.realizes(&e.members, x));
            }
        }
    }

    #[test]
    fn trim_is_simultaneous() {
        let m = Matrix01::parse("1111\n1111\n1111").unwrap();
        // rows keep their two middle ones; each column then drops its lowest one
        let t = trim_matrix(&m, 1, 0);
        assert_eq!(t.to_text(), "0110\n0110\n0000");
    }

    #[test]
    fn kvis_bound_formula() {
        assert_eq!(kvis_weight_bound(5, 1, 0), 20);
        assert_eq!(kvis_weight_bound(6, 2, 0), 5 * 6 + 3 * 4);
        assert_eq!(kvis_weight_bound(1, 3, 1), 9);
        let rep = check_weight_bound_kvis(&Matrix01::identity(4), 1, 0).unwrap();
        assert!(rep.holds);
        assert!(check_weight_bound_kvis(&Matrix01::ones(3, 3), 1, 0).is_err());
    }

    #[test]
    fn reflection_preserves_edges() {
        let l = BarLayout::new(
            vec![
                Bar::new(1, int(0), int(10)),
                Bar::new(2, int(3), int(5)),
                Bar::new(3, int(1), int(11)),
            ],
            0,
        )
        .unwrap();
        let a: Vec<_> = sweep_edges(&l)
            .into_iter()
            .map(|e| (e.members, e.witnesses.len()))
            .collect();
        let b: Vec<_> = sweep_edges(&l.reflect_h())
            .into_iter()
            .map(|e| (e.members, e.witnesses.len()))
            .collect();
        assert_eq!(a, b);
    }
}
