//! Dense 0-1 matrices, pattern sets and the structural predicates built on them.
//!
//! Rows are packed into 64-bit words. Indices are 0-based in the API; the text
//! format and everything user-facing count rows and columns from 1.

use std::fmt;

use crate::containment;
use crate::error::{Error, Result};

const WORD: usize = 64;

/// A dense 0-1 matrix stored as packed bit rows.
///
/// A matrix with zero columns is allowed only as the explicit empty result of
/// a construction (see [`crate::constructions::cluster_split`]); the text
/// parser never produces one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix01 {
    rows: usize,
    cols: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Matrix01 {
    /// All-zero `rows x cols` matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(WORD);
        Matrix01 {
            rows,
            cols,
            stride,
            bits: vec![0; rows * stride],
        }
    }

    /// All-ones `rows x cols` matrix.
    pub fn ones(rows: usize, cols: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, true);
            }
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from 0-based `(row, col)` positions of its ones.
    ///
    /// Panics if a position is out of range.
    pub fn from_ones(rows: usize, cols: usize, ones: &[(usize, usize)]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for &(i, j) in ones {
            assert!(i < rows && j < cols, "({i}, {j}) outside {rows}x{cols}");
            m.set(i, j, true);
        }
        m
    }

    /// Builds a matrix from nested boolean rows, which must all have the same length.
    pub fn from_bool_rows(cells: &[Vec<bool>]) -> Result<Self> {
        let rows = cells.len();
        let cols = cells.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument(
                "matrix must have at least one row and one column".into(),
            ));
        }
        let mut m = Self::zeros(rows, cols);
        for (i, row) in cells.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::InvalidArgument(format!(
                    "row {} has {} cells, expected {cols}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        self.bits[i * self.stride + j / WORD] >> (j % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        let word = &mut self.bits[i * self.stride + j / WORD];
        let bit = 1u64 << (j % WORD);
        if value {
            *word |= bit;
        } else {
            *word &= !bit;
        }
    }

    /// Number of one-cells.
    pub fn weight(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.bits[i * self.stride..(i + 1) * self.stride]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn col_weight(&self, j: usize) -> usize {
        (0..self.rows).filter(|&i| self.get(i, j)).count()
    }

    /// Row indices holding a one in column `j`, top to bottom.
    pub fn col_ones(&self, j: usize) -> Vec<usize> {
        (0..self.rows).filter(|&i| self.get(i, j)).collect()
    }

    /// Column indices holding a one in row `i`, left to right.
    pub fn row_ones(&self, i: usize) -> Vec<usize> {
        (0..self.cols).filter(|&j| self.get(i, j)).collect()
    }

    /// Iterates over 0-based positions of ones in row-major order.
    pub fn ones_positions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows).flat_map(move |i| (0..self.cols).filter(move |&j| self.get(i, j)).map(move |j| (i, j)))
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Reflection over a vertical line (column order reversed).
    pub fn flip_h(&self) -> Self {
        let mut out = Self::zeros(self.rows, self.cols);
        for (i, j) in self.ones_positions() {
            out.set(i, self.cols - 1 - j, true);
        }
        out
    }

    /// Reflection over a horizontal line (row order reversed).
    pub fn flip_v(&self) -> Self {
        let mut out = Self::zeros(self.rows, self.cols);
        for (i, j) in self.ones_positions() {
            out.set(self.rows - 1 - i, j, true);
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for (i, j) in self.ones_positions() {
            out.set(j, i, true);
        }
        out
    }

    /// Submatrix on the given (0-based, increasing) rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                if self.get(i, j) {
                    out.set(a, b, true);
                }
            }
        }
        out
    }

    /// Builds a matrix column by column from sets of 0-based row indices.
    pub fn from_columns(rows: usize, columns: &[Vec<usize>]) -> Self {
        let mut out = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for &i in col {
                out.set(i, j, true);
            }
        }
        out
    }

    /// Text form: one line of `0`/`1` characters per row, no trailing newline.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.rows * (self.cols + 1));
        for i in 0..self.rows {
            if i > 0 {
                s.push('\n');
            }
            for j in 0..self.cols {
                s.push(if self.get(i, j) { '1' } else { '0' });
            }
        }
        s
    }

    /// Parses the text matrix format. Blank lines are not allowed inside a
    /// single matrix; use [`PatternSet::parse`] for multi-matrix files.
    pub fn parse(text: &str) -> Result<Self> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(n, l)| (n + 1, l.trim_end_matches('\r')))
            .collect();
        let first = lines.iter().position(|(_, l)| !l.trim().is_empty());
        let last = lines.iter().rposition(|(_, l)| !l.trim().is_empty());
        match (first, last) {
            (Some(a), Some(b)) => parse_block(&lines[a..=b]),
            _ => Err(Error::Parse {
                line: 1,
                message: "no matrix rows".into(),
            }),
        }
    }
}

fn parse_block(lines: &[(usize, &str)]) -> Result<Matrix01> {
    let mut cells = Vec::with_capacity(lines.len());
    let mut width = None;
    for &(line, text) in lines {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse {
                line,
                message: "blank line inside a matrix".into(),
            });
        }
        let row = text
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse {
                    line,
                    message: format!("unexpected character {other:?}"),
                }),
            })
            .collect::<Result<Vec<bool>>>()?;
        match width {
            None => width = Some(row.len()),
            Some(w) if w != row.len() => {
                return Err(Error::Parse {
                    line,
                    message: format!("row has {} cells, expected {w}", row.len()),
                })
            }
            _ => {}
        }
        cells.push(row);
    }
    Matrix01::from_bool_rows(&cells)
}

impl fmt::Display for Matrix01 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Matrix01 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix01({}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            f.write_str(if i == 0 { ": " } else { "/" })?;
            for j in 0..self.cols {
                f.write_str(if self.get(i, j) { "1" } else { "0" })?;
            }
        }
        f.write_str(")")
    }
}

/// An ordered, nonempty collection of patterns that must be avoided together.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternSet {
    patterns: Vec<Matrix01>,
}

impl PatternSet {
    pub fn new(patterns: Vec<Matrix01>) -> Result<Self> {
        if patterns.is_empty() {
            return Err(Error::InvalidArgument("pattern set must be nonempty".into()));
        }
        Ok(PatternSet { patterns })
    }

    pub fn single(pattern: Matrix01) -> Self {
        PatternSet {
            patterns: vec![pattern],
        }
    }

    pub fn patterns(&self) -> &[Matrix01] {
        &self.patterns
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Matrix01> {
        self.patterns.iter()
    }

    /// Merges several sets, keeping order.
    pub fn union<'a>(sets: impl IntoIterator<Item = &'a PatternSet>) -> Result<Self> {
        Self::new(sets.into_iter().flat_map(|s| s.patterns.iter().cloned()).collect())
    }

    /// Parses one or more matrices separated by blank lines.
    pub fn parse(text: &str) -> Result<Self> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(n, l)| (n + 1, l.trim_end_matches('\r')))
            .collect();
        let mut patterns = Vec::new();
        let mut start = None;
        for idx in 0..=lines.len() {
            let blank = idx == lines.len() || lines[idx].1.trim().is_empty();
            match (blank, start) {
                (false, None) => start = Some(idx),
                (true, Some(s)) => {
                    patterns.push(parse_block(&lines[s..idx])?);
                    start = None;
                }
                _ => {}
            }
        }
        if patterns.is_empty() {
            return Err(Error::Parse {
                line: 1,
                message: "no matrices found".into(),
            });
        }
        Ok(PatternSet { patterns })
    }

    /// Text form: matrices separated by a single blank line.
    pub fn to_text(&self) -> String {
        self.patterns
            .iter()
            .map(Matrix01::to_text)
            .collect::<Vec<_>>()
            .join("\n\n")
    }
}

impl<'a> IntoIterator for &'a PatternSet {
    type Item = &'a Matrix01;
    type IntoIter = std::slice::Iter<'a, Matrix01>;

    fn into_iter(self) -> Self::IntoIter {
        self.patterns.iter()
    }
}

/// Vertical extent of the ones in one column (0-based, inclusive).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColumnRange {
    pub col: usize,
    pub top: usize,
    pub bottom: usize,
}

impl ColumnRange {
    pub fn intersects(&self, other: &ColumnRange) -> bool {
        self.top <= other.bottom && other.top <= self.bottom
    }
}

/// True iff `pattern` occurs in `host` as an ordered submatrix, up to turning
/// ones of the submatrix into zeros. An all-zero pattern is contained in
/// every host at least as large.
pub fn contains(host: &Matrix01, pattern: &Matrix01) -> bool {
    containment::contains(host, pattern)
}

/// True iff `host` contains no member of `set`.
pub fn avoids_all(host: &Matrix01, set: &PatternSet) -> bool {
    set.iter().all(|p| !contains(host, p))
}

/// Top and bottom ones of every nonzero column, in column order.
pub fn column_ranges(m: &Matrix01) -> Vec<ColumnRange> {
    (0..m.cols())
        .filter_map(|j| {
            let ones = m.col_ones(j);
            Some(ColumnRange {
                col: j,
                top: *ones.first()?,
                bottom: *ones.last()?,
            })
        })
        .collect()
}

/// True iff the one-ranges of every two columns share a row.
///
/// Fails with [`Error::DegeneratePattern`] when a column has no ones.
pub fn is_range_overlapping(p: &Matrix01) -> Result<bool> {
    let ranges = column_ranges(p);
    if ranges.len() != p.cols() {
        let col = (0..p.cols()).find(|&j| p.col_weight(j) == 0).unwrap_or(0);
        return Err(Error::DegeneratePattern { col: col + 1 });
    }
    // Pairwise intersection of intervals is equivalent to max(top) <= min(bottom).
    let max_top = ranges.iter().map(|r| r.top).max();
    let min_bottom = ranges.iter().map(|r| r.bottom).min();
    Ok(match (max_top, min_bottom) {
        (Some(t), Some(b)) => t <= b,
        _ => true,
    })
}

/// No column holds two ones.
pub fn is_light(p: &Matrix01) -> bool {
    (0..p.cols()).all(|j| p.col_weight(j) <= 1)
}

/// True iff `p` contains the 2x2 identity or has a row with at least two ones.
pub fn qualifies_for_linear_corollary(p: &Matrix01) -> bool {
    (0..p.rows()).any(|i| p.row_weight(i) >= 2) || contains(p, &Matrix01::identity(2))
}
