//! Brute-force reference implementations.
//!
//! Nothing here shares code with the optimized paths it is compared against:
//! no bit masks, no pruning beyond what is needed to terminate, no anchoring.
//! They exist to cross-check the searches and the sweep.

use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::matrix::{Matrix01, PatternSet};
use crate::search::{ExtremalResult, ExtremalValue};
use crate::visibility::{BarLayout, Coord, VisEdge};

/// Largest `m * n` accepted by [`ex_weight_oracle`].
pub const WEIGHT_ORACLE_CELLS: usize = 16;

fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Containment by trying every pair of row and column index subsets.
pub fn contains_oracle(host: &Matrix01, pattern: &Matrix01) -> bool {
    let (p, q) = (pattern.rows(), pattern.cols());
    if p > host.rows() || q > host.cols() {
        return false;
    }
    let row_sets = choose(host.rows(), p);
    let col_sets = choose(host.cols(), q);
    row_sets.iter().any(|rs| {
        col_sets
            .iter()
            .any(|cs| (0..p).all(|a| (0..q).all(|b| !pattern.get(a, b) || host.get(rs[a], cs[b]))))
    })
}

fn avoids_all_oracle(host: &Matrix01, set: &PatternSet) -> bool {
    set.iter().all(|p| !contains_oracle(host, p))
}

/// Weight extremal value by enumerating every `m x n` matrix, heaviest first.
pub fn ex_weight_oracle(m: usize, n: usize, set: &PatternSet) -> Result<ExtremalResult> {
    let cells = m * n;
    if cells > WEIGHT_ORACLE_CELLS {
        return Err(Error::OracleLimit {
            rows: m,
            cols: n,
            limit: WEIGHT_ORACLE_CELLS,
        });
    }
    if cells == 0 {
        return Err(Error::InvalidArgument("m and n must be at least 1".into()));
    }
    let mut by_weight: Vec<Vec<u32>> = vec![Vec::new(); cells + 1];
    for mask in 0u32..(1u32 << cells) {
        by_weight[mask.count_ones() as usize].push(mask);
    }
    let mut examined = 0u64;
    for w in (0..=cells).rev() {
        for &mask in &by_weight[w] {
            examined += 1;
            let mut host = Matrix01::zeros(m, n);
            for bit in 0..cells {
                if mask >> bit & 1 == 1 {
                    host.set(bit / n, bit % n, true);
                }
            }
            if avoids_all_oracle(&host, set) {
                return Ok(ExtremalResult {
                    value: ExtremalValue::Finite(w as u64),
                    witness: Some(host),
                    nodes_explored: examined,
                    exact: true,
                });
            }
        }
    }
    Err(Error::NoAvoider)
}

/// Column extremal value by depth-first enumeration of column sequences.
///
/// Columns range over every row subset with at least `k` ones; a prefix is
/// abandoned once it contains a pattern. Only queries where the infinite case
/// or a pigeonhole cap decides finiteness are accepted.
pub fn ex_columns_oracle(m: usize, k: usize, set: &PatternSet) -> Result<ExtremalResult> {
    if k > m {
        return Ok(ExtremalResult {
            value: ExtremalValue::Finite(0),
            witness: Some(Matrix01::zeros(m, 0)),
            nodes_explored: 0,
            exact: true,
        });
    }
    let fewest_rows_with_ones = set
        .iter()
        .map(|p| (0..p.rows()).filter(|&i| (0..p.cols()).any(|j| p.get(i, j))).count())
        .min()
        .unwrap_or(0);
    if k < fewest_rows_with_ones {
        return Ok(ExtremalResult {
            value: ExtremalValue::Unbounded,
            witness: None,
            nodes_explored: 0,
            exact: true,
        });
    }
    let limit = set
        .iter()
        .filter(|p| p.rows() <= k)
        .map(|p| (p.cols() - 1) * choose(m, p.rows()).len())
        .min()
        .ok_or(Error::UnknownBound { k })?;

    let columns: Vec<Vec<usize>> = (k..=m).flat_map(|size| choose(m, size)).collect();
    let mut state = ColumnOracle {
        m,
        set,
        columns: &columns,
        limit,
        current: Vec::new(),
        best: Vec::new(),
        nodes: 0,
    };
    state.visit();
    let best: Vec<Vec<usize>> = state.best.iter().map(|&t| columns[t].clone()).collect();
    Ok(ExtremalResult {
        value: ExtremalValue::Finite(best.len() as u64),
        witness: Some(Matrix01::from_columns(m, &best)),
        nodes_explored: state.nodes,
        exact: true,
    })
}

struct ColumnOracle<'a> {
    m: usize,
    set: &'a PatternSet,
    columns: &'a [Vec<usize>],
    limit: usize,
    current: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
}

impl ColumnOracle<'_> {
    fn visit(&mut self) {
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        // one past the cap is explored so a wrong cap would show up as a larger value
        if self.current.len() > self.limit {
            return;
        }
        for t in 0..self.columns.len() {
            self.nodes += 1;
            self.current.push(t);
            let cols: Vec<Vec<usize>> = self.current.iter().map(|&x| self.columns[x].clone()).collect();
            if avoids_all_oracle(&Matrix01::from_columns(self.m, &cols), self.set) {
                self.visit();
            }
            self.current.pop();
        }
    }
}

/// Visibility edges by testing every `(s+2)`-subset of bars at a sample point
/// inside every gap between consecutive endpoint coordinates, and at every
/// endpoint. Witnesses are one sample per maximal run of gaps realizing the edge.
pub fn sweep_edges_oracle(layout: &BarLayout) -> Vec<VisEdge> {
    let bars = layout.bars();
    let size = layout.s() + 2;
    let mut xs: Vec<Coord> = bars.iter().flat_map(|b| [b.x_left, b.x_right]).collect();
    xs.sort();
    xs.dedup();
    let gaps: Vec<Coord> = xs.windows(2).map(|w| (w[0] + w[1]) / Ratio::from_integer(2)).collect();

    let realizes = |subset: &[usize], x: Coord| -> bool {
        if !subset.iter().all(|&i| bars[i].x_left <= x && x <= bars[i].x_right) {
            return false;
        }
        let lo = subset.iter().map(|&i| bars[i].y_rank).min().unwrap();
        let hi = subset.iter().map(|&i| bars[i].y_rank).max().unwrap();
        bars.iter()
            .enumerate()
            .all(|(i, b)| subset.contains(&i) || !(b.x_left <= x && x <= b.x_right && lo <= b.y_rank && b.y_rank <= hi))
    };

    let mut edges: BTreeMap<Vec<usize>, Vec<Coord>> = BTreeMap::new();
    for subset in choose(bars.len(), size) {
        let mut witnesses = Vec::new();
        let mut inside = false;
        for &x in &gaps {
            let ok = realizes(&subset, x);
            if ok && !inside {
                witnesses.push(x);
            }
            inside = ok;
        }
        if witnesses.is_empty() && xs.iter().any(|&x| realizes(&subset, x)) {
            // realized only at an endpoint; cannot happen with distinct endpoints
            witnesses.push(*xs.iter().find(|&&x| realizes(&subset, x)).unwrap());
        }
        if !witnesses.is_empty() {
            edges.insert(subset, witnesses);
        }
    }
    edges
        .into_iter()
        .map(|(members, witnesses)| VisEdge { members, witnesses })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::pattern_p;

    #[test]
    fn oracle_trivia() {
        assert!(!contains_oracle(&Matrix01::zeros(1, 1), &Matrix01::ones(1, 1)));
        assert!(contains_oracle(&Matrix01::identity(3), &Matrix01::zeros(1, 1)));
        let one = PatternSet::single(Matrix01::ones(1, 1));
        assert_eq!(ex_weight_oracle(3, 3, &one).unwrap().value, ExtremalValue::Finite(0));
        let big = PatternSet::single(pattern_p(4, 4));
        assert_eq!(ex_weight_oracle(3, 3, &big).unwrap().value, ExtremalValue::Finite(9));
        assert!(matches!(ex_weight_oracle(4, 5, &big), Err(Error::OracleLimit { .. })));
    }

    #[test]
    fn column_oracle_small() {
        let set = PatternSet::single(pattern_p(2, 2));
        assert_eq!(ex_columns_oracle(3, 2, &set).unwrap().value, ExtremalValue::Finite(3));
        assert_eq!(ex_columns_oracle(3, 1, &set).unwrap().value, ExtremalValue::Unbounded);
        assert_eq!(ex_columns_oracle(2, 3, &set).unwrap().value, ExtremalValue::Finite(0));
    }
}
