//! Explicit constructions used to prove the bounds: cluster splitting,
//! the block-diagonal lower bound, the pigeonhole witness, and the
//! greedy-coloring induction for all-ones patterns with two columns.

use serde::Serialize;

use crate::comb::{binomial, k_subsets};
use crate::error::{Error, Result};
use crate::matrix::{contains, Matrix01};
use crate::patterns::pattern_p;
use crate::search::{ExtremalResult, ExtremalValue};

/// Splits the ones of every column, top down, into clusters of `k`; drops
/// the fewer than `k` left over at the bottom; and gives every cluster after
/// the first its own column right after the previous cluster's column.
/// Columns left empty disappear, so the result may have no columns at all.
pub fn cluster_split(a: &Matrix01, k: usize) -> Result<Matrix01> {
    if k == 0 {
        return Err(Error::InvalidArgument("cluster size must be at least 1".into()));
    }
    let columns: Vec<Vec<usize>> = (0..a.cols())
        .flat_map(|j| {
            let ones = a.col_ones(j);
            let full = ones.len() / k;
            (0..full)
                .map(move |c| ones[c * k..(c + 1) * k].to_vec())
                .collect::<Vec<_>>()
        })
        .collect();
    Ok(Matrix01::from_columns(a.rows(), &columns))
}

/// The `m x floor(m/k)` matrix whose column `j` has ones in rows
/// `(j-1)k+1 ..= jk`, reflected left to right.
pub fn construct_k_prime(m: usize, k: usize) -> Result<Matrix01> {
    if k == 0 || k > m {
        return Err(Error::InvalidArgument(format!("need 1 <= k <= m, got m={m}, k={k}")));
    }
    let q = m / k;
    let columns: Vec<Vec<usize>> = (0..q).rev().map(|j| (j * k..(j + 1) * k).collect()).collect();
    Ok(Matrix01::from_columns(m, &columns))
}

/// Every `k`-subset of the `m` rows as a column, `c - 1` times each, subsets
/// in lexicographic order with repeats adjacent.
pub fn pigeonhole_witness(m: usize, k: usize, c: usize) -> Result<Matrix01> {
    if k == 0 || k > m || c < 2 {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= k <= m and c >= 2, got m={m}, k={k}, c={c}"
        )));
    }
    let columns: Vec<Vec<usize>> = k_subsets(m, k)
        .into_iter()
        .flat_map(|s| std::iter::repeat_n(s, c - 1))
        .collect();
    Ok(Matrix01::from_columns(m, &columns))
}

/// Graph on the columns of a matrix: two columns are adjacent when their
/// ones share exactly `r - 1` rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnGraph {
    adjacency: Vec<Vec<usize>>,
}

impl ColumnGraph {
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Colors `1..` assigned greedily in vertex order, each vertex taking the
    /// smallest color absent from its already-colored neighbors.
    pub fn greedy_coloring(&self) -> Vec<usize> {
        let mut colors = vec![0usize; self.vertex_count()];
        for v in 0..self.vertex_count() {
            let mut used: Vec<bool> = vec![false; self.adjacency[v].len() + 2];
            for &u in &self.adjacency[v] {
                if colors[u] < used.len() {
                    used[colors[u]] = true;
                }
            }
            colors[v] = (1..used.len()).find(|&c| !used[c]).expect("a free color exists");
        }
        colors
    }
}

pub fn build_column_graph(m: &Matrix01, r: usize) -> Result<ColumnGraph> {
    if r < 2 {
        return Err(Error::InvalidArgument("r must be at least 2".into()));
    }
    let cols: Vec<Vec<usize>> = (0..m.cols()).map(|j| m.col_ones(j)).collect();
    let shared = |a: &[usize], b: &[usize]| a.iter().filter(|x| b.binary_search(x).is_ok()).count();
    let mut adjacency = vec![Vec::new(); cols.len()];
    for a in 0..cols.len() {
        for b in a + 1..cols.len() {
            if shared(&cols[a], &cols[b]) == r - 1 {
                adjacency[a].push(b);
                adjacency[b].push(a);
            }
        }
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    Ok(ColumnGraph { adjacency })
}

/// A matrix in the induction: exactly `k` ones per column, avoiding `P_{r,2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InductionState {
    pub matrix: Matrix01,
    pub k: usize,
    pub row_count: usize,
    pub delta: usize,
}

impl InductionState {
    /// Validates `matrix` and measures its column graph for pattern height `r`.
    pub fn new(matrix: Matrix01, r: usize) -> Result<Self> {
        let k = if matrix.cols() == 0 { 0 } else { matrix.col_weight(0) };
        if let Some(j) = (0..matrix.cols()).find(|&j| matrix.col_weight(j) != k) {
            return Err(Error::Precondition(format!(
                "column {} has {} ones, column 1 has {k}",
                j + 1,
                matrix.col_weight(j)
            )));
        }
        if r >= 2 && contains(&matrix, &pattern_p(r, 2)) {
            return Err(Error::Precondition(format!("matrix contains P_{{{r},2}}")));
        }
        let delta = build_column_graph(&matrix, r)?.max_degree();
        Ok(InductionState {
            row_count: matrix.rows(),
            matrix,
            k,
            delta,
        })
    }

    /// All `r`-subsets of `m` rows, once each.
    pub fn base(m: usize, r: usize) -> Result<Self> {
        Self::new(pigeonhole_witness(m, r, 2)?, r)
    }
}

/// Measurements of one induction step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepTrace {
    pub ones_per_column: usize,
    pub rows_before: usize,
    pub delta_before: usize,
    pub colors_used: usize,
    pub rows_after: usize,
    pub delta_after: usize,
    /// `C(k, r-2) * (rows - k) / (k - r + 2) + delta`, with `k` and `rows` taken before the step.
    pub delta_bound: String,
    pub delta_bound_holds: bool,
}

/// Greedily colors the column graph, appends one new row per color, and puts
/// a one in the row of each column's color. The result has one more one per
/// column and still avoids `P_{r,2}`: columns sharing `r - 1` rows got
/// different colors, so no pair reaches `r` shared rows.
pub fn coloring_induction_step(state: &InductionState, r: usize) -> Result<(InductionState, StepTrace)> {
    let checked = InductionState::new(state.matrix.clone(), r)?;
    if checked.k != state.k {
        return Err(Error::Precondition(format!(
            "state claims {} ones per column, matrix has {}",
            state.k, checked.k
        )));
    }
    let graph = build_column_graph(&state.matrix, r)?;
    let delta = graph.max_degree();
    let colors = graph.greedy_coloring();
    let colors_used = colors.iter().copied().max().unwrap_or(0);
    let old_rows = state.matrix.rows();
    let new_rows = old_rows + delta + 1;

    let mut next = Matrix01::zeros(new_rows, state.matrix.cols());
    for (i, j) in state.matrix.ones_positions() {
        next.set(i, j, true);
    }
    for (j, &color) in colors.iter().enumerate() {
        next.set(old_rows + color - 1, j, true);
    }
    let next_state = InductionState::new(next, r)?;

    let k = state.k as u64;
    let r64 = r as u64;
    let denom = k + 2 - r64;
    let numer = binomial(state.k, r - 2) * (old_rows as u64 - k) + delta as u64 * denom;
    let trace = StepTrace {
        ones_per_column: state.k,
        rows_before: old_rows,
        delta_before: delta,
        colors_used,
        rows_after: new_rows,
        delta_after: next_state.delta,
        delta_bound: format!("{numer}/{denom}"),
        delta_bound_holds: next_state.delta as u64 * denom <= numer,
    };
    Ok((next_state, trace))
}

/// A run of the induction from all `r`-subsets of `m` rows up to `k` ones per column.
#[derive(Clone, Debug)]
pub struct LowerBoundRun {
    pub base_delta: usize,
    pub state: InductionState,
    pub trace: Vec<StepTrace>,
}

impl LowerBoundRun {
    /// The witness as a lower-bound result: `C(m, r)` columns, not proven optimal.
    pub fn as_result(&self) -> ExtremalResult {
        ExtremalResult {
            value: ExtremalValue::Finite(self.state.matrix.cols() as u64),
            witness: Some(self.state.matrix.clone()),
            nodes_explored: self.trace.len() as u64,
            exact: false,
        }
    }
}

/// Witness that `ex_k(m', P_{r,2}) >= C(m, r)` for the row count `m'` reached.
pub fn lower_bound_p_r2(m: usize, r: usize, k: usize) -> Result<LowerBoundRun> {
    if r < 2 || k < r || m < r {
        return Err(Error::InvalidArgument(format!(
            "need k >= r >= 2 and m >= r, got m={m}, r={r}, k={k}"
        )));
    }
    let mut state = InductionState::base(m, r)?;
    let base_delta = state.delta;
    let mut trace = Vec::with_capacity(k - r);
    for _ in r..k {
        let (next, step) = coloring_induction_step(&state, r)?;
        trace.push(step);
        state = next;
    }
    Ok(LowerBoundRun {
        base_delta,
        state,
        trace,
    })
}
