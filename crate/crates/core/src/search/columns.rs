use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::comb::{binomial, k_subsets};
use crate::containment::{contains_ending_at_last_column, ColumnBits, CompiledPattern};
use crate::error::{Error, Result};
use crate::matrix::{Matrix01, PatternSet};

use super::{ExtremalResult, ExtremalValue, UNLIMITED};

/// Query for the column extremal function: `m` rows, at least `k` ones per column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnExtremalQuery {
    pub m: usize,
    pub k: usize,
    pub patterns: PatternSet,
}

impl ColumnExtremalQuery {
    pub fn new(m: usize, k: usize, patterns: PatternSet) -> Result<Self> {
        if m == 0 || k == 0 {
            return Err(Error::InvalidArgument("m and k must be at least 1".into()));
        }
        Ok(ColumnExtremalQuery { m, k, patterns })
    }
}

/// What is known about a column query before any search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColumnBound {
    /// `k > m`: no column can hold `k` ones.
    Zero,
    /// Every member needs more rows with ones than the `k` full rows of the
    /// trivial avoider provide.
    Unbounded,
    /// Some member has at most `k` rows; a matrix with more than
    /// `(c-1) * C(m, rows)` columns repeats some `rows`-subset of ones `c` times.
    Capped(u64),
    /// Neither certificate applies.
    Unknown,
}

pub fn classify_column_query(m: usize, k: usize, set: &PatternSet) -> ColumnBound {
    if k > m {
        return ColumnBound::Zero;
    }
    let min_one_rows = set
        .iter()
        .map(|p| (0..p.rows()).filter(|&i| p.row_weight(i) > 0).count())
        .min()
        .unwrap_or(0);
    if k < min_one_rows {
        return ColumnBound::Unbounded;
    }
    set.iter()
        .filter(|p| p.rows() <= k)
        .map(|p| (p.cols() as u64 - 1) * binomial(m, p.rows()))
        .min()
        .map_or(ColumnBound::Unknown, ColumnBound::Capped)
}

/// Exact column extremal value, with a node budget.
pub fn ex_columns(query: &ColumnExtremalQuery, budget: u64) -> Result<ExtremalResult> {
    ex_columns_with(query, budget, None)
}

/// As [`ex_columns`], optionally shuffling the order in which column types are tried.
///
/// Only columns with exactly `k` ones are tried: removing ones from a column
/// never creates an occurrence, so some optimal matrix has that form. Columns
/// are appended left to right, and a new column can only complete an
/// occurrence whose last column it is. The search stops as soon as the
/// incumbent meets the pigeonhole cap.
pub fn ex_columns_with(query: &ColumnExtremalQuery, budget: u64, shuffle_seed: Option<u64>) -> Result<ExtremalResult> {
    let (m, k) = (query.m, query.k);
    let cap = match classify_column_query(m, k, &query.patterns) {
        ColumnBound::Zero => return Ok(ExtremalResult::exact(0, Matrix01::zeros(m, 0), 0)),
        ColumnBound::Unbounded => return Ok(ExtremalResult::unbounded()),
        ColumnBound::Unknown => return Err(Error::UnknownBound { k }),
        ColumnBound::Capped(c) => usize::try_from(c).map_err(|_| Error::InvalidArgument("cap overflows".into()))?,
    };
    let mut candidates = k_subsets(m, k);
    if let Some(seed) = shuffle_seed {
        candidates.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let patterns: Vec<CompiledPattern> = query.patterns.iter().map(CompiledPattern::new).collect();
    let mut s = ColumnSearch {
        candidates: &candidates,
        patterns: &patterns,
        host: ColumnBits::new(m, 0),
        cap,
        current: Vec::new(),
        best: Vec::new(),
        nodes: 0,
        budget,
        exhausted: false,
    };
    s.visit();
    let columns: Vec<Vec<usize>> = s.best.iter().map(|&t| candidates[t].clone()).collect();
    Ok(ExtremalResult {
        value: ExtremalValue::Finite(columns.len() as u64),
        witness: Some(Matrix01::from_columns(m, &columns)),
        nodes_explored: s.nodes,
        exact: !s.exhausted || s.best.len() == cap,
    })
}

struct ColumnSearch<'a> {
    candidates: &'a [Vec<usize>],
    patterns: &'a [CompiledPattern],
    host: ColumnBits,
    cap: usize,
    current: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl ColumnSearch<'_> {
    fn done(&self) -> bool {
        self.exhausted || self.best.len() == self.cap
    }

    fn visit(&mut self) {
        if self.current.len() > self.best.len() {
            self.best.clone_from(&self.current);
        }
        if self.current.len() >= self.cap {
            return;
        }
        for t in 0..self.candidates.len() {
            if self.done() {
                return;
            }
            if self.budget != UNLIMITED && self.nodes >= self.budget {
                self.exhausted = true;
                return;
            }
            self.nodes += 1;
            self.host.push_column(&self.candidates[t]);
            if self
                .patterns
                .iter()
                .all(|p| !contains_ending_at_last_column(&self.host, p))
            {
                self.current.push(t);
                self.visit();
                self.current.pop();
            }
            self.host.pop_column();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::avoids_all;
    use crate::patterns::{generate_t, pattern_l, pattern_p, TrsParams};

    fn query(m: usize, k: usize, p: Matrix01) -> ColumnExtremalQuery {
        ColumnExtremalQuery::new(m, k, PatternSet::single(p)).unwrap()
    }

    #[test]
    fn all_ones_closed_form_instance() {
        let r = ex_columns(&query(3, 2, pattern_p(2, 2)), UNLIMITED).unwrap();
        assert_eq!(r.value, ExtremalValue::Finite(3));
        assert!(r.exact);
        let w = r.witness.unwrap();
        assert_eq!((w.rows(), w.cols()), (3, 3));
        assert!((0..3).all(|j| w.col_weight(j) == 2));
    }

    #[test]
    fn boundary_cases() {
        assert_eq!(
            ex_columns(&query(5, 1, pattern_p(2, 2)), UNLIMITED).unwrap().value,
            ExtremalValue::Unbounded
        );
        let zero = ex_columns(&query(2, 3, pattern_l(1).unwrap()), UNLIMITED).unwrap();
        assert_eq!(zero.value, ExtremalValue::Finite(0));
        assert_eq!(zero.witness.unwrap().cols(), 0);
        // T_{0,0} has one row of ones below a zero row: no certificate at k = 1
        let t00 = ColumnExtremalQuery::new(3, 1, generate_t(TrsParams::new(0, 0))).unwrap();
        assert_eq!(ex_columns(&t00, UNLIMITED), Err(Error::UnknownBound { k: 1 }));
        assert_eq!(classify_column_query(3, 2, &t00.patterns), ColumnBound::Capped(3));
    }

    #[test]
    fn diamond_three_rows() {
        let d = generate_t(TrsParams::new(1, 0)).patterns()[0].clone();
        let r = ex_columns(&query(3, 3, d.clone()), UNLIMITED).unwrap();
        assert_eq!(r.value, ExtremalValue::Finite(2));
        let r4 = ex_columns(&query(4, 3, d.clone()), UNLIMITED).unwrap();
        assert!(r4.exact);
        assert!(avoids_all(r4.witness.as_ref().unwrap(), &PatternSet::single(d)));
    }

    #[test]
    fn shuffled_order_agrees() {
        for (m, k, p) in [
            (4, 3, pattern_p(2, 2)),
            (4, 2, pattern_l(1).unwrap()),
            (5, 3, Matrix01::identity(3)),
        ] {
            let q = query(m, k, p);
            if classify_column_query(m, k, &q.patterns) == ColumnBound::Unknown {
                continue;
            }
            let base = ex_columns(&q, UNLIMITED).unwrap();
            for seed in 0..3 {
                assert_eq!(ex_columns_with(&q, UNLIMITED, Some(seed)).unwrap().value, base.value);
            }
        }
    }

    #[test]
    fn budget_stops_early() {
        let d = generate_t(TrsParams::new(1, 0)).patterns()[0].clone();
        let r = ex_columns(&query(5, 3, d), 3).unwrap();
        assert!(r.nodes_explored <= 3);
        assert!(r.value.finite().unwrap() <= 3);
    }
}
