use crate::containment::{contains_through, ColumnBits, CompiledPattern};
use crate::error::{Error, Result};
use crate::matrix::{Matrix01, PatternSet};

use super::{ExtremalResult, ExtremalValue};

/// Maximum weight of an `m x n` matrix avoiding every member of `set`.
///
/// Cells are decided in row-major order, one before zero. A branch is cut when
/// its weight so far, plus the open cells of the current row, plus the best
/// known weight of the rows still untouched cannot beat the incumbent. Those
/// per-height caps come from first solving the `t x n` problems for `t < m`,
/// which is valid because any set of rows of an avoider is itself an avoider.
///
/// Setting a cell to one only requires checking occurrences that pass through
/// that cell, since the matrix avoided the set before.
pub fn ex_weight(m: usize, n: usize, set: &PatternSet, budget: u64) -> Result<ExtremalResult> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("m and n must be at least 1".into()));
    }
    if set.iter().any(|p| p.is_zero() && p.rows() <= m && p.cols() <= n) {
        return Err(Error::NoAvoider);
    }
    let patterns: Vec<CompiledPattern> = set.iter().map(CompiledPattern::new).collect();

    let mut caps = vec![0usize; m + 1];
    let mut nodes = 0u64;
    let cap_budget = budget / 2;
    let mut caps_exact = true;
    for t in 1..m {
        if caps_exact {
            let mut s = WeightSearch::new(t, n, &patterns, &caps, cap_budget.saturating_sub(nodes));
            s.run();
            nodes += s.nodes;
            if s.exhausted {
                caps_exact = false;
            } else {
                caps[t] = s.best;
                continue;
            }
        }
        caps[t] = t * n;
    }

    let mut s = WeightSearch::new(m, n, &patterns, &caps, budget.saturating_sub(nodes));
    s.run();
    nodes += s.nodes;
    Ok(ExtremalResult {
        value: ExtremalValue::Finite(s.best as u64),
        witness: Some(s.witness),
        nodes_explored: nodes,
        exact: !s.exhausted,
    })
}

struct WeightSearch<'a> {
    m: usize,
    n: usize,
    patterns: &'a [CompiledPattern],
    caps: &'a [usize],
    host: ColumnBits,
    weight: usize,
    best: usize,
    witness: Matrix01,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl<'a> WeightSearch<'a> {
    fn new(m: usize, n: usize, patterns: &'a [CompiledPattern], caps: &'a [usize], budget: u64) -> Self {
        // the zero matrix avoids every pattern with a one, so it seeds the incumbent
        WeightSearch {
            m,
            n,
            patterns,
            caps,
            host: ColumnBits::new(m, n),
            weight: 0,
            best: 0,
            witness: Matrix01::zeros(m, n),
            nodes: 0,
            budget,
            exhausted: false,
        }
    }

    fn run(&mut self) {
        self.visit(0);
    }

    fn visit(&mut self, idx: usize) {
        if self.exhausted {
            return;
        }
        if self.nodes >= self.budget {
            self.exhausted = true;
            return;
        }
        self.nodes += 1;
        let total = self.m * self.n;
        if idx == total {
            if self.weight > self.best {
                self.best = self.weight;
                self.witness = self.host.to_matrix();
            }
            return;
        }
        let (i, j) = (idx / self.n, idx % self.n);
        let bound = self.weight + (self.n - j) + self.caps[self.m - i - 1];
        if bound <= self.best {
            return;
        }
        self.host.set(i, j, true);
        if self.patterns.iter().all(|p| !contains_through(&self.host, p, i, j)) {
            self.weight += 1;
            self.visit(idx + 1);
            self.weight -= 1;
        }
        self.host.set(i, j, false);
        self.visit(idx + 1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::avoids_all;
    use crate::patterns::{pattern_l, pattern_p};
    use crate::search::UNLIMITED;

    fn value(m: usize, n: usize, set: &PatternSet) -> u64 {
        let r = ex_weight(m, n, set, UNLIMITED).unwrap();
        assert!(r.exact);
        let w = r.witness.unwrap();
        assert!(avoids_all(&w, set));
        assert_eq!(w.weight() as u64, r.value.finite().unwrap());
        r.value.finite().unwrap()
    }

    #[test]
    fn one_per_row() {
        let set = PatternSet::single(pattern_p(1, 2));
        for n in 1..=5 {
            assert_eq!(value(n, n, &set), n as u64);
        }
    }

    #[test]
    fn pattern_taller_than_host() {
        assert_eq!(value(2, 2, &PatternSet::single(pattern_l(1).unwrap())), 4);
    }

    #[test]
    fn single_one_pattern_forbids_everything() {
        assert_eq!(value(3, 2, &PatternSet::single(Matrix01::ones(1, 1))), 0);
    }

    #[test]
    fn zarankiewicz_small_values() {
        // z(n; 2, 2) for n = 2..5 is 3, 6, 9, 12
        let set = PatternSet::single(pattern_p(2, 2));
        let expected = [3, 6, 9, 12];
        for (n, want) in (2..=5).zip(expected) {
            assert_eq!(value(n, n, &set), want);
        }
    }

    #[test]
    fn zero_pattern_has_no_avoider() {
        let set = PatternSet::single(Matrix01::zeros(1, 2));
        assert_eq!(ex_weight(2, 2, &set, UNLIMITED), Err(Error::NoAvoider));
        assert_eq!(value(2, 1, &set), 2);
    }

    #[test]
    fn budget_gives_lower_bound() {
        let set = PatternSet::single(pattern_p(2, 2));
        let r = ex_weight(5, 5, &set, 50).unwrap();
        assert!(!r.exact);
        assert!(r.value.finite().unwrap() <= 12);
        assert!(avoids_all(r.witness.as_ref().unwrap(), &set));
        assert!(r.nodes_explored <= 50);
    }
}
