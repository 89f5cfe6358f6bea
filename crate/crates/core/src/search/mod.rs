//! Exact weight and column extremal values by pruned exhaustive search.
//!
//! Both searches are deterministic: candidates are tried in a fixed order and
//! the first optimal witness encountered is the one returned. Budgets count
//! search nodes, so a run that stops early stops at the same place every time.

mod checks;
mod columns;
mod weight;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::matrix::Matrix01;

pub use checks::{
    check_lemma_reverse, check_monotonicity, check_rect_max, check_theorem_rangeo, fit_reverse_certificate,
    InequalityReport, MonotoneReport, Quantity, Route,
};
pub use columns::{classify_column_query, ex_columns, ex_columns_with, ColumnBound, ColumnExtremalQuery};
pub use weight::ex_weight;

/// Node budget meaning "run to completion".
pub const UNLIMITED: u64 = u64::MAX;

/// An extremal value; column extremal functions can be infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtremalValue {
    Finite(u64),
    Unbounded,
}

impl ExtremalValue {
    pub fn finite(self) -> Option<u64> {
        match self {
            ExtremalValue::Finite(v) => Some(v),
            ExtremalValue::Unbounded => None,
        }
    }
}

impl fmt::Display for ExtremalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtremalValue::Finite(v) => write!(f, "{v}"),
            ExtremalValue::Unbounded => f.write_str("unbounded"),
        }
    }
}

impl Serialize for ExtremalValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtremalValue::Finite(v) => s.serialize_u64(*v),
            ExtremalValue::Unbounded => s.serialize_str("unbounded"),
        }
    }
}

/// Outcome of an extremal computation.
///
/// When `exact` is false the value is a witness-backed lower bound: the search
/// ran out of budget before proving optimality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalResult {
    pub value: ExtremalValue,
    pub witness: Option<Matrix01>,
    pub nodes_explored: u64,
    pub exact: bool,
}

impl ExtremalResult {
    pub(crate) fn exact(value: u64, witness: Matrix01, nodes: u64) -> Self {
        ExtremalResult {
            value: ExtremalValue::Finite(value),
            witness: Some(witness),
            nodes_explored: nodes,
            exact: true,
        }
    }

    pub(crate) fn unbounded() -> Self {
        ExtremalResult {
            value: ExtremalValue::Unbounded,
            witness: None,
            nodes_explored: 0,
            exact: true,
        }
    }
}
