//! Finite checks of the inequalities relating weight and column extremal values.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::{is_range_overlapping, Matrix01, PatternSet};
use crate::oracle;

use super::{ex_columns, ex_weight, ColumnExtremalQuery, ExtremalResult, ExtremalValue, UNLIMITED};

/// Which implementation computes the extremal values inside a check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Branch-and-bound search.
    Search,
    /// Plain enumeration (weight side limited to 16 cells).
    Oracle,
}

/// An exact side of an inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantity {
    Int(i64),
    /// numerator / denominator, denominator positive
    Ratio(i64, i64),
    Infinite,
}

impl Quantity {
    fn from_value(v: ExtremalValue) -> Self {
        match v {
            ExtremalValue::Finite(x) => Quantity::Int(x as i64),
            ExtremalValue::Unbounded => Quantity::Infinite,
        }
    }

    /// `self <= other`, compared exactly.
    pub fn le(&self, other: &Quantity) -> bool {
        let frac = |q: &Quantity| match *q {
            Quantity::Int(a) => Some((a as i128, 1i128)),
            Quantity::Ratio(p, d) => Some((p as i128, d as i128)),
            Quantity::Infinite => None,
        };
        match (frac(self), frac(other)) {
            (_, None) => true,
            (None, Some(_)) => false,
            (Some((a, b)), Some((c, d))) => a * d <= c * b,
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Int(v) => write!(f, "{v}"),
            Quantity::Ratio(p, q) => write!(f, "{p}/{q}"),
            Quantity::Infinite => f.write_str("infinity"),
        }
    }
}

impl Serialize for Quantity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Quantity::Int(v) => s.serialize_i64(*v),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

/// `lhs <= rhs`, with both sides computed exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityReport {
    pub lhs: Quantity,
    pub rhs: Quantity,
    pub holds: bool,
}

impl InequalityReport {
    fn new(lhs: Quantity, rhs: Quantity) -> Self {
        InequalityReport {
            holds: lhs.le(&rhs),
            lhs,
            rhs,
        }
    }
}

fn require_exact(r: ExtremalResult) -> Result<ExtremalValue> {
    if r.exact {
        Ok(r.value)
    } else {
        Err(Error::Precondition("search did not finish".into()))
    }
}

pub(crate) fn weight_value(m: usize, n: usize, set: &PatternSet, route: Route) -> Result<u64> {
    let r = match route {
        Route::Search => ex_weight(m, n, set, UNLIMITED)?,
        Route::Oracle => oracle::ex_weight_oracle(m, n, set)?,
    };
    Ok(require_exact(r)?.finite().expect("weight values are finite"))
}

pub(crate) fn column_value(m: usize, k: usize, set: &PatternSet, route: Route) -> Result<ExtremalValue> {
    let r = match route {
        Route::Search => ex_columns(&ColumnExtremalQuery::new(m, k, set.clone())?, UNLIMITED)?,
        Route::Oracle => oracle::ex_columns_oracle(m, k, set)?,
    };
    require_exact(r)
}

/// For range-overlapping `p`: `ex(m, n, p) <= k * (ex_k(m, p) + n)`.
pub fn check_theorem_rangeo(p: &Matrix01, m: usize, n: usize, k: usize, route: Route) -> Result<InequalityReport> {
    if !is_range_overlapping(p)? {
        return Err(Error::Precondition("pattern is not range-overlapping".into()));
    }
    let set = PatternSet::single(p.clone());
    let lhs = weight_value(m, n, &set, route)?;
    let rhs = match column_value(m, k, &set, route)? {
        ExtremalValue::Finite(c) => Quantity::Int((k as u64 * (c + n as u64)) as i64),
        ExtremalValue::Unbounded => Quantity::Infinite,
    };
    Ok(InequalityReport::new(Quantity::Int(lhs as i64), rhs))
}

/// Smallest `g` with `exs(m, n, set) <= g + c*n` for every `n` in `1..=n_max`.
pub fn fit_reverse_certificate(set: &PatternSet, m: usize, c: u64, n_max: usize, route: Route) -> Result<u64> {
    let mut g = 0u64;
    for n in 1..=n_max {
        let w = weight_value(m, n, set, route)?;
        g = g.max(w.saturating_sub(c * n as u64));
    }
    Ok(g)
}

/// Given a certificate `exs(m, n, set) <= g_m + c*n` (checked for `n` in
/// `1..=n_max`), asserts `exs_k(m, set) <= g_m / (k - c)`.
pub fn check_lemma_reverse(
    set: &PatternSet,
    m: usize,
    k: usize,
    c: u64,
    g_m: u64,
    n_max: usize,
    route: Route,
) -> Result<InequalityReport> {
    if k as u64 <= c {
        return Err(Error::Precondition(format!("need k > c, got k={k}, c={c}")));
    }
    for n in 1..=n_max {
        let w = weight_value(m, n, set, route)?;
        if w > g_m + c * n as u64 {
            return Err(Error::Precondition(format!(
                "certificate fails at n={n}: exs({m},{n}) = {w} > {g_m} + {c}*{n}"
            )));
        }
    }
    let lhs = Quantity::from_value(column_value(m, k, set, route)?);
    let rhs = Quantity::Ratio(g_m as i64, k as i64 - c as i64);
    Ok(InequalityReport::new(lhs, rhs))
}

/// Column extremal values over a range of `k`, and whether they never increase.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonotoneReport {
    pub values: Vec<(usize, ExtremalValue)>,
    pub nonincreasing: bool,
}

pub fn check_monotonicity(m: usize, set: &PatternSet, ks: std::ops::RangeInclusive<usize>) -> Result<MonotoneReport> {
    let values = ks
        .map(|k| Ok((k, column_value(m, k, set, Route::Search)?)))
        .collect::<Result<Vec<_>>>()?;
    let nonincreasing = values.windows(2).all(|w| w[1].1 <= w[0].1);
    Ok(MonotoneReport { values, nonincreasing })
}

/// `exs(m, n, set) <= max(exs(m, set), exs(n, set))`.
pub fn check_rect_max(m: usize, n: usize, set: &PatternSet, route: Route) -> Result<InequalityReport> {
    let lhs = weight_value(m, n, set, route)?;
    let a = weight_value(m, m, set, route)?;
    let b = if n == m { a } else { weight_value(n, n, set, route)? };
    Ok(InequalityReport::new(
        Quantity::Int(lhs as i64),
        Quantity::Int(a.max(b) as i64),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{generate_t, pattern_p, TrsParams};

    #[test]
    fn rangeo_instances() {
        let r = check_theorem_rangeo(&pattern_p(2, 2), 3, 3, 2, Route::Search).unwrap();
        assert_eq!(r.lhs, Quantity::Int(6));
        assert_eq!(r.rhs, Quantity::Int(12));
        assert!(r.holds);
        let d = generate_t(TrsParams::new(1, 0)).patterns()[0].clone();
        let r = check_theorem_rangeo(&d, 3, 3, 1, Route::Oracle).unwrap();
        assert_eq!(r.rhs, Quantity::Infinite);
        assert!(r.holds);
        let gap = Matrix01::from_ones(3, 2, &[(0, 0), (2, 1)]);
        assert!(matches!(
            check_theorem_rangeo(&gap, 3, 3, 2, Route::Search),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn reverse_lemma_with_fitted_certificate() {
        let set = PatternSet::single(pattern_p(2, 2));
        let g = fit_reverse_certificate(&set, 3, 1, 5, Route::Oracle).unwrap();
        assert_eq!(g, 3);
        let r = check_lemma_reverse(&set, 3, 2, 1, g, 5, Route::Oracle).unwrap();
        assert_eq!((r.lhs, r.rhs, r.holds), (Quantity::Int(3), Quantity::Ratio(3, 1), true));
        assert!(matches!(
            check_lemma_reverse(&set, 3, 1, 1, g, 5, Route::Search),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            check_lemma_reverse(&set, 3, 2, 1, 2, 5, Route::Search),
            Err(Error::Precondition(_))
        ));
        // c = m certifies with g = 0
        let r = check_lemma_reverse(&set, 3, 4, 3, 0, 4, Route::Search).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn monotone_in_k() {
        let set = PatternSet::single(pattern_p(2, 2));
        let r = check_monotonicity(4, &set, 1..=6).unwrap();
        assert!(r.nonincreasing);
        assert_eq!(r.values[0].1, ExtremalValue::Unbounded);
        assert_eq!(r.values[1].1, ExtremalValue::Finite(6));
        assert_eq!(r.values[4].1, ExtremalValue::Finite(0));
    }

    #[test]
    fn rect_max() {
        let set = PatternSet::single(pattern_p(2, 2));
        assert!(check_rect_max(2, 4, &set, Route::Oracle).unwrap().holds);
        let sq = check_rect_max(3, 3, &set, Route::Search).unwrap();
        assert_eq!(sq.lhs, sq.rhs);
    }

    #[test]
    fn quantity_order() {
        assert!(Quantity::Int(3).le(&Quantity::Ratio(7, 2)));
        assert!(!Quantity::Ratio(7, 2).le(&Quantity::Int(3)));
        assert!(Quantity::Int(i64::MAX).le(&Quantity::Infinite));
        assert!(!Quantity::Infinite.le(&Quantity::Int(0)));
    }
}
