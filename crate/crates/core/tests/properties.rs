use num_rational::Ratio;
use proptest::prelude::*;

use matex::constructions::{build_column_graph, cluster_split};
use matex::matrix::{contains, is_range_overlapping, Matrix01, PatternSet};
use matex::oracle::{contains_oracle, ex_columns_oracle, ex_weight_oracle, sweep_edges_oracle};
use matex::search::{ex_columns, ex_weight, ColumnExtremalQuery, UNLIMITED};
use matex::visibility::{sweep_edges, Bar, BarLayout};

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix01> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(any::<bool>(), r * c).prop_map(move |cells| {
            let rows: Vec<Vec<bool>> = cells.chunks(c).map(<[bool]>::to_vec).collect();
            Matrix01::from_bool_rows(&rows).unwrap()
        })
    })
}

/// Patterns with no empty column, as required for column ranges.
fn solid_pattern() -> impl Strategy<Value = Matrix01> {
    matrix(3, 3).prop_filter("every column has a one", |p| (0..p.cols()).all(|j| p.col_weight(j) > 0))
}

fn nonzero_pattern(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix01> {
    matrix(max_rows, max_cols).prop_filter("at least one one", |p| !p.is_zero())
}

fn layout() -> impl Strategy<Value = BarLayout> {
    (1usize..=9, 0usize..=2)
        .prop_flat_map(|(n, s)| {
            (
                Just(n),
                Just(s),
                Just((0..3 * n as i64).collect::<Vec<_>>()).prop_shuffle(),
                Just((0..n as i64).collect::<Vec<_>>()).prop_shuffle(),
            )
        })
        .prop_map(|(n, s, ends, ys)| {
            let bars = (0..n)
                .map(|i| {
                    let (a, b) = (ends[2 * i], ends[2 * i + 1]);
                    Bar::new(ys[i], Ratio::from_integer(a.min(b)), Ratio::from_integer(a.max(b)))
                })
                .collect();
            BarLayout::new(bars, s).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn containment_matches_oracle(host in matrix(6, 6), pat in matrix(3, 3)) {
        prop_assert_eq!(contains(&host, &pat), contains_oracle(&host, &pat));
    }

    #[test]
    fn containment_respects_symmetries(host in matrix(6, 6), pat in matrix(3, 3)) {
        let base = contains(&host, &pat);
        prop_assert_eq!(base, contains(&host.flip_h(), &pat.flip_h()));
        prop_assert_eq!(base, contains(&host.flip_v(), &pat.flip_v()));
        prop_assert_eq!(base, contains(&host.transpose(), &pat.transpose()));
    }

    #[test]
    fn containment_is_transitive_through_submatrices(host in matrix(6, 6), pat in matrix(3, 3)) {
        // every submatrix of the host contains only what the host contains
        let sub = host.select(&(0..host.rows()).step_by(2).collect::<Vec<_>>(), &(0..host.cols()).collect::<Vec<_>>());
        if contains(&sub, &pat) {
            prop_assert!(contains(&host, &pat));
        }
    }

    #[test]
    fn range_overlap_is_invariant_under_reflection(p in solid_pattern()) {
        let base = is_range_overlapping(&p).unwrap();
        prop_assert_eq!(base, is_range_overlapping(&p.flip_h()).unwrap());
        prop_assert_eq!(base, is_range_overlapping(&p.flip_v()).unwrap());
    }

    #[test]
    fn sweep_matches_oracle(l in layout()) {
        prop_assert_eq!(sweep_edges(&l), sweep_edges_oracle(&l));
    }

    #[test]
    fn sweep_edges_are_stable_under_reflection(l in layout()) {
        let mut a: Vec<(Vec<usize>, usize)> = sweep_edges(&l).into_iter().map(|e| (e.members.clone(), e.multiplicity())).collect();
        let mut b: Vec<(Vec<usize>, usize)> = sweep_edges(&l.reflect_h()).into_iter().map(|e| (e.members.clone(), e.multiplicity())).collect();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn cluster_split_shape(a in matrix(8, 6), k in 1usize..=4) {
        let out = cluster_split(&a, k).unwrap();
        let expected: usize = (0..a.cols()).map(|j| a.col_weight(j) / k).sum();
        prop_assert_eq!(out.cols(), expected);
        prop_assert!((0..out.cols()).all(|j| out.col_weight(j) == k));
        prop_assert!(a.weight() - out.weight() < k * a.cols().max(1));
    }

    #[test]
    fn column_graph_is_symmetric(a in matrix(6, 6), r in 2usize..=3) {
        let g = build_column_graph(&a, r).unwrap();
        for u in 0..g.vertex_count() {
            for &v in g.neighbors(u) {
                prop_assert!(g.has_edge(v, u));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn weight_search_matches_oracle(p in nonzero_pattern(3, 3), m in 1usize..=4, n in 1usize..=4) {
        let set = PatternSet::single(p);
        let fast = ex_weight(m, n, &set, UNLIMITED);
        let slow = ex_weight_oracle(m, n, &set);
        prop_assert_eq!(fast.map(|r| r.value), slow.map(|r| r.value));
    }

    #[test]
    fn weight_is_monotone_and_transposes(p in nonzero_pattern(3, 3), m in 1usize..=3, n in 1usize..=3) {
        let set = PatternSet::single(p.clone());
        let Ok(base) = ex_weight(m, n, &set, UNLIMITED) else { return Ok(()) };
        let wider = ex_weight(m, n + 1, &set, UNLIMITED).unwrap();
        prop_assert!(base.value <= wider.value);
        let t = ex_weight(n, m, &PatternSet::single(p.transpose()), UNLIMITED).unwrap();
        prop_assert_eq!(base.value, t.value);
    }

    #[test]
    fn column_search_matches_oracle(p in nonzero_pattern(3, 3), m in 1usize..=4, k in 1usize..=4) {
        let set = PatternSet::single(p);
        let fast = ColumnExtremalQuery::new(m, k, set.clone()).and_then(|q| ex_columns(&q, UNLIMITED));
        let slow = ex_columns_oracle(m, k, &set);
        prop_assert_eq!(fast.map(|r| r.value), slow.map(|r| r.value));
    }
}
