//! Reproducible verification suites.
//!
//! Each suite checks one family of finite statements (exact formulas,
//! inequalities, construction invariants, oracle agreement) and reports one
//! claim per case or per randomized batch. Randomized suites are seeded, and
//! claims are reported in a fixed order.

use std::fmt::Write as _;
use std::time::Instant;

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::comb::binomial;
use crate::constructions::{cluster_split, lower_bound_p_r2};
use crate::error::Result;
use crate::matrix::{avoids_all, contains, Matrix01, PatternSet};
use crate::oracle::{contains_oracle, sweep_edges_oracle};
use crate::patterns::{generate_t, pattern_l, pattern_p, TrsParams};
use crate::search::{
    check_lemma_reverse, check_monotonicity, check_rect_max, check_theorem_rangeo, ex_columns, ex_weight,
    fit_reverse_certificate, ColumnExtremalQuery, ExtremalValue, Route, UNLIMITED,
};
use crate::visibility::{edge_bound, matrix_to_visibility, sweep_edges, Bar, BarLayout};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Containment,
    Pigeonhole,
    Edges,
    Rangeo,
    Split,
    TFamily,
    Kvis,
    Induction,
    Monotone,
    Reverse,
    Boundary,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Containment,
        Suite::Pigeonhole,
        Suite::Edges,
        Suite::Rangeo,
        Suite::Split,
        Suite::TFamily,
        Suite::Kvis,
        Suite::Induction,
        Suite::Monotone,
        Suite::Reverse,
        Suite::Boundary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Containment => "containment",
            Suite::Pigeonhole => "pigeonhole",
            Suite::Edges => "edges",
            Suite::Rangeo => "rangeo",
            Suite::Split => "split",
            Suite::TFamily => "tfamily",
            Suite::Kvis => "kvis",
            Suite::Induction => "induction",
            Suite::Monotone => "monotone",
            Suite::Reverse => "reverse",
            Suite::Boundary => "boundary",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// Multiplier on the number of randomized trials.
    pub scale: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { scale: 1, seed: 0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub id: String,
    /// The statement being checked.
    pub anchor: &'static str,
    pub params: Value,
    pub status: Status,
    pub observed: Value,
    pub runtime_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub schema: &'static str,
    pub claims: Vec<Claim>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.status == Status::Pass)
    }

    pub fn to_table(&self) -> String {
        let width = self.claims.iter().map(|c| c.id.len()).max().unwrap_or(5).max(5);
        let mut out = String::new();
        let _ = writeln!(out, "{:<width$}  {:<6}  {:>9}  statement", "claim", "status", "ms");
        for c in &self.claims {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
            };
            let _ = writeln!(
                out,
                "{:<width$}  {:<6}  {:>9}  {}",
                c.id, status, c.runtime_ms, c.anchor
            );
        }
        let failed = self.claims.iter().filter(|c| c.status == Status::Fail).count();
        let _ = writeln!(out, "{} claims, {} failed", self.claims.len(), failed);
        out
    }
}

struct ClaimBuilder {
    id: String,
    anchor: &'static str,
    params: Value,
    start: Instant,
}

impl ClaimBuilder {
    fn new(id: impl Into<String>, anchor: &'static str, params: Value) -> Self {
        ClaimBuilder {
            id: id.into(),
            anchor,
            params,
            start: Instant::now(),
        }
    }

    fn finish(self, pass: bool, observed: Value) -> Claim {
        Claim {
            id: self.id,
            anchor: self.anchor,
            params: self.params,
            status: if pass { Status::Pass } else { Status::Fail },
            observed,
            runtime_ms: self.start.elapsed().as_millis(),
        }
    }

    fn finish_result(self, r: Result<(bool, Value)>) -> Claim {
        match r {
            Ok((pass, observed)) => self.finish(pass, observed),
            Err(e) => self.finish(false, json!({ "error": e.to_string() })),
        }
    }
}

pub fn run(suites: &[Suite], cfg: &VerifyConfig) -> VerifyReport {
    let mut ordered: Vec<Suite> = suites.to_vec();
    ordered.sort();
    ordered.dedup();
    let claims = ordered.into_iter().flat_map(|s| run_suite(s, cfg)).collect();
    VerifyReport { schema: "1", claims }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Vec<Claim> {
    match suite {
        Suite::Containment => containment(cfg),
        Suite::Pigeonhole => pigeonhole(),
        Suite::Edges => edges(cfg),
        Suite::Rangeo => rangeo(),
        Suite::Split => split(cfg),
        Suite::TFamily => t_family(),
        Suite::Kvis => kvis(cfg),
        Suite::Induction => induction(),
        Suite::Monotone => monotone(),
        Suite::Reverse => reverse(),
        Suite::Boundary => boundary(),
    }
}

pub fn diamond() -> Matrix01 {
    generate_t(TrsParams::new(1, 0)).patterns()[0].clone()
}

/// Uniformly random matrix with each cell set with probability `density`.
pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, density: f64) -> Matrix01 {
    let mut m = Matrix01::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            if rng.gen_bool(density) {
                m.set(i, j, true);
            }
        }
    }
    m
}

/// Visits cells in random order and sets each one whose addition keeps the
/// matrix avoiding `set`, stopping after `attempts` cells.
pub fn random_avoider(rng: &mut impl Rng, rows: usize, cols: usize, set: &PatternSet, attempts: usize) -> Matrix01 {
    let mut cells: Vec<(usize, usize)> = (0..rows).flat_map(|i| (0..cols).map(move |j| (i, j))).collect();
    cells.shuffle(rng);
    let mut m = Matrix01::zeros(rows, cols);
    for &(i, j) in cells.iter().take(attempts) {
        m.set(i, j, true);
        if !avoids_all(&m, set) {
            m.set(i, j, false);
        }
    }
    m
}

/// Random layout of `n` bars: `2n` distinct endpoints drawn from a range of
/// `4n` values over a common denominator, paired at random; random height order.
pub fn random_layout(rng: &mut impl Rng, n: usize, s: usize) -> BarLayout {
    let denom = rng.gen_range(1..=3);
    let mut pool: Vec<i64> = (0..4 * n as i64).collect();
    pool.shuffle(rng);
    let mut heights: Vec<i64> = (0..n as i64).collect();
    heights.shuffle(rng);
    let bars = (0..n)
        .map(|i| {
            let (a, b) = (pool[2 * i], pool[2 * i + 1]);
            Bar::new(heights[i], Ratio::new(a.min(b), denom), Ratio::new(a.max(b), denom))
        })
        .collect();
    BarLayout::new(bars, s).expect("distinct endpoints and heights")
}

fn all_matrices(rows: usize, cols: usize) -> impl Iterator<Item = Matrix01> {
    let cells = rows * cols;
    (0u32..1 << cells).map(move |mask| {
        let mut m = Matrix01::zeros(rows, cols);
        for b in 0..cells {
            if mask >> b & 1 == 1 {
                m.set(b / cols, b % cols, true);
            }
        }
        m
    })
}

fn containment(cfg: &VerifyConfig) -> Vec<Claim> {
    let mut claims = Vec::new();
    let trials = 10_000 * cfg.scale;
    let c = ClaimBuilder::new(
        "containment/random",
        "contains agrees with exhaustive index-subset enumeration",
        json!({ "pairs": trials, "host_max": [8, 8], "pattern_max": [3, 4], "seed": cfg.seed }),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut mismatches = Vec::new();
    let mut positives = 0;
    for _ in 0..trials {
        let (hr, hc, hd) = (rng.gen_range(1..=8), rng.gen_range(1..=8), rng.gen_range(0.2..0.9));
        let host = random_matrix(&mut rng, hr, hc, hd);
        let (pr, pc, pd) = (rng.gen_range(1..=3), rng.gen_range(1..=4), rng.gen_range(0.2..0.9));
        let pat = random_matrix(&mut rng, pr, pc, pd);
        let fast = contains(&host, &pat);
        positives += fast as usize;
        if fast != contains_oracle(&host, &pat) && mismatches.len() < 5 {
            mismatches.push(json!({ "host": host.to_text(), "pattern": pat.to_text() }));
        }
    }
    claims.push(c.finish(
        mismatches.is_empty(),
        json!({ "contained": positives, "mismatches": mismatches }),
    ));

    let c = ClaimBuilder::new(
        "containment/exhaustive-3x3",
        "contains agrees with enumeration on every 3x3 host and every pattern up to 3x3",
        json!({}),
    );
    let hosts: Vec<Matrix01> = all_matrices(3, 3).collect();
    let mut checked = 0usize;
    let mut bad = 0usize;
    for pr in 1..=3 {
        for pc in 1..=3 {
            for pat in all_matrices(pr, pc) {
                for host in &hosts {
                    checked += 1;
                    bad += (contains(host, &pat) != contains_oracle(host, &pat)) as usize;
                }
            }
        }
    }
    claims.push(c.finish(bad == 0, json!({ "pairs": checked, "mismatches": bad })));
    claims
}

fn pigeonhole() -> Vec<Claim> {
    let mut claims = Vec::new();
    for m in 1..=6 {
        for k in 1..=m.min(3) {
            for c in [2, 3] {
                let b = ClaimBuilder::new(
                    format!("pigeonhole/m={m},k={k},c={c}"),
                    "ex_k(m, P_{k,c}) = (c-1) * C(m,k)",
                    json!({ "m": m, "k": k, "c": c }),
                );
                let expected = (c as u64 - 1) * binomial(m, k);
                let r = ColumnExtremalQuery::new(m, k, PatternSet::single(pattern_p(k, c)))
                    .and_then(|q| ex_columns(&q, UNLIMITED))
                    .map(|res| {
                        let ok = res.exact && res.value == ExtremalValue::Finite(expected);
                        (ok, json!({ "value": res.value, "expected": expected, "exact": res.exact, "nodes": res.nodes_explored }))
                    });
                claims.push(b.finish_result(r));
            }
        }
    }
    claims
}

fn edges(cfg: &VerifyConfig) -> Vec<Claim> {
    let total = 1000 * cfg.scale;
    let b = ClaimBuilder::new(
        "edges/bound",
        "a bar s-visibility hypergraph on n bars has at most (2s+3)n edges",
        json!({ "layouts": total, "n_max": 50, "s": [0, 1, 2, 3], "seed": cfg.seed }),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xed9e);
    let mut layouts = Vec::with_capacity(total);
    for t in 0..total {
        let n = if t % 2 == 0 {
            rng.gen_range(1..=12)
        } else {
            rng.gen_range(13..=50)
        };
        let s = rng.gen_range(0..=3);
        layouts.push(random_layout(&mut rng, n, s));
    }
    let swept: Vec<_> = layouts.iter().map(sweep_edges).collect();
    let mut worst = 0.0f64;
    let mut violations = 0;
    for (l, e) in layouts.iter().zip(&swept) {
        let bound = edge_bound(l.len(), l.s());
        violations += (e.len() > bound) as usize;
        if bound > 0 {
            worst = worst.max(e.len() as f64 / bound as f64);
        }
    }
    let mut claims = vec![b.finish(violations == 0, json!({ "violations": violations, "max_ratio": worst }))];

    let b = ClaimBuilder::new(
        "edges/oracle",
        "sweep edges equal gap-enumeration edges (with multiplicities) for n <= 12",
        json!({ "seed": cfg.seed }),
    );
    let mut compared = 0;
    let mut mismatches = Vec::new();
    for (l, e) in layouts.iter().zip(&swept) {
        if l.len() > 12 {
            continue;
        }
        compared += 1;
        if *e != sweep_edges_oracle(l) && mismatches.len() < 3 {
            mismatches.push(l.to_text());
        }
    }
    claims.push(b.finish(
        mismatches.is_empty(),
        json!({ "compared": compared, "mismatches": mismatches }),
    ));
    claims
}

fn rangeo() -> Vec<Claim> {
    let mut claims = Vec::new();
    for (name, p) in [("P22", pattern_p(2, 2)), ("diamond", diamond())] {
        for k in 1..=3 {
            let b = ClaimBuilder::new(
                format!("rangeo/{name},k={k}"),
                "ex(m,n,P) <= k(ex_k(m,P) + n) for range-overlapping P",
                json!({ "pattern": p.to_text(), "k": k, "m_max": 4, "n_max": 4, "route": "oracle" }),
            );
            let r = (|| {
                let mut rows = Vec::new();
                let mut ok = true;
                for m in 1..=4 {
                    for n in 1..=4 {
                        let rep = check_theorem_rangeo(&p, m, n, k, Route::Oracle)?;
                        ok &= rep.holds;
                        rows.push(json!([m, n, rep.lhs, rep.rhs]));
                    }
                }
                Ok((ok, json!({ "m_n_lhs_rhs": rows })))
            })();
            claims.push(b.finish_result(r));
        }
    }
    claims
}

fn split(cfg: &VerifyConfig) -> Vec<Claim> {
    let mut claims = Vec::new();
    for (name, p) in [("P22", pattern_p(2, 2)), ("diamond", diamond())] {
        let trials = 1000 * cfg.scale;
        let b = ClaimBuilder::new(
            format!("split/{name}"),
            "cluster splitting an avoider of a range-overlapping pattern keeps it an avoider, and weight(A) <= k(cols(A') + cols(A))",
            json!({ "matrices": trials, "max_dims": [10, 10], "k": [2, 3], "seed": cfg.seed }),
        );
        let set = PatternSet::single(p.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5911);
        let mut failures = Vec::new();
        for _ in 0..trials {
            let (rows, cols) = (rng.gen_range(1..=10), rng.gen_range(1..=10));
            let attempts = rng.gen_range(0..=rows * cols);
            let a = random_avoider(&mut rng, rows, cols, &set, attempts);
            for k in [2, 3] {
                let out = cluster_split(&a, k).expect("k >= 1");
                let keeps = avoids_all(&out, &set);
                let weight_ok = a.weight() <= k * (out.cols() + a.cols());
                if !(keeps && weight_ok) && failures.len() < 5 {
                    failures.push(json!({ "a": a.to_text(), "k": k }));
                }
            }
        }
        claims.push(b.finish(failures.is_empty(), json!({ "failures": failures })));
    }
    claims
}

fn t_family() -> Vec<Claim> {
    let mut claims = Vec::new();
    let b = ClaimBuilder::new(
        "tfamily/diamond",
        "T_{1,0} is the single 3x3 diamond",
        json!({ "r": 1, "s": 0 }),
    );
    let t10 = generate_t(TrsParams::new(1, 0));
    let ok = t10.len() == 1 && t10.patterns()[0].to_text() == "010\n101\n010";
    claims.push(b.finish(ok, json!({ "members": t10.to_text() })));

    let b = ClaimBuilder::new(
        "tfamily/counts",
        "|T_{r,s}| = ((s+1)!)^2 r!",
        json!({ "r_max": 3, "s_max": 1 }),
    );
    let mut counts = Vec::new();
    let mut ok = true;
    for r in 0..=3 {
        for s in 0..=1 {
            let p = TrsParams::new(r, s);
            let n = generate_t(p).len();
            ok &= n == p.member_count();
            counts.push(json!([r, s, n]));
        }
    }
    claims.push(b.finish(ok, json!({ "r_s_count": counts })));

    let b = ClaimBuilder::new(
        "tfamily/contains-L3",
        "every member of T_{r,s} contains L3 for r >= 3, s >= 1",
        json!({ "r": 3, "s": 1 }),
    );
    let l3 = pattern_l(3).expect("L3 exists");
    let t31 = generate_t(TrsParams::new(3, 1));
    let missing = t31.iter().filter(|m| !contains(m, &l3)).count();
    claims.push(b.finish(missing == 0, json!({ "members": t31.len(), "missing": missing })));
    claims
}

fn kvis(cfg: &VerifyConfig) -> Vec<Claim> {
    let mut claims = Vec::new();
    let b = ClaimBuilder::new(
        "kvis/exhaustive-r1s0",
        "diamond avoiders map to hypergraphs without edges, so weight <= 4n",
        json!({ "n": [3, 4], "r": 1, "s": 0 }),
    );
    let set = generate_t(TrsParams::new(1, 0));
    let mut avoiders = 0;
    let mut bad = 0;
    let mut heaviest = 0;
    for n in [3, 4] {
        for m in all_matrices(n, n) {
            if !avoids_all(&m, &set) {
                continue;
            }
            avoiders += 1;
            heaviest = heaviest.max(m.weight());
            let vis = matrix_to_visibility(&m, 1, 0).expect("matrix-derived layouts are valid");
            if !vis.edges.is_empty() || m.weight() > 4 * n {
                bad += 1;
            }
        }
    }
    claims.push(b.finish(
        bad == 0,
        json!({ "avoiders": avoiders, "violations": bad, "max_weight": heaviest }),
    ));

    for (r, s) in [(2, 0), (1, 1), (3, 1)] {
        let per_n = 10 * cfg.scale;
        let b = ClaimBuilder::new(
            format!("kvis/random-r{r}s{s}"),
            "T_{r,s} avoiders give edge multiplicity <= r-1 and weight <= (3s+3+r)n + (r-1)(2s+3)(n-r)",
            json!({ "n_max": 12, "per_n": per_n, "r": r, "s": s, "seed": cfg.seed }),
        );
        let set = generate_t(TrsParams::new(r, s));
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (r * 31 + s) as u64);
        let mut failures = Vec::new();
        let mut worst_mult = 0;
        let mut cases = 0;
        for n in 1..=12 {
            for _ in 0..per_n {
                let m = random_avoider(&mut rng, n, n, &set, n * n);
                cases += 1;
                let vis = matrix_to_visibility(&m, r, s).expect("valid layout");
                let mult = vis.max_multiplicity();
                worst_mult = worst_mult.max(mult);
                let bound = crate::visibility::kvis_weight_bound(n, r, s);
                if (mult + 1 > r || m.weight() as i64 > bound) && failures.len() < 5 {
                    failures.push(json!({ "matrix": m.to_text(), "multiplicity": mult, "bound": bound }));
                }
            }
        }
        claims.push(b.finish(
            failures.is_empty(),
            json!({ "cases": cases, "max_multiplicity": worst_mult, "failures": failures }),
        ));
    }
    claims
}

fn induction() -> Vec<Claim> {
    let mut claims = Vec::new();
    for m in 2..=5 {
        for k in 2..=4 {
            let b = ClaimBuilder::new(
                format!("induction/m={m},k={k}"),
                "greedy-coloring induction gives C(m,2) columns with k ones each avoiding P_{2,2}",
                json!({ "m": m, "r": 2, "k": k }),
            );
            let r = lower_bound_p_r2(m, 2, k).map(|run| {
                let w = &run.state.matrix;
                let cols_ok = w.cols() as u64 == binomial(m, 2);
                let ones_ok = (0..w.cols()).all(|j| w.col_weight(j) == k);
                let avoid_ok = !contains(w, &pattern_p(2, 2));
                let colors_ok = run.trace.iter().all(|t| t.colors_used <= t.delta_before + 1);
                let base_ok = run.base_delta <= 2 * (m - 2);
                let delta_ok = run.trace.iter().all(|t| t.delta_bound_holds);
                (
                    cols_ok && ones_ok && avoid_ok && colors_ok && base_ok && delta_ok,
                    json!({
                        "columns": w.cols(), "rows": w.rows(), "base_delta": run.base_delta,
                        "steps": run.trace,
                    }),
                )
            });
            claims.push(b.finish_result(r));
        }
    }
    claims
}

fn monotone() -> Vec<Claim> {
    let mut claims = Vec::new();
    let set = PatternSet::single(pattern_p(2, 2));
    let b = ClaimBuilder::new(
        "monotone/P22,m=4",
        "ex_k(m, P) is nonincreasing in k",
        json!({ "m": 4, "k": [1, 6] }),
    );
    let r = check_monotonicity(4, &set, 1..=6).map(|rep| {
        let tail_zero = rep
            .values
            .iter()
            .filter(|(k, _)| *k > 4)
            .all(|(_, v)| *v == ExtremalValue::Finite(0));
        let unbounded_only_low = rep
            .values
            .iter()
            .all(|(k, v)| (*v == ExtremalValue::Unbounded) == (*k < 2));
        (
            rep.nonincreasing && tail_zero && unbounded_only_low,
            serde_json::to_value(&rep).unwrap_or_default(),
        )
    });
    claims.push(b.finish_result(r));

    for (name, set, m, n) in [
        ("P22", PatternSet::single(pattern_p(2, 2)), 2, 4),
        ("diamond", PatternSet::single(diamond()), 3, 4),
        ("P22", PatternSet::single(pattern_p(2, 2)), 3, 3),
    ] {
        let b = ClaimBuilder::new(
            format!("monotone/rect-max-{name},m={m},n={n}"),
            "exs(m,n,S) <= max(exs(m,S), exs(n,S))",
            json!({ "m": m, "n": n }),
        );
        let r = check_rect_max(m, n, &set, Route::Oracle)
            .map(|rep| (rep.holds, serde_json::to_value(&rep).unwrap_or_default()));
        claims.push(b.finish_result(r));
    }
    claims
}

fn reverse() -> Vec<Claim> {
    let set = PatternSet::single(pattern_p(2, 2));
    let b = ClaimBuilder::new(
        "reverse/P22,m=3",
        "exs(m,n,S) <= g + cn for all n implies exs_k(m,S) <= g/(k-c)",
        json!({ "m": 3, "c": 1, "n_max": 5, "k": [2, 3] }),
    );
    let r = (|| {
        let g = fit_reverse_certificate(&set, 3, 1, 5, Route::Oracle)?;
        let mut ok = true;
        let mut rows = Vec::new();
        for k in [2, 3] {
            let rep = check_lemma_reverse(&set, 3, k, 1, g, 5, Route::Oracle)?;
            ok &= rep.holds;
            rows.push(json!([k, rep.lhs, rep.rhs]));
        }
        Ok((ok, json!({ "g": g, "k_lhs_rhs": rows })))
    })();
    vec![b.finish_result(r)]
}

fn boundary() -> Vec<Claim> {
    let mut claims = Vec::new();
    let b = ClaimBuilder::new(
        "boundary/k-above-m",
        "exs_k(m,S) = 0 when k > m",
        json!({ "m": [1, 4], "k": "m+1..m+2" }),
    );
    let mut ok = true;
    for m in 1..=4 {
        for k in m + 1..=m + 2 {
            for p in [pattern_p(2, 2), diamond(), pattern_l(1).expect("L1")] {
                let q = ColumnExtremalQuery::new(m, k, PatternSet::single(p)).expect("valid");
                ok &= ex_columns(&q, UNLIMITED).map(|r| r.value) == Ok(ExtremalValue::Finite(0));
            }
        }
    }
    claims.push(b.finish(ok, json!({})));

    let b = ClaimBuilder::new(
        "boundary/unbounded",
        "exs_j(m,S) is infinite below the fewest rows with ones in any member",
        json!({ "m": 5, "k": 1, "pattern": "P22" }),
    );
    let r = ColumnExtremalQuery::new(5, 1, PatternSet::single(pattern_p(2, 2)))
        .and_then(|q| ex_columns(&q, UNLIMITED))
        .map(|res| (res.value == ExtremalValue::Unbounded, json!({ "value": res.value })));
    claims.push(b.finish_result(r));

    let b = ClaimBuilder::new(
        "boundary/cap",
        "exs_j(m,S) <= (c-1) C(m,k) for a member with k rows and c columns",
        json!({ "m": [1, 5] }),
    );
    let mut ok = true;
    let mut rows = Vec::new();
    for m in 1..=5 {
        for (p, k) in [
            (pattern_p(2, 2), 2),
            (pattern_p(2, 2), 3),
            (diamond(), 3),
            (pattern_p(1, 3), 1),
        ] {
            let cap = (p.cols() as u64 - 1) * binomial(m, p.rows());
            let q = ColumnExtremalQuery::new(m, k, PatternSet::single(p.clone())).expect("valid");
            match ex_columns(&q, UNLIMITED) {
                Ok(r) => {
                    ok &= r.exact && r.value.finite().is_some_and(|v| v <= cap);
                    rows.push(json!([m, k, p.to_text(), r.value, cap]));
                }
                Err(_) => ok = false,
            }
        }
    }
    claims.push(b.finish(ok, json!({ "m_k_pattern_value_cap": rows })));

    let b = ClaimBuilder::new(
        "boundary/weight-at-least-n",
        "ex(n, M) >= n for every M with at least two ones",
        json!({ "n_max": 5 }),
    );
    let mut patterns: Vec<Matrix01> = Vec::new();
    for (r, c) in [(1, 2), (2, 1), (2, 2), (1, 3), (3, 1)] {
        patterns.extend(all_matrices(r, c).filter(|m| m.weight() >= 2));
    }
    patterns.extend([
        diamond(),
        pattern_l(1).expect("L1"),
        pattern_l(2).expect("L2"),
        pattern_l(3).expect("L3"),
    ]);
    let mut ok = true;
    let mut low = Vec::new();
    for p in &patterns {
        let set = PatternSet::single(p.clone());
        for n in 1..=5 {
            match ex_weight(n, n, &set, UNLIMITED) {
                Ok(r) if r.value.finite().is_some_and(|v| v >= n as u64) && r.exact => {}
                other => {
                    ok = false;
                    low.push(json!({ "pattern": p.to_text(), "n": n, "result": format!("{other:?}") }));
                }
            }
        }
    }
    claims.push(b.finish(ok, json!({ "patterns": patterns.len(), "failures": low })));
    claims
}
