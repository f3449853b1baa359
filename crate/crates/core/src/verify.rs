//! Seeded property suites comparing the fast algorithms with the oracles.
//!
//! Case `i` of a run uses seed `seed + i` and a size cycling through the
//! suite's range up to `n`, so any failure can be replayed from its line.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::dh::{random_dh, random_dh_construction};
use crate::diagram::{intersection_graph, max_series_independent, random_diagram};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::Oracle;
use crate::pipeline::{build_polygon_rep, dh_parameters};
use crate::polygon::{bf_psi_r, kappa_peripheral_with, psi_r, verify_corners, DEFAULT_CHORD_CAP};
use crate::split_tree::{build_split_tree, is_split, join_recompose, prune};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    PsiEqBf,
    PsiEqKappa,
    Bounds,
    DhIdentity,
    Recompose,
    Disconnected,
    Permutation,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::PsiEqBf,
        Suite::PsiEqKappa,
        Suite::Bounds,
        Suite::DhIdentity,
        Suite::Recompose,
        Suite::Disconnected,
        Suite::Permutation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::PsiEqBf => "psi-eq-bf",
            Suite::PsiEqKappa => "psi-eq-kappa",
            Suite::Bounds => "bounds",
            Suite::DhIdentity => "dh-identity",
            Suite::Recompose => "recompose",
            Suite::Disconnected => "disconnected",
            Suite::Permutation => "permutation",
            Suite::All => "all",
        }
    }

    fn on_diagrams(self) -> bool {
        matches!(self, Suite::PsiEqBf | Suite::PsiEqKappa | Suite::Bounds)
    }

    /// Size used when none is given.
    pub fn default_n(self) -> usize {
        if self.on_diagrams() {
            7
        } else {
            10
        }
    }

    fn min_n(self) -> usize {
        if self.on_diagrams() {
            1
        } else {
            3
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub suite: Suite,
    /// Largest instance size; `None` picks each suite's default.
    pub n: Option<usize>,
    pub count: usize,
    pub seed: u64,
    /// Vertex cap for the graph oracles.
    pub cap: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub suite: Suite,
    pub seed: u64,
    pub n: usize,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FAIL suite={} seed={} n={}: {}",
            self.suite, self.seed, self.n, self.detail
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub cases: usize,
    pub failures: Vec<Failure>,
}

impl Outcome {
    pub fn passed(&self) -> usize {
        self.cases - self.failures.len()
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn oracle_err(e: Error) -> String {
    e.to_string()
}

/// Runs the configured suite (each suite in turn for [`Suite::All`]).
pub fn run(cfg: &VerifyConfig) -> Result<Outcome> {
    let suites: Vec<Suite> = match cfg.suite {
        Suite::All => Suite::EACH.to_vec(),
        s => vec![s],
    };
    let mut total = Outcome::default();
    for s in suites {
        let out = run_one(s, cfg)?;
        total.cases += out.cases;
        total.failures.extend(out.failures);
    }
    Ok(total)
}

fn run_one(suite: Suite, cfg: &VerifyConfig) -> Result<Outcome> {
    let n = cfg.n.unwrap_or_else(|| suite.default_n());
    if n < suite.min_n() {
        return Err(Error::InvalidGraph(format!(
            "suite {suite} needs n >= {}",
            suite.min_n()
        )));
    }
    if n > cfg.cap {
        return Err(Error::OracleCap { size: n, cap: cfg.cap });
    }
    if suite == Suite::PsiEqBf && n > DEFAULT_CHORD_CAP {
        return Err(Error::OracleCap {
            size: n,
            cap: DEFAULT_CHORD_CAP,
        });
    }
    let oracle = Oracle::with_cap(cfg.cap);
    let span = n - suite.min_n() + 1;
    let failures: Vec<Failure> = (0..cfg.count)
        .into_par_iter()
        .filter_map(|i| {
            let seed = cfg.seed.wrapping_add(i as u64);
            let size = suite.min_n() + i % span;
            run_case(suite, size, seed, &oracle).err().map(|detail| Failure {
                suite,
                seed,
                n: size,
                detail,
            })
        })
        .collect();
    Ok(Outcome {
        cases: cfg.count,
        failures,
    })
}

/// Runs a single case of a suite.
pub fn run_case(suite: Suite, n: usize, seed: u64, oracle: &Oracle) -> Check {
    match suite {
        Suite::PsiEqBf => psi_eq_bf(n, seed),
        Suite::PsiEqKappa => psi_eq_kappa(n, seed, oracle),
        Suite::Bounds => bounds(n, seed, oracle),
        Suite::DhIdentity => dh_identity(n, seed, oracle),
        Suite::Recompose => recompose(n, seed),
        Suite::Disconnected => disconnected(n, seed, oracle),
        Suite::Permutation => permutation(n, seed, oracle),
        Suite::All => Suite::EACH.iter().try_for_each(|&s| run_case(s, n, seed, oracle)),
    }
}

fn psi_eq_bf(n: usize, seed: u64) -> Check {
    let d = random_diagram(n, seed);
    let (k, corners) = psi_r(&d).map_err(oracle_err)?;
    let bf = bf_psi_r(&d).map_err(oracle_err)?;
    ensure(k == bf, || format!("psi_r {k} != brute force {bf} on `{d}`"))?;
    ensure(corners.len() == k && verify_corners(&d, &corners).map_err(oracle_err)?, || {
        format!("corner witness for `{d}` does not verify")
    })
}

fn psi_eq_kappa(n: usize, seed: u64, oracle: &Oracle) -> Check {
    let d = random_diagram(n, seed);
    let (k, _) = psi_r(&d).map_err(oracle_err)?;
    if intersection_graph(&d).is_clique() {
        return ensure(k == 2, || format!("clique diagram `{d}` has psi_r {k}"));
    }
    let kappa = kappa_peripheral_with(&d, oracle).map_err(oracle_err)?;
    ensure(k == kappa, || {
        format!("psi_r {k} != peripheral clique cover {kappa} on `{d}`")
    })
}

fn bounds(n: usize, seed: u64, oracle: &Oracle) -> Check {
    let d = random_diagram(n, seed);
    let (k, _) = psi_r(&d).map_err(oracle_err)?;
    let g = intersection_graph(&d);
    let series = max_series_independent(&d);
    ensure(series <= k, || format!("series independence {series} > psi_r {k} on `{d}`"))?;
    if g.is_connected() {
        let (an, _) = oracle.asteroidal_number(&g).map_err(oracle_err)?;
        ensure(an <= k, || format!("an {an} > psi_r {k} on `{d}`"))?;
    }
    if !g.is_clique() {
        let kappa = oracle.kappa(&g).map_err(oracle_err)?;
        ensure(k <= kappa, || format!("psi_r {k} > kappa {kappa} on `{d}`"))?;
    }
    Ok(())
}

fn dh_identity(n: usize, seed: u64, oracle: &Oracle) -> Check {
    let (g, _) = random_dh(n, seed);
    let report = dh_parameters(&g).map_err(oracle_err)?;
    let rep = build_polygon_rep(&g).map_err(oracle_err)?;
    ensure(intersection_graph(rep.diagram()) == g, || {
        "witness intersection graph differs from the input".into()
    })?;
    ensure(verify_corners(rep.diagram(), rep.corners()).map_err(oracle_err)?, || {
        "witness corners do not verify".into()
    })?;
    ensure(rep.k() == report.psi, || {
        format!("witness has {} corners, psi is {}", rep.k(), report.psi)
    })?;
    if g.is_clique() {
        return ensure(report.psi == 2, || format!("clique reported psi {}", report.psi));
    }
    let (an, _) = oracle.asteroidal_number(&g).map_err(oracle_err)?;
    let (k, _) = psi_r(rep.diagram()).map_err(oracle_err)?;
    ensure(
        report.pruned_leaves == an && an == rep.k() && rep.k() == k,
        || {
            format!(
                "leaves {} / brute-force an {an} / witness corners {} / psi_r {k} disagree",
                report.pruned_leaves,
                rep.k()
            )
        },
    )?;
    let alpha = oracle.alpha(&g).map_err(oracle_err)?;
    let kappa = oracle.kappa(&g).map_err(oracle_err)?;
    ensure(
        report.psi <= alpha + 1 && report.psi <= n.div_ceil(2) && report.psi <= kappa,
        || format!("psi {} breaks a bound (alpha {alpha}, kappa {kappa})", report.psi),
    )
}

fn recompose(n: usize, seed: u64) -> Check {
    let c = random_dh_construction(n, seed);
    let g = c.replay();
    let t = build_split_tree(&c);
    t.check_invariants().map_err(oracle_err)?;
    ensure(join_recompose(&t) == g, || "recomposed graph differs from replay".into())?;
    for (a, _) in t.edges() {
        let (v1, v2) = t.edge_sides(a);
        ensure(is_split(&g, &v1, &v2).map_err(oracle_err)?, || {
            format!("tree edge {v1:?} | {v2:?} is not a split")
        })?;
    }
    let p = prune(&t);
    ensure(prune(&p) == p, || "pruning is not idempotent".into())
}

/// Components for the disconnected suite: two or three graphs of size up to `n`.
fn components(n: usize, seed: u64) -> Vec<Graph> {
    let r = 2 + (seed % 2) as usize;
    (0..r)
        .map(|j| {
            let s = seed.wrapping_mul(3).wrapping_add(j as u64);
            let size = 3 + (s as usize) % (n - 2);
            random_dh(size, s).0
        })
        .collect()
}

fn disjoint(parts: &[Graph]) -> Graph {
    let n = parts.iter().map(Graph::n).sum();
    let mut edges = Vec::new();
    let mut offset = 0;
    for h in parts {
        edges.extend(h.edges().into_iter().map(|(u, v)| (u + offset, v + offset)));
        offset += h.n();
    }
    Graph::from_edges(n, &edges).expect("disjoint copies")
}

fn disconnected(n: usize, seed: u64, oracle: &Oracle) -> Check {
    let parts = components(n, seed);
    let g = disjoint(&parts);
    let report = dh_parameters(&g).map_err(oracle_err)?;
    let mut psis = Vec::new();
    let mut ans = Vec::new();
    for h in &parts {
        let (an, _) = oracle.asteroidal_number(h).map_err(oracle_err)?;
        psis.push(if h.is_clique() { 2 } else { an });
        ans.push(an);
    }
    let expected = psis.iter().sum::<usize>() + 2 - 2 * parts.len();
    ensure(report.psi == expected, || {
        format!("psi {} != component formula {expected} ({psis:?})", report.psi)
    })?;
    let an = *ans.iter().max().expect("components");
    ensure(report.an == an, || format!("an {} != component maximum {an}", report.an))?;
    let w = report.witness.to_rep().map_err(oracle_err)?;
    ensure(intersection_graph(w.diagram()) == g, || {
        "witness intersection graph differs from the input".into()
    })?;
    ensure(verify_corners(w.diagram(), w.corners()).map_err(oracle_err)?, || {
        "witness corners do not verify".into()
    })?;
    let (k, _) = psi_r(w.diagram()).map_err(oracle_err)?;
    ensure(w.k() == report.psi && k == report.psi, || {
        format!("witness corners {} / psi_r {k} vs psi {}", w.k(), report.psi)
    })
}

fn permutation(n: usize, seed: u64, oracle: &Oracle) -> Check {
    let (g, _) = random_dh(n, seed);
    let report = dh_parameters(&g).map_err(oracle_err)?;
    let (an, _) = oracle.asteroidal_number(&g).map_err(oracle_err)?;
    ensure(report.is_permutation == (an <= 2), || {
        format!("is_permutation {} but brute-force an is {an}", report.is_permutation)
    })?;
    if report.is_permutation {
        let k = report.witness.corner_gaps.len();
        ensure(k == 2, || format!("permutation graph witness has {k} corners"))?;
    }
    Ok(())
}
