//! Acceptance run. Each criterion prints one PASS/FAIL line; any failure
//! makes the process exit non-zero.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use chordpoly::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const DIAGRAM_CASES: u64 = 600;
const DIAGRAM_MAX_CHORDS: usize = 7;
const DH_CASES: usize = 400;
const DH_MAX_N: usize = 10;
const CONSTRUCTION_CASES: u64 = 240;
const CONSTRUCTION_MAX_N: usize = 12;
const LARGE_N: usize = 10_000;

const CYCLE_BUDGET: Duration = Duration::from_secs(1);
const DIAGRAM_BUDGET: Duration = Duration::from_secs(120);
const DH_BUDGET: Duration = Duration::from_secs(180);
const LARGE_PSI_BUDGET: Duration = Duration::from_secs(1);
const LARGE_TREE_BUDGET: Duration = Duration::from_secs(2);

struct Report {
    failed: usize,
}

impl Report {
    fn line(&mut self, id: u32, name: &str, errors: &[String], detail: String) {
        let status = if errors.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {id:>2} {status} {name}: {detail}");
        for e in errors.iter().take(5) {
            println!("    {e}");
        }
        if !errors.is_empty() {
            self.failed += 1;
        }
    }
}

fn within(errors: &mut Vec<String>, took: Duration, budget: Duration) {
    if took > budget {
        errors.push(format!("took {took:?}, budget {budget:?}"));
    }
}

fn cycles(r: &mut Report) {
    let start = Instant::now();
    let mut errors = Vec::new();
    for n in 3..=16 {
        let d = canonical_cycle(n).unwrap();
        let (k, corners) = psi_r(&d).unwrap();
        let expected = if n == 3 { 2 } else { n.div_ceil(2) };
        if k != expected || !verify_corners(&d, &corners).unwrap() {
            errors.push(format!("C{n}: psi_r={k}, expected {expected}"));
        }
    }
    let took = start.elapsed();
    within(&mut errors, took, CYCLE_BUDGET);
    r.line(1, "canonical cycles", &errors, format!("n=3..16 in {took:?}"));
}

fn diagrams(r: &mut Report) {
    let start = Instant::now();
    let (mut e2, mut e3, mut e4) = (Vec::new(), Vec::new(), Vec::new());
    let mut nonclique = 0;
    for seed in 0..DIAGRAM_CASES {
        let n = 1 + (seed as usize) % DIAGRAM_MAX_CHORDS;
        let d = random_diagram(n, seed);
        let (k, _) = psi_r(&d).unwrap();
        let bf = bf_psi_r(&d).unwrap();
        if k != bf {
            e2.push(format!("seed={seed} {d}: psi_r={k} bf={bf}"));
        }
        let g = intersection_graph(&d);
        if !g.is_clique() {
            nonclique += 1;
            let (peripheral, _) = peripheral_chords(&d);
            let kp = bf_kappa(&g.induced_subgraph(&peripheral)).unwrap();
            if k != kp {
                e3.push(format!("seed={seed} {d}: psi_r={k} kappa(peripheral)={kp}"));
            }
            let kg = bf_kappa(&g).unwrap();
            if k > kg {
                e4.push(format!("seed={seed} {d}: psi_r={k} > kappa={kg}"));
            }
        }
        let series = max_series_independent(&d);
        if series > k {
            e4.push(format!("seed={seed} {d}: series={series} > psi_r={k}"));
        }
        if g.is_connected() {
            let (an, _) = bf_asteroidal_number(&g).unwrap();
            if an > k {
                e4.push(format!("seed={seed} {d}: an={an} > psi_r={k}"));
            }
        }
    }
    let took = start.elapsed();
    within(&mut e2, took, DIAGRAM_BUDGET);
    let cases = format!("{DIAGRAM_CASES} diagrams, n<={DIAGRAM_MAX_CHORDS}");
    r.line(2, "psi_r vs brute force", &e2, format!("{cases} in {took:?}"));
    r.line(3, "psi_r vs peripheral kappa", &e3, format!("{nonclique} nonclique of {cases}"));
    r.line(4, "lower and upper bounds", &e4, cases);
}

/// Construction favouring pendant steps, which gives tree-like graphs with
/// many pairwise far apart leaves.
fn pendant_heavy(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let steps = (0..n)
        .map(|i| {
            let kind = match i {
                0 => StepKind::Initial,
                1 => StepKind::Pendant(0),
                _ => {
                    let t = rng.gen_range(0..i);
                    match rng.gen_range(0..10) {
                        0..=6 => StepKind::Pendant(t),
                        7..=8 => StepKind::TrueTwin(t),
                        _ => StepKind::FalseTwin(t),
                    }
                }
            };
            Step { vertex: i, kind }
        })
        .collect();
    DhConstruction::new(steps).unwrap().replay()
}

/// Connected nonclique distance hereditary graphs with sizes cycling through
/// 3..=DH_MAX_N, alternating between the uniform and the pendant-heavy generator.
fn dh_corpus() -> Vec<Graph> {
    let mut out = Vec::new();
    let mut seed = 0u64;
    while out.len() < DH_CASES {
        let n = 3 + (seed as usize) % (DH_MAX_N - 2);
        let g = if seed.is_multiple_of(2) { random_dh(n, seed).0 } else { pendant_heavy(n, seed) };
        if !g.is_clique() {
            out.push(g);
        }
        seed += 1;
    }
    out
}

fn union(parts: &[&Graph]) -> Graph {
    let mut edges = Vec::new();
    let mut offset = 0;
    for g in parts {
        edges.extend(g.edges().into_iter().map(|(u, v)| (u + offset, v + offset)));
        offset += g.n();
    }
    Graph::from_edges(offset, &edges).unwrap()
}

fn dh_graphs(r: &mut Report) {
    let start = Instant::now();
    let corpus = dh_corpus();
    let (mut e5, mut e6, mut e8) = (Vec::new(), Vec::new(), Vec::new());
    let mut permutation = 0;
    let mut wide = 0;
    let mut psis = Vec::new();
    for (i, g) in corpus.iter().enumerate() {
        let report = dh_parameters(g).unwrap();
        let rep = build_polygon_rep(g).unwrap();
        let (an, _) = bf_asteroidal_number(g).unwrap();
        let (k, _) = psi_r(rep.diagram()).unwrap();
        if an >= 3 {
            wide += 1;
        }
        if report.pruned_leaves != an || rep.k() != an || k != an {
            e5.push(format!(
                "graph {i} n={}: leaves={} an={an} corners={} psi_r={k}",
                g.n(),
                report.pruned_leaves,
                rep.k()
            ));
        }
        if !verify_corners(rep.diagram(), rep.corners()).unwrap() {
            e5.push(format!("graph {i}: witness corners do not verify"));
        }
        if intersection_graph(rep.diagram()) != *g {
            e6.push(format!("graph {i} n={}: intersection graph differs", g.n()));
        }
        if report.is_permutation != (an <= 2) {
            e8.push(format!("graph {i}: is_permutation={} an={an}", report.is_permutation));
        }
        if report.is_permutation {
            permutation += 1;
            if rep.k() != 2 {
                e8.push(format!("graph {i}: permutation graph with {} corners", rep.k()));
            }
        }
        psis.push(report.psi);
    }
    let took = start.elapsed();
    within(&mut e5, took, DH_BUDGET);
    let cases = format!("{} graphs, n<={DH_MAX_N}", corpus.len());
    r.line(5, "DH identity", &e5, format!("{cases}, {wide} with an>=3, in {took:?}"));
    r.line(6, "representation fidelity", &e6, cases.clone());

    let mut e7 = Vec::new();
    let mut combos = 0;
    for i in 0..corpus.len() {
        let j = (i * 7 + 3) % corpus.len();
        let l = (i * 13 + 5) % corpus.len();
        for parts in [vec![i, j], vec![i, j, l]] {
            let graphs: Vec<&Graph> = parts.iter().map(|&p| &corpus[p]).collect();
            let g = union(&graphs);
            let report = dh_parameters(&g).unwrap();
            let sum: usize = parts.iter().map(|&p| psis[p]).sum();
            let expected = sum - 2 * (parts.len() - 1);
            if report.psi != expected {
                e7.push(format!("components {parts:?}: psi={} expected {expected}", report.psi));
            }
            if report.witness.corner_gaps.len() != expected {
                e7.push(format!("components {parts:?}: witness has {} corners", report.witness.corner_gaps.len()));
            }
            combos += 1;
        }
    }
    r.line(7, "disconnected formula", &e7, format!("{combos} pairs and triples"));
    r.line(8, "permutation characterization", &e8, format!("{permutation} permutation of {cases}"));
}

fn recomposition(r: &mut Report) {
    let mut errors = Vec::new();
    let mut edges = 0;
    for seed in 0..CONSTRUCTION_CASES {
        let n = 1 + (seed as usize) % CONSTRUCTION_MAX_N;
        let c = random_dh_construction(n, seed);
        let g = c.replay();
        let t = build_split_tree(&c);
        if join_recompose(&t) != g {
            errors.push(format!("seed={seed} n={n}: recomposition differs"));
        }
        for (a, _) in t.edges() {
            edges += 1;
            let (v1, v2) = t.edge_sides(a);
            if !is_split(&g, &v1, &v2).unwrap() {
                errors.push(format!("seed={seed} n={n}: tree edge at marker {a} is not a split"));
            }
        }
    }
    let detail = format!("{CONSTRUCTION_CASES} constructions, n<={CONSTRUCTION_MAX_N}, {edges} tree edges");
    r.line(9, "recomposition identity", &errors, detail);
}

fn performance(r: &mut Report) {
    let mut errors = Vec::new();
    let d = random_diagram(LARGE_N, 1);
    let start = Instant::now();
    let (k, _) = psi_r(&d).unwrap();
    let psi_took = start.elapsed();
    within(&mut errors, psi_took, LARGE_PSI_BUDGET);

    let c = random_dh_construction(LARGE_N, 1);
    let start = Instant::now();
    let t = build_split_tree(&c);
    let p = prune(&t);
    let tree_took = start.elapsed();
    within(&mut errors, tree_took, LARGE_TREE_BUDGET);

    let g = c.replay();
    let start = Instant::now();
    let recognized = recognize_dh(&g).unwrap().construction().is_some();
    let recognize_took = start.elapsed();
    if !recognized {
        errors.push("large random DH graph not recognized".into());
    }
    let detail = format!(
        "n={LARGE_N}: psi_r={k} in {psi_took:?}; split tree + prune ({} leaves) in {tree_took:?}; recognition in {recognize_took:?}",
        p.leaf_count()
    );
    r.line(10, "performance sanity", &errors, detail);
}

fn main() -> ExitCode {
    let mut r = Report { failed: 0 };
    cycles(&mut r);
    diagrams(&mut r);
    dh_graphs(&mut r);
    recomposition(&mut r);
    performance(&mut r);
    if r.failed == 0 {
        println!("all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("{} criteria failed", r.failed);
        ExitCode::FAILURE
    }
}
