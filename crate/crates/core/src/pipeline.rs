//! Polygon number, asteroidal number and witness representations of distance
//! hereditary graphs, read off their pruned split decomposition trees.

use serde::{Deserialize, Serialize};

use crate::dh::{recognize_dh, DhRecognition};
use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph};
use crate::polygon::{CornerSet, PolygonRep};
use crate::represent::{combine_reps, disjoint_union, path_layout, slot_label, LabeledRep, Tok};
use crate::split_tree::{build_split_tree, path_order, prune_trace, SplitTree};

/// Plain form of a witness: the diagram word with chord labels equal to
/// vertex labels, and the corner gaps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub word: Vec<usize>,
    pub corner_gaps: Vec<usize>,
}

impl Witness {
    pub fn to_rep(&self) -> Result<PolygonRep> {
        PolygonRep::new(
            crate::diagram::ChordDiagram::new(self.word.clone())?,
            CornerSet::new(self.corner_gaps.clone()),
        )
    }
}

impl From<&PolygonRep> for Witness {
    fn from(rep: &PolygonRep) -> Self {
        Witness {
            word: rep.diagram().word().to_vec(),
            corner_gaps: rep.corners().gaps().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub vertices: Vec<usize>,
    pub psi: usize,
    pub an: usize,
    pub is_clique: bool,
    /// Is the pruned decomposition tree a path?
    pub pruned_path: bool,
    pub pruned_leaves: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DhReport {
    pub psi: usize,
    pub an: usize,
    pub is_permutation: bool,
    pub pruned_leaves: usize,
    pub components: Vec<ComponentReport>,
    pub witness: Witness,
}

/// Sum of per-component values less two for every extra component.
fn disconnected_total(values: impl Iterator<Item = usize>) -> usize {
    let (sum, r) = values.fold((0, 0), |(s, r), v| (s + v, r + 1));
    sum + 2 - 2 * r
}

struct Analysis {
    report: ComponentReport,
    rep: LabeledRep,
}

fn not_dh(vertex: usize) -> Error {
    Error::NotDistanceHereditary { vertex }
}

/// Analyses one connected graph; `names` maps its vertices to report labels.
fn analyze_connected(h: &Graph, names: &[usize]) -> Result<Analysis> {
    let n = h.n();
    if n <= 2 {
        let rep = small_rep(n);
        return Ok(Analysis {
            report: ComponentReport {
                vertices: names.to_vec(),
                psi: 2,
                an: 1,
                is_clique: true,
                pruned_path: true,
                pruned_leaves: 2,
            },
            rep: rep.relabeled(|l| names[l]),
        });
    }
    let construction = match recognize_dh(h)? {
        DhRecognition::Accepted(c) => c,
        DhRecognition::Rejected(_) => return Err(not_dh(names[0])),
    };
    let tree = build_split_tree(&construction);
    let rep = tree_rep(&tree)?;
    let (alive, _) = prune_trace(&tree);
    let leaves = live_leaf_count(&tree, &alive);
    let pruned_path = (0..alive.len()).filter(|&x| alive[x]).all(|x| live_degree(&tree, &alive, x) <= 2);
    let is_clique = h.is_clique();
    let (psi, an) = if is_clique { (2, 1) } else { (leaves, leaves) };
    Ok(Analysis {
        report: ComponentReport {
            vertices: names.to_vec(),
            psi,
            an,
            is_clique,
            pruned_path,
            pruned_leaves: leaves,
        },
        rep: rep.relabeled(|l| names[l]),
    })
}

fn small_rep(n: usize) -> LabeledRep {
    let mut tokens = vec![Tok::Corner];
    tokens.extend((0..n).map(Tok::End));
    tokens.push(Tok::Corner);
    tokens.extend((0..n).map(Tok::End));
    LabeledRep::from_tokens(tokens).expect("well formed")
}

fn live_degree(t: &SplitTree, alive: &[bool], x: usize) -> usize {
    t.adjacent(x).into_iter().filter(|&(_, y)| alive[y]).count()
}

fn live_leaf_count(t: &SplitTree, alive: &[bool]) -> usize {
    (0..alive.len())
        .filter(|&x| alive[x] && live_degree(t, alive, x) <= 1)
        .count()
        .max(2)
}

/// Builds a representation of the graph of a split tree with one corner per
/// leaf of its pruned tree (at least two).
fn tree_rep(t: &SplitTree) -> Result<LabeledRep> {
    let (alive, removals) = prune_trace(t);
    let mut live = alive.clone();
    let mut pieces = Vec::new();
    // Peel maximal pendant paths hanging off branch nodes until a path remains.
    loop {
        let deg = |x: usize| live_degree(t, &live, x);
        let nodes: Vec<usize> = (0..live.len()).filter(|&x| live[x]).collect();
        if nodes.iter().all(|&x| deg(x) <= 2) {
            break;
        }
        let start = *nodes.iter().find(|&&x| deg(x) <= 1).expect("a tree has leaves");
        let mut path = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = t
                .adjacent(cur)
                .into_iter()
                .map(|(_, y)| y)
                .find(|&y| live[y] && y != prev)
                .expect("a leaf of a branching tree has a neighbour");
            if deg(next) != 2 {
                break;
            }
            path.push(next);
            prev = cur;
            cur = next;
        }
        let (rep, out) = path_layout(t, |x| live[x], &path)?;
        let out = out.expect("pendant path hangs off a branch node");
        pieces.push((rep, out));
        for &x in &path {
            live[x] = false;
        }
    }
    let start = (0..live.len())
        .find(|&x| live[x] && live_degree(t, &live, x) <= 1)
        .expect("path has an end");
    let order = path_order(t, &live, start);
    let (mut rep, _) = path_layout(t, |x| live[x], &order)?;

    let partner_label = |label: usize| {
        let m = label - t.universe();
        t.universe() + t.marker(m).partner
    };
    for (piece, out) in pieces.into_iter().rev() {
        rep = combine_reps(&piece, out, &rep, partner_label(out))?;
    }

    // Pruned nodes return in reverse order; each one's marker is universal in
    // it, so its permutation diagram has the marker close to both corners.
    for r in removals.iter().rev() {
        let target = t.marker(t.marker(r.marker).partner).node;
        let (piece, out) = path_layout(t, |x| x == r.node || x == target, &[r.node])?;
        debug_assert_eq!(out, Some(slot_label(t, crate::split_tree::Slot::Marker(r.marker))));
        let out = out.expect("removed leaf had a neighbour");
        rep = combine_reps(&piece, out, &rep, partner_label(out))?;
    }
    Ok(rep)
}

fn to_plain(rep: &LabeledRep) -> Result<PolygonRep> {
    let (plain, labels) = rep.to_polygon_rep()?;
    debug_assert!(labels.iter().enumerate().all(|(i, &l)| i == l));
    Ok(plain)
}

/// Polygon representation of a connected distance hereditary graph whose
/// chord `v` represents vertex `v` and whose corner count is the polygon number.
pub fn build_polygon_rep(g: &Graph) -> Result<PolygonRep> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let names: Vec<usize> = (0..g.n()).collect();
    to_plain(&analyze_connected(g, &names)?.rep)
}

/// Polygon number, asteroidal number and permutation status of a distance
/// hereditary graph, with a witness representation.
///
/// Components are analysed separately. For cliques the polygon number is 2 and
/// the asteroidal number 1; otherwise both equal the leaf count of the pruned
/// decomposition tree. Over `r` components the polygon number is the sum less
/// `2(r - 1)` and the asteroidal number the maximum.
pub fn dh_parameters(g: &Graph) -> Result<DhReport> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut analyses = Vec::new();
    for comp in connected_components(g) {
        let h = g.induced_subgraph(&comp);
        analyses.push(analyze_connected(&h, &comp)?);
    }
    let psi = disconnected_total(analyses.iter().map(|a| a.report.psi));
    let pruned_leaves = disconnected_total(analyses.iter().map(|a| a.report.pruned_leaves));
    let an = analyses.iter().map(|a| a.report.an).max().expect("nonempty");
    let is_permutation = psi == 2 && analyses.iter().all(|a| a.report.pruned_path);

    let mut reps = analyses.iter().map(|a| &a.rep);
    let first = reps.next().expect("nonempty").clone();
    let witness = reps.try_fold(first, |acc, r| disjoint_union(&acc, r))?;
    let witness = to_plain(&witness)?;
    debug_assert_eq!(witness.k(), psi);

    Ok(DhReport {
        psi,
        an,
        is_permutation,
        pruned_leaves,
        components: analyses.into_iter().map(|a| a.report).collect(),
        witness: Witness::from(&witness),
    })
}
