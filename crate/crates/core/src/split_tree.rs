//! Split decomposition trees of distance hereditary graphs.
//!
//! Every node is a clique or a star whose vertices are either original graph
//! vertices or marker vertices; markers come in pairs, one per tree edge. The
//! graph is recovered by joining adjacent nodes across their marker pairs: two
//! original vertices are adjacent iff they can be linked through a chain of
//! node-internal edges that alternate with marker pairings.
//!
//! Trees are built from a [`DhConstruction`] one vertex at a time. For
//! distance hereditary graphs the standard decomposition has no prime nodes,
//! so a pendant or twin addition only ever inserts into a node or splits a
//! vertex off into a new three-vertex node.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dh::{DhConstruction, StepKind};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A vertex of a decomposition node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Vertex(usize),
    /// Index into the tree's marker table.
    Marker(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Clique,
    Star,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub kind: NodeKind,
    pub slots: Vec<Slot>,
    /// Index into `slots` of the star centre.
    pub center: Option<usize>,
}

impl Node {
    fn clique(slots: Vec<Slot>) -> Self {
        Node {
            kind: NodeKind::Clique,
            slots,
            center: None,
        }
    }

    fn star(slots: Vec<Slot>, center: usize) -> Self {
        Node {
            kind: NodeKind::Star,
            slots,
            center: Some(center),
        }
    }

    pub fn center_slot(&self) -> Option<Slot> {
        self.center.map(|i| self.slots[i])
    }

    /// Is `slot` adjacent to every other vertex of this node?
    pub fn is_universal(&self, slot: Slot) -> bool {
        match self.kind {
            NodeKind::Clique => true,
            NodeKind::Star => self.center_slot() == Some(slot),
        }
    }

    /// Node-internal neighbours of the slot at index `i`.
    pub fn neighbors_of(&self, i: usize) -> Vec<Slot> {
        match (self.kind, self.center) {
            (NodeKind::Star, Some(c)) if c != i => vec![self.slots[c]],
            _ => self
                .slots
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &s)| s)
                .collect(),
        }
    }

    pub fn markers(&self) -> impl Iterator<Item = usize> + '_ {
        self.slots.iter().filter_map(|s| match *s {
            Slot::Marker(m) => Some(m),
            Slot::Vertex(_) => None,
        })
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.slots.iter().filter_map(|s| match *s {
            Slot::Vertex(v) => Some(v),
            Slot::Marker(_) => None,
        })
    }
}

/// Where a marker lives and which marker it is paired with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MarkerInfo {
    pub node: usize,
    pub partner: usize,
}

/// A split decomposition tree whose nodes are cliques and stars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitTree {
    universe: usize,
    nodes: Vec<Node>,
    markers: Vec<MarkerInfo>,
}

impl SplitTree {
    /// Vertex count of the decomposed graph; labels lie in `0..universe`.
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn marker(&self, m: usize) -> MarkerInfo {
        self.markers[m]
    }

    pub fn marker_count(&self) -> usize {
        self.markers.len()
    }

    /// A single node with fewer than three vertices (graphs on one or two vertices).
    pub fn is_trivial(&self) -> bool {
        self.nodes.len() == 1 && self.nodes[0].slots.len() < 3
    }

    pub fn degree(&self, node: usize) -> usize {
        self.nodes[node].markers().count()
    }

    /// Tree neighbours as `(marker in node, node across the edge)`.
    pub fn adjacent(&self, node: usize) -> Vec<(usize, usize)> {
        self.nodes[node]
            .markers()
            .map(|m| (m, self.markers[self.markers[m].partner].node))
            .collect()
    }

    /// Tree edges as marker pairs `(a, b)` with `a < b`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.markers.len())
            .filter(|&m| m < self.markers[m].partner)
            .map(|m| (m, self.markers[m].partner))
            .collect()
    }

    /// Original vertices present in the tree, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.nodes.iter().flat_map(Node::vertices).collect();
        v.sort_unstable();
        v
    }

    /// Number of nodes of degree at most one, floored at 2.
    pub fn leaf_count(&self) -> usize {
        let leaves = (0..self.nodes.len()).filter(|&i| self.degree(i) <= 1).count();
        leaves.max(2)
    }

    /// Is every node of degree at most two?
    pub fn is_path(&self) -> bool {
        (0..self.nodes.len()).all(|i| self.degree(i) <= 2)
    }

    fn slot_index(&self, node: usize, slot: Slot) -> usize {
        self.nodes[node]
            .slots
            .iter()
            .position(|&s| s == slot)
            .expect("slot belongs to node")
    }

    /// Original vertices on each side of the tree edge through marker `m`:
    /// first the side containing `m`'s node, then the partner's side.
    pub fn edge_sides(&self, m: usize) -> (Vec<usize>, Vec<usize>) {
        let here = self.markers[m].node;
        let there = self.markers[self.markers[m].partner].node;
        let side = |start: usize, blocked: usize| {
            let mut seen = vec![false; self.nodes.len()];
            seen[start] = true;
            seen[blocked] = true;
            let mut stack = vec![start];
            let mut out = Vec::new();
            while let Some(x) = stack.pop() {
                out.extend(self.nodes[x].vertices());
                for (_, y) in self.adjacent(x) {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            out.sort_unstable();
            out
        };
        (side(here, there), side(there, here))
    }

    /// Checks the structural invariants of a standard clique/star decomposition.
    pub fn check_invariants(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSplit(msg));
        if self.nodes.is_empty() {
            return bad("tree has no nodes".into());
        }
        for (m, info) in self.markers.iter().enumerate() {
            let p = info.partner;
            if p >= self.markers.len() || self.markers[p].partner != m || p == m {
                return bad(format!("marker {m} is not paired symmetrically"));
            }
            if info.node >= self.nodes.len() || !self.nodes[info.node].slots.contains(&Slot::Marker(m)) {
                return bad(format!("marker {m} is not in its recorded node"));
            }
        }
        let mut seen_vertex = vec![false; self.universe];
        let mut seen_marker = vec![false; self.markers.len()];
        for (i, node) in self.nodes.iter().enumerate() {
            if node.slots.len() < 3 && !self.is_trivial() {
                return bad(format!("node {i} has fewer than three vertices"));
            }
            match (node.kind, node.center) {
                (NodeKind::Star, Some(c)) if c < node.slots.len() => {}
                (NodeKind::Clique, None) => {}
                _ => return bad(format!("node {i} has an inconsistent centre")),
            }
            for &s in &node.slots {
                let seen = match s {
                    Slot::Vertex(v) if v < self.universe => &mut seen_vertex[v],
                    Slot::Marker(m) if m < self.markers.len() => &mut seen_marker[m],
                    _ => return bad(format!("node {i} has an out-of-range slot {s:?}")),
                };
                if *seen {
                    return bad(format!("slot {s:?} appears twice"));
                }
                *seen = true;
            }
        }
        if seen_marker.iter().any(|&s| !s) {
            return bad("a marker is not placed in any node".into());
        }
        if self.edges().len() + 1 != self.nodes.len() {
            return bad("edge count does not match a tree".into());
        }
        let mut reached = vec![false; self.nodes.len()];
        let mut stack = vec![0];
        reached[0] = true;
        while let Some(x) = stack.pop() {
            for (_, y) in self.adjacent(x) {
                if !reached[y] {
                    reached[y] = true;
                    stack.push(y);
                }
            }
        }
        if reached.iter().any(|&r| !r) {
            return bad("tree is not connected".into());
        }
        for (a, b) in self.edges() {
            let (x, y) = (self.markers[a].node, self.markers[b].node);
            let (nx, ny) = (&self.nodes[x], &self.nodes[y]);
            match (nx.kind, ny.kind) {
                (NodeKind::Clique, NodeKind::Clique) => {
                    return bad(format!("clique nodes {x} and {y} are adjacent"))
                }
                (NodeKind::Star, NodeKind::Star) => {
                    let ca = nx.center_slot() == Some(Slot::Marker(a));
                    let cb = ny.center_slot() == Some(Slot::Marker(b));
                    if ca != cb {
                        return bad(format!(
                            "star nodes {x} and {y} pair a centre with a leaf"
                        ));
                    }
                }
                _ => {}
            }
        }
        Ok(())
    }
}

/// Incremental builder. Nodes are never removed during construction except
/// by standardization merges, which leave tombstones that are compacted at the end.
struct Builder {
    universe: usize,
    nodes: Vec<Option<Node>>,
    markers: Vec<MarkerInfo>,
    /// (node, slot index) of each placed original vertex.
    loc: Vec<(usize, usize)>,
}

impl Builder {
    fn new(universe: usize) -> Self {
        Builder {
            universe,
            nodes: Vec::new(),
            markers: Vec::new(),
            loc: vec![(usize::MAX, usize::MAX); universe],
        }
    }

    fn node(&self, i: usize) -> &Node {
        self.nodes[i].as_ref().expect("live node")
    }

    fn node_mut(&mut self, i: usize) -> &mut Node {
        self.nodes[i].as_mut().expect("live node")
    }

    fn add_node(&mut self, node: Node) -> usize {
        let id = self.nodes.len();
        for (i, s) in node.slots.iter().enumerate() {
            match *s {
                Slot::Vertex(v) => self.loc[v] = (id, i),
                Slot::Marker(m) => self.markers[m].node = id,
            }
        }
        self.nodes.push(Some(node));
        id
    }

    fn new_marker_pair(&mut self) -> (usize, usize) {
        let a = self.markers.len();
        self.markers.push(MarkerInfo { node: usize::MAX, partner: a + 1 });
        self.markers.push(MarkerInfo { node: usize::MAX, partner: a });
        (a, a + 1)
    }

    fn push_slot(&mut self, node: usize, slot: Slot) {
        let n = self.node_mut(node);
        n.slots.push(slot);
        let i = n.slots.len() - 1;
        match slot {
            Slot::Vertex(v) => self.loc[v] = (node, i),
            Slot::Marker(m) => self.markers[m].node = node,
        }
    }

    /// Replaces `u` in its node by a fresh marker and returns the partner
    /// marker, which the caller places in a new node with `u`.
    fn detach(&mut self, u: usize) -> usize {
        let (x, i) = self.loc[u];
        let (m1, m2) = self.new_marker_pair();
        self.node_mut(x).slots[i] = Slot::Marker(m1);
        self.markers[m1].node = x;
        m2
    }

    fn add(&mut self, v: usize, kind: StepKind) {
        let u = kind.target().expect("non-initial step");
        let (x, i) = self.loc[u];
        let (node_kind, center) = (self.node(x).kind, self.node(x).center);
        match kind {
            StepKind::TrueTwin(_) if node_kind == NodeKind::Clique => {
                self.push_slot(x, Slot::Vertex(v));
            }
            StepKind::TrueTwin(_) => {
                let m2 = self.detach(u);
                self.add_node(Node::clique(vec![Slot::Vertex(u), Slot::Vertex(v), Slot::Marker(m2)]));
                self.standardize(m2);
            }
            StepKind::FalseTwin(_) if node_kind == NodeKind::Star && center != Some(i) => {
                self.push_slot(x, Slot::Vertex(v));
            }
            StepKind::FalseTwin(_) => {
                let m2 = self.detach(u);
                self.add_node(Node::star(
                    vec![Slot::Marker(m2), Slot::Vertex(u), Slot::Vertex(v)],
                    0,
                ));
                self.standardize(m2);
            }
            StepKind::Pendant(_) if node_kind == NodeKind::Star && center == Some(i) => {
                self.push_slot(x, Slot::Vertex(v));
            }
            StepKind::Pendant(_) => {
                let m2 = self.detach(u);
                self.add_node(Node::star(
                    vec![Slot::Vertex(u), Slot::Vertex(v), Slot::Marker(m2)],
                    0,
                ));
                self.standardize(m2);
            }
            StepKind::Initial => unreachable!(),
        }
    }

    /// Merges across the edge through marker `m` while it violates the
    /// standard form (two cliques, or a star centre paired with a star leaf).
    fn standardize(&mut self, m: usize) {
        let p = self.markers[m].partner;
        let (x, y) = (self.markers[m].node, self.markers[p].node);
        let (nx, ny) = (self.node(x), self.node(y));
        match (nx.kind, ny.kind) {
            (NodeKind::Clique, NodeKind::Clique) => self.merge(m),
            (NodeKind::Star, NodeKind::Star) => {
                let cx = nx.center_slot() == Some(Slot::Marker(m));
                let cy = ny.center_slot() == Some(Slot::Marker(p));
                if cx != cy {
                    self.merge(m);
                }
            }
            _ => {}
        }
    }

    /// Replaces the two nodes joined by marker `m` with their join.
    fn merge(&mut self, m: usize) {
        let p = self.markers[m].partner;
        let (x, y) = (self.markers[m].node, self.markers[p].node);
        let nx = self.nodes[x].take().expect("live node");
        let ny = self.nodes[y].take().expect("live node");
        self.markers[m].node = usize::MAX;
        self.markers[p].node = usize::MAX;
        let keep = |n: &Node, gone: usize| -> Vec<Slot> {
            n.slots.iter().copied().filter(|&s| s != Slot::Marker(gone)).collect()
        };
        let merged = match nx.kind {
            NodeKind::Clique => {
                let mut slots = keep(&nx, m);
                slots.extend(keep(&ny, p));
                Node::clique(slots)
            }
            NodeKind::Star => {
                // The side whose marker is a leaf keeps its centre.
                let (leafy, leafy_marker, centred, centred_marker) =
                    if nx.center_slot() == Some(Slot::Marker(m)) {
                        (&ny, p, &nx, m)
                    } else {
                        (&nx, m, &ny, p)
                    };
                let center = leafy.center_slot().expect("star");
                let mut slots = vec![center];
                slots.extend(keep(leafy, leafy_marker).into_iter().filter(|&s| s != center));
                slots.extend(keep(centred, centred_marker));
                Node::star(slots, 0)
            }
        };
        let id = self.add_node(merged);
        let markers: Vec<usize> = self.node(id).markers().collect();
        for q in markers {
            self.standardize_if_live(q);
        }
    }

    fn standardize_if_live(&mut self, m: usize) {
        let p = self.markers[m].partner;
        if self.nodes[self.markers[m].node].is_some() && self.nodes[self.markers[p].node].is_some() {
            self.standardize(m);
        }
    }

    fn finish(self) -> SplitTree {
        let mut remap = vec![usize::MAX; self.nodes.len()];
        let mut nodes = Vec::new();
        for (i, n) in self.nodes.into_iter().enumerate() {
            if let Some(n) = n {
                remap[i] = nodes.len();
                nodes.push(n);
            }
        }
        // Markers consumed by merges are dropped and the rest renumbered.
        let mut marker_id = vec![usize::MAX; self.markers.len()];
        let mut markers = Vec::new();
        for (m, info) in self.markers.iter().enumerate() {
            if info.node != usize::MAX {
                marker_id[m] = markers.len();
                markers.push(MarkerInfo {
                    node: remap[info.node],
                    partner: info.partner,
                });
            }
        }
        for info in &mut markers {
            info.partner = marker_id[info.partner];
        }
        for node in &mut nodes {
            for s in &mut node.slots {
                if let Slot::Marker(m) = s {
                    *m = marker_id[*m];
                }
            }
        }
        SplitTree {
            universe: self.universe,
            nodes,
            markers,
        }
    }
}

/// Builds the standard split decomposition tree of the constructed graph.
///
/// Graphs on fewer than three vertices give a trivial one-node tree.
pub fn build_split_tree(c: &DhConstruction) -> SplitTree {
    let n = c.len();
    let steps = c.steps();
    let mut b = Builder::new(n);
    if n < 3 {
        b.add_node(Node::clique(steps.iter().map(|s| Slot::Vertex(s.vertex)).collect()));
        return b.finish();
    }
    // The first three vertices induce a triangle or a path.
    let g3 = c.replay_prefix(3);
    let first: Vec<usize> = steps[..3].iter().map(|s| s.vertex).collect();
    if first.iter().all(|&v| g3.degree(v) == 2) {
        b.add_node(Node::clique(first.iter().map(|&v| Slot::Vertex(v)).collect()));
    } else {
        let center = first.iter().position(|&v| g3.degree(v) == 2).expect("path centre");
        b.add_node(Node::star(first.iter().map(|&v| Slot::Vertex(v)).collect(), center));
    }
    for s in &steps[3..] {
        b.add(s.vertex, s.kind);
    }
    b.finish()
}

/// Recomposes the graph by joining all nodes across their marker pairs.
///
/// The result has `t.universe()` vertices; labels not present in the tree
/// (for pruned trees) are isolated.
pub fn join_recompose(t: &SplitTree) -> Graph {
    let mut g = Graph::empty(t.universe);
    for (x, node) in t.nodes.iter().enumerate() {
        for (i, &s) in node.slots.iter().enumerate() {
            let Slot::Vertex(a) = s else { continue };
            // Walk every chain of accessible slots leaving `a`.
            let mut stack: Vec<(usize, Slot)> =
                node.neighbors_of(i).into_iter().map(|s| (x, s)).collect();
            while let Some((_, slot)) = stack.pop() {
                match slot {
                    Slot::Vertex(b) => {
                        if a < b {
                            g.add_edge(a, b);
                        }
                    }
                    Slot::Marker(m) => {
                        let p = t.markers[m].partner;
                        let y = t.markers[p].node;
                        let j = t.slot_index(y, Slot::Marker(p));
                        stack.extend(t.nodes[y].neighbors_of(j).into_iter().map(|s| (y, s)));
                    }
                }
            }
        }
    }
    g
}

/// Is `{v1, v2}` a split of `g`? Both sides need two or more vertices and the
/// crossing edges must be exactly `N(v2) x N(v1)`.
pub fn is_split(g: &Graph, v1: &[usize], v2: &[usize]) -> Result<bool> {
    let n = g.n();
    let mut side = vec![0u8; n];
    for (tag, part) in [(1u8, v1), (2u8, v2)] {
        for &v in part {
            if v >= n || side[v] != 0 {
                return Err(Error::InvalidSplit(format!(
                    "vertex {v} is out of range or listed twice"
                )));
            }
            side[v] = tag;
        }
    }
    if side.contains(&0) {
        return Err(Error::InvalidSplit("sides do not cover every vertex".into()));
    }
    if v1.len() < 2 || v2.len() < 2 {
        return Ok(false);
    }
    let frontier = |part: &[usize], other: u8| -> Vec<usize> {
        part.iter()
            .copied()
            .filter(|&v| g.neighbors(v).any(|w| side[w] == other))
            .collect()
    };
    let a = frontier(v1, 2);
    let b = frontier(v2, 1);
    let crossing: usize = v1
        .iter()
        .map(|&v| g.neighbors(v).filter(|&w| side[w] == 2).count())
        .sum();
    Ok(crossing == a.len() * b.len() && a.iter().all(|&x| b.iter().all(|&y| g.has_edge(x, y))))
}

/// Record of one leaf removal during pruning.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Removal {
    /// Removed node, in the unpruned tree's numbering.
    pub node: usize,
    /// The removed leaf's marker; its partner became an ordinary vertex.
    pub marker: usize,
}

/// Leaves whose marker is universal within the leaf can be removed.
fn removable(t: &SplitTree, alive: &[bool], x: usize) -> Option<usize> {
    let mut live_markers = t.nodes[x]
        .markers()
        .filter(|&m| alive[t.markers[t.markers[m].partner].node]);
    let m = live_markers.next()?;
    if live_markers.next().is_some() {
        return None;
    }
    t.nodes[x].is_universal(Slot::Marker(m)).then_some(m)
}

/// Runs pruning with a chooser over the current removable leaves.
fn prune_with(t: &SplitTree, mut choose: impl FnMut(&BTreeSet<usize>) -> usize) -> (Vec<bool>, Vec<Removal>) {
    let mut alive = vec![true; t.nodes.len()];
    let mut ready: BTreeSet<usize> = (0..t.nodes.len())
        .filter(|&x| removable(t, &alive, x).is_some())
        .collect();
    let mut removals = Vec::new();
    while !ready.is_empty() {
        let x = choose(&ready);
        ready.remove(&x);
        let Some(m) = removable(t, &alive, x) else { continue };
        alive[x] = false;
        removals.push(Removal { node: x, marker: m });
        let y = t.markers[t.markers[m].partner].node;
        // y lost a tree edge: it may have become removable, or a lone node.
        ready.remove(&y);
        if removable(t, &alive, y).is_some() {
            ready.insert(y);
        }
    }
    (alive, removals)
}

pub(crate) fn prune_trace(t: &SplitTree) -> (Vec<bool>, Vec<Removal>) {
    prune_with(t, |ready| *ready.iter().next().expect("nonempty"))
}

/// Pruned decomposition tree: leaves whose marker is universal within the leaf
/// are removed, smallest node id first, until none remain.
///
/// When a leaf goes, its partner marker becomes an ordinary vertex labelled by
/// the smallest original vertex of the removed part, so the pruned tree
/// represents an induced subgraph of the original graph.
pub fn prune(t: &SplitTree) -> SplitTree {
    let (alive, removals) = prune_trace(t);
    materialize(t, &alive, &removals)
}

/// Pruning with a seeded random choice among removable leaves at each step.
pub fn prune_randomized(t: &SplitTree, seed: u64) -> SplitTree {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (alive, removals) = prune_with(t, |ready| {
        let v: Vec<usize> = ready.iter().copied().collect();
        *v.choose(&mut rng).expect("nonempty")
    });
    materialize(t, &alive, &removals)
}

fn materialize(t: &SplitTree, alive: &[bool], removals: &[Removal]) -> SplitTree {
    // Representative label of each freed marker, in removal order so that
    // representatives of earlier removals are available to later ones.
    let mut freed: Vec<Option<usize>> = vec![None; t.markers.len()];
    let resolve = |s: Slot, freed: &[Option<usize>]| match s {
        Slot::Vertex(v) => Some(v),
        Slot::Marker(m) => freed[m],
    };
    for r in removals {
        let rep = t.nodes[r.node]
            .slots
            .iter()
            .filter(|&&s| s != Slot::Marker(r.marker))
            .filter_map(|&s| resolve(s, &freed))
            .min()
            .expect("removed leaf has ordinary vertices");
        freed[t.markers[r.marker].partner] = Some(rep);
    }

    let mut node_id = vec![usize::MAX; t.nodes.len()];
    let mut marker_id = vec![usize::MAX; t.markers.len()];
    let mut nodes = Vec::new();
    let mut markers = Vec::new();
    for (x, node) in t.nodes.iter().enumerate() {
        if alive[x] {
            node_id[x] = nodes.len();
            nodes.push(node.clone());
        }
    }
    for (m, info) in t.markers.iter().enumerate() {
        if alive[info.node] && freed[m].is_none() {
            marker_id[m] = markers.len();
            markers.push(MarkerInfo {
                node: node_id[info.node],
                partner: usize::MAX,
            });
        }
    }
    for (m, info) in t.markers.iter().enumerate() {
        if marker_id[m] != usize::MAX {
            markers[marker_id[m]].partner = marker_id[info.partner];
        }
    }
    for node in &mut nodes {
        for s in &mut node.slots {
            *s = match *s {
                Slot::Marker(m) => match freed[m] {
                    Some(v) => Slot::Vertex(v),
                    None => Slot::Marker(marker_id[m]),
                },
                v => v,
            };
        }
    }
    SplitTree {
        universe: t.universe,
        nodes,
        markers,
    }
}

/// Number of leaves of a tree, see [`SplitTree::leaf_count`].
pub fn leaf_count(t: &SplitTree) -> usize {
    t.leaf_count()
}

/// Graphviz rendering: one record node per tree node, edges labelled with
/// their marker pair.
pub fn to_dot(t: &SplitTree) -> String {
    let mut out = String::from("graph split_tree {\n  node [shape=record];\n");
    let name = |s: Slot| match s {
        Slot::Vertex(v) => v.to_string(),
        Slot::Marker(m) => format!("m{m}"),
    };
    for (i, node) in t.nodes.iter().enumerate() {
        let kind = match node.kind {
            NodeKind::Clique => "clique",
            NodeKind::Star => "star",
        };
        let center = node
            .center_slot()
            .map(|c| format!("|centre {}", name(c)))
            .unwrap_or_default();
        let verts: Vec<String> = node.vertices().map(|v| v.to_string()).collect();
        let marks: Vec<String> = node.markers().map(|m| format!("m{m}")).collect();
        let _ = writeln!(
            out,
            "  n{i} [label=\"{{{kind}{center}|vertices: {}|markers: {}}}\"];",
            verts.join(" "),
            marks.join(" ")
        );
    }
    for (a, b) in t.edges() {
        let _ = writeln!(
            out,
            "  n{} -- n{} [label=\"m{a}-m{b}\"];",
            t.markers[a].node, t.markers[b].node
        );
    }
    out.push_str("}\n");
    out
}

/// Order of the nodes along a path tree, starting from its smallest end.
pub(crate) fn path_order(t: &SplitTree, alive: &[bool], start: usize) -> Vec<usize> {
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = t
            .adjacent(cur)
            .into_iter()
            .map(|(_, y)| y)
            .find(|&y| alive[y] && y != prev);
        match next {
            Some(y) => {
                prev = cur;
                cur = y;
                order.push(y);
            }
            None => return order,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dh::{random_dh, recognize_dh, Step};

    fn tree_of(g: &Graph) -> SplitTree {
        let c = recognize_dh(g).unwrap().construction().expect("DH");
        build_split_tree(&c)
    }

    fn subdivided_claw() -> Graph {
        Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap()
    }

    #[test]
    fn triangle_is_one_clique() {
        let t = tree_of(&Graph::complete(3));
        assert_eq!(t.nodes().len(), 1);
        assert_eq!(t.nodes()[0].kind, NodeKind::Clique);
        assert_eq!(join_recompose(&t), Graph::complete(3));
    }

    #[test]
    fn claw_is_one_star() {
        let t = tree_of(&Graph::star(3));
        assert_eq!(t.nodes().len(), 1);
        assert_eq!(t.nodes()[0].kind, NodeKind::Star);
        assert_eq!(t.nodes()[0].center_slot(), Some(Slot::Vertex(0)));
        assert_eq!(t.leaf_count(), 2);
    }

    #[test]
    fn p4_is_two_stars_joined_at_leaves() {
        let g = Graph::path(4);
        let t = tree_of(&g);
        t.check_invariants().unwrap();
        assert_eq!(t.nodes().len(), 2);
        let centers: BTreeSet<Slot> = t.nodes().iter().filter_map(Node::center_slot).collect();
        assert_eq!(centers, BTreeSet::from([Slot::Vertex(1), Slot::Vertex(2)]));
        assert_eq!(join_recompose(&t), g);
        assert_eq!(prune(&t), t);
        assert_eq!(t.leaf_count(), 2);
    }

    #[test]
    fn subdivided_claw_prunes_to_three_leaves() {
        let g = subdivided_claw();
        let t = tree_of(&g);
        t.check_invariants().unwrap();
        assert_eq!(join_recompose(&t), g);
        let p = prune(&t);
        p.check_invariants().unwrap();
        assert_eq!(p.leaf_count(), 3);
        assert!(!p.is_path());
    }

    #[test]
    fn trivial_trees() {
        for n in 1..3 {
            let t = tree_of(&Graph::complete(n));
            assert!(t.is_trivial());
            assert_eq!(t.leaf_count(), 2);
            assert_eq!(prune(&t), t);
            assert_eq!(join_recompose(&t), Graph::complete(n));
        }
    }

    #[test]
    fn recomposition_matches_replay() {
        for seed in 0..200 {
            let n = 3 + (seed % 10) as usize;
            let (g, c) = random_dh(n, seed);
            let t = build_split_tree(&c);
            t.check_invariants().unwrap_or_else(|e| panic!("seed {seed}: {e}"));
            assert_eq!(join_recompose(&t), g, "seed {seed}");
        }
    }

    #[test]
    fn merge_restores_standard_form() {
        // Two triangles glued along a marker pair are really K_4.
        let mut b = Builder::new(4);
        let (m1, m2) = b.new_marker_pair();
        b.add_node(Node::clique(vec![Slot::Vertex(0), Slot::Vertex(1), Slot::Marker(m1)]));
        b.add_node(Node::clique(vec![Slot::Marker(m2), Slot::Vertex(2), Slot::Vertex(3)]));
        b.standardize(m1);
        let t = b.finish();
        t.check_invariants().unwrap();
        assert_eq!(t.nodes().len(), 1);
        assert_eq!(join_recompose(&t), Graph::complete(4));

        // A star centre glued to a star leaf is one bigger star.
        let mut b = Builder::new(4);
        let (m1, m2) = b.new_marker_pair();
        b.add_node(Node::star(vec![Slot::Marker(m1), Slot::Vertex(0), Slot::Vertex(1)], 0));
        b.add_node(Node::star(vec![Slot::Vertex(2), Slot::Marker(m2), Slot::Vertex(3)], 0));
        b.standardize(m1);
        let t = b.finish();
        t.check_invariants().unwrap();
        assert_eq!(t.nodes().len(), 1);
        assert_eq!(join_recompose(&t), Graph::star(3).induced_subgraph(&[1, 2, 0, 3]));
    }

    #[test]
    fn split_examples() {
        let claw = Graph::star(3);
        assert!(is_split(&claw, &[1, 2], &[0, 3]).unwrap());
        let p4 = Graph::path(4);
        assert!(is_split(&p4, &[0, 1], &[2, 3]).unwrap());
        assert!(is_split(&p4, &[0], &[1, 2, 3]).is_ok_and(|s| !s));
        assert!(is_split(&p4, &[0, 1], &[2]).is_err());
        let c5 = Graph::cycle(5);
        for mask in 1u32..31 {
            let a: Vec<usize> = (0..5).filter(|i| mask & (1 << i) != 0).collect();
            let b: Vec<usize> = (0..5).filter(|i| mask & (1 << i) == 0).collect();
            assert!(!is_split(&c5, &a, &b).unwrap(), "{a:?}");
        }
    }

    #[test]
    fn dot_export_mentions_nodes_and_edges() {
        let t = tree_of(&Graph::path(4));
        let dot = to_dot(&t);
        assert!(dot.starts_with("graph split_tree {"));
        assert_eq!(dot.matches("shape=record").count(), 1);
        assert_eq!(dot.matches(" -- ").count(), 1);
        assert!(dot.contains("star|centre"));
    }

    #[test]
    fn star_leaf_true_twin_makes_clique_node() {
        let steps = vec![
            Step { vertex: 0, kind: StepKind::Initial },
            Step { vertex: 1, kind: StepKind::Pendant(0) },
            Step { vertex: 2, kind: StepKind::Pendant(0) },
            Step { vertex: 3, kind: StepKind::TrueTwin(1) },
        ];
        let c = DhConstruction::new(steps).unwrap();
        let t = build_split_tree(&c);
        t.check_invariants().unwrap();
        assert_eq!(t.nodes().len(), 2);
        assert_eq!(join_recompose(&t), c.replay());
        // The clique leaf {1, 3, m} has a universal marker and is pruned.
        let p = prune(&t);
        assert_eq!(p.nodes().len(), 1);
        assert_eq!(p.vertices(), vec![0, 1, 2]);
    }
}
