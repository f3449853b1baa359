//! Labelled polygon representations and the operations that assemble them:
//! permutation diagrams of split tree paths, the join splice around a pair of
//! marker chords, and disjoint union.
//!
//! A representation is held as a cyclic token sequence of chord endpoints and
//! corners. Chords carry arbitrary labels, so marker chords can coexist with
//! chords for original vertices while a representation is being assembled.

use std::collections::HashMap;

use crate::diagram::ChordDiagram;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polygon::{CornerSet, PolygonRep};
use crate::split_tree::{NodeKind, Slot, SplitTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tok {
    End(usize),
    Corner,
}

/// A polygon representation whose chords carry labels.
///
/// Runs of consecutive corners are collapsed on construction, so the corner
/// count is the number of distinct corner gaps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledRep {
    tokens: Vec<Tok>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidRep(msg.into())
}

/// Collapses cyclic runs of corners to a single corner.
fn collapse_corners(tokens: Vec<Tok>) -> Vec<Tok> {
    let len = tokens.len();
    let mut out: Vec<Tok> = Vec::with_capacity(len);
    for t in tokens {
        if t == Tok::Corner && out.last() == Some(&Tok::Corner) {
            continue;
        }
        out.push(t);
    }
    if out.len() > 1 && out[0] == Tok::Corner && out.last() == Some(&Tok::Corner) {
        out.pop();
    }
    out
}

fn end_positions(tokens: &[Tok]) -> HashMap<usize, Vec<usize>> {
    let mut pos: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, t) in tokens.iter().enumerate() {
        if let Tok::End(l) = *t {
            pos.entry(l).or_default().push(i);
        }
    }
    pos
}

/// Are all chords satisfied when the corners flagged in `removed` are ignored?
fn satisfied_without(tokens: &[Tok], removed: &[bool], ends: &HashMap<usize, [usize; 2]>) -> bool {
    let mut pref = Vec::with_capacity(tokens.len() + 1);
    pref.push(0usize);
    for (i, t) in tokens.iter().enumerate() {
        let c = usize::from(*t == Tok::Corner && !removed[i]);
        pref.push(pref[i] + c);
    }
    let total = pref[tokens.len()];
    ends.values().all(|&[a, b]| {
        let inner = pref[b] - pref[a + 1];
        inner > 0 && inner < total
    })
}

impl LabeledRep {
    /// Validates that every label occurs exactly twice.
    pub fn from_tokens(tokens: Vec<Tok>) -> Result<Self> {
        for (label, at) in end_positions(&tokens) {
            if at.len() != 2 {
                return Err(invalid(format!(
                    "chord {label} has {} endpoints, expected 2",
                    at.len()
                )));
            }
        }
        Ok(LabeledRep {
            tokens: collapse_corners(tokens),
        })
    }

    /// Lifts a plain representation, naming chord `i` by `labels[i]`.
    pub fn from_polygon_rep(rep: &PolygonRep, labels: &[usize]) -> Result<Self> {
        let d = rep.diagram();
        if labels.len() != d.chord_count() {
            return Err(invalid("label count does not match chord count"));
        }
        let mut tokens = Vec::with_capacity(d.positions() + rep.k());
        let corners = rep.corners().gaps();
        let mut next = corners.iter().peekable();
        for (p, &c) in d.word().iter().enumerate() {
            tokens.push(Tok::End(labels[c]));
            if next.next_if(|&&g| g == p).is_some() {
                tokens.push(Tok::Corner);
            }
        }
        Self::from_tokens(tokens)
    }

    pub fn tokens(&self) -> &[Tok] {
        &self.tokens
    }

    /// Chord labels, ascending.
    pub fn labels(&self) -> Vec<usize> {
        let mut l: Vec<usize> = end_positions(&self.tokens).into_keys().collect();
        l.sort_unstable();
        l
    }

    pub fn chord_count(&self) -> usize {
        self.tokens.iter().filter(|t| matches!(t, Tok::End(_))).count() / 2
    }

    pub fn corner_count(&self) -> usize {
        self.tokens.iter().filter(|&&t| t == Tok::Corner).count()
    }

    fn ends(&self) -> HashMap<usize, [usize; 2]> {
        end_positions(&self.tokens)
            .into_iter()
            .map(|(l, v)| (l, [v[0], v[1]]))
            .collect()
    }

    /// Does every chord have a corner on each of its arcs?
    pub fn is_satisfied(&self) -> bool {
        satisfied_without(&self.tokens, &vec![false; self.tokens.len()], &self.ends())
    }

    /// Crossing pairs of labels `(a, b)` with `a < b`, sorted.
    pub fn crossing_pairs(&self) -> Vec<(usize, usize)> {
        let ends = self.ends();
        let mut out = Vec::new();
        for (&a, &[a0, a1]) in &ends {
            for (&b, &[b0, b1]) in &ends {
                if a < b && (a0 < b0 && b0 < a1) != (a0 < b1 && b1 < a1) {
                    out.push((a, b));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Intersection graph; requires labels to be exactly `0..chord_count`.
    pub fn intersection_graph(&self) -> Result<Graph> {
        let n = self.chord_count();
        if self.labels().iter().enumerate().any(|(i, &l)| i != l) {
            return Err(invalid("labels are not 0..n"));
        }
        Graph::from_edges(n, &self.crossing_pairs())
    }

    pub fn relabeled(&self, f: impl Fn(usize) -> usize) -> Self {
        let tokens = self
            .tokens
            .iter()
            .map(|&t| match t {
                Tok::End(l) => Tok::End(f(l)),
                Tok::Corner => Tok::Corner,
            })
            .collect();
        LabeledRep { tokens }
    }

    /// Plain representation with chords numbered by label rank, together
    /// with the label of each chord number.
    pub fn to_polygon_rep(&self) -> Result<(PolygonRep, Vec<usize>)> {
        let labels = self.labels();
        let rank: HashMap<usize, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut word = Vec::with_capacity(2 * labels.len());
        let mut gaps = Vec::new();
        for t in &self.tokens {
            match *t {
                Tok::End(l) => word.push(rank[&l]),
                Tok::Corner => gaps.push(word.len()),
            }
        }
        if word.is_empty() {
            return Err(Error::EmptyDiagram);
        }
        let positions = word.len();
        // A corner after `j` endpoints sits in gap j - 1; leading corners wrap.
        let gaps = gaps
            .into_iter()
            .map(|j| (j + positions - 1) % positions)
            .collect();
        let rep = PolygonRep::new(ChordDiagram::new(word)?, CornerSet::new(gaps))?;
        Ok((rep, labels))
    }

    /// Number of corners with no endpoint between them and an endpoint of `label`.
    pub fn corners_close_to(&self, label: usize) -> usize {
        let len = self.tokens.len();
        let mut close = std::collections::BTreeSet::new();
        for (i, _) in self.tokens.iter().enumerate().filter(|(_, &t)| t == Tok::End(label)) {
            for step in [1, len - 1] {
                let j = (i + step) % len;
                if self.tokens[j] == Tok::Corner {
                    close.insert(j);
                }
            }
        }
        close.len()
    }

    fn rotated_to(&self, index: usize) -> Vec<Tok> {
        let mut t = self.tokens.clone();
        t.rotate_left(index);
        t
    }

    fn position_of(&self, label: usize) -> Option<usize> {
        self.tokens.iter().position(|&t| t == Tok::End(label))
    }
}

/// Two-line model of a permutation representation: every chord has one end
/// on each line, and two chords cross iff their orders on the lines differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermDiagram {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

impl PermDiagram {
    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self> {
        let mut a = top.clone();
        let mut b = bottom.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a.windows(2).any(|w| w[0] == w[1]) || a != b {
            return Err(invalid("lines must hold the same chords, once each"));
        }
        Ok(PermDiagram { top, bottom })
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    pub fn crosses(&self, a: usize, b: usize) -> bool {
        let at = |line: &[usize], x| line.iter().position(|&y| y == x);
        match (at(&self.top, a), at(&self.top, b), at(&self.bottom, a), at(&self.bottom, b)) {
            (Some(ta), Some(tb), Some(ba), Some(bb)) => a != b && (ta < tb) != (ba < bb),
            _ => false,
        }
    }

    /// Two-corner representation: one corner at each end of the top line.
    pub fn to_rep(&self) -> LabeledRep {
        let mut tokens = vec![Tok::Corner];
        tokens.extend(self.top.iter().map(|&l| Tok::End(l)));
        tokens.push(Tok::Corner);
        tokens.extend(self.bottom.iter().rev().map(|&l| Tok::End(l)));
        LabeledRep::from_tokens(tokens).expect("each chord once per line")
    }

    /// Reads a two-corner representation back as two lines.
    pub fn from_rep(rep: &LabeledRep) -> Result<Self> {
        let corners: Vec<usize> = rep
            .tokens
            .iter()
            .enumerate()
            .filter(|(_, &t)| t == Tok::Corner)
            .map(|(i, _)| i)
            .collect();
        if corners.len() != 2 {
            return Err(invalid(format!(
                "a permutation diagram needs 2 corners, found {}",
                corners.len()
            )));
        }
        let t = rep.rotated_to(corners[0]);
        let split = corners[1] - corners[0];
        let label = |x: &Tok| match *x {
            Tok::End(l) => l,
            Tok::Corner => unreachable!(),
        };
        let top = t[1..split].iter().map(label).collect();
        let bottom = t[split + 1..].iter().rev().map(label).collect();
        Self::new(top, bottom)
    }
}

/// Chord label of a tree slot: original vertices keep their label, marker
/// `m` becomes `universe + m`.
pub fn slot_label(t: &SplitTree, s: Slot) -> usize {
    match s {
        Slot::Vertex(v) => v,
        Slot::Marker(m) => t.universe() + m,
    }
}

/// Replaces chord `ell` by the chords of a node, keeping `out` close to a corner.
///
/// `incoming` is the index of the slot that `ell` stands for, or `None` when
/// `ell` is a virtual chord crossing nothing (the first node of a path).
fn expand(
    tokens: &mut Vec<Tok>,
    ell: usize,
    t: &SplitTree,
    node: usize,
    incoming: Option<usize>,
    out: Option<usize>,
) -> Result<()> {
    let len = tokens.len();
    let at: Vec<usize> = (0..len).filter(|&i| tokens[i] == Tok::End(ell)).collect();
    let e = *at
        .iter()
        .find(|&&i| tokens[(i + 1) % len] == Tok::Corner || tokens[(i + len - 1) % len] == Tok::Corner)
        .ok_or_else(|| invalid(format!("chord {ell} is not close to a corner")))?;
    // Put e at index 1 so both neighbours are addressable without wrapping.
    tokens.rotate_left((e + len - 1) % len);
    let corner_after = tokens[2] == Tok::Corner;
    let e2 = (2..len)
        .find(|&i| tokens[i] == Tok::End(ell))
        .expect("second endpoint");

    let x = &t.nodes()[node];
    let label = |i: usize| slot_label(t, x.slots[i]);
    let others: Vec<usize> = (0..x.slots.len()).filter(|&i| Some(i) != incoming).collect();
    // Orders a block so that `out` ends up next to the corner at e.
    let arrange = |mut block: Vec<usize>, out_last: bool| -> Vec<usize> {
        if let Some(o) = out {
            if let Some(p) = block.iter().position(|&i| i == o) {
                block.remove(p);
                if out_last {
                    block.push(o);
                } else {
                    block.insert(0, o);
                }
            }
        }
        block
    };
    let ends = |idx: &[usize]| -> Vec<Tok> { idx.iter().map(|&i| Tok::End(label(i))).collect() };

    let center_in = x.kind == NodeKind::Star && incoming.is_some() && x.center == incoming;
    match x.kind {
        NodeKind::Clique => {
            let block = ends(&arrange(others, corner_after));
            tokens.splice(e2..=e2, block.clone());
            tokens.splice(1..=1, block);
        }
        NodeKind::Star if center_in => {
            let block = ends(&arrange(others, corner_after));
            let rev: Vec<Tok> = block.iter().rev().copied().collect();
            tokens.splice(e2..=e2, rev);
            tokens.splice(1..=1, block);
        }
        NodeKind::Star => {
            let c = x.center.expect("star centre");
            let p = Tok::End(label(c));
            tokens[1] = p;
            tokens[e2] = p;
            // Leaves are nested around e and its corner; `out` innermost.
            let leaves = ends(&arrange(others.into_iter().filter(|&i| i != c).collect(), true));
            let rev: Vec<Tok> = leaves.iter().rev().copied().collect();
            if corner_after {
                tokens.splice(3..3, rev);
                tokens.splice(1..1, leaves);
            } else {
                tokens.splice(2..2, rev);
                tokens.splice(0..0, leaves);
            }
        }
    }
    Ok(())
}

/// Permutation representation of the graph represented by a path of tree
/// nodes restricted to `alive` ones.
///
/// The last node may have one further live neighbour; the chord of the
/// marker pointing there is returned and is close to a corner.
pub(crate) fn path_layout(
    t: &SplitTree,
    alive: impl Fn(usize) -> bool,
    path: &[usize],
) -> Result<(LabeledRep, Option<usize>)> {
    if path.is_empty() {
        return Err(Error::InvalidPath("empty path".into()));
    }
    let virtual_chord = usize::MAX;
    let mut tokens = vec![
        Tok::Corner,
        Tok::End(virtual_chord),
        Tok::Corner,
        Tok::End(virtual_chord),
    ];
    let mut ell = virtual_chord;
    let mut out_label = None;
    for (i, &x) in path.iter().enumerate() {
        if x >= t.nodes().len() || !alive(x) {
            return Err(Error::InvalidPath(format!("node {x} is not in the tree")));
        }
        let prev = i.checked_sub(1).map(|j| path[j]);
        let next = path.get(i + 1).copied();
        let mut incoming = None;
        let mut outgoing = None;
        let mut extra = Vec::new();
        for (m, y) in t.adjacent(x) {
            if !alive(y) {
                continue;
            }
            if Some(y) == prev && incoming.is_none() {
                incoming = Some(m);
            } else if Some(y) == next && outgoing.is_none() {
                outgoing = Some(m);
            } else {
                extra.push(m);
            }
        }
        if prev.is_some() && incoming.is_none() || next.is_some() && outgoing.is_none() {
            return Err(Error::InvalidPath(format!(
                "nodes along the path are not adjacent at node {x}"
            )));
        }
        if next.is_none() && extra.len() == 1 {
            outgoing = extra.pop();
        }
        if !extra.is_empty() {
            return Err(Error::InvalidPath(format!("node {x} branches off the path")));
        }
        let node = &t.nodes()[x];
        let index_of = |m: usize| node.slots.iter().position(|&s| s == Slot::Marker(m));
        expand(
            &mut tokens,
            ell,
            t,
            x,
            incoming.and_then(index_of),
            outgoing.and_then(index_of),
        )?;
        if let Some(m) = outgoing {
            ell = t.universe() + m;
            if next.is_none() {
                out_label = Some(ell);
            }
        }
    }
    if tokens.contains(&Tok::End(virtual_chord)) {
        return Err(Error::InvalidPath("path left the virtual chord in place".into()));
    }
    Ok((LabeledRep::from_tokens(tokens)?, out_label))
}

/// Permutation diagram of the graph represented by the node path `path` of
/// `t`, together with the chord label of the marker leaving the last node
/// (if the last node has a further neighbour), which is extreme.
pub fn build_path_permrep(t: &SplitTree, path: &[usize]) -> Result<(PermDiagram, Option<usize>)> {
    let (rep, out) = path_layout(t, |_| true, path)?;
    Ok((PermDiagram::from_rep(&rep)?, out))
}

/// Representation of the join of two represented graphs across marker chords
/// `m1` of `r1` and `m2` of `r2`.
///
/// The arcs of the two markers are spliced in alternation and the markers
/// dropped; then corners are deleted greedily while every chord stays
/// satisfied, starting with corners close to `m1` in `r1`.
pub fn combine_reps(r1: &LabeledRep, m1: usize, r2: &LabeledRep, m2: usize) -> Result<LabeledRep> {
    let p1 = r1
        .position_of(m1)
        .ok_or_else(|| invalid(format!("marker chord {m1} is not in the first representation")))?;
    let p2 = r2
        .position_of(m2)
        .ok_or_else(|| invalid(format!("marker chord {m2} is not in the second representation")))?;
    let mut l1: Vec<usize> = r1.labels().into_iter().filter(|&l| l != m1).collect();
    l1.extend(r2.labels().into_iter().filter(|&l| l != m2));
    let total = l1.len();
    l1.sort_unstable();
    l1.dedup();
    if l1.len() != total {
        return Err(invalid("representations share chord labels"));
    }

    let c1 = r1.rotated_to(p1);
    let c2 = r2.rotated_to(p2);
    let split = |c: &[Tok], m: usize| {
        let j = c.iter().skip(1).position(|&t| t == Tok::End(m)).expect("second end") + 1;
        (c[1..j].to_vec(), c[j + 1..].to_vec())
    };
    let (w, y) = split(&c1, m1);
    let (x, z) = split(&c2, m2);

    // Corners touching a marker endpoint in r1: the corner runs at both ends
    // of W and of Y.
    let mut close = Vec::new();
    let mut edges = |seq: &[Tok], offset: usize| {
        let lead = seq.iter().take_while(|&&t| t == Tok::Corner).count();
        let trail = seq.iter().rev().take_while(|&&t| t == Tok::Corner).count();
        close.extend(offset..offset + lead);
        close.extend(offset + seq.len() - trail..offset + seq.len());
    };
    edges(&w, 0);
    edges(&y, w.len() + x.len());

    let mut tokens = w;
    tokens.extend(x);
    tokens.extend(y);
    tokens.extend(z);

    close.sort_unstable();
    close.dedup();
    let mut order = close.clone();
    order.extend((0..tokens.len()).filter(|i| close.binary_search(i).is_err()));

    let ends: HashMap<usize, [usize; 2]> = end_positions(&tokens)
        .into_iter()
        .map(|(l, v)| (l, [v[0], v[1]]))
        .collect();
    let mut removed = vec![false; tokens.len()];
    if !satisfied_without(&tokens, &removed, &ends) {
        return Err(invalid("spliced representation leaves a chord unsatisfied"));
    }
    for i in order {
        if tokens[i] != Tok::Corner {
            continue;
        }
        removed[i] = true;
        if !satisfied_without(&tokens, &removed, &ends) {
            removed[i] = false;
        }
    }
    let kept = tokens
        .into_iter()
        .zip(removed)
        .filter(|&(_, r)| !r)
        .map(|(t, _)| t)
        .collect();
    LabeledRep::from_tokens(kept)
}

/// Representation of the disjoint union, using `k1 + k2 - 2` corners.
///
/// Each input needs at least two corners. Two consecutive corners of each are
/// merged: with `r1 = a S b P` and `r2 = c R d Q` the result is `a S R d Q P`.
pub fn disjoint_union(r1: &LabeledRep, r2: &LabeledRep) -> Result<LabeledRep> {
    if r1.corner_count() < 2 || r2.corner_count() < 2 {
        return Err(invalid("disjoint union needs two corners in each representation"));
    }
    let mut shared = r1.labels();
    shared.extend(r2.labels());
    let total = shared.len();
    shared.sort_unstable();
    shared.dedup();
    if shared.len() != total {
        return Err(invalid("representations share chord labels"));
    }
    let open = |r: &LabeledRep| {
        let first = r.tokens.iter().position(|&t| t == Tok::Corner).expect("corner");
        let c = r.rotated_to(first);
        let second = c.iter().skip(1).position(|&t| t == Tok::Corner).expect("corner") + 1;
        (c[1..second].to_vec(), c[second + 1..].to_vec())
    };
    let (s, p) = open(r1);
    let (r, q) = open(r2);
    let mut tokens = vec![Tok::Corner];
    tokens.extend(s);
    tokens.extend(r);
    tokens.push(Tok::Corner);
    tokens.extend(q);
    tokens.extend(p);
    LabeledRep::from_tokens(tokens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dh::recognize_dh;
    use crate::split_tree::{build_split_tree, join_recompose};

    fn tree_of(g: &Graph) -> SplitTree {
        build_split_tree(&recognize_dh(g).unwrap().construction().unwrap())
    }

    fn graph_of(rep: &LabeledRep) -> Graph {
        rep.intersection_graph().unwrap()
    }

    #[test]
    fn perm_diagram_round_trip() {
        let p = PermDiagram::new(vec![0, 1, 2], vec![1, 0, 2]).unwrap();
        assert!(p.crosses(0, 1));
        assert!(!p.crosses(0, 2));
        let rep = p.to_rep();
        assert_eq!(rep.corner_count(), 2);
        assert!(rep.is_satisfied());
        assert_eq!(rep.crossing_pairs(), vec![(0, 1)]);
        assert_eq!(rep.corners_close_to(0), 1);
        assert_eq!(rep.corners_close_to(2), 1);
        let edge = PermDiagram::new(vec![0, 1], vec![1, 0]).unwrap().to_rep();
        assert_eq!(edge.corners_close_to(0), 2);
        assert_eq!(PermDiagram::from_rep(&rep).unwrap(), p);
        let (plain, labels) = rep.to_polygon_rep().unwrap();
        assert_eq!(plain.k(), 2);
        let lifted = LabeledRep::from_polygon_rep(&plain, &labels).unwrap();
        let back = PermDiagram::from_rep(&lifted).unwrap();
        assert_eq!(back.to_rep().crossing_pairs(), rep.crossing_pairs());
        assert!(PermDiagram::new(vec![0, 1], vec![0, 0]).is_err());
    }

    #[test]
    fn single_star_path() {
        let t = tree_of(&Graph::star(3));
        let (p, out) = build_path_permrep(&t, &[0]).unwrap();
        assert_eq!(out, None);
        assert_eq!(graph_of(&p.to_rep()), Graph::star(3));
    }

    #[test]
    fn single_clique_path() {
        let t = tree_of(&Graph::complete(3));
        let (p, _) = build_path_permrep(&t, &[0]).unwrap();
        assert_eq!(graph_of(&p.to_rep()), Graph::complete(3));
    }

    #[test]
    fn p4_path() {
        let g = Graph::path(4);
        let t = tree_of(&g);
        let (p, out) = build_path_permrep(&t, &[0, 1]).unwrap();
        assert_eq!(out, None);
        assert_eq!(graph_of(&p.to_rep()), g);
        assert!(build_path_permrep(&t, &[0, 0]).is_err());
        assert!(build_path_permrep(&t, &[]).is_err());
    }

    #[test]
    fn caterpillar_paths_from_either_end() {
        // A path of stars and cliques: every pruned-path graph is a permutation graph.
        let g = Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 6), (6, 3), (4, 7)],
        )
        .unwrap();
        let t = tree_of(&g);
        assert_eq!(join_recompose(&t), g);
        assert!(t.is_path());
        let ends: Vec<usize> = (0..t.nodes().len()).filter(|&x| t.degree(x) <= 1).collect();
        for &start in &ends {
            let order = crate::split_tree::path_order(&t, &vec![true; t.nodes().len()], start);
            let (p, _) = build_path_permrep(&t, &order).unwrap();
            assert_eq!(graph_of(&p.to_rep()), g, "from {start}");
        }
    }

    #[test]
    fn combine_two_claws_gives_double_star() {
        // Claw 0 with leaves 1, 2 and marker 10; claw 3 with leaves 4, 5 and marker 11.
        let r1 = PermDiagram::new(vec![0, 1, 2, 10], vec![1, 2, 10, 0]).unwrap().to_rep();
        let r2 = PermDiagram::new(vec![3, 4, 5, 11], vec![4, 5, 11, 3]).unwrap().to_rep();
        let joined = combine_reps(&r1, 10, &r2, 11).unwrap();
        assert!(joined.is_satisfied());
        assert!(joined.corner_count() <= 3);
        let expected = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap();
        assert_eq!(graph_of(&joined), expected);
    }

    #[test]
    fn combine_with_single_vertex_substitutes_marker() {
        let r1 = PermDiagram::new(vec![0, 1, 9], vec![1, 9, 0]).unwrap().to_rep();
        // Marker 8 crossing vertex 2 only: the join renames 9 to 2.
        let r2 = PermDiagram::new(vec![8, 2], vec![2, 8]).unwrap().to_rep();
        let joined = combine_reps(&r1, 9, &r2, 8).unwrap();
        assert!(joined.corner_count() <= r1.corner_count());
        let expected = Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(graph_of(&joined), expected);
        assert!(combine_reps(&r1, 7, &r2, 8).is_err());
        assert!(combine_reps(&r1, 9, &r1, 9).is_err());
    }

    #[test]
    fn disjoint_union_loses_two_corners() {
        let a = PermDiagram::new(vec![0, 1], vec![1, 0]).unwrap().to_rep();
        let b = PermDiagram::new(vec![2, 3], vec![3, 2]).unwrap().to_rep();
        let u = disjoint_union(&a, &b).unwrap();
        assert_eq!(u.corner_count(), 2);
        assert!(u.is_satisfied());
        assert_eq!(graph_of(&u), Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap());
        assert!(disjoint_union(&a, &a).is_err());
    }

    #[test]
    fn corner_runs_collapse() {
        let r = LabeledRep::from_tokens(vec![
            Tok::Corner,
            Tok::End(0),
            Tok::Corner,
            Tok::Corner,
            Tok::End(0),
            Tok::Corner,
        ])
        .unwrap();
        assert_eq!(r.corner_count(), 2);
        assert!(LabeledRep::from_tokens(vec![Tok::End(0)]).is_err());
    }
}
