//! Distance hereditary graphs: construction sequences, recognition by
//! pendant/twin elimination, and a seeded generator.
//!
//! A connected graph is distance hereditary exactly when it can be reduced to
//! a single vertex by repeatedly deleting a pendant vertex or one vertex of a
//! twin pair. Recognition runs that elimination and records it in reverse as a
//! [`DhConstruction`].

use std::collections::{BTreeSet, HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// How a construction step attaches its new vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepKind {
    Initial,
    /// New vertex adjacent to the target only.
    Pendant(usize),
    /// New vertex with closed neighbourhood equal to the target's.
    TrueTwin(usize),
    /// New vertex with open neighbourhood equal to the target's.
    FalseTwin(usize),
}

impl StepKind {
    pub fn target(&self) -> Option<usize> {
        match *self {
            StepKind::Initial => None,
            StepKind::Pendant(t) | StepKind::TrueTwin(t) | StepKind::FalseTwin(t) => Some(t),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Step {
    /// Label of the vertex created by this step.
    pub vertex: usize,
    pub kind: StepKind,
}

/// An ordered pendant/twin construction of a connected graph.
///
/// The vertices created by the steps are exactly `0..len`; generated
/// constructions create vertex `i` at step `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DhConstruction {
    steps: Vec<Step>,
}

impl DhConstruction {
    /// Validates the step list: one leading initial step, distinct labels
    /// covering `0..len`, targets created earlier, and a connected result.
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let n = steps.len();
        let mut placed = vec![false; n];
        for (i, s) in steps.iter().enumerate() {
            if s.vertex >= n || placed[s.vertex] {
                return Err(Error::InvalidConstruction(format!(
                    "step {i} creates vertex {} which is out of range or repeated",
                    s.vertex
                )));
            }
            match (i, s.kind.target()) {
                (0, None) => {}
                (0, Some(_)) => {
                    return Err(Error::InvalidConstruction(
                        "first step must be the initial vertex".into(),
                    ))
                }
                (_, None) => {
                    return Err(Error::InvalidConstruction(format!(
                        "step {i} is a second initial vertex"
                    )))
                }
                (_, Some(t)) => {
                    if t >= n || !placed[t] {
                        return Err(Error::InvalidConstruction(format!(
                            "step {i} targets vertex {t} before it exists"
                        )));
                    }
                }
            }
            if i == 1 && matches!(s.kind, StepKind::FalseTwin(_)) {
                return Err(Error::InvalidConstruction(
                    "false twin of a lone vertex disconnects the graph".into(),
                ));
            }
            placed[s.vertex] = true;
        }
        Ok(DhConstruction { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Replays the steps and returns the constructed graph.
    pub fn replay(&self) -> Graph {
        self.replay_prefix(self.steps.len())
    }

    /// Graph on all `len` labels after the first `k` steps; later vertices are isolated.
    pub(crate) fn replay_prefix(&self, k: usize) -> Graph {
        let mut g = Graph::empty(self.steps.len());
        for s in &self.steps[..k] {
            let v = s.vertex;
            match s.kind {
                StepKind::Initial => {}
                StepKind::Pendant(t) => g.add_edge(v, t),
                StepKind::TrueTwin(t) => {
                    let nb: Vec<usize> = g.neighbors(t).collect();
                    for w in nb {
                        g.add_edge(v, w);
                    }
                    g.add_edge(v, t);
                }
                StepKind::FalseTwin(t) => {
                    let nb: Vec<usize> = g.neighbors(t).collect();
                    for w in nb {
                        g.add_edge(v, w);
                    }
                }
            }
        }
        g
    }
}

/// Outcome of [`recognize_dh`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DhRecognition {
    Accepted(DhConstruction),
    /// Vertices left when no pendant or twin remained. They induce a subgraph
    /// with at least two vertices and no pendant vertex or twin pair.
    Rejected(Vec<usize>),
}

impl DhRecognition {
    pub fn construction(self) -> Option<DhConstruction> {
        match self {
            DhRecognition::Accepted(c) => Some(c),
            DhRecognition::Rejected(_) => None,
        }
    }
}

/// Neighbourhood hash classes with the lexicographically smallest pair per class.
#[derive(Default)]
struct HashClasses {
    classes: HashMap<u64, BTreeSet<usize>>,
    pairs: BTreeSet<(usize, usize, u64)>,
}

impl HashClasses {
    fn head(&self, h: u64) -> Option<(usize, usize, u64)> {
        let c = self.classes.get(&h)?;
        let mut it = c.iter();
        match (it.next(), it.next()) {
            (Some(&a), Some(&b)) => Some((a, b, h)),
            _ => None,
        }
    }

    fn insert(&mut self, v: usize, h: u64) {
        if let Some(p) = self.head(h) {
            self.pairs.remove(&p);
        }
        self.classes.entry(h).or_default().insert(v);
        if let Some(p) = self.head(h) {
            self.pairs.insert(p);
        }
    }

    fn remove(&mut self, v: usize, h: u64) {
        if let Some(p) = self.head(h) {
            self.pairs.remove(&p);
        }
        if let Some(c) = self.classes.get_mut(&h) {
            c.remove(&v);
            if c.is_empty() {
                self.classes.remove(&h);
            }
        }
        if let Some(p) = self.head(h) {
            self.pairs.insert(p);
        }
    }
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

struct Eliminator {
    adj: Vec<HashSet<usize>>,
    key: Vec<u64>,
    open: Vec<u64>,
    pendants: BTreeSet<usize>,
    true_classes: HashClasses,
    false_classes: HashClasses,
    alive: BTreeSet<usize>,
}

impl Eliminator {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let adj: Vec<HashSet<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
        let key: Vec<u64> = (0..n as u64).map(splitmix).collect();
        let open: Vec<u64> = adj
            .iter()
            .map(|nb| nb.iter().fold(0, |h, &w| h ^ key[w]))
            .collect();
        let mut e = Eliminator {
            pendants: (0..n).filter(|&v| adj[v].len() == 1).collect(),
            adj,
            key,
            open,
            true_classes: HashClasses::default(),
            false_classes: HashClasses::default(),
            alive: (0..n).collect(),
        };
        for v in 0..n {
            e.index(v);
        }
        e
    }

    fn index(&mut self, v: usize) {
        self.true_classes.insert(v, self.open[v] ^ self.key[v]);
        self.false_classes.insert(v, self.open[v]);
    }

    fn unindex(&mut self, v: usize) {
        self.true_classes.remove(v, self.open[v] ^ self.key[v]);
        self.false_classes.remove(v, self.open[v]);
    }

    fn remove(&mut self, x: usize) {
        self.unindex(x);
        self.pendants.remove(&x);
        self.alive.remove(&x);
        let nb: Vec<usize> = self.adj[x].drain().collect();
        for w in nb {
            self.unindex(w);
            self.adj[w].remove(&x);
            self.open[w] ^= self.key[x];
            self.index(w);
            if self.adj[w].len() == 1 {
                self.pendants.insert(w);
            } else {
                self.pendants.remove(&w);
            }
        }
    }

    fn closed_eq(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
            && self.adj[u].len() == self.adj[v].len()
            && self.adj[u].iter().all(|&w| w == v || self.adj[v].contains(&w))
    }

    fn open_eq(&self, u: usize, v: usize) -> bool {
        self.adj[u].len() == self.adj[v].len() && self.adj[u].iter().all(|w| self.adj[v].contains(w))
    }

    /// Slow exact search, used only if a hash class turns out to be a collision.
    fn twin_scan(&self, closed: bool) -> Option<(usize, usize)> {
        let alive: Vec<usize> = self.alive.iter().copied().collect();
        for (i, &u) in alive.iter().enumerate() {
            for &v in &alive[i + 1..] {
                if (closed && self.closed_eq(u, v)) || (!closed && self.open_eq(u, v)) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// Next removal as `(removed vertex, step that re-creates it)`.
    fn next(&self) -> Option<(usize, StepKind)> {
        if let Some(&v) = self.pendants.iter().next() {
            let t = *self.adj[v].iter().next().expect("pendant has a neighbour");
            return Some((v, StepKind::Pendant(t)));
        }
        if let Some(&(u, v, _)) = self.true_classes.pairs.iter().next() {
            let pair = if self.closed_eq(u, v) {
                Some((u, v))
            } else {
                self.twin_scan(true)
            };
            if let Some((u, v)) = pair {
                return Some((v, StepKind::TrueTwin(u)));
            }
        }
        if let Some(&(u, v, _)) = self.false_classes.pairs.iter().next() {
            let pair = if self.open_eq(u, v) {
                Some((u, v))
            } else {
                self.twin_scan(false)
            };
            if let Some((u, v)) = pair {
                return Some((v, StepKind::FalseTwin(u)));
            }
        }
        None
    }
}

/// Recognizes a connected distance hereditary graph.
///
/// Each round removes the smallest pendant vertex if there is one, otherwise
/// the larger vertex of the lexicographically smallest true twin pair, otherwise
/// that of the smallest false twin pair. The accepted construction replays to
/// `g` exactly, labels included.
pub fn recognize_dh(g: &Graph) -> Result<DhRecognition> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut elim = Eliminator::new(g);
    let mut removed = Vec::with_capacity(g.n());
    while elim.alive.len() > 1 {
        match elim.next() {
            Some((v, kind)) => {
                elim.remove(v);
                removed.push(Step { vertex: v, kind });
            }
            None => return Ok(DhRecognition::Rejected(elim.alive.into_iter().collect())),
        }
    }
    let root = *elim.alive.iter().next().expect("one vertex remains");
    let mut steps = vec![Step {
        vertex: root,
        kind: StepKind::Initial,
    }];
    steps.extend(removed.into_iter().rev());
    Ok(DhRecognition::Accepted(DhConstruction::new(steps)?))
}

/// Seeded random construction on `n` vertices; vertex `i` is created at step `i`.
///
/// Each step picks a kind uniformly from pendant, true twin and false twin and a
/// target uniformly among the existing vertices. The second vertex cannot be a
/// false twin (that would disconnect the graph), so it is drawn from the other two.
pub fn random_dh_construction(n: usize, seed: u64) -> DhConstruction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut steps = Vec::with_capacity(n);
    for i in 0..n {
        let kind = if i == 0 {
            StepKind::Initial
        } else {
            let t = rng.gen_range(0..i);
            let choice = if i == 1 {
                rng.gen_range(0..2)
            } else {
                rng.gen_range(0..3)
            };
            match choice {
                0 => StepKind::Pendant(t),
                1 => StepKind::TrueTwin(t),
                _ => StepKind::FalseTwin(t),
            }
        };
        steps.push(Step { vertex: i, kind });
    }
    DhConstruction { steps }
}

/// Seeded random connected distance hereditary graph with its construction.
pub fn random_dh(n: usize, seed: u64) -> (Graph, DhConstruction) {
    let c = random_dh_construction(n.max(1), seed);
    (c.replay(), c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn accepted(g: &Graph) -> DhConstruction {
        match recognize_dh(g).unwrap() {
            DhRecognition::Accepted(c) => c,
            DhRecognition::Rejected(r) => panic!("rejected with core {r:?}"),
        }
    }

    #[test]
    fn path_is_accepted_and_replays() {
        let g = Graph::path(4);
        let c = accepted(&g);
        assert_eq!(c.replay(), g);
        assert!(c
            .steps()
            .iter()
            .skip(1)
            .all(|s| matches!(s.kind, StepKind::Pendant(_))));
    }

    #[test]
    fn triangle_is_accepted() {
        let g = Graph::complete(3);
        let c = accepted(&g);
        assert_eq!(c.replay(), g);
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn holes_are_rejected() {
        for n in 5..9 {
            match recognize_dh(&Graph::cycle(n)).unwrap() {
                DhRecognition::Rejected(core) => assert_eq!(core.len(), n),
                DhRecognition::Accepted(_) => panic!("C_{n} accepted"),
            }
        }
    }

    #[test]
    fn gem_and_house_are_rejected() {
        // house: square 0-1-2-3 with roof 4 on edge 0-1
        let house = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)]).unwrap();
        assert!(matches!(recognize_dh(&house).unwrap(), DhRecognition::Rejected(_)));
        // gem: path 0-1-2-3 plus a vertex 4 adjacent to all
        let gem =
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert!(matches!(recognize_dh(&gem).unwrap(), DhRecognition::Rejected(_)));
    }

    #[test]
    fn disconnected_and_empty_inputs_error() {
        assert_eq!(recognize_dh(&Graph::empty(2)), Err(Error::Disconnected));
        assert_eq!(recognize_dh(&Graph::empty(0)), Err(Error::EmptyGraph));
    }

    #[test]
    fn single_vertex() {
        let c = accepted(&Graph::empty(1));
        assert_eq!(c.steps(), &[Step { vertex: 0, kind: StepKind::Initial }]);
    }

    #[test]
    fn random_is_deterministic_and_accepted() {
        assert_eq!(random_dh(1, 42).0, Graph::empty(1));
        assert_eq!(random_dh(9, 7), random_dh(9, 7));
        let (g, c) = random_dh(4, 7);
        assert!(g.is_connected());
        assert_eq!(accepted(&g).replay(), g);
        assert_eq!(c.replay(), g);
        for seed in 1..=100 {
            let (g, _) = random_dh(10, seed);
            assert_eq!(accepted(&g).replay(), g, "seed {seed}");
        }
    }

    #[test]
    fn construction_validation() {
        let bad = vec![
            Step { vertex: 0, kind: StepKind::Initial },
            Step { vertex: 1, kind: StepKind::Pendant(2) },
            Step { vertex: 2, kind: StepKind::Pendant(0) },
        ];
        assert!(DhConstruction::new(bad).is_err());
        let false_twin_first = vec![
            Step { vertex: 0, kind: StepKind::Initial },
            Step { vertex: 1, kind: StepKind::FalseTwin(0) },
        ];
        assert!(DhConstruction::new(false_twin_first).is_err());
    }
}
