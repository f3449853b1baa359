//! Chord diagrams as circular double-occurrence words.
//!
//! Positions `0..2n` are chord endpoints in clockwise order. Gap `i` is the
//! point strictly between positions `i` and `i + 1 (mod 2n)`; corners are
//! always placed in gaps. An arc running clockwise from endpoint `s` to
//! endpoint `e` covers the gaps `s, s + 1, .., e - 1`.

use std::collections::HashMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// An open clockwise arc between the two endpoints of a chord.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub chord: usize,
    /// Endpoint position the arc leaves from.
    pub start: usize,
    /// Endpoint position the arc runs to.
    pub end: usize,
}

impl Arc {
    /// Number of gaps covered, `(end - start) mod 2n`.
    pub fn gap_count(&self, positions: usize) -> usize {
        (self.end + positions - self.start) % positions
    }

    pub fn contains_gap(&self, gap: usize, positions: usize) -> bool {
        (gap + positions - self.start) % positions < self.gap_count(positions)
    }

    pub fn gaps(&self, positions: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.gap_count(positions)).map(move |i| (self.start + i) % positions)
    }
}

/// A circle representation: each chord label `0..n` occurs exactly twice.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChordDiagram {
    word: Vec<usize>,
    ends: Vec<[usize; 2]>,
}

impl ChordDiagram {
    /// Wraps a word whose labels must be exactly `0..n`, each used twice.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        if !word.len().is_multiple_of(2) {
            return Err(Error::InvalidDiagram(format!(
                "odd number of endpoints ({})",
                word.len()
            )));
        }
        let n = word.len() / 2;
        let mut ends = vec![[usize::MAX; 2]; n];
        let mut count = vec![0usize; n];
        for (p, &c) in word.iter().enumerate() {
            if c >= n {
                return Err(Error::InvalidDiagram(format!(
                    "label {c} outside 0..{n}"
                )));
            }
            if count[c] == 2 {
                return Err(Error::InvalidDiagram(format!(
                    "label {c} occurs more than twice"
                )));
            }
            ends[c][count[c]] = p;
            count[c] += 1;
        }
        if let Some(c) = count.iter().position(|&k| k != 2) {
            return Err(Error::InvalidDiagram(format!(
                "label {c} occurs {} times",
                count[c]
            )));
        }
        Ok(ChordDiagram { word, ends })
    }

    /// Parses whitespace-separated tokens; labels are renumbered `0..n` in order
    /// of first occurrence. Lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let tokens: Vec<&str> = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .flat_map(str::split_whitespace)
            .collect();
        if !tokens.len().is_multiple_of(2) {
            return Err(Error::InvalidDiagram(format!(
                "odd number of tokens ({})",
                tokens.len()
            )));
        }
        let mut ids: HashMap<&str, usize> = HashMap::new();
        let mut count: Vec<usize> = Vec::new();
        let mut word = Vec::with_capacity(tokens.len());
        for t in &tokens {
            let next = ids.len();
            let id = *ids.entry(t).or_insert(next);
            if id == count.len() {
                count.push(0);
            }
            count[id] += 1;
            if count[id] > 2 {
                return Err(Error::InvalidDiagram(format!(
                    "token `{t}` appears more than twice"
                )));
            }
            word.push(id);
        }
        if let Some((t, _)) = ids.iter().find(|(_, &id)| count[id] != 2) {
            return Err(Error::InvalidDiagram(format!("token `{t}` appears once")));
        }
        ChordDiagram::new(word)
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn chord_count(&self) -> usize {
        self.ends.len()
    }

    /// Number of endpoint positions (and of gaps), `2n`.
    pub fn positions(&self) -> usize {
        self.word.len()
    }

    /// Endpoint positions of a chord, ascending.
    pub fn ends(&self, chord: usize) -> [usize; 2] {
        self.ends[chord]
    }

    pub fn partner(&self, pos: usize) -> usize {
        let [a, b] = self.ends[self.word[pos]];
        if a == pos {
            b
        } else {
            a
        }
    }

    /// The two arcs of a chord: `(a, b)` then `(b, a)` for endpoints `a < b`.
    pub fn arcs(&self, chord: usize) -> [Arc; 2] {
        let [a, b] = self.ends[chord];
        [
            Arc { chord, start: a, end: b },
            Arc { chord, start: b, end: a },
        ]
    }

    pub fn crosses(&self, u: usize, v: usize) -> bool {
        let [a, b] = self.ends[u];
        let [c, d] = self.ends[v];
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }

    /// Rotates the word so that position `offset` becomes position 0.
    pub fn rotated(&self, offset: usize) -> ChordDiagram {
        let len = self.word.len();
        if len == 0 {
            return self.clone();
        }
        let word = (0..len).map(|i| self.word[(i + offset) % len]).collect();
        ChordDiagram::new(word).expect("rotation preserves validity")
    }

    /// Relabels chords in order of first occurrence.
    pub fn normalized(&self) -> ChordDiagram {
        let mut map = vec![usize::MAX; self.chord_count()];
        let mut next = 0;
        let word = self
            .word
            .iter()
            .map(|&c| {
                if map[c] == usize::MAX {
                    map[c] = next;
                    next += 1;
                }
                map[c]
            })
            .collect();
        ChordDiagram::new(word).expect("relabeling preserves validity")
    }

    /// Emptiness of every arc, indexed like [`ChordDiagram::arcs`].
    ///
    /// An arc from `s` to `e` is empty iff no position `j` inside it reaches its
    /// partner clockwise before `e`. That is a range minimum over the doubled
    /// position array, answered with a sparse table.
    pub fn empty_arcs(&self) -> Vec<[bool; 2]> {
        let len = self.positions();
        if len == 0 {
            return Vec::new();
        }
        // reach[j] = j + clockwise distance to partner, over positions 0..2len.
        let reach: Vec<usize> = (0..2 * len)
            .map(|j| {
                let p = j % len;
                j + (self.partner(p) + len - p) % len
            })
            .collect();
        let rmq = SparseMin::new(&reach);
        let is_empty = |arc: &Arc| {
            let s = arc.start;
            let e = s + arc.gap_count(len);
            e <= s + 1 || rmq.min(s + 1, e) >= e
        };
        (0..self.chord_count())
            .map(|c| {
                let [x, y] = self.arcs(c);
                [is_empty(&x), is_empty(&y)]
            })
            .collect()
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Range minimum over a fixed array; `min(l, r)` covers `l..r`, `l < r`.
struct SparseMin {
    levels: Vec<Vec<usize>>,
}

impl SparseMin {
    fn new(values: &[usize]) -> Self {
        let mut levels = vec![values.to_vec()];
        let mut width = 1;
        while 2 * width <= values.len() {
            let prev = levels.last().unwrap();
            let next = (0..prev.len() - width)
                .map(|i| prev[i].min(prev[i + width]))
                .collect();
            levels.push(next);
            width *= 2;
        }
        SparseMin { levels }
    }

    fn min(&self, l: usize, r: usize) -> usize {
        let k = (usize::BITS - 1 - (r - l).leading_zeros()) as usize;
        self.levels[k][l].min(self.levels[k][r - (1 << k)])
    }
}

pub fn parse_diagram(text: &str) -> Result<ChordDiagram> {
    ChordDiagram::parse(text)
}

/// Intersection graph: chords are adjacent iff their endpoints interleave.
pub fn intersection_graph(d: &ChordDiagram) -> Graph {
    let n = d.chord_count();
    let mut g = Graph::empty(n);
    // Sweep: a chord opened at `a` crosses every chord opened after `a` and
    // still open when it closes.
    let mut open: Vec<usize> = Vec::new();
    for p in 0..d.positions() {
        let c = d.word()[p];
        let [a, _] = d.ends(c);
        if a == p {
            open.push(c);
        } else {
            let idx = open.iter().position(|&x| x == c).expect("chord is open");
            for &x in &open[idx + 1..] {
                g.add_edge(c, x);
            }
            open.remove(idx);
        }
    }
    g
}

/// Peripheral chords (those with at least one empty arc) and their empty arcs.
pub fn peripheral_chords(d: &ChordDiagram) -> (Vec<usize>, Vec<(usize, Vec<Arc>)>) {
    let empties = d.empty_arcs();
    let mut labels = Vec::new();
    let mut arcs = Vec::new();
    for (c, flags) in empties.iter().enumerate() {
        let pair = d.arcs(c);
        let list: Vec<Arc> = (0..2).filter(|&i| flags[i]).map(|i| pair[i]).collect();
        if !list.is_empty() {
            labels.push(c);
            arcs.push((c, list));
        }
    }
    (labels, arcs)
}

/// Largest independent set in series: the most chords that, read clockwise
/// from some cut point, appear as consecutive disjoint endpoint pairs.
///
/// For each of the `2n` cuts this is an interval scheduling problem solved by
/// the earliest-finishing greedy, so the whole computation is `O(n^2)`.
pub fn max_series_independent(d: &ChordDiagram) -> usize {
    let len = d.positions();
    let n = d.chord_count();
    let mut best = 0;
    for cut in 0..len {
        // Linear coordinate of position p when reading from just after gap `cut`.
        let lin = |p: usize| (p + len - cut - 1) % len;
        let mut spans: Vec<(usize, usize)> = (0..n)
            .map(|c| {
                let [a, b] = d.ends(c);
                let (x, y) = (lin(a), lin(b));
                (x.min(y), x.max(y))
            })
            .collect();
        spans.sort_unstable_by_key(|&(_, r)| r);
        let mut count = 0;
        let mut last_end: Option<usize> = None;
        for (l, r) in spans {
            if last_end.is_none_or(|e| l > e) {
                count += 1;
                last_end = Some(r);
            }
        }
        best = best.max(count);
    }
    best
}

/// Diagram of the chordless cycle `C_n`: chord `i` ends at `2i` and `2i + 3 (mod 2n)`.
pub fn canonical_cycle(n: usize) -> Result<ChordDiagram> {
    if n < 3 {
        return Err(Error::InvalidDiagram(format!(
            "cycle needs at least 3 chords, got {n}"
        )));
    }
    let len = 2 * n;
    let mut word = vec![0; len];
    for i in 0..n {
        word[2 * i] = i;
        word[(2 * i + 3) % len] = i;
    }
    ChordDiagram::new(word)
}

/// Uniformly shuffled double-occurrence word on `n` chords, labels normalized
/// to first-occurrence order.
pub fn random_diagram(n: usize, seed: u64) -> ChordDiagram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut word: Vec<usize> = (0..2 * n).map(|i| i / 2).collect();
    word.shuffle(&mut rng);
    ChordDiagram::new(word)
        .expect("shuffle keeps a double-occurrence word")
        .normalized()
}
