//! Polygon number of a fixed circle representation.
//!
//! A set of corner gaps satisfies a chord when each of the chord's two arcs
//! contains a corner. The polygon number `psi_r` of a diagram is the size of a
//! smallest satisfying set, i.e. the minimum number of gaps piercing all `2n`
//! arcs. Only the empty arcs matter: every nonempty arc contains an empty one.

use serde::{Deserialize, Serialize};

use crate::diagram::{intersection_graph, peripheral_chords, Arc, ChordDiagram};
use crate::error::{Error, Result};
use crate::oracle::Oracle;

/// Default cap on the chord count accepted by [`bf_psi_r`].
pub const DEFAULT_CHORD_CAP: usize = 8;

/// Sorted, duplicate-free corner gap indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CornerSet(Vec<usize>);

impl CornerSet {
    pub fn new(mut gaps: Vec<usize>) -> Self {
        gaps.sort_unstable();
        gaps.dedup();
        CornerSet(gaps)
    }

    pub fn gaps(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Is some corner inside the arc?
    pub fn pierces(&self, arc: &Arc, positions: usize) -> bool {
        let count = arc.gap_count(positions);
        if count == 0 {
            return false;
        }
        let last = arc.start + count - 1;
        if last < positions {
            self.any_in(arc.start, last)
        } else {
            self.any_in(arc.start, positions - 1) || self.any_in(0, last - positions)
        }
    }

    fn any_in(&self, lo: usize, hi: usize) -> bool {
        let i = self.0.partition_point(|&g| g < lo);
        i < self.0.len() && self.0[i] <= hi
    }
}

impl From<Vec<usize>> for CornerSet {
    fn from(gaps: Vec<usize>) -> Self {
        CornerSet::new(gaps)
    }
}

/// A circle representation together with a satisfying set of corners.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolygonRep {
    diagram: ChordDiagram,
    corners: CornerSet,
}

impl PolygonRep {
    pub fn new(diagram: ChordDiagram, corners: CornerSet) -> Result<Self> {
        if !verify_corners(&diagram, &corners)? {
            return Err(Error::InvalidRep(
                "corners do not satisfy every chord".into(),
            ));
        }
        Ok(PolygonRep { diagram, corners })
    }

    pub fn diagram(&self) -> &ChordDiagram {
        &self.diagram
    }

    pub fn corners(&self) -> &CornerSet {
        &self.corners
    }

    /// Number of polygon sides.
    pub fn k(&self) -> usize {
        self.corners.len()
    }
}

fn check_gaps(d: &ChordDiagram, t: &CornerSet) -> Result<()> {
    let positions = d.positions();
    match t.gaps().iter().find(|&&g| g >= positions) {
        Some(&gap) => Err(Error::InvalidGap { gap, positions }),
        None => Ok(()),
    }
}

/// Per-chord test: every arc of every chord contains a corner.
pub fn corners_satisfy_chords(d: &ChordDiagram, t: &CornerSet) -> Result<bool> {
    check_gaps(d, t)?;
    let len = d.positions();
    Ok((0..d.chord_count()).all(|c| d.arcs(c).iter().all(|a| t.pierces(a, len))))
}

/// Side test: no chord has both endpoints strictly between two cyclically
/// consecutive corners.
pub fn sides_are_empty(d: &ChordDiagram, t: &CornerSet) -> Result<bool> {
    check_gaps(d, t)?;
    if d.chord_count() == 0 {
        return Ok(true);
    }
    if t.is_empty() {
        return Ok(false);
    }
    // Side index of each position: gap g ends the side containing position g.
    let len = d.positions();
    let gaps = t.gaps();
    let side_of = |p: usize| {
        // positions (gaps[i-1], gaps[i]] form side i; positions after the last
        // corner wrap into side 0.
        let i = gaps.partition_point(|&g| g < p);
        if i == gaps.len() {
            0
        } else {
            i
        }
    };
    Ok((0..d.chord_count()).all(|c| {
        let [a, b] = d.ends(c);
        debug_assert!(a < len && b < len);
        side_of(a) != side_of(b)
    }))
}

/// Do the corners turn the diagram into a polygon representation?
///
/// Evaluates both the per-chord formulation and the empty-sides formulation;
/// they must agree.
pub fn verify_corners(d: &ChordDiagram, t: &CornerSet) -> Result<bool> {
    let by_chords = corners_satisfy_chords(d, t)?;
    debug_assert_eq!(
        Some(by_chords),
        sides_are_empty(d, t).ok(),
        "corner formulations disagree on {d} with {t:?}"
    );
    Ok(by_chords)
}

/// Exact polygon number of a diagram with a witness corner set.
///
/// If some chord has two empty arcs it is universal and two corners, one just
/// after each of its endpoints, suffice. Otherwise a shortest empty arc is
/// chosen; every satisfying set has a corner inside it. For each gap of that
/// arc the circle is cut there and the remaining arcs, now intervals on a
/// line, are pierced greedily at right ends. `O(n^2)` in the worst case and
/// near-linear when the diagram has a short empty arc.
pub fn psi_r(d: &ChordDiagram) -> Result<(usize, CornerSet)> {
    if d.chord_count() == 0 {
        return Err(Error::EmptyDiagram);
    }
    let len = d.positions();
    let empties = d.empty_arcs();
    if let Some(c) = empties.iter().position(|e| e[0] && e[1]) {
        let [a, b] = d.ends(c);
        return Ok((2, CornerSet::new(vec![a, b])));
    }

    // Minimal arcs sorted by start; no minimal arc contains another, so the
    // cyclic order of starts is also the cyclic order of ends.
    let mut minimal: Vec<Arc> = Vec::new();
    for (c, flags) in empties.iter().enumerate() {
        let arcs = d.arcs(c);
        for i in 0..2 {
            if flags[i] {
                minimal.push(arcs[i]);
            }
        }
    }
    minimal.sort_unstable_by_key(|a| a.start);

    let anchor = *minimal
        .iter()
        .min_by_key(|a| (a.gap_count(len), a.start))
        .expect("a nonempty diagram has an empty arc");

    let mut best: Option<Vec<usize>> = None;
    for g in anchor.gaps(len) {
        let picks = pierce_from(&minimal, g, len, best.as_ref().map(Vec::len));
        if let Some(picks) = picks {
            if best.as_ref().is_none_or(|b| picks.len() < b.len()) {
                best = Some(picks);
            }
        }
    }
    let gaps = best.expect("the first anchor gap always yields a solution");
    Ok((gaps.len(), CornerSet::new(gaps)))
}

/// Fixes a corner at gap `g` and greedily pierces the minimal arcs missing it.
///
/// Returns `None` once the count reaches `bound`, since it can no longer win.
fn pierce_from(minimal: &[Arc], g: usize, len: usize, bound: Option<usize>) -> Option<Vec<usize>> {
    // Offset of a gap after cutting the circle at g.
    let off = |x: usize| (x + len - g) % len;
    let first = minimal.partition_point(|a| a.start <= g);
    let mut picks = vec![g];
    // Rightmost corner placed so far, as an offset (0 is g itself).
    let mut last = 0usize;
    for i in 0..minimal.len() {
        let arc = &minimal[(first + i) % minimal.len()];
        if arc.contains_gap(g, len) {
            continue;
        }
        let lo = off(arc.start);
        let hi = lo + arc.gap_count(len) - 1;
        if last >= lo && last <= hi {
            continue;
        }
        last = hi;
        picks.push((g + hi) % len);
        if bound.is_some_and(|b| picks.len() >= b) {
            return None;
        }
    }
    Some(picks)
}

/// Reference polygon number: smallest gap subset accepted by [`verify_corners`].
pub fn bf_psi_r(d: &ChordDiagram) -> Result<usize> {
    bf_psi_r_capped(d, DEFAULT_CHORD_CAP)
}

pub fn bf_psi_r_capped(d: &ChordDiagram, cap: usize) -> Result<usize> {
    let n = d.chord_count();
    if n > cap {
        return Err(Error::OracleCap { size: n, cap });
    }
    if n == 0 {
        return Err(Error::EmptyDiagram);
    }
    let len = d.positions();
    for k in 1..=len {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            if verify_corners(d, &CornerSet::new(combo.clone()))? {
                return Ok(k);
            }
            if !next_combination(&mut combo, len) {
                break;
            }
        }
    }
    unreachable!("corners at every gap satisfy all chords")
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Clique cover number of the peripheral chords' intersection graph.
pub fn kappa_peripheral(d: &ChordDiagram) -> Result<usize> {
    kappa_peripheral_with(d, &Oracle::default())
}

pub fn kappa_peripheral_with(d: &ChordDiagram, oracle: &Oracle) -> Result<usize> {
    let g = intersection_graph(d);
    if g.is_clique() {
        return Err(Error::CliqueInput);
    }
    let (peripheral, _) = peripheral_chords(d);
    oracle.kappa(&g.induced_subgraph(&peripheral))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::canonical_cycle;

    fn d(s: &str) -> ChordDiagram {
        ChordDiagram::parse(s).unwrap()
    }

    fn cs(g: &[usize]) -> CornerSet {
        CornerSet::new(g.to_vec())
    }

    #[test]
    fn verify_examples() {
        assert!(verify_corners(&d("0 1 0 1"), &cs(&[1, 3])).unwrap());
        assert!(!verify_corners(&d("0 0 1 1 2 2"), &cs(&[0, 2])).unwrap());
        let c5 = canonical_cycle(5).unwrap();
        for a in 0..10 {
            for b in a + 1..10 {
                assert!(!verify_corners(&c5, &cs(&[a, b])).unwrap());
            }
        }
        assert_eq!(
            verify_corners(&c5, &cs(&[10])),
            Err(Error::InvalidGap { gap: 10, positions: 10 })
        );
    }

    #[test]
    fn both_formulations_agree_exhaustively() {
        let x = d("0 1 2 0 3 1 2 3");
        for mask in 0u32..1 << 8 {
            let gaps: Vec<usize> = (0..8).filter(|i| mask & (1 << i) != 0).collect();
            let t = cs(&gaps);
            assert_eq!(
                corners_satisfy_chords(&x, &t).unwrap(),
                sides_are_empty(&x, &t).unwrap(),
                "{gaps:?}"
            );
        }
    }

    #[test]
    fn psi_r_examples() {
        for n in 5..=12 {
            let c = canonical_cycle(n).unwrap();
            let (k, t) = psi_r(&c).unwrap();
            assert_eq!(k, n.div_ceil(2), "C_{n}");
            assert!(verify_corners(&c, &t).unwrap());
        }
        assert_eq!(psi_r(&d("0 0 1 1 2 2")).unwrap().0, 3);
        let (k, t) = psi_r(&d("0 1 0 1")).unwrap();
        assert_eq!(k, 2);
        assert!(verify_corners(&d("0 1 0 1"), &t).unwrap());
        assert_eq!(psi_r(&d("0 0")).unwrap(), (2, cs(&[0, 1])));
        assert_eq!(psi_r(&ChordDiagram::new(vec![]).unwrap()), Err(Error::EmptyDiagram));
    }

    #[test]
    fn bf_examples() {
        assert_eq!(bf_psi_r(&d("0 0")).unwrap(), 2);
        assert_eq!(bf_psi_r(&canonical_cycle(5).unwrap()).unwrap(), 3);
        assert_eq!(bf_psi_r(&d("0 0 1 1 2 2")).unwrap(), 3);
        assert!(matches!(
            bf_psi_r(&canonical_cycle(9).unwrap()),
            Err(Error::OracleCap { size: 9, cap: 8 })
        ));
    }

    #[test]
    fn kappa_peripheral_examples() {
        assert_eq!(kappa_peripheral(&d("0 0 1 1 2 2")).unwrap(), 3);
        assert_eq!(kappa_peripheral(&canonical_cycle(5).unwrap()).unwrap(), 3);
        assert_eq!(kappa_peripheral(&canonical_cycle(8).unwrap()).unwrap(), 4);
        assert_eq!(kappa_peripheral(&d("0 1 0 1")), Err(Error::CliqueInput));
    }

    #[test]
    fn corner_set_piercing_wraps() {
        let t = cs(&[0]);
        let wrap = Arc { chord: 0, start: 5, end: 1 };
        assert!(t.pierces(&wrap, 6));
        assert!(!cs(&[2]).pierces(&wrap, 6));
    }
}
