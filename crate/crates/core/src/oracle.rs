//! Exponential-time reference computations used to cross-check the fast paths.
//!
//! Everything here enumerates vertex subsets as bitmasks, so inputs are bounded
//! by a configurable cap (16 vertices unless overridden).

use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph};

/// Default cap on the vertex count accepted by the graph oracles.
pub const DEFAULT_GRAPH_CAP: usize = 16;

/// Brute-force oracles with a size cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    pub cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            cap: DEFAULT_GRAPH_CAP,
        }
    }
}

impl Oracle {
    pub fn with_cap(cap: usize) -> Self {
        Oracle { cap: cap.min(24) }
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if g.n() > self.cap {
            return Err(Error::OracleCap {
                size: g.n(),
                cap: self.cap,
            });
        }
        Ok(())
    }

    /// Independence number by exhaustive subset search.
    pub fn alpha(&self, g: &Graph) -> Result<usize> {
        self.check(g)?;
        let n = g.n();
        let adj = g.masks();
        let indep = independent_table(&adj);
        Ok((0..1u32 << n)
            .filter(|&m| indep[m as usize])
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0))
    }

    /// Clique cover number: fewest cliques partitioning the vertex set.
    pub fn kappa(&self, g: &Graph) -> Result<usize> {
        self.check(g)?;
        let n = g.n();
        if n == 0 {
            return Ok(0);
        }
        let adj = g.masks();
        let clique = clique_table(&adj);
        let alpha = alpha_table(&adj);
        let full = (1u32 << n) - 1;
        let search = CoverSearch {
            adj: &adj,
            clique: &clique,
            alpha: &alpha,
        };
        let lower = alpha[full as usize] as usize;
        Ok((lower..=n)
            .find(|&k| search.cover(full, k))
            .expect("n singletons always cover"))
    }

    /// Asteroidal number with one maximum asteroidal set.
    ///
    /// A set `A` is asteroidal when, for every `a` in `A`, all remaining members
    /// lie in a single component of `G - N[a]`. Pairs therefore need to be
    /// nonadjacent, and the number of a graph with vertices is at least one.
    /// For disconnected graphs the maximum over components is reported.
    pub fn asteroidal_number(&self, g: &Graph) -> Result<(usize, Vec<usize>)> {
        self.check(g)?;
        let mut best: (usize, Vec<usize>) = (0, Vec::new());
        for comp in connected_components(g) {
            let h = g.induced_subgraph(&comp);
            let (size, set) = asteroidal_connected(&h);
            if size > best.0 {
                best = (size, set.into_iter().map(|i| comp[i]).collect());
            }
        }
        Ok(best)
    }
}

pub fn bf_alpha(g: &Graph) -> Result<usize> {
    Oracle::default().alpha(g)
}

pub fn bf_kappa(g: &Graph) -> Result<usize> {
    Oracle::default().kappa(g)
}

pub fn bf_asteroidal_number(g: &Graph) -> Result<(usize, Vec<usize>)> {
    Oracle::default().asteroidal_number(g)
}

fn independent_table(adj: &[u32]) -> Vec<bool> {
    let size = 1usize << adj.len();
    let mut t = vec![false; size];
    t[0] = true;
    for m in 1..size {
        let low = m.trailing_zeros() as usize;
        let rest = m & (m - 1);
        t[m] = t[rest] && adj[low] & m as u32 == 0;
    }
    t
}

fn clique_table(adj: &[u32]) -> Vec<bool> {
    let size = 1usize << adj.len();
    let mut t = vec![false; size];
    t[0] = true;
    for m in 1..size {
        let low = m.trailing_zeros() as usize;
        let rest = m & (m - 1);
        t[m] = t[rest] && adj[low] & rest as u32 == rest as u32;
    }
    t
}

/// Independence number of every induced subgraph.
fn alpha_table(adj: &[u32]) -> Vec<u8> {
    let size = 1usize << adj.len();
    let mut t = vec![0u8; size];
    for m in 1..size {
        let low = m.trailing_zeros() as usize;
        let without = m & (m - 1);
        let closed = adj[low] as usize | (1 << low);
        t[m] = t[without].max(1 + t[m & !closed]);
    }
    t
}

struct CoverSearch<'a> {
    adj: &'a [u32],
    clique: &'a [bool],
    alpha: &'a [u8],
}

impl CoverSearch<'_> {
    /// Can `rem` be partitioned into at most `k` cliques?
    fn cover(&self, rem: u32, k: usize) -> bool {
        if rem == 0 {
            return true;
        }
        if k == 0 || self.alpha[rem as usize] as usize > k {
            return false;
        }
        let v = rem.trailing_zeros();
        let bit = 1u32 << v;
        let cand = self.adj[v as usize] & rem;
        // Only cliques maximal within `rem` need to be tried for the class of v.
        let mut sub = cand;
        loop {
            if self.clique[sub as usize] && self.is_maximal(sub, cand)
                && self.cover(rem & !(sub | bit), k - 1) {
                    return true;
                }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & cand;
        }
        false
    }

    fn is_maximal(&self, sub: u32, cand: u32) -> bool {
        let mut rest = cand & !sub;
        while rest != 0 {
            let w = rest.trailing_zeros();
            if self.adj[w as usize] & sub == sub {
                return false;
            }
            rest &= rest - 1;
        }
        true
    }
}

fn asteroidal_connected(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    if n == 0 {
        return (0, Vec::new());
    }
    let adj = g.masks();
    // label[a][v]: component id of v in G - N[a], or u8::MAX when v is in N[a].
    let labels: Vec<Vec<u8>> = (0..n).map(|a| components_avoiding(&adj, a)).collect();
    let indep = independent_table(&adj);

    let mut best = (1usize, vec![0usize]);
    for m in 1..(1u32 << n) {
        let size = m.count_ones() as usize;
        if size <= best.0 || !indep[m as usize] {
            continue;
        }
        if is_asteroidal(m, &labels) {
            best = (size, bits(m));
        }
    }
    best
}

fn is_asteroidal(set: u32, labels: &[Vec<u8>]) -> bool {
    let members = bits(set);
    members.iter().all(|&a| {
        let mut shared: Option<u8> = None;
        members.iter().filter(|&&x| x != a).all(|&x| {
            let l = labels[a][x];
            if l == u8::MAX {
                return false;
            }
            *shared.get_or_insert(l) == l
        })
    })
}

fn components_avoiding(adj: &[u32], a: usize) -> Vec<u8> {
    let n = adj.len();
    let blocked = adj[a] | (1 << a);
    let mut label = vec![u8::MAX; n];
    let mut next = 0u8;
    for s in 0..n {
        if blocked & (1 << s) != 0 || label[s] != u8::MAX {
            continue;
        }
        let mut stack = vec![s];
        label[s] = next;
        while let Some(v) = stack.pop() {
            let mut nb = adj[v] & !blocked;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if label[w] == u8::MAX {
                    label[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    label
}

fn bits(mut m: u32) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subdivided_claw() -> Graph {
        // center 0; middle vertices 1,2,3; leaves 4,5,6
        Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap()
    }

    #[test]
    fn alpha_values() {
        assert_eq!(bf_alpha(&Graph::complete(4)).unwrap(), 1);
        assert_eq!(bf_alpha(&Graph::cycle(5)).unwrap(), 2);
        assert_eq!(bf_alpha(&Graph::empty(3)).unwrap(), 3);
        assert_eq!(bf_alpha(&Graph::empty(0)).unwrap(), 0);
    }

    #[test]
    fn kappa_values() {
        assert_eq!(bf_kappa(&Graph::complete(4)).unwrap(), 1);
        assert_eq!(bf_kappa(&Graph::cycle(5)).unwrap(), 3);
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(bf_kappa(&two_k2).unwrap(), 2);
        assert_eq!(bf_kappa(&Graph::cycle(8)).unwrap(), 4);
        assert_eq!(bf_kappa(&Graph::star(3)).unwrap(), 3);
    }

    #[test]
    fn asteroidal_values() {
        assert_eq!(bf_asteroidal_number(&Graph::star(3)).unwrap().0, 2);
        let (k, w) = bf_asteroidal_number(&Graph::cycle(6)).unwrap();
        assert_eq!(k, 3);
        assert_eq!(w.len(), 3);
        let (k, w) = bf_asteroidal_number(&subdivided_claw()).unwrap();
        assert_eq!(k, 3);
        assert_eq!(w, vec![4, 5, 6]);
        assert_eq!(bf_asteroidal_number(&Graph::complete(5)).unwrap().0, 1);
        assert_eq!(bf_asteroidal_number(&Graph::empty(0)).unwrap(), (0, vec![]));
    }

    #[test]
    fn asteroidal_of_disconnected_is_component_max() {
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)];
        edges.push((7, 8));
        let g = Graph::from_edges(9, &edges).unwrap();
        assert_eq!(bf_asteroidal_number(&g).unwrap().0, 3);
        assert_eq!(bf_asteroidal_number(&Graph::empty(2)).unwrap().0, 1);
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::empty(17);
        assert_eq!(
            bf_alpha(&g),
            Err(Error::OracleCap { size: 17, cap: 16 })
        );
        assert!(bf_kappa(&g).is_err());
        assert!(bf_asteroidal_number(&g).is_err());
        assert_eq!(Oracle::with_cap(17).alpha(&g).unwrap(), 17);
    }
}
