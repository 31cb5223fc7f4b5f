//! Exact toughness by exhaustive cutset search with ratio pruning.

use std::cmp::Ordering;
use std::collections::VecDeque;

use num_bigint::BigInt;
use serde::Serialize;

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{ExactRational, ToughnessValue};

/// Largest graph the subset enumeration accepts.
pub const MAX_TOUGHNESS_VERTICES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToughnessResult {
    pub value: ToughnessValue,
    /// Lexicographically smallest cutset attaining the minimum.
    pub witness: Option<Vec<usize>>,
    /// `c(G - witness)`.
    pub witness_components: usize,
}

fn masks(g: &Graph) -> Result<Vec<u64>> {
    g.bitmasks().ok_or(Error::Capacity {
        n: g.vertex_count(),
        guard: MAX_TOUGHNESS_VERTICES,
    })
}

/// `a/b < c/d` for positive denominators.
fn ratio_lt(a: usize, b: usize, c: usize, d: usize) -> bool {
    (a as u128) * (d as u128) < (c as u128) * (b as u128)
}

/// Minimum of `|S| / c(G - S)` over all `S` with `c(G - S) >= 2`, or
/// infinity for complete graphs.
///
/// Cutsets are enumerated by size. A cutset of size `k` leaves at most
/// `n - k` components, so once `k / (n - k)` exceeds the best ratio found
/// no larger cutset can improve it (or tie it) and the search stops.
pub fn toughness(g: &Graph) -> Result<ToughnessResult> {
    if g.is_complete() {
        return Ok(ToughnessResult {
            value: ToughnessValue::Infinite,
            witness: None,
            witness_components: 0,
        });
    }
    let adj = masks(g)?;
    let n = g.vertex_count();
    let all = bits::full(n);
    // (|S|, c, mask)
    let mut best: Option<(usize, usize, u64)> = None;
    for k in 0..=n.saturating_sub(2) {
        if let Some((bk, bc, _)) = best {
            if ratio_lt(bk, bc, k, n - k) {
                break;
            }
        }
        for s in bits::combinations(n, k) {
            let c = bits::component_count(&adj, all & !s);
            if c < 2 {
                continue;
            }
            let better = match best {
                None => true,
                Some((bk, bc, bs)) => {
                    ratio_lt(k, c, bk, bc)
                        || (!ratio_lt(bk, bc, k, c) && bits::lex_cmp(s, bs) == Ordering::Less)
                }
            };
            if better {
                best = Some((k, c, s));
            }
        }
    }
    let (k, c, s) = best.expect("a noncomplete graph has a disconnecting set");
    Ok(ToughnessResult {
        value: ToughnessValue::Finite(ExactRational::new(k as i64, c as i64)),
        witness: Some(bits::to_vec(s)),
        witness_components: c,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TToughness {
    pub holds: bool,
    /// A cutset with `|S| < t * c(G - S)` when `holds` is false.
    pub counterexample: Option<Vec<usize>>,
}

/// Decides `τ(G) >= t`, stopping at the first violating cutset.
pub fn is_t_tough(g: &Graph, t: &ExactRational) -> Result<TToughness> {
    if g.is_complete() || t.is_negative() || t.numer() == &BigInt::from(0) {
        return Ok(TToughness {
            holds: true,
            counterexample: None,
        });
    }
    let adj = masks(g)?;
    let n = g.vertex_count();
    let all = bits::full(n);
    let (p, q) = (t.numer().clone(), t.denom().clone());
    for k in 0..=n.saturating_sub(2) {
        // |S| >= t (n - |S|) means no cutset of this size or larger violates
        if BigInt::from(k) * &q >= &p * BigInt::from(n - k) {
            break;
        }
        for s in bits::combinations(n, k) {
            let c = bits::component_count(&adj, all & !s);
            if c >= 2 && BigInt::from(k) * &q < &p * BigInt::from(c) {
                return Ok(TToughness {
                    holds: false,
                    counterexample: Some(bits::to_vec(s)),
                });
            }
        }
    }
    Ok(TToughness {
        holds: true,
        counterexample: None,
    })
}

/// Number of internally vertex-disjoint `s`-`t` paths, via unit-capacity
/// augmenting paths on the vertex-split network.
fn local_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.vertex_count();
    // node 2v = v_in, 2v+1 = v_out; capacity 1 on v_in -> v_out
    let size = 2 * n;
    let mut cap = vec![vec![0i32; size]; size];
    for v in 0..n {
        cap[2 * v][2 * v + 1] = if v == s || v == t { n as i32 } else { 1 };
        for &w in g.neighbors(v) {
            cap[2 * v + 1][2 * w] = n as i32;
        }
    }
    let (src, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; size];
        prev[src] = src;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            if u == sink {
                break;
            }
            for w in 0..size {
                if cap[u][w] > 0 && prev[w] == usize::MAX {
                    prev[w] = u;
                    queue.push_back(w);
                }
            }
        }
        if prev[sink] == usize::MAX {
            return flow;
        }
        let mut v = sink;
        while v != src {
            let u = prev[v];
            cap[u][v] -= 1;
            cap[v][u] += 1;
            v = u;
        }
        flow += 1;
    }
}

/// Minimum size of a vertex cut; `n - 1` for complete graphs.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = n - 1;
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                best = best.min(local_connectivity(g, u, v));
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::named;

    fn finite(num: i64, den: i64) -> ToughnessValue {
        ToughnessValue::Finite(ExactRational::new(num, den))
    }

    #[test]
    fn complete_graphs_are_infinitely_tough() {
        let r = toughness(&Graph::complete(4)).unwrap();
        assert_eq!(r.value, ToughnessValue::Infinite);
        assert!(r.witness.is_none());
        assert!(is_t_tough(&Graph::complete(5), &ExactRational::from_integer(100)).unwrap().holds);
    }

    #[test]
    fn cycle_and_bipartite_values() {
        let r = toughness(&Graph::cycle(6)).unwrap();
        assert_eq!(r.value, finite(1, 1));
        assert_eq!(r.witness, Some(vec![0, 2]));
        let r = toughness(&Graph::complete_bipartite(2, 3)).unwrap();
        assert_eq!(r.value, finite(2, 3));
        assert_eq!(r.witness, Some(vec![0, 1]));
        assert_eq!(r.witness_components, 3);
    }

    #[test]
    fn disconnected_graph_has_toughness_zero() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let r = toughness(&g).unwrap();
        assert_eq!(r.value, finite(0, 1));
        assert_eq!(r.witness, Some(vec![]));
    }

    #[test]
    fn t_tough_decisions() {
        for n in 5..=8 {
            assert!(is_t_tough(&Graph::cycle(n), &ExactRational::from_integer(1)).unwrap().holds);
        }
        let k23 = Graph::complete_bipartite(2, 3);
        let d = is_t_tough(&k23, &ExactRational::new(3, 2)).unwrap();
        assert!(!d.holds);
        assert_eq!(d.counterexample, Some(vec![0, 1]));
        assert!(is_t_tough(&k23, &ExactRational::new(2, 3)).unwrap().holds);
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(vertex_connectivity(&Graph::cycle(5)), 2);
        assert_eq!(vertex_connectivity(&Graph::complete_bipartite(2, 3)), 2);
        assert_eq!(vertex_connectivity(&Graph::complete(4)), 3);
        assert_eq!(vertex_connectivity(&Graph::path(4)), 1);
        let (ico, _) = named::icosahedron();
        assert_eq!(vertex_connectivity(&ico), 5);
    }

    #[test]
    fn octahedron_and_icosahedron() {
        let (oct, _) = named::octahedron();
        // removing an equator 4-cycle leaves the two poles
        assert_eq!(toughness(&oct).unwrap().value, finite(2, 1));
        let (ico, _) = named::icosahedron();
        let r = toughness(&ico).unwrap();
        assert!(r.value.at_least(&ExactRational::new(3, 2)));
    }
}
