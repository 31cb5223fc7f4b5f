//! Exhaustive catalog of connected graphs up to isomorphism, for small `n`.
//!
//! Graphs on `n` vertices are obtained from those on `n - 1` by adding a
//! vertex with every nonempty neighborhood; duplicates are removed by a
//! canonical code computed with colour refinement and individualization.

use std::collections::BTreeSet;

use crate::bits;
use crate::error::{precondition, Result};
use crate::graph::Graph;

/// Largest `n` the catalog builds (the code packs the upper triangle of
/// the adjacency matrix into a `u64`).
pub const MAX_CATALOG_VERTICES: usize = 10;

/// Refines an ordered colouring until it is equitable. Colours are ranks,
/// and the new colour of a vertex is the rank of its old colour together
/// with its neighbor counts per colour, so the result is invariant under
/// relabelling.
fn refine(adj: &[u64], colour: &mut [usize]) {
    let n = adj.len();
    loop {
        let cells = colour.iter().copied().max().map_or(0, |m| m + 1);
        let mut sig: Vec<(usize, Vec<u8>, usize)> = (0..n)
            .map(|v| {
                let mut counts = vec![0u8; cells];
                for w in bits::ones(adj[v]) {
                    counts[colour[w]] += 1;
                }
                (colour[v], counts, v)
            })
            .collect();
        sig.sort_unstable();
        let mut next = vec![0usize; n];
        let mut rank = 0;
        for i in 0..n {
            if i > 0 && (sig[i].0, &sig[i].1) != (sig[i - 1].0, &sig[i - 1].1) {
                rank += 1;
            }
            next[sig[i].2] = rank;
        }
        let done = rank + 1 == cells;
        colour.copy_from_slice(&next);
        if done {
            return;
        }
    }
}

fn code_of(adj: &[u64], colour: &[usize]) -> u64 {
    let n = adj.len();
    let mut order = vec![0usize; n];
    for v in 0..n {
        order[colour[v]] = v;
    }
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = (code << 1) | ((adj[order[i]] >> order[j]) & 1);
        }
    }
    code
}

fn search(adj: &[u64], colour: Vec<usize>, best: &mut Option<u64>) {
    let n = adj.len();
    let mut colour = colour;
    refine(adj, &mut colour);
    let cells = colour.iter().copied().max().map_or(0, |m| m + 1);
    if cells == n {
        let code = code_of(adj, &colour);
        if best.is_none_or(|b| code > b) {
            *best = Some(code);
        }
        return;
    }
    // first smallest non-singleton cell
    let mut size = vec![0usize; cells];
    for &c in &colour {
        size[c] += 1;
    }
    let target = (0..cells)
        .filter(|&c| size[c] > 1)
        .min_by_key(|&c| (size[c], c))
        .unwrap();
    for v in (0..n).filter(|&v| colour[v] == target) {
        // split v off in front of its cell
        let mut c2: Vec<usize> = colour.iter().map(|&c| if c > target { c + 1 } else { c }).collect();
        for w in 0..n {
            if colour[w] == target && w != v {
                c2[w] = target + 1;
            }
        }
        search(adj, c2, best);
    }
}

/// Canonical code: equal exactly for isomorphic graphs of equal order.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    let n = g.vertex_count();
    if n > MAX_CATALOG_VERTICES + 1 {
        return Err(precondition(format!("canonical codes support n <= {}", MAX_CATALOG_VERTICES + 1)));
    }
    let adj = g.bitmasks().unwrap();
    Ok(canonical_code_masks(&adj))
}

fn canonical_code_masks(adj: &[u64]) -> u64 {
    let n = adj.len();
    let mut colour: Vec<usize> = (0..n).map(|v| adj[v].count_ones() as usize).collect();
    // degrees as initial ranks
    let distinct: BTreeSet<usize> = colour.iter().copied().collect();
    let rank: Vec<usize> = distinct.into_iter().collect();
    for c in colour.iter_mut() {
        *c = rank.binary_search(c).unwrap();
    }
    let mut best = None;
    search(adj, colour, &mut best);
    best.unwrap_or(0)
}

fn from_masks(adj: &[u64]) -> Graph {
    let mut g = Graph::new(adj.len());
    for (u, &m) in adj.iter().enumerate() {
        for v in bits::ones(m) {
            if u < v {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// All connected graphs on exactly `n` vertices, up to isomorphism, one
/// representative per class, sorted by canonical code.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_CATALOG_VERTICES {
        return Err(precondition(format!("catalog supports 1 <= n <= {MAX_CATALOG_VERTICES}")));
    }
    let mut level: Vec<Vec<u64>> = vec![vec![0]];
    for m in 1..n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for adj in &level {
            for nb in 1..(1u64 << m) {
                let mut ext: Vec<u64> = adj.clone();
                for w in bits::ones(nb) {
                    ext[w] |= 1 << m;
                }
                ext.push(nb);
                let code = canonical_code_masks(&ext);
                if seen.insert(code) {
                    next.push((code, ext));
                }
            }
        }
        next.sort_unstable();
        level = next.into_iter().map(|(_, a)| a).collect();
    }
    Ok(level.iter().map(|a| from_masks(a)).collect())
}

/// Connected graphs for every `n` in `lo..=hi`.
pub fn connected_graphs_range(lo: usize, hi: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in lo..=hi {
        out.extend(connected_graphs(n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_up_to_seven() {
        let expected = [1, 1, 2, 6, 21, 112, 853];
        for (i, &count) in expected.iter().enumerate() {
            let graphs = connected_graphs(i + 1).unwrap();
            assert_eq!(graphs.len(), count, "n = {}", i + 1);
            assert!(graphs.iter().all(Graph::is_connected));
        }
    }

    #[test]
    fn codes_are_invariant() {
        let c6 = Graph::cycle(6);
        let relabelled = Graph::from_edges(6, &[(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]).unwrap();
        assert_eq!(canonical_code(&c6).unwrap(), canonical_code(&relabelled).unwrap());
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_ne!(canonical_code(&c6).unwrap(), canonical_code(&two_triangles).unwrap());
        assert_ne!(
            canonical_code(&Graph::petersen()).unwrap(),
            canonical_code(&Graph::complete_bipartite(5, 5)).unwrap()
        );
    }
}
