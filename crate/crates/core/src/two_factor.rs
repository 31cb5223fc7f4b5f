//! Tutte's 2-factor condition: `δ(S,T)`, 2-factors through a perfect
//! matching gadget, exhaustive barrier search, biased barriers and the
//! bookkeeping of odd components around a barrier.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::bits;
use crate::error::{precondition, violation, Error, Result};
use crate::graph::Graph;
use crate::matching::blossom;

/// Default vertex bound for the exponential searches in this module.
pub const DEFAULT_GUARD: usize = 18;

/// A disjoint pair `(S, T)` with its `δ`. A barrier when `delta < 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BarrierPair {
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub delta: i64,
}

impl BarrierPair {
    pub fn is_barrier(&self) -> bool {
        self.delta < 0
    }
}

/// Spanning 2-regular subgraph, as a sorted edge list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoFactor {
    pub edges: Vec<(usize, usize)>,
}

impl TwoFactor {
    /// Every edge is in `g` and every vertex has degree exactly 2.
    pub fn verify(&self, g: &Graph) -> bool {
        let mut deg = vec![0usize; g.vertex_count()];
        let mut seen = BTreeSet::new();
        for &(u, v) in &self.edges {
            if u >= g.vertex_count() || v >= g.vertex_count() || !g.has_edge(u, v) {
                return false;
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return false;
            }
            deg[u] += 1;
            deg[v] += 1;
        }
        deg.iter().all(|&d| d == 2)
    }

    /// The cycles of the factor, each starting at its smallest vertex.
    pub fn cycles(&self, n: usize) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] || adj[s].is_empty() {
                continue;
            }
            let mut cycle = vec![s];
            seen[s] = true;
            let (mut prev, mut cur) = (s, adj[s][0]);
            while cur != s {
                seen[cur] = true;
                cycle.push(cur);
                let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
                prev = cur;
                cur = next;
            }
            out.push(cycle);
        }
        out
    }
}

/// Outcome of [`has_two_factor`], with its certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TwoFactorDecision {
    Factor(TwoFactor),
    Barrier(BarrierPair),
}

impl TwoFactorDecision {
    pub fn has_factor(&self) -> bool {
        matches!(self, TwoFactorDecision::Factor(_))
    }
}

/// `δ(S,T) = 2|S| + Σ_{y∈T} d_{G-S}(y) - 2|T| - c(S,T)`, where `c(S,T)`
/// counts components `D` of `G - (S ∪ T)` with `e(D,T)` odd.
pub fn delta(g: &Graph, s: &[usize], t: &[usize]) -> Result<i64> {
    let cls = classify_components(g, s, t)?;
    let in_s: BTreeSet<usize> = s.iter().copied().collect();
    let deg_sum: usize = cls
        .t
        .iter()
        .map(|&y| g.neighbors(y).iter().filter(|w| !in_s.contains(w)).count())
        .sum();
    let odd = cls.components.iter().filter(|c| c.t_edges % 2 == 1).count();
    Ok(2 * cls.s.len() as i64 + deg_sum as i64 - 2 * cls.t.len() as i64 - odd as i64)
}

/// Bitmask `δ` for a fixed `T`, with `odd_t` the vertices having an odd
/// number of neighbors in `T`.
#[inline]
fn delta_masks(adj: &[u64], all: u64, s: u64, t: u64, odd_t: u64) -> i64 {
    let mut deg = 0u32;
    for y in bits::ones(t) {
        deg += (adj[y] & !s).count_ones();
    }
    let u = all & !s & !t;
    let odd = bits::components(adj, u)
        .filter(|d| (d & odd_t).count_ones() % 2 == 1)
        .count() as i64;
    2 * s.count_ones() as i64 + deg as i64 - 2 * t.count_ones() as i64 - odd
}

fn odd_neighbors_mask(adj: &[u64], n: usize, t: u64) -> u64 {
    (0..n).fold(0, |m, v| if (adj[v] & t).count_ones() % 2 == 1 { m | (1 << v) } else { m })
}

fn guarded_masks(g: &Graph, guard: usize) -> Result<Vec<u64>> {
    let n = g.vertex_count();
    if n > guard || n > 64 {
        return Err(Error::Capacity { n, guard });
    }
    Ok(g.bitmasks().expect("n <= 64"))
}

/// 2-factor via the degree-constrained gadget: every vertex `v` becomes
/// one port per incident edge plus `deg(v) - 2` hub vertices joined to all
/// of its ports; ports of the two ends of an edge are adjacent. Perfect
/// matchings of the gadget are exactly the 2-factors of `g` (the edges
/// whose ports are matched to each other).
pub fn two_factor_by_gadget(g: &Graph) -> Option<TwoFactor> {
    let n = g.vertex_count();
    if n == 0 {
        return Some(TwoFactor { edges: Vec::new() });
    }
    if (0..n).any(|v| g.degree(v) < 2) {
        return None;
    }
    let edges = g.edges();
    // port id of (vertex, position in its neighbor list)
    let mut port_base = vec![0usize; n];
    let mut next = 0;
    for v in 0..n {
        port_base[v] = next;
        next += g.degree(v);
    }
    let port = |v: usize, w: usize| port_base[v] + g.neighbors(v).binary_search(&w).unwrap();
    let mut hub_base = vec![0usize; n];
    for v in 0..n {
        hub_base[v] = next;
        next += g.degree(v) - 2;
    }
    let mut adj = vec![Vec::new(); next];
    for &(u, v) in &edges {
        let (a, b) = (port(u, v), port(v, u));
        adj[a].push(b);
        adj[b].push(a);
    }
    for v in 0..n {
        for h in 0..g.degree(v) - 2 {
            let hub = hub_base[v] + h;
            for i in 0..g.degree(v) {
                let p = port_base[v] + i;
                adj[hub].push(p);
                adj[p].push(hub);
            }
        }
    }
    let mate = blossom(&adj);
    if mate.contains(&usize::MAX) {
        return None;
    }
    let chosen = edges
        .into_iter()
        .filter(|&(u, v)| mate[port(u, v)] == port(v, u))
        .collect();
    Some(TwoFactor { edges: chosen })
}

/// Decides whether `g` has a 2-factor. The decision comes from the
/// matching gadget; a negative answer is certified by the biased barrier,
/// which needs the exhaustive search and therefore `n <= guard`.
pub fn has_two_factor(g: &Graph, guard: usize) -> Result<TwoFactorDecision> {
    if let Some(f) = two_factor_by_gadget(g) {
        return Ok(TwoFactorDecision::Factor(f));
    }
    Ok(TwoFactorDecision::Barrier(biased_barrier(g, guard)?))
}

pub fn extract_two_factor(g: &Graph) -> Result<TwoFactor> {
    two_factor_by_gadget(g).ok_or_else(|| violation("graph has no 2-factor"))
}

/// Every barrier `(S, T)`, up to `limit`, by exhaustive search over all
/// disjoint pairs. Pairs are produced for `T` in increasing mask order,
/// and for each `T` with `S` in decreasing mask order.
pub fn find_all_barriers(g: &Graph, limit: Option<usize>, guard: usize) -> Result<Vec<BarrierPair>> {
    let adj = guarded_masks(g, guard)?;
    let n = g.vertex_count();
    let all = bits::full(n);
    let mut out = Vec::new();
    for t in 0..=all {
        let odd_t = odd_neighbors_mask(&adj, n, t);
        for s in bits::submasks(all & !t) {
            let d = delta_masks(&adj, all, s, t, odd_t);
            if d < 0 {
                out.push(BarrierPair {
                    s: bits::to_vec(s),
                    t: bits::to_vec(t),
                    delta: d,
                });
                if limit.is_some_and(|l| out.len() >= l) {
                    return Ok(out);
                }
            }
        }
    }
    Ok(out)
}

/// The barrier with minimum `|T|`, then maximum `|S|`; remaining ties go
/// to the lexicographically smallest `T`, then `S`.
pub fn biased_barrier(g: &Graph, guard: usize) -> Result<BarrierPair> {
    let adj = guarded_masks(g, guard)?;
    let n = g.vertex_count();
    let all = bits::full(n);
    for size in 1..=n {
        let mut best: Option<(u64, u64, i64)> = None;
        for t in bits::combinations(n, size) {
            let odd_t = odd_neighbors_mask(&adj, n, t);
            for s in bits::submasks(all & !t) {
                if let Some((bt, bs, _)) = best {
                    if s.count_ones() < bs.count_ones() {
                        continue;
                    }
                    if s.count_ones() == bs.count_ones()
                        && (bits::lex_cmp(t, bt), bits::lex_cmp(s, bs)) >= (Ordering::Equal, Ordering::Equal)
                    {
                        continue;
                    }
                }
                let d = delta_masks(&adj, all, s, t, odd_t);
                if d < 0 {
                    best = Some((t, s, d));
                }
            }
        }
        if let Some((t, s, d)) = best {
            return Ok(BarrierPair {
                s: bits::to_vec(s),
                t: bits::to_vec(t),
                delta: d,
            });
        }
    }
    Err(violation("graph has a 2-factor, so it has no barrier"))
}

/// One component of `G - (S ∪ T)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentInfo {
    pub vertices: Vec<usize>,
    /// `e_G(D, T)`.
    pub t_edges: usize,
}

impl ComponentInfo {
    pub fn is_odd(&self) -> bool {
        self.t_edges % 2 == 1
    }

    /// `k` with `e_G(D,T) = 2k + 1`, for odd components.
    pub fn class(&self) -> Option<usize> {
        self.is_odd().then_some(self.t_edges / 2)
    }
}

/// Odd/even components around `(S, T)` and the counts derived from them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentClassification {
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    /// All components of `G - (S ∪ T)`, ordered by smallest vertex.
    pub components: Vec<ComponentInfo>,
    /// `k -> indices of the components with e(D,T) = 2k + 1`.
    pub odd_classes: BTreeMap<usize, Vec<usize>>,
    pub even_components: Vec<usize>,
    /// `V(G) - (S ∪ T)`.
    pub u: Vec<usize>,
    /// `k -> union of the vertex sets in class k`.
    pub u_by_class: BTreeMap<usize, Vec<usize>>,
    /// `c'(y)`: odd components meeting `y` in exactly one edge.
    pub c_prime: BTreeMap<usize, usize>,
    /// `c(y)`: the same, restricted to classes `k >= 1`.
    pub c_count: BTreeMap<usize, usize>,
    pub t0: Vec<usize>,
    pub t1: Vec<usize>,
    pub t2: Vec<usize>,
    /// `Σ_{y∈T2} (c(y) - 2)`.
    pub p: usize,
    /// For `k >= 2`: class-`k` components with exactly `2k + 1` vertices.
    pub tight_classes: BTreeMap<usize, Vec<usize>>,
    /// For `k >= 2`: the remaining class-`k` components.
    pub loose_classes: BTreeMap<usize, Vec<usize>>,
    /// `|T| - |S| - Σ_{k≥1} k c_{2k+1} - 1`.
    pub eq_t_residual: i64,
    /// `2|T2| - (Σ_{k≥1} (2k+1) c_{2k+1} - |T1| - p)`.
    pub eq_t2_residual: i64,
    #[serde(skip)]
    component_of: Vec<Option<usize>>,
}

impl ComponentClassification {
    /// `c_{2k+1}`.
    pub fn count(&self, k: usize) -> usize {
        self.odd_classes.get(&k).map_or(0, Vec::len)
    }

    pub fn c3(&self) -> usize {
        self.count(1)
    }

    /// `c(S,T)`: number of odd components.
    pub fn odd_count(&self) -> usize {
        self.odd_classes.values().map(Vec::len).sum()
    }

    /// `ℓ = Σ_{k≥2} (2k+1) c_{2k+1}`.
    pub fn ell(&self) -> usize {
        self.odd_classes
            .iter()
            .filter(|(&k, _)| k >= 2)
            .map(|(&k, v)| (2 * k + 1) * v.len())
            .sum()
    }

    /// Index of the component containing `v`, if `v ∈ U`.
    pub fn component_of(&self, v: usize) -> Option<usize> {
        self.component_of.get(v).copied().flatten()
    }

    pub fn class_of(&self, component: usize) -> Option<usize> {
        self.components[component].class()
    }
}

/// Classifies the components of `G - (S ∪ T)` and derives `c'(y)`,
/// `c(y)`, the partition `T0/T1/T2`, `p`, and the residuals of the two
/// counting identities that hold for biased barriers.
pub fn classify_components(g: &Graph, s: &[usize], t: &[usize]) -> Result<ComponentClassification> {
    let n = g.vertex_count();
    let mut in_s = vec![false; n];
    let mut in_t = vec![false; n];
    for &v in s {
        g.check_vertex(v)?;
        in_s[v] = true;
    }
    for &v in t {
        g.check_vertex(v)?;
        if in_s[v] {
            return Err(precondition("S and T intersect"));
        }
        in_t[v] = true;
    }
    let s: Vec<usize> = (0..n).filter(|&v| in_s[v]).collect();
    let t: Vec<usize> = (0..n).filter(|&v| in_t[v]).collect();
    let removed: Vec<bool> = (0..n).map(|v| in_s[v] || in_t[v]).collect();
    let comps = g.components_without(&removed);
    let mut component_of = vec![None; n];
    let mut components = Vec::with_capacity(comps.len());
    for (i, c) in comps.into_iter().enumerate() {
        let t_edges = c
            .iter()
            .map(|&v| g.neighbors(v).iter().filter(|&&w| in_t[w]).count())
            .sum();
        for &v in &c {
            component_of[v] = Some(i);
        }
        components.push(ComponentInfo { vertices: c, t_edges });
    }
    let mut odd_classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut even_components = Vec::new();
    let mut u_by_class: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut tight_classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut loose_classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, c) in components.iter().enumerate() {
        match c.class() {
            Some(k) => {
                odd_classes.entry(k).or_default().push(i);
                u_by_class.entry(k).or_default().extend(&c.vertices);
                if k >= 2 {
                    if c.vertices.len() == 2 * k + 1 {
                        tight_classes.entry(k).or_default().push(i);
                    } else {
                        loose_classes.entry(k).or_default().push(i);
                    }
                }
            }
            None => even_components.push(i),
        }
    }
    for vs in u_by_class.values_mut() {
        vs.sort_unstable();
    }
    let mut c_prime = BTreeMap::new();
    let mut c_count = BTreeMap::new();
    let (mut t0, mut t1, mut t2) = (Vec::new(), Vec::new(), Vec::new());
    let mut p = 0;
    for &y in &t {
        let mut per_comp: BTreeMap<usize, usize> = BTreeMap::new();
        for &w in g.neighbors(y) {
            if let Some(ci) = component_of[w] {
                *per_comp.entry(ci).or_default() += 1;
            }
        }
        let single: Vec<usize> = per_comp
            .iter()
            .filter(|&(&ci, &m)| m == 1 && components[ci].is_odd())
            .map(|(&ci, _)| ci)
            .collect();
        let cp = single.len();
        let cy = single.iter().filter(|&&ci| components[ci].t_edges >= 3).count();
        c_prime.insert(y, cp);
        c_count.insert(y, cy);
        match cy {
            0 => t0.push(y),
            1 => t1.push(y),
            _ => {
                t2.push(y);
                p += cy - 2;
            }
        }
    }
    let weighted: i64 = odd_classes.iter().map(|(&k, v)| (k * v.len()) as i64).sum();
    let eq_t_residual = t.len() as i64 - s.len() as i64 - weighted - 1;
    let ends: i64 = odd_classes
        .iter()
        .filter(|(&k, _)| k >= 1)
        .map(|(&k, v)| ((2 * k + 1) * v.len()) as i64)
        .sum();
    let eq_t2_residual = 2 * t2.len() as i64 - (ends - t1.len() as i64 - p as i64);
    let u = (0..n).filter(|&v| !removed[v]).collect();
    Ok(ComponentClassification {
        s,
        t,
        components,
        odd_classes,
        even_components,
        u,
        u_by_class,
        c_prime,
        c_count,
        t0,
        t1,
        t2,
        p,
        tight_classes,
        loose_classes,
        eq_t_residual,
        eq_t2_residual,
        component_of,
    })
}

/// Structural properties every biased barrier must have.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BiasedPropertyReport {
    /// `T` is independent.
    pub t_independent: bool,
    /// Even components send no edge to `T`.
    pub even_components_detached: bool,
    /// Each `y ∈ T` has at most one edge into each odd component.
    pub one_edge_per_t_vertex: bool,
    /// Each vertex of an odd component has at most one edge to `T`.
    pub one_t_edge_per_vertex: bool,
    pub delta: i64,
    /// `δ = -2`. Expected for every biased barrier; kept separate so a
    /// failure is surfaced as a finding.
    pub delta_is_minus_two: bool,
    /// `δ(S, T - y) >= 0` for every `y ∈ T`.
    pub t_minimal: bool,
    pub eq_t_residual: i64,
    pub eq_t2_residual: i64,
}

impl BiasedPropertyReport {
    /// The four structural properties.
    pub fn structural_hold(&self) -> bool {
        self.t_independent && self.even_components_detached && self.one_edge_per_t_vertex && self.one_t_edge_per_vertex
    }

    pub fn all_hold(&self) -> bool {
        self.structural_hold()
            && self.delta_is_minus_two
            && self.t_minimal
            && self.eq_t_residual == 0
            && self.eq_t2_residual == 0
    }
}

/// Evaluates the biased-barrier properties on `(S, T)`; a report, never an
/// assertion.
pub fn check_biased_properties(g: &Graph, b: &BarrierPair) -> Result<BiasedPropertyReport> {
    let cls = classify_components(g, &b.s, &b.t)?;
    let in_t: BTreeSet<usize> = cls.t.iter().copied().collect();
    let t_independent = cls.t.iter().all(|&y| g.neighbors(y).iter().all(|w| !in_t.contains(w)));
    let even_components_detached = cls.even_components.iter().all(|&ci| cls.components[ci].t_edges == 0);
    let mut one_edge_per_t_vertex = true;
    for &y in &cls.t {
        let mut per: BTreeMap<usize, usize> = BTreeMap::new();
        for &w in g.neighbors(y) {
            if let Some(ci) = cls.component_of(w) {
                if cls.components[ci].is_odd() {
                    *per.entry(ci).or_default() += 1;
                }
            }
        }
        if per.values().any(|&m| m > 1) {
            one_edge_per_t_vertex = false;
        }
    }
    let one_t_edge_per_vertex = cls
        .components
        .iter()
        .filter(|c| c.is_odd())
        .flat_map(|c| c.vertices.iter())
        .all(|&v| g.neighbors(v).iter().filter(|w| in_t.contains(w)).count() <= 1);
    let d = delta(g, &cls.s, &cls.t)?;
    let mut t_minimal = true;
    for &y in &cls.t {
        let rest: Vec<usize> = cls.t.iter().copied().filter(|&w| w != y).collect();
        if delta(g, &cls.s, &rest)? < 0 {
            t_minimal = false;
        }
    }
    Ok(BiasedPropertyReport {
        t_independent,
        even_components_detached,
        one_edge_per_t_vertex,
        one_t_edge_per_vertex,
        delta: d,
        delta_is_minus_two: d == -2,
        t_minimal,
        eq_t_residual: cls.eq_t_residual,
        eq_t2_residual: cls.eq_t2_residual,
    })
}

/// Exact Hamiltonicity by backtracking; the cycle is returned as a vertex
/// sequence starting at 0.
pub fn is_hamiltonian(g: &Graph, guard: usize) -> Result<Option<Vec<usize>>> {
    let n = g.vertex_count();
    if n > guard.max(3) || n > 64 {
        return Err(Error::Capacity { n, guard });
    }
    if n < 3 || g.min_degree() < 2 || !g.is_connected() {
        return Ok(None);
    }
    let adj = g.bitmasks().unwrap();
    let all = bits::full(n);
    let mut path = vec![0usize];

    fn extend(adj: &[u64], all: u64, path: &mut Vec<usize>, visited: u64) -> bool {
        let n = adj.len();
        let last = *path.last().unwrap();
        if path.len() == n {
            return adj[last] & 1 != 0;
        }
        let free = all & !visited;
        // every unvisited vertex needs two usable neighbours
        for v in bits::ones(free) {
            let usable = adj[v] & (free | 1 | (1 << last));
            if usable.count_ones() < 2 {
                return false;
            }
        }
        // the start must stay reachable
        if adj[0] & free == 0 {
            return false;
        }
        for w in bits::ones(adj[last] & free) {
            path.push(w);
            if extend(adj, all, path, visited | (1 << w)) {
                return true;
            }
            path.pop();
        }
        false
    }

    if extend(&adj, all, &mut path, 1) {
        Ok(Some(path))
    } else {
        Ok(None)
    }
}
