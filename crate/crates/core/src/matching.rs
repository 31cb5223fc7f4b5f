//! Maximum matchings in general multigraphs, Berge deficiency with
//! witnesses, maximal deficiency sets, and the bipartite matchings on the
//! contracted graph `B(X)`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{precondition, violation, Result};
use crate::graph::{EdgeId, Multigraph, VertexMap};

const NONE: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges, by edge id.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Matching {
    pub edges: BTreeSet<EdgeId>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Vertices covered in `mg`.
    pub fn covered(&self, mg: &Multigraph) -> BTreeSet<usize> {
        self.edges
            .iter()
            .filter_map(|&e| mg.endpoints(e))
            .flat_map(|(u, v)| [u, v])
            .collect()
    }

    /// `mate[v]` for every vertex of `mg`.
    pub fn mates(&self, mg: &Multigraph) -> Vec<Option<usize>> {
        let mut mate = vec![None; mg.vertex_count()];
        for &e in &self.edges {
            if let Some((u, v)) = mg.endpoints(e) {
                mate[u] = Some(v);
                mate[v] = Some(u);
            }
        }
        mate
    }

    /// True iff every edge exists in `mg` and no two share a vertex.
    pub fn is_valid_in(&self, mg: &Multigraph) -> bool {
        let mut used = BTreeSet::new();
        for &e in &self.edges {
            match mg.endpoints(e) {
                Some((u, v)) => {
                    if !used.insert(u) || !used.insert(v) {
                        return false;
                    }
                }
                None => return false,
            }
        }
        true
    }
}

/// Edmonds' blossom search on a simple adjacency list. Returns `mate`.
pub(crate) fn blossom(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut mate = vec![NONE; n];
    // greedy start
    for v in 0..n {
        if mate[v] == NONE {
            if let Some(&w) = adj[v].iter().find(|&&w| mate[w] == NONE && w != v) {
                mate[v] = w;
                mate[w] = v;
            }
        }
    }
    let mut parent = vec![NONE; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    let mut in_blossom = vec![false; n];
    let mut queue = VecDeque::new();

    let lca = |mate: &[usize], base: &[usize], parent: &[usize], a: usize, b: usize| -> usize {
        let mut seen = vec![false; n];
        let mut a = a;
        loop {
            a = base[a];
            seen[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = parent[mate[a]];
        }
        let mut b = b;
        loop {
            b = base[b];
            if seen[b] {
                return b;
            }
            b = parent[mate[b]];
        }
    };

    for root in 0..n {
        if mate[root] != NONE {
            continue;
        }
        parent.iter_mut().for_each(|p| *p = NONE);
        used.iter_mut().for_each(|u| *u = false);
        for (i, b) in base.iter_mut().enumerate() {
            *b = i;
        }
        queue.clear();
        used[root] = true;
        queue.push_back(root);
        let mut end = NONE;
        'search: while let Some(v) = queue.pop_front() {
            for &to in &adj[v] {
                if base[v] == base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && parent[mate[to]] != NONE) {
                    let cur = lca(&mate, &base, &parent, v, to);
                    in_blossom.iter_mut().for_each(|b| *b = false);
                    // mark both halves of the blossom
                    for (mut x, mut child) in [(v, to), (to, v)] {
                        while base[x] != cur {
                            in_blossom[base[x]] = true;
                            in_blossom[base[mate[x]]] = true;
                            parent[x] = child;
                            child = mate[x];
                            x = parent[mate[x]];
                        }
                    }
                    for i in 0..n {
                        if in_blossom[base[i]] {
                            base[i] = cur;
                            if !used[i] {
                                used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if parent[to] == NONE {
                    parent[to] = v;
                    if mate[to] == NONE {
                        end = to;
                        break 'search;
                    }
                    used[mate[to]] = true;
                    queue.push_back(mate[to]);
                }
            }
        }
        let mut v = end;
        while v != NONE {
            let pv = parent[v];
            let next = mate[pv];
            mate[v] = pv;
            mate[pv] = v;
            v = next;
        }
    }
    mate
}

fn matching_from_mates(mg: &Multigraph, mate: &[usize]) -> Matching {
    let mut edges = BTreeSet::new();
    for (u, &v) in mate.iter().enumerate() {
        if v != NONE && u < v {
            edges.insert(mg.edge_between(u, v).expect("matched pair is adjacent"));
        }
    }
    Matching { edges }
}

/// Maximum-cardinality matching. Between parallel edges the lowest id is
/// used.
pub fn max_matching(mg: &Multigraph) -> Matching {
    let mate = blossom(&mg.simple_adjacency());
    matching_from_mates(mg, &mate)
}

/// Maximum matching of `mg - removed`, as a matching of `mg`.
fn max_matching_avoiding(mg: &Multigraph, removed: &BTreeSet<usize>) -> Matching {
    let adj: Vec<Vec<usize>> = (0..mg.vertex_count())
        .map(|v| {
            if removed.contains(&v) {
                Vec::new()
            } else {
                mg.neighbors(v).into_iter().filter(|w| !removed.contains(w)).collect()
            }
        })
        .collect();
    matching_from_mates(mg, &blossom(&adj))
}

/// Number of odd-order components of `mg - x`.
pub fn odd_components(mg: &Multigraph, x: &BTreeSet<usize>) -> usize {
    mg.components_without(x).iter().filter(|c| c.len() % 2 == 1).count()
}

/// `odd(G - X) - |X|`.
pub fn surplus(mg: &Multigraph, x: &BTreeSet<usize>) -> i64 {
    odd_components(mg, x) as i64 - x.len() as i64
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeficiencyCertificate {
    pub deficiency: usize,
    pub witness: BTreeSet<usize>,
    pub odd_component_count: usize,
}

/// Gallai–Edmonds sets `(D, A)`: vertices missed by some maximum matching,
/// and their neighbors outside `D`.
fn gallai_edmonds(mg: &Multigraph) -> (BTreeSet<usize>, BTreeSet<usize>) {
    let nu = max_matching(mg).len();
    let d: BTreeSet<usize> = (0..mg.vertex_count())
        .filter(|&v| max_matching_avoiding(mg, &BTreeSet::from([v])).len() == nu)
        .collect();
    let a: BTreeSet<usize> = d
        .iter()
        .flat_map(|&v| mg.neighbors(v))
        .filter(|w| !d.contains(w))
        .collect();
    (d, a)
}

/// Exact deficiency with a witness set attaining it.
///
/// The witness is the Gallai–Edmonds set `A(G)`, which always attains the
/// maximum of `odd(G - X) - |X|`.
pub fn deficiency(mg: &Multigraph) -> DeficiencyCertificate {
    let nu = max_matching(mg).len();
    let df = mg.vertex_count() - 2 * nu;
    let (_, a) = gallai_edmonds(mg);
    let odd = odd_components(mg, &a);
    debug_assert_eq!(odd as i64 - a.len() as i64, df as i64);
    DeficiencyCertificate {
        deficiency: df,
        witness: a,
        odd_component_count: odd,
    }
}

/// A set `X` attaining the deficiency such that no proper superset does.
///
/// Starts from the Gallai–Edmonds witness and extends it while the
/// deficiency is preserved: by single vertices, and, when some component
/// minus a vertex `u` has no perfect matching, by `u` together with a
/// deficiency witness of that component minus `u`. Once neither extension
/// applies, every component of `G - X` is factor-critical, which rules out
/// every proper superset.
pub fn maximal_deficiency_set(mg: &Multigraph) -> BTreeSet<usize> {
    let df = deficiency(mg);
    let target = df.deficiency as i64;
    let mut x = df.witness;
    'grow: loop {
        for v in 0..mg.vertex_count() {
            if x.contains(&v) {
                continue;
            }
            let mut y = x.clone();
            y.insert(v);
            if surplus(mg, &y) == target {
                x = y;
                continue 'grow;
            }
        }
        for comp in mg.components_without(&x) {
            for &u in &comp {
                let mut removed: BTreeSet<usize> = (0..mg.vertex_count()).filter(|v| !comp.contains(v)).collect();
                removed.insert(u);
                let m = max_matching_avoiding(mg, &removed);
                if 2 * m.len() + 1 < comp.len() {
                    let (sub, map) = mg.delete_vertices(&removed);
                    let inner = deficiency(&sub).witness;
                    let mut y = x.clone();
                    y.insert(u);
                    y.extend(inner.iter().flat_map(|&w| map.image(w).iter().copied()));
                    debug_assert_eq!(surplus(mg, &y), target);
                    x = y;
                    continue 'grow;
                }
            }
        }
        return x;
    }
}

/// Perfect matching of `D - u` for a component `D` of `mg - X`.
pub fn near_perfect_matching(mg: &Multigraph, component: &BTreeSet<usize>, u: usize) -> Result<Matching> {
    if !component.contains(&u) {
        return Err(precondition(format!("vertex {u} is not in the component")));
    }
    let mut removed: BTreeSet<usize> = (0..mg.vertex_count()).filter(|v| !component.contains(v)).collect();
    removed.insert(u);
    let m = max_matching_avoiding(mg, &removed);
    if 2 * m.len() + 1 != component.len() {
        return Err(violation(format!(
            "component {component:?} minus {u} has no perfect matching"
        )));
    }
    Ok(m)
}

/// The bipartite multigraph `B(X)`: one vertex per `x` in `X`, one per
/// component of `G - X`, and one edge per adjacent `(x, component)` pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteContraction {
    pub graph: Multigraph,
    /// `B(X)` vertices `0..x_side.len()` are the `X` vertices in this order.
    pub x_side: Vec<usize>,
    /// Components of `G - X`; component `i` is `B(X)` vertex `x_side.len() + i`.
    pub components: Vec<BTreeSet<usize>>,
    /// Vertex of `B(X)` to host vertices.
    pub map: VertexMap,
}

impl BipartiteContraction {
    pub fn x_vertices(&self) -> std::ops::Range<usize> {
        0..self.x_side.len()
    }

    pub fn component_vertex(&self, i: usize) -> usize {
        self.x_side.len() + i
    }

    /// Index of the component owning host vertex `v`.
    pub fn component_of(&self, v: usize) -> Option<usize> {
        self.components.iter().position(|c| c.contains(&v))
    }
}

pub fn build_bx(mg: &Multigraph, x: &BTreeSet<usize>) -> BipartiteContraction {
    let x_side: Vec<usize> = x.iter().copied().collect();
    let components = mg.components_without(x);
    let mut graph = Multigraph::new(x_side.len() + components.len());
    let mut images: Vec<BTreeSet<usize>> = x_side.iter().map(|&v| BTreeSet::from([v])).collect();
    images.extend(components.iter().cloned());
    for (xi, &xv) in x_side.iter().enumerate() {
        let nbrs: BTreeSet<usize> = mg.neighbors(xv).into_iter().collect();
        for (ci, comp) in components.iter().enumerate() {
            if comp.iter().any(|w| nbrs.contains(w)) {
                graph.add_edge(xi, x_side.len() + ci).unwrap();
            }
        }
    }
    BipartiteContraction {
        graph,
        x_side,
        components,
        map: VertexMap { images },
    }
}

/// Hall violator: a subset of the side that should be saturated whose
/// neighborhood is smaller than itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HallViolator {
    pub subset: BTreeSet<usize>,
    pub neighborhood: BTreeSet<usize>,
}

/// Kuhn augmenting-path matching that tries to saturate `side`.
/// Returns `mate` and the left vertices left unmatched.
fn kuhn(mg: &Multigraph, side: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let adj = mg.simple_adjacency();
    let mut mate = vec![NONE; mg.vertex_count()];
    let mut unmatched = Vec::new();
    fn augment(v: usize, adj: &[Vec<usize>], mate: &mut [usize], seen: &mut [bool]) -> bool {
        for &w in &adj[v] {
            if seen[w] {
                continue;
            }
            seen[w] = true;
            if mate[w] == NONE || augment(mate[w], adj, mate, seen) {
                mate[w] = v;
                mate[v] = w;
                return true;
            }
        }
        false
    }
    for &v in side {
        let mut seen = vec![false; mg.vertex_count()];
        // left vertices are never "seen" as right vertices
        for &s in side {
            seen[s] = true;
        }
        if !augment(v, &adj, &mut mate, &mut seen) {
            unmatched.push(v);
        }
    }
    (mate, unmatched)
}

fn hall_violator(mg: &Multigraph, side: &BTreeSet<usize>, mate: &[usize], root: usize) -> HallViolator {
    // alternating search from an unmatched left vertex
    let mut subset = BTreeSet::from([root]);
    let mut neighborhood = BTreeSet::new();
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for w in mg.neighbors(v) {
            if side.contains(&w) || !neighborhood.insert(w) {
                continue;
            }
            if mate[w] != NONE && subset.insert(mate[w]) {
                queue.push_back(mate[w]);
            }
        }
    }
    HallViolator { subset, neighborhood }
}

/// A matching saturating every vertex of `side` in a bipartite multigraph,
/// or a Hall violator explaining why none exists.
pub fn bipartite_cover_matching(
    b: &Multigraph,
    side: &BTreeSet<usize>,
) -> std::result::Result<Matching, HallViolator> {
    let order: Vec<usize> = side.iter().copied().collect();
    let (mate, unmatched) = kuhn(b, &order);
    if let Some(&root) = unmatched.first() {
        return Err(hall_violator(b, side, &mate, root));
    }
    Ok(matching_from_mates(b, &mate))
}

/// Distributes `slots` (a vertex listed once per required edge) over
/// `slots.len() / 3` new vertices of degree exactly 3, round-robin so that
/// consecutive slots of one vertex land on different new vertices.
fn quota_attachments(slots: &[usize]) -> Vec<[usize; 3]> {
    let z = slots.len() / 3;
    let mut out = vec![[NONE; 3]; z];
    for (i, &s) in slots.iter().take(3 * z).enumerate() {
        out[i % z][i / z] = s;
    }
    out
}

/// Matching of `B(X)` covering all of `must_cover` and at least
/// `ceil((|Y1| + 2|Y2|) / 3)` vertices of `Y1 ∪ Y2`, where `Y1`/`Y2` have
/// one/two edges to the `X` side.
///
/// Built by adding `floor((2|Y1| + |Y2|) / 3)` new vertices of degree 3
/// attached to `Y1 ∪ Y2` (two slots per `Y1` vertex, one per `Y2` vertex),
/// saturating `Y1 ∪ Y2 ∪ must_cover` in the augmented graph, and dropping
/// the new vertices' edges.
pub fn cover_matching_with_quota(
    b: &Multigraph,
    must_cover: &BTreeSet<usize>,
    y1: &BTreeSet<usize>,
    y2: &BTreeSet<usize>,
) -> Result<Matching> {
    let mut slots = Vec::new();
    for &y in y1 {
        slots.push(y);
        slots.push(y);
    }
    slots.extend(y2.iter().copied());
    let attachments = quota_attachments(&slots);
    let mut augmented = b.clone();
    let mut z_edges = BTreeSet::new();
    for att in &attachments {
        let z = augmented.add_vertex();
        for &y in att {
            z_edges.insert(augmented.add_edge(z, y)?);
        }
    }
    let side: BTreeSet<usize> = must_cover.iter().chain(y1).chain(y2).copied().collect();
    let full = bipartite_cover_matching(&augmented, &side).map_err(|h| {
        violation(format!(
            "quota matching infeasible: {:?} has only {} neighbors {:?}",
            h.subset,
            h.neighborhood.len(),
            h.neighborhood
        ))
    })?;
    let edges: BTreeSet<EdgeId> = full.edges.difference(&z_edges).copied().collect();
    let m = Matching { edges };
    let quota = (y1.len() + 2 * y2.len()).div_ceil(3);
    let covered = m.covered(b);
    let hit = y1.iter().chain(y2).filter(|y| covered.contains(y)).count();
    if hit < quota || !must_cover.is_subset(&covered) {
        return Err(violation(format!("quota matching covers {hit} < {quota}")));
    }
    Ok(m)
}

/// Combines a matching covering `X` and one covering `Y` into a single
/// matching covering `X ∪ Y`, component by component of their union:
/// cycles and odd paths keep either matching, even paths keep the matching
/// whose uncovered endpoint is outside the set that must be covered.
pub fn merge_matchings(
    b: &Multigraph,
    m1: &Matching,
    x: &BTreeSet<usize>,
    m2: &Matching,
    _y: &BTreeSet<usize>,
) -> Matching {
    let mut adj: BTreeMap<usize, Vec<(EdgeId, u8)>> = BTreeMap::new();
    for (tag, m) in [(1u8, m1), (2u8, m2)] {
        for &e in &m.edges {
            let (u, v) = b.endpoints(e).expect("matching edge exists");
            adj.entry(u).or_default().push((e, tag));
            adj.entry(v).or_default().push((e, tag));
        }
    }
    let mut out = BTreeSet::new();
    let mut seen = BTreeSet::new();
    for &start in adj.keys() {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(v) = stack.pop() {
            comp.insert(v);
            for &(e, _) in &adj[&v] {
                let w = b.other_end(e, v).unwrap();
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        let edges: BTreeSet<(EdgeId, u8)> = comp.iter().flat_map(|v| adj[v].iter().copied()).collect();
        let m1_edges: BTreeSet<EdgeId> = edges.iter().filter(|p| p.1 == 1).map(|p| p.0).collect();
        let m2_edges: BTreeSet<EdgeId> = edges.iter().filter(|p| p.1 == 2).map(|p| p.0).collect();
        if m1_edges == m2_edges {
            out.extend(m1_edges);
            continue;
        }
        // even path: exactly one endpoint is missed by m2 and one by m1
        let missed_by_m2 = comp.iter().find(|v| adj[v].iter().all(|p| p.1 == 1));
        let missed_by_m1 = comp.iter().find(|v| adj[v].iter().all(|p| p.1 == 2));
        let keep_m1 = match (missed_by_m2, missed_by_m1) {
            (Some(a), Some(_)) => x.contains(a),
            // cycle or odd path: both matchings cover everything, or the
            // path is odd and one side covers all
            _ => {
                let covers = |m: &BTreeSet<EdgeId>| {
                    let c: BTreeSet<usize> = m.iter().flat_map(|&e| {
                        let (u, v) = b.endpoints(e).unwrap();
                        [u, v]
                    }).collect();
                    c.len() == comp.len()
                };
                covers(&m1_edges) || !covers(&m2_edges)
            }
        };
        out.extend(if keep_m1 { m1_edges } else { m2_edges });
    }
    Matching { edges: out }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn small_maximum_matchings() {
        assert_eq!(max_matching(&Graph::path(4).to_multigraph()).len(), 2);
        assert_eq!(max_matching(&Graph::complete_bipartite(1, 3).to_multigraph()).len(), 1);
        assert_eq!(max_matching(&Graph::petersen().to_multigraph()).len(), 5);
        assert_eq!(max_matching(&Graph::cycle(7).to_multigraph()).len(), 3);
        assert_eq!(max_matching(&Multigraph::new(0)).len(), 0);
    }

    #[test]
    fn blossom_needs_contraction() {
        // odd cycle with pendant paths: 0-1-2-3-4-0, 4-5, 2-6, 6-7
        let g = Graph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5), (2, 6), (6, 7)]).unwrap();
        assert_eq!(max_matching(&g.to_multigraph()).len(), 4);
    }

    #[test]
    fn deficiency_examples() {
        let star = Graph::complete_bipartite(1, 3).to_multigraph();
        let d = deficiency(&star);
        assert_eq!(d.deficiency, 2);
        assert_eq!(d.witness, set(&[0]));
        assert_eq!(d.odd_component_count, 3);

        let c6 = Graph::cycle(6).to_multigraph();
        let d = deficiency(&c6);
        assert_eq!(d.deficiency, 0);

        let mut g = Graph::complete(3);
        g.add_vertex();
        let d = deficiency(&g.to_multigraph());
        assert_eq!(d.deficiency, 2);
        assert!(d.witness.is_empty());
    }

    #[test]
    fn maximal_sets() {
        let star = Graph::complete_bipartite(1, 3).to_multigraph();
        assert_eq!(maximal_deficiency_set(&star), set(&[0]));

        let single = Multigraph::new(1);
        assert!(maximal_deficiency_set(&single).is_empty());

        let c6 = Graph::cycle(6).to_multigraph();
        let x = maximal_deficiency_set(&c6);
        assert_eq!(surplus(&c6, &x), 0);
        for comp in c6.components_without(&x) {
            assert_eq!(comp.len() % 2, 1);
        }
    }

    #[test]
    fn near_perfect_examples() {
        let single = Multigraph::new(1);
        assert!(near_perfect_matching(&single, &set(&[0]), 0).unwrap().is_empty());
        let tri = Graph::complete(3).to_multigraph();
        let m = near_perfect_matching(&tri, &set(&[0, 1, 2]), 0).unwrap();
        assert_eq!(m.covered(&tri), set(&[1, 2]));
        let c5 = Graph::cycle(5).to_multigraph();
        for u in 0..5 {
            assert_eq!(near_perfect_matching(&c5, &set(&[0, 1, 2, 3, 4]), u).unwrap().len(), 2);
        }
        let p3 = Graph::path(3).to_multigraph();
        assert!(matches!(
            near_perfect_matching(&p3, &set(&[0, 1, 2]), 1),
            Err(crate::Error::Violation(_))
        ));
    }

    #[test]
    fn bx_examples() {
        let star = Graph::complete_bipartite(1, 3).to_multigraph();
        let b = build_bx(&star, &set(&[0]));
        assert_eq!(b.graph.vertex_count(), 4);
        assert_eq!(b.graph.edge_count(), 3);
        assert_eq!(b.graph.degree(0), 3);

        let b = build_bx(&Graph::cycle(5).to_multigraph(), &BTreeSet::new());
        assert_eq!(b.graph.vertex_count(), 1);
        assert_eq!(b.graph.edge_count(), 0);

        // two triangles sharing the cut vertex 0
        let bow = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let b = build_bx(&bow.to_multigraph(), &set(&[0]));
        assert_eq!(b.components.len(), 2);
        assert_eq!(b.graph.edge_count(), 2);
        assert_eq!(b.graph.multiplicity(0, 1), 1);
        assert_eq!(b.graph.multiplicity(0, 2), 1);
    }

    #[test]
    fn cover_matching_examples() {
        let star = Graph::complete_bipartite(1, 3).to_multigraph();
        assert_eq!(bipartite_cover_matching(&star, &set(&[0])).unwrap().len(), 1);
        assert!(bipartite_cover_matching(&star, &BTreeSet::new()).unwrap().is_empty());
        let k23 = Graph::complete_bipartite(2, 3).to_multigraph();
        assert_eq!(bipartite_cover_matching(&k23, &set(&[0, 1])).unwrap().len(), 2);
        // the 3-side cannot be saturated
        let h = bipartite_cover_matching(&k23, &set(&[2, 3, 4])).unwrap_err();
        assert!(h.neighborhood.len() < h.subset.len());
    }

    #[test]
    fn quota_examples() {
        // three Y1 vertices 3,4,5 attached to distinct X vertices 0,1,2
        let b = Graph::from_edges(6, &[(0, 3), (1, 4), (2, 5)]).unwrap().to_multigraph();
        let m = cover_matching_with_quota(&b, &BTreeSet::new(), &set(&[3, 4, 5]), &BTreeSet::new()).unwrap();
        assert!(!m.is_empty());

        // Y3 only, disjoint neighborhoods
        let b = Graph::from_edges(8, &[(0, 6), (1, 6), (2, 6), (3, 7), (4, 7), (5, 7)]).unwrap().to_multigraph();
        let m = cover_matching_with_quota(&b, &set(&[6, 7]), &BTreeSet::new(), &BTreeSet::new()).unwrap();
        assert_eq!(m.covered(&b).intersection(&set(&[6, 7])).count(), 2);

        let empty = Multigraph::new(0);
        assert!(cover_matching_with_quota(&empty, &BTreeSet::new(), &BTreeSet::new(), &BTreeSet::new())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn quota_attachment_degrees() {
        let slots = vec![1, 1, 2, 2, 3, 4, 5];
        let att = quota_attachments(&slots);
        assert_eq!(att.len(), 2);
        let mut count = BTreeMap::new();
        for a in &att {
            for &y in a {
                *count.entry(y).or_insert(0) += 1;
            }
        }
        assert!(count[&1] <= 2 && count[&2] <= 2 && count[&3] <= 1);
    }

    #[test]
    fn merge_examples() {
        let p = Graph::path(4).to_multigraph(); // edges 0:(0,1) 1:(1,2) 2:(2,3)
        let m = Matching { edges: set(&[0, 2]) };
        assert_eq!(merge_matchings(&p, &m, &set(&[0]), &m, &set(&[3])), m);

        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap().to_multigraph();
        let a = Matching { edges: set(&[0]) };
        let b = Matching { edges: set(&[1]) };
        let merged = merge_matchings(&two, &a, &set(&[0]), &b, &set(&[3]));
        assert_eq!(merged.edges, set(&[0, 1]));

        // even path 0-1-2 where m1 = {01} covers X = {1} and m2 = {12}
        // covers Y = {2}; vertex 0 is in neither set, so m2 is kept.
        let p3 = Graph::path(3).to_multigraph();
        let merged = merge_matchings(
            &p3,
            &Matching { edges: set(&[0]) },
            &set(&[1]),
            &Matching { edges: set(&[1]) },
            &set(&[2]),
        );
        assert_eq!(merged.edges, set(&[1]));
    }
}
