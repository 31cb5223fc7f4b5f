//! Simple graphs, multigraphs with stable edge identifiers, and the
//! contraction / smoothing / splitting primitives the barrier machinery is
//! built from.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{precondition, Error, Result};

pub type EdgeId = usize;

/// Undirected simple graph on the vertices `0..vertex_count`.
///
/// Neighbor lists are kept sorted, so iteration order is deterministic.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); vertex_count],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(vertex_count);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(precondition(format!("loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(precondition(format!("parallel edge {u}-{v}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// Complete bipartite graph with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn petersen() -> Self {
        let mut g = Graph::new(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.adj.len() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                vertex_count: self.adj.len(),
            })
        }
    }

    /// Inserts `uv` if absent. Returns whether the edge was new.
    ///
    /// Panics on loops or out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "loop at vertex {u}");
        assert!(u < self.adj.len() && v < self.adj.len(), "vertex out of range");
        match self.adj[u].binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                true
            }
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).unwrap();
                self.adj[v].remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nb) in self.adj.iter().enumerate() {
            for &v in nb {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.adj.iter().all(|nb| nb.len() + 1 == n)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Adjacency bitmasks, one `u64` per vertex. `None` above 64 vertices.
    pub fn bitmasks(&self) -> Option<Vec<u64>> {
        if self.vertex_count() > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|nb| nb.iter().fold(0u64, |m, &v| m | (1u64 << v)))
                .collect(),
        )
    }

    /// Components of `G - removed`, each sorted, listed by smallest vertex.
    pub fn components_without(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = removed.to_vec();
        seen.resize(n, false);
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_without(&[])
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.components().len() == 1
    }

    /// `G[vertices]` relabelled to `0..k` in the order given.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = pos[w];
                if j != usize::MAX && i < j {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Breadth-first distances from `source`; `None` marks unreachable.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path length between `u` and `v`, `None` if unreachable.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.bfs_distances(u)[v])
    }

    /// Checks that distinct degree-3 vertices are pairwise at distance at
    /// least three.
    pub fn dist_condition(&self) -> DistCondition {
        let cubic: Vec<usize> = (0..self.vertex_count())
            .filter(|&v| self.degree(v) == 3)
            .collect();
        for (i, &u) in cubic.iter().enumerate() {
            let dist = self.bfs_distances(u);
            for &v in &cubic[i + 1..] {
                if let Some(d) = dist[v] {
                    if d < 3 {
                        return DistCondition {
                            holds: false,
                            violation: Some((u, v, d)),
                        };
                    }
                }
            }
        }
        DistCondition {
            holds: true,
            violation: None,
        }
    }

    /// Copy as a multigraph whose edge ids follow [`Graph::edges`] order.
    pub fn to_multigraph(&self) -> Multigraph {
        let mut mg = Multigraph::new(self.vertex_count());
        for (u, v) in self.edges() {
            mg.add_edge(u, v).expect("simple graph edge");
        }
        mg
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistCondition {
    pub holds: bool,
    /// `(u, v, distance)` for the first offending degree-3 pair.
    pub violation: Option<(usize, usize, usize)>,
}

/// Loopless multigraph with stable edge identifiers.
///
/// Edge ids survive every derivation in this module unchanged, and fresh
/// ids never reuse one already issued in the lineage, so records taken on
/// one graph stay meaningful on graphs derived from it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Multigraph {
    vertex_count: usize,
    edges: BTreeMap<EdgeId, (usize, usize)>,
    #[serde(skip)]
    incidence: Vec<BTreeSet<EdgeId>>,
    next_edge_id: EdgeId,
}

impl Multigraph {
    pub fn new(vertex_count: usize) -> Self {
        Multigraph {
            vertex_count,
            edges: BTreeMap::new(),
            incidence: vec![BTreeSet::new(); vertex_count],
            next_edge_id: 0,
        }
    }

    fn empty_like(&self, vertex_count: usize) -> Self {
        Multigraph {
            vertex_count,
            edges: BTreeMap::new(),
            incidence: vec![BTreeSet::new(); vertex_count],
            next_edge_id: self.next_edge_id,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn add_vertex(&mut self) -> usize {
        self.incidence.push(BTreeSet::new());
        self.vertex_count += 1;
        self.vertex_count - 1
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                vertex_count: self.vertex_count,
            })
        }
    }

    /// Adds an edge with a fresh id.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<EdgeId> {
        let id = self.next_edge_id;
        self.insert_edge(id, u, v)?;
        Ok(id)
    }

    fn insert_edge(&mut self, id: EdgeId, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(precondition(format!("loop at vertex {u}")));
        }
        if self.edges.contains_key(&id) {
            return Err(precondition(format!("duplicate edge id {id}")));
        }
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.insert(id, key);
        self.incidence[u].insert(id);
        self.incidence[v].insert(id);
        self.next_edge_id = self.next_edge_id.max(id + 1);
        Ok(())
    }

    fn remove_edge(&mut self, id: EdgeId) {
        if let Some((u, v)) = self.edges.remove(&id) {
            self.incidence[u].remove(&id);
            self.incidence[v].remove(&id);
        }
    }

    /// Endpoints `(u, v)` with `u < v`.
    pub fn endpoints(&self, id: EdgeId) -> Option<(usize, usize)> {
        self.edges.get(&id).copied()
    }

    /// The endpoint of `id` that is not `v`.
    pub fn other_end(&self, id: EdgeId, v: usize) -> Option<usize> {
        let (a, b) = self.endpoints(id)?;
        if a == v {
            Some(b)
        } else if b == v {
            Some(a)
        } else {
            None
        }
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, usize, usize)> + '_ {
        self.edges.iter().map(|(&id, &(u, v))| (id, u, v))
    }

    pub fn incident(&self, v: usize) -> impl Iterator<Item = EdgeId> + '_ {
        self.incidence[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Distinct neighbors of `v`, sorted.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = self
            .incidence[v]
            .iter()
            .filter_map(|&e| self.other_end(e, v))
            .collect();
        set.into_iter().collect()
    }

    /// Number of edges joining `u` and `v`.
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.incidence[u]
            .iter()
            .filter(|&&e| self.other_end(e, u) == Some(v))
            .count()
    }

    /// Lowest edge id joining `u` and `v`.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<EdgeId> {
        self.incidence[u]
            .iter()
            .copied()
            .find(|&e| self.other_end(e, u) == Some(v))
    }

    /// Number of edge-ends at vertices of `a` whose other end lies in `b`.
    pub fn edges_between(&self, a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> usize {
        self.edges
            .values()
            .filter(|&&(u, v)| (a.contains(&u) && b.contains(&v)) || (a.contains(&v) && b.contains(&u)))
            .count()
    }

    /// Edges with both ends in `set`.
    pub fn internal_edge_count(&self, set: &BTreeSet<usize>) -> usize {
        self.edges
            .values()
            .filter(|&&(u, v)| set.contains(&u) && set.contains(&v))
            .count()
    }

    /// Simple underlying adjacency: sorted distinct neighbors per vertex.
    pub fn simple_adjacency(&self) -> Vec<Vec<usize>> {
        (0..self.vertex_count).map(|v| self.neighbors(v)).collect()
    }

    /// Underlying simple graph.
    pub fn underlying_graph(&self) -> Graph {
        let mut g = Graph::new(self.vertex_count);
        for &(u, v) in self.edges.values() {
            g.add_edge(u, v);
        }
        g
    }

    /// Components of the multigraph minus `removed`.
    pub fn components_without(&self, removed: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
        let mut seen = vec![false; self.vertex_count];
        for &v in removed {
            if v < self.vertex_count {
                seen[v] = true;
            }
        }
        let mut comps = Vec::new();
        for s in 0..self.vertex_count {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = BTreeSet::from([s]);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &e in &self.incidence[u] {
                    let w = self.other_end(e, u).unwrap();
                    if !seen[w] {
                        seen[w] = true;
                        comp.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    pub fn components(&self) -> Vec<BTreeSet<usize>> {
        self.components_without(&BTreeSet::new())
    }

    fn induces_connected(&self, set: &BTreeSet<usize>) -> bool {
        let Some(&start) = set.iter().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.incidence[u] {
                let w = self.other_end(e, u).unwrap();
                if set.contains(&w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.len() == set.len()
    }

    /// Removes `set`, renumbering the remaining vertices in order.
    pub fn delete_vertices(&self, set: &BTreeSet<usize>) -> (Multigraph, VertexMap) {
        let mut new_id = vec![usize::MAX; self.vertex_count];
        let mut images = Vec::new();
        for v in 0..self.vertex_count {
            if !set.contains(&v) {
                new_id[v] = images.len();
                images.push(BTreeSet::from([v]));
            }
        }
        let mut out = self.empty_like(images.len());
        for (&id, &(u, v)) in &self.edges {
            if new_id[u] != usize::MAX && new_id[v] != usize::MAX {
                out.insert_edge(id, new_id[u], new_id[v]).unwrap();
            }
        }
        (out, VertexMap { images })
    }

    /// Merges each group into one vertex, dropping loops and keeping
    /// parallel edges. The merged vertex takes the slot of the group's
    /// smallest member; other vertices keep their relative order.
    fn merge_groups(&self, groups: &[BTreeSet<usize>]) -> Result<(Multigraph, VertexMap)> {
        let mut group_of = vec![usize::MAX; self.vertex_count];
        for (gi, group) in groups.iter().enumerate() {
            if group.is_empty() {
                return Err(precondition("empty vertex group"));
            }
            for &v in group {
                self.check_vertex(v)?;
                if group_of[v] != usize::MAX {
                    return Err(precondition(format!("vertex {v} in two groups")));
                }
                group_of[v] = gi;
            }
        }
        let mut new_id = vec![usize::MAX; self.vertex_count];
        let mut images: Vec<BTreeSet<usize>> = Vec::new();
        for v in 0..self.vertex_count {
            let gi = group_of[v];
            if gi == usize::MAX {
                new_id[v] = images.len();
                images.push(BTreeSet::from([v]));
            } else if groups[gi].iter().next() == Some(&v) {
                let slot = images.len();
                for &w in &groups[gi] {
                    new_id[w] = slot;
                }
                images.push(groups[gi].clone());
            }
        }
        let mut out = self.empty_like(images.len());
        for (&id, &(u, v)) in &self.edges {
            let (a, b) = (new_id[u], new_id[v]);
            if a != b {
                out.insert_edge(id, a, b).unwrap();
            }
        }
        Ok((out, VertexMap { images }))
    }

    /// Contracts each connected group to a single vertex. Loops are
    /// removed, parallel edges retained.
    pub fn contract_groups(&self, groups: &[BTreeSet<usize>]) -> Result<(Multigraph, VertexMap)> {
        for group in groups {
            if !self.induces_connected(group) {
                return Err(precondition(format!(
                    "vertex set {group:?} does not induce a connected subgraph"
                )));
            }
        }
        self.merge_groups(groups)
    }

    /// Contracts the connected subgraph induced by `vertices`.
    pub fn contract_subgraph(&self, vertices: &BTreeSet<usize>) -> Result<(Multigraph, VertexMap)> {
        self.contract_groups(std::slice::from_ref(vertices))
    }

    /// Identifies an arbitrary vertex set into one vertex (no connectivity
    /// requirement); loops created by the identification are dropped.
    pub fn identify_vertices(&self, vertices: &BTreeSet<usize>) -> Result<(Multigraph, VertexMap)> {
        self.merge_groups(std::slice::from_ref(vertices))
    }

    /// Replaces the path `u v w` through the degree-2 vertex `v` by a fresh
    /// edge `uw`, then removes `v`.
    pub fn smooth_degree2(&self, v: usize) -> Result<(Multigraph, VertexMap, Smoothing)> {
        let mut work = self.clone();
        let record = work.smooth_in_place(v)?;
        let (out, map) = work.delete_vertices(&BTreeSet::from([v]));
        Ok((out, map, record))
    }

    /// Smooths `v` but leaves it in place as an isolated vertex, so vertex
    /// ids stay valid for batch smoothing.
    pub(crate) fn smooth_in_place(&mut self, v: usize) -> Result<Smoothing> {
        self.check_vertex(v)?;
        if self.degree(v) != 2 {
            return Err(precondition(format!(
                "vertex {v} has degree {} (expected 2)",
                self.degree(v)
            )));
        }
        let inc: Vec<EdgeId> = self.incident(v).collect();
        let u = self.other_end(inc[0], v).unwrap();
        let w = self.other_end(inc[1], v).unwrap();
        if u == w {
            return Err(precondition(format!(
                "vertex {v} has both edges to {u}; smoothing would create a loop"
            )));
        }
        self.remove_edge(inc[0]);
        self.remove_edge(inc[1]);
        let new_edge = self.add_edge(u, w)?;
        Ok(Smoothing {
            vertex: v,
            ends: (u, w),
            replaced: (inc[0], inc[1]),
            new_edge,
        })
    }

    /// Splits `v` into `groups.len()` independent vertices; group `i`
    /// receives the edge-ends listed in `groups[i]`. Group 0 stays on `v`,
    /// the others become new vertices appended at the end.
    ///
    /// Returns the split graph and the vertices carrying the groups, in
    /// group order.
    pub fn split_vertex(&self, v: usize, groups: &[Vec<EdgeId>]) -> Result<(Multigraph, Vec<usize>)> {
        self.check_vertex(v)?;
        if groups.is_empty() || groups.iter().any(Vec::is_empty) {
            return Err(precondition("split groups must be nonempty"));
        }
        let mut seen = BTreeSet::new();
        for &e in groups.iter().flatten() {
            if !self.incidence[v].contains(&e) {
                return Err(precondition(format!("edge {e} is not incident with {v}")));
            }
            if !seen.insert(e) {
                return Err(precondition(format!("edge {e} listed twice")));
            }
        }
        if seen.len() != self.degree(v) {
            return Err(precondition(format!(
                "split groups cover {} of the {} edge-ends at {v}",
                seen.len(),
                self.degree(v)
            )));
        }
        let mut out = self.clone();
        let mut carriers = vec![v];
        for group in &groups[1..] {
            let nv = out.add_vertex();
            carriers.push(nv);
            for &e in group {
                let w = out.other_end(e, v).unwrap();
                out.remove_edge(e);
                out.insert_edge(e, nv, w)?;
            }
        }
        Ok((out, carriers))
    }
}

/// Record of one smoothing step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Smoothing {
    /// The removed degree-2 vertex, in the numbering before removal.
    pub vertex: usize,
    pub ends: (usize, usize),
    /// The two edges of the path that was replaced.
    pub replaced: (EdgeId, EdgeId),
    pub new_edge: EdgeId,
}

/// Maps each vertex of a derived graph to the set of source vertices it
/// stands for.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VertexMap {
    pub images: Vec<BTreeSet<usize>>,
}

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        VertexMap {
            images: (0..n).map(|v| BTreeSet::from([v])).collect(),
        }
    }

    pub fn image(&self, v: usize) -> &BTreeSet<usize> {
        &self.images[v]
    }

    /// `self` maps derived → middle, `inner` maps middle → source.
    pub fn then(&self, inner: &VertexMap) -> VertexMap {
        VertexMap {
            images: self
                .images
                .iter()
                .map(|set| set.iter().flat_map(|&m| inner.images[m].iter().copied()).collect())
                .collect(),
        }
    }

    /// Derived vertex whose image contains `source`, if any.
    pub fn preimage(&self, source: usize) -> Option<usize> {
        self.images.iter().position(|s| s.contains(&source))
    }
}
