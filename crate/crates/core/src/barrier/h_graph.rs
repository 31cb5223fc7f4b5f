//! Construction of the auxiliary multigraph `H` from a biased barrier.
//!
//! Edge ids of `G` (in `Graph::edges` order) are kept through every step,
//! so each edge of `H` is either an edge of `G` or the edge created by
//! smoothing a degree-2 vertex of `T`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::embedding::PlanarEmbedding;
use crate::error::{precondition, structural, Result};
use crate::graph::{EdgeId, Graph, Multigraph, VertexMap};
use crate::two_factor::{check_biased_properties, BarrierPair, ComponentClassification};

/// What an `H` vertex stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HVertexKind {
    /// `h(D)` for a component `D` of class 1 (index into the classification).
    Contracted { component: usize },
    /// A piece split from a `T` vertex with `c(y) >= 3`.
    TSplit { vertex: usize },
    /// A piece split from the identified `h(C_{>=5})` vertex.
    HighSplit,
}

/// A `T` vertex with `c(y) = 2` removed by smoothing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothedVertex {
    /// The vertex `y` of `G`.
    pub vertex: usize,
    /// The `G` edges `y x1` and `y x2` that were replaced.
    pub g_edges: (EdgeId, EdgeId),
    /// The neighbors `x1`, `x2` of `y` in the two components.
    pub attachments: (usize, usize),
    /// Component indices of `x1` and `x2`.
    pub components: (usize, usize),
    /// The edge `h(x1) h(x2)` that replaced the path.
    pub new_edge: EdgeId,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SplitSource {
    TVertex { vertex: usize },
    High,
}

/// The splitting vertices produced from one source vertex, in `H` ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitSet {
    pub source: SplitSource,
    pub pieces: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HLedger {
    pub g1: Multigraph,
    pub g2: Multigraph,
    pub g3: Multigraph,
    pub h: Multigraph,
    /// Vertex of each stage to the vertices of `G` it stands for.
    pub g1_origin: VertexMap,
    pub g2_origin: VertexMap,
    pub g3_origin: VertexMap,
    pub h_origin: VertexMap,
    pub smoothed: Vec<SmoothedVertex>,
    pub split_sets: Vec<SplitSet>,
    /// `h(C_3)`, as `H` vertices.
    pub h_c3: BTreeSet<usize>,
    /// `h(C_{>=5})`, as `G3` vertices.
    pub h_cge5: BTreeSet<usize>,
    /// `Σ_{x ∈ h(C_{>=5})} d_{G3}(x)`.
    pub cge5_degree_sum: usize,
    /// Edge-ends lost as loops when `h(C_{>=5})` is identified.
    pub cge5_loops_dropped: usize,
    /// `Σ_{k>=2} (2k+1) c_{2k+1}`.
    pub ell: usize,
    pub kinds: Vec<HVertexKind>,
}

/// Checked invariants of an [`HLedger`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HInvariants {
    pub max_degree: usize,
    pub max_degree_ok: bool,
    pub high_split_count: usize,
    /// `3 |S(h(C_{>=5}))| <= ℓ + 2`.
    pub high_split_ok: bool,
    /// Every `H` edge inside `h(C_3)` lifts to a path `x1 y x2` of `G`
    /// with `y ∈ T_2`, `c(y) = 2`.
    pub c3_edges_lift: bool,
}

impl HInvariants {
    pub fn all_hold(&self) -> bool {
        self.max_degree_ok && self.high_split_ok && self.c3_edges_lift
    }
}

impl HLedger {
    pub fn splitting_vertices(&self) -> BTreeSet<usize> {
        self.split_sets.iter().flat_map(|s| s.pieces.iter().copied()).collect()
    }

    pub fn is_splitting(&self, v: usize) -> bool {
        !matches!(self.kinds[v], HVertexKind::Contracted { .. })
    }

    /// `|S(h(C_{>=5}))|`.
    pub fn high_split_count(&self) -> usize {
        self.split_sets
            .iter()
            .filter(|s| s.source == SplitSource::High)
            .map(|s| s.pieces.len())
            .sum()
    }

    /// Component index of a contracted `H` vertex.
    pub fn component_of(&self, v: usize) -> Option<usize> {
        match self.kinds.get(v) {
            Some(HVertexKind::Contracted { component }) => Some(*component),
            _ => None,
        }
    }

    /// The `H` vertex `h(D)` of a class-1 component.
    pub fn vertex_of_component(&self, component: usize) -> Option<usize> {
        self.kinds
            .iter()
            .position(|k| *k == HVertexKind::Contracted { component })
    }

    /// The smoothing record behind an `H` edge, if any.
    pub fn smoothed_by_edge(&self, e: EdgeId) -> Option<&SmoothedVertex> {
        self.smoothed.iter().find(|s| s.new_edge == e)
    }

    pub fn invariants(&self, cls: &ComponentClassification) -> HInvariants {
        let max_degree = self.h.max_degree();
        let high_split_count = self.high_split_count();
        let c3_edges_lift = self.h.edges().all(|(e, u, v)| {
            if !(self.h_c3.contains(&u) && self.h_c3.contains(&v)) {
                return true;
            }
            let Some(s) = self.smoothed_by_edge(e) else {
                return false;
            };
            let (cu, cv) = (self.component_of(u), self.component_of(v));
            let ends = (Some(s.components.0), Some(s.components.1));
            cls.t2.contains(&s.vertex)
                && cls.c_count.get(&s.vertex) == Some(&2)
                && (ends == (cu, cv) || ends == (cv, cu))
        });
        HInvariants {
            max_degree,
            max_degree_ok: max_degree <= 3,
            high_split_count,
            high_split_ok: 3 * high_split_count <= self.ell + 2,
            c3_edges_lift,
        }
    }
}

fn same_barrier(barrier: &BarrierPair, cls: &ComponentClassification) -> bool {
    let mut s = barrier.s.clone();
    let mut t = barrier.t.clone();
    s.sort_unstable();
    t.sort_unstable();
    s == cls.s && t == cls.t
}

fn stage_vertex(origin: &VertexMap, v: usize) -> Result<usize> {
    origin
        .preimage(v)
        .ok_or_else(|| structural(format!("vertex {v} of G has no image")))
}

/// Edge-end groups for splitting a `T` vertex of degree `d >= 3`:
/// `floor((d-2)/2)` pairs followed by one group of 2 or 3, taken
/// consecutively in `order`.
fn t_split_groups(order: &[EdgeId]) -> Vec<Vec<EdgeId>> {
    let d = order.len();
    let pairs = (d - 2) / 2;
    let mut groups: Vec<Vec<EdgeId>> = order[..2 * pairs].chunks(2).map(<[EdgeId]>::to_vec).collect();
    groups.push(order[2 * pairs..].to_vec());
    groups
}

/// Builds `H` from `g` around the barrier in four steps.
///
/// Step 1 deletes even components along with those of class 0;
/// they carry no edges to `T` for a biased barrier. `T` vertices whose
/// degree in `G3` is exactly 3 are kept as single splitting vertices. The
/// edge-ends of a split `T` vertex are grouped in rotation order when an
/// embedding is supplied and in edge-id order otherwise.
pub fn build_h(
    g: &Graph,
    embedding: Option<&PlanarEmbedding>,
    barrier: &BarrierPair,
    cls: &ComponentClassification,
) -> Result<HLedger> {
    if !same_barrier(barrier, cls) {
        return Err(precondition("classification was computed for a different (S, T)"));
    }
    let props = check_biased_properties(g, barrier)?;
    if !props.structural_hold() {
        return Err(precondition(format!(
            "barrier lacks the biased-barrier structure: {props:?}"
        )));
    }
    if let Some(emb) = embedding {
        emb.validate(g)?;
    }
    let mg = g.to_multigraph();
    let in_t: BTreeSet<usize> = cls.t.iter().copied().collect();

    // step 1
    let kept: Vec<usize> = (0..cls.components.len())
        .filter(|&i| cls.class_of(i).is_some_and(|k| k >= 1))
        .collect();
    let dropped: BTreeSet<usize> = (0..cls.components.len())
        .filter(|i| !kept.contains(i))
        .flat_map(|i| cls.components[i].vertices.iter().copied())
        .collect();
    let (g0, map0) = mg.delete_vertices(&dropped);
    let groups: Vec<BTreeSet<usize>> = kept
        .iter()
        .map(|&i| {
            cls.components[i]
                .vertices
                .iter()
                .map(|&v| stage_vertex(&map0, v))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let (g1, map1) = g0.contract_groups(&groups)?;
    let g1_origin = map1.then(&map0);

    // step 2
    let del2: BTreeSet<usize> = cls
        .s
        .iter()
        .chain(&cls.t0)
        .map(|&v| stage_vertex(&g1_origin, v))
        .collect::<Result<_>>()?;
    let (g2, map2) = g1.delete_vertices(&del2);
    let g2_origin = map2.then(&g1_origin);

    // step 3
    let mut work = g2.clone();
    let mut smoothed = Vec::new();
    let mut del3 = BTreeSet::new();
    for v in 0..g2.vertex_count() {
        let origin = g2_origin.image(v);
        let y = *origin.iter().next().expect("nonempty image");
        if !in_t.contains(&y) || g2.degree(v) != 2 {
            continue;
        }
        if cls.c_count[&y] != 2 {
            return Err(structural(format!("vertex {y} has degree 2 in G2 but c(y) = {}", cls.c_count[&y])));
        }
        let rec = work.smooth_in_place(v)?;
        let lift = |e: EdgeId| -> Result<(usize, usize)> {
            let (a, b) = mg
                .endpoints(e)
                .ok_or_else(|| structural(format!("edge {e} at {y} is not an edge of G")))?;
            let x = if a == y { b } else { a };
            let c = cls
                .component_of(x)
                .ok_or_else(|| structural(format!("neighbor {x} of {y} is outside U")))?;
            Ok((x, c))
        };
        let (x1, c1) = lift(rec.replaced.0)?;
        let (x2, c2) = lift(rec.replaced.1)?;
        smoothed.push(SmoothedVertex {
            vertex: y,
            g_edges: rec.replaced,
            attachments: (x1, x2),
            components: (c1, c2),
            new_edge: rec.new_edge,
        });
        del3.insert(v);
    }
    for &y in &cls.t1 {
        del3.insert(stage_vertex(&g2_origin, y)?);
    }
    for v in 0..g2.vertex_count() {
        let y = *g2_origin.image(v).iter().next().unwrap();
        if in_t.contains(&y) && !del3.contains(&v) && cls.c_count[&y] < 3 {
            return Err(structural(format!("vertex {y} of T survives step 3 with c(y) < 3")));
        }
    }
    let (g3, map3) = work.delete_vertices(&del3);
    let g3_origin = map3.then(&g2_origin);

    // step 4, high classes: identify, then split into triples
    let class_of_g3 = |v: usize| -> Option<usize> {
        let x = *g3_origin.image(v).iter().next().unwrap();
        cls.component_of(x).and_then(|c| cls.class_of(c))
    };
    let h_cge5: BTreeSet<usize> = (0..g3.vertex_count())
        .filter(|&v| class_of_g3(v).is_some_and(|k| k >= 2))
        .collect();
    let cge5_degree_sum: usize = h_cge5.iter().map(|&v| g3.degree(v)).sum();
    let cge5_internal = g3.internal_edge_count(&h_cge5);
    let cge5_loops_dropped = 2 * cge5_internal;
    let (mut h, mut h_origin, high_vertex) = if h_cge5.is_empty() {
        (g3.clone(), g3_origin.clone(), None)
    } else if cge5_degree_sum == cge5_loops_dropped {
        let (m, map) = g3.delete_vertices(&h_cge5);
        (m, map.then(&g3_origin), None)
    } else {
        let (m, map) = g3.identify_vertices(&h_cge5)?;
        let origin = map.then(&g3_origin);
        let hv = map.preimage(*h_cge5.iter().next().unwrap()).unwrap();
        (m, origin, Some(hv))
    };

    let mut split_sets = Vec::new();
    let pre_split = h.vertex_count();
    for v in 0..pre_split {
        if Some(v) == high_vertex {
            continue;
        }
        let y = *h_origin.image(v).iter().next().unwrap();
        if !in_t.contains(&y) {
            continue;
        }
        let mut order: Vec<EdgeId> = h.incident(v).collect();
        if let Some(emb) = embedding {
            let rot = &emb.rotation[y];
            let mut keyed = Vec::with_capacity(order.len());
            for &e in &order {
                let (a, b) = mg
                    .endpoints(e)
                    .ok_or_else(|| structural(format!("edge {e} at {y} is not an edge of G")))?;
                let w = if a == y { b } else { a };
                let pos = rot
                    .iter()
                    .position(|&r| r == w)
                    .ok_or_else(|| structural(format!("{w} missing from rotation of {y}")))?;
                keyed.push((pos, e));
            }
            keyed.sort_unstable();
            order = keyed.into_iter().map(|(_, e)| e).collect();
        }
        if order.len() < 3 {
            return Err(structural(format!("T vertex {y} has degree {} in G3", order.len())));
        }
        let (next, carriers) = h.split_vertex(v, &t_split_groups(&order))?;
        h = next;
        for _ in 1..carriers.len() {
            h_origin.images.push(BTreeSet::from([y]));
        }
        split_sets.push(SplitSet {
            source: SplitSource::TVertex { vertex: y },
            pieces: carriers,
        });
    }
    if let Some(hv) = high_vertex {
        let order: Vec<EdgeId> = h.incident(hv).collect();
        let groups: Vec<Vec<EdgeId>> = order.chunks(3).map(<[EdgeId]>::to_vec).collect();
        let (next, carriers) = h.split_vertex(hv, &groups)?;
        h = next;
        let origin = h_origin.image(hv).clone();
        for _ in 1..carriers.len() {
            h_origin.images.push(origin.clone());
        }
        split_sets.push(SplitSet {
            source: SplitSource::High,
            pieces: carriers,
        });
    }

    let mut kinds = Vec::with_capacity(h.vertex_count());
    let mut piece_kind: BTreeMap<usize, HVertexKind> = BTreeMap::new();
    for set in &split_sets {
        for &p in &set.pieces {
            piece_kind.insert(
                p,
                match set.source {
                    SplitSource::TVertex { vertex } => HVertexKind::TSplit { vertex },
                    SplitSource::High => HVertexKind::HighSplit,
                },
            );
        }
    }
    let mut h_c3 = BTreeSet::new();
    for v in 0..h.vertex_count() {
        if let Some(&k) = piece_kind.get(&v) {
            kinds.push(k);
            continue;
        }
        let x = *h_origin.image(v).iter().next().unwrap();
        let component = cls
            .component_of(x)
            .ok_or_else(|| structural(format!("H vertex {v} is neither split nor contracted")))?;
        if cls.class_of(component) != Some(1) {
            return Err(structural(format!("H vertex {v} contracted from a component of class != 1")));
        }
        h_c3.insert(v);
        kinds.push(HVertexKind::Contracted { component });
    }

    Ok(HLedger {
        g1,
        g2,
        g3,
        h,
        g1_origin,
        g2_origin,
        g3_origin,
        h_origin,
        smoothed,
        split_sets,
        h_c3,
        h_cge5,
        cge5_degree_sum,
        cge5_loops_dropped,
        ell: cls.ell(),
        kinds,
    })
}
