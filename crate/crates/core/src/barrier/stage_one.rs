//! The matching pipeline on `H`: a maximal deficiency set `X`, the
//! component classes of `H - X`, the matchings `M1, M2, M, M', M*`, and the
//! representative pairs they induce.

use std::collections::BTreeSet;

use serde::Serialize;

use super::h_graph::HLedger;
use crate::error::{structural, violation, Result};
use crate::graph::EdgeId;
use crate::matching::{
    bipartite_cover_matching, build_bx, cover_matching_with_quota, deficiency, maximal_deficiency_set,
    merge_matchings, near_perfect_matching, Matching,
};
use crate::two_factor::ComponentClassification;

/// How a component of `H - X` is classified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ComponentRole {
    Compact,
    /// Contains a splitting vertex.
    Splitting,
    /// Noncompact, inside `h(C_3)`, with `min(e_H(D, X), 3)` edges to `X`.
    Y { class: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HComponent {
    pub vertices: BTreeSet<usize>,
    pub internal_edges: usize,
    pub x_edges: usize,
    pub role: ComponentRole,
}

/// `D` is compact: odd order at least 3, inside `h(C_3)`, `e ≥ 1.5n - 0.5`.
pub fn is_compact(vertices: &BTreeSet<usize>, internal_edges: usize, ledger: &HLedger) -> bool {
    let n = vertices.len();
    n >= 3 && n % 2 == 1 && vertices.is_subset(&ledger.h_c3) && 2 * internal_edges + 1 >= 3 * n
}

/// Classification of the components of `H - X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompactDetection {
    pub components: Vec<HComponent>,
    pub compact: Vec<usize>,
    pub q: usize,
    pub s_star: usize,
    /// `Y_0 .. Y_3`, as component indices.
    pub y: [Vec<usize>; 4],
}

pub fn detect_compact_components(ledger: &HLedger, x: &BTreeSet<usize>) -> CompactDetection {
    let h = &ledger.h;
    let mut components = Vec::new();
    let (mut compact, mut y) = (Vec::new(), [Vec::new(), Vec::new(), Vec::new(), Vec::new()]);
    let mut s_star = 0;
    for (i, comp) in h.components_without(x).into_iter().enumerate() {
        let internal_edges = h.internal_edge_count(&comp);
        let x_edges = h.edges_between(&comp, x);
        let role = if comp.iter().any(|&v| ledger.is_splitting(v)) {
            s_star += 1;
            ComponentRole::Splitting
        } else if is_compact(&comp, internal_edges, ledger) {
            compact.push(i);
            ComponentRole::Compact
        } else {
            let class = x_edges.min(3);
            y[class].push(i);
            ComponentRole::Y { class }
        };
        components.push(HComponent {
            vertices: comp,
            internal_edges,
            x_edges,
            role,
        });
    }
    CompactDetection {
        q: compact.len(),
        compact,
        s_star,
        y,
        components,
    }
}

/// An `M*` edge with both ends in `h(C_3)`, lifted to `G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepresentativePair {
    pub edge: EdgeId,
    pub h_ends: (usize, usize),
    /// The `T` vertex `y` with `c(y) = 2` smoothed into this edge.
    pub via: usize,
    /// The representative vertices, one per component, adjacent to `via`.
    pub representatives: (usize, usize),
    pub components: (usize, usize),
}

/// `df(H) <= q + s* + |T_1| / 3`, compared as `3 df <= 3q + 3s* + |T_1|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeficiencyBound {
    pub df: usize,
    pub q: usize,
    pub s_star: usize,
    pub t1: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StageOneReport {
    pub x: BTreeSet<usize>,
    pub detection: CompactDetection,
    /// Matchings of `B(X)`.
    pub m1: Matching,
    pub m2: Matching,
    pub m: Matching,
    /// Matchings of `H`.
    pub m_prime: Matching,
    pub m_star: Matching,
    pub representative_pairs: Vec<RepresentativePair>,
    pub m_count: usize,
    pub t_prime: Vec<usize>,
    pub deficiency_bound: DeficiencyBound,
    /// `M*` is a matching of `H` of size `(n(H) - df(H)) / 2`.
    pub m_star_maximum: bool,
    /// Every component of `H - X` meets `V(M')` at most once.
    pub one_cover_per_component: bool,
    /// Each class-1 component owns at most one representative vertex.
    pub unique_representatives: bool,
}

impl StageOneReport {
    pub fn q(&self) -> usize {
        self.detection.q
    }

    pub fn s_star(&self) -> usize {
        self.detection.s_star
    }

    /// Representative vertex of a class-1 component, if it has one.
    pub fn representative_of(&self, component: usize) -> Option<usize> {
        self.representative_pairs.iter().find_map(|p| {
            if p.components.0 == component {
                Some(p.representatives.0)
            } else if p.components.1 == component {
                Some(p.representatives.1)
            } else {
                None
            }
        })
    }

    pub fn matching_properties_hold(&self) -> bool {
        self.m_star_maximum && self.one_cover_per_component && self.unique_representatives
    }
}

/// Runs the matching pipeline on `H`. Failures of the properties of a
/// maximal deficiency set are errors; the deficiency bound is reported.
pub fn stage_one_pipeline(ledger: &HLedger, cls: &ComponentClassification) -> Result<StageOneReport> {
    let h = &ledger.h;
    let x = maximal_deficiency_set(h);
    let df = deficiency(h).deficiency;

    let detection = detect_compact_components(ledger, &x);
    for c in &detection.components {
        if c.vertices.len() % 2 == 0 {
            return Err(violation(format!("component {:?} of H - X has even order", c.vertices)));
        }
        for &u in &c.vertices {
            near_perfect_matching(h, &c.vertices, u)?;
        }
    }

    let bx = build_bx(h, &x);
    let x_side: BTreeSet<usize> = bx.x_vertices().collect();
    let m1 = bipartite_cover_matching(&bx.graph, &x_side)
        .map_err(|hv| violation(format!("B(X) has no matching covering X: {hv:?}")))?;
    let as_b = |list: &[usize]| -> BTreeSet<usize> { list.iter().map(|&i| bx.component_vertex(i)).collect() };
    let (y1, y2, y3) = (as_b(&detection.y[1]), as_b(&detection.y[2]), as_b(&detection.y[3]));
    let m2 = cover_matching_with_quota(&bx.graph, &y3, &y1, &y2)?;
    let y_covered: BTreeSet<usize> = m2
        .covered(&bx.graph)
        .into_iter()
        .filter(|v| y1.contains(v) || y2.contains(v) || y3.contains(v))
        .collect();
    let m = merge_matchings(&bx.graph, &m1, &x_side, &m2, &y_covered);
    let m_cov = m.covered(&bx.graph);
    if !x_side.is_subset(&m_cov) || !y_covered.is_subset(&m_cov) {
        return Err(violation("merged matching misses X or Y"));
    }

    // realize M in H
    let mut m_prime = Matching::default();
    let mut star_of = vec![None; detection.components.len()];
    for &e in &m.edges {
        let (a, b) = bx.graph.endpoints(e).unwrap();
        let (xi, ci) = if a < bx.x_side.len() { (a, b) } else { (b, a) };
        let xv = bx.x_side[xi];
        let comp = ci - bx.x_side.len();
        let (he, ystar) = h
            .incident(xv)
            .find_map(|he| {
                let w = h.other_end(he, xv)?;
                detection.components[comp].vertices.contains(&w).then_some((he, w))
            })
            .ok_or_else(|| structural(format!("B(X) edge {e} has no edge of H behind it")))?;
        m_prime.edges.insert(he);
        if star_of[comp].replace(ystar).is_some() {
            return Err(violation(format!("component {comp} matched twice in M")));
        }
    }
    let mp_cov = m_prime.covered(h);
    let one_cover_per_component = detection
        .components
        .iter()
        .all(|c| c.vertices.iter().filter(|v| mp_cov.contains(v)).count() <= 1);

    let mut m_star = m_prime.clone();
    for (i, c) in detection.components.iter().enumerate() {
        let u = match star_of[i] {
            Some(ystar) => ystar,
            None => *c
                .vertices
                .iter()
                .find(|&&v| ledger.is_splitting(v))
                .unwrap_or_else(|| c.vertices.iter().next().unwrap()),
        };
        m_star.edges.extend(near_perfect_matching(h, &c.vertices, u)?.edges);
    }
    let m_star_maximum = m_star.is_valid_in(h) && 2 * m_star.len() + df == h.vertex_count();

    let mut representative_pairs = Vec::new();
    for &e in &m_star.edges {
        let (u, v) = h.endpoints(e).unwrap();
        if !(ledger.h_c3.contains(&u) && ledger.h_c3.contains(&v)) {
            continue;
        }
        let s = ledger
            .smoothed_by_edge(e)
            .ok_or_else(|| structural(format!("edge {e} inside h(C3) was not produced by smoothing")))?;
        // orient the record to (u, v)
        let (reps, comps) = if Some(s.components.0) == ledger.component_of(u) {
            (s.attachments, s.components)
        } else {
            (
                (s.attachments.1, s.attachments.0),
                (s.components.1, s.components.0),
            )
        };
        representative_pairs.push(RepresentativePair {
            edge: e,
            h_ends: (u, v),
            via: s.vertex,
            representatives: reps,
            components: comps,
        });
    }
    let mut owners = BTreeSet::new();
    let unique_representatives = representative_pairs
        .iter()
        .all(|p| owners.insert(p.components.0) && owners.insert(p.components.1));
    let t_prime: BTreeSet<usize> = representative_pairs.iter().map(|p| p.via).collect();

    let t1 = cls.t1.len();
    let deficiency_bound = DeficiencyBound {
        df,
        q: detection.q,
        s_star: detection.s_star,
        t1,
        holds: 3 * df <= 3 * detection.q + 3 * detection.s_star + t1,
    };
    Ok(StageOneReport {
        x,
        m_count: representative_pairs.len(),
        t_prime: t_prime.into_iter().collect(),
        detection,
        m1,
        m2,
        m,
        m_prime,
        m_star,
        representative_pairs,
        deficiency_bound,
        m_star_maximum,
        one_cover_per_component,
        unique_representatives,
    })
}
