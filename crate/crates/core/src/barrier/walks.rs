//! Auxiliary walks of compact components.
//!
//! For a compact component `D` of `H - X`, `h1^{-1}(D)` is the subgraph of
//! `G` made of the components behind the vertices of `D` and the paths
//! `x1 y x2` behind its edges. Each face `F` of it cuts out a region of the
//! triangulation; `Ints(F)` is what lies strictly inside that region, and
//! the walk `W` of interest bounds `Ints(F)` on the side facing `F`.

use std::collections::BTreeSet;

use serde::Serialize;

use super::h_graph::HLedger;
use crate::embedding::{trace_faces, PlanarEmbedding};
use crate::error::{precondition, structural, Result};
use crate::graph::Graph;
use crate::two_factor::ComponentClassification;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceWalkRecord {
    /// The facial walk of `h1^{-1}(D)`, as vertices of `G`.
    pub walk: Vec<usize>,
    /// A vertex on the walk has an edge to `T_1` inside the face.
    pub bad: bool,
    pub ints: Vec<usize>,
    /// Outer walk of each component of `Ints(F)`.
    pub outer_walks: Vec<Vec<usize>>,
    /// Good, `Ints(F)` nonempty, and every outer walk lies in `S ∪ U_1`
    /// with each of its `S` vertices on a cycle of the walk.
    pub qualifies: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuxiliaryWalkReport {
    pub component: Vec<usize>,
    pub lifted_vertices: Vec<usize>,
    pub faces: Vec<FaceWalkRecord>,
    pub qualifying: usize,
    /// At least two faces qualify.
    pub holds: bool,
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// `h1^{-1}(D)` as a vertex set and an edge set of `G`.
fn lift_component(
    g: &Graph,
    ledger: &HLedger,
    cls: &ComponentClassification,
    d: &BTreeSet<usize>,
) -> Result<(BTreeSet<usize>, BTreeSet<(usize, usize)>)> {
    let mut vertices = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for &x in d {
        let ci = ledger
            .component_of(x)
            .ok_or_else(|| structural(format!("H vertex {x} is not a contracted class-1 component")))?;
        let comp = &cls.components[ci].vertices;
        vertices.extend(comp.iter().copied());
        for &u in comp {
            for &w in g.neighbors(u) {
                if u < w && comp.binary_search(&w).is_ok() {
                    edges.insert((u, w));
                }
            }
        }
    }
    for (e, u, v) in ledger.h.edges() {
        if !(d.contains(&u) && d.contains(&v)) {
            continue;
        }
        let s = ledger
            .smoothed_by_edge(e)
            .ok_or_else(|| structural(format!("edge {e} of D was not produced by smoothing")))?;
        let y = s.vertex;
        let (a, b) = s.attachments;
        if !g.has_edge(y, a) || !g.has_edge(y, b) {
            return Err(structural(format!("smoothed vertex {y} is not adjacent to {a} and {b}")));
        }
        vertices.insert(y);
        edges.insert(key(y, a));
        edges.insert(key(y, b));
    }
    Ok((vertices, edges))
}

/// Vertices of a walk lying on a cycle of the walk's edge set.
fn on_cycles(walk: &[usize]) -> BTreeSet<usize> {
    let mut edges = BTreeSet::new();
    for i in 0..walk.len() {
        let (a, b) = (walk[i], walk[(i + 1) % walk.len()]);
        if a != b {
            edges.insert(key(a, b));
        }
    }
    let mut out = BTreeSet::new();
    for &(a, b) in &edges {
        // (a, b) lies on a cycle iff b is reachable from a without it
        let mut seen = BTreeSet::from([a]);
        let mut stack = vec![a];
        while let Some(u) = stack.pop() {
            for &(p, q) in &edges {
                if (p, q) == (a, b) {
                    continue;
                }
                let w = if p == u {
                    q
                } else if q == u {
                    p
                } else {
                    continue;
                };
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        if seen.contains(&b) {
            out.insert(a);
            out.insert(b);
        }
    }
    out
}

/// The facial walk of the component `comp` that faces the rest of the
/// graph across the edge `k a` (`k ∈ comp`, `a ∉ comp`).
fn walk_facing(emb: &PlanarEmbedding, comp: &BTreeSet<usize>, k: usize, a: usize) -> Result<Vec<usize>> {
    if comp.len() == 1 {
        return Ok(vec![k]);
    }
    let rot = &emb.rotation[k];
    let pos = rot.iter().position(|&w| w == a).unwrap();
    let j = (1..rot.len())
        .map(|i| rot[(pos + rot.len() - i) % rot.len()])
        .find(|w| comp.contains(w))
        .ok_or_else(|| structural(format!("vertex {k} has no neighbor in its component")))?;
    let keep: BTreeSet<(usize, usize)> = comp
        .iter()
        .flat_map(|&u| {
            emb.rotation[u]
                .iter()
                .filter(|w| comp.contains(w))
                .map(move |&w| key(u, w))
        })
        .collect();
    let fs = trace_faces(&emb.restricted_rotation(&keep))?;
    let f = fs.dart_face[&(j, k)];
    Ok(fs.faces[f].clone())
}

/// Examines every face of `h1^{-1}(D)` for the auxiliary-walk property.
pub fn verify_auxiliary_walks(
    g: &Graph,
    emb: &PlanarEmbedding,
    d: &BTreeSet<usize>,
    ledger: &HLedger,
    cls: &ComponentClassification,
) -> Result<AuxiliaryWalkReport> {
    if !emb.is_plane_triangulation(g)? {
        return Err(precondition("auxiliary walks need a plane triangulation"));
    }
    let (lifted, cut) = lift_component(g, ledger, cls, d)?;
    let fs = emb.face_structure()?;
    let region = emb.regions(&fs, &cut);
    let sub_faces = trace_faces(&emb.restricted_rotation(&cut))?;

    let s: BTreeSet<usize> = cls.s.iter().copied().collect();
    let t1: BTreeSet<usize> = cls.t1.iter().copied().collect();
    let u1: BTreeSet<usize> = cls.u_by_class.get(&0).into_iter().flatten().copied().collect();

    let mut faces = Vec::new();
    for walk in &sub_faces.faces {
        let r = region[fs.dart_face[&(walk[0], walk[1 % walk.len()])]];
        let in_region: Vec<usize> = (0..fs.faces.len()).filter(|&f| region[f] == r).collect();
        let mut ints = BTreeSet::new();
        let mut bad = false;
        let on_walk: BTreeSet<usize> = walk.iter().copied().collect();
        for &f in &in_region {
            let fw = &fs.faces[f];
            ints.extend(fw.iter().copied().filter(|v| !lifted.contains(v)));
            for i in 0..fw.len() {
                let (a, b) = (fw[i], fw[(i + 1) % fw.len()]);
                if (on_walk.contains(&a) && t1.contains(&b)) || (on_walk.contains(&b) && t1.contains(&a)) {
                    bad = true;
                }
            }
        }
        let ints_vec: Vec<usize> = ints.iter().copied().collect();
        let sub = g.induced(&ints_vec);
        let mut outer_walks = Vec::new();
        for comp_local in sub.components() {
            let comp: BTreeSet<usize> = comp_local.iter().map(|&i| ints_vec[i]).collect();
            let (k, a) = comp
                .iter()
                .find_map(|&k| g.neighbors(k).iter().find(|w| lifted.contains(w)).map(|&a| (k, a)))
                .ok_or_else(|| structural("component of Ints(F) does not touch the lifted subgraph"))?;
            outer_walks.push(walk_facing(emb, &comp, k, a)?);
        }
        let walks_ok = outer_walks.iter().all(|w| {
            let cyc = on_cycles(w);
            w.iter().all(|v| s.contains(v) || u1.contains(v))
                && w.iter().filter(|v| s.contains(v)).all(|v| cyc.contains(v))
        });
        faces.push(FaceWalkRecord {
            walk: walk.clone(),
            bad,
            qualifies: !bad && !ints.is_empty() && walks_ok,
            ints: ints_vec,
            outer_walks,
        });
    }
    let qualifying = faces.iter().filter(|f| f.qualifies).count();
    Ok(AuxiliaryWalkReport {
        component: d.iter().copied().collect(),
        lifted_vertices: lifted.into_iter().collect(),
        faces,
        qualifying,
        holds: qualifying >= 2,
    })
}
