//! Rotation systems and the facial structure they induce.
//!
//! Orientation convention: a face is traced by arriving at `v` along
//! `u -> v` and leaving along `v -> w`, where `w` follows `u` in the
//! rotation of `v`. Generators in this crate emit counterclockwise
//! rotations, so faces come out clockwise; nothing downstream depends on
//! the orientation, only on face identity.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::error::{precondition, structural, Result};
use crate::graph::Graph;

/// Per-vertex cyclic order of neighbors for a simple plane graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlanarEmbedding {
    pub rotation: Vec<Vec<usize>>,
    /// Index into [`PlanarEmbedding::faces`] of the designated outer face.
    pub outer_face: Option<usize>,
}

/// A facial walk given by its sequence of vertices; the walk closes from
/// the last vertex back to the first.
pub type FacialWalk = Vec<usize>;

/// Faces of a rotation system together with the face owning each dart.
#[derive(Clone, Debug)]
pub(crate) struct FaceStructure {
    pub faces: Vec<FacialWalk>,
    pub dart_face: HashMap<(usize, usize), usize>,
}

fn successor(rotation: &[usize], u: usize) -> Option<usize> {
    let pos = rotation.iter().position(|&x| x == u)?;
    Some(rotation[(pos + 1) % rotation.len()])
}

/// Traces all faces of a rotation system. The rotation must be symmetric
/// (checked by the callers that accept user input).
pub(crate) fn trace_faces(rotation: &[Vec<usize>]) -> Result<FaceStructure> {
    let mut dart_face: HashMap<(usize, usize), usize> = HashMap::new();
    let mut faces = Vec::new();
    for u in 0..rotation.len() {
        for &v in &rotation[u] {
            if dart_face.contains_key(&(u, v)) {
                continue;
            }
            let id = faces.len();
            let mut walk = Vec::new();
            let (mut a, mut b) = (u, v);
            loop {
                if dart_face.insert((a, b), id).is_some() {
                    return Err(structural(format!("dart {a}->{b} reached twice")));
                }
                walk.push(a);
                let next = successor(&rotation[b], a)
                    .ok_or_else(|| structural(format!("{a} missing from rotation of {b}")))?;
                a = b;
                b = next;
                if (a, b) == (u, v) {
                    break;
                }
            }
            faces.push(walk);
        }
    }
    Ok(FaceStructure { faces, dart_face })
}

/// Result of [`PlanarEmbedding::interior`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Interior {
    /// `V(W)` together with every vertex strictly inside `W`, sorted.
    pub int_vertices: Vec<usize>,
    /// Vertices strictly inside `W`, sorted.
    pub ints_vertices: Vec<usize>,
    pub int: Graph,
    pub ints: Graph,
}

impl PlanarEmbedding {
    pub fn new(rotation: Vec<Vec<usize>>) -> Self {
        PlanarEmbedding {
            rotation,
            outer_face: None,
        }
    }

    pub fn with_outer_face(mut self, face: usize) -> Self {
        self.outer_face = Some(face);
        self
    }

    /// Checks that the rotation of every vertex lists exactly its neighbors
    /// in `g`, each once.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.rotation.len() != g.vertex_count() {
            return Err(structural(format!(
                "rotation lists {} vertices, graph has {}",
                self.rotation.len(),
                g.vertex_count()
            )));
        }
        for (v, rot) in self.rotation.iter().enumerate() {
            let set: BTreeSet<usize> = rot.iter().copied().collect();
            if set.len() != rot.len() {
                return Err(structural(format!("rotation of {v} repeats a neighbor")));
            }
            if !set.iter().copied().eq(g.neighbors(v).iter().copied()) {
                return Err(structural(format!(
                    "rotation of {v} is {rot:?} but its neighbors are {:?}",
                    g.neighbors(v)
                )));
            }
        }
        Ok(())
    }

    fn check_symmetric(&self) -> Result<()> {
        let n = self.rotation.len();
        for (u, rot) in self.rotation.iter().enumerate() {
            let set: BTreeSet<usize> = rot.iter().copied().collect();
            if set.len() != rot.len() {
                return Err(structural(format!("rotation of {u} repeats a neighbor")));
            }
            for &v in rot {
                if v >= n || v == u {
                    return Err(structural(format!("rotation of {u} lists invalid vertex {v}")));
                }
                if !self.rotation[v].contains(&u) {
                    return Err(structural(format!(
                        "edge {u}-{v} appears in the rotation of {u} but not of {v}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// All facial walks. Every dart is used by exactly one face.
    pub fn faces(&self) -> Result<Vec<FacialWalk>> {
        self.check_symmetric()?;
        Ok(trace_faces(&self.rotation)?.faces)
    }

    pub(crate) fn face_structure(&self) -> Result<FaceStructure> {
        self.check_symmetric()?;
        trace_faces(&self.rotation)
    }

    /// `n - e + f - 2`, zero for a connected plane embedding.
    pub fn euler_residual(&self, g: &Graph) -> Result<i64> {
        self.validate(g)?;
        let f = self.faces()?.len() as i64;
        Ok(g.vertex_count() as i64 - g.edge_count() as i64 + f - 2)
    }

    /// Validates against `g` and checks that the embedding is spherical.
    pub fn check_plane(&self, g: &Graph) -> Result<()> {
        let residual = self.euler_residual(g)?;
        if g.is_connected() && residual != 0 {
            let faces = self.faces()?;
            return Err(structural(format!(
                "Euler residual {residual}: {} faces traced: {faces:?}",
                faces.len()
            )));
        }
        Ok(())
    }

    /// True iff every facial walk of this (plane) embedding is a triangle.
    pub fn is_plane_triangulation(&self, g: &Graph) -> Result<bool> {
        if g.vertex_count() < 3 {
            return Err(precondition("triangulation check needs at least 3 vertices"));
        }
        if !g.is_connected() {
            return Err(precondition("graph is disconnected"));
        }
        if self.euler_residual(g)? != 0 {
            return Ok(false);
        }
        Ok(self.faces()?.iter().all(|f| {
            f.len() == 3 && f[0] != f[1] && f[1] != f[2] && f[0] != f[2]
        }))
    }

    /// The cycle on `N(v)` bounding the face of `G - v` that contains the
    /// neighbors of `v`, in rotation order.
    pub fn induced_face(&self, g: &Graph, v: usize) -> Result<Vec<usize>> {
        g.check_vertex(v)?;
        if !self.is_plane_triangulation(g)? {
            return Err(precondition("induced faces need a plane triangulation"));
        }
        let rot = &self.rotation[v];
        for i in 0..rot.len() {
            let (a, b) = (rot[i], rot[(i + 1) % rot.len()]);
            if !g.has_edge(a, b) {
                return Err(structural(format!("neighbors {a}, {b} of {v} not adjacent")));
            }
        }
        Ok(rot.clone())
    }

    /// Rotation restricted to the edges of a subgraph, keeping cyclic order.
    pub(crate) fn restricted_rotation(&self, keep: &BTreeSet<(usize, usize)>) -> Vec<Vec<usize>> {
        self.rotation
            .iter()
            .enumerate()
            .map(|(u, rot)| {
                rot.iter()
                    .copied()
                    .filter(|&v| keep.contains(&(u.min(v), u.max(v))))
                    .collect()
            })
            .collect()
    }

    /// Groups the faces of `G` into the regions cut out by `cut` (a set of
    /// edges, `(min, max)` keyed). Faces sharing an edge outside `cut` end
    /// up in the same region. Returns the region of each face of `G`.
    pub(crate) fn regions(&self, fs: &FaceStructure, cut: &BTreeSet<(usize, usize)>) -> Vec<usize> {
        let nf = fs.faces.len();
        let mut region = vec![usize::MAX; nf];
        let mut next = 0;
        for start in 0..nf {
            if region[start] != usize::MAX {
                continue;
            }
            region[start] = next;
            let mut queue = VecDeque::from([start]);
            while let Some(f) = queue.pop_front() {
                let walk = &fs.faces[f];
                for i in 0..walk.len() {
                    let (a, b) = (walk[i], walk[(i + 1) % walk.len()]);
                    if cut.contains(&(a.min(b), a.max(b))) {
                        continue;
                    }
                    let other = fs.dart_face[&(b, a)];
                    if region[other] == usize::MAX {
                        region[other] = next;
                        queue.push_back(other);
                    }
                }
            }
            next += 1;
        }
        region
    }

    /// `Int(W)` and `Ints(W)` for a closed walk `W` (vertex sequence,
    /// closing back to the first vertex). "Inside" is everything not in the
    /// region containing the designated outer face.
    pub fn interior(&self, g: &Graph, walk: &[usize]) -> Result<Interior> {
        self.validate(g)?;
        let outer = self
            .outer_face
            .ok_or_else(|| precondition("interior needs a designated outer face"))?;
        if walk.len() < 3 {
            return Err(precondition("walk must have at least 3 vertices"));
        }
        let mut cut = BTreeSet::new();
        for i in 0..walk.len() {
            let (a, b) = (walk[i], walk[(i + 1) % walk.len()]);
            g.check_vertex(a)?;
            if !g.has_edge(a, b) {
                return Err(precondition(format!("walk step {a}-{b} is not an edge")));
            }
            cut.insert((a.min(b), a.max(b)));
        }
        let fs = self.face_structure()?;
        if outer >= fs.faces.len() {
            return Err(precondition(format!("outer face {outer} does not exist")));
        }
        let region = self.regions(&fs, &cut);
        let outer_region = region[outer];
        if region.iter().all(|&r| r == outer_region) {
            return Err(precondition("walk does not separate any region"));
        }
        let on_walk: BTreeSet<usize> = walk.iter().copied().collect();
        let mut inside = BTreeSet::new();
        for (f, walk_f) in fs.faces.iter().enumerate() {
            if region[f] != outer_region {
                inside.extend(walk_f.iter().copied().filter(|v| !on_walk.contains(v)));
            }
        }
        let ints_vertices: Vec<usize> = inside.iter().copied().collect();
        let int_vertices: Vec<usize> = inside.union(&on_walk).copied().collect();
        Ok(Interior {
            int: g.induced(&int_vertices),
            ints: g.induced(&ints_vertices),
            int_vertices,
            ints_vertices,
        })
    }
}

/// Standard embeddings for a handful of named triangulations.
pub mod named {
    use super::PlanarEmbedding;
    use crate::graph::Graph;

    fn from_rotation(rotation: Vec<Vec<usize>>) -> (Graph, PlanarEmbedding) {
        let mut g = Graph::new(rotation.len());
        for (u, rot) in rotation.iter().enumerate() {
            for &v in rot {
                g.add_edge(u, v);
            }
        }
        (g, PlanarEmbedding::new(rotation))
    }

    /// A single triangle (two faces).
    pub fn triangle() -> (Graph, PlanarEmbedding) {
        from_rotation(vec![vec![1, 2], vec![2, 0], vec![0, 1]])
    }

    /// K4 with vertex 3 drawn inside the triangle 0 1 2; the outer face is
    /// the one bounded by 0 1 2.
    pub fn tetrahedron() -> (Graph, PlanarEmbedding) {
        let (g, emb) = from_rotation(vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]]);
        let outer = emb
            .faces()
            .expect("valid")
            .iter()
            .position(|f| !f.contains(&3))
            .expect("outer triangle");
        (g, emb.with_outer_face(outer))
    }

    /// Octahedron: 0/5 poles, 1 2 3 4 the equator.
    pub fn octahedron() -> (Graph, PlanarEmbedding) {
        from_rotation(vec![
            vec![1, 2, 3, 4],
            vec![0, 4, 5, 2],
            vec![0, 1, 5, 3],
            vec![0, 2, 5, 4],
            vec![0, 3, 5, 1],
            vec![1, 4, 3, 2],
        ])
    }

    /// Icosahedron: 0 and 11 are poles, 1..=5 the upper and 6..=10 the
    /// lower pentagon, with `i` adjacent to `i + 5` and `i + 5` adjacent to
    /// `i % 5 + 1`.
    pub fn icosahedron() -> (Graph, PlanarEmbedding) {
        let up = |i: usize| 1 + (i % 5);
        let lo = |i: usize| 6 + (i % 5);
        let mut rot = vec![Vec::new(); 12];
        rot[0] = (0..5).map(up).collect();
        rot[11] = (0..5).rev().map(lo).collect();
        for i in 0..5 {
            // neighbours of up(i), counterclockwise seen from outside
            rot[up(i)] = vec![0, up(i + 4), lo(i + 4), lo(i), up(i + 1)];
            rot[lo(i)] = vec![up(i), lo(i + 4), 11, lo(i + 1), up(i + 1)];
        }
        from_rotation(rot)
    }
}
