//! Seeded triangulation generators and corpus annotation.
//!
//! Randomness comes from `ChaCha8Rng` seeded with `seed_from_u64`, so a
//! [`GeneratorSpec`] determines its output across platforms and releases.

use std::collections::BTreeSet;

use rand::seq::index::sample;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::embedding::{named, PlanarEmbedding};
use crate::error::{precondition, Result};
use crate::graph::Graph;
use crate::rational::{ExactRational, ToughnessValue};
use crate::toughness::toughness;
use crate::two_factor::{is_hamiltonian, two_factor_by_gadget};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GeneratorKind {
    Apollonian,
    /// Stellates `n - n(base)` distinct faces of a base triangulation.
    Stellation,
    RandomFlip { flips: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NamedBase {
    Tetrahedron,
    Octahedron,
    Icosahedron,
}

impl NamedBase {
    pub fn build(self) -> (Graph, PlanarEmbedding) {
        match self {
            NamedBase::Tetrahedron => named::tetrahedron(),
            NamedBase::Octahedron => named::octahedron(),
            NamedBase::Icosahedron => named::icosahedron(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    #[serde(flatten)]
    pub kind: GeneratorKind,
    pub n: usize,
    pub seed: u64,
    /// Base for stellation; a random stacked triangulation when absent.
    pub base: Option<NamedBase>,
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<(Graph, PlanarEmbedding)> {
        match self.kind {
            GeneratorKind::Apollonian => apollonian(self.n, self.seed),
            GeneratorKind::RandomFlip { flips } => random_flip_triangulation(self.n, self.seed, flips),
            GeneratorKind::Stellation => random_stellation(self.n, self.seed, self.base),
        }
    }
}

fn insert_after(rot: &mut Vec<usize>, anchor: usize, v: usize) {
    let pos = rot.iter().position(|&x| x == anchor).expect("anchor in rotation");
    rot.insert(pos + 1, v);
}

/// Adds one degree-3 vertex inside each listed face (indices into
/// `embedding.faces()`).
pub fn stellate(g: &Graph, embedding: &PlanarEmbedding, faces: &[usize]) -> Result<(Graph, PlanarEmbedding)> {
    if !embedding.is_plane_triangulation(g)? {
        return Err(precondition("stellation needs a plane triangulation"));
    }
    let all = embedding.faces()?;
    let chosen: BTreeSet<usize> = faces.iter().copied().collect();
    if chosen.len() != faces.len() {
        return Err(precondition("face listed twice"));
    }
    if let Some(&f) = chosen.iter().find(|&&f| f >= all.len()) {
        return Err(precondition(format!("face {f} does not exist ({} faces)", all.len())));
    }
    let mut g = g.clone();
    let mut rotation = embedding.rotation.clone();
    for &f in &chosen {
        let (a, b, c) = (all[f][0], all[f][1], all[f][2]);
        let z = g.add_vertex();
        for w in [a, b, c] {
            g.add_edge(z, w);
        }
        insert_after(&mut rotation[b], a, z);
        insert_after(&mut rotation[c], b, z);
        insert_after(&mut rotation[a], c, z);
        rotation.push(vec![a, c, b]);
    }
    Ok((g, PlanarEmbedding::new(rotation)))
}

/// Stacked triangulation on `n` vertices: `K4`, then repeated stellation of
/// a uniformly chosen face.
pub fn apollonian(n: usize, seed: u64) -> Result<(Graph, PlanarEmbedding)> {
    if n < 4 {
        return Err(precondition(format!("a stacked triangulation needs n >= 4, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut g, mut emb) = named::tetrahedron();
    emb.outer_face = None;
    while g.vertex_count() < n {
        let f = rng.gen_range(0..2 * g.vertex_count() - 4);
        (g, emb) = stellate(&g, &emb, &[f])?;
    }
    Ok((g, emb))
}

fn face_with_dart(emb: &PlanarEmbedding, u: usize, v: usize) -> usize {
    // the third corner w of the triangle traced through u -> v
    let rot = &emb.rotation[v];
    let pos = rot.iter().position(|&x| x == u).unwrap();
    rot[(pos + 1) % rot.len()]
}

/// Replaces the edge `uv`, shared by triangles `u v w` and `v u x`, with
/// `wx`. Returns false (and changes nothing) when the flip would create a
/// parallel edge or drop a degree below 3.
pub fn flip_edge(g: &mut Graph, emb: &mut PlanarEmbedding, u: usize, v: usize) -> bool {
    if !g.has_edge(u, v) || g.degree(u) <= 3 || g.degree(v) <= 3 {
        return false;
    }
    let w = face_with_dart(emb, u, v);
    let x = face_with_dart(emb, v, u);
    if w == x || g.has_edge(w, x) {
        return false;
    }
    g.remove_edge(u, v);
    g.add_edge(w, x);
    emb.rotation[u].retain(|&r| r != v);
    emb.rotation[v].retain(|&r| r != u);
    insert_after(&mut emb.rotation[w], v, x);
    insert_after(&mut emb.rotation[x], u, w);
    true
}

/// `apollonian(n, seed)` followed by `flips` attempted random edge flips.
pub fn random_flip_triangulation(n: usize, seed: u64, flips: usize) -> Result<(Graph, PlanarEmbedding)> {
    let (mut g, mut emb) = apollonian(n, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    for _ in 0..flips {
        let edges = g.edges();
        let (u, v) = edges[rng.gen_range(0..edges.len())];
        flip_edge(&mut g, &mut emb, u, v);
    }
    Ok((g, emb))
}

/// Stellates `n - n0` random distinct faces of a base on `n0` vertices.
fn random_stellation(n: usize, seed: u64, base: Option<NamedBase>) -> Result<(Graph, PlanarEmbedding)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (g, emb) = match base {
        Some(b) => {
            let (g, mut e) = b.build();
            e.outer_face = None;
            (g, e)
        }
        None => {
            if n < 5 {
                return Err(precondition(format!("stellation of a stacked base needs n >= 5, got {n}")));
            }
            // n - n0 <= 2 n0 - 4 faces must be available
            let lo = (n + 4).div_ceil(3).max(4);
            let n0 = rng.gen_range(lo..n);
            apollonian(n0, rng.gen())?
        }
    };
    let n0 = g.vertex_count();
    let faces = 2 * n0 - 4;
    if n < n0 || n - n0 > faces {
        return Err(precondition(format!(
            "cannot reach n = {n} by stellating a base with {n0} vertices and {faces} faces"
        )));
    }
    let chosen: Vec<usize> = sample(&mut rng, faces, n - n0).into_vec();
    stellate(&g, &emb, &chosen)
}

/// Per-entry metadata, recomputable from the graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryMeta {
    pub n: usize,
    pub e: usize,
    pub toughness: ToughnessValue,
    pub dist_condition: bool,
    pub two_factor: bool,
    pub hamiltonian: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusEntry {
    pub id: String,
    pub graph: Graph,
    pub embedding: PlanarEmbedding,
    pub meta: EntryMeta,
    pub generator: Option<GeneratorSpec>,
}

impl CorpusEntry {
    /// Computes the metadata; Hamiltonicity only when `n <= ham_guard`.
    pub fn annotate(
        id: impl Into<String>,
        graph: Graph,
        embedding: PlanarEmbedding,
        generator: Option<GeneratorSpec>,
        ham_guard: usize,
    ) -> Result<Self> {
        let n = graph.vertex_count();
        let hamiltonian = if n <= ham_guard {
            Some(is_hamiltonian(&graph, ham_guard)?.is_some())
        } else {
            None
        };
        let meta = EntryMeta {
            n,
            e: graph.edge_count(),
            toughness: toughness(&graph)?.value,
            dist_condition: graph.dist_condition().holds,
            two_factor: two_factor_by_gadget(&graph).is_some(),
            hamiltonian,
        };
        Ok(CorpusEntry {
            id: id.into(),
            graph,
            embedding,
            meta,
            generator,
        })
    }

    /// `τ >= 3/2` and the dist-condition.
    pub fn satisfies_hypotheses(&self) -> bool {
        self.meta.toughness.at_least(&ExactRational::new(3, 2)) && self.meta.dist_condition
    }
}

/// Predicates for [`filter_corpus`]; `None` means "don't care".
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CorpusFilter {
    pub min_toughness: Option<ExactRational>,
    pub dist_condition: Option<bool>,
    pub two_factor: Option<bool>,
    pub hamiltonian: Option<bool>,
}

impl CorpusFilter {
    /// The hypothesis set: `τ >= 3/2` with the dist-condition.
    pub fn hypotheses() -> Self {
        CorpusFilter {
            min_toughness: Some(ExactRational::new(3, 2)),
            dist_condition: Some(true),
            ..Default::default()
        }
    }

    pub fn accepts(&self, e: &CorpusEntry) -> bool {
        self.min_toughness.as_ref().is_none_or(|t| e.meta.toughness.at_least(t))
            && self.dist_condition.is_none_or(|d| e.meta.dist_condition == d)
            && self.two_factor.is_none_or(|f| e.meta.two_factor == f)
            && self.hamiltonian.is_none_or(|h| e.meta.hamiltonian == Some(h))
    }
}

pub fn filter_corpus(entries: Vec<CorpusEntry>, filter: &CorpusFilter) -> Vec<CorpusEntry> {
    entries.into_iter().filter(|e| filter.accepts(e)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_triangulation(g: &Graph, emb: &PlanarEmbedding) {
        let n = g.vertex_count();
        assert_eq!(g.edge_count(), 3 * n - 6);
        assert_eq!(emb.euler_residual(g).unwrap(), 0);
        assert!(emb.is_plane_triangulation(g).unwrap());
    }

    #[test]
    fn apollonian_sizes() {
        let (g, emb) = apollonian(4, 1).unwrap();
        assert!(g.is_complete());
        check_triangulation(&g, &emb);
        let (g, emb) = apollonian(5, 1).unwrap();
        assert_eq!(g.edge_count(), 9);
        check_triangulation(&g, &emb);
        for seed in 0..20 {
            let (g, emb) = apollonian(20, seed).unwrap();
            check_triangulation(&g, &emb);
            assert_eq!((g.clone(), emb.clone()), apollonian(20, seed).unwrap());
        }
        assert!(apollonian(3, 0).is_err());
    }

    #[test]
    fn stellation_examples() {
        let (k4, emb) = named::tetrahedron();
        let (g, e) = stellate(&k4, &emb, &[0, 1, 2, 3]).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (8, 18));
        check_triangulation(&g, &e);
        assert_eq!(stellate(&k4, &emb, &[]).unwrap().0, k4);
        assert!(stellate(&k4, &emb, &[4]).is_err());

        let (oct, emb) = named::octahedron();
        let (g, e) = stellate(&oct, &emb, &(0..8).collect::<Vec<_>>()).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (14, 36));
        check_triangulation(&g, &e);
        let t = toughness(&g).unwrap().value;
        assert!(!t.at_least(&ExactRational::new(3, 2)));
        assert!(!t.at_least(&ExactRational::new(4, 5)));
    }

    #[test]
    fn flips_preserve_triangulations() {
        assert_eq!(random_flip_triangulation(12, 3, 0).unwrap(), apollonian(12, 3).unwrap());
        for seed in 0..20 {
            let (g, emb) = random_flip_triangulation(12, seed, 200).unwrap();
            check_triangulation(&g, &emb);
            assert!(g.min_degree() >= 3);
        }
        let base = apollonian(12, 5).unwrap().0;
        let flipped = random_flip_triangulation(12, 5, 500).unwrap().0;
        let degs = |g: &Graph| {
            let mut d: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
            d.sort_unstable();
            d
        };
        assert_ne!(degs(&base), degs(&flipped));
    }

    #[test]
    fn specs_are_deterministic() {
        let specs = [
            GeneratorSpec { kind: GeneratorKind::Apollonian, n: 9, seed: 7, base: None },
            GeneratorSpec { kind: GeneratorKind::Stellation, n: 11, seed: 7, base: None },
            GeneratorSpec { kind: GeneratorKind::Stellation, n: 14, seed: 7, base: Some(NamedBase::Octahedron) },
            GeneratorSpec { kind: GeneratorKind::RandomFlip { flips: 30 }, n: 10, seed: 7, base: None },
        ];
        for spec in specs {
            let (g, emb) = spec.generate().unwrap();
            assert_eq!(g.vertex_count(), spec.n);
            check_triangulation(&g, &emb);
            assert_eq!(spec.generate().unwrap(), (g, emb));
        }
    }

    #[test]
    fn corpus_filtering() {
        let (ico, emb) = named::icosahedron();
        let entry = CorpusEntry::annotate("icosahedron", ico, emb, None, 14).unwrap();
        assert!(entry.meta.dist_condition && entry.meta.two_factor);
        assert_eq!(entry.meta.hamiltonian, Some(true));

        let (oct, emb) = named::octahedron();
        let (g, e) = stellate(&oct, &emb, &(0..8).collect::<Vec<_>>()).unwrap();
        let stellated = CorpusEntry::annotate("stellated-octahedron", g, e, None, 14).unwrap();
        assert!(!stellated.satisfies_hypotheses());

        let kept = filter_corpus(vec![entry.clone(), stellated], &CorpusFilter::hypotheses());
        assert_eq!(kept.len(), usize::from(entry.satisfies_hypotheses()));
        assert!(filter_corpus(Vec::new(), &CorpusFilter::hypotheses()).is_empty());
    }
}
