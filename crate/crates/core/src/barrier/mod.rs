//! Machinery around a biased barrier `(S, T)` of a graph without a
//! 2-factor: the auxiliary multigraph `H`, its matching pipeline, the
//! bound on `c_3` and the cutset `S'`.

pub mod cutset;
pub mod h_graph;
pub mod stage_one;
pub mod walks;

use serde::Serialize;

pub use cutset::{assemble_cutset, c3_bound, outerplanar_cover, select_sd, C3BoundLedger, CutsetAssembly};
pub use h_graph::{build_h, HInvariants, HLedger, HVertexKind, SmoothedVertex, SplitSet, SplitSource};
pub use stage_one::{
    detect_compact_components, is_compact, stage_one_pipeline, CompactDetection, ComponentRole, DeficiencyBound,
    HComponent, RepresentativePair, StageOneReport,
};
pub use walks::{verify_auxiliary_walks, AuxiliaryWalkReport, FaceWalkRecord};

use crate::embedding::PlanarEmbedding;
use crate::error::Result;
use crate::graph::Graph;
use crate::two_factor::{
    biased_barrier, check_biased_properties, classify_components, BarrierPair, BiasedPropertyReport,
    ComponentClassification,
};

/// Every stage of the analysis for one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BarrierLedger {
    pub barrier: BarrierPair,
    pub properties: BiasedPropertyReport,
    pub classification: ComponentClassification,
    pub h: HLedger,
    pub h_invariants: HInvariants,
    pub stage_one: StageOneReport,
    pub c3: C3BoundLedger,
    pub cutset: CutsetAssembly,
    /// One report per compact component; empty without an embedding.
    pub walks: Vec<AuxiliaryWalkReport>,
}

/// Runs the full pipeline from the biased barrier of `g`.
pub fn analyze(g: &Graph, embedding: Option<&PlanarEmbedding>, guard: usize) -> Result<BarrierLedger> {
    let barrier = biased_barrier(g, guard)?;
    analyze_barrier(g, embedding, barrier)
}

/// Runs the pipeline from a given barrier.
pub fn analyze_barrier(g: &Graph, embedding: Option<&PlanarEmbedding>, barrier: BarrierPair) -> Result<BarrierLedger> {
    let properties = check_biased_properties(g, &barrier)?;
    let classification = classify_components(g, &barrier.s, &barrier.t)?;
    let h = build_h(g, embedding, &barrier, &classification)?;
    let h_invariants = h.invariants(&classification);
    let stage_one = stage_one_pipeline(&h, &classification)?;
    let c3 = c3_bound(&stage_one, &classification);
    let cutset = assemble_cutset(g, &barrier, &classification, &stage_one)?;
    let mut walks = Vec::new();
    if let Some(emb) = embedding {
        if g.vertex_count() >= 3 && g.is_connected() && emb.is_plane_triangulation(g)? {
            for &ci in &stage_one.detection.compact {
                let comp = &stage_one.detection.components[ci].vertices;
                walks.push(verify_auxiliary_walks(g, emb, comp, &h, &classification)?);
            }
        }
    }
    Ok(BarrierLedger {
        barrier,
        properties,
        classification,
        h,
        h_invariants,
        stage_one,
        c3,
        cutset,
        walks,
    })
}
