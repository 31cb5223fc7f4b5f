//! Exact toughness computation, Tutte's 2-factor criterion and the
//! barrier machinery behind the planar 1-tough / 2-factor bound.

pub mod barrier;
mod bits;
pub mod catalog;
pub mod embedding;
pub mod error;
pub mod generators;
pub mod graph;
pub mod matching;
pub mod rational;
pub mod toughness;
pub mod two_factor;

pub use embedding::PlanarEmbedding;
pub use error::{Error, Result};
pub use graph::{EdgeId, Graph, Multigraph, VertexMap};
pub use matching::Matching;
pub use rational::{ExactRational, ToughnessValue};
pub use toughness::{is_t_tough, toughness};
pub use two_factor::{biased_barrier, delta, has_two_factor, BarrierPair, TwoFactor, TwoFactorDecision};
