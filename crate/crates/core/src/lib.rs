//! Color refinement, unfolding trees, and tree-coding message passing.
//!
//! The crate has three layers:
//!
//! * graph plumbing: [`graph`] (data model, JSON format, diameter, label
//!   quantizer) and [`partition`];
//! * the two node-equivalence machines that act as each other's oracle:
//!   [`wl`] (iterative color refinement with an injective dictionary) and
//!   [`unfold`] (depth-bounded unfolding trees with canonical integer codes),
//!   tied together by [`bridge`];
//! * message passing on top of them: [`exact`] (a lookup network whose node
//!   state is a decodable tree code, reproducing targets with zero error) and
//!   [`numeric`] (a differentiable sum/mean-aggregation network with
//!   perturbation-bound experiments).
//!
//! [`gen`] and [`suite`] provide seeded corpora and the batch check runner
//! used by the CLI.

pub mod bridge;
pub mod exact;
pub mod gen;
pub mod graph;
pub mod numeric;
pub mod partition;
pub mod rng;
pub mod suite;
pub mod treecode;
pub mod unfold;
pub mod wl;

pub use graph::{ExactGraph, Graph, GraphError, NodeId, NumericGraph, QuantizerConfig};
pub use partition::Partition;
pub use treecode::TreeCode;
pub use unfold::UnfoldingTree;
