//! Graph generators, canonical forms and exhaustive sweeps.

mod canon;
mod labeled;
mod stream;
pub mod sweep;
mod trees;

pub use canon::{canonical_form, canonical_graph, CanonicalForm, MAX_CANON_ORDER};
pub use labeled::{graph_from_mask, labeled_graphs, mask_of, pair_count, MAX_LABELED_ORDER};
pub use stream::{stream_graph6, LineError, StreamedGraph};
pub use sweep::{run_sweep, run_sweep_graphs, run_sweep_stream, GraphSource, SweepConfig, SweepReport};
pub use trees::{labeled_trees, prufer_decode, tree_count, tree_from_index, MAX_TREE_ORDER, MIN_TREE_ORDER};
