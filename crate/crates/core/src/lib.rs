//! Exact computation and verification of the inverse symmetric division deg
//! (ISDD) index and its bounds.
//!
//! The crate has four layers:
//!
//! * [`graph`], [`graph6`], [`edge_list`]: simple undirected graphs and their
//!   text formats.
//! * [`indices`]: ISDD, SDD, the Zagreb indices, the forgotten index and the
//!   geometric-arithmetic index.
//! * [`bounds`] and [`classify`]: every bound as a [`BoundReport`] and the
//!   graph families in which the bounds are tight.
//! * [`enumerate`]: labeled graph and tree generators, canonical forms and
//!   parallel verification sweeps.
//!
//! ```
//! use isdd_lab::{graph6::parse_graph6, indices::isdd, Rational};
//!
//! let k4 = parse_graph6("C~").unwrap();
//! assert_eq!(isdd(&k4), Rational::from_integer(3));
//! ```

pub mod bounds;
pub mod classify;
pub mod edge_list;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod indices;
pub mod rational;

pub use bounds::{evaluate_all, BoundId, BoundOutcome, BoundReport, Value};
pub use classify::{classify, GraphClassLabel};
pub use error::{Error, Result};
pub use graph::{Degree, Graph};
pub use indices::{index_vector, IndexVector};
pub use rational::Rational;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs-and-formats.md")]
    mod graphs_and_formats {}
    #[doc = include_str!("../../../book/src/indices.md")]
    mod indices {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/equality-families.md")]
    mod equality_families {}
    #[doc = include_str!("../../../book/src/sweeps.md")]
    mod sweeps {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
