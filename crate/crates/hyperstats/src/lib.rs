//! Statistics of stub-matched random hypergraphs with prescribed degree
//! sequences.
//!
//! A configuration-model hypergraph is built by uniformly matching vertex
//! stubs to hyperedge slots. This crate computes, for both undirected and
//! directed hypergraphs, the expected number of
//!
//! * degenerate hyperedges (a vertex repeated inside an edge),
//! * multi-hyperedge pairs (two edges equal as multisets),
//! * self-loops (tail equals head as multisets, directed only),
//! * weak self-loops (tail intersects head, directed only),
//!
//! exactly (arbitrary-precision rationals, module [`exact`]), asymptotically
//! for uniform edge sizes (module [`asymp`]), by Monte Carlo sampling
//! (module [`sampler`]) and by exhaustive brute-force matching enumeration
//! on tiny instances (module [`oracle`]).

pub mod asymp;
pub mod combin;
pub mod exact;
pub mod model;
pub mod oracle;
pub mod rational;
pub mod sampler;

pub use model::{
    DirectedDegreeSequence, DirectedHypergraph, Hypergraph, StatisticCounts,
    UndirectedDegreeSequence, ValidationError,
};
pub use rational::ExactValue;
