//! Rainbow saturation of complete graphs: verifiers, family membership,
//! explicit constructions and exhaustive isomorphism-reduced search.

pub mod bitset;
pub mod canon;
pub mod construct;
pub mod error;
pub mod family;
pub mod graph;
pub mod io;
pub mod rainbow;
pub mod report;
pub mod search;
pub mod subgraph;
pub mod verify;

pub use bitset::VertexSet;
pub use canon::{canonical_code, colored_canonical_code, CanonicalCode};
pub use error::{Error, Result};
pub use graph::{ColorId, Edge, EdgeColoredGraph, Graph};
pub use io::AnyGraph;
pub use rainbow::{
    clique_number, contains_rainbow_clique, list_rainbow_cliques, rainbow_clique_number,
    RainbowCliqueQuery,
};
pub use report::{ColorChoice, VerificationReport, Witness};
pub use subgraph::{contains_subgraph, PatternGraph};
