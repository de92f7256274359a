//! Exact dominated chromatic number, dom-stability and dom-bondage for small
//! graphs, together with the graph families and closed-form predictions they
//! are audited against.

pub mod audit;
pub mod budget;
pub mod dom;
pub mod error;
pub mod formulas;
pub mod generators;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod perturbation;

pub use budget::Budget;
pub use dom::{
    dom_chromatic, dom_chromatic_number, dom_chromatic_oracle, exists_k, verify, DomColoring,
};
pub use error::{Error, Result};
pub use generators::FamilySpec;
pub use graph::{Edge, Graph, VertexMap};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
