//! Packing vertex-disjoint k-edge trees and 2-edge paths into graphs of
//! bounded degree, with certificates against the guaranteed lower bounds.

pub mod class;
pub mod extremal;
pub mod format;
pub mod graph;
pub mod ktree;
pub mod lambda;
pub mod named;
pub mod oracle;
pub mod packing;
pub mod reduce;
pub mod structure;
pub mod traverse;

pub use class::{ClassReport, ClassSpec};
pub use graph::{Graph, GraphError, Mode, VertexId};
pub use packing::{BoundKind, Certificate, Packing, PackingError, Ratio, Tree};
