//! Arrangements of pairwise intersecting pseudocircles as combinatorial maps.
//!
//! The crate builds the classical extremal families (digon-maximal,
//! touching-maximal with triangle-free touching graphs, triangle-minimal),
//! transforms them (digon contraction, touching relaxation, blossoming,
//! circle replacement) and checks structural properties such as cell counts,
//! cylindricality and touching-graph planarity.

pub mod analysis;
pub mod arrangement;
pub mod circles;
pub mod constructions;
pub mod enumeration;
mod error;
pub mod format;
pub mod planarity;
pub mod render;
mod surgery;
pub mod wiring;

pub use arrangement::{
    Arrangement, CellStats, CircleId, DartId, Face, FaceId, FaceIndex, SideBits, SideVector, ValidationReport,
    VertexId, VertexKind, Violation, WalkEvent,
};
pub use error::{Error, Result};
pub use wiring::{Event, EventKind, Topology, Wiring, WiringViolation};
