//! The planar graph of a structure.
//!
//! Vertices are all tile corners; a side that has another tile's corner in
//! its interior is split there. Faces are traced with the rotation system
//! (half-edges around each vertex ordered by direction class), which yields
//! one face per tile, one unbounded face, and the holes. Hole counts come
//! out two ways: by face classification and from V − E + n + H = 1.

mod contacts;
mod faces;
mod subdivision;

pub use contacts::{contacts, contacts_on_attach, ContactKind};
pub use faces::{
    edge_length, euler_holes, extract_faces, pentagon_area, perimeter, Face, FaceKind, Faces,
    Perimeter,
};
pub use subdivision::{build_subdivision, count_v_e, HalfEdgeId, SubdivisionGraph, VertexId};

use crate::exact::GeometryError;
use crate::growth::Structure;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("two graph edges leave a vertex in the same direction")]
    OverlappingEdges,
    #[error("face traversal revisited a half-edge")]
    BrokenRotation,
    #[error("face classification mismatch: {0}")]
    ClassificationMismatch(String),
}

/// Counts and lengths of one structure, holes computed both ways.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphSummary {
    pub n: usize,
    pub vertices: usize,
    pub edges: usize,
    pub holes_euler: i64,
    pub holes_faces: usize,
    pub perimeter: Perimeter,
}

impl GraphSummary {
    pub fn euler_consistent(&self) -> bool {
        self.holes_euler == self.holes_faces as i64
    }
}

/// Builds the graph and faces of `structure`.
pub fn analyze(structure: &Structure) -> Result<(SubdivisionGraph, Faces), GraphError> {
    let graph = build_subdivision(structure)?;
    let faces = extract_faces(&graph, structure)?;
    Ok((graph, faces))
}

pub fn summarize(structure: &Structure) -> Result<GraphSummary, GraphError> {
    let (graph, faces) = analyze(structure)?;
    Ok(summary_of(structure, &graph, &faces))
}

pub fn summary_of(structure: &Structure, graph: &SubdivisionGraph, faces: &Faces) -> GraphSummary {
    let (v, e) = count_v_e(graph);
    GraphSummary {
        n: structure.len(),
        vertices: v,
        edges: e,
        holes_euler: euler_holes(v, e, structure.len()),
        holes_faces: faces.hole_count(),
        perimeter: perimeter(graph, faces),
    }
}
