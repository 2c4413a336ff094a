//! Exact arithmetic for the pentagon model.
//!
//! Every vertex and center lives in the cyclotomic integers Z[ζ₅]
//! ([`CycPoint`]); every quantity needed for a predicate (projections,
//! dot and cross products, squared lengths, areas) lives in Q(√5)
//! ([`QSqrt5`]). No predicate touches floating point.

mod cyclotomic;
mod predicates;
mod qsqrt5;

pub use cyclotomic::CycPoint;
pub use predicates::{
    cross2, direction_class, dot4, interiors_overlap, length_in_sides, orient, project,
    side_length_sq, sign, strictly_between, verify_basis_relations_for,
    verify_center_basis_relations, BasisReport, DirectionClass, Orientation, XYProjection,
};
pub use qsqrt5::{sign_parts, QSqrt5};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("cyclotomic coefficient overflow")]
    Overflow,
    #[error("vector {0:?} is not parallel to any of the ten grid directions")]
    NotAGridDirection(CycPoint),
    #[error("no labeling of the gluing vectors satisfies the basis relations")]
    NoLabelingFound,
}
