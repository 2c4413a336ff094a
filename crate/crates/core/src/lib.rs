//! Random pentagon cell growth with exact arithmetic.
//!
//! Regular pentagons are glued, one at a time, onto a uniformly chosen free
//! edge of the growing structure. All geometry is exact: tile centers and
//! vertices are cyclotomic integers and every predicate is decided by sign
//! tests in Q(√5).
//!
//! - [`exact`]: cyclotomic points, Q(√5) scalars, predicates.
//! - [`growth`]: the growth process and its free-edge ledger.
//! - [`graph`]: planar subdivision, faces, holes via two routes, perimeter.
//! - [`holes`]: hole angles, boundary words, canonical forms, catalog.
//! - [`stats`]: seeded batch runs and limit estimates.
//! - [`export`]: structure files and layered SVG.
//! - [`verify`]: the invariant suite behind `pentagrow verify`.

pub mod exact;
pub mod export;
pub mod graph;
pub mod growth;
pub mod holes;
pub mod stats;
pub mod verify;

pub use exact::{CycPoint, DirectionClass, GeometryError, Orientation, QSqrt5};

pub use graph::{Face, FaceKind, SubdivisionGraph};
pub use growth::{FreeEdge, GrowthState, Pentagon, Structure};
