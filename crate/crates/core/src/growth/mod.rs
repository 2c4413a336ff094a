//! The stochastic growth process.
//!
//! A structure starts as one Up tile at the origin. Each step picks a free
//! edge uniformly at random from the ledger, glues the ghost tile there, and
//! updates the ledger: the consumed edge leaves, nearby entries the new tile
//! blocks are evicted, and the new tile's other four sides enter if free.

mod grid;
mod pentagon;
mod rng;
mod state;

pub use grid::{SpatialHash, CELL_SIZE, REACH};
pub use pentagon::{ghost_placement, Pentagon, Structure, TileId};
pub use rng::StableRng;
pub use state::{grow, FreeEdge, GrowthState};

use crate::exact::GeometryError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GrowthError {
    #[error("side {side} of tile {owner} is not a free edge")]
    NotFree { owner: TileId, side: u8 },
    #[error("no tile with id {0}")]
    UnknownTile(TileId),
    #[error("a structure needs at least one tile")]
    EmptyRequest,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}
