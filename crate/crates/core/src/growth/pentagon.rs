use crate::exact::{CycPoint, GeometryError, Orientation};

pub type TileId = usize;

/// One tile of the structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Pentagon {
    pub id: TileId,
    pub center: CycPoint,
    pub orientation: Orientation,
    /// Attachment order; the seed tile has stage 0.
    pub stage: usize,
    pub parent: Option<TileId>,
    pub parent_side: Option<u8>,
}

impl Pentagon {
    pub fn seed() -> Self {
        Pentagon {
            id: 0,
            center: CycPoint::ZERO,
            orientation: Orientation::Up,
            stage: 0,
            parent: None,
            parent_side: None,
        }
    }

    /// Vertex j: `c + ζ^j` (Up) or `c − ζ^j` (Down).
    pub fn vertex(&self, j: usize) -> CycPoint {
        let z = CycPoint::zeta_pow(j as i64);
        match self.orientation {
            Orientation::Up => self.center + z,
            Orientation::Down => self.center - z,
        }
    }

    pub fn vertices(&self) -> [CycPoint; 5] {
        std::array::from_fn(|j| self.vertex(j))
    }

    /// Endpoints of side k in counterclockwise order.
    pub fn side(&self, k: u8) -> (CycPoint, CycPoint) {
        let k = k as usize;
        (self.vertex(k % 5), self.vertex((k + 1) % 5))
    }

    pub fn ghost(&self, side: u8) -> Result<(CycPoint, Orientation), GeometryError> {
        ghost_placement(&self.center, self.orientation, side)
    }
}

/// Placement of the tile glued onto side `side` of a tile at `center`.
///
/// The glued tile is the point reflection of its parent through the
/// midpoint of the shared side: `c ± (ζ^side + ζ^{side+1})` with the
/// opposite orientation. It shares side `side` (same index) with its parent.
pub fn ghost_placement(
    center: &CycPoint,
    orientation: Orientation,
    side: u8,
) -> Result<(CycPoint, Orientation), GeometryError> {
    let w = CycPoint::gluing_vector(side as i64);
    let c = match orientation {
        Orientation::Up => center.checked_add(&w)?,
        Orientation::Down => center.checked_sub(&w)?,
    };
    Ok((c, orientation.flip()))
}

/// An immutable grown (or loaded) structure: the tiles in stage order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Structure {
    pub seed: u64,
    pub pentagons: Vec<Pentagon>,
}

impl Structure {
    pub fn len(&self) -> usize {
        self.pentagons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pentagons.is_empty()
    }

    pub fn pentagons(&self) -> &[Pentagon] {
        &self.pentagons
    }

    /// The first `n` tiles; equal to what growth from the same seed had
    /// after `n` tiles.
    pub fn prefix(&self, n: usize) -> Structure {
        Structure {
            seed: self.seed,
            pentagons: self.pentagons[..n.min(self.len())].to_vec(),
        }
    }

    /// Depth of each tile in the attachment tree.
    pub fn depths(&self) -> Vec<usize> {
        let mut depth = vec![0usize; self.len()];
        for p in &self.pentagons {
            if let Some(parent) = p.parent {
                depth[p.id] = depth[parent] + 1;
            }
        }
        depth
    }
}
