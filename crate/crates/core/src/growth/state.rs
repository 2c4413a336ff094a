use std::collections::BTreeSet;

use crate::exact::{interiors_overlap, CycPoint, Orientation};

use super::grid::{SpatialHash, REACH};
use super::pentagon::{Pentagon, Structure, TileId};
use super::rng::StableRng;
use super::GrowthError;

/// A side of some tile onto which a new tile can currently be glued.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FreeEdge {
    pub owner: TileId,
    pub side: u8,
    pub endpoints: (CycPoint, CycPoint),
    pub ghost_center: CycPoint,
    pub ghost_orientation: Orientation,
}

impl FreeEdge {
    fn key(&self) -> u32 {
        edge_key(self.owner, self.side)
    }

    /// Endpoints as an unordered pair.
    pub fn endpoint_key(&self) -> (CycPoint, CycPoint) {
        let (a, b) = self.endpoints;
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }
}

fn edge_key(owner: TileId, side: u8) -> u32 {
    (owner * 5 + side as usize) as u32
}

const ABSENT: u32 = u32::MAX;

/// The evolving simulation.
///
/// The ledger is an append-ordered array with swap-with-last removal. Its
/// order feeds the random choice, so the insertion and removal order in
/// [`GrowthState::attach`] is part of the reproducibility contract.
#[derive(Clone, Debug)]
pub struct GrowthState {
    structure: Structure,
    ledger: Vec<FreeEdge>,
    /// Position in `ledger` of edge `owner*5 + side`, or `ABSENT`.
    slots: Vec<u32>,
    tiles: SpatialHash,
    ghosts: SpatialHash,
    rng: StableRng,
    scratch: Vec<u32>,
}

impl GrowthState {
    /// One Up tile at the origin with its five sides free.
    pub fn seed_structure(seed: u64) -> Self {
        let mut state = GrowthState {
            structure: Structure {
                seed,
                pentagons: Vec::new(),
            },
            ledger: Vec::new(),
            slots: Vec::new(),
            tiles: SpatialHash::new(),
            ghosts: SpatialHash::new(),
            rng: StableRng::from_seed(seed),
            scratch: Vec::new(),
        };
        state.place(Pentagon::seed());
        for side in 0..5 {
            state
                .insert_if_free(0, side)
                .expect("seed ghosts are representable");
        }
        state
    }

    pub fn structure(&self) -> &Structure {
        &self.structure
    }

    pub fn into_structure(self) -> Structure {
        self.structure
    }

    pub fn pentagons(&self) -> &[Pentagon] {
        &self.structure.pentagons
    }

    pub fn len(&self) -> usize {
        self.structure.len()
    }

    pub fn is_empty(&self) -> bool {
        self.structure.is_empty()
    }

    pub fn seed(&self) -> u64 {
        self.structure.seed
    }

    pub fn free_edges(&self) -> &[FreeEdge] {
        &self.ledger
    }

    pub fn free_edge_count(&self) -> usize {
        self.ledger.len()
    }

    pub fn rng(&self) -> &StableRng {
        &self.rng
    }

    pub fn contains_free_edge(&self, owner: TileId, side: u8) -> bool {
        self.slots
            .get(edge_key(owner, side) as usize)
            .is_some_and(|&s| s != ABSENT)
    }

    /// Whether a tile glued onto `side` of `owner` would keep all interiors
    /// disjoint. Only tiles within center distance 2 of the ghost are
    /// examined.
    pub fn is_free(&self, owner: TileId, side: u8) -> Result<bool, GrowthError> {
        let tile = self
            .structure
            .pentagons
            .get(owner)
            .ok_or(GrowthError::UnknownTile(owner))?;
        let (gc, go) = tile.ghost(side)?;
        let mut near = Vec::new();
        self.tiles.query(&gc, REACH, &mut near);
        Ok(self.ghost_is_clear(&gc, go, &near))
    }

    fn ghost_is_clear(&self, center: &CycPoint, orientation: Orientation, near: &[u32]) -> bool {
        near.iter().all(|&id| {
            let p = &self.structure.pentagons[id as usize];
            !interiors_overlap(center, orientation, &p.center, p.orientation)
        })
    }

    /// Glues a tile onto a uniformly chosen free edge. Returns the new id.
    pub fn attach(&mut self) -> Result<TileId, GrowthError> {
        // The ledger never empties for this geometry; treat it as a bug.
        assert!(!self.ledger.is_empty(), "free-edge ledger is empty");
        let index = self.rng.uniform_index(self.ledger.len());
        self.attach_index(index)
    }

    /// Glues a tile onto a specific free edge, bypassing the random choice.
    pub fn attach_at(&mut self, owner: TileId, side: u8) -> Result<TileId, GrowthError> {
        let slot = self
            .slots
            .get(edge_key(owner, side) as usize)
            .copied()
            .unwrap_or(ABSENT);
        if slot == ABSENT {
            return Err(GrowthError::NotFree { owner, side });
        }
        self.attach_index(slot as usize)
    }

    fn attach_index(&mut self, index: usize) -> Result<TileId, GrowthError> {
        let edge = self.remove_at(index);
        let id = self.structure.len();
        let tile = Pentagon {
            id,
            center: edge.ghost_center,
            orientation: edge.ghost_orientation,
            stage: id,
            parent: Some(edge.owner),
            parent_side: Some(edge.side),
        };
        self.place(tile);

        // Evict ledger entries whose ghosts the new tile now blocks.
        let mut near = std::mem::take(&mut self.scratch);
        near.clear();
        self.ghosts.query(&tile.center, REACH, &mut near);
        for &key in &near {
            let slot = self.slots[key as usize];
            if slot == ABSENT {
                continue;
            }
            let e = self.ledger[slot as usize];
            if interiors_overlap(
                &e.ghost_center,
                e.ghost_orientation,
                &tile.center,
                tile.orientation,
            ) {
                self.remove_at(slot as usize);
            }
        }
        self.scratch = near;

        for side in 0..5u8 {
            if Some(side) != tile.parent_side {
                self.insert_if_free(id, side)?;
            }
        }
        Ok(id)
    }

    fn place(&mut self, tile: Pentagon) {
        self.tiles.insert(&tile.center, tile.id as u32);
        self.structure.pentagons.push(tile);
        self.slots.resize(self.structure.len() * 5, ABSENT);
    }

    fn insert_if_free(&mut self, owner: TileId, side: u8) -> Result<(), GrowthError> {
        let tile = self.structure.pentagons[owner];
        let (gc, go) = tile.ghost(side)?;
        let mut near = std::mem::take(&mut self.scratch);
        near.clear();
        self.tiles.query(&gc, REACH, &mut near);
        let clear = self.ghost_is_clear(&gc, go, &near);
        self.scratch = near;
        if !clear {
            return Ok(());
        }
        let edge = FreeEdge {
            owner,
            side,
            endpoints: tile.side(side),
            ghost_center: gc,
            ghost_orientation: go,
        };
        self.assert_no_duplicate(&edge);
        self.slots[edge.key() as usize] = self.ledger.len() as u32;
        self.ghosts.insert(&gc, edge.key());
        self.ledger.push(edge);
        Ok(())
    }

    // Two tiles sharing a full side block each other's ghost, so an endpoint
    // pair can never be listed twice.
    fn assert_no_duplicate(&mut self, edge: &FreeEdge) {
        let mut near = std::mem::take(&mut self.scratch);
        near.clear();
        self.ghosts.query(&edge.ghost_center, REACH, &mut near);
        let key = edge.endpoint_key();
        for &k in &near {
            let slot = self.slots[k as usize];
            if slot != ABSENT {
                assert!(
                    self.ledger[slot as usize].endpoint_key() != key,
                    "duplicate free edge {:?}",
                    key
                );
            }
        }
        self.scratch = near;
    }

    fn remove_at(&mut self, index: usize) -> FreeEdge {
        let edge = self.ledger.swap_remove(index);
        self.slots[edge.key() as usize] = ABSENT;
        if let Some(moved) = self.ledger.get(index) {
            self.slots[moved.key() as usize] = index as u32;
        }
        self.ghosts.remove(&edge.ghost_center, edge.key());
        edge
    }

    /// Recomputes the set of free `(owner, side)` pairs from scratch over
    /// every side of every tile, independent of the incremental ledger.
    pub fn rescan_free_sides(&self) -> Result<BTreeSet<(TileId, u8)>, GrowthError> {
        let mut out = BTreeSet::new();
        for p in &self.structure.pentagons {
            for side in 0..5 {
                if self.is_free(p.id, side)? {
                    out.insert((p.id, side));
                }
            }
        }
        Ok(out)
    }

    /// The ledger as a set of `(owner, side)` pairs.
    pub fn ledger_sides(&self) -> BTreeSet<(TileId, u8)> {
        self.ledger.iter().map(|e| (e.owner, e.side)).collect()
    }
}

/// `seed_structure` followed by `n − 1` attachments.
pub fn grow(n: usize, seed: u64) -> Result<GrowthState, GrowthError> {
    if n == 0 {
        return Err(GrowthError::EmptyRequest);
    }
    let mut state = GrowthState::seed_structure(seed);
    for _ in 1..n {
        state.attach()?;
    }
    Ok(state)
}
