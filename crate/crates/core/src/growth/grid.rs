//! Uniform spatial hash over the floating embedding.
//!
//! Buckets only need to over-approximate neighborhoods; every decision made
//! on the returned candidates is exact.

use std::collections::HashMap;

use crate::exact::CycPoint;

/// Hash grid from cell to ids, cell size 2 (twice the circumradius).
#[derive(Clone, Debug, Default)]
pub struct SpatialHash {
    cells: HashMap<(i64, i64), Vec<u32>>,
}

pub const CELL_SIZE: f64 = 2.0;
/// Query radius: tiles whose centers are 2 apart or more cannot overlap.
pub const REACH: f64 = 2.0;
const SLACK: f64 = 1e-9;

fn cell_of(x: f64, y: f64) -> (i64, i64) {
    (
        (x / CELL_SIZE).floor() as i64,
        (y / CELL_SIZE).floor() as i64,
    )
}

impl SpatialHash {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, at: &CycPoint, id: u32) {
        let (x, y) = at.to_f64();
        self.cells.entry(cell_of(x, y)).or_default().push(id);
    }

    /// Removes one occurrence of `id` registered at `at`.
    pub fn remove(&mut self, at: &CycPoint, id: u32) -> bool {
        let (x, y) = at.to_f64();
        let key = cell_of(x, y);
        let Some(bucket) = self.cells.get_mut(&key) else {
            return false;
        };
        match bucket.iter().position(|&v| v == id) {
            Some(i) => {
                bucket.swap_remove(i);
                if bucket.is_empty() {
                    self.cells.remove(&key);
                }
                true
            }
            None => false,
        }
    }

    /// Appends every id whose cell intersects the square of half-width
    /// `radius` around `at`; a superset of the ids within `radius`.
    pub fn query(&self, at: &CycPoint, radius: f64, out: &mut Vec<u32>) {
        let (x, y) = at.to_f64();
        let r = radius + SLACK;
        let (x0, y0) = cell_of(x - r, y - r);
        let (x1, y1) = cell_of(x + r, y + r);
        for cx in x0..=x1 {
            for cy in y0..=y1 {
                if let Some(bucket) = self.cells.get(&(cx, cy)) {
                    out.extend_from_slice(bucket);
                }
            }
        }
    }

    pub fn len(&self) -> usize {
        self.cells.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}
