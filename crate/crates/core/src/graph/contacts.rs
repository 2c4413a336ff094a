//! The ways two tiles with disjoint interiors can touch.

use std::collections::BTreeSet;

use crate::exact::{cross2, dot4, sign_parts, strictly_between, CycPoint};
use crate::growth::{Pentagon, Structure, TileId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ContactKind {
    /// A full side in common.
    EdgeEdge,
    /// Collinear sides overlapping along part of their length.
    PartialEdge,
    /// A corner resting on the interior of the other tile's side.
    VertexEdge,
    /// A single shared corner.
    VertexVertex,
}

fn unordered(s: (CycPoint, CycPoint)) -> (CycPoint, CycPoint) {
    if s.0 <= s.1 {
        s
    } else {
        (s.1, s.0)
    }
}

fn collinear_overlap(a: (CycPoint, CycPoint), b: (CycPoint, CycPoint)) -> bool {
    let da = a.1 - a.0;
    let (p, q) = cross2(&da, &(b.1 - b.0));
    if p != 0 || q != 0 {
        return false;
    }
    let (p, q) = cross2(&da, &(b.0 - a.0));
    if p != 0 || q != 0 {
        return false;
    }
    // Positions along da, scaled; overlap iff max(lo) < min(hi).
    let t = |x: &CycPoint| dot4(&(*x - a.0), &da);
    let lt = |x: (i64, i64), y: (i64, i64)| sign_parts(y.0 - x.0, y.1 - x.1) > 0;
    let (a0, a1) = ((0, 0), t(&a.1));
    let (mut b0, mut b1) = (t(&b.0), t(&b.1));
    if lt(b1, b0) {
        std::mem::swap(&mut b0, &mut b1);
    }
    let lo = if lt(a0, b0) { b0 } else { a0 };
    let hi = if lt(a1, b1) { a1 } else { b1 };
    lt(lo, hi)
}

/// Every kind of contact between two tiles (empty if they do not touch).
pub fn contacts(a: &Pentagon, b: &Pentagon) -> BTreeSet<ContactKind> {
    let mut out = BTreeSet::new();
    let sides_a: Vec<_> = (0..5).map(|k| a.side(k)).collect();
    let sides_b: Vec<_> = (0..5).map(|k| b.side(k)).collect();
    let mut shared_side_vertices = BTreeSet::new();
    for sa in &sides_a {
        for sb in &sides_b {
            if unordered(*sa) == unordered(*sb) {
                out.insert(ContactKind::EdgeEdge);
                shared_side_vertices.insert(sa.0);
                shared_side_vertices.insert(sa.1);
            } else if collinear_overlap(*sa, *sb) {
                out.insert(ContactKind::PartialEdge);
            }
        }
    }
    let corner_on_side = |vs: &[CycPoint; 5], sides: &[(CycPoint, CycPoint)]| {
        for (j, v) in vs.iter().enumerate() {
            let prev = vs[(j + 4) % 5];
            let next = vs[(j + 1) % 5];
            for s in sides {
                if strictly_between(&s.0, &s.1, v) {
                    let along = |w: &CycPoint| {
                        let (p, q) = cross2(&(s.1 - s.0), &(*w - *v));
                        p == 0 && q == 0
                    };
                    if !along(&prev) && !along(&next) {
                        return true;
                    }
                }
            }
        }
        false
    };
    if corner_on_side(&a.vertices(), &sides_b) || corner_on_side(&b.vertices(), &sides_a) {
        out.insert(ContactKind::VertexEdge);
    }
    let vb = b.vertices();
    for v in a.vertices() {
        if vb.contains(&v) && !shared_side_vertices.contains(&v) {
            out.insert(ContactKind::VertexVertex);
        }
    }
    out
}

/// Contacts of tile `id` with every earlier tile, excluding the side it was
/// glued on.
pub fn contacts_on_attach(
    structure: &Structure,
    id: TileId,
) -> Vec<(TileId, BTreeSet<ContactKind>)> {
    let tiles = structure.pentagons();
    let new = &tiles[id];
    let mut out = Vec::new();
    for other in &tiles[..id] {
        let mut kinds = contacts(new, other);
        if Some(other.id) == new.parent {
            kinds.remove(&ContactKind::EdgeEdge);
        }
        if !kinds.is_empty() {
            out.push((other.id, kinds));
        }
    }
    out
}
