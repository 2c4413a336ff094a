use crate::exact::{CycPoint, DirectionClass, Orientation, QSqrt5};
use crate::graph::{edge_length, Face, FaceKind, Faces, HalfEdgeId, SubdivisionGraph};
use crate::growth::{Structure, TileId};

use super::word::{canonical_cyclic, Step, StepWord};
use super::HoleError;

/// A maximal straight run of a hole boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Side {
    pub class: DirectionClass,
    /// Length in tile sides.
    pub length: QSqrt5,
}

/// Interior angle in 36° units at the corner between `a` and `b`, walking
/// counterclockwise around the region.
fn corner(a: DirectionClass, b: DirectionClass) -> u8 {
    ((a.index() as i32 + 5 - b.index() as i32).rem_euclid(10)) as u8
}

/// Geometric sides of a bounded face, counterclockwise, starting at a
/// corner. Collinear graph edges are merged.
pub fn hole_sides(graph: &SubdivisionGraph, face: &Face) -> Result<Vec<Side>, HoleError> {
    let mut runs: Vec<Side> = Vec::new();
    for &h in &face.boundary {
        let class = graph.class(h);
        let len = edge_length(graph, SubdivisionGraph::edge_of(h));
        match runs.last_mut() {
            Some(last) if last.class == class => last.length += len,
            _ => runs.push(Side { class, length: len }),
        }
    }
    if runs.len() > 1 && runs[0].class == runs[runs.len() - 1].class {
        let last = runs.pop().expect("nonempty");
        runs[0].length += last.length;
    }
    if runs.len() < 3 {
        return Err(HoleError::Degenerate);
    }
    for i in 0..runs.len() {
        let a = corner(runs[(i + runs.len() - 1) % runs.len()].class, runs[i].class);
        if a == 0 {
            return Err(HoleError::NonMultipleAngle);
        }
    }
    Ok(runs)
}

/// a_i for each corner, the corner before side i first.
pub fn angles_of(sides: &[Side]) -> Vec<u8> {
    let l = sides.len();
    (0..l)
        .map(|i| corner(sides[(i + l - 1) % l].class, sides[i].class))
        .collect()
}

/// Interior angles of a hole in 36° units, counterclockwise.
pub fn angle_sequence(graph: &SubdivisionGraph, face: &Face) -> Result<Vec<u8>, HoleError> {
    hole_sides(graph, face).map(|s| angles_of(&s))
}

/// The hole boundary as unit steps ±U_k, counterclockwise.
pub fn step_word(graph: &SubdivisionGraph, face: &Face) -> Result<StepWord, HoleError> {
    step_word_of(&hole_sides(graph, face)?)
}

pub fn step_word_of(sides: &[Side]) -> Result<StepWord, HoleError> {
    let mut steps = Vec::new();
    for s in sides {
        let count = s
            .length
            .as_integer()
            .filter(|&c| c > 0)
            .ok_or(HoleError::NonUnitSide(s.length))?;
        let step = Step::from_class(s.class);
        steps.extend(std::iter::repeat_n(step, count as usize));
    }
    let word = StepWord::new(steps);
    if !word.is_closed() {
        return Err(HoleError::NotClosed);
    }
    Ok(word)
}

/// Canonical key of a hole: interior angles, exact side lengths, and the
/// unit-step word when every side is a whole number of tile sides.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HoleSignature {
    pub l: usize,
    pub angles: Vec<u8>,
    pub side_lengths: Vec<QSqrt5>,
    pub sides: Vec<Side>,
    pub canonical_word: Option<StepWord>,
}

impl HoleSignature {
    pub fn from_sides(sides: &[Side]) -> HoleSignature {
        let items: Vec<(u8, QSqrt5)> = sides.iter().map(|s| (s.class.index(), s.length)).collect();
        let best = canonical_cyclic(&items);
        let sides: Vec<Side> = best
            .into_iter()
            .map(|(c, length)| Side {
                class: DirectionClass::new(c as i64),
                length,
            })
            .collect();
        // Reversal and mirror yield clockwise walks; angles are read on the
        // counterclockwise one, which is the same cycle backwards.
        let turning: i32 = (0..sides.len())
            .map(|i| {
                sides[(i + sides.len() - 1) % sides.len()]
                    .class
                    .turn_to(sides[i].class)
            })
            .sum();
        let angles = if turning > 0 {
            angles_of(&sides)
        } else {
            let back: Vec<Side> = sides.iter().rev().map(reversed_side).collect();
            // Corner i of the forward walk sits between sides i−1 and i,
            // which is corner l−i of the backward one.
            let mut a = angles_of(&back);
            a.reverse();
            a.rotate_right(1);
            a
        };
        let canonical_word = step_word_of(&sides).ok().map(|w| w.canonical_cycle());
        HoleSignature {
            l: sides.len(),
            angles,
            side_lengths: sides.iter().map(|s| s.length).collect(),
            sides,
            canonical_word,
        }
    }

    /// Exact side sequence as catalog tokens `±k@p,q,d`.
    pub fn sides_token(&self) -> String {
        sides_to_string(&self.sides)
    }
}

fn reversed_side(s: &Side) -> Side {
    Side {
        class: s.class.opposite(),
        length: s.length,
    }
}

pub fn sides_to_string(sides: &[Side]) -> String {
    sides
        .iter()
        .map(|s| {
            let step = Step::from_class(s.class);
            format!("{step}@{},{},{}", s.length.p(), s.length.q(), s.length.d())
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Canonical form of a closed unit-step word.
pub fn canonicalize(word: &StepWord) -> HoleSignature {
    let sides = merge_steps(word);
    let mut sig = HoleSignature::from_sides(&sides);
    sig.canonical_word = Some(word.canonical_cycle());
    sig
}

fn merge_steps(word: &StepWord) -> Vec<Side> {
    let mut runs: Vec<Side> = Vec::new();
    for s in &word.steps {
        match runs.last_mut() {
            Some(last) if last.class == s.class() => last.length += QSqrt5::ONE,
            _ => runs.push(Side {
                class: s.class(),
                length: QSqrt5::ONE,
            }),
        }
    }
    if runs.len() > 1 && runs[0].class == runs[runs.len() - 1].class {
        let last = runs.pop().expect("nonempty");
        runs[0].length += last.length;
    }
    runs
}

/// One link between consecutive tiles around a hole.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RimLink {
    /// The tiles share a full side; the step moves between their centers.
    Glued(Step),
    /// The tiles touch some other way.
    Break,
}

/// The tiles around a hole, counterclockwise, and how each touches the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rim {
    pub tiles: Vec<TileId>,
    pub links: Vec<RimLink>,
}

impl Rim {
    pub fn break_count(&self) -> usize {
        self.links.iter().filter(|l| **l == RimLink::Break).count()
    }

    /// The whole rim as a word, if every link is glued.
    pub fn closed_word(&self) -> Option<StepWord> {
        self.links
            .iter()
            .map(|l| match l {
                RimLink::Glued(s) => Some(*s),
                RimLink::Break => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(StepWord::new)
    }

    /// The glued path starting after the only break, if there is exactly one.
    pub fn open_word(&self) -> Option<StepWord> {
        if self.break_count() != 1 {
            return None;
        }
        let at = self.links.iter().position(|l| *l == RimLink::Break)?;
        let n = self.links.len();
        let steps = (1..n)
            .map(|i| match self.links[(at + i) % n] {
                RimLink::Glued(s) => s,
                RimLink::Break => unreachable!(),
            })
            .collect();
        Some(StepWord::new(steps))
    }
}

/// Walks the tiles around a hole, counterclockwise: the tile across each
/// boundary edge, and at each corner every tile in the fan between the
/// two boundary edges. Tiles meeting the hole only at a corner are
/// included. A fan that opens onto another hole or the outside counts as a
/// break.
pub fn rim(graph: &SubdivisionGraph, faces: &Faces, structure: &Structure, face: &Face) -> Rim {
    // `None` marks a non-tile face inside a fan.
    let mut seq: Vec<Option<TileId>> = Vec::new();
    let mut push = |x: Option<TileId>| {
        if seq.last() != Some(&x) {
            seq.push(x);
        }
    };
    for &h in &face.boundary {
        let out = graph.next(h);
        let mut e: HalfEdgeId = SubdivisionGraph::twin(h);
        while e != out {
            match faces.kind_left_of(e) {
                FaceKind::PentagonInterior(id) => push(Some(id)),
                _ => push(None),
            }
            e = graph.ccw_neighbor(e);
        }
    }
    while seq.len() > 1 && seq.first() == seq.last() {
        seq.pop();
    }
    let p = structure.pentagons();
    let mut tiles = Vec::new();
    let mut links = Vec::new();
    let n = seq.len();
    for i in 0..n {
        let Some(a) = seq[i] else { continue };
        tiles.push(a);
        links.push(match seq[(i + 1) % n] {
            Some(b) => {
                let (a, b) = (&p[a], &p[b]);
                glued_step(a.center, a.orientation, b.center, b.orientation)
            }
            None => RimLink::Break,
        });
    }
    Rim { tiles, links }
}

fn glued_step(a: CycPoint, oa: Orientation, b: CycPoint, ob: Orientation) -> RimLink {
    if oa == ob {
        return RimLink::Break;
    }
    let d = b - a;
    for k in 0..5u8 {
        let s = match oa {
            Orientation::Up => Step::plus(k),
            Orientation::Down => Step::minus(k),
        };
        if s.center_vector() == d {
            return RimLink::Glued(s);
        }
    }
    RimLink::Break
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corner_of_left_turn() {
        // Turning left by 72° leaves an interior angle of 108°.
        assert_eq!(corner(DirectionClass::new(0), DirectionClass::new(2)), 3);
        assert_eq!(corner(DirectionClass::new(0), DirectionClass::new(4)), 1);
        assert_eq!(corner(DirectionClass::new(0), DirectionClass::new(8)), 7);
    }

    #[test]
    fn seed_outline_as_a_region() {
        // The seed tile walked counterclockwise: five 108° corners.
        let word: StepWord = "+0 +1 +2 +3 +4".parse().unwrap();
        assert!(word.is_closed());
        let sig = canonicalize(&word);
        assert_eq!(sig.angles, vec![3; 5]);
        assert_eq!(sig.l, 5);
    }

    #[test]
    fn golden_triangle_signature() {
        let long = QSqrt5::phi() + QSqrt5::ONE;
        let side = |c, length| Side {
            class: DirectionClass::new(c),
            length,
        };
        let tri = vec![side(0, long), side(3, QSqrt5::ONE), side(6, long)];
        let a = HoleSignature::from_sides(&tri);
        assert_eq!(super::super::canonical_angles(&a.angles), vec![1, 2, 2]);
        assert!(a.canonical_word.is_none());
        let back: Vec<Side> = tri.iter().rev().map(reversed_side).collect();
        assert_eq!(HoleSignature::from_sides(&back), a);
        let mirrored: Vec<Side> = tri
            .iter()
            .map(|s| side(10 - s.class.index() as i64, s.length))
            .rev()
            .collect();
        assert_eq!(HoleSignature::from_sides(&mirrored).angles, a.angles);
    }
}
