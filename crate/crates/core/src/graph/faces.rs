use crate::exact::{length_in_sides, QSqrt5};
use crate::growth::{Structure, TileId};

use super::subdivision::{HalfEdgeId, SubdivisionGraph};
use super::GraphError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FaceKind {
    PentagonInterior(TileId),
    Hole,
    Outer,
}

/// A face of the subdivision. The boundary is the cyclic walk keeping the
/// face on its left: counterclockwise for bounded faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub boundary: Vec<HalfEdgeId>,
    pub kind: FaceKind,
    /// Signed area divided by sin 36°.
    pub area: QSqrt5,
}

/// All faces plus the face on the left of each half-edge.
#[derive(Clone, Debug)]
pub struct Faces {
    pub faces: Vec<Face>,
    pub face_of: Vec<u32>,
    pub outer: usize,
}

impl Faces {
    pub fn holes(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(|f| f.kind == FaceKind::Hole)
    }

    pub fn hole_count(&self) -> usize {
        self.holes().count()
    }

    pub fn outer(&self) -> &Face {
        &self.faces[self.outer]
    }

    pub fn kind_left_of(&self, h: HalfEdgeId) -> FaceKind {
        self.faces[self.face_of[h as usize] as usize].kind
    }
}

/// Area of one tile divided by sin 36°: 5·cos 36° = 5(1 + √5)/4.
pub fn pentagon_area() -> QSqrt5 {
    QSqrt5::new(5, 5, 4)
}

fn walk_area(graph: &SubdivisionGraph, cycle: &[HalfEdgeId]) -> QSqrt5 {
    let (mut p, mut q) = (0i128, 0i128);
    for &h in cycle {
        let a = graph.vertex(graph.origin(h));
        let b = graph.vertex(graph.target(h));
        let (cp, cq) = a.conj().mul(&b).im2();
        p += cp as i128;
        q += cq as i128;
    }
    let narrow = |v: i128| i64::try_from(v).expect("face area overflow");
    QSqrt5::new(narrow(p), narrow(q), 4)
}

/// Traverses every half-edge once and classifies the resulting cycles.
pub fn extract_faces(graph: &SubdivisionGraph, structure: &Structure) -> Result<Faces, GraphError> {
    const UNSET: u32 = u32::MAX;
    let mut face_of = vec![UNSET; graph.half_edge_count()];
    let mut faces = Vec::new();
    for start in 0..graph.half_edge_count() as HalfEdgeId {
        if face_of[start as usize] != UNSET {
            continue;
        }
        let id = faces.len() as u32;
        let mut boundary = Vec::new();
        let mut h = start;
        loop {
            face_of[h as usize] = id;
            boundary.push(h);
            h = graph.next(h);
            if h == start {
                break;
            }
            if face_of[h as usize] != UNSET {
                return Err(GraphError::BrokenRotation);
            }
        }
        let area = walk_area(graph, &boundary);
        faces.push(Face {
            boundary,
            kind: FaceKind::Hole,
            area,
        });
    }

    let negative: Vec<usize> = (0..faces.len())
        .filter(|&i| faces[i].area.sign() < 0)
        .collect();
    if negative.len() != 1 {
        return Err(GraphError::ClassificationMismatch(format!(
            "expected one unbounded face, found {}",
            negative.len()
        )));
    }
    let outer = negative[0];
    faces[outer].kind = FaceKind::Outer;

    let a_pent = pentagon_area();
    for p in structure.pentagons() {
        let v0 = graph.vertex_id(&p.vertex(0)).ok_or_else(|| {
            GraphError::ClassificationMismatch(format!("tile {} vertex missing", p.id))
        })?;
        let class = crate::exact::direction_class(&(p.vertex(1) - p.vertex(0)))?;
        let h = graph.outgoing(v0, class).ok_or_else(|| {
            GraphError::ClassificationMismatch(format!("tile {} side 0 missing", p.id))
        })?;
        let f = face_of[h as usize] as usize;
        let face = &mut faces[f];
        if face.kind != FaceKind::Hole || face.area != a_pent {
            return Err(GraphError::ClassificationMismatch(format!(
                "tile {} does not bound its own face",
                p.id
            )));
        }
        face.kind = FaceKind::PentagonInterior(p.id);
    }

    Ok(Faces {
        faces,
        face_of,
        outer,
    })
}

/// H from V − E + n + H = 1.
pub fn euler_holes(v: usize, e: usize, n: usize) -> i64 {
    1 - v as i64 + e as i64 - n as i64
}

/// Outer boundary length and total length of edges touching a
/// non-tile face, both in units of the tile side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Perimeter {
    pub outer: QSqrt5,
    pub total_boundary: QSqrt5,
}

pub fn edge_length(graph: &SubdivisionGraph, edge: usize) -> QSqrt5 {
    let h = (2 * edge) as HalfEdgeId;
    length_in_sides(&graph.vector(h), graph.class(h))
}

pub fn perimeter(graph: &SubdivisionGraph, faces: &Faces) -> Perimeter {
    let mut outer = QSqrt5::ZERO;
    let mut total = QSqrt5::ZERO;
    for e in 0..graph.edge_count() {
        let h = (2 * e) as HalfEdgeId;
        let left = faces.kind_left_of(h);
        let right = faces.kind_left_of(h ^ 1);
        let is_tile = |k: FaceKind| matches!(k, FaceKind::PentagonInterior(_));
        if is_tile(left) && is_tile(right) {
            continue;
        }
        let len = edge_length(graph, e);
        total += len;
        if left == FaceKind::Outer || right == FaceKind::Outer {
            outer += len;
        }
    }
    Perimeter {
        outer,
        total_boundary: total,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_subdivision;
    use crate::growth::GrowthState;

    #[test]
    fn seed_faces() {
        let s = GrowthState::seed_structure(0);
        let g = build_subdivision(s.structure()).unwrap();
        let f = extract_faces(&g, s.structure()).unwrap();
        assert_eq!(f.faces.len(), 2);
        assert_eq!(f.hole_count(), 0);
        assert_eq!(f.outer().area, -pentagon_area());
        let p = perimeter(&g, &f);
        assert_eq!(p.outer, QSqrt5::from_int(5));
        assert_eq!(p.total_boundary, QSqrt5::from_int(5));
        assert_eq!(euler_holes(5, 5, 1), 0);
    }

    #[test]
    fn two_glued() {
        let mut s = GrowthState::seed_structure(0);
        s.attach_at(0, 3).unwrap();
        let g = build_subdivision(s.structure()).unwrap();
        let f = extract_faces(&g, s.structure()).unwrap();
        assert_eq!(f.hole_count(), 0);
        assert_eq!(euler_holes(8, 9, 2), 0);
        assert_eq!(perimeter(&g, &f).outer, QSqrt5::from_int(8));
    }

    #[test]
    fn pentagon_area_matches_float() {
        let area = 2.5 * (72f64).to_radians().sin();
        let got = pentagon_area().to_f64() * (36f64).to_radians().sin();
        assert!((area - got).abs() < 1e-12);
    }
}
