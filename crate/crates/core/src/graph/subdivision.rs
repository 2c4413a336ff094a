use std::collections::HashMap;

use crate::exact::{direction_class, dot4, strictly_between, CycPoint, DirectionClass, QSqrt5};
use crate::growth::{SpatialHash, Structure};

use super::GraphError;

pub type VertexId = u32;
/// Half-edge `2e` runs along edge `e` from its first to its second vertex;
/// `2e + 1` is its twin.
pub type HalfEdgeId = u32;

/// Planar subdivision induced by all tile sides, split at every vertex that
/// lies on another side.
#[derive(Clone, Debug)]
pub struct SubdivisionGraph {
    vertices: Vec<CycPoint>,
    edges: Vec<(VertexId, VertexId)>,
    /// Direction class of each half-edge.
    classes: Vec<DirectionClass>,
    /// Outgoing half-edges per vertex, counterclockwise by direction class.
    rotation: Vec<Vec<HalfEdgeId>>,
    /// Index of each half-edge within its origin's rotation list.
    rotation_pos: Vec<u32>,
    vertex_index: HashMap<CycPoint, VertexId>,
}

impl SubdivisionGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn half_edge_count(&self) -> usize {
        self.edges.len() * 2
    }

    pub fn vertices(&self) -> &[CycPoint] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn vertex(&self, v: VertexId) -> CycPoint {
        self.vertices[v as usize]
    }

    pub fn vertex_id(&self, p: &CycPoint) -> Option<VertexId> {
        self.vertex_index.get(p).copied()
    }

    pub fn origin(&self, h: HalfEdgeId) -> VertexId {
        let (a, b) = self.edges[(h / 2) as usize];
        if h & 1 == 0 {
            a
        } else {
            b
        }
    }

    pub fn target(&self, h: HalfEdgeId) -> VertexId {
        self.origin(h ^ 1)
    }

    pub fn twin(h: HalfEdgeId) -> HalfEdgeId {
        h ^ 1
    }

    pub fn edge_of(h: HalfEdgeId) -> usize {
        (h / 2) as usize
    }

    pub fn class(&self, h: HalfEdgeId) -> DirectionClass {
        self.classes[h as usize]
    }

    /// Displacement vector of a half-edge.
    pub fn vector(&self, h: HalfEdgeId) -> CycPoint {
        self.vertex(self.target(h)) - self.vertex(self.origin(h))
    }

    pub fn rotation(&self, v: VertexId) -> &[HalfEdgeId] {
        &self.rotation[v as usize]
    }

    /// The half-edge leaving `v` in direction `class`, if any.
    pub fn outgoing(&self, v: VertexId, class: DirectionClass) -> Option<HalfEdgeId> {
        self.rotation[v as usize]
            .iter()
            .copied()
            .find(|&h| self.classes[h as usize] == class)
    }

    /// Successor of `h` along the face on its left: the half-edge leaving
    /// the target of `h` next clockwise from the twin of `h`.
    pub fn next(&self, h: HalfEdgeId) -> HalfEdgeId {
        let t = h ^ 1;
        let v = self.origin(t) as usize;
        let rot = &self.rotation[v];
        let i = self.rotation_pos[t as usize] as usize;
        rot[(i + rot.len() - 1) % rot.len()]
    }

    /// Counterclockwise neighbor of `h` around its origin.
    pub fn ccw_neighbor(&self, h: HalfEdgeId) -> HalfEdgeId {
        let v = self.origin(h) as usize;
        let rot = &self.rotation[v];
        let i = self.rotation_pos[h as usize] as usize;
        rot[(i + 1) % rot.len()]
    }
}

/// Builds the subdivision of all tile sides.
pub fn build_subdivision(structure: &Structure) -> Result<SubdivisionGraph, GraphError> {
    let tiles = structure.pentagons();
    let mut vertices: Vec<CycPoint> = Vec::with_capacity(tiles.len() * 3);
    let mut vertex_index: HashMap<CycPoint, VertexId> = HashMap::with_capacity(tiles.len() * 3);
    let mut grid = SpatialHash::new();
    for p in tiles {
        for v in p.vertices() {
            vertex_index.entry(v).or_insert_with(|| {
                let id = vertices.len() as VertexId;
                vertices.push(v);
                grid.insert(&v, id);
                id
            });
        }
    }

    let mut edge_index: HashMap<(VertexId, VertexId), u32> =
        HashMap::with_capacity(tiles.len() * 5);
    let mut edges: Vec<(VertexId, VertexId)> = Vec::with_capacity(tiles.len() * 5);
    let mut near = Vec::new();
    let mut on_side: Vec<(VertexId, (i64, i64))> = Vec::new();
    for p in tiles {
        for k in 0..5u8 {
            let (a, b) = p.side(k);
            let ia = vertex_index[&a];
            let ib = vertex_index[&b];
            near.clear();
            // Side length is < 1.2; every point of the side is within it of `a`.
            grid.query(&a, 1.2, &mut near);
            on_side.clear();
            let ab = b - a;
            for &v in &near {
                let pv = vertices[v as usize];
                if v != ia && v != ib && strictly_between(&a, &b, &pv) {
                    on_side.push((v, dot4(&(pv - a), &ab)));
                }
            }
            on_side.sort_by(|x, y| {
                QSqrt5::new(x.1 .0, x.1 .1, 1).cmp(&QSqrt5::new(y.1 .0, y.1 .1, 1))
            });
            let chain = std::iter::once(ia)
                .chain(on_side.iter().map(|&(v, _)| v))
                .chain(std::iter::once(ib));
            let mut prev = None;
            for v in chain {
                if let Some(u) = prev {
                    let key = if u < v { (u, v) } else { (v, u) };
                    edge_index.entry(key).or_insert_with(|| {
                        edges.push(key);
                        (edges.len() - 1) as u32
                    });
                }
                prev = Some(v);
            }
        }
    }

    let mut classes = Vec::with_capacity(edges.len() * 2);
    for &(a, b) in &edges {
        let d = vertices[b as usize] - vertices[a as usize];
        let c = direction_class(&d)?;
        classes.push(c);
        classes.push(c.opposite());
    }

    let mut rotation: Vec<Vec<HalfEdgeId>> = vec![Vec::new(); vertices.len()];
    for (e, &(a, b)) in edges.iter().enumerate() {
        rotation[a as usize].push(2 * e as HalfEdgeId);
        rotation[b as usize].push(2 * e as HalfEdgeId + 1);
    }
    let mut rotation_pos = vec![0u32; edges.len() * 2];
    for list in rotation.iter_mut() {
        list.sort_by_key(|&h| classes[h as usize]);
        if list
            .windows(2)
            .any(|w| classes[w[0] as usize] == classes[w[1] as usize])
        {
            return Err(GraphError::OverlappingEdges);
        }
        for (i, &h) in list.iter().enumerate() {
            rotation_pos[h as usize] = i as u32;
        }
    }

    Ok(SubdivisionGraph {
        vertices,
        edges,
        classes,
        rotation,
        rotation_pos,
        vertex_index,
    })
}

/// Vertex and edge counts of the subdivision.
pub fn count_v_e(graph: &SubdivisionGraph) -> (usize, usize) {
    (graph.vertex_count(), graph.edge_count())
}
