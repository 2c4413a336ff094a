//! Hole shapes: angle types, boundary words, canonical signatures and the
//! named catalog.
//!
//! A hole's boundary is read counterclockwise and its collinear graph edges
//! merged into geometric sides. Corners carry interior angles in 36° units;
//! a polygon with l corners has Σ a_i = 5(l − 2).

mod angles;
mod catalog;
mod shape;
mod word;

use std::collections::BTreeMap;

pub use angles::{canonical_angles, enumerate_angle_types, verify_angle_sum};
pub use catalog::{
    join_angles, Catalog, CatalogEntry, CatalogError, Pattern, Source, KNOWN_CYCLES, KNOWN_PATHS,
    KNOWN_ROTATIONS,
};
pub use shape::{
    angle_sequence, angles_of, canonicalize, hole_sides, rim, sides_to_string, step_word,
    step_word_of, HoleSignature, Rim, RimLink, Side,
};
pub use word::{canonical_cyclic, canonical_open, ParseStepError, Step, StepWord};

use crate::exact::QSqrt5;
use crate::graph::{analyze, Faces, GraphError, SubdivisionGraph};
use crate::growth::Structure;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HoleError {
    #[error("corner is not a multiple of 36°")]
    NonMultipleAngle,
    #[error("side of length {0} is not a whole number of tile sides")]
    NonUnitSide(QSqrt5),
    #[error("boundary has fewer than three sides")]
    Degenerate,
    #[error("boundary word does not close")]
    NotClosed,
}

/// Everything measured about one hole.
#[derive(Clone, Debug)]
pub struct HoleInfo {
    pub face: usize,
    pub sides: Vec<Side>,
    pub angles: Vec<u8>,
    pub signature: HoleSignature,
    /// `Err(NonUnitSide)` for holes with irrational side lengths.
    pub word: Result<StepWord, HoleError>,
    pub rim: Rim,
}

impl HoleInfo {
    pub fn angle_sum_ok(&self) -> bool {
        verify_angle_sum(&self.angles)
    }
}

/// Measures every hole face.
pub fn holes_of(
    structure: &Structure,
    graph: &SubdivisionGraph,
    faces: &Faces,
) -> Result<Vec<HoleInfo>, HoleError> {
    let mut out = Vec::new();
    for (i, face) in faces.faces.iter().enumerate() {
        if face.kind != crate::graph::FaceKind::Hole {
            continue;
        }
        let sides = hole_sides(graph, face)?;
        let angles = angles_of(&sides);
        out.push(HoleInfo {
            face: i,
            signature: HoleSignature::from_sides(&sides),
            word: step_word_of(&sides),
            rim: rim(graph, faces, structure, face),
            angles,
            sides,
        });
    }
    Ok(out)
}

#[derive(Debug, thiserror::Error)]
pub enum CensusError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Hole(#[from] HoleError),
}

/// Hole counts by catalog name, with the checks run along the way.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Census {
    pub histogram: BTreeMap<String, usize>,
    pub holes: usize,
    pub angle_sum_violations: usize,
    pub non_unit: usize,
    /// Triangular holes by canonical angle type.
    pub triangles: BTreeMap<Vec<u8>, usize>,
    /// Entries added to the catalog during this census.
    pub discovered: Vec<String>,
}

impl Census {
    pub fn merge(&mut self, other: Census) {
        for (k, v) in other.histogram {
            *self.histogram.entry(k).or_default() += v;
        }
        for (k, v) in other.triangles {
            *self.triangles.entry(k).or_default() += v;
        }
        self.holes += other.holes;
        self.angle_sum_violations += other.angle_sum_violations;
        self.non_unit += other.non_unit;
        self.discovered.extend(other.discovered);
    }

    /// CSV with header `name,source,count,l,angles`.
    pub fn to_csv(&self, catalog: &Catalog) -> String {
        let mut out = String::from("name,source,count,l,angles\n");
        for (name, count) in &self.histogram {
            let e = catalog.get(name);
            let source = match e.map(|e| e.source) {
                Some(Source::Known) => "known",
                _ => "discovered",
            };
            let angles = e.and_then(|e| e.angles.clone()).unwrap_or_default();
            out.push_str(&format!(
                "{},{source},{count},{},{}\n",
                csv_field(name),
                angles.len(),
                csv_field(&join_angles(&angles))
            ));
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Names and counts every hole of `structure`, growing `catalog` with any
/// new shapes.
pub fn census(structure: &Structure, catalog: &mut Catalog) -> Result<Census, CensusError> {
    let (graph, faces) = analyze(structure)?;
    census_of(structure, &graph, &faces, catalog)
}

pub fn census_of(
    structure: &Structure,
    graph: &SubdivisionGraph,
    faces: &Faces,
    catalog: &mut Catalog,
) -> Result<Census, CensusError> {
    let mut c = Census::default();
    for h in holes_of(structure, graph, faces)? {
        c.holes += 1;
        if !h.angle_sum_ok() {
            c.angle_sum_violations += 1;
        }
        if matches!(h.word, Err(HoleError::NonUnitSide(_))) {
            c.non_unit += 1;
        }
        if h.angles.len() == 3 {
            *c.triangles.entry(canonical_angles(&h.angles)).or_default() += 1;
        }
        let before = catalog.len();
        let name = catalog.classify(&h.signature, &h.rim).name.clone();
        if catalog.len() > before {
            c.discovered.push(name.clone());
        }
        *c.histogram.entry(name).or_default() += 1;
    }
    Ok(c)
}
