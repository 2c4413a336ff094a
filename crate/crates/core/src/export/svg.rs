//! Two-layer SVG for laser cutting: `cut` holds the outline of the union,
//! `engrave` the interior edges, stage-colored fills and the attachment
//! tree.

use std::fmt::Write as _;

use crate::exact::{side_length_sq, CycPoint};
use crate::graph::{analyze, FaceKind, Faces, GraphError, HalfEdgeId, SubdivisionGraph};
use crate::growth::Structure;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SvgOptions {
    /// Millimetres per tile side.
    pub scale_mm: f64,
    /// Put hole outlines in the cut layer instead of the engrave layer.
    pub holes_as_cut: bool,
    pub tree: bool,
    pub fills: bool,
    pub cut_stroke_mm: f64,
    pub engrave_stroke_mm: f64,
    pub margin_mm: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            scale_mm: 10.0,
            holes_as_cut: false,
            tree: true,
            fills: true,
            cut_stroke_mm: 0.1,
            engrave_stroke_mm: 0.1,
            margin_mm: 5.0,
        }
    }
}

type Pt = (f64, f64);

/// Geometry of the drawing in millimetres, y pointing down.
#[derive(Clone, Debug, PartialEq)]
pub struct SvgPlan {
    pub width_mm: f64,
    pub height_mm: f64,
    /// Closed outline of the union, one point per outer-boundary edge.
    pub outline: Vec<Pt>,
    /// Closed hole outlines.
    pub holes: Vec<Vec<Pt>>,
    /// Edges with a tile on both sides.
    pub interior_edges: Vec<[Pt; 2]>,
    /// Parent center to child center, in stage order.
    pub tree: Vec<[Pt; 2]>,
    /// Tile outlines with their hue in degrees; `None` for the seed.
    pub fills: Vec<(Option<f64>, [Pt; 5])>,
    pub options: SvgOptions,
}

impl SvgPlan {
    pub fn build(structure: &Structure, options: SvgOptions) -> Result<SvgPlan, GraphError> {
        let (graph, faces) = analyze(structure)?;
        Ok(Self::from_graph(structure, &graph, &faces, options))
    }

    pub fn from_graph(
        structure: &Structure,
        graph: &SubdivisionGraph,
        faces: &Faces,
        options: SvgOptions,
    ) -> SvgPlan {
        let k = options.scale_mm / side_length_sq().to_f64().sqrt();
        let (mut min_x, mut max_x, mut min_y, mut max_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for v in graph.vertices() {
            let (x, y) = v.to_f64();
            min_x = min_x.min(x);
            max_x = max_x.max(x);
            min_y = min_y.min(y);
            max_y = max_y.max(y);
        }
        let m = options.margin_mm;
        let map = |p: &CycPoint| -> Pt {
            let (x, y) = p.to_f64();
            ((x - min_x) * k + m, (max_y - y) * k + m)
        };
        let walk = |boundary: &[HalfEdgeId]| -> Vec<Pt> {
            boundary
                .iter()
                .map(|&h| map(&graph.vertex(graph.origin(h))))
                .collect()
        };
        let outline = walk(&faces.outer().boundary);
        let holes = faces.holes().map(|f| walk(&f.boundary)).collect();
        let is_tile = |k: FaceKind| matches!(k, FaceKind::PentagonInterior(_));
        let interior_edges = (0..graph.edge_count())
            .filter(|&e| {
                let h = (2 * e) as HalfEdgeId;
                is_tile(faces.kind_left_of(h)) && is_tile(faces.kind_left_of(h ^ 1))
            })
            .map(|e| {
                let (a, b) = graph.edges()[e];
                [map(&graph.vertex(a)), map(&graph.vertex(b))]
            })
            .collect();
        let tiles = structure.pentagons();
        let tree = if options.tree {
            tiles
                .iter()
                .filter_map(|p| p.parent.map(|q| [map(&tiles[q].center), map(&p.center)]))
                .collect()
        } else {
            Vec::new()
        };
        let n = tiles.len().max(1) as f64;
        let fills = if options.fills {
            tiles
                .iter()
                .map(|p| {
                    let hue = (p.stage > 0).then(|| 360.0 * p.stage as f64 / n);
                    (hue, p.vertices().map(|v| map(&v)))
                })
                .collect()
        } else {
            Vec::new()
        };
        SvgPlan {
            width_mm: (max_x - min_x) * k + 2.0 * m,
            height_mm: (max_y - min_y) * k + 2.0 * m,
            outline,
            holes,
            interior_edges,
            tree,
            fills,
            options,
        }
    }

    /// Length of every closed path in the cut layer, in millimetres.
    pub fn cut_length_mm(&self) -> f64 {
        let mut total = closed_length(&self.outline);
        if self.options.holes_as_cut {
            total += self.holes.iter().map(|h| closed_length(h)).sum::<f64>();
        }
        total
    }

    pub fn render(&self) -> String {
        let o = &self.options;
        let mut s = String::new();
        let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.9}mm" height="{h:.9}mm" viewBox="0 0 {w:.9} {h:.9}">"#,
            w = self.width_mm,
            h = self.height_mm
        );
        let _ = writeln!(
            s,
            r##"<g id="engrave" fill="none" stroke="#0000ff" stroke-width="{:.9}">"##,
            o.engrave_stroke_mm
        );
        for (hue, pts) in &self.fills {
            let fill = match hue {
                Some(h) => format!("hsl({h:.6},100%,50%)"),
                None => "#000000".to_string(),
            };
            let _ = writeln!(
                s,
                r#"<path fill="{fill}" stroke="none" d="{}"/>"#,
                path_data(pts)
            );
        }
        if !self.interior_edges.is_empty() {
            let mut d = String::new();
            for [a, b] in &self.interior_edges {
                let _ = write!(d, "M{:.9} {:.9}L{:.9} {:.9}", a.0, a.1, b.0, b.1);
            }
            let _ = writeln!(s, r#"<path id="interior-edges" d="{d}"/>"#);
        }
        if !o.holes_as_cut {
            for h in &self.holes {
                let _ = writeln!(s, r#"<path class="hole" d="{}"/>"#, path_data(h));
            }
        }
        if !self.tree.is_empty() {
            let mut d = String::new();
            for [a, b] in &self.tree {
                let _ = write!(d, "M{:.9} {:.9}L{:.9} {:.9}", a.0, a.1, b.0, b.1);
            }
            let _ = writeln!(s, r##"<path id="tree" stroke="#000000" d="{d}"/>"##);
        }
        let _ = writeln!(s, "</g>");
        let _ = writeln!(
            s,
            r##"<g id="cut" fill="none" stroke="#ff0000" stroke-width="{:.9}">"##,
            o.cut_stroke_mm
        );
        let _ = writeln!(
            s,
            r#"<path class="outline" d="{}"/>"#,
            path_data(&self.outline)
        );
        if o.holes_as_cut {
            for h in &self.holes {
                let _ = writeln!(s, r#"<path class="hole" d="{}"/>"#, path_data(h));
            }
        }
        let _ = writeln!(s, "</g>");
        let _ = writeln!(s, "</svg>");
        s
    }
}

fn closed_length(pts: &[Pt]) -> f64 {
    (0..pts.len())
        .map(|i| {
            let (a, b) = (pts[i], pts[(i + 1) % pts.len()]);
            (b.0 - a.0).hypot(b.1 - a.1)
        })
        .sum()
}

fn path_data(pts: &[Pt]) -> String {
    let mut d = String::with_capacity(pts.len() * 28);
    for (i, p) in pts.iter().enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        let _ = write!(d, "{cmd}{:.9} {:.9}", p.0, p.1);
    }
    d.push('Z');
    d
}

/// The SVG document for `structure`.
pub fn to_svg(structure: &Structure, options: SvgOptions) -> Result<String, GraphError> {
    Ok(SvgPlan::build(structure, options)?.render())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::growth::GrowthState;

    #[test]
    fn seed_outline_is_a_pentagon() {
        let s = GrowthState::seed_structure(0).into_structure();
        let plan = SvgPlan::build(&s, SvgOptions::default()).unwrap();
        assert_eq!(plan.outline.len(), 5);
        assert!(plan.tree.is_empty());
        assert!(plan.interior_edges.is_empty());
        assert!((plan.cut_length_mm() - 50.0).abs() < 1e-9);
        assert_eq!(plan.fills[0].0, None);
    }

    #[test]
    fn hue_follows_stage() {
        let mut g = GrowthState::seed_structure(0);
        g.attach_at(0, 0).unwrap();
        g.attach_at(0, 2).unwrap();
        g.attach_at(0, 4).unwrap();
        let plan = SvgPlan::build(g.structure(), SvgOptions::default()).unwrap();
        let hues: Vec<_> = plan.fills.iter().map(|f| f.0).collect();
        assert_eq!(hues, vec![None, Some(90.0), Some(180.0), Some(270.0)]);
        assert_eq!(plan.tree.len(), 3);
    }

    #[test]
    fn y_axis_points_down() {
        let s = GrowthState::seed_structure(0).into_structure();
        let plan = SvgPlan::build(&s, SvgOptions::default()).unwrap();
        // Vertex ζ (upper right) must have a smaller y than vertex ζ⁴.
        let top = plan.fills[0].1[1].1;
        let bottom = plan.fills[0].1[4].1;
        assert!(top < bottom);
    }
}
