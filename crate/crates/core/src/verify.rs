//! The invariant suite run on a saved structure.

use std::collections::BTreeSet;

use crate::exact::Orientation;
use crate::export::first_overlap;
use crate::graph::{analyze, summary_of};
use crate::growth::{ghost_placement, GrowthState, Structure};
use crate::holes::{holes_of, verify_angle_sum};

/// Largest structure the brute-force oracle is run on.
pub const DEEP_LIMIT: usize = 50;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, name: &'static str, result: Result<String, String>) {
        let (passed, detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.checks.push(Check {
            name,
            passed,
            detail,
        });
    }
}

/// Runs every check; `deep` adds the float subdivision oracle when the
/// structure has at most [`DEEP_LIMIT`] tiles.
pub fn verify_structure(s: &Structure, deep: bool) -> Report {
    let mut r = Report::default();
    r.push(
        "interior-disjoint",
        match first_overlap(s) {
            None => Ok(format!("{} tiles", s.len())),
            Some((a, b)) => Err(format!("tiles {a} and {b} overlap")),
        },
    );
    r.push("gluing-and-parity", check_tree(s));
    r.push("ledger-replay", check_replay(s));

    match analyze(s) {
        Err(e) => {
            r.push("direction-classes", Err(e.to_string()));
        }
        Ok((graph, faces)) => {
            r.push(
                "direction-classes",
                Ok(format!("{} edges", graph.edge_count())),
            );
            let sum = summary_of(s, &graph, &faces);
            r.push(
                "euler",
                if sum.euler_consistent() {
                    Ok(format!(
                        "V={} E={} n={} H={}",
                        sum.vertices, sum.edges, sum.n, sum.holes_faces
                    ))
                } else {
                    Err(format!(
                        "faces give H={}, V-E+n+H=1 gives H={}",
                        sum.holes_faces, sum.holes_euler
                    ))
                },
            );
            r.push(
                "angle-sum",
                match holes_of(s, &graph, &faces) {
                    Err(e) => Err(e.to_string()),
                    Ok(holes) => {
                        let bad = holes
                            .iter()
                            .filter(|h| !verify_angle_sum(&h.angles))
                            .count();
                        if bad == 0 {
                            Ok(format!("{} holes", holes.len()))
                        } else {
                            Err(format!(
                                "{bad} of {} holes violate the angle sum",
                                holes.len()
                            ))
                        }
                    }
                },
            );
            if deep {
                r.push(
                    "subdivision-oracle",
                    if s.len() > DEEP_LIMIT {
                        Ok(format!("skipped: n > {DEEP_LIMIT}"))
                    } else {
                        let (v, e) = float_oracle::count_v_e(s);
                        let (gv, ge) = (graph.vertex_count(), graph.edge_count());
                        if (v, e) == (gv, ge) {
                            Ok(format!("V={v} E={e}"))
                        } else {
                            Err(format!("oracle V={v} E={e}, exact V={gv} E={ge}"))
                        }
                    },
                );
            }
        }
    }
    r
}

fn check_tree(s: &Structure) -> Result<String, String> {
    let tiles = s.pentagons();
    let seed = tiles.first().ok_or("no tiles")?;
    if !seed.center.is_zero() || seed.orientation != Orientation::Up || seed.parent.is_some() {
        return Err("tile 0 is not the Up seed at the origin".into());
    }
    let depths = {
        let mut d = vec![0usize; tiles.len()];
        for p in &tiles[1..] {
            let (Some(q), Some(side)) = (p.parent, p.parent_side) else {
                return Err(format!("tile {} has no parent", p.id));
            };
            if q >= p.id {
                return Err(format!("tile {} has a later parent", p.id));
            }
            let parent = &tiles[q];
            let ghost = ghost_placement(&parent.center, parent.orientation, side)
                .map_err(|e| e.to_string())?;
            if ghost != (p.center, p.orientation) {
                return Err(format!(
                    "tile {} is not glued to side {side} of tile {q}",
                    p.id
                ));
            }
            d[p.id] = d[q] + 1;
        }
        d
    };
    for p in tiles {
        if depths[p.id].is_multiple_of(2) != (p.orientation == Orientation::Up) {
            return Err(format!("tile {} breaks depth parity", p.id));
        }
    }
    Ok("every tile glued to its parent, orientation = depth parity".into())
}

/// Replays the recorded attachments: each one must use a side the
/// free-edge ledger holds at that moment, and the final ledger must equal
/// a from-scratch rescan.
fn check_replay(s: &Structure) -> Result<String, String> {
    let mut g = GrowthState::seed_structure(s.seed);
    for p in &s.pentagons()[1..] {
        let (Some(q), Some(side)) = (p.parent, p.parent_side) else {
            return Err(format!("tile {} has no parent", p.id));
        };
        g.attach_at(q, side)
            .map_err(|e| format!("tile {}: {e}", p.id))?;
    }
    if g.pentagons() != s.pentagons() {
        return Err("replayed structure differs".into());
    }
    let rescan: BTreeSet<_> = g.rescan_free_sides().map_err(|e| e.to_string())?;
    if rescan != g.ledger_sides() {
        return Err("ledger differs from rescan".into());
    }
    Ok(format!("{} free edges", rescan.len()))
}

/// V and E by brute force in floating point, independent of the exact
/// predicates: all pairwise side intersections are collected, clustered,
/// and each side is cut at the clusters lying on it.
pub mod float_oracle {
    use std::collections::HashSet;

    use crate::growth::Structure;

    const TOL: f64 = 1e-9;

    type P = (f64, f64);

    fn sub(a: P, b: P) -> P {
        (a.0 - b.0, a.1 - b.1)
    }

    fn cross(a: P, b: P) -> f64 {
        a.0 * b.1 - a.1 * b.0
    }

    fn dot(a: P, b: P) -> f64 {
        a.0 * b.0 + a.1 * b.1
    }

    fn on_segment(p: P, a: P, b: P) -> Option<f64> {
        let ab = sub(b, a);
        let len2 = dot(ab, ab);
        let t = dot(sub(p, a), ab) / len2;
        let q = (a.0 + t * ab.0, a.1 + t * ab.1);
        let d = sub(p, q);
        (dot(d, d).sqrt() < TOL && (-TOL..=1.0 + TOL).contains(&t)).then_some(t)
    }

    fn intersections(a: P, b: P, c: P, d: P, out: &mut Vec<P>) {
        let r = sub(b, a);
        let s = sub(d, c);
        let den = cross(r, s);
        if den.abs() > TOL {
            let t = cross(sub(c, a), s) / den;
            let u = cross(sub(c, a), r) / den;
            if (-TOL..=1.0 + TOL).contains(&t) && (-TOL..=1.0 + TOL).contains(&u) {
                out.push((a.0 + t * r.0, a.1 + t * r.1));
            }
        } else {
            for (p, x, y) in [(a, c, d), (b, c, d), (c, a, b), (d, a, b)] {
                if on_segment(p, x, y).is_some() {
                    out.push(p);
                }
            }
        }
    }

    pub fn count_v_e(s: &Structure) -> (usize, usize) {
        let sides: Vec<(P, P)> = s
            .pentagons()
            .iter()
            .flat_map(|p| (0..5).map(move |k| p.side(k)))
            .map(|(a, b)| (a.to_f64(), b.to_f64()))
            .collect();
        let mut raw = Vec::new();
        for i in 0..sides.len() {
            raw.push(sides[i].0);
            raw.push(sides[i].1);
            for j in i + 1..sides.len() {
                intersections(sides[i].0, sides[i].1, sides[j].0, sides[j].1, &mut raw);
            }
        }
        let mut points: Vec<P> = Vec::new();
        for p in raw {
            if !points
                .iter()
                .any(|q| dot(sub(p, *q), sub(p, *q)).sqrt() < 1e3 * TOL)
            {
                points.push(p);
            }
        }
        let mut edges = HashSet::new();
        for &(a, b) in &sides {
            let mut on: Vec<(f64, usize)> = points
                .iter()
                .enumerate()
                .filter_map(|(i, &p)| on_segment(p, a, b).map(|t| (t, i)))
                .collect();
            on.sort_by(|x, y| x.0.total_cmp(&y.0));
            for w in on.windows(2) {
                let (u, v) = (w[0].1.min(w[1].1), w[0].1.max(w[1].1));
                edges.insert((u, v));
            }
        }
        (points.len(), edges.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::growth::grow;

    #[test]
    fn fresh_growth_passes_everything() {
        let s = grow(50, 12).unwrap().into_structure();
        let r = verify_structure(&s, true);
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.checks.len(), 7);
    }

    #[test]
    fn duplicate_tile_fails_overlap_and_replay() {
        let mut s = grow(10, 1).unwrap().into_structure();
        let mut dup = s.pentagons[5];
        dup.id = s.len();
        dup.stage = s.len();
        s.pentagons.push(dup);
        let r = verify_structure(&s, false);
        let failed: Vec<_> = r.failures().map(|c| c.name).collect();
        assert!(failed.contains(&"interior-disjoint"), "{failed:?}");
        assert!(failed.contains(&"ledger-replay"), "{failed:?}");
    }

    #[test]
    fn oracle_on_small_cases() {
        let s = GrowthState::seed_structure(0).into_structure();
        assert_eq!(float_oracle::count_v_e(&s), (5, 5));
        let mut g = GrowthState::seed_structure(0);
        g.attach_at(0, 1).unwrap();
        assert_eq!(float_oracle::count_v_e(g.structure()), (8, 9));
    }
}
