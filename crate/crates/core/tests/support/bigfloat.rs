//! 256-bit float geometry, used as an oracle for the exact predicates.
//! Nothing here touches the crate's own arithmetic beyond reading
//! integer coordinates.

#![allow(dead_code)]

use astro_float::{BigFloat, RoundingMode};
use pentagrow_core::{CycPoint, Orientation};

pub const PREC: usize = 256;
const RM: RoundingMode = RoundingMode::ToEven;

pub type F = BigFloat;
pub type Pt = (F, F);

pub fn int(i: i64) -> F {
    BigFloat::from_i64(i, PREC)
}

pub fn add(a: &F, b: &F) -> F {
    a.add(b, PREC, RM)
}

pub fn sub(a: &F, b: &F) -> F {
    a.sub(b, PREC, RM)
}

pub fn mul(a: &F, b: &F) -> F {
    a.mul(b, PREC, RM)
}

pub fn div(a: &F, b: &F) -> F {
    a.div(b, PREC, RM)
}

pub fn sqrt(a: &F) -> F {
    a.sqrt(PREC, RM)
}

pub fn abs(a: &F) -> F {
    if a.is_negative() {
        a.neg()
    } else {
        a.clone()
    }
}

pub fn lt(a: &F, b: &F) -> bool {
    matches!(a.cmp(b), Some(c) if c < 0)
}

/// 10^-k.
pub fn tiny(k: i64) -> F {
    let mut x = int(1);
    let ten = int(10);
    for _ in 0..k {
        x = div(&x, &ten);
    }
    x
}

pub fn sign(a: &F) -> i32 {
    if a.is_zero() {
        0
    } else if a.is_negative() {
        -1
    } else {
        1
    }
}

pub fn sqrt5() -> F {
    sqrt(&int(5))
}

/// ζ^j for j = 0..3, from the closed forms of cos and sin of 72° and 144°.
fn zeta_table() -> [Pt; 4] {
    let s5 = sqrt5();
    let four = int(4);
    let c1 = div(&sub(&s5, &int(1)), &four);
    let c2 = div(&add(&s5, &int(1)), &four).neg();
    let s1 = div(&sqrt(&add(&int(10), &mul(&int(2), &s5))), &four);
    let s2 = div(&sqrt(&sub(&int(10), &mul(&int(2), &s5))), &four);
    [
        (int(1), int(0)),
        (c1, s1),
        (c2.clone(), s2.clone()),
        (c2, s2.neg()),
    ]
}

pub struct Plane {
    zeta: [Pt; 4],
}

impl Default for Plane {
    fn default() -> Self {
        Plane { zeta: zeta_table() }
    }
}

impl Plane {
    pub fn point(&self, c: &CycPoint) -> Pt {
        let mut x = int(0);
        let mut y = int(0);
        for (a, z) in c.coeffs().iter().zip(&self.zeta) {
            let a = int(*a);
            x = add(&x, &mul(&a, &z.0));
            y = add(&y, &mul(&a, &z.1));
        }
        (x, y)
    }

    /// Corners of a unit-circumradius tile, counterclockwise.
    pub fn pentagon(&self, c: &CycPoint, o: Orientation) -> Vec<Pt> {
        (0..5)
            .map(|j| {
                let z = CycPoint::zeta_pow(j);
                self.point(&match o {
                    Orientation::Up => *c + z,
                    Orientation::Down => *c - z,
                })
            })
            .collect()
    }
}

pub fn cross(o: &Pt, a: &Pt, b: &Pt) -> F {
    let ax = sub(&a.0, &o.0);
    let ay = sub(&a.1, &o.1);
    let bx = sub(&b.0, &o.0);
    let by = sub(&b.1, &o.1);
    sub(&mul(&ax, &by), &mul(&ay, &bx))
}

/// Area of `subject ∩ clip`, both convex and counterclockwise
/// (Sutherland–Hodgman).
pub fn intersection_area(subject: &[Pt], clip: &[Pt]) -> F {
    let mut poly: Vec<Pt> = subject.to_vec();
    for i in 0..clip.len() {
        let a = &clip[i];
        let b = &clip[(i + 1) % clip.len()];
        let input = std::mem::take(&mut poly);
        for j in 0..input.len() {
            let p = &input[j];
            let q = &input[(j + 1) % input.len()];
            let sp = cross(a, b, p);
            let sq = cross(a, b, q);
            let p_in = sign(&sp) >= 0;
            let q_in = sign(&sq) >= 0;
            if p_in {
                poly.push(p.clone());
            }
            if p_in != q_in {
                let t = div(&sp, &sub(&sp, &sq));
                poly.push((
                    add(&p.0, &mul(&t, &sub(&q.0, &p.0))),
                    add(&p.1, &mul(&t, &sub(&q.1, &p.1))),
                ));
            }
        }
        if poly.is_empty() {
            return int(0);
        }
    }
    let mut twice = int(0);
    for i in 0..poly.len() {
        let p = &poly[i];
        let q = &poly[(i + 1) % poly.len()];
        twice = add(&twice, &sub(&mul(&p.0, &q.1), &mul(&p.1, &q.0)));
    }
    div(&abs(&twice), &int(2))
}

/// Oracle verdict on two tiles: `Some(true)` for a clear overlap,
/// `Some(false)` for disjoint or touching, `None` when the overlap area is
/// too small to call.
pub fn overlap_verdict(
    plane: &Plane,
    a: (&CycPoint, Orientation),
    b: (&CycPoint, Orientation),
) -> Option<bool> {
    let pa = plane.pentagon(a.0, a.1);
    let pb = plane.pentagon(b.0, b.1);
    let area = intersection_area(&pa, &pb);
    if lt(&tiny(20), &area) {
        Some(true)
    } else if lt(&area, &tiny(60)) {
        Some(false)
    } else {
        None
    }
}

/// V and E of the planar graph of the tiles, by intersecting every pair
/// of sides and clustering points closer than `10^-tol_exp`.
pub fn subdivision_v_e(
    plane: &Plane,
    tiles: &[(CycPoint, Orientation)],
    tol_exp: i64,
) -> (usize, usize) {
    let tol = tiny(tol_exp);
    let sides: Vec<(Pt, Pt)> = tiles
        .iter()
        .flat_map(|(c, o)| {
            let p = plane.pentagon(c, *o);
            (0..5)
                .map(move |k| (p[k].clone(), p[(k + 1) % 5].clone()))
                .collect::<Vec<_>>()
        })
        .collect();
    let close =
        |a: &Pt, b: &Pt| lt(&abs(&sub(&a.0, &b.0)), &tol) && lt(&abs(&sub(&a.1, &b.1)), &tol);
    // Parameter of p along a–b if p lies on the closed segment.
    let on = |p: &Pt, a: &Pt, b: &Pt| -> Option<F> {
        if !lt(&abs(&cross(a, b, p)), &tol) {
            return None;
        }
        let dx = sub(&b.0, &a.0);
        let dy = sub(&b.1, &a.1);
        let t = div(
            &add(&mul(&sub(&p.0, &a.0), &dx), &mul(&sub(&p.1, &a.1), &dy)),
            &add(&mul(&dx, &dx), &mul(&dy, &dy)),
        );
        let lo = tol.neg();
        let hi = add(&int(1), &tol);
        (lt(&lo, &t) && lt(&t, &hi)).then_some(t)
    };
    let mut raw: Vec<Pt> = Vec::new();
    for i in 0..sides.len() {
        raw.push(sides[i].0.clone());
        for j in i + 1..sides.len() {
            let (a, b) = &sides[i];
            let (c, d) = &sides[j];
            let rx = sub(&b.0, &a.0);
            let ry = sub(&b.1, &a.1);
            let sx = sub(&d.0, &c.0);
            let sy = sub(&d.1, &c.1);
            let den = sub(&mul(&rx, &sy), &mul(&ry, &sx));
            if lt(&tol, &abs(&den)) {
                let acx = sub(&c.0, &a.0);
                let acy = sub(&c.1, &a.1);
                let t = div(&sub(&mul(&acx, &sy), &mul(&acy, &sx)), &den);
                let u = div(&sub(&mul(&acx, &ry), &mul(&acy, &rx)), &den);
                let lo = tol.neg();
                let hi = add(&int(1), &tol);
                if lt(&lo, &t) && lt(&t, &hi) && lt(&lo, &u) && lt(&u, &hi) {
                    raw.push((add(&a.0, &mul(&t, &rx)), add(&a.1, &mul(&t, &ry))));
                }
            }
        }
    }
    let mut points: Vec<Pt> = Vec::new();
    for p in raw {
        if !points.iter().any(|q| close(&p, q)) {
            points.push(p);
        }
    }
    let mut edges = std::collections::BTreeSet::new();
    for (a, b) in &sides {
        let mut hits: Vec<(F, usize)> = points
            .iter()
            .enumerate()
            .filter_map(|(i, p)| on(p, a, b).map(|t| (t, i)))
            .collect();
        hits.sort_by(|x, y| match x.0.cmp(&y.0) {
            Some(c) if c < 0 => std::cmp::Ordering::Less,
            Some(c) if c > 0 => std::cmp::Ordering::Greater,
            _ => std::cmp::Ordering::Equal,
        });
        for w in hits.windows(2) {
            edges.insert((w[0].1.min(w[1].1), w[0].1.max(w[1].1)));
        }
    }
    (points.len(), edges.len())
}

pub type Tile = (CycPoint, Orientation);

fn step(c: CycPoint, o: Orientation, side: i64) -> Tile {
    let w = CycPoint::gluing_vector(side);
    match o {
        Orientation::Up => (c + w, Orientation::Down),
        Orientation::Down => (c - w, Orientation::Up),
    }
}

/// A random pair of tiles: half the time the second is a short random
/// gluing walk away from the first (touching and overlapping cases), half
/// the time an arbitrary nearby lattice point with either pose.
pub fn random_pair(rng: &mut pentagrow_core::growth::StableRng) -> (Tile, Tile) {
    let pose = |bit: u64| {
        if bit & 1 == 0 {
            Orientation::Up
        } else {
            Orientation::Down
        }
    };
    let a = (CycPoint::ZERO, pose(rng.next_u64()));
    if rng.next_u64() & 1 == 0 {
        let mut b = a;
        for _ in 0..1 + rng.uniform_index(4) {
            b = step(b.0, b.1, rng.uniform_index(5) as i64);
        }
        (a, b)
    } else {
        let mut coef = || rng.uniform_index(5) as i64 - 2;
        let c = CycPoint::new(coef(), coef(), coef(), coef());
        (a, (c, pose(rng.next_u64())))
    }
}
