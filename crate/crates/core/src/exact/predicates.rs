//! Sign-exact geometric predicates over the XY embedding of Z[ζ].
//!
//! All predicates reduce to the sign of an element `p + q√5`. Products of
//! two points are formed in Z[ζ] (`conj(u)·v`), whose real part gives the
//! dot product and whose imaginary part, divided by the positive constant
//! sin 36°, gives the cross product.

use std::fmt;

use super::cyclotomic::CycPoint;
use super::qsqrt5::{sign_parts, QSqrt5};
use super::GeometryError;

/// The two poses a tile can take. Up has vertices `c + ζ^j`, Down has
/// vertices `c − ζ^j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Up,
    Down,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Up => Orientation::Down,
            Orientation::Down => Orientation::Up,
        }
    }

    /// +1 for Up, −1 for Down.
    pub fn sign(self) -> i64 {
        match self {
            Orientation::Up => 1,
            Orientation::Down => -1,
        }
    }
}

/// Exact (X, Y) coordinates: X is the real part, Y is the imaginary part
/// divided by sin 36°.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct XYProjection {
    pub x: QSqrt5,
    pub y: QSqrt5,
}

impl std::ops::Add for XYProjection {
    type Output = XYProjection;
    fn add(self, rhs: XYProjection) -> XYProjection {
        XYProjection {
            x: self.x + rhs.x,
            y: self.y + rhs.y,
        }
    }
}

/// One of the ten directions at multiples of 36°. Class 0 is the direction
/// of the seed tile's edge from ζ⁰ to ζ¹; class k is class 0 turned
/// counterclockwise by 36°·k.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectionClass(u8);

impl DirectionClass {
    pub fn new(k: i64) -> Self {
        DirectionClass(k.rem_euclid(10) as u8)
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn opposite(self) -> Self {
        DirectionClass((self.0 + 5) % 10)
    }

    /// Counterclockwise turn from `self` to `other` in 36° units, in −5..=4.
    pub fn turn_to(self, other: DirectionClass) -> i32 {
        (other.0 as i32 - self.0 as i32 + 5).rem_euclid(10) - 5
    }

    /// A reference vector of this direction with the length of a tile side.
    pub fn reference(self) -> CycPoint {
        REFERENCES[self.0 as usize]
    }
}

impl fmt::Debug for DirectionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D{}", self.0)
    }
}

/// r_k = (−ζ³)^k (ζ − 1); −ζ³ = e^{iπ/5} is the 36° rotation.
const REFERENCES: [CycPoint; 10] = [
    CycPoint::new(-1, 1, 0, 0),
    CycPoint::new(1, 1, 1, 2),
    CycPoint::new(0, -1, 1, 0),
    CycPoint::new(-2, -1, -1, -1),
    CycPoint::new(0, 0, -1, 1),
    CycPoint::new(1, -1, 0, 0),
    CycPoint::new(-1, -1, -1, -2),
    CycPoint::new(0, 1, -1, 0),
    CycPoint::new(2, 1, 1, 1),
    CycPoint::new(0, 0, 1, -1),
];

/// 4·(u · v) as `p + q√5`.
pub fn dot4(u: &CycPoint, v: &CycPoint) -> (i64, i64) {
    u.conj().mul(v).re4()
}

/// 2·(u × v)/sin 36° as `p + q√5`; same sign as the cross product.
pub fn cross2(u: &CycPoint, v: &CycPoint) -> (i64, i64) {
    u.conj().mul(v).im2()
}

pub fn sign(q: &QSqrt5) -> i32 {
    q.sign()
}

pub fn project(p: &CycPoint) -> XYProjection {
    XYProjection { x: p.x(), y: p.y() }
}

/// Sign of (b − a) × (c − a): +1 counterclockwise, 0 collinear.
pub fn orient(a: &CycPoint, b: &CycPoint, c: &CycPoint) -> i32 {
    let u = *b - *a;
    let v = *c - *a;
    let (p, q) = cross2(&u, &v);
    sign_parts(p, q)
}

pub fn direction_class(v: &CycPoint) -> Result<DirectionClass, GeometryError> {
    if v.is_zero() {
        return Err(GeometryError::NotAGridDirection(*v));
    }
    for (k, r) in REFERENCES.iter().enumerate() {
        let (cp, cq) = cross2(r, v);
        if cp == 0 && cq == 0 {
            let (dp, dq) = dot4(r, v);
            if sign_parts(dp, dq) > 0 {
                return Ok(DirectionClass(k as u8));
            }
        }
    }
    Err(GeometryError::NotAGridDirection(*v))
}

/// Length of `v` in units of the tile side, given that `v` points along
/// `class`. Exact because collinear ratios lie in Q(√5).
pub fn length_in_sides(v: &CycPoint, class: DirectionClass) -> QSqrt5 {
    let r = class.reference();
    let (np, nq) = dot4(v, &r);
    let (dp, dq) = dot4(&r, &r);
    QSqrt5::new(np, nq, 1)
        .checked_div(&QSqrt5::new(dp, dq, 1))
        .expect("reference vector has nonzero length")
}

/// Squared side length s² = (5 − √5)/2 with unit circumradius.
pub fn side_length_sq() -> QSqrt5 {
    QSqrt5::new(5, -1, 2)
}

/// True iff `p` lies in the open segment (a, b).
pub fn strictly_between(a: &CycPoint, b: &CycPoint, p: &CycPoint) -> bool {
    let ab = *b - *a;
    let ap = *p - *a;
    let (cp, cq) = cross2(&ab, &ap);
    if cp != 0 || cq != 0 {
        return false;
    }
    let (d1p, d1q) = dot4(&ap, &ab);
    if sign_parts(d1p, d1q) <= 0 {
        return false;
    }
    let bp = *p - *b;
    let ba = *a - *b;
    let (d2p, d2q) = dot4(&bp, &ba);
    sign_parts(d2p, d2q) > 0
}

// Separation thresholds along an apothem axis w_k, as 4·(p + q√5). Projected
// onto w_k (unnormalized), an Up tile spans [−|w|, cos36°·|w|] about its
// center and a Down tile spans [−cos36°·|w|, |w|], with |w| = 2 cos 36°.
const GAP_SAME: (i64, i64) = (5, 3); // (cos 36° + 1)·|w|·4
const GAP_UP_DOWN: (i64, i64) = (6, 2); // 2·cos 36°·|w|·4
const GAP_DOWN_UP: (i64, i64) = (4, 4); // 2·|w|·4

/// 4·Re(Δ·ζ^{−j}) for j = 0..4.
fn axis_components(delta: &CycPoint) -> [(i64, i64); 5] {
    let mut out = [(0, 0); 5];
    let mut z = *delta;
    for slot in out.iter_mut() {
        *slot = z.re4();
        z = z.rotate(-1);
    }
    out
}

/// Whether the open interiors of two unit-circumradius tiles intersect.
///
/// Separating-axis test over the five apothem lines, which Up and Down
/// tiles share. Projections touching with zero overlap count as disjoint.
pub fn interiors_overlap(c1: &CycPoint, o1: Orientation, c2: &CycPoint, o2: Orientation) -> bool {
    let delta = *c2 - *c1;
    let comps = axis_components(&delta);
    // With d = Δ·w_k, tile 2 is clear ahead iff d ≥ hi1 − lo2 and clear
    // behind iff −d ≥ hi2 − lo1.
    let (ahead, behind) = match (o1, o2) {
        (Orientation::Up, Orientation::Up) | (Orientation::Down, Orientation::Down) => {
            (GAP_SAME, GAP_SAME)
        }
        (Orientation::Up, Orientation::Down) => (GAP_UP_DOWN, GAP_DOWN_UP),
        (Orientation::Down, Orientation::Up) => (GAP_DOWN_UP, GAP_UP_DOWN),
    };
    for k in 0..5 {
        let (p0, q0) = comps[k];
        let (p1, q1) = comps[(k + 1) % 5];
        let (dp, dq) = (p0 + p1, q0 + q1);
        // tile 2 entirely ahead: d ≥ ahead
        if sign_parts(dp - ahead.0, dq - ahead.1) >= 0 {
            return false;
        }
        // tile 2 entirely behind: −d ≥ behind
        if sign_parts(-dp - behind.0, -dq - behind.1) >= 0 {
            return false;
        }
    }
    true
}

/// Outcome of checking the center-basis relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisReport {
    /// `labeling[i] = k` means u_{i+1} is w_k.
    pub labeling: [usize; 5],
    pub sum_is_zero: bool,
    /// u₃ = −u₁ + φu₂, u₄ = −φu₁ − φu₂, u₅ = φu₁ − u₂.
    pub relations: [bool; 3],
}

impl BasisReport {
    pub fn passed(&self) -> bool {
        self.sum_is_zero && self.relations.iter().all(|&r| r)
    }
}

fn relations_hold(u: &[XYProjection; 5]) -> [bool; 3] {
    let phi = QSqrt5::phi();
    let one = QSqrt5::ONE;
    let combo = |a: QSqrt5, b: QSqrt5| XYProjection {
        x: a * u[0].x + b * u[1].x,
        y: a * u[0].y + b * u[1].y,
    };
    [
        combo(-one, phi) == u[2],
        combo(-phi, -phi) == u[3],
        combo(phi, -one) == u[4],
    ]
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Checks the stated relations among the five gluing vectors for the
/// given candidate vectors, searching all bijective labelings.
pub fn verify_basis_relations_for(w: &[CycPoint; 5]) -> Result<BasisReport, GeometryError> {
    let sum = w.iter().fold(CycPoint::ZERO, |acc, v| acc + *v);
    let proj: Vec<XYProjection> = w.iter().map(project).collect();
    let mut perms = permutations(5);
    perms.sort();
    for perm in perms {
        let u = [
            proj[perm[0]],
            proj[perm[1]],
            proj[perm[2]],
            proj[perm[3]],
            proj[perm[4]],
        ];
        let relations = relations_hold(&u);
        if relations.iter().all(|&r| r) {
            return Ok(BasisReport {
                labeling: [perm[0], perm[1], perm[2], perm[3], perm[4]],
                sum_is_zero: sum.is_zero(),
                relations,
            });
        }
    }
    Err(GeometryError::NoLabelingFound)
}

/// Verifies u₃ = −u₁ + φu₂, u₄ = −φu₁ − φu₂, u₅ = φu₁ − u₂ and Σw_k = 0 for
/// the gluing vectors w_k = ζ^k + ζ^{k+1}.
pub fn verify_center_basis_relations() -> Result<BasisReport, GeometryError> {
    let w: [CycPoint; 5] = std::array::from_fn(|k| CycPoint::gluing_vector(k as i64));
    verify_basis_relations_for(&w)
}
