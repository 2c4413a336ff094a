//! Points of the plane as cyclotomic integers in Z[ζ], ζ = e^{2πi/5}.
//!
//! Coordinates are taken over the basis (1, ζ, ζ², ζ³); powers ζ⁴ are
//! reduced with ζ⁴ = −1 − ζ − ζ² − ζ³. The basis is a Z-basis of Z[ζ], so
//! the representation is unique and points can be hashed and compared
//! structurally.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::qsqrt5::QSqrt5;
use super::GeometryError;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CycPoint(pub [i64; 4]);

/// 4·cos(72°·j) as `p + q√5`, for j = 0..4.
const RE4: [(i64, i64); 5] = [(4, 0), (-1, 1), (-1, -1), (-1, -1), (-1, 1)];

impl CycPoint {
    pub const ZERO: CycPoint = CycPoint([0; 4]);
    pub const ONE: CycPoint = CycPoint([1, 0, 0, 0]);

    pub const fn new(a0: i64, a1: i64, a2: i64, a3: i64) -> Self {
        CycPoint([a0, a1, a2, a3])
    }

    /// ζ^k for any integer k.
    pub const fn zeta_pow(k: i64) -> Self {
        match k.rem_euclid(5) {
            0 => CycPoint([1, 0, 0, 0]),
            1 => CycPoint([0, 1, 0, 0]),
            2 => CycPoint([0, 0, 1, 0]),
            3 => CycPoint([0, 0, 0, 1]),
            _ => CycPoint([-1, -1, -1, -1]),
        }
    }

    /// The center displacement w_k = ζ^k + ζ^{k+1} between tiles glued
    /// across side k.
    pub fn gluing_vector(k: i64) -> Self {
        Self::zeta_pow(k) + Self::zeta_pow(k + 1)
    }

    pub fn coeffs(&self) -> [i64; 4] {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn checked_add(&self, rhs: &CycPoint) -> Result<CycPoint, GeometryError> {
        let mut out = [0i64; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.0[i]
                .checked_add(rhs.0[i])
                .ok_or(GeometryError::Overflow)?;
        }
        Ok(CycPoint(out))
    }

    pub fn checked_sub(&self, rhs: &CycPoint) -> Result<CycPoint, GeometryError> {
        let mut out = [0i64; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.0[i]
                .checked_sub(rhs.0[i])
                .ok_or(GeometryError::Overflow)?;
        }
        Ok(CycPoint(out))
    }

    /// Ring product in Z[ζ].
    pub fn mul(&self, rhs: &CycPoint) -> CycPoint {
        let mut c = [0i128; 5];
        for i in 0..4 {
            for j in 0..4 {
                c[(i + j) % 5] += self.0[i] as i128 * rhs.0[j] as i128;
            }
        }
        let top = c[4];
        let reduce = |v: i128| i64::try_from(v - top).expect("CycPoint coefficient overflow");
        CycPoint([reduce(c[0]), reduce(c[1]), reduce(c[2]), reduce(c[3])])
    }

    /// Complex conjugate: ζ^j ↦ ζ^{−j}.
    pub fn conj(&self) -> CycPoint {
        let [a0, a1, a2, a3] = self.0;
        // a0 + a1 ζ⁴ + a2 ζ³ + a3 ζ², then reduce ζ⁴.
        CycPoint([a0 - a1, -a1, a3 - a1, a2 - a1])
    }

    /// Multiplication by ζ^k (rotation by 72°·k).
    pub fn rotate(&self, k: i64) -> CycPoint {
        self.mul(&Self::zeta_pow(k))
    }

    /// 4·Re(self) as `(p, q)` meaning `p + q√5`.
    pub fn re4(&self) -> (i64, i64) {
        let mut p = 0i64;
        let mut q = 0i64;
        for (j, &a) in self.0.iter().enumerate() {
            p += a * RE4[j].0;
            q += a * RE4[j].1;
        }
        (p, q)
    }

    /// 2·Im(self)/sin 36° as `(p, q)` meaning `p + q√5`.
    pub fn im2(&self) -> (i64, i64) {
        let [_, a1, a2, a3] = self.0;
        (a1 + 2 * a2 - 2 * a3, a1)
    }

    /// Floating embedding (x, y); used for bucketing and rendering only.
    pub fn to_f64(&self) -> (f64, f64) {
        let s5 = 5f64.sqrt();
        let (xp, xq) = self.re4();
        let (yp, yq) = self.im2();
        // sin 36° = sqrt((5 − √5)/8)
        let sin36 = ((5.0 - s5) / 8.0).sqrt();
        (
            (xp as f64 + xq as f64 * s5) / 4.0,
            (yp as f64 + yq as f64 * s5) / 2.0 * sin36,
        )
    }

    /// Exact real part.
    pub fn x(&self) -> QSqrt5 {
        let (p, q) = self.re4();
        QSqrt5::new(p, q, 4)
    }

    /// Exact imaginary part divided by sin 36°.
    pub fn y(&self) -> QSqrt5 {
        let (p, q) = self.im2();
        QSqrt5::new(p, q, 2)
    }
}

impl Add for CycPoint {
    type Output = CycPoint;
    fn add(self, rhs: CycPoint) -> CycPoint {
        self.checked_add(&rhs)
            .expect("CycPoint coefficient overflow")
    }
}

impl Sub for CycPoint {
    type Output = CycPoint;
    fn sub(self, rhs: CycPoint) -> CycPoint {
        self.checked_sub(&rhs)
            .expect("CycPoint coefficient overflow")
    }
}

impl Neg for CycPoint {
    type Output = CycPoint;
    fn neg(self) -> CycPoint {
        CycPoint(
            self.0
                .map(|a| a.checked_neg().expect("CycPoint coefficient overflow")),
        )
    }
}

impl fmt::Debug for CycPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a},{b},{c},{d})")
    }
}
