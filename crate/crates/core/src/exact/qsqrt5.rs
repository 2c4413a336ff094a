//! Exact elements of the quadratic field Q(√5).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Sign of `p + q√5` using integer comparisons only.
///
/// When `p` and `q` agree in sign the answer is immediate; otherwise the
/// dominating term is found by comparing `p²` with `5q²`.
pub fn sign_parts(p: i64, q: i64) -> i32 {
    match (p.signum(), q.signum()) {
        (0, s) | (s, 0) => s as i32,
        (a, b) if a == b => a as i32,
        (ps, _) => {
            let p2 = (p as i128) * (p as i128);
            let q2 = 5 * (q as i128) * (q as i128);
            match p2.cmp(&q2) {
                Ordering::Greater => ps as i32,
                Ordering::Less => -ps as i32,
                // p² = 5q² has no nonzero integer solution.
                Ordering::Equal => unreachable!("p^2 = 5 q^2 with q != 0"),
            }
        }
    }
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn narrow(v: i128) -> i64 {
    i64::try_from(v).expect("QSqrt5 coefficient overflow")
}

/// The real number `(p + q√5) / d`, kept normalized: `d > 0` and
/// `gcd(p, q, d) = 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct QSqrt5 {
    p: i64,
    q: i64,
    d: i64,
}

impl QSqrt5 {
    pub const ZERO: QSqrt5 = QSqrt5 { p: 0, q: 0, d: 1 };
    pub const ONE: QSqrt5 = QSqrt5 { p: 1, q: 0, d: 1 };

    /// Builds `(p + q√5) / d`. Panics if `d == 0`.
    pub fn new(p: i64, q: i64, d: i64) -> Self {
        Self::from_wide(p as i128, q as i128, d as i128)
    }

    pub fn from_int(n: i64) -> Self {
        QSqrt5 { p: n, q: 0, d: 1 }
    }

    /// `(−1 + √5) / 2 = 2 cos 72°`.
    pub fn phi() -> Self {
        QSqrt5::new(-1, 1, 2)
    }

    pub fn sqrt5() -> Self {
        QSqrt5::new(0, 1, 1)
    }

    fn from_wide(p: i128, q: i128, d: i128) -> Self {
        assert!(d != 0, "QSqrt5 with zero denominator");
        let (mut p, mut q, mut d) = if d < 0 { (-p, -q, -d) } else { (p, q, d) };
        let g = gcd(gcd(p, q), d);
        if g > 1 {
            p /= g;
            q /= g;
            d /= g;
        }
        QSqrt5 {
            p: narrow(p),
            q: narrow(q),
            d: narrow(d),
        }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn sign(&self) -> i32 {
        sign_parts(self.p, self.q)
    }

    pub fn is_zero(&self) -> bool {
        self.p == 0 && self.q == 0
    }

    /// The Galois conjugate `(p − q√5) / d`.
    pub fn conjugate(&self) -> Self {
        QSqrt5 {
            p: self.p,
            q: -self.q,
            d: self.d,
        }
    }

    /// Exact division; `None` when the divisor is zero.
    pub fn checked_div(&self, rhs: &QSqrt5) -> Option<QSqrt5> {
        if rhs.is_zero() {
            return None;
        }
        // a / b = a · conj(b) / (b · conj(b)), and b · conj(b) is rational.
        let (bp, bq, bd) = (rhs.p as i128, rhs.q as i128, rhs.d as i128);
        let norm = bp * bp - 5 * bq * bq;
        let (ap, aq, ad) = (self.p as i128, self.q as i128, self.d as i128);
        let np = ap * bp - 5 * aq * bq;
        let nq = aq * bp - ap * bq;
        Some(QSqrt5::from_wide(np * bd, nq * bd, ad * norm))
    }

    /// `Some(n)` when the value is the integer `n`.
    pub fn as_integer(&self) -> Option<i64> {
        (self.q == 0 && self.d == 1).then_some(self.p)
    }

    pub fn to_f64(&self) -> f64 {
        (self.p as f64 + self.q as f64 * 5f64.sqrt()) / self.d as f64
    }
}

impl Default for QSqrt5 {
    fn default() -> Self {
        QSqrt5::ZERO
    }
}

impl Add for QSqrt5 {
    type Output = QSqrt5;
    fn add(self, rhs: QSqrt5) -> QSqrt5 {
        let (ad, bd) = (self.d as i128, rhs.d as i128);
        QSqrt5::from_wide(
            self.p as i128 * bd + rhs.p as i128 * ad,
            self.q as i128 * bd + rhs.q as i128 * ad,
            ad * bd,
        )
    }
}

impl AddAssign for QSqrt5 {
    fn add_assign(&mut self, rhs: QSqrt5) {
        *self = *self + rhs;
    }
}

impl Sub for QSqrt5 {
    type Output = QSqrt5;
    fn sub(self, rhs: QSqrt5) -> QSqrt5 {
        self + (-rhs)
    }
}

impl Neg for QSqrt5 {
    type Output = QSqrt5;
    fn neg(self) -> QSqrt5 {
        QSqrt5 {
            p: -self.p,
            q: -self.q,
            d: self.d,
        }
    }
}

impl Mul for QSqrt5 {
    type Output = QSqrt5;
    fn mul(self, rhs: QSqrt5) -> QSqrt5 {
        let (ap, aq, ad) = (self.p as i128, self.q as i128, self.d as i128);
        let (bp, bq, bd) = (rhs.p as i128, rhs.q as i128, rhs.d as i128);
        QSqrt5::from_wide(ap * bp + 5 * aq * bq, ap * bq + aq * bp, ad * bd)
    }
}

impl std::iter::Sum for QSqrt5 {
    fn sum<I: Iterator<Item = QSqrt5>>(iter: I) -> QSqrt5 {
        iter.fold(QSqrt5::ZERO, |a, b| a + b)
    }
}

impl PartialOrd for QSqrt5 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Numeric order.
impl Ord for QSqrt5 {
    fn cmp(&self, other: &Self) -> Ordering {
        (*self - *other).sign().cmp(&0)
    }
}

impl fmt::Debug for QSqrt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}√5)/{}", self.p, self.q, self.d)
    }
}

/// Renders as `p`, `p+q√5`, or `(p+q√5)/d` using ASCII `r5` for √5.
impl fmt::Display for QSqrt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = match (self.p, self.q) {
            (p, 0) => format!("{p}"),
            (0, q) => format!("{q}r5"),
            (p, q) if q < 0 => format!("{p}{q}r5"),
            (p, q) => format!("{p}+{q}r5"),
        };
        if self.d == 1 {
            f.write_str(&body)
        } else {
            write!(f, "({body})/{}", self.d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_examples() {
        assert_eq!(QSqrt5::new(0, 0, 1).sign(), 0);
        assert_eq!(QSqrt5::new(-2, 1, 1).sign(), 1);
        assert_eq!(QSqrt5::new(7, -3, 1).sign(), 1);
        assert_eq!(QSqrt5::new(2, -1, 1).sign(), -1);
        assert_eq!(QSqrt5::new(-7, 3, 1).sign(), -1);
        assert_eq!(QSqrt5::new(-3, -1, 5).sign(), -1);
    }

    #[test]
    fn normalizes() {
        let a = QSqrt5::new(4, -2, -6);
        assert_eq!((a.p(), a.q(), a.d()), (-2, 1, 3));
        assert_eq!(QSqrt5::new(0, 0, 7), QSqrt5::ZERO);
    }

    #[test]
    fn phi_satisfies_its_quadratic() {
        // φ² + φ − 1 = 0 for φ = 2 cos 72°.
        let phi = QSqrt5::phi();
        assert!((phi * phi + phi - QSqrt5::ONE).is_zero());
        assert!((phi.to_f64() - 0.618_033_988_749_895).abs() < 1e-15);
    }

    #[test]
    fn division_round_trips() {
        let a = QSqrt5::new(3, -7, 2);
        let b = QSqrt5::new(5, 1, 3);
        let c = a.checked_div(&b).unwrap();
        assert_eq!(c * b, a);
        assert!(a.checked_div(&QSqrt5::ZERO).is_none());
    }

    #[test]
    fn ordering_is_numeric() {
        let mut v = [
            QSqrt5::new(7, -3, 1),
            QSqrt5::new(-2, 1, 1),
            QSqrt5::ONE,
            QSqrt5::new(2, -1, 1),
        ];
        v.sort();
        let f: Vec<f64> = v.iter().map(QSqrt5::to_f64).collect();
        assert!(f.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn display() {
        assert_eq!(QSqrt5::new(5, -1, 2).to_string(), "(5-1r5)/2");
        assert_eq!(QSqrt5::from_int(3).to_string(), "3");
        assert_eq!(QSqrt5::new(0, 2, 1).to_string(), "2r5");
    }
}
