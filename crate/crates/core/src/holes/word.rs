//! Words over the ±U_k alphabet and their canonical forms.
//!
//! A letter is stored as a direction class c in 0..9: `+k` is class 2k and
//! `-k` is class 2k+5 (mod 10). In this encoding every symmetry of the
//! 36° grid is a map on classes:
//!
//! - turning the plane by 36°·j adds j;
//! - reflecting in the class-0 axis sends c to −c;
//! - walking the word backwards reverses it and adds 5.

use std::fmt;
use std::str::FromStr;

use crate::exact::{CycPoint, DirectionClass};

/// One signed letter ±U_k.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    class: u8,
}

impl Step {
    pub fn plus(k: u8) -> Self {
        assert!(k < 5);
        Step { class: 2 * k }
    }

    pub fn minus(k: u8) -> Self {
        assert!(k < 5);
        Step {
            class: (2 * k + 5) % 10,
        }
    }

    pub fn from_class(c: DirectionClass) -> Self {
        Step { class: c.index() }
    }

    pub fn class(self) -> DirectionClass {
        DirectionClass::new(self.class as i64)
    }

    pub fn is_negative(self) -> bool {
        self.class % 2 == 1
    }

    /// The k of ±U_k.
    pub fn index(self) -> u8 {
        if self.is_negative() {
            ((self.class + 5) % 10) / 2
        } else {
            self.class / 2
        }
    }

    pub fn inverse(self) -> Self {
        Step {
            class: (self.class + 5) % 10,
        }
    }

    /// Unit-side vector along this step.
    pub fn side_vector(self) -> CycPoint {
        self.class().reference()
    }

    /// Center displacement ±w_k for a rim step.
    pub fn center_vector(self) -> CycPoint {
        let w = CycPoint::gluing_vector(self.index() as i64);
        if self.is_negative() {
            -w
        } else {
            w
        }
    }
}

impl fmt::Debug for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.is_negative() { '-' } else { '+' };
        write!(f, "{sign}{}", self.index())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("bad step token {0:?}: expected +k or -k with k in 0..4")]
pub struct ParseStepError(pub String);

impl FromStr for Step {
    type Err = ParseStepError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseStepError(s.to_string());
        let (neg, rest) = match s.as_bytes().first() {
            Some(b'+') => (false, &s[1..]),
            Some(b'-') => (true, &s[1..]),
            _ => return Err(err()),
        };
        let k: u8 = rest.parse().map_err(|_| err())?;
        if k >= 5 {
            return Err(err());
        }
        Ok(if neg { Step::minus(k) } else { Step::plus(k) })
    }
}

/// A sequence of steps. Closed words describe a cycle; open ones a path.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct StepWord {
    pub steps: Vec<Step>,
}

impl StepWord {
    pub fn new(steps: Vec<Step>) -> Self {
        StepWord { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Sum of unit side vectors.
    pub fn side_sum(&self) -> CycPoint {
        self.steps
            .iter()
            .fold(CycPoint::ZERO, |acc, s| acc + s.side_vector())
    }

    /// Sum of center displacements.
    pub fn center_sum(&self) -> CycPoint {
        self.steps
            .iter()
            .fold(CycPoint::ZERO, |acc, s| acc + s.center_vector())
    }

    /// Whether the word returns to its start. Both readings (unit sides or
    /// center displacements) close together, since each is a fixed
    /// similarity of the other applied letterwise.
    pub fn is_closed(&self) -> bool {
        self.side_sum().is_zero()
    }

    /// The same cycle traversed the other way.
    pub fn reversed(&self) -> StepWord {
        StepWord::new(self.steps.iter().rev().map(|s| s.inverse()).collect())
    }

    pub fn rotated(&self, j: usize) -> StepWord {
        let mut steps = self.steps.clone();
        if !steps.is_empty() {
            let j = j % steps.len();
            steps.rotate_left(j);
        }
        StepWord::new(steps)
    }

    fn classes(&self) -> Vec<u8> {
        self.steps.iter().map(|s| s.class).collect()
    }

    fn from_classes(classes: &[u8]) -> StepWord {
        StepWord::new(classes.iter().map(|&c| Step { class: c }).collect())
    }

    /// Least representative over rotations, reversal, turns and mirror.
    pub fn canonical_cycle(&self) -> StepWord {
        let items: Vec<(u8, ())> = self.classes().into_iter().map(|c| (c, ())).collect();
        let best = canonical_cyclic(&items);
        Self::from_classes(&best.iter().map(|x| x.0).collect::<Vec<_>>())
    }

    /// Least representative over reversal, turns and mirror (no rotation).
    pub fn canonical_path(&self) -> StepWord {
        let items: Vec<(u8, ())> = self.classes().into_iter().map(|c| (c, ())).collect();
        let best = canonical_open(&items);
        Self::from_classes(&best.iter().map(|x| x.0).collect::<Vec<_>>())
    }
}

impl fmt::Debug for StepWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StepWord({self})")
    }
}

impl fmt::Display for StepWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for StepWord {
    type Err = ParseStepError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Step>, _>>()
            .map(StepWord::new)
    }
}

fn symmetry_images<T: Clone>(items: &[(u8, T)]) -> impl Iterator<Item = Vec<(u8, T)>> + '_ {
    (0..2).flat_map(move |mirror| {
        (0..2).flat_map(move |reverse| {
            (0..10u8).map(move |shift| {
                let map = |c: u8| {
                    let c = if mirror == 1 { (10 - c) % 10 } else { c };
                    let c = if reverse == 1 { c + 5 } else { c };
                    (c + shift) % 10
                };
                let mut out: Vec<(u8, T)> =
                    items.iter().map(|(c, t)| (map(*c), t.clone())).collect();
                if reverse == 1 {
                    out.reverse();
                }
                out
            })
        })
    })
}

/// Least image of a cyclic sequence of (class, payload) under the grid
/// symmetries and cyclic rotation. Payloads travel with their letter.
pub fn canonical_cyclic<T: Ord + Clone>(items: &[(u8, T)]) -> Vec<(u8, T)> {
    let mut best: Option<Vec<(u8, T)>> = None;
    for mut image in symmetry_images(items) {
        for _ in 0..image.len().max(1) {
            if best.as_ref().is_none_or(|b| image < *b) {
                best = Some(image.clone());
            }
            if !image.is_empty() {
                image.rotate_left(1);
            }
        }
    }
    best.unwrap_or_default()
}

/// Least image of an open sequence under the grid symmetries.
pub fn canonical_open<T: Ord + Clone>(items: &[(u8, T)]) -> Vec<(u8, T)> {
    symmetry_images(items).min().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> StepWord {
        s.parse().unwrap()
    }

    #[test]
    fn tokens_round_trip() {
        for k in 0..5 {
            for s in [Step::plus(k), Step::minus(k)] {
                assert_eq!(s.to_string().parse::<Step>().unwrap(), s);
                assert_eq!(s.index(), k);
            }
        }
        assert!("3".parse::<Step>().is_err());
        assert!("+5".parse::<Step>().is_err());
    }

    #[test]
    fn classes_follow_seed_sides() {
        assert_eq!(Step::plus(0).class(), DirectionClass::new(0));
        assert_eq!(Step::minus(0).class(), DirectionClass::new(5));
        assert_eq!(Step::plus(3).class(), DirectionClass::new(6));
        assert_eq!(Step::minus(3).class(), DirectionClass::new(1));
        // Side k of the seed runs from ζ^k to ζ^{k+1}.
        for k in 0..5u8 {
            let d = CycPoint::zeta_pow(k as i64 + 1) - CycPoint::zeta_pow(k as i64);
            assert_eq!(Step::plus(k).side_vector(), d);
        }
    }

    #[test]
    fn reversal_closes_and_is_involutive() {
        let ship = w("+2 -0 +3 -1 +0 -2 +1 -3");
        assert!(ship.is_closed());
        assert!(ship.center_sum().is_zero());
        assert!(ship.reversed().is_closed());
        assert_eq!(ship.reversed().reversed(), ship);
    }

    #[test]
    fn canonical_is_idempotent_and_invariant() {
        let ship = w("+2 -0 +3 -1 +0 -2 +1 -3");
        let c = ship.canonical_cycle();
        assert_eq!(c.canonical_cycle(), c);
        for j in 0..ship.len() {
            assert_eq!(ship.rotated(j).canonical_cycle(), c);
        }
        assert_eq!(ship.reversed().canonical_cycle(), c);
    }

    #[test]
    fn path_canonical_ignores_direction_only() {
        let p = w("-0 +3 -1 +0 -2 +0 -4");
        assert_eq!(p.reversed().canonical_path(), p.canonical_path());
        assert_ne!(p.rotated(1).canonical_path(), p.canonical_path());
    }
}
