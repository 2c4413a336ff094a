use proptest::prelude::*;

use pentagrow_core::exact::{dot4, project};
use pentagrow_core::holes::{canonical_angles, Step, StepWord};
use pentagrow_core::{CycPoint, DirectionClass};

fn point() -> impl Strategy<Value = CycPoint> {
    prop::array::uniform4(-10_000i64..10_000).prop_map(|[a, b, c, d]| CycPoint::new(a, b, c, d))
}

fn word(classes: &[u8]) -> StepWord {
    StepWord::new(
        classes
            .iter()
            .map(|&c| Step::from_class(DirectionClass::new(c as i64)))
            .collect(),
    )
}

/// Classes after turning by `t`, optionally mirroring, optionally walking
/// the word backwards.
fn transform(classes: &[u8], t: u8, mirror: bool, reverse: bool) -> Vec<u8> {
    let mut out: Vec<u8> = classes
        .iter()
        .map(|&c| {
            let c = if mirror { (10 - c) % 10 } else { c };
            (c + t) % 10
        })
        .collect();
    if reverse {
        out.reverse();
        for c in &mut out {
            *c = (*c + 5) % 10;
        }
    }
    out
}

proptest! {
    #[test]
    fn projection_is_additive(a in point(), b in point()) {
        prop_assert_eq!(project(&(a + b)), project(&a) + project(&b));
        prop_assert_eq!(project(&(a - b)), project(&a) + project(&(-b)));
    }

    #[test]
    fn rotation_keeps_lengths(a in point(), k in 0i64..5) {
        prop_assert_eq!(dot4(&a, &a), dot4(&a.rotate(k), &a.rotate(k)));
    }

    #[test]
    fn cycle_canonical_form_is_invariant(
        classes in prop::collection::vec(0u8..10, 1..14),
        t in 0u8..10,
        mirror: bool,
        reverse: bool,
        shift in 0usize..14,
    ) {
        let w = word(&classes);
        let v = word(&transform(&classes, t, mirror, reverse)).rotated(shift);
        prop_assert_eq!(w.canonical_cycle(), v.canonical_cycle());
        let c = w.canonical_cycle();
        prop_assert_eq!(c.canonical_cycle(), c.clone());
    }

    #[test]
    fn path_canonical_form_is_invariant(
        classes in prop::collection::vec(0u8..10, 1..14),
        t in 0u8..10,
        mirror: bool,
        reverse: bool,
    ) {
        let w = word(&classes);
        let v = word(&transform(&classes, t, mirror, reverse));
        prop_assert_eq!(w.canonical_path(), v.canonical_path());
    }

    #[test]
    fn angle_canonical_form_is_invariant(
        angles in prop::collection::vec(1u8..10, 3..10),
        shift in 0usize..10,
        reverse: bool,
    ) {
        let mut b = angles.clone();
        b.rotate_left(shift % angles.len());
        if reverse {
            b.reverse();
        }
        prop_assert_eq!(canonical_angles(&angles), canonical_angles(&b));
    }
}
