//! Interior-angle types of polygons on the 36° grid.

/// Σ a_i = 5(l − 2): the angle sum of an l-gon in 36° units.
pub fn verify_angle_sum(angles: &[u8]) -> bool {
    let l = angles.len() as i64;
    l >= 3 && angles.iter().map(|&a| a as i64).sum::<i64>() == 5 * (l - 2)
}

/// Least rotation or reflection of a cyclic angle tuple.
pub fn canonical_angles(angles: &[u8]) -> Vec<u8> {
    let mut best = angles.to_vec();
    let mut rev: Vec<u8> = angles.iter().rev().copied().collect();
    let mut fwd = angles.to_vec();
    for _ in 0..angles.len() {
        fwd.rotate_left(1);
        rev.rotate_left(1);
        best = best.min(fwd.clone()).min(rev.clone());
    }
    best
}

/// Every angle type of an l-gon up to rotation and reflection, each given
/// by its least representative, sorted. Angles range over 1..=9 without 5:
/// a straight corner is not a corner.
pub fn enumerate_angle_types(l: usize) -> Vec<Vec<u8>> {
    assert!(l >= 3, "a polygon has at least three sides");
    let target = 5 * (l - 2);
    let mut out = std::collections::BTreeSet::new();
    let mut cur = Vec::with_capacity(l);
    fn go(l: usize, left: usize, cur: &mut Vec<u8>, out: &mut std::collections::BTreeSet<Vec<u8>>) {
        let slots = l - cur.len();
        if slots == 0 {
            if left == 0 {
                out.insert(canonical_angles(cur));
            }
            return;
        }
        for a in (1..=9u8).filter(|&a| a != 5) {
            let a_us = a as usize;
            // Remaining slots need at least 1 each.
            if a_us + (slots - 1) > left || left > a_us + 9 * (slots - 1) {
                continue;
            }
            cur.push(a);
            go(l, left - a_us, cur, out);
            cur.pop();
        }
    }
    go(l, target, &mut cur, &mut out);
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sums() {
        assert!(verify_angle_sum(&[1, 2, 2]));
        assert!(verify_angle_sum(&[1, 1, 3]));
        assert!(verify_angle_sum(&[2, 2, 2, 4]));
        assert!(!verify_angle_sum(&[1, 1, 1, 1]));
        assert!(!verify_angle_sum(&[5, 0]));
    }

    #[test]
    fn triangles() {
        assert_eq!(enumerate_angle_types(3), vec![vec![1, 1, 3], vec![1, 2, 2]]);
    }

    #[test]
    fn canonical_angles_is_dihedral() {
        assert_eq!(canonical_angles(&[4, 3, 2, 1]), vec![1, 2, 3, 4]);
        assert_eq!(
            canonical_angles(&[2, 4, 3, 1]),
            canonical_angles(&[1, 3, 4, 2])
        );
    }
}
