use std::collections::{BTreeMap, BTreeSet};

use pentagrow_core::graph::{analyze, contacts_on_attach, summarize, ContactKind};
use pentagrow_core::growth::{grow, GrowthState};
use pentagrow_core::holes::{census, enumerate_angle_types, verify_angle_sum, Catalog};

/// Upper 0.1% point of chi-square with `df` degrees of freedom
/// (Wilson–Hilferty).
fn chi2_crit(df: f64) -> f64 {
    let z = 3.090_232;
    let a = 2.0 / (9.0 * df);
    df * (1.0 - a + z * a.sqrt()).powi(3)
}

fn chi2(counts: &BTreeMap<(usize, u8), usize>, bins: usize, total: usize) -> f64 {
    let expect = total as f64 / bins as f64;
    let seen: f64 = counts
        .values()
        .map(|&c| (c as f64 - expect).powi(2) / expect)
        .sum();
    // bins never hit contribute `expect` each
    seen + (bins - counts.len()) as f64 * expect
}

#[test]
fn first_attachment_is_uniform_over_free_sides() {
    let runs = 20_000;
    let mut counts = BTreeMap::new();
    for seed in 0..runs {
        let s = grow(2, seed).unwrap().into_structure();
        let p = &s.pentagons()[1];
        *counts
            .entry((p.parent.unwrap(), p.parent_side.unwrap()))
            .or_default() += 1;
    }
    assert_eq!(counts.len(), 5);
    let x = chi2(&counts, 5, runs as usize);
    assert!(x < chi2_crit(4.0), "chi2 = {x}");
}

#[test]
fn later_attachment_is_uniform_over_the_ledger() {
    // Condition on the first tile going to side 0; the third tile must
    // then pick uniformly among the free sides of that two-tile structure.
    let mut two = GrowthState::seed_structure(0);
    two.attach_at(0, 0).unwrap();
    let bins = two.free_edge_count();
    let mut counts = BTreeMap::new();
    let mut total = 0;
    for seed in 0..60_000 {
        let s = grow(3, seed).unwrap().into_structure();
        if s.pentagons()[1].parent_side != Some(0) {
            continue;
        }
        let p = &s.pentagons()[2];
        let key = (p.parent.unwrap(), p.parent_side.unwrap());
        assert!(two.contains_free_edge(key.0, key.1), "{key:?} not free");
        *counts.entry(key).or_default() += 1;
        total += 1;
    }
    assert!(total > 10_000);
    let x = chi2(&counts, bins, total);
    assert!(
        x < chi2_crit(bins as f64 - 1.0),
        "chi2 = {x} over {bins} bins"
    );
}

#[test]
fn scripted_diamond() {
    let mut g = GrowthState::seed_structure(0);
    let mut last = g.attach_at(0, 4).unwrap();
    for side in [2, 0, 4, 2] {
        last = g.attach_at(last, side).unwrap();
    }
    let s = g.into_structure();
    let sum = summarize(&s).unwrap();
    assert_eq!((sum.holes_faces, sum.holes_euler), (1, 1));
    let mut cat = Catalog::seeded();
    let c = census(&s, &mut cat).unwrap();
    assert_eq!(c.histogram, BTreeMap::from([("diamond".to_string(), 1)]));
    assert!(c.discovered.is_empty());
}

fn increments(s: &pentagrow_core::Structure) -> (i64, i64, i64) {
    let n = s.len();
    let a = summarize(&s.prefix(n - 1)).unwrap();
    let b = summarize(s).unwrap();
    (
        b.vertices as i64 - a.vertices as i64,
        b.edges as i64 - a.edges as i64,
        b.holes_faces as i64 - a.holes_faces as i64,
    )
}

#[test]
fn scripted_contacts() {
    // Edge-edge only: the new tile brings 3 corners and 4 sides of its own.
    let mut g = GrowthState::seed_structure(0);
    g.attach_at(0, 0).unwrap();
    assert_eq!(increments(g.structure()), (3, 4, 0));
    // the side shared with the parent is not reported as a contact
    assert!(contacts_on_attach(g.structure(), 1).is_empty());

    // Tiles on neighboring seed sides also meet at the seed corner between
    // them. That corner is already a vertex and the 36° gap stays open, so
    // the counts are those of a plain attachment.
    g.attach_at(0, 1).unwrap();
    assert_eq!(increments(g.structure()), (3, 4, 0));
    let c = contacts_on_attach(g.structure(), 2);
    assert_eq!(c, vec![(1, BTreeSet::from([ContactKind::VertexVertex]))]);
}

#[test]
fn contact_kinds_and_increments() {
    let s = grow(1500, 21).unwrap().into_structure();
    let mut seen = BTreeSet::new();
    let mut over_five = 0;
    let mut prev = (5i64, 5i64, 0i64);
    for n in 2..=s.len() {
        let prefix = s.prefix(n);
        for (_, kinds) in contacts_on_attach(&prefix, n - 1) {
            seen.extend(kinds);
        }
        let sum = summarize(&prefix).unwrap();
        let now = (
            sum.vertices as i64,
            sum.edges as i64,
            sum.holes_faces as i64,
        );
        let (dv, de, dh) = (now.0 - prev.0, now.1 - prev.1, now.2 - prev.2);
        assert!(
            (0..=5).contains(&dv) && (0..=5).contains(&dh),
            "n = {n}: dV = {dv}, dH = {dh}"
        );
        assert_eq!(de, dv + dh + 1, "n = {n}");
        // A corner inside an existing side splits it, so E can gain 6.
        assert!(de <= 6, "n = {n}: dE = {de}");
        over_five += (de > 5) as usize;
        prev = now;
    }
    assert!(over_five > 0);
    let all = BTreeSet::from([
        ContactKind::EdgeEdge,
        ContactKind::PartialEdge,
        ContactKind::VertexEdge,
        ContactKind::VertexVertex,
    ]);
    assert_eq!(seen, all);
}

#[test]
fn census_properties() {
    let mut cat = Catalog::seeded();
    let triangle_types: BTreeSet<Vec<u8>> = enumerate_angle_types(3).into_iter().collect();
    for seed in 0..4 {
        let s = grow(3000, seed).unwrap().into_structure();
        let (graph, faces) = analyze(&s).unwrap();
        let c = pentagrow_core::holes::census_of(&s, &graph, &faces, &mut cat).unwrap();
        assert_eq!(c.holes, faces.hole_count());
        assert_eq!(c.histogram.values().sum::<usize>(), c.holes);
        assert_eq!(c.angle_sum_violations, 0);
        for t in c.triangles.keys() {
            assert!(triangle_types.contains(t), "{t:?}");
            assert!(verify_angle_sum(t));
        }
        // A second pass over the same structure learns nothing new.
        let again = census(&s, &mut cat).unwrap();
        assert!(again.discovered.is_empty());
        assert_eq!(again.histogram, c.histogram);
    }
}

#[test]
fn euler_both_ways_on_many_seeds() {
    for seed in 0..10 {
        for n in [1, 10, 100, 1000] {
            let sum = summarize(&grow(n, seed).unwrap().into_structure()).unwrap();
            assert!(sum.euler_consistent(), "seed {seed} n {n}: {sum:?}");
            assert!(sum.holes_euler >= 0);
        }
    }
}
