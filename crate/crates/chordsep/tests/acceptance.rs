//! Acceptance suite: one test per criterion, each printing a pass line with
//! its measured numbers (visible with `--nocapture`). The tested tiling pool
//! is every enumerated tiling for n ≤ 5 plus 100 seeded random tilings at
//! n = 6.

use chordsep::collection::{CompletionOrder, SeparatedCollection, SeparationKind};
use chordsep::oracle;
use chordsep::plabic_graph::{dualize, sigma};
use chordsep::plabic_tiling::{Color, TriangulatedPlabicTiling};
use chordsep::subset::{GroundSet, Subset};
use chordsep::zonotope::{assemble, check_admissible, from_collection, ValidateOpts, ZonotopalTiling};
use std::sync::OnceLock;
use std::time::Instant;

fn g(n: u8) -> GroundSet {
    GroundSet::new(n).unwrap()
}

fn sub(elems: &[u8]) -> Subset {
    Subset::from_elems(elems)
}

/// Enumerated tilings for n = 3, 4, 5.
fn enumerated_small() -> &'static Vec<ZonotopalTiling> {
    static POOL: OnceLock<Vec<ZonotopalTiling>> = OnceLock::new();
    POOL.get_or_init(|| {
        (3..=5u8)
            .flat_map(|n| oracle::enumerate_tilings(g(n)).unwrap().items)
            .collect()
    })
}

/// 100 random tilings at n = 6 from seeded greedy completions.
fn random_n6() -> &'static Vec<ZonotopalTiling> {
    static POOL: OnceLock<Vec<ZonotopalTiling>> = OnceLock::new();
    POOL.get_or_init(|| oracle::random_tilings(g(6), 100).unwrap())
}

fn all_tested() -> Vec<&'static ZonotopalTiling> {
    enumerated_small().iter().chain(random_n6().iter()).collect()
}

#[test]
fn criterion_1_purity() {
    let start = Instant::now();
    let expected_total = [15u64, 26, 42];
    for (n, want) in [4u8, 5, 6].into_iter().zip(expected_total) {
        #[cfg(feature = "parallel")]
        let stress = oracle::par_purity_stress(g(n), SeparationKind::Chord, 1000).unwrap();
        #[cfg(not(feature = "parallel"))]
        let stress = oracle::purity_stress(g(n), SeparationKind::Chord, 1000).unwrap();
        assert_eq!(stress.runs, 1000);
        assert_eq!(stress.failures, 0, "impure completion at n={n}");
        let example = stress.example.unwrap();
        assert_eq!(example.total_size, want);
        for (k, &size) in example.level_sizes.iter().enumerate() {
            assert_eq!(size, k as u64 * (n as u64 - k as u64) + 1);
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 10, "purity stress took {elapsed:?}");
    println!("[PASS] criterion 1: purity totals 15/26/42 over 3×1000 random completions in {elapsed:?}");
}

#[test]
fn criterion_2_exhaustive_bijection() {
    let start = Instant::now();
    let mut counts = Vec::new();
    for n in 3..=5u8 {
        let collections = oracle::enumerate_maximal_collections(g(n)).unwrap();
        let tilings = oracle::enumerate_tilings(g(n)).unwrap();
        assert_eq!(collections.count(), tilings.count(), "counts differ at n={n}");
        assert!(oracle::cross_check_bijection(g(n)).unwrap(), "bijection fails at n={n}");
        // the two maps are mutually inverse
        for z in &tilings.items {
            assert_eq!(&from_collection(&z.vert()).unwrap(), z);
        }
        for c in &collections.items {
            assert_eq!(&from_collection(c).unwrap().vert(), c);
            // the full purity statement, exhaustively
            assert!(c.purity_report().unwrap().is_pure, "impure collection at n={n}");
        }
        counts.push(collections.count());
    }
    assert_eq!(counts[1], 2, "Z(4,3) has exactly two fine zonotopal tilings");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "bijection check took {elapsed:?}");
    println!(
        "[PASS] criterion 2: counts {counts:?} for n=3,4,5 agree across methods; maps mutually inverse; n=4 count = 2 ({elapsed:?})"
    );
}

#[test]
fn criterion_3_section_assembly_round_trip() {
    let start = Instant::now();
    let mut tilings_checked = 0usize;
    for z in all_tested() {
        let family = z.sections().unwrap();
        check_admissible(&family).unwrap();
        // assemble ∘ section = identity on tilings
        let rebuilt = assemble(z.config(), &family).unwrap();
        assert_eq!(&rebuilt, z);
        // section ∘ assemble = identity on families
        let resections = rebuilt.sections().unwrap();
        assert_eq!(resections, family);
        tilings_checked += 1;
    }
    println!(
        "[PASS] criterion 3: section/assembly round trips on {tilings_checked} tilings (n ≤ 5 exhaustive + 100 random n=6) in {:?}",
        start.elapsed()
    );
}

#[test]
fn criterion_4_lifting_sizes_and_euler() {
    let start = Instant::now();
    let mut levels_checked = 0usize;
    for z in all_tested() {
        let n = z.ground().n() as i64;
        for (i, section) in z.sections().unwrap().iter().enumerate() {
            let i = i as i64;
            if i == 0 || i == n {
                continue;
            }
            let up = section.up_sets();
            let down = section.down_sets();
            assert_eq!(up.len() as i64, (i + 1) * (n - i - 1) + 1);
            assert!(up.iter().all(|s| s.card() as i64 == i + 1));
            assert_eq!(down.len() as i64, (i - 1) * (n - i + 1) + 1);
            let (w, _b, euler_ok) = section.modified_tiling_counts().unwrap();
            assert_eq!(w as i64, i * (n - i - 1));
            assert!(euler_ok);
            levels_checked += 1;
        }
    }
    // the worked instance at (i, n) = (3, 6): 10 − 24 + 16 = 2
    let d = random_n6()[0].vert();
    let t = TriangulatedPlabicTiling::triangulate_level(&d, 3).unwrap();
    let (w, b, euler_ok) = t.modified_tiling_counts().unwrap();
    assert_eq!((w, b), (6, 9));
    assert!(euler_ok);
    assert_eq!(3 * (6 - 3) + 1 - (3 * w as i64 + 6) + (w as i64 + b as i64 + 1), 2);
    assert_eq!(10 - 24 + 16, 2);
    println!(
        "[PASS] criterion 4: UP/DOWN/white-triangle counts and Euler identity on {levels_checked} levels; instance (3,6): 10 − 24 + 16 = 2 ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_5_plabic_duality() {
    let start = Instant::now();
    let mut sections_checked = 0usize;
    for z in all_tested() {
        let n = z.ground().n();
        for k in 1..n {
            let section = z.section(k).unwrap();
            let dual = dualize(&section).unwrap();
            let report = dual.graph.reducedness();
            assert!(report.is_reduced(), "dual not reduced (n={n}, k={k}): {report:?}");
            assert_eq!(dual.graph.strand_permutation(), sigma(k, n));
            let labels = dual.graph.face_labels().unwrap();
            assert_eq!(labels, dual.face_vertices, "per-face labels (n={n}, k={k})");
            sections_checked += 1;
        }
    }

    // the n=6, k=3 instance: the ten-set collection reproduced exactly
    let ten: Vec<Subset> = [
        [1u8, 2, 3], [1, 2, 6], [1, 3, 5], [1, 3, 6], [1, 5, 6],
        [2, 3, 4], [2, 3, 5], [3, 4, 5], [3, 5, 6], [4, 5, 6],
    ]
    .iter()
    .map(|s| sub(s))
    .collect();
    let d = SeparatedCollection::new(g(6), SeparationKind::Chord, ten.clone())
        .unwrap()
        .complete_to_maximal(CompletionOrder::Canonical)
        .unwrap();
    let t = TriangulatedPlabicTiling::triangulate_level(&d, 3).unwrap();
    let dual = dualize(&t).unwrap();
    assert_eq!(dual.graph.strand_permutation(), sigma(3, 6));
    let mut labels = dual.graph.face_labels().unwrap();
    labels.sort();
    let mut want = ten;
    want.sort();
    assert_eq!(labels, want);
    println!(
        "[PASS] criterion 5: duals reduced with σ(k,n) and exact face labels on {sections_checked} sections; ten-set instance reproduced ({:?})",
        start.elapsed()
    );
}

/// The flipped diagonal inside a quadrilateral of one color, as the dual
/// graph edge between the two triangles that share it.
fn dual_edge_of_diagonal(
    section: &TriangulatedPlabicTiling,
    dual: &chordsep::plabic_graph::DualGraph,
    diag: (Subset, Subset),
) -> usize {
    let owners: Vec<usize> = section
        .triangles()
        .iter()
        .enumerate()
        .filter(|(_, t)| {
            let labels = section.triangle_labels(t);
            labels.contains(&diag.0) && labels.contains(&diag.1)
        })
        .map(|(i, _)| i)
        .collect();
    assert_eq!(owners.len(), 2, "diagonal must bound two triangles");
    (0..dual.graph.edge_count())
        .find(|&e| {
            let (a, b) = dual.graph.edge_endpoints(e);
            (a == owners[0] && b == owners[1]) || (a == owners[1] && b == owners[0])
        })
        .expect("dual edge of shared side")
}

#[test]
fn criterion_6_mutation_matches_moves() {
    let start = Instant::now();
    let tilings = oracle::enumerate_tilings(g(5)).unwrap().items;
    let mut mutations_checked = 0usize;
    for z in &tilings {
        for (s, q) in z.mutable_quadruples() {
            let m = z.mutate(s, q).unwrap();
            let [qa, qb, qc, qd] = q;

            // vert changes by exactly the swap S∪{b,d} ↔ S∪{a,c}
            let before: std::collections::BTreeSet<Subset> = z.vert().iter().collect();
            let after: std::collections::BTreeSet<Subset> = m.vert().iter().collect();
            let gone: Vec<&Subset> = before.difference(&after).collect();
            let came: Vec<&Subset> = after.difference(&before).collect();
            let bd = s.with(qb).with(qd);
            let ac = s.with(qa).with(qc);
            assert!(
                (gone == vec![&bd] && came == vec![&ac])
                    || (gone == vec![&ac] && came == vec![&bd]),
                "vertex swap mismatch"
            );

            // involution
            assert_eq!(&m.mutate(s, q).unwrap(), z);

            // the three affected sections differ by one M1, one M2, one M3
            let la = s.card() + 1;
            for level in 0..=5u8 {
                let sec_z = z.section(level).unwrap();
                let sec_m = m.section(level).unwrap();
                if level < la || level > la + 2 {
                    assert_eq!(sec_z, sec_m, "level {level} should be untouched");
                }
            }

            // M1 at level |S|+1: white-quad diagonal flip
            {
                let sec_z = z.section(la).unwrap();
                let sec_m = m.section(la).unwrap();
                assert_eq!(sec_z.vert(), sec_m.vert());
                let dual_z = dualize(&sec_z).unwrap();
                let dual_m = dualize(&sec_m).unwrap();
                let (old_diag, removed) = if before.contains(&bd) {
                    ((s.with(qb), s.with(qd)), bd)
                } else {
                    ((s.with(qa), s.with(qc)), ac)
                };
                let _ = removed;
                let e = dual_edge_of_diagonal(&sec_z, &dual_z, old_diag);
                let moved = dual_z.graph.flip_move(e, Color::White).unwrap();
                assert_eq!(
                    moved.canonical_encoding(),
                    dual_m.graph.canonical_encoding(),
                    "level {la}: one white flip (M1) realizes the mutation"
                );
            }

            // M2 at level |S|+2: square move at the disappearing label's face
            {
                let sec_z = z.section(la + 1).unwrap();
                let sec_m = m.section(la + 1).unwrap();
                let dual_z = dualize(&sec_z).unwrap();
                let dual_m = dualize(&sec_m).unwrap();
                let removed = if before.contains(&bd) { bd } else { ac };
                let face = dual_z
                    .face_vertices
                    .iter()
                    .position(|&v| v == removed)
                    .expect("face of the disappearing label");
                let moved = dual_z.graph.square_move(face).unwrap();
                assert_eq!(
                    moved.canonical_encoding(),
                    dual_m.graph.canonical_encoding(),
                    "level {}: one square move (M2) realizes the mutation",
                    la + 1
                );
                // exactly one face label changes
                let lz = dual_z.graph.face_labels().unwrap();
                let lm = moved.face_labels().unwrap();
                let changed = lz.iter().zip(&lm).filter(|(a, b)| a != b).count();
                assert_eq!(changed, 1);
            }

            // M3 at level |S|+3: black-quad diagonal flip
            {
                let sec_z = z.section(la + 2).unwrap();
                let sec_m = m.section(la + 2).unwrap();
                assert_eq!(sec_z.vert(), sec_m.vert());
                let dual_z = dualize(&sec_z).unwrap();
                let dual_m = dualize(&sec_m).unwrap();
                let all = s.with(qa).with(qb).with(qc).with(qd);
                let old_diag = if before.contains(&bd) {
                    (all.without(qa), all.without(qc))
                } else {
                    (all.without(qb), all.without(qd))
                };
                let e = dual_edge_of_diagonal(&sec_z, &dual_z, old_diag);
                let moved = dual_z.graph.flip_move(e, Color::Black).unwrap();
                assert_eq!(
                    moved.canonical_encoding(),
                    dual_m.graph.canonical_encoding(),
                    "level {}: one black flip (M3) realizes the mutation",
                    la + 2
                );
            }
            mutations_checked += 1;
        }
    }
    assert!(mutations_checked > 0);
    println!(
        "[PASS] criterion 6: {mutations_checked} mutations across all n=5 tilings realized by exactly one M1 + M2 + M3; involution holds ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_7_ziegler_map() {
    let start = Instant::now();
    // well-defined everywhere
    for z in all_tested() {
        z.ziegler_map().unwrap();
    }
    // |φ| changes by exactly one per mutation; flip graph graded by |φ| has
    // unique source and sink (n = 5)
    let tilings = oracle::enumerate_tilings(g(5)).unwrap().items;
    let phis: Vec<std::collections::BTreeSet<[u8; 4]>> =
        tilings.iter().map(|z| z.ziegler_map().unwrap()).collect();
    let keys: Vec<Vec<(u64, [u8; 3])>> = tilings.iter().map(|z| z.canonical_key()).collect();
    let mut sources = 0;
    let mut sinks = 0;
    for (zi, z) in tilings.iter().enumerate() {
        let mut smaller = 0;
        let mut larger = 0;
        for (s, q) in z.mutable_quadruples() {
            let m = z.mutate(s, q).unwrap();
            let mi = keys.iter().position(|k| *k == m.canonical_key()).unwrap();
            let da = phis[zi].len() as i64;
            let db = phis[mi].len() as i64;
            assert_eq!((da - db).abs(), 1, "|φ| must change by exactly 1");
            let sym: Vec<[u8; 4]> = phis[zi].symmetric_difference(&phis[mi]).copied().collect();
            assert_eq!(sym.len(), 1, "exactly one quadruple flips");
            if db < da {
                smaller += 1;
            } else {
                larger += 1;
            }
        }
        if smaller == 0 {
            sources += 1;
        }
        if larger == 0 {
            sinks += 1;
        }
    }
    assert_eq!(sources, 1, "unique |φ|-minimal tiling");
    assert_eq!(sinks, 1, "unique |φ|-maximal tiling");
    // the source is the tiling with empty φ, the sink the full one
    assert!(phis.iter().any(|p| p.is_empty()));
    assert!(phis.iter().any(|p| p.len() == 5));
    // φ is injective over the n ≤ 5 enumerations
    for n in 3..=5u8 {
        let items = oracle::enumerate_tilings(g(n)).unwrap().items;
        let mut images: Vec<_> = items.iter().map(|z| z.ziegler_map().unwrap()).collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), items.len(), "φ not injective at n={n}");
    }
    println!(
        "[PASS] criterion 7: φ well-defined on all tested tilings; |φ| steps by 1 per mutation; n=5 flip graph has unique source and sink ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_8_geometric_validation() {
    let start = Instant::now();
    let opts = ValidateOpts {
        points: 10_000,
        seed: 2024,
    };
    let mut tilings_checked = 0usize;
    for z in all_tested() {
        #[cfg(feature = "parallel")]
        let report = z.par_validate(opts);
        #[cfg(not(feature = "parallel"))]
        let report = z.validate(opts);
        assert!(report.volume_ok, "volume mismatch: {report:?}");
        assert_eq!(report.point_failures, 0, "{report:?}");
        assert!(report.is_valid(), "{report:?}");
        tilings_checked += 1;
    }
    println!(
        "[PASS] criterion 8: exact volumes and 10^4-point sampling on {tilings_checked} tilings ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_9_predicate_suite() {
    let start = Instant::now();
    for n in 1..=8u8 {
        #[cfg(feature = "parallel")]
        let ok = oracle::par_predicate_suite(g(n)).unwrap();
        #[cfg(not(feature = "parallel"))]
        let ok = oracle::predicate_suite(g(n)).unwrap();
        assert!(ok, "predicate identities fail at n={n}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 30, "predicate suite took {elapsed:?}");
    println!("[PASS] criterion 9: exhaustive predicate identities for n ≤ 8 in {elapsed:?}");
}
