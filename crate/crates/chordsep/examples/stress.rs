use chordsep::collection::{CompletionOrder, SeparatedCollection, SeparationKind};
use chordsep::plabic_graph::{dualize, sigma};
use chordsep::plabic_tiling::TriangulatedPlabicTiling;
use chordsep::subset::GroundSet;

fn main() {
    for n in 7..=16u8 {
        let g = GroundSet::new(n).unwrap();
        let seeds = if n <= 12 { 8u64 } else { 2 };
        for seed in 0..seeds {
            let d = SeparatedCollection::empty(g, SeparationKind::Chord)
                .complete_to_maximal(CompletionOrder::Seeded(seed))
                .unwrap();
            assert!(d.purity_report().unwrap().is_pure, "impure n={n} seed={seed}");
            for k in 1..n {
                let t = match TriangulatedPlabicTiling::triangulate_level(&d, k) {
                    Ok(t) => t,
                    Err(e) => {
                        println!("n={n} seed={seed} k={k}: BUILD ERROR {e}");
                        continue;
                    }
                };
                let dual = match dualize(&t) {
                    Ok(dd) => dd,
                    Err(e) => {
                        println!("n={n} seed={seed} k={k}: DUAL ERROR {e}");
                        continue;
                    }
                };
                assert!(dual.graph.reducedness().is_reduced(), "n={n} k={k}");
                assert_eq!(dual.graph.strand_permutation(), sigma(k, n), "n={n} k={k}");
                assert_eq!(dual.graph.face_labels().unwrap(), dual.face_vertices, "n={n} k={k}");
            }
        }
        println!("n={n}: ok ({seeds} seeds, all levels, duals verified)");
    }
}
