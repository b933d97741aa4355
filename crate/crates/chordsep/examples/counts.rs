use chordsep::oracle::{enumerate_maximal_collections, enumerate_tilings};
use chordsep::subset::GroundSet;
use std::time::Instant;

fn main() {
    for n in 3..=6u8 {
        let g = GroundSet::new(n).unwrap();
        let t0 = Instant::now();
        let c = enumerate_maximal_collections(g).unwrap();
        let t1 = Instant::now();
        let z = enumerate_tilings(g).unwrap();
        let t2 = Instant::now();
        println!(
            "n={n}: collections={} ({:?}), tilings={} ({:?})",
            c.count(),
            t1 - t0,
            z.count(),
            t2 - t1
        );
    }
}
