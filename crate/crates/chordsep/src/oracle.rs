//! Independent brute-force machinery: exhaustive enumeration of maximal
//! chord separated collections (Bron–Kerbosch over the compatibility graph
//! on all `2^n` subsets), mutation-closure enumeration of zonotopal tilings,
//! and the cross-checks tying the two together.
//!
//! Completeness of the mutation closure is certified by the count
//! cross-check against the exhaustive collection enumeration, not by an
//! independent geometric enumeration.

use crate::collection::{CompletionOrder, PurityReport, SeparatedCollection, SeparationKind};
use crate::separation;
use crate::subset::{GroundSet, Subset};
use crate::zonotope::{from_collection, ZonotopalTiling};
use crate::{Error, Result};
use std::collections::{BTreeMap, HashSet};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationMethod {
    ExhaustiveSearch,
    MutationClosure,
}

/// Enumeration output with canonically deduplicated items.
#[derive(Debug, Clone)]
pub struct Enumeration<T> {
    pub n: u8,
    pub method: EnumerationMethod,
    pub items: Vec<T>,
}

impl<T> Enumeration<T> {
    pub fn count(&self) -> usize {
        self.items.len()
    }
}

/// Enumeration caps: the subset-compatibility graph has `2^n` vertices and
/// the bitset implementation carries at most 128 of them.
const MAX_EXHAUSTIVE_N: u8 = 7;
const MAX_CLOSURE_N: u8 = 6;

/// All maximal-by-inclusion chord separated collections in `2^[n]`, as the
/// maximal cliques of the chord-separation graph on all subsets.
pub fn enumerate_maximal_collections(g: GroundSet) -> Result<Enumeration<SeparatedCollection>> {
    let n = g.n();
    if n > MAX_EXHAUSTIVE_N {
        return Err(Error::ExhaustiveBound {
            n,
            limit: MAX_EXHAUSTIVE_N,
        });
    }
    let universe = 1usize << n;
    // neighbor bitmask per subset
    let mut nbr = vec![0u128; universe];
    for a in 0..universe {
        for b in a + 1..universe {
            let sa = Subset::from_mask(a as u64);
            let sb = Subset::from_mask(b as u64);
            if separation::chord_separated(sa, sb, g) {
                nbr[a] |= 1u128 << b;
                nbr[b] |= 1u128 << a;
            }
        }
    }

    let full: u128 = if universe == 128 {
        u128::MAX
    } else {
        (1u128 << universe) - 1
    };
    let mut cliques: Vec<u128> = Vec::new();
    bron_kerbosch(0, full, 0, &nbr, &mut cliques);

    let mut items: Vec<SeparatedCollection> = cliques
        .into_iter()
        .map(|clique| {
            let sets = (0..universe)
                .filter(|&i| clique >> i & 1 == 1)
                .map(|i| Subset::from_mask(i as u64));
            SeparatedCollection::new(g, SeparationKind::Chord, sets).unwrap()
        })
        .collect();
    items.sort_by_key(|c| c.canonical_key());
    Ok(Enumeration {
        n,
        method: EnumerationMethod::ExhaustiveSearch,
        items,
    })
}

fn bron_kerbosch(r_any: u128, mut p: u128, mut x: u128, nbr: &[u128], out: &mut Vec<u128>) {
    if p == 0 && x == 0 {
        out.push(r_any);
        return;
    }
    // pivot: vertex of P ∪ X with the most neighbors in P
    let pivot = {
        let mut best = usize::MAX;
        let mut best_deg = -1i64;
        let mut scan = p | x;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let deg = (p & nbr[v]).count_ones() as i64;
            if deg > best_deg {
                best_deg = deg;
                best = v;
            }
        }
        best
    };
    let mut candidates = p & !nbr[pivot];
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        let bit = 1u128 << v;
        bron_kerbosch(r_any | bit, p & nbr[v], x & nbr[v], nbr, out);
        p &= !bit;
        x |= bit;
    }
}

/// Breadth-first mutation closure from the canonical greedy tiling.
pub fn enumerate_tilings(g: GroundSet) -> Result<Enumeration<ZonotopalTiling>> {
    enumerate_tilings_impl(g, false)
}

/// Mutation closure with rayon-parallel frontier expansion. Results are
/// identical to [`enumerate_tilings`].
#[cfg(feature = "parallel")]
pub fn par_enumerate_tilings(g: GroundSet) -> Result<Enumeration<ZonotopalTiling>> {
    enumerate_tilings_impl(g, true)
}

fn enumerate_tilings_impl(g: GroundSet, parallel: bool) -> Result<Enumeration<ZonotopalTiling>> {
    let n = g.n();
    if n > MAX_CLOSURE_N {
        return Err(Error::ExhaustiveBound {
            n,
            limit: MAX_CLOSURE_N,
        });
    }
    let seed_collection = SeparatedCollection::empty(g, SeparationKind::Chord)
        .complete_to_maximal(CompletionOrder::Canonical)?;
    let seed = from_collection(&seed_collection)?;

    let mut seen: BTreeMap<Vec<(u64, [u8; 3])>, ZonotopalTiling> = BTreeMap::new();
    seen.insert(seed.canonical_key(), seed.clone());
    let mut frontier = vec![seed];
    while !frontier.is_empty() {
        let expand = |z: &ZonotopalTiling| -> Vec<ZonotopalTiling> {
            z.mutable_quadruples()
                .into_iter()
                .map(|(s, q)| z.mutate(s, q).expect("enumerated quadruple mutates"))
                .collect()
        };
        #[cfg(feature = "parallel")]
        let produced: Vec<ZonotopalTiling> = if parallel {
            frontier.par_iter().flat_map_iter(expand).collect()
        } else {
            frontier.iter().flat_map(expand).collect()
        };
        #[cfg(not(feature = "parallel"))]
        let produced: Vec<ZonotopalTiling> = frontier.iter().flat_map(expand).collect();
        let _ = parallel;

        frontier = Vec::new();
        for z in produced {
            if let std::collections::btree_map::Entry::Vacant(slot) = seen.entry(z.canonical_key()) {
                slot.insert(z.clone());
                frontier.push(z);
            }
        }
    }
    Ok(Enumeration {
        n,
        method: EnumerationMethod::MutationClosure,
        items: seen.into_values().collect(),
    })
}

/// `Vert` is a bijection between enumerated tilings and enumerated maximal
/// collections, with `from_collection` as its inverse.
pub fn cross_check_bijection(g: GroundSet) -> Result<bool> {
    let collections = enumerate_maximal_collections(g)?;
    let tilings = enumerate_tilings(g)?;
    if collections.count() != tilings.count() {
        return Ok(false);
    }
    let keys: HashSet<Vec<u64>> = collections
        .items
        .iter()
        .map(|c| c.canonical_key())
        .collect();
    for z in &tilings.items {
        let v = z.vert();
        if !keys.contains(&v.canonical_key()) {
            return Ok(false);
        }
        if from_collection(&v)? != *z {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Summary of a purity stress run: greedy completions from many random
/// orders, all required to hit the purity sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PurityStress {
    pub n: u8,
    pub runs: u64,
    pub failures: u64,
    pub example: Option<PurityReport>,
}

/// Run `runs` seeded greedy completions of the empty collection and check
/// every purity report. Deterministic given the seed range.
pub fn purity_stress(g: GroundSet, kind: SeparationKind, runs: u64) -> Result<PurityStress> {
    purity_stress_impl(g, kind, runs, false)
}

/// Parallel variant of [`purity_stress`] with identical results.
#[cfg(feature = "parallel")]
pub fn par_purity_stress(g: GroundSet, kind: SeparationKind, runs: u64) -> Result<PurityStress> {
    purity_stress_impl(g, kind, runs, true)
}

fn purity_stress_impl(
    g: GroundSet,
    kind: SeparationKind,
    runs: u64,
    parallel: bool,
) -> Result<PurityStress> {
    let one = |seed: u64| -> Result<PurityReport> {
        SeparatedCollection::empty(g, kind)
            .complete_to_maximal(CompletionOrder::Seeded(seed))?
            .purity_report()
    };
    #[cfg(feature = "parallel")]
    let reports: Result<Vec<PurityReport>> = if parallel {
        (0..runs).into_par_iter().map(one).collect()
    } else {
        (0..runs).map(one).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let reports: Result<Vec<PurityReport>> = (0..runs).map(one).collect();
    let _ = parallel;

    let reports = reports?;
    let failures = reports.iter().filter(|r| !r.is_pure).count() as u64;
    Ok(PurityStress {
        n: g.n(),
        runs,
        failures,
        example: reports.into_iter().next(),
    })
}

/// Exhaustive verification of the predicate identities for every pair of
/// subsets: chord = surrounds-or-surrounds, weak ⇒ chord, equal-size
/// weak ⇔ chord, symmetry, and rotation/complement invariance.
pub fn predicate_suite(g: GroundSet) -> Result<bool> {
    predicate_suite_impl(g, false)
}

/// Parallel variant of [`predicate_suite`].
#[cfg(feature = "parallel")]
pub fn par_predicate_suite(g: GroundSet) -> Result<bool> {
    predicate_suite_impl(g, true)
}

fn predicate_suite_impl(g: GroundSet, parallel: bool) -> Result<bool> {
    g.check_exhaustive()?;
    let universe = 1u64 << g.n();
    let check_row = |a: u64| -> bool {
        let s = Subset::from_mask(a);
        (0..universe).all(|b| {
            let t = Subset::from_mask(b);
            let ch = separation::chord_separated(s, t, g);
            let wk = separation::weakly_separated(s, t, g);
            let st = separation::strongly_separated(s, t, g);
            ch == (separation::surrounds(s, t, g) || separation::surrounds(t, s, g))
                && (!wk || ch)
                && (!st || wk)
                && ch == separation::chord_separated(t, s, g)
                && wk == separation::weakly_separated(t, s, g)
                && st == separation::strongly_separated(t, s, g)
                && (s.card() != t.card() || wk == ch)
                && ch == separation::chord_separated(s.rotate(g), t.rotate(g), g)
                && ch == separation::chord_separated(s.complement(g), t.complement(g), g)
                && separation::crossing_witness(s, t, g).is_none() == ch
        })
    };
    #[cfg(feature = "parallel")]
    if parallel {
        return Ok((0..universe).into_par_iter().all(check_row));
    }
    let _ = parallel;
    Ok((0..universe).all(check_row))
}

/// Random maximal chord collections (for sampling larger n): seeds
/// `0..count` mapped through greedy completion.
pub fn random_tilings(g: GroundSet, count: u64) -> Result<Vec<ZonotopalTiling>> {
    (0..count)
        .map(|seed| {
            let d = SeparatedCollection::empty(g, SeparationKind::Chord)
                .complete_to_maximal(CompletionOrder::Seeded(seed))?;
            from_collection(&d)
        })
        .collect()
}

/// Shared work queue variant used by the CLI's `--jobs`: configure rayon's
/// global pool before calling the `par_*` entry points.
#[cfg(feature = "parallel")]
pub fn configure_jobs(jobs: usize) {
    if jobs > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
}
