//! Collections of pairwise separated subsets: checking, greedy completion to
//! maximal-by-inclusion, level slicing, and purity reports.

use crate::separation::{self, CrossingWitness};
use crate::subset::{binomial, GroundSet, Subset};
use crate::{Error, Result};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeparationKind {
    Chord,
    Weak,
    Strong,
}

impl SeparationKind {
    pub fn holds(self, s: Subset, t: Subset, g: GroundSet) -> bool {
        match self {
            SeparationKind::Chord => separation::chord_separated(s, t, g),
            SeparationKind::Weak => separation::weakly_separated(s, t, g),
            SeparationKind::Strong => separation::strongly_separated(s, t, g),
        }
    }
}

/// Order in which greedy completion tries candidate subsets. The canonical
/// order is (cardinality, then mask value); seeded orders shuffle the
/// candidates deterministically for purity stress tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompletionOrder {
    Canonical,
    Seeded(u64),
}

/// A set of subsets of `[n]` together with the separation kind its pairs are
/// expected to satisfy. The pairwise invariant is checkable, not enforced on
/// construction, so freshly parsed documents can be diagnosed.
#[derive(Debug, Clone)]
pub struct SeparatedCollection {
    ground: GroundSet,
    kind: SeparationKind,
    sets: HashSet<Subset>,
}

impl PartialEq for SeparatedCollection {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.kind == other.kind && self.sets == other.sets
    }
}

impl Eq for SeparatedCollection {}

impl SeparatedCollection {
    pub fn new(
        ground: GroundSet,
        kind: SeparationKind,
        sets: impl IntoIterator<Item = Subset>,
    ) -> Result<Self> {
        let mut out = HashSet::new();
        for s in sets {
            s.check_fits(ground)?;
            out.insert(s);
        }
        Ok(SeparatedCollection {
            ground,
            kind,
            sets: out,
        })
    }

    pub fn empty(ground: GroundSet, kind: SeparationKind) -> Self {
        SeparatedCollection {
            ground,
            kind,
            sets: HashSet::new(),
        }
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn kind(&self) -> SeparationKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.sets.contains(&s)
    }

    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        self.sets.iter().copied()
    }

    /// Members sorted by (cardinality, mask): the canonical order used for
    /// serialization and deterministic scans.
    pub fn sorted_sets(&self) -> Vec<Subset> {
        let mut v: Vec<Subset> = self.sets.iter().copied().collect();
        v.sort_by_key(|s| (s.card(), s.mask()));
        v
    }

    /// Canonical dedup key.
    pub fn canonical_key(&self) -> Vec<u64> {
        self.sorted_sets().iter().map(|s| s.mask()).collect()
    }

    /// First violating pair in canonical order, or None if pairwise separated.
    pub fn is_pairwise_separated(&self) -> Option<(Subset, Subset)> {
        let sorted = self.sorted_sets();
        for (i, &s) in sorted.iter().enumerate() {
            for &t in &sorted[i + 1..] {
                if !self.kind.holds(s, t, self.ground) {
                    return Some((s, t));
                }
            }
        }
        None
    }

    /// Witness for a violating pair (meaningful for the chord kind).
    pub fn violation_witness(&self) -> Option<(Subset, Subset, Option<CrossingWitness>)> {
        self.is_pairwise_separated()
            .map(|(s, t)| (s, t, separation::crossing_witness(s, t, self.ground)))
    }

    fn check_pairwise(&self) -> Result<()> {
        match self.is_pairwise_separated() {
            None => Ok(()),
            Some((s, t)) => Err(Error::NotPairwiseSeparated(s.to_vec(), t.to_vec())),
        }
    }

    fn candidates(&self, order: CompletionOrder) -> Result<Vec<Subset>> {
        let mut cands: Vec<Subset> = self.ground.subsets()?.collect();
        cands.sort_by_key(|s| (s.card(), s.mask()));
        if let CompletionOrder::Seeded(seed) = order {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            cands.shuffle(&mut rng);
        }
        Ok(cands)
    }

    fn greedy_close(&self, cands: &[Subset]) -> Self {
        let mut sets = self.sets.clone();
        let mut members: Vec<Subset> = sets.iter().copied().collect();
        members.sort_by_key(|s| (s.card(), s.mask()));
        for &c in cands {
            if sets.contains(&c) {
                continue;
            }
            if members.iter().all(|&m| self.kind.holds(c, m, self.ground)) {
                sets.insert(c);
                members.push(c);
            }
        }
        SeparatedCollection {
            ground: self.ground,
            kind: self.kind,
            sets,
        }
    }

    /// Greedy completion over all of `2^[n]`. One pass suffices: rejected
    /// candidates stay rejected as the collection only grows.
    pub fn complete_to_maximal(&self, order: CompletionOrder) -> Result<Self> {
        self.check_pairwise()?;
        let cands = self.candidates(order)?;
        Ok(self.greedy_close(&cands))
    }

    /// Greedy completion with candidates restricted to `([n] choose k)`.
    pub fn complete_within_level(&self, k: u8, order: CompletionOrder) -> Result<Self> {
        self.check_level(k)?;
        self.check_pairwise()?;
        let mut cands = self.candidates(order)?;
        cands.retain(|s| s.card() == k);
        Ok(self.greedy_close(&cands))
    }

    /// True iff no subset of `[n]` outside the collection is separated from
    /// every member.
    pub fn is_maximal_by_inclusion(&self) -> Result<bool> {
        Ok(self.first_addable(None)?.is_none())
    }

    /// Maximality within `([n] choose k)` only.
    pub fn is_maximal_within_level(&self, k: u8) -> Result<bool> {
        self.check_level(k)?;
        Ok(self.first_addable(Some(k))?.is_none())
    }

    fn first_addable(&self, level: Option<u8>) -> Result<Option<Subset>> {
        self.check_pairwise()?;
        for c in self.ground.subsets()? {
            if let Some(k) = level {
                if c.card() != k {
                    continue;
                }
            }
            if !self.sets.contains(&c)
                && self.iter().all(|m| self.kind.holds(c, m, self.ground))
            {
                return Ok(Some(c));
            }
        }
        Ok(None)
    }

    fn check_level(&self, k: u8) -> Result<()> {
        if k > self.ground.n() {
            return Err(Error::LevelOutOfRange {
                level: k,
                n: self.ground.n(),
            });
        }
        Ok(())
    }

    /// Exactly the k-element members.
    pub fn level_slice(&self, k: u8) -> Result<Self> {
        self.check_level(k)?;
        Ok(SeparatedCollection {
            ground: self.ground,
            kind: self.kind,
            sets: self.iter().filter(|s| s.card() == k).collect(),
        })
    }

    /// Size bookkeeping against the purity formulas. Requires maximality.
    pub fn purity_report(&self) -> Result<PurityReport> {
        if let Some(c) = self.first_addable(None)? {
            return Err(Error::NotMaximal(c.to_vec()));
        }
        let n = self.ground.n();
        let mut level_sizes = vec![0u64; n as usize + 1];
        for s in self.iter() {
            level_sizes[s.card() as usize] += 1;
        }
        let expected_level_sizes: Vec<u64> = (0..=n as u64)
            .map(|k| k * (n as u64 - k) + 1)
            .collect();
        let expected_total = (0..=3.min(n)).map(|k| binomial(n, k)).sum();
        let total_size = self.len() as u64;
        let is_pure = total_size == expected_total && level_sizes == expected_level_sizes;
        Ok(PurityReport {
            total_size,
            expected_total,
            level_sizes,
            expected_level_sizes,
            is_pure,
        })
    }

    /// The collection with every member rotated by `i ↦ i + 1 (mod n)`.
    pub fn rotated(&self) -> Self {
        SeparatedCollection {
            ground: self.ground,
            kind: self.kind,
            sets: self.iter().map(|s| s.rotate(self.ground)).collect(),
        }
    }
}

/// Comparison of a maximal collection's sizes against the purity formulas:
/// total `C(n,0)+C(n,1)+C(n,2)+C(n,3)` and `k(n−k)+1` per level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PurityReport {
    pub total_size: u64,
    pub expected_total: u64,
    pub level_sizes: Vec<u64>,
    pub expected_level_sizes: Vec<u64>,
    pub is_pure: bool,
}
