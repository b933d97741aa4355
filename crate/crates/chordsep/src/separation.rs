//! Separation predicates on pairs of subsets of `[n]`.
//!
//! `S` surrounds `T` when no element of `S − T` lies strictly between two
//! elements of `T − S` in linear order. Strong separation is mutual
//! surrounding, weak separation adds a cardinality comparison, and chord
//! separation forbids a cyclically ordered quadruple `a, b, c, d` with
//! `a, c ∈ S − T` and `b, d ∈ T − S` (or vice versa).
//!
//! Chord separation is implemented directly on the quadruple formulation as
//! an O(n) alternation scan; its equivalence with
//! `surrounds(S,T) ∨ surrounds(T,S)` is checked exhaustively in tests, not
//! assumed by the implementation.

use crate::subset::{GroundSet, Subset};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// True iff there are no `i < j < k` with `i, k ∈ T − S` and `j ∈ S − T`.
/// Not symmetric.
pub fn surrounds(s: Subset, t: Subset, g: GroundSet) -> bool {
    debug_assert!(s.fits(g) && t.fits(g));
    let outer = t.minus(s);
    let inner = s.minus(t);
    inner.mask() & outer.strict_inner_span() == 0
}

pub fn strongly_separated(s: Subset, t: Subset, g: GroundSet) -> bool {
    surrounds(s, t, g) && surrounds(t, s, g)
}

pub fn weakly_separated(s: Subset, t: Subset, g: GroundSet) -> bool {
    (s.card() <= t.card() && surrounds(s, t, g)) || (t.card() <= s.card() && surrounds(t, s, g))
}

/// True iff no cyclically ordered quadruple alternates between `S − T` and
/// `T − S`. Equivalently the elements of the two differences, read cyclically,
/// change sides at most twice.
pub fn chord_separated(s: Subset, t: Subset, g: GroundSet) -> bool {
    debug_assert!(s.fits(g) && t.fits(g));
    let x = s.minus(t);
    let y = t.minus(s);
    if x.is_empty() || y.is_empty() {
        return true;
    }
    let mut transitions = 0u32;
    let mut first = None;
    let mut prev = false;
    for i in x.union(y).elems() {
        let side = x.contains(i);
        match first {
            None => first = Some(side),
            Some(_) => {
                if side != prev {
                    transitions += 1;
                }
            }
        }
        prev = side;
    }
    if first != Some(prev) {
        transitions += 1;
    }
    transitions <= 2
}

/// A cyclically ordered quadruple violating chord separation: `a < b < c < d`
/// with `a, c` in one difference and `b, d` in the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingWitness {
    pub a: u8,
    pub b: u8,
    pub c: u8,
    pub d: u8,
}

impl CrossingWitness {
    pub fn as_array(self) -> [u8; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

/// Diagnostic companion to [`chord_separated`]: present iff the pair is not
/// chord separated. Returns the first element of each of the first four
/// alternating runs.
pub fn crossing_witness(s: Subset, t: Subset, g: GroundSet) -> Option<CrossingWitness> {
    let x = s.minus(t);
    let y = t.minus(s);
    if x.is_empty() || y.is_empty() || chord_separated(s, t, g) {
        return None;
    }
    let mut run_starts = Vec::with_capacity(4);
    let mut prev = None;
    for i in x.union(y).elems() {
        let side = x.contains(i);
        if prev != Some(side) {
            run_starts.push(i);
            prev = Some(side);
        }
        if run_starts.len() == 4 {
            break;
        }
    }
    debug_assert_eq!(run_starts.len(), 4);
    Some(CrossingWitness {
        a: run_starts[0],
        b: run_starts[1],
        c: run_starts[2],
        d: run_starts[3],
    })
}

/// True iff `S` is a cyclic interval `[a, b]`, the empty set, or all of `[n]`.
pub fn is_cyclic_interval(s: Subset, g: GroundSet) -> bool {
    debug_assert!(s.fits(g));
    if s.is_empty() || s == g.full() {
        return true;
    }
    // An interval's indicator changes value exactly twice around the circle.
    (s.mask() ^ s.rotate(g).mask()).count_ones() == 2
}

/// The largest number of consecutive non-elements between two cyclically
/// adjacent elements of `T`. For a singleton this is `n − 1`.
pub fn maxgap(t: Subset, g: GroundSet) -> Result<u32> {
    debug_assert!(t.fits(g));
    if t.is_empty() {
        return Err(Error::EmptySubset);
    }
    let elems = t.to_vec();
    let n = g.n() as u32;
    let mut best = 0;
    for (j, &a) in elems.iter().enumerate() {
        let b = elems[(j + 1) % elems.len()];
        let gap = (b as u32 + n - a as u32 - 1) % n;
        best = best.max(gap);
    }
    // A singleton has a single "self-gap" of size n − 1.
    if elems.len() == 1 {
        best = n - 1;
    }
    Ok(best)
}


#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: u8) -> GroundSet {
        GroundSet::new(n).unwrap()
    }

    fn sub(elems: &[u8]) -> Subset {
        Subset::from_elems(elems)
    }

    #[test]
    fn surrounds_examples() {
        assert!(surrounds(sub(&[]), sub(&[1, 3]), g(4)));
        assert!(!surrounds(sub(&[2]), sub(&[1, 3]), g(4)));
        // S−T = {2}, T−S = {3,4}: nothing from S−T strictly between 3 and 4.
        assert!(surrounds(sub(&[1, 2]), sub(&[1, 3, 4]), g(4)));
        assert!(brute::surrounds(sub(&[1, 2]), sub(&[1, 3, 4]), g(4)));
    }

    #[test]
    fn strongly_separated_examples() {
        assert!(strongly_separated(sub(&[1, 2]), sub(&[3, 4]), g(4)));
        assert!(!strongly_separated(sub(&[2]), sub(&[1, 3]), g(4)));
        assert!(strongly_separated(sub(&[2, 4]), sub(&[2, 4]), g(5)));
    }

    #[test]
    fn weakly_separated_examples() {
        assert!(!weakly_separated(sub(&[1, 4]), sub(&[2, 3, 5]), g(5)));
        assert!(!brute::weakly_separated(sub(&[1, 4]), sub(&[2, 3, 5]), g(5)));
        assert!(!weakly_separated(sub(&[2]), sub(&[1, 3]), g(4)));
        assert!(weakly_separated(sub(&[1, 3, 5]), sub(&[1, 3, 6]), g(6)));
    }

    #[test]
    fn chord_separated_examples() {
        assert!(chord_separated(sub(&[2]), sub(&[1, 3]), g(4)));
        assert!(!chord_separated(sub(&[1, 3]), sub(&[2, 4]), g(4)));
        assert!(!chord_separated(sub(&[2, 5]), sub(&[1, 3]), g(5)));
        assert!(!brute::chord_separated(sub(&[2, 5]), sub(&[1, 3]), g(5)));
    }

    #[test]
    fn witness_examples() {
        assert_eq!(
            crossing_witness(sub(&[1, 3]), sub(&[2, 4]), g(4)).map(CrossingWitness::as_array),
            Some([1, 2, 3, 4])
        );
        assert_eq!(crossing_witness(sub(&[1, 2]), sub(&[2, 3]), g(4)), None);
        let w = crossing_witness(sub(&[2, 5]), sub(&[1, 3]), g(5)).unwrap();
        assert_eq!(w.as_array(), [1, 2, 3, 5]);
    }

    #[test]
    fn cyclic_interval_examples() {
        assert!(is_cyclic_interval(sub(&[5, 6, 1]), g(6)));
        assert!(!is_cyclic_interval(sub(&[1, 3]), g(4)));
        assert!(is_cyclic_interval(Subset::EMPTY, g(5)));
        assert!(is_cyclic_interval(g(5).full(), g(5)));
    }

    #[test]
    fn maxgap_examples() {
        assert_eq!(maxgap(sub(&[1, 4]), g(6)).unwrap(), 2);
        assert_eq!(maxgap(sub(&[2]), g(5)).unwrap(), 4);
        assert_eq!(maxgap(sub(&[1, 2, 3]), g(6)).unwrap(), 3);
        assert_eq!(maxgap(Subset::EMPTY, g(4)), Err(Error::EmptySubset));
    }

    /// Exhaustive n ≤ 7 agreement with the brute-force oracles plus the
    /// definitional identities. The full n ≤ 8 sweep runs in the acceptance
    /// suite.
    #[test]
    fn exhaustive_small_n() {
        for n in 1..=7 {
            let g = g(n);
            for s in g.subsets().unwrap() {
                for t in g.subsets().unwrap() {
                    let ch = chord_separated(s, t, g);
                    assert_eq!(ch, brute::chord_separated(s, t, g));
                    assert_eq!(surrounds(s, t, g), brute::surrounds(s, t, g));
                    assert_eq!(ch, surrounds(s, t, g) || surrounds(t, s, g));
                    let wk = weakly_separated(s, t, g);
                    assert!(!wk || ch);
                    assert!(!strongly_separated(s, t, g) || wk);
                    if s.card() == t.card() {
                        assert_eq!(wk, ch);
                    }
                    // symmetry and invariances
                    assert_eq!(ch, chord_separated(t, s, g));
                    assert_eq!(wk, weakly_separated(t, s, g));
                    assert_eq!(ch, chord_separated(s.rotate(g), t.rotate(g), g));
                    assert_eq!(ch, chord_separated(s.complement(g), t.complement(g), g));
                    assert_eq!(crossing_witness(s, t, g).is_none(), ch);
                    if let Some(w) = crossing_witness(s, t, g) {
                        let [a, b, c, d] = w.as_array();
                        assert!(a < b && b < c && c < d);
                        let x = s.minus(t);
                        let y = t.minus(s);
                        let alt_x = x.contains(a) && y.contains(b) && x.contains(c) && y.contains(d);
                        let alt_y = y.contains(a) && x.contains(b) && y.contains(c) && x.contains(d);
                        assert!(alt_x || alt_y);
                    }
                }
            }
        }
    }
}
