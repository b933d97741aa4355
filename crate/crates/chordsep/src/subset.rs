//! The ground set `[n] = {1, …, n}` and bitmask-encoded subsets.
//!
//! Elements are 1-based; element `i` occupies bit `i − 1`. The ground size
//! travels explicitly with every operation that depends on the cyclic order.

use crate::{Error, Result};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

/// Size of the ground set `[n]`. Predicates work up to `n = 62`; the
/// exhaustive operations cap themselves at `n = 16`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroundSet {
    n: u8,
}

/// Hard cap for operations that sweep all `2^n` subsets.
pub const EXHAUSTIVE_LIMIT: u8 = 16;

impl GroundSet {
    pub fn new(n: u8) -> Result<Self> {
        if n == 0 || n > 62 {
            return Err(Error::GroundSize(n as u64));
        }
        Ok(GroundSet { n })
    }

    pub fn n(self) -> u8 {
        self.n
    }

    pub fn full_mask(self) -> u64 {
        (1u64 << self.n) - 1
    }

    pub fn full(self) -> Subset {
        Subset(self.full_mask())
    }

    /// Elements `1..=n`.
    pub fn elems(self) -> impl Iterator<Item = u8> {
        1..=self.n
    }

    /// All `2^n` subsets in mask order. Guarded by the exhaustive cap.
    pub fn subsets(self) -> Result<impl Iterator<Item = Subset>> {
        self.check_exhaustive()?;
        Ok((0..=self.full_mask()).map(Subset))
    }

    pub fn check_exhaustive(self) -> Result<()> {
        if self.n > EXHAUSTIVE_LIMIT {
            return Err(Error::ExhaustiveBound {
                n: self.n,
                limit: EXHAUSTIVE_LIMIT,
            });
        }
        Ok(())
    }

    /// `i + 1` with wraparound, staying in `1..=n`.
    pub fn next_cyclic(self, i: u8) -> u8 {
        if i == self.n {
            1
        } else {
            i + 1
        }
    }

    /// The open cyclic interval `(a, b)` as a subset.
    pub fn open_interval(self, a: u8, b: u8) -> Subset {
        let mut s = Subset::EMPTY;
        let mut i = self.next_cyclic(a);
        while i != b {
            s = s.with(i);
            i = self.next_cyclic(i);
        }
        s
    }
}

/// A subset of `[n]`, encoded as a bitmask (element `i` ⇔ bit `i − 1`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_mask(mask: u64) -> Self {
        Subset(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn singleton(i: u8) -> Self {
        debug_assert!(i >= 1);
        Subset(1 << (i - 1))
    }

    pub fn from_elems(elems: &[u8]) -> Self {
        elems.iter().fold(Subset::EMPTY, |s, &i| s.with(i))
    }

    /// Strict parse used by deserialization: elements in `1..=62`, no
    /// duplicates.
    pub fn try_from_elems(elems: &[u8]) -> Result<Self> {
        let mut s = Subset::EMPTY;
        for &i in elems {
            if i == 0 || i > 62 || s.contains(i) {
                return Err(Error::InvalidDocument(format!(
                    "bad subset element list {elems:?}"
                )));
            }
            s = s.with(i);
        }
        Ok(s)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: u8) -> bool {
        debug_assert!(i >= 1);
        self.0 >> (i - 1) & 1 == 1
    }

    pub fn with(self, i: u8) -> Self {
        debug_assert!(i >= 1);
        Subset(self.0 | 1 << (i - 1))
    }

    pub fn without(self, i: u8) -> Self {
        debug_assert!(i >= 1);
        Subset(self.0 & !(1 << (i - 1)))
    }

    pub fn card(self) -> u8 {
        self.0.count_ones() as u8
    }

    pub fn union(self, other: Self) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn minus(self, other: Self) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn complement(self, g: GroundSet) -> Self {
        Subset(!self.0 & g.full_mask())
    }

    pub fn fits(self, g: GroundSet) -> bool {
        self.0 & !g.full_mask() == 0
    }

    pub fn check_fits(self, g: GroundSet) -> Result<()> {
        if self.fits(g) {
            Ok(())
        } else {
            Err(Error::SubsetOutOfRange(self.to_vec(), g.n()))
        }
    }

    pub fn min_elem(self) -> Option<u8> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as u8 + 1)
    }

    pub fn max_elem(self) -> Option<u8> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as u8)
    }

    /// Elements in increasing order.
    pub fn elems(self) -> Elems {
        Elems(self.0)
    }

    pub fn to_vec(self) -> Vec<u8> {
        self.elems().collect()
    }

    /// Cyclic rotation `i ↦ i + 1 (mod n)`.
    pub fn rotate(self, g: GroundSet) -> Self {
        let full = g.full_mask();
        let shifted = (self.0 << 1) & full;
        let wrapped = self.0 >> (g.n() - 1) & 1;
        Subset(shifted | wrapped)
    }

    /// Mask of positions strictly between the min and max element (a linear,
    /// not cyclic, notion).
    pub fn strict_inner_span(self) -> u64 {
        match (self.min_elem(), self.max_elem()) {
            (Some(lo), Some(hi)) if hi > lo + 1 => {
                let below_hi = (1u64 << (hi - 1)) - 1;
                let upto_lo = (1u64 << lo) - 1;
                below_hi & !upto_lo
            }
            _ => 0,
        }
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Self) -> Subset {
        self.union(rhs)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Self) -> Subset {
        self.intersection(rhs)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Self) -> Subset {
        self.minus(rhs)
    }
}

impl FromIterator<u8> for Subset {
    fn from_iter<T: IntoIterator<Item = u8>>(iter: T) -> Self {
        iter.into_iter().fold(Subset::EMPTY, |s, i| s.with(i))
    }
}

pub struct Elems(u64);

impl Iterator for Elems {
    type Item = u8;
    fn next(&mut self) -> Option<u8> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as u8 + 1;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.elems().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

// Subsets serialize as sorted integer arrays, e.g. [1,3,5].
impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_vec().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Subset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let elems = Vec::<u8>::deserialize(deserializer)?;
        Subset::try_from_elems(&elems).map_err(D::Error::custom)
    }
}

/// Binomial coefficient, exact in u64 at desk scale.
pub fn binomial(n: u8, k: u8) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num: u64 = 1;
    for j in 0..k as u64 {
        num = num * (n as u64 - j) / (j + 1);
    }
    num
}
