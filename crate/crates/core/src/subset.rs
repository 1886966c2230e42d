use std::fmt;

use serde::{Serialize, Serializer};

/// A subset of a ground set `{0, ..., n-1}` as a bitmask: element `e` is
/// present iff bit `e` is set.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// The whole ground set of size `n`.
    pub fn full(n: usize) -> Subset {
        assert!(n <= 64, "ground set of {n} elements does not fit a mask");
        if n == 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Subset {
        Subset(1u64 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elems: I) -> Subset {
        Subset(elems.into_iter().fold(0, |acc, e| acc | (1u64 << e)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn contains(self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }

    pub fn with(self, e: usize) -> Subset {
        Subset(self.0 | 1u64 << e)
    }

    pub fn without(self, e: usize) -> Subset {
        Subset(self.0 & !(1u64 << e))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Elements in increasing order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let e = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(e)
        })
    }

    /// All subsets of `self`, in increasing mask order, starting with the empty set.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let mask = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some(cur.wrapping_sub(mask) & mask)
            };
            Some(Subset(cur))
        })
    }

    /// All `2^n` subsets of a ground set of size `n`.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        Subset::full(n).subsets()
    }

    /// Comma-joined ascending elements, `""` for the empty set.
    pub fn key(self) -> String {
        let parts: Vec<String> = self.elements().map(|e| e.to_string()).collect();
        parts.join(",")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.key())
    }
}

impl Serialize for Subset {
    /// Serialized as its [`key`](Subset::key).
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.key())
    }
}

/// Maps each local mask over `elems.len()` elements to the mask over the
/// original ground set obtained by sending local element `i` to `elems[i]`.
pub(crate) fn expansion_table(elems: &[usize]) -> Vec<u64> {
    let mut table = vec![0u64; 1 << elems.len()];
    for local in 1..table.len() {
        let low = local.trailing_zeros() as usize;
        table[local] = table[local & (local - 1)] | 1u64 << elems[low];
    }
    table
}
