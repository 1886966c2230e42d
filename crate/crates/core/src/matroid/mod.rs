//! Multiplicity matroids stored as dense rank and multiplicity tables.
//!
//! A [`MultiplicityMatroid`] on `n` elements holds `rank[A]` and `mult[A]` for
//! every one of the `2^n` subsets `A`, indexed by the subset's bitmask.
//! Minors relabel their elements to `0..k` but keep the original element
//! labels, so polynomials built from a minor use the same `v_e` / `u_e`
//! variables as the matroid it came from.

mod axioms;

use num_bigint::BigInt;
use num_traits::{One, Signed};

pub use axioms::{
    check_arithmetic_axioms, check_matroid_axioms, AxiomReport, AxiomViolation, RankViolation,
};

use crate::error::MatroidError;
use crate::subset::{expansion_table, Subset};

/// Largest ground set the constructors accept unless told otherwise.
pub const DEFAULT_SIZE_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityMatroid {
    rank: Vec<u32>,
    mult: Vec<BigInt>,
    labels: Vec<u32>,
}

fn size_of_table(len: usize) -> Option<usize> {
    len.is_power_of_two().then(|| len.trailing_zeros() as usize)
}

impl MultiplicityMatroid {
    /// Builds a multiplicity matroid from full tables, checking the matroid
    /// rank axioms and positivity of the multiplicity. The arithmetic axioms
    /// are not required.
    pub fn from_tables(rank: Vec<u32>, mult: Vec<BigInt>) -> Result<Self, MatroidError> {
        let n = size_of_table(rank.len()).ok_or(MatroidError::TableSize {
            expected: rank.len().next_power_of_two(),
            found: rank.len(),
        })?;
        let labels = (0..n as u32).collect();
        Self::from_labelled_tables(rank, mult, labels)
    }

    pub fn from_labelled_tables(
        rank: Vec<u32>,
        mult: Vec<BigInt>,
        labels: Vec<u32>,
    ) -> Result<Self, MatroidError> {
        let n = labels.len();
        if n > 63 {
            return Err(MatroidError::TooLarge { size: n, limit: 63 });
        }
        if rank.len() != 1 << n {
            return Err(MatroidError::TableSize {
                expected: 1 << n,
                found: rank.len(),
            });
        }
        if mult.len() != rank.len() {
            return Err(MatroidError::TableSize {
                expected: rank.len(),
                found: mult.len(),
            });
        }
        check_matroid_axioms(&rank).map_err(MatroidError::NotAMatroid)?;
        if let Some(i) = mult.iter().position(|m| !m.is_positive()) {
            return Err(MatroidError::NonpositiveMultiplicity {
                set: Subset(i as u64),
            });
        }
        Ok(MultiplicityMatroid { rank, mult, labels })
    }

    /// Same rank table with the trivial multiplicity.
    pub fn from_rank_table(rank: Vec<u32>) -> Result<Self, MatroidError> {
        let mult = vec![BigInt::one(); rank.len()];
        Self::from_tables(rank, mult)
    }

    /// Skips validation; callers guarantee the invariants.
    pub(crate) fn from_parts(rank: Vec<u32>, mult: Vec<BigInt>, labels: Vec<u32>) -> Self {
        debug_assert_eq!(rank.len(), 1 << labels.len());
        debug_assert_eq!(mult.len(), rank.len());
        MultiplicityMatroid { rank, mult, labels }
    }

    /// Replaces the multiplicity function, keeping the underlying matroid.
    pub fn with_multiplicity(&self, mult: Vec<BigInt>) -> Result<Self, MatroidError> {
        if mult.len() != self.rank.len() {
            return Err(MatroidError::TableSize {
                expected: self.rank.len(),
                found: mult.len(),
            });
        }
        if let Some(i) = mult.iter().position(|m| !m.is_positive()) {
            return Err(MatroidError::NonpositiveMultiplicity {
                set: Subset(i as u64),
            });
        }
        Ok(MultiplicityMatroid {
            rank: self.rank.clone(),
            mult,
            labels: self.labels.clone(),
        })
    }

    /// Renames the elements; polynomial variables follow the labels.
    pub fn with_labels(mut self, labels: Vec<u32>) -> Result<Self, MatroidError> {
        if labels.len() != self.labels.len() {
            return Err(MatroidError::LabelCount {
                expected: self.labels.len(),
                found: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    /// Number of elements.
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.size())
    }

    pub fn rank(&self, a: Subset) -> u32 {
        self.rank[a.index()]
    }

    /// Rank of the whole ground set.
    pub fn total_rank(&self) -> u32 {
        self.rank[self.ground().index()]
    }

    pub fn mult(&self, a: Subset) -> &BigInt {
        &self.mult[a.index()]
    }

    pub fn rank_table(&self) -> &[u32] {
        &self.rank
    }

    pub fn mult_table(&self) -> &[BigInt] {
        &self.mult
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, e: usize) -> u32 {
        self.labels[e]
    }

    /// `rk*(A) = |A| + rk(X \ A) - rk(X)`.
    pub fn dual_rank(&self, a: Subset) -> u32 {
        let complement = self.ground().difference(a);
        a.len() as u32 + self.rank(complement) - self.total_rank()
    }

    /// The table of [`dual_rank`](Self::dual_rank) over all subsets.
    pub fn dual_rank_table(&self) -> Vec<u32> {
        Subset::all(self.size())
            .map(|a| self.dual_rank(a))
            .collect()
    }

    pub fn has_trivial_multiplicity(&self) -> bool {
        self.mult.iter().all(One::is_one)
    }

    /// The underlying matroid with multiplicity identically 1.
    pub fn trivialized(&self) -> MultiplicityMatroid {
        MultiplicityMatroid {
            rank: self.rank.clone(),
            mult: vec![BigInt::one(); self.mult.len()],
            labels: self.labels.clone(),
        }
    }

    /// Restriction to `t`: rank and multiplicity restricted to subsets of `t`.
    pub fn restriction(&self, t: Subset) -> MultiplicityMatroid {
        let elems: Vec<usize> = t.elements().collect();
        let expand = expansion_table(&elems);
        MultiplicityMatroid {
            rank: expand.iter().map(|&a| self.rank[a as usize]).collect(),
            mult: expand
                .iter()
                .map(|&a| self.mult[a as usize].clone())
                .collect(),
            labels: elems.iter().map(|&e| self.labels[e]).collect(),
        }
    }

    /// Contraction of `t`: ground set `X \ t` with `rk'(A) = rk(A ∪ t) - rk(t)`
    /// and `m'(A) = m(A ∪ t)`.
    pub fn contraction(&self, t: Subset) -> MultiplicityMatroid {
        let elems: Vec<usize> = self.ground().difference(t).elements().collect();
        let expand = expansion_table(&elems);
        let base = self.rank(t);
        MultiplicityMatroid {
            rank: expand
                .iter()
                .map(|&a| self.rank[(a | t.bits()) as usize] - base)
                .collect(),
            mult: expand
                .iter()
                .map(|&a| self.mult[(a | t.bits()) as usize].clone())
                .collect(),
            labels: elems.iter().map(|&e| self.labels[e]).collect(),
        }
    }

    /// Pointwise product of multiplicities over a shared underlying matroid.
    pub fn product(
        &self,
        other: &MultiplicityMatroid,
    ) -> Result<MultiplicityMatroid, MatroidError> {
        if !self.same_underlying(other) {
            return Err(MatroidError::UnderlyingMatroidMismatch);
        }
        Ok(MultiplicityMatroid {
            rank: self.rank.clone(),
            mult: self
                .mult
                .iter()
                .zip(&other.mult)
                .map(|(a, b)| a * b)
                .collect(),
            labels: self.labels.clone(),
        })
    }

    /// Same size, same labels and same rank table.
    pub fn same_underlying(&self, other: &MultiplicityMatroid) -> bool {
        self.labels == other.labels && self.rank == other.rank
    }

    pub fn check_axioms(&self) -> AxiomReport {
        check_arithmetic_axioms(self)
    }
}
