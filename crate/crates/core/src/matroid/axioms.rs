//! Exhaustive checkers for the matroid rank axioms and the four axioms of an
//! arithmetic matroid.
//!
//! Every checker scans subsets in increasing mask order and reports the
//! first violation it meets, so counterexamples are deterministic even though
//! the outer scan runs in parallel.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::MultiplicityMatroid;
use crate::subset::Subset;

/// Why a rank table is not the rank function of a matroid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RankViolation {
    /// The table length is not `2^n`.
    TableLength { len: usize },
    /// `rk(∅) != 0`.
    EmptySet,
    /// `rk(A ∪ {e}) - rk(A)` is neither 0 nor 1.
    UnitIncrease { set: Subset, element: usize },
    /// `rk(A ∪ B) + rk(A ∩ B) > rk(A) + rk(B)`.
    Submodularity { first: Subset, second: Subset },
}

impl fmt::Display for RankViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankViolation::TableLength { len } => {
                write!(f, "table length {len} is not a power of two")
            }
            RankViolation::EmptySet => write!(f, "rank of the empty set is not 0"),
            RankViolation::UnitIncrease { set, element } => {
                write!(
                    f,
                    "adding {element} to {set} changes the rank by more than one or decreases it"
                )
            }
            RankViolation::Submodularity { first, second } => {
                write!(f, "{first} and {second} violate submodularity")
            }
        }
    }
}

/// Validates a rank table indexed by subset masks.
///
/// Submodularity is checked in its local form
/// `rk(A+e) + rk(A+f) >= rk(A+e+f) + rk(A)`, which together with the
/// unit-increase condition is equivalent to submodularity over all pairs and
/// costs `O(2^n n^2)` instead of `O(4^n)`.
pub fn check_matroid_axioms(rank: &[u32]) -> Result<(), RankViolation> {
    if !rank.len().is_power_of_two() {
        return Err(RankViolation::TableLength { len: rank.len() });
    }
    let n = rank.len().trailing_zeros() as usize;
    if rank[0] != 0 {
        return Err(RankViolation::EmptySet);
    }
    let unit = (0..rank.len()).into_par_iter().find_map_first(|a| {
        (0..n)
            .filter(|&e| a >> e & 1 == 0)
            .find(|&e| {
                let up = rank[a | 1 << e];
                up < rank[a] || up > rank[a] + 1
            })
            .map(|element| RankViolation::UnitIncrease {
                set: Subset(a as u64),
                element,
            })
    });
    if let Some(v) = unit {
        return Err(v);
    }
    let submodular = (0..rank.len()).into_par_iter().find_map_first(|a| {
        for e in (0..n).filter(|&e| a >> e & 1 == 0) {
            for f in (e + 1..n).filter(|&f| a >> f & 1 == 0) {
                let (ae, af, aef) = (a | 1 << e, a | 1 << f, a | 1 << e | 1 << f);
                if rank[aef] + rank[a] > rank[ae] + rank[af] {
                    return Some(RankViolation::Submodularity {
                        first: Subset(ae as u64),
                        second: Subset(af as u64),
                    });
                }
            }
        }
        None
    });
    submodular.map_or(Ok(()), Err)
}

/// A witness that one of the arithmetic axioms fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AxiomViolation {
    /// Axiom (1): the divisibility required between `m(A)` and `m(A ∪ {e})` fails.
    Divisibility { set: Subset, element: usize },
    /// Axiom (2): `B = A ∪ F ∪ T` satisfies the molecule condition but
    /// `m(A) m(B) != m(A ∪ F) m(A ∪ T)`.
    Molecule {
        lower: Subset,
        upper: Subset,
        free: Subset,
        torsion: Subset,
    },
    /// Axiom (3): `rk(A) = rk(B)` and the alternating sum of `m(T)` over
    /// `A ⊆ T ⊆ B` is negative.
    Positivity {
        lower: Subset,
        upper: Subset,
        #[serde(serialize_with = "decimal")]
        sum: BigInt,
    },
    /// Axiom (4): `rk*(A) = rk*(B)` and the alternating sum of `m(X \ T)` over
    /// `A ⊆ T ⊆ B` is negative.
    DualPositivity {
        lower: Subset,
        upper: Subset,
        #[serde(serialize_with = "decimal")]
        sum: BigInt,
    },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::Divisibility { set, element } => {
                write!(f, "divisibility fails for A = {set}, e = {element}")
            }
            AxiomViolation::Molecule {
                lower,
                upper,
                free,
                torsion,
            } => write!(
                f,
                "molecule A = {lower}, B = {upper} with F = {free}, T = {torsion}: m(A) m(B) != m(A+F) m(A+T)"
            ),
            AxiomViolation::Positivity { lower, upper, sum } => {
                write!(f, "alternating sum over [{lower}, {upper}] is {sum}")
            }
            AxiomViolation::DualPositivity { lower, upper, sum } => {
                write!(f, "dual alternating sum over [{lower}, {upper}] is {sum}")
            }
        }
    }
}

fn decimal<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Outcome of [`check_arithmetic_axioms`]; `None` means the axiom holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub matroid: Option<RankViolation>,
    pub axiom1: Option<AxiomViolation>,
    pub axiom2: Option<AxiomViolation>,
    pub axiom3: Option<AxiomViolation>,
    pub axiom4: Option<AxiomViolation>,
}

impl AxiomReport {
    pub fn matroid_ok(&self) -> bool {
        self.matroid.is_none()
    }

    /// True when the input is an arithmetic matroid.
    pub fn all_hold(&self) -> bool {
        self.matroid.is_none()
            && self.axiom1.is_none()
            && self.axiom2.is_none()
            && self.axiom3.is_none()
            && self.axiom4.is_none()
    }
}

pub fn check_arithmetic_axioms(m: &MultiplicityMatroid) -> AxiomReport {
    AxiomReport {
        matroid: check_matroid_axioms(m.rank_table()).err(),
        axiom1: divisibility(m),
        axiom2: molecules(m),
        axiom3: positivity(m, false),
        axiom4: positivity(m, true),
    }
}

fn divisibility(m: &MultiplicityMatroid) -> Option<AxiomViolation> {
    let n = m.size();
    Subset::all(n)
        .collect::<Vec<_>>()
        .into_par_iter()
        .find_map_first(|a| {
            (0..n).filter(|&e| !a.contains(e)).find_map(|e| {
                let ae = a.with(e);
                let ok = if m.rank(ae) == m.rank(a) {
                    m.mult(a).is_multiple_of(m.mult(ae))
                } else {
                    m.mult(ae).is_multiple_of(m.mult(a))
                };
                (!ok).then_some(AxiomViolation::Divisibility { set: a, element: e })
            })
        })
}

fn molecules(m: &MultiplicityMatroid) -> Option<AxiomViolation> {
    let ground = m.ground();
    Subset::all(m.size())
        .collect::<Vec<_>>()
        .into_par_iter()
        .find_map_first(|a| {
            let base = m.rank(a);
            for extra in ground.difference(a).subsets() {
                let b = a.union(extra);
                for free in extra.subsets() {
                    let torsion = extra.difference(free);
                    // Cheap necessary conditions before the full interval scan.
                    if m.rank(b) != base + free.len() as u32
                        || m.rank(a.union(free)) != base + free.len() as u32
                    {
                        continue;
                    }
                    let is_molecule = extra
                        .subsets()
                        .all(|w| m.rank(a.union(w)) == base + w.intersection(free).len() as u32);
                    if !is_molecule {
                        continue;
                    }
                    let lhs = m.mult(a) * m.mult(b);
                    let rhs = m.mult(a.union(free)) * m.mult(a.union(torsion));
                    if lhs != rhs {
                        return Some(AxiomViolation::Molecule {
                            lower: a,
                            upper: b,
                            free,
                            torsion,
                        });
                    }
                }
            }
            None
        })
}

/// Axiom (3), or axiom (4) when `dual` is set.
fn positivity(m: &MultiplicityMatroid, dual: bool) -> Option<AxiomViolation> {
    let ground = m.ground();
    let rank = |s: Subset| if dual { m.dual_rank(s) } else { m.rank(s) };
    let weight = |t: Subset| {
        if dual {
            m.mult(ground.difference(t))
        } else {
            m.mult(t)
        }
    };
    Subset::all(m.size())
        .collect::<Vec<_>>()
        .into_par_iter()
        .find_map_first(|a| {
            for extra in ground.difference(a).subsets() {
                let b = a.union(extra);
                if rank(a) != rank(b) {
                    continue;
                }
                let mut sum = BigInt::zero();
                for w in extra.subsets() {
                    if w.len() % 2 == 0 {
                        sum += weight(a.union(w));
                    } else {
                        sum -= weight(a.union(w));
                    }
                }
                if sum.is_negative() {
                    return Some(if dual {
                        AxiomViolation::DualPositivity {
                            lower: a,
                            upper: b,
                            sum,
                        }
                    } else {
                        AxiomViolation::Positivity {
                            lower: a,
                            upper: b,
                            sum,
                        }
                    });
                }
            }
            None
        })
}
