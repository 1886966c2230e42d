//! Building multiplicity matroids from descriptions.

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::error::MatroidError;
use crate::linalg;
use crate::matroid::{MultiplicityMatroid, DEFAULT_SIZE_LIMIT};
use crate::subset::Subset;

/// A serializable description of a multiplicity matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatroidSpec {
    /// `U_{rank,size}`, with the trivial multiplicity unless a full table is given.
    Uniform {
        rank: usize,
        size: usize,
        multiplicity: Option<Vec<BigInt>>,
    },
    /// The cycle matroid of a multigraph; loops and parallel edges allowed.
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    /// Integer columns of a common height.
    Matrix { columns: Vec<Vec<BigInt>> },
    /// Full rank and multiplicity tables indexed by subset mask.
    Explicit {
        size: usize,
        rank: Vec<u32>,
        multiplicity: Vec<BigInt>,
    },
}

impl MatroidSpec {
    pub fn size(&self) -> usize {
        match self {
            MatroidSpec::Uniform { size, .. } | MatroidSpec::Explicit { size, .. } => *size,
            MatroidSpec::Graphic { edges, .. } => edges.len(),
            MatroidSpec::Matrix { columns } => columns.len(),
        }
    }

    pub fn build(&self) -> Result<MultiplicityMatroid, MatroidError> {
        self.build_with_limit(DEFAULT_SIZE_LIMIT)
    }

    /// Builds the matroid, rejecting ground sets larger than `limit`.
    pub fn build_with_limit(&self, limit: usize) -> Result<MultiplicityMatroid, MatroidError> {
        check_size(self.size(), limit)?;
        match self {
            MatroidSpec::Uniform {
                rank,
                size,
                multiplicity,
            } => {
                let m = build_uniform(*rank, *size)?;
                match multiplicity {
                    Some(table) => m.with_multiplicity(table.clone()),
                    None => Ok(m),
                }
            }
            MatroidSpec::Graphic { vertices, edges } => build_graphic(*vertices, edges),
            MatroidSpec::Matrix { columns } => build_matrix(columns),
            MatroidSpec::Explicit {
                size,
                rank,
                multiplicity,
            } => explicit(*size, rank.clone(), multiplicity.clone()),
        }
    }

    /// The explicit description of an already built matroid.
    pub fn from_matroid(m: &MultiplicityMatroid) -> MatroidSpec {
        MatroidSpec::Explicit {
            size: m.size(),
            rank: m.rank_table().to_vec(),
            multiplicity: m.mult_table().to_vec(),
        }
    }
}

fn check_size(size: usize, limit: usize) -> Result<(), MatroidError> {
    if size > limit.min(63) {
        return Err(MatroidError::TooLarge {
            size,
            limit: limit.min(63),
        });
    }
    Ok(())
}

/// `U_{r,n}`: `rk(A) = min(|A|, r)` with the trivial multiplicity.
pub fn uniform(r: usize, n: usize) -> Result<MultiplicityMatroid, MatroidError> {
    check_size(n, DEFAULT_SIZE_LIMIT)?;
    build_uniform(r, n)
}

fn build_uniform(r: usize, n: usize) -> Result<MultiplicityMatroid, MatroidError> {
    if r > n {
        return Err(MatroidError::RankExceedsSize { rank: r, size: n });
    }
    let rank = Subset::all(n).map(|a| a.len().min(r) as u32).collect();
    Ok(trivial(rank, n))
}

fn trivial(rank: Vec<u32>, n: usize) -> MultiplicityMatroid {
    let mult = vec![BigInt::one(); rank.len()];
    MultiplicityMatroid::from_parts(rank, mult, (0..n as u32).collect())
}

/// Cycle matroid: `rk(A) = vertices - components(V, A)`.
pub fn graphic(
    vertices: usize,
    edges: &[(usize, usize)],
) -> Result<MultiplicityMatroid, MatroidError> {
    check_size(edges.len(), DEFAULT_SIZE_LIMIT)?;
    build_graphic(vertices, edges)
}

fn build_graphic(
    vertices: usize,
    edges: &[(usize, usize)],
) -> Result<MultiplicityMatroid, MatroidError> {
    for (i, &(u, v)) in edges.iter().enumerate() {
        if let Some(endpoint) = [u, v].into_iter().find(|&x| x >= vertices) {
            return Err(MatroidError::EndpointOutOfRange {
                edge: i,
                endpoint,
                vertices,
            });
        }
    }
    let rank = Subset::all(edges.len())
        .map(|a| {
            let mut parent: Vec<usize> = (0..vertices).collect();
            let mut merged = 0;
            for e in a.elements() {
                let (ru, rv) = (find(&mut parent, edges[e].0), find(&mut parent, edges[e].1));
                if ru != rv {
                    parent[ru] = rv;
                    merged += 1;
                }
            }
            merged
        })
        .collect();
    Ok(trivial(rank, edges.len()))
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// The arithmetic matroid of a list of integer vectors: `rk(A)` is the
/// rational rank of the columns in `A` and `m(A)` the product of the nonzero
/// invariant factors of that submatrix (1 for the empty set).
pub fn from_integer_matrix<T>(columns: &[Vec<T>]) -> Result<MultiplicityMatroid, MatroidError>
where
    T: Clone + Into<BigInt>,
{
    check_size(columns.len(), DEFAULT_SIZE_LIMIT)?;
    build_matrix(columns)
}

fn build_matrix<T>(columns: &[Vec<T>]) -> Result<MultiplicityMatroid, MatroidError>
where
    T: Clone + Into<BigInt>,
{
    let n = columns.len();
    let height = columns.first().map_or(0, Vec::len);
    if let Some((column, c)) = columns.iter().enumerate().find(|(_, c)| c.len() != height) {
        return Err(MatroidError::HeightMismatch {
            column,
            expected: height,
            found: c.len(),
        });
    }
    let columns: Vec<Vec<BigInt>> = columns
        .iter()
        .map(|c| c.iter().cloned().map(Into::into).collect())
        .collect();
    let tables: Vec<(u32, BigInt)> = Subset::all(n)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|a| {
            let sub = submatrix(&columns, height, a);
            (
                linalg::rank(&sub) as u32,
                linalg::torsion_multiplicity(&sub),
            )
        })
        .collect();
    let (rank, mult) = tables.into_iter().unzip();
    Ok(MultiplicityMatroid::from_parts(
        rank,
        mult,
        (0..n as u32).collect(),
    ))
}

/// Row-major `height x |a|` matrix of the columns selected by `a`.
pub fn submatrix(columns: &[Vec<BigInt>], height: usize, a: Subset) -> Vec<Vec<BigInt>> {
    if a.is_empty() {
        return Vec::new();
    }
    (0..height)
        .map(|r| a.elements().map(|c| columns[c][r].clone()).collect())
        .collect()
}

/// Explicit tables; the rank table must be a matroid and every multiplicity
/// positive. The arithmetic axioms are not required.
pub fn explicit(
    size: usize,
    rank: Vec<u32>,
    multiplicity: Vec<BigInt>,
) -> Result<MultiplicityMatroid, MatroidError> {
    check_size(size, 63)?;
    if rank.len() != 1 << size {
        return Err(MatroidError::TableSize {
            expected: 1 << size,
            found: rank.len(),
        });
    }
    MultiplicityMatroid::from_tables(rank, multiplicity)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(e: &[usize]) -> Subset {
        Subset::from_elements(e.iter().copied())
    }

    #[test]
    fn uniform_examples() {
        let u02 = uniform(0, 2).unwrap();
        assert_eq!(u02.total_rank(), 0);
        let u12 = uniform(1, 2).unwrap();
        assert_eq!(u12.rank(set(&[0])), 1);
        assert_eq!(u12.rank(set(&[1])), 1);
        assert_eq!(u12.rank(set(&[0, 1])), 1);
        let u22 = uniform(2, 2).unwrap();
        assert!(Subset::all(2).all(|a| u22.rank(a) == a.len() as u32));
        assert_eq!(uniform(2, 4).unwrap().rank(set(&[0, 1, 2])), 2);
        assert_eq!(
            uniform(3, 2).unwrap_err(),
            MatroidError::RankExceedsSize { rank: 3, size: 2 }
        );
    }

    #[test]
    fn graphic_examples() {
        let k3 = graphic(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        for a in Subset::all(3) {
            assert_eq!(k3.rank(a), a.len().min(2) as u32);
        }
        let lp = graphic(1, &[(0, 0)]).unwrap();
        assert_eq!(lp.rank(set(&[0])), 0);
        let parallel = graphic(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(parallel.rank(set(&[0, 1])), 1);
        assert!(matches!(
            graphic(2, &[(0, 2)]),
            Err(MatroidError::EndpointOutOfRange { endpoint: 2, .. })
        ));
    }

    #[test]
    fn k3_matches_u23() {
        let k3 = graphic(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3, uniform(2, 3).unwrap());
    }

    #[test]
    fn matrix_examples() {
        let two = from_integer_matrix(&[vec![2]]).unwrap();
        assert_eq!(two.rank(set(&[0])), 1);
        assert_eq!(two.mult(set(&[0])), &BigInt::from(2));
        assert_eq!(two.mult(Subset::EMPTY), &BigInt::from(1));

        let diag = from_integer_matrix(&[vec![2, 0], vec![0, 3]]).unwrap();
        assert_eq!(diag.mult(set(&[0, 1])), &BigInt::from(6));

        let zero = from_integer_matrix(&[vec![0, 0]]).unwrap();
        assert_eq!(zero.rank(set(&[0])), 0);
        assert_eq!(zero.mult(set(&[0])), &BigInt::from(1));

        assert_eq!(
            from_integer_matrix(&[vec![1, 2], vec![1]]).unwrap_err(),
            MatroidError::HeightMismatch {
                column: 1,
                expected: 2,
                found: 1
            }
        );
    }

    #[test]
    fn matrix_three_columns_is_arithmetic() {
        let m = from_integer_matrix(&[vec![2, 0], vec![0, 3], vec![1, 1]]).unwrap();
        assert!(m.check_axioms().all_hold());
        // gcd of the 2x2 minors 6, 2, -3 is 1.
        assert_eq!(m.mult(m.ground()), &BigInt::from(1));
    }

    #[test]
    fn explicit_examples() {
        let m = explicit(1, vec![0, 1], vec![BigInt::from(1), BigInt::from(2)]).unwrap();
        assert_eq!(m, from_integer_matrix(&[vec![2]]).unwrap());
        // Rank 1 on each singleton, 0 on the pair: not even monotone.
        assert!(matches!(
            explicit(2, vec![0, 1, 1, 0], vec![BigInt::from(1); 4]),
            Err(MatroidError::NotAMatroid(_))
        ));
        assert_eq!(
            explicit(1, vec![0, 1], vec![BigInt::from(1), BigInt::from(0)]).unwrap_err(),
            MatroidError::NonpositiveMultiplicity { set: set(&[0]) }
        );
    }

    #[test]
    fn size_limit_is_enforced() {
        let spec = MatroidSpec::Uniform {
            rank: 1,
            size: 5,
            multiplicity: None,
        };
        assert!(spec.build_with_limit(5).is_ok());
        assert_eq!(
            spec.build_with_limit(4).unwrap_err(),
            MatroidError::TooLarge { size: 5, limit: 4 }
        );
        assert!(matches!(uniform(1, 21), Err(MatroidError::TooLarge { .. })));
    }
}
