//! Exact computation of multivariate and arithmetic Tutte polynomials of
//! multiplicity matroids, and verification of their convolution identities
//! by symbolic equality of canonical Laurent polynomials.
//!
//! ```
//! use arith_tutte::constructors::graphic;
//! use arith_tutte::convolution::verify_classical_kook;
//! use arith_tutte::tutte::classical_tutte;
//!
//! let k3 = graphic(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
//! assert_eq!(classical_tutte(&k3), "x^2 + x + y".parse().unwrap());
//! assert!(verify_classical_kook(&k3).equal);
//! ```
//!
//! The guide in `book/` walks through each module; its code blocks run as
//! doctests of this crate.

pub mod constructors;
pub mod convolution;
pub mod corpus;
pub mod error;
pub mod io;
pub mod linalg;
pub mod matroid;
pub mod poly;
pub mod report;
pub mod sampling;
pub mod subset;
pub mod tutte;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/matroids.md")]
    mod matroids {}
    #[doc = include_str!("../../../book/src/constructors.md")]
    mod constructors {}
    #[doc = include_str!("../../../book/src/axioms.md")]
    mod axioms {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/identities.md")]
    mod identities {}
    #[doc = include_str!("../../../book/src/corpus.md")]
    mod corpus {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
