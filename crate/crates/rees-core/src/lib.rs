//! Exact-arithmetic workbench for poset topology and permutation
//! enumeration: Rees products of ranked posets, Möbius functions, reduced
//! rational homology of order complexes, q-Eulerian polynomials,
//! (quasi)symmetric functions, and symmetric-group homology characters,
//! with a catalog of named verification suites tying them together.
//!
//! The flagship computation, end to end: the top homology dimension of
//! the Rees product of the truncated Boolean lattice with a chain is a
//! derangement number, and both engines (boundary-matrix ranks and the
//! Möbius recursion) agree on it.
//!
//! ```
//! use rees_core::catalog::{boolean_lattice, chain};
//! use rees_core::homology::{betti, mobius_invariant_hat};
//! use rees_core::rees::rees_product;
//!
//! let truncated = boolean_lattice(4).remove_bottom().unwrap();
//! let rees = rees_product(&truncated, &chain(4)).unwrap();
//! let b = betti(&rees, 100_000).unwrap();
//! assert_eq!(b.dims, vec![0, 0, 0, 9]); // nine derangements in S_4
//! assert_eq!(mobius_invariant_hat(&rees), -9); // (-1)^(4-1) * 9
//! ```

pub mod catalog;
pub mod characters;
pub mod complex;
pub mod equivariant;
pub mod error;
pub mod gf;
pub mod homology;
pub mod io;
pub mod label;
pub mod matrix;
pub mod partition;
pub mod perm;
pub mod poly;
pub mod poset;
pub mod random;
pub mod report;
pub mod rees;
pub mod series;
pub mod suites;
pub mod symfunc;

pub use characters::ClassFunction;
pub use error::{Error, Result};
pub use gf::Subspace;
pub use label::Label;
pub use partition::Partition;
pub use perm::Permutation;
pub use poly::MultiPoly;
pub use poset::{poset_isomorphic, IntervalKind, Poset};
pub use rees::{ideal_ij, psi_map, r_i_poset, rees_product};
pub use symfunc::SymFunc;
