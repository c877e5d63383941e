//! Exact linear algebra over ℚ and ℤ.
//!
//! Dense matrices ([`Matrix`]) carry the small, user-facing computations; the sparse
//! [`SparseMatrix`] / [`Echelon`] pair carries the large structured ones (coinvariants,
//! cube totalizations, order-complex boundaries). Both are exact.

mod dense;
mod homology;
mod matrix;
mod poset;
mod snf;
mod sparse;

pub use dense::{cokernel, determinant, kernel_basis, rank, restricted_trace, solve, Cokernel};
pub use homology::{homology, homology_with_cycles, ChainComplex, DegreeHomology, HomologyResult};
pub use matrix::{int, rat, IntegerMatrix, Matrix, Rational, RationalMatrix};
pub use poset::{poset_colimit, poset_limit_dimension, Colimit, Cover, PosetDiagram};
pub use snf::{invariant_factors, smith_normal_form, SmithForm};
pub use sparse::{add_scaled, sparse_kernel, sparse_rank, unit, Echelon, Quotient, SparseMatrix, SparseVec};
