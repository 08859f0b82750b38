//! Exact face enumeration for matroid base polytopes.
//!
//! The formula engine computes f-vectors of split matroid polytopes from
//! the matroid's cyclic-flat data alone, with no convex hull or face
//! lattice construction; a brute-force face-lattice oracle provides ground
//! truth at small scale. All arithmetic is exact integer arithmetic.

pub mod catalog;
pub mod engine;
pub mod matroid;
pub mod oracle;
pub mod poly;
pub mod subset;

pub use catalog::{build_matroid, MatroidSpec, ResultDocument};
pub use engine::{
    hypersimplex_f, matroid_f, rank_two_f, sparse_paving_f, split_matroid_f, SplitProfile,
};
pub use matroid::{LambdaTable, Matroid, MuTable};
pub use oracle::{f_vector_oracle, face_lattice, OracleLimits};
pub use poly::{binom, multinom, FPolynomial, LaurentPolynomial};
pub use subset::Subset;
