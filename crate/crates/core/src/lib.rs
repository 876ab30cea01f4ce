//! Exact-arithmetic algebraic combinatorics: super semistandard Young tableaux,
//! hook Schur functions, parastatistics Fock-space characters, the Hecke algebra
//! H_r(q) with its Eulerian idempotent and ideal, the GL_q(m|n) R-matrix, and the
//! signed super-plactic monoid with p-restriction.
//!
//! Everything is computed over arbitrary-precision integers: Laurent polynomials
//! in q, their fractions, and multivariate power series truncated by total degree.
//! No floating point anywhere.

pub mod fock;
pub mod hecke;
pub mod laurent;
pub mod linalg;
pub mod partition;
pub mod plactic;
pub mod rmatrix;
pub mod series;
pub mod suite;
pub mod symfunc;
pub mod tableau;

pub use laurent::{LaurentFraction, LaurentPoly};
pub use partition::{EpsilonConfig, FrobeniusCoords, Partition};
pub use plactic::{CanonicalForm, SignedWord};
pub use series::TruncatedSeries;
pub use tableau::{SignedLetter, SuperTableau};
