//! Exact computation in the first Weyl algebra A1 = K<X, Y>/(YX - XY - 1)
//! and in the commutative plane K[x, y], over K = Q(sqrt2).
//!
//! The crate covers normal-ordered arithmetic, endomorphisms and
//! anti-endomorphisms given by generator images, involutions, the family of
//! maps commuting with the exchange involution, bounded automorphism
//! certificates, and tame factorization of plane automorphisms.

pub mod dixmier;
pub mod error;
pub mod linalg;
pub mod maps;
pub mod monomial;
pub mod parse;
pub mod plane;
pub mod sample;
pub mod scalar;
pub mod univariate;
pub mod weyl;

pub use error::{Error, ParseError, Result};
pub use maps::{AlgebraMap, GeneratorWord, Involution};
pub use plane::{CommPoly, PlaneMap};
pub use scalar::Scalar;
pub use univariate::UniPoly;
pub use weyl::{Kind, WeylPoly};
