//! Exact computations with morphisms from the complex projective plane to the
//! Grassmannian `Gr(2, C^4)` of two-dimensional quotients of `C^4`.
//!
//! A morphism is presented by a surjection of vector bundles
//! `C^4 ⊗ O → E` with `E` of rank two. The crate builds the explicit split
//! (`E = O(a) ⊕ O(b)`) and tangent-bundle (`E = T`) surjections, certifies
//! surjectivity by exact elimination, computes the class
//! `(c2(E), c2(S))` in `H^4(Gr, Z)` by counting zeros of a generic section,
//! and decides realizability of classes with the Cayley–Bacharach rank
//! criterion.
//!
//! All arithmetic is exact: rationals via arbitrary precision integers,
//! prime fields for fast reduction checks, and simple algebraic number
//! fields for zeros that are not rational.

pub mod cayley_bacharach;
pub mod classify;
pub mod error;
pub mod exactalg;
pub mod grassmann;
pub mod morphisms;
pub mod poly;
pub mod rng;

pub use cayley_bacharach::{CbReport, PointConfig, PositionReport};
pub use classify::{realizability, ClassVerdict, Status, WitnessRecipe};
pub use error::{Error, Result};
pub use exactalg::{Field, Fp, Matrix, Rational};
pub use grassmann::{CohomClass, PlueckerPoint};
pub use morphisms::{example_split, SplitSurjection, TangentSurjection};
pub use poly::{HomPoly, ProjPoint};
pub use rng::Seed;
