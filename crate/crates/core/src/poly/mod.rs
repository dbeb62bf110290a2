//! Homogeneous polynomials in three variables and the elimination tools
//! built on them: gcds, resultants and certified intersection counts.

mod factor;
mod gcd;
mod hompoly;
pub mod numfield;
mod point;
mod resultant;
mod univariate;
mod zeros;

pub use factor::{factor, factor_square_free};
pub use gcd::{gcd, gcd_all};
pub use hompoly::{monomials, HomPoly, Monomial, VAR_NAMES};
pub use numfield::{NfElem, NumberField};
pub use point::{normalize, AlgPoint, ProjPoint};
pub use resultant::{fiber_poly, subresultant, subresultant_in_x, sylvester_det, sylvester_resultant};
pub(crate) use resultant::fiber_unipoly;
pub use univariate::UniPoly;
pub use zeros::{apply, common_zeros, random_gl3, CommonZero, CommonZeros, Transform, COORDINATE_RETRIES};
pub(crate) use zeros::single_root;

/// The coordinate form `X`.
pub fn x() -> HomPoly {
    HomPoly::var(0)
}

/// The coordinate form `Y`.
pub fn y() -> HomPoly {
    HomPoly::var(1)
}

/// The coordinate form `Z`.
pub fn z() -> HomPoly {
    HomPoly::var(2)
}
