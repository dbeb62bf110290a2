//! Exact scalars and dense linear algebra.
//!
//! Two concrete scalar fields are provided: arbitrary precision rationals
//! ([`Rational`]) and prime fields ([`Fp`]). Algebraic number fields used for
//! non-rational intersection points live in [`crate::poly::numfield`] and
//! implement the same [`Field`] trait, so elimination and polynomial
//! arithmetic are written once.

mod fp;
mod matrix;
mod rational;

use std::fmt;

pub use fp::{Fp, RNG_PRIMES, SCAN_PRIMES};
pub use matrix::Matrix;
pub use rational::{bit_weight, format_rational, parse_rational, rat, reduce_mod_p, Rational};

/// A field whose elements carry whatever context they need (a modulus, a
/// defining polynomial), so that constants can be produced from any element.
pub trait Field: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `None` exactly for zero.
    fn inv(&self) -> Option<Self>;
    /// Image of a rational number; `None` when it has no image (denominator
    /// vanishing in positive characteristic).
    fn from_rational_like(&self, r: &Rational) -> Option<Self>;

    fn from_i64_like(&self, n: i64) -> Self {
        self.from_rational_like(&Rational::from_integer(n.into()))
            .expect("integers always have an image")
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        Some(self.mul(&rhs.inv()?))
    }

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    /// Size estimate used to prefer small pivots during elimination.
    fn weight(&self) -> u64 {
        0
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}
