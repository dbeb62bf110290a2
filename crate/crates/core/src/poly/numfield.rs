//! Simple algebraic extensions `Q(θ) = Q[t]/(h)` for irreducible `h`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::UniPoly;
use crate::exactalg::{Field, Rational};

#[derive(Debug, PartialEq)]
pub struct NumberField {
    modulus: UniPoly<Rational>,
}

impl NumberField {
    /// `h` must be irreducible over Q; it is made monic.
    pub fn new(h: &UniPoly<Rational>) -> Arc<Self> {
        assert!(h.degree().unwrap_or(0) >= 1, "defining polynomial must be nonconstant");
        Arc::new(NumberField { modulus: h.monic() })
    }

    /// For `h` with root θ, the field `Q(φ)` with `φ = a·θ` an algebraic
    /// integer, and the integer `a`. Arithmetic there avoids denominators.
    pub fn integral(h: &UniPoly<Rational>) -> (Arc<Self>, Rational) {
        let n = h.degree().expect("nonzero");
        let h = h.monic();
        let den = h
            .coeffs()
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        // φ = den·θ satisfies Σ h_i den^(n-i) φ^i = 0, monic and integral.
        let a = Rational::from_integer(den);
        let mut pw = Rational::one();
        let mut coeffs = vec![Rational::zero(); n + 1];
        for i in (0..=n).rev() {
            coeffs[i] = h.coeff(i) * &pw;
            pw *= &a;
        }
        (NumberField::new(&UniPoly::new(coeffs, &Rational::zero())), a)
    }

    pub fn modulus(&self) -> &UniPoly<Rational> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().expect("nonzero modulus")
    }

    /// The generator θ.
    pub fn gen(self: &Arc<Self>) -> NfElem {
        NfElem::from_poly(self, &UniPoly::x(&Rational::zero()))
    }

    pub fn from_rational(self: &Arc<Self>, r: &Rational) -> NfElem {
        NfElem::from_poly(self, &UniPoly::constant(r.clone()))
    }
}

/// Element of a [`NumberField`], stored as its reduced representative.
#[derive(Clone, Debug)]
pub struct NfElem {
    rep: UniPoly<Rational>,
    field: Arc<NumberField>,
}

impl PartialEq for NfElem {
    fn eq(&self, other: &Self) -> bool {
        debug_assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field == other.field,
            "mixing number fields"
        );
        self.rep == other.rep
    }
}

impl NfElem {
    pub fn from_poly(field: &Arc<NumberField>, p: &UniPoly<Rational>) -> Self {
        NfElem { rep: p.rem(&field.modulus), field: field.clone() }
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn rep(&self) -> &UniPoly<Rational> {
        &self.rep
    }

    /// The rational value, if this element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.rep.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.rep.coeff(0)),
            _ => None,
        }
    }

    fn wrap(&self, rep: UniPoly<Rational>) -> Self {
        NfElem { rep, field: self.field.clone() }
    }
}

impl Field for NfElem {
    fn zero_like(&self) -> Self {
        self.wrap(UniPoly::zero(&Rational::zero()))
    }
    fn one_like(&self) -> Self {
        self.wrap(UniPoly::constant(Rational::one()))
    }
    fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        self.wrap(self.rep.add(&rhs.rep))
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.wrap(self.rep.sub(&rhs.rep))
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.wrap(self.rep.mul(&rhs.rep).rem(&self.field.modulus))
    }
    fn neg(&self) -> Self {
        self.wrap(self.rep.neg())
    }
    fn inv(&self) -> Option<Self> {
        if self.rep.is_zero() {
            return None;
        }
        let (g, s, _) = self.rep.ext_gcd(&self.field.modulus);
        debug_assert_eq!(g.degree(), Some(0), "modulus must be irreducible");
        Some(self.wrap(s.rem(&self.field.modulus)))
    }
    fn from_rational_like(&self, r: &Rational) -> Option<Self> {
        Some(self.wrap(UniPoly::constant(r.clone())))
    }
    fn weight(&self) -> u64 {
        self.rep.coeffs().iter().map(Field::weight).sum()
    }
}
