use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{Field, Fp};
use crate::error::{Error, Result};

/// Arbitrary precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

impl Field for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rational_like(&self, r: &Rational) -> Option<Self> {
        Some(r.clone())
    }
    fn weight(&self) -> u64 {
        bit_weight(self)
    }
}

/// Bit length of numerator plus denominator.
pub fn bit_weight(r: &Rational) -> u64 {
    r.numer().bits() + r.denom().bits()
}

/// Image of `r` in `F_p`.
pub fn reduce_mod_p(r: &Rational, p: u64) -> Result<Fp> {
    let pb = BigInt::from(p);
    let den = r.denom().mod_floor(&pb).to_u64().expect("reduced below p");
    if den == 0 {
        return Err(Error::BadPrime(p));
    }
    let num = r.numer().mod_floor(&pb).to_u64().expect("reduced below p");
    let num = Fp::new(num, p);
    Ok(num.mul(&Fp::new(den, p).inv().expect("nonzero")))
}

/// `"n"` or `"n/d"` with `d > 0` after sign normalization.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_examples() {
        assert_eq!(reduce_mod_p(&rat(3, 2), 5).unwrap().value(), 4);
        assert_eq!(reduce_mod_p(&rat(1, 3), 3), Err(Error::BadPrime(3)));
        assert_eq!(reduce_mod_p(&rat(7, 1), 7).unwrap().value(), 0);
        assert_eq!(reduce_mod_p(&rat(-1, 2), 7).unwrap().value(), 3);
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-6/4"), Some(rat(-3, 2)));
        assert_eq!(parse_rational(" 5 "), Some(rat(5, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(format_rational(&rat(4, -6)), "-2/3");
        assert_eq!(format_rational(&rat(4, 2)), "2");
    }
}
