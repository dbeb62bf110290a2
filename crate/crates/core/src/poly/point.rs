use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use super::{NfElem, NumberField, UniPoly};
use crate::error::{Error, Result};
use crate::exactalg::{format_rational, Field, Rational};

/// A point of P² over Q, normalized so its last nonzero coordinate is one.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: [Rational; 3],
}

impl ProjPoint {
    pub fn new(coords: [Rational; 3]) -> Result<Self> {
        let coords = normalize(coords).ok_or_else(|| {
            Error::InvalidInput("a projective point needs a nonzero coordinate".into())
        })?;
        Ok(ProjPoint { coords })
    }

    /// Panics on `(0, 0, 0)`.
    pub fn from_ints(c: [i64; 3]) -> Self {
        Self::new(c.map(|x| Rational::from_integer(x.into()))).expect("nonzero integer triple")
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.coords
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(format_rational).collect();
        write!(f, "({})", c.join(" : "))
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Scales so the last nonzero entry is one; `None` if all entries vanish.
pub fn normalize<F: Field, const N: usize>(mut v: [F; N]) -> Option<[F; N]> {
    let last = v.iter().rposition(|x| !x.is_zero())?;
    let inv = v[last].inv()?;
    for x in v.iter_mut() {
        *x = x.mul(&inv);
    }
    Some(v)
}

/// A point of P² whose coordinates lie in a number field `Q(θ)`.
///
/// Together with its Galois conjugates it stands for `field_degree()`
/// distinct complex points. Coordinates are normalized only over Q; over a
/// larger field they are kept as computed, since inverting there is costly.
#[derive(Clone)]
pub struct AlgPoint {
    coords: [NfElem; 3],
}

impl AlgPoint {
    pub fn new(coords: [NfElem; 3]) -> Result<Self> {
        if coords.iter().all(Field::is_zero) {
            return Err(Error::InvalidInput("a projective point needs a nonzero coordinate".into()));
        }
        if coords[0].field().degree() == 1 {
            return Ok(AlgPoint { coords: normalize(coords).expect("nonzero") });
        }
        Ok(AlgPoint { coords })
    }

    pub fn from_rational(p: &ProjPoint) -> Self {
        let k = NumberField::new(&UniPoly::x(&Rational::zero()));
        AlgPoint { coords: p.coords().clone().map(|c| k.from_rational(&c)) }
    }

    pub fn coords(&self) -> &[NfElem; 3] {
        &self.coords
    }

    pub fn field(&self) -> &Arc<NumberField> {
        self.coords[0].field()
    }

    /// Degree over Q of the field generated by the coordinates' ambient field.
    pub fn field_degree(&self) -> usize {
        self.field().degree()
    }

    /// Projective equality, by vanishing of all 2×2 minors.
    pub fn same_point(&self, other: &AlgPoint) -> bool {
        let (a, b) = (&self.coords, &other.coords);
        (0..3).all(|i| (i + 1..3).all(|j| a[i].mul(&b[j]).sub(&a[j].mul(&b[i])).is_zero()))
    }

    pub fn as_rational(&self) -> Option<ProjPoint> {
        let c = [
            self.coords[0].as_rational()?,
            self.coords[1].as_rational()?,
            self.coords[2].as_rational()?,
        ];
        ProjPoint::new(c).ok()
    }
}

fn render_elem(e: &NfElem) -> String {
    render_uni(e.rep())
}

/// Renders a polynomial in the number-field generator `t`.
pub(crate) fn render_uni(rep: &UniPoly<Rational>) -> String {
    if rep.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (i, c) in rep.coeffs().iter().enumerate().rev() {
        if Field::is_zero(c) {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{i}"),
        };
        let coef = format_rational(c);
        parts.push(match (i, coef.as_str()) {
            (0, _) => coef,
            (_, "1") => mono,
            (_, "-1") => format!("-{mono}"),
            _ => format!("{coef}*{mono}"),
        });
    }
    parts.join(" + ").replace("+ -", "- ")
}

impl fmt::Display for AlgPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.as_rational() {
            return write!(f, "{p}");
        }
        let c: Vec<String> = self.coords.iter().map(render_elem).collect();
        write!(f, "({}) where {} = 0", c.join(" : "), render_uni(self.field().modulus()))
    }
}

impl fmt::Debug for AlgPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn normalization() {
        let p = ProjPoint::new([rat(2, 1), rat(4, 1), rat(0, 1)]).unwrap();
        assert_eq!(p.coords(), &[rat(1, 2), rat(1, 1), rat(0, 1)]);
        assert_eq!(p.to_string(), "(1/2 : 1 : 0)");
        assert!(ProjPoint::new([rat(0, 1), rat(0, 1), rat(0, 1)]).is_err());
    }

    #[test]
    fn algebraic_display() {
        let h = UniPoly::new(vec![rat(-2, 1), rat(0, 1), rat(1, 1)], &rat(0, 1));
        let k = NumberField::new(&h);
        let p = AlgPoint::new([k.gen(), k.from_rational(&rat(1, 1)), k.from_rational(&rat(1, 1))]).unwrap();
        assert_eq!(p.to_string(), "(t : 1 : 1) where t^2 - 2 = 0");
        let two = k.from_rational(&rat(2, 1));
        let q = AlgPoint::new([k.gen().mul(&two), two.clone(), two]).unwrap();
        assert!(p.same_point(&q));
        assert_eq!(p.field_degree(), 2);
        assert!(p.as_rational().is_none());
    }
}
