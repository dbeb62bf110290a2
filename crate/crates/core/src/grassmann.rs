//! Points of `Gr(2, C^4)` in Plücker coordinates and cohomology classes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{Field, Rational};
use crate::poly::normalize;

/// Column pairs of the six Plücker coordinates, in storage order.
pub const INDEX_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Six projective coordinates `p01, p02, p03, p12, p13, p23`, scaled so the
/// last nonzero one is one.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlueckerPoint<F: Field = Rational> {
    p: [F; 6],
}

impl<F: Field> PlueckerPoint<F> {
    /// Normalizes and checks the Plücker relation.
    pub fn new(p: [F; 6]) -> Result<Self> {
        let q = Self::unchecked(p)?;
        if !q.check_relation() {
            return Err(Error::InvalidInput("coordinates violate the Plücker relation".into()));
        }
        Ok(q)
    }

    /// Normalizes without checking the relation; fails only on the zero vector.
    pub fn unchecked(p: [F; 6]) -> Result<Self> {
        let p = normalize(p).ok_or(Error::RankDeficient)?;
        Ok(PlueckerPoint { p })
    }

    pub fn coords(&self) -> &[F; 6] {
        &self.p
    }

    /// `p01·p23 − p02·p13 + p03·p12`.
    pub fn relation_value(&self) -> F {
        let p = &self.p;
        p[0].mul(&p[5]).sub(&p[1].mul(&p[4])).add(&p[2].mul(&p[3]))
    }

    pub fn check_relation(&self) -> bool {
        self.relation_value().is_zero()
    }

    /// The point of the annihilator plane; realizes the dual morphism.
    pub fn hodge_dual(&self) -> Self {
        let p = &self.p;
        let d = [p[5].clone(), p[4].neg(), p[3].clone(), p[2].clone(), p[1].neg(), p[0].clone()];
        PlueckerPoint { p: normalize(d).expect("permutation of a nonzero vector") }
    }
}

/// The six 2×2 minors of a 2×4 matrix, in [`INDEX_PAIRS`] order.
pub fn minors<F: Field>(rows: &[[F; 4]; 2]) -> [F; 6] {
    INDEX_PAIRS.map(|(i, j)| rows[0][i].mul(&rows[1][j]).sub(&rows[0][j].mul(&rows[1][i])))
}

/// Plücker point of the row span of a rank-2 matrix.
pub fn pluecker_from_rows<F: Field>(rows: &[[F; 4]; 2]) -> Result<PlueckerPoint<F>> {
    PlueckerPoint::unchecked(minors(rows))
}

impl<F: Field + fmt::Display> fmt::Display for PlueckerPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.p.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", c.join(" : "))
    }
}

impl<F: Field> fmt::Debug for PlueckerPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlueckerPoint{:?}", self.p)
    }
}

/// Cohomology class `q2·c2(Q) + s2·c2(S)` of the image of P², with
/// `q2 + s2 = c^2` for the degree `c` of the pulled-back quotient bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CohomClass {
    pub q2: u64,
    pub s2: u64,
}

impl CohomClass {
    /// Fails unless `q2 + s2` is a positive perfect square.
    pub fn new(q2: u64, s2: u64) -> Result<Self> {
        let sum = q2
            .checked_add(s2)
            .ok_or_else(|| Error::InvalidInput("class components overflow".into()))?;
        match exact_sqrt(sum) {
            Some(c) if c > 0 => Ok(CohomClass { q2, s2 }),
            _ => Err(Error::InvalidInput(format!("{q2} + {s2} is not a positive perfect square"))),
        }
    }

    pub fn c(&self) -> u64 {
        exact_sqrt(self.q2 + self.s2).expect("validated on construction")
    }

    /// Class of the dual morphism.
    pub fn dual(&self) -> Self {
        CohomClass { q2: self.s2, s2: self.q2 }
    }
}

impl fmt::Display for CohomClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.q2, self.s2)
    }
}

/// `√n` when `n` is a perfect square.
pub fn exact_sqrt(n: u64) -> Option<u64> {
    let r = n.isqrt();
    (r * r == n).then_some(r)
}
