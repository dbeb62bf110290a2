//! Surjections `C^4 ⊗ O → O(a) ⊕ O(b)` given by a 2×4 matrix of forms.

use rand::Rng as _;
use serde::Serialize;

use super::baselocus::{base_locus, BaseLocus, EliminationConfig};
use super::modp::{check_prime, proj_points, rank_mod, ReducedForm};
use crate::error::{Error, Result};
use crate::exactalg::{Field, Rational};
use crate::grassmann::{pluecker_from_rows, CohomClass, PlueckerPoint, INDEX_PAIRS};
use crate::poly::{common_zeros, CommonZeros, HomPoly, ProjPoint, COORDINATE_RETRIES};
use crate::rng::Seed;

/// Prime used for the finite-field count of the dual incidence locus.
pub const DUAL_INCIDENCE_PRIME: u64 = 101;

#[derive(Clone, Debug, PartialEq)]
pub struct SplitSurjection {
    degrees: (u32, u32),
    rows: [[HomPoly; 4]; 2],
}

impl SplitSurjection {
    /// Checks that each row consists of forms of one declared degree.
    pub fn new(rows: [[HomPoly; 4]; 2]) -> Result<Self> {
        let a = rows[0][0].degree();
        let b = rows[1][0].degree();
        for (r, d) in [(0, a), (1, b)] {
            if rows[r].iter().any(|f| f.degree() != d) {
                return Err(Error::InvalidInput(format!("row {} mixes form degrees", r + 1)));
            }
        }
        Ok(SplitSurjection { degrees: (a, b), rows })
    }

    pub fn degrees(&self) -> (u32, u32) {
        self.degrees
    }

    pub fn rows(&self) -> &[[HomPoly; 4]; 2] {
        &self.rows
    }

    /// The six 2×2 minors, forms of degree `a + b`, in Plücker index order.
    pub fn pluecker_polys(&self) -> [HomPoly; 6] {
        let r = &self.rows;
        INDEX_PAIRS.map(|(i, j)| &(&r[0][i] * &r[1][j]) - &(&r[0][j] * &r[1][i]))
    }

    /// The evaluated matrix at a point with coordinates in any field.
    pub fn matrix_at<F: Field>(&self, x: &[F; 3]) -> [[F; 4]; 2] {
        self.rows.each_ref().map(|row| {
            row.each_ref().map(|f| f.eval_in(x).expect("rational coefficients embed"))
        })
    }

    /// The image of `x` in `Gr(2, C^4)`.
    pub fn evaluate(&self, x: &ProjPoint) -> Result<PlueckerPoint> {
        pluecker_from_rows(&self.matrix_at(x.coords()))
    }

    /// Decides whether the matrix has rank two at every point of `P²(C)`.
    ///
    /// A nonempty base locus comes with a common zero of the minors.
    pub fn surjectivity(&self, cfg: &EliminationConfig, seed: Seed) -> Result<BaseLocus> {
        base_locus(&self.pluecker_polys(), cfg, &mut seed.stream("split-surjectivity"))
    }

    pub fn is_surjective(&self, cfg: &EliminationConfig, seed: Seed) -> Result<bool> {
        Ok(self.surjectivity(cfg, seed)?.is_empty())
    }

    /// Computes the class by counting zeros of a generic section of the
    /// pulled-back quotient bundle; see [`SplitClassEvidence`].
    pub fn cohomology_class(&self, cfg: &EliminationConfig, seed: Seed) -> Result<SplitClassEvidence> {
        if !self.is_surjective(cfg, seed)? {
            return Err(Error::Unsurjective);
        }
        let (a, b) = self.degrees;
        let mut rng = seed.stream("split-section");
        for redraws in 0..COORDINATE_RETRIES {
            let v: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-10i64..=10));
            let [f, g] = self.rows.each_ref().map(|row| combine(row, &v));
            match common_zeros(&f, &g, &mut rng) {
                Ok(zeros) => {
                    let q2 = zeros.total() as u64;
                    let c2 = u64::from(a + b).pow(2);
                    let s2 = c2.checked_sub(q2).ok_or_else(|| {
                        Error::Inconclusive(format!("zero count {q2} exceeds {c2}"))
                    })?;
                    let class = CohomClass::new(q2, s2)?;
                    let dual_incidence = self.dual_incidence(DUAL_INCIDENCE_PRIME, seed)?;
                    return Ok(SplitClassEvidence { class, v, redraws, zeros, dual_incidence });
                }
                Err(Error::CommonComponent | Error::RetriesExhausted(_)) => continue,
                Err(e) => return Err(e),
            }
        }
        Err(Error::RetriesExhausted(COORDINATE_RETRIES))
    }

    /// Counts the points of `P²(F_p)` where a random functional `ξ` lies in the
    /// row span of the matrix, i.e. the stacked 3×4 matrix has rank two.
    ///
    /// These are zeros of a section of the dual of the pulled-back
    /// subbundle, so the count never exceeds `s2` when the locus is finite.
    pub fn dual_incidence(&self, p: u64, seed: Seed) -> Result<DualIncidence> {
        check_prime(p)?;
        let reduced = self.reduced(p)?;
        let mut rng = seed.stream("dual-incidence");
        let xi: [u64; 4] = loop {
            let xi = std::array::from_fn(|_| rng.gen_range(0..p));
            if xi.iter().any(|&c| c != 0) {
                break xi;
            }
        };
        let mut points = 0;
        for x in proj_points(p) {
            let m = reduced.each_ref().map(|row| row.each_ref().map(|f| f.eval(&x)));
            if rank_mod(&[m[0].to_vec(), m[1].to_vec()], p) < 2 {
                continue;
            }
            if rank_mod(&[m[0].to_vec(), m[1].to_vec(), xi.to_vec()], p) == 2 {
                points += 1;
            }
        }
        Ok(DualIncidence { prime: p, xi, points })
    }

    /// All eight entries reduced modulo `p`.
    pub fn reduced(&self, p: u64) -> Result<[[ReducedForm; 4]; 2]> {
        let r = |f: &HomPoly| ReducedForm::new(f, p);
        let [r0, r1] = &self.rows;
        Ok([
            [r(&r0[0])?, r(&r0[1])?, r(&r0[2])?, r(&r0[3])?],
            [r(&r1[0])?, r(&r1[1])?, r(&r1[2])?, r(&r1[3])?],
        ])
    }
}

fn combine(row: &[HomPoly; 4], v: &[i64; 4]) -> HomPoly {
    row.iter().zip(v).fold(HomPoly::zero(row[0].degree()), |acc, (f, &c)| {
        &acc + &f.scale(&Rational::from_integer(c.into()))
    })
}

/// The surjection with rows `(X^a, Y^a, Z^a, X^a)` and `(Z^b, X^b, Y^b, 0)`.
///
/// For `a = b = 1` its minors are a basis of the ternary quadrics, so the
/// morphism is the Veronese embedding followed by a linear section of the
/// Plücker quadric.
pub fn example_split(a: u32, b: u32) -> Result<SplitSurjection> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidInput("row degrees must be positive".into()));
    }
    let p = |i: usize, e: u32| HomPoly::var(i).pow(e);
    SplitSurjection::new([
        [p(0, a), p(1, a), p(2, a), p(0, a)],
        [p(2, b), p(0, b), p(1, b), HomPoly::zero(b)],
    ])
}

/// Class of the dual morphism.
pub fn dual_class(c: &CohomClass) -> CohomClass {
    c.dual()
}

#[derive(Clone, Debug, Serialize)]
pub struct DualIncidence {
    pub prime: u64,
    pub xi: [u64; 4],
    /// Distinct `F_p`-points of the locus.
    pub points: usize,
}

/// A class together with the data that produced it.
#[derive(Clone, Debug)]
pub struct SplitClassEvidence {
    pub class: CohomClass,
    /// The section `(row₁·v, row₂·v)` whose zeros were counted.
    pub v: [i64; 4],
    /// Vectors rejected before `v` because the two forms shared a component.
    pub redraws: usize,
    pub zeros: CommonZeros,
    pub dual_incidence: DualIncidence,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, Matrix};
    use crate::poly::{monomials, x, y, z};

    fn cfg() -> EliminationConfig {
        EliminationConfig::default()
    }

    #[test]
    fn veronese_minors() {
        let s = example_split(1, 1).unwrap();
        let expected = [
            &(&x() * &x()) - &(&y() * &z()),
            &(&x() * &y()) - &(&z() * &z()),
            -&(&x() * &z()),
            &(&y() * &y()) - &(&x() * &z()),
            -&(&x() * &x()),
            -&(&x() * &y()),
        ];
        assert_eq!(s.pluecker_polys(), expected);
        let rows: Vec<Vec<Rational>> = s.pluecker_polys().iter().map(HomPoly::coefficient_vector).collect();
        assert_eq!(Matrix::from_rows(rows, monomials(2).len(), &rat(0, 1)).rank(), 6);
    }

    #[test]
    fn shapes() {
        let s = example_split(1, 2).unwrap();
        assert_eq!(s.rows()[1][0], z().pow(2));
        assert_eq!(s.rows()[1][3], HomPoly::zero(2));
        let s = example_split(2, 3).unwrap();
        assert_eq!(s.degrees(), (2, 3));
        assert!(s.pluecker_polys().iter().all(|f| f.degree() == 5));
        assert!(example_split(0, 1).is_err());
        let bad = [[x(), y(), z(), x().pow(2)], [x(), y(), z(), x()]];
        assert!(SplitSurjection::new(bad).is_err());
    }

    #[test]
    fn evaluation_at_a_coordinate_point() {
        let s = example_split(1, 1).unwrap();
        let p = s.evaluate(&ProjPoint::from_ints([1, 0, 0])).unwrap();
        // rows (1,0,0,1), (0,1,0,0)
        let expected = PlueckerPoint::unchecked([1, 0, 0, 0, -1, 0].map(|c| rat(c, 1))).unwrap();
        assert_eq!(p, expected);
    }

    #[test]
    fn surjectivity_of_examples() {
        for (a, b) in [(1, 1), (1, 2), (2, 3)] {
            assert!(example_split(a, b).unwrap().is_surjective(&cfg(), Seed(1)).unwrap(), "({a},{b})");
        }
    }

    #[test]
    fn equal_rows_are_not_surjective() {
        let row = [x(), y(), z(), HomPoly::zero(1)];
        let s = SplitSurjection::new([row.clone(), row.map(|f| f.scale(&rat(2, 1)))]).unwrap();
        assert!(!s.is_surjective(&cfg(), Seed(1)).unwrap());
        assert_eq!(s.cohomology_class(&cfg(), Seed(1)).unwrap_err(), Error::Unsurjective);
    }

    #[test]
    fn classes_of_examples() {
        for (a, b) in [(1, 1), (1, 2), (2, 2)] {
            let ev = example_split(a, b).unwrap().cohomology_class(&cfg(), Seed(3)).unwrap();
            let q2 = u64::from(a * b);
            assert_eq!(ev.class, CohomClass::new(q2, u64::from((a + b) * (a + b)) - q2).unwrap());
            assert!(ev.dual_incidence.points as u64 <= ev.class.s2);
        }
        assert_eq!(dual_class(&CohomClass::new(1, 3).unwrap()), CohomClass::new(3, 1).unwrap());
    }
}
