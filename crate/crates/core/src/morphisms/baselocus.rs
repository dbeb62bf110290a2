//! Deciding whether finitely many ternary forms have a common zero over C.
//!
//! Emptiness is certified by elimination: after a random change of
//! coordinates, three random combinations `F, G, H` of the forms give
//! resultants `Res_Z(F, G)` and `Res_Z(F, H)` whose gcd has no root exactly
//! when no point of `P²` is a common zero of `F, G, H`, hence of all forms.
//! A common root of the two resultants is checked fiber by fiber, and a
//! genuine common zero of all forms is returned as a witness.

use rand::Rng as _;

use super::modp::{proj_points, ReducedForm};
use crate::error::{Error, Result};
use crate::exactalg::{rat, Field, Fp, Rational, SCAN_PRIMES};
use crate::poly::{
    apply, common_zeros, factor_square_free, fiber_unipoly, gcd_all, random_gl3, single_root,
    sylvester_resultant, AlgPoint, HomPoly, NfElem, NumberField, ProjPoint, Transform, UniPoly,
    COORDINATE_RETRIES,
};
use crate::rng::Rng;

/// Limits for the surjectivity decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationConfig {
    /// Largest form degree attempted by exact elimination.
    pub degree_cap: u32,
    /// Primes whose projective planes are scanned for quick witnesses.
    pub scan_primes: Vec<u64>,
}

impl Default for EliminationConfig {
    fn default() -> Self {
        EliminationConfig { degree_cap: 12, scan_primes: SCAN_PRIMES.to_vec() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessSource {
    /// Every form is identically zero.
    AllFormsZero,
    /// A common zero over `F_p` whose small lift is an exact common zero.
    PrimeScan(u64),
    /// The forms share a curve; the witness lies on it.
    CommonCurve,
    Elimination,
}

#[derive(Debug, Clone)]
pub struct BaseWitness {
    pub point: AlgPoint,
    pub source: WitnessSource,
}

/// Data that lets a reader re-run the emptiness argument.
#[derive(Debug, Clone)]
pub struct EmptinessCertificate {
    /// Change of coordinates `x = M·x'` applied before elimination.
    pub transform: Transform,
    /// Integer coefficients of the three combinations `F, G, H`.
    pub combinations: [Vec<i64>; 3],
    /// Elimination attempts used, including degenerate ones.
    pub attempts: usize,
}

#[derive(Debug, Clone)]
pub enum BaseLocus {
    Empty(Option<EmptinessCertificate>),
    NonEmpty(BaseWitness),
}

impl BaseLocus {
    pub fn is_empty(&self) -> bool {
        matches!(self, BaseLocus::Empty(_))
    }
}

/// Decides whether `forms` (all of one degree) have a common zero in `P²(C)`.
pub fn base_locus(forms: &[HomPoly], cfg: &EliminationConfig, rng: &mut Rng) -> Result<BaseLocus> {
    let forms: Vec<HomPoly> = forms.iter().filter(|f| !f.is_zero()).cloned().collect();
    if forms.is_empty() {
        let point = AlgPoint::from_rational(&ProjPoint::from_ints([0, 0, 1]));
        return Ok(BaseLocus::NonEmpty(BaseWitness { point, source: WitnessSource::AllFormsZero }));
    }
    let degree = forms[0].degree();
    if forms.iter().any(|f| f.degree() != degree) {
        return Err(Error::InvalidInput("base locus forms must share one degree".into()));
    }
    if degree == 0 {
        return Ok(BaseLocus::Empty(None));
    }
    if degree > cfg.degree_cap {
        return Err(Error::Inconclusive(format!(
            "form degree {degree} exceeds the elimination cap {}",
            cfg.degree_cap
        )));
    }
    if let Some(w) = scan_for_witness(&forms, &cfg.scan_primes) {
        return Ok(BaseLocus::NonEmpty(w));
    }
    let common = gcd_all(&forms);
    if common.degree() > 0 {
        let point = point_on_curve(&common, rng);
        return Ok(BaseLocus::NonEmpty(BaseWitness { point, source: WitnessSource::CommonCurve }));
    }
    if forms.len() == 2 {
        let zs = common_zeros(&forms[0], &forms[1], rng)?;
        let z = zs.zeros.into_iter().next().expect("coprime forms of positive degree meet");
        return Ok(BaseLocus::NonEmpty(BaseWitness { point: z.point, source: WitnessSource::Elimination }));
    }
    for attempt in 1..=COORDINATE_RETRIES {
        match eliminate(&forms, rng, attempt)? {
            Some(found) => return Ok(found),
            None => continue,
        }
    }
    Err(Error::Inconclusive(format!(
        "elimination did not settle after {COORDINATE_RETRIES} coordinate changes"
    )))
}

fn scan_for_witness(forms: &[HomPoly], primes: &[u64]) -> Option<BaseWitness> {
    for &p in primes {
        let Ok(reduced) = forms.iter().map(|f| ReducedForm::new(f, p)).collect::<Result<Vec<_>>>() else {
            continue;
        };
        for x in proj_points(p) {
            if reduced.iter().any(|f| f.eval(&x) != 0) {
                continue;
            }
            let lift = x.map(|c| Fp::new(c, p).symmetric());
            let q = ProjPoint::from_ints(lift);
            if forms.iter().all(|f| f.eval(&q).is_zero()) {
                let point = AlgPoint::from_rational(&q);
                return Some(BaseWitness { point, source: WitnessSource::PrimeScan(p) });
            }
        }
    }
    None
}

fn random_int_point(rng: &mut Rng) -> [Rational; 3] {
    std::array::from_fn(|_| Rational::from_integer(rng.gen_range(-9i64..=9).into()))
}

/// Some point on the curve `c = 0`, found on a random line.
fn point_on_curve(c: &HomPoly, rng: &mut Rng) -> AlgPoint {
    loop {
        let (p, q) = (random_int_point(rng), random_int_point(rng));
        if let Ok(pp) = ProjPoint::new(p.clone()) {
            if c.eval(&pp).is_zero() {
                return AlgPoint::from_rational(&pp);
            }
        }
        // b(s) = c(s·p + q)
        let zero = rat(0, 1);
        let lines: Vec<HomPoly> = (0..3)
            .map(|i| HomPoly::linear([p[i].clone(), q[i].clone(), zero.clone()]))
            .collect();
        let m: Transform = std::array::from_fn(|i| {
            let t = lines[i].coefficient_vector();
            [t[0].clone(), t[1].clone(), t[2].clone()]
        });
        let restricted = c.substitute_linear(&m);
        let d = c.degree();
        let b = UniPoly::new((0..=d).map(|i| restricted.coeff(&[i, d - i, 0])).collect(), &zero);
        if b.degree() != Some(d as usize) {
            continue;
        }
        let mut factors = factor_square_free(&b.square_free_decomposition()[0].1, rng);
        factors.sort_by_key(|h| h.degree());
        let h = &factors[0];
        let (k, a) = NumberField::integral(h);
        let (phi, a) = (k.gen(), k.from_rational(&a));
        let coords: [NfElem; 3] = std::array::from_fn(|i| {
            phi.mul(&k.from_rational(&p[i])).add(&a.mul(&k.from_rational(&q[i])))
        });
        if let Ok(point) = AlgPoint::new(coords) {
            return point;
        }
    }
}

fn random_combination(forms: &[HomPoly], rng: &mut Rng) -> (Vec<i64>, HomPoly) {
    loop {
        let lambda: Vec<i64> = forms.iter().map(|_| rng.gen_range(-5i64..=5)).collect();
        let f = forms
            .iter()
            .zip(&lambda)
            .fold(HomPoly::zero(forms[0].degree()), |acc, (f, &l)| {
                &acc + &f.scale(&Rational::from_integer(l.into()))
            });
        if !f.is_zero() {
            return (lambda, f);
        }
    }
}

/// One elimination attempt; `Ok(None)` when the random choices were degenerate.
fn eliminate(forms: &[HomPoly], rng: &mut Rng, attempt: usize) -> Result<Option<BaseLocus>> {
    let (l1, f) = random_combination(forms, rng);
    let (l2, g) = random_combination(forms, rng);
    let (l3, h) = random_combination(forms, rng);
    let m = random_gl3(rng);
    let moved: Vec<HomPoly> = [&f, &g, &h].iter().map(|q| q.substitute_linear(&m)).collect();
    let d = moved[0].degree();
    if moved.iter().any(|q| q.coeff(&[0, 0, d]).is_zero()) {
        return Ok(None);
    }
    let r1 = sylvester_resultant(&moved[0], &moved[1], 2);
    let r2 = sylvester_resultant(&moved[0], &moved[2], 2);
    if r1.is_zero() || r2.is_zero() {
        return Ok(None);
    }
    let top = r1.degree();
    let zero = rat(0, 1);
    let uni = |r: &HomPoly| UniPoly::new((0..=top).map(|i| r.coeff(&[i, top - i, 0])).collect(), &zero);
    let at_infinity = r1.coeff(&[top, 0, 0]).is_zero() && r2.coeff(&[top, 0, 0]).is_zero();
    let common = uni(&r1).gcd(&uni(&r2));
    if common.degree() == Some(0) && !at_infinity {
        let cert = EmptinessCertificate { transform: m, combinations: [l1, l2, l3], attempts: attempt };
        return Ok(Some(BaseLocus::Empty(Some(cert))));
    }
    if at_infinity {
        return Ok(None);
    }
    let all_moved: Vec<HomPoly> = forms.iter().map(|q| q.substitute_linear(&m)).collect();
    for h in factor_square_free(&common, rng) {
        let (k, a) = NumberField::integral(&h);
        let (phi, a) = (k.gen(), k.from_rational(&a));
        let zk = k.from_rational(&zero);
        let fiber = all_moved
            .iter()
            .map(|q| fiber_unipoly(q, &phi, &a))
            .fold(UniPoly::zero(&zk), |acc, q| acc.gcd(&q));
        if fiber.degree().unwrap_or(0) == 0 {
            continue;
        }
        let Some((w, v)) = single_root(&fiber) else { return Ok(None) };
        let coords = apply(&m, &[phi.mul(&w), a.mul(&w), v]);
        let vanishes = forms.iter().all(|q| q.eval_in(&coords).is_some_and(|e| e.is_zero()));
        if !vanishes {
            return Ok(None);
        }
        let point = AlgPoint::new(coords)?;
        return Ok(Some(BaseLocus::NonEmpty(BaseWitness { point, source: WitnessSource::Elimination })));
    }
    Ok(None)
}
