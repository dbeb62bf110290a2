//! Finite point sets in `P²`, their Hilbert functions, and the
//! Cayley–Bacharach rank test.
//!
//! A set `Z` satisfies the Cayley–Bacharach condition for `O(d)` when every
//! degree-`d` form vanishing on `Z` minus one point also vanishes at that
//! point. Equivalently, removing any single point leaves the rank of the
//! evaluation matrix unchanged.

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::Rng as _;

use crate::error::{Error, Result};
use crate::exactalg::{rat, reduce_mod_p, Field, Fp, Matrix, Rational, RNG_PRIMES};
use crate::poly::{monomials, HomPoly, Monomial, ProjPoint};
use crate::rng::Seed;

/// Default number of candidate subsets a position check may enumerate.
pub const DEFAULT_BUDGET: u128 = 1_000_000;

/// Coordinates of random points are drawn from `[-COORD_RANGE, COORD_RANGE]`.
pub const COORD_RANGE: i64 = 20;

/// Redraws allowed when generating a configuration.
pub const GENERATION_RETRIES: usize = 32;

/// Pairwise distinct points of `P²(Q)`, at least one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfig {
    points: Vec<ProjPoint>,
}

impl PointConfig {
    pub fn new(points: Vec<ProjPoint>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidInput("a point configuration needs at least one point".into()));
        }
        let mut seen = BTreeSet::new();
        for (i, p) in points.iter().enumerate() {
            if !seen.insert(p) {
                return Err(Error::InvalidInput(format!("point {i} ({p}) is repeated")));
            }
        }
        Ok(PointConfig { points })
    }

    pub fn from_ints(points: &[[i64; 3]]) -> Result<Self> {
        let pts = points
            .iter()
            .map(|c| ProjPoint::new(c.map(|x| rat(x, 1))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(pts)
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The points other than the `i`-th, possibly none.
    pub fn without(&self, i: usize) -> Vec<ProjPoint> {
        let mut rest = self.points.clone();
        rest.remove(i);
        rest
    }
}

fn monomial_value<F: Field>(m: &Monomial, x: &[F; 3]) -> F {
    x[0].pow(u64::from(m[0])).mul(&x[1].pow(u64::from(m[1]))).mul(&x[2].pow(u64::from(m[2])))
}

/// Rows are points, columns the degree-`d` monomials in graded-lex order.
pub fn eval_matrix(points: &[ProjPoint], d: u32) -> Matrix<Rational> {
    let basis = monomials(d);
    let rows = points
        .iter()
        .map(|p| basis.iter().map(|m| monomial_value(m, p.coords())).collect())
        .collect();
    Matrix::from_rows(rows, basis.len(), &rat(0, 1))
}

/// Dimension of the space of degree-`d` forms vanishing at every point.
pub fn h0_ideal(points: &[ProjPoint], d: u32) -> usize {
    monomials(d).len() - eval_matrix(points, d).rank()
}

fn form_from_vector(d: u32, v: &[Rational]) -> HomPoly {
    HomPoly::from_terms(d, monomials(d).into_iter().zip(v.iter().cloned()))
}

#[derive(Clone, Debug)]
pub struct CbReport {
    pub holds: bool,
    /// Index of the first point at which the condition fails.
    pub failing_point: Option<usize>,
    /// A form vanishing on every other point but not on the failing one.
    pub certificate: Option<HomPoly>,
    /// Rank of the evaluation matrix of the whole set.
    pub rank: usize,
}

impl CbReport {
    /// Re-checks a failure certificate by exact evaluation.
    pub fn certificate_is_valid(&self, z: &PointConfig) -> bool {
        match (self.failing_point, &self.certificate) {
            (Some(i), Some(f)) => z.points().iter().enumerate().all(|(j, p)| {
                let v = f.eval(p);
                if j == i {
                    !v.is_zero()
                } else {
                    v.is_zero()
                }
            }),
            _ => self.holds,
        }
    }
}

/// Tests the Cayley–Bacharach condition for `O(d)` by comparing ranks.
pub fn cb_check(z: &PointConfig, d: u32) -> CbReport {
    let full = eval_matrix(z.points(), d);
    let rank = full.rank();
    for i in 0..z.len() {
        let rest = eval_matrix(&z.without(i), d);
        if rest.rank() == rank {
            continue;
        }
        let row = full.row(i);
        let v = rest
            .kernel_basis()
            .into_iter()
            .find(|v| !dot(row, v).is_zero())
            .expect("a rank drop leaves a kernel vector separating the point");
        let certificate = form_from_vector(d, &v).monic();
        return CbReport { holds: false, failing_point: Some(i), certificate: Some(certificate), rank };
    }
    CbReport { holds: true, failing_point: None, certificate: None, rank }
}

fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    a.iter().zip(b).fold(a[0].zero_like(), |acc, (x, y)| acc.add(&x.mul(y)))
}

/// Why a configuration is not in the requested position.
#[derive(Clone, Debug)]
pub enum Violation {
    Collinear { points: [usize; 3] },
    OnCurve { degree: u32, curve: HomPoly, points: Vec<usize> },
}

#[derive(Clone, Debug)]
pub struct PositionReport {
    pub ok: bool,
    pub violation: Option<Violation>,
    /// Candidate subsets enumerated.
    pub subsets_examined: u128,
}

/// Number of `k`-subsets of an `n`-set, saturating.
pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul(n - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Checks that no `r·c + 1` of the points lie on a curve of degree `r`, for
/// `1 ≤ r ≤ t`, and with `strict_three` that no three are collinear.
///
/// A curve of degree `r` through many points is found from subsets of
/// `C(r+2, 2) − 1` points with a one-dimensional space of curves through
/// them; the points on that curve are then counted. Subsets are screened
/// modulo a large prime first, which can only overcount points on a curve.
pub fn verify_position(z: &PointConfig, t: u32, c: u32, strict_three: bool, budget: u128) -> Result<PositionReport> {
    let ell = z.len();
    let mut examined: u128 = 0;
    if strict_three && ell >= 3 {
        let needed = binomial(ell as u128, 3);
        if needed > budget {
            return Err(Error::CapExceeded { needed, budget });
        }
        for tri in (0..ell).combinations(3) {
            examined += 1;
            let rows: Vec<Vec<Rational>> = tri.iter().map(|&i| z.points()[i].coords().to_vec()).collect();
            if Matrix::from_rows(rows, 3, &rat(0, 1)).determinant().is_zero() {
                let violation = Violation::Collinear { points: [tri[0], tri[1], tri[2]] };
                return Ok(PositionReport { ok: false, violation: Some(violation), subsets_examined: examined });
            }
        }
    }
    for r in 1..=t {
        let need = (r as usize) * (c as usize) + 1;
        if ell < need {
            continue;
        }
        if let Some(v) = curve_violation(z, r, need, budget, &mut examined)? {
            return Ok(PositionReport { ok: false, violation: Some(v), subsets_examined: examined });
        }
    }
    Ok(PositionReport { ok: true, violation: None, subsets_examined: examined })
}

fn curve_violation(
    z: &PointConfig,
    r: u32,
    need: usize,
    budget: u128,
    examined: &mut u128,
) -> Result<Option<Violation>> {
    let ell = z.len();
    let n = monomials(r).len();
    let exact = eval_matrix(z.points(), r);
    let kernel = exact.kernel_basis();
    if let Some(v) = kernel.first() {
        // Every point lies on one curve of degree r.
        let curve = form_from_vector(r, v).monic();
        return Ok(Some(Violation::OnCurve { degree: r, curve, points: (0..ell).collect() }));
    }
    let needed = binomial(ell as u128, (n - 1) as u128);
    if needed > budget {
        return Err(Error::CapExceeded { needed, budget });
    }
    let p = RNG_PRIMES[0];
    let modp: Option<Matrix<Fp>> = (0..ell)
        .map(|i| exact.row(i).iter().map(|x| reduce_mod_p(x, p)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()
        .ok()
        .map(|rows| Matrix::from_rows(rows, n, &Fp::new(0, p)));
    for subset in (0..ell).combinations(n - 1) {
        *examined += 1;
        if let Some(m) = &modp {
            let k = m.select_rows(&subset).kernel_basis();
            if k.len() == 1 {
                let on = (0..ell).filter(|&i| dot(m.row(i), &k[0]).is_zero()).count();
                if on < need {
                    continue;
                }
            }
        }
        let k = exact.select_rows(&subset).kernel_basis();
        if k.len() != 1 {
            continue;
        }
        let on: Vec<usize> = (0..ell).filter(|&i| dot(exact.row(i), &k[0]).is_zero()).collect();
        if on.len() >= need {
            let curve = form_from_vector(r, &k[0]).monic();
            return Ok(Some(Violation::OnCurve { degree: r, curve, points: on }));
        }
    }
    Ok(None)
}

fn random_point(rng: &mut crate::rng::Rng) -> ProjPoint {
    loop {
        let c: [i64; 3] = std::array::from_fn(|_| rng.gen_range(-COORD_RANGE..=COORD_RANGE));
        if c != [0, 0, 0] {
            return ProjPoint::from_ints(c);
        }
    }
}

/// Seeded random points passing [`verify_position`] with the same parameters.
pub fn gen_position_points(
    ell: usize,
    t: u32,
    c: u32,
    strict_three: bool,
    seed: Seed,
    budget: u128,
) -> Result<PointConfig> {
    if ell == 0 {
        return Err(Error::InvalidInput("at least one point is required".into()));
    }
    let mut rng = seed.stream("position-points");
    for _ in 0..GENERATION_RETRIES {
        let mut pts = BTreeSet::new();
        let mut order = Vec::with_capacity(ell);
        while order.len() < ell {
            let p = random_point(&mut rng);
            if pts.insert(p.clone()) {
                order.push(p);
            }
        }
        let z = PointConfig::new(order)?;
        if verify_position(&z, t, c, strict_three, budget)?.ok {
            return Ok(z);
        }
    }
    Err(Error::RetriesExhausted(GENERATION_RETRIES))
}

/// The irreducible rational curve `Y^t = X^(t−1)·Z`, parametrized by
/// `s ↦ (s^t : s^(t−1) : 1)`.
pub fn rational_curve(t: u32) -> HomPoly {
    let lhs = HomPoly::var(1).pow(t);
    let rhs = &HomPoly::var(0).pow(t - 1) * &HomPoly::var(2);
    &lhs - &rhs
}

/// `ell` distinct seeded points on [`rational_curve`]`(t)`.
pub fn gen_curve_points(ell: usize, t: u32, seed: Seed) -> Result<PointConfig> {
    if ell == 0 || t == 0 {
        return Err(Error::InvalidInput("need at least one point and a positive degree".into()));
    }
    let range = COORD_RANGE.max(ell as i64);
    let mut rng = seed.stream("curve-points");
    let mut params = BTreeSet::new();
    let mut order = Vec::with_capacity(ell);
    while order.len() < ell {
        let s = rng.gen_range(-range..=range);
        if params.insert(s) {
            order.push(s);
        }
    }
    let pts = order
        .into_iter()
        .map(|s| ProjPoint::new([rat(s, 1).pow(t as i32), rat(s, 1).pow(t as i32 - 1), rat(1, 1)]))
        .collect::<Result<Vec<_>>>()?;
    PointConfig::new(pts)
}
