use std::sync::Arc;

use num_traits::{One, Zero};
use rand::Rng as _;

use super::resultant::subresultant_in_x;
use super::{factor_square_free, gcd, sylvester_resultant, AlgPoint, HomPoly, NfElem, NumberField, ProjPoint, UniPoly};
use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix, Rational};
use crate::rng::Rng;

pub const COORDINATE_RETRIES: usize = 32;

/// Zeros over fields up to this degree are re-evaluated exactly; beyond it
/// the cost outweighs the check, and exactness rests on the subresultant.
pub const EVAL_CHECK_MAX_DEGREE: usize = 6;

pub type Transform = [[Rational; 3]; 3];

/// Random invertible 3×3 matrix with entries in `[-3, 3]`.
pub fn random_gl3(rng: &mut Rng) -> Transform {
    loop {
        let m: Transform = std::array::from_fn(|_| {
            std::array::from_fn(|_| Rational::from_integer(rng.gen_range(-3i64..=3).into()))
        });
        let mat = Matrix::from_rows(m.iter().map(|r| r.to_vec()).collect(), 3, &Rational::zero());
        if !Field::is_zero(&mat.determinant()) {
            return m;
        }
    }
}

/// `M · p` for a point given by coordinates over any field containing Q.
pub fn apply<F: Field>(m: &Transform, p: &[F; 3]) -> [F; 3] {
    let proto = p[0].zero_like();
    std::array::from_fn(|i| {
        (0..3).fold(proto.clone(), |acc, j| {
            let c = proto.from_rational_like(&m[i][j]).expect("rational embeds");
            acc.add(&c.mul(&p[j]))
        })
    })
}

/// One common zero of two curves, standing for `conjugates()` points over C.
#[derive(Clone, Debug)]
pub struct CommonZero {
    pub point: AlgPoint,
    pub multiplicity: usize,
}

impl CommonZero {
    pub fn conjugates(&self) -> usize {
        self.point.field_degree()
    }
}

#[derive(Clone, Debug)]
pub struct CommonZeros {
    pub zeros: Vec<CommonZero>,
}

impl CommonZeros {
    /// Total intersection multiplicity over C.
    pub fn total(&self) -> usize {
        self.zeros.iter().map(|z| z.multiplicity * z.conjugates()).sum()
    }

    pub fn rational(&self) -> Vec<(ProjPoint, usize)> {
        self.zeros
            .iter()
            .filter_map(|z| z.point.as_rational().map(|p| (p, z.multiplicity)))
            .collect()
    }

    /// `(field degree, multiplicity)` for each orbit of non-rational zeros.
    pub fn residual(&self) -> Vec<(usize, usize)> {
        self.zeros
            .iter()
            .filter(|z| z.point.as_rational().is_none())
            .map(|z| (z.conjugates(), z.multiplicity))
            .collect()
    }
}

/// Common zeros of two coprime forms with intersection multiplicities.
///
/// Every zero is certified by exact evaluation, and the multiplicities add
/// up to `deg f · deg g`.
pub fn common_zeros(f: &HomPoly, g: &HomPoly, rng: &mut Rng) -> Result<CommonZeros> {
    if f.is_zero() || g.is_zero() || gcd(f, g).degree() > 0 {
        return Err(Error::CommonComponent);
    }
    if f.degree() == 0 || g.degree() == 0 {
        return Ok(CommonZeros { zeros: Vec::new() });
    }
    for _ in 0..COORDINATE_RETRIES {
        match zeros_in_coordinates(f, g, &random_gl3(rng), rng) {
            Err(Error::DegenerateCoordinates) => continue,
            other => return other,
        }
    }
    Err(Error::RetriesExhausted(COORDINATE_RETRIES))
}

fn zeros_in_coordinates(f: &HomPoly, g: &HomPoly, m: &Transform, rng: &mut Rng) -> Result<CommonZeros> {
    let fz = f.substitute_linear(m);
    let gz = g.substitute_linear(m);
    let top = |h: &HomPoly| h.coeff(&[0, 0, h.degree()]);
    if Field::is_zero(&top(&fz)) || Field::is_zero(&top(&gz)) {
        return Err(Error::DegenerateCoordinates);
    }
    let res = sylvester_resultant(&fz, &gz, 2);
    let total = res.degree();
    if Field::is_zero(&res.coeff(&[total, 0, 0])) {
        return Err(Error::DegenerateCoordinates);
    }
    let q0 = Rational::zero();
    let r = UniPoly::new((0..=total).map(|i| res.coeff(&[i, total - i, 0])).collect(), &q0);

    let mut subres: Vec<Vec<UniPoly<Rational>>> = Vec::new();
    let mut zeros = Vec::new();
    for (mult, part) in r.square_free_decomposition() {
        for h in factor_square_free(&part, rng) {
            let (k, a) = NumberField::integral(&h);
            let phi = k.gen();
            let fiber = fiber_gcd(&fz, &gz, &k, &a, &mut subres).ok_or(Error::DegenerateCoordinates)?;
            let (w, v) = single_root(&fiber).ok_or(Error::DegenerateCoordinates)?;
            let a = k.from_rational(&a);
            let coords = apply(m, &[phi.mul(&w), a.mul(&w), a.mul(&v)]);
            let checked = h.degree().unwrap_or(0) > EVAL_CHECK_MAX_DEGREE
                || (f.eval_in(&coords).is_some_and(|v| v.is_zero())
                    && g.eval_in(&coords).is_some_and(|v| v.is_zero()));
            if !checked {
                return Err(Error::DegenerateCoordinates);
            }
            zeros.push(CommonZero { point: AlgPoint::new(coords)?, multiplicity: mult });
        }
    }
    zeros.sort_by_key(|z| (z.conjugates(), z.point.as_rational()));
    let out = CommonZeros { zeros };
    debug_assert_eq!(out.total(), total as usize);
    Ok(out)
}

/// Gcd, up to a scalar, of `f(θ, 1, Z)` and `g(θ, 1, Z)` where `θ = φ / a`
/// and `K = Q(φ)`, read off from the first subresultant whose leading
/// coefficient survives at θ.
///
/// `cache[j]` holds the `j`-th subresultant over `Q[x]`, filled on demand.
fn fiber_gcd(
    f: &HomPoly,
    g: &HomPoly,
    k: &Arc<NumberField>,
    a: &Rational,
    cache: &mut Vec<Vec<UniPoly<Rational>>>,
) -> Option<UniPoly<NfElem>> {
    let top = f.degree().min(g.degree()) as usize;
    for j in 1..=top {
        while cache.len() <= j {
            let next = cache.len();
            cache.push(if next == 0 { Vec::new() } else { subresultant_in_x(f, g, next) });
        }
        let top_deg = cache[j].iter().filter_map(UniPoly::degree).max().unwrap_or(0);
        let at_theta: Vec<NfElem> = cache[j].iter().map(|c| eval_scaled(c, k, a, top_deg)).collect();
        if !at_theta[j].is_zero() {
            let zero = k.from_rational(&Rational::zero());
            return Some(UniPoly::new(at_theta, &zero));
        }
    }
    None
}

/// `a^d · c(φ / a)` in `K = Q(φ)`, for `deg c ≤ d`.
fn eval_scaled(c: &UniPoly<Rational>, k: &Arc<NumberField>, a: &Rational, d: usize) -> NfElem {
    let phi = k.gen();
    let mut acc = k.from_rational(&Rational::zero());
    let mut apow = Rational::one();
    let mut coeffs = vec![Rational::zero(); d + 1];
    for e in (0..=d).rev() {
        coeffs[e] = c.coeff(e) * &apow;
        apow *= a;
    }
    for e in (0..=d).rev() {
        acc = acc.mul(&phi).add(&k.from_rational(&coeffs[e]));
    }
    acc
}

/// For `p = c·(Z − z)^n` with `n ≥ 1`, returns `(w, v)` with `z = v / w`,
/// found without inverting anything in the number field.
pub(crate) fn single_root(p: &UniPoly<NfElem>) -> Option<(NfElem, NfElem)> {
    let n = p.degree().filter(|&n| n > 0)?;
    let proto = p.proto().clone();
    let nn = proto.from_i64_like(n as i64);
    let (cn, cm) = (p.coeff(n), p.coeff(n - 1));
    let w = nn.mul(&cn);
    // (w Z + c_{n-1})^n = n^n c_n^(n-1) · p exactly when p is a pure power.
    let lin = UniPoly::new(vec![cm.clone(), w.clone()], &proto);
    let mut lhs = UniPoly::constant(proto.one_like());
    for _ in 0..n {
        lhs = lhs.mul(&lin);
    }
    let scale = nn.pow(n as u64).mul(&cn.pow(n as u64 - 1));
    (lhs == p.scale(&scale)).then(|| (w, cm.neg()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;
    use crate::poly::{monomials, x, y, z};
    use crate::rng::Seed;
    use proptest::prelude::*;

    fn rng() -> crate::rng::Rng {
        Seed(7).stream("zeros-test")
    }

    #[test]
    fn two_lines() {
        let zs = common_zeros(&x(), &y(), &mut rng()).unwrap();
        assert_eq!(zs.total(), 1);
        assert_eq!(zs.rational(), vec![(ProjPoint::from_ints([0, 0, 1]), 1)]);
    }

    #[test]
    fn double_line() {
        let zs = common_zeros(&(&x() * &x()), &y(), &mut rng()).unwrap();
        assert_eq!(zs.total(), 2);
        assert_eq!(zs.rational(), vec![(ProjPoint::from_ints([0, 0, 1]), 2)]);
    }

    #[test]
    fn two_conics() {
        let f = &(&x() * &x()) - &(&y() * &z());
        let g = &(&x() * &y()) - &(&z() * &z());
        let zs = common_zeros(&f, &g, &mut rng()).unwrap();
        assert_eq!(zs.total(), 4);
        let mut rational: Vec<ProjPoint> = zs.rational().into_iter().map(|(p, m)| {
            assert_eq!(m, 1);
            p
        }).collect();
        rational.sort();
        assert_eq!(rational, vec![ProjPoint::from_ints([0, 1, 0]), ProjPoint::from_ints([1, 1, 1])]);
        assert_eq!(zs.residual(), vec![(2, 1)]);
    }

    #[test]
    fn shared_component_is_rejected() {
        let f = &x() * &y();
        let g = &x() * &z();
        assert!(matches!(common_zeros(&f, &g, &mut rng()), Err(Error::CommonComponent)));
    }

    #[test]
    fn tangency_has_multiplicity_two() {
        let conic = &(&x() * &z()) - &(&y() * &y());
        let tangent = x();
        let zs = common_zeros(&conic, &tangent, &mut rng()).unwrap();
        assert_eq!(zs.rational(), vec![(ProjPoint::from_ints([0, 0, 1]), 2)]);
    }

    fn arb_form(max: u32) -> impl Strategy<Value = HomPoly> {
        (1..=max).prop_flat_map(|d| {
            prop::collection::vec(-4i64..=4, monomials(d).len()).prop_map(move |cs| {
                HomPoly::from_terms(d, monomials(d).into_iter().zip(cs.into_iter().map(|c| rat(c, 1))))
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]
        #[test]
        fn bezout_total(f in arb_form(4), g in arb_form(4), s in any::<u64>()) {
            prop_assume!(!f.is_zero() && !g.is_zero() && gcd(&f, &g).degree() == 0);
            let zs = common_zeros(&f, &g, &mut Seed(s).stream("bezout")).unwrap();
            prop_assert_eq!(zs.total() as u32, f.degree() * g.degree());
            for (p, _) in zs.rational() {
                prop_assert!(Field::is_zero(&f.eval(&p)));
                prop_assert!(Field::is_zero(&g.eval(&p)));
            }
        }
    }
}
