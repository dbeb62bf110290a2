//! Greatest common divisors of ternary forms.
//!
//! A form not divisible by `Z` is determined by its dehomogenization at
//! `Z = 1`, so the problem reduces to a gcd in `Q[X, Y]`, computed with a
//! primitive pseudo-remainder sequence in `Y` over `Q[X]`.

use num_traits::Zero;

use super::{HomPoly, UniPoly};
use crate::exactalg::{Field, Rational};

/// Polynomial in `Y` whose coefficients are polynomials in `X`.
type BiPoly = Vec<UniPoly<Rational>>;

fn dehomogenize(f: &HomPoly) -> BiPoly {
    let mut out: BiPoly = vec![UniPoly::zero(&Rational::zero()); f.degree_in(1) as usize + 1];
    for (m, c) in f.terms() {
        let j = m[1] as usize;
        out[j] = out[j].add(&UniPoly::monomial(c.clone(), m[0] as usize));
    }
    trim(out)
}

fn trim(mut p: BiPoly) -> BiPoly {
    while p.last().is_some_and(UniPoly::is_zero) {
        p.pop();
    }
    p
}

/// Homogenizes to total degree `deg` using `Z`.
fn homogenize(p: &BiPoly, deg: u32) -> HomPoly {
    let mut terms = Vec::new();
    for (j, cx) in p.iter().enumerate() {
        for (i, c) in cx.coeffs().iter().enumerate() {
            if !Field::is_zero(c) {
                let (i, j) = (i as u32, j as u32);
                terms.push(([i, j, deg - i - j], c.clone()));
            }
        }
    }
    HomPoly::from_terms(deg, terms)
}

fn total_degree(p: &BiPoly) -> u32 {
    p.iter()
        .enumerate()
        .filter_map(|(j, cx)| cx.degree().map(|i| (i + j) as u32))
        .max()
        .unwrap_or(0)
}

fn content(p: &BiPoly) -> UniPoly<Rational> {
    p.iter().fold(UniPoly::zero(&Rational::zero()), |g, c| g.gcd(c))
}

fn primitive_part(p: &BiPoly) -> BiPoly {
    let c = content(p);
    p.iter().map(|x| x.div_exact(&c).expect("content divides")).collect()
}

fn pseudo_remainder(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let n = b.len() - 1;
    let lb = &b[n];
    let mut r = a.clone();
    while r.len() > n {
        let shift = r.len() - 1 - n;
        let lr = r.last().expect("nonempty").clone();
        let mut next: BiPoly = r.iter().map(|c| c.mul(lb)).collect();
        for (k, c) in b.iter().enumerate() {
            next[k + shift] = next[k + shift].sub(&c.mul(&lr));
        }
        next.pop();
        r = trim(next);
    }
    r
}

fn bivariate_gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
    if a.is_empty() {
        return b.clone();
    }
    if b.is_empty() {
        return a.clone();
    }
    let cont = content(a).gcd(&content(b));
    let (mut p, mut q) = (primitive_part(a), primitive_part(b));
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_empty() {
        let r = pseudo_remainder(&p, &q);
        p = q;
        q = if r.is_empty() { r } else { primitive_part(&r) };
    }
    primitive_part(&p).iter().map(|c| c.mul(&cont)).collect()
}

/// Monic greatest common divisor of two forms (graded-lex leading coefficient one).
///
/// Returns the other argument (normalized) when one input is zero.
pub fn gcd(f: &HomPoly, g: &HomPoly) -> HomPoly {
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    let (f1, kf) = f.strip_var(2);
    let (g1, kg) = g.strip_var(2);
    let d = bivariate_gcd(&dehomogenize(&f1), &dehomogenize(&g1));
    let h = homogenize(&d, total_degree(&d));
    h.times_var_pow(2, kf.min(kg)).monic()
}

/// Gcd of a list of forms; zero for an empty list.
pub fn gcd_all<'a>(forms: impl IntoIterator<Item = &'a HomPoly>) -> HomPoly {
    forms.into_iter().fold(HomPoly::zero(0), |acc, f| gcd(&acc, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;
    use crate::poly::{x, y, z};
    use proptest::prelude::*;

    #[test]
    fn simple_examples() {
        assert_eq!(gcd(&(&x() * &y()), &(&x() * &z())), x());
        assert_eq!(gcd(&(&(&x() * &x()) - &(&y() * &z())), &x()), HomPoly::one());
        let f = (&(&x() * &x()) - &(&y() * &z())).scale(&rat(-3, 1));
        assert_eq!(gcd(&f, &f), f.monic());
    }

    #[test]
    fn shared_factors_of_higher_degree() {
        let common = &(&x() * &y()) - &(&z() * &z());
        let f = &common * &(&x() + &(&y()).scale(&rat(2, 1)));
        let g = &common * &(&(&x() * &x()) + &(&z() * &z()));
        assert_eq!(gcd(&f, &g), common.monic());
        let f = &(&z() * &z()) * &x();
        let g = &z() * &(&x() * &y());
        assert_eq!(gcd(&f, &g), &x() * &z());
    }

    fn arb_form(d: u32) -> impl Strategy<Value = HomPoly> {
        let n = crate::poly::monomials(d).len();
        prop::collection::vec(-3i64..=3, n).prop_map(move |cs| {
            HomPoly::from_terms(
                d,
                crate::poly::monomials(d).into_iter().zip(cs.into_iter().map(|c| rat(c, 1))),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn gcd_divides_and_cofactors_are_coprime(
            c in arb_form(1), a in arb_form(2), b in arb_form(1)
        ) {
            prop_assume!(!c.is_zero() && !a.is_zero() && !b.is_zero());
            let f = &c * &a;
            let g = &c * &b;
            let h = gcd(&f, &g);
            let fq = f.div_exact(&h);
            let gq = g.div_exact(&h);
            prop_assert!(fq.is_some() && gq.is_some());
            prop_assert_eq!(gcd(&fq.unwrap(), &gq.unwrap()), HomPoly::one());
            prop_assert!(h.div_exact(&c.monic()).is_some());
        }
    }
}
