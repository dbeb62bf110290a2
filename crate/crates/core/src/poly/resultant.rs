use num_traits::{One, Zero};

use super::{HomPoly, UniPoly};
use crate::exactalg::{Field, Matrix, Rational};

/// `f(x, y, Z)` as a polynomial in `Z`, padded to formal degree `deg f`.
pub fn fiber_poly<F: Field>(f: &HomPoly, x: &F, y: &F) -> Vec<F> {
    let proto = x.zero_like();
    let d = f.degree() as usize;
    let mut out = vec![proto.clone(); d + 1];
    for (m, c) in f.terms() {
        let c = proto.from_rational_like(c).expect("coefficient has an image");
        let v = c.mul(&x.pow(m[0] as u64)).mul(&y.pow(m[1] as u64));
        out[m[2] as usize] = out[m[2] as usize].add(&v);
    }
    out
}

pub(crate) fn fiber_unipoly<F: Field>(f: &HomPoly, x: &F, y: &F) -> UniPoly<F> {
    let proto = x.zero_like();
    UniPoly::new(fiber_poly(f, x, y), &proto)
}

/// Sylvester determinant of two polynomials given by ascending coefficient
/// vectors; the vector lengths fix the formal degrees.
pub fn sylvester_det<F: Field>(a: &[F], b: &[F]) -> F {
    let (m, n) = (a.len() - 1, b.len() - 1);
    let proto = a[0].zero_like();
    let size = m + n;
    if size == 0 {
        return proto.one_like();
    }
    let mut s = Matrix::zeros(size, size, &proto);
    for r in 0..n {
        for (k, c) in a.iter().rev().enumerate() {
            s.set(r, r + k, c.clone());
        }
    }
    for r in 0..m {
        for (k, c) in b.iter().rev().enumerate() {
            s.set(n + r, r + k, c.clone());
        }
    }
    s.determinant()
}

/// Coefficients (ascending in `Z`) of the `j`-th subresultant of two
/// polynomials with the formal degrees given by their coefficient vectors.
///
/// When both leading coefficients are nonzero, the gcd has degree `j` exactly
/// when subresultants below `j` vanish and the leading coefficient of this
/// one does not; it is then this polynomial up to a scalar.
pub fn subresultant<F: Field>(a: &[F], b: &[F], j: usize) -> Vec<F> {
    let (m, n) = (a.len() - 1, b.len() - 1);
    assert!(j <= m.min(n), "subresultant index exceeds both degrees");
    let proto = a[0].zero_like();
    let width = m + n - j;
    let size = m + n - 2 * j;
    if size == 0 {
        return b.to_vec();
    }
    // Row r holds Z^s·P with coefficients placed by power, highest power first.
    let mut rows: Vec<Vec<F>> = Vec::with_capacity(size);
    let mut push = |p: &[F], shift: usize| {
        let mut row = vec![proto.clone(); width];
        for (k, c) in p.iter().enumerate() {
            row[width - 1 - (k + shift)] = c.clone();
        }
        rows.push(row);
    };
    for s in (0..n - j).rev() {
        push(a, s);
    }
    for s in (0..m - j).rev() {
        push(b, s);
    }
    (0..=j)
        .map(|i| {
            let mut mat = Matrix::zeros(size, size, &proto);
            for (r, row) in rows.iter().enumerate() {
                for c in 0..size - 1 {
                    mat.set(r, c, row[c].clone());
                }
                mat.set(r, size - 1, row[width - 1 - i].clone());
            }
            mat.determinant()
        })
        .collect()
}

/// The `j`-th subresultant of `f(x, 1, Z)` and `g(x, 1, Z)` with respect to
/// `Z`, as polynomials in `x` (one per power of `Z`, ascending).
pub fn subresultant_in_x(f: &HomPoly, g: &HomPoly, j: usize) -> Vec<UniPoly<Rational>> {
    let (m, n) = (f.degree() as usize, g.degree() as usize);
    let bound = ((n - j) * m + (m - j) * n).max(n);
    let one = Rational::one();
    let xs: Vec<Rational> = (0..=bound).map(|t| Rational::from_integer(t.into())).collect();
    let values: Vec<Vec<Rational>> =
        xs.iter().map(|t| subresultant(&fiber_poly(f, t, &one), &fiber_poly(g, t, &one), j)).collect();
    (0..=j)
        .map(|i| {
            let ys: Vec<Rational> = values.iter().map(|v| v[i].clone()).collect();
            interpolate(&xs, &ys)
        })
        .collect()
}

/// Polynomial of degree at most `xs.len() − 1` through the given values.
pub(crate) fn interpolate(xs: &[Rational], ys: &[Rational]) -> UniPoly<Rational> {
    let zero = Rational::zero();
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut p = UniPoly::constant(coef[n - 1].clone());
    for i in (0..n - 1).rev() {
        let lin = UniPoly::new(vec![-xs[i].clone(), Rational::one()], &zero);
        p = p.mul(&lin).add(&UniPoly::constant(coef[i].clone()));
    }
    p
}

/// Resultant of `f` and `g` with respect to the variable `var` (0, 1, 2 for `X, Y, Z`).
///
/// Formal degrees are the total degrees, so the result is a form of degree
/// `deg f · deg g` in the two remaining variables; it is zero when the
/// leading coefficients in `var` both vanish.
pub fn sylvester_resultant(f: &HomPoly, g: &HomPoly, var: usize) -> HomPoly {
    assert!(var < 3, "variable index out of range");
    let others: Vec<usize> = (0..3).filter(|&i| i != var).collect();
    let perm = [others[0], others[1], var];
    let (fp, gp) = (f.permute(perm), g.permute(perm));
    let total = f.degree() * g.degree();
    let one = Rational::one();
    let xs: Vec<Rational> = (0..=total).map(|t| Rational::from_integer(t.into())).collect();
    let ys: Vec<Rational> =
        xs.iter().map(|t| sylvester_det(&fiber_poly(&fp, t, &one), &fiber_poly(&gp, t, &one))).collect();
    let r = interpolate(&xs, &ys);
    let terms = r.coeffs().iter().enumerate().map(|(i, c)| {
        let mut m = [0u32; 3];
        m[others[0]] = i as u32;
        m[others[1]] = total - i as u32;
        (m, c.clone())
    });
    HomPoly::from_terms(total, terms)
}
