use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::ProjPoint;
use crate::exactalg::{format_rational, Field, Rational};

/// Exponent triple `(i, j, k)` of `X^i Y^j Z^k`.
pub type Monomial = [u32; 3];

pub const VAR_NAMES: [&str; 3] = ["X", "Y", "Z"];

/// All monomials of degree `d` in graded-lex order with `X > Y > Z`.
pub fn monomials(d: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(((d + 1) * (d + 2) / 2) as usize);
    for i in (0..=d).rev() {
        for j in (0..=d - i).rev() {
            out.push([i, j, d - i - j]);
        }
    }
    out
}

/// Sparse homogeneous polynomial in `X, Y, Z` with rational coefficients.
///
/// Every stored exponent triple sums to `degree` and no stored coefficient is
/// zero. Monomials compare lexicographically on their exponent triple, which
/// for a fixed degree is graded-lex with `X > Y > Z`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomPoly {
    degree: u32,
    terms: BTreeMap<Monomial, Rational>,
}

impl HomPoly {
    pub fn zero(degree: u32) -> Self {
        HomPoly { degree, terms: BTreeMap::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, [0, 0, 0])
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut p = Self::zero(m.iter().sum());
        if !Zero::is_zero(&c) {
            p.terms.insert(m, c);
        }
        p
    }

    /// The variable `X`, `Y` or `Z` for `i = 0, 1, 2`.
    pub fn var(i: usize) -> Self {
        let mut m = [0; 3];
        m[i] = 1;
        Self::term(Rational::one(), m)
    }

    /// Builds from `(monomial, coefficient)` pairs, summing repeats.
    ///
    /// Panics if a monomial does not have degree `degree`.
    pub fn from_terms(degree: u32, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(degree);
        for (m, c) in terms {
            assert_eq!(m.iter().sum::<u32>(), degree, "inhomogeneous term {m:?}");
            p.add_term(m, c);
        }
        p
    }

    /// Linear form `a X + b Y + c Z`.
    pub fn linear(coeffs: [Rational; 3]) -> Self {
        Self::from_terms(1, coeffs.into_iter().enumerate().map(|(i, c)| {
            let mut m = [0; 3];
            m[i] = 1;
            (m, c)
        }))
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last_key_value()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if Zero::is_zero(&c) {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Rational::zero);
        *e += c;
        if Zero::is_zero(e) {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if Zero::is_zero(c) {
            return Self::zero(self.degree);
        }
        HomPoly {
            degree: self.degree,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Scaled so that the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Value at an arbitrary (not necessarily normalized) coordinate triple.
    ///
    /// `None` if a coefficient has no image in the target field.
    pub fn eval_in<F: Field>(&self, pt: &[F; 3]) -> Option<F> {
        let proto = pt[0].zero_like();
        let max = self.degree as usize;
        let powers: Vec<Vec<F>> = pt
            .iter()
            .map(|x| {
                let mut v = vec![proto.one_like()];
                for i in 0..max {
                    v.push(v[i].mul(x));
                }
                v
            })
            .collect();
        let mut acc = proto.clone();
        for (m, c) in &self.terms {
            let c = proto.from_rational_like(c)?;
            let t = c
                .mul(&powers[0][m[0] as usize])
                .mul(&powers[1][m[1] as usize])
                .mul(&powers[2][m[2] as usize]);
            acc = acc.add(&t);
        }
        Some(acc)
    }

    pub fn eval(&self, p: &ProjPoint) -> Rational {
        self.eval_in(p.coords()).expect("rationals embed in Q")
    }

    /// `f(M·x)`: variable `X_i` becomes `Σ_j M[i][j] x_j`.
    pub fn substitute_linear(&self, m: &[[Rational; 3]; 3]) -> Self {
        let forms: Vec<HomPoly> = m.iter().map(|row| HomPoly::linear(row.clone())).collect();
        let max = self.degree;
        let powers: Vec<Vec<HomPoly>> = forms
            .iter()
            .map(|l| {
                let mut v = vec![HomPoly::one()];
                for i in 0..max as usize {
                    v.push(&v[i] * l);
                }
                v
            })
            .collect();
        let mut out = HomPoly::zero(self.degree);
        for (mono, c) in &self.terms {
            let t = &(&powers[0][mono[0] as usize] * &powers[1][mono[1] as usize])
                * &powers[2][mono[2] as usize];
            out = &out + &t.scale(c);
        }
        out
    }

    /// Renames variables: variable `i` of the result is variable `perm[i]` of `self`.
    pub fn permute(&self, perm: [usize; 3]) -> Self {
        HomPoly {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| ([m[perm[0]], m[perm[1]], m[perm[2]]], c.clone()))
                .collect(),
        }
    }

    /// Largest power of variable `var` dividing `self` (`degree` for zero).
    pub fn order_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m[var]).min().unwrap_or(self.degree)
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m[var]).max().unwrap_or(0)
    }

    /// Exact quotient `self / d`, `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &HomPoly) -> Option<HomPoly> {
        let (dm, dc) = d.leading()?;
        let (dm, dc) = (*dm, dc.clone());
        if self.is_zero() {
            return (self.degree >= d.degree).then(|| HomPoly::zero(self.degree - d.degree));
        }
        if self.degree < d.degree {
            return None;
        }
        let mut r = self.clone();
        let mut q = HomPoly::zero(self.degree - d.degree);
        while let Some((rm, rc)) = r.leading() {
            if (0..3).any(|i| rm[i] < dm[i]) {
                return None;
            }
            let qm = [rm[0] - dm[0], rm[1] - dm[1], rm[2] - dm[2]];
            let qc = rc / &dc;
            let t = HomPoly::term(qc, qm);
            r = &r - &(&t * d);
            q = &q + &t;
        }
        Some(q)
    }

    /// Divides out all factors of `var`.
    pub fn strip_var(&self, var: usize) -> (HomPoly, u32) {
        let k = if self.is_zero() { 0 } else { self.order_in(var) };
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut m = *m;
                m[var] -= k;
                (m, c.clone())
            })
            .collect();
        (HomPoly { degree: self.degree - k, terms }, k)
    }

    /// Multiplies by `var^k`.
    pub fn times_var_pow(&self, var: usize, k: u32) -> HomPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut m = *m;
                m[var] += k;
                (m, c.clone())
            })
            .collect();
        HomPoly { degree: self.degree + k, terms }
    }

    /// Coefficient rows `(monomial order of degree d) → coefficient`.
    pub fn coefficient_vector(&self) -> Vec<Rational> {
        monomials(self.degree).iter().map(|m| self.coeff(m)).collect()
    }
}

impl Add for &HomPoly {
    type Output = HomPoly;
    fn add(self, rhs: &HomPoly) -> HomPoly {
        if self.is_zero() && self.degree != rhs.degree {
            return rhs.clone();
        }
        if rhs.is_zero() && self.degree != rhs.degree {
            return self.clone();
        }
        assert_eq!(self.degree, rhs.degree, "adding forms of different degree");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &HomPoly {
    type Output = HomPoly;
    fn sub(self, rhs: &HomPoly) -> HomPoly {
        self + &(-rhs)
    }
}

impl Neg for &HomPoly {
    type Output = HomPoly;
    fn neg(self) -> HomPoly {
        HomPoly { degree: self.degree, terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Mul for &HomPoly {
    type Output = HomPoly;
    fn mul(self, rhs: &HomPoly) -> HomPoly {
        let mut out = HomPoly::zero(self.degree + rhs.degree);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term([a[0] + b[0], a[1] + b[1], a[2] + b[2]], x * y);
            }
        }
        out
    }
}

impl fmt::Display for HomPoly {
    /// Terms in decreasing graded-lex order, e.g. `X^2 - Y*Z`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = *c < Rational::zero();
            let abs = if neg { -c } else { c.clone() };
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = (0..3)
                .filter(|&i| m[i] > 0)
                .map(|i| {
                    if m[i] == 1 {
                        VAR_NAMES[i].to_string()
                    } else {
                        format!("{}^{}", VAR_NAMES[i], m[i])
                    }
                })
                .collect();
            let coef = format_rational(&abs);
            if vars.is_empty() {
                write!(f, "{coef}")?;
            } else if One::is_one(&abs) {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{coef}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomPoly[{}]({})", self.degree, self)
    }
}
