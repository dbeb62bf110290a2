use num_bigint::BigUint;

use crate::exactalg::Field;

/// Dense univariate polynomial, coefficients in ascending degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<F: Field> {
    coeffs: Vec<F>,
    zero: F,
}

impl<F: Field> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>, proto: &F) -> Self {
        while coeffs.last().is_some_and(Field::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs, zero: proto.zero_like() }
    }

    pub fn zero(proto: &F) -> Self {
        UniPoly { coeffs: Vec::new(), zero: proto.zero_like() }
    }

    pub fn constant(c: F) -> Self {
        let z = c.zero_like();
        Self::new(vec![c], &z)
    }

    /// `c · x^n`.
    pub fn monomial(c: F, n: usize) -> Self {
        let z = c.zero_like();
        let mut v = vec![z.clone(); n];
        v.push(c);
        Self::new(v, &z)
    }

    pub fn x(proto: &F) -> Self {
        Self::monomial(proto.one_like(), 1)
    }

    pub fn proto(&self) -> &F {
        &self.zero
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect();
        Self::new(v, &self.zero)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect();
        Self::new(v, &self.zero)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(Field::neg).collect(), &self.zero)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect(), &self.zero)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(&self.zero);
        }
        let mut v = vec![self.zero.clone(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        Self::new(v, &self.zero)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = d.lc().inv().expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(&self.zero), self.clone());
        }
        let mut q = vec![self.zero.clone(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].mul(&inv);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].sub(&c.mul(dc));
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(q, &self.zero), Self::new(r, &self.zero))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Exact quotient, `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        match self.lc().inv() {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    /// Monic gcd (zero when both inputs are zero).
    pub fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s·self + t·rhs = g`, `g` monic.
    pub fn ext_gcd(&self, rhs: &Self) -> (Self, Self, Self) {
        let z = &self.zero;
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut s0, mut s1) = (Self::constant(z.one_like()), Self::zero(z));
        let (mut t0, mut t1) = (Self::zero(z), Self::constant(z.one_like()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lc().inv() {
            Some(inv) => (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)),
            None => (r0, s0, t0),
        }
    }

    pub fn derivative(&self) -> Self {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&self.zero.from_i64_like(i as i64)))
            .collect();
        Self::new(v, &self.zero)
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs.iter().rev().fold(self.zero.clone(), |acc, c| acc.mul(x).add(c))
    }

    pub fn map<G: Field>(&self, proto: &G, f: impl Fn(&F) -> G) -> UniPoly<G> {
        UniPoly::new(self.coeffs.iter().map(f).collect(), proto)
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let mut acc = Self::constant(self.zero.one_like()).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    /// Yun's square-free decomposition (characteristic zero).
    ///
    /// Returns `(i, a_i)` for the nonconstant monic `a_i` with
    /// `self = lc · Π a_i^i`, the `a_i` square-free and pairwise coprime.
    pub fn square_free_decomposition(&self) -> Vec<(usize, Self)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let d = f.derivative();
        let a0 = f.gcd(&d);
        let mut b = f.div_exact(&a0).expect("gcd divides");
        let mut c = d.div_exact(&a0).expect("gcd divides");
        let mut i = 1;
        loop {
            let dd = c.sub(&b.derivative());
            if dd.is_zero() {
                if b.degree().unwrap_or(0) > 0 {
                    out.push((i, b.monic()));
                }
                break;
            }
            let a = b.gcd(&dd);
            if a.degree().unwrap_or(0) > 0 {
                out.push((i, a.clone()));
            }
            b = b.div_exact(&a).expect("gcd divides");
            c = dd.div_exact(&a).expect("gcd divides");
            i += 1;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, Fp, Rational};

    fn qp(c: &[i64]) -> UniPoly<Rational> {
        UniPoly::new(c.iter().map(|&x| rat(x, 1)).collect(), &rat(0, 1))
    }

    #[test]
    fn division_and_gcd() {
        let a = qp(&[-1, 0, 1]); // x^2 - 1
        let b = qp(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, qp(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&qp(&[-1, 1])), qp(&[-1, 1]));
        assert_eq!(qp(&[1, 0, 1]).gcd(&qp(&[0, 1])), qp(&[1]));
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = qp(&[2, 0, 1]);
        let b = qp(&[-1, 3]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(g, qp(&[1]));
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn square_free_parts() {
        // (x-1)^3 (x+2)^2 (x^2+1)
        let f = qp(&[-1, 1]).mul(&qp(&[-1, 1])).mul(&qp(&[-1, 1]));
        let f = f.mul(&qp(&[2, 1])).mul(&qp(&[2, 1])).mul(&qp(&[1, 0, 1])).scale(&rat(5, 1));
        let d = f.square_free_decomposition();
        assert_eq!(d, vec![(1, qp(&[1, 0, 1])), (2, qp(&[2, 1])), (3, qp(&[-1, 1]))]);
    }

    #[test]
    fn pow_mod_fermat() {
        let p = 7u64;
        let z = Fp::new(0, p);
        let m = UniPoly::new(vec![Fp::new(3, p), Fp::new(0, p), Fp::new(1, p)], &z);
        let x = UniPoly::x(&z);
        // x^(p^2) = x in F_49 = F_7[x]/(x^2+3)
        let e = BigUint::from(49u32);
        assert_eq!(x.pow_mod(&e, &m), x);
    }
}
