//! Factorization of univariate polynomials over Q.
//!
//! Square-free parts are factored by the classical modular route: factor
//! modulo a small prime (distinct-degree, then Cantor–Zassenhaus), lift the
//! factors with linear Hensel steps past a Mignotte bound, and recombine
//! subsets of lifted factors by trial division over Z.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng as _;

use super::UniPoly;
use crate::exactalg::{Field, Fp, Rational};
use crate::rng::Rng;

type ZPoly = Vec<BigInt>;

/// Irreducible monic factors with multiplicity, sorted by multiplicity then degree.
pub fn factor(f: &UniPoly<Rational>, rng: &mut Rng) -> Vec<(UniPoly<Rational>, usize)> {
    let mut out = Vec::new();
    for (mult, part) in f.square_free_decomposition() {
        let mut fs = factor_square_free(&part, rng);
        fs.sort_by_key(|g| g.degree());
        out.extend(fs.into_iter().map(|g| (g, mult)));
    }
    out
}

/// Monic irreducible factors of a square-free polynomial.
pub fn factor_square_free(f: &UniPoly<Rational>, rng: &mut Rng) -> Vec<UniPoly<Rational>> {
    match f.degree() {
        None | Some(0) => return Vec::new(),
        Some(1) => return vec![f.monic()],
        _ => {}
    }
    let big = to_primitive_int(f);
    zassenhaus(&big, rng).into_iter().map(|g| from_int(&g).monic()).collect()
}

fn to_primitive_int(f: &UniPoly<Rational>) -> ZPoly {
    let den = f.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut v: ZPoly =
        f.coeffs().iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
    primitive(&mut v);
    v
}

fn from_int(f: &ZPoly) -> UniPoly<Rational> {
    UniPoly::new(f.iter().map(|c| Rational::from_integer(c.clone())).collect(), &Rational::zero())
}

fn trim(v: &mut ZPoly) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Divides by the content and makes the leading coefficient positive.
fn primitive(v: &mut ZPoly) {
    trim(v);
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return;
    }
    let g = if v.last().is_some_and(Signed::is_negative) { -g } else { g };
    for c in v.iter_mut() {
        *c = &*c / &g;
    }
}

fn zmul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn zsub(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    let mut v: ZPoly =
        (0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect();
    trim(&mut v);
    v
}

fn zmod(a: &ZPoly, m: &BigInt) -> ZPoly {
    let mut v: ZPoly = a.iter().map(|c| c.mod_floor(m)).collect();
    trim(&mut v);
    v
}

fn zsymmetric(a: &ZPoly, m: &BigInt) -> ZPoly {
    let half = m / 2;
    let mut v: ZPoly = a
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    trim(&mut v);
    v
}

/// Exact quotient over Z, `None` if `b` does not divide `a` in Z[x].
fn zdiv_exact(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    let db = b.len().checked_sub(1)?;
    let lb = b.last()?;
    let mut r = a.clone();
    trim(&mut r);
    if r.is_empty() {
        return Some(Vec::new());
    }
    if r.len() <= db {
        return None;
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let top = &r[k + db];
        if top.is_zero() {
            continue;
        }
        let (c, rem) = top.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, bc) in b.iter().enumerate() {
            r[k + j] -= &c * bc;
        }
        q[k] = c;
    }
    trim(&mut r);
    r.is_empty().then_some(q)
}

fn to_fp(a: &ZPoly, p: u64) -> UniPoly<Fp> {
    let pb = BigInt::from(p);
    let proto = Fp::new(0, p);
    UniPoly::new(
        a.iter().map(|c| Fp::new(c.mod_floor(&pb).to_u64().expect("reduced"), p)).collect(),
        &proto,
    )
}

fn from_fp(a: &UniPoly<Fp>) -> ZPoly {
    a.coeffs().iter().map(|c| BigInt::from(c.value())).collect()
}

fn small_primes(limit: u64) -> Vec<u64> {
    let n = limit as usize;
    let mut sieve = vec![true; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if sieve[i] {
            if i > 2 {
                out.push(i as u64);
            }
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
    }
    out
}

/// Distinct-degree factorization of a monic square-free polynomial over `F_p`.
fn distinct_degree(f: &UniPoly<Fp>) -> Vec<(usize, UniPoly<Fp>)> {
    let proto = *f.proto();
    let p = BigUint::from(proto.modulus());
    let x = UniPoly::x(&proto);
    let mut f = f.clone();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 0;
    while f.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(&p, &f);
        let g = f.gcd(&h.sub(&x));
        if g.degree().unwrap_or(0) > 0 {
            f = f.div_exact(&g).expect("gcd divides");
            h = h.rem(&f);
            out.push((d, g));
        }
    }
    if f.degree().unwrap_or(0) > 0 {
        out.push((f.degree().expect("nonzero"), f));
    }
    out
}

/// Splits a product of distinct monic irreducibles of degree `d` (Cantor–Zassenhaus).
fn equal_degree(g: &UniPoly<Fp>, d: usize, rng: &mut Rng, out: &mut Vec<UniPoly<Fp>>) {
    let n = g.degree().expect("nonzero");
    if n == d {
        out.push(g.clone());
        return;
    }
    let proto = *g.proto();
    let p = proto.modulus();
    let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    let one = UniPoly::constant(proto.one_like());
    loop {
        let a = UniPoly::new((0..n).map(|_| Fp::new(rng.gen_range(0..p), p)).collect(), &proto);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let u = g.gcd(&a);
        let split = if u.degree().unwrap_or(0) > 0 {
            u
        } else {
            g.gcd(&a.pow_mod(&e, g).sub(&one))
        };
        let ds = split.degree().unwrap_or(0);
        if ds > 0 && ds < n {
            let rest = g.div_exact(&split).expect("gcd divides");
            equal_degree(&split, d, rng, out);
            equal_degree(&rest, d, rng, out);
            return;
        }
    }
}

/// Lifts `t ≡ g0·h0 (mod p)` with `g0` monic to a factorization modulo `p^k`.
fn hensel_pair(t: &ZPoly, g0: &UniPoly<Fp>, h0: &UniPoly<Fp>, p: u64, k: u32) -> (ZPoly, ZPoly) {
    let (one, _, t_coef) = g0.ext_gcd(h0);
    debug_assert_eq!(one.degree(), Some(0), "factors must be coprime mod p");
    let pb = BigInt::from(p);
    let mut g = from_fp(g0);
    let mut h = from_fp(h0);
    let mut m = pb.clone();
    for _ in 1..k {
        let diff = zsub(t, &zmul(&g, &h));
        let e: ZPoly = diff.iter().map(|c| {
            debug_assert!((c % &m).is_zero());
            c / &m
        }).collect();
        let e = to_fp(&e, p);
        // e = σ·g0 + τ·h0 with deg τ < deg g0, which keeps g monic.
        let tau = e.mul(&t_coef).rem(g0);
        let sigma = e.sub(&tau.mul(h0)).div_exact(g0).expect("exact by construction");
        let next = &m * &pb;
        g = zmod(&zadd_scaled(&g, &from_fp(&tau), &m), &next);
        h = zmod(&zadd_scaled(&h, &from_fp(&sigma), &m), &next);
        m = next;
    }
    (g, h)
}

/// `a + m·b`.
fn zadd_scaled(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    let mut v: ZPoly =
        (0..n).map(|i| a.get(i).unwrap_or(&z) + m * b.get(i).unwrap_or(&z)).collect();
    trim(&mut v);
    v
}

/// Monic lifts `G_i` with `t ≡ lc(t)·Π G_i (mod p^k)`.
fn hensel_all(t: &ZPoly, factors: &[UniPoly<Fp>], p: u64, k: u32, pk: &BigInt) -> Vec<ZPoly> {
    if factors.len() == 1 {
        let lc = t.last().expect("nonzero").mod_floor(pk);
        let inv = mod_inverse(&lc, pk);
        let g: ZPoly = t.iter().map(|c| (c * &inv).mod_floor(pk)).collect();
        return vec![g];
    }
    let tp = to_fp(t, p);
    let g0 = &factors[0];
    let h0 = tp.div_exact(g0).expect("modular factor divides");
    let (g, h) = hensel_pair(t, g0, &h0, p, k);
    let mut out = vec![g];
    out.extend(hensel_all(&h, &factors[1..], p, k, pk));
    out
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Coefficient bound for factors of `f`, times its leading coefficient.
fn factor_bound(f: &ZPoly) -> BigInt {
    let n = f.len() - 1;
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let norm = BigInt::from_biguint(Sign::Plus, norm2.magnitude().sqrt() + 1u32);
    let lc = f.last().expect("nonzero").abs();
    (BigInt::one() << n) * norm * lc
}

fn zassenhaus(f: &ZPoly, rng: &mut Rng) -> Vec<ZPoly> {
    let lc = f.last().expect("nonzero").clone();
    let mut best: Option<(u64, Vec<(usize, UniPoly<Fp>)>)> = None;
    let mut tried = 0;
    for p in small_primes(20_000) {
        if (&lc % p).is_zero() {
            continue;
        }
        let fp = to_fp(f, p);
        if fp.degree() != Some(f.len() - 1) || fp.gcd(&fp.derivative()).degree() != Some(0) {
            continue;
        }
        let ddf = distinct_degree(&fp.monic());
        let count: usize = ddf.iter().map(|(d, g)| g.degree().expect("nonzero") / d).sum();
        if count == 1 {
            return vec![f.clone()];
        }
        if best.as_ref().is_none_or(|(_, b)| {
            count < b.iter().map(|(d, g)| g.degree().expect("nonzero") / d).sum()
        }) {
            best = Some((p, ddf));
        }
        tried += 1;
        if tried == 6 {
            break;
        }
    }
    let (p, ddf) = best.expect("some prime keeps the polynomial square-free");
    let mut modular = Vec::new();
    for (d, g) in ddf {
        equal_degree(&g, d, rng, &mut modular);
    }

    let bound = factor_bound(f) * 2;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = pb.clone();
    while pk <= bound {
        pk *= &pb;
        k += 1;
    }
    let lifted = hensel_all(f, &modular, p, k, &pk);
    recombine(f, lifted, &pk)
}

fn recombine(f: &ZPoly, lifted: Vec<ZPoly>, pk: &BigInt) -> Vec<ZPoly> {
    let mut remaining: Vec<ZPoly> = lifted;
    let mut current = f.clone();
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= remaining.len() {
        let lc = current.last().expect("nonzero").clone();
        for subset in Combinations::new(remaining.len(), size) {
            let mut g: ZPoly = vec![lc.clone()];
            for &i in &subset {
                g = zmod(&zmul(&g, &remaining[i]), pk);
            }
            let mut g = zsymmetric(&g, pk);
            primitive(&mut g);
            if let Some(q) = zdiv_exact(&current, &g) {
                found.push(g);
                current = q;
                primitive(&mut current);
                for &i in subset.iter().rev() {
                    remaining.remove(i);
                }
                continue 'outer;
            }
        }
        size += 1;
    }
    if current.len() > 1 {
        found.push(current);
    }
    found
}

/// Lexicographic `k`-subsets of `0..n`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;
    use crate::rng::Seed;

    fn qp(c: &[i64]) -> UniPoly<Rational> {
        UniPoly::new(c.iter().map(|&x| rat(x, 1)).collect(), &rat(0, 1))
    }

    fn product(fs: &[(UniPoly<Rational>, usize)]) -> UniPoly<Rational> {
        fs.iter().fold(qp(&[1]), |acc, (g, m)| (0..*m).fold(acc, |a, _| a.mul(g)))
    }

    #[test]
    fn combinations_enumerate() {
        let all: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn x4_plus_1_is_irreducible() {
        // Reducible modulo every prime; exercises recombination.
        let mut rng = Seed(1).stream("t");
        let f = qp(&[1, 0, 0, 0, 1]);
        assert_eq!(factor_square_free(&f, &mut rng), vec![f]);
    }

    #[test]
    fn splits_products() {
        let mut rng = Seed(2).stream("t");
        let a = qp(&[-2, 0, 1]);
        let b = qp(&[-3, 0, 1]);
        let c = qp(&[5, -7]);
        let f = a.mul(&b).mul(&c).mul(&c).scale(&rat(3, 7));
        let fs = factor(&f, &mut rng);
        assert_eq!(fs.len(), 3);
        assert_eq!(product(&fs), f.monic());
        assert_eq!(fs[2], (c.monic(), 2));
    }

    #[test]
    fn cyclotomic_product() {
        let mut rng = Seed(3).stream("t");
        // x^12 - 1 = Π Φ_d, d | 12: six factors.
        let mut c = vec![0i64; 13];
        c[0] = -1;
        c[12] = 1;
        let f = qp(&c);
        let fs = factor_square_free(&f, &mut rng);
        let mut degs: Vec<_> = fs.iter().map(|g| g.degree().unwrap()).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 2, 2, 2, 4]);
    }

    #[test]
    fn large_coefficients() {
        let mut rng = Seed(4).stream("t");
        let a = qp(&[123456789, -987654321, 1]);
        let b = qp(&[-1000003, 0, 0, 17]);
        let f = a.mul(&b);
        let fs = factor_square_free(&f, &mut rng);
        assert_eq!(fs.len(), 2);
        let prod = fs.iter().fold(qp(&[1]), |acc, g| acc.mul(g));
        assert_eq!(prod, f.monic());
    }
}
