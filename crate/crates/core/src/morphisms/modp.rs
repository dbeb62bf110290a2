//! Forms reduced modulo a small prime and the points of `P²(F_p)`.

use crate::error::{Error, Result};
use crate::exactalg::{reduce_mod_p, Fp};
use crate::poly::{HomPoly, Monomial};

/// A form with coefficients reduced into `F_p`.
#[derive(Clone, Debug)]
pub struct ReducedForm {
    p: u64,
    degree: u32,
    terms: Vec<(Monomial, u64)>,
}

impl ReducedForm {
    /// `BadPrime` if a coefficient's denominator vanishes modulo `p`.
    pub fn new(f: &HomPoly, p: u64) -> Result<Self> {
        let mut terms = Vec::with_capacity(f.terms().len());
        for (m, c) in f.terms() {
            let v = reduce_mod_p(c, p)?.value();
            if v != 0 {
                terms.push((*m, v));
            }
        }
        Ok(ReducedForm { p, degree: f.degree(), terms })
    }

    pub fn eval(&self, x: &[u64; 3]) -> u64 {
        let p = u128::from(self.p);
        let d = self.degree as usize;
        let mut pows = [vec![1u64; d + 1], vec![1u64; d + 1], vec![1u64; d + 1]];
        for (i, xi) in x.iter().enumerate() {
            for e in 1..=d {
                pows[i][e] = (u128::from(pows[i][e - 1]) * u128::from(*xi) % p) as u64;
            }
        }
        let mut acc: u128 = 0;
        for (m, c) in &self.terms {
            let t = u128::from(*c) * u128::from(pows[0][m[0] as usize]) % p;
            let t = t * u128::from(pows[1][m[1] as usize]) % p;
            let t = t * u128::from(pows[2][m[2] as usize]) % p;
            acc = (acc + t) % p;
        }
        acc as u64
    }
}

/// Checks that `p` is an odd prime below `2^62`, as the scans require.
pub fn check_prime(p: u64) -> Result<()> {
    let prime = p > 2 && p < (1 << 62) && (3..).step_by(2).take_while(|d| d * d <= p).all(|d| p % d != 0);
    if prime && p % 2 == 1 {
        Ok(())
    } else {
        Err(Error::BadPrime(p))
    }
}

/// All `p² + p + 1` points of `P²(F_p)`, last nonzero coordinate one.
pub fn proj_points(p: u64) -> impl Iterator<Item = [u64; 3]> {
    let affine = (0..p).flat_map(move |x| (0..p).map(move |y| [x, y, 1]));
    let line = (0..p).map(|x| [x, 1, 0]);
    affine.chain(line).chain(std::iter::once([1, 0, 0]))
}

/// Normalizes a nonzero vector over `F_p`; `None` for the zero vector.
pub fn normalize_mod<const N: usize>(v: [u64; N], p: u64) -> Option<[u64; N]> {
    let last = v.iter().rposition(|&x| x != 0)?;
    let inv = crate::exactalg::Field::inv(&Fp::new(v[last], p))?.value();
    Some(v.map(|x| (u128::from(x) * u128::from(inv) % u128::from(p)) as u64))
}

/// Rank of a small matrix over `F_p`.
pub fn rank_mod(rows: &[Vec<u64>], p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(r) = (rank..a.len()).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, r);
        let inv = crate::exactalg::Field::inv(&Fp::new(a[rank][c], p)).expect("nonzero").value();
        for r in rank + 1..a.len() {
            if a[r][c] == 0 {
                continue;
            }
            let f = u128::from(a[r][c]) * u128::from(inv) % u128::from(p);
            for k in c..cols {
                let sub = (f * u128::from(a[rank][k]) % u128::from(p)) as u64;
                a[r][k] = (a[r][k] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{x, y, z};

    #[test]
    fn plane_has_the_right_size() {
        assert_eq!(proj_points(31).count(), 31 * 31 + 31 + 1);
        let mut pts: Vec<_> = proj_points(5).collect();
        pts.sort();
        pts.dedup();
        assert_eq!(pts.len(), 31);
    }

    #[test]
    fn evaluation_matches_exact() {
        let f = &(&x() * &x()) - &(&y() * &z()).scale(&crate::exactalg::rat(3, 2));
        let r = ReducedForm::new(&f, 7).unwrap();
        // 4 - (3/2)·2·5 = -11 ≡ 3 (mod 7)
        assert_eq!(r.eval(&[2, 2, 5]), 3);
        assert!(ReducedForm::new(&f, 3).is_ok());
        let g = f.scale(&crate::exactalg::rat(1, 7));
        assert_eq!(ReducedForm::new(&g, 7).unwrap_err(), Error::BadPrime(7));
    }

    #[test]
    fn primes_and_ranks() {
        assert!(check_prime(31).is_ok());
        assert_eq!(check_prime(33), Err(Error::BadPrime(33)));
        assert!(check_prime(2).is_err());
        assert_eq!(rank_mod(&[vec![1, 2], vec![2, 4]], 7), 1);
        assert_eq!(rank_mod(&[vec![1, 2], vec![2, 5]], 7), 2);
        assert_eq!(normalize_mod([2, 4, 0], 7), Some([4, 1, 0]));
    }
}
