use super::{reduce_mod_p, Field, Rational};

/// Primes below 2^62 used for multi-prime reduction checks, largest first.
pub const RNG_PRIMES: [u64; 8] = [
    4611686018427387847,
    4611686018427387817,
    4611686018427387787,
    4611686018427387761,
    4611686018427387751,
    4611686018427387737,
    4611686018427387733,
    4611686018427387709,
];

/// Default primes for exhaustive scans of the finite projective plane.
pub const SCAN_PRIMES: [u64; 2] = [31, 101];

/// Element of the prime field `F_p`, `2 < p < 2^62`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl Fp {
    pub fn new(v: u64, p: u64) -> Self {
        debug_assert!(p > 2 && p < (1 << 62));
        Fp { v: v % p, p }
    }

    pub fn from_i64(v: i64, p: u64) -> Self {
        Fp::new(v.rem_euclid(p as i64) as u64, p)
    }

    pub fn value(self) -> u64 {
        self.v
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    /// Representative in `(-p/2, p/2]`.
    pub fn symmetric(self) -> i64 {
        if self.v > self.p / 2 {
            self.v as i64 - self.p as i64
        } else {
            self.v as i64
        }
    }
}

impl std::fmt::Display for Fp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl std::fmt::Debug for Fp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (mod {})", self.v, self.p)
    }
}

impl Field for Fp {
    fn zero_like(&self) -> Self {
        Fp { v: 0, p: self.p }
    }
    fn one_like(&self) -> Self {
        Fp { v: 1, p: self.p }
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        let s = self.v + rhs.v;
        Fp { v: if s >= self.p { s - self.p } else { s }, p: self.p }
    }
    fn sub(&self, rhs: &Self) -> Self {
        let v = if self.v >= rhs.v { self.v - rhs.v } else { self.v + self.p - rhs.v };
        Fp { v, p: self.p }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let v = (u128::from(self.v) * u128::from(rhs.v) % u128::from(self.p)) as u64;
        Fp { v, p: self.p }
    }
    fn neg(&self) -> Self {
        Fp { v: if self.v == 0 { 0 } else { self.p - self.v }, p: self.p }
    }
    fn inv(&self) -> Option<Self> {
        if self.v == 0 {
            return None;
        }
        let (mut r0, mut r1) = (i128::from(self.p), i128::from(self.v));
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "modulus must be prime");
        Some(Fp { v: t0.rem_euclid(i128::from(self.p)) as u64, p: self.p })
    }
    fn from_rational_like(&self, r: &Rational) -> Option<Self> {
        reduce_mod_p(r, self.p).ok()
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Fp::from_i64(n, self.p)
    }
}
