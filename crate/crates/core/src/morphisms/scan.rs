//! Fiber sizes of a split morphism over `P²(F_p)`.
//!
//! The map is evaluated at the points of the finite plane and images are
//! compared by normalized Plücker coordinates. Fibers of size one at every
//! point are evidence, not proof, that the morphism is injective.

use std::collections::BTreeMap;

use rand::Rng as _;
use serde::Serialize;

use super::baselocus::EliminationConfig;
use super::modp::{check_prime, normalize_mod, proj_points};
use super::split::SplitSurjection;
use crate::error::{Error, Result};
use crate::grassmann::INDEX_PAIRS;
use crate::rng::Seed;

/// Number of colliding fibers kept as examples in a report.
pub const MAX_REPORTED_COLLISIONS: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "mode")]
pub enum ScanMode {
    Full,
    /// `n` points drawn uniformly, with repetition, from the affine chart `Z = 1`.
    Sample { n: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct CollisionReport {
    pub degrees: (u32, u32),
    pub prime: u64,
    pub mode: ScanMode,
    pub points_scanned: usize,
    /// Points where the reduced matrix has rank below two.
    pub rank_deficient: usize,
    pub distinct_images: usize,
    /// Fiber size to the number of images with that fiber size.
    pub fiber_histogram: BTreeMap<usize, usize>,
    /// A few fibers with more than one point.
    pub collisions: Vec<Vec<[u64; 3]>>,
    /// False when `gcd(a, b) > 1`, where injectivity is not expected.
    pub coprime_degrees: bool,
    pub label: &'static str,
}

impl CollisionReport {
    pub fn injective(&self) -> bool {
        self.fiber_histogram.keys().all(|&k| k == 1)
    }
}

/// Scans `P²(F_p)`, fully or by sampling, after checking surjectivity over C.
pub fn collision_scan(s: &SplitSurjection, p: u64, mode: ScanMode, seed: Seed) -> Result<CollisionReport> {
    check_prime(p)?;
    if !s.is_surjective(&EliminationConfig::default(), seed)? {
        return Err(Error::Unsurjective);
    }
    let reduced = s.reduced(p)?;
    let points: Vec<[u64; 3]> = match mode {
        ScanMode::Full => proj_points(p).collect(),
        ScanMode::Sample { n } => {
            let mut rng = seed.stream("collision-sample");
            let mut pts: Vec<[u64; 3]> = (0..n).map(|_| [rng.gen_range(0..p), rng.gen_range(0..p), 1]).collect();
            pts.sort_unstable();
            pts.dedup();
            pts
        }
    };
    let mut fibers: BTreeMap<[u64; 6], Vec<[u64; 3]>> = BTreeMap::new();
    let mut rank_deficient = 0;
    for x in &points {
        let m = reduced.each_ref().map(|row| row.each_ref().map(|f| f.eval(x)));
        let pl = INDEX_PAIRS.map(|(i, j)| {
            let pp = u128::from(p);
            let a = u128::from(m[0][i]) * u128::from(m[1][j]) % pp;
            let b = u128::from(m[0][j]) * u128::from(m[1][i]) % pp;
            ((a + pp - b) % pp) as u64
        });
        match normalize_mod(pl, p) {
            Some(key) => fibers.entry(key).or_default().push(*x),
            None => rank_deficient += 1,
        }
    }
    let mut fiber_histogram = BTreeMap::new();
    for f in fibers.values() {
        *fiber_histogram.entry(f.len()).or_insert(0) += 1;
    }
    let collisions = fibers.values().filter(|f| f.len() > 1).take(MAX_REPORTED_COLLISIONS).cloned().collect();
    let (a, b) = s.degrees();
    Ok(CollisionReport {
        degrees: (a, b),
        prime: p,
        mode,
        points_scanned: points.len(),
        rank_deficient,
        distinct_images: fibers.len(),
        fiber_histogram,
        collisions,
        coprime_degrees: gcd(a, b) == 1,
        label: "finite-field evidence",
    })
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphisms::example_split;
    use crate::poly::{x, y, z, HomPoly};

    #[test]
    fn veronese_is_injective_over_small_fields() {
        for p in [31, 101] {
            let r = collision_scan(&example_split(1, 1).unwrap(), p, ScanMode::Full, Seed(0)).unwrap();
            assert_eq!(r.points_scanned as u64, p * p + p + 1);
            assert!(r.injective(), "{r:?}");
            assert!(r.coprime_degrees);
        }
    }

    #[test]
    fn degree_one_rows_are_injective() {
        for b in [2, 3] {
            let r = collision_scan(&example_split(1, b).unwrap(), 31, ScanMode::Full, Seed(0)).unwrap();
            assert!(r.injective(), "(1,{b}): {:?}", r.fiber_histogram);
            assert_eq!(r.rank_deficient, 0);
        }
    }

    #[test]
    fn sampling_is_seeded() {
        let s = example_split(1, 2).unwrap();
        let a = collision_scan(&s, 31, ScanMode::Sample { n: 50 }, Seed(2)).unwrap();
        let b = collision_scan(&s, 31, ScanMode::Sample { n: 50 }, Seed(2)).unwrap();
        assert_eq!(a.fiber_histogram, b.fiber_histogram);
        assert!(a.points_scanned <= 50);
    }

    #[test]
    fn square_degrees_collide() {
        // (X^2, Y^2, Z^2) is invariant under sign changes of the coordinates.
        let r = collision_scan(&example_split(2, 2).unwrap(), 31, ScanMode::Full, Seed(0)).unwrap();
        assert!(!r.coprime_degrees);
        assert!(!r.injective());
        assert!(!r.collisions.is_empty());
    }

    #[test]
    fn degenerate_and_bad_inputs_are_rejected() {
        let row = [x(), y(), z(), HomPoly::zero(1)];
        let s = SplitSurjection::new([row.clone(), row]).unwrap();
        assert_eq!(collision_scan(&s, 31, ScanMode::Full, Seed(0)).unwrap_err(), Error::Unsurjective);
        assert!(collision_scan(&example_split(1, 1).unwrap(), 33, ScanMode::Full, Seed(0)).is_err());
    }
}
