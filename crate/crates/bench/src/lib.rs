//! Inputs shared by the benchmarks.

use grassmorph::cayley_bacharach::PointConfig;
use grassmorph::exactalg::{rat, Matrix, Rational};
use grassmorph::poly::ProjPoint;

/// A dense `n × n` integer matrix with entries in `[-9, 9]`, from a fixed
/// linear congruential sequence.
pub fn dense_matrix(n: usize) -> Matrix<Rational> {
    let mut state: u64 = 0x2545_f491_4f6c_dd1d;
    let rows = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    state = state.wrapping_mul(6_364_136_223_846_793_005).wrapping_add(1_442_695_040_888_963_407);
                    rat((state >> 33) as i64 % 19 - 9, 1)
                })
                .collect()
        })
        .collect();
    Matrix::from_rows(rows, n, &rat(0, 1))
}

/// `n` points on the parabola `Y·Z = X²`, so that no three are collinear.
pub fn conic_points(n: usize) -> PointConfig {
    let pts = (1..=n as i64).map(|s| ProjPoint::from_ints([s, s * s, 1])).collect();
    PointConfig::new(pts).expect("distinct points")
}
