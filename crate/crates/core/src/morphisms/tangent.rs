//! Surjections `C^4 ⊗ O → T` onto the tangent bundle of `P²`.
//!
//! A section of `T` lifts through the Euler sequence `0 → O → O(1)³ → T → 0`
//! to a triple of linear forms, that is a 3×3 matrix `A` acting by
//! `x ↦ A·x`, determined up to adding a multiple of the identity. Four such
//! matrices give a surjection when at every point `x` the vectors
//! `A₁x, …, A₄x, x` span `C³`.

use rand::Rng as _;

use super::baselocus::{base_locus, BaseLocus, EliminationConfig};
use crate::error::{Error, Result};
use crate::exactalg::{rat, Field, Matrix, Rational};
use crate::grassmann::{CohomClass, PlueckerPoint, INDEX_PAIRS};
use crate::poly::{common_zeros, CommonZeros, HomPoly, ProjPoint, COORDINATE_RETRIES};
use crate::rng::Seed;

/// Four lifted sections of the tangent bundle.
#[derive(Clone, Debug, PartialEq)]
pub struct TangentSurjection {
    matrices: [[[Rational; 3]; 3]; 4],
}

impl TangentSurjection {
    pub fn from_matrices(m: [[[Rational; 3]; 3]; 4]) -> Self {
        TangentSurjection { matrices: m }
    }

    pub fn from_integers(m: [[[i64; 3]; 3]; 4]) -> Self {
        Self::from_matrices(m.map(|a| a.map(|r| r.map(|c| rat(c, 1)))))
    }

    /// Reads each section from a triple of linear forms.
    pub fn from_sections(sections: [[HomPoly; 3]; 4]) -> Result<Self> {
        if sections.iter().flatten().any(|f| f.degree() != 1) {
            return Err(Error::InvalidInput("tangent sections must be triples of linear forms".into()));
        }
        Ok(Self::from_matrices(sections.map(|triple| {
            triple.map(|f| std::array::from_fn(|j| f.coeff(&unit(j))))
        })))
    }

    pub fn matrices(&self) -> &[[[Rational; 3]; 3]; 4] {
        &self.matrices
    }

    /// The triples of linear forms.
    pub fn sections(&self) -> [[HomPoly; 3]; 4] {
        self.matrices.each_ref().map(|a| a.each_ref().map(|row| HomPoly::linear(row.clone())))
    }

    /// Dimension of the span of the four sections in `H⁰(T)`, which is the
    /// span of the four matrices modulo the identity.
    pub fn independence_rank(&self) -> usize {
        let flat = |a: &[[Rational; 3]; 3]| a.iter().flatten().cloned().collect::<Vec<_>>();
        let mut rows: Vec<Vec<Rational>> = self.matrices.iter().map(flat).collect();
        rows.push(flat(&identity()));
        Matrix::from_rows(rows, 9, &rat(0, 1)).rank() - 1
    }

    /// The ten 3×3 minors of the 5×3 matrix with rows `A₁x, …, A₄x, x`.
    pub fn minor_forms(&self) -> Vec<HomPoly> {
        let mut rows: Vec<[HomPoly; 3]> = self.sections().into_iter().collect();
        rows.push([HomPoly::var(0), HomPoly::var(1), HomPoly::var(2)]);
        let mut out = Vec::with_capacity(10);
        for i in 0..5 {
            for j in i + 1..5 {
                for k in j + 1..5 {
                    out.push(det3(&rows[i], &rows[j], &rows[k]));
                }
            }
        }
        out
    }

    /// The image of `x` in `Gr(2, C^4)`: the quotient `C^4 → C³/⟨x⟩` has
    /// minors `det[x, Aᵢx, Aⱼx]`.
    pub fn evaluate(&self, x: &ProjPoint) -> Result<PlueckerPoint> {
        let c = x.coords();
        let images: Vec<[Rational; 3]> = self
            .matrices
            .iter()
            .map(|a| std::array::from_fn(|r| (0..3).fold(rat(0, 1), |acc, j| acc.add(&a[r][j].mul(&c[j])))))
            .collect();
        let det = |u: &[Rational; 3], v: &[Rational; 3]| {
            let m = |i: usize, j: usize| u[i].mul(&v[j]).sub(&u[j].mul(&v[i]));
            c[0].mul(&m(1, 2)).sub(&c[1].mul(&m(0, 2))).add(&c[2].mul(&m(0, 1)))
        };
        PlueckerPoint::unchecked(INDEX_PAIRS.map(|(i, j)| det(&images[i], &images[j])))
    }

    /// Decides whether the sections generate `T` at every point.
    pub fn surjectivity(&self, cfg: &EliminationConfig, seed: Seed) -> Result<BaseLocus> {
        base_locus(&self.minor_forms(), cfg, &mut seed.stream("tangent-surjectivity"))
    }

    pub fn is_surjective(&self, cfg: &EliminationConfig, seed: Seed) -> Result<bool> {
        Ok(self.surjectivity(cfg, seed)?.is_empty())
    }

    /// Computes the class from the zeros of the section `Σ vᵢ sᵢ` for a
    /// random `v`: the points where `B·x` is proportional to `x`, with
    /// `B = Σ vᵢ Aᵢ`.
    ///
    /// The three 2×2 minors of `[B·x | x]` cut out this locus. Two of them,
    /// those involving the coordinate `x_k`, meet in the locus plus the
    /// point of the line `x_k = 0` where `(B·x)_k = 0`; the third minor
    /// separates the two, and the local multiplicities agree away from
    /// `x_k = 0`.
    pub fn cohomology_class(&self, cfg: &EliminationConfig, seed: Seed) -> Result<TangentClassEvidence> {
        if !self.is_surjective(cfg, seed)? {
            return Err(Error::Unsurjective);
        }
        let mut rng = seed.stream("tangent-section");
        for _ in 0..COORDINATE_RETRIES {
            let v: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-10i64..=10));
            let b: [[Rational; 3]; 3] = std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    (0..4).fold(rat(0, 1), |acc, s| acc + &self.matrices[s][i][j] * rat(v[s], 1))
                })
            });
            let w = b.clone().map(HomPoly::linear);
            let xs = [HomPoly::var(0), HomPoly::var(1), HomPoly::var(2)];
            let m = |i: usize, j: usize| &(&w[i] * &xs[j]) - &(&w[j] * &xs[i]);
            for pivot in 0..3 {
                let [i, j] = others(pivot);
                let (f, g, h) = (m(pivot, i), m(pivot, j), m(i, j));
                let all = match common_zeros(&f, &g, &mut rng) {
                    Ok(z) => z,
                    Err(Error::CommonComponent | Error::RetriesExhausted(_)) => break,
                    Err(e) => return Err(e),
                };
                let mut kept = Vec::new();
                let mut clean = true;
                for z in all.zeros {
                    let on_h = h.eval_in(z.point.coords()).is_some_and(|e| e.is_zero());
                    if on_h {
                        clean &= !z.point.coords()[pivot].is_zero();
                        kept.push(z);
                    }
                }
                if !clean {
                    continue;
                }
                let zeros = CommonZeros { zeros: kept };
                let q2 = zeros.total() as u64;
                let s2 = 9u64.checked_sub(q2).ok_or_else(|| {
                    Error::Inconclusive(format!("zero count {q2} exceeds 9"))
                })?;
                let class = CohomClass::new(q2, s2)?;
                return Ok(TangentClassEvidence { class, v, b, pivot, zeros });
            }
        }
        Err(Error::RetriesExhausted(COORDINATE_RETRIES))
    }
}

/// A quadruple of integer sections known to generate `T` everywhere.
pub const TANGENT_FIXTURE: [[[i64; 3]; 3]; 4] = [
    [[2, 1, 0], [2, 1, 1], [0, 2, -1]],
    [[-2, 1, -1], [-1, 0, -1], [-1, 1, -1]],
    [[-2, 1, 0], [-1, 2, 1], [1, -1, 1]],
    [[-1, -2, -1], [2, 0, 1], [2, 2, -2]],
];

/// Draws four sections with entries in `[-2, 2]` until they are
/// independent and generate `T` everywhere.
pub fn tangent_random(cfg: &EliminationConfig, seed: Seed) -> Result<TangentSurjection> {
    let mut rng = seed.stream("tangent-random");
    for attempt in 0..COORDINATE_RETRIES {
        let t = TangentSurjection::from_integers(std::array::from_fn(|_| {
            std::array::from_fn(|_| std::array::from_fn(|_| rng.gen_range(-2i64..=2)))
        }));
        if t.independence_rank() < 4 {
            continue;
        }
        match t.is_surjective(cfg, seed.child(&format!("draw-{attempt}"))) {
            Ok(true) => return Ok(t),
            Ok(false) | Err(Error::Inconclusive(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::RetriesExhausted(COORDINATE_RETRIES))
}

#[derive(Clone, Debug)]
pub struct TangentClassEvidence {
    pub class: CohomClass,
    pub v: [i64; 4],
    /// `B = Σ vᵢ Aᵢ`.
    pub b: [[Rational; 3]; 3],
    /// Coordinate whose two minors were intersected.
    pub pivot: usize,
    /// Zeros of the section with multiplicities.
    pub zeros: CommonZeros,
}

fn identity() -> [[Rational; 3]; 3] {
    std::array::from_fn(|i| std::array::from_fn(|j| rat(i64::from(i == j), 1)))
}

fn unit(j: usize) -> [u32; 3] {
    let mut m = [0; 3];
    m[j] = 1;
    m
}

fn others(k: usize) -> [usize; 2] {
    match k {
        0 => [1, 2],
        1 => [0, 2],
        _ => [0, 1],
    }
}

fn det3(a: &[HomPoly; 3], b: &[HomPoly; 3], c: &[HomPoly; 3]) -> HomPoly {
    let m2 = |i: usize, j: usize| &(&b[i] * &c[j]) - &(&b[j] * &c[i]);
    let t0 = &a[0] * &m2(1, 2);
    let t1 = &a[1] * &m2(0, 2);
    let t2 = &a[2] * &m2(0, 1);
    &(&t0 - &t1) + &t2
}
