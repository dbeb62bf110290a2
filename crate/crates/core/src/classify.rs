//! Which classes `(q2, s2)` are represented by morphisms `P² → Gr(2, C^4)`.
//!
//! With `c² = q2 + s2` and `ℓ = min(q2, s2)` the decision runs as follows.
//!
//! * `q2 + s2` must be a positive square.
//! * `ℓ = 0` is realized by finite self-maps of `P²` of degree `c²`
//!   followed by a plane in the Grassmannian.
//! * Split bundles `O(a) ⊕ O(b)` with `a + b = c` realize `(ab, c² − ab)`.
//! * For `c ≤ 3` every class is realized by a bundle built from `ℓ` points.
//! * For `c ≥ 4` a bundle with `c₁ = c` and a section vanishing on fewer
//!   than `c − 1` points would violate the Cayley–Bacharach condition for
//!   `O(c − 3)`, which rules out `1 ≤ ℓ ≤ c − 2`.
//! * Point sets satisfying that condition exist for `ℓ ∈ [t(c−3)+2, t·c]`
//!   (points on a rational curve of degree `t`) and for
//!   `ℓ ∈ [(c−1)(c−2)/2 + 1, ⌊c²/2⌋]` (points in general position).
//! * Everything else is left open.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::cayley_bacharach::{
    cb_check, gen_curve_points, gen_position_points, verify_position, CbReport, PointConfig, PositionReport,
};
use crate::error::Result;
use crate::grassmann::exact_sqrt;
use crate::rng::Seed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Status {
    Realizable,
    NotRealizable,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Realizable => "realizable",
            Status::NotRealizable => "not realizable",
            Status::Unknown => "unknown",
        };
        f.write_str(s)
    }
}

/// How the points of a Cayley–Bacharach witness are chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Placement {
    /// Any distinct points; the condition is vacuous or automatic.
    Any,
    /// All points on one line.
    Collinear,
    NoThreeCollinear,
    /// Points on the rational curve `Y^t = X^(t−1)·Z`.
    RationalCurve,
    /// Random points with no `r·c + 1` on a curve of degree `r ≤ t`.
    GeneralPosition,
}

/// A construction realizing a class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WitnessRecipe {
    /// The bundle `O(a) ⊕ O(b)`.
    Split { a: u64, b: u64 },
    /// A linear plane in the Grassmannian; class `(0, 1)`.
    TrivialPlane,
    /// A finite self-map of `P²` given by forms of degree `n`.
    FiniteSelfMap { n: u64 },
    /// A bundle with `c₁ = c` and a section vanishing on `ell` points.
    CbPoints { ell: u64, c: u64, t: u64, strict_three: bool, placement: Placement },
    /// The dual morphism of the inner construction.
    Dual { inner: Box<WitnessRecipe> },
}

impl WitnessRecipe {
    fn dual(self) -> Self {
        WitnessRecipe::Dual { inner: Box::new(self) }
    }

    /// The recipe with any outer duals removed, and whether their number is odd.
    pub fn undualized(&self) -> (&WitnessRecipe, bool) {
        match self {
            WitnessRecipe::Dual { inner } => {
                let (r, odd) = inner.undualized();
                (r, !odd)
            }
            other => (other, false),
        }
    }

    /// For a point recipe with `c ≥ 3`: generates the points, checks their
    /// position, and runs the Cayley–Bacharach test for `O(c − 3)`.
    pub fn check_points(&self, seed: Seed, budget: u128) -> Result<Option<PointWitness>> {
        let (WitnessRecipe::CbPoints { ell, c, t, strict_three, placement }, _) = self.undualized() else {
            return Ok(None);
        };
        let (ell, c, t) = (*ell as usize, *c as u32, *t as u32);
        if ell == 0 || c < 3 {
            return Ok(None);
        }
        let points = match placement {
            Placement::Collinear | Placement::RationalCurve => gen_curve_points(ell, t.max(1), seed)?,
            Placement::Any => gen_position_points(ell, 0, c, false, seed, budget)?,
            Placement::NoThreeCollinear | Placement::GeneralPosition => {
                gen_position_points(ell, t, c, *strict_three, seed, budget)?
            }
        };
        let position = verify_position(&points, t, c, *strict_three, budget)?;
        let cb = cb_check(&points, c - 3);
        Ok(Some(PointWitness { points, position, cb }))
    }
}

impl fmt::Display for WitnessRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessRecipe::Split { a, b } => write!(f, "Split({a},{b})"),
            WitnessRecipe::TrivialPlane => write!(f, "TrivialPlane"),
            WitnessRecipe::FiniteSelfMap { n } => write!(f, "FiniteSelfMap({n})"),
            WitnessRecipe::CbPoints { ell, c, t, strict_three, placement } => {
                write!(f, "CbPoints(l={ell}, c={c}, t={t}, {placement:?}")?;
                if *strict_three {
                    write!(f, ", no three collinear")?;
                }
                write!(f, ")")
            }
            WitnessRecipe::Dual { inner } => write!(f, "Dual({inner})"),
        }
    }
}

/// Points generated for a recipe together with the checks run on them.
#[derive(Clone, Debug)]
pub struct PointWitness {
    pub points: PointConfig,
    pub position: PositionReport,
    pub cb: CbReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassVerdict {
    pub q2: u64,
    pub s2: u64,
    pub status: Status,
    /// Short tag naming the branch of the decision that applied.
    pub reason: String,
    pub witness: Option<WitnessRecipe>,
    /// A remark the reader should weigh against the verdict.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub caveat: Option<String>,
}

impl fmt::Display for ClassVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}): {} [{}]", self.q2, self.s2, self.status, self.reason)?;
        if let Some(w) = &self.witness {
            write!(f, " via {w}")?;
        }
        Ok(())
    }
}

/// Whether the split-bundle pass runs before the interval tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Full,
    /// Only the existence and nonexistence intervals, for `c ≥ 4`.
    IntervalsOnly,
}

fn verdict(q2: u64, s2: u64, status: Status, reason: impl Into<String>, witness: Option<WitnessRecipe>) -> ClassVerdict {
    ClassVerdict { q2, s2, status, reason: reason.into(), witness, caveat: None }
}

/// `(c−1)(c−2)/2`, the number of degree-`(c−3)` monomials.
fn n_minus(c: u64) -> u64 {
    (c - 1) * (c - 2) / 2
}

/// Largest `k` with `k·c ≤ (c−1)(c−2)/2`.
pub fn curve_levels(c: u64) -> u64 {
    n_minus(c) / c
}

/// Values of `ℓ ≤ c²/2` excluded by the Cayley–Bacharach obstruction, `c ≥ 4`.
pub fn obstructed(c: u64, ell: u64) -> bool {
    c >= 4 && (1..=c - 2).contains(&ell)
}

/// The intervals `(lo, hi, t)` of `ℓ` with a point witness, `c ≥ 5`; the
/// last one has `t = c − 3` and uses points in general position.
pub fn existence_intervals(c: u64) -> Vec<(u64, u64, u64)> {
    let mut out: Vec<(u64, u64, u64)> = (1..=curve_levels(c)).map(|t| (t * (c - 3) + 2, t * c, t)).collect();
    out.push((n_minus(c) + 1, c * c / 2, c - 3));
    out
}

/// Decides the class with every available argument.
pub fn realizability(q2: u64, s2: u64) -> ClassVerdict {
    realizability_with(q2, s2, Mode::Full)
}

pub fn realizability_with(q2: u64, s2: u64, mode: Mode) -> ClassVerdict {
    let Some(sum) = q2.checked_add(s2) else {
        return verdict(q2, s2, Status::NotRealizable, "sum-not-square", None);
    };
    if sum == 0 {
        return verdict(q2, s2, Status::NotRealizable, "constant-map", None);
    }
    let Some(c) = exact_sqrt(sum) else {
        return verdict(q2, s2, Status::NotRealizable, "sum-not-square", None);
    };
    let ell = q2.min(s2);
    let dualize = |w: WitnessRecipe| if q2 > s2 { w.dual() } else { w };
    if ell == 0 {
        let w = if c == 1 { WitnessRecipe::TrivialPlane } else { WitnessRecipe::FiniteSelfMap { n: c } };
        // The self-map class is (0, c²); its dual carries the other one.
        let w = if q2 > 0 { w.dual() } else { w };
        return verdict(q2, s2, Status::Realizable, "finite-self-map", Some(w));
    }
    if mode == Mode::Full || c <= 3 {
        if let Some((a, b)) = split_degrees(c, ell) {
            return verdict(q2, s2, Status::Realizable, "split-bundle", Some(dualize(WitnessRecipe::Split { a, b })));
        }
    }
    if c <= 3 {
        let w = WitnessRecipe::CbPoints { ell, c, t: 0, strict_three: false, placement: Placement::Any };
        let mut v = verdict(q2, s2, Status::Realizable, "low-degree-cb", Some(dualize(w)));
        if c == 3 && ell == 1 {
            v.caveat = Some(
                "a single point fails the Cayley-Bacharach test for O(0), so the point construction does not apply"
                    .into(),
            );
        }
        return v;
    }
    if obstructed(c, ell) {
        return verdict(q2, s2, Status::NotRealizable, "cb-obstruction", None);
    }
    if c == 4 {
        let (strict_three, placement) =
            if ell == 3 { (false, Placement::Collinear) } else { (true, Placement::NoThreeCollinear) };
        let w = WitnessRecipe::CbPoints { ell, c, t: 1, strict_three, placement };
        return verdict(q2, s2, Status::Realizable, "cb-degree-four", Some(dualize(w)));
    }
    let intervals = existence_intervals(c);
    let last = intervals.len() - 1;
    for (i, &(lo, hi, t)) in intervals.iter().enumerate() {
        if (lo..=hi).contains(&ell) {
            let (placement, reason) = if i == last {
                (Placement::GeneralPosition, "cb-general-position".to_string())
            } else {
                (Placement::RationalCurve, format!("cb-curve-t={t}"))
            };
            let w = WitnessRecipe::CbPoints { ell, c, t, strict_three: false, placement };
            return verdict(q2, s2, Status::Realizable, reason, Some(dualize(w)));
        }
    }
    verdict(q2, s2, Status::Unknown, "open-gap", None)
}

/// `(a, b)` with `a ≤ b`, `a + b = c` and `a·b = ell`, if any.
fn split_degrees(c: u64, ell: u64) -> Option<(u64, u64)> {
    let disc = (c * c).checked_sub(4 * ell)?;
    let r = exact_sqrt(disc)?;
    ((c - r) % 2 == 0).then(|| ((c - r) / 2, (c + r) / 2))
}

/// Classes `(ab, c² − ab)` of split bundles with `a + b = c`, `a, b ≥ 0`.
pub fn decomposable_classes(c: u64) -> BTreeSet<(u64, u64)> {
    (0..=c).map(|a| a * (c - a)).map(|q| (q, c * c - q)).collect()
}

/// The classes of embeddings of `P²` into the Grassmannian.
///
/// This is a known classification quoted as a fact, not derived here.
pub fn embedded_classes() -> BTreeSet<(u64, u64)> {
    [(1, 0), (0, 1), (1, 3), (3, 1)].into_iter().collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub c: u64,
    pub verdicts: Vec<ClassVerdict>,
    pub realizable: usize,
    pub not_realizable: usize,
    pub unknown: usize,
}

impl TableRow {
    /// `q2` values with the given status.
    pub fn with_status(&self, s: Status) -> Vec<u64> {
        self.verdicts.iter().filter(|v| v.status == s).map(|v| v.q2).collect()
    }
}

/// Verdicts for all `(q2, c² − q2)` with `1 ≤ c ≤ c_max`.
pub fn table(c_max: u64, mode: Mode) -> Vec<TableRow> {
    (1..=c_max)
        .map(|c| {
            let verdicts: Vec<ClassVerdict> =
                (0..=c * c).map(|q2| realizability_with(q2, c * c - q2, mode)).collect();
            let count = |s: Status| verdicts.iter().filter(|v| v.status == s).count();
            TableRow {
                c,
                realizable: count(Status::Realizable),
                not_realizable: count(Status::NotRealizable),
                unknown: count(Status::Unknown),
                verdicts,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn status(q2: u64, s2: u64) -> Status {
        realizability(q2, s2).status
    }

    #[test]
    fn special_classes() {
        assert_eq!(status(1, 15), Status::NotRealizable);
        assert_eq!(realizability(1, 15).reason, "cb-obstruction");
        let v = realizability(1, 3);
        assert_eq!(v.witness, Some(WitnessRecipe::Split { a: 1, b: 1 }));
        let v = realizability(3, 1);
        assert_eq!(v.witness.unwrap().to_string(), "Dual(Split(1,1))");
        assert_eq!(status(7, 9), Status::Realizable);
        assert_eq!(status(3, 5), Status::NotRealizable);
        assert_eq!(realizability(3, 5).reason, "sum-not-square");
        assert_eq!(status(0, 0), Status::NotRealizable);
        assert_eq!(realizability(0, 25).witness, Some(WitnessRecipe::FiniteSelfMap { n: 5 }));
        assert_eq!(realizability(1, 0).witness.unwrap().to_string(), "Dual(TrivialPlane)");
    }

    #[test]
    fn intervals_alone_leave_gaps() {
        assert_eq!(realizability_with(6, 19, Mode::IntervalsOnly).status, Status::Unknown);
        let v = realizability(6, 19);
        assert_eq!(v.witness, Some(WitnessRecipe::Split { a: 2, b: 3 }));
        assert_eq!(realizability(19, 6).witness.unwrap().to_string(), "Dual(Split(2,3))");
    }

    #[test]
    fn decomposables() {
        assert_eq!(decomposable_classes(2), [(0, 4), (1, 3)].into_iter().collect());
        assert_eq!(decomposable_classes(4), [(0, 16), (3, 13), (4, 12)].into_iter().collect());
        assert_eq!(decomposable_classes(1), [(0, 1)].into_iter().collect());
        assert_eq!(embedded_classes().len(), 4);
        assert!(!embedded_classes().contains(&(2, 2)));
    }

    #[test]
    fn interval_arithmetic() {
        assert_eq!(curve_levels(5), 1);
        assert_eq!(existence_intervals(5), vec![(4, 5, 1), (7, 12, 2)]);
        assert_eq!(existence_intervals(6), vec![(5, 6, 1), (11, 18, 3)]);
        assert_eq!(curve_levels(9), 3);
    }

    #[test]
    fn the_one_point_caveat() {
        assert!(realizability(1, 8).caveat.is_some());
        assert!(realizability(2, 7).caveat.is_none());
    }
}
