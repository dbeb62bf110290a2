//! The built-in regression suite run by `verify-paper`.

use std::collections::BTreeSet;

use grassmorph::cayley_bacharach::{cb_check, gen_position_points, PointConfig};
use grassmorph::classify::{realizability, table, Mode, Status, WitnessRecipe};
use grassmorph::exactalg::{rat, Matrix, Rational};
use grassmorph::grassmann::CohomClass;
use grassmorph::morphisms::{collision_scan, example_split, tangent_random, ScanMode, TangentSurjection, TANGENT_FIXTURE};
use grassmorph::poly::{monomials, HomPoly, ProjPoint};
use grassmorph::Error;
use rand::Rng as _;
use serde_json::{json, Value};

use crate::commands::Globals;

type Check = fn(&Globals) -> Result<String, String>;

fn err(e: Error) -> String {
    e.to_string()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    cond.then_some(()).ok_or_else(msg)
}

const CHECKS: &[(&str, Check)] = &[
    ("veronese-minors", veronese_minors),
    ("split-class-1-1", split_class_1_1),
    ("split-classes", split_classes),
    ("nonexistence-1-15", nonexistence),
    ("classify-3-1", classify_3_1),
    ("table-degree-four", table_degree_four),
    ("table-unknown-sets", table_unknown_sets),
    ("cb-collinear-triple", cb_collinear),
    ("cb-single-point", cb_single_point),
    ("cb-five-general-points", cb_five_points),
    ("cb-small-configurations", cb_small_configs),
    ("tangent-class", tangent_class),
    ("injectivity-scans", injectivity_scans),
    ("square-degree-scan", square_degree_scan),
    ("pluecker-relation", pluecker_relation),
    ("realizability-symmetry", symmetry),
];

/// Runs every check; returns the JSON list, a text summary and whether all passed.
pub fn run(g: &Globals) -> (Value, String, bool) {
    let mut out = Vec::new();
    let mut text = String::new();
    let mut all = true;
    for (name, check) in CHECKS {
        let result = check(g);
        let (passed, detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        all &= passed;
        text.push_str(&format!("{} {name}: {detail}\n", if passed { "PASS" } else { "FAIL" }));
        out.push(json!({ "name": name, "passed": passed, "detail": detail }));
    }
    let passed = out.iter().filter(|c| c["passed"] == true).count();
    text.push_str(&format!("{passed}/{} checks passed\n", out.len()));
    (Value::Array(out), text, all)
}

fn veronese_minors(_: &Globals) -> Result<String, String> {
    let polys = example_split(1, 1).map_err(err)?.pluecker_polys();
    let (x, y, z) = (HomPoly::var(0), HomPoly::var(1), HomPoly::var(2));
    let expected = [
        &(&x * &x) - &(&y * &z),
        &(&x * &y) - &(&z * &z),
        &x * &z,
        &(&y * &y) - &(&x * &z),
        &x * &x,
        &x * &y,
    ];
    for (p, e) in polys.iter().zip(&expected) {
        ensure(p == e || *p == -e, || format!("minor {p} differs from ±({e})"))?;
    }
    let rows: Vec<Vec<Rational>> = polys.iter().map(HomPoly::coefficient_vector).collect();
    let rank = Matrix::from_rows(rows, monomials(2).len(), &rat(0, 1)).rank();
    ensure(rank == 6, || format!("coefficient rank {rank}"))?;
    Ok("six minors span the ternary quadrics".into())
}

fn split_class_1_1(g: &Globals) -> Result<String, String> {
    let ev = example_split(1, 1).map_err(err)?.cohomology_class(&g.elimination(), g.seed).map_err(err)?;
    ensure(ev.class == CohomClass::new(1, 3).map_err(err)?, || format!("class {}", ev.class))?;
    ensure(ev.class.dual() == CohomClass::new(3, 1).map_err(err)?, || "dual class".into())?;
    Ok(format!("class {}, dual {}", ev.class, ev.class.dual()))
}

fn split_classes(g: &Globals) -> Result<String, String> {
    let mut seen = Vec::new();
    for (a, b) in [(1u32, 2u32), (2, 2), (2, 3)] {
        let ev = example_split(a, b).map_err(err)?.cohomology_class(&g.elimination(), g.seed).map_err(err)?;
        let q2 = u64::from(a * b);
        let c2 = u64::from(a + b).pow(2);
        ensure(ev.zeros.total() as u64 == q2, || format!("({a},{b}): {} zeros", ev.zeros.total()))?;
        ensure(ev.class.q2 == q2 && ev.class.q2 + ev.class.s2 == c2, || format!("({a},{b}): {}", ev.class))?;
        seen.push(ev.class.to_string());
    }
    Ok(seen.join(", "))
}

fn nonexistence(_: &Globals) -> Result<String, String> {
    let v = realizability(1, 15);
    ensure(v.status == Status::NotRealizable, || v.to_string())?;
    let z = PointConfig::from_ints(&[[1, 1, 1]]).map_err(err)?;
    let r = cb_check(&z, 1);
    ensure(!r.holds && r.certificate_is_valid(&z), || "single point certificate".into())?;
    Ok(format!("{v}; certificate {}", r.certificate.map(|f| f.to_string()).unwrap_or_default()))
}

fn classify_3_1(_: &Globals) -> Result<String, String> {
    let v = realizability(3, 1);
    let want = WitnessRecipe::Split { a: 1, b: 1 };
    ensure(v.status == Status::Realizable, || v.to_string())?;
    ensure(v.witness.as_ref().map(|w| w.undualized()) == Some((&want, true)), || v.to_string())?;
    Ok(v.to_string())
}

fn table_degree_four(_: &Globals) -> Result<String, String> {
    let rows = table(4, Mode::Full);
    for row in &rows[..3] {
        ensure(row.realizable as u64 == row.c * row.c + 1, || format!("c={} incomplete", row.c))?;
    }
    let r4 = &rows[3];
    ensure(r4.unknown == 0, || "c=4 has unknown classes".into())?;
    let no = r4.with_status(Status::NotRealizable);
    ensure(no == [1, 2, 14, 15], || format!("c=4 not realizable {no:?}"))?;
    Ok("c <= 3 all realizable; c = 4 excludes q2 in {1, 2, 14, 15}".into())
}

fn table_unknown_sets(_: &Globals) -> Result<String, String> {
    let set = |v: Vec<u64>| v.into_iter().collect::<BTreeSet<_>>();
    let cases = [
        (Mode::IntervalsOnly, vec![6, 19], vec![7, 8, 9, 10, 26, 27, 28, 29]),
        (Mode::Full, vec![], vec![7, 10, 26, 29]),
    ];
    for (mode, c5, c6) in cases {
        let rows = table(6, mode);
        let (u5, u6) = (rows[4].with_status(Status::Unknown), rows[5].with_status(Status::Unknown));
        ensure(set(u5.clone()) == set(c5) && set(u6.clone()) == set(c6), || {
            format!("{mode:?}: unknown {u5:?} and {u6:?}")
        })?;
    }
    Ok("intervals alone leave {6,19} and {7..10, 26..29}; split classes close (6,19), (8,28), (9,27) and their duals".into())
}

fn cb_collinear(_: &Globals) -> Result<String, String> {
    let z = PointConfig::from_ints(&[[0, 1, 1], [1, 2, 1], [2, 3, 1]]).map_err(err)?;
    ensure(cb_check(&z, 1).holds, || "collinear triple fails".into())?;
    Ok("holds at degree 1".into())
}

fn cb_single_point(_: &Globals) -> Result<String, String> {
    let z = PointConfig::from_ints(&[[3, -1, 2]]).map_err(err)?;
    let r = cb_check(&z, 1);
    ensure(!r.holds && r.certificate_is_valid(&z), || "no valid failure".into())?;
    let f = r.certificate.expect("failure has a certificate");
    ensure(f.degree() == 1, || "certificate is not a line".into())?;
    Ok(format!("fails; line {f}"))
}

fn cb_five_points(_: &Globals) -> Result<String, String> {
    let z = PointConfig::from_ints(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 2, 3]]).map_err(err)?;
    let r = cb_check(&z, 1);
    ensure(r.holds, || "five general points fail at degree 1".into())?;
    Ok(format!("holds, evaluation rank {}", r.rank))
}

fn cb_small_configs(g: &Globals) -> Result<String, String> {
    let mut rng = g.seed.stream("suite-cb");
    let mut n = 0;
    for c in 4u32..=6 {
        for trial in 0..100 {
            let ell = rng.gen_range(1..=c as usize - 2);
            let seed = g.seed.child(&format!("suite-cb-{c}-{trial}"));
            let z = gen_position_points(ell, 0, c, false, seed, g.budget).map_err(err)?;
            let r = cb_check(&z, c - 3);
            ensure(!r.holds && r.certificate_is_valid(&z), || format!("c={c}: {ell} points"))?;
            n += 1;
        }
    }
    Ok(format!("{n} configurations fail with verified certificates"))
}

fn tangent_class(g: &Globals) -> Result<String, String> {
    let cfg = g.elimination();
    let t = tangent_random(&cfg, g.seed).map_err(err)?;
    let ev = t.cohomology_class(&cfg, g.seed).map_err(err)?;
    ensure(ev.class == CohomClass::new(3, 6).map_err(err)?, || format!("class {}", ev.class))?;
    ensure(!(0..=3u64).any(|a| a * (3 - a) == 3), || "class is split".into())?;
    Ok(format!("class {}, not split", ev.class))
}

fn injectivity_scans(g: &Globals) -> Result<String, String> {
    let mut total = 0;
    for (a, b) in [(1, 1), (1, 2), (1, 3)] {
        let s = example_split(a, b).map_err(err)?;
        for &p in &g.primes {
            let r = collision_scan(&s, p, ScanMode::Full, g.seed).map_err(err)?;
            ensure(r.injective(), || format!("({a},{b}) mod {p}: {:?}", r.fiber_histogram))?;
            total += r.points_scanned;
        }
    }
    Ok(format!("{total} points, every fiber a single point"))
}

fn square_degree_scan(g: &Globals) -> Result<String, String> {
    let p = g.primes.first().copied().unwrap_or(31);
    let r = collision_scan(&example_split(2, 2).map_err(err)?, p, ScanMode::Full, g.seed).map_err(err)?;
    Ok(format!("report only: fiber sizes {:?}", r.fiber_histogram))
}

fn pluecker_relation(g: &Globals) -> Result<String, String> {
    let mut rng = g.seed.stream("suite-pluecker");
    let splits: Vec<_> = [(1, 1), (1, 2), (2, 3)].iter().map(|&(a, b)| example_split(a, b)).collect::<Result<_, _>>().map_err(err)?;
    let tangent = TangentSurjection::from_integers(TANGENT_FIXTURE);
    for _ in 0..1000 {
        let c: [i64; 3] = std::array::from_fn(|_| rng.gen_range(-30..=30));
        if c == [0, 0, 0] {
            continue;
        }
        let x = ProjPoint::from_ints(c);
        for s in &splits {
            let p = s.evaluate(&x).map_err(err)?;
            ensure(p.check_relation() && p.hodge_dual().hodge_dual() == p, || format!("{:?} at {x}", s.degrees()))?;
        }
        let p = tangent.evaluate(&x).map_err(err)?;
        ensure(p.check_relation(), || format!("tangent at {x}"))?;
    }
    Ok("relation and Hodge involution hold at 1000 random points".into())
}

fn symmetry(_: &Globals) -> Result<String, String> {
    for q2 in 0..=49u64 {
        for s2 in 0..=49 - q2 {
            let (u, v) = (realizability(q2, s2), realizability(s2, q2));
            ensure(u.status == v.status, || format!("({q2},{s2}) and ({s2},{q2}) differ"))?;
        }
    }
    Ok("symmetric for q2 + s2 <= 49".into())
}
