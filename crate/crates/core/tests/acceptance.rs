//! End-to-end acceptance checks. Each check prints one PASS or FAIL line
//! with its running time; the test fails if any check fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::Rng as _;

use grassmorph::cayley_bacharach::{cb_check, gen_position_points, PointConfig, DEFAULT_BUDGET};
use grassmorph::classify::{decomposable_classes, realizability, table, Mode, Status, WitnessRecipe};
use grassmorph::exactalg::{rat, Matrix, Rational, SCAN_PRIMES};
use grassmorph::grassmann::{CohomClass, PlueckerPoint};
use grassmorph::morphisms::{
    collision_scan, dual_class, example_split, tangent_random, EliminationConfig, ScanMode, TangentSurjection,
    TANGENT_FIXTURE,
};
use grassmorph::poly::{monomials, x, y, z, HomPoly, ProjPoint};
use grassmorph::Seed;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cfg() -> EliminationConfig {
    EliminationConfig::default()
}

fn veronese_minors() -> Outcome {
    let polys = example_split(1, 1).map_err(|e| e.to_string())?.pluecker_polys();
    let sq = |a: HomPoly| &a * &a;
    let expected = [
        &sq(x()) - &(&y() * &z()),
        &(&x() * &y()) - &sq(z()),
        &x() * &z(),
        &sq(y()) - &(&x() * &z()),
        sq(x()),
        &x() * &y(),
    ];
    for (i, (p, e)) in polys.iter().zip(&expected).enumerate() {
        ensure(p == e || *p == -e, || format!("minor {i} is {p}, expected ±({e})"))?;
    }
    let rows: Vec<Vec<Rational>> = polys.iter().map(HomPoly::coefficient_vector).collect();
    let rank = Matrix::from_rows(rows, monomials(2).len(), &rat(0, 1)).rank();
    ensure(rank == 6, || format!("coefficient rank {rank}"))
}

fn split_classes() -> Outcome {
    let ev = example_split(1, 1).unwrap().cohomology_class(&cfg(), Seed(0)).map_err(|e| e.to_string())?;
    ensure(ev.class == CohomClass::new(1, 3).unwrap(), || format!("(1,1) gave {:?}", ev.class))?;
    ensure(dual_class(&ev.class) == CohomClass::new(3, 1).unwrap(), || "dual of (1,3)".into())?;
    for (a, b) in [(1u64, 2u64), (2, 2), (2, 3)] {
        let start = Instant::now();
        let s = example_split(a as u32, b as u32).unwrap();
        let ev = s.cohomology_class(&cfg(), Seed(0)).map_err(|e| format!("({a},{b}): {e}"))?;
        let counted = ev.zeros.total() as u64;
        ensure(counted == a * b, || format!("({a},{b}): {counted} zeros counted"))?;
        ensure(ev.class.q2 == a * b && ev.class.s2 == (a + b).pow(2) - a * b, || {
            format!("({a},{b}) gave {:?}", ev.class)
        })?;
        ensure(start.elapsed() < Duration::from_secs(10), || format!("({a},{b}) took {:?}", start.elapsed()))?;
    }
    Ok(())
}

fn nonexistence() -> Outcome {
    let v = realizability(1, 15);
    ensure(v.status == Status::NotRealizable, || format!("(1,15) is {}", v.status))?;
    let z = PointConfig::from_ints(&[[2, -3, 5]]).unwrap();
    let r = cb_check(&z, 1);
    ensure(!r.holds, || "a single point passed at degree one".into())?;
    let cert = r.certificate.as_ref().ok_or("no certificate")?;
    ensure(r.certificate_is_valid(&z), || format!("certificate {cert} is not valid"))?;
    ensure(cert.eval(&z.points()[0]) != rat(0, 1), || "certificate vanishes at the point".into())
}

fn classification_tables() -> Outcome {
    let set = |v: &[u64]| v.iter().copied().collect::<BTreeSet<u64>>();
    for (mode, c5, c6) in [
        (Mode::IntervalsOnly, vec![6, 19], vec![7, 8, 9, 10, 26, 27, 28, 29]),
        (Mode::Full, vec![], vec![7, 10, 26, 29]),
    ] {
        let rows = table(6, mode);
        for row in &rows[..3] {
            let n = (row.c * row.c + 1) as usize;
            ensure(row.realizable == n, || format!("{mode:?} c={}: {} realizable", row.c, row.realizable))?;
        }
        let r4 = &rows[3];
        ensure(set(&r4.with_status(Status::NotRealizable)) == set(&[1, 2, 14, 15]), || {
            format!("{mode:?} c=4 not realizable {:?}", r4.with_status(Status::NotRealizable))
        })?;
        ensure(r4.unknown == 0, || format!("{mode:?} c=4 has unknowns"))?;
        for (row, want) in [(&rows[4], c5), (&rows[5], c6)] {
            let got = row.with_status(Status::Unknown);
            ensure(set(&got) == set(&want), || format!("{mode:?} c={} unknown {got:?}, expected {want:?}", row.c))?;
        }
    }
    ensure(decomposable_classes(5).contains(&(6, 19)), || "(6,19) is not decomposable".into())?;
    let v = realizability(6, 19);
    ensure(
        v.status == Status::Realizable && v.witness == Some(WitnessRecipe::Split { a: 2, b: 3 }),
        || format!("(6,19): {v}"),
    )?;
    let v = realizability(19, 6);
    let dual_split = WitnessRecipe::Split { a: 2, b: 3 };
    ensure(
        v.status == Status::Realizable && v.witness.as_ref().map(|w| w.undualized()) == Some((&dual_split, true)),
        || format!("(19,6): {v}"),
    )
}

fn cayley_bacharach_engine() -> Outcome {
    let z = PointConfig::from_ints(&[[1, 0, 1], [2, 0, 1], [5, 0, 1]]).unwrap();
    ensure(cb_check(&z, 1).holds, || "three collinear points fail at degree one".into())?;
    let mut rng = Seed(0).stream("acceptance-cb");
    for c in 4u32..=6 {
        for trial in 0..100u64 {
            let ell = rng.gen_range(1..=c as usize - 2);
            let z = gen_position_points(ell, 0, c, false, Seed(trial).child(&format!("c{c}")), DEFAULT_BUDGET)
                .map_err(|e| e.to_string())?;
            let r = cb_check(&z, c - 3);
            ensure(!r.holds, || format!("c={c}, {ell} points pass at degree {}", c - 3))?;
            ensure(r.certificate_is_valid(&z), || format!("c={c}, trial {trial}: invalid certificate"))?;
        }
    }
    Ok(())
}

fn tangent_example() -> Outcome {
    let t = tangent_random(&cfg(), Seed(0)).map_err(|e| e.to_string())?;
    let ev = t.cohomology_class(&cfg(), Seed(0)).map_err(|e| e.to_string())?;
    ensure(ev.class == CohomClass::new(3, 6).unwrap(), || format!("tangent class {:?}", ev.class))?;
    let split = (0..=3i64).any(|a| a * (3 - a) == 3);
    ensure(!split, || "the tangent class is split".into())
}

fn injectivity_evidence() -> Outcome {
    for (a, b) in [(1, 1), (1, 2), (1, 3)] {
        let s = example_split(a, b).unwrap();
        for p in SCAN_PRIMES {
            let r = collision_scan(&s, p, ScanMode::Full, Seed(0)).map_err(|e| e.to_string())?;
            ensure(r.points_scanned as u64 == p * p + p + 1, || format!("({a},{b}) mod {p}: partial scan"))?;
            ensure(r.injective(), || format!("({a},{b}) mod {p}: fibers {:?}", r.fiber_histogram))?;
        }
    }
    Ok(())
}

fn random_point(rng: &mut impl rand::Rng) -> ProjPoint {
    loop {
        let c: [i64; 3] = std::array::from_fn(|_| rng.gen_range(-50..=50));
        if c != [0, 0, 0] {
            return ProjPoint::from_ints(c);
        }
    }
}

fn structural_properties() -> Outcome {
    let mut rng = Seed(0).stream("acceptance-structure");
    let splits: Vec<_> = [(1, 1), (1, 2), (2, 2), (2, 3)].map(|(a, b)| example_split(a, b).unwrap()).into();
    let tangent = TangentSurjection::from_integers(TANGENT_FIXTURE);
    let mut images: Vec<PlueckerPoint> = Vec::new();
    for _ in 0..1000 {
        let x = random_point(&mut rng);
        for s in &splits {
            let p = s.evaluate(&x).map_err(|e| format!("{:?} at {x:?}: {e}", s.degrees()))?;
            ensure(p.check_relation(), || format!("{:?} at {x:?}", s.degrees()))?;
            images.push(p);
        }
        let p = tangent.evaluate(&x).map_err(|e| format!("tangent at {x:?}: {e}"))?;
        ensure(p.check_relation(), || format!("tangent at {x:?}"))?;
        images.push(p);
    }
    for p in images.iter().take(100) {
        let d = p.hodge_dual();
        ensure(d.check_relation() && d.hodge_dual() == *p, || format!("hodge dual of {p:?}"))?;
    }
    for (i, s) in splits.iter().enumerate() {
        let (a, b) = s.degrees();
        let ev = s.cohomology_class(&cfg(), Seed(i as u64 + 1)).map_err(|e| e.to_string())?;
        ensure(ev.class.q2 + ev.class.s2 == u64::from(a + b).pow(2), || format!("({a},{b}): {:?}", ev.class))?;
    }
    let ev = tangent.cohomology_class(&cfg(), Seed(1)).map_err(|e| e.to_string())?;
    ensure(ev.class.q2 + ev.class.s2 == 9, || format!("tangent: {:?}", ev.class))?;
    for q2 in 0..=49u64 {
        for s2 in 0..=49 - q2 {
            let (u, v) = (realizability(q2, s2), realizability(s2, q2));
            ensure(u.status == v.status, || format!("({q2},{s2}) is {} but ({s2},{q2}) is {}", u.status, v.status))?;
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let checks: [(&str, fn() -> Outcome, u64); 8] = [
        ("veronese minors form a basis of quadrics", veronese_minors, 1),
        ("split classes by zero counting", split_classes, 40),
        ("nonexistence of (1,15)", nonexistence, 1),
        ("classification tables up to c=6", classification_tables, 5),
        ("Cayley-Bacharach engine", cayley_bacharach_engine, 30),
        ("tangent bundle class", tangent_example, 30),
        ("injectivity over small fields", injectivity_evidence, 60),
        ("structural properties", structural_properties, 30),
    ];
    let mut failed = Vec::new();
    for (i, (name, check, limit)) in checks.into_iter().enumerate() {
        let start = Instant::now();
        let mut outcome = check();
        let elapsed = start.elapsed();
        if outcome.is_ok() && elapsed > Duration::from_secs(limit) {
            outcome = Err(format!("exceeded {limit}s"));
        }
        match &outcome {
            Ok(()) => println!("PASS {} {name} ({:.2}s)", i + 1, elapsed.as_secs_f64()),
            Err(e) => {
                println!("FAIL {} {name} ({:.2}s): {e}", i + 1, elapsed.as_secs_f64());
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed checks: {failed:?}");
}
