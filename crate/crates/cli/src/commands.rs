use std::fmt::Write as _;

use grassmorph::cayley_bacharach::{cb_check, h0_ideal, PointConfig};
use grassmorph::classify::{realizability_with, table, Mode, Status, WitnessRecipe};
use grassmorph::grassmann::CohomClass;
use grassmorph::morphisms::{
    collision_scan, example_split, tangent_random, BaseLocus, EliminationConfig, ScanMode, SplitSurjection,
    TangentSurjection, TANGENT_FIXTURE,
};
use grassmorph::{Error, Seed};
use serde_json::{json, Value};

use crate::points;
use crate::render;

/// Settings shared by every subcommand.
#[derive(Clone, Debug)]
pub struct Globals {
    pub seed: Seed,
    pub primes: Vec<u64>,
    pub budget: u128,
}

impl Globals {
    pub fn elimination(&self) -> EliminationConfig {
        EliminationConfig { scan_primes: self.primes.clone(), ..EliminationConfig::default() }
    }
}

/// A finished command: its JSON body, a text rendering and the exit code.
pub struct Report {
    pub json: Value,
    pub human: String,
    pub code: u8,
}

impl Report {
    fn ok(json: Value, human: String) -> Self {
        Report { json, human, code: 0 }
    }
}

pub fn classify(g: &Globals, q2: u64, s2: u64, mode: Mode, build: bool) -> Result<Report, Error> {
    let v = realizability_with(q2, s2, mode);
    let mut human = format!("{v}\n");
    if let Some(c) = &v.caveat {
        writeln!(human, "caveat: {c}").unwrap();
    }
    let mut body = json!({
        "verdict": serde_json::to_value(&v).expect("serializable"),
        "witness_text": v.witness.as_ref().map(ToString::to_string),
    });
    let mut code = 0;
    if let (true, Some(w)) = (build, &v.witness) {
        let (built, ok, text) = build_witness(g, w)?;
        if !ok {
            code = 1;
        }
        body["construction"] = built;
        human.push_str(&text);
    }
    Ok(Report { json: body, human, code })
}

/// Builds the construction behind a recipe when one is implemented.
fn build_witness(g: &Globals, w: &WitnessRecipe) -> Result<(Value, bool, String), Error> {
    match w.undualized().0 {
        WitnessRecipe::CbPoints { .. } => match w.check_points(g.seed, g.budget)? {
            Some(pw) => {
                let valid = pw.cb.certificate_is_valid(&pw.points);
                let ok = pw.position.ok && pw.cb.holds;
                let mut text = format!(
                    "built {} points: position {}, Cayley-Bacharach {}\n",
                    pw.points.len(),
                    if pw.position.ok { "ok" } else { "violated" },
                    if pw.cb.holds { "holds" } else { "fails" },
                );
                if let Some(v) = &pw.position.violation {
                    writeln!(text, "  {}", render::describe_violation(v)).unwrap();
                }
                let value = json!({
                    "points": points::to_json(&pw.points),
                    "position": render::position(&pw.position),
                    "cayley_bacharach": render::cb(&pw.cb, pw.points.points(), valid),
                    "verified": ok,
                });
                Ok((value, ok, text))
            }
            None => Ok((json!({ "verified": true, "note": "no points to build" }), true, String::new())),
        },
        WitnessRecipe::Split { a, b } if *a > 0 => {
            let s = example_split(*a as u32, *b as u32)?;
            let ev = s.cohomology_class(&g.elimination(), g.seed)?;
            let expected = a * b;
            let ok = ev.class.q2 == expected;
            let text = format!("built Split({a},{b}): computed class {}\n", ev.class);
            Ok((json!({ "class": ev.class, "verified": ok }), ok, text))
        }
        _ => Ok((json!({ "verified": true, "note": "construction is not built by this tool" }), true, String::new())),
    }
}

pub fn classify_table(c_max: u64, mode: Mode) -> Result<Report, Error> {
    if c_max == 0 || c_max > 200 {
        return Err(Error::InvalidInput("table size must be between 1 and 200".into()));
    }
    let rows = table(c_max, mode);
    let mut human = String::new();
    let mut json_rows = Vec::with_capacity(rows.len());
    for row in &rows {
        writeln!(
            human,
            "c={:<3} realizable {:>5}  not realizable {:>5}  unknown {:>5}",
            row.c, row.realizable, row.not_realizable, row.unknown
        )
        .unwrap();
        for (s, label) in [(Status::NotRealizable, "not realizable"), (Status::Unknown, "unknown")] {
            let q = row.with_status(s);
            if !q.is_empty() {
                writeln!(human, "      {label}: q2 in {q:?}").unwrap();
            }
        }
        let classes: Vec<Value> = row
            .verdicts
            .iter()
            .map(|v| {
                json!({
                    "q2": v.q2,
                    "s2": v.s2,
                    "status": v.status,
                    "reason": v.reason,
                    "witness": v.witness.as_ref().map(ToString::to_string),
                })
            })
            .collect();
        json_rows.push(json!({
            "c": row.c,
            "realizable": row.realizable,
            "not_realizable": row.not_realizable,
            "unknown": row.unknown,
            "classes": classes,
        }));
    }
    let mode = match mode {
        Mode::Full => "full",
        Mode::IntervalsOnly => "intervals-only",
    };
    Ok(Report::ok(json!({ "mode": mode, "rows": json_rows }), human))
}

fn surjectivity_json(b: &BaseLocus) -> (Value, String) {
    match b {
        BaseLocus::Empty(Some(cert)) => (
            json!({
                "surjective": true,
                "method": "elimination",
                "combinations": cert.combinations,
                "attempts": cert.attempts,
            }),
            format!("surjective (elimination, {} attempts)", cert.attempts),
        ),
        BaseLocus::Empty(None) => (json!({ "surjective": true, "method": "direct" }), "surjective".into()),
        BaseLocus::NonEmpty(w) => (
            json!({
                "surjective": false,
                "witness": w.point.to_string(),
                "source": format!("{:?}", w.source),
            }),
            format!("not surjective: all minors vanish at {}", w.point),
        ),
    }
}

pub fn construct_split(g: &Globals, a: u32, b: u32) -> Result<Report, Error> {
    let s = example_split(a, b)?;
    construct_from(g, &s)
}

pub fn construct_from(g: &Globals, s: &SplitSurjection) -> Result<Report, Error> {
    let (a, b) = s.degrees();
    let cfg = g.elimination();
    let base = s.surjectivity(&cfg, g.seed)?;
    let (surj, surj_text) = surjectivity_json(&base);
    let minors = s.pluecker_polys();
    let mut human = format!("split surjection of degrees ({a}, {b})\n");
    for (i, row) in s.rows().iter().enumerate() {
        let r: Vec<String> = row.iter().map(ToString::to_string).collect();
        writeln!(human, "  row {}: [{}]", i + 1, r.join(", ")).unwrap();
    }
    writeln!(human, "{surj_text}").unwrap();
    for (k, f) in minors.iter().enumerate() {
        writeln!(human, "  minor {k}: {f}").unwrap();
    }
    let mut body = json!({
        "kind": "split",
        "degrees": [a, b],
        "matrix": s.rows().iter().map(|row| row.iter().map(render::poly).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "surjectivity": surj,
        "pluecker_polys": minors.iter().map(render::poly).collect::<Vec<_>>(),
    });
    if !base.is_empty() {
        return Ok(Report { json: body, human, code: 1 });
    }
    let ev = s.cohomology_class(&cfg, g.seed)?;
    let c2 = u64::from(a + b).pow(2);
    let whitney = ev.class.q2 + ev.class.s2 == c2;
    writeln!(
        human,
        "class {} from {} zeros of the section v = {:?}; dual class {}",
        ev.class,
        ev.zeros.total(),
        ev.v,
        ev.class.dual()
    )
    .unwrap();
    writeln!(
        human,
        "dual incidence over F_{}: {} points (at most s2 = {})",
        ev.dual_incidence.prime, ev.dual_incidence.points, ev.class.s2
    )
    .unwrap();
    body["class"] = json!(ev.class);
    body["dual_class"] = json!(ev.class.dual());
    body["evidence"] = json!({
        "section": ev.v,
        "redraws": ev.redraws,
        "zeros": render::zeros(&ev.zeros),
        "dual_incidence": ev.dual_incidence,
        "whitney": whitney,
    });
    let consistent = whitney && ev.dual_incidence.points as u64 <= ev.class.s2;
    Ok(Report { json: body, human, code: if consistent { 0 } else { 1 } })
}

pub fn construct_tangent(g: &Globals, random: bool) -> Result<Report, Error> {
    let cfg = g.elimination();
    let t = if random { tangent_random(&cfg, g.seed)? } else { TangentSurjection::from_integers(TANGENT_FIXTURE) };
    let base = t.surjectivity(&cfg, g.seed)?;
    let (surj, surj_text) = surjectivity_json(&base);
    let sections: Vec<Value> =
        t.sections().iter().map(|s| Value::Array(s.iter().map(render::poly).collect())).collect();
    let mut human = format!("tangent bundle surjection, {} independent sections\n", t.independence_rank());
    for (i, s) in t.sections().iter().enumerate() {
        let r: Vec<String> = s.iter().map(ToString::to_string).collect();
        writeln!(human, "  section {}: ({})", i + 1, r.join(", ")).unwrap();
    }
    writeln!(human, "{surj_text}").unwrap();
    let mut body = json!({
        "kind": "tangent",
        "sections": sections,
        "independence_rank": t.independence_rank(),
        "surjectivity": surj,
    });
    if !base.is_empty() {
        return Ok(Report { json: body, human, code: 1 });
    }
    let ev = t.cohomology_class(&cfg, g.seed)?;
    let split = (0..=3u64).any(|a| a * (3 - a) == ev.class.q2);
    writeln!(human, "class {} from {} zeros of the section v = {:?}", ev.class, ev.zeros.total(), ev.v).unwrap();
    writeln!(human, "class is {}the class of a split bundle", if split { "" } else { "not " }).unwrap();
    body["class"] = json!(ev.class);
    body["split_class"] = json!(split);
    body["evidence"] = json!({
        "section": ev.v,
        "pivot": ev.pivot,
        "b": ev.b.iter().map(|r| render::rationals(r)).collect::<Vec<_>>(),
        "zeros": render::zeros(&ev.zeros),
    });
    let ok = ev.class == CohomClass::new(3, 6)?;
    Ok(Report { json: body, human, code: if ok { 0 } else { 1 } })
}

pub fn cb_check_file(text: &str, d: u32) -> Result<Report, Error> {
    let z = points::parse(text)?;
    Ok(cb_report(&z, d))
}

pub fn cb_report(z: &PointConfig, d: u32) -> Report {
    let r = cb_check(z, d);
    let valid = r.certificate_is_valid(z);
    let mut human = format!(
        "{} points, degree {d}: Cayley-Bacharach {}\n",
        z.len(),
        if r.holds { "holds" } else { "fails" }
    );
    if let (Some(i), Some(f)) = (r.failing_point, &r.certificate) {
        writeln!(human, "  fails at point {i} = {}", z.points()[i]).unwrap();
        writeln!(human, "  certificate: {f}").unwrap();
        writeln!(human, "  certificate {}", if valid { "verified" } else { "NOT verified" }).unwrap();
    }
    let json = json!({
        "points": z.len(),
        "degree": d,
        "h0_ideal": h0_ideal(z.points(), d),
        "report": render::cb(&r, z.points(), valid),
    });
    Report { json, human, code: if valid { 0 } else { 1 } }
}

pub fn scan(g: &Globals, a: u32, b: u32, prime: Option<u64>, sample: Option<usize>) -> Result<Report, Error> {
    let s = example_split(a, b)?;
    let primes = prime.map_or_else(|| g.primes.clone(), |p| vec![p]);
    let mode = sample.map_or(ScanMode::Full, |n| ScanMode::Sample { n });
    let mut human = String::new();
    let mut reports = Vec::new();
    for p in primes {
        let r = collision_scan(&s, p, mode, g.seed)?;
        writeln!(
            human,
            "({a},{b}) over F_{p}: {} points, {} images, fiber sizes {:?}, rank deficient {} [{}]",
            r.points_scanned, r.distinct_images, r.fiber_histogram, r.rank_deficient, r.label
        )
        .unwrap();
        if !r.coprime_degrees {
            writeln!(human, "  degrees are not coprime; injectivity is not expected").unwrap();
        }
        for c in r.collisions.iter().take(3) {
            writeln!(human, "  collision: {c:?}").unwrap();
        }
        reports.push(serde_json::to_value(&r).expect("serializable"));
    }
    Ok(Report::ok(json!({ "degrees": [a, b], "reports": reports }), human))
}

pub fn genpoints(g: &Globals, q2: u64, s2: u64) -> Result<(Report, Option<Value>), Error> {
    let v = realizability_with(q2, s2, Mode::Full);
    let Some(w) = v.witness.as_ref().filter(|w| matches!(w.undualized().0, WitnessRecipe::CbPoints { .. })) else {
        return Err(Error::InvalidInput(format!("{v} has no point construction")));
    };
    let Some(pw) = w.check_points(g.seed, g.budget)? else {
        return Err(Error::InvalidInput(format!("{v} needs no points")));
    };
    let valid = pw.cb.certificate_is_valid(&pw.points);
    let ok = pw.position.ok && pw.cb.holds;
    let (_, dual) = w.undualized();
    let mut human = format!("{w}\n");
    for p in pw.points.points() {
        writeln!(human, "  {p}").unwrap();
    }
    writeln!(
        human,
        "position {}; Cayley-Bacharach {}",
        if pw.position.ok { "ok" } else { "violated" },
        if pw.cb.holds { "holds" } else { "fails" }
    )
    .unwrap();
    if let Some(c) = &v.caveat {
        writeln!(human, "caveat: {c}").unwrap();
    }
    let file = points::to_json(&pw.points);
    let json = json!({
        "class": [q2, s2],
        "recipe": w,
        "recipe_text": w.to_string(),
        "dualized": dual,
        "points": file,
        "position": render::position(&pw.position),
        "cayley_bacharach": render::cb(&pw.cb, pw.points.points(), valid),
        "verified": ok,
    });
    Ok((Report { json, human, code: if ok { 0 } else { 1 } }, Some(file)))
}
