//! JSON and text renderings of core values.

use grassmorph::cayley_bacharach::{CbReport, PositionReport, Violation};
use grassmorph::exactalg::{format_rational, Rational};
use grassmorph::poly::{CommonZeros, HomPoly, ProjPoint};
use serde_json::{json, Map, Value};

/// Terms keyed by `"(i,j,k)"` exponent triples plus the rendered form.
pub fn poly(f: &HomPoly) -> Value {
    let terms: Map<String, Value> = f
        .terms()
        .iter()
        .map(|(m, c)| (format!("({},{},{})", m[0], m[1], m[2]), Value::String(format_rational(c))))
        .collect();
    json!({ "degree": f.degree(), "terms": terms, "rendered": f.to_string() })
}

pub fn point(p: &ProjPoint) -> Value {
    Value::Array(p.coords().iter().map(|c| Value::String(format_rational(c))).collect())
}

pub fn rationals(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|c| Value::String(format_rational(c))).collect())
}

pub fn zeros(z: &CommonZeros) -> Value {
    let list: Vec<Value> = z
        .zeros
        .iter()
        .map(|z| {
            json!({
                "point": z.point.to_string(),
                "multiplicity": z.multiplicity,
                "conjugates": z.conjugates(),
            })
        })
        .collect();
    json!({ "count": z.total(), "zeros": list })
}

pub fn cb(r: &CbReport, points: &[ProjPoint], certificate_valid: bool) -> Value {
    let failing = r.failing_point.map(|i| json!({ "index": i, "point": point(&points[i]) }));
    json!({
        "holds": r.holds,
        "rank": r.rank,
        "failing_point": failing,
        "certificate": r.certificate.as_ref().map(poly),
        "certificate_verified": certificate_valid,
    })
}

pub fn violation(v: &Violation) -> Value {
    match v {
        Violation::Collinear { points } => json!({ "kind": "collinear", "points": points }),
        Violation::OnCurve { degree, curve, points } => {
            json!({ "kind": "on-curve", "degree": degree, "curve": poly(curve), "points": points })
        }
    }
}

pub fn position(p: &PositionReport) -> Value {
    json!({
        "ok": p.ok,
        "violation": p.violation.as_ref().map(violation),
        "subsets_examined": p.subsets_examined.to_string(),
    })
}

pub fn describe_violation(v: &Violation) -> String {
    match v {
        Violation::Collinear { points } => format!("points {points:?} are collinear"),
        Violation::OnCurve { degree, curve, points } => {
            format!("{} points {points:?} lie on the degree {degree} curve {curve} = 0", points.len())
        }
    }
}
