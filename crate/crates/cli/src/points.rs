//! Points files: a JSON array of homogeneous triples. Each coordinate is an
//! integer or a string `"n"` or `"n/d"`.

use grassmorph::cayley_bacharach::PointConfig;
use grassmorph::exactalg::{parse_rational, rat, Rational};
use grassmorph::poly::ProjPoint;
use grassmorph::Error;
use serde_json::Value;

pub fn parse(text: &str) -> Result<PointConfig, Error> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("points file is not JSON: {e}")))?;
    let Value::Array(items) = value else {
        return Err(Error::InvalidInput("points file must be a JSON array of triples".into()));
    };
    let mut points = Vec::with_capacity(items.len());
    for (i, item) in items.iter().enumerate() {
        let coords = match item {
            Value::Array(c) if c.len() == 3 => c,
            _ => return Err(Error::InvalidInput(format!("entry {i} is not a triple"))),
        };
        let parsed: Vec<Rational> = coords
            .iter()
            .map(|c| coordinate(c).ok_or_else(|| Error::InvalidInput(format!("entry {i}: bad coordinate {c}"))))
            .collect::<Result<_, _>>()?;
        let [a, b, c]: [Rational; 3] = parsed.try_into().expect("three coordinates");
        let p = ProjPoint::new([a, b, c]).map_err(|_| Error::InvalidInput(format!("entry {i} is the zero vector")))?;
        points.push(p);
    }
    PointConfig::new(points)
}

fn coordinate(v: &Value) -> Option<Rational> {
    match v {
        Value::Number(n) => n.as_i64().map(|i| rat(i, 1)),
        Value::String(s) => parse_rational(s),
        _ => None,
    }
}

/// The points file for a configuration, using the string form throughout.
pub fn to_json(z: &PointConfig) -> Value {
    Value::Array(z.points().iter().map(crate::render::point).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_coordinates() {
        let z = parse(r#"[[1, 2, 3], ["1/2", "-1", 0], [0, 0, "7"]]"#).unwrap();
        assert_eq!(z.len(), 3);
        assert_eq!(z.points()[2], ProjPoint::from_ints([0, 0, 1]));
    }

    #[test]
    fn round_trip() {
        let z = parse(r#"[[2, 4, 6], ["1/3", 1, 0]]"#).unwrap();
        let again = parse(&to_json(&z).to_string()).unwrap();
        assert_eq!(z.points(), again.points());
    }

    #[test]
    fn rejections() {
        for bad in ["{}", "[[1,2]]", "[[0,0,0]]", r#"[[1,"x",2]]"#, "[[1,2,3],[2,4,6]]", "[]", "[[1.5,0,1]]"] {
            assert!(parse(bad).is_err(), "{bad}");
        }
    }
}
