//! JSON conventions: points are `[x, y]`, triangles `{"A", "B", "C"}` (or an
//! array of three points), sides `[a, b, c]`. Floats are printed with 17
//! significant digits so that every double survives a round trip.

use std::io;

use serde::Serialize;
use serde_json::ser::Formatter;
use serde_json::{json, Map, Value};
use tri_moduli::{Point, Point3, SideLengths, Triangle};

use crate::error::{CliError, CliResult};

/// Compact formatter with fixed 17-significant-digit floats.
#[derive(Debug, Clone, Copy, Default)]
pub struct Digits17;

impl Formatter for Digits17 {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(format_f64(value).as_bytes())
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        writer.write_all(format_f64(value as f64).as_bytes())
    }
}

/// `value` with 17 significant digits: positional for decimal exponents in
/// `[-5, 16)`, scientific otherwise.
pub fn format_f64(value: f64) -> String {
    let value = if value == 0.0 { 0.0 } else { value };
    let sci = format!("{value:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..16).contains(&exp) {
        return format!("{mantissa}e{exp}");
    }
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    if exp >= 0 {
        let split = exp as usize + 1;
        format!("{sign}{}.{}", &digits[..split], &digits[split..])
    } else {
        format!("{sign}0.{}{digits}", "0".repeat((-exp - 1) as usize))
    }
}

pub fn to_string(value: &impl Serialize) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Digits17);
    value.serialize(&mut ser).expect("JSON values always serialize");
    String::from_utf8(out).expect("serde_json writes UTF-8")
}

pub fn parse(text: &str) -> CliResult<Value> {
    serde_json::from_str(text).map_err(|e| CliError::input("invalid_json", format!("invalid JSON: {e}")))
}

pub fn object<'a>(v: &'a Value, field: &str) -> CliResult<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| CliError::field(field, "expected a JSON object"))
}

pub fn number(v: &Value, field: &str) -> CliResult<f64> {
    v.as_f64()
        .filter(|x| x.is_finite())
        .ok_or_else(|| CliError::field(field, "expected a finite number"))
}

pub fn required<'a>(obj: &'a Map<String, Value>, field: &str) -> CliResult<&'a Value> {
    obj.get(field)
        .ok_or_else(|| CliError::field(field, format!("missing field \"{field}\"")))
}

pub fn required_number(obj: &Map<String, Value>, field: &str) -> CliResult<f64> {
    number(required(obj, field)?, field)
}

pub fn optional_number(obj: &Map<String, Value>, field: &str) -> CliResult<Option<f64>> {
    obj.get(field).map(|v| number(v, field)).transpose()
}

pub fn point(v: &Value, field: &str) -> CliResult<Point> {
    match v.as_array().map(Vec::as_slice) {
        Some([x, y]) => Ok(Point::new(number(x, field)?, number(y, field)?)),
        _ => Err(CliError::field(field, "expected a point [x, y]")),
    }
}

pub fn sides(v: &Value, field: &str) -> CliResult<SideLengths> {
    match v.as_array().map(Vec::as_slice) {
        Some([a, b, c]) => SideLengths::new(number(a, field)?, number(b, field)?, number(c, field)?)
            .map_err(|e| CliError::from(e).at(field)),
        _ => Err(CliError::field(field, "expected side lengths [a, b, c]")),
    }
}

pub fn triangle(v: &Value, field: &str) -> CliResult<Triangle> {
    let [a, b, c] = match v {
        Value::Array(items) if items.len() == 3 => [
            point(&items[0], field)?,
            point(&items[1], field)?,
            point(&items[2], field)?,
        ],
        Value::Object(obj) => [
            point(required(obj, "A").map_err(|e| e.at(field))?, field)?,
            point(required(obj, "B").map_err(|e| e.at(field))?, field)?,
            point(required(obj, "C").map_err(|e| e.at(field))?, field)?,
        ],
        _ => return Err(CliError::field(field, "expected a triangle {\"A\", \"B\", \"C\"}")),
    };
    Triangle::new(a, b, c).map_err(|e| CliError::from(e).at(field))
}

pub fn pt(p: Point) -> Value {
    json!([p.x, p.y])
}

pub fn pt3(p: Point3) -> Value {
    json!([p.x, p.y, p.z])
}

pub fn tri(t: &Triangle) -> Value {
    json!({"A": pt(t.a()), "B": pt(t.b()), "C": pt(t.c())})
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(format_f64(0.0), "0.0000000000000000");
        assert_eq!(format_f64(-0.0), "0.0000000000000000");
        assert_eq!(format_f64(1.0), "1.0000000000000000");
        assert_eq!(format_f64(-2.5), "-2.5000000000000000");
        assert_eq!(format_f64(2.0 - 3f64.sqrt()), "0.26794919243112281");
        assert_eq!(format_f64(1e-7), "9.9999999999999995e-8");
        assert_eq!(format_f64(1.5e20), "1.5000000000000000e20");
        assert_eq!(format_f64(-3.25e-5), "-0.000032499999999999997");
    }

    #[test]
    fn floats_round_trip() {
        let values = [
            0.1,
            1.0 / 3.0,
            std::f64::consts::PI,
            -1e-300,
            f64::MAX,
            f64::MIN_POSITIVE,
            123456789.12345679,
            5e-324,
        ];
        for v in values {
            let text = format_f64(v);
            assert_eq!(text.parse::<f64>().unwrap(), v, "{text}");
            let reparsed: f64 = serde_json::from_str(&text).unwrap();
            assert_eq!(reparsed, v, "{text}");
        }
    }

    #[test]
    fn print_parse_print_is_stable() {
        let v = json!({"a": [0.1, 2.0, -7.25e-9], "b": {"c": 1.0 / 7.0, "n": 3}});
        let once = to_string(&v);
        let twice = to_string(&parse(&once).unwrap());
        assert_eq!(once, twice);
    }

    #[test]
    fn triangle_forms() {
        let arr = parse("[[0,1],[0,0],[1,0]]").unwrap();
        let obj = parse(r#"{"A":[0,1],"B":[0,0],"C":[1,0]}"#).unwrap();
        assert_eq!(triangle(&arr, "triangle").unwrap(), triangle(&obj, "triangle").unwrap());
        let cw = parse("[[0,1],[1,0],[0,0]]").unwrap();
        let e = triangle(&cw, "triangle").unwrap_err();
        assert_eq!((e.code.as_str(), e.field.as_deref()), ("clockwise", Some("triangle")));
    }

    #[test]
    fn bad_inputs_name_the_field() {
        let e = sides(&parse("[1,1,3]").unwrap(), "sides").unwrap_err();
        assert_eq!(e.message, "triangle inequality violated");
        assert_eq!(e.field.as_deref(), Some("sides"));
        let e = point(&parse("[1]").unwrap(), "P").unwrap_err();
        assert_eq!(e.field.as_deref(), Some("P"));
    }
}
