//! Deterministic number formatting shared by the JSON and CSV writers.

use serde_json::Value;

/// Rounds to 12 significant digits; `-0` becomes `0`.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Shortest decimal that round-trips the 12-digit value.
pub fn num(x: f64) -> String {
    format!("{}", round12(x))
}

/// Rounds every float in a JSON tree in place.
pub fn round_floats(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round12(n.as_f64().expect("f64 number"));
            *v = serde_json::Number::from_f64(x).map(Value::Number).unwrap_or(Value::Null);
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

/// Pretty JSON with sorted keys and 12 significant digits.
pub fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut v = serde_json::to_value(value).expect("report serializes");
    round_floats(&mut v);
    let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
    s.push('\n');
    s
}
