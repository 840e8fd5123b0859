//! Parameter maps from inline flags or JSON lines, and typed accessors.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use irrmeasure::numerics::PosRational;
use num_bigint::{BigInt, BigUint};
use serde_json::Value;

/// Raw parameter values keyed by flag name (with underscores).
pub type Params = BTreeMap<String, String>;

/// One parameter map per instance. The outer error is a usage error for the
/// whole run; inner errors belong to single input lines.
pub fn collect(pairs: &[(&'static str, Option<String>)], input: Option<&Path>) -> Result<Vec<Result<Params, String>>, String> {
    let inline: Params = pairs
        .iter()
        .filter_map(|(k, v)| v.clone().map(|v| (k.to_string(), v)))
        .collect();
    let Some(path) = input else {
        return Ok(vec![Ok(inline)]);
    };
    if !inline.is_empty() {
        return Err("give parameters either inline or with --input, not both".into());
    }
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let known: Vec<&str> = pairs.iter().map(|(k, _)| *k).collect();
    Ok(text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_line(l, &known))
        .collect())
}

fn parse_line(line: &str, known: &[&str]) -> Result<Params, String> {
    let v: Value = serde_json::from_str(line).map_err(|e| format!("malformed JSON: {e}"))?;
    let Value::Object(obj) = v else {
        return Err("each input line must be a JSON object".into());
    };
    let mut out = Params::new();
    for (k, v) in obj {
        let key = k.replace('-', "_");
        if !known.contains(&key.as_str()) {
            return Err(format!("unknown parameter {k:?}"));
        }
        out.insert(key, scalar(&k, &v)?);
    }
    Ok(out)
}

fn scalar(key: &str, v: &Value) -> Result<String, String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string()),
        Value::Number(_) => Err(format!("{key}: floating-point values are not accepted; use an exact string such as \"3/10\"")),
        Value::Array(items) => items.iter().map(|x| scalar(key, x)).collect::<Result<Vec<_>, _>>().map(|v| v.join(",")),
        _ => Err(format!("{key}: expected an integer or a string")),
    }
}

pub fn to_json(p: &Params) -> Value {
    Value::Object(p.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect())
}

pub fn describe(p: &Params) -> String {
    p.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

fn flag(key: &str) -> String {
    format!("--{}", key.replace('_', "-"))
}

pub fn raw<'a>(p: &'a Params, key: &str) -> Result<&'a str, String> {
    p.get(key).map(|s| s.trim()).ok_or_else(|| format!("missing parameter {}", flag(key)))
}

fn parsed<T: FromStr>(p: &Params, key: &str, what: &str) -> Result<T, String> {
    let s = raw(p, key)?;
    s.parse().map_err(|_| format!("{}: expected {what}, got {s:?}", flag(key)))
}

pub fn uint(p: &Params, key: &str) -> Result<BigUint, String> {
    parsed(p, key, "a non-negative integer")
}

pub fn int(p: &Params, key: &str) -> Result<BigInt, String> {
    parsed(p, key, "an integer")
}

pub fn small(p: &Params, key: &str) -> Result<u64, String> {
    parsed(p, key, "a non-negative machine-size integer")
}

pub fn small_or(p: &Params, key: &str, default: u64) -> Result<u64, String> {
    if p.contains_key(key) {
        small(p, key)
    } else {
        Ok(default)
    }
}

pub fn opt_small(p: &Params, key: &str) -> Result<Option<u64>, String> {
    p.contains_key(key).then(|| small(p, key)).transpose()
}

pub fn rational(p: &Params, key: &str) -> Result<PosRational, String> {
    parsed(p, key, "a positive rational such as 3/10")
}

pub fn opt_raw<'a>(p: &'a Params, key: &str) -> Option<&'a str> {
    p.get(key).map(|s| s.trim())
}

pub fn list(p: &Params, key: &str) -> Result<Vec<u64>, String> {
    raw(p, key)?
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| format!("{}: expected comma-separated integers", flag(key))))
        .collect()
}
