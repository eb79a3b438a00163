use std::fmt;

use serde_json::{json, Map, Value};

use spindex_core::index::{contribution, equivariant_index, limits, satisfies_inequality, Classification, FixedPointDatum};
use spindex_core::scalar::{fmt_rational, parse_rational, Rational};

use crate::report::{Check, Report, Status};

const ANCHOR: &str = "fixed-point localization of the equivariant index";

/// A problem in a localization input document, located by line/column for
/// syntax errors or by field path for content errors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InputError {
    pub location: String,
    pub message: String,
}

impl InputError {
    fn at(location: impl Into<String>, message: impl Into<String>) -> Self {
        Self {
            location: location.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

impl std::error::Error for InputError {}

fn check_keys(obj: &Map<String, Value>, path: &str, allowed: &[&str]) -> Result<(), InputError> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(InputError::at(join(path, k), "unknown field")),
        None => Ok(()),
    }
}

fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

fn exponent(v: &Value, path: &str) -> Result<Rational, InputError> {
    match v {
        Value::String(s) => parse_rational(s)
            .ok_or_else(|| InputError::at(path, format!("\"{s}\" is not an exact rational like \"3/2\" or \"-1\""))),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap().into())),
        Value::Number(_) => Err(InputError::at(path, "floating-point values are not accepted; write \"p/q\"")),
        _ => Err(InputError::at(path, "expected an exact rational string")),
    }
}

fn exponent_list(obj: &Map<String, Value>, path: &str, key: &str, required: bool) -> Result<Vec<Rational>, InputError> {
    let path = join(path, key);
    match obj.get(key) {
        None if required => Err(InputError::at(path, "missing field")),
        None => Ok(Vec::new()),
        Some(Value::Array(items)) => items
            .iter()
            .enumerate()
            .map(|(i, v)| exponent(v, &format!("{path}[{i}]")))
            .collect(),
        Some(_) => Err(InputError::at(path, "expected a list")),
    }
}

fn fixed_point(v: &Value, index: usize) -> Result<FixedPointDatum, InputError> {
    let path = format!("fixed_points[{index}]");
    let obj = v.as_object().ok_or_else(|| InputError::at(&path, "expected an object"))?;
    check_keys(obj, &path, &["name", "tangent_exponents", "twist_exponents"])?;
    let name = match obj.get("name") {
        Some(Value::String(s)) => s.clone(),
        Some(_) => return Err(InputError::at(join(&path, "name"), "expected a string")),
        None => return Err(InputError::at(join(&path, "name"), "missing field")),
    };
    let tangent = exponent_list(obj, &path, "tangent_exponents", true)?;
    for (i, q) in tangent.iter().enumerate() {
        let at = format!("{path}.tangent_exponents[{i}]");
        if num_traits::Zero::is_zero(q) {
            return Err(InputError::at(at, "zero rotation exponent: the fixed point is not isolated"));
        }
        if !q.is_integer() {
            return Err(InputError::at(at, format!("{} is not an integer rotation exponent", fmt_rational(q))));
        }
    }
    let twist = exponent_list(obj, &path, "twist_exponents", false)?;
    for (i, n) in twist.iter().enumerate() {
        if !(n * Rational::from_integer(2.into())).is_integer() {
            return Err(InputError::at(
                format!("{path}.twist_exponents[{i}]"),
                format!("{} is not a multiple of 1/2", fmt_rational(n)),
            ));
        }
    }
    Ok(FixedPointDatum::new(name, tangent, twist))
}

/// Parses `{version: 1, variable: "z", fixed_points: [...]}`.
pub fn parse_input(text: &str) -> Result<Vec<FixedPointDatum>, InputError> {
    let doc: Value = serde_json::from_str(text)
        .map_err(|e| InputError::at(format!("line {}, column {}", e.line(), e.column()), e.to_string()))?;
    let obj = doc.as_object().ok_or_else(|| InputError::at("document", "expected an object"))?;
    check_keys(obj, "", &["version", "variable", "fixed_points"])?;
    match obj.get("version") {
        Some(v) if v.as_u64() == Some(1) => {}
        Some(v) => return Err(InputError::at("version", format!("unsupported version {v}"))),
        None => return Err(InputError::at("version", "missing field")),
    }
    match obj.get("variable") {
        Some(Value::String(s)) if s == "z" => {}
        Some(v) => return Err(InputError::at("variable", format!("expected \"z\", got {v}"))),
        None => return Err(InputError::at("variable", "missing field")),
    }
    match obj.get("fixed_points") {
        Some(Value::Array(items)) => items.iter().enumerate().map(|(i, v)| fixed_point(v, i)).collect(),
        Some(_) => Err(InputError::at("fixed_points", "expected a list")),
        None => Err(InputError::at("fixed_points", "missing field")),
    }
}

/// Serializes fixed points in the input format.
pub fn render_input(fps: &[FixedPointDatum]) -> String {
    let show = |v: &[Rational]| v.iter().map(fmt_rational).collect::<Vec<_>>();
    let points: Vec<Value> = fps
        .iter()
        .map(|fp| {
            json!({
                "name": fp.name,
                "tangent_exponents": show(&fp.tangent_exponents),
                "twist_exponents": show(&fp.twist_exponents),
            })
        })
        .collect();
    serde_json::to_string_pretty(&json!({"version": 1, "variable": "z", "fixed_points": points}))
        .expect("input serializes")
}

/// Per-point contributions, limits and inequality verdicts, then the summed
/// index with its classification as the final check.
pub fn localize(fps: &[FixedPointDatum]) -> Result<(Report, String), spindex_core::Error> {
    let mut report = Report::default();
    for fp in fps {
        let f = contribution(fp)?;
        let (at_zero, at_inf) = limits(&f);
        let ineq = satisfies_inequality(fp);
        report.push(Check::new(
            format!("fixed point {}", fp.name),
            ANCHOR,
            Status::Pass,
            json!({
                "contribution": f.to_string(),
                "limit_at_0": at_zero.to_string(),
                "limit_at_infinity": at_inf.to_string(),
                "bound": fmt_rational(&ineq.bound),
                "strict_inequality": ineq.strict,
                "non_strict_inequality": ineq.non_strict,
                "parity_consistent": fp.parity_consistent()?,
            }),
        ));
    }
    let res = equivariant_index(fps)?;
    let verdict = res.classification.to_string();
    let ok = match res.classification {
        Classification::Vanishes | Classification::Rigid(_) | Classification::NonRigid(_) => {
            res.parity_consistent && !res.certificate_violated()
        }
        Classification::NotLaurent | Classification::OddPowers(_) => false,
    };
    report.push(Check::verdict(
        "index sum",
        ANCHOR,
        ok,
        json!({
            "sum": res.sum.to_string(),
            "verdict": verdict,
            "all_strict": res.all_strict,
            "vanishing_certified": res.vanishing_certified(),
            "parity_consistent": res.parity_consistent,
        }),
    ));
    Ok((report, verdict))
}

#[cfg(test)]
mod tests {
    use super::*;

    const S4: &str = r#"{"version": 1, "variable": "z", "fixed_points": [
        {"name": "P1", "tangent_exponents": ["1", "1"], "twist_exponents": []},
        {"name": "P2", "tangent_exponents": ["1", "-1"]}
    ]}"#;

    #[test]
    fn parses_and_localizes() {
        let fps = parse_input(S4).unwrap();
        assert_eq!(fps.len(), 2);
        let (report, verdict) = localize(&fps).unwrap();
        assert_eq!(verdict, "vanishes: ind(z) = 0");
        assert!(report.passed());
        assert_eq!(parse_input(&render_input(&fps)).unwrap(), fps);
    }

    #[test]
    fn single_point_is_inconsistent() {
        let fps = parse_input(r#"{"version":1,"variable":"z","fixed_points":[{"name":"P","tangent_exponents":["1","1"]}]}"#).unwrap();
        let (report, verdict) = localize(&fps).unwrap();
        assert_eq!(verdict, "inconsistent: sum is not a Laurent polynomial");
        assert_eq!(report.exit_code(), 1);
    }

    #[test]
    fn empty_list_vanishes() {
        let fps = parse_input(r#"{"version":1,"variable":"z","fixed_points":[]}"#).unwrap();
        assert_eq!(localize(&fps).unwrap().1, "vanishes: ind(z) = 0");
    }

    #[test]
    fn diagnostics_name_the_field() {
        let err = |s: &str| parse_input(s).unwrap_err().location;
        assert_eq!(
            err(r#"{"version":1,"variable":"z","fixed_points":[{"name":"P","tangent_exponents":["1","x"]}]}"#),
            "fixed_points[0].tangent_exponents[1]"
        );
        assert_eq!(
            err(r#"{"version":1,"variable":"z","fixed_points":[{"name":"P","tangent_exponents":["0"]}]}"#),
            "fixed_points[0].tangent_exponents[0]"
        );
        assert_eq!(
            err(r#"{"version":1,"variable":"z","fixed_points":[{"name":"P","tangent_exponents":[1.5]}]}"#),
            "fixed_points[0].tangent_exponents[0]"
        );
        assert_eq!(
            err(r#"{"version":1,"variable":"z","fixed_points":[{"name":"P","tangent_exponents":["1"],"twist_exponents":["1/3"]}]}"#),
            "fixed_points[0].twist_exponents[0]"
        );
        assert_eq!(err(r#"{"version":2,"variable":"z","fixed_points":[]}"#), "version");
        assert_eq!(err(r#"{"version":1,"variable":"q","fixed_points":[]}"#), "variable");
        assert_eq!(err(r#"{"version":1,"variable":"z","fixed_points":[{"tangent_exponents":[]}]}"#), "fixed_points[0].name");
        assert_eq!(err(r#"{"version":1,"variable":"z","fixed_points":[],"extra":0}"#), "extra");
        assert!(err("{\n  \"version\": 1,\n  oops").starts_with("line 3"));
    }
}
