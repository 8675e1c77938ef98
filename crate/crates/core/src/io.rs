//! Parsing of the JSON input format.
//!
//! A single series:
//!
//! ```json
//! {"vars": ["x", "y"],
//!  "terms": [{"c": "1", "e": [1, 1]}, {"c": "-1", "e": [2, 0]}],
//!  "truncation_degree": 4}
//! ```
//!
//! Several generators share the variable list and may each carry their own
//! truncation (falling back to the top-level one):
//!
//! ```json
//! {"vars": ["x", "y"], "exact": true,
//!  "generators": [{"terms": [...]}, {"terms": [...], "truncation_degree": 3}]}
//! ```
//!
//! Coefficients are rational strings with an optional sign; floating point
//! literals are rejected. Errors name the offending JSON path.

use serde_json::{Map, Value};

use crate::algebra::{parse_rational, Exponent, Polynomial, Series, Truncation};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Input {
    pub vars: Vec<String>,
    pub generators: Vec<Series>,
}

impl Input {
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// The single series of a one-generator input.
    pub fn single(&self) -> Result<&Series> {
        match self.generators.as_slice() {
            [f] => Ok(f),
            _ => Err(Error::Parse(format!("expected one series, found {} generators", self.generators.len()))),
        }
    }
}

fn err(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{path}: {msg}"))
}

fn truncation(obj: &Map<String, Value>, path: &str) -> Result<Option<Truncation>> {
    let degree = obj.get("truncation_degree");
    let exact = obj.get("exact");
    match (degree, exact) {
        (Some(_), Some(_)) => Err(err(path, "give either \"truncation_degree\" or \"exact\", not both")),
        (Some(d), None) => {
            let d = d
                .as_u64()
                .and_then(|d| u32::try_from(d).ok())
                .ok_or_else(|| err(&format!("{path}.truncation_degree"), "expected a nonnegative integer"))?;
            Ok(Some(Truncation::Degree(d)))
        }
        (None, Some(Value::Bool(true))) => Ok(Some(Truncation::Exact)),
        (None, Some(_)) => Err(err(&format!("{path}.exact"), "expected true")),
        (None, None) => Ok(None),
    }
}

fn parse_terms(v: &Value, n: usize, path: &str) -> Result<Polynomial> {
    let list = v.as_array().ok_or_else(|| err(path, "expected a list of terms"))?;
    let mut p = Polynomial::zero(n);
    for (i, t) in list.iter().enumerate() {
        let tp = format!("{path}[{i}]");
        let obj = t.as_object().ok_or_else(|| err(&tp, "expected an object"))?;
        if let Some(k) = obj.keys().find(|k| *k != "c" && *k != "e") {
            return Err(err(&tp, format!("unknown field {k:?}")));
        }
        let c = obj
            .get("c")
            .and_then(Value::as_str)
            .ok_or_else(|| err(&format!("{tp}.c"), "expected a rational string such as \"-3/4\""))?;
        let c = parse_rational(c).map_err(|e| err(&format!("{tp}.c"), e))?;
        let e = obj
            .get("e")
            .and_then(Value::as_array)
            .ok_or_else(|| err(&format!("{tp}.e"), "expected a list of exponents"))?;
        if e.len() != n {
            return Err(err(&format!("{tp}.e"), format!("expected {n} exponents, found {}", e.len())));
        }
        let exps = e
            .iter()
            .map(|x| x.as_u64().and_then(|x| u32::try_from(x).ok()))
            .collect::<Option<Vec<u32>>>()
            .ok_or_else(|| err(&format!("{tp}.e"), "exponents must be nonnegative integers"))?;
        p.add_term(c, Exponent(exps));
    }
    Ok(p)
}

fn series(p: Polynomial, t: Truncation, path: &str) -> Result<Series> {
    Series::new(p, t).map_err(|e| match e {
        Error::Parse(m) => err(path, m),
        other => other,
    })
}

pub fn parse_input(text: &str) -> Result<Input> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    let obj = v.as_object().ok_or_else(|| err("$", "expected an object"))?;
    for k in obj.keys() {
        if !["vars", "terms", "generators", "truncation_degree", "exact"].contains(&k.as_str()) {
            return Err(err("$", format!("unknown field {k:?}")));
        }
    }
    let vars: Vec<String> = obj
        .get("vars")
        .and_then(Value::as_array)
        .and_then(|a| a.iter().map(|x| x.as_str().map(str::to_string)).collect())
        .ok_or_else(|| err("$.vars", "expected a list of variable names"))?;
    if vars.is_empty() {
        return Err(err("$.vars", "at least one variable is required"));
    }
    let mut seen = std::collections::BTreeSet::new();
    if let Some(d) = vars.iter().find(|v| !seen.insert(v.as_str())) {
        return Err(err("$.vars", format!("duplicate variable {d:?}")));
    }
    let n = vars.len();
    let top = truncation(obj, "$")?;
    let generators = match (obj.get("terms"), obj.get("generators")) {
        (Some(_), Some(_)) => return Err(err("$", "give either \"terms\" or \"generators\", not both")),
        (Some(t), None) => {
            let t0 = top.ok_or_else(|| err("$", "missing \"truncation_degree\" or \"exact\""))?;
            vec![series(parse_terms(t, n, "$.terms")?, t0, "$")?]
        }
        (None, Some(g)) => {
            let list = g.as_array().ok_or_else(|| err("$.generators", "expected a list"))?;
            if list.is_empty() {
                return Err(Error::NoGenerators);
            }
            let mut out = Vec::new();
            for (i, item) in list.iter().enumerate() {
                let path = format!("$.generators[{i}]");
                let o = item.as_object().ok_or_else(|| err(&path, "expected an object"))?;
                if let Some(k) = o.keys().find(|k| !["terms", "truncation_degree", "exact"].contains(&k.as_str())) {
                    return Err(err(&path, format!("unknown field {k:?}")));
                }
                let t = truncation(o, &path)?
                    .or(top)
                    .ok_or_else(|| err(&path, "missing \"truncation_degree\" or \"exact\""))?;
                let terms = o.get("terms").ok_or_else(|| err(&path, "missing \"terms\""))?;
                out.push(series(parse_terms(terms, n, &format!("{path}.terms"))?, t, &path)?);
            }
            out
        }
        (None, None) => return Err(err("$", "missing \"terms\" or \"generators\"")),
    };
    Ok(Input { vars, generators })
}

#[cfg(test)]
mod tests {
    use super::*;

    const PAPER: &str = r#"{"vars": ["x", "y"], "truncation_degree": 4,
        "terms": [{"c": "1", "e": [1, 1]}, {"c": "-1", "e": [2, 0]},
                  {"c": "1/2", "e": [2, 1]}, {"c": "1/6", "e": [3, 1]}]}"#;

    #[test]
    fn parses_single_series() {
        let i = parse_input(PAPER).unwrap();
        let f = i.single().unwrap();
        assert_eq!(f.truncation(), Truncation::Degree(4));
        assert_eq!(f.poly().format(&i.vars), "x*y - x^2 + 1/2*x^2*y + 1/6*x^3*y");
    }

    #[test]
    fn parses_generators() {
        let text = r#"{"vars": ["x", "y"], "exact": true, "generators": [
            {"terms": [{"c": "1", "e": [1, 0]}, {"c": "-1", "e": [0, 1]}]},
            {"terms": [{"c": "+1", "e": [1, 0]}], "truncation_degree": 2}]}"#;
        let i = parse_input(text).unwrap();
        assert_eq!(i.generators.len(), 2);
        assert!(i.generators[0].is_exact());
        assert!(!i.generators[1].is_exact());
    }

    #[test]
    fn rejects_malformed_input() {
        let bad = [
            r#"{"vars": ["x"], "exact": true, "terms": [{"c": "0.5", "e": [1]}]}"#,
            r#"{"vars": ["x"], "exact": true, "terms": [{"c": "1", "e": [1, 2]}]}"#,
            r#"{"vars": ["x"], "terms": [{"c": "1", "e": [1]}]}"#,
            r#"{"vars": ["x"], "truncation_degree": 1, "terms": [{"c": "1", "e": [3]}]}"#,
            r#"{"vars": ["x", "x"], "exact": true, "terms": []}"#,
            r#"{"vars": ["x"], "exact": true, "terms": [{"c": "1", "e": [-1]}]}"#,
            r#"{"vars": ["x"], "exact": true, "terms": [}"#,
        ];
        for b in bad {
            assert!(matches!(parse_input(b), Err(Error::Parse(_))), "{b}");
        }
        match parse_input(bad[0]) {
            Err(Error::Parse(m)) => assert!(m.starts_with("$.terms[0].c")),
            other => panic!("{other:?}"),
        }
    }
}
