use std::io::Write;

use anyhow::{bail, Result};
use serde_json::{json, Map, Value};

use loctrop_core::algebra::{Polynomial, Series, Q};
use loctrop_core::polyhedra::Fan;
use loctrop_core::staircase::Soundness;
use loctrop_core::tropical::{OriginSemantics, TropicalVarietyResult};

use crate::Format;

pub const ORDER_DESCRIPTION: &str =
    "weight (smaller is larger), ties broken by negative degree reverse lexicographic (ds)";

/// Everything a command produces; the format decides what is printed.
pub struct Output {
    pub json: Value,
    pub text: String,
    pub svg: Option<String>,
    /// Some monomial verdict is unknown.
    pub unknown: bool,
    /// A check or certification failed; the output is still printed.
    pub failed: bool,
}

impl Output {
    pub fn new(json: Value, text: String) -> Self {
        Output { json, text, svg: None, unknown: false, failed: false }
    }

    pub fn emit(&self, format: Format) -> Result<()> {
        let mut out = std::io::stdout().lock();
        match format {
            Format::Text => out.write_all(self.text.as_bytes())?,
            Format::Json => {
                serde_json::to_writer_pretty(&mut out, &self.json)?;
                out.write_all(b"\n")?;
            }
            Format::Svg => match &self.svg {
                Some(s) => out.write_all(s.as_bytes())?,
                None => bail!("svg output is only available for two-variable tropical varieties"),
            },
        }
        Ok(())
    }
}

pub struct Meta<'a> {
    pub command: &'a str,
    pub seed: u64,
    pub origin: Option<OriginSemantics>,
    pub inputs: &'a [Series],
}

impl Meta<'_> {
    pub fn soundness(&self) -> Soundness {
        if self.inputs.iter().all(Series::is_exact) {
            Soundness::Exact
        } else {
            Soundness::CompleteIfTailDominated
        }
    }

    pub fn to_json(&self) -> Value {
        let mut caveats = Vec::new();
        if self.soundness() == Soundness::CompleteIfTailDominated {
            caveats.push(
                "truncated input: results assume every omitted term lies in E + N^n for the reported staircases"
                    .to_string(),
            );
        }
        json!({
            "tool": "loctrop",
            "version": env!("CARGO_PKG_VERSION"),
            "command": self.command,
            "seed": self.seed,
            "origin_semantics": self.origin.map(|o| o.name()),
            "order": ORDER_DESCRIPTION,
            "soundness": self.soundness(),
            "caveats": caveats,
        })
    }

    pub fn text_header(&self) -> String {
        let mut s = format!("# loctrop {} {}", env!("CARGO_PKG_VERSION"), self.command);
        if let Some(o) = self.origin {
            s.push_str(&format!(", origin semantics {}", o.name()));
        }
        s.push_str(&format!(", seed {}\n", self.seed));
        if self.soundness() == Soundness::CompleteIfTailDominated {
            s.push_str("# truncated input: complete only if every omitted term lies in E + N^n\n");
        }
        s
    }
}

pub fn document(meta: &Meta, result: Value) -> Value {
    json!({ "metadata": meta.to_json(), "result": result })
}

pub fn terms(p: &Polynomial) -> Value {
    serde_json::to_value(p).expect("polynomial serializes")
}

pub fn rational(q: &Q) -> Value {
    Value::String(q.to_string())
}

pub fn weight_text(w: &[Q]) -> String {
    let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn ray_text(r: &[i64]) -> String {
    let parts: Vec<String> = r.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// One line per cone: index, dimension, stratum and rays.
pub fn fan_listing(fan: &Fan, annotate: impl Fn(usize) -> String) -> String {
    let mut s = String::new();
    for (i, c) in fan.cones().iter().enumerate() {
        let rays: Vec<String> = fan.cone_rays(i).iter().map(|&r| ray_text(&fan.rays()[r])).collect();
        let rays = if rays.is_empty() { "origin".to_string() } else { rays.join(" ") };
        s.push_str(&format!("cone {i}: dim {}, stratum {}, rays {rays}", c.dim(), c.stratum()));
        let extra = annotate(i);
        if !extra.is_empty() {
            s.push_str(", ");
            s.push_str(&extra);
        }
        s.push('\n');
    }
    if fan.is_empty() {
        s.push_str("empty fan\n");
    }
    s
}

pub fn variety_json(t: &TropicalVarietyResult) -> Value {
    let fan = t.fan.to_json_with(|i| {
        let mut m = Map::new();
        m.insert("stratum".into(), Value::String(t.fan.cones()[i].stratum().label()));
        m.insert("certificate".into(), serde_json::to_value(&t.certificates[i]).expect("certificate serializes"));
        Some(m)
    });
    let strata: Vec<String> = t.strata_touched.iter().map(|s| s.label()).collect();
    json!({
        "kind": t.kind,
        "origin_semantics": t.origin_semantics.name(),
        "soundness": t.soundness,
        "fan": fan,
        "strata_touched": strata,
        "warnings": t.warnings,
    })
}

pub fn variety_text(t: &TropicalVarietyResult) -> String {
    let mut s = format!("{:?} with {} cones\n", t.kind, t.fan.len()).to_lowercase();
    s.push_str(&fan_listing(&t.fan, |_| String::new()));
    for w in &t.warnings {
        s.push_str(&format!("warning: {w}\n"));
    }
    s
}
