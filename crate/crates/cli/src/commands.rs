use std::path::Path;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use loctrop_core::algebra::{enumerate_strata, initial_form, parse_rational, Stratum, WeightVector, Q};
use loctrop_core::io::{parse_input, Input};
use loctrop_core::localgb::{
    initial_ideal, local_groebner_fan, require_exact, standard_basis, tropical_finite_set, tropvar_general,
    variety_of_fan, LgfOptions, LocalGroebnerFan, MonomialVerdict,
};
use loctrop_core::staircase::{hat_poly, stratum_staircase, tilde_poly};
use loctrop_core::tropical::{local_trop_hypersurface, prevariety, OriginSemantics, TropicalVarietyResult};

use crate::report::{self, document, terms, variety_json, variety_text, Meta, Output};
use crate::{Cli, Command, Method};

pub fn load(path: &Path) -> Result<Input> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_input(&text).with_context(|| format!("{}", path.display()))
}

/// Parses `1,2` or `1/2,3` into a nonnegative weight of length `n`.
pub fn parse_weight(s: &str, n: usize) -> Result<Vec<Q>> {
    let w: Vec<Q> = s
        .split(',')
        .map(|x| parse_rational(x).with_context(|| format!("bad weight entry {x:?}")))
        .collect::<Result<_>>()?;
    if w.len() != n {
        bail!("weight has {} entries but the input has {n} variables", w.len());
    }
    loctrop_core::algebra::stratum_of(&w)?;
    Ok(w)
}

/// Parses a 1-based list of zero coordinates; `0` is the open orthant.
pub fn parse_stratum(s: &str, n: usize) -> Result<Stratum> {
    let t = s.trim();
    if t == "0" || t.is_empty() {
        return Ok(Stratum::maximal(n));
    }
    let mut zeros = Vec::new();
    for part in t.split(',') {
        let i: usize = part.trim().parse().with_context(|| format!("bad stratum index {part:?}"))?;
        if i == 0 || i > n {
            bail!("stratum index {i} out of range 1..={n}");
        }
        zeros.push(i - 1);
    }
    Ok(Stratum::from_zero_set(n, zeros))
}

fn options(cli: &Cli) -> LgfOptions {
    LgfOptions { bound: cli.bound, ..LgfOptions::default() }
}

fn has_unknown(lgf: &LocalGroebnerFan) -> bool {
    lgf.verdicts.iter().any(|v| matches!(v, MonomialVerdict::Unknown { .. }))
}

pub fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Staircase { input, stratum } => staircase(cli, &load(input)?, stratum.as_deref()),
        Command::Initial { input, weight } => initial(cli, &load(input)?, weight),
        Command::Trophyp { input } => {
            let input = load(input)?;
            let origin = semantics(cli, OriginSemantics::Definition);
            let t = local_trop_hypersurface(input.single()?, origin)?;
            Ok(variety_output(cli, "trophyp", &input, &t, false))
        }
        Command::Tropvar { input, method } => {
            let input = load(input)?;
            let (t, unknown) = variety(cli, &input, *method)?;
            Ok(variety_output(cli, "tropvar", &input, &t, unknown))
        }
        Command::Prevariety { input } => {
            let input = load(input)?;
            let origin = semantics(cli, OriginSemantics::Definition);
            let t = prevariety(&input.generators, origin)?;
            Ok(variety_output(cli, "prevariety", &input, &t, false))
        }
        Command::Stdbasis { input, weight } => stdbasis(cli, &load(input)?, weight),
        Command::Lgf { input } => lgf(cli, &load(input)?),
        Command::Tropbasis { input } => tropbasis(cli, &load(input)?),
        Command::Verify { input, suite, samples } => crate::verify::run(cli, &load(input)?, *suite, *samples),
        Command::Plot { input, output, method } => {
            let input = load(input)?;
            let (t, unknown) = variety(cli, &input, *method)?;
            let svg = crate::svg::render(&t, &input.vars)?;
            std::fs::write(output, &svg).with_context(|| format!("cannot write {}", output.display()))?;
            let meta =
                Meta { command: "plot", seed: cli.seed, origin: Some(t.origin_semantics), inputs: &input.generators };
            let json = document(&meta, json!({ "output": output.display().to_string(), "cones": t.fan.len() }));
            let text = format!("{}wrote {}\n", meta.text_header(), output.display());
            let mut out = Output::new(json, text);
            out.svg = Some(svg);
            out.unknown = unknown;
            Ok(out)
        }
    }
}

fn semantics(cli: &Cli, default: OriginSemantics) -> OriginSemantics {
    cli.origin.map(Into::into).unwrap_or(default)
}

/// The variety by the principal path (one generator) or the Groebner path.
fn variety(cli: &Cli, input: &Input, method: Option<Method>) -> Result<(TropicalVarietyResult, bool)> {
    let method = method.unwrap_or(if input.generators.len() == 1 { Method::Principal } else { Method::Groebner });
    match method {
        Method::Principal => {
            let origin = semantics(cli, OriginSemantics::Definition);
            Ok((local_trop_hypersurface(input.single()?, origin)?, false))
        }
        Method::Groebner => {
            if semantics(cli, OriginSemantics::MonomialTest) != OriginSemantics::MonomialTest {
                bail!("the Groebner path decides the origin by the monomial test; drop --origin definition");
            }
            let gens = require_exact(&input.generators)?;
            let (t, lgf) = tropvar_general(&gens, &options(cli))?;
            Ok((t, has_unknown(&lgf)))
        }
    }
}

fn variety_output(cli: &Cli, command: &str, input: &Input, t: &TropicalVarietyResult, unknown: bool) -> Output {
    let meta = Meta { command, seed: cli.seed, origin: Some(t.origin_semantics), inputs: &input.generators };
    let json = document(&meta, variety_json(t));
    let text = format!("{}{}", meta.text_header(), variety_text(t));
    let mut out = Output::new(json, text);
    out.svg = crate::svg::render(t, &input.vars).ok();
    out.unknown = unknown;
    out
}

fn staircase(cli: &Cli, input: &Input, stratum: Option<&str>) -> Result<Output> {
    let f = input.single()?;
    let n = input.nvars();
    let strata = match stratum {
        Some(s) => vec![parse_stratum(s, n)?],
        None => enumerate_strata(n),
    };
    let meta = Meta { command: "staircase", seed: cli.seed, origin: None, inputs: &input.generators };
    let mut text = meta.text_header();
    let mut rows = Vec::new();
    for s in &strata {
        let classes = stratum_staircase(f, s)?;
        let exps = classes.exponents();
        let tilde = tilde_poly(f, s);
        let hat = hat_poly(f, s);
        let listed: Vec<String> = exps.iter().map(|e| e.to_string()).collect();
        text.push_str(&format!(
            "stratum {}: E = {{{}}}\n  tilde = {}\n  hat = {}\n",
            s,
            listed.join(", "),
            tilde.poly().format(&input.vars),
            hat.poly().format(&input.vars)
        ));
        rows.push(json!({
            "stratum": s.label(),
            "staircase": exps,
            "tilde": terms(tilde.poly()),
            "hat": terms(hat.poly()),
            "soundness": classes.soundness,
        }));
    }
    Ok(Output::new(document(&meta, json!({ "strata": rows })), text))
}

fn initial(cli: &Cli, input: &Input, weight: &str) -> Result<Output> {
    let w = parse_weight(weight, input.nvars())?;
    let meta = Meta { command: "initial", seed: cli.seed, origin: None, inputs: &input.generators };
    let mut text = meta.text_header();
    let result = if let [f] = input.generators.as_slice() {
        let init = initial_form(f, &WeightVector::new(w.clone())?)?;
        text.push_str(&format!(
            "in_{}(f) = {}\nweight {}, graded ring of stratum {}\n",
            report::weight_text(&w),
            init.body.poly().format(&input.vars),
            init.value,
            init.ring_tag
        ));
        if init.truncation_warning {
            text.push_str("warning: omitted terms in zero-weight variables could also be minimal\n");
        }
        json!({
            "weight": w.iter().map(report::rational).collect::<Vec<_>>(),
            "initial": terms(init.body.poly()),
            "value": report::rational(&init.value),
            "stratum": init.ring_tag.label(),
            "truncation_warning": init.truncation_warning,
        })
    } else {
        let gens = require_exact(&input.generators)?;
        let ideal = initial_ideal(&gens, &w);
        text.push_str(&format!("in_{}(I) generated by\n", report::weight_text(&w)));
        for h in &ideal {
            text.push_str(&format!("  {}\n", h.format(&input.vars)));
        }
        json!({
            "weight": w.iter().map(report::rational).collect::<Vec<_>>(),
            "initial_ideal": ideal.iter().map(terms).collect::<Vec<_>>(),
        })
    };
    Ok(Output::new(document(&meta, result), text))
}

fn stdbasis(cli: &Cli, input: &Input, weight: &str) -> Result<Output> {
    let w = parse_weight(weight, input.nvars())?;
    let gens = require_exact(&input.generators)?;
    let sb = standard_basis(&gens, &w, options(cli).initial_degree);
    let meta = Meta { command: "stdbasis", seed: cli.seed, origin: None, inputs: &input.generators };
    let mut text = meta.text_header();
    text.push_str(&format!(
        "standard basis for weight {}{}\n",
        report::weight_text(&w),
        if sb.reduced { ", reduced" } else { "" }
    ));
    for (g, e) in sb.elements.iter().zip(&sb.leading_exponents) {
        text.push_str(&format!("  {}    [leading exponent {e}]\n", g.format(&input.vars)));
    }
    let result = json!({
        "weight": w.iter().map(report::rational).collect::<Vec<_>>(),
        "order_rows": sb.order.rows(),
        "reduced": sb.reduced,
        "elements": sb.elements.iter().map(terms).collect::<Vec<_>>(),
        "leading_exponents": sb.leading_exponents,
    });
    Ok(Output::new(document(&meta, result), text))
}

fn lgf_json(lgf: &LocalGroebnerFan) -> Value {
    let fan = lgf.fan.to_json_with(|i| {
        let c = &lgf.cones[i];
        let mut m = serde_json::Map::new();
        m.insert("stratum".into(), Value::String(c.stratum.label()));
        m.insert("sample".into(), json!(c.sample.iter().map(report::rational).collect::<Vec<_>>()));
        m.insert("initial".into(), json!(c.initial_forms.iter().map(terms).collect::<Vec<_>>()));
        m.insert("verdict".into(), Value::String(lgf.verdicts[i].label().into()));
        if let MonomialVerdict::Found { monomial, .. } = &lgf.verdicts[i] {
            m.insert("monomial".into(), json!(monomial));
        }
        Some(m)
    });
    json!({ "fan": fan, "warnings": lgf.warnings })
}

fn lgf(cli: &Cli, input: &Input) -> Result<Output> {
    let gens = require_exact(&input.generators)?;
    let lgf = local_groebner_fan(&gens, &options(cli))?;
    let variety = variety_of_fan(&lgf)?;
    let meta =
        Meta { command: "lgf", seed: cli.seed, origin: Some(OriginSemantics::MonomialTest), inputs: &input.generators };
    let mut text = meta.text_header();
    text.push_str(&format!("local Groebner fan with {} cones\n", lgf.fan.len()));
    text.push_str(&report::fan_listing(&lgf.fan, |i| {
        let forms: Vec<String> = lgf.cones[i].initial_forms.iter().map(|h| h.format(&input.vars)).collect();
        format!("{}, initial <{}>", lgf.verdicts[i].label(), forms.join(", "))
    }));
    let free: Vec<usize> = variety.fan.cones().iter().filter_map(|c| lgf.fan.index_of(c)).collect();
    if free.is_empty() {
        text.push_str("tropical variety: empty\n");
    } else {
        let ids: Vec<String> = free.iter().map(|i| i.to_string()).collect();
        text.push_str(&format!("tropical variety: cones {}\n", ids.join(" ")));
    }
    for w in &variety.warnings {
        text.push_str(&format!("warning: {w}\n"));
    }
    let mut json = lgf_json(&lgf);
    json["variety_cones"] = json!(free);
    json["warnings"] = json!(variety.warnings);
    let mut out = Output::new(document(&meta, json), text);
    out.unknown = has_unknown(&lgf);
    Ok(out)
}

fn tropbasis(cli: &Cli, input: &Input) -> Result<Output> {
    let gens = require_exact(&input.generators)?;
    let opts = options(cli);
    let lgf = local_groebner_fan(&gens, &opts)?;
    let h = tropical_finite_set(&gens, &lgf, opts.bound);
    let meta = Meta {
        command: "tropbasis",
        seed: cli.seed,
        origin: Some(OriginSemantics::MonomialTest),
        inputs: &input.generators,
    };
    let mut text = meta.text_header();
    text.push_str(&format!("{} elements\n", h.elements.len()));
    for f in &h.elements {
        text.push_str(&format!("  {}\n", f.format(&input.vars)));
    }
    for l in &h.lifts {
        text.push_str(&format!(
            "cone {}: initial form {} from {}\n",
            l.cone_id,
            l.monomial,
            l.element.format(&input.vars)
        ));
    }
    for id in &h.failures {
        text.push_str(&format!("error: no certified lift for cone {id}\n"));
        eprintln!("error: no certified lift for cone {id}");
    }
    let lifts: Vec<Value> = h
        .lifts
        .iter()
        .map(|l| json!({ "cone": l.cone_id, "monomial": l.monomial, "element": terms(&l.element) }))
        .collect();
    let result = json!({
        "elements": h.elements.iter().map(terms).collect::<Vec<_>>(),
        "lifts": lifts,
        "failures": h.failures,
        "warnings": lgf.warnings,
    });
    let mut out = Output::new(document(&meta, result), text);
    out.unknown = has_unknown(&lgf);
    out.failed = !h.failures.is_empty();
    Ok(out)
}
