//! The `verify` command: cross-checks of the input against the oracles.

use anyhow::Result;
use rand::Rng;
use serde::Serialize;
use serde_json::json;

use loctrop_core::algebra::{stratum_of, Exponent, Q};
use loctrop_core::io::Input;
use loctrop_core::localgb::{local_groebner_fan, require_exact, twin_check, LgfOptions};
use loctrop_core::oracles::{brute_staircase, global_min_twice, grid_points, newton_polygon_rays, GridSpec};
use loctrop_core::staircase::{hat_poly, minimal_staircase, tilde_poly};
use loctrop_core::tropical::{local_trop_hypersurface, OriginSemantics, TropicalPolynomial};

use crate::report::{document, weight_text, Meta, Output};
use crate::{Cli, Suite};

const MAX_LISTED: usize = 10;

#[derive(Debug, Serialize)]
struct SuiteReport {
    name: &'static str,
    status: &'static str,
    checks: usize,
    failures: Vec<String>,
    note: String,
}

impl SuiteReport {
    fn from_results(name: &'static str, results: Vec<Option<String>>, note: String) -> Self {
        let checks = results.len();
        let failures: Vec<String> = results.into_iter().flatten().collect();
        let status = if failures.is_empty() { "pass" } else { "fail" };
        SuiteReport { name, status, checks, failures: failures.into_iter().take(MAX_LISTED).collect(), note }
    }

    fn skipped(name: &'static str, note: impl Into<String>) -> Self {
        SuiteReport { name, status: "skipped", checks: 0, failures: vec![], note: note.into() }
    }
}

/// Runs `f` on every item using up to `jobs` threads; results keep the item
/// order.
fn shard<T: Sync, R: Send>(items: &[T], jobs: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let jobs = jobs.max(1);
    if jobs == 1 || items.len() < 2 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(jobs);
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| {
                let f = &f;
                scope.spawn(move || part.iter().map(f).collect::<Vec<R>>())
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

fn staircase_suite(input: &Input, spec: &GridSpec, samples: usize, jobs: usize) -> SuiteReport {
    let n = input.nvars();
    let mut rng = spec.rng();
    let mut sets: Vec<Vec<Exponent>> =
        input.generators.iter().map(|g| g.poly().exponents().cloned().collect()).collect();
    for _ in 0..samples {
        let size = rng.gen_range(1..=12);
        sets.push((0..size).map(|_| Exponent((0..n).map(|_| rng.gen_range(0..=8)).collect())).collect());
    }
    let results = shard(&sets, jobs, |s| {
        let bx = s.iter().flat_map(|e| e.0.iter().copied()).max().unwrap_or(0);
        let fast = minimal_staircase(s);
        let brute = brute_staircase(s, bx);
        let antichain = fast
            .generators
            .iter()
            .enumerate()
            .all(|(i, a)| fast.generators.iter().enumerate().all(|(j, b)| i == j || !a.divides(b)));
        (fast.generators != brute.generators || !antichain).then(|| {
            let listed: Vec<String> = s.iter().map(|e| e.to_string()).collect();
            format!("support {{{}}}", listed.join(", "))
        })
    });
    SuiteReport::from_results(
        "staircase",
        results,
        format!("{} input supports and {samples} random sets", input.generators.len()),
    )
}

fn grid_suite(input: &Input, spec: &GridSpec, jobs: usize) -> Result<SuiteReport> {
    let points = grid_points(spec, input.nvars());
    let mut results = Vec::new();
    for (k, f) in input.generators.iter().enumerate() {
        let principal = if f.is_exact() && !f.is_zero() {
            Some(local_trop_hypersurface(f, OriginSemantics::Definition)?)
        } else {
            None
        };
        results.extend(shard(&points, jobs, |w| {
            let stratum = stratum_of(w).expect("grid weights are nonnegative");
            let full = TropicalPolynomial::of_series(f).min_twice_at(w);
            let agree = stratum.is_origin() || {
                let tilde = TropicalPolynomial::of_series(&tilde_poly(f, &stratum)).min_twice_at(w);
                let hat = TropicalPolynomial::of_series(&hat_poly(f, &stratum)).min_twice_at(w);
                full == tilde && tilde == hat
            };
            let compatible = principal.as_ref().is_none_or(|t| t.contains(w) == global_min_twice(f.poly(), w));
            (!agree || !compatible).then(|| format!("generator {k} at {}", weight_text(w)))
        }));
    }
    Ok(SuiteReport::from_results(
        "grid",
        results,
        format!("{} grid points per generator, denominators up to {}", points.len(), spec.max_denominator),
    ))
}

fn newton_suite(input: &Input) -> Result<SuiteReport> {
    let f = match input.generators.as_slice() {
        [f] if input.nvars() == 2
            && f.is_exact()
            && f.poly().constant_term() == Q::from_integer(0.into())
            && !f.is_zero() =>
        {
            f
        }
        _ => return Ok(SuiteReport::skipped("newton", "needs one exact two-variable series vanishing at the origin")),
    };
    let mut newton = newton_polygon_rays(f.poly())?;
    newton.sort();
    let t = local_trop_hypersurface(f, OriginSemantics::Definition)?;
    let mut trop: Vec<Vec<i64>> = t.ray_directions().into_iter().filter(|r| r.iter().all(|&x| x > 0)).collect();
    trop.sort();
    let failure = (newton != trop).then(|| format!("newton rays {newton:?}, tropical rays {trop:?}"));
    Ok(SuiteReport::from_results("newton", vec![failure], "interior rays against lower Newton polygon normals".into()))
}

fn twin_suite(input: &Input, cli: &Cli) -> Result<SuiteReport> {
    let Ok(gens) = require_exact(&input.generators) else {
        return Ok(SuiteReport::skipped("twin", "needs exact generators"));
    };
    let lgf = local_groebner_fan(&gens, &LgfOptions { bound: cli.bound, ..LgfOptions::default() })?;
    let mut pairs: Vec<(usize, Vec<Q>, Vec<Q>)> = Vec::new();
    for i in lgf.maximal() {
        let c = &lgf.fan.cones()[i];
        for (_, facet) in c.facets() {
            pairs.push((i, facet.interior_point_or_origin(), lgf.cones[i].sample.clone()));
        }
    }
    let results = shard(&pairs, cli.jobs, |(i, wp, w)| {
        (!twin_check(&gens, wp, w)).then(|| format!("cone {i}, facet point {}", weight_text(wp)))
    });
    Ok(SuiteReport::from_results("twin", results, format!("{} (maximal cone, facet) pairs", pairs.len())))
}

pub fn run(cli: &Cli, input: &Input, suite: Suite, samples: usize) -> Result<Output> {
    let spec = GridSpec::new(8, 2, samples, cli.seed)?;
    let wanted = |s: Suite| suite == Suite::All || suite == s;
    let mut reports = Vec::new();
    if wanted(Suite::Staircase) {
        reports.push(staircase_suite(input, &spec, samples, cli.jobs));
    }
    if wanted(Suite::Grid) {
        reports.push(grid_suite(input, &spec, cli.jobs)?);
    }
    if wanted(Suite::Newton) {
        reports.push(newton_suite(input)?);
    }
    if wanted(Suite::Twin) {
        reports.push(twin_suite(input, cli)?);
    }
    let failed = reports.iter().any(|r| r.status == "fail");
    let meta = Meta {
        command: "verify",
        seed: cli.seed,
        origin: Some(OriginSemantics::Definition),
        inputs: &input.generators,
    };
    let mut text = meta.text_header();
    for r in &reports {
        text.push_str(&format!("{}: {} ({} checks; {})\n", r.name, r.status, r.checks, r.note));
        for f in &r.failures {
            text.push_str(&format!("  failed: {f}\n"));
        }
    }
    let status = if failed { "fail" } else { "pass" };
    text.push_str(&format!("overall: {status}\n"));
    let json = document(&meta, json!({ "status": status, "suites": reports }));
    let mut out = Output::new(json, text);
    out.failed = failed;
    Ok(out)
}
