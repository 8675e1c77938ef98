//! Acceptance suite: one pass/fail line per criterion.
//!
//! Run with `cargo test -p loctrop-cli --test acceptance -- --nocapture` to
//! see the report.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use loctrop_core::algebra::{enumerate_strata, Exponent, Polynomial, Series, Stratum, Q};
use loctrop_core::localgb::{
    covering_test, local_groebner_fan, tropical_finite_set, truncated_reduced_basis, twin_check, variety_of_fan,
    LgfOptions, LocalGroebnerFan,
};
use loctrop_core::mora::ideals_equal;
use loctrop_core::oracles::{
    brute_staircase, global_min_twice, grid_points, newton_polygon_rays, random_coordinate, random_generic_curve,
    random_polynomial, random_series, GridSpec,
};
use loctrop_core::order::MonomialOrder;
use loctrop_core::polyhedra::{validate_fan, RationalCone};
use loctrop_core::staircase::{hat_poly, minimal_staircase, tilde_poly};
use loctrop_core::tropical::{hypersurface_fan, local_trop_hypersurface, OriginSemantics, TropicalPolynomial};
use rand::Rng;

type Outcome = std::result::Result<String, String>;

fn check(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn poly(n: usize, t: &[(i64, i64, &[u32])]) -> Polynomial {
    Polynomial::from_ints(n, t)
}

fn sample_p() -> Series {
    let p = poly(2, &[(1, 1, &[1, 1]), (-1, 1, &[2, 0]), (1, 2, &[2, 1]), (1, 6, &[3, 1])]);
    Series::truncated(p, 4).unwrap()
}

fn rng(seed: u64) -> impl Rng {
    GridSpec::new(8, 2, 1, seed).unwrap().rng()
}

/// A random weight: a random stratum, then positive rational coordinates
/// with denominators at most 16 on its support.
fn stratified_weight<R: Rng>(rng: &mut R, n: usize) -> Vec<Q> {
    let strata = enumerate_strata(n);
    let s = &strata[rng.gen_range(0..strata.len())];
    (0..n)
        .map(|i| {
            if s.is_zero(i) {
                Q::from_integer(0.into())
            } else {
                let d = rng.gen_range(1..=16i64);
                Q::new(rng.gen_range(1..=3 * d).into(), d.into())
            }
        })
        .collect()
}

fn series_with_terms<R: Rng>(rng: &mut R, n: usize, degree: u32) -> Series {
    loop {
        let terms = rng.gen_range(2..=6);
        let f = random_series(rng, n, degree, terms);
        if f.poly().len() >= 2 {
            return f;
        }
    }
}

fn min_twice(f: &Series, w: &[Q]) -> bool {
    TropicalPolynomial::of_series(f).min_twice_at(w)
}

fn criterion_1() -> Outcome {
    let p = sample_p();
    let s = |z: &[usize]| Stratum::from_zero_set(2, z.iter().copied());
    let expect = [
        (s(&[]), poly(2, &[(1, 1, &[1, 1]), (-1, 1, &[2, 0])])),
        (s(&[0]), poly(2, &[(-1, 1, &[2, 0])])),
        (s(&[1]), poly(2, &[(1, 1, &[1, 1])])),
        (s(&[0, 1]), Polynomial::zero(2)),
    ];
    for (stratum, want) in &expect {
        let got = hat_poly(&p, stratum);
        check(got.poly() == want, || format!("hat on stratum {stratum}: got {}", got.poly()))?;
    }
    let t = local_trop_hypersurface(&p, OriginSemantics::Definition).map_err(|e| e.to_string())?;
    let want = vec![RationalCone::origin(2), RationalCone::ray(&[1, 1])];
    check(t.fan.cones() == want.as_slice(), || format!("variety cones {:?}", t.fan.cones()))?;
    Ok("four surrogate polynomials and the diagonal ray with its origin face".into())
}

fn criterion_2() -> Outcome {
    let mut r = rng(2);
    for k in 0..200 {
        let n = 2 + k % 2;
        let size = r.gen_range(1..=12);
        let s: Vec<Exponent> = (0..size).map(|_| Exponent((0..n).map(|_| r.gen_range(0..=8)).collect())).collect();
        let fast = minimal_staircase(&s);
        let brute = brute_staircase(&s, 8);
        check(fast.generators == brute.generators, || {
            format!("instance {k}: {:?} vs {:?}", fast.generators, brute.generators)
        })?;
        for (i, a) in fast.generators.iter().enumerate() {
            for (j, b) in fast.generators.iter().enumerate() {
                check(i == j || !a.divides(b), || format!("instance {k}: not an antichain"))?;
            }
        }
        for e in &s {
            check(fast.covers(e), || format!("instance {k}: {e} not generated"))?;
        }
    }
    Ok("200 instances agree with the box oracle".into())
}

fn criterion_3() -> Outcome {
    let mut r = rng(3);
    let mut checks = 0;
    for k in 0..30 {
        let n = 2 + k % 2;
        let f = series_with_terms(&mut r, n, 6);
        for _ in 0..500 {
            let w = stratified_weight(&mut r, n);
            let stratum = loctrop_core::stratum_of(&w).unwrap();
            let full = min_twice(&f, &w);
            let (tilde, hat) = if stratum.is_origin() {
                (true, true)
            } else {
                (min_twice(&tilde_poly(&f, &stratum), &w), min_twice(&hat_poly(&f, &stratum), &w))
            };
            check(full == tilde && tilde == hat, || format!("series {k} disagrees at {w:?}"))?;
            checks += 1;
        }
    }
    Ok(format!("{checks} weights agree"))
}

fn in_cones(cones: &[RationalCone], w: &[Q]) -> bool {
    cones.iter().any(|c| c.contains(w))
}

fn criterion_4() -> Outcome {
    let mut r = rng(4);
    let mut checks = 0;
    for k in 0..50 {
        let n = 2 + k % 2;
        let f = series_with_terms(&mut r, n, 6);
        let boundary: Vec<Stratum> =
            enumerate_strata(n).into_iter().filter(|s| !s.is_maximal() && !s.is_origin()).collect();
        let fans: Vec<(Vec<RationalCone>, Vec<RationalCone>)> = boundary
            .iter()
            .map(|s| {
                let t = hypersurface_fan(&TropicalPolynomial::of_series(&tilde_poly(&f, s)), s).unwrap();
                let h = hypersurface_fan(&TropicalPolynomial::of_series(&hat_poly(&f, s)), s).unwrap();
                (t, h)
            })
            .collect();
        for _ in 0..100 {
            let i = r.gen_range(0..boundary.len());
            let s = &boundary[i];
            let w: Vec<Q> = (0..n)
                .map(|j| {
                    if s.is_zero(j) {
                        Q::from_integer(0.into())
                    } else {
                        random_coordinate(&mut r, 16, 3).max(Q::new(1.into(), 16.into()))
                    }
                })
                .collect();
            let (t, h) = &fans[i];
            check(in_cones(t, &w) == in_cones(h, &w), || format!("series {k} disagrees at {w:?}"))?;
            checks += 1;
        }
    }
    Ok(format!("{checks} boundary weights agree"))
}

fn criterion_5() -> Outcome {
    let mut r = rng(5);
    let mut checks = 0;
    for k in 0..20 {
        let n = 2 + k % 2;
        let terms = r.gen_range(2..=6);
        let f = random_polynomial(&mut r, n, 1, 5, terms);
        let t = local_trop_hypersurface(&Series::exact(f.clone()), OriginSemantics::Definition)
            .map_err(|e| e.to_string())?;
        let grid = GridSpec::new(8, 2, 300, 50 + k as u64).unwrap();
        for w in grid_points(&grid, n) {
            check(t.contains(&w) == global_min_twice(&f, &w), || format!("polynomial {f} disagrees at {w:?}"))?;
            checks += 1;
        }
    }
    Ok(format!("{checks} grid points agree"))
}

/// Random ideals for criteria 6 to 9: alternating n = 2, 3 and one to three
/// generators; the ones with a single generator double as principal inputs.
fn random_ideals() -> Vec<Vec<Polynomial>> {
    let mut r = rng(6);
    (0..10)
        .map(|k| {
            let n = 2 + k % 2;
            let gens = 1 + k % 3;
            (0..gens)
                .map(|_| {
                    let terms = r.gen_range(2..=3);
                    random_polynomial(&mut r, n, 1, 4, terms)
                })
                .collect()
        })
        .collect()
}

/// A second relative interior point: rays weighted 1, 2, 3, ...
fn second_sample(c: &RationalCone) -> Vec<Q> {
    let n = c.ambient();
    let mut v = vec![Q::from_integer(0.into()); n];
    for (i, ray) in c.rays().iter().enumerate() {
        for (x, &y) in v.iter_mut().zip(ray) {
            *x += Q::from_integer(((i as i64 + 1) * y).into());
        }
    }
    v
}

fn criterion_6(ideals: &[Vec<Polynomial>], fans: &mut Vec<LocalGroebnerFan>) -> Outcome {
    let opts = LgfOptions::default();
    let mut slowest = Duration::ZERO;
    for (k, gens) in ideals.iter().enumerate() {
        let start = Instant::now();
        let lgf = local_groebner_fan(gens, &opts).map_err(|e| format!("ideal {k}: {e}"))?;
        let n = lgf.fan.ambient();
        validate_fan(n, lgf.fan.cones()).map_err(|e| format!("ideal {k}: {e}"))?;
        check(covering_test(&lgf), || format!("ideal {k}: covering test failed"))?;
        for (i, c) in lgf.fan.cones().iter().enumerate() {
            if c.is_origin() {
                continue;
            }
            let a = lgf.cones[i].sample.clone();
            let b = second_sample(c);
            let ia = loctrop_core::localgb::initial_ideal(gens, &a);
            let ib = loctrop_core::localgb::initial_ideal(gens, &b);
            check(ideals_equal(&ia, &ib, &MonomialOrder::ds(n)), || {
                format!("ideal {k} cone {i}: initial ideals differ between samples")
            })?;
            if c.dim() == n {
                let ra = truncated_reduced_basis(gens, &a, 10);
                let rb = truncated_reduced_basis(gens, &b, 10);
                check(ra == rb, || format!("ideal {k} cone {i}: reduced bases differ between samples"))?;
            }
        }
        let took = start.elapsed();
        slowest = slowest.max(took);
        check(took < Duration::from_secs(60), || format!("ideal {k} took {took:?}"))?;
        fans.push(lgf);
    }
    let total: usize = fans.iter().map(|f| f.fan.len()).sum();
    Ok(format!("10 fans, {total} cones, slowest ideal {:.2}s", slowest.as_secs_f64()))
}

fn criterion_7(ideals: &[Vec<Polynomial>], fans: &[LocalGroebnerFan]) -> Outcome {
    let mut pairs = 0;
    for (k, (gens, lgf)) in ideals.iter().zip(fans).enumerate() {
        for i in lgf.maximal() {
            let c = &lgf.fan.cones()[i];
            let w = &lgf.cones[i].sample;
            for (_, facet) in c.facets() {
                let wp = facet.interior_point_or_origin();
                check(twin_check(gens, &wp, w), || format!("ideal {k} cone {i}: twin check failed at facet {wp:?}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} (cone, facet) pairs"))
}

fn criterion_8(ideals: &[Vec<Polynomial>], fans: &[LocalGroebnerFan]) -> Outcome {
    let mut principal = 0;
    for (k, (gens, lgf)) in ideals.iter().zip(fans).enumerate() {
        let t = variety_of_fan(lgf).map_err(|e| format!("ideal {k}: {e}"))?;
        let n = lgf.fan.ambient();
        validate_fan(n, t.fan.cones()).map_err(|e| format!("ideal {k}: {e}"))?;
        for c in t.fan.cones() {
            check(lgf.fan.index_of(c).is_some(), || format!("ideal {k}: cone is not an LGF cone"))?;
        }
        if gens.len() == 1 {
            let p = local_trop_hypersurface(&Series::exact(gens[0].clone()), OriginSemantics::MonomialTest)
                .map_err(|e| e.to_string())?;
            check(p.fan.cones() == t.fan.cones(), || format!("ideal {k}: principal path differs"))?;
            principal += 1;
        }
    }
    Ok(format!("10 subfans, {principal} principal comparisons"))
}

fn criterion_9(ideals: &[Vec<Polynomial>], fans: &[LocalGroebnerFan]) -> Outcome {
    let opts = LgfOptions::default();
    let mut r = rng(9);
    let mut star = 0;
    for (k, (gens, lgf)) in ideals.iter().zip(fans).enumerate() {
        let t = variety_of_fan(lgf).map_err(|e| e.to_string())?;
        let h = tropical_finite_set(gens, lgf, opts.bound);
        check(h.failures.is_empty(), || format!("ideal {k}: lift failed for cones {:?}", h.failures))?;
        let n = lgf.fan.ambient();
        let mut found = 0;
        let mut attempts = 0;
        while found < 200 && attempts < 5000 {
            attempts += 1;
            let w = stratified_weight(&mut r, n);
            if t.contains(&w) {
                continue;
            }
            found += 1;
            check(h.elements.iter().any(|f| !global_min_twice(f, &w)), || {
                format!("ideal {k}: condition fails at {w:?}")
            })?;
        }
        star += found;
        let grid = GridSpec::new(8, 2, 300, 90 + k as u64).unwrap();
        for w in grid_points(&grid, n) {
            let cut = h.elements.iter().all(|f| global_min_twice(f, &w));
            check(cut == t.contains(&w), || {
                let names = loctrop_core::algebra::default_names(n);
                let g: Vec<String> = gens.iter().map(|g| g.format(&names)).collect();
                let e: Vec<String> = h.elements.iter().map(|g| g.format(&names)).collect();
                format!("ideal {k} {g:?} with H {e:?}: grid mismatch at {w:?} (variety has it: {})", t.contains(&w))
            })?;
        }
    }
    Ok(format!("{star} weights outside the varieties, grids agree"))
}

fn interior_rays(f: &Polynomial) -> Result<BTreeSet<Vec<i64>>, String> {
    let t =
        local_trop_hypersurface(&Series::exact(f.clone()), OriginSemantics::Definition).map_err(|e| e.to_string())?;
    Ok(t.ray_directions().into_iter().filter(|r| r.iter().all(|&x| x > 0)).collect())
}

fn criterion_10() -> Outcome {
    let mut r = rng(10);
    let cusp = poly(2, &[(1, 1, &[0, 2]), (-1, 1, &[3, 0])]);
    let mut curves = vec![cusp];
    let mut resampled = 0;
    while curves.len() < 21 {
        let terms = r.gen_range(2..=5);
        let (c, rejected) = random_generic_curve(&mut r, 6, terms);
        resampled += rejected;
        curves.push(c);
    }
    for c in &curves {
        let newton: BTreeSet<Vec<i64>> = newton_polygon_rays(c).map_err(|e| e.to_string())?.into_iter().collect();
        let trop = interior_rays(c)?;
        check(newton == trop, || format!("{c}: newton {newton:?} vs tropical {trop:?}"))?;
    }
    check(interior_rays(&curves[0])? == BTreeSet::from([vec![2, 3]]), || "cusp ray".into())?;
    Ok(format!("cusp plus 20 generic curves ({resampled} draws resampled)"))
}

fn run_cli(args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_loctrop")).args(args).output().expect("binary runs");
    assert!(out.status.success(), "loctrop {args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}

fn criterion_11() -> Outcome {
    let example = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/truncated_series.json");
    let ideal = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/two_generators.json");
    let runs: Vec<Vec<&str>> = vec![
        vec!["tropvar", example, "--format", "json"],
        vec!["tropvar", example, "--format", "svg"],
        vec!["lgf", ideal, "--format", "json"],
        vec!["tropbasis", ideal, "--format", "json"],
        vec!["verify", example, "--suite", "all", "--seed", "7", "--samples", "50", "--format", "json"],
    ];
    for args in &runs {
        let a = run_cli(args);
        let b = run_cli(args);
        check(a == b, || format!("{args:?} is not byte-identical across runs"))?;
    }
    Ok(format!("{} artifacts byte-identical", runs.len()))
}

struct Report {
    failures: Vec<String>,
}

impl Report {
    fn record(&mut self, id: u32, name: &str, budget: Duration, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(d) if took > budget => Err(format!("{d}; over budget")),
            o => o,
        };
        let (status, detail) = match &outcome {
            Ok(d) => ("PASS", d.clone()),
            Err(e) => ("FAIL", e.clone()),
        };
        println!(
            "criterion {id:>2} {status} {name}: {detail} ({:.2}s, budget {}s)",
            took.as_secs_f64(),
            budget.as_secs()
        );
        if outcome.is_err() {
            self.failures.push(format!("criterion {id}"));
        }
    }
}

#[test]
fn acceptance() {
    let s = Duration::from_secs;
    let mut report = Report { failures: vec![] };
    report.record(1, "worked example reproduction", s(1), criterion_1);
    report.record(2, "staircase oracle suite", s(10), criterion_2);
    report.record(3, "characterization agreement", s(30), criterion_3);
    report.record(4, "tilde versus hat on boundary strata", s(10), criterion_4);
    report.record(5, "polynomial compatibility", s(30), criterion_5);
    let ideals = random_ideals();
    let mut fans = Vec::new();
    report.record(6, "local Groebner fan validity", s(600), || criterion_6(&ideals, &mut fans));
    if fans.len() == ideals.len() {
        report.record(7, "twin lemma on every facet", s(600), || criterion_7(&ideals, &fans));
        report.record(8, "subfan theorem", s(10), || criterion_8(&ideals, &fans));
        report.record(9, "tropical finite set", s(30), || criterion_9(&ideals, &fans));
    } else {
        for (id, name) in [(7, "twin lemma on every facet"), (8, "subfan theorem"), (9, "tropical finite set")] {
            println!("criterion {id:>2} FAIL {name}: fans from criterion 6 unavailable");
            report.failures.push(format!("criterion {id}"));
        }
    }
    report.record(10, "Newton polygon rays", s(10), criterion_10);
    report.record(11, "determinism", s(60), criterion_11);
    assert!(report.failures.is_empty(), "failed: {:?}", report.failures);
}
