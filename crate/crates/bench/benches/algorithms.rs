use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use loctrop_bench::{random_polynomials, random_supports, sample_series, space_curve};
use loctrop_core::algebra::{q, Stratum};
use loctrop_core::localgb::{local_groebner_fan, standard_basis, LgfOptions};
use loctrop_core::staircase::{hat_poly, minimal_staircase};
use loctrop_core::tropical::{local_trop_hypersurface, OriginSemantics};

fn staircases(c: &mut Criterion) {
    let mut group = c.benchmark_group("minimal_staircase");
    for size in [10, 100, 1000] {
        let sets = random_supports(3, size, 20, 1);
        group.bench_with_input(BenchmarkId::from_parameter(size), &sets, |b, sets| {
            b.iter(|| {
                for s in sets {
                    black_box(minimal_staircase(s));
                }
            })
        });
    }
    group.finish();
}

fn hypersurfaces(c: &mut Criterion) {
    let p = sample_series();
    c.bench_function("hat_poly/sample_all_strata", |b| {
        b.iter(|| {
            for z in [vec![], vec![0], vec![1]] {
                black_box(hat_poly(&p, &Stratum::from_zero_set(2, z)));
            }
        })
    });
    c.bench_function("trophyp/sample", |b| {
        b.iter(|| local_trop_hypersurface(black_box(&p), OriginSemantics::Definition).unwrap())
    });
    let trivariate = random_polynomials(3, 6, 8, 10, 2);
    c.bench_function("trophyp/random_trivariate", |b| {
        b.iter(|| {
            for f in &trivariate {
                black_box(local_trop_hypersurface(f, OriginSemantics::Definition).unwrap());
            }
        })
    });
}

fn groebner(c: &mut Criterion) {
    let gens = space_curve();
    let w = [q(1), q(2), q(1)];
    c.bench_function("standard_basis/space_curve", |b| b.iter(|| standard_basis(black_box(&gens), &w, 8)));
    let mut group = c.benchmark_group("local_groebner_fan");
    group.sample_size(10);
    group.bench_function("space_curve", |b| {
        b.iter(|| local_groebner_fan(black_box(&gens), &LgfOptions::default()).unwrap())
    });
    group.finish();
}

criterion_group!(benches, staircases, hypersurfaces, groebner);
criterion_main!(benches);
