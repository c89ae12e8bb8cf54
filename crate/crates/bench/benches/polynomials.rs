use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use flowroots::audit::{audit_graph, AuditConfig};
use flowroots::flow::{chromatic_poly, flow_poly, flow_poly_naive};
use flowroots::graph::canonical_code;
use flowroots::graph::families::{complete, cube, h_s, petersen, prism};
use flowroots::poly::{root_profile, ten_pow_neg};
use flowroots::search::{enumerate_connected, EnumBounds};

fn flow(c: &mut Criterion) {
    let mut g = c.benchmark_group("flow_poly");
    for (name, graph) in [
        ("k4", complete(4)),
        ("prism", prism()),
        ("cube", cube()),
        ("petersen", petersen()),
    ] {
        g.bench_function(name, |b| b.iter(|| flow_poly(black_box(&graph))));
    }
    let p = prism();
    g.bench_function("prism_naive", |b| b.iter(|| flow_poly_naive(black_box(&p))));
    g.finish();
}

fn chromatic(c: &mut Criterion) {
    let h7 = h_s(7);
    c.bench_function("chromatic_h7", |b| {
        b.iter(|| chromatic_poly(black_box(&h7)))
    });
}

fn canonical(c: &mut Criterion) {
    let p = petersen();
    c.bench_function("canonical_code_petersen", |b| {
        b.iter(|| canonical_code(black_box(&p)))
    });
}

fn roots_and_audit(c: &mut Criterion) {
    let f = flow_poly(&petersen());
    let tol = ten_pow_neg(12);
    c.bench_function("root_profile_petersen", |b| {
        b.iter(|| root_profile(black_box(&f), &tol))
    });
    let cfg = AuditConfig::default();
    let g = cube();
    c.bench_function("audit_cube", |b| {
        b.iter(|| audit_graph(black_box(&g), None, &cfg))
    });
}

fn enumeration(c: &mut Criterion) {
    let bounds = EnumBounds {
        max_vertices: 4,
        max_edges: 8,
        max_multiplicity: 3,
    };
    let mut g = c.benchmark_group("enumerate");
    g.sample_size(10);
    g.bench_function("n4_m8_k3", |b| {
        b.iter(|| enumerate_connected(black_box(&bounds), 1e8))
    });
    g.finish();
}

criterion_group!(
    benches,
    flow,
    chromatic,
    canonical,
    roots_and_audit,
    enumeration
);
criterion_main!(benches);
