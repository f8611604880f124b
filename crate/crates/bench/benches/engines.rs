use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use heegaard_core::handlebody::{enumerate_essential_curves, DEFAULT_BUDGET};
use heegaard_core::intersection::linking_intersection;
use heegaard_core::*;

fn intersection(c: &mut Criterion) {
    let a = CurveClass::from_slope(Slope::new(34, 21).unwrap());
    let b = CurveClass::from_slope(Slope::new(-13, 29).unwrap());
    c.bench_function("torus determinant", |bch| bch.iter(|| geometric_intersection(black_box(&a), black_box(&b))));
    c.bench_function("torus linking", |bch| bch.iter(|| linking_intersection(black_box(&a), black_box(&b))));
    let curves = enumerate_essential_curves(2, CurveCap::CoordinateSum(12), DEFAULT_BUDGET).unwrap();
    let (x, y) = (&curves[curves.len() / 3], &curves[2 * curves.len() / 3]);
    c.bench_function("genus 2 linking", |bch| bch.iter(|| geometric_intersection(black_box(x), black_box(y))));
}

fn graphs(c: &mut Criterion) {
    let mut g = c.benchmark_group("graphs");
    g.sample_size(10);
    let s3 = HeegaardDiagram::s3_genus_one();
    g.bench_function("lambda torus box 20", |bch| {
        bch.iter(|| build_lambda(&s3, CurveCap::SlopeBox(20), DEFAULT_BUDGET).unwrap())
    });
    let d = HeegaardDiagram::standard(2).unwrap();
    g.bench_function("gamma genus 2 sum 10", |bch| {
        bch.iter(|| build_gamma(&d, CurveCap::CoordinateSum(10), DEFAULT_BUDGET).unwrap())
    });
    g.finish();
}

fn flattening(c: &mut Criterion) {
    let o = InventoryOracle::from_json(
        r#"{"splittings":{"2":["P","Q"],"3":["R","S"],"4":["T"]},"stabilize":{"P":"R","Q":"S","R":"T","S":"T"}}"#,
    )
    .unwrap();
    let (p, q) = ("P".to_string(), "Q".to_string());
    c.bench_function("flatten inventory", |bch| bch.iter(|| flatten(&o, &p, &q, 10_000).unwrap()));
    let symbolic = SymbolicOracle { max_genus: 4, max_levels: 7 };
    let (hi, lo) = (Ghs::splitting(3).unwrap(), Ghs::splitting(1).unwrap());
    c.bench_function("flatten symbolic 3 to 1", |bch| bch.iter(|| flatten(&symbolic, &hi, &lo, 200_000).unwrap()));
}

criterion_group!(benches, intersection, graphs, flattening);
criterion_main!(benches);
