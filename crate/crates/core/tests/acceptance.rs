//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

mod common;

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use common::{bfs_from_json, free_reduce, normal_position_word};
use heegaard_core::disk_complex::{distances_from, GraphKind};
use heegaard_core::ghs::apply_tracked;
use heegaard_core::handlebody::{bounds_disk, DEFAULT_BUDGET};
use heegaard_core::intersection::linking_intersection;
use heegaard_core::properties::{commute, random_commuting_pair, random_move, random_slope, rng, Commutation};
use heegaard_core::report::graph_json;
use heegaard_core::sog::verify_single_maximal;
use heegaard_core::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn complexity() -> Outcome {
    for g in 0..=10u32 {
        let c = SurfaceCollection::new(vec![g]).complexity();
        ensure(c == 4 * (g as u64).pow(2), || format!("c([{g}]) = {c}"))?;
    }
    ensure(SurfaceCollection::new(vec![3]).complexity() == 36, || "c([3])".into())?;
    ensure(SurfaceCollection::new(vec![2, 2]).complexity() == 32, || "c([2,2])".into())?;
    let split = Ghs::from_genera(&[&[], &[2], &[1], &[2], &[]]).unwrap();
    let whole = Ghs::from_genera(&[&[], &[3], &[]]).unwrap();
    ensure(ghs_key(&split) == vec![16, 16] && ghs_key(&whole) == vec![36], || "keys".into())?;
    ensure(compare_ghs(&split, &whole) == Ordering::Less, || "[16,16] not below [36]".into())?;
    Ok("c([g]) = 4g^2 for g <= 10; [16,16] < [36]".into())
}

fn torus_intersection() -> Outcome {
    let start = Instant::now();
    let mut r = rng(20);
    for _ in 0..200 {
        let (s, t) = (random_slope(&mut r, 50), random_slope(&mut r, 50));
        let (a, b) = (CurveClass::from_slope(s), CurveClass::from_slope(t));
        let want = s.determinant(&t);
        let fast = geometric_intersection(&a, &b).unwrap() as u64;
        let generic = linking_intersection(&a, &b).unwrap() as u64;
        ensure(fast == want && generic == want, || format!("{s} vs {t}: {fast}, {generic}, expected {want}"))?;
    }
    within(start, Duration::from_secs(1))?;
    Ok(format!("200 pairs in {:?}", start.elapsed()))
}

fn genus_one_table() -> Outcome {
    let start = Instant::now();
    let cap = CurveCap::for_genus(1, 12);
    let s3 = classify(&HeegaardDiagram::s3_genus_one(), cap, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    ensure(s3.certified && s3.edge_witness.found().is_some_and(|w| w.i == 1), || format!("S3: {s3:?}"))?;
    for p in 2..=7 {
        let d = HeegaardDiagram::lens_space(p).unwrap();
        let v = classify(&d, cap, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        let g = build_gamma(&d, cap, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        ensure(
            v.certified
                && v.has_red_disk.is_found()
                && v.has_blue_disk.is_found()
                && g.edges.is_empty()
                && v.strongly_irreducible_within_cap,
            || format!("L({p},1): {v:?}"),
        )?;
    }
    let s2s1 = classify(&HeegaardDiagram::lens_space(0).unwrap(), cap, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let want = CurveClass::from_slope(Slope::new(1, 0).unwrap());
    ensure(s2s1.reducing_class.found() == Some(&want), || format!("S2xS1: {s2s1:?}"))?;
    within(start, Duration::from_secs(5))?;
    Ok(format!("S3 edge i=1, L(2..7,1) edgeless, S2xS1 reducing (1,0), {:?}", start.elapsed()))
}

fn s3_quotient() -> Outcome {
    let g = build_gamma(&HeegaardDiagram::s3_genus_one(), CurveCap::for_genus(1, 12), DEFAULT_BUDGET)
        .map_err(|e| e.to_string())?;
    let (m, l) = (CurveClass::from_slope(Slope::new(1, 0).unwrap()), CurveClass::from_slope(Slope::new(0, 1).unwrap()));
    let swap = Symmetry { map: vec![(m.clone(), l.clone()), (l, m)], swap_colors: true };
    let q = quotient_by_symmetry(&g, &[swap]).map_err(|e| e.to_string())?;
    ensure(q.vertices.len() == 1, || format!("{} vertices", q.vertices.len()))?;
    ensure(q.edges.len() == 1 && q.edges[0].u == 0 && q.edges[0].v == 0, || format!("edges {:?}", q.edges))?;
    Ok("1 vertex, 1 self-loop".into())
}

fn farey_distances() -> Outcome {
    let start = Instant::now();
    let g = build_lambda(&HeegaardDiagram::s3_genus_one(), CurveCap::SlopeBox(34), DEFAULT_BUDGET)
        .map_err(|e| e.to_string())?;
    ensure(g.certified && g.kind == GraphKind::Lambda, || "uncertified graph".into())?;
    let doc = graph_json(&g);
    let origin = CurveClass::from_slope(Slope::new(1, 0).unwrap());
    let src = doc["vertices"]
        .as_array()
        .unwrap()
        .iter()
        .position(|v| v["coords"] == serde_json::json!(origin.coords()))
        .ok_or("(1,0) missing from JSON")?;
    let oracle = bfs_from_json(&doc, src);
    let ours = distances_from(&g, &origin).map_err(|e| e.to_string())?;
    let mut r = rng(34);
    for _ in 0..20 {
        let s = random_slope(&mut r, 34);
        let c = CurveClass::from_slope(s);
        let i = g.vertex_index(&c).ok_or_else(|| format!("{s} missing"))?;
        let j = doc["vertices"].as_array().unwrap().iter().position(|v| v["coords"] == serde_json::json!(c.coords()));
        ensure(j == Some(i), || format!("{s}: JSON index {j:?} vs {i}"))?;
        ensure(ours[i] == oracle[i] && ours[i].is_some(), || format!("{s}: {:?} vs {:?}", ours[i], oracle[i]))?;
    }
    let l = g.vertex_index(&CurveClass::from_slope(Slope::new(0, 1).unwrap())).unwrap();
    ensure(ours[l] == Some(1), || format!("d((1,0),(0,1)) = {:?}", ours[l]))?;
    within(start, Duration::from_secs(30))?;
    Ok(format!("{} vertices, {} edges, {:?}", g.vertices.len(), g.edges.len(), start.elapsed()))
}

fn monotonicity() -> Outcome {
    let mut r = rng(1000);
    for _ in 0..1000 {
        let (g, m) = random_move(&mut r);
        let out = apply_move(&g, &m).map_err(|e| format!("{g}: {e}"))?;
        ensure(Ghs::new(out.levels().to_vec()).is_ok(), || format!("{out} invalid"))?;
        ensure(compare_ghs(&out, &g) == Ordering::Less, || format!("{g} -> {out}"))?;
    }
    Ok("1000 moves, zero violations".into())
}

fn case_matrix() -> Outcome {
    let text = include_str!("fixtures/case_matrix.json");
    let cases: Vec<serde_json::Value> = serde_json::from_str(text).unwrap();
    ensure(cases.len() == 8, || format!("{} fixtures", cases.len()))?;
    for c in &cases {
        let input: Ghs = serde_json::from_value(c["input"].clone()).map_err(|e| e.to_string())?;
        let mv: Move = serde_json::from_value(c["move"].clone()).map_err(|e| e.to_string())?;
        let a = apply_tracked(&input, &mv).map_err(|e| format!("{}: {e}", c["case"]))?;
        let (case, json) = (a.case.to_string(), a.ghs.to_json());
        ensure(case == c["case"] && json == c["expected"], || format!("{}: got {case} {json}", c["case"]))?;
    }
    Ok("1a..1d, 2a..2d byte-exact".into())
}

fn commutation() -> Outcome {
    let mut r = rng(500);
    for _ in 0..500 {
        let (g, m1, m2) = random_commuting_pair(&mut r);
        if let Commutation::Disagree(s) = commute(&g, &m1, &m2) {
            return Err(s);
        }
    }
    Ok("500 pairs agree".into())
}

fn flattening() -> Outcome {
    let start = Instant::now();
    let examples = [
        (r#"{"splittings":{"2":["P","Q"],"3":["R"]},"stabilize":{"P":"R","Q":"R"}}"#, vec![vec![36]]),
        (
            r#"{"splittings":{"2":["P","Q"],"3":["R","S"],"4":["T"]},"stabilize":{"P":"R","Q":"S","R":"T","S":"T"}}"#,
            vec![vec![64]],
        ),
    ];
    for (text, want) in examples {
        let o = InventoryOracle::from_json(text).map_err(|e| e.to_string())?;
        let sog = flatten(&o, &"P".to_string(), &"Q".to_string(), 10_000).map_err(|e| e.to_string())?;
        sog.verify().map_err(|e| e.to_string())?;
        let key = max_key(&sog);
        ensure(key == want && verify_single_maximal(&sog), || format!("MaxKey {key:?}"))?;
    }
    within(start, Duration::from_secs(5))?;
    Ok("[[36]] and [[64]], one maximum each".into())
}

fn genus_two_disks() -> Outcome {
    let d = HeegaardDiagram::standard(2).unwrap();
    let cut = d.side(Color::Red);
    let cut_coords: Vec<Vec<u32>> = cut.curves().iter().map(|c| c.coords().to_vec()).collect();
    for c in cut.curves() {
        ensure(bounds_disk(c, Color::Red, &d).unwrap(), || format!("{c} should bound"))?;
        let w = free_reduce(&normal_position_word(2, c.coords(), &cut_coords));
        ensure(w.is_empty(), || format!("oracle word for {c}: {w:?}"))?;
    }
    let comm = CurveClass::new(2, vec![2, 2, 2, 2, 0, 2, 4, 2, 2]).unwrap();
    ensure(!bounds_disk(&comm, Color::Red, &d).unwrap(), || "commutator curve bounds".into())?;
    let w = free_reduce(&normal_position_word(2, comm.coords(), &cut_coords));
    ensure(w.len() == 4, || format!("oracle word {w:?}"))?;
    Ok("cut curves bound, commutator curve does not".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("complexity", complexity),
        ("torus intersection", torus_intersection),
        ("genus-one classification", genus_one_table),
        ("S3 quotient", s3_quotient),
        ("Farey distances", farey_distances),
        ("move monotonicity", monotonicity),
        ("case matrix", case_matrix),
        ("commutation", commutation),
        ("flattening", flattening),
        ("genus-two disk test", genus_two_disks),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", n + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", n + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
