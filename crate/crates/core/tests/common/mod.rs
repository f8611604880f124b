//! Test-only oracles, written independently of the library's algorithms.

#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use heegaard_core::surface::canonical_triangulation;

/// Free and cyclic reduction of `(generator, exponent sign)` letters.
pub fn free_reduce(word: &[(usize, i8)]) -> Vec<(usize, i8)> {
    let mut out: Vec<(usize, i8)> = Vec::new();
    for &(g, s) in word {
        match out.last() {
            Some(&(h, t)) if h == g && t == -s => {
                out.pop();
            }
            _ => out.push((g, s)),
        }
    }
    while out.len() >= 2 {
        let (f, l) = (out[0], out[out.len() - 1]);
        if f.0 == l.0 && f.1 == -l.1 {
            out.remove(0);
            out.pop();
        } else {
            break;
        }
    }
    out
}

#[derive(Clone, Copy)]
struct Arc {
    tri: usize,
    ends: [(usize, u32); 2], // (side, ccw index)
}

fn arcs(tris: &[[heegaard_core::surface::Side; 3]], w: &[u32]) -> Vec<Arc> {
    let mut out = Vec::new();
    for (t, sides) in tris.iter().enumerate() {
        let x = sides.map(|s| w[s.edge]);
        for k in 0..3 {
            let k1 = (k + 1) % 3;
            let corner = (x[k] + x[k1] - x[(k + 2) % 3]) / 2;
            for j in 0..corner {
                out.push(Arc { tri: t, ends: [(k, x[k] - 1 - j), (k1, j)] });
            }
        }
    }
    out
}

type Pt = (f64, f64);

const CORNERS: [Pt; 3] = [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)];

/// Builds the signed crossing word of curve `c` against the disjoint cut
/// curves, by drawing everything as straight segments inside triangles.
/// The representative is normal, not necessarily minimal.
pub fn normal_position_word(genus: u32, c: &[u32], cuts: &[Vec<u32>]) -> Vec<(usize, i8)> {
    let tri = canonical_triangulation(genus).unwrap();
    let tris = tri.triangles().to_vec();
    let ne = tri.edge_count();
    let mut ww = vec![0u32; ne];
    for k in cuts {
        for e in 0..ne {
            ww[e] += k[e];
        }
    }
    let position = |t: usize, side: usize, idx: u32, is_cut: bool| -> Pt {
        let s = tris[t][side];
        let (nw, nc) = (ww[s.edge], c[s.edge]);
        let own = if is_cut { nw } else { nc };
        let p = if s.forward { idx } else { own - 1 - idx };
        let slot = if is_cut { p + 1 } else { nw + p + 1 };
        let mut u = slot as f64 / (nw + nc + 1) as f64;
        if !s.forward {
            u = 1.0 - u;
        }
        let (a, b) = (CORNERS[side], CORNERS[(side + 1) % 3]);
        (a.0 + u * (b.0 - a.0), a.1 + u * (b.1 - a.1))
    };
    // point key on an edge: (edge, forward index)
    let key = |t: usize, side: usize, idx: u32, w: &[u32]| -> (usize, u32) {
        let s = tris[t][side];
        (s.edge, if s.forward { idx } else { w[s.edge] - 1 - idx })
    };

    // walks every component, returning directed arcs (arc index, from end)
    let walk = |w: &[u32], list: &[Arc]| -> Vec<Vec<(usize, usize)>> {
        let mut at: HashMap<(usize, u32), Vec<(usize, usize)>> = HashMap::new();
        for (i, a) in list.iter().enumerate() {
            for e in 0..2 {
                at.entry(key(a.tri, a.ends[e].0, a.ends[e].1, w)).or_default().push((i, e));
            }
        }
        let mut seen = vec![false; list.len()];
        let mut comps = Vec::new();
        for start in 0..list.len() {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let (mut cur, mut from) = (start, 0usize);
            while !seen[cur] {
                seen[cur] = true;
                comp.push((cur, from));
                let a = list[cur];
                let out_end = a.ends[1 - from];
                let k = key(a.tri, out_end.0, out_end.1, w);
                let &(nxt, e) = at[&k].iter().find(|&&(i, _)| i != cur).expect("two arcs per point");
                cur = nxt;
                from = e;
            }
            comps.push(comp);
        }
        comps
    };

    let cut_arcs = arcs(&tris, &ww);
    let mut cut_dir: Vec<(usize, usize)> = vec![(0, 0); cut_arcs.len()];
    for comp in walk(&ww, &cut_arcs) {
        let mut counts = vec![0u32; ne];
        for &(i, from) in &comp {
            let a = cut_arcs[i];
            let (s, idx) = a.ends[1 - from];
            counts[key(a.tri, s, idx, &ww).0] += 1;
        }
        let which = cuts.iter().position(|k| *k == counts).expect("component matches a cut curve");
        for &(i, from) in &comp {
            cut_dir[i] = (which, from);
        }
    }

    let c_arcs = arcs(&tris, c);
    let comps = walk(c, &c_arcs);
    assert_eq!(comps.len(), 1, "curve must be connected");
    let mut word = Vec::new();
    for &(i, from) in &comps[0] {
        let a = c_arcs[i];
        let p = position(a.tri, a.ends[from].0, a.ends[from].1, false);
        let q = position(a.tri, a.ends[1 - from].0, a.ends[1 - from].1, false);
        let mut hits: Vec<(f64, usize, i8)> = Vec::new();
        for (j, b) in cut_arcs.iter().enumerate() {
            if b.tri != a.tri {
                continue;
            }
            let (which, bf) = cut_dir[j];
            let r = position(b.tri, b.ends[bf].0, b.ends[bf].1, true);
            let s = position(b.tri, b.ends[1 - bf].0, b.ends[1 - bf].1, true);
            if let Some((t, sign)) = segment_cross(p, q, r, s) {
                hits.push((t, which, sign));
            }
        }
        hits.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
        word.extend(hits.into_iter().map(|(_, w, s)| (w, s)));
    }
    word
}

fn cross(a: Pt, b: Pt) -> f64 {
    a.0 * b.1 - a.1 * b.0
}

fn segment_cross(p: Pt, q: Pt, r: Pt, s: Pt) -> Option<(f64, i8)> {
    let d1 = (q.0 - p.0, q.1 - p.1);
    let d2 = (s.0 - r.0, s.1 - r.1);
    let den = cross(d1, d2);
    if den.abs() < 1e-15 {
        return None;
    }
    let rp = (r.0 - p.0, r.1 - p.1);
    let t = cross(rp, d2) / den;
    let u = cross(rp, d1) / den;
    if t > 0.0 && t < 1.0 && u > 0.0 && u < 1.0 {
        Some((t, if den > 0.0 { 1 } else { -1 }))
    } else {
        None
    }
}

/// Breadth-first distances over an adjacency list built from a JSON graph
/// document with `vertices` and `edges: [{u, v, ...}]`.
pub fn bfs_from_json(doc: &serde_json::Value, source: usize) -> Vec<Option<usize>> {
    let n = doc["vertices"].as_array().unwrap().len();
    let mut adj = vec![Vec::new(); n];
    for e in doc["edges"].as_array().unwrap() {
        let (u, v) = (e["u"].as_u64().unwrap() as usize, e["v"].as_u64().unwrap() as usize);
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut dist = vec![None; n];
    dist[source] = Some(0);
    let mut q = VecDeque::from([source]);
    while let Some(x) = q.pop_front() {
        let d = dist[x].unwrap();
        for &y in &adj[x] {
            if dist[y].is_none() {
                dist[y] = Some(d + 1);
                q.push_back(y);
            }
        }
    }
    dist
}
