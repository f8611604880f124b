//! Capped curve-level disk complex and curve complex.
//!
//! Vertices are curve classes on the Heegaard surface (isotopy on the
//! surface, not ambient isotopy), so the disk complex built here refines the
//! ambient one. Connectivity found here is certified; disconnection is only
//! claimed within the cap and up to the symmetries supplied to
//! [`quotient_by_symmetry`].

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rayon::prelude::*;

use crate::error::{GraphError, HandlebodyError};
use crate::handlebody::{enumerate_essential_curves, Color, CurveCap, HeegaardDiagram};
use crate::intersection::crossings_up_to;
use crate::surface::{canonical_triangulation, CurveClass, Step};

/// Sides a curve bounds a disk on.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Colors {
    pub red: bool,
    pub blue: bool,
}

impl Colors {
    pub const NONE: Colors = Colors { red: false, blue: false };

    pub fn has(&self, c: Color) -> bool {
        match c {
            Color::Red => self.red,
            Color::Blue => self.blue,
        }
    }

    pub fn is_empty(&self) -> bool {
        !self.red && !self.blue
    }

    pub fn both(&self) -> bool {
        self.red && self.blue
    }

    pub fn union(self, o: Colors) -> Colors {
        Colors { red: self.red || o.red, blue: self.blue || o.blue }
    }

    pub fn swapped(self) -> Colors {
        Colors { red: self.blue, blue: self.red }
    }

    /// Whether an edge may join vertices with these colors.
    fn pairs_with(&self, o: &Colors) -> bool {
        (self.red && o.blue) || (self.blue && o.red)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub curve: CurveClass,
    pub colors: Colors,
}

/// Undirected edge with `u <= v`; `u == v` is a self-loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    /// Geometric intersection number of the endpoint curves (0 or 1).
    pub i: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    /// Disk complex: vertices bound disks, edges join opposite sides.
    Gamma,
    /// Curve complex: all essential curves, edges for `i <= 1`.
    Lambda,
}

/// A capped curve graph. Vertices are sorted by curve class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveGraph {
    pub kind: GraphKind,
    pub genus: u32,
    pub cap: CurveCap,
    /// False when the enumeration budget ran out and the graph is partial.
    pub certified: bool,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

pub type DiskComplexGraph = CurveGraph;
pub type LambdaGraph = CurveGraph;

impl CurveGraph {
    pub fn vertex_index(&self, c: &CurveClass) -> Option<usize> {
        self.vertices.binary_search_by(|v| v.curve.cmp(c)).ok()
    }

    pub fn find_edge(&self, a: &CurveClass, b: &CurveClass) -> Option<Edge> {
        let (x, y) = (self.vertex_index(a)?, self.vertex_index(b)?);
        let (u, v) = (x.min(y), x.max(y));
        self.edges.iter().copied().find(|e| e.u == u && e.v == v)
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            adj[e.u].push(e.v);
            if e.u != e.v {
                adj[e.v].push(e.u);
            }
        }
        adj
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components_of(self.vertices.len(), &self.edges, |_| true)
    }

    /// Vertices that are not the endpoint of any edge.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        let mut touched = vec![false; self.vertices.len()];
        for e in &self.edges {
            touched[e.u] = true;
            touched[e.v] = true;
        }
        (0..self.vertices.len()).filter(|&i| !touched[i]).collect()
    }

    /// Components of the graph with isolated vertices removed.
    pub fn edge_components(&self) -> Vec<Vec<usize>> {
        let isolated: BTreeSet<usize> = self.isolated_vertices().into_iter().collect();
        components_of(self.vertices.len(), &self.edges, |i| !isolated.contains(&i))
    }

    /// Whether every vertex and edge of `self` appears in `other`, matched by
    /// curve class, with colors and intersection numbers preserved.
    pub fn embeds_in(&self, other: &CurveGraph) -> bool {
        let mut map = Vec::with_capacity(self.vertices.len());
        for v in &self.vertices {
            match other.vertex_index(&v.curve) {
                Some(j) if other.vertices[j].colors == v.colors || other.kind == GraphKind::Lambda => map.push(j),
                _ => return false,
            }
        }
        let theirs: BTreeSet<Edge> = other.edges.iter().copied().collect();
        self.edges.iter().all(|e| {
            let (a, b) = (map[e.u], map[e.v]);
            theirs.contains(&Edge { u: a.min(b), v: a.max(b), i: e.i })
        })
    }
}

fn components_of(n: usize, edges: &[Edge], keep: impl Fn(usize) -> bool) -> Vec<Vec<usize>> {
    let mut uf = crate::handlebody::UnionFind::new(n);
    for e in edges {
        uf.union(e.u, e.v);
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in (0..n).filter(|&i| keep(i)) {
        groups.entry(uf.find(i)).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort_by_key(|c| c[0]);
    out
}

struct Enumerated {
    curves: Vec<CurveClass>,
    colors: Vec<Colors>,
    certified: bool,
}

fn enumerate_colored(diagram: &HeegaardDiagram, cap: CurveCap, budget: u64) -> Result<Enumerated, GraphError> {
    let (curves, certified) = match enumerate_essential_curves(diagram.genus(), cap, budget) {
        Ok(all) => (all, true),
        Err(HandlebodyError::Budget { partial, .. }) => (partial, false),
        Err(e) => return Err(e.into()),
    };
    let tri = canonical_triangulation(diagram.genus())?;
    let cut_paths = |c: Color| -> Vec<Vec<Step>> { diagram.side(c).curves().iter().map(|k| k.path(&tri)).collect() };
    let (red, blue) = (cut_paths(Color::Red), cut_paths(Color::Blue));
    let colors = curves
        .par_iter()
        .map(|c| {
            let path = c.path(&tri);
            Colors {
                red: crate::handlebody::word_from_paths(&path, &red).is_trivial(),
                blue: crate::handlebody::word_from_paths(&path, &blue).is_trivial(),
            }
        })
        .collect();
    Ok(Enumerated { curves, colors, certified })
}

/// Intersection number of two curves, capped at 2 ("two or more").
fn capped_intersection(a: &CurveClass, b: &CurveClass, pa: &[Step], pb: &[Step]) -> u32 {
    if let (Some(s), Some(t)) = (a.slope(), b.slope()) {
        return s.determinant(&t).min(2) as u32;
    }
    crossings_up_to(pa, pb, 2).len() as u32
}

fn build(
    kind: GraphKind,
    genus: u32,
    cap: CurveCap,
    certified: bool,
    vertices: Vec<Vertex>,
    wanted: impl Fn(&Colors, &Colors) -> bool + Sync,
) -> Result<CurveGraph, GraphError> {
    let tri = canonical_triangulation(genus)?;
    let paths: Vec<Vec<Step>> = if genus == 1 {
        Vec::new()
    } else {
        vertices.par_iter().map(|v| v.curve.path(&tri)).collect()
    };
    let path = |i: usize| -> &[Step] { paths.get(i).map(|p| p.as_slice()).unwrap_or(&[]) };
    let edges: Vec<Edge> = (0..vertices.len())
        .into_par_iter()
        .flat_map_iter(|u| {
            let mut row = Vec::new();
            for v in u..vertices.len() {
                if !wanted(&vertices[u].colors, &vertices[v].colors) {
                    continue;
                }
                let i = if u == v {
                    0
                } else {
                    capped_intersection(&vertices[u].curve, &vertices[v].curve, path(u), path(v))
                };
                if i <= 1 {
                    row.push(Edge { u, v, i });
                }
            }
            row
        })
        .collect();
    Ok(CurveGraph { kind, genus, cap, certified, vertices, edges })
}

/// The disk complex within `cap`. Budget exhaustion yields a partial graph
/// with `certified == false`.
pub fn build_gamma(diagram: &HeegaardDiagram, cap: CurveCap, budget: u64) -> Result<DiskComplexGraph, GraphError> {
    let en = enumerate_colored(diagram, cap, budget)?;
    let vertices = en
        .curves
        .into_iter()
        .zip(en.colors)
        .filter(|(_, c)| !c.is_empty())
        .map(|(curve, colors)| Vertex { curve, colors })
        .collect();
    build(GraphKind::Gamma, diagram.genus(), cap, en.certified, vertices, Colors::pairs_with)
}

/// The curve complex within `cap`; vertex colors record disk-bounding sides.
/// Every vertex carries a self-loop (a curve is disjoint from a parallel copy).
pub fn build_lambda(diagram: &HeegaardDiagram, cap: CurveCap, budget: u64) -> Result<LambdaGraph, GraphError> {
    let en = enumerate_colored(diagram, cap, budget)?;
    let vertices = en.curves.into_iter().zip(en.colors).map(|(curve, colors)| Vertex { curve, colors }).collect();
    build(GraphKind::Lambda, diagram.genus(), cap, en.certified, vertices, |_, _| true)
}

/// A claim that is either witnessed or absent within a stated cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Finding<T> {
    Found(T),
    NoneWithin(CurveCap),
}

impl<T> Finding<T> {
    pub fn found(&self) -> Option<&T> {
        match self {
            Finding::Found(t) => Some(t),
            Finding::NoneWithin(_) => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Finding::Found(_))
    }

    fn from_option(o: Option<T>, cap: CurveCap) -> Self {
        o.map_or(Finding::NoneWithin(cap), Finding::Found)
    }
}

/// An edge named by its endpoint curves, red-capable end first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeWitness {
    pub red: CurveClass,
    pub blue: CurveClass,
    pub i: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalWitness {
    pub first: EdgeWitness,
    pub second: EdgeWitness,
    /// Indices into the isolated-vertex-stripped components.
    pub components: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationVerdict {
    pub has_red_disk: Finding<CurveClass>,
    pub has_blue_disk: Finding<CurveClass>,
    pub reducing_class: Finding<CurveClass>,
    pub edge_witness: Finding<EdgeWitness>,
    pub critical_witness: Finding<CriticalWitness>,
    /// Disks on both sides and no edge, within the cap.
    pub strongly_irreducible_within_cap: bool,
    pub isolated: Vec<CurveClass>,
    pub negative_claims_cap: CurveCap,
    pub certified: bool,
}

impl ClassificationVerdict {
    pub fn incompressible_within_cap(&self) -> bool {
        !self.has_red_disk.is_found() && !self.has_blue_disk.is_found()
    }
}

fn edge_witness(g: &CurveGraph, e: &Edge) -> EdgeWitness {
    let (a, b) = (&g.vertices[e.u], &g.vertices[e.v]);
    let (red, blue) = if a.colors.red && b.colors.blue { (a, b) } else { (b, a) };
    EdgeWitness { red: red.curve.clone(), blue: blue.curve.clone(), i: e.i }
}

/// Reads the verdict off a disk complex.
pub fn classify_graph(g: &DiskComplexGraph) -> ClassificationVerdict {
    let cap = g.cap;
    let first = |f: &dyn Fn(&Vertex) -> bool| g.vertices.iter().find(|v| f(v)).map(|v| v.curve.clone());
    let red = first(&|v| v.colors.red);
    let blue = first(&|v| v.colors.blue);
    let reducing = first(&|v| v.colors.both());
    let edge = g.edges.first().map(|e| edge_witness(g, e));
    let comps = g.edge_components();
    let critical = (comps.len() >= 2).then(|| {
        let first_edge = |c: &Vec<usize>| g.edges.iter().find(|e| c.binary_search(&e.u).is_ok()).unwrap();
        CriticalWitness {
            first: edge_witness(g, first_edge(&comps[0])),
            second: edge_witness(g, first_edge(&comps[1])),
            components: (0, 1),
        }
    });
    ClassificationVerdict {
        strongly_irreducible_within_cap: red.is_some() && blue.is_some() && edge.is_none(),
        has_red_disk: Finding::from_option(red, cap),
        has_blue_disk: Finding::from_option(blue, cap),
        reducing_class: Finding::from_option(reducing, cap),
        edge_witness: Finding::from_option(edge, cap),
        critical_witness: Finding::from_option(critical, cap),
        isolated: g.isolated_vertices().into_iter().map(|i| g.vertices[i].curve.clone()).collect(),
        negative_claims_cap: cap,
        certified: g.certified,
    }
}

pub fn classify(diagram: &HeegaardDiagram, cap: CurveCap, budget: u64) -> Result<ClassificationVerdict, GraphError> {
    Ok(classify_graph(&build_gamma(diagram, cap, budget)?))
}

/// A declared symmetry: a vertex permutation given by curve pairs (unlisted
/// vertices are fixed), optionally exchanging the two sides.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Symmetry {
    pub map: Vec<(CurveClass, CurveClass)>,
    pub swap_colors: bool,
}

fn permutation(g: &CurveGraph, s: &Symmetry, index: usize) -> Result<Vec<usize>, GraphError> {
    let bad = |reason: String| GraphError::NonInvariant { index, reason };
    let mut perm: Vec<usize> = (0..g.vertices.len()).collect();
    let mut moved = BTreeSet::new();
    for (a, b) in &s.map {
        let x = g.vertex_index(a).ok_or_else(|| bad(format!("{a} is not a vertex")))?;
        let y = g.vertex_index(b).ok_or_else(|| bad(format!("{b} is not a vertex")))?;
        if !moved.insert(x) {
            return Err(bad(format!("{a} is mapped twice")));
        }
        perm[x] = y;
    }
    let image: BTreeSet<usize> = perm.iter().copied().collect();
    if image.len() != perm.len() {
        return Err(bad("not a bijection of the vertex set".into()));
    }
    for (x, &y) in perm.iter().enumerate() {
        let c = g.vertices[x].colors;
        let c = if s.swap_colors { c.swapped() } else { c };
        if c != g.vertices[y].colors {
            return Err(bad(format!("{} -> {} does not preserve colors", g.vertices[x].curve, g.vertices[y].curve)));
        }
    }
    let edges: BTreeSet<Edge> = g.edges.iter().copied().collect();
    for e in &g.edges {
        let (a, b) = (perm[e.u], perm[e.v]);
        if !edges.contains(&Edge { u: a.min(b), v: a.max(b), i: e.i }) {
            return Err(bad(format!(
                "edge ({}, {}) has no image",
                g.vertices[e.u].curve, g.vertices[e.v].curve
            )));
        }
    }
    Ok(perm)
}

/// Orbit quotient. Each orbit is represented by its least curve, colors are
/// united over the orbit, and edges are kept as distinct `(u, v, i)` triples.
pub fn quotient_by_symmetry(g: &CurveGraph, symmetries: &[Symmetry]) -> Result<CurveGraph, GraphError> {
    let mut uf = crate::handlebody::UnionFind::new(g.vertices.len());
    for (k, s) in symmetries.iter().enumerate() {
        for (x, y) in permutation(g, s, k)?.into_iter().enumerate() {
            uf.union(x, y);
        }
    }
    let mut orbit_of: BTreeMap<usize, usize> = BTreeMap::new();
    let mut rep = Vec::with_capacity(g.vertices.len());
    let mut vertices: Vec<Vertex> = Vec::new();
    for (i, v) in g.vertices.iter().enumerate() {
        let root = uf.find(i);
        let slot = *orbit_of.entry(root).or_insert_with(|| {
            vertices.push(Vertex { curve: v.curve.clone(), colors: Colors::NONE });
            vertices.len() - 1
        });
        vertices[slot].colors = vertices[slot].colors.union(v.colors);
        rep.push(slot);
    }
    let edges: BTreeSet<Edge> = g
        .edges
        .iter()
        .map(|e| {
            let (a, b) = (rep[e.u], rep[e.v]);
            Edge { u: a.min(b), v: a.max(b), i: e.i }
        })
        .collect();
    Ok(CurveGraph { vertices, edges: edges.into_iter().collect(), ..g.clone() })
}

/// Some edge with intersection number 1 inside the given component.
pub fn find_destab_edge(g: &CurveGraph, component: &[usize]) -> Option<Edge> {
    let inside: BTreeSet<usize> = component.iter().copied().collect();
    g.edges.iter().copied().find(|e| e.i == 1 && inside.contains(&e.u))
}

/// A vertex distance in a capped graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CappedDistance {
    Exact(usize),
    /// No path inside the cap; the true distance is at least this.
    AtLeast(usize),
}

fn multi_source(g: &CurveGraph, sources: &[usize]) -> Vec<Option<usize>> {
    let adj = g.adjacency();
    let mut dist = vec![None; g.vertices.len()];
    let mut queue = VecDeque::new();
    for &s in sources {
        if dist[s].is_none() {
            dist[s] = Some(0);
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        let d = dist[x].unwrap();
        for &y in &adj[x] {
            if dist[y].is_none() {
                dist[y] = Some(d + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

/// BFS distances from one vertex to every vertex.
pub fn distances_from(g: &CurveGraph, source: &CurveClass) -> Result<Vec<Option<usize>>, GraphError> {
    let s = g.vertex_index(source).ok_or_else(|| GraphError::UnknownVertex(source.to_string()))?;
    Ok(multi_source(g, &[s]))
}

fn set_distance(g: &CurveGraph, from: &[usize], to: &[usize]) -> CappedDistance {
    let dist = multi_source(g, from);
    match to.iter().filter_map(|&t| dist[t]).min() {
        Some(d) => CappedDistance::Exact(d),
        // distance 0 and 1 are decided by curves already inside the cap
        None => CappedDistance::AtLeast(2),
    }
}

pub fn vertex_distance(g: &CurveGraph, a: &CurveClass, b: &CurveClass) -> Result<CappedDistance, GraphError> {
    let ia = g.vertex_index(a).ok_or_else(|| GraphError::UnknownVertex(a.to_string()))?;
    let ib = g.vertex_index(b).ok_or_else(|| GraphError::UnknownVertex(b.to_string()))?;
    Ok(set_distance(g, &[ia], &[ib]))
}

fn edge_ends(g: &CurveGraph, e: &(CurveClass, CurveClass)) -> Result<[usize; 2], GraphError> {
    let edge = g.find_edge(&e.0, &e.1).ok_or_else(|| GraphError::UnknownEdge(e.0.to_string(), e.1.to_string()))?;
    Ok([edge.u, edge.v])
}

/// Least endpoint-to-endpoint distance between two edges of `lambda`.
pub fn edge_distance(
    lambda: &LambdaGraph,
    e1: &(CurveClass, CurveClass),
    e2: &(CurveClass, CurveClass),
) -> Result<CappedDistance, GraphError> {
    Ok(set_distance(lambda, &edge_ends(lambda, e1)?, &edge_ends(lambda, e2)?))
}

/// Least edge distance between two edge sets of `lambda`.
pub fn component_distance(
    lambda: &LambdaGraph,
    c1: &[(CurveClass, CurveClass)],
    c2: &[(CurveClass, CurveClass)],
) -> Result<CappedDistance, GraphError> {
    let ends = |c: &[(CurveClass, CurveClass)]| -> Result<Vec<usize>, GraphError> {
        let mut out = Vec::new();
        for e in c {
            out.extend(edge_ends(lambda, e)?);
        }
        Ok(out)
    };
    Ok(set_distance(lambda, &ends(c1)?, &ends(c2)?))
}

/// Edges of one component of a disk complex, by curve.
pub fn component_edges(g: &DiskComplexGraph, component: &[usize]) -> Vec<(CurveClass, CurveClass)> {
    let inside: BTreeSet<usize> = component.iter().copied().collect();
    g.edges
        .iter()
        .filter(|e| inside.contains(&e.u))
        .map(|e| (g.vertices[e.u].curve.clone(), g.vertices[e.v].curve.clone()))
        .collect()
}

/// Component indices and the distance between them.
pub type PairDistance = ((usize, usize), CappedDistance);

/// Distances between every pair of edge components of a disk complex,
/// measured in the curve complex.
pub fn splitting_distances(
    gamma: &DiskComplexGraph,
    lambda: &LambdaGraph,
) -> Result<Vec<PairDistance>, GraphError> {
    let comps: Vec<Vec<(CurveClass, CurveClass)>> =
        gamma.edge_components().iter().map(|c| component_edges(gamma, c)).collect();
    let mut out = Vec::new();
    for a in 0..comps.len() {
        for b in a + 1..comps.len() {
            out.push(((a, b), component_distance(lambda, &comps[a], &comps[b])?));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::handlebody::DEFAULT_BUDGET;
    use crate::surface::Slope;

    fn slope(p: i64, q: i64) -> CurveClass {
        CurveClass::from_slope(Slope::new(p, q).unwrap())
    }

    fn gamma(d: &HeegaardDiagram) -> CurveGraph {
        build_gamma(d, CurveCap::SlopeBox(12), DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn s3_gamma() {
        let g = gamma(&HeegaardDiagram::s3_genus_one());
        assert_eq!(g.vertices.len(), 2);
        assert_eq!(g.edges, vec![Edge { u: 0, v: 1, i: 1 }]);
        assert_eq!(g.components().len(), 1);
        assert!(g.isolated_vertices().is_empty());
        let v = classify_graph(&g);
        assert_eq!(v.edge_witness.found().unwrap().red, slope(1, 0));
        assert!(!v.reducing_class.is_found());
        let comp = &g.components()[0];
        assert_eq!(find_destab_edge(&g, comp), Some(Edge { u: 0, v: 1, i: 1 }));
    }

    #[test]
    fn lens_spaces_are_strongly_irreducible_within_cap() {
        for p in 2..=7 {
            let g = gamma(&HeegaardDiagram::lens_space(p).unwrap());
            assert_eq!(g.vertices.len(), 2);
            assert!(g.edges.is_empty());
            assert_eq!(g.isolated_vertices().len(), 2);
            assert!(classify_graph(&g).strongly_irreducible_within_cap);
            assert!(find_destab_edge(&g, &g.components()[0]).is_none());
        }
    }

    #[test]
    fn s2xs1_reducing() {
        let g = gamma(&HeegaardDiagram::lens_space(0).unwrap());
        assert_eq!(g.vertices.len(), 1);
        assert_eq!(g.edges, vec![Edge { u: 0, v: 0, i: 0 }]);
        assert_eq!(classify_graph(&g).reducing_class, Finding::Found(slope(1, 0)));
        assert!(find_destab_edge(&g, &[0]).is_none());
    }

    #[test]
    fn quotient_of_s3() {
        let g = gamma(&HeegaardDiagram::s3_genus_one());
        let swap = Symmetry { map: vec![(slope(1, 0), slope(0, 1)), (slope(0, 1), slope(1, 0))], swap_colors: true };
        let q = quotient_by_symmetry(&g, &[swap]).unwrap();
        assert_eq!(q.vertices.len(), 1);
        assert!(q.vertices[0].colors.both());
        assert_eq!(q.edges, vec![Edge { u: 0, v: 0, i: 1 }]);
        assert_eq!(quotient_by_symmetry(&g, &[Symmetry::default()]).unwrap(), g);
        let broken = Symmetry { map: vec![(slope(1, 0), slope(0, 1)), (slope(0, 1), slope(1, 0))], swap_colors: false };
        assert!(matches!(quotient_by_symmetry(&g, &[broken]), Err(GraphError::NonInvariant { .. })));
    }

    #[test]
    fn farey_fragment() {
        let d = HeegaardDiagram::s3_genus_one();
        let l = build_lambda(&d, CurveCap::SlopeBox(3), DEFAULT_BUDGET).unwrap();
        for e in &l.edges {
            let (a, b) = (l.vertices[e.u].curve.slope().unwrap(), l.vertices[e.v].curve.slope().unwrap());
            assert!(a.determinant(&b) <= 1);
        }
        let g = gamma(&d);
        assert!(g.embeds_in(&build_lambda(&d, CurveCap::SlopeBox(12), DEFAULT_BUDGET).unwrap()));
        assert_eq!(vertex_distance(&l, &slope(1, 0), &slope(0, 1)).unwrap(), CappedDistance::Exact(1));
        let e1 = (slope(1, 0), slope(0, 1));
        let e2 = (slope(1, 0), slope(1, 1));
        assert_eq!(edge_distance(&l, &e1, &e2).unwrap(), CappedDistance::Exact(0));
    }
}
