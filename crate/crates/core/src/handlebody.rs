//! Heegaard diagrams: cut systems, boundary words and the disk test.
//!
//! Each side of a diagram is a handlebody whose fundamental group is free on
//! the meridian disks of its cut system. Reading the signed crossings of a
//! curve with the cut curves gives its conjugacy class there; by Dehn's
//! lemma a simple closed curve bounds a disk exactly when that word reduces
//! to the empty cyclic word.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{HandlebodyError, SurfaceError};
use crate::intersection::{geometric_intersection, ordered_crossings};
use crate::surface::{canonical_triangulation, CurveClass, Slope, Step, Triangulation};

/// Which side of the Heegaard surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

/// Finite window of curves considered by enumeration.
///
/// On the torus the natural window is a box on slopes; elsewhere it bounds
/// the sum of normal coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveCap {
    CoordinateSum(u32),
    SlopeBox(u32),
}

impl CurveCap {
    /// The default reading of a bare `--cap N` at the given genus.
    pub fn for_genus(genus: u32, n: u32) -> CurveCap {
        if genus == 1 {
            CurveCap::SlopeBox(n)
        } else {
            CurveCap::CoordinateSum(n)
        }
    }

    pub fn value(&self) -> u32 {
        match *self {
            CurveCap::CoordinateSum(n) | CurveCap::SlopeBox(n) => n,
        }
    }

    pub fn contains(&self, c: &CurveClass) -> bool {
        match *self {
            CurveCap::CoordinateSum(n) => c.coordinate_sum() <= n as u64,
            CurveCap::SlopeBox(n) => c
                .slope()
                .is_some_and(|s| s.p().unsigned_abs() <= n as u64 && s.q().unsigned_abs() <= n as u64),
        }
    }

    /// Whether every curve inside `self` is inside `other`.
    pub fn within(&self, other: &CurveCap) -> bool {
        match (self, other) {
            (CurveCap::CoordinateSum(a), CurveCap::CoordinateSum(b)) | (CurveCap::SlopeBox(a), CurveCap::SlopeBox(b)) => {
                a <= b
            }
            _ => false,
        }
    }
}

impl fmt::Display for CurveCap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveCap::CoordinateSum(n) => write!(f, "coordinate sum <= {n}"),
            CurveCap::SlopeBox(n) => write!(f, "|p|,|q| <= {n}"),
        }
    }
}

/// `g` disjoint curves cutting a genus-`g` surface into a planar piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutSystem {
    genus: u32,
    curves: Vec<CurveClass>,
}

impl CutSystem {
    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn curves(&self) -> &[CurveClass] {
        &self.curves
    }
}

/// Number of connected pieces of the closed surface cut along the normal
/// multicurve `coords`.
pub fn complement_components(tri: &Triangulation, coords: &[u32]) -> Result<usize, SurfaceError> {
    tri.check_matching(coords)?;
    // region ids per triangle: corner k layer r, then the central region
    let mut base = Vec::with_capacity(tri.triangle_count());
    let mut corners = Vec::with_capacity(tri.triangle_count());
    let mut total = 0usize;
    for t in tri.triangles() {
        let x = t.map(|s| coords[s.edge]);
        let c = [0, 1, 2].map(|k| ((x[k] + x[(k + 1) % 3] - x[(k + 2) % 3]) / 2) as usize);
        base.push(total);
        corners.push((x, c));
        total += 1 + c.iter().sum::<usize>();
    }
    let region = |t: usize, k: usize, r: usize| -> usize {
        let (_, c) = corners[t];
        if r >= c[k] {
            return base[t] + c.iter().sum::<usize>();
        }
        base[t] + c[..k].iter().sum::<usize>() + r
    };
    // region touching side k of triangle t at counter-clockwise segment s
    let segment_region = |t: usize, k: usize, s: usize| -> usize {
        let (x, c) = corners[t];
        let before = c[(k + 2) % 3];
        if s <= before {
            region(t, (k + 2) % 3, s)
        } else {
            region(t, k, x[k] as usize - s)
        }
    };

    let mut uf = UnionFind::new(total);
    let mut tip = None;
    for t in 0..tri.triangle_count() {
        for k in 0..3 {
            let r = region(t, k, 0);
            match tip {
                None => tip = Some(r),
                Some(first) => uf.union(first, r),
            }
        }
    }
    for (edge, &w) in coords.iter().enumerate().take(tri.edge_count()) {
        let w = w as usize;
        let (t1, s1) = tri.occurrence(edge, true);
        let (t2, s2) = tri.occurrence(edge, false);
        for seg in 0..=w {
            uf.union(segment_region(t1, s1, seg), segment_region(t2, s2, w - seg));
        }
    }
    Ok(uf.count())
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    pub(crate) fn count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}

pub fn validate_cut_system(genus: u32, curves: Vec<CurveClass>) -> Result<CutSystem, HandlebodyError> {
    let tri = canonical_triangulation(genus)?;
    if curves.len() != genus as usize {
        return Err(HandlebodyError::CurveCount { genus, got: curves.len() });
    }
    for c in &curves {
        if c.genus() != genus {
            return Err(SurfaceError::GenusMismatch(genus, c.genus()).into());
        }
    }
    for i in 0..curves.len() {
        for j in i + 1..curves.len() {
            let n = geometric_intersection(&curves[i], &curves[j])?;
            if n != 0 {
                return Err(HandlebodyError::Intersecting(i, j, n));
            }
        }
    }
    let mut union = vec![0u32; tri.edge_count()];
    for c in &curves {
        for (u, w) in union.iter_mut().zip(c.coords()) {
            *u += w;
        }
    }
    let mut traced: Vec<Vec<u32>> = tri.trace(&union)?.into_iter().map(|t| t.coords).collect();
    let mut expected: Vec<Vec<u32>> = curves.iter().map(|c| c.coords().to_vec()).collect();
    traced.sort();
    expected.sort();
    if traced != expected {
        return Err(HandlebodyError::NotDisjoint);
    }
    let pieces = complement_components(&tri, &union)?;
    if pieces != 1 {
        return Err(HandlebodyError::DisconnectedComplement(pieces));
    }
    Ok(CutSystem { genus, curves })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeegaardDiagram {
    genus: u32,
    red: CutSystem,
    blue: CutSystem,
}

impl HeegaardDiagram {
    pub fn new(genus: u32, red: Vec<CurveClass>, blue: Vec<CurveClass>) -> Result<Self, HandlebodyError> {
        Ok(HeegaardDiagram {
            genus,
            red: validate_cut_system(genus, red)?,
            blue: validate_cut_system(genus, blue)?,
        })
    }

    /// Genus-one diagram with one meridian slope per side.
    pub fn genus_one(red: Slope, blue: Slope) -> Result<Self, HandlebodyError> {
        Self::new(1, vec![CurveClass::from_slope(red)], vec![CurveClass::from_slope(blue)])
    }

    /// `S^3` as red `(1,0)`, blue `(0,1)`.
    pub fn s3_genus_one() -> Self {
        Self::genus_one(Slope::new(1, 0).unwrap(), Slope::new(0, 1).unwrap()).unwrap()
    }

    /// `L(p,1)` as red `(1,0)`, blue `(1,p)`; `p = 0` gives `S^2 x S^1`.
    pub fn lens_space(p: i64) -> Result<Self, HandlebodyError> {
        if p == 0 {
            return Self::genus_one(Slope::new(1, 0)?, Slope::new(1, 0)?);
        }
        Self::genus_one(Slope::new(1, 0)?, Slope::new(1, p)?)
    }

    /// The standard genus-`g` diagram of `S^3`: red curves dual to the `a`
    /// edges, blue curves dual to the `b` edges.
    pub fn standard(genus: u32) -> Result<Self, HandlebodyError> {
        let red = (0..genus).map(|h| dual_curve(genus, 2 * h as usize)).collect::<Result<_, _>>()?;
        let blue = (0..genus).map(|h| dual_curve(genus, 2 * h as usize + 1)).collect::<Result<_, _>>()?;
        Self::new(genus, red, blue)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn side(&self, color: Color) -> &CutSystem {
        match color {
            Color::Red => &self.red,
            Color::Blue => &self.blue,
        }
    }
}

/// The curve crossing polygon generator edge `edge` once, drawn as a chord
/// between the two polygon sides labelled by that generator.
pub fn dual_curve(genus: u32, edge: usize) -> Result<CurveClass, SurfaceError> {
    let g = genus as usize;
    if genus == 0 {
        return Err(SurfaceError::GenusZero(0));
    }
    let handle = edge / 2;
    let (k1, k2) = if edge.is_multiple_of(2) { (4 * handle, 4 * handle + 2) } else { (4 * handle + 1, 4 * handle + 3) };
    let tri_of = |k: usize| k.clamp(1, 4 * g - 2);
    let mut coords = vec![0u32; 6 * g - 3];
    coords[edge] = 1;
    for j in tri_of(k1) + 1..=tri_of(k2) {
        coords[2 * g + j - 2] += 1;
    }
    CurveClass::new(genus, coords)
}

/// One letter of a word in the free group on the meridians of a cut system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    /// Zero-based index of the cut curve.
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn inv(self) -> Letter {
        Letter { generator: self.generator, inverse: !self.inverse }
    }
}

/// Cyclic signed word.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SignedWord {
    pub letters: Vec<Letter>,
}

impl SignedWord {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Free and cyclic reduction.
    pub fn reduced(&self) -> SignedWord {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last() == Some(&l.inv()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        let (mut lo, mut hi) = (0, stack.len());
        while hi - lo >= 2 && stack[lo] == stack[hi - 1].inv() {
            lo += 1;
            hi -= 1;
        }
        SignedWord { letters: stack[lo..hi].to_vec() }
    }

    pub fn is_trivial(&self) -> bool {
        self.reduced().is_empty()
    }
}

impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| format!("{}{}", if l.inverse { 'X' } else { 'x' }, l.generator + 1))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

pub(crate) fn word_from_paths(path: &[Step], cut_paths: &[Vec<Step>]) -> SignedWord {
    let letters = ordered_crossings(path, cut_paths)
        .into_iter()
        .map(|c| Letter { generator: c.curve, inverse: c.sign < 0 })
        .collect();
    SignedWord { letters }
}

/// Signed crossings of a minimal-position representative of `c` with the
/// cut curves, in cyclic order.
pub fn boundary_word(c: &CurveClass, cut: &CutSystem) -> Result<SignedWord, SurfaceError> {
    if c.genus() != cut.genus() {
        return Err(SurfaceError::GenusMismatch(c.genus(), cut.genus()));
    }
    let tri = canonical_triangulation(c.genus())?;
    let cut_paths: Vec<Vec<Step>> = cut.curves().iter().map(|k| k.path(&tri)).collect();
    Ok(word_from_paths(&c.path(&tri), &cut_paths))
}

/// Whether `c` bounds a disk in the handlebody on the given side.
pub fn bounds_disk(c: &CurveClass, color: Color, diagram: &HeegaardDiagram) -> Result<bool, SurfaceError> {
    Ok(boundary_word(c, diagram.side(color))?.is_trivial())
}

pub const DEFAULT_BUDGET: u64 = 5_000_000;

/// Every essential curve inside `cap`, in coordinate order.
pub fn enumerate_essential_curves(genus: u32, cap: CurveCap, budget: u64) -> Result<Vec<CurveClass>, HandlebodyError> {
    let mut out = Vec::new();
    let mut visited = 0u64;
    let mut over_budget = false;
    match cap {
        CurveCap::SlopeBox(n) => {
            if genus != 1 {
                return Err(HandlebodyError::BadCap { cap, genus });
            }
            let n = n as i64;
            'outer: for p in 0..=n {
                for q in -n..=n {
                    visited += 1;
                    if visited > budget {
                        over_budget = true;
                        break 'outer;
                    }
                    if (p == 0 && q <= 0) || gcd(p, q) != 1 {
                        continue;
                    }
                    out.push(CurveClass::from_slope(Slope::new(p, q)?));
                }
            }
        }
        CurveCap::CoordinateSum(n) => {
            let tri = canonical_triangulation(genus)?;
            let mut coords = vec![0u32; tri.edge_count()];
            over_budget = !walk_vectors(&tri, &mut coords, 0, n, &mut visited, budget, &mut out);
        }
    }
    out.sort();
    if over_budget {
        return Err(HandlebodyError::Budget { budget, partial: out });
    }
    Ok(out)
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

// Depth-first over coordinate vectors with sum <= remaining; false on budget exhaustion.
fn walk_vectors(
    tri: &Triangulation,
    coords: &mut Vec<u32>,
    edge: usize,
    remaining: u32,
    visited: &mut u64,
    budget: u64,
    out: &mut Vec<CurveClass>,
) -> bool {
    if edge == coords.len() {
        *visited += 1;
        if *visited > budget {
            return false;
        }
        if coords.iter().all(|&w| w == 0) || tri.check_matching(coords).is_err() {
            return true;
        }
        if let Ok(c) = CurveClass::new(tri.genus(), coords.clone()) {
            out.push(c);
        }
        return true;
    }
    for w in 0..=remaining {
        coords[edge] = w;
        if !walk_vectors(tri, coords, edge + 1, remaining - w, visited, budget, out) {
            coords[edge] = 0;
            return false;
        }
    }
    coords[edge] = 0;
    true
}

/// Essential curves inside `cap` that bound disks on the given side.
pub fn enumerate_disk_boundaries(
    diagram: &HeegaardDiagram,
    color: Color,
    cap: CurveCap,
    budget: u64,
) -> Result<Vec<CurveClass>, HandlebodyError> {
    let tri = canonical_triangulation(diagram.genus())?;
    let cut_paths: Vec<Vec<Step>> = diagram.side(color).curves().iter().map(|k| k.path(&tri)).collect();
    let keep = |curves: Vec<CurveClass>| -> Vec<CurveClass> {
        curves.into_iter().filter(|c| word_from_paths(&c.path(&tri), &cut_paths).is_trivial()).collect()
    };
    match enumerate_essential_curves(diagram.genus(), cap, budget) {
        Ok(all) => Ok(keep(all)),
        Err(HandlebodyError::Budget { budget, partial }) => Err(HandlebodyError::Budget { budget, partial: keep(partial) }),
        Err(e) => Err(e),
    }
}
