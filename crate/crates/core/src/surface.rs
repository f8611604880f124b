//! Closed model surfaces, their canonical one-vertex triangulations and
//! curves in normal coordinates.
//!
//! A genus `g` surface is built from a `4g`-gon with boundary word
//! `a1 b1 a1^-1 b1^-1 ... ag bg ag^-1 bg^-1`, fan-triangulated from polygon
//! vertex `P0`. All polygon vertices are identified, so the triangulation has
//! one vertex, `6g - 3` edges and `4g - 2` triangles.
//!
//! Edge numbering: generator `a_h` is edge `2h`, `b_h` is edge `2h + 1`, and
//! the diagonal from `P0` to `Pj` (`2 <= j <= 4g - 2`) is edge `2g + j - 2`.
//!
//! A curve is a vector of edge weights. Equal weight vectors are equal
//! normal isotopy classes; every connected normal curve other than the
//! vertex link is essential.

use std::cmp::Ordering;
use std::fmt;

use crate::error::SurfaceError;

/// A closed orientable surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Surface {
    pub genus: u32,
}

impl Surface {
    pub fn new(genus: u32) -> Self {
        Surface { genus }
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64
    }
}

/// One side of a triangle: the edge it lies on and whether the triangle's
/// counter-clockwise traversal runs along the edge's own direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Side {
    pub edge: usize,
    pub forward: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    genus: u32,
    triangles: Vec<[Side; 3]>,
    // (triangle, side) of the forward and the backward occurrence of each edge
    occurrences: Vec<[(usize, usize); 2]>,
}

/// Builds the fan triangulation of the standard `4g`-gon.
pub fn canonical_triangulation(genus: u32) -> Result<Triangulation, SurfaceError> {
    if genus == 0 {
        return Err(SurfaceError::GenusZero(genus));
    }
    let g = genus as usize;
    let sides = 4 * g;
    let polygon_side = |k: usize| -> Side {
        let handle = k / 4;
        match k % 4 {
            0 => Side { edge: 2 * handle, forward: true },
            1 => Side { edge: 2 * handle + 1, forward: true },
            2 => Side { edge: 2 * handle, forward: false },
            _ => Side { edge: 2 * handle + 1, forward: false },
        }
    };
    let diagonal = |j: usize| 2 * g + j - 2;

    let mut triangles = Vec::with_capacity(4 * g - 2);
    for j in 1..=(sides - 2) {
        let first = if j == 1 {
            polygon_side(0)
        } else {
            Side { edge: diagonal(j), forward: true }
        };
        let middle = polygon_side(j);
        let last = if j + 1 == sides - 1 {
            polygon_side(sides - 1)
        } else {
            Side { edge: diagonal(j + 1), forward: false }
        };
        triangles.push([first, middle, last]);
    }

    let edge_count = 6 * g - 3;
    let mut occurrences = vec![[(usize::MAX, usize::MAX); 2]; edge_count];
    for (t, tri) in triangles.iter().enumerate() {
        for (s, side) in tri.iter().enumerate() {
            let slot = if side.forward { 0 } else { 1 };
            debug_assert_eq!(occurrences[side.edge][slot].0, usize::MAX);
            occurrences[side.edge][slot] = (t, s);
        }
    }
    debug_assert!(occurrences.iter().all(|o| o[0].0 != usize::MAX && o[1].0 != usize::MAX));
    Ok(Triangulation { genus, triangles, occurrences })
}

impl Triangulation {
    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn edge_count(&self) -> usize {
        self.occurrences.len()
    }

    pub fn triangle_count(&self) -> usize {
        self.triangles.len()
    }

    pub fn triangles(&self) -> &[[Side; 3]] {
        &self.triangles
    }

    /// The `(triangle, side)` where `edge` appears with the given direction.
    pub fn occurrence(&self, edge: usize, forward: bool) -> (usize, usize) {
        self.occurrences[edge][if forward { 0 } else { 1 }]
    }

    /// The other triangle side glued to `(triangle, side)`.
    pub fn glued(&self, triangle: usize, side: usize) -> (usize, usize) {
        let s = self.triangles[triangle][side];
        self.occurrence(s.edge, !s.forward)
    }

    /// Checks the per-triangle matching conditions.
    pub fn check_matching(&self, coords: &[u32]) -> Result<(), SurfaceError> {
        if coords.len() != self.edge_count() {
            return Err(SurfaceError::CoordinateCount {
                genus: self.genus,
                expected: self.edge_count(),
                got: coords.len(),
            });
        }
        for (t, tri) in self.triangles.iter().enumerate() {
            let w = tri.map(|s| coords[s.edge]);
            let ok = w[0] <= w[1] + w[2]
                && w[1] <= w[0] + w[2]
                && w[2] <= w[0] + w[1]
                && (w[0] + w[1] + w[2]) % 2 == 0;
            if !ok {
                return Err(SurfaceError::Matching { triangle: t, weights: w });
            }
        }
        Ok(())
    }

    fn weights(&self, coords: &[u32], triangle: usize) -> [u32; 3] {
        self.triangles[triangle].map(|s| coords[s.edge])
    }

    /// Follows the normal arc entering `triangle` through `side` at
    /// counter-clockwise position `idx`; returns the exit side and position.
    fn cross_triangle(&self, coords: &[u32], triangle: usize, side: usize, idx: u32) -> (usize, u32) {
        let x = self.weights(coords, triangle);
        let corner = |k: usize| (x[k] + x[(k + 1) % 3] - x[(k + 2) % 3]) / 2;
        let prev = (side + 2) % 3;
        let next = (side + 1) % 3;
        if idx < corner(prev) {
            (prev, x[prev] - 1 - idx)
        } else {
            (next, x[side] - 1 - idx)
        }
    }

    /// Splits a normal multicurve into its connected components.
    pub fn trace(&self, coords: &[u32]) -> Result<Vec<TracedCurve>, SurfaceError> {
        self.check_matching(coords)?;
        let mut offsets = Vec::with_capacity(coords.len() + 1);
        let mut acc = 0usize;
        for &w in coords {
            offsets.push(acc);
            acc += w as usize;
        }
        let mut visited = vec![false; acc];
        let mut out = Vec::new();

        for edge in 0..coords.len() {
            for p in 0..coords[edge] {
                if visited[offsets[edge] + p as usize] {
                    continue;
                }
                let start = self.occurrence(edge, true);
                let (mut tri, mut side) = start;
                let mut idx = p;
                let mut steps = Vec::new();
                let mut weights = vec![0u32; coords.len()];
                loop {
                    let (exit, exit_idx) = self.cross_triangle(coords, tri, side, idx);
                    steps.push(Step { triangle: tri, entry: side as u8, exit: exit as u8 });
                    let s = self.triangles[tri][exit];
                    let w = coords[s.edge];
                    let point = if s.forward { exit_idx } else { w - 1 - exit_idx };
                    visited[offsets[s.edge] + point as usize] = true;
                    weights[s.edge] += 1;
                    let (t2, s2) = self.glued(tri, exit);
                    let fwd = self.triangles[t2][s2].forward;
                    tri = t2;
                    side = s2;
                    idx = if fwd { point } else { w - 1 - point };
                    if (tri, side) == start && idx == p {
                        break;
                    }
                }
                out.push(TracedCurve { coords: weights, steps });
            }
        }
        Ok(out)
    }
}

/// One pass of a curve through a triangle, entering and leaving through the
/// given sides (indices into the triangle's counter-clockwise side list).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Step {
    pub triangle: usize,
    pub entry: u8,
    pub exit: u8,
}

impl Step {
    pub fn reversed(self) -> Step {
        Step { triangle: self.triangle, entry: self.exit, exit: self.entry }
    }
}

/// A connected component produced by [`Triangulation::trace`]: its own
/// coordinates and its cyclic sequence of triangle passes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TracedCurve {
    pub coords: Vec<u32>,
    pub steps: Vec<Step>,
}

impl TracedCurve {
    pub fn is_vertex_link(&self) -> bool {
        self.coords.iter().all(|&w| w == 2)
    }
}

/// Isotopy class of an essential simple closed curve, stored as canonical
/// normal coordinates on the canonical triangulation of its genus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CurveClass {
    genus: u32,
    coords: Vec<u32>,
}

impl Ord for CurveClass {
    fn cmp(&self, other: &Self) -> Ordering {
        self.genus.cmp(&other.genus).then_with(|| self.coords.cmp(&other.coords))
    }
}

impl PartialOrd for CurveClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl CurveClass {
    /// Validates that `coords` describe one essential curve.
    pub fn new(genus: u32, coords: Vec<u32>) -> Result<Self, SurfaceError> {
        match normalize(genus, &coords)? {
            Normalized::Curve(c) => Ok(c),
            Normalized::Multicurve(r) => Err(SurfaceError::NotConnected(r.component_count())),
        }
    }

    pub fn from_slope(slope: Slope) -> Self {
        CurveClass { genus: 1, coords: slope.coords().to_vec() }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn surface(&self) -> Surface {
        Surface::new(self.genus)
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn coordinate_sum(&self) -> u64 {
        self.coords.iter().map(|&w| w as u64).sum()
    }

    /// The torus slope of this class, if it lives on the torus.
    pub fn slope(&self) -> Option<Slope> {
        (self.genus == 1).then(|| Slope::from_coords(&self.coords))
    }

    /// Cyclic sequence of triangle passes.
    pub fn path(&self, tri: &Triangulation) -> Vec<Step> {
        debug_assert_eq!(tri.genus(), self.genus);
        let mut traced = tri.trace(&self.coords).expect("curve classes are valid");
        debug_assert_eq!(traced.len(), 1);
        traced.pop().map(|t| t.steps).unwrap_or_default()
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(s) = self.slope() {
            write!(f, "{s}")
        } else {
            write!(f, "g{}{:?}", self.genus, self.coords)
        }
    }
}

/// Result of [`normalize`] when the coordinates do not describe one curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MulticurveReport {
    /// Essential components with multiplicities, ordered by class.
    pub classes: Vec<(CurveClass, u32)>,
    /// Number of vertex-linking components.
    pub peripheral: u32,
}

impl MulticurveReport {
    pub fn component_count(&self) -> usize {
        self.classes.iter().map(|(_, m)| *m as usize).sum::<usize>() + self.peripheral as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Normalized {
    Curve(CurveClass),
    Multicurve(MulticurveReport),
}

/// Canonicalizes raw edge weights: a single essential curve, or a report of
/// the multicurve they describe.
pub fn normalize(genus: u32, coords: &[u32]) -> Result<Normalized, SurfaceError> {
    let tri = canonical_triangulation(genus)?;
    tri.check_matching(coords)?;
    if coords.iter().all(|&w| w == 0) {
        return Err(SurfaceError::Empty);
    }
    let components = tri.trace(coords)?;
    if components.len() == 1 {
        return if components[0].is_vertex_link() {
            Err(SurfaceError::Inessential)
        } else {
            Ok(Normalized::Curve(CurveClass { genus, coords: coords.to_vec() }))
        };
    }
    let mut peripheral = 0;
    let mut classes: std::collections::BTreeMap<CurveClass, u32> = Default::default();
    for c in components {
        if c.is_vertex_link() {
            peripheral += 1;
        } else {
            *classes.entry(CurveClass { genus, coords: c.coords }).or_default() += 1;
        }
    }
    Ok(Normalized::Multicurve(MulticurveReport { classes: classes.into_iter().collect(), peripheral }))
}

/// Whether a single traced curve is essential on the closed surface.
pub fn is_essential(curve: &TracedCurve) -> bool {
    !curve.is_vertex_link()
}

/// A primitive torus slope `(p, q)`, identified with `(-p, -q)`.
///
/// Stored with `p > 0`, or `p == 0` and `q == 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    p: i64,
    q: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Slope {
    pub fn new(p: i64, q: i64) -> Result<Self, SurfaceError> {
        if gcd(p, q) != 1 {
            return Err(SurfaceError::NotPrimitive(p, q));
        }
        Ok(if p < 0 || (p == 0 && q < 0) { Slope { p: -p, q: -q } } else { Slope { p, q } })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// Weights on the torus edges `[a, b, diagonal]`.
    pub fn coords(&self) -> [u32; 3] {
        [self.q.unsigned_abs() as u32, self.p.unsigned_abs() as u32, (self.p - self.q).unsigned_abs() as u32]
    }

    fn from_coords(coords: &[u32]) -> Slope {
        let (x, y, z) = (coords[0] as i64, coords[1] as i64, coords[2] as i64);
        if x > 0 && y > 0 && z == x + y {
            Slope { p: y, q: -x }
        } else {
            Slope::new(y, x).expect("torus curve coordinates are primitive")
        }
    }

    /// `|ps - qr|`.
    pub fn determinant(&self, other: &Slope) -> u64 {
        (self.p * other.q - self.q * other.p).unsigned_abs()
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}
