//! Minimal-position intersection numbers.
//!
//! A normal curve is a cyclically reduced closed path in the trivalent
//! ribbon graph dual to the triangulation (vertices are triangles, half-edges
//! are triangle sides in counter-clockwise order). That graph is a spine of
//! the surface punctured at the triangulation vertex, so two curves cross
//! essentially exactly where lifts of their paths to the universal cover
//! share a segment and leave it on opposite sides. Counting such segments up
//! to deck translations gives the geometric intersection number.
//!
//! The torus has the closed form `|ps - qr|`, used as a fast path.

use std::cmp::Ordering;

use crate::error::SurfaceError;
use crate::surface::{canonical_triangulation, CurveClass, Step};

#[inline]
fn next(side: u8) -> u8 {
    (side + 1) % 3
}

#[inline]
fn prev(side: u8) -> u8 {
    (side + 2) % 3
}

/// One essential crossing between a lift of `a` and a lift of `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    /// Index into `a` of the first step of the shared segment.
    pub a_start: usize,
    /// Index into the (possibly reversed) `b` of the same step.
    pub b_start: usize,
    /// Number of shared darts.
    pub length: usize,
    /// Whether `b` runs against `a` along the segment.
    pub reversed: bool,
    /// Whether `a` enters the segment from its left.
    pub a_from_left: bool,
}

impl Crossing {
    /// `+1` when `b` crosses `a` from right to left, `-1` otherwise.
    pub fn sign(&self) -> i8 {
        let s = if self.a_from_left { 1 } else { -1 };
        if self.reversed {
            -s
        } else {
            s
        }
    }
}

pub fn reverse_path(path: &[Step]) -> Vec<Step> {
    path.iter().rev().map(|s| s.reversed()).collect()
}

fn scan(a: &[Step], b: &[Step], reversed: bool, limit: usize, out: &mut Vec<Crossing>) {
    let (n, m) = (a.len(), b.len());
    let horizon = n + m;
    for i in 0..n {
        let sa = a[i];
        for (j, &sb) in b.iter().enumerate() {
            if sa.triangle != sb.triangle || sa.exit != sb.exit || sa.entry == sb.entry {
                continue;
            }
            let mut t = 1;
            let end = loop {
                if t > horizon {
                    break None;
                }
                let (xa, xb) = (a[(i + t) % n], b[(j + t) % m]);
                if xa.exit != xb.exit {
                    break Some((xa, xb));
                }
                t += 1;
            };
            let Some((xa, _)) = end else { continue };
            let from_left = sa.entry == next(sa.exit);
            let leaves_left = xa.exit == prev(xa.entry);
            if from_left != leaves_left {
                out.push(Crossing { a_start: i, b_start: j, length: t, reversed, a_from_left: from_left });
                if out.len() >= limit {
                    return;
                }
            }
        }
    }
}

/// All essential crossings of `a` with `b`, stopping once `limit` are found.
pub fn crossings_up_to(a: &[Step], b: &[Step], limit: usize) -> Vec<Crossing> {
    let mut out = Vec::new();
    if a.is_empty() || b.is_empty() || limit == 0 {
        return out;
    }
    scan(a, b, false, limit, &mut out);
    if out.len() < limit {
        scan(a, &reverse_path(b), true, limit, &mut out);
    }
    out
}

pub fn crossings(a: &[Step], b: &[Step]) -> Vec<Crossing> {
    crossings_up_to(a, b, usize::MAX)
}

/// Intersection number computed from traced paths, with no torus shortcut.
pub fn path_intersection(a: &[Step], b: &[Step]) -> u32 {
    crossings(a, b).len() as u32
}

/// Intersection number via path linking, for any genus.
pub fn linking_intersection(a: &CurveClass, b: &CurveClass) -> Result<u32, SurfaceError> {
    if a.genus() != b.genus() {
        return Err(SurfaceError::GenusMismatch(a.genus(), b.genus()));
    }
    let tri = canonical_triangulation(a.genus())?;
    Ok(path_intersection(&a.path(&tri), &b.path(&tri)))
}

/// Exact geometric intersection number of two curve classes.
pub fn geometric_intersection(a: &CurveClass, b: &CurveClass) -> Result<u32, SurfaceError> {
    if a.genus() != b.genus() {
        return Err(SurfaceError::GenusMismatch(a.genus(), b.genus()));
    }
    if let (Some(s), Some(t)) = (a.slope(), b.slope()) {
        return Ok(s.determinant(&t) as u32);
    }
    linking_intersection(a, b)
}

/// Outward walk along a lift of `b`, starting at the vertex where it leaves
/// the lift of `a`.
struct Branch<'a> {
    path: &'a [Step],
    // position of the departure vertex in `path`
    at: usize,
    forward: bool,
}

impl Branch<'_> {
    /// `k`-th vertex after departure, as (entry, exit) seen walking outward.
    fn step(&self, k: usize) -> Step {
        let n = self.path.len();
        if self.forward {
            self.path[(self.at + k) % n]
        } else {
            self.path[(self.at + n * (k / n + 1) - k % n) % n].reversed()
        }
    }
}

/// Orders two branches leaving the left side of a lift of `a` at the same
/// half-edge: the one closer to the backward end of `a` comes first.
fn compare_branches(x: &Branch<'_>, y: &Branch<'_>) -> Ordering {
    let horizon = x.path.len() + y.path.len() + 2;
    for k in 1..horizon {
        let (sx, sy) = (x.step(k), y.step(k));
        if sx.exit != sy.exit {
            return if sx.exit == prev(sx.entry) { Ordering::Less } else { Ordering::Greater };
        }
    }
    Ordering::Equal
}

/// A crossing of `a` with one of several curves, positioned along `a`.
#[derive(Debug, Clone, Copy)]
pub struct PlacedCrossing {
    pub curve: usize,
    pub sign: i8,
    crossing: Crossing,
}

/// Crossings of `a` with every curve in `others`, in the cyclic order a
/// minimal-position representative of `a` meets them.
///
/// The crossing with a lift of `b` sits between the two places where that
/// lift leaves `a`; ordering by where its left end departs `a` (and, on
/// ties, by how the branches separate further out) reproduces the planar
/// order because the `others` are pairwise disjoint.
pub fn ordered_crossings(a: &[Step], others: &[Vec<Step>]) -> Vec<PlacedCrossing> {
    let reversed: Vec<Vec<Step>> = others.iter().map(|b| reverse_path(b)).collect();
    let mut placed = Vec::new();
    for (idx, b) in others.iter().enumerate() {
        for c in crossings(a, b) {
            placed.push(PlacedCrossing { curve: idx, sign: c.sign(), crossing: c });
        }
    }
    let n = a.len();
    let branch = |p: &PlacedCrossing| -> (usize, Branch<'_>) {
        let c = p.crossing;
        let path: &[Step] = if c.reversed { &reversed[p.curve] } else { &others[p.curve] };
        if c.a_from_left {
            // b's forward end leaves on a's left at the end of the segment
            ((c.a_start + c.length) % n, Branch { path, at: (c.b_start + c.length) % path.len(), forward: true })
        } else {
            (c.a_start, Branch { path, at: c.b_start, forward: false })
        }
    };
    placed.sort_by(|x, y| {
        let (px, bx) = branch(x);
        let (py, by) = branch(y);
        px.cmp(&py).then_with(|| compare_branches(&bx, &by))
    });
    placed
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::Slope;

    fn slope(p: i64, q: i64) -> CurveClass {
        CurveClass::from_slope(Slope::new(p, q).unwrap())
    }

    #[test]
    fn torus_linking_matches_determinant() {
        let slopes = [(1, 0), (0, 1), (1, 1), (1, -1), (3, 1), (1, 2), (2, -5), (7, 3), (4, -9)];
        for &(p, q) in &slopes {
            for &(r, s) in &slopes {
                let (a, b) = (slope(p, q), slope(r, s));
                let det = (p * s - q * r).unsigned_abs() as u32;
                assert_eq!(linking_intersection(&a, &b).unwrap(), det, "({p},{q}) vs ({r},{s})");
            }
        }
    }

    #[test]
    fn self_intersection_is_zero() {
        let c = slope(5, 3);
        assert_eq!(linking_intersection(&c, &c).unwrap(), 0);
        assert_eq!(geometric_intersection(&c, &c).unwrap(), 0);
    }

    #[test]
    fn paper_torus_example() {
        assert_eq!(geometric_intersection(&slope(1, 0), &slope(0, 1)).unwrap(), 1);
        assert_eq!(geometric_intersection(&slope(3, 1), &slope(1, 2)).unwrap(), 5);
    }

    #[test]
    fn genus_mismatch() {
        let a = slope(1, 0);
        let tri = canonical_triangulation(2).unwrap();
        let b = CurveClass::new(2, vec![1, 0, 0, 0, 0, 1, 0, 0, 0]);
        if let Ok(b) = b {
            assert!(geometric_intersection(&a, &b).is_err());
        }
        assert_eq!(tri.genus(), 2);
    }
}
