//! Symbolic generalized Heegaard splittings.
//!
//! A GHS is recorded as the genus multisets of its surfaces `F_0, ..., F_2n`;
//! odd levels are thick, even levels thin, and the two ends are the boundary.
//! Weak reductions and destabilizations act on a thick level through a pair
//! of compression descriptors, following the eight subcases selected by
//! whether the compressed surfaces equal the neighbouring thin levels.
//! Surface equality is genus-multiset equality.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GhsError;

/// Multiset of genera of closed surface components, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<u32>", into = "Vec<u32>")]
pub struct SurfaceCollection {
    genera: Vec<u32>,
}

impl From<Vec<u32>> for SurfaceCollection {
    fn from(mut genera: Vec<u32>) -> Self {
        genera.sort_unstable();
        SurfaceCollection { genera }
    }
}

impl From<SurfaceCollection> for Vec<u32> {
    fn from(s: SurfaceCollection) -> Self {
        s.genera
    }
}

impl SurfaceCollection {
    pub fn new(genera: Vec<u32>) -> Self {
        genera.into()
    }

    pub fn empty() -> Self {
        SurfaceCollection::default()
    }

    pub fn genera(&self) -> &[u32] {
        &self.genera
    }

    pub fn len(&self) -> usize {
        self.genera.len()
    }

    pub fn is_empty(&self) -> bool {
        self.genera.is_empty()
    }

    /// Sum of `(2 - chi)^2 = 4g^2` over components.
    pub fn complexity(&self) -> u64 {
        self.genera.iter().map(|&g| 4 * (g as u64) * (g as u64)).sum()
    }

    pub fn has_spheres(&self) -> bool {
        self.genera.first() == Some(&0)
    }

    pub fn without_spheres(&self) -> Self {
        SurfaceCollection { genera: self.genera.iter().copied().filter(|&g| g > 0).collect() }
    }

    fn replace(&self, component: usize, with: &[u32]) -> Self {
        let mut g = self.genera.clone();
        g.remove(component);
        g.extend_from_slice(with);
        g.into()
    }

    fn union(&self, other: &Self) -> Self {
        let mut g = self.genera.clone();
        g.extend_from_slice(&other.genera);
        g.into()
    }
}

impl fmt::Display for SurfaceCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.genera.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self.genera.iter().map(|g| g.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Orders collections by complexity alone; equal complexity compares equal.
pub fn compare_collections(a: &SurfaceCollection, b: &SurfaceCollection) -> Ordering {
    a.complexity().cmp(&b.complexity())
}

/// Which submanifold a compressing disk lies in, relative to its thick level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiskSide {
    /// Toward the thin level below (`F_{2i-2}`).
    Down,
    /// Toward the thin level above (`F_{2i}`).
    Up,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiskKind {
    NonSeparating,
    /// Splits the target into components of the given genera.
    Separating(u32, u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CompressionDescriptor {
    pub thick_index: usize,
    pub side: DiskSide,
    /// Index into the (sorted) components of the thick level.
    pub component: usize,
    pub kind: DiskKind,
}

/// Genera produced by compressing one component of genus `g`.
fn compress_component(g: u32, kind: DiskKind) -> Result<Vec<u32>, GhsError> {
    match kind {
        DiskKind::NonSeparating if g == 0 => Err(GhsError::SphereCompression),
        DiskKind::NonSeparating => Ok(vec![g - 1]),
        DiskKind::Separating(a, b) if a >= 1 && b >= 1 && a + b == g => Ok(vec![a, b]),
        DiskKind::Separating(a, b) => Err(GhsError::BadSplit(a, b, g)),
    }
}

/// Compresses one component of a collection. Sphere components produced
/// here are kept; moves remove them afterwards.
pub fn compress(sc: &SurfaceCollection, component: usize, kind: DiskKind) -> Result<SurfaceCollection, GhsError> {
    let g = *sc.genera.get(component).ok_or(GhsError::NoComponent { level: usize::MAX, component })?;
    Ok(sc.replace(component, &compress_component(g, kind)?))
}

/// Left or right removal in the destabilization subcase where both
/// compressed surfaces are parallel to the neighbouring thin levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DestabChoice {
    /// Remove the thick level and the thin level above it.
    #[default]
    RemoveUpper,
    /// Remove the thin level below the thick level and the thick level.
    RemoveLower,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Move {
    /// Disjoint disks `d` (down) and `e` (up); `joint` is the thick level
    /// compressed along both.
    WeakReduction { d: CompressionDescriptor, e: CompressionDescriptor, joint: SurfaceCollection },
    /// Disks meeting in one point on the same component.
    Destabilization {
        d: CompressionDescriptor,
        e: CompressionDescriptor,
        #[serde(default)]
        choice: DestabChoice,
    },
}

impl Move {
    pub fn thick_index(&self) -> usize {
        match self {
            Move::WeakReduction { d, .. } | Move::Destabilization { d, .. } => d.thick_index,
        }
    }

    fn with_thick_index(&self, t: usize) -> Move {
        let mut m = self.clone();
        match &mut m {
            Move::WeakReduction { d, e, .. } | Move::Destabilization { d, e, .. } => {
                d.thick_index = t;
                e.thick_index = t;
            }
        }
        m
    }
}

/// Which of the eight subcases a move fell into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MoveCase {
    pub weak: bool,
    /// `'a'` through `'d'`.
    pub subcase: char,
}

impl fmt::Display for MoveCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.weak { 1 } else { 2 }, self.subcase)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GhsDoc", into = "GhsDoc")]
pub struct Ghs {
    levels: Vec<SurfaceCollection>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GhsDoc {
    levels: Vec<SurfaceCollection>,
    boundary: [bool; 2],
}

impl TryFrom<GhsDoc> for Ghs {
    type Error = GhsError;

    fn try_from(doc: GhsDoc) -> Result<Self, GhsError> {
        if doc.boundary != [true, true] {
            return Err(GhsError::Invalid(vec!["both end levels must be flagged as boundary".into()]));
        }
        Ghs::new(doc.levels)
    }
}

impl From<Ghs> for GhsDoc {
    fn from(g: Ghs) -> Self {
        GhsDoc { levels: g.levels, boundary: [true, true] }
    }
}

/// Every violated structural rule, in level order.
pub fn validate_levels(levels: &[SurfaceCollection]) -> Result<(), Vec<String>> {
    let mut errs = Vec::new();
    if levels.len() < 3 || levels.len().is_multiple_of(2) {
        errs.push(format!("need an odd number (at least 3) of levels, got {}", levels.len()));
    }
    let last = levels.len().saturating_sub(1);
    for (i, l) in levels.iter().enumerate() {
        let interior = i != 0 && i != last;
        if i % 2 == 1 && l.is_empty() {
            errs.push(format!("thick level {i} is empty"));
        }
        if interior && i % 2 == 0 && l.is_empty() {
            errs.push(format!("interior thin level {i} is empty"));
        }
        if interior && l.has_spheres() {
            errs.push(format!("level {i} has a sphere component (unnormalized)"));
        }
    }
    if errs.is_empty() {
        Ok(())
    } else {
        Err(errs)
    }
}

pub fn validate_ghs(ghs: &Ghs) -> Result<(), Vec<String>> {
    validate_levels(&ghs.levels)
}

impl Ghs {
    pub fn new(levels: Vec<SurfaceCollection>) -> Result<Self, GhsError> {
        validate_levels(&levels).map_err(GhsError::Invalid)?;
        Ok(Ghs { levels })
    }

    /// Shorthand from raw genus lists.
    pub fn from_genera(levels: &[&[u32]]) -> Result<Self, GhsError> {
        Ghs::new(levels.iter().map(|l| SurfaceCollection::new(l.to_vec())).collect())
    }

    /// `{∅, [genus], ∅}`: a Heegaard splitting of a closed manifold.
    pub fn splitting(genus: u32) -> Result<Self, GhsError> {
        Ghs::from_genera(&[&[], &[genus], &[]])
    }

    pub fn levels(&self) -> &[SurfaceCollection] {
        &self.levels
    }

    pub fn thick_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.levels.len()).step_by(2)
    }

    pub fn key(&self) -> Vec<u64> {
        ghs_key(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("GHS serializes")
    }
}

impl fmt::Display for Ghs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.levels.iter().map(|l| l.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Complexities of the thick levels in non-increasing order.
pub fn ghs_key(ghs: &Ghs) -> Vec<u64> {
    let mut key: Vec<u64> = ghs.thick_indices().map(|i| ghs.levels[i].complexity()).collect();
    key.sort_unstable_by(|a, b| b.cmp(a));
    key
}

/// Lexicographic comparison of keys; a proper prefix is smaller.
pub fn compare_ghs(a: &Ghs, b: &Ghs) -> Ordering {
    ghs_key(a).cmp(&ghs_key(b))
}

/// A move's result with the position of every surviving original level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Applied {
    pub ghs: Ghs,
    pub case: MoveCase,
    /// `level_map[i]` is the new index of original level `i` if it survives
    /// unchanged.
    pub level_map: Vec<Option<usize>>,
}

type Tagged = Vec<(Option<usize>, SurfaceCollection)>;

fn target(ghs: &Ghs, d: &CompressionDescriptor) -> Result<u32, GhsError> {
    let t = d.thick_index;
    if t.is_multiple_of(2) || t >= ghs.levels.len() {
        return Err(GhsError::NotThick(t));
    }
    ghs.levels[t].genera.get(d.component).copied().ok_or(GhsError::NoComponent { level: t, component: d.component })
}

fn check_sides(d: &CompressionDescriptor, e: &CompressionDescriptor) -> Result<(), GhsError> {
    if d.side != DiskSide::Down {
        return Err(GhsError::WrongSide("first disk must lie below the thick level"));
    }
    if e.side != DiskSide::Up {
        return Err(GhsError::WrongSide("second disk must lie above the thick level"));
    }
    if d.thick_index != e.thick_index {
        return Err(GhsError::WrongSide("disks must compress the same thick level"));
    }
    Ok(())
}

/// All genus multisets reachable from `pieces` by one compression of one
/// piece, including compressions along disks inessential on that piece.
fn one_compression(pieces: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for (k, &h) in pieces.iter().enumerate() {
        let rest: Vec<u32> = pieces.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &g)| g).collect();
        let mut push = |new: &[u32]| {
            let mut v = rest.clone();
            v.extend_from_slice(new);
            v.retain(|&g| g > 0);
            v.sort_unstable();
            out.push(v);
        };
        push(&[h, 0]);
        if h >= 1 {
            push(&[h - 1]);
        }
        for a in 1..h {
            push(&[a, h - a]);
        }
    }
    out.sort();
    out.dedup();
    out
}

fn joint_consistent(
    level: &SurfaceCollection,
    d: &CompressionDescriptor,
    e: &CompressionDescriptor,
    joint: &SurfaceCollection,
) -> Result<(), GhsError> {
    let joint = joint.without_spheres();
    let ok = if d.component != e.component {
        let mut expected = level.replace(d.component.max(e.component), &[]).replace(d.component.min(e.component), &[]);
        let pieces = [
            compress_component(level.genera[d.component], d.kind)?,
            compress_component(level.genera[e.component], e.kind)?,
        ]
        .concat();
        expected = expected.union(&SurfaceCollection::new(pieces));
        expected.without_spheres() == joint
    } else {
        let g = level.genera[d.component];
        let from_d = one_compression(&compress_component(g, d.kind)?);
        let from_e = one_compression(&compress_component(g, e.kind)?);
        let rest = level.replace(d.component, &[]).without_spheres();
        from_d.iter().filter(|j| from_e.contains(j)).any(|j| rest.union(&SurfaceCollection::new(j.clone())) == joint)
    };
    if ok {
        Ok(())
    } else {
        Err(GhsError::Inconsistent { joint: joint.genera })
    }
}

fn splice(levels: &Tagged, lo: usize, hi: usize, with: Vec<SurfaceCollection>) -> Result<Tagged, GhsError> {
    let last = levels.len() - 1;
    if lo == 0 && (with.is_empty() || with[0] != levels[0].1) {
        return Err(GhsError::Boundary(0));
    }
    if hi == last && (with.is_empty() || with[with.len() - 1] != levels[last].1) {
        return Err(GhsError::Boundary(last));
    }
    if lo == 0 && hi == last && with.len() < 2 {
        return Err(GhsError::Boundary(0));
    }
    let mut out: Tagged = levels[..lo].to_vec();
    let n = with.len();
    for (k, s) in with.into_iter().enumerate() {
        // boundary levels that were checked equal keep their identity
        let keep = (k == 0 && lo == 0) || (k + 1 == n && hi == last);
        out.push((if keep { levels[if k == 0 && lo == 0 { 0 } else { last }].0 } else { None }, s));
    }
    out.extend_from_slice(&levels[hi + 1..]);
    Ok(out)
}

/// Sphere removal and merging across emptied interior thin levels.
fn normalize(mut levels: Tagged) -> Tagged {
    let last = levels.len() - 1;
    for (i, (tag, s)) in levels.iter_mut().enumerate() {
        if i != 0 && i != last && s.has_spheres() {
            *s = s.without_spheres();
            *tag = None;
        }
    }
    let mut k = 2;
    while k + 1 < levels.len() {
        if levels[k].1.is_empty() {
            let merged = levels[k - 1].1.union(&levels[k + 1].1);
            levels[k - 1] = (None, merged);
            levels.drain(k..=k + 1);
        } else {
            k += 2;
        }
    }
    levels
}

/// Applies a move and reports the subcase and level relocation.
pub fn apply_tracked(ghs: &Ghs, m: &Move) -> Result<Applied, GhsError> {
    let (d, e) = match m {
        Move::WeakReduction { d, e, .. } | Move::Destabilization { d, e, .. } => (d, e),
    };
    check_sides(d, e)?;
    let t = d.thick_index;
    let g_d = target(ghs, d)?;
    target(ghs, e)?;
    let level = &ghs.levels[t];
    let f_d = compress(level, d.component, d.kind)?.without_spheres();
    let f_e = compress(level, e.component, e.kind)?.without_spheres();
    let eq_d = f_d == ghs.levels[t - 1];
    let eq_e = f_e == ghs.levels[t + 1];
    let subcase = match (eq_d, eq_e) {
        (false, false) => 'a',
        (true, false) => 'b',
        (false, true) => 'c',
        (true, true) => 'd',
    };
    let tagged: Tagged = ghs.levels.iter().cloned().enumerate().map(|(i, s)| (Some(i), s)).collect();
    let (weak, spliced) = match m {
        Move::WeakReduction { joint, .. } => {
            joint_consistent(level, d, e, joint)?;
            let f_de = joint.without_spheres();
            let out = match subcase {
                'a' => splice(&tagged, t, t, vec![f_d, f_de, f_e]),
                'b' => splice(&tagged, t - 1, t, vec![f_de, f_e]),
                'c' => splice(&tagged, t, t + 1, vec![f_d, f_de]),
                _ => splice(&tagged, t - 1, t + 1, vec![f_de]),
            }?;
            (true, out)
        }
        Move::Destabilization { choice, .. } => {
            if d.component != e.component || d.kind != DiskKind::NonSeparating || e.kind != DiskKind::NonSeparating {
                return Err(GhsError::NotDual);
            }
            if g_d == 0 {
                return Err(GhsError::SphereCompression);
            }
            let out = match (subcase, choice) {
                ('a', _) => splice(&tagged, t, t, vec![f_d]),
                ('b', _) | ('d', DestabChoice::RemoveLower) => splice(&tagged, t - 1, t, vec![]),
                _ => splice(&tagged, t, t + 1, vec![]),
            }?;
            (false, out)
        }
    };
    let normalized = normalize(spliced);
    let mut level_map = vec![None; ghs.levels.len()];
    for (pos, (tag, _)) in normalized.iter().enumerate() {
        if let Some(orig) = tag {
            level_map[*orig] = Some(pos);
        }
    }
    let result = Ghs::new(normalized.into_iter().map(|(_, s)| s).collect())?;
    if compare_ghs(&result, ghs) != Ordering::Less {
        return Err(GhsError::NotDecreasing);
    }
    Ok(Applied { ghs: result, case: MoveCase { weak, subcase }, level_map })
}

pub fn apply_move(ghs: &Ghs, m: &Move) -> Result<Ghs, GhsError> {
    apply_tracked(ghs, m).map(|a| a.ghs)
}

pub fn weak_reduce(
    ghs: &Ghs,
    d: CompressionDescriptor,
    e: CompressionDescriptor,
    joint: SurfaceCollection,
) -> Result<Ghs, GhsError> {
    apply_move(ghs, &Move::WeakReduction { d, e, joint })
}

pub fn destabilize(
    ghs: &Ghs,
    d: CompressionDescriptor,
    e: CompressionDescriptor,
    choice: DestabChoice,
) -> Result<Ghs, GhsError> {
    apply_move(ghs, &Move::Destabilization { d, e, choice })
}

/// Raises the genus of one thick component by one.
pub fn stabilize(ghs: &Ghs, thick_index: usize, component: usize) -> Result<Ghs, GhsError> {
    if thick_index.is_multiple_of(2) || thick_index >= ghs.levels.len() {
        return Err(GhsError::NotThick(thick_index));
    }
    let level = &ghs.levels[thick_index];
    let g = *level.genera.get(component).ok_or(GhsError::NoComponent { level: thick_index, component })?;
    let mut levels = ghs.levels.clone();
    levels[thick_index] = level.replace(component, &[g + 1]);
    Ghs::new(levels)
}

/// Rewrites a move planned on the original GHS for the GHS after another
/// move, when the levels it reads (the thick level and both neighbours)
/// survived unchanged and still sit together.
pub fn relocate(m: &Move, level_map: &[Option<usize>]) -> Option<Move> {
    let t = m.thick_index();
    let below = level_map.get(t.checked_sub(1)?).copied().flatten()?;
    let at = level_map.get(t).copied().flatten()?;
    let above = level_map.get(t + 1).copied().flatten()?;
    (below + 1 == at && at + 1 == above).then(|| m.with_thick_index(at))
}

/// Non-separating descriptor shorthand.
pub fn nonsep(thick_index: usize, side: DiskSide, component: usize) -> CompressionDescriptor {
    CompressionDescriptor { thick_index, side, component, kind: DiskKind::NonSeparating }
}

/// The destabilization of one component with default choice.
pub fn destabilization(thick_index: usize, component: usize) -> Move {
    Move::Destabilization {
        d: nonsep(thick_index, DiskSide::Down, component),
        e: nonsep(thick_index, DiskSide::Up, component),
        choice: DestabChoice::default(),
    }
}

/// Disk kinds available on a component of genus `g`, splits listed once.
fn kinds(g: u32) -> Vec<DiskKind> {
    let mut out = Vec::new();
    if g >= 1 {
        out.push(DiskKind::NonSeparating);
    }
    for a in 1..=g / 2 {
        out.push(DiskKind::Separating(a, g - a));
    }
    out
}

/// Every move that applies to `ghs`, in a fixed order. Components of equal
/// genus are interchangeable, so only the first (and, for pairs, second)
/// of each genus is used.
pub fn enumerate_moves(ghs: &Ghs) -> Vec<Move> {
    let mut candidates = Vec::new();
    for t in ghs.thick_indices() {
        let genera = ghs.levels[t].genera();
        let firsts: Vec<usize> = (0..genera.len()).filter(|&i| i == 0 || genera[i] != genera[i - 1]).collect();
        for &cd in &firsts {
            let g = genera[cd];
            if g >= 1 {
                candidates.push(Move::Destabilization {
                    d: nonsep(t, DiskSide::Down, cd),
                    e: nonsep(t, DiskSide::Up, cd),
                    choice: DestabChoice::RemoveUpper,
                });
                candidates.push(Move::Destabilization {
                    d: nonsep(t, DiskSide::Down, cd),
                    e: nonsep(t, DiskSide::Up, cd),
                    choice: DestabChoice::RemoveLower,
                });
            }
            let mut partners = firsts.clone();
            if cd + 1 < genera.len() && genera[cd + 1] == g {
                partners.push(cd + 1);
                partners.sort_unstable();
            }
            for &ce in &partners {
                for kd in kinds(g) {
                    for ke in kinds(genera[ce]) {
                        let d = CompressionDescriptor { thick_index: t, side: DiskSide::Down, component: cd, kind: kd };
                        let e = CompressionDescriptor { thick_index: t, side: DiskSide::Up, component: ce, kind: ke };
                        for joint in joint_options(&ghs.levels[t], &d, &e) {
                            candidates.push(Move::WeakReduction { d, e, joint });
                        }
                    }
                }
            }
        }
    }
    let mut seen = std::collections::HashSet::new();
    candidates
        .into_iter()
        .filter(|m| match apply_tracked(ghs, m) {
            // the lower choice only differs from the default in subcase 2d
            Ok(a) => {
                let redundant = matches!(m, Move::Destabilization { choice: DestabChoice::RemoveLower, .. })
                    && a.case.subcase != 'd';
                !redundant && seen.insert(m.clone())
            }
            Err(_) => false,
        })
        .collect()
}

fn joint_options(level: &SurfaceCollection, d: &CompressionDescriptor, e: &CompressionDescriptor) -> Vec<SurfaceCollection> {
    let (Ok(pd), Ok(pe)) = (
        compress_component(level.genera[d.component], d.kind),
        compress_component(level.genera[e.component], e.kind),
    ) else {
        return Vec::new();
    };
    if d.component != e.component {
        let rest = level.replace(d.component.max(e.component), &[]).replace(d.component.min(e.component), &[]);
        return vec![rest.union(&SurfaceCollection::new([pd, pe].concat())).without_spheres()];
    }
    let from_e = one_compression(&pe);
    let rest = level.replace(d.component, &[]).without_spheres();
    one_compression(&pd)
        .into_iter()
        .filter(|j| from_e.contains(j))
        .map(|j| rest.union(&SurfaceCollection::new(j)))
        .collect()
}
