use thiserror::Error;

use crate::surface::CurveClass;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("genus must be at least 1, got {0}")]
    GenusZero(u32),
    #[error("expected {expected} coordinates for genus {genus}, got {got}")]
    CoordinateCount { genus: u32, expected: usize, got: usize },
    #[error("matching conditions fail in triangle {triangle}: weights {weights:?}")]
    Matching { triangle: usize, weights: [u32; 3] },
    #[error("all-zero coordinate vector is not a curve")]
    Empty,
    #[error("curve is inessential (vertex link)")]
    Inessential,
    #[error("coordinates trace to {0} components, expected a single curve")]
    NotConnected(usize),
    #[error("surface mismatch: genus {0} vs genus {1}")]
    GenusMismatch(u32, u32),
    #[error("slope ({0}, {1}) is not a primitive pair")]
    NotPrimitive(i64, i64),
    #[error("slopes only exist on the torus, not genus {0}")]
    NotTorus(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HandlebodyError {
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error("a cut system on genus {genus} needs {genus} curves, got {got}")]
    CurveCount { genus: u32, got: usize },
    #[error("cut curves {0} and {1} intersect {2} times")]
    Intersecting(usize, usize, u32),
    #[error("cut curves do not trace to the supplied components")]
    NotDisjoint,
    #[error("complement of the cut system has {0} components, expected 1")]
    DisconnectedComplement(usize),
    #[error("cap {cap:?} is not usable at genus {genus}")]
    BadCap { cap: crate::handlebody::CurveCap, genus: u32 },
    #[error("enumeration budget of {budget} candidates exhausted ({} curves found so far)", partial.len())]
    Budget { budget: u64, partial: Vec<CurveClass> },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error(transparent)]
    Handlebody(#[from] HandlebodyError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error("symmetry {index} is not invariant: {reason}")]
    NonInvariant { index: usize, reason: String },
    #[error("curve {0} is not a vertex of the graph")]
    UnknownVertex(String),
    #[error("({0}, {1}) is not an edge of the graph")]
    UnknownEdge(String, String),
    #[error("edge ({0}, {1}) has intersection number {2}, expected 1")]
    NotDestabilizing(String, String, u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GhsError {
    #[error("level {0} is not a thick level")]
    NotThick(usize),
    #[error("component {component} does not exist in level {level}")]
    NoComponent { level: usize, component: usize },
    #[error("cannot compress a sphere along a non-separating disk")]
    SphereCompression,
    #[error("separating split ({0}, {1}) does not give an essential compression of genus {2}")]
    BadSplit(u32, u32, u32),
    #[error("descriptor side mismatch: {0}")]
    WrongSide(&'static str),
    #[error("destabilization needs dual non-separating disks on one component")]
    NotDual,
    #[error("joint compression {joint:?} is not consistent with the two single compressions")]
    Inconsistent { joint: Vec<u32> },
    #[error("move would change boundary level {0}")]
    Boundary(usize),
    #[error("move result does not decrease the complexity key")]
    NotDecreasing,
    #[error("invalid GHS: {}", .0.join("; "))]
    Invalid(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SogError {
    #[error(transparent)]
    Ghs(#[from] GhsError),
    #[error("step {step} does not replay: {reason}")]
    Replay { step: usize, reason: String },
    #[error("sequence has {entries} entries but {steps} steps")]
    Shape { entries: usize, steps: usize },
    #[error("oracle is inconsistent: {0}")]
    Oracle(String),
    #[error("unknown state {0}")]
    UnknownState(String),
    #[error("search budget of {0} states exhausted; reachability unknown")]
    Budget(u64),
    #[error("end state is unreachable from the start inside the oracle's state space")]
    Unreachable,
}
