//! Heegaard splittings in code: curves on closed surfaces, Heegaard
//! diagrams and their disk complexes, and the symbolic calculus of
//! generalized Heegaard splittings with sequence flattening.

pub mod disk_complex;
pub mod error;
pub mod ghs;
pub mod handlebody;
pub mod intersection;
pub mod properties;
pub mod report;
pub mod sog;
pub mod surface;

pub use disk_complex::{
    build_gamma, build_lambda, classify, quotient_by_symmetry, CappedDistance, ClassificationVerdict, CurveGraph,
    DiskComplexGraph, Finding, LambdaGraph, Symmetry,
};
pub use error::{GhsError, GraphError, HandlebodyError, SogError, SurfaceError};
pub use ghs::{apply_move, compare_ghs, ghs_key, CompressionDescriptor, DiskKind, DiskSide, Ghs, Move, SurfaceCollection};
pub use handlebody::{bounds_disk, Color, CurveCap, CutSystem, HeegaardDiagram, SignedWord};
pub use intersection::geometric_intersection;
pub use sog::{flatten, max_key, InventoryOracle, MaxKey, MoveOracle, Sog, SymbolicOracle};
pub use surface::{canonical_triangulation, normalize, CurveClass, Normalized, Slope, Surface};
