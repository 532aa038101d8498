//! Maniplexes and abstract polytopes as properly edge-coloured flag graphs.
//!
//! A maniplex of rank `n - 1` is stored as `n` fixed-point-free involutions on
//! a dense set of flags. On top of that representation the crate computes
//!
//! * the colour-preserving automorphism group and its flag orbits ([`symmetry`]),
//! * the symmetry type graph, face-transitivity profile and orbit class ([`stg`]),
//! * generators of the automorphism group read off a spanning walk ([`walkgen`]),
//! * orientations, oriented flag di-graphs and their quotients ([`oriented`]),
//! * exhaustive censuses of admissible symmetry type graphs ([`enumerate`]).
//!
//! [`constructions`] builds the test corpus and [`cli`] holds the file formats
//! and report types used by the `maniplex` binary.

pub mod cli;
pub mod colours;
pub mod constructions;
pub mod enumerate;
pub mod flagcore;
pub mod oriented;
pub mod stg;
pub mod symmetry;
pub mod walkgen;

pub use colours::ColourSet;
pub use constructions::{MapSpec, Named};
pub use flagcore::{FacePartition, FlagGraph, ValidationReport, Violation};
pub use stg::{StgClass, SymmetryTypeGraph};
pub use symmetry::{AutGroup, Automorphism};

/// Index of a flag. Flags of a graph with `F` flags are `0..F`.
pub type Flag = usize;

/// Index of an edge colour. A graph of rank `n` uses colours `0..n`.
pub type Colour = usize;
