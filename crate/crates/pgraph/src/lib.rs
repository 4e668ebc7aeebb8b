//! Embedded projective-plane graphs and their rigidity.
//!
//! Building blocks for working with (3,6)-tight graphs embedded in the
//! real projective plane:
//!
//! - [`surface`]: embedded graphs with facial 3-cycles and hole walks,
//!   built by identifying paired boundary edges of triangulated discs;
//! - [`sparsity`]: exact (3,6)-sparsity certification by minimum cuts,
//!   with a brute-force oracle for cross-validation;
//! - [`moves`]: edge contraction and planar vertex splitting;
//! - [`reduction`]: the eight uncontractible base graphs and reduction of
//!   any tight embedded graph onto one of them;
//! - [`rigidity`]: exact rigidity-matrix ranks at random placements;
//! - [`enumeration`]: counts of tight graphs on up to 8 vertices.

pub mod enumeration;
pub mod error;
pub mod fixtures;
pub mod flow;
pub mod graph;
pub mod iso;
pub mod moves;
pub mod reduction;
pub mod rigidity;
pub mod sparsity;
pub mod surface;

pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use surface::{FaceGraph, PGraph};
