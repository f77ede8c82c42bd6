//! Jacobi diagrams, BCR diagrams, canonical forms and enumeration.

mod bcr;
mod canon;
pub(crate) mod draft;
mod enumerate;
mod jacobi;
pub mod json;

pub use bcr::{
    enumerate_bcr, validate_bcr, BcrDiagram, BcrEdge, BcrGraph, EdgeClass, Piece, VertexClass,
    VertexType,
};
pub use canon::{canonicalize, isomorphisms, Canonical, CanonicalKey, Isomorphism};
pub(crate) use canon::{next_permutation, orientation_sign_mapped};
pub use enumerate::{enumerate_jacobi, jacobi_classes};
pub use jacobi::{HalfEdge, JacobiDiagram};

use thiserror::Error;

/// Largest degree handled unless a caller raises it explicitly.
pub const DEFAULT_MAX_DEGREE: usize = 4;

/// Resource bounds shared by the enumerating and verifying routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_degree: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: DEFAULT_MAX_DEGREE,
        }
    }
}

impl Limits {
    pub fn with_max_degree(max_degree: usize) -> Self {
        Limits { max_degree }
    }

    pub fn check(&self, degree: usize) -> Result<(), DiagramError> {
        if degree > self.max_degree {
            Err(DiagramError::DegreeOutOfRange {
                degree,
                max: self.max_degree,
            })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is not connected")]
    Disconnected,
    #[error("edge {0} is a loop")]
    LoopEdge(usize),
    #[error("edge {0} duplicates an earlier edge")]
    DuplicateEdge(usize),
    #[error("edge {edge} refers to missing vertex {vertex}")]
    VertexOutOfRange { edge: usize, vertex: usize },
    #[error("vertex {0} has an invalid neighbourhood")]
    VertexTypeViolation(usize),
    #[error("cycle structure violated: {0}")]
    CycleStructureViolation(String),
    #[error("vertex {0} has an invalid cyclic orientation")]
    BadOrientation(usize),
    #[error("invalid edge numbering: {0}")]
    BadNumbering(String),
    #[error("invalid univalent order: {0}")]
    BadOrder(String),
    #[error("degree {degree} exceeds the configured maximum {max}")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("malformed diagram file: {0}")]
    Format(String),
}
