//! Combinatorics of Jacobi diagrams and Bott-Cattaneo-Rossi (BCR) diagrams.
//!
//! The crate provides:
//!
//! * [`diagram`]: validated Jacobi and BCR diagrams, canonical keys and
//!   exhaustive enumeration per degree;
//! * [`space`]: exact linear algebra in the quotient spaces `A_k` by the
//!   AS, IHX and STU relations, the splitting into primitive, product and
//!   trivalent parts, products and the graded exponential;
//! * [`weight`]: the Conway weight system `w_C` and its logarithmic
//!   variant `w'_C`;
//! * [`bridge`]: orderings of BCR diagrams, the induced Jacobi diagrams,
//!   the sign factors and the BCR weight `w_BCR`, with verifiers for the
//!   identities relating it to `w'_C`;
//! * [`psi`]: the edge-substitution morphism `Psi(gamma)`;
//! * [`alexander`]: Alexander polynomials from PD codes and the exact
//!   series `Delta(e^h)` and its logarithm.
//!
//! All arithmetic is exact over the rationals.

pub mod alexander;
pub mod bridge;
pub mod diagram;
pub mod psi;
pub mod rational;
pub mod space;
pub mod weight;

pub use diagram::{
    BcrDiagram, CanonicalKey, DiagramError, JacobiDiagram, Limits, DEFAULT_MAX_DEGREE,
};
pub use rational::Q;
