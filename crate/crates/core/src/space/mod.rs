//! Exact linear algebra on combinations of Jacobi diagrams.

mod quotient;
mod relations;
mod series;
mod vector;

pub use quotient::{classify, Algebra, ClassKind, QuotientSpace};
pub use relations::{generate_relations, ihx_terms, stu_pair, RelationKind, Relator};
pub use series::{GradedSeries, SeriesError};
pub use vector::DiagramVector;
