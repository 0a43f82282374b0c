//! Exact computations for graded Artinian algebras: Hilbert functions,
//! Macaulay inverse systems, weak and strong Lefschetz verdicts, Jordan
//! types, higher Hessians and codimension-three Gorenstein sequences.

pub mod apolarity;
pub mod cli;
pub mod error;
pub mod field;
pub mod lefschetz;
pub mod matrix;
pub mod poly;
pub mod sequences;

pub use apolarity::{ArtinAlgebra, DualGenerator, GradedIdealSlice, Presentation};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use lefschetz::{JordanType, LefschetzVerdict};
pub use matrix::DenseMatrix;
pub use poly::{LinearForm, Monomial, Polynomial};
pub use sequences::{HilbertFunction, Partition};
