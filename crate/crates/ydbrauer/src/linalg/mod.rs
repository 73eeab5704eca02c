//! Exact linear algebra over GF(p) and Q.

pub mod field;
pub mod matrix;
pub mod tensor;

pub use field::{FieldElement, FieldSpec};
pub use matrix::{compose, invert, rank, tensor_map, LinearMapExact, MatrixExact};
pub use tensor::TensorExact;
