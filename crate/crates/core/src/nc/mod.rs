//! Noncommutative polynomials in the `a_ij`, the relations of B(E), and
//! degree-truncated ideal membership.

pub mod poly;
pub mod relations;
pub mod tensor;
pub mod truncation;

pub use poly::{Generator, NCMonomial, NCPolynomial};
pub use relations::{antipode_images, build_relations, generator_matrix};
pub use tensor::TensorPolynomial;
pub use truncation::{IdealTruncation, Verdict, DEFAULT_CELL_LIMIT};
