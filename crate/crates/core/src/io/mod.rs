//! File formats: matrix documents in, reports out.

pub mod matrix;
pub mod report;

pub use matrix::{matrix_to_json, parse_matrix, parse_matrix_value};
pub use report::{error_json, moment_table_json, moment_table_text, Report};
