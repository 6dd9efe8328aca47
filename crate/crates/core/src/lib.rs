#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod cli;
pub mod error;
pub mod haar;
pub mod hopf;
pub mod io;
pub mod matrix;
pub mod nc;

pub use error::{Error, Result};
