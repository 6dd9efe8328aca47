//! Exact arithmetic: rationals, cyclotomic fields, the quadratic ring that
//! carries `q`, and certified complex embeddings.

pub mod cyclo;
pub mod interval;
pub mod poly;
pub mod rational;
pub mod roots;

pub use cyclo::CycloNumber;
pub use interval::{certified_sign, embed, ComplexInterval, Interval, Sign};
pub use poly::{cyclotomic_polynomial, totient};
pub use rational::Rational;
pub use roots::{is_root_of_unity, q_class, root_of_unity_candidates, QClass, QuadRingElement};
