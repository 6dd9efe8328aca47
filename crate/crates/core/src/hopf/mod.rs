//! B(E) and its structural verdicts.

pub mod axioms;
pub mod corpus;
pub mod presentation;

pub use axioms::{verify_hopf_axioms, verify_hopf_axioms_at, AxiomReport, CheckOutcome};
pub use corpus::{
    golden_cotriangular, golden_root, signed_antidiagonal, six_dim_cyclic, small_cyclic,
    CorpusExample,
};
pub use presentation::{
    make_presentation, AnalysisReport, AntipodeOrder, BEPresentation, CqgVerdict, DEFAULT_MAX_K,
};
