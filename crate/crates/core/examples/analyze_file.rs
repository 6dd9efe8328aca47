//! Reads a form from a JSON document and prints the full report.
//!
//! `cargo run --example analyze_file -- path/to/form.json`

use bilinear_hopf::hopf::{BEPresentation, DEFAULT_MAX_K};
use bilinear_hopf::io::{parse_matrix, Report};
use serde_json::json;

fn main() -> bilinear_hopf::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => {
            std::fs::read_to_string(&path).map_err(|e| bilinear_hopf::Error::Io(e.to_string()))?
        }
        None => r#"{"conductor": 8, "antidiag": ["1", "z", "z^2"]}"#.to_string(),
    };
    let p = BEPresentation::new(parse_matrix(&text)?)?;
    let report = Report {
        input: json!("example"),
        input_label: "example".into(),
        presentation: &p,
        analysis: p.analyze(DEFAULT_MAX_K)?,
        axioms: None,
        invariance: None,
        approx_bits: None,
    };
    print!("{}", report.to_text());
    Ok(())
}
